//! Finite relational structures: r-uniform hypergraphs and their K^r_s-free
//! generators, tournaments, parameterized equivalence structures, bipartite
//! graphs, and the reduct transforms between them.

mod alpha;
mod bipartite;
mod clique;
mod embed;
mod extend;
mod feq2;
mod generate;
mod hypergraph;
mod io;
mod reduct;
mod tournament;

use thiserror::Error;

pub use alpha::{alpha_s, AlphaOutcome, DEFAULT_ALPHA_BUDGET};
pub use bipartite::{BipartiteGraph, Side};
pub use clique::is_free;
pub use embed::{embed_search, is_induced_embedding, EmbedOutcome};
pub use extend::add_vertex_with_links;
pub use feq2::{path_from_index, Feq2Structure};
pub use generate::{
    cyclic_graph, is_maximal_free, random_maximal_free, search_small_alpha, SmallAlphaOutcome, SmallAlphaSearch,
};
pub use hypergraph::Hypergraph;
pub use io::{AnyStructure, StructureFile};
pub use reduct::{extension_probe, reduct_transform, ProbeHost, Reduct, ReductInput, ReductKind};
pub use tournament::Tournament;

use crate::logic::RelSymbol;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("arity must be at least 2, got {0}")]
    InvalidArity(usize),
    #[error("expected {expected}-element tuple, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} out of range (n = {vertex_count})")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("repeated vertex in {0:?}")]
    RepeatedVertex(Vec<usize>),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("edge {0:?} is not sorted ascending")]
    UnsortedEdge(Vec<usize>),
    #[error("forbidden clique size s = {s} must exceed the arity {arity}")]
    ForbiddenSizeTooSmall { s: usize, arity: usize },
    #[error("extension creates a complete sub-hypergraph on {witness:?}")]
    FreenessViolation { witness: Vec<usize> },
    #[error("link {0:?} is not an (r-1)-set of existing vertices")]
    InvalidLink(Vec<usize>),
    #[error("connection difference {difference} outside 1..={}", n / 2)]
    InvalidConnection { difference: usize, n: usize },
    #[error("invalid anchor: {0}")]
    InvalidAnchor(String),
    #[error("vertex {0} is in both the adjacent and the non-adjacent set")]
    NotDisjoint(usize),
    #[error("invalid tournament: {0}")]
    InvalidTournament(String),
    #[error("invalid feq2 structure: {0}")]
    InvalidFeq2(String),
    #[error("invalid structure file: {0}")]
    Format(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HoldsError {
    #[error("relation {symbol} takes {expected} arguments in this structure, got {found}")]
    Arity {
        symbol: RelSymbol,
        expected: usize,
        found: usize,
    },
    #[error("relation {0} is not in this structure's signature")]
    UnknownSymbol(RelSymbol),
    #[error("element {element} out of range ({size} available)")]
    OutOfRange { element: usize, size: usize },
}

/// A finite structure that quantifier-free formulas can be evaluated in.
pub trait Structure: Sync {
    /// Number of elements formula variables range over.
    fn universe_size(&self) -> usize;

    fn holds(&self, symbol: RelSymbol, args: &[usize]) -> Result<bool, HoldsError>;

    /// Content digest (hex SHA-256 of the canonical JSON form).
    fn fingerprint(&self) -> String;
}

fn check_range(args: &[usize], size: usize) -> Result<(), HoldsError> {
    match args.iter().find(|&&a| a >= size) {
        Some(&element) => Err(HoldsError::OutOfRange { element, size }),
        None => Ok(()),
    }
}

/// `E` and `R` both name the edge relation; tuples with repeated entries
/// are never edges.
impl Structure for Hypergraph {
    fn universe_size(&self) -> usize {
        self.vertex_count()
    }

    fn holds(&self, symbol: RelSymbol, args: &[usize]) -> Result<bool, HoldsError> {
        if args.len() != self.arity() {
            return Err(HoldsError::Arity {
                symbol,
                expected: self.arity(),
                found: args.len(),
            });
        }
        check_range(args, self.vertex_count())?;
        Ok(self.has_edge(args))
    }

    fn fingerprint(&self) -> String {
        StructureFile::from(self).digest()
    }
}

/// `R(u, v)` (or `E(u, v)`) is the arc `u → v`.
impl Structure for Tournament {
    fn universe_size(&self) -> usize {
        self.vertex_count()
    }

    fn holds(&self, symbol: RelSymbol, args: &[usize]) -> Result<bool, HoldsError> {
        if args.len() != 2 {
            return Err(HoldsError::Arity {
                symbol,
                expected: 2,
                found: args.len(),
            });
        }
        check_range(args, self.vertex_count())?;
        Ok(self.has_arc(args[0], args[1]))
    }

    fn fingerprint(&self) -> String {
        StructureFile::from(self).digest()
    }
}

/// `E(a, b, z)` reads `E_z(a, b)`: the first two arguments are objects, the
/// third a parameter. Variables range over the larger of the two sorts; the
/// argument position decides which sort an index refers to.
impl Structure for Feq2Structure {
    fn universe_size(&self) -> usize {
        self.objects().max(self.parameters())
    }

    fn holds(&self, symbol: RelSymbol, args: &[usize]) -> Result<bool, HoldsError> {
        if symbol != RelSymbol::E {
            return Err(HoldsError::UnknownSymbol(symbol));
        }
        let &[a, b, z] = args else {
            return Err(HoldsError::Arity {
                symbol,
                expected: 3,
                found: args.len(),
            });
        };
        check_range(&[a, b], self.objects())?;
        check_range(&[z], self.parameters())?;
        Ok(self.same_class(z, a, b))
    }

    fn fingerprint(&self) -> String {
        StructureFile::from(self).digest()
    }
}

/// Vertices `0..left` are the part `P`, `left..left+right` the part `Q`;
/// `E` is the symmetric crossing relation.
impl Structure for BipartiteGraph {
    fn universe_size(&self) -> usize {
        self.left() + self.right()
    }

    fn holds(&self, symbol: RelSymbol, args: &[usize]) -> Result<bool, HoldsError> {
        let &[u, v] = args else {
            return Err(HoldsError::Arity {
                symbol,
                expected: 2,
                found: args.len(),
            });
        };
        check_range(args, self.universe_size())?;
        let l = self.left();
        Ok(match (u < l, v < l) {
            (true, false) => self.has_edge(u, v - l),
            (false, true) => self.has_edge(v, u - l),
            _ => false,
        })
    }

    fn fingerprint(&self) -> String {
        use sha2::{Digest, Sha256};
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let text = serde_json::json!({"kind": "bipartite", "left": self.left(), "right": self.right(), "edges": edges});
        hex::encode(Sha256::digest(text.to_string().as_bytes()))
    }
}
