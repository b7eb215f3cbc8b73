//! Reduct transforms (structures definable inside another one after naming
//! finitely many anchor vertices) and finite probes of the extension axioms.

use super::bipartite::{BipartiteGraph, Side};
use super::feq2::Feq2Structure;
use super::hypergraph::Hypergraph;
use super::tournament::Tournament;
use super::StructureError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductKind {
    /// `E(x, y) :⇔ R(x, y, c̄)` for a tuple `c̄` of r-2 distinct anchors.
    HyperToGraph { anchor: Vec<usize> },
    /// `P = {b : a → b}`, `Q = {b : b → a}`, `E(b, c) :⇔ b → c` for `b ∈ P`, `c ∈ Q`.
    TournamentToBipartite { apex: usize },
    /// `P = objects ∖ {a}`, `Q = parameters`, `E(b, z) :⇔ E_z(a, b)`.
    FeqToBipartite { apex: usize },
}

#[derive(Clone, Copy, Debug)]
pub enum ReductInput<'a> {
    Hypergraph(&'a Hypergraph),
    Tournament(&'a Tournament),
    Feq2(&'a Feq2Structure),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduct {
    /// `provenance[i]` is the source vertex behind derived vertex `i`.
    Graph { graph: Hypergraph, provenance: Vec<usize> },
    /// Provenance per part. For the feq transform the right part holds
    /// parameter indices rather than objects.
    Bipartite {
        graph: BipartiteGraph,
        left_provenance: Vec<usize>,
        right_provenance: Vec<usize>,
    },
}

pub fn reduct_transform(kind: &ReductKind, input: ReductInput<'_>) -> Result<Reduct, StructureError> {
    match (kind, input) {
        (ReductKind::HyperToGraph { anchor }, ReductInput::Hypergraph(h)) => hyper_to_graph(h, anchor),
        (ReductKind::TournamentToBipartite { apex }, ReductInput::Tournament(t)) => tournament_to_bipartite(t, *apex),
        (ReductKind::FeqToBipartite { apex }, ReductInput::Feq2(f)) => feq_to_bipartite(f, *apex),
        (kind, _) => Err(StructureError::InvalidAnchor(format!(
            "{kind:?} does not apply to this structure"
        ))),
    }
}

fn hyper_to_graph(h: &Hypergraph, anchor: &[usize]) -> Result<Reduct, StructureError> {
    let r = h.arity();
    if anchor.len() != r - 2 {
        return Err(StructureError::InvalidAnchor(format!(
            "arity {r} needs {} anchor vertices, got {}",
            r - 2,
            anchor.len()
        )));
    }
    let mut sorted = anchor.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.iter().any(|&c| c >= h.vertex_count()) {
        return Err(StructureError::InvalidAnchor(format!(
            "anchor {anchor:?} is not a set of vertices"
        )));
    }
    let provenance: Vec<usize> = (0..h.vertex_count()).filter(|v| !anchor.contains(v)).collect();
    let mut graph = Hypergraph::empty(2, provenance.len())?;
    let mut tuple = anchor.to_vec();
    for i in 0..provenance.len() {
        for j in i + 1..provenance.len() {
            tuple.truncate(anchor.len());
            tuple.extend([provenance[i], provenance[j]]);
            if h.has_edge(&tuple) {
                graph.insert_edge(vec![i, j]);
            }
        }
    }
    Ok(Reduct::Graph { graph, provenance })
}

fn tournament_to_bipartite(t: &Tournament, apex: usize) -> Result<Reduct, StructureError> {
    if apex >= t.vertex_count() {
        return Err(StructureError::InvalidAnchor(format!("apex {apex} is not a vertex")));
    }
    let left: Vec<usize> = (0..t.vertex_count()).filter(|&b| t.has_arc(apex, b)).collect();
    let right: Vec<usize> = (0..t.vertex_count()).filter(|&b| t.has_arc(b, apex)).collect();
    let mut edges = Vec::new();
    for (i, &b) in left.iter().enumerate() {
        for (j, &c) in right.iter().enumerate() {
            if t.has_arc(b, c) {
                edges.push((i, j));
            }
        }
    }
    Ok(Reduct::Bipartite {
        graph: BipartiteGraph::new(left.len(), right.len(), &edges)?,
        left_provenance: left,
        right_provenance: right,
    })
}

fn feq_to_bipartite(f: &Feq2Structure, apex: usize) -> Result<Reduct, StructureError> {
    if apex >= f.objects() {
        return Err(StructureError::InvalidAnchor(format!("apex {apex} is not an object")));
    }
    let left: Vec<usize> = (0..f.objects()).filter(|&o| o != apex).collect();
    let right: Vec<usize> = (0..f.parameters()).collect();
    let mut edges = Vec::new();
    for (i, &b) in left.iter().enumerate() {
        for &z in &right {
            if f.same_class(z, apex, b) {
                edges.push((i, z));
            }
        }
    }
    Ok(Reduct::Bipartite {
        graph: BipartiteGraph::new(left.len(), right.len(), &edges)?,
        left_provenance: left,
        right_provenance: right,
    })
}

#[derive(Clone, Copy, Debug)]
pub enum ProbeHost<'a> {
    Graph(&'a Hypergraph),
    /// `A` and `B̄` are vertices on `side`; the witness comes from the other part.
    Bipartite {
        graph: &'a BipartiteGraph,
        side: Side,
    },
}

/// Scans for a vertex adjacent to everything in `adjacent` and nothing in
/// `non_adjacent`. `Ok(None)` means the finite host has no such vertex.
pub fn extension_probe(
    host: ProbeHost<'_>,
    adjacent: &[usize],
    non_adjacent: &[usize],
) -> Result<Option<usize>, StructureError> {
    if let Some(&v) = adjacent.iter().find(|v| non_adjacent.contains(v)) {
        return Err(StructureError::NotDisjoint(v));
    }
    match host {
        ProbeHost::Graph(g) => {
            if g.arity() != 2 {
                return Err(StructureError::ArityMismatch {
                    expected: 2,
                    found: g.arity(),
                });
            }
            for &v in adjacent.iter().chain(non_adjacent) {
                if v >= g.vertex_count() {
                    return Err(StructureError::VertexOutOfRange {
                        vertex: v,
                        vertex_count: g.vertex_count(),
                    });
                }
            }
            Ok((0..g.vertex_count()).find(|&c| {
                !adjacent.contains(&c)
                    && !non_adjacent.contains(&c)
                    && adjacent.iter().all(|&a| g.adjacent(a, c))
                    && non_adjacent.iter().all(|&b| !g.adjacent(b, c))
            }))
        }
        ProbeHost::Bipartite { graph, side } => {
            for &v in adjacent.iter().chain(non_adjacent) {
                if v >= graph.part_size(side) {
                    return Err(StructureError::VertexOutOfRange {
                        vertex: v,
                        vertex_count: graph.part_size(side),
                    });
                }
            }
            Ok((0..graph.part_size(side.opposite())).find(|&c| {
                adjacent.iter().all(|&a| graph.adjacent_across(side, a, c))
                    && non_adjacent.iter().all(|&b| !graph.adjacent_across(side, b, c))
            }))
        }
    }
}
