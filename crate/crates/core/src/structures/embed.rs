//! Induced-substructure embedding search.

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::hypergraph::Hypergraph;
use super::StructureError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EmbedOutcome {
    /// `mapping[g]` is the host vertex assigned to pattern vertex `g`.
    Found { mapping: Vec<usize> },
    /// The search space was exhausted: no induced copy exists.
    Absent,
    /// The node budget ran out first; absence is not proven.
    Exhausted { nodes: u64 },
}

impl EmbedOutcome {
    pub fn mapping(&self) -> Option<&[usize]> {
        match self {
            EmbedOutcome::Found { mapping } => Some(mapping),
            _ => None,
        }
    }
}

/// Backtracking search for an induced embedding of `pattern` into `host`.
///
/// Pattern vertices are placed in a connectivity-first order (each next vertex
/// has the most already-placed neighbours), and every placement is checked
/// against all placed vertices, edges and non-edges alike.
pub fn embed_search(pattern: &Hypergraph, host: &Hypergraph, budget: u64) -> Result<EmbedOutcome, StructureError> {
    if pattern.arity() != host.arity() {
        return Err(StructureError::ArityMismatch {
            expected: host.arity(),
            found: pattern.arity(),
        });
    }
    let order = placement_order(pattern);
    let mut search = Embedder {
        pattern,
        host,
        order,
        mapping: vec![usize::MAX; pattern.vertex_count()],
        used: FixedBitSet::with_capacity(host.vertex_count()),
        nodes: 0,
        budget,
    };
    if search.place(0) {
        Ok(EmbedOutcome::Found {
            mapping: search.mapping,
        })
    } else if search.nodes > budget {
        Ok(EmbedOutcome::Exhausted { nodes: search.nodes })
    } else {
        Ok(EmbedOutcome::Absent)
    }
}

/// True iff `mapping` is injective, in range, and preserves edges and
/// non-edges of `pattern` exactly.
pub fn is_induced_embedding(pattern: &Hypergraph, host: &Hypergraph, mapping: &[usize]) -> bool {
    if mapping.len() != pattern.vertex_count() || pattern.arity() != host.arity() {
        return false;
    }
    if mapping.iter().any(|&h| h >= host.vertex_count()) || !mapping.iter().all_unique() {
        return false;
    }
    (0..pattern.vertex_count()).combinations(pattern.arity()).all(|set| {
        let image: Vec<usize> = set.iter().map(|&g| mapping[g]).collect();
        pattern.has_edge(&set) == host.has_edge(&image)
    })
}

fn placement_order(pattern: &Hypergraph) -> Vec<usize> {
    let n = pattern.vertex_count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let links = |v: usize, order: &[usize]| -> usize {
        if pattern.arity() == 2 {
            order.iter().filter(|&&u| pattern.adjacent(u, v)).count()
        } else {
            0
        }
    };
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links(v, &order), pattern.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Embedder<'a> {
    pattern: &'a Hypergraph,
    host: &'a Hypergraph,
    order: Vec<usize>,
    mapping: Vec<usize>,
    used: FixedBitSet,
    nodes: u64,
    budget: u64,
}

impl Embedder<'_> {
    fn place(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        let g = self.order[depth];
        for h in self.candidates(depth) {
            if self.pattern.arity() > 2 && !self.consistent(depth, g, h) {
                continue;
            }
            self.mapping[g] = h;
            self.used.insert(h);
            if self.place(depth + 1) {
                return true;
            }
            self.used.set(h, false);
            self.mapping[g] = usize::MAX;
            if self.nodes > self.budget {
                return false;
            }
        }
        false
    }

    fn candidates(&self, depth: usize) -> Vec<usize> {
        let mut cand = FixedBitSet::with_capacity(self.host.vertex_count());
        cand.insert_range(..);
        cand.difference_with(&self.used);
        if self.pattern.arity() == 2 {
            let g = self.order[depth];
            for &prev in &self.order[..depth] {
                let image = self.host.neighbors(self.mapping[prev]);
                if self.pattern.adjacent(g, prev) {
                    cand.intersect_with(image);
                } else {
                    cand.difference_with(image);
                }
            }
        }
        cand.ones().collect()
    }

    /// Hypergraph case: every r-set through `g` among placed vertices must map
    /// edge-to-edge and non-edge-to-non-edge.
    fn consistent(&self, depth: usize, g: usize, h: usize) -> bool {
        let r = self.pattern.arity();
        let placed = &self.order[..depth];
        placed.iter().copied().combinations(r - 1).all(|rest| {
            let mut set = rest.clone();
            set.push(g);
            let mut image: Vec<usize> = rest.iter().map(|&u| self.mapping[u]).collect();
            image.push(h);
            self.pattern.has_edge(&set) == self.host.has_edge(&image)
        })
    }
}
