//! α_s(G): the largest vertex set of a graph inducing a K_{s-1}-free subgraph.
//!
//! For `s = 3` this is the independence number, computed as a maximum clique of
//! the complement with a greedy-colouring bound. For larger `s` the search
//! branches on include/exclude with a cardinality bound. Both are node
//! budgeted; running out of budget yields [`AlphaOutcome::Exhausted`] with the
//! best set seen, never a guess.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::hypergraph::Hypergraph;
use super::StructureError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AlphaOutcome {
    Exact {
        value: usize,
        witness: Vec<usize>,
    },
    Exhausted {
        lower_bound: usize,
        witness: Vec<usize>,
        nodes: u64,
    },
}

impl AlphaOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            AlphaOutcome::Exact { value, .. } => Some(*value),
            AlphaOutcome::Exhausted { .. } => None,
        }
    }

    pub fn lower_bound(&self) -> usize {
        match self {
            AlphaOutcome::Exact { value, .. } => *value,
            AlphaOutcome::Exhausted { lower_bound, .. } => *lower_bound,
        }
    }

    pub fn witness(&self) -> &[usize] {
        match self {
            AlphaOutcome::Exact { witness, .. } | AlphaOutcome::Exhausted { witness, .. } => witness,
        }
    }
}

/// Default node budget used by callers that do not pick one.
pub const DEFAULT_ALPHA_BUDGET: u64 = 50_000_000;

pub fn alpha_s(graph: &Hypergraph, s: usize, budget: u64) -> Result<AlphaOutcome, StructureError> {
    if graph.arity() != 2 {
        return Err(StructureError::ArityMismatch {
            expected: 2,
            found: graph.arity(),
        });
    }
    if s < 3 {
        return Err(StructureError::ForbiddenSizeTooSmall { s, arity: 2 });
    }
    let n = graph.vertex_count();
    let mut search = Search {
        graph,
        budget,
        nodes: 0,
        best: Vec::new(),
        exhausted: false,
    };
    if s == 3 {
        let complement: Vec<FixedBitSet> = (0..n)
            .map(|v| {
                let mut row = graph.neighbors(v).clone();
                row.toggle_range(..);
                row.set(v, false);
                row
            })
            .collect();
        let mut all = FixedBitSet::with_capacity(n);
        all.insert_range(..);
        search.max_clique(&complement, &mut Vec::new(), all);
    } else {
        let order: Vec<usize> = (0..n).collect();
        search.free_subset(s - 1, &order, 0, &mut Vec::new());
    }
    let mut witness = search.best;
    witness.sort_unstable();
    Ok(if search.exhausted {
        AlphaOutcome::Exhausted {
            lower_bound: witness.len(),
            witness,
            nodes: search.nodes,
        }
    } else {
        AlphaOutcome::Exact {
            value: witness.len(),
            witness,
        }
    })
}

struct Search<'g> {
    graph: &'g Hypergraph,
    budget: u64,
    nodes: u64,
    best: Vec<usize>,
    exhausted: bool,
}

impl Search<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
        }
        !self.exhausted
    }

    /// Maximum clique in `adj` restricted to `candidates`, with greedy colour
    /// classes as the upper bound.
    fn max_clique(&mut self, adj: &[FixedBitSet], current: &mut Vec<usize>, candidates: FixedBitSet) {
        if !self.tick() {
            return;
        }
        if current.len() > self.best.len() {
            self.best = current.clone();
        }
        if candidates.is_clear() {
            return;
        }
        let (order, colors) = greedy_color(adj, &candidates);
        let mut candidates = candidates;
        for idx in (0..order.len()).rev() {
            if current.len() + colors[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            let mut next = candidates.clone();
            next.intersect_with(&adj[v]);
            current.push(v);
            self.max_clique(adj, current, next);
            current.pop();
            if self.exhausted {
                return;
            }
            candidates.set(v, false);
        }
    }

    /// Largest subset of `order[from..]` extending `current` with no clique of
    /// size `forbidden`.
    fn free_subset(&mut self, forbidden: usize, order: &[usize], from: usize, current: &mut Vec<usize>) {
        if !self.tick() {
            return;
        }
        if current.len() > self.best.len() {
            self.best = current.clone();
        }
        if current.len() + (order.len() - from) <= self.best.len() {
            return;
        }
        for i in from..order.len() {
            if current.len() + (order.len() - i) <= self.best.len() {
                return;
            }
            let v = order[i];
            if !self.completes_clique(current, v, forbidden) {
                current.push(v);
                self.free_subset(forbidden, order, i + 1, current);
                current.pop();
                if self.exhausted {
                    return;
                }
            }
        }
    }

    /// Would adding `v` to `set` create a clique of size `size` through `v`?
    fn completes_clique(&self, set: &[usize], v: usize, size: usize) -> bool {
        let neighborhood: Vec<usize> = set.iter().copied().filter(|&u| self.graph.adjacent(u, v)).collect();
        has_clique(self.graph, &neighborhood, size - 1)
    }
}

/// Does `vertices` contain a clique of `size` vertices in `graph`?
fn has_clique(graph: &Hypergraph, vertices: &[usize], size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if vertices.len() < size {
        return false;
    }
    for (i, &v) in vertices.iter().enumerate() {
        if vertices.len() - i < size {
            break;
        }
        let rest: Vec<usize> = vertices[i + 1..]
            .iter()
            .copied()
            .filter(|&u| graph.adjacent(u, v))
            .collect();
        if has_clique(graph, &rest, size - 1) {
            return true;
        }
    }
    false
}

/// Sequential greedy colouring of `candidates`; vertices returned sorted by
/// non-decreasing colour (1-based), so `colors[i]` bounds the clique size among
/// `order[..=i]`.
fn greedy_color(adj: &[FixedBitSet], candidates: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = candidates.clone();
    let mut order = Vec::with_capacity(candidates.count_ones(..));
    let mut colors = Vec::with_capacity(order.capacity());
    let mut color = 0;
    while !uncolored.is_clear() {
        color += 1;
        let mut available = uncolored.clone();
        while let Some(v) = available.ones().next() {
            available.set(v, false);
            available.difference_with(&adj[v]);
            uncolored.set(v, false);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}
