//! Complete sub-hypergraph (K^r_s) search.

use super::hypergraph::{Hypergraph, Key};
use super::StructureError;

/// Binomial coefficient, saturating.
pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Calls `check` on every `k`-subset of `items` (in lexicographic position
/// order) until it returns false. Returns whether all subsets passed.
pub(crate) fn all_subsets(items: &[usize], k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn go(items: &[usize], k: usize, start: usize, buf: &mut Key, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if buf.len() == k {
            return check(buf);
        }
        let need = k - buf.len();
        for i in start..=items.len().saturating_sub(need) {
            if i >= items.len() {
                break;
            }
            buf.push(items[i]);
            let ok = go(items, k, i + 1, buf, check);
            buf.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    if k > items.len() {
        return true;
    }
    go(items, k, 0, &mut Key::new(), check)
}

impl Hypergraph {
    /// True iff `subset ∪ extra` is an edge, for sorted-or-not small inputs.
    fn edge_with(&self, subset: &[usize], extra: &[usize]) -> bool {
        let mut key: Key = subset.iter().chain(extra).copied().collect();
        key.sort_unstable();
        self.has_sorted_edge(&key)
    }

    /// Every r-subset of `vertices` is an edge (vacuous below r vertices).
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        let mut sorted: Key = vertices.iter().copied().collect();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        all_subsets(&sorted, self.arity(), &mut |sub| self.has_sorted_edge(sub))
    }

    /// Can `c` join the clique `clique ∪ {v}` given that it could join `clique`?
    fn still_compatible(&self, clique: &[usize], v: usize, c: usize) -> bool {
        let r = self.arity();
        if clique.len() + 1 < r - 1 {
            return true;
        }
        all_subsets(clique, r - 2, &mut |tau| self.edge_with(tau, &[v, c]))
    }

    fn extend(&self, clique: &mut Vec<usize>, candidates: &[usize], target: usize) -> bool {
        if clique.len() == target {
            return true;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if clique.len() + (candidates.len() - i) < target {
                return false;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&c| self.still_compatible(clique, v, c))
                .collect();
            clique.push(v);
            if self.extend(clique, &next, target) {
                return true;
            }
            clique.pop();
        }
        false
    }

    /// Finds a set of `size` vertices containing `base` whose r-subsets are all
    /// edges. `base` must already be a clique, otherwise `None` is returned.
    pub fn find_clique_through(&self, base: &[usize], size: usize) -> Option<Vec<usize>> {
        if base.len() > size || !self.is_clique(base) {
            return None;
        }
        let r = self.arity();
        let min_degree = binomial(size - 1, r - 1);
        let candidates: Vec<usize> = (0..self.vertex_count())
            .filter(|v| !base.contains(v))
            .filter(|&v| self.degree(v) >= min_degree)
            .filter(|&v| base.len() < r - 1 || all_subsets(base, r - 1, &mut |tau| self.edge_with(tau, &[v])))
            .collect();
        if base.iter().any(|&b| self.degree(b) < min_degree) && size >= r {
            return None;
        }
        let mut clique = base.to_vec();
        if self.extend(&mut clique, &candidates, size) {
            clique.sort_unstable();
            Some(clique)
        } else {
            None
        }
    }

    /// Any K^r_size in the hypergraph, as sorted vertices.
    pub fn find_clique(&self, size: usize) -> Option<Vec<usize>> {
        self.find_clique_through(&[], size)
    }
}

/// True iff `graph` contains no complete r-graph on `s` vertices.
pub fn is_free(graph: &Hypergraph, s: usize) -> Result<bool, StructureError> {
    check_forbidden_size(graph, s)?;
    Ok(graph.find_clique(s).is_none())
}

pub(crate) fn check_forbidden_size(graph: &Hypergraph, s: usize) -> Result<(), StructureError> {
    if s <= graph.arity() {
        return Err(StructureError::ForbiddenSizeTooSmall {
            s,
            arity: graph.arity(),
        });
    }
    Ok(())
}
