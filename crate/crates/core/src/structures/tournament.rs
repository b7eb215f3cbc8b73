use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::StructureError;

/// A tournament on `0..n`: every pair of distinct vertices carries exactly one
/// arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tournament {
    vertex_count: usize,
    out: Vec<FixedBitSet>,
}

impl Tournament {
    pub fn new(vertex_count: usize, arcs: &[(usize, usize)]) -> Result<Self, StructureError> {
        let mut out = vec![FixedBitSet::with_capacity(vertex_count); vertex_count];
        for &(u, v) in arcs {
            if u >= vertex_count || v >= vertex_count {
                return Err(StructureError::VertexOutOfRange {
                    vertex: u.max(v),
                    vertex_count,
                });
            }
            if u == v {
                return Err(StructureError::InvalidTournament(format!("loop at {u}")));
            }
            if out[u].contains(v) || out[v].contains(u) {
                return Err(StructureError::InvalidTournament(format!(
                    "pair {{{u},{v}}} oriented twice"
                )));
            }
            out[u].insert(v);
        }
        let arc_count: usize = out.iter().map(|row| row.count_ones(..)).sum();
        let pairs = vertex_count * vertex_count.saturating_sub(1) / 2;
        if arc_count != pairs {
            return Err(StructureError::InvalidTournament(format!(
                "{arc_count} arcs for {pairs} vertex pairs"
            )));
        }
        Ok(Self { vertex_count, out })
    }

    /// Uniformly random orientation of every pair.
    pub fn random(vertex_count: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = vec![FixedBitSet::with_capacity(vertex_count); vertex_count];
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                if rng.gen_bool(0.5) {
                    out[u].insert(v);
                } else {
                    out[v].insert(u);
                }
            }
        }
        Self { vertex_count, out }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Arc `u → v`.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && v < self.vertex_count && self.out[u].contains(v)
    }

    /// Arcs in lexicographic order of (tail, head).
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count)
            .flat_map(|u| self.out[u].ones().map(move |v| (u, v)))
            .collect()
    }
}
