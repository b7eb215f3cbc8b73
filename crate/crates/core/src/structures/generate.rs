//! Seeded generators for K^r_s-free structures.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::alpha::{alpha_s, AlphaOutcome};
use super::clique::check_forbidden_size;
use super::hypergraph::Hypergraph;
use super::StructureError;

/// Inserts every r-subset of `0..n` in a seeded random order, keeping each one
/// iff no K^r_s appears. The result is maximal K^r_s-free.
pub fn random_maximal_free(n: usize, r: usize, s: usize, seed: u64) -> Result<Hypergraph, StructureError> {
    let mut graph = Hypergraph::empty(r, n)?;
    check_forbidden_size(&graph, s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Vec<usize>> = (0..n).combinations(r).collect();
    candidates.shuffle(&mut rng);
    saturate(&mut graph, candidates, s);
    Ok(graph)
}

/// Adds each candidate edge in order unless it completes a K^r_s.
pub(crate) fn saturate(graph: &mut Hypergraph, candidates: Vec<Vec<usize>>, s: usize) {
    for edge in candidates {
        if !graph.insert_edge(edge.clone()) {
            continue;
        }
        if graph.find_clique_through(&edge, s).is_some() {
            graph.remove_edge(&edge);
        }
    }
}

/// True iff adding any missing r-set would create a K^r_s.
pub fn is_maximal_free(graph: &Hypergraph, s: usize) -> Result<bool, StructureError> {
    check_forbidden_size(graph, s)?;
    let mut probe = graph.clone();
    for edge in graph.non_edges() {
        probe.insert_edge(edge.clone());
        let blocked = probe.find_clique_through(&edge, s).is_some();
        probe.remove_edge(&edge);
        if !blocked {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Circulant graph on `Z_n`: `i ~ j` iff `±(i - j) mod n` lies in the
/// connection set, which must be drawn from `1..=n/2`.
pub fn cyclic_graph(n: usize, connection_set: &[usize]) -> Result<Hypergraph, StructureError> {
    if let Some(&d) = connection_set.iter().find(|&&d| d == 0 || d > n / 2) {
        return Err(StructureError::InvalidConnection { difference: d, n });
    }
    let mut graph = Hypergraph::empty(2, n)?;
    for i in 0..n {
        for &d in connection_set {
            let j = (i + d) % n;
            let mut edge = vec![i, j];
            edge.sort_unstable();
            graph.insert_edge(edge);
        }
    }
    Ok(graph)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallAlphaSearch {
    pub n: usize,
    pub s: usize,
    pub target: usize,
    /// Number of candidate graphs whose α_s is evaluated.
    pub budget: u64,
    pub seed: u64,
    /// Node budget per α_s evaluation.
    pub alpha_budget: u64,
}

impl SmallAlphaSearch {
    pub fn new(n: usize, s: usize, target: usize, budget: u64, seed: u64) -> Self {
        Self {
            n,
            s,
            target,
            budget,
            seed,
            alpha_budget: 2_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmallAlphaOutcome {
    Found {
        graph: Hypergraph,
        alpha: usize,
        /// `circulant:n:d1,d2,...` or `local-search`.
        origin: String,
        evaluations: u64,
    },
    NotFound {
        best_alpha: Option<usize>,
        best_graph: Option<Hypergraph>,
        evaluations: u64,
    },
}

struct Tracker {
    target: usize,
    evaluations: u64,
    best: Option<(usize, Hypergraph, String)>,
}

impl Tracker {
    /// Scores a K_s-free graph; returns its exact α_s if certified.
    fn score(
        &mut self,
        graph: &Hypergraph,
        config: &SmallAlphaSearch,
        origin: impl FnOnce() -> String,
    ) -> Option<usize> {
        self.evaluations += 1;
        let alpha = match alpha_s(graph, config.s, config.alpha_budget).ok()? {
            AlphaOutcome::Exact { value, .. } => value,
            AlphaOutcome::Exhausted { .. } => return None,
        };
        if self.best.as_ref().is_none_or(|(best, _, _)| alpha < *best) {
            self.best = Some((alpha, graph.clone(), origin()));
        }
        Some(alpha)
    }

    fn done(&self) -> bool {
        self.best.as_ref().is_some_and(|(a, _, _)| *a <= self.target)
    }
}

/// Looks for a K_s-free graph on `n` vertices with α_s at most `target`.
///
/// Circulant graphs are tried first (all connection sets when `n/2 ≤ 12`,
/// otherwise a seeded sample), then seeded local search from random maximal
/// K_s-free graphs: drop a random edge, refill greedily with other non-edges
/// that keep the graph K_s-free, keep the move unless α_s got worse. `budget`
/// caps the number of α_s evaluations across both phases.
pub fn search_small_alpha(config: &SmallAlphaSearch) -> Result<SmallAlphaOutcome, StructureError> {
    let SmallAlphaSearch { n, s, budget, .. } = *config;
    if s < 3 {
        return Err(StructureError::ForbiddenSizeTooSmall { s, arity: 2 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut tracker = Tracker {
        target: config.target,
        evaluations: 0,
        best: None,
    };

    let half = n / 2;
    let masks: Vec<u64> = if half <= 12 {
        (0..1u64 << half).collect()
    } else {
        (0..4096)
            .map(|_| rng.gen::<u64>() & ((1u64 << half.min(63)) - 1))
            .collect()
    };
    for mask in masks {
        if tracker.evaluations >= budget || tracker.done() {
            break;
        }
        let connections: Vec<usize> = (1..=half).filter(|d| mask >> (d - 1) & 1 == 1).collect();
        let graph = cyclic_graph(n, &connections)?;
        if graph.find_clique(s).is_some() {
            continue;
        }
        tracker.score(&graph, config, || {
            format!("circulant:{n}:{}", connections.iter().join(","))
        });
    }

    while tracker.evaluations < budget && !tracker.done() {
        let mut current = random_maximal_free(n, 2, s, rng.gen())?;
        let Some(mut current_alpha) = tracker.score(&current, config, || "local-search".into()) else {
            continue;
        };
        let mut stale = 0;
        while tracker.evaluations < budget && !tracker.done() && stale < 4 * n.max(1) {
            let edges = current.sorted_edges();
            let Some(drop) = edges.choose(&mut rng).cloned() else {
                break;
            };
            let mut candidate = current.clone();
            candidate.remove_edge(&drop);
            let mut refill: Vec<Vec<usize>> = candidate.non_edges().into_iter().filter(|e| *e != drop).collect();
            refill.shuffle(&mut rng);
            super::generate::saturate(&mut candidate, refill, s);
            match tracker.score(&candidate, config, || "local-search".into()) {
                Some(alpha) if alpha <= current_alpha => {
                    stale = if alpha < current_alpha { 0 } else { stale + 1 };
                    current = candidate;
                    current_alpha = alpha;
                }
                _ => stale += 1,
            }
        }
    }

    let evaluations = tracker.evaluations;
    Ok(match tracker.best {
        Some((alpha, graph, origin)) if alpha <= config.target => SmallAlphaOutcome::Found {
            graph,
            alpha,
            origin,
            evaluations,
        },
        best => SmallAlphaOutcome::NotFound {
            best_alpha: best.as_ref().map(|b| b.0),
            best_graph: best.map(|b| b.1),
            evaluations,
        },
    })
}
