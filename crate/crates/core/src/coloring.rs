//! Weighted r-uniform hypergraphs and r-colorings that split many edges.
//!
//! A coloring `χ: V → {0, …, r−1}` splits an edge when its vertices get
//! pairwise distinct colors; `w(χ)` is the total weight of split edges. A
//! uniformly random coloring splits each edge with probability `r!/r^r`, so
//! some coloring reaches `(r!/r^r)·w(V)`. [`greedy_coloring`] finds one
//! deterministically by the method of conditional expectations.

use std::collections::BTreeMap;
use std::path::Path;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::rational::{self, factorial, from_int, pow, ratio, Rational};

pub const DEFAULT_BRUTE_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("arity must be between 2 and 64, got {0}")]
    InvalidArity(usize),
    #[error("edge {0:?} is not an r-set of vertices")]
    InvalidEdge(Vec<usize>),
    #[error("edge {0:?} listed twice")]
    DuplicateEdge(Vec<usize>),
    #[error("negative weight on {0:?}")]
    NegativeWeight(Vec<usize>),
    #[error("coloring covers {found} of {expected} vertices")]
    PartialColoring { expected: usize, found: usize },
    #[error("color {color} at vertex {vertex} is not below {r}")]
    InvalidColor { vertex: usize, color: usize, r: usize },
    #[error("{n} vertices exceed the enumeration cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("invalid weighted hypergraph file: {0}")]
    Format(String),
}

/// `H = (V, w)` with `w` supported on sorted r-subsets of `V = 0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedHypergraph {
    n: usize,
    r: usize,
    weights: BTreeMap<Vec<usize>, Rational>,
    total: Rational,
}

/// Colors are `0..r`, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring(pub Vec<usize>);

impl WeightedHypergraph {
    /// Edges may be listed in any vertex order; zero weights are dropped.
    pub fn new(
        n: usize,
        r: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Rational)>,
    ) -> Result<Self, ColoringError> {
        if !(2..=64).contains(&r) {
            return Err(ColoringError::InvalidArity(r));
        }
        let mut weights = BTreeMap::new();
        for (mut edge, w) in entries {
            edge.sort_unstable();
            if edge.len() != r || edge.windows(2).any(|p| p[0] == p[1]) || edge.iter().any(|&v| v >= n) {
                return Err(ColoringError::InvalidEdge(edge));
            }
            if w.is_negative() {
                return Err(ColoringError::NegativeWeight(edge));
            }
            if weights.contains_key(&edge) {
                return Err(ColoringError::DuplicateEdge(edge));
            }
            if !w.is_zero() {
                weights.insert(edge, w);
            }
        }
        let total = weights.values().sum();
        Ok(Self { n, r, weights, total })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.r
    }

    pub fn weights(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.weights
    }

    /// `w(V)`
    pub fn total_weight(&self) -> &Rational {
        &self.total
    }

    /// `{"n":…,"r":…,"weights":[[[v1,…,vr],{"num":a,"den":b}],…]}`
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .weights
            .iter()
            .map(|(e, w)| json!([e, rational::to_json(w)]))
            .collect();
        json!({"n": self.n, "r": self.r, "weights": rows})
    }

    pub fn from_json(value: &Value) -> Result<Self, ColoringError> {
        let bad = |msg: &str| ColoringError::Format(msg.to_string());
        let field = |name: &str| {
            value
                .get(name)
                .and_then(Value::as_u64)
                .map(|v| v as usize)
                .ok_or_else(|| bad(&format!("missing integer field \"{name}\"")))
        };
        let (n, r) = (field("n")?, field("r")?);
        let rows = value
            .get("weights")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array field \"weights\""))?;
        let mut entries = Vec::with_capacity(rows.len());
        for row in rows {
            let pair = row
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| bad("weight rows are [edge, weight]"))?;
            let edge: Vec<usize> =
                serde_json::from_value(pair[0].clone()).map_err(|e| ColoringError::Format(e.to_string()))?;
            let w = rational::from_json(&pair[1]).map_err(ColoringError::Format)?;
            entries.push((edge, w));
        }
        Self::new(n, r, entries)
    }

    pub fn load(path: &Path) -> Result<Self, ColoringError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| ColoringError::Format(format!("{}: {e}", path.display())))?;
        let value: Value = serde_json::from_str(&text).map_err(|e| ColoringError::Format(e.to_string()))?;
        Self::from_json(&value)
    }

    /// Every r-subset gets weight `k/den` with `k` uniform in `0..=max_num`.
    pub fn random(n: usize, r: usize, max_num: i64, den: i64, rng: &mut impl Rng) -> Self {
        let entries: Vec<(Vec<usize>, Rational)> = (0..n)
            .combinations(r)
            .map(|s| (s, ratio(rng.gen_range(0..=max_num), den)))
            .collect();
        Self::new(n, r, entries).expect("subsets are valid edges")
    }
}

fn check_coloring(h: &WeightedHypergraph, chi: &Coloring) -> Result<(), ColoringError> {
    if chi.0.len() != h.n {
        return Err(ColoringError::PartialColoring {
            expected: h.n,
            found: chi.0.len(),
        });
    }
    if let Some((vertex, &color)) = chi.0.iter().enumerate().find(|(_, &c)| c >= h.r) {
        return Err(ColoringError::InvalidColor { vertex, color, r: h.r });
    }
    Ok(())
}

fn splits(edge: &[usize], colors: &[usize]) -> bool {
    let mut seen = 0u64;
    edge.iter().all(|&v| {
        let bit = 1u64 << colors[v];
        let fresh = seen & bit == 0;
        seen |= bit;
        fresh
    })
}

/// `w(χ)`: total weight of the edges `χ` splits.
pub fn weight_of(h: &WeightedHypergraph, chi: &Coloring) -> Result<Rational, ColoringError> {
    check_coloring(h, chi)?;
    Ok(h.weights
        .iter()
        .filter(|(e, _)| splits(e, &chi.0))
        .map(|(_, w)| w)
        .sum())
}

/// `(r!/r^r)·w(V)`.
pub fn guarantee_value(h: &WeightedHypergraph) -> Rational {
    factorial(h.r) / pow(&from_int(h.r as i64), h.r as i32) * &h.total
}

/// Probability that a uniformly random completion of `partial` splits `edge`.
fn split_probability(edge: &[usize], partial: &[Option<usize>], r: usize) -> Rational {
    let mut used = 0u64;
    let mut uncolored = 0usize;
    for &v in edge {
        match partial[v] {
            Some(c) => {
                if used & (1 << c) != 0 {
                    return Rational::zero();
                }
                used |= 1 << c;
            }
            None => uncolored += 1,
        }
    }
    let d = used.count_ones() as usize;
    if uncolored > r - d {
        return Rational::zero();
    }
    // (r−d)!/(r−d−u)! ordered ways to give the free vertices unused colors.
    let falling: BigInt = ((r - d - uncolored + 1)..=(r - d)).map(BigInt::from).product();
    Rational::new(falling, BigInt::from(r).pow(uncolored as u32))
}

/// Conditional expectation of `w(χ)` given the colored prefix.
pub fn conditional_expectation(h: &WeightedHypergraph, partial: &[Option<usize>]) -> Rational {
    h.weights
        .iter()
        .map(|(e, w)| w * split_probability(e, partial, h.r))
        .sum()
}

/// Colors vertices in increasing order, each with the color maximizing the
/// conditional expectation (smallest color on ties), and returns the
/// expectation after each step; entry 0 is the unconditional mean.
pub fn greedy_coloring_traced(h: &WeightedHypergraph) -> (Coloring, Vec<Rational>) {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.n];
    let edges: Vec<(&Vec<usize>, &Rational)> = h.weights.iter().collect();
    for (i, (e, _)) in edges.iter().enumerate() {
        for &v in e.iter() {
            incident[v].push(i);
        }
    }
    let mut partial: Vec<Option<usize>> = vec![None; h.n];
    let mut trace = vec![conditional_expectation(h, &partial)];
    let mut current = trace[0].clone();
    for v in 0..h.n {
        let before: Rational = incident[v]
            .iter()
            .map(|&i| edges[i].1 * split_probability(edges[i].0, &partial, h.r))
            .sum();
        let mut best: Option<(Rational, usize)> = None;
        for c in 0..h.r {
            partial[v] = Some(c);
            let local: Rational = incident[v]
                .iter()
                .map(|&i| edges[i].1 * split_probability(edges[i].0, &partial, h.r))
                .sum();
            if best.as_ref().is_none_or(|(b, _)| local > *b) {
                best = Some((local, c));
            }
        }
        let (local, c) = best.expect("r >= 2 colors");
        partial[v] = Some(c);
        current = current - &before + local;
        trace.push(current.clone());
    }
    let chi = Coloring(partial.into_iter().map(|c| c.expect("all vertices colored")).collect());
    (chi, trace)
}

/// Deterministic coloring with `w(χ) ≥ (r!/r^r)·w(V)`.
pub fn greedy_coloring(h: &WeightedHypergraph) -> Coloring {
    greedy_coloring_traced(h).0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteResult {
    /// Lexicographically first coloring of maximum weight.
    pub best: Coloring,
    pub best_value: Rational,
    /// Mean of `w(χ)` over all `r^n` colorings.
    pub average: Rational,
}

/// Enumerates all `r^n` colorings, vertex 0 varying slowest.
pub fn brute_best(h: &WeightedHypergraph, cap: usize) -> Result<BruteResult, ColoringError> {
    if h.n > cap {
        return Err(ColoringError::TooLarge { n: h.n, cap });
    }
    // Integer weights over a common denominator keep the inner loop cheap.
    let den = h
        .weights
        .values()
        .fold(BigInt::one(), |acc, w| num_integer::Integer::lcm(&acc, w.denom()));
    let scaled: Option<Vec<i128>> = h
        .weights
        .values()
        .map(|w| (w * Rational::from_integer(den.clone())).to_integer().to_i128())
        .collect();
    let fits = scaled
        .as_ref()
        .and_then(|s| s.iter().try_fold(0i128, |acc, &x| acc.checked_add(x)))
        .and_then(|t| t.checked_mul((h.r as i128).checked_pow(h.n as u32)?))
        .is_some();
    let edges: Vec<&Vec<usize>> = h.weights.keys().collect();
    let mut colors = vec![0usize; h.n];
    let total_colorings = (h.r as u128).pow(h.n as u32);

    if let (true, Some(scaled)) = (fits, scaled) {
        let mut best = (-1i128, Vec::new());
        let mut sum = 0i128;
        for _ in 0..total_colorings {
            let value: i128 = edges
                .iter()
                .zip(&scaled)
                .filter(|(e, _)| splits(e, &colors))
                .map(|(_, &w)| w)
                .sum();
            sum += value;
            if value > best.0 {
                best = (value, colors.clone());
            }
            advance(&mut colors, h.r);
        }
        let den = Rational::from_integer(den);
        return Ok(BruteResult {
            best: Coloring(best.1),
            best_value: from_int(best.0) / &den,
            average: from_int(sum) / (den * from_int(BigInt::from(total_colorings))),
        });
    }

    let mut best: Option<(Rational, Vec<usize>)> = None;
    let mut sum = Rational::zero();
    for _ in 0..total_colorings {
        let value = weight_of(h, &Coloring(colors.clone()))?;
        sum += &value;
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, colors.clone()));
        }
        advance(&mut colors, h.r);
    }
    let (best_value, best) = best.expect("at least one coloring");
    Ok(BruteResult {
        best: Coloring(best),
        best_value,
        average: sum / from_int(BigInt::from(total_colorings)),
    })
}

/// Next coloring in lexicographic order (last vertex fastest).
fn advance(colors: &mut [usize], r: usize) {
    for c in colors.iter_mut().rev() {
        *c += 1;
        if *c < r {
            return;
        }
        *c = 0;
    }
}
