//! Uniform approximation error of an average measure against a target.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{FiniteMeasure, MeasureError};
use crate::logic::{
    analyze_phi, to_dnf, Analysis, EvalError, Formula, FragmentError, Literal, PhiPartition, RelSymbol, Term,
};
use crate::rational::{abs_diff, Rational};
use crate::structures::Structure;

/// Exhaustive scans refuse domains with more tuples than this.
pub const MAX_EXHAUSTIVE_DOMAIN: u128 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("parameter domain is empty")]
    EmptyDomain,
    #[error("parameter domain has {0} tuples, more than an exhaustive scan allows")]
    DomainTooLarge(u128),
    #[error("parameter tuple {0:?} does not fit the formula or the host")]
    BadParams(Vec<usize>),
    #[error("formula {0} is neither φ_R nor its negation")]
    NotPhiR(String),
    #[error(transparent)]
    Fragment(#[from] FragmentError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// `¬R(x1,…,x_{r−1},y1) ∧ ⋀_{i<j} xi ≠ xj`.
pub fn phi_r(r: usize) -> Formula {
    let xs: Vec<Term> = (1..r as u32).map(Term::Obj).collect();
    let mut args = xs.clone();
    args.push(Term::Param(1));
    let mut parts = vec![Formula::rel(RelSymbol::R, args).not()];
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            parts.push(Formula::Eq(xs[i], xs[j]).not());
        }
    }
    Formula::conjunction(parts).expect("at least one conjunct")
}

fn canonical_dnf(f: &Formula) -> Option<Vec<Vec<Literal>>> {
    let mut clauses: Vec<Vec<Literal>> = to_dnf(f).ok()?.0;
    for c in &mut clauses {
        c.sort();
    }
    clauses.sort();
    Some(clauses)
}

/// A complete type given by a decidable rule on `(φ, b̄)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeOracle {
    /// The type of a vertex adjacent to nothing, prepared for one formula.
    PE(Analysis),
    /// The φ_R-type containing `φ_R(x̄; b)` for every `b`; `negated` when
    /// prepared for `¬φ_R`.
    PR {
        negated: bool,
    },
    Constant(bool),
}

impl TypeOracle {
    pub fn p_e(phi: &PhiPartition) -> Result<Self, OracleError> {
        Ok(TypeOracle::PE(analyze_phi(phi)?))
    }

    /// Accepts formulas whose normal form matches φ_R or ¬φ_R for arity `r`.
    pub fn p_r(phi: &PhiPartition, r: usize) -> Result<Self, OracleError> {
        let reference = phi_r(r);
        let given = canonical_dnf(phi.formula());
        if given.is_some() && given == canonical_dnf(&reference) {
            Ok(TypeOracle::PR { negated: false })
        } else if given.is_some() && given == canonical_dnf(&reference.not()) {
            Ok(TypeOracle::PR { negated: true })
        } else {
            Err(OracleError::NotPhiR(phi.formula().to_string()))
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TypeOracle::PE(_) => "pE",
            TypeOracle::PR { .. } => "pR",
            TypeOracle::Constant(_) => "constant",
        }
    }

    pub fn value(&self, host: &dyn Structure, params: &[usize]) -> Result<bool, EvalError> {
        match self {
            TypeOracle::PE(analysis) => analysis.in_p_e(host, params),
            TypeOracle::PR { negated } => Ok(!negated),
            TypeOracle::Constant(v) => Ok(*v),
        }
    }
}

/// What the average is compared against.
#[derive(Clone, Debug)]
pub enum Target<'h> {
    Oracle(TypeOracle),
    Measure(FiniteMeasure<'h>),
}

impl Target<'_> {
    fn value(&self, host: &dyn Structure, phi: &PhiPartition, params: &[usize]) -> Result<Rational, OracleError> {
        Ok(match self {
            Target::Oracle(o) => {
                if o.value(host, params)? {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            Target::Measure(mu) => mu.eval(phi, params)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamDomain {
    /// Every tuple in `host^m`, `m` the formula's parameter arity.
    AllTuples,
    Explicit(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    /// `count` tuples drawn uniformly (with replacement) from the domain.
    Sampled {
        seed: u64,
        count: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxReport {
    #[serde(with = "crate::rational::serde_rational")]
    pub epsilon_target: Rational,
    #[serde(with = "crate::rational::serde_rational")]
    pub sup_error: Rational,
    pub argmax_params: Vec<usize>,
    #[serde(with = "crate::rational::serde_opt_rational")]
    pub certified_bound: Option<Rational>,
    pub samples_scanned: u64,
    pub exhaustive: bool,
}

impl ApproxReport {
    pub fn with_certified_bound(mut self, bound: Rational) -> Self {
        self.certified_bound = Some(bound);
        self
    }

    /// `sup_error < ε`.
    pub fn within_epsilon(&self) -> bool {
        self.sup_error < self.epsilon_target
    }
}

/// The `index`-th tuple of `n^m` in base-n digit order.
pub(crate) fn decode(mut index: u128, n: usize, m: usize) -> Vec<usize> {
    let mut t = vec![0; m];
    for slot in t.iter_mut().rev() {
        *slot = (index % n as u128) as usize;
        index /= n as u128;
    }
    t
}

fn domain_tuples(
    host: &dyn Structure,
    m: usize,
    domain: &ParamDomain,
    mode: &ScanMode,
) -> Result<Vec<Vec<usize>>, OracleError> {
    let n = host.universe_size();
    let size: u128 = match domain {
        ParamDomain::AllTuples => (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX),
        ParamDomain::Explicit(list) => {
            if let Some(bad) = list.iter().find(|t| t.len() != m || t.iter().any(|&v| v >= n)) {
                return Err(OracleError::BadParams(bad.clone()));
            }
            list.len() as u128
        }
    };
    if size == 0 {
        return Err(OracleError::EmptyDomain);
    }
    let pick = |i: u128| match domain {
        ParamDomain::AllTuples => decode(i, n, m),
        ParamDomain::Explicit(list) => list[i as usize].clone(),
    };
    match mode {
        ScanMode::Exhaustive => {
            if size > MAX_EXHAUSTIVE_DOMAIN {
                return Err(OracleError::DomainTooLarge(size));
            }
            Ok((0..size).map(pick).collect())
        }
        ScanMode::Sampled { seed, count } => {
            if *count == 0 {
                return Err(OracleError::EmptyDomain);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            Ok((0..*count).map(|_| pick(rng.gen_range(0..size))).collect())
        }
    }
}

/// `sup_b̄ |target(φ(x̄; b̄)) − Av_ā(φ(x̄; b̄))|` over the domain. Ties for the
/// maximum go to the lexicographically least parameter tuple.
pub fn sup_error(
    host: &dyn Structure,
    target: &Target,
    points: &[Vec<usize>],
    phi: &PhiPartition,
    domain: &ParamDomain,
    mode: &ScanMode,
    epsilon: Rational,
) -> Result<ApproxReport, OracleError> {
    let average = FiniteMeasure::average(host, points)?;
    let tuples = domain_tuples(host, phi.param_arity(), domain, mode)?;
    let scored: Result<Vec<(Rational, &Vec<usize>)>, OracleError> = tuples
        .par_iter()
        .map(|b| {
            let expected = target.value(host, phi, b)?;
            let got = average.eval(phi, b)?;
            Ok((abs_diff(&expected, &got), b))
        })
        .collect();
    let best = scored?
        .into_iter()
        .reduce(|best, cur| {
            if cur.0 > best.0 || (cur.0 == best.0 && cur.1 < best.1) {
                cur
            } else {
                best
            }
        })
        .expect("domain is nonempty");
    Ok(ApproxReport {
        epsilon_target: epsilon,
        sup_error: best.0,
        argmax_params: best.1.clone(),
        certified_bound: None,
        samples_scanned: tuples.len() as u64,
        exhaustive: matches!(mode, ScanMode::Exhaustive),
    })
}
