//! Finitely supported measures on tuples of a finite host, evaluated exactly.

mod approx;
pub mod selfcheck;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::logic::{evaluate, Assignment, EvalError, PhiPartition};
use crate::rational::Rational;
use crate::structures::Structure;

pub(crate) use approx::decode as approx_decode;
pub use approx::{
    phi_r, sup_error, ApproxReport, OracleError, ParamDomain, ScanMode, Target, TypeOracle, MAX_EXHAUSTIVE_DOMAIN,
};

pub const DEFAULT_POWER_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MeasureError {
    #[error("a measure needs at least one point")]
    EmptySupport,
    #[error("tuple {tuple:?} has arity {found}, expected {expected}")]
    ArityMismatch {
        tuple: Vec<usize>,
        expected: usize,
        found: usize,
    },
    #[error("tuple {0:?} leaves the host universe")]
    OutOfHost(Vec<usize>),
    #[error("negative weight {0}")]
    NegativeWeight(Rational),
    #[error("weights sum to {0}, not 1")]
    NotNormalized(Rational),
    #[error("measures live on different hosts")]
    HostMismatch,
    #[error("formula has {formula} object variables but the measure is on {measure}-tuples")]
    FormulaArity { formula: usize, measure: usize },
    #[error("support of size {support}^{exponent} exceeds the cap {cap}")]
    TooLarge {
        support: usize,
        exponent: usize,
        cap: usize,
    },
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("localizing set has measure zero")]
    ZeroMass,
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// A probability measure with finite support on `tuple_arity`-tuples of a host.
///
/// Support entries carry strictly positive weights summing to exactly 1;
/// repeated points are merged on construction.
#[derive(Clone)]
pub struct FiniteMeasure<'h> {
    host: &'h dyn Structure,
    tuple_arity: usize,
    support: BTreeMap<Vec<usize>, Rational>,
}

impl fmt::Debug for FiniteMeasure<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMeasure")
            .field("tuple_arity", &self.tuple_arity)
            .field("support", &self.support)
            .finish()
    }
}

/// Same host, same arity, same weighted support.
impl PartialEq for FiniteMeasure<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.tuple_arity == other.tuple_arity && self.support == other.support && same_host(self.host, other.host)
    }
}

fn same_host(a: &dyn Structure, b: &dyn Structure) -> bool {
    std::ptr::addr_eq(a as *const dyn Structure, b as *const dyn Structure) || a.fingerprint() == b.fingerprint()
}

impl<'h> FiniteMeasure<'h> {
    /// Builds a measure from weighted points. Zero weights are dropped.
    pub fn from_weights(
        host: &'h dyn Structure,
        tuple_arity: usize,
        points: impl IntoIterator<Item = (Vec<usize>, Rational)>,
    ) -> Result<Self, MeasureError> {
        let mut support: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        let size = host.universe_size();
        for (tuple, weight) in points {
            if tuple.len() != tuple_arity {
                return Err(MeasureError::ArityMismatch {
                    expected: tuple_arity,
                    found: tuple.len(),
                    tuple,
                });
            }
            if tuple.iter().any(|&v| v >= size) {
                return Err(MeasureError::OutOfHost(tuple));
            }
            if weight.is_negative() {
                return Err(MeasureError::NegativeWeight(weight));
            }
            if weight.is_zero() {
                continue;
            }
            *support.entry(tuple).or_insert_with(Rational::zero) += weight;
        }
        if support.is_empty() {
            return Err(MeasureError::EmptySupport);
        }
        let total: Rational = support.values().sum();
        if !total.is_one() {
            return Err(MeasureError::NotNormalized(total));
        }
        Ok(Self {
            host,
            tuple_arity,
            support,
        })
    }

    pub fn dirac(host: &'h dyn Structure, point: Vec<usize>) -> Result<Self, MeasureError> {
        let arity = point.len();
        Self::from_weights(host, arity, [(point, Rational::one())])
    }

    /// `Av_ā`: weight `1/n` per listed point, so a point listed twice gets `2/n`.
    pub fn average(host: &'h dyn Structure, points: &[Vec<usize>]) -> Result<Self, MeasureError> {
        let first = points.first().ok_or(MeasureError::EmptySupport)?;
        let share = Rational::new(One::one(), points.len().into());
        Self::from_weights(host, first.len(), points.iter().map(|p| (p.clone(), share.clone())))
    }

    /// `Σ rᵢ μᵢ`, with nonnegative `rᵢ` summing to 1.
    pub fn convex(parts: &[(Rational, FiniteMeasure<'h>)]) -> Result<Self, MeasureError> {
        let (_, first) = parts.first().ok_or(MeasureError::EmptySupport)?;
        let mut points = Vec::new();
        for (r, mu) in parts {
            if !same_host(first.host, mu.host) {
                return Err(MeasureError::HostMismatch);
            }
            if r.is_negative() {
                return Err(MeasureError::NegativeWeight(r.clone()));
            }
            points.extend(mu.support.iter().map(|(t, w)| (t.clone(), r * w)));
        }
        let total: Rational = parts.iter().map(|(r, _)| r).sum();
        if !total.is_one() {
            return Err(MeasureError::NotNormalized(total));
        }
        Self::from_weights(first.host, first.tuple_arity, points)
    }

    pub fn host(&self) -> &'h dyn Structure {
        self.host
    }

    pub fn tuple_arity(&self) -> usize {
        self.tuple_arity
    }

    pub fn support(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.support
    }

    pub fn total_mass(&self) -> Rational {
        self.support.values().sum()
    }

    /// `μ(φ(x̄; b̄))`. The formula may use fewer object variables than the
    /// tuple arity; `x_i` reads the `i`-th coordinate.
    pub fn eval(&self, phi: &PhiPartition, params: &[usize]) -> Result<Rational, MeasureError> {
        if phi.object_arity() > self.tuple_arity {
            return Err(MeasureError::FormulaArity {
                formula: phi.object_arity(),
                measure: self.tuple_arity,
            });
        }
        let mut value = Rational::zero();
        for (tuple, weight) in &self.support {
            if evaluate(self.host, phi.formula(), &Assignment::new(tuple, params))? {
                value += weight;
            }
        }
        Ok(value)
    }

    /// `μ(X)` for a predicate on support tuples.
    pub fn mass_of(&self, pred: impl Fn(&[usize]) -> bool) -> Rational {
        self.support.iter().filter(|(t, _)| pred(t)).map(|(_, w)| w).sum()
    }

    /// Morley product `μ ⊗ ν` of finite measures: the weighted grid of
    /// concatenated tuples, `μ`'s coordinates first.
    pub fn product(&self, other: &FiniteMeasure<'h>) -> Result<Self, MeasureError> {
        if !same_host(self.host, other.host) {
            return Err(MeasureError::HostMismatch);
        }
        let mut support = BTreeMap::new();
        for (a, wa) in &self.support {
            for (b, wb) in &other.support {
                let mut t = Vec::with_capacity(a.len() + b.len());
                t.extend_from_slice(a);
                t.extend_from_slice(b);
                support.insert(t, wa * wb);
            }
        }
        Ok(Self {
            host: self.host,
            tuple_arity: self.tuple_arity + other.tuple_arity,
            support,
        })
    }

    /// `μ^{(n)} = μ ⊗ … ⊗ μ`, refusing supports larger than `cap`.
    pub fn power(&self, n: usize, cap: usize) -> Result<Self, MeasureError> {
        if n == 0 {
            return Err(MeasureError::ZeroPower);
        }
        let too_large = MeasureError::TooLarge {
            support: self.support.len(),
            exponent: n,
            cap,
        };
        let size = u32::try_from(n)
            .ok()
            .and_then(|e| self.support.len().checked_pow(e))
            .ok_or(too_large.clone())?;
        if size > cap {
            return Err(too_large);
        }
        let mut out = self.clone();
        for _ in 1..n {
            out = out.product(self)?;
        }
        Ok(out)
    }

    /// `μ(· ∩ X) / μ(X)`.
    pub fn localize(&self, pred: impl Fn(&[usize]) -> bool) -> Result<Self, MeasureError> {
        let mass = self.mass_of(&pred);
        if mass.is_zero() {
            return Err(MeasureError::ZeroMass);
        }
        let support = self
            .support
            .iter()
            .filter(|(t, _)| pred(t))
            .map(|(t, w)| (t.clone(), w / &mass))
            .collect();
        Ok(Self {
            host: self.host,
            tuple_arity: self.tuple_arity,
            support,
        })
    }

    /// Weighted support as rows of `(tuple, weight)` for reports.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .support
            .iter()
            .map(|(t, w)| serde_json::json!([t, crate::rational::to_json(w)]))
            .collect();
        serde_json::json!({"arity": self.tuple_arity, "support": rows})
    }
}

/// Convenience for `μ(φ)` as a free function.
pub fn mu_eval(mu: &FiniteMeasure, phi: &PhiPartition, params: &[usize]) -> Result<Rational, MeasureError> {
    mu.eval(phi, params)
}

pub fn make_average<'h>(host: &'h dyn Structure, points: &[Vec<usize>]) -> Result<FiniteMeasure<'h>, MeasureError> {
    FiniteMeasure::average(host, points)
}
