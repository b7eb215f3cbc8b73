//! Quantifier-free formulas over the signatures `{E}` and `{R}`.
//!
//! Object variables are written `x1, x2, ...` and parameter variables
//! `y1, y2, ...`. See [`parse_formula`] for the concrete syntax.

mod analyze;
mod dnf;
mod eval;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use analyze::{analyze_phi, Analysis, DisjunctProfile, FragmentError};
pub use dnf::{to_dnf, to_dnf_with_cap, Atom, Dnf, DnfError, Literal, DEFAULT_CLAUSE_CAP};
pub use eval::{evaluate, Assignment, EvalError};
pub use parse::{parse_formula, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelSymbol {
    E,
    R,
}

impl fmt::Display for RelSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelSymbol::E => "E",
            RelSymbol::R => "R",
        })
    }
}

/// A variable. Indices are 1-based, as written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Obj(u32),
    Param(u32),
}

impl Term {
    pub fn index(self) -> u32 {
        match self {
            Term::Obj(i) | Term::Param(i) => i,
        }
    }

    pub fn is_object(self) -> bool {
        matches!(self, Term::Obj(_))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Obj(i) => write!(f, "x{i}"),
            Term::Param(i) => write!(f, "y{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Rel { symbol: RelSymbol, args: Vec<Term> },
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn rel(symbol: RelSymbol, args: impl Into<Vec<Term>>) -> Self {
        Formula::Rel {
            symbol,
            args: args.into(),
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, other: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(other))
    }

    /// Left-nested conjunction; `None` for an empty list.
    pub fn conjunction(parts: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        parts.into_iter().reduce(Formula::and)
    }

    /// Left-nested disjunction; `None` for an empty list.
    pub fn disjunction(parts: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        parts.into_iter().reduce(Formula::or)
    }

    pub fn variables(&self) -> BTreeSet<Term> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut BTreeSet<Term>) {
        match self {
            Formula::Rel { args, .. } => out.extend(args.iter().copied()),
            Formula::Eq(a, b) => {
                out.insert(*a);
                out.insert(*b);
            }
            Formula::Not(f) => f.collect_variables(out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
        }
    }

    pub fn symbols(&self) -> BTreeSet<RelSymbol> {
        let mut out = BTreeSet::new();
        self.walk_atoms(&mut |f| {
            if let Formula::Rel { symbol, .. } = f {
                out.insert(*symbol);
            }
        });
        out
    }

    fn walk_atoms(&self, visit: &mut impl FnMut(&Formula)) {
        match self {
            Formula::Not(f) => f.walk_atoms(visit),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.walk_atoms(visit);
                b.walk_atoms(visit);
            }
            atom => visit(atom),
        }
    }

    /// Substitutes every variable through `map`.
    pub fn rename(&self, map: &impl Fn(Term) -> Term) -> Formula {
        match self {
            Formula::Rel { symbol, args } => Formula::Rel {
                symbol: *symbol,
                args: args.iter().map(|&t| map(t)).collect(),
            },
            Formula::Eq(a, b) => Formula::Eq(map(*a), map(*b)),
            Formula::Not(f) => Formula::Not(Box::new(f.rename(map))),
            Formula::And(a, b) => Formula::And(Box::new(a.rename(map)), Box::new(b.rename(map))),
            Formula::Or(a, b) => Formula::Or(Box::new(a.rename(map)), Box::new(b.rename(map))),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Or(..) => 0,
            Formula::And(..) => 1,
            _ => 2,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Formula::Rel { symbol, args } => {
                write!(f, "{symbol}(")?;
                for (i, t) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ")")
            }
            Formula::Eq(a, b) => write!(f, "{a} = {b}"),
            Formula::Not(inner) => match inner.as_ref() {
                Formula::Eq(a, b) => write!(f, "{a} != {b}"),
                inner => {
                    write!(f, "!")?;
                    inner.fmt_at(f, 2)
                }
            },
            // Both connectives associate to the left when parsed, so a
            // right operand of the same kind needs parentheses.
            Formula::And(a, b) => {
                a.fmt_at(f, 1)?;
                write!(f, " & ")?;
                b.fmt_at(f, 2)
            }
            Formula::Or(a, b) => {
                a.fmt_at(f, 0)?;
                write!(f, " | ")?;
                b.fmt_at(f, 1)
            }
        }
    }
}

/// Prints in the accepted syntax; `parse_formula(&φ.to_string())` returns `φ`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("variable {0} exceeds the declared arities")]
    VariableOutOfRange(Term),
    #[error("variable index must be at least 1, got {0}")]
    ZeroIndex(Term),
}

/// A formula `φ(x̄; ȳ)` with its split into object and parameter variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiPartition {
    formula: Formula,
    object_arity: usize,
    param_arity: usize,
}

impl PhiPartition {
    pub fn new(formula: Formula, object_arity: usize, param_arity: usize) -> Result<Self, PartitionError> {
        for t in formula.variables() {
            let bound = if t.is_object() { object_arity } else { param_arity };
            if t.index() == 0 {
                return Err(PartitionError::ZeroIndex(t));
            }
            if t.index() as usize > bound {
                return Err(PartitionError::VariableOutOfRange(t));
            }
        }
        Ok(Self {
            formula,
            object_arity,
            param_arity,
        })
    }

    /// Arities taken from the largest index of each sort that occurs.
    pub fn infer(formula: Formula) -> Self {
        let vars = formula.variables();
        let max = |obj: bool| {
            vars.iter()
                .filter(|t| t.is_object() == obj)
                .map(|t| t.index() as usize)
                .max()
                .unwrap_or(0)
        };
        let (object_arity, param_arity) = (max(true), max(false));
        Self {
            formula,
            object_arity,
            param_arity,
        }
    }

    pub fn formula(&self) -> &Formula {
        &self.formula
    }

    pub fn object_arity(&self) -> usize {
        self.object_arity
    }

    pub fn param_arity(&self) -> usize {
        self.param_arity
    }

    pub fn negated(&self) -> Self {
        Self {
            formula: self.formula.clone().not(),
            ..*self
        }
    }
}
