use std::fmt;

use thiserror::Error;

use super::eval::{eval_atom, Assignment, EvalError};
use super::{Formula, RelSymbol, Term};
use crate::structures::Structure;

pub const DEFAULT_CLAUSE_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Rel {
        symbol: RelSymbol,
        args: Vec<Term>,
    },
    /// Stored with the smaller term first.
    Eq(Term, Term),
}

impl Atom {
    pub fn eq(a: Term, b: Term) -> Self {
        Atom::Eq(a.min(b), a.max(b))
    }

    pub fn to_formula(&self) -> Formula {
        match self {
            Atom::Rel { symbol, args } => Formula::Rel {
                symbol: *symbol,
                args: args.clone(),
            },
            Atom::Eq(a, b) => Formula::Eq(*a, *b),
        }
    }

    pub fn terms(&self) -> Vec<Term> {
        match self {
            Atom::Rel { args, .. } => args.clone(),
            Atom::Eq(a, b) => vec![*a, *b],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub positive: bool,
    pub atom: Atom,
}

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Self { positive: true, atom }
    }

    pub fn neg(atom: Atom) -> Self {
        Self { positive: false, atom }
    }

    pub fn negated(&self) -> Self {
        Self {
            positive: !self.positive,
            atom: self.atom.clone(),
        }
    }

    pub fn to_formula(&self) -> Formula {
        let f = self.atom.to_formula();
        if self.positive {
            f
        } else {
            f.not()
        }
    }

    pub fn evaluate(&self, host: &dyn Structure, asg: &Assignment) -> Result<bool, EvalError> {
        Ok(eval_atom(host, &self.atom.to_formula(), asg)? == self.positive)
    }

    /// `¬(t = t)`.
    fn is_absurd(&self) -> bool {
        matches!(self.atom, Atom::Eq(a, b) if a == b) && !self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_formula().fmt(f)
    }
}

impl serde::Serialize for Literal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DnfError {
    #[error("disjunctive normal form exceeds {cap} clauses")]
    TooLarge { cap: usize },
}

/// A disjunction of conjunctions of literals. The empty disjunction is false
/// and an empty clause is true.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Dnf(pub Vec<Vec<Literal>>);

impl Dnf {
    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.0
    }

    pub fn evaluate(&self, host: &dyn Structure, asg: &Assignment) -> Result<bool, EvalError> {
        for clause in &self.0 {
            let mut all = true;
            for lit in clause {
                if !lit.evaluate(host, asg)? {
                    all = false;
                    break;
                }
            }
            if all {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

impl fmt::Display for Dnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("false");
        }
        for (i, clause) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            if clause.is_empty() {
                f.write_str("true")?;
            }
            for (j, lit) in clause.iter().enumerate() {
                if j > 0 {
                    f.write_str(" & ")?;
                }
                write!(f, "{lit}")?;
            }
        }
        Ok(())
    }
}

fn conjoin(a: &[Literal], b: &[Literal]) -> Option<Vec<Literal>> {
    let mut out = a.to_vec();
    for lit in b {
        if out.contains(&lit.negated()) {
            return None;
        }
        if !out.contains(lit) {
            out.push(lit.clone());
        }
    }
    Some(out)
}

fn push_unique(out: &mut Vec<Vec<Literal>>, clause: Vec<Literal>, cap: usize) -> Result<(), DnfError> {
    if !out.contains(&clause) {
        if out.len() == cap {
            return Err(DnfError::TooLarge { cap });
        }
        out.push(clause);
    }
    Ok(())
}

fn build(f: &Formula, negate: bool, cap: usize) -> Result<Vec<Vec<Literal>>, DnfError> {
    let atom = match f {
        Formula::Not(g) => return build(g, !negate, cap),
        Formula::And(a, b) | Formula::Or(a, b) => {
            let left = build(a, negate, cap)?;
            let right = build(b, negate, cap)?;
            let mut out = Vec::new();
            if matches!(f, Formula::And(..)) != negate {
                for x in &left {
                    for y in &right {
                        if let Some(c) = conjoin(x, y) {
                            push_unique(&mut out, c, cap)?;
                        }
                    }
                }
            } else {
                for c in left.into_iter().chain(right) {
                    push_unique(&mut out, c, cap)?;
                }
            }
            return Ok(out);
        }
        Formula::Rel { symbol, args } => Atom::Rel {
            symbol: *symbol,
            args: args.clone(),
        },
        Formula::Eq(a, b) => Atom::eq(*a, *b),
    };
    let lit = Literal {
        positive: !negate,
        atom,
    };
    Ok(if lit.is_absurd() { vec![] } else { vec![vec![lit]] })
}

/// Negations are pushed to the atoms, clauses containing a literal and its
/// negation (or `t != t`) are dropped, and duplicate literals and clauses are
/// removed. Fails once more than `cap` clauses would be produced.
pub fn to_dnf_with_cap(f: &Formula, cap: usize) -> Result<Dnf, DnfError> {
    build(f, false, cap).map(Dnf)
}

pub fn to_dnf(f: &Formula) -> Result<Dnf, DnfError> {
    to_dnf_with_cap(f, DEFAULT_CLAUSE_CAP)
}
