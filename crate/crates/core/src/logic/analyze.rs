//! Decomposition of a one-object-variable graph formula into disjuncts of the
//! form
//!
//! ```text
//! ⋀_{i∈A} ¬E(x,y_i) ∧ ⋀_{i∈B} x≠y_i ∧ ⋀_{i∈C} E(x,y_i) ∧ ⋀_{i∈D} x=y_i ∧ ψ(ȳ)
//! ```

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use super::dnf::{to_dnf, Atom, Dnf, DnfError, Literal};
use super::eval::{Assignment, EvalError};
use super::{PhiPartition, RelSymbol, Term};
use crate::structures::Structure;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FragmentError {
    #[error("atom {0} mentions two object variables")]
    TwoObjectVariables(String),
    #[error("disjunct analysis needs exactly one object variable, got {0}")]
    ObjectArity(usize),
    #[error("atom {0} is outside the graph signature")]
    UnsupportedAtom(String),
    #[error(transparent)]
    Dnf(#[from] DnfError),
}

/// Index sets hold parameter indices (1-based, as in `y1`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DisjunctProfile {
    pub a: BTreeSet<u32>,
    pub b: BTreeSet<u32>,
    pub c: BTreeSet<u32>,
    pub d: BTreeSet<u32>,
    /// Parameter-only literals; empty means true.
    pub psi: Vec<Literal>,
}

impl DisjunctProfile {
    /// `|A|`
    pub fn k(&self) -> usize {
        self.a.len()
    }

    /// `|B|`
    pub fn l(&self) -> usize {
        self.b.len()
    }

    pub fn in_t_star(&self) -> bool {
        self.c.is_empty() && self.d.is_empty()
    }

    pub fn to_clause(&self) -> Vec<Literal> {
        let x = Term::Obj(1);
        let edge = |i: u32| Atom::Rel {
            symbol: RelSymbol::E,
            args: vec![x, Term::Param(i)],
        };
        let eq = |i: u32| Atom::eq(x, Term::Param(i));
        let mut out = Vec::new();
        out.extend(self.a.iter().map(|&i| Literal::neg(edge(i))));
        out.extend(self.b.iter().map(|&i| Literal::neg(eq(i))));
        out.extend(self.c.iter().map(|&i| Literal::pos(edge(i))));
        out.extend(self.d.iter().map(|&i| Literal::pos(eq(i))));
        out.extend(self.psi.iter().cloned());
        out
    }

    pub fn psi_holds(&self, host: &dyn Structure, params: &[usize]) -> Result<bool, EvalError> {
        let asg = Assignment::new(&[], params);
        for lit in &self.psi {
            if !lit.evaluate(host, &asg)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub profiles: Vec<DisjunctProfile>,
    /// Indices of the profiles with `C = D = ∅`.
    pub t_star: Vec<usize>,
}

impl Analysis {
    pub fn reassemble(&self) -> Dnf {
        Dnf(self.profiles.iter().map(DisjunctProfile::to_clause).collect())
    }

    /// Whether `φ(x; b̄)` belongs to the type of an element adjacent to
    /// nothing: some disjunct without positive `x`-literals has `ψ` true.
    pub fn in_p_e(&self, host: &dyn Structure, params: &[usize]) -> Result<bool, EvalError> {
        for &t in &self.t_star {
            if self.profiles[t].psi_holds(host, params)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

enum Placement {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    Psi,
    /// Always true: drop the literal.
    Skip,
    /// Always false: drop the disjunct.
    Kill,
}

fn place(lit: &Literal) -> Result<Placement, FragmentError> {
    let terms = lit.atom.terms();
    let objects: BTreeSet<Term> = terms.iter().copied().filter(|t| t.is_object()).collect();
    if objects.len() > 1 {
        return Err(FragmentError::TwoObjectVariables(lit.atom.to_formula().to_string()));
    }
    if objects.is_empty() {
        return Ok(Placement::Psi);
    }
    let unsupported = || FragmentError::UnsupportedAtom(lit.atom.to_formula().to_string());
    let param = terms.iter().find_map(|t| match t {
        Term::Param(i) => Some(*i),
        Term::Obj(_) => None,
    });
    Ok(match &lit.atom {
        Atom::Rel { symbol, args } => {
            if *symbol != RelSymbol::E || args.len() != 2 {
                return Err(unsupported());
            }
            match (param, lit.positive) {
                (Some(i), false) => Placement::A(i),
                (Some(i), true) => Placement::C(i),
                (None, false) => Placement::Skip,
                (None, true) => Placement::Kill,
            }
        }
        Atom::Eq(..) => match (param, lit.positive) {
            (Some(i), false) => Placement::B(i),
            (Some(i), true) => Placement::D(i),
            (None, true) => Placement::Skip,
            (None, false) => Placement::Kill,
        },
    })
}

/// Fails on atoms with two object variables, on `R`, and on `E` atoms of
/// arity other than two that mention the object variable.
pub fn analyze_phi(p: &PhiPartition) -> Result<Analysis, FragmentError> {
    let dnf = to_dnf(p.formula())?;
    let mut profiles = Vec::new();
    for clause in dnf.clauses() {
        let mut profile = DisjunctProfile::default();
        let mut alive = true;
        for lit in clause {
            match place(lit)? {
                Placement::A(i) => drop(profile.a.insert(i)),
                Placement::B(i) => drop(profile.b.insert(i)),
                Placement::C(i) => drop(profile.c.insert(i)),
                Placement::D(i) => drop(profile.d.insert(i)),
                Placement::Psi => profile.psi.push(lit.clone()),
                Placement::Skip => {}
                Placement::Kill => alive = false,
            }
        }
        if alive {
            profiles.push(profile);
        }
    }
    if p.object_arity() != 1 {
        return Err(FragmentError::ObjectArity(p.object_arity()));
    }
    let t_star = profiles
        .iter()
        .enumerate()
        .filter(|(_, pr)| pr.in_t_star())
        .map(|(t, _)| t)
        .collect();
    Ok(Analysis { profiles, t_star })
}
