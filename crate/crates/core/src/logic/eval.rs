use thiserror::Error;

use super::{Formula, Term};
use crate::structures::{HoldsError, Structure};

/// Values for `x1, x2, ...` and `y1, y2, ...` in order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment<'a> {
    pub objects: &'a [usize],
    pub params: &'a [usize],
}

impl<'a> Assignment<'a> {
    pub fn new(objects: &'a [usize], params: &'a [usize]) -> Self {
        Self { objects, params }
    }

    pub fn get(&self, term: Term) -> Result<usize, EvalError> {
        let slot = match term {
            Term::Obj(i) => self.objects.get((i as usize).wrapping_sub(1)),
            Term::Param(i) => self.params.get((i as usize).wrapping_sub(1)),
        };
        slot.copied().ok_or(EvalError::Unassigned(term))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("variable {0} has no value")]
    Unassigned(Term),
    #[error(transparent)]
    Holds(#[from] HoldsError),
}

pub(crate) fn eval_atom(host: &dyn Structure, formula: &Formula, asg: &Assignment) -> Result<bool, EvalError> {
    match formula {
        Formula::Rel { symbol, args } => {
            let mut values = smallvec::SmallVec::<[usize; 8]>::with_capacity(args.len());
            for &t in args {
                values.push(asg.get(t)?);
            }
            Ok(host.holds(*symbol, &values)?)
        }
        Formula::Eq(a, b) => Ok(asg.get(*a)? == asg.get(*b)?),
        _ => unreachable!("eval_atom called on a connective"),
    }
}

/// Relation atoms with repeated entries are false in every host.
pub fn evaluate(host: &dyn Structure, formula: &Formula, asg: &Assignment) -> Result<bool, EvalError> {
    match formula {
        Formula::Not(f) => Ok(!evaluate(host, f, asg)?),
        Formula::And(a, b) => Ok(evaluate(host, a, asg)? && evaluate(host, b, asg)?),
        Formula::Or(a, b) => Ok(evaluate(host, a, asg)? || evaluate(host, b, asg)?),
        atom => eval_atom(host, atom, asg),
    }
}
