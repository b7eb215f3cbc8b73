//! Finite reproductions of the separation arguments, as checkable reports.
//!
//! Each pipeline returns a [`WitnessReport`]: the inputs it ran on (by digest),
//! a JSON payload with the constructed objects, and a list of certified
//! inequalities between exact rationals. [`verify_report`] recomputes every
//! inequality from the payload and the input structures alone.

mod adversary;
mod fam;
mod order;
mod sat;
mod tp2;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::coloring::ColoringError;
use crate::logic::{EvalError, FragmentError, ParseError, PartitionError};
use crate::measures::OracleError;
use crate::rational::{from_int, Rational};
use crate::structures::{AnyStructure, StructureError, StructureFile};

pub use adversary::{adversary_witness, epsilon_r};
pub use fam::{fam_witness, FamBudget};
pub use order::order_witness;
pub use sat::{sat_probe, sat_probe_aggregate, search_sat_tuple};
pub use tp2::{tp2_witness, PathSelection};
pub use verify::{verify_report, Verification, VerifyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theorem {
    #[serde(rename = "famnotfim")]
    Fam,
    #[serde(rename = "dfsnotfim-adversary")]
    Adversary,
    #[serde(rename = "dfsnotfim-sat")]
    Sat,
    #[serde(rename = "order")]
    Order,
    #[serde(rename = "tp2")]
    Tp2,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Theorem::Fam => "famnotfim",
            Theorem::Adversary => "dfsnotfim-adversary",
            Theorem::Sat => "dfsnotfim-sat",
            Theorem::Order => "order",
            Theorem::Tp2 => "tp2",
        };
        f.write_str(tag)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

/// `lhs relation rhs`, with `holds` computed at construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certification {
    pub name: String,
    #[serde(with = "crate::rational::serde_rational")]
    pub lhs: Rational,
    #[serde(with = "crate::rational::serde_rational")]
    pub rhs: Rational,
    pub relation: Relation,
    pub holds: bool,
}

impl Certification {
    pub fn new(name: impl Into<String>, lhs: Rational, relation: Relation, rhs: Rational) -> Self {
        let holds = relation.holds(&lhs, &rhs);
        Self {
            name: name.into(),
            lhs,
            rhs,
            relation,
            holds,
        }
    }

    /// A yes/no check recorded as `1 = 1` or `0 = 1`.
    pub fn flag(name: impl Into<String>, value: bool) -> Self {
        Self::new(name, from_int(value as u8), Relation::Eq, from_int(1))
    }

    pub fn count(name: impl Into<String>, lhs: usize, relation: Relation, rhs: usize) -> Self {
        Self::new(name, from_int(lhs), relation, from_int(rhs))
    }
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} [{}]",
            self.name,
            self.lhs,
            self.relation.symbol(),
            self.rhs,
            if self.holds { "holds" } else { "fails" }
        )
    }
}

/// Where an input came from (a file path or generator spec) and the digest of
/// its canonical JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputRecord {
    pub source: String,
    pub digest: String,
}

impl InputRecord {
    pub fn of(structure: impl Into<StructureFile>) -> Self {
        Self {
            source: "inline".into(),
            digest: structure.into().digest(),
        }
    }
}

pub fn structure_digest(structure: &AnyStructure) -> String {
    structure.to_file().digest()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub theorem: Theorem,
    pub inputs: BTreeMap<String, InputRecord>,
    pub params: Value,
    pub witness: Value,
    pub certified: Vec<Certification>,
    pub log: Vec<String>,
}

impl WitnessReport {
    fn new(theorem: Theorem) -> Self {
        Self {
            theorem,
            inputs: BTreeMap::new(),
            params: Value::Null,
            witness: Value::Null,
            certified: Vec::new(),
            log: Vec::new(),
        }
    }

    pub fn all_hold(&self) -> bool {
        self.certified.iter().all(|c| c.holds)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Certification> {
        self.certified.iter().filter(|c| !c.holds)
    }

    pub fn set_source(&mut self, input: &str, source: impl Into<String>) {
        if let Some(rec) = self.inputs.get_mut(input) {
            rec.source = source.into();
        }
    }

    /// Pretty JSON with object keys in sorted order.
    pub fn to_json_string(&self) -> String {
        let value = serde_json::to_value(self).expect("reports always serialize");
        let mut text = serde_json::to_string_pretty(&value).expect("values always serialize");
        text.push('\n');
        text
    }

    pub fn from_json_str(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(Box<Certification>),
    #[error("no induced embedding found: {0}")]
    EmbeddingNotFound(String),
    #[error("grid for k = {k} needs {needed} objects, the structure has {found}")]
    GridTooSmall { k: usize, needed: usize, found: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Fragment(#[from] FragmentError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("payloads always serialize")
}
