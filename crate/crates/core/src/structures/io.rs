//! JSON structure files.
//!
//! ```json
//! {"kind":"hypergraph","r":2,"n":5,"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]]}
//! {"kind":"tournament","n":3,"arcs":[[0,1],[1,2],[2,0]]}
//! {"kind":"feq2","objects":4,"parameters":1,"classes":[[[0,2],[1,3]]]}
//! ```
//!
//! Vertices are 0-based. Every edge must list its vertices in strictly
//! ascending order; the writer emits edges in lexicographic order.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{Feq2Structure, Hypergraph, StructureError, Tournament};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum StructureFile {
    Hypergraph {
        r: usize,
        n: usize,
        edges: Vec<Vec<usize>>,
    },
    Tournament {
        n: usize,
        arcs: Vec<[usize; 2]>,
    },
    Feq2 {
        objects: usize,
        parameters: usize,
        classes: Vec<Vec<Vec<usize>>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyStructure {
    Hypergraph(Hypergraph),
    Tournament(Tournament),
    Feq2(Feq2Structure),
}

impl AnyStructure {
    pub fn kind(&self) -> &'static str {
        match self {
            AnyStructure::Hypergraph(_) => "hypergraph",
            AnyStructure::Tournament(_) => "tournament",
            AnyStructure::Feq2(_) => "feq2",
        }
    }

    pub fn into_hypergraph(self) -> Result<Hypergraph, StructureError> {
        match self {
            AnyStructure::Hypergraph(h) => Ok(h),
            other => Err(StructureError::Format(format!(
                "expected a hypergraph, found {}",
                other.kind()
            ))),
        }
    }

    pub fn to_file(&self) -> StructureFile {
        match self {
            AnyStructure::Hypergraph(h) => h.into(),
            AnyStructure::Tournament(t) => t.into(),
            AnyStructure::Feq2(f) => f.into(),
        }
    }
}

impl From<&Hypergraph> for StructureFile {
    fn from(h: &Hypergraph) -> Self {
        StructureFile::Hypergraph {
            r: h.arity(),
            n: h.vertex_count(),
            edges: h.sorted_edges(),
        }
    }
}

impl From<&Tournament> for StructureFile {
    fn from(t: &Tournament) -> Self {
        StructureFile::Tournament {
            n: t.vertex_count(),
            arcs: t.arcs().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl From<&Feq2Structure> for StructureFile {
    fn from(f: &Feq2Structure) -> Self {
        StructureFile::Feq2 {
            objects: f.objects(),
            parameters: f.parameters(),
            classes: (0..f.parameters()).map(|z| f.classes(z)).collect(),
        }
    }
}

impl TryFrom<StructureFile> for AnyStructure {
    type Error = StructureError;

    fn try_from(file: StructureFile) -> Result<Self, StructureError> {
        match file {
            StructureFile::Hypergraph { r, n, edges } => {
                if let Some(edge) = edges.iter().find(|e| e.windows(2).any(|w| w[0] >= w[1])) {
                    return Err(StructureError::UnsortedEdge(edge.clone()));
                }
                Ok(AnyStructure::Hypergraph(Hypergraph::new(r, n, &edges)?))
            }
            StructureFile::Tournament { n, arcs } => {
                let arcs: Vec<(usize, usize)> = arcs.iter().map(|a| (a[0], a[1])).collect();
                Ok(AnyStructure::Tournament(Tournament::new(n, &arcs)?))
            }
            StructureFile::Feq2 {
                objects,
                parameters,
                classes,
            } => {
                if classes.len() != parameters {
                    return Err(StructureError::InvalidFeq2(format!(
                        "{} class lists for {parameters} parameters",
                        classes.len()
                    )));
                }
                Ok(AnyStructure::Feq2(Feq2Structure::new(objects, &classes)?))
            }
        }
    }
}

impl StructureFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("structure files always serialize")
    }

    /// Hex SHA-256 of [`StructureFile::to_json`].
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }

    pub fn parse(text: &str) -> Result<AnyStructure, StructureError> {
        let file: StructureFile = serde_json::from_str(text).map_err(|e| StructureError::Format(e.to_string()))?;
        file.try_into()
    }

    pub fn load(path: &Path) -> Result<AnyStructure, StructureError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| StructureError::Format(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::cyclic_graph;

    #[test]
    fn hypergraph_format_is_exact() {
        let c5 = cyclic_graph(5, &[1]).unwrap();
        let text = StructureFile::from(&c5).to_json();
        assert_eq!(
            text,
            r#"{"kind":"hypergraph","r":2,"n":5,"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]]}"#
        );
        assert_eq!(StructureFile::parse(&text).unwrap(), AnyStructure::Hypergraph(c5));
    }

    #[test]
    fn loader_rejects_unsorted_edges() {
        let err = StructureFile::parse(r#"{"kind":"hypergraph","r":2,"n":3,"edges":[[1,0]]}"#).unwrap_err();
        assert!(matches!(err, StructureError::UnsortedEdge(_)));
        let err = StructureFile::parse(r#"{"kind":"hypergraph","r":2,"n":3,"edges":[[1,1]]}"#).unwrap_err();
        assert!(matches!(err, StructureError::UnsortedEdge(_)));
        assert!(StructureFile::parse(r#"{"kind":"hypergraph","r":2,"n":3,"edges":[[0,1],[0,1]]}"#).is_err());
        assert!(StructureFile::parse(r#"{"kind":"graph"}"#).is_err());
    }

    #[test]
    fn tournament_and_feq_files() {
        let t = StructureFile::parse(r#"{"kind":"tournament","n":3,"arcs":[[0,1],[1,2],[2,0]]}"#).unwrap();
        assert_eq!(
            t.to_file().to_json(),
            r#"{"kind":"tournament","n":3,"arcs":[[0,1],[1,2],[2,0]]}"#
        );
        let f =
            StructureFile::parse(r#"{"kind":"feq2","objects":4,"parameters":1,"classes":[[[0,2],[1,3]]]}"#).unwrap();
        assert_eq!(f.kind(), "feq2");
        assert!(
            StructureFile::parse(r#"{"kind":"feq2","objects":4,"parameters":2,"classes":[[[0,2],[1,3]]]}"#).is_err()
        );
    }

    #[test]
    fn digest_tracks_content() {
        let a = StructureFile::from(&cyclic_graph(7, &[1]).unwrap()).digest();
        let b = StructureFile::from(&cyclic_graph(7, &[2]).unwrap()).digest();
        assert_eq!(a.len(), 64);
        assert_ne!(a, b);
    }
}
