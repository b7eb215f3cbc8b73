use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use smallvec::SmallVec;

use super::StructureError;

/// Sorted vertex tuple, inline for the arities used in practice.
pub(crate) type Key = SmallVec<[usize; 8]>;

/// A finite r-uniform hypergraph on the vertices `0..n`.
///
/// Edges are stored as sorted vertex tuples. For `r = 2` an adjacency bitset per
/// vertex is kept alongside the edge set; clique and independence searches run
/// on those.
#[derive(Clone)]
pub struct Hypergraph {
    arity: usize,
    vertex_count: usize,
    edges: HashSet<Vec<usize>>,
    adjacency: Vec<FixedBitSet>,
    degree: Vec<usize>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("arity", &self.arity)
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.sorted_edges())
            .finish()
    }
}

impl Hypergraph {
    pub fn empty(arity: usize, vertex_count: usize) -> Result<Self, StructureError> {
        if arity < 2 {
            return Err(StructureError::InvalidArity(arity));
        }
        let adjacency = if arity == 2 {
            vec![FixedBitSet::with_capacity(vertex_count); vertex_count]
        } else {
            Vec::new()
        };
        Ok(Self {
            arity,
            vertex_count,
            edges: HashSet::new(),
            adjacency,
            degree: vec![0; vertex_count],
        })
    }

    /// Builds a hypergraph from edges given in any vertex order. Repeated
    /// vertices inside an edge and duplicate edges are rejected.
    pub fn new<I, E>(arity: usize, vertex_count: usize, edges: I) -> Result<Self, StructureError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let mut graph = Self::empty(arity, vertex_count)?;
        for edge in edges {
            let mut edge = edge.as_ref().to_vec();
            edge.sort_unstable();
            graph.check_tuple(&edge)?;
            if !graph.insert_edge(edge.clone()) {
                return Err(StructureError::DuplicateEdge(edge));
            }
        }
        Ok(graph)
    }

    /// Ordinary graph from vertex pairs.
    pub fn graph(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, StructureError> {
        Self::new(2, vertex_count, edges.iter().map(|&(u, v)| [u, v]))
    }

    /// The complete r-graph on `vertex_count` vertices.
    pub fn complete(arity: usize, vertex_count: usize) -> Result<Self, StructureError> {
        let mut graph = Self::empty(arity, vertex_count)?;
        for edge in itertools::Itertools::combinations(0..vertex_count, arity) {
            graph.insert_edge(edge);
        }
        Ok(graph)
    }

    pub(crate) fn check_tuple(&self, sorted: &[usize]) -> Result<(), StructureError> {
        if sorted.len() != self.arity {
            return Err(StructureError::ArityMismatch {
                expected: self.arity,
                found: sorted.len(),
            });
        }
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(StructureError::RepeatedVertex(sorted.to_vec()));
            }
        }
        if let Some(&v) = sorted.iter().find(|&&v| v >= self.vertex_count) {
            return Err(StructureError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        Ok(())
    }

    /// Inserts an already validated, sorted edge. Returns false if present.
    pub(crate) fn insert_edge(&mut self, edge: Vec<usize>) -> bool {
        if self.edges.contains(&edge) {
            return false;
        }
        if self.arity == 2 {
            self.adjacency[edge[0]].insert(edge[1]);
            self.adjacency[edge[1]].insert(edge[0]);
        }
        for &v in &edge {
            self.degree[v] += 1;
        }
        self.edges.insert(edge);
        true
    }

    pub(crate) fn remove_edge(&mut self, edge: &[usize]) -> bool {
        if !self.edges.remove(edge) {
            return false;
        }
        if self.arity == 2 {
            self.adjacency[edge[0]].set(edge[1], false);
            self.adjacency[edge[1]].set(edge[0], false);
        }
        for &v in edge {
            self.degree[v] -= 1;
        }
        true
    }

    /// Appends an isolated vertex and returns its index.
    pub(crate) fn push_vertex(&mut self) -> usize {
        let v = self.vertex_count;
        self.vertex_count += 1;
        if self.arity == 2 {
            for row in &mut self.adjacency {
                row.grow(self.vertex_count);
            }
            self.adjacency.push(FixedBitSet::with_capacity(self.vertex_count));
        }
        self.degree.push(0);
        v
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    /// Edges in lexicographic order.
    pub fn sorted_edges(&self) -> Vec<Vec<usize>> {
        let mut edges: Vec<Vec<usize>> = self.edges.iter().cloned().collect();
        edges.sort_unstable();
        edges
    }

    /// Membership test for a vertex tuple in any order. Tuples with repeated
    /// entries or the wrong length are never edges.
    pub fn has_edge(&self, vertices: &[usize]) -> bool {
        if vertices.len() != self.arity {
            return false;
        }
        let mut key: Key = vertices.iter().copied().collect();
        key.sort_unstable();
        if key.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        self.has_sorted_edge(&key)
    }

    /// Membership for a sorted tuple of distinct in-range vertices.
    #[inline]
    pub(crate) fn has_sorted_edge(&self, sorted: &[usize]) -> bool {
        if self.arity == 2 {
            sorted[1] < self.vertex_count && self.adjacency[sorted[0]].contains(sorted[1])
        } else {
            self.edges.contains(sorted)
        }
    }

    /// Adjacency row of `v`; only available for graphs.
    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        assert_eq!(self.arity, 2, "neighbors() is defined for graphs only");
        &self.adjacency[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.arity == 2 && u != v && self.adjacency[u].contains(v)
    }

    /// Induced sub-hypergraph on `vertices`, relabelled `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self, StructureError> {
        let mut sub = Self::empty(self.arity, vertices.len())?;
        for &v in vertices {
            if v >= self.vertex_count {
                return Err(StructureError::VertexOutOfRange {
                    vertex: v,
                    vertex_count: self.vertex_count,
                });
            }
        }
        for local in itertools::Itertools::combinations(0..vertices.len(), self.arity) {
            let image: Vec<usize> = local.iter().map(|&i| vertices[i]).collect();
            if self.has_edge(&image) {
                sub.insert_edge(local);
            }
        }
        Ok(sub)
    }

    /// Non-edges of a graph in lexicographic order, or missing r-sets in general.
    pub fn non_edges(&self) -> Vec<Vec<usize>> {
        itertools::Itertools::combinations(0..self.vertex_count, self.arity)
            .filter(|e| !self.edges.contains(e))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_canonicalized() {
        let g = Hypergraph::new(3, 4, [[2, 0, 1], [3, 1, 2]]).unwrap();
        assert_eq!(g.sorted_edges(), vec![vec![0, 1, 2], vec![1, 2, 3]]);
        assert!(g.has_edge(&[1, 0, 2]));
        assert!(!g.has_edge(&[0, 0, 2]));
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(matches!(
            Hypergraph::new(2, 3, [[0, 0]]),
            Err(StructureError::RepeatedVertex(_))
        ));
        assert!(matches!(
            Hypergraph::new(2, 3, [[0, 3]]),
            Err(StructureError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            Hypergraph::new(2, 3, [[0, 1], [1, 0]]),
            Err(StructureError::DuplicateEdge(_))
        ));
        assert!(matches!(
            Hypergraph::new(3, 3, [vec![0, 1]]),
            Err(StructureError::ArityMismatch { .. })
        ));
        assert!(Hypergraph::empty(1, 3).is_err());
    }

    #[test]
    fn push_vertex_keeps_adjacency_consistent() {
        let mut g = Hypergraph::graph(2, &[(0, 1)]).unwrap();
        let v = g.push_vertex();
        assert_eq!(v, 2);
        g.insert_edge(vec![1, 2]);
        assert!(g.adjacent(2, 1));
        assert!(!g.adjacent(0, 2));
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn induced_relabels_in_given_order() {
        let c5 = Hypergraph::graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let sub = c5.induced(&[4, 0, 2]).unwrap();
        assert_eq!(sub.sorted_edges(), vec![vec![0, 1]]);
    }

    #[test]
    fn zero_vertices_is_legal() {
        let g = Hypergraph::empty(2, 0).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(g.non_edges().is_empty());
    }
}
