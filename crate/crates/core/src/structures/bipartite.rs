use std::collections::BTreeSet;

use super::StructureError;

/// Bipartite graph with parts `P = 0..left` and `Q = 0..right`; edges only
/// cross the parts and are stored as `(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Which part a vertex index refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Self {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize, edges: &[(usize, usize)]) -> Result<Self, StructureError> {
        let mut set = BTreeSet::new();
        for &(p, q) in edges {
            if p >= left || q >= right {
                return Err(StructureError::VertexOutOfRange {
                    vertex: if p >= left { p } else { q },
                    vertex_count: if p >= left { left } else { right },
                });
            }
            if !set.insert((p, q)) {
                return Err(StructureError::DuplicateEdge(vec![p, q]));
            }
        }
        Ok(Self {
            left,
            right,
            edges: set,
        })
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn part_size(&self, side: Side) -> usize {
        match side {
            Side::Left => self.left,
            Side::Right => self.right,
        }
    }

    pub fn has_edge(&self, p: usize, q: usize) -> bool {
        self.edges.contains(&(p, q))
    }

    /// Adjacency between vertex `u` on `side` and vertex `v` on the other side.
    pub fn adjacent_across(&self, side: Side, u: usize, v: usize) -> bool {
        match side {
            Side::Left => self.has_edge(u, v),
            Side::Right => self.has_edge(v, u),
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }
}
