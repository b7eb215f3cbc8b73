//! Parameterized equivalence relations with classes of size two.
//!
//! Two sorts: objects `0..objects` and parameters `0..parameters`. Each
//! parameter `z` carries a partition of the objects into pairs; when the
//! object count is odd one block per parameter is a singleton.

use super::StructureError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Feq2Structure {
    objects: usize,
    /// `mates[z][o]`: the other member of `o`'s class under `z`, `None` for the
    /// singleton block.
    mates: Vec<Vec<Option<usize>>>,
}

impl Feq2Structure {
    /// `classes[z]` lists the blocks of parameter `z`. Blocks must be disjoint,
    /// cover the objects, and have two elements, except one singleton when the
    /// object count is odd.
    pub fn new(objects: usize, classes: &[Vec<Vec<usize>>]) -> Result<Self, StructureError> {
        let mut mates = Vec::with_capacity(classes.len());
        for (z, blocks) in classes.iter().enumerate() {
            let invalid = |msg: String| StructureError::InvalidFeq2(format!("parameter {z}: {msg}"));
            let mut row: Vec<Option<Option<usize>>> = vec![None; objects];
            let mut singletons = 0;
            for block in blocks {
                for &o in block {
                    if o >= objects {
                        return Err(invalid(format!("object {o} out of range")));
                    }
                    if row[o].is_some() {
                        return Err(invalid(format!("object {o} in two blocks")));
                    }
                }
                match block.as_slice() {
                    &[a, b] if a != b => {
                        row[a] = Some(Some(b));
                        row[b] = Some(Some(a));
                    }
                    &[a] => {
                        singletons += 1;
                        row[a] = Some(None);
                    }
                    other => return Err(invalid(format!("block {other:?} is not a pair"))),
                }
            }
            if singletons > objects % 2 {
                return Err(invalid(format!("{singletons} singleton blocks for {objects} objects")));
            }
            let row: Option<Vec<Option<usize>>> = row.into_iter().collect();
            let row = row.ok_or_else(|| invalid("blocks do not cover the objects".into()))?;
            mates.push(row);
        }
        Ok(Self { objects, mates })
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn parameters(&self) -> usize {
        self.mates.len()
    }

    /// The classmate of `object` under parameter `z`.
    pub fn mate(&self, z: usize, object: usize) -> Option<usize> {
        self.mates[z][object]
    }

    /// `E_z(a, b)`: reflexive, and true for the two members of a block.
    pub fn same_class(&self, z: usize, a: usize, b: usize) -> bool {
        a == b || self.mates[z][a] == Some(b)
    }

    /// Blocks of `z`, each sorted, in order of their least element.
    pub fn classes(&self, z: usize) -> Vec<Vec<usize>> {
        (0..self.objects)
            .filter_map(|o| match self.mates[z][o] {
                Some(m) if m > o => Some(vec![o, m]),
                Some(_) => None,
                None => Some(vec![o]),
            })
            .collect()
    }

    /// Grid for the TP₂ array: objects `b_{i,j} = i*k + j` and `c_i = k² + i`
    /// for `i, j < k`, plus one parameter per path σ in `paths` whose classes
    /// include `{b_{i,σ(i)}, c_i}` for every row `i`. Remaining objects are
    /// paired in index order.
    pub fn tp2_grid_with_paths(k: usize, paths: &[Vec<usize>]) -> Result<Self, StructureError> {
        let objects = k * k + k;
        let mut classes = Vec::with_capacity(paths.len());
        for path in paths {
            if path.len() != k || path.iter().any(|&j| j >= k) {
                return Err(StructureError::InvalidFeq2(format!(
                    "path {path:?} is not a map [k] -> [k]"
                )));
            }
            let mut used = vec![false; objects];
            let mut blocks = Vec::with_capacity(objects / 2);
            for (i, &j) in path.iter().enumerate() {
                let (b, c) = (i * k + j, k * k + i);
                used[b] = true;
                used[c] = true;
                blocks.push(vec![b, c]);
            }
            let leftover: Vec<usize> = (0..objects).filter(|&o| !used[o]).collect();
            for pair in leftover.chunks(2) {
                blocks.push(pair.to_vec());
            }
            classes.push(blocks);
        }
        Self::new(objects, &classes)
    }

    /// Grid realizing all `k^k` paths.
    pub fn tp2_grid(k: usize) -> Result<Self, StructureError> {
        let total = (k as u32)
            .checked_pow(k as u32)
            .filter(|&t| t <= 1 << 20)
            .ok_or_else(|| StructureError::InvalidFeq2(format!("k = {k} has too many paths to realize")))?;
        let paths: Vec<Vec<usize>> = (0..total as usize).map(|index| path_from_index(k, index)).collect();
        Self::tp2_grid_with_paths(k, &paths)
    }
}

/// The `index`-th map `[k] → [k]` in base-k digit order (row 0 most significant).
pub fn path_from_index(k: usize, mut index: usize) -> Vec<usize> {
    let mut path = vec![0; k];
    for slot in path.iter_mut().rev() {
        *slot = index % k.max(1);
        index /= k.max(1);
    }
    path
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_blocks() {
        let ok = Feq2Structure::new(4, &[vec![vec![0, 1], vec![2, 3]]]).unwrap();
        assert!(ok.same_class(0, 1, 0));
        assert!(ok.same_class(0, 2, 2));
        assert!(!ok.same_class(0, 1, 2));
        assert!(Feq2Structure::new(4, &[vec![vec![0, 1]]]).is_err());
        assert!(Feq2Structure::new(4, &[vec![vec![0, 1, 2], vec![3]]]).is_err());
        assert!(Feq2Structure::new(4, &[vec![vec![0], vec![1], vec![2, 3]]]).is_err());
        assert!(Feq2Structure::new(4, &[vec![vec![0, 1], vec![1, 2], vec![3]]]).is_err());
        let odd = Feq2Structure::new(3, &[vec![vec![0, 2], vec![1]]]).unwrap();
        assert_eq!(odd.mate(0, 1), None);
        assert_eq!(odd.classes(0), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn grid_realizes_every_path() {
        let k = 3;
        let f = Feq2Structure::tp2_grid(k).unwrap();
        assert_eq!(f.objects(), 12);
        assert_eq!(f.parameters(), 27);
        for z in 0..f.parameters() {
            let path = path_from_index(k, z);
            for (i, &j) in path.iter().enumerate() {
                assert_eq!(f.mate(z, k * k + i), Some(i * k + j));
            }
        }
    }

    #[test]
    fn paths_enumerate_in_digit_order() {
        assert_eq!(path_from_index(2, 0), vec![0, 0]);
        assert_eq!(path_from_index(2, 1), vec![0, 1]);
        assert_eq!(path_from_index(2, 2), vec![1, 0]);
        assert_eq!(path_from_index(1, 0), vec![0]);
    }
}
