use super::clique::check_forbidden_size;
use super::hypergraph::Hypergraph;
use super::StructureError;

/// Returns `graph` plus a new vertex `v* = n` whose edges are
/// `{σ ∪ {v*} : σ ∈ links}`, provided the result is still K^r_s-free.
///
/// Every link must be an (r-1)-set of existing vertices. A clique through `v*`
/// is looked for first; the whole result is then checked, so a host that
/// already contained a K^r_s is reported too.
pub fn add_vertex_with_links<L: AsRef<[usize]>>(
    graph: &Hypergraph,
    links: &[L],
    s: usize,
) -> Result<Hypergraph, StructureError> {
    check_forbidden_size(graph, s)?;
    let r = graph.arity();
    let mut extended = graph.clone();
    let v = extended.push_vertex();
    for link in links {
        let link = link.as_ref();
        if link.len() != r - 1 {
            return Err(StructureError::InvalidLink(link.to_vec()));
        }
        let mut edge = link.to_vec();
        edge.push(v);
        edge.sort_unstable();
        if edge.windows(2).any(|w| w[0] == w[1]) || link.iter().any(|&u| u >= v) {
            return Err(StructureError::InvalidLink(link.to_vec()));
        }
        extended.insert_edge(edge);
    }
    if let Some(witness) = extended.find_clique_through(&[v], s) {
        return Err(StructureError::FreenessViolation { witness });
    }
    if let Some(witness) = extended.find_clique(s) {
        return Err(StructureError::FreenessViolation { witness });
    }
    Ok(extended)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::clique::is_free;

    #[test]
    fn links_to_even_vertices() {
        let g = Hypergraph::empty(2, 4).unwrap();
        let h = add_vertex_with_links(&g, &[[0], [2]], 3).unwrap();
        assert_eq!(h.vertex_count(), 5);
        for i in 0..4 {
            assert_eq!(h.adjacent(i, 4), i % 2 == 0);
        }
    }

    #[test]
    fn no_links_adds_isolated_vertex() {
        let g = Hypergraph::complete(3, 4).unwrap();
        let h = add_vertex_with_links::<[usize; 2]>(&g, &[], 5).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.degree(4), 0);
    }

    #[test]
    fn triangle_is_reported() {
        let g = Hypergraph::graph(2, &[(0, 1)]).unwrap();
        match add_vertex_with_links(&g, &[[0], [1]], 3) {
            Err(StructureError::FreenessViolation { witness }) => assert_eq!(witness, vec![0, 1, 2]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_links() {
        let g = Hypergraph::empty(3, 3).unwrap();
        assert!(matches!(
            add_vertex_with_links(&g, &[vec![0]], 4),
            Err(StructureError::InvalidLink(_))
        ));
        assert!(matches!(
            add_vertex_with_links(&g, &[vec![1, 1]], 4),
            Err(StructureError::InvalidLink(_))
        ));
        assert!(matches!(
            add_vertex_with_links(&g, &[vec![0, 7]], 4),
            Err(StructureError::InvalidLink(_))
        ));
    }

    #[test]
    fn result_is_always_free() {
        let g = crate::structures::random_maximal_free(12, 3, 4, 5).unwrap();
        let links: Vec<Vec<usize>> = vec![vec![0, 1], vec![2, 3], vec![4, 5]];
        if let Ok(h) = add_vertex_with_links(&g, &links, 4) {
            assert!(is_free(&h, 4).unwrap());
        }
    }
}
