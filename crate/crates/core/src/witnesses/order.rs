use serde::{Deserialize, Serialize};

use super::{to_value, Certification, InputRecord, Relation, Theorem, WitnessError, WitnessReport};
use crate::structures::{add_vertex_with_links, is_free, Hypergraph, StructureError};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(super) struct OrderParams {
    pub s: usize,
    pub q: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(super) struct OrderPayload {
    pub base_vertices: usize,
    /// `a_1, …, a_{2q}`: fresh, pairwise non-adjacent.
    pub sequence: Vec<usize>,
    pub b: Option<usize>,
    pub links: Vec<usize>,
}

fn certs(extended: &Hypergraph, payload: &OrderPayload, s: usize) -> Result<Vec<Certification>, StructureError> {
    let Some(b) = payload.b else {
        return Ok(Vec::new());
    };
    let seq = &payload.sequence;
    let pairs = seq.len() * seq.len().saturating_sub(1) / 2;
    let mut independent = 0;
    for (i, &u) in seq.iter().enumerate() {
        independent += seq[i + 1..].iter().filter(|&&v| !extended.adjacent(u, v)).count();
    }
    let alternating = seq
        .iter()
        .enumerate()
        .filter(|&(i, &a)| extended.adjacent(a, b) == ((i + 1) % 2 == 0))
        .count();
    Ok(vec![
        Certification::count("sequence is pairwise non-adjacent", independent, Relation::Eq, pairs),
        Certification::count("E(a_i,b) iff i is even", alternating, Relation::Eq, seq.len()),
        Certification::flag("extension is K_s-free", is_free(extended, s)?),
    ])
}

/// Appends `2q` isolated vertices `a_1, …, a_{2q}` and a vertex `b` adjacent
/// to exactly the even-indexed ones.
pub fn order_witness(ambient: &Hypergraph, s: usize, q: usize) -> Result<WitnessReport, WitnessError> {
    if ambient.arity() != 2 {
        return Err(WitnessError::InvalidInput("the ambient must be a graph".into()));
    }
    let mut report = WitnessReport::new(Theorem::Order);
    report.inputs.insert("ambient".into(), InputRecord::of(ambient));
    report.params = to_value(&OrderParams { s, q });
    let n = ambient.vertex_count();
    if q == 0 {
        report.log.push("q = 0: nothing to extend".into());
        report.witness = to_value(&OrderPayload {
            base_vertices: n,
            sequence: Vec::new(),
            b: None,
            links: Vec::new(),
        });
        return Ok(report);
    }

    let mut extended = ambient.clone();
    let sequence: Vec<usize> = (0..2 * q).map(|_| extended.push_vertex()).collect();
    let links: Vec<usize> = sequence.iter().skip(1).step_by(2).copied().collect();
    let link_sets: Vec<[usize; 1]> = links.iter().map(|&a| [a]).collect();
    let extended = add_vertex_with_links(&extended, &link_sets, s).map_err(|e| match e {
        StructureError::FreenessViolation { witness } => {
            WitnessError::Internal(format!("linking b to the even vertices created a clique {witness:?}"))
        }
        other => other.into(),
    })?;
    let payload = OrderPayload {
        base_vertices: n,
        b: Some(n + 2 * q),
        sequence,
        links,
    };
    report.log.push(format!(
        "a_1..a_{} = {}..{}, b = {}",
        2 * q,
        n,
        n + 2 * q - 1,
        n + 2 * q
    ));
    report.certified = certs(&extended, &payload, s)?;
    report.witness = to_value(&payload);
    Ok(report)
}

pub(super) fn recompute(
    params: &OrderParams,
    payload: &OrderPayload,
    ambient: &Hypergraph,
) -> Result<Vec<Certification>, WitnessError> {
    let n = ambient.vertex_count();
    let Some(b) = payload.b else {
        return Ok(Vec::new());
    };
    let fresh: Vec<usize> = (n..n + 2 * params.q).collect();
    if payload.base_vertices != n || payload.sequence != fresh || b != n + 2 * params.q {
        return Err(WitnessError::InvalidInput(
            "payload vertices do not extend the ambient".into(),
        ));
    }
    if payload.links.iter().any(|&a| !fresh.contains(&a)) {
        return Err(WitnessError::InvalidInput("b links outside the sequence".into()));
    }
    let mut edges = ambient.sorted_edges();
    edges.extend(payload.links.iter().map(|&a| vec![a, b]));
    let extended = Hypergraph::new(2, b + 1, edges)?;
    Ok(certs(&extended, payload, params.s)?)
}
