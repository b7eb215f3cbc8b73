use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{to_value, Certification, InputRecord, Relation, Theorem, WitnessError, WitnessReport};
use crate::coloring::{greedy_coloring, weight_of, Coloring, WeightedHypergraph};
use crate::logic::{evaluate, Assignment};
use crate::measures::phi_r;
use crate::rational::{factorial, from_int, pow, Rational};
use crate::structures::{add_vertex_with_links, is_free, Hypergraph, StructureError};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(super) struct AdversaryParams {
    pub r: usize,
    pub s: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(super) struct AdversaryPayload {
    pub tuples: Vec<Vec<usize>>,
    /// Tuples with pairwise distinct entries (`t ≤ m`).
    pub distinct: usize,
    /// `V`, the entries of the distinct tuples, ascending.
    pub vertices: Vec<usize>,
    /// `w(σ) = |I_σ|` for each nonempty `I_σ`, keyed by ambient vertices.
    pub weights: Vec<(Vec<usize>, usize)>,
    /// `χ(V[i])`, colors `0..r-1`.
    pub coloring: Vec<usize>,
    /// `Σ`: the `(r-1)`-sets split by `χ`.
    pub split: Vec<Vec<usize>>,
    pub b: usize,
    /// Indices `t` (0-based) with `¬φ(ā^t; b)`.
    pub violated: Vec<usize>,
}

/// `ε_r = (r−1)!·(r−1)^{1−r}`.
pub fn epsilon_r(r: usize) -> Rational {
    assert!(r >= 2, "epsilon_r needs r >= 2");
    factorial(r - 1) / pow(&from_int(r - 1), r as i32 - 1)
}

fn is_distinct(t: &[usize]) -> bool {
    let mut sorted = t.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

struct Weighted {
    distinct: usize,
    vertices: Vec<usize>,
    weights: BTreeMap<Vec<usize>, usize>,
}

fn weigh(tuples: &[Vec<usize>]) -> Weighted {
    let mut weights: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut distinct = 0;
    for t in tuples.iter().filter(|t| is_distinct(t)) {
        distinct += 1;
        let mut sigma = t.clone();
        sigma.sort_unstable();
        *weights.entry(sigma).or_default() += 1;
    }
    let mut vertices: Vec<usize> = weights.keys().flatten().copied().collect();
    vertices.sort_unstable();
    vertices.dedup();
    Weighted {
        distinct,
        vertices,
        weights,
    }
}

fn weighted_graph(w: &Weighted, r: usize) -> Result<WeightedHypergraph, WitnessError> {
    let index: BTreeMap<usize, usize> = w.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let entries = w
        .weights
        .iter()
        .map(|(sigma, &c)| (sigma.iter().map(|v| index[v]).collect(), from_int(c)));
    Ok(WeightedHypergraph::new(w.vertices.len(), r - 1, entries)?)
}

fn split_sets(w: &Weighted, coloring: &[usize]) -> Vec<Vec<usize>> {
    let color: BTreeMap<usize, usize> = w.vertices.iter().copied().zip(coloring.iter().copied()).collect();
    w.weights
        .keys()
        .filter(|sigma| {
            let mut cs: Vec<usize> = sigma.iter().map(|v| color[v]).collect();
            cs.sort_unstable();
            cs.windows(2).all(|p| p[0] != p[1])
        })
        .cloned()
        .collect()
}

fn violations(extended: &Hypergraph, tuples: &[Vec<usize>], b: usize, r: usize) -> Result<Vec<usize>, WitnessError> {
    let phi = phi_r(r);
    let mut out = Vec::new();
    for (t, a) in tuples.iter().enumerate() {
        let params = [b];
        if !evaluate(extended, &phi, &Assignment::new(a, &params))? {
            out.push(t);
        }
    }
    Ok(out)
}

fn certs(
    w: &Weighted,
    chi_weight: Rational,
    extended: &Hypergraph,
    violated: usize,
    n: usize,
    r: usize,
    s: usize,
) -> Result<Vec<Certification>, WitnessError> {
    let eps = epsilon_r(r);
    Ok(vec![
        Certification::new(
            "w(chi) >= eps_r*m",
            chi_weight,
            Relation::Ge,
            &eps * from_int(w.distinct),
        ),
        Certification::flag("extended ambient is K^r_s-free", is_free(extended, s)?),
        Certification::new(
            "violated fraction >= eps_r",
            from_int(violated) / from_int(n),
            Relation::Ge,
            eps,
        ),
    ])
}

fn check_tuples(ambient: &Hypergraph, tuples: &[Vec<usize>], r: usize) -> Result<(), WitnessError> {
    if tuples.is_empty() {
        return Err(WitnessError::InvalidInput("no tuples to defeat".into()));
    }
    for t in tuples {
        if t.len() != r - 1 || t.iter().any(|&v| v >= ambient.vertex_count()) {
            return Err(WitnessError::InvalidInput(format!(
                "tuple {t:?} is not an (r-1)-tuple of ambient vertices"
            )));
        }
    }
    Ok(())
}

/// Finds `b` with `¬φ_R(ā^t; b)` for at least an `ε_r` fraction of the tuples,
/// by extending `ambient` with one vertex linked to the sets a greedy
/// `(r−1)`-coloring splits.
pub fn adversary_witness(tuples: &[Vec<usize>], ambient: &Hypergraph, s: usize) -> Result<WitnessReport, WitnessError> {
    let r = ambient.arity();
    if r < 3 {
        return Err(WitnessError::InvalidInput(format!(
            "the ambient must have arity at least 3, got {r}"
        )));
    }
    check_tuples(ambient, tuples, r)?;
    let mut report = WitnessReport::new(Theorem::Adversary);
    report.inputs.insert("ambient".into(), InputRecord::of(ambient));
    report.params = to_value(&AdversaryParams { r, s });

    let w = weigh(tuples);
    let h = weighted_graph(&w, r)?;
    let chi = greedy_coloring(&h);
    let chi_weight = weight_of(&h, &chi)?;
    let split = split_sets(&w, &chi.0);
    report.log.push(format!(
        "{} of {} tuples have distinct entries; |V| = {}, |Sigma| = {}",
        w.distinct,
        tuples.len(),
        w.vertices.len(),
        split.len()
    ));

    let extended = add_vertex_with_links(ambient, &split, s).map_err(|e| match e {
        StructureError::FreenessViolation { witness } => {
            WitnessError::Internal(format!("the split links created a clique {witness:?}"))
        }
        other => other.into(),
    })?;
    let b = ambient.vertex_count();
    let violated = violations(&extended, tuples, b, r)?;
    report.certified = certs(&w, chi_weight, &extended, violated.len(), tuples.len(), r, s)?;
    if !report.certified[1].holds {
        return Err(WitnessError::Internal(
            "the extension failed its freeness re-check".into(),
        ));
    }
    report.log.push(format!(
        "b = {b} violates {} of {} tuples",
        violated.len(),
        tuples.len()
    ));
    report.witness = to_value(&AdversaryPayload {
        tuples: tuples.to_vec(),
        distinct: w.distinct,
        vertices: w.vertices.clone(),
        weights: w.weights.iter().map(|(k, &v)| (k.clone(), v)).collect(),
        coloring: chi.0,
        split,
        b,
        violated,
    });
    Ok(report)
}

pub(super) fn recompute(
    params: &AdversaryParams,
    payload: &AdversaryPayload,
    ambient: &Hypergraph,
) -> Result<Vec<Certification>, WitnessError> {
    let r = params.r;
    if ambient.arity() != r || r < 3 {
        return Err(WitnessError::InvalidInput(format!(
            "ambient arity {} does not match r = {r}",
            ambient.arity()
        )));
    }
    check_tuples(ambient, &payload.tuples, r)?;
    let w = weigh(&payload.tuples);
    if payload.coloring.len() != w.vertices.len() {
        return Err(WitnessError::InvalidInput("the coloring does not cover V".into()));
    }
    let h = weighted_graph(&w, r)?;
    let chi_weight = weight_of(&h, &Coloring(payload.coloring.clone()))?;
    let split = split_sets(&w, &payload.coloring);
    if split != payload.split {
        return Err(WitnessError::InvalidInput("Sigma does not match the coloring".into()));
    }
    let b = ambient.vertex_count();
    if payload.b != b {
        return Err(WitnessError::InvalidInput(format!("b should be the new vertex {b}")));
    }
    let mut edges = ambient.sorted_edges();
    edges.extend(split.iter().map(|sigma| {
        let mut e = sigma.clone();
        e.push(b);
        e
    }));
    let extended = Hypergraph::new(r, b + 1, edges)?;
    let violated = violations(&extended, &payload.tuples, b, r)?;
    certs(
        &w,
        chi_weight,
        &extended,
        violated.len(),
        payload.tuples.len(),
        r,
        params.s,
    )
}
