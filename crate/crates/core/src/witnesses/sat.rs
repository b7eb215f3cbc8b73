use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{to_value, Certification, InputRecord, Relation, Theorem, WitnessError, WitnessReport};
use crate::logic::{evaluate, Assignment, EvalError};
use crate::measures::phi_r;
use crate::rational::{from_int, Rational};
use crate::structures::Hypergraph;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub(super) enum SatParams {
    Single {
        model: Vec<usize>,
        params: Vec<usize>,
    },
    Aggregate {
        model: Vec<usize>,
        params_per_trial: usize,
        trials: usize,
        seed: u64,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(super) struct SatRun {
    pub params: Vec<usize>,
    pub found: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub(super) enum SatPayload {
    Single {
        found: Option<Vec<usize>>,
    },
    Aggregate {
        runs: Vec<SatRun>,
        successes: usize,
        #[serde(with = "crate::rational::serde_rational")]
        success_rate: Rational,
    },
}

/// `φ_R(ā; b)` for every `b` in `params`.
fn realizes(ambient: &Hypergraph, tuple: &[usize], params: &[usize]) -> Result<bool, EvalError> {
    let phi = phi_r(ambient.arity());
    for &b in params {
        if !evaluate(ambient, &phi, &Assignment::new(tuple, &[b]))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First (r−1)-subset of `model`, in lexicographic order of positions, that
/// is in no `R`-edge with any parameter.
pub fn search_sat_tuple(
    ambient: &Hypergraph,
    model: &[usize],
    params: &[usize],
) -> Result<Option<Vec<usize>>, WitnessError> {
    let k = ambient.arity() - 1;
    for combo in model.iter().copied().combinations(k) {
        if realizes(ambient, &combo, params)? {
            return Ok(Some(combo));
        }
    }
    Ok(None)
}

fn check(ambient: &Hypergraph, model: &[usize], params: &[usize]) -> Result<(), WitnessError> {
    let n = ambient.vertex_count();
    if ambient.arity() < 2 {
        return Err(WitnessError::InvalidInput("arity must be at least 2".into()));
    }
    if let Some(v) = model.iter().chain(params).find(|&&v| v >= n) {
        return Err(WitnessError::InvalidInput(format!("vertex {v} is not in the ambient")));
    }
    let mut sorted = model.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(WitnessError::InvalidInput("the model lists a vertex twice".into()));
    }
    Ok(())
}

fn in_model(model: &[usize], tuple: &[usize]) -> bool {
    tuple.iter().all(|v| model.contains(v))
}

fn single_certs(
    ambient: &Hypergraph,
    model: &[usize],
    params: &[usize],
    found: &[usize],
) -> Result<Vec<Certification>, WitnessError> {
    let phi = phi_r(ambient.arity());
    let mut satisfied = 0;
    for &b in params {
        if evaluate(ambient, &phi, &Assignment::new(found, &[b]))? {
            satisfied += 1;
        }
    }
    Ok(vec![
        Certification::flag(
            "witness lies in M",
            in_model(model, found) && found.len() + 1 == ambient.arity(),
        ),
        Certification::count("parameters b with phi_R(a; b)", satisfied, Relation::Eq, params.len()),
    ])
}

/// Looks for `ā ∈ M^{r−1}` with distinct entries and `¬R(ā, b_i)` for every
/// parameter. Not finding one is a result, not an error.
pub fn sat_probe(ambient: &Hypergraph, model: &[usize], params: &[usize]) -> Result<WitnessReport, WitnessError> {
    check(ambient, model, params)?;
    let mut report = WitnessReport::new(Theorem::Sat);
    report.inputs.insert("ambient".into(), InputRecord::of(ambient));
    report.params = to_value(&SatParams::Single {
        model: model.to_vec(),
        params: params.to_vec(),
    });
    let found = search_sat_tuple(ambient, model, params)?;
    match &found {
        Some(t) => {
            report
                .log
                .push(format!("{t:?} realizes all {} instances", params.len()));
            report.certified = single_certs(ambient, model, params, t)?;
        }
        None => report.log.push("no tuple in M realizes every instance".into()),
    }
    report.witness = to_value(&SatPayload::Single { found });
    Ok(report)
}

/// Runs [`sat_probe`]'s search on `trials` parameter sets of size
/// `params_per_trial`, drawn uniformly (with replacement) from all vertices.
pub fn sat_probe_aggregate(
    ambient: &Hypergraph,
    model: &[usize],
    params_per_trial: usize,
    trials: usize,
    seed: u64,
) -> Result<WitnessReport, WitnessError> {
    check(ambient, model, &[])?;
    if trials == 0 {
        return Err(WitnessError::InvalidInput("at least one trial is needed".into()));
    }
    let n = ambient.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = WitnessReport::new(Theorem::Sat);
    report.inputs.insert("ambient".into(), InputRecord::of(ambient));
    report.params = to_value(&SatParams::Aggregate {
        model: model.to_vec(),
        params_per_trial,
        trials,
        seed,
    });
    let mut runs = Vec::with_capacity(trials);
    for _ in 0..trials {
        let params: Vec<usize> = (0..params_per_trial).map(|_| rng.gen_range(0..n)).collect();
        let found = search_sat_tuple(ambient, model, &params)?;
        runs.push(SatRun { params, found });
    }
    let successes = runs.iter().filter(|r| r.found.is_some()).count();
    report
        .log
        .push(format!("{successes} of {trials} parameter sets realized in M"));
    report.certified = aggregate_certs(ambient, model, &runs)?;
    report.witness = to_value(&SatPayload::Aggregate {
        successes,
        success_rate: from_int(successes) / from_int(trials),
        runs,
    });
    Ok(report)
}

/// Found tuples are re-checked; empty runs are re-searched.
fn aggregate_certs(ambient: &Hypergraph, model: &[usize], runs: &[SatRun]) -> Result<Vec<Certification>, WitnessError> {
    let (mut found, mut confirmed, mut empty, mut exhausted) = (0, 0, 0, 0);
    for run in runs {
        match &run.found {
            Some(t) => {
                found += 1;
                let ok = t.len() + 1 == ambient.arity() && in_model(model, t) && realizes(ambient, t, &run.params)?;
                confirmed += ok as usize;
            }
            None => {
                empty += 1;
                exhausted += search_sat_tuple(ambient, model, &run.params)?.is_none() as usize;
            }
        }
    }
    Ok(vec![
        Certification::count("reported witnesses verified", confirmed, Relation::Eq, found),
        Certification::count(
            "empty runs confirmed by exhaustive search",
            exhausted,
            Relation::Eq,
            empty,
        ),
    ])
}

pub(super) fn recompute(
    params: &SatParams,
    payload: &SatPayload,
    ambient: &Hypergraph,
) -> Result<Vec<Certification>, WitnessError> {
    match (params, payload) {
        (SatParams::Single { model, params }, SatPayload::Single { found }) => {
            check(ambient, model, params)?;
            match found {
                Some(t) => single_certs(ambient, model, params, t),
                None => Ok(Vec::new()),
            }
        }
        (SatParams::Aggregate { model, .. }, SatPayload::Aggregate { runs, .. }) => {
            check(ambient, model, &[])?;
            aggregate_certs(ambient, model, runs)
        }
        _ => Err(WitnessError::InvalidInput("params and payload modes differ".into())),
    }
}
