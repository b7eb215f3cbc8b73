use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{to_value, Certification, InputRecord, Relation, Theorem, WitnessError, WitnessReport};
use crate::structures::{path_from_index, Feq2Structure};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PathSelection {
    All,
    /// `count` distinct paths chosen uniformly by `seed`.
    Sample {
        seed: u64,
        count: usize,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(super) struct Tp2Params {
    pub k: usize,
    pub paths: PathSelection,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(super) struct RowPair {
    pub row: usize,
    pub columns: [usize; 2],
    /// A parameter placing both `b_{i,j}` and `b_{i,j'}` with `c_i`, if any.
    pub clash: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(super) struct PathCheck {
    pub index: usize,
    pub path: Vec<usize>,
    /// A parameter `a` with `E_a(b_{i,σ(i)}, c_i)` for every row.
    pub parameter: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(super) struct Tp2Payload {
    pub rows: Vec<RowPair>,
    pub paths: Vec<PathCheck>,
}

fn cell(k: usize, i: usize, j: usize) -> usize {
    i * k + j
}

fn target(k: usize, i: usize) -> usize {
    k * k + i
}

fn realizes(f: &Feq2Structure, k: usize, z: usize, path: &[usize]) -> bool {
    path.iter()
        .enumerate()
        .all(|(i, &j)| f.same_class(z, cell(k, i, j), target(k, i)))
}

fn find_realizer(f: &Feq2Structure, k: usize, path: &[usize]) -> Option<usize> {
    (0..f.parameters()).find(|&z| realizes(f, k, z, path))
}

fn row_pairs(f: &Feq2Structure, k: usize) -> Vec<RowPair> {
    let mut out = Vec::new();
    for i in 0..k {
        for j in 0..k {
            for j2 in j + 1..k {
                let c = target(k, i);
                let clash = (0..f.parameters())
                    .find(|&z| f.same_class(z, cell(k, i, j), c) && f.same_class(z, cell(k, i, j2), c));
                out.push(RowPair {
                    row: i,
                    columns: [j, j2],
                    clash,
                });
            }
        }
    }
    out
}

fn path_indices(k: usize, selection: &PathSelection) -> Result<Vec<usize>, WitnessError> {
    let total = (k as u32)
        .checked_pow(k as u32)
        .filter(|&t| t <= 1 << 24)
        .ok_or_else(|| WitnessError::InvalidInput(format!("k = {k} has too many paths")))? as usize;
    Ok(match selection {
        PathSelection::All => (0..total).collect(),
        PathSelection::Sample { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut picked = rand::seq::index::sample(&mut rng, total, (*count).min(total)).into_vec();
            picked.sort_unstable();
            picked
        }
    })
}

fn certs(k: usize, rows: &[RowPair], consistent: usize, checked: usize) -> Vec<Certification> {
    let inconsistent = rows.iter().filter(|p| p.clash.is_none()).count();
    vec![
        Certification::count(
            "same-row pairs 2-inconsistent",
            inconsistent,
            Relation::Eq,
            k * k * (k - 1) / 2,
        ),
        Certification::count("checked paths consistent", consistent, Relation::Eq, checked),
    ]
}

fn check_grid(f: &Feq2Structure, k: usize) -> Result<(), WitnessError> {
    let needed = k * k + k;
    if k == 0 || f.objects() < needed {
        return Err(WitnessError::GridTooSmall {
            k,
            needed,
            found: f.objects(),
        });
    }
    Ok(())
}

/// Checks the array `E(x; b_{i,j}, c_i)` with objects `b_{i,j} = ik + j` and
/// `c_i = k² + i`: rows 2-inconsistent, selected paths realized by a
/// parameter.
pub fn tp2_witness(f: &Feq2Structure, k: usize, selection: &PathSelection) -> Result<WitnessReport, WitnessError> {
    check_grid(f, k)?;
    let mut report = WitnessReport::new(Theorem::Tp2);
    report.inputs.insert("structure".into(), InputRecord::of(f));
    report.params = to_value(&Tp2Params {
        k,
        paths: selection.clone(),
    });
    let rows = row_pairs(f, k);
    let paths: Vec<PathCheck> = path_indices(k, selection)?
        .into_iter()
        .map(|index| {
            let path = path_from_index(k, index);
            let parameter = find_realizer(f, k, &path);
            PathCheck { index, path, parameter }
        })
        .collect();
    for p in rows.iter().filter(|p| p.clash.is_some()) {
        report.log.push(format!(
            "row {} columns {:?} share a class under {:?}",
            p.row, p.columns, p.clash
        ));
    }
    for p in paths.iter().filter(|p| p.parameter.is_none()) {
        report.log.push(format!("path {:?} is not realized", p.path));
    }
    let consistent = paths.iter().filter(|p| p.parameter.is_some()).count();
    report.log.push(format!(
        "{} row pairs, {consistent} of {} paths realized",
        rows.len(),
        paths.len()
    ));
    report.certified = certs(k, &rows, consistent, paths.len());
    report.witness = to_value(&Tp2Payload { rows, paths });
    Ok(report)
}

pub(super) fn recompute(
    params: &Tp2Params,
    payload: &Tp2Payload,
    f: &Feq2Structure,
) -> Result<Vec<Certification>, WitnessError> {
    let k = params.k;
    check_grid(f, k)?;
    let indices = path_indices(k, &params.paths)?;
    if payload.paths.iter().map(|p| p.index).ne(indices.iter().copied()) {
        return Err(WitnessError::InvalidInput(
            "checked paths differ from the selection".into(),
        ));
    }
    let mut consistent = 0;
    for p in &payload.paths {
        let path = path_from_index(k, p.index);
        let ok = match p.parameter {
            Some(z) => z < f.parameters() && realizes(f, k, z, &path),
            None => find_realizer(f, k, &path).is_some(),
        };
        // A reported failure that a scan contradicts counts, exposing it.
        consistent += ok as usize;
    }
    Ok(certs(k, &row_pairs(f, k), consistent, payload.paths.len()))
}
