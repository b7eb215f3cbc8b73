use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{to_value, Certification, InputRecord, Relation, Theorem, WitnessError, WitnessReport};
use crate::logic::{analyze_phi, evaluate, parse_formula, Analysis, Assignment, PhiPartition};
use crate::measures::{sup_error, ApproxReport, ParamDomain, ScanMode, Target, TypeOracle, MAX_EXHAUSTIVE_DOMAIN};
use crate::rational::{from_int, Rational};
use crate::structures::{alpha_s, embed_search, is_free, is_induced_embedding, EmbedOutcome, Hypergraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamBudget {
    pub alpha: u64,
    pub embed: u64,
}

impl Default for FamBudget {
    fn default() -> Self {
        Self {
            alpha: crate::structures::DEFAULT_ALPHA_BUDGET,
            embed: 200_000_000,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(super) struct FamParams {
    pub phi: String,
    pub param_arity: usize,
    #[serde(with = "crate::rational::serde_rational")]
    pub epsilon: Rational,
    pub s: usize,
    pub budget: FamBudget,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(super) struct FamPayload {
    /// The formula actually approximated: `φ`, or `¬φ` when `φ` has no
    /// disjunct free of positive `x`-literals.
    pub formula: String,
    pub negated: bool,
    pub t_star: usize,
    pub k: usize,
    pub l: usize,
    pub n: usize,
    pub alpha: usize,
    pub alpha_set: Vec<usize>,
    /// `ā`: image of the pattern's vertices in the ambient graph.
    pub points: Vec<usize>,
    pub approximation: ApproxReport,
    pub max_violations: usize,
    pub max_violations_params: Option<Vec<usize>>,
}

/// Disjunct in `T*` minimizing `(k, ℓ)`; ties go to the first.
fn choose_t_star(an: &Analysis) -> Option<usize> {
    an.t_star
        .iter()
        .copied()
        .min_by_key(|&t| (an.profiles[t].k(), an.profiles[t].l(), t))
}

fn length_cert(n: usize, l: usize, eps: &Rational) -> Certification {
    Certification::new("n > 2l/epsilon", from_int(n), Relation::Gt, from_int(2 * l) / eps)
}

fn alpha_cert(alpha: usize, k: usize, n: usize, eps: &Rational) -> Option<Certification> {
    (k > 0).then(|| {
        Certification::new(
            "alpha_s(G) < epsilon*n/(2k)",
            from_int(alpha),
            Relation::Lt,
            eps * from_int(n) / from_int(2 * k),
        )
    })
}

fn exact_alpha(graph: &Hypergraph, s: usize, budget: u64) -> Result<(usize, Vec<usize>), WitnessError> {
    let out = alpha_s(graph, s, budget)?;
    match out.exact() {
        Some(v) => Ok((v, out.witness().to_vec())),
        None => Err(WitnessError::InvalidInput(format!(
            "alpha_s search exceeded its budget of {budget} nodes (lower bound {})",
            out.lower_bound()
        ))),
    }
}

struct Measured {
    approximation: ApproxReport,
    max_violations: usize,
    max_violations_params: Option<Vec<usize>>,
}

/// Exhaustive scan of every parameter tuple: the sup error against `p_E` and
/// the largest `|Z| = |{j : ¬φ(a_j; b̄)}|` among tuples with `ψ_{t*}(b̄)`.
fn measure(
    ambient: &Hypergraph,
    phi: &PhiPartition,
    analysis: &Analysis,
    t_star: usize,
    points: &[usize],
    eps: &Rational,
) -> Result<Measured, WitnessError> {
    let singletons: Vec<Vec<usize>> = points.iter().map(|&a| vec![a]).collect();
    let target = Target::Oracle(TypeOracle::PE(analysis.clone()));
    let approximation = sup_error(
        ambient,
        &target,
        &singletons,
        phi,
        &ParamDomain::AllTuples,
        &ScanMode::Exhaustive,
        eps.clone(),
    )?;

    let (n, m) = (ambient.vertex_count(), phi.param_arity());
    let size = (n as u128)
        .checked_pow(m as u32)
        .filter(|&s| s <= MAX_EXHAUSTIVE_DOMAIN);
    let size =
        size.ok_or_else(|| WitnessError::InvalidInput(format!("{n}^{m} parameter tuples is too many to scan")))?;
    let profile = &analysis.profiles[t_star];
    let counts = (0..size as u64)
        .into_par_iter()
        .map(|i| {
            let b = crate::measures::approx_decode(i as u128, n, m);
            if !profile.psi_holds(ambient, &b)? {
                return Ok(None);
            }
            let mut z = 0;
            for &a in points {
                let xs = [a];
                if !evaluate(ambient, phi.formula(), &Assignment::new(&xs, &b))? {
                    z += 1;
                }
            }
            Ok(Some((z, b)))
        })
        .collect::<Result<Vec<_>, WitnessError>>()?;
    let best = counts
        .into_iter()
        .flatten()
        .reduce(|best, cur| if cur.0 > best.0 { cur } else { best });
    Ok(Measured {
        approximation,
        max_violations: best.as_ref().map_or(0, |b| b.0),
        max_violations_params: best.map(|b| b.1),
    })
}

fn final_certs(m: &Measured, l: usize, k: usize, alpha: usize, eps: &Rational) -> [Certification; 2] {
    [
        Certification::new(
            "sup_error < epsilon",
            m.approximation.sup_error.clone(),
            Relation::Lt,
            eps.clone(),
        ),
        Certification::count(
            "max |Z| <= l + k*alpha_s(G)",
            m.max_violations,
            Relation::Le,
            l + k * alpha,
        ),
    ]
}

/// Approximates `p_E(φ(x; ·))` by the average over an induced copy of `graph`
/// inside `ambient`.
pub fn fam_witness(
    phi: &PhiPartition,
    epsilon: &Rational,
    ambient: &Hypergraph,
    graph: &Hypergraph,
    s: usize,
    budget: FamBudget,
) -> Result<WitnessReport, WitnessError> {
    if ambient.arity() != 2 || graph.arity() != 2 {
        return Err(WitnessError::InvalidInput("ambient and pattern must be graphs".into()));
    }
    if *epsilon <= Rational::from_integer(0.into()) {
        return Err(WitnessError::InvalidInput(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    let mut report = WitnessReport::new(Theorem::Fam);
    report.inputs.insert("ambient".into(), InputRecord::of(ambient));
    report.inputs.insert("graph".into(), InputRecord::of(graph));
    report.params = to_value(&FamParams {
        phi: phi.formula().to_string(),
        param_arity: phi.param_arity(),
        epsilon: epsilon.clone(),
        s,
        budget,
    });

    let free = Certification::flag("ambient is K_s-free", is_free(ambient, s)?);
    if !free.holds {
        return Err(WitnessError::PreconditionFailed(Box::new(free)));
    }

    let mut analysis = analyze_phi(phi)?;
    let mut used = phi.clone();
    let negated = analysis.t_star.is_empty();
    if negated {
        report.log.push(format!(
            "no disjunct of {} avoids positive x-literals; using its negation",
            phi.formula()
        ));
        used = phi.negated();
        analysis = analyze_phi(&used)?;
    }
    let t_star = choose_t_star(&analysis)
        .ok_or_else(|| WitnessError::Internal("neither the formula nor its negation has a disjunct in T*".into()))?;
    let (k, l) = (analysis.profiles[t_star].k(), analysis.profiles[t_star].l());
    report.log.push(format!("t* = {t_star} with k = {k}, l = {l}"));

    let n = graph.vertex_count();
    let length = length_cert(n, l, epsilon);
    if !length.holds {
        return Err(WitnessError::PreconditionFailed(Box::new(length)));
    }
    let (alpha, alpha_set) = exact_alpha(graph, s, budget.alpha)?;
    report.log.push(format!("alpha_{s}(G) = {alpha}"));
    let alpha_bound = alpha_cert(alpha, k, n, epsilon);
    match &alpha_bound {
        Some(c) if !c.holds => return Err(WitnessError::PreconditionFailed(Box::new(c.clone()))),
        Some(_) => {}
        None => report.log.push("k = 0: the alpha bound is vacuous".into()),
    }

    let points = match embed_search(graph, ambient, budget.embed)? {
        EmbedOutcome::Found { mapping } => mapping,
        EmbedOutcome::Absent => {
            return Err(WitnessError::EmbeddingNotFound(
                "the ambient has no induced copy".into(),
            ))
        }
        EmbedOutcome::Exhausted { nodes } => {
            return Err(WitnessError::EmbeddingNotFound(format!(
                "search gave up after {nodes} nodes"
            )))
        }
    };
    report.log.push(format!("embedded G at {points:?}"));

    let measured = measure(ambient, &used, &analysis, t_star, &points, epsilon)?;
    report.certified.push(free);
    report.certified.push(length);
    report.certified.extend(alpha_bound);
    report
        .certified
        .push(Certification::flag("points induce a copy of G", true));
    report.certified.extend(final_certs(&measured, l, k, alpha, epsilon));

    report.witness = to_value(&FamPayload {
        formula: used.formula().to_string(),
        negated,
        t_star,
        k,
        l,
        n,
        alpha,
        alpha_set,
        points,
        approximation: measured.approximation,
        max_violations: measured.max_violations,
        max_violations_params: measured.max_violations_params,
    });
    Ok(report)
}

/// Recomputes the certifications from the payload's `t*` and points.
pub(super) fn recompute(
    params: &FamParams,
    payload: &FamPayload,
    ambient: &Hypergraph,
    graph: &Hypergraph,
) -> Result<Vec<Certification>, WitnessError> {
    let phi = PhiPartition::new(parse_formula(&params.phi)?, 1, params.param_arity)?;
    let used = if payload.negated { phi.negated() } else { phi };
    let analysis = analyze_phi(&used)?;
    if !analysis.t_star.contains(&payload.t_star) {
        return Err(WitnessError::InvalidInput(format!(
            "disjunct {} is not in T*",
            payload.t_star
        )));
    }
    let profile = &analysis.profiles[payload.t_star];
    let (k, l) = (profile.k(), profile.l());
    let eps = &params.epsilon;
    let n = graph.vertex_count();
    let (alpha, _) = exact_alpha(graph, params.s, params.budget.alpha)?;

    let mut certs = vec![
        Certification::flag("ambient is K_s-free", is_free(ambient, params.s)?),
        length_cert(n, l, eps),
    ];
    certs.extend(alpha_cert(alpha, k, n, eps));
    let induced = payload.points.iter().all(|&p| p < ambient.vertex_count())
        && is_induced_embedding(graph, ambient, &payload.points);
    certs.push(Certification::flag("points induce a copy of G", induced));
    if !induced {
        return Ok(certs);
    }
    let measured = measure(ambient, &used, &analysis, payload.t_star, &payload.points, eps)?;
    certs.extend(final_certs(&measured, l, k, alpha, eps));
    Ok(certs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::structures::{cyclic_graph, random_maximal_free};

    fn phi(text: &str) -> PhiPartition {
        PhiPartition::infer(parse_formula(text).unwrap())
    }

    #[test]
    fn five_cycle_fails_the_alpha_bound() {
        let ambient = random_maximal_free(40, 2, 3, 1).unwrap();
        let c5 = cyclic_graph(5, &[1]).unwrap();
        let err = fam_witness(
            &phi("!E(x1,y1) & x1 != y1"),
            &ratio(4, 5),
            &ambient,
            &c5,
            3,
            FamBudget::default(),
        );
        match err {
            Err(WitnessError::PreconditionFailed(c)) => {
                assert!(c.name.starts_with("alpha"));
                assert_eq!((c.lhs, c.rhs), (from_int(2), from_int(2)));
            }
            other => panic!("expected a precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn short_pattern_fails_the_length_bound() {
        let ambient = random_maximal_free(20, 2, 3, 1).unwrap();
        let g = Hypergraph::empty(2, 2).unwrap();
        let err = fam_witness(
            &phi("!E(x1,y1) & x1 != y1"),
            &ratio(4, 5),
            &ambient,
            &g,
            3,
            FamBudget::default(),
        );
        assert!(matches!(err, Err(WitnessError::PreconditionFailed(c)) if c.name.starts_with("n >")));
    }

    #[test]
    fn positive_edge_runs_on_the_negation() {
        let ambient = random_maximal_free(60, 2, 3, 4).unwrap();
        let g = cyclic_graph(8, &[1, 4]).unwrap();
        let report = fam_witness(&phi("E(x1,y1)"), &ratio(4, 5), &ambient, &g, 3, FamBudget::default()).unwrap();
        let payload: FamPayload = serde_json::from_value(report.witness.clone()).unwrap();
        assert!(payload.negated);
        assert_eq!((payload.k, payload.l), (1, 0));
        assert_eq!(payload.formula, "!E(x1,y1)");
        assert!(report.all_hold(), "{:?}", report.certified);
    }

    #[test]
    fn k_zero_skips_the_alpha_bound() {
        let ambient = random_maximal_free(25, 2, 3, 2).unwrap();
        let g = Hypergraph::graph(4, &[(0, 1)]).unwrap();
        let report = fam_witness(&phi("x1 != y1"), &ratio(3, 5), &ambient, &g, 3, FamBudget::default()).unwrap();
        assert!(report.certified.iter().all(|c| !c.name.starts_with("alpha")));
        assert!(report.all_hold());
        let payload: FamPayload = serde_json::from_value(report.witness.clone()).unwrap();
        // One point can equal y1, so the error is exactly 1/4.
        assert_eq!(payload.approximation.sup_error, ratio(1, 4));
    }

    #[test]
    fn recompute_matches_the_report() {
        let ambient = random_maximal_free(60, 2, 3, 3).unwrap();
        let g = cyclic_graph(8, &[1, 4]).unwrap();
        let report = fam_witness(
            &phi("!E(x1,y1) & x1 != y1"),
            &ratio(4, 5),
            &ambient,
            &g,
            3,
            FamBudget::default(),
        );
        let report = report.unwrap();
        let params: FamParams = serde_json::from_value(report.params.clone()).unwrap();
        let payload: FamPayload = serde_json::from_value(report.witness.clone()).unwrap();
        assert_eq!(recompute(&params, &payload, &ambient, &g).unwrap(), report.certified);
    }
}
