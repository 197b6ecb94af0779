use reject_lab::bayes_rule::{
    bayes_outcome, bayes_regions, thresholds_from_costs, CostMatrix, OutcomeReport, Policy,
};
use reject_lab::cost_analysis::equivalence_class;
use reject_lab::distributions::{ClassId, ClassModel, ClassPrior, UniformClassModel};
use reject_lab::info_bounds::{bounds, BoundReport};
use reject_lab::mc_oracle::{binomial_se, empirical_outcomes, DEFAULT_N};
use reject_lab::mi_classifier::mi_optimize;
use reject_lab::presets::{example2_at_ratio, example3_model, EXAMPLE2_RATIOS};

use crate::config::{Case, Mode};
use crate::failure::Failure;
use crate::table::{emit, fixed, outcome_row, significant, OUTCOME_HEADER};

/// Largest tolerated oracle deviation, in binomial standard errors.
const ORACLE_BAND: f64 = 4.0;

fn classify(
    model: &ClassModel,
    case: &Case,
    mode: Mode,
    reject: bool,
) -> Result<OutcomeReport, Failure> {
    Ok(match mode {
        Mode::Bayes => bayes_outcome(model, &case.bayes_policy()?, reject)?,
        Mode::Mi => mi_optimize(model, reject).report,
    })
}

fn costs_of(case: &Case, mode: Mode) -> Option<CostMatrix> {
    match (mode, case.policy) {
        (Mode::Bayes, Some(Policy::Costs(c))) => Some(c),
        _ => None,
    }
}

/// Empirical counterpart of `report` and the largest deviation in standard
/// errors over the joint entries, `E` and `Rej`.
fn oracle_row(case: &Case, mode: Mode, report: &OutcomeReport) -> (Vec<String>, f64) {
    let n = case.oracle_n.unwrap_or(DEFAULT_N);
    let regions = report
        .regions
        .as_ref()
        .expect("classifier reports carry regions");
    let costs = costs_of(case, mode);
    let (_, emp) = empirical_outcomes(&case.model, &[regions], n, case.seed, costs.as_ref())
        .pop()
        .expect("one region set");
    let (a, b) = (report.joint.entries(), emp.joint.entries());
    let pairs = (0..2)
        .flat_map(|i| (0..3).map(move |j| (a[i][j], b[i][j])))
        .chain([(report.e, emp.e), (report.rej, emp.rej)]);
    let worst = pairs.fold(0.0_f64, |w, (p, q)| {
        let se = binomial_se(p, n);
        let z = if se > 0.0 {
            (q - p).abs() / se
        } else if q == p {
            0.0
        } else {
            f64::INFINITY
        };
        w.max(z)
    });
    let label = format!("{}-mc", mode.name());
    (
        outcome_row(&case.name, &label, case.reject, &emp, report.thresholds),
        worst,
    )
}

fn check_band(case: &Case, worst: f64) -> Result<(), Failure> {
    let n = case.oracle_n.unwrap_or(DEFAULT_N);
    eprintln!(
        "oracle: n = {n}, seed = {}, largest deviation {worst:.2} standard errors (limit {ORACLE_BAND})",
        case.seed
    );
    if worst > ORACLE_BAND {
        return Err(Failure::Runtime(format!(
            "oracle disagrees with the analytic outcome by {worst:.2} standard errors"
        )));
    }
    Ok(())
}

pub fn run(case: &Case) -> Result<(), Failure> {
    let report = classify(&case.model, case, case.mode, case.reject)?;
    let mut rows = vec![outcome_row(
        &case.name,
        case.mode.name(),
        case.reject,
        &report,
        None,
    )];
    let mut worst = None;
    if case.oracle_n.is_some() {
        let (row, w) = oracle_row(case, case.mode, &report);
        rows.push(row);
        worst = Some(w);
    }
    emit(case.out.as_deref(), &OUTCOME_HEADER, &rows)?;
    worst.map_or(Ok(()), |w| check_band(case, w))
}

pub fn oracle(case: &Case) -> Result<(), Failure> {
    let report = classify(&case.model, case, case.mode, case.reject)?;
    let (row, worst) = oracle_row(case, case.mode, &report);
    let rows = vec![
        outcome_row(&case.name, case.mode.name(), case.reject, &report, None),
        row,
    ];
    emit(case.out.as_deref(), &OUTCOME_HEADER, &rows)?;
    check_band(case, worst)
}

fn with_prior(model: &ClassModel, prior: ClassPrior) -> Result<ClassModel, Failure> {
    Ok(match model {
        ClassModel::Gaussian(g) => g.with_prior(prior).into(),
        ClassModel::Uniform(u) => {
            let ((a1, b1), (a2, b2)) = (u.support(ClassId::One), u.support(ClassId::Two));
            UniformClassModel::new(prior, a1, b1, a2, b2)?.into()
        }
    })
}

/// `case` at every prior ratio, without rejection: one row per ratio per
/// classifier, Bayes rows first unless `--mode` picks one.
pub fn sweep(case: &Case, ratios: Option<&[f64]>, modes: &[Mode]) -> Result<(), Failure> {
    if case.reject {
        return Err(Failure::Usage(
            "sweeps compare classifiers without rejection".into(),
        ));
    }
    let ratios = ratios
        .or(case.ratios.as_deref())
        .unwrap_or(&EXAMPLE2_RATIOS);
    if ratios.is_empty() {
        return Err(Failure::Usage("empty ratio list".into()));
    }
    let mut rows = Vec::new();
    for &mode in modes {
        for &ratio in ratios {
            if !(ratio > 0.0 && ratio.is_finite()) {
                return Err(Failure::Usage(format!(
                    "prior ratio must be positive, got {ratio}"
                )));
            }
            let model = with_prior(&case.model, ClassPrior::from_ratio(ratio)?)?;
            let report = classify(&model, case, mode, false)?;
            rows.push(outcome_row(
                &format!("{}@{ratio}", case.name),
                mode.name(),
                false,
                &report,
                None,
            ));
        }
    }
    emit(case.out.as_deref(), &OUTCOME_HEADER, &rows)
}

const BOUNDS_HEADER: [&str; 6] = ["label", "h_t_given_y", "e", "lb", "ub", "flags"];

fn bound_of(r: &OutcomeReport) -> Result<BoundReport, Failure> {
    let prior = ClassPrior::new(r.joint.prior(ClassId::One), r.joint.prior(ClassId::Two))?;
    Ok(bounds(&prior, &r.joint, r.e)?)
}

fn bound_row(label: &str, b: &BoundReport) -> Vec<String> {
    let s = b.satisfies;
    let violated: Vec<&str> = [
        (s.lb_ok, "lb_violated"),
        (s.ub_ok, "ub_violated"),
        (s.kovalevskij_ok, "kovalevskij_violated"),
        (s.half_ok, "half_violated"),
    ]
    .into_iter()
    .filter(|(ok, _)| !ok)
    .map(|(_, name)| name)
    .collect();
    vec![
        label.to_string(),
        fixed(b.h_t_given_y),
        fixed(b.e),
        fixed(b.modified_lb),
        fixed(b.modified_ub),
        if violated.is_empty() {
            "ok".into()
        } else {
            violated.join(";")
        },
    ]
}

/// Bound rows for the imbalance study (both classifiers at every ratio)
/// plus the zero-crossover MI point.
fn default_bound_rows() -> Result<Vec<Vec<String>>, Failure> {
    let mut rows = Vec::new();
    for mode in [Mode::Bayes, Mode::Mi] {
        for ratio in EXAMPLE2_RATIOS {
            let model: ClassModel = example2_at_ratio(ratio).into();
            let r = match mode {
                Mode::Bayes => {
                    bayes_outcome(&model, &Policy::Costs(CostMatrix::zero_one()), false)?
                }
                Mode::Mi => mi_optimize(&model, false).report,
            };
            rows.push(bound_row(
                &format!("example2@{ratio}/{}", mode.name()),
                &bound_of(&r)?,
            ));
        }
    }
    let r = mi_optimize(&example3_model().into(), false).report;
    rows.push(bound_row("example3/mi", &bound_of(&r)?));
    Ok(rows)
}

pub fn bounds_report(case: Option<&Case>, out: Option<&std::path::Path>) -> Result<(), Failure> {
    let rows = match case {
        None => default_bound_rows()?,
        Some(c) => {
            let r = classify(&c.model, c, c.mode, c.reject)?;
            vec![bound_row(
                &format!("{}/{}", c.name, c.mode.name()),
                &bound_of(&r)?,
            )]
        }
    };
    emit(out, &BOUNDS_HEADER, &rows)
}

const REDUNDANCY_HEADER: [&str; 13] = [
    "member", "l11", "l12", "l13", "l21", "l22", "l23", "tr1", "tr2", "xb1", "xb2", "xb3", "xb4",
];

/// Distinct cost matrices inducing the case's rejection thresholds, each
/// with the thresholds and Bayes boundary points it reproduces.
pub fn redundancy(case: &Case, count: usize) -> Result<(), Failure> {
    if !case.reject {
        return Err(Failure::Usage("redundancy needs the reject option".into()));
    }
    if count == 0 {
        return Err(Failure::Usage("count must be positive".into()));
    }
    let (tr, lambda21) = match (case.mode, case.bayes_policy()) {
        (Mode::Bayes, Ok(Policy::Costs(c))) => (
            thresholds_from_costs(&c)?,
            (c.l21() - c.l22()) / (c.l12() - c.l11()),
        ),
        (Mode::Bayes, Ok(Policy::Thresholds(t))) => (t, (t.delta1() * t.delta2()).sqrt()),
        (Mode::Bayes, Err(e)) => return Err(e),
        (Mode::Mi, _) => {
            let t = mi_optimize(&case.model, true).thresholds;
            (t, (t.delta1() * t.delta2()).sqrt())
        }
    };
    if !(tr.tr1() > 0.0 && tr.tr2() > 0.0 && tr.rejects()) {
        return Err(Failure::Constraint(format!(
            "thresholds ({}, {}) leave no room for distinct cost matrices",
            tr.tr1(),
            tr.tr2()
        )));
    }
    let report = equivalence_class(&tr, lambda21, count)?;
    let mut rows = Vec::new();
    let mut first_points: Option<Vec<f64>> = None;
    let mut identical = true;
    for (k, m) in report.equivalent_sets.iter().enumerate() {
        let back = thresholds_from_costs(m)?;
        let points = bayes_regions(&case.model, &Policy::Costs(*m), true)?.boundary_points();
        if let Some(f) = &first_points {
            identical &= f.len() == points.len()
                && f.iter().zip(&points).all(|(a, b)| (a - b).abs() <= 1e-9);
        } else {
            first_points = Some(points.clone());
        }
        let mut row = vec![(k + 1).to_string()];
        row.extend(m.lambda().iter().flatten().map(|&v| significant(v)));
        row.push(fixed(back.tr1()));
        row.push(fixed(back.tr2()));
        row.extend((0..4).map(|i| points.get(i).copied().map(significant).unwrap_or_default()));
        rows.push(row);
    }
    emit(case.out.as_deref(), &REDUNDANCY_HEADER, &rows)?;
    eprintln!(
        "redundancy: at most {} independent cost parameters; {} matrices, identical regions: {}",
        report.n_ip_bound,
        rows.len(),
        if identical { "yes" } else { "no" }
    );
    if identical {
        Ok(())
    } else {
        Err(Failure::Runtime(
            "equivalent cost matrices produced different regions".into(),
        ))
    }
}
