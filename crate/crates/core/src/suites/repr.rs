use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use super::fock::pfaffian_matrix_checks;
use super::SuiteError;
use crate::arith::Rational;
use crate::gt::{validate_irrep, GammaConvention, IrrepValidation, RectangleGeometry};
use crate::repr::{extremal_projector_o3, multiplicity_slices, omega_operator, pf_slice_maps, Irrep, Representation};
use crate::report::{Check, VerificationReport};
use crate::uea::{IndexSet, Uea};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReprSource {
    /// Fock(j) for each listed `j`.
    Fock(Vec<Rational>),
    /// Tensor powers of the defining representation.
    DefiningPower(Vec<u32>),
}

impl ReprSource {
    pub fn representations(&self) -> Result<Vec<Representation>, SuiteError> {
        Ok(match self {
            ReprSource::Fock(js) => js.iter().map(Representation::fock).collect::<Result<_, _>>()?,
            ReprSource::DefiningPower(ps) => ps.iter().map(|&p| Representation::defining_power(p)).collect::<Result<_, _>>()?,
        })
    }
}

/// Per-convention tally of rank-table comparisons.
#[derive(Debug, Default, Clone, Serialize)]
pub(crate) struct ConventionTally {
    pub matched: usize,
    pub mismatched: usize,
    pub singular: usize,
}

pub(crate) fn tally_conventions(vals: &[IrrepValidation], into: &mut BTreeMap<GammaConvention, ConventionTally>) {
    for v in vals {
        for t in &v.per_t {
            for c in &t.conventions {
                let e = into.entry(c.convention).or_default();
                match c.matches {
                    Some(true) => e.matched += 1,
                    Some(false) => e.mismatched += 1,
                    None => e.singular += 1,
                }
            }
        }
    }
}

/// Exactly one convention matches every table. A source on which all
/// conventions agree is reported as an anomaly.
pub(crate) fn convention_check(id: &str, tallies: &BTreeMap<GammaConvention, ConventionTally>) -> Check {
    let winners: Vec<&str> = tallies
        .iter()
        .filter(|(_, t)| t.matched > 0 && t.mismatched == 0 && t.singular == 0)
        .map(|(c, _)| c.name())
        .collect();
    let witness = serde_json::json!({
        "winner": if winners.len() == 1 { Some(winners[0]) } else { None },
        "tallies": tallies.iter().map(|(c, t)| (c.name(), t)).collect::<BTreeMap<_, _>>(),
    });
    // every convention matching every table means the source cannot tell them apart
    let undecided = winners.len() > 1 && winners.len() == tallies.len();
    if undecided {
        Check::anomaly(id, witness)
    } else {
        Check::from_bool(id, winners.len() == 1, witness)
    }
}

fn weight_label(irrep: &Irrep) -> String {
    let (a, b) = irrep.highest_pair();
    format!("V({},{})", a, b)
}

/// Ranks of `PfF_{hat 2}` (from `N < 0`) and `PfF_{hat -2}` (from `N > 0`) on
/// every slice, compared with the prediction from the rectangle of the case.
fn case_predictions(irrep: &Irrep, uea: &Uea) -> Result<Check, SuiteError> {
    let (l1, l2) = irrep.highest_pair();
    let slices = multiplicity_slices(irrep)?;
    let alg = uea.algebra();
    let mut rows = Vec::new();
    let mut ok = true;
    for hat in [2, -2] {
        let pf = irrep.rep.evaluate(&uea.pfaffian(&IndexSet::hat(alg, hat)?));
        let maps = pf_slice_maps(&slices, &pf, hat)?;
        for s in &slices {
            // maps moving away from N = 0 are outside the prediction
            let toward = if hat > 0 { s.n.is_negative() } else { s.n.is_positive() };
            if !toward {
                continue;
            }
            let g = RectangleGeometry::new(&l1, &l2, &s.t)?;
            let mirror = if hat > 0 { s.n.clone() } else { -s.n.clone() };
            let predicted = g.predicted_step(&mirror);
            let actual = maps
                .iter()
                .find(|m| m.t == s.t && m.source_n == s.n)
                .map_or((0, s.dim()), |m| (m.rank(), m.nullity()));
            let good = predicted == Some(actual);
            ok &= good;
            rows.push(serde_json::json!({
                "hat": hat, "T": s.t, "N": s.n,
                "case": g.case_of(&s.n).map(|c| c.to_string()).unwrap_or_default(),
                "rank": actual.0, "nullity": actual.1,
                "predicted": predicted, "ok": good,
            }));
        }
    }
    let witness = if ok { serde_json::json!({ "steps": rows.len() }) } else { serde_json::json!(rows) };
    Ok(Check::from_bool(format!("{}.case-prediction", weight_label(irrep)), ok, witness))
}

/// Label checks of one validated irrep.
pub(crate) fn classification_checks(prefix: &str, v: &IrrepValidation) -> Vec<Check> {
    let c = v.checks();
    let failing = |pred: &dyn Fn(&crate::gt::TValidation) -> bool| {
        v.per_t
            .iter()
            .filter(|t| !pred(t))
            .map(|t| {
                serde_json::json!({
                    "T": t.t, "labels": t.labels, "steps": t.steps,
                    "n0_agreement": t.n0_agreement, "w0_scalar": t.w0_scalar, "error": t.error,
                })
            })
            .collect::<Vec<_>>()
    };
    let summary = serde_json::json!({ "dim": v.dim, "T_values": v.per_t.len() });
    let pick = |ok: bool, bad: Vec<serde_json::Value>| if ok { summary.clone() } else { serde_json::json!(bad) };
    let mut out = vec![
        Check::from_bool(
            format!("{}.labels", prefix),
            c.labels_distinct && c.labels_complete && c.slice_dims_match,
            pick(c.labels_distinct && c.labels_complete && c.slice_dims_match, failing(&|t| t.error.is_none() && t.slice_dims_match)),
        ),
        Check::from_bool(format!("{}.raising-below", prefix), c.raising_below, pick(c.raising_below, failing(&|t| t.raising_below))),
        Check::from_bool(format!("{}.raising-above", prefix), c.raising_above, pick(c.raising_above, failing(&|t| t.raising_above))),
        Check::from_bool(
            format!("{}.n0-agreement", prefix),
            c.n0_agreement,
            pick(c.n0_agreement, failing(&|t| t.n0_agreement != Some(false))),
        ),
    ];
    let crossing: Vec<_> = v
        .per_t
        .iter()
        .filter(|t| !t.crossing_consistent())
        .map(|t| serde_json::json!({ "T": t.t, "k_and_image_level": t.crossing }))
        .collect();
    if !crossing.is_empty() {
        out.push(Check::anomaly(format!("{}.half-integer-crossing", prefix), crossing));
    }
    out
}

/// Decomposition, extremal projector, Ω, slice maps and the fourth quantum
/// number on each representation of the source.
pub fn repr_suite(source: &ReprSource) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let uea = Uea::new(5)?;
    let name = match source {
        ReprSource::Fock(_) => "repr-analyze-fock",
        ReprSource::DefiningPower(_) => "repr-analyze-defining-power",
    };
    let mut out = VerificationReport::new(name);
    let mut tallies = BTreeMap::new();
    for rep in source.representations()? {
        let label = rep.label();
        out.push(Check::from_bool(
            format!("{}.brackets", label),
            rep.bracket_violations() == 0,
            serde_json::json!({ "violations": rep.bracket_violations() }),
        ));
        out.extend(pfaffian_matrix_checks(&rep, &uea, &label)?);

        let projector = extremal_projector_o3(&rep)?;
        let pc = projector.check(&rep);
        out.push(Check::from_bool(
            format!("{}.projector", label),
            pc.all(),
            serde_json::json!({ "checks": pc, "singular_weights": projector.singular.len() }),
        ));

        let irreps = rep.extract_irreps()?;
        let mut content: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        for i in &irreps {
            content.entry(weight_label(i)).or_insert((i.dim(), 0)).1 += 1;
        }
        let total: usize = irreps.iter().map(Irrep::dim).sum();
        out.push(Check::from_bool(
            format!("{}.decomposition", label),
            total == rep.dim(),
            serde_json::json!({ "dim": rep.dim(), "components": content }),
        ));

        let mut seen = BTreeMap::new();
        let mut vals = Vec::new();
        for irrep in &irreps {
            if seen.insert(weight_label(irrep), ()).is_some() {
                continue;
            }
            let prefix = format!("{}/{}", label, weight_label(irrep));
            let om = omega_operator(irrep, &uea)?;
            out.push(Check::from_bool(format!("{}.omega", prefix), om.checks.all(), &om.checks));
            let mut cp = case_predictions(irrep, &uea)?;
            cp.id = format!("{}.case-prediction", prefix);
            out.push(cp);
            let v = validate_irrep(irrep, &uea)?;
            out.extend(classification_checks(&prefix, &v));
            vals.push(v);
        }
        tally_conventions(&vals, &mut tallies);
    }
    out.push(convention_check("gamma-convention", &tallies));
    Ok(out.finish(started)?)
}
