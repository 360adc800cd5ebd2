use std::collections::BTreeMap;
use std::time::Instant;

use super::repr::{classification_checks, convention_check, tally_conventions};
use super::SuiteError;
use crate::arith::{QuadScalar, Rational};
use crate::gt::{enumerate_tableaux, validate_irrep};
use crate::lie::weyl_dimension_o5;
use crate::repr::{c_probe, c_candidates, extremal_projector_o3, multiplicity_slices, standard_sources, pf11_probe, Irrep};
use crate::report::{Check, Status, VerificationReport};
use crate::uea::{CommutatorSign, Uea};

fn distinct_irreps(slow: bool) -> Result<Vec<(String, Irrep)>, SuiteError> {
    let mut sources = standard_sources()?;
    if slow {
        sources.push(crate::repr::Representation::defining_power(4)?);
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for rep in sources {
        for irrep in rep.extract_irreps()? {
            let hp = irrep.highest_pair();
            if seen.insert(hp.clone()) {
                out.push((format!("{}/V({},{})", rep.label(), hp.0, hp.1), irrep));
            }
        }
    }
    Ok(out)
}

/// Convention probes on every distinct irrep of the standard sources:
/// the eigenvalue of `PfF_{-1,1}` on o_3-highest vectors, the σ-flip constant,
/// the γ reading of the model, the sign reading of the commutator rule, the
/// tableau interlacing rule and the half-integer crossing.
pub fn probe_suite(slow: bool) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let uea = Uea::new(5)?;
    let mut out = VerificationReport::new("probe-conventions");
    let irreps = distinct_irreps(slow)?;

    let (mut pf11_rows, mut c_rows) = (Vec::new(), Vec::new());
    let mut vals = Vec::new();
    for (label, irrep) in &irreps {
        let slices = multiplicity_slices(irrep)?;
        for row in pf11_probe(irrep, &slices, &uea) {
            pf11_rows.push((label.clone(), row));
        }
        let p = extremal_projector_o3(&irrep.rep)?;
        for row in c_probe(irrep, &slices, &uea, &p.matrix) {
            c_rows.push((label.clone(), row));
        }
        let v = validate_irrep(irrep, &uea)?;
        out.extend(classification_checks(label, &v).into_iter().filter(|c| c.status == Status::Anomaly));
        vals.push(v);
    }

    // PfF_{-1,1}
    let scalar = pf11_rows.iter().all(|(_, r)| r.measured.is_some());
    let shifted = pf11_rows.iter().all(|(_, r)| r.matches_shifted);
    let printed = pf11_rows.iter().all(|(_, r)| r.matches_d1);
    out.push(Check::from_bool(
        "pf11.scalar",
        scalar,
        serde_json::json!({ "slices": pf11_rows.len(), "non_scalar": pf11_rows.iter().filter(|(_, r)| r.measured.is_none()).map(|(l, r)| format!("{} T={} N={}", l, r.t, r.n)).collect::<Vec<_>>() }),
    ));
    if !printed {
        out.push(Check::anomaly(
            "pf11.eigenvalue",
            serde_json::json!({
                "measured": if shifted { "T" } else { "not a polynomial in T" },
                "printed": "D_1(T) = T + 1/2",
                "shifted_reading": "D_1(T - 1/2) = T",
                "matches_shifted_everywhere": shifted,
                "slices": pf11_rows.len(),
            }),
        ));
    }

    // σ-flip constant
    let fitted = |t: &Rational| QuadScalar::from(&Rational::one() - t);
    let mut fit_fail = Vec::new();
    let mut candidate_hits: BTreeMap<String, usize> = BTreeMap::new();
    let mut measured = 0;
    let mut t_seen = std::collections::BTreeSet::new();
    for (label, r) in &c_rows {
        if r.both_zero {
            continue;
        }
        measured += 1;
        t_seen.insert(r.t.clone());
        match &r.ratio {
            Some(c) if *c == fitted(&r.t) => {}
            other => fit_fail.push(serde_json::json!({ "irrep": label, "T": r.t, "N": r.n, "ratio": other })),
        }
        for m in &r.matches {
            *candidate_hits.entry(m.clone()).or_default() += 1;
        }
    }
    out.push(Check::from_bool(
        "c-constant.fit",
        fit_fail.is_empty() && measured > 0,
        if fit_fail.is_empty() {
            serde_json::json!({ "fitted": "c(T) = 1 - T", "slices": measured, "T_values": t_seen })
        } else {
            serde_json::json!(fit_fail)
        },
    ));
    let samples: Vec<_> = t_seen
        .iter()
        .map(|t| {
            serde_json::json!({
                "T": t,
                "measured": fitted(t),
                "candidates": c_candidates(t).into_iter().collect::<BTreeMap<_, _>>(),
            })
        })
        .collect();
    out.push(Check::anomaly(
        "c-constant.printed",
        serde_json::json!({ "fitted": "1 - T", "candidate_hits": candidate_hits, "slices": measured, "samples": samples }),
    ));

    // γ reading
    let mut tallies = BTreeMap::new();
    tally_conventions(&vals, &mut tallies);
    out.push(convention_check("gamma-convention", &tallies));

    // sign reading of the commutator rule in o_5
    let alg = uea.algebra().clone();
    let (mut standard, mut flipped) = (0usize, 0usize);
    let mut cases = 0;
    for k in [2, 4] {
        for set in uea.full_set().subsets(k) {
            for &j1 in &alg.indices() {
                for &j2 in &alg.indices() {
                    if j1 == j2 {
                        continue;
                    }
                    cases += 1;
                    standard += usize::from(uea.check_pf_commutator(&set, j1, j2, CommutatorSign::Standard)?.holds());
                    flipped += usize::from(uea.check_pf_commutator(&set, j1, j2, CommutatorSign::Flipped)?.holds());
                }
            }
        }
    }
    out.push(Check::from_bool(
        "pf-commutator.sign-reading",
        standard == cases,
        serde_json::json!({ "cases": cases, "standard_signs_hold": standard, "flipped_signs_hold": flipped }),
    ));
    if flipped < cases {
        out.push(Check::anomaly(
            "pf-commutator.flipped-sign",
            serde_json::json!({ "cases": cases, "holding": flipped }),
        ));
    }

    // tableau interlacing: the printed chain through λ11 undercounts
    let (l1, l2) = (Rational::from_int(-1), Rational::from_int(-1));
    let printed_count = enumerate_tableaux(&l1, &l2)?.iter().filter(|t| t.l11 <= t.l1 && t.l11 >= t.l2).count();
    let weyl = weyl_dimension_o5(&l1, &l2)?;
    if printed_count as u64 != weyl {
        out.push(Check::anomaly(
            "tableau.printed-interlacing",
            serde_json::json!({ "weight": [l1, l2], "with_printed_rule": printed_count, "weyl_dimension": weyl }),
        ));
    }
    Ok(out.finish(started)?)
}
