//! One test per acceptance criterion. Each prints a single
//! `criterion N: PASS|FAIL` line before asserting.

use std::time::{Duration, Instant};

use quasispin::arith::Rational;
use quasispin::gt::{check_highest, enumerate_tableaux, validate_irrep};
use quasispin::lie::weyl_dimension_o5;
use quasispin::repr::standard_sources;
use quasispin::report::{Check, Status, VerificationReport};
use quasispin::suites::{
    classify_suite, fock_suite, identities_suite, probe_suite, repr_suite, IdentityOptions, ReprSource,
};
use quasispin::uea::Uea;

fn verdict(n: u32, ok: bool, detail: impl std::fmt::Display) {
    println!("criterion {}: {}", n, if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {}: {}", n, detail);
}

fn identities(n: usize, slow: bool) -> VerificationReport {
    identities_suite(&IdentityOptions { slow, ..IdentityOptions::new(n) }).unwrap()
}

/// Ids starting with any prefix, with at least one match per prefix; the
/// offending ids otherwise.
fn all_pass(r: &VerificationReport, prefixes: &[&str]) -> Result<usize, Vec<String>> {
    let mut bad = Vec::new();
    let mut seen = 0;
    for p in prefixes {
        let hits: Vec<&Check> = r.checks.iter().filter(|c| c.id.starts_with(p)).collect();
        if hits.is_empty() {
            bad.push(format!("{}: no such check in {}", p, r.suite));
        }
        seen += hits.len();
        bad.extend(hits.iter().filter(|c| c.status != Status::Pass).map(|c| format!("{}: {} {:?}", r.suite, c.id, c.witness)));
    }
    if bad.is_empty() {
        Ok(seen)
    } else {
        Err(bad)
    }
}

fn fold(results: impl IntoIterator<Item = Result<usize, Vec<String>>>) -> (bool, String) {
    let mut bad = Vec::new();
    for r in results {
        if let Err(b) = r {
            bad.extend(b);
        }
    }
    (bad.is_empty(), bad.join("\n"))
}

#[test]
fn criterion_1_capelli_and_commutator_rule() {
    let r = identities(2, false);
    let (ok, why) = fold([all_pass(
        &r,
        &["capelli-central.c2.", "capelli-central.c4.", "pf-commutator.k2.symbolic", "pf-commutator.k4.symbolic"],
    )]);
    verdict(1, ok, why);
}

#[test]
fn criterion_2_splitting_formulas() {
    let o5 = identities(2, false);
    let started = Instant::now();
    let o7 = identities(3, true);
    let elapsed = started.elapsed();
    let (mut ok, mut why) = fold([
        all_pass(&o5, &["split.k4.symbolic", "split-sum.k4.symbolic", "expansion.k2.symbolic", "expansion.k4.symbolic"]),
        all_pass(&o7, &["split.k6.symbolic", "split-sum.k6.symbolic", "expansion.k6.symbolic"]),
    ]);
    if elapsed > Duration::from_secs(300) {
        ok = false;
        why.push_str(&format!("\no_7 with |I| = 6 took {:?}", elapsed));
    }
    verdict(2, ok, why);
}

#[test]
fn criterion_3_matrix_identities() {
    let mut results = Vec::new();
    for (n, slow) in [(1, false), (2, false), (3, true)] {
        let r = identities(n, slow);
        let ids: Vec<String> = r.checks.iter().filter(|c| c.id.ends_with(".matrix")).map(|c| c.id.clone()).collect();
        let prefixes: Vec<&str> = ids.iter().map(String::as_str).collect();
        results.push(if prefixes.is_empty() { Err(vec![format!("{}: no matrix checks", r.suite)]) } else { all_pass(&r, &prefixes) });
    }
    let (ok, why) = fold(results);
    verdict(3, ok, why);
}

#[test]
fn criterion_4_car_and_dictionary() {
    let mut bad = Vec::new();
    for j in [Rational::half(), Rational::frac(3, 2)] {
        let r = fock_suite(&j).unwrap();
        let car = r.check("car").unwrap();
        if car.status != Status::Pass {
            bad.push(format!("j={} car {:?}", j, car.witness));
        }
        let d = r.check("dictionary.brackets").unwrap();
        let w = d.witness.clone().unwrap_or_default();
        let corrections = w["corrections"].as_array().map_or(0, Vec::len);
        if d.status != Status::Pass || w["pairs"] != 45 || w["violations"] != 0 || corrections == 0 {
            bad.push(format!("j={} dictionary {}", j, w));
        }
    }
    verdict(4, bad.is_empty(), bad.join("\n"));
}

#[test]
fn criterion_5_weight_shift_and_o3_commutation() {
    let o5 = identities(2, false);
    let mut results = vec![all_pass(
        &o5,
        &["weight-shift.hat2", "weight-shift.hat-2", "hat-commutes.hat2.", "hat-commutes.hat-2."],
    )];
    for j in [Rational::half(), Rational::frac(3, 2)] {
        let r = fock_suite(&j).unwrap();
        results.push(all_pass(
            &r,
            &["pfaffian.weight-shift.hat2", "pfaffian.weight-shift.hat-2", "pfaffian.o3-commutes.hat2", "pfaffian.o3-commutes.hat-2"],
        ));
    }
    let (ok, why) = fold(results);
    verdict(5, ok, why);
}

#[test]
fn criterion_6_tableau_counts() {
    let started = Instant::now();
    let mut bad = Vec::new();
    let mut weights = 0;
    // doubled coordinates: integer weights down to λ2 = -4, half-integer down to -7/2
    for d2 in -8i64..=0 {
        for d1 in d2..=0 {
            let (l1, l2) = (Rational::frac(d1, 2), Rational::frac(d2, 2));
            if check_highest(&l1, &l2).is_err() {
                continue;
            }
            weights += 1;
            let count = enumerate_tableaux(&l1, &l2).unwrap().len() as u64;
            let weyl = weyl_dimension_o5(&l1, &l2).unwrap();
            if count != weyl {
                bad.push(format!("V({},{}): {} tableaux, Weyl dimension {}", l1, l2, count, weyl));
            }
        }
    }
    let elapsed = started.elapsed();
    if elapsed > Duration::from_secs(1) {
        bad.push(format!("enumeration of {} weights took {:?}", weights, elapsed));
    }

    let (c, _) = classify_suite(&Rational::zero(), &Rational::from_int(-1), false).unwrap();
    let mut slices: Vec<(String, String)> = c.table.states.iter().map(|s| (s.t.to_string(), s.n.to_string())).collect();
    slices.sort();
    let expected: Vec<(String, String)> =
        [("-1", "0"), ("-1", "0"), ("-1", "0"), ("0", "-1"), ("0", "1")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    if slices != expected {
        bad.push(format!("V(0,-1) slices {:?}", slices));
    }
    verdict(6, bad.is_empty(), bad.join("\n"));
}

#[test]
fn criterion_7_fourth_quantum_number() {
    let started = Instant::now();
    let uea = Uea::new(5).unwrap();
    let mut bad = Vec::new();
    let mut irreps = 0;
    for rep in standard_sources().unwrap() {
        for irrep in rep.extract_irreps().unwrap() {
            irreps += 1;
            let (a, b) = irrep.highest_pair();
            let v = validate_irrep(&irrep, &uea).unwrap();
            let c = v.checks();
            let named = [
                ("labels_distinct", c.labels_distinct),
                ("labels_complete", c.labels_complete),
                ("slice_dims_match", c.slice_dims_match),
                ("raising_below", c.raising_below),
                ("raising_above", c.raising_above),
                ("n0_agreement", c.n0_agreement),
            ];
            let failed: Vec<&str> = named.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
            if !failed.is_empty() {
                let ts: Vec<String> = v
                    .per_t
                    .iter()
                    .filter(|t| t.n0_agreement == Some(false) || !t.raising_above || !t.raising_below || t.error.is_some())
                    .map(|t| t.t.to_string())
                    .collect();
                bad.push(format!("{} V({},{}): {} at T = {}", rep.label(), a, b, failed.join(", "), ts.join(", ")));
            }
        }
    }
    let elapsed = started.elapsed();
    if elapsed > Duration::from_secs(120) {
        bad.push(format!("{} irreps took {:?}", irreps, elapsed));
    }
    verdict(7, bad.is_empty(), bad.join("\n"));
}

#[test]
fn criterion_8_slice_ranks_and_gamma() {
    let mut bad = Vec::new();
    for src in [ReprSource::Fock(vec![Rational::half(), Rational::frac(3, 2)]), ReprSource::DefiningPower(vec![1, 2, 3])] {
        let r = repr_suite(&src).unwrap();
        let preds: Vec<&Check> = r.checks.iter().filter(|c| c.id.ends_with(".case-prediction")).collect();
        if preds.is_empty() {
            bad.push(format!("{}: no case predictions", r.suite));
        }
        bad.extend(preds.iter().filter(|c| c.status != Status::Pass).map(|c| format!("{} {:?}", c.id, c.witness)));
    }
    let probe = probe_suite(false).unwrap();
    let g = probe.check("gamma-convention").unwrap();
    match g.witness.as_ref().and_then(|w| w["winner"].as_str()) {
        Some(name) if g.status == Status::Pass => println!("gamma convention: {}", name),
        _ => bad.push(format!("gamma-convention {:?}", g.witness)),
    }
    verdict(8, bad.is_empty(), bad.join("\n"));
}

#[test]
fn criterion_9_projector_omega_probes() {
    let mut bad = Vec::new();
    for src in [ReprSource::Fock(vec![Rational::half(), Rational::frac(3, 2)]), ReprSource::DefiningPower(vec![1, 2, 3])] {
        let r = repr_suite(&src).unwrap();
        for suffix in [".projector", ".omega"] {
            let hits: Vec<&Check> = r.checks.iter().filter(|c| c.id.ends_with(suffix)).collect();
            if hits.is_empty() {
                bad.push(format!("{}: no {} checks", r.suite, suffix));
            }
            bad.extend(hits.iter().filter(|c| c.status != Status::Pass).map(|c| format!("{} {:?}", c.id, c.witness)));
        }
    }
    let probe = probe_suite(false).unwrap();
    for (id, want) in [
        ("pf11.scalar", Status::Pass),
        ("pf11.eigenvalue", Status::Anomaly),
        ("c-constant.fit", Status::Pass),
        ("c-constant.printed", Status::Anomaly),
    ] {
        match probe.check(id) {
            Some(c) if c.status == want => {}
            other => bad.push(format!("{}: expected {}, got {:?}", id, want, other.map(|c| c.status))),
        }
    }
    verdict(9, bad.is_empty(), bad.join("\n"));
}
