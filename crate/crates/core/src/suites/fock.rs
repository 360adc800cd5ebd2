use std::time::Instant;

use super::SuiteError;
use crate::arith::{unit_vector, Rational, SparseMatrix};
use crate::fock::{dictionary_to_o5, printed_star_coefficients, star_coefficients, star_matrix, verify_representation};
use crate::lie::Weight;
use crate::repr::{diagonal_weight_blocks, Representation};
use crate::report::{Check, VerificationReport};
use crate::uea::{IndexSet, Uea};

/// Whether `m` maps every weight space `w` into `w + shift`.
pub(crate) fn shifts_weights(rep: &Representation, m: &SparseMatrix, shift: &Weight) -> Result<bool, SuiteError> {
    let blocks = diagonal_weight_blocks(rep)?;
    let mut weight_of = vec![None; rep.dim()];
    for (w, idx) in &blocks {
        for &i in idx {
            weight_of[i] = Some(w.clone());
        }
    }
    Ok((0..rep.dim()).all(|c| {
        let col = m.mul_vec(&unit_vector(rep.dim(), c));
        let target = weight_of[c].as_ref().map(|w| w + shift);
        col.iter().enumerate().all(|(r, x)| x.is_zero() || weight_of[r] == target)
    }))
}

/// Pfaffian matrix checks on a representation: `PfF_{hat ±2}` shifts weights by
/// `±e_2` and commutes with the o_3 generators.
pub(crate) fn pfaffian_matrix_checks(rep: &Representation, uea: &Uea, prefix: &str) -> Result<Vec<Check>, SuiteError> {
    let alg = uea.algebra();
    let o3: Vec<usize> = (0..alg.dim()).filter(|&g| alg.generator(g).i.abs() < 2 && alg.generator(g).j.abs() < 2).collect();
    let mut out = Vec::new();
    for r in [2, -2] {
        let pf = rep.evaluate(&uea.pfaffian(&IndexSet::hat(alg, r)?));
        let mut shift = Weight::basis(2, 2);
        if r < 0 {
            shift = -&shift;
        }
        let ok = shifts_weights(rep, &pf, &shift)?;
        out.push(Check::from_bool(format!("{}.weight-shift.hat{}", prefix, r), ok, format!("expected shift {}", shift)));
        let bad: Vec<String> = o3
            .iter()
            .filter(|&&g| !pf.commutator(&rep.generators()[g]).expect("square").is_zero())
            .map(|&g| alg.generator(g).to_string())
            .collect();
        out.push(Check::from_bool(
            format!("{}.o3-commutes.hat{}", prefix, r),
            bad.is_empty(),
            serde_json::json!({ "generators": o3.len(), "noncommuting": bad }),
        ));
    }
    Ok(out)
}

/// CAR relations, the quasi-spin dictionary as an o_5 representation, and the
/// Pfaffians on Fock(j).
pub fn fock_suite(j: &Rational) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let r = dictionary_to_o5(j)?;
    let uea = Uea::new(5)?;
    let alg = uea.algebra();
    let mut out = VerificationReport::new(format!("fock-build-j{}", j));

    let car = r.space.car_violations();
    out.push(Check::from_bool(
        "car",
        car.is_empty(),
        serde_json::json!({ "modes": r.space.modes().len(), "violations": car.len() }),
    ));
    let violations = verify_representation(alg, &r.generators);
    let pairs = alg.dim() * (alg.dim() - 1) / 2;
    out.push(Check::from_bool(
        "dictionary.brackets",
        violations.is_empty(),
        serde_json::json!({
            "pairs": pairs,
            "violations": violations.len(),
            "printed_violations": r.printed_violations,
            "corrected_formula_violations": r.corrected_formula_violations,
            "corrections": r.corrections,
        }),
    ));
    if r.printed_violations > 0 {
        out.push(Check::anomaly(
            "dictionary.printed",
            serde_json::json!({ "printed_violations": r.printed_violations, "pairs": pairs }),
        ));
    }

    let rep = Representation::fock(j)?;
    out.extend(pfaffian_matrix_checks(&rep, &uea, "pfaffian")?);

    // ⋆-product forms of the Pfaffians
    for hat in [2, -2] {
        let got = star_coefficients(alg, &r.dictionary, hat);
        let pf = rep.evaluate(&uea.pfaffian(&IndexSet::hat(alg, hat)?));
        let matches_matrix = star_matrix(&r.operators, &got) == pf;
        out.push(Check::from_bool(
            format!("star-form.hat{}", hat),
            matches_matrix,
            got.iter().map(|((x, y), c)| (format!("{}*{}", x, y), c.clone())).collect::<Vec<_>>(),
        ));
        let printed = printed_star_coefficients(hat);
        if printed != got {
            let diff: Vec<_> = printed
                .iter()
                .filter(|(k, c)| got.get(k) != Some(c))
                .map(|((x, y), c)| serde_json::json!({ "term": format!("{}*{}", x, y), "printed": c, "measured": got.get(&(*x, *y)) }))
                .collect();
            out.push(Check::anomaly(format!("star-form.hat{}.printed", hat), diff));
        }
    }
    Ok(out.finish(started)?)
}
