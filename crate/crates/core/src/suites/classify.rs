use std::collections::BTreeMap;
use std::time::Instant;

use super::repr::classification_checks;
use super::SuiteError;
use crate::arith::Rational;
use crate::gt::{check_highest, classify_weight, enumerate_tableaux, ClassifiedIrrep};
use crate::lie::weyl_dimension_o5;
use crate::repr::Representation;
use crate::report::{Check, VerificationReport};
use crate::uea::Uea;

/// Representations searched for a realized copy of `V(λ1, λ2)`, smallest first.
pub fn realization_sources(l1: &Rational, slow: bool) -> Result<Vec<Representation>, SuiteError> {
    let half_integral = !l1.is_integer();
    let mut out = Vec::new();
    if half_integral {
        out.push(Representation::fock(&Rational::half())?);
        out.push(Representation::fock(&Rational::frac(3, 2))?);
    } else {
        out.push(Representation::defining_power(1)?);
        out.push(Representation::fock(&Rational::half())?);
        out.push(Representation::defining_power(2)?);
        out.push(Representation::fock(&Rational::frac(3, 2))?);
        out.push(Representation::defining_power(3)?);
        if slow {
            out.push(Representation::defining_power(4)?);
        }
    }
    Ok(out)
}

/// Classification table of `V(λ1, λ2)` with its checks. Invalid weights are
/// usage errors.
pub fn classify_suite(l1: &Rational, l2: &Rational, slow: bool) -> Result<(ClassifiedIrrep, VerificationReport), SuiteError> {
    if let Err(e) = check_highest(l1, l2) {
        return Err(SuiteError::Usage(e.to_string()));
    }
    let started = Instant::now();
    let uea = Uea::new(5)?;
    // lowest λ2 occurring in the searched sources
    let floor = match (l1.is_integer(), slow) {
        (false, _) => Rational::frac(-3, 2),
        (true, false) => Rational::from_int(-3),
        (true, true) => Rational::from_int(-4),
    };
    let reachable = l2 >= &floor;
    let sources = if reachable { realization_sources(l1, slow)? } else { Vec::new() };
    let classified = classify_weight(l1, l2, &sources, &uea)?;
    let mut out = VerificationReport::new(format!("classify-V({},{})", l1, l2));

    let weyl = weyl_dimension_o5(l1, l2)?;
    let tableaux = enumerate_tableaux(l1, l2)?;
    out.push(Check::from_bool(
        "tableau-count",
        tableaux.len() as u64 == weyl,
        serde_json::json!({ "tableaux": tableaux.len(), "weyl_dimension": weyl }),
    ));
    let rows = classified.table.states.len();
    out.push(Check::from_bool("table-rows", rows as u64 == weyl, serde_json::json!({ "rows": rows, "weyl_dimension": weyl })));

    // table slices against the tableau quantum numbers
    let mut from_tableaux: BTreeMap<(Rational, Rational, Rational), usize> = BTreeMap::new();
    for t in &tableaux {
        let q = t.quantum_numbers();
        *from_tableaux.entry((q.t, q.tau0, q.n)).or_default() += 1;
    }
    let mut from_table: BTreeMap<(Rational, Rational, Rational), usize> = BTreeMap::new();
    for s in &classified.table.states {
        *from_table.entry((s.t.clone(), s.tau0.clone(), s.n.clone())).or_default() += 1;
    }
    let diff: Vec<String> = from_tableaux
        .iter()
        .filter(|(k, v)| from_table.get(*k) != Some(v))
        .map(|((t, tau0, n), v)| format!("T={} tau0={} N={}: tableaux {} table {}", t, tau0, n, v, from_table.get(&(t.clone(), tau0.clone(), n.clone())).copied().unwrap_or(0)))
        .collect();
    let same_keys = from_tableaux.len() == from_table.len();
    out.push(Check::from_bool(
        "table-matches-tableaux",
        diff.is_empty() && same_keys,
        if diff.is_empty() && same_keys { serde_json::json!({ "slices": from_tableaux.len() }) } else { serde_json::json!(diff) },
    ));
    out.push(Check::pass("origin").with_witness(&classified.origin));
    if let Some(v) = &classified.validation {
        out.extend(classification_checks("realized", v));
    }
    Ok((classified, out.finish(started)?))
}
