//! Browser bindings. Every function takes plain strings or integers and
//! returns a JSON string; errors come back as JS exceptions.

use quasispin::arith::Rational;
use quasispin::gt::{check_highest, classify_weight, enumerate_tableaux};
use quasispin::lie::weyl_dimension_o5;
use quasispin::uea::{IndexSet, CommutatorSign, Uea};
use wasm_bindgen::prelude::*;

fn weight(l1: &str, l2: &str) -> Result<(Rational, Rational), String> {
    let a: Rational = l1.trim().parse().map_err(|e| format!("λ1: {}", e))?;
    let b: Rational = l2.trim().parse().map_err(|e| format!("λ2: {}", e))?;
    check_highest(&a, &b).map_err(|e| e.to_string())?;
    Ok((a, b))
}

/// Classification table of `V(λ1, λ2)` labelled by the predicted model.
pub fn classify_json(l1: &str, l2: &str) -> Result<String, String> {
    let (a, b) = weight(l1, l2)?;
    let uea = Uea::new(5).map_err(|e| e.to_string())?;
    let c = classify_weight(&a, &b, &[], &uea).map_err(|e| e.to_string())?;
    serde_json::to_string(&c.table).map_err(|e| e.to_string())
}

/// Tableau count next to the Weyl dimension.
pub fn dimension_json(l1: &str, l2: &str) -> Result<String, String> {
    let (a, b) = weight(l1, l2)?;
    let tableaux = enumerate_tableaux(&a, &b).map_err(|e| e.to_string())?.len();
    let weyl = weyl_dimension_o5(&a, &b).map_err(|e| e.to_string())?;
    Ok(serde_json::json!({ "tableaux": tableaux, "weyl_dimension": weyl }).to_string())
}

/// `[PfF_I, F_{j1,-j2}]` in U(o_5) against the commutator rule, both sign readings.
pub fn commutator_json(indices: &str, j1: i32, j2: i32) -> Result<String, String> {
    let uea = Uea::new(5).map_err(|e| e.to_string())?;
    let alg = uea.algebra();
    let list = indices
        .split(',')
        .map(|s| s.trim().parse::<i32>().map_err(|e| format!("{:?}: {}", s, e)))
        .collect::<Result<Vec<_>, _>>()?;
    let set = IndexSet::new(alg, list).map_err(|e| e.to_string())?;
    if !alg.indices().contains(&j1) || !alg.indices().contains(&j2) {
        return Err("j1, j2 must lie in -2..=2".into());
    }
    let st = uea.check_pf_commutator(&set, j1, j2, CommutatorSign::Standard).map_err(|e| e.to_string())?;
    let pt = uea.check_pf_commutator(&set, j1, j2, CommutatorSign::Flipped).map_err(|e| e.to_string())?;
    let lhs = uea.normal_order(&st.lhs);
    Ok(serde_json::json!({
        "set": set.to_string(),
        "commutator": lhs.display(alg),
        "rule_holds": st.holds(),
        "flipped_signs_hold": pt.holds(),
        "residual_with_flipped_signs": pt.residual.display(alg),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn classify(l1: &str, l2: &str) -> Result<String, JsError> {
    classify_json(l1, l2).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn dimension(l1: &str, l2: &str) -> Result<String, JsError> {
    dimension_json(l1, l2).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn commutator(indices: &str, j1: i32, j2: i32) -> Result<String, JsError> {
    commutator_json(indices, j1, j2).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_defining() {
        let v: serde_json::Value = serde_json::from_str(&classify_json("0", "-1").unwrap()).unwrap();
        assert_eq!(v["states"].as_array().unwrap().len(), 5);
        assert!(classify_json("1", "0").is_err());
    }

    #[test]
    fn dimensions_agree() {
        let v: serde_json::Value = serde_json::from_str(&dimension_json("-1/2", "-3/2").unwrap()).unwrap();
        assert_eq!(v["tableaux"], 16);
        assert_eq!(v["weyl_dimension"], 16);
    }

    #[test]
    fn commutator_rule() {
        let v: serde_json::Value = serde_json::from_str(&commutator_json("-1,0", -1, 1).unwrap()).unwrap();
        assert_eq!(v["rule_holds"], true);
        assert_eq!(v["flipped_signs_hold"], false);
        assert!(commutator_json("-1,7", 0, 1).is_err());
    }
}
