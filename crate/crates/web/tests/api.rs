use quasispin_web::{classify_json, commutator_json, dimension_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn trivial_weight_has_one_state() {
    let t = parse(classify_json("0", "0").unwrap());
    assert_eq!(t["states"].as_array().unwrap().len(), 1);
    assert_eq!(t["states"][0]["k"], 0);
}

#[test]
fn adjoint_dimension() {
    let d = parse(dimension_json("-1", "-1").unwrap());
    assert_eq!(d["tableaux"], 10);
    assert_eq!(d["weyl_dimension"], 10);
}

#[test]
fn commutator_outside_set_vanishes() {
    // neither index in I: the commutator is zero
    let r = parse(commutator_json("-2,-1", 1, 2).unwrap());
    assert_eq!(r["rule_holds"], true);
    assert_eq!(r["commutator"], "0");
}

#[test]
fn bad_input_is_an_error() {
    assert!(classify_json("x", "0").is_err());
    assert!(dimension_json("-1/2", "-1").is_err());
    assert!(commutator_json("-1,-1", 0, 1).is_err());
}
