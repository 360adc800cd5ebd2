//! Hand-computed values on small representations.

use quasispin::arith::{QuadScalar, Rational};
use quasispin::gt::{classify_weight, enumerate_tableaux};
use quasispin::repr::{extremal_projector_o3, multiplicity_slices, omega_operator, pf11_probe, Representation};
use quasispin::uea::{IndexSet, Uea};

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

#[test]
fn defining_weights() {
    let mut ws: Vec<Vec<Rational>> = Representation::defining().weight_decompose().unwrap().into_iter().map(|w| w.weight.0).collect();
    ws.sort();
    let mut want = vec![vec![r(-1), r(0)], vec![r(1), r(0)], vec![r(0), r(-1)], vec![r(0), r(1)], vec![r(0), r(0)]];
    want.sort();
    assert_eq!(ws, want);
}

#[test]
fn fock_half_vacuum_and_decomposition() {
    let rep = Representation::fock(&Rational::half()).unwrap();
    assert_eq!(rep.dim(), 16);
    let irreps = rep.extract_irreps().unwrap();
    assert_eq!(irreps.iter().map(|i| i.dim()).sum::<usize>(), 16);
    // the vacuum sits at weight (0, -1)
    let ws = rep.weight_decompose().unwrap();
    assert!(ws.iter().any(|w| w.weight.0 == vec![r(0), r(-1)]));
}

#[test]
fn defining_slices() {
    let irrep = Representation::defining().extract_irreps().unwrap().remove(0);
    assert_eq!(irrep.highest_pair(), (r(0), r(-1)));
    let mut got: Vec<(Rational, Rational, usize)> =
        multiplicity_slices(&irrep).unwrap().into_iter().map(|s| (s.t.clone(), s.n.clone(), s.dim())).collect();
    got.sort();
    assert_eq!(got, vec![(r(-1), r(0), 1), (r(0), r(-1), 1), (r(0), r(1), 1)]);
}

#[test]
fn trivial_representation() {
    let triv = Representation::trivial();
    let irreps = triv.extract_irreps().unwrap();
    assert_eq!(irreps.len(), 1);
    assert_eq!(irreps[0].highest_pair(), (r(0), r(0)));
    let u = Uea::new(5).unwrap();
    let c = classify_weight(&r(0), &r(0), &[triv], &u).unwrap();
    assert_eq!(c.table.states.len(), 1);
    let s = &c.table.states[0];
    assert!(s.t.is_zero() && s.tau0.is_zero() && s.n.is_zero() && s.k == 0);
    let rows = pf11_probe(&irreps[0], &multiplicity_slices(&irreps[0]).unwrap(), &u);
    assert_eq!(rows[0].measured, Some(Rational::zero()));
}

#[test]
fn projector_on_triplet() {
    // T = -1 triplet of the defining rep: highest vector kept, the rest killed
    let rep = Representation::defining();
    let p = extremal_projector_o3(&rep).unwrap();
    assert!(p.check(&rep).all());
    let ws = rep.weight_decompose().unwrap();
    let at = |a: i64, b: i64| ws.iter().find(|w| w.weight.0 == vec![r(a), r(b)]).unwrap().basis[0].clone();
    let high = at(-1, 0);
    assert_eq!(p.matrix.mul_vec(&high), high);
    assert!(p.matrix.mul_vec(&at(1, 0)).iter().all(QuadScalar::is_zero));
    assert!(p.matrix.mul_vec(&at(0, 0)).iter().all(QuadScalar::is_zero));
}

#[test]
fn omega_on_defining() {
    let u = Uea::new(5).unwrap();
    let irrep = Representation::defining().extract_irreps().unwrap().remove(0);
    let om = omega_operator(&irrep, &u).unwrap();
    assert!(om.checks.all());
    // one nonzero per column: a signed permutation
    let d = om.matrix.to_dense();
    for c in 0..d.cols() {
        assert_eq!(d.column(c).iter().filter(|x| !x.is_zero()).count(), 1);
    }
}

#[test]
fn top_slice_maps_to_zero() {
    let u = Uea::new(5).unwrap();
    let irrep = Representation::defining().extract_irreps().unwrap().remove(0);
    let pf = irrep.rep.evaluate(&u.pfaffian(&IndexSet::hat(u.algebra(), 2).unwrap()));
    for s in multiplicity_slices(&irrep).unwrap() {
        if s.t.is_zero() {
            // N = -1 would map to N = 0, which has no T = 0 slice
            for v in &s.basis {
                let img = pf.mul_vec(v);
                let p = extremal_projector_o3(&irrep.rep).unwrap();
                assert!(p.matrix.mul_vec(&img).iter().all(QuadScalar::is_zero));
            }
        }
    }
}

#[test]
fn adjoint_counts() {
    assert_eq!(enumerate_tableaux(&r(-1), &r(-1)).unwrap().len(), 10);
    let adj = Representation::defining_power(2).unwrap().extract_irreps().unwrap();
    let v = adj.iter().find(|i| i.highest_pair() == (r(-1), r(-1))).expect("adjoint inside the square");
    let total: usize = multiplicity_slices(v).unwrap().iter().map(|s| s.dim() * (2 * s.t.abs().to_i64().unwrap() as usize + 1)).sum();
    assert_eq!(total, 10);
}
