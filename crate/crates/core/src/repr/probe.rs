use serde::Serialize;

use super::{Irrep, MultiplicitySlice};
use crate::arith::{is_zero_vector, scale_vector, QuadScalar, Rational, SparseMatrix, Vector};
use crate::uea::{IndexSet, Uea};

/// Scalar `c` with `a = c·b`, if one exists. Two zero vectors give `None`.
fn ratio(a: &[QuadScalar], b: &[QuadScalar]) -> Option<QuadScalar> {
    let k = b.iter().position(|x| !x.is_zero())?;
    let c = &a[k] / &b[k];
    (scale_vector(b, &c) == a).then_some(c)
}

/// Common ratio over a list of vector pairs.
fn common_ratio(pairs: &[(Vector, Vector)]) -> Option<QuadScalar> {
    let mut c: Option<QuadScalar> = None;
    for (a, b) in pairs {
        if is_zero_vector(a) && is_zero_vector(b) {
            continue;
        }
        let r = ratio(a, b)?;
        match &c {
            None => c = Some(r),
            Some(c0) if *c0 == r => {}
            Some(_) => return None,
        }
    }
    c
}

/// `PfF_{-1,1}` on the o_3-highest vectors of one slice.
#[derive(Debug, Clone, Serialize)]
pub struct Pf11ProbeRow {
    pub t: Rational,
    pub n: Rational,
    /// Scalar by which `PfF_{-1,1}` acts, if it acts by a scalar.
    pub measured: Option<Rational>,
    /// `D_1(T) = T + 1/2`.
    pub d1: Rational,
    /// `D_1(T - 1/2) = T`, the variant with the ρ-shift removed.
    pub d1_shifted: Rational,
    pub matches_f11: bool,
    pub matches_d1: bool,
    pub matches_shifted: bool,
}

pub fn pf11_probe(irrep: &Irrep, slices: &[MultiplicitySlice], uea: &Uea) -> Vec<Pf11ProbeRow> {
    let set = IndexSet::new(uea.algebra(), vec![-1, 1]).expect("o_5 indices");
    let m = irrep.rep.evaluate(&uea.pfaffian(&set));
    slices
        .iter()
        .map(|s| {
            let pairs: Vec<(Vector, Vector)> = s.basis.iter().map(|v| (m.mul_vec(v), v.clone())).collect();
            let measured = common_ratio(&pairs).and_then(|c| c.as_rational().cloned()).or_else(|| {
                pairs.iter().all(|(a, _)| is_zero_vector(a)).then(Rational::zero)
            });
            let d1 = &s.t + &Rational::half();
            let d1_shifted = s.t.clone();
            Pf11ProbeRow {
                t: s.t.clone(),
                n: s.n.clone(),
                matches_f11: measured.as_ref() == Some(&s.t),
                matches_d1: measured.as_ref() == Some(&d1),
                matches_shifted: measured.as_ref() == Some(&d1_shifted),
                measured,
                d1,
                d1_shifted,
            }
        })
        .collect()
}

/// Ratio `c` in `PfF_{hat 2} v = c · p F_{20} v` on the o_3-highest vectors of a slice.
#[derive(Debug, Clone, Serialize)]
pub struct CProbeRow {
    pub t: Rational,
    pub n: Rational,
    /// `None` when the two sides are not proportional on the slice.
    pub ratio: Option<QuadScalar>,
    /// Both sides vanish on the whole slice.
    pub both_zero: bool,
    /// Names of the candidate formulas that reproduce the ratio.
    pub matches: Vec<String>,
}

/// Candidate values of the σ-flip constant at o_3-weight `t`: the printed
/// polynomial `C_1(h) = -D_1(h) - 4(-1)^{t+1}` for both parities of the
/// unbound `t`, and the claimed constant `1`.
pub fn c_candidates(t: &Rational) -> Vec<(String, QuadScalar)> {
    let d1 = t + &Rational::half();
    vec![
        ("C_1 with (-1)^(t+1) = 1".to_string(), QuadScalar::from(-&d1 - Rational::from_int(4))),
        ("C_1 with (-1)^(t+1) = -1".to_string(), QuadScalar::from(-&d1 + Rational::from_int(4))),
        ("constant 1".to_string(), QuadScalar::one()),
    ]
}

pub fn c_probe(irrep: &Irrep, slices: &[MultiplicitySlice], uea: &Uea, projector: &SparseMatrix) -> Vec<CProbeRow> {
    let pf = irrep.rep.evaluate(&uea.pfaffian(&IndexSet::hat(uea.algebra(), 2).expect("o_5 index")));
    let f20 = irrep.rep.matrix(2, 0);
    slices
        .iter()
        .map(|s| {
            let pairs: Vec<(Vector, Vector)> =
                s.basis.iter().map(|v| (pf.mul_vec(v), projector.mul_vec(&f20.mul_vec(v)))).collect();
            let both_zero = pairs.iter().all(|(a, b)| is_zero_vector(a) && is_zero_vector(b));
            let ratio = common_ratio(&pairs);
            let matches = match &ratio {
                Some(r) => c_candidates(&s.t).into_iter().filter(|(_, c)| c == r).map(|(name, _)| name).collect(),
                None => Vec::new(),
            };
            CProbeRow { t: s.t.clone(), n: s.n.clone(), ratio, both_zero, matches }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::{multiplicity_slices, Representation};

    #[test]
    fn pf11_on_defining_and_trivial() {
        let u = Uea::new(5).unwrap();
        let irrep = Representation::defining().extract_irreps().unwrap().remove(0);
        let slices = multiplicity_slices(&irrep).unwrap();
        for row in pf11_probe(&irrep, &slices, &u) {
            assert!(row.matches_f11 && row.matches_shifted && !row.matches_d1);
        }
        let triv = Representation::trivial().extract_irreps().unwrap().remove(0);
        let rows = pf11_probe(&triv, &multiplicity_slices(&triv).unwrap(), &u);
        assert_eq!(rows[0].measured, Some(Rational::zero()));
    }
}
