use serde::Serialize;

use super::{restricted_kernel, Irrep, ReprError};
use crate::arith::{QuadScalar, SparseMatrix, Vector};
use crate::lie::RootKind;
use crate::uea::{omega_sign, Uea};

/// Matrix `Ω` on an irrep with `Ω M(X) = M(ω(X)) Ω`, where `ω(F_ij) = -s_i s_j F_ji`
/// (`s_0 = -1`, else `1`). `Ω` sends `V_λ` to `V_{-λ}` and is fixed by `Ω v_hw = v_lw`.
#[derive(Debug, Clone)]
pub struct OmegaOperator {
    pub matrix: SparseMatrix,
    pub checks: OmegaChecks,
}

#[derive(Debug, Clone, Serialize)]
pub struct OmegaChecks {
    /// `Ω M(F_g) = M(ω(F_g)) Ω` for every generator.
    pub intertwines: bool,
    /// `Ω²` is a scalar matrix; the scalar if so.
    pub square_scalar: Option<QuadScalar>,
    /// `Ω M(PfF_{hat -2}) = -M(PfF_{hat 2}) Ω`.
    pub conjugates_pfaffians: bool,
    /// Weight spaces are sent to their negatives.
    pub negates_weights: bool,
}

impl OmegaChecks {
    pub fn all(&self) -> bool {
        self.intertwines && self.square_scalar.is_some() && self.conjugates_pfaffians && self.negates_weights
    }
}

/// `M(ω(F_g))` on the irrep.
fn omega_image(irrep: &Irrep, g: usize) -> SparseMatrix {
    let gi = irrep.rep.algebra().generator(g);
    irrep.rep.matrix(gi.j, gi.i).scale(&QuadScalar::from_int(omega_sign(gi.i, gi.j)))
}

/// Builds `Ω` by propagation along the lowering provenance of the irrep basis:
/// `Ω(F_l v) = M(ω(F_l)) Ω v`. Then verifies the intertwining relations.
pub fn omega_operator(irrep: &Irrep, uea: &Uea) -> Result<OmegaOperator, ReprError> {
    let d = irrep.dim();
    let rep = &irrep.rep;
    let alg = rep.algebra();
    let lowest_weight = -&irrep.highest;
    let block = irrep.block(&lowest_weight);
    // lowest vector: killed by all lowering operators
    let mut stacked = SparseMatrix::zeros(0, d);
    for &l in &alg.of_kind(RootKind::Lowering) {
        stacked = stack(&stacked, &rep.generators()[l]);
    }
    let lowest = restricted_kernel(&stacked, &block);
    if lowest.len() != 1 {
        return Err(ReprError::NoIntertwiner(format!(
            "expected a unique lowest vector at {}, found {}",
            lowest_weight,
            lowest.len()
        )));
    }
    let images: Vec<SparseMatrix> = (0..alg.dim()).map(|g| omega_image(irrep, g)).collect();
    let mut cols: Vec<Vector> = Vec::with_capacity(d);
    for i in 0..d {
        let col = match irrep.provenance[i] {
            None => lowest[0].clone(),
            Some((parent, l)) => images[l].mul_vec(&cols[parent]),
        };
        cols.push(col);
    }
    let mut trip = Vec::new();
    for (c, col) in cols.iter().enumerate() {
        for (r, x) in col.iter().enumerate() {
            if !x.is_zero() {
                trip.push((r, c, x.clone()));
            }
        }
    }
    let omega = SparseMatrix::from_triplets(d, d, trip);

    let intertwines = (0..alg.dim()).all(|g| {
        omega.mul(&rep.generators()[g]).expect("square") == images[g].mul(&omega).expect("square")
    });
    let sq = omega.mul(&omega).expect("square");
    let c = sq.get(0, 0);
    let square_scalar = (sq == SparseMatrix::identity(d).scale(&c) && !c.is_zero()).then_some(c);
    let pf = |r: i32| rep.evaluate(&uea.pfaffian(&crate::uea::IndexSet::hat(alg, r).expect("o_5 index")));
    let (p2, pm2) = (pf(2), pf(-2));
    let conjugates_pfaffians =
        omega.mul(&pm2).expect("square") == p2.mul(&omega).expect("square").scale(&QuadScalar::from_int(-1));
    let negates_weights = (0..d).all(|c| {
        omega.mul_vec(&crate::arith::unit_vector(d, c)).iter().enumerate().all(|(r, x)| x.is_zero() || irrep.weights[r] == -&irrep.weights[c])
    });
    Ok(OmegaOperator {
        matrix: omega,
        checks: OmegaChecks { intertwines, square_scalar, conjugates_pfaffians, negates_weights },
    })
}

/// Vertical concatenation.
fn stack(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    let mut trip = Vec::new();
    for r in 0..a.rows() {
        for (c, x) in a.row(r) {
            trip.push((r, *c, x.clone()));
        }
    }
    for r in 0..b.rows() {
        for (c, x) in b.row(r) {
            trip.push((a.rows() + r, *c, x.clone()));
        }
    }
    SparseMatrix::from_triplets(a.rows() + b.rows(), a.cols().max(b.cols()), trip)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::Representation;

    #[test]
    fn omega_on_defining_is_a_signed_antidiagonal() {
        let u = Uea::new(5).unwrap();
        let irrep = Representation::defining().extract_irreps().unwrap().remove(0);
        let om = omega_operator(&irrep, &u).unwrap();
        assert!(om.checks.all(), "{:?}", om.checks);
        for c in 0..5 {
            let col = om.matrix.mul_vec(&crate::arith::unit_vector(5, c));
            assert_eq!(col.iter().filter(|x| !x.is_zero()).count(), 1);
        }
    }

    #[test]
    fn omega_on_trivial() {
        let u = Uea::new(5).unwrap();
        let irrep = Representation::trivial().extract_irreps().unwrap().remove(0);
        let om = omega_operator(&irrep, &u).unwrap();
        assert!(om.checks.all());
        assert!(om.matrix.get(0, 0).is_one());
    }
}
