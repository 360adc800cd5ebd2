use serde::Serialize;

use super::{diagonal_weight_blocks, restricted_kernel, ReprError, Representation};
use crate::arith::{axpy, factorial, is_zero_vector, unit_vector, QuadScalar, Rational, SparseMatrix, Vector};
use crate::lie::Weight;

/// A weight where some term of the series has a vanishing denominator.
#[derive(Debug, Clone, Serialize)]
pub struct SingularWeight {
    pub weight: Weight,
    /// Basis vectors of that weight that were projected to zero.
    pub vectors: usize,
    /// Whether the weight carries any o_3-highest vector (it should not).
    pub has_highest_vectors: bool,
}

/// The o_3 extremal projector `p = Σ_k (-1)^k / (k! Π_{i=1..k}(h+1+i)) f^k e^k`
/// with `e = F_{-1,0}`, `f = 2F_{0,-1}`, `h = [e, f] = 2F_{-1,-1}`.
#[derive(Debug, Clone)]
pub struct ExtremalProjector {
    pub matrix: SparseMatrix,
    pub singular: Vec<SingularWeight>,
}

/// Builds the projector column by column on a weight basis. Where a term has a
/// zero denominator the column is set to zero and the weight is recorded.
pub fn extremal_projector_o3(rep: &Representation) -> Result<ExtremalProjector, ReprError> {
    let d = rep.dim();
    let e = rep.matrix(-1, 0);
    let f = rep.matrix(0, -1).scale(&QuadScalar::from_int(2));
    let h = rep.matrix(-1, -1).scale(&QuadScalar::from_int(2));
    let h22 = rep.matrix(2, 2);
    if !h.is_diagonal() || !h22.is_diagonal() {
        return Err(ReprError::NonDiagonalCartan);
    }
    let hd: Vec<Rational> = h.diagonal().iter().map(|x| x.as_rational().cloned()).collect::<Option<_>>().ok_or(ReprError::NonDiagonalCartan)?;
    let nd: Vec<Rational> = h22.diagonal().iter().map(|x| x.as_rational().cloned()).collect::<Option<_>>().ok_or(ReprError::NonDiagonalCartan)?;
    let weight_of = |i: usize| Weight(vec![-&hd[i] / Rational::from_int(2), nd[i].clone()]);
    let mut trip = Vec::new();
    let mut singular: Vec<SingularWeight> = Vec::new();
    for i in 0..d {
        let hv = hd[i].clone();
        let u = unit_vector(d, i);
        let mut out = u.clone();
        let mut ek = u;
        let mut denom = Rational::one();
        let mut k = 0u32;
        let mut bad = false;
        loop {
            ek = e.mul_vec(&ek);
            if is_zero_vector(&ek) {
                break;
            }
            k += 1;
            denom = &denom * &(&hv + &Rational::from_int(1 + k as i64));
            if denom.is_zero() {
                bad = true;
                break;
            }
            let mut term = ek.clone();
            for _ in 0..k {
                term = f.mul_vec(&term);
            }
            let sign = if k.is_multiple_of(2) { 1 } else { -1 };
            let c = &Rational::from_int(sign) / &(&factorial(k) * &denom);
            axpy(&mut out, &c.into(), &term);
        }
        if bad {
            let w = weight_of(i);
            match singular.iter_mut().find(|s| s.weight == w) {
                Some(s) => s.vectors += 1,
                None => singular.push(SingularWeight { weight: w, vectors: 1, has_highest_vectors: false }),
            }
            continue;
        }
        for (r, x) in out.into_iter().enumerate() {
            if !x.is_zero() {
                trip.push((r, i, x));
            }
        }
    }
    // A singular weight must not carry o_3-highest vectors; otherwise zeroing would lose them.
    for s in singular.iter_mut() {
        let idx: Vec<usize> = (0..d).filter(|&i| weight_of(i) == s.weight).collect();
        s.has_highest_vectors = !restricted_kernel(&e, &idx).is_empty();
    }
    Ok(ExtremalProjector { matrix: SparseMatrix::from_triplets(d, d, trip), singular })
}

/// Checks of the projector against its defining properties.
#[derive(Debug, Clone, Serialize)]
pub struct ProjectorChecks {
    pub idempotent: bool,
    pub e_p_zero: bool,
    pub p_f_zero: bool,
    /// `p v = v` for every o_3-highest vector and `rank p = dim ker e`.
    pub image_is_highest: bool,
    pub singular_weights_clean: bool,
}

impl ProjectorChecks {
    pub fn all(&self) -> bool {
        self.idempotent && self.e_p_zero && self.p_f_zero && self.image_is_highest && self.singular_weights_clean
    }
}

impl ExtremalProjector {
    pub fn check(&self, rep: &Representation) -> ProjectorChecks {
        let p = &self.matrix;
        let e = rep.matrix(-1, 0);
        let f = rep.matrix(0, -1);
        let p2 = p.mul(p).expect("square");
        let blocks = diagonal_weight_blocks(rep).expect("projector was built on a weight basis");
        let mut fixes = true;
        let (mut rank, mut highest) = (0, 0);
        for idx in blocks.values() {
            let ker = restricted_kernel(&e, idx);
            fixes &= ker.iter().all(|v| &p.mul_vec(v) == v);
            highest += ker.len();
            let cols: Vec<Vector> = idx.iter().map(|&i| idx.iter().map(|&r| p.get(r, i)).collect()).collect();
            rank += crate::arith::ExactMatrix::from_columns(idx.len(), &cols).expect("sizes").rank();
        }
        ProjectorChecks {
            idempotent: &p2 == p,
            e_p_zero: e.mul(p).expect("square").is_zero(),
            p_f_zero: p.mul(&f).expect("square").is_zero(),
            image_is_highest: fixes && rank == highest,
            singular_weights_clean: self.singular.iter().all(|s| !s.has_highest_vectors),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projector_on_defining() {
        let r = Representation::defining();
        let p = extremal_projector_o3(&r).unwrap();
        assert!(p.check(&r).all());
        // o_3 content of the defining rep: a triplet and two singlets
        assert_eq!(p.matrix.to_dense().rank(), 3);
        // the o_3-lowest vector of the triplet (F_11 = 1) sits at a singular weight
        assert_eq!(p.singular.len(), 1);
        assert_eq!(p.singular[0].weight.0[0], Rational::one());
    }

    #[test]
    fn projector_on_fock_half() {
        let r = Representation::fock(&Rational::half()).unwrap();
        let p = extremal_projector_o3(&r).unwrap();
        assert!(p.check(&r).all());
    }
}
