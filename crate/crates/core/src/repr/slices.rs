use serde::Serialize;

use super::{restricted_kernel, Irrep, ReprError};
use crate::arith::{combine, is_zero_vector, EchelonBasis, ExactMatrix, Rational, SparseMatrix, Vector};
use crate::lie::Weight;

/// `V⁺_{T,N}`: o_3-highest vectors of o_3-weight `T` (the `F_11` eigenvalue)
/// and `F_22` eigenvalue `N`, in local coordinates of an irrep.
#[derive(Debug, Clone)]
pub struct MultiplicitySlice {
    pub t: Rational,
    pub n: Rational,
    pub basis: Vec<Vector>,
    solver: EchelonBasis,
}

impl MultiplicitySlice {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v` in the slice basis, if `v` lies in the slice.
    pub fn coordinates(&self, v: &[crate::arith::QuadScalar]) -> Option<Vector> {
        self.solver.coordinates(v)
    }

    pub fn contains(&self, v: &[crate::arith::QuadScalar]) -> bool {
        self.solver.contains(v)
    }

    /// Ambient (irrep-local) vector with the given slice coordinates.
    pub fn vector(&self, coords: &[crate::arith::QuadScalar]) -> Vector {
        let d = self.basis.first().map_or(0, Vec::len);
        combine(d, coords, &self.basis)
    }
}

/// All nonempty slices, ordered by `(T, N)`.
pub fn multiplicity_slices(irrep: &Irrep) -> Result<Vec<MultiplicitySlice>, ReprError> {
    let d = irrep.dim();
    let e = irrep.rep.matrix(-1, 0);
    let mut weights: Vec<Weight> = irrep.weights.clone();
    weights.sort();
    weights.dedup();
    let mut out = Vec::new();
    for w in weights {
        let (t, n) = (w.0[0].clone(), w.0[1].clone());
        if t.is_positive() {
            continue;
        }
        let basis = restricted_kernel(&e, &irrep.block(&w));
        if basis.is_empty() {
            continue;
        }
        let solver = EchelonBasis::from_vectors(d, &basis);
        out.push(MultiplicitySlice { t, n, basis, solver });
    }
    let total: usize = out
        .iter()
        .map(|s| s.dim() * ((-s.t.clone() * Rational::from_int(2)).to_i64().expect("integral 2|T|") as usize + 1))
        .sum();
    if total != d {
        return Err(ReprError::DimensionMismatch(format!(
            "slices account for {} of {} dimensions",
            total, d
        )));
    }
    Ok(out)
}

/// Matrix of a Pfaffian between two slices: columns are images of the source
/// basis in target coordinates.
#[derive(Debug, Clone, Serialize)]
pub struct SliceMap {
    /// `2` for `PfF_{hat 2}`, `-2` for `PfF_{hat -2}`.
    pub hat: i32,
    pub t: Rational,
    pub source_n: Rational,
    pub target_n: Rational,
    pub matrix: ExactMatrix,
}

impl SliceMap {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn nullity(&self) -> usize {
        self.matrix.cols() - self.rank()
    }
}

/// Maps `V⁺_{T,N} → V⁺_{T,N±1}` induced by `pf` (the matrix of `PfF_{hat r}` on
/// the irrep). When the target slice is empty the images must vanish; no map
/// is emitted then.
pub fn pf_slice_maps(slices: &[MultiplicitySlice], pf: &SparseMatrix, hat: i32) -> Result<Vec<SliceMap>, ReprError> {
    let step = Rational::from_int(if hat > 0 { 1 } else { -1 });
    let mut out = Vec::new();
    for s in slices {
        let tn = &s.n + &step;
        let target = slices.iter().find(|x| x.t == s.t && x.n == tn);
        let images: Vec<Vector> = s.basis.iter().map(|b| pf.mul_vec(b)).collect();
        let Some(target) = target else {
            if let Some(k) = images.iter().position(|v| !is_zero_vector(v)) {
                return Err(ReprError::ImageOutsideSlice(format!(
                    "PfF hat {} sends basis vector {} of (T={}, N={}) to a nonzero vector, but there is no slice at N={}",
                    hat, k, s.t, s.n, tn
                )));
            }
            continue;
        };
        let mut cols = Vec::with_capacity(images.len());
        for (k, v) in images.iter().enumerate() {
            let c = target.coordinates(v).ok_or_else(|| {
                ReprError::ImageOutsideSlice(format!(
                    "PfF hat {} image of basis vector {} of (T={}, N={}) is not in the slice at N={}",
                    hat, k, s.t, s.n, tn
                ))
            })?;
            cols.push(c);
        }
        let matrix = ExactMatrix::from_columns(target.dim(), &cols).expect("consistent sizes");
        out.push(SliceMap { hat, t: s.t.clone(), source_n: s.n.clone(), target_n: tn, matrix });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::Representation;
    use crate::uea::{IndexSet, Uea};

    #[test]
    fn defining_slices() {
        let irrep = Representation::defining().extract_irreps().unwrap().remove(0);
        let slices = multiplicity_slices(&irrep).unwrap();
        let got: Vec<(String, String, usize)> = slices.iter().map(|s| (s.t.to_string(), s.n.to_string(), s.dim())).collect();
        let expect = [("-1", "0", 1), ("0", "-1", 1), ("0", "1", 1)];
        assert_eq!(got.len(), 3);
        for (g, e) in got.iter().zip(expect) {
            assert_eq!((g.0.as_str(), g.1.as_str(), g.2), e);
        }
        // PfF_{hat 2} has no T=0 target at N=0: no maps, and the assertion passes.
        let u = Uea::new(5).unwrap();
        let pf = irrep.rep.evaluate(&u.pfaffian(&IndexSet::hat(u.algebra(), 2).unwrap()));
        let maps = pf_slice_maps(&slices, &pf, 2).unwrap();
        assert!(maps.is_empty());
    }
}
