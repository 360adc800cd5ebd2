//! Finite-dimensional o_5 representations: weight spaces, irreducible
//! components, o_3 multiplicity slices, the o_3 extremal projector, the
//! reflection operator and the Pfaffian action between slices.

mod omega;
mod probe;
mod projector;
mod slices;

pub use omega::{omega_operator, OmegaOperator};
pub use probe::{c_candidates, c_probe, pf11_probe, CProbeRow, Pf11ProbeRow};
pub use projector::{extremal_projector_o3, ExtremalProjector, SingularWeight};
pub use slices::{multiplicity_slices, pf_slice_maps, MultiplicitySlice, SliceMap};

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

use crate::arith::{combine, is_zero_vector, EchelonBasis, ExactMatrix, QuadScalar, Rational, SparseMatrix, Vector};
use crate::fock::{dictionary_to_o5, verify_representation, FockError};
use crate::lie::{weyl_dimension_o5, OrthogonalAlgebra, RootKind, Weight};
use crate::uea::{apply_element, evaluate, UeaElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReprError {
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error("generator matrices violate {0} brackets")]
    NotRepresentation(usize),
    #[error("expected {expected} generator matrices of size {dim}")]
    Shape { expected: usize, dim: usize },
    #[error("Cartan action is not diagonalizable: weight spaces cover {found} of {dim} dimensions")]
    NotDiagonalizable { found: usize, dim: usize },
    #[error("dimension accounting failed: {0}")]
    DimensionMismatch(String),
    #[error("vector left its weight space under {0}")]
    NotInvariant(String),
    #[error("Pfaffian image leaves the target slice: {0}")]
    ImageOutsideSlice(String),
    #[error("no intertwiner: {0}")]
    NoIntertwiner(String),
    #[error("Cartan matrices are not diagonal in the given basis")]
    NonDiagonalCartan,
    #[error("tensor power {0} is outside 1..=3")]
    Power(u32),
}

/// Where a representation came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Trivial,
    Defining,
    DefiningPower(u32),
    Fock(Rational),
    Irreducible { parent: String, highest: Weight },
    Custom(String),
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Source::Trivial => write!(f, "trivial"),
            Source::Defining => write!(f, "defining"),
            Source::DefiningPower(p) => write!(f, "defining^{}", p),
            Source::Fock(j) => write!(f, "Fock({})", j),
            Source::Irreducible { parent, highest } => write!(f, "{} > V{}", parent, highest),
            Source::Custom(s) => write!(f, "{}", s),
        }
    }
}

/// Generator matrices of o_5 in canonical order, checked to satisfy the bracket table.
#[derive(Debug, Clone)]
pub struct Representation {
    source: Source,
    alg: OrthogonalAlgebra,
    gens: Vec<SparseMatrix>,
}

/// A simultaneous eigenspace of `F_11`, `F_22`.
#[derive(Debug, Clone)]
pub struct WeightSpace {
    pub weight: Weight,
    pub basis: Vec<Vector>,
}

fn o5() -> OrthogonalAlgebra {
    OrthogonalAlgebra::new(5).expect("o_5")
}

impl Representation {
    pub fn new(source: Source, gens: Vec<SparseMatrix>) -> Result<Self, ReprError> {
        let alg = o5();
        let dim = gens.first().map_or(0, SparseMatrix::rows);
        if gens.len() != alg.dim() || gens.iter().any(|g| g.rows() != dim || g.cols() != dim) {
            return Err(ReprError::Shape { expected: alg.dim(), dim });
        }
        let bad = verify_representation(&alg, &gens);
        if !bad.is_empty() {
            return Err(ReprError::NotRepresentation(bad.len()));
        }
        Ok(Representation { source, alg, gens })
    }

    fn unchecked(source: Source, gens: Vec<SparseMatrix>) -> Self {
        Representation { source, alg: o5(), gens }
    }

    pub fn trivial() -> Self {
        Self::unchecked(Source::Trivial, vec![SparseMatrix::zeros(1, 1); 10])
    }

    pub fn defining() -> Self {
        let alg = o5();
        let gens = alg.defining_sparse();
        Self::unchecked(Source::Defining, gens)
    }

    /// `V ⊗ W` with `X ↦ X ⊗ 1 + 1 ⊗ X`.
    pub fn tensor(&self, other: &Representation, source: Source) -> Self {
        let (a, b) = (SparseMatrix::identity(self.dim()), SparseMatrix::identity(other.dim()));
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(x, y)| x.kron(&b).add(&a.kron(y)).expect("same size"))
            .collect();
        Self::unchecked(source, gens)
    }

    pub fn defining_power(p: u32) -> Result<Self, ReprError> {
        if !(1..=3).contains(&p) {
            return Err(ReprError::Power(p));
        }
        let d = Self::defining();
        let mut out = d.clone();
        for k in 2..=p {
            out = out.tensor(&d, Source::DefiningPower(k));
        }
        Ok(out)
    }

    /// The quasi-spin realization on Fock(j), with the repaired dictionary.
    pub fn fock(j: &Rational) -> Result<Self, ReprError> {
        let r = dictionary_to_o5(j)?;
        Ok(Self::unchecked(Source::Fock(j.clone()), r.generators))
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn label(&self) -> String {
        self.source.to_string()
    }

    pub fn algebra(&self) -> &OrthogonalAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.gens.first().map_or(0, SparseMatrix::rows)
    }

    /// Matrices of the canonical generators.
    pub fn generators(&self) -> &[SparseMatrix] {
        &self.gens
    }

    /// Matrix of `F_ij` for any valid pair.
    pub fn matrix(&self, i: i32, j: i32) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.dim(), self.dim());
        for (k, c) in self.alg.element(i, j).expect("valid o_5 indices") {
            out = out.lincomb(&QuadScalar::one(), &self.gens[k], &c.into()).expect("square");
        }
        out
    }

    pub fn bracket_violations(&self) -> usize {
        verify_representation(&self.alg, &self.gens).len()
    }

    pub fn evaluate(&self, e: &UeaElement) -> SparseMatrix {
        if self.dim() == 0 {
            return SparseMatrix::zeros(0, 0);
        }
        evaluate(e, &self.gens)
    }

    pub fn apply(&self, e: &UeaElement, v: &[QuadScalar]) -> Vector {
        apply_element(e, &self.gens, v)
    }

    /// Simultaneous eigenspaces of `F_11`, `F_22`, ordered by weight.
    pub fn weight_decompose(&self) -> Result<Vec<WeightSpace>, ReprError> {
        let h = [self.matrix(1, 1), self.matrix(2, 2)];
        let dim = self.dim();
        let mut spaces: BTreeMap<Weight, Vec<Vector>> = BTreeMap::new();
        if h.iter().all(SparseMatrix::is_diagonal) {
            let (d1, d2) = (h[0].diagonal(), h[1].diagonal());
            for i in 0..dim {
                let w = [&d1[i], &d2[i]].map(|x| x.as_rational().cloned());
                let [Some(a), Some(b)] = w else {
                    return Err(ReprError::NotDiagonalizable { found: 0, dim });
                };
                let mut e = vec![QuadScalar::zero(); dim];
                e[i] = QuadScalar::one();
                spaces.entry(Weight(vec![a, b])).or_default().push(e);
            }
        } else {
            // Eigenvalues of F_rr are half-integers bounded by the row sums.
            let bound = h
                .iter()
                .flat_map(|m| (0..dim).map(move |i| m.row(i).iter().map(|(_, x)| x.to_f64().abs()).sum::<f64>()))
                .fold(0.0f64, f64::max)
                .ceil() as i64;
            let dense = h.map(|m| m.to_dense());
            for a2 in -2 * bound..=2 * bound {
                for b2 in -2 * bound..=2 * bound {
                    let (a, b) = (Rational::frac(a2, 2), Rational::frac(b2, 2));
                    let mut rows = Vec::with_capacity(2 * dim);
                    for (m, c) in dense.iter().zip([&a, &b]) {
                        for i in 0..dim {
                            let mut r = m.row(i).to_vec();
                            r[i] -= &QuadScalar::from(c.clone());
                            rows.push(r);
                        }
                    }
                    let ker = ExactMatrix::from_rows(rows).expect("rectangular").kernel();
                    if !ker.is_empty() {
                        spaces.insert(Weight(vec![a, b]), ker);
                    }
                }
            }
        }
        let found: usize = spaces.values().map(Vec::len).sum();
        if found != dim {
            return Err(ReprError::NotDiagonalizable { found, dim });
        }
        Ok(spaces.into_iter().map(|(weight, basis)| WeightSpace { weight, basis }).collect())
    }

    /// Vectors of a weight space killed by every raising operator.
    fn highest_vectors(&self, space: &WeightSpace) -> Vec<Vector> {
        let raising = self.alg.of_kind(RootKind::Raising);
        let dim = self.dim();
        let images: Vec<Vec<Vector>> = space.basis.iter().map(|b| raising.iter().map(|&r| self.gens[r].mul_vec(b)).collect()).collect();
        let mut rows = Vec::new();
        for r in 0..raising.len() {
            for i in 0..dim {
                let row: Vector = images.iter().map(|im| im[r][i].clone()).collect();
                if !is_zero_vector(&row) {
                    rows.push(row);
                }
            }
        }
        let coeffs = if rows.is_empty() {
            (0..space.basis.len()).map(|k| crate::arith::unit_vector(space.basis.len(), k)).collect()
        } else {
            ExactMatrix::from_rows(rows).expect("rectangular").kernel()
        };
        coeffs.iter().map(|c| combine(dim, c, &space.basis)).collect()
    }

    /// Decomposes into irreducible components generated by highest vectors.
    pub fn extract_irreps(&self) -> Result<Vec<Irrep>, ReprError> {
        let spaces = self.weight_decompose()?;
        let mut out = Vec::new();
        for space in &spaces {
            for v in self.highest_vectors(space) {
                out.push(self.generate(&space.weight, v)?);
            }
        }
        let total: usize = out.iter().map(Irrep::dim).sum();
        if total != self.dim() {
            return Err(ReprError::DimensionMismatch(format!("irreducible components cover {} of {}", total, self.dim())));
        }
        Ok(out)
    }

    /// The submodule generated by a highest vector, by repeated lowering.
    fn generate(&self, highest: &Weight, v: Vector) -> Result<Irrep, ReprError> {
        let dim = self.dim();
        let lowering = self.alg.of_kind(RootKind::Lowering);
        let roots: Vec<Weight> = (0..self.alg.dim()).map(|g| self.alg.root_of(self.alg.generator(g))).collect();
        let mut blocks: BTreeMap<Weight, (EchelonBasis, Vec<usize>)> = BTreeMap::new();
        let mut basis = vec![v.clone()];
        let mut weights = vec![highest.clone()];
        let mut provenance = vec![None];
        let mut first = EchelonBasis::new(dim);
        first.insert(&v);
        blocks.insert(highest.clone(), (first, vec![0]));
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for &l in &lowering {
                let w = self.gens[l].mul_vec(&basis[i]);
                if is_zero_vector(&w) {
                    continue;
                }
                let wt = &weights[i] + &roots[l];
                let (block, idx) = blocks.entry(wt.clone()).or_insert_with(|| (EchelonBasis::new(dim), Vec::new()));
                if block.insert(&w) {
                    idx.push(basis.len());
                    queue.push_back(basis.len());
                    basis.push(w);
                    weights.push(wt);
                    provenance.push(Some((i, l)));
                }
            }
        }
        let expected = weyl_dimension_o5(&highest.0[0], &highest.0[1])
            .map_err(|e| ReprError::DimensionMismatch(format!("highest weight {}: {}", highest, e)))? as usize;
        if basis.len() != expected {
            return Err(ReprError::DimensionMismatch(format!(
                "component with highest weight {} has dimension {}, Weyl formula gives {}",
                highest,
                basis.len(),
                expected
            )));
        }
        // Local matrices: coordinates of g·b_i in the block of its weight.
        let d = basis.len();
        let mut gens = Vec::with_capacity(self.alg.dim());
        for g in 0..self.alg.dim() {
            let mut trip = Vec::new();
            for i in 0..d {
                let w = self.gens[g].mul_vec(&basis[i]);
                if is_zero_vector(&w) {
                    continue;
                }
                let wt = &weights[i] + &roots[g];
                let coords = blocks
                    .get(&wt)
                    .and_then(|(b, idx)| b.coordinates(&w).map(|c| (c, idx)))
                    .ok_or_else(|| ReprError::NotInvariant(self.alg.generator(g).to_string()))?;
                for (c, &row) in coords.0.into_iter().zip(coords.1) {
                    if !c.is_zero() {
                        trip.push((row, i, c));
                    }
                }
            }
            gens.push(SparseMatrix::from_triplets(d, d, trip));
        }
        let source = Source::Irreducible { parent: self.label(), highest: highest.clone() };
        Ok(Irrep {
            highest: highest.clone(),
            rep: Representation::unchecked(source, gens),
            weights,
            embedding: basis,
            provenance,
        })
    }
}

/// An irreducible component, with its own generator matrices in a basis of
/// weight vectors obtained by lowering from the highest vector.
#[derive(Debug, Clone)]
pub struct Irrep {
    pub highest: Weight,
    pub rep: Representation,
    /// Weight of each local basis vector.
    pub weights: Vec<Weight>,
    /// Local basis vectors in the ambient representation.
    pub embedding: Vec<Vector>,
    /// `(parent, lowering generator)` for every basis vector except the highest one.
    pub provenance: Vec<Option<(usize, usize)>>,
}

impl Irrep {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// `(λ1, λ2)`.
    pub fn highest_pair(&self) -> (Rational, Rational) {
        (self.highest.0[0].clone(), self.highest.0[1].clone())
    }

    /// Local indices of the basis vectors of weight `w`.
    pub fn block(&self, w: &Weight) -> Vec<usize> {
        (0..self.dim()).filter(|&i| &self.weights[i] == w).collect()
    }
}

/// Kernel of `m` restricted to the coordinate subspace spanned by `cols`,
/// returned as full-length vectors.
pub(crate) fn restricted_kernel(m: &SparseMatrix, cols: &[usize]) -> Vec<Vector> {
    let d = m.cols();
    let images: Vec<Vector> = cols.iter().map(|&i| m.mul_vec(&crate::arith::unit_vector(d, i))).collect();
    let rows: Vec<Vector> = (0..m.rows())
        .map(|r| images.iter().map(|c| c[r].clone()).collect::<Vector>())
        .filter(|r| !is_zero_vector(r))
        .collect();
    let coeffs = if rows.is_empty() {
        (0..cols.len()).map(|k| crate::arith::unit_vector(cols.len(), k)).collect()
    } else {
        ExactMatrix::from_rows(rows).expect("rectangular").kernel()
    };
    coeffs
        .iter()
        .map(|c| {
            let mut v = crate::arith::zero_vector(d);
            for (x, &i) in c.iter().zip(cols) {
                v[i] = x.clone();
            }
            v
        })
        .collect()
}

/// Basis indices grouped by weight, for a representation whose Cartan matrices are diagonal.
pub(crate) fn diagonal_weight_blocks(rep: &Representation) -> Result<BTreeMap<Weight, Vec<usize>>, ReprError> {
    let (h1, h2) = (rep.matrix(1, 1), rep.matrix(2, 2));
    if !h1.is_diagonal() || !h2.is_diagonal() {
        return Err(ReprError::NonDiagonalCartan);
    }
    let (d1, d2) = (h1.diagonal(), h2.diagonal());
    let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for i in 0..rep.dim() {
        let (Some(a), Some(b)) = (d1[i].as_rational(), d2[i].as_rational()) else {
            return Err(ReprError::NonDiagonalCartan);
        };
        out.entry(Weight(vec![a.clone(), b.clone()])).or_default().push(i);
    }
    Ok(out)
}

/// Representations used as sources of irreducible modules.
pub fn standard_sources() -> Result<Vec<Representation>, ReprError> {
    Ok(vec![
        Representation::fock(&Rational::half())?,
        Representation::fock(&Rational::frac(3, 2))?,
        Representation::defining_power(1)?,
        Representation::defining_power(2)?,
        Representation::defining_power(3)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64) -> Weight {
        Weight(vec![Rational::from_int(a), Rational::from_int(b)])
    }

    #[test]
    fn defining_weights() {
        let r = Representation::defining();
        assert_eq!(r.bracket_violations(), 0);
        let ws: Vec<Weight> = r.weight_decompose().unwrap().into_iter().map(|s| s.weight).collect();
        assert_eq!(ws, vec![w(-1, 0), w(0, -1), w(0, 0), w(0, 1), w(1, 0)]);
        let irreps = r.extract_irreps().unwrap();
        assert_eq!(irreps.len(), 1);
        assert_eq!(irreps[0].highest, w(0, -1));
        assert_eq!(irreps[0].rep.bracket_violations(), 0);
    }

    #[test]
    fn trivial_and_fock_half() {
        let t = Representation::trivial();
        let irreps = t.extract_irreps().unwrap();
        assert_eq!((irreps.len(), irreps[0].dim()), (1, 1));
        let f = Representation::fock(&Rational::half()).unwrap();
        let spaces = f.weight_decompose().unwrap();
        // vacuum: τ0 = 0, N = -1
        let vac = spaces.iter().find(|s| s.basis.iter().any(|b| b[0].is_one())).unwrap();
        assert_eq!(vac.weight, w(0, -1));
        let dims: usize = f.extract_irreps().unwrap().iter().map(Irrep::dim).sum();
        assert_eq!(dims, 16);
    }

    #[test]
    fn non_diagonal_cartan_path() {
        // conjugate the defining representation by a unipotent matrix
        let d = Representation::defining();
        let mut s = ExactMatrix::identity(5);
        s.set(0, 2, QuadScalar::one());
        let (s, si) = (SparseMatrix::from_dense(&s), SparseMatrix::from_dense(&s.inverse().unwrap()));
        let gens = d.generators().iter().map(|g| s.mul(g).unwrap().mul(&si).unwrap()).collect();
        let r = Representation::new(Source::Custom("conjugated".into()), gens).unwrap();
        assert_eq!(r.weight_decompose().unwrap().len(), 5);
        assert_eq!(r.extract_irreps().unwrap()[0].highest, w(0, -1));
    }
}
