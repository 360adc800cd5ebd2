//! The orthogonal Lie algebra o_N in the split realization `F_ij = E_ij - E_{-j,-i}`.
//!
//! Indices run over `-n..=n`, skipping 0 when `N = 2n` is even. The relation
//! `F_ij = -F_{-j,-i}` is used to reduce every pair to a canonical
//! representative: `(i, j)` is canonical when it is lexicographically smaller
//! than `(-j, -i)`. Diagonal pairs `(i, -i)` give zero.
//!
//! Polarity: `F_ij` with `i < j` is a raising operator. With weights read on
//! `F_11, ..., F_nn` this makes highest weights satisfy `0 >= λ1 >= ... >= λn`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{ExactMatrix, QuadScalar, Rational, SparseMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("o_N needs N >= 2, got {0}")]
    InvalidRank(usize),
    #[error("index {index} out of range for o_{big_n}")]
    InvalidIndex { index: i32, big_n: usize },
    #[error("weight must satisfy 0 >= λ1 >= λ2 with all entries integers or all half-integers, got ({0}, {1})")]
    InvalidHighestWeight(Rational, Rational),
}

/// A pair `(i, j)` naming `F_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenIndex {
    pub i: i32,
    pub j: i32,
}

impl GenIndex {
    pub fn new(i: i32, j: i32) -> Self {
        GenIndex { i, j }
    }

    /// The partner `(-j, -i)` with `F_ij = -F_{-j,-i}`.
    pub fn partner(self) -> Self {
        GenIndex::new(-self.j, -self.i)
    }

    pub fn transposed(self) -> Self {
        GenIndex::new(self.j, self.i)
    }
}

impl fmt::Display for GenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F[{},{}]", self.i, self.j)
    }
}

/// Result of reducing `F_ij` to a canonical generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Canonical {
    /// `F_ij = 0` (the pair is `(i, -i)`).
    Zero,
    /// `F_ij = sign * F_gen`.
    Gen { sign: i8, gen: GenIndex },
}

impl Canonical {
    pub fn sign(&self) -> i8 {
        match self {
            Canonical::Zero => 0,
            Canonical::Gen { sign, .. } => *sign,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootKind {
    Lowering,
    Cartan,
    Raising,
}

/// A weight, stored by its coordinates on `e_1, ..., e_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![Rational::zero(); n])
    }

    /// `e_r` for signed `r`, with `e_{-r} = -e_r` and `e_0 = 0`.
    pub fn basis(n: usize, r: i32) -> Self {
        let mut w = Self::zero(n);
        if r != 0 {
            let k = r.unsigned_abs() as usize - 1;
            w.0[k] = Rational::from_int(r.signum() as i64);
        }
        w
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Sparse linear combination of canonical generators, by generator position.
pub type LinComb = Vec<(usize, Rational)>;

/// o_N with its canonical generators sorted in PBW order:
/// lowering operators, then the Cartan subalgebra, then raising operators.
#[derive(Debug, Clone)]
pub struct OrthogonalAlgebra {
    big_n: usize,
    n: usize,
    gens: Vec<GenIndex>,
    kinds: Vec<RootKind>,
    lookup: HashMap<GenIndex, usize>,
    table: Vec<Vec<LinComb>>,
}

impl OrthogonalAlgebra {
    pub fn new(big_n: usize) -> Result<Self, LieError> {
        if big_n < 2 {
            return Err(LieError::InvalidRank(big_n));
        }
        let n = big_n / 2;
        let idx = valid_indices(big_n);
        let mut gens = Vec::new();
        for &i in &idx {
            for &j in &idx {
                if j != -i && (i, j) < (-j, -i) {
                    gens.push(GenIndex::new(i, j));
                }
            }
        }
        gens.sort_by_key(|g| (kind_of(*g), g.i, g.j));
        let kinds = gens.iter().map(|g| kind_of(*g)).collect();
        let lookup = gens.iter().enumerate().map(|(k, g)| (*g, k)).collect();
        let mut alg = OrthogonalAlgebra { big_n, n, gens, kinds, lookup, table: Vec::new() };
        let d = alg.gens.len();
        let mut table = vec![vec![Vec::new(); d]; d];
        for a in 0..d {
            for b in 0..d {
                let (ga, gb) = (alg.gens[a], alg.gens[b]);
                table[a][b] = alg.bracket_pairs(ga.i, ga.j, gb.i, gb.j);
            }
        }
        alg.table = table;
        Ok(alg)
    }

    /// N, the size of the defining representation.
    pub fn big_n(&self) -> usize {
        self.big_n
    }

    /// Rank n = ⌊N/2⌋.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_odd(&self) -> bool {
        self.big_n % 2 == 1
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[GenIndex] {
        &self.gens
    }

    pub fn generator(&self, k: usize) -> GenIndex {
        self.gens[k]
    }

    pub fn kind(&self, k: usize) -> RootKind {
        self.kinds[k]
    }

    pub fn indices(&self) -> Vec<i32> {
        valid_indices(self.big_n)
    }

    pub fn check_index(&self, i: i32) -> Result<(), LieError> {
        if i.unsigned_abs() as usize > self.n || (i == 0 && !self.is_odd()) {
            return Err(LieError::InvalidIndex { index: i, big_n: self.big_n });
        }
        Ok(())
    }

    pub fn canonicalize(&self, i: i32, j: i32) -> Result<Canonical, LieError> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(canonicalize(i, j))
    }

    /// Position of the canonical generator `g`.
    pub fn position(&self, g: GenIndex) -> Option<usize> {
        self.lookup.get(&g).copied()
    }

    /// `F_ij` as a combination of canonical generators (empty for zero).
    pub fn element(&self, i: i32, j: i32) -> Result<LinComb, LieError> {
        Ok(match self.canonicalize(i, j)? {
            Canonical::Zero => Vec::new(),
            Canonical::Gen { sign, gen } => vec![(self.lookup[&gen], Rational::from_int(sign as i64))],
        })
    }

    /// `[F_a, F_b]` for canonical generators at positions `a`, `b`.
    pub fn bracket(&self, a: usize, b: usize) -> &LinComb {
        &self.table[a][b]
    }

    /// `[F_ij, F_kl] = δ_kj F_il - δ_il F_kj - δ_{-k,i} F_{-j,l} + δ_{-l,j} F_{k,-i}`.
    pub fn bracket_indices(&self, i: i32, j: i32, k: i32, l: i32) -> Result<LinComb, LieError> {
        for x in [i, j, k, l] {
            self.check_index(x)?;
        }
        Ok(self.bracket_pairs(i, j, k, l))
    }

    fn bracket_pairs(&self, i: i32, j: i32, k: i32, l: i32) -> LinComb {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut add = |p: i32, q: i32, c: i64| {
            if let Canonical::Gen { sign, gen } = canonicalize(p, q) {
                *acc.entry(self.lookup[&gen]).or_default() += Rational::from_int(c * sign as i64);
            }
        };
        if k == j {
            add(i, l, 1);
        }
        if i == l {
            add(k, j, -1);
        }
        if -k == i {
            add(-j, l, -1);
        }
        if -l == j {
            add(k, -i, 1);
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Root of `F_ij`: `e_i - e_j`.
    pub fn root_of(&self, g: GenIndex) -> Weight {
        &Weight::basis(self.n, g.i) - &Weight::basis(self.n, g.j)
    }

    /// Defining N-dimensional matrices of the canonical generators, basis ordered by index.
    pub fn defining_matrices(&self) -> Vec<ExactMatrix> {
        self.defining_sparse().iter().map(SparseMatrix::to_dense).collect()
    }

    pub fn defining_sparse(&self) -> Vec<SparseMatrix> {
        let idx = self.indices();
        let pos = |x: i32| idx.iter().position(|&y| y == x).expect("valid index");
        self.gens
            .iter()
            .map(|g| {
                SparseMatrix::from_triplets(
                    self.big_n,
                    self.big_n,
                    vec![
                        (pos(g.i), pos(g.j), QuadScalar::one()),
                        (pos(-g.j), pos(-g.i), QuadScalar::from_int(-1)),
                    ],
                )
            })
            .collect()
    }

    /// Positions of the Cartan generators `F_11, ..., F_nn` expressed through
    /// canonical ones: `F_rr = -F_{-r,-r}`.
    pub fn cartan(&self) -> Vec<(usize, Rational)> {
        (1..=self.n as i32)
            .map(|r| (self.lookup[&GenIndex::new(-r, -r)], Rational::from_int(-1)))
            .collect()
    }

    /// Canonical positions of a given kind.
    pub fn of_kind(&self, kind: RootKind) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.kinds[k] == kind).collect()
    }
}

fn valid_indices(big_n: usize) -> Vec<i32> {
    let n = (big_n / 2) as i32;
    (-n..=n).filter(|&i| i != 0 || big_n % 2 == 1).collect()
}

pub fn canonicalize(i: i32, j: i32) -> Canonical {
    if j == -i {
        Canonical::Zero
    } else if (i, j) < (-j, -i) {
        Canonical::Gen { sign: 1, gen: GenIndex::new(i, j) }
    } else {
        Canonical::Gen { sign: -1, gen: GenIndex::new(-j, -i) }
    }
}

/// Raising iff `i < j`; equivalently the root `e_i - e_j` has its first nonzero
/// coefficient, read from `e_n` down to `e_1`, negative.
fn kind_of(g: GenIndex) -> RootKind {
    match g.i.cmp(&g.j) {
        std::cmp::Ordering::Less => RootKind::Raising,
        std::cmp::Ordering::Equal => RootKind::Cartan,
        std::cmp::Ordering::Greater => RootKind::Lowering,
    }
}

/// Dimension of the irreducible o_5 module with highest weight `(λ1, λ2)`,
/// `0 >= λ1 >= λ2`, by the Weyl formula.
pub fn weyl_dimension_o5(l1: &Rational, l2: &Rational) -> Result<u64, LieError> {
    let bad = || LieError::InvalidHighestWeight(l1.clone(), l2.clone());
    let (d1, d2) = (l1.doubled().ok_or_else(bad)?, l2.doubled().ok_or_else(bad)?);
    if d1 > 0 || d2 > d1 || (d1 - d2) % 2 != 0 {
        return Err(bad());
    }
    // a = -λ2 >= b = -λ1 >= 0, computed on doubled values.
    let (a2, b2) = (-d2, -d1);
    // (a-b+1)(a+b+2)(2a+3)(2b+1)/6, each factor times 2 where needed
    let num = (a2 - b2 + 2) * (a2 + b2 + 4) * (a2 + 3) * (b2 + 1);
    Ok((num / 24) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        for big_n in 2..=8 {
            let g = OrthogonalAlgebra::new(big_n).unwrap();
            assert_eq!(g.dim(), big_n * (big_n - 1) / 2);
            assert_eq!(g.of_kind(RootKind::Cartan).len(), big_n / 2);
        }
        let o5 = OrthogonalAlgebra::new(5).unwrap();
        let names: Vec<String> = o5.generators().iter().map(|g| format!("{},{}", g.i, g.j)).collect();
        assert_eq!(
            names,
            ["-1,-2", "0,-2", "0,-1", "1,-2", "-2,-2", "-1,-1", "-2,-1", "-2,0", "-2,1", "-1,0"]
        );
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canonicalize(1, -1), Canonical::Zero);
        assert_eq!(canonicalize(1, 1), Canonical::Gen { sign: -1, gen: GenIndex::new(-1, -1) });
        assert_eq!(canonicalize(2, -1), Canonical::Gen { sign: -1, gen: GenIndex::new(1, -2) });
        assert_eq!(canonicalize(-1, 0), Canonical::Gen { sign: 1, gen: GenIndex::new(-1, 0) });
        let o4 = OrthogonalAlgebra::new(4).unwrap();
        assert!(o4.canonicalize(0, 1).is_err());
        assert!(o4.canonicalize(3, 1).is_err());
    }

    #[test]
    fn bracket_matches_matrix_commutators() {
        for big_n in [3, 4, 5, 6] {
            let g = OrthogonalAlgebra::new(big_n).unwrap();
            let mats = g.defining_matrices();
            for a in 0..g.dim() {
                for b in 0..g.dim() {
                    let lhs = mats[a].commutator(&mats[b]).unwrap();
                    let mut rhs = ExactMatrix::zeros(big_n, big_n);
                    for (c, x) in g.bracket(a, b) {
                        rhs = rhs.add(&mats[*c].scale(&x.clone().into())).unwrap();
                    }
                    assert_eq!(lhs, rhs, "o_{} bracket of {} and {}", big_n, g.generator(a), g.generator(b));
                }
            }
        }
    }

    #[test]
    fn roots_and_polarity() {
        let g = OrthogonalAlgebra::new(5).unwrap();
        let r = g.root_of(GenIndex::new(-1, 0));
        assert_eq!(r, Weight(vec![Rational::from_int(-1), Rational::zero()]));
        for k in g.of_kind(RootKind::Raising) {
            let root = g.root_of(g.generator(k));
            let lead = root.0.iter().rev().find(|x| !x.is_zero()).unwrap();
            assert!(lead.is_negative());
        }
    }

    #[test]
    fn weyl_dimensions() {
        let d = |a: i64, b: i64, c: i64| weyl_dimension_o5(&Rational::frac(a, c), &Rational::frac(b, c)).unwrap();
        assert_eq!(d(0, 0, 1), 1);
        assert_eq!(d(0, -1, 1), 5);
        assert_eq!(d(-1, -1, 2), 4);
        assert_eq!(d(-1, -1, 1), 10);
        assert_eq!(d(0, -2, 1), 14);
        assert_eq!(d(-3, -3, 2), 20);
        assert_eq!(d(-1, -3, 2), 16);
        assert!(weyl_dimension_o5(&Rational::one(), &Rational::zero()).is_err());
        assert!(weyl_dimension_o5(&Rational::zero(), &Rational::frac(-1, 2)).is_err());
    }
}
