//! Two-species fermionic Fock space of a single j-shell and the quasi-spin
//! realization of o_5 on it.
//!
//! Modes are enumerated protons first, then neutrons, each by ascending m.
//! Basis states are occupation bitmasks (bit k = mode k occupied), and
//! `a⁺_k` acting on a state picks up the Jordan–Wigner sign
//! `(-1)^(number of occupied modes before k)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{QuadScalar, Rational, SparseMatrix};
use crate::lie::{GenIndex, OrthogonalAlgebra};

/// Largest supported `2j` unless a caller raises the cap.
pub const DEFAULT_MAX_J2: u32 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("j must be a positive half-odd integer, got {0}")]
    InvalidJ(Rational),
    #[error("j = {j} exceeds the cap 2j <= {cap}")]
    TooLarge { j: Rational, cap: u32 },
    #[error("quasi-spin operators do not close into o_5 under any sign choice ({0} bracket violations remain)")]
    NoConsistentDictionary(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Species {
    Proton,
    Neutron,
}

/// A single-particle mode; `m2 = 2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModeIndex {
    pub species: Species,
    pub m2: i32,
}

/// Occupation bitmask of a Fock basis state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FockBasisState(pub u32);

impl FockBasisState {
    pub fn is_occupied(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    pub fn particles(self) -> u32 {
        self.0.count_ones()
    }
}

#[derive(Debug, Clone)]
pub struct FockSpace {
    j2: u32,
    modes: Vec<ModeIndex>,
    create: Vec<SparseMatrix>,
    annihilate: Vec<SparseMatrix>,
}

impl FockSpace {
    pub fn new(j: &Rational) -> Result<Self, FockError> {
        Self::with_cap(j, DEFAULT_MAX_J2)
    }

    pub fn with_cap(j: &Rational, max_j2: u32) -> Result<Self, FockError> {
        let j2 = j.doubled().filter(|d| *d > 0 && d % 2 == 1).ok_or_else(|| FockError::InvalidJ(j.clone()))?;
        let j2 = j2 as u32;
        if j2 > max_j2 {
            return Err(FockError::TooLarge { j: j.clone(), cap: max_j2 });
        }
        let mut modes = Vec::new();
        for species in [Species::Proton, Species::Neutron] {
            for m2 in (-(j2 as i32)..=j2 as i32).step_by(2) {
                modes.push(ModeIndex { species, m2 });
            }
        }
        let dim = 1usize << modes.len();
        let create: Vec<SparseMatrix> = (0..modes.len())
            .map(|k| {
                let entries = (0..dim).filter(|s| s >> k & 1 == 0).map(|s| {
                    let before = (s & ((1 << k) - 1)).count_ones();
                    let sign = if before % 2 == 0 { 1 } else { -1 };
                    (s | 1 << k, s, QuadScalar::from_int(sign))
                });
                SparseMatrix::from_triplets(dim, dim, entries.collect::<Vec<_>>())
            })
            .collect();
        let annihilate = create.iter().map(SparseMatrix::transpose).collect();
        Ok(FockSpace { j2, modes, create, annihilate })
    }

    pub fn j(&self) -> Rational {
        Rational::frac(self.j2 as i64, 2)
    }

    pub fn j2(&self) -> u32 {
        self.j2
    }

    pub fn dim(&self) -> usize {
        1 << self.modes.len()
    }

    pub fn modes(&self) -> &[ModeIndex] {
        &self.modes
    }

    pub fn mode(&self, species: Species, m2: i32) -> usize {
        self.modes
            .iter()
            .position(|x| x.species == species && x.m2 == m2)
            .expect("mode inside the shell")
    }

    pub fn create(&self, k: usize) -> &SparseMatrix {
        &self.create[k]
    }

    pub fn annihilate(&self, k: usize) -> &SparseMatrix {
        &self.annihilate[k]
    }

    pub fn vacuum(&self) -> FockBasisState {
        FockBasisState(0)
    }

    /// All anticommutator relations among creation and annihilation operators;
    /// returns the offending `(relation, k, l)` triples.
    pub fn car_violations(&self) -> Vec<(&'static str, usize, usize)> {
        let n = self.modes.len();
        let d = self.dim();
        let anti = |x: &SparseMatrix, y: &SparseMatrix| x.mul(y).unwrap().add(&y.mul(x).unwrap()).unwrap();
        let zero = SparseMatrix::zeros(d, d);
        let id = SparseMatrix::identity(d);
        let mut bad = Vec::new();
        for k in 0..n {
            for l in 0..n {
                if anti(&self.annihilate[k], &self.annihilate[l]) != zero {
                    bad.push(("{a,a}", k, l));
                }
                if anti(&self.create[k], &self.create[l]) != zero {
                    bad.push(("{a+,a+}", k, l));
                }
                let expect = if k == l { &id } else { &zero };
                if &anti(&self.annihilate[k], &self.create[l]) != expect {
                    bad.push(("{a,a+}", k, l));
                }
            }
        }
        bad
    }

    fn pair(&self, x: &SparseMatrix, y: &SparseMatrix) -> SparseMatrix {
        x.mul(y).expect("same space")
    }

    /// Phase `(-1)^{j-m}` for `m > 0`; `j - m` is an integer there.
    fn phase(&self, m2: i32) -> QuadScalar {
        let diff2 = self.j2 as i32 - m2;
        assert!(diff2 % 2 == 0, "j - m must be an integer");
        QuadScalar::from_int(if (diff2 / 2) % 2 == 0 { 1 } else { -1 })
    }

    fn positive_m(&self) -> Vec<i32> {
        (1..=self.j2 as i32).filter(|m| m % 2 == 1).collect()
    }

    fn sum<F: Fn(i32) -> SparseMatrix>(&self, ms: &[i32], f: F) -> SparseMatrix {
        let d = self.dim();
        ms.iter().fold(SparseMatrix::zeros(d, d), |acc, &m| acc.add(&f(m)).unwrap())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuasiSpinOp {
    TauPlus,
    Tau0,
    TauMinus,
    N,
    A1,
    A0,
    Am1,
    B1,
    B0,
    Bm1,
}

impl fmt::Display for QuasiSpinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QuasiSpinOp::TauPlus => "tau+",
            QuasiSpinOp::Tau0 => "tau0",
            QuasiSpinOp::TauMinus => "tau-",
            QuasiSpinOp::N => "N",
            QuasiSpinOp::A1 => "A(1)",
            QuasiSpinOp::A0 => "A(0)",
            QuasiSpinOp::Am1 => "A(-1)",
            QuasiSpinOp::B1 => "B(1)",
            QuasiSpinOp::B0 => "B(0)",
            QuasiSpinOp::Bm1 => "B(-1)",
        };
        f.write_str(s)
    }
}

/// Which version of the quasi-spin operator formulas to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Formulas {
    /// Literal transcription, including the inconsistent τ0, A(0), B(1) and B(0).
    Printed,
    /// `τ0 = ½Σ(n_p - n_n)`, `A(0)` with second term `a⁺_{n,m} a⁺_{p,-m}`, and `B(x) = A(x)ᵀ`.
    Corrected,
}

#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    pub label: String,
    pub matrix: SparseMatrix,
}

pub fn quasispin_operators(space: &FockSpace, formulas: Formulas) -> BTreeMap<QuasiSpinOp, OperatorMatrix> {
    use Species::{Neutron as Nn, Proton as P};
    let cr = |s: Species, m2: i32| space.create(space.mode(s, m2));
    let an = |s: Species, m2: i32| space.annihilate(space.mode(s, m2));
    let all_m: Vec<i32> = (-(space.j2 as i32)..=space.j2 as i32).step_by(2).collect();
    let pos = space.positive_m();
    let half = QuadScalar::from(Rational::half());
    let r2 = QuadScalar::inv_sqrt2();
    let d = space.dim();

    let tau_plus = space.sum(&all_m, |m| space.pair(cr(P, m), an(Nn, m)));
    let tau_minus = space.sum(&all_m, |m| space.pair(cr(Nn, m), an(P, m)));
    let tau0 = match formulas {
        Formulas::Printed => space.sum(&all_m, |m| {
            space.pair(cr(P, m), an(P, m)).sub(&space.pair(cr(P, m), an(Nn, m))).unwrap()
        }),
        Formulas::Corrected => space.sum(&all_m, |m| {
            space.pair(cr(P, m), an(P, m)).sub(&space.pair(cr(Nn, m), an(Nn, m))).unwrap()
        }),
    }
    .scale(&half);
    let shift = QuadScalar::from(Rational::frac(space.j2 as i64 + 1, 2));
    let number = space
        .sum(&all_m, |m| space.pair(cr(P, m), an(P, m)).add(&space.pair(cr(Nn, m), an(Nn, m))).unwrap())
        .scale(&half)
        .sub(&SparseMatrix::identity(d).scale(&shift))
        .unwrap();

    let a1 = space.sum(&pos, |m| space.pair(cr(P, m), cr(P, -m)).scale(&space.phase(m)));
    let am1 = space.sum(&pos, |m| space.pair(cr(Nn, m), cr(Nn, -m)).scale(&space.phase(m)));
    let a0 = match formulas {
        Formulas::Printed => space.sum(&pos, |m| {
            space.pair(cr(P, m), cr(Nn, -m)).add(&space.pair(cr(Nn, -m), cr(P, -m))).unwrap().scale(&space.phase(m))
        }),
        Formulas::Corrected => space.sum(&pos, |m| {
            space.pair(cr(P, m), cr(Nn, -m)).add(&space.pair(cr(Nn, m), cr(P, -m))).unwrap().scale(&space.phase(m))
        }),
    }
    .scale(&r2);
    let (b1, b0, bm1) = match formulas {
        Formulas::Printed => (
            space.sum(&pos, |m| space.pair(an(Nn, -m), an(P, m)).scale(&space.phase(m))),
            space
                .sum(&pos, |m| {
                    space.pair(an(Nn, -m), cr(P, m)).add(&space.pair(cr(P, -m), cr(Nn, m))).unwrap().scale(&space.phase(m))
                })
                .scale(&r2),
            space.sum(&pos, |m| space.pair(an(Nn, -m), an(Nn, m)).scale(&space.phase(m))),
        ),
        Formulas::Corrected => (a1.transpose(), a0.transpose(), am1.transpose()),
    };

    let label = |op: QuasiSpinOp| format!("{}", op);
    [
        (QuasiSpinOp::TauPlus, tau_plus),
        (QuasiSpinOp::Tau0, tau0),
        (QuasiSpinOp::TauMinus, tau_minus),
        (QuasiSpinOp::N, number),
        (QuasiSpinOp::A1, a1),
        (QuasiSpinOp::A0, a0),
        (QuasiSpinOp::Am1, am1),
        (QuasiSpinOp::B1, b1),
        (QuasiSpinOp::B0, b0),
        (QuasiSpinOp::Bm1, bm1),
    ]
    .into_iter()
    .map(|(op, m)| (op, OperatorMatrix { label: label(op), matrix: m }))
    .collect()
}

/// One line of the dictionary: `F_{i,j} = coeff * op`, with `(i, j)` as printed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DictionaryEntry {
    pub gen: GenIndex,
    pub op: QuasiSpinOp,
    pub coeff: QuadScalar,
}

/// The dictionary as printed: `F_{0,-1} = τ+/√2`, `F_{-1,-2} = A(-1)`, `F_{0,-2} = A(0)`,
/// `F_{2,-1} = -A(1)`, `F_{-1,-1} = -τ0` and the transposed partners.
pub fn printed_dictionary() -> Vec<DictionaryEntry> {
    let e = |i, j, op, coeff| DictionaryEntry { gen: GenIndex::new(i, j), op, coeff };
    let r2 = QuadScalar::inv_sqrt2();
    let one = QuadScalar::one();
    let neg = QuadScalar::from_int(-1);
    vec![
        e(0, -1, QuasiSpinOp::TauPlus, r2.clone()),
        e(-1, -2, QuasiSpinOp::Am1, one.clone()),
        e(0, -2, QuasiSpinOp::A0, one.clone()),
        e(2, -1, QuasiSpinOp::A1, neg.clone()),
        e(-1, -1, QuasiSpinOp::Tau0, neg.clone()),
        e(-1, 0, QuasiSpinOp::TauMinus, r2),
        e(-2, -1, QuasiSpinOp::Bm1, one.clone()),
        e(-2, 0, QuasiSpinOp::B0, one),
        e(-1, 2, QuasiSpinOp::B1, neg.clone()),
        e(-2, -2, QuasiSpinOp::N, neg),
    ]
}

/// Generator matrices in canonical order from a dictionary, using `F_ij = -F_{-j,-i}`.
pub fn generators_from_dictionary(
    alg: &OrthogonalAlgebra,
    ops: &BTreeMap<QuasiSpinOp, OperatorMatrix>,
    dict: &[DictionaryEntry],
) -> Vec<SparseMatrix> {
    let d = ops.values().next().map_or(1, |o| o.matrix.rows());
    let mut gens = vec![SparseMatrix::zeros(d, d); alg.dim()];
    for entry in dict {
        let lin = alg.element(entry.gen.i, entry.gen.j).expect("o_5 index");
        let (k, s) = &lin[0];
        let c = &entry.coeff * &QuadScalar::from(s.clone());
        gens[*k] = ops[&entry.op].matrix.scale(&c);
    }
    gens
}

/// Generator pairs whose matrix commutator disagrees with the bracket table.
pub fn verify_representation(alg: &OrthogonalAlgebra, gens: &[SparseMatrix]) -> Vec<(GenIndex, GenIndex)> {
    let mut bad = Vec::new();
    for a in 0..alg.dim() {
        for b in a + 1..alg.dim() {
            let lhs = gens[a].commutator(&gens[b]).expect("square");
            let d = lhs.rows();
            let mut rhs = SparseMatrix::zeros(d, d);
            for (c, x) in alg.bracket(a, b) {
                rhs = rhs.lincomb(&QuadScalar::one(), &gens[*c], &x.clone().into()).unwrap();
            }
            if lhs != rhs {
                bad.push((alg.generator(a), alg.generator(b)));
            }
        }
    }
    bad
}

/// The quasi-spin realization of o_5 on Fock(j), with the corrections that were
/// needed to make it a representation.
#[derive(Debug, Clone)]
pub struct QuasiSpinRealization {
    pub space: FockSpace,
    pub operators: BTreeMap<QuasiSpinOp, OperatorMatrix>,
    pub dictionary: Vec<DictionaryEntry>,
    /// Generator matrices in canonical o_5 order.
    pub generators: Vec<SparseMatrix>,
    /// Bracket violations with printed formulas and printed dictionary.
    pub printed_violations: usize,
    /// Bracket violations after the formula corrections, before sign repair.
    pub corrected_formula_violations: usize,
    /// Human-readable list of every correction applied.
    pub corrections: Vec<String>,
}

/// Root-vector pairs whose dictionary signs may be flipped together.
pub const PAIRS: [((i32, i32), (i32, i32)); 4] = [((0, -1), (-1, 0)), ((-1, -2), (-2, -1)), ((0, -2), (-2, 0)), ((2, -1), (-1, 2))];

/// The dictionary with the sign of every pair in `mask` (bit p for `PAIRS[p]`) flipped.
pub fn flipped_dictionary(dict: &[DictionaryEntry], mask: u32) -> Vec<DictionaryEntry> {
    dict.iter()
        .map(|e| {
            let flip = PAIRS.iter().enumerate().any(|(p, (x, y))| {
                mask >> p & 1 == 1 && ((e.gen.i, e.gen.j) == *x || (e.gen.i, e.gen.j) == *y)
            });
            let mut e = e.clone();
            if flip {
                e.coeff = -e.coeff;
            }
            e
        })
        .collect()
}

/// Builds the quasi-spin operators, the dictionary to o_5, and lets the bracket
/// table decide the corrections: first the corrected operator formulas, then
/// the smallest set of sign flips on raising/lowering pairs.
pub fn dictionary_to_o5(j: &Rational) -> Result<QuasiSpinRealization, FockError> {
    let space = FockSpace::new(j)?;
    let alg = OrthogonalAlgebra::new(5).expect("o_5");
    let printed_ops = quasispin_operators(&space, Formulas::Printed);
    let printed = printed_dictionary();
    let printed_violations = verify_representation(&alg, &generators_from_dictionary(&alg, &printed_ops, &printed)).len();

    let ops = quasispin_operators(&space, Formulas::Corrected);
    let corrected_formula_violations = verify_representation(&alg, &generators_from_dictionary(&alg, &ops, &printed)).len();
    let mut corrections = vec![
        "tau0 = 1/2 sum_m (a+_{p m} a_{p m} - a+_{n m} a_{n m})".to_string(),
        "A(0) = 1/sqrt2 sum_{m>0} (-1)^{j-m} (a+_{p m} a+_{n -m} + a+_{n m} a+_{p -m})".to_string(),
        "B(x) = A(x)^T for x in {1, 0, -1}".to_string(),
    ];

    let mut masks: Vec<u32> = (0..1 << PAIRS.len()).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut best = None;
    for mask in masks {
        let dict = flipped_dictionary(&printed, mask);
        let gens = generators_from_dictionary(&alg, &ops, &dict);
        if verify_representation(&alg, &gens).is_empty() {
            best = Some((mask, dict, gens));
            break;
        }
    }
    let Some((mask, dictionary, generators)) = best else {
        return Err(FockError::NoConsistentDictionary(corrected_formula_violations));
    };
    for (p, (x, y)) in PAIRS.iter().enumerate() {
        if mask >> p & 1 == 1 {
            let show = |g: (i32, i32)| {
                let e = dictionary.iter().find(|e| (e.gen.i, e.gen.j) == g).expect("entry");
                format!("F[{},{}] = {} {}", g.0, g.1, e.coeff, e.op)
            };
            corrections.push(format!("sign flip: {}, {}", show(*x), show(*y)));
        }
    }
    Ok(QuasiSpinRealization {
        space,
        operators: ops,
        dictionary,
        generators,
        printed_violations,
        corrected_formula_violations,
        corrections,
    })
}

/// Coefficients `c` in `PfF_{hat r} = Σ c · (X ⋆ Y)`, `X ⋆ Y = ½(XY + YX)`,
/// with `X` a pair operator and `Y` an isospin operator, read off from the
/// dictionary. Keys are `(X, Y)`.
pub fn star_coefficients(
    alg: &OrthogonalAlgebra,
    dict: &[DictionaryEntry],
    hat: i32,
) -> BTreeMap<(QuasiSpinOp, QuasiSpinOp), QuadScalar> {
    let uea = crate::uea::Uea::from_algebra(alg.clone());
    let set = crate::uea::IndexSet::hat(alg, hat).expect("valid hat index");
    let raw = uea.pfaffian_raw(set.as_slice()).expect("valid set");
    let mut by_gen: BTreeMap<usize, (QuasiSpinOp, QuadScalar)> = BTreeMap::new();
    for e in dict {
        let lin = alg.element(e.gen.i, e.gen.j).expect("o_5 index");
        let (k, s) = &lin[0];
        by_gen.insert(*k, (e.op, &e.coeff * &QuadScalar::from(s.clone())));
    }
    let mut out: BTreeMap<(QuasiSpinOp, QuasiSpinOp), QuadScalar> = BTreeMap::new();
    for (w, r) in raw.terms() {
        let (xa, ca) = &by_gen[&(w[0] as usize)];
        let (xb, cb) = &by_gen[&(w[1] as usize)];
        let key = if xa > xb { (*xa, *xb) } else { (*xb, *xa) };
        *out.entry(key).or_default() += &(&(ca * cb) * &QuadScalar::from(r.clone()));
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The ⋆-product expressions as printed:
/// `PfF_{hat 2} = A(-1)⋆τ+/√2 + A(0)⋆τ0 + A(1)⋆τ-/√2` and
/// `PfF_{hat -2} = B(-1)⋆τ-/√2 + B(0)⋆τ0 + B(1)⋆τ+/√2`.
pub fn printed_star_coefficients(hat: i32) -> BTreeMap<(QuasiSpinOp, QuasiSpinOp), QuadScalar> {
    use QuasiSpinOp::*;
    let r2 = QuadScalar::inv_sqrt2();
    let terms = if hat > 0 {
        [(Am1, TauPlus, r2.clone()), (A0, Tau0, QuadScalar::one()), (A1, TauMinus, r2)]
    } else {
        [(Bm1, TauMinus, r2.clone()), (B0, Tau0, QuadScalar::one()), (B1, TauPlus, r2)]
    };
    terms.into_iter().map(|(x, y, c)| ((x, y), c)).collect()
}

/// Matrix of `Σ c · (X ⋆ Y)`.
pub fn star_matrix(
    ops: &BTreeMap<QuasiSpinOp, OperatorMatrix>,
    coeffs: &BTreeMap<(QuasiSpinOp, QuasiSpinOp), QuadScalar>,
) -> SparseMatrix {
    let d = ops.values().next().map_or(1, |o| o.matrix.rows());
    let half = QuadScalar::from(Rational::half());
    let mut out = SparseMatrix::zeros(d, d);
    for ((x, y), c) in coeffs {
        let (mx, my) = (&ops[x].matrix, &ops[y].matrix);
        let star = mx.mul(my).unwrap().add(&my.mul(mx).unwrap()).unwrap();
        out = out.lincomb(&QuadScalar::one(), &star, &(c * &half)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_half_space() {
        let f = FockSpace::new(&Rational::half()).unwrap();
        assert_eq!(f.modes().len(), 4);
        assert_eq!(f.dim(), 16);
        let k = f.mode(Species::Proton, 1);
        assert!(f.create(k).mul(f.create(k)).unwrap().is_zero());
        assert!(f.car_violations().is_empty());
    }

    #[test]
    fn rejects_bad_j() {
        assert!(FockSpace::new(&Rational::one()).is_err());
        assert!(FockSpace::new(&Rational::frac(7, 2)).is_err());
        assert!(FockSpace::with_cap(&Rational::frac(7, 2), 7).is_ok());
    }

    #[test]
    fn operator_examples() {
        let f = FockSpace::new(&Rational::half()).unwrap();
        let ops = quasispin_operators(&f, Formulas::Corrected);
        // N|0> = -|0>
        assert_eq!(ops[&QuasiSpinOp::N].matrix.get(0, 0), QuadScalar::from_int(-1));
        // A(1) = a+_{p,1/2} a+_{p,-1/2}
        let expect = f.create(f.mode(Species::Proton, 1)).mul(f.create(f.mode(Species::Proton, -1))).unwrap();
        assert_eq!(ops[&QuasiSpinOp::A1].matrix, expect);
        // tau0 on one proton = +1/2
        let s = 1usize << f.mode(Species::Proton, 1);
        assert_eq!(ops[&QuasiSpinOp::Tau0].matrix.get(s, s), QuadScalar::from(Rational::half()));
    }

    #[test]
    fn star_form_differs_from_print_only_in_the_a1_sign() {
        let alg = OrthogonalAlgebra::new(5).unwrap();
        let r = dictionary_to_o5(&Rational::half()).unwrap();
        let got = star_coefficients(&alg, &r.dictionary, 2);
        let printed = printed_star_coefficients(2);
        assert_eq!(got.len(), 3);
        for (k, c) in &printed {
            let expect = if k.0 == QuasiSpinOp::A1 { -c } else { c.clone() };
            assert_eq!(got[k], expect);
        }
        // the printed dictionary reproduces the printed expression exactly
        assert_eq!(star_coefficients(&alg, &printed_dictionary(), 2), printed);
        assert_eq!(star_coefficients(&alg, &printed_dictionary(), -2), printed_star_coefficients(-2));
    }

    #[test]
    fn dictionary_repairs_to_representation() {
        let r = dictionary_to_o5(&Rational::half()).unwrap();
        assert!(r.printed_violations > 0);
        let alg = OrthogonalAlgebra::new(5).unwrap();
        assert!(verify_representation(&alg, &r.generators).is_empty());
    }
}
