//! Gelfand–Tsetlin–Molev tableaux for o_5 restricted to o_3, the quantum
//! numbers `(T, τ0, N)`, the rectangle of second rows at fixed `T`, and the
//! fourth quantum number `k`.
//!
//! Half-integer weights share the integer code path through doubled values.

mod classify;
mod model;

pub use classify::{
    assign_k, classify_weight, label_chain, validate_irrep, Chain, ClassificationChecks, ClassificationTable, ClassifiedIrrep,
    GradedSlice, IrrepValidation, StateRow, StepRecord, TValidation,
};
pub use model::{model_chain, predicted_slice_matrix, rank_table, GammaConvention, RankTable};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::Rational;
use crate::lie::weyl_dimension_o5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GtError {
    #[error("invalid highest weight ({0}, {1}): need 0 >= λ1 >= λ2, both integers or both half-integers")]
    InvalidHighestWeight(Rational, Rational),
    #[error("T = {t} does not occur in the irrep ({l1}, {l2})")]
    InvalidT { l1: Rational, l2: Rational, t: Rational },
    #[error("no states with T = {t}, N = {n}")]
    EmptySlice { t: Rational, n: Rational },
    #[error("model coefficient is singular at λ' = ({x}, {y}) ({convention:?})")]
    Singular { x: Rational, y: Rational, convention: GammaConvention },
    #[error("filtration inconsistency at N = {n}: {detail}")]
    Filtration { n: Rational, detail: String },
    #[error(transparent)]
    Repr(#[from] crate::repr::ReprError),
}

/// Doubled `(λ1, λ2)` after validation.
pub fn check_highest(l1: &Rational, l2: &Rational) -> Result<(i64, i64), GtError> {
    let bad = || GtError::InvalidHighestWeight(l1.clone(), l2.clone());
    let (d1, d2) = (l1.doubled().ok_or_else(bad)?, l2.doubled().ok_or_else(bad)?);
    if d1 > 0 || d2 > d1 || (d1 - d2) % 2 != 0 {
        return Err(bad());
    }
    Ok((d1, d2))
}

fn half(d: i64) -> Rational {
    Rational::frac(d, 2)
}

/// An o_5 tableau: top row `(λ1, λ2)`, second row `(σ, λ'21, λ'22)`,
/// third row `λ11`, bottom row `(σ1, λ'11)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GtTableau {
    pub l1: Rational,
    pub l2: Rational,
    pub sigma: u8,
    pub lp21: Rational,
    pub lp22: Rational,
    pub l11: Rational,
    pub sigma1: u8,
    pub lp11: Rational,
}

/// `(T, τ0, N)` of a tableau.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QuantumNumbers {
    #[serde(rename = "T")]
    pub t: Rational,
    pub tau0: Rational,
    #[serde(rename = "N")]
    pub n: Rational,
}

impl GtTableau {
    /// `T = λ11`, `τ0 = (-1)^{σ1} λ'11`, `N = σ + 2(λ'21 + λ'22) - (λ1 + λ2) - λ11`.
    pub fn quantum_numbers(&self) -> QuantumNumbers {
        let tau0 = if self.sigma1 == 1 { -self.lp11.clone() } else { self.lp11.clone() };
        let two = Rational::from_int(2);
        let n = Rational::from_int(self.sigma as i64) + &two * &(&self.lp21 + &self.lp22)
            - (&self.l1 + &self.l2)
            - self.l11.clone();
        QuantumNumbers { t: self.l11.clone(), tau0, n }
    }
}

/// All tableaux with top row `(λ1, λ2)`.
///
/// Constraints: `0 >= λ'21 >= λ1 >= λ'22 >= λ2`, `λ'21 >= λ11 >= λ'22`,
/// `σ = 0` if `λ'21 = 0`, `0 >= λ'11 >= λ11`, `σ1 = 0` if `λ'11 = 0`.
pub fn enumerate_tableaux(l1: &Rational, l2: &Rational) -> Result<Vec<GtTableau>, GtError> {
    let (d1, d2) = check_highest(l1, l2)?;
    let top = if d1 % 2 == 0 { 0 } else { -1 };
    let mut out = Vec::new();
    for x in (d1..=top).step_by(2) {
        for y in (d2..=d1).step_by(2) {
            for sigma in 0..=1u8 {
                if sigma == 1 && x == 0 {
                    continue;
                }
                for t in (y..=x).step_by(2) {
                    for b in (t..=top).step_by(2) {
                        for sigma1 in 0..=1u8 {
                            if sigma1 == 1 && b == 0 {
                                continue;
                            }
                            out.push(GtTableau {
                                l1: l1.clone(),
                                l2: l2.clone(),
                                sigma,
                                lp21: half(x),
                                lp22: half(y),
                                l11: half(t),
                                sigma1,
                                lp11: half(b),
                            });
                        }
                    }
                }
            }
        }
    }
    debug_assert_eq!(Some(out.len() as u64), weyl_dimension_o5(l1, l2).ok());
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Case {
    A,
    B,
    C,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Narrow,
    Wide,
}

/// Case label of an `N`-line together with its `σ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CaseTag {
    pub case: Case,
    pub sigma: u8,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}{}", self.case, self.sigma)
    }
}

/// Second rows `(λ'21, λ'22)` at fixed `T`: `x = λ'21 ∈ [x0, x_max]`,
/// `y = λ'22 ∈ [λ2, y1]`, with `x0 = max(λ1, T)`, `y1 = min(λ1, T)` and
/// `x_max = 0` (integer weights) or `-1/2`. Lines `x + y = const` carry one `N`
/// for each `σ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RectangleGeometry {
    pub l1: Rational,
    pub l2: Rational,
    pub t: Rational,
    /// Doubled corners.
    x0: i64,
    x_max: i64,
    y0: i64,
    y1: i64,
    /// Side lengths in lattice steps.
    pub a: i64,
    pub b: i64,
    pub integral: bool,
}

/// Where an `N`-line sits in the rectangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineInfo {
    pub sigma: u8,
    /// Steps of the antidiagonal above the lower-left corner, `0..=a+b`.
    pub s: i64,
    /// Second-row points `(λ'21, λ'22)` on the line, by increasing `λ'21`.
    pub points: Vec<(Rational, Rational)>,
}

impl RectangleGeometry {
    pub fn new(l1: &Rational, l2: &Rational, t: &Rational) -> Result<Self, GtError> {
        let (d1, d2) = check_highest(l1, l2)?;
        let dt = t.doubled().filter(|dt| (dt - d1) % 2 == 0 && *dt <= 0 && *dt >= d2);
        let Some(dt) = dt else {
            return Err(GtError::InvalidT { l1: l1.clone(), l2: l2.clone(), t: t.clone() });
        };
        let integral = d1 % 2 == 0;
        let x_max = if integral { 0 } else { -1 };
        let (x0, y1) = (d1.max(dt), d1.min(dt));
        Ok(RectangleGeometry {
            l1: l1.clone(),
            l2: l2.clone(),
            t: t.clone(),
            x0,
            x_max,
            y0: d2,
            y1,
            a: (x_max - x0) / 2,
            b: (y1 - d2) / 2,
            integral,
        })
    }

    pub fn shape(&self) -> Shape {
        if self.a <= self.b {
            Shape::Narrow
        } else {
            Shape::Wide
        }
    }

    /// `N` of the line `s` with parity `σ`.
    pub fn n_of(&self, s: i64, sigma: u8) -> Rational {
        let base = Rational::from_int(sigma as i64 + 2 * s - (self.a + self.b));
        if self.integral {
            base
        } else {
            base - Rational::half()
        }
    }

    pub fn n_min(&self) -> Rational {
        self.n_of(0, 0)
    }

    pub fn n_max(&self) -> Rational {
        -self.n_min()
    }

    /// All `N` from `n_min` to `n_max` in unit steps.
    pub fn n_values(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        let mut n = self.n_min();
        while n <= self.n_max() {
            out.push(n.clone());
            n += Rational::one();
        }
        out
    }

    /// The line carrying `N`, with its points (possibly none).
    pub fn line(&self, n: &Rational) -> Option<LineInfo> {
        let shift = if self.integral { Rational::zero() } else { Rational::half() };
        let m = (n + &shift + Rational::from_int(self.a + self.b)).to_i64()?;
        if m < 0 {
            return None;
        }
        let (sigma, s) = ((m % 2) as u8, m / 2);
        if s > self.a + self.b {
            return None;
        }
        // doubled x + y on this line
        let k = 2 * s + self.x0 + self.y0;
        let mut points = Vec::new();
        for x in (self.x0..=self.x_max).step_by(2) {
            let y = k - x;
            if y < self.y0 || y > self.y1 || (sigma == 1 && x == 0) {
                continue;
            }
            points.push((half(x), half(y)));
        }
        Some(LineInfo { sigma, s, points })
    }

    pub fn slice_dim(&self, n: &Rational) -> usize {
        self.line(n).map_or(0, |l| l.points.len())
    }

    /// Whether the line `s` contains the point with `λ'21 = 0` (killed by the `σ = 0` step).
    pub fn has_zero_column(&self, s: i64) -> bool {
        self.integral && s >= self.a && s <= self.a + self.b
    }

    /// Case of the line `N`. For `N > 0` the mirrored line `-N` decides.
    pub fn case_of(&self, n: &Rational) -> Result<CaseTag, GtError> {
        let line = self.line(n).filter(|l| !l.points.is_empty()).ok_or_else(|| GtError::EmptySlice {
            t: self.t.clone(),
            n: n.clone(),
        })?;
        let lower = if n.is_positive() { self.line(&-n.clone()).expect("mirror line") } else { line.clone() };
        let corner = lower.s < self.a.min(self.b);
        let case = match (corner, self.shape()) {
            (true, Shape::Narrow) => Case::A,
            (true, Shape::Wide) => Case::C,
            (false, Shape::Narrow) => Case::D,
            (false, Shape::Wide) => Case::B,
        };
        Ok(CaseTag { case, sigma: line.sigma })
    }

    /// Predicted `(rank, nullity)` of `PfF_{hat 2}` from the line `N` to `N + 1`,
    /// for `N < 0`: the `σ = 0` step kills the `λ'21 = 0` point, the `σ = 1` step is injective.
    pub fn predicted_step(&self, n: &Rational) -> Option<(usize, usize)> {
        let line = self.line(n)?;
        let d = line.points.len();
        let nullity = usize::from(d > 0 && line.sigma == 0 && self.has_zero_column(line.s));
        Some((d - nullity, nullity))
    }
}

/// Values of `T` occurring in the irrep `(λ1, λ2)`.
pub fn t_values(l1: &Rational, l2: &Rational) -> Result<Vec<Rational>, GtError> {
    let (d1, d2) = check_highest(l1, l2)?;
    let top = if d1 % 2 == 0 { 0 } else { -1 };
    Ok((d2..=top).step_by(2).map(half).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn hand_counts() {
        assert_eq!(enumerate_tableaux(&r(0), &r(0)).unwrap().len(), 1);
        let t = enumerate_tableaux(&r(0), &r(-1)).unwrap();
        assert_eq!(t.len(), 5);
        assert_eq!(t.iter().filter(|x| x.l11 == r(0)).count(), 2);
        assert_eq!(enumerate_tableaux(&r(-1), &r(-1)).unwrap().len(), 10);
        assert!(enumerate_tableaux(&r(1), &r(0)).is_err());
        assert!(enumerate_tableaux(&Rational::frac(-1, 2), &r(-1)).is_err());
    }

    #[test]
    fn quantum_number_examples() {
        let mk = |sigma, lp21, lp22, l11, sigma1, lp11| GtTableau {
            l1: r(0),
            l2: r(-1),
            sigma,
            lp21: r(lp21),
            lp22: r(lp22),
            l11: r(l11),
            sigma1,
            lp11: r(lp11),
        };
        let q = mk(0, 0, 0, 0, 0, 0).quantum_numbers();
        assert_eq!((q.t, q.tau0, q.n), (r(0), r(0), r(1)));
        assert_eq!(mk(0, 0, -1, 0, 0, 0).quantum_numbers().n, r(-1));
        let q = mk(0, 0, -1, -1, 1, -1).quantum_numbers();
        assert_eq!((q.t, q.tau0, q.n), (r(-1), r(1), r(0)));
    }

    #[test]
    fn rectangle_lines() {
        let g = RectangleGeometry::new(&r(-1), &r(-2), &r(-1)).unwrap();
        assert_eq!((g.a, g.b, g.shape()), (1, 1, Shape::Narrow));
        assert_eq!(g.n_values().len(), 5);
        let dims: Vec<usize> = g.n_values().iter().map(|n| g.slice_dim(n)).collect();
        assert_eq!(dims, vec![1, 1, 2, 1, 1]);
        assert_eq!(g.case_of(&r(-2)).unwrap(), CaseTag { case: Case::A, sigma: 0 });
        assert_eq!(g.case_of(&r(0)).unwrap(), CaseTag { case: Case::D, sigma: 0 });
        assert_eq!(g.predicted_step(&r(0)), Some((1, 1)));
        assert!(g.case_of(&r(3)).is_err());
        // minimal N is the unique corner state
        let h = RectangleGeometry::new(&Rational::frac(-1, 2), &Rational::frac(-5, 2), &Rational::frac(-3, 2)).unwrap();
        assert_eq!(h.slice_dim(&h.n_min()), 1);
        assert_eq!(h.n_max(), -h.n_min());
    }
}
