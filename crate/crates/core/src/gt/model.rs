//! Predicted matrices of `PfF_{hat 2}` between consecutive `N`-lines, in the
//! basis of second-row points, and rank tables of their composites.

use serde::{Deserialize, Serialize};

use super::classify::Chain;
use super::{GtError, RectangleGeometry};
use crate::arith::{ExactMatrix, QuadScalar, Rational};

/// Which reading of the coefficients `γ1, γ2` to use in the `σ = 1` step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GammaConvention {
    /// `γ1 = λ'21 + 1`, `γ2 = λ'22 + 2`.
    RhoShifted,
    /// `γ1 = λ'21`, `γ2 = λ'22 - 1`.
    Plain,
}

impl GammaConvention {
    pub const ALL: [GammaConvention; 2] = [GammaConvention::RhoShifted, GammaConvention::Plain];

    pub fn gammas(self, x: &Rational, y: &Rational) -> (Rational, Rational) {
        match self {
            GammaConvention::RhoShifted => (x + &Rational::one(), y + &Rational::from_int(2)),
            GammaConvention::Plain => (x.clone(), y - &Rational::one()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GammaConvention::RhoShifted => "rho-shifted",
            GammaConvention::Plain => "plain",
        }
    }
}

/// Matrix from the line `N` to the line `N + 1` (rows: target points,
/// columns: source points).
///
/// `σ = 0`: each point goes to itself, except `λ'21 = 0` which is killed.
/// `σ = 1`: `(x, y) ↦ c1 (x+1, y) + c2 (x, y+1)` with
/// `c1 = -γ2²/(γ1² - γ2²)`, `c2 = -γ1²/(γ2² - γ1²)`; targets outside the
/// rectangle are dropped.
pub fn predicted_slice_matrix(
    g: &RectangleGeometry,
    n: &Rational,
    convention: GammaConvention,
) -> Result<ExactMatrix, GtError> {
    let src = g.line(n).map(|l| (l.sigma, l.points)).unwrap_or((0, Vec::new()));
    let tgt = g.line(&(n + &Rational::one())).map(|l| l.points).unwrap_or_default();
    let mut m = ExactMatrix::zeros(tgt.len(), src.1.len());
    let find = |p: &(Rational, Rational)| tgt.iter().position(|q| q == p);
    for (c, p) in src.1.iter().enumerate() {
        if src.0 == 0 {
            if let Some(r) = find(p) {
                m.set(r, c, QuadScalar::one());
            }
            continue;
        }
        let (x, y) = p;
        let (g1, g2) = convention.gammas(x, y);
        let (s1, s2) = (&g1 * &g1, &g2 * &g2);
        let den = &s1 - &s2;
        if den.is_zero() {
            return Err(GtError::Singular { x: x.clone(), y: y.clone(), convention });
        }
        let c1 = -(&s2 / &den);
        let c2 = &s1 / &den;
        if let Some(r) = find(&(x + &Rational::one(), y.clone())) {
            m.set(r, c, QuadScalar::from(c1));
        }
        if let Some(r) = find(&(x.clone(), y + &Rational::one())) {
            m.set(r, c, QuadScalar::from(c2));
        }
    }
    Ok(m)
}

/// Model chain over every `N` from `N_min` to `N_max`.
pub fn model_chain(g: &RectangleGeometry, convention: GammaConvention) -> Result<Chain, GtError> {
    let ns = g.n_values();
    let dims = ns.iter().map(|n| g.slice_dim(n)).collect();
    let maps = ns[..ns.len() - 1]
        .iter()
        .map(|n| predicted_slice_matrix(g, n, convention))
        .collect::<Result<_, _>>()?;
    Ok(Chain { t: g.t.clone(), ns, dims, maps })
}

/// `ranks[i][j]` (for `i < j`) is the rank of the composite map from `ns[i]` to `ns[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTable {
    #[serde(rename = "T")]
    pub t: Rational,
    pub ns: Vec<Rational>,
    pub ranks: Vec<Vec<usize>>,
}

pub fn rank_table(chain: &Chain) -> RankTable {
    let len = chain.ns.len();
    let mut ranks = vec![vec![0; len]; len];
    for i in 0..len {
        ranks[i][i] = chain.dims[i];
        let mut comp = ExactMatrix::identity(chain.dims[i]);
        for j in i + 1..len {
            comp = chain.maps[j - 1].mul(&comp).expect("chain shapes");
            ranks[i][j] = comp.rank();
        }
    }
    RankTable { t: chain.t.clone(), ns: chain.ns.clone(), ranks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn definition_convention_is_singular_on_a_square() {
        let g = RectangleGeometry::new(&r(-1), &r(-2), &r(-1)).unwrap();
        assert!(matches!(
            predicted_slice_matrix(&g, &r(-1), GammaConvention::RhoShifted),
            Err(GtError::Singular { .. })
        ));
        let m = predicted_slice_matrix(&g, &r(-1), GammaConvention::Plain).unwrap();
        assert_eq!((m.rows(), m.cols(), m.rank()), (2, 1, 1));
        // σ = 0 step at N = 0 kills the λ'21 = 0 point
        let m = predicted_slice_matrix(&g, &r(0), GammaConvention::Plain).unwrap();
        assert_eq!((m.rows(), m.cols(), m.rank()), (1, 2, 1));
    }

    #[test]
    fn rank_table_of_model() {
        let g = RectangleGeometry::new(&r(0), &r(-2), &r(-1)).unwrap();
        let t = rank_table(&model_chain(&g, GammaConvention::Plain).unwrap());
        assert_eq!(t.ns.len(), 3);
        assert_eq!(t.ranks[0][2], 0);
    }
}
