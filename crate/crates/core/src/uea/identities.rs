//! Commutation, splitting and expansion identities for Pfaffians, each checked
//! both symbolically (normal form of `lhs - rhs`) and by evaluating the raw,
//! unordered expressions as matrices.

use serde::Serialize;

use super::pfaffian::sort_sign;
use super::{evaluate, IndexSet, Uea, UeaElement, UeaError};
use crate::arith::{factorial, Rational, SparseMatrix};

/// Sign convention for the single-replacement cases of the Pfaffian commutator rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CommutatorSign {
    /// `+PfF_{I(j1 -> -j2)}` when only `j1 ∈ I`, `-PfF_{I(j2 -> -j1)}` when only `j2 ∈ I`.
    Standard,
    /// Both single-replacement signs flipped.
    Flipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub params: String,
    /// Left side, as an unordered expression.
    #[serde(skip)]
    pub lhs: UeaElement,
    /// Right side, as an unordered expression.
    #[serde(skip)]
    pub rhs: UeaElement,
    /// Normal form of `lhs - rhs`.
    pub residual: UeaElement,
}

impl IdentityCheck {
    fn new(uea: &Uea, name: &'static str, params: String, lhs: UeaElement, rhs: UeaElement) -> Self {
        let residual = uea.normal_order(&lhs.sub(&rhs));
        IdentityCheck { name, params, lhs, rhs, residual }
    }

    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }

    /// Whether both sides agree as matrices under `mats`.
    pub fn holds_in(&self, mats: &[SparseMatrix]) -> bool {
        evaluate(&self.lhs, mats) == evaluate(&self.rhs, mats)
    }
}

fn replace(list: &[i32], from: i32, to: i32) -> Vec<i32> {
    list.iter().map(|&x| if x == from { to } else { x }).collect()
}

impl Uea {
    /// Right side of the rule for `[PfF_I, F_{j1,-j2}]`.
    pub fn pf_commutator_rhs_raw(&self, set: &IndexSet, j1: i32, j2: i32, sign: CommutatorSign) -> Result<UeaElement, UeaError> {
        let (a, b) = (set.contains(j1), set.contains(j2));
        let list = set.as_slice();
        let first = || self.pfaffian_list_raw(&replace(list, j1, -j2));
        let second = || self.pfaffian_list_raw(&replace(list, j2, -j1));
        let flip = match sign {
            CommutatorSign::Standard => Rational::one(),
            CommutatorSign::Flipped => Rational::from_int(-1),
        };
        Ok(match (a, b) {
            (false, false) => UeaElement::zero(),
            (true, false) => first()?.scale(&flip),
            (false, true) => second()?.scale(&-&flip),
            (true, true) => first()?.sub(&second()?),
        })
    }

    pub fn check_pf_commutator(&self, set: &IndexSet, j1: i32, j2: i32, sign: CommutatorSign) -> Result<IdentityCheck, UeaError> {
        let pf = self.pfaffian_raw(set.as_slice())?;
        let f = self.gen(j1, -j2)?;
        let lhs = pf.concat_commutator(&f);
        let rhs = self.pf_commutator_rhs_raw(set, j1, j2, sign)?;
        Ok(IdentityCheck::new(self, "pfaffian_commutator", format!("I={} j1={} j2={} sign={:?}", set, j1, j2, sign), lhs, rhs))
    }

    fn split_terms(&self, set: &IndexSet, p: usize) -> Result<UeaElement, UeaError> {
        let k = set.len();
        let q = k - p;
        let coef = &(&factorial((p / 2) as u32) * &factorial((q / 2) as u32)) / &factorial((k / 2) as u32);
        let mut out = UeaElement::zero();
        for left in set.subsets(p) {
            let right = set.without(left.as_slice());
            let mut order = left.as_slice().to_vec();
            order.extend_from_slice(right.as_slice());
            let s = &coef * &Rational::from_int(sort_sign(&order));
            let term = self.pfaffian_raw(left.as_slice())?.concat(&self.pfaffian_raw(right.as_slice())?);
            out.add_scaled(&term, &s);
        }
        Ok(out)
    }

    /// `PfF_I = ((p/2)!(q/2)!/(k/2)!) Σ_{I = I'⊔I''} sgn(I'I'') PfF_{I'} PfF_{I''}` for fixed even `p`.
    pub fn check_split(&self, set: &IndexSet, p: usize) -> Result<IdentityCheck, UeaError> {
        if p % 2 == 1 || set.len() % 2 == 1 {
            return Err(UeaError::OddCardinality(if p % 2 == 1 { p } else { set.len() }));
        }
        let lhs = self.pfaffian_raw(set.as_slice())?;
        let rhs = self.split_terms(set, p)?;
        Ok(IdentityCheck::new(self, "pfaffian_split", format!("I={} p={}", set, p), lhs, rhs))
    }

    /// The split identity averaged over all even `p`: prefactor `1/(k/2 + 1)`.
    pub fn check_split_sum(&self, set: &IndexSet) -> Result<IdentityCheck, UeaError> {
        let k = set.len();
        if k % 2 == 1 {
            return Err(UeaError::OddCardinality(k));
        }
        let lhs = self.pfaffian_raw(set.as_slice())?;
        let mut rhs = UeaElement::zero();
        for p in (0..=k).step_by(2) {
            rhs.add_scaled(&self.split_terms(set, p)?, &Rational::one());
        }
        let rhs = rhs.scale(&Rational::frac(1, (k / 2 + 1) as i64));
        Ok(IdentityCheck::new(self, "pfaffian_split_sum", format!("I={}", set), lhs, rhs))
    }

    /// Expansion along `-n ∈ I`:
    /// `PfF_I = Σ_i Σ_{I'⊔I''} ((|I'|/2)!(|I''|/2)!/(k/2)!) sgn(I', -n, i, I'') PfF_{I'} F_{n,i} PfF_{I''}`.
    pub fn check_expansion(&self, set: &IndexSet) -> Result<IdentityCheck, UeaError> {
        let n = self.alg.n() as i32;
        let k = set.len();
        if k % 2 == 1 {
            return Err(UeaError::OddCardinality(k));
        }
        if !set.contains(-n) {
            return Err(UeaError::Lie(crate::lie::LieError::InvalidIndex { index: -n, big_n: self.alg.big_n() }));
        }
        let lhs = self.pfaffian_raw(set.as_slice())?;
        let mut rhs = UeaElement::zero();
        let kf = factorial((k / 2) as u32);
        for &i in set.as_slice().iter().filter(|&&i| i != -n) {
            let rest = set.without(&[-n, i]);
            let f = self.gen(n, i)?;
            for p in (0..=rest.len()).step_by(2) {
                for left in rest.subsets(p) {
                    let right = rest.without(left.as_slice());
                    let mut order = left.as_slice().to_vec();
                    order.push(-n);
                    order.push(i);
                    order.extend_from_slice(right.as_slice());
                    let coef = &(&factorial((left.len() / 2) as u32) * &factorial((right.len() / 2) as u32)) / &kf;
                    let s = &coef * &Rational::from_int(sort_sign(&order));
                    let term = self
                        .pfaffian_raw(left.as_slice())?
                        .concat(&f)
                        .concat(&self.pfaffian_raw(right.as_slice())?);
                    rhs.add_scaled(&term, &s);
                }
            }
        }
        Ok(IdentityCheck::new(self, "pfaffian_expansion", format!("I={}", set), lhs, rhs))
    }

    /// `[C_k, F_g] = 0` for every canonical generator `F_g`.
    /// The commutators are formed from the normal form of `C_k`.
    pub fn check_capelli_central(&self, k: usize) -> Result<Vec<IdentityCheck>, UeaError> {
        let c = self.capelli(k)?;
        Ok((0..self.alg.dim())
            .map(|g| {
                let lhs = c.concat_commutator(&UeaElement::generator(g));
                let name = format!("k={} F={}", k, self.alg.generator(g));
                IdentityCheck::new(self, "capelli_central", name, lhs, UeaElement::zero())
            })
            .collect())
    }

    /// `[PfF_{hat r}, F_ij] = 0` for `-n < i, j < n`.
    pub fn check_hat_commutes(&self, r: i32, i: i32, j: i32) -> Result<IdentityCheck, UeaError> {
        let set = IndexSet::hat(&self.alg, r)?;
        let lhs = self.pfaffian_raw(set.as_slice())?.concat_commutator(&self.gen(i, j)?);
        Ok(IdentityCheck::new(self, "hat_commutes", format!("r={} F[{},{}]", r, i, j), lhs, UeaElement::zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_rule_small_case() {
        let u = Uea::new(5).unwrap();
        let set = IndexSet::new(u.algebra(), vec![-1, 1]).unwrap();
        // j1 = 1 ∈ I, j2 = 2 ∉ I
        let c = u.check_pf_commutator(&set, 1, 2, CommutatorSign::Standard).unwrap();
        assert!(c.holds(), "{}", c.residual.display(u.algebra()));
        let c = u.check_pf_commutator(&set, 1, 2, CommutatorSign::Flipped).unwrap();
        assert!(!c.holds());
    }
}
