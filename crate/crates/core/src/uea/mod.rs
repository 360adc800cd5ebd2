//! The universal enveloping algebra U(o_N) with a PBW normal form, and
//! noncommutative Pfaffians of the matrix `Φ = (F_{-i,j})`.

mod element;
mod eval;
mod identities;
mod pfaffian;

pub use element::{TermView, UeaElement, Word};
pub use eval::{apply_element, evaluate};
pub use identities::{IdentityCheck, CommutatorSign};
pub use pfaffian::IndexSet;

use std::cell::RefCell;
use std::collections::HashMap;

use thiserror::Error;

use crate::arith::Rational;
use crate::lie::{LieError, OrthogonalAlgebra, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UeaError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("index {0} repeated in index set")]
    DuplicateIndex(i32),
    #[error("index set has odd cardinality {0}")]
    OddCardinality(usize),
    #[error("element is not weight-homogeneous")]
    Inhomogeneous,
}

/// U(o_N) together with memo tables for normal ordering and Pfaffians.
///
/// Normal ordering rewrites the leftmost adjacent pair that is out of PBW order,
/// `xy = yx + [x, y]`. Each step either lowers the number of inversions at fixed
/// degree or lowers the degree, so the rewriting terminates.
#[derive(Debug)]
pub struct Uea {
    alg: OrthogonalAlgebra,
    memo: RefCell<HashMap<Word, UeaElement>>,
    pf_cache: RefCell<HashMap<Vec<i32>, UeaElement>>,
}

impl Uea {
    pub fn new(big_n: usize) -> Result<Self, UeaError> {
        Ok(Self::from_algebra(OrthogonalAlgebra::new(big_n)?))
    }

    pub fn from_algebra(alg: OrthogonalAlgebra) -> Self {
        Uea { alg, memo: RefCell::default(), pf_cache: RefCell::default() }
    }

    pub fn algebra(&self) -> &OrthogonalAlgebra {
        &self.alg
    }

    /// `F_ij` as an element (zero for `j = -i`).
    pub fn gen(&self, i: i32, j: i32) -> Result<UeaElement, UeaError> {
        Ok(UeaElement::from_lincomb(&self.alg.element(i, j)?))
    }

    pub fn is_normal_word(w: &[u16]) -> bool {
        w.windows(2).all(|p| p[0] <= p[1])
    }

    pub fn is_normal(e: &UeaElement) -> bool {
        e.terms().keys().all(|w| Self::is_normal_word(w))
    }

    fn inversions(w: &[u16]) -> usize {
        let mut c = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    c += 1;
                }
            }
        }
        c
    }

    fn normal_word(&self, w: &[u16]) -> UeaElement {
        if let Some(r) = self.memo.borrow().get(w) {
            return r.clone();
        }
        let Some(i) = w.windows(2).position(|p| p[0] > p[1]) else {
            return UeaElement::monomial(w.to_vec(), Rational::one());
        };
        let mut swapped = w.to_vec();
        swapped.swap(i, i + 1);
        debug_assert_eq!(Self::inversions(&swapped) + 1, Self::inversions(w));
        let mut out = self.normal_word(&swapped);
        for (g, c) in self.alg.bracket(w[i] as usize, w[i + 1] as usize) {
            let mut shorter = Vec::with_capacity(w.len() - 1);
            shorter.extend_from_slice(&w[..i]);
            shorter.push(*g as u16);
            shorter.extend_from_slice(&w[i + 2..]);
            debug_assert!(shorter.len() < w.len());
            out.add_scaled(&self.normal_word(&shorter), c);
        }
        self.memo.borrow_mut().insert(w.to_vec(), out.clone());
        out
    }

    /// PBW normal form: each word sorted as lowering, Cartan, raising.
    pub fn normal_order(&self, e: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (w, c) in e.terms() {
            if Self::is_normal_word(w) {
                out.add_term(w.clone(), c.clone());
            } else {
                out.add_scaled(&self.normal_word(w), c);
            }
        }
        out
    }

    /// Normal-ordered product.
    pub fn multiply(&self, a: &UeaElement, b: &UeaElement) -> UeaElement {
        self.normal_order(&a.concat(b))
    }

    /// Normal-ordered commutator `ab - ba`.
    pub fn commutator(&self, a: &UeaElement, b: &UeaElement) -> UeaElement {
        self.normal_order(&a.concat_commutator(b))
    }

    /// Weight by which the element shifts weight vectors, if every term agrees.
    pub fn weight_shift_of(&self, e: &UeaElement) -> Result<Weight, UeaError> {
        let n = self.alg.n();
        let mut shift: Option<Weight> = None;
        for w in e.terms().keys() {
            let mut s = Weight::zero(n);
            for &g in w {
                s = &s + &self.alg.root_of(self.alg.generator(g as usize));
            }
            match &shift {
                None => shift = Some(s),
                Some(t) if *t == s => {}
                Some(_) => return Err(UeaError::Inhomogeneous),
            }
        }
        Ok(shift.unwrap_or_else(|| Weight::zero(n)))
    }

    /// Chevalley-type involution `F_ij -> -s_i s_j F_ji` with `s_0 = -1` and
    /// `s_i = 1` otherwise, extended to an algebra automorphism of U(o_N).
    /// It acts as `-1` on the Cartan subalgebra.
    pub fn omega(&self, e: &UeaElement) -> UeaElement {
        let images: Vec<UeaElement> = (0..self.alg.dim())
            .map(|k| {
                let g = self.alg.generator(k);
                let s = omega_sign(g.i, g.j);
                self.gen(g.j, g.i).expect("valid indices").scale(&Rational::from_int(s))
            })
            .collect();
        e.substitute(|g| images[g as usize].clone())
    }

    pub fn memo_size(&self) -> usize {
        self.memo.borrow().len()
    }
}

/// Sign `-s_i s_j` in the involution `ω(F_ij) = -s_i s_j F_ji`.
pub fn omega_sign(i: i32, j: i32) -> i64 {
    let s = |x: i32| if x == 0 { -1 } else { 1 };
    -(s(i) * s(j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_order_of_swapped_pair() {
        let u = Uea::new(3).unwrap();
        // o_3 order: F[0,-1] < F[-1,-1] < F[-1,0]
        let e = u.gen(-1, 0).unwrap();
        let f = u.gen(0, -1).unwrap();
        let ef = u.normal_order(&e.concat(&f));
        // ef = fe + [e, f], and [F_{-1,0}, F_{0,-1}] = F_{-1,-1}
        let expected = f.concat(&e).add(&u.gen(-1, -1).unwrap());
        assert_eq!(ef, expected);
        assert!(Uea::is_normal(&ef));
    }

    #[test]
    fn omega_is_minus_one_on_cartan() {
        let u = Uea::new(5).unwrap();
        let h = u.gen(1, 1).unwrap();
        assert_eq!(u.omega(&h), h.scale(&Rational::from_int(-1)));
    }

    #[test]
    fn omega_preserves_brackets() {
        let u = Uea::new(5).unwrap();
        let d = u.algebra().dim();
        for a in 0..d {
            for b in 0..d {
                let x = UeaElement::generator(a);
                let y = UeaElement::generator(b);
                let lhs = u.omega(&u.commutator(&x, &y));
                let rhs = u.commutator(&u.omega(&x), &u.omega(&y));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
