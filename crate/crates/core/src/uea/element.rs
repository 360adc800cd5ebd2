use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use crate::arith::Rational;
use crate::lie::{LinComb, OrthogonalAlgebra};

/// A monomial: positions of canonical generators, read left to right.
pub type Word = Vec<u16>;

/// Element of U(o_N) as a finite combination of words with rational coefficients.
/// The words need not be in PBW order; see [`super::Uea::normal_order`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UeaElement {
    terms: BTreeMap<Word, Rational>,
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(Vec::new(), c);
        e
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn generator(k: usize) -> Self {
        Self::monomial(vec![k as u16], Rational::one())
    }

    pub fn monomial(w: Word, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_lincomb(l: &LinComb) -> Self {
        let mut e = Self::zero();
        for (k, c) in l {
            e.add_term(vec![*k as u16], c.clone());
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UeaElement, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn coefficient(&self, w: &[u16]) -> Rational {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut e = Self::zero();
        e.add_scaled(self, c);
        e
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut e = self.clone();
        e.add_scaled(o, &Rational::one());
        e
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut e = self.clone();
        e.add_scaled(o, &Rational::from_int(-1));
        e
    }

    /// Concatenation product; the result is generally not normally ordered.
    pub fn concat(&self, o: &Self) -> Self {
        let mut e = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                e.add_term(w, c1 * c2);
            }
        }
        e
    }

    /// `self * o - o * self` as concatenations.
    pub fn concat_commutator(&self, o: &Self) -> Self {
        self.concat(o).sub(&o.concat(self))
    }

    /// Applies a letter-wise substitution extended multiplicatively.
    pub fn substitute(&self, image: impl Fn(u16) -> UeaElement) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::scalar(c.clone());
            for &g in w {
                acc = acc.concat(&image(g));
            }
            out.add_scaled(&acc, &Rational::one());
        }
        out
    }

    /// Human-readable form such as `1/2 F[-1,-2]F[0,-1] - F[-1,-1]`.
    pub fn display(&self, alg: &OrthogonalAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let a = c.abs();
            if w.is_empty() {
                let _ = write!(s, "{}", a);
                continue;
            }
            if !a.is_one() {
                let _ = write!(s, "{} ", a);
            }
            for &g in w {
                let _ = write!(s, "{}", alg.generator(g as usize));
            }
        }
        s
    }

    /// Terms as `(word of (i, j) pairs, coefficient)` for serialization.
    pub fn labelled_terms(&self, alg: &OrthogonalAlgebra) -> Vec<TermView> {
        self.terms
            .iter()
            .map(|(w, c)| TermView {
                word: w.iter().map(|&g| alg.generator(g as usize)).map(|g| (g.i, g.j)).collect(),
                coefficient: c.clone(),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct TermView {
    pub word: Vec<(i32, i32)>,
    pub coefficient: Rational,
}

impl Serialize for UeaElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(&Word, &Rational)> = self.terms.iter().collect();
        v.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut e = UeaElement::generator(3);
        e.add_term(vec![3], Rational::from_int(-1));
        assert!(e.is_zero());
    }

    #[test]
    fn concat_is_word_concatenation() {
        let a = UeaElement::generator(1).add(&UeaElement::generator(2));
        let b = UeaElement::monomial(vec![0], Rational::frac(1, 2));
        let p = a.concat(&b);
        assert_eq!(p.coefficient(&[1, 0]), Rational::frac(1, 2));
        assert_eq!(p.coefficient(&[2, 0]), Rational::frac(1, 2));
        assert_eq!(p.degree(), 2);
    }
}
