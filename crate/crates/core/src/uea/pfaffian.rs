use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Uea, UeaElement, UeaError};
use crate::arith::{factorial, Rational};
use crate::lie::{Canonical, OrthogonalAlgebra, Weight};

/// A sorted set of distinct indices `I ⊂ {-n, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexSet(Vec<i32>);

impl IndexSet {
    pub fn new(alg: &OrthogonalAlgebra, mut v: Vec<i32>) -> Result<Self, UeaError> {
        for &i in &v {
            alg.check_index(i)?;
        }
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(UeaError::DuplicateIndex(w[0]));
        }
        Ok(IndexSet(v))
    }

    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    /// All indices except `r`; `hat(n)` and `hat(-n)` are the sets of the
    /// Pfaffians that commute with o_{N-2}.
    pub fn hat(alg: &OrthogonalAlgebra, r: i32) -> Result<Self, UeaError> {
        alg.check_index(r)?;
        Ok(IndexSet(alg.indices().into_iter().filter(|&i| i != r).collect()))
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: i32) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// `-I`, sorted.
    pub fn negated(&self) -> Self {
        let mut v: Vec<i32> = self.0.iter().map(|i| -i).collect();
        v.sort_unstable();
        IndexSet(v)
    }

    /// `-Σ_{i ∈ I} e_i`, the weight shift of `PfF_I`.
    pub fn weight_shift(&self, n: usize) -> Weight {
        let mut w = Weight::zero(n);
        for &i in &self.0 {
            w = &w - &Weight::basis(n, i);
        }
        w
    }

    /// All subsets of size `k`, in lexicographic order.
    pub fn subsets(&self, k: usize) -> Vec<IndexSet> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(src: &[i32], start: usize, k: usize, cur: &mut Vec<i32>, out: &mut Vec<IndexSet>) {
            if cur.len() == k {
                out.push(IndexSet(cur.clone()));
                return;
            }
            for p in start..src.len() {
                if src.len() - p < k - cur.len() {
                    break;
                }
                cur.push(src[p]);
                rec(src, p + 1, k, cur, out);
                cur.pop();
            }
        }
        rec(&self.0, 0, k, &mut cur, &mut out);
        out
    }

    pub fn without(&self, drop: &[i32]) -> Self {
        IndexSet(self.0.iter().copied().filter(|i| !drop.contains(i)).collect())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Sign of the permutation that sorts `v` (entries assumed distinct).
pub(crate) fn sort_sign(v: &[i32]) -> i64 {
    let mut s = 1;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if v[a] > v[b] {
                s = -s;
            }
        }
    }
    s
}

impl Uea {
    /// Unordered expansion of `PfF_L` for an ordered list `L` of distinct indices:
    /// `(1/m!) Σ sgn(π) Φ_{L[p1],L[q1]} ... Φ_{L[pm],L[qm]}`, summed over
    /// sequences of position pairs with `p_t < q_t`, where `Φ_{a,b} = F_{-a,b}`.
    pub fn pfaffian_raw(&self, list: &[i32]) -> Result<UeaElement, UeaError> {
        for &i in list {
            self.alg.check_index(i)?;
        }
        if list.len() % 2 == 1 {
            return Err(UeaError::OddCardinality(list.len()));
        }
        let mut seen = list.to_vec();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(UeaError::DuplicateIndex(w[0]));
        }
        let m = list.len() / 2;
        let scale = factorial(m as u32).recip().expect("nonzero factorial");
        let mut out = UeaElement::zero();
        let mut order: Vec<usize> = Vec::with_capacity(list.len());
        let mut used = vec![false; list.len()];
        self.matchings(list, &mut used, &mut order, &scale, &mut out);
        Ok(out)
    }

    fn matchings(&self, list: &[i32], used: &mut [bool], order: &mut Vec<usize>, scale: &Rational, out: &mut UeaElement) {
        if order.len() == list.len() {
            let positions: Vec<i32> = order.iter().map(|&p| p as i32).collect();
            let mut coef = scale * &Rational::from_int(sort_sign(&positions));
            let mut word = Vec::with_capacity(order.len() / 2);
            for pair in order.chunks(2) {
                match self.alg.canonicalize(-list[pair[0]], list[pair[1]]).expect("checked indices") {
                    Canonical::Zero => return,
                    Canonical::Gen { sign, gen } => {
                        if sign < 0 {
                            coef = -coef;
                        }
                        word.push(self.alg.position(gen).expect("canonical") as u16);
                    }
                }
            }
            out.add_term(word, coef);
            return;
        }
        for p in 0..list.len() {
            if used[p] {
                continue;
            }
            used[p] = true;
            for q in p + 1..list.len() {
                if used[q] {
                    continue;
                }
                used[q] = true;
                order.push(p);
                order.push(q);
                self.matchings(list, used, order, scale, out);
                order.pop();
                order.pop();
                used[q] = false;
            }
            used[p] = false;
        }
    }

    /// Normal-ordered `PfF_I`.
    pub fn pfaffian(&self, set: &IndexSet) -> UeaElement {
        if let Some(e) = self.pf_cache.borrow().get(set.as_slice()) {
            return e.clone();
        }
        let raw = self.pfaffian_raw(set.as_slice()).expect("validated index set");
        let e = self.normal_order(&raw);
        self.pf_cache.borrow_mut().insert(set.as_slice().to_vec(), e.clone());
        e
    }

    /// Normal-ordered Pfaffian of an ordered list; zero if an index repeats.
    /// Reordering the list multiplies the Pfaffian by the sign of the permutation.
    pub fn pfaffian_list(&self, list: &[i32]) -> Result<UeaElement, UeaError> {
        if list.len() % 2 == 1 {
            return Err(UeaError::OddCardinality(list.len()));
        }
        let mut sorted = list.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            for &i in list {
                self.alg.check_index(i)?;
            }
            return Ok(UeaElement::zero());
        }
        let set = IndexSet::new(&self.alg, sorted)?;
        Ok(self.pfaffian(&set).scale(&Rational::from_int(sort_sign(list))))
    }

    /// Raw counterpart of [`Uea::pfaffian_list`], without normal ordering.
    pub fn pfaffian_list_raw(&self, list: &[i32]) -> Result<UeaElement, UeaError> {
        let mut sorted = list.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            for &i in list {
                self.alg.check_index(i)?;
            }
            return Ok(UeaElement::zero());
        }
        self.pfaffian_raw(list)
    }

    /// Unordered `C_k = Σ_{|I| = k} PfF_I PfF_{-I}`.
    pub fn capelli_raw(&self, k: usize) -> Result<UeaElement, UeaError> {
        if k % 2 == 1 {
            return Err(UeaError::OddCardinality(k));
        }
        let full = IndexSet(self.alg.indices());
        let mut out = UeaElement::zero();
        for set in full.subsets(k) {
            let a = self.pfaffian_raw(set.as_slice())?;
            let b = self.pfaffian_raw(set.negated().as_slice())?;
            out.add_scaled(&a.concat(&b), &Rational::one());
        }
        Ok(out)
    }

    /// Normal-ordered Capelli element `C_k`.
    pub fn capelli(&self, k: usize) -> Result<UeaElement, UeaError> {
        if k % 2 == 1 {
            return Err(UeaError::OddCardinality(k));
        }
        let full = IndexSet(self.alg.indices());
        let mut out = UeaElement::zero();
        for set in full.subsets(k) {
            let p = self.multiply(&self.pfaffian(&set), &self.pfaffian(&set.negated()));
            out.add_scaled(&p, &Rational::one());
        }
        Ok(out)
    }

    /// Index set of all indices for this algebra.
    pub fn full_set(&self) -> IndexSet {
        IndexSet(self.alg.indices())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_pfaffians() {
        let u = Uea::new(5).unwrap();
        assert_eq!(u.pfaffian(&IndexSet::empty()), UeaElement::one());
        // PfF_{-1,1} = F_{1,1}
        let s = IndexSet::new(u.algebra(), vec![1, -1]).unwrap();
        assert_eq!(u.pfaffian(&s), u.gen(1, 1).unwrap());
        // PfF_{a,b} = F_{-a,b}
        let s = IndexSet::new(u.algebra(), vec![-2, 0]).unwrap();
        assert_eq!(u.pfaffian(&s), u.gen(2, 0).unwrap());
    }

    #[test]
    fn list_order_gives_sign() {
        let u = Uea::new(5).unwrap();
        let a = u.pfaffian_list(&[-2, -1, 0, 1]).unwrap();
        let b = u.pfaffian_list(&[-1, -2, 0, 1]).unwrap();
        assert_eq!(a, b.scale(&Rational::from_int(-1)));
        assert!(u.pfaffian_list(&[1, 1]).unwrap().is_zero());
        assert_eq!(u.pfaffian_raw(&[1, 2, 0]), Err(UeaError::OddCardinality(3)));
    }

    #[test]
    fn subsets_and_negation() {
        let u = Uea::new(5).unwrap();
        let full = u.full_set();
        assert_eq!(full.subsets(2).len(), 10);
        assert_eq!(full.subsets(4).len(), 5);
        let s = IndexSet::new(u.algebra(), vec![-2, 0, 1]).unwrap();
        assert_eq!(s.negated().as_slice(), &[-1, 0, 2]);
        assert_eq!(IndexSet::hat(u.algebra(), 2).unwrap().as_slice(), &[-2, -1, 0, 1]);
    }
}
