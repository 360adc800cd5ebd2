use std::collections::HashMap;

use super::{UeaElement, Word};
use crate::arith::{apply_word, axpy, zero_vector, QuadScalar, SparseMatrix, Vector};

/// Image of `e` under the representation sending generator `k` to `mats[k]`.
pub fn evaluate(e: &UeaElement, mats: &[SparseMatrix]) -> SparseMatrix {
    let dim = mats.first().map_or(1, SparseMatrix::rows);
    let mut prefix: HashMap<Word, SparseMatrix> = HashMap::new();
    let mut out = SparseMatrix::zeros(dim, dim);
    for (w, c) in e.terms() {
        let m = word_matrix(w, mats, dim, &mut prefix);
        out = out.lincomb(&QuadScalar::one(), &m, &c.clone().into()).expect("square operators");
    }
    out
}

fn word_matrix(w: &[u16], mats: &[SparseMatrix], dim: usize, cache: &mut HashMap<Word, SparseMatrix>) -> SparseMatrix {
    if w.is_empty() {
        return SparseMatrix::identity(dim);
    }
    if let Some(m) = cache.get(w) {
        return m.clone();
    }
    let head = word_matrix(&w[..w.len() - 1], mats, dim, cache);
    let m = head.mul(&mats[w[w.len() - 1] as usize]).expect("square operators");
    cache.insert(w.to_vec(), m.clone());
    m
}

/// `e · v` computed word by word, without forming matrices.
pub fn apply_element(e: &UeaElement, mats: &[SparseMatrix], v: &[QuadScalar]) -> Vector {
    let mut out = zero_vector(v.len());
    for (w, c) in e.terms() {
        let ops: Vec<&SparseMatrix> = w.iter().map(|&g| &mats[g as usize]).collect();
        let wv = apply_word(&ops, v);
        axpy(&mut out, &c.clone().into(), &wv);
    }
    out
}
