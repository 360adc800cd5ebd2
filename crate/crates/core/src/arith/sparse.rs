use std::collections::BTreeMap;

use super::{axpy, zero_vector, ArithError, ExactMatrix, QuadScalar, Vector};

/// Sparse square-or-rectangular matrix stored as sorted rows of `(column, value)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, QuadScalar)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].push((i, QuadScalar::one()));
        }
        m
    }

    /// Builds from triplets; repeated positions are summed and zeros dropped.
    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, QuadScalar)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, QuadScalar>> = vec![BTreeMap::new(); rows];
        for (i, j, x) in entries {
            assert!(i < rows && j < cols, "entry ({}, {}) outside {}x{}", i, j, rows, cols);
            *acc[i].entry(j).or_default() += &x;
        }
        let data = acc
            .into_iter()
            .map(|r| r.into_iter().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        SparseMatrix { rows, cols, data }
    }

    pub fn from_dense(m: &ExactMatrix) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !m.get(i, j).is_zero() {
                    out.data[i].push((j, m.get(i, j).clone()));
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.rows, self.cols);
        for (i, r) in self.data.iter().enumerate() {
            for (j, x) in r {
                m.set(i, *j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, QuadScalar)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> QuadScalar {
        self.data[i]
            .binary_search_by_key(&j, |(c, _)| *c)
            .map(|k| self.data[i][k].1.clone())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// True when every nonzero entry lies on the diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.data.iter().enumerate().all(|(i, r)| r.iter().all(|(j, _)| *j == i))
    }

    pub fn diagonal(&self) -> Vector {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn mul_vec(&self, v: &[QuadScalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.data
            .iter()
            .map(|r| {
                let mut acc = QuadScalar::zero();
                for (j, x) in r {
                    if !v[*j].is_zero() {
                        acc += &(x * &v[*j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<Vec<(usize, QuadScalar)>> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, x) in r {
                data[*j].push((i, x.clone()));
            }
        }
        SparseMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn scale(&self, c: &QuadScalar) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self.data.iter().map(|r| r.iter().map(|(j, x)| (*j, c * x)).collect()).collect();
        SparseMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, o: &Self) -> Result<Self, ArithError> {
        self.lincomb(&QuadScalar::one(), o, &QuadScalar::one())
    }

    pub fn sub(&self, o: &Self) -> Result<Self, ArithError> {
        self.lincomb(&QuadScalar::one(), o, &QuadScalar::from_int(-1))
    }

    /// `a * self + b * o`.
    pub fn lincomb(&self, a: &QuadScalar, o: &Self, b: &QuadScalar) -> Result<Self, ArithError> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(ArithError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows);
        for (r1, r2) in self.data.iter().zip(&o.data) {
            let mut row = Vec::with_capacity(r1.len() + r2.len());
            let (mut p, mut q) = (0, 0);
            while p < r1.len() || q < r2.len() {
                let take1 = q == r2.len() || (p < r1.len() && r1[p].0 <= r2[q].0);
                let take2 = p == r1.len() || (q < r2.len() && r2[q].0 <= r1[p].0);
                let (col, val) = match (take1, take2) {
                    (true, true) => {
                        let v = &(a * &r1[p].1) + &(b * &r2[q].1);
                        let c = r1[p].0;
                        p += 1;
                        q += 1;
                        (c, v)
                    }
                    (true, false) => {
                        let c = r1[p].0;
                        let v = a * &r1[p].1;
                        p += 1;
                        (c, v)
                    }
                    _ => {
                        let c = r2[q].0;
                        let v = b * &r2[q].1;
                        q += 1;
                        (c, v)
                    }
                };
                if !val.is_zero() {
                    row.push((col, val));
                }
            }
            data.push(row);
        }
        Ok(SparseMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn mul(&self, o: &Self) -> Result<Self, ArithError> {
        if self.cols != o.rows {
            return Err(ArithError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows);
        for r in &self.data {
            let mut acc: BTreeMap<usize, QuadScalar> = BTreeMap::new();
            for (k, a) in r {
                for (j, b) in &o.data[*k] {
                    *acc.entry(*j).or_default() += &(a * b);
                }
            }
            data.push(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect());
        }
        Ok(SparseMatrix { rows: self.rows, cols: o.cols, data })
    }

    pub fn commutator(&self, o: &Self) -> Result<Self, ArithError> {
        self.mul(o)?.sub(&o.mul(self)?)
    }

    /// Kronecker product `self ⊗ o`, with the index of `self` varying slowest.
    pub fn kron(&self, o: &Self) -> Self {
        let mut out = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for (i1, r1) in self.data.iter().enumerate() {
            for (i2, r2) in o.data.iter().enumerate() {
                let row = &mut out.data[i1 * o.rows + i2];
                for (j1, a) in r1 {
                    for (j2, b) in r2 {
                        row.push((j1 * o.cols + j2, a * b));
                    }
                }
            }
        }
        out
    }

    /// `self * columns` for a list of dense column vectors.
    pub fn apply_all(&self, vs: &[Vector]) -> Vec<Vector> {
        vs.iter().map(|v| self.mul_vec(v)).collect()
    }

    /// Dense `y = self^T x` without forming the transpose.
    pub fn mul_vec_transposed(&self, x: &[QuadScalar]) -> Vector {
        let mut y = zero_vector(self.cols);
        for (i, r) in self.data.iter().enumerate() {
            if x[i].is_zero() {
                continue;
            }
            for (j, a) in r {
                y[*j] += &(a * &x[i]);
            }
        }
        y
    }
}

/// Apply a product of operators `ops[0] * ops[1] * ... * ops[k-1]` to `v`,
/// acting with the rightmost factor first.
pub fn apply_word(ops: &[&SparseMatrix], v: &[QuadScalar]) -> Vector {
    let mut w = v.to_vec();
    for op in ops.iter().rev() {
        w = op.mul_vec(&w);
        if w.iter().all(QuadScalar::is_zero) {
            break;
        }
    }
    w
}

/// `sum c_k * M_k v` accumulated into a fresh vector.
pub fn apply_sum(terms: &[(QuadScalar, Vector)], dim: usize) -> Vector {
    let mut out = zero_vector(dim);
    for (c, v) in terms {
        axpy(&mut out, c, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> QuadScalar {
        QuadScalar::from_int(n)
    }

    #[test]
    fn sparse_matches_dense_product() {
        let a = SparseMatrix::from_triplets(2, 3, vec![(0, 0, q(1)), (0, 2, q(2)), (1, 1, q(-1))]);
        let b = SparseMatrix::from_triplets(3, 2, vec![(0, 1, q(3)), (2, 0, q(1)), (1, 1, q(4))]);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.to_dense(), a.to_dense().mul(&b.to_dense()).unwrap());
        assert_eq!(p.transpose().transpose(), p);
    }

    #[test]
    fn lincomb_drops_cancellations() {
        let a = SparseMatrix::from_triplets(2, 2, vec![(0, 0, q(1)), (1, 0, q(2))]);
        let d = a.sub(&a).unwrap();
        assert!(d.is_zero());
        assert_eq!(d.nnz(), 0);
    }

    #[test]
    fn kron_of_identities() {
        let k = SparseMatrix::identity(2).kron(&SparseMatrix::identity(3));
        assert_eq!(k, SparseMatrix::identity(6));
    }
}
