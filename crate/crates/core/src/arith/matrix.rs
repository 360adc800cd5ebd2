use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ArithError, QuadScalar};

pub type Vector = Vec<QuadScalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![QuadScalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = QuadScalar::one();
    v
}

pub fn is_zero_vector(v: &[QuadScalar]) -> bool {
    v.iter().all(QuadScalar::is_zero)
}

/// `y += c * x`.
pub fn axpy(y: &mut [QuadScalar], c: &QuadScalar, x: &[QuadScalar]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(c * xi);
        }
    }
}

pub fn scale_vector(v: &[QuadScalar], c: &QuadScalar) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Dense matrix over Q(√2), row-major.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<QuadScalar>,
}

/// Reduced row echelon form with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![QuadScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, QuadScalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<QuadScalar>>) -> Result<Self, ArithError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ArithError::DimensionMismatch(format!("ragged rows in {}-row matrix", r)));
        }
        Ok(ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vector]) -> Result<Self, ArithError> {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(ArithError::DimensionMismatch(format!(
                    "column {} has length {}, expected {}",
                    j,
                    c.len(),
                    rows
                )));
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: QuadScalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[QuadScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<QuadScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(QuadScalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &QuadScalar) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| c * x).collect() }
    }

    fn same_shape(&self, o: &Self) -> Result<(), ArithError> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(ArithError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, ArithError> {
        self.same_shape(o)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, ArithError> {
        self.same_shape(o)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn mul(&self, o: &Self) -> Result<Self, ArithError> {
        if self.cols != o.rows {
            return Err(ArithError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let cur = &out.data[i * o.cols + j] + &(a * b);
                        out.data[i * o.cols + j] = cur;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[QuadScalar]) -> Result<Vector, ArithError> {
        if v.len() != self.cols {
            return Err(ArithError::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = QuadScalar::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn commutator(&self, o: &Self) -> Result<Self, ArithError> {
        self.mul(o)?.sub(&o.mul(self)?)
    }

    pub fn trace(&self) -> QuadScalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let rj = m.get(r, j);
                    if rj.is_zero() {
                        continue;
                    }
                    let x = m.get(i, j) - &(&f * rj);
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Rank together with a kernel basis read off the reduced row echelon form.
    /// Kernel vectors are ordered by free column and have a 1 in their free column,
    /// so the basis is deterministic.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vector>) {
        let Rref { matrix, pivots } = self.rref();
        let mut kernel = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = zero_vector(self.cols);
            v[f] = QuadScalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -matrix.get(r, f);
            }
            kernel.push(v);
        }
        (pivots.len(), kernel)
    }

    pub fn kernel(&self) -> Vec<Vector> {
        self.rank_and_kernel().1
    }

    /// Some solution of `self * x = b`.
    pub fn solve(&self, b: &[QuadScalar]) -> Result<Vector, ArithError> {
        if b.len() != self.rows {
            return Err(ArithError::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(ArithError::Inconsistent);
        }
        let mut x = zero_vector(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(r, self.cols).clone();
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Self, ArithError> {
        if !self.is_square() {
            return Err(ArithError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, QuadScalar::one());
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(ArithError::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, matrix.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Coefficients `[c0, c1, ..., 1]` of the monic polynomial `det(x·I - self)`,
    /// via reduction to upper Hessenberg form.
    pub fn characteristic_polynomial(&self) -> Result<Vec<QuadScalar>, ArithError> {
        if !self.is_square() {
            return Err(ArithError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let piv = h.get(m, m - 1).inv().expect("nonzero pivot");
            for j in m + 1..n {
                let u = h.get(j, m - 1) * &piv;
                if u.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let x = h.get(j, c) - &(&u * h.get(m, c));
                    h.set(j, c, x);
                }
                for r in 0..n {
                    let x = h.get(r, m) + &(&u * h.get(r, j));
                    h.set(r, m, x);
                }
            }
        }
        // p[k] is the characteristic polynomial of the leading k x k block.
        let mut p: Vec<Vec<QuadScalar>> = vec![vec![QuadScalar::one()]];
        for m in 1..=n {
            let mut next = vec![QuadScalar::zero(); m + 1];
            let prev = &p[m - 1];
            for (d, c) in prev.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= &(h.get(m - 1, m - 1) * c);
            }
            let mut t = QuadScalar::one();
            for i in (1..m).rev() {
                t = &t * h.get(i, i - 1);
                if t.is_zero() {
                    break;
                }
                let coef = &t * h.get(i - 1, m - 1);
                for (d, c) in p[i - 1].iter().enumerate() {
                    next[d] -= &(&coef * c);
                }
            }
            p.push(next);
        }
        Ok(p.pop().expect("nonempty"))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incrementally built basis of a subspace, kept in semi-echelon form so that
/// membership tests and coordinate extraction are cheap.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    dim: usize,
    /// Reduced vectors, each with a unit entry at its pivot.
    reduced: Vec<(usize, Vector)>,
    /// `transform[i]` expresses `reduced[i]` in terms of the inserted vectors.
    transform: Vec<Vector>,
    inserted: Vec<Vector>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis { dim, ..Default::default() }
    }

    pub fn from_vectors(dim: usize, vs: &[Vector]) -> Self {
        let mut b = Self::new(dim);
        for v in vs {
            b.insert(v);
        }
        b
    }

    pub fn len(&self) -> usize {
        self.inserted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inserted.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.inserted
    }

    /// Residual of `v` after elimination and the coefficients (over the reduced vectors) removed.
    fn eliminate(&self, v: &[QuadScalar]) -> (Vector, Vec<QuadScalar>) {
        let mut r = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.reduced.len());
        for (p, w) in &self.reduced {
            let c = r[*p].clone();
            if !c.is_zero() {
                axpy(&mut r, &-&c, w);
            }
            coeffs.push(c);
        }
        (r, coeffs)
    }

    pub fn contains(&self, v: &[QuadScalar]) -> bool {
        is_zero_vector(&self.eliminate(v).0)
    }

    /// Adds `v` if it is independent of the current vectors; returns whether it was added.
    pub fn insert(&mut self, v: &[QuadScalar]) -> bool {
        let (r, coeffs) = self.eliminate(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        let w = scale_vector(&r, &inv);
        let k = self.inserted.len();
        // r = v - sum coeffs[i] * reduced[i]
        let mut t = zero_vector(k + 1);
        t[k] = QuadScalar::one();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (tj, x) in t.iter_mut().zip(&self.transform[i]) {
                if !x.is_zero() {
                    *tj -= &(c * x);
                }
            }
        }
        for x in t.iter_mut() {
            *x = &*x * &inv;
        }
        for tr in self.transform.iter_mut() {
            tr.push(QuadScalar::zero());
        }
        self.reduced.push((p, w));
        self.transform.push(t);
        self.inserted.push(v.to_vec());
        true
    }

    /// Coordinates of `v` with respect to the inserted vectors, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[QuadScalar]) -> Option<Vector> {
        let (r, coeffs) = self.eliminate(v);
        if !is_zero_vector(&r) {
            return None;
        }
        let mut out = zero_vector(self.inserted.len());
        for (c, t) in coeffs.iter().zip(&self.transform) {
            axpy(&mut out, c, t);
        }
        Some(out)
    }
}

/// Linear combination `sum c_i v_i` of equally long vectors.
pub fn combine(dim: usize, coeffs: &[QuadScalar], vs: &[Vector]) -> Vector {
    let mut out = zero_vector(dim);
    for (c, v) in coeffs.iter().zip(vs) {
        axpy(&mut out, c, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn q(n: i64) -> QuadScalar {
        QuadScalar::from_int(n)
    }

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn rank_and_kernel_of_singular_matrix() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (rank, ker) = a.rank_and_kernel();
        assert_eq!(rank, 2);
        assert_eq!(ker.len(), 1);
        assert!(is_zero_vector(&a.mul_vec(&ker[0]).unwrap()));
        assert_eq!(ker[0], vec![q(-1), q(-1), q(1)]);
    }

    #[test]
    fn charpoly_of_companion_matrix() {
        // companion of x^3 - 6x^2 + 11x - 6
        let c = m(&[&[0, 0, 6], &[1, 0, -11], &[0, 1, 6]]);
        assert_eq!(c.characteristic_polynomial().unwrap(), vec![q(-6), q(11), q(-6), q(1)]);
    }

    #[test]
    fn charpoly_with_sqrt2_entries() {
        // [[0, √2], [√2, 0]] has x^2 - 2
        let s = QuadScalar::sqrt2();
        let a = ExactMatrix::from_rows(vec![vec![q(0), s.clone()], vec![s, q(0)]]).unwrap();
        assert_eq!(a.characteristic_polynomial().unwrap(), vec![q(-2), q(0), q(1)]);
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let x = a.solve(&[q(3), q(2)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), ExactMatrix::identity(2));
        assert_eq!(m(&[&[1, 1], &[1, 1]]).solve(&[q(1), q(2)]), Err(ArithError::Inconsistent));
        assert_eq!(m(&[&[1, 1], &[1, 1]]).inverse(), Err(ArithError::Singular));
    }

    #[test]
    fn echelon_coordinates() {
        let vs = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]];
        let b = EchelonBasis::from_vectors(3, &vs);
        let target = vec![q(2), q(5), q(3)];
        let c = b.coordinates(&target).unwrap();
        assert_eq!(c, vec![q(2), q(3)]);
        assert!(b.coordinates(&[q(1), q(0), q(0)]).is_none());
        let half = QuadScalar::from(Rational::half());
        assert_eq!(combine(3, &[half.clone(), half], &vs), vec![QuadScalar::from(Rational::half()), q(1), QuadScalar::from(Rational::half())]);
    }
}
