use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{Scalar, SRow};

/// Exact rational matrix with sparse row storage.
///
/// Rows hold `(column, value)` pairs sorted by column with no explicit
/// zeros, which keeps the huge Spencer differentials (thousands of rows,
/// a handful of entries each) cheap while behaving exactly like a dense
/// matrix through `entry`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SRow>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i].push((i, Scalar::one()));
        }
        m
    }

    pub fn from_dense(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let data = rows
            .iter()
            .map(|row| {
                assert_eq!(row.len(), c, "ragged dense matrix");
                super::srow_from_dense(row)
            })
            .collect();
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_dense_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_dense(
            rows.iter()
                .map(|r| r.iter().map(|&x| super::sc(x)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                if !v.is_zero() {
                    m.data[i].push((j, v));
                }
            }
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triplets, accumulating
    /// duplicates.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet out of bounds");
            let slot = acc[r].entry(c).or_insert_with(Scalar::zero);
            *slot += v;
        }
        let data = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Matrix { rows, cols, data }
    }

    pub fn from_sparse_rows(cols: usize, rows: Vec<SRow>) -> Self {
        for row in &rows {
            debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
            debug_assert!(row.last().map_or(true, |(c, _)| *c < cols));
        }
        Matrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SRow {
        &self.data[i]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &SRow> {
        self.data.iter()
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols);
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => {
                if v.is_zero() {
                    self.data[i].remove(k);
                } else {
                    self.data[i][k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    self.data[i].insert(k, (j, v));
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data: Vec<SRow> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    let slot = acc.entry(*j).or_insert_with(Scalar::zero);
                    *slot += a * b;
                }
            }
            data.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        self.data
            .iter()
            .map(|row| {
                let mut s = Scalar::zero();
                for (c, a) in row {
                    if !v[*c].is_zero() {
                        s += a * &v[*c];
                    }
                }
                s
            })
            .collect()
    }

    /// Sparse row-vector times matrix: `v · M`.
    pub fn srow_mul(&self, v: &SRow) -> SRow {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, a) in v {
            for (j, b) in &self.data[*i] {
                let slot = acc.entry(*j).or_insert_with(Scalar::zero);
                *slot += a * b;
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.combine(other, Scalar::one())
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.combine(other, -Scalar::one())
    }

    fn combine(&self, other: &Matrix, factor: Scalar) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (c, v) in a {
                    acc.insert(*c, v.clone());
                }
                for (c, v) in b {
                    let slot = acc.entry(*c).or_insert_with(Scalar::zero);
                    *slot += v * &factor;
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        if s.is_zero() {
            return Matrix::zero(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v * s)).collect())
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `A·B − B·A`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.entry(i, i);
        }
        t
    }

    /// Kronecker product, row-major index convention
    /// `(i, k) -> i * other.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for a_row in &self.data {
            for b_row in &other.data {
                let mut row: SRow = Vec::with_capacity(a_row.len() * b_row.len());
                for (aj, av) in a_row {
                    for (bj, bv) in b_row {
                        row.push((aj * other.cols + bj, av * bv));
                    }
                }
                row.sort_by_key(|(c, _)| *c);
                data.push(row);
            }
        }
        Matrix {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            data,
        }
    }

    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        let mut data = Vec::new();
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack width mismatch");
            data.extend(b.data.iter().cloned());
        }
        Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    /// Flattens an `n × n` matrix to a length-`n²` coordinate row (row-major),
    /// the embedding of `gl(n)` used for span computations.
    pub fn vectorize(&self) -> SRow {
        let mut out = Vec::with_capacity(self.nnz());
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out.push((i * self.cols + j, v.clone()));
            }
        }
        out
    }

    pub fn from_vectorized(rows: usize, cols: usize, v: &SRow) -> Matrix {
        Matrix::from_triplets(rows, cols, v.iter().map(|(c, x)| (c / cols, c % cols, x.clone())))
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.data
            .iter()
            .map(|row| super::srow_to_dense(row, self.cols))
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{frac, sc};
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_dense_i64(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_dense_i64(&[&[0, 1], &[1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, Matrix::from_dense_i64(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose().entry(0, 1), sc(3));
    }

    #[test]
    fn triplets_accumulate_and_drop_zeros() {
        let m = Matrix::from_triplets(
            2,
            2,
            vec![(0, 0, sc(1)), (0, 0, sc(-1)), (1, 1, frac(1, 2)), (1, 1, frac(1, 2))],
        );
        assert!(m.entry(0, 0).is_zero());
        assert_eq!(m.entry(1, 1), sc(1));
        assert_eq!(m.nnz(), 1);
    }

    #[test]
    fn kron_convention() {
        let a = Matrix::from_dense_i64(&[&[0, 1], &[1, 0]]);
        let id = Matrix::identity(3);
        let k = a.kron(&id);
        assert_eq!(k.rows(), 6);
        assert_eq!(k.entry(0, 3), sc(1));
        assert_eq!(k.entry(4, 1), sc(1));
    }

    #[test]
    fn commutator_of_commuting_is_zero() {
        let a = Matrix::from_dense_i64(&[&[1, 0], &[0, 2]]);
        let b = Matrix::from_dense_i64(&[&[3, 0], &[0, 5]]);
        assert!(a.commutator(&b).is_zero());
    }
}
