use num_traits::{One, Zero};

use super::elim::Eliminator;
use super::matrix::Matrix;
use super::{Scalar, SRow};
use crate::error::{Error, Result};

/// A linear subspace of `Q^ambient` in canonical form.
///
/// The basis is the unique reduced row echelon form of any spanning set, so
/// two subspaces are equal iff the structs compare equal.  Every subspace
/// identity claimed elsewhere in the crate reduces to this decidable
/// equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonicalizes a spanning set.
    pub fn from_rows(ambient: usize, rows: Vec<SRow>) -> Self {
        let mut e = Eliminator::new(ambient);
        for r in &rows {
            e.push_srow(r);
        }
        Subspace::from_eliminator(ambient, e)
    }

    pub fn from_matrix_rows(m: &Matrix) -> Self {
        Subspace::from_rows(m.cols(), m.row_iter().cloned().collect())
    }

    pub(crate) fn from_eliminator(ambient: usize, e: Eliminator) -> Self {
        let rows = e.into_rref();
        let pivots = rows.iter().map(|r| r[0].0).collect();
        Subspace {
            ambient,
            basis: Matrix::from_sparse_rows(ambient, rows),
            pivots,
        }
    }

    /// Solution space of `M x = 0`.
    pub fn kernel_of(m: &Matrix) -> Self {
        let mut e = Eliminator::new(m.cols());
        for r in m.row_iter() {
            e.push_srow(r);
        }
        Subspace::from_rows(m.cols(), e.kernel())
    }

    /// Column span of `M`.
    pub fn column_span(m: &Matrix) -> Self {
        Subspace::from_matrix_rows(&m.transpose())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical RREF basis, one row per basis vector.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_row(&self, i: usize) -> &SRow {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains_srow(&self, v: &SRow) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.row_iter().all(|r| self.contains_srow(r))
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` lies
    /// outside the subspace.  Unit pivots make this a read-off plus one
    /// verification pass.
    pub fn coords(&self, v: &SRow) -> Option<Vec<Scalar>> {
        let mut coords = Vec::with_capacity(self.dim());
        let dense = super::srow_to_dense(v, self.ambient);
        for &p in &self.pivots {
            coords.push(dense[p].clone());
        }
        // residual check
        let mut residual = dense;
        for (i, row) in self.basis.row_iter().enumerate() {
            if coords[i].is_zero() {
                continue;
            }
            for (c, val) in row {
                let x = residual[*c].clone() - &coords[i] * val;
                residual[*c] = x;
            }
        }
        if residual.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other, "subspace sum")?;
        let mut rows: Vec<SRow> = self.basis.row_iter().cloned().collect();
        rows.extend(other.basis.row_iter().cloned());
        Ok(Subspace::from_rows(self.ambient, rows))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other, "subspace intersection")?;
        let (ka, kb) = (self.dim(), other.dim());
        if ka == 0 || kb == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        // Solve a·A − b·B = 0 in the joint coefficients (a, b); the
        // intersection is the image of the a-part.
        let mut e = Eliminator::new(ka + kb);
        let mut eq_rows: Vec<SRow> = vec![Vec::new(); self.ambient];
        for (i, row) in self.basis.row_iter().enumerate() {
            for (c, v) in row {
                eq_rows[*c].push((i, v.clone()));
            }
        }
        for (j, row) in other.basis.row_iter().enumerate() {
            for (c, v) in row {
                eq_rows[*c].push((ka + j, -v.clone()));
            }
        }
        for r in &eq_rows {
            e.push_srow(r);
        }
        let rows = e
            .kernel()
            .into_iter()
            .map(|sol| {
                let mut acc: Vec<SRow> = Vec::new();
                for (idx, coef) in sol {
                    if idx < ka {
                        acc.push(
                            self.basis
                                .row(idx)
                                .iter()
                                .map(|(c, v)| (*c, v * &coef))
                                .collect(),
                        );
                    }
                }
                merge_rows(acc)
            })
            .collect();
        Ok(Subspace::from_rows(self.ambient, rows))
    }

    /// Image of this subspace under the linear map `m` (applied to each basis
    /// vector as a column vector).
    pub fn map_by(&self, m: &Matrix) -> Subspace {
        let image = self.basis.mul(&m.transpose());
        Subspace::from_matrix_rows(&image)
    }

    fn check_ambient(&self, other: &Subspace, context: &str) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                context: context.to_string(),
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in Q^{})", self.dim(), self.ambient)
    }
}

fn merge_rows(rows: Vec<SRow>) -> SRow {
    let mut acc: std::collections::BTreeMap<usize, Scalar> = std::collections::BTreeMap::new();
    for row in rows {
        for (c, v) in row {
            let slot = acc.entry(c).or_insert_with(Scalar::zero);
            *slot += v;
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Expresses vectors in a *given* (not necessarily canonical) spanning set,
/// e.g. Lie algebra elements in generator coordinates.
pub struct SpanSolver {
    ambient: usize,
    rref: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    transform: Vec<Vec<Scalar>>,
}

impl SpanSolver {
    pub fn new(ambient: usize, rows: &[SRow]) -> Self {
        let k = rows.len();
        let mut work: Vec<Vec<Scalar>> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut d = super::srow_to_dense(r, ambient);
                d.extend((0..k).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
                d
            })
            .collect();
        // RREF with pivots restricted to the first `ambient` columns.
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ambient {
            let Some(pr) = (r..k).find(|&i| !work[i][c].is_zero()) else {
                continue;
            };
            work.swap(r, pr);
            let inv = work[r][c].clone();
            for x in work[r].iter_mut() {
                *x /= &inv;
            }
            for i in 0..k {
                if i != r && !work[i][c].is_zero() {
                    let f = work[i][c].clone();
                    for j in 0..ambient + k {
                        let v = work[i][j].clone() - &f * &work[r][j];
                        work[i][j] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == k {
                break;
            }
        }
        let rref = work[..r].iter().map(|row| row[..ambient].to_vec()).collect();
        let transform = work[..r].iter().map(|row| row[ambient..].to_vec()).collect();
        SpanSolver {
            ambient,
            rref,
            pivots,
            transform,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates of `v` in the original spanning set, or `None` when `v`
    /// is outside the span.  When the spanning set is linearly dependent the
    /// coordinates returned are one valid choice.
    pub fn coords(&self, v: &SRow) -> Option<Vec<Scalar>> {
        let dense = super::srow_to_dense(v, self.ambient);
        let lam: Vec<Scalar> = self.pivots.iter().map(|&p| dense[p].clone()).collect();
        // verify membership
        let mut residual = dense;
        for (i, row) in self.rref.iter().enumerate() {
            if lam[i].is_zero() {
                continue;
            }
            for (c, val) in row.iter().enumerate() {
                if !val.is_zero() {
                    let x = residual[c].clone() - &lam[i] * val;
                    residual[c] = x;
                }
            }
        }
        if !residual.iter().all(|x| x.is_zero()) {
            return None;
        }
        let k = self.transform.first().map_or(0, |t| t.len());
        let mut coords = vec![Scalar::zero(); k];
        for (i, l) in lam.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            for (j, t) in self.transform[i].iter().enumerate() {
                if !t.is_zero() {
                    let v = coords[j].clone() + l * t;
                    coords[j] = v;
                }
            }
        }
        Some(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{sc, srow_from_dense};
    use super::*;

    fn row(v: &[i64]) -> SRow {
        srow_from_dense(&v.iter().map(|&x| sc(x)).collect::<Vec<_>>())
    }

    #[test]
    fn canonical_form_is_generating_set_independent() {
        let a = Subspace::from_rows(3, vec![row(&[1, 1, 0]), row(&[0, 2, 2])]);
        let b = Subspace::from_rows(3, vec![row(&[1, 3, 2]), row(&[2, 2, 0]), row(&[3, 5, 2])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_dimension_identity() {
        let a = Subspace::from_rows(4, vec![row(&[1, 0, 0, 0]), row(&[0, 1, 0, 0])]);
        let b = Subspace::from_rows(4, vec![row(&[0, 1, 0, 0]), row(&[0, 0, 1, 0])]);
        let cap = a.intersect(&b).unwrap();
        let sum = a.sum(&b).unwrap();
        assert_eq!(cap.dim(), 1);
        assert_eq!(sum.dim(), 3);
        assert_eq!(cap.dim() + sum.dim(), a.dim() + b.dim());
        assert!(a.intersect(&a).unwrap() == a);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(3);
        let b = Subspace::full(4);
        assert!(a.intersect(&b).is_err());
    }

    #[test]
    fn span_solver_roundtrip() {
        // dependent spanning set of a plane
        let rows = vec![row(&[1, 1, 0]), row(&[2, 2, 0]), row(&[0, 0, 1])];
        let solver = SpanSolver::new(3, &rows);
        assert_eq!(solver.rank(), 2);
        let c = solver.coords(&row(&[3, 3, 5])).unwrap();
        // reconstruct
        let mut acc = vec![Scalar::zero(); 3];
        for (i, r) in rows.iter().enumerate() {
            for (col, v) in r {
                let x = acc[*col].clone() + &c[i] * v;
                acc[*col] = x;
            }
        }
        assert_eq!(acc, super::super::srow_to_dense(&row(&[3, 3, 5]), 3));
        assert!(solver.coords(&row(&[1, 0, 0])).is_none());
    }
}
