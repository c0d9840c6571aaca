//! Fraction-free sparse elimination over the integers.
//!
//! The Spencer differentials reach thousands of rows and columns, so the
//! workhorse here is a streaming row-echelon builder on primitive integer
//! rows: incoming rows are reduced against the current pivots with exact
//! cross-multiplication and content stripping, which keeps entries small on
//! the nearly-unimodular matrices this crate produces.  A plain dense
//! rational elimination lives in [`dense_oracle`] as an independent
//! cross-check.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Int, IRow, Scalar, SRow};

/// Streaming echelon builder.  Insertion order is arbitrary; the row space
/// of everything pushed so far is spanned by the stored pivot rows.
pub struct Eliminator {
    cols: usize,
    rows: Vec<IRow>,
    /// Maps a column to the index of the row whose leading entry sits there.
    pivot_row: Vec<Option<u32>>,
}

fn strip_content(row: &mut IRow) {
    if row.is_empty() {
        return;
    }
    let mut g = Int::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// `a·x + b·y` for sorted sparse rows.
fn combine(a: &Int, x: &IRow, b: &Int, y: &IRow) -> IRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => {
                out.push((x[i].0, a * &x[i].1));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((y[j].0, b * &y[j].1));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = a * &x[i].1 + b * &y[j].1;
                if !v.is_zero() {
                    out.push((x[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for (c, v) in &x[i..] {
        out.push((*c, a * v));
    }
    for (c, v) in &y[j..] {
        out.push((*c, b * v));
    }
    out
}

impl Eliminator {
    pub fn new(cols: usize) -> Self {
        Eliminator {
            cols,
            rows: Vec::new(),
            pivot_row: vec![None; cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Fully reduces `row` against the current pivots without inserting it.
    /// The result is zero iff `row` lies in the row space accumulated so far
    /// (the overall scale of a nonzero remainder is not meaningful).
    pub fn reduce(&self, mut row: IRow) -> IRow {
        loop {
            let Some(&(lead, _)) = row.first() else {
                return row;
            };
            let Some(r) = self.pivot_row[lead] else {
                return row;
            };
            let src = &self.rows[r as usize];
            let b = -row[0].1.clone();
            row = combine(&src[0].1, &row, &b, src);
            strip_content(&mut row);
        }
    }

    /// Pushes a row, returning `true` if the rank grew.
    pub fn push(&mut self, row: IRow) -> bool {
        let mut row = self.reduce(row);
        if row.is_empty() {
            return false;
        }
        strip_content(&mut row);
        let lead = row[0].0;
        self.pivot_row[lead] = Some(self.rows.len() as u32);
        self.rows.push(row);
        true
    }

    pub fn push_srow(&mut self, row: &SRow) -> bool {
        self.push(super::srow_to_primitive(row))
    }

    pub fn contains_srow(&self, row: &SRow) -> bool {
        self.reduce(super::srow_to_primitive(row)).is_empty()
    }

    /// Pivot columns in increasing order.
    pub fn pivot_cols(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        p.sort_unstable();
        p
    }

    fn order_by_pivot(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_unstable_by_key(|&i| self.rows[i][0].0);
        idx
    }

    /// Back-eliminates so that every pivot column has a single nonzero entry,
    /// returning primitive integer rows sorted by pivot.  Dividing each row
    /// by its leading entry gives the unique rational RREF of the row space.
    pub fn into_rref_rows(mut self) -> Vec<IRow> {
        let order = self.order_by_pivot();
        for k in (0..order.len()).rev() {
            let src_idx = order[k];
            let pcol = self.rows[src_idx][0].0;
            let src = std::mem::take(&mut self.rows[src_idx]);
            for &t in &order[..k] {
                let target = &self.rows[t];
                if let Ok(pos) = target.binary_search_by_key(&pcol, |(c, _)| *c) {
                    let b = -target[pos].1.clone();
                    let mut new_row = combine(&src[0].1, target, &b, &src);
                    strip_content(&mut new_row);
                    self.rows[t] = new_row;
                }
            }
            self.rows[src_idx] = src;
        }
        order.into_iter().map(|i| std::mem::take(&mut self.rows[i])).collect()
    }

    /// Canonical rational RREF rows (unit pivots) of the accumulated row
    /// space.
    pub fn into_rref(self) -> Vec<SRow> {
        self.into_rref_rows()
            .into_iter()
            .map(|row| {
                let lead = Scalar::from_integer(row[0].1.clone());
                row.into_iter()
                    .map(|(c, v)| (c, Scalar::from_integer(v) / &lead))
                    .collect()
            })
            .collect()
    }

    /// Basis of the solution space of `Mx = 0` where the pushed rows are the
    /// rows of `M`.  One basis vector per free column; not canonicalized.
    pub fn kernel(self) -> Vec<SRow> {
        let cols = self.cols;
        let pivots = self.pivot_cols();
        let is_pivot = {
            let mut v = vec![false; cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..cols).filter(|c| !is_pivot[*c]).collect();
        if free.is_empty() {
            return Vec::new();
        }
        // With many free columns it is cheaper to fully reduce once and read
        // the kernel vectors off; with few, back-substitute per column.
        if free.len() > 8 {
            let rref = self.into_rref_rows();
            free.iter()
                .map(|&f| {
                    let mut vec: SRow = Vec::new();
                    for row in &rref {
                        if let Ok(pos) = row.binary_search_by_key(&f, |(c, _)| *c) {
                            let lead = Scalar::from_integer(row[0].1.clone());
                            vec.push((row[0].0, -Scalar::from_integer(row[pos].1.clone()) / lead));
                        }
                    }
                    vec.push((f, Scalar::one()));
                    vec.sort_by_key(|(c, _)| *c);
                    vec
                })
                .collect()
        } else {
            let order = self.order_by_pivot();
            free.iter()
                .map(|&f| {
                    let mut x = vec![Scalar::zero(); cols];
                    x[f] = Scalar::one();
                    for &i in order.iter().rev() {
                        let row = &self.rows[i];
                        let p = row[0].0;
                        let mut s = Scalar::zero();
                        for (c, v) in &row[1..] {
                            if !x[*c].is_zero() {
                                s += Scalar::from_integer(v.clone()) * &x[*c];
                            }
                        }
                        if !s.is_zero() {
                            x[p] = -s / Scalar::from_integer(row[0].1.clone());
                        }
                    }
                    super::srow_from_dense(&x)
                })
                .collect()
        }
    }
}

pub fn rank_of_srows<'a>(cols: usize, rows: impl IntoIterator<Item = &'a SRow>) -> usize {
    let mut e = Eliminator::new(cols);
    for r in rows {
        e.push_srow(r);
    }
    e.rank()
}

/// Textbook dense Gaussian elimination over the rationals.  Kept deliberately
/// independent of [`Eliminator`] so the two can cross-check each other.
pub mod dense_oracle {
    use super::{Scalar, Zero};

    /// Reduces in place to RREF; returns the pivot columns.
    pub fn rref(m: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
        if m.is_empty() {
            return Vec::new();
        }
        let rows = m.len();
        let cols = m[0].len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, pr);
            let inv = m[r][c].clone();
            for j in c..cols {
                let v = m[r][j].clone() / &inv;
                m[r][j] = v;
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..cols {
                        let v = m[i][j].clone() - &f * &m[r][j];
                        m[i][j] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(mut m: Vec<Vec<Scalar>>) -> usize {
        rref(&mut m).len()
    }

    pub fn kernel(mut m: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
        let pivots = rref(&mut m);
        let mut is_pivot = vec![false; cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..cols).filter(|c| !is_pivot[*c]) {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::from_integer(1.into());
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m[i][f].clone();
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::super::{sc, srow_from_dense};
    use super::*;

    fn srow(v: &[i64]) -> SRow {
        srow_from_dense(&v.iter().map(|&x| sc(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_and_kernel_small() {
        let mut e = Eliminator::new(3);
        e.push_srow(&srow(&[1, 2, 3]));
        e.push_srow(&srow(&[2, 4, 6]));
        e.push_srow(&srow(&[0, 1, 1]));
        assert_eq!(e.rank(), 2);
        let ker = e.kernel();
        assert_eq!(ker.len(), 1);
        // kernel of [[1,2,3],[0,1,1]] is spanned by (-1,-1,1)
        let v = super::super::srow_to_dense(&ker[0], 3);
        assert_eq!(v[0].clone() * sc(-1), v[2]);
        assert_eq!(v[1].clone() * sc(-1), v[2]);
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = Eliminator::new(3);
        a.push_srow(&srow(&[2, 2, 0]));
        a.push_srow(&srow(&[0, 3, 3]));
        let mut b = Eliminator::new(3);
        b.push_srow(&srow(&[2, 5, 3]));
        b.push_srow(&srow(&[4, 4, 0]));
        // same row space generated differently
        assert_eq!(a.into_rref(), b.into_rref());
    }

    #[test]
    fn agrees_with_dense_oracle_on_random_input() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let rows = rng.gen_range(1..10);
            let cols = rng.gen_range(1..10);
            let dense: Vec<Vec<Scalar>> = (0..rows)
                .map(|_| (0..cols).map(|_| sc(rng.gen_range(-5..=5))).collect())
                .collect();
            let mut e = Eliminator::new(cols);
            for r in &dense {
                e.push_srow(&srow_from_dense(r));
            }
            assert_eq!(e.rank(), dense_oracle::rank(dense.clone()));
            let nullity = e.kernel().len();
            assert_eq!(nullity, cols - dense_oracle::rank(dense));
        }
    }
}
