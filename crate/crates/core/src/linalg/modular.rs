//! Rank computations over the prime field `F_p`, `p = 2^61 − 1`.
//!
//! A nonzero minor mod `p` is nonzero over `Q`, so modular ranks are
//! certified *lower* bounds; they are used to scan candidate flags quickly
//! in the Cartan-character search.  Exactness of reported characters is
//! then recovered either by an exact recomputation (small tableaux) or by
//! the involutivity identity `dim A⁽¹⁾ = Σ k·s_k`, which can only be
//! attained by the true generic characters.


use super::{Int, SRow};

pub const P: u64 = (1 << 61) - 1;

#[inline]
fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    acc
}

#[inline]
fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn int_mod(x: &Int) -> u64 {
    use num_integer::Integer;
    let (_, r) = x.div_mod_floor(&Int::from(P));
    let digits = r.to_u64_digits().1;
    digits.first().copied().unwrap_or(0)
}

/// Reduces a rational sparse row mod `p`; `None` when a denominator
/// vanishes mod `p` (callers then fall back to exact arithmetic).
pub fn srow_mod(row: &SRow) -> Option<Vec<(usize, u64)>> {
    let mut out = Vec::with_capacity(row.len());
    for (c, v) in row {
        let d = int_mod(v.denom());
        if d == 0 {
            return None;
        }
        let n = int_mod(v.numer());
        let x = mul(n, inv(d));
        if x != 0 {
            out.push((*c, x));
        }
    }
    Some(out)
}

pub type ModRow = Vec<(usize, u64)>;

/// Streaming echelon over `F_p` with unit pivots.
pub struct ModEliminator {
    cols: usize,
    rows: Vec<ModRow>,
    pivot_row: Vec<Option<u32>>,
}

impl ModEliminator {
    pub fn new(cols: usize) -> Self {
        ModEliminator {
            cols,
            rows: Vec::new(),
            pivot_row: vec![None; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut row: ModRow) -> ModRow {
        loop {
            let Some(&(lead, v)) = row.first() else {
                return row;
            };
            let Some(r) = self.pivot_row[lead] else {
                return row;
            };
            let src = &self.rows[r as usize];
            // row := row − v·src (src has unit pivot)
            let mut out = Vec::with_capacity(row.len() + src.len());
            let (mut i, mut j) = (0usize, 0usize);
            while i < row.len() && j < src.len() {
                match row[i].0.cmp(&src[j].0) {
                    std::cmp::Ordering::Less => {
                        out.push(row[i]);
                        i += 1;
                    }
                    std::cmp::Ordering::Greater => {
                        out.push((src[j].0, P - mul(v, src[j].1)));
                        j += 1;
                    }
                    std::cmp::Ordering::Equal => {
                        let x = (row[i].1 + P - mul(v, src[j].1)) % P;
                        if x != 0 {
                            out.push((row[i].0, x));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
            out.extend_from_slice(&row[i..]);
            for &(c, w) in &src[j..] {
                out.push((c, P - mul(v, w)));
            }
            row = out;
        }
    }

    pub fn push(&mut self, row: ModRow) -> bool {
        let mut row = self.reduce(row);
        let Some(&(lead, v)) = row.first() else {
            return false;
        };
        let vi = inv(v);
        for (_, x) in row.iter_mut() {
            *x = mul(*x, vi);
        }
        self.pivot_row[lead] = Some(self.rows.len() as u32);
        self.rows.push(row);
        true
    }

    pub fn push_srow(&mut self, row: &SRow) -> Option<bool> {
        srow_mod(row).map(|r| self.push(r))
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

#[cfg(test)]
mod tests {
    use super::super::{sc, srow_from_dense, Scalar};
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn modular_rank_matches_exact_on_random_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..30 {
            let rows = rng.gen_range(1..12);
            let cols = rng.gen_range(1..12);
            let dense: Vec<Vec<Scalar>> = (0..rows)
                .map(|_| (0..cols).map(|_| sc(rng.gen_range(-9..=9))).collect())
                .collect();
            let mut m = ModEliminator::new(cols);
            for r in &dense {
                m.push_srow(&srow_from_dense(r)).unwrap();
            }
            assert_eq!(
                m.rank(),
                super::super::elim::dense_oracle::rank(dense.clone())
            );
        }
    }

    #[test]
    fn field_inverse() {
        for a in [1u64, 2, 12345, P - 1] {
            assert_eq!(mul(a, inv(a)), 1);
        }
    }

    #[test]
    fn negative_values_reduce_correctly() {
        let row = srow_from_dense(&[sc(-3), sc(5)]);
        let m = srow_mod(&row).unwrap();
        assert_eq!(m[0].1, P - 3);
        assert_eq!(m[1].1, 5);
    }
}
