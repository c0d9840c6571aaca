//! Index bookkeeping for wedge and symmetric powers, and the induced
//! (derivation) actions on constructed tensor spaces.
//!
//! Conventions used across the crate:
//! * `Λ^k` bases are strictly increasing index tuples in lexicographic
//!   order;
//! * `S^k` bases are weakly increasing tuples (plain monomials, no
//!   multinomial normalization), so all induced actions stay integer;
//! * a product space `U ⊗ V` is indexed row-major, `(u, v) -> u·dim V + v`.

use std::collections::HashMap;

use crate::linalg::{Matrix, Scalar};

/// Basis of `Λ^k(Q^n)`: strictly increasing `k`-tuples, lexicographic.
pub struct Wedge {
    pub n: usize,
    pub k: usize,
    tuples: Vec<Vec<u8>>,
    index: HashMap<u64, usize>,
}

fn tuple_mask(t: &[u8]) -> u64 {
    t.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

fn next_strictly_increasing(cur: &mut [u8], n: usize) -> bool {
    let k = cur.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if (cur[i] as usize) < n - k + i {
            cur[i] += 1;
            for j in i + 1..k {
                cur[j] = cur[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn next_weakly_increasing(cur: &mut [u8], n: usize) -> bool {
    let k = cur.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if (cur[i] as usize) < n - 1 {
            let v = cur[i] + 1;
            for item in cur.iter_mut().skip(i) {
                *item = v;
            }
            return true;
        }
    }
    false
}

impl Wedge {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= 63, "wedge index sets use 64-bit masks");
        let mut tuples = Vec::new();
        if k <= n {
            let mut cur: Vec<u8> = (0..k as u8).collect();
            loop {
                tuples.push(cur.clone());
                if !next_strictly_increasing(&mut cur, n) {
                    break;
                }
            }
        }
        let index = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (tuple_mask(t), i))
            .collect();
        Wedge {
            n,
            k,
            tuples,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.tuples.len()
    }

    pub fn tuple(&self, i: usize) -> &[u8] {
        &self.tuples[i]
    }

    pub fn index_of(&self, sorted: &[u8]) -> usize {
        self.index[&tuple_mask(sorted)]
    }

    /// Index and sign of `e^j ∧ e^T` in this wedge (`|T| + 1 = k`).
    /// `None` when `j` occurs in `T`.
    pub fn insert_front(&self, t: &[u8], j: u8) -> Option<(usize, i8)> {
        if t.contains(&j) {
            return None;
        }
        let pos = t.iter().filter(|&&x| x < j).count();
        let idx = self.index_of(&sorted_with(t, pos, j));
        Some((idx, if pos % 2 == 0 { 1 } else { -1 }))
    }

    /// Index and sign of `e^T ∧ e^j` in this wedge.
    pub fn insert_back(&self, t: &[u8], j: u8) -> Option<(usize, i8)> {
        if t.contains(&j) {
            return None;
        }
        let pos = t.iter().filter(|&&x| x < j).count();
        let idx = self.index_of(&sorted_with(t, pos, j));
        Some((idx, if (t.len() - pos) % 2 == 0 { 1 } else { -1 }))
    }
}

fn sorted_with(t: &[u8], pos: usize, j: u8) -> Vec<u8> {
    let mut s: Vec<u8> = Vec::with_capacity(t.len() + 1);
    s.extend_from_slice(&t[..pos]);
    s.push(j);
    s.extend_from_slice(&t[pos..]);
    s
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Basis of `S^k(Q^n)`: weakly increasing `k`-tuples, lexicographic.
pub struct Sym {
    pub n: usize,
    pub k: usize,
    tuples: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl Sym {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n > 0);
        let mut tuples = Vec::new();
        let mut cur = vec![0u8; k];
        loop {
            tuples.push(cur.clone());
            if !next_weakly_increasing(&mut cur, n) {
                break;
            }
        }
        let index = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        Sym { n, k, tuples, index }
    }

    pub fn dim(&self) -> usize {
        self.tuples.len()
    }

    pub fn tuple(&self, i: usize) -> &[u8] {
        &self.tuples[i]
    }

    pub fn index_of(&self, sorted: &[u8]) -> usize {
        self.index[sorted]
    }
}

/// `−Xᵀ`, the action induced on the dual space.
pub fn dual_action(x: &Matrix) -> Matrix {
    x.transpose().neg()
}

/// Derivation action on `Λ^k V` induced by `a` acting on `V`.
pub fn wedge_derivation(a: &Matrix, w: &Wedge) -> Matrix {
    let at = a.transpose(); // row c of `at` lists the column a[·][c]
    let mut triplets: Vec<(usize, usize, Scalar)> = Vec::new();
    for (col, t) in w.tuples.iter().enumerate() {
        for (slot, &tv) in t.iter().enumerate() {
            // a·e_tv = Σ_r a[r][tv] e_r, replacing position `slot`
            for (r, v) in at.row(tv as usize) {
                let rest: Vec<u8> = t
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != slot)
                    .map(|(_, &x)| x)
                    .collect();
                let rb = *r as u8;
                if rest.contains(&rb) {
                    continue;
                }
                let pos = rest.iter().filter(|&&x| x < rb).count();
                let row = w.index_of(&sorted_with(&rest, pos, rb));
                // parity of moving e_r from `slot` to its sorted position
                let sign_neg = (slot + pos) % 2 == 1;
                triplets.push((row, col, if sign_neg { -v.clone() } else { v.clone() }));
            }
        }
    }
    Matrix::from_triplets(w.dim(), w.dim(), triplets)
}

/// Derivation action on `S^k V` induced by `a` acting on `V`, in the
/// monomial basis.
pub fn sym_derivation(a: &Matrix, s: &Sym) -> Matrix {
    let at = a.transpose();
    let mut triplets: Vec<(usize, usize, Scalar)> = Vec::new();
    for col in 0..s.dim() {
        let t = s.tuple(col).to_vec();
        for slot in 0..t.len() {
            for (r, v) in at.row(t[slot] as usize) {
                let mut m = t.clone();
                m[slot] = *r as u8;
                m.sort_unstable();
                triplets.push((s.index_of(&m), col, v.clone()));
            }
        }
    }
    Matrix::from_triplets(s.dim(), s.dim(), triplets)
}

/// `A ⊗ I + I ⊗ B` on the product space.
pub fn tensor_action(a: &Matrix, b: &Matrix) -> Matrix {
    let ia = Matrix::identity(a.rows());
    let ib = Matrix::identity(b.rows());
    a.kron(&ib).add(&ia.kron(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{sc, Scalar};
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};

    #[test]
    fn wedge_enumeration() {
        let w = Wedge::new(5, 2);
        assert_eq!(w.dim(), 10);
        assert_eq!(w.tuple(0), &[0, 1]);
        assert_eq!(w.tuple(9), &[3, 4]);
        assert_eq!(w.index_of(&[1, 3]), 5);
        assert_eq!(Wedge::new(5, 3).dim(), 10);
        assert_eq!(Wedge::new(4, 0).dim(), 1);
        assert_eq!(Wedge::new(2, 3).dim(), 0);
    }

    #[test]
    fn wedge_insertion_signs() {
        let w3 = Wedge::new(5, 3);
        // e^2 ∧ e^{1,3} = −e^{1,2,3}
        let (idx, sign) = w3.insert_front(&[1, 3], 2).unwrap();
        assert_eq!(w3.tuple(idx), &[1, 2, 3]);
        assert_eq!(sign, -1);
        // e^{1,3} ∧ e^2 = −e^{1,2,3}
        let (idx2, sign2) = w3.insert_back(&[1, 3], 2).unwrap();
        assert_eq!(idx2, idx);
        assert_eq!(sign2, -1);
        // e^{1,2} ∧ e^3 = +e^{1,2,3}
        let (_, s3) = w3.insert_back(&[1, 2], 3).unwrap();
        assert_eq!(s3, 1);
        // e^0 ∧ e^{1,2} = +e^{0,1,2}
        let (_, s4) = w3.insert_front(&[1, 2], 0).unwrap();
        assert_eq!(s4, 1);
        assert!(w3.insert_front(&[1, 3], 3).is_none());
    }

    #[test]
    fn sym_enumeration() {
        let s = Sym::new(2, 3);
        assert_eq!(s.dim(), 4);
        assert_eq!(s.tuple(0), &[0, 0, 0]);
        assert_eq!(s.tuple(3), &[1, 1, 1]);
        assert_eq!(Sym::new(4, 2).dim(), 10);
    }

    /// wedge coordinates of u ∧ v, the brute-force oracle for Λ².
    fn pair_coords(w: &Wedge, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        (0..w.dim())
            .map(|idx| {
                let t = w.tuple(idx);
                let (i, j) = (t[0] as usize, t[1] as usize);
                &u[i] * &v[j] - &u[j] * &v[i]
            })
            .collect()
    }

    #[test]
    fn wedge_derivation_matches_leibniz_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let n = 4;
        let w = Wedge::new(n, 2);
        for _ in 0..10 {
            let a = Matrix::from_fn(n, n, |_, _| sc(rng.gen_range(-3..=3)));
            let la = wedge_derivation(&a, &w);
            let u: Vec<Scalar> = (0..n).map(|_| sc(rng.gen_range(-4..=4))).collect();
            let v: Vec<Scalar> = (0..n).map(|_| sc(rng.gen_range(-4..=4))).collect();
            let au = a.mul_vec(&u);
            let av = a.mul_vec(&v);
            let mut expect = pair_coords(&w, &au, &v);
            for (e, x) in expect.iter_mut().zip(pair_coords(&w, &u, &av)) {
                *e += x;
            }
            let got = la.mul_vec(&pair_coords(&w, &u, &v));
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn derivation_actions_respect_brackets() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let n = 4;
        let w = Wedge::new(n, 3);
        let s = Sym::new(n, 2);
        for _ in 0..5 {
            let a = Matrix::from_fn(n, n, |_, _| sc(rng.gen_range(-3..=3)));
            let b = Matrix::from_fn(n, n, |_, _| sc(rng.gen_range(-3..=3)));
            let c = a.commutator(&b);
            let la = wedge_derivation(&a, &w);
            let lb = wedge_derivation(&b, &w);
            assert_eq!(la.commutator(&lb), wedge_derivation(&c, &w));
            let sa = sym_derivation(&a, &s);
            let sb = sym_derivation(&b, &s);
            assert_eq!(sa.commutator(&sb), sym_derivation(&c, &s));
        }
    }

    #[test]
    fn dual_action_kills_pairing() {
        // ⟨X·ξ, v⟩ + ⟨ξ, X·v⟩ = 0
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let n = 3;
        let x = Matrix::from_fn(n, n, |_, _| sc(rng.gen_range(-3..=3)));
        let d = dual_action(&x);
        let xi: Vec<Scalar> = (0..n).map(|_| sc(rng.gen_range(-4..=4))).collect();
        let v: Vec<Scalar> = (0..n).map(|_| sc(rng.gen_range(-4..=4))).collect();
        let dxi = d.mul_vec(&xi);
        let xv = x.mul_vec(&v);
        let mut total = Scalar::zero();
        for i in 0..n {
            total += &dxi[i] * &v[i] + &xi[i] * &xv[i];
        }
        assert!(total.is_zero());
    }
}
