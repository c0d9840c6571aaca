//! Gamma matrices and spinor representations.
//!
//! `gammas(r, s)` produces anticommuting integer matrices, `r` of square
//! `+1` followed by `s` of square `−1`, on a module kept minimal for every
//! signature the catalog needs (octonion multiplication supplies the
//! irreducible modules that plain tensor recursion would overshoot).
//!
//! `spin_rep(p, q)` realizes `spin(p,q)` on its (half-)spinor module by the
//! standard even-subalgebra reduction: picking a unit vector `e` turns
//! products `e_i·e` into a gamma system one dimension down, and the algebra
//! spanned by those gammas and their pairwise products is `spin(p,q)`, of
//! dimension `(p+q)(p+q−1)/2`.

use super::{octonion, Representation};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

pub struct GammaSet {
    pub dim: usize,
    /// square `+1` first, then square `−1`
    pub gammas: Vec<Matrix>,
    pub pos: usize,
    pub neg: usize,
}

fn sigma1() -> Matrix {
    Matrix::from_dense_i64(&[&[0, 1], &[1, 0]])
}

fn sigma3() -> Matrix {
    Matrix::from_dense_i64(&[&[1, 0], &[0, -1]])
}

fn eps() -> Matrix {
    Matrix::from_dense_i64(&[&[0, -1], &[1, 0]])
}

/// Anticommuting integer matrices of signature `(r, s)`.
pub fn gammas(r: usize, s: usize) -> Result<GammaSet> {
    if r > 16 || s > 16 {
        return Err(Error::UnsupportedSignature(format!(
            "gamma system ({r},{s}) exceeds the supported range"
        )));
    }
    // base cases on minimal modules
    if r == 0 && s == 0 {
        return Ok(GammaSet { dim: 1, gammas: vec![], pos: 0, neg: 0 });
    }
    if (r, s) == (1, 0) {
        return Ok(GammaSet {
            dim: 1,
            gammas: vec![Matrix::identity(1)],
            pos: 1,
            neg: 0,
        });
    }
    if (r, s) == (0, 1) {
        return Ok(GammaSet { dim: 2, gammas: vec![eps()], pos: 0, neg: 1 });
    }
    if (r, s) == (2, 0) {
        return Ok(GammaSet {
            dim: 2,
            gammas: vec![sigma1(), sigma3()],
            pos: 2,
            neg: 0,
        });
    }
    if r == 0 && (2..=4).contains(&s) {
        // quaternionic: two anticommuting complex structures on Q^4
        let j1 = eps().kron(&sigma3());
        let j2 = eps().kron(&sigma1());
        if s == 2 {
            return Ok(GammaSet { dim: 4, gammas: vec![j1, j2], pos: 0, neg: 2 });
        }
        // extend through the (s−2, 0) ⊗ H recursion
        let g = gammas(s - 2, 0)?;
        let prod = j1.mul(&j2);
        let id = Matrix::identity(g.dim);
        let mut out: Vec<Matrix> = g.gammas.iter().map(|x| x.kron(&prod)).collect();
        out.push(id.kron(&j1));
        out.push(id.kron(&j2));
        return Ok(GammaSet { dim: g.dim * 4, gammas: out, pos: 0, neg: s });
    }
    if r == 0 && (5..=7).contains(&s) {
        // octonion left multiplications give the minimal module Q^8
        let out: Vec<Matrix> = (1..=s).map(octonion::left_mult).collect();
        return Ok(GammaSet { dim: 8, gammas: out, pos: 0, neg: s });
    }
    if (r, s) == (0, 8) {
        // 2×2 octonion blocks on Q^16: γ(a) = [[0, −R_ā], [R_a, 0]]
        let mut out = Vec::new();
        for a in 0..8 {
            let ra = octonion::right_mult(a);
            let rca = octonion::right_mult_conj(a);
            let mut g = Matrix::zero(16, 16);
            for (c, v) in ra.vectorize() {
                g.set(8 + c / 8, c % 8, v);
            }
            for (c, v) in rca.vectorize() {
                g.set(c / 8, 8 + c % 8, -v);
            }
            out.push(g);
        }
        return Ok(GammaSet { dim: 16, gammas: out, pos: 0, neg: 8 });
    }
    if r >= 1 && s >= 1 {
        // (r,s) = (r−1,s−1) ⊗ Cl(1,1)
        let g = gammas(r - 1, s - 1)?;
        let id = Matrix::identity(g.dim);
        let mut out = Vec::with_capacity(g.gammas.len() + 2);
        for (i, x) in g.gammas.iter().enumerate() {
            let lifted = x.kron(&sigma3());
            if i == g.pos {
                // keep positives contiguous: insert the new positive first
                out.push(id.kron(&sigma1()));
            }
            out.push(lifted);
        }
        if g.pos == g.gammas.len() {
            out.push(id.kron(&sigma1()));
        }
        out.push(id.kron(&eps()));
        return Ok(GammaSet {
            dim: g.dim * 2,
            gammas: out,
            pos: g.pos + 1,
            neg: g.neg + 1,
        });
    }
    if s == 0 && r >= 2 {
        // (r,0) = (0,r−2) ⊗ Cl(2,0)
        let g = gammas(0, r - 2)?;
        let d1 = sigma1();
        let d2 = sigma3();
        let prod = d1.mul(&d2);
        let id = Matrix::identity(g.dim);
        let mut out: Vec<Matrix> = g.gammas.iter().map(|x| x.kron(&prod)).collect();
        out.push(id.kron(&d1));
        out.push(id.kron(&d2));
        return Ok(GammaSet { dim: g.dim * 2, gammas: out, pos: r, neg: 0 });
    }
    // r == 0, s > 8
    Err(Error::UnsupportedSignature(format!(
        "no minimal gamma construction wired for (0,{s})"
    )))
}

/// `spin(p, q)` acting on its spinor module over `Q`, generators spanning a
/// `(p+q)(p+q−1)/2`-dimensional bracket-closed algebra.
pub fn spin_rep(p: usize, q: usize) -> Result<Representation> {
    let m = p + q;
    if m < 2 {
        return Err(Error::UnsupportedSignature(format!(
            "spin({p},{q}): need p+q ≥ 2"
        )));
    }
    let g = if q >= 1 { gammas(p, q - 1)? } else { gammas(0, p - 1)? };
    let mut gens: Vec<Matrix> = Vec::new();
    for a in 0..g.gammas.len() {
        for b in a + 1..g.gammas.len() {
            gens.push(g.gammas[a].mul(&g.gammas[b]));
        }
    }
    gens.extend(g.gammas.iter().cloned());
    let rep = Representation::new(format!("spin({p},{q})"), g.dim, gens, None)?;
    let expect = m * (m - 1) / 2;
    if rep.dim_h() != expect {
        return Err(Error::UnsupportedSignature(format!(
            "spin({p},{q}): constructed dimension {} ≠ {expect}",
            rep.dim_h()
        )));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_relations(g: &GammaSet) {
        let id = Matrix::identity(g.dim);
        for (i, x) in g.gammas.iter().enumerate() {
            let sq = x.mul(x);
            if i < g.pos {
                assert_eq!(sq, id, "gamma {i} must square to +1");
            } else {
                assert_eq!(sq, id.neg(), "gamma {i} must square to −1");
            }
            for y in &g.gammas[i + 1..] {
                assert!(x.mul(y).add(&y.mul(x)).is_zero());
            }
        }
    }

    #[test]
    fn gamma_relations_hold_across_signatures() {
        for (r, s, dim) in [
            (0usize, 2usize, 4usize),
            (0, 3, 4),
            (0, 4, 8),
            (0, 5, 8),
            (0, 6, 8),
            (0, 7, 8),
            (0, 8, 16),
            (1, 1, 2),
            (3, 3, 8),
            (4, 2, 8),
            (5, 4, 16),
            (1, 8, 16),
            (3, 0, 4),
            (9, 0, 16),
        ] {
            let g = gammas(r, s).unwrap();
            assert_eq!(g.dim, dim, "module dimension for ({r},{s})");
            assert_eq!(g.pos, r);
            assert_eq!(g.neg, s);
            check_relations(&g);
        }
    }

    #[test]
    fn spin_reps_match_expected_modules() {
        let s3 = spin_rep(3, 0).unwrap();
        assert_eq!((s3.dim_h(), s3.dim_m()), (3, 4));
        let s7 = spin_rep(7, 0).unwrap();
        assert_eq!((s7.dim_h(), s7.dim_m()), (21, 8));
        let s43 = spin_rep(4, 3).unwrap();
        assert_eq!((s43.dim_h(), s43.dim_m()), (21, 8));
        assert!(spin_rep(1, 0).is_err());
    }

    #[test]
    fn big_spin_reps() {
        let s9 = spin_rep(9, 0).unwrap();
        assert_eq!((s9.dim_h(), s9.dim_m()), (36, 16));
        let s55 = spin_rep(5, 5).unwrap();
        assert_eq!((s55.dim_h(), s55.dim_m()), (45, 16));
        let s19 = spin_rep(1, 9).unwrap();
        assert_eq!((s19.dim_h(), s19.dim_m()), (45, 16));
    }
}
