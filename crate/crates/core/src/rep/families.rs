//! The classical families and form stabilizers.

use std::collections::HashMap;

use num_traits::Zero;

use super::{complex_structure_matrix, octonion, Representation};
use crate::error::{Error, Result};
use crate::linalg::{sc, Matrix, Scalar, Subspace};
use crate::tensor::{Sym, Wedge};

/// Irreducible `sl(2,R)`-module of dimension `k+1`, realized on degree-`k`
/// binary forms.  Basis index `j` is the `y`-degree of the monomial
/// `x^{k-j} y^j`, so `H = diag(k, k−2, …, −k)` and `E`, `F` are the usual
/// raising and lowering derivations with `[H,E] = 2E`, `[H,F] = −2F`,
/// `[E,F] = H`.
pub fn sl2_irrep(k: usize) -> Result<Representation> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "sl2 module V_0 is a trivial summand and is excluded".to_string(),
        ));
    }
    let dim = k + 1;
    let h = Matrix::from_triplets(dim, dim, (0..dim).map(|j| (j, j, sc(k as i64 - 2 * j as i64))));
    let e = Matrix::from_triplets(dim, dim, (1..dim).map(|j| (j - 1, j, sc(j as i64))));
    let f = Matrix::from_triplets(dim, dim, (0..dim - 1).map(|j| (j + 1, j, sc((k - j) as i64))));
    Representation::new(format!("sl2-V{k}"), dim, vec![h, e, f], None)
}

/// `so(p,q)` in the standard basis for `Q = diag(1…1, −1…−1)`.
pub fn so(p: usize, q: usize) -> Result<Representation> {
    let m = p + q;
    if m == 0 {
        return Err(Error::InvalidParameter("so(0,0) is empty".to_string()));
    }
    let eps = |i: usize| if i < p { 1i64 } else { -1 };
    let mut gens = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let sign = if eps(i) == eps(j) { -1 } else { 1 };
            gens.push(Matrix::from_triplets(
                m,
                m,
                [(i, j, sc(1)), (j, i, sc(sign))],
            ));
        }
    }
    Representation::new(format!("so({p},{q})"), m, gens, None)
}

/// `sp(n,R)` on `Q^{2n}` preserving the standard symplectic form
/// `S = [[0, I], [−I, 0]]`.
pub fn sp(n: usize) -> Result<Representation> {
    if n == 0 {
        return Err(Error::InvalidParameter("sp(0,R) is empty".to_string()));
    }
    let dim = 2 * n;
    let mut gens = Vec::new();
    // block [[P, Q], [R, −Pᵀ]] with Q, R symmetric
    for a in 0..n {
        for b in 0..n {
            gens.push(Matrix::from_triplets(
                dim,
                dim,
                [(a, b, sc(1)), (n + b, n + a, sc(-1))],
            ));
        }
    }
    for a in 0..n {
        for b in a..n {
            if a == b {
                gens.push(Matrix::from_triplets(dim, dim, [(a, n + a, sc(1))]));
            } else {
                gens.push(Matrix::from_triplets(
                    dim,
                    dim,
                    [(a, n + b, sc(1)), (b, n + a, sc(1))],
                ));
            }
        }
    }
    for a in 0..n {
        for b in a..n {
            if a == b {
                gens.push(Matrix::from_triplets(dim, dim, [(n + a, a, sc(1))]));
            } else {
                gens.push(Matrix::from_triplets(
                    dim,
                    dim,
                    [(n + a, b, sc(1)), (n + b, a, sc(1))],
                ));
            }
        }
    }
    Representation::new(format!("sp({n},R)"), dim, gens, None)
}

/// `sl(n,R)`.
pub fn sl(n: usize) -> Result<Representation> {
    if n < 2 {
        return Err(Error::InvalidParameter("sl(n) needs n ≥ 2".to_string()));
    }
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                gens.push(Matrix::from_triplets(n, n, [(i, j, sc(1))]));
            }
        }
    }
    for i in 0..n - 1 {
        gens.push(Matrix::from_triplets(
            n,
            n,
            [(i, i, sc(1)), (i + 1, i + 1, sc(-1))],
        ));
    }
    Representation::new(format!("sl({n},R)"), n, gens, None)
}

/// `gl(n,R)`.
pub fn gl(n: usize) -> Result<Representation> {
    if n == 0 {
        return Err(Error::InvalidParameter("gl(0) is empty".to_string()));
    }
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            gens.push(Matrix::from_triplets(n, n, [(i, j, sc(1))]));
        }
    }
    Representation::new(format!("gl({n},R)"), n, gens, None)
}

/// `u(p,q)` realified on `Q^{2(p+q)}`: the commutant of the standard
/// complex structure intersected with the stabilizer of the real part of
/// the signature-`(p,q)` Hermitian form.  Dimension `(p+q)²`.
pub fn u(p: usize, q: usize) -> Result<Representation> {
    unitary_family(p, q, false)
}

/// `su(p,q)` realified, dimension `(p+q)²−1`.
pub fn su(p: usize, q: usize) -> Result<Representation> {
    unitary_family(p, q, true)
}

fn unitary_family(p: usize, q: usize, traceless: bool) -> Result<Representation> {
    let m = p + q;
    if m == 0 {
        return Err(Error::InvalidParameter("u(0,0) is empty".to_string()));
    }
    let n = 2 * m;
    let j = complex_structure_matrix(m);
    let id = Matrix::identity(n);
    let mut blocks: Vec<Matrix> = vec![id.kron(&j.transpose()).sub(&j.kron(&id))];
    // g(Ax, y) + g(x, Ay) = 0 with g = diag(ε, ε)
    let gdiag: Vec<i64> = (0..n)
        .map(|i| if i % m < p { 1 } else { -1 })
        .collect();
    let mut sym_rows = Vec::new();
    for i in 0..n {
        for jj in i..n {
            let mut row: Vec<(usize, Scalar)> = Vec::new();
            row.push((i * n + jj, sc(gdiag[i])));
            row.push((jj * n + i, sc(gdiag[jj])));
            row.sort_by_key(|(c, _)| *c);
            let mut merged: Vec<(usize, Scalar)> = Vec::new();
            for (c, v) in row {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            sym_rows.push(merged);
        }
    }
    blocks.push(Matrix::from_sparse_rows(n * n, sym_rows));
    if traceless {
        let tr: Vec<(usize, Scalar)> = (0..n).map(|i| (i * n + i, sc(1))).collect();
        // complex trace: tr(A) and tr(J·A) both vanish
        let mut trj: Vec<(usize, Scalar)> = Vec::new();
        for i in 0..n {
            for (k, v) in j.row(i) {
                trj.push((k * n + i, v.clone()));
            }
        }
        trj.sort_by_key(|(c, _)| *c);
        blocks.push(Matrix::from_sparse_rows(n * n, vec![tr, trj]));
    }
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let kernel = Subspace::kernel_of(&Matrix::vstack(&refs));
    let gens = subspace_rows_to_matrices(&kernel, n);
    let label = if traceless { "su" } else { "u" };
    let rep = Representation::new(format!("{label}({p},{q})^R"), n, gens, Some(j))?;
    let expect = if traceless { m * m - 1 } else { m * m };
    if rep.dim_h() != expect {
        return Err(Error::InvalidParameter(format!(
            "{label}({p},{q}): got dimension {}, expected {expect}",
            rep.dim_h()
        )));
    }
    Ok(rep)
}

/// `so*(2k) = so(k,H)` realified on `Q^{4k}`: quaternion-linear matrices
/// preserving the standard skew-Hermitian form.  Dimension `k(2k−1)`.
pub fn so_star(two_k: usize) -> Result<Representation> {
    if two_k < 2 || two_k % 2 != 0 {
        return Err(Error::InvalidParameter(
            "so*(n) needs even n ≥ 2".to_string(),
        ));
    }
    let k = two_k / 2;
    let n = 4 * k;
    // coordinates (a⃗, b⃗, c⃗, d⃗) for quaternions a + bi + cj + dk
    let blk = |r: usize, c: usize, s: i64| -> Vec<(usize, usize, Scalar)> {
        (0..k).map(|m| (r * k + m, c * k + m, sc(s))).collect()
    };
    let r_i = Matrix::from_triplets(
        n,
        n,
        blk(0, 1, -1).into_iter().chain(blk(1, 0, 1)).chain(blk(2, 3, 1)).chain(blk(3, 2, -1)),
    );
    let r_j = Matrix::from_triplets(
        n,
        n,
        blk(0, 2, -1).into_iter().chain(blk(1, 3, -1)).chain(blk(2, 0, 1)).chain(blk(3, 1, 1)),
    );
    let r_k = Matrix::from_triplets(
        n,
        n,
        blk(0, 3, -1).into_iter().chain(blk(1, 2, 1)).chain(blk(2, 1, -1)).chain(blk(3, 0, 1)),
    );
    let id = Matrix::identity(n);
    let mut blocks = Vec::new();
    for r in [&r_i, &r_j, &r_k] {
        blocks.push(id.kron(&r.transpose()).sub(&r.kron(&id)));
    }
    // real part of the skew-Hermitian form x̄ᵀ i y: an antisymmetric matrix B
    let mut b = Matrix::zero(n, n);
    for m in 0..k {
        b.set(k + m, m, sc(1));
        b.set(m, k + m, sc(-1));
        b.set(3 * k + m, 2 * k + m, sc(1));
        b.set(2 * k + m, 3 * k + m, sc(-1));
    }
    // AᵀB + BA = 0
    let mut rows = Vec::new();
    for i in 0..n {
        for jj in 0..n {
            let mut acc: HashMap<usize, Scalar> = HashMap::new();
            for l in 0..n {
                let bl = b.entry(l, jj);
                if !bl.is_zero() {
                    *acc.entry(l * n + i).or_insert_with(Scalar::zero) += bl;
                }
                let bi = b.entry(i, l);
                if !bi.is_zero() {
                    *acc.entry(l * n + jj).or_insert_with(Scalar::zero) += bi;
                }
            }
            let mut row: Vec<(usize, Scalar)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            row.sort_by_key(|(c, _)| *c);
            rows.push(row);
        }
    }
    blocks.push(Matrix::from_sparse_rows(n * n, rows));
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let kernel = Subspace::kernel_of(&Matrix::vstack(&refs));
    let gens = subspace_rows_to_matrices(&kernel, n);
    let rep = Representation::new(format!("so*({two_k})^R"), n, gens, None)?;
    let expect = k * (2 * k - 1);
    if rep.dim_h() != expect {
        return Err(Error::InvalidParameter(format!(
            "so*({two_k}): got dimension {}, expected {expect}",
            rep.dim_h()
        )));
    }
    Ok(rep)
}

fn subspace_rows_to_matrices(s: &Subspace, n: usize) -> Vec<Matrix> {
    s.basis()
        .row_iter()
        .map(|row| {
            let prim = crate::linalg::srow_to_primitive(row);
            Matrix::from_triplets(
                n,
                n,
                prim.into_iter()
                    .map(|(c, v)| (c / n, c % n, Scalar::from_integer(v))),
            )
        })
        .collect()
}

/// A fixed covariant tensor: alternating of any degree or symmetric of
/// degree 2, stored on canonical index tuples.
#[derive(Clone)]
pub struct FormTensor {
    pub degree: usize,
    pub n: usize,
    pub alternating: bool,
    /// Components on strictly increasing (alternating) or weakly increasing
    /// (symmetric) tuples.
    pub components: HashMap<Vec<u8>, Scalar>,
}

impl FormTensor {
    pub fn standard_quadratic(p: usize, q: usize) -> FormTensor {
        let n = p + q;
        let components = (0..n)
            .map(|i| (vec![i as u8, i as u8], sc(if i < p { 1 } else { -1 })))
            .collect();
        FormTensor {
            degree: 2,
            n,
            alternating: false,
            components,
        }
    }

    pub fn standard_symplectic(half: usize) -> FormTensor {
        let n = 2 * half;
        let components = (0..half)
            .map(|i| (vec![i as u8, (half + i) as u8], sc(1)))
            .collect();
        FormTensor {
            degree: 2,
            n,
            alternating: true,
            components,
        }
    }

    /// The associative 3-form `φ(x,y,z) = ⟨xy, z⟩` on imaginary octonions,
    /// all coefficients `±1` on the seven oriented lines.
    pub fn g2_three_form() -> FormTensor {
        let t = octonion::table();
        let mut components = HashMap::new();
        for a in 1..8usize {
            for bq in a + 1..8 {
                for c in bq + 1..8 {
                    let (s, k) = t[a][bq];
                    if k == c {
                        components.insert(
                            vec![(a - 1) as u8, (bq - 1) as u8, (c - 1) as u8],
                            sc(s as i64),
                        );
                    }
                }
            }
        }
        FormTensor {
            degree: 3,
            n: 7,
            alternating: true,
            components,
        }
    }

    /// Value on a canonical tuple (sorted; strictly increasing for
    /// alternating forms).
    fn component(&self, tuple: &[u8]) -> Scalar {
        self.components.get(tuple).cloned().unwrap_or_else(Scalar::zero)
    }
}

/// The annihilator `{A ∈ gl(n) : A·φ = 0}` of a form under the derivation
/// action on covariant tensors, computed as a single kernel.  The result is
/// automatically bracket-closed; the constructor re-verifies it.
pub fn stabilizer_algebra(phi: &FormTensor) -> Result<Representation> {
    let n = phi.n;
    let mut triplets: Vec<(usize, usize, Scalar)> = Vec::new();
    let num_rows;
    if phi.alternating {
        let w = Wedge::new(n, phi.degree);
        num_rows = w.dim();
        for row in 0..w.dim() {
            let t = w.tuple(row).to_vec();
            for slot in 0..t.len() {
                for r in 0..n {
                    // coefficient of A[r][t_slot] is φ(t with slot ↦ r)
                    let mut m = t.clone();
                    m[slot] = r as u8;
                    if m.iter().filter(|&&x| x == r as u8).count() > 1 {
                        continue;
                    }
                    let mut sorted = m.clone();
                    sorted.sort_unstable();
                    let mut sign = 1i64;
                    // parity of sorting m
                    for a in 0..m.len() {
                        for bq in a + 1..m.len() {
                            if m[a] > m[bq] {
                                sign = -sign;
                            }
                        }
                    }
                    let v = phi.component(&sorted);
                    if !v.is_zero() {
                        triplets.push((row, r * n + t[slot] as usize, v * sc(sign)));
                    }
                }
            }
        }
    } else {
        let s = Sym::new(n, phi.degree);
        num_rows = s.dim();
        for row in 0..s.dim() {
            let t = s.tuple(row).to_vec();
            for slot in 0..t.len() {
                for r in 0..n {
                    let mut m = t.clone();
                    m[slot] = r as u8;
                    m.sort_unstable();
                    let v = phi.component(&m);
                    if !v.is_zero() {
                        triplets.push((row, r * n + t[slot] as usize, v));
                    }
                }
            }
        }
    }
    let constraint = Matrix::from_triplets(num_rows, n * n, triplets);
    let kernel = Subspace::kernel_of(&constraint);
    let gens = subspace_rows_to_matrices(&kernel, n);
    Representation::new(format!("stab(deg-{} form)", phi.degree), n, gens, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_modules_have_the_right_weights() {
        let v1 = sl2_irrep(1).unwrap();
        assert_eq!(v1.dim_m(), 2);
        assert_eq!(v1.generator(0), &Matrix::from_dense_i64(&[&[1, 0], &[0, -1]]));
        let v3 = sl2_irrep(3).unwrap();
        assert_eq!(v3.dim_m(), 4);
        let h = v3.generator(0);
        let eig: Vec<Scalar> = (0..4).map(|i| h.entry(i, i)).collect();
        assert_eq!(eig, vec![sc(3), sc(1), sc(-1), sc(-3)]);
        assert!(sl2_irrep(0).is_err());
        // V4 is 5-dimensional
        assert_eq!(sl2_irrep(4).unwrap().dim_m(), 5);
    }

    #[test]
    fn classical_dimensions() {
        assert_eq!(so(3, 0).unwrap().dim_h(), 3);
        assert_eq!(so(2, 3).unwrap().dim_h(), 10);
        assert_eq!(sp(2).unwrap().dim_h(), 10);
        assert_eq!(sp(3).unwrap().dim_h(), 21);
        assert_eq!(sl(3).unwrap().dim_h(), 8);
        assert_eq!(gl(4).unwrap().dim_h(), 16);
    }

    #[test]
    fn unitary_families() {
        let u2 = u(2, 0).unwrap();
        assert_eq!(u2.dim_h(), 4);
        assert_eq!(u2.dim_m(), 4);
        assert!(u2.complex_structure().is_some());
        let su2 = su(2, 0).unwrap();
        assert_eq!(su2.dim_h(), 3);
        let u11 = u(1, 1).unwrap();
        assert_eq!(u11.dim_h(), 4);
    }

    #[test]
    fn so_star_six() {
        let h = so_star(6).unwrap();
        assert_eq!(h.dim_m(), 12);
        assert_eq!(h.dim_h(), 15);
    }

    #[test]
    fn quadratic_and_symplectic_stabilizers() {
        let q3 = stabilizer_algebra(&FormTensor::standard_quadratic(3, 0)).unwrap();
        assert_eq!(q3.dim_h(), 3); // so(3)
        let s4 = stabilizer_algebra(&FormTensor::standard_symplectic(2)).unwrap();
        assert_eq!(s4.dim_h(), 10); // sp(2,R)
        let q21 = stabilizer_algebra(&FormTensor::standard_quadratic(2, 1)).unwrap();
        assert_eq!(q21.dim_h(), 3); // so(2,1)
    }

    #[test]
    fn g2_stabilizer_has_dimension_14() {
        let g2 = stabilizer_algebra(&FormTensor::g2_three_form()).unwrap();
        assert_eq!(g2.dim_m(), 7);
        assert_eq!(g2.dim_h(), 14);
        assert_eq!(g2.commutant().dim(), 1);
    }
}
