//! Natural constructions on representations: duals, symmetric and wedge
//! powers, direct sums, and products of commuting algebras.

use super::Representation;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::tensor::{dual_action, sym_derivation, wedge_derivation, Sym, Wedge};

pub fn dual(rep: &Representation) -> Result<Representation> {
    let gens = rep.generators().iter().map(dual_action).collect();
    let j = rep.complex_structure().map(dual_action);
    Representation::new(format!("{}^*", rep.name()), rep.dim_m(), gens, j)
}

/// Derivation action on `S^k(m)` in the monomial basis.
pub fn sym_power(rep: &Representation, k: usize) -> Result<Representation> {
    if k == 0 {
        return Err(Error::InvalidParameter("sym_power needs k ≥ 1".to_string()));
    }
    let s = Sym::new(rep.dim_m(), k);
    let gens = rep
        .generators()
        .iter()
        .map(|g| sym_derivation(g, &s))
        .collect();
    Representation::new(format!("S^{k}({})", rep.name()), s.dim(), gens, None)
}

/// Derivation action on `Λ^k(m)`.
pub fn wedge_power(rep: &Representation, k: usize) -> Result<Representation> {
    if k == 0 || k > rep.dim_m() {
        return Err(Error::InvalidParameter(format!(
            "wedge_power k={k} out of range for dim {}",
            rep.dim_m()
        )));
    }
    let w = Wedge::new(rep.dim_m(), k);
    let gens = rep
        .generators()
        .iter()
        .map(|g| wedge_derivation(g, &w))
        .collect();
    Representation::new(format!("Λ^{k}({})", rep.name()), w.dim(), gens, None)
}

/// Diagonal sum of two modules of the *same* algebra: generators are paired
/// positionally, so both inputs must share structure constants (a trivial
/// algebra pads the other side with zero blocks, giving `m ⊕ Q^k`).
pub fn direct_sum(a: &Representation, b: &Representation) -> Result<Representation> {
    let (da, db) = (a.dim_h(), b.dim_h());
    if da != db && da != 0 && db != 0 {
        return Err(Error::DimensionMismatch {
            context: "direct_sum generator pairing".to_string(),
            expected: da,
            got: db,
        });
    }
    let (na, nb) = (a.dim_m(), b.dim_m());
    let n = na + nb;
    let d = da.max(db);
    let zero = Matrix::zero(0, 0);
    let gens = (0..d)
        .map(|i| {
            let ga = if da == 0 { &zero } else { a.generator(i) };
            let gb = if db == 0 { &zero } else { b.generator(i) };
            let mut triplets = Vec::new();
            if da != 0 {
                triplets.extend(ga.vectorize().into_iter().map(|(c, v)| (c / na, c % na, v)));
            }
            if db != 0 {
                triplets.extend(
                    gb.vectorize()
                        .into_iter()
                        .map(|(c, v)| (na + c / nb, na + c % nb, v)),
                );
            }
            Matrix::from_triplets(n, n, triplets)
        })
        .collect();
    Representation::new(format!("{}⊕{}", a.name(), b.name()), n, gens, None)
}

/// Product of two commuting algebras on `m_a ⊗ m_b`: the output is spanned
/// by `X ⊗ I` and `I ⊗ Y`.
pub fn tensor_product(a: &Representation, b: &Representation) -> Result<Representation> {
    let (na, nb) = (a.dim_m(), b.dim_m());
    let ia = Matrix::identity(na);
    let ib = Matrix::identity(nb);
    let mut gens: Vec<Matrix> = a.generators().iter().map(|g| g.kron(&ib)).collect();
    gens.extend(b.generators().iter().map(|g| ia.kron(g)));
    let j = match (a.complex_structure(), b.complex_structure()) {
        (Some(j), _) => Some(j.kron(&ib)),
        (None, Some(j)) => Some(ia.kron(j)),
        (None, None) => None,
    };
    Representation::new(format!("{}·{}", a.name(), b.name()), na * nb, gens, j)
}

#[cfg(test)]
mod tests {
    use super::super::families::{sl2_irrep, so};
    use super::*;

    #[test]
    fn sym_cube_of_v1_has_v3_weights() {
        let v1 = sl2_irrep(1).unwrap();
        let s3 = sym_power(&v1, 3).unwrap();
        assert_eq!(s3.dim_m(), 4);
        assert_eq!(s3.dim_h(), 3);
        // H acts diagonally with weights {±3, ±1} in some order
        let h = s3.generator(0);
        let mut weights: Vec<i64> = (0..4)
            .map(|i| {
                let e = h.entry(i, i);
                assert!(e.is_integer());
                e.numer().try_into().unwrap()
            })
            .collect();
        weights.sort_unstable();
        assert_eq!(weights, vec![-3, -1, 1, 3]);
    }

    #[test]
    fn wedge_square_of_so3_is_the_adjoint() {
        let r = so(3, 0).unwrap();
        let w2 = wedge_power(&r, 2).unwrap();
        assert_eq!(w2.dim_m(), 3);
        assert_eq!(w2.dim_h(), 3);
        assert!(w2.invariant_vectors().is_zero());
    }

    #[test]
    fn direct_sum_pairs_generators() {
        let v1 = sl2_irrep(1).unwrap();
        let v1v1 = direct_sum(&v1, &v1).unwrap();
        assert_eq!(v1v1.dim_m(), 4);
        assert_eq!(v1v1.dim_h(), 3);
        let padded = direct_sum(&sl2_irrep(2).unwrap(), &Representation::trivial(2)).unwrap();
        assert_eq!(padded.dim_m(), 5);
        assert_eq!(padded.invariant_vectors().dim(), 2);
    }

    #[test]
    fn tensor_product_is_the_commuting_sum() {
        let a = sl2_irrep(1).unwrap();
        let b = so(3, 0).unwrap();
        let t = tensor_product(&a, &b).unwrap();
        assert_eq!(t.dim_m(), 6);
        assert_eq!(t.dim_h(), 6);
    }

    #[test]
    fn dual_preserves_dimensions() {
        let r = so(2, 1).unwrap();
        let d = dual(&r).unwrap();
        assert_eq!(d.dim_h(), 3);
        assert_eq!(d.dim_m(), 3);
    }
}
