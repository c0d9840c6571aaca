//! Berger's two criteria, the curvature-span ideal, the torsion
//! absorbability obstruction, and equivariant symmetric pairings.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::elim::Eliminator;
use crate::linalg::{Matrix, Scalar, SRow, Subspace};
use crate::rep::Representation;
use crate::spencer::{action_on_h_wedge, ModuleSubspace, Tableau};
use crate::tensor::Wedge;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriState {
    Yes,
    No,
    Inconclusive,
}

/// Joint verdict of the holonomy criteria for one candidate.
#[derive(Clone, Debug)]
pub struct CriteriaVerdict {
    pub berger1: bool,
    pub berger1_span_dim: usize,
    pub berger2: bool,
    pub absorbable: TriState,
    pub notes: String,
}

/// The span inside `h` of all curvature values `R(x, y)`, `R` running over
/// a basis of `K(h)`.  Returned in generator coordinates (a subspace of
/// `Q^{dim h}`) and verified to be an ideal, which is what makes the span
/// test equivalent to the ideal-based formulation of the first criterion.
pub fn curvature_span(h: &Representation, k: &ModuleSubspace) -> Result<Subspace> {
    let d = h.dim_h();
    let w2 = Wedge::new(h.dim_m(), 2).dim();
    let mut rows: Vec<SRow> = Vec::new();
    for row in k.space.basis().row_iter() {
        let mut per_pair: BTreeMap<usize, SRow> = BTreeMap::new();
        for (c, v) in row {
            let (a, t2) = (c / w2, c % w2);
            per_pair.entry(t2).or_default().push((a, v.clone()));
        }
        rows.extend(per_pair.into_values());
    }
    let span = Subspace::from_rows(d, rows);
    if !is_ideal(h, &span) {
        return Err(Error::NotInvariant(
            "curvature span failed the ideal check".to_string(),
        ));
    }
    Ok(span)
}

/// First criterion: the curvature values span all of `h`, equivalently no
/// proper ideal `g` has `K(g) = K(h)`.
pub fn first_criterion(h: &Representation, k: &ModuleSubspace) -> Result<bool> {
    Ok(curvature_span(h, k)?.dim() == h.dim_h())
}

/// Second criterion: `K¹(h) ≠ 0`, i.e. the candidate admits curvature that
/// is not locally symmetric.
pub fn second_criterion(k1: &ModuleSubspace) -> bool {
    k1.dim() > 0
}

/// Torsion absorbability.  Differentiating the curvature structure
/// equation produces, for each pair of curvature values, the polarized
/// quadratic obstruction
/// `c(R₁,R₂)(x,y) = ½(ρ(R₁(x,y))·R₂ + ρ(R₂(x,y))·R₁) ∈ K ⊗ Λ²m*`,
/// and the torsion is absorbable iff every obstruction lies in the image
/// of the antisymmetrization `σ: K¹ ⊗ m* → K ⊗ Λ²m*` (then a quadratic
/// map `Q` with `σ∘Q = c` exists, unique modulo the prolongation `K²`,
/// which is exactly `ker σ`).
///
/// `Inconclusive` is returned only when the induced action on `K` fails
/// its own containment check, which would indicate a construction bug,
/// never a mathematical ambiguity.
pub fn absorbability_check(
    h: &Representation,
    k: &ModuleSubspace,
    k1: &ModuleSubspace,
) -> TriState {
    let kdim = k.dim();
    if kdim == 0 {
        return TriState::Yes;
    }
    let Ok(rho) = k.restricted_action() else {
        return TriState::Inconclusive;
    };
    let n = h.dim_m();
    let w2 = Wedge::new(n, 2).dim();

    // echelon of the image of σ
    let tableau = Tableau::from_subspace(kdim, n, &k1.space);
    let sigma_t = tableau.sigma_matrix().transpose();
    let mut image = Eliminator::new(kdim * w2);
    for row in sigma_t.row_iter() {
        image.push_srow(row);
    }

    // column access to the restricted action
    let rho_t: Vec<Matrix> = rho.iter().map(|m| m.transpose()).collect();
    // curvature values in generator coordinates, per basis element and pair
    let values: Vec<Vec<SRow>> = k
        .space
        .basis()
        .row_iter()
        .map(|row| {
            let mut per_pair: Vec<SRow> = vec![Vec::new(); w2];
            for (c, v) in row {
                per_pair[c % w2].push((c / w2, v.clone()));
            }
            per_pair
        })
        .collect();

    let pairs: Vec<(usize, usize)> = (0..kdim)
        .flat_map(|a| (a..kdim).map(move |b| (a, b)))
        .collect();
    let absorbable = pairs.par_iter().all(|&(a, b)| {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (x, y) in [(a, b), (b, a)] {
            for (t2, val_coords) in values[x].iter().enumerate() {
                for (alpha, coef) in val_coords {
                    for (kappa, v) in rho_t[*alpha].row(y) {
                        let slot = acc.entry(kappa * w2 + t2).or_insert_with(Scalar::zero);
                        *slot += coef * v;
                    }
                }
            }
        }
        let obstruction: SRow = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        image.contains_srow(&obstruction)
    });
    if absorbable {
        TriState::Yes
    } else {
        TriState::No
    }
}

/// Assembles the full verdict.
pub fn criteria(
    h: &Representation,
    k: &ModuleSubspace,
    k1: &ModuleSubspace,
) -> Result<CriteriaVerdict> {
    let span = curvature_span(h, k)?;
    let berger1 = span.dim() == h.dim_h();
    let berger2 = second_criterion(k1);
    let absorbable = absorbability_check(h, k, k1);
    Ok(CriteriaVerdict {
        berger1,
        berger1_span_dim: span.dim(),
        berger2,
        absorbable,
        notes: String::new(),
    })
}

/// `[h, s] ⊆ s` for a subspace `s` in generator coordinates.
pub fn is_ideal(h: &Representation, s: &Subspace) -> bool {
    for a in 0..h.dim_h() {
        let ad_t = h.adjoint_action(a).transpose();
        for row in s.basis().row_iter() {
            if !s.contains_srow(&ad_t.srow_mul(row)) {
                return false;
            }
        }
    }
    true
}

/// Smallest ideal of `h` containing `start` (generator coordinates).
pub fn ideal_closure(h: &Representation, start: &Subspace) -> Subspace {
    let mut current = start.clone();
    loop {
        let mut rows: Vec<SRow> = current.basis().row_iter().cloned().collect();
        for a in 0..h.dim_h() {
            let ad_t = h.adjoint_action(a).transpose();
            for row in current.basis().row_iter() {
                rows.push(ad_t.srow_mul(row));
            }
        }
        let next = Subspace::from_rows(h.dim_h(), rows);
        if next.dim() == current.dim() {
            return next;
        }
        current = next;
    }
}

/// A finite family of ideals built from canonical constructions: the zero
/// ideal, the derived algebra, the center, and ideal closures of single
/// generators and of generator pairs.  Used by the cross-check that the
/// span form of the first criterion agrees with the ideal definition.
pub fn canonical_ideals(h: &Representation) -> Vec<Subspace> {
    let d = h.dim_h();
    let mut out: Vec<Subspace> = vec![Subspace::zero(d)];
    // derived algebra: span of all bracket coordinates
    let mut derived_rows: Vec<SRow> = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let col: SRow = (0..d)
                .filter_map(|c| {
                    let v = h.adjoint_action(a).entry(c, b);
                    if v.is_zero() {
                        None
                    } else {
                        Some((c, v))
                    }
                })
                .collect();
            derived_rows.push(col);
        }
    }
    out.push(Subspace::from_rows(d, derived_rows));
    // center: common kernel of the adjoint actions
    if d > 0 {
        let ads: Vec<&Matrix> = (0..d).map(|a| h.adjoint_action(a)).collect();
        out.push(Subspace::kernel_of(&Matrix::vstack(&ads)));
    }
    // closures of single generators, of generator pairs, and of the sums
    // and differences X_a ± X_b (which pick out simple factors sitting
    // diagonally across the chosen basis, e.g. the two factors of so(4))
    for a in 0..d {
        let single = Subspace::from_rows(d, vec![vec![(a, crate::linalg::sc(1))]]);
        out.push(ideal_closure(h, &single));
        for b in a + 1..d {
            let pair = Subspace::from_rows(
                d,
                vec![
                    vec![(a, crate::linalg::sc(1))],
                    vec![(b, crate::linalg::sc(1))],
                ],
            );
            out.push(ideal_closure(h, &pair));
            for sign in [1i64, -1] {
                let combo = Subspace::from_rows(
                    d,
                    vec![vec![(a, crate::linalg::sc(1)), (b, crate::linalg::sc(sign))]],
                );
                out.push(ideal_closure(h, &combo));
            }
        }
    }
    out.sort_by_key(|s| s.dim());
    out.dedup();
    out.retain(|s| is_ideal(h, s));
    out
}

/// Pushes a subspace of `h ⊗ Λ²m*` (generator coordinates) into
/// `gl(n) ⊗ Λ²m*` coordinates, so curvature spaces of different algebras
/// on the same module can be compared.
pub fn embed_curvature_in_gl(h: &Representation, s: &Subspace) -> Subspace {
    let n = h.dim_m();
    let w2 = Wedge::new(n, 2).dim();
    let mut g = Matrix::zero(n * n, h.dim_h());
    for (a, x) in h.generators().iter().enumerate() {
        for (c, v) in x.vectorize() {
            g.set(c, a, v);
        }
    }
    s.map_by(&g.kron(&Matrix::identity(w2)))
}

/// Builds the subalgebra representation spanned by an ideal (generator
/// coordinates) of `h`.
pub fn subalgebra_rep(h: &Representation, s: &Subspace, name: &str) -> Result<Representation> {
    let gens = s
        .basis()
        .row_iter()
        .map(|row| {
            let prim = crate::linalg::srow_to_primitive(row);
            let mut m = Matrix::zero(h.dim_m(), h.dim_m());
            for (a, v) in prim {
                m = m.add(&h.generator(a).scale(&Scalar::from_integer(v)));
            }
            m
        })
        .collect();
    Representation::new(name, h.dim_m(), gens, None)
}

/// Ideal-definition oracle for the first criterion: no proper ideal in the
/// supplied family may have the same curvature space as `h` itself.
pub fn first_criterion_ideal_oracle(
    h: &Representation,
    k: &ModuleSubspace,
    ideals: &[Subspace],
) -> Result<bool> {
    let k_in_gl = embed_curvature_in_gl(h, &k.space);
    for ideal in ideals {
        if ideal.dim() == h.dim_h() {
            continue; // not proper
        }
        let g = subalgebra_rep(h, ideal, "ideal")?;
        let kg = crate::spencer::curvature_space(&g);
        if embed_curvature_in_gl(&g, &kg.space) == k_in_gl {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairingWitness {
    pub surjective: bool,
    pub jacobi: bool,
}

/// The space of equivariant pairings `Λ²m → h` and per-basis verdicts.
pub struct SymmetricPairings {
    /// Equivariant maps, as a subspace of `h ⊗ Λ²m*` in generator
    /// coordinates.
    pub space: Subspace,
    /// One verdict per basis pairing of `space`.
    pub witnesses: Vec<PairingWitness>,
    /// Dimension of the subspace of pairings satisfying the Jacobi
    /// identity on `h ⊕ m` (the condition is linear in the pairing).
    pub jacobi_dim: usize,
    /// Some Jacobi pairing is surjective: `h ⊕ m` is then a symmetric pair
    /// realizing `h` as a holonomy candidate.
    pub has_symmetric_pair: bool,
}

/// Equivariant skew pairings `m × m → h`: the invariants of `h ⊗ Λ²m*`.
/// For each candidate the Jacobi identity of the extended bracket on
/// `h ⊕ m` is checked exactly (the only nontrivial component is on
/// `Λ³m`), along with surjectivity.
pub fn symmetric_pairing_space(h: &Representation) -> SymmetricPairings {
    let d = h.dim_h();
    let n = h.dim_m();
    let w2 = Wedge::new(n, 2);
    let ambient = d * w2.dim();
    let space = if d == 0 {
        Subspace::zero(ambient.max(0))
    } else {
        let action = action_on_h_wedge(h, 2);
        let refs: Vec<&Matrix> = action.iter().collect();
        Subspace::kernel_of(&Matrix::vstack(&refs))
    };

    // Jacobi constraint, linear in the pairing: rows indexed by
    // (triple u<v<w, module coordinate), columns by the ambient coords.
    let w3 = Wedge::new(n, 3);
    let jacobi_matrix = {
        let mut triplets: Vec<(usize, usize, Scalar)> = Vec::new();
        for (a, x) in h.generators().iter().enumerate() {
            for t3 in 0..w3.dim() {
                let t = w3.tuple(t3);
                let (u, v, w) = (t[0] as usize, t[1] as usize, t[2] as usize);
                // c(u∧v)·e_w + c(v∧w)·e_u − c(u∧w)·e_v
                for (pair, arg, sgn) in [
                    ((u, v), w, 1i64),
                    ((v, w), u, 1),
                    ((u, w), v, -1),
                ] {
                    let t2 = w2.index_of(&[pair.0 as u8, pair.1 as u8]);
                    let col = a * w2.dim() + t2;
                    for (i, val) in x.transpose().row(arg) {
                        triplets.push((t3 * n + i, col, val * crate::linalg::sc(sgn)));
                    }
                }
            }
        }
        Matrix::from_triplets(w3.dim() * n, ambient, triplets)
    };

    let is_jacobi = |row: &SRow| -> bool { jacobi_matrix.transpose().srow_mul(row).is_empty() };
    let is_surjective = |row: &SRow| -> bool {
        let mut per_pair: BTreeMap<usize, SRow> = BTreeMap::new();
        for (c, v) in row {
            per_pair.entry(c % w2.dim()).or_default().push((c / w2.dim(), v.clone()));
        }
        let mut e = Eliminator::new(d);
        for r in per_pair.values() {
            e.push_srow(r);
        }
        e.rank() == d
    };

    let witnesses: Vec<PairingWitness> = space
        .basis()
        .row_iter()
        .map(|row| PairingWitness {
            surjective: is_surjective(row),
            jacobi: is_jacobi(row),
        })
        .collect();

    // Jacobi pairings form a subspace; intersect in coordinates of `space`
    let restricted = jacobi_matrix.mul(&space.basis().transpose());
    let jacobi_coords = Subspace::kernel_of(&restricted);
    let jacobi_dim = jacobi_coords.dim();

    // scan the Jacobi subspace for a surjective element: basis vectors,
    // then the sum (surjectivity is generic inside the subspace)
    let lift = |coords: &SRow| -> SRow {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in coords {
            for (col, v) in space.basis().row(*i) {
                *acc.entry(*col).or_insert_with(Scalar::zero) += c * v;
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    };
    let mut has_symmetric_pair = false;
    let mut sum: BTreeMap<usize, Scalar> = BTreeMap::new();
    for row in jacobi_coords.basis().row_iter() {
        let lifted = lift(row);
        debug_assert!(is_jacobi(&lifted));
        if is_surjective(&lifted) {
            has_symmetric_pair = true;
        }
        for (c, v) in lifted {
            *sum.entry(c).or_insert_with(Scalar::zero) += v;
        }
    }
    if !has_symmetric_pair && jacobi_dim > 1 {
        let total: SRow = sum.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if is_jacobi(&total) && is_surjective(&total) {
            has_symmetric_pair = true;
        }
    }
    if d == 0 {
        has_symmetric_pair = false;
    }

    SymmetricPairings {
        space,
        witnesses,
        jacobi_dim,
        has_symmetric_pair,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::families::{sl2_irrep, so};
    use crate::spencer::{curvature_prolongation, curvature_space};

    #[test]
    fn so3_satisfies_both_criteria() {
        let h = so(3, 0).unwrap();
        let k = curvature_space(&h);
        assert_eq!(k.dim(), 6);
        let span = curvature_span(&h, &k).unwrap();
        assert_eq!(span.dim(), 3);
        assert!(first_criterion(&h, &k).unwrap());
        let k1 = curvature_prolongation(&h, &k).unwrap();
        assert!(second_criterion(&k1));
        assert_eq!(absorbability_check(&h, &k, &k1), TriState::Yes);
    }

    #[test]
    fn zero_algebra_has_zero_span() {
        let h = Representation::trivial(3);
        let k = curvature_space(&h);
        assert_eq!(k.dim(), 0);
        let span = curvature_span(&h, &k).unwrap();
        assert_eq!(span.dim(), 0);
        // vacuously true: there are no proper ideals of the zero algebra
        assert!(first_criterion(&h, &k).unwrap());
        let pairings = symmetric_pairing_space(&h);
        assert_eq!(pairings.space.dim(), 0);
        assert!(!pairings.has_symmetric_pair);
    }

    #[test]
    fn sl2_v4_has_no_prolonged_curvature_but_a_symmetric_pair() {
        let h = sl2_irrep(4).unwrap();
        let k = curvature_space(&h);
        let k1 = curvature_prolongation(&h, &k).unwrap();
        assert!(first_criterion(&h, &k).unwrap());
        assert!(!second_criterion(&k1));
        let pairings = symmetric_pairing_space(&h);
        assert_eq!(pairings.space.dim(), 1);
        assert!(pairings.has_symmetric_pair, "the rank-one symmetric pair");
    }

    #[test]
    fn so3_sphere_pairing() {
        let h = so(3, 0).unwrap();
        let pairings = symmetric_pairing_space(&h);
        assert_eq!(pairings.space.dim(), 1);
        assert_eq!(pairings.jacobi_dim, 1);
        assert!(pairings.witnesses[0].surjective);
        assert!(pairings.witnesses[0].jacobi);
        assert!(pairings.has_symmetric_pair);
    }

    #[test]
    fn canonical_ideals_of_so4() {
        // so(4) = so(3) ⊕ so(3): the two simple factors show up
        let h = so(4, 0).unwrap();
        let ideals = canonical_ideals(&h);
        let dims: Vec<usize> = ideals.iter().map(|s| s.dim()).collect();
        assert!(dims.contains(&0));
        assert!(dims.contains(&3));
        assert!(dims.contains(&6));
        let k = curvature_space(&h);
        assert!(first_criterion_ideal_oracle(&h, &k, &ideals).unwrap());
        assert!(first_criterion(&h, &k).unwrap());
    }
}
