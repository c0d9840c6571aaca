//! Construction of the candidate subalgebras `h ⊂ gl(m)`.
//!
//! Everything is realized over `Q`: complex and quaternionic candidates are
//! realified with explicit structure matrices, spinor representations come
//! from integral gamma matrices, and each constructor runs the full
//! linear-independence and bracket-closure validation before handing the
//! algebra to the analysis pipeline.

pub mod clifford;
pub mod families;
pub mod functors;
pub mod octonion;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, SpanSolver, Subspace};

/// A Lie subalgebra of `gl(n)` given by a basis of matrices, together with
/// the structure constants recovered from the bracket and an optional
/// complex structure that commutes with the action.
#[derive(Clone)]
pub struct Representation {
    name: String,
    n: usize,
    gens: Vec<Matrix>,
    /// `adjoint[a]` is the matrix of `ad(X_a)` in generator coordinates:
    /// `[X_a, X_b] = Σ_c adjoint[a][c][b] · X_c`.
    adjoint: Vec<Matrix>,
    j: Option<Matrix>,
}

impl Representation {
    /// Validates shapes, linear independence, bracket closure and (when
    /// given) that the tagged complex structure commutes and squares to
    /// `−1`.
    pub fn new(
        name: impl Into<String>,
        n: usize,
        gens: Vec<Matrix>,
        j: Option<Matrix>,
    ) -> Result<Self> {
        let name = name.into();
        for (i, g) in gens.iter().enumerate() {
            if g.rows() != n || g.cols() != n {
                return Err(Error::DimensionMismatch {
                    context: format!("generator {i} of {name}"),
                    expected: n,
                    got: g.rows().max(g.cols()),
                });
            }
        }
        let vectorized: Vec<_> = gens.iter().map(|g| g.vectorize()).collect();
        let solver = SpanSolver::new(n * n, &vectorized);
        if solver.rank() != gens.len() {
            return Err(Error::DependentGenerators(format!(
                "{name}: rank {} < {} generators",
                solver.rank(),
                gens.len()
            )));
        }
        let d = gens.len();
        let mut adjoint = vec![Matrix::zero(d, d); d];
        for a in 0..d {
            for b in 0..d {
                if a == b {
                    continue;
                }
                let br = gens[a].commutator(&gens[b]);
                let coords = solver.coords(&br.vectorize()).ok_or_else(|| {
                    Error::NotBracketClosed(format!("{name}: [X_{a}, X_{b}] escapes the span"))
                })?;
                for (c, v) in coords.into_iter().enumerate() {
                    if !num_traits::Zero::is_zero(&v) {
                        adjoint[a].set(c, b, v);
                    }
                }
            }
        }
        if let Some(jm) = &j {
            if jm.rows() != n || jm.cols() != n {
                return Err(Error::DimensionMismatch {
                    context: format!("complex structure of {name}"),
                    expected: n,
                    got: jm.rows(),
                });
            }
            if jm.mul(jm) != Matrix::identity(n).neg() {
                return Err(Error::InvalidParameter(format!(
                    "{name}: tagged J does not square to -Id"
                )));
            }
            for (i, g) in gens.iter().enumerate() {
                if !g.commutator(jm).is_zero() {
                    return Err(Error::DoesNotCommute(format!(
                        "{name}: tagged J fails on generator {i}"
                    )));
                }
            }
        }
        Ok(Representation {
            name,
            n,
            gens,
            adjoint,
            j,
        })
    }

    /// The zero subalgebra acting on `Q^n`.
    pub fn trivial(n: usize) -> Self {
        Representation {
            name: format!("trivial({n})"),
            n,
            gens: Vec::new(),
            adjoint: Vec::new(),
            j: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Dimension of the module `m`.
    pub fn dim_m(&self) -> usize {
        self.n
    }

    /// Dimension of the algebra `h`.
    pub fn dim_h(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn generator(&self, a: usize) -> &Matrix {
        &self.gens[a]
    }

    /// `ad(X_a)` in generator coordinates.
    pub fn adjoint_action(&self, a: usize) -> &Matrix {
        &self.adjoint[a]
    }

    pub fn complex_structure(&self) -> Option<&Matrix> {
        self.j.as_ref()
    }

    /// The element `Σ coords[a] · X_a` as a matrix.
    pub fn element(&self, coords: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.n, self.n);
        for (a, c) in coords.iter().enumerate() {
            if !num_traits::Zero::is_zero(c) {
                m = m.add(&self.gens[a].scale(c));
            }
        }
        m
    }

    /// Bracket in generator coordinates.
    pub fn bracket_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim_h();
        let mut out = vec![Scalar::from_integer(0.into()); d];
        for (i, ai) in a.iter().enumerate() {
            if num_traits::Zero::is_zero(ai) {
                continue;
            }
            let adb = self.adjoint[i].mul_vec(b);
            for (c, slot) in out.iter_mut().enumerate() {
                *slot += ai * &adb[c];
            }
        }
        out
    }

    /// `{C ∈ gl(n) : [C, X_a] = 0 ∀a}` as a subspace of `Q^{n²}`.
    /// For an irreducible module its dimension (1, 2 or 4) certifies the
    /// real, complex or quaternionic type.
    pub fn commutant(&self) -> Subspace {
        let n2 = self.n * self.n;
        let id = Matrix::identity(self.n);
        let mut blocks = Vec::new();
        for g in &self.gens {
            // vec([C, X]) = (I ⊗ Xᵀ − X ⊗ I) vec(C), row-major
            blocks.push(id.kron(&g.transpose()).sub(&g.kron(&id)));
        }
        if blocks.is_empty() {
            return Subspace::full(n2);
        }
        let refs: Vec<&Matrix> = blocks.iter().collect();
        Subspace::kernel_of(&Matrix::vstack(&refs))
    }

    /// Common kernel of all generators: the space of trivial-summand
    /// directions.
    pub fn invariant_vectors(&self) -> Subspace {
        if self.gens.is_empty() {
            return Subspace::full(self.n);
        }
        let refs: Vec<&Matrix> = self.gens.iter().collect();
        Subspace::kernel_of(&Matrix::vstack(&refs))
    }

    /// Extends the algebra by a central element.
    pub fn add_center(&self, z: Matrix) -> Result<Representation> {
        for (i, g) in self.gens.iter().enumerate() {
            if !g.commutator(&z).is_zero() {
                return Err(Error::DoesNotCommute(format!(
                    "{}: center candidate fails on generator {i}",
                    self.name
                )));
            }
        }
        let mut gens = self.gens.clone();
        gens.push(z);
        Representation::new(format!("{}+center", self.name), self.n, gens, self.j.clone())
            .map_err(|e| match e {
                Error::DependentGenerators(_) => Error::DependentGenerators(format!(
                    "{}: center candidate already lies in the span",
                    self.name
                )),
                other => other,
            })
    }

    /// Realification: the same algebra acting complex-linearly on
    /// `Q^{2n} ≅ C ⊗ Q^n`, with the complex structure tagged.
    pub fn realify(&self) -> Representation {
        let n = self.n;
        let gens: Vec<Matrix> = self
            .gens
            .iter()
            .map(|g| {
                Matrix::from_triplets(
                    2 * n,
                    2 * n,
                    g.vectorize().into_iter().flat_map(|(c, v)| {
                        let (i, jcol) = (c / n, c % n);
                        [(i, jcol, v.clone()), (n + i, n + jcol, v)]
                    }),
                )
            })
            .collect();
        let j = complex_structure_matrix(n);
        Representation::new(format!("{}^R", self.name), 2 * n, gens, Some(j))
            .expect("realification preserves independence and closure")
    }

    /// Conjugated copy `P X P⁻¹` acting in the new basis; used by the
    /// basis-invariance property tests.
    pub fn conjugate(&self, p: &Matrix) -> Result<Representation> {
        let pinv = invert(p).ok_or_else(|| {
            Error::InvalidParameter("conjugation by a singular matrix".to_string())
        })?;
        let gens = self
            .gens
            .iter()
            .map(|g| p.mul(g).mul(&pinv))
            .collect();
        let j = self.j.as_ref().map(|j| p.mul(j).mul(&pinv));
        Representation::new(format!("{}~", self.name), self.n, gens, j)
    }
}

/// Standard complex structure on `Q^{2n}`, block form `[[0, −I], [I, 0]]`.
pub fn complex_structure_matrix(n: usize) -> Matrix {
    Matrix::from_triplets(
        2 * n,
        2 * n,
        (0..n).flat_map(|i| {
            [
                (i, n + i, -crate::linalg::sc(1)),
                (n + i, i, crate::linalg::sc(1)),
            ]
        }),
    )
}

/// Exact inverse via augmented reduction; `None` when singular.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.rows();
    if n != m.cols() {
        return None;
    }
    let mut work: Vec<Vec<Scalar>> = m
        .to_dense()
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|jj| {
                if i == jj {
                    crate::linalg::sc(1)
                } else {
                    Scalar::from_integer(0.into())
                }
            }));
            row
        })
        .collect();
    let pivots = crate::linalg::elim::dense_oracle::rref(&mut work);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(Matrix::from_dense(
        work.into_iter().map(|row| row[n..].to_vec()).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::families::sl2_irrep;
    use super::*;
    use crate::linalg::sc;

    #[test]
    fn rejects_unclosed_generator_sets() {
        // span{E} with E nilpotent closes; span{E, X} with X generic does not
        let e = Matrix::from_dense_i64(&[&[0, 1], &[0, 0]]);
        let x = Matrix::from_dense_i64(&[&[0, 0], &[1, 1]]);
        assert!(Representation::new("e", 2, vec![e.clone()], None).is_ok());
        assert!(matches!(
            Representation::new("ex", 2, vec![e, x], None),
            Err(Error::NotBracketClosed(_))
        ));
    }

    #[test]
    fn rejects_dependent_generators() {
        let a = Matrix::identity(2);
        let b = Matrix::identity(2).scale(&sc(2));
        assert!(matches!(
            Representation::new("dep", 2, vec![a, b], None),
            Err(Error::DependentGenerators(_))
        ));
    }

    #[test]
    fn realify_tags_a_genuine_complex_structure() {
        let r = sl2_irrep(1).unwrap().realify();
        assert_eq!(r.dim_m(), 4);
        assert_eq!(r.dim_h(), 3);
        let j = r.complex_structure().unwrap();
        assert_eq!(j.mul(j), Matrix::identity(4).neg());
    }

    #[test]
    fn add_center_validates() {
        let r = sl2_irrep(1).unwrap();
        let id = Matrix::identity(2);
        let ext = r.add_center(id.clone()).unwrap();
        assert_eq!(ext.dim_h(), 4); // gl(2)
        assert!(ext.add_center(id).is_err()); // already in the span
        let h = Matrix::from_dense_i64(&[&[1, 0], &[0, -1]]);
        assert!(r.add_center(h).is_err()); // does not commute
    }

    #[test]
    fn commutant_detects_complex_type() {
        let real = families::so(3, 0).unwrap();
        assert_eq!(real.commutant().dim(), 1);
        let cx = sl2_irrep(1).unwrap().realify();
        assert!(cx.commutant().dim() >= 2);
        assert!(cx
            .commutant()
            .contains_srow(&cx.complex_structure().unwrap().vectorize()));
    }

    #[test]
    fn invariant_vectors_of_irreducibles_vanish() {
        for k in 1..=3 {
            assert!(sl2_irrep(k).unwrap().invariant_vectors().is_zero());
        }
        let padded = functors::direct_sum(&sl2_irrep(2).unwrap(), &Representation::trivial(1)).unwrap();
        assert_eq!(padded.invariant_vectors().dim(), 1);
    }

    #[test]
    fn adjoint_matrices_satisfy_jacobi() {
        // ad([a,b]) = [ad a, ad b] in generator coordinates
        let r = families::so(3, 1).unwrap();
        let d = r.dim_h();
        for a in 0..d {
            for b in 0..d {
                let lhs = r.adjoint_action(a).commutator(r.adjoint_action(b));
                // [X_a, X_b] coords = column b of adjoint[a]
                let mut coords = vec![Scalar::from_integer(0.into()); d];
                for c in 0..d {
                    coords[c] = r.adjoint_action(a).entry(c, b);
                }
                let mut rhs = Matrix::zero(d, d);
                for (c, v) in coords.iter().enumerate() {
                    if !num_traits::Zero::is_zero(v) {
                        rhs = rhs.add(&r.adjoint_action(c).scale(v));
                    }
                }
                assert_eq!(lhs, rhs);
            }
        }
    }
}
