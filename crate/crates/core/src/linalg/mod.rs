//! Exact rational linear algebra.
//!
//! Everything downstream (Spencer differentials, curvature spaces, Cartan
//! characters) is a statement about dimensions and canonical subspaces over
//! the rationals, so this module provides exact kernels, images, ranks and a
//! canonical reduced-row-echelon representation for subspaces.  There is no
//! floating point anywhere in the crate.

pub mod elim;
pub mod linmap;
pub mod matrix;
pub mod modular;
pub mod subspace;

pub use linmap::LinearMap;
pub use matrix::Matrix;
pub use subspace::{SpanSolver, Subspace};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;

/// Exact rational scalar.  Always stored in lowest terms with a positive
/// denominator (guaranteed by `num_rational`).
pub type Scalar = BigRational;

/// Sparse row: `(column, value)` pairs sorted by column, no explicit zeros.
pub type SRow = Vec<(usize, Scalar)>;

/// Sparse integer row, same conventions as [`SRow`].
pub type IRow = Vec<(usize, Int)>;

pub fn sc(v: i64) -> Scalar {
    Scalar::from_integer(Int::from(v))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(Int::from(n), Int::from(d))
}

pub fn srow_from_dense(v: &[Scalar]) -> SRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn srow_to_dense(row: &[(usize, Scalar)], len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::from_integer(Int::from(0)); len];
    for (c, v) in row {
        out[*c] = v.clone();
    }
    out
}

/// Clears denominators and strips the content of a rational row, giving a
/// primitive integer row spanning the same line.  The empty row maps to the
/// empty row.
pub fn srow_to_primitive(row: &[(usize, Scalar)]) -> IRow {
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    if row.is_empty() {
        return Vec::new();
    }
    let mut lcm = Int::one();
    for (_, v) in row {
        lcm = lcm.lcm(v.denom());
    }
    let mut out: IRow = row
        .iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    let mut g = Int::zero();
    for (_, v) in &out {
        g = g.gcd(v);
    }
    if out[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in &mut out {
            *v /= &g;
        }
    }
    out
}
