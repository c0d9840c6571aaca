//! Integer octonion arithmetic: the multiplication table on the basis
//! `1, e1, …, e7` and the left/right multiplication operators on `Q^8`.
//!
//! The seven oriented lines used here are the cyclic convention
//! `(1,2,4), (2,3,5), (3,4,6), (4,5,7), (5,6,1), (6,7,2), (7,1,3)`.
//! Left multiplications by distinct imaginary units anticommute and square
//! to `−1`, which is exactly what the spin constructions downstream need,
//! and the associated 3-form on the imaginary part has all coefficients
//! `±1`.

use crate::linalg::{sc, Matrix};

const LINES: [[usize; 3]; 7] = [
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 6],
    [4, 5, 7],
    [5, 6, 1],
    [6, 7, 2],
    [7, 1, 3],
];

/// `table[i][j] = (sign, k)` with `e_i · e_j = sign · e_k` (basis index 0 is
/// the unit).
pub fn table() -> [[(i8, usize); 8]; 8] {
    let mut t = [[(0i8, 0usize); 8]; 8];
    for i in 0..8 {
        t[0][i] = (1, i);
        t[i][0] = (1, i);
    }
    for i in 1..8 {
        t[i][i] = (-1, 0);
    }
    for line in LINES {
        let [a, b, c] = line;
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            t[x][y] = (1, z);
            t[y][x] = (-1, z);
        }
    }
    t
}

/// Matrix of `x ↦ e_a · x` on `Q^8`.
pub fn left_mult(a: usize) -> Matrix {
    let t = table();
    Matrix::from_triplets(
        8,
        8,
        (0..8).map(|j| {
            let (s, k) = t[a][j];
            (k, j, sc(s as i64))
        }),
    )
}

/// Matrix of `x ↦ x · e_a` on `Q^8`.
pub fn right_mult(a: usize) -> Matrix {
    let t = table();
    Matrix::from_triplets(
        8,
        8,
        (0..8).map(|j| {
            let (s, k) = t[j][a];
            (k, j, sc(s as i64))
        }),
    )
}

/// Matrix of `x ↦ x · ē_a` (conjugate of the basis unit).
pub fn right_mult_conj(a: usize) -> Matrix {
    if a == 0 {
        right_mult(0)
    } else {
        right_mult(a).neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn imaginary_left_multiplications_are_clifford() {
        for a in 1..8 {
            for b in 1..8 {
                let la = left_mult(a);
                let lb = left_mult(b);
                let anti = la.mul(&lb).add(&lb.mul(&la));
                if a == b {
                    assert_eq!(anti, Matrix::identity(8).scale(&crate::linalg::sc(-2)));
                } else {
                    assert!(anti.is_zero(), "L_{a} and L_{b} must anticommute");
                }
            }
        }
    }

    #[test]
    fn right_conjugate_multiplication_inverts() {
        // x ↦ (x·ē_a)·e_a is the identity for unit basis octonions
        for a in 0..8 {
            let m = right_mult(a).mul(&right_mult_conj(a));
            assert_eq!(m, Matrix::identity(8));
        }
    }

    #[test]
    fn table_is_a_composition_table_on_lines() {
        let t = table();
        // each ordered pair of distinct imaginary units occurs in exactly
        // one line, with e_a e_b = −e_b e_a
        for a in 1..8 {
            for b in 1..8 {
                if a == b {
                    continue;
                }
                let (s1, k1) = t[a][b];
                let (s2, k2) = t[b][a];
                assert_eq!(k1, k2);
                assert_eq!(s1, -s2);
                assert_ne!(k1, 0);
            }
        }
    }
}
