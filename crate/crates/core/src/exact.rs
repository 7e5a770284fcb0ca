//! Small dense exact linear algebra over `BigRational`.
//!
//! Matrices here are tiny (Picard rank rarely exceeds a handful), so plain
//! `Vec<Vec<_>>` with cofactor-free Gaussian elimination is all we need.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

pub fn to_rational_matrix(m: &[Vec<BigInt>]) -> Vec<Vec<Rat>> {
    m.iter().map(|row| row.iter().map(rat).collect()).collect()
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix, computed by
/// symmetric congruence diagonalization (Sylvester's law of inertia).
pub fn inertia(m: &[Vec<BigInt>]) -> (usize, usize, usize) {
    let n = m.len();
    let mut a = to_rational_matrix(m);
    let (mut pos, mut neg, mut zero) = (0, 0, 0);

    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // e_k <- e_k + e_j makes the pivot 2 a_kj + a_jj = 2 a_kj.
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            } else {
                zero += 1;
                continue;
            }
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for c in 0..n {
                let v = &f * &a[k][c];
                a[i][c] -= v;
            }
            for r in 0..n {
                let v = &f * &a[r][k];
                a[r][i] -= v;
            }
        }
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    (pos, neg, zero)
}

/// `A = L D Lᵀ` for a symmetric positive definite matrix. Returns the strictly
/// lower entries of `L` (as `l[i][j]`, `j < i`) and the diagonal `D`, or `None`
/// if some pivot is not positive.
pub fn ldl_positive(m: &[Vec<Rat>]) -> Option<(Vec<Vec<Rat>>, Vec<Rat>)> {
    let n = m.len();
    let mut l = vec![vec![Rat::zero(); n]; n];
    let mut d = vec![Rat::zero(); n];
    for i in 0..n {
        for j in 0..i {
            let mut s = m[i][j].clone();
            for k in 0..j {
                s -= &l[i][k] * &l[j][k] * &d[k];
            }
            l[i][j] = s / &d[j];
        }
        let mut s = m[i][i].clone();
        for k in 0..i {
            s -= &l[i][k] * &l[i][k] * &d[k];
        }
        if !s.is_positive() {
            return None;
        }
        d[i] = s;
        l[i][i] = Rat::one();
    }
    Some((l, d))
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn inverse(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for v in a[c].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            for k in 0..2 * n {
                let v = &f * &a[c][k];
                a[r][k] -= v;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// `⌊√r⌋` for a non-negative rational.
pub fn floor_sqrt(r: &Rat) -> BigInt {
    assert!(!r.is_negative(), "floor_sqrt of a negative number");
    // ⌊√x⌋ = ⌊√⌊x⌋⌋ for x ≥ 0.
    r.floor().to_integer().sqrt()
}

/// Largest integer `x` with `x ≤ c + √r` (`r ≥ 0`), decided exactly.
pub fn floor_add_sqrt(c: &Rat, r: &Rat) -> BigInt {
    let fits = |x: &BigInt| {
        let t = rat(x) - c;
        !t.is_positive() || &t * &t <= *r
    };
    let mut x = c.floor().to_integer() + floor_sqrt(r) + 2;
    while !fits(&x) {
        x -= 1;
    }
    x
}

/// Smallest integer `x` with `x ≥ c − √r`.
pub fn ceil_sub_sqrt(c: &Rat, r: &Rat) -> BigInt {
    -floor_add_sqrt(&-c, r)
}
