//! Integer kernels by unimodular column reduction.

use crate::error::{Error, Result};

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    // returns (g, x, y) with a x + b y = g >= 0
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

const LIMIT: i128 = 1 << 100;

fn checked(v: i128) -> Result<i128> {
    if v.abs() > LIMIT {
        Err(Error::Overflow("integer kernel"))
    } else {
        Ok(v)
    }
}

/// Basis of `{ w in Z^N : M w = 0 }` for an integer matrix `M` given by rows.
///
/// Column operations bring `M` to lower echelon form `M U = [H | 0]` with
/// `U` unimodular; the columns of `U` facing the zero block span the kernel.
/// The basis is then size-reduced pairwise.
pub fn integer_kernel(rows: &[Vec<i64>], ncols: usize) -> Result<Vec<Vec<i64>>> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            if r.len() != ncols {
                Err(Error::DimensionMismatch {
                    expected: ncols,
                    got: r.len(),
                })
            } else {
                Ok(r.iter().map(|&x| x as i128).collect())
            }
        })
        .collect::<Result<_>>()?;
    // u[c] is column c of the transform
    let mut u: Vec<Vec<i128>> = (0..ncols)
        .map(|c| (0..ncols).map(|r| i128::from(r == c)).collect())
        .collect();

    let mut pivot = 0;
    for row in 0..a.len() {
        if pivot == ncols {
            break;
        }
        for c in pivot + 1..ncols {
            let (p, q) = (a[row][pivot], a[row][c]);
            if q == 0 {
                continue;
            }
            let (g, x, y) = ext_gcd(p, q);
            let (pg, qg) = (p / g, q / g);
            // [col_p, col_c] <- [x col_p + y col_c, qg col_p - pg col_c]
            for r in a.iter_mut() {
                let (vp, vc) = (r[pivot], r[c]);
                r[pivot] = checked(x * vp + y * vc)?;
                r[c] = checked(qg * vp - pg * vc)?;
            }
            let (cp, cc) = (u[pivot].clone(), u[c].clone());
            for k in 0..ncols {
                u[pivot][k] = checked(x * cp[k] + y * cc[k])?;
                u[c][k] = checked(qg * cp[k] - pg * cc[k])?;
            }
        }
        if a[row][pivot] != 0 {
            pivot += 1;
        }
    }

    let mut basis: Vec<Vec<i128>> = u.drain(pivot..).collect();
    size_reduce(&mut basis);
    basis
        .into_iter()
        .map(|v| {
            v.into_iter()
                .map(|x| i64::try_from(x).map_err(|_| Error::Overflow("integer kernel")))
                .collect()
        })
        .collect()
}

fn norm2(v: &[i128]) -> i128 {
    v.iter().map(|x| x * x).sum()
}

/// Greedy pairwise reduction `v_i <- v_i - k v_j`; keeps the lattice spanned.
fn size_reduce(basis: &mut [Vec<i128>]) {
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                let nj = norm2(&basis[j]);
                if nj == 0 {
                    continue;
                }
                let dot: i128 = basis[i].iter().zip(&basis[j]).map(|(a, b)| a * b).sum();
                // nearest integer to dot / nj
                let k = (2 * dot + nj).div_euclid(2 * nj);
                if k == 0 {
                    continue;
                }
                let cand: Vec<i128> = basis[i].iter().zip(&basis[j]).map(|(a, b)| a - k * b).collect();
                if norm2(&cand) < norm2(&basis[i]) {
                    basis[i] = cand;
                    changed = true;
                }
            }
        }
    }
}
