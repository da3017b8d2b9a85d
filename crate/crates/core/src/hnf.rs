//! Row Hermite normal form over ℤ.
//!
//! Rows generate a lattice. For a full-rank lattice in ℤ^n the normal form is
//! lower triangular: row `c` ends at its positive pivot in column `c`, and the
//! entries below each pivot lie in `[0, pivot)`. The fundamental box of the
//! lattice is then `∏ [0, pivot_c)`, and its first axis is the one along
//! rational integers.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{self, floor_div};
use crate::{Error, Result};

pub type Matrix = Vec<Vec<i64>>;

fn row_sub_mul(m: &mut Matrix, target: usize, src: usize, q: i64) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    let (t, s) = if target < src {
        let (a, b) = m.split_at_mut(src);
        (&mut a[target], &b[0])
    } else {
        let (a, b) = m.split_at_mut(target);
        (&mut b[0], &a[src])
    };
    for (x, &y) in t.iter_mut().zip(s.iter()) {
        *x = arith::sub(*x, arith::mul(q, y)?)?;
    }
    Ok(())
}

/// Upper echelon form: pivots move right, entries above pivots reduced.
/// Zero rows are dropped, so the result has `rank` rows.
fn echelon_upper(mut m: Matrix, ncols: usize) -> Result<Matrix> {
    let nrows = m.len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        loop {
            // smallest nonzero entry of column c among rows r.. becomes the pivot
            let best = (r..nrows).filter(|&i| m[i][c] != 0).min_by_key(|&i| m[i][c].unsigned_abs());
            let Some(best) = best else { break };
            m.swap(r, best);
            let p = m[r][c];
            let mut done = true;
            for i in r + 1..nrows {
                if m[i][c] != 0 {
                    let q = m[i][c] / p;
                    row_sub_mul(&mut m, i, r, q)?;
                    if m[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[r][c] == 0 {
            continue;
        }
        if m[r][c] < 0 {
            for x in m[r].iter_mut() {
                *x = x.checked_neg().ok_or(Error::Overflow)?;
            }
        }
        let p = m[r][c];
        for i in 0..r {
            let q = floor_div(m[i][c], p);
            row_sub_mul(&mut m, i, r, q)?;
        }
        r += 1;
    }
    m.truncate(r);
    Ok(m)
}

/// HNF of the lattice spanned by `rows` (each of length `ncols`), with zero
/// rows dropped. A full-rank result is square and lower triangular.
pub fn hnf(m: Matrix, ncols: usize) -> Result<Matrix> {
    // the upper echelon form of the column-reversed matrix, read backwards
    let rev: Matrix = m
        .into_iter()
        .map(|mut r| {
            r.reverse();
            r
        })
        .collect();
    let mut h = echelon_upper(rev, ncols)?;
    for r in h.iter_mut() {
        r.reverse();
    }
    h.reverse();
    Ok(h)
}

/// Whether `basis` is a square lower-triangular HNF.
pub fn is_square_hnf(basis: &Matrix) -> bool {
    let n = basis.len();
    basis.iter().enumerate().all(|(i, row)| {
        row.len() == n
            && row[i] > 0
            && row[i + 1..].iter().all(|&x| x == 0)
            && (i + 1..n).all(|k| basis[k][i] >= 0 && basis[k][i] < row[i])
    })
}

/// Canonical representative of `v` modulo the lattice of a square HNF basis:
/// the unique vector congruent to `v` with `0 <= out[c] < pivot[c]`.
pub fn reduce(basis: &Matrix, v: &[i64]) -> Result<Vec<i64>> {
    let mut out = v.to_vec();
    for (c, row) in basis.iter().enumerate().rev() {
        let q = floor_div(out[c], row[c]);
        if q != 0 {
            for (x, &y) in out.iter_mut().zip(row) {
                *x = arith::sub(*x, arith::mul(q, y)?)?;
            }
        }
    }
    Ok(out)
}

/// Lattice membership for a square HNF basis.
pub fn contains(basis: &Matrix, v: &[i64]) -> Result<bool> {
    let mut out = v.to_vec();
    for (c, row) in basis.iter().enumerate().rev() {
        if out[c] % row[c] != 0 {
            return Ok(false);
        }
        let q = out[c] / row[c];
        if q != 0 {
            for (x, &y) in out.iter_mut().zip(row) {
                *x = arith::sub(*x, arith::mul(q, y)?)?;
            }
        }
    }
    Ok(out.iter().all(|&x| x == 0))
}

/// Determinant of a square HNF basis (product of pivots).
pub fn det(basis: &Matrix) -> Result<u64> {
    let mut d: u64 = 1;
    for (i, row) in basis.iter().enumerate() {
        d = d.checked_mul(row[i] as u64).ok_or(Error::Overflow)?;
    }
    Ok(d)
}

/// Intersection of two full-rank lattices in ℤ^n given by square HNF bases.
///
/// Uses the block matrix `[A A; B 0]`: vectors of its row lattice whose first
/// `n` coordinates vanish are exactly `(0, x)` with `x` in both lattices.
pub fn intersect(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let n = a.len();
    let mut big = Vec::with_capacity(2 * n);
    for row in a {
        let mut r = row.clone();
        r.extend_from_slice(row);
        big.push(r);
    }
    for row in b {
        let mut r = row.clone();
        r.extend(vec![0; n]);
        big.push(r);
    }
    let h = echelon_upper(big, 2 * n)?;
    if h.len() != 2 * n {
        return Err(Error::Internal("intersection of full-rank lattices lost rank".into()));
    }
    let tail: Matrix = h[n..].iter().map(|r| r[n..].to_vec()).collect();
    hnf(tail, n)
}
