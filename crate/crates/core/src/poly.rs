//! Small dense polynomials, enough to split a characteristic polynomial mod p.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::{Error, Result};

/// Coefficients, constant term first.
pub type Poly = Vec<u64>;

/// Characteristic polynomial `det(xI - A)` of an integer matrix, monic,
/// constant term first. Faddeev-LeVerrier; all divisions are exact.
pub fn charpoly(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = a.len();
    let mut coeffs = vec![0i64; n + 1];
    coeffs[n] = 1;
    let mut m = vec![vec![0i64; n]; n];
    for k in 1..=n {
        // m <- a*m + c_{n-k+1} I
        let mut next = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0i64;
                for t in 0..n {
                    s = arith::mul_add(s, a[i][t], m[t][j])?;
                }
                next[i][j] = s;
            }
            next[i][i] = arith::add(next[i][i], coeffs[n - k + 1])?;
        }
        m = next;
        let mut tr = 0i64;
        for i in 0..n {
            for t in 0..n {
                tr = arith::mul_add(tr, a[i][t], m[t][i])?;
            }
        }
        if tr % k as i64 != 0 {
            return Err(Error::Internal("inexact division in charpoly".into()));
        }
        coeffs[n - k] = -(tr / k as i64);
    }
    Ok(coeffs)
}

fn trim(f: &mut Poly) {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Remainder and quotient of `f` by a monic `g` over F_p.
fn divrem_monic(f: &Poly, g: &Poly, p: u64) -> (Poly, Poly) {
    let mut r = f.clone();
    trim(&mut r);
    let dg = g.len() - 1;
    if r.len() <= dg {
        return (vec![0], r);
    }
    let mut q = vec![0u64; r.len() - dg];
    for i in (0..q.len()).rev() {
        let c = r[i + dg];
        q[i] = c;
        if c != 0 {
            for (k, &gk) in g.iter().enumerate() {
                r[i + k] = (r[i + k] + p - mulmod(c, gk, p)) % p;
            }
        }
    }
    r.truncate(dg.max(1));
    trim(&mut r);
    (q, r)
}

/// Monic irreducible factors of the monic `f` over F_p with multiplicities,
/// by trial division against monic polynomials of increasing degree.
///
/// Fails when the search space `p^d` for some needed degree exceeds `budget`.
pub fn factor_mod_p(f: &Poly, p: u64, budget: u64) -> Result<Vec<(Poly, u32)>> {
    let mut f = f.clone();
    trim(&mut f);
    let mut out = Vec::new();
    let mut d = 1usize;
    while f.len() > 2 * d {
        let count = arith::pow_u64(p, d as u32)
            .ok()
            .filter(|&c| c <= budget)
            .ok_or_else(|| Error::UnsupportedPrime { p, reason: "polynomial factor search too large".into() })?;
        for idx in 0..count {
            // monic g of degree d whose low coefficients are the base-p digits of idx
            let mut g = vec![0u64; d + 1];
            let mut x = idx;
            for c in g.iter_mut().take(d) {
                *c = x % p;
                x /= p;
            }
            g[d] = 1;
            let mut e = 0;
            loop {
                let (q, r) = divrem_monic(&f, &g, p);
                if r.iter().any(|&c| c != 0) {
                    break;
                }
                f = q;
                e += 1;
            }
            if e > 0 {
                out.push((g, e));
            }
            if f.len() - 1 < 2 * d {
                break;
            }
        }
        d += 1;
    }
    if f.len() > 1 {
        out.push((f, 1));
    }
    Ok(out)
}

/// Reduces integer coefficients mod p into `[0, p)`.
pub fn reduce_mod_p(f: &[i64], p: u64) -> Poly {
    f.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect()
}
