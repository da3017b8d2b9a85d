//! Nonzero ideals of `O_K` as full-rank sublattices in Hermite normal form.

use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::arith::{factor_u64, is_prime, pow_u64};
use crate::hnf::{self, Matrix};
use crate::number_field::{FieldElement, NumberField};
use crate::poly;
use crate::{Error, Result};

/// Resource limits for enumeration and factoring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest quotient `|O_K/I|` that may be enumerated.
    pub residue_cap: u64,
    /// Trial-division bound for factoring norms.
    pub trial_division_bound: u64,
    /// Largest number of candidate polynomials tried per degree when
    /// splitting a rational prime.
    pub poly_search_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { residue_cap: 100_000, trial_division_bound: 1_000_000, poly_search_budget: 1_000_000 }
    }
}

impl Limits {
    pub fn with_residue_cap(cap: u64) -> Self {
        Limits { residue_cap: cap, ..Limits::default() }
    }

    pub(crate) fn check_residues(&self, needed: u64) -> Result<()> {
        if needed > self.residue_cap {
            return Err(Error::EnumerationCap { needed, cap: self.residue_cap });
        }
        Ok(())
    }
}

/// A nonzero ideal of `O_K`. The basis is the canonical row HNF, so two ideals
/// are equal exactly when their matrices are.
#[derive(Clone)]
pub struct IdealLattice {
    field: Arc<NumberField>,
    hnf: Matrix,
}

fn same_field(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for IdealLattice {
    fn eq(&self, other: &Self) -> bool {
        self.hnf == other.hnf && same_field(&self.field, &other.field)
    }
}

impl Eq for IdealLattice {}

impl Hash for IdealLattice {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.hnf.hash(state);
    }
}

impl PartialOrd for IdealLattice {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the HNF rows. Only meaningful within one field.
impl Ord for IdealLattice {
    fn cmp(&self, other: &Self) -> Ordering {
        self.hnf.cmp(&other.hnf)
    }
}

impl fmt::Debug for IdealLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.hnf)
    }
}

impl fmt::Display for IdealLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.hnf.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

impl IdealLattice {
    /// The ideal generated by `gens`: the ℤ-span of all `g ω_b`.
    pub fn from_generators(field: &Arc<NumberField>, gens: &[FieldElement]) -> Result<Self> {
        let n = field.degree();
        let mut rows = Vec::with_capacity(gens.len() * n);
        for g in gens {
            field.check(g)?;
            for b in 0..n {
                rows.push(field.mul(g, &field.basis_element(b))?.0);
            }
        }
        let h = hnf::hnf(rows, n)?;
        if h.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        if h.len() < n {
            // a nonzero ideal of a domain always has full rank
            return Err(Error::Internal("ideal lattice is not full rank".into()));
        }
        Ok(IdealLattice { field: field.clone(), hnf: h })
    }

    pub fn principal(field: &Arc<NumberField>, a: &FieldElement) -> Result<Self> {
        Self::from_generators(field, core::slice::from_ref(a))
    }

    /// `(k)` for a rational integer `k`.
    pub fn rational(field: &Arc<NumberField>, k: i64) -> Result<Self> {
        Self::principal(field, &field.integer(k))
    }

    pub fn unit(field: &Arc<NumberField>) -> Self {
        let n = field.degree();
        let hnf = (0..n).map(|i| field.basis_element(i).0).collect();
        IdealLattice { field: field.clone(), hnf }
    }

    /// Accepts a ℤ-basis (any generating set of rows) and checks that its span
    /// is closed under multiplication by `O_K`.
    pub fn from_basis(field: &Arc<NumberField>, rows: Matrix) -> Result<Self> {
        let n = field.degree();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: rows[0].len() });
        }
        let h = hnf::hnf(rows, n)?;
        if h.len() < n {
            return Err(if h.is_empty() {
                Error::ZeroIdeal
            } else {
                Error::Precondition("rows do not span a full-rank lattice".into())
            });
        }
        let ideal = IdealLattice { field: field.clone(), hnf: h };
        if !ideal.is_module_closed()? {
            return Err(Error::Precondition("lattice is not an O_K-ideal".into()));
        }
        Ok(ideal)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn hnf(&self) -> &Matrix {
        &self.hnf
    }

    pub fn degree(&self) -> usize {
        self.hnf.len()
    }

    /// Rows of the HNF as field elements.
    pub fn basis(&self) -> Vec<FieldElement> {
        self.hnf.iter().map(|r| FieldElement(r.clone())).collect()
    }

    /// `|O_K / I|`, the determinant of the HNF.
    pub fn norm(&self) -> u64 {
        self.hnf.iter().enumerate().map(|(i, r)| r[i] as u64).product()
    }

    /// Whether the stored basis is in canonical HNF.
    pub fn is_canonical(&self) -> bool {
        hnf::is_square_hnf(&self.hnf)
    }

    pub fn is_unit(&self) -> bool {
        self.hnf.iter().enumerate().all(|(i, r)| r[i] == 1)
    }

    pub fn contains(&self, a: &FieldElement) -> Result<bool> {
        self.field.check(a)?;
        hnf::contains(&self.hnf, &a.0)
    }

    /// Canonical representative of `a + I` in the HNF fundamental box.
    pub fn reduce(&self, a: &FieldElement) -> Result<FieldElement> {
        self.field.check(a)?;
        hnf::reduce(&self.hnf, &a.0).map(FieldElement)
    }

    /// `a ≡ b (mod I)`.
    pub fn congruent(&self, a: &FieldElement, b: &FieldElement) -> Result<bool> {
        self.contains(&self.field.sub(a, b)?)
    }

    /// Whether every `v ω_b` lies in the lattice, for HNF rows `v`.
    pub fn is_module_closed(&self) -> Result<bool> {
        for row in &self.hnf {
            let v = FieldElement(row.clone());
            for b in 0..self.field.degree() {
                let w = self.field.mul(&v, &self.field.basis_element(b))?;
                if !hnf::contains(&self.hnf, &w.0)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if !same_field(&self.field, &other.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// `I + J`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut rows = self.hnf.clone();
        rows.extend(other.hnf.iter().cloned());
        let h = hnf::hnf(rows, self.degree())?;
        Ok(IdealLattice { field: self.field.clone(), hnf: h })
    }

    /// `I J`, spanned by products of basis rows.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut rows = Vec::with_capacity(self.degree() * other.degree());
        for a in self.basis() {
            for b in other.basis() {
                rows.push(self.field.mul(&a, &b)?.0);
            }
        }
        let h = hnf::hnf(rows, self.degree())?;
        Ok(IdealLattice { field: self.field.clone(), hnf: h })
    }

    /// `I ∩ J` as a lattice intersection.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let h = hnf::intersect(&self.hnf, &other.hnf)?;
        Ok(IdealLattice { field: self.field.clone(), hnf: h })
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = IdealLattice::unit(&self.field);
        for _ in 0..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `self | other`, i.e. `other ⊆ self`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_field(other)?;
        for row in &other.hnf {
            if !hnf::contains(&self.hnf, row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Largest `e` with `P^e | I`.
    pub fn valuation(&self, p: &PrimeIdeal) -> Result<u32> {
        self.check_field(&p.ideal)?;
        let norm = self.norm();
        let mut e = 0;
        let mut power = p.ideal.clone();
        while power.norm() <= norm && power.divides(self)? {
            e += 1;
            power = power.product(&p.ideal)?;
        }
        Ok(e)
    }

    /// Prime factorization, canonically ordered.
    pub fn factor(&self, limits: &Limits) -> Result<Factorization> {
        let mut factors = Vec::new();
        for (p, _) in factor_u64(self.norm(), limits.trial_division_bound)? {
            for prime in primes_above(&self.field, p, limits)? {
                let e = self.valuation(&prime)?;
                if e > 0 {
                    factors.push((prime, e));
                }
            }
        }
        let fact = Factorization { field: self.field.clone(), factors };
        if fact.product()? != *self {
            return Err(Error::Internal("factorization does not reconstruct the ideal".into()));
        }
        Ok(fact)
    }

    /// `G(I)`: the largest `N(P^e)` over prime powers exactly dividing `I`;
    /// 1 for the unit ideal.
    pub fn big_g(&self, limits: &Limits) -> Result<u64> {
        self.factor(limits)?.big_g()
    }

    /// Complete residue system of `O_K / I`: every vector in the HNF box
    /// `0 <= v_c < pivot_c`, in lexicographic order. Starts with 0.
    pub fn residues(&self, limits: &Limits) -> Result<Vec<FieldElement>> {
        let n = self.norm();
        limits.check_residues(n)?;
        Ok((0..n).map(|idx| self.residue_at(idx)).collect())
    }

    /// The `idx`-th residue in the order of [`IdealLattice::residues`].
    pub fn residue_at(&self, mut idx: u64) -> FieldElement {
        let d = self.degree();
        let mut v = vec![0i64; d];
        for c in (0..d).rev() {
            let p = self.hnf[c][c] as u64;
            v[c] = (idx % p) as i64;
            idx /= p;
        }
        FieldElement(v)
    }

    /// Position of an already reduced element in the residue order.
    pub fn residue_index(&self, reduced: &FieldElement) -> u64 {
        reduced.0.iter().enumerate().fold(0u64, |acc, (c, &x)| acc * self.hnf[c][c] as u64 + x as u64)
    }
}

/// A nonzero prime ideal `P` lying over the rational prime `p`, with
/// `N(P) = p^f`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeIdeal {
    pub ideal: IdealLattice,
    pub residue_char: u64,
    pub residue_deg: u32,
}

impl PrimeIdeal {
    pub fn norm(&self) -> u64 {
        self.ideal.norm()
    }
}

impl fmt::Debug for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Prime(p={}, f={}, {:?})", self.residue_char, self.residue_deg, self.ideal)
    }
}

impl PartialOrd for PrimeIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: residue characteristic, then HNF.
impl Ord for PrimeIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.residue_char, &self.ideal).cmp(&(other.residue_char, &other.ideal))
    }
}

/// Splits `(p)` into prime ideals with ramification exponents.
///
/// For a candidate generator `θ` taken from the integral basis, the
/// characteristic polynomial of `θ` is factored mod `p` and each monic
/// irreducible factor `g` yields `Q = (p, g(θ))`. The result is accepted only
/// when every `Q` has norm `p^{deg g}` (then `O_K/Q` equals the field
/// `F_p[θ̄]`, so `Q` is prime), the `Q` are distinct, and `∏ Q^e = (p)`.
/// When no candidate passes, the prime is reported as unsupported.
pub fn decompose_prime(field: &Arc<NumberField>, p: u64, limits: &Limits) -> Result<Vec<(PrimeIdeal, u32)>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pi = i64::try_from(p).map_err(|_| Error::Overflow)?;
    let n = field.degree();
    let mut candidates: Vec<FieldElement> = (1..n).map(|i| field.basis_element(i)).collect();
    if n > 2 {
        let all = (1..n).try_fold(field.zero(), |acc, i| field.add(&acc, &field.basis_element(i)))?;
        candidates.push(all);
    }
    if n == 1 {
        candidates.push(field.one());
    }
    let p_ideal = IdealLattice::rational(field, pi)?;
    'candidates: for theta in candidates {
        let cp = poly::charpoly(&field.mul_matrix(&theta)?)?;
        let factors = poly::factor_mod_p(&poly::reduce_mod_p(&cp, p), p, limits.poly_search_budget)?;
        let mut primes: Vec<(PrimeIdeal, u32)> = Vec::with_capacity(factors.len());
        for (g, e) in factors {
            let f = (g.len() - 1) as u32;
            let mut g_theta = field.zero();
            let mut power = field.one();
            for &c in &g {
                g_theta = field.add(&g_theta, &field.scale(c as i64, &power)?)?;
                power = field.mul(&power, &theta)?;
            }
            let q = IdealLattice::from_generators(field, &[field.integer(pi), g_theta])?;
            if q.norm() != pow_u64(p, f)? {
                continue 'candidates;
            }
            primes.push((PrimeIdeal { ideal: q, residue_char: p, residue_deg: f }, e));
        }
        for i in 0..primes.len() {
            for j in i + 1..primes.len() {
                if primes[i].0 == primes[j].0 {
                    continue 'candidates;
                }
            }
        }
        let mut prod = IdealLattice::unit(field);
        for (q, e) in &primes {
            prod = prod.product(&q.ideal.pow(*e)?)?;
        }
        if prod != p_ideal {
            continue;
        }
        primes.sort();
        return Ok(primes);
    }
    Err(Error::UnsupportedPrime { p, reason: "no basis element certifies the decomposition".to_string() })
}

/// The distinct prime ideals above `p`, canonically ordered.
pub fn primes_above(field: &Arc<NumberField>, p: u64, limits: &Limits) -> Result<Vec<PrimeIdeal>> {
    Ok(decompose_prime(field, p, limits)?.into_iter().map(|(q, _)| q).collect())
}

/// `I = ∏ P_j^{r_j}` with distinct primes in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    field: Arc<NumberField>,
    factors: Vec<(PrimeIdeal, u32)>,
}

impl Factorization {
    /// Builds a factorization from prime powers, merging repeats and dropping
    /// zero exponents.
    pub fn from_factors(field: &Arc<NumberField>, mut factors: Vec<(PrimeIdeal, u32)>) -> Self {
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(PrimeIdeal, u32)> = Vec::with_capacity(factors.len());
        for (p, e) in factors {
            match merged.last_mut() {
                Some((q, f)) if *q == p => *f += e,
                _ => merged.push((p, e)),
            }
        }
        merged.retain(|(_, e)| *e > 0);
        Factorization { field: field.clone(), factors: merged }
    }

    pub fn factors(&self) -> &[(PrimeIdeal, u32)] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn primes(&self) -> impl Iterator<Item = &PrimeIdeal> {
        self.factors.iter().map(|(p, _)| p)
    }

    /// Exponent of `p`, zero when absent.
    pub fn exponent(&self, p: &PrimeIdeal) -> u32 {
        self.factors.iter().find(|(q, _)| q == p).map_or(0, |(_, e)| *e)
    }

    pub fn product(&self) -> Result<IdealLattice> {
        let mut acc = IdealLattice::unit(&self.field);
        for (p, e) in &self.factors {
            acc = acc.product(&p.ideal.pow(*e)?)?;
        }
        Ok(acc)
    }

    pub fn norm(&self) -> Result<u64> {
        self.factors.iter().try_fold(1u64, |acc, (p, e)| acc.checked_mul(pow_u64(p.norm(), *e)?).ok_or(Error::Overflow))
    }

    pub fn big_g(&self) -> Result<u64> {
        self.factors.iter().try_fold(1u64, |acc, (p, e)| Ok(acc.max(pow_u64(p.norm(), *e)?)))
    }

    /// `self / (self + other)`: exponents `v - min(v, w)`.
    pub fn quotient_by_sum(&self, other: &Factorization) -> Factorization {
        let factors = self.factors.iter().map(|(p, v)| (p.clone(), v - (*v).min(other.exponent(p)))).collect();
        Factorization::from_factors(&self.field, factors)
    }

    /// Smallest prime norm, `None` for the unit ideal.
    pub fn min_prime_norm(&self) -> Option<u64> {
        self.factors.iter().map(|(p, _)| p.norm()).min()
    }
}

/// Norm of an element, as the determinant of the principal ideal (absolute
/// value of the field norm).
pub fn element_norm(field: &Arc<NumberField>, a: &FieldElement) -> Result<u64> {
    if a.is_zero() {
        return Ok(0);
    }
    let h = hnf::hnf(field.mul_matrix(a)?, field.degree())?;
    hnf::det(&h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(v: &[i64]) -> FieldElement {
        FieldElement(v.to_vec())
    }

    fn zz() -> Arc<NumberField> {
        Arc::new(NumberField::rationals())
    }

    fn quad(d: i64) -> Arc<NumberField> {
        Arc::new(NumberField::quadratic(d).unwrap())
    }

    /// Counts residue classes by brute force: pairwise congruence tests over
    /// the box `[0, 2N)^n`, independent of the HNF enumeration.
    fn count_residues_oracle(i: &IdealLattice) -> usize {
        let n = i.degree();
        let bound = 2 * i.norm() as i64;
        let total = (bound as u64).pow(n as u32);
        let mut classes: Vec<FieldElement> = Vec::new();
        for mut idx in 0..total {
            let mut v = vec![0i64; n];
            for c in v.iter_mut() {
                *c = (idx % bound as u64) as i64;
                idx /= bound as u64;
            }
            let v = el(&v);
            if !classes.iter().any(|w| i.congruent(&v, w).unwrap()) {
                classes.push(v);
            }
        }
        classes.len()
    }

    #[test]
    fn generators_integers() {
        let f = zz();
        let i = IdealLattice::from_generators(&f, &[el(&[6]), el(&[8])]).unwrap();
        assert_eq!(i, IdealLattice::rational(&f, 2).unwrap());
        assert_eq!(IdealLattice::from_generators(&f, &[el(&[0])]), Err(Error::ZeroIdeal));
    }

    #[test]
    fn gaussian_one_plus_i() {
        let f = quad(-1);
        let i = IdealLattice::principal(&f, &el(&[1, 1])).unwrap();
        assert_eq!(i.norm(), 2);
        assert_eq!(i.hnf(), &vec![vec![2, 0], vec![1, 1]]);
        assert_eq!(count_residues_oracle(&i), 2);
        assert_eq!(i.product(&i).unwrap(), IdealLattice::rational(&f, 2).unwrap());
        assert!(i.is_module_closed().unwrap());
    }

    #[test]
    fn sqrt_minus_five_ramified_prime() {
        let f = quad(-5);
        let p2 = IdealLattice::from_generators(&f, &[el(&[2, 0]), el(&[1, 1])]).unwrap();
        assert_eq!(p2.norm(), 2);
        assert_eq!(count_residues_oracle(&p2), 2);
        let two = IdealLattice::rational(&f, 2).unwrap();
        assert_eq!(p2.product(&p2).unwrap(), two);
        assert!(p2.divides(&two).unwrap());
        // not principal: no element has norm 2 (a² + 5b² = 2 is impossible)
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                assert_ne!(a * a + 5 * b * b, 2);
            }
        }
    }

    #[test]
    fn norms() {
        let f = zz();
        assert_eq!(IdealLattice::rational(&f, 12).unwrap().norm(), 12);
        for f in [zz(), quad(-1), quad(-5), quad(2), quad(-3)] {
            assert_eq!(IdealLattice::unit(&f).norm(), 1);
            assert!(IdealLattice::unit(&f).is_unit());
        }
        let g = quad(-1);
        assert_eq!(IdealLattice::rational(&g, 3).unwrap().norm(), 9);
    }

    #[test]
    fn sum_product_intersection_integers() {
        let f = zz();
        let a = IdealLattice::rational(&f, 12).unwrap();
        let b = IdealLattice::rational(&f, 8).unwrap();
        assert_eq!(a.sum(&b).unwrap(), IdealLattice::rational(&f, 4).unwrap());
        assert_eq!(a.intersect(&b).unwrap(), IdealLattice::rational(&f, 24).unwrap());
        assert_eq!(a.product(&b).unwrap(), IdealLattice::rational(&f, 96).unwrap());
    }

    #[test]
    fn field_mismatch() {
        let a = IdealLattice::rational(&quad(-1), 2).unwrap();
        let b = IdealLattice::rational(&quad(-5), 2).unwrap();
        assert_eq!(a.sum(&b), Err(Error::FieldMismatch));
        assert_eq!(a.divides(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn divisibility() {
        let f = zz();
        let four = IdealLattice::rational(&f, 4).unwrap();
        let eight = IdealLattice::rational(&f, 8).unwrap();
        assert!(four.divides(&eight).unwrap());
        assert!(!eight.divides(&four).unwrap());
    }

    #[test]
    fn primes_in_gaussian_integers() {
        let f = quad(-1);
        let l = Limits::default();
        let five = decompose_prime(&f, 5, &l).unwrap();
        assert_eq!(five.len(), 2);
        assert!(five.iter().all(|(p, e)| p.norm() == 5 && *e == 1));
        let three = decompose_prime(&f, 3, &l).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].0.norm(), 9);
        assert_eq!(three[0].0.residue_deg, 2);
        let two = decompose_prime(&f, 2, &l).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].1, 2);
        assert_eq!(two[0].0.ideal, IdealLattice::principal(&f, &el(&[1, 1])).unwrap());
        assert_eq!(decompose_prime(&f, 6, &l), Err(Error::NotPrime(6)));
    }

    #[test]
    fn prime_quotients_have_no_zero_divisors() {
        let l = Limits::default();
        for f in [zz(), quad(-1), quad(-5), quad(2), quad(-3)] {
            for p in [2, 3, 5, 7] {
                for prime in primes_above(&f, p, &l).unwrap() {
                    let res = prime.ideal.residues(&l).unwrap();
                    for a in &res[1..] {
                        for b in &res[1..] {
                            let ab = f.mul(a, b).unwrap();
                            assert!(!prime.ideal.contains(&ab).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn factor_examples() {
        let l = Limits::default();
        let f = zz();
        let fac = IdealLattice::rational(&f, 24).unwrap().factor(&l).unwrap();
        let shape: Vec<_> = fac.factors().iter().map(|(p, e)| (p.norm(), *e)).collect();
        assert_eq!(shape, [(2, 3), (3, 1)]);

        let g = quad(-1);
        let fac = IdealLattice::rational(&g, 2).unwrap().factor(&l).unwrap();
        assert_eq!(fac.len(), 1);
        assert_eq!(fac.factors()[0].1, 2);

        let h = quad(-5);
        let fac = IdealLattice::rational(&h, 6).unwrap().factor(&l).unwrap();
        let shape: Vec<_> = fac.factors().iter().map(|(p, e)| (p.norm(), *e)).collect();
        assert_eq!(shape, [(2, 2), (3, 1), (3, 1)]);
        assert_eq!(fac.product().unwrap(), IdealLattice::rational(&h, 6).unwrap());
        assert!(IdealLattice::unit(&h).factor(&l).unwrap().is_empty());
    }

    #[test]
    fn valuations() {
        let l = Limits::default();
        let f = zz();
        let i24 = IdealLattice::rational(&f, 24).unwrap();
        let p2 = &primes_above(&f, 2, &l).unwrap()[0];
        let p5 = &primes_above(&f, 5, &l).unwrap()[0];
        assert_eq!(i24.valuation(p2).unwrap(), 3);
        assert_eq!(i24.valuation(p5).unwrap(), 0);
        let g = quad(-1);
        let pi = &primes_above(&g, 2, &l).unwrap()[0];
        assert_eq!(IdealLattice::rational(&g, 2).unwrap().valuation(pi).unwrap(), 2);
    }

    #[test]
    fn big_g_examples() {
        let l = Limits::default();
        assert_eq!(IdealLattice::rational(&zz(), 12).unwrap().big_g(&l).unwrap(), 4);
        assert_eq!(IdealLattice::unit(&quad(-5)).big_g(&l).unwrap(), 1);
        assert_eq!(IdealLattice::rational(&quad(-1), 2).unwrap().big_g(&l).unwrap(), 4);
    }

    #[test]
    fn residue_enumeration() {
        let l = Limits::default();
        let f = zz();
        let four = IdealLattice::rational(&f, 4).unwrap();
        assert_eq!(four.residues(&l).unwrap(), [el(&[0]), el(&[1]), el(&[2]), el(&[3])]);
        assert_eq!(four.reduce(&el(&[7])).unwrap(), el(&[3]));
        assert_eq!(four.reduce(&el(&[-1])).unwrap(), el(&[3]));

        let g = quad(-1);
        let two = IdealLattice::rational(&g, 2).unwrap();
        let res = two.residues(&l).unwrap();
        assert_eq!(res, [el(&[0, 0]), el(&[0, 1]), el(&[1, 0]), el(&[1, 1])]);
        let pi = IdealLattice::principal(&g, &el(&[1, 1])).unwrap();
        assert_eq!(pi.residues(&l).unwrap(), [el(&[0, 0]), el(&[1, 0])]);
        for (k, r) in res.iter().enumerate() {
            assert_eq!(two.residue_index(r), k as u64);
        }
        let big = IdealLattice::rational(&g, 400).unwrap();
        assert!(matches!(big.residues(&l), Err(Error::EnumerationCap { needed: 160000, .. })));
    }

    #[test]
    fn cubic_field_generic_path() {
        let t = vec![
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![2, 0, 0]],
            vec![vec![0, 0, 1], vec![2, 0, 0], vec![0, 2, 0]],
        ];
        let labels = vec!["1".into(), "t".into(), "t^2".into()];
        let f = Arc::new(NumberField::from_table(labels, t).unwrap());
        let l = Limits::default();
        let five = decompose_prime(&f, 5, &l).unwrap();
        let mut norms: Vec<_> = five.iter().map(|(p, e)| (p.norm(), *e)).collect();
        norms.sort();
        assert_eq!(norms, [(5, 1), (25, 1)]);
        let two = decompose_prime(&f, 2, &l).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!((two[0].0.norm(), two[0].1), (2, 3));
        let three = decompose_prime(&f, 3, &l).unwrap();
        assert_eq!((three[0].0.norm(), three[0].1), (3, 3));
        let i = IdealLattice::rational(&f, 30).unwrap();
        let fac = i.factor(&l).unwrap();
        assert_eq!(fac.product().unwrap(), i);
    }

    #[test]
    fn element_norms() {
        let g = quad(-1);
        assert_eq!(element_norm(&g, &el(&[1, 1])).unwrap(), 2);
        assert_eq!(element_norm(&g, &el(&[3, 4])).unwrap(), 25);
    }
}
