//! Residue systems, uniformizers and digit expansions modulo prime powers,
//! and the two CRT maps from `O_K/I` onto integer boxes.
//!
//! Fix `I = ∏ P_j^{r_j}`. For each prime we take the canonical residue system
//! `B_j` of `O_K/P_j` (with `0` first) and a uniformizer `t_j ∈ P_j \ P_j²`.
//! Every class mod `P_j^{r_j}` has a unique expansion `Σ_k γ_k t_j^k` with
//! `γ_k ∈ B_j`. Writing digits by their index in `B_j`:
//!
//! * [`CrtContext::map_f`] concatenates the digit vectors of all primes, a
//!   point of the box with side lengths `N(P_1)` (`r_1` times), …,
//! * [`CrtContext::map_f_bar`] packs prime `j`'s digits into one integer
//!   `Σ_k γ_k N(P_j)^{r_j-1-k}`, a point of the box `∏ [0, N(P_j)^{r_j})`.
//!
//! Digits are found by table lookup: all `N(P)^r` digit sums are evaluated
//! once and keyed by their canonical residue mod `P^r`. A collision while
//! building the table would mean the sums do not form a complete residue
//! system, and is reported as an internal error.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::pow_u64;
use crate::ideal::{Factorization, IdealLattice, Limits, PrimeIdeal};
use crate::number_field::FieldElement;
use crate::{Error, Result};

/// A point of an integer box `∏ [0, b_i)`.
pub type LatticePoint = Vec<u64>;

/// Complete residues of `O_K/P` in canonical order, `0` first.
#[derive(Debug, Clone)]
pub struct ResidueSystem {
    prime: PrimeIdeal,
    reps: Vec<FieldElement>,
}

impl ResidueSystem {
    pub fn build(prime: &PrimeIdeal, limits: &Limits) -> Result<Self> {
        let reps = prime.ideal.residues(limits)?;
        debug_assert!(reps[0].is_zero());
        Ok(ResidueSystem { prime: prime.clone(), reps })
    }

    pub fn prime(&self) -> &PrimeIdeal {
        &self.prime
    }

    pub fn reps(&self) -> &[FieldElement] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the representative congruent to `a` mod `P`.
    pub fn index_of(&self, a: &FieldElement) -> Result<usize> {
        let r = self.prime.ideal.reduce(a)?;
        Ok(self.prime.ideal.residue_index(&r) as usize)
    }
}

/// An element `t ∈ P \ P²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Uniformizer {
    pub prime: PrimeIdeal,
    pub t: FieldElement,
}

impl Uniformizer {
    /// The first HNF basis row of `P` not lying in `P²`. Some row always
    /// qualifies, since the rows span `P` and `P ≠ P²`.
    pub fn find(prime: &PrimeIdeal) -> Result<Self> {
        let sq = prime.ideal.pow(2)?;
        for t in prime.ideal.basis() {
            if !sq.contains(&t)? {
                return Ok(Uniformizer { prime: prime.clone(), t });
            }
        }
        Err(Error::Internal("every basis row of P lies in P^2".into()))
    }

    /// Validates a caller-chosen uniformizer.
    pub fn new(prime: &PrimeIdeal, t: FieldElement) -> Result<Self> {
        if !prime.ideal.contains(&t)? || prime.ideal.pow(2)?.contains(&t)? {
            return Err(Error::Precondition(format!("{t} is not in P \\ P^2")));
        }
        Ok(Uniformizer { prime: prime.clone(), t })
    }
}

/// Digits `γ_0, …, γ_{r-1}` (indices into the residue system) of an element
/// modulo `P_j^{r_j}`, where `j` is the prime's position in the context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitExpansion {
    pub prime_index: usize,
    pub digits: Vec<u64>,
}

#[derive(Debug, Clone)]
struct PrimeData {
    exponent: u32,
    residues: ResidueSystem,
    uniformizer: Uniformizer,
    /// `P^r`
    power: IdealLattice,
    /// Row-major `N(P)^r × r`: digits of the residue at each canonical index
    /// of `O_K/P^r`.
    table: Vec<u32>,
}

/// Everything needed to expand elements modulo a fixed ideal `I`.
#[derive(Debug, Clone)]
pub struct CrtContext {
    modulus: IdealLattice,
    factorization: Factorization,
    primes: Vec<PrimeData>,
    limits: Limits,
}

impl CrtContext {
    pub fn build(modulus: &IdealLattice, limits: &Limits) -> Result<Self> {
        let fact = modulus.factor(limits)?;
        Self::from_factorization(modulus, fact, limits, &[])
    }

    /// Like [`CrtContext::build`] but with explicit uniformizers, one per prime
    /// in canonical order.
    pub fn with_uniformizers(modulus: &IdealLattice, limits: &Limits, uniformizers: &[FieldElement]) -> Result<Self> {
        let fact = modulus.factor(limits)?;
        if uniformizers.len() != fact.len() {
            return Err(Error::Precondition(format!("{} uniformizers for {} primes", uniformizers.len(), fact.len())));
        }
        Self::from_factorization(modulus, fact, limits, uniformizers)
    }

    pub(crate) fn from_factorization(
        modulus: &IdealLattice,
        factorization: Factorization,
        limits: &Limits,
        uniformizers: &[FieldElement],
    ) -> Result<Self> {
        limits.check_residues(modulus.norm())?;
        let field = modulus.field().clone();
        let mut primes = Vec::with_capacity(factorization.len());
        for (j, (prime, r)) in factorization.factors().iter().enumerate() {
            let residues = ResidueSystem::build(prime, limits)?;
            let uniformizer = match uniformizers.get(j) {
                Some(t) => Uniformizer::new(prime, t.clone())?,
                None => Uniformizer::find(prime)?,
            };
            let power = prime.ideal.pow(*r)?;
            let q = residues.len() as u64;
            let size = pow_u64(q, *r)?;
            let r = *r as usize;
            let mut t_pows = Vec::with_capacity(r);
            let mut acc = field.one();
            for _ in 0..r {
                t_pows.push(acc.clone());
                acc = field.mul(&acc, &uniformizer.t)?;
            }
            const UNSET: u32 = u32::MAX;
            let mut table = vec![UNSET; size as usize * r];
            let mut digits = vec![0u64; r];
            for _ in 0..size {
                let mut sum = field.zero();
                for (k, &g) in digits.iter().enumerate() {
                    let term = field.mul(&residues.reps[g as usize], &t_pows[k])?;
                    sum = field.add(&sum, &term)?;
                }
                let idx = power.residue_index(&power.reduce(&sum)?) as usize;
                let slot = &mut table[idx * r..(idx + 1) * r];
                if slot[0] != UNSET {
                    return Err(Error::Internal(format!(
                        "digit sums collide mod P^{r}: not a complete residue system"
                    )));
                }
                for (s, &g) in slot.iter_mut().zip(&digits) {
                    *s = g as u32;
                }
                // next digit vector, γ_0 fastest
                for d in digits.iter_mut() {
                    *d += 1;
                    if *d < q {
                        break;
                    }
                    *d = 0;
                }
            }
            primes.push(PrimeData { exponent: r as u32, residues, uniformizer, power, table });
        }
        Ok(CrtContext { modulus: modulus.clone(), factorization, primes, limits: *limits })
    }

    pub fn modulus(&self) -> &IdealLattice {
        &self.modulus
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Number of distinct primes `l`.
    pub fn num_primes(&self) -> usize {
        self.primes.len()
    }

    pub fn prime(&self, j: usize) -> &PrimeIdeal {
        &self.primes[j].residues.prime
    }

    pub fn exponent(&self, j: usize) -> u32 {
        self.primes[j].exponent
    }

    pub fn residue_system(&self, j: usize) -> &ResidueSystem {
        &self.primes[j].residues
    }

    pub fn uniformizer(&self, j: usize) -> &Uniformizer {
        &self.primes[j].uniformizer
    }

    /// First coordinate of prime `j`'s digit block in `P(n; b)`.
    pub fn block_offset(&self, j: usize) -> usize {
        self.primes[..j].iter().map(|p| p.exponent as usize).sum()
    }

    /// Side lengths of the digit box: `N(P_j)` repeated `r_j` times.
    pub fn bounds_f(&self) -> Vec<u64> {
        self.primes.iter().flat_map(|p| core::iter::repeat_n(p.residues.len() as u64, p.exponent as usize)).collect()
    }

    /// Side lengths of the packed box: `N(P_j)^{r_j}`.
    pub fn bounds_f_bar(&self) -> Vec<u64> {
        self.primes.iter().map(|p| (p.residues.len() as u64).pow(p.exponent)).collect()
    }

    /// The unique digit vector whose sum is congruent to `a` mod `P_j^{r_j}`.
    pub fn digit_expand(&self, a: &FieldElement, j: usize) -> Result<DigitExpansion> {
        let p = self.primes.get(j).ok_or(Error::IndexOutOfRange { index: j, len: self.primes.len() })?;
        let r = p.exponent as usize;
        let idx = p.power.residue_index(&p.power.reduce(a)?) as usize;
        let digits = p.table[idx * r..(idx + 1) * r].iter().map(|&d| d as u64).collect();
        Ok(DigitExpansion { prime_index: j, digits })
    }

    /// `Σ_k reps[γ_k] t^k`.
    pub fn digit_reconstruct(&self, d: &DigitExpansion) -> Result<FieldElement> {
        let p = self
            .primes
            .get(d.prime_index)
            .ok_or(Error::IndexOutOfRange { index: d.prime_index, len: self.primes.len() })?;
        let field = self.modulus.field();
        let mut sum = field.zero();
        let mut t_pow = field.one();
        for &g in &d.digits {
            let rep = p
                .residues
                .reps
                .get(g as usize)
                .ok_or(Error::IndexOutOfRange { index: g as usize, len: p.residues.len() })?;
            sum = field.add(&sum, &field.mul(rep, &t_pow)?)?;
            t_pow = field.mul(&t_pow, &p.uniformizer.t)?;
        }
        Ok(sum)
    }

    /// Image of `a mod I` in `P(n; b)`.
    pub fn map_f(&self, a: &FieldElement) -> Result<LatticePoint> {
        let mut out = Vec::with_capacity(self.bounds_len());
        for j in 0..self.primes.len() {
            out.extend(self.digit_expand(a, j)?.digits);
        }
        Ok(out)
    }

    /// Image of `a mod I` in `P(l; d)`; digit `γ_k` carries weight `N(P)^{r-1-k}`.
    pub fn map_f_bar(&self, a: &FieldElement) -> Result<LatticePoint> {
        (0..self.primes.len())
            .map(|j| {
                let q = self.primes[j].residues.len() as u64;
                let d = self.digit_expand(a, j)?;
                Ok(d.digits.iter().fold(0u64, |acc, &g| acc * q + g))
            })
            .collect()
    }

    fn bounds_len(&self) -> usize {
        self.primes.iter().map(|p| p.exponent as usize).sum()
    }
}
