//! Covering systems `{α_i mod I_i}` over `O_K`, exactness, the induced cell
//! partitions and the repetition bounds for moduli.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::Ratio;
use crate::cell::{Cell, CellEntry, CellPartition};
use crate::ideal::{Factorization, IdealLattice, Limits};
use crate::number_field::{FieldElement, NumberField};
use crate::residues::CrtContext;
use crate::{Error, Result};

/// The set `α + I` for a proper nonzero ideal `I`. The representative is kept
/// reduced into the HNF box of `I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CongruenceClass {
    rep: FieldElement,
    modulus: IdealLattice,
}

impl CongruenceClass {
    pub fn new(rep: &FieldElement, modulus: IdealLattice) -> Result<Self> {
        if modulus.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let rep = modulus.reduce(rep)?;
        Ok(CongruenceClass { rep, modulus })
    }

    pub fn rep(&self) -> &FieldElement {
        &self.rep
    }

    pub fn modulus(&self) -> &IdealLattice {
        &self.modulus
    }

    pub fn contains(&self, x: &FieldElement) -> Result<bool> {
        self.modulus.congruent(x, &self.rep)
    }
}

impl fmt::Display for CongruenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.rep, self.modulus)
    }
}

/// Outcome of an exactness check. Witnesses are canonical residues mod the
/// common modulus; an uncovered residue is reported in preference to an
/// overlap, and within each kind the first one in residue order wins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Exact,
    NotCovering { witness: FieldElement },
    Overlap { witness: FieldElement, first: usize, second: usize },
}

impl Verdict {
    pub fn is_exact(&self) -> bool {
        matches!(self, Verdict::Exact)
    }
}

/// The lower bound on how often a modulus repeats, where the bound over an
/// empty set of competing moduli is not defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepetitionBound {
    Value(u64),
    /// Every modulus of the system is the same ideal.
    AllEqual,
}

/// `{α_i mod (I_i + I_j) : i ∈ members}` built from a division-maximal pivot `j`.
#[derive(Debug, Clone)]
pub struct DerivedSystem {
    pub pivot: usize,
    pub members: Vec<usize>,
    pub system: CoveringSystem,
}

/// A nonempty finite family of congruence classes over one field, with the
/// common modulus `I = ∩ I_i`, its factorization `∏ P_j^{r_j}` and the
/// exponents `r_{i,j}` of every modulus cached.
#[derive(Debug, Clone)]
pub struct CoveringSystem {
    field: Arc<NumberField>,
    classes: Vec<CongruenceClass>,
    modulus: IdealLattice,
    factorization: Factorization,
    exponents: Vec<Vec<u32>>,
    limits: Limits,
}

impl CoveringSystem {
    pub fn new(classes: Vec<CongruenceClass>, limits: &Limits) -> Result<Self> {
        let first = classes.first().ok_or(Error::EmptySystem)?;
        let field = first.modulus.field().clone();
        let mut modulus = first.modulus.clone();
        for c in &classes[1..] {
            modulus = modulus.intersect(&c.modulus)?;
        }
        let factorization = modulus.factor(limits)?;
        let exponents = classes
            .iter()
            .map(|c| factorization.primes().map(|p| c.modulus.valuation(p)).collect())
            .collect::<Result<Vec<Vec<u32>>>>()?;
        Ok(CoveringSystem { field, classes, modulus, factorization, exponents, limits: *limits })
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn classes(&self) -> &[CongruenceClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> Result<&CongruenceClass> {
        self.classes.get(i).ok_or(Error::IndexOutOfRange { index: i, len: self.classes.len() })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `I = ∩ I_i`.
    pub fn modulus(&self) -> &IdealLattice {
        &self.modulus
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// `r_{i,j}` for every prime `P_j` of `I`, in canonical prime order.
    pub fn exponents(&self, i: usize) -> Result<&[u32]> {
        self.class(i)?;
        Ok(&self.exponents[i])
    }

    /// Factorization of `I_i` over the primes of `I`.
    pub fn class_factorization(&self, i: usize) -> Result<Factorization> {
        let e = self.exponents(i)?;
        let factors = self.factorization.primes().cloned().zip(e.iter().copied()).collect();
        Ok(Factorization::from_factors(&self.field, factors))
    }

    pub fn crt_context(&self) -> Result<CrtContext> {
        CrtContext::from_factorization(&self.modulus, self.factorization.clone(), &self.limits, &[])
    }

    /// Canonical indices (mod `I`) of the residues lying in class `i`, found
    /// by closing `α_i` under addition of the basis of `I_i`.
    pub fn class_residue_indices(&self, i: usize) -> Result<Vec<u64>> {
        let class = self.class(i)?;
        let n = self.modulus.norm();
        self.limits.check_residues(n)?;
        let gens = class.modulus.basis();
        let start = self.modulus.reduce(&class.rep)?;
        let mut seen = vec![false; n as usize];
        let mut out = Vec::with_capacity((n / class.modulus.norm()) as usize);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            let idx = self.modulus.residue_index(&x);
            if seen[idx as usize] {
                continue;
            }
            seen[idx as usize] = true;
            out.push(idx);
            for g in &gens {
                let y = self.modulus.reduce(&self.field.add(&x, g)?)?;
                if !seen[self.modulus.residue_index(&y) as usize] {
                    stack.push(y);
                }
            }
        }
        if out.len() as u64 * class.modulus.norm() != n {
            return Err(Error::Internal(format!(
                "class {i} meets {} residues, expected {}",
                out.len(),
                n / class.modulus.norm()
            )));
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Checks that every element of `O_K` lies in exactly one class, by
    /// counting class coverage over the residues of `O_K/I`.
    pub fn verify_exact(&self) -> Result<Verdict> {
        let n = self.modulus.norm();
        self.limits.check_residues(n)?;
        const NONE: u32 = u32::MAX;
        let mut owners = vec![[NONE, NONE]; n as usize];
        for i in 0..self.classes.len() {
            for idx in self.class_residue_indices(i)? {
                let slot = &mut owners[idx as usize];
                if slot[0] == NONE {
                    slot[0] = i as u32;
                } else if slot[1] == NONE {
                    slot[1] = i as u32;
                }
            }
        }
        if let Some(idx) = owners.iter().position(|o| o[0] == NONE) {
            return Ok(Verdict::NotCovering { witness: self.modulus.residue_at(idx as u64) });
        }
        if let Some(idx) = owners.iter().position(|o| o[1] != NONE) {
            let [first, second] = owners[idx];
            return Ok(Verdict::Overlap {
                witness: self.modulus.residue_at(idx as u64),
                first: first as usize,
                second: second as usize,
            });
        }
        Ok(Verdict::Exact)
    }

    /// Same verdict as [`CoveringSystem::verify_exact`], computed the slow way:
    /// for each residue `x`, test `x - α_i ∈ I_i` against every class.
    pub fn verify_exact_by_membership(&self) -> Result<Verdict> {
        let residues = self.modulus.residues(&self.limits)?;
        let mut overlap = None;
        for x in residues {
            let mut hits = Vec::new();
            for (i, c) in self.classes.iter().enumerate() {
                if c.contains(&x)? {
                    hits.push(i);
                }
            }
            match hits.len() {
                0 => return Ok(Verdict::NotCovering { witness: x }),
                1 => {}
                _ => {
                    if overlap.is_none() {
                        overlap = Some(Verdict::Overlap { witness: x, first: hits[0], second: hits[1] });
                    }
                }
            }
        }
        Ok(overlap.unwrap_or(Verdict::Exact))
    }

    /// `Σ_i 1/N(I_i)`, which is exactly 1 for an exact covering.
    pub fn density(&self) -> Result<Ratio> {
        self.classes.iter().try_fold(Ratio::ZERO, |acc, c| acc.checked_add(Ratio::new(1, c.modulus.norm() as i128)?))
    }

    /// The cell `f(α_i mod I_i)`: at prime `P_j` the first `r_{i,j}` digits of
    /// `α_i` are fixed and the remaining ones are free.
    pub fn class_to_cell(ctx: &CrtContext, class: &CongruenceClass) -> Result<Cell> {
        if !class.modulus.divides(ctx.modulus())? {
            return Err(Error::NotADivisor);
        }
        let mut entries = Vec::with_capacity(ctx.bounds_f().len());
        for j in 0..ctx.num_primes() {
            let r_ij = class.modulus.valuation(ctx.prime(j))? as usize;
            let digits = ctx.digit_expand(&class.rep, j)?.digits;
            entries.extend(digits.iter().enumerate().map(
                |(k, &d)| {
                    if k < r_ij {
                        CellEntry::Fixed(d)
                    } else {
                        CellEntry::Free
                    }
                },
            ));
        }
        Cell::new(ctx.bounds_f(), entries)
    }

    /// The cell partition of `P(n; b)` induced by an exact system.
    pub fn to_partition(&self, ctx: &CrtContext) -> Result<CellPartition> {
        if !self.verify_exact()?.is_exact() {
            return Err(Error::NotExact);
        }
        let cells = self.classes.iter().map(|c| Self::class_to_cell(ctx, c)).collect::<Result<Vec<_>>>()?;
        CellPartition::new(ctx.bounds_f(), cells)
    }

    /// No other modulus of the system is a proper multiple of `I_i`.
    pub fn is_division_maximal(&self, i: usize) -> Result<bool> {
        let mi = &self.class(i)?.modulus;
        for c in &self.classes {
            if c.modulus != *mi && mi.divides(&c.modulus)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// How many classes share the modulus of class `i` (itself included).
    pub fn repetition_count(&self, i: usize) -> Result<usize> {
        let mi = &self.class(i)?.modulus;
        Ok(self.classes.iter().filter(|c| c.modulus == *mi).count())
    }

    /// `min N(P)` over the primes dividing `I_i`.
    pub fn theorem1_bound(&self, i: usize) -> Result<u64> {
        self.class_factorization(i)?.min_prime_norm().ok_or(Error::Internal("class with unit modulus".into()))
    }

    /// `min G(I_i / (I_i + I_t))` over classes `t` with `I_t ≠ I_i`.
    pub fn theorem2_bound(&self, i: usize) -> Result<RepetitionBound> {
        let mi = &self.class(i)?.modulus;
        let fi = self.class_factorization(i)?;
        let mut best: Option<u64> = None;
        let mut seen: BTreeSet<&IdealLattice> = BTreeSet::new();
        for (t, c) in self.classes.iter().enumerate() {
            if c.modulus == *mi || !seen.insert(&c.modulus) {
                continue;
            }
            let g = fi.quotient_by_sum(&self.class_factorization(t)?).big_g()?;
            best = Some(best.map_or(g, |b| b.min(g)));
        }
        Ok(best.map_or(RepetitionBound::AllEqual, RepetitionBound::Value))
    }

    /// `S_{I'}` for `I' = I_j`: residues of `O_K/I` whose digits at each
    /// prime `P_m` vanish from position `r_{j,m}` on. It is a complete
    /// residue system mod `I_j`.
    pub fn s_set(&self, ctx: &CrtContext, j: usize) -> Result<Vec<FieldElement>> {
        let s = self.exponents(j)?;
        let mut out = Vec::new();
        for x in self.modulus.residues(&self.limits)? {
            let mut keep = true;
            for (m, &s_m) in s.iter().enumerate() {
                let d = ctx.digit_expand(&x, m)?;
                if d.digits[s_m as usize..].iter().any(|&g| g != 0) {
                    keep = false;
                    break;
                }
            }
            if keep {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// Projects the system onto a division-maximal modulus `I_j`: keeps the
    /// classes meeting `S_{I_j}` and replaces each `I_i` by `I_i + I_j`.
    pub fn derived_system(&self, j: usize) -> Result<DerivedSystem> {
        if !self.is_division_maximal(j)? {
            return Err(Error::NotDivisionMaximal(j));
        }
        let ctx = self.crt_context()?;
        let s = self.s_set(&ctx, j)?;
        let mut members = BTreeSet::new();
        for x in &s {
            for (i, c) in self.classes.iter().enumerate() {
                if c.contains(x)? {
                    members.insert(i);
                }
            }
        }
        let mj = &self.classes[j].modulus;
        let classes = members
            .iter()
            .map(|&i| {
                let c = &self.classes[i];
                CongruenceClass::new(&c.rep, c.modulus.sum(mj)?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DerivedSystem {
            pivot: j,
            members: members.into_iter().collect(),
            system: CoveringSystem::new(classes, &self.limits)?,
        })
    }

    /// Brute-force check that every residue of class `i` mod `I` is an element
    /// of `(α_i mod I_i) ∩ S_{I_j}` plus an element of `I_j`. Errors when
    /// class `i` does not meet `S_{I_j}`.
    pub fn check_s_subset_shift(&self, j: usize, i: usize) -> Result<bool> {
        let ctx = self.crt_context()?;
        let s = self.s_set(&ctx, j)?;
        self.shift_holds(&s, j, i)?
            .ok_or_else(|| Error::Precondition(format!("class {i} does not meet S for class {j}")))
    }

    /// [`CoveringSystem::check_s_subset_shift`] for pivot `j` against every
    /// class meeting `S_{I_j}`, sharing one computation of the set.
    pub fn check_s_subset_shift_all(&self, ctx: &CrtContext, j: usize) -> Result<Vec<(usize, bool)>> {
        let s = self.s_set(ctx, j)?;
        let mut out = Vec::new();
        for i in 0..self.classes.len() {
            if let Some(ok) = self.shift_holds(&s, j, i)? {
                out.push((i, ok));
            }
        }
        Ok(out)
    }

    fn shift_holds(&self, s: &[FieldElement], j: usize, i: usize) -> Result<Option<bool>> {
        let class = self.class(i)?;
        let mj = &self.class(j)?.modulus;
        let mut meet = BTreeSet::new();
        for x in s {
            if class.contains(x)? {
                meet.insert(mj.reduce(x)?);
            }
        }
        if meet.is_empty() {
            return Ok(None);
        }
        for idx in self.class_residue_indices(i)? {
            let x = self.modulus.residue_at(idx);
            if !meet.contains(&mj.reduce(&x)?) {
                return Ok(Some(false));
            }
        }
        Ok(Some(true))
    }
}
