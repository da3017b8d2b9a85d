//! Exact covering systems built by refinement: start from a complete residue
//! system and repeatedly split one class along a prime.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::covering::{CongruenceClass, CoveringSystem};
use crate::ideal::{IdealLattice, Limits, PrimeIdeal};
use crate::number_field::NumberField;
use crate::{Error, Result};

/// One class per residue of `O_K/I`, all with modulus `I`.
pub fn trivial_system(field: &Arc<NumberField>, modulus: &IdealLattice, limits: &Limits) -> Result<CoveringSystem> {
    if modulus.field() != field {
        return Err(Error::FieldMismatch);
    }
    if modulus.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let classes = modulus
        .residues(limits)?
        .iter()
        .map(|r| CongruenceClass::new(r, modulus.clone()))
        .collect::<Result<Vec<_>>>()?;
    CoveringSystem::new(classes, limits)
}

/// Replaces `α_i mod I_i` by the `N(P)` classes `α_i + s mod I_i·P`, where `s`
/// runs over representatives of `I_i / I_i·P`. The new classes take the place
/// of class `i`, in residue order of `s`.
pub fn split_class(sys: &CoveringSystem, i: usize, prime: &PrimeIdeal) -> Result<CoveringSystem> {
    let class = sys.class(i)?;
    let field = sys.field();
    if prime.ideal.field() != field {
        return Err(Error::FieldMismatch);
    }
    let limits = sys.limits();
    let fine = class.modulus().product(&prime.ideal)?;
    let mut shifts = Vec::new();
    for s in fine.residues(limits)? {
        if class.modulus().contains(&s)? {
            shifts.push(s);
        }
    }
    if shifts.len() as u64 != prime.norm() {
        return Err(Error::Internal(format!(
            "found {} representatives of I_i/I_i P, expected {}",
            shifts.len(),
            prime.norm()
        )));
    }
    let mut classes = Vec::with_capacity(sys.len() + shifts.len() - 1);
    classes.extend_from_slice(&sys.classes()[..i]);
    for s in &shifts {
        classes.push(CongruenceClass::new(&field.add(class.rep(), s)?, fine.clone())?);
    }
    classes.extend_from_slice(&sys.classes()[i + 1..]);
    CoveringSystem::new(classes, limits)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenerationLimits {
    /// Largest allowed norm of the common modulus `I`.
    pub max_modulus_norm: u64,
    pub max_classes: usize,
    pub limits: Limits,
}

impl Default for GenerationLimits {
    fn default() -> Self {
        GenerationLimits { max_modulus_norm: 10_000, max_classes: 64, limits: Limits::default() }
    }
}

#[derive(Debug, Clone)]
pub struct GeneratedSystem {
    pub system: CoveringSystem,
    /// Splits actually applied.
    pub steps: usize,
    /// Set when a split would have exceeded the generation limits; the
    /// system is the one built up to that point.
    pub truncated: bool,
}

/// Seeded random refinement: the trivial system on a pool prime, then up to
/// `steps` splits of a random class by a random pool prime.
pub fn random_system(
    field: &Arc<NumberField>,
    seed: u64,
    steps: usize,
    prime_pool: &[PrimeIdeal],
    gen: &GenerationLimits,
) -> Result<GeneratedSystem> {
    if prime_pool.is_empty() {
        return Err(Error::Precondition("empty prime pool".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = &prime_pool[rng.gen_range(0..prime_pool.len())];
    let mut system = trivial_system(field, &base.ideal, &gen.limits)?;
    if system.modulus().norm() > gen.max_modulus_norm || system.len() > gen.max_classes {
        return Err(Error::Precondition("base prime already exceeds the generation limits".into()));
    }
    for done in 0..steps {
        let i = rng.gen_range(0..system.len());
        let p = &prime_pool[rng.gen_range(0..prime_pool.len())];
        let fine = system.class(i)?.modulus().product(&p.ideal)?;
        let too_big = system.len() - 1 + p.norm() as usize > gen.max_classes
            || system.modulus().intersect(&fine)?.norm() > gen.max_modulus_norm;
        if too_big {
            return Ok(GeneratedSystem { system, steps: done, truncated: true });
        }
        system = split_class(&system, i, p)?;
    }
    Ok(GeneratedSystem { system, steps, truncated: false })
}
