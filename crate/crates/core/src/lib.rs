//! Exact covering systems over rings of integers of number fields.
//!
//! The ring of integers is described by an integral basis and an integer
//! multiplication table ([`NumberField`]). Nonzero ideals are full-rank
//! sublattices kept in Hermite normal form ([`IdealLattice`]), which makes
//! ideal equality a matrix comparison. On top of that sit
//!
//! * [`residues`]: complete residue systems, uniformizers, digit expansions
//!   modulo prime powers and the two CRT maps onto integer boxes,
//! * [`covering`]: congruence classes, exactness verification, cell
//!   partitions and the repetition lower bounds for moduli,
//! * [`constructor`]: generators for exact systems by class splitting.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is on `i64`
//! with overflow checks; an overflow surfaces as [`Error::Overflow`] rather
//! than a wrapped value.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod cell;
pub mod constructor;
pub mod covering;
mod error;
mod hnf;
pub mod ideal;
pub mod number_field;
mod poly;
pub mod residues;

pub use cell::{Cell, CellEntry, CellPartition, Lemma1Entry, Lemma1Report};
pub use constructor::{random_system, split_class, trivial_system, GeneratedSystem, GenerationLimits};
pub use covering::{CongruenceClass, CoveringSystem, RepetitionBound, Verdict};
pub use error::{Error, Result};
pub use ideal::{Factorization, IdealLattice, Limits, PrimeIdeal};
pub use number_field::{FieldElement, NumberField};
pub use residues::{CrtContext, DigitExpansion, LatticePoint, ResidueSystem, Uniformizer};
