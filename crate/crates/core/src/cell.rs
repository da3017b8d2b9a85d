//! Cells of an integer box and partitions of the box into cells.
//!
//! A cell fixes some coordinates and leaves the rest free; its index set is
//! the set of free positions. Positions are 0-based throughout the crate.

use alloc::vec::Vec;
use core::fmt;

use crate::residues::LatticePoint;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellEntry {
    Fixed(u64),
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cell {
    bounds: Vec<u64>,
    entries: Vec<CellEntry>,
}

impl Cell {
    pub fn new(bounds: Vec<u64>, entries: Vec<CellEntry>) -> Result<Self> {
        if bounds.len() != entries.len() {
            return Err(Error::DimensionMismatch { expected: bounds.len(), found: entries.len() });
        }
        for (b, e) in bounds.iter().zip(&entries) {
            if let CellEntry::Fixed(u) = e {
                if u >= b {
                    return Err(Error::Precondition("fixed coordinate out of bounds".into()));
                }
            }
        }
        Ok(Cell { bounds, entries })
    }

    pub fn bounds(&self) -> &[u64] {
        &self.bounds
    }

    pub fn entries(&self) -> &[CellEntry] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_free(&self, i: usize) -> bool {
        self.entries[i] == CellEntry::Free
    }

    /// The index set: positions of free coordinates, ascending.
    pub fn index_set(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.is_free(i)).collect()
    }

    /// Whether the index set of `self` is contained in that of `other`.
    pub fn index_subset_of(&self, other: &Cell) -> bool {
        (0..self.dim()).all(|i| !self.is_free(i) || other.is_free(i))
    }

    /// Number of points, `∏_{i free} b_i`.
    pub fn size(&self) -> u64 {
        self.entries.iter().zip(&self.bounds).filter(|(e, _)| **e == CellEntry::Free).map(|(_, b)| *b).product()
    }

    pub fn contains(&self, p: &[u64]) -> bool {
        p.len() == self.dim()
            && self.entries.iter().zip(p).zip(&self.bounds).all(|((e, &x), &b)| match e {
                CellEntry::Fixed(u) => x == *u,
                CellEntry::Free => x < b,
            })
    }

    /// Two cells meet unless some coordinate is fixed to different values.
    pub fn is_disjoint(&self, other: &Cell) -> bool {
        self.entries.iter().zip(&other.entries).any(|(a, b)| match (a, b) {
            (CellEntry::Fixed(x), CellEntry::Fixed(y)) => x != y,
            _ => false,
        })
    }

    /// All points of the cell in lexicographic order.
    pub fn points(&self) -> Vec<LatticePoint> {
        let mut out = Vec::with_capacity(self.size() as usize);
        let mut cur: Vec<u64> = self
            .entries
            .iter()
            .map(|e| match e {
                CellEntry::Fixed(u) => *u,
                CellEntry::Free => 0,
            })
            .collect();
        loop {
            out.push(cur.clone());
            let mut i = self.dim();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if self.is_free(i) {
                    cur[i] += 1;
                    if cur[i] < self.bounds[i] {
                        break;
                    }
                    cur[i] = 0;
                }
            }
        }
    }
}

/// Renders as e.g. `(1, 0, *)`.
impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match e {
                CellEntry::Fixed(u) => write!(f, "{u}")?,
                CellEntry::Free => write!(f, "*")?,
            }
        }
        write!(f, ")")
    }
}

/// A partition of the box `∏ [0, b_i)` into pairwise disjoint cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPartition {
    bounds: Vec<u64>,
    cells: Vec<Cell>,
}

/// One subset-minimal cell `E`: `b` is the least side length over the fixed
/// coordinates of `E`, `count` the number of cells whose index set equals
/// that of `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma1Entry {
    pub cell: usize,
    pub b: u64,
    pub count: usize,
}

impl Lemma1Entry {
    pub fn holds(&self) -> bool {
        self.count as u64 >= self.b
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Lemma1Report {
    pub entries: Vec<Lemma1Entry>,
}

impl Lemma1Report {
    pub fn violations(&self) -> impl Iterator<Item = &Lemma1Entry> {
        self.entries.iter().filter(|e| !e.holds())
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }
}

impl CellPartition {
    /// Checks that the cells tile the box: sizes add up to the volume and the
    /// cells are pairwise disjoint.
    pub fn new(bounds: Vec<u64>, cells: Vec<Cell>) -> Result<Self> {
        if cells.iter().any(|c| c.bounds != bounds) {
            return Err(Error::Precondition("cell bounds differ from the box".into()));
        }
        let volume: u64 = bounds.iter().product();
        let total: u64 = cells.iter().map(Cell::size).sum();
        if total != volume {
            return Err(Error::Precondition("cell sizes do not add up to the box volume".into()));
        }
        for i in 0..cells.len() {
            for j in i + 1..cells.len() {
                if !cells[i].is_disjoint(&cells[j]) {
                    return Err(Error::Precondition("cells overlap".into()));
                }
            }
        }
        Ok(CellPartition { bounds, cells })
    }

    pub fn bounds(&self) -> &[u64] {
        &self.bounds
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `K` is subset minimal if no cell of the partition has an index set
    /// strictly inside `I(K)`.
    pub fn is_subset_minimal(&self, k: usize) -> Result<bool> {
        let cell = self.cells.get(k).ok_or(Error::IndexOutOfRange { index: k, len: self.cells.len() })?;
        Ok(self.cells.iter().all(|other| !other.index_subset_of(cell) || other.index_set() == cell.index_set()))
    }

    /// For every subset-minimal cell `E`, counts the cells with index set
    /// `I(E)` and compares with the least side length among positions outside
    /// `I(E)`. Needs at least two cells.
    pub fn check_lemma1(&self) -> Result<Lemma1Report> {
        if self.cells.len() < 2 {
            return Err(Error::Precondition("partition has fewer than two cells".into()));
        }
        let mut entries = Vec::new();
        for (k, e) in self.cells.iter().enumerate() {
            if !self.is_subset_minimal(k)? {
                continue;
            }
            let b = (0..e.dim())
                .filter(|&i| !e.is_free(i))
                .map(|i| self.bounds[i])
                .min()
                .ok_or_else(|| Error::Internal("cell with no fixed coordinate in a proper partition".into()))?;
            let idx = e.index_set();
            let count = self.cells.iter().filter(|c| c.index_set() == idx).count();
            entries.push(Lemma1Entry { cell: k, b, count });
        }
        Ok(Lemma1Report { entries })
    }
}
