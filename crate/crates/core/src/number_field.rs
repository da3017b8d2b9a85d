//! Rings of integers given by an integral basis and a multiplication table.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{self, is_squarefree};
use crate::{Error, Result};

/// How the field was constructed. Used for serialization and labelling only;
/// all arithmetic goes through the table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Quadratic { d: i64 },
    Table,
}

/// The ring of integers `O_K` of a number field, as a free ℤ-module with
/// basis `ω_0 = 1, ω_1, …, ω_{n-1}` and products `ω_a ω_b = Σ_c T[a][b][c] ω_c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumberField {
    kind: FieldKind,
    labels: Vec<String>,
    table: Vec<Vec<Vec<i64>>>,
}

/// Coordinates of an element of `O_K` in the integral basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub Vec<i64>);

impl FieldElement {
    pub fn new(coords: Vec<i64>) -> Self {
        FieldElement(coords)
    }

    pub fn zero(degree: usize) -> Self {
        FieldElement(vec![0; degree])
    }

    /// The rational integer `k` embedded in `O_K`.
    pub fn integer(degree: usize, k: i64) -> Self {
        let mut c = vec![0; degree];
        c[0] = k;
        FieldElement(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl From<Vec<i64>> for FieldElement {
    fn from(v: Vec<i64>) -> Self {
        FieldElement(v)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl NumberField {
    /// ℚ, with `O_K = ℤ`.
    pub fn rationals() -> Self {
        NumberField { kind: FieldKind::Rationals, labels: vec!["1".into()], table: vec![vec![vec![1]]] }
    }

    /// ℚ(√d) with its standard integral basis `{1, ω}`: `ω = √d` when
    /// `d ≡ 2, 3 (mod 4)` and `ω = (1 + √d)/2` when `d ≡ 1 (mod 4)`.
    pub fn quadratic(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !is_squarefree(d) {
            return Err(Error::InvalidDiscriminant(d));
        }
        let (omega_sq, label) = if d.rem_euclid(4) == 1 {
            // ω² = ω + (d - 1)/4
            (vec![(d - 1) / 4, 1], format!("(1+sqrt({d}))/2"))
        } else {
            (vec![d, 0], format!("sqrt({d})"))
        };
        let table = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], omega_sq]];
        let mut field = NumberField::from_table(vec!["1".into(), label], table)?;
        field.kind = FieldKind::Quadratic { d };
        Ok(field)
    }

    /// Builds a field from an arbitrary table, checking that basis element 0
    /// is the identity and that the product is commutative and associative.
    ///
    /// The table is trusted to describe the full ring of integers; this is not
    /// (and cannot cheaply be) verified.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty basis".into()));
        }
        if labels.len() != n {
            return Err(Error::InvalidTable(format!("{} labels for a basis of size {n}", labels.len())));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|v| v.len() != n) {
                return Err(Error::InvalidTable("table is not n x n x n".into()));
            }
        }
        let field = NumberField { kind: FieldKind::Table, labels, table };
        field.check_axioms()?;
        Ok(field)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.degree();
        for b in 0..n {
            if self.table[0][b] != self.basis_element(b).0 {
                return Err(Error::InvalidTable(format!("1 * w{b} != w{b}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.table[a][b] != self.table[b][a] {
                    return Err(Error::InvalidTable(format!("w{a} w{b} != w{b} w{a}")));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab = FieldElement(self.table[a][b].clone());
                    let bc = FieldElement(self.table[b][c].clone());
                    let left = self.mul(&ab, &self.basis_element(c))?;
                    let right = self.mul(&self.basis_element(a), &bc)?;
                    if left != right {
                        return Err(Error::InvalidTable(format!("(w{a} w{b}) w{c} != w{a} (w{b} w{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.table.len()
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coordinates of `ω_a ω_b`.
    pub fn table_entry(&self, a: usize, b: usize) -> &[i64] {
        &self.table[a][b]
    }

    pub fn basis_element(&self, i: usize) -> FieldElement {
        let mut c = vec![0; self.degree()];
        c[i] = 1;
        FieldElement(c)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::zero(self.degree())
    }

    pub fn one(&self) -> FieldElement {
        self.basis_element(0)
    }

    pub fn integer(&self, k: i64) -> FieldElement {
        FieldElement::integer(self.degree(), k)
    }

    /// Checks the coordinate length of `a`.
    pub fn check(&self, a: &FieldElement) -> Result<()> {
        if a.0.len() != self.degree() {
            return Err(Error::DimensionMismatch { expected: self.degree(), found: a.0.len() });
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        a.0.iter().zip(&b.0).map(|(&x, &y)| arith::add(x, y)).collect::<Result<_>>().map(FieldElement)
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        a.0.iter().zip(&b.0).map(|(&x, &y)| arith::sub(x, y)).collect::<Result<_>>().map(FieldElement)
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        a.0.iter().map(|&x| x.checked_neg().ok_or(Error::Overflow)).collect::<Result<_>>().map(FieldElement)
    }

    pub fn scale(&self, k: i64, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        a.0.iter().map(|&x| arith::mul(k, x)).collect::<Result<_>>().map(FieldElement)
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        let n = self.degree();
        let mut out = vec![0i64; n];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = arith::mul(x, y)?;
                for (o, &t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o = arith::mul_add(*o, xy, t)?;
                }
            }
        }
        Ok(FieldElement(out))
    }

    pub fn pow(&self, a: &FieldElement, e: u32) -> Result<FieldElement> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Matrix of multiplication by `a`: row `b` holds the coordinates of `a ω_b`.
    pub fn mul_matrix(&self, a: &FieldElement) -> Result<Vec<Vec<i64>>> {
        (0..self.degree()).map(|b| self.mul(a, &self.basis_element(b)).map(|e| e.0)).collect()
    }

    /// Human-readable name, e.g. `Q`, `Q(sqrt(-5))`.
    pub fn name(&self) -> String {
        match self.kind {
            FieldKind::Rationals => "Q".to_string(),
            FieldKind::Quadratic { d } => format!("Q(sqrt({d}))"),
            FieldKind::Table => format!("degree-{} field", self.degree()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(v: &[i64]) -> FieldElement {
        FieldElement(v.to_vec())
    }

    #[test]
    fn rationals_arithmetic() {
        let q = NumberField::rationals();
        assert_eq!(q.degree(), 1);
        assert_eq!(q.mul(&el(&[3]), &el(&[4])).unwrap(), el(&[12]));
        assert_eq!(q.add(&el(&[5]), &el(&[-5])).unwrap(), el(&[0]));
    }

    #[test]
    fn quadratic_tables() {
        let gauss = NumberField::quadratic(-1).unwrap();
        assert_eq!(gauss.table_entry(1, 1), &[-1, 0]);
        let eis = NumberField::quadratic(-3).unwrap();
        assert_eq!(eis.table_entry(1, 1), &[-1, 1]);
        let r2 = NumberField::quadratic(2).unwrap();
        assert_eq!(r2.table_entry(1, 1), &[2, 0]);
        let r5 = NumberField::quadratic(5).unwrap();
        assert_eq!(r5.table_entry(1, 1), &[1, 1]);
    }

    #[test]
    fn eisenstein_square_matches_symbolic_expansion() {
        // ((1 + s)/2)^2 with s^2 = -3 is (1 + 2s - 3)/4 = (s - 1)/2 = ω - 1.
        let eis = NumberField::quadratic(-3).unwrap();
        let w = eis.basis_element(1);
        assert_eq!(eis.mul(&w, &w).unwrap(), el(&[-1, 1]));
        // ω³ = ω·(ω - 1) = ω² - ω = -1, the cube root of -1.
        assert_eq!(eis.pow(&w, 3).unwrap(), el(&[-1, 0]));
    }

    #[test]
    fn products_of_conjugates() {
        let gauss = NumberField::quadratic(-1).unwrap();
        assert_eq!(gauss.mul(&el(&[1, 1]), &el(&[1, -1])).unwrap(), el(&[2, 0]));
        let r2 = NumberField::quadratic(2).unwrap();
        assert_eq!(r2.mul(&el(&[1, 1]), &el(&[1, -1])).unwrap(), el(&[-1, 0]));
    }

    #[test]
    fn identity_element() {
        for f in [NumberField::rationals(), NumberField::quadratic(-5).unwrap()] {
            let a = FieldElement((1..=f.degree() as i64).collect());
            assert_eq!(f.mul(&a, &f.one()).unwrap(), a);
        }
    }

    #[test]
    fn rejects_bad_discriminants() {
        for d in [0, 1, 4, -4, 12, 18] {
            assert_eq!(NumberField::quadratic(d), Err(Error::InvalidDiscriminant(d)));
        }
    }

    #[test]
    fn rejects_bad_tables() {
        // non-commutative
        let t = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![1, 1], vec![0, 0]]];
        assert!(matches!(NumberField::from_table(vec!["1".into(), "w".into()], t), Err(Error::InvalidTable(_))));
        // basis element 0 is not the identity
        let t = vec![vec![vec![0, 1], vec![0, 1]], vec![vec![0, 1], vec![0, 1]]];
        assert!(NumberField::from_table(vec!["1".into(), "w".into()], t).is_err());
    }

    #[test]
    fn cube_root_of_two_table() {
        // ℤ[θ] with θ³ = 2
        let t = vec![
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![2, 0, 0]],
            vec![vec![0, 0, 1], vec![2, 0, 0], vec![0, 2, 0]],
        ];
        let f = NumberField::from_table(vec!["1".into(), "t".into(), "t^2".into()], t).unwrap();
        let theta = f.basis_element(1);
        assert_eq!(f.pow(&theta, 3).unwrap(), el(&[2, 0, 0]));
    }

    #[test]
    fn dimension_mismatch() {
        let f = NumberField::quadratic(-1).unwrap();
        assert_eq!(f.add(&el(&[1]), &el(&[1, 2])), Err(Error::DimensionMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn overflow_is_reported() {
        let q = NumberField::rationals();
        assert_eq!(q.mul(&el(&[i64::MAX]), &el(&[2])), Err(Error::Overflow));
    }
}
