//! The JSON system file: a field description and a list of classes, each a
//! representative in basis coordinates and generators of its modulus.

use std::sync::Arc;

use covsys_core::number_field::FieldKind;
use covsys_core::{CongruenceClass, CoveringSystem, FieldElement, IdealLattice, Limits, NumberField};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Rationals,
    Quadratic {
        d: i64,
    },
    /// `table[a][b]` holds the coordinates of `ω_a ω_b`.
    Table {
        labels: Vec<String>,
        table: Vec<Vec<Vec<i64>>>,
    },
}

impl FieldSpec {
    pub fn build(&self) -> Result<Arc<NumberField>, CliError> {
        let f = match self {
            FieldSpec::Rationals => NumberField::rationals(),
            FieldSpec::Quadratic { d } => NumberField::quadratic(*d).map_err(CliError::Input)?,
            FieldSpec::Table { labels, table } => {
                NumberField::from_table(labels.clone(), table.clone()).map_err(CliError::Input)?
            }
        };
        Ok(Arc::new(f))
    }

    pub fn of(field: &NumberField) -> Self {
        match field.kind() {
            FieldKind::Rationals => FieldSpec::Rationals,
            FieldKind::Quadratic { d } => FieldSpec::Quadratic { d: *d },
            FieldKind::Table => {
                let n = field.degree();
                let table = (0..n).map(|a| (0..n).map(|b| field.table_entry(a, b).to_vec()).collect()).collect();
                FieldSpec::Table { labels: field.labels().to_vec(), table }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassSpec {
    pub rep: Vec<i64>,
    pub modulus_gens: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub field: FieldSpec,
    pub classes: Vec<ClassSpec>,
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("system files always serialize")
    }

    pub fn to_system(&self, limits: &Limits) -> Result<CoveringSystem, CliError> {
        let field = self.field.build()?;
        let element = |v: &[i64]| {
            let x = FieldElement(v.to_vec());
            field.check(&x).map(|_| x).map_err(CliError::Input)
        };
        let mut classes = Vec::with_capacity(self.classes.len());
        for c in &self.classes {
            let gens = c.modulus_gens.iter().map(|g| element(g)).collect::<Result<Vec<_>, _>>()?;
            if gens.is_empty() {
                return Err(CliError::Input(covsys_core::Error::ZeroIdeal));
            }
            let modulus = IdealLattice::from_generators(&field, &gens).map_err(CliError::Input)?;
            classes.push(CongruenceClass::new(&element(&c.rep)?, modulus).map_err(CliError::Input)?);
        }
        CoveringSystem::new(classes, limits).map_err(CliError::Input)
    }

    /// Writes a system back out, using the HNF rows of each modulus as its
    /// generators.
    pub fn from_system(sys: &CoveringSystem) -> Self {
        SystemFile {
            field: FieldSpec::of(sys.field()),
            classes: sys
                .classes()
                .iter()
                .map(|c| ClassSpec { rep: c.rep().0.clone(), modulus_gens: c.modulus().hnf().clone() })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_round_trip() {
        let text = r#"{"field":{"type":"quadratic","d":-1},
            "classes":[{"rep":[0,0],"modulus_gens":[[1,1]]},{"rep":[1,0],"modulus_gens":[[1,1]]}]}"#;
        let file = SystemFile::parse(text).unwrap();
        let sys = file.to_system(&Limits::default()).unwrap();
        assert_eq!(sys.len(), 2);
        let again = SystemFile::from_system(&sys);
        assert_eq!(again.field, FieldSpec::Quadratic { d: -1 });
        assert_eq!(again.to_system(&Limits::default()).unwrap().modulus(), sys.modulus());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(SystemFile::parse("{"), Err(CliError::Parse(_))));
        assert!(matches!(SystemFile::parse(r#"{"field":{"type":"cubic"},"classes":[]}"#), Err(CliError::Parse(_))));
        let wrong_dim =
            SystemFile::parse(r#"{"field":{"type":"rationals"},"classes":[{"rep":[0,1],"modulus_gens":[[2]]}]}"#)
                .unwrap();
        assert_eq!(wrong_dim.to_system(&Limits::default()).unwrap_err().exit_code(), 2);
        let empty = SystemFile::parse(r#"{"field":{"type":"rationals"},"classes":[]}"#).unwrap();
        assert_eq!(empty.to_system(&Limits::default()).unwrap_err().exit_code(), 2);
    }
}
