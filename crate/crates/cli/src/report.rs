//! Report structures for `verify`, `analyze` and `map`, with text renderings.
//! Class numbers and index-set positions are 1-based in every report.

use std::fmt::Write as _;

use covsys_core::{CoveringSystem, CrtContext, Factorization, FieldElement, IdealLattice, RepetitionBound, Verdict};
use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct IdealInfo {
    pub hnf: Vec<Vec<i64>>,
    pub norm: u64,
}

impl IdealInfo {
    fn of(i: &IdealLattice) -> Self {
        IdealInfo { hnf: i.hnf().clone(), norm: i.norm() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub field: String,
    pub classes: usize,
    pub modulus: IdealInfo,
    /// `Σ 1/N(I_i)` as `num/den`.
    pub density: String,
    pub verdict: &'static str,
    pub witness: Option<Vec<i64>>,
    pub overlapping_classes: Option<[usize; 2]>,
}

impl VerifyReport {
    pub fn build(sys: &CoveringSystem, verdict: &Verdict) -> Result<Self, CliError> {
        let d = sys.density()?;
        let (name, witness, pair) = match verdict {
            Verdict::Exact => ("exact", None, None),
            Verdict::NotCovering { witness } => ("not_covering", Some(witness.0.clone()), None),
            Verdict::Overlap { witness, first, second } => {
                ("overlap", Some(witness.0.clone()), Some([first + 1, second + 1]))
            }
        };
        Ok(VerifyReport {
            field: sys.field().name(),
            classes: sys.len(),
            modulus: IdealInfo::of(sys.modulus()),
            density: format!("{}/{}", d.num, d.den),
            verdict: name,
            witness,
            overlapping_classes: pair,
        })
    }

    pub fn is_exact(&self) -> bool {
        self.verdict == "exact"
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "field     {}", self.field);
        let _ = writeln!(s, "classes   {}", self.classes);
        let _ = writeln!(s, "modulus   {}  norm {}", matrix(&self.modulus.hnf), self.modulus.norm);
        let _ = writeln!(s, "density   {}", self.density);
        match self.verdict {
            "exact" => {
                let _ = writeln!(s, "verdict   Exact");
            }
            "not_covering" => {
                let _ = writeln!(s, "verdict   NotCovering");
                let _ = writeln!(s, "witness   {}", vector(self.witness.as_deref().unwrap_or_default()));
            }
            _ => {
                let [a, b] = self.overlapping_classes.unwrap_or_default();
                let _ = writeln!(s, "verdict   Overlap");
                let _ = writeln!(
                    s,
                    "witness   {} (classes {a} and {b})",
                    vector(self.witness.as_deref().unwrap_or_default())
                );
            }
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimeInfo {
    pub index: usize,
    pub hnf: Vec<Vec<i64>>,
    pub residue_char: u64,
    pub residue_degree: u32,
    pub norm: u64,
    pub exponent: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorInfo {
    /// 1-based index into the primes of the common modulus.
    pub prime: usize,
    pub exponent: u32,
}

/// `theorem2_bound` as a number, or the string `"all-equal"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Bound2 {
    Value(u64),
    Marker(&'static str),
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub index: usize,
    pub rep: Vec<i64>,
    pub modulus_hnf: Vec<Vec<i64>>,
    pub norm: u64,
    pub factorization: Vec<FactorInfo>,
    pub division_maximal: bool,
    pub subset_minimal: bool,
    pub repetition_count: usize,
    pub theorem1_bound: u64,
    /// Only division-maximal moduli carry the first bound; `None` otherwise.
    pub theorem1_ok: Option<bool>,
    pub theorem2_bound: Bound2,
    pub theorem2_ok: Option<bool>,
    pub cell: String,
    pub index_set: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma1Info {
    pub class: usize,
    pub b: u64,
    pub count: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionInfo {
    pub bounds: Vec<u64>,
    pub cells: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub classes: usize,
    pub distinct_moduli: usize,
    pub violations: Vec<String>,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub field: String,
    pub modulus: IdealInfo,
    pub primes: Vec<PrimeInfo>,
    pub classes: Vec<ClassReport>,
    pub partition: PartitionInfo,
    pub lemma1: Vec<Lemma1Info>,
    pub summary: Summary,
}

impl AnalyzeReport {
    /// Needs an exact system.
    pub fn build(sys: &CoveringSystem) -> Result<Self, CliError> {
        let ctx = sys.crt_context()?;
        let partition = sys.to_partition(&ctx)?;
        let lemma = partition.check_lemma1()?;
        let primes = primes_info(sys.factorization());
        let mut classes = Vec::with_capacity(sys.len());
        let mut violations = Vec::new();
        for (i, c) in sys.classes().iter().enumerate() {
            let division_maximal = sys.is_division_maximal(i)?;
            let subset_minimal = partition.is_subset_minimal(i)?;
            let count = sys.repetition_count(i)?;
            let t1 = sys.theorem1_bound(i)?;
            let t1_ok = division_maximal.then_some(count as u64 >= t1);
            let (t2, t2_ok) = match sys.theorem2_bound(i)? {
                RepetitionBound::Value(v) => (Bound2::Value(v), Some(count as u64 >= v)),
                RepetitionBound::AllEqual => (Bound2::Marker("all-equal"), None),
            };
            let n = i + 1;
            if t1_ok == Some(false) {
                violations.push(format!("class {n}: count {count} < t1 {t1}"));
            }
            if t2_ok == Some(false) {
                violations.push(format!("class {n}: count {count} below t2"));
            }
            if division_maximal != subset_minimal {
                violations.push(format!(
                    "class {n}: division-maximal {division_maximal} but subset-minimal {subset_minimal}"
                ));
            }
            let cell = &partition.cells()[i];
            classes.push(ClassReport {
                index: n,
                rep: c.rep().0.clone(),
                modulus_hnf: c.modulus().hnf().clone(),
                norm: c.modulus().norm(),
                factorization: sys
                    .exponents(i)?
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(j, &e)| FactorInfo { prime: j + 1, exponent: e })
                    .collect(),
                division_maximal,
                subset_minimal,
                repetition_count: count,
                theorem1_bound: t1,
                theorem1_ok: t1_ok,
                theorem2_bound: t2,
                theorem2_ok: t2_ok,
                cell: cell.to_string(),
                index_set: cell.index_set().iter().map(|k| k + 1).collect(),
            });
        }
        let lemma1: Vec<Lemma1Info> = lemma
            .entries
            .iter()
            .map(|e| Lemma1Info { class: e.cell + 1, b: e.b, count: e.count, holds: e.holds() })
            .collect();
        for e in lemma1.iter().filter(|e| !e.holds) {
            violations.push(format!("lemma 1 at class {}: count {} < b {}", e.class, e.count, e.b));
        }
        let distinct: std::collections::BTreeSet<&IdealLattice> = sys.classes().iter().map(|c| c.modulus()).collect();
        Ok(AnalyzeReport {
            field: sys.field().name(),
            modulus: IdealInfo::of(sys.modulus()),
            primes,
            summary: Summary {
                classes: sys.len(),
                distinct_moduli: distinct.len(),
                ok: violations.is_empty(),
                violations,
            },
            classes,
            partition: PartitionInfo {
                bounds: partition.bounds().to_vec(),
                cells: partition.cells().iter().map(|c| c.to_string()).collect(),
            },
            lemma1,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "field      {}", self.field);
        let factors: Vec<FactorInfo> =
            self.primes.iter().map(|p| FactorInfo { prime: p.index, exponent: p.exponent }).collect();
        let _ = writeln!(
            s,
            "modulus    {}  norm {}  = {}",
            matrix(&self.modulus.hnf),
            self.modulus.norm,
            factor_text(&factors)
        );
        for p in &self.primes {
            let _ = writeln!(
                s,
                "prime      P{} = {}  (p = {}, f = {}, norm {})",
                p.index,
                matrix(&p.hnf),
                p.residue_char,
                p.residue_degree,
                p.norm
            );
        }
        let _ = writeln!(s);
        let mut rows = vec![[
            "class",
            "rep",
            "modulus",
            "norm",
            "factors",
            "div-max",
            "count",
            "t1",
            "t2",
            "t1-ok",
            "t2-ok",
            "cell",
            "index set",
        ]
        .map(String::from)
        .to_vec()];
        for c in &self.classes {
            rows.push(vec![
                c.index.to_string(),
                vector(&c.rep),
                matrix(&c.modulus_hnf),
                c.norm.to_string(),
                factor_text(&c.factorization),
                yes_no(c.division_maximal).into(),
                c.repetition_count.to_string(),
                c.theorem1_bound.to_string(),
                match &c.theorem2_bound {
                    Bound2::Value(v) => v.to_string(),
                    Bound2::Marker(m) => m.to_string(),
                },
                c.theorem1_ok.map_or("-", yes_no).into(),
                c.theorem2_ok.map_or("-", yes_no).into(),
                c.cell.clone(),
                index_set(&c.index_set),
            ]);
        }
        s.push_str(&table(&rows));
        let _ = writeln!(s);
        let minimal: Vec<String> =
            self.classes.iter().filter(|c| c.subset_minimal).map(|c| c.index.to_string()).collect();
        let _ = writeln!(
            s,
            "partition  P({}; {}), {} cells; subset-minimal: {}",
            self.partition.bounds.len(),
            join(self.partition.bounds.iter()),
            self.partition.cells.len(),
            minimal.join(", ")
        );
        for (k, e) in self.lemma1.iter().enumerate() {
            let head = if k == 0 { "lemma 1" } else { "" };
            let _ = writeln!(
                s,
                "{head:<10} class {}: b = {}, count = {}, {}",
                e.class,
                e.b,
                e.count,
                if e.holds { "ok" } else { "VIOLATED" }
            );
        }
        if self.summary.ok {
            let _ = writeln!(
                s,
                "summary    {} classes, {} distinct moduli, all bounds hold",
                self.summary.classes, self.summary.distinct_moduli
            );
        } else {
            let _ = writeln!(s, "summary    {} violation(s)", self.summary.violations.len());
            for v in &self.summary.violations {
                let _ = writeln!(s, "           {v}");
            }
        }
        s
    }
}

fn primes_info(f: &Factorization) -> Vec<PrimeInfo> {
    f.factors()
        .iter()
        .enumerate()
        .map(|(j, (p, e))| PrimeInfo {
            index: j + 1,
            hnf: p.ideal.hnf().clone(),
            residue_char: p.residue_char,
            residue_degree: p.residue_deg,
            norm: p.norm(),
            exponent: *e,
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidueLine {
    pub residue: Vec<i64>,
    pub f: Vec<u64>,
    pub f_bar: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellLine {
    pub index: usize,
    pub rep: Vec<i64>,
    pub modulus_hnf: Vec<Vec<i64>>,
    pub cell: String,
    pub index_set: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MapReport {
    pub modulus: IdealInfo,
    pub primes: Vec<PrimeInfo>,
    pub bounds_f: Vec<u64>,
    pub bounds_f_bar: Vec<u64>,
    pub residues: Vec<ResidueLine>,
    pub classes: Vec<CellLine>,
}

impl MapReport {
    pub fn build(sys: &CoveringSystem) -> Result<Self, CliError> {
        let ctx = sys.crt_context()?;
        let residues = sys
            .modulus()
            .residues(sys.limits())?
            .into_iter()
            .map(|x| residue_line(&ctx, x))
            .collect::<Result<Vec<_>, _>>()?;
        let mut classes = Vec::with_capacity(sys.len());
        for (i, c) in sys.classes().iter().enumerate() {
            let cell = CoveringSystem::class_to_cell(&ctx, c)?;
            classes.push(CellLine {
                index: i + 1,
                rep: c.rep().0.clone(),
                modulus_hnf: c.modulus().hnf().clone(),
                cell: cell.to_string(),
                index_set: cell.index_set().iter().map(|k| k + 1).collect(),
            });
        }
        Ok(MapReport {
            modulus: IdealInfo::of(sys.modulus()),
            primes: primes_info(sys.factorization()),
            bounds_f: ctx.bounds_f(),
            bounds_f_bar: ctx.bounds_f_bar(),
            residues,
            classes,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# modulus {}  norm {}", matrix(&self.modulus.hnf), self.modulus.norm);
        let _ = writeln!(s, "# f bounds ({})", join(self.bounds_f.iter()));
        let _ = writeln!(s, "# f-bar bounds ({})", join(self.bounds_f_bar.iter()));
        let _ = writeln!(s, "residue\tf\tf-bar");
        for r in &self.residues {
            let _ = writeln!(s, "{}\t({})\t({})", vector(&r.residue), join(r.f.iter()), join(r.f_bar.iter()));
        }
        let _ = writeln!(s, "class\tcongruence\tcell\tindex set");
        for c in &self.classes {
            let _ = writeln!(
                s,
                "{}\t{} mod {}\t{}\t{}",
                c.index,
                vector(&c.rep),
                matrix(&c.modulus_hnf),
                c.cell,
                index_set(&c.index_set)
            );
        }
        s
    }
}

fn residue_line(ctx: &CrtContext, x: FieldElement) -> Result<ResidueLine, CliError> {
    Ok(ResidueLine { f: ctx.map_f(&x)?, f_bar: ctx.map_f_bar(&x)?, residue: x.0 })
}

fn join<T: ToString>(it: impl Iterator<Item = T>) -> String {
    it.map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn vector(v: &[i64]) -> String {
    format!("[{}]", join(v.iter()))
}

fn matrix(m: &[Vec<i64>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| join(r.iter()).replace(", ", " ")).collect();
    format!("[{}]", rows.join("; "))
}

fn index_set(s: &[usize]) -> String {
    format!("{{{}}}", join(s.iter()))
}

fn factor_text(f: &[FactorInfo]) -> String {
    if f.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> = f
        .iter()
        .map(|x| if x.exponent == 1 { format!("P{}", x.prime) } else { format!("P{}^{}", x.prime, x.exponent) })
        .collect();
    parts.join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|x| x.chars().count()).max().unwrap_or(0)).collect();
    let mut s = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            let _ = write!(line, "{cell:<w$}  ", w = widths[c]);
        }
        s.push_str(line.trim_end());
        s.push('\n');
    }
    s
}
