//! The four subcommands as functions from parsed input to an [`Outcome`].

use covsys_core::ideal::primes_above;
use covsys_core::{random_system, GeneratedSystem, GenerationLimits, Limits};
use serde::Serialize;

use crate::report::{AnalyzeReport, MapReport, VerifyReport};
use crate::{CliError, FieldSpec, Outcome, SystemFile};

fn render<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
        s.push('\n');
        s
    } else {
        text(value)
    }
}

/// Exit 0 for an exact system, 1 otherwise.
pub fn verify(file: &SystemFile, limits: &Limits, json: bool) -> Result<Outcome, CliError> {
    let sys = file.to_system(limits)?;
    let report = VerifyReport::build(&sys, &sys.verify_exact()?)?;
    let code = if report.is_exact() { 0 } else { 1 };
    Ok(Outcome { stdout: render(json, &report, VerifyReport::to_text), code })
}

/// Full bound analysis of an exact system; a non-exact one gets its verdict
/// and exit 1.
pub fn analyze(file: &SystemFile, limits: &Limits, json: bool) -> Result<Outcome, CliError> {
    let sys = file.to_system(limits)?;
    let verdict = sys.verify_exact()?;
    if !verdict.is_exact() {
        let report = VerifyReport::build(&sys, &verdict)?;
        return Ok(Outcome { stdout: render(json, &report, VerifyReport::to_text), code: 1 });
    }
    let report = AnalyzeReport::build(&sys)?;
    let code = if report.summary.ok { 0 } else { 1 };
    Ok(Outcome { stdout: render(json, &report, AnalyzeReport::to_text), code })
}

pub fn map(file: &SystemFile, limits: &Limits, json: bool) -> Result<Outcome, CliError> {
    let sys = file.to_system(limits)?;
    let report = MapReport::build(&sys)?;
    Ok(Outcome { stdout: render(json, &report, MapReport::to_text), code: 0 })
}

/// Seeded random exact system; the pool is every prime above the given
/// rational primes.
pub fn construct(
    field: &FieldSpec,
    seed: u64,
    steps: usize,
    rational_primes: &[u64],
    gen: &GenerationLimits,
) -> Result<(SystemFile, GeneratedSystem), CliError> {
    let f = field.build()?;
    let mut pool = Vec::new();
    for &p in rational_primes {
        pool.extend(primes_above(&f, p, &gen.limits).map_err(CliError::Input)?);
    }
    let generated = random_system(&f, seed, steps, &pool, gen).map_err(CliError::Input)?;
    Ok((SystemFile::from_system(&generated.system), generated))
}
