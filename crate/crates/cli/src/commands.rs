//! Subcommand bodies. Each returns the rendered output and an exit status.

use std::fmt::Write as _;
use std::sync::Arc;

use flagdom_core::chainball::{
    connect_with, random_domain_point, rng_from_seed, verify_certificate, ChainParams, DomainPoint,
};
use flagdom_core::grading::parse_labels;
use flagdom_core::verify::{selftest, SuiteOutcome};
use flagdom_core::{classify, DomainSpec, Family, RootSystem, RootSystemType};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{CertificateJson, Sci};
use crate::report::{render_report, render_summary, to_json, EnumerationSummary, Format, ReportRow};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_INVARIANT: u8 = 2;
pub const EXIT_CHAIN: u8 = 3;

/// Invalid input; maps to exit status 1.
#[derive(Debug, Error)]
#[error("{0}")]
pub struct InputError(pub String);

impl InputError {
    fn from_display(e: impl std::fmt::Display) -> Self {
        Self(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub status: u8,
}

pub fn root_type(family: &str, rank: usize) -> Result<RootSystemType, InputError> {
    let family: Family = family.parse().map_err(InputError::from_display)?;
    RootSystemType::new(family, rank).map_err(InputError::from_display)
}

pub fn classify_labels(ty: RootSystemType, labels: &str) -> Result<ReportRow, InputError> {
    let labels = parse_labels(labels).map_err(InputError::from_display)?;
    let rs = Arc::new(RootSystem::new(ty));
    let spec = DomainSpec::new(rs, labels).map_err(InputError::from_display)?;
    Ok(ReportRow::from(&classify(&spec)))
}

pub fn cmd_classify(ty: RootSystemType, labels: &str, format: Format) -> Result<Output, InputError> {
    let row = classify_labels(ty, labels)?;
    Ok(Output {
        body: render_report(&row, format),
        status: EXIT_OK,
    })
}

/// Classifies every valid labeling in parallel; rows keep lexicographic
/// label order.
pub fn enumerate(ty: RootSystemType) -> EnumerationSummary {
    let rs = Arc::new(RootSystem::new(ty));
    let reports: Vec<_> = DomainSpec::all(&rs).par_iter().map(classify).collect();
    EnumerationSummary::new(ty, &reports)
}

pub fn cmd_enumerate(ty: RootSystemType, format: Format) -> Output {
    Output {
        body: render_summary(&enumerate(ty), format),
        status: EXIT_OK,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteLine {
    pub suite: String,
    #[serde(rename = "type")]
    pub root_type: String,
    pub checks: usize,
    pub passed: bool,
    pub violations: Vec<ViolationLine>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationLine {
    pub invariant: String,
    pub witness: String,
}

impl From<&SuiteOutcome> for SuiteLine {
    fn from(o: &SuiteOutcome) -> Self {
        Self {
            suite: o.suite.clone(),
            root_type: o.root_type.to_string(),
            checks: o.checks,
            passed: o.passed(),
            violations: o
                .violations
                .iter()
                .map(|v| ViolationLine {
                    invariant: v.invariant.to_string(),
                    witness: v.witness.clone(),
                })
                .collect(),
        }
    }
}

/// Renders suite outcomes; the status is 2 if any suite failed.
pub fn render_selftest(outcomes: &[SuiteOutcome], format: Format) -> Output {
    let lines: Vec<SuiteLine> = outcomes.iter().map(SuiteLine::from).collect();
    let failed = lines.iter().filter(|l| !l.passed).count();
    let body = match format {
        Format::Json => to_json(&lines),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["suite", "type", "checks", "passed", "invariant", "witness"])
                .expect("in-memory write");
            for l in &lines {
                let head = [l.suite.clone(), l.root_type.clone(), l.checks.to_string(), l.passed.to_string()];
                if l.violations.is_empty() {
                    w.write_record(head.iter().map(String::as_str).chain(["", ""]))
                        .expect("in-memory write");
                }
                for v in &l.violations {
                    w.write_record(
                        head.iter()
                            .map(String::as_str)
                            .chain([v.invariant.as_str(), v.witness.as_str()]),
                    )
                    .expect("in-memory write");
                }
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Text => {
            let mut out = String::new();
            for l in &lines {
                let tag = if l.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{tag} {:<24} {:<4} {} checks", l.suite, l.root_type, l.checks);
                for v in &l.violations {
                    let _ = writeln!(out, "     violated: {}  witness: {}", v.invariant, v.witness);
                }
            }
            let _ = writeln!(out, "{} suites, {} failed", lines.len(), failed);
            out
        }
    };
    Output {
        body,
        status: if failed == 0 { EXIT_OK } else { EXIT_INVARIANT },
    }
}

pub fn cmd_selftest(max_rank: usize, format: Format) -> Result<Output, InputError> {
    if max_rank == 0 {
        return Err(InputError("selftest needs a maximum rank of at least 1".into()));
    }
    Ok(render_selftest(&selftest(max_rank), format))
}

/// Seed handed to the search for pair `i` of a run seeded with `seed`.
pub fn pair_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(i as u64)
}

/// `pairs` random point pairs drawn from one seeded stream.
pub fn sample_pairs(seed: u64, pairs: usize) -> Result<Vec<(DomainPoint, DomainPoint)>, InputError> {
    let mut rng = rng_from_seed(seed);
    (0..pairs)
        .map(|_| {
            let x = random_domain_point(&mut rng).map_err(InputError::from_display)?;
            let y = random_domain_point(&mut rng).map_err(InputError::from_display)?;
            Ok((x, y))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainFailureJson {
    pub pair: usize,
    pub seed: u64,
    pub best_residual: Option<Sci>,
    pub cycles_reached: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainRun {
    pub seed: u64,
    pub pairs: usize,
    pub kmax: usize,
    pub tol: Sci,
    pub connected: usize,
    pub max_k: usize,
    pub max_residual: Sci,
    pub certificates: Vec<CertificateJson>,
    pub failures: Vec<ChainFailureJson>,
}

impl ChainRun {
    pub fn success_rate(&self) -> f64 {
        if self.pairs == 0 {
            1.0
        } else {
            self.connected as f64 / self.pairs as f64
        }
    }
}

/// Connects `pairs` sampled pairs and re-verifies every certificate.
pub fn run_chain(seed: u64, pairs: usize, params: &ChainParams) -> Result<ChainRun, InputError> {
    let points = sample_pairs(seed, pairs)?;
    let results: Vec<_> = points
        .par_iter()
        .enumerate()
        .map(|(i, (x, y))| {
            let s = pair_seed(seed, i);
            match connect_with(x, y, params, s) {
                Ok(cert) => match verify_certificate(&cert, params) {
                    Ok(_) => Ok(cert),
                    Err(reason) => Err(ChainFailureJson {
                        pair: i,
                        seed: s,
                        best_residual: None,
                        cycles_reached: cert.k(),
                        reason: format!("re-verification failed: {reason}"),
                    }),
                },
                Err(f) => Err(ChainFailureJson {
                    pair: i,
                    seed: f.seed,
                    best_residual: f.best_residual.is_finite().then_some(Sci(f.best_residual)),
                    cycles_reached: f.cycles_reached,
                    reason: f.reason,
                }),
            }
        })
        .collect();

    let mut certificates = Vec::new();
    let mut failures = Vec::new();
    let (mut max_k, mut max_residual) = (0, 0.0f64);
    for r in results {
        match r {
            Ok(cert) => {
                max_k = max_k.max(cert.k());
                max_residual = cert.residuals.iter().copied().fold(max_residual, f64::max);
                certificates.push(CertificateJson::new(&cert));
            }
            Err(f) => failures.push(f),
        }
    }
    Ok(ChainRun {
        seed,
        pairs,
        kmax: params.kmax,
        tol: Sci(params.tol_mem),
        connected: certificates.len(),
        max_k,
        max_residual: Sci(max_residual),
        certificates,
        failures,
    })
}

pub fn cmd_chain(seed: u64, pairs: usize, params: &ChainParams, format: Format) -> Result<Output, InputError> {
    if !(params.tol_mem.is_finite() && params.tol_mem > 0.0) {
        return Err(InputError(format!("tolerance must be positive, got {}", params.tol_mem)));
    }
    let run = run_chain(seed, pairs, params)?;
    let status = if run.failures.is_empty() { EXIT_OK } else { EXIT_CHAIN };
    let body = match format {
        Format::Json => to_json(&run),
        Format::Text => {
            let mut out = String::new();
            for f in &run.failures {
                let best = f.best_residual.map_or("none".to_string(), |r| format!("{:.3e}", r.0));
                let _ = writeln!(
                    out,
                    "FAIL pair {} seed {} cycles {} best residual {best}: {}",
                    f.pair, f.seed, f.cycles_reached, f.reason
                );
            }
            let _ = writeln!(
                out,
                "seed {}: {}/{} pairs connected ({:.1}%), max k {}, max residual {:.3e}",
                run.seed,
                run.connected,
                run.pairs,
                100.0 * run.success_rate(),
                run.max_k,
                run.max_residual.0
            );
            out
        }
        Format::Csv => return Err(InputError("chain output is json or text".into())),
    };
    Ok(Output { body, status })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(root_type("H", 2).is_err());
        assert!(root_type("D", 3).is_err());
        let a2 = root_type("A", 2).unwrap();
        assert!(classify_labels(a2, "Q").is_err());
        assert!(classify_labels(a2, "Q,X").is_err());
        let e = classify_labels(a2, "V,V").unwrap_err();
        assert!(e.0.contains("no noncompact simple root"), "{e}");
        assert!(cmd_selftest(0, Format::Text).is_err());
    }

    #[test]
    fn enumeration_row_order_is_lexicographic() {
        let s = enumerate(root_type("B", 3).unwrap());
        assert!(s.rows.windows(2).all(|w| w[0].labels < w[1].labels));
        assert_eq!(s.valid_labelings, 27 - 8);
    }

    #[test]
    fn zero_step_bound_fails_for_generic_pairs() {
        let params = ChainParams {
            kmax: 0,
            ..ChainParams::default()
        };
        let out = cmd_chain(11, 1, &params, Format::Json).unwrap();
        assert_eq!(out.status, EXIT_CHAIN);
    }
}
