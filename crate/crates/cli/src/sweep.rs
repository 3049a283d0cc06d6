//! Runs checkers over a graph family in parallel and aggregates the reports.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use symcover::theorems::{
    verify_depth_monotone, verify_duality_suite, verify_gk_structure, verify_linbi, verify_linq_pol, verify_main,
    verify_reg_bound, verify_sympol, Limits, StatementId, Status, VerificationReport,
};
use symcover::{Error, FieldSpec, Graph, Result};

use crate::family::{enumerate_family, Family};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepConfig {
    pub family: Family,
    pub max_vertices: usize,
    pub kmax: u32,
    pub field: FieldSpec,
    pub statements: Vec<StatementId>,
    #[serde(skip)]
    pub limits: Limits,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.kmax < 1 {
            return Err(Error::Input("kmax must be at least 1".into()));
        }
        if self.statements.is_empty() {
            return Err(Error::Input("no statements selected".into()));
        }
        Ok(())
    }
}

/// Exit codes of a sweep.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Checkers grouped by how they are invoked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Check {
    Sympol,
    GkStructure,
    Main,
    Linbi,
    LinqPol,
    DepthMono,
    RegBound,
    Duality,
}

impl Check {
    fn of(id: StatementId) -> Check {
        use StatementId::*;
        match id {
            Sympol => Check::Sympol,
            GkVwc | GkCm => Check::GkStructure,
            MainLinres | MainLinquot => Check::Main,
            LinbiFwd | LinbiBwd => Check::Linbi,
            LinqPol => Check::LinqPol,
            DepthMono => Check::DepthMono,
            RegUpper | RegLower => Check::RegBound,
            TeraiDual | EagonReiner | RestrictLemma | ColonPower => Check::Duality,
        }
    }

    /// Checks over a range of powers run once with `kmax`; the rest run per `k`.
    fn per_power(&self) -> bool {
        !matches!(self, Check::DepthMono | Check::RegBound | Check::Duality)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepError {
    pub graph_index: usize,
    pub k: Option<u32>,
    /// Whether a resource cap stopped the check rather than an inconsistency.
    pub resource: bool,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub graphs: usize,
    pub reports: Vec<VerificationReport>,
    pub errors: Vec<SweepError>,
    pub summary: BTreeMap<String, usize>,
    pub truncated: bool,
}

impl SweepReport {
    /// 1 on any violation or inconsistency, else 3 on any exhausted budget
    /// or truncation, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.errors.iter().any(|e| !e.resource) || self.reports.iter().any(|r| r.status == Status::Violated) {
            EXIT_VIOLATION
        } else if self.truncated
            || !self.errors.is_empty()
            || self.reports.iter().any(|r| r.status == Status::ResourceExhausted)
        {
            EXIT_RESOURCE
        } else {
            EXIT_OK
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

fn run_check(check: Check, g: &Graph, k: u32, config: &SweepConfig) -> Result<Vec<VerificationReport>> {
    let (field, limits) = (config.field, &config.limits);
    match check {
        Check::Sympol => Ok(vec![verify_sympol(g, k)?]),
        Check::GkStructure => verify_gk_structure(g, k, field),
        Check::Main => verify_main(g, k, field, limits),
        Check::Linbi => verify_linbi(g, k, field, limits),
        Check::LinqPol => {
            let power = symcover::cover_ideal(g).symbolic_power(k)?;
            Ok(vec![verify_linq_pol(&power, limits)?])
        }
        Check::DepthMono => Ok(vec![verify_depth_monotone(g, k, field, limits)?]),
        Check::RegBound => verify_reg_bound(g, k, field, limits),
        Check::Duality => verify_duality_suite(g, field, limits),
    }
}

/// Runs every selected statement on every family member. Work stops being
/// scheduled once `cancel` is set, and the result is marked truncated.
pub fn run_sweep(config: &SweepConfig, cancel: &AtomicBool) -> Result<SweepReport> {
    config.validate()?;
    let graphs = enumerate_family(config.family, config.max_vertices, config.field)?;
    let mut checks: Vec<Check> = config.statements.iter().map(|&s| Check::of(s)).collect();
    checks.sort();
    checks.dedup();
    let mut tasks: Vec<(usize, Check, u32)> = Vec::new();
    for gi in 0..graphs.len() {
        for &c in &checks {
            if c.per_power() {
                tasks.extend((1..=config.kmax).map(|k| (gi, c, k)));
            } else {
                tasks.push((gi, c, config.kmax));
            }
        }
    }
    let truncated = AtomicBool::new(false);
    let results: Vec<(usize, Check, u32, Result<Vec<VerificationReport>>)> = tasks
        .par_iter()
        .filter_map(|&(gi, c, k)| {
            if cancel.load(Ordering::Relaxed) {
                truncated.store(true, Ordering::Relaxed);
                return None;
            }
            Some((gi, c, k, run_check(c, &graphs[gi], k, config)))
        })
        .collect();
    let mut keyed: Vec<((usize, StatementId, u32), VerificationReport)> = Vec::new();
    let mut errors = Vec::new();
    for (gi, c, k, r) in results {
        match r {
            Ok(rs) => keyed.extend(
                rs.into_iter()
                    .filter(|r| config.statements.contains(&r.statement))
                    .map(|r| ((gi, r.statement, k), r)),
            ),
            Err(e) => errors.push(SweepError {
                graph_index: gi,
                k: c.per_power().then_some(k),
                resource: matches!(e, Error::Resource(_)),
                message: e.to_string(),
            }),
        }
    }
    keyed.sort_by_key(|(key, _)| *key);
    errors.sort_by(|a, b| (a.graph_index, a.k, &a.message).cmp(&(b.graph_index, b.k, &b.message)));
    let reports: Vec<VerificationReport> = keyed.into_iter().map(|(_, r)| r).collect();
    let mut summary: BTreeMap<String, usize> = ["verified", "violated", "inapplicable", "resource-exhausted"]
        .iter()
        .map(|s| (s.to_string(), 0))
        .collect();
    for r in &reports {
        let key = json!(r.status).as_str().unwrap().to_string();
        *summary.entry(key).or_default() += 1;
    }
    Ok(SweepReport {
        config: config.clone(),
        graphs: graphs.len(),
        reports,
        errors,
        summary,
        truncated: truncated.load(Ordering::Relaxed),
    })
}
