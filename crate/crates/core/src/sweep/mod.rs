//! Parameter sweeps over the identity verifiers, their reports, and the
//! `partid` command line.

mod cli;
mod registry;
mod report;
mod table;

use std::time::Instant;

use rayon::prelude::*;

pub use cli::{run, EXIT_COUNTEREXAMPLE, EXIT_IO, EXIT_PASS, EXIT_USAGE};
pub use registry::{Identity, Registry};
pub use report::{write_json, write_tsv, IdentityReport};
pub use table::{print_table, TableKind};

use crate::{Error, Result};

/// Largest `n_max` / `umax` accepted for the conjecture sweeps without
/// `allow_large`.
pub const CONJECTURE_SOFT_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub identity: String,
    pub n_max: usize,
    pub r_max: usize,
    pub s_max: usize,
    pub umax: usize,
    pub oracle_cap: usize,
    /// Worker threads; `None` uses every available core.
    pub jobs: Option<usize>,
    pub allow_large: bool,
}

impl SweepConfig {
    /// Defaults: `r_max = n_max`, `s_max = umax = 4`, oracle cap 16.
    pub fn new(identity: impl Into<String>, n_max: usize) -> Self {
        Self {
            identity: identity.into(),
            n_max,
            r_max: n_max,
            s_max: 4,
            umax: 4,
            oracle_cap: crate::identities::DEFAULT_ORACLE_CAP,
            jobs: None,
            allow_large: false,
        }
    }

    fn validate(&self) -> Result<()> {
        let caps = [
            ("n-max", self.n_max),
            ("r-max", self.r_max),
            ("s-max", self.s_max),
            ("umax", self.umax),
            ("oracle-cap", self.oracle_cap),
            ("jobs", self.jobs.unwrap_or(1)),
        ];
        match caps.iter().find(|(_, v)| *v == 0) {
            Some((name, _)) => Err(Error::InvalidParameter(format!("--{name} must be at least 1"))),
            None => Ok(()),
        }
    }
}

/// Runs every grid point of the configured identity and returns the reports
/// sorted by parameter tuple. Points whose parameters violate a verifier
/// precondition are skipped.
pub fn run_sweep(config: &SweepConfig, registry: &Registry) -> Result<Vec<IdentityReport>> {
    config.validate()?;
    let identity = registry
        .get(&config.identity)
        .ok_or_else(|| Error::UnknownIdentity(config.identity.clone()))?;
    identity.validate(config)?;
    let grid = identity.grid(config);

    let evaluate = |params: &Vec<i64>| -> Result<Option<IdentityReport>> {
        let start = Instant::now();
        let sides = match identity.check(config, params) {
            Ok(sides) => sides,
            Err(Error::InvalidParameter(_)) => return Ok(None),
            Err(e) => return Err(e),
        };
        Ok(Some(IdentityReport {
            identity: identity.id().to_string(),
            params: identity.params().iter().map(|s| s.to_string()).zip(params.iter().copied()).collect(),
            equal: sides.lhs == sides.rhs,
            lhs: sides.lhs,
            rhs: sides.rhs,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        }))
    };

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = config.jobs {
        builder = builder.num_threads(jobs);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
    let results: Vec<Option<IdentityReport>> = pool.install(|| grid.par_iter().map(evaluate).collect::<Result<_>>())?;

    let mut reports: Vec<IdentityReport> = results.into_iter().flatten().collect();
    reports.sort_by_key(IdentityReport::param_values);
    Ok(reports)
}
