use std::io::{self, Write};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::SweepConfig;

/// Outcome of one grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity: String,
    /// Parameter values in the verifier's declared order.
    pub params: Vec<(String, i64)>,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub elapsed_ms: f64,
}

impl IdentityReport {
    pub fn param_values(&self) -> Vec<i64> {
        self.params.iter().map(|(_, v)| *v).collect()
    }
}

struct Params<'a>(&'a [(String, i64)]);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct ConfigView {
    n_max: usize,
    r_max: usize,
    s_max: usize,
    umax: usize,
    oracle_cap: usize,
}

#[derive(Serialize)]
struct ResultView<'a> {
    params: Params<'a>,
    lhs: &'a str,
    rhs: &'a str,
    equal: bool,
    elapsed_ms: Option<f64>,
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
}

#[derive(Serialize)]
struct ReportView<'a> {
    identity: &'a str,
    config: ConfigView,
    results: Vec<ResultView<'a>>,
    summary: Summary,
}

/// Wall-clock times are written only when `timings` is set, so that reports
/// of identical sweeps are byte-identical by default.
pub fn write_json(out: &mut dyn Write, config: &SweepConfig, reports: &[IdentityReport], timings: bool) -> io::Result<()> {
    let passed = reports.iter().filter(|r| r.equal).count();
    let view = ReportView {
        identity: &config.identity,
        config: ConfigView {
            n_max: config.n_max,
            r_max: config.r_max,
            s_max: config.s_max,
            umax: config.umax,
            oracle_cap: config.oracle_cap,
        },
        results: reports
            .iter()
            .map(|r| ResultView {
                params: Params(&r.params),
                lhs: &r.lhs,
                rhs: &r.rhs,
                equal: r.equal,
                elapsed_ms: timings.then(|| (r.elapsed_ms * 1e3).round() / 1e3),
            })
            .collect(),
        summary: Summary {
            total: reports.len(),
            passed,
            failed: reports.len() - passed,
        },
    };
    serde_json::to_writer_pretty(&mut *out, &view)?;
    writeln!(out)
}

/// One header line, then one row per report.
pub fn write_tsv(out: &mut dyn Write, reports: &[IdentityReport], param_names: &[&str], timings: bool) -> io::Result<()> {
    let mut header: Vec<&str> = param_names.to_vec();
    header.extend(["lhs", "rhs", "equal"]);
    if timings {
        header.push("elapsed_ms");
    }
    writeln!(out, "{}", header.join("\t"))?;
    for r in reports {
        let mut row: Vec<String> = r.params.iter().map(|(_, v)| v.to_string()).collect();
        row.extend([r.lhs.clone(), r.rhs.clone(), r.equal.to_string()]);
        if timings {
            row.push(format!("{:.3}", r.elapsed_ms));
        }
        writeln!(out, "{}", row.join("\t"))?;
    }
    Ok(())
}
