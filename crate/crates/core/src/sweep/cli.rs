use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::{print_table, run_sweep, write_json, write_tsv, Format, Registry, SweepConfig, TableKind};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser)]
#[command(name = "partid", version, about = "Exact checks of partition-sum identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep one identity over a parameter grid and write a report
    Verify(VerifyArgs),
    /// Print a table of <λ,r>, Stirling numbers or P_jk
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long)]
        max: usize,
    },
    /// List the registered identities
    List,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    identity: String,
    #[arg(long)]
    n_max: usize,
    /// Defaults to n-max
    #[arg(long)]
    r_max: Option<usize>,
    #[arg(long, default_value_t = 4)]
    s_max: usize,
    #[arg(long, default_value_t = 4)]
    umax: usize,
    #[arg(long, default_value_t = crate::identities::DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Worker threads; defaults to all cores
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Report path; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record per-point wall-clock times in the report
    #[arg(long)]
    timings: bool,
    /// Lift the default caps on conjecture sweeps
    #[arg(long)]
    allow_large: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Tsv => Format::Tsv,
        }
    }
}

/// Runs the command line against `registry` and returns the exit code:
/// 0 all checks passed, 1 some check failed, 2 usage error, 3 I/O error.
pub fn run<I, T>(args: I, registry: &Registry, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let written = match cli.command {
        Command::List => registry
            .iter()
            .try_for_each(|i| writeln!(stdout, "{:<14} {}", i.id(), i.anchor()))
            .map(|_| EXIT_PASS),
        Command::Table { kind, max } => write!(stdout, "{}", print_table(kind, max)).map(|_| EXIT_PASS),
        Command::Verify(args) => return verify(args, registry, stdout, stderr),
    };
    written.unwrap_or(EXIT_IO)
}

fn verify(args: VerifyArgs, registry: &Registry, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let config = SweepConfig {
        identity: args.identity,
        n_max: args.n_max,
        r_max: args.r_max.unwrap_or(args.n_max),
        s_max: args.s_max,
        umax: args.umax,
        oracle_cap: args.oracle_cap,
        jobs: args.jobs,
        allow_large: args.allow_large,
    };
    let reports = match run_sweep(&config, registry) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let param_names = registry.get(&config.identity).map(|i| i.params()).unwrap_or_default();

    let emit = |out: &mut dyn Write| match Format::from(args.format) {
        Format::Json => write_json(out, &config, &reports, args.timings),
        Format::Tsv => write_tsv(out, &reports, param_names, args.timings),
    };
    let emitted = match &args.out {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            emit(&mut w)?;
            w.flush()
        }),
        None => emit(stdout),
    };
    if let Err(e) = emitted {
        let _ = writeln!(stderr, "error: cannot write report: {e}");
        return EXIT_IO;
    }

    let failed: Vec<_> = reports.iter().filter(|r| !r.equal).collect();
    for r in &failed {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(stderr, "counterexample {} [{}]\n  lhs: {}\n  rhs: {}", r.identity, params.join(", "), r.lhs, r.rhs);
    }
    let _ = writeln!(
        stderr,
        "{}: {} checked, {} passed, {} failed",
        config.identity,
        reports.len(),
        reports.len() - failed.len(),
        failed.len()
    );
    if failed.is_empty() {
        EXIT_PASS
    } else {
        EXIT_COUNTEREXAMPLE
    }
}
