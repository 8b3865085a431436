//! The `qicert` command line: argument handling, report assembly and exit codes.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use qicert_core::search::{self, FalsificationReport, Families};
use qicert_core::{
    evaluate_case, limit_scan, CaseId, CaseInstance, CheckConfig, Error, EvalConfig, QuadOptions,
    VerificationResult, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDINGS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qicert", version, about = "Numerically certify Qi-type integral inequalities")]
pub struct Cli {
    #[command(flatten)]
    pub tolerances: Tolerances,

    /// Exit 0 even when some verdict is indeterminate.
    #[arg(long, global = true)]
    pub lenient: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Tolerances {
    /// Absolute quadrature tolerance.
    #[arg(long, global = true, default_value_t = QuadOptions::default().tol)]
    pub tol: f64,
    /// Relative quadrature tolerance.
    #[arg(long, global = true, default_value_t = QuadOptions::default().rel_tol)]
    pub rel_tol: f64,
    #[arg(long, global = true, default_value_t = QuadOptions::default().max_subdivisions)]
    pub max_subdivisions: usize,
    /// Slack allowed on non-strict hypothesis checks.
    #[arg(long, global = true, default_value_t = CheckConfig::default().tau_h)]
    pub tau_h: f64,
    /// Slack added to the error bounds when issuing verdicts.
    #[arg(long, global = true, default_value_t = EvalConfig::default().tau_v)]
    pub tau_v: f64,
    /// Points of the Chebyshev grid used by hypothesis checks.
    #[arg(long, global = true, default_value_t = CheckConfig::default().grid)]
    pub grid: usize,
}

impl Tolerances {
    fn config(&self) -> Result<EvalConfig, Error> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v >= 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!("--{name} must be a nonnegative number, got {v}")))
            }
        };
        positive("tol", self.tol)?;
        positive("rel-tol", self.rel_tol)?;
        positive("tau-h", self.tau_h)?;
        positive("tau-v", self.tau_v)?;
        if self.grid < 2 {
            return Err(Error::InvalidParams(format!("--grid must be at least 2, got {}", self.grid)));
        }
        if self.tol == 0.0 && self.rel_tol == 0.0 {
            return Err(Error::InvalidParams("--tol and --rel-tol cannot both be zero".into()));
        }
        Ok(EvalConfig {
            quad: QuadOptions { tol: self.tol, rel_tol: self.rel_tol, max_subdivisions: self.max_subdivisions },
            check: CheckConfig { tau_h: self.tau_h, grid: self.grid },
            tau_v: self.tau_v,
        })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one instance file.
    Case {
        #[arg(long)]
        instance: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Falsification campaigns over several cases.
    Suite {
        /// `all` or a comma-separated list of case ids.
        #[arg(long, default_value = "all")]
        cases: String,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON family file used for every case instead of the curated ones.
        #[arg(long)]
        families: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Falsification campaign for one case.
    Falsify {
        #[arg(long = "case")]
        case_id: String,
        #[arg(long)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        families: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Finite-n links of the g/f limit statement as CSV.
    LimitScan {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        nmax: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print every case id with its inequality.
    ListCases,
}

/// Tolerances and seed a report was produced with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    pub tau_h: f64,
    pub tau_v: f64,
    pub grid: usize,
    pub strict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ConfigEcho {
    fn new(cfg: &EvalConfig, strict: bool, seed: Option<u64>) -> Self {
        ConfigEcho {
            tol: cfg.quad.tol,
            rel_tol: cfg.quad.rel_tol,
            max_subdivisions: cfg.quad.max_subdivisions,
            tau_h: cfg.check.tau_h,
            tau_v: cfg.tau_v,
            grid: cfg.check.grid,
            strict,
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool_version: String,
    pub command: String,
    pub config: ConfigEcho,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub results: Vec<VerificationResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub falsification: Vec<FalsificationReport>,
    pub wall_time_seconds: f64,
}

impl RunReport {
    /// True when nothing in the report should fail the run.
    pub fn is_clean(&self) -> bool {
        let strict = self.config.strict;
        let result_ok = |r: &VerificationResult| match r.verdict {
            Verdict::Violated => false,
            Verdict::Indeterminate => !strict,
            _ => true,
        };
        let campaign_ok = |f: &FalsificationReport| f.violations == 0 && (!strict || f.indeterminate == 0);
        self.results.iter().all(result_ok) && self.falsification.iter().all(campaign_ok)
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_clean() {
            EXIT_OK
        } else {
            EXIT_FINDINGS
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidParams(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidParams(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidParams(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::InvalidParams(format!("cannot write to stdout: {e}"))),
    }
}

fn parse_cases(list: &str) -> Result<Vec<CaseId>, Error> {
    if list.trim() == "all" {
        return Ok(CaseId::ALL.to_vec());
    }
    list.split(',').map(|s| s.trim().parse()).collect()
}

/// Renders limit-scan rows as CSV.
pub fn limit_csv(rows: &[qicert_core::LimitRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "S_n", "c_n", "lower_lhs", "lower_rhs", "upper_lhs", "upper_rhs", "lower_holds", "upper_holds"])
        .expect("in-memory write");
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.s_n.to_string(),
            r.c_n.to_string(),
            r.lower_lhs.to_string(),
            r.lower_rhs.to_string(),
            r.upper_lhs.to_string(),
            r.upper_rhs.to_string(),
            r.lower_holds.to_string(),
            r.upper_holds.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

fn report_json(report: &RunReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, Error> {
    let cfg = cli.tolerances.config()?;
    let strict = !cli.lenient;
    let started = Instant::now();
    let finish = |command: &str, seed, results, falsification| RunReport {
        tool_version: env!("CARGO_PKG_VERSION").to_owned(),
        command: command.to_owned(),
        config: ConfigEcho::new(&cfg, strict, seed),
        results,
        falsification,
        wall_time_seconds: started.elapsed().as_secs_f64(),
    };

    match &cli.command {
        Command::Case { instance, out } => {
            let inst: CaseInstance = read_json(instance)?;
            let result = evaluate_case(&inst, &cfg)?;
            let report = finish("case", None, vec![result], Vec::new());
            emit(&report_json(&report), out.as_deref(), stdout)?;
            Ok(report.exit_code())
        }
        Command::Suite { cases, count, seed, families, out } => {
            let cases = parse_cases(cases)?;
            let families: Option<Families> = families.as_deref().map(read_json).transpose()?;
            let reports = search::suite(&cases, *count, *seed, families.as_ref(), &cfg)?;
            let report = finish("suite", Some(*seed), Vec::new(), reports);
            emit(&report_json(&report), out.as_deref(), stdout)?;
            Ok(report.exit_code())
        }
        Command::Falsify { case_id, budget, seed, families, out } => {
            let case: CaseId = case_id.parse()?;
            let families = match families {
                Some(path) => read_json(path)?,
                None => search::curated(case),
            };
            let campaign = search::falsify(case, *budget, &families, *seed, &cfg)?;
            let report = finish("falsify", Some(*seed), Vec::new(), vec![campaign]);
            emit(&report_json(&report), out.as_deref(), stdout)?;
            Ok(report.exit_code())
        }
        Command::LimitScan { instance, nmax, out } => {
            let inst: CaseInstance = read_json(instance)?;
            let rows = limit_scan(&inst, *nmax, &cfg)?;
            emit(&limit_csv(&rows), out.as_deref(), stdout)?;
            let all_hold = rows.iter().all(|r| r.lower_holds && r.upper_holds);
            Ok(if all_hold { EXIT_OK } else { EXIT_FINDINGS })
        }
        Command::ListCases => {
            let width = CaseId::ALL.iter().map(|c| c.as_str().len()).max().unwrap_or(0);
            let text: String =
                CaseId::ALL.iter().map(|c| format!("{:width$}  {}\n", c.as_str(), c.statement())).collect();
            emit(&text, None, stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "qicert: {e}");
            if e.is_domain() {
                EXIT_DOMAIN
            } else {
                EXIT_USAGE
            }
        }
    }
}
