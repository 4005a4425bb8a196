//! Command-line front end. Argument parsing lives here (not in the binary) so that the
//! integration tests can drive every subcommand in-process.
//!
//! Exit status: 0 on success, 1 when a verification check fails, 2 on invalid input.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::colourings::{enumerate_colourings, format_line};
use crate::csp::{compute_csp, schur_expand, verify_kato, CspReport};
use crate::error::Error;
use crate::geometry::GeometryReport;
use crate::hessenberg::{all_reverse_hessenberg, ReverseHessenberg};
use crate::partitions::kostka_table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hesscsp",
    version,
    about = "Chromatic quasisymmetric polynomials of unit interval graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Split enumeration across threads. Output is identical either way.
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Debug, Args, Clone)]
pub struct RArgs {
    /// Reverse Hessenberg function as comma-separated values, e.g. 0,0,1
    #[arg(long = "r", allow_hyphen_values = true)]
    pub r: String,
    /// Number of colours
    #[arg(long)]
    pub m: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Subcommand, Clone)]
pub enum Command {
    /// Graph, feasibility and dimension data for r
    Info(RArgs),
    /// Monomial coefficients of CSP_r
    Csp(RArgs),
    /// Schur coefficients c_λ(q)
    Schur(RArgs),
    /// Check nonnegativity, palindromicity and support of every c_λ
    Verify(RArgs),
    /// Poincaré polynomial from the bundle structure and from the cell paving
    Poincare(RArgs),
    /// List proper colourings with their statistics
    Colourings {
        #[command(flatten)]
        args: RArgs,
        /// Stop after this many colourings
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Kostka table for partitions of n with at most m parts
    Kostka {
        /// Size of the partitions
        #[arg(long)]
        n: usize,
        /// Maximum number of parts
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Verify every reverse Hessenberg function on [n]
    Sweep {
        /// Number of vertices
        #[arg(long)]
        n: usize,
        /// Check only this number of colours
        #[arg(long, conflicts_with = "m_max")]
        m: Option<usize>,
        /// Check every feasible m from the minimum up to this cap (default n + 1)
        #[arg(long)]
        m_max: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Info,
    Csp,
    Schur,
    Verify,
    Poincare,
    Colourings,
    Kostka,
    Sweep,
}

/// Validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub r: Option<ReverseHessenberg>,
    pub n: usize,
    pub m: usize,
    /// Sweep only: inclusive upper bound on m; `None` means the single value `m`.
    pub m_max: Option<usize>,
    pub format: Format,
    pub parallel: bool,
    pub limit: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn invalid(message: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn check_m(m: usize) -> Result<usize, Error> {
    if m == 0 {
        return Err(Error::Parse("m must be at least 1".into()));
    }
    Ok(m)
}

impl TryFrom<Command> for RunConfig {
    type Error = Error;

    fn try_from(command: Command) -> Result<Self, Error> {
        let with_r = |kind, a: RArgs, limit| -> Result<Self, Error> {
            let r: ReverseHessenberg = a.r.parse()?;
            Ok(Self {
                command: kind,
                n: r.len(),
                r: Some(r),
                m: check_m(a.m)?,
                m_max: None,
                format: a.common.format,
                parallel: a.common.parallel,
                limit,
            })
        };
        match command {
            Command::Info(a) => with_r(CommandKind::Info, a, None),
            Command::Csp(a) => with_r(CommandKind::Csp, a, None),
            Command::Schur(a) => with_r(CommandKind::Schur, a, None),
            Command::Verify(a) => with_r(CommandKind::Verify, a, None),
            Command::Poincare(a) => with_r(CommandKind::Poincare, a, None),
            Command::Colourings { args, limit } => with_r(CommandKind::Colourings, args, limit),
            Command::Kostka { n, m, common } => Ok(Self {
                command: CommandKind::Kostka,
                r: None,
                n,
                m: check_m(m)?,
                m_max: None,
                format: common.format,
                parallel: common.parallel,
                limit: None,
            }),
            Command::Sweep {
                n,
                m,
                m_max,
                common,
            } => {
                let (m, m_max) = match m {
                    Some(m) => (check_m(m)?, None),
                    None => (1, Some(check_m(m_max.unwrap_or(n + 1))?)),
                };
                Ok(Self {
                    command: CommandKind::Sweep,
                    r: None,
                    n,
                    m,
                    m_max,
                    format: common.format,
                    parallel: common.parallel,
                    limit: None,
                })
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            return Outcome {
                code,
                stdout: if code == EXIT_OK {
                    text.clone()
                } else {
                    String::new()
                },
                stderr: if code == EXIT_OK { String::new() } else { text },
            };
        }
    };
    match RunConfig::try_from(cli.command) {
        Ok(config) => run(&config),
        Err(e) => Outcome::invalid(e),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn infeasible_warning(r: &ReverseHessenberg, m: usize) -> String {
    format!(
        "warning: r = {r} needs at least {} colours; m = {m} admits no proper colouring, CSP_r = 0\n",
        r.min_colours()
    )
}

pub fn run(config: &RunConfig) -> Outcome {
    match config.command {
        CommandKind::Kostka => return kostka(config),
        CommandKind::Sweep => return sweep(config),
        _ => {}
    }
    let r = config.r.as_ref().expect("command requires r");
    let m = config.m;
    let mut out = match config.command {
        CommandKind::Info => info(r, m, config.format),
        CommandKind::Csp | CommandKind::Schur | CommandKind::Verify => csp_like(config, r),
        CommandKind::Poincare => poincare(r, m, config),
        CommandKind::Colourings => colourings(r, m, config),
        CommandKind::Kostka | CommandKind::Sweep => unreachable!(),
    };
    let warns = matches!(
        config.command,
        CommandKind::Csp | CommandKind::Schur | CommandKind::Verify | CommandKind::Colourings
    );
    if warns && !r.is_feasible(m) {
        out.stderr.insert_str(0, &infeasible_warning(r, m));
    }
    out
}

fn info(r: &ReverseHessenberg, m: usize, format: Format) -> Outcome {
    let graph = r.graph();
    let feasible = r.is_feasible(m);
    let d_r = crate::geometry::dimension(r, m).ok();
    let fibres = crate::geometry::fibre_dimensions(r, m).ok();
    if format == Format::Json {
        return Outcome::ok(to_json(&json!({
            "r": r,
            "n": r.len(),
            "m": m,
            "E_r": r.edge_count(),
            "edges": graph.edges,
            "feasible": feasible,
            "min_colours": r.min_colours(),
            "d_r": d_r,
            "fibre_dims": fibres,
        })));
    }
    let mut s = String::new();
    let edges: Vec<String> = graph
        .edges
        .iter()
        .map(|(j, i)| format!("({j},{i})"))
        .collect();
    writeln!(s, "r = {r}").unwrap();
    writeln!(s, "n = {}", r.len()).unwrap();
    writeln!(s, "E_r = {}", r.edge_count()).unwrap();
    writeln!(s, "edges = {}", edges.join(" ")).unwrap();
    match (d_r, fibres) {
        (Some(d), Some(f)) => {
            writeln!(s, "m = {m}: feasible").unwrap();
            writeln!(s, "d_r = {d}").unwrap();
            let f: Vec<String> = f.iter().map(ToString::to_string).collect();
            writeln!(s, "fibre dims = {}", f.join(" ")).unwrap();
        }
        _ => {
            writeln!(s, "m = {m}: infeasible (needs m >= {})", r.min_colours()).unwrap();
        }
    }
    Outcome::ok(s)
}

fn csp_like(config: &RunConfig, r: &ReverseHessenberg) -> Outcome {
    let m = config.m;
    let report = CspReport::build(r, m, config.parallel);
    let code = if config.command == CommandKind::Verify && !report.verification.pass {
        EXIT_FAILURE
    } else {
        EXIT_OK
    };
    let stdout = if config.format == Format::Json {
        to_json(&report)
    } else {
        let mut s = String::new();
        writeln!(
            s,
            "r = {r}, n = {}, m = {m}, E_r = {}",
            report.n, report.e_r
        )
        .unwrap();
        match config.command {
            CommandKind::Csp => {
                writeln!(s, "monomial coefficients (x^mu, mu dominant):").unwrap();
                if report.monomial.is_empty() {
                    writeln!(s, "  0").unwrap();
                }
                for e in &report.monomial {
                    writeln!(s, "  {}: {}", e.weight, e.poly).unwrap();
                }
            }
            CommandKind::Schur => {
                writeln!(
                    s,
                    "schur coefficients c_lambda(q), center2 = {}:",
                    report.e_r
                )
                .unwrap();
                if report.schur.is_empty() {
                    writeln!(s, "  0").unwrap();
                }
                for e in &report.schur {
                    writeln!(
                        s,
                        "  s{}: {}    [qdim M = {}]",
                        e.partition,
                        e.poly,
                        e.poly.render_centered(report.e_r as i64)
                    )
                    .unwrap();
                }
            }
            _ => {
                let v = &report.verification;
                for c in &v.per_lambda {
                    writeln!(
                        s,
                        "  s{}: {}  nonnegative={} palindromic={} support={}  {}",
                        c.partition,
                        c.poly,
                        c.nonnegative,
                        c.palindromic,
                        c.in_support,
                        if c.pass() { "ok" } else { "FAIL" }
                    )
                    .unwrap();
                }
                writeln!(s, "reconstruction: {}", v.reconstruction).unwrap();
                writeln!(s, "{}", if v.pass { "pass" } else { "FAIL" }).unwrap();
            }
        }
        s
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn poincare(r: &ReverseHessenberg, m: usize, config: &RunConfig) -> Outcome {
    let report = match GeometryReport::build(r, m, config.parallel) {
        Ok(report) => report,
        Err(e) => return Outcome::invalid(e),
    };
    let code = if report.identities_pass {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    let stdout = if config.format == Format::Json {
        to_json(&report)
    } else {
        let mut s = String::new();
        writeln!(s, "r = {r}, m = {m}, d_r = {}", report.d_r).unwrap();
        writeln!(s, "bundle product: {}", report.poincare_product).unwrap();
        writeln!(s, "cell paving:    {}", report.poincare_bb).unwrap();
        writeln!(s, "agree: {}", report.agree).unwrap();
        writeln!(
            s,
            "identities: {}",
            if report.identities_pass {
                "pass"
            } else {
                "FAIL"
            }
        )
        .unwrap();
        s
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn colourings(r: &ReverseHessenberg, m: usize, config: &RunConfig) -> Outcome {
    let limit = config.limit.unwrap_or(usize::MAX);
    let stream = enumerate_colourings(r, m).take(limit);
    let stdout = if config.format == Format::Json {
        let items: Vec<_> = stream
            .map(|(k, s)| json!({ "kappa": k, "stats": s }))
            .collect();
        to_json(&items)
    } else {
        let mut s = String::new();
        for (k, st) in stream {
            s.push_str(&format_line(&k, &st));
            s.push('\n');
        }
        s
    };
    Outcome::ok(stdout)
}

fn kostka(config: &RunConfig) -> Outcome {
    let table = kostka_table(config.n, config.m);
    if config.format == Format::Json {
        return Outcome::ok(to_json(&table));
    }
    let mut s = String::new();
    let labels: Vec<String> = table.index.iter().map(ToString::to_string).collect();
    let width = labels.iter().map(String::len).max().unwrap_or(0);
    writeln!(
        s,
        "Kostka numbers K[lambda][mu], n = {}, m = {}",
        config.n, config.m
    )
    .unwrap();
    for (label, row) in labels.iter().zip(&table.matrix) {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(s, "{label:>width$}  {}", cells.join(" ")).unwrap();
    }
    Outcome::ok(s)
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepCase {
    pub r: ReverseHessenberg,
    pub m: usize,
    #[serde(rename = "E_r")]
    pub e_r: usize,
    pub d_r: i64,
    pub schur_pass: bool,
    pub geometry_pass: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub functions: usize,
    pub cases: Vec<SweepCase>,
    pub skipped: usize,
    pub failures: usize,
}

/// Checks every `(r, m)` with `r` on `[n]` and `m` in `ms` (infeasible pairs are skipped).
/// With `parallel`, functions are processed concurrently; case order is unaffected.
pub fn sweep_report(n: usize, ms: std::ops::RangeInclusive<usize>, parallel: bool) -> SweepReport {
    let functions: Vec<ReverseHessenberg> = all_reverse_hessenberg(n).collect();
    let check = |r: &ReverseHessenberg| -> (Vec<SweepCase>, usize) {
        let mut cases = Vec::new();
        let mut skipped = 0;
        for m in ms.clone() {
            if !r.is_feasible(m) {
                skipped += 1;
                continue;
            }
            let csp = compute_csp(r, m, false);
            let schur_pass = verify_kato(&csp, &schur_expand(&csp)).pass;
            let geometry = GeometryReport::build(r, m, false).expect("feasible");
            cases.push(SweepCase {
                r: r.clone(),
                m,
                e_r: csp.e_r,
                d_r: geometry.d_r,
                schur_pass,
                geometry_pass: geometry.identities_pass,
                pass: schur_pass && geometry.identities_pass,
            });
        }
        (cases, skipped)
    };
    let per_function: Vec<(Vec<SweepCase>, usize)> = if parallel {
        functions.par_iter().map(check).collect()
    } else {
        functions.iter().map(check).collect()
    };
    let skipped = per_function.iter().map(|(_, s)| s).sum();
    let cases: Vec<SweepCase> = per_function.into_iter().flat_map(|(c, _)| c).collect();
    SweepReport {
        n,
        functions: functions.len(),
        failures: cases.iter().filter(|c| !c.pass).count(),
        cases,
        skipped,
    }
}

fn sweep(config: &RunConfig) -> Outcome {
    let ms = match config.m_max {
        Some(cap) => 1..=cap,
        None => config.m..=config.m,
    };
    let report = sweep_report(config.n, ms, config.parallel);
    let code = if report.failures == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    let stdout = if config.format == Format::Json {
        to_json(&report)
    } else {
        let mut s = String::new();
        for c in report.cases.iter().filter(|c| !c.pass) {
            writeln!(
                s,
                "counterexample: r = {}, m = {} (schur {}, geometry {})",
                c.r,
                c.m,
                if c.schur_pass { "ok" } else { "FAIL" },
                if c.geometry_pass { "ok" } else { "FAIL" }
            )
            .unwrap();
        }
        writeln!(
            s,
            "{} (r, m) cases checked, {} infeasible pairs skipped",
            report.cases.len(),
            report.skipped
        )
        .unwrap();
        writeln!(
            s,
            "{} functions checked, {} failures",
            report.functions, report.failures
        )
        .unwrap();
        s
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}
