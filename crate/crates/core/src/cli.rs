//! Command-line front end.
//!
//! [`run`] does all the work and returns the exit code together with the
//! text meant for stdout and stderr, so the binary is a thin wrapper and the
//! whole interface can be driven from tests.

use std::fmt::Write as _;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::catalog::{enumerate, Bounds, HssDescriptor, HssFamily, Table1Row};
use crate::classify::{exclusion_scan, row_consistency, search_bounds, HolonomyMatch};
use crate::embed::{check_inequalities, closed_form_codim, embedding_report, first_codim, parallel_codim};
use crate::orbit::{certify_case, resolve_holonomy, ModelCase, OrbitReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

/// Largest `n` for which `CP^n` is swept over degrees `3..=VERONESE_MAX_DEG`.
pub const VERONESE_SWEEP_N: u32 = 4;
pub const VERONESE_MAX_DEG: u32 = 5;

/// Parameter caps of the matrix-model suite.
pub const MODEL_VERONESE_MAX: u32 = 4;
pub const MODEL_SEGRE_MAX: u32 = 4;
pub const MODEL_PLUCKER_MAX: u32 = 7;
pub const MODEL_QUADRIC_MAX: u32 = 8;

#[derive(Debug, Parser)]
#[command(name = "parhol", about = "Complex parallel submanifolds of CP^N and their normal holonomy")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List catalog entries within the bounds.
    Catalog {
        #[arg(long, default_value_t = Bounds::default())]
        bounds: Bounds,
        #[arg(long)]
        json: bool,
    },
    /// Dimension and codimension of the degree-d canonical embedding.
    Dim {
        space: HssDescriptor,
        #[arg(long, default_value_t = 1)]
        deg: u32,
        #[arg(long)]
        json: bool,
    },
    /// Complex orbit and normal holonomy for an orbit-table ambient space.
    Holonomy {
        space: HssDescriptor,
        #[arg(long)]
        json: bool,
    },
    /// Certificates on one matrix model, e.g. `Segre(3,3)`.
    Orbit {
        case: ModelCase,
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = Bounds::default())]
        bounds: Bounds,
        #[arg(long)]
        json: bool,
        /// Also print wall time in text output.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Table2,
    Table1,
    Para,
    Alto,
    Orbits,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::Table2, Suite::Table1, Suite::Para, Suite::Alto, Suite::Orbits];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table2 => "table2",
            Suite::Table1 => "table1",
            Suite::Para => "para",
            Suite::Alto => "alto",
            Suite::Orbits => "orbits",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub entry: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub suite: Suite,
    pub entries_checked: usize,
    pub failures: Vec<Failure>,
    pub bounds: Bounds,
    pub wall_time_us: u64,
    pub notes: Vec<String>,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn render(&self, timing: bool) -> String {
        let mut out = format!(
            "{}: {} entries, {} failures ({})",
            self.suite.name(),
            self.entries_checked,
            self.failures.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        );
        if timing {
            let _ = write!(out, " in {} us", self.wall_time_us);
        }
        out.push('\n');
        let _ = writeln!(out, "  bounds: {}", self.bounds);
        for f in &self.failures {
            let _ = writeln!(out, "  FAIL {}: {}", f.entry, f.witness);
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }
}

/// Tallies entries and failures for one suite.
struct Tally {
    checked: usize,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, entry: impl ToString, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure {
                entry: entry.to_string(),
                witness: witness(),
            });
        }
    }

    fn error(&mut self, entry: impl ToString, err: impl ToString) {
        self.check(false, entry, || format!("error: {}", err.to_string()));
    }
}

fn table2(bounds: &Bounds) -> Tally {
    let mut t = Tally::new();
    for d in enumerate(bounds) {
        match first_codim(&d) {
            Ok(c) => {
                let closed = closed_form_codim(&d);
                t.check(c == closed, &d, || format!("first_codim = {c}, closed form = {closed}"));
                let literal = match d.family {
                    HssFamily::EVII => Some(28),
                    HssFamily::EIII => Some(10),
                    HssFamily::Quadric { .. } => Some(1),
                    _ => None,
                };
                if let Some(v) = literal {
                    t.check(c == BigInt::from(v), &d, || format!("first_codim = {c}, table value {v}"));
                }
            }
            Err(e) => t.error(&d, e),
        }
    }
    t
}

/// Column 3 of one row, searched over every space of the right dimension.
pub fn row_holonomy(row: Table1Row, bounds: &Bounds) -> Result<HolonomyMatch, String> {
    let b = search_bounds(&row.orbit(), bounds).map_err(|e| e.to_string())?;
    resolve_holonomy::<f64>(row, &b).map_err(|e| e.to_string())
}

fn table1(bounds: &Bounds) -> Tally {
    let mut t = Tally::new();
    let mut resolved = Vec::new();
    for row in Table1Row::sweep(bounds) {
        match row_holonomy(row, bounds) {
            Ok(h) => {
                let unique = h.needed_slice || h.matched.candidates.len() == 1;
                t.check(unique && h.holonomy == row.holonomy(), row, || {
                    format!("got {} from candidates {:?}", h.holonomy, names(&h.matched.candidates))
                });
                if h.needed_slice {
                    resolved.push(format!(
                        "{row} -> {} (type data left {:?}; slice dimension {})",
                        h.holonomy,
                        names(&h.matched.candidates),
                        h.slice_dim.unwrap_or_default()
                    ));
                }
            }
            Err(e) => t.error(row, e),
        }
        match row_consistency(row) {
            Ok(c) => t.check(c.holds, row, || c.to_string()),
            Err(e) => t.error(row, e),
        }
    }
    t.notes.push(format!(
        "{} rows needed the slice dimension measured on the matrix model",
        resolved.len()
    ));
    t.notes.extend(resolved);
    t
}

fn names(ds: &[HssDescriptor]) -> Vec<String> {
    ds.iter().map(|d| d.to_string()).collect()
}

fn para(bounds: &Bounds) -> Tally {
    let mut t = Tally::new();
    match exclusion_scan(bounds) {
        Ok(scan) => {
            for e in scan {
                t.check(e.excluded(), &e.space, || {
                    format!(
                        "codim {} matched {:?}, beyond bounds {:?}",
                        e.matched.required_dim,
                        names(&e.matched.candidates),
                        names(&e.beyond_bounds)
                    )
                });
            }
        }
        Err(e) => t.error("exclusion scan", e),
    }
    // the degree-2 bound codim >= N_1(N_1+1)/2 is recorded, not enforced:
    // it fails outside projective spaces and quadrics
    let (mut equality, mut below) = (Vec::new(), Vec::new());
    for d in enumerate(bounds) {
        match check_inequalities(&d, 2) {
            Ok(r) if r.para0_equality => equality.push(d.to_string()),
            Ok(r) if !r.para0_weak => below.push(format!("{d} ({} < {})", r.codim, r.para0_bound)),
            Ok(_) => {}
            Err(e) => t.error(&d, e),
        }
    }
    t.notes.push(format!(
        "degree-2 codim equals N_1(N_1+1)/2 for {} entries: {}",
        equality.len(),
        equality.join(", ")
    ));
    t.notes.push(format!(
        "degree-2 codim is below N_1(N_1+1)/2 for {} entries: {}",
        below.len(),
        below.join(", ")
    ));
    t
}

fn alto(bounds: &Bounds) -> Tally {
    let mut t = Tally::new();
    let mut cases: Vec<(HssDescriptor, u32)> = Vec::new();
    for d in enumerate(bounds).into_iter().filter(|d| d.rank >= 2) {
        cases.push((d.clone(), 2));
        cases.push((d, 3));
    }
    for n in 1..=VERONESE_SWEEP_N {
        let cp = HssDescriptor::cp(n).expect("CP^n with n >= 1");
        cases.extend((3..=VERONESE_MAX_DEG).map(|deg| (cp.clone(), deg)));
    }
    for (d, deg) in cases {
        match check_inequalities(&d, deg) {
            Ok(r) => t.check(r.star, format!("{d} deg {deg}"), || {
                format!("codim {} <= m(m+1)/2 = {}", r.codim, r.star_bound)
            }),
            Err(e) => t.error(format!("{d} deg {deg}"), e),
        }
    }
    t.notes.push(
        "only the dimension precondition codim > m(m+1)/2 is certified; full unitary normal holonomy is not".into(),
    );
    t
}

/// The matrix models of the orbit suite.
pub fn model_cases() -> Vec<ModelCase> {
    let mut cases: Vec<ModelCase> = (1..=MODEL_VERONESE_MAX).map(|n| ModelCase::Veronese { n }).collect();
    for a in 2..=MODEL_SEGRE_MAX {
        cases.extend((2..=MODEL_SEGRE_MAX).map(|b| ModelCase::Segre { a, b }));
    }
    cases.extend((4..=MODEL_PLUCKER_MAX).map(|n| ModelCase::Plucker { n }));
    cases.extend((3..=MODEL_QUADRIC_MAX).map(|n| ModelCase::Quadric { n }));
    cases
}

fn orbits() -> Tally {
    let mut t = Tally::new();
    let mut worst = (0.0f64, 0.0f64);
    for case in model_cases() {
        match certify_case::<f64>(case) {
            Ok(r) => {
                worst = (worst.0.max(r.bracket.residual), worst.1.max(r.fullness.residual));
                t.check(r.passed(), case, || model_witness(&r));
            }
            Err(e) => t.error(case, e),
        }
    }
    t.notes.push(format!(
        "largest bracket residual {:.1e}, largest fullness residual {:.1e}",
        worst.0, worst.1
    ));
    t
}

fn model_witness(r: &OrbitReport) -> String {
    format!(
        "T {}/{}, N {}/{}, N1 {}, fullness {:e}, bracket {:e}, commutant {}, holonomy {:?}",
        r.dim_t,
        r.expected_orbit_dim,
        r.dim_n,
        r.expected_codim,
        r.dim_n1,
        r.fullness.residual,
        r.bracket.residual,
        r.slice.commutant_dim,
        r.holonomy.as_ref().map(|h| h.to_string()).or(r.holonomy_error.clone())
    )
}

/// Runs one suite (not [`Suite::All`]).
pub fn verify(suite: Suite, bounds: &Bounds) -> VerificationSummary {
    let start = Instant::now();
    let t = match suite {
        Suite::Table2 => table2(bounds),
        Suite::Table1 => table1(bounds),
        Suite::Para => para(bounds),
        Suite::Alto => alto(bounds),
        Suite::Orbits => orbits(),
        Suite::All => panic!("verify runs single suites"),
    };
    VerificationSummary {
        suite,
        entries_checked: t.checked,
        failures: t.failures,
        bounds: *bounds,
        wall_time_us: start.elapsed().as_micros() as u64,
        notes: t.notes,
    }
}

/// One catalog line in JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub space: HssDescriptor,
    pub dim_c: u64,
    pub rank: u32,
    pub isotropy: String,
    pub group: String,
    pub node: usize,
}

impl From<&HssDescriptor> for CatalogEntry {
    fn from(d: &HssDescriptor) -> Self {
        CatalogEntry {
            space: d.clone(),
            dim_c: d.dim_c,
            rank: d.rank,
            isotropy: d.isotropy.to_string(),
            group: d.cominuscule.group.to_string(),
            node: d.cominuscule.node,
        }
    }
}

/// Output of `holonomy`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HolonomyReport {
    pub ambient: HssDescriptor,
    pub row: Table1Row,
    pub orbit: String,
    pub orbit_codim: i64,
    pub holonomy: HolonomyMatch,
}

/// Exit code, stdout text and stderr text of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl ToString) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.to_string()),
        }
    }
}

fn to_json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("report types serialize");
    s.push('\n');
    s
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: e.to_string(),
                },
            }
        }
    };
    match cli.command {
        Command::Catalog { bounds, json } => {
            let entries = enumerate(&bounds);
            if json {
                let rows: Vec<CatalogEntry> = entries.iter().map(CatalogEntry::from).collect();
                return Outcome::ok(to_json(&rows));
            }
            let mut out = String::new();
            for d in &entries {
                let _ = writeln!(
                    out,
                    "{:<12} dim {:>3}  rank {}  isotropy {}  weight {} node {}",
                    d.to_string(),
                    d.dim_c,
                    d.rank,
                    d.isotropy,
                    d.cominuscule.group,
                    d.cominuscule.node
                );
            }
            Outcome::ok(out)
        }
        Command::Dim { space, deg, json } => match embedding_report(&space, deg) {
            Ok(r) if json => Outcome::ok(to_json(&r)),
            Ok(r) => {
                let mut out = format!("N_{deg} = {}, dim = {}, codim = {}\n", r.n_d, space.dim_c, r.codim);
                if let Some(b) = &r.bounds_checked {
                    let _ = writeln!(
                        out,
                        "codim > m(m+1)/2 = {}: {}; codim >= N_1(N_1+1)/2 = {}: {}{}",
                        b.star_bound,
                        b.star,
                        b.para0_bound,
                        b.para0_weak,
                        if b.para0_equality { " (equality)" } else { "" }
                    );
                }
                Outcome::ok(out)
            }
            Err(e) => Outcome::usage(e),
        },
        Command::Holonomy { space, json } => holonomy(space, json),
        Command::Orbit { case, json } => match certify_case::<f64>(case) {
            Ok(r) if json => Outcome {
                code: if r.passed() { EXIT_OK } else { EXIT_VERIFY },
                stdout: to_json(&r),
                stderr: String::new(),
            },
            Ok(r) => Outcome {
                code: if r.passed() { EXIT_OK } else { EXIT_VERIFY },
                stdout: render_orbit(&r),
                stderr: String::new(),
            },
            Err(e) => Outcome {
                code: EXIT_VERIFY,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            },
        },
        Command::Verify {
            suite,
            bounds,
            json,
            timing,
        } => {
            let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
            let summaries: Vec<VerificationSummary> = suites.iter().map(|s| verify(*s, &bounds)).collect();
            let code = if summaries.iter().all(|s| s.passed()) { EXIT_OK } else { EXIT_VERIFY };
            let stdout = match (json, suite) {
                (true, Suite::All) => to_json(&summaries),
                (true, _) => to_json(&summaries[0]),
                (false, _) => summaries.iter().map(|s| s.render(timing)).collect(),
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
    }
}

fn holonomy(space: HssDescriptor, json: bool) -> Outcome {
    let row = match Table1Row::from_ambient(&space) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let orbit = row.orbit();
    let h = match row_holonomy(row, &Bounds::default()) {
        Ok(h) => h,
        Err(e) => {
            return Outcome {
                code: EXIT_VERIFY,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let orbit_codim = parallel_codim(&orbit).ok().and_then(|c| i64::try_from(c).ok()).unwrap_or(-1);
    let report = HolonomyReport {
        ambient: space.clone(),
        row,
        orbit: orbit.to_string(),
        orbit_codim,
        holonomy: h,
    };
    if json {
        return Outcome::ok(to_json(&report));
    }
    let h = &report.holonomy;
    let how = if h.needed_slice {
        format!(
            "unique after matching the slice dimension {} (type data alone left {})",
            h.slice_dim.unwrap_or_default(),
            names(&h.matched.candidates).join(", ")
        )
    } else {
        format!("unique match of dimension {}", h.matched.required_dim)
    };
    Outcome::ok(format!(
        "{space} ({row})\norbit: {} (codim {orbit_codim})\nnormal holonomy: {} ({how})\n",
        report.orbit, h.holonomy
    ))
}

fn render_orbit(r: &OrbitReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} in CP^{}: {}", r.case, r.ambient_dim - 1, if r.passed() { "PASS" } else { "FAIL" });
    let _ = writeln!(
        out,
        "  dim k = {}, dim k_0 = {}, dim m = {}, T = {} (expected {}), N = {} (expected {}), N^1 = {}",
        r.dim_k, r.dim_k0, r.dim_m, r.dim_t, r.expected_orbit_dim, r.dim_n, r.expected_codim, r.dim_n1
    );
    let _ = writeln!(
        out,
        "  fullness {} ({:.1e}), bracket {} ({:.1e}), slice commutant {}, slice algebra {}",
        r.fullness.ok, r.fullness.residual, r.bracket.ok, r.bracket.residual, r.slice.commutant_dim, r.slice.algebra_dim
    );
    match (&r.holonomy, &r.holonomy_error) {
        (Some(h), _) => {
            let _ = writeln!(out, "  normal holonomy {h}");
        }
        (None, Some(e)) => {
            let _ = writeln!(out, "  normal holonomy unresolved: {e}");
        }
        _ => {}
    }
    out
}
