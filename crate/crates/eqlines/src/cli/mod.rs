//! Command-line front end. Exit codes: 0 computed or verified, 2 violation or infeasible, 1 usage error.

mod reproduce;
mod verify;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::bounds::{self, BoundError, BoundReport, Table2Constraint};
use crate::constructions::{
    block_52_lines, conference_etf, golay_octads, paley_conference, simplex_base, witt276, ConstructionError,
};
use crate::exactnum::ExactScalar;
use crate::saturate::{self, SaturateError};
use crate::seidel::{base_size, graph6::from_graph6, EquiangularSet};

pub use reproduce::{render_angle, reproduce_table2, reproduce_table3, reproduce_mstar, Reproduction};
pub use verify::{verify_text, VerifyOutcome};

#[derive(Parser, Debug)]
#[command(name = "eqlines", version, about = "Exact computations on equiangular line systems")]
pub struct Cli {
    /// Worker threads (default: all cores). Results do not depend on this.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bound computations.
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Build a line system and write it as JSON.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Saturation search for the largest set of rank R at one angle.
    Saturate(SaturateArgs),
    /// Largest equiangular set of rank R over all angles, with the angle audit.
    Mstar {
        #[arg(long)]
        rank: usize,
        /// Saturate every angle whose relative bound exceeds R.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a line system file: angle, positive semidefiniteness, rank and base size.
    Verify { file: PathBuf },
    /// Recompute a table and compare it against the pinned copy.
    Reproduce {
        #[arg(value_enum)]
        what: ReproduceWhat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Merge runs of equal rows (table2 only).
        #[arg(long)]
        grouped: bool,
    },
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
pub enum ReproduceWhat {
    Table2,
    Table3,
    /// Largest sets over all angles for ranks 8 to 10.
    #[value(alias = "thm56")]
    Mstar,
}

#[derive(Subcommand, Debug)]
pub enum BoundCmd {
    /// Largest (K,1) pillar next to another one, α = 1/(2n+1), K = n+2.
    Coexistence {
        #[arg(long)]
        n: u64,
    },
    /// Two (3,1) pillars at α = 1/5: one row, a degree-class cap, or the full table.
    Table2 {
        #[arg(long, conflicts_with = "class")]
        t1111: Option<u32>,
        #[arg(long)]
        class: Option<usize>,
        /// Print the table instead of the report.
        #[arg(long, conflicts_with_all = ["t1111", "class"])]
        table: bool,
    },
    K3 {
        #[arg(long)]
        r: u64,
    },
    K4 {
        #[arg(long)]
        r: u64,
        /// Value of the semidefinite bound s(r−4, 1/13, −5/13); left symbolic when absent.
        #[arg(long)]
        s: Option<u64>,
    },
    K5 {
        #[arg(long)]
        r: u64,
    },
    /// Angle restriction for COUNT lines of rank R.
    Neumann {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        count: u64,
    },
    /// Irrational characteristic polynomial candidates for SIZE lines with an eigenvalue of multiplicity MULT.
    NeumannCandidates {
        #[arg(long, default_value_t = 14)]
        size: i64,
        #[arg(long, default_value_t = 6)]
        mult: i64,
    },
    Relative {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        alpha: String,
    },
    Gerzon {
        #[arg(long)]
        r: u64,
    },
    /// Rank bound for a (5,2) pillar given its Seidel graph in graph6.
    Pillar52 {
        #[arg(long)]
        graph6: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConstructCmd {
    /// 276 lines in rank 23 at angle 1/5.
    Witt276 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lines from the Paley conference matrix of order q+1.
    Paley {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// K lines with Gram matrix (1+α)I − αJ.
    Simplex {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// ELL disjoint triangles at angle 1/5 (rank 2·ELL+1).
    Block52 {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The 759 octads as sorted point lists, one per line.
    Octads {
        /// Only the 253 octads through point 1.
        #[arg(long)]
        through_1: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct SaturateArgs {
    #[arg(long)]
    pub rank: usize,
    /// "P/Q" or "1/sqrt(D)".
    #[arg(long)]
    pub alpha: String,
    /// Report every seed, not only the maximal ones.
    #[arg(long)]
    pub all_seeds: bool,
    /// Directory for per-seed artifacts.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failure of a command; carries its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Violation(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Violation(_) => 2,
        }
    }
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SaturateError> for CliError {
    fn from(e: SaturateError) -> Self {
        match e {
            SaturateError::Verification(_) => CliError::Violation(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// Write to a temporary sibling and rename, so readers never see a partial file.
pub fn write_atomic(path: &Path, text: &str) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Usage(format!("{}: {e}", path.display()));
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(io)?;
    }
    let name = path.file_name().ok_or_else(|| CliError::Usage(format!("{}: not a file path", path.display())))?;
    let tmp = path.with_file_name(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    std::fs::write(&tmp, text).map_err(io)?;
    std::fs::rename(&tmp, path).map_err(io)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => write_atomic(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn parse_alpha(s: &str) -> Result<ExactScalar, CliError> {
    s.parse().map_err(|e| CliError::Usage(format!("alpha: {e}")))
}

fn set_json(e: &EquiangularSet) -> String {
    let mut j = e.to_json();
    j.base_size = base_size(e).ok().map(|b| b.k);
    to_json(&j)
}

fn run_bound(cmd: BoundCmd) -> Result<(), CliError> {
    let report: BoundReport = match cmd {
        BoundCmd::Coexistence { n } => {
            let rep = bounds::pillar_coexistence_bound(n)?;
            // re-check the certificate against the unreduced instance
            let ell: Vec<u64> = serde_json::from_value(rep.certificate["ell"].clone()).expect("certificate has ell");
            let inst = bounds::CoexistenceInstance { n, ell: ell.try_into().expect("four counts") };
            if !bounds::coexistence_check(&inst).feasible {
                return Err(CliError::Violation("certificate failed re-verification".into()));
            }
            rep
        }
        BoundCmd::Table2 { table: true, .. } => {
            print!("{}", bounds::table2().rows_text());
            return Ok(());
        }
        BoundCmd::Table2 { t1111, class, .. } => {
            let c = match (t1111, class) {
                (Some(k), _) => Table2Constraint::T1111(k),
                (None, Some(i)) if (1..=3).contains(&i) => Table2Constraint::DegreeClass(i),
                (None, Some(i)) => return Err(CliError::Usage(format!("class must be 1, 2 or 3, got {i}"))),
                (None, None) => Table2Constraint::Full,
            };
            let (rep, row) = bounds::two_31_pillar_search(c);
            if matches!(c, Table2Constraint::T1111(_)) && row.is_none() {
                print!("{}", to_json(&rep));
                return Err(CliError::Violation(format!("t1111 = {} is infeasible", t1111.unwrap_or(0))));
            }
            rep
        }
        BoundCmd::K3 { r } => bounds::k3_bound(r)?,
        BoundCmd::K4 { r, s } => bounds::k4_bound(r, s)?,
        BoundCmd::K5 { r } => bounds::k5_bound(r)?,
        BoundCmd::Neumann { r, count } => {
            print!("{}", to_json(&bounds::neumann_restriction(r, count)?));
            return Ok(());
        }
        BoundCmd::NeumannCandidates { size, mult } => {
            let c = bounds::neumann_candidates_for(size, mult)?;
            print!("{}", to_json(&json!({ "count": c.len(), "candidates": c })));
            return Ok(());
        }
        BoundCmd::Relative { r, alpha } => {
            let a = parse_alpha(&alpha)?;
            let v = bounds::relative_bound(r, &a)?;
            print!("{}", to_json(&json!({ "name": "relative", "r": r, "alpha": a, "value": v })));
            return Ok(());
        }
        BoundCmd::Gerzon { r } => {
            print!("{}", to_json(&json!({ "name": "gerzon", "r": r, "value": bounds::gerzon_bound(r) })));
            return Ok(());
        }
        BoundCmd::Pillar52 { graph6 } => {
            let g = from_graph6(&graph6).map_err(|e| CliError::Usage(format!("graph6: {e}")))?;
            match bounds::pillar52_rank_bound(&g) {
                Ok(rep) => print!("{}", to_json(&rep)),
                Err(e @ (BoundError::Triangle(_) | BoundError::RadiusAboveTwo { .. })) => {
                    return Err(CliError::Violation(e.to_string()))
                }
                Err(e) => return Err(e.into()),
            }
            return Ok(());
        }
    };
    print!("{}", to_json(&report));
    Ok(())
}

fn run_construct(cmd: ConstructCmd) -> Result<(), CliError> {
    match cmd {
        ConstructCmd::Witt276 { out } => emit(out.as_deref(), &set_json(&witt276().normalized)),
        ConstructCmd::Paley { q, out } => emit(out.as_deref(), &set_json(&conference_etf(&paley_conference(q)?)?)),
        ConstructCmd::Simplex { k, alpha, out } => emit(out.as_deref(), &set_json(&simplex_base(k, &parse_alpha(&alpha)?)?)),
        ConstructCmd::Block52 { ell, out } => emit(out.as_deref(), &set_json(&block_52_lines(ell)?)),
        ConstructCmd::Octads { through_1, out } => {
            let sys = golay_octads();
            let list = if through_1 { &sys.octads_through_1 } else { &sys.octads_all };
            let mut sorted: Vec<Vec<u8>> = list.iter().map(|o| o.points()).collect();
            sorted.sort();
            let mut s = String::new();
            for pts in sorted {
                let line: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
                writeln!(s, "{}", line.join(" ")).unwrap();
            }
            emit(out.as_deref(), &s)
        }
    }
}

#[derive(Serialize)]
struct SeedSummary {
    graph6: String,
    candidate_count: usize,
    clique_size: usize,
    total: usize,
}

fn run_saturate(a: SaturateArgs) -> Result<(), CliError> {
    let alpha = saturate::parse_angle(&a.alpha)?;
    let reports = if a.all_seeds {
        let scan = saturate::enumerate_pd_bases(a.rank, &alpha)?;
        let reps = crate::par::map(&scan.seeds, saturate::saturate_seed).into_iter().collect::<Result<Vec<_>, _>>()?;
        let value = reps.iter().map(|r| r.total).max().unwrap_or(0);
        (scan.classes_scanned, scan.seeds.len(), value, reps)
    } else {
        let res = saturate::m_alpha(a.rank, &alpha)?;
        (res.classes_scanned, res.seed_count, res.value, res.best)
    };
    let (classes_scanned, seed_count, value, reps) = reports;
    let summary = json!({
        "r": a.rank,
        "alpha": alpha,
        "classes_scanned": classes_scanned,
        "seed_count": seed_count,
        "value": value,
        "seeds": reps
            .iter()
            .map(|r| SeedSummary {
                graph6: r.seed.graph6.clone(),
                candidate_count: r.candidate_count,
                clique_size: r.clique_size,
                total: r.total,
            })
            .collect::<Vec<_>>(),
    });
    if let Some(dir) = &a.out {
        for (i, r) in reps.iter().enumerate() {
            write_atomic(&dir.join(format!("seed-{i:03}.json")), &to_json(r))?;
        }
        write_atomic(&dir.join("summary.json"), &to_json(&summary))?;
    }
    print!("{}", to_json(&summary));
    Ok(())
}

fn run_reproduce(what: ReproduceWhat, out: Option<&Path>, grouped: bool) -> Result<(), CliError> {
    let rep = match what {
        ReproduceWhat::Table2 => reproduce_table2(grouped),
        ReproduceWhat::Table3 => reproduce_table3()?,
        ReproduceWhat::Mstar => reproduce_mstar()?,
    };
    emit(out, &rep.text)?;
    eprintln!("{}", serde_json::to_string(&rep.diff_json()).expect("serializable"));
    if rep.matches() {
        Ok(())
    } else {
        Err(CliError::Violation(format!("{} differs from the pinned copy in {} lines", rep.name, rep.diff.len())))
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        crate::par::init_threads(j);
    }
    match cli.command {
        Command::Bound(b) => run_bound(b),
        Command::Construct(c) => run_construct(c),
        Command::Saturate(a) => run_saturate(a),
        Command::Mstar { rank, full, out } => emit(out.as_deref(), &to_json(&saturate::m_star(rank, full)?)),
        Command::Verify { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
            let outcome = verify_text(&text).map_err(|e| match e {
                CliError::Usage(m) => CliError::Usage(format!("{}: {m}", file.display())),
                other => other,
            })?;
            print!("{}", to_json(&outcome));
            match &outcome.violation {
                None => Ok(()),
                Some(v) => Err(CliError::Violation(v.to_string())),
            }
        }
        Command::Reproduce { what, out, grouped } => run_reproduce(what, out.as_deref(), grouped),
    }
}

/// Parse `std::env::args`, run, and return the exit code.
pub fn main() -> i32 {
    main_from(std::env::args_os())
}

pub fn main_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            match &e {
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Violation(m) => eprintln!("violation: {m}"),
            }
            e.code()
        }
    }
}
