mod report;

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use berger_core::criteria::{screen_with, try_screen_range_with, RangeBounds, ScreenOptions};
use berger_core::curvature::{curvature_report, first_prolongation, rank_mode_label, CurvError, CurvatureOptions};
use berger_core::matalg::{catalog, catalog_listing, MatError};
use berger_core::repweights::RepError;
use berger_core::rootsys::{RootSystemError, DEFAULT_ORBIT_CAP};
use berger_core::{par, Family, Parallelism, RootSystem};

use report::{CatalogReport, CurvatureOut, Format, ProlongReport, Report, ScreenConfig, ScreenReport};

/// Environment variable naming the directory for relative `--output` paths.
const OUT_DIR_VAR: &str = "BERGER_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "berger", version, about = "Weak-Berger screening and curvature computations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout. Relative paths resolve
    /// under $BERGER_OUT_DIR when it is set.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Worker threads; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Screen irreducible representations against the weak-Berger criteria.
    Screen(ScreenArgs),
    /// Curvature spaces and Berger / weak-Berger verdicts of a catalog algebra.
    Curvature(AlgebraArgs),
    /// Dimension of the first prolongation of a catalog algebra.
    Prolong(AlgebraArgs),
    /// List the catalog.
    Catalog,
}

#[derive(Args, Debug)]
struct ScreenArgs {
    /// Restrict to one family (A..G).
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
    /// Restrict to one rank.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    rank: Option<u64>,
    /// Screen a single highest weight, given as comma separated Dynkin labels.
    #[arg(long, value_delimiter = ',', requires_all = ["family", "rank"])]
    weight: Option<Vec<i32>>,
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    max_rank: u64,
    /// Largest module dimension enumerated.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    max_dim: u64,
    /// Keep only modules without zero weight.
    #[arg(long)]
    no_zero_weight: bool,
    /// Also evaluate the PI, PII, QI, QII, RI and RII conditions.
    #[arg(long)]
    extended: bool,
    /// Largest Weyl orbit enumerated per candidate.
    #[arg(long, default_value_t = DEFAULT_ORBIT_CAP, value_parser = positive)]
    orbit_cap: usize,
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// Catalog name, e.g. "so(5)" or "sym2_0(g2_7)".
    name: String,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    /// Largest block (in unknowns) solved exactly.
    #[arg(long, value_parser = positive)]
    exact_cap: Option<usize>,
    /// Largest block (in unknowns) solved modulo primes.
    #[arg(long, value_parser = positive)]
    modular_cap: Option<usize>,
    /// Solve the full system instead of torus weight blocks.
    #[arg(long)]
    ungraded: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    /// Ranks over several primes ("probabilistic rank").
    Modular,
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| format!("unknown family `{s}`, expected one of A..G"))
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// Failure classes with their exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Invariant(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Invariant(_) => 2,
            Failure::Cap(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Invariant(m) | Failure::Cap(m) => m,
        }
    }
}

impl From<RepError> for Failure {
    fn from(e: RepError) -> Self {
        match e {
            RepError::RootSystem(RootSystemError::OrbitCap(_)) => Failure::Cap(e.to_string()),
            RepError::NotDominant | RepError::WrongLength { .. } | RepError::RootSystem(RootSystemError::InvalidType { .. }) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Invariant(e.to_string()),
        }
    }
}

impl From<MatError> for Failure {
    fn from(e: MatError) -> Self {
        match e {
            MatError::UnknownName(_) | MatError::InvalidDimension(_) => Failure::Usage(e.to_string()),
            MatError::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Invariant(e.to_string()),
        }
    }
}

impl From<CurvError> for Failure {
    fn from(e: CurvError) -> Self {
        match e {
            CurvError::Mat(m) => m.into(),
            e if e.is_cap() => Failure::Cap(e.to_string()),
            e => Failure::Invariant(e.to_string()),
        }
    }
}

fn screen(a: &ScreenArgs) -> Result<Report, Failure> {
    let config = ScreenConfig {
        family: a.family.map(|f| f.to_string()),
        rank: a.rank.map(|r| r as usize),
        weight: a.weight.clone(),
        max_rank: a.max_rank as usize,
        max_dim: a.max_dim,
        zero_weight_free: a.no_zero_weight,
        extended: a.extended,
        orbit_cap: a.orbit_cap,
    };
    let options = ScreenOptions { extended: a.extended };
    let verdicts = match (&a.weight, a.family, a.rank) {
        (Some(w), Some(f), Some(n)) => {
            let mut rs = RootSystem::build(f, n as usize).map_err(RepError::from)?;
            rs.orbit_cap = a.orbit_cap;
            let v = screen_with(&Arc::new(rs), w, options)?;
            if a.no_zero_weight && v.flags.zero_weight {
                Vec::new()
            } else {
                vec![v]
            }
        }
        _ => {
            if let (Some(f), Some(n)) = (a.family, a.rank) {
                if !f.valid_rank(n as usize) {
                    return Err(Failure::Usage(format!("invalid root system type {f}{n}")));
                }
            }
            let mut b = RangeBounds::new(a.max_rank as usize, a.max_dim);
            b.family = a.family;
            b.rank = a.rank.map(|r| r as usize);
            b.zero_weight_free = a.no_zero_weight;
            b.options = options;
            b.orbit_cap = a.orbit_cap;
            try_screen_range_with(&b, Parallelism::Parallel)?
        }
    };
    Ok(Report::Screen(ScreenReport::new(config, verdicts)))
}

fn curvature_options(a: &AlgebraArgs) -> CurvatureOptions {
    let mut o = match a.mode {
        Mode::Exact => CurvatureOptions::default(),
        Mode::Modular => CurvatureOptions::modular(),
    };
    if let Some(c) = a.exact_cap {
        o.exact_cap = c;
    }
    if let Some(c) = a.modular_cap {
        o.modular_cap = c;
    }
    o.graded = !a.ungraded;
    o
}

fn curvature(a: &AlgebraArgs) -> Result<Report, Failure> {
    let r = catalog(&a.name)?;
    let report = curvature_report(&r, &curvature_options(a))?;
    Ok(Report::Curvature(CurvatureOut::new(report)))
}

fn prolong(a: &AlgebraArgs) -> Result<Report, Failure> {
    let r = catalog(&a.name)?;
    let opts = curvature_options(a);
    let g1 = first_prolongation(&r, &opts)?;
    Ok(Report::Prolong(ProlongReport::new(&r, g1.dim, rank_mode_label(g1.arithmetic))))
}

fn list_catalog() -> Result<Report, Failure> {
    Ok(Report::Catalog(CatalogReport::new(catalog_listing()?)))
}

fn output_path(out: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_VAR) {
        Some(dir) if out.is_relative() => Path::new(&dir).join(out),
        _ => out.to_path_buf(),
    }
}

fn emit(report: &Report, format: Format, out: Option<&Path>) -> Result<(), Failure> {
    let bytes = report.render(format).map_err(|e| Failure::Invariant(format!("serialization failed: {e}")))?;
    match out {
        Some(p) => {
            let p = output_path(p);
            if let Some(parent) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent).map_err(|e| Failure::Usage(format!("{}: {e}", parent.display())))?;
            }
            std::fs::write(&p, bytes).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
        None => std::io::stdout().write_all(&bytes).map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let report = par::with_threads(cli.threads, || match &cli.command {
        Command::Screen(a) => screen(a),
        Command::Curvature(a) => curvature(a),
        Command::Prolong(a) => prolong(a),
        Command::Catalog => list_catalog(),
    })?;
    emit(&report, cli.format, cli.output.as_deref())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    // library assertions are internal invariants
    panic::set_hook(Box::new(|info| eprintln!("internal invariant violated: {info}")));
    let result = panic::catch_unwind(AssertUnwindSafe(|| run(&cli)))
        .unwrap_or_else(|_| Err(Failure::Invariant("computation aborted".into())));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_classes_map_to_exit_codes() {
        assert_eq!(Failure::from(CurvError::ModularDisagreement).code(), 2);
        assert_eq!(Failure::from(CurvError::NotHomogeneous).code(), 2);
        assert_eq!(Failure::from(MatError::NotClosed).code(), 2);
        assert_eq!(Failure::from(CurvError::CapExceeded { unknowns: 9, cap: 1, mode: "exact" }).code(), 3);
        assert_eq!(Failure::from(CurvError::Mat(MatError::CapExceeded { dim: 9, cap: 1 })).code(), 3);
        assert_eq!(Failure::from(RepError::RootSystem(RootSystemError::OrbitCap(5))).code(), 3);
        assert_eq!(Failure::from(MatError::UnknownName("x".into())).code(), 1);
        assert_eq!(Failure::from(RepError::NotDominant).code(), 1);
    }
}
