//! klmov: colored Kauffman invariants of torus links and orthogonal LMOV integrality tables.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use klmov_core::config::{self, Bound};
use klmov_core::KlmovError;

use render::Format;

#[derive(Parser, Debug)]
#[command(
    name = "klmov",
    version,
    about = "Colored Kauffman invariants of torus links and orthogonal LMOV integrality checks"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Character-table cache directory (defaults to $KLMOV_CACHE, then the platform cache dir).
    #[arg(long, global = true, env = "KLMOV_CACHE")]
    pub cache_dir: Option<PathBuf>,
    /// Disable the on-disk cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Worker threads; 0 picks the number of cores.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Size bound override NAME=VALUE, NAME one of partitions, splittings, ctilde, series, rmatrix.
    #[arg(long, global = true, value_parser = parse_bound)]
    pub bound: Vec<(Bound, usize)>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Torus link T(rL,kL) given as r,k,L.
    #[arg(long)]
    pub torus: Option<String>,
    /// Unlink with this many components.
    #[arg(long)]
    pub unlink: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Brauer character table χ_A(γ_μ) for Br_n.
    CharTable {
        #[arg(long)]
        n: usize,
    },
    /// Type-B Schur function sb_A: pb-expansion (default) or closed form in (q,t).
    Sb {
        #[arg(long)]
        partition: String,
        #[arg(long, conflicts_with = "closed")]
        pb: bool,
        #[arg(long)]
        closed: bool,
    },
    /// Cabling constants c̃^λ for colors A⃗ and power r.
    Ctilde {
        #[arg(long)]
        colors: String,
        #[arg(long)]
        r: u32,
    },
    /// Colored invariant W_{A⃗}.
    Invariant {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        colors: String,
    },
    /// Integrality table N_{μ⃗,g,β}. Several --mu values are computed in parallel.
    Lmov {
        #[command(flatten)]
        source: Source,
        #[arg(long, required = true)]
        mu: Vec<String>,
        /// Skip the t -> -t anti-symmetrization.
        #[arg(long)]
        no_antisym: bool,
    },
    /// Order of F_μ⃗ at q = 1 against ℓ(μ⃗) - 2.
    Degree {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        mu: String,
    },
    /// Rank-2 BMW relation, idempotent and trace checks.
    Bmw {
        #[arg(long)]
        check: bool,
    },
    /// Explicit R-matrix on the vector representation of so(2N+1).
    Rmatrix {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, value_enum, default_value_t = RCheck::All)]
        check: RCheck,
    },
    /// Run the reference-table suite or the randomized property suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::Paper)]
        suite: Suite,
        /// Comma-separated criterion keys or numbers (reference suite only).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RCheck {
    All,
    Ribbon,
    Braid,
    Bmw,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    #[value(alias = "reference")]
    Paper,
    Properties,
}

fn parse_bound(s: &str) -> Result<(Bound, usize), String> {
    let (name, value) = s.split_once('=').ok_or("expected NAME=VALUE")?;
    let bound = match name.trim() {
        "partitions" => Bound::Partitions,
        "splittings" => Bound::Splittings,
        "ctilde" => Bound::Ctilde,
        "series" => Bound::Series,
        "rmatrix" => Bound::RMatrix,
        other => return Err(format!("unknown bound {other:?}")),
    };
    let value: usize = value.trim().parse().map_err(|e| format!("{e}"))?;
    if value == 0 {
        return Err("bounds must be positive".into());
    }
    Ok((bound, value))
}

/// Why a command stopped short of success.
#[derive(Debug)]
pub enum Failure {
    /// The computation ran and reported a conjecture finding or failed check.
    Finding,
    Usage(String),
}

impl From<KlmovError> for Failure {
    fn from(e: KlmovError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn configure(cli: &Cli) -> Result<(), Failure> {
    for &(b, v) in &cli.bound {
        config::set(b, v);
    }
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .map_err(|e| Failure::Usage(format!("--jobs: {e}")))?;
    }
    let dir =
        if cli.no_cache { None } else { cli.cache_dir.clone().or_else(|| dirs::cache_dir().map(|d| d.join("klmov"))) };
    log::debug!("character cache: {dir:?}");
    klmov_core::characters::set_cache_dir(dir);
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = configure(&cli).and_then(|_| commands::run(&cli));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Finding) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
