use std::path::PathBuf;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use symcomvar::sampling::{parse_seed, RunConfig, DEFAULT_SEED, SEED_ENV_VAR};
use symcomvar::sympair::PairSpec;

#[derive(Debug, Parser)]
#[command(
    name = "symcomvar",
    version,
    about = "Exact symmetric-pair computations and commuting-variety certificates"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Seed for every randomized step (decimal or 0x-prefixed hex)
    #[arg(long, global = true, env = SEED_ENV_VAR, value_parser = seed_arg, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Number of random samples per probe
    #[arg(long, global = true, default_value_t = 5)]
    pub samples: usize,
    /// Random integer coordinates are drawn from [-bound, bound]
    #[arg(long = "coord-bound", global = true, default_value_t = 10)]
    pub coord_bound: i64,
    /// Largest centralizer dimension for the exact symbolic distinguishedness test
    #[arg(long, global = true, default_value_t = 8)]
    pub symbolic_threshold: usize,
    /// Pretty-print JSON output
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Lift the ambient size guards (16 numeric, 12 symbolic)
    #[arg(long, global = true)]
    pub unsafe_sizes: bool,
    /// Progress and timing on stderr; repeat for more detail
    #[arg(short, long, global = true, action = ArgAction::Count)]
    pub verbose: u8,
}

impl GlobalOpts {
    pub fn config(&self) -> RunConfig {
        RunConfig {
            seed: self.seed,
            samples: self.samples,
            coordinate_bound: self.coord_bound,
            symbolic_threshold: self.symbolic_threshold,
        }
    }
}

fn seed_arg(text: &str) -> Result<u64, String> {
    parse_seed(text).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structure of a symmetric pair
    #[command(subcommand)]
    Pair(PairCommand),
    /// Nilpotent orbits via ab-diagrams
    #[command(subcommand)]
    Nilpotent(NilpotentCommand),
    /// Emit a D1 reducibility certificate
    #[command(subcommand)]
    Certificate(CertificateCommand),
    /// Check condition (spadesuit) for a short grading
    #[command(subcommand)]
    Spadesuit(SpadesuitCommand),
    /// Sampled tangent dimension of the closure of G0 (c x c)
    C0dim(PairArgs),
    /// Re-verify a certificate file; exit 0 iff every obligation passes
    Verify {
        /// Certificate JSON (a bare certificate or a spadesuit report)
        path: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum PairCommand {
    /// Dimensions, rank and invariant checks
    Info(PairArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// (so_{n+m}, so_n + so_m)
    So,
    /// (gl_{n+m}, gl_n + gl_m)
    Gl,
    /// (so_{2n}, gl_n)
    #[value(name = "so2n-gl")]
    So2nGl,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: Option<usize>,
}

impl PairArgs {
    pub fn spec(&self) -> Result<PairSpec, String> {
        match (self.family, self.m) {
            (FamilyArg::So, Some(m)) => Ok(PairSpec::so_so(self.n, m)),
            (FamilyArg::Gl, Some(m)) => Ok(PairSpec::gl_gl(self.n, m)),
            (FamilyArg::So2nGl, None) => Ok(PairSpec::so2n_gln(self.n)),
            (FamilyArg::So2nGl, Some(_)) => Err("so2n-gl takes --n only".into()),
            (_, None) => Err("this family needs --m".into()),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum NilpotentCommand {
    /// One row per ab-diagram of SO_SO(n, m), with validated representatives
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Also run the e(t) = e - t^2 f curve checks on even representatives
        #[arg(long)]
        verify_ev: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CertificateCommand {
    /// GL_GL(n, m) with 1 <= n < m
    Gl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// SO2N_GLN(n) with odd n >= 3
    SoGl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SpadesuitCommand {
    Gl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    SoGl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// (E6, so10 + k) through the quartic half-spinor invariant
    E6 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}
