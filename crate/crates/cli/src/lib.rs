//! The `modp` command line: argument grammar, dispatch, output formats and
//! exit codes (0 success, 1 verification failure, 2 usage error).

mod cache;
mod commands;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

pub use cache::{Cache, CacheEntry, CacheEvent, CachePolicy, CACHE_ENV};

pub const SCHEMA: &str = "modp/1";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser, Debug)]
#[command(name = "modp", version, about = "Exact checks of modular invariant rings, u-classes and Steenrod squares")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV (per-degree tables only).
    #[arg(long, global = true)]
    pub csv: bool,
    /// Bypass the on-disk cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Recompute and overwrite cached results.
    #[arg(long, global = true, conflicts_with = "no_cache")]
    pub refresh_cache: bool,
    /// Report timing and cache activity on stderr.
    #[arg(long, short, global = true)]
    pub verbose: bool,
}

#[derive(Args, Debug, Clone, serde::Serialize)]
pub struct GroupArgs {
    /// Group name such as `B3`, `Spin(11)`, `SO(7)`, `G2`.
    #[arg(long, short)]
    pub group: Option<String>,
    /// Family: A B C D G2 F4 E6 E7 E8 SO O Sp GL Spin.
    #[arg(long, short)]
    pub family: Option<String>,
    /// Lie rank, for the Cartan families.
    #[arg(long, short)]
    pub rank: Option<u32>,
    /// Matrix size, for SO, O, Sp, GL and Spin.
    #[arg(long, short)]
    pub n: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fundamental degrees.
    Degrees(GroupArgs),
    /// Bad (non-good) primes and torsion primes.
    Primes(GroupArgs),
    /// Weyl group order and length generating function.
    Weyl(GroupArgs),
    /// Poincare polynomial of the flag variety.
    FlagPoincare(GroupArgs),
    /// Verify a claimed invariant ring degree by degree.
    Invariants {
        /// spin, symmetric, B, C or D.
        #[arg(long, short)]
        group: String,
        #[arg(long, short)]
        n: usize,
        #[arg(long, short, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 10)]
        max_degree: u32,
    },
    /// Invariants of `x -> x + a` on `R[x]` against `R[x(x + a)]`.
    Inv2Check {
        /// Base variables as `name:degree`, comma separated.
        #[arg(long, default_value = "y:1")]
        base: String,
        /// The element `a` of the base ring.
        #[arg(long, default_value = "y")]
        a: String,
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
    },
    /// Presentation and degreewise dimensions of a cohomology ring.
    Ring {
        /// bso, bo, bmu, bz2, og-chow or og-hodge.
        #[arg(long)]
        name: String,
        #[arg(long, short)]
        n: Option<u32>,
        #[arg(long, short)]
        p: Option<u64>,
        #[arg(long, default_value_t = 12)]
        max_degree: u32,
    },
    /// Whitney sum of two truncated u-classes.
    Whitney {
        /// Variables as `name[:degree]`, comma separated.
        #[arg(long, default_value = "a1,a2,a3")]
        vars: String,
        /// Components u_1, u_2, ... of the first class, separated by `;`.
        #[arg(long)]
        e: String,
        /// Components of the second class.
        #[arg(long)]
        f: String,
    },
    /// Images of the u-classes under a restriction map.
    Restrict {
        #[arg(long, short)]
        n: u32,
        /// bo2r (BSO(n) to BO(2)^r), bo (BO(2r)), h (BSO(2r) to H) or k (BSO(2r+1) to K).
        #[arg(long, default_value = "bo2r")]
        to: String,
    },
    /// Jacobian determinant certificate.
    Jacobian {
        #[arg(long, short)]
        r: usize,
        /// O or SO.
        #[arg(long, default_value = "O")]
        variant: String,
    },
    /// Quillen's presentation of H*(BSpin(n); F_2) and its dimensions.
    Quillen {
        #[arg(long, short)]
        n: u32,
        /// Degree range such as `0..34` (inclusive).
        #[arg(long, default_value = "0..34")]
        dims: String,
    },
    /// Degree-32 comparison for Spin(11).
    SpinCompare,
    /// Seeded randomized and fixed checks.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of random trials per property.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Verification(String),
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Verification(_) | CliError::Failed(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Verification(m) | CliError::Failed(m) => m,
        }
    }
}

impl From<modp_core::Error> for CliError {
    fn from(e: modp_core::Error) -> CliError {
        use modp_core::Error as E;
        match e {
            E::Verification(_) => CliError::Verification(e.to_string()),
            E::GuardExceeded { .. } => CliError::Failed(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A computed report: the JSON payload is the source of truth; text and
/// CSV renderings are derived from it.
pub struct Report {
    pub command: &'static str,
    pub params: Value,
    pub payload: Value,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.payload.get("pass").and_then(Value::as_bool).unwrap_or(true)
    }

    pub fn to_json(&self) -> String {
        let mut m = Map::new();
        m.insert("schema".into(), json!(SCHEMA));
        m.insert("command".into(), json!(self.command));
        m.insert("version".into(), json!(VERSION));
        m.insert("params".into(), self.params.clone());
        m.insert("result".into(), self.payload.clone());
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

/// Parses `argv` and runs the command, writing to the given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let format = if cli.global.json {
        Format::Json
    } else if cli.global.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let policy = if cli.global.no_cache {
        CachePolicy::Off
    } else if cli.global.refresh_cache {
        CachePolicy::Refresh
    } else {
        CachePolicy::Use
    };
    let mut cache = Cache::new(Cache::default_dir(), policy, VERSION);
    let start = Instant::now();
    let result = commands::execute(&cli.command, &mut cache);
    for w in &cache.warnings {
        let _ = writeln!(err, "{w}");
    }
    let (report, event) = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            return e.exit_code();
        }
    };
    if cli.global.verbose {
        let _ = writeln!(err, "{}: {:?} in {:.3?}", report.command, event, start.elapsed());
    }
    let text = match format {
        Format::Json => report.to_json(),
        Format::Text => render::text(&report),
        Format::Csv => match render::csv(&report) {
            Some(c) => c,
            None => {
                let _ = writeln!(err, "error: --csv is only available for per-degree tables");
                return 2;
            }
        },
    };
    let _ = write!(out, "{text}");
    if report.pass() {
        0
    } else {
        1
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
