use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lcdembed_cli::commands::{self, CliResult, EmbedMode, Outcome, EXIT_INPUT};
use lcdembed_core::{Family, FamilySpec, MethodChoice, SearchConfig, Strategy};

/// Hulls, minimum distances and shortest LCD embeddings of linear codes.
///
/// Set LCDEMBED_THREADS to limit the worker count; output does not depend on it.
#[derive(Parser)]
#[command(name = "lcdembed", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Enum,
    Lowweight,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Hamming,
    Simplex,
    Grm,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Random,
    Exhaustive,
}

#[derive(Subcommand)]
enum Command {
    /// Hull dimension of a code.
    Hull { file: PathBuf },
    /// Whether a code is LCD.
    LcdCheck { file: PathBuf },
    /// Minimum distance with a witness codeword.
    Mindist {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        /// Largest weight tried by the low-weight search.
        #[arg(long)]
        max_weight: Option<usize>,
    },
    /// Full weight distribution and fingerprint.
    Wtenum { file: PathBuf },
    /// Delete coordinates (0-based, comma separated).
    Puncture {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        coords: Vec<usize>,
    },
    /// Dual code under the file's inner product.
    Dual { file: PathBuf },
    /// Row-reduce a matrix to a full-rank generator.
    Rref { file: PathBuf },
    /// Generate a Hamming, simplex or generalized Reed-Muller code.
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 0)]
        m: u32,
    },
    /// Build an LCD embedding: canonical (D = I, C = 0), from block files, or trivial.
    Embed {
        file: PathBuf,
        #[arg(long, requires = "c", conflicts_with = "trivial")]
        d: Option<PathBuf>,
        #[arg(long, requires = "d")]
        c: Option<PathBuf>,
        /// Use [G | ... | G | I] instead of a shortest embedding.
        #[arg(long)]
        trivial: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Also report the minimum distance.
        #[arg(long)]
        distance: bool,
    },
    /// Search (D, C) blocks for embeddings of large minimum distance.
    Search {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of trials; unlimited by default for the exhaustive strategy.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 5)]
        keep: usize,
        #[arg(long, value_enum, default_value = "random")]
        strategy: StrategyArg,
        /// Directory for the best matrices.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Exhaustively confirm that no shorter LCD embedding exists.
    Certify { file: PathBuf },
    /// Check every shipped fixture.
    VerifyPaper,
}

fn run(cmd: Command) -> CliResult<Outcome> {
    match cmd {
        Command::Hull { file } => commands::hull(&file),
        Command::LcdCheck { file } => commands::lcd_check(&file),
        Command::Mindist { file, method, max_weight } => {
            let method = match method {
                Method::Auto => MethodChoice::Auto,
                Method::Enum => MethodChoice::Enumerate,
                Method::Lowweight => MethodChoice::LowWeight,
            };
            commands::mindist(&file, method, max_weight)
        }
        Command::Wtenum { file } => commands::wtenum(&file),
        Command::Puncture { file, coords } => commands::puncture(&file, &coords),
        Command::Dual { file } => commands::dual(&file),
        Command::Rref { file } => commands::rref(&file),
        Command::Gen { family, q, r, m } => {
            let family = match family {
                FamilyArg::Hamming => Family::Hamming,
                FamilyArg::Simplex => Family::Simplex,
                FamilyArg::Grm => Family::Grm,
            };
            commands::gen(&FamilySpec { family, q, r, m })
        }
        Command::Embed { file, d, c, trivial, output, distance } => {
            let mode = match (d, c) {
                (Some(d), Some(c)) => EmbedMode::Blocks { d, c },
                _ if trivial => EmbedMode::Trivial,
                _ => EmbedMode::Canonical,
            };
            commands::embed(&file, &mode, output.as_deref(), distance)
        }
        Command::Search { file, seed, budget, keep, strategy, out_dir } => {
            let strategy = match strategy {
                StrategyArg::Random => Strategy::Random,
                StrategyArg::Exhaustive => Strategy::Exhaustive,
            };
            let budget = budget.unwrap_or(match strategy {
                Strategy::Random => 10_000,
                Strategy::Exhaustive => u64::MAX,
            });
            let cfg = SearchConfig { seed, budget, strategy, keep_best: keep };
            commands::search(&file, &cfg, out_dir.as_deref())
        }
        Command::Certify { file } => commands::certify(&file),
        Command::VerifyPaper => Ok(commands::verify_paper()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("LCDEMBED_THREADS") {
        match v.parse::<usize>() {
            Ok(n) => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            Err(_) => {
                eprintln!("error: LCDEMBED_THREADS must be a number, got `{v}`");
                return ExitCode::from(EXIT_INPUT as u8);
            }
        }
    }
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
