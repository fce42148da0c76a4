mod show;

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use cellrook::analysis::{self, CorpusOptions, VerifyOptions};
use cellrook::enumerate::{self, Universe};
use cellrook::geometry::format::{self, ShapeFormat};
use cellrook::geometry::Alignment;
use cellrook::rook;
use cellrook::{CellCollection, Error};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "cellrook", version, about = "Switching rook polynomials and domino-stability of collections of cells")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ShapeInput {
    /// Shape file; reads stdin when absent or `-`.
    path: Option<PathBuf>,
    /// Input format. Defaults to the file extension, then to the first significant character.
    #[arg(long, value_parser = parse_format)]
    format: Option<ShapeFormat>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShowEmit {
    Text,
    Json,
    Coords,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeEmit {
    Text,
    Json,
    Count,
}

#[derive(Subcommand)]
enum Command {
    /// Normalized grid with runs, maximal rectangles, residues and stable squares.
    Show {
        #[command(flatten)]
        input: ShapeInput,
        #[arg(long, value_enum, default_value = "text")]
        emit: ShowEmit,
    },
    /// Switching rook polynomial, lowest degree first.
    Poly {
        #[command(flatten)]
        input: ShapeInput,
        /// Print the coefficient array instead.
        #[arg(long)]
        json: bool,
    },
    /// Domino-stability, with a witness when it fails.
    Stable {
        #[command(flatten)]
        input: ShapeInput,
        #[arg(long, default_value = "run", value_parser = parse_alignment)]
        alignment: Alignment,
    },
    /// Maximum number of pairwise non-attacking rooks.
    RookNumber {
        #[command(flatten)]
        input: ShapeInput,
    },
    /// Number of switch classes of k-rook configurations.
    Classes {
        #[command(flatten)]
        input: ShapeInput,
        #[arg(long)]
        k: usize,
    },
    /// Full verification report as JSON. Exits with 1 if a check fails.
    Verify {
        #[command(flatten)]
        input: ShapeInput,
        #[arg(long, default_value = "run", value_parser = parse_alignment)]
        alignment: Alignment,
    },
    /// Every free shape of a rank, one symmetry class each.
    Enumerate {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "poly", value_parser = parse_universe)]
        universe: Universe,
        #[arg(long, value_enum, default_value = "text")]
        emit: ShapeEmit,
    },
    /// Verify every shape of the given ranks.
    CorpusVerify {
        /// Highest rank.
        #[arg(long)]
        rank: usize,
        /// Lowest rank; defaults to `--rank`.
        #[arg(long)]
        from: Option<usize>,
        #[arg(long, default_value = "poly", value_parser = parse_universe)]
        universe: Universe,
        /// Worker threads; 0 uses every core.
        #[arg(long, env = "CELLROOK_JOBS", default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value = "run", value_parser = parse_alignment)]
        alignment: Alignment,
        /// Collect every failure instead of stopping at the first.
        #[arg(long)]
        keep_going: bool,
        /// Also report shapes whose stability depends on the alignment mode.
        #[arg(long)]
        audit_alignment: bool,
        /// Print one JSON report per shape before the summary.
        #[arg(long)]
        jsonl: bool,
    },
}

fn parse_format(s: &str) -> Result<ShapeFormat, String> {
    s.parse()
}

fn parse_alignment(s: &str) -> Result<Alignment, String> {
    s.parse()
}

fn parse_universe(s: &str) -> Result<Universe, String> {
    s.parse()
}

/// Failure categories, mapped to exit codes.
enum Failure {
    Check(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CounterexampleFound { .. } => Failure::Check(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_shape(input: &ShapeInput) -> Result<CellCollection, Failure> {
    let (text, ext_format) = match input.path.as_deref() {
        None => (read_stdin()?, None),
        Some(p) if p.as_os_str() == "-" => (read_stdin()?, None),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            (text, ShapeFormat::from_extension(p))
        }
    };
    Ok(format::parse(&text, input.format.or(ext_format))?)
}

fn read_stdin() -> io::Result<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Show { input, emit } => {
            let p = read_shape(&input)?;
            match emit {
                ShowEmit::Text => write!(out, "{}", show::text(&p))?,
                ShowEmit::Coords => write!(out, "{}", show::coords(&p))?,
                ShowEmit::Json => writeln!(out, "{}", show::json(&p))?,
            }
        }
        Command::Poly { input, json } => {
            let poly = rook::switching_polynomial(&read_shape(&input)?);
            if json {
                writeln!(out, "{}", serde_json::to_string(&poly).expect("polynomial serializes"))?;
            } else {
                writeln!(out, "{poly}")?;
            }
        }
        Command::Stable { input, alignment } => {
            let s = read_shape(&input)?.domino_stability(alignment);
            writeln!(out, "{}", s.stable)?;
            if let Some(w) = s.witness {
                writeln!(out, "witness: {w}")?;
            }
        }
        Command::RookNumber { input } => {
            writeln!(out, "{}", rook::rook_number(&read_shape(&input)?))?;
        }
        Command::Classes { input, k } => {
            writeln!(out, "{}", rook::class_count(&read_shape(&input)?, k)?)?;
        }
        Command::Verify { input, alignment } => {
            let report = analysis::verify(&read_shape(&input)?, &VerifyOptions { alignment });
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            writeln!(out, "{json}")?;
            if !report.passed() {
                let failed: Vec<_> = report.failed_checks().map(|c| c.name()).collect();
                return Err(Failure::Check(format!("failed checks: {}", failed.join(", "))));
            }
        }
        Command::Enumerate { rank, universe, emit } => {
            let shapes = enumerate::enumerate(universe, rank)?;
            match emit {
                ShapeEmit::Count => writeln!(out, "{}", enumerate::count_shapes(universe, rank)?)?,
                ShapeEmit::Text => {
                    for p in shapes {
                        writeln!(out, "{}", format::to_grid(&p))?;
                    }
                }
                ShapeEmit::Json => {
                    for p in shapes {
                        writeln!(out, "{}", format::to_json(&p))?;
                    }
                }
            }
        }
        Command::CorpusVerify { rank, from, universe, jobs, alignment, keep_going, audit_alignment, jsonl } => {
            let from = from.unwrap_or(rank);
            if from > rank {
                return Err(Failure::Usage(format!("--from {from} exceeds --rank {rank}")));
            }
            let streams = (from..=rank).map(|n| enumerate::enumerate(universe, n)).collect::<Result<Vec<_>, _>>()?;
            let opts = CorpusOptions { alignment, keep_going, audit_alignment, ..Default::default() };
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build_global()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let mut sink_err = None;
            let result = analysis::verify_corpus_with(streams.into_iter().flatten(), &opts, |r| {
                if jsonl && sink_err.is_none() {
                    sink_err = writeln!(out, "{}", r.to_json_line()).err();
                }
            });
            if let Some(e) = sink_err {
                return Err(e.into());
            }
            let report = match result {
                Ok(r) => r,
                Err(Error::CounterexampleFound { shape, report }) => {
                    writeln!(out, "counterexample:\n{shape}")?;
                    writeln!(out, "{}", report.to_json_line())?;
                    let failed: Vec<_> = report.failed_checks().map(|c| c.name()).collect();
                    return Err(Failure::Check(format!("failed checks: {}", failed.join(", "))));
                }
                Err(e) => return Err(e.into()),
            };
            write!(out, "{}", show::corpus_summary(&report))?;
            if !report.passed() {
                return Err(Failure::Check(format!("{} shapes failed", report.failures.len())));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Check(msg)), _) => {
            eprintln!("cellrook: {msg}");
            ExitCode::from(1)
        }
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("cellrook: {msg}");
            ExitCode::from(2)
        }
        (Ok(()), Err(e)) => {
            eprintln!("cellrook: {e}");
            ExitCode::from(2)
        }
    }
}
