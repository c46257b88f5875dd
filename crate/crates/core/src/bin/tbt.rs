use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tbt_grc::random::DEFAULT_RIDGE;
use tbt_grc::verify::DEFAULT_TOLERANCE;
use tbt_grc::{
    build_factorization, comparison_table, cost, generate_pd_tbt, grc_full_counted, run_verify,
    tbt_grc_counted, wwr, Error, OpCounter, TbtGenerator,
};

const EXIT_FAIL: u8 = 1;
const EXIT_NOT_PD: u8 = 2;
const EXIT_USAGE: u8 = 3;

/// Toeplitz-block-Toeplitz inversion by generalized reflection coefficients.
#[derive(Parser)]
#[command(name = "tbt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Method {
    Fast,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random positive-definite generator.
    Gen {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_RIDGE)]
        ridge: f64,
        #[arg(long)]
        output: PathBuf,
    },
    /// Materialize the inverse of a generator's matrix.
    Invert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
        #[arg(long)]
        output: PathBuf,
        /// Also write the inverse factor (columns and diagonal).
        #[arg(long)]
        factor: Option<PathBuf>,
        /// Print `mul=.. add=.. div=..` for the recursion.
        #[arg(long)]
        counter: bool,
    },
    /// Run the block-Levinson baseline and write its coefficient blocks.
    Wwr {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Write the operation-count comparison CSV for n1 = n2 = min..=max.
    Opcount {
        #[arg(long)]
        min: usize,
        #[arg(long)]
        max: usize,
        #[arg(long)]
        output: PathBuf,
    },
    /// Cross-check the fast path against the oracle and the baseline.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotPositiveDefinite { .. } | Error::SingularP { .. } => EXIT_NOT_PD,
        Error::Io(_) | Error::Parse { .. } | Error::InvalidGenerator(_) | Error::Domain(_) => {
            EXIT_USAGE
        }
        _ => EXIT_FAIL,
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, Error> {
    Ok(BufWriter::new(File::create(path)?))
}

fn read_generator(path: &Path) -> Result<TbtGenerator, Error> {
    TbtGenerator::read_text(BufReader::new(File::open(path)?))
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Gen {
            n1,
            n2,
            seed,
            ridge,
            output,
        } => {
            if n1 == 0 || n2 == 0 || ridge.is_nan() || ridge <= 0.0 {
                return Err(Error::Domain("sizes must be >= 1 and ridge > 0".into()));
            }
            let mut w = create(&output)?;
            generate_pd_tbt(n1, n2, seed, ridge).write_text(&mut w)?;
            w.flush()?;
        }
        Command::Invert {
            input,
            method,
            output,
            factor,
            counter,
        } => {
            let g = read_generator(&input)?;
            let mut ops = OpCounter::new();
            let f = match method {
                Method::Fast => {
                    let tables = tbt_grc_counted(&g, &mut ops)?;
                    tbt_grc::fast::factor_from_tables(&tables)?
                }
                Method::Oracle => {
                    let dense = g.assemble_dense();
                    let tables = grc_full_counted(&dense, &mut ops)?;
                    build_factorization(&tables, &dense)?
                }
            };
            let mut w = create(&output)?;
            f.inverse_dense().write_text(&mut w)?;
            w.flush()?;
            if let Some(path) = factor {
                let mut w = create(&path)?;
                f.write_text(&mut w)?;
                w.flush()?;
            }
            if counter {
                println!("{ops}");
            }
        }
        Command::Wwr { input, output } => {
            let g = read_generator(&input)?;
            let states = tbt_grc::wwr_recurse(&g)?;
            let last = states.last().expect("n2 >= 2 yields at least one state");
            let residual = tbt_grc::wwr_residual(&g, last)?;
            let mut w = create(&output)?;
            wwr::write_coefficients(&mut w, last, residual)?;
            w.flush()?;
            println!("residual={}", tbt_grc::format_sig6(residual));
        }
        Command::Opcount { min, max, output } => {
            let rows = comparison_table(min, max)?;
            let mut w = create(&output)?;
            cost::write_csv(&mut w, &rows)?;
            w.flush()?;
        }
        Command::Verify { input, tolerance } => {
            if tolerance.is_nan() || tolerance <= 0.0 {
                return Err(Error::Domain("tolerance must be positive".into()));
            }
            let g = read_generator(&input)?;
            let report = run_verify(&g, tolerance)?;
            let stdout = io::stdout();
            writeln!(stdout.lock(), "{report}")?;
            if !report.passed() {
                return Ok(EXIT_FAIL);
            }
        }
    }
    Ok(0)
}
