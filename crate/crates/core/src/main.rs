use std::fs::File;
use std::io::{self, BufWriter, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use skewmf::verify::{verify, VerifyRange};
use skewmf::{
    classify, min_nonfree_vars, multiplicity_witness, skew_schur_expansion, Error, ExtendedNat,
    SchurExpansion, SkewPartition,
};

/// Exit statuses shared by every subcommand.
mod exit {
    pub const FREE: u8 = 0;
    pub const NOT_FREE: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const INVARIANT: u8 = 3;
    pub const IO: u8 = 4;
}

#[derive(Parser)]
#[command(
    name = "skewmf",
    version,
    about = "Schur expansions and multiplicity-freeness of skew Schur polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schur expansion of s_{λ/μ}(x_1..x_n)
    Expand(ShapeArgs),
    /// Decide multiplicity-freeness through the shape reductions
    Classify {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Also search for two ballot tableaux of equal content
        #[arg(long)]
        witness: bool,
    },
    /// Print two ballot tableaux of equal content, if any
    Witness(ShapeArgs),
    /// Least sharp variable count with multiplicity (basic, tight, ordinary shapes)
    MinVars {
        shape: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare the classifiers with the tableau oracle over a box of shapes
    Verify {
        #[arg(long)]
        max_width: usize,
        #[arg(long)]
        max_length: usize,
        #[arg(long)]
        max_n: usize,
        /// Worker threads; all cores by default
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ShapeArgs {
    /// Skew shape such as 5,4,1,1/2,1,1
    shape: String,
    /// Number of variables; defaults to the number of rows of the outer shape
    #[arg(short = 'n', long = "vars")]
    vars: Option<usize>,
    #[arg(long)]
    json: bool,
}

impl ShapeArgs {
    fn parse(&self) -> Result<(SkewPartition, usize), Failure> {
        let shape: SkewPartition = self.shape.parse().map_err(Failure::Input)?;
        let n = self.vars.unwrap_or(shape.num_rows().max(1));
        Ok((shape, n))
    }
}

enum Failure {
    Input(Error),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::NotWeaklyDecreasing(_)
            | Error::TooLarge
            | Error::NotContained { .. } => Failure::Input(e),
            other => Failure::Lib(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

#[derive(Serialize)]
struct ExpansionOutput<'a> {
    shape: &'a SkewPartition,
    n: usize,
    terms: &'a SchurExpansion,
}

#[derive(Serialize)]
struct WitnessOutput<'a> {
    shape: &'a SkewPartition,
    n: usize,
    content: Option<Vec<usize>>,
    witness: Option<[String; 2]>,
}

#[derive(Serialize)]
struct MinVarsOutput<'a> {
    shape: &'a SkewPartition,
    min_vars: ExtendedNat,
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Expand(args) => {
            let (shape, n) = args.parse()?;
            let expansion = skew_schur_expansion(&shape, n)?;
            if args.json {
                print_json(&ExpansionOutput {
                    shape: &shape,
                    n,
                    terms: &expansion,
                })?;
            } else {
                println!("{expansion}");
            }
            Ok(exit::FREE)
        }
        Command::Classify {
            shape: args,
            witness,
        } => {
            let (shape, n) = args.parse()?;
            let mut verdict = classify(&shape, n)?;
            if witness {
                verdict.attach_witness();
            }
            if args.json {
                print_json(&verdict)?;
            } else {
                println!("shape: {}", verdict.shape);
                println!("n: {}", verdict.n);
                println!(
                    "reduced: {} (n' = {})",
                    verdict.reduced_shape, verdict.reduced_n
                );
                println!(
                    "rho: {}  r1: {}  r2: {}",
                    verdict.rho, verdict.r1, verdict.r2
                );
                println!(
                    "case: {}",
                    verdict.case.map_or("none".to_string(), |c| c.to_string())
                );
                println!("multiplicity-free: {}", yes_no(verdict.multiplicity_free));
                if let Some([a, b]) = &verdict.witness {
                    println!("witness:\n{a}\n\n{b}");
                }
            }
            Ok(if verdict.multiplicity_free {
                exit::FREE
            } else {
                exit::NOT_FREE
            })
        }
        Command::Witness(args) => {
            let (shape, n) = args.parse()?;
            let pair = multiplicity_witness(&shape, n);
            let content = pair.as_ref().map(|(a, _)| a.content());
            let witness = pair.as_ref().map(|(a, b)| [a.render(), b.render()]);
            if args.json {
                print_json(&WitnessOutput {
                    shape: &shape,
                    n,
                    content,
                    witness: witness.clone(),
                })?;
            } else {
                match &witness {
                    Some([a, b]) => println!("{a}\n\n{b}"),
                    None => println!("none"),
                }
            }
            Ok(if witness.is_some() {
                exit::NOT_FREE
            } else {
                exit::FREE
            })
        }
        Command::MinVars { shape, json } => {
            let shape: SkewPartition = shape.parse().map_err(Failure::Input)?;
            let m = min_nonfree_vars(&shape).map_err(Failure::Input)?;
            if json {
                print_json(&MinVarsOutput {
                    shape: &shape,
                    min_vars: m,
                })?;
            } else {
                println!("{m}");
            }
            Ok(exit::FREE)
        }
        Command::Verify {
            max_width,
            max_length,
            max_n,
            jobs,
            out,
        } => {
            let range = VerifyRange::new(max_width, max_length, max_n).map_err(Failure::Input)?;
            let tty = io::stderr().is_terminal();
            let progress = |done: usize, total: usize| {
                if tty && (done.is_multiple_of(16) || done == total) {
                    eprint!("\r{done}/{total} outer shapes");
                    if done == total {
                        eprintln!();
                    }
                }
            };
            let report = verify(range, jobs, Some(&progress))?;
            match out {
                Some(path) => {
                    let mut writer = BufWriter::new(File::create(path)?);
                    serde_json::to_writer_pretty(&mut writer, &report).map_err(io::Error::from)?;
                    writeln!(writer)?;
                    writer.flush()?;
                }
                None => print_json(&report)?,
            }
            eprintln!(
                "{} shapes, {} pairs, {} mismatches",
                report.shapes_tested, report.pairs_tested, report.mismatches
            );
            Ok(if report.is_clean() {
                exit::FREE
            } else {
                exit::INVARIANT
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::INPUT)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::INVARIANT)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::IO)
        }
    }
}
