use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use platorder_core::complexity::{Ball, DEFAULT_BALL_CAP};
use platorder_core::explorer::CosetExplorer;
use platorder_core::hilden::{hilden_generators, verify_generators};
use platorder_core::plat::check_tl_relations;
use platorder_core::report::{self, CanPlatJson, CellReport, OrderReport};
use platorder_core::{
    dehornoy_compare, format_word, normal_form, parse_word, plat_signature, BraidWord, Budget,
    ComplexityFunction, Error, StrandCount,
};

const BALL_CAP_VAR: &str = "PLATORDER_BALL_CAP";

#[derive(Parser)]
#[command(
    name = "platorder",
    version,
    about = "Braid orders and plat presentations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct StrandArg {
    /// Number of strands.
    #[arg(long, short = 's')]
    strands: usize,
}

#[derive(Args)]
struct BudgetArgs {
    /// Geodesic radius of the explored ball.
    #[arg(long, default_value_t = 5)]
    radius: u32,
    /// Maximum Hilden moves on each side.
    #[arg(long, default_value_t = 4)]
    depth: u32,
    /// `geodesic:<limit>`, `geodesic` or `garside`.
    #[arg(long, default_value = "geodesic:8")]
    complexity: String,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget, Error> {
        Ok(Budget {
            ball_radius: self.radius,
            move_depth: self.depth,
            complexity: self.complexity.parse::<ComplexityFunction>()?,
        })
    }
}

#[derive(Args)]
struct OutputArg {
    /// Write the report to this file instead of standard output.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two braids in the Dehornoy order: LT, EQ or GT.
    Compare {
        #[command(flatten)]
        strands: StrandArg,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Print the normal-form key of a braid.
    Nf {
        #[command(flatten)]
        strands: StrandArg,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Plat-closure bracket and signature as JSON.
    Plat {
        #[command(flatten)]
        strands: StrandArg,
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        output: OutputArg,
    },
    /// List the ball of a given radius: key, length, witness.
    Ball {
        #[command(flatten)]
        strands: StrandArg,
        #[arg(long)]
        radius: u32,
        #[command(flatten)]
        output: OutputArg,
    },
    /// List the Hilden generators at level n.
    Hilden {
        #[arg(long)]
        n: usize,
    },
    /// Explore the double-coset cell of a seed.
    Cell {
        #[command(flatten)]
        strands: StrandArg,
        #[arg(allow_hyphen_values = true)]
        seed: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Explore several seeds and sort their cells.
    Order {
        #[command(flatten)]
        strands: StrandArg,
        #[arg(allow_hyphen_values = true, required = true)]
        seeds: Vec<String>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Global canonical braid for the signature class of a word's plat closure.
    Canplat {
        #[command(flatten)]
        strands: StrandArg,
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Verify the Hilden generators and Temperley-Lieb relations for n <= 4.
    Selftest,
}

fn strands(arg: &StrandArg) -> Result<StrandCount, Error> {
    StrandCount::new(arg.strands)
}

fn word(text: &str, s: StrandCount) -> Result<BraidWord, Error> {
    parse_word(text, s)
}

fn ball_cap() -> Result<usize, Error> {
    match std::env::var(BALL_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Malformed {
            token: v.clone(),
            reason: format!("{BALL_CAP_VAR} must be a positive integer"),
        }),
        Err(_) => Ok(DEFAULT_BALL_CAP),
    }
}

fn emit(text: String, output: &OutputArg) -> Result<(), Error> {
    match &output.output {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            Ok(())
        }
    }
}

fn explorer(s: StrandCount, budget: &BudgetArgs) -> Result<CosetExplorer, Error> {
    CosetExplorer::with_ball_cap(s, budget.budget()?, ball_cap()?)
}

/// Returns false when a self-check failed.
fn run(cmd: Command) -> Result<bool, Error> {
    match cmd {
        Command::Compare { strands: s, a, b } => {
            let s = strands(&s)?;
            let outcome = dehornoy_compare(&word(&a, s)?, &word(&b, s)?)?;
            println!("{}", outcome.as_str());
        }
        Command::Nf {
            strands: s,
            word: w,
        } => {
            let s = strands(&s)?;
            println!("{}", normal_form(&word(&w, s)?).key());
        }
        Command::Plat {
            strands: s,
            word: w,
            output,
        } => {
            let s = strands(&s)?;
            emit(
                report::to_json(&report::plat_report(&word(&w, s)?)?),
                &output,
            )?;
        }
        Command::Ball {
            strands: s,
            radius,
            output,
        } => {
            let ball = Ball::enumerate(strands(&s)?, radius, ball_cap()?)?;
            let lines: Vec<String> = ball
                .entries()
                .iter()
                .map(|e| {
                    format!("{} {} {}", e.key, e.length, format_word(&e.witness))
                        .trim_end()
                        .to_string()
                })
                .collect();
            emit(lines.join("\n"), &output)?;
        }
        Command::Hilden { n } => {
            for g in hilden_generators(n)? {
                println!("{} {}", g.family, format_word(&g.word));
            }
        }
        Command::Cell {
            strands: s,
            seed,
            budget,
            output,
        } => {
            let s = strands(&s)?;
            let seed = word(&seed, s)?;
            let cell = explorer(s, &budget)?.explore(&seed)?;
            emit(report::to_json(&CellReport::from(&cell)), &output)?;
        }
        Command::Order {
            strands: s,
            seeds,
            budget,
            output,
        } => {
            let s = strands(&s)?;
            let seeds = seeds
                .iter()
                .map(|w| word(w, s))
                .collect::<Result<Vec<_>, _>>()?;
            let classes = explorer(s, &budget)?.order_classes(&seeds)?;
            emit(report::to_json(&OrderReport::from(&classes)), &output)?;
        }
        Command::Canplat {
            strands: s,
            word: w,
            budget,
            output,
        } => {
            let s = strands(&s)?;
            let target = plat_signature(&word(&w, s)?)?;
            let found = explorer(s, &budget)?.can_plat_search(&target)?;
            emit(report::to_json(&CanPlatJson::from(&found)), &output)?;
        }
        Command::Selftest => return Ok(selftest()),
    }
    Ok(true)
}

fn selftest() -> bool {
    let mut ok = true;
    for n in 1..=4 {
        match verify_generators(n) {
            Ok(report) => {
                for check in &report.checks {
                    println!("{check}");
                }
                println!("PASS hilden n={n}");
            }
            Err(e) => {
                ok = false;
                println!("FAIL hilden n={n}: {e}");
            }
        }
        let tl = check_tl_relations(n);
        if tl.failures.is_empty() {
            println!("PASS temperley-lieb n={n} states={}", tl.states);
        } else {
            ok = false;
            for f in &tl.failures {
                println!("FAIL temperley-lieb n={n}: {f}");
            }
        }
    }
    ok
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Malformed { .. } | Error::Usage(_) => 1,
        Error::BudgetExceeded { .. } | Error::NotFound { .. } => 2,
        Error::Contract(_) | Error::Integrity(_) => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            eprintln!("error: {}: {msg}", e.kind());
            ExitCode::from(exit_code(&e))
        }
    }
}
