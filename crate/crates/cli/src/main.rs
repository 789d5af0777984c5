mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use tanglekit::algebra::{compose_invariants, connect_h_inv, connect_v_inv};
use tanglekit::bracket::DEFAULT_MAX_CROSSINGS;
use tanglekit::generate::rng;
use tanglekit::invariant::{close_and_fill, InvariantOptions};
use tanglekit::spherical::{fuzz_det_square, verify_coxeter, word_apply, OpWord};
use tanglekit::{bracket_recursive, ClosureKind, FillPattern, IntMatrix};

use input::Operand;

#[derive(Parser)]
#[command(
    name = "tanglekit",
    version,
    about = "Kauffman-bracket invariants of punctured tangles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for commands that sample.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Crossing cap: diagrams above it are refused, and fuzz-det samples
    /// up to it (default 24, or 8 for fuzz-det).
    #[arg(long, global = true)]
    max_crossings: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Closure {
    Num,
    Den,
    None,
}

#[derive(Subcommand)]
enum Command {
    /// Bracket of a link, or of a closed ball tangle.
    Bracket {
        input: String,
        #[arg(long, value_enum, default_value = "none")]
        closure: Closure,
    },
    /// Matrix invariant of a punctured tangle.
    Invariant { input: String },
    /// Invariant of an outer tangle with its holes filled by the parts.
    Compose {
        /// Outer tangle, unless --matrix supplies its invariant.
        operands: Vec<String>,
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Invariant of a horizontal or vertical connect sum.
    Sum {
        #[arg(long = "h", conflicts_with = "vertical", required_unless_present = "vertical")]
        horizontal: bool,
        #[arg(long = "v")]
        vertical: bool,
        left: String,
        right: String,
    },
    /// Applies a word over x (hole swap), y (inner rotation), z (mirror).
    Ops {
        word: String,
        /// A spherical tangle or matrix file; a seeded random matrix if omitted.
        input: Option<String>,
        #[arg(long, conflicts_with = "input")]
        matrix: Option<String>,
    },
    /// Checks the Coxeter presentation of the operation group.
    Verify,
    /// Samples spherical tangles and reports whether each determinant is a square.
    FuzzDet {
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

enum Failure {
    Input(String),
    Verify,
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Input(s)
    }
}

fn print_matrix(m: &IntMatrix, json: bool) -> Result<(), Failure> {
    if json {
        println!("{}", m.to_json().map_err(|e| e.to_string())?);
    } else {
        println!("{m}");
    }
    Ok(())
}

fn random_matrix(seed: u64) -> IntMatrix {
    use rand::Rng;
    let mut r = rng(seed);
    let e: Vec<i64> = (0..4).map(|_| r.gen_range(-9..=9)).collect();
    IntMatrix::new(2, 2, e).expect("2x2")
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = cli.global;
    let cap = g.max_crossings.unwrap_or(DEFAULT_MAX_CROSSINGS);
    let opts = InvariantOptions {
        max_crossings: cap,
        ..Default::default()
    };
    match cli.command {
        Command::Bracket { input, closure } => {
            let link = match (input::load(&input)?, closure) {
                (Operand::Link(l), Closure::None) => l,
                (Operand::Link(_), _) => return Err(format!("{input}: a link cannot be closed again").into()),
                (Operand::Tangle(t), c) => {
                    let kind = match c {
                        Closure::Num => ClosureKind::Numerator,
                        Closure::Den => ClosureKind::Denominator,
                        Closure::None => return Err(format!("{input}: a tangle needs --closure num or den").into()),
                    };
                    if t.n_holes() > 0 {
                        return Err(format!("{input}: only ball tangles can be closed").into());
                    }
                    close_and_fill(&t, kind, &FillPattern(vec![])).map_err(|e| e.to_string())?
                }
                (Operand::Matrix(_), _) => return Err(format!("{input}: expected a diagram").into()),
            };
            if link.crossing_count() > cap {
                return Err(format!("{} crossings exceeds the cap of {cap}", link.crossing_count()).into());
            }
            let v = bracket_recursive(&link).map_err(|e| e.to_string())?;
            if g.json {
                println!(
                    "{}",
                    json!({ "value": v.to_string(), "magnitude": v.magnitude(), "exponent": v.exponent() })
                );
            } else {
                println!("{v}");
                println!("|<L>| = {}", v.magnitude());
            }
        }
        Command::Invariant { input } => print_matrix(&input::invariant_of(&input, opts)?, g.json)?,
        Command::Compose { operands, matrix } => {
            let (outer, parts) = match matrix {
                Some(path) => (input::read_matrix(&path)?, &operands[..]),
                None => {
                    let (first, rest) = operands
                        .split_first()
                        .ok_or("compose needs an outer tangle".to_string())?;
                    (input::invariant_of(first, opts)?, rest)
                }
            };
            let fs = parts
                .iter()
                .map(|p| input::invariant_of(p, opts))
                .collect::<Result<Vec<_>, _>>()?;
            print_matrix(&compose_invariants(&outer, &fs).map_err(|e| e.to_string())?, g.json)?;
        }
        Command::Sum {
            horizontal,
            left,
            right,
            ..
        } => {
            let (a, b) = (input::invariant_of(&left, opts)?, input::invariant_of(&right, opts)?);
            let m = if horizontal {
                connect_h_inv(&a, &b)
            } else {
                connect_v_inv(&a, &b)
            };
            print_matrix(&m.map_err(|e| e.to_string())?, g.json)?;
        }
        Command::Ops { word, input, matrix } => {
            let w: OpWord = word
                .parse()
                .map_err(|e: tanglekit::spherical::SphericalError| e.to_string())?;
            let m = match (input, matrix) {
                (Some(i), _) => input::invariant_of(&i, opts)?,
                (None, Some(path)) => input::read_matrix(&path)?,
                (None, None) => random_matrix(g.seed),
            };
            let out = word_apply(&w, &m).map_err(|e| e.to_string())?;
            if g.json {
                print_matrix(&out, true)?;
            } else {
                println!("{m} -> {out}");
            }
        }
        Command::Verify => {
            let report = verify_coxeter();
            if g.json {
                println!(
                    "{}",
                    json!({
                        "passed": report.passed(),
                        "group_order": report.group_order,
                        "presentation_order": report.presentation_order.as_ref().ok(),
                    })
                );
            } else {
                println!("{report}");
            }
            if !report.passed() {
                return Err(Failure::Verify);
            }
        }
        Command::FuzzDet { trials } => {
            let report = fuzz_det_square(trials, g.max_crossings.unwrap_or(8), g.seed);
            if g.json {
                let dist: serde_json::Map<String, serde_json::Value> = report
                    .distribution()
                    .into_iter()
                    .map(|(d, n)| (d.to_string(), n.into()))
                    .collect();
                println!(
                    "{}",
                    json!({
                        "trials": trials,
                        "seed": g.seed,
                        "squares": report.squares(),
                        "samples": report.samples.len(),
                        "failures": report.failures.len(),
                        "distribution": dist,
                    })
                );
            } else {
                print!("{report}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
