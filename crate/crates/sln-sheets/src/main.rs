//! Command-line front end: every library capability as a subcommand, with
//! JSON input/output and scriptable exit codes.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 resource-guard rejection.

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;
use std::io::Read;
use std::process::ExitCode;

use sln_sheets::centralizer::dimension_report;
use sln_sheets::closure::{closure_contains, weyman_generators};
use sln_sheets::verify::{run_verification, CaseStatus, VerifyConfig};
use sln_sheets::{
    classify_sheet, enumerate_sheets, quotient_point, Ambient, Error, QuotientPoint,
    RationalMatrix,
};

#[derive(Parser)]
#[command(
    name = "sln-sheets",
    version,
    about = "Exact invariant factors, sheets, quotient coordinates, orbit closures and centralizers for traceless matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Compact JSON output (the default)
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Human-readable output
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant-factor tower Q_i, q_i of x - tI
    Factors {
        /// JSON matrix file, or - for stdin
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Sheet of a traceless matrix: partition, conjugate, dimensions
    Classify {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Quotient coordinates (p_1, ..., p_n) of a traceless matrix
    Quotient {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Companion-block representative of a quotient point
    Section {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Orbit-closure membership: does the closure of the orbit of x contain y?
    Contains {
        /// JSON object {"x": <matrix>, "y": <matrix>}, or - for stdin
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Closure-ideal generators over a quotient point
    Ideal {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Centralizer dimensions and abelianness
    Centralizer {
        #[arg(long, default_value = "-")]
        input: String,
        /// Ambient algebra: sl or gl (defaults to the matrix's own flag)
        #[arg(long)]
        ambient: Option<String>,
    },
    /// Sheet descriptors for one size
    Sheets {
        /// Matrix size n
        #[arg(long = "n-max")]
        n_max: usize,
    },
    /// Run the verification suite
    Verify {
        #[arg(long = "n-max", default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    match run(cli.command, pretty) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::GuardExceeded { .. } => 3u8,
                _ => 2u8,
            })
        }
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {path}: {e}")))
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Deserialize)]
struct PairInput {
    x: RationalMatrix,
    y: RationalMatrix,
}

fn emit(value: &serde_json::Value) {
    println!("{value}");
}

fn run(command: Command, pretty: bool) -> Result<ExitCode, Error> {
    match command {
        Command::Factors { input } => {
            let x: RationalMatrix = parse(&read_input(&input)?)?;
            let profile = x.invariant_factors();
            if pretty {
                for (i, q) in profile.big_q_list().iter().enumerate() {
                    println!("Q_{} = {}", i + 1, q);
                }
                for (i, q) in profile.q_list().iter().enumerate() {
                    println!("q_{} = {}", i + 1, q);
                }
            } else {
                emit(&serde_json::to_value(&profile).expect("serializable"));
            }
        }
        Command::Classify { input } => {
            let x: RationalMatrix = parse(&read_input(&input)?)?;
            let d = classify_sheet(&x)?;
            if pretty {
                println!("sigma        = {}", d.sigma);
                println!("conjugate    = {}", d.conjugate);
                println!("orbit_dim    = {}", d.orbit_dim);
                println!("quotient_dim = {}", d.quotient_dim);
            } else {
                emit(&serde_json::to_value(&d).expect("serializable"));
            }
        }
        Command::Quotient { input } => {
            let x: RationalMatrix = parse(&read_input(&input)?)?;
            let z = quotient_point(&x)?;
            let chart = z.chart();
            if pretty {
                println!("sigma = {}", z.sigma());
                println!("p     = {z}");
                let rendered: Vec<String> = chart.iter().map(|c| c.to_string()).collect();
                println!("chart = [{}]", rendered.join(", "));
            } else {
                let mut value = serde_json::to_value(&z).expect("serializable");
                value
                    .as_object_mut()
                    .expect("object")
                    .insert("chart".into(), serde_json::to_value(&chart).expect("chart"));
                emit(&value);
            }
        }
        Command::Section { input } => {
            let z: QuotientPoint = parse(&read_input(&input)?)?;
            let s = z.section();
            if pretty {
                println!("{s}");
            } else {
                emit(&serde_json::to_value(&s).expect("serializable"));
            }
        }
        Command::Contains { input } => {
            let pair: PairInput = parse(&read_input(&input)?)?;
            let answer = closure_contains(&pair.x, &pair.y)?;
            if pretty {
                println!("{answer}");
            } else {
                emit(&json!({ "contains": answer }));
            }
        }
        Command::Ideal { input } => {
            let z: QuotientPoint = parse(&read_input(&input)?)?;
            let gens = weyman_generators(&z)?;
            if pretty {
                println!("sigma = {}", gens.sigma());
                println!("z     = {}", gens.quotient_point());
                for (i, g) in gens.rendered().iter().enumerate() {
                    println!("g_{} = {}", i + 1, g);
                }
            } else {
                let mut value = serde_json::to_value(&gens).expect("serializable");
                value.as_object_mut().expect("object").insert(
                    "rendered".into(),
                    serde_json::to_value(gens.rendered()).expect("strings"),
                );
                emit(&value);
            }
        }
        Command::Centralizer { input, ambient } => {
            let x: RationalMatrix = parse(&read_input(&input)?)?;
            let ambient = match ambient {
                Some(text) => text.parse::<Ambient>()?,
                None => x.ambient(),
            };
            let report = dimension_report(&x, ambient)?;
            if pretty {
                println!("ambient         = {ambient}");
                println!("centralizer_dim = {}", report.centralizer_dim);
                println!("derived_dim     = {}", report.derived_dim);
                println!("codim           = {}", report.codim);
                println!("abelian         = {}", report.abelian);
            } else {
                emit(&serde_json::to_value(&report).expect("serializable"));
            }
        }
        Command::Sheets { n_max } => {
            if n_max == 0 {
                return Err(Error::Parse("n must be at least 1".into()));
            }
            let sheets = enumerate_sheets(n_max);
            if pretty {
                for d in &sheets {
                    println!(
                        "{}  conjugate {}  orbit_dim {}  quotient_dim {}",
                        d.sigma, d.conjugate, d.orbit_dim, d.quotient_dim
                    );
                }
            } else {
                emit(&serde_json::to_value(&sheets).expect("serializable"));
            }
        }
        Command::Verify {
            n_max,
            seed,
            samples,
        } => {
            let cfg = VerifyConfig {
                n_max,
                seed,
                samples,
            };
            let report = run_verification(&cfg)?;
            if pretty {
                for case in &report.cases {
                    match case.status {
                        CaseStatus::Pass => println!("PASS {}", case.description),
                        CaseStatus::Fail => println!(
                            "FAIL {} witness: {}",
                            case.description,
                            case.witness.as_ref().unwrap_or(&json!(null))
                        ),
                    }
                }
                let failures = report.failures().count();
                println!(
                    "{} cases, {} failed, {} ms (n_max={}, seed={}, samples={})",
                    report.cases.len(),
                    failures,
                    report.elapsed_ms,
                    report.n_max,
                    report.seed,
                    report.samples
                );
            } else {
                emit(&serde_json::to_value(&report).expect("serializable"));
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
