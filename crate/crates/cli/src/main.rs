use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use humbert_core::catalog::Catalog;
use humbert_core::equations::{
    full_rank_quotient_curve, pair_quotient_curve, single_omission_curve, tower_quartic_curve,
    triple_quotient_curve, QuotientCurve,
};
use humbert_core::group::{enumerate_free_subgroups, quotient_profile, GroupContext, Subgroup};
use humbert_core::moduli::{are_equivalent, orbit, word_string, Generator, ParameterTuple, DEFAULT_ORBIT_CAP};
use humbert_core::rational::parse_index_list;
use humbert_core::verify::{run_suite, Suite};
use humbert_core::Error;

#[derive(Parser)]
#[command(name = "humbert", version, about = "Hyperelliptic quotients of generalized Humbert curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Free subgroups of a given rank, with their quotients.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Equation of one quotient curve.
    Quotient(QuotientArgs),
    /// Orbit of a parameter tuple under a generator set.
    Orbit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambdas: String,
        #[arg(long)]
        generators: String,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        max: usize,
    },
    /// Whether two tuples describe the same curve.
    Equivalent {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// The full type-4 catalog as JSON.
    Catalog {
        #[arg(long)]
        lambdas: String,
    },
    /// Run built-in verification suites.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Args)]
struct QuotientArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    lambdas: String,
    /// One, two or three 1-based branch indices into (inf, 0, 1, λ…).
    #[arg(long)]
    omit: Option<String>,
    /// With three omitted indices: the one dropped from the pair cover.
    #[arg(long, requires = "omit")]
    tower_b3: Option<usize>,
    #[arg(long, conflicts_with = "omit", required_unless_present = "omit")]
    full_rank: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Usage(String),
    Check(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Domain(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Check(out)) => {
            emit(&out);
            ExitCode::from(1)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

// A closed pipe is not an error for a report printer.
fn emit(text: &str) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Enumerate { n, rank, format } => enumerate(n, rank, format),
        Command::Quotient(args) => quotient(args),
        Command::Orbit {
            n,
            lambdas,
            generators,
            max,
        } => {
            let p = ParameterTuple::parse_for(n, &lambdas)?;
            let gens = Generator::parse_set(&generators)?;
            Ok(pretty(&json!(orbit(&p, &gens, max)?.report())))
        }
        Command::Equivalent { n, left, right } => {
            let l = ParameterTuple::parse_for(n, &left)?;
            let r = ParameterTuple::parse_for(n, &right)?;
            Ok(match are_equivalent(&l, &r)? {
                Some(w) => format!("equivalent\nword {}", word_string(&w)),
                None => "not equivalent".into(),
            })
        }
        Command::Catalog { lambdas } => {
            let p = ParameterTuple::parse_for(4, &lambdas)?;
            let cat = Catalog::build(&p)?;
            let report = cat.check()?;
            let mut v = cat.to_json();
            v["checks"] = json!(report.checks);
            v["passed"] = json!(report.passed());
            if report.passed() {
                Ok(pretty(&v))
            } else {
                Err(Failure::Check(pretty(&v)))
            }
        }
        Command::Verify { n, suite } => {
            let suite: Suite = suite.parse()?;
            let reports = run_suite(n, suite)?;
            let text = reports
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            if reports.iter().all(|r| r.passed()) {
                Ok(text)
            } else {
                Err(Failure::Check(text))
            }
        }
    }
}

fn subgroup_record(k: &Subgroup) -> Result<Value, Failure> {
    let profile = quotient_profile(k)?;
    Ok(json!({
        "generators": k.display_generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "rank": k.rank(),
        "quotient_genus": profile.quotient_genus,
        "hyperelliptic_witness": profile.hyperelliptic_witness.as_ref().map(|c| c.representative().to_string()),
        "fixed_points": profile.rows.iter()
            .filter(|r| !r.coset.is_identity())
            .map(|r| json!({"coset": r.coset.representative().to_string(), "fixed_points": r.fixed_points}))
            .collect::<Vec<_>>(),
    }))
}

fn enumerate(n: usize, rank: usize, format: Format) -> Result<String, Failure> {
    let ctx = GroupContext::new(n)?;
    let found = enumerate_free_subgroups(ctx, rank)?;
    match format {
        Format::Json => {
            let recs = found
                .iter()
                .map(subgroup_record)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(pretty(&Value::Array(recs)))
        }
        Format::Text => {
            let mut lines = vec![format!(
                "{} free subgroups of rank {rank} in type {n}",
                found.len()
            )];
            for k in &found {
                let p = quotient_profile(k)?;
                lines.push(format!(
                    "{k}  genus {}{}",
                    p.quotient_genus,
                    if p.hyperelliptic_witness.is_some() {
                        "  hyperelliptic"
                    } else {
                        ""
                    }
                ));
            }
            Ok(lines.join("\n"))
        }
    }
}

fn quotient(args: QuotientArgs) -> Result<String, Failure> {
    let p = ParameterTuple::parse_for(args.n, &args.lambdas)?;
    let branch = p.branch_set();
    let curve: QuotientCurve = if args.full_rank {
        full_rank_quotient_curve(&branch)?
    } else {
        let omit = parse_index_list(args.omit.as_deref().unwrap_or_default())?;
        match (omit.as_slice(), args.tower_b3) {
            ([i], None) => single_omission_curve(&branch, *i)?,
            ([i, j], None) => pair_quotient_curve(&branch, *i, *j)?,
            ([i, j, k], None) => triple_quotient_curve(&branch, [*i, *j, *k])?,
            ([i, j, k], Some(r)) => {
                let pair: Vec<usize> = [*i, *j, *k].into_iter().filter(|&x| x != r).collect();
                if pair.len() != 2 {
                    return Err(Failure::Usage(format!(
                        "--tower-b3 {r} must be one of the omitted indices {i},{j},{k}"
                    )));
                }
                tower_quartic_curve(&branch, pair[0], pair[1], r)?
            }
            (_, Some(_)) => {
                return Err(Failure::Usage("--tower-b3 needs exactly three omitted indices".into()))
            }
            _ => return Err(Failure::Usage("--omit takes one, two or three indices".into())),
        }
    };
    let out = pretty(&curve.to_json());
    if curve.verify()? {
        Ok(out)
    } else {
        Err(Failure::Check(format!("self-check failed\n{out}")))
    }
}
