use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use triplex::freealg::DEFAULT_MAX_MONOMIALS;
use triplex::lts::{catalog, standard_embedding};
use triplex_cli::loader::{lie_file, lts_file, to_json};
use triplex_cli::suites::build_algebra;
use triplex_cli::{load_system, run_suite, CliError, Config, Suite, SuiteReport};

#[derive(Parser)]
#[command(name = "triplex", version, about = "Exact computations with Lie triple systems and their enveloping algebras")]
struct Cli {
    /// Size guard on the number of free monomials.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_MONOMIALS)]
    max_monomials: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Degree {
    /// Truncation degree (defaults by dimension: 8, 6, 4, then 3).
    #[arg(short = 'N', long = "max-degree")]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the triple system axioms.
    Check {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Build the standard embedding and check its Killing form identities.
    Embed {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Compare the Lie closure of the R maps with End(T).
    Endo {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Simplicity certificate.
    Simple {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Build U(T) up to degree N and print the normal-form dimensions.
    Pbw {
        file: PathBuf,
        #[command(flatten)]
        degree: Degree,
        #[command(flatten)]
        out: Output,
    },
    /// Multiply two elements of U(T).
    Mul {
        file: PathBuf,
        #[command(flatten)]
        degree: Degree,
        x: String,
        y: String,
    },
    /// Right-ideal closure of the given elements.
    Ideal {
        file: PathBuf,
        #[command(flatten)]
        degree: Degree,
        /// Generators of the right ideal.
        #[arg(long = "right", required = true, num_args = 1..)]
        right: Vec<String>,
    },
    /// Run a check suite.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        degree: Degree,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Print a bundled system as JSON.
    Catalog {
        /// One of s2, sl2, sl2_lts, sl3, sl3_sym, s2_pair, abelian<d>.
        name: String,
    },
}

fn emit(report: &SuiteReport, out: &Output) -> i32 {
    if out.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    report.status
}

fn suite_command(suite: Suite, file: &PathBuf, cfg: &Config, out: &Output) -> Result<i32, CliError> {
    let t = load_system(file)?.to_lts()?;
    Ok(emit(&run_suite(suite, &t, cfg)?, out))
}

fn catalog_json(name: &str) -> Result<String, CliError> {
    let text = match name {
        "s2" => to_json(&lts_file(&catalog::s2())),
        "sl2" => to_json(&lie_file(&catalog::sl2())),
        "sl2_lts" => to_json(&lts_file(&catalog::sl2_lts())),
        "sl3" => to_json(&lie_file(&catalog::sl3())),
        "sl3_sym" => to_json(&lts_file(&catalog::sl3_sym_lts())),
        "s2_pair" => to_json(&lts_file(&catalog::s2_pair())),
        other => match other.strip_prefix("abelian").and_then(|d| d.parse::<usize>().ok()) {
            Some(d) if d > 0 => to_json(&lts_file(&catalog::abelian(d))),
            _ => return Err(CliError::Usage(format!("unknown catalog entry {other:?}"))),
        },
    };
    Ok(text)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let base = Config { max_monomials: cli.max_monomials, ..Config::default() };
    let with_degree = |d: &Degree| Config { max_degree: d.n, ..base };
    match cli.command {
        Command::Check { file, out } => suite_command(Suite::Axioms, &file, &base, &out),
        Command::Embed { file, out } => {
            let t = load_system(&file)?.to_lts()?;
            let report = run_suite(Suite::Embedding, &t, &base)?;
            if !out.json {
                if let Ok(emb) = standard_embedding(&t) {
                    let k = emb.killing_on_t();
                    println!("Killing form on {}:", t.name());
                    for i in 0..k.rows() {
                        let row: Vec<String> = (0..k.cols()).map(|j| k.get(i, j).to_string()).collect();
                        println!("  [{}]", row.join(", "));
                    }
                }
            }
            Ok(emit(&report, &out))
        }
        Command::Endo { file, out } => suite_command(Suite::Endo, &file, &base, &out),
        Command::Simple { file, out } => suite_command(Suite::Simple, &file, &base, &out),
        Command::Pbw { file, degree, out } => suite_command(Suite::Pbw, &file, &with_degree(&degree), &out),
        Command::Mul { file, degree, x, y } => {
            let t = load_system(&file)?.to_lts()?;
            let alg = build_algebra(&t, &with_degree(&degree))?;
            let product = alg.mul(&alg.parse(&x)?, &alg.parse(&y)?)?;
            println!("{}", alg.format(&product));
            Ok(0)
        }
        Command::Ideal { file, degree, right } => {
            let t = load_system(&file)?.to_lts()?;
            let alg = build_algebra(&t, &with_degree(&degree))?;
            let gens = right.iter().map(|g| alg.parse(g)).collect::<Result<Vec<_>, _>>()?;
            let c = alg.right_ideal_closure(&gens)?;
            println!("dim U(T)_{} = {}", alg.max_degree(), alg.nf_count());
            println!("dim closure = {}", c.subspace.dim());
            println!("filtered dims = {:?}", c.filtered_dims);
            println!("contains 1 = {}", c.contains_one);
            println!("dim (closure meet T) = {}", c.meets_t);
            println!("inside augmentation = {}", c.within_augmentation);
            match c.stabilization {
                Some(s) => println!("contains every monomial of degree {s}..={}", c.window),
                None => println!("does not contain every monomial of degree {}", c.window),
            }
            Ok(0)
        }
        Command::Verify { file, degree, suite, seed, out } => {
            let suite: Suite = suite.parse()?;
            let cfg = Config { seed, ..with_degree(&degree) };
            suite_command(suite, &file, &cfg, &out)
        }
        Command::Catalog { name } => {
            print!("{}", catalog_json(&name)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("triplex: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
