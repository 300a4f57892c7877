use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use derham::builder::build;
use derham::error::Result;
use derham::monoidal::mu_phi;
use derham::operands::{chain_terms, pair, parse_chain, parse_form, ChainTerm, FormJson};
use derham::phi_global::homology_run;
use derham::simplicial_sets::ProductSSet;
use derham::verify::{bench, run_suites, SUITES};

#[derive(Parser)]
#[command(name = "derham", version, about = "Exact de Rham chains on finite simplicial sets")]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compare stabilized H(Φ(X)) with normalized simplicial homology.
    Homology {
        #[arg(long)]
        space: String,
        #[arg(long = "D", default_value_t = 3)]
        d: u32,
        #[arg(long, default_value_t = 2)]
        offset: u32,
    },
    /// Run named verification suites (`all` for every suite).
    Verify {
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Pair a chain with a cochain form. Operands are JSON text or `@path`.
    Pair {
        #[arg(long)]
        space: String,
        #[arg(long)]
        chain: String,
        #[arg(long)]
        form: String,
    },
    /// Shuffle product of two chains, on the product of their spaces.
    Product {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Wall-clock time per suite.
    Bench {
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

fn operand(s: &str) -> Result<String> {
    match s.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path)?),
        None => Ok(s.to_string()),
    }
}

fn suites(names: Vec<String>) -> Vec<String> {
    if names.iter().any(|n| n == "all") {
        SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        names
    }
}

fn run(cmd: Cmd) -> Result<(Value, bool)> {
    match cmd {
        Cmd::Homology { space, d, offset } => {
            let x = build(&space)?;
            let r = homology_run(&space, &x, d, offset)?;
            let ok = r.matches();
            let mut v = serde_json::to_value(r.report())?;
            v["normalized_dims"] = json!(r.n_dims);
            v["stable_next_dims"] = json!(r.stable_next);
            if !r.stabilized() {
                v["diagnostic"] = json!(format!("image dimensions changed between D={d} and D={}; raise --D", d + 1));
            }
            Ok((v, ok))
        }
        Cmd::Verify { suite, cases, seed } => {
            let reports = run_suites(&suites(suite), cases, seed)?;
            let ok = reports.iter().all(|r| r.passed);
            Ok((json!({ "passed": ok, "suites": reports }), ok))
        }
        Cmd::Pair { space, chain, form } => {
            let x = build(&space)?;
            let terms: Vec<ChainTerm> = serde_json::from_str(&operand(&chain)?)?;
            let f: FormJson = serde_json::from_str(&operand(&form)?)?;
            let c = parse_chain(&x, None, &terms)?;
            Ok((json!({ "value": pair(&c, &parse_form(&x, &f)?) }), true))
        }
        Cmd::Product { left, right, a, b } => {
            let x = build(&left)?;
            let y = build(&right)?;
            let xy = ProductSSet::new(&x, &y)?;
            let ta: Vec<ChainTerm> = serde_json::from_str(&operand(&a)?)?;
            let tb: Vec<ChainTerm> = serde_json::from_str(&operand(&b)?)?;
            let p = mu_phi(&x, &y, &xy, &parse_chain(&x, None, &ta)?, &parse_chain(&y, None, &tb)?)?;
            let space = format!("product:({left},{right})");
            Ok((json!({ "space": space, "degree": p.deg(), "terms": chain_terms(&xy.sset, &p) }), true))
        }
        Cmd::Bench { suite, cases, seed } => {
            let rows = bench(&suites(suite), cases, seed)?;
            let ok = rows.iter().all(|r| r.2);
            let rows: Vec<Value> =
                rows.into_iter().map(|(s, t, p)| json!({ "suite": s, "seconds": t, "passed": p })).collect();
            Ok((json!({ "cases": cases, "seed": seed, "timings": rows }), ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok((v, ok)) => {
            let text = serde_json::to_string_pretty(&v).expect("serializable report");
            match &cli.out {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, text + "\n") {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                }
                None => {
                    use std::io::Write;
                    let _ = writeln!(std::io::stdout(), "{text}");
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
