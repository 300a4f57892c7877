//! Running the identity suites from code.
//!
//! ```text
//! cargo run --release --example verification -- 500 11
//! ```

use derham::verify::{run_suites, SUITES};

fn main() -> derham::error::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cases = args.first().map_or(100, |s| s.parse().expect("case count"));
    let seed = args.get(1).map_or(7, |s| s.parse().expect("seed"));
    let names: Vec<String> = SUITES.iter().map(|s| s.to_string()).collect();
    for r in run_suites(&names, cases, seed)? {
        println!("{} ({})", r.suite, if r.passed { "pass" } else { "FAIL" });
        for c in &r.checks {
            println!("  {:5} {:>6} cases  {}", if c.passed { "ok" } else { "FAIL" }, c.cases, c.name);
            if let Some(w) = &c.counterexample {
                println!("        {w}");
            }
        }
    }
    Ok(())
}
