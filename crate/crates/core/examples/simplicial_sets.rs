//! Building simplicial sets, Eilenberg-Zilber normal forms and JSON.
//!
//! ```text
//! cargo run --example simplicial_sets
//! ```

use derham::builder::build;
use derham::simplicial_core::OrdMap;
use derham::simplicial_sets::DegSimplex;

fn main() -> derham::error::Result<()> {
    for expr in ["delta:3", "boundary:3", "sphere:2", "quotient:(delta:1,boundary:1)", "product:(sphere:1,sphere:1)"] {
        let x = build(expr)?;
        println!("{expr:32} nondegenerate {:?}  χ = {}", x.nd_counts(), x.euler_characteristic());
    }

    // α^*x is stored as (surjection, nondegenerate simplex)
    let x = build("sphere:1")?;
    let e = DegSimplex::nondeg(x.simplices(1).next().unwrap());
    for values in [vec![0, 0, 1], vec![0, 1, 1], vec![1, 1, 1], vec![0, 0]] {
        let alpha = OrdMap::new(values.clone(), 1)?;
        let y = x.apply_map(&alpha, &e)?;
        println!("{values:?}^*e = ({:?}, {})", y.surj.values(), x.name(y.base));
    }

    // the triangle Δ1×Δ1 splits into two nondegenerate 2-simplices
    let sq = build("product:(delta:1,delta:1)")?;
    for s in sq.simplices(2) {
        println!("{}", sq.name(s));
    }

    let json = serde_json::to_string(&build("boundary:2")?.to_json())?;
    println!("{json}");
    Ok(())
}
