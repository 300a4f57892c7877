//! Pairing Φ(X) with polynomial forms on X, and the adjunction between ∂
//! and d.
//!
//! ```text
//! cargo run --example pairing
//! ```

use derham::builder::build;
use derham::operands::{parse_chain, ChainTerm};
use derham::phi_global::phi_of_simplex;
use derham::random::{gen, rand_cochain, rand_phi_chain, vertex_function};
use derham::rational::{fmt_q, sign};

fn main() -> derham::error::Result<()> {
    let x = build("delta:3")?;
    let mut rng = gen(3);
    let c = rand_phi_chain(&mut rng, &x, 2, 3);
    let om = rand_cochain(&mut rng, &x, 1, 2);
    println!("c = {}", c.display(&x));
    let lhs = c.boundary(&x)?.pair(&om);
    let rhs = c.pair(&om.d()) * sign(true);
    println!("⟨⟨∂c, ω⟩⟩ = {}   −⟨⟨c, dω⟩⟩ = {}", fmt_q(&lhs), fmt_q(&rhs));

    // a chain written out by hand
    let tri = build("delta:2")?;
    let terms: Vec<ChainTerm> = serde_json::from_str(
        r#"[{"simplex":"0,1,2","nu":[0,1,1],"wedge":[1,2],"coeff":"3"},
            {"simplex":"0,1,2","nu":[0,0,0],"wedge":[1,2],"coeff":"1/2"}]"#,
    )?;
    let c = parse_chain(&tri, None, &terms)?;
    println!("∂c = {}", c.boundary(&tri)?.display(&tri));

    // φ(σ) against dv1∧dv2 built from barycentric coordinates
    let v: Vec<_> = tri.simplices(0).collect();
    let vol = vertex_function(&tri, v[1]).d().wedge(&vertex_function(&tri, v[2]).d());
    let top = tri.simplices(2).next().unwrap();
    println!("⟨⟨φ(σ), dv1∧dv2⟩⟩ = {}", fmt_q(&phi_of_simplex(top).pair(&vol)));
    Ok(())
}
