//! The shuffle product Φ(X) ⊗ Φ(Y) → Φ(X × Y).
//!
//! ```text
//! cargo run --example shuffle_product
//! ```

use derham::builder::build;
use derham::monoidal::{mu_phi, shuffle_product_n, shuffle_sign};
use derham::phi_global::phi_of_chain;
use derham::rational::fmt_q;
use derham::simplicial_core::enumerate_shuffles;
use derham::simplicial_sets::{Chain, ProductSSet};

fn main() -> derham::error::Result<()> {
    for sh in enumerate_shuffles(&[2, 1]) {
        println!("shuffle {:?} sign {}", sh.blocks(), fmt_q(&shuffle_sign(&sh)?));
    }

    let x = build("delta:1")?;
    let y = build("sphere:1")?;
    let xy = ProductSSet::new(&x, &y)?;
    let a = Chain::simplex(x.simplices(1).next().unwrap());
    let b = Chain::simplex(y.simplices(1).next().unwrap());

    let p = mu_phi(&x, &y, &xy, &phi_of_chain(&a), &phi_of_chain(&b))?;
    println!("μ(φa ⊗ φb) = {}", p.display(&xy.sset));
    let n = shuffle_product_n(&x, &y, &xy, &a, &b)?;
    println!("agrees with the Eilenberg-Zilber product: {}", p == phi_of_chain(&n));
    println!("∂μ(a⊗b) = {}", p.boundary(&xy.sset)?.display(&xy.sset));
    Ok(())
}
