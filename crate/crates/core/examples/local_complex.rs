//! The local complexes Φ_I: differentials, pushforward, the stabilized
//! homology, and the witness forms that detect nonzero elements.
//!
//! ```text
//! cargo run --example local_complex
//! ```

use derham::phi_local::{local_stable_homology, local_truncated_complex, PhiElt};
use derham::polyforms::{Poly, ThetaElt, Wedge};
use derham::rational::fmt_q;

fn main() -> derham::error::Result<()> {
    let top = PhiElt::inject(2, &[0, 1, 2], ThetaElt::top(2))?;
    println!("δθ_[2] = {}", top.delta());
    println!("δ²θ_[2] is zero: {}", top.delta().delta().is_zero());

    // an element with polynomial coefficients, pushed along a collapse
    let a = PhiElt::inject(2, &[0, 2], ThetaElt::from_poly(&Poly::t(1, 1), Wedge::single(1)))?;
    println!("a = {a}");
    println!("collapse [2] -> [1]: {}", a.push(&[0, 0, 1], 1)?);

    let w = a.xi_witness()?;
    println!("⟨⟨a, ξ(a)⟩⟩ = {}", fmt_q(&a.big_pair(&w)));

    for n in 0..=3 {
        let (cx, _) = local_truncated_complex(n, n as u32 + 1)?;
        let h = local_stable_homology(n, n as u32 + 1, 2)?;
        println!("|I| = {}: truncated dims {:?}, stabilized homology {h:?}", n + 1, cx.dims());
    }
    Ok(())
}
