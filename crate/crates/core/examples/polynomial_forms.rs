//! Polynomials on simplices, their integrals, pullbacks and pushforwards,
//! and the pairing of dual data with forms.
//!
//! ```text
//! cargo run --example polynomial_forms
//! ```

use derham::polyforms::{FormElt, Poly, ThetaElt};
use derham::rational::fmt_q;

fn main() -> derham::error::Result<()> {
    // on [2] the coordinates satisfy t_0 + t_1 + t_2 = 1
    let t = |i| Poly::t(2, i);
    let f = t(0).mul(&t(1)).mul(&t(2));
    println!("∫ t0 t1 t2 over [2] = {}", fmt_q(&f.integrate()));
    println!("t0 t1 t2 = {f}");

    // pullback along (0,1,1): [2] -> [1], pushforward back down
    let g = Poly::t(1, 1).mul(&Poly::t(1, 1));
    let pulled = g.pullback(&[0, 1, 1]);
    println!("pullback of t1² = {pulled}");
    let pushed = f.pushforward(&[0, 1, 1], 1)?;
    println!("pushforward of t0t1t2 = {pushed}, integral {}", fmt_q(&pushed.integrate()));

    // forms and dual data
    let om = FormElt::ds(2, 1).wedge(&FormElt::ds(2, 2));
    let theta = ThetaElt::top(2);
    println!("⟨θ_[2], ds1∧ds2⟩ = {}", theta.pair(&om));
    for j in 0..=2 {
        println!("dt_{j} ⌟ θ_[2] = {}", theta.interior(&FormElt::dt(2, j)));
    }
    let d = Poly::t(2, 1).mul(&Poly::t(2, 2));
    println!("d(t1 t2) = {}", FormElt::from_poly(&d, Default::default()).d());
    Ok(())
}
