//! The stabilized model U(X): the unit η, the comparison φ^#, and the
//! inverse ζ′ of ψ.
//!
//! ```text
//! cargo run --example colimit_model
//! ```

use derham::builder::build;
use derham::colimit::{decompose, eta, zeta_1, zeta_prime};
use derham::phi_global::PhiChain;
use derham::polyforms::{Mono, Wedge};

fn main() -> derham::error::Result<()> {
    let x = build("sphere:1")?;
    let e = x.simplices(1).next().unwrap();

    let unit = eta(&[0, 1])?;
    println!("η_{{0,1}} has {} terms", unit.terms().len());

    // ζ_1(e, ν, J) and its image under φ^#
    let z = zeta_1(e, &[0, 1], &[])?;
    println!("ζ_1(e, (0,1), ∅) lives over labels {:?} in degree {}", z.labels(), z.deg());
    println!("φ^# = {}", z.phi_sharp(&x)?.display(&x));

    // ζ′ inverts ψ on a generator
    let c = PhiChain::basis((e, Mono(vec![0, 1]), Wedge::single(1)));
    let class = zeta_prime(&c)?;
    println!("ψζ′(e ⊗ t1 w1) = {}", class.psi(&x, 1)?.display(&x));
    for rep in &class.reps {
        for piece in decompose(rep, &x)? {
            println!("  {} · ζ_1({}, {:?}, {:?})", derham::rational::fmt_q(&piece.coeff), x.name(piece.x), piece.nu, piece.j);
        }
    }
    Ok(())
}
