//! Shuffle products: `μ_{ζξ}` on `Θ`, the shuffle sign, the Eilenberg–Zilber
//! product on normalized chains and the product on `Φ_*(-)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::phi_global::PhiChain;
use crate::polyforms::ThetaElt;
use crate::rational::{sign, Q};
use crate::simplicial_core::{enumerate_shuffles, Shuffle};
use crate::simplicial_sets::{Chain, DegSimplex, ProductSSet, SSet, SimplexRef};

fn check_pair(sh: &Shuffle) -> Result<(usize, usize)> {
    let s = sh.sizes();
    if s.len() != 2 {
        return Err(Error::SizeMismatch(format!("expected a two-part shuffle, got {} parts", s.len())));
    }
    Ok((s[0], s[1]))
}

/// `μ_{ζξ}(f α_0 ⊗ g β_0) = ζ^*f · ξ^*g · ζ•α_0 ∧ ξ•β_0`.
pub fn mu_theta(sh: &Shuffle, a: &ThetaElt, b: &ThetaElt) -> Result<ThetaElt> {
    let (n, m) = check_pair(sh)?;
    if a.n() != n || b.n() != m {
        return Err(Error::SizeMismatch(format!("shuffle of type ({n},{m}) applied to ({},{})", a.n(), b.n())));
    }
    Ok(a.bullet(sh.part(0))?.wedge(&b.bullet(sh.part(1))?))
}

/// `sgn(ζ,ξ)` with `μ_{ζξ}(θ_[n] ⊗ θ_[m]) = sgn(ζ,ξ) θ_[n+m]`.
pub fn shuffle_sign(sh: &Shuffle) -> Result<Q> {
    let (n, m) = check_pair(sh)?;
    let prod = mu_theta(sh, &ThetaElt::top(n), &ThetaElt::top(m))?;
    let top = ThetaElt::top(n + m);
    if prod == top {
        Ok(sign(false))
    } else if prod == top.neg() {
        Ok(sign(true))
    } else {
        Err(Error::SizeMismatch("product of top classes is not a unit multiple".into()))
    }
}

/// `μ(x ⊗ y) = Σ sgn(ζ,ξ) (ζ^*x, ξ^*y)`.
pub fn shuffle_product_n(x: &SSet, y: &SSet, prod: &ProductSSet, a: &Chain, b: &Chain) -> Result<Chain> {
    let (n, m) = (a.degree, b.degree);
    let mut out = Chain::zero(n + m);
    for sh in enumerate_shuffles(&[n, m]) {
        let s = shuffle_sign(&sh)?;
        for (xr, xc) in &a.terms {
            let xa = x.apply_map(sh.part(0), &DegSimplex::nondeg(*xr))?;
            for (yr, yc) in &b.terms {
                let yb = y.apply_map(sh.part(1), &DegSimplex::nondeg(*yr))?;
                let z = prod.pair(&xa, &yb)?;
                if z.is_nondegenerate() {
                    out.add_term(z.base, &s * xc * yc);
                }
            }
        }
    }
    Ok(out)
}

/// `μ((x⊗α) ⊗ (y⊗β)) = Σ_{ζ,ξ} (ζ^*x, ξ^*y) ⊗ μ_{ζξ}(α⊗β)`.
pub fn mu_phi(x: &SSet, y: &SSet, prod: &ProductSSet, a: &PhiChain, b: &PhiChain) -> Result<PhiChain> {
    let mut out = PhiChain::zero(a.deg() + b.deg());
    let bs = b.by_simplex();
    let mut shuffles: BTreeMap<(usize, usize), Vec<Shuffle>> = BTreeMap::new();
    for (xr, alpha) in a.by_simplex() {
        for (yr, beta) in &bs {
            let shs = shuffles.entry((xr.dim, yr.dim)).or_insert_with(|| enumerate_shuffles(&[xr.dim, yr.dim]));
            for sh in shs.iter() {
                let xa = x.apply_map(sh.part(0), &DegSimplex::nondeg(xr))?;
                let yb = y.apply_map(sh.part(1), &DegSimplex::nondeg(*yr))?;
                let z = prod.pair(&xa, &yb)?;
                let theta = mu_theta(sh, &alpha, beta)?;
                out = out.add(&PhiChain::from_theta(&prod.sset, &z, &theta)?);
            }
        }
    }
    Ok(out)
}

/// Renames the simplices of a chain along a dimension-preserving map.
pub fn relabel(c: &PhiChain, f: impl Fn(SimplexRef) -> SimplexRef) -> PhiChain {
    let mut out = PhiChain::zero(c.deg());
    for ((x, m, w), q) in c.terms() {
        let y = f(*x);
        assert_eq!(y.dim, x.dim);
        out.add_term((y, m.clone(), *w), q.clone());
    }
    out
}

/// `(x, y) ↦ (y, x)` as a map of nondegenerate simplices `X×Y -> Y×X`.
pub fn swap_map(xy: &ProductSSet, yx: &ProductSSet) -> Result<BTreeMap<SimplexRef, SimplexRef>> {
    let mut out = BTreeMap::new();
    for z in xy.sset.all_simplices() {
        let (a, b) = xy.components(z);
        let w = yx.pair(b, a)?;
        out.insert(z, w.base);
    }
    Ok(out)
}

/// `((x, y), z) ↦ (x, (y, z))` on nondegenerate simplices.
pub fn assoc_map(
    xy: &ProductSSet,
    xy_z: &ProductSSet,
    yz: &ProductSSet,
    x_yz: &ProductSSet,
) -> Result<BTreeMap<SimplexRef, SimplexRef>> {
    let mut out = BTreeMap::new();
    for t in xy_z.sset.all_simplices() {
        let (u, c) = xy_z.components(t);
        let (a, b) = xy.project(u)?;
        let bc = yz.pair(&b, c)?;
        let w = x_yz.pair(&a, &bc)?;
        if !w.is_nondegenerate() {
            return Err(Error::InvalidSSet("associator sent a nondegenerate simplex to a degenerate one".into()));
        }
        out.insert(t, w.base);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phi_global::{phi_of_chain, phi_of_simplex};
    use crate::rational::q;
    use crate::simplicial_core::OrdMap;
    use crate::simplicial_sets::delta;

    fn sh(a: Vec<usize>, b: Vec<usize>) -> Shuffle {
        let n = *a.last().unwrap();
        let m = *b.last().unwrap();
        Shuffle::new(vec![OrdMap::new(a, n).unwrap(), OrdMap::new(b, m).unwrap()]).unwrap()
    }

    #[test]
    fn theta_products() {
        let s1 = sh(vec![0, 1, 1], vec![0, 0, 1]);
        let s2 = sh(vec![0, 0, 1], vec![0, 1, 1]);
        let t1 = ThetaElt::top(1);
        assert_eq!(mu_theta(&s1, &t1, &t1).unwrap(), ThetaElt::top(2));
        assert_eq!(mu_theta(&s2, &t1, &t1).unwrap(), ThetaElt::top(2).neg());
        assert_eq!(shuffle_sign(&s1).unwrap(), q(1));
        assert_eq!(shuffle_sign(&s2).unwrap(), q(-1));
        let s0 = enumerate_shuffles(&[2, 0]).remove(0);
        let a = ThetaElt::w(2, 2);
        assert_eq!(mu_theta(&s0, &a, &ThetaElt::scalar(0, q(1))).unwrap(), a);
    }

    #[test]
    fn chain_product_of_edges() {
        let d1 = delta(1);
        let p = ProductSSet::new(&d1, &d1).unwrap();
        let e = d1.simplices(1).next().unwrap();
        let c = shuffle_product_n(&d1, &d1, &p, &Chain::simplex(e), &Chain::simplex(e)).unwrap();
        let mut coeffs: Vec<Q> = c.terms.values().cloned().collect();
        coeffs.sort();
        assert_eq!(coeffs, vec![q(-1), q(1)]);
        let lhs = mu_phi(&d1, &d1, &p, &phi_of_simplex(e), &phi_of_simplex(e)).unwrap();
        assert_eq!(lhs, phi_of_chain(&c));
    }
}
