//! Seeded generators for the property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colimit::{Label, SmashKey, UElt};
use crate::phi_global::{CochainForm, PhiChain};
use crate::phi_local::PhiElt;
use crate::polyforms::{FormElt, Mono, Poly, ThetaElt, Wedge};
use crate::rational::{qr, Q};
use crate::simplicial_core::OrdMap;
use crate::simplicial_sets::{Chain, DegSimplex, SSet, SimplexRef};

pub type Gen = ChaCha8Rng;

pub fn gen(seed: u64) -> Gen {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero rational with small numerator and denominator.
pub fn rand_q(rng: &mut Gen) -> Q {
    let n = loop {
        let n = rng.gen_range(-5i64..=5);
        if n != 0 {
            break n;
        }
    };
    qr(n, rng.gen_range(1..=3))
}

/// A monomial in `t_0..t_n` of total degree at most `max_deg`.
pub fn rand_mono(rng: &mut Gen, n: usize, max_deg: u32) -> Mono {
    let total = rng.gen_range(0..=max_deg);
    let mut e = vec![0u32; n + 1];
    for _ in 0..total {
        e[rng.gen_range(0..=n)] += 1;
    }
    Mono(e)
}

/// A raw (unnormalized) polynomial.
pub fn rand_raw_poly(rng: &mut Gen, n: usize, max_deg: u32, max_terms: usize) -> Poly {
    let k = rng.gen_range(1..=max_terms.max(1));
    Poly::raw(n, (0..k).map(|_| (rand_mono(rng, n, max_deg), rand_q(rng))))
}

pub fn rand_poly(rng: &mut Gen, n: usize, max_deg: u32, max_terms: usize) -> Poly {
    rand_raw_poly(rng, n, max_deg, max_terms).normalized()
}

/// A random `deg`-subset of `{1..n}`.
pub fn rand_wedge(rng: &mut Gen, n: usize, deg: usize) -> Wedge {
    let mut idx: Vec<usize> = (1..=n).collect();
    idx.shuffle(rng);
    let mut pick = idx[..deg.min(n)].to_vec();
    pick.sort_unstable();
    Wedge::from_indices(&pick).expect("distinct").0
}

pub fn rand_form(rng: &mut Gen, n: usize, deg: usize, max_deg: u32) -> FormElt {
    let mut out = FormElt::zero(n, deg);
    if deg > n {
        return out;
    }
    for _ in 0..rng.gen_range(1..=3) {
        let w = rand_wedge(rng, n, deg);
        out = out.add(&FormElt::from_poly(&rand_poly(rng, n, max_deg, 3), w));
    }
    out
}

pub fn rand_theta(rng: &mut Gen, n: usize, deg: usize, max_deg: u32) -> ThetaElt {
    let mut out = ThetaElt::zero(n, deg);
    if deg > n {
        return out;
    }
    for _ in 0..rng.gen_range(1..=3) {
        let w = rand_wedge(rng, n, deg);
        out = out.add(&ThetaElt::from_poly(&rand_poly(rng, n, max_deg, 3), w));
    }
    out
}

/// A random element of `Φ_{[n], deg}` of weight at most `max_weight`.
pub fn rand_phi_elt(rng: &mut Gen, n: usize, deg: usize, max_weight: u32) -> PhiElt {
    let mut out = PhiElt::zero(n, deg);
    if deg > n || deg as u32 > max_weight {
        return out;
    }
    let poly_deg = max_weight - deg as u32;
    for _ in 0..rng.gen_range(1..=3) {
        let size = rng.gen_range(deg + 1..=n + 1);
        let mut all: Vec<usize> = (0..=n).collect();
        all.shuffle(rng);
        let mut sub = all[..size].to_vec();
        sub.sort_unstable();
        let a = rand_theta(rng, size - 1, deg, poly_deg);
        out = out.add(&PhiElt::inject(n, &sub, a).expect("valid subset"));
    }
    out
}

/// An arbitrary map `[k] -> [n]`.
pub fn rand_map(rng: &mut Gen, k: usize, n: usize) -> Vec<usize> {
    (0..=k).map(|_| rng.gen_range(0..=n)).collect()
}

/// An arbitrary (not necessarily monotone) surjection `[k] -> [n]`, `k ≥ n`.
pub fn rand_surjective_map(rng: &mut Gen, k: usize, n: usize) -> Vec<usize> {
    assert!(k >= n);
    let mut v: Vec<usize> = (0..=n).collect();
    v.extend((n..k).map(|_| rng.gen_range(0..=n)));
    v.shuffle(rng);
    v
}

/// A nondecreasing surjection `[k] -> [n]`.
pub fn rand_ord_surjection(rng: &mut Gen, k: usize, n: usize) -> OrdMap {
    assert!(k >= n);
    let mut jumps: Vec<usize> = (1..=k).collect();
    jumps.shuffle(rng);
    let mut jumps = jumps[..n].to_vec();
    jumps.sort_unstable();
    let values = (0..=k).map(|r| jumps.iter().filter(|&&j| j <= r).count()).collect();
    OrdMap::surjection(values).expect("surjective by construction")
}

fn rand_simplex(rng: &mut Gen, sset: &SSet, dim: usize) -> Option<SimplexRef> {
    let all: Vec<SimplexRef> = sset.simplices(dim).collect();
    all.choose(rng).copied()
}

pub fn rand_chain(rng: &mut Gen, sset: &SSet, deg: usize) -> Chain {
    let mut c = Chain::zero(deg);
    for _ in 0..rng.gen_range(1..=3) {
        if let Some(x) = rand_simplex(rng, sset, deg) {
            c.add_term(x, rand_q(rng));
        }
    }
    c
}

/// A random element of `Φ_deg(X)` of weight at most `max_weight`.
pub fn rand_phi_chain(rng: &mut Gen, sset: &SSet, deg: usize, max_weight: u32) -> PhiChain {
    let mut out = PhiChain::zero(deg);
    let top = sset.top_dim().unwrap_or(0);
    if deg > top || deg as u32 > max_weight {
        return out;
    }
    for _ in 0..rng.gen_range(1..=3) {
        let m = rng.gen_range(deg..=top);
        if let Some(x) = rand_simplex(rng, sset, m) {
            let a = rand_theta(rng, m, deg, max_weight - deg as u32);
            out = out.add(&PhiChain::from_theta(sset, &DegSimplex::nondeg(x), &a).expect("nondegenerate"));
        }
    }
    out
}

/// The barycentric coordinate of the vertex `v`: `Σ_{x_i = v} t_i` on each simplex.
pub fn vertex_function(sset: &SSet, v: SimplexRef) -> CochainForm {
    let mut out = CochainForm::zero(0);
    for x in sset.all_simplices() {
        let verts = sset.vertices(&DegSimplex::nondeg(x)).expect("valid simplex");
        let mut f = Poly::zero(x.dim);
        for (i, w) in verts.iter().enumerate() {
            if *w == v {
                f = f.add(&Poly::t(x.dim, i));
            }
        }
        out.set(x, FormElt::from_poly(&f, Wedge::empty())).expect("matching dimension");
    }
    out
}

/// A face-compatible cochain form: sums of `c · f_1⋯f_r · df_{r+1}∧⋯∧df_{r+deg}`
/// with the `f`'s vertex functions.
pub fn rand_cochain(rng: &mut Gen, sset: &SSet, deg: usize, max_deg: u32) -> CochainForm {
    let verts: Vec<SimplexRef> = sset.simplices(0).collect();
    let mut out = CochainForm::zero(deg);
    if verts.is_empty() {
        return out;
    }
    for _ in 0..rng.gen_range(1..=3) {
        let mut term = CochainForm::constant(sset, rand_q(rng));
        for _ in 0..rng.gen_range(0..=max_deg) {
            term = term.wedge(&vertex_function(sset, *verts.choose(rng).unwrap()));
        }
        for _ in 0..deg {
            term = term.wedge(&vertex_function(sset, *verts.choose(rng).unwrap()).d());
        }
        out = out.add(&term);
    }
    out
}

/// A random element of `U_deg(A, X)`.
pub fn rand_uelt(rng: &mut Gen, sset: &SSet, labels: &[Label], deg: usize, terms: usize) -> UElt {
    let mut u = UElt::zero(labels.to_vec(), deg).expect("sorted labels");
    let k = deg + labels.len();
    let top = sset.top_dim().unwrap_or(0).min(k);
    for _ in 0..terms * 8 {
        if u.terms().len() >= terms {
            break;
        }
        let e = rng.gen_range(0..=top);
        let Some(y) = rand_simplex(rng, sset, e) else { continue };
        let surj = rand_ord_surjection(rng, k, e);
        let jumps = (0..labels.len()).map(|_| rng.gen_range(1..=k.max(1))).collect();
        if k == 0 && !labels.is_empty() {
            break;
        }
        let key = SmashKey { jumps, x: DegSimplex { surj, base: y } };
        u.add_term(key, rand_q(rng)).expect("well-formed key");
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial_sets::{boundary_delta, delta};

    #[test]
    fn deterministic() {
        let a = rand_poly(&mut gen(3), 3, 3, 4);
        let b = rand_poly(&mut gen(3), 3, 3, 4);
        assert_eq!(a, b);
    }

    #[test]
    fn cochains_are_compatible() {
        let mut rng = gen(11);
        for x in [delta(2), boundary_delta(3), crate::simplicial_sets::sphere(2)] {
            for d in 0..=2 {
                rand_cochain(&mut rng, &x, d, 2).validate(&x).unwrap();
            }
        }
    }

    #[test]
    fn surjections() {
        let mut rng = gen(5);
        for _ in 0..50 {
            let s = rand_ord_surjection(&mut rng, 4, 2);
            assert!(s.is_surjective());
            let m = rand_surjective_map(&mut rng, 4, 2);
            assert!((0..=2).all(|v| m.contains(&v)));
        }
    }

    #[test]
    fn uelts_are_mostly_nonzero() {
        let mut rng = gen(2);
        let x = crate::simplicial_sets::sphere(2);
        let mut nonzero = 0;
        for i in 0..100 {
            let labels: Vec<Label> = (0..(i % 3) as Label).collect();
            if !rand_uelt(&mut rng, &x, &labels, i % 3, 3).is_zero() {
                nonzero += 1;
            }
        }
        assert!(nonzero >= 80, "{nonzero}");
    }
}
