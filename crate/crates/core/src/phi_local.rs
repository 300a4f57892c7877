//! The local complexes `Φ_{I,*} = ⊕_{∅≠J⊆I} Θ_{J,*}` for `I = [n]`.
//!
//! A component `i_J(a)` stores `a` over `[|J|-1]` through the order
//! isomorphism `J ≅ [|J|-1]`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::homology_engine::{closed_subcomplex, induced_image_dims, inclusion_map, ChainComplexQ};
use crate::polyforms::{monomials_up_to, FormElt, Mono, Poly, ThetaElt, Wedge};
use crate::rational::Q;
use crate::simplicial_core::{nonempty_subsets, OrdMap};

#[derive(Clone, PartialEq, Eq)]
pub struct PhiElt {
    n: usize,
    deg: usize,
    comps: BTreeMap<Vec<usize>, ThetaElt>,
}

impl fmt::Debug for PhiElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Phi[{}]_{}{:?}", self.n, self.deg, self.comps)
    }
}

impl fmt::Display for PhiElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .comps
            .iter()
            .filter(|(_, a)| !a.is_zero())
            .map(|(j, a)| format!("i_{{{}}}({a})", j.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Basis element `i_J(t^ν w_W)` of `Φ_I`.
pub type PhiKey = (Vec<usize>, Mono, Wedge);

impl PhiElt {
    pub fn zero(n: usize, deg: usize) -> Self {
        PhiElt { n, deg, comps: BTreeMap::new() }
    }

    /// `i_J(a)`.
    pub fn inject(n: usize, sub: &[usize], a: ThetaElt) -> Result<Self> {
        let mut out = PhiElt::zero(n, a.deg());
        out.add_comp(sub, a)?;
        Ok(out)
    }

    pub fn add_comp(&mut self, sub: &[usize], a: ThetaElt) -> Result<()> {
        if sub.is_empty() || sub.windows(2).any(|w| w[0] >= w[1]) || sub[sub.len() - 1] > self.n {
            return Err(Error::InvalidMap(sub.to_vec()));
        }
        if a.n() + 1 != sub.len() {
            return Err(Error::DomainMismatch { expected: sub.len() - 1, found: a.n() });
        }
        if a.deg() != self.deg {
            return Err(Error::DomainMismatch { expected: self.deg, found: a.deg() });
        }
        let e = match self.comps.remove(sub) {
            Some(old) => old.add(&a),
            None => a,
        };
        if !e.is_zero() {
            self.comps.insert(sub.to_vec(), e);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn deg(&self) -> usize {
        self.deg
    }

    pub fn comps(&self) -> &BTreeMap<Vec<usize>, ThetaElt> {
        &self.comps
    }

    pub fn comp(&self, sub: &[usize]) -> Option<&ThetaElt> {
        self.comps.get(sub)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.comps.values().map(|a| a.weight()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &PhiElt) -> PhiElt {
        assert_eq!((self.n, self.deg), (other.n, other.deg));
        let mut out = self.clone();
        for (j, a) in &other.comps {
            out.add_comp(j, a.clone()).expect("compatible components");
        }
        out
    }

    pub fn sub(&self, other: &PhiElt) -> PhiElt {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> PhiElt {
        let mut out = PhiElt::zero(self.n, self.deg);
        if !c.is_zero() {
            out.comps = self.comps.iter().map(|(j, a)| (j.clone(), a.scale(c))).collect();
        }
        out
    }

    pub fn from_key(n: usize, key: &PhiKey, c: Q) -> PhiElt {
        let (sub, m, w) = key;
        let mut a = ThetaElt::zero(sub.len() - 1, w.len());
        a.add_term(m.clone(), *w, c);
        PhiElt::inject(n, sub, a).expect("valid basis key")
    }

    pub fn to_keys(&self) -> Vec<(PhiKey, Q)> {
        let mut out = Vec::new();
        for (j, a) in &self.comps {
            for ((m, w), c) in a.terms() {
                out.push(((j.clone(), m.clone(), *w), c.clone()));
            }
        }
        out
    }

    /// `δ′(i_J(f α_0)) = -i_J(df ⌟ α_0)`.
    pub fn delta_prime(&self) -> PhiElt {
        let mut out = PhiElt::zero(self.n, self.deg.saturating_sub(1));
        if self.deg == 0 {
            return out;
        }
        for (j, a) in &self.comps {
            out.add_comp(j, theta_delta_prime(a)).expect("same subset");
        }
        out
    }

    /// `δ″(i_J(f α_0)) = -Σ_{j∈J} i_{J∖j}(res(f) · dt_j ⌟ α_0)`.
    pub fn delta_dblprime(&self) -> PhiElt {
        let mut out = PhiElt::zero(self.n, self.deg.saturating_sub(1));
        if self.deg == 0 {
            return out;
        }
        for (sub, a) in &self.comps {
            for (p, face) in theta_delta_dblprime(a) {
                let mut smaller = sub.clone();
                smaller.remove(p);
                out.add_comp(&smaller, face).expect("face subset");
            }
        }
        out
    }

    pub fn delta(&self) -> PhiElt {
        self.delta_prime().add(&self.delta_dblprime())
    }

    /// `σ_*(i_J(a)) = i_{σ(J)}(σ_* a)` for any map `σ: [n] -> [m]`.
    pub fn push(&self, map: &[usize], m: usize) -> Result<PhiElt> {
        if map.len() != self.n + 1 {
            return Err(Error::DomainMismatch { expected: self.n, found: map.len() - 1 });
        }
        if map.iter().any(|&v| v > m) {
            return Err(Error::InvalidMap(map.to_vec()));
        }
        let mut out = PhiElt::zero(m, self.deg);
        for (sub, a) in &self.comps {
            let image: Vec<usize> = sub.iter().map(|&i| map[i]).collect::<BTreeSet<_>>().into_iter().collect();
            let local: Vec<usize> = sub.iter().map(|&i| image.binary_search(&map[i]).unwrap()).collect();
            out.add_comp(&image, a.pushforward(&local, image.len() - 1)?)?;
        }
        Ok(out)
    }

    /// `⟨⟨a, ω⟩⟩ = Σ_J ∫_J ⟨a_J, res_J ω⟩`.
    pub fn big_pair(&self, omega: &FormElt) -> Q {
        assert_eq!(self.n, omega.n());
        if self.deg != omega.deg() {
            return Q::zero();
        }
        self.comps.iter().map(|(sub, a)| a.pair(&omega.restrict(sub)).integrate()).fold(Q::zero(), |x, y| x + y)
    }

    /// A form `θ` with `⟨⟨self, θ⟩⟩ ≠ 0`.
    ///
    /// Take the lex-first largest `J` with `a_J ≠ 0`, a basis wedge `W` of
    /// `a_J`, `f_0 = ⟨a_J, ds_W⟩`, and `θ = ext(f_0 ds_W) · ∏_{j∈J} t_j`.
    /// Every other `J′` of size at most `|J|` kills the product, so the
    /// pairing is `∫_J f_0^2 ∏ t_j > 0`.
    pub fn xi_witness(&self) -> Result<FormElt> {
        let size = self.comps.keys().map(|j| j.len()).max().ok_or(Error::Zero)?;
        let (sub, a) = self.comps.iter().find(|(j, _)| j.len() == size).unwrap();
        let k = sub.len() - 1;
        let w = *a.by_wedge().keys().next().unwrap();
        let ds_w = FormElt::basis(k, w);
        let f0 = a.pair(&ds_w);
        let local = ds_w.mul_poly(&f0);
        let g = sub.iter().fold(Poly::one(self.n), |acc, &j| acc.mul(&Poly::t(self.n, j)));
        Ok(local.extend_from(self.n, sub).mul_poly(&g))
    }
}

/// `δ′` on a single `Θ_J` component.
pub fn theta_delta_prime(a: &ThetaElt) -> ThetaElt {
    let mut out = ThetaElt::zero(a.n(), a.deg() - 1);
    for (w, f) in a.by_wedge() {
        let df = FormElt::from_poly(&f, Wedge::empty()).d();
        if df.is_zero() {
            continue;
        }
        out = out.sub(&ThetaElt::basis(a.n(), w).interior(&df));
    }
    out
}

/// `δ″` on a single `Θ_J` component, as `(removed position, value on J∖j)`.
pub fn theta_delta_dblprime(a: &ThetaElt) -> Vec<(usize, ThetaElt)> {
    let n = a.n();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let parts = a.by_wedge();
    for p in 0..=n {
        let face = OrdMap::face(n, p);
        let mut acc = ThetaElt::zero(n - 1, a.deg() - 1);
        let dt = FormElt::dt(n, p);
        for (w, f) in &parts {
            let res = f.pullback(face.values());
            if res.is_zero() {
                continue;
            }
            let contracted = ThetaElt::basis(n, *w).interior(&dt);
            for ((_, cw), c) in contracted.terms() {
                if let Some(lw) = ThetaElt::lower_wedge(*cw, p) {
                    acc = acc.sub(&ThetaElt::from_poly(&res.scale(c), lw));
                }
            }
        }
        if !acc.is_zero() {
            out.push((p, acc));
        }
    }
    out
}

/// Basis keys of `Φ_{[n],m}` with weight `|ν| + m ≤ max_weight`.
pub fn local_basis(n: usize, m: usize, max_weight: u32) -> Vec<PhiKey> {
    let mut out = Vec::new();
    if m as u32 > max_weight {
        return out;
    }
    let all: Vec<usize> = (0..=n).collect();
    for sub in nonempty_subsets(&all) {
        let k = sub.len() - 1;
        if m > k {
            continue;
        }
        let positions: Vec<usize> = (1..=k).collect();
        for ws in crate::simplicial_core::subsets_of_size(&positions, m) {
            let w = Wedge::from_indices(&ws).unwrap().0;
            for mono in monomials_up_to(k, max_weight - m as u32) {
                out.push((sub.clone(), mono, w));
            }
        }
    }
    out
}

pub fn key_label(key: &PhiKey) -> String {
    format!("i{:?}(t{:?}{:?})", key.0, &key.1 .0[1..], key.2)
}

/// The finite subcomplex of `Φ_{[n],*}` of weight at most `max_weight`.
pub fn local_truncated_complex(n: usize, max_weight: u32) -> Result<(ChainComplexQ, Vec<Vec<PhiKey>>)> {
    let seeds: Vec<BTreeSet<PhiKey>> = (0..=n).map(|m| local_basis(n, m, max_weight).into_iter().collect()).collect();
    closed_subcomplex(seeds, |key| PhiElt::from_key(n, key, Q::one()).delta().to_keys(), key_label)
}

/// `dim im(H_k(G_D) -> H_k(G_{D+offset}))` for the local truncations.
pub fn local_stable_homology(n: usize, max_weight: u32, offset: u32) -> Result<Vec<usize>> {
    let (small, ks) = local_truncated_complex(n, max_weight)?;
    let (big, kb) = local_truncated_complex(n, max_weight + offset)?;
    let f = inclusion_map(&ks, &kb)?;
    (0..small.len()).map(|k| induced_image_dims(&f, &small, &big, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};

    fn point(n: usize, j: usize) -> PhiElt {
        PhiElt::inject(n, &[j], ThetaElt::scalar(0, q(1))).unwrap()
    }

    #[test]
    fn delta_of_theta_one() {
        let a = PhiElt::inject(1, &[0, 1], ThetaElt::top(1)).unwrap();
        assert_eq!(a.delta(), point(1, 0).sub(&point(1, 1)));
    }

    #[test]
    fn delta_of_t1_w1() {
        let a = PhiElt::inject(1, &[0, 1], ThetaElt::from_poly(&Poly::t(1, 1), Wedge::single(1))).unwrap();
        let expect = PhiElt::inject(1, &[0, 1], ThetaElt::scalar(1, q(-1))).unwrap().add(&point(1, 1));
        assert_eq!(a.delta(), expect);
        assert_eq!(a.delta().big_pair(&FormElt::scalar(1, q(1))), q(0));
    }

    #[test]
    fn delta_squares_to_zero_on_top() {
        for n in 0..=4 {
            let a = PhiElt::inject(n, &(0..=n).collect::<Vec<_>>(), ThetaElt::top(n)).unwrap();
            assert!(a.delta().delta().is_zero());
        }
    }

    #[test]
    fn push_examples() {
        assert_eq!(point(0, 0).push(&[1], 1).unwrap(), point(1, 1));
        let a = PhiElt::inject(1, &[0, 1], ThetaElt::from_poly(&Poly::t(1, 1), Wedge::single(1))).unwrap();
        assert!(a.push(&[0, 0], 0).unwrap().is_zero());
    }

    #[test]
    fn pair_examples() {
        assert_eq!(point(1, 0).big_pair(&FormElt::scalar(1, q(1))), q(1));
        let a = PhiElt::inject(1, &[0, 1], ThetaElt::w(1, 1)).unwrap();
        assert_eq!(a.big_pair(&FormElt::ds(1, 1)), q(1));
    }

    #[test]
    fn witness_examples() {
        let a = point(1, 0);
        let th = a.xi_witness().unwrap();
        assert_eq!(th, FormElt::from_poly(&Poly::t(1, 0), Wedge::empty()));
        assert_eq!(a.big_pair(&th), q(1));
        let b = PhiElt::inject(1, &[0, 1], ThetaElt::w(1, 1)).unwrap();
        assert_eq!(b.big_pair(&b.xi_witness().unwrap()), qr(1, 6));
        assert!(PhiElt::zero(2, 0).xi_witness().is_err());
    }

    #[test]
    fn local_homology_small() {
        for n in 0..=2 {
            let h = local_stable_homology(n, 2, 2).unwrap();
            assert_eq!(h[0], 1, "n={n}");
            assert!(h[1..].iter().all(|&x| x == 0), "n={n}: {h:?}");
        }
    }
}
