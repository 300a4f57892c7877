//! The simplex category: nondecreasing maps `[n] -> [m]`, sections of
//! surjections, pointed subsets and shuffles.
//!
//! A surjection `α: [n] -> [m]` is determined by its jump set
//! `{i > 0 : α(i) > α(i-1)}`; together with `0` this is the pointed subset
//! `A` with `α = π_A`. Shuffles are tuples of surjections whose jump sets
//! partition `[n]' = {1..n}`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrdMap {
    values: Vec<usize>,
    cod: usize,
}

impl fmt::Debug for OrdMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}->[{}]", self.values, self.cod)
    }
}

impl OrdMap {
    pub fn new(values: Vec<usize>, cod: usize) -> Result<Self> {
        if values.is_empty()
            || values.windows(2).any(|w| w[0] > w[1])
            || values.iter().any(|&v| v > cod)
        {
            return Err(Error::InvalidMap(values));
        }
        Ok(OrdMap { values, cod })
    }

    /// Surjection with codomain read off from the last value.
    pub fn surjection(values: Vec<usize>) -> Result<Self> {
        let cod = *values.last().ok_or_else(|| Error::InvalidMap(vec![]))?;
        let m = OrdMap::new(values, cod)?;
        if !m.is_surjective() {
            return Err(Error::NotSurjective(m.values));
        }
        Ok(m)
    }

    pub fn identity(n: usize) -> Self {
        OrdMap { values: (0..=n).collect(), cod: n }
    }

    pub fn constant(n: usize, cod: usize, v: usize) -> Self {
        assert!(v <= cod);
        OrdMap { values: vec![v; n + 1], cod }
    }

    /// The coface `δ_i: [n-1] -> [n]` skipping `i`.
    pub fn face(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        let values = (0..n).map(|k| if k < i { k } else { k + 1 }).collect();
        OrdMap { values, cod: n }
    }

    /// The codegeneracy `σ_i: [n+1] -> [n]` repeating `i`.
    pub fn degeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n);
        let values = (0..=n + 1).map(|k| if k <= i { k } else { k - 1 }).collect();
        OrdMap { values, cod: n }
    }

    /// Injection `[k-1] -> [n]` with the given sorted image.
    pub fn inclusion(n: usize, image: &[usize]) -> Result<Self> {
        if image.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidMap(image.to_vec()));
        }
        OrdMap::new(image.to_vec(), n)
    }

    pub fn dom(&self) -> usize {
        self.values.len() - 1
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn at(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_identity(&self) -> bool {
        self.cod == self.dom() && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.cod
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    /// `self ∘ alpha`.
    pub fn after(&self, alpha: &OrdMap) -> Result<OrdMap> {
        if alpha.cod != self.dom() {
            return Err(Error::DomainMismatch { expected: self.dom(), found: alpha.cod });
        }
        Ok(OrdMap {
            values: alpha.values.iter().map(|&v| self.values[v]).collect(),
            cod: self.cod,
        })
    }

    pub fn dagger(&self) -> Result<OrdMap> {
        if !self.is_surjective() {
            return Err(Error::NotSurjective(self.values.clone()));
        }
        let mut out = vec![0; self.cod + 1];
        for (i, &v) in self.values.iter().enumerate().rev() {
            out[v] = i;
        }
        Ok(OrdMap { values: out, cod: self.dom() })
    }

    /// Positions `i ≥ 1` with `α(i) > α(i-1)`.
    pub fn jumps(&self) -> Vec<usize> {
        (1..self.values.len()).filter(|&i| self.values[i] > self.values[i - 1]).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im = self.values.clone();
        im.dedup();
        im
    }

    /// Epi-mono factorization: `self = mono ∘ epi`.
    pub fn factor(&self) -> (OrdMap, OrdMap) {
        let image = self.image();
        let mut epi = Vec::with_capacity(self.values.len());
        let mut k = 0;
        for &v in &self.values {
            while image[k] != v {
                k += 1;
            }
            epi.push(k);
        }
        let p = image.len() - 1;
        (OrdMap { values: epi, cod: p }, OrdMap { values: image, cod: self.cod })
    }
}

/// `β ∘ α`.
pub fn compose(beta: &OrdMap, alpha: &OrdMap) -> Result<OrdMap> {
    beta.after(alpha)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedSubset {
    ambient: usize,
    elements: Vec<usize>,
}

impl PointedSubset {
    pub fn new(ambient: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::NotPointed(elements));
        }
        if elements.iter().any(|&e| e > ambient) {
            return Err(Error::InvalidMap(elements));
        }
        Ok(PointedSubset { ambient, elements })
    }

    pub fn full(n: usize) -> Self {
        PointedSubset { ambient: n, elements: (0..=n).collect() }
    }

    pub fn of_surjection(alpha: &OrdMap) -> Result<Self> {
        if !alpha.is_surjective() {
            return Err(Error::NotSurjective(alpha.values.clone()));
        }
        let mut el = vec![0];
        el.extend(alpha.jumps());
        Ok(PointedSubset { ambient: alpha.dom(), elements: el })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn sigma(&self) -> OrdMap {
        OrdMap { values: self.elements.clone(), cod: self.ambient }
    }

    pub fn pi(&self) -> OrdMap {
        let m = self.elements.len() - 1;
        let mut values = Vec::with_capacity(self.ambient + 1);
        let mut j = 0;
        for i in 0..=self.ambient {
            while j < m && self.elements[j + 1] <= i {
                j += 1;
            }
            values.push(j);
        }
        OrdMap { values, cod: m }
    }

    pub fn eps(&self) -> OrdMap {
        self.sigma().after(&self.pi()).expect("σ_A π_A composable")
    }

    pub fn meet(&self, other: &PointedSubset) -> Result<PointedSubset> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let elements = self.elements.iter().copied().filter(|e| other.elements.contains(e)).collect();
        Ok(PointedSubset { ambient: self.ambient, elements })
    }
}

/// All `k`-subsets of `items` in lexicographic order.
pub fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// All nonempty subsets of `items`, lexicographic on sorted lists.
pub fn nonempty_subsets(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1..=items.len()).flat_map(|k| subsets_of_size(items, k)).collect();
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shuffle {
    parts: Vec<OrdMap>,
}

impl Shuffle {
    pub fn new(parts: Vec<OrdMap>) -> Result<Self> {
        let n = parts.first().map(|p| p.dom()).unwrap_or(0);
        let mut seen = vec![false; n + 1];
        for p in &parts {
            if p.dom() != n {
                return Err(Error::DomainMismatch { expected: n, found: p.dom() });
            }
            if !p.is_surjective() {
                return Err(Error::NotSurjective(p.values.clone()));
            }
            for j in p.jumps() {
                if seen[j] {
                    return Err(Error::NotInjective(p.values.clone()));
                }
                seen[j] = true;
            }
        }
        if seen.iter().skip(1).any(|s| !s) {
            return Err(Error::NotInjective(vec![n]));
        }
        Ok(Shuffle { parts })
    }

    /// The shuffle with `ζ_i = π_{A_i ∪ {0}}`; blocks must partition `[n]'`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let parts = blocks
            .iter()
            .map(|b| {
                let mut el = vec![0];
                el.extend(b);
                PointedSubset::new(n, el).map(|a| a.pi())
            })
            .collect::<Result<Vec<_>>>()?;
        Shuffle::new(parts)
    }

    pub fn parts(&self) -> &[OrdMap] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &OrdMap {
        &self.parts[i]
    }

    pub fn dom(&self) -> usize {
        self.parts[0].dom()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.cod()).collect()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(|p| p.jumps()).collect()
    }
}

/// Shuffles of type `sizes`, ordered lexicographically by the first block,
/// then recursively.
pub fn enumerate_shuffles(sizes: &[usize]) -> Vec<Shuffle> {
    let n: usize = sizes.iter().sum();
    if sizes.is_empty() {
        return vec![];
    }
    let mut out = Vec::new();
    let all: Vec<usize> = (1..=n).collect();
    fn rec(rest: &[usize], sizes: &[usize], acc: &mut Vec<Vec<usize>>, n: usize, out: &mut Vec<Shuffle>) {
        if sizes.is_empty() {
            out.push(Shuffle::from_blocks(n, acc).expect("blocks partition [n]'"));
            return;
        }
        for block in subsets_of_size(rest, sizes[0]) {
            let remaining: Vec<usize> = rest.iter().copied().filter(|x| !block.contains(x)).collect();
            acc.push(block);
            rec(&remaining, &sizes[1..], acc, n, out);
            acc.pop();
        }
    }
    rec(&all, sizes, &mut Vec::new(), n, &mut out);
    out
}

/// `L(ζ,ξ;φ,ψ) = (φζ, ψζ, ξ)` for `(ζ,ξ) ∈ Σ(m+n,p)`, `(φ,ψ) ∈ Σ(m,n)`.
pub fn operad_l(sigma: &Shuffle, tau: &Shuffle) -> Result<Shuffle> {
    if sigma.parts.len() != 2 || tau.parts.len() != 2 || sigma.parts[0].cod() != tau.dom() {
        return Err(Error::SizeMismatch(format!("{:?} / {:?}", sigma.sizes(), tau.sizes())));
    }
    let (zeta, xi) = (&sigma.parts[0], &sigma.parts[1]);
    Shuffle::new(vec![tau.parts[0].after(zeta)?, tau.parts[1].after(zeta)?, xi.clone()])
}

/// `R(ζ,ξ;φ,ψ) = (ζ, φξ, ψξ)` for `(ζ,ξ) ∈ Σ(m,n+p)`, `(φ,ψ) ∈ Σ(n,p)`.
pub fn operad_r(sigma: &Shuffle, tau: &Shuffle) -> Result<Shuffle> {
    if sigma.parts.len() != 2 || tau.parts.len() != 2 || sigma.parts[1].cod() != tau.dom() {
        return Err(Error::SizeMismatch(format!("{:?} / {:?}", sigma.sizes(), tau.sizes())));
    }
    let (zeta, xi) = (&sigma.parts[0], &sigma.parts[1]);
    Shuffle::new(vec![zeta.clone(), tau.parts[0].after(xi)?, tau.parts[1].after(xi)?])
}

/// Split a two-block merge: `outer` collapses the union of `first` and `second`,
/// `inner` is the shuffle of the union.
fn split_pair(n: usize, first: &[usize], second: &[usize]) -> Result<(OrdMap, Shuffle)> {
    let mut union: Vec<usize> = first.iter().chain(second).copied().collect();
    union.sort_unstable();
    let mut el = vec![0];
    el.extend(&union);
    let outer = PointedSubset::new(n, el)?.pi();
    let rank = |x: &usize| outer.at(*x);
    let a: Vec<usize> = first.iter().map(rank).collect();
    let b: Vec<usize> = second.iter().map(rank).collect();
    let inner = Shuffle::from_blocks(union.len(), &[a, b])?;
    Ok((outer, inner))
}

pub fn operad_l_inverse(s: &Shuffle) -> Result<(Shuffle, Shuffle)> {
    if s.parts.len() != 3 {
        return Err(Error::SizeMismatch(format!("{:?}", s.sizes())));
    }
    let bl = s.blocks();
    let (zeta, tau) = split_pair(s.dom(), &bl[0], &bl[1])?;
    Ok((Shuffle::new(vec![zeta, s.parts[2].clone()])?, tau))
}

pub fn operad_r_inverse(s: &Shuffle) -> Result<(Shuffle, Shuffle)> {
    if s.parts.len() != 3 {
        return Err(Error::SizeMismatch(format!("{:?}", s.sizes())));
    }
    let bl = s.blocks();
    let (xi, tau) = split_pair(s.dom(), &bl[1], &bl[2])?;
    Ok((Shuffle::new(vec![s.parts[0].clone(), xi])?, tau))
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[usize], cod: usize) -> OrdMap {
        OrdMap::new(v.to_vec(), cod).unwrap()
    }

    #[test]
    fn dagger_examples() {
        assert_eq!(m(&[0, 0, 1], 1).dagger().unwrap(), m(&[0, 2], 2));
        assert_eq!(OrdMap::identity(3).dagger().unwrap(), OrdMap::identity(3));
        let alpha = m(&[0, 1, 1], 1);
        let beta = m(&[0, 0], 0);
        let lhs = beta.after(&alpha).unwrap().dagger().unwrap();
        let rhs = alpha.dagger().unwrap().after(&beta.dagger().unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(m(&[0, 0, 2], 2).dagger().is_err());
    }

    #[test]
    fn compose_examples() {
        let a = m(&[0, 1, 1], 1);
        assert_eq!(compose(&OrdMap::identity(1), &a).unwrap(), a);
        assert_eq!(compose(&m(&[0, 0], 0), &a).unwrap(), m(&[0, 0, 0], 0));
        assert!(compose(&a, &a).is_err());
    }

    #[test]
    fn pointed_subsets() {
        let a = PointedSubset::new(2, vec![0, 2]).unwrap();
        assert_eq!(a.pi(), m(&[0, 0, 1], 1));
        assert_eq!(a.sigma(), m(&[0, 2], 2));
        assert_eq!(a.eps(), m(&[0, 0, 2], 2));
        assert_eq!(a.pi().after(&a.sigma()).unwrap(), OrdMap::identity(1));
        let full = PointedSubset::full(3);
        assert!(full.pi().is_identity() && full.sigma().is_identity() && full.eps().is_identity());
        assert_eq!(PointedSubset::new(1, vec![0]).unwrap().eps(), m(&[0, 0], 1));
        assert!(PointedSubset::new(2, vec![1, 2]).is_err());
        let s = m(&[0, 0, 1, 1, 2], 2);
        assert_eq!(PointedSubset::of_surjection(&s).unwrap().pi(), s);
    }

    #[test]
    fn meet_is_limit_of_iterated_idempotents() {
        let a = PointedSubset::new(3, vec![0, 1, 3]).unwrap();
        let b = PointedSubset::new(3, vec![0, 2, 3]).unwrap();
        let ab = a.eps().after(&b.eps()).unwrap();
        let mut it = ab.clone();
        for _ in 0..8 {
            it = ab.after(&it).unwrap();
        }
        assert_eq!(it, a.meet(&b).unwrap().eps());
        assert_eq!(a.meet(&b).unwrap().elements(), &[0, 3]);
        let c = PointedSubset::new(2, vec![0, 1]).unwrap();
        let d = PointedSubset::new(2, vec![0, 2]).unwrap();
        assert_eq!(c.meet(&d).unwrap().elements(), &[0]);
        assert!(c.meet(&PointedSubset::full(3)).is_err());
    }

    #[test]
    fn factor_roundtrip() {
        let a = m(&[1, 1, 3, 4, 4], 5);
        let (e, i) = a.factor();
        assert!(e.is_surjective() && i.is_injective());
        assert_eq!(i.after(&e).unwrap(), a);
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(enumerate_shuffles(&[2, 1]).len(), 3);
        let s11 = enumerate_shuffles(&[1, 1]);
        assert_eq!(s11.len(), 2);
        assert_eq!(s11[0].parts(), &[m(&[0, 1, 1], 1), m(&[0, 0, 1], 1)]);
        assert_eq!(s11[1].parts(), &[m(&[0, 0, 1], 1), m(&[0, 1, 1], 1)]);
        let s30 = enumerate_shuffles(&[3, 0]);
        assert_eq!(s30.len(), 1);
        assert!(s30[0].part(0).is_identity());
        assert_eq!(s30[0].part(1), &OrdMap::constant(3, 0, 0));
    }

    #[test]
    fn operad_small() {
        let lhs: Vec<Shuffle> = enumerate_shuffles(&[2, 1])
            .iter()
            .flat_map(|s| enumerate_shuffles(&[1, 1]).into_iter().map(move |t| operad_l(s, &t).unwrap()))
            .collect();
        assert_eq!(lhs.len(), 6);
        for t in enumerate_shuffles(&[1, 1, 2]) {
            let (a, b) = operad_l_inverse(&t).unwrap();
            assert_eq!(operad_l(&a, &b).unwrap(), t);
            let (a, b) = operad_r_inverse(&t).unwrap();
            assert_eq!(operad_r(&a, &b).unwrap(), t);
        }
    }
}
