//! Polynomial functions `P_[n] = ℚ[t_0..t_n]/(1 - Σ t_i)`, forms in the
//! `ds` basis and dual exterior data in the `w` basis.
//!
//! Canonical polynomials never mention `t_0`. Raw (non-canonical)
//! polynomials may appear in intermediate steps; integration and
//! pushforward accept either. Index sets are always `[n]`; a general
//! ordered set is handled through its order isomorphism with `[n]`.
//!
//! With `s_i = Σ_{j<i} t_j` we have `dt_i = ds_{i+1} - ds_i` (`ds_0` and
//! `ds_{n+1}` vanish), and `w_i = e_{i-1} - e_i` is the dual basis.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial_q, q, Q};
use crate::simplicial_core::OrdMap;

/// Exponent vector over `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono(pub Vec<u32>);

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{:?}", self.0)
    }
}

impl Mono {
    pub fn one(n: usize) -> Self {
        Mono(vec![0; n + 1])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Mono::one(n);
        m.0[i] = 1;
        m
    }

    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `ν! = ∏ ν_i!`.
    pub fn factorial(&self) -> Q {
        self.0.iter().fold(Q::one(), |acc, &e| acc * factorial_q(e))
    }
}

/// A subset of `[n]' = {1..n}` naming a basis wedge, stored as a bitmask.
/// Ordered lexicographically as a sorted list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Wedge(pub u64);

impl fmt::Debug for Wedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{:?}", self.indices())
    }
}

impl Ord for Wedge {
    fn cmp(&self, other: &Self) -> Ordering {
        let x = self.0 ^ other.0;
        if x == 0 {
            return Ordering::Equal;
        }
        // first difference at k: the side holding k is smaller unless the other side ends there
        let k = x.trailing_zeros();
        let mine = self.0 >> k & 1 == 1;
        let (without, sign) = if mine { (other, Ordering::Less) } else { (self, Ordering::Greater) };
        if without.0 >> k == 0 {
            sign.reverse()
        } else {
            sign
        }
    }
}

impl PartialOrd for Wedge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Wedge {
    pub fn empty() -> Self {
        Wedge(0)
    }

    pub fn single(i: usize) -> Self {
        Wedge(1 << i)
    }

    /// Sorted wedge of the given indices with the sign of the sorting, or `None` on repeats.
    pub fn from_indices(idx: &[usize]) -> Option<(Wedge, bool)> {
        let mut w = Wedge::empty();
        let mut neg = false;
        for &i in idx {
            let (nw, s) = w.push(i)?;
            w = nw;
            neg ^= s;
        }
        Some((w, neg))
    }

    /// `{1..n}`.
    pub fn full(n: usize) -> Self {
        Wedge(((1u64 << n) - 1) << 1)
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..64).filter(|&i| self.0 >> i & 1 == 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn max_index(&self) -> usize {
        if self.0 == 0 {
            0
        } else {
            63 - self.0.leading_zeros() as usize
        }
    }

    fn count_above(&self, i: usize) -> u32 {
        (self.0 >> (i + 1)).count_ones()
    }

    fn count_below(&self, i: usize) -> u32 {
        (self.0 & ((1u64 << i) - 1)).count_ones()
    }

    /// `self ∧ e_i` (right multiplication).
    pub fn push(&self, i: usize) -> Option<(Wedge, bool)> {
        if self.contains(i) {
            return None;
        }
        Some((Wedge(self.0 | 1 << i), self.count_above(i) % 2 == 1))
    }

    /// `e_i ∧ self` (left multiplication).
    pub fn push_front(&self, i: usize) -> Option<(Wedge, bool)> {
        if self.contains(i) {
            return None;
        }
        Some((Wedge(self.0 | 1 << i), self.count_below(i) % 2 == 1))
    }

    pub fn mul(&self, other: &Wedge) -> Option<(Wedge, bool)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut neg = false;
        for j in other.indices() {
            neg ^= self.count_above(j) % 2 == 1;
        }
        Some((Wedge(self.0 | other.0), neg))
    }

    /// 1-based position of `i` among the elements.
    pub fn rank(&self, i: usize) -> usize {
        self.count_below(i) as usize + 1
    }

    pub fn without(&self, i: usize) -> Wedge {
        Wedge(self.0 & !(1u64 << i))
    }

    /// Image under a strictly increasing relabelling (no sign).
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Wedge {
        Wedge(self.indices().into_iter().fold(0, |acc, i| acc | 1 << f(i)))
    }
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, Q>, k: K, c: Q) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Exterior product of degree-one linear combinations, in order.
pub(crate) fn wedge_of_linear(factors: &[Vec<(usize, Q)>]) -> BTreeMap<Wedge, Q> {
    let mut cur: BTreeMap<Wedge, Q> = BTreeMap::from([(Wedge::empty(), Q::one())]);
    for lin in factors {
        let mut next = BTreeMap::new();
        for (w, c) in &cur {
            for (i, a) in lin {
                if let Some((nw, neg)) = w.push(*i) {
                    let v = c * a;
                    add_into(&mut next, nw, if neg { -v } else { v });
                }
            }
        }
        cur = next;
        if cur.is_empty() {
            break;
        }
    }
    cur
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Mono, Q>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P[{}]{:?}", self.n, self.terms)
    }
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Q) -> Self {
        let mut p = Poly::zero(n);
        add_into(&mut p.terms, Mono::one(n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        Poly::constant(n, Q::one())
    }

    /// Raw terms, normalized.
    pub fn from_raw(n: usize, raw: impl IntoIterator<Item = (Mono, Q)>) -> Self {
        Poly { n, terms: BTreeMap::new() }.plus_raw(raw)
    }

    /// Raw terms kept verbatim, for integration or pushforward of a chosen representative.
    pub fn raw(n: usize, raw: impl IntoIterator<Item = (Mono, Q)>) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in raw {
            assert_eq!(m.n(), n);
            add_into(&mut terms, m, c);
        }
        Poly { n, terms }
    }

    pub fn monomial(n: usize, exps: &[u32], c: Q) -> Self {
        Poly::from_raw(n, [(Mono(exps.to_vec()), c)])
    }

    pub fn t(n: usize, i: usize) -> Self {
        Poly::from_raw(n, [(Mono::var(n, i), Q::one())])
    }

    /// `s_i = Σ_{j<i} t_j`.
    pub fn s(n: usize, i: usize) -> Self {
        Poly::from_raw(n, (0..i).map(|j| (Mono::var(n, j), Q::one())))
    }

    fn plus_raw(mut self, raw: impl IntoIterator<Item = (Mono, Q)>) -> Self {
        let n = self.n;
        let mut powers: Vec<BTreeMap<Mono, Q>> = vec![BTreeMap::from([(Mono::one(n), Q::one())])];
        let mut lin = BTreeMap::new();
        lin.insert(Mono::one(n), Q::one());
        for i in 1..=n {
            lin.insert(Mono::var(n, i), -Q::one());
        }
        for (m, c) in raw {
            assert_eq!(m.n(), n, "monomial over the wrong index set");
            let a = m.0[0] as usize;
            if a == 0 {
                add_into(&mut self.terms, m, c);
                continue;
            }
            while powers.len() <= a {
                let next = mul_raw(powers.last().unwrap(), &lin);
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[0] = 0;
            for (pm, pc) in &powers[a] {
                add_into(&mut self.terms, pm.mul(&rest), pc * &c);
            }
        }
        self
    }

    pub fn normalized(&self) -> Self {
        Poly::from_raw(self.n, self.terms.clone())
    }

    pub fn is_canonical(&self) -> bool {
        self.terms.keys().all(|m| m.0[0] == 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Mono, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_into(&mut out.terms, m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly { n: self.n, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Product; canonical inputs give a canonical result.
    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.n, other.n);
        let raw = mul_raw(&self.terms, &other.terms);
        if self.is_canonical() && other.is_canonical() {
            Poly { n: self.n, terms: raw }
        } else {
            Poly::from_raw(self.n, raw)
        }
    }

    /// `∂/∂t_i` of the stored representative.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                add_into(&mut out.terms, m2, c * q(e as i64));
            }
        }
        out
    }

    /// `∫ t^ν = ν!/(n+|ν|)!`, termwise on the stored representative.
    pub fn integrate(&self) -> Q {
        self.terms
            .iter()
            .map(|(m, c)| c * m.factorial() / factorial_q(self.n as u32 + m.degree()))
            .fold(Q::zero(), |a, b| a + b)
    }

    /// `α^*` for a map of index sets `α: [k] -> [n]` given by its values.
    pub fn pullback(&self, map: &[usize]) -> Poly {
        let k = map.len() - 1;
        let mut fibres: Vec<Vec<usize>> = vec![vec![]; self.n + 1];
        for (i, &j) in map.iter().enumerate() {
            fibres[j].push(i);
        }
        let mut raw: BTreeMap<Mono, Q> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut acc = BTreeMap::from([(Mono::one(k), c.clone())]);
            for (j, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if fibres[j].is_empty() {
                    acc.clear();
                    break;
                }
                let lin: BTreeMap<Mono, Q> = fibres[j].iter().map(|&i| (Mono::var(k, i), Q::one())).collect();
                for _ in 0..e {
                    acc = mul_raw(&acc, &lin);
                }
            }
            for (mm, cc) in acc {
                add_into(&mut raw, mm, cc);
            }
        }
        Poly::from_raw(k, raw)
    }

    /// Restriction to the face spanned by the sorted subset `sub`.
    pub fn restrict(&self, sub: &[usize]) -> Poly {
        self.pullback(sub)
    }

    /// `σ_*(t^{[ν]}) = t^{[σ_*(ν+1)-1]}` along a surjection `σ: [n] -> [m]`.
    pub fn pushforward(&self, map: &[usize], m: usize) -> Result<Poly> {
        check_surjective(map, m)?;
        if map.len() != self.n + 1 {
            return Err(Error::DomainMismatch { expected: self.n, found: map.len() - 1 });
        }
        let mut raw = BTreeMap::new();
        for (mono, c) in &self.terms {
            let mut mu = vec![0u32; m + 1];
            for (i, &j) in map.iter().enumerate() {
                mu[j] += mono.0[i] + 1;
            }
            for x in mu.iter_mut() {
                *x -= 1;
            }
            let mu = Mono(mu);
            let coeff = c * mono.factorial() / mu.factorial();
            add_into(&mut raw, mu, coeff);
        }
        Ok(Poly::from_raw(m, raw))
    }

    /// `∇_x f = Σ x_i ∂f/∂t_i` for `Σ x_i = 0`.
    pub fn grad(&self, x: &[Q]) -> Result<Poly> {
        if x.len() != self.n + 1 {
            return Err(Error::SizeMismatch(format!("direction of length {} on [{}]", x.len(), self.n)));
        }
        if !x.iter().fold(Q::zero(), |a, b| a + b).is_zero() {
            return Err(Error::Unbalanced);
        }
        let mut out = Poly::zero(self.n);
        for (i, xi) in x.iter().enumerate() {
            out = out.add(&self.derivative(i).scale(xi));
        }
        Ok(out.normalized())
    }
}

/// Canonical monomials on `[n]` (no `t_0`) of total degree at most `max`, in lex order.
pub fn monomials_up_to(n: usize, max: u32) -> Vec<Mono> {
    fn rec(i: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if i > n {
            out.push(Mono(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, n, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(1, n, max, &mut vec![0; n + 1], &mut out);
    out.sort();
    out
}

fn mul_raw(a: &BTreeMap<Mono, Q>, b: &BTreeMap<Mono, Q>) -> BTreeMap<Mono, Q> {
    let mut out = BTreeMap::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            add_into(&mut out, ma.mul(mb), ca * cb);
        }
    }
    out
}

pub(crate) fn check_surjective(map: &[usize], m: usize) -> Result<()> {
    let mut hit = vec![false; m + 1];
    for &j in map {
        if j > m {
            return Err(Error::InvalidMap(map.to_vec()));
        }
        hit[j] = true;
    }
    if hit.iter().all(|&h| h) {
        Ok(())
    } else {
        Err(Error::NotSurjective(map.to_vec()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Ds;
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct W;

/// `P_[n] ⊗ Λ^deg` in a fixed basis: `Ds` for forms, `W` for dual data.
#[derive(Clone, PartialEq, Eq)]
pub struct WedgeElt<B> {
    n: usize,
    deg: usize,
    terms: BTreeMap<(Mono, Wedge), Q>,
    basis: PhantomData<B>,
}

pub type FormElt = WedgeElt<Ds>;
pub type ThetaElt = WedgeElt<W>;

/// Writes `c1·m1 + c2·m2 - ...`, dropping unit coefficients.
fn write_sum(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (Q, String)>) -> fmt::Result {
    let mut first = true;
    for (c, m) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        let sep = match (first, neg) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        first = false;
        let coeff = if a.is_one() && !m.is_empty() { String::new() } else { a.to_string() };
        let dot = if coeff.is_empty() || m.is_empty() { "" } else { "·" };
        write!(f, "{sep}{coeff}{dot}{m}")?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn mono_str(m: &Mono) -> String {
    let parts: Vec<String> = m
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("t{i}") } else { format!("t{i}^{e}") })
        .collect();
    parts.join("·")
}

fn wedge_str(w: &Wedge, sym: &str) -> String {
    w.indices().iter().map(|i| format!("{sym}{i}")).collect::<Vec<_>>().join("∧")
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = mono_str(self);
        write!(f, "{}", if s.is_empty() { "1" } else { &s })
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|(m, c)| (c.clone(), mono_str(m))))
    }
}

fn write_wedge_elt(f: &mut fmt::Formatter<'_>, terms: &BTreeMap<(Mono, Wedge), Q>, sym: &str) -> fmt::Result {
    write_sum(
        f,
        terms.iter().map(|((m, w), c)| {
            let parts: Vec<String> = [mono_str(m), wedge_str(w, sym)].into_iter().filter(|s| !s.is_empty()).collect();
            (c.clone(), parts.join("·"))
        }),
    )
}

impl fmt::Display for FormElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_wedge_elt(f, &self.terms, "ds")
    }
}

impl fmt::Display for ThetaElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_wedge_elt(f, &self.terms, "w")
    }
}

impl<B> fmt::Debug for WedgeElt<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]^{}{:?}", self.n, self.deg, self.terms)
    }
}

impl<B: Clone> WedgeElt<B> {
    pub fn zero(n: usize, deg: usize) -> Self {
        WedgeElt { n, deg, terms: BTreeMap::new(), basis: PhantomData }
    }

    /// `f · b_W` for a basis wedge `W`.
    pub fn from_poly(f: &Poly, w: Wedge) -> Self {
        let mut e = WedgeElt::zero(f.n, w.len());
        assert!(w.max_index() <= f.n, "wedge index out of range");
        for (m, c) in &f.terms {
            e.add_term(m.clone(), w, c.clone());
        }
        e
    }

    pub fn basis(n: usize, w: Wedge) -> Self {
        WedgeElt::from_poly(&Poly::one(n), w)
    }

    pub fn scalar(n: usize, c: Q) -> Self {
        WedgeElt::from_poly(&Poly::constant(n, c), Wedge::empty())
    }

    pub fn add_term(&mut self, m: Mono, w: Wedge, c: Q) {
        debug_assert_eq!(w.len(), self.deg);
        debug_assert_eq!(m.0[0], 0, "non-canonical monomial");
        add_into(&mut self.terms, (m, w), c);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn deg(&self) -> usize {
        self.deg
    }

    pub fn terms(&self) -> &BTreeMap<(Mono, Wedge), Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|ν| + deg` among the terms.
    pub fn weight(&self) -> u32 {
        self.terms.keys().map(|(m, _)| m.degree()).max().unwrap_or(0) + self.deg as u32
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.deg), (other.n, other.deg), "adding mismatched elements");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_into(&mut out.terms, k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = WedgeElt::zero(self.n, self.deg);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect();
        }
        out
    }

    /// Coefficient polynomial of each basis wedge.
    pub fn by_wedge(&self) -> BTreeMap<Wedge, Poly> {
        let mut out: BTreeMap<Wedge, Poly> = BTreeMap::new();
        for ((m, w), c) in &self.terms {
            let p = out.entry(*w).or_insert_with(|| Poly::zero(self.n));
            add_into(&mut p.terms, m.clone(), c.clone());
        }
        out
    }

    fn from_wedge_polys(n: usize, deg: usize, parts: impl IntoIterator<Item = (Wedge, Poly)>) -> Self {
        let mut out = WedgeElt::zero(n, deg);
        for (w, p) in parts {
            for (m, c) in p.terms {
                out.add_term(m, w, c);
            }
        }
        out
    }

    pub fn mul_poly(&self, f: &Poly) -> Self {
        let parts: Vec<(Wedge, Poly)> = self.by_wedge().into_iter().map(|(w, p)| (w, p.mul(f))).collect();
        WedgeElt::from_wedge_polys(self.n, self.deg, parts)
    }

    /// Exterior product (with polynomial coefficients multiplied).
    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = WedgeElt::zero(self.n, self.deg + other.deg);
        for (w1, p1) in self.by_wedge() {
            for (w2, p2) in other.by_wedge() {
                if let Some((w, neg)) = w1.mul(&w2) {
                    let p = p1.mul(&p2);
                    let p = if neg { p.scale(&-Q::one()) } else { p };
                    for (m, c) in p.terms {
                        out.add_term(m, w, c);
                    }
                }
            }
        }
        out
    }

    fn map_wedges(&self, n: usize, deg: usize, mut poly: impl FnMut(&Poly) -> Poly, lin: impl Fn(usize) -> Vec<(usize, Q)>) -> Self {
        let mut out = WedgeElt::zero(n, deg);
        for (w, p) in self.by_wedge() {
            let factors: Vec<Vec<(usize, Q)>> = w.indices().into_iter().map(&lin).collect();
            let image = wedge_of_linear(&factors);
            if image.is_empty() {
                continue;
            }
            let fp = poly(&p);
            for (nw, c) in image {
                for (m, x) in &fp.terms {
                    out.add_term(m.clone(), nw, x * &c);
                }
            }
        }
        out
    }
}

impl FormElt {
    pub fn ds(n: usize, i: usize) -> FormElt {
        assert!((1..=n).contains(&i));
        FormElt::basis(n, Wedge::single(i))
    }

    /// `dt_i = ds_{i+1} - ds_i`.
    pub fn dt(n: usize, i: usize) -> FormElt {
        let mut out = FormElt::zero(n, 1);
        for (k, c) in dt_in_ds(n, i) {
            out.add_term(Mono::one(n), Wedge::single(k), c);
        }
        out
    }

    /// de Rham differential.
    pub fn d(&self) -> FormElt {
        let mut out = FormElt::zero(self.n, self.deg + 1);
        for ((m, w), c) in &self.terms {
            for i in 1..=self.n {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                let coeff = c * q(e as i64);
                for (k, s) in dt_in_ds(self.n, i) {
                    if let Some((nw, neg)) = w.push_front(k) {
                        let v = &coeff * s;
                        out.add_term(m2.clone(), nw, if neg { -v } else { v });
                    }
                }
            }
        }
        out
    }

    /// `α^*` along `α: [k] -> [n]` (any map of index sets).
    pub fn pullback(&self, map: &[usize]) -> FormElt {
        let k = map.len() - 1;
        if self.deg > k {
            return FormElt::zero(k, self.deg);
        }
        let lin = |j: usize| -> Vec<(usize, Q)> {
            (1..=k)
                .filter_map(|r| {
                    let c = (map[r - 1] < j) as i64 - (map[r] < j) as i64;
                    (c != 0).then(|| (r, q(c)))
                })
                .collect()
        };
        self.map_wedges(k, self.deg, |p| p.pullback(map), lin)
    }

    pub fn restrict(&self, sub: &[usize]) -> FormElt {
        self.pullback(sub)
    }

    /// A form on `[n]` restricting to `self` on the face `sub`: substitute
    /// `t'_r -> t_{sub[r]}` in the canonical representative.
    pub fn extend_from(&self, n: usize, sub: &[usize]) -> FormElt {
        assert_eq!(sub.len(), self.n + 1);
        let poly = |p: &Poly| {
            Poly::from_raw(
                n,
                p.terms.iter().map(|(m, c)| {
                    let mut e = vec![0; n + 1];
                    for (r, &x) in m.0.iter().enumerate() {
                        e[sub[r]] += x;
                    }
                    (Mono(e), c.clone())
                }),
            )
        };
        // ds'_k = Σ_{r<k} dt_{sub[r]}
        let lin = |k: usize| -> Vec<(usize, Q)> {
            let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
            for &i in &sub[..k] {
                for (j, c) in dt_in_ds(n, i) {
                    add_into(&mut acc, j, c);
                }
            }
            acc.into_iter().collect()
        };
        self.map_wedges(n, self.deg, poly, lin)
    }
}

/// `dt_i` in the `ds` basis of `[n]`.
pub fn dt_in_ds(n: usize, i: usize) -> Vec<(usize, Q)> {
    let mut v = Vec::new();
    if i >= 1 {
        v.push((i, -Q::one()));
    }
    if i < n {
        v.push((i + 1, Q::one()));
    }
    v
}

/// `e_a - e_b` in the `w` basis.
fn e_diff(a: usize, b: usize) -> Vec<(usize, Q)> {
    match a.cmp(&b) {
        Ordering::Less => (a + 1..=b).map(|k| (k, Q::one())).collect(),
        Ordering::Greater => (b + 1..=a).map(|k| (k, -Q::one())).collect(),
        Ordering::Equal => vec![],
    }
}

impl ThetaElt {
    pub fn w(n: usize, i: usize) -> ThetaElt {
        assert!((1..=n).contains(&i));
        ThetaElt::basis(n, Wedge::single(i))
    }

    /// `θ_[n] = (e_1 - e_0) ∧ … ∧ (e_n - e_{n-1}) = (-1)^n w_1 ∧ … ∧ w_n`.
    pub fn top(n: usize) -> ThetaElt {
        let t = ThetaElt::basis(n, Wedge::full(n));
        if n % 2 == 1 {
            t.neg()
        } else {
            t
        }
    }

    /// `u ⌟ self` for a 1-form `u`; `ds_k ⌟ w_J = (-1)^r w_{J∖k}` with `r` the position of `k`.
    pub fn interior(&self, u: &FormElt) -> ThetaElt {
        assert_eq!(u.deg, 1);
        assert_eq!(u.n, self.n);
        if self.deg == 0 {
            return ThetaElt::zero(self.n, 0);
        }
        let mut out = ThetaElt::zero(self.n, self.deg - 1);
        for (uw, up) in u.by_wedge() {
            let k = uw.indices()[0];
            for (w, p) in self.by_wedge() {
                if !w.contains(k) {
                    continue;
                }
                let prod = up.mul(&p);
                let neg = w.rank(k) % 2 == 1;
                for (m, c) in prod.terms {
                    out.add_term(m, w.without(k), if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// `⟨self, ω⟩ ∈ P_[n]`; zero on a degree mismatch.
    pub fn pair(&self, omega: &FormElt) -> Poly {
        assert_eq!(self.n, omega.n);
        if self.deg != omega.deg {
            return Poly::zero(self.n);
        }
        let neg = (self.deg * self.deg.saturating_sub(1) / 2) % 2 == 1;
        let theirs = omega.by_wedge();
        let mut out = Poly::zero(self.n);
        for (w, p) in self.by_wedge() {
            if let Some(o) = theirs.get(&w) {
                out = out.add(&p.mul(o));
            }
        }
        if neg {
            out.scale(&-Q::one())
        } else {
            out
        }
    }

    /// `σ_*` along a surjection `σ: [n] -> [m]` (any map of index sets).
    pub fn pushforward(&self, map: &[usize], m: usize) -> Result<ThetaElt> {
        check_surjective(map, m)?;
        if map.len() != self.n + 1 {
            return Err(Error::DomainMismatch { expected: self.n, found: map.len() - 1 });
        }
        let mut err = None;
        let out = self.map_wedges(
            m,
            self.deg,
            |p| match p.pushforward(map, m) {
                Ok(x) => x,
                Err(e) => {
                    err = Some(e);
                    Poly::zero(m)
                }
            },
            |r| e_diff(map[r - 1], map[r]),
        );
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    /// `σ•` for a nondecreasing surjection `σ: [n] -> [m]`, `self` over `[m]`:
    /// `σ^*` on polynomials and `w_j -> w_{σ†(j)}`.
    pub fn bullet(&self, sigma: &OrdMap) -> Result<ThetaElt> {
        if sigma.cod() != self.n {
            return Err(Error::DomainMismatch { expected: self.n, found: sigma.cod() });
        }
        let dag = sigma.dagger()?;
        let parts: Vec<(Wedge, Poly)> = self
            .by_wedge()
            .into_iter()
            .map(|(w, p)| (w.relabel(|j| dag.at(j)), p.pullback(sigma.values())))
            .collect();
        Ok(ThetaElt::from_wedge_polys(sigma.dom(), self.deg, parts))
    }

    /// The left inverse of `(δ_j)_*` on wedges: `Λ(W^∨_[n]) -> Λ(W^∨_[n-1])`,
    /// applied to the wedge part while the polynomial part is replaced by `poly`.
    pub fn lower_wedge(w: Wedge, j: usize) -> Option<Wedge> {
        let kill = j.max(1);
        if w.contains(kill) {
            return None;
        }
        Some(w.relabel(|r| if r < kill { r } else { r - 1 }))
    }

    /// `(δ_j)_*` on constant wedge data, `[n-1] -> [n]`.
    pub fn raise_wedges(&self, j: usize) -> ThetaElt {
        assert!(self.terms.keys().all(|(m, _)| m.degree() == 0), "raise acts on constant data");
        let n = self.n + 1;
        let map: Vec<usize> = (0..n).map(|k| if k < j { k } else { k + 1 }).collect();
        self.map_wedges(n, self.deg, |p| Poly::constant(n, p.terms.get(&Mono::one(p.n)).cloned().unwrap_or_default()), |r| {
            e_diff(map[r - 1], map[r])
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    #[test]
    fn display() {
        let f = Poly::t(2, 1).mul(&Poly::t(2, 1)).scale(&q(3)).sub(&Poly::t(2, 2));
        assert_eq!(f.to_string(), "-t2 + 3·t1^2");
        assert_eq!(ThetaElt::top(2).to_string(), "w1∧w2");
        assert_eq!(FormElt::ds(1, 1).scale(&crate::rational::qr(-1, 2)).to_string(), "-1/2·ds1");
        assert_eq!(Poly::zero(1).to_string(), "0");
        assert_eq!(Poly::one(1).to_string(), "1");
    }

    #[test]
    fn normalize_examples() {
        let sum = Poly::t(1, 0).add(&Poly::t(1, 1));
        assert_eq!(sum, Poly::one(1));
        assert_eq!(Poly::t(1, 0), Poly::one(1).sub(&Poly::t(1, 1)));
        let s = Poly::t(2, 0).add(&Poly::t(2, 1)).add(&Poly::t(2, 2));
        assert_eq!(s.mul(&s), Poly::one(2));
        let raw = Poly::raw(2, [(Mono(vec![2, 1, 0]), q(3))]);
        assert_eq!(raw.normalized().normalized(), raw.normalized());
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(Poly::one(2).integrate(), qr(1, 2));
        assert_eq!(Poly::raw(1, [(Mono(vec![1, 1]), q(1))]).integrate(), qr(1, 6));
        assert_eq!(Poly::s(2, 1).mul(&Poly::s(2, 2)).integrate(), qr(1, 8));
        let raw = Poly::raw(2, [(Mono(vec![2, 1, 0]), q(3))]);
        assert_eq!(raw.integrate(), raw.normalized().integrate());
    }

    #[test]
    fn pullback_examples() {
        let a = [0, 1, 1];
        assert_eq!(Poly::t(1, 1).pullback(&a), Poly::t(2, 1).add(&Poly::t(2, 2)));
        let f = Poly::monomial(2, &[0, 2, 1], q(5));
        assert_eq!(f.pullback(&[0, 1, 2]), f);
        let sigma = OrdMap::new(vec![0, 1, 1], 1).unwrap();
        let dag = sigma.dagger().unwrap();
        assert_eq!(FormElt::ds(1, 1).pullback(sigma.values()), FormElt::ds(2, dag.at(1)));
    }

    #[test]
    fn pushforward_examples() {
        let f = Poly::monomial(2, &[0, 1, 1], q(1));
        assert_eq!(f.pushforward(&[0, 1, 2], 2).unwrap(), f);
        let g = Poly::raw(1, [(Mono(vec![1, 1]), q(1))]);
        assert_eq!(g.pushforward(&[0, 0], 0).unwrap(), Poly::constant(0, qr(1, 6)));
        assert_eq!(Poly::one(2).pushforward(&[0, 1, 1], 1).unwrap(), Poly::t(1, 1));
        assert!(Poly::one(2).pushforward(&[0, 0, 0], 1).is_err());
        assert!(ThetaElt::w(1, 1).pushforward(&[0, 0], 0).unwrap().is_zero());
    }

    #[test]
    fn pairing_and_interior() {
        assert_eq!(ThetaElt::w(1, 1).pair(&FormElt::ds(1, 1)), Poly::one(1));
        let w12 = ThetaElt::basis(2, Wedge::full(2));
        let ds12 = FormElt::ds(2, 1).wedge(&FormElt::ds(2, 2));
        assert_eq!(w12.pair(&ds12), Poly::constant(2, q(-1)));
        assert!(w12.pair(&FormElt::ds(2, 1)).is_zero());
        assert_eq!(ThetaElt::top(1).interior(&FormElt::dt(1, 0)), ThetaElt::scalar(1, q(1)));
        assert_eq!(w12.interior(&FormElt::dt(2, 1)), ThetaElt::w(2, 1).add(&ThetaElt::w(2, 2)));
        let u = FormElt::dt(2, 2);
        assert!(w12.interior(&u).interior(&u).is_zero());
    }

    #[test]
    fn theta_tops() {
        assert_eq!(ThetaElt::top(0), ThetaElt::scalar(0, q(1)));
        assert_eq!(ThetaElt::top(1), ThetaElt::w(1, 1).neg());
        assert_eq!(ThetaElt::top(2), ThetaElt::basis(2, Wedge::full(2)));
    }

    #[test]
    fn grad_and_d() {
        assert!(Poly::one(2).grad(&[q(1), q(-1), q(0)]).unwrap().is_zero());
        assert_eq!(Poly::t(1, 1).grad(&[q(-1), q(1)]).unwrap(), Poly::one(1));
        assert!(Poly::t(1, 1).grad(&[q(1), q(1)]).is_err());
        let s1 = FormElt::from_poly(&Poly::s(2, 1), Wedge::empty());
        assert_eq!(s1.d(), FormElt::ds(2, 1));
        let x = FormElt::from_poly(&Poly::s(2, 1), Wedge::single(2));
        assert_eq!(x.d(), FormElt::ds(2, 1).wedge(&FormElt::ds(2, 2)));
    }

    #[test]
    fn bullet_examples() {
        let sigma = OrdMap::new(vec![0, 1, 1], 1).unwrap();
        assert_eq!(ThetaElt::w(1, 1).bullet(&sigma).unwrap(), ThetaElt::w(2, 1));
        let x = ThetaElt::w(2, 2);
        assert_eq!(x.bullet(&OrdMap::identity(2)).unwrap(), x);
    }

    #[test]
    fn wedge_order_is_lex() {
        let a = Wedge::from_indices(&[1, 3]).unwrap().0;
        let b = Wedge::from_indices(&[2]).unwrap().0;
        let c = Wedge::from_indices(&[1]).unwrap().0;
        let d = Wedge::from_indices(&[1, 2]).unwrap().0;
        let mut v = vec![b, a, c, d];
        v.sort();
        assert_eq!(v, vec![c, d, a, b]);
    }
}
