//! The colimit model `U_*(X) = colim_A Hom(H̃_*(S^A), Ñ_*(S^A ∧ X_+))`.
//!
//! A smash simplex of `S^A ∧ X_+` away from the basepoint is a pair `(α, x)`
//! with every `α_a : [k] -> [1]` surjective, so `α` is recorded by its jump
//! positions `f(a) = α_a†(1) ∈ {1..k}`. An element of `U_d(A, X)` is stored
//! as `u_A^{-1} v` with `u_A = a_1 ∧ … ∧ a_m` (labels sorted) and `v` a
//! normalized `(d+m)`-chain. The differential is `(-1)^{m+1} ∂`, which makes
//! `φ^#` a chain map with no further signs.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monoidal::shuffle_sign;
use crate::phi_global::PhiChain;
use crate::polyforms::{FormElt, Mono, Poly, ThetaElt, Wedge};
use crate::rational::{perm_sign, sign, Q};
use crate::simplicial_core::{enumerate_shuffles, OrdMap, Shuffle};
use crate::simplicial_sets::{point, DegSimplex, ProductSSet, SSet, SimplexRef};

pub type Label = u32;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmashKey {
    /// Jump position of `α_a`, aligned with the sorted labels.
    pub jumps: Vec<usize>,
    pub x: DegSimplex,
}

impl SmashKey {
    pub fn dim(&self) -> usize {
        self.x.dim()
    }

    /// Every position is a jump of some `α_a` or of the degeneracy of `x`.
    pub fn is_nondegenerate(&self) -> bool {
        let s = self.x.surj.values();
        (1..=self.dim()).all(|r| self.jumps.contains(&r) || s[r] != s[r - 1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UElt {
    labels: Vec<Label>,
    deg: usize,
    terms: BTreeMap<SmashKey, Q>,
}

fn check_labels(labels: &[Label]) -> Result<()> {
    if labels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Colimit(format!("labels {labels:?} are not strictly increasing")));
    }
    Ok(())
}

fn pm(neg: bool) -> Q {
    sign(neg)
}

impl UElt {
    pub fn zero(labels: Vec<Label>, deg: usize) -> Result<Self> {
        check_labels(&labels)?;
        Ok(UElt { labels, deg, terms: BTreeMap::new() })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn m(&self) -> usize {
        self.labels.len()
    }

    pub fn deg(&self) -> usize {
        self.deg
    }

    pub fn terms(&self) -> &BTreeMap<SmashKey, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c (α, x)`. Degenerate smash simplices are zero and dropped.
    pub fn add_term(&mut self, key: SmashKey, c: Q) -> Result<()> {
        let k = key.dim();
        if key.jumps.len() != self.m() || k != self.deg + self.m() {
            return Err(Error::Colimit(format!(
                "simplex of dimension {k} with {} jumps in U_{}({:?})",
                key.jumps.len(),
                self.deg,
                self.labels
            )));
        }
        if key.jumps.iter().any(|&j| j == 0 || j > k) {
            return Err(Error::Colimit(format!("jumps {:?} outside 1..={k}", key.jumps)));
        }
        if c.is_zero() || !key.is_nondegenerate() {
            return Ok(());
        }
        let e = self.terms.entry(key).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    fn same_shape(&self, other: &UElt) -> Result<()> {
        if self.labels != other.labels || self.deg != other.deg {
            return Err(Error::Colimit(format!(
                "U_{}({:?}) vs U_{}({:?})",
                self.deg, self.labels, other.deg, other.labels
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &UElt) -> Result<UElt> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &UElt) -> Result<UElt> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> UElt {
        let mut out = UElt { labels: self.labels.clone(), deg: self.deg, terms: BTreeMap::new() };
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        out
    }

    /// `d(u^{-1}v) = (-1)^{m+1} u^{-1} ∂v`, dropping basepoint and degenerate faces.
    pub fn boundary(&self, x: &SSet) -> Result<UElt> {
        if self.deg == 0 {
            return Err(Error::Colimit("boundary of a degree 0 element".into()));
        }
        let mut out = UElt::zero(self.labels.clone(), self.deg - 1)?;
        let m = self.m();
        for (key, c) in &self.terms {
            let k = key.dim();
            'faces: for i in 0..=k {
                let mut jumps = Vec::with_capacity(m);
                for &j in &key.jumps {
                    if (j == 1 && i == 0) || (j == k && i == k) {
                        continue 'faces;
                    }
                    jumps.push(if j <= i { j } else { j - 1 });
                }
                let face = x.face_of(&key.x, i)?;
                out.add_term(SmashKey { jumps, x: face }, c * pm((i + m + 1) % 2 == 1))?;
            }
        }
        Ok(out)
    }

    /// The adjoint `φ^# : U_*(A, X) -> Φ_*(X)`.
    pub fn phi_sharp(&self, x: &SSet) -> Result<PhiChain> {
        let mut out = PhiChain::zero(self.deg);
        for (key, c) in &self.terms {
            if let Some((s, rest)) = z_data(&key.jumps, key.dim()) {
                let theta = ThetaElt::basis(key.dim(), rest).scale(&(c * s));
                out = out.add(&PhiChain::from_theta(x, &key.x, &theta)?);
            }
        }
        Ok(out)
    }
}

/// For injective jumps `f`: the sign `ε(α)·sgn(f)` and the complementary
/// wedge `w_{J'}`, so that `z(α) = ε sgn(f) u_A ⊗ w_{J'}`.
pub fn z_data(jumps: &[usize], k: usize) -> Option<(Q, Wedge)> {
    let set: BTreeSet<usize> = jumps.iter().copied().collect();
    if set.len() != jumps.len() {
        return None;
    }
    let rest: Vec<usize> = (1..=k).filter(|r| !set.contains(r)).collect();
    let mut seq: Vec<usize> = set.iter().copied().collect();
    seq.extend(&rest);
    let (_, merge) = Wedge::from_indices(&seq)?;
    let (w, _) = Wedge::from_indices(&rest)?;
    Some((pm((k % 2 == 1) ^ merge ^ perm_sign(jumps)), w))
}

/// `z(α)` as the coefficient of `u_A`, for `α_a : [d] -> [1]` arbitrary.
pub fn z_of(alphas: &[OrdMap], d: usize) -> Result<Option<ThetaElt>> {
    let mut jumps = Vec::with_capacity(alphas.len());
    for a in alphas {
        if a.dom() != d || a.cod() != 1 {
            return Err(Error::DomainMismatch { expected: d, found: a.dom() });
        }
        if !a.is_surjective() {
            return Ok(None);
        }
        jumps.push(a.dagger()?.at(1));
    }
    Ok(z_data(&jumps, d).map(|(s, w)| ThetaElt::basis(d, w).scale(&s)))
}

fn degenerate_point(k: usize) -> DegSimplex {
    DegSimplex { surj: OrdMap::constant(k, 0, 0), base: SimplexRef { dim: 0, idx: 0 } }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    crate::simplicial_sets::permutations(k)
}

/// `η_A ∈ U_0(A, *)`, normalized by `φ^#(η_A) = * ⊗ 1`:
/// `(-1)^m Σ_f sgn(f) (α_f, *)` over bijections `f : A -> {1..m}`.
pub fn eta(labels: &[Label]) -> Result<UElt> {
    let m = labels.len();
    let mut out = UElt::zero(labels.to_vec(), 0)?;
    for p in permutations(m) {
        let jumps: Vec<usize> = p.iter().map(|v| v + 1).collect();
        let c = pm((m % 2 == 1) ^ perm_sign(&p));
        out.add_term(SmashKey { jumps, x: degenerate_point(m) }, c)?;
    }
    Ok(out)
}

fn merged_labels(a: &[Label], b: &[Label]) -> Result<(Vec<Label>, bool)> {
    let mut all: Vec<Label> = a.iter().chain(b).copied().collect();
    let seq: Vec<usize> = all.iter().map(|&l| l as usize).collect();
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Colimit(format!("label sets {a:?} and {b:?} overlap")));
    }
    Ok((all, perm_sign(&seq)))
}

/// Shuffle product of smash chains followed by the interchange of factors.
fn smash_product(
    u: &UElt,
    x: &SSet,
    v: &UElt,
    y: &SSet,
    combine: impl Fn(&DegSimplex, &DegSimplex) -> Result<DegSimplex>,
) -> Result<UElt> {
    let (labels, merge) = merged_labels(&u.labels, &v.labels)?;
    let pos: BTreeMap<Label, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let global = pm(merge ^ ((u.deg * v.m()) % 2 == 1));
    let mut out = UElt::zero(labels.clone(), u.deg + v.deg)?;
    let mut cache: BTreeMap<(usize, usize), Vec<ShuffleData>> = BTreeMap::new();
    for (ka, ca) in &u.terms {
        for (kb, cb) in &v.terms {
            let (k1, k2) = (ka.dim(), kb.dim());
            if let std::collections::btree_map::Entry::Vacant(e) = cache.entry((k1, k2)) {
                let mut list = vec![];
                for sh in enumerate_shuffles(&[k1, k2]) {
                    let s = shuffle_sign(&sh)?;
                    let (zd, xd) = (sh.part(0).dagger()?, sh.part(1).dagger()?);
                    list.push((sh, s, zd, xd));
                }
                e.insert(list);
            }
            for (sh, s, zd, xd) in &cache[&(k1, k2)] {
                let mut jumps = vec![0; labels.len()];
                for (l, &j) in u.labels.iter().zip(&ka.jumps) {
                    jumps[pos[l]] = zd.at(j);
                }
                for (l, &j) in v.labels.iter().zip(&kb.jumps) {
                    jumps[pos[l]] = xd.at(j);
                }
                let xa = x.apply_map(sh.part(0), &ka.x)?;
                let yb = y.apply_map(sh.part(1), &kb.x)?;
                let z = combine(&xa, &yb)?;
                out.add_term(SmashKey { jumps, x: z }, ca * cb * s * &global)?;
            }
        }
    }
    Ok(out)
}

/// `ν : U(A, X) ⊗ U(B, Y) -> U(A ⊔ B, X × Y)`, with `u_A ∧ u_B` identified
/// with the sorted generator and the sign `(-1)^{|u| |B|}`.
pub fn nu(u: &UElt, x: &SSet, v: &UElt, y: &SSet, prod: &ProductSSet) -> Result<UElt> {
    smash_product(u, x, v, y, |a, b| prod.pair(a, b))
}

/// `λ_*` for an injection `λ` of label sets: a relabelling along the
/// bijection onto the image, then `ν(- ⊗ η_Z)` for the complement `Z`.
pub fn lambda_star(lam: &BTreeMap<Label, Label>, target: &[Label], u: &UElt, x: &SSet) -> Result<UElt> {
    check_labels(target)?;
    let mut images = Vec::with_capacity(u.m());
    for l in &u.labels {
        let t = *lam.get(l).ok_or_else(|| Error::Colimit(format!("λ undefined on label {l}")))?;
        if !target.contains(&t) {
            return Err(Error::Colimit(format!("λ({l}) = {t} outside the target")));
        }
        images.push(t);
    }
    let seq: Vec<usize> = images.iter().map(|&l| l as usize).collect();
    let mut sorted = images.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Colimit(format!("λ is not injective on {:?}", u.labels)));
    }
    let order: Vec<usize> = sorted.iter().map(|t| images.iter().position(|s| s == t).unwrap()).collect();
    let mut moved = UElt::zero(sorted.clone(), u.deg)?;
    let s = pm(perm_sign(&seq));
    for (key, c) in &u.terms {
        let jumps = order.iter().map(|&i| key.jumps[i]).collect();
        moved.add_term(SmashKey { jumps, x: key.x.clone() }, c * &s)?;
    }
    let rest: Vec<Label> = target.iter().copied().filter(|t| !sorted.contains(t)).collect();
    if rest.is_empty() {
        return Ok(moved);
    }
    smash_product(&moved, x, &eta(&rest)?, &point(), |a, _| Ok(a.clone()))
}

/// A shuffle with its sign and the sections of its two parts.
type ShuffleData = (Shuffle, Q, OrdMap, OrdMap);

/// The surjection `[n + |ν|] -> [n]` with fibres of sizes `ν_i + 1`.
pub fn block_surjection(nu: &[u32]) -> Result<OrdMap> {
    let values = nu.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize + 1)).collect();
    OrdMap::surjection(values)
}

/// `ζ_1(x, ν, J) ∈ U_{|J|}(A, X)` with `A = [d]' ∖ σ†(J)`, `α_a` jumping at `a`.
pub fn zeta_1(x: SimplexRef, nu: &[u32], j: &[usize]) -> Result<UElt> {
    if nu.len() != x.dim + 1 {
        return Err(Error::SizeMismatch(format!("exponent of length {} on a {}-simplex", nu.len(), x.dim)));
    }
    if j.iter().any(|&i| i == 0 || i > x.dim) {
        return Err(Error::Colimit(format!("wedge indices {j:?} outside 1..={}", x.dim)));
    }
    let sigma = block_surjection(nu)?;
    let d = sigma.dom();
    let dag = sigma.dagger()?;
    let rest: BTreeSet<usize> = j.iter().map(|&i| dag.at(i)).collect();
    let a: Vec<usize> = (1..=d).filter(|r| !rest.contains(r)).collect();
    let labels: Vec<Label> = a.iter().map(|&r| r as Label).collect();
    let (eps, _) = z_data(&a, d).expect("distinct jumps");
    let mut out = UElt::zero(labels, d - a.len())?;
    out.add_term(SmashKey { jumps: a, x: DegSimplex { surj: sigma, base: x } }, eps)?;
    Ok(out)
}

/// `x ⊗ t^{[ν]} w_J` in normal form, computed directly from the symbol.
pub fn zeta_symbol_phi(sset: &SSet, x: SimplexRef, nu: &[u32], j: &[usize], c: &Q) -> Result<PhiChain> {
    let n = x.dim;
    let mono = Mono(nu.to_vec());
    let coeff = c / mono.factorial();
    let (w, neg) = Wedge::from_indices(j).ok_or_else(|| Error::Colimit(format!("repeated index in {j:?}")))?;
    let f = Poly::from_raw(n, [(mono, coeff * pm(neg))]);
    PhiChain::from_theta(sset, &DegSimplex::nondeg(x), &ThetaElt::from_poly(&f, w))
}

/// A class in the colimit, kept as a sum of representatives at various `A`.
#[derive(Clone, Debug, Default)]
pub struct StabClass {
    pub reps: Vec<UElt>,
}

impl StabClass {
    pub fn of(u: UElt) -> Self {
        StabClass { reps: vec![u] }
    }

    pub fn add(&self, other: &StabClass) -> StabClass {
        StabClass { reps: self.reps.iter().chain(&other.reps).cloned().collect() }
    }

    /// `ψ`, induced by the compatible family `φ^#`.
    pub fn psi(&self, x: &SSet, deg: usize) -> Result<PhiChain> {
        let mut out = PhiChain::zero(deg);
        for r in &self.reps {
            if r.deg != deg {
                return Err(Error::Colimit(format!("representative of degree {} in a degree {deg} class", r.deg)));
            }
            out = out.add(&r.phi_sharp(x)?);
        }
        Ok(out)
    }

    /// Equality in the colimit, decided through `ψ`.
    pub fn eq_in(&self, other: &StabClass, x: &SSet, deg: usize) -> Result<bool> {
        Ok(self.psi(x, deg)? == other.psi(x, deg)?)
    }
}

/// `ζ'(x ⊗ t^ν w_J) = ν! ζ(x, ν, J)`.
pub fn zeta_prime(c: &PhiChain) -> Result<StabClass> {
    let mut reps = vec![];
    for ((x, mono, w), q) in c.terms() {
        let coeff = q * mono.factorial();
        reps.push(zeta_1(*x, &mono.0, &w.indices())?.scale(&coeff));
    }
    Ok(StabClass { reps })
}

/// `coeff · ζ(x, ν, J)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub coeff: Q,
    pub x: SimplexRef,
    pub nu: Vec<u32>,
    pub j: Vec<usize>,
}

/// Writes `u` as a sum of transported `ζ_1`'s. Every step is checked on
/// chains: a term with injective jumps `f` is carried by the bijection
/// `A -> f(A)` onto a multiple of `ζ_1(y, ν, J)`, and a term with
/// `f(a) = f(b)` is negated by the transposition of `a` and `b`.
pub fn decompose(u: &UElt, x: &SSet) -> Result<Vec<Piece>> {
    let mut out = vec![];
    for (key, c) in &u.terms {
        let mut single = UElt::zero(u.labels.clone(), u.deg)?;
        single.add_term(key.clone(), c.clone())?;
        let clash = (0..u.m()).find_map(|i| (i + 1..u.m()).find(|&k| key.jumps[i] == key.jumps[k]).map(|k| (i, k)));
        if let Some((i, k)) = clash {
            let mut tau: BTreeMap<Label, Label> = u.labels.iter().map(|&l| (l, l)).collect();
            tau.insert(u.labels[i], u.labels[k]);
            tau.insert(u.labels[k], u.labels[i]);
            let moved = lambda_star(&tau, &u.labels, &single, x)?;
            if moved != single.scale(&-Q::one()) {
                return Err(Error::Colimit(format!("transposition does not negate {key:?}")));
            }
            continue;
        }
        let lam: BTreeMap<Label, Label> = u.labels.iter().zip(&key.jumps).map(|(&l, &j)| (l, j as Label)).collect();
        let mut target: Vec<Label> = key.jumps.iter().map(|&j| j as Label).collect();
        target.sort_unstable();
        let moved = lambda_star(&lam, &target, &single, x)?;
        let sigma = &key.x.surj;
        let nu: Vec<u32> = (0..=sigma.cod()).map(|i| sigma.values().iter().filter(|&&v| v == i).count() as u32 - 1).collect();
        let j: Vec<usize> = (1..=key.dim()).filter(|r| !key.jumps.contains(r)).map(|r| sigma.at(r)).collect();
        let base = zeta_1(key.x.base, &nu, &j)?;
        let (bk, bc) = base.terms.iter().next().ok_or_else(|| Error::Colimit("empty ζ_1".into()))?;
        let coeff = moved.terms.get(bk).cloned().unwrap_or_default() / bc;
        if moved != base.scale(&coeff) {
            return Err(Error::Colimit(format!("{key:?} is not carried onto ζ_1")));
        }
        out.push(Piece { coeff, x: key.x.base, nu, j });
    }
    Ok(out)
}

/// `Σ coeff · x ⊗ t^{[ν]} w_J`.
pub fn pieces_phi(x: &SSet, pieces: &[Piece], deg: usize) -> Result<PhiChain> {
    let mut out = PhiChain::zero(deg);
    for p in pieces {
        out = out.add(&zeta_symbol_phi(x, p.x, &p.nu, &p.j, &p.coeff)?);
    }
    Ok(out)
}

/// Checks `Σ_i (ν_i+1) ζ(x, ν+δ_i, J) = ζ(x, ν, J)` by stabilizing `ζ_1(x, ν, J)`
/// along `A ⊂ A ⊔ {∞}` and decomposing the result.
pub fn zt_factor_check(x: &SSet, xr: SimplexRef, nu: &[u32], j: &[usize]) -> Result<bool> {
    let z = zeta_1(xr, nu, j)?;
    let inf = z.labels.last().copied().unwrap_or(0).max(z.deg as Label + z.m() as Label) + 1;
    let lam: BTreeMap<Label, Label> = z.labels.iter().map(|&l| (l, l)).collect();
    let mut target = z.labels.clone();
    target.push(inf);
    let big = lambda_star(&lam, &target, &z, x)?;
    let mut got: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
    for p in decompose(&big, x)? {
        if p.x != xr || {
            let mut a = p.j.clone();
            let mut b = j.to_vec();
            a.sort_unstable();
            b.sort_unstable();
            a != b
        } {
            return Ok(false);
        }
        let (_, neg) = Wedge::from_indices(&p.j).expect("distinct");
        let (_, neg0) = Wedge::from_indices(j).expect("distinct");
        *got.entry(p.nu).or_insert_with(Q::zero) += p.coeff * pm(neg ^ neg0);
    }
    got.retain(|_, v| !v.is_zero());
    let mut want = BTreeMap::new();
    for i in 0..nu.len() {
        let mut up = nu.to_vec();
        up[i] += 1;
        want.insert(up, Q::from_integer((nu[i] as i64 + 1).into()));
    }
    Ok(got == want)
}

/// Exhaustive check of `(-1)^i (δ_i)_* z(αδ_i) = (-1)^m τ_i z(α)` for
/// `α : [d] -> Map(A, [1])`, with `τ_i = dt_i ⌟` in the contraction
/// convention of `ThetaElt::interior`. Returns a counterexample if one exists.
pub fn delta_z_counterexample(d: usize, m: usize) -> Result<Option<String>> {
    delta_z_search(d, m, false)
}

/// The same search with the opposite sign `(-1)^{m+1}` on the right.
pub fn delta_z_flipped_counterexample(d: usize, m: usize) -> Result<Option<String>> {
    delta_z_search(d, m, true)
}

fn delta_z_search(d: usize, m: usize, flip: bool) -> Result<Option<String>> {
    if d == 0 {
        return Ok(None);
    }
    let maps: Vec<OrdMap> = (0..=d + 1)
        .map(|jump| OrdMap::new((0..=d).map(|r| usize::from(r >= jump)).collect(), 1))
        .collect::<Result<_>>()?;
    let mut idx = vec![0usize; m];
    loop {
        let alpha: Vec<OrdMap> = idx.iter().map(|&i| maps[i].clone()).collect();
        for i in 0..=d {
            let face = OrdMap::face(d, i);
            let restricted: Vec<OrdMap> = alpha.iter().map(|a| a.after(&face)).collect::<Result<_>>()?;
            let lhs = z_of(&restricted, d - 1)?.map(|z| z.raise_wedges(i).scale(&pm(i % 2 == 1)));
            let rhs = z_of(&alpha, d)?.map(|z| z.interior(&FormElt::dt(d, i)).scale(&pm((m % 2 == 1) ^ flip)));
            let ok = match (&lhs, &rhs) {
                (None, None) => true,
                (Some(a), None) | (None, Some(a)) => a.is_zero(),
                (Some(a), Some(b)) => a == b,
            };
            if !ok {
                let jumps: Vec<Vec<usize>> = alpha.iter().map(|a| a.values().to_vec()).collect();
                return Ok(Some(format!("d={d} i={i} α={jumps:?}: {lhs:?} vs {rhs:?}")));
            }
        }
        let mut p = 0;
        loop {
            if p == m {
                return Ok(None);
            }
            idx[p] += 1;
            if idx[p] < maps.len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phi_global::phi_of_simplex;
    use crate::rational::{q, qr};
    use crate::simplicial_sets::{boundary_delta, delta};

    #[test]
    fn delta_z_flipped_sign_fails() {
        assert!(delta_z_flipped_counterexample(1, 0).unwrap().is_some());
    }

    #[test]
    fn z_examples() {
        let c = OrdMap::constant(1, 1, 0);
        assert!(z_of(&[c], 1).unwrap().is_none());
        let e = OrdMap::new(vec![0, 1], 1).unwrap();
        assert_eq!(z_of(&[e], 1).unwrap().unwrap(), ThetaElt::scalar(1, q(-1)));
        let a = OrdMap::new(vec![0, 1, 1], 1).unwrap();
        let b = OrdMap::new(vec![0, 0, 1], 1).unwrap();
        assert_eq!(z_of(&[a.clone(), b.clone()], 2).unwrap().unwrap(), ThetaElt::scalar(2, q(1)));
        assert_eq!(z_of(&[b, a], 2).unwrap().unwrap(), ThetaElt::scalar(2, q(-1)));
    }

    #[test]
    fn delta_z_small() {
        for d in 1..=3 {
            for m in 0..=2 {
                assert_eq!(delta_z_counterexample(d, m).unwrap(), None, "d={d} m={m}");
            }
        }
    }

    #[test]
    fn eta_normalization() {
        let p = point();
        for m in 0..=3 {
            let labels: Vec<Label> = (0..m).collect();
            let e = eta(&labels).unwrap();
            assert_eq!(e.phi_sharp(&p).unwrap(), phi_of_simplex(SimplexRef { dim: 0, idx: 0 }));
        }
        let p = point();
        let prod = ProductSSet::new(&p, &p).unwrap();
        let e = nu(&eta(&[1]).unwrap(), &p, &eta(&[0, 2]).unwrap(), &p, &prod).unwrap();
        assert_eq!(e.phi_sharp(&prod.sset).unwrap(), phi_of_simplex(SimplexRef { dim: 0, idx: 0 }));
    }

    #[test]
    fn zeta_phi_sharp() {
        let x = delta(2);
        let top = x.simplices(2).next().unwrap();
        for (nu, j) in [(vec![0, 0, 0], vec![1, 2]), (vec![1, 0, 2], vec![2]), (vec![0, 2, 1], vec![])] {
            let z = zeta_1(top, &nu, &j).unwrap();
            assert_eq!(z.deg(), j.len());
            assert_eq!(z.phi_sharp(&x).unwrap(), zeta_symbol_phi(&x, top, &nu, &j, &q(1)).unwrap());
        }
    }

    #[test]
    fn phi_sharp_chain_map() {
        let x = delta(2);
        let top = x.simplices(2).next().unwrap();
        let z = zeta_1(top, &[1, 0, 1], &[1, 2]).unwrap();
        let lhs = z.boundary(&x).unwrap().phi_sharp(&x).unwrap();
        let rhs = z.phi_sharp(&x).unwrap().boundary(&x).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lambda_preserves_phi_sharp() {
        let x = boundary_delta(2);
        let e = x.simplices(1).next().unwrap();
        let z = zeta_1(e, &[1, 1], &[1]).unwrap();
        let lam: BTreeMap<Label, Label> = z.labels().iter().map(|&l| (l, l + 10)).collect();
        let mut target: Vec<Label> = lam.values().copied().collect();
        target.extend([3, 40]);
        target.sort_unstable();
        let moved = lambda_star(&lam, &target, &z, &x).unwrap();
        assert_eq!(moved.phi_sharp(&x).unwrap(), z.phi_sharp(&x).unwrap());
    }

    #[test]
    fn zt_factor() {
        let x = delta(1);
        let e = x.simplices(1).next().unwrap();
        let v = x.simplices(0).next().unwrap();
        assert!(zt_factor_check(&x, v, &[0], &[]).unwrap());
        assert!(zt_factor_check(&x, e, &[0, 0], &[1]).unwrap());
        assert!(zt_factor_check(&x, e, &[1, 0], &[]).unwrap());
        assert!(zt_factor_check(&x, e, &[0, 2], &[1]).unwrap());
    }

    #[test]
    fn psi_zeta_prime() {
        let x = delta(1);
        let e = x.simplices(1).next().unwrap();
        let mut c = PhiChain::zero(1);
        c.add_term((e, Mono(vec![0, 2]), Wedge::single(1)), qr(3, 2));
        c.add_term((e, Mono(vec![0, 0]), Wedge::single(1)), q(1));
        assert_eq!(zeta_prime(&c).unwrap().psi(&x, 1).unwrap(), c);
    }

    #[test]
    fn decompose_matches_phi_sharp() {
        let x = delta(1);
        let e = x.simplices(1).next().unwrap();
        let z = zeta_1(e, &[1, 1], &[1]).unwrap();
        let lam: BTreeMap<Label, Label> = z.labels().iter().map(|&l| (l, l)).collect();
        let big = lambda_star(&lam, &[1, 3, 7, 9], &z, &x).unwrap();
        let pieces = decompose(&big, &x).unwrap();
        assert_eq!(pieces_phi(&x, &pieces, 1).unwrap(), big.phi_sharp(&x).unwrap());
    }

    #[test]
    fn nu_phi_square() {
        let x = delta(1);
        let y = boundary_delta(2);
        let prod = ProductSSet::new(&x, &y).unwrap();
        let e = x.simplices(1).next().unwrap();
        let f = y.simplices(1).nth(1).unwrap();
        let u = zeta_1(e, &[1, 0], &[1]).unwrap();
        let v = zeta_1(f, &[0, 1], &[]).unwrap();
        let shifted: BTreeMap<Label, Label> = v.labels().iter().map(|&l| (l, l + 5)).collect();
        let target: Vec<Label> = shifted.values().copied().collect();
        let v = lambda_star(&shifted, &target, &v, &y).unwrap();
        let lhs = nu(&u, &x, &v, &y, &prod).unwrap().phi_sharp(&prod.sset).unwrap();
        let rhs = crate::monoidal::mu_phi(&x, &y, &prod, &u.phi_sharp(&x).unwrap(), &v.phi_sharp(&y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lambda_functorial() {
        let x = delta(1);
        let e = x.simplices(1).next().unwrap();
        let z = zeta_1(e, &[1, 0], &[]).unwrap();
        assert_eq!(z.labels(), &[1, 2]);
        let l1: BTreeMap<Label, Label> = [(1, 4), (2, 1)].into();
        let l2: BTreeMap<Label, Label> = [(1, 6), (4, 2), (3, 0)].into();
        let a = lambda_star(&l1, &[1, 3, 4], &z, &x).unwrap();
        let b = lambda_star(&l2, &[0, 2, 6, 7], &a, &x).unwrap();
        let comp: BTreeMap<Label, Label> = [(1, 2), (2, 6)].into();
        let c = lambda_star(&comp, &[0, 2, 6, 7], &z, &x).unwrap();
        assert_eq!(b, c);
    }
}
