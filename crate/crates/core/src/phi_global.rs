//! The global complex `Φ_*(X)` in split normal form
//! `Φ_d(X) = ⊕_m N_m(X) ⊗ Θ_{[m],d}`, cochain forms `Ω^*(X)`, and the
//! pairing between them.
//!
//! A general term `x ⊗ i_J(β)` is brought to normal form by restricting `x`
//! to the face `J`, writing the result as `σ^*(y)` with `y`
//! nondegenerate, and replacing the term by `y ⊗ σ_*(β)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology_engine::{
    closed_subcomplex, inclusion_map, induced_image_dims, same_homology_image, ChainComplexQ, ChainMap, QMatrix,
    SparseVec,
};
use crate::phi_local::PhiElt;
use crate::polyforms::{monomials_up_to, FormElt, Mono, ThetaElt, Wedge};
use crate::rational::Q;
use crate::simplicial_core::{subsets_of_size, OrdMap};
use crate::simplicial_sets::{Chain, DegSimplex, ProductSSet, SSet, SimplexRef};

/// Basis element `x ⊗ t^ν w_W` with `x` nondegenerate.
pub type GlobalKey = (SimplexRef, Mono, Wedge);

#[derive(Clone, PartialEq, Eq)]
pub struct PhiChain {
    deg: usize,
    terms: BTreeMap<GlobalKey, Q>,
}

impl fmt::Debug for PhiChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhiChain_{}{:?}", self.deg, self.terms)
    }
}

impl PhiChain {
    pub fn zero(deg: usize) -> Self {
        PhiChain { deg, terms: BTreeMap::new() }
    }

    pub fn basis(key: GlobalKey) -> Self {
        let mut c = PhiChain::zero(key.2.len());
        c.add_term(key, Q::one());
        c
    }

    pub fn deg(&self) -> usize {
        self.deg
    }

    pub fn terms(&self) -> &BTreeMap<GlobalKey, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.terms.keys().map(|(_, m, w)| m.degree() + w.len() as u32).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, key: GlobalKey, c: Q) {
        debug_assert_eq!(key.2.len(), self.deg);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &PhiChain) -> PhiChain {
        assert_eq!(self.deg, other.deg);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PhiChain) -> PhiChain {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> PhiChain {
        let mut out = PhiChain::zero(self.deg);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect();
        }
        out
    }

    /// Terms grouped as `x ⊗ a` with `a ∈ Θ_{[dim x]}`.
    pub fn by_simplex(&self) -> BTreeMap<SimplexRef, ThetaElt> {
        let mut out: BTreeMap<SimplexRef, ThetaElt> = BTreeMap::new();
        for ((x, m, w), c) in &self.terms {
            out.entry(*x).or_insert_with(|| ThetaElt::zero(x.dim, self.deg)).add_term(m.clone(), *w, c.clone());
        }
        out
    }

    /// `x ⊗ (a)` summands with simplex names from `sset`.
    pub fn display(&self, sset: &SSet) -> String {
        let parts: Vec<String> = self.by_simplex().iter().map(|(x, a)| format!("{} ⊗ ({a})", sset.name(*x))).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Normal form of `x ⊗ a` for any simplex `x` and `a ∈ Φ_{[dim x]}`.
    pub fn from_phi(sset: &SSet, x: &DegSimplex, a: &PhiElt) -> Result<PhiChain> {
        if a.n() != x.dim() {
            return Err(Error::DomainMismatch { expected: x.dim(), found: a.n() });
        }
        let mut out = PhiChain::zero(a.deg());
        for (sub, beta) in a.comps() {
            let iota = OrdMap::inclusion(x.dim(), sub)?;
            let face = sset.apply_map(&iota, x)?;
            let pushed = beta.pushforward(face.surj.values(), face.base.dim)?;
            for ((m, w), c) in pushed.terms() {
                out.add_term((face.base, m.clone(), *w), c.clone());
            }
        }
        Ok(out)
    }

    /// `x ⊗ a` with `a ∈ Θ_{[dim x]}` placed on the top component.
    pub fn from_theta(sset: &SSet, x: &DegSimplex, a: &ThetaElt) -> Result<PhiChain> {
        let full: Vec<usize> = (0..=x.dim()).collect();
        PhiChain::from_phi(sset, x, &PhiElt::inject(x.dim(), &full, a.clone())?)
    }

    /// `∂(x ⊗ α) = x ⊗ δα`, renormalized.
    pub fn boundary(&self, sset: &SSet) -> Result<PhiChain> {
        let mut out = PhiChain::zero(self.deg.saturating_sub(1));
        if self.deg == 0 {
            return Ok(out);
        }
        for (x, a) in self.by_simplex() {
            let full: Vec<usize> = (0..=x.dim).collect();
            let d = PhiElt::inject(x.dim, &full, a)?.delta();
            out = out.add(&PhiChain::from_phi(sset, &DegSimplex::nondeg(x), &d)?);
        }
        Ok(out)
    }

    /// `⟨⟨x ⊗ α, ω⟩⟩ = ∫_{[m]} ⟨α, ω(x)⟩`; zero on a degree mismatch.
    pub fn pair(&self, omega: &CochainForm) -> Q {
        if self.deg != omega.deg {
            return Q::zero();
        }
        let mut total = Q::zero();
        for (x, a) in self.by_simplex() {
            if let Some(v) = omega.values.get(&x) {
                total += a.pair(v).integrate();
            }
        }
        total
    }

    pub fn to_vec(&self, index: &BTreeMap<GlobalKey, usize>) -> Result<SparseVec> {
        let mut v = SparseVec::new();
        for (k, c) in &self.terms {
            let i = index.get(k).ok_or_else(|| Error::SizeMismatch(format!("term {k:?} outside the truncation")))?;
            v.insert(*i, c.clone());
        }
        Ok(v)
    }
}

/// `φ(x) = (-1)^n x ⊗ θ_[n] = x ⊗ w_1 ∧ … ∧ w_n`.
pub fn phi_of_simplex(x: SimplexRef) -> PhiChain {
    PhiChain::basis((x, Mono::one(x.dim), Wedge::full(x.dim)))
}

pub fn phi_of_chain(c: &Chain) -> PhiChain {
    let mut out = PhiChain::zero(c.degree);
    for (x, a) in &c.terms {
        out.add_term((*x, Mono::one(x.dim), Wedge::full(x.dim)), a.clone());
    }
    out
}

/// A cochain form in `Ω^deg(X)`, given on nondegenerate simplices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CochainForm {
    deg: usize,
    values: BTreeMap<SimplexRef, FormElt>,
}

impl CochainForm {
    pub fn zero(deg: usize) -> Self {
        CochainForm { deg, values: BTreeMap::new() }
    }

    pub fn deg(&self) -> usize {
        self.deg
    }

    pub fn values(&self) -> &BTreeMap<SimplexRef, FormElt> {
        &self.values
    }

    pub fn set(&mut self, x: SimplexRef, v: FormElt) -> Result<()> {
        if v.n() != x.dim || v.deg() != self.deg {
            return Err(Error::DomainMismatch { expected: x.dim, found: v.n() });
        }
        if v.is_zero() {
            self.values.remove(&x);
        } else {
            self.values.insert(x, v);
        }
        Ok(())
    }

    /// The constant function `c` in degree 0.
    pub fn constant(sset: &SSet, c: Q) -> CochainForm {
        let mut out = CochainForm::zero(0);
        for x in sset.all_simplices() {
            out.set(x, FormElt::scalar(x.dim, c.clone())).unwrap();
        }
        out
    }

    /// `ω(x)` for an arbitrary simplex `x = σ^*(y)`: `σ^*(ω(y))`.
    pub fn value_at(&self, x: &DegSimplex) -> FormElt {
        match self.values.get(&x.base) {
            Some(v) if x.is_nondegenerate() => v.clone(),
            Some(v) => v.pullback(x.surj.values()),
            None => FormElt::zero(x.dim(), self.deg),
        }
    }

    /// Checks `δ_i^* ω(x) = ω(d_i x)` on every nondegenerate simplex.
    pub fn validate(&self, sset: &SSet) -> Result<()> {
        for x in sset.all_simplices() {
            if x.dim == 0 {
                continue;
            }
            let v = self.value_at(&DegSimplex::nondeg(x));
            for i in 0..=x.dim {
                let lhs = v.pullback(OrdMap::face(x.dim, i).values());
                let rhs = self.value_at(sset.face(x, i));
                if lhs != rhs {
                    return Err(Error::InvalidSSet(format!("cochain incompatible on {} at face {i}", sset.name(x))));
                }
            }
        }
        Ok(())
    }

    pub fn d(&self) -> CochainForm {
        let mut out = CochainForm::zero(self.deg + 1);
        for (x, v) in &self.values {
            out.set(*x, v.d()).unwrap();
        }
        out
    }

    pub fn add(&self, other: &CochainForm) -> CochainForm {
        assert_eq!(self.deg, other.deg);
        let mut out = self.clone();
        for (x, v) in &other.values {
            let nv = match out.values.get(x) {
                Some(old) => old.add(v),
                None => v.clone(),
            };
            out.set(*x, nv).unwrap();
        }
        out
    }

    pub fn scale(&self, c: &Q) -> CochainForm {
        let mut out = CochainForm::zero(self.deg);
        for (x, v) in &self.values {
            out.set(*x, v.scale(c)).unwrap();
        }
        out
    }

    /// Valuewise product on the same simplicial set.
    pub fn wedge(&self, other: &CochainForm) -> CochainForm {
        let mut out = CochainForm::zero(self.deg + other.deg);
        for (x, v) in &self.values {
            if let Some(u) = other.values.get(x) {
                out.set(*x, v.wedge(u)).unwrap();
            }
        }
        out
    }
}

/// `ω ∧ υ` on `X × Y`, through the projections.
pub fn omega_wedge(prod: &ProductSSet, omega: &CochainForm, upsilon: &CochainForm) -> CochainForm {
    let mut out = CochainForm::zero(omega.deg + upsilon.deg);
    for z in prod.sset.all_simplices() {
        let (a, b) = prod.components(z);
        let v = omega.value_at(a).wedge(&upsilon.value_at(b));
        out.set(z, v).unwrap();
    }
    out
}

/// Basis keys of weight `|ν| + d ≤ max_weight`, grouped by degree `d`.
#[allow(clippy::needless_range_loop)]
pub fn weight_seeds(sset: &SSet, max_weight: u32) -> Vec<BTreeSet<GlobalKey>> {
    let top = sset.top_dim().unwrap_or(0);
    let mut seeds = vec![BTreeSet::new(); top + 1];
    for x in sset.all_simplices() {
        let positions: Vec<usize> = (1..=x.dim).collect();
        for d in 0..=x.dim.min(max_weight as usize) {
            for ws in subsets_of_size(&positions, d) {
                let w = Wedge::from_indices(&ws).unwrap().0;
                for m in monomials_up_to(x.dim, max_weight - d as u32) {
                    seeds[d].insert((x, m, w));
                }
            }
        }
    }
    seeds
}

pub fn global_key_label(sset: &SSet, key: &GlobalKey) -> String {
    format!("{}⊗t{:?}{:?}", sset.name(key.0), &key.1 .0[1..], key.2)
}

/// `G_D`: the subcomplex generated by the basis terms of weight at most `D`.
///
/// Through a face that collapses two or more vertices the polynomial degree
/// can rise by more than the exterior degree drops, so the span of the
/// weight-`≤D` terms is closed off under the boundary. When no face
/// collapses more than one vertex this is exactly that span.
pub fn truncated_complex(sset: &SSet, max_weight: u32) -> Result<(ChainComplexQ, Vec<Vec<GlobalKey>>)> {
    let seeds = weight_seeds(sset, max_weight);
    let bd = |k: &GlobalKey| -> Vec<(GlobalKey, Q)> {
        PhiChain::basis(k.clone()).boundary(sset).expect("valid key").terms.into_iter().collect()
    };
    closed_subcomplex(seeds, bd, |k| global_key_label(sset, k))
}

fn index_of(keys: &[GlobalKey]) -> BTreeMap<GlobalKey, usize> {
    keys.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect()
}

/// `φ: N_*(X) -> G` as a chain map into a truncation containing its image.
pub fn phi_chain_map(sset: &SSet, keys: &[Vec<GlobalKey>]) -> Result<ChainMap> {
    let n = sset.normalized_chains();
    let mut maps = Vec::new();
    for k in 0..n.len() {
        let index = keys.get(k).map(|v| index_of(v)).unwrap_or_default();
        let cols: Vec<SparseVec> =
            sset.simplices(k).map(|x| phi_of_simplex(x).to_vec(&index)).collect::<Result<_>>()?;
        maps.push(QMatrix::from_columns(index.len(), &cols)?);
    }
    Ok(ChainMap { maps })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[allow(non_snake_case)]
pub struct HomologyReport {
    pub complex: String,
    pub D: u32,
    pub dims_GD: Vec<usize>,
    pub stable_image_dims: Vec<usize>,
    pub matches_N: bool,
}

/// Full outcome of a homology run at weights `D` and `D+1`.
#[derive(Clone, Debug)]
pub struct HomologyRun {
    pub name: String,
    pub d: u32,
    pub offset: u32,
    pub n_dims: Vec<usize>,
    pub dims_gd: Vec<usize>,
    pub stable: Vec<usize>,
    pub stable_next: Vec<usize>,
    pub phi_generates: bool,
}

impl HomologyRun {
    pub fn stabilized(&self) -> bool {
        self.stable == self.stable_next
    }

    pub fn matches(&self) -> bool {
        self.stabilized() && self.stable == self.n_dims && self.phi_generates
    }

    pub fn report(&self) -> HomologyReport {
        HomologyReport {
            complex: self.name.clone(),
            D: self.d,
            dims_GD: self.dims_gd.clone(),
            stable_image_dims: self.stable.clone(),
            matches_N: self.matches(),
        }
    }
}

fn pad(mut v: Vec<usize>, len: usize) -> Vec<usize> {
    v.resize(len, 0);
    v
}

/// Image dimensions of `H(G_D) -> H(G_{D+offset})` and whether `φ`-classes span them.
fn stable_image(sset: &SSet, d: u32, offset: u32) -> Result<(Vec<usize>, Vec<usize>, bool)> {
    let (small, ks) = truncated_complex(sset, d)?;
    let (big, kb) = truncated_complex(sset, d + offset)?;
    let f = inclusion_map(&ks, &kb)?;
    let dims: Vec<usize> = (0..small.len()).map(|k| induced_image_dims(&f, &small, &big, k)).collect::<Result<_>>()?;
    let nx = sset.normalized_chains();
    let phi = phi_chain_map(sset, &kb)?;
    let mut generates = true;
    for k in 0..small.len() {
        generates &= same_homology_image((&f, &small), (&phi, &nx), &big, k)?;
    }
    Ok((small.dims(), dims, generates))
}

/// Compares `H(N_*(X))` with the stabilized homology of the truncations.
pub fn homology_run(name: &str, sset: &SSet, d: u32, offset: u32) -> Result<HomologyRun> {
    let len = sset.top_dim().map(|t| t + 1).unwrap_or(0);
    if (d as usize) < len.saturating_sub(1) {
        return Err(Error::Stabilization(format!("D={d} is below the dimension of {name}")));
    }
    let n_dims = pad(sset.normalized_chains().homology_dims(), len);
    let (dims_gd, stable, phi_generates) = stable_image(sset, d, offset)?;
    let (_, stable_next, gen_next) = stable_image(sset, d + 1, offset)?;
    Ok(HomologyRun {
        name: name.to_string(),
        d,
        offset,
        n_dims,
        dims_gd: pad(dims_gd, len),
        stable: pad(stable, len),
        stable_next: pad(stable_next, len),
        phi_generates: phi_generates && gen_next,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::simplicial_sets::{delta, sphere};

    #[test]
    fn edge_boundary_on_delta1() {
        let x = delta(1);
        let e = x.simplices(1).next().unwrap();
        let b = phi_of_simplex(e).boundary(&x).unwrap();
        let v0 = x.face(e, 1).base;
        let v1 = x.face(e, 0).base;
        let mut expect = phi_of_simplex(v1);
        expect = expect.sub(&phi_of_simplex(v0));
        assert_eq!(b, expect);
    }

    #[test]
    fn circle_edge_is_a_cycle() {
        let s = sphere(1);
        let e = s.simplices(1).next().unwrap();
        assert!(phi_of_simplex(e).boundary(&s).unwrap().is_zero());
    }

    #[test]
    fn circle_truncation_dims() {
        let (c, _) = truncated_complex(&sphere(1), 1).unwrap();
        assert_eq!(c.dims(), vec![3, 1]);
    }

    #[test]
    fn collapsing_face_kills_w1() {
        let s = sphere(1);
        let e = s.simplices(1).next().unwrap();
        let x = DegSimplex::new(OrdMap::new(vec![0, 0], 0).unwrap(), s.simplices(0).next().unwrap()).unwrap();
        let c = PhiChain::from_theta(&s, &x, &ThetaElt::w(1, 1)).unwrap();
        assert!(c.is_zero());
        let _ = e;
    }

    #[test]
    fn cochain_checks() {
        let x = delta(1);
        let one = CochainForm::constant(&x, q(1));
        one.validate(&x).unwrap();
        let e = x.simplices(1).next().unwrap();
        let mut w = CochainForm::zero(1);
        w.set(e, FormElt::ds(1, 1)).unwrap();
        w.validate(&x).unwrap();
        assert_eq!(phi_of_simplex(e).pair(&w), q(1));
        let mut bad = CochainForm::zero(0);
        bad.set(x.simplices(0).next().unwrap(), FormElt::scalar(0, q(1))).unwrap();
        assert!(bad.validate(&x).is_err());
    }

    #[test]
    fn circle_homology_run() {
        let r = homology_run("sphere:1", &sphere(1), 2, 2).unwrap();
        assert_eq!(r.stable, vec![1, 1]);
        assert!(r.matches(), "{r:?}");
    }
}
