//! Finite simplicial sets stored by their nondegenerate simplices.
//!
//! Every simplex is a [`DegSimplex`] `(α, y)` with `α` a surjection and `y`
//! nondegenerate (Eilenberg–Zilber normal form). Only the faces of
//! nondegenerate simplices are stored; [`SSet::apply_map`] derives every
//! other structure map from them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology_engine::{ChainComplexQ, QMatrix, SparseVec};
use crate::rational::Q;
use crate::simplicial_core::{subsets_of_size, OrdMap, PointedSubset};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub dim: usize,
    pub idx: usize,
}

impl fmt::Debug for SimplexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}.{}", self.dim, self.idx)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegSimplex {
    pub surj: OrdMap,
    pub base: SimplexRef,
}

impl DegSimplex {
    pub fn new(surj: OrdMap, base: SimplexRef) -> Result<Self> {
        if !surj.is_surjective() {
            return Err(Error::NotSurjective(surj.values().to_vec()));
        }
        if surj.cod() != base.dim {
            return Err(Error::DomainMismatch { expected: base.dim, found: surj.cod() });
        }
        Ok(DegSimplex { surj, base })
    }

    pub fn nondeg(base: SimplexRef) -> Self {
        DegSimplex { surj: OrdMap::identity(base.dim), base }
    }

    pub fn dim(&self) -> usize {
        self.surj.dom()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.surj.is_identity()
    }
}

#[derive(Clone, Debug, Default)]
pub struct SSet {
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<DegSimplex>>>,
    index: Vec<HashMap<String, usize>>,
}

impl SSet {
    pub fn new() -> Self {
        SSet::default()
    }

    /// Registers a nondegenerate simplex; `faces[i]` is `d_i`.
    pub fn add_simplex(&mut self, dim: usize, name: &str, faces: Vec<DegSimplex>) -> Result<SimplexRef> {
        let expected = if dim == 0 { 0 } else { dim + 1 };
        if faces.len() != expected {
            return Err(Error::InvalidSSet(format!("{name}: {} faces for a {dim}-simplex", faces.len())));
        }
        for f in &faces {
            if f.dim() + 1 != dim || !f.surj.is_surjective() || f.surj.cod() != f.base.dim {
                return Err(Error::InvalidSSet(format!("{name}: malformed face {f:?}")));
            }
            if self.count(f.base.dim) <= f.base.idx {
                return Err(Error::Dangling(format!("{name}: {:?}", f.base)));
            }
        }
        while self.names.len() <= dim {
            self.names.push(Vec::new());
            self.faces.push(Vec::new());
            self.index.push(HashMap::new());
        }
        if self.index[dim].contains_key(name) {
            return Err(Error::InvalidSSet(format!("duplicate id {name:?} in dimension {dim}")));
        }
        let idx = self.names[dim].len();
        self.names[dim].push(name.to_string());
        self.faces[dim].push(faces);
        self.index[dim].insert(name.to_string(), idx);
        Ok(SimplexRef { dim, idx })
    }

    pub fn top_dim(&self) -> Option<usize> {
        (0..self.names.len()).rev().find(|&d| !self.names[d].is_empty())
    }

    pub fn count(&self, dim: usize) -> usize {
        self.names.get(dim).map(|v| v.len()).unwrap_or(0)
    }

    pub fn nd_counts(&self) -> Vec<usize> {
        match self.top_dim() {
            Some(t) => (0..=t).map(|d| self.count(d)).collect(),
            None => vec![],
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.nd_counts().iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    pub fn simplices(&self, dim: usize) -> impl Iterator<Item = SimplexRef> {
        (0..self.count(dim)).map(move |idx| SimplexRef { dim, idx })
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = SimplexRef> + '_ {
        (0..self.names.len()).flat_map(move |d| self.simplices(d))
    }

    pub fn name(&self, r: SimplexRef) -> &str {
        &self.names[r.dim][r.idx]
    }

    pub fn lookup(&self, dim: usize, name: &str) -> Option<SimplexRef> {
        self.index.get(dim)?.get(name).map(|&idx| SimplexRef { dim, idx })
    }

    pub fn check(&self, r: SimplexRef) -> Result<()> {
        if r.idx < self.count(r.dim) {
            Ok(())
        } else {
            Err(Error::Dangling(format!("{r:?}")))
        }
    }

    /// Stored `d_i` of a nondegenerate simplex.
    pub fn face(&self, r: SimplexRef, i: usize) -> &DegSimplex {
        &self.faces[r.dim][r.idx][i]
    }

    /// EZ normal form of `α^*(x)`.
    pub fn apply_map(&self, alpha: &OrdMap, x: &DegSimplex) -> Result<DegSimplex> {
        self.check(x.base)?;
        let comp = x.surj.after(alpha)?;
        let (epi, mono) = comp.factor();
        let tau = self.restrict_injective(&mono, x.base)?;
        Ok(DegSimplex { surj: tau.surj.after(&epi)?, base: tau.base })
    }

    /// `ι^*(y)` for an injection `ι` into the dimension of a nondegenerate `y`.
    fn restrict_injective(&self, iota: &OrdMap, y: SimplexRef) -> Result<DegSimplex> {
        let k = y.dim;
        if iota.dom() == k {
            return Ok(DegSimplex::nondeg(y));
        }
        let j = (0..=k).rev().find(|j| !iota.values().contains(j)).expect("proper injection misses a value");
        let lowered: Vec<usize> = iota.values().iter().map(|&v| if v < j { v } else { v - 1 }).collect();
        let iota2 = OrdMap::new(lowered, k - 1)?;
        let face = self.face(y, j).clone();
        self.apply_map(&iota2, &face)
    }

    pub fn face_of(&self, x: &DegSimplex, i: usize) -> Result<DegSimplex> {
        if x.dim() == 0 || i > x.dim() {
            return Err(Error::InvalidMap(vec![x.dim(), i]));
        }
        self.apply_map(&OrdMap::face(x.dim(), i), x)
    }

    /// The `i`-th vertex of a simplex.
    pub fn vertex(&self, x: &DegSimplex, i: usize) -> Result<SimplexRef> {
        Ok(self.apply_map(&OrdMap::new(vec![i], x.dim())?, x)?.base)
    }

    pub fn vertices(&self, x: &DegSimplex) -> Result<Vec<SimplexRef>> {
        (0..=x.dim()).map(|i| self.vertex(x, i)).collect()
    }

    /// Checks `d_i d_j = d_{j-1} d_i` for `i < j` on all nondegenerate simplices.
    pub fn validate(&self) -> Result<()> {
        for r in self.all_simplices() {
            if r.dim < 2 {
                continue;
            }
            let x = DegSimplex::nondeg(r);
            for j in 0..=r.dim {
                for i in 0..j {
                    let a = self.face_of(&self.face_of(&x, j)?, i)?;
                    let b = self.face_of(&self.face_of(&x, i)?, j - 1)?;
                    if a != b {
                        return Err(Error::InvalidSSet(format!(
                            "d_{i} d_{j} != d_{} d_{i} on {}",
                            j - 1,
                            self.name(r)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Simplices that are not the base of any stored face.
    pub fn maximal_simplices(&self) -> Vec<SimplexRef> {
        let mut used = BTreeSet::new();
        for r in self.all_simplices() {
            for d in &self.faces[r.dim][r.idx] {
                used.insert(d.base);
            }
        }
        self.all_simplices().filter(|r| !used.contains(r)).collect()
    }

    pub fn normalized_chains(&self) -> ChainComplexQ {
        let top = self.top_dim().map(|t| t + 1).unwrap_or(0);
        let labels: Vec<Vec<String>> = (0..top).map(|d| self.names[d].clone()).collect();
        let mut mats = Vec::new();
        for d in 0..top {
            if d == 0 {
                mats.push(QMatrix::zeros(0, self.count(0)));
                continue;
            }
            let cols: Vec<SparseVec> = self.simplices(d).map(|r| self.boundary_of(r).terms.into_iter().map(|(s, c)| (s.idx, c)).collect()).collect();
            mats.push(QMatrix::from_columns(self.count(d - 1), &cols).expect("face indices in range"));
        }
        ChainComplexQ::new(labels, mats).expect("normalized chains square to zero")
    }

    pub fn boundary_of(&self, r: SimplexRef) -> Chain {
        let mut c = Chain::zero(r.dim.saturating_sub(1));
        if r.dim == 0 {
            return c;
        }
        for i in 0..=r.dim {
            let f = self.face(r, i);
            if f.is_nondegenerate() {
                let s = if i % 2 == 0 { Q::one() } else { -Q::one() };
                c.add_term(f.base, s);
            }
        }
        c
    }

    /// Sub-simplicial set of simplices of dimension at most `k`.
    pub fn skeleton(&self, k: usize) -> SSet {
        let mut out = SSet::new();
        for d in 0..=k.min(self.names.len().saturating_sub(1)) {
            for r in self.simplices(d) {
                out.add_simplex(d, self.name(r), self.faces[d][r.idx].clone()).expect("skeleton of valid set");
            }
        }
        out
    }

    /// Collapses the subcomplex `sub` to a basepoint named `*`.
    pub fn quotient(&self, sub: &[SimplexRef]) -> Result<SSet> {
        if sub.is_empty() {
            return Err(Error::EmptySubcomplex);
        }
        let sub: BTreeSet<SimplexRef> = sub.iter().copied().collect();
        for &r in &sub {
            self.check(r)?;
            for f in &self.faces[r.dim][r.idx] {
                if !sub.contains(&f.base) {
                    return Err(Error::NotSubcomplex(format!("{} has face {} outside", self.name(r), self.name(f.base))));
                }
            }
        }
        let mut out = SSet::new();
        let star = out.add_simplex(0, "*", vec![])?;
        let mut map: BTreeMap<SimplexRef, SimplexRef> = BTreeMap::new();
        for d in 0..self.names.len() {
            for r in self.simplices(d) {
                if sub.contains(&r) {
                    continue;
                }
                let faces = self.faces[d][r.idx]
                    .iter()
                    .map(|f| {
                        if sub.contains(&f.base) {
                            DegSimplex { surj: OrdMap::constant(d - 1, 0, 0), base: star }
                        } else {
                            DegSimplex { surj: f.surj.clone(), base: map[&f.base] }
                        }
                    })
                    .collect();
                let nr = out.add_simplex(d, self.name(r), faces)?;
                map.insert(r, nr);
            }
        }
        Ok(out)
    }

    /// The nerve of an ordered simplicial complex: `facets` are vertex lists,
    /// each increasing in a fixed total order of the vertices.
    pub fn from_ordered_complex(vertex_names: &[String], facets: &[Vec<usize>]) -> Result<SSet> {
        let mut by_dim: BTreeMap<usize, BTreeSet<Vec<usize>>> = BTreeMap::new();
        for f in facets {
            if f.windows(2).any(|w| w[0] >= w[1]) || f.iter().any(|&v| v >= vertex_names.len()) {
                return Err(Error::InvalidSSet(format!("facet {f:?} is not increasing")));
            }
            for k in 1..=f.len() {
                for s in subsets_of_size(f, k) {
                    by_dim.entry(k - 1).or_default().insert(s);
                }
            }
        }
        for v in 0..vertex_names.len() {
            by_dim.entry(0).or_default().insert(vec![v]);
        }
        let mut out = SSet::new();
        let mut refs: HashMap<Vec<usize>, SimplexRef> = HashMap::new();
        let name = |s: &[usize]| s.iter().map(|&v| vertex_names[v].as_str()).collect::<Vec<_>>().join(",");
        for (d, simplices) in by_dim {
            for s in simplices {
                let faces = if d == 0 {
                    vec![]
                } else {
                    (0..=d)
                        .map(|i| {
                            let mut t = s.clone();
                            t.remove(i);
                            DegSimplex::nondeg(refs[&t])
                        })
                        .collect()
                };
                let r = out.add_simplex(d, &name(&s), faces)?;
                refs.insert(s, r);
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> SSetJson {
        let mut simplices = serde_json::Map::new();
        for d in 0..self.names.len() {
            let list: Vec<SimplexJson> = self
                .simplices(d)
                .map(|r| SimplexJson {
                    id: self.name(r).to_string(),
                    faces: self.faces[d][r.idx]
                        .iter()
                        .map(|f| FaceJson { surj: f.surj.values().to_vec(), base: self.name(f.base).to_string() })
                        .collect(),
                })
                .collect();
            simplices.insert(d.to_string(), serde_json::to_value(list).expect("serializable"));
        }
        SSetJson { dims: self.top_dim().unwrap_or(0), simplices }
    }

    pub fn from_json(j: &SSetJson) -> Result<SSet> {
        let mut dims: Vec<(usize, Vec<SimplexJson>)> = j
            .simplices
            .iter()
            .map(|(k, v)| {
                let d = k.parse::<usize>().map_err(|_| Error::Parse(format!("bad dimension key {k:?}")))?;
                Ok((d, serde_json::from_value(v.clone())?))
            })
            .collect::<Result<_>>()?;
        dims.sort_by_key(|(d, _)| *d);
        let mut out = SSet::new();
        for (d, list) in dims {
            for s in list {
                let faces = s
                    .faces
                    .iter()
                    .map(|f| {
                        let surj = OrdMap::surjection(f.surj.clone())?;
                        let base = out
                            .lookup(surj.cod(), &f.base)
                            .ok_or_else(|| Error::Dangling(format!("{} (face of {})", f.base, s.id)))?;
                        DegSimplex::new(surj, base)
                    })
                    .collect::<Result<Vec<_>>>()?;
                out.add_simplex(d, &s.id, faces)?;
            }
        }
        out.validate()?;
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FaceJson {
    pub surj: Vec<usize>,
    pub base: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SimplexJson {
    pub id: String,
    pub faces: Vec<FaceJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SSetJson {
    pub dims: usize,
    pub simplices: serde_json::Map<String, serde_json::Value>,
}

/// A normalized chain: rational combination of nondegenerate simplices of one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub degree: usize,
    pub terms: BTreeMap<SimplexRef, Q>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain { degree, terms: BTreeMap::new() }
    }

    pub fn simplex(r: SimplexRef) -> Self {
        let mut c = Chain::zero(r.dim);
        c.add_term(r, Q::one());
        c
    }

    pub fn add_term(&mut self, r: SimplexRef, c: Q) {
        let e = self.terms.entry(r).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&r);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn boundary(&self, x: &SSet) -> Chain {
        let mut out = Chain::zero(self.degree.saturating_sub(1));
        for (&r, c) in &self.terms {
            for (s, d) in x.boundary_of(r).terms {
                out.add_term(s, c * d);
            }
        }
        out
    }
}

/// `X × Y` with the bookkeeping needed to pair simplices of the factors.
#[derive(Clone, Debug)]
pub struct ProductSSet {
    pub sset: SSet,
    comps: Vec<Vec<(DegSimplex, DegSimplex)>>,
    lookup: HashMap<(DegSimplex, DegSimplex), SimplexRef>,
}

/// Surjection collapsing the positions where neither factor jumps.
fn joint_collapse(a: &OrdMap, b: &OrdMap) -> OrdMap {
    let mut el = vec![0];
    for k in 1..=a.dom() {
        if a.at(k) != a.at(k - 1) || b.at(k) != b.at(k - 1) {
            el.push(k);
        }
    }
    PointedSubset::new(a.dom(), el).expect("pointed").pi()
}

fn join_vals(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl ProductSSet {
    pub fn new(x: &SSet, y: &SSet) -> Result<Self> {
        let mut p = ProductSSet { sset: SSet::new(), comps: vec![], lookup: HashMap::new() };
        let tx = x.top_dim().unwrap_or(0);
        let ty = y.top_dim().unwrap_or(0);
        for n in 0..=tx + ty {
            let all: Vec<usize> = (1..=n).collect();
            for px in 0..=tx.min(n) {
                for py in 0..=ty.min(n) {
                    if px + py < n {
                        continue;
                    }
                    for xs in x.simplices(px) {
                        for ys in y.simplices(py) {
                            for a in subsets_of_size(&all, px) {
                                let rest: Vec<usize> = all.iter().copied().filter(|k| !a.contains(k)).collect();
                                let extra = subsets_of_size(&a, px + py - n);
                                for shared in extra {
                                    let mut b = rest.clone();
                                    b.extend(&shared);
                                    b.sort_unstable();
                                    p.add(x, y, n, (&a, xs), (&b, ys))?;
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(p)
    }

    fn add(&mut self, x: &SSet, y: &SSet, n: usize, (a, xs): (&[usize], SimplexRef), (b, ys): (&[usize], SimplexRef)) -> Result<()> {
        let pa = PointedSubset::new(n, std::iter::once(0).chain(a.iter().copied()).collect())?.pi();
        let pb = PointedSubset::new(n, std::iter::once(0).chain(b.iter().copied()).collect())?.pi();
        let da = DegSimplex { surj: pa, base: xs };
        let db = DegSimplex { surj: pb, base: ys };
        let name = if n == xs.dim && n == ys.dim {
            format!("({},{})", x.name(xs), y.name(ys))
        } else {
            format!("({},{})[{};{}]", x.name(xs), y.name(ys), join_vals(da.surj.values()), join_vals(db.surj.values()))
        };
        let faces = if n == 0 {
            vec![]
        } else {
            (0..=n)
                .map(|i| {
                    let fa = x.face_of(&da, i)?;
                    let fb = y.face_of(&db, i)?;
                    self.pair(&fa, &fb)
                })
                .collect::<Result<Vec<_>>>()?
        };
        let r = self.sset.add_simplex(n, &name, faces)?;
        while self.comps.len() <= n {
            self.comps.push(vec![]);
        }
        self.comps[n].push((da.clone(), db.clone()));
        self.lookup.insert((da, db), r);
        Ok(())
    }

    /// EZ normal form of the simplex `(a, b)` of `X × Y`.
    pub fn pair(&self, a: &DegSimplex, b: &DegSimplex) -> Result<DegSimplex> {
        if a.dim() != b.dim() {
            return Err(Error::DomainMismatch { expected: a.dim(), found: b.dim() });
        }
        let pi = joint_collapse(&a.surj, &b.surj);
        let sec = pi.dagger()?;
        let ka = DegSimplex { surj: a.surj.after(&sec)?, base: a.base };
        let kb = DegSimplex { surj: b.surj.after(&sec)?, base: b.base };
        let r = *self
            .lookup
            .get(&(ka, kb))
            .ok_or_else(|| Error::Dangling(format!("product simplex ({a:?}, {b:?})")))?;
        Ok(DegSimplex { surj: pi, base: r })
    }

    /// The two projections of a nondegenerate product simplex.
    pub fn components(&self, r: SimplexRef) -> &(DegSimplex, DegSimplex) {
        &self.comps[r.dim][r.idx]
    }

    /// Projections of an arbitrary product simplex.
    pub fn project(&self, z: &DegSimplex) -> Result<(DegSimplex, DegSimplex)> {
        let (a, b) = self.components(z.base);
        Ok((
            DegSimplex { surj: a.surj.after(&z.surj)?, base: a.base },
            DegSimplex { surj: b.surj.after(&z.surj)?, base: b.base },
        ))
    }
}

pub fn point() -> SSet {
    delta(0)
}

pub fn delta(n: usize) -> SSet {
    let names: Vec<String> = (0..=n).map(|v| v.to_string()).collect();
    SSet::from_ordered_complex(&names, &[(0..=n).collect()]).expect("standard simplex")
}

pub fn boundary_delta(n: usize) -> SSet {
    assert!(n >= 1, "boundary of Δ_0 is empty");
    let names: Vec<String> = (0..=n).map(|v| v.to_string()).collect();
    let facets: Vec<Vec<usize>> = (0..=n).map(|i| (0..=n).filter(|&v| v != i).collect()).collect();
    SSet::from_ordered_complex(&names, &facets).expect("boundary of a simplex")
}

/// `BA = Δ_1^A` as the nerve of the cube poset; vertex `S ⊆ A` is named by
/// its indicator string.
pub fn ba(k: usize) -> SSet {
    let mut masks: Vec<u32> = (0..(1u32 << k)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let pos: HashMap<u32, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let names: Vec<String> = masks.iter().map(|m| (0..k).map(|a| if m >> a & 1 == 1 { '1' } else { '0' }).collect()).collect();
    let mut facets = Vec::new();
    for perm in permutations(k) {
        let mut chain = vec![pos[&0]];
        let mut m = 0u32;
        for &a in &perm {
            m |= 1 << a;
            chain.push(pos[&m]);
        }
        facets.push(chain);
    }
    SSet::from_ordered_complex(&names, &facets).expect("cube nerve")
}

/// Simplices of `BA` with some coordinate constant.
pub fn dba_refs(b: &SSet, k: usize) -> Vec<SimplexRef> {
    let full: String = "1".repeat(k);
    let empty: String = "0".repeat(k);
    b.all_simplices()
        .filter(|&r| {
            let name = b.name(r);
            let first = name.split(',').next().unwrap_or("");
            let last = name.rsplit(',').next().unwrap_or("");
            first != empty || last != full
        })
        .collect()
}

pub fn dba(k: usize) -> SSet {
    let b = ba(k);
    let keep: BTreeSet<SimplexRef> = dba_refs(&b, k).into_iter().collect();
    let mut out = SSet::new();
    let mut map = BTreeMap::new();
    for r in b.all_simplices().filter(|r| keep.contains(r)) {
        let faces = (0..if r.dim == 0 { 0 } else { r.dim + 1 })
            .map(|i| {
                let f = b.face(r, i);
                DegSimplex { surj: f.surj.clone(), base: map[&f.base] }
            })
            .collect();
        let nr = out.add_simplex(r.dim, b.name(r), faces).expect("subcomplex");
        map.insert(r, nr);
    }
    out
}

/// `S^A = BA/∂BA` for `|A| = k`; for `k = 0` the pointed two-point set.
pub fn sphere(k: usize) -> SSet {
    if k == 0 {
        let mut s = SSet::new();
        s.add_simplex(0, "*", vec![]).expect("vertex");
        s.add_simplex(0, "0", vec![]).expect("vertex");
        return s;
    }
    let b = ba(k);
    b.quotient(&dba_refs(&b, k)).expect("∂BA is a nonempty subcomplex")
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..k).collect(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_counts() {
        assert_eq!(delta(2).nd_counts(), vec![3, 3, 1]);
        assert_eq!(boundary_delta(2).nd_counts(), vec![3, 3]);
        assert_eq!(sphere(1).nd_counts(), vec![1, 1]);
        assert_eq!(sphere(2).euler_characteristic(), 2);
        assert_eq!(sphere(3).euler_characteristic(), 0);
        assert_eq!(ba(2).nd_counts(), vec![4, 5, 2]);
        for k in 0..4 {
            assert!(sphere(k).validate().is_ok());
        }
    }

    #[test]
    fn apply_map_examples() {
        let d1 = delta(1);
        let e = DegSimplex::nondeg(SimplexRef { dim: 1, idx: 0 });
        assert_eq!(d1.apply_map(&OrdMap::identity(1), &e).unwrap(), e);
        let c = d1.apply_map(&OrdMap::constant(1, 1, 0), &e).unwrap();
        assert_eq!(c.surj.values(), &[0, 0]);
        assert_eq!(d1.name(c.base), "0");
        let d2 = delta(2);
        let t = DegSimplex::nondeg(SimplexRef { dim: 2, idx: 0 });
        let f = d2.apply_map(&OrdMap::face(2, 1), &t).unwrap();
        assert!(f.is_nondegenerate());
        assert_eq!(d2.name(f.base), "0,2");
    }

    #[test]
    fn products() {
        let p = ProductSSet::new(&delta(1), &delta(1)).unwrap();
        assert_eq!(p.sset.nd_counts(), vec![4, 5, 2]);
        p.sset.validate().unwrap();
        let t = ProductSSet::new(&sphere(1), &sphere(1)).unwrap();
        assert_eq!(t.sset.euler_characteristic(), 0);
        assert_eq!(t.sset.normalized_chains().homology_dims(), vec![1, 2, 1]);
        let xp = ProductSSet::new(&boundary_delta(2), &point()).unwrap();
        assert_eq!(xp.sset.nd_counts(), boundary_delta(2).nd_counts());
    }

    #[test]
    fn quotients() {
        let d1 = delta(1);
        let circle = d1.quotient(&[SimplexRef { dim: 0, idx: 0 }, SimplexRef { dim: 0, idx: 1 }]).unwrap();
        assert_eq!(circle.nd_counts(), vec![1, 1]);
        assert!(matches!(d1.quotient(&[]), Err(Error::EmptySubcomplex)));
        assert!(matches!(d1.quotient(&[SimplexRef { dim: 1, idx: 0 }]), Err(Error::NotSubcomplex(_))));
    }

    #[test]
    fn chain_homology() {
        assert_eq!(delta(0).normalized_chains().homology_dims(), vec![1]);
        assert_eq!(sphere(1).normalized_chains().homology_dims(), vec![1, 1]);
        assert_eq!(boundary_delta(3).normalized_chains().homology_dims(), vec![1, 0, 1]);
        for k in 1..=3 {
            let h = sphere(k).normalized_chains().homology_dims();
            let mut expect = vec![0; k + 1];
            expect[0] = 1;
            expect[k] = 1;
            assert_eq!(h, expect, "sphere {k}");
        }
    }

    #[test]
    fn json_roundtrip() {
        let s = sphere(2);
        let j = serde_json::to_string(&s.to_json()).unwrap();
        let back = SSet::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back.nd_counts(), s.nd_counts());
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), j);
        let v = serde_json::to_value(delta(1).to_json()).unwrap();
        assert_eq!(v["dims"], 1);
        assert_eq!(v["simplices"]["1"][0]["faces"][0]["base"], "1");
    }
}
