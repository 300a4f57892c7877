//! Exact linear algebra for finite chain complexes over ℚ.
//!
//! Elimination is fraction free: each rational row is scaled to a primitive
//! integer row, and row operations `r <- p_c r - r_c p` are followed by
//! removal of the content, so entries stay integral and small.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Q;

pub type SparseVec = BTreeMap<usize, Q>;
type IntVec = BTreeMap<usize, BigInt>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pivot {
    /// Rows inserted in order, pivot on the first nonzero column.
    FirstNonzero,
    /// Column sweep choosing the row with the largest numerator.
    MaxNumerator,
}

fn to_int(v: &SparseVec) -> IntVec {
    let l = v.values().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: IntVec = v
        .iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(&k, x)| (k, x.numer() * (&l / x.denom())))
        .collect();
    primitive(&mut out);
    out
}

fn primitive(v: &mut IntVec) {
    let mut g = BigInt::zero();
    for x in v.values() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return;
    }
    let neg = v.values().next().map(|x| x.is_negative()).unwrap_or(false);
    if neg {
        g = -g;
    }
    if !g.is_one() {
        for x in v.values_mut() {
            *x = &*x / &g;
        }
    }
}

/// `a*r - b*p`, then made primitive.
fn combine(r: &IntVec, a: &BigInt, p: &IntVec, b: &BigInt) -> IntVec {
    let mut out: IntVec = r.iter().map(|(&k, x)| (k, x * a)).collect();
    for (&k, x) in p {
        let e = out.entry(k).or_insert_with(BigInt::zero);
        *e -= x * b;
        if e.is_zero() {
            out.remove(&k);
        }
    }
    primitive(&mut out);
    out
}

/// Row echelon form keyed by leading column; only columns below `limit`
/// may carry pivots.
struct Echelon {
    pivots: HashMap<usize, IntVec>,
    limit: usize,
}

impl Echelon {
    fn new(limit: usize) -> Self {
        Echelon { pivots: HashMap::new(), limit }
    }

    fn reduce(&self, mut v: IntVec) -> IntVec {
        while let Some((&c, vc)) = v.first_key_value() {
            if c >= self.limit {
                break;
            }
            let Some(p) = self.pivots.get(&c) else { break };
            let vc = vc.clone();
            v = combine(&v, &p[&c], p, &vc);
        }
        v
    }

    /// Inserts `v`; returns the residual when it adds no pivot.
    fn insert(&mut self, v: IntVec) -> Option<IntVec> {
        let v = self.reduce(v);
        match v.first_key_value() {
            Some((&c, _)) if c < self.limit => {
                self.pivots.insert(c, v);
                None
            }
            _ => Some(v),
        }
    }
}

pub fn rank_of(vectors: &[SparseVec], pivot: Pivot) -> usize {
    match pivot {
        Pivot::FirstNonzero => {
            let mut e = Echelon::new(usize::MAX);
            for v in vectors {
                e.insert(to_int(v));
            }
            e.pivots.len()
        }
        Pivot::MaxNumerator => {
            let mut rows: Vec<IntVec> = vectors.iter().map(to_int).filter(|r| !r.is_empty()).collect();
            let cols: BTreeSet<usize> = rows.iter().flat_map(|r| r.keys().copied()).collect();
            let mut rank = 0;
            for c in cols {
                let best = rows
                    .iter()
                    .enumerate()
                    .filter_map(|(i, r)| r.get(&c).map(|x| (i, x.abs())))
                    .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
                let Some((i, _)) = best else { continue };
                let p = rows.swap_remove(i);
                let pc = p[&c].clone();
                for r in rows.iter_mut() {
                    if let Some(rc) = r.get(&c).cloned() {
                        *r = combine(r, &pc, &p, &rc);
                    }
                }
                rows.retain(|r| !r.is_empty());
                rank += 1;
            }
            rank
        }
    }
}

/// Coefficient vectors `c` with `Σ_j c_j cols[j] = 0`, a basis of the kernel.
pub fn kernel_of_columns(cols: &[SparseVec], height: usize) -> Vec<SparseVec> {
    let mut e = Echelon::new(height);
    let mut out = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        let mut v = c.clone();
        v.insert(height + j, Q::one());
        if let Some(res) = e.insert(to_int(&v)) {
            out.push(res.into_iter().map(|(k, x)| (k - height, Q::from_integer(x))).collect());
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![SparseVec::new(); rows] }
    }

    pub fn from_dense(rows: Vec<Vec<Q>>) -> Result<Self> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::SizeMismatch("ragged dense matrix".into()));
        }
        let data = rows
            .into_iter()
            .map(|r| r.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect::<Vec<SparseVec>>();
        Ok(QMatrix { rows: data.len(), cols, data })
    }

    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Result<Self> {
        let mut m = QMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (&i, x) in col {
                if i >= rows {
                    return Err(Error::SizeMismatch(format!("row {i} out of {rows}")));
                }
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.data[i].get(&j).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        if x.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, x);
        }
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        let mut out = vec![SparseVec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (&j, x) in r {
                out[j].insert(i, x.clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, r) in self.data.iter().enumerate() {
            let mut acc = Q::zero();
            for (j, x) in v {
                if let Some(y) = r.get(j) {
                    acc += x * y;
                }
            }
            if !acc.is_zero() {
                out.insert(i, acc);
            }
        }
        out
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!("{}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for (i, r) in self.data.iter().enumerate() {
            let mut acc = SparseVec::new();
            for (k, x) in r {
                for (&j, y) in &other.data[*k] {
                    *acc.entry(j).or_insert_with(Q::zero) += x * y;
                }
            }
            acc.retain(|_, x| !x.is_zero());
            out.data[i] = acc;
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.data, Pivot::FirstNonzero)
    }

    pub fn rank_with(&self, pivot: Pivot) -> usize {
        rank_of(&self.data, pivot)
    }

    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        kernel_of_columns(&self.columns(), self.rows)
    }
}

/// Finite chain complex concentrated in degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct ChainComplexQ {
    labels: Vec<Vec<String>>,
    /// `boundary[k]: C_k -> C_{k-1}`, shape `(dim C_{k-1}, dim C_k)`;
    /// `boundary[0]` has zero rows.
    boundary: Vec<QMatrix>,
}

impl ChainComplexQ {
    pub fn new(labels: Vec<Vec<String>>, boundary: Vec<QMatrix>) -> Result<Self> {
        if labels.len() != boundary.len() {
            return Err(Error::SizeMismatch("labels vs boundaries".into()));
        }
        for (k, b) in boundary.iter().enumerate() {
            let rows = if k == 0 { 0 } else { labels[k - 1].len() };
            if b.shape() != (rows, labels[k].len()) {
                return Err(Error::SizeMismatch(format!("boundary in degree {k} has shape {:?}", b.shape())));
            }
        }
        let c = ChainComplexQ { labels, boundary };
        c.check_dd()?;
        Ok(c)
    }

    pub fn check_dd(&self) -> Result<()> {
        for k in 2..self.boundary.len() {
            let dd = self.boundary[k - 1].mul(&self.boundary[k])?;
            if !dd.is_zero() {
                return Err(Error::NotChainMap { degree: k, witness: "boundary squares to a nonzero map".into() });
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.labels.get(k).map(|l| l.len()).unwrap_or(0)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.labels.iter().map(|l| l.len()).collect()
    }

    pub fn labels(&self, k: usize) -> &[String] {
        &self.labels[k]
    }

    pub fn boundary(&self, k: usize) -> Option<&QMatrix> {
        self.boundary.get(k)
    }

    fn boundary_rank(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.boundary.get(k).map(|b| b.rank()).unwrap_or(0)
    }

    pub fn homology_dims(&self) -> Vec<usize> {
        (0..self.len()).map(|k| self.dim(k) - self.boundary_rank(k) - self.boundary_rank(k + 1)).collect()
    }

    pub fn cycles(&self, k: usize) -> Vec<SparseVec> {
        if k == 0 {
            return (0..self.dim(0)).map(|i| SparseVec::from([(i, Q::one())])).collect();
        }
        self.boundary[k].kernel_basis()
    }

    pub fn boundaries(&self, k: usize) -> Vec<SparseVec> {
        match self.boundary.get(k + 1) {
            Some(b) => b.columns(),
            None => vec![],
        }
    }

    /// Whether `v ∈ C_k` is a boundary.
    pub fn is_boundary(&self, k: usize, v: &SparseVec) -> bool {
        let b = self.boundaries(k);
        let r = rank_of(&b, Pivot::FirstNonzero);
        let mut all = b;
        all.push(v.clone());
        rank_of(&all, Pivot::FirstNonzero) == r
    }
}

/// Degreewise matrices `f_k: C_k -> C'_k`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub maps: Vec<QMatrix>,
}

pub fn verify_chain_map(f: &ChainMap, src: &ChainComplexQ, dst: &ChainComplexQ) -> Result<()> {
    for k in 0..src.len() {
        let fk = f.maps.get(k).ok_or_else(|| Error::SizeMismatch(format!("missing map in degree {k}")))?;
        if fk.shape() != (dst.dim(k), src.dim(k)) {
            return Err(Error::SizeMismatch(format!("map in degree {k} has shape {:?}", fk.shape())));
        }
        if k == 0 {
            continue;
        }
        let left = dst.boundary[k].mul(fk)?;
        let right = f.maps[k - 1].mul(&src.boundary[k])?;
        if left != right {
            let cols_l = left.columns();
            let cols_r = right.columns();
            let j = (0..cols_l.len()).find(|&j| cols_l[j] != cols_r[j]).unwrap_or(0);
            return Err(Error::NotChainMap { degree: k, witness: format!("generator {}", src.labels[k][j]) });
        }
    }
    Ok(())
}

fn apply_all(f: &QMatrix, vs: &[SparseVec]) -> Vec<SparseVec> {
    vs.iter().map(|v| f.apply(v)).collect()
}

/// Dimension of the image of `H_k(f)`.
pub fn induced_image_dims(f: &ChainMap, src: &ChainComplexQ, dst: &ChainComplexQ, k: usize) -> Result<usize> {
    verify_chain_map(f, src, dst)?;
    if k >= src.len() {
        return Ok(0);
    }
    let z = apply_all(&f.maps[k], &src.cycles(k));
    let b = dst.boundaries(k);
    let base = rank_of(&b, Pivot::FirstNonzero);
    let all: Vec<SparseVec> = b.into_iter().chain(z).collect();
    Ok(rank_of(&all, Pivot::FirstNonzero) - base)
}

/// Whether the images of `H_k(f)` and `H_k(g)` in `H_k(dst)` coincide.
pub fn same_homology_image(
    f: (&ChainMap, &ChainComplexQ),
    g: (&ChainMap, &ChainComplexQ),
    dst: &ChainComplexQ,
    k: usize,
) -> Result<bool> {
    verify_chain_map(f.0, f.1, dst)?;
    verify_chain_map(g.0, g.1, dst)?;
    let b = dst.boundaries(k);
    let zf = if k < f.1.len() { apply_all(&f.0.maps[k], &f.1.cycles(k)) } else { vec![] };
    let zg = if k < g.1.len() { apply_all(&g.0.maps[k], &g.1.cycles(k)) } else { vec![] };
    let r = |parts: &[&[SparseVec]]| {
        let all: Vec<SparseVec> = parts.iter().flat_map(|p| p.iter().cloned()).collect();
        rank_of(&all, Pivot::FirstNonzero)
    };
    let rf = r(&[&b, &zf]);
    let rg = r(&[&b, &zg]);
    let both = r(&[&b, &zf, &zg]);
    Ok(rf == both && rg == both)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DegreeComparison {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub image_dim: usize,
    pub injective: bool,
    pub surjective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiIsoReport {
    pub degrees: Vec<DegreeComparison>,
    pub iso: bool,
    pub failing_degree: Option<usize>,
}

pub fn quasi_iso_check(
    f: &ChainMap,
    src: &ChainComplexQ,
    dst: &ChainComplexQ,
    degrees: std::ops::RangeInclusive<usize>,
) -> Result<QuasiIsoReport> {
    verify_chain_map(f, src, dst)?;
    let hs = src.homology_dims();
    let ht = dst.homology_dims();
    let mut out = Vec::new();
    for k in degrees {
        let s = hs.get(k).copied().unwrap_or(0);
        let t = ht.get(k).copied().unwrap_or(0);
        let im = induced_image_dims(f, src, dst, k)?;
        out.push(DegreeComparison { degree: k, source_dim: s, target_dim: t, image_dim: im, injective: im == s, surjective: im == t });
    }
    let failing_degree = out.iter().find(|d| !(d.injective && d.surjective)).map(|d| d.degree);
    Ok(QuasiIsoReport { iso: failing_degree.is_none(), degrees: out, failing_degree })
}

/// Builds the subcomplex spanned by `seeds` and closed under `boundary`.
/// Keys of degree `k` map to keys of degree `k-1`.
pub fn closed_subcomplex<K, F, L>(seeds: Vec<BTreeSet<K>>, boundary: F, label: L) -> Result<(ChainComplexQ, Vec<Vec<K>>)>
where
    K: Ord + Clone,
    F: Fn(&K) -> Vec<(K, Q)>,
    L: Fn(&K) -> String,
{
    let mut keys = seeds;
    let mut images: Vec<BTreeMap<K, Vec<(K, Q)>>> = vec![BTreeMap::new(); keys.len()];
    for k in (1..keys.len()).rev() {
        let current: Vec<K> = keys[k].iter().cloned().collect();
        for key in current {
            let img = boundary(&key);
            for (t, _) in &img {
                keys[k - 1].insert(t.clone());
            }
            images[k].insert(key, img);
        }
    }
    let ordered: Vec<Vec<K>> = keys.into_iter().map(|s| s.into_iter().collect()).collect();
    let index: Vec<BTreeMap<K, usize>> =
        ordered.iter().map(|v| v.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect()).collect();
    let mut mats = Vec::with_capacity(ordered.len());
    for k in 0..ordered.len() {
        if k == 0 {
            mats.push(QMatrix::zeros(0, ordered[0].len()));
            continue;
        }
        let cols: Vec<SparseVec> = ordered[k]
            .iter()
            .map(|key| {
                let mut col = SparseVec::new();
                for (t, c) in &images[k][key] {
                    *col.entry(index[k - 1][t]).or_insert_with(Q::zero) += c;
                }
                col.retain(|_, x| !x.is_zero());
                col
            })
            .collect();
        mats.push(QMatrix::from_columns(ordered[k - 1].len(), &cols)?);
    }
    let labels = ordered.iter().map(|v| v.iter().map(&label).collect()).collect();
    Ok((ChainComplexQ::new(labels, mats)?, ordered))
}

/// Chain map given by key inclusion `small ⊆ big`.
pub fn inclusion_map<K: Ord>(small: &[Vec<K>], big: &[Vec<K>]) -> Result<ChainMap> {
    let mut maps = Vec::new();
    for (k, keys) in small.iter().enumerate() {
        let idx: BTreeMap<&K, usize> = big.get(k).map(|v| v.iter().enumerate().map(|(i, x)| (x, i)).collect()).unwrap_or_default();
        let rows = big.get(k).map(|v| v.len()).unwrap_or(0);
        let mut m = QMatrix::zeros(rows, keys.len());
        for (j, key) in keys.iter().enumerate() {
            let i = *idx.get(key).ok_or_else(|| Error::SizeMismatch(format!("degree {k} key missing from target")))?;
            m.set(i, j, Q::one());
        }
        maps.push(m);
    }
    Ok(ChainMap { maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn dense(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_dense(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(dense(&[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).rank(), 2);
        assert_eq!(dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).rank_with(Pivot::MaxNumerator), 2);
        assert_eq!(QMatrix::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn kernel_is_kernel() {
        let m = dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).is_empty());
    }

    #[test]
    fn circle_and_interval() {
        let circle = ChainComplexQ::new(
            vec![vec!["v".into()], vec!["e".into()]],
            vec![QMatrix::zeros(0, 1), QMatrix::zeros(1, 1)],
        )
        .unwrap();
        assert_eq!(circle.homology_dims(), vec![1, 1]);
        let interval = ChainComplexQ::new(
            vec![vec!["a".into(), "b".into()], vec!["e".into()]],
            vec![QMatrix::zeros(0, 2), dense(&[&[-1], &[1]])],
        )
        .unwrap();
        assert_eq!(interval.homology_dims(), vec![1, 0]);
        let id = ChainMap { maps: vec![dense(&[&[1, 0], &[0, 1]]), dense(&[&[1]])] };
        assert_eq!(induced_image_dims(&id, &interval, &interval, 0).unwrap(), 1);
        let zero = ChainMap { maps: vec![QMatrix::zeros(2, 2), QMatrix::zeros(1, 1)] };
        assert_eq!(induced_image_dims(&zero, &interval, &interval, 0).unwrap(), 0);
        let broken = ChainMap { maps: vec![dense(&[&[1, 0], &[0, 0]]), dense(&[&[1]])] };
        assert!(matches!(induced_image_dims(&broken, &interval, &interval, 0), Err(Error::NotChainMap { degree: 1, .. })));
    }
}
