//! Small worked cases, each compared against a value computed here by
//! other means (direct enumeration, hand elimination, or an adjointness
//! relation) rather than by the routine under test.

use std::collections::BTreeSet;

use derham::builder::build;
use derham::colimit::z_of;
use derham::homology_engine::{inclusion_map, induced_image_dims};
use derham::monoidal::{mu_phi, shuffle_sign};
use derham::phi_global::{phi_of_simplex, truncated_complex, PhiChain};
use derham::phi_local::PhiElt;
use derham::polyforms::{FormElt, Mono, Poly, ThetaElt, Wedge};
use derham::rational::{q, qr, Q};
use derham::simplicial_core::{compose, enumerate_shuffles, OrdMap, PointedSubset};
use derham::simplicial_sets::{DegSimplex, ProductSSet, SSet};
use num_traits::{One, Zero};

fn min_preimage(values: &[usize], cod: usize) -> Vec<usize> {
    (0..=cod).map(|j| values.iter().position(|&v| v == j).unwrap()).collect()
}

#[test]
fn dagger_of_composite() {
    let alpha = OrdMap::new(vec![0, 1, 1], 1).unwrap();
    let beta = OrdMap::new(vec![0, 0], 0).unwrap();
    let ba = compose(&beta, &alpha).unwrap();
    assert_eq!(ba.values(), &[0, 0, 0]);
    assert_eq!(ba.dagger().unwrap().values(), min_preimage(ba.values(), 0).as_slice());
    let rhs = compose(&alpha.dagger().unwrap(), &beta.dagger().unwrap()).unwrap();
    assert_eq!(ba.dagger().unwrap(), rhs);
}

#[test]
fn meet_by_iterating_projectors() {
    let a = PointedSubset::new(3, vec![0, 1, 3]).unwrap();
    let b = PointedSubset::new(3, vec![0, 2, 3]).unwrap();
    let step = compose(&a.eps(), &b.eps()).unwrap();
    let mut e = step.clone();
    loop {
        let next = compose(&e, &step).unwrap();
        if next == e {
            break;
        }
        e = next;
    }
    let expect = PointedSubset::new(3, vec![0, 3]).unwrap();
    assert_eq!(e, expect.eps());
    assert_eq!(a.meet(&b).unwrap(), expect);
}

#[test]
fn the_two_one_one_shuffles() {
    let got: BTreeSet<(Vec<usize>, Vec<usize>)> = enumerate_shuffles(&[1, 1])
        .iter()
        .map(|s| (s.part(0).values().to_vec(), s.part(1).values().to_vec()))
        .collect();
    let want: BTreeSet<_> = [(vec![0, 1, 1], vec![0, 0, 1]), (vec![0, 0, 1], vec![0, 1, 1])].into_iter().collect();
    assert_eq!(got, want);
    let signs: BTreeSet<Q> = enumerate_shuffles(&[1, 1]).iter().map(|s| shuffle_sign(s).unwrap()).collect();
    assert_eq!(signs, [q(1), q(-1)].into_iter().collect());
}

#[test]
fn face_of_the_triangle() {
    let x = build("delta:2").unwrap();
    let top = x.simplices(2).next().unwrap();
    let e = x.apply_map(&OrdMap::face(2, 1), &DegSimplex::nondeg(top)).unwrap();
    assert!(e.is_nondegenerate());
    assert_eq!(x.name(e.base), "0,2");
}

/// Strictly increasing chains of length `k+1` in the poset `[1] × [1]`.
fn square_chains(k: usize) -> usize {
    let pts = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let mut chains: Vec<Vec<(i32, i32)>> = pts.iter().map(|&p| vec![p]).collect();
    for _ in 0..k {
        chains = chains
            .into_iter()
            .flat_map(|c| {
                let last = *c.last().unwrap();
                pts.iter()
                    .filter(move |&&p| p.0 >= last.0 && p.1 >= last.1 && p != last)
                    .map(move |&p| {
                        let mut d = c.clone();
                        d.push(p);
                        d
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    chains.len()
}

#[test]
fn square_counts() {
    let x = build("product:(delta:1,delta:1)").unwrap();
    let want: Vec<usize> = (0..=2).map(square_chains).collect();
    assert_eq!(want, vec![4, 5, 2]);
    assert_eq!(x.nd_counts(), want);
}

#[test]
fn euler_characteristics() {
    let alt = |x: &SSet| x.nd_counts().iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum::<i64>();
    assert_eq!(alt(&build("product:(sphere:1,sphere:1)").unwrap()), 0);
    assert_eq!(alt(&build("sphere:2").unwrap()), 2);
    let circle = build("quotient:(delta:1,boundary:1)").unwrap();
    assert_eq!(circle.nd_counts(), vec![1, 1]);
    assert_eq!(build("delta:2").unwrap().nd_counts(), vec![3, 3, 1]);
    assert_eq!(build("boundary:2").unwrap().nd_counts(), vec![3, 3]);
}

/// Rank over ℚ by plain elimination on dense rows.
#[allow(clippy::needless_range_loop)]
fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map_or(0, |v| v.len());
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() / rows[r][c].clone();
                for j in 0..cols {
                    let s = rows[r][j].clone() * f.clone();
                    rows[i][j] -= s;
                }
            }
        }
        r += 1;
    }
    r
}

#[test]
fn tetrahedron_boundary_homology() {
    // faces of the 3-simplex: vertices, edges, triangles with the alternating boundary
    let verts: Vec<Vec<usize>> = (0..4).map(|v| vec![v]).collect();
    let edges: Vec<Vec<usize>> = (0..4).flat_map(|a| (a + 1..4).map(move |b| vec![a, b])).collect();
    let tris: Vec<Vec<usize>> =
        (0..4).flat_map(|a| (a + 1..4).flat_map(move |b| (b + 1..4).map(move |c| vec![a, b, c]))).collect();
    let bd = |hi: &[Vec<usize>], lo: &[Vec<usize>]| -> Vec<Vec<Q>> {
        hi.iter()
            .map(|s| {
                lo.iter()
                    .map(|f| {
                        (0..s.len())
                            .find(|&i| {
                                let mut t = s.clone();
                                t.remove(i);
                                &t == f
                            })
                            .map_or(Q::zero(), |i| if i % 2 == 0 { Q::one() } else { -Q::one() })
                    })
                    .collect()
            })
            .collect()
    };
    let r1 = rank(bd(&edges, &verts));
    let r2 = rank(bd(&tris, &edges));
    let want = vec![4 - r1, 6 - r1 - r2, 4 - r2];
    assert_eq!(want, vec![1, 0, 1]);
    assert_eq!(build("boundary:3").unwrap().normalized_chains().homology_dims(), want);
}

#[test]
fn polynomial_cases() {
    let s = Poly::t(2, 0).add(&Poly::t(2, 1)).add(&Poly::t(2, 2));
    assert_eq!(s.mul(&s), Poly::one(2));
    let alpha = [0, 1, 1];
    assert_eq!(Poly::t(1, 1).pullback(&alpha), Poly::t(2, 1).add(&Poly::t(2, 2)));
    let f = Poly::t(1, 0).mul(&Poly::t(1, 1));
    assert_eq!(f.pushforward(&[0, 0], 0).unwrap(), Poly::constant(0, qr(1, 6)));
}

#[test]
fn pushforward_of_one_along_a_degeneracy() {
    let got = Poly::one(2).pushforward(&[0, 1, 1], 1).unwrap();
    assert_eq!(got, Poly::t(1, 1));
    // ∫_{[1]} σ_*(1)·g = ∫_{[2]} σ^*g for several g
    for e in 0..4u32 {
        for f in 0..3u32 {
            let g = Poly::monomial(1, &[e, f], q(1));
            assert_eq!(got.mul(&g).integrate(), g.pullback(&[0, 1, 1]).integrate());
        }
    }
}

#[test]
fn wedge_pushforward_is_adjoint_on_basis() {
    let sigma = [0, 1, 1];
    for k in 0..=2usize {
        let ws: Vec<Wedge> = match k {
            0 => vec![Wedge::empty()],
            1 => vec![Wedge::single(1), Wedge::single(2)],
            _ => vec![Wedge::full(2)],
        };
        for w in ws {
            let a = ThetaElt::basis(2, w);
            for v in [Wedge::empty(), Wedge::single(1)].into_iter().filter(|v| v.len() == k) {
                let om = FormElt::basis(1, v);
                let lhs = a.pushforward(&sigma, 1).unwrap().pair(&om).integrate();
                assert_eq!(lhs, a.pair(&om.pullback(&sigma)).integrate(), "{w:?} {v:?}");
            }
        }
    }
    assert!(ThetaElt::w(1, 1).pushforward(&[0, 0], 0).unwrap().is_zero());
}

#[test]
fn witness_values() {
    let a = PhiElt::inject(1, &[0], ThetaElt::scalar(0, q(1))).unwrap();
    assert_eq!(a.big_pair(&a.xi_witness().unwrap()), q(1));
    let b = PhiElt::inject(1, &[0, 1], ThetaElt::w(1, 1)).unwrap();
    assert_eq!(b.big_pair(&b.xi_witness().unwrap()), qr(1, 6));
    let c = PhiElt::inject(2, &[0, 1, 2], ThetaElt::top(2)).unwrap();
    assert!(c.big_pair(&c.xi_witness().unwrap()) > Q::zero());
}

#[test]
fn phi_of_an_edge_and_a_loop_face() {
    let x = build("sphere:1").unwrap();
    let v = x.simplices(0).next().unwrap();
    let e = x.simplices(1).next().unwrap();
    let pe = phi_of_simplex(e);
    assert_eq!(pe, PhiChain::basis((e, Mono::one(1), Wedge::single(1))));
    let a = PhiElt::inject(1, &[1], ThetaElt::scalar(0, q(1))).unwrap();
    let got = PhiChain::from_phi(&x, &DegSimplex::nondeg(e), &a).unwrap();
    assert_eq!(got, PhiChain::basis((v, Mono::one(0), Wedge::empty())));
}

#[test]
fn circle_truncation_inclusion_in_degree_zero() {
    let x = build("sphere:1").unwrap();
    let (small, ks) = truncated_complex(&x, 1).unwrap();
    let (big, kb) = truncated_complex(&x, 3).unwrap();
    let f = inclusion_map(&ks, &kb).unwrap();
    assert_eq!(induced_image_dims(&f, &small, &big, 0).unwrap(), 1);
}

#[test]
fn product_of_two_edges() {
    let x = build("delta:1").unwrap();
    let xy = ProductSSet::new(&x, &x).unwrap();
    let e = phi_of_simplex(x.simplices(1).next().unwrap());
    let p = mu_phi(&x, &x, &xy, &e, &e).unwrap();
    let coeffs: Vec<Q> = p.terms().values().cloned().collect();
    assert_eq!(coeffs, vec![q(1), q(-1)]);
    assert!(p.terms().keys().all(|(s, _, _)| s.dim == 2));
}

#[test]
fn z_small_cases() {
    let id = OrdMap::identity(1);
    let z = z_of(&[id], 1).unwrap().unwrap();
    assert_eq!(z, ThetaElt::scalar(1, q(-1)));
    let f1 = OrdMap::new(vec![0, 1, 1], 1).unwrap();
    let f2 = OrdMap::new(vec![0, 0, 1], 1).unwrap();
    assert_eq!(z_of(&[f1, f2], 2).unwrap().unwrap(), ThetaElt::scalar(2, q(1)));
    assert!(z_of(&[OrdMap::constant(1, 1, 0)], 1).unwrap().is_none());
}

#[test]
fn json_round_trip_over_the_corpus() {
    for name in derham::verify::CORPUS {
        let x = build(name).unwrap();
        let j = serde_json::to_string(&x.to_json()).unwrap();
        let back = SSet::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back.nd_counts(), x.nd_counts(), "{name}");
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), j, "{name}");
    }
}
