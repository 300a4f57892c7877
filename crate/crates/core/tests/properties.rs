use proptest::prelude::*;
use rand::Rng;

use derham::builder::build;
use derham::phi_global::PhiChain;
use derham::polyforms::{FormElt, Poly};
use derham::random::*;
use derham::rational::{fmt_q, parse_q, qr, sign};
use derham::simplicial_core::{compose, OrdMap};
use derham::simplicial_sets::{DegSimplex, SSet};

fn ordmap(values: Vec<usize>, cod: usize) -> OrdMap {
    let mut v = values;
    v.sort_unstable();
    OrdMap::new(v.into_iter().map(|x| x.min(cod)).collect(), cod).unwrap()
}

prop_compose! {
    fn arb_ordmap(max_dom: usize, max_cod: usize)(dom in 0..=max_dom, cod in 0..=max_cod)
        (values in prop::collection::vec(0..=cod, dom + 1), cod in Just(cod)) -> OrdMap {
        ordmap(values, cod)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let x = qr(n, d);
        prop_assert_eq!(parse_q(&fmt_q(&x)).unwrap(), x);
    }

    #[test]
    fn factor_recomposes(a in arb_ordmap(5, 4)) {
        let (epi, mono) = a.factor();
        prop_assert!(epi.is_surjective());
        prop_assert!(mono.is_injective());
        prop_assert_eq!(compose(&mono, &epi).unwrap(), a);
    }

    #[test]
    fn dagger_is_a_section(a in arb_ordmap(5, 4)) {
        let (epi, _) = a.factor();
        let d = epi.dagger().unwrap();
        prop_assert!(compose(&epi, &d).unwrap().is_identity());
        prop_assert!(compose(&d, &epi).unwrap().values().iter().enumerate().all(|(i, &v)| v <= i));
    }

    #[test]
    fn normal_form_is_idempotent(seed: u64, n in 0usize..4) {
        let mut rng = gen(seed);
        let f = rand_raw_poly(&mut rng, n, 4, 5);
        let g = f.normalized();
        prop_assert!(g.is_canonical());
        prop_assert_eq!(g.normalized(), g.clone());
        prop_assert_eq!(f.integrate(), g.integrate());
    }

    #[test]
    fn pullback_is_functorial(seed: u64, a in arb_ordmap(3, 3), b in arb_ordmap(3, 3)) {
        // α: [k] -> [n], β: [j] -> [k]; make the domains line up
        let b = ordmap(b.values().to_vec(), a.dom());
        let f = rand_poly(&mut gen(seed), a.cod(), 3, 3);
        let ab = compose(&a, &b).unwrap();
        prop_assert_eq!(f.pullback(a.values()).pullback(b.values()), f.pullback(ab.values()));
    }

    #[test]
    fn pushforward_keeps_the_integral(seed: u64, n in 0usize..4, m in 0usize..4) {
        let (n, m) = (n.max(m), n.min(m));
        let mut rng = gen(seed);
        let sigma = rand_surjective_map(&mut rng, n, m);
        let f = rand_poly(&mut rng, n, 3, 4);
        prop_assert_eq!(f.pushforward(&sigma, m).unwrap().integrate(), f.integrate());
    }

    #[test]
    fn de_rham_differential(seed: u64, n in 0usize..4) {
        let mut rng = gen(seed);
        let p = rng.gen_range(0..=n);
        let r = rng.gen_range(0..=n - p);
        let a = rand_form(&mut rng, n, p, 3);
        let b = rand_form(&mut rng, n, r, 3);
        prop_assert!(a.d().d().is_zero());
        let lhs = a.wedge(&b).d();
        let rhs = a.d().wedge(&b).add(&a.wedge(&b.d()).scale(&sign(p % 2 == 1)));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.wedge(&b), b.wedge(&a).scale(&sign(p * r % 2 == 1)));
    }

    #[test]
    fn local_differential_squares_to_zero(seed: u64, n in 0usize..4) {
        let mut rng = gen(seed);
        let deg = rng.gen_range(0..=n);
        let a = rand_phi_elt(&mut rng, n, deg, 4);
        prop_assume!(deg >= 2);
        prop_assert!(a.delta().delta().is_zero());
    }

    #[test]
    fn global_adjunction(seed: u64, which in 0usize..4) {
        let x = build(["delta:2", "sphere:2", "boundary:3", "product:(sphere:1,delta:1)"][which]).unwrap();
        let mut rng = gen(seed);
        let d = rng.gen_range(1..=x.top_dim().unwrap());
        let c = rand_phi_chain(&mut rng, &x, d, 3);
        let om = rand_cochain(&mut rng, &x, d - 1, 2);
        prop_assert_eq!(c.boundary(&x).unwrap().pair(&om), c.pair(&om.d()) * sign(d % 2 == 1));
    }

    #[test]
    fn chain_boundary_commutes_with_phi(seed: u64, which in 0usize..3) {
        let x = build(["delta:3", "sphere:2", "product:(delta:1,delta:1)"][which]).unwrap();
        let mut rng = gen(seed);
        let d = rng.gen_range(1..=x.top_dim().unwrap());
        let c = rand_chain(&mut rng, &x, d);
        let lhs = derham::phi_global::phi_of_chain(&c).boundary(&x).unwrap();
        prop_assert_eq!(lhs, derham::phi_global::phi_of_chain(&c.boundary(&x)));
    }

    #[test]
    fn ez_faces_commute(seed: u64, which in 0usize..3) {
        let x: SSet = build(["delta:3", "sphere:2", "product:(delta:1,delta:1)"][which]).unwrap();
        let mut rng = gen(seed);
        let top = x.top_dim().unwrap();
        let n = rng.gen_range(2..=top.max(2)).min(top);
        prop_assume!(n >= 2);
        let s = x.simplices(n).next().unwrap();
        let i = rng.gen_range(0..=n);
        let j = rng.gen_range(0..n);
        // d_j d_i = d_{i-1} d_j for j < i
        let sd = DegSimplex::nondeg(s);
        if j < i {
            let lhs = x.face_of(&x.face_of(&sd, i).unwrap(), j).unwrap();
            let rhs = x.face_of(&x.face_of(&sd, j).unwrap(), i - 1).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn zero_pairings(n in 0usize..4) {
        let z = PhiChain::zero(1);
        prop_assert!(z.pair(&derham::phi_global::CochainForm::zero(1)) == qr(0, 1));
        prop_assert!(Poly::zero(n).integrate() == qr(0, 1));
        prop_assert!(FormElt::zero(n, 0).is_zero());
    }
}
