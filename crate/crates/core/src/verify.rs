//! Named verification suites. Each check records how many cases ran and
//! the first counterexample, if any.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::builder::build;
use crate::colimit::{
    decompose, delta_z_counterexample, delta_z_flipped_counterexample, lambda_star, nu, pieces_phi, zeta_prime, zt_factor_check, Label, StabClass,
};
use crate::error::{Error, Result};
use crate::monoidal::{assoc_map, mu_phi, mu_theta, relabel, shuffle_product_n, shuffle_sign, swap_map};
use crate::phi_global::{phi_of_chain, weight_seeds, PhiChain};
use crate::phi_local::PhiElt;
use crate::polyforms::{FormElt, Mono, Poly, ThetaElt, Wedge};
use crate::random::*;
use crate::rational::{factorial, fmt_q, perm_sign, q, sign, Q};
use crate::simplicial_core::{binomial, enumerate_shuffles, operad_l, operad_l_inverse, operad_r, operad_r_inverse, subsets_of_size, OrdMap};
use crate::simplicial_sets::{Chain, DegSimplex, ProductSSet, SSet};

pub const SUITES: [&str; 9] =
    ["integration", "adjunction", "pushforward", "delta-squared", "theta", "monoidal", "colimit", "ez", "shuffles"];

/// Complexes used by the suites that need global data.
pub const CORPUS: [&str; 10] = [
    "delta:0",
    "delta:1",
    "delta:2",
    "delta:3",
    "boundary:2",
    "boundary:3",
    "sphere:1",
    "sphere:2",
    "product:(sphere:1,sphere:1)",
    "product:(delta:1,delta:1)",
];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check { name: name.into(), cases: 0, failures: 0, passed: true, counterexample: None }
    }

    fn case(&mut self, r: Result<bool>, witness: impl FnOnce() -> String) {
        self.cases += 1;
        let bad = match r {
            Ok(true) => return,
            Ok(false) => witness(),
            Err(e) => format!("{}: error: {e}", witness()),
        };
        self.failures += 1;
        self.passed = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(bad);
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

pub fn run_suite(name: &str, cases: usize, seed: u64) -> Result<SuiteReport> {
    let checks = match name {
        "integration" => integration(cases, seed),
        "adjunction" => adjunction(cases, seed),
        "pushforward" => pushforward(cases, seed),
        "delta-squared" => delta_squared(cases, seed),
        "theta" => theta(cases, seed),
        "monoidal" => monoidal(cases, seed),
        "colimit" => colimit(cases, seed),
        "ez" => ez(),
        "shuffles" => shuffles(),
        _ => return Err(Error::UnknownSuite(name.into())),
    }?;
    let passed = checks.iter().all(|c| c.passed);
    Ok(SuiteReport { suite: name.into(), seed, cases, passed, checks })
}

/// Runs suites on separate threads; results come back in request order.
pub fn run_suites(names: &[String], cases: usize, seed: u64) -> Result<Vec<SuiteReport>> {
    for n in names {
        if !SUITES.contains(&n.as_str()) {
            return Err(Error::UnknownSuite(n.clone()));
        }
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = names.iter().map(|n| s.spawn(move || run_suite(n, cases, seed))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    })
}

/// Wall-clock seconds per suite.
pub fn bench(names: &[String], cases: usize, seed: u64) -> Result<Vec<(String, f64, bool)>> {
    let mut out = vec![];
    for n in names {
        let t = Instant::now();
        let r = run_suite(n, cases, seed)?;
        out.push((n.clone(), t.elapsed().as_secs_f64(), r.passed));
    }
    Ok(out)
}

fn corpus() -> Result<Vec<(String, SSet)>> {
    CORPUS.iter().map(|s| Ok((s.to_string(), build(s)?))).collect()
}

fn sub_seed(seed: u64, tag: u64) -> Gen {
    gen(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(tag))
}

fn raw_mul(f: &Poly, g: &Poly) -> Poly {
    let mut terms = vec![];
    for (a, x) in f.terms() {
        for (b, y) in g.terms() {
            terms.push((a.mul(b), x * y));
        }
    }
    Poly::raw(f.n(), terms)
}

fn all_multi_indices(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = vec![];
        for v in &out {
            let used: u32 = v.iter().sum();
            for e in 0..=max - used {
                let mut w = v.clone();
                w.push(e);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

// ---------------------------------------------------------------- integration

pub fn check_int_s_table() -> Check {
    let mut c = Check::new("int-s table (n ≤ 3, |ν| ≤ 4)");
    for n in 0..=3usize {
        for nu in all_multi_indices(n, 4) {
            let f = nu.iter().enumerate().fold(Poly::one(n), |acc, (k, &e)| {
                (0..e).fold(acc, |a, _| a.mul(&Poly::s(n, k + 1)))
            });
            let mut mu = Q::one();
            let mut run = 0u32;
            for &e in &nu {
                run += e + 1;
                mu *= q(run as i64);
            }
            let want = Q::one() / mu;
            let got = f.integrate();
            c.case(Ok(got == want), || format!("n={n} ν={nu:?}: {} ≠ {}", fmt_q(&got), fmt_q(&want)));
        }
    }
    c
}

pub fn check_int_well_defined(cases: usize, seed: u64) -> Check {
    let mut c = Check::new("∫((1−Σt)f) = 0");
    let mut rng = sub_seed(seed, 1);
    for _ in 0..cases {
        let n = rng.gen_range(0..=4);
        let f = rand_raw_poly(&mut rng, n, 4, 4);
        let rel = Poly::raw(n, std::iter::once((Mono::one(n), Q::one())).chain((0..=n).map(|i| (Mono::var(n, i), -Q::one()))));
        let v = raw_mul(&rel, &f).integrate();
        c.case(Ok(v.is_zero()), || format!("n={n} f={f:?}: {}", fmt_q(&v)));
    }
    c
}

pub fn check_int_prod(cases: usize, seed: u64) -> Check {
    let mut c = Check::new("∫f·∫g = Σ_shuffles ∫ζ*f·ξ*g");
    let mut rng = sub_seed(seed, 2);
    for _ in 0..cases {
        let n = rng.gen_range(0..=5);
        let m = rng.gen_range(0..=5 - n);
        let f = Poly::raw(n, [(rand_mono(&mut rng, n, 3), q(1))]);
        let g = Poly::raw(m, [(rand_mono(&mut rng, m, 3), q(1))]);
        let lhs = f.integrate() * g.integrate();
        let rhs = enumerate_shuffles(&[n, m]).iter().fold(Q::zero(), |acc, sh| {
            acc + raw_mul(&f.pullback(sh.part(0).values()), &g.pullback(sh.part(1).values())).integrate()
        });
        c.case(Ok(lhs == rhs), || format!("f={f:?} g={g:?}: {} vs {}", fmt_q(&lhs), fmt_q(&rhs)));
    }
    c
}

fn integration(cases: usize, seed: u64) -> Result<Vec<Check>> {
    Ok(vec![check_int_s_table(), check_int_well_defined(cases, seed), check_int_prod(cases, seed)])
}

// ---------------------------------------------------------------- pushforward

fn pushforward(cases: usize, seed: u64) -> Result<Vec<Check>> {
    let mut rng = sub_seed(seed, 3);
    let mut proj = Check::new("∫ f·σ*g = ∫ σ_*f·g");
    let mut total = Check::new("∫ σ_*f = ∫ f");
    let mut functor = Check::new("(τσ)_* = τ_*σ_*");
    let mut wedge = Check::new("∫⟨σ_*a, ω⟩ = ∫⟨a, σ*ω⟩");
    let mut chain = Check::new("σ_* δ = δ σ_* on Φ_I");
    let mut pfunctor = Check::new("(τσ)_* = τ_*σ_* on Φ_I");
    for _ in 0..cases {
        let m = rng.gen_range(0..=3);
        let n = rng.gen_range(m..=4);
        let sigma = rand_surjective_map(&mut rng, n, m);
        let f = rand_poly(&mut rng, n, 3, 3);
        let g = rand_poly(&mut rng, m, 3, 3);
        let sf = f.pushforward(&sigma, m);
        proj.case(
            sf.as_ref().map(|sf| f.mul(&g.pullback(&sigma)).integrate() == sf.mul(&g).integrate()).map_err(clone_err),
            || format!("σ={sigma:?} f={f:?} g={g:?}"),
        );
        total.case(sf.as_ref().map(|sf| sf.integrate() == f.integrate()).map_err(clone_err), || {
            format!("σ={sigma:?} f={f:?}")
        });
        let k = rng.gen_range(0..=m);
        let tau = rand_surjective_map(&mut rng, m, k);
        let comp: Vec<usize> = sigma.iter().map(|&v| tau[v]).collect();
        functor.case(
            (|| Ok(f.pushforward(&comp, k)? == f.pushforward(&sigma, m)?.pushforward(&tau, k)?))(),
            || format!("σ={sigma:?} τ={tau:?} f={f:?}"),
        );
        let deg = rng.gen_range(0..=m);
        let a = rand_theta(&mut rng, n, deg, 2);
        let om = rand_form(&mut rng, m, deg, 2);
        wedge.case(
            (|| {
                let lhs = a.pushforward(&sigma, m)?.pair(&om).integrate();
                let rhs = a.pair(&om.pullback(&sigma)).integrate();
                Ok(lhs == rhs)
            })(),
            || format!("σ={sigma:?} a={a:?} ω={om:?}"),
        );
        let d = rng.gen_range(0..=n);
        let x = rand_phi_elt(&mut rng, n, d, 4);
        let any = rand_map(&mut rng, n, m);
        chain.case(
            (|| {
                if d == 0 {
                    return Ok(true);
                }
                Ok(x.delta().push(&any, m)? == x.push(&any, m)?.delta())
            })(),
            || format!("σ={any:?} a={x:?}"),
        );
        let tau2 = rand_map(&mut rng, m, k);
        let comp2: Vec<usize> = any.iter().map(|&v| tau2[v]).collect();
        pfunctor.case((|| Ok(x.push(&comp2, k)? == x.push(&any, m)?.push(&tau2, k)?))(), || {
            format!("σ={any:?} τ={tau2:?} a={x:?}")
        });
    }
    Ok(vec![proj, total, functor, wedge, chain, pfunctor])
}

fn clone_err(e: &Error) -> Error {
    Error::Colimit(e.to_string())
}

// ---------------------------------------------------------------- delta-squared

pub fn check_delta_squares(cases: usize, seed: u64) -> Vec<Check> {
    let mut rng = sub_seed(seed, 4);
    let mut dp = Check::new("(δ′)² = 0");
    let mut dpp = Check::new("(δ″)² = 0");
    let mut anti = Check::new("δ′δ″ + δ″δ′ = 0");
    let mut dd = Check::new("δ² = 0");
    for _ in 0..cases {
        let n = rng.gen_range(0..=3);
        let deg = rng.gen_range(0..=n);
        let a = rand_phi_elt(&mut rng, n, deg, 4);
        let w = || format!("a={a:?}");
        if deg < 2 {
            for c in [&mut dp, &mut dpp, &mut anti, &mut dd] {
                c.case(Ok(true), w);
            }
            continue;
        }
        dp.case(Ok(a.delta_prime().delta_prime().is_zero()), w);
        dpp.case(Ok(a.delta_dblprime().delta_dblprime().is_zero()), w);
        anti.case(Ok(a.delta_prime().delta_dblprime().add(&a.delta_dblprime().delta_prime()).is_zero()), w);
        dd.case(Ok(a.delta().delta().is_zero()), w);
    }
    vec![dp, dpp, anti, dd]
}

pub fn check_dl_tht() -> Check {
    let mut c = Check::new("δθ_[n] = −Σ(−1)^j (δ_j)_*θ_[n−1]");
    for n in 1..=4usize {
        let r = (|| {
            let lhs = PhiElt::inject(n, &(0..=n).collect::<Vec<_>>(), ThetaElt::top(n))?.delta();
            let mut rhs = PhiElt::zero(n, n - 1);
            for j in 0..=n {
                let face: Vec<usize> = (0..n).map(|k| if k < j { k } else { k + 1 }).collect();
                let t = PhiElt::inject(n - 1, &(0..n).collect::<Vec<_>>(), ThetaElt::top(n - 1))?.push(&face, n)?;
                rhs = rhs.sub(&t.scale(&sign(j % 2 == 1)));
            }
            Ok(lhs == rhs)
        })();
        c.case(r, || format!("n={n}"));
    }
    c
}

fn delta_squared(cases: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = check_delta_squares(cases, seed);
    out.push(check_dl_tht());
    let mut global = Check::new("∂² = 0 on Φ(X)");
    let mut rng = sub_seed(seed, 5);
    for (name, x) in corpus()? {
        for _ in 0..(cases / 10).max(1) {
            let d = rng.gen_range(0..=x.top_dim().unwrap_or(0));
            let c = rand_phi_chain(&mut rng, &x, d, 4);
            global.case(
                (|| {
                    if d < 2 {
                        return Ok(true);
                    }
                    Ok(c.boundary(&x)?.boundary(&x)?.is_zero())
                })(),
                || format!("{name}: {c:?}"),
            );
        }
    }
    out.push(global);
    Ok(out)
}

// ---------------------------------------------------------------- theta

fn wedges(n: usize, k: usize) -> Vec<Wedge> {
    let idx: Vec<usize> = (1..=n).collect();
    subsets_of_size(&idx, k).into_iter().map(|s| Wedge::from_indices(&s).unwrap().0).collect()
}

fn theta(cases: usize, seed: u64) -> Result<Vec<Check>> {
    let mut rng = sub_seed(seed, 6);
    let mut top = Check::new("θ_[n] = ∧(e_i − e_{i−1})");
    for n in 0..=5 {
        let prod = (1..=n).fold(ThetaElt::scalar(n, q(1)), |acc, i| acc.wedge(&ThetaElt::w(n, i).neg()));
        top.case(Ok(prod == ThetaElt::top(n)), || format!("n={n}"));
    }
    let mut adj = Check::new("⟨u⌟a, v⟩ = (−1)^{|v|+1}⟨a, u∧v⟩ on basis triples");
    for n in 1..=4 {
        for k in 1..=n {
            for w in wedges(n, k) {
                for v in wedges(n, k - 1) {
                    for i in 1..=n {
                        let u = FormElt::ds(n, i);
                        let a = ThetaElt::basis(n, w);
                        let vv = FormElt::basis(n, v);
                        let lhs = a.interior(&u).pair(&vv);
                        let rhs = a.pair(&u.wedge(&vv)).scale(&sign(k % 2 == 1));
                        adj.case(Ok(lhs == rhs), || format!("n={n} ds_{i} a={w:?} v={v:?}"));
                    }
                }
            }
        }
    }
    let mut deriv = Check::new("u⌟(a∧b) = (u⌟a)∧b + (−1)^p a∧(u⌟b)");
    let mut anti = Check::new("u⌟(v⌟a) + v⌟(u⌟a) = 0");
    let mut bullet = Check::new("⟨σ•α, σ*ω⟩ = σ*⟨α, ω⟩");
    let mut dl = Check::new("dt_j⌟θ_[n] = (−1)^j θ_[n]∖{j}");
    for n in 1..=4usize {
        for j in 0..=n {
            let lhs = ThetaElt::top(n).interior(&FormElt::dt(n, j));
            let rhs = ThetaElt::top(n - 1).raise_wedges(j).scale(&sign(j % 2 == 1));
            dl.case(Ok(lhs == rhs), || format!("n={n} j={j}"));
        }
    }
    for _ in 0..cases {
        let n = rng.gen_range(1..=4);
        let p = rng.gen_range(0..=n);
        let r = rng.gen_range(0..=n - p);
        let a = rand_theta(&mut rng, n, p, 2);
        let b = rand_theta(&mut rng, n, r, 2);
        let u = rand_form(&mut rng, n, 1, 1);
        let v = rand_form(&mut rng, n, 1, 1);
        if p + r > 0 {
            let lhs = a.wedge(&b).interior(&u);
            let mut rhs = ThetaElt::zero(n, p + r - 1);
            if p > 0 {
                rhs = rhs.add(&a.interior(&u).wedge(&b));
            }
            if r > 0 {
                rhs = rhs.add(&a.wedge(&b.interior(&u)).scale(&sign(p % 2 == 1)));
            }
            deriv.case(Ok(lhs == rhs), || format!("a={a:?} b={b:?} u={u:?}"));
        }
        if p >= 2 {
            let s = a.interior(&v).interior(&u).add(&a.interior(&u).interior(&v));
            anti.case(Ok(s.is_zero()), || format!("a={a:?} u={u:?} v={v:?}"));
        }
        let m = rng.gen_range(0..=n);
        let sigma = rand_ord_surjection(&mut rng, n, m);
        let d = rng.gen_range(0..=m);
        let al = rand_theta(&mut rng, m, d, 2);
        let om = rand_form(&mut rng, m, d, 2);
        bullet.case(
            (|| Ok(al.bullet(&sigma)?.pair(&om.pullback(sigma.values())) == al.pair(&om).pullback(sigma.values())))(),
            || format!("σ={:?} α={al:?} ω={om:?}", sigma.values()),
        );
    }
    Ok(vec![top, adj, deriv, anti, dl, bullet])
}

// ---------------------------------------------------------------- adjunction

pub fn check_xi_injective(cases: usize, seed: u64) -> Check {
    let mut c = Check::new("⟨⟨a, ξ-witness(a)⟩⟩ ≠ 0");
    let mut rng = sub_seed(seed, 7);
    let mut done = 0;
    while done < cases {
        let n = rng.gen_range(0..=3);
        let deg = rng.gen_range(0..=n);
        let a = rand_phi_elt(&mut rng, n, deg, 4);
        if a.is_zero() {
            continue;
        }
        done += 1;
        c.case(a.xi_witness().map(|th| !a.big_pair(&th).is_zero()), || format!("a={a:?}"));
    }
    c
}

pub fn check_local_adjoint(cases: usize, seed: u64) -> Check {
    let mut c = Check::new("⟨⟨δa, ω⟩⟩ = (−1)^{|ω|+1}⟨⟨a, dω⟩⟩");
    let mut rng = sub_seed(seed, 8);
    for _ in 0..cases {
        let n = rng.gen_range(1..=3);
        let d = rng.gen_range(1..=n);
        let a = rand_phi_elt(&mut rng, n, d, 4);
        let om = rand_form(&mut rng, n, d - 1, 3);
        let lhs = a.delta().big_pair(&om);
        let rhs = a.big_pair(&om.d()) * sign(d % 2 == 1);
        c.case(Ok(lhs == rhs), || format!("a={a:?} ω={om:?}: {} vs {}", fmt_q(&lhs), fmt_q(&rhs)));
    }
    c
}

pub fn check_star_adjoint(cases: usize, seed: u64) -> Check {
    let mut c = Check::new("⟨⟨σ_*a, ω⟩⟩ = ⟨⟨a, σ*ω⟩⟩");
    let mut rng = sub_seed(seed, 9);
    for _ in 0..cases {
        let n = rng.gen_range(0..=3);
        let m = rng.gen_range(0..=3);
        let sigma = rand_map(&mut rng, n, m);
        let d = rng.gen_range(0..=n.min(m));
        let a = rand_phi_elt(&mut rng, n, d, 4);
        let om = rand_form(&mut rng, m, d, 3);
        c.case((|| Ok(a.push(&sigma, m)?.big_pair(&om) == a.big_pair(&om.pullback(&sigma))))(), || {
            format!("σ={sigma:?} a={a:?} ω={om:?}")
        });
    }
    c
}

pub fn check_stokes(cases: usize, seed: u64) -> Check {
    let mut c = Check::new("∫∇_x f + Σ x_i ∫_{I∖i} res f = 0");
    let mut rng = sub_seed(seed, 10);
    for _ in 0..cases {
        let n = rng.gen_range(1..=3);
        let f = rand_poly(&mut rng, n, 4, 4);
        let mut x: Vec<Q> = (0..n).map(|_| rand_q(&mut rng)).collect();
        let s: Q = x.iter().fold(Q::zero(), |a, b| a + b);
        x.push(-s);
        x.shuffle(&mut rng);
        c.case(
            (|| {
                let mut total = f.grad(&x)?.integrate();
                for (i, xi) in x.iter().enumerate() {
                    let sub: Vec<usize> = (0..=n).filter(|&k| k != i).collect();
                    total += xi * f.restrict(&sub).integrate();
                }
                Ok(total.is_zero())
            })(),
            || format!("f={f:?} x={:?}", x.iter().map(fmt_q).collect::<Vec<_>>()),
        );
    }
    c
}

pub fn check_global_adjoint(cases: usize, seed: u64) -> Result<Check> {
    let mut c = Check::new("⟨⟨∂c, ω⟩⟩_X = (−1)^{|ω|+1}⟨⟨c, dω⟩⟩_X");
    let mut rng = sub_seed(seed, 11);
    let corp = corpus()?;
    for i in 0..cases {
        let (name, x) = &corp[i % corp.len()];
        let top = x.top_dim().unwrap_or(0);
        if top == 0 {
            continue;
        }
        let d = rng.gen_range(1..=top);
        let ch = rand_phi_chain(&mut rng, x, d, 3);
        let om = rand_cochain(&mut rng, x, d - 1, 2);
        c.case((|| Ok(ch.boundary(x)?.pair(&om) == ch.pair(&om.d()) * sign(d % 2 == 1)))(), || {
            format!("{name}: c={ch:?}")
        });
    }
    Ok(c)
}

fn adjunction(cases: usize, seed: u64) -> Result<Vec<Check>> {
    Ok(vec![
        check_local_adjoint(cases, seed),
        check_star_adjoint(cases, seed),
        check_stokes(cases / 2 + 1, seed),
        check_global_adjoint(cases / 4 + 1, seed)?,
        check_xi_injective(cases / 2 + 1, seed),
    ])
}

// ---------------------------------------------------------------- monoidal

fn block_sign(sh: &crate::simplicial_core::Shuffle) -> bool {
    let seq: Vec<usize> = sh.blocks().concat();
    perm_sign(&seq)
}

struct Pair {
    x: SSet,
    y: SSet,
    xy: ProductSSet,
    yx: ProductSSet,
    label: String,
}

fn product_pairs() -> Result<Vec<Pair>> {
    [("delta:1", "delta:1"), ("delta:1", "boundary:2"), ("sphere:1", "delta:2"), ("delta:0", "sphere:1")]
        .iter()
        .map(|(a, b)| {
            let x = build(a)?;
            let y = build(b)?;
            let xy = ProductSSet::new(&x, &y)?;
            let yx = ProductSSet::new(&y, &x)?;
            Ok(Pair { x, y, xy, yx, label: format!("{a} × {b}") })
        })
        .collect()
}

pub fn check_mu_theta_pairing(cases: usize, seed: u64) -> Check {
    let mut c = Check::new("⟨μ(α⊗β), ζ*ω∧ξ*υ⟩ = (−1)^{|β||ω|} ζ*⟨α,ω⟩·ξ*⟨β,υ⟩");
    let mut rng = sub_seed(seed, 12);
    let reps = (cases / 30).max(2);
    for total in 0..=4usize {
        for n in 0..=total {
            let m = total - n;
            for sh in enumerate_shuffles(&[n, m]) {
                for _ in 0..reps {
                    let p = rng.gen_range(0..=n);
                    let r = rng.gen_range(0..=m);
                    let a = rand_theta(&mut rng, n, p, 2);
                    let b = rand_theta(&mut rng, m, r, 2);
                    let om = rand_form(&mut rng, n, p, 1);
                    let up = rand_form(&mut rng, m, r, 1);
                    let (z, x) = (sh.part(0).values(), sh.part(1).values());
                    c.case(
                        (|| {
                            let lhs = mu_theta(&sh, &a, &b)?.pair(&om.pullback(z).wedge(&up.pullback(x)));
                            let rhs = a.pair(&om).pullback(z).mul(&b.pair(&up).pullback(x)).scale(&sign((r * p) % 2 == 1));
                            Ok(lhs == rhs)
                        })(),
                        || format!("shuffle {:?} α={a:?} β={b:?}", sh.blocks()),
                    );
                }
            }
        }
    }
    c
}

pub fn check_sign_consistency() -> Check {
    let mut c = Check::new("sgn(ζ,ξ) = sign of the block permutation");
    for total in 0..=6usize {
        for n in 0..=total {
            for sh in enumerate_shuffles(&[n, total - n]) {
                c.case(shuffle_sign(&sh).map(|s| s == sign(block_sign(&sh))), || format!("{:?}", sh.blocks()));
            }
        }
    }
    c
}

pub fn check_twist() -> Check {
    let mut c = Check::new("μ_{ξζ}(β⊗α) = (−1)^{|α||β|} μ_{ζξ}(α⊗β)");
    for total in 0..=3usize {
        for n in 0..=total {
            let m = total - n;
            for sh in enumerate_shuffles(&[n, m]) {
                let sw = crate::simplicial_core::Shuffle::new(vec![sh.part(1).clone(), sh.part(0).clone()]).unwrap();
                for p in 0..=n {
                    for r in 0..=m {
                        for wa in wedges(n, p) {
                            for wb in wedges(m, r) {
                                let a = ThetaElt::basis(n, wa);
                                let b = ThetaElt::basis(m, wb);
                                let r2 = (|| Ok(mu_theta(&sw, &b, &a)? == mu_theta(&sh, &a, &b)?.scale(&sign((p * r) % 2 == 1))))();
                                c.case(r2, || format!("{:?} {wa:?} {wb:?}", sh.blocks()));
                            }
                        }
                    }
                }
            }
        }
    }
    c
}

pub fn check_monoidal_global(cases: usize, seed: u64) -> Result<Vec<Check>> {
    let mut rng = sub_seed(seed, 13);
    let pairs = product_pairs()?;
    let mut leib = Check::new("∂μ(a⊗b) = μ(∂a⊗b) + (−1)^{|a|} μ(a⊗∂b)");
    let mut square = Check::new("μ(φx⊗φy) = φ(μ_N(x⊗y))");
    let mut adj = Check::new("⟨⟨μ(a⊗b), ω∧υ⟩⟩ = (−1)^{|b||ω|}⟨⟨a,ω⟩⟩⟨⟨b,υ⟩⟩");
    let mut sym = Check::new("τ_*μ(a⊗b) = (−1)^{|a||b|} μ(b⊗a)");
    for i in 0..cases {
        let pr = &pairs[i % pairs.len()];
        let (x, y) = (&pr.x, &pr.y);
        let tx = x.top_dim().unwrap_or(0);
        let ty = y.top_dim().unwrap_or(0);
        let (p, r) = (rng.gen_range(0..=tx), rng.gen_range(0..=ty));
        let a = rand_phi_chain(&mut rng, x, p, 3);
        let b = rand_phi_chain(&mut rng, y, r, 3);
        let w = || format!("{}: a={a:?} b={b:?}", pr.label);
        leib.case(
            (|| {
                let lhs = mu_phi(x, y, &pr.xy, &a, &b)?.boundary(&pr.xy.sset)?;
                let mut rhs = PhiChain::zero(lhs.deg());
                if p > 0 {
                    rhs = rhs.add(&mu_phi(x, y, &pr.xy, &a.boundary(x)?, &b)?);
                }
                if r > 0 {
                    rhs = rhs.add(&mu_phi(x, y, &pr.xy, &a, &b.boundary(y)?)?.scale(&sign(p % 2 == 1)));
                }
                Ok(p + r == 0 || lhs == rhs)
            })(),
            w,
        );
        let ca = rand_chain(&mut rng, x, p);
        let cb = rand_chain(&mut rng, y, r);
        square.case(
            (|| {
                let lhs = mu_phi(x, y, &pr.xy, &phi_of_chain(&ca), &phi_of_chain(&cb))?;
                Ok(lhs == phi_of_chain(&shuffle_product_n(x, y, &pr.xy, &ca, &cb)?))
            })(),
            || format!("{}: {ca:?} {cb:?}", pr.label),
        );
        let om = rand_cochain(&mut rng, x, p, 2);
        let up = rand_cochain(&mut rng, y, r, 2);
        adj.case(
            (|| {
                let lhs = mu_phi(x, y, &pr.xy, &a, &b)?.pair(&crate::phi_global::omega_wedge(&pr.xy, &om, &up));
                Ok(lhs == a.pair(&om) * b.pair(&up) * sign((r * p) % 2 == 1))
            })(),
            w,
        );
        sym.case(
            (|| {
                let map = swap_map(&pr.xy, &pr.yx)?;
                let lhs = relabel(&mu_phi(x, y, &pr.xy, &a, &b)?, |s| map[&s]);
                Ok(lhs == mu_phi(y, x, &pr.yx, &b, &a)?.scale(&sign((p * r) % 2 == 1)))
            })(),
            w,
        );
    }
    Ok(vec![leib, square, adj, sym])
}

pub fn check_associativity(cases: usize, seed: u64) -> Result<Check> {
    let mut c = Check::new("μ(μ(a⊗b)⊗c) = μ(a⊗μ(b⊗c))");
    let mut rng = sub_seed(seed, 14);
    let x = build("delta:1")?;
    let y = build("sphere:1")?;
    let z = build("delta:1")?;
    let xy = ProductSSet::new(&x, &y)?;
    let xy_z = ProductSSet::new(&xy.sset, &z)?;
    let yz = ProductSSet::new(&y, &z)?;
    let x_yz = ProductSSet::new(&x, &yz.sset)?;
    let map = assoc_map(&xy, &xy_z, &yz, &x_yz)?;
    for _ in 0..cases {
        let (da, db, dc) = (rng.gen_range(0..=1), rng.gen_range(0..=1), rng.gen_range(0..=1));
        let a = rand_phi_chain(&mut rng, &x, da, 2);
        let b = rand_phi_chain(&mut rng, &y, db, 2);
        let cc = rand_phi_chain(&mut rng, &z, dc, 2);
        c.case(
            (|| {
                let left = mu_phi(&xy.sset, &z, &xy_z, &mu_phi(&x, &y, &xy, &a, &b)?, &cc)?;
                let right = mu_phi(&x, &yz.sset, &x_yz, &a, &mu_phi(&y, &z, &yz, &b, &cc)?)?;
                Ok(relabel(&left, |s| map[&s]) == right)
            })(),
            || format!("a={a:?} b={b:?} c={cc:?}"),
        );
    }
    Ok(c)
}

fn monoidal(cases: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = vec![check_mu_theta_pairing(cases, seed), check_sign_consistency(), check_twist()];
    out.extend(check_monoidal_global(cases, seed)?);
    out.push(check_associativity(cases / 5 + 1, seed)?);
    Ok(out)
}

// ---------------------------------------------------------------- colimit

/// `ψζ′ = id` on every split-basis generator of weight ≤ `max_weight`.
pub fn check_psi_zeta_prime(max_weight: u32) -> Result<Check> {
    let mut c = Check::new("ψζ′ = id on split-basis generators");
    for (name, x) in corpus()? {
        for (deg, keys) in weight_seeds(&x, max_weight).into_iter().enumerate() {
            for key in keys {
                let e = PhiChain::basis(key.clone());
                c.case((|| Ok(zeta_prime(&e)?.psi(&x, deg)? == e))(), || format!("{name}: {key:?}"));
            }
        }
    }
    Ok(c)
}

fn colimit_spaces() -> Result<Vec<(String, SSet)>> {
    ["delta:1", "delta:2", "sphere:1", "boundary:2", "sphere:2"].iter().map(|s| Ok((s.to_string(), build(s)?))).collect()
}

fn rand_labels(rng: &mut Gen, m: usize, offset: Label) -> Vec<Label> {
    let mut pool: Vec<Label> = (offset..offset + 6).collect();
    pool.shuffle(rng);
    let mut l = pool[..m].to_vec();
    l.sort_unstable();
    l
}

/// `ζ′ψ = id` on random classes; each class is first split into transported
/// `ζ_1`'s with every identification checked on chains, and the two sides
/// are compared through those pieces.
pub fn check_zeta_prime_psi(cases: usize, seed: u64) -> Result<Vec<Check>> {
    let mut rng = sub_seed(seed, 15);
    let spaces = colimit_spaces()?;
    let mut zp = Check::new("ζ′ψ = id on random U classes");
    let mut zt = Check::new("ψ = Σ pieces (chain-level decomposition)");
    let mut chain = Check::new("φ^# d = δ φ^#");
    let mut lam = Check::new("φ^# λ_* = φ^#");
    for _ in 0..cases {
        let (name, x) = spaces.choose(&mut rng).unwrap();
        let m = rng.gen_range(0..=2);
        let deg = rng.gen_range(0..=2);
        let labels = rand_labels(&mut rng, m, 0);
        let u = rand_uelt(&mut rng, x, &labels, deg, 3);
        let w = || format!("{name}: {u:?}");
        zt.case((|| Ok(pieces_phi(x, &decompose(&u, x)?, deg)? == u.phi_sharp(x)?))(), w);
        zp.case(
            (|| {
                let back: StabClass = zeta_prime(&StabClass::of(u.clone()).psi(x, deg)?)?;
                let mut pieces = vec![];
                for r in &back.reps {
                    pieces.extend(decompose(r, x)?);
                }
                Ok(pieces_phi(x, &pieces, deg)? == pieces_phi(x, &decompose(&u, x)?, deg)?)
            })(),
            w,
        );
        chain.case(
            (|| {
                if deg == 0 {
                    return Ok(true);
                }
                Ok(u.boundary(x)?.phi_sharp(x)? == u.phi_sharp(x)?.boundary(x)?)
            })(),
            w,
        );
        let extra = rng.gen_range(0..=1);
        let image = rand_labels(&mut rng, m + extra, 10);
        let mut perm = image.clone();
        perm.shuffle(&mut rng);
        let map: BTreeMap<Label, Label> = labels.iter().copied().zip(perm.iter().copied()).collect();
        lam.case((|| Ok(lambda_star(&map, &image, &u, x)?.phi_sharp(x)? == u.phi_sharp(x)?))(), w);
    }
    Ok(vec![zp, zt, chain, lam])
}

pub fn check_zt_factor() -> Result<Check> {
    let mut c = Check::new("Σ(ν_i+1)ζ(x,ν+δ_i,J) = ζ(x,ν,J)");
    for (name, x) in [("delta:2", build("delta:2")?), ("sphere:1", build("sphere:1")?)] {
        for xr in x.all_simplices() {
            let n = xr.dim;
            for nu in all_multi_indices(n + 1, 2) {
                for k in 0..=n {
                    for j in subsets_of_size(&(1..=n).collect::<Vec<_>>(), k) {
                        c.case(zt_factor_check(&x, xr, &nu, &j), || format!("{name}: x={xr:?} ν={nu:?} J={j:?}"));
                    }
                }
            }
        }
    }
    Ok(c)
}

/// The face identity for `z(α)` with the sign `(-1)^m`, plus how many of the
/// `(d, m)` cases fail under the opposite sign `(-1)^{m+1}`.
pub fn check_delta_z() -> Result<(Check, usize, usize)> {
    let mut c = Check::new("(−1)^i(δ_i)_*z(αδ_i) = (−1)^m τ_i z(α), d ≤ 3, |A| ≤ 2");
    let mut literal_fail = 0;
    let mut literal_total = 0;
    for d in 1..=3 {
        for m in 0..=2 {
            let r = delta_z_counterexample(d, m)?;
            c.case(Ok(r.is_none()), || r.clone().unwrap_or_default());
            literal_total += 1;
            if delta_z_flipped_counterexample(d, m)?.is_some() {
                literal_fail += 1;
            }
        }
    }
    Ok((c, literal_fail, literal_total))
}

pub fn check_nu_phi(cases: usize, seed: u64) -> Result<Check> {
    let mut c = Check::new("φ^#ν(u⊗v) = μ(φ^#u⊗φ^#v)");
    let mut rng = sub_seed(seed, 16);
    let pairs = product_pairs()?;
    for i in 0..cases {
        let pr = &pairs[i % pairs.len()];
        let (ma, mb) = (rng.gen_range(0..=2), rng.gen_range(0..=1));
        let la = rand_labels(&mut rng, ma, 0);
        let lb = rand_labels(&mut rng, mb, 10);
        let (du, dv) = (rng.gen_range(0..=1), rng.gen_range(0..=1));
        let u = rand_uelt(&mut rng, &pr.x, &la, du, 2);
        let v = rand_uelt(&mut rng, &pr.y, &lb, dv, 2);
        c.case(
            (|| {
                let lhs = nu(&u, &pr.x, &v, &pr.y, &pr.xy)?.phi_sharp(&pr.xy.sset)?;
                Ok(lhs == mu_phi(&pr.x, &pr.y, &pr.xy, &u.phi_sharp(&pr.x)?, &v.phi_sharp(&pr.y)?)?)
            })(),
            || format!("{}: u={u:?} v={v:?}", pr.label),
        );
    }
    Ok(c)
}

fn colimit(cases: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = vec![check_psi_zeta_prime(3)?];
    out.extend(check_zeta_prime_psi(cases, seed)?);
    out.push(check_zt_factor()?);
    out.push(check_delta_z()?.0);
    out.push(check_nu_phi(cases, seed)?);
    Ok(out)
}

// ---------------------------------------------------------------- ez / shuffles

fn monotone_maps(k: usize, n: usize) -> Vec<OrdMap> {
    let mut out = vec![];
    fn rec(v: &mut Vec<usize>, k: usize, n: usize, out: &mut Vec<OrdMap>) {
        if v.len() == k + 1 {
            out.push(OrdMap::new(v.clone(), n).unwrap());
            return;
        }
        let lo = v.last().copied().unwrap_or(0);
        for x in lo..=n {
            v.push(x);
            rec(v, k, n, out);
            v.pop();
        }
    }
    rec(&mut vec![], k, n, &mut out);
    out
}

/// `α^*x` by peeling off one face or degeneracy at a time.
fn apply_stepwise(x: &SSet, alpha: &OrdMap, s: &DegSimplex) -> Result<DegSimplex> {
    let (epi, mono) = alpha.factor();
    let mut cur = s.clone();
    let n = mono.cod();
    let missing: Vec<usize> = (0..=n).filter(|v| !mono.values().contains(v)).collect();
    for &v in missing.iter().rev() {
        cur = x.face_of(&cur, v)?;
    }
    Ok(DegSimplex { surj: cur.surj.after(&epi)?, base: cur.base })
}

pub fn check_ez() -> Result<Vec<Check>> {
    let mut nf = Check::new("α^*x agrees with stepwise faces and is in normal form");
    let mut fixed = Check::new("σ^*y = (σ, y) for surjective σ, y nondegenerate");
    let mut verts = Check::new("vertices of α^*x = α^*(vertices of x)");
    let mut pair = Check::new("product pair/project round trip");
    for (name, x) in corpus()? {
        for s in x.all_simplices() {
            let n = s.dim;
            let sd = DegSimplex::nondeg(s);
            let vx = x.vertices(&sd)?;
            for k in 0..=n + 1 {
                for alpha in monotone_maps(k, n) {
                    let r = (|| {
                        let a = x.apply_map(&alpha, &sd)?;
                        let b = apply_stepwise(&x, &alpha, &sd)?;
                        Ok(a == b && a.surj.is_surjective() && a.surj.cod() == a.base.dim)
                    })();
                    nf.case(r, || format!("{name}: {} α={:?}", x.name(s), alpha.values()));
                    let r = (|| {
                        let a = x.apply_map(&alpha, &sd)?;
                        let got = x.vertices(&a)?;
                        let want: Vec<_> = alpha.values().iter().map(|&v| vx[v]).collect();
                        Ok(got == want)
                    })();
                    verts.case(r, || format!("{name}: {} α={:?}", x.name(s), alpha.values()));
                    if alpha.is_surjective() {
                        let r = x.apply_map(&alpha, &sd).map(|a| a == DegSimplex { surj: alpha.clone(), base: s });
                        fixed.case(r, || format!("{name}: {} σ={:?}", x.name(s), alpha.values()));
                    }
                }
            }
        }
    }
    for pr in product_pairs()? {
        for k in 0..=2 {
            for a in degenerate_simplices(&pr.x, k) {
                for b in degenerate_simplices(&pr.y, k) {
                    let r = (|| Ok(pr.xy.project(&pr.xy.pair(&a, &b)?)? == (a.clone(), b.clone())))();
                    pair.case(r, || format!("{}: {a:?} {b:?}", pr.label));
                }
            }
        }
    }
    Ok(vec![nf, fixed, verts, pair])
}

/// Every simplex of dimension `k`, as EZ pairs.
fn degenerate_simplices(x: &SSet, k: usize) -> Vec<DegSimplex> {
    let mut out = vec![];
    for e in 0..=k {
        for s in x.simplices(e) {
            for sigma in monotone_maps(k, e).into_iter().filter(|m| m.is_surjective()) {
                out.push(DegSimplex { surj: sigma, base: s });
            }
        }
    }
    out
}

fn ez() -> Result<Vec<Check>> {
    check_ez()
}

pub fn check_shuffles() -> Result<Vec<Check>> {
    let mut count = Check::new("|Σ(n,m)| = (n+m)!/(n!m!) for n+m ≤ 8");
    for total in 0..=8usize {
        for n in 0..=total {
            let m = total - n;
            let shs = enumerate_shuffles(&[n, m]);
            let want = factorial(total as u32) / (factorial(n as u32) * factorial(m as u32));
            let distinct: BTreeSet<_> = shs.iter().collect();
            let ok = num_bigint::BigInt::from(shs.len()) == want && distinct.len() == shs.len() && binomial(total, n) == shs.len();
            count.case(Ok(ok), || format!("n={n} m={m}: {}", shs.len()));
        }
    }
    let mut ops = Check::new("operad L/R are bijections for m+n+p ≤ 6");
    for total in 0..=6usize {
        for m in 0..=total {
            for n in 0..=total - m {
                let p = total - m - n;
                let triple: BTreeSet<_> = enumerate_shuffles(&[m, n, p]).into_iter().collect();
                let r = (|| {
                    let mut left = BTreeSet::new();
                    let mut lcount = 0;
                    for s in enumerate_shuffles(&[m + n, p]) {
                        for t in enumerate_shuffles(&[m, n]) {
                            let o = operad_l(&s, &t)?;
                            if operad_l_inverse(&o)? != (s.clone(), t.clone()) {
                                return Ok(false);
                            }
                            left.insert(o);
                            lcount += 1;
                        }
                    }
                    let mut right = BTreeSet::new();
                    let mut rcount = 0;
                    for s in enumerate_shuffles(&[m, n + p]) {
                        for t in enumerate_shuffles(&[n, p]) {
                            let o = operad_r(&s, &t)?;
                            if operad_r_inverse(&o)? != (s.clone(), t.clone()) {
                                return Ok(false);
                            }
                            right.insert(o);
                            rcount += 1;
                        }
                    }
                    Ok(left == triple && right == triple && lcount == triple.len() && rcount == triple.len())
                })();
                ops.case(r, || format!("(m,n,p)=({m},{n},{p})"));
            }
        }
    }
    Ok(vec![count, ops])
}

fn shuffles() -> Result<Vec<Check>> {
    check_shuffles()
}

/// Local homology: the stabilized image is `ℚ` in degree 0 only, and the
/// vertex classes `[i_{j}(1)]` all agree.
pub fn check_local_homology(max_n: usize) -> Result<Vec<Check>> {
    let mut dims = Check::new("stabilized H(Φ_I) = ℚ in degree 0");
    let mut points = Check::new("[i_{j}(1)] pairwise homologous");
    for n in 0..=max_n {
        let d = (n as u32) + 1;
        let got = crate::phi_local::local_stable_homology(n, d, 2)?;
        let next = crate::phi_local::local_stable_homology(n, d + 1, 2)?;
        let mut want = vec![0; got.len()];
        want[0] = 1;
        dims.case(Ok(got == want && next == want), || format!("n={n}: {got:?} / {next:?}"));
        let (cx, keys) = crate::phi_local::local_truncated_complex(n, d)?;
        let index: BTreeMap<_, _> = keys[0].iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        let base = (vec![0], Mono::one(0), Wedge::empty());
        for j in 1..=n {
            let key = (vec![j], Mono::one(0), Wedge::empty());
            let r = (|| {
                let mut v = crate::homology_engine::SparseVec::new();
                v.insert(*index.get(&key).ok_or(Error::Zero)?, Q::one());
                v.insert(*index.get(&base).ok_or(Error::Zero)?, -Q::one());
                Ok(cx.is_boundary(0, &v))
            })();
            points.case(r, || format!("n={n} j={j}"));
        }
    }
    Ok(vec![dims, points])
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// A single basis chain used by the CLI examples.
pub fn sample_chain(x: &SSet, deg: usize) -> Chain {
    let mut c = Chain::zero(deg);
    if let Some(s) = x.simplices(deg).next() {
        c.add_term(s, Q::one());
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str) {
        let r = run_suite(name, 20, 7).unwrap();
        for c in &r.checks {
            assert!(c.passed, "{}: {}: {:?}", name, c.name, c.counterexample);
            assert!(c.cases > 0, "{}: {} ran no cases", name, c.name);
        }
    }

    #[test]
    fn integration() {
        run("integration");
    }
    #[test]
    fn adjunction() {
        run("adjunction");
    }
    #[test]
    fn pushforward() {
        run("pushforward");
    }
    #[test]
    fn delta_squared() {
        run("delta-squared");
    }
    #[test]
    fn theta() {
        run("theta");
    }
    #[test]
    fn monoidal() {
        run("monoidal");
    }
    #[test]
    fn colimit() {
        run("colimit");
    }
    #[test]
    fn ez() {
        run("ez");
    }
    #[test]
    fn shuffles() {
        run("shuffles");
    }

    #[test]
    fn local_homology() {
        assert!(all_passed(&check_local_homology(3).unwrap()));
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope", 1, 0), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = serde_json::to_string(&run_suite("theta", 10, 3).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite("theta", 10, 3).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
