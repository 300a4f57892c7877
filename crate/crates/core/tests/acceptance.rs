//! The nine acceptance criteria. All comparisons are exact rational
//! equalities; each line reports the wall time against its budget.

use std::process::ExitCode;
use std::time::Instant;

use derham::builder::build;
use derham::phi_global::homology_run;
use derham::verify::*;

const SEED: u64 = 7;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_checks(checks: &[Check]) -> Outcome {
    let ok = all_passed(checks);
    let cases: usize = checks.iter().map(|c| c.cases).sum();
    let mut detail = format!("{} checks, {cases} cases", checks.len());
    if let Some(c) = checks.iter().find(|c| !c.passed) {
        detail = format!("{detail}; `{}` failed: {}", c.name, c.counterexample.clone().unwrap_or_default());
    }
    Outcome { ok, detail }
}

fn criterion(results: &mut Vec<bool>, n: usize, title: &str, limit_s: f64, f: impl FnOnce() -> derham::error::Result<Outcome>) {
    let t = Instant::now();
    let out = f().unwrap_or_else(|e| Outcome { ok: false, detail: format!("error: {e}") });
    let secs = t.elapsed().as_secs_f64();
    let in_time = secs < limit_s;
    let ok = out.ok && in_time;
    println!(
        "[{}] {n}. {title}: tolerance exact (0), time {secs:.2}s < {limit_s:.0}s{} | {}",
        if ok { "PASS" } else { "FAIL" },
        if in_time { "" } else { " EXCEEDED" },
        out.detail
    );
    results.push(ok);
}

fn main() -> ExitCode {
    let mut results = vec![];

    criterion(&mut results, 1, "integration", 10.0, || {
        Ok(from_checks(&[check_int_s_table(), check_int_well_defined(200, SEED), check_int_prod(200, SEED)]))
    });

    criterion(&mut results, 2, "differentials", 30.0, || Ok(from_checks(&check_delta_squares(200, SEED))));

    criterion(&mut results, 3, "adjunction", 60.0, || {
        Ok(from_checks(&[check_local_adjoint(200, SEED), check_star_adjoint(200, SEED), check_stokes(100, SEED)]))
    });

    criterion(&mut results, 4, "local homology, |I| ≤ 4", 60.0, || Ok(from_checks(&check_local_homology(3)?)));

    criterion(&mut results, 5, "global quasi-isomorphism", 300.0, || {
        let mut lines = vec![];
        let mut ok = true;
        for name in CORPUS {
            let x = build(name)?;
            let d = x.top_dim().unwrap_or(0) as u32 + 1;
            let r = homology_run(name, &x, d, 2)?;
            ok &= r.matches();
            lines.push(format!("{name} D={d},{} {:?}{}", d + 1, r.stable, if r.matches() { "" } else { " MISMATCH" }));
        }
        Ok(Outcome { ok, detail: lines.join("; ") })
    });

    criterion(&mut results, 6, "monoidal", 120.0, || {
        let mut checks = vec![check_mu_theta_pairing(200, SEED), check_sign_consistency(), check_twist()];
        checks.extend(check_monoidal_global(200, SEED)?);
        Ok(from_checks(&checks))
    });

    criterion(&mut results, 7, "colimit", 180.0, || {
        let mut checks = vec![check_psi_zeta_prime(3)?];
        checks.extend(check_zeta_prime_psi(200, SEED)?);
        checks.push(check_zt_factor()?);
        let (dz, flipped_fail, flipped_total) = check_delta_z()?;
        checks.push(dz);
        checks.push(check_nu_phi(200, SEED)?);
        let mut out = from_checks(&checks);
        out.detail = format!(
            "{}; face identity of z with sign (−1)^{{m+1}} fails in {flipped_fail}/{flipped_total} (d, |A|) cases, with (−1)^m in 0",
            out.detail
        );
        Ok(out)
    });

    criterion(&mut results, 8, "combinatorics", 30.0, || {
        let mut checks = check_shuffles()?;
        checks.extend(check_ez()?);
        Ok(from_checks(&checks))
    });

    criterion(&mut results, 9, "injectivity", 30.0, || Ok(from_checks(&[check_xi_injective(100, SEED)])));

    let passed = results.iter().filter(|&&b| b).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
