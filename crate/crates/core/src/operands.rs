//! JSON forms for chains and cochain forms, as read and written by the CLI.
//!
//! A chain is a list of terms `x ⊗ c·t^ν w_J`:
//!
//! ```json
//! [{"simplex": "0,1", "nu": [0, 0], "wedge": [1], "coeff": "1/1"}]
//! ```
//!
//! `nu` has one entry per vertex of `x` and is reduced with `t_0 = 1 - Σ t_i`.
//! A cochain form gives a value on some simplices, in the `ds` basis; the
//! rest are zero and the result must be face-compatible:
//!
//! ```json
//! {"degree": 1, "values": {"0,1": [{"nu": [0, 0], "wedge": [1], "coeff": "1"}]}}
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phi_global::{CochainForm, PhiChain};
use crate::polyforms::{FormElt, Mono, Poly, ThetaElt, Wedge};
use crate::rational::{fmt_q, parse_q, sign};
use crate::simplicial_sets::{DegSimplex, SSet, SimplexRef};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainTerm {
    pub simplex: String,
    pub nu: Vec<u32>,
    pub wedge: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormTerm {
    pub nu: Vec<u32>,
    pub wedge: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormJson {
    pub degree: usize,
    pub values: BTreeMap<String, Vec<FormTerm>>,
}

fn find(sset: &SSet, name: &str) -> Result<SimplexRef> {
    (0..=sset.top_dim().unwrap_or(0))
        .find_map(|d| sset.lookup(d, name))
        .ok_or_else(|| Error::Parse(format!("no simplex named `{name}`")))
}

fn term_poly(n: usize, nu: &[u32], wedge: &[usize], coeff: &str) -> Result<(Poly, Wedge)> {
    if nu.len() != n + 1 {
        return Err(Error::Parse(format!("exponent vector {nu:?} does not have {} entries", n + 1)));
    }
    if wedge.iter().any(|&i| i == 0 || i > n) {
        return Err(Error::Parse(format!("wedge indices {wedge:?} must lie in 1..={n}")));
    }
    let (w, neg) = Wedge::from_indices(wedge).ok_or_else(|| Error::Parse(format!("repeated wedge index in {wedge:?}")))?;
    let c = parse_q(coeff)? * sign(neg);
    Ok((Poly::raw(n, [(Mono(nu.to_vec()), c)]).normalized(), w))
}

pub fn parse_chain(sset: &SSet, deg: Option<usize>, terms: &[ChainTerm]) -> Result<PhiChain> {
    let deg = match (deg, terms.first()) {
        (Some(d), _) => d,
        (None, Some(t)) => t.wedge.len(),
        (None, None) => 0,
    };
    let mut out = PhiChain::zero(deg);
    for t in terms {
        if t.wedge.len() != deg {
            return Err(Error::Parse(format!("term on `{}` has degree {} instead of {deg}", t.simplex, t.wedge.len())));
        }
        let x = find(sset, &t.simplex)?;
        let (f, w) = term_poly(x.dim, &t.nu, &t.wedge, &t.coeff)?;
        out = out.add(&PhiChain::from_theta(sset, &DegSimplex::nondeg(x), &ThetaElt::from_poly(&f, w))?);
    }
    Ok(out)
}

pub fn parse_form(sset: &SSet, j: &FormJson) -> Result<CochainForm> {
    let mut out = CochainForm::zero(j.degree);
    for (name, terms) in &j.values {
        let x = find(sset, name)?;
        let mut v = FormElt::zero(x.dim, j.degree);
        for t in terms {
            if t.wedge.len() != j.degree {
                return Err(Error::Parse(format!("form term on `{name}` has degree {}", t.wedge.len())));
            }
            let (f, w) = term_poly(x.dim, &t.nu, &t.wedge, &t.coeff)?;
            v = v.add(&FormElt::from_poly(&f, w));
        }
        out.set(x, v)?;
    }
    out.validate(sset)?;
    Ok(out)
}

/// Terms in canonical order: by simplex, then monomial, then wedge.
pub fn chain_terms(sset: &SSet, c: &PhiChain) -> Vec<ChainTerm> {
    c.terms()
        .iter()
        .map(|((x, mono, w), q)| ChainTerm {
            simplex: sset.name(*x).to_string(),
            nu: mono.0.clone(),
            wedge: w.indices(),
            coeff: fmt_q(q),
        })
        .collect()
}

/// `⟨⟨c, ω⟩⟩`; zero when the degrees differ.
pub fn pair(c: &PhiChain, omega: &CochainForm) -> String {
    if c.deg() != omega.deg() {
        return "0/1".into();
    }
    fmt_q(&c.pair(omega))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::build;

    fn edge_chain() -> Vec<ChainTerm> {
        vec![ChainTerm { simplex: "0,1".into(), nu: vec![0, 0], wedge: vec![1], coeff: "1".into() }]
    }

    #[test]
    fn edge_pairs_with_ds1() {
        let x = build("delta:1").unwrap();
        let c = parse_chain(&x, None, &edge_chain()).unwrap();
        let f: FormJson = serde_json::from_str(r#"{"degree":1,"values":{"0,1":[{"nu":[0,0],"wedge":[1],"coeff":"1"}]}}"#).unwrap();
        let om = parse_form(&x, &f).unwrap();
        assert_eq!(pair(&c, &om), "1/1");
        let zero = FormJson { degree: 0, values: BTreeMap::new() };
        assert_eq!(pair(&c, &parse_form(&x, &zero).unwrap()), "0/1");
    }

    #[test]
    fn round_trip() {
        let x = build("delta:2").unwrap();
        let terms = vec![
            ChainTerm { simplex: "0,1,2".into(), nu: vec![0, 1, 2], wedge: vec![2], coeff: "-3/2".into() },
            ChainTerm { simplex: "0,1".into(), nu: vec![0, 0], wedge: vec![1], coeff: "2".into() },
        ];
        let c = parse_chain(&x, None, &terms).unwrap();
        let back = chain_terms(&x, &c);
        assert_eq!(parse_chain(&x, Some(1), &back).unwrap(), c);
    }

    #[test]
    fn rejects_bad_input() {
        let x = build("delta:1").unwrap();
        let bad = vec![ChainTerm { simplex: "zz".into(), nu: vec![0, 0], wedge: vec![1], coeff: "1".into() }];
        assert!(parse_chain(&x, None, &bad).is_err());
        let bad = vec![ChainTerm { simplex: "0,1".into(), nu: vec![0], wedge: vec![1], coeff: "1".into() }];
        assert!(parse_chain(&x, None, &bad).is_err());
        // a 0-form that is 1 on one vertex and unset elsewhere is not compatible on the edge
        let f: FormJson = serde_json::from_str(r#"{"degree":0,"values":{"0":[{"nu":[0],"wedge":[],"coeff":"1"}]}}"#).unwrap();
        assert!(parse_form(&x, &f).is_err());
    }
}
