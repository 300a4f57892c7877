//! Builder expressions for simplicial sets:
//!
//! ```text
//! delta:n | boundary:n | sphere:k | ba:k | dba:k | point
//! product:(a,b) | quotient:(a,sub) | skeleton:(a,k) | file:path
//! ```
//!
//! In `quotient:(a,sub)` the second operand is matched into `a` by simplex
//! names, so `quotient:(delta:2,boundary:2)` is the 2-sphere.

use crate::error::{Error, Result};
use crate::simplicial_sets::{ba, boundary_delta, dba, delta, point, sphere, ProductSSet, SSet, SSetJson, SimplexRef};

pub fn build(expr: &str) -> Result<SSet> {
    let expr = expr.trim();
    let (head, arg) = expr.split_once(':').unwrap_or((expr, ""));
    let num = || arg.trim().parse::<usize>().map_err(|_| Error::Parse(format!("expected a number in `{expr}`")));
    match head {
        "point" => Ok(point()),
        "delta" => Ok(delta(num()?)),
        "boundary" => {
            let n = num()?;
            if n == 0 {
                return Err(Error::Parse("boundary:0 is empty".into()));
            }
            Ok(boundary_delta(n))
        }
        "sphere" => Ok(sphere(num()?)),
        "ba" => Ok(ba(num()?)),
        "dba" => Ok(dba(num()?)),
        "product" => {
            let [a, b] = pair_args(arg)?;
            Ok(ProductSSet::new(&build(&a)?, &build(&b)?)?.sset)
        }
        "quotient" => {
            let [a, b] = pair_args(arg)?;
            let big = build(&a)?;
            let small = build(&b)?;
            big.quotient(&embed_by_name(&small, &big)?)
        }
        "skeleton" => {
            let [a, k] = pair_args(arg)?;
            let k = k.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad skeleton degree in `{expr}`")))?;
            Ok(build(&a)?.skeleton(k))
        }
        "file" => {
            let text = std::fs::read_to_string(arg)?;
            let j: SSetJson = serde_json::from_str(&text)?;
            SSet::from_json(&j)
        }
        _ => Err(Error::Parse(format!("unknown builder `{head}`"))),
    }
}

/// Splits `(a,b)` at the top-level comma.
fn pair_args(arg: &str) -> Result<[String; 2]> {
    let inner = arg
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected `(a,b)`, got `{arg}`")))?;
    let mut depth = 0i32;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Ok([inner[..i].to_string(), inner[i + 1..].to_string()]),
            _ => {}
        }
    }
    Err(Error::Parse(format!("expected two operands in `{arg}`")))
}

/// Locates every simplex of `small` in `big` by name, checking faces agree.
pub fn embed_by_name(small: &SSet, big: &SSet) -> Result<Vec<SimplexRef>> {
    let mut out = Vec::new();
    for r in small.all_simplices() {
        let target = big
            .lookup(r.dim, small.name(r))
            .ok_or_else(|| Error::NotSubcomplex(format!("no simplex named {} in dimension {}", small.name(r), r.dim)))?;
        if r.dim > 0 {
            for i in 0..=r.dim {
                let (fs, fb) = (small.face(r, i), big.face(target, i));
                if fs.surj != fb.surj || small.name(fs.base) != big.name(fb.base) {
                    return Err(Error::NotSubcomplex(format!("face {i} of {} differs", small.name(r))));
                }
            }
        }
        out.push(target);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds() {
        assert_eq!(build("delta:2").unwrap().nd_counts(), vec![3, 3, 1]);
        assert_eq!(build("boundary:2").unwrap().nd_counts(), vec![3, 3]);
        assert_eq!(build("sphere:1").unwrap().nd_counts(), vec![1, 1]);
        assert_eq!(build("product:(delta:1,delta:1)").unwrap().nd_counts(), vec![4, 5, 2]);
        let s2 = build("quotient:(delta:2,boundary:2)").unwrap();
        assert_eq!(s2.normalized_chains().homology_dims(), vec![1, 0, 1]);
        let t = build("product:(sphere:1,sphere:1)").unwrap();
        assert_eq!(t.euler_characteristic(), 0);
        assert_eq!(build("skeleton:(delta:3,1)").unwrap().nd_counts(), vec![4, 6]);
    }

    #[test]
    fn errors() {
        assert!(build("nope:1").is_err());
        assert!(build("delta:x").is_err());
        assert!(build("product:(delta:1)").is_err());
        assert!(build("quotient:(delta:1,delta:2)").is_err());
        assert!(build("boundary:0").is_err());
    }
}
