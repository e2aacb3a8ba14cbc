use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::universe::{Var, VarUniverse};

fn parse_var(s: &str) -> Option<Var> {
    let idx = |t: &str| t.parse::<u16>().ok().filter(|&i| i > 0);
    if s == "t" {
        return Some(Var::ReesT);
    }
    if let Some(rest) = s.strip_prefix("T[") {
        let inner = rest.strip_suffix(']')?;
        let (a, b) = inner.split_once(',')?;
        let (a, b) = (idx(a.trim())?, idx(b.trim())?);
        return (a != b).then(|| Var::edge(a as usize, b as usize));
    }
    let (head, tail) = s.split_at(1.min(s.len()));
    match head {
        "x" => idx(tail).map(Var::X),
        "y" => idx(tail).map(Var::Y),
        "u" => idx(tail).map(Var::Aux),
        _ => None,
    }
}

fn parse_term<F: Field>(u: &Arc<VarUniverse>, s: &str) -> Result<(Monomial, F)> {
    let mut coeff = F::one();
    let mut exps = vec![0u16; u.len()];
    for factor in s.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in '{s}'")));
        }
        if factor.as_bytes()[0].is_ascii_digit() {
            let c = F::parse_literal(factor)
                .ok_or_else(|| Error::Parse(format!("bad coefficient '{factor}'")))?;
            coeff = coeff.mul(&c);
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (
                n.trim(),
                e.trim()
                    .parse::<u16>()
                    .map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?,
            ),
            None => (factor, 1),
        };
        let v = parse_var(name).ok_or_else(|| Error::Parse(format!("unknown token '{name}'")))?;
        let i = u
            .index_of(v)
            .ok_or_else(|| Error::UnknownVariable(v.to_string()))?;
        exps[i] += exp;
    }
    Ok((Monomial::from_slice(&exps), coeff))
}

/// Parses the canonical text form, e.g. `x1*y2 - x2*y1` or `3/2*T[1,2]*x1^2`.
pub fn parse_polynomial<F: Field>(u: &Arc<VarUniverse>, s: &str) -> Result<Polynomial<F>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let mut sign = 1i64;
    let bytes = s.as_bytes();
    let mut pieces: Vec<(i64, &str)> = Vec::new();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'[' => depth += 1,
            b']' => depth = depth.saturating_sub(1),
            b'+' | b'-' if depth == 0 => {
                let piece = s[start..i].trim();
                if !piece.is_empty() {
                    pieces.push((sign, piece));
                } else if i != 0 && !pieces.is_empty() {
                    return Err(Error::Parse(format!("dangling operator in '{s}'")));
                }
                sign = if b == b'-' { -1 } else { 1 };
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = s[start..].trim();
    if last.is_empty() {
        return Err(Error::Parse(format!("trailing operator in '{s}'")));
    }
    pieces.push((sign, last));
    for (sign, piece) in pieces {
        let (m, c) = parse_term::<F>(u, piece)?;
        let c = if sign < 0 { c.neg() } else { c };
        terms.push((m, c));
    }
    Ok(Polynomial::from_terms(u, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};

    #[test]
    fn round_trip_canonical_strings() {
        let u = VarUniverse::rees(3, &[(1, 2), (2, 3)]);
        for s in [
            "x1*y2 - x2*y1",
            "0",
            "1",
            "-3/2*x1^2",
            "T[1,2]*x2*y3 - T[2,3]*x1*y2 + T[2,3]*x2*y1 - T[1,2]*x3*y2",
            "t*x1*y2 - t*x2*y1 + 7",
        ] {
            let p: Polynomial<Q> = parse_polynomial(&u, s).unwrap();
            let printed = p.to_string();
            let again: Polynomial<Q> = parse_polynomial(&u, &printed).unwrap();
            assert_eq!(again, p);
            assert_eq!(again.to_string(), printed);
        }
        let p: Polynomial<Q> = parse_polynomial(&u, "T[1,2]*x2*y3 - T[2,3]*x1*y2").unwrap();
        assert_eq!(p.to_string(), "T[1,2]*x2*y3 - T[2,3]*x1*y2");
    }

    #[test]
    fn parse_combines_and_rejects() {
        let u = VarUniverse::standard(2);
        let p: Polynomial<Q> = parse_polynomial(&u, "x1 + x1 - 2*x1").unwrap();
        assert!(p.is_zero());
        assert!(parse_polynomial::<Q>(&u, "x3").is_err());
        assert!(parse_polynomial::<Q>(&u, "x1 +").is_err());
        assert!(parse_polynomial::<Q>(&u, "z1").is_err());
        let q: Polynomial<Fp> = parse_polynomial(&u, "-x1 + 1/2").unwrap();
        assert_eq!(q.to_string(), "-x1 - 16001");
    }
}
