//! Wire formats: JSON schemas for polynomials and a parser for the text
//! form emitted by `Display`.
//!
//! JSON keeps coefficients as decimal strings so arbitrary-precision
//! values survive any JSON implementation:
//!
//! ```text
//! {"var":"q","terms":[[0,"1"],[1,"-1"]]}
//! {"var":"s","coeff_var":"q","terms":[[-1,[[2,"1"]]],[0,[[0,"1"],[1,"1"]]]]}
//! ```

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{BivarPoly, LaurentPoly};

/// JSON form of a [`LaurentPoly`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyJson {
    pub var: String,
    pub terms: Vec<(i64, String)>,
}

/// JSON form of a [`BivarPoly`], s-major.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BivarJson {
    pub var: String,
    pub coeff_var: String,
    pub terms: Vec<(i64, Vec<(i64, String)>)>,
}

pub fn poly_to_json(p: &LaurentPoly) -> PolyJson {
    PolyJson {
        var: "q".to_string(),
        terms: p.terms().map(|(e, c)| (e, c.to_string())).collect(),
    }
}

pub fn poly_from_json(j: &PolyJson) -> Result<LaurentPoly> {
    if j.var != "q" {
        return Err(Error::Parse(format!("unexpected variable {:?}", j.var)));
    }
    let mut terms = Vec::with_capacity(j.terms.len());
    for (e, c) in &j.terms {
        let c: BigInt = c
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
        terms.push((*e, c));
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn bivar_to_json(p: &BivarPoly) -> BivarJson {
    BivarJson {
        var: "s".to_string(),
        coeff_var: "q".to_string(),
        terms: p
            .terms()
            .map(|(k, c)| (k, c.terms().map(|(e, c)| (e, c.to_string())).collect()))
            .collect(),
    }
}

pub fn bivar_from_json(j: &BivarJson) -> Result<BivarPoly> {
    if j.var != "s" || j.coeff_var != "q" {
        return Err(Error::Parse("unexpected variables".to_string()));
    }
    let mut out = Vec::with_capacity(j.terms.len());
    for (k, qterms) in &j.terms {
        let p = poly_from_json(&PolyJson {
            var: "q".to_string(),
            terms: qterms.clone(),
        })?;
        out.push((*k, p));
    }
    Ok(BivarPoly::from_terms(out))
}

/// Parse the text form produced by `LaurentPoly`'s `Display`:
/// terms in any order, `c*q^e` with optional coefficient, `^` exponent
/// (possibly negative), and `+`/`-` separators. `"0"` is the zero
/// polynomial.
pub fn parse_poly(input: &str) -> Result<LaurentPoly> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty input".to_string()));
    }
    if s == "0" {
        return Ok(LaurentPoly::zero());
    }
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0usize;
    let n = bytes.len();
    let mut terms: Vec<(i64, BigInt)> = Vec::new();

    let skip_ws = |i: &mut usize| {
        while *i < n && bytes[*i].is_whitespace() {
            *i += 1;
        }
    };

    let mut first = true;
    loop {
        skip_ws(&mut i);
        if i >= n {
            break;
        }
        let mut negative = false;
        match bytes[i] {
            '+' => {
                i += 1;
            }
            '-' => {
                negative = true;
                i += 1;
            }
            _ if first => {}
            c => return Err(Error::Parse(format!("expected '+' or '-', found {c:?}"))),
        }
        first = false;
        skip_ws(&mut i);

        // coefficient digits (optional)
        let start = i;
        while i < n && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let mut coeff = if start == i {
            BigInt::from(1)
        } else {
            bytes[start..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse("bad coefficient".to_string()))?
        };
        if negative {
            coeff = -coeff;
        }

        if i < n && bytes[i] == '*' {
            i += 1;
        }

        // variable part (optional)
        let mut exp = 0i64;
        if i < n && bytes[i] == 'q' {
            i += 1;
            exp = 1;
            if i < n && bytes[i] == '^' {
                i += 1;
                let estart = i;
                if i < n && bytes[i] == '-' {
                    i += 1;
                }
                while i < n && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = bytes[estart..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Parse("bad exponent".to_string()))?;
            }
        } else if start == i {
            return Err(Error::Parse(format!(
                "expected coefficient or 'q' at offset {i}"
            )));
        }
        terms.push((exp, coeff));
    }
    Ok(LaurentPoly::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn text_round_trip() {
        for poly in [
            LaurentPoly::zero(),
            LaurentPoly::one(),
            p(&[(0, 1), (1, -1), (3, 2)]),
            p(&[(-2, -1), (0, 5), (7, -13)]),
            p(&[(-1, 1), (1, 1)]),
        ] {
            assert_eq!(parse_poly(&poly.to_string()).unwrap(), poly);
        }
    }

    #[test]
    fn json_round_trip() {
        let poly = p(&[(-2, -1), (0, 5), (7, -13)]);
        let json = serde_json::to_string(&poly_to_json(&poly)).unwrap();
        let back: PolyJson = serde_json::from_str(&json).unwrap();
        assert_eq!(poly_from_json(&back).unwrap(), poly);

        let b = BivarPoly::from_terms([(-1, p(&[(2, 1)])), (0, p(&[(0, 1), (1, 1)]))]);
        let json = serde_json::to_string(&bivar_to_json(&b)).unwrap();
        let back: BivarJson = serde_json::from_str(&json).unwrap();
        assert_eq!(bivar_from_json(&back).unwrap(), b);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_poly("").is_err());
        assert!(parse_poly("q^").is_err());
        assert!(parse_poly("1 ? q").is_err());
    }
}
