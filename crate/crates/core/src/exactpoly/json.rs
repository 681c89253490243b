//! Canonical JSON form:
//! `{"vars":["x","t"],"terms":[{"coeff":"num/den","exps":[e1,e2]}]}` with
//! terms in ascending lexicographic exponent order.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{MultiPoly, PolyError, Rational, VarTable};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

/// Reduced `num/den`, denominator always written.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `n`, `-n`, `n/d` and `-n/d`; the result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    let bad = || PolyError::InvalidRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    if den.starts_with(['-', '+']) {
        return Err(bad());
    }
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

impl From<&MultiPoly> for PolyJson {
    fn from(p: &MultiPoly) -> Self {
        PolyJson {
            vars: p.vars.names().to_vec(),
            terms: p
                .terms
                .iter()
                .map(|(e, c)| TermJson { coeff: rational_to_string(c), exps: e.clone() })
                .collect(),
        }
    }
}

impl From<MultiPoly> for PolyJson {
    fn from(p: MultiPoly) -> Self {
        PolyJson::from(&p)
    }
}

impl TryFrom<PolyJson> for MultiPoly {
    type Error = PolyError;

    fn try_from(j: PolyJson) -> Result<Self, PolyError> {
        let vars = VarTable::new(j.vars)?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            terms.push((t.exps, parse_rational(&t.coeff)?));
        }
        MultiPoly::from_terms(&vars, terms)
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        MultiPoly::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl MultiPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial json is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self, PolyError> {
        serde_json::from_str(s).map_err(|e| PolyError::Json(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::ratio;

    #[test]
    fn exact_layout() {
        let v = VarTable::new(["x", "t"]).unwrap();
        let p = MultiPoly::from_terms(&v, [(vec![0, 1], ratio(-1, 3)), (vec![2, 0], ratio(4, 2))]).unwrap();
        assert_eq!(
            p.to_json(),
            r#"{"vars":["x","t"],"terms":[{"coeff":"-1/3","exps":[0,1]},{"coeff":"2/1","exps":[2,0]}]}"#
        );
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), ratio(-7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn malformed_inputs() {
        assert!(MultiPoly::from_json(r#"{"vars":["x"],"terms":[{"coeff":"1","exps":[1,2]}]}"#).is_err());
        assert!(MultiPoly::from_json(r#"{"vars":["x","x"],"terms":[]}"#).is_err());
        assert!(MultiPoly::from_json("[1,2]").is_err());
    }

    #[test]
    fn duplicate_terms_merge() {
        let p = MultiPoly::from_json(
            r#"{"vars":["x"],"terms":[{"coeff":"1/2","exps":[1]},{"coeff":"1/2","exps":[1]}]}"#,
        )
        .unwrap();
        assert_eq!(p.to_json(), r#"{"vars":["x"],"terms":[{"coeff":"1/1","exps":[1]}]}"#);
    }
}
