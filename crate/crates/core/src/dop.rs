//! Generalized bilinear derivatives `D_{p,x1}^{n1} ... D_{p,xk}^{nk} f.g`.
//!
//! Each factor `(d/dx + alpha_p d/dx')^n` is expanded binomially and the
//! primed variables are identified with the unprimed ones after
//! differentiation. Powers of `alpha_p` from different factors are added as
//! integers first and only then reduced: `alpha_p^j = (-1)^(j mod p)`.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use thiserror::Error;

use crate::exactpoly::{binomial, MultiPoly, PolyError, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OpError {
    #[error("operator parameter p must be at least 2, got {0}")]
    InvalidP(u64),
    #[error("variable `{0}` appears twice in the operator")]
    RepeatedVariable(String),
    #[error("malformed operator `{0}`; expected D(p;var^pow[,var^pow]*)")]
    Syntax(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `alpha_p^m = (-1)^(m mod p)`.
pub fn alpha_pow(p: u64, m: u64) -> Result<i8, OpError> {
    if p < 2 {
        return Err(OpError::InvalidP(p));
    }
    Ok(if (m % p).is_multiple_of(2) { 1 } else { -1 })
}

/// A product of generalized bilinear derivatives sharing one parameter `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearOp {
    p: u64,
    factors: Vec<(String, u32)>,
}

impl BilinearOp {
    pub fn new<S: Into<String>>(p: u64, factors: impl IntoIterator<Item = (S, u32)>) -> Result<Self, OpError> {
        if p < 2 {
            return Err(OpError::InvalidP(p));
        }
        let factors: Vec<(String, u32)> = factors.into_iter().map(|(v, n)| (v.into(), n)).collect();
        for (i, (v, _)) in factors.iter().enumerate() {
            if factors[..i].iter().any(|(w, _)| w == v) {
                return Err(OpError::RepeatedVariable(v.clone()));
            }
        }
        Ok(BilinearOp { p, factors })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn factors(&self) -> &[(String, u32)] {
        &self.factors
    }

    /// Applies the operator to `f.g` and sets primed variables equal to the
    /// unprimed ones.
    pub fn apply(&self, f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly, OpError> {
        let table = f.vars().union(g.vars());
        for (v, _) in &self.factors {
            if !table.contains(v) {
                return Err(PolyError::UnknownVariable(v.clone()).into());
            }
        }
        let f = f.to_table(&table)?;
        let g = g.to_table(&table)?;
        let mut acc = MultiPoly::zero(&table);
        self.expand(0, &f, &g, Rational::one(), 0, &mut acc)?;
        Ok(acc)
    }

    fn expand(
        &self,
        depth: usize,
        f: &MultiPoly,
        g: &MultiPoly,
        coeff: Rational,
        alpha_exp: u64,
        acc: &mut MultiPoly,
    ) -> Result<(), OpError> {
        if f.is_zero() || g.is_zero() {
            return Ok(());
        }
        let Some((v, n)) = self.factors.get(depth) else {
            let sign = alpha_pow(self.p, alpha_exp)?;
            *acc = acc.add(&f.mul(g).scale(&(coeff * Rational::from_integer(sign.into()))));
            return Ok(());
        };
        let n = *n;
        // g derivatives are built incrementally; f starts at order n
        let mut g_j = g.clone();
        for j in 0..=n {
            let f_j = f.derive_n(v, n - j)?;
            let c = &coeff * binomial(n, j);
            self.expand(depth + 1, &f_j, &g_j, c, alpha_exp + j as u64, acc)?;
            if j < n {
                g_j = g_j.derive(v)?;
            }
        }
        Ok(())
    }

    /// Sum of several operators applied to the same pair.
    pub fn apply_sum(ops: &[BilinearOp], f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly, OpError> {
        let mut acc = MultiPoly::zero(&f.vars().union(g.vars()));
        for op in ops {
            acc = acc.add(&op.apply(f, g)?);
        }
        Ok(acc)
    }
}

impl FromStr for BilinearOp {
    type Err = OpError;

    /// Grammar: `D(p;var^pow[,var^pow]*)`, whitespace ignored.
    fn from_str(s: &str) -> Result<Self, OpError> {
        let bad = || OpError::Syntax(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact.strip_prefix("D(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let (p, rest) = body.split_once(';').ok_or_else(bad)?;
        let p: u64 = p.parse().map_err(|_| bad())?;
        let mut factors = Vec::new();
        for item in rest.split(',') {
            let (v, n) = item.split_once('^').ok_or_else(bad)?;
            let valid_name = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid_name {
                return Err(bad());
            }
            factors.push((v.to_string(), n.parse::<u32>().map_err(|_| bad())?));
        }
        BilinearOp::new(p, factors)
    }
}

impl fmt::Display for BilinearOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({};", self.p)?;
        for (i, (v, n)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}^{n}")?;
        }
        f.write_str(")")
    }
}

/// The two operators whose sum defines the KdV-like bilinear equation:
/// `D_{3,x} D_{3,t}` and `D_{3,x}^4`.
pub fn kdvlike_ops() -> [BilinearOp; 2] {
    [
        BilinearOp::new(3, [("x", 1), ("t", 1)]).expect("valid operator"),
        BilinearOp::new(3, [("x", 4)]).expect("valid operator"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::VarTable;

    fn poly(v: &VarTable, name: &str) -> MultiPoly {
        MultiPoly::var(v, name).unwrap()
    }

    #[test]
    fn alpha_residue_rule() {
        assert_eq!(alpha_pow(3, 4).unwrap(), -1);
        assert_eq!(alpha_pow(3, 2).unwrap(), 1);
        for m in 0..=5 {
            assert_eq!(alpha_pow(2, m).unwrap(), if m % 2 == 0 { 1 } else { -1 });
        }
        assert_eq!(alpha_pow(1, 3), Err(OpError::InvalidP(1)));
    }

    #[test]
    fn parse_and_display() {
        let op: BilinearOp = "D(3; x^1, t^1)".parse().unwrap();
        assert_eq!(op, kdvlike_ops()[0]);
        assert_eq!(op.to_string(), "D(3;x^1,t^1)");
        assert!(matches!("D(1;x^2)".parse::<BilinearOp>(), Err(OpError::InvalidP(1))));
        assert!(matches!("D(3;x^2,x^1)".parse::<BilinearOp>(), Err(OpError::RepeatedVariable(_))));
        assert!(matches!("D(3;x)".parse::<BilinearOp>(), Err(OpError::Syntax(_))));
        assert!(matches!("E(3;x^1)".parse::<BilinearOp>(), Err(OpError::Syntax(_))));
        assert!(matches!("D(3;x^-1)".parse::<BilinearOp>(), Err(OpError::Syntax(_))));
    }

    #[test]
    fn cli_examples() {
        let v = VarTable::new(["x", "t"]).unwrap();
        let x = poly(&v, "x");
        let t = poly(&v, "t");
        let cube = x.pow(3);
        let r = "D(3;x^4)".parse::<BilinearOp>().unwrap().apply(&cube, &cube).unwrap();
        assert_eq!(r, x.pow(2).scale_int(216));

        let f = x.pow(2) * &t + &x;
        let r = "D(2;x^1,t^1)".parse::<BilinearOp>().unwrap().apply(&f, &f).unwrap();
        assert_eq!(r, x.pow(2).scale_int(2));

        let r = "D(3;x^0)".parse::<BilinearOp>().unwrap().apply(&f, &f).unwrap();
        assert_eq!(r, f.pow(2));
    }

    #[test]
    fn unknown_variable_is_an_error() {
        let v = VarTable::new(["x"]).unwrap();
        let f = poly(&v, "x");
        let op = BilinearOp::new(3, [("y", 1)]).unwrap();
        assert!(matches!(op.apply(&f, &f), Err(OpError::Poly(PolyError::UnknownVariable(_)))));
    }
}
