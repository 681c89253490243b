//! Polynomial solutions of `T f = 0` by x-degree, and the rational
//! solutions `u = 2 (ln f)_x` of
//!
//! ```text
//! u_t + 3/2 (u_x)^2 + 3/2 u^2 u_x + 3/8 u^4 = 0.
//! ```
//!
//! Degrees 0..=4 are settled by building the fundamental family and solving
//! the remainder constraints, each affine in one constant; degree 2 fails
//! with `T f = 12`. Degrees 5 and up are delegated to
//! [`crate::leading::nonexistence_certificate`].

use num_integer::Integer;
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::{ratio, MultiPoly, PolyError, Rational};
use crate::fundsol::{build_family, family_table};
use crate::kdvlike;
use crate::leading::{nonexistence_certificate, Certificate, LeadError, Verdict, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("remainder constraint is not affine in any free constant: {0}")]
    Nonlinear(String),
    #[error("solved family still has T f = {0}")]
    Unsolved(String),
    #[error("the zero polynomial has no logarithmic derivative")]
    ZeroPolynomial,
    #[error(transparent)]
    Lead(#[from] LeadError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `constant -> value`, applied to the fundamental family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub constant: String,
    pub value: MultiPoly,
}

/// Monic polynomial solution of x-degree `m` in the remaining free constants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFamily {
    pub m: usize,
    pub f: MultiPoly,
    pub constraints: Vec<Constraint>,
}

impl SolutionFamily {
    /// Constants that still occur in `f`.
    pub fn free_constants(&self) -> Vec<String> {
        self.f.support().into_iter().filter(|v| v != "x" && v != "t").collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Classification {
    Family(SolutionFamily),
    NotExists(Certificate),
}

impl Classification {
    pub fn family(&self) -> Option<&SolutionFamily> {
        match self {
            Classification::Family(f) => Some(f),
            Classification::NotExists(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Classification::Family(_) => None,
            Classification::NotExists(c) => Some(c),
        }
    }
}

/// Solves one constraint for a constant that occurs linearly with a nonzero
/// rational coefficient, trying constants in `order`.
fn solve_one(c: &MultiPoly, order: &[String]) -> Option<(String, MultiPoly)> {
    for name in order {
        if c.degree_in(name).ok().flatten() != Some(1) {
            continue;
        }
        let lin = c.coeff_of(name, 1).ok()?;
        let Some(a) = lin.as_constant() else { continue };
        let rest = c.coeff_of(name, 0).ok()?;
        return Some((name.clone(), rest.scale(&(-Rational::one() / a))));
    }
    None
}

/// All `(x, t)` coefficients of `T f` for the family, as polynomials in the
/// constants.
fn constraint_polys(f: &MultiPoly) -> Vec<MultiPoly> {
    let t = kdvlike::t_operator(f);
    let (xi, ti) = (t.vars().index_of("x").unwrap(), t.vars().index_of("t").unwrap());
    let mut keys: Vec<(u32, u32)> = t.terms().map(|(e, _)| (e[xi], e[ti])).collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .map(|(px, pt)| t.coeff_of("x", px).unwrap().coeff_of("t", pt).unwrap())
        .collect()
}

/// Classification of polynomial solutions of `T f = 0` with x-degree `m`.
pub fn classify(m: usize) -> Result<Classification, SolveError> {
    if m >= 5 {
        return Ok(Classification::NotExists(nonexistence_certificate(m, false)?));
    }
    let fam = build_family(m);
    let mut f = fam.fbar.clone();
    let mut constraints = Vec::new();
    // last-introduced constant first
    let order: Vec<String> = fam.constants.iter().rev().cloned().collect();
    loop {
        let pending: Vec<MultiPoly> = constraint_polys(&f);
        if pending.is_empty() {
            break;
        }
        if let Some(value) = pending.iter().find_map(MultiPoly::as_constant) {
            let witness = Witness { poly: format!("T({})", fam.fbar), value };
            return Ok(Classification::NotExists(Certificate {
                m,
                verdict: Verdict::NotExists,
                witness: Some(witness),
                checked: Vec::new(),
                leading_y: Vec::new(),
                deciding: None,
            }));
        }
        let Some((name, value)) = pending.iter().find_map(|c| solve_one(c, &order)) else {
            return Err(SolveError::Nonlinear(pending[0].to_string()));
        };
        f = f.substitute(&name, &value)?;
        constraints.push(Constraint { constant: name, value });
    }
    let residual = kdvlike::t_operator(&f);
    if !residual.is_zero() {
        return Err(SolveError::Unsolved(residual.to_string()));
    }
    Ok(Classification::Family(SolutionFamily { m, f, constraints }))
}

/// Closed forms of the degree 0..=4 solutions in family constant naming
/// (constants named by the power of `x` they multiply).
pub fn reference_family(m: usize) -> Option<MultiPoly> {
    let table = family_table(m);
    let v = |n: &str| MultiPoly::var(&table, n).unwrap();
    let k = |c: i64| MultiPoly::from_int(&table, c);
    let q = |a, b| MultiPoly::constant(&table, ratio(a, b));
    Some(match m {
        0 => k(1),
        1 => v("x") + v("c0"),
        3 => v("x").pow(3) + v("c2") * v("x").pow(2) + q(1, 3) * v("c2").pow(2) * v("x") + k(36) * v("t") + v("c0"),
        4 => {
            v("x").pow(4) + v("c3") * v("x").pow(3) + v("c2") * v("x").pow(2) + (k(144) * v("t") + v("c1")) * v("x")
                + k(36) * v("c3") * v("t")
                + q(1, 4) * v("c1") * v("c3")
                - q(1, 12) * v("c2").pow(2)
        }
        _ => return None,
    })
}

// ---------------------------------------------------------------------------
// Rational solutions
// ---------------------------------------------------------------------------

/// `u = numerator / denominator`, kept unreduced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSolution {
    pub numerator: MultiPoly,
    pub denominator: MultiPoly,
}

fn lcm_of_denominators(p: &MultiPoly) -> BigInt {
    p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
}

impl RationalSolution {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Same function with the denominator's coefficients cleared to integers.
    pub fn normalized(&self) -> RationalSolution {
        let l = Rational::from_integer(lcm_of_denominators(&self.denominator));
        RationalSolution { numerator: self.numerator.scale(&l), denominator: self.denominator.scale(&l) }
    }

    /// `self` and `other` represent the same function:
    /// `N1 D2 - N2 D1 = 0`.
    pub fn equivalent(&self, other: &RationalSolution) -> bool {
        (&self.numerator * &other.denominator).same_as(&(&other.numerator * &self.denominator))
    }

    fn halved(&self) -> Option<MultiPoly> {
        let h = self.numerator.scale(&ratio(1, 2));
        (h.num_terms() > 1 && h.terms().all(|(_, c)| c.is_integer())).then_some(h)
    }

    pub fn to_text(&self) -> String {
        let n = self.normalized();
        if n.is_zero() {
            return "0".into();
        }
        let num = match n.halved() {
            Some(h) => format!("2*({h})"),
            None if n.numerator.num_terms() > 1 => format!("({})", n.numerator),
            None => n.numerator.to_string(),
        };
        if n.denominator.as_constant().is_some_and(|c| c.is_one()) {
            num
        } else if n.denominator.num_terms() > 1 {
            format!("{num}/({})", n.denominator)
        } else {
            format!("{num}/{}", n.denominator)
        }
    }

    pub fn to_latex(&self) -> String {
        let n = self.normalized();
        if n.is_zero() {
            return "0".into();
        }
        let num = match n.halved() {
            Some(h) => format!("2({})", h.to_latex()),
            None => n.numerator.to_latex(),
        };
        format!("\\frac{{{num}}}{{{}}}", n.denominator.to_latex())
    }
}

/// `u = 2 f_x / f`.
pub fn log_derivative(f: &MultiPoly) -> Result<RationalSolution, SolveError> {
    if f.is_zero() {
        return Err(SolveError::ZeroPolynomial);
    }
    let f = f.with_var("x").with_var("t");
    let numer = f.derive("x")?.scale_int(2);
    if numer.is_zero() {
        return Ok(RationalSolution { numerator: numer, denominator: MultiPoly::one(f.vars()) });
    }
    Ok(RationalSolution { numerator: numer, denominator: f })
}

/// Numerator of the PDE residual over the common denominator `8 D^4`:
///
/// ```text
/// 8 (N_t D - N D_t) D^2 + 12 (N_x D - N D_x)^2 + 12 N^2 (N_x D - N D_x) + 3 N^4
/// ```
pub fn verify_kdvlike(u: &RationalSolution) -> MultiPoly {
    let table = u.numerator.vars().union(u.denominator.vars()).with("x").with("t");
    let n = u.numerator.to_table(&table).unwrap();
    let d = u.denominator.to_table(&table).unwrap();
    let quot = |v: &str| n.derive(v).unwrap() * &d - &n * d.derive(v).unwrap();
    let (qt, qx) = (quot("t"), quot("x"));
    (qt * d.pow(2)).scale_int(8) + qx.pow(2).scale_int(12) + (n.pow(2) * qx).scale_int(12) + n.pow(4).scale_int(3)
}

/// Rational solution for the degree-`m` family, or the certificate that
/// none exists.
pub fn rational_solution(m: usize) -> Result<Result<RationalSolution, Certificate>, SolveError> {
    Ok(match classify(m)? {
        Classification::Family(fam) => Ok(log_derivative(&fam.f)?),
        Classification::NotExists(c) => Err(c),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, VarTable};

    #[test]
    fn low_degrees() {
        for m in [0, 1, 3, 4] {
            let fam = classify(m).unwrap().family().cloned().unwrap();
            assert_eq!(fam.f, reference_family(m).unwrap(), "m = {m}");
            assert!(kdvlike::t_operator(&fam.f).is_zero());
        }
        let c2 = classify(2).unwrap();
        let w = c2.certificate().unwrap().witness.clone().unwrap();
        assert_eq!(w.value, rat(12));
    }

    #[test]
    fn constraints_recorded() {
        let fam = classify(3).unwrap().family().cloned().unwrap();
        assert_eq!(fam.constraints.len(), 1);
        assert_eq!(fam.constraints[0].constant, "c1");
        let t = family_table(3);
        let c2 = MultiPoly::var(&t, "c2").unwrap();
        assert_eq!(fam.constraints[0].value, c2.pow(2).scale(&ratio(1, 3)));
        assert_eq!(fam.free_constants(), vec!["c2", "c0"]);

        let fam4 = classify(4).unwrap().family().cloned().unwrap();
        assert_eq!(fam4.constraints.iter().map(|c| c.constant.as_str()).collect::<Vec<_>>(), ["c0"]);
    }

    #[test]
    fn high_degree_delegates() {
        let c = classify(6).unwrap();
        assert_eq!(c.certificate().unwrap().witness.as_ref().unwrap().poly, "z2-36z1");
    }

    #[test]
    fn log_derivative_cases() {
        let t = VarTable::new(["x", "t", "c0"]).unwrap();
        let f = MultiPoly::var(&t, "x").unwrap() + MultiPoly::var(&t, "c0").unwrap();
        let u = log_derivative(&f).unwrap();
        assert_eq!(u.numerator.as_constant(), Some(rat(2)));
        assert!(verify_kdvlike(&u).is_zero());
        assert_eq!(u.to_text(), "2/(x + c0)");

        let one = log_derivative(&MultiPoly::one(&t)).unwrap();
        assert!(one.is_zero());
        assert_eq!(one.denominator.as_constant(), Some(rat(1)));
        assert_eq!(log_derivative(&MultiPoly::zero(&t)), Err(SolveError::ZeroPolynomial));
    }

    #[test]
    fn wrong_factor_is_detected() {
        let t = VarTable::new(["x", "t"]).unwrap();
        let x = MultiPoly::var(&t, "x").unwrap();
        let u = RationalSolution { numerator: MultiPoly::one(&t), denominator: x.clone() };
        assert_eq!(verify_kdvlike(&u).as_constant(), Some(rat(3)));
        let u2 = RationalSolution { numerator: MultiPoly::from_int(&t, 2), denominator: x };
        assert!(verify_kdvlike(&u2).is_zero());
    }

    #[test]
    fn displays_match_closed_forms() {
        let u3 = rational_solution(3).unwrap().unwrap();
        assert_eq!(
            u3.to_latex(),
            "\\frac{2(9x^{2}+6c_{2}x+c_{2}^{2})}{3x^{3}+3c_{2}x^{2}+c_{2}^{2}x+108t+3c_{0}}"
        );
        let u4 = rational_solution(4).unwrap().unwrap();
        assert_eq!(
            u4.to_latex(),
            "\\frac{2(48x^{3}+36c_{3}x^{2}+24c_{2}x+1728t+12c_{1})}\
             {12x^{4}+12c_{3}x^{3}+12c_{2}x^{2}+1728tx+12c_{1}x+432c_{3}t+3c_{1}c_{3}-c_{2}^{2}}"
        );
        assert!(rational_solution(2).unwrap().is_err());
    }
}
