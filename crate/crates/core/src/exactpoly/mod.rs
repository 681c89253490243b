//! Sparse multivariate polynomials over the rationals.
//!
//! A [`MultiPoly`] is a map from dense exponent vectors to nonzero
//! [`Rational`] coefficients, indexed by an ordered [`VarTable`]. Binary
//! operations on polynomials over different tables promote both sides to the
//! union table (left table first, then the new names of the right table).
//!
//! Symbolic constants are ordinary variables; there is no separate parameter
//! ring.

mod format;
mod json;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use format::latex_var;
pub use json::{parse_rational, rational_to_string, PolyJson, TermJson};

/// Exact rational scalar, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Exponent vector, one entry per variable of the owning [`VarTable`].
pub type Exponents = Vec<u32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}` in variable table")]
    DuplicateVariable(String),
    #[error("term has {got} exponents but the table has {expected} variables")]
    ExponentArity { expected: usize, got: usize },
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("invalid polynomial json: {0}")]
    Json(String),
}

/// Shorthand for building a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for building the rational `num/den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

// ---------------------------------------------------------------------------
// Variable table
// ---------------------------------------------------------------------------

/// Ordered list of distinct variable names. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarTable(Arc<[String]>);

impl VarTable {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(VarTable(names.into()))
    }

    pub fn empty() -> Self {
        VarTable(Vec::new().into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// Names of `self` followed by the names of `other` not already present.
    pub fn union(&self, other: &VarTable) -> VarTable {
        if self == other || other.0.iter().all(|n| self.contains(n)) {
            return self.clone();
        }
        let mut names: Vec<String> = self.0.to_vec();
        for n in other.0.iter() {
            if !self.contains(n) {
                names.push(n.clone());
            }
        }
        VarTable(names.into())
    }

    /// Table extended with `name` if it is missing.
    pub fn with(&self, name: &str) -> VarTable {
        if self.contains(name) {
            self.clone()
        } else {
            let mut names = self.0.to_vec();
            names.push(name.to_string());
            VarTable(names.into())
        }
    }
}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

/// Sparse polynomial with rational coefficients. Zero coefficients are never
/// stored, so the zero polynomial has an empty term map.
#[derive(Clone)]
pub struct MultiPoly {
    vars: VarTable,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &VarTable) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &VarTable) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &VarTable, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn from_int(vars: &VarTable, c: i64) -> Self {
        Self::constant(vars, rat(c))
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &VarTable, name: &str) -> Result<Self, PolyError> {
        let idx = vars.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.into()))?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Ok(Self::monomial(vars, e, Rational::one()))
    }

    pub fn monomial(vars: &VarTable, exps: Exponents, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector arity");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Builds a canonical polynomial, summing duplicate exponent vectors.
    pub fn from_terms<I>(vars: &VarTable, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(PolyError::ExponentArity { expected: vars.len(), got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant value if the polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn index(&self, v: &str) -> Result<usize, PolyError> {
        self.vars.index_of(v).ok_or_else(|| PolyError::UnknownVariable(v.into()))
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable that actually occurs in `self`.
    pub fn to_table(&self, target: &VarTable) -> Result<Self, PolyError> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|e| e[i] != 0) {
                        return Err(PolyError::UnknownVariable(name.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &x) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    ne[j] = x;
                }
            }
            out.terms.insert(ne, c.clone());
        }
        Ok(out)
    }

    /// Extends the table with `name` when missing.
    pub fn with_var(&self, name: &str) -> Self {
        if self.vars.contains(name) {
            self.clone()
        } else {
            self.to_table(&self.vars.with(name)).expect("superset table")
        }
    }

    /// Names of variables with a nonzero exponent in some term, in table order.
    pub fn support(&self) -> Vec<String> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] != 0))
            .map(|i| self.vars.names()[i].clone())
            .collect()
    }

    /// Drops variables that do not occur.
    pub fn compact(&self) -> Self {
        let table = VarTable::new(self.support()).expect("subset of a valid table");
        self.to_table(&table).expect("support is contained")
    }

    fn promote_pair(a: &Self, b: &Self) -> (Self, Self) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let u = a.vars.union(&b.vars);
        (a.to_table(&u).unwrap(), b.to_table(&u).unwrap())
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.vars != other.vars {
            let (a, b) = Self::promote_pair(self, other);
            return a.add(&b);
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.vars != other.vars {
            let (a, b) = Self::promote_pair(self, other);
            return a.mul(&b);
        }
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = MultiPoly::mul(&base, &base);
            }
        }
        acc
    }

    // -----------------------------------------------------------------------
    // Calculus and coefficient access
    // -----------------------------------------------------------------------

    /// Partial derivative with respect to `v`.
    pub fn derive(&self, v: &str) -> Result<Self, PolyError> {
        let i = self.index(v)?;
        Ok(self.derive_at(i))
    }

    fn derive_at(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.terms.insert(ne, c * rat(e[i] as i64));
        }
        out
    }

    /// `n`-th partial derivative with respect to `v`.
    pub fn derive_n(&self, v: &str, n: u32) -> Result<Self, PolyError> {
        let i = self.index(v)?;
        let mut p = self.clone();
        for _ in 0..n {
            if p.is_zero() {
                break;
            }
            p = p.derive_at(i);
        }
        Ok(p)
    }

    /// Antiderivative in `v` with zero constant of integration.
    pub fn integrate(&self, v: &str) -> Result<Self, PolyError> {
        let i = self.index(v)?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[i] += 1;
            let d = rat(ne[i] as i64);
            out.terms.insert(ne, c / d);
        }
        Ok(out)
    }

    /// Polynomial in the remaining variables multiplying `v^power`. The
    /// result keeps the table; `v` simply no longer occurs.
    pub fn coeff_of(&self, v: &str, power: u32) -> Result<Self, PolyError> {
        let i = self.index(v)?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == power {
                let mut ne = e.clone();
                ne[i] = 0;
                out.terms.insert(ne, c.clone());
            }
        }
        Ok(out)
    }

    /// Degree in `v`; `None` for the zero polynomial.
    pub fn degree_in(&self, v: &str) -> Result<Option<u32>, PolyError> {
        let i = self.index(v)?;
        Ok(self.terms.keys().map(|e| e[i]).max())
    }

    /// Degree in `v`, treating a variable absent from the table as degree 0.
    pub fn degree_or_zero(&self, v: &str) -> u32 {
        match self.vars.index_of(v) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Smallest exponent of `v` over all terms; `None` for zero.
    pub fn min_degree_in(&self, v: &str) -> Result<Option<u32>, PolyError> {
        let i = self.index(v)?;
        Ok(self.terms.keys().map(|e| e[i]).min())
    }

    /// Coefficient of the highest power of `v`.
    pub fn leading_coeff(&self, v: &str) -> Result<Self, PolyError> {
        match self.degree_in(v)? {
            Some(d) => self.coeff_of(v, d),
            None => Ok(Self::zero(&self.vars)),
        }
    }

    /// Replaces `v` by `value`. The result is over the union of both tables
    /// with `v` still present but no longer occurring.
    pub fn substitute(&self, v: &str, value: &Self) -> Result<Self, PolyError> {
        let mut map = BTreeMap::new();
        map.insert(v.to_string(), value.clone());
        self.substitute_all(&map)
    }

    pub fn substitute_value(&self, v: &str, value: &Rational) -> Result<Self, PolyError> {
        let i = self.index(v)?;
        let mut out = Self::zero(&self.vars);
        let mut powers: Vec<Rational> = vec![Rational::one()];
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut ne = e.clone();
            ne[i] = 0;
            out.add_term(ne, c * &powers[k]);
        }
        Ok(out)
    }

    /// Simultaneous substitution: every `name -> poly` in `map` is applied to
    /// the original polynomial at once, so the images are never rewritten
    /// again. Every key must be a variable of `self`.
    pub fn substitute_all(&self, map: &BTreeMap<String, MultiPoly>) -> Result<Self, PolyError> {
        let mut table = self.vars.clone();
        for (k, p) in map {
            if !self.vars.contains(k) {
                return Err(PolyError::UnknownVariable(k.clone()));
            }
            table = table.union(p.vars());
        }
        let images: Vec<(usize, MultiPoly)> = map
            .iter()
            .map(|(k, p)| (self.vars.index_of(k).unwrap(), p.to_table(&table).unwrap()))
            .collect();
        let src = self.to_table(&table)?;
        let replaced: Vec<usize> =
            images.iter().map(|(i, _)| table.index_of(&self.vars.names()[*i]).unwrap()).collect();

        let mut cache: Vec<Vec<MultiPoly>> = images.iter().map(|(_, p)| vec![Self::one(&table), p.clone()]).collect();
        let mut out = Self::zero(&table);
        for (e, c) in &src.terms {
            let mut base = e.clone();
            for &j in &replaced {
                base[j] = 0;
            }
            let mut term = Self::monomial(&table, base, c.clone());
            for (slot, &j) in replaced.iter().enumerate() {
                let k = e[j] as usize;
                if k == 0 {
                    continue;
                }
                while cache[slot].len() <= k {
                    let next = cache[slot].last().unwrap().mul(&cache[slot][1]);
                    cache[slot].push(next);
                }
                term = term.mul(&cache[slot][k]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Evaluates every variable; all variables must be bound.
    pub fn evaluate(&self, values: &BTreeMap<String, Rational>) -> Result<Rational, PolyError> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = &self.vars.names()[i];
                let x = values.get(name).ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
                term *= num_traits::pow(x.clone(), k as usize);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Evaluates a polynomial whose only occurring variable is `v`.
    pub fn eval_univariate(&self, v: &str, at: i64) -> Result<Rational, PolyError> {
        let support = self.support();
        if let Some(other) = support.iter().find(|s| *s != v) {
            return Err(PolyError::UnknownVariable(other.clone()));
        }
        if support.is_empty() {
            return Ok(self.as_constant().unwrap());
        }
        let i = self.index(v)?;
        let x = rat(at);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * num_traits::pow(x.clone(), e[i] as usize);
        }
        Ok(acc)
    }

    /// Exact equality independent of table order and unused variables.
    pub fn same_as(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        self.sub(other).is_zero()
    }

    /// Coefficient of a term given as `(name, exponent)` pairs; missing
    /// names count as exponent zero.
    pub fn coefficient(&self, monomial: &[(&str, u32)]) -> Rational {
        let mut e = vec![0u32; self.vars.len()];
        for (name, k) in monomial {
            match self.vars.index_of(name) {
                Some(i) => e[i] = *k,
                None if *k == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Partial Wronskian `g_v * h - g * h_v`.
pub fn wronskian(g: &MultiPoly, h: &MultiPoly, v: &str) -> Result<MultiPoly, PolyError> {
    let (g, h) = MultiPoly::promote_pair(g, h);
    let (g, h) = (g.with_var(v), h.with_var(v));
    Ok(g.derive(v)?.mul(&h).sub(&g.mul(&h.derive(v)?)))
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for MultiPoly {}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({:?}: {})", self.vars, self)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$method(self, rhs)
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                MultiPoly::$method(&self, &rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$method(&self, rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                MultiPoly::$method(self, &rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(&self)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

/// Binomial coefficient as a rational.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

/// `q!` as a rational.
pub fn factorial(q: u32) -> Rational {
    Rational::from_integer((1..=q).fold(BigInt::one(), |a, i| a * BigInt::from(i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xt() -> VarTable {
        VarTable::new(["x", "t"]).unwrap()
    }

    fn x(v: &VarTable) -> MultiPoly {
        MultiPoly::var(v, "x").unwrap()
    }

    fn t(v: &VarTable) -> MultiPoly {
        MultiPoly::var(v, "t").unwrap()
    }

    #[test]
    fn add_and_mul_examples() {
        let v = xt();
        let one = MultiPoly::one(&v);
        assert_eq!(&(&x(&v) + &one) + &(&x(&v) - &one), x(&v).scale_int(2));
        let p = (&x(&v) + &t(&v)) * (&x(&v) - &t(&v));
        assert_eq!(p, x(&v).pow(2) - t(&v).pow(2));
    }

    #[test]
    fn z_sum_example() {
        let v = VarTable::new(["m"]).unwrap();
        let m = MultiPoly::var(&v, "m").unwrap();
        let one = MultiPoly::one(&v);
        let mm1 = &m - &one;
        let z1 = m.pow(2) * mm1.pow(2);
        let z2 = (m.pow(3) * mm1.pow(3) * (&m - &one.scale_int(3)) * (&m - &one.scale_int(4))).scale(&ratio(1, 2));
        let quartic = m.pow(4) - m.pow(3).scale_int(8) + m.pow(2).scale_int(19) - m.scale_int(12) + one.scale_int(72);
        let expect = (m.pow(2) * mm1.pow(2) * quartic).scale(&ratio(1, 2));
        assert_eq!(&z2 + &z1.scale_int(36), expect);
    }

    #[test]
    fn derive_examples() {
        let v = VarTable::new(["x", "t", "c0"]).unwrap();
        assert_eq!(x(&v).pow(3).derive("x").unwrap(), x(&v).pow(2).scale_int(3));
        let p = t(&v).scale_int(36) + MultiPoly::var(&v, "c0").unwrap();
        assert_eq!(p.derive("t").unwrap(), MultiPoly::from_int(&v, 36));
        let q = x(&v).pow(2) * t(&v);
        assert_eq!(q.derive("x").unwrap().derive("t").unwrap(), x(&v).scale_int(2));
        assert_eq!(p.derive("y"), Err(PolyError::UnknownVariable("y".into())));
    }

    #[test]
    fn integrate_examples() {
        let v = xt();
        assert_eq!(MultiPoly::from_int(&v, 36).integrate("t").unwrap(), t(&v).scale_int(36));
        assert!(MultiPoly::zero(&v).integrate("t").unwrap().is_zero());
        assert_eq!(t(&v).scale_int(2).integrate("t").unwrap(), t(&v).pow(2));
    }

    #[test]
    fn wronskian_examples() {
        let v = VarTable::new(["x", "t", "c1", "c2"]).unwrap();
        let g = x(&v).pow(2) * t(&v) + MultiPoly::from_int(&v, 5);
        assert!(wronskian(&g, &g, "t").unwrap().is_zero());
        let f = x(&v).pow(3) + t(&v).scale_int(36);
        let w = wronskian(&f.derive("x").unwrap(), &f, "t").unwrap();
        assert_eq!(w, x(&v).pow(2).scale_int(-108));
        let c1 = MultiPoly::var(&v, "c1").unwrap();
        let c2 = MultiPoly::var(&v, "c2").unwrap();
        assert!(wronskian(&c2, &c1, "t").unwrap().is_zero());
    }

    #[test]
    fn coeff_of_examples() {
        let v = VarTable::new(["x", "t", "c2"]).unwrap();
        let c2 = MultiPoly::var(&v, "c2").unwrap();
        let p = x(&v).pow(3) + &c2 * &x(&v).pow(2) + t(&v).scale_int(36);
        assert_eq!(p.coeff_of("x", 2).unwrap(), c2);
        assert!(x(&v).pow(3).coeff_of("x", 5).unwrap().is_zero());
    }

    #[test]
    fn substitute_examples() {
        let v = VarTable::new(["m"]).unwrap();
        let m = MultiPoly::var(&v, "m").unwrap();
        let one = MultiPoly::one(&v);
        let z1 = m.pow(2) * (&m - &one).pow(2);
        assert_eq!(z1.substitute_value("m", &rat(5)).unwrap().as_constant(), Some(rat(400)));
        let quartic = m.pow(4) - m.pow(3).scale_int(8) + m.pow(2).scale_int(19) - m.scale_int(12) + one.scale_int(72);
        let s = (&z1 * &quartic).scale(&ratio(1, 2));
        assert_eq!(s.eval_univariate("m", 5).unwrap(), rat(22400));

        let w = VarTable::new(["x", "c0"]).unwrap();
        let p = MultiPoly::var(&w, "x").unwrap() + MultiPoly::var(&w, "c0").unwrap();
        assert_eq!(p.substitute_value("c0", &rat(0)).unwrap(), MultiPoly::var(&w, "x").unwrap());
    }

    #[test]
    fn simultaneous_substitution_does_not_chain() {
        let v = VarTable::new(["a", "b"]).unwrap();
        let a = MultiPoly::var(&v, "a").unwrap();
        let b = MultiPoly::var(&v, "b").unwrap();
        let p = &a + &b.scale_int(10);
        let mut map = BTreeMap::new();
        map.insert("a".to_string(), b.clone());
        map.insert("b".to_string(), a.clone());
        assert_eq!(p.substitute_all(&map).unwrap(), &b + &a.scale_int(10));
    }

    #[test]
    fn promotion_uses_union_order() {
        let a = MultiPoly::var(&VarTable::new(["x", "t"]).unwrap(), "x").unwrap();
        let b = MultiPoly::var(&VarTable::new(["t", "y"]).unwrap(), "y").unwrap();
        let s = &a + &b;
        assert_eq!(s.vars().names(), &["x", "t", "y"]);
        assert_eq!(s.num_terms(), 2);
    }

    #[test]
    fn duplicate_names_rejected() {
        assert_eq!(VarTable::new(["x", "x"]), Err(PolyError::DuplicateVariable("x".into())));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let v = xt();
        let p = MultiPoly::from_terms(&v, [(vec![1, 0], rat(2)), (vec![1, 0], rat(-2)), (vec![0, 1], rat(0))]).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn binomial_and_factorial() {
        assert_eq!(binomial(4, 2), rat(6));
        assert_eq!(binomial(3, 5), rat(0));
        assert_eq!(factorial(5), rat(120));
    }
}
