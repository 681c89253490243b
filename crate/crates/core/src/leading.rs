//! Remainder polynomials of a fundamental family and their leading
//! t-coefficients, which decide existence of solutions of x-degree `m >= 5`.
//!
//! With `Q_l = P_{m,m-l}` the remainder band of the fundamental solution is
//! `R_(m) fbar = sum_{k=m+1}^{2m-1} R_k x^{2m-k-1}` where
//!
//! ```text
//! R_k = sum_{l=k-m}^{m} (k-2l)/2 W(Q_l, Q_{k-l})
//!     + 3 sum_{l=k-m-1}^{m-2} (m-l)(m-l-1)(m+l-k+3)(m+l-k+2) Q_l Q_{k-l-3}.
//! ```
//!
//! For `k = 3q + r` the coefficient of `t^{q-1}` in `R_k` only involves the
//! leading polynomials `x_{l,u}` (coefficient of `t^u` in `Q_l`, `l = 3u+v`)
//! with `v <= r`. When `k = 3q` it involves only `z_u = x_{3u,u}`, is free
//! of integration constants, and is written `Y_q`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::{factorial, rat, ratio, wronskian, MultiPoly, PolyError, Rational, VarTable};
use crate::fundsol::{build_q, FundamentalFamily};
use crate::kdvlike;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LeadError {
    #[error("index k = {k} outside the remainder range {lo}..={hi} for m = {m}")]
    IndexOutOfRange { k: usize, m: usize, lo: usize, hi: usize },
    #[error("nonexistence certificates cover m >= 5, got m = {0}")]
    DegreeTooSmall(usize),
    #[error("no nonvanishing witness found at m = {0}")]
    Inconclusive(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

// ---------------------------------------------------------------------------
// Remainder polynomials
// ---------------------------------------------------------------------------

/// `R_k` for `m+1 <= k <= 2m-1`, with the monic normalization `f_m = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RemainderSet {
    pub m: usize,
    pub r: BTreeMap<usize, MultiPoly>,
}

impl RemainderSet {
    /// `sum_k R_k x^{2m-k-1}`.
    pub fn assemble(&self, table: &VarTable) -> MultiPoly {
        let x = MultiPoly::var(&table.with("x"), "x").unwrap();
        let mut acc = MultiPoly::zero(x.vars());
        for (k, rk) in &self.r {
            acc = acc.add(&rk.mul(&x.pow((2 * self.m - k - 1) as u32)));
        }
        acc
    }
}

/// `R_k` from the symmetrized sum over the family's coefficients.
pub fn remainder_polys(fam: &FundamentalFamily) -> RemainderSet {
    let m = fam.m;
    let table = fam.table().clone();
    let q = |l: usize| fam.coeff(m - l);
    let mut r = BTreeMap::new();
    for k in (m + 1)..(2 * m) {
        let mut acc = MultiPoly::zero(&table);
        for l in (k - m)..=m {
            let w = wronskian(q(l), q(k - l), "t").unwrap();
            acc = acc.add(&w.scale(&ratio(k as i64 - 2 * l as i64, 2)));
        }
        for l in (k - m - 1)..=(m - 2) {
            let (mi, li, ki) = (m as i64, l as i64, k as i64);
            let c = 3 * (mi - li) * (mi - li - 1) * (mi + li - ki + 3) * (mi + li - ki + 2);
            if c != 0 {
                acc = acc.add(&q(l).mul(q(k - l - 3)).scale_int(c));
            }
        }
        r.insert(k, acc);
    }
    RemainderSet { m, r }
}

/// `R_k` read off the x-coefficients of the directly computed remainder band.
pub fn remainder_polys_direct(fam: &FundamentalFamily) -> RemainderSet {
    let m = fam.m;
    let (_, rem) = kdvlike::band_split(&fam.fbar, m as u32).expect("fbar has x-degree m");
    let r = ((m + 1)..(2 * m)).map(|k| (k, kdvlike::x_coefficient(&rem, (2 * m - k - 1) as u32))).collect();
    RemainderSet { m, r }
}

// ---------------------------------------------------------------------------
// Leading polynomials of Q_k
// ---------------------------------------------------------------------------

/// `x_{k,q}`: coefficient of `t^{floor(k/3)}` in `Q_k`, over `m` and the
/// constants that occur.
pub fn leading_x(k: usize) -> MultiPoly {
    build_q(k).value.coeff_of("t", (k / 3) as u32).unwrap().compact()
}

/// `z_q = x_{3q,q}`, a polynomial in `m` alone.
pub fn z_poly(q: usize) -> MultiPoly {
    let z = leading_x(3 * q);
    let m_only = VarTable::new(["m"]).unwrap();
    z.to_table(&m_only).expect("z_q depends on m only")
}

/// `z_0, ..., z_{q_max}` from the closed recursion among the `z`'s,
/// independent of building `Q_k`:
///
/// ```text
/// 3 q^2 z_q = sum_{u=1}^{q-1} -(3/2)(q-2u)^2 z_{q-u} z_u
///           + 3 sum_{u=0}^{q-1} (m-3u)(m-3u-1)(m-3(q-u-1))(m-3(q-u-1)-1) z_u z_{q-u-1}
/// ```
pub fn z_by_recursion(q_max: usize) -> Vec<MultiPoly> {
    let table = VarTable::new(["m"]).unwrap();
    let m = MultiPoly::var(&table, "m").unwrap();
    let one = MultiPoly::one(&table);
    let shift = |c: i64| m.add(&one.scale_int(c));
    let mut z = vec![one.clone()];
    for q in 1..=q_max {
        let qi = q as i64;
        let mut acc = MultiPoly::zero(&table);
        for u in 1..q {
            let ui = u as i64;
            let c = ratio(-3 * (qi - 2 * ui).pow(2), 2);
            acc = acc.add(&z[q - u].mul(&z[u]).scale(&c));
        }
        for u in 0..q {
            let (a, b) = (3 * u as i64, 3 * (qi - u as i64 - 1));
            let f = shift(-a).mul(&shift(-a - 1)).mul(&shift(-b)).mul(&shift(-b - 1));
            acc = acc.add(&f.mul(&z[u]).mul(&z[q - u - 1]).scale_int(3));
        }
        z.push(acc.scale(&ratio(1, 3 * qi * qi)));
    }
    z
}

/// `z_0(m), ..., z_{q_max}(m)` from the same recursion with `m` fixed.
pub fn z_values_at(q_max: usize, m: i64) -> Vec<Rational> {
    let mut z = vec![rat(1)];
    for q in 1..=q_max {
        let qi = q as i64;
        let mut acc = rat(0);
        for u in 1..q {
            acc += ratio(-3 * (qi - 2 * u as i64).pow(2), 2) * &z[q - u] * &z[u];
        }
        for u in 0..q {
            let (a, b) = (m - 3 * u as i64, m - 3 * (qi - u as i64 - 1));
            acc += rat(3 * a * (a - 1) * b * (b - 1)) * &z[u] * &z[q - u - 1];
        }
        z.push(acc * ratio(1, 3 * qi * qi));
    }
    z
}

// ---------------------------------------------------------------------------
// Leading coefficients of R_k
// ---------------------------------------------------------------------------

fn check_range(k: usize, m: usize) -> Result<(), LeadError> {
    if k < m + 1 || k + 1 > 2 * m {
        return Err(LeadError::IndexOutOfRange { k, m, lo: m + 1, hi: (2 * m).saturating_sub(1) });
    }
    Ok(())
}

/// Coefficient of `t^{q-1}` in `R_k` at degree `m`, with `x_{l,u}` supplied
/// by `lead(l)`.
fn y_sum(k: usize, m: usize, lead: &mut dyn FnMut(usize) -> MultiPoly) -> MultiPoly {
    let (q, r) = ((k / 3) as i64, k % 3);
    let (mi, ki) = (m as i64, k as i64);
    let mut acc: Option<MultiPoly> = None;
    let mut push = |p: MultiPoly| {
        acc = Some(match acc.take() {
            Some(a) => a.add(&p),
            None => p,
        });
    };
    for l in (k - m)..=m {
        if l % 3 > r {
            continue;
        }
        let (li, ui) = (l as i64, (l / 3) as i64);
        // (k-2l)/2 from the symmetrization, (2u-q) from W(t^u, t^{q-u})
        let c = ratio((ki - 2 * li) * (2 * ui - q), 2);
        if c != rat(0) {
            push(lead(l).mul(&lead(k - l)).scale(&c));
        }
    }
    for l in (k - m - 1)..=(m - 2) {
        if l % 3 > r {
            continue;
        }
        let li = l as i64;
        let c = 3 * (mi - li) * (mi - li - 1) * (mi + li - ki + 3) * (mi + li - ki + 2);
        if c != 0 {
            push(lead(l).mul(&lead(k - l - 3)).scale_int(c));
        }
    }
    acc.unwrap_or_else(|| MultiPoly::zero(&VarTable::empty()))
}

/// `y_{k,q-1}(m)`: coefficient of `t^{q-1}` in `R_k` at `m = m_value`,
/// computed from the leading polynomials of the `Q_l`. Constants use the Q
/// naming (`c1`, `c2`, ...). For `k = 3q` the result is the rational `Y_q(m)`.
pub fn leading_y(k: usize, m_value: usize) -> Result<MultiPoly, LeadError> {
    check_range(k, m_value)?;
    let mv = rat(m_value as i64);
    let mut cache: BTreeMap<usize, MultiPoly> = BTreeMap::new();
    let mut lead = |l: usize| {
        cache
            .entry(l)
            .or_insert_with(|| {
                let x = leading_x(l);
                if x.vars().contains("m") {
                    x.substitute_value("m", &mv).unwrap().compact()
                } else {
                    x
                }
            })
            .clone()
    };
    Ok(y_sum(k, m_value, &mut lead).compact())
}

/// Coefficient of `t^{q-1}` in `R_k` taken from the actual remainder band
/// of `fam`, in family constant naming.
pub fn leading_y_direct(fam: &FundamentalFamily, k: usize) -> Result<MultiPoly, LeadError> {
    check_range(k, fam.m)?;
    let rem = remainder_polys_direct(fam);
    let rk = &rem.r[&k];
    Ok(rk.coeff_of("t", (k / 3) as u32 - 1)?.compact())
}

/// `Y_q` at degree `m` as a polynomial in formal symbols `z1, z2, ...`
/// (`z0 = 1`).
pub fn y_in_z(q: usize, m: usize) -> Result<MultiPoly, LeadError> {
    let k = 3 * q;
    check_range(k, m)?;
    let names: Vec<String> = (1..=q).map(|u| format!("z{u}")).collect();
    let table = VarTable::new(names).unwrap();
    let mut lead = |l: usize| {
        debug_assert_eq!(l % 3, 0);
        match l / 3 {
            0 => MultiPoly::one(&table),
            u => MultiPoly::var(&table, &format!("z{u}")).unwrap(),
        }
    };
    Ok(y_sum(k, m, &mut lead))
}

/// Index `q` of the `Y_q` that decides degree `m >= 5`: `2s-1` for
/// `m = 3s` and `m = 3s+1`, `2s+1` for `m = 3s+2`.
pub fn deciding_index(m: usize) -> usize {
    let s = m / 3;
    match m % 3 {
        2 => 2 * s + 1,
        _ => 2 * s - 1,
    }
}

// ---------------------------------------------------------------------------
// Factorization identities
// ---------------------------------------------------------------------------

/// One polynomial identity `Y_q = rhs` in the formal `z` symbols.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub label: String,
    /// Residue class of `m` modulo 3.
    pub class: usize,
    pub s: usize,
    pub m: usize,
    pub q: usize,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub holds: bool,
    /// `Y_q(m)` with the actual `z_u(m)` inserted.
    pub value: Rational,
}

#[derive(Debug, Clone)]
pub struct FactorizationReport {
    pub s: usize,
    /// Identities as they are usually quoted for this construction.
    pub stated: Vec<IdentityCheck>,
    /// Identities satisfied by the remainder polynomials computed here.
    pub computed: Vec<IdentityCheck>,
}

impl FactorizationReport {
    pub fn all(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.stated.iter().chain(self.computed.iter())
    }
}

fn zsym(table: &VarTable, u: usize) -> MultiPoly {
    if u == 0 {
        MultiPoly::one(table)
    } else {
        MultiPoly::var(table, &format!("z{u}")).unwrap()
    }
}

fn z_values(q: usize, m: usize) -> BTreeMap<String, Rational> {
    let zs = z_values_at(q, m as i64);
    (1..=q).map(|u| (format!("z{u}"), zs[u].clone())).collect()
}

fn identity(label: String, class: usize, s: usize, q: usize, rhs: MultiPoly) -> IdentityCheck {
    let m = 3 * s + class;
    let lhs = y_in_z(q, m).expect("q is in range for the class");
    let holds = lhs.same_as(&rhs);
    let value = lhs.evaluate(&z_values(q, m)).unwrap();
    IdentityCheck { label, class, s, m, q, lhs, rhs, holds, value }
}

/// Checks the factorizations of the deciding `Y` for each residue class of
/// `m` at the given `s` (`m = 3s + class`). Classes 0 and 1 need `s >= 2`;
/// they are skipped for `s = 1`.
pub fn factorization_checks(s: usize) -> FactorizationReport {
    let mut stated = Vec::new();
    let mut computed = Vec::new();
    for class in 0..3 {
        if class < 2 && s < 2 {
            continue;
        }
        let q = if class == 2 { 2 * s + 1 } else { 2 * s - 1 };
        let table = VarTable::new((1..=q).map(|u| format!("z{u}"))).unwrap();
        let z = |u: usize| zsym(&table, u);
        let (a, b) = (s - 1, s);
        match class {
            0 | 1 => {
                let c = if class == 0 { 36 } else { 144 };
                stated.push(identity(
                    format!("Y{q} = 3 z{a} (z{b} + {c} z{a})"),
                    class,
                    s,
                    q,
                    z(a).mul(&z(b).add(&z(a).scale_int(c))).scale_int(3),
                ));
                computed.push(identity(
                    format!("Y{q} = -3 z{a} (z{b} - {c} z{a})"),
                    class,
                    s,
                    q,
                    z(a).mul(&z(b).sub(&z(a).scale_int(c))).scale_int(-3),
                ));
            }
            _ => {
                stated.push(identity(format!("Y{q} = z{s}^2"), class, s, q, z(s).pow(2)));
                computed.push(identity(format!("Y{q} = 12 z{s}^2"), class, s, q, z(s).pow(2).scale_int(12)));
            }
        }
    }
    FactorizationReport { s, stated, computed }
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Exists,
    NotExists,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub poly: String,
    #[serde(with = "rational_string")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingValue {
    pub k: usize,
    #[serde(with = "rational_string")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub m: usize,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Every designated polynomial evaluated at `m`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checked: Vec<Witness>,
    /// `Y_{k/3}(m)` for every `k = 0 mod 3` in the remainder range.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub leading_y: Vec<LeadingValue>,
    /// `Y_q(m)` for the deciding index, evaluated from the `z`'s.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deciding: Option<LeadingValue>,
}

pub(crate) mod rational_string {
    use crate::exactpoly::{parse_rational, rational_to_string, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// `z_1`, `z_2` and the class-specific combination evaluated at `m`.
fn designated(m: usize) -> Vec<Witness> {
    let z1 = z_poly(1).eval_univariate("m", m as i64).unwrap();
    let mut out = vec![Witness { poly: "z1".into(), value: z1.clone() }];
    if m % 3 == 2 {
        return out;
    }
    let z2 = z_poly(2).eval_univariate("m", m as i64).unwrap();
    let c = if m.is_multiple_of(3) { 36 } else { 144 };
    out.push(Witness { poly: "z2".into(), value: z2.clone() });
    out.push(Witness { poly: format!("z2-{c}z1"), value: z2 - z1 * rat(c) });
    out
}

/// Certifies that no polynomial solution of x-degree `m >= 5` exists.
///
/// The witness is `z1` for `m = 2 mod 3` and `z2 - 36 z1` (`m = 0 mod 3`) or
/// `z2 - 144 z1` (`m = 1 mod 3`); all designated polynomials are reported and
/// must be nonzero. The deciding `Y_q(m)` (see [`deciding_index`]) is
/// evaluated from the `z` recursion and must be nonzero; any nonzero `Y_q(m)`
/// alone rules out a solution. With `direct`, every constant-free `Y_q(m)`
/// is recomputed from the `Q_l` and the deciding one must agree.
pub fn nonexistence_certificate(m: usize, direct: bool) -> Result<Certificate, LeadError> {
    if m < 5 {
        return Err(LeadError::DegreeTooSmall(m));
    }
    let checked = designated(m);
    if checked.iter().any(|w| w.value == rat(0)) {
        return Err(LeadError::Inconclusive(m));
    }
    let witness = checked.last().cloned();
    let q = deciding_index(m);
    let deciding = LeadingValue { k: 3 * q, value: y_in_z(q, m)?.evaluate(&z_values(q, m))? };
    if deciding.value == rat(0) {
        return Err(LeadError::Inconclusive(m));
    }
    let mut leading = Vec::new();
    if direct {
        for k in ((m + 1)..(2 * m)).filter(|k| k % 3 == 0) {
            let value = leading_y(k, m)?.as_constant().expect("Y_q carries no constants");
            leading.push(LeadingValue { k, value });
        }
        if !leading.iter().any(|lv| lv.k == 3 * q && lv.value == deciding.value) {
            return Err(LeadError::Inconclusive(m));
        }
    }
    Ok(Certificate { m, verdict: Verdict::NotExists, witness, checked, leading_y: leading, deciding: Some(deciding) })
}

/// `1/q!`: expected m-leading coefficient of `z_q`.
pub fn expected_z_leading(q: usize) -> Rational {
    rat(1) / factorial(q as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fundsol::{alignment, build_family, family_table};

    fn m_table() -> VarTable {
        VarTable::new(["m"]).unwrap()
    }

    fn mpoly() -> MultiPoly {
        MultiPoly::var(&m_table(), "m").unwrap()
    }

    fn shift(c: i64) -> MultiPoly {
        mpoly().add(&MultiPoly::from_int(&m_table(), c))
    }

    #[test]
    fn low_leading_polys() {
        assert_eq!(leading_x(0).as_constant(), Some(rat(1)));
        let c1 = MultiPoly::var(&VarTable::new(["c1"]).unwrap(), "c1").unwrap();
        let c2 = MultiPoly::var(&VarTable::new(["c2"]).unwrap(), "c2").unwrap();
        assert_eq!(leading_x(1), c1);
        assert_eq!(leading_x(2), c2);
        assert_eq!(leading_x(3), mpoly().pow(2) * shift(-1).pow(2));
        let z2 = (mpoly().pow(3) * shift(-1).pow(3) * shift(-3) * shift(-4)).scale(&ratio(1, 2));
        assert_eq!(leading_x(6), z2);
    }

    #[test]
    fn recursion_oracle_matches_extraction() {
        let rec = z_by_recursion(4);
        for (q, zq) in rec.iter().enumerate() {
            assert_eq!(zq, &z_poly(q), "q = {q}");
        }
    }

    #[test]
    fn numeric_recursion_matches() {
        let polys = z_by_recursion(5);
        for m in [0, 5, 11, 30] {
            let vals = z_values_at(5, m);
            for q in 0..=5 {
                assert_eq!(polys[q].eval_univariate("m", m).unwrap(), vals[q]);
            }
        }
    }

    #[test]
    fn remainder_examples() {
        let f3 = build_family(3);
        let r3 = remainder_polys(&f3);
        let t = family_table(3);
        let c = |n: &str| MultiPoly::var(&t, n).unwrap();
        assert!(r3.r[&4].is_zero());
        assert_eq!(r3.r[&5], c("c1").scale_int(-36) + c("c2").pow(2).scale_int(12));

        let f4 = build_family(4);
        let r4 = remainder_polys(&f4);
        let t4 = family_table(4);
        let c = |n: &str| MultiPoly::var(&t4, n).unwrap();
        let p0 = f4.coeff(0).clone();
        let p1 = f4.coeff(1).clone();
        let expect = p0.scale_int(144) - p1 * c("c3").scale_int(36) + c("c2").pow(2).scale_int(12);
        assert_eq!(r4.r[&7], expect);
        assert!(r4.r[&5].is_zero() && r4.r[&6].is_zero());

        assert!(remainder_polys(&build_family(1)).r.is_empty());
    }

    #[test]
    fn leading_y_values() {
        assert_eq!(leading_y(9, 5).unwrap().as_constant(), Some(rat(1_920_000)));
        let z = |q: usize, m: i64| z_poly(q).eval_univariate("m", m).unwrap();
        let y6 = leading_y(9, 6).unwrap().as_constant().unwrap();
        assert_eq!(y6, rat(-131_220_000));
        assert_eq!(y6, rat(-3) * z(1, 6) * (z(2, 6) - rat(36) * z(1, 6)));
        assert!(matches!(leading_y(4, 5), Err(LeadError::IndexOutOfRange { .. })));
        assert!(matches!(leading_y(10, 5), Err(LeadError::IndexOutOfRange { .. })));
        assert!(!leading_y(10, 7).unwrap().is_constant());
    }

    #[test]
    fn direct_and_formula_leading_agree() {
        let fam = build_family(7);
        for k in 8..=13 {
            let formula = leading_y(k, 7).unwrap();
            let names = formula.vars().clone();
            let map = alignment(7, k).into_iter().filter(|(n, _)| names.contains(n)).collect();
            let formula = formula.substitute_all(&map).unwrap();
            assert_eq!(leading_y_direct(&fam, k).unwrap(), formula, "k = {k}");
        }
    }

    #[test]
    fn computed_identities_hold() {
        for s in 1..=3 {
            let rep = factorization_checks(s);
            for c in &rep.computed {
                assert!(c.holds, "{} at s = {s}", c.label);
            }
        }
        // stated forms differ by sign (classes 0, 1) and by a factor 12 (class 2)
        assert!(factorization_checks(2).stated.iter().all(|c| !c.holds));
    }

    #[test]
    fn certificates() {
        let c5 = nonexistence_certificate(5, false).unwrap();
        assert_eq!(c5.witness.as_ref().unwrap().poly, "z1");
        assert_eq!(c5.witness.unwrap().value, rat(400));
        let c6 = nonexistence_certificate(6, false).unwrap();
        assert_eq!(c6.witness.unwrap(), Witness { poly: "z2-36z1".into(), value: rat(48_600) });
        let c7 = nonexistence_certificate(7, true).unwrap();
        assert_eq!(c7.witness.as_ref().unwrap().poly, "z2-144z1");
        assert!(c7.checked.iter().all(|w| w.value != rat(0)));
        assert_eq!(c7.leading_y.len(), 2);
        assert_eq!(nonexistence_certificate(4, false), Err(LeadError::DegreeTooSmall(4)));
    }

    #[test]
    fn certificate_json_shape() {
        let c = nonexistence_certificate(7, false).unwrap();
        let s = serde_json::to_value(&c).unwrap();
        assert_eq!(s["m"], 7);
        assert_eq!(s["verdict"], "not_exists");
        assert_eq!(s["witness"]["poly"], "z2-144z1");
        let back: Certificate = serde_json::from_value(s).unwrap();
        assert_eq!(back, c);
    }
}
