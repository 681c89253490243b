//! Fundamental solutions of the upper band `B_(m) f = 0`.
//!
//! Every `f` of x-degree `m` with `B_(m) f = 0` is `f_m(t) * fbar` where the
//! monic `fbar = sum_k P_{m,k}(t) x^k` is generated downward from
//! `P_{m,m} = 1`:
//!
//! ```text
//! (m-k) P'_{m,k} = sum_{j=k+1}^{m-1} j W(P_{m,j}, P_{m,k+m-j})
//!                + 3 sum_{j=k+3}^{m} j(j-1)(k+m+3-j)(k+m+2-j) P_{m,j} P_{m,k+m+3-j}
//! ```
//!
//! with `W(g, h) = g_t h - g h_t` and one fresh integration constant per
//! step. Family constants are named by the power of `x` they sit on, so
//! `P_{m,k}` introduces `c{k}`.
//!
//! Treating `m` as a symbol gives `Q_k = P_{m,m-k}` in `Q[m, t, c1..ck]`,
//! generated by the symmetrized recursion
//!
//! ```text
//! k Q'_k = sum_{l=1}^{k-1} (k-2l)/2 W(Q_l, Q_{k-l})
//!        + 3 sum_{l=0}^{k-3} (m-l)(m-l-1)(m+l-k+3)(m+l-k+2) Q_l Q_{k-l-3}
//! ```
//!
//! whose constants `c1..ck` are indexed by the Q subscript. [`alignment`]
//! maps Q constants onto family constants (`c_j -> c_{m-j}`).

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use thiserror::Error;

use crate::exactpoly::{rat, ratio, wronskian, MultiPoly, PolyError, VarTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FundError {
    #[error("unbound constants: {}", .0.join(", "))]
    Unbound(Vec<String>),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Name of the `k`-th integration constant.
pub fn constant_name(k: usize) -> String {
    format!("c{k}")
}

/// Monic generator of the `B_(m)`-solutions of x-degree at most `m`.
#[derive(Debug, Clone)]
pub struct FundamentalFamily {
    pub m: usize,
    /// Constants in introduction order: `c{m-1}, c{m-2}, ..., c0`.
    pub constants: Vec<String>,
    /// `coeffs[k] = P_{m,k}`.
    pub coeffs: Vec<MultiPoly>,
    pub fbar: MultiPoly,
}

impl FundamentalFamily {
    pub fn table(&self) -> &VarTable {
        self.fbar.vars()
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly {
        &self.coeffs[k]
    }
}

/// Variable table `[x, t, c{m-1}, ..., c0]`.
pub fn family_table(m: usize) -> VarTable {
    let mut names = vec!["x".to_string(), "t".to_string()];
    names.extend((0..m).rev().map(constant_name));
    VarTable::new(names).expect("distinct names")
}

pub fn build_family(m: usize) -> FundamentalFamily {
    let table = family_table(m);
    let zero = MultiPoly::zero(&table);
    let mut p: Vec<MultiPoly> = vec![zero.clone(); m + 1];
    p[m] = MultiPoly::one(&table);
    let mut constants = Vec::with_capacity(m);
    for k in (0..m).rev() {
        let mut rhs = zero.clone();
        for j in (k + 1)..m {
            let w = wronskian(&p[j], &p[k + m - j], "t").unwrap();
            rhs = rhs.add(&w.scale_int(j as i64));
        }
        for j in (k + 3)..=m {
            let other = k + m + 3 - j;
            let c = 3 * (j * (j - 1) * other * (other - 1)) as i64;
            rhs = rhs.add(&p[j].mul(&p[other]).scale_int(c));
        }
        let name = constant_name(k);
        let integral = rhs.integrate("t").unwrap().scale(&ratio(1, (m - k) as i64));
        p[k] = integral.add(&MultiPoly::var(&table, &name).unwrap());
        constants.push(name);
    }
    let x = MultiPoly::var(&table, "x").unwrap();
    let mut fbar = zero;
    for c in p.iter().rev() {
        fbar = fbar.mul(&x).add(c);
    }
    FundamentalFamily { m, constants, coeffs: p, fbar }
}

/// `Q_k = P_{m,m-k}` with `m` kept symbolic.
#[derive(Debug, Clone, PartialEq)]
pub struct QPoly {
    pub k: usize,
    pub value: MultiPoly,
}

/// Variable table `[m, t, c1, ..., ck]`; tables for smaller `k` are prefixes.
pub fn q_table(k: usize) -> VarTable {
    let mut names = vec!["m".to_string(), "t".to_string()];
    names.extend((1..=k).map(constant_name));
    VarTable::new(names).expect("distinct names")
}

fn q_cache() -> &'static Mutex<Vec<MultiPoly>> {
    static CACHE: OnceLock<Mutex<Vec<MultiPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![MultiPoly::one(&q_table(0))]))
}

fn next_q(prev: &[MultiPoly]) -> MultiPoly {
    let k = prev.len();
    let table = q_table(k);
    let m = MultiPoly::var(&table, "m").unwrap();
    let one = MultiPoly::one(&table);
    let lift = |i: usize| prev[i].to_table(&table).unwrap();
    let mut rhs = MultiPoly::zero(&table);
    for l in 1..k {
        let w = wronskian(&lift(l), &lift(k - l), "t").unwrap();
        rhs = rhs.add(&w.scale(&ratio(k as i64 - 2 * l as i64, 2)));
    }
    for l in 0..k.saturating_sub(2) {
        let (l_, k_) = (l as i64, k as i64);
        let shift = |c: i64| m.add(&one.scale_int(c));
        let factor = shift(-l_).mul(&shift(-l_ - 1)).mul(&shift(l_ - k_ + 3)).mul(&shift(l_ - k_ + 2));
        rhs = rhs.add(&factor.mul(&lift(l)).mul(&lift(k - l - 3)).scale_int(3));
    }
    let integral = rhs.integrate("t").unwrap().scale(&ratio(1, k as i64));
    integral.add(&MultiPoly::var(&table, &constant_name(k)).unwrap())
}

/// `Q_k` over `[m, t, c1, ..., ck]`. Results are memoized.
pub fn build_q(k: usize) -> QPoly {
    let mut cache = q_cache().lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() <= k {
        let next = next_q(&cache);
        cache.push(next);
    }
    QPoly { k, value: cache[k].clone() }
}

/// Bindings `c_j -> c_{m-j}` (family naming) for `1 <= j <= min(k_max, m)`.
pub fn alignment(m: usize, k_max: usize) -> BTreeMap<String, MultiPoly> {
    let table = family_table(m);
    (1..=k_max.min(m))
        .map(|j| (constant_name(j), MultiPoly::var(&table, &constant_name(m - j)).unwrap()))
        .collect()
}

/// Substitutes `m = m_value` and every occurring constant of `q` from
/// `constants`. Constants not occurring in `q` may be bound or not.
pub fn specialize(
    q: &QPoly,
    m_value: u64,
    constants: &BTreeMap<String, MultiPoly>,
) -> Result<MultiPoly, FundError> {
    let v = q.value.substitute_value("m", &rat(m_value as i64))?;
    let occurring = v.support();
    let unbound: Vec<String> =
        occurring.iter().filter(|n| *n != "t" && !constants.contains_key(*n)).cloned().collect();
    if !unbound.is_empty() {
        return Err(FundError::Unbound(unbound));
    }
    let used: BTreeMap<String, MultiPoly> =
        constants.iter().filter(|(k, _)| v.vars().contains(k)).map(|(k, p)| (k.clone(), p.clone())).collect();
    Ok(v.substitute_all(&used)?)
}
