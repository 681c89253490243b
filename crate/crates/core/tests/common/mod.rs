#![allow(dead_code)]

use hirota::exactpoly::{ratio, MultiPoly, VarTable};
use proptest::prelude::*;

pub fn xt() -> VarTable {
    VarTable::new(["x", "t"]).unwrap()
}

fn build(table: &VarTable, terms: Vec<(Vec<u32>, i64, i64)>) -> MultiPoly {
    MultiPoly::from_terms(table, terms.into_iter().map(|(e, n, d)| (e, ratio(n, d)))).unwrap()
}

/// Polynomials over `table` with every exponent at most `max_deg`.
pub fn poly_over(table: VarTable, max_deg: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    let n = table.len();
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), -12i64..=12, 1i64..=5), 0..=max_terms)
        .prop_map(move |terms| build(&table, terms))
}

pub fn xt_poly(max_deg: u32) -> impl Strategy<Value = MultiPoly> {
    poly_over(xt(), max_deg, 5)
}

/// Polynomial in `t` alone, over `table`.
pub fn t_poly(table: VarTable, max_deg: u32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-9i64..=9, 1i64..=4), 1..=(max_deg as usize + 1)).prop_map(move |cs| {
        let t = MultiPoly::var(&table, "t").unwrap();
        cs.into_iter()
            .enumerate()
            .fold(MultiPoly::zero(&table), |acc, (i, (n, d))| acc + t.pow(i as u32).scale(&ratio(n, d)))
    })
}
