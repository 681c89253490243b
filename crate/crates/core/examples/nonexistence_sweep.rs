//! Certificates that no polynomial solution of x-degree m exists, with the
//! leading coefficients recomputed two ways for small m.
//!
//! cargo run --release --example nonexistence_sweep [from] [to]

use hirota::exactpoly::rational_to_string;
use hirota::fundsol::build_family;
use hirota::leading::{leading_y, leading_y_direct, nonexistence_certificate};
use rayon::prelude::*;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("degree"));
    let from = args.next().unwrap_or(5);
    let to = args.next().unwrap_or(40);

    let certs: Vec<_> = (from..=to).into_par_iter().map(|m| nonexistence_certificate(m, false)).collect();
    for c in certs {
        let c = c.expect("m >= 5");
        let w = c.witness.unwrap();
        let d = c.deciding.unwrap();
        println!("m = {:>3}  {:<9} = {:<16} Y_{} nonzero", c.m, w.poly, rational_to_string(&w.value), d.k / 3);
    }

    println!("\nleading t-coefficients of R_k, formula vs assembled remainder:");
    for m in from.max(5)..=to.min(8) {
        let fam = build_family(m);
        for k in ((m + 1)..(2 * m)).filter(|k| k % 3 == 0) {
            let a = leading_y(k, m).unwrap();
            let b = leading_y_direct(&fam, k).unwrap();
            println!("  m = {m}, k = {k:>2}: {a} | {b}");
        }
    }
}
