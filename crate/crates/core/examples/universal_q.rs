//! The universal coefficients `Q_k(m, t)` and their leading polynomials
//! `z_q(m)`, checked against the family built at a fixed degree.
//!
//! cargo run --example universal_q

use hirota::exactpoly::rational_to_string;
use hirota::fundsol::{alignment, build_family, build_q, specialize};
use hirota::leading::{z_by_recursion, z_poly};

fn main() {
    for k in 0..=6 {
        let q = build_q(k).value;
        println!("Q_{k} (deg_t {}, deg_m {}) = {q}", q.degree_or_zero("t"), q.degree_or_zero("m"));
    }

    println!();
    let rec = z_by_recursion(4);
    for (q, z) in rec.iter().enumerate() {
        let lc = z.leading_coeff("m").unwrap().as_constant().unwrap();
        println!("z_{q} = {z}   (leading coefficient {})", rational_to_string(&lc));
        assert_eq!(z, &z_poly(q));
    }

    let m = 6;
    let fam = build_family(m);
    println!("\nspecializing at m = {m}:");
    for k in 0..=m {
        let p = specialize(&build_q(k), m as u64, &alignment(m, k)).unwrap();
        assert_eq!(&p, fam.coeff(m - k));
        println!("  P_{{{m},{}}} = {p}", m - k);
    }
}
