//! Builds the monic solutions of the upper band `B_(m) f = 0` and shows the
//! remainder band that decides whether they solve `T f = 0`.
//!
//! cargo run --example fundamental_families [max_m]

use hirota::fundsol::build_family;
use hirota::kdvlike::{b_part, band_split};
use hirota::leading::remainder_polys;

fn main() {
    let max_m: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    for m in 0..=max_m {
        let fam = build_family(m);
        println!("m = {m}");
        println!("  fbar = {}", fam.fbar);
        assert!(b_part(&fam.fbar, m as u32).unwrap().is_zero());
        let (_, rem) = band_split(&fam.fbar, m as u32).unwrap();
        if rem.is_zero() {
            println!("  remainder band vanishes: T fbar = 0");
        } else {
            println!("  remainder band: {rem}");
        }
        for (k, rk) in remainder_polys(&fam).r {
            println!("  R_{k} = {rk}");
        }
    }
}
