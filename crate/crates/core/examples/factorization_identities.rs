//! Factorizations of the deciding leading coefficient `Y_q` in terms of the
//! formal symbols `z_u`, for each residue class of m modulo 3.
//!
//! cargo run --example factorization_identities [s_max]

use hirota::leading::factorization_checks;

fn main() {
    let s_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for s in 1..=s_max {
        let report = factorization_checks(s);
        for c in report.computed.iter() {
            println!("s = {s}, m = {:>2}: Y_{} = {}", c.m, c.q, c.lhs);
            println!("              {:<28} {}", c.label, if c.holds { "holds" } else { "FAILS" });
        }
        for c in &report.stated {
            println!("  quoted form at m = {:>2}: {:<28} {}", c.m, c.label, if c.holds { "holds" } else { "does not hold" });
        }
    }
}
