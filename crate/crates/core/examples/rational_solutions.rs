//! Classifies degrees 0..=6 and turns each solution into a rational
//! solution `u = 2 f_x / f` of the KdV-like equation, verified exactly.
//!
//! cargo run --example rational_solutions

use hirota::exactpoly::{MultiPoly, VarTable};
use hirota::solutions::{classify, log_derivative, verify_kdvlike, Classification, RationalSolution};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in 0..=6 {
        match classify(m)? {
            Classification::Family(fam) => {
                let u = log_derivative(&fam.f)?;
                let residual = verify_kdvlike(&u);
                println!("m = {m}: f = {}", fam.f);
                for c in &fam.constraints {
                    println!("        with {} = {}", c.constant, c.value);
                }
                println!("        u = {}", u.to_text());
                println!("        latex: {}", u.to_latex());
                println!("        residual numerator zero: {}", residual.is_zero());
            }
            Classification::NotExists(cert) => {
                let w = cert.witness.unwrap();
                println!("m = {m}: no solution ({} = {})", w.poly, w.value);
            }
        }
    }

    let vars = VarTable::new(["x", "t"])?;
    let wrong = RationalSolution { numerator: MultiPoly::one(&vars), denominator: MultiPoly::var(&vars, "x")? };
    println!("\nu = 1/x leaves residual numerator {}", verify_kdvlike(&wrong));
    Ok(())
}
