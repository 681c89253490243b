//! Polynomials, solution families and certificates in their JSON form.
//!
//! cargo run --example json_round_trip

use hirota::exactpoly::MultiPoly;
use hirota::leading::{nonexistence_certificate, Certificate};
use hirota::solutions::{classify, SolutionFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fam = classify(3)?.family().cloned().unwrap();
    let text = fam.f.to_json();
    println!("{text}");
    assert_eq!(MultiPoly::from_json(&text)?, fam.f);

    let json = serde_json::to_string(&fam)?;
    println!("{json}");
    let back: SolutionFamily = serde_json::from_str(&json)?;
    assert_eq!(back, fam);

    let cert = nonexistence_certificate(7, true)?;
    let json = serde_json::to_string(&cert)?;
    println!("{json}");
    assert_eq!(serde_json::from_str::<Certificate>(&json)?, cert);

    println!("{}", fam.f.to_latex());
    Ok(())
}
