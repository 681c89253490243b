//! Applies generalized bilinear derivatives to a few polynomials and checks
//! the closed forms of `D_{3,x}^4 f.f` and `D_{3,x} D_{3,t} f.f`.
//!
//! cargo run --example bilinear_operators

use hirota::dop::{alpha_pow, kdvlike_ops, BilinearOp};
use hirota::exactpoly::{MultiPoly, VarTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let vars = VarTable::new(["x", "t"])?;
    let x = MultiPoly::var(&vars, "x")?;
    let t = MultiPoly::var(&vars, "t")?;

    for p in [2, 3, 5] {
        let signs: Vec<i8> = (0..6).map(|m| alpha_pow(p, m).unwrap()).collect();
        println!("alpha_{p}^0..5 = {signs:?}");
    }

    let f = x.pow(3) + &x * &t.scale_int(4) + t.pow(2);
    println!("\nf = {f}");
    for spec in ["D(3;x^4)", "D(2;x^4)", "D(3;x^1,t^1)", "D(2;x^1,t^1)", "D(3;x^3)", "D(2;x^3)"] {
        let op: BilinearOp = spec.parse()?;
        println!("{op:<14} f.f = {}", op.apply(&f, &f)?);
    }

    let fxx = f.derive_n("x", 2)?;
    let d4 = "D(3;x^4)".parse::<BilinearOp>()?.apply(&f, &f)?;
    println!("\nD(3;x^4) f.f == 6 (f_xx)^2: {}", d4 == fxx.pow(2).scale_int(6));

    let lhs = BilinearOp::apply_sum(&kdvlike_ops(), &f, &f)?;
    println!("(D_3x D_3t + D_3x^4) f.f = {lhs}");
    Ok(())
}
