//! The quartic factors of `z2 -+ 36 z1` and `z2 -+ 144 z1` have no integer
//! roots, so the witnesses are nonzero for every degree. Integer roots of a
//! monic integer polynomial divide its constant term.
//!
//! cargo run --example quartic_witnesses

use hirota::exactpoly::{rat, MultiPoly, Rational, VarTable};
use hirota::leading::z_poly;

fn integer_roots(p: &MultiPoly, constant: i64) -> Vec<i64> {
    let c = constant.abs();
    (1..=c)
        .filter(|d| c % d == 0)
        .flat_map(|d| [d, -d])
        .filter(|&r| p.eval_univariate("m", r).unwrap() == rat(0))
        .collect()
}

fn main() {
    let vars = VarTable::new(["m"]).unwrap();
    let m = MultiPoly::var(&vars, "m").unwrap();
    let prefactor = (m.pow(2) * (&m - MultiPoly::one(&vars)).pow(2)).scale(&Rational::new(1.into(), 2.into()));
    let base = m.pow(4) - m.pow(3).scale_int(8) + m.pow(2).scale_int(19) - m.scale_int(12);
    for (c, label) in [(36, "z2 + 36 z1"), (-36, "z2 - 36 z1"), (144, "z2 + 144 z1"), (-144, "z2 - 144 z1")] {
        let combo = z_poly(2) + z_poly(1).scale_int(c);
        let quartic = &base + MultiPoly::from_int(&vars, 2 * c);
        assert_eq!(combo, &prefactor * &quartic);
        println!("{label:<12} = m^2 (m-1)^2 ({quartic}) / 2, integer roots {:?}", integer_roots(&quartic, 2 * c));
    }
}
