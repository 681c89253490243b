//! Plain-text and LaTeX rendering. Neither is parsed back; JSON is the
//! interchange format.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{MultiPoly, Rational};

/// Splits `c12` into `("c", Some(12))`.
fn split_index(name: &str) -> (&str, Option<u64>) {
    let cut = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if cut == name.len() || cut == 0 {
        return (name, None);
    }
    (&name[..cut], name[cut..].parse().ok())
}

/// Display rank inside a monomial: constants first, then `m`, `t`, `x`.
fn rank(name: &str) -> u8 {
    match name {
        "x" => 3,
        "t" => 2,
        "m" => 1,
        _ => 0,
    }
}

fn display_order(a: &str, b: &str) -> Ordering {
    rank(a).cmp(&rank(b)).then_with(|| {
        let (pa, ia) = split_index(a);
        let (pb, ib) = split_index(b);
        pa.cmp(pb).then(ia.cmp(&ib)).then(a.cmp(b))
    })
}

/// LaTeX form of a variable name: `c12` becomes `c_{12}`.
pub fn latex_var(name: &str) -> String {
    match split_index(name) {
        (p, Some(i)) if p.chars().count() == 1 => format!("{p}_{{{i}}}"),
        (p, Some(i)) => format!("\\mathrm{{{p}}}_{{{i}}}"),
        (p, None) if p.chars().count() == 1 => p.to_string(),
        (p, None) => format!("\\mathrm{{{p}}}"),
    }
}

impl MultiPoly {
    /// `(variable index, exponent)` pairs of a term in display order.
    fn display_factors(&self, e: &[u32]) -> Vec<(usize, u32)> {
        let names = self.vars.names();
        let mut f: Vec<(usize, u32)> = e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, &k)| (i, k)).collect();
        f.sort_by(|a, b| display_order(&names[a.0], &names[b.0]));
        f
    }

    fn render(&self, latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let names = self.vars.names();
        let mut out = String::new();
        // descending exponent order reads like a textbook display
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if latex {
                out.push(if neg { '-' } else { '+' });
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let factors = self.display_factors(e);
            let coeff = render_coeff(&mag, latex, !factors.is_empty());
            out.push_str(&coeff);
            for (n, (i, k)) in factors.iter().enumerate() {
                if latex {
                    out.push_str(&latex_var(&names[*i]));
                    if *k > 1 {
                        out.push_str(&format!("^{{{k}}}"));
                    }
                } else {
                    if n > 0 || !coeff.is_empty() {
                        out.push('*');
                    }
                    out.push_str(&names[*i]);
                    if *k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }
}

fn render_coeff(mag: &Rational, latex: bool, has_factors: bool) -> String {
    if mag.is_one() && has_factors {
        return String::new();
    }
    if mag.is_integer() {
        return mag.numer().to_string();
    }
    if latex {
        format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
    } else if has_factors {
        format!("({}/{})", mag.numer(), mag.denom())
    } else {
        format!("{}/{}", mag.numer(), mag.denom())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        debug_assert!(self.terms.values().all(|c| !c.is_zero()));
        f.write_str(&self.render(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{ratio, VarTable};

    #[test]
    fn latex_names() {
        assert_eq!(latex_var("c12"), "c_{12}");
        assert_eq!(latex_var("x"), "x");
        assert_eq!(latex_var("Y3"), "Y_{3}");
        assert_eq!(latex_var("foo"), "\\mathrm{foo}");
    }

    #[test]
    fn cubic_display() {
        let v = VarTable::new(["x", "t", "c2", "c1", "c0"]).unwrap();
        let x = MultiPoly::var(&v, "x").unwrap();
        let t = MultiPoly::var(&v, "t").unwrap();
        let c2 = MultiPoly::var(&v, "c2").unwrap();
        let c0 = MultiPoly::var(&v, "c0").unwrap();
        let f = x.pow(3) + &c2 * &x.pow(2) + (c2.pow(2) * &x).scale(&ratio(1, 3)) + t.scale_int(36) + c0;
        assert_eq!(f.to_latex(), "x^{3}+c_{2}x^{2}+\\frac{1}{3}c_{2}^{2}x+36t+c_{0}");
        assert_eq!(f.to_string(), "x^3 + c2*x^2 + (1/3)*c2^2*x + 36*t + c0");
    }

    #[test]
    fn signs_and_zero() {
        let v = VarTable::new(["x"]).unwrap();
        let x = MultiPoly::var(&v, "x").unwrap();
        assert_eq!(MultiPoly::zero(&v).to_string(), "0");
        assert_eq!((x.scale_int(-1) - MultiPoly::one(&v)).to_string(), "-x - 1");
        assert_eq!(MultiPoly::constant(&v, ratio(-1, 12)).to_latex(), "-\\frac{1}{12}");
    }
}
