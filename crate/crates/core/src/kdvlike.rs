//! The quadratic operator `T f = f f_xt - f_x f_t + 3 (f_xx)^2` and its
//! split into an upper x-degree band `B_(m)` (degrees `>= m-1`) and a
//! remainder band `R_(m)` (degrees `<= m-2`).
//!
//! `T` is half of `(D_{3,x} D_{3,t} + D_{3,x}^4) f.f`. Both bands are
//! available twice: by truncating a directly computed `T f`
//! ([`band_split`]) and from the coefficient sums over `f = sum f_j(t) x^j`
//! ([`b_part`], [`r_part`]).

use thiserror::Error;

use crate::exactpoly::{wronskian, MultiPoly, PolyError, VarTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompError {
    #[error("x-degree {degree} exceeds the band parameter m = {bound}")]
    DegreeExceeded { degree: u32, bound: u32 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn with_xt(f: &MultiPoly) -> MultiPoly {
    f.with_var("x").with_var("t")
}

/// `T f = W_t(f_x, f) + 3 (f_xx)^2 = f f_xt - f_x f_t + 3 (f_xx)^2`.
pub fn t_operator(f: &MultiPoly) -> MultiPoly {
    let f = with_xt(f);
    let fx = f.derive("x").unwrap();
    let fxx = fx.derive("x").unwrap();
    wronskian(&fx, &f, "t").unwrap().add(&fxx.pow(2).scale_int(3))
}

/// `(D_{3,x} D_{3,t} + D_{3,x}^4) f.f`, the left side of the bilinear
/// equation; equals `2 T f`.
pub fn bilinear_residual(f: &MultiPoly) -> MultiPoly {
    let f = with_xt(f);
    crate::dop::BilinearOp::apply_sum(&crate::dop::kdvlike_ops(), &f, &f).expect("x and t are present")
}

/// `f = sum_j f_j(t) x^j` for `j = 0..=m`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientProfile {
    m: u32,
    table: VarTable,
    coeffs: Vec<MultiPoly>,
}

impl CoefficientProfile {
    pub fn new(f: &MultiPoly, m: u32) -> Result<Self, DecompError> {
        let f = with_xt(f);
        let degree = f.degree_in("x")?.unwrap_or(0);
        if degree > m {
            return Err(DecompError::DegreeExceeded { degree, bound: m });
        }
        let coeffs = (0..=m).map(|j| f.coeff_of("x", j).unwrap()).collect();
        Ok(CoefficientProfile { m, table: f.vars().clone(), coeffs })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `f_j(t)`; zero outside `0..=m`.
    pub fn coeff(&self, j: i64) -> MultiPoly {
        if j < 0 || j > self.m as i64 {
            MultiPoly::zero(&self.table)
        } else {
            self.coeffs[j as usize].clone()
        }
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn reassemble(&self) -> MultiPoly {
        let x = MultiPoly::var(&self.table, "x").unwrap();
        let mut acc = MultiPoly::zero(&self.table);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&x).add(c);
        }
        acc
    }

    /// Coefficient of `x^p` in `T f`:
    /// `sum_j j W(f_j, f_{p+1-j}) + 3 sum_j j(j-1)(p+4-j)(p+3-j) f_j f_{p+4-j}`.
    pub fn t_coefficient(&self, p: u32) -> MultiPoly {
        let (p, m) = (p as i64, self.m as i64);
        let mut acc = MultiPoly::zero(&self.table);
        for j in 1..=m {
            let other = p + 1 - j;
            if (0..=m).contains(&other) && other != j {
                let w = wronskian(&self.coeff(j), &self.coeff(other), "t").unwrap();
                acc = acc.add(&w.scale_int(j));
            }
        }
        for j in 2..=m {
            let other = p + 4 - j;
            if (2..=m).contains(&other) {
                let c = 3 * j * (j - 1) * other * (other - 1);
                acc = acc.add(&self.coeff(j).mul(&self.coeff(other)).scale_int(c));
            }
        }
        acc
    }

    fn band(&self, lo: i64, hi: i64) -> MultiPoly {
        let x = MultiPoly::var(&self.table, "x").unwrap();
        let mut acc = MultiPoly::zero(&self.table);
        for p in lo.max(0)..=hi {
            let c = self.t_coefficient(p as u32);
            if !c.is_zero() {
                acc = acc.add(&c.mul(&x.pow(p as u32)));
            }
        }
        acc
    }
}

/// Upper band of `T f` from the coefficient sums, degrees `m-1 ..= 2m-1`.
pub fn b_part(f: &MultiPoly, m: u32) -> Result<MultiPoly, DecompError> {
    let prof = CoefficientProfile::new(f, m)?;
    Ok(prof.band(m as i64 - 1, 2 * m as i64 - 1))
}

/// Remainder band of `T f` from the coefficient sums, degrees `0 ..= m-2`.
pub fn r_part(f: &MultiPoly, m: u32) -> Result<MultiPoly, DecompError> {
    let prof = CoefficientProfile::new(f, m)?;
    Ok(prof.band(0, m as i64 - 2))
}

/// `(B, R)` by truncating `T f` itself.
pub fn band_split(f: &MultiPoly, m: u32) -> Result<(MultiPoly, MultiPoly), DecompError> {
    let f = with_xt(f);
    let degree = f.degree_in("x")?.unwrap_or(0);
    if degree > m {
        return Err(DecompError::DegreeExceeded { degree, bound: m });
    }
    let t = t_operator(&f);
    let table = t.vars().clone();
    let x = table.index_of("x").unwrap();
    let cut = m as i64 - 1;
    let (mut hi, mut lo) = (Vec::new(), Vec::new());
    for (e, c) in t.terms() {
        if (e[x] as i64) >= cut {
            hi.push((e.clone(), c.clone()));
        } else {
            lo.push((e.clone(), c.clone()));
        }
    }
    Ok((MultiPoly::from_terms(&table, hi)?, MultiPoly::from_terms(&table, lo)?))
}

/// Coefficient of `x^p` of a polynomial as a polynomial in the remaining
/// variables (convenience for band inspection).
pub fn x_coefficient(f: &MultiPoly, p: u32) -> MultiPoly {
    with_xt(f).coeff_of("x", p).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, ratio};

    fn table() -> VarTable {
        VarTable::new(["x", "t", "c2", "c1", "c0"]).unwrap()
    }

    fn v(name: &str) -> MultiPoly {
        MultiPoly::var(&table(), name).unwrap()
    }

    #[test]
    fn quadratic_gives_twelve() {
        let f = v("x").pow(2) + v("c1") * v("x") + v("c0");
        assert_eq!(t_operator(&f).as_constant(), Some(rat(12)));
    }

    #[test]
    fn cubic_solution_is_annihilated() {
        let f = v("x").pow(3) + v("c2") * v("x").pow(2) + (v("c2").pow(2) * v("x")).scale(&ratio(1, 3))
            + v("t").scale_int(36)
            + v("c0");
        assert!(t_operator(&f).is_zero());
        assert!(bilinear_residual(&f).is_zero());
    }

    #[test]
    fn trivial_inputs() {
        let one = MultiPoly::one(&VarTable::empty());
        assert!(t_operator(&one).is_zero());
        assert!(t_operator(&(v("x") + v("c0"))).is_zero());
        let (b, r) = band_split(&one, 0).unwrap();
        assert!(b.is_zero() && r.is_zero());
        assert!(r_part(&one, 0).unwrap().is_zero());
        assert!(b_part(&one, 0).unwrap().is_zero());
    }

    #[test]
    fn cubic_remainder_constraint() {
        // c1 left free: the remainder band carries the constraint on c1
        let f = v("x").pow(3) + v("c2") * v("x").pow(2) + v("c1") * v("x") + v("t").scale_int(36) + v("c0");
        let r = r_part(&f, 3).unwrap();
        assert!(x_coefficient(&r, 1).is_zero());
        let expect = v("c1").scale_int(-36) + v("c2").pow(2).scale_int(12);
        assert_eq!(x_coefficient(&r, 0), expect);
        assert!(b_part(&f, 3).unwrap().is_zero());
    }

    #[test]
    fn degree_precondition() {
        let f = v("x").pow(4);
        assert_eq!(r_part(&f, 3), Err(DecompError::DegreeExceeded { degree: 4, bound: 3 }));
        assert!(band_split(&f, 2).is_err());
    }

    #[test]
    fn profile_reassembles() {
        let f = v("x").pow(3) * v("t") + v("c2") * v("x") + v("c0");
        let prof = CoefficientProfile::new(&f, 5).unwrap();
        assert_eq!(prof.coeffs().len(), 6);
        assert_eq!(prof.reassemble(), f);
    }
}
