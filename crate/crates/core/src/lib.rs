//! Exact polynomial machinery for the bilinear equation
//! `(D_{3,x} D_{3,t} + D_{3,x}^4) f.f = 0` and the rational solutions
//! `u = 2 (ln f)_x` of the associated KdV-like equation.
//!
//! * [`exactpoly`]: sparse multivariate polynomials over the rationals.
//! * [`dop`]: generalized bilinear derivatives `D_{p,x}`.
//! * [`kdvlike`]: the quadratic operator `T` and its band decomposition.
//! * [`fundsol`]: fundamental families `P_{m,k}` and the universal `Q_k`.
//! * [`leading`]: remainder polynomials, leading coefficients, certificates.
//! * [`solutions`]: classification by x-degree and rational solutions.
//! * [`cli`]: the `hirota` command-line front end.

pub mod dop;
pub mod exactpoly;
pub mod fundsol;
pub mod kdvlike;
pub mod leading;
pub mod solutions;
pub mod cli;
