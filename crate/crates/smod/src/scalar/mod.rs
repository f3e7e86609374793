//! Scalar layer: exact rationals, polynomials in the parameters, and the
//! rational-function field they generate.
//!
//! Everything above this module is generic over a coefficient field; the
//! two instances are `Rational` (plain Q, used after substitution) and
//! `RatFun` (Q(u_1..u_m), used before).

mod parampoly;
mod ratfun;

pub use parampoly::{
    factor_cmp, param_gcd, parse_rational, rational_string, ParamPoly, Rational, SubstPoint,
};
pub use ratfun::RatFun;
