//! Multivariate polynomial arithmetic over exact coefficient fields.
//!
//! The ring is always Q[x1..xn] or Q(u1..um)[x1..xn]; which one is chosen
//! by the coefficient type parameter (`Rational` or `RatFun`). Term orders
//! live on the ring and every polynomial keeps its terms sorted by them.

pub mod coeff;
pub mod matrix;
pub mod monomial;
pub mod parse;
#[allow(clippy::module_inception)]
pub mod poly;
pub mod ring;

pub use coeff::{CoeffText, Coefficient};
pub use matrix::{PolyMatrix, VecPoly};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use poly::Poly;
pub use ring::{ensure_same_ring, same_ring, Ring, RingData};
