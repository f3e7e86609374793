//! Exact specialization of parametric modules.
//!
//! The objects here live over R = Q(u1..um)[x1..xn]: ideals, finitely
//! presented modules, maps, and free complexes whose coefficients are
//! rational functions in the parameters u. Substituting u -> alpha in Q^m
//! sends them to objects over Q[x1..xn], and for all but finitely many
//! alpha that substitution preserves the structural invariants: Groebner
//! bases, ranks, exactness, homology, dimensions, annihilators, grade.
//!
//! Every parametric computation records the polynomials in u it had to
//! invert or keep nonzero in a [`cert::Certificate`]. A substitution point
//! that avoids the zero set of every recorded factor is provably safe: the
//! whole computation transcript specializes verbatim, so the specialized
//! answer equals the answer computed from scratch over Q. The verification
//! drivers exploit that by recomputing both ways and comparing canonical
//! forms exactly; no floating point is involved anywhere.
//!
//! The crate is organized bottom-up:
//!
//! - [`scalar`]: rationals, parameter polynomials, rational functions
//! - [`cert`]: certificates of good specialization points
//! - [`poly`]: polynomials, term orders, matrices, parsing and printing
//! - [`groebner`]: Groebner bases, syzygies, elimination, ideal calculus
//! - [`fpmod`]: finitely presented modules, maps, submodule calculus
//! - [`resolve`]: complexes, rank, free resolutions, exactness criteria
//! - [`homology`]: Tor, Ext, grade, projective dimension
//! - [`specialize`]: substitution of parameter values and sampling
//! - [`io`]: the text formats for rings, ideals, modules and complexes
//! - [`cli`]: the command-line verification drivers
//!
//! The `examples/` directory exercises one capability per file and is the
//! best starting point for the API.

pub mod cert;
pub mod cli;
pub mod error;
pub mod fpmod;
pub mod groebner;
pub mod homology;
pub mod io;
pub mod poly;
pub mod resolve;
pub mod scalar;
pub mod specialize;

pub use cert::Certificate;
pub use error::{Error, Result};
