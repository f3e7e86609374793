//! Crate-wide error type.
//!
//! One enum covers scalar arithmetic, parsing, ring plumbing, module
//! operations and the verification pipeline. Variants carry just enough
//! context to print a useful one-line message; callers that need more
//! (file names, line numbers) wrap the message via `Error::input`.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by a zero scalar or zero rational function.
    DivisionByZero,
    /// A substitution u -> alpha hit a vanishing denominator or leading
    /// coefficient. The string names the offending factor.
    BadSubstitution { factor: String, context: String },
    /// Text could not be parsed. `pos` is a byte offset into the input.
    Parse { pos: usize, expected: String },
    /// A name in a polynomial expression is neither a variable nor a
    /// parameter of the ambient ring.
    UnknownSymbol { name: String, pos: usize },
    /// Operands live in different rings (names, order or mode differ).
    RingMismatch,
    /// An elimination step was requested on a Groebner basis whose order
    /// does not eliminate the leading block of variables.
    OrderMismatch,
    /// Height is undefined for the zero ideal and the unit ideal.
    ImproperIdeal,
    /// The requested generator images do not define a module map.
    NotAHomomorphism,
    /// Two submodules do not share an ambient module.
    AmbientMismatch,
    /// Consecutive maps fail to compose to zero at the given index.
    NotAComplex { index: usize },
    /// A free resolution hit the step cap before the kernel vanished.
    CapExceeded { cap: usize },
    /// A specialized map lost its compatibility square. Defensive check;
    /// only reachable when a bad substitution escaped the certificate.
    CompatibilityLost,
    /// The operation is undefined on the zero module.
    ZeroModule,
    /// No good substitution point was found within the sampling budget.
    ExhaustedSampling { draws: usize },
    /// Malformed input file or command line.
    Input { msg: String },
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input { msg: msg.into() }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::BadSubstitution { factor, context } => {
                write!(f, "substitution vanishes on {factor} ({context})")
            }
            Error::Parse { pos, expected } => {
                write!(f, "parse error at byte {pos}: expected {expected}")
            }
            Error::UnknownSymbol { name, pos } => {
                write!(f, "unknown symbol `{name}` at byte {pos}")
            }
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::OrderMismatch => {
                write!(f, "monomial order does not eliminate the requested block")
            }
            Error::ImproperIdeal => write!(f, "height is undefined for (0) and (1)"),
            Error::NotAHomomorphism => {
                write!(f, "generator images do not respect the relations")
            }
            Error::AmbientMismatch => write!(f, "submodules have different ambient modules"),
            Error::NotAComplex { index } => {
                write!(f, "maps at position {index} do not compose to zero")
            }
            Error::CapExceeded { cap } => {
                write!(f, "resolution cap {cap} reached before the kernel vanished")
            }
            Error::CompatibilityLost => {
                write!(f, "specialized map lost compatibility with the presentations")
            }
            Error::ZeroModule => write!(f, "operation undefined on the zero module"),
            Error::ExhaustedSampling { draws } => {
                write!(f, "no good substitution point in {draws} draws")
            }
            Error::Input { msg } => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
