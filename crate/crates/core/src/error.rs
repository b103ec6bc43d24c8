use alloc::string::String;
use core::fmt;

use crate::report::Witness;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two operands that must live in the same ambient space do not.
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },
    /// A structure map has the wrong domain or codomain dimension.
    Shape {
        map: String,
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// `S_alpha` is singular.
    NonInvertibleAntipode {
        degree: usize,
    },
    MissingAntipodeInverse,
    /// Part (2) of the `N ⊗ H` construction needs every `H_alpha` commutative.
    CommutativityRequired {
        degree: usize,
    },
    NotTrivialComodule {
        alpha: usize,
        beta: usize,
    },
    /// A map induced on a quotient does not kill the relations it must kill.
    IllDefined {
        map: &'static str,
        degree: usize,
        witness: Witness,
    },
    /// A subspace expected to be closed under some operation is not.
    NotClosed {
        what: &'static str,
        degree: usize,
    },
    /// A precondition certificate failed.
    Uncertified {
        what: &'static str,
    },
    InvalidArgument(&'static str),
    UnknownFixture(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch {
                context,
                left,
                right,
            } => {
                write!(f, "dimension mismatch in {context}: {left} vs {right}")
            }
            Error::Shape {
                map,
                expected,
                found,
            } => write!(
                f,
                "map {map} has shape {}x{}, expected {}x{}",
                found.0, found.1, expected.0, expected.1
            ),
            Error::NonInvertibleAntipode { degree } => {
                write!(f, "antipode is not invertible at degree {degree}")
            }
            Error::MissingAntipodeInverse => f.write_str("antipode inverse has not been computed"),
            Error::CommutativityRequired { degree } => {
                write!(f, "H is not commutative at degree {degree}")
            }
            Error::NotTrivialComodule { alpha, beta } => {
                write!(f, "comodule is not trivial at ({alpha}, {beta})")
            }
            Error::IllDefined {
                map,
                degree,
                witness,
            } => write!(
                f,
                "{map} is not well defined on the quotient at degree {degree} (witness basis {:?})",
                witness.basis
            ),
            Error::NotClosed { what, degree } => {
                write!(f, "{what} is not closed at degree {degree}")
            }
            Error::Uncertified { what } => write!(f, "precondition not certified: {what}"),
            Error::InvalidArgument(msg) => f.write_str(msg),
            Error::UnknownFixture(name) => write!(f, "unknown fixture {name:?}"),
        }
    }
}

impl core::error::Error for Error {}
