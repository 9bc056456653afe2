//! Exact integer/rational polynomial arithmetic and number-field elements.
//!
//! This module is the algebraic substrate for everything else: canonical
//! integer polynomials, rational polynomials with exact division, elements
//! of Q(beta) in the power basis, canonical digit strings for
//! beta-expansions, Sturm chains for exact real-root counting, and the
//! power-map resultant that produces minimal polynomials of powers.

mod digits;
mod field;
mod poly;
mod power;
mod sturm;

pub use digits::DigitString;
pub use field::{FieldElement, NumberField};
pub use poly::{IntPolynomial, ParsePolyError, RatPolynomial};
pub use power::{chebyshev_expand, chebyshev_reduce, min_poly_of_power, resultant_power};
pub(crate) use power::{interpolate_int, resultant_sylvester};
pub use sturm::{cauchy_bound, sturm_count, Endpoint, SturmChain};

/// Errors raised by algebra operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Division by the zero polynomial.
    DivisionByZero,
    /// `min_poly_of_power` lost degree: the input was not the minimal
    /// polynomial of a Perron number.
    DegreeDropped { expected: usize, got: usize },
    /// Field elements from different number fields were combined.
    FieldMismatch,
    /// `chebyshev_reduce` needs an even-degree polynomial equal to its
    /// own reversal.
    NotReciprocal,
    /// A digit string with no digits at all.
    EmptyDigits,
}

impl std::fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraError::DivisionByZero => write!(f, "division by zero polynomial"),
            AlgebraError::DegreeDropped { expected, got } => write!(
                f,
                "minimal polynomial of power dropped degree ({expected} -> {got}); \
                 input was not the minimal polynomial of a Perron number"
            ),
            AlgebraError::FieldMismatch => write!(f, "field elements belong to different fields"),
            AlgebraError::NotReciprocal => {
                write!(f, "polynomial is not an even-degree self-reciprocal (+) polynomial")
            }
            AlgebraError::EmptyDigits => write!(f, "digit string is empty"),
        }
    }
}

impl std::error::Error for AlgebraError {}
