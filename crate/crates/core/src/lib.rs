//! Exact-arithmetic classification of Perron numbers.
//!
//! The crate decides, with certificates, whether a Perron number and its
//! powers are Parry numbers: it computes greedy beta-expansions of 1 in the
//! number field, isolates Galois conjugates in certified complex enclosures,
//! applies the Solomyak / Boyd / Akiyama non-Parry criteria, and assembles
//! Parry spectra and orders together with the `K` and `N_p` upper bounds.
//! Named polynomial families and a bounded-coefficient census of Perron
//! numbers sit on top.
//!
//! Everything is exact: integer and rational arithmetic is arbitrary
//! precision, real/complex enclosures have rational endpoints and refine on
//! demand, and every classification carries a machine-checkable witness.

pub mod algebra;
pub mod atlas;
pub mod certify;
pub mod criteria;
pub mod dynamics;
pub mod spectrum;

pub use algebra::{DigitString, FieldElement, IntPolynomial, NumberField, RatPolynomial};
pub use certify::{NumberClass, RootEnclosure};
pub use dynamics::ParryStatus;
pub use spectrum::SpectrumReport;
