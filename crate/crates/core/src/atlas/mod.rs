//! Named polynomial families, cubic analysis, and the bounded-coefficient
//! Perron census.

mod factor;

pub use factor::{factor_bounded, is_irreducible, FACTOR_DEGREE_CAP};
