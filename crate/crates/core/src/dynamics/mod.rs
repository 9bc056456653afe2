//! placeholder
pub struct ParryStatus;
