//! placeholder
pub struct SpectrumReport;
