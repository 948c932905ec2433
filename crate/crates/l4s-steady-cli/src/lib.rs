//! Support library of the `l4s-steady` binary: quantity parsing, scenario
//! files and result rendering. Kept as a library so tests can drive the same
//! code paths the binary uses.

pub mod numfmt;
pub mod report;
pub mod scenario;
pub mod units;
