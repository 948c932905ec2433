//! Steady-state analysis of L4S scalable congestion controllers.
//!
//! Everything here works in canonical units: seconds, bits, packets per
//! second. Unit conversion belongs to callers (the CLI companion crate
//! parses `ms`/`Mb/s` suffixes at its boundary).

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod equilibrium;
pub mod error;
pub mod flow;
pub mod fluidsim;
pub mod laws;
pub mod signal;

mod math;

pub use error::Error;
pub use flow::{ControlLaw, FlowSpec, FlowState};
pub use signal::{Coupling, CouplingExponent, SignalLevel};
