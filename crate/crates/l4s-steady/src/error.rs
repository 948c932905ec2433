//! Error type shared by the whole crate.

use core::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument fell outside the operation's domain.
    Domain(&'static str),
    /// A rate law was evaluated at the zero-marking sentinel (p = 0, u unbounded).
    UnboundedRate(&'static str),
    /// Scenario contains flows the requested solver cannot handle.
    WrongSolver(&'static str),
    /// Bracket expansion exhausted its iteration budget without enclosing a root.
    NoBracket { demand_at_hi: f64, capacity: f64 },
    /// Total demand failed to increase along the bracketing sweep; the scenario
    /// violates the solver's monotonicity precondition.
    NonMonotoneDemand { u_lo: f64, u_hi: f64 },
    /// Bisection ran out of iterations before the residual met tolerance.
    NoConvergence { residual: f64, tol: f64 },
    /// Scenario failed structural validation.
    InvalidScenario(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::UnboundedRate(what) => {
                write!(f, "unbounded rate: {what} evaluated at zero marking (p = 0)")
            }
            Error::WrongSolver(what) => write!(f, "wrong solver: {what}"),
            Error::NoBracket { demand_at_hi, capacity } => write!(
                f,
                "no bracket: demand {demand_at_hi} never reached capacity {capacity}"
            ),
            Error::NonMonotoneDemand { u_lo, u_hi } => write!(
                f,
                "total demand not strictly increasing between u = {u_lo} and u = {u_hi}"
            ),
            Error::NoConvergence { residual, tol } => write!(
                f,
                "no convergence: residual {residual} above tolerance {tol}"
            ),
            Error::InvalidScenario(what) => write!(f, "invalid scenario: {what}"),
        }
    }
}

impl core::error::Error for Error {}
