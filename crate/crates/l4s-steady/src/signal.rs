//! Congestion-signal level and the Classic coupling.
//!
//! A signal level carries the marking probability `p` together with the mean
//! unmarked run length `u = 1/p - 1`. The reciprocal `1/u = p/(1-p)` keeps
//! growing past the point where `p` saturates at 1, which is what lets a
//! scalable controller keep responding however small its window gets.

use crate::error::Error;

/// Marking level seen by a flow, kept consistent in both representations.
///
/// `p` lives in [0, 1]; `u` in [0, +inf]. Zero marking is represented by the
/// explicit [`SignalLevel::UNMARKED`] sentinel with unbounded `u`, never by a
/// large finite value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignalLevel {
    p: f64,
    u: f64,
}

impl SignalLevel {
    /// No packets marked: p = 0, unmarked runs unbounded.
    pub const UNMARKED: SignalLevel = SignalLevel {
        p: 0.0,
        u: f64::INFINITY,
    };

    /// Build from a marking probability in [0, 1].
    pub fn from_p(p: f64) -> Result<Self, Error> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain("marking probability must lie in [0, 1]"));
        }
        if p == 0.0 {
            return Ok(Self::UNMARKED);
        }
        // (1 - p)/p: the subtraction is exact for p >= 0.5, so the run length
        // stays accurate right up to p = 1.
        Ok(SignalLevel { p, u: (1.0 - p) / p })
    }

    /// Build from a mean unmarked run length in [0, +inf].
    pub fn from_u(u: f64) -> Result<Self, Error> {
        if u.is_nan() || u < 0.0 {
            return Err(Error::Domain("unmarked run length must be >= 0"));
        }
        if u == f64::INFINITY {
            return Ok(Self::UNMARKED);
        }
        Ok(SignalLevel { p: 1.0 / (u + 1.0), u })
    }

    pub fn p(self) -> f64 {
        self.p
    }

    pub fn u(self) -> f64 {
        self.u
    }

    pub fn is_unmarked(self) -> bool {
        self.p == 0.0
    }

    /// Virtual mark rate per packet, 1/u = p/(1-p). Unbounded at p = 1.
    pub fn virtual_mark_rate(self) -> f64 {
        self.p / (1.0 - self.p)
    }
}

/// Exponent of the DualQ coupling. Squared coupling matches window-law
/// (DCTCP-like) flows against Classic; a fourth power is what a
/// rate-proportional law (Compromise 4) needs instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingExponent {
    Two,
    Four,
}

impl CouplingExponent {
    pub fn as_u32(self) -> u32 {
        match self {
            CouplingExponent::Two => 2,
            CouplingExponent::Four => 4,
        }
    }
}

impl TryFrom<u32> for CouplingExponent {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self, Error> {
        match n {
            2 => Ok(CouplingExponent::Two),
            4 => Ok(CouplingExponent::Four),
            _ => Err(Error::Domain("coupling exponent must be 2 or 4")),
        }
    }
}

/// DualQ coupling between the L4S marking level and the Classic drop/mark level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coupling {
    /// Coupling factor k > 0.
    pub k: f64,
    pub exponent: CouplingExponent,
}

impl Default for Coupling {
    fn default() -> Self {
        Coupling { k: 2.0, exponent: CouplingExponent::Two }
    }
}

impl Coupling {
    pub fn new(k: f64, exponent: CouplingExponent) -> Result<Self, Error> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::Domain("coupling factor k must be finite and > 0"));
        }
        Ok(Coupling { k, exponent })
    }

    /// Classic-side signal p_C = min(1, (p/k)^exponent).
    pub fn classic_signal(&self, l4s: SignalLevel) -> Result<SignalLevel, Error> {
        if !(self.k > 0.0) || !self.k.is_finite() {
            return Err(Error::Domain("coupling factor k must be finite and > 0"));
        }
        let base = l4s.p() / self.k;
        let sq = base * base;
        let coupled = match self.exponent {
            CouplingExponent::Two => sq,
            CouplingExponent::Four => sq * sq,
        };
        SignalLevel::from_p(coupled.min(1.0))
    }
}
