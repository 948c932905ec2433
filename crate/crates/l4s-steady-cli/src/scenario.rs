//! Scenario files: a TOML document of quantity strings that maps onto the
//! core `Scenario`. Unknown keys are rejected, as are parameters that do not
//! belong to the declared law.

use l4s_steady::equilibrium::Scenario;
use l4s_steady::laws;
use l4s_steady::{ControlLaw, Coupling, CouplingExponent, FlowSpec};
use serde::{Deserialize, Serialize};

use crate::units;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    /// Bottleneck capacity, e.g. "1 Gb/s".
    pub capacity: String,
    /// Queue delay seen by scalable flows; default "500 us".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub queue_delay: Option<String>,
    /// Queue delay seen by Classic flows; default "15 ms".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classic_queue_delay: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coupling: Option<CouplingFile>,
    #[serde(default)]
    pub flows: Vec<FlowFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CouplingFile {
    pub k: f64,
    pub exponent: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FlowFile {
    pub id: String,
    /// e.g. "10 ms".
    pub base_rtt: String,
    /// e.g. "12 kb".
    pub segment_size: String,
    /// One of "dctcp", "compromise4", "compromise5", "classic".
    pub law: String,
    /// Marks per RTT floor (dctcp, compromise5).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v0: Option<f64>,
    /// Mark rate constant, marks/s (compromise4).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c0: Option<f64>,
    /// Knee RTT (compromise5), e.g. "500 us".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r0: Option<String>,
}

fn law_of(f: &FlowFile) -> Result<ControlLaw, String> {
    let reject = |name: &str, set: bool| -> Result<(), String> {
        if set {
            Err(format!("flow `{}`: {} does not apply to law `{}`", f.id, name, f.law))
        } else {
            Ok(())
        }
    };
    match f.law.as_str() {
        "dctcp" => {
            reject("c0", f.c0.is_some())?;
            reject("r0", f.r0.is_some())?;
            Ok(ControlLaw::DctcpLike { v0: f.v0.unwrap_or(laws::DEFAULT_V0) })
        }
        "compromise4" => {
            reject("v0", f.v0.is_some())?;
            reject("r0", f.r0.is_some())?;
            Ok(ControlLaw::Compromise4 { c0: f.c0.unwrap_or(laws::DEFAULT_C0) })
        }
        "compromise5" => {
            reject("c0", f.c0.is_some())?;
            let r0 = match &f.r0 {
                Some(s) => units::parse_time(s)?,
                None => laws::DEFAULT_R0,
            };
            Ok(ControlLaw::Compromise5 { v0: f.v0.unwrap_or(laws::DEFAULT_V0), r0 })
        }
        "classic" => {
            reject("v0", f.v0.is_some())?;
            reject("c0", f.c0.is_some())?;
            reject("r0", f.r0.is_some())?;
            Ok(ControlLaw::ClassicTcp)
        }
        other => Err(format!(
            "flow `{}`: unknown law `{other}` (dctcp, compromise4, compromise5, classic)",
            f.id
        )),
    }
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| format!("scenario parse: {e}"))
    }

    pub fn to_scenario(&self) -> Result<Scenario, String> {
        let mut flows = Vec::with_capacity(self.flows.len());
        for f in &self.flows {
            flows.push(FlowSpec {
                id: f.id.clone(),
                base_rtt: units::parse_time(&f.base_rtt)?,
                segment_size: units::parse_size(&f.segment_size)?,
                law: law_of(f)?,
            });
        }
        let mut scn = Scenario::new(units::parse_rate(&self.capacity)?, flows);
        if let Some(q) = &self.queue_delay {
            scn.queue_delay = units::parse_time(q)?;
        }
        if let Some(q) = &self.classic_queue_delay {
            scn.classic_queue_delay = units::parse_time(q)?;
        }
        if let Some(c) = &self.coupling {
            let exponent = CouplingExponent::try_from(c.exponent)
                .map_err(|e| format!("coupling: {e}"))?;
            scn.coupling = Coupling::new(c.k, exponent).map_err(|e| format!("coupling: {e}"))?;
        }
        scn.validate_fields().map_err(|e| format!("scenario: {e}"))?;
        Ok(scn)
    }

    /// Canonical file for a core scenario; quantities in base units.
    pub fn from_scenario(scn: &Scenario) -> Self {
        let flows = scn
            .flows
            .iter()
            .map(|f| {
                let (law, v0, c0, r0) = match f.law {
                    ControlLaw::DctcpLike { v0 } => ("dctcp", Some(v0), None, None),
                    ControlLaw::Compromise4 { c0 } => ("compromise4", None, Some(c0), None),
                    ControlLaw::Compromise5 { v0, r0 } => {
                        ("compromise5", Some(v0), None, Some(units::fmt_time(r0)))
                    }
                    ControlLaw::ClassicTcp => ("classic", None, None, None),
                };
                FlowFile {
                    id: f.id.clone(),
                    base_rtt: units::fmt_time(f.base_rtt),
                    segment_size: units::fmt_size(f.segment_size),
                    law: law.to_string(),
                    v0,
                    c0,
                    r0,
                }
            })
            .collect();
        ScenarioFile {
            capacity: units::fmt_rate(scn.capacity),
            queue_delay: Some(units::fmt_time(scn.queue_delay)),
            classic_queue_delay: Some(units::fmt_time(scn.classic_queue_delay)),
            coupling: Some(CouplingFile {
                k: scn.coupling.k,
                exponent: match scn.coupling.exponent {
                    CouplingExponent::Two => 2,
                    CouplingExponent::Four => 4,
                },
            }),
            flows,
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("scenario file always serializes")
    }
}

/// Read and convert a scenario file.
pub fn load(path: &std::path::Path) -> Result<Scenario, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("read {}: {e}", path.display()))?;
    ScenarioFile::parse(&text)?.to_scenario()
}
