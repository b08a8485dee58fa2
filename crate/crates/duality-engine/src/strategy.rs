use graded_algebra::Multivector;

use crate::closed::{sdual_closed_form, CaseTrace, ClosedMode, SdualOutcome};
use crate::composite::sdual_composite;
use crate::frame::DualityFrame;
use crate::signs::SignConventionFile;
use crate::DualityError;

/// One way of computing S-duality on B-side fields.
pub trait SdualStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn apply(&self, m: &Multivector, frame: &DualityFrame) -> Result<SdualOutcome, DualityError>;
}

struct Composite;

impl SdualStrategy for Composite {
    fn name(&self) -> &'static str {
        "composite"
    }

    fn apply(&self, m: &Multivector, frame: &DualityFrame) -> Result<SdualOutcome, DualityError> {
        let image = sdual_composite(m, frame)?;
        let trace = vec![CaseTrace { component: m.to_text(), degree: m.total_degree().unwrap_or(0), case: "T^-1, red_M^-1, S, red_M, T" }];
        Ok(SdualOutcome { image, trace, oracle_consulted: true })
    }
}

struct Closed {
    mode: ClosedMode,
    signs: SignConventionFile,
}

impl SdualStrategy for Closed {
    fn name(&self) -> &'static str {
        self.mode.key()
    }

    /// Over a Laurent circle the five-case form is checked against the composite.
    fn apply(&self, m: &Multivector, frame: &DualityFrame) -> Result<SdualOutcome, DualityError> {
        let mut out = sdual_closed_form(m, frame, self.mode, &self.signs)?;
        if self.mode == ClosedMode::CTimesC2 && frame.circle.laurent {
            let oracle = sdual_composite(m, frame)?;
            if oracle != out.image {
                return Err(DualityError::OracleMismatch(format!("closed {} vs composite {}", out.image, oracle)));
            }
            out.oracle_consulted = true;
        }
        Ok(out)
    }
}

/// Named strategies; `closed` is an alias for the three-fold formulas.
pub struct SdualRegistry {
    strategies: Vec<Box<dyn SdualStrategy>>,
}

impl SdualRegistry {
    pub fn standard(signs: &SignConventionFile) -> Self {
        SdualRegistry {
            strategies: vec![
                Box::new(Composite),
                Box::new(Closed { mode: ClosedMode::CTimesC2, signs: signs.clone() }),
                Box::new(Closed { mode: ClosedMode::C3Z4, signs: signs.clone() }),
            ],
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.strategies.iter().map(|s| s.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn SdualStrategy, DualityError> {
        let name = if name == "closed" { "c3_z4" } else { name };
        self.strategies.iter().find(|s| s.name() == name).map(|s| s.as_ref()).ok_or_else(|| DualityError::UnknownMode(name.to_string()))
    }
}
