//! The verbs of the `twisted` binary; each returns printable text and a verdict.

use std::fmt::Write as _;
use std::path::Path;

use branes_open_closed::{closed_open, BraneError, BraneSpec};
use duality_engine::{DualityError, DualityFrame, SdualRegistry, SignConventionFile};
use field_spaces::{BackgroundDescriptor, FieldError};
use polyvector_calculus::{divergence, dolbeault, sn_bracket, CalculusError};
use susy_residual::{build_siso, q_cohomology, ResMap, SusyError, SO_DIM, SPINOR_DIM, VEC_DIM};

use crate::expr::{parse, ParseError};
use crate::suites::{SuiteContext, SuiteRegistry, UnknownSuite};

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error("this map cannot be defined everywhere: {0}")]
    Domain(DualityError),
    #[error(transparent)]
    Duality(DualityError),
    #[error(transparent)]
    Brane(#[from] BraneError),
    #[error(transparent)]
    Susy(#[from] SusyError),
    #[error(transparent)]
    Suite(#[from] UnknownSuite),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl From<DualityError> for CommandError {
    fn from(e: DualityError) -> Self {
        match e {
            DualityError::NotRepresentable(_) | DualityError::OutOfDomain(_) => CommandError::Domain(e),
            other => CommandError::Duality(other),
        }
    }
}

/// Printed result; `ok` is false when a verification failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn line(text: String) -> Self {
        Outcome { text: text + "\n", ok: true }
    }
}

/// `--background` text, or the default `R4A x C3B`.
pub fn background(text: Option<&str>) -> Result<BackgroundDescriptor, CommandError> {
    Ok(match text {
        Some(t) => BackgroundDescriptor::parse(t)?,
        None => BackgroundDescriptor::standard(),
    })
}

pub fn parse_cmd(expr: &str, bg: &BackgroundDescriptor) -> Result<Outcome, CommandError> {
    Ok(Outcome::line(parse(expr, &bg.registry())?.to_text()))
}

pub fn sn_cmd(a: &str, b: &str, bg: &BackgroundDescriptor) -> Result<Outcome, CommandError> {
    let reg = bg.registry();
    let cy = bg.calabi_yau(&reg)?;
    Ok(Outcome::line(sn_bracket(&parse(a, &reg)?, &parse(b, &reg)?, &cy)?.to_text()))
}

pub fn div_cmd(expr: &str, bg: &BackgroundDescriptor) -> Result<Outcome, CommandError> {
    let reg = bg.registry();
    let cy = bg.calabi_yau(&reg)?;
    Ok(Outcome::line(divergence(&parse(expr, &reg)?, &cy)?.to_text()))
}

pub fn dolbeault_cmd(expr: &str, bg: &BackgroundDescriptor) -> Result<Outcome, CommandError> {
    Ok(Outcome::line(dolbeault(&parse(expr, &bg.registry())?).to_text()))
}

/// Apply the named S-duality strategy; `composite` without a background runs on
/// the circle background.
pub fn sdual_cmd(expr: &str, mode: &str, bg: Option<&BackgroundDescriptor>, signs: &SignConventionFile) -> Result<Outcome, CommandError> {
    let strategies = SdualRegistry::standard(signs);
    let strategy = strategies.get(mode)?;
    let bg = match bg {
        Some(b) => b.clone(),
        None if strategy.name() == "composite" => BackgroundDescriptor::circle(),
        None => BackgroundDescriptor::standard(),
    };
    let reg = bg.registry();
    let laurent = bg.b_coords().iter().any(|(name, log)| name == "z" && *log);
    let frame = DualityFrame::standard(&reg, laurent)?;
    let outcome = strategy.apply(&parse(expr, &reg)?, &frame)?;
    let mut text = format!("image = {}\n", outcome.image.to_text());
    for t in &outcome.trace {
        writeln!(text, "case = {} | degree {} | {}", t.component, t.degree, t.case).unwrap();
    }
    writeln!(text, "oracle_consulted = {}", outcome.oracle_consulted).unwrap();
    Ok(Outcome { text, ok: true })
}

pub fn comap_cmd(expr: &str, brane: &str) -> Result<Outcome, CommandError> {
    let spec = match brane {
        "d3" => BraneSpec::d3(),
        "d5" => BraneSpec::d5(),
        other => return Err(BraneError::Unsupported(format!("unknown brane {}; expected d3 or d5", other)).into()),
    };
    let m = parse(expr, &spec.registry())?;
    Ok(Outcome::line(closed_open(&m, &spec)?.to_text()))
}

pub fn qcoh_cmd() -> Result<Outcome, CommandError> {
    let siso = build_siso()?;
    let coh = q_cohomology(&siso.algebra, &siso.standard_supercharge())?;
    let res = ResMap::new(&siso, &coh)?;
    let so_rank = coh.rank_on(0..SO_DIM);
    let spinors: Vec<usize> = (0..2 * SPINOR_DIM).map(|k| SO_DIM + VEC_DIM + k).collect();
    let spinor_rank = coh.rank_on(spinors.clone());
    let (even, odd) = siso.algebra.sdim();
    let mut text = format!("siso = ({}|{})\n", even, odd);
    writeln!(text, "cohomology = ({}|{})", coh.sdim.0, coh.sdim.1).unwrap();
    writeln!(text, "stab = {}", SO_DIM - so_rank).unwrap();
    writeln!(text, "image_on_so10 = {}", so_rank).unwrap();
    writeln!(text, "kernel_on_spinors = {}", spinors.len() - spinor_rank).unwrap();
    for e in &res.entries {
        writeln!(text, "res {} [{}] = {}", e.label, e.summand.name(), e.image.to_text()).unwrap();
    }
    Ok(Outcome { text, ok: true })
}

/// Run a suite; the report goes to `report` as text, or JSON for a `.json` path.
pub fn verify_cmd(suite: &str, ctx: &SuiteContext, report: Option<&Path>) -> Result<Outcome, CommandError> {
    let r = SuiteRegistry::standard().run(suite, ctx)?;
    let text = r.to_string();
    if let Some(path) = report {
        let body = if path.extension().is_some_and(|e| e == "json") { r.to_json() + "\n" } else { text.clone() };
        std::fs::write(path, body)?;
    }
    Ok(Outcome { text, ok: r.passed() })
}
