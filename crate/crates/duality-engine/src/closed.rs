use graded_algebra::{Multivector, RatFunc};
use polyvector_calculus::{contract_with_cy, divergence, top_primitive, CalabiYauOrdering, CalculusError};

use crate::frame::{by_spectators, DualityFrame};
use crate::signs::SignConventionFile;
use crate::DualityError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedMode {
    /// Five cases over `C_z x C^2`.
    CTimesC2,
    /// Degree-indexed formulas on `C^3`.
    C3Z4,
}

impl ClosedMode {
    pub fn key(self) -> &'static str {
        match self {
            ClosedMode::CTimesC2 => "c_times_c2",
            ClosedMode::C3Z4 => "c3_z4",
        }
    }
}

/// Which case handled one input component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseTrace {
    pub component: String,
    pub degree: usize,
    pub case: &'static str,
}

#[derive(Clone, Debug)]
pub struct SdualOutcome {
    pub image: Multivector,
    pub trace: Vec<CaseTrace>,
    pub oracle_consulted: bool,
}

struct Builder<'a> {
    image: Multivector,
    trace: Vec<CaseTrace>,
    signs: &'a SignConventionFile,
    mode: ClosedMode,
}

impl Builder<'_> {
    fn push(&mut self, input: &Multivector, degree: usize, case: &'static str, value: Multivector) {
        let sigma = self.signs.sign(self.mode.key(), degree);
        let value = if sigma < 0 { value.neg() } else { value };
        self.image = self.image.add(&value);
        self.trace.push(CaseTrace { component: input.to_text(), degree, case });
    }
}

/// `f = c + f'` with `c` independent of the ordering's coordinates.
fn constant_split(f: &Multivector, cy: &CalabiYauOrdering) -> Result<(Multivector, Multivector), DualityError> {
    let reg = f.registry();
    let mut c = Multivector::zero(reg);
    for (mono, coeff) in f.terms() {
        let parts = coeff.split_by_vars(cy.coords()).ok_or(CalculusError::NotPolynomial)?;
        for (mon, k) in parts {
            if mon.is_one() {
                c = c.add(&Multivector::term(reg, k, mono));
            }
        }
    }
    Ok((c.clone(), f.sub(&c)))
}

fn require_closed(piece: &Multivector, cy: &CalabiYauOrdering) -> Result<(), DualityError> {
    let div = divergence(piece, cy)?;
    if div.is_zero() {
        Ok(())
    } else {
        Err(DualityError::OutOfDomain(format!("{} has divergence {}", piece, div)))
    }
}

fn require_constant(piece: &Multivector, cy: &CalabiYauOrdering) -> Result<(), DualityError> {
    let (c, rest) = constant_split(piece, cy)?;
    if rest.is_zero() {
        Ok(())
    } else {
        Err(DualityError::OutOfDomain(format!("top component {} is not divergence-free", c.add(&rest))))
    }
}

/// Closed-form S-duality with the fitted signs of `signs` applied per degree.
pub fn sdual_closed_form(
    m: &Multivector,
    frame: &DualityFrame,
    mode: ClosedMode,
    signs: &SignConventionFile,
) -> Result<SdualOutcome, DualityError> {
    let reg = m.registry();
    let mut out = Builder { image: Multivector::zero(reg), trace: Vec::new(), signs, mode };
    let one_leg = |legs: &[graded_algebra::OddId]| Multivector::term(reg, RatFunc::one(), legs);
    match mode {
        ClosedMode::CTimesC2 => {
            let plane = &frame.plane;
            let leg = frame.circle.leg(reg);
            let (a, b) = frame.circle.split_b(m);
            frame.circle.check_transverse(&a, "B-side")?;
            frame.circle.check_transverse(&b, "B-side")?;
            for (legs, part) in by_spectators(&a, &plane.thetas()) {
                let l = one_leg(&legs);
                for k in 0..=2 {
                    let piece = part.filter(|mono| mono.len() == k);
                    if piece.is_zero() {
                        continue;
                    }
                    let input = l.wedge(&piece);
                    match k {
                        0 => {
                            let (c, rest) = constant_split(&piece, plane)?;
                            if !rest.is_zero() {
                                let v = divergence(&rest.wedge(&plane.omega_inv()), plane)?;
                                out.push(&l.wedge(&rest), 0, "PV0, nonzero divergence", l.wedge(&leg).wedge(&v).neg());
                            }
                            if !c.is_zero() {
                                out.push(&l.wedge(&c), 0, "PV0, zero divergence", l.wedge(&leg).wedge(&c).wedge(&plane.omega_inv()).neg());
                            }
                        }
                        1 => {
                            require_closed(&piece, plane)?;
                            out.push(&input, 1, "identity", input.clone());
                        }
                        _ => {
                            return Err(DualityError::NotRepresentable(format!(
                                "component {} without the circle leg has plane degree 2",
                                input
                            )))
                        }
                    }
                }
            }
            for (legs, part) in by_spectators(&b, &plane.thetas()) {
                // `leg ^ L ^ P = (-1)^|L| L ^ leg ^ P`; the cases act on `leg ^ P`.
                let l = one_leg(&legs);
                let l = if legs.len() % 2 == 1 { l.neg() } else { l };
                for k in 0..=2 {
                    let piece = part.filter(|mono| mono.len() == k);
                    if piece.is_zero() {
                        continue;
                    }
                    let input = l.wedge(&leg).wedge(&piece);
                    match k {
                        0 => out.push(&input, 1, "identity", input.clone()),
                        1 => out.push(&input, 2, "PV1 primitive", l.wedge(&top_primitive(&piece, plane)?)),
                        _ => {
                            require_constant(&piece, plane)?;
                            let c = piece.coefficient(&plane.thetas()).mul(&plane.density());
                            out.push(&input, 3, "PV2 coefficient", l.scale_rat(&c));
                        }
                    }
                }
            }
        }
        ClosedMode::C3Z4 => {
            let cy = frame.threefold()?;
            for (legs, part) in by_spectators(m, &cy.thetas()) {
                let l = one_leg(&legs);
                for k in 0..=3 {
                    let piece = part.filter(|mono| mono.len() == k);
                    if piece.is_zero() {
                        continue;
                    }
                    let input = l.wedge(&piece);
                    match k {
                        0 => {
                            let (c, rest) = constant_split(&piece, &cy)?;
                            if !rest.is_zero() {
                                let v = divergence(&rest.wedge(&cy.omega_inv()), &cy)?;
                                out.push(&l.wedge(&rest), 0, "PV0, nonzero divergence", l.wedge(&v).neg());
                            }
                            if !c.is_zero() {
                                out.push(&l.wedge(&c), 0, "PV0, zero divergence", l.wedge(&c).wedge(&cy.omega_inv()).neg());
                            }
                        }
                        1 => {
                            require_closed(&piece, &cy)?;
                            out.push(&input, 1, "identity", input.clone());
                        }
                        2 => out.push(&input, 2, "PV2 primitive", l.wedge(&top_primitive(&piece, &cy)?)),
                        _ => {
                            require_constant(&piece, &cy)?;
                            out.push(&input, 3, "PV3 contraction", l.wedge(&contract_with_cy(&piece, &cy)));
                        }
                    }
                }
            }
        }
    }
    Ok(SdualOutcome { image: out.image, trace: out.trace, oracle_consulted: false })
}
