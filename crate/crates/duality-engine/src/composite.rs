use graded_algebra::Multivector;

use crate::frame::{by_spectators, DualityFrame};
use crate::reduction::{reduce_m, reduce_m_inverse, s_generator};
use crate::tdual::{t_dual, Direction};
use crate::DualityError;

/// Conjugate an algebra map on the circle pair through the T-duality and the
/// reduction: `T . red_M . g . red_M^-1 . T^-1`.
fn conjugate(m: &Multivector, frame: &DualityFrame, g: impl Fn(&Multivector) -> Multivector) -> Result<Multivector, DualityError> {
    let (a, _) = frame.circle.split_b(m);
    for (_, part) in by_spectators(&a, &frame.plane.thetas()) {
        if part.terms().any(|(mono, _)| mono.len() == 2) {
            return Err(DualityError::NotRepresentable(format!(
                "component {} without the circle leg has plane degree 2; its T-dual is not a supergravity field",
                part
            )));
        }
    }
    let on_a = t_dual(m, &frame.circle, Direction::BtoA)?;
    let on_m = reduce_m_inverse(&on_a, frame)?;
    let back = reduce_m(&g(&on_m), frame)?;
    t_dual(&back, &frame.circle, Direction::AtoB)
}

/// `S = T . red_M . S . red_M^-1 . T^-1`, each stage checking its own domain.
pub fn sdual_composite(m: &Multivector, frame: &DualityFrame) -> Result<Multivector, DualityError> {
    conjugate(m, frame, |x| s_generator(x, frame))
}

/// `eM -> -eM`, `eps -> -eps`.
pub fn circle_negation(m: &Multivector, frame: &DualityFrame) -> Multivector {
    let reg = m.registry();
    m.substitute_odd(|g| (g == frame.em || g == frame.eps).then(|| Multivector::odd(reg, g).neg()))
}

/// The map induced on B-side fields by [`circle_negation`].
pub fn s_squared_target(m: &Multivector, frame: &DualityFrame) -> Result<Multivector, DualityError> {
    conjugate(m, frame, |x| circle_negation(x, frame))
}
