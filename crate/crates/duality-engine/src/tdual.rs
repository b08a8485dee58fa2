use std::sync::Arc;

use graded_algebra::{GeneratorRegistry, Multivector, OddId, OddKind, RatFunc, VarId};

use crate::DualityError;

/// Circle factor seen from both sides: the A-side generator `eps` and the
/// B-side coordinate `z` with leg `z Dz` (Laurent) or `Dz` (affine).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleFactorRep {
    pub coord: VarId,
    pub theta: OddId,
    pub eps: OddId,
    pub laurent: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    AtoB,
    BtoA,
}

impl CircleFactorRep {
    pub fn new(reg: &Arc<GeneratorRegistry>, coord: &str, eps: &str, laurent: bool) -> Result<Self, DualityError> {
        let z = reg.var(coord).ok_or_else(|| DualityError::MissingGenerator(coord.into()))?;
        let theta = reg.theta(z).ok_or_else(|| DualityError::MissingGenerator(format!("D{}", coord)))?;
        let eps = reg.abstract_odd(eps).ok_or_else(|| DualityError::MissingGenerator(eps.into()))?;
        Ok(CircleFactorRep { coord: z, theta, eps, laurent })
    }

    /// The B-side circle leg: `z Dz` or `Dz`.
    pub fn leg(&self, reg: &Arc<GeneratorRegistry>) -> Multivector {
        let c = if self.laurent { RatFunc::var(self.coord) } else { RatFunc::one() };
        Multivector::term(reg, c, &[self.theta])
    }

    /// `m = A + leg ^ B` with `A`, `B` free of the circle leg.
    pub fn split_b(&self, m: &Multivector) -> (Multivector, Multivector) {
        let with = m.filter(|mono| mono.contains(&self.theta));
        let mut b = with.odd_derivation(self.theta);
        if self.laurent {
            b = b.scale_rat(&RatFunc::var(self.coord).inv());
        }
        (m.sub(&with), b)
    }

    /// `m = A + eps ^ B`.
    pub fn split_a(&self, m: &Multivector) -> (Multivector, Multivector) {
        let with = m.filter(|mono| mono.contains(&self.eps));
        (m.sub(&with), with.odd_derivation(self.eps))
    }

    /// Error unless `m` is constant along the circle and has no circle legs.
    pub fn check_transverse(&self, m: &Multivector, what: &str) -> Result<(), DualityError> {
        let reg = m.registry();
        let zb = reg.conjugate(self.coord);
        for (mono, c) in m.terms() {
            if c.depends_on(self.coord) || zb.map_or(false, |v| c.depends_on(v)) {
                return Err(DualityError::NotRepresentable(format!(
                    "{}: non-constant function {} along the circle has no T-dual",
                    what,
                    c.fmt_with(&|v| reg.var_name(v))
                )));
            }
            for &g in mono {
                let k = &reg.odd(g).kind;
                let on_circle = match k {
                    OddKind::Abstract(_) => false,
                    _ => k.coordinate() == Some(self.coord),
                };
                if on_circle || g == self.eps {
                    return Err(DualityError::NotRepresentable(format!("{}: leg {} outside the span of 1 and the circle leg", what, reg.odd(g).display)));
                }
            }
        }
        Ok(())
    }
}

/// Swap `eps <-> z Dz` on the circle factor; identity elsewhere.
pub fn t_dual(m: &Multivector, circle: &CircleFactorRep, direction: Direction) -> Result<Multivector, DualityError> {
    let reg = m.registry();
    let eps = Multivector::odd(reg, circle.eps);
    match direction {
        Direction::BtoA => {
            let (a, b) = circle.split_b(m);
            circle.check_transverse(&a, "B-side")?;
            if b.terms().any(|(_, c)| circle.laurent && c.den_depends_on(circle.coord)) {
                return Err(DualityError::NotRepresentable("bare circle leg without the factor z".into()));
            }
            circle.check_transverse(&b, "B-side")?;
            Ok(a.add(&eps.wedge(&b)))
        }
        Direction::AtoB => {
            let (a, b) = circle.split_a(m);
            circle.check_transverse(&a, "A-side")?;
            circle.check_transverse(&b, "A-side")?;
            Ok(a.add(&circle.leg(reg).wedge(&b)))
        }
    }
}
