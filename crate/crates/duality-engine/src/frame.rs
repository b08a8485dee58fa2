use std::collections::BTreeMap;
use std::sync::Arc;

use graded_algebra::multivector::merge_sign;
use graded_algebra::{GeneratorRegistry, Multivector, OddId};
use polyvector_calculus::CalabiYauOrdering;

use crate::tdual::CircleFactorRep;
use crate::DualityError;

/// Generators used by the duality maps: the M-theory circle direction `eM`,
/// the IIA circle direction `eps`, the circle coordinate and the plane `C^2`.
#[derive(Clone, Debug)]
pub struct DualityFrame {
    pub reg: Arc<GeneratorRegistry>,
    pub em: OddId,
    pub eps: OddId,
    pub circle: CircleFactorRep,
    pub plane: CalabiYauOrdering,
}

impl DualityFrame {
    pub fn new(reg: &Arc<GeneratorRegistry>, circle: &str, plane: [&str; 2], laurent: bool) -> Result<Self, DualityError> {
        let em = reg.abstract_odd("eM").ok_or_else(|| DualityError::MissingGenerator("eM".into()))?;
        let eps = reg.abstract_odd("eps").ok_or_else(|| DualityError::MissingGenerator("eps".into()))?;
        let circle = CircleFactorRep::new(reg, circle, "eps", laurent)?;
        let plane = CalabiYauOrdering::new(reg, &plane)?;
        Ok(DualityFrame { reg: reg.clone(), em, eps, circle, plane })
    }

    /// `eM`, `eps`, circle `z` and plane `w1, w2`.
    pub fn standard(reg: &Arc<GeneratorRegistry>, laurent: bool) -> Result<Self, DualityError> {
        Self::new(reg, "z", ["w1", "w2"], laurent)
    }

    /// Ordering `(z, w1, w2)` of the three-fold, logarithmic in `z` when the
    /// circle is Laurent.
    pub fn threefold(&self) -> Result<CalabiYauOrdering, DualityError> {
        let names = [self.reg.var_name(self.circle.coord), self.reg.var_name(self.plane.coords()[0]), self.reg.var_name(self.plane.coords()[1])];
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let mut cy = CalabiYauOrdering::new(&self.reg, &refs)?;
        if self.circle.laurent {
            cy = cy.with_log(&names[0]);
        }
        Ok(cy)
    }
}

/// `m = sum_L L ^ m_L`, with `L` the legs outside `inner` (in canonical order)
/// and `m_L` carrying only `inner` legs.
pub fn by_spectators(m: &Multivector, inner: &[OddId]) -> BTreeMap<Vec<OddId>, Multivector> {
    let reg = m.registry();
    let mut out: BTreeMap<Vec<OddId>, Multivector> = BTreeMap::new();
    for (mono, c) in m.terms() {
        let (outer, own): (Vec<OddId>, Vec<OddId>) = mono.iter().partition(|g| !inner.contains(g));
        let (_, sign) = merge_sign(&outer, &own).expect("distinct legs");
        let coeff = if sign < 0 { c.neg() } else { c.clone() };
        let slot = out.entry(outer).or_insert_with(|| Multivector::zero(reg));
        *slot = slot.add(&Multivector::term(reg, coeff, &own));
    }
    out
}

/// Reassemble `sum_L L ^ m_L`.
pub fn from_spectators(reg: &Arc<GeneratorRegistry>, parts: &BTreeMap<Vec<OddId>, Multivector>) -> Multivector {
    let mut out = Multivector::zero(reg);
    for (legs, part) in parts {
        out = out.add(&Multivector::term(reg, graded_algebra::RatFunc::one(), legs).wedge(part));
    }
    out
}
