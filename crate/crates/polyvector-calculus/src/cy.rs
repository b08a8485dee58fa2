use std::sync::Arc;

use graded_algebra::{GeneratorRegistry, Multivector, OddId, RatFunc, VarId};

use crate::CalculusError;

/// Ordered holomorphic coordinates of a B-factor. Defines
/// `Omega = dz_(1) ^ ... ^ dz_(d)` and `Omega^-1 = D_(1) ^ ... ^ D_(d)`.
/// A coordinate marked logarithmic carries the factor `1/z` (volume form `dz/z`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalabiYauOrdering {
    reg: Arc<GeneratorRegistry>,
    coords: Vec<VarId>,
    log: Vec<bool>,
}

impl CalabiYauOrdering {
    pub fn new(reg: &Arc<GeneratorRegistry>, names: &[&str]) -> Result<Self, CalculusError> {
        let mut coords = Vec::new();
        for n in names {
            let v = reg.var(n).ok_or_else(|| CalculusError::Unsupported(format!("unknown coordinate {}", n)))?;
            if reg.theta(v).is_none() {
                return Err(CalculusError::Unsupported(format!("{} is not a holomorphic coordinate", n)));
            }
            coords.push(v);
        }
        Ok(CalabiYauOrdering { reg: reg.clone(), log: vec![false; coords.len()], coords })
    }

    /// Mark `name` as a `C^*` coordinate with volume form `dz/z`.
    pub fn with_log(mut self, name: &str) -> Self {
        let v = self.reg.var(name).expect("coordinate");
        let k = self.coords.iter().position(|&c| c == v).expect("coordinate in ordering");
        self.log[k] = true;
        self
    }

    pub fn registry(&self) -> &Arc<GeneratorRegistry> {
        &self.reg
    }

    pub fn coords(&self) -> &[VarId] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_log(&self, k: usize) -> bool {
        self.log[k]
    }

    pub fn has_log(&self) -> bool {
        self.log.iter().any(|&b| b)
    }

    pub fn thetas(&self) -> Vec<OddId> {
        self.coords.iter().map(|&c| self.reg.theta(c).unwrap()).collect()
    }

    pub fn forms(&self) -> Vec<OddId> {
        self.coords.iter().map(|&c| self.reg.d_form(c).expect("holomorphic form leg")).collect()
    }

    pub fn contains_theta(&self, g: OddId) -> bool {
        self.thetas().contains(&g)
    }

    /// `Omega^-1` as a multivector (sign fixed by the ordering).
    pub fn omega_inv(&self) -> Multivector {
        Multivector::term(&self.reg, self.density().inv(), &self.thetas())
    }

    /// `Omega` as a multivector of holomorphic form legs.
    pub fn omega(&self) -> Multivector {
        Multivector::term(&self.reg, self.density(), &self.forms())
    }

    /// Coefficient of `dz_(1)^...^dz_(d)` in `Omega`.
    pub fn density(&self) -> RatFunc {
        let mut rho = RatFunc::one();
        for (k, &c) in self.coords.iter().enumerate() {
            if self.log[k] {
                rho = rho.div(&RatFunc::var(c));
            }
        }
        rho
    }

    /// Restrict to a sub-list of coordinates, in the given order.
    pub fn sub(&self, names: &[&str]) -> Result<Self, CalculusError> {
        let mut out = Self::new(&self.reg, names)?;
        for (k, &c) in out.coords.clone().iter().enumerate() {
            if let Some(p) = self.coords.iter().position(|&d| d == c) {
                out.log[k] = self.log[p];
            }
        }
        Ok(out)
    }
}
