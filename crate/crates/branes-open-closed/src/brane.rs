use std::sync::Arc;

use field_spaces::{BackgroundDescriptor, Factor};
use graded_algebra::{GeneratorRegistry, OddId, VarId};

use crate::BraneError;

/// `N` coinciding flat branes along the complement of `locus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraneSpec {
    pub background: BackgroundDescriptor,
    pub locus: Vec<String>,
    pub count: u32,
}

impl BraneSpec {
    pub fn new(background: BackgroundDescriptor, locus: &[&str], count: u32) -> Result<Self, BraneError> {
        if count == 0 {
            return Err(BraneError::Count);
        }
        let a = background.a_names();
        let b: Vec<String> = background.b_coords().into_iter().map(|(c, _)| c).collect();
        for l in locus {
            if !a.iter().any(|n| n == l) && !b.iter().any(|n| n == l) {
                return Err(BraneError::UnknownCoordinate(l.to_string()));
            }
        }
        if background.factors().iter().any(|f| matches!(f, Factor::B { log, .. } if log.iter().any(|&x| x))) {
            return Err(BraneError::Unsupported("branes on C^* factors".into()));
        }
        Ok(BraneSpec { background, locus: locus.iter().map(|s| s.to_string()).collect(), count })
    }

    /// D3 along `R^2 x C_z` inside `C^5_{u,v,z,w1,w2}`: normal to `v, w1, w2`.
    pub fn d3_flat_c5() -> Self {
        Self::new(BackgroundDescriptor::flat_c5(), &["v", "w1", "w2"], 1).unwrap()
    }

    /// D3 along `R^2 x C_z` inside `R^4_A x C^3_B`.
    pub fn d3() -> Self {
        Self::new(BackgroundDescriptor::standard(), &["t3", "t4", "w1", "w2"], 1).unwrap()
    }

    /// D5 along `R^2 x C^2_{z,w1}` inside `R^4_A x C^3_B`.
    pub fn d5() -> Self {
        Self::new(BackgroundDescriptor::standard(), &["t3", "t4", "w2"], 1).unwrap()
    }

    pub fn registry(&self) -> Arc<GeneratorRegistry> {
        self.background.registry()
    }

    fn b_names(&self) -> Vec<String> {
        self.background.b_coords().into_iter().map(|(c, _)| c).collect()
    }

    /// Holomorphic B-coordinates set to zero, in background order.
    pub fn normal_b(&self) -> Vec<String> {
        self.b_names().into_iter().filter(|c| self.locus.contains(c)).collect()
    }

    /// Holomorphic B-coordinates along the brane, in background order.
    pub fn wrapped_b(&self) -> Vec<String> {
        self.b_names().into_iter().filter(|c| !self.locus.contains(c)).collect()
    }

    pub fn b_codimension(&self) -> usize {
        self.normal_b().len()
    }

    /// Odd world-volume parameter paired with each normal coordinate: `w<k> -> e<k>`
    /// when that generator exists, otherwise the next unused `e1, e2`.
    pub fn odd_parameters(&self, reg: &GeneratorRegistry) -> Result<Vec<(VarId, OddId)>, BraneError> {
        let pool = ["e1", "e2"];
        let mut used: Vec<&str> = Vec::new();
        let mut pending = Vec::new();
        let mut out = Vec::new();
        for n in self.normal_b() {
            let v = reg.var(&n).ok_or_else(|| BraneError::UnknownCoordinate(n.clone()))?;
            let digit = n.chars().last().filter(|c| c.is_ascii_digit()).map(|c| format!("e{}", c));
            match digit.as_deref().and_then(|d| pool.iter().find(|p| **p == d && !used.contains(p))) {
                Some(p) => {
                    used.push(p);
                    out.push((v, *p));
                }
                None => pending.push((v, n)),
            }
        }
        for (v, n) in pending {
            let p = pool.iter().find(|p| !used.contains(p)).ok_or(BraneError::NoOddParameter(n))?;
            used.push(p);
            out.push((v, *p));
        }
        out.into_iter()
            .map(|(v, p)| reg.abstract_odd(p).map(|g| (v, g)).ok_or_else(|| BraneError::NoOddParameter(p.to_string())))
            .collect()
    }
}
