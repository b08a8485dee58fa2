#![allow(dead_code)]

use std::sync::Arc;

use graded_algebra::{GeneratorRegistry, Monomial, Multivector, OddId, Poly, RatFunc, Scalar, VarId};
use proptest::prelude::*;

/// Coefficient: up to three monomials of degree at most two in `vars`.
pub fn poly(vars: Vec<VarId>) -> impl Strategy<Value = Poly> {
    let n = vars.len();
    prop::collection::vec((-3i64..=3, prop::collection::vec((0..n, 0u32..=2), 0..=2)), 1..=3).prop_map(move |terms| {
        let mut p = Poly::zero();
        for (c, exps) in terms {
            let m = Monomial::from_pairs(exps.into_iter().map(|(i, e)| (vars[i], e)).collect());
            p.add_term(m, Scalar::from_int(c));
        }
        p
    })
}

/// Sum of up to `max_terms` terms with legs drawn from `pool`; `degree` pins the leg count.
pub fn multivector(
    reg: Arc<GeneratorRegistry>,
    vars: Vec<VarId>,
    pool: Vec<OddId>,
    degree: Option<usize>,
    max_terms: usize,
) -> impl Strategy<Value = Multivector> {
    let n = pool.len();
    let legs = match degree {
        Some(k) => prop::sample::subsequence((0..n).collect::<Vec<_>>(), k.min(n)).boxed(),
        None => prop::sample::subsequence((0..n).collect::<Vec<_>>(), 0..=n.min(4)).boxed(),
    };
    prop::collection::vec((poly(vars), legs, any::<bool>()), 1..=max_terms).prop_map(move |terms| {
        let mut out = Multivector::zero(&reg);
        for (p, idx, flip) in terms {
            let mut seq: Vec<OddId> = idx.into_iter().map(|i| pool[i]).collect();
            if flip && seq.len() > 1 {
                seq.swap(0, 1);
            }
            out = out.add(&Multivector::term(&reg, RatFunc::from_poly(p), &seq));
        }
        out
    })
}

/// Named access to a background registry.
pub struct Ctx {
    pub reg: Arc<GeneratorRegistry>,
}

impl Ctx {
    pub fn new(reg: Arc<GeneratorRegistry>) -> Self {
        Ctx { reg }
    }

    pub fn x(&self, name: &str) -> Multivector {
        Multivector::var(&self.reg, self.reg.var(name).expect("variable"))
    }

    pub fn v(&self, name: &str) -> VarId {
        self.reg.var(name).expect("variable")
    }

    pub fn odd(&self, name: &str) -> Multivector {
        Multivector::odd(&self.reg, self.g(name))
    }

    pub fn g(&self, name: &str) -> OddId {
        self.reg.odd_by_name(name).expect("odd generator")
    }

    pub fn n(&self, k: i64) -> Multivector {
        Multivector::constant(&self.reg, Scalar::from_int(k))
    }
}
