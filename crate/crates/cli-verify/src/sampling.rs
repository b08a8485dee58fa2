//! Seeded random inputs for the property checks.

use std::sync::Arc;

use graded_algebra::{GeneratorRegistry, Monomial, Multivector, OddId, Poly, RatFunc, Scalar, VarId};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64, stream: u64) -> Rng8 {
    use rand::SeedableRng;
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Up to `terms` monomials with total degree at most `max_degree` and integer
/// coefficients in `[-3, 3]`.
pub fn poly(rng: &mut Rng8, vars: &[VarId], max_degree: u32, terms: usize) -> Poly {
    let mut p = Poly::zero();
    for _ in 0..rng.gen_range(1..=terms) {
        let budget = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; vars.len()];
        for _ in 0..budget {
            if !vars.is_empty() {
                exps[rng.gen_range(0..vars.len())] += 1;
            }
        }
        let m = Monomial::from_pairs(vars.iter().copied().zip(exps).collect());
        p.add_term(m, Scalar::from_int(rng.gen_range(-3..=3)));
    }
    p
}

/// Gaussian-rational scalar with small numerators and denominators.
pub fn scalar(rng: &mut Rng8) -> Scalar {
    let re = (rng.gen_range(-5..=5), rng.gen_range(1..=4));
    if rng.gen_bool(0.3) {
        Scalar::gaussian(re, (rng.gen_range(-3..=3), rng.gen_range(1..=3)))
    } else {
        Scalar::from_ratio(re.0, re.1)
    }
}

/// Sum of up to `max_terms` terms with polynomial coefficients of degree at most
/// two and legs from `pool`; `degree` pins the number of legs.
pub fn multivector(rng: &mut Rng8, reg: &Arc<GeneratorRegistry>, vars: &[VarId], pool: &[OddId], degree: Option<usize>, max_terms: usize) -> Multivector {
    let mut out = Multivector::zero(reg);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let k = degree.unwrap_or_else(|| rng.gen_range(0..=pool.len().min(4))).min(pool.len());
        let legs: Vec<OddId> = pool.choose_multiple(rng, k).copied().collect();
        let c = poly(rng, vars, 2, 3);
        out = out.add(&Multivector::term(reg, RatFunc::from_poly(c), &legs));
    }
    out
}

/// A normalized multivector exercising every printed form: Gaussian scalars,
/// polynomial and rational coefficients, and legs of every kind.
pub fn printable(rng: &mut Rng8, reg: &Arc<GeneratorRegistry>) -> Multivector {
    let vars: Vec<VarId> = reg.even_vars().iter().map(|e| e.id).collect();
    let pool: Vec<OddId> = reg.odd_gens().iter().map(|g| g.id).collect();
    let mut out = Multivector::zero(reg);
    for _ in 0..rng.gen_range(0..=4) {
        let k = rng.gen_range(0..=3);
        let legs: Vec<OddId> = pool.choose_multiple(rng, k).copied().collect();
        let mut num = Poly::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let mut exps = Vec::new();
            for _ in 0..rng.gen_range(0..=3) {
                exps.push((*vars.choose(rng).unwrap(), rng.gen_range(1..=3)));
            }
            num.add_term(Monomial::from_pairs(exps), scalar(rng));
        }
        let mut c = RatFunc::from_poly(num);
        if rng.gen_bool(0.3) {
            let den = poly(rng, &vars, 2, 2);
            if !den.is_zero() {
                c = c.mul(&RatFunc::from_poly(den).inv());
            }
        }
        out = out.add(&Multivector::term(reg, c, &legs));
    }
    out
}

pub fn pick<'a, T>(rng: &mut Rng8, items: &'a [T]) -> &'a T {
    items.choose(rng).expect("nonempty")
}
