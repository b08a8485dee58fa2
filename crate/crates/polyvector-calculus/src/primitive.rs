use std::collections::BTreeMap;

use graded_algebra::{Monomial, Multivector, OddId, Poly, RatFunc, Scalar};

use crate::cy::CalabiYauOrdering;
use crate::ops::divergence;
use crate::CalculusError;

/// Solve `div(F ^ Omega^-1) = mu` for `mu` of degree `d - 1` in the Calabi-Yau
/// legs (other legs ride along). Returns the primitive with no constant term in
/// the Calabi-Yau coordinates.
pub fn top_primitive(mu: &Multivector, cy: &CalabiYauOrdering) -> Result<Multivector, CalculusError> {
    let reg = mu.registry();
    let thetas = cy.thetas();
    let d = cy.dim();
    for (mono, _) in mu.terms() {
        if mono.iter().filter(|g| thetas.contains(g)).count() + 1 != d {
            return Err(CalculusError::WrongDegree { expected: d - 1 });
        }
    }
    let dm = divergence(mu, cy)?;
    if !dm.is_zero() {
        return Err(CalculusError::NotClosed(dm.to_text()));
    }
    let omega_inv = cy.omega_inv();
    let mut spectators: BTreeMap<Vec<OddId>, ()> = BTreeMap::new();
    for (mono, _) in mu.terms() {
        spectators.insert(mono.iter().copied().filter(|g| !thetas.contains(g)).collect(), ());
    }
    let mut f_total = Multivector::zero(reg);
    for legs in spectators.keys() {
        let base = Multivector::term(reg, RatFunc::one(), legs).wedge(&omega_inv);
        let base_div = divergence(&base, cy)?;
        let mut grad = Vec::with_capacity(d);
        for &z in cy.coords() {
            let zi = Multivector::var(reg, z);
            let e = divergence(&zi.wedge(&base), cy)?.sub(&zi.wedge(&base_div));
            let (mono, k) = e.terms().next().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero gradient image");
            grad.push(mu.coefficient(&mono).div(&k));
        }
        let f = integrate(&grad, cy)?;
        f_total = f_total.add(&Multivector::term(reg, f, legs));
    }
    let check = divergence(&f_total.wedge(&omega_inv), cy)?;
    if check != *mu {
        return Err(CalculusError::NotClosed(check.sub(mu).to_text()));
    }
    Ok(f_total)
}

/// `F = sum_i int_0^1 x_i g_i(t x) dt` on polynomials in the ordering's coordinates.
fn integrate(grad: &[RatFunc], cy: &CalabiYauOrdering) -> Result<RatFunc, CalculusError> {
    let coords = cy.coords();
    let mut out = RatFunc::zero();
    for (i, g) in grad.iter().enumerate() {
        let parts = g.split_by_vars(coords).ok_or(CalculusError::NotPolynomial)?;
        for (m, c) in parts {
            let weight = Scalar::from_ratio(1, m.degree() as i64 + 1);
            let bumped = m.mul(&Monomial::var(coords[i]));
            let t = RatFunc::from_poly(Poly::monomial(bumped, weight)).mul(&c);
            out = out.add(&t);
        }
    }
    Ok(out)
}
