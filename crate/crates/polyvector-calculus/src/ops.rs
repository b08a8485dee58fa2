use graded_algebra::{Multivector, OddId, OddKind, RatFunc};

use crate::cy::CalabiYauOrdering;
use crate::CalculusError;

/// `dbar = sum_i dz~_i ^ d/dz~_i` over every coordinate with a `dz~` leg.
pub fn dolbeault(m: &Multivector) -> Multivector {
    let reg = m.registry();
    let mut out = Multivector::zero(reg);
    for z in reg.holomorphic_coords() {
        let (Some(zb), Some(leg)) = (reg.conjugate(z), reg.dbar_form(z)) else { continue };
        let d = m.even_derivative(zb);
        if !d.is_zero() {
            out = out.add(&Multivector::odd(reg, leg).wedge(&d));
        }
    }
    out
}

/// Holomorphic de Rham differential `sum_i dz_i ^ d/dz_i` on form legs.
pub fn de_rham_holomorphic(m: &Multivector, cy: &CalabiYauOrdering) -> Multivector {
    let reg = m.registry();
    let mut out = Multivector::zero(reg);
    for (&z, dz) in cy.coords().iter().zip(cy.forms()) {
        let d = m.even_derivative(z);
        if !d.is_zero() {
            out = out.add(&Multivector::odd(reg, dz).wedge(&d));
        }
    }
    out
}

fn check_legs(m: &Multivector, cy: &CalabiYauOrdering) -> Result<(), CalculusError> {
    let reg = m.registry();
    let thetas = cy.thetas();
    for (mono, _) in m.terms() {
        for &g in mono {
            if matches!(reg.odd(g).kind, OddKind::PolyvectorDir(_)) && !thetas.contains(&g) {
                return Err(CalculusError::ForeignPolyvectorLeg(reg.odd(g).display.clone()));
            }
        }
    }
    Ok(())
}

/// Divergence `sum_i d/dz_i (d/dtheta_i m)`; on a logarithmic coordinate the
/// density `1/z` contributes `-(1/z) d/dtheta_z m`.
pub fn divergence(m: &Multivector, cy: &CalabiYauOrdering) -> Result<Multivector, CalculusError> {
    check_legs(m, cy)?;
    let reg = m.registry();
    let mut out = Multivector::zero(reg);
    for (k, (&z, th)) in cy.coords().iter().zip(cy.thetas()).enumerate() {
        let x = m.odd_derivation(th);
        if x.is_zero() {
            continue;
        }
        out = out.add(&x.even_derivative(z));
        if cy.is_log(k) {
            out = out.sub(&x.scale_rat(&RatFunc::var(z).inv()));
        }
    }
    Ok(out)
}

/// `[a, b] = div(ab) - div(a) b - (-1)^|a| a div(b)`, with `|a|` the total odd degree.
pub fn sn_bracket(a: &Multivector, b: &Multivector, cy: &CalabiYauOrdering) -> Result<Multivector, CalculusError> {
    if a.is_zero() || b.is_zero() {
        return Ok(Multivector::zero(a.registry()));
    }
    let deg = a.total_degree().ok_or(CalculusError::Inhomogeneous)?;
    let ab = a.wedge(b);
    let t1 = divergence(&ab, cy)?;
    let t2 = divergence(a, cy)?.wedge(b);
    let t3 = a.wedge(&divergence(b, cy)?);
    let t3 = if deg % 2 == 1 { t3.neg() } else { t3 };
    Ok(t1.sub(&t2).sub(&t3))
}

/// `[[pi, f], g]`.
pub fn poisson_bracket(f: &Multivector, g: &Multivector, pi: &Multivector, cy: &CalabiYauOrdering) -> Result<Multivector, CalculusError> {
    let pf = sn_bracket(pi, f, cy)?;
    sn_bracket(&pf, g, cy)
}

/// Move the legs selected by `pick` to the right end, keeping their relative order.
/// Returns `(sign, rest, picked)`.
fn split_legs(mono: &[OddId], pick: impl Fn(OddId) -> bool) -> (i32, Vec<OddId>, Vec<OddId>) {
    let mut sign = 1;
    let mut rest = Vec::new();
    let mut picked = Vec::new();
    for &g in mono {
        if pick(g) {
            picked.push(g);
        } else {
            if picked.len() % 2 == 1 {
                sign = -sign;
            }
            rest.push(g);
        }
    }
    (sign, rest, picked)
}

/// `theta_S v Omega`, computed as `d/d(dz_sk) ... d/d(dz_s1) Omega` for `S` in Calabi-Yau order.
fn contract_monomial(picked: &[OddId], cy: &CalabiYauOrdering) -> Multivector {
    let thetas = cy.thetas();
    let forms = cy.forms();
    let mut omega = cy.omega();
    for &g in picked {
        let k = thetas.iter().position(|&t| t == g).unwrap();
        omega = omega.odd_derivation(forms[k]);
    }
    omega
}

/// `mu v Omega`: write each term as `rest ^ theta_S` and contract `theta_S` into `Omega`.
pub fn contract_with_cy(m: &Multivector, cy: &CalabiYauOrdering) -> Multivector {
    let reg = m.registry();
    let thetas = cy.thetas();
    let mut out = Multivector::zero(reg);
    for (mono, c) in m.terms() {
        let (sign, rest, picked) = split_legs(mono, |g| thetas.contains(&g));
        let mut ordered = picked.clone();
        ordered.sort_by_key(|g| thetas.iter().position(|t| t == g));
        let perm = parity(&picked, &ordered);
        let form = contract_monomial(&ordered, cy);
        let coeff = if sign * perm < 0 { c.neg() } else { c.clone() };
        out = out.add(&Multivector::term(reg, coeff, &rest).wedge(&form));
    }
    out
}

fn parity(from: &[OddId], to: &[OddId]) -> i32 {
    let idx: Vec<usize> = from.iter().map(|g| to.iter().position(|t| t == g).unwrap()).collect();
    let mut sign = 1;
    for i in 0..idx.len() {
        for j in i + 1..idx.len() {
            if idx[i] > idx[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Inverse of [`contract_with_cy`].
pub fn uncontract_with_cy(m: &Multivector, cy: &CalabiYauOrdering) -> Multivector {
    let reg = m.registry();
    let forms = cy.forms();
    let thetas = cy.thetas();
    let mut out = Multivector::zero(reg);
    for (mono, c) in m.terms() {
        let (sign, rest, picked) = split_legs(mono, |g| forms.contains(&g));
        let complement: Vec<OddId> =
            thetas.iter().zip(&forms).filter(|(_, f)| !picked.contains(f)).map(|(t, _)| *t).collect();
        // theta_complement v Omega = k * dz_picked for a nonzero coefficient k.
        let image = contract_monomial(&complement, cy);
        let k = image.coefficient(&picked);
        assert!(!k.is_zero(), "contraction is invertible");
        let coeff = c.div(&k);
        let coeff = if sign < 0 { coeff.neg() } else { coeff };
        out = out.add(&Multivector::term(reg, coeff, &rest).wedge(&Multivector::term(reg, RatFunc::one(), &complement)));
    }
    out
}

fn constant_bivector_terms(pi: &Multivector) -> Result<Vec<(OddId, OddId, RatFunc)>, CalculusError> {
    let reg = pi.registry();
    let mut out = Vec::new();
    for (mono, c) in pi.terms() {
        let polyvector = mono.iter().all(|&g| matches!(reg.odd(g).kind, OddKind::PolyvectorDir(_)));
        if mono.len() != 2 || !polyvector || c.as_constant().is_none() {
            return Err(CalculusError::NotConstantBivector);
        }
        out.push((mono[0], mono[1], c.clone()));
    }
    Ok(out)
}

/// Contraction of holomorphic form legs with a constant bivector:
/// `iota_{theta_a theta_b} = d/d(dz_b) . d/d(dz_a)`.
pub fn iota_pi(m: &Multivector, pi: &Multivector) -> Result<Multivector, CalculusError> {
    let reg = m.registry();
    let mut out = Multivector::zero(reg);
    for (a, b, c) in constant_bivector_terms(pi)? {
        let coord = |g: OddId| reg.odd(g).kind.coordinate().unwrap();
        let (fa, fb) = (reg.d_form(coord(a)).unwrap(), reg.d_form(coord(b)).unwrap());
        out = out.add(&m.odd_derivation(fa).odd_derivation(fb).scale_rat(&c));
    }
    Ok(out)
}

/// `dbar m + [pi, m]` for a constant square-zero bivector `pi`.
pub fn twisted_differential(m: &Multivector, pi: &Multivector, cy: &CalabiYauOrdering) -> Result<Multivector, CalculusError> {
    constant_bivector_terms(pi)?;
    if !sn_bracket(pi, pi, cy)?.is_zero() {
        return Err(CalculusError::NotSquareZero);
    }
    Ok(dolbeault(m).add(&sn_bracket(pi, m, cy)?))
}

/// `mu -> Omega(mu, -)` on a two-dimensional ordering `(x1, x2)` with
/// `Omega = dx1 ^ dx2`: the leg map `D_x1 -> -dx2`, `D_x2 -> dx1`, extended multiplicatively.
pub fn omega_flat(m: &Multivector, cy: &CalabiYauOrdering) -> Result<Multivector, CalculusError> {
    let (thetas, forms) = symplectic_legs(cy)?;
    let images = [Multivector::odd(cy.registry(), forms[1]).neg(), Multivector::odd(cy.registry(), forms[0])];
    Ok(substitute_legs(m, &thetas, &images))
}

/// Inverse of [`omega_flat`]: `dx1 -> D_x2`, `dx2 -> -D_x1`.
pub fn omega_sharp(m: &Multivector, cy: &CalabiYauOrdering) -> Result<Multivector, CalculusError> {
    let (thetas, forms) = symplectic_legs(cy)?;
    let images = [Multivector::odd(cy.registry(), thetas[1]), Multivector::odd(cy.registry(), thetas[0]).neg()];
    Ok(substitute_legs(m, &forms, &images))
}

fn symplectic_legs(cy: &CalabiYauOrdering) -> Result<(Vec<OddId>, Vec<OddId>), CalculusError> {
    if cy.dim() != 2 || cy.has_log() {
        return Err(CalculusError::Unsupported("symplectic identification needs a flat two-dimensional ordering".into()));
    }
    Ok((cy.thetas(), cy.forms()))
}

/// Algebra map replacing each leg `from[k]` by `images[k]`, other legs fixed.
fn substitute_legs(m: &Multivector, from: &[OddId], images: &[Multivector]) -> Multivector {
    m.substitute_odd(|g| from.iter().position(|&f| f == g).map(|k| images[k].clone()))
}

/// Classical Schouten bracket for pure vector fields and functions:
/// `[X, f] = X(f)`, `[f, X] = -X(f)`, `[X, Y]` the Lie bracket, `[f, g] = 0`.
/// Returns `None` outside that range.
pub fn schouten_oracle(a: &Multivector, b: &Multivector, cy: &CalabiYauOrdering) -> Option<Multivector> {
    let reg = a.registry();
    let thetas = cy.thetas();
    let split = |m: &Multivector| -> Option<(Option<RatFunc>, Vec<RatFunc>)> {
        let mut f = None;
        let mut comps = vec![RatFunc::zero(); thetas.len()];
        let mut is_vector = false;
        for (mono, c) in m.terms() {
            match mono.as_slice() {
                [] => f = Some(c.clone()),
                [g] if thetas.contains(g) => {
                    is_vector = true;
                    comps[thetas.iter().position(|t| t == g).unwrap()] = c.clone();
                }
                _ => return None,
            }
        }
        if f.is_some() && is_vector {
            return None;
        }
        Some((if is_vector { None } else { Some(f.unwrap_or_else(RatFunc::zero)) }, comps))
    };
    let apply = |x: &[RatFunc], f: &RatFunc| -> RatFunc {
        x.iter().zip(cy.coords()).fold(RatFunc::zero(), |acc, (xi, &z)| acc.add(&xi.mul(&f.derivative(z))))
    };
    let (fa, xa) = split(a)?;
    let (fb, xb) = split(b)?;
    Some(match (fa, fb) {
        (Some(_), Some(_)) => Multivector::zero(reg),
        (None, Some(f)) => Multivector::scalar(reg, apply(&xa, &f)),
        (Some(f), None) => Multivector::scalar(reg, apply(&xb, &f).neg()),
        (None, None) => {
            let mut out = Multivector::zero(reg);
            for (j, &th) in thetas.iter().enumerate() {
                let c = apply(&xa, &xb[j]).sub(&apply(&xb, &xa[j]));
                out = out.add(&Multivector::term(reg, c, &[th]));
            }
            out
        }
    })
}
