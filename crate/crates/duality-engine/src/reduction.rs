use graded_algebra::{Multivector, OddId};
use field_spaces::split_top_degree;
use polyvector_calculus::{dolbeault, sn_bracket, top_primitive};

use crate::frame::{by_spectators, from_spectators, DualityFrame};
use crate::DualityError;

fn plane_degree(mono: &[OddId], frame: &DualityFrame) -> usize {
    mono.iter().filter(|g| frame.plane.contains_theta(**g)).count()
}

/// `f -> (d(f' Omega^-1), c Omega^-1)` summed, for `f = c + f'` with legs already stripped.
fn phi_function(f: &Multivector, frame: &DualityFrame) -> Result<Multivector, DualityError> {
    let (image, kernel) = split_top_degree(&f.wedge(&frame.plane.omega_inv()), &frame.plane)?;
    Ok(image.add(&kernel))
}

/// The reduction along the M-theory circle: `a ^ eM -> a`, and a form `a`
/// without `eM` goes to `d(a' Omega^-1) + c Omega^-1` (legs of `a` ride along
/// on the left).
pub fn reduce_m(m: &Multivector, frame: &DualityFrame) -> Result<Multivector, DualityError> {
    let reg = m.registry();
    for (mono, _) in m.terms() {
        if plane_degree(mono, frame) > 0 {
            return Err(DualityError::OutOfDomain(format!("{} carries polyvector legs on the plane", m)));
        }
    }
    let with = m.filter(|mono| mono.contains(&frame.em));
    let left = with.odd_derivation(frame.em);
    let odd = left.filter(|mono| mono.len() % 2 == 1);
    let x = left.sub(&odd).sub(&odd);
    let y = m.sub(&with);
    let mut parts = by_spectators(&y, &frame.plane.thetas());
    for part in parts.values_mut() {
        *part = phi_function(part, frame)?;
    }
    Ok(x.add(&from_spectators(reg, &parts)))
}

/// Inverse of [`reduce_m`]: degree 0 on the plane gets `eM` on the right, degree 1 goes to
/// its primitive with zero constant term, a constant top bivector to its coefficient.
pub fn reduce_m_inverse(m: &Multivector, frame: &DualityFrame) -> Result<Multivector, DualityError> {
    let reg = m.registry();
    if m.terms().any(|(mono, _)| mono.contains(&frame.em)) {
        return Err(DualityError::OutOfDomain(format!("{} already carries eM", m)));
    }
    let em = Multivector::odd(reg, frame.em);
    let thetas = frame.plane.thetas();
    let coords = frame.plane.coords();
    let mut out = Multivector::zero(reg);
    for (legs, part) in by_spectators(m, &thetas) {
        let spectator = Multivector::term(reg, graded_algebra::RatFunc::one(), &legs);
        for k in 0..=2 {
            let piece = part.filter(|mono| mono.len() == k);
            if piece.is_zero() {
                continue;
            }
            let pre = match k {
                0 => spectator.wedge(&piece).wedge(&em),
                1 => spectator.wedge(&top_primitive(&piece, &frame.plane)?),
                _ => {
                    let c = piece.coefficient(&thetas).div(&frame.plane.density().inv());
                    let split = c.split_by_vars(coords).ok_or(DualityError::Calculus(polyvector_calculus::CalculusError::NotPolynomial))?;
                    if split.iter().any(|(mon, _)| !mon.is_one()) {
                        return Err(DualityError::OutOfDomain(format!("top component {} is not divergence-free", piece)));
                    }
                    spectator.scale_rat(&c)
                }
            };
            out = out.add(&pre);
        }
    }
    Ok(out)
}

/// `eM -> -eps`, `eps -> eM`, identity on every other generator.
pub fn s_generator(m: &Multivector, frame: &DualityFrame) -> Multivector {
    let reg = m.registry();
    m.substitute_odd(|g| {
        if g == frame.em {
            Some(Multivector::odd(reg, frame.eps).neg())
        } else if g == frame.eps {
            Some(Multivector::odd(reg, frame.em))
        } else {
            None
        }
    })
}

/// Differential of the eleven-dimensional complex on the plane factor.
pub fn ell1(m: &Multivector) -> Multivector {
    dolbeault(m)
}

/// Poisson bracket of the eleven-dimensional complex:
/// `d_w1 x ^ d_w2 y - d_w2 x ^ d_w1 y`.
pub fn ell2(x: &Multivector, y: &Multivector, frame: &DualityFrame) -> Multivector {
    let (u, v) = (frame.plane.coords()[0], frame.plane.coords()[1]);
    x.even_derivative(u).wedge(&y.even_derivative(v)).sub(&x.even_derivative(v).wedge(&y.even_derivative(u)))
}

/// Schouten-Nijenhuis bracket on the plane, summed over the homogeneous parts of `a`.
pub fn reduced_bracket(a: &Multivector, b: &Multivector, frame: &DualityFrame) -> Result<Multivector, DualityError> {
    let mut out = Multivector::zero(a.registry());
    for k in 0..=a.registry().odd_gens().len() {
        let part = a.degree_part(k);
        if !part.is_zero() {
            out = out.add(&sn_bracket(&part, b, &frame.plane)?);
        }
    }
    Ok(out)
}

/// `reduce_m(ell2(x, y)) - (-1)^|x| [reduce_m x, reduce_m y]` predicted from the
/// plane-constant parts: `X_a ^ c_b` for `(a eM, b)`, `(-1)^((|a|+1)(|b|+1)) X_a ^ c_b`
/// for `(b, a eM)` and `const{a, b} Omega^-1` for `(a, b)`, with `X_a = d(a Omega^-1)`.
pub fn bracket_defect(x: &Multivector, y: &Multivector, frame: &DualityFrame) -> Result<Multivector, DualityError> {
    let reg = x.registry();
    let top = reg.odd_gens().len();
    let strip = |m: &Multivector| m.filter(|mono| !mono.contains(&frame.em));
    let hamiltonian = |a: &Multivector| -> Result<Multivector, DualityError> {
        let image = reduce_m(a, frame)?;
        Ok(image.filter(|mono| plane_degree(mono, frame) < 2))
    };
    let (x0, y0) = (strip(x), strip(y));
    let (xe, ye) = (reduce_m(&x.sub(&x0), frame)?, reduce_m(&y.sub(&y0), frame)?);
    let (cx, _) = plane_constant(&x0, frame)?;
    let (cy, _) = plane_constant(&y0, frame)?;
    let mut out = hamiltonian(&xe)?.wedge(&cy);
    for j in 0..=top {
        let a = ye.degree_part(j);
        if a.is_zero() {
            continue;
        }
        let ham = hamiltonian(&a)?;
        for k in 0..=top {
            let c = cx.degree_part(k);
            if !c.is_zero() {
                let term = ham.wedge(&c);
                out = if ((j + 1) * (k + 1)) % 2 == 1 { out.sub(&term) } else { out.add(&term) };
            }
        }
    }
    let bracket = reduce_m(&ell2(&x0, &y0, frame), frame)?;
    Ok(out.add(&bracket.filter(|mono| plane_degree(mono, frame) == 2)))
}

/// `f = c + f'` with `c` independent of the plane coordinates.
fn plane_constant(f: &Multivector, frame: &DualityFrame) -> Result<(Multivector, Multivector), DualityError> {
    let reg = f.registry();
    let mut c = Multivector::zero(reg);
    for (mono, coeff) in f.terms() {
        let parts = coeff.split_by_vars(frame.plane.coords()).ok_or(polyvector_calculus::CalculusError::NotPolynomial)?;
        for (mon, k) in parts {
            if mon.is_one() {
                c = c.add(&Multivector::term(reg, k, mono));
            }
        }
    }
    Ok((c.clone(), f.sub(&c)))
}
