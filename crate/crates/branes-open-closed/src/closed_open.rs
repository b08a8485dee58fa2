use graded_algebra::{Multivector, OddKind};

use crate::brane::BraneSpec;
use crate::superdiff::{Letter, SuperDiffOp};
use crate::BraneError;

/// Fourier transform along the normal directions: `w_i -> d/de_i`, `D_w_i -> e_i`,
/// and `z -> z`, `D_z -> d/dz` along the brane. Each term is rewritten with its
/// factors in normal order using the Koszul signs of the polyvector side, then
/// read letter by letter.
pub fn closed_open(m: &Multivector, brane: &BraneSpec) -> Result<SuperDiffOp, BraneError> {
    let reg = m.registry();
    let params = brane.odd_parameters(reg)?;
    let mut wrapped = Vec::new();
    for n in brane.wrapped_b() {
        wrapped.push(reg.var(&n).ok_or_else(|| BraneError::UnknownCoordinate(n.clone()))?);
    }
    let image_of_var = |v| {
        if wrapped.contains(&v) {
            Some(Letter::Even(v))
        } else {
            params.iter().find(|p| p.0 == v).map(|p| Letter::DOdd(p.1))
        }
    };
    let mut out = SuperDiffOp::zero(reg);
    for (mono, coeff) in m.terms() {
        let p = coeff.as_poly().ok_or_else(|| BraneError::NotHolomorphic(format!("rational coefficient {}", m)))?;
        let mut odd_images = Vec::new();
        for &g in mono {
            let letter = match reg.odd(g).kind {
                OddKind::PolyvectorDir(v) if wrapped.contains(&v) => Letter::DEven(v),
                OddKind::PolyvectorDir(v) => match params.iter().find(|p| p.0 == v) {
                    Some(p) => Letter::Odd(p.1),
                    None => return Err(BraneError::NotHolomorphic(format!("leg {}", reg.odd(g).display))),
                },
                _ => return Err(BraneError::NotHolomorphic(format!("non-polyvector leg {}", reg.odd(g).display))),
            };
            odd_images.push(letter);
        }
        let mut inversions = 0;
        for i in 0..odd_images.len() {
            for j in i + 1..odd_images.len() {
                if odd_images[i] > odd_images[j] {
                    inversions += 1;
                }
            }
        }
        for (mon, c) in p.terms() {
            let mut letters = odd_images.clone();
            for &(v, e) in mon.pairs() {
                let l = image_of_var(v).ok_or_else(|| BraneError::NotHolomorphic(format!("coefficient in {}", reg.var_name(v))))?;
                letters.extend(std::iter::repeat(l).take(e as usize));
            }
            letters.sort();
            if letters.windows(2).any(|w| w[0] == w[1] && w[0].is_odd()) {
                continue;
            }
            let c = if inversions % 2 == 1 { -c } else { c.clone() };
            out = out.add(&SuperDiffOp::word(reg, c, &letters));
        }
    }
    Ok(out)
}
