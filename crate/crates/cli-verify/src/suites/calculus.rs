use std::sync::Arc;

use graded_algebra::{GeneratorRegistry, Multivector, OddId, VarId};
use polyvector_calculus::{de_rham_holomorphic, divergence, dolbeault, iota_pi, omega_flat, omega_sharp, schouten_oracle, sn_bracket, CalabiYauOrdering};
use rand::Rng;

use super::{property, text, Suite, SuiteContext};
use crate::report::Check;
use crate::sampling::{self, Rng8};

pub struct Calculus;

pub(crate) fn flat(names: &[&str]) -> (Arc<GeneratorRegistry>, CalabiYauOrdering) {
    let reg = GeneratorRegistry::builder().coordinates(names).build();
    let cy = CalabiYauOrdering::new(&reg, names).expect("coordinates exist");
    (reg, cy)
}

pub(crate) fn all_vars(reg: &GeneratorRegistry) -> Vec<VarId> {
    reg.even_vars().iter().map(|e| e.id).collect()
}

pub(crate) fn thetas(reg: &GeneratorRegistry) -> Vec<OddId> {
    reg.holomorphic_coords().into_iter().map(|z| reg.theta(z).unwrap()).collect()
}

fn pv_and_dbar(reg: &GeneratorRegistry) -> Vec<OddId> {
    let mut pool: Vec<OddId> = reg.holomorphic_coords().into_iter().flat_map(|z| [reg.dbar_form(z).unwrap(), reg.theta(z).unwrap()]).collect();
    pool.sort();
    pool
}

/// Polyvector-valued forms with coefficients in `z` and `z~`.
pub(crate) fn mixed(rng: &mut Rng8, reg: &Arc<GeneratorRegistry>) -> Multivector {
    sampling::multivector(rng, reg, &all_vars(reg), &pv_and_dbar(reg), None, 4)
}

/// Holomorphic polyvector of a random degree between 0 and 3.
fn homogeneous(rng: &mut Rng8, reg: &Arc<GeneratorRegistry>) -> Multivector {
    let k = rng.gen_range(0..=3);
    sampling::multivector(rng, reg, &reg.holomorphic_coords(), &thetas(reg), Some(k), 3)
}

/// `omega ^ b` for a form `b` in the `dz~` directions on `C^2`.
pub(crate) fn two_form(rng: &mut Rng8, reg: &Arc<GeneratorRegistry>, cy: &CalabiYauOrdering) -> Multivector {
    let dbar: Vec<OddId> = reg.holomorphic_coords().into_iter().map(|z| reg.dbar_form(z).unwrap()).collect();
    cy.omega().wedge(&sampling::multivector(rng, reg, &all_vars(reg), &dbar, None, 4))
}

fn deg(m: &Multivector) -> usize {
    m.total_degree().unwrap_or(0)
}

fn signed(m: Multivector, k: usize) -> Multivector {
    if k % 2 == 1 {
        m.neg()
    } else {
        m
    }
}

fn show(ms: &[&Multivector]) -> String {
    ms.iter().map(|m| format!("[{}]", m)).collect::<Vec<_>>().join(", ")
}

const N: usize = 100;

impl Suite for Calculus {
    fn name(&self) -> &'static str {
        "calculus"
    }

    fn run(&self, ctx: &SuiteContext) -> Vec<Check> {
        let (reg, cy) = flat(&["u", "v", "w"]);
        let (reg2, cy2) = flat(&["u", "v"]);
        let br = |x: &Multivector, y: &Multivector| sn_bracket(x, y, &cy).map_err(text);
        let mut out = Vec::new();

        out.push(property(
            "dbar_squares_to_zero",
            "Dolbeault operator squares to zero",
            N,
            &mut ctx.rng("calculus.mixed"),
            |r| mixed(r, &reg),
            |m| show(&[m]),
            |m| Ok(dolbeault(&dolbeault(m)).is_zero()),
        ));
        out.push(property(
            "divergence_squares_to_zero",
            "divergence squares to zero",
            N,
            &mut ctx.rng("calculus.mixed"),
            |r| mixed(r, &reg),
            |m| show(&[m]),
            |m| {
                let once = divergence(m, &cy).map_err(text)?;
                Ok(divergence(&once, &cy).map_err(text)?.is_zero())
            },
        ));
        out.push(property(
            "divergence_anticommutes_with_dbar",
            "divergence and Dolbeault operator anticommute",
            N,
            &mut ctx.rng("calculus.mixed"),
            |r| mixed(r, &reg),
            |m| show(&[m]),
            |m| {
                let a = divergence(&dolbeault(m), &cy).map_err(text)?;
                let b = dolbeault(&divergence(m, &cy).map_err(text)?);
                Ok(a.add(&b).is_zero())
            },
        ));
        out.push(property(
            "bracket_graded_symmetry",
            "graded symmetry of the Schouten-Nijenhuis bracket",
            N,
            &mut ctx.rng("calculus.pair"),
            |r| (homogeneous(r, &reg), homogeneous(r, &reg)),
            |(a, b)| show(&[a, b]),
            |(a, b)| Ok(br(a, b)? == signed(br(b, a)?, deg(a) * deg(b))),
        ));
        out.push(property(
            "bracket_jacobi",
            "graded Jacobi identity for the Schouten-Nijenhuis bracket",
            N,
            &mut ctx.rng("calculus.triple"),
            |r| (homogeneous(r, &reg), homogeneous(r, &reg), homogeneous(r, &reg)),
            |(a, b, c)| show(&[a, b, c]),
            |(a, b, c)| {
                // Gerstenhaber form for the shifted bracket (-1)^|x| [x, y].
                let g = |x: &Multivector, y: &Multivector| br(x, y).map(|m| signed(m, deg(x)));
                let lhs = g(a, &g(b, c)?)?;
                let rhs = g(&g(a, b)?, c)?.add(&signed(g(b, &g(a, c)?)?, (deg(a) + 1) * (deg(b) + 1)));
                Ok(lhs == rhs)
            },
        ));
        out.push(property(
            "bracket_leibniz",
            "graded Leibniz rule for the Schouten-Nijenhuis bracket",
            N,
            &mut ctx.rng("calculus.triple"),
            |r| (homogeneous(r, &reg), homogeneous(r, &reg), homogeneous(r, &reg)),
            |(a, b, c)| show(&[a, b, c]),
            |(a, b, c)| {
                let lhs = br(a, &b.wedge(c))?;
                let rhs = br(a, b)?.wedge(c).add(&signed(b.wedge(&br(a, c)?), (deg(a) + 1) * deg(b)));
                Ok(lhs == rhs)
            },
        ));
        out.push(property(
            "bracket_matches_schouten",
            "bracket agrees with the classical Schouten bracket in low degree",
            N,
            &mut ctx.rng("calculus.low_pair"),
            |r| {
                let (i, j) = (r.gen_range(0..=1), r.gen_range(0..=1));
                let h = reg.holomorphic_coords();
                let th = thetas(&reg);
                (sampling::multivector(r, &reg, &h, &th, Some(i), 3), sampling::multivector(r, &reg, &h, &th, Some(j), 3))
            },
            |(a, b)| show(&[a, b]),
            |(a, b)| {
                let expected = schouten_oracle(a, b, &cy).ok_or("oracle undefined")?;
                Ok(br(a, b)? == signed(expected, (deg(a) + 1) * deg(b)))
            },
        ));
        out.push(property(
            "homotopy_identity",
            "divergence conjugated by the volume form equals [d, iota_Pi]",
            N,
            &mut ctx.rng("calculus.two_forms"),
            |r| two_form(r, &reg2, &cy2),
            |m| show(&[m]),
            |alpha| {
                let pi = cy2.omega_inv();
                let sharp = omega_sharp(alpha, &cy2).map_err(text)?;
                let conjugated = omega_flat(&divergence(&sharp, &cy2).map_err(text)?, &cy2).map_err(text)?;
                let d = |a: &Multivector| de_rham_holomorphic(a, &cy2);
                let ip = |a: &Multivector| iota_pi(a, &pi).map_err(text);
                Ok(conjugated == d(&ip(alpha)?).sub(&ip(&d(alpha))?))
            },
        ));
        out
    }
}
