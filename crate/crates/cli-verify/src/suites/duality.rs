use std::sync::Arc;

use duality_engine::{
    bracket_defect, calibrate, ell1, ell2, reduce_m, reduce_m_inverse, reduced_bracket, s_squared_target, sdual_closed_form, sdual_composite,
    ClosedMode, DualityError, DualityFrame, SdualRegistry, SignConventionFile,
};
use field_spaces::BackgroundDescriptor;
use graded_algebra::{GeneratorRegistry, Multivector, OddId, RatFunc, Scalar, VarId};
use polyvector_calculus::{divergence, dolbeault};
use rand::Rng;

use super::{equal, holds, property, text, Suite, SuiteContext};
use crate::report::Check;
use crate::sampling::{self, Rng8};

pub struct Duality;

pub const GOLDEN_W1: &str = include_str!("../../golden/sdual_w1.txt");
pub const GOLDEN_ZW2: &str = include_str!("../../golden/sdual_zw2.txt");
pub const GOLDEN_W1W2: &str = include_str!("../../golden/sdual_w1w2.txt");

const SPECTATORS: [&[&str]; 4] = [&[], &["dt1"], &["dbw1"], &["e1", "dbw2"]];

struct Names {
    reg: Arc<GeneratorRegistry>,
}

impl Names {
    fn x(&self, n: &str) -> Multivector {
        Multivector::var(&self.reg, self.reg.var(n).unwrap())
    }

    fn odd(&self, n: &str) -> Multivector {
        Multivector::odd(&self.reg, self.reg.odd_by_name(n).unwrap())
    }

    fn legs(&self, names: &[&str]) -> Multivector {
        let ids: Vec<OddId> = names.iter().map(|n| self.reg.odd_by_name(n).unwrap()).collect();
        Multivector::term(&self.reg, RatFunc::one(), &ids)
    }
}

pub fn circle_frame() -> DualityFrame {
    DualityFrame::standard(&BackgroundDescriptor::circle().registry(), true).expect("circle frame")
}

pub fn affine_frame() -> DualityFrame {
    DualityFrame::standard(&BackgroundDescriptor::standard().registry(), false).expect("affine frame")
}

/// `S(w1)`, `S(z w2)` and `S(w1 w2)` with the frozen signs, built by hand.
pub fn anchors(reg: &Arc<GeneratorRegistry>) -> [(Multivector, Multivector); 3] {
    let c = Names { reg: reg.clone() };
    let (dz, d1, d2) = (c.odd("Dz"), c.odd("Dw1"), c.odd("Dw2"));
    let (z, w1, w2) = (c.x("z"), c.x("w1"), c.x("w2"));
    [
        (w1.clone(), d2.wedge(&dz)),
        (z.wedge(&w2), w2.wedge(&d1).wedge(&d2).add(&z.wedge(&dz).wedge(&d1))),
        (w1.wedge(&w2), w1.wedge(&dz).wedge(&d1).sub(&w2.wedge(&dz).wedge(&d2))),
    ]
}

/// `L (a0 + a1) + z Dz ^ L' (b0 + b1 + c Omega^-1)` with `a1, b1` divergence-free
/// and plane polynomials of degree at most 6.
fn shared_domain(r: &mut Rng8, frame: &DualityFrame) -> Multivector {
    let reg = &frame.reg;
    let c = Names { reg: reg.clone() };
    let w = frame.plane.coords().to_vec();
    let om = frame.plane.omega_inv();
    let p = |r: &mut Rng8| Multivector::from_poly(reg, sampling::poly(r, &w, 6, 4));
    let closed = |q: Multivector| divergence(&q.wedge(&om), &frame.plane).unwrap();
    let (a0, g, b0, h) = (p(r), p(r), p(r), p(r));
    let k = r.gen_range(-3i64..=3);
    let keep: Vec<bool> = (0..5).map(|_| r.gen_bool(0.5)).collect();
    let (sa, sb) = (r.gen_range(0..4), r.gen_range(0..4));
    let pick = |on: bool, m: Multivector| if on { m } else { Multivector::zero(reg) };
    let a = pick(keep[0], a0).add(&pick(keep[1], closed(g)));
    let b = pick(keep[2], b0).add(&pick(keep[3], closed(h))).add(&pick(keep[4], om.scale(&Scalar::from_int(k))));
    c.legs(SPECTATORS[sa]).wedge(&a).add(&frame.circle.leg(reg).wedge(&c.legs(SPECTATORS[sb])).wedge(&b))
}

/// Divergence-free polyvectors on the affine three-fold.
fn threefold_domain(r: &mut Rng8, frame: &DualityFrame) -> Multivector {
    let reg = &frame.reg;
    let cy = frame.threefold().unwrap();
    let v = cy.coords().to_vec();
    let th = cy.thetas();
    let om = cy.omega_inv();
    let pairs = [[th[0], th[1]], [th[0], th[2]], [th[1], th[2]]];
    let (f0, g, h) = (sampling::poly(r, &v, 6, 4), sampling::poly(r, &v, 6, 4), sampling::poly(r, &v, 6, 4));
    let k = r.gen_range(-3i64..=3);
    let pair = r.gen_range(0..3);
    let keep: Vec<bool> = (0..4).map(|_| r.gen_bool(0.5)).collect();
    let pick = |on: bool, m: Multivector| if on { m } else { Multivector::zero(reg) };
    let mu1 = divergence(&Multivector::term(reg, RatFunc::from_poly(g), &pairs[pair]), &cy).unwrap();
    let mu2 = divergence(&Multivector::from_poly(reg, h).wedge(&om), &cy).unwrap();
    pick(keep[0], Multivector::from_poly(reg, f0)).add(&pick(keep[1], mu1)).add(&pick(keep[2], mu2)).add(&pick(keep[3], om.scale(&Scalar::from_int(k))))
}

/// Forms in `dbw` with coefficients in `w, w~`, with `eps` and `eM` legs.
fn eleven_d(r: &mut Rng8, frame: &DualityFrame) -> Multivector {
    let reg = &frame.reg;
    let vars: Vec<VarId> = ["w1", "w2", "w1~", "w2~"].iter().map(|n| reg.var(n).unwrap()).collect();
    let pool: Vec<OddId> = ["dbw1", "dbw2", "eps", "eM"].iter().map(|n| reg.odd_by_name(n).unwrap()).collect();
    sampling::multivector(r, reg, &vars, &pool, None, 3)
}

fn red(m: &Multivector, frame: &DualityFrame) -> Result<Multivector, String> {
    reduce_m(m, frame).map_err(text)
}

/// `red(ell2(x, y)) - (-1)^|x| [red x, red y]` equals the predicted defect.
fn bracket_law(x: &Multivector, y: &Multivector, frame: &DualityFrame) -> Result<bool, String> {
    let lhs = red(&ell2(x, y, frame), frame)?;
    let odd = x.filter(|mono| mono.len() % 2 == 1);
    let ry = red(y, frame)?;
    let rhs = reduced_bracket(&red(&x.sub(&odd), frame)?, &ry, frame)
        .map_err(text)?
        .sub(&reduced_bracket(&red(&odd, frame)?, &ry, frame).map_err(text)?);
    Ok(lhs.sub(&rhs) == bracket_defect(x, y, frame).map_err(text)?)
}

fn with_em(m: &Multivector, frame: &DualityFrame) -> Multivector {
    m.filter(|mono| mono.contains(&frame.em))
}

/// A pair whose `eM` content matches the case: both, exactly one, or neither.
fn case_pair(r: &mut Rng8, frame: &DualityFrame, case: usize) -> (Multivector, Multivector) {
    loop {
        let (x, y) = (eleven_d(r, frame), eleven_d(r, frame));
        let (xe, ye) = (with_em(&x, frame), with_em(&y, frame));
        let (x0, y0) = (x.sub(&xe), y.sub(&ye));
        let pair = match case {
            0 => (xe, ye),
            1 if r.gen_bool(0.5) => (xe, y0),
            1 => (x0, ye),
            _ => (x0, y0),
        };
        if !pair.0.is_zero() && !pair.1.is_zero() {
            return pair;
        }
    }
}

fn show2((a, b): &(Multivector, Multivector)) -> String {
    format!("[{}], [{}]", a, b)
}

fn trace_cases(name: &'static str, m: &Multivector, frame: &DualityFrame, signs: &SignConventionFile, expected: &[&str]) -> Check {
    let got = sdual_closed_form(m, frame, ClosedMode::CTimesC2, signs).map(|o| o.trace.iter().map(|t| t.case).collect::<Vec<_>>().join("; "));
    equal(name, "case taken by the five-case form", got.map_err(text), expected.join("; "))
}

impl Suite for Duality {
    fn name(&self) -> &'static str {
        "duality"
    }

    fn run(&self, ctx: &SuiteContext) -> Vec<Check> {
        let affine = affine_frame();
        let circle = circle_frame();
        let strategies = SdualRegistry::standard(&ctx.signs);
        let closed = strategies.get("c3_z4").expect("registered");
        let mut out = Vec::new();

        let golden = [("sdual_w1", "S(w1) = Dw2 ^ Dz", GOLDEN_W1), ("sdual_zw2", "S(z w2) = w2 Dw1 ^ Dw2 + z Dz ^ Dw1", GOLDEN_ZW2), (
            "sdual_w1w2",
            "S(w1 w2) = w1 Dz ^ Dw1 - w2 Dz ^ Dw2",
            GOLDEN_W1W2,
        )];
        for ((input, expected), (name, anchor, file)) in anchors(&affine.reg).into_iter().zip(golden) {
            let got = closed.apply(&input, &affine).map(|o| o.image).map_err(text);
            let ok = matches!(&got, Ok(image) if *image == expected && image.to_text() == file.trim_end());
            let witness = match &got {
                Ok(image) => format!("printed {} against golden {}", image.to_text(), file.trim_end()),
                Err(e) => e.clone(),
            };
            out.push(Check::from_result(name, anchor, if ok { Ok(()) } else { Err(witness) }));
        }

        let c = Names { reg: affine.reg.clone() };
        out.push(trace_cases("trace_w1", &c.x("w1"), &affine, &ctx.signs, &["PV0, nonzero divergence"]));
        out.push(trace_cases("trace_dw1", &c.odd("Dw1"), &affine, &ctx.signs, &["identity"]));
        let cc = Names { reg: circle.reg.clone() };
        let z2 = cc.x("z").wedge(&cc.x("z"));
        out.push(Check::new(
            "composite_rejects_winding",
            "T-duality from B to A is not defined on z^2",
            matches!(sdual_composite(&z2, &circle), Err(DualityError::NotRepresentable(_))),
        ));
        out.push(holds("signs_match_recalibration", "convention signs fitted to the three anchors", calibrate().map(|s| s == ctx.signs).map_err(text)));
        let unit = SignConventionFile::unit();
        out.push(holds(
            "unsigned_order_four_on_functions",
            "unsigned three-fold formulas square to -1 on functions",
            (|| {
                let once = sdual_closed_form(&c.x("w1"), &affine, ClosedMode::C3Z4, &unit).map_err(text)?.image;
                let twice = sdual_closed_form(&once, &affine, ClosedMode::C3Z4, &unit).map_err(text)?.image;
                Ok(twice == c.x("w1").neg())
            })(),
        ));

        let oracle = |m: &Multivector| -> Result<bool, String> {
            let composite = sdual_composite(m, &circle).map_err(text)?;
            let closed = sdual_closed_form(m, &circle, ClosedMode::CTimesC2, &ctx.signs).map_err(text)?.image;
            Ok(composite == closed)
        };
        out.push(property(
            "composite_matches_closed_form",
            "composite S-duality equals the signed five-case form",
            200,
            &mut ctx.rng("duality.shared_domain"),
            |r| shared_domain(r, &circle),
            |m| m.to_text(),
            oracle,
        ));
        out.push(property(
            "composite_squares_to_circle_negation",
            "S o S = (eM, eps -> -eM, -eps)",
            200,
            &mut ctx.rng("duality.shared_domain"),
            |r| shared_domain(r, &circle),
            |m| m.to_text(),
            |m| {
                let once = sdual_composite(m, &circle).map_err(text)?;
                let twice = sdual_composite(&once, &circle).map_err(text)?;
                Ok(twice == s_squared_target(m, &circle).map_err(text)?)
            },
        ));
        out.push(property(
            "composite_output_is_divergence_free",
            "S-duality lands in divergence-free polyvectors",
            200,
            &mut ctx.rng("duality.shared_domain"),
            |r| shared_domain(r, &circle),
            |m| m.to_text(),
            |m| {
                let cy = circle.threefold().map_err(text)?;
                Ok(divergence(&sdual_composite(m, &circle).map_err(text)?, &cy).map_err(text)?.is_zero())
            },
        ));
        out.push(property(
            "threefold_output_is_divergence_free",
            "three-fold formulas land in divergence-free polyvectors",
            100,
            &mut ctx.rng("duality.threefold"),
            |r| threefold_domain(r, &affine),
            |m| m.to_text(),
            |m| {
                let image = sdual_closed_form(m, &affine, ClosedMode::C3Z4, &ctx.signs).map_err(text)?.image;
                Ok(divergence(&image, &affine.threefold().map_err(text)?).map_err(text)?.is_zero())
            },
        ));

        out.push(property(
            "reduction_round_trip",
            "reduce_m o reduce_m_inverse = id",
            100,
            &mut ctx.rng("duality.eleven_d"),
            |r| eleven_d(r, &affine),
            |m| m.to_text(),
            |x| {
                let y = red(x, &affine)?;
                let back = reduce_m_inverse(&y, &affine).map_err(text)?;
                Ok(back == *x && red(&back, &affine)? == y)
            },
        ));
        out.push(property(
            "reduction_is_chain_map",
            "reduce_m intertwines the differentials",
            100,
            &mut ctx.rng("duality.eleven_d"),
            |r| eleven_d(r, &affine),
            |m| m.to_text(),
            |x| Ok(red(&ell1(x), &affine)? == dolbeault(&red(x, &affine)?)),
        ));
        let cases = [("bracket_law_both_em", "bracket compatibility, both arguments with eM"), (
            "bracket_law_one_em",
            "bracket compatibility, one argument with eM",
        ), ("bracket_law_no_em", "bracket compatibility, no argument with eM")];
        for (k, (name, anchor)) in cases.into_iter().enumerate() {
            out.push(property(name, anchor, 100, &mut ctx.rng(name), |r| case_pair(r, &affine, k), show2, |(x, y)| bracket_law(x, y, &affine)));
        }
        out.push(property(
            "bracket_exact_on_em_arguments",
            "no defect when the first argument carries eM and the second has no plane constant",
            100,
            &mut ctx.rng("duality.em_exact"),
            |r| {
                let (x, y) = (with_em(&eleven_d(r, &affine), &affine), eleven_d(r, &affine));
                let w = affine.plane.coords().to_vec();
                let y = y.map_coefficients(|c| {
                    c.split_by_vars(&w)
                        .unwrap()
                        .into_iter()
                        .filter(|(mon, _)| !mon.is_one())
                        .fold(RatFunc::zero(), |acc, (mon, k)| acc.add(&RatFunc::from_poly(graded_algebra::Poly::monomial(mon, Scalar::one())).mul(&k)))
                });
                (x, y)
            },
            show2,
            |(x, y)| Ok(bracket_defect(x, y, &affine).map_err(text)?.is_zero() && bracket_law(x, y, &affine)?),
        ));
        out
    }
}
