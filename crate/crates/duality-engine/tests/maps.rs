mod common;

use common::Ctx;
use duality_engine::{
    calibrate, reduce_m, reduce_m_inverse, s_generator, sdual_closed_form, sdual_composite, t_dual, ClosedMode, Direction, DualityError,
    DualityFrame, SdualRegistry, SignConventionFile,
};
use field_spaces::BackgroundDescriptor;

fn circle() -> (Ctx, DualityFrame) {
    let reg = BackgroundDescriptor::circle().registry();
    let frame = DualityFrame::standard(&reg, true).unwrap();
    (Ctx::new(reg), frame)
}

fn affine() -> (Ctx, DualityFrame) {
    let reg = BackgroundDescriptor::standard().registry();
    let frame = DualityFrame::standard(&reg, false).unwrap();
    (Ctx::new(reg), frame)
}

#[test]
fn t_dual_swaps_circle_legs() {
    let (c, f) = circle();
    let zdz = c.x("z").wedge(&c.odd("Dz"));
    let eps_w1 = c.odd("eps").wedge(&c.x("w1"));
    assert_eq!(t_dual(&eps_w1, &f.circle, Direction::AtoB).unwrap(), zdz.wedge(&c.x("w1")));
    assert_eq!(t_dual(&zdz.wedge(&c.x("w1")), &f.circle, Direction::BtoA).unwrap(), eps_w1);
    let dw1 = c.odd("Dw1");
    assert_eq!(t_dual(&dw1, &f.circle, Direction::AtoB).unwrap(), dw1);
    assert_eq!(t_dual(&dw1, &f.circle, Direction::BtoA).unwrap(), dw1);
}

#[test]
fn t_dual_rejects_winding_and_bare_legs() {
    let (c, f) = circle();
    let z2 = c.x("z").wedge(&c.x("z"));
    assert!(matches!(t_dual(&z2, &f.circle, Direction::BtoA), Err(DualityError::NotRepresentable(_))));
    assert!(matches!(t_dual(&c.odd("Dz"), &f.circle, Direction::BtoA), Err(DualityError::NotRepresentable(_))));
}

#[test]
fn reduction_examples() {
    let (c, f) = affine();
    let em_w1 = c.odd("eM").wedge(&c.x("w1"));
    assert_eq!(reduce_m(&em_w1, &f).unwrap(), c.x("w1"));
    assert_eq!(reduce_m(&c.n(1), &f).unwrap(), c.odd("Dw1").wedge(&c.odd("Dw2")));
    assert_eq!(reduce_m(&c.x("w1"), &f).unwrap(), c.odd("Dw2"));
    assert_eq!(reduce_m_inverse(&c.odd("Dw2"), &f).unwrap(), c.x("w1"));
    assert_eq!(reduce_m_inverse(&c.x("w1"), &f).unwrap(), em_w1);
    let not_closed = c.x("w1").wedge(&c.odd("Dw1"));
    assert!(reduce_m_inverse(&not_closed, &f).is_err());
    let top = c.x("w1").wedge(&c.odd("Dw1")).wedge(&c.odd("Dw2"));
    assert!(reduce_m_inverse(&top, &f).is_err());
}

#[test]
fn modular_generator_examples() {
    let (c, f) = affine();
    let (em, eps) = (c.odd("eM"), c.odd("eps"));
    assert_eq!(s_generator(&em.wedge(&c.x("w1")), &f), eps.wedge(&c.x("w1")).neg());
    assert_eq!(s_generator(&em.wedge(&eps), &f), em.wedge(&eps));
    assert_eq!(s_generator(&c.n(1), &f), c.n(1));
}

#[test]
fn composite_examples() {
    let (c, f) = circle();
    let zdz = c.x("z").wedge(&c.odd("Dz"));
    assert_eq!(sdual_composite(&c.x("w1"), &f).unwrap(), zdz.wedge(&c.odd("Dw2")).neg());
    let fixed = zdz.wedge(&c.x("w2"));
    assert_eq!(sdual_composite(&fixed, &f).unwrap(), fixed);
    assert_eq!(sdual_composite(&zdz.wedge(&c.odd("Dw2")), &f).unwrap(), c.x("w1"));
    let top = zdz.wedge(&c.odd("Dw1")).wedge(&c.odd("Dw2"));
    assert_eq!(sdual_composite(&top, &f).unwrap(), c.n(1));
    assert!(sdual_composite(&c.odd("Dw1").wedge(&c.odd("Dw2")), &f).is_err());
}

#[test]
fn threefold_anchors_with_frozen_signs() {
    let (c, f) = affine();
    let signs = SignConventionFile::frozen();
    let s = |m| sdual_closed_form(&m, &f, ClosedMode::C3Z4, &signs).unwrap().image;
    let (dz, d1, d2) = (c.odd("Dz"), c.odd("Dw1"), c.odd("Dw2"));
    assert_eq!(s(c.x("w1")), d2.wedge(&dz));
    assert_eq!(s(c.x("z").wedge(&c.x("w2"))), c.x("w2").wedge(&d1).wedge(&d2).add(&c.x("z").wedge(&dz).wedge(&d1)));
    assert_eq!(s(c.x("w1").wedge(&c.x("w2"))), c.x("w1").wedge(&dz).wedge(&d1).sub(&c.x("w2").wedge(&dz).wedge(&d2)));
    assert_eq!(s(c.x("w1")).to_text(), "-Dz^Dw2");
}

#[test]
fn five_case_trace_labels() {
    let (c, f) = affine();
    let signs = SignConventionFile::frozen();
    let dz = c.odd("Dz");
    let m = c.x("w1").add(&c.n(2)).add(&dz.wedge(&c.odd("Dw2")));
    let out = sdual_closed_form(&m, &f, ClosedMode::CTimesC2, &signs).unwrap();
    let cases: Vec<&str> = out.trace.iter().map(|t| t.case).collect();
    assert_eq!(cases, vec!["PV0, nonzero divergence", "PV0, zero divergence", "PV1 primitive"]);
    let expected = dz.wedge(&c.odd("Dw2")).neg().sub(&dz.wedge(&c.odd("Dw1")).wedge(&c.odd("Dw2")).scale(&graded_algebra::Scalar::from_int(2))).add(&c.x("w1"));
    assert_eq!(out.image, expected);
}

#[test]
fn sign_file_matches_recalibration() {
    assert_eq!(calibrate().unwrap(), SignConventionFile::frozen());
    let text = SignConventionFile::frozen().to_string();
    assert_eq!(SignConventionFile::parse(&text).unwrap(), SignConventionFile::frozen());
    assert!(SignConventionFile::parse("c3_z4.pv0 = 2").is_err());
}

#[test]
fn strategies_by_name() {
    let (c, f) = circle();
    let reg = SdualRegistry::standard(&SignConventionFile::frozen());
    assert_eq!(reg.names(), vec!["composite", "c_times_c2", "c3_z4"]);
    let out = reg.get("c_times_c2").unwrap().apply(&c.x("w1"), &f).unwrap();
    assert!(out.oracle_consulted);
    assert_eq!(out.image, reg.get("composite").unwrap().apply(&c.x("w1"), &f).unwrap().image);
    assert_eq!(reg.get("closed").unwrap().name(), "c3_z4");
    assert!(matches!(reg.get("nope"), Err(DualityError::UnknownMode(_))));
}

#[test]
fn threefold_square_on_functions() {
    let (c, f) = affine();
    let run = |m: &graded_algebra::Multivector, signs: &SignConventionFile| sdual_closed_form(m, &f, ClosedMode::C3Z4, signs).unwrap().image;
    let unit = SignConventionFile::unit();
    let frozen = SignConventionFile::frozen();
    let w1 = c.x("w1");
    assert_eq!(run(&run(&w1, &unit), &unit), w1.neg());
    assert_eq!(run(&run(&w1, &frozen), &frozen), w1);
}
