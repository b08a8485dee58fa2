use branes_open_closed::{bochner_martinelli, closed_open, d3_leg_structure, sdual_fixes_d3, BraneSpec, SourcedField, SuperDiffOp};
use duality_engine::{DualityFrame, SdualRegistry};
use graded_algebra::Multivector;

use super::{equal, holds, text, Suite, SuiteContext};
use crate::report::Check;

pub struct D3;

impl Suite for D3 {
    fn name(&self) -> &'static str {
        "d3"
    }

    fn run(&self, ctx: &SuiteContext) -> Vec<Check> {
        let mut out = Vec::new();
        let field = match bochner_martinelli(&BraneSpec::d3_flat_c5()) {
            Ok(f) => f,
            Err(e) => return vec![Check::from_result("bochner_martinelli", "Bochner-Martinelli kernel of the D3 brane", Err(e.to_string()))],
        };
        let reg = field.value.registry().clone();
        let odd = |n: &str| Multivector::odd(&reg, reg.odd_by_name(n).unwrap());
        let pi = odd("Du").wedge(&odd("Dv"));

        out.push(Check::new("kernel_is_dbar_closed", "D3 field is dbar-closed away from the brane", field.dolbeault().is_zero()));
        out.push(holds("kernel_is_divergence_free", "D3 field is divergence-free", field.divergence().map(|d| d.is_zero()).map_err(text)));
        out.push(holds("kernel_commutes_with_pi", "[D_u ^ D_v, D3 field] = 0", field.bracket(&pi).map(|d| d.is_zero()).map_err(text)));
        out.push(holds(
            "symplectic_image_leg_structure",
            "D3 field through the symplectic identification",
            field.symplectic_image().map(|m| d3_leg_structure(&m)).map_err(text),
        ));
        out.push(Check::new("sdual_fixes_field", "S-duality fixes the D3 field", sdual_fixes_d3(&field)));
        let mutated = SourcedField { value: field.value.add(&Multivector::var(&reg, reg.var("w1").unwrap())), brane: field.brane.clone() };
        out.push(Check::new("sdual_moves_mutated_field", "adding w1 breaks the S-duality invariance", !sdual_fixes_d3(&mutated)));
        let zero = SourcedField { value: Multivector::zero(&reg), brane: field.brane.clone() };
        out.push(Check::new("sdual_fixes_zero", "S-duality fixes the zero field", sdual_fixes_d3(&zero)));
        out.push(holds(
            "codimension_two_kernel",
            "D3 field on R^4 x C^3 is closed and divergence-free",
            bochner_martinelli(&BraneSpec::d3()).map_err(text).and_then(|f| Ok(f.dolbeault().is_zero() && f.divergence().map_err(text)?.is_zero())),
        ));

        let brane = BraneSpec::d3();
        let reg = brane.registry();
        let x = |n: &str| Multivector::var(&reg, reg.var(n).unwrap());
        let co = |m: &Multivector| closed_open(m, &brane).map(|op| op.to_text()).map_err(text);
        out.push(equal("closed_open_w1", "closed-open map sends w1 to d[e1]", co(&x("w1")), "d[e1]".to_string()));
        out.push(equal("closed_open_zw2", "closed-open map sends z w2 to z d[e2]", co(&x("z").wedge(&x("w2"))), "z*d[e2]".to_string()));
        let frozen = SdualRegistry::standard(&ctx.signs);
        let s = |m: &Multivector| -> Result<Multivector, String> {
            let frame = DualityFrame::standard(&reg, false).map_err(text)?;
            Ok(frozen.get("c3_z4").map_err(text)?.apply(m, &frame).map_err(text)?.image)
        };
        out.push(equal("ht_twists_exchanged", "S exchanges the d[e1] and e2 d[z] deformations", s(&x("w1")).and_then(|m| co(&m)), "e2*d[z]".to_string()));
        let pi_op = |n: &str| SuperDiffOp::coordinate(&reg, n).unwrap();
        let d = |n: &str| SuperDiffOp::derivation(&reg, n).unwrap();
        let poisson = pi_op("e1").compose(&d("e1")).compose(&d("z")).sub(&pi_op("e2").compose(&d("e2")).compose(&d("z")));
        out.push(holds(
            "poisson_deformation",
            "S(w1 w2) maps to minus the Poisson deformation",
            s(&x("w1").wedge(&x("w2"))).and_then(|m| closed_open(&m, &brane).map_err(text)).map(|op| op == poisson.neg()),
        ));
        out
    }
}
