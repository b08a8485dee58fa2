use std::sync::Arc;

use branes_open_closed::{complex_contraction_check, super_commutator, BraneSpec, Letter, SuperDiffOp};
use graded_algebra::{GeneratorRegistry, Scalar};
use rand::Rng;

use super::{equal, property, Suite, SuiteContext};
use crate::report::Check;
use crate::sampling::{self, Rng8};

pub struct Omega;

fn op(reg: &Arc<GeneratorRegistry>, word: &[&str]) -> SuperDiffOp {
    word.iter().fold(SuperDiffOp::one(reg), |acc, t| {
        let f = match t.strip_prefix('d') {
            Some(n) => SuperDiffOp::derivation(reg, n).unwrap(),
            None => SuperDiffOp::coordinate(reg, t).unwrap(),
        };
        acc.compose(&f)
    })
}

/// Up to three words of at most four letters in `z, e1, e2` and their derivations,
/// restricted to one parity.
fn homogeneous(r: &mut Rng8, reg: &Arc<GeneratorRegistry>) -> SuperDiffOp {
    let z = reg.var("z").unwrap();
    let (e1, e2) = (reg.abstract_odd("e1").unwrap(), reg.abstract_odd("e2").unwrap());
    let pool = [Letter::Even(z), Letter::DEven(z), Letter::Odd(e1), Letter::Odd(e2), Letter::DOdd(e1), Letter::DOdd(e2)];
    let mut a = SuperDiffOp::zero(reg);
    for _ in 0..r.gen_range(1..=3) {
        let w: Vec<Letter> = (0..r.gen_range(0..=4)).map(|_| *sampling::pick(r, &pool)).collect();
        a = a.add(&SuperDiffOp::word(reg, Scalar::from_int(r.gen_range(-3..=3)), &w));
    }
    a.parity_part(r.gen_range(0..2))
}

fn koszul(a: &SuperDiffOp, b: &SuperDiffOp) -> Scalar {
    if a.parity().unwrap_or(0) * b.parity().unwrap_or(0) == 1 {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

impl Suite for Omega {
    fn name(&self) -> &'static str {
        "omega"
    }

    fn run(&self, ctx: &SuiteContext) -> Vec<Check> {
        let reg = BraneSpec::d3().registry();
        let rotation = op(&reg, &["z", "dz"]).add(&op(&reg, &["e2", "de2"]));
        let mut out = vec![equal("rotation_generator", "rotation generator z d[z] + e2 d[e2]", Ok(rotation.to_text()), "e2*d[e2] + z*d[z]".to_string())];
        let first = super_commutator(&op(&reg, &["e2", "dz"]), &op(&reg, &["z", "de2"]));
        out.push(equal("commutator_ht_b", "[e2 d[z], z d[e2]] = z d[z] + e2 d[e2]", Ok(first.to_text()), rotation.to_text()));
        let b = op(&reg, &["e1", "e2", "de2"]).add(&op(&reg, &["e1", "z", "dz"]));
        let second = super_commutator(&op(&reg, &["de1"]), &b);
        out.push(equal("commutator_ht_a", "[d[e1], e1 (e2 d[e2] + z d[z])] = z d[z] + e2 d[e2]", Ok(second.to_text()), rotation.to_text()));
        out.push(Check::new("twists_commute", "[d[z], d[e2]] = 0", super_commutator(&op(&reg, &["dz"]), &op(&reg, &["de2"])).is_zero()));
        out.push(property(
            "commutator_jacobi",
            "super Jacobi identity for normal-ordered operators",
            100,
            &mut ctx.rng("omega.operators"),
            |r| (homogeneous(r, &reg), homogeneous(r, &reg), homogeneous(r, &reg)),
            |(a, b, c)| format!("[{}], [{}], [{}]", a.to_text(), b.to_text(), c.to_text()),
            |(a, b, c)| {
                let lhs = super_commutator(a, &super_commutator(b, c));
                let rhs = super_commutator(&super_commutator(a, b), c).add(&super_commutator(b, &super_commutator(a, c)).scale(&koszul(a, b)));
                Ok(lhs == rhs)
            },
        ));
        out.push(property(
            "composition_associative",
            "normal ordering is associative",
            100,
            &mut ctx.rng("omega.operators"),
            |r| (homogeneous(r, &reg), homogeneous(r, &reg), homogeneous(r, &reg)),
            |(a, b, c)| format!("[{}], [{}], [{}]", a.to_text(), b.to_text(), c.to_text()),
            |(a, b, c)| Ok(a.compose(b).compose(c) == a.compose(&b.compose(c))),
        ));
        match complex_contraction_check(10) {
            Ok(r) => {
                out.push(equal("contraction_kernel", "z d[e2] complex has no kernel through degree 10", Ok(r.kernel_dim), 0));
                out.push(equal("contraction_cokernel", "z d[e2] complex has cokernel {1}", Ok(r.cokernel.join(", ")), "1".to_string()));
                out.push(equal("d3_survivors", "D3 reduction keeps {1, e1}", Ok(r.d3_survivors.join(", ")), "1, e1".to_string()));
            }
            Err(e) => out.push(Check::from_result("contraction", "z d[e2] complex at truncation 10", Err(e.to_string()))),
        }
        out
    }
}
