use graded_algebra::linalg::SparseRow;
use graded_algebra::Scalar;
use polyvector_calculus::{sn_bracket, CalabiYauOrdering};
use susy_residual::{build_siso, q_cohomology, ResMap, Siso, Summand, SO_DIM, SPINOR_DIM, VEC_DIM};

use super::{equal, holds, text, Suite, SuiteContext};
use crate::report::Check;

pub struct Appendix;

fn unit(k: usize) -> SparseRow {
    SparseRow::from([(k, Scalar::one())])
}

impl Suite for Appendix {
    fn name(&self) -> &'static str {
        "appendix"
    }

    fn run(&self, _ctx: &SuiteContext) -> Vec<Check> {
        let siso = match build_siso() {
            Ok(s) => s,
            Err(e) => return vec![Check::from_result("siso_builds", "super-Poincare algebra satisfies Jacobi", Err(e.to_string()))],
        };
        let alg = &siso.algebra;
        let q = siso.standard_supercharge();
        let mut out = vec![Check::new("siso_builds", "super-Poincare algebra satisfies Jacobi", true)];
        out.push(equal("siso_dimensions", "dim siso = (55|32)", Ok(format!("{:?}", alg.sdim())), "(55, 32)".to_string()));
        out.push(equal("gamma_equivariant", "Gamma+ is so(10)-equivariant", Ok(siso.gamma.equivariance_residual(&siso.module)), 0));
        out.push(Check::new("supercharge_squares_to_zero", "[Q, Q] = 0", alg.bracket(&q, &q).is_empty()));
        let coh = match q_cohomology(alg, &q) {
            Ok(c) => c,
            Err(e) => {
                out.push(Check::from_result("cohomology", "Q-cohomology of siso", Err(e.to_string())));
                return out;
            }
        };
        out.push(equal("cohomology_dimensions", "H(siso; Q) has dimension (39|16)", Ok(format!("{:?}", coh.sdim)), "(39, 16)".to_string()));
        let so_rank = coh.rank_on(0..SO_DIM);
        out.push(equal("image_from_so10", "im [Q, -] on so(10) has rank 11", Ok(so_rank), 11));
        out.push(equal("stabilizer_dimension", "dim stab(Q) = 34", Ok(SO_DIM - so_rank), 34));
        let spinors: Vec<usize> = (0..2 * SPINOR_DIM).map(|k| SO_DIM + VEC_DIM + k).collect();
        let spinor_rank = coh.rank_on(spinors.clone());
        out.push(equal("kernel_on_spinors", "ker [Q, -] on S+ + S+ has dimension 27", Ok(spinors.len() - spinor_rank), 27));
        let m = &siso.module;
        let wedge4: Vec<usize> = (0..5).map(|i| Siso::spinor(m.spinor_index(0b11111 & !(1 << i)).unwrap(), 0)).collect();
        out.push(equal("image_in_translations", "im [Q, -] meets C^10 in dimension 5", Ok(coh.rank_on(wedge4)), 5));
        let exact = (0..5).all(|k| coh.is_exact(&unit(Siso::translation(5 + k))) && !coh.is_exact(&unit(Siso::translation(k))));
        out.push(Check::new("exact_translations", "the exact translations span V*", exact));

        let res = match ResMap::new(&siso, &coh) {
            Ok(r) => r,
            Err(e) => {
                out.push(Check::from_result("res_map", "res map on the summand basis", Err(e.to_string())));
                return out;
            }
        };
        out.push(Check::new("res_map", "res map on the summand basis", true));
        let reg = &res.registry;
        let cy = match CalabiYauOrdering::new(reg, &["z1", "z2", "z3", "z4", "z5"]) {
            Ok(cy) => cy,
            Err(e) => {
                out.push(Check::from_result("res_registry", "plumbing", Err(e.to_string())));
                return out;
            }
        };
        let mut equivariant = Ok(());
        'outer: for a in res.entries.iter().filter(|e| e.summand == Summand::Sl5) {
            for h in &res.entries {
                let lhs = res.res_map(&alg.bracket(&a.cocycle, &h.cocycle)).map_err(text);
                let rhs = sn_bracket(&a.image, &h.image, &cy).map_err(text);
                if lhs.is_err() || lhs != rhs {
                    equivariant = Err(format!("[{}, {}]", a.label, h.label));
                    break 'outer;
                }
            }
        }
        out.push(Check::from_result("res_is_sl5_equivariant", "res intertwines the sl(5) action", equivariant));

        // [res a_i, res (wedge^4 without a_j) @ e2] is +-delta_ij while the class bracket vanishes.
        let mismatch = (|| -> Result<bool, String> {
            let duals: Vec<_> = res.entries.iter().filter(|e| e.summand == Summand::OddVDual).collect();
            for i in 1..=5 {
                let a = res.entry(&format!("a{}", i)).ok_or("missing translation class")?;
                for j in 1..=5 {
                    let dual = duals.iter().find(|e| !e.label.contains(&format!("a{}", j))).ok_or("missing dual class")?;
                    let class = coh.bracket(alg, &a.cocycle, &dual.cocycle).ok_or("bracket is not a cocycle")?;
                    if class.iter().any(|c| !c.is_zero()) {
                        return Ok(false);
                    }
                    let image = sn_bracket(&a.image, &dual.image, &cy).map_err(text)?;
                    let unit = image.coefficient(&[]).as_constant().map(|c| c.is_one() || (-&c).is_one()).unwrap_or(false);
                    let expected = if i == j { image.len() == 1 && unit } else { image.is_zero() };
                    if !expected {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })();
        out.push(holds("res_bracket_mismatch", "[res a_i, res z_j]_SN = +-delta_ij where the class bracket is 0", mismatch));
        out
    }
}
