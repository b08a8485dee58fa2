use branes_open_closed::{clifford_deformation_check, star_basis, BASIS_LABELS};
use graded_algebra::Scalar;

use super::{equal, Suite, SuiteContext};
use crate::report::Check;

pub struct Clifford;

impl Suite for Clifford {
    fn name(&self) -> &'static str {
        "clifford"
    }

    fn run(&self, _ctx: &SuiteContext) -> Vec<Check> {
        let r = clifford_deformation_check();
        let element = |e: &[Scalar; 4]| {
            let parts: Vec<String> = e.iter().zip(BASIS_LABELS).filter(|(c, _)| !c.is_zero()).map(|(c, l)| format!("{}*{}", c, l)).collect();
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" + ")
            }
        };
        vec![
            Check::new("associative", "deformed product on Lambda[e1, e2] is associative", r.associative),
            Check::new("unital", "deformed product has unit 1", r.unital),
            equal("anticommutator", "e1 * e2 + e2 * e1 = 1", Ok(element(&r.anticommutator)), "1*1".to_string()),
            equal("undeformed_anticommutator", "wedge anticommutator vanishes", Ok(element(&r.undeformed_anticommutator)), "0".to_string()),
            equal("center", "deformed algebra has scalar center", Ok(r.center_dim), 1),
            Check::new("representation_homomorphism", "2x2 matrix model is an algebra map", r.homomorphism),
            equal("representation_rank", "2x2 matrix model is bijective", Ok(r.representation_rank), 4),
            Check::new("matrix_units", "preimages of elementary matrices multiply as matrix units", r.matrix_units),
            equal("top_square", "(e1 e2) * (e1 e2) = 1/4", Ok(element(&star_basis(3, 3))), "1/4*1".to_string()),
        ]
    }
}
