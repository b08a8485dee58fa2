use std::collections::BTreeMap;

use graded_algebra::linalg::{nullspace, EchelonBasis, SparseRow};
use graded_algebra::{OddId, Scalar, VarId};

use crate::brane::BraneSpec;
use crate::superdiff::{Letter, SuperDiffOp};
use crate::BraneError;

/// Cohomology of a degree-raising differential on `C[z] (x) Lambda[odd]`, with the
/// `z`-degree truncated at `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedCohomology {
    /// Kernel dimension on the `z`-degree `<= n` part.
    pub kernel_dim: usize,
    /// Rank of the image of the `z`-degree `< n` part.
    pub image_rank: usize,
    /// Basis monomials of the kernel spanning a complement of the image.
    pub survivors: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ContractionReport {
    pub truncation: u32,
    /// Kernel of `f e2 -> z f` on `C[z] e2`.
    pub kernel_dim: usize,
    /// Cokernel representatives of the same map in `C[z]`.
    pub cokernel: Vec<String>,
    /// Survivors of `z d/de2` on `C[z] (x) Lambda[e1, e2]`.
    pub d3_survivors: Vec<String>,
}

impl ContractionReport {
    pub fn passed(&self) -> bool {
        self.kernel_dim == 0 && self.cokernel == ["1"] && self.d3_survivors == ["1", "e1"]
    }
}

fn basis(z: VarId, odd: &[OddId], n: u32) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for mask in 0..1usize << odd.len() {
        for k in 0..=n {
            let mut w: Vec<Letter> = odd.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &g)| Letter::Odd(g)).collect();
            w.extend(std::iter::repeat(Letter::Even(z)).take(k as usize));
            out.push(w);
        }
    }
    out
}

fn z_degree(w: &[Letter]) -> u32 {
    w.iter().filter(|l| matches!(l, Letter::Even(_))).count() as u32
}

/// Kernel, image and survivors of `d` on monomials `z^k e_S`, `k <= n`.
pub fn truncated_cohomology(d: &SuperDiffOp, z: VarId, odd: &[OddId], n: u32) -> TruncatedCohomology {
    let reg = d.registry();
    let source = basis(z, odd, n);
    let target = basis(z, odd, n + 1);
    let index: BTreeMap<&Vec<Letter>, usize> = target.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let column = |w: &Vec<Letter>| -> SparseRow {
        let f = SuperDiffOp::word(reg, Scalar::one(), w);
        d.apply(&f).terms().map(|(w, c)| (index[w], c.clone())).collect()
    };
    let columns: Vec<SparseRow> = source.iter().map(column).collect();
    // Kernel of the linear map: null space of the transposed rows.
    let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for (k, col) in columns.iter().enumerate() {
        for (&r, v) in col {
            rows.entry(r).or_default().insert(k, v.clone());
        }
    }
    let kernel_dim = nullspace(rows.into_values(), source.len()).len();
    let mut image = EchelonBasis::new();
    for (w, col) in source.iter().zip(&columns) {
        if z_degree(w) < n {
            image.insert(col.clone());
        }
    }
    let image_rank = image.rank();
    let mut survivors = Vec::new();
    let mut span = image.clone();
    for (w, col) in source.iter().zip(&columns) {
        if col.is_empty() {
            let row: SparseRow = [(index[w], Scalar::one())].into_iter().collect();
            if span.insert(row) {
                survivors.push(SuperDiffOp::word(reg, Scalar::one(), w).to_text());
            }
        }
    }
    TruncatedCohomology { kernel_dim, image_rank, survivors }
}

/// The D5 complex `C[z] e2 -> C[z]` and the D3 analogue with `e1` retained, both
/// driven by the deformation `z d/de2`.
pub fn complex_contraction_check(truncation: u32) -> Result<ContractionReport, BraneError> {
    let brane = BraneSpec::d3();
    let reg = brane.registry();
    let z = reg.var("z").ok_or_else(|| BraneError::UnknownCoordinate("z".into()))?;
    let e1 = reg.abstract_odd("e1").ok_or_else(|| BraneError::NoOddParameter("e1".into()))?;
    let e2 = reg.abstract_odd("e2").ok_or_else(|| BraneError::NoOddParameter("e2".into()))?;
    let d = SuperDiffOp::letter(&reg, Letter::Even(z)).compose(&SuperDiffOp::letter(&reg, Letter::DOdd(e2)));
    let d5 = truncated_cohomology(&d, z, &[e2], truncation);
    let on_e2: Vec<Vec<Letter>> = basis(z, &[e2], truncation).into_iter().filter(|w| w.contains(&Letter::Odd(e2))).collect();
    let kernel_dim = {
        let mut b = EchelonBasis::new();
        for w in &on_e2 {
            let img = d.apply(&SuperDiffOp::word(&reg, Scalar::one(), w));
            let row: SparseRow = img.terms().map(|(w, c)| (z_degree(w) as usize, c.clone())).collect();
            b.insert(row);
        }
        on_e2.len() - b.rank()
    };
    let d3 = truncated_cohomology(&d, z, &[e1, e2], truncation);
    Ok(ContractionReport { truncation, kernel_dim, cokernel: d5.survivors, d3_survivors: d3.survivors })
}
