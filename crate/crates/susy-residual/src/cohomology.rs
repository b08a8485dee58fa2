use std::collections::BTreeMap;

use graded_algebra::linalg::{nullspace, rank, solve_columns, EchelonBasis, SparseRow};
use graded_algebra::Scalar;

use crate::algebra::SuperLieAlgebra;
use crate::SusyError;

/// `H(g; [Q, -])` with chosen representatives.
#[derive(Clone, Debug)]
pub struct QCohomology {
    /// `(even, odd)` dimensions of the cohomology.
    pub sdim: (usize, usize),
    pub representatives: Vec<SparseRow>,
    pub kernel: Vec<SparseRow>,
    pub image: Vec<SparseRow>,
    columns: Vec<SparseRow>,
}

fn dense(v: Vec<Scalar>) -> SparseRow {
    v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

/// Kernel, image and a complement of the image in the kernel for `ad Q`.
pub fn q_cohomology(alg: &SuperLieAlgebra, q: &SparseRow) -> Result<QCohomology, SusyError> {
    if !q.is_empty() && alg.parity(q) != Some(true) {
        return Err(SusyError::NotOdd);
    }
    if !alg.bracket(q, q).is_empty() {
        return Err(SusyError::NotSquareZero);
    }
    let n = alg.dim();
    let columns: Vec<SparseRow> = (0..n).map(|b| alg.bracket(q, &alg.unit(b))).collect();
    let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for (b, col) in columns.iter().enumerate() {
        for (&r, v) in col {
            rows.entry(r).or_default().insert(b, v.clone());
        }
    }
    let kernel: Vec<SparseRow> = nullspace(rows.into_values(), n).into_iter().map(dense).collect();
    let mut image_basis = EchelonBasis::new();
    let mut image = Vec::new();
    for col in &columns {
        if image_basis.insert(col.clone()) {
            image.push(col.clone());
        }
    }
    let mut reps = Vec::new();
    for k in &kernel {
        if image_basis.insert(k.clone()) {
            reps.push(k.clone());
        }
    }
    let odd = reps.iter().filter(|r| alg.parity(r) == Some(true)).count();
    Ok(QCohomology { sdim: (reps.len() - odd, odd), representatives: reps, kernel, image, columns })
}

impl QCohomology {
    /// Rank of `[Q, -]` on the span of the given basis indices.
    pub fn rank_on(&self, indices: impl IntoIterator<Item = usize>) -> usize {
        rank(indices.into_iter().map(|i| self.columns[i].clone()))
    }

    /// `[Q, b_i]`.
    pub fn differential(&self, i: usize) -> &SparseRow {
        &self.columns[i]
    }

    pub fn is_cocycle(&self, v: &SparseRow) -> bool {
        let mut b = EchelonBasis::new();
        for k in &self.kernel {
            b.insert(k.clone());
        }
        b.contains(v)
    }

    pub fn is_exact(&self, v: &SparseRow) -> bool {
        let mut b = EchelonBasis::new();
        for k in &self.image {
            b.insert(k.clone());
        }
        b.contains(v)
    }

    /// Coordinates of the class of a cocycle on the representatives.
    pub fn class_coordinates(&self, v: &SparseRow) -> Option<Vec<Scalar>> {
        let cols: Vec<SparseRow> = self.representatives.iter().chain(self.image.iter()).cloned().collect();
        let x = solve_columns(&cols, v)?;
        Some(x[..self.representatives.len()].to_vec())
    }

    /// Class coordinates of `[h1, h2]`.
    pub fn bracket(&self, alg: &SuperLieAlgebra, h1: &SparseRow, h2: &SparseRow) -> Option<Vec<Scalar>> {
        self.class_coordinates(&alg.bracket(h1, h2))
    }
}
