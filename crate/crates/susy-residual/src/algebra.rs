use std::collections::BTreeMap;

use graded_algebra::linalg::SparseRow;
use graded_algebra::Scalar;

use crate::clifford::add_into;
use crate::SusyError;

/// Finite-dimensional Lie superalgebra by structure constants `[b_i, b_j]`
/// stored for `i <= j`.
#[derive(Clone, Debug)]
pub struct SuperLieAlgebra {
    labels: Vec<String>,
    odd: Vec<bool>,
    table: BTreeMap<(usize, usize), SparseRow>,
}

impl SuperLieAlgebra {
    /// Build and validate graded antisymmetry and graded Jacobi.
    pub fn new(labels: Vec<String>, odd: Vec<bool>, table: BTreeMap<(usize, usize), SparseRow>) -> Result<Self, SusyError> {
        let alg = Self::unchecked(labels, odd, table)?;
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// Build checking only graded antisymmetry of the diagonal.
    pub fn unchecked(labels: Vec<String>, odd: Vec<bool>, table: BTreeMap<(usize, usize), SparseRow>) -> Result<Self, SusyError> {
        let table: BTreeMap<_, _> = table.into_iter().filter(|(_, v)| !v.is_empty()).collect();
        for (&(i, j), v) in &table {
            if i > j {
                return Err(SusyError::Table(format!("entry ({}, {}) below the diagonal", labels[i], labels[j])));
            }
            if i == j && !odd[i] && !v.is_empty() {
                return Err(SusyError::Table(format!("[{0}, {0}] of an even element is nonzero", labels[i])));
            }
        }
        Ok(SuperLieAlgebra { labels, odd, table })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `(even, odd)` dimensions.
    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.odd.iter().filter(|&&o| o).count();
        (self.dim() - odd, odd)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.odd[i]
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> SparseRow {
        if i <= j {
            return self.table.get(&(i, j)).cloned().unwrap_or_default();
        }
        let v = self.table.get(&(j, i)).cloned().unwrap_or_default();
        let symmetric = self.odd[i] && self.odd[j];
        if symmetric {
            v
        } else {
            v.into_iter().map(|(k, x)| (k, -x)).collect()
        }
    }

    pub fn bracket(&self, x: &SparseRow, y: &SparseRow) -> SparseRow {
        let mut out = SparseRow::new();
        for (&i, a) in x {
            for (&j, b) in y {
                let ab = a * b;
                for (k, c) in self.basis_bracket(i, j) {
                    add_into(&mut out, k, &(&c * &ab));
                }
            }
        }
        out
    }

    /// Parity of a homogeneous element, `None` for zero or mixed.
    pub fn parity(&self, x: &SparseRow) -> Option<bool> {
        let mut it = x.keys().map(|&k| self.odd[k]);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn unit(&self, i: usize) -> SparseRow {
        SparseRow::from([(i, Scalar::one())])
    }

    fn check_jacobi(&self) -> Result<(), SusyError> {
        let n = self.dim();
        for i in 0..n {
            let ei = self.unit(i);
            for j in i..n {
                let ej = self.unit(j);
                let ij = self.basis_bracket(i, j);
                for k in j..n {
                    let ek = self.unit(k);
                    let lhs = self.bracket(&ei, &self.basis_bracket(j, k));
                    let mut rhs = self.bracket(&ij, &ek);
                    let sign = if self.odd[i] && self.odd[j] { 1 } else { -1 };
                    for (m, v) in self.bracket(&ej, &self.basis_bracket(i, k)) {
                        add_into(&mut rhs, m, &(&v * &Scalar::from_int(-sign)));
                    }
                    if lhs != rhs {
                        return Err(SusyError::Jacobi(self.labels[i].clone(), self.labels[j].clone(), self.labels[k].clone()));
                    }
                }
            }
        }
        Ok(())
    }
}
