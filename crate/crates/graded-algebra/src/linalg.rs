//! Exact linear algebra over the Gaussian rationals on sparse rows.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

pub type SparseRow = BTreeMap<usize, Scalar>;

/// Row-echelon basis built incrementally; each stored row has a pivot column
/// with coefficient 1 that no other stored row touches.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<SparseRow>,
    pivots: BTreeMap<usize, usize>,
}

fn axpy(target: &mut SparseRow, a: &Scalar, row: &SparseRow) {
    for (&c, v) in row {
        let remove = {
            let slot = target.entry(c).or_insert_with(Scalar::zero);
            *slot -= &(a * v);
            slot.is_zero()
        };
        if remove {
            target.remove(&c);
        }
    }
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the basis.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let cols: Vec<usize> = row.keys().copied().collect();
        for c in cols {
            if let Some(&r) = self.pivots.get(&c) {
                if let Some(a) = row.get(&c).cloned() {
                    axpy(&mut row, &a, &self.rows[r]);
                }
            }
        }
        row
    }

    /// Insert a row; returns true when it was independent.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let (&p, lead) = match row.iter().next() {
            None => return false,
            Some(x) => x,
        };
        let inv = lead.inv();
        let row: SparseRow = row.iter().map(|(&c, v)| (c, v * &inv)).collect();
        for other in self.rows.iter_mut() {
            if let Some(a) = other.get(&p).cloned() {
                axpy(other, &a, &row);
            }
        }
        self.pivots.insert(p, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Basis of `{x : row . x = 0 for all rows}` in `ncols` unknowns.
    pub fn nullspace(&self, ncols: usize) -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        for free in (0..ncols).filter(|c| !self.pivots.contains_key(c)) {
            let mut v = vec![Scalar::zero(); ncols];
            v[free] = Scalar::one();
            for (&p, &r) in &self.pivots {
                if let Some(a) = self.rows[r].get(&free) {
                    v[p] = -a;
                }
            }
            out.push(v);
        }
        out
    }
}

pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut b = EchelonBasis::new();
    for r in rows {
        b.insert(r);
    }
    b.rank()
}

pub fn nullspace(rows: impl IntoIterator<Item = SparseRow>, ncols: usize) -> Vec<Vec<Scalar>> {
    let mut b = EchelonBasis::new();
    for r in rows {
        b.insert(r);
    }
    b.nullspace(ncols)
}

pub fn dense_to_sparse(v: &[Scalar]) -> SparseRow {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Solve `sum_k x_k columns[k] = target`; returns one solution if any.
pub fn solve_columns(columns: &[SparseRow], target: &SparseRow) -> Option<Vec<Scalar>> {
    // Work with the transposed system: unknown k multiplies column k.
    let n = columns.len();
    let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for (k, col) in columns.iter().enumerate() {
        for (&r, v) in col {
            rows.entry(r).or_default().insert(k, v.clone());
        }
    }
    for (&r, v) in target {
        rows.entry(r).or_default().insert(n, v.clone());
    }
    let mut b = EchelonBasis::new();
    for (_, row) in rows {
        b.insert(row);
    }
    if b.pivots.contains_key(&n) {
        return None;
    }
    let mut x = vec![Scalar::zero(); n];
    for (&p, &r) in &b.pivots {
        if let Some(v) = b.rows[r].get(&n) {
            x[p] = v.clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> SparseRow {
        dense_to_sparse(&v.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])];
        assert_eq!(rank(rows.clone()), 2);
        let ns = nullspace(rows.clone(), 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            let dot = r.iter().fold(Scalar::zero(), |acc, (&c, v)| &acc + &(v * &ns[0][c]));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_small() {
        let cols = vec![row(&[1, 0]), row(&[1, 1])];
        let x = solve_columns(&cols, &row(&[3, 2])).unwrap();
        assert_eq!(x, vec![Scalar::from_int(1), Scalar::from_int(2)]);
        assert!(solve_columns(&[row(&[1, 0])], &row(&[0, 1])).is_none());
    }
}
