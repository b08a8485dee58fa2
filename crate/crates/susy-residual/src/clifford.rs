use graded_algebra::linalg::{solve_columns, SparseRow};
use graded_algebra::Scalar;

/// Rank of the isotropic space `W`.
pub const RANK: usize = 5;
const DIM: usize = 1 << RANK;

/// Linear operator on `/\W` (basis indexed by subsets of `{1..5}` as bitmasks),
/// stored column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Op {
    cols: Vec<SparseRow>,
}

fn below(mask: usize, i: usize) -> u32 {
    (mask & ((1 << i) - 1)).count_ones()
}

impl Op {
    pub fn zero() -> Self {
        Op { cols: vec![SparseRow::new(); DIM] }
    }

    pub fn identity() -> Self {
        let mut op = Self::zero();
        for (c, col) in op.cols.iter_mut().enumerate() {
            col.insert(c, Scalar::one());
        }
        op
    }

    /// `a_i`: wedge with the `i`-th basis vector (0-based).
    pub fn wedge(i: usize) -> Self {
        let mut op = Self::zero();
        for s in 0..DIM {
            if s & (1 << i) == 0 {
                let sign = if below(s, i) % 2 == 0 { 1 } else { -1 };
                op.cols[s].insert(s | (1 << i), Scalar::from_int(sign));
            }
        }
        op
    }

    /// `a_i*`: contraction with the `i`-th dual basis vector.
    pub fn contract(i: usize) -> Self {
        let mut op = Self::zero();
        for s in 0..DIM {
            if s & (1 << i) != 0 {
                let sign = if below(s, i) % 2 == 0 { 1 } else { -1 };
                op.cols[s].insert(s & !(1 << i), Scalar::from_int(sign));
            }
        }
        op
    }

    pub fn apply(&self, v: &SparseRow) -> SparseRow {
        let mut out = SparseRow::new();
        for (&c, x) in v {
            for (&r, a) in &self.cols[c] {
                add_into(&mut out, r, &(a * x));
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> &SparseRow {
        &self.cols[c]
    }

    pub fn mul(&self, o: &Op) -> Op {
        Op { cols: o.cols.iter().map(|col| self.apply(col)).collect() }
    }

    pub fn add(&self, o: &Op) -> Op {
        let mut out = self.clone();
        for (c, col) in o.cols.iter().enumerate() {
            for (&r, v) in col {
                add_into(&mut out.cols[c], r, v);
            }
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> Op {
        Op { cols: self.cols.iter().map(|col| col.iter().map(|(&r, v)| (r, v * k)).filter(|(_, v)| !v.is_zero()).collect()).collect() }
    }

    pub fn sub(&self, o: &Op) -> Op {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn commutator(&self, o: &Op) -> Op {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Entries flattened to `row * 32 + col`.
    pub fn flatten(&self) -> SparseRow {
        let mut out = SparseRow::new();
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, v) in col {
                out.insert(r * DIM + c, v.clone());
            }
        }
        out
    }
}

pub(crate) fn add_into(row: &mut SparseRow, k: usize, v: &Scalar) {
    if v.is_zero() {
        return;
    }
    let zero = {
        let slot = row.entry(k).or_insert_with(Scalar::zero);
        *slot += v;
        slot.is_zero()
    };
    if zero {
        row.remove(&k);
    }
}

/// Coordinates of `target` in the span of `basis`, if it lies there.
pub fn coordinates(basis: &[Op], target: &Op) -> Option<Vec<Scalar>> {
    let cols: Vec<SparseRow> = basis.iter().map(|b| b.flatten()).collect();
    solve_columns(&cols, &target.flatten())
}

/// The spin module `/\W` of `so(10) = so(W + W*)` with `{a_i, a_j*} = delta_ij`.
#[derive(Clone, Debug)]
pub struct SpinorModule {
    /// `so(10)` generators as quadratic Clifford elements.
    pub so: Vec<(String, Op)>,
    /// `C^10 = W + W*`: `a_1..a_5` then `a_1*..a_5*`.
    pub vectors: Vec<(String, Op)>,
    /// Bitmasks of the even subsets, by degree then lexicographically.
    pub s_plus: Vec<usize>,
}

impl SpinorModule {
    pub fn new() -> Self {
        let mut so = Vec::new();
        let half = Scalar::from_ratio(1, 2);
        for i in 0..RANK {
            for j in 0..RANK {
                let mut op = Op::wedge(i).mul(&Op::contract(j));
                if i == j {
                    op = op.sub(&Op::identity().scale(&half));
                }
                so.push((format!("E{}{}", i + 1, j + 1), op));
            }
        }
        for i in 0..RANK {
            for j in i + 1..RANK {
                so.push((format!("P{}{}", i + 1, j + 1), Op::wedge(i).mul(&Op::wedge(j))));
            }
        }
        for i in 0..RANK {
            for j in i + 1..RANK {
                so.push((format!("M{}{}", i + 1, j + 1), Op::contract(i).mul(&Op::contract(j))));
            }
        }
        let mut vectors: Vec<(String, Op)> = (0..RANK).map(|i| (format!("a{}", i + 1), Op::wedge(i))).collect();
        vectors.extend((0..RANK).map(|i| (format!("a{}*", i + 1), Op::contract(i))));
        let mut s_plus: Vec<usize> = (0..DIM).filter(|s: &usize| s.count_ones() % 2 == 0).collect();
        s_plus.sort_by_key(|&s| (s.count_ones(), mask_key(s)));
        SpinorModule { so, vectors, s_plus }
    }

    pub fn vector_ops(&self) -> Vec<Op> {
        self.vectors.iter().map(|(_, o)| o.clone()).collect()
    }

    pub fn so_ops(&self) -> Vec<Op> {
        self.so.iter().map(|(_, o)| o.clone()).collect()
    }

    /// Position of a mask in the `S+` basis.
    pub fn spinor_index(&self, mask: usize) -> Option<usize> {
        self.s_plus.iter().position(|&s| s == mask)
    }

    /// Label such as `1`, `a1a2`, `a1a2a3a4`.
    pub fn spinor_label(mask: usize) -> String {
        if mask == 0 {
            return "1".into();
        }
        (0..RANK).filter(|i| mask & (1 << i) != 0).map(|i| format!("a{}", i + 1)).collect()
    }

    /// Cartan weight (doubled) of a spinor basis mask: `+1` where occupied, `-1` elsewhere.
    pub fn spinor_weight(mask: usize) -> [i32; RANK] {
        let mut w = [0; RANK];
        for (i, slot) in w.iter_mut().enumerate() {
            *slot = if mask & (1 << i) != 0 { 1 } else { -1 };
        }
        w
    }

    /// Doubled Cartan weight of vector `k`: `+2 e_i` for `a_i`, `-2 e_i` for `a_i*`.
    pub fn vector_weight(k: usize) -> [i32; RANK] {
        let mut w = [0; RANK];
        if k < RANK {
            w[k] = 2;
        } else {
            w[k - RANK] = -2;
        }
        w
    }

    /// Decompose a linear Clifford element on the vector basis.
    pub fn vector_coordinates(&self, op: &Op) -> Option<Vec<Scalar>> {
        coordinates(&self.vector_ops(), op)
    }
}

impl Default for SpinorModule {
    fn default() -> Self {
        Self::new()
    }
}

fn mask_key(s: usize) -> Vec<usize> {
    (0..RANK).filter(|i| s & (1 << i) != 0).collect()
}
