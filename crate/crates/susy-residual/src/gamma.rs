use std::collections::BTreeMap;

use graded_algebra::linalg::{nullspace, SparseRow};
use graded_algebra::Scalar;

use crate::clifford::{add_into, SpinorModule, RANK};
use crate::SusyError;

/// The equivariant symmetric pairing `Sym^2 S+ -> C^10`, on `S+` basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaPlus {
    table: BTreeMap<(usize, usize), SparseRow>,
}

impl GammaPlus {
    /// `Gamma(psi_s, psi_t)` as coordinates on `a_1..a_5, a_1*..a_5*`.
    pub fn basis(&self, s: usize, t: usize) -> SparseRow {
        let key = if s <= t { (s, t) } else { (t, s) };
        self.table.get(&key).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &SparseRow, y: &SparseRow) -> SparseRow {
        let mut out = SparseRow::new();
        for (&s, a) in x {
            for (&t, b) in y {
                let ab = a * b;
                for (&k, g) in &self.basis(s, t) {
                    add_into(&mut out, k, &(g * &ab));
                }
            }
        }
        out
    }

    /// Largest violation of `Gamma(X x, y) + Gamma(x, X y) = X Gamma(x, y)`
    /// over all generators and basis pairs, as the number of failing cases.
    pub fn equivariance_residual(&self, module: &SpinorModule) -> usize {
        let actions = Actions::new(module);
        let n = module.s_plus.len();
        let mut failures = 0;
        for x in 0..actions.spinor.len() {
            for s in 0..n {
                for t in s..n {
                    let lhs = {
                        let mut a = self.eval(&actions.spinor[x][s], &unit(t));
                        for (k, v) in self.eval(&unit(s), &actions.spinor[x][t]) {
                            add_into(&mut a, k, &v);
                        }
                        a
                    };
                    let rhs = actions.on_vector(x, &self.basis(s, t));
                    if lhs != rhs {
                        failures += 1;
                    }
                }
            }
        }
        failures
    }
}

pub(crate) fn unit(i: usize) -> SparseRow {
    SparseRow::from([(i, Scalar::one())])
}

/// `so(10)` acting on `S+` (columns in `S+` coordinates) and on `C^10`.
pub(crate) struct Actions {
    pub spinor: Vec<Vec<SparseRow>>,
    pub vector: Vec<Vec<SparseRow>>,
}

impl Actions {
    pub fn new(module: &SpinorModule) -> Self {
        let spinor = module
            .so
            .iter()
            .map(|(_, op)| module.s_plus.iter().map(|&s| to_s_plus(module, &op.column(s).clone())).collect())
            .collect();
        let vops = module.vector_ops();
        let vector = module
            .so
            .iter()
            .map(|(_, op)| {
                vops.iter()
                    .map(|v| {
                        let c = module.vector_coordinates(&op.commutator(v)).expect("so(10) preserves C^10");
                        c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
                    })
                    .collect()
            })
            .collect();
        Actions { spinor, vector }
    }

    pub fn on_vector(&self, x: usize, v: &SparseRow) -> SparseRow {
        let mut out = SparseRow::new();
        for (&k, a) in v {
            for (&w, b) in &self.vector[x][k] {
                add_into(&mut out, w, &(a * b));
            }
        }
        out
    }
}

/// Re-index a vector on `/\W` masks to `S+` positions (it must be even).
pub(crate) fn to_s_plus(module: &SpinorModule, v: &SparseRow) -> SparseRow {
    v.iter().map(|(&m, x)| (module.spinor_index(m).expect("even spinor"), x.clone())).collect()
}

fn weight_sum(a: [i32; RANK], b: [i32; RANK]) -> [i32; RANK] {
    let mut w = [0; RANK];
    for i in 0..RANK {
        w[i] = a[i] + b[i];
    }
    w
}

/// Solve the equivariance system on weight-compatible unknowns; the solution
/// space must be a line, normalized by `Gamma(1, a1a2a3a4) = a5*`.
pub fn build_gamma_plus(module: &SpinorModule) -> Result<GammaPlus, SusyError> {
    let n = module.s_plus.len();
    let mut unknowns: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for s in 0..n {
        for t in s..n {
            let w = weight_sum(SpinorModule::spinor_weight(module.s_plus[s]), SpinorModule::spinor_weight(module.s_plus[t]));
            for k in 0..2 * RANK {
                if SpinorModule::vector_weight(k) == w {
                    let id = unknowns.len();
                    unknowns.insert((s, t, k), id);
                }
            }
        }
    }
    let var = |s: usize, t: usize, k: usize| unknowns.get(&if s <= t { (s, t, k) } else { (t, s, k) }).copied();
    let actions = Actions::new(module);
    let mut rows = Vec::new();
    for x in 0..module.so.len() {
        for s in 0..n {
            for t in s..n {
                for w in 0..2 * RANK {
                    let mut row = SparseRow::new();
                    for (&u, a) in &actions.spinor[x][s] {
                        if let Some(id) = var(u, t, w) {
                            add_into(&mut row, id, a);
                        }
                    }
                    for (&u, b) in &actions.spinor[x][t] {
                        if let Some(id) = var(s, u, w) {
                            add_into(&mut row, id, b);
                        }
                    }
                    for v in 0..2 * RANK {
                        if let (Some(id), Some(c)) = (var(s, t, v), actions.vector[x][v].get(&w)) {
                            add_into(&mut row, id, &-c);
                        }
                    }
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let null = nullspace(rows, unknowns.len());
    if null.len() != 1 {
        return Err(SusyError::GammaSolve(null.len()));
    }
    let sol = &null[0];
    let vac = module.spinor_index(0).unwrap();
    let top = module.spinor_index(0b01111).unwrap();
    let anchor = var(vac, top, RANK + 4).ok_or(SusyError::GammaSolve(0))?;
    let scale = sol[anchor].inv();
    let mut table: BTreeMap<(usize, usize), SparseRow> = BTreeMap::new();
    for (&(s, t, k), &id) in &unknowns {
        let v = &sol[id] * &scale;
        if !v.is_zero() {
            table.entry((s, t)).or_default().insert(k, v);
        }
    }
    Ok(GammaPlus { table })
}

/// Oracle: `B(Gamma(x, y), v) = beta(x, v y)` with `beta` the top-degree
/// part of `reverse(x) ^ y'` and `B(a_i, a_j*) = delta_ij`.
pub fn gamma_top_wedge(module: &SpinorModule, s: usize, t: usize) -> SparseRow {
    let x = module.s_plus[s];
    let y = module.s_plus[t];
    let vops = module.vector_ops();
    let mut out = SparseRow::new();
    for (k, v) in vops.iter().enumerate() {
        let vy = v.column(y).clone();
        let mut pairing = Scalar::zero();
        for (&m, c) in &vy {
            if let Some(sign) = top_pairing(x, m) {
                pairing += &(c * &Scalar::from_int(sign));
            }
        }
        if !pairing.is_zero() {
            // The dual of a_i under B is a_i*, and conversely.
            let dual = if k < RANK { k + RANK } else { k - RANK };
            out.insert(dual, pairing);
        }
    }
    out
}

/// Sign of `reverse(e_x) ^ e_m = sign * e_{12345}` when `x`, `m` are complementary.
fn top_pairing(x: usize, m: usize) -> Option<i64> {
    if x & m != 0 || (x | m) != (1 << RANK) - 1 {
        return None;
    }
    let k = x.count_ones() as usize;
    let mut inversions = k * k.saturating_sub(1) / 2;
    for i in 0..RANK {
        for j in 0..i {
            if x & (1 << i) != 0 && m & (1 << j) != 0 {
                inversions += 1;
            }
        }
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}
