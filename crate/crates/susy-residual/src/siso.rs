use std::collections::BTreeMap;

use graded_algebra::linalg::SparseRow;
use graded_algebra::Scalar;

use crate::algebra::SuperLieAlgebra;
use crate::clifford::{coordinates, SpinorModule};
use crate::gamma::{build_gamma_plus, Actions, GammaPlus};
use crate::SusyError;

pub const SO_DIM: usize = 45;
pub const VEC_DIM: usize = 10;
pub const SPINOR_DIM: usize = 16;

/// `so(10) x| T^(2,0)`: basis `so(10)` (45), translations `C^10` (10), then
/// `S+ (x) e_1` and `S+ (x) e_2` (16 each).
#[derive(Clone, Debug)]
pub struct Siso {
    pub module: SpinorModule,
    pub gamma: GammaPlus,
    pub algebra: SuperLieAlgebra,
}

impl Siso {
    pub fn so(k: usize) -> usize {
        k
    }

    pub fn translation(k: usize) -> usize {
        SO_DIM + k
    }

    /// Basis index of `psi_s (x) e_(j+1)`.
    pub fn spinor(s: usize, j: usize) -> usize {
        SO_DIM + VEC_DIM + j * SPINOR_DIM + s
    }

    /// `psi (x) e_(j+1)` for `psi` a wedge of `a_i` given by its bitmask.
    pub fn spinor_element(&self, mask: usize, j: usize) -> SparseRow {
        let s = self.module.spinor_index(mask).expect("even mask");
        SparseRow::from([(Self::spinor(s, j), Scalar::one())])
    }

    /// The supercharge `1 (x) e_1`.
    pub fn standard_supercharge(&self) -> SparseRow {
        self.spinor_element(0, 0)
    }
}

fn sparse(v: Vec<Scalar>, offset: usize) -> SparseRow {
    v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k + offset, x)).collect()
}

/// Assemble the structure constants and validate them.
pub fn build_siso() -> Result<Siso, SusyError> {
    let module = SpinorModule::new();
    let gamma = build_gamma_plus(&module)?;
    let actions = Actions::new(&module);
    let so_ops = module.so_ops();
    let mut labels: Vec<String> = module.so.iter().map(|(l, _)| l.clone()).collect();
    labels.extend(module.vectors.iter().map(|(l, _)| l.clone()));
    for j in 0..2 {
        for &m in &module.s_plus {
            labels.push(format!("{}@e{}", SpinorModule::spinor_label(m), j + 1));
        }
    }
    let mut odd = vec![false; SO_DIM + VEC_DIM];
    odd.extend(vec![true; 2 * SPINOR_DIM]);

    let mut table: BTreeMap<(usize, usize), SparseRow> = BTreeMap::new();
    for a in 0..SO_DIM {
        for b in a + 1..SO_DIM {
            let c = coordinates(&so_ops, &so_ops[a].commutator(&so_ops[b])).ok_or_else(|| SusyError::Table("so(10) not closed".into()))?;
            table.insert((Siso::so(a), Siso::so(b)), sparse(c, 0));
        }
        for k in 0..VEC_DIM {
            let v: SparseRow = actions.vector[a][k].iter().map(|(&l, x)| (Siso::translation(l), x.clone())).collect();
            table.insert((Siso::so(a), Siso::translation(k)), v);
        }
        for j in 0..2 {
            for s in 0..SPINOR_DIM {
                let v: SparseRow = actions.spinor[a][s].iter().map(|(&u, x)| (Siso::spinor(u, j), x.clone())).collect();
                table.insert((Siso::so(a), Siso::spinor(s, j)), v);
            }
        }
    }
    for j in 0..2 {
        for s in 0..SPINOR_DIM {
            for t in s..SPINOR_DIM {
                let v: SparseRow = gamma.basis(s, t).into_iter().map(|(k, x)| (Siso::translation(k), x)).collect();
                table.insert((Siso::spinor(s, j), Siso::spinor(t, j)), v);
            }
        }
    }
    let algebra = SuperLieAlgebra::new(labels, odd, table)?;
    Ok(Siso { module, gamma, algebra })
}
