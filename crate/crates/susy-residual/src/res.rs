use std::sync::Arc;

use graded_algebra::linalg::{solve_columns, SparseRow};
use graded_algebra::{GeneratorRegistry, Multivector, OddId, RatFunc, Scalar};

use crate::clifford::RANK;
use crate::cohomology::QCohomology;
use crate::siso::Siso;
use crate::SusyError;

/// Summands of `H(siso; Q)` for `Q = 1 (x) e_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Summand {
    Sl5,
    Wedge3V,
    V,
    OddOne,
    OddWedge2V,
    OddVDual,
}

impl Summand {
    pub fn name(self) -> &'static str {
        match self {
            Summand::Sl5 => "sl(5)",
            Summand::Wedge3V => "/\\3 V",
            Summand::V => "V",
            Summand::OddOne => "Pi C",
            Summand::OddWedge2V => "Pi /\\2 V",
            Summand::OddVDual => "Pi V*",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ResEntry {
    pub summand: Summand,
    pub label: String,
    pub cocycle: SparseRow,
    pub image: Multivector,
}

/// The map from cohomology classes to polyvector fields on `C^5`.
#[derive(Clone, Debug)]
pub struct ResMap {
    pub registry: Arc<GeneratorRegistry>,
    pub entries: Vec<ResEntry>,
    image_cols: Vec<SparseRow>,
}

/// `(-1)^inv` of the sequence.
fn perm_sign(seq: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

impl ResMap {
    pub fn new(siso: &Siso, coh: &QCohomology) -> Result<Self, SusyError> {
        let names: Vec<String> = (1..=RANK).map(|i| format!("z{}", i)).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let reg = GeneratorRegistry::builder().coordinates(&refs).build();
        let z = |i: usize| Multivector::var(&reg, reg.var(&names[i]).unwrap());
        let th = |i: usize| -> OddId { reg.theta(reg.var(&names[i]).unwrap()).unwrap() };
        let legs = |ids: &[usize]| Multivector::term(&reg, RatFunc::one(), &ids.iter().map(|&i| th(i)).collect::<Vec<_>>());
        let e = |k: usize| SparseRow::from([(k, Scalar::one())]);
        let mut entries = Vec::new();
        let so_index = |label: &str| siso.module.so.iter().position(|(l, _)| l == label).unwrap();
        for i in 0..RANK {
            for j in 0..RANK {
                if i != j {
                    entries.push(ResEntry {
                        summand: Summand::Sl5,
                        label: format!("E{}{}", i + 1, j + 1),
                        cocycle: e(Siso::so(so_index(&format!("E{}{}", i + 1, j + 1)))),
                        image: z(j).wedge(&legs(&[i])).neg(),
                    });
                }
            }
        }
        for i in 0..RANK - 1 {
            let mut c = e(Siso::so(so_index(&format!("E{}{}", i + 1, i + 1))));
            c.insert(Siso::so(so_index(&format!("E{}{}", i + 2, i + 2))), Scalar::from_int(-1));
            entries.push(ResEntry {
                summand: Summand::Sl5,
                label: format!("H{}", i + 1),
                cocycle: c,
                image: z(i + 1).wedge(&legs(&[i + 1])).sub(&z(i).wedge(&legs(&[i]))),
            });
        }
        for l in 0..RANK {
            for m in l + 1..RANK {
                let rest: Vec<usize> = (0..RANK).filter(|&k| k != l && k != m).collect();
                let sign = perm_sign(&[vec![l, m], rest.clone()].concat());
                entries.push(ResEntry {
                    summand: Summand::Wedge3V,
                    label: format!("M{}{}", l + 1, m + 1),
                    cocycle: e(Siso::so(so_index(&format!("M{}{}", l + 1, m + 1)))),
                    image: legs(&rest).scale(&Scalar::from_int(sign)),
                });
            }
        }
        for i in 0..RANK {
            entries.push(ResEntry { summand: Summand::V, label: format!("a{}", i + 1), cocycle: e(Siso::translation(i)), image: legs(&[i]) });
        }
        entries.push(ResEntry { summand: Summand::OddOne, label: "1@e2".into(), cocycle: siso.spinor_element(0, 1), image: Multivector::zero(&reg) });
        for i in 0..RANK {
            for j in i + 1..RANK {
                entries.push(ResEntry {
                    summand: Summand::OddWedge2V,
                    label: format!("a{}a{}@e2", i + 1, j + 1),
                    cocycle: siso.spinor_element((1 << i) | (1 << j), 1),
                    image: legs(&[i, j]),
                });
            }
        }
        for i in 0..RANK {
            let rest: Vec<usize> = (0..RANK).filter(|&k| k != i).collect();
            let mask = rest.iter().fold(0, |acc, &k| acc | (1 << k));
            let sign = perm_sign(&[rest.clone(), vec![i]].concat());
            entries.push(ResEntry {
                summand: Summand::OddVDual,
                label: format!("{}@e2", rest.iter().map(|k| format!("a{}", k + 1)).collect::<String>()),
                cocycle: siso.spinor_element(mask, 1),
                image: z(i).scale(&Scalar::from_int(sign)),
            });
        }
        for entry in &entries {
            if !coh.is_cocycle(&entry.cocycle) {
                return Err(SusyError::NotCocycle(entry.label.clone()));
            }
        }
        let map = ResMap { registry: reg, entries, image_cols: coh.image.clone() };
        let total = coh.sdim.0 + coh.sdim.1;
        if map.entries.len() != total || map.entries.iter().any(|e| map.coordinates(&e.cocycle).is_none()) {
            return Err(SusyError::Table("summand basis does not match the cohomology".into()));
        }
        Ok(map)
    }

    /// Coordinates of a cocycle on the summand basis modulo exact elements.
    pub fn coordinates(&self, v: &SparseRow) -> Option<Vec<Scalar>> {
        let cols: Vec<SparseRow> = self.entries.iter().map(|e| e.cocycle.clone()).chain(self.image_cols.iter().cloned()).collect();
        let x = solve_columns(&cols, v)?;
        Some(x[..self.entries.len()].to_vec())
    }

    /// Image of the class of `v`; errors when `v` is not a combination of the
    /// summand representatives modulo exact elements.
    pub fn res_map(&self, v: &SparseRow) -> Result<Multivector, SusyError> {
        let x = self.coordinates(v).ok_or(SusyError::NotExpressible)?;
        let mut out = Multivector::zero(&self.registry);
        for (c, e) in x.iter().zip(&self.entries) {
            if !c.is_zero() {
                out = out.add(&e.image.scale(c));
            }
        }
        Ok(out)
    }

    pub fn entry(&self, label: &str) -> Option<&ResEntry> {
        self.entries.iter().find(|e| e.label == label)
    }
}
