//! Even variables and odd generators, with the canonical odd order.

use std::collections::HashMap;
use std::sync::Arc;

use crate::poly::VarId;

/// Odd-generator index; ids increase along the canonical order.
pub type OddId = u16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EvenKind {
    HolCoord,
    AntiHolCoord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenVariable {
    pub id: VarId,
    pub name: String,
    pub kind: EvenKind,
    pub conjugate_of: Option<VarId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OddKind {
    /// `eps`, `eM`, `e1`, ...
    Abstract(String),
    /// Holomorphic form leg `dz`.
    DeRhamForm(VarId),
    /// Antiholomorphic form leg `dz~`, printed `db<coord>`.
    AntiHolForm(VarId),
    /// Polyvector leg `theta_z`, printed `D<coord>`.
    PolyvectorDir(VarId),
}

impl OddKind {
    fn block(&self) -> u8 {
        match self {
            OddKind::Abstract(_) => 0,
            OddKind::DeRhamForm(_) => 1,
            OddKind::AntiHolForm(_) => 2,
            OddKind::PolyvectorDir(_) => 3,
        }
    }

    pub fn coordinate(&self) -> Option<VarId> {
        match self {
            OddKind::Abstract(_) => None,
            OddKind::DeRhamForm(v) | OddKind::AntiHolForm(v) | OddKind::PolyvectorDir(v) => Some(*v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddGenerator {
    pub id: OddId,
    pub kind: OddKind,
    pub display: String,
}

#[derive(Debug, PartialEq, Eq)]
pub struct GeneratorRegistry {
    even: Vec<EvenVariable>,
    odd: Vec<OddGenerator>,
    names: HashMap<String, Symbol>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Even(VarId),
    Odd(OddId),
}

impl GeneratorRegistry {
    pub fn builder() -> RegistryBuilder {
        RegistryBuilder::default()
    }

    pub fn even_vars(&self) -> &[EvenVariable] {
        &self.even
    }

    pub fn odd_gens(&self) -> &[OddGenerator] {
        &self.odd
    }

    pub fn even(&self, v: VarId) -> &EvenVariable {
        &self.even[v as usize]
    }

    pub fn odd(&self, g: OddId) -> &OddGenerator {
        &self.odd[g as usize]
    }

    pub fn lookup(&self, name: &str) -> Option<Symbol> {
        self.names.get(name).copied()
    }

    pub fn var(&self, name: &str) -> Option<VarId> {
        match self.lookup(name) {
            Some(Symbol::Even(v)) => Some(v),
            _ => None,
        }
    }

    pub fn odd_by_name(&self, name: &str) -> Option<OddId> {
        match self.lookup(name) {
            Some(Symbol::Odd(g)) => Some(g),
            _ => None,
        }
    }

    fn find_odd(&self, kind: &OddKind) -> Option<OddId> {
        self.odd.iter().find(|g| &g.kind == kind).map(|g| g.id)
    }

    pub fn theta(&self, coord: VarId) -> Option<OddId> {
        self.find_odd(&OddKind::PolyvectorDir(coord))
    }

    pub fn dbar_form(&self, coord: VarId) -> Option<OddId> {
        self.find_odd(&OddKind::AntiHolForm(coord))
    }

    pub fn d_form(&self, coord: VarId) -> Option<OddId> {
        self.find_odd(&OddKind::DeRhamForm(coord))
    }

    pub fn abstract_odd(&self, name: &str) -> Option<OddId> {
        self.find_odd(&OddKind::Abstract(name.to_string()))
    }

    pub fn conjugate(&self, v: VarId) -> Option<VarId> {
        let ev = self.even(v);
        if let Some(c) = ev.conjugate_of {
            return Some(c);
        }
        self.even.iter().find(|e| e.conjugate_of == Some(v)).map(|e| e.id)
    }

    pub fn var_name(&self, v: VarId) -> String {
        self.even[v as usize].name.clone()
    }

    pub fn holomorphic_coords(&self) -> Vec<VarId> {
        self.even.iter().filter(|e| e.kind == EvenKind::HolCoord).map(|e| e.id).collect()
    }
}

/// Collects generators, then assigns odd ids in canonical block order: abstract
/// generators (registration order), then form legs `dz`, then `dz~`, then
/// polyvector legs, each block in coordinate order.
#[derive(Default)]
pub struct RegistryBuilder {
    even: Vec<EvenVariable>,
    abstract_odd: Vec<String>,
    coords: Vec<VarId>,
}

impl RegistryBuilder {
    fn push_even(&mut self, name: &str, kind: EvenKind, conjugate_of: Option<VarId>) -> VarId {
        let id = self.even.len() as VarId;
        self.even.push(EvenVariable { id, name: name.to_string(), kind, conjugate_of });
        id
    }

    /// Holomorphic coordinate together with its conjugate `name~` and the odd
    /// legs `Dname`, `dbname`, `dname`.
    pub fn coordinate(mut self, name: &str) -> Self {
        let z = self.push_even(name, EvenKind::HolCoord, None);
        self.push_even(&format!("{}~", name), EvenKind::AntiHolCoord, Some(z));
        self.coords.push(z);
        self
    }

    pub fn coordinates(mut self, names: &[&str]) -> Self {
        for n in names {
            self = self.coordinate(n);
        }
        self
    }

    pub fn abstract_odd(mut self, name: &str) -> Self {
        self.abstract_odd.push(name.to_string());
        self
    }

    pub fn build(self) -> Arc<GeneratorRegistry> {
        let mut odd = Vec::new();
        for a in &self.abstract_odd {
            odd.push((OddKind::Abstract(a.clone()), a.clone()));
        }
        let name = |v: VarId| self.even[v as usize].name.clone();
        for &c in &self.coords {
            odd.push((OddKind::DeRhamForm(c), format!("d{}", name(c))));
        }
        for &c in &self.coords {
            odd.push((OddKind::AntiHolForm(c), format!("db{}", name(c))));
        }
        for &c in &self.coords {
            odd.push((OddKind::PolyvectorDir(c), format!("D{}", name(c))));
        }
        debug_assert!(odd.windows(2).all(|w| w[0].0.block() <= w[1].0.block()));
        let odd: Vec<OddGenerator> = odd
            .into_iter()
            .enumerate()
            .map(|(i, (kind, display))| OddGenerator { id: i as OddId, kind, display })
            .collect();
        let mut names = HashMap::new();
        for e in &self.even {
            assert!(names.insert(e.name.clone(), Symbol::Even(e.id)).is_none(), "duplicate name {}", e.name);
        }
        for g in &odd {
            assert!(names.insert(g.display.clone(), Symbol::Odd(g.id)).is_none(), "duplicate name {}", g.display);
        }
        Arc::new(GeneratorRegistry { even: self.even, odd, names })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_blocks() {
        let reg = GeneratorRegistry::builder().coordinates(&["z", "w1"]).abstract_odd("eps").build();
        let order: Vec<&str> = reg.odd_gens().iter().map(|g| g.display.as_str()).collect();
        assert_eq!(order, ["eps", "dz", "dw1", "dbz", "dbw1", "Dz", "Dw1"]);
        let z = reg.var("z").unwrap();
        assert_eq!(reg.conjugate(z), reg.var("z~"));
    }
}
