//! Multivectors: finite sums `coefficient * odd monomial` with sorted odd monomials.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::poly::{Poly, VarId};
use crate::ratfunc::RatFunc;
use crate::registry::{GeneratorRegistry, OddId, OddKind};
use crate::scalar::Scalar;
use crate::AlgebraError;

/// Strictly increasing list of odd ids.
pub type OddMonomial = Vec<OddId>;

/// Per-term grading: polyvector legs, antiholomorphic form legs, holomorphic
/// form legs, abstract legs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bidegree {
    pub i: usize,
    pub j: usize,
    pub a: usize,
    pub e: usize,
}

impl Bidegree {
    pub fn total(&self) -> usize {
        self.i + self.j + self.a + self.e
    }
}

/// Sort an odd sequence, returning the Koszul sign, or `None` on a repeat.
pub fn sort_with_sign(seq: &[OddId]) -> Option<(OddMonomial, i32)> {
    let mut v = seq.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some((v, sign))
}

/// Sign and product of two sorted monomials, or `None` if they overlap.
pub fn merge_sign(a: &[OddId], b: &[OddId]) -> Option<(OddMonomial, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut sign = 1;
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            // b[j] moves past the remaining a.len() - i factors of a.
            if (a.len() - i) % 2 == 1 {
                sign = -sign;
            }
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, sign))
}

#[derive(Clone)]
pub struct Multivector {
    reg: Arc<GeneratorRegistry>,
    terms: BTreeMap<OddMonomial, RatFunc>,
}

impl Multivector {
    pub fn zero(reg: &Arc<GeneratorRegistry>) -> Self {
        Multivector { reg: reg.clone(), terms: BTreeMap::new() }
    }

    pub fn one(reg: &Arc<GeneratorRegistry>) -> Self {
        Self::scalar(reg, RatFunc::one())
    }

    pub fn scalar(reg: &Arc<GeneratorRegistry>, c: RatFunc) -> Self {
        let mut m = Self::zero(reg);
        m.add_term(Vec::new(), c);
        m
    }

    pub fn constant(reg: &Arc<GeneratorRegistry>, c: Scalar) -> Self {
        Self::scalar(reg, RatFunc::constant(c))
    }

    pub fn from_poly(reg: &Arc<GeneratorRegistry>, p: Poly) -> Self {
        Self::scalar(reg, RatFunc::from_poly(p))
    }

    pub fn var(reg: &Arc<GeneratorRegistry>, v: VarId) -> Self {
        Self::from_poly(reg, Poly::var(v))
    }

    pub fn odd(reg: &Arc<GeneratorRegistry>, g: OddId) -> Self {
        Self::term(reg, RatFunc::one(), &[g])
    }

    /// `c * g_1 * ... * g_k` with Koszul normalization.
    pub fn term(reg: &Arc<GeneratorRegistry>, c: RatFunc, seq: &[OddId]) -> Self {
        Self::normalize(reg, vec![(c, seq.to_vec())])
    }

    /// Build from raw `(coefficient, odd sequence)` pairs.
    pub fn normalize(reg: &Arc<GeneratorRegistry>, raw: Vec<(RatFunc, Vec<OddId>)>) -> Self {
        let mut m = Self::zero(reg);
        for (c, seq) in raw {
            if let Some((mono, sign)) = sort_with_sign(&seq) {
                m.add_term(mono, if sign < 0 { c.neg() } else { c });
            }
        }
        m
    }

    fn add_term(&mut self, mono: OddMonomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let remove = {
            let slot = self.terms.entry(mono.clone()).or_insert_with(RatFunc::zero);
            *slot = slot.add(&c);
            slot.is_zero()
        };
        if remove {
            self.terms.remove(&mono);
        }
    }

    pub fn registry(&self) -> &Arc<GeneratorRegistry> {
        &self.reg
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OddMonomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &[OddId]) -> RatFunc {
        self.terms.get(mono).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_registry(&self, o: &Multivector) -> bool {
        Arc::ptr_eq(&self.reg, &o.reg) || *self.reg == *o.reg
    }

    fn check(&self, o: &Multivector) -> Result<(), AlgebraError> {
        if self.same_registry(o) {
            Ok(())
        } else {
            Err(AlgebraError::RegistryMismatch)
        }
    }

    pub fn bidegree_of(&self, mono: &[OddId]) -> Bidegree {
        let mut b = Bidegree::default();
        for &g in mono {
            match self.reg.odd(g).kind {
                OddKind::PolyvectorDir(_) => b.i += 1,
                OddKind::AntiHolForm(_) => b.j += 1,
                OddKind::DeRhamForm(_) => b.a += 1,
                OddKind::Abstract(_) => b.e += 1,
            }
        }
        b
    }

    pub fn bidegrees(&self) -> Vec<Bidegree> {
        let mut v: Vec<Bidegree> = self.terms.keys().map(|m| self.bidegree_of(m)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Total odd degree when every term has the same one.
    pub fn total_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.len());
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn parity(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.len() % 2);
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Multivector) -> Multivector {
        debug_assert!(self.same_registry(o));
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Multivector) -> Multivector {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Multivector {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Multivector {
        self.scale_rat(&RatFunc::constant(c.clone()))
    }

    pub fn scale_rat(&self, c: &RatFunc) -> Multivector {
        let mut out = Self::zero(&self.reg);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.mul(c));
        }
        out
    }

    pub fn multiply(&self, o: &Multivector) -> Result<Multivector, AlgebraError> {
        self.check(o)?;
        Ok(self.wedge(o))
    }

    /// Product without the registry check; registries must agree.
    pub fn wedge(&self, o: &Multivector) -> Multivector {
        let mut out = Self::zero(&self.reg);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                if let Some((mono, sign)) = merge_sign(ma, mb) {
                    let c = ca.mul(cb);
                    out.add_term(mono, if sign < 0 { c.neg() } else { c });
                }
            }
        }
        out
    }

    /// Left derivation `d/dg`: removes `g`, with sign `(-1)^(position of g)`.
    pub fn odd_derivation(&self, g: OddId) -> Multivector {
        let mut out = Self::zero(&self.reg);
        for (m, c) in &self.terms {
            if let Some(pos) = m.iter().position(|&h| h == g) {
                let mut mono = m.clone();
                mono.remove(pos);
                out.add_term(mono, if pos % 2 == 1 { c.neg() } else { c.clone() });
            }
        }
        out
    }

    /// Coefficientwise `d/dx`; conjugate variables are independent.
    pub fn even_derivative(&self, x: VarId) -> Multivector {
        self.map_coefficients(|c| c.derivative(x))
    }

    pub fn map_coefficients(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Multivector {
        let mut out = Self::zero(&self.reg);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Keep terms satisfying a predicate on their monomial.
    pub fn filter(&self, keep: impl Fn(&OddMonomial) -> bool) -> Multivector {
        let mut out = Self::zero(&self.reg);
        for (m, c) in &self.terms {
            if keep(m) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn filter_terms(&self, keep: impl Fn(&OddMonomial, &RatFunc) -> bool) -> Multivector {
        let mut out = Self::zero(&self.reg);
        for (m, c) in &self.terms {
            if keep(m, c) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn component(&self, b: Bidegree) -> Multivector {
        self.filter(|m| self.bidegree_of(m) == b)
    }

    /// Odd-degree-`k` part.
    pub fn degree_part(&self, k: usize) -> Multivector {
        self.filter(|m| m.len() == k)
    }

    /// Number of legs of `m` satisfying a predicate.
    pub fn count_legs(&self, m: &[OddId], pred: impl Fn(&OddKind) -> bool) -> usize {
        m.iter().filter(|&&g| pred(&self.reg.odd(g).kind)).count()
    }

    /// Algebra map sending each odd generator `g` to `f(g)` (or to itself when
    /// `f` returns `None`), applied left to right with Koszul signs.
    pub fn substitute_odd(&self, f: impl Fn(OddId) -> Option<Multivector>) -> Multivector {
        let mut out = Self::zero(&self.reg);
        for (m, c) in &self.terms {
            let mut acc = Self::scalar(&self.reg, c.clone());
            for &g in m {
                let image = f(g).unwrap_or_else(|| Self::odd(&self.reg, g));
                acc = acc.wedge(&image);
            }
            out = out.add(&acc);
        }
        out
    }

    /// Replace the registry by a structurally identical one.
    pub fn with_registry(&self, reg: &Arc<GeneratorRegistry>) -> Multivector {
        Multivector { reg: reg.clone(), terms: self.terms.clone() }
    }

    /// Canonical text form (see [`crate::text`]).
    pub fn to_text(&self) -> String {
        crate::text::print(self)
    }
}

impl PartialEq for Multivector {
    fn eq(&self, o: &Self) -> bool {
        self.same_registry(o) && self.terms.len() == o.terms.len() && self.terms.iter().zip(o.terms.iter()).all(|(a, b)| a.0 == b.0 && a.1 == b.1)
    }
}

impl Eq for Multivector {}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reg() -> Arc<GeneratorRegistry> {
        GeneratorRegistry::builder().coordinates(&["u", "v"]).abstract_odd("e1").abstract_odd("e2").build()
    }

    #[test]
    fn transposition_sign() {
        let r = reg();
        let (du, dv) = (r.theta(r.var("u").unwrap()).unwrap(), r.theta(r.var("v").unwrap()).unwrap());
        let m = Multivector::term(&r, RatFunc::one(), &[dv, du]);
        assert_eq!(m, Multivector::term(&r, RatFunc::from_int(-1), &[du, dv]));
        assert!(Multivector::term(&r, RatFunc::one(), &[du, du]).is_zero());
    }

    #[test]
    fn antisymmetry_cancels() {
        let r = reg();
        let (e1, e2) = (r.odd_by_name("e1").unwrap(), r.odd_by_name("e2").unwrap());
        let m = Multivector::normalize(&r, vec![(RatFunc::one(), vec![e2, e1]), (RatFunc::one(), vec![e1, e2])]);
        assert!(m.is_zero());
    }

    #[test]
    fn derivation_past_one_factor() {
        let r = reg();
        let (du, dv) = (r.theta(r.var("u").unwrap()).unwrap(), r.theta(r.var("v").unwrap()).unwrap());
        let m = Multivector::term(&r, RatFunc::one(), &[du, dv]);
        assert_eq!(m.odd_derivation(du), Multivector::odd(&r, dv));
        assert_eq!(m.odd_derivation(dv), Multivector::odd(&r, du).neg());
    }
}
