use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use graded_algebra::{GeneratorRegistry, OddId, Scalar, VarId};

use crate::BraneError;

/// Generator of the algebra of differential operators on a superspace with even
/// coordinates from the registry and odd coordinates among its abstract generators.
/// The variant order is the normal order: odd coordinates, even coordinates,
/// odd derivations, even derivations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Odd(OddId),
    Even(VarId),
    DOdd(OddId),
    DEven(VarId),
}

impl Letter {
    pub fn is_odd(self) -> bool {
        matches!(self, Letter::Odd(_) | Letter::DOdd(_))
    }

    pub fn is_derivation(self) -> bool {
        matches!(self, Letter::DOdd(_) | Letter::DEven(_))
    }
}

/// Sum of normal-ordered words: sorted letters, odd letters at most once.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperDiffOp {
    reg: Arc<GeneratorRegistry>,
    terms: BTreeMap<Vec<Letter>, Scalar>,
}

fn add_term(terms: &mut BTreeMap<Vec<Letter>, Scalar>, word: Vec<Letter>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let remove = {
        let slot = terms.entry(word.clone()).or_insert_with(Scalar::zero);
        *slot += &c;
        slot.is_zero()
    };
    if remove {
        terms.remove(&word);
    }
}

/// Rewrite an arbitrary letter sequence into normal-ordered words using
/// `[d_x, x] = 1`, `{d_e, e} = 1` and supercommutation otherwise.
fn normal_order(word: Vec<Letter>, c: Scalar, out: &mut BTreeMap<Vec<Letter>, Scalar>) {
    let mut stack = vec![(word, c)];
    while let Some((w, c)) = stack.pop() {
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1] || (w[i] == w[i + 1] && w[i].is_odd())) else {
            add_term(out, w, c);
            continue;
        };
        let (a, b) = (w[i], w[i + 1]);
        if a == b {
            continue;
        }
        let paired = matches!((a, b), (Letter::DEven(x), Letter::Even(y)) if x == y) || matches!((a, b), (Letter::DOdd(x), Letter::Odd(y)) if x == y);
        if paired {
            let mut contracted = w[..i].to_vec();
            contracted.extend_from_slice(&w[i + 2..]);
            stack.push((contracted, c.clone()));
        }
        let mut swapped = w;
        swapped.swap(i, i + 1);
        let sign = if a.is_odd() && b.is_odd() { -c } else { c };
        stack.push((swapped, sign));
    }
}

impl SuperDiffOp {
    pub fn zero(reg: &Arc<GeneratorRegistry>) -> Self {
        SuperDiffOp { reg: reg.clone(), terms: BTreeMap::new() }
    }

    pub fn one(reg: &Arc<GeneratorRegistry>) -> Self {
        Self::word(reg, Scalar::one(), &[])
    }

    /// `c` times the product of `letters` in the given order, normal-ordered.
    pub fn word(reg: &Arc<GeneratorRegistry>, c: Scalar, letters: &[Letter]) -> Self {
        let mut terms = BTreeMap::new();
        normal_order(letters.to_vec(), c, &mut terms);
        SuperDiffOp { reg: reg.clone(), terms }
    }

    pub fn letter(reg: &Arc<GeneratorRegistry>, l: Letter) -> Self {
        Self::word(reg, Scalar::one(), &[l])
    }

    fn resolve(reg: &Arc<GeneratorRegistry>, name: &str) -> Result<(Letter, Letter), BraneError> {
        if let Some(v) = reg.var(name) {
            return Ok((Letter::Even(v), Letter::DEven(v)));
        }
        match reg.abstract_odd(name) {
            Some(g) => Ok((Letter::Odd(g), Letter::DOdd(g))),
            None => Err(BraneError::UnknownCoordinate(name.to_string())),
        }
    }

    /// Multiplication by the coordinate `name` (even variable or abstract odd generator).
    pub fn coordinate(reg: &Arc<GeneratorRegistry>, name: &str) -> Result<Self, BraneError> {
        Ok(Self::letter(reg, Self::resolve(reg, name)?.0))
    }

    /// Derivation along the coordinate `name`.
    pub fn derivation(reg: &Arc<GeneratorRegistry>, name: &str) -> Result<Self, BraneError> {
        Ok(Self::letter(reg, Self::resolve(reg, name)?.1))
    }

    pub fn registry(&self) -> &Arc<GeneratorRegistry> {
        &self.reg
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Letter>, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &SuperDiffOp) -> SuperDiffOp {
        let mut terms = self.terms.clone();
        for (w, c) in &o.terms {
            add_term(&mut terms, w.clone(), c.clone());
        }
        SuperDiffOp { reg: self.reg.clone(), terms }
    }

    pub fn scale(&self, k: &Scalar) -> SuperDiffOp {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            add_term(&mut terms, w.clone(), c * k);
        }
        SuperDiffOp { reg: self.reg.clone(), terms }
    }

    pub fn neg(&self) -> SuperDiffOp {
        self.scale(&-Scalar::one())
    }

    pub fn sub(&self, o: &SuperDiffOp) -> SuperDiffOp {
        self.add(&o.neg())
    }

    /// Operator product `self . o`.
    pub fn compose(&self, o: &SuperDiffOp) -> SuperDiffOp {
        let mut terms = BTreeMap::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                normal_order(w, c1 * c2, &mut terms);
            }
        }
        SuperDiffOp { reg: self.reg.clone(), terms }
    }

    /// Part of parity `p` (number of odd letters mod 2).
    pub fn parity_part(&self, p: usize) -> SuperDiffOp {
        let terms = self.terms.iter().filter(|(w, _)| w.iter().filter(|l| l.is_odd()).count() % 2 == p).map(|(w, c)| (w.clone(), c.clone())).collect();
        SuperDiffOp { reg: self.reg.clone(), terms }
    }

    /// `Some(p)` when every term has parity `p`; zero counts as even.
    pub fn parity(&self) -> Option<usize> {
        let mut ps = self.terms.keys().map(|w| w.iter().filter(|l| l.is_odd()).count() % 2);
        let first = ps.next().unwrap_or(0);
        ps.all(|p| p == first).then_some(first)
    }

    /// Action on a function (an operator without derivations).
    pub fn apply(&self, f: &SuperDiffOp) -> SuperDiffOp {
        let full = self.compose(f);
        let terms = full.terms.into_iter().filter(|(w, _)| !w.iter().any(|l| l.is_derivation())).collect();
        SuperDiffOp { reg: self.reg.clone(), terms }
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if c.is_negative_leading() { (true, -c) } else { (false, c.clone()) };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = self.word_text(w);
            match (mag.is_one(), body.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&body),
                (false, true) => out.push_str(&mag.to_string()),
                (false, false) => out.push_str(&format!("{}*{}", mag, body)),
            }
        }
        out
    }

    fn word_text(&self, w: &[Letter]) -> String {
        let name = |l: Letter| -> String {
            match l {
                Letter::Odd(g) => self.reg.odd(g).display.clone(),
                Letter::Even(v) => self.reg.var_name(v),
                Letter::DOdd(g) => format!("d[{}]", self.reg.odd(g).display),
                Letter::DEven(v) => format!("d[{}]", self.reg.var_name(v)),
            }
        };
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let n = name(w[i]);
            parts.push(if j - i == 1 { n } else { format!("{}^{}", n, j - i) });
            i = j;
        }
        parts.join("*")
    }
}

/// `ab - (-1)^{|a||b|} ba`, extended bilinearly over parity parts.
pub fn super_commutator(a: &SuperDiffOp, b: &SuperDiffOp) -> SuperDiffOp {
    let mut out = SuperDiffOp::zero(&a.reg);
    for pa in 0..2 {
        let ap = a.parity_part(pa);
        if ap.is_zero() {
            continue;
        }
        for pb in 0..2 {
            let bp = b.parity_part(pb);
            if bp.is_zero() {
                continue;
            }
            let ba = bp.compose(&ap);
            let ba = if pa * pb == 1 { ba.neg() } else { ba };
            out = out.add(&ap.compose(&bp).sub(&ba));
        }
    }
    out
}

impl fmt::Debug for SuperDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for SuperDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
