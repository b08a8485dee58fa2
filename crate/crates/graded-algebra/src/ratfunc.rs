//! Rational functions `num / prod(p_k^e_k)` with the denominator kept as a list of
//! monic factors. Factors are never factorized further; reduction cancels a factor
//! whenever it divides the numerator exactly.

use std::fmt;

use crate::poly::{Monomial, Poly, VarId};
use crate::scalar::Scalar;

#[derive(Clone, Debug, Default)]
pub struct RatFunc {
    num: Poly,
    den: Vec<(Poly, u32)>,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Vec::new() }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::constant(Scalar::from_int(n))
    }

    pub fn var(v: VarId) -> Self {
        RatFunc::from_poly(Poly::var(v))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den_factors(&self) -> &[(Poly, u32)] {
        &self.den
    }

    pub fn den_poly(&self) -> Poly {
        self.den.iter().fold(Poly::one(), |acc, (p, e)| acc.mul(&p.pow(*e)))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn depends_on(&self, v: VarId) -> bool {
        self.num.depends_on(v) || self.den.iter().any(|(p, _)| p.depends_on(v))
    }

    pub fn den_depends_on(&self, v: VarId) -> bool {
        self.den.iter().any(|(p, _)| p.depends_on(v))
    }

    /// Construct `num / den` for a nonzero polynomial denominator.
    pub fn from_fraction(num: Poly, den: &Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut out = RatFunc::from_poly(num);
        out.divide_by_poly(den);
        out
    }

    fn divide_by_poly(&mut self, den: &Poly) {
        if let Some(c) = den.as_constant() {
            self.num = self.num.scale(&c.inv());
            return;
        }
        let content = den.monomial_content();
        let rest = den.div_exact(&Poly::monomial(content.clone(), Scalar::one())).expect("content divides");
        for &(v, e) in content.pairs() {
            self.push_factor(Poly::var(v), e);
        }
        let (monic, lc) = rest.monic();
        self.num = self.num.scale(&lc.inv());
        if !monic.is_constant() {
            self.push_factor(monic, 1);
        }
        self.reduce();
    }

    fn push_factor(&mut self, p: Poly, e: u32) {
        if let Some(slot) = self.den.iter_mut().find(|(q, _)| *q == p) {
            slot.1 += e;
        } else {
            self.den.push((p, e));
            self.den.sort_by(|a, b| a.0.leading().map(|x| x.0).cmp(&b.0.leading().map(|x| x.0)).then_with(|| a.0.len().cmp(&b.0.len())));
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for slot in self.den.iter_mut() {
            while slot.1 > 0 {
                match self.num.div_exact(&slot.0) {
                    Some(q) => {
                        self.num = q;
                        slot.1 -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
    }

    fn lcm_den(a: &[(Poly, u32)], b: &[(Poly, u32)]) -> Vec<(Poly, u32)> {
        let mut out: Vec<(Poly, u32)> = a.to_vec();
        for (p, e) in b {
            if let Some(slot) = out.iter_mut().find(|(q, _)| q == p) {
                slot.1 = slot.1.max(*e);
            } else {
                out.push((p.clone(), *e));
            }
        }
        out
    }

    /// Polynomial `lcm / den` for a denominator contained in `lcm`.
    fn cofactor(lcm: &[(Poly, u32)], den: &[(Poly, u32)]) -> Poly {
        let mut acc = Poly::one();
        for (p, e) in lcm {
            let have = den.iter().find(|(q, _)| q == p).map(|x| x.1).unwrap_or(0);
            if *e > have {
                acc = acc.mul(&p.pow(e - have));
            }
        }
        acc
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den.is_empty() && o.den.is_empty() {
            return RatFunc::from_poly(self.num.add(&o.num));
        }
        let lcm = Self::lcm_den(&self.den, &o.den);
        let num = self.num.mul(&Self::cofactor(&lcm, &self.den)).add(&o.num.mul(&Self::cofactor(&lcm, &o.den)));
        let mut out = RatFunc { num, den: lcm };
        out.reduce();
        out
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> RatFunc {
        let mut out = RatFunc { num: self.num.scale(c), den: self.den.clone() };
        if out.num.is_zero() {
            out.den.clear();
        }
        out
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        let mut out = RatFunc { num: self.num.mul(&o.num), den: self.den.clone() };
        for (p, e) in &o.den {
            out.push_factor(p.clone(), *e);
        }
        out.reduce();
        out
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFunc {
        self.mul(&RatFunc::from_poly(p.clone()))
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero rational function");
        let mut out = RatFunc::from_poly(self.den_poly());
        out.divide_by_poly(&self.num);
        out
    }

    pub fn div(&self, o: &RatFunc) -> RatFunc {
        self.mul(&o.inv())
    }

    pub fn pow(&self, e: i32) -> RatFunc {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Exact partial derivative by the quotient rule.
    pub fn derivative(&self, v: VarId) -> RatFunc {
        let dnum = self.num.derivative(v);
        let moving: Vec<usize> = (0..self.den.len()).filter(|&k| self.den[k].0.depends_on(v)).collect();
        if moving.is_empty() {
            let mut out = RatFunc { num: dnum, den: self.den.clone() };
            out.reduce();
            return out;
        }
        // d(N / prod p^e) = (N' * prod_m p_m - N * sum_k e_k p_k' prod_{m != k} p_m) / (D * prod_m p_m)
        let prod_all = moving.iter().fold(Poly::one(), |acc, &k| acc.mul(&self.den[k].0));
        let mut num = dnum.mul(&prod_all);
        for &k in &moving {
            let (p, e) = &self.den[k];
            let others = moving.iter().filter(|&&m| m != k).fold(Poly::one(), |acc, &m| acc.mul(&self.den[m].0));
            let term = self.num.mul(&p.derivative(v)).mul(&others).scale(&Scalar::from_int(*e as i64));
            num = num.sub(&term);
        }
        let mut den = self.den.clone();
        for &k in &moving {
            den[k].1 += 1;
        }
        let mut out = RatFunc { num, den };
        out.reduce();
        out
    }

    /// Substitute each variable by a rational function (variables not mapped stay).
    pub fn substitute(&self, f: &dyn Fn(VarId) -> Option<RatFunc>) -> RatFunc {
        let sub_poly = |p: &Poly| -> RatFunc {
            let mut acc = RatFunc::zero();
            for (m, c) in p.terms() {
                let mut t = RatFunc::constant(c.clone());
                for &(v, e) in m.pairs() {
                    let base = f(v).unwrap_or_else(|| RatFunc::var(v));
                    t = t.mul(&base.pow(e as i32));
                }
                acc = acc.add(&t);
            }
            acc
        };
        let num = sub_poly(&self.num);
        let mut den = RatFunc::one();
        for (p, e) in &self.den {
            den = den.mul(&sub_poly(p).pow(*e as i32));
        }
        num.div(&den)
    }

    /// Split `self = sum_m m * c_m(rest)` by monomials in `vars`, when the
    /// denominator does not involve `vars`. Returns `(monomial in vars, coefficient)`.
    pub fn split_by_vars(&self, vars: &[VarId]) -> Option<Vec<(Monomial, RatFunc)>> {
        if vars.iter().any(|&v| self.den_depends_on(v)) {
            return None;
        }
        let mut groups: Vec<(Monomial, Poly)> = Vec::new();
        for (m, c) in self.num.terms() {
            let inside = Monomial::from_pairs(m.pairs().iter().filter(|(v, _)| vars.contains(v)).cloned().collect());
            let outside = Monomial::from_pairs(m.pairs().iter().filter(|(v, _)| !vars.contains(v)).cloned().collect());
            match groups.iter_mut().find(|(k, _)| *k == inside) {
                Some(slot) => slot.1.add_term(outside, c.clone()),
                None => groups.push((inside, Poly::monomial(outside, c.clone()))),
            }
        }
        groups.sort_by(|a, b| a.0.cmp(&b.0));
        Some(
            groups
                .into_iter()
                .map(|(k, p)| {
                    let mut r = RatFunc { num: p, den: self.den.clone() };
                    r.reduce();
                    (k, r)
                })
                .collect(),
        )
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        if self.den.is_empty() && o.den.is_empty() {
            return self.num == o.num;
        }
        self.num.mul(&o.den_poly()) == o.num.mul(&self.den_poly())
    }
}

impl Eq for RatFunc {}

/// Text form of a polynomial: `3*w1^2*w2 - 1/2*v~ + i`.
pub fn fmt_poly(p: &Poly, names: &dyn Fn(VarId) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let (neg, mag) = if c.is_negative_leading() { (true, -c) } else { (false, c.clone()) };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = fmt_monomial(m, names);
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{}", mag, mono));
        }
    }
    out
}

pub fn fmt_monomial(m: &Monomial, names: &dyn Fn(VarId) -> String) -> String {
    m.pairs()
        .iter()
        .map(|&(v, e)| if e == 1 { names(v) } else { format!("{}^{}", names(v), e) })
        .collect::<Vec<_>>()
        .join("*")
}

impl RatFunc {
    /// Text form; multi-term numerators and denominators are parenthesized.
    pub fn fmt_with(&self, names: &dyn Fn(VarId) -> String) -> String {
        let num = fmt_poly(&self.num, names);
        if self.den.is_empty() {
            return num;
        }
        let num = if self.num.len() > 1 { format!("({})", num) } else { num };
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(p, e)| {
                let base = fmt_poly(p, names);
                let base = if p.len() > 1 { format!("({})", base) } else { base };
                if *e == 1 {
                    base
                } else {
                    format!("{}^{}", base, e)
                }
            })
            .collect();
        if den.len() == 1 {
            format!("{}/{}", num, den[0])
        } else {
            format!("{}/({})", num, den.join("*"))
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&|v| format!("x{}", v)))
    }
}
