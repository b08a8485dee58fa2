//! Surface syntax for multivectors: `w1*Dw1^Dw2`, `v~/(v*v~ + w1*w1~)`, `(1/2+3*i)*eps`.
//!
//! Precedence: power `x^3` > product (`*`, `^`, juxtaposition, `/`) > sum.
//! A `^` followed by an integer literal is a power; otherwise `^` is the wedge.

use std::sync::Arc;

use graded_algebra::{GeneratorRegistry, Multivector, RatFunc, Scalar, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("at {pos}: unexpected {found}")]
    Unexpected { pos: usize, found: String },
    #[error("at {pos}: unknown identifier {name}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("at {pos}: malformed fraction ({reason})")]
    MalformedFraction { pos: usize, reason: String },
    #[error("at {pos}: odd generator {name} repeated in a factor")]
    RepeatedOdd { pos: usize, name: String },
    #[error("at {pos}: powers apply to even factors only")]
    OddPower { pos: usize },
    #[error("at {pos}: integer literal out of range")]
    Literal { pos: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(Scalar),
    Imaginary,
    Ident { name: String, pos: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div { num: Box<Expr>, den: Box<Expr>, pos: usize },
    Pow { base: Box<Expr>, exp: u32, pos: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(chars[start..i].iter().collect()), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            if i < chars.len() && chars[i] == '~' {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(ParseError::Unexpected { pos: i, found: format!("character '{}'", c) });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.1).unwrap_or(self.end)
    }

    fn unexpected(&self) -> ParseError {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(Tok::Int(s)) | Some(Tok::Ident(s)) => format!("'{}'", s),
            Some(Tok::Sym(c)) => format!("'{}'", c),
        };
        ParseError::Unexpected { pos: self.pos(), found }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.signed()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.signed()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.signed()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn signed(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.signed()?)))
        } else if self.eat('+') {
            self.signed()
        } else {
            self.product()
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('(')))
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.power()?;
        loop {
            let pos = self.pos();
            if self.eat('*') || self.eat('^') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else if self.eat('/') {
                lhs = Expr::Div { num: Box::new(lhs), den: Box::new(self.power()?), pos };
            } else if self.starts_atom() {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while self.peek() == Some(&Tok::Sym('^')) && matches!(self.toks.get(self.at + 1), Some((Tok::Int(_), _))) {
            let pos = self.pos();
            self.at += 1;
            let Some((Tok::Int(s), p)) = self.toks.get(self.at).cloned() else { unreachable!() };
            self.at += 1;
            let exp = s.parse::<u32>().map_err(|_| ParseError::Literal { pos: p })?;
            base = Expr::Pow { base: Box::new(base), exp, pos };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.toks.get(self.at).cloned() {
            Some((Tok::Int(s), p)) => {
                self.at += 1;
                let n = s.parse::<i64>().map_err(|_| ParseError::Literal { pos: p })?;
                Ok(Expr::Number(Scalar::from_int(n)))
            }
            Some((Tok::Ident(name), pos)) => {
                self.at += 1;
                Ok(if name == "i" { Expr::Imaginary } else { Expr::Ident { name, pos } })
            }
            Some((Tok::Sym('('), _)) => {
                self.at += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return Err(self.unexpected());
                }
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parse the surface syntax into an expression tree.
pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0, end: text.chars().count() };
    let e = p.sum()?;
    if p.at != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(e)
}

/// The coefficient of a multivector with no odd legs.
fn as_even(m: &Multivector) -> Option<RatFunc> {
    if m.is_zero() {
        return Some(RatFunc::zero());
    }
    (m.len() == 1 && m.terms().all(|(mono, _)| mono.is_empty())).then(|| m.coefficient(&[]))
}

fn product_factors<'a>(e: &'a Expr, out: &mut Vec<&'a Expr>) {
    match e {
        Expr::Mul(a, b) => {
            product_factors(a, out);
            product_factors(b, out);
        }
        other => out.push(other),
    }
}

impl Expr {
    pub fn evaluate(&self, reg: &Arc<GeneratorRegistry>) -> Result<Multivector, ParseError> {
        match self {
            Expr::Number(c) => Ok(Multivector::constant(reg, c.clone())),
            Expr::Imaginary => Ok(Multivector::constant(reg, Scalar::i())),
            Expr::Ident { name, pos } => match reg.lookup(name) {
                Some(Symbol::Even(v)) => Ok(Multivector::var(reg, v)),
                Some(Symbol::Odd(g)) => Ok(Multivector::odd(reg, g)),
                None => Err(ParseError::UnknownIdentifier { pos: *pos, name: name.clone() }),
            },
            Expr::Neg(a) => Ok(a.evaluate(reg)?.neg()),
            Expr::Add(a, b) => Ok(a.evaluate(reg)?.add(&b.evaluate(reg)?)),
            Expr::Sub(a, b) => Ok(a.evaluate(reg)?.sub(&b.evaluate(reg)?)),
            Expr::Mul(..) => {
                let mut factors = Vec::new();
                product_factors(self, &mut factors);
                let mut seen: Vec<&str> = Vec::new();
                for f in &factors {
                    if let Expr::Ident { name, pos } = f {
                        if matches!(reg.lookup(name), Some(Symbol::Odd(_))) {
                            if seen.contains(&name.as_str()) {
                                return Err(ParseError::RepeatedOdd { pos: *pos, name: name.clone() });
                            }
                            seen.push(name);
                        }
                    }
                }
                let mut acc = Multivector::one(reg);
                for f in factors {
                    acc = acc.wedge(&f.evaluate(reg)?);
                }
                Ok(acc)
            }
            Expr::Div { num, den, pos } => {
                let d = den.evaluate(reg)?;
                let d = as_even(&d).ok_or_else(|| ParseError::MalformedFraction { pos: *pos, reason: "denominator has odd legs".into() })?;
                if d.is_zero() {
                    return Err(ParseError::MalformedFraction { pos: *pos, reason: "zero denominator".into() });
                }
                Ok(num.evaluate(reg)?.scale_rat(&d.inv()))
            }
            Expr::Pow { base, exp, pos } => {
                let b = base.evaluate(reg)?;
                let c = as_even(&b).ok_or(ParseError::OddPower { pos: *pos })?;
                Ok(Multivector::scalar(reg, c.pow(*exp as i32)))
            }
        }
    }
}

/// Parse and evaluate over `reg`.
pub fn parse(text: &str, reg: &Arc<GeneratorRegistry>) -> Result<Multivector, ParseError> {
    parse_expression(text)?.evaluate(reg)
}

/// Canonical text form; `parse(print(m)) == m`.
pub fn print(m: &Multivector) -> String {
    m.to_text()
}
