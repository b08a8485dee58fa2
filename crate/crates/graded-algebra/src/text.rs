//! Canonical text form: terms in monomial order, `coefficient*leg^leg`.

use crate::multivector::Multivector;
use crate::ratfunc::RatFunc;

fn coefficient_text(c: &RatFunc, names: &dyn Fn(u16) -> String) -> (bool, String) {
    if let Some(k) = c.as_constant() {
        if k.is_one() {
            return (false, String::new());
        }
        if (-&k).is_one() {
            return (true, String::new());
        }
    }
    let s = c.fmt_with(names);
    let multi_term = c.is_polynomial() && c.num().len() > 1;
    if multi_term {
        (false, format!("({})", s))
    } else if let Some(rest) = s.strip_prefix('-') {
        if c.is_polynomial() || !rest.starts_with('(') {
            (true, rest.to_string())
        } else {
            (false, s)
        }
    } else {
        (false, s)
    }
}

pub fn print(m: &Multivector) -> String {
    if m.is_zero() {
        return "0".to_string();
    }
    let reg = m.registry();
    let names = |v: u16| reg.var_name(v);
    let mut out = String::new();
    for (k, (mono, c)) in m.terms().enumerate() {
        let (neg, coef) = coefficient_text(c, &names);
        let legs: Vec<&str> = mono.iter().map(|&g| reg.odd(g).display.as_str()).collect();
        let legs = legs.join("^");
        let body = match (coef.is_empty(), legs.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => legs,
            (false, true) => coef,
            (false, false) => format!("{}*{}", coef, legs),
        };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}
