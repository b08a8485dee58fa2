use std::fmt;
use std::sync::Arc;

use graded_algebra::GeneratorRegistry;
use polyvector_calculus::CalabiYauOrdering;

use crate::FieldError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theory {
    IibSugra,
    IiaSugra,
    M,
    IibCl,
    IiaCl,
}

impl Theory {
    pub fn tag(self) -> &'static str {
        match self {
            Theory::IibSugra => "IIB",
            Theory::IiaSugra => "IIA",
            Theory::M => "M",
            Theory::IibCl => "IIB_CL",
            Theory::IiaCl => "IIA_CL",
        }
    }

    pub fn from_tag(s: &str) -> Option<Theory> {
        [Theory::IibSugra, Theory::IiaSugra, Theory::M, Theory::IibCl, Theory::IiaCl].into_iter().find(|t| t.tag() == s)
    }
}

/// One factor of `M_A x X_B`: a flat real A-factor with named coordinates, or a
/// flat B-factor whose coordinates may be `C^*` (volume form `dz/z`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    A { names: Vec<String> },
    B { coords: Vec<String>, log: Vec<bool> },
}

impl Factor {
    pub fn a(names: &[&str]) -> Factor {
        Factor::A { names: names.iter().map(|s| s.to_string()).collect() }
    }

    pub fn b(coords: &[&str]) -> Factor {
        Factor::B { coords: coords.iter().map(|s| s.to_string()).collect(), log: vec![false; coords.len()] }
    }

    pub fn b_log(coords: &[&str]) -> Factor {
        Factor::B { coords: coords.iter().map(|s| s.to_string()).collect(), log: vec![true; coords.len()] }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BackgroundDescriptor {
    theory: Theory,
    factors: Vec<Factor>,
}

/// Abstract odd generators present in every background registry: the circle
/// directions `eM`, `eps` and the brane parameters `e1`, `e2`.
pub const ABSTRACT_ODD: [&str; 4] = ["eM", "eps", "e1", "e2"];

fn default_b_names(d: usize) -> Vec<String> {
    let named: &[&str] = match d {
        1 => &["z"],
        2 => &["w1", "w2"],
        3 => &["z", "w1", "w2"],
        5 => &["u", "v", "z", "w1", "w2"],
        _ => &[],
    };
    if named.is_empty() {
        (1..=d).map(|k| format!("z{}", k)).collect()
    } else {
        named.iter().map(|s| s.to_string()).collect()
    }
}

impl BackgroundDescriptor {
    pub fn new(theory: Theory, factors: Vec<Factor>) -> Result<Self, FieldError> {
        let bg = BackgroundDescriptor { theory, factors };
        bg.validate()?;
        Ok(bg)
    }

    /// `R^4_A x C^3_B` with coordinates `z, w1, w2`.
    pub fn standard() -> Self {
        Self::new(Theory::IibSugra, vec![Factor::a(&["t1", "t2", "t3", "t4"]), Factor::b(&["z", "w1", "w2"])]).unwrap()
    }

    /// `R^4_A x (C^* x C^2)_B` with the `C^*` coordinate `z`.
    pub fn circle() -> Self {
        Self::new(
            Theory::IibSugra,
            vec![Factor::a(&["t1", "t2", "t3", "t4"]), Factor::b_log(&["z"]), Factor::b(&["w1", "w2"])],
        )
        .unwrap()
    }

    /// `C^5_B` with coordinates `u, v, z, w1, w2`.
    pub fn flat_c5() -> Self {
        Self::new(Theory::IibSugra, vec![Factor::b(&["u", "v", "z", "w1", "w2"])]).unwrap()
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn a_dim(&self) -> usize {
        self.factors.iter().map(|f| if let Factor::A { names } = f { names.len() } else { 0 }).sum()
    }

    pub fn b_dim(&self) -> usize {
        self.b_coords().len()
    }

    pub fn a_names(&self) -> Vec<String> {
        self.factors.iter().flat_map(|f| if let Factor::A { names } = f { names.clone() } else { vec![] }).collect()
    }

    /// Holomorphic coordinates of the B-factor with their logarithmic flags.
    pub fn b_coords(&self) -> Vec<(String, bool)> {
        self.factors
            .iter()
            .flat_map(|f| match f {
                Factor::B { coords, log } => coords.iter().cloned().zip(log.iter().copied()).collect(),
                Factor::A { .. } => vec![],
            })
            .collect()
    }

    fn validate(&self) -> Result<(), FieldError> {
        let (a, b) = (self.a_dim(), self.b_dim());
        let ok = match self.theory {
            Theory::IibSugra | Theory::IibCl => b % 2 == 1 && a + 2 * b == 10,
            Theory::IiaSugra | Theory::IiaCl => b % 2 == 0 && a + 2 * b == 10,
            Theory::M => a == 7 && b == 2,
        };
        if !ok {
            let rule = match self.theory {
                Theory::IibSugra | Theory::IibCl => "B of dimension 2n+1 and A of dimension 8-4n",
                Theory::IiaSugra | Theory::IiaCl => "B of dimension 2n and A of dimension 10-4n",
                Theory::M => "A of dimension 7 and B of dimension 2",
            };
            return Err(FieldError::Dimension(format!("{} needs {}, got A={} B={}", self.theory.tag(), rule, a, b)));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut names: Vec<String> = Vec::new();
        for n in self.a_names() {
            names.push(n.clone());
            names.push(format!("d{}", n));
        }
        for (c, _) in self.b_coords() {
            for derived in [c.clone(), format!("{}~", c), format!("d{}", c), format!("db{}", c), format!("D{}", c)] {
                names.push(derived);
            }
        }
        names.extend(ABSTRACT_ODD.iter().map(|s| s.to_string()));
        for n in names {
            if !seen.insert(n.clone()) {
                return Err(FieldError::DuplicateName(n));
            }
        }
        Ok(())
    }

    /// Registry: abstract generators (`eM`, `eps`, `e1`, `e2`, then `d<t>` for
    /// each A-coordinate) followed by the B-coordinates.
    pub fn registry(&self) -> Arc<GeneratorRegistry> {
        let mut b = GeneratorRegistry::builder();
        for a in ABSTRACT_ODD {
            b = b.abstract_odd(a);
        }
        for t in self.a_names() {
            b = b.abstract_odd(&format!("d{}", t));
        }
        for (c, _) in self.b_coords() {
            b = b.coordinate(&c);
        }
        b.build()
    }

    /// Calabi-Yau ordering of the whole B-factor on `reg`.
    pub fn calabi_yau(&self, reg: &Arc<GeneratorRegistry>) -> Result<CalabiYauOrdering, FieldError> {
        let coords = self.b_coords();
        let names: Vec<&str> = coords.iter().map(|(c, _)| c.as_str()).collect();
        let mut cy = CalabiYauOrdering::new(reg, &names)?;
        for (c, log) in &coords {
            if *log {
                cy = cy.with_log(c);
            }
        }
        Ok(cy)
    }

    /// Parse `[THEORY:] factor (x factor)*` where a factor is `R<k>A`,
    /// `R<k>A[t1,...]`, `C<k>B`, `C[z,w1]` or `Cx[z]` (a `C^*` coordinate).
    pub fn parse(text: &str) -> Result<Self, FieldError> {
        let err = |reason: &str| FieldError::Syntax { text: text.to_string(), reason: reason.to_string() };
        let (theory, body) = match text.split_once(':') {
            Some((t, rest)) => (Theory::from_tag(t.trim()).ok_or_else(|| err("unknown theory tag"))?, rest),
            None => (Theory::IibSugra, text),
        };
        let mut factors = Vec::new();
        let mut a_count = 0usize;
        for raw in body.split(" x ") {
            let f = raw.trim();
            if f.is_empty() {
                return Err(err("empty factor"));
            }
            let (head, names) = match f.find('[') {
                Some(i) => {
                    let inner = f[i..].strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or_else(|| err("unbalanced brackets"))?;
                    let names: Vec<String> = inner.split(',').map(|s| s.trim().to_string()).collect();
                    if names.iter().any(|n| n.is_empty() || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')) {
                        return Err(err("bad coordinate name"));
                    }
                    (&f[..i], Some(names))
                }
                None => (f, None),
            };
            if let Some(d) = head.strip_prefix('R').and_then(|s| s.strip_suffix('A')) {
                let k: usize = d.parse().map_err(|_| err("bad A-factor dimension"))?;
                let names = names.unwrap_or_else(|| (a_count + 1..=a_count + k).map(|i| format!("t{}", i)).collect());
                if names.len() != k {
                    return Err(err("A-factor name count differs from its dimension"));
                }
                a_count += k;
                factors.push(Factor::A { names });
            } else if head == "C" || head == "Cx" {
                let coords = names.ok_or_else(|| err("C needs named coordinates, as in C[z]"))?;
                let log = vec![head == "Cx"; coords.len()];
                factors.push(Factor::B { coords, log });
            } else if let Some(d) = head.strip_prefix('C').and_then(|s| s.strip_suffix('B')) {
                let k: usize = d.parse().map_err(|_| err("bad B-factor dimension"))?;
                let coords = names.unwrap_or_else(|| default_b_names(k));
                if coords.len() != k {
                    return Err(err("B-factor name count differs from its dimension"));
                }
                factors.push(Factor::B { log: vec![false; k], coords });
            } else {
                return Err(err("unknown factor"));
            }
        }
        Self::new(theory, factors)
    }
}

impl fmt::Display for BackgroundDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.theory.tag())?;
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " x ")?;
            }
            match factor {
                Factor::A { names } => write!(f, "R{}A[{}]", names.len(), names.join(","))?,
                Factor::B { coords, log } => {
                    let head = if log.iter().all(|&l| l) && !coords.is_empty() { "Cx" } else { "C" };
                    if log.iter().any(|&l| l) && log.iter().any(|&l| !l) {
                        for (i, (c, l)) in coords.iter().zip(log).enumerate() {
                            if i > 0 {
                                write!(f, " x ")?;
                            }
                            write!(f, "{}[{}]", if *l { "Cx" } else { "C" }, c)?;
                        }
                    } else {
                        write!(f, "{}[{}]", head, coords.join(","))?;
                    }
                }
            }
        }
        Ok(())
    }
}
