use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use field_spaces::BackgroundDescriptor;
use graded_algebra::{GeneratorRegistry, Multivector, RatFunc};

use crate::closed::{sdual_closed_form, ClosedMode};
use crate::composite::sdual_composite;
use crate::frame::DualityFrame;
use crate::DualityError;

const FROZEN: &str = include_str!("../conventions/signs.txt");

/// Per-degree signs `mode.pv<k> = +-1`; absent keys read as `+1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignConventionFile {
    entries: BTreeMap<String, i32>,
}

impl SignConventionFile {
    pub fn unit() -> Self {
        Self::default()
    }

    /// The checked-in signs.
    pub fn frozen() -> Self {
        Self::parse(FROZEN).expect("checked-in sign file parses")
    }

    pub fn sign(&self, mode: &str, degree: usize) -> i32 {
        self.entries.get(&format!("{}.pv{}", mode, degree)).copied().unwrap_or(1)
    }

    pub fn set(&mut self, mode: &str, degree: usize, sign: i32) {
        self.entries.insert(format!("{}.pv{}", mode, degree), sign);
    }

    pub fn entries(&self) -> &BTreeMap<String, i32> {
        &self.entries
    }

    /// Lines `key = +1|-1`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, DualityError> {
        let mut entries = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| DualityError::SignFile(format!("line {}: expected key = value", n + 1)))?;
            let sign = match value.trim() {
                "1" | "+1" => 1,
                "-1" => -1,
                other => return Err(DualityError::SignFile(format!("line {}: sign {} is not +-1", n + 1, other))),
            };
            if entries.insert(key.trim().to_string(), sign).is_some() {
                return Err(DualityError::SignFile(format!("line {}: duplicate key {}", n + 1, key.trim())));
            }
        }
        Ok(SignConventionFile { entries })
    }
}

impl fmt::Display for SignConventionFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{} = {}", k, if *v < 0 { "-1" } else { "+1" })?;
        }
        Ok(())
    }
}

fn mv(reg: &Arc<GeneratorRegistry>, coeff: &[(&str, i64)], legs: &[&str]) -> Multivector {
    let mut c = RatFunc::from_int(coeff.iter().map(|(_, k)| *k).product());
    for (name, _) in coeff {
        if !name.is_empty() {
            c = c.mul(&RatFunc::var(reg.var(name).expect("coordinate")));
        }
    }
    let ids: Vec<_> = legs.iter().map(|l| reg.odd_by_name(l).expect("leg")).collect();
    Multivector::term(reg, c, &ids)
}

fn fit(raw: &Multivector, published: &Multivector, what: &str) -> Result<i32, DualityError> {
    if raw == published {
        Ok(1)
    } else if *raw == published.neg() {
        Ok(-1)
    } else {
        Err(DualityError::SignFile(format!("{}: {} is not +-{}", what, raw, published)))
    }
}

fn agree(signs: &[i32], what: &str) -> Result<i32, DualityError> {
    if signs.windows(2).all(|w| w[0] == w[1]) {
        Ok(signs[0])
    } else {
        Err(DualityError::SignFile(format!("{}: anchors disagree on the sign", what)))
    }
}

/// Fit every sign from scratch: the three-fold formulas against the published
/// images of `w1`, `z w2`, `w1 w2`, and the five-case formulas against the same
/// anchors (degree 0) and against the composite (higher degrees).
pub fn calibrate() -> Result<SignConventionFile, DualityError> {
    let unit = SignConventionFile::unit();
    let mut out = SignConventionFile::unit();

    let reg = BackgroundDescriptor::standard().registry();
    let affine = DualityFrame::standard(&reg, false)?;
    let w1 = mv(&reg, &[("w1", 1)], &[]);
    let zw2 = mv(&reg, &[("z", 1), ("w2", 1)], &[]);
    let w1w2 = mv(&reg, &[("w1", 1), ("w2", 1)], &[]);
    let s_w1 = mv(&reg, &[("", 1)], &["Dw2", "Dz"]);
    let s_zw2 = mv(&reg, &[("w2", 1)], &["Dw1", "Dw2"]).add(&mv(&reg, &[("z", 1)], &["Dz", "Dw1"]));
    let s_w1w2 = mv(&reg, &[("w1", 1)], &["Dz", "Dw1"]).sub(&mv(&reg, &[("w2", 1)], &["Dz", "Dw2"]));

    let c3 = |m: &Multivector| sdual_closed_form(m, &affine, ClosedMode::C3Z4, &unit).map(|o| o.image);
    let pv0 = [fit(&c3(&w1)?, &s_w1, "S(w1)")?, fit(&c3(&zw2)?, &s_zw2, "S(zw2)")?, fit(&c3(&w1w2)?, &s_w1w2, "S(w1w2)")?];
    out.set("c3_z4", 0, agree(&pv0, "c3_z4.pv0")?);
    for k in 1..=3 {
        out.set("c3_z4", k, 1);
    }

    let five = |m: &Multivector, frame: &DualityFrame| sdual_closed_form(m, frame, ClosedMode::CTimesC2, &unit).map(|o| o.image);
    let pv0 = [fit(&five(&w1, &affine)?, &s_w1, "S(w1)")?, fit(&five(&w1w2, &affine)?, &s_w1w2, "S(w1w2)")?];
    let anchored = agree(&pv0, "c_times_c2.pv0")?;

    let reg = BackgroundDescriptor::circle().registry();
    let laurent = DualityFrame::standard(&reg, true)?;
    let zdz = mv(&reg, &[("z", 1)], &["Dz"]);
    let samples: [(usize, Vec<Multivector>); 4] = [
        (0, vec![mv(&reg, &[("w1", 1)], &[]), mv(&reg, &[("w1", 1), ("w2", 1)], &[])]),
        (1, vec![zdz.wedge(&mv(&reg, &[("w2", 1)], &[])), mv(&reg, &[("", 1)], &["Dw2"])]),
        (2, vec![zdz.wedge(&mv(&reg, &[("", 1)], &["Dw2"]))]),
        (3, vec![zdz.wedge(&mv(&reg, &[("", 1)], &["Dw1", "Dw2"]))]),
    ];
    for (k, inputs) in samples {
        let mut fitted = Vec::new();
        for m in &inputs {
            fitted.push(fit(&sdual_composite(m, &laurent)?, &five(m, &laurent)?, "composite")?);
        }
        let sigma = agree(&fitted, "c_times_c2")?;
        if k == 0 && sigma != anchored {
            return Err(DualityError::SignFile("composite and published anchors disagree in degree 0".into()));
        }
        out.set("c_times_c2", k, sigma);
    }
    Ok(out)
}
