use graded_algebra::{Multivector, OddKind, Poly, RatFunc, Scalar};
use duality_engine::{sdual_closed_form, ClosedMode, DualityFrame, SignConventionFile};
use polyvector_calculus::{divergence, dolbeault, omega_flat, sn_bracket, CalabiYauOrdering};

use crate::brane::BraneSpec;
use crate::BraneError;

/// Closed-string field representing the backreaction of a brane.
#[derive(Clone, Debug)]
pub struct SourcedField {
    pub value: Multivector,
    pub brane: BraneSpec,
}

/// `N theta_wrapped ^ sum_i s_i x~_i dx~_1 ... (omit i) ... dx~_k / |x|^(2k)` over the
/// normal coordinates `x_1, ..., x_k`, with the term signs `s_i` supplied.
pub fn bm_candidate(brane: &BraneSpec, signs: &[i32]) -> Result<SourcedField, BraneError> {
    let normal = brane.normal_b();
    let k = normal.len();
    if k == 0 {
        return Err(BraneError::Codimension);
    }
    if signs.len() != k {
        return Err(BraneError::Unsupported(format!("{} term signs for codimension {}", signs.len(), k)));
    }
    let reg = brane.registry();
    let var = |n: &str| reg.var(n).ok_or_else(|| BraneError::UnknownCoordinate(n.to_string()));
    let mut coords = Vec::with_capacity(k);
    for n in &normal {
        let x = var(n)?;
        let xb = reg.conjugate(x).ok_or_else(|| BraneError::UnknownCoordinate(format!("{}~", n)))?;
        let leg = reg.dbar_form(x).ok_or_else(|| BraneError::UnknownCoordinate(format!("db{}", n)))?;
        coords.push((x, xb, leg));
    }
    let mut r2 = Poly::zero();
    for &(x, xb, _) in &coords {
        r2 = r2.add(&Poly::var(x).mul(&Poly::var(xb)));
    }
    let den = r2.pow(k as u32);
    let mut thetas = Vec::new();
    for n in brane.wrapped_b() {
        thetas.push(reg.theta(var(&n)?).expect("polyvector leg"));
    }
    let n = Scalar::from_int(brane.count as i64);
    let mut value = Multivector::zero(&reg);
    for (i, &(_, xb, _)) in coords.iter().enumerate() {
        let mut legs = thetas.clone();
        legs.extend(coords.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, c)| c.2));
        let c = RatFunc::from_fraction(Poly::var(xb).scale(&(&n * &Scalar::from_int(signs[i] as i64))), &den);
        value = value.add(&Multivector::term(&reg, c, &legs));
    }
    Ok(SourcedField { value, brane: brane.clone() })
}

/// Bochner-Martinelli kernel of the normal directions: alternating term signs.
pub fn bochner_martinelli(brane: &BraneSpec) -> Result<SourcedField, BraneError> {
    let k = brane.b_codimension();
    let signs: Vec<i32> = (0..k).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
    bm_candidate(brane, &signs)
}

impl SourcedField {
    fn calabi_yau(&self) -> Result<CalabiYauOrdering, BraneError> {
        Ok(self.brane.background.calabi_yau(self.value.registry())?)
    }

    pub fn divergence(&self) -> Result<Multivector, BraneError> {
        Ok(divergence(&self.value, &self.calabi_yau()?)?)
    }

    /// `dbar` of the field; zero as a rational function off the locus.
    pub fn dolbeault(&self) -> Multivector {
        dolbeault(&self.value)
    }

    pub fn bracket(&self, pi: &Multivector) -> Result<Multivector, BraneError> {
        Ok(sn_bracket(pi, &self.value, &self.calabi_yau()?)?)
    }

    /// Through `PV(C^2_{u,v}) = Omega(R^4)` when the background carries `u, v`.
    pub fn symplectic_image(&self) -> Result<Multivector, BraneError> {
        let reg = self.value.registry();
        if reg.var("u").is_none() || reg.var("v").is_none() {
            return Ok(self.value.clone());
        }
        let uv = CalabiYauOrdering::new(reg, &["u", "v"])?;
        Ok(omega_flat(&self.value, &uv)?)
    }
}

/// Every term of `m` carries one or two legs along `u, v`, the leg `D_z`, and no
/// other polyvector leg.
pub fn d3_leg_structure(m: &Multivector) -> bool {
    let reg = m.registry();
    let (Some(u), Some(v), Some(z)) = (reg.var("u"), reg.var("v"), reg.var("z")) else { return false };
    let dz = reg.theta(z);
    m.terms().all(|(mono, _)| {
        let along = mono.iter().filter(|&&g| reg.odd(g).kind.coordinate().is_some_and(|c| c == u || c == v)).count();
        let thetas: Vec<_> = mono.iter().filter(|&&g| matches!(reg.odd(g).kind, OddKind::PolyvectorDir(_))).collect();
        (1..=2).contains(&along) && thetas.len() == 1 && Some(*thetas[0]) == dz
    })
}

/// True iff each component, after the symplectic identification, falls in an
/// identity case of the five-case S-duality and the image equals the input.
pub fn sdual_fixes_d3(field: &SourcedField) -> bool {
    let Ok(m) = field.symplectic_image() else { return false };
    if m.is_zero() {
        return true;
    }
    let Ok(frame) = DualityFrame::standard(m.registry(), false) else { return false };
    let Ok(out) = sdual_closed_form(&m, &frame, ClosedMode::CTimesC2, &SignConventionFile::frozen()) else { return false };
    out.trace.iter().all(|t| t.case == "identity") && out.image == m
}
