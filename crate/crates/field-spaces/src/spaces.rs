use std::collections::BTreeMap;

use graded_algebra::{Multivector, OddKind};
use polyvector_calculus::{divergence, top_primitive, CalabiYauOrdering, CalculusError};

use crate::{BackgroundDescriptor, FieldError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `ker d` in all polyvector degrees.
    FullBcov,
    /// `ker d` in polyvector degrees `<= d - 1`.
    MinimalBcov,
    /// `ker d` in degrees `<= d - 2`, `im d` in degree `d - 1`, and degree `d`
    /// read through `PV^d = (im d in PV^{d-1}) + (ker d in PV^d)`.
    ExtendedMinimalBcov,
    /// Forms only: no polyvector legs.
    ElevenD,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpaceSpec {
    pub background: BackgroundDescriptor,
    pub variant: Variant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub diagnosis: Option<String>,
}

impl Membership {
    fn yes() -> Self {
        Membership { member: true, diagnosis: None }
    }

    fn no(reason: String) -> Self {
        Membership { member: false, diagnosis: Some(reason) }
    }
}

/// Polyvector degree of every term in the ordering's directions.
fn cy_degree(mono: &[graded_algebra::OddId], cy: &CalabiYauOrdering) -> usize {
    mono.iter().filter(|g| cy.contains_theta(**g)).count()
}

/// Components of `m` grouped by the full bidegree of their legs.
fn components(m: &Multivector) -> BTreeMap<(usize, usize, usize, usize), Multivector> {
    let mut out: BTreeMap<_, Multivector> = BTreeMap::new();
    for (mono, c) in m.terms() {
        let b = m.bidegree_of(mono);
        let t = Multivector::term(m.registry(), c.clone(), mono);
        let slot = out.entry((b.i, b.j, b.a, b.e)).or_insert_with(|| Multivector::zero(m.registry()));
        *slot = slot.add(&t);
    }
    out
}

pub fn is_member(m: &Multivector, spec: &FieldSpaceSpec) -> Result<Membership, FieldError> {
    let cy = spec.background.calabi_yau(m.registry())?;
    let d = cy.dim();
    let reg = m.registry();
    if spec.variant == Variant::ElevenD {
        for (mono, _) in m.terms() {
            if let Some(&g) = mono.iter().find(|&&g| matches!(reg.odd(g).kind, OddKind::PolyvectorDir(_) | OddKind::DeRhamForm(_))) {
                return Ok(Membership::no(format!("leg {} is not a form direction", reg.odd(g).display)));
            }
        }
        return Ok(Membership::yes());
    }
    for ((i, j, _, _), comp) in components(m) {
        let label = format!("PV^{{{},{}}} component {}", i, j, comp);
        let closed = |comp: &Multivector| -> Result<Option<Multivector>, FieldError> {
            let div = divergence(comp, &cy)?;
            Ok(if div.is_zero() { None } else { Some(div) })
        };
        match spec.variant {
            Variant::FullBcov => {
                if let Some(div) = closed(&comp)? {
                    return Ok(Membership::no(format!("{} has divergence {}", label, div)));
                }
            }
            Variant::MinimalBcov => {
                if i >= d {
                    return Ok(Membership::no(format!("{} has degree {} >= {}", label, i, d)));
                }
                if let Some(div) = closed(&comp)? {
                    return Ok(Membership::no(format!("{} has divergence {}", label, div)));
                }
            }
            Variant::ExtendedMinimalBcov => {
                if i == d {
                    // Read through PV^d = (im d in PV^{d-1}) + (ker d in PV^d).
                    let (image, _) = match split_top_degree(&comp, &cy) {
                        Ok(parts) => parts,
                        Err(FieldError::NotPolynomial) => {
                            return Ok(Membership::no(format!("{} has non-polynomial coefficients", label)))
                        }
                        Err(e) => return Err(e),
                    };
                    if !image.is_zero() {
                        if let Err(e) = top_primitive(&image, &cy) {
                            return Ok(Membership::no(format!("{}: image part has no primitive ({})", label, e)));
                        }
                    }
                } else if i + 1 == d {
                    match top_primitive(&comp, &cy) {
                        Ok(_) => {}
                        Err(CalculusError::NotClosed(div)) => {
                            return Ok(Membership::no(format!("{} is not in the image of d (obstruction {})", label, div)))
                        }
                        Err(CalculusError::NotPolynomial) => return Err(FieldError::NotPolynomial),
                        Err(e) => return Err(e.into()),
                    }
                } else if let Some(div) = closed(&comp)? {
                    return Ok(Membership::no(format!("{} has divergence {}", label, div)));
                }
            }
            Variant::ElevenD => unreachable!(),
        }
    }
    Ok(Membership::yes())
}

/// `m in PV^d -> (d(m - k), k)` with `k` the part of `m` whose coefficient is
/// independent of the holomorphic Calabi-Yau coordinates.
pub fn split_top_degree(m: &Multivector, cy: &CalabiYauOrdering) -> Result<(Multivector, Multivector), FieldError> {
    let reg = m.registry();
    let d = cy.dim();
    let mut kernel = Multivector::zero(reg);
    for (mono, c) in m.terms() {
        if cy_degree(mono, cy) != d {
            return Err(FieldError::NotTopDegree { expected: d });
        }
        let parts = c.split_by_vars(cy.coords()).ok_or(FieldError::NotPolynomial)?;
        for (mon, coeff) in parts {
            if mon.is_one() {
                kernel = kernel.add(&Multivector::term(reg, coeff, mono));
            }
        }
    }
    let image = divergence(&m.sub(&kernel), cy)?;
    Ok((image, kernel))
}

/// Inverse of [`split_top_degree`]: `kernel + F Omega^-1` with `F` the primitive of `image`.
pub fn reconstruct_top_degree(image: &Multivector, kernel: &Multivector, cy: &CalabiYauOrdering) -> Result<Multivector, FieldError> {
    if image.is_zero() {
        return Ok(kernel.clone());
    }
    let f = top_primitive(image, cy)?;
    Ok(kernel.add(&f.wedge(&cy.omega_inv())))
}

/// Components keyed by the polyvector degrees `(a, b)` in the two orderings.
pub fn decompose(m: &Multivector, first: &CalabiYauOrdering, second: &CalabiYauOrdering) -> BTreeMap<(usize, usize), Multivector> {
    let mut out: BTreeMap<(usize, usize), Multivector> = BTreeMap::new();
    for (mono, c) in m.terms() {
        let key = (cy_degree(mono, first), cy_degree(mono, second));
        let t = Multivector::term(m.registry(), c.clone(), mono);
        let slot = out.entry(key).or_insert_with(|| Multivector::zero(m.registry()));
        *slot = slot.add(&t);
    }
    out
}

/// Decomposition of `PV(C^5)` into `PV(C^2_{u,v}) (x) PV(C^3_{z,w1,w2})`.
pub fn decompose_c5(m: &Multivector) -> Result<BTreeMap<(usize, usize), Multivector>, FieldError> {
    let reg = m.registry();
    let first = CalabiYauOrdering::new(reg, &["u", "v"])?;
    let second = CalabiYauOrdering::new(reg, &["z", "w1", "w2"])?;
    Ok(decompose(m, &first, &second))
}
