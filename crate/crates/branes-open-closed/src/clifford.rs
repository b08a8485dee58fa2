use graded_algebra::linalg::{dense_to_sparse, nullspace, rank};
use graded_algebra::Scalar;

/// Element of `Lambda[e1, e2]` on the basis `1, e1, e2, e1e2` (bit `i` = `e_{i+1}`).
pub type Element = [Scalar; 4];

pub const BASIS_LABELS: [&str; 4] = ["1", "e1", "e2", "e1*e2"];

fn unit(mask: usize) -> Element {
    let mut out: Element = Default::default();
    out[mask] = Scalar::one();
    out
}

fn bits_below(mask: usize, i: usize) -> u32 {
    (mask & ((1 << i) - 1)).count_ones()
}

fn bits_above(mask: usize, i: usize) -> u32 {
    (mask >> (i + 1)).count_ones()
}

/// Left derivative `d/de_i` of a basis monomial.
fn left_derivative(mask: usize, i: usize) -> Option<(usize, i32)> {
    (mask & (1 << i) != 0).then(|| (mask ^ (1 << i), if bits_below(mask, i) % 2 == 0 { 1 } else { -1 }))
}

/// Right derivative of a basis monomial.
fn right_derivative(mask: usize, i: usize) -> Option<(usize, i32)> {
    (mask & (1 << i) != 0).then(|| (mask ^ (1 << i), if bits_above(mask, i) % 2 == 0 { 1 } else { -1 }))
}

/// Exterior product of basis monomials.
fn wedge(a: usize, b: usize) -> Option<(usize, i32)> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0;
    for i in 0..2 {
        if b & (1 << i) != 0 {
            swaps += bits_above(a, i);
        }
    }
    Some((a | b, if swaps % 2 == 0 { 1 } else { -1 }))
}

/// Product `a * exp(P) * b` with `P = (1/2)(d<_1 d>_2 + d<_2 d>_1)`, the odd
/// bidifferential operator splitting `d/de1 d/de2`; right derivatives act on the
/// left factor, left derivatives on the right factor.
pub fn star_basis(a: usize, b: usize) -> Element {
    let half = Scalar::from_ratio(1, 2);
    // Terms of exp(P)(a (x) b): (left mask, right mask, coefficient).
    let mut level = vec![(a, b, Scalar::one())];
    let mut out: Element = Default::default();
    let mut k = 0i64;
    let mut factorial = Scalar::one();
    while !level.is_empty() {
        for (l, r, c) in &level {
            if let Some((m, s)) = wedge(*l, *r) {
                out[m] += &(&(c * &factorial.inv()) * &Scalar::from_int(s as i64));
            }
        }
        let mut next = Vec::new();
        for (l, r, c) in &level {
            for (i, j) in [(0, 1), (1, 0)] {
                if let (Some((l2, s1)), Some((r2, s2))) = (right_derivative(*l, i), left_derivative(*r, j)) {
                    next.push((l2, r2, &(c * &half) * &Scalar::from_int((s1 * s2) as i64)));
                }
            }
        }
        level = next;
        k += 1;
        factorial = &factorial * &Scalar::from_int(k);
    }
    out
}

pub fn star(x: &Element, y: &Element) -> Element {
    let mut out: Element = Default::default();
    for a in 0..4 {
        if x[a].is_zero() {
            continue;
        }
        for b in 0..4 {
            if y[b].is_zero() {
                continue;
            }
            let p = star_basis(a, b);
            let c = &x[a] * &y[b];
            for m in 0..4 {
                out[m] += &(&p[m] * &c);
            }
        }
    }
    out
}

fn undeformed(x: &Element, y: &Element) -> Element {
    let mut out: Element = Default::default();
    for a in 0..4 {
        for b in 0..4 {
            if let Some((m, s)) = wedge(a, b) {
                out[m] += &(&(&x[a] * &y[b]) * &Scalar::from_int(s as i64));
            }
        }
    }
    out
}

fn add(x: &Element, y: &Element) -> Element {
    std::array::from_fn(|i| &x[i] + &y[i])
}

fn sub(x: &Element, y: &Element) -> Element {
    std::array::from_fn(|i| &x[i] - &y[i])
}

type Matrix = [[Scalar; 2]; 2];

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    std::array::from_fn(|i| std::array::from_fn(|j| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j])))
}

fn mat_add(a: &Matrix, b: &Matrix, k: &Scalar) -> Matrix {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] + &(&b[i][j] * k)))
}

fn identity() -> Matrix {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { Scalar::one() } else { Scalar::zero() }))
}

/// Left action on `Lambda[e1]` with basis `(1, e1)`: `e1` acts by multiplication,
/// `e2` by `d/de1`, and `e1e2 = e1 * e2 - 1/2`.
pub fn representation(mask: usize) -> Matrix {
    let z = Scalar::zero;
    let o = Scalar::one;
    let e1: Matrix = [[z(), z()], [o(), z()]];
    let e2: Matrix = [[z(), o()], [z(), z()]];
    match mask {
        0 => identity(),
        1 => e1,
        2 => e2,
        _ => mat_add(&mat_mul(&e1, &e2), &identity(), &Scalar::from_ratio(-1, 2)),
    }
}

fn represent(x: &Element) -> Matrix {
    let mut out: Matrix = Default::default();
    for (m, c) in x.iter().enumerate() {
        out = mat_add(&out, &representation(m), c);
    }
    out
}

#[derive(Clone, Debug)]
pub struct CliffordReport {
    pub associative: bool,
    pub unital: bool,
    /// `e1*e2 + e2*e1` for the deformed product.
    pub anticommutator: Element,
    /// The same for the undeformed wedge product.
    pub undeformed_anticommutator: Element,
    pub center_dim: usize,
    pub homomorphism: bool,
    pub representation_rank: usize,
    /// Preimages of the elementary matrices multiply as `E_ij E_kl = delta_jk E_il`.
    pub matrix_units: bool,
}

impl CliffordReport {
    pub fn anticommutator_is_nonzero_scalar(&self) -> bool {
        !self.anticommutator[0].is_zero() && self.anticommutator[1..].iter().all(|c| c.is_zero())
    }

    pub fn passed(&self) -> bool {
        self.associative
            && self.unital
            && self.anticommutator_is_nonzero_scalar()
            && self.undeformed_anticommutator.iter().all(|c| c.is_zero())
            && self.center_dim == 1
            && self.homomorphism
            && self.representation_rank == 4
            && self.matrix_units
    }
}

/// Structure of the deformed product on `Lambda[e1, e2]`.
pub fn clifford_deformation_check() -> CliffordReport {
    let basis: Vec<Element> = (0..4).map(unit).collect();
    let mut associative = true;
    for a in &basis {
        for b in &basis {
            for c in &basis {
                associative &= star(&star(a, b), c) == star(a, &star(b, c));
            }
        }
    }
    let unital = basis.iter().all(|x| star(&basis[0], x) == *x && star(x, &basis[0]) == *x);
    let (e1, e2) = (&basis[1], &basis[2]);
    let anticommutator = add(&star(e1, e2), &star(e2, e1));
    let undeformed_anticommutator = add(&undeformed(e1, e2), &undeformed(e2, e1));
    // Centre: x with x*b - b*x = 0 for every basis b; 16 linear equations in 4 unknowns.
    let mut rows = Vec::new();
    for b in &basis {
        for m in 0..4 {
            let coeffs: Vec<Scalar> = (0..4).map(|a| sub(&star(&basis[a], b), &star(b, &basis[a]))[m].clone()).collect();
            rows.push(dense_to_sparse(&coeffs));
        }
    }
    let center_dim = nullspace(rows, 4).len();
    let mut homomorphism = true;
    for a in &basis {
        for b in &basis {
            homomorphism &= represent(&star(a, b)) == mat_mul(&represent(a), &represent(b));
        }
    }
    let flat = |m: &Matrix| dense_to_sparse(&[m[0][0].clone(), m[0][1].clone(), m[1][0].clone(), m[1][1].clone()]);
    let representation_rank = rank((0..4).map(|m| flat(&representation(m))));
    let matrix_units = check_matrix_units();
    CliffordReport { associative, unital, anticommutator, undeformed_anticommutator, center_dim, homomorphism, representation_rank, matrix_units }
}

/// Solve for the preimage of each elementary matrix and compare products in the
/// deformed algebra.
fn check_matrix_units() -> bool {
    let cols: Vec<_> = (0..4)
        .map(|m| {
            let r = representation(m);
            dense_to_sparse(&[r[0][0].clone(), r[0][1].clone(), r[1][0].clone(), r[1][1].clone()])
        })
        .collect();
    let mut units: Vec<Element> = Vec::new();
    for k in 0..4 {
        let mut target = vec![Scalar::zero(); 4];
        target[k] = Scalar::one();
        match graded_algebra::linalg::solve_columns(&cols, &dense_to_sparse(&target)) {
            Some(x) => units.push(std::array::from_fn(|i| x[i].clone())),
            None => return false,
        }
    }
    let idx = |i: usize, j: usize| 2 * i + j;
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let lhs = star(&units[idx(i, j)], &units[idx(k, l)]);
                    let rhs = if j == k { units[idx(i, l)].clone() } else { Default::default() };
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}
