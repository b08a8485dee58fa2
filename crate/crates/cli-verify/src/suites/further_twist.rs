use field_spaces::{decompose_c5, reconstruct_top_degree, split_top_degree, BackgroundDescriptor};
use graded_algebra::Multivector;
use polyvector_calculus::{de_rham_holomorphic, divergence, omega_flat, sn_bracket, twisted_differential};

use super::calculus::{all_vars, flat, mixed, thetas};
use super::{equal, property, text, Suite, SuiteContext};
use crate::report::Check;
use crate::sampling;

pub struct FurtherTwist;

const N: usize = 100;

impl Suite for FurtherTwist {
    fn name(&self) -> &'static str {
        "further_twist"
    }

    fn run(&self, ctx: &SuiteContext) -> Vec<Check> {
        let (reg3, cy3) = flat(&["u", "v", "w"]);
        let (reg, cy) = flat(&["u", "v"]);
        let pi = cy.omega_inv();
        let th = thetas(&reg3);
        let (tu, tv) = (Multivector::odd(&reg3, th[0]), Multivector::odd(&reg3, th[1]));
        let pi3 = tu.wedge(&tv);
        let function = |r: &mut sampling::Rng8| sampling::multivector(r, &reg, &all_vars(&reg), &[], Some(0), 4);
        let show = |m: &Multivector| m.to_text();
        let mut out = Vec::new();

        let u = Multivector::var(&reg3, reg3.var("u").unwrap());
        out.push(equal("bivector_on_coordinate", "[D_u ^ D_v, u] = D_v", sn_bracket(&pi3, &u, &cy3).map_err(text), tv.clone()));
        out.push(property(
            "bivector_bracket_splits",
            "[D_u ^ D_v, m] = D_v ^ d_u m - D_u ^ d_v m",
            N,
            &mut ctx.rng("further_twist.mixed"),
            |r| mixed(r, &reg3),
            show,
            |m| {
                let (u, v) = (reg3.var("u").unwrap(), reg3.var("v").unwrap());
                let rhs = tv.wedge(&m.even_derivative(u)).sub(&tu.wedge(&m.even_derivative(v)));
                Ok(sn_bracket(&pi3, m, &cy3).map_err(text)? == rhs)
            },
        ));
        out.push(property(
            "twisted_differential_squares_to_zero",
            "dbar + [Pi, -] squares to zero for a constant Poisson bivector",
            N,
            &mut ctx.rng("further_twist.mixed"),
            |r| mixed(r, &reg3),
            show,
            |m| {
                let once = twisted_differential(m, &pi3, &cy3).map_err(text)?;
                Ok(twisted_differential(&once, &pi3, &cy3).map_err(text)?.is_zero())
            },
        ));
        out.push(property(
            "bivector_bracket_is_divergence_of_product",
            "[Pi, f] = divergence(f Pi) on C^2",
            N,
            &mut ctx.rng("further_twist.functions"),
            function,
            show,
            |f| Ok(sn_bracket(&pi, f, &cy).map_err(text)? == divergence(&f.wedge(&pi), &cy).map_err(text)?),
        ));
        out.push(property(
            "square_on_functions",
            "omega([Pi, f], -) = d f",
            N,
            &mut ctx.rng("further_twist.functions"),
            function,
            show,
            |f| Ok(omega_flat(&sn_bracket(&pi, f, &cy).map_err(text)?, &cy).map_err(text)? == de_rham_holomorphic(f, &cy)),
        ));
        out.push(property(
            "square_on_vectors",
            "omega([Pi, f D_u], -) = d omega(f D_u)",
            N,
            &mut ctx.rng("further_twist.functions"),
            function,
            show,
            |f| {
                let x = f.wedge(&Multivector::odd(&reg, cy.thetas()[0]));
                let lhs = omega_flat(&sn_bracket(&pi, &x, &cy).map_err(text)?, &cy).map_err(text)?;
                Ok(lhs == de_rham_holomorphic(&omega_flat(&x, &cy).map_err(text)?, &cy))
            },
        ));
        out.push(property(
            "top_degree_split_round_trip",
            "top polyvectors split into the image of divergence and its kernel",
            N,
            &mut ctx.rng("further_twist.functions"),
            |r| {
                let hol = reg.holomorphic_coords();
                sampling::multivector(r, &reg, &hol, &[], Some(0), 4).wedge(&pi)
            },
            show,
            |m| {
                let (image, kernel) = split_top_degree(m, &cy).map_err(text)?;
                let constant = kernel.terms().all(|(_, c)| cy.coords().iter().all(|&z| !c.depends_on(z)));
                Ok(constant && reconstruct_top_degree(&image, &kernel, &cy).map_err(text)? == *m)
            },
        ));
        let reg5 = BackgroundDescriptor::flat_c5().registry();
        out.push(property(
            "c5_decomposition_reconstructs",
            "PV(C^5) decomposes into PV(C^2) (x) PV(C^3)",
            N,
            &mut ctx.rng("further_twist.c5"),
            |r| sampling::multivector(r, &reg5, &reg5.holomorphic_coords(), &thetas(&reg5), None, 4),
            show,
            |m| {
                let parts = decompose_c5(m).map_err(text)?;
                let sum = parts.values().fold(Multivector::zero(&reg5), |acc, p| acc.add(p));
                let keyed = parts.iter().all(|(&(a, b), p)| p.terms().all(|(mono, _)| mono.len() == a + b));
                Ok(keyed && sum == *m)
            },
        ));
        out
    }
}
