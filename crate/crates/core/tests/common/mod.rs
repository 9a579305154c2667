#![allow(dead_code)]

use num_rational::BigRational;
use orbitcompat::groebner::IdealPresentation;
use orbitcompat::orbit::{fibre_ideal, orbit_ideal_charvalues, DiagSpec, OrbitIdeal};
use orbitcompat::polyalg::{parse_poly, Ctx, MultiPoly, VarContext};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn ideal(names: &[&str], gens: &[&str]) -> IdealPresentation {
    let ctx = VarContext::new(names).unwrap();
    let gens = gens.iter().map(|g| parse_poly(g, &ctx).unwrap()).collect();
    IdealPresentation::new(&ctx, gens).unwrap()
}

pub fn poly(ctx: &Ctx, text: &str) -> MultiPoly {
    parse_poly(text, ctx).unwrap()
}

/// The orbit `<det(A + s1), det(A + s2)>` and its fibre presentations
/// `I = <p, q, f>` and `J = <p, p - q, f>` over the value 0 of
/// `f = x1 - x2`.
pub struct RegularFibre {
    pub orbit: OrbitIdeal,
    pub i: IdealPresentation,
    pub j: IdealPresentation,
}

pub fn regular_fibre(h0: &[i64], shifts: &[i64]) -> RegularFibre {
    let spec = DiagSpec::from_ints(h0).unwrap();
    let shifts: Vec<BigRational> = shifts.iter().map(|&s| q(s)).collect();
    let orbit = orbit_ideal_charvalues(&spec, &shifts).unwrap();
    let h = DiagSpec::from_ints(&[1, -1, 0]).unwrap();
    let i = fibre_ideal(&orbit, &h, &q(0)).unwrap();
    let g = i.generators();
    let j = IdealPresentation::new(i.context(), vec![g[0].clone(), &g[0] - &g[1], g[2].clone()]).unwrap();
    RegularFibre { orbit, i, j }
}

/// Eigenvalues `1, 0, -1` with `p = det A`, `q = det(A - id)`.
pub fn four_value_fibre() -> RegularFibre {
    regular_fibre(&[1, 0, -1], &[0, -1])
}

/// Eigenvalues `3, -1, -2` with `p = det(A + id)`, `q = det(A + 2 id)`.
pub fn six_value_fibre() -> RegularFibre {
    regular_fibre(&[3, -1, -2], &[1, 2])
}
