use num_rational::BigRational;
use num_traits::One;

use super::buchberger::{reduce, reduced_basis, OrderedPoly};
use super::{GbConfig, IdealPresentation, ReducedGB};
use crate::error::{Error, Result};
use crate::polyalg::{MonomialOrder, MultiPoly, VarContext};

/// Ideal operations sharing one set of resource caps.
#[derive(Debug, Clone, Copy, Default)]
pub struct Groebner {
    cfg: GbConfig,
}

impl Groebner {
    pub fn new(cfg: GbConfig) -> Self {
        Groebner { cfg }
    }

    pub fn config(&self) -> &GbConfig {
        &self.cfg
    }

    pub fn basis(&self, ideal: &IdealPresentation, order: MonomialOrder) -> Result<ReducedGB> {
        let ctx = ideal.context();
        if ctx.is_empty() {
            return Err(Error::InvalidContext("Gröbner bases need at least one variable".into()));
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > ctx.len() {
                return Err(Error::InvalidSpec(format!(
                    "elimination block {k} is larger than the {} variables",
                    ctx.len()
                )));
            }
        }
        let internal = reduced_basis(ideal.generators(), order, &self.cfg)?;
        let basis = internal.iter().map(|g| g.to_poly(ctx)).collect();
        Ok(ReducedGB { ctx: ctx.clone(), order, basis, internal })
    }

    /// Whether every generator of `b` lies in the ideal of `a`.
    pub fn contains(&self, a: &IdealPresentation, b: &IdealPresentation, order: MonomialOrder) -> Result<bool> {
        if a.context() != b.context() {
            return Err(Error::ContextMismatch);
        }
        let gb = self.basis(a, order)?;
        for g in b.generators() {
            if !normal_form(g, &gb)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equal(&self, a: &IdealPresentation, b: &IdealPresentation, order: MonomialOrder) -> Result<bool> {
        if a.context() != b.context() {
            return Err(Error::ContextMismatch);
        }
        Ok(self.basis(a, order)? == self.basis(b, order)?)
    }

    /// Generators of `I ∩ Q[remaining variables]`, over the context with the
    /// dropped variables removed (other variables keep their relative order).
    pub fn eliminate(&self, ideal: &IdealPresentation, drop: &[&str]) -> Result<IdealPresentation> {
        let ctx = ideal.context();
        let mut dropped = Vec::new();
        for name in drop {
            let idx = ctx.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            if !dropped.contains(&idx) {
                dropped.push(idx);
            }
        }
        dropped.sort_unstable();
        let kept: Vec<usize> = (0..ctx.len()).filter(|i| !dropped.contains(i)).collect();

        // Reorder so the dropped block comes first, then run an elimination order.
        let order_idx: Vec<usize> = dropped.iter().chain(kept.iter()).copied().collect();
        let names: Vec<&str> = order_idx.iter().map(|&i| ctx.name(i)).collect();
        let work_ctx = VarContext::new(&names)?;
        let mut mapping = vec![0; ctx.len()];
        for (new, &old) in order_idx.iter().enumerate() {
            mapping[old] = new;
        }
        let gens = ideal.generators().iter().map(|g| g.remap(&work_ctx, &mapping)).collect();
        let work = IdealPresentation::new(&work_ctx, gens)?;
        let k = dropped.len();
        let gb = self.basis(&work, MonomialOrder::Elimination(k))?;

        let kept_names: Vec<&str> = kept.iter().map(|&i| ctx.name(i)).collect();
        let out_ctx = VarContext::new(&kept_names)?;
        let back: Vec<usize> = (0..work_ctx.len()).map(|i| i.saturating_sub(k)).collect();
        let gens = gb
            .basis()
            .iter()
            .filter(|g| (0..k).all(|i| !g.involves(i)))
            .map(|g| g.remap(&out_ctx, &back))
            .collect();
        IdealPresentation::new(&out_ctx, gens)
    }

    /// `I : f^∞`, via eliminating `w` from `I + <1 - w f>`.
    pub fn saturate(&self, ideal: &IdealPresentation, f: &MultiPoly) -> Result<IdealPresentation> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let ctx = ideal.context();
        if f.context() != ctx {
            return Err(Error::ContextMismatch);
        }
        let w = ctx.fresh_name("w");
        let ext = ctx.with_prepended(&w)?;
        let mut gens = ideal
            .generators()
            .iter()
            .map(|g| g.embed_into(&ext))
            .collect::<Result<Vec<_>>>()?;
        let wf = &MultiPoly::var(&ext, &w)? * &f.embed_into(&ext)?;
        gens.push(&MultiPoly::one(&ext) - &wf);
        let out = self.eliminate(&IdealPresentation::new(&ext, gens)?, &[&w])?;
        // The eliminated context equals `ctx` by value; hand back the caller's handle.
        IdealPresentation::new(ctx, out.generators().iter().map(|g| g.remap(ctx, &identity(ctx.len()))).collect())
    }

    /// The homogenisation of the ideal itself: saturate the generator-wise
    /// homogenisation by the new variable.
    pub fn homogenise_ideal(&self, ideal: &IdealPresentation, tvar: &str) -> Result<IdealPresentation> {
        let naive = homogenise_naive(ideal, tvar)?;
        let t = MultiPoly::var(naive.context(), tvar)?;
        self.saturate(&naive, &t)
    }
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Reduced Gröbner basis with default resource caps.
pub fn buchberger(ideal: &IdealPresentation, order: MonomialOrder) -> Result<ReducedGB> {
    Groebner::default().basis(ideal, order)
}

/// Remainder of `f` modulo the basis; zero exactly when `f` lies in the ideal.
pub fn normal_form(f: &MultiPoly, gb: &ReducedGB) -> Result<MultiPoly> {
    if f.context() != gb.context() {
        return Err(Error::ContextMismatch);
    }
    let order = gb.order();
    let refs: Vec<&OrderedPoly> = gb.internal.iter().collect();
    let r = reduce(&OrderedPoly::from_poly(f, order), &refs, order)?;
    Ok(r.to_poly(gb.context()))
}

/// Tests `b ⊆ a`.
pub fn ideal_contains(a: &IdealPresentation, b: &IdealPresentation, order: MonomialOrder) -> Result<bool> {
    Groebner::default().contains(a, b, order)
}

pub fn ideal_equal(a: &IdealPresentation, b: &IdealPresentation, order: MonomialOrder) -> Result<bool> {
    Groebner::default().equal(a, b, order)
}

pub fn eliminate(ideal: &IdealPresentation, drop: &[&str]) -> Result<IdealPresentation> {
    Groebner::default().eliminate(ideal, drop)
}

pub fn saturate(ideal: &IdealPresentation, f: &MultiPoly) -> Result<IdealPresentation> {
    Groebner::default().saturate(ideal, f)
}

/// Homogenises every generator separately with `tvar` appended to the
/// context. The result depends on the presentation.
pub fn homogenise_naive(ideal: &IdealPresentation, tvar: &str) -> Result<IdealPresentation> {
    let ext = ideal.context().with_appended(tvar)?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.homogenise_into(&ext, tvar))
        .collect::<Result<Vec<_>>>()?;
    IdealPresentation::new(&ext, gens)
}

pub fn homogenise_ideal(ideal: &IdealPresentation, tvar: &str) -> Result<IdealPresentation> {
    Groebner::default().homogenise_ideal(ideal, tvar)
}

/// Sets `tvar = 1` in every generator and drops it from the context.
pub fn dehomogenise(ideal: &IdealPresentation, tvar: &str) -> Result<IdealPresentation> {
    let one = BigRational::one();
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.specialize_and_drop(tvar, &one))
        .collect::<Result<Vec<_>>>()?;
    let names: Vec<&str> = ideal.context().names().iter().map(String::as_str).filter(|n| *n != tvar).collect();
    IdealPresentation::new(&VarContext::new(&names)?, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{parse_poly, Ctx};

    fn ctx(names: &[&str]) -> Ctx {
        VarContext::new(names).unwrap()
    }

    fn ideal(c: &Ctx, gens: &[&str]) -> IdealPresentation {
        IdealPresentation::new(c, gens.iter().map(|g| parse_poly(g, c).unwrap()).collect()).unwrap()
    }

    fn gb_strings(i: &IdealPresentation, order: MonomialOrder) -> Vec<String> {
        buchberger(i, order).unwrap().basis_strings()
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let c = ctx(&["x", "y", "z"]);
        assert_eq!(gb_strings(&ideal(&c, &["x^2 + y*z - 1"]), MonomialOrder::Grevlex), ["x^2 + y*z - 1"]);
        // non-monic generator is normalised
        assert_eq!(gb_strings(&ideal(&c, &["2*x^2 + 2*y*z - 2"]), MonomialOrder::Grevlex), ["x^2 + y*z - 1"]);
    }

    #[test]
    fn linear_elimination_in_lex() {
        let c = ctx(&["x", "y"]);
        assert_eq!(gb_strings(&ideal(&c, &["x", "x - y"]), MonomialOrder::Lex), ["y", "x"]);
    }

    #[test]
    fn unit_and_zero_ideals() {
        let c = ctx(&["x", "y"]);
        let unit = buchberger(&ideal(&c, &["x", "x - 1"]), MonomialOrder::Grevlex).unwrap();
        assert!(unit.is_unit());
        assert_eq!(unit.basis_strings(), ["1"]);
        let zero = buchberger(&ideal(&c, &["0"]), MonomialOrder::Grevlex).unwrap();
        assert!(zero.is_empty());
    }

    #[test]
    fn textbook_basis() {
        // Cox–Little–O'Shea: <x^3 - 2xy, x^2 y - 2y^2 + x> in grlex has reduced basis {x^2, xy, y^2 - x/2}
        let c = ctx(&["x", "y"]);
        let i = ideal(&c, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]);
        assert_eq!(gb_strings(&i, MonomialOrder::Grevlex), ["y^2 - 1/2*x", "x*y", "x^2"]);
    }

    #[test]
    fn normal_form_examples() {
        let c = ctx(&["x", "y", "z"]);
        let gb = buchberger(&ideal(&c, &["x^2 + y*z - 1"]), MonomialOrder::Grevlex).unwrap();
        assert_eq!(normal_form(&MultiPoly::one(&c), &gb).unwrap(), MultiPoly::one(&c));
        let f = parse_poly("x^3 + x*y*z", &c).unwrap();
        assert_eq!(normal_form(&f, &gb).unwrap().to_string(), "x");
        let other = ctx(&["a"]);
        assert_eq!(normal_form(&MultiPoly::one(&other), &gb), Err(Error::ContextMismatch));
    }

    #[test]
    fn containment_and_equality() {
        let c = ctx(&["x", "y"]);
        let x = ideal(&c, &["x"]);
        let x2 = ideal(&c, &["x^2"]);
        assert!(ideal_contains(&x, &x2, MonomialOrder::Grevlex).unwrap());
        assert!(!ideal_contains(&x2, &x, MonomialOrder::Grevlex).unwrap());
        assert!(ideal_contains(&x, &x, MonomialOrder::Grevlex).unwrap());
        assert!(!ideal_equal(&x, &x2, MonomialOrder::Grevlex).unwrap());
        assert!(ideal_equal(&ideal(&c, &["x + y", "x - y"]), &ideal(&c, &["x", "y"]), MonomialOrder::Lex).unwrap());
    }

    #[test]
    fn twisted_cubic_elimination() {
        let c = ctx(&["x", "y", "z"]);
        let elim = eliminate(&ideal(&c, &["y - x^2", "z - x^3"]), &["x"]).unwrap();
        assert_eq!(elim.context().names(), &["y", "z"]);
        // substitution oracle: every generator vanishes on (t^2, t^3)
        for g in elim.generators() {
            for t in -3i64..=3 {
                let tt = BigRational::from_integer(t.into());
                let pt = [tt.clone() * &tt, tt.clone() * &tt * &tt];
                assert_eq!(g.evaluate(&pt), BigRational::from_integer(0.into()));
            }
        }
        let target = ideal(elim.context(), &["z^2 - y^3"]);
        assert!(ideal_contains(&elim, &target, MonomialOrder::Grevlex).unwrap());
        assert!(ideal_equal(&elim, &target, MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn trivial_eliminations() {
        let c = ctx(&["x", "y"]);
        assert!(eliminate(&ideal(&c, &["x"]), &["x"]).unwrap().is_zero_ideal());
        let c = ctx(&["w", "y"]);
        assert!(eliminate(&ideal(&c, &["1 - w*y"]), &["w"]).unwrap().is_zero_ideal());
        assert_eq!(eliminate(&ideal(&c, &["w"]), &["v"]), Err(Error::UnknownVariable("v".into())));
    }

    #[test]
    fn saturation_examples() {
        let c = ctx(&["x", "t"]);
        let s = saturate(&ideal(&c, &["t*x"]), &parse_poly("t", &c).unwrap()).unwrap();
        assert_eq!(s.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(), ["x"]);
        assert!(std::sync::Arc::ptr_eq(s.context(), &c));

        let c = ctx(&["x", "y", "z", "t"]);
        let quadric = ideal(&c, &["x^2 + y*z - t^2"]);
        let t = parse_poly("t", &c).unwrap();
        let s = saturate(&quadric, &t).unwrap();
        assert!(ideal_equal(&s, &quadric, MonomialOrder::Grevlex).unwrap());
        let again = saturate(&s, &t).unwrap();
        assert!(ideal_equal(&again, &s, MonomialOrder::Grevlex).unwrap());

        let c = ctx(&["x", "y"]);
        let x = parse_poly("x", &c).unwrap();
        let s = saturate(&ideal(&c, &["x"]), &x).unwrap();
        assert!(buchberger(&s, MonomialOrder::Grevlex).unwrap().is_unit());
        assert_eq!(saturate(&ideal(&c, &["x"]), &MultiPoly::zero(&c)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn naive_homogenisation_of_the_quadric() {
        let c = ctx(&["x", "y", "z"]);
        let h = homogenise_naive(&ideal(&c, &["x^2 + y*z - 1"]), "t").unwrap();
        assert_eq!(h.to_string(), "<x^2 + y*z - t^2>");
        assert_eq!(homogenise_naive(&ideal(&c, &["x"]), "x"), Err(Error::VariableCollision("x".into())));
    }

    #[test]
    fn principal_ideal_homogenisations_agree() {
        let c = ctx(&["x", "y", "z"]);
        let i = ideal(&c, &["x^2 + y*z - 1"]);
        let naive = homogenise_naive(&i, "t").unwrap();
        let full = homogenise_ideal(&i, "t").unwrap();
        assert!(ideal_equal(&naive, &full, MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn empty_variety_homogenises_to_the_unit_ideal() {
        let c = ctx(&["x"]);
        let i = ideal(&c, &["x", "x - 1"]);
        let naive = homogenise_naive(&i, "t").unwrap();
        assert_eq!(gb_strings(&naive, MonomialOrder::Grevlex), ["t", "x"]);
        let full = homogenise_ideal(&i, "t").unwrap();
        assert!(buchberger(&full, MonomialOrder::Grevlex).unwrap().is_unit());
    }

    #[test]
    fn homogenise_ideal_is_presentation_independent_on_a_small_case() {
        // <x^2 - y, x^3 - x> and its presentation with x*y - x in place of x^3 - x
        let c = ctx(&["x", "y"]);
        let a = ideal(&c, &["x^2 - y", "x^3 - x"]);
        let b = ideal(&c, &["x^2 - y", "x*y - x"]);
        assert!(ideal_equal(&a, &b, MonomialOrder::Grevlex).unwrap());
        let (na, nb) = (homogenise_naive(&a, "t").unwrap(), homogenise_naive(&b, "t").unwrap());
        assert!(!ideal_equal(&na, &nb, MonomialOrder::Grevlex).unwrap());
        let (ha, hb) = (homogenise_ideal(&a, "t").unwrap(), homogenise_ideal(&b, "t").unwrap());
        assert!(ideal_equal(&ha, &hb, MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn resource_cap_is_enforced() {
        // cyclic-4
        let c = ctx(&["a", "b", "c", "d"]);
        let i = ideal(&c, &["a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"]);
        let tight = Groebner::new(GbConfig { max_pairs: 2, max_degree: 64 });
        assert!(matches!(tight.basis(&i, MonomialOrder::Grevlex), Err(Error::ResourceLimit(_))));
        let low_degree = Groebner::new(GbConfig { max_pairs: 1000, max_degree: 3 });
        assert!(matches!(low_degree.basis(&i, MonomialOrder::Grevlex), Err(Error::ResourceLimit(_))));
        assert!(Groebner::default().basis(&i, MonomialOrder::Grevlex).is_ok());
    }

    #[test]
    fn dehomogenise_drops_the_variable() {
        let c = ctx(&["x", "y"]);
        let i = ideal(&c, &["x^2 - y", "x + 3"]);
        let back = dehomogenise(&homogenise_naive(&i, "t").unwrap(), "t").unwrap();
        assert_eq!(back.context().names(), c.names());
        assert_eq!(back.to_string(), i.to_string());
    }
}
