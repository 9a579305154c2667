use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{format_rational, Ctx, Monomial, MonomialOrder, VarContext};
use crate::error::{Error, Result};

/// Sparse polynomial over the rationals in a named context.
///
/// Zero coefficients are never stored, so the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ctx: Ctx,
    terms: BTreeMap<Monomial, BigRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Exact `a op b`; both operands must share a context.
pub fn poly_arith(a: &MultiPoly, b: &MultiPoly, op: ArithOp) -> Result<MultiPoly> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

impl MultiPoly {
    pub fn zero(ctx: &Ctx) -> Self {
        MultiPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, BigRational::one())
    }

    pub fn constant(ctx: &Ctx, c: BigRational) -> Self {
        Self::from_terms(ctx, [(Monomial::one(ctx.len()), c)])
    }

    pub fn from_int(ctx: &Ctx, c: i64) -> Self {
        Self::constant(ctx, BigRational::from_integer(c.into()))
    }

    pub fn var(ctx: &Ctx, name: &str) -> Result<Self> {
        let idx = ctx.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(ctx, idx))
    }

    pub fn var_at(ctx: &Ctx, idx: usize) -> Self {
        Self::from_terms(ctx, [(Monomial::var(ctx.len(), idx), BigRational::one())])
    }

    /// Builds a polynomial from terms, merging repeated monomials.
    ///
    /// Panics if a monomial's length does not match the context.
    pub fn from_terms<I>(ctx: &Ctx, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut map: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ctx.len(), "monomial does not fit the context");
            accumulate(&mut map, m, c);
        }
        MultiPoly { ctx: ctx.clone(), terms: map }
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Maximum total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    fn check_ctx(&self, other: &MultiPoly) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ctx(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(MultiPoly { ctx: self.ctx.clone(), terms })
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ctx(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), -c.clone());
        }
        Ok(MultiPoly { ctx: self.ctx.clone(), terms })
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ctx(other)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut terms, ma.mul(mb)?, ca * cb);
            }
        }
        Ok(MultiPoly { ctx: self.ctx.clone(), terms })
    }

    pub fn pow(&self, k: u32) -> Result<MultiPoly> {
        let mut acc = MultiPoly::one(&self.ctx);
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ctx);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        MultiPoly { ctx: self.ctx.clone(), terms }
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> MultiPoly {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.ctx.len(), "evaluation point has wrong length");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.exponents().iter().zip(point) {
                if *e > 0 {
                    t *= num_traits::pow(x.clone(), *e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `value` for the variable `name` and removes it from the context.
    pub fn specialize_and_drop(&self, name: &str, value: &BigRational) -> Result<MultiPoly> {
        let idx = self.ctx.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let names: Vec<&str> = self
            .ctx
            .names()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, n)| n.as_str())
            .collect();
        let ctx = VarContext::new(&names)?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            let k = e.remove(idx);
            (Monomial::from_exponents(e), c * num_traits::pow(value.clone(), k as usize))
        });
        Ok(MultiPoly::from_terms(&ctx, terms))
    }

    /// Moves the polynomial into `target`, sending variable `i` to `mapping[i]`.
    ///
    /// Variables of `self` must map injectively; target variables not hit by
    /// the mapping get exponent zero.
    pub fn remap(&self, target: &Ctx, mapping: &[usize]) -> MultiPoly {
        assert_eq!(mapping.len(), self.ctx.len());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[mapping[i]] += x;
            }
            (Monomial::from_exponents(e), c.clone())
        });
        MultiPoly::from_terms(target, terms)
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn embed_into(&self, target: &Ctx) -> Result<MultiPoly> {
        let mapping = self
            .ctx
            .names()
            .iter()
            .map(|n| target.index_of(n).ok_or_else(|| Error::UnknownVariable(n.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.remap(target, &mapping))
    }

    /// Whether the polynomial involves the variable at `idx`.
    pub fn involves(&self, idx: usize) -> bool {
        self.terms.keys().any(|m| m.exponents()[idx] > 0)
    }

    /// Generator-wise homogenisation into a context that already holds `tvar`.
    ///
    /// `ext` must extend this polynomial's context by the variable `tvar`.
    pub fn homogenise_into(&self, ext: &Ctx, tvar: &str) -> Result<MultiPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let tidx = ext.index_of(tvar).ok_or_else(|| Error::UnknownVariable(tvar.to_string()))?;
        let base = self.embed_into(ext)?;
        let d = self.degree().unwrap();
        let terms = base.terms.into_iter().map(|(mut m, c)| {
            let k = d - m.degree();
            m.exponents_mut()[tidx] = u32::try_from(k).expect("degree fits in u32");
            (m, c)
        });
        Ok(MultiPoly::from_terms(ext, terms))
    }

    /// Homogenises with a fresh variable `tvar` appended to the context.
    pub fn homogenise(&self, tvar: &str) -> Result<MultiPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let ext = self.ctx.with_appended(tvar)?;
        self.homogenise_into(&ext, tvar)
    }

    /// Canonical text under `order`: terms descending, explicit `*`, `^` powers.
    pub fn to_string_with(&self, order: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let mono = self.format_monomial(m);
            if mono.is_empty() {
                out.push_str(&format_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format_rational(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        m.exponents()
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| match e {
                1 => self.ctx.name(i).to_string(),
                _ => format!("{}^{}", self.ctx.name(i), e),
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(MonomialOrder::Grevlex))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.ctx, self)
    }
}

// Operator sugar for code that builds polynomials inside one context.
// These panic on a context mismatch; use the `try_*` methods otherwise.

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("context mismatch in +")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("context mismatch in -")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("context mismatch in *")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        MultiPoly { ctx: self.ctx.clone(), terms }
    }
}
