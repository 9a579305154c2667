//! Buchberger's algorithm over an internal dense-in-order representation.
//!
//! Pairs are pruned with the Gebauer–Möller update (product criterion plus
//! chain criterion) and selected by the normal strategy: smallest lcm first.
//! The result is always post-reduced, so callers get the unique reduced basis.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::GbConfig;
use crate::error::{Error, Result};
use crate::polyalg::{Ctx, Monomial, MonomialOrder, MultiPoly};

/// Polynomial with terms sorted ascending under a fixed order (leading term last).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct OrderedPoly {
    pub(crate) terms: Vec<(Monomial, BigRational)>,
}

impl OrderedPoly {
    pub(crate) fn from_poly(p: &MultiPoly, order: MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        OrderedPoly { terms }
    }

    pub(crate) fn to_poly(&self, ctx: &Ctx) -> MultiPoly {
        MultiPoly::from_terms(ctx, self.terms.iter().cloned())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero polynomial").0
    }

    fn lc(&self) -> &BigRational {
        &self.terms.last().expect("nonzero polynomial").1
    }

    fn degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    fn make_monic(&mut self) {
        if self.is_zero() {
            return;
        }
        let inv = self.lc().recip();
        if inv.is_one() {
            return;
        }
        for (_, c) in &mut self.terms {
            *c *= &inv;
        }
    }

    /// `self - coef * mono * g`, merging two ascending term lists.
    fn sub_scaled(&self, coef: &BigRational, mono: &Monomial, g: &OrderedPoly, order: MonomialOrder) -> Result<Self> {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut shifted = Vec::with_capacity(g.terms.len());
        for (m, c) in &g.terms {
            shifted.push((m.mul(mono)?, c * coef));
        }
        let mut b = shifted.into_iter().peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match step {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => {
                    let (m, c) = b.next().unwrap();
                    out.push((m, -c));
                }
                Ordering::Equal => {
                    let (m, c1) = a.next().unwrap();
                    let (_, c2) = b.next().unwrap();
                    let c = c1 - c2;
                    if !c.is_zero() {
                        out.push((m.clone(), c));
                    }
                }
            }
        }
        Ok(OrderedPoly { terms: out })
    }

    fn s_poly(&self, other: &OrderedPoly, order: MonomialOrder) -> Result<Self> {
        let lcm = self.lm().lcm(other.lm());
        let ua = self.lm().quotient_of(&lcm).unwrap();
        let ub = other.lm().quotient_of(&lcm).unwrap();
        let mut lhs = Vec::with_capacity(self.terms.len());
        let inv = self.lc().recip();
        for (m, c) in &self.terms {
            lhs.push((m.mul(&ua)?, c * &inv));
        }
        let lhs = OrderedPoly { terms: lhs };
        lhs.sub_scaled(&other.lc().recip(), &ub, other, order)
    }
}

/// Fully reduces `f` modulo `basis` (every element of which is nonzero).
pub(crate) fn reduce(f: &OrderedPoly, basis: &[&OrderedPoly], order: MonomialOrder) -> Result<OrderedPoly> {
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, BigRational)> = Vec::new();
    while let Some((m, c)) = p.terms.last() {
        match basis.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                let q = g.lm().quotient_of(m).unwrap();
                let coef = c / g.lc();
                p = p.sub_scaled(&coef, &q, g, order)?;
            }
            None => rem.push(p.terms.pop().unwrap()),
        }
    }
    rem.reverse();
    Ok(OrderedPoly { terms: rem })
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<'a> {
    order: MonomialOrder,
    cfg: &'a GbConfig,
    polys: Vec<OrderedPoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn check_degree(&self, p: &OrderedPoly) -> Result<()> {
        let d = p.degree();
        if d > self.cfg.max_degree {
            return Err(Error::ResourceLimit(format!(
                "basis element of degree {d} exceeds the cap of {}",
                self.cfg.max_degree
            )));
        }
        Ok(())
    }

    /// Gebauer–Möller update after adding polynomial `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.polys[h].lm().clone();
        let mut fresh: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, lm_h.lcm(self.polys[g].lm())))
            .collect();

        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = fresh.pop() {
            let coprime = lm_h.is_coprime(self.polys[g1].lm());
            let dominated = fresh.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l1));
            if coprime || !dominated {
                kept.push((g1, l1));
            }
        }
        kept.retain(|(g, _)| !lm_h.is_coprime(self.polys[*g].lm()));

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && lm_h.lcm(polys[p.i].lm()) != p.lcm
                && lm_h.lcm(polys[p.j].lm()) != p.lcm)
        });
        self.pairs.extend(kept.into_iter().map(|(g, lcm)| Pair { i: g, j: h, lcm }));

        self.active.retain(|&g| !lm_h.divides(polys[g].lm()));
        self.active.push(h);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| order.cmp(&a.lcm, &b.lcm).then((a.i, a.j).cmp(&(b.i, b.j))))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn active_refs(&self) -> Vec<&OrderedPoly> {
        self.active.iter().map(|&g| &self.polys[g]).collect()
    }
}

/// Runs Buchberger's algorithm and returns the reduced, monic basis sorted by
/// ascending leading monomial.
pub(crate) fn reduced_basis(
    gens: &[MultiPoly],
    order: MonomialOrder,
    cfg: &GbConfig,
) -> Result<Vec<OrderedPoly>> {
    let mut st = State { order, cfg, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };

    // Seed with the inter-reduced generators, smallest leading term first.
    let mut seeds: Vec<OrderedPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| OrderedPoly::from_poly(g, order))
        .collect();
    seeds.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for s in seeds {
        let mut h = reduce(&s, &st.active_refs(), order)?;
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        st.check_degree(&h)?;
        if h.lm().is_one() {
            return Ok(vec![h]);
        }
        st.polys.push(h);
        st.update(st.polys.len() - 1);
    }

    let mut processed = 0usize;
    while let Some(pair) = st.next_pair() {
        processed += 1;
        if processed > cfg.max_pairs {
            return Err(Error::ResourceLimit(format!(
                "more than {} S-pairs reduced",
                cfg.max_pairs
            )));
        }
        let s = st.polys[pair.i].s_poly(&st.polys[pair.j], order)?;
        let mut h = reduce(&s, &st.active_refs(), order)?;
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        st.check_degree(&h)?;
        if h.lm().is_one() {
            return Ok(vec![h]);
        }
        st.polys.push(h);
        st.update(st.polys.len() - 1);
    }

    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    let mut minimal: Vec<OrderedPoly> = Vec::new();
    let mut active: Vec<OrderedPoly> = st.active.iter().map(|&g| st.polys[g].clone()).collect();
    active.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for g in active {
        if !minimal.iter().any(|m| m.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }

    // Tail-reduce each element against the rest.
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&OrderedPoly> =
            minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g).collect();
        let mut r = reduce(&minimal[i], &others, order)?;
        debug_assert_eq!(r.lm(), minimal[i].lm());
        r.make_monic();
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    Ok(reduced)
}
