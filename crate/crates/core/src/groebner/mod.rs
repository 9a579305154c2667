//! Ideals, reduced Gröbner bases and the operations built on them.
//!
//! Every comparison between ideals goes through the reduced Gröbner basis,
//! which is unique for a given ideal and term order. That is what makes
//! `ideal_equal` decidable and what lets the two homogenisation procedures be
//! told apart: [`homogenise_naive`] depends on the chosen generators, while
//! [`homogenise_ideal`] does not.

mod buchberger;
mod hilbert;
mod io;
mod ops;

use std::fmt;

use crate::error::{Error, Result};
use crate::polyalg::{Ctx, MonomialOrder, MultiPoly};

pub(crate) use buchberger::OrderedPoly;
pub use hilbert::{hilbert, HilbertData};
pub use io::{gb_json, hilbert_json, ideal_json, parse_ideal_file, write_ideal_file, IdealFile};
pub use ops::*;

/// Environment variable that overrides [`GbConfig::max_pairs`].
pub const MAX_PAIRS_ENV: &str = "ORBITCOMPAT_MAX_PAIRS";

/// Resource caps for a Buchberger run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbConfig {
    /// Maximum number of S-pairs reduced before giving up.
    pub max_pairs: usize,
    /// Maximum total degree of any intermediate basis element.
    pub max_degree: u64,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { max_pairs: 200_000, max_degree: 64 }
    }
}

impl GbConfig {
    /// Defaults, with `max_pairs` taken from `ORBITCOMPAT_MAX_PAIRS` when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = GbConfig::default();
        if let Ok(v) = std::env::var(MAX_PAIRS_ENV) {
            cfg.max_pairs = v
                .trim()
                .parse()
                .map_err(|_| Error::Format(format!("{MAX_PAIRS_ENV} must be a natural number, got `{v}`")))?;
        }
        Ok(cfg)
    }
}

/// A finite list of generators. The list is kept as given (minus zeros), so
/// two presentations of the same ideal are different values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    ctx: Ctx,
    generators: Vec<MultiPoly>,
}

impl IdealPresentation {
    /// An empty generator list presents the zero ideal.
    pub fn new(ctx: &Ctx, generators: Vec<MultiPoly>) -> Result<Self> {
        for g in &generators {
            if g.context() != ctx {
                return Err(Error::ContextMismatch);
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealPresentation { ctx: ctx.clone(), generators })
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Presentation with one more generator appended.
    pub fn with_generator(&self, g: MultiPoly) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.push(g);
        IdealPresentation::new(&self.ctx, gens)
    }

    /// Total degree of each generator, in order.
    pub fn degrees(&self) -> Vec<u64> {
        self.generators.iter().map(|g| g.degree().unwrap_or(0)).collect()
    }
}

impl fmt::Display for IdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// The reduced Gröbner basis of an ideal for a term order: monic elements,
/// sorted by ascending leading monomial.
#[derive(Clone)]
pub struct ReducedGB {
    ctx: Ctx,
    order: MonomialOrder,
    basis: Vec<MultiPoly>,
    internal: Vec<OrderedPoly>,
}

impl PartialEq for ReducedGB {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.order == other.order && self.basis == other.basis
    }
}

impl Eq for ReducedGB {}

impl fmt::Debug for ReducedGB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReducedGB")
            .field("ctx", &self.ctx.names())
            .field("order", &self.order)
            .field("basis", &self.basis_strings())
            .finish()
    }
}

impl ReducedGB {
    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// True for the unit ideal, whose reduced basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    /// Each element printed under the basis' own order.
    pub fn basis_strings(&self) -> Vec<String> {
        self.basis.iter().map(|g| g.to_string_with(self.order)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<crate::polyalg::Monomial> {
        self.internal.iter().map(|g| g.lm().clone()).collect()
    }

    /// The basis as an ideal presentation.
    pub fn to_presentation(&self) -> IdealPresentation {
        IdealPresentation { ctx: self.ctx.clone(), generators: self.basis.clone() }
    }
}
