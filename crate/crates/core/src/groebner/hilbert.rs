//! Hilbert series of `Q[x]/I` for homogeneous `I`, read off the leading-term
//! ideal of a Gröbner basis.
//!
//! The numerator `N(s)` of `HS(s) = N(s) / (1 - s)^nvars` is computed with the
//! pivot recursion `N(M) = N(M + <x>) + s * N(M : x)`, pivoting on the variable
//! that occurs in the most minimal generators.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ReducedGB;
use crate::error::{Error, Result};
use crate::polyalg::Monomial;

/// Hilbert series `numerator(s) / (1 - s)^krull_dim` with `numerator(1) = degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients of the reduced numerator, lowest power of `s` first.
    pub numerator: Vec<BigInt>,
    pub krull_dim: usize,
    pub proj_dim: i64,
    pub degree: BigInt,
}

impl HilbertData {
    /// Coefficients of the Hilbert series up to `s^upto`, i.e. the Hilbert
    /// function values `dim (Q[x]/I)_d` for `d = 0..=upto`.
    pub fn series(&self, upto: usize) -> Vec<BigInt> {
        // numerator * (1 - s)^{-k}, where (1-s)^{-k} = sum binom(d + k - 1, k - 1) s^d
        let mut out = vec![BigInt::zero(); upto + 1];
        let binom = |n: usize, r: usize| -> BigInt {
            let mut acc = BigInt::one();
            for i in 0..r {
                acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
            }
            acc
        };
        for (i, c) in self.numerator.iter().enumerate() {
            for d in i..=upto {
                let m = d - i;
                let w = if self.krull_dim == 0 {
                    if m == 0 { BigInt::one() } else { BigInt::zero() }
                } else {
                    binom(m + self.krull_dim - 1, self.krull_dim - 1)
                };
                out[d] += c * w;
            }
        }
        out
    }
}

type Numer = Vec<BigInt>;

fn trim(mut p: Numer) -> Numer {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn add(a: &Numer, b: &Numer) -> Numer {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn shift(a: &Numer, k: usize) -> Numer {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend(a.iter().cloned());
    out
}

/// `a * (1 - s^d)`
fn times_one_minus(a: &Numer, d: usize) -> Numer {
    let neg: Numer = shift(a, d).into_iter().map(|c| -c).collect();
    add(a, &neg)
}

fn minimalise(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), m.clone()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

struct Recursion {
    memo: HashMap<Vec<Monomial>, Numer>,
}

impl Recursion {
    fn numerator(&mut self, gens: Vec<Monomial>) -> Numer {
        let gens = minimalise(gens);
        if let Some(hit) = self.memo.get(&gens) {
            return hit.clone();
        }
        let value = self.compute(&gens);
        self.memo.insert(gens, value.clone());
        value
    }

    fn compute(&mut self, gens: &[Monomial]) -> Numer {
        if gens.is_empty() {
            return vec![BigInt::one()];
        }
        if gens.iter().any(Monomial::is_one) {
            return Vec::new();
        }
        let nvars = gens[0].len();
        let counts: Vec<usize> = (0..nvars)
            .map(|v| gens.iter().filter(|g| g.exponents()[v] > 0).count())
            .collect();
        let (pivot, &best) = counts.iter().enumerate().max_by_key(|(i, c)| (**c, std::cmp::Reverse(*i))).unwrap();
        if best <= 1 {
            // pairwise coprime generators: a regular sequence
            let mut acc = vec![BigInt::one()];
            for g in gens {
                acc = times_one_minus(&acc, g.degree() as usize);
            }
            return acc;
        }
        let x = Monomial::var(nvars, pivot);
        let mut with_x: Vec<Monomial> = gens.iter().filter(|g| g.exponents()[pivot] == 0).cloned().collect();
        with_x.push(x.clone());
        let colon: Vec<Monomial> = gens
            .iter()
            .map(|g| {
                let mut e = g.exponents().to_vec();
                e[pivot] = e[pivot].saturating_sub(1);
                Monomial::from_exponents(e)
            })
            .collect();
        let a = self.numerator(with_x);
        let b = self.numerator(colon);
        add(&a, &shift(&b, 1))
    }
}

/// Unreduced numerator of the Hilbert series of `Q[x]/<gens>` over `(1 - s)^nvars`.
pub(crate) fn monomial_numerator(gens: &[Monomial]) -> Vec<BigInt> {
    Recursion { memo: HashMap::new() }.numerator(gens.to_vec())
}

/// Hilbert series, Krull dimension and degree of the quotient by a
/// homogeneous ideal given through its reduced Gröbner basis.
pub fn hilbert(gb: &ReducedGB) -> Result<HilbertData> {
    for g in gb.basis() {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(g.to_string_with(gb.order())));
        }
    }
    let nvars = gb.context().len();
    let mut numer = monomial_numerator(&gb.leading_monomials());
    if numer.is_empty() {
        return Err(Error::UnitIdeal);
    }
    let mut krull = nvars;
    // divide by (1 - s) while numerator(1) == 0
    loop {
        let at_one: BigInt = numer.iter().sum();
        if !at_one.is_zero() || krull == 0 {
            break;
        }
        let mut q = Vec::with_capacity(numer.len() - 1);
        let mut run = BigInt::zero();
        for c in &numer[..numer.len() - 1] {
            run += c;
            q.push(run.clone());
        }
        numer = trim(q);
        krull -= 1;
    }
    let degree: BigInt = numer.iter().sum();
    Ok(HilbertData { numerator: numer, krull_dim: krull, proj_dim: krull as i64 - 1, degree })
}
