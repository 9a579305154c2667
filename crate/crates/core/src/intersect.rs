//! Truncated power series in one variable and the expected Euler
//! characteristic of a complete intersection in projective space.
//!
//! For `X = V(f_1, ..., f_k)` in `P^N` with `d_i = deg f_i` and `n = N - k`, the
//! total Chern class is `(1 + a)^(N+1) / prod (1 + d_i a)` truncated at `a^n`,
//! and `chi(X) = [a^n] c(X) * prod d_i`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polyalg::{format_rational, int_json, rational_json};

/// Power series `c_0 + c_1 a + ... + c_N a^N`; nothing past `a^N` is kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl TruncatedSeries {
    /// Series with the given leading coefficients, zero-padded or cut to `order`.
    pub fn new(order: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut c: Vec<BigRational> = coeffs.into_iter().take(order + 1).collect();
        c.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs: c }
    }

    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        Self::new(order, coeffs.iter().map(|&c| BigRational::from_integer(c.into())))
    }

    pub fn one(order: usize) -> Self {
        Self::from_ints(order, &[1])
    }

    /// `1 + d a`
    pub fn linear(order: usize, d: i64) -> Self {
        Self::from_ints(order, &[1, d])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self / other`; `other` must have a nonzero constant term.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let b0 = &other.coeffs[0];
        if b0.is_zero() {
            return Err(Error::NonUnitDivisor);
        }
        let n = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for (j, q) in out.iter().enumerate() {
                acc -= q * &other.coeffs[k - j];
            }
            out.push(acc / b0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(rational_json).collect())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "[{}] + O(a^{})", parts.join(", "), self.order() + 1)
    }
}

pub fn series_arith(a: &TruncatedSeries, b: &TruncatedSeries, op: SeriesOp) -> Result<TruncatedSeries> {
    match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Sub => a.sub(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::Div => a.div(b),
    }
}

/// `V(f_1..f_k)` in `P^ambient_dim` with `deg f_i = degrees[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteIntersectionSpec {
    ambient_dim: usize,
    degrees: Vec<u64>,
}

impl CompleteIntersectionSpec {
    pub fn new(ambient_dim: usize, degrees: Vec<u64>) -> Result<Self> {
        if degrees.len() > ambient_dim {
            return Err(Error::InvalidSpec(format!(
                "{} hypersurfaces in P^{ambient_dim} leave a negative dimension",
                degrees.len()
            )));
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidSpec("hypersurface degrees must be positive".into()));
        }
        Ok(CompleteIntersectionSpec { ambient_dim, degrees })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Dimension of the intersection.
    pub fn dim(&self) -> usize {
        self.ambient_dim - self.degrees.len()
    }
}

/// `(1 + a)^(N+1) / prod (1 + d_i a)` truncated at `a^dim`.
pub fn chern_series(spec: &CompleteIntersectionSpec) -> TruncatedSeries {
    let n = spec.dim();
    let mut num = TruncatedSeries::linear(n, 1).pow(spec.ambient_dim as u32 + 1);
    for &d in &spec.degrees {
        let factor = TruncatedSeries::new(n, [BigRational::one(), BigRational::from_integer(d.into())]);
        num = num.div(&factor).expect("1 + d a is a unit");
    }
    num
}

/// `prod d_i`, the degree of the intersection.
pub fn degree_product(spec: &CompleteIntersectionSpec) -> BigInt {
    spec.degrees.iter().map(|&d| BigInt::from(d)).product()
}

/// `[a^n] c(X) * prod d_i`; always an integer.
pub fn expected_euler(spec: &CompleteIntersectionSpec) -> Result<BigInt> {
    let top = chern_series(spec).coeff(spec.dim()).clone();
    let chi = top * BigRational::from_integer(degree_product(spec));
    if !chi.is_integer() {
        return Err(Error::NonIntegral(format_rational(&chi)));
    }
    Ok(chi.to_integer())
}

/// `{series, chi, d}` report.
pub fn euler_report(spec: &CompleteIntersectionSpec) -> Result<Value> {
    let chi = expected_euler(spec)?;
    Ok(json!({
        "series": chern_series(spec).to_json(),
        "chi": int_json(&chi),
        "d": int_json(&degree_product(spec)),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ci(n: usize, d: &[u64]) -> CompleteIntersectionSpec {
        CompleteIntersectionSpec::new(n, d.to_vec()).unwrap()
    }

    /// Independent route: (1+a)^m via binomials and 1/(1+d a) via geometric
    /// series, multiplied out with plain integer arithmetic.
    fn chern_by_binomials(n_amb: usize, degrees: &[u64]) -> Vec<i128> {
        let n = n_amb - degrees.len();
        let binom = |m: u64, k: u64| -> i128 {
            let mut acc: i128 = 1;
            for i in 0..k {
                acc = acc * (m - i) as i128 / (i + 1) as i128;
            }
            acc
        };
        let mut series: Vec<i128> = (0..=n as u64).map(|k| binom(n_amb as u64 + 1, k)).collect();
        for &d in degrees {
            let geo: Vec<i128> = (0..=n as u32).map(|k| (-(d as i128)).pow(k)).collect();
            let mut out = vec![0i128; n + 1];
            for i in 0..=n {
                for j in 0..=n - i {
                    out[i + j] += series[i] * geo[j];
                }
            }
            series = out;
        }
        series
    }

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn geometric_series() {
        let s = series_arith(&TruncatedSeries::one(3), &TruncatedSeries::linear(3, 2), SeriesOp::Div).unwrap();
        assert_eq!(ints(&s), [1, -2, 4, -8]);
    }

    #[test]
    fn conic_and_quartic_expansions() {
        let conic = TruncatedSeries::linear(2, 1).pow(3).div(&TruncatedSeries::linear(2, 2)).unwrap();
        assert_eq!(ints(&conic), [1, 1, 1]);
        let quartic = TruncatedSeries::linear(2, 1).pow(4).div(&TruncatedSeries::linear(2, 4)).unwrap();
        assert_eq!(ints(&quartic), [1, 0, 6]);
    }

    #[test]
    fn series_errors() {
        let a = TruncatedSeries::one(2);
        assert_eq!(a.add(&TruncatedSeries::one(3)), Err(Error::OrderMismatch(2, 3)));
        assert_eq!(a.div(&TruncatedSeries::from_ints(2, &[0, 1])), Err(Error::NonUnitDivisor));
    }

    #[test]
    fn chern_series_of_the_fibre_compactifications() {
        assert_eq!(ints(&chern_series(&ci(8, &[3, 3, 1]))), [1, 2, 7, -4, 31, -94]);
        assert_eq!(ints(&chern_series(&ci(8, &[2, 3, 1]))), [1, 3, 7, 3, 13, -27]);
    }

    #[test]
    fn chern_series_agrees_with_binomial_route() {
        let cases: &[(usize, &[u64])] =
            &[(8, &[3, 3, 1]), (8, &[2, 3, 1]), (2, &[2]), (3, &[4]), (6, &[2, 2, 2]), (5, &[]), (7, &[5, 1])];
        for (n, d) in cases {
            let got: Vec<i128> = chern_series(&ci(*n, d)).coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect();
            assert_eq!(got, chern_by_binomials(*n, d), "P^{n} degrees {d:?}");
        }
    }

    #[test]
    fn projective_space_is_its_own_intersection() {
        for n in 0..=10usize {
            let s = chern_series(&ci(n, &[]));
            let expected: Vec<i64> = (0..=n).map(|k| chern_by_binomials(n, &[])[k] as i64).collect();
            assert_eq!(ints(&s), expected);
            assert_eq!(expected_euler(&ci(n, &[])).unwrap(), BigInt::from(n as i64 + 1));
        }
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(expected_euler(&ci(2, &[2])).unwrap(), BigInt::from(2));
        assert_eq!(expected_euler(&ci(3, &[4])).unwrap(), BigInt::from(24));
        assert_eq!(expected_euler(&ci(3, &[2])).unwrap(), BigInt::from(4));
        assert_eq!(expected_euler(&ci(8, &[3, 3, 1])).unwrap(), BigInt::from(-846));
        assert_eq!(expected_euler(&ci(8, &[2, 3, 1])).unwrap(), BigInt::from(-162));
        // plane curve of degree d has genus (d-1)(d-2)/2
        for d in 1..8u64 {
            let g = (d as i64 - 1) * (d as i64 - 2) / 2;
            assert_eq!(expected_euler(&ci(2, &[d])).unwrap(), BigInt::from(2 - 2 * g));
        }
    }

    #[test]
    fn degree_products() {
        assert_eq!(degree_product(&ci(8, &[3, 3, 1])), BigInt::from(9));
        assert_eq!(degree_product(&ci(8, &[2, 3, 1])), BigInt::from(6));
        assert_eq!(degree_product(&ci(4, &[])), BigInt::one());
    }

    #[test]
    fn spec_validation() {
        assert!(CompleteIntersectionSpec::new(2, vec![1, 1, 1]).is_err());
        assert!(CompleteIntersectionSpec::new(2, vec![0]).is_err());
        assert_eq!(ci(2, &[1, 1]).dim(), 0);
    }

    #[test]
    fn report_shape() {
        let r = euler_report(&ci(8, &[3, 3, 1])).unwrap();
        assert_eq!(r, json!({"series": [1, 2, 7, -4, 31, -94], "chi": -846, "d": 9}));
    }
}
