//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! Everything here is immutable once built: a [`MultiPoly`] carries a shared
//! [`VarContext`] and a sparse map from [`Monomial`] to nonzero coefficient.
//! Monomial orders are supplied per call, so the same polynomial can be read
//! under grevlex for printing and under an elimination order for saturation.

mod context;
mod monomial;
mod order;
mod parse;
mod poly;

pub use context::{Ctx, VarContext};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use poly::{poly_arith, ArithOp, MultiPoly};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Parses `"3"`, `"-3/2"` style rational literals.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Writes a rational as an integer or `num/den`.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Integers as JSON numbers when they fit in `i64`, strings otherwise.
pub fn int_json(n: &BigInt) -> serde_json::Value {
    use num_traits::ToPrimitive;
    match n.to_i64() {
        Some(v) => v.into(),
        None => n.to_string().into(),
    }
}

/// Integers as JSON numbers, other rationals as `"p/q"` strings.
pub fn rational_json(q: &BigRational) -> serde_json::Value {
    if q.is_integer() {
        int_json(q.numer())
    } else {
        format_rational(q).into()
    }
}
