//! The g-reduced polynomial algebra in `q`, `f`, `g` over exact rationals.
//!
//! The ambient ring is `Q[q,f,g]` modulo the relation `f^2 + g^2 = 1`. Every
//! element has a unique *g-reduced* representation `P1 + P2*g` with
//! `P1, P2 in Q[q,f]`; no power of `g` beyond the first is ever stored.
//! [`GElement`] is that representation, [`QFPolynomial`] its two halves.
//!
//! The differential operator `D = q d/dq` acts by `Dq = q`, `Df = q(1-f^2)`,
//! `Dg = -q f g`, extended by the Leibniz rule ([`GElement::apply_d`]).
//! [`GElement::expand`] substitutes the exact Taylor series of `f` and `g`
//! (generated from the alternation recursion, not from floating point) and
//! yields a [`TruncatedSeries`].

mod independence;
mod poly;
mod series;

pub use independence::{independence_rank, minimal_independence_order, IndependenceReport};
pub use poly::{BiDegree, Degree, GElement, PartSide, QFPolynomial};
pub use series::TruncatedSeries;

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always in lowest terms (maintained by `num_rational`).
pub type Rational = num_rational::BigRational;

/// Render a rational as `p/q`, or just `p` when it is integral.
pub fn rational_to_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        let mut s = x.numer().to_string();
        s.push('/');
        s.push_str(&x.denom().to_string());
        s
    }
}

/// Parse the `p/q` (or plain `p`) form produced by [`rational_to_string`].
pub fn rational_from_str(s: &str) -> Result<Rational, AlgebraError> {
    let parse_int = |t: &str| {
        t.parse::<BigInt>()
            .map_err(|_| AlgebraError::BadRational(s.to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() || den.is_negative() {
                return Err(AlgebraError::BadRational(s.to_string()));
            }
            Ok(Rational::new(parse_int(num)?, den))
        }
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Errors surfaced by the algebra layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// `leading_coefficient` was asked for a part that is identically zero.
    ZeroPart(PartSide),
    /// The expansion order cannot give the monomial matrix full column rank.
    InsufficientOrder { needed: usize, got: usize },
    /// A rational literal did not parse.
    BadRational(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::ZeroPart(side) => write!(f, "the {side:?} part is zero"),
            AlgebraError::InsufficientOrder { needed, got } => {
                write!(f, "order {got} too small, need at least {needed}")
            }
            AlgebraError::BadRational(s) => write!(f, "invalid rational literal {s:?}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for AlgebraError {}
