//! Dense truncated power series in `q` with exact rational coefficients.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{factorial, GElement, Rational};

/// A power series in `q` truncated after `q^order`: exactly `order + 1`
/// stored coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// Build from coefficients of `q^0 .. q^order`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least q^0");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Truncate (or zero-extend) to a new order.
    pub fn resized(&self, order: usize) -> TruncatedSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Rational::zero());
        coeffs.truncate(order + 1);
        TruncatedSeries { coeffs }
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn scaled(&self, s: &Rational) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Cauchy product truncated at `min` of the two orders.
    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiply by `q^k` (dropping overflowed coefficients, same order).
    pub fn shift(&self, k: usize) -> TruncatedSeries {
        let order = self.order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        if k <= order {
            for n in 0..=order - k {
                coeffs[n + k] = self.coeffs[n].clone();
            }
        }
        TruncatedSeries { coeffs }
    }
}

/// Taylor series of `f` (= tanh): coefficient of `q^{2k+1}` is
/// `(-1)^k A_{2k+1} / (2k+1)!`, from the alternation numbers.
pub(crate) fn f_series(order: usize) -> TruncatedSeries {
    zigzag_series(order, 1)
}

/// Taylor series of `g` (= sech): coefficient of `q^{2k}` is
/// `(-1)^k A_{2k} / (2k)!`.
pub(crate) fn g_series(order: usize) -> TruncatedSeries {
    zigzag_series(order, 0)
}

fn zigzag_series(order: usize, residue: usize) -> TruncatedSeries {
    let a = crate::alternations::alternation_numbers(order);
    let mut out = TruncatedSeries::zero(order);
    for n in (residue..=order).step_by(2) {
        let k = n / 2;
        let mut c = Rational::new(a[n].clone(), factorial(n));
        if k % 2 == 1 {
            c = -c;
        }
        out.coeffs[n] = c;
    }
    out
}

/// Expand a g-reduced element through `q^order`.
pub(crate) fn expand(a: &GElement, order: usize) -> TruncatedSeries {
    let f = f_series(order);
    let g = g_series(order);

    let max_f_exp = a
        .f_part()
        .iter()
        .chain(a.g_part().iter())
        .map(|(d, _)| d.f_exp)
        .max()
        .unwrap_or(0);
    let mut f_powers = Vec::with_capacity(max_f_exp as usize + 1);
    let mut acc = {
        let mut one = TruncatedSeries::zero(order);
        one.coeffs[0] = Rational::from_integer(1.into());
        one
    };
    f_powers.push(acc.clone());
    for _ in 0..max_f_exp {
        acc = acc.mul(&f);
        f_powers.push(acc.clone());
    }

    let mut out = TruncatedSeries::zero(order);
    for (&d, c) in a.f_part().iter() {
        if (d.q_exp as usize) > order {
            continue;
        }
        let term = f_powers[d.f_exp as usize].shift(d.q_exp as usize).scaled(c);
        out = out.add(&term);
    }
    for (&d, c) in a.g_part().iter() {
        if (d.q_exp as usize) > order {
            continue;
        }
        let term = f_powers[d.f_exp as usize]
            .mul(&g)
            .shift(d.q_exp as usize)
            .scaled(c);
        out = out.add(&term);
    }
    out
}
