//! Exact linear-independence check for the monomial family
//! `q^i f^j` and `q^i f^j g`.
//!
//! Each monomial expands to a power series in `q`; scaling the `q^n` row by
//! `n!` makes every entry an integer (the series are binomial convolutions of
//! integer sequences). Full column rank of the resulting matrix certifies
//! linear independence of the truncated family. Rank is certified modulo a
//! large prime first (full modular rank implies full rational rank), with
//! an exact rational elimination as the fallback on deficiency.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::series::{f_series, g_series, TruncatedSeries};
use super::{AlgebraError, BiDegree, Rational};

/// Outcome of an independence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    /// Whether the exact rank equals the number of monomials.
    pub full_rank: bool,
    /// Number of monomials `q^i f^j (g)` with `(i,j) <= max` componentwise.
    pub monomials: usize,
    /// Expansion order actually used.
    pub order: usize,
    /// The exact rank of the coefficient matrix.
    pub rank: usize,
}

/// Smallest order at which the coefficient matrix *can* have full column
/// rank. Monomials split by the parity of `i + j` (their series are even or
/// odd), so each parity class needs enough rows of its own parity.
pub fn minimal_independence_order(max: BiDegree) -> usize {
    let mut even = 0usize;
    let mut odd = 0usize;
    for i in 0..=max.q_exp {
        for j in 0..=max.f_exp {
            if (i + j) % 2 == 0 {
                even += 2; // with and without g
            } else {
                odd += 2;
            }
        }
    }
    let need_even = if even == 0 { 0 } else { 2 * (even - 1) };
    let need_odd = if odd == 0 { 0 } else { 2 * odd - 1 };
    need_even.max(need_odd)
}

/// Does the family of all `q^i f^j` and `q^i f^j g` with `(i,j) <= max`
/// componentwise have full column rank when expanded through `q^order`?
///
/// Fails with [`AlgebraError::InsufficientOrder`] when the order cannot
/// possibly give full rank, per [`minimal_independence_order`].
pub fn independence_rank(max: BiDegree, order: usize) -> Result<IndependenceReport, AlgebraError> {
    let needed = minimal_independence_order(max);
    if order < needed {
        return Err(AlgebraError::InsufficientOrder { needed, got: order });
    }

    let columns = column_series(max, order);
    let monomials = columns.len();
    let matrix = integer_matrix(&columns, order);

    // A large prime certifies full rank one-sidedly; only a deficient modular
    // result needs the exact elimination.
    const PRIMES: [u64; 2] = [(1 << 61) - 1, 9_223_372_036_854_775_783];
    for p in PRIMES {
        let rank = modular_rank(&matrix, p);
        if rank == monomials {
            return Ok(IndependenceReport {
                full_rank: true,
                monomials,
                order,
                rank,
            });
        }
    }
    let rank = exact_rank(&columns);
    Ok(IndependenceReport {
        full_rank: rank == monomials,
        monomials,
        order,
        rank,
    })
}

fn column_series(max: BiDegree, order: usize) -> Vec<TruncatedSeries> {
    let f = f_series(order);
    let g = g_series(order);
    let mut f_powers = Vec::with_capacity(max.f_exp as usize + 1);
    let mut acc = TruncatedSeries::zero(order);
    acc = {
        let mut coeffs = acc.coeffs().to_vec();
        coeffs[0] = Rational::one();
        TruncatedSeries::from_coeffs(coeffs)
    };
    f_powers.push(acc.clone());
    for _ in 0..max.f_exp {
        acc = acc.mul(&f);
        f_powers.push(acc.clone());
    }

    let mut columns = Vec::new();
    for i in 0..=max.q_exp {
        for j in 0..=max.f_exp {
            let base = f_powers[j as usize].shift(i as usize);
            columns.push(base.clone());
            columns.push(base.mul(&g));
        }
    }
    columns
}

/// Row `n` is `n!` times the `q^n` coefficients; integrality is asserted.
fn integer_matrix(columns: &[TruncatedSeries], order: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::zero(); columns.len()]; order + 1];
    let mut fact = BigInt::one();
    for n in 0..=order {
        if n > 0 {
            fact *= BigInt::from(n);
        }
        for (c, col) in columns.iter().enumerate() {
            let scaled = col.coeff(n) * Rational::from_integer(fact.clone());
            debug_assert!(scaled.denom().is_one(), "n! * coefficient not integral");
            rows[n][c] = scaled.to_integer();
        }
    }
    rows
}

fn modular_rank(matrix: &[Vec<BigInt>], p: u64) -> usize {
    let pb = BigInt::from(p);
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.mod_floor(&pb).to_u64().expect("residue fits u64"))
                .collect()
        })
        .collect();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };

    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };

    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = pow(m[rank][col], p - 2);
        for r in 0..rows {
            if r != rank && m[r][col] != 0 {
                let factor = mul(m[r][col], inv);
                for c in col..cols {
                    let sub = mul(factor, m[rank][c]);
                    m[r][c] = (m[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn exact_rank(columns: &[TruncatedSeries]) -> usize {
    let cols = columns.len();
    if cols == 0 {
        return 0;
    }
    let rows = columns[0].order() + 1;
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|n| columns.iter().map(|c| c.coeff(n).clone()).collect())
        .collect();

    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let lead = m[rank][col].clone();
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &lead;
                for c in col..cols {
                    let sub = &factor * &m[rank][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
