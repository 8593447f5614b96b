//! Ordinary and broken alternations.
//!
//! A permutation `a` of `{1..n}` is an *(ordinary) alternation* when
//! `a_n < a_{n-1} > a_{n-2} < ...` (the zigzag anchored at the right end),
//! and a *broken alternation* when exactly one adjacent pair violates the
//! zigzag; the violating index is the *break*. `A_n` counts ordinary and
//! `B_n` broken alternations, `B_n^j` those broken ones with `a_j = n`.
//!
//! The module provides the recursion for `B_n^j`, a factorial brute-force
//! oracle, the generating series
//! `f = sum (-1)^k A_{2k+1} q^{2k+1}/(2k+1)!` (= tanh),
//! `g = sum (-1)^k A_{2k} q^{2k}/(2k)!` (= sech),
//! `u`, `v` (the same sums over `B_n`), and the derived operator families
//! `f_c`, `g_c`, `g~_c`, `u_c`, `v_c`.

use alloc::vec;
use alloc::vec::Vec;

use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{GElement, Rational};

/// A permutation of `{1..n}` given by its value list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates that `values` is a bijection of `{1..n}`.
    pub fn new(values: Vec<u32>) -> Result<Self, AlternationError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(AlternationError::NotAPermutation);
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlternationError {
    NotAPermutation,
    /// Brute force is capped at n = 10 (factorial enumeration).
    TooLarge {
        n: usize,
        max: usize,
    },
    EmptyPermutation,
}

impl fmt::Display for AlternationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlternationError::NotAPermutation => write!(f, "values are not a permutation of 1..n"),
            AlternationError::TooLarge { n, max } => {
                write!(f, "n = {n} exceeds the brute-force cap {max}")
            }
            AlternationError::EmptyPermutation => write!(f, "n must be at least 1"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for AlternationError {}

/// Number of pairs `i < j` with `seq[i] > seq[j]`.
pub fn disorders<T: Ord>(seq: &[T]) -> usize {
    let mut count = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                count += 1;
            }
        }
    }
    count
}

/// How a permutation relates to the zigzag pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Ordinary,
    /// Exactly the adjacent pair `(i, i+1)` (1-based) is inverted.
    Broken(usize),
    Neither,
}

/// Classify against `a_n < a_{n-1} > a_{n-2} < ...`: the pair `(i, i+1)`
/// must be decreasing (`a_i > a_{i+1}`) exactly when `n - i` is odd. For
/// `n = 1` the empty pattern makes the unique permutation ordinary.
pub fn classify(perm: &Permutation) -> Classification {
    let a = perm.values();
    let n = a.len();
    let mut violation = None;
    for i in 1..n {
        let must_decrease = (n - i) % 2 == 1;
        let decreases = a[i - 1] > a[i];
        if decreases != must_decrease {
            match violation {
                None => violation = Some(i),
                Some(_) => return Classification::Neither,
            }
        }
    }
    match violation {
        None => Classification::Ordinary,
        Some(i) => Classification::Broken(i),
    }
}

/// `A_0..A_n` by the boustrophedon (zigzag-triangle) recurrence.
pub fn alternation_numbers(n_max: usize) -> Vec<BigInt> {
    let mut a = Vec::with_capacity(n_max + 1);
    a.push(BigInt::one());
    let mut row = vec![BigInt::one()];
    for n in 1..=n_max {
        let mut next = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            next[k] = &next[k - 1] + &row[n - k];
        }
        a.push(next[n].clone());
        row = next;
    }
    a
}

/// The tables `A_n`, `B_n` and `B_n^j` filled by the recursion
/// `B_n^j = C(n-1, j-1) (B_{j-1} A_{n-j} + A_{j-1} B_{n-j})` for `n + j`
/// odd, `A_{n-1}` for `j = n` or (`n` odd, `j = 1`), and `0` otherwise;
/// with the conventions `A_0 = 1`, `B_0 = B_1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternationTables {
    pub n_max: usize,
    pub a: Vec<BigInt>,
    pub b: Vec<BigInt>,
    /// `b_by_pos[n][j]` is `B_n^j` for `1 <= j <= n`; index 0 is unused.
    pub b_by_pos: Vec<Vec<BigInt>>,
}

pub fn count_recursive(n_max: usize) -> AlternationTables {
    let a = alternation_numbers(n_max);

    let mut binom: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &binom[n - 1][k - 1] + &binom[n - 1][k];
        }
        binom.push(row);
    }

    let mut b = vec![BigInt::zero(); n_max + 1];
    let mut b_by_pos: Vec<Vec<BigInt>> = (0..=n_max).map(|n| vec![BigInt::zero(); n + 1]).collect();
    for n in 2..=n_max {
        for j in 1..=n {
            let val = if j == n || (n % 2 == 1 && j == 1) {
                a[n - 1].clone()
            } else if (n + j) % 2 == 1 {
                let inner = &b[j - 1] * &a[n - j] + &a[j - 1] * &b[n - j];
                &binom[n - 1][j - 1] * inner
            } else {
                BigInt::zero()
            };
            b[n] += &val;
            b_by_pos[n][j] = val;
        }
    }
    AlternationTables {
        n_max,
        a,
        b,
        b_by_pos,
    }
}

/// Exhaustive tallies for one `n`, used as the oracle for the recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceCounts {
    pub n: usize,
    pub ordinary: u64,
    pub broken: u64,
    /// `broken_by_pos[j]` counts broken alternations with `a_j = n`
    /// (1-based; index 0 unused).
    pub broken_by_pos: Vec<u64>,
}

/// Classify all `n!` permutations. Capped at `n <= 10`.
pub fn count_bruteforce(n: usize) -> Result<BruteForceCounts, AlternationError> {
    const MAX: usize = 10;
    if n == 0 {
        return Err(AlternationError::EmptyPermutation);
    }
    if n > MAX {
        return Err(AlternationError::TooLarge { n, max: MAX });
    }

    let mut counts = BruteForceCounts {
        n,
        ordinary: 0,
        broken: 0,
        broken_by_pos: vec![0; n + 1],
    };
    let mut values: Vec<u32> = (1..=n as u32).collect();
    let mut tally = |values: &[u32]| {
        let perm = Permutation {
            values: values.to_vec(),
        };
        match classify(&perm) {
            Classification::Ordinary => counts.ordinary += 1,
            Classification::Broken(_) => {
                counts.broken += 1;
                let j = values.iter().position(|&v| v as usize == n).unwrap() + 1;
                counts.broken_by_pos[j] += 1;
            }
            Classification::Neither => {}
        }
    };

    // Heap's algorithm.
    let mut stack = vec![0usize; n];
    tally(&values);
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                values.swap(0, i);
            } else {
                values.swap(stack[i], i);
            }
            tally(&values);
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    Ok(counts)
}

/// The four base generating series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    F,
    G,
    U,
    V,
}

/// `f` and `g` as atoms; `u` and `v` by their closed forms
/// `u = -f - q + q f^2 + 2 f g` and `v = 1 - 2 f^2 - g + q f g`.
pub fn base_series(kind: SeriesKind) -> GElement {
    let f = GElement::f();
    let g = GElement::g();
    let q = GElement::q();
    match kind {
        SeriesKind::F => f,
        SeriesKind::G => g,
        SeriesKind::U => {
            let qf2 = &q * &(&f * &f);
            let fg2 = (&f * &g).scaled(&Rational::from_integer(2.into()));
            &(&(&-&f - &q) + &qf2) + &fg2
        }
        SeriesKind::V => {
            let f2 = (&f * &f).scaled(&Rational::from_integer(2.into()));
            let qfg = &q * &(&f * &g);
            &(&(&GElement::one() - &f2) - &g) + &qfg
        }
    }
}

/// Check `u' = 2(g - f u - 1)` and `v' = -(f + f v + g u)` both as exact
/// g-reduced identities (multiplied through by `q`, since `D = q d/dq`) and
/// as truncated series identities through `q^order`.
pub fn verify_odes(order: usize) -> bool {
    let f = base_series(SeriesKind::F);
    let g = base_series(SeriesKind::G);
    let u = base_series(SeriesKind::U);
    let v = base_series(SeriesKind::V);
    let q = GElement::q();

    // q u' = D u, so the first equation reads D u = 2 q (g - f u - 1).
    let lhs_u = u.apply_d();
    let rhs_u =
        &q * &(&(&g - &(&f * &u)) - &GElement::one()).scaled(&Rational::from_integer(2.into()));
    let lhs_v = v.apply_d();
    let rhs_v = &q * &-&(&(&f + &(&f * &v)) + &(&g * &u));

    let exact = lhs_u == rhs_u && lhs_v == rhs_v;
    let series =
        lhs_u.expand(order) == rhs_u.expand(order) && lhs_v.expand(order) == rhs_v.expand(order);
    exact && series
}

/// The five operator families built from `D = q d/dq`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    FC,
    GC,
    GTildeC,
    UC,
    VC,
}

impl FamilyKind {
    fn base(self) -> GElement {
        match self {
            FamilyKind::FC => base_series(SeriesKind::F),
            FamilyKind::GC | FamilyKind::GTildeC => base_series(SeriesKind::G),
            FamilyKind::UC => base_series(SeriesKind::U),
            FamilyKind::VC => base_series(SeriesKind::V),
        }
    }

    /// Shift of the `t`-th operator factor `(D - shift)`, `t = 1..c`.
    fn shift(self, t: u32) -> u32 {
        match self {
            FamilyKind::FC => 2 * t - 1,  // (D-1)(D-3)...(D-2c+1)
            FamilyKind::GC => 2 * t - 2,  // D(D-2)...(D-2c+2)
            FamilyKind::GTildeC => 2 * t, // (D-2)(D-4)...(D-2c)
            FamilyKind::UC => 2 * t + 1,  // (D-3)(D-5)...(D-2c-1)
            FamilyKind::VC => 2 * t,      // (D-2)(D-4)...(D-2c)
        }
    }
}

/// `1/(2^c c!)` times the product of the family's `c` operator factors
/// applied to its base series; the empty product at `c = 0` returns the base.
pub fn family(kind: FamilyKind, c: u32) -> GElement {
    let mut x = kind.base();
    for t in 1..=c {
        let shift = Rational::from_integer(kind.shift(t).into());
        x = &x.apply_d() - &x.scaled(&shift);
    }
    let mut norm = Rational::one();
    for t in 1..=c {
        norm *= Rational::from_integer((2 * t).into());
    }
    x.scaled(&norm.recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BiDegree, Degree, PartSide};

    fn perm(values: &[u32]) -> Permutation {
        Permutation::new(values.to_vec()).unwrap()
    }

    #[test]
    fn disorder_counts() {
        assert_eq!(disorders(&[1, 2, 3]), 0);
        assert_eq!(disorders(&[3, 2, 1]), 3);
        // The two real degree sequences of the worked long-graph example.
        assert_eq!(disorders(&[1, 3, 2, 2, 2, 1]), 7);
        assert_eq!(disorders(&[4, 3, 2, 2, 6]), 5);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&perm(&[3, 2, 4, 1])), Classification::Ordinary);
        assert_eq!(classify(&perm(&[2, 5, 4, 3, 1])), Classification::Broken(3));
        assert_eq!(classify(&perm(&[1, 2])), Classification::Broken(1));
        assert_eq!(classify(&perm(&[2, 1])), Classification::Ordinary);
        assert_eq!(classify(&perm(&[1])), Classification::Ordinary);
        assert_eq!(classify(&perm(&[1, 2, 3, 4])), Classification::Neither);
    }

    #[test]
    fn recursion_matches_table() {
        let t = count_recursive(12);
        let expect: [u64; 12] = [
            0, 1, 2, 7, 26, 117, 594, 3407, 21682, 151853, 1160026, 9600567,
        ];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(t.b[n + 1], BigInt::from(e), "B_{}", n + 1);
        }
        assert_eq!(t.a[4], BigInt::from(5));
        // B_n^n = A_{n-1}; B_2^1 = 0, B_2^2 = 1.
        for n in 3..=8 {
            assert_eq!(t.b_by_pos[n][n], t.a[n - 1]);
        }
        assert_eq!(t.b_by_pos[2][1], BigInt::zero());
        assert_eq!(t.b_by_pos[2][2], BigInt::one());
    }

    #[test]
    fn brute_force_small() {
        let c = count_bruteforce(4).unwrap();
        assert_eq!((c.ordinary, c.broken), (5, 7));
        let c1 = count_bruteforce(1).unwrap();
        assert_eq!((c1.ordinary, c1.broken), (1, 0));
        let c6 = count_bruteforce(6).unwrap();
        assert_eq!(c6.broken, 117);
        assert!(count_bruteforce(11).is_err());
    }

    #[test]
    fn u_series_smoke() {
        let u = base_series(SeriesKind::U).expand(5);
        assert!(u.coeff(1).is_integer() && u.coeff(1) == &Rational::from_integer(0.into()));
        // q^5 coefficient of u is B_5/5! = 26/120.
        assert_eq!(u.coeff(5), &Rational::new(13.into(), 60.into()));
    }

    #[test]
    fn odes_hold() {
        assert!(verify_odes(40));
    }

    #[test]
    fn substituting_f_for_u_breaks_the_ode() {
        // f' = 1 - f^2 differs from 2(g - f^2 - 1) already at q^0.
        let f = base_series(SeriesKind::F);
        let g = base_series(SeriesKind::G);
        let q = GElement::q();
        let lhs = f.apply_d();
        let rhs =
            &q * &(&(&g - &(&f * &f)) - &GElement::one()).scaled(&Rational::from_integer(2.into()));
        assert_ne!(lhs.expand(4), rhs.expand(4));
    }

    #[test]
    fn family_base_cases_and_f1() {
        assert_eq!(family(FamilyKind::FC, 0), base_series(SeriesKind::F));
        assert_eq!(family(FamilyKind::UC, 0), base_series(SeriesKind::U));
        // f_1 = (q(1 - f^2) - f)/2.
        let f = GElement::f();
        let expect = (&(&GElement::q() * &(&GElement::one() - &(&f * &f))) - &f)
            .scaled(&Rational::new(1.into(), 2.into()));
        assert_eq!(family(FamilyKind::FC, 1), expect);
    }

    #[test]
    fn u1_closed_form() {
        // u_1 = (q + 3f - qf^2 + 2q^2 f - 2q^2 f^3 - 6fg + 2qg - 4qf^2 g)/2,
        // frozen from a hand computation via the derivation rules.
        let u1 = family(FamilyKind::UC, 1);
        let half = Rational::new(1.into(), 2.into());
        let term = |i, j, g, n: i64| GElement::monomial(i, j, g, Rational::from_integer(n.into()));
        let expect = (&(&(&(&(&(&(&term(1, 0, false, 1) + &term(0, 1, false, 3))
            + &term(1, 2, false, -1))
            + &term(2, 1, false, 2))
            + &term(2, 3, false, -2))
            + &term(0, 1, true, -6))
            + &term(1, 0, true, 2))
            + &term(1, 2, true, -4))
            .scaled(&half);
        assert_eq!(u1, expect);
    }

    #[test]
    fn family_degrees() {
        for n in 0..4u32 {
            let fc = family(FamilyKind::FC, n);
            assert_eq!(fc.deg_f(), Degree::NonZero(BiDegree::new(n, n + 1)));
            assert_eq!(fc.deg_g(), Degree::Zero);
            let uc = family(FamilyKind::UC, n);
            assert_eq!(uc.deg_g(), Degree::NonZero(BiDegree::new(n, n + 2)));
            assert_eq!(uc.deg_f(), Degree::NonZero(BiDegree::new(n + 1, n + 2)));
        }
    }

    #[test]
    fn family_leading_coefficients() {
        // f_c, g_c, g~_c lead with (-1)^c/2^c; u_c and v_c carry the extra
        // factors 2(c+1) and (c+1) forced by their own degree offset (the
        // c = 0 cases reduce to the +-2 coefficients of the closed forms).
        for c in 0..5u32 {
            let sign = if c % 2 == 0 { 1 } else { -1 };
            let base = Rational::new(sign.into(), BigInt::from(2).pow(c));
            let cp1 = Rational::from_integer((c + 1).into());
            assert_eq!(
                family(FamilyKind::FC, c).leading_coefficient(PartSide::F),
                Ok(base.clone())
            );
            assert_eq!(
                family(FamilyKind::GC, c).leading_coefficient(PartSide::G),
                Ok(base.clone())
            );
            assert_eq!(
                family(FamilyKind::GTildeC, c).leading_coefficient(PartSide::G),
                Ok(base.clone())
            );
            let uc = family(FamilyKind::UC, c);
            assert_eq!(
                uc.leading_coefficient(PartSide::G),
                Ok(&(&base * &cp1) * &Rational::from_integer(2.into()))
            );
            assert_eq!(uc.leading_coefficient(PartSide::F), Ok(&base * &cp1));
            let vc = family(FamilyKind::VC, c);
            assert_eq!(
                vc.leading_coefficient(PartSide::F),
                Ok(&(&base * &cp1) * &Rational::from_integer((-2).into()))
            );
            assert_eq!(vc.leading_coefficient(PartSide::G), Ok(&base * &cp1));
        }
    }
}
