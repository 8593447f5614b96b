//! Sparse polynomials in `q`, `f` and the g-reduced elements built from them.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::series::TruncatedSeries;
use super::{rational_to_string, AlgebraError, Rational};

/// Bidegree of a monomial `q^i f^j`, ordered lexicographically:
/// `(i,j) < (i',j')` iff `i < i'`, or `i = i'` and `j < j'`.
///
/// The derive produces exactly that order because `q_exp` precedes `f_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiDegree {
    pub q_exp: u32,
    pub f_exp: u32,
}

impl BiDegree {
    pub const fn new(q_exp: u32, f_exp: u32) -> Self {
        BiDegree { q_exp, f_exp }
    }

    /// Componentwise sum, the degree of a product of monomials.
    pub fn plus(self, other: BiDegree) -> BiDegree {
        BiDegree::new(self.q_exp + other.q_exp, self.f_exp + other.f_exp)
    }
}

/// A bidegree together with the sentinel used for the zero polynomial.
/// `Zero` sorts strictly below every honest bidegree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    Zero,
    NonZero(BiDegree),
}

impl Degree {
    pub fn bidegree(self) -> Option<BiDegree> {
        match self {
            Degree::Zero => None,
            Degree::NonZero(d) => Some(d),
        }
    }
}

/// Which half of a g-reduced element an operation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartSide {
    F,
    G,
}

/// A sparse element of `Q[q,f]`: a map from bidegree to nonzero coefficient.
/// The zero polynomial is the empty map.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QFPolynomial {
    terms: BTreeMap<BiDegree, Rational>,
}

impl QFPolynomial {
    pub fn zero() -> Self {
        QFPolynomial::default()
    }

    pub fn monomial(q_exp: u32, f_exp: u32, coeff: Rational) -> Self {
        let mut p = QFPolynomial::zero();
        p.add_term(BiDegree::new(q_exp, f_exp), coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `coeff` to the term at `deg`, dropping the entry if it cancels.
    pub fn add_term(&mut self, deg: BiDegree, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(deg).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&deg);
        }
    }

    pub fn coeff(&self, deg: BiDegree) -> Rational {
        self.terms.get(&deg).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in increasing lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&BiDegree, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lex-maximal bidegree, or the sentinel for the zero polynomial.
    pub fn degree(&self) -> Degree {
        match self.terms.keys().next_back() {
            None => Degree::Zero,
            Some(&d) => Degree::NonZero(d),
        }
    }

    /// Coefficient at the lex-maximal bidegree; `None` for zero.
    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    fn scaled(&self, s: &Rational) -> QFPolynomial {
        if s.is_zero() {
            return QFPolynomial::zero();
        }
        QFPolynomial {
            terms: self.terms.iter().map(|(d, c)| (*d, c * s)).collect(),
        }
    }
}

impl Add for &QFPolynomial {
    type Output = QFPolynomial;
    fn add(self, rhs: &QFPolynomial) -> QFPolynomial {
        let mut out = self.clone();
        for (&d, c) in rhs.iter() {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Sub for &QFPolynomial {
    type Output = QFPolynomial;
    fn sub(self, rhs: &QFPolynomial) -> QFPolynomial {
        let mut out = self.clone();
        for (&d, c) in rhs.iter() {
            out.add_term(d, -c.clone());
        }
        out
    }
}

impl Mul for &QFPolynomial {
    type Output = QFPolynomial;
    fn mul(self, rhs: &QFPolynomial) -> QFPolynomial {
        let mut out = QFPolynomial::zero();
        for (&da, ca) in self.iter() {
            for (&db, cb) in rhs.iter() {
                out.add_term(da.plus(db), ca * cb);
            }
        }
        out
    }
}

impl Neg for &QFPolynomial {
    type Output = QFPolynomial;
    fn neg(self) -> QFPolynomial {
        QFPolynomial {
            terms: self.terms.iter().map(|(d, c)| (*d, -c.clone())).collect(),
        }
    }
}

/// An element of `Q[q,f] + Q[q,f]g` in its unique g-reduced representation.
/// Equality is field-wise; no `g^2` is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GElement {
    f_part: QFPolynomial,
    g_part: QFPolynomial,
}

impl GElement {
    pub fn new(f_part: QFPolynomial, g_part: QFPolynomial) -> Self {
        GElement { f_part, g_part }
    }

    pub fn zero() -> Self {
        GElement::default()
    }

    pub fn one() -> Self {
        GElement::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        GElement::new(QFPolynomial::monomial(0, 0, c), QFPolynomial::zero())
    }

    pub fn from_integer(n: i64) -> Self {
        GElement::constant(Rational::from_integer(n.into()))
    }

    /// The monomial `c * q^i f^j`, or `c * q^i f^j g` when `with_g` is set.
    pub fn monomial(q_exp: u32, f_exp: u32, with_g: bool, coeff: Rational) -> Self {
        let p = QFPolynomial::monomial(q_exp, f_exp, coeff);
        if with_g {
            GElement::new(QFPolynomial::zero(), p)
        } else {
            GElement::new(p, QFPolynomial::zero())
        }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        GElement::monomial(1, 0, false, Rational::one())
    }

    /// The atomic series `f` (= tanh as a power series).
    pub fn f() -> Self {
        GElement::monomial(0, 1, false, Rational::one())
    }

    /// The atomic series `g` (= sech as a power series).
    pub fn g() -> Self {
        GElement::monomial(0, 0, true, Rational::one())
    }

    pub fn f_part(&self) -> &QFPolynomial {
        &self.f_part
    }

    pub fn g_part(&self) -> &QFPolynomial {
        &self.g_part
    }

    pub fn is_zero(&self) -> bool {
        self.f_part.is_zero() && self.g_part.is_zero()
    }

    pub fn scaled(&self, s: &Rational) -> GElement {
        GElement::new(self.f_part.scaled(s), self.g_part.scaled(s))
    }

    /// `deg_f`: lex-maximal bidegree of the plain part (sentinel if zero).
    pub fn deg_f(&self) -> Degree {
        self.f_part.degree()
    }

    /// `deg_g`: lex-maximal bidegree of the g-coefficient shifted by `(0,1)`,
    /// or the sentinel when the g-part vanishes.
    pub fn deg_g(&self) -> Degree {
        match self.g_part.degree() {
            Degree::Zero => Degree::Zero,
            Degree::NonZero(d) => Degree::NonZero(d.plus(BiDegree::new(0, 1))),
        }
    }

    /// Both degrees at once, `(deg_f, deg_g)`.
    pub fn degrees(&self) -> (Degree, Degree) {
        (self.deg_f(), self.deg_g())
    }

    /// Coefficient at the lex-maximal degree of the selected part.
    pub fn leading_coefficient(&self, side: PartSide) -> Result<Rational, AlgebraError> {
        let part = match side {
            PartSide::F => &self.f_part,
            PartSide::G => &self.g_part,
        };
        part.leading_coefficient()
            .cloned()
            .ok_or(AlgebraError::ZeroPart(side))
    }

    /// Apply `D = q d/dq` using `Dq = q`, `Df = q(1-f^2)`, `Dg = -q f g`
    /// and the Leibniz rule; the result is g-reduced by construction.
    ///
    /// On a monomial `q^i f^j` this gives
    /// `i q^i f^j + j q^{i+1} f^{j-1} - j q^{i+1} f^{j+1}`, and on
    /// `q^i f^j g` the same with the last coefficient `-(j+1)` (the extra
    /// `-1` coming from `Dg`).
    pub fn apply_d(&self) -> GElement {
        let mut out = GElement::zero();
        for (&d, c) in self.f_part.iter() {
            let (i, j) = (d.q_exp, d.f_exp);
            out.f_part.add_term(d, c * Rational::from_integer(i.into()));
            if j > 0 {
                let jr = Rational::from_integer(j.into());
                out.f_part.add_term(BiDegree::new(i + 1, j - 1), c * &jr);
                out.f_part.add_term(BiDegree::new(i + 1, j + 1), -(c * &jr));
            }
        }
        for (&d, c) in self.g_part.iter() {
            let (i, j) = (d.q_exp, d.f_exp);
            out.g_part.add_term(d, c * Rational::from_integer(i.into()));
            if j > 0 {
                let jr = Rational::from_integer(j.into());
                out.g_part.add_term(BiDegree::new(i + 1, j - 1), c * &jr);
            }
            out.g_part.add_term(
                BiDegree::new(i + 1, j + 1),
                -(c * Rational::from_integer((j + 1).into())),
            );
        }
        out
    }

    /// Exact division by `q`. Returns `None` unless every monomial of both
    /// parts has a positive `q`-exponent.
    pub fn div_q(&self) -> Option<GElement> {
        let shift = |p: &QFPolynomial| -> Option<QFPolynomial> {
            let mut out = QFPolynomial::zero();
            for (&d, c) in p.iter() {
                if d.q_exp == 0 {
                    return None;
                }
                out.add_term(BiDegree::new(d.q_exp - 1, d.f_exp), c.clone());
            }
            Some(out)
        };
        Some(GElement::new(shift(&self.f_part)?, shift(&self.g_part)?))
    }

    /// Truncated Taylor expansion in `q` through `q^order`, substituting the
    /// exact series of `f` and `g` built from the alternation recursion.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        super::series::expand(self, order)
    }

    /// The canonical serialisable form: both parts as `(i, j, "p/q")` triples
    /// sorted by bidegree.
    pub fn to_triples(&self) -> (Vec<(u32, u32, String)>, Vec<(u32, u32, String)>) {
        let dump = |p: &QFPolynomial| {
            p.iter()
                .map(|(d, c)| (d.q_exp, d.f_exp, rational_to_string(c)))
                .collect()
        };
        (dump(&self.f_part), dump(&self.g_part))
    }
}

impl Add for &GElement {
    type Output = GElement;
    fn add(self, rhs: &GElement) -> GElement {
        GElement::new(&self.f_part + &rhs.f_part, &self.g_part + &rhs.g_part)
    }
}

impl Sub for &GElement {
    type Output = GElement;
    fn sub(self, rhs: &GElement) -> GElement {
        GElement::new(&self.f_part - &rhs.f_part, &self.g_part - &rhs.g_part)
    }
}

impl Neg for &GElement {
    type Output = GElement;
    fn neg(self) -> GElement {
        GElement::new(-&self.f_part, -&self.g_part)
    }
}

/// g-reduced product: `(a1 + a2 g)(b1 + b2 g) =
/// (a1 b1 + a2 b2 (1 - f^2)) + (a1 b2 + a2 b1) g`, using `g^2 = 1 - f^2`.
impl Mul for &GElement {
    type Output = GElement;
    fn mul(self, rhs: &GElement) -> GElement {
        let one_minus_f2 = {
            let mut p = QFPolynomial::monomial(0, 0, Rational::one());
            p.add_term(BiDegree::new(0, 2), -Rational::one());
            p
        };
        let f_part =
            &(&self.f_part * &rhs.f_part) + &(&(&self.g_part * &rhs.g_part) * &one_minus_f2);
        let g_part = &(&self.f_part * &rhs.g_part) + &(&self.g_part * &rhs.f_part);
        GElement::new(f_part, g_part)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn g_times_g_is_one_minus_f_squared() {
        let gg = &GElement::g() * &GElement::g();
        let mut expect = QFPolynomial::monomial(0, 0, rat(1));
        expect.add_term(BiDegree::new(0, 2), rat(-1));
        assert_eq!(gg, GElement::new(expect, QFPolynomial::zero()));
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let x = &(&GElement::f() + &GElement::g()) * &GElement::q();
        assert_eq!(&GElement::one() * &x, x);
    }

    #[test]
    fn f_plus_g_times_f_minus_g() {
        // (f + g)(f - g) = f^2 - g^2 = 2 f^2 - 1.
        let lhs = &(&GElement::f() + &GElement::g()) * &(&GElement::f() - &GElement::g());
        let mut expect = QFPolynomial::monomial(0, 2, rat(2));
        expect.add_term(BiDegree::new(0, 0), rat(-1));
        assert_eq!(lhs, GElement::new(expect, QFPolynomial::zero()));
    }

    #[test]
    fn d_of_f() {
        // Df = q - q f^2.
        let df = GElement::f().apply_d();
        let mut expect = QFPolynomial::monomial(1, 0, rat(1));
        expect.add_term(BiDegree::new(1, 2), rat(-1));
        assert_eq!(df, GElement::new(expect, QFPolynomial::zero()));
    }

    #[test]
    fn d_of_constant_is_zero() {
        assert!(GElement::one().apply_d().is_zero());
    }

    #[test]
    fn d_of_fg() {
        // D(fg) = q g - 2 q f^2 g.
        let fg = &GElement::f() * &GElement::g();
        let mut expect = QFPolynomial::monomial(1, 0, rat(1));
        expect.add_term(BiDegree::new(1, 2), rat(-2));
        assert_eq!(fg.apply_d(), GElement::new(QFPolynomial::zero(), expect));
    }

    #[test]
    fn degrees_and_sentinel() {
        // q f^2 + f has deg_f = (1,2).
        let a = &(&GElement::q() * &(&GElement::f() * &GElement::f())) + &GElement::f();
        assert_eq!(a.deg_f(), Degree::NonZero(BiDegree::new(1, 2)));
        assert_eq!(a.deg_g(), Degree::Zero);

        // 2 f g has deg_g = (0,1) + (0,1) = (0,2).
        let b = (&GElement::f() * &GElement::g()).scaled(&rat(2));
        assert_eq!(b.deg_g(), Degree::NonZero(BiDegree::new(0, 2)));

        let z = GElement::zero();
        assert_eq!(z.degrees(), (Degree::Zero, Degree::Zero));
        assert!(Degree::Zero < Degree::NonZero(BiDegree::new(0, 0)));
    }

    #[test]
    fn leading_coefficients() {
        // -2 f^2 + 1.
        let mut p = QFPolynomial::monomial(0, 2, rat(-2));
        p.add_term(BiDegree::new(0, 0), rat(1));
        let a = GElement::new(p, QFPolynomial::zero());
        assert_eq!(a.leading_coefficient(PartSide::F), Ok(rat(-2)));
        assert_eq!(
            a.leading_coefficient(PartSide::G),
            Err(AlgebraError::ZeroPart(PartSide::G))
        );

        // q f g on the g side.
        let b = GElement::monomial(1, 1, true, rat(1));
        assert_eq!(b.leading_coefficient(PartSide::G), Ok(rat(1)));

        // D(f^3): leading coefficient is -3 times that of f^3.
        let f3 = &(&GElement::f() * &GElement::f()) * &GElement::f();
        assert_eq!(f3.apply_d().leading_coefficient(PartSide::F), Ok(rat(-3)));
    }

    #[test]
    fn rational_string_round_trip() {
        use super::super::{rational_from_str, rational_to_string};
        let x = Rational::new(26.into(), 120.into());
        assert_eq!(rational_to_string(&x), "13/60");
        assert_eq!(rational_from_str("13/60").unwrap(), x);
        assert_eq!(rational_from_str("-7").unwrap(), rat(-7));
        assert!(rational_from_str("1/0").is_err());
        assert!(rational_from_str("x/2").is_err());
    }
}
