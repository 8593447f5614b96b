//! Base descriptors, their signs and generating series, the empty-profile
//! pipeline for the signed counts, and growth diagnostics.
//!
//! A [`BaseDescriptor`] is the combinatorial record of a base: its type
//! (A, B or C), the parity of `d`, the number of chains `l` and the special
//! chain `sp`, the count of upper components adjacent to each chain, and
//! per label the left-to-right ramification sequence of real base vertices
//! anchored relative to the special chain. [`epsilon_base`] computes the
//! base sign, [`assemble_fb`] the per-base generating series from the
//! operator families, and [`expected_fb_shape`] the closed-form prediction
//! of its degrees and leading coefficients used as the independent check.

#[cfg(feature = "std")]
use alloc::vec;
use alloc::vec::Vec;

use core::fmt;

use num_bigint::BigInt;
use num_traits::One;
#[cfg(feature = "std")]
use num_traits::{Signed, Zero};

#[cfg(feature = "std")]
use crate::algebra::factorial;
use crate::algebra::BiDegree;
use crate::algebra::{Degree, GElement, Rational};
use crate::alternations::{base_series, disorders, family, FamilyKind, SeriesKind};
use crate::profiles::{BaseKind, Parity, SimpleBase};
use crate::rng::SplitMix64;

/// The three base types, by the pole's neighbourhood.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BaseType {
    A,
    B,
    C,
}

/// Real base vertices of one label: ramification indices left to right,
/// with `before_sp` of them lying left of the special chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelSequence {
    pub entries: Vec<u32>,
    pub before_sp: usize,
}

/// Combinatorial record from which the sign and the generating series of a
/// base are computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseDescriptor {
    pub base_type: BaseType,
    pub parity: Parity,
    /// 1-based index of the special chain, `1 <= sp <= l`.
    pub sp: usize,
    /// Upper components adjacent to each chain; the length is `l`.
    pub upper_counts: Vec<u32>,
    pub labels: Vec<LabelSequence>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescriptorError {
    NoChains,
    BadSp {
        sp: usize,
        chains: usize,
    },
    /// Type A forces `c_sp = 0`: nothing can hang over the chain inside the
    /// cycle.
    TypeASpecialChainNotEmpty,
    /// For `d` even the leftmost chain is unbounded, so a type A pole
    /// cannot sit there.
    TypeAEvenLeftmostSp,
    BadLabelAnchor {
        label: usize,
    },
}

impl fmt::Display for DescriptorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DescriptorError::NoChains => write!(f, "a base has at least one chain"),
            DescriptorError::BadSp { sp, chains } => {
                write!(f, "special chain {sp} out of range 1..={chains}")
            }
            DescriptorError::TypeASpecialChainNotEmpty => {
                write!(
                    f,
                    "type A requires no upper components on the special chain"
                )
            }
            DescriptorError::TypeAEvenLeftmostSp => {
                write!(f, "type A with d even cannot have sp = 1")
            }
            DescriptorError::BadLabelAnchor { label } => {
                write!(
                    f,
                    "label {label}: special-chain anchor exceeds the sequence length"
                )
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DescriptorError {}

impl BaseDescriptor {
    pub fn chains(&self) -> usize {
        self.upper_counts.len()
    }

    pub fn total_upper(&self) -> u32 {
        self.upper_counts.iter().sum()
    }

    pub fn validate(&self) -> Result<(), DescriptorError> {
        let l = self.chains();
        if l == 0 {
            return Err(DescriptorError::NoChains);
        }
        if self.sp == 0 || self.sp > l {
            return Err(DescriptorError::BadSp {
                sp: self.sp,
                chains: l,
            });
        }
        if self.base_type == BaseType::A {
            if self.upper_counts[self.sp - 1] != 0 {
                return Err(DescriptorError::TypeASpecialChainNotEmpty);
            }
            if self.parity == Parity::Even && self.sp == 1 {
                return Err(DescriptorError::TypeAEvenLeftmostSp);
            }
        }
        for (label, seq) in self.labels.iter().enumerate() {
            if seq.before_sp > seq.entries.len() {
                return Err(DescriptorError::BadLabelAnchor { label });
            }
        }
        Ok(())
    }
}

/// Sign of a base: per label, the ramification sequence with an extra 1
/// inserted at the special-chain position for types A and B (nothing for
/// type C); the sign is `(-1)^(total disorders)`.
pub fn epsilon_base(b: &BaseDescriptor) -> Result<i8, DescriptorError> {
    b.validate()?;
    let insert_pole = matches!(b.base_type, BaseType::A | BaseType::B);
    let mut total = 0;
    for seq in &b.labels {
        let mut s = seq.entries.clone();
        if insert_pole {
            s.insert(seq.before_sp, 1);
        }
        total += disorders(&s);
    }
    Ok(if total % 2 == 0 { 1 } else { -1 })
}

/// Assemble the per-base generating series from the operator families.
pub fn assemble_fb(b: &BaseDescriptor) -> Result<GElement, DescriptorError> {
    let eps = epsilon_base(b)?;
    let c = &b.upper_counts;
    let sp = b.sp;
    let f_product = |skip: &[usize]| -> GElement {
        let mut acc = GElement::one();
        for (i, &ci) in c.iter().enumerate() {
            if skip.contains(&(i + 1)) {
                continue;
            }
            acc = &acc * &family(FamilyKind::FC, ci);
        }
        acc
    };
    let series = match (b.parity, b.base_type) {
        (Parity::Odd, BaseType::A) => f_product(&[sp]),
        (Parity::Odd, BaseType::B) => &family(FamilyKind::GTildeC, c[sp - 1]) * &f_product(&[sp]),
        (Parity::Odd, BaseType::C) => &family(FamilyKind::UC, c[sp - 1]) * &f_product(&[sp]),
        (Parity::Even, BaseType::A) => &family(FamilyKind::GC, c[0]) * &f_product(&[1, sp]),
        (Parity::Even, BaseType::B) if sp == 1 => -&f_product(&[]),
        (Parity::Even, BaseType::B) => {
            let gg = &family(FamilyKind::GC, c[0]) * &family(FamilyKind::GTildeC, c[sp - 1]);
            &gg * &f_product(&[1, sp])
        }
        (Parity::Even, BaseType::C) if sp == 1 => &family(FamilyKind::VC, c[0]) * &f_product(&[1]),
        (Parity::Even, BaseType::C) => {
            let gu = &family(FamilyKind::GC, c[0]) * &family(FamilyKind::UC, c[sp - 1]);
            &gu * &f_product(&[1, sp])
        }
    };
    Ok(if eps == 1 { series } else { -&series })
}

/// Closed-form prediction of the degrees and leading coefficients of a
/// base's series, independent of the operator algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FbShape {
    pub deg_f: Degree,
    pub deg_g: Degree,
    pub lead_f: Option<Rational>,
    pub lead_g: Option<Rational>,
}

/// Leads are `eps (-1)^c / 2^c` on the plain cells, `-1` times that for
/// type B on the even side, and for type C the special factor (the `u` or
/// `v` family with `s` upper components on the special chain) scales its
/// f-side lead by `s + 1` (`-2(s+1)` where it lands through `v` or `g*u`)
/// and its g-side lead by `2(s + 1)` (`s + 1` on the even side).
pub fn expected_fb_shape(b: &BaseDescriptor) -> Result<FbShape, DescriptorError> {
    let eps = epsilon_base(b)?;
    let c: u32 = b.total_upper();
    let l = b.chains() as u32;
    let s = b.upper_counts[b.sp - 1];
    let base_lead = {
        let sign = if (c % 2 == 0) == (eps == 1) { 1 } else { -1 };
        Rational::new(sign.into(), BigInt::from(2).pow(c))
    };
    let times = |k: i64| &base_lead * &Rational::from_integer(k.into());
    let deg = |i: u32, j: u32| Degree::NonZero(BiDegree::new(i, j));
    let shape = match (b.parity, b.base_type) {
        (Parity::Odd, BaseType::A) => FbShape {
            deg_f: deg(c, c + l - 1),
            deg_g: Degree::Zero,
            lead_f: Some(base_lead.clone()),
            lead_g: None,
        },
        (Parity::Odd, BaseType::B) => FbShape {
            deg_f: Degree::Zero,
            deg_g: deg(c, c + l),
            lead_f: None,
            lead_g: Some(base_lead.clone()),
        },
        (Parity::Odd, BaseType::C) => FbShape {
            deg_f: deg(c + 1, c + l + 1),
            deg_g: deg(c, c + l + 1),
            lead_f: Some(times(s as i64 + 1)),
            lead_g: Some(times(2 * (s as i64 + 1))),
        },
        (Parity::Even, BaseType::A) => FbShape {
            deg_f: Degree::Zero,
            deg_g: deg(c, c + l - 1),
            lead_f: None,
            lead_g: Some(base_lead.clone()),
        },
        (Parity::Even, BaseType::B) => FbShape {
            deg_f: deg(c, c + l),
            deg_g: Degree::Zero,
            lead_f: Some(times(-1)),
            lead_g: None,
        },
        (Parity::Even, BaseType::C) => FbShape {
            deg_f: deg(c, c + l + 1),
            deg_g: deg(c + 1, c + l + 1),
            lead_f: Some(times(-2 * (s as i64 + 1))),
            lead_g: Some(times(s as i64 + 1)),
        },
    };
    Ok(shape)
}

/// The descriptor of an enumerated simple base: the bridge from the
/// simple-base enumeration to the generating-series assembly.
pub fn descriptor_from_simple_base(base: &SimpleBase) -> BaseDescriptor {
    let descriptor = BaseDescriptor {
        base_type: match base.kind {
            BaseKind::B => BaseType::B,
            BaseKind::C => BaseType::C,
        },
        parity: base.parity,
        sp: base.sp,
        upper_counts: base.upper.iter().map(|c| c.len() as u32).collect(),
        labels: (0..base.labels)
            .map(|j| {
                let (entries, before_sp) = base.label_entries(j);
                LabelSequence { entries, before_sp }
            })
            .collect(),
    };
    debug_assert!(descriptor.validate().is_ok());
    descriptor
}

/// A uniformly sampled valid descriptor, for randomized verification.
pub fn random_descriptor(rng: &mut SplitMix64) -> BaseDescriptor {
    let base_type = match rng.below(3) {
        0 => BaseType::A,
        1 => BaseType::B,
        _ => BaseType::C,
    };
    let parity = if rng.chance(1, 2) {
        Parity::Odd
    } else {
        Parity::Even
    };
    let min_l = if base_type == BaseType::A && parity == Parity::Even {
        2
    } else {
        1
    };
    let l = rng.range(min_l, 4) as usize;
    let sp = if base_type == BaseType::A && parity == Parity::Even {
        rng.range(2, l as u64) as usize
    } else {
        rng.range(1, l as u64) as usize
    };
    let mut upper_counts: Vec<u32> = (0..l).map(|_| rng.below(4) as u32).collect();
    if base_type == BaseType::A {
        upper_counts[sp - 1] = 0;
    }
    let labels = (0..rng.below(4))
        .map(|_| {
            let len = rng.below(5) as usize;
            LabelSequence {
                entries: (0..len).map(|_| rng.range(1, 6) as u32).collect(),
                before_sp: rng.below(len as u64 + 1) as usize,
            }
        })
        .collect();
    let d = BaseDescriptor {
        base_type,
        parity,
        sp,
        upper_counts,
        labels,
    };
    debug_assert!(d.validate().is_ok());
    d
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SNumberError {
    /// `m! * coefficient` failed to clear the denominator: the series is
    /// not a signed-count series.
    NonIntegral { m: usize },
    /// `complex_reference` needs `m >= 2`.
    Domain { m: usize },
    /// Growth diagnostics need at least this many non-zero values.
    InsufficientData { needed: usize, got: usize },
}

impl fmt::Display for SNumberError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SNumberError::NonIntegral { m } => {
                write!(f, "m! * coefficient is not an integer at m = {m}")
            }
            SNumberError::Domain { m } => write!(f, "m = {m} out of domain (need m >= 2)"),
            SNumberError::InsufficientData { needed, got } => {
                write!(f, "need {needed} non-zero values, got {got}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SNumberError {}

/// `m!`-scaled coefficients of a series: the signed counts it generates.
/// Errors when some scaled coefficient is not an integer.
pub fn extract_s_numbers(series: &GElement, max_m: usize) -> Result<Vec<BigInt>, SNumberError> {
    let expansion = series.expand(max_m);
    let mut out = Vec::with_capacity(max_m + 1);
    let mut fact = BigInt::one();
    for m in 0..=max_m {
        if m > 0 {
            fact *= BigInt::from(m);
        }
        let scaled = expansion.coeff(m) * Rational::from_integer(fact.clone());
        if !scaled.denom().is_one() {
            return Err(SNumberError::NonIntegral { m });
        }
        out.push(scaled.to_integer());
    }
    Ok(out)
}

/// The empty-profile signed counts up to `max_m`, one parity at a time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SNumberReport {
    pub parity: Parity,
    /// `(m, S(empty, m))` for every `m <= max_m` of the right parity.
    pub values: Vec<(usize, BigInt)>,
    pub series: GElement,
}

/// Expand `u` (odd) or `v` (even) and scale; the result is cross-checked
/// against `(-1)^(m/2) B_m` from the alternation recursion.
pub fn s_numbers_empty(max_m: usize, parity: Parity) -> SNumberReport {
    let series = match parity {
        Parity::Odd => base_series(SeriesKind::U),
        Parity::Even => base_series(SeriesKind::V),
    };
    let scaled = extract_s_numbers(&series, max_m).expect("u and v have integral signed counts");
    let tables = crate::alternations::count_recursive(max_m);
    let residue = match parity {
        Parity::Odd => 1,
        Parity::Even => 0,
    };
    let mut values = Vec::new();
    for m in (residue..=max_m).step_by(2) {
        let mut expect = tables.b[m].clone();
        if (m / 2) % 2 == 1 {
            expect = -expect;
        }
        assert_eq!(
            scaled[m], expect,
            "broken-alternation cross-check at m = {m}"
        );
        values.push((m, scaled[m].clone()));
    }
    SNumberReport {
        parity,
        values,
        series,
    }
}

/// `(m-1)^(m-1)`: the reference count of complex simple rational functions
/// with `m` simple branch points.
pub fn complex_reference(m: usize) -> Result<BigInt, SNumberError> {
    if m < 2 {
        return Err(SNumberError::Domain { m });
    }
    Ok(BigInt::from(m - 1).pow((m - 1) as u32))
}

/// Growth diagnostics; exact input, floating point only here.
#[cfg(feature = "std")]
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticReport {
    /// `(m, ln|S| / (m ln m))` for the non-zero values with `m >= 2`.
    pub log_ratio: Vec<(usize, f64)>,
    /// `(k, |b_{k+1}/b_k|)` for the coefficients after `Q = q^2`.
    pub naive_ratio: Vec<(usize, f64)>,
    /// `(k, |b_{k+1}/b_k| * k/(k+1))`: the double-pole-corrected ratio.
    pub corrected_ratio: Vec<(usize, f64)>,
    /// Reciprocal of the last corrected ratio.
    pub radius_estimate: f64,
}

/// `ln |x|` that stays finite for integers far beyond the f64 range.
#[cfg(feature = "std")]
fn big_ln_abs(v: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    let v = v.abs();
    let k = v.bits().saturating_sub(512);
    let reduced: BigInt = v >> k;
    reduced.to_f64().unwrap().ln() + k as f64 * core::f64::consts::LN_2
}

/// Ratio diagnostics from the coefficients `b_k` of a series in `Q = q^2`:
/// the naive consecutive ratios, the corrected ones, and the radius
/// estimate (reciprocal of the last corrected ratio).
#[cfg(feature = "std")]
pub fn ratio_diagnostics(b: &[Rational]) -> (Vec<(usize, f64)>, Vec<(usize, f64)>, f64) {
    use num_traits::ToPrimitive;
    let mut naive = Vec::new();
    let mut corrected = Vec::new();
    for k in 1..b.len().saturating_sub(1) {
        if b[k].is_zero() || b[k + 1].is_zero() {
            continue;
        }
        let ratio = (&b[k + 1] / &b[k]).to_f64().unwrap().abs();
        naive.push((k, ratio));
        corrected.push((k, ratio * k as f64 / (k + 1) as f64));
    }
    let radius = corrected.last().map_or(f64::NAN, |&(_, r)| 1.0 / r);
    (naive, corrected, radius)
}

/// Growth diagnostics of an empty-profile report: the log-growth ratio of
/// the values and the pole-corrected coefficient ratios after `Q = q^2`
/// (the odd series is divided by `q` first).
#[cfg(feature = "std")]
pub fn asymptotic_report(report: &SNumberReport) -> Result<AsymptoticReport, SNumberError> {
    let nonzero = report.values.iter().filter(|(_, s)| !s.is_zero()).count();
    if nonzero < 10 {
        return Err(SNumberError::InsufficientData {
            needed: 10,
            got: nonzero,
        });
    }

    let mut log_ratio = Vec::new();
    for (m, s) in &report.values {
        if *m >= 2 && !s.is_zero() {
            let ln_s = big_ln_abs(s);
            log_ratio.push((*m, ln_s / (*m as f64 * (*m as f64).ln())));
        }
    }

    // b_k = S(m) / m! with m = 2k, or m = 2k + 1 for the odd series.
    let max_m = report.values.last().map_or(0, |(m, _)| *m);
    let mut b = vec![Rational::zero(); max_m / 2 + 1];
    for (m, s) in &report.values {
        b[m / 2] = Rational::new(s.clone(), factorial(*m));
    }
    let (naive_ratio, corrected_ratio, radius_estimate) = ratio_diagnostics(&b);
    Ok(AsymptoticReport {
        log_ratio,
        naive_ratio,
        corrected_ratio,
        radius_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PartSide;

    fn descriptor(
        base_type: BaseType,
        parity: Parity,
        sp: usize,
        upper_counts: Vec<u32>,
    ) -> BaseDescriptor {
        BaseDescriptor {
            base_type,
            parity,
            sp,
            upper_counts,
            labels: Vec::new(),
        }
    }

    #[test]
    fn epsilon_examples() {
        // No labelled real vertices: +1.
        let b = descriptor(BaseType::C, Parity::Odd, 1, vec![0]);
        assert_eq!(epsilon_base(&b), Ok(1));

        // Sorted entries, pole appended: each entry above 1 disorders once
        // with the inserted 1.
        let mut b = descriptor(BaseType::B, Parity::Odd, 2, vec![0, 0]);
        b.labels.push(LabelSequence {
            entries: vec![1, 1, 3],
            before_sp: 3,
        });
        assert_eq!(epsilon_base(&b), Ok(-1));
        b.labels[0].entries = vec![1, 2, 3];
        assert_eq!(epsilon_base(&b), Ok(1));

        // A lone big vertex right of the inserted pole gives no disorder;
        // left of it, one.
        let mut left = descriptor(BaseType::B, Parity::Odd, 1, vec![0, 0]);
        left.labels.push(LabelSequence {
            entries: vec![4],
            before_sp: 1,
        });
        assert_eq!(epsilon_base(&left), Ok(-1));
        let mut right = left.clone();
        right.labels[0].before_sp = 0;
        assert_eq!(epsilon_base(&right), Ok(1));

        // Type C never inserts the pole.
        let mut c = descriptor(BaseType::C, Parity::Odd, 1, vec![0, 0]);
        c.labels.push(LabelSequence {
            entries: vec![4],
            before_sp: 1,
        });
        assert_eq!(epsilon_base(&c), Ok(1));
    }

    #[test]
    fn descriptor_validation() {
        assert_eq!(
            descriptor(BaseType::C, Parity::Odd, 1, vec![]).validate(),
            Err(DescriptorError::NoChains)
        );
        assert_eq!(
            descriptor(BaseType::C, Parity::Odd, 3, vec![0, 0]).validate(),
            Err(DescriptorError::BadSp { sp: 3, chains: 2 })
        );
        assert_eq!(
            descriptor(BaseType::A, Parity::Odd, 1, vec![2]).validate(),
            Err(DescriptorError::TypeASpecialChainNotEmpty)
        );
        assert_eq!(
            descriptor(BaseType::A, Parity::Even, 1, vec![0, 1]).validate(),
            Err(DescriptorError::TypeAEvenLeftmostSp)
        );
    }

    #[test]
    fn fb_for_empty_profile_is_u_and_v() {
        let odd = descriptor(BaseType::C, Parity::Odd, 1, vec![0]);
        assert_eq!(assemble_fb(&odd).unwrap(), base_series(SeriesKind::U));
        let even = descriptor(BaseType::C, Parity::Even, 1, vec![0]);
        assert_eq!(assemble_fb(&even).unwrap(), base_series(SeriesKind::V));
    }

    #[test]
    fn fb_matches_expected_shape_randomized() {
        let mut rng = SplitMix64::new(0xfb);
        for _ in 0..300 {
            let b = random_descriptor(&mut rng);
            let fb = assemble_fb(&b).unwrap();
            let shape = expected_fb_shape(&b).unwrap();
            assert_eq!(fb.deg_f(), shape.deg_f, "deg_f for {b:?}");
            assert_eq!(fb.deg_g(), shape.deg_g, "deg_g for {b:?}");
            assert_eq!(fb.leading_coefficient(PartSide::F).ok(), shape.lead_f);
            assert_eq!(fb.leading_coefficient(PartSide::G).ok(), shape.lead_g);
        }
    }

    #[test]
    fn assembled_series_have_integral_counts() {
        let mut rng = SplitMix64::new(0x5ca1e);
        for _ in 0..40 {
            let b = random_descriptor(&mut rng);
            let fb = assemble_fb(&b).unwrap();
            assert!(
                extract_s_numbers(&fb, 10).is_ok(),
                "non-integral counts for {b:?}"
            );
        }
    }

    #[test]
    fn s_numbers_extract() {
        let u = base_series(SeriesKind::U);
        let s = extract_s_numbers(&u, 5).unwrap();
        assert_eq!(s[1], BigInt::zero());
        assert_eq!(s[3], BigInt::from(-2));
        assert_eq!(s[5], BigInt::from(26));
        assert_eq!(
            extract_s_numbers(&GElement::zero(), 4).unwrap(),
            vec![BigInt::zero(); 5]
        );
        let bad = GElement::constant(Rational::new(1.into(), 3.into()));
        assert_eq!(
            extract_s_numbers(&bad, 2),
            Err(SNumberError::NonIntegral { m: 0 })
        );
    }

    #[test]
    fn empty_profile_pipeline() {
        let odd = s_numbers_empty(7, Parity::Odd);
        let odd_values: Vec<i64> = odd
            .values
            .iter()
            .map(|(_, s)| i64::try_from(s).unwrap())
            .collect();
        assert_eq!(odd_values, vec![0, -2, 26, -594]);

        let even = s_numbers_empty(6, Parity::Even);
        let even_values: Vec<i64> = even
            .values
            .iter()
            .map(|(_, s)| i64::try_from(s).unwrap())
            .collect();
        assert_eq!(even_values, vec![0, -1, 7, -117]);
    }

    #[test]
    fn complex_reference_values() {
        assert_eq!(complex_reference(2).unwrap(), BigInt::one());
        assert_eq!(complex_reference(5).unwrap(), BigInt::from(256));
        assert_eq!(complex_reference(1), Err(SNumberError::Domain { m: 1 }));
    }

    #[cfg(feature = "std")]
    #[test]
    fn synthetic_geometric_control() {
        // b_k = 2^{-k}: corrected ratio trends to (1/2) * k/(k+1),
        // radius estimate near 2.
        let b: Vec<Rational> = (0..42u32)
            .map(|k| Rational::new(1.into(), BigInt::from(2).pow(k)))
            .collect();
        let (naive, corrected, radius) = ratio_diagnostics(&b);
        assert!((naive.last().unwrap().1 - 0.5).abs() < 1e-12);
        let (k, r) = *corrected.last().unwrap();
        assert!((r - 0.5 * k as f64 / (k + 1) as f64).abs() < 1e-12);
        assert!((radius - 2.0).abs() < 0.1);
    }

    #[cfg(feature = "std")]
    #[test]
    fn insufficient_data_is_an_error() {
        let report = s_numbers_empty(9, Parity::Odd);
        assert!(matches!(
            asymptotic_report(&report),
            Err(SNumberError::InsufficientData { .. })
        ));
    }
}
