//! Simple bases: the extremal bases that realise the degree bounds, their
//! exhaustive enumeration, signs, closed class counts, and the leading
//! coefficients they produce.
//!
//! A simple base consists, left to right on the real line, of a left end
//! (only when `d` is odd), one bounded segment per `odd_labels` partition
//! (each holding that label's maximum), for kind B one half-closed special
//! segment whose open end is the pole, and a right end. The `pairs`
//! conjugate critical pairs hang over the chains (the gaps between
//! components), ordered within each chain; the `even_labels` crossings are
//! placed on the components, with two possible passages on a bounded
//! segment whose maximum sits at a higher label and one passage anywhere
//! else. A special segment must carry at least one crossing.
//!
//! Sequences for the sign are ramification indices: a regular passage is 1,
//! a maximum of entry `e` is `e + 1`, a crossing of entry `e` is `e + 1`,
//! and for kinds A/B an extra 1 for the pole joins the special chain.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
#[cfg(test)]
use num_traits::One;
use num_traits::Zero;

use crate::algebra::{BiDegree, Rational};
use crate::alternations::disorders;

use super::{stats, Parity, ReducedProfiles};

/// Simple bases only come in the two cycle-free kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BaseKind {
    B,
    C,
}

/// One real component of a simple base, left to right.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Component {
    LeftEnd,
    /// Bounded closed segment holding the maximum of `label` (0-based),
    /// of reduced entry `entry`.
    Segment {
        label: usize,
        entry: u32,
    },
    /// Half-closed special segment; the pole sits at its open end.
    Special {
        pole_right: bool,
    },
    RightEnd,
}

/// Where a crossing sits on its component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CrossingPassage {
    /// The single passage of an end or special segment.
    Single,
    /// Rising passage of a bounded segment (left of the maximum).
    Rising,
    /// Falling passage (right of the maximum).
    Falling,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleBase {
    pub kind: BaseKind,
    pub parity: Parity,
    /// Number of labels (partitions) of the profile.
    pub labels: usize,
    pub components: Vec<Component>,
    /// 1-based special chain index.
    pub sp: usize,
    /// Conjugate pairs per chain, ordered: `(label, entry)`.
    pub upper: Vec<Vec<(usize, u32)>>,
    /// `(label, entry, component index, passage)` per crossing.
    pub crossings: Vec<(usize, u32, usize, CrossingPassage)>,
}

impl SimpleBase {
    pub fn chain_count(&self) -> usize {
        self.upper.len()
    }

    /// Upper components adjacent to the special chain.
    pub fn c_sp(&self) -> usize {
        self.upper[self.sp - 1].len()
    }

    fn crossing_at(&self, label: usize, component: usize, passage: CrossingPassage) -> Option<u32> {
        self.crossings
            .iter()
            .find(|&&(l, _, ci, p)| l == label && ci == component && p == passage)
            .map(|&(_, e, _, _)| e)
    }

    /// Ramification sequence of one label's real vertices (no pole entry)
    /// and the index at which the special chain sits in it.
    pub fn label_entries(&self, label: usize) -> (Vec<u32>, usize) {
        let mut seq = Vec::new();
        let mut pole_at = None;
        // Components strictly left of chain sp, for the kind C anchor.
        let left_of_sp = match self.parity {
            Parity::Odd => self.sp,
            Parity::Even => self.sp - 1,
        };
        for (ci, comp) in self.components.iter().enumerate() {
            if ci == left_of_sp && pole_at.is_none() && !matches!(comp, Component::Special { .. }) {
                pole_at = Some(seq.len());
            }
            match comp {
                Component::LeftEnd | Component::RightEnd => {
                    let e = self.crossing_at(label, ci, CrossingPassage::Single);
                    seq.push(e.map_or(1, |e| e + 1));
                }
                Component::Special { pole_right } => {
                    if !pole_right {
                        pole_at = Some(seq.len());
                    }
                    let e = self.crossing_at(label, ci, CrossingPassage::Single);
                    seq.push(e.map_or(1, |e| e + 1));
                    if *pole_right {
                        pole_at = Some(seq.len());
                    }
                }
                Component::Segment {
                    label: seg_label,
                    entry,
                } => {
                    if label < *seg_label {
                        let e = self.crossing_at(label, ci, CrossingPassage::Rising);
                        seq.push(e.map_or(1, |e| e + 1));
                        let e = self.crossing_at(label, ci, CrossingPassage::Falling);
                        seq.push(e.map_or(1, |e| e + 1));
                    } else if label == *seg_label {
                        seq.push(entry + 1);
                    }
                }
            }
        }
        let at = pole_at.expect("the component bounding chain sp is always reached");
        (seq, at)
    }

    /// Ramification sequence of one label, with the pole's extra 1 inserted
    /// for kind B.
    fn label_sequence(&self, label: usize) -> Vec<u32> {
        let (mut seq, pole_at) = self.label_entries(label);
        if self.kind == BaseKind::B {
            seq.insert(pole_at, 1);
        }
        seq
    }

    /// `(-1)^(total disorders over all labels)`.
    pub fn sign(&self) -> i8 {
        let total: usize = (0..self.labels)
            .map(|j| disorders(&self.label_sequence(j)))
            .sum();
        if total % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Per-label odd-multiplicity entries; `None` when some partition repeats a
/// parity (no simple bases exist then).
fn label_data(
    profiles: &ReducedProfiles,
) -> Option<(Vec<(usize, u32)>, Vec<(usize, u32)>, Vec<(usize, u32)>)> {
    let mut maxima = Vec::new();
    let mut crossings = Vec::new();
    let mut pairs = Vec::new();
    for (label, p) in profiles.partitions().iter().enumerate() {
        let mut odd_here = 0;
        let mut even_here = 0;
        for (&v, &n) in &p.multiplicities() {
            for _ in 0..n / 2 {
                pairs.push((label, v));
            }
            if n % 2 == 1 {
                if v % 2 == 1 {
                    odd_here += 1;
                    maxima.push((label, v));
                } else {
                    even_here += 1;
                    crossings.push((label, v));
                }
            }
        }
        if odd_here > 1 || even_here > 1 {
            return None;
        }
    }
    pairs.sort_unstable();
    Some((maxima, crossings, pairs))
}

/// All distinct permutations of a sorted multiset, lexicographic order.
fn multiset_permutations<T: Ord + Clone>(sorted: &[T]) -> Vec<Vec<T>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    loop {
        // next_permutation
        let Some(i) = (0..cur.len().saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// Compositions of `total` into `parts` non-negative summands.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Enumerate every simple base of the given kind with its sign.
pub fn enumerate_simple_bases(profiles: &ReducedProfiles, kind: BaseKind) -> Vec<(SimpleBase, i8)> {
    let Some((maxima, crossings, pairs)) = label_data(profiles) else {
        return Vec::new();
    };
    if kind == BaseKind::B && crossings.is_empty() {
        return Vec::new();
    }

    let parity = profiles.parity();
    let labels = profiles.partitions().len();
    let o = maxima.len();
    let l = o + 1 + usize::from(kind == BaseKind::B);

    let mut out = Vec::new();
    for seg_order in multiset_permutations(&maxima) {
        // Interior component layouts; for kind B the special segment takes
        // every position and both orientations.
        let mut interiors: Vec<(Vec<Component>, Option<usize>)> = Vec::new();
        let segments: Vec<Component> = seg_order
            .iter()
            .map(|&(label, entry)| Component::Segment { label, entry })
            .collect();
        match kind {
            BaseKind::C => interiors.push((segments.clone(), None)),
            BaseKind::B => {
                for ins in 0..=o {
                    for pole_right in [false, true] {
                        let mut interior = segments.clone();
                        interior.insert(ins, Component::Special { pole_right });
                        interiors.push((interior, Some(ins)));
                    }
                }
            }
        }

        for (interior, special_idx) in interiors {
            let mut components = Vec::new();
            if parity == Parity::Odd {
                components.push(Component::LeftEnd);
            }
            components.extend(interior);
            components.push(Component::RightEnd);

            // Chain i (1-based) sits left of components[i-1] for d even,
            // between components[i-1] and components[i] for d odd.
            let special_ci = special_idx.map(|ins| ins + usize::from(parity == Parity::Odd));
            let sp_choices: Vec<usize> = match special_ci {
                None => (1..=l).collect(),
                Some(ci) => {
                    let Component::Special { pole_right } = components[ci] else {
                        unreachable!()
                    };
                    let left_chain = if parity == Parity::Odd { ci } else { ci + 1 };
                    vec![if pole_right {
                        left_chain + 1
                    } else {
                        left_chain
                    }]
                }
            };

            for sp in sp_choices {
                for composition in compositions(pairs.len(), l) {
                    for pair_order in multiset_permutations(&pairs) {
                        let mut upper: Vec<Vec<(usize, u32)>> = Vec::with_capacity(l);
                        let mut at = 0;
                        for &take in &composition {
                            upper.push(pair_order[at..at + take].to_vec());
                            at += take;
                        }
                        place_crossings(
                            &components,
                            special_ci,
                            &crossings,
                            parity,
                            kind,
                            &mut |placement| {
                                let base = SimpleBase {
                                    kind,
                                    parity,
                                    labels,
                                    components: components.clone(),
                                    sp,
                                    upper: upper.clone(),
                                    crossings: placement.to_vec(),
                                };
                                let sign = base.sign();
                                out.push((base, sign));
                            },
                        );
                    }
                }
            }
        }
    }
    out
}

type Placement = (usize, u32, usize, CrossingPassage);

/// Cartesian product of the legal slots of each crossing; kind B keeps only
/// placements with at least one crossing on the special segment.
fn place_crossings(
    components: &[Component],
    special_ci: Option<usize>,
    crossings: &[(usize, u32)],
    parity: Parity,
    kind: BaseKind,
    emit: &mut dyn FnMut(&[Placement]),
) {
    fn rec(
        components: &[Component],
        special_ci: Option<usize>,
        crossings: &[(usize, u32)],
        idx: usize,
        acc: &mut Vec<Placement>,
        need_special: bool,
        emit: &mut dyn FnMut(&[Placement]),
    ) {
        if idx == crossings.len() {
            if !need_special {
                emit(acc);
            }
            return;
        }
        let (label, entry) = crossings[idx];
        for (ci, comp) in components.iter().enumerate() {
            let passages: &[CrossingPassage] = match comp {
                Component::LeftEnd | Component::RightEnd | Component::Special { .. } => {
                    &[CrossingPassage::Single]
                }
                Component::Segment {
                    label: seg_label, ..
                } => {
                    if label < *seg_label {
                        &[CrossingPassage::Rising, CrossingPassage::Falling]
                    } else {
                        &[]
                    }
                }
            };
            for &p in passages {
                acc.push((label, entry, ci, p));
                let still_need = need_special && Some(ci) != special_ci;
                rec(
                    components,
                    special_ci,
                    crossings,
                    idx + 1,
                    acc,
                    still_need,
                    emit,
                );
                acc.pop();
            }
        }
    }
    let need_special = kind == BaseKind::B;
    debug_assert!(special_ci.is_some() || kind == BaseKind::C);
    let _ = parity;
    rec(
        components,
        special_ci,
        crossings,
        0,
        &mut Vec::new(),
        need_special,
        emit,
    );
}

/// Signed and weighted sums over all simple bases of both kinds, plus the
/// number of flip-equivalence classes (crossing placements quotiented out).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleBaseSums {
    pub type_b: i64,
    pub type_c: i64,
    /// Sum of `sign * (c_sp + 1)` over kind C: the weight with which a base
    /// reaches the extremal monomials.
    pub type_c_weighted: i64,
    pub classes_b: u64,
    pub classes_c: u64,
    pub bases_b: u64,
    pub bases_c: u64,
}

pub fn simple_base_sums(profiles: &ReducedProfiles) -> SimpleBaseSums {
    let mut sums = SimpleBaseSums {
        type_b: 0,
        type_c: 0,
        type_c_weighted: 0,
        classes_b: 0,
        classes_c: 0,
        bases_b: 0,
        bases_c: 0,
    };
    let mut classes_b = alloc::collections::BTreeSet::new();
    let mut classes_c = alloc::collections::BTreeSet::new();
    for (base, sign) in enumerate_simple_bases(profiles, BaseKind::B) {
        sums.type_b += sign as i64;
        sums.bases_b += 1;
        classes_b.insert((base.components.clone(), base.sp, base.upper.clone()));
    }
    for (base, sign) in enumerate_simple_bases(profiles, BaseKind::C) {
        sums.type_c += sign as i64;
        sums.type_c_weighted += sign as i64 * (base.c_sp() as i64 + 1);
        sums.bases_c += 1;
        classes_c.insert((base.components.clone(), base.sp, base.upper.clone()));
    }
    sums.classes_b = classes_b.len() as u64;
    sums.classes_c = classes_c.len() as u64;
    sums
}

/// The closed class-count formulas, evaluated verbatim:
/// `(o+1)(o+c)!/A` for kind C (all parities) and `2(o+c+1)!/A` for kind B
/// when `d` is odd and a crossing exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedCounts {
    pub type_c: BigInt,
    pub type_b: Option<BigInt>,
}

pub fn simple_base_counts_closed(profiles: &ReducedProfiles) -> ClosedCounts {
    let s = stats(profiles);
    let a = BigInt::from(s.repeat_divisor.clone());
    let fact = |n: u32| crate::algebra::factorial(n as usize);
    let exact_div = |num: BigInt, den: &BigInt| {
        debug_assert!((&num % den).is_zero(), "closed count must divide evenly");
        num / den
    };
    let type_c = exact_div(
        BigInt::from(s.odd_labels + 1) * fact(s.odd_labels + s.pairs),
        &a,
    );
    let type_b = (profiles.parity() == Parity::Odd && s.even_labels > 0)
        .then(|| exact_div(BigInt::from(2) * fact(s.odd_labels + s.pairs + 1), &a));
    ClosedCounts { type_c, type_b }
}

/// The coefficients at the four extremal monomials of the degree bounds,
/// computed from the enumerated signed sums. Kind C bases reach the
/// extremal monomials with weight `c_sp + 1` (the leading coefficients of
/// the `u`/`v` operator families grow by that factor), so the weighted sum
/// enters where the plain one would otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingCoefficients {
    pub f_degree: BiDegree,
    pub g_degree: BiDegree,
    pub f_coeff: Rational,
    pub g_coeff: Rational,
    pub sums: SimpleBaseSums,
}

pub fn leading_coefficients(profiles: &ReducedProfiles) -> LeadingCoefficients {
    let s = stats(profiles);
    let sums = simple_base_sums(profiles);
    let scale = {
        let sign = if s.pairs % 2 == 0 { 1 } else { -1 };
        Rational::new(sign.into(), BigInt::from(2).pow(s.pairs))
    };
    let rat = |x: i64| Rational::from_integer(x.into());
    let high = s.pairs + s.odd_labels + 2;
    let (f_degree, g_degree, f_coeff, g_coeff) = match profiles.parity() {
        Parity::Odd => (
            BiDegree::new(s.pairs + 1, high),
            BiDegree::new(s.pairs, high),
            &scale * &rat(sums.type_c_weighted),
            &scale * &rat(sums.type_b + 2 * sums.type_c_weighted),
        ),
        Parity::Even => (
            BiDegree::new(s.pairs, high),
            BiDegree::new(s.pairs + 1, high),
            &scale * &rat(-sums.type_b - 2 * sums.type_c_weighted),
            &scale * &rat(sums.type_c_weighted),
        ),
    };
    LeadingCoefficients {
        f_degree,
        g_degree,
        f_coeff,
        g_coeff,
        sums,
    }
}
