//! Exhaustive generation of all real bw-graphs with prescribed white and
//! black degree partitions.
//!
//! The encoding is canonical by construction, so generating every valid
//! encoding once enumerates every isomorphism class exactly once. The outer
//! loops fix the number of real vertices, the first colour and the cycle
//! position; real degrees are then assigned from the partitions respecting
//! the parity and minimum forced at each position, and the leftover degrees
//! (which must pair up into conjugate trees) are spent on plane-tree forests.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use super::{BwGraphError, Color, PlaneTree, RealBwGraph};

/// Value -> multiplicity, kept free of zero entries.
type Multiset = BTreeMap<u32, usize>;

fn multiset(values: &[u32]) -> Multiset {
    let mut m = Multiset::new();
    for &v in values {
        *m.entry(v).or_insert(0) += 1;
    }
    m
}

fn remove_one(m: &Multiset, value: u32) -> Multiset {
    let mut out = m.clone();
    match out.get_mut(&value) {
        Some(1) => {
            out.remove(&value);
        }
        Some(k) => *k -= 1,
        None => unreachable!("removing an absent value"),
    }
    out
}

/// Halve every multiplicity; `None` if any is odd.
fn halved(m: &Multiset) -> Option<Multiset> {
    let mut out = Multiset::new();
    for (&v, &k) in m {
        if k % 2 != 0 {
            return None;
        }
        out.insert(v, k / 2);
    }
    Some(out)
}

fn key(m: &Multiset) -> Vec<(u32, usize)> {
    m.iter().map(|(&v, &k)| (v, k)).collect()
}

/// Enumerate all real bw-graphs whose white / black degree multisets equal
/// the given partitions. Errors when the partition sums differ; a degree sum
/// below 2 (no room for the bigon) yields the empty list.
pub fn enumerate(white: &[u32], black: &[u32]) -> Result<Vec<RealBwGraph>, BwGraphError> {
    let dw: u32 = white.iter().sum();
    let db: u32 = black.iter().sum();
    if dw != db {
        return Err(BwGraphError::MismatchedSums);
    }
    let d = dw as usize;
    let mut out = Vec::new();
    if d < 2 {
        return Ok(out);
    }
    // Connected and unicyclic forces #vertices = #edges = d.
    if white.len() + black.len() != d {
        return Ok(out);
    }

    let white_ms = multiset(white);
    let black_ms = multiset(black);
    let mut gen = TreeGen::default();

    let n_max = white.len() + black.len();
    for n in 2..=n_max {
        if n % 2 != d % 2 {
            continue;
        }
        for first_color in [Color::White, Color::Black] {
            let real_white = (0..n)
                .filter(|i| spine_color(first_color, *i) == Color::White)
                .count();
            if real_white > white.len() || n - real_white > black.len() {
                continue;
            }
            for cycle_pos in 1..n {
                enumerate_at(
                    n,
                    first_color,
                    cycle_pos,
                    &white_ms,
                    &black_ms,
                    &mut gen,
                    &mut out,
                );
            }
        }
    }
    Ok(out)
}

fn spine_color(first: Color, i: usize) -> Color {
    if i % 2 == 0 {
        first
    } else {
        first.opposite()
    }
}

/// Degree forced at spine position `i` before trees: real neighbours plus 2
/// for a cycle vertex. Any legal degree must exceed it by an even amount.
fn base_degree(n: usize, cycle_pos: usize, i: usize) -> u32 {
    let mut base = 0;
    if i > 0 && i != cycle_pos {
        base += 1;
    }
    if i + 1 < n && i + 1 != cycle_pos {
        base += 1;
    }
    if i + 1 == cycle_pos || i == cycle_pos {
        base += 2;
    }
    base
}

fn enumerate_at(
    n: usize,
    first_color: Color,
    cycle_pos: usize,
    white_ms: &Multiset,
    black_ms: &Multiset,
    gen: &mut TreeGen,
    out: &mut Vec<RealBwGraph>,
) {
    // Assign real degrees position by position, consuming the partitions.
    fn assign(
        n: usize,
        first_color: Color,
        cycle_pos: usize,
        i: usize,
        degrees: &mut Vec<u32>,
        white_left: &Multiset,
        black_left: &Multiset,
        gen: &mut TreeGen,
        out: &mut Vec<RealBwGraph>,
    ) {
        if i == n {
            finish(
                n,
                first_color,
                cycle_pos,
                degrees,
                white_left,
                black_left,
                gen,
                out,
            );
            return;
        }
        let base = base_degree(n, cycle_pos, i);
        let pool = match spine_color(first_color, i) {
            Color::White => white_left,
            Color::Black => black_left,
        };
        let candidates: Vec<u32> = pool
            .keys()
            .copied()
            .filter(|&v| v >= base && (v - base) % 2 == 0)
            .collect();
        for v in candidates {
            degrees.push(v);
            let (w2, b2) = match spine_color(first_color, i) {
                Color::White => (remove_one(white_left, v), black_left.clone()),
                Color::Black => (white_left.clone(), remove_one(black_left, v)),
            };
            assign(
                n,
                first_color,
                cycle_pos,
                i + 1,
                degrees,
                &w2,
                &b2,
                gen,
                out,
            );
            degrees.pop();
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn finish(
        n: usize,
        first_color: Color,
        cycle_pos: usize,
        degrees: &[u32],
        white_left: &Multiset,
        black_left: &Multiset,
        gen: &mut TreeGen,
        out: &mut Vec<RealBwGraph>,
    ) {
        // Leftover degrees occur in conjugate pairs.
        let (Some(white_budget), Some(black_budget)) = (halved(white_left), halved(black_left))
        else {
            return;
        };

        // One slot per conjugate tree pair, ordered by position.
        let mut slots = Vec::new();
        for (i, &deg) in degrees.iter().enumerate() {
            let base = base_degree(n, cycle_pos, i);
            let pairs = ((deg - base) / 2) as usize;
            for _ in 0..pairs {
                slots.push((i, spine_color(first_color, i).opposite()));
            }
        }

        let mut forests: Vec<Vec<PlaneTree>> = vec![Vec::new(); n];
        fill_slots(
            &slots,
            0,
            &white_budget,
            &black_budget,
            &mut forests,
            gen,
            &mut |forests| {
                let graph = RealBwGraph::new(first_color, forests.clone(), cycle_pos)
                    .expect("generated encodings are structurally valid");
                out.push(graph);
            },
        );
    }

    let mut degrees = Vec::with_capacity(n);
    assign(
        n,
        first_color,
        cycle_pos,
        0,
        &mut degrees,
        white_ms,
        black_ms,
        gen,
        out,
    );
}

fn fill_slots(
    slots: &[(usize, Color)],
    idx: usize,
    white: &Multiset,
    black: &Multiset,
    forests: &mut Vec<Vec<PlaneTree>>,
    gen: &mut TreeGen,
    emit: &mut dyn FnMut(&Vec<Vec<PlaneTree>>),
) {
    if idx == slots.len() {
        if white.is_empty() && black.is_empty() {
            emit(forests);
        }
        return;
    }
    let (pos, root_color) = slots[idx];
    for (tree, w_rem, b_rem) in gen.trees(root_color, white, black).iter() {
        forests[pos].push(tree.clone());
        fill_slots(slots, idx + 1, w_rem, b_rem, forests, gen, emit);
        forests[pos].pop();
    }
}

/// Memoized generation of bicoloured plane trees drawing their vertex
/// degrees from a budget pair. Each result carries the leftover budgets.
#[derive(Default)]
struct TreeGen {
    memo: BTreeMap<(Color, Vec<(u32, usize)>, Vec<(u32, usize)>), Rc<Vec<TreeOutcome>>>,
}

type TreeOutcome = (PlaneTree, Multiset, Multiset);

impl TreeGen {
    fn trees(
        &mut self,
        root_color: Color,
        white: &Multiset,
        black: &Multiset,
    ) -> Rc<Vec<TreeOutcome>> {
        let memo_key = (root_color, key(white), key(black));
        if let Some(cached) = self.memo.get(&memo_key) {
            return Rc::clone(cached);
        }
        let mut result = Vec::new();
        let root_pool = match root_color {
            Color::White => white,
            Color::Black => black,
        };
        // Root degree = 1 (edge to the host) + number of children.
        let root_choices: Vec<u32> = root_pool.keys().copied().collect();
        for r in root_choices {
            let (w2, b2) = match root_color {
                Color::White => (remove_one(white, r), black.clone()),
                Color::Black => (white.clone(), remove_one(black, r)),
            };
            self.children(
                (r - 1) as usize,
                root_color.opposite(),
                &w2,
                &b2,
                &mut |kids, w3, b3| {
                    result.push((PlaneTree::new(kids.to_vec()), w3.clone(), b3.clone()));
                },
            );
        }
        let rc = Rc::new(result);
        self.memo.insert(memo_key, Rc::clone(&rc));
        rc
    }

    fn children(
        &mut self,
        count: usize,
        color: Color,
        white: &Multiset,
        black: &Multiset,
        emit: &mut dyn FnMut(&[PlaneTree], &Multiset, &Multiset),
    ) {
        if count == 0 {
            emit(&[], white, black);
            return;
        }
        for (tree, w1, b1) in self.trees(color, white, black).iter() {
            self.children(count - 1, color, w1, b1, &mut |rest, w2, b2| {
                let mut kids = Vec::with_capacity(1 + rest.len());
                kids.push(tree.clone());
                kids.extend_from_slice(rest);
                emit(&kids, w2, b2);
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bwgraphs::signed_sums;

    #[test]
    fn mismatched_sums_error() {
        assert_eq!(enumerate(&[3], &[2]), Err(BwGraphError::MismatchedSums));
    }

    #[test]
    fn too_small_is_empty() {
        assert!(enumerate(&[1], &[1]).unwrap().is_empty());
    }

    #[test]
    fn vertex_count_filter() {
        // (2) and (1,1): three vertices but only two edges.
        assert!(enumerate(&[2], &[1, 1]).unwrap().is_empty());
    }

    #[test]
    fn minimal_type_two_two() {
        // One graph per colour orientation of the bare bigon, each of sign -1.
        let graphs = enumerate(&[2], &[2]).unwrap();
        assert_eq!(graphs.len(), 2);
        for g in &graphs {
            assert_eq!(g.sign().sign, -1);
            assert_eq!(g.real_sequences(), (vec![2], vec![2]));
        }
        assert_eq!(signed_sums(&[2], &[2]).unwrap(), (-1, -1));
    }

    #[test]
    fn worked_invariance_example() {
        // All graphs with white degrees (3,2,1,1) and black degrees (3,2,2):
        // two black-sided graphs with disorder data (1,1) and (2,4), six
        // white-sided ones with signs +1,+1,+1,+1,-1,-1; both sides sum to 2.
        let graphs = enumerate(&[3, 2, 1, 1], &[3, 2, 2]).unwrap();
        assert_eq!(graphs.len(), 8);

        let mut black_data: Vec<(usize, usize, i8)> = graphs
            .iter()
            .filter(|g| g.side() == Color::Black)
            .map(|g| {
                let s = g.sign();
                (s.lev, s.pol, s.sign)
            })
            .collect();
        black_data.sort_unstable();
        assert_eq!(black_data, vec![(1, 1, 1), (2, 4, 1)]);

        let mut white_signs: Vec<i8> = graphs
            .iter()
            .filter(|g| g.side() == Color::White)
            .map(|g| g.sign().sign)
            .collect();
        white_signs.sort_unstable();
        assert_eq!(white_signs, vec![-1, -1, 1, 1, 1, 1]);

        assert_eq!(signed_sums(&[3, 2, 1, 1], &[3, 2, 2]).unwrap(), (2, 2));
    }

    #[test]
    fn enumeration_is_sound_and_duplicate_free() {
        let cases: [(&[u32], &[u32]); 4] = [
            (&[3, 2, 1, 1], &[3, 2, 2]),
            (&[2, 2], &[3, 1]),
            (&[4, 1, 1], &[2, 2, 2]),
            (&[2, 1, 1], &[2, 2]),
        ];
        for (w, b) in cases {
            let graphs = enumerate(w, b).unwrap();
            let mut seen = alloc::collections::BTreeSet::new();
            for g in &graphs {
                let (gw, gb) = g.degree_partitions();
                let mut want_w = w.to_vec();
                want_w.sort_unstable_by(|a, b| b.cmp(a));
                let mut want_b = b.to_vec();
                want_b.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(gw, want_w);
                assert_eq!(gb, want_b);
                assert!(seen.insert(g.clone()), "duplicate encoding generated");
            }
        }
    }

    #[test]
    fn border_color_parity() {
        // d even: border vertices have opposite colours; d odd: the same.
        for (w, b) in [
            (&[2, 2][..], &[2, 1, 1][..]),
            (&[3, 1], &[2, 2]),
            (&[3, 2, 1, 1], &[3, 2, 2]),
        ] {
            let d: u32 = w.iter().sum();
            for g in enumerate(w, b).unwrap() {
                let same = g.color(0) == g.side();
                assert_eq!(same, d % 2 == 1);
            }
        }
    }
}
