//! Real black-and-white simple graphs: canonical encodings, exhaustive
//! enumeration, signs, and the flip / cyclic-shift / rotation operations.
//!
//! A *real bw-graph* is a connected plane graph, invariant under complex
//! conjugation, with vertices coloured black and white in alternation and
//! exactly one cycle, of edge length 2 (a bigon). Conjugation invariance
//! forces the full structure to be determined by
//!
//! - the left-to-right sequence of real vertices (colours alternate, so the
//!   first colour suffices),
//! - one plane tree per conjugate pair of trees growing at each real vertex
//!   (the upper member, trees listed left to right), and
//! - the position of the bigon: its two conjugate edges join a consecutive
//!   pair of real vertices, and the region it bounds is empty.
//!
//! That encoding is a complete isomorphism invariant, so enumeration is
//! generation of all valid encodings and equality is structural equality.
//!
//! The *sign* of a graph is `(-1)^(lev + pol)` where `lev` counts disorders
//! in the two real degree sequences and `pol` counts real vertices on or
//! left of the left cycle vertex with degree larger than one.

mod enumerate;
mod symmetry;

pub use enumerate::enumerate;
pub use symmetry::{
    first_nonsymmetric_pair, flip, has_rotation_flip_shape, is_nearly_symmetric, is_reduced,
    rotate, NearSymmetry,
};

use alloc::vec::Vec;

use core::fmt;

use crate::alternations::disorders;

/// Vertex colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// The upper member of a conjugate pair of plane trees. The root is the
/// vertex adjacent to the hosting real vertex; its colour is always the
/// opposite of the host's and is therefore not stored. Children are kept
/// in rotational order, which a mirror reflection reverses.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree::default()
    }

    pub fn new(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    /// Vertex count of this single tree.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::size).sum::<usize>()
    }

    /// Mirror image: all rotational orders reversed.
    pub fn mirrored(&self) -> PlaneTree {
        PlaneTree {
            children: self
                .children
                .iter()
                .rev()
                .map(PlaneTree::mirrored)
                .collect(),
        }
    }

    /// Push the degree of every node onto the bucket of its colour, given
    /// the colour of the root.
    fn collect_degrees(&self, root_color: Color, white: &mut Vec<u32>, black: &mut Vec<u32>) {
        let deg = 1 + self.children.len() as u32;
        match root_color {
            Color::White => white.push(deg),
            Color::Black => black.push(deg),
        }
        for child in &self.children {
            child.collect_degrees(root_color.opposite(), white, black);
        }
    }
}

/// Canonical encoding of a real bw-graph. `cycle_pos` is 1-based: the two
/// conjugate cycle edges join real vertices `cycle_pos` and `cycle_pos + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RealBwGraph {
    first_color: Color,
    forests: Vec<Vec<PlaneTree>>,
    cycle_pos: usize,
}

/// Level and pole disorders with the resulting sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignBreakdown {
    pub lev: usize,
    pub pol: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BwGraphError {
    MismatchedSums,
    EmptySpine,
    BadCyclePos { cycle_pos: usize, n: usize },
    FlipTypeMismatch,
    NotNearlySymmetric,
}

impl fmt::Display for BwGraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BwGraphError::MismatchedSums => {
                write!(f, "white and black partitions have unequal sums")
            }
            BwGraphError::EmptySpine => {
                write!(f, "a real bw-graph needs at least two real vertices")
            }
            BwGraphError::BadCyclePos { cycle_pos, n } => {
                write!(f, "cycle position {cycle_pos} out of range 1..{n}")
            }
            BwGraphError::FlipTypeMismatch => {
                write!(f, "flip requires two distinct vertices of the same colour and parity with degree > 1")
            }
            BwGraphError::NotNearlySymmetric => {
                write!(f, "rotation requires a nearly symmetric graph")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for BwGraphError {}

impl RealBwGraph {
    pub fn new(
        first_color: Color,
        forests: Vec<Vec<PlaneTree>>,
        cycle_pos: usize,
    ) -> Result<Self, BwGraphError> {
        let n = forests.len();
        if n < 2 {
            return Err(BwGraphError::EmptySpine);
        }
        if cycle_pos == 0 || cycle_pos >= n {
            return Err(BwGraphError::BadCyclePos { cycle_pos, n });
        }
        Ok(RealBwGraph {
            first_color,
            forests,
            cycle_pos,
        })
    }

    /// Number of real vertices.
    pub fn real_vertex_count(&self) -> usize {
        self.forests.len()
    }

    pub fn first_color(&self) -> Color {
        self.first_color
    }

    /// 1-based position of the left cycle vertex.
    pub fn cycle_pos(&self) -> usize {
        self.cycle_pos
    }

    /// Forest of the real vertex at 0-based index `i` (all conjugate pairs,
    /// left to right; the fixed pair of an odd border vertex is the last).
    pub fn forest(&self, i: usize) -> &[PlaneTree] {
        &self.forests[i]
    }

    /// Colour of the real vertex at 0-based index `i`.
    pub fn color(&self, i: usize) -> Color {
        if i % 2 == 0 {
            self.first_color
        } else {
            self.first_color.opposite()
        }
    }

    /// Is `i` (0-based) one of the two cycle vertices?
    pub fn on_cycle(&self, i: usize) -> bool {
        i + 1 == self.cycle_pos || i == self.cycle_pos
    }

    pub fn is_border(&self, i: usize) -> bool {
        i == 0 || i + 1 == self.real_vertex_count()
    }

    /// Number of real edges at vertex `i`: one to each neighbour except
    /// across the cycle gap and at the borders.
    pub fn real_neighbors(&self, i: usize) -> u32 {
        let n = self.real_vertex_count();
        let mut count = 0;
        if i > 0 && i != self.cycle_pos {
            count += 1;
        }
        if i + 1 < n && i + 1 != self.cycle_pos {
            count += 1;
        }
        count
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.real_neighbors(i)
            + 2 * self.forests[i].len() as u32
            + if self.on_cycle(i) { 2 } else { 0 }
    }

    pub(crate) fn is_odd_border(&self, i: usize) -> bool {
        self.is_border(i) && self.degree(i) % 2 == 1
    }

    /// Degree sequences of the real white and real black vertices, left to
    /// right.
    pub fn real_sequences(&self) -> (Vec<u32>, Vec<u32>) {
        let mut white = Vec::new();
        let mut black = Vec::new();
        for i in 0..self.real_vertex_count() {
            match self.color(i) {
                Color::White => white.push(self.degree(i)),
                Color::Black => black.push(self.degree(i)),
            }
        }
        (white, black)
    }

    /// Full degree multisets (weakly decreasing), each conjugate tree pair
    /// contributing its vertex degrees twice.
    pub fn degree_partitions(&self) -> (Vec<u32>, Vec<u32>) {
        let mut white = Vec::new();
        let mut black = Vec::new();
        for i in 0..self.real_vertex_count() {
            match self.color(i) {
                Color::White => white.push(self.degree(i)),
                Color::Black => black.push(self.degree(i)),
            }
            let root_color = self.color(i).opposite();
            for tree in &self.forests[i] {
                // Twice: once for the upper tree, once for its mirror image.
                for _ in 0..2 {
                    tree.collect_degrees(root_color, &mut white, &mut black);
                }
            }
        }
        white.sort_unstable_by(|a, b| b.cmp(a));
        black.sort_unstable_by(|a, b| b.cmp(a));
        (white, black)
    }

    /// A graph is white-sided when its rightmost border vertex is white.
    pub fn side(&self) -> Color {
        self.color(self.real_vertex_count() - 1)
    }

    /// The cycle is short when it contains a border vertex.
    pub fn is_short(&self) -> bool {
        self.cycle_pos == 1 || self.cycle_pos + 1 == self.real_vertex_count()
    }

    /// Level disorders, pole disorders, and `(-1)^(lev + pol)`.
    pub fn sign(&self) -> SignBreakdown {
        let (white, black) = self.real_sequences();
        let lev = disorders(&white) + disorders(&black);
        let pol = (0..self.cycle_pos).filter(|&i| self.degree(i) > 1).count();
        let sign = if (lev + pol) % 2 == 0 { 1 } else { -1 };
        SignBreakdown { lev, pol, sign }
    }
}

/// White-sided and black-sided signed sums over the full enumeration.
pub fn signed_sums(white: &[u32], black: &[u32]) -> Result<(i64, i64), BwGraphError> {
    let graphs = enumerate(white, black)?;
    let mut s_white = 0i64;
    let mut s_black = 0i64;
    for g in &graphs {
        let sign = g.sign().sign as i64;
        match g.side() {
            Color::White => s_white += sign,
            Color::Black => s_black += sign,
        }
    }
    Ok((s_white, s_black))
}
