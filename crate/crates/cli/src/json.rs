//! Canonical JSON forms of the core data. `serde_json`'s default map keeps
//! keys sorted, so emitted documents are deterministic and survive a
//! parse / re-serialise round trip byte for byte.

use serde_json::{json, Value};

use ratsign_core::algebra::{rational_to_string, GElement, Rational};
use ratsign_core::bwgraphs::{Color, PlaneTree, RealBwGraph};
use ratsign_core::profiles::Parity;

pub fn rational(x: &Rational) -> Value {
    Value::String(rational_to_string(x))
}

pub fn parity(p: Parity) -> Value {
    Value::String(
        match p {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
        .into(),
    )
}

/// `{"f": [[i, j, "p/q"], ...], "g": [...]}`, terms sorted by bidegree.
pub fn gelement(a: &GElement) -> Value {
    let (f, g) = a.to_triples();
    let dump = |triples: Vec<(u32, u32, String)>| {
        Value::Array(
            triples
                .into_iter()
                .map(|(i, j, c)| json!([i, j, c]))
                .collect(),
        )
    };
    json!({ "f": dump(f), "g": dump(g) })
}

fn color(c: Color) -> Value {
    Value::String(
        match c {
            Color::White => "white",
            Color::Black => "black",
        }
        .into(),
    )
}

fn tree(t: &PlaneTree) -> Value {
    Value::Array(t.children.iter().map(tree).collect())
}

/// Full graph encoding plus derived data: sequences, disorders, sign.
pub fn graph(g: &RealBwGraph) -> Value {
    let (sigma_w, sigma_b) = g.real_sequences();
    let sign = g.sign();
    let forests: Vec<Value> = (0..g.real_vertex_count())
        .map(|i| Value::Array(g.forest(i).iter().map(tree).collect()))
        .collect();
    json!({
        "first_color": color(g.first_color()),
        "cycle_pos": g.cycle_pos(),
        "forests": forests,
        "sigma_w": sigma_w,
        "sigma_b": sigma_b,
        "lev": sign.lev,
        "pol": sign.pol,
        "sign": sign.sign,
        "side": color(g.side()),
    })
}
