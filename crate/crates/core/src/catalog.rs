//! Small named hypergraphs used by the tests, the examples and the CLI
//! verification battery.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::{EdgeSpec, Hypergraph};

fn build(vertices: &[&str], edges: &[(&str, &[&str])]) -> Hypergraph {
    Hypergraph::new(
        vertices.iter().map(|v| v.to_string()).collect(),
        edges.iter().map(|(id, vs)| EdgeSpec::new(*id, vs)).collect(),
    )
    .expect("catalog hypergraphs are valid")
}

/// Two parallel copies of the triple `{v1,v2,v3}`.
pub fn double_triple() -> Hypergraph {
    build(
        &["v1", "v2", "v3"],
        &[("e1", &["v1", "v2", "v3"]), ("e2", &["v1", "v2", "v3"])],
    )
}

/// One triple edge on three vertices: strength 1/2 while the matroid strength
/// is 1.
pub fn single_triple() -> Hypergraph {
    build(&["v1", "v2", "v3"], &[("e1", &["v1", "v2", "v3"])])
}

/// The triple `{v1,v2,v3}` plus the pair `{v3,v4}`.
pub fn triple_with_tail() -> Hypergraph {
    build(
        &["v1", "v2", "v3", "v4"],
        &[("e1", &["v1", "v2", "v3"]), ("e2", &["v3", "v4"])],
    )
}

pub fn triangle() -> Hypergraph {
    build(
        &["a", "b", "c"],
        &[("ab", &["a", "b"]), ("bc", &["b", "c"]), ("ca", &["c", "a"])],
    )
}

/// The path `a - b - c`.
pub fn path3() -> Hypergraph {
    build(&["a", "b", "c"], &[("ab", &["a", "b"]), ("bc", &["b", "c"])])
}

pub fn single_pair() -> Hypergraph {
    build(&["a", "b"], &[("ab", &["a", "b"])])
}

/// Triangle `abc` with the pendant edge `cd`: the densest part is the
/// triangle, the weakest cut is the pendant edge.
pub fn triangle_with_pendant() -> Hypergraph {
    build(
        &["a", "b", "c", "d"],
        &[
            ("ab", &["a", "b"]),
            ("bc", &["b", "c"]),
            ("ca", &["c", "a"]),
            ("cd", &["c", "d"]),
        ],
    )
}

/// Homogeneous block on `{a,b,c,d}` with strength and arboricity 5/3.
pub fn dense_block() -> Hypergraph {
    build(&["a", "b", "c", "d"], &block_edges(""))
}

fn block_edges(s: &str) -> Vec<(&'static str, &'static [&'static str])> {
    // Two copies are needed with distinct names, so they are spelled out.
    match s {
        "" => alloc::vec![
            ("abc", &["a", "b", "c"][..]),
            ("bcd", &["b", "c", "d"][..]),
            ("ad", &["a", "d"][..]),
            ("ab", &["a", "b"][..]),
            ("cd", &["c", "d"][..]),
        ],
        "1" => alloc::vec![
            ("abc1", &["a1", "b1", "c1"][..]),
            ("bcd1", &["b1", "c1", "d1"][..]),
            ("ad1", &["a1", "d1"][..]),
            ("ab1", &["a1", "b1"][..]),
            ("cd1", &["c1", "d1"][..]),
        ],
        _ => alloc::vec![
            ("abc2", &["a2", "b2", "c2"][..]),
            ("bcd2", &["b2", "c2", "d2"][..]),
            ("ad2", &["a2", "d2"][..]),
            ("ab2", &["a2", "b2"][..]),
            ("cd2", &["c2", "d2"][..]),
        ],
    }
}

/// Three density levels 3/2, 1 and 3/5 on twelve vertices.
///
/// Two copies of the dense block (density 3/5 level) each get a pendant
/// vertex `x` attached by a triple through `a` and `c` (level 1). The copies
/// are joined through the pair `p, q` by two triples (level 3/2). Removing
/// the top level leaves the two copies and the isolated `p` and `q`; each
/// copy then splits into its block and its pendant vertex.
pub fn three_level() -> Hypergraph {
    let mut edges = block_edges("1");
    edges.push(("acx1", &["a1", "c1", "x1"]));
    edges.extend(block_edges("2"));
    edges.push(("acx2", &["a2", "c2", "x2"]));
    edges.push(("apq", &["a1", "p", "q"]));
    edges.push(("pqa", &["p", "q", "a2"]));
    build(
        &[
            "a1", "b1", "c1", "d1", "x1", "a2", "b2", "c2", "d2", "x2", "p", "q",
        ],
        &edges,
    )
}

/// Every catalog entry with its name.
pub fn all() -> Vec<(&'static str, Hypergraph)> {
    alloc::vec![
        ("double_triple", double_triple()),
        ("single_triple", single_triple()),
        ("triple_with_tail", triple_with_tail()),
        ("triangle", triangle()),
        ("path3", path3()),
        ("single_pair", single_pair()),
        ("triangle_with_pendant", triangle_with_pendant()),
        ("dense_block", dense_block()),
        ("three_level", three_level()),
    ]
}
