//! Small named k-graphs used throughout the tests, benches and docs.
//!
//! - `T1`: one vertex, one loop of each color. `C*(T1)` is the rotation-free
//!   2-torus algebra.
//! - `FLIP2`: one vertex, two color-1 loops exchanged by the single color-2 loop.
//! - `TORS`: two vertices with `M1 = 3I` and `M2 = [[1,2],[2,1]]`; its K-groups
//!   carry 2-torsion.
//! - `T1_T1`: two disjoint copies of `T1`, so not strongly connected.

use crate::format::{parse_kgraph, parse_presentation};
use crate::graph::{KGraph, Presentation};

pub const T1: &str = include_str!("../fixtures/t1.kg");
pub const FLIP2: &str = include_str!("../fixtures/flip2.kg");
pub const TORS: &str = include_str!("../fixtures/tors.kg");
pub const T1_T1: &str = include_str!("../fixtures/t1_t1.kg");

/// `T1_T1` in canonical serialized form.
pub const T1_T1_CANONICAL: &str = "kgraph 1\nk 2\nvertex v\nvertex w\n\
edge b 1 v v\nedge b' 1 w w\nedge r 2 v v\nedge r' 2 w w\n\
square b r r b\nsquare b' r' r' b'\n";

fn load(text: &str) -> KGraph {
    parse_kgraph(text).expect("bundled fixture is valid")
}

pub fn t1() -> KGraph {
    load(T1)
}

pub fn flip2() -> KGraph {
    load(FLIP2)
}

pub fn tors() -> KGraph {
    load(TORS)
}

pub fn t1_t1() -> KGraph {
    load(T1_T1)
}

pub fn t1_presentation() -> Presentation {
    parse_presentation(T1).expect("bundled fixture parses")
}

pub fn flip2_presentation() -> Presentation {
    parse_presentation(FLIP2).expect("bundled fixture parses")
}

/// A one-vertex 3-graph with three color-1 loops `a1..a3` and single loops `b`
/// (color 2) and `c` (color 3). Colors 2 and 3 act on the `a` loops by
/// permutations; with `broken` those permutations do not commute and the cube
/// condition fails.
pub fn cube_presentation(broken: bool) -> Presentation {
    let mut p = Presentation::new(3);
    p.vertex("v");
    for a in ["a1", "a2", "a3"] {
        p.edge(a, 1, "v", "v");
    }
    p.edge("b", 2, "v", "v").edge("c", 3, "v", "v");
    let sigma = ["a2", "a1", "a3"];
    let tau = if broken {
        ["a1", "a3", "a2"]
    } else {
        ["a2", "a1", "a3"]
    };
    for (i, a) in ["a1", "a2", "a3"].into_iter().enumerate() {
        p.square(a, "b", "b", sigma[i]);
        p.square(a, "c", "c", tau[i]);
    }
    p.square("b", "c", "c", "b");
    p
}

/// Disjoint union, with every id in the second graph suffixed by `'`.
pub fn disjoint_union(g: &KGraph, h: &KGraph) -> KGraph {
    assert_eq!(g.rank(), h.rank(), "disjoint union of different ranks");
    let mut p = g.presentation();
    let q = h.presentation();
    let tag = |s: &str| format!("{s}'");
    for v in &q.vertices {
        p.vertex(tag(&v.id));
    }
    for e in &q.edges {
        p.edge(tag(&e.id), e.color, tag(&e.source), tag(&e.range));
    }
    for s in &q.squares {
        let [a, b, c, d] = s.edges.each_ref().map(|x| tag(x));
        p.square(&a, &b, &c, &d);
    }
    p.build().expect("disjoint union of valid graphs is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::serialize_kgraph;

    #[test]
    fn fixtures_load() {
        for g in [t1(), flip2(), tors(), t1_t1()] {
            assert_eq!(g.rank(), 2);
        }
        assert_eq!(tors().vertex_count(), 2);
        assert_eq!(tors().edge_count(), 12);
        assert_eq!(tors().squares().len(), 18);
    }

    #[test]
    fn union_of_t1_matches_fixture() {
        assert_eq!(
            serialize_kgraph(&disjoint_union(&t1(), &t1())),
            T1_T1_CANONICAL.replace('w', "v'")
        );
        assert_eq!(serialize_kgraph(&t1_t1()), T1_T1_CANONICAL);
    }
}
