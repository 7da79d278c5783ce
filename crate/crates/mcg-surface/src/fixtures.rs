//! Small hand-built systems shared by tests and downstream crates.

use crate::system::{
    Curve, CurveSystem, Dart, Dir, Edge, End, SideDart, SystemBuilder, Vertex,
};

fn loop_vertex(v: usize, e: usize) -> Vertex {
    Vertex {
        name: format!("v{v}"),
        darts: vec![
            Dart { edge: e, end: End::Tail },
            Dart { edge: e, end: End::Head },
        ],
    }
}

fn loop_edge(name: &str, curve: usize, v: usize) -> Edge {
    Edge {
        name: name.into(),
        curve,
        from: v,
        to: v,
    }
}

fn loop_curve(name: &str, e: usize) -> Curve {
    Curve {
        name: name.into(),
        edges: vec![(e, Dir::Forward)],
    }
}

fn side(e: usize, dir: Dir) -> SideDart {
    SideDart { edge: e, dir }
}

/// One nonseparating curve on the torus: a marker vertex, a loop edge and a
/// single annular complementary region.
pub fn torus_one_curve() -> CurveSystem {
    SystemBuilder {
        vertices: vec![loop_vertex(0, 0)],
        edges: vec![loop_edge("e0", 0, 0)],
        curves: vec![loop_curve("c", 0)],
        regions: vec![(
            "R0".into(),
            0,
            vec![side(0, Dir::Forward), side(0, Dir::Backward)],
        )],
    }
    .build()
    .expect("valid torus system")
}

/// Standard square torus: two curves crossing once.
pub fn torus_two_curves() -> CurveSystem {
    SystemBuilder {
        vertices: vec![Vertex {
            name: "v0".into(),
            darts: vec![
                Dart { edge: 0, end: End::Tail },
                Dart { edge: 1, end: End::Tail },
                Dart { edge: 0, end: End::Head },
                Dart { edge: 1, end: End::Head },
            ],
        }],
        edges: vec![loop_edge("a", 0, 0), loop_edge("b", 1, 0)],
        curves: vec![loop_curve("x", 0), loop_curve("y", 1)],
        regions: vec![("R0".into(), 0, vec![side(0, Dir::Forward)])],
    }
    .build()
    .expect("valid")
}

/// A separating curve on the genus-2 surface: each side is a one-holed torus.
pub fn genus_two_separating() -> CurveSystem {
    SystemBuilder {
        vertices: vec![loop_vertex(0, 0)],
        edges: vec![loop_edge("e0", 0, 0)],
        curves: vec![loop_curve("c", 0)],
        regions: vec![
            ("L".into(), 1, vec![side(0, Dir::Forward)]),
            ("R".into(), 1, vec![side(0, Dir::Backward)]),
        ],
    }
    .build()
    .expect("valid")
}

/// A bounding pair on the genus-3 surface: two disjoint non-homotopic
/// nonseparating curves whose union separates into two genus-1 pieces.
/// (In genus 2 every such pair would cobound an annulus, hence be
/// homotopic, so genus 3 is the smallest honest example.)
pub fn genus_three_bounding_pair() -> CurveSystem {
    SystemBuilder {
        vertices: vec![loop_vertex(0, 0), loop_vertex(1, 1)],
        edges: vec![loop_edge("e0", 0, 0), loop_edge("e1", 1, 1)],
        curves: vec![loop_curve("c0", 0), loop_curve("c1", 1)],
        regions: vec![
            (
                "A".into(),
                1,
                vec![side(0, Dir::Forward), side(1, Dir::Forward)],
            ),
            (
                "B".into(),
                1,
                vec![side(0, Dir::Backward), side(1, Dir::Backward)],
            ),
        ],
    }
    .build()
    .expect("valid")
}

/// Two curves on the torus crossing twice with algebraic intersection 2
/// (slopes (1,0) and (1,2)); the complement is two square disks.
pub fn torus_type_iv_pair() -> CurveSystem {
    let g0 = Dart { edge: 0, end: End::Tail };
    let g0h = Dart { edge: 0, end: End::Head };
    let g1 = Dart { edge: 1, end: End::Tail };
    let g1h = Dart { edge: 1, end: End::Head };
    let d0 = Dart { edge: 2, end: End::Tail };
    let d0h = Dart { edge: 2, end: End::Head };
    let d1 = Dart { edge: 3, end: End::Tail };
    let d1h = Dart { edge: 3, end: End::Head };
    SystemBuilder::with_disk_regions(
        vec![
            Vertex {
                name: "u".into(),
                darts: vec![g0, d0, g1h, d1h],
            },
            Vertex {
                name: "w".into(),
                darts: vec![g0h, d0h, g1, d1],
            },
        ],
        vec![
            Edge { name: "g0".into(), curve: 0, from: 0, to: 1 },
            Edge { name: "g1".into(), curve: 0, from: 1, to: 0 },
            Edge { name: "d0".into(), curve: 1, from: 0, to: 1 },
            Edge { name: "d1".into(), curve: 1, from: 1, to: 0 },
        ],
        vec![
            Curve {
                name: "g".into(),
                edges: vec![(0, Dir::Forward), (1, Dir::Forward)],
            },
            Curve {
                name: "d".into(),
                edges: vec![(2, Dir::Forward), (3, Dir::Forward)],
            },
        ],
    )
    .expect("valid")
}

/// Two disjoint homotopic curves on the torus, cobounding two annuli.
pub fn torus_parallel_pair() -> CurveSystem {
    SystemBuilder {
        vertices: vec![loop_vertex(0, 0), loop_vertex(1, 1)],
        edges: vec![loop_edge("e0", 0, 0), loop_edge("e1", 1, 1)],
        curves: vec![loop_curve("c0", 0), loop_curve("c1", 1)],
        regions: vec![
            (
                "A".into(),
                0,
                vec![side(0, Dir::Forward), side(1, Dir::Backward)],
            ),
            (
                "B".into(),
                0,
                vec![side(1, Dir::Forward), side(0, Dir::Backward)],
            ),
        ],
    }
    .build()
    .expect("valid")
}
