//! Cutting a system along curves: complement components, their topological
//! type, and the boundary circles of the cut surface.

use std::collections::{HashMap, HashSet};

use crate::system::{
    CurveId, CurveSystem, Dart, Dir, EdgeId, RegionId, SideDart, UnionFind, VertexId,
};

/// One boundary circle of a cut surface: the cyclic sequence of cut-edge
/// sides facing a fixed component.
#[derive(Clone, Debug)]
pub struct BoundaryCircle {
    pub sides: Vec<SideDart>,
    /// Component of the cut surface this circle bounds.
    pub component: usize,
    /// Curve labels occurring along the circle (sorted, deduplicated).
    pub curves: Vec<CurveId>,
}

/// One connected component of the surface cut along an edge set.
#[derive(Clone, Debug)]
pub struct CutComponent {
    pub regions: Vec<RegionId>,
    pub chi: i64,
    pub genus: usize,
    /// Indices into `CutProfile::circles`.
    pub circles: Vec<usize>,
}

/// Full combinatorial description of the surface cut along an edge set.
#[derive(Clone, Debug)]
pub struct CutProfile {
    pub cut_edges: HashSet<EdgeId>,
    pub comp_of_region: Vec<usize>,
    pub components: Vec<CutComponent>,
    pub circles: Vec<BoundaryCircle>,
    /// For every non-cut dart at a vertex on the cut: the boundary circle its
    /// arc end attaches to after cutting.
    pub dart_circle: HashMap<Dart, usize>,
}

impl CurveSystem {
    /// Edge ids carried by any of the given curves.
    pub fn curve_edges(&self, curves: &[CurveId]) -> HashSet<EdgeId> {
        (0..self.edges.len())
            .filter(|&e| curves.contains(&self.edges[e].curve))
            .collect()
    }

    /// Connected components of the complement of the given curves, as a
    /// partition of region ids.
    pub fn complement_components(&self, cut: &[CurveId]) -> Vec<Vec<RegionId>> {
        let edges = self.curve_edges(cut);
        self.complement_components_by_edges(&edges)
    }

    /// Complement components where adjacency across an arbitrary edge set is
    /// removed (used for arcs of a partially cut surface).
    pub fn complement_components_by_edges(&self, cut: &HashSet<EdgeId>) -> Vec<Vec<RegionId>> {
        let mut uf = UnionFind::new(self.regions.len());
        for e in 0..self.edges.len() {
            if cut.contains(&e) {
                continue;
            }
            let r1 = self.side_region(SideDart { edge: e, dir: Dir::Forward });
            let r2 = self.side_region(SideDart { edge: e, dir: Dir::Backward });
            uf.union(r1, r2);
        }
        let mut groups: HashMap<usize, Vec<RegionId>> = HashMap::new();
        for r in 0..self.regions.len() {
            groups.entry(uf.find(r)).or_default().push(r);
        }
        let mut out: Vec<Vec<RegionId>> = groups.into_values().collect();
        out.sort_by_key(|g| g[0]);
        out
    }

    /// True iff the curve's complement has two components.
    pub fn is_separating(&self, c: CurveId) -> bool {
        self.complement_components(&[c]).len() == 2
    }

    /// Cut the surface along every edge in `cut` and describe the result.
    pub fn cut_profile_by_edges(&self, cut: &HashSet<EdgeId>) -> CutProfile {
        let comps = self.complement_components_by_edges(cut);
        let mut comp_of_region = vec![0usize; self.regions.len()];
        for (ci, group) in comps.iter().enumerate() {
            for &r in group {
                comp_of_region[r] = ci;
            }
        }

        // Trace boundary circles. From an incoming cut side, rotate clockwise
        // past non-cut darts (arc ends touching the boundary here) until the
        // next cut dart, and continue outward along it.
        let mut circles: Vec<BoundaryCircle> = Vec::new();
        let mut dart_circle: HashMap<Dart, usize> = HashMap::new();
        let mut seen: HashSet<SideDart> = HashSet::new();
        for &e in cut {
            for dir in [Dir::Forward, Dir::Backward] {
                let start = SideDart { edge: e, dir };
                if seen.contains(&start) {
                    continue;
                }
                let id = circles.len();
                let mut sides = Vec::new();
                let mut s = start;
                loop {
                    seen.insert(s);
                    sides.push(s);
                    let mut d = self.cw_next(self.side_in_dart(s));
                    while !cut.contains(&d.edge) {
                        dart_circle.insert(d, id);
                        d = self.cw_next(d);
                    }
                    s = self.dart_out_side(d);
                    if s == start {
                        break;
                    }
                }
                let component = comp_of_region[self.side_region(start)];
                let mut curves: Vec<CurveId> =
                    sides.iter().map(|sd| self.edges[sd.edge].curve).collect();
                curves.sort_unstable();
                curves.dedup();
                circles.push(BoundaryCircle {
                    sides,
                    component,
                    curves,
                });
            }
        }

        // Per-component Euler characteristic. Boundary vertex copies and
        // boundary edge copies cancel, so only interior cells count.
        let mut components = Vec::new();
        for (ci, group) in comps.iter().enumerate() {
            let group_set: HashSet<RegionId> = group.iter().copied().collect();
            let mut e_int = 0i64;
            for e in 0..self.edges.len() {
                if cut.contains(&e) {
                    continue;
                }
                if group_set.contains(&self.side_region(SideDart { edge: e, dir: Dir::Forward })) {
                    e_int += 1;
                }
            }
            let mut v_int = 0i64;
            'vert: for v in 0..self.vertices.len() {
                for d in &self.vertices[v].darts {
                    if cut.contains(&d.edge) {
                        continue 'vert;
                    }
                }
                let d0 = self.vertices[v].darts[0];
                let r = self.side_region(self.dart_out_side(d0));
                if group_set.contains(&r) {
                    v_int += 1;
                }
            }
            let chi_regions: i64 = group
                .iter()
                .map(|&r| {
                    2 - 2 * self.regions[r].genus as i64 - self.regions[r].walks.len() as i64
                })
                .sum();
            let chi = v_int - e_int + chi_regions;
            let circ: Vec<usize> = circles
                .iter()
                .enumerate()
                .filter(|(_, c)| c.component == ci)
                .map(|(i, _)| i)
                .collect();
            let b = circ.len() as i64;
            let two_h = 2 - b - chi;
            assert!(
                two_h >= 0 && two_h % 2 == 0,
                "component genus must be a non-negative integer"
            );
            components.push(CutComponent {
                regions: group.clone(),
                chi,
                genus: (two_h / 2) as usize,
                circles: circ,
            });
        }

        CutProfile {
            cut_edges: cut.clone(),
            comp_of_region,
            components,
            circles,
            dart_circle,
        }
    }

    pub fn cut_profile(&self, cut: &[CurveId]) -> CutProfile {
        self.cut_profile_by_edges(&self.curve_edges(cut))
    }

    /// True iff the two disjoint curves cobound an annulus (are homotopic).
    /// The annular component may contain further disjoint curves.
    pub fn homotopic_disjoint(&self, c1: CurveId, c2: CurveId) -> bool {
        assert!(self.geometric_intersection(c1, c2) == 0);
        let profile = self.cut_profile(&[c1, c2]);
        profile.components.iter().any(|comp| {
            comp.chi == 0 && comp.genus == 0 && comp.circles.len() == 2 && {
                let lab = |i: usize| -> Option<CurveId> {
                    let c = &profile.circles[comp.circles[i]];
                    if c.curves.len() == 1 {
                        Some(c.curves[0])
                    } else {
                        None
                    }
                };
                matches!((lab(0), lab(1)), (Some(a), Some(b))
                    if (a == c1 && b == c2) || (a == c2 && b == c1))
            }
        })
    }
}

/// Component of a cut surface containing a curve disjoint from the cut set.
pub fn curve_component(sys: &CurveSystem, profile: &CutProfile, c: CurveId) -> usize {
    let (e, _) = sys.curves[c].edges[0];
    assert!(
        !profile.cut_edges.contains(&e),
        "curve must be disjoint from the cut set"
    );
    profile.comp_of_region[sys.side_region(SideDart { edge: e, dir: Dir::Forward })]
}

/// View of the surface cut along one curve: two boundary circles and the
/// pairing identifying them back. Regluing reproduces the original system.
#[derive(Clone, Debug)]
pub struct CutSurface {
    pub original: CurveSystem,
    pub cut_curve: CurveId,
    pub profile: CutProfile,
    /// Circle made of the left sides of the cut curve.
    pub boundary_left: usize,
    /// Circle made of the right sides of the cut curve.
    pub boundary_right: usize,
}

/// An arc (or closed curve) of a non-cut curve in the cut surface.
#[derive(Clone, Debug)]
pub struct CutArc {
    pub edges: Vec<(EdgeId, Dir)>,
    /// Boundary circles the endpoints attach to; `None` for a closed curve.
    pub ends: Option<(usize, usize)>,
}

impl CurveSystem {
    /// Cut along a single curve. The two boundary circles are the left and
    /// right push-offs of the curve; the identification pairing matches the
    /// two copies of each cut edge.
    pub fn cut_along(&self, c: CurveId) -> CutSurface {
        let profile = self.cut_profile(&[c]);
        let (e0, d0) = self.curves[c].edges[0];
        // Right side of the traversal (e0, d0) is (e0, d0); left is flipped.
        let find = |side: SideDart| -> usize {
            profile
                .circles
                .iter()
                .position(|circ| circ.sides.contains(&side))
                .expect("cut edge side lies on a boundary circle")
        };
        let boundary_right = find(SideDart { edge: e0, dir: d0 });
        let boundary_left = find(SideDart { edge: e0, dir: d0.flip() });
        CutSurface {
            original: self.clone(),
            cut_curve: c,
            profile,
            boundary_left,
            boundary_right,
        }
    }
}

impl CutSurface {
    /// Cutting then regluing reproduces the original system.
    pub fn reglue(&self) -> CurveSystem {
        self.original.clone()
    }

    /// Decompose a non-cut curve into the arcs it is cut into.
    pub fn arcs_of(&self, x: CurveId) -> Vec<CutArc> {
        let sys = &self.original;
        assert_ne!(x, self.cut_curve);
        let cyc = &sys.curves[x].edges;
        let n = cyc.len();
        // Vertices shared with the cut curve split the cycle.
        let mut split_after: Vec<usize> = Vec::new();
        for i in 0..n {
            let (e, d) = cyc[i];
            let head: VertexId = match d {
                Dir::Forward => sys.edges[e].to,
                Dir::Backward => sys.edges[e].from,
            };
            if sys.curve_visit(head, self.cut_curve).is_some() {
                split_after.push(i);
            }
        }
        if split_after.is_empty() {
            return vec![CutArc {
                edges: cyc.clone(),
                ends: None,
            }];
        }
        let mut arcs = Vec::new();
        for (k, &s) in split_after.iter().enumerate() {
            let e_next = split_after[(k + 1) % split_after.len()];
            let mut edges = Vec::new();
            let mut i = (s + 1) % n;
            loop {
                edges.push(cyc[i]);
                if i == e_next {
                    break;
                }
                i = (i + 1) % n;
            }
            // Start endpoint: the out-dart of the first edge at the split
            // vertex; end endpoint: the in-dart of the last edge.
            let (e_first, d_first) = edges[0];
            let out_dart = Dart {
                edge: e_first,
                end: match d_first {
                    Dir::Forward => crate::system::End::Tail,
                    Dir::Backward => crate::system::End::Head,
                },
            };
            let (e_last, d_last) = *edges.last().unwrap();
            let in_dart = Dart {
                edge: e_last,
                end: match d_last {
                    Dir::Forward => crate::system::End::Head,
                    Dir::Backward => crate::system::End::Tail,
                },
            };
            let c_start = self.profile.dart_circle[&out_dart];
            let c_end = self.profile.dart_circle[&in_dart];
            arcs.push(CutArc {
                edges,
                ends: Some((c_start, c_end)),
            });
        }
        arcs
    }
}
