//! Core data types, construction and invariant validation.

use std::collections::HashMap;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type CurveId = usize;
pub type RegionId = usize;

/// Which end of an edge a dart (half-edge) sits at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Tail,
    Head,
}

/// Traversal direction of an edge. `Forward` runs from tail to head.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Forward,
    Backward,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Forward => Dir::Backward,
            Dir::Backward => Dir::Forward,
        }
    }
}

/// A dart: one of the two half-edges of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: EdgeId,
    pub end: End,
}

/// A directed edge-side: edge `edge` traversed in direction `dir`, with the
/// bounded region lying on the right of the traversal. `(e, Forward)` is the
/// right side of the oriented edge, `(e, Backward)` its left side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SideDart {
    pub edge: EdgeId,
    pub dir: Dir,
}

#[derive(Clone, Debug)]
pub struct Vertex {
    pub name: String,
    /// Incident darts in counterclockwise cyclic order. Length 2 or 4.
    pub darts: Vec<Dart>,
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub name: String,
    pub curve: CurveId,
    pub from: VertexId,
    pub to: VertexId,
}

#[derive(Clone, Debug)]
pub struct Curve {
    pub name: String,
    /// Cyclic oriented edge sequence; each entry traverses its edge in the
    /// given direction, consecutive entries share the intermediate vertex.
    pub edges: Vec<(EdgeId, Dir)>,
}

#[derive(Clone, Debug)]
pub struct Region {
    pub name: String,
    pub genus: usize,
    /// Indices into the computed walk table.
    pub walks: Vec<usize>,
}

/// One boundary walk: the cyclic side-dart sequence with the region on the
/// right of each traversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk(pub Vec<SideDart>);

#[derive(Error, Debug)]
pub enum SystemError {
    #[error("vertex {0} has degree {1}, expected 2 or 4")]
    BadDegree(String, usize),
    #[error("dart of edge {0} (end {1:?}) missing or duplicated in vertex dart lists")]
    BadDartIncidence(String, End),
    #[error("transversality violated at vertex {0}")]
    Transversality(String),
    #[error("curve {0} does not form a single closed cycle over its labelled edges")]
    BadCurveCycle(String),
    #[error("curve {0} has no edges")]
    EmptyCurve(String),
    #[error("region walk anchor {0:?} does not resolve to a boundary walk")]
    BadWalkAnchor(SideDart),
    #[error("boundary walk starting at {0:?} claimed {1} times, expected exactly once")]
    WalkClaim(SideDart, usize),
    #[error("Euler characteristic {0} does not give an integer ambient genus >= 0")]
    BadEuler(i64),
    #[error("surface is not connected")]
    Disconnected,
    #[error("edge {0} endpoint vertex out of range")]
    BadEndpoint(String),
    #[error("edge {0} has curve label out of range")]
    BadCurveLabel(String),
    #[error("{0}")]
    Other(String),
}

/// Raw description of a system prior to validation.
#[derive(Clone, Debug, Default)]
pub struct SystemBuilder {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub curves: Vec<Curve>,
    /// Each region: (name, genus, anchor side-darts, one per boundary walk).
    pub regions: Vec<(String, usize, Vec<SideDart>)>,
}

/// A validated configuration of simple closed curves on a closed orientable
/// surface.
#[derive(Clone, Debug)]
pub struct CurveSystem {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub curves: Vec<Curve>,
    pub regions: Vec<Region>,
    /// All boundary walks of the map, computed from the vertex rotations.
    pub walks: Vec<Walk>,
    /// Region owning each walk.
    pub walk_region: Vec<RegionId>,
    /// Walk index and position for every side-dart.
    side_index: HashMap<SideDart, (usize, usize)>,
    /// (vertex, curve) -> (in dart, out dart) for every curve visit.
    visit: HashMap<(VertexId, CurveId), (Dart, Dart)>,
    genus: usize,
}

impl CurveSystem {
    pub fn ambient_genus(&self) -> usize {
        self.genus
    }

    /// The vertex a dart is attached to.
    pub fn dart_vertex(&self, d: Dart) -> VertexId {
        let e = &self.edges[d.edge];
        match d.end {
            End::Tail => e.from,
            End::Head => e.to,
        }
    }

    /// Position of a dart in its vertex's counterclockwise list.
    pub fn dart_pos(&self, d: Dart) -> usize {
        let v = self.dart_vertex(d);
        self.vertices[v]
            .darts
            .iter()
            .position(|&x| x == d)
            .expect("dart incident to its vertex")
    }

    /// Counterclockwise successor of a dart around its vertex.
    pub fn ccw_next(&self, d: Dart) -> Dart {
        let v = self.dart_vertex(d);
        let list = &self.vertices[v].darts;
        let i = self.dart_pos(d);
        list[(i + 1) % list.len()]
    }

    /// Clockwise successor (counterclockwise predecessor) of a dart.
    pub fn cw_next(&self, d: Dart) -> Dart {
        let v = self.dart_vertex(d);
        let list = &self.vertices[v].darts;
        let i = self.dart_pos(d);
        list[(i + list.len() - 1) % list.len()]
    }

    /// Terminal vertex of a side-dart traversal.
    pub fn side_head(&self, s: SideDart) -> VertexId {
        let e = &self.edges[s.edge];
        match s.dir {
            Dir::Forward => e.to,
            Dir::Backward => e.from,
        }
    }

    /// The dart through which a side-dart traversal arrives.
    pub fn side_in_dart(&self, s: SideDart) -> Dart {
        Dart {
            edge: s.edge,
            end: match s.dir {
                Dir::Forward => End::Head,
                Dir::Backward => End::Tail,
            },
        }
    }

    /// Outward traversal starting at a dart.
    pub fn dart_out_side(&self, d: Dart) -> SideDart {
        SideDart {
            edge: d.edge,
            dir: match d.end {
                End::Tail => Dir::Forward,
                End::Head => Dir::Backward,
            },
        }
    }

    /// Next side-dart of the boundary walk keeping the region on the right.
    pub fn walk_next(&self, s: SideDart) -> SideDart {
        let d_in = self.side_in_dart(s);
        self.dart_out_side(self.cw_next(d_in))
    }

    /// The walk containing a side-dart and the side's position in it.
    pub fn side_walk(&self, s: SideDart) -> (usize, usize) {
        self.side_index[&s]
    }

    /// Region on the right of a side-dart traversal.
    pub fn side_region(&self, s: SideDart) -> RegionId {
        self.walk_region[self.side_index[&s].0]
    }

    /// In/out darts of a curve's pass through a vertex, if it passes there.
    pub fn curve_visit(&self, v: VertexId, c: CurveId) -> Option<(Dart, Dart)> {
        self.visit.get(&(v, c)).copied()
    }

    /// Curve labels present at a vertex.
    pub fn vertex_curves(&self, v: VertexId) -> Vec<CurveId> {
        let mut cs: Vec<CurveId> = self.vertices[v]
            .darts
            .iter()
            .map(|d| self.edges[d.edge].curve)
            .collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    pub fn curve_index(&self, name: &str) -> Option<CurveId> {
        self.curves.iter().position(|c| c.name == name)
    }

    pub fn region_index(&self, name: &str) -> Option<RegionId> {
        self.regions.iter().position(|r| r.name == name)
    }

    /// Rebuild a `SystemBuilder` describing this system (used by surgery).
    pub fn to_builder(&self) -> SystemBuilder {
        SystemBuilder {
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
            curves: self.curves.clone(),
            regions: self
                .regions
                .iter()
                .map(|r| {
                    (
                        r.name.clone(),
                        r.genus,
                        r.walks.iter().map(|&w| self.walks[w].0[0]).collect(),
                    )
                })
                .collect(),
        }
    }
}

/// Boundary walks of the map determined by a vertex rotation system, before
/// any region assignment. Useful for enumerating region partitions.
pub fn boundary_walks(vertices: &[Vertex], edges: &[Edge]) -> Vec<Walk> {
    compute_walks(vertices, edges)
}

/// Compute the boundary-walk orbits of the map described by the builder.
pub(crate) fn compute_walks(vertices: &[Vertex], edges: &[Edge]) -> Vec<Walk> {
    // Mirrors CurveSystem::walk_next but works on raw slices.
    let dart_vertex = |d: Dart| -> VertexId {
        match d.end {
            End::Tail => edges[d.edge].from,
            End::Head => edges[d.edge].to,
        }
    };
    let cw_next = |d: Dart| -> Dart {
        let v = dart_vertex(d);
        let list = &vertices[v].darts;
        let i = list.iter().position(|&x| x == d).expect("incident dart");
        list[(i + list.len() - 1) % list.len()]
    };
    let next = |s: SideDart| -> SideDart {
        let d_in = Dart {
            edge: s.edge,
            end: match s.dir {
                Dir::Forward => End::Head,
                Dir::Backward => End::Tail,
            },
        };
        let d = cw_next(d_in);
        SideDart {
            edge: d.edge,
            dir: match d.end {
                End::Tail => Dir::Forward,
                End::Head => Dir::Backward,
            },
        }
    };

    let mut seen: HashMap<SideDart, bool> = HashMap::new();
    let mut walks = Vec::new();
    for e in 0..edges.len() {
        for dir in [Dir::Forward, Dir::Backward] {
            let start = SideDart { edge: e, dir };
            if seen.contains_key(&start) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut s = start;
            loop {
                seen.insert(s, true);
                cycle.push(s);
                s = next(s);
                if s == start {
                    break;
                }
            }
            walks.push(Walk(cycle));
        }
    }
    walks
}

impl SystemBuilder {
    /// Build with every boundary walk forming its own genus-0 disk region.
    pub fn with_disk_regions(
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        curves: Vec<Curve>,
    ) -> Result<CurveSystem, SystemError> {
        let walks = compute_walks(&vertices, &edges);
        let regions = walks
            .iter()
            .enumerate()
            .map(|(i, w)| (format!("R{i}"), 0, vec![w.0[0]]))
            .collect();
        SystemBuilder {
            vertices,
            edges,
            curves,
            regions,
        }
        .build()
    }

    /// Validate the raw description and produce a `CurveSystem`.
    pub fn build(self) -> Result<CurveSystem, SystemError> {
        let SystemBuilder {
            vertices,
            edges,
            curves,
            regions,
        } = self;

        if vertices.is_empty() || edges.is_empty() {
            return Err(SystemError::Other("system has no cells".into()));
        }

        // Index sanity.
        for e in &edges {
            if e.from >= vertices.len() || e.to >= vertices.len() {
                return Err(SystemError::BadEndpoint(e.name.clone()));
            }
            if e.curve >= curves.len() {
                return Err(SystemError::BadCurveLabel(e.name.clone()));
            }
        }

        // Every dart appears in exactly one vertex list, at the right vertex.
        let mut dart_count: HashMap<Dart, usize> = HashMap::new();
        for (vi, v) in vertices.iter().enumerate() {
            if v.darts.len() != 2 && v.darts.len() != 4 {
                return Err(SystemError::BadDegree(v.name.clone(), v.darts.len()));
            }
            for &d in &v.darts {
                if d.edge >= edges.len() {
                    return Err(SystemError::Other(format!(
                        "vertex {} lists a dart of an unknown edge",
                        v.name
                    )));
                }
                let e = &edges[d.edge];
                let expect = match d.end {
                    End::Tail => e.from,
                    End::Head => e.to,
                };
                if expect != vi {
                    return Err(SystemError::BadDartIncidence(e.name.clone(), d.end));
                }
                *dart_count.entry(d).or_insert(0) += 1;
            }
        }
        for e in 0..edges.len() {
            for end in [End::Tail, End::Head] {
                if dart_count.get(&Dart { edge: e, end }).copied().unwrap_or(0) != 1 {
                    return Err(SystemError::BadDartIncidence(edges[e].name.clone(), end));
                }
            }
        }

        // Transversality: degree-4 rotations alternate two distinct curve
        // labels, degree-2 vertices carry a single curve.
        for v in &vertices {
            let labels: Vec<CurveId> = v.darts.iter().map(|d| edges[d.edge].curve).collect();
            match labels.len() {
                2 => {
                    if labels[0] != labels[1] {
                        return Err(SystemError::Transversality(v.name.clone()));
                    }
                }
                4 => {
                    if labels[0] != labels[2]
                        || labels[1] != labels[3]
                        || labels[0] == labels[1]
                    {
                        return Err(SystemError::Transversality(v.name.clone()));
                    }
                }
                _ => unreachable!(),
            }
        }

        // Curves: each label's edges form exactly the curve's cycle.
        let mut visit: HashMap<(VertexId, CurveId), (Dart, Dart)> = HashMap::new();
        for (ci, c) in curves.iter().enumerate() {
            if c.edges.is_empty() {
                return Err(SystemError::EmptyCurve(c.name.clone()));
            }
            let labelled: Vec<EdgeId> = (0..edges.len()).filter(|&e| edges[e].curve == ci).collect();
            let mut used: Vec<EdgeId> = c.edges.iter().map(|&(e, _)| e).collect();
            used.sort_unstable();
            let mut lab = labelled.clone();
            lab.sort_unstable();
            if used != lab {
                return Err(SystemError::BadCurveCycle(c.name.clone()));
            }
            let n = c.edges.len();
            for i in 0..n {
                let (e1, d1) = c.edges[i];
                let (e2, d2) = c.edges[(i + 1) % n];
                let head1 = match d1 {
                    Dir::Forward => edges[e1].to,
                    Dir::Backward => edges[e1].from,
                };
                let tail2 = match d2 {
                    Dir::Forward => edges[e2].from,
                    Dir::Backward => edges[e2].to,
                };
                if head1 != tail2 {
                    return Err(SystemError::BadCurveCycle(c.name.clone()));
                }
                let in_dart = Dart {
                    edge: e1,
                    end: match d1 {
                        Dir::Forward => End::Head,
                        Dir::Backward => End::Tail,
                    },
                };
                let out_dart = Dart {
                    edge: e2,
                    end: match d2 {
                        Dir::Forward => End::Tail,
                        Dir::Backward => End::Head,
                    },
                };
                if visit.insert((head1, ci), (in_dart, out_dart)).is_some() {
                    // A curve passing a vertex twice would be a self-crossing.
                    return Err(SystemError::BadCurveCycle(c.name.clone()));
                }
            }
        }

        // Boundary walks and region claims.
        let walks = compute_walks(&vertices, &edges);
        let mut side_index: HashMap<SideDart, (usize, usize)> = HashMap::new();
        for (wi, w) in walks.iter().enumerate() {
            for (pi, &s) in w.0.iter().enumerate() {
                side_index.insert(s, (wi, pi));
            }
        }
        let mut claims = vec![0usize; walks.len()];
        let mut built_regions = Vec::new();
        let mut walk_region = vec![usize::MAX; walks.len()];
        for (ri, (name, genus, anchors)) in regions.iter().enumerate() {
            let mut wids = Vec::new();
            for &a in anchors {
                let (wi, _) = *side_index
                    .get(&a)
                    .ok_or(SystemError::BadWalkAnchor(a))?;
                claims[wi] += 1;
                walk_region[wi] = ri;
                wids.push(wi);
            }
            built_regions.push(Region {
                name: name.clone(),
                genus: *genus,
                walks: wids,
            });
        }
        for (wi, &n) in claims.iter().enumerate() {
            if n != 1 {
                return Err(SystemError::WalkClaim(walks[wi].0[0], n));
            }
        }

        // Euler characteristic and ambient genus.
        let chi: i64 = vertices.len() as i64 - edges.len() as i64
            + built_regions
                .iter()
                .map(|r| 2 - 2 * r.genus as i64 - r.walks.len() as i64)
                .sum::<i64>();
        if chi > 2 || chi % 2 != 0 {
            return Err(SystemError::BadEuler(chi));
        }
        let genus = ((2 - chi) / 2) as usize;

        // Connectivity of the cell structure.
        {
            let n_cells = vertices.len() + edges.len() + built_regions.len();
            let mut uf = UnionFind::new(n_cells);
            let vcell = |v: usize| v;
            let ecell = |e: usize| vertices.len() + e;
            let rcell = |r: usize| vertices.len() + edges.len() + r;
            for (ei, e) in edges.iter().enumerate() {
                uf.union(ecell(ei), vcell(e.from));
                uf.union(ecell(ei), vcell(e.to));
                for dir in [Dir::Forward, Dir::Backward] {
                    let (wi, _) = side_index[&SideDart { edge: ei, dir }];
                    uf.union(ecell(ei), rcell(walk_region[wi]));
                }
            }
            let root = uf.find(0);
            if (0..n_cells).any(|c| uf.find(c) != root) {
                return Err(SystemError::Disconnected);
            }
        }

        Ok(CurveSystem {
            vertices,
            edges,
            curves,
            regions: built_regions,
            walks,
            walk_region,
            side_index,
            visit,
            genus,
        })
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{torus_one_curve, torus_two_curves};

    #[test]
    fn torus_annulus_complement() {
        let s = torus_one_curve();
        assert_eq!(s.ambient_genus(), 1);
        assert_eq!(s.walks.len(), 2);
        assert_eq!(s.regions.len(), 1);
    }

    #[test]
    fn genus_bump_on_annulus() {
        let mut b = torus_one_curve().to_builder();
        b.regions[0].1 = 1;
        let s = b.build().expect("valid");
        assert_eq!(s.ambient_genus(), 2);
    }

    #[test]
    fn two_disk_regions_make_a_sphere() {
        let s = SystemBuilder {
            vertices: vec![Vertex {
                name: "v0".into(),
                darts: vec![
                    Dart { edge: 0, end: End::Tail },
                    Dart { edge: 0, end: End::Head },
                ],
            }],
            edges: vec![Edge {
                name: "e0".into(),
                curve: 0,
                from: 0,
                to: 0,
            }],
            curves: vec![Curve {
                name: "c".into(),
                edges: vec![(0, Dir::Forward)],
            }],
            regions: vec![
                ("R0".into(), 0, vec![SideDart { edge: 0, dir: Dir::Forward }]),
                ("R1".into(), 0, vec![SideDart { edge: 0, dir: Dir::Backward }]),
            ],
        }
        .build()
        .expect("valid");
        assert_eq!(s.ambient_genus(), 0);
    }

    #[test]
    fn square_torus_single_face() {
        let s = torus_two_curves();
        assert_eq!(s.ambient_genus(), 1);
        assert_eq!(s.walks.len(), 1);
        assert_eq!(s.walks[0].0.len(), 4);
    }

    #[test]
    fn transversality_rejected() {
        // Degree-4 vertex with non-alternating labels.
        let r = SystemBuilder {
            vertices: vec![Vertex {
                name: "v0".into(),
                darts: vec![
                    Dart { edge: 0, end: End::Tail },
                    Dart { edge: 0, end: End::Head },
                    Dart { edge: 1, end: End::Tail },
                    Dart { edge: 1, end: End::Head },
                ],
            }],
            edges: vec![
                Edge { name: "a".into(), curve: 0, from: 0, to: 0 },
                Edge { name: "b".into(), curve: 1, from: 0, to: 0 },
            ],
            curves: vec![
                Curve { name: "x".into(), edges: vec![(0, Dir::Forward)] },
                Curve { name: "y".into(), edges: vec![(1, Dir::Forward)] },
            ],
            regions: vec![],
        }
        .build();
        assert!(matches!(r, Err(SystemError::Transversality(_))));
    }
}
