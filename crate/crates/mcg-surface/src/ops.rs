//! Intersection counts, bigon detection and mod-2 homology predicates.

use std::collections::HashMap;

use crate::system::{CurveId, CurveSystem, RegionId, SideDart, VertexId};

impl CurveSystem {
    /// Degree-4 vertices where the two given curves cross.
    pub fn crossing_vertices(&self, c1: CurveId, c2: CurveId) -> Vec<VertexId> {
        assert_ne!(c1, c2, "intersection of a curve with itself is undefined");
        (0..self.vertices.len())
            .filter(|&v| {
                self.vertices[v].darts.len() == 4 && {
                    let mut cs = self.vertex_curves(v);
                    cs.sort_unstable();
                    let mut want = vec![c1, c2];
                    want.sort_unstable();
                    cs == want
                }
            })
            .collect()
    }

    /// Crossing count of the two curves. Equals the geometric intersection
    /// number when `detect_bigons` is empty.
    pub fn geometric_intersection(&self, c1: CurveId, c2: CurveId) -> usize {
        self.crossing_vertices(c1, c2).len()
    }

    /// Sign of the crossing at `v`: +1 if rotating counterclockwise by one
    /// dart from c1's outgoing direction gives c2's outgoing direction.
    fn crossing_sign(&self, v: VertexId, c1: CurveId, c2: CurveId) -> i64 {
        let (_, out1) = self.curve_visit(v, c1).expect("c1 passes v");
        let (_, out2) = self.curve_visit(v, c2).expect("c2 passes v");
        if self.ccw_next(out1) == out2 {
            1
        } else {
            -1
        }
    }

    /// Absolute value of the algebraic intersection number.
    pub fn algebraic_intersection(&self, c1: CurveId, c2: CurveId) -> usize {
        let s: i64 = self
            .crossing_vertices(c1, c2)
            .iter()
            .map(|&v| self.crossing_sign(v, c1, c2))
            .sum();
        s.unsigned_abs() as usize
    }

    /// Regions that are bigons between the two curves: genus 0, a single
    /// boundary walk consisting of exactly one maximal arc of each curve.
    pub fn detect_bigons(&self, c1: CurveId, c2: CurveId) -> Vec<RegionId> {
        let mut out = Vec::new();
        for (ri, r) in self.regions.iter().enumerate() {
            if r.genus != 0 || r.walks.len() != 1 {
                continue;
            }
            let walk = &self.walks[r.walks[0]].0;
            let labels: Vec<CurveId> = walk.iter().map(|s| self.edges[s.edge].curve).collect();
            if labels.iter().any(|&c| c != c1 && c != c2) {
                continue;
            }
            if !labels.contains(&c1) || !labels.contains(&c2) {
                continue;
            }
            // Count maximal runs cyclically.
            let n = labels.len();
            let runs = (0..n).filter(|&i| labels[i] != labels[(i + 1) % n]).count();
            if runs == 2 {
                out.push(ri);
            }
        }
        out
    }

    /// True iff the mod-2 homology classes of the two curve sets agree:
    /// the regions admit a 2-coloring flipping exactly across edges of the
    /// symmetric difference of the sets.
    pub fn mod2_class_equal(&self, set1: &[CurveId], set2: &[CurveId]) -> bool {
        let mut parity: HashMap<CurveId, usize> = HashMap::new();
        for &c in set1 {
            *parity.entry(c).or_insert(0) += 1;
        }
        for &c in set2 {
            *parity.entry(c).or_insert(0) += 1;
        }
        let flip_curves: Vec<CurveId> = parity
            .into_iter()
            .filter(|&(_, n)| n % 2 == 1)
            .map(|(c, _)| c)
            .collect();
        self.region_two_coloring(&flip_curves).is_some()
    }

    /// 2-coloring of the regions that flips across edges of `flip_curves` and
    /// stays equal across all other edges, normalized so region 0 is `false`.
    /// `None` when no such coloring exists (the flip set is nonzero in mod-2
    /// homology).
    pub fn region_two_coloring(&self, flip_curves: &[CurveId]) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.regions.len()];
        let mut stack = vec![0usize];
        color[0] = Some(false);
        // Adjacency list per region.
        let mut adj: Vec<Vec<(RegionId, bool)>> = vec![Vec::new(); self.regions.len()];
        for e in 0..self.edges.len() {
            let flip = flip_curves.contains(&self.edges[e].curve);
            let r1 = self.side_region(SideDart { edge: e, dir: crate::Dir::Forward });
            let r2 = self.side_region(SideDart { edge: e, dir: crate::Dir::Backward });
            adj[r1].push((r2, flip));
            adj[r2].push((r1, flip));
        }
        while let Some(r) = stack.pop() {
            let c = color[r].unwrap();
            for &(r2, flip) in &adj[r] {
                let want = c ^ flip;
                match color[r2] {
                    None => {
                        color[r2] = Some(want);
                        stack.push(r2);
                    }
                    Some(have) => {
                        if have != want {
                            return None;
                        }
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.expect("surface connected")).collect())
    }
}

/// Raw pairwise data used by the pair/triple classification. Computed without
/// assuming minimal position.
#[derive(Clone, Debug)]
pub struct PairChart {
    pub crossings: usize,
    pub algebraic: usize,
    pub mod2_equal: bool,
    /// Number of complementary components of the union of the two curves.
    pub union_components: usize,
    pub bigons: Vec<RegionId>,
    /// Disjoint pair only: the union separates with each piece abutting both
    /// curves (the bounding-pair / integrally-homologous test).
    pub bounding_pair: bool,
    /// Disjoint pair only: the curves cobound an annulus.
    pub homotopic: bool,
}

impl PairChart {
    pub fn compute(sys: &CurveSystem, c1: CurveId, c2: CurveId) -> PairChart {
        let crossings = sys.geometric_intersection(c1, c2);
        let algebraic = sys.algebraic_intersection(c1, c2);
        let mod2_equal = sys.mod2_class_equal(&[c1], &[c2]);
        let comps = sys.complement_components(&[c1, c2]);
        let union_components = comps.len();
        let bigons = sys.detect_bigons(c1, c2);
        let (bounding_pair, homotopic) = if crossings == 0 {
            let abuts = |group: &Vec<RegionId>, c: CurveId| -> bool {
                group.iter().any(|&r| {
                    self_region_touches_curve(sys, r, c)
                })
            };
            let bp = comps.len() == 2
                && comps
                    .iter()
                    .all(|g| abuts(g, c1) && abuts(g, c2));
            (bp, sys.homotopic_disjoint(c1, c2))
        } else {
            (false, false)
        };
        PairChart {
            crossings,
            algebraic,
            mod2_equal,
            union_components,
            bigons,
            bounding_pair,
            homotopic,
        }
    }
}

fn self_region_touches_curve(sys: &CurveSystem, r: RegionId, c: CurveId) -> bool {
    sys.regions[r].walks.iter().any(|&w| {
        sys.walks[w]
            .0
            .iter()
            .any(|s| sys.edges[s.edge].curve == c)
    })
}
