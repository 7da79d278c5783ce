//! The triangle move: sliding one curve across a crossing of two others.
//! This is the only local move connecting isotopic configurations of curves
//! that are pairwise in minimal position, so its orbit closure realizes
//! equality up to ambient isotopy for such configurations.

use std::collections::BTreeMap;

use crate::canon::{canonical_key, IsoPolicy};
use crate::surgery::SurgeryError;
use crate::system::{
    boundary_walks, CurveId, CurveSystem, Dart, Dir, EdgeId, End, RegionId, SideDart,
    SystemBuilder, VertexId,
};

/// Regions across which a triangle move is possible: disks bounded by one arc
/// of each of three distinct curves.
pub fn triangle_regions(sys: &CurveSystem) -> Vec<RegionId> {
    (0..sys.regions.len())
        .filter(|&ri| {
            let r = &sys.regions[ri];
            if r.genus != 0 || r.walks.len() != 1 {
                return false;
            }
            let walk = &sys.walks[r.walks[0]].0;
            if walk.len() != 3 {
                return false;
            }
            let mut curves: Vec<CurveId> =
                walk.iter().map(|s| sys.edges[s.edge].curve).collect();
            curves.sort_unstable();
            curves.dedup();
            curves.len() == 3
        })
        .collect()
}

struct CurveLoc {
    mid: EdgeId,
    mid_dir: Dir,
    prev: (EdgeId, Dir),
    next: (EdgeId, Dir),
    v_first: VertexId,
    v_second: VertexId,
}

fn head_dart(e: EdgeId, d: Dir) -> Dart {
    Dart {
        edge: e,
        end: match d {
            Dir::Forward => End::Head,
            Dir::Backward => End::Tail,
        },
    }
}

fn tail_dart(e: EdgeId, d: Dir) -> Dart {
    Dart {
        edge: e,
        end: match d {
            Dir::Forward => End::Tail,
            Dir::Backward => End::Head,
        },
    }
}

/// Flip the triangle to the other side of its opposite crossings. Every pair
/// of crossings adjacent along a triangle side swaps its order along that
/// curve; crossing signs and all region topology are preserved.
pub fn triangle_move(sys: &CurveSystem, region: RegionId) -> Result<CurveSystem, SurgeryError> {
    let r = &sys.regions[region];
    if r.genus != 0 || r.walks.len() != 1 || sys.walks[r.walks[0]].0.len() != 3 {
        return Err(SurgeryError::Inconsistent(
            "triangle move needs a disk region with three sides".into(),
        ));
    }
    let walk = &sys.walks[r.walks[0]].0;
    let mut locs = Vec::with_capacity(3);
    for s in walk {
        let c = sys.edges[s.edge].curve;
        let cyc = &sys.curves[c].edges;
        let n = cyc.len();
        if n < 4 {
            return Err(SurgeryError::Inconsistent(
                "triangle side curve has fewer than four crossings".into(),
            ));
        }
        let i = cyc
            .iter()
            .position(|&(e, _)| e == s.edge)
            .expect("side edge lies on its curve");
        let (mid, mid_dir) = cyc[i];
        let v_first = match mid_dir {
            Dir::Forward => sys.edges[mid].from,
            Dir::Backward => sys.edges[mid].to,
        };
        let v_second = match mid_dir {
            Dir::Forward => sys.edges[mid].to,
            Dir::Backward => sys.edges[mid].from,
        };
        locs.push(CurveLoc {
            mid,
            mid_dir,
            prev: cyc[(i + n - 1) % n],
            next: cyc[(i + 1) % n],
            v_first,
            v_second,
        });
    }
    {
        let mut curves: Vec<CurveId> = walk.iter().map(|s| sys.edges[s.edge].curve).collect();
        curves.sort_unstable();
        curves.dedup();
        if curves.len() != 3 {
            return Err(SurgeryError::Inconsistent(
                "triangle sides must lie on three distinct curves".into(),
            ));
        }
    }

    let mut vertices = sys.vertices.clone();
    let mut edges = sys.edges.clone();
    let mids: Vec<EdgeId> = locs.iter().map(|l| l.mid).collect();

    for l in &locs {
        // Swap the dart pair of this curve between its two corners, in place.
        let fi_in = head_dart(l.prev.0, l.prev.1);
        let fi_out = tail_dart(l.mid, l.mid_dir);
        let se_in = head_dart(l.mid, l.mid_dir);
        let se_out = tail_dart(l.next.0, l.next.1);
        let swap = |vertices: &mut Vec<crate::system::Vertex>,
                    v: VertexId,
                    old: Dart,
                    new: Dart| {
            let pos = vertices[v]
                .darts
                .iter()
                .position(|&d| d == old)
                .expect("corner carries the expected dart");
            vertices[v].darts[pos] = new;
        };
        swap(&mut vertices, l.v_first, fi_in, se_in);
        swap(&mut vertices, l.v_first, fi_out, se_out);
        swap(&mut vertices, l.v_second, se_in, fi_in);
        swap(&mut vertices, l.v_second, se_out, fi_out);
        // Reroute the three edges of this curve.
        {
            let m = &mut edges[l.mid];
            std::mem::swap(&mut m.from, &mut m.to);
        }
        match l.prev.1 {
            Dir::Forward => edges[l.prev.0].to = l.v_second,
            Dir::Backward => edges[l.prev.0].from = l.v_second,
        }
        match l.next.1 {
            Dir::Forward => edges[l.next.0].from = l.v_first,
            Dir::Backward => edges[l.next.0].to = l.v_first,
        }
    }

    // Reassemble regions: every boundary walk of the new diagram inherits the
    // region of its sides on unmoved edges; the one walk without such sides
    // is the flipped triangle.
    let new_walks = boundary_walks(&vertices, &edges);
    let mut region_walks: Vec<Vec<SideDart>> = vec![Vec::new(); sys.regions.len()];
    let mut triangle_anchor: Option<SideDart> = None;
    for w in &new_walks {
        let votes: Vec<RegionId> = w
            .0
            .iter()
            .filter(|s| !mids.contains(&s.edge))
            .map(|&s| sys.side_region(s))
            .collect();
        match votes.as_slice() {
            [] => {
                if triangle_anchor.is_some() || w.0.len() != 3 {
                    return Err(SurgeryError::Inconsistent(
                        "triangle move produced an unexpected walk".into(),
                    ));
                }
                triangle_anchor = Some(w.0[0]);
            }
            [first, rest @ ..] => {
                if rest.iter().any(|r| r != first) {
                    return Err(SurgeryError::Inconsistent(
                        "triangle move split a region inconsistently".into(),
                    ));
                }
                region_walks[*first].push(w.0[0]);
            }
        }
    }
    let triangle_anchor = triangle_anchor.ok_or_else(|| {
        SurgeryError::Inconsistent("triangle move lost the triangle region".into())
    })?;

    let mut regions = Vec::with_capacity(sys.regions.len());
    for (ri, old) in sys.regions.iter().enumerate() {
        if ri == region {
            if !region_walks[ri].is_empty() {
                return Err(SurgeryError::Inconsistent(
                    "old triangle region should receive no outer walks".into(),
                ));
            }
            regions.push((old.name.clone(), 0, vec![triangle_anchor]));
        } else {
            if region_walks[ri].len() != old.walks.len() {
                return Err(SurgeryError::Inconsistent(
                    "triangle move changed a region's boundary count".into(),
                ));
            }
            regions.push((old.name.clone(), old.genus, region_walks[ri].clone()));
        }
    }

    let out = SystemBuilder {
        vertices,
        edges,
        curves: sys.curves.clone(),
        regions,
    }
    .build()?;
    debug_assert_eq!(out.ambient_genus(), sys.ambient_genus());
    Ok(out)
}

/// All combinatorial forms reachable by triangle moves, deduplicated by
/// canonical key and sorted by it.
pub fn isotopy_orbit(sys: &CurveSystem, policy: IsoPolicy) -> Vec<CurveSystem> {
    let mut seen: BTreeMap<Vec<i64>, CurveSystem> = BTreeMap::new();
    seen.insert(canonical_key(sys, policy), sys.clone());
    let mut frontier = vec![sys.clone()];
    while let Some(s) = frontier.pop() {
        for r in triangle_regions(&s) {
            let next = triangle_move(&s, r).expect("triangle move applies to triangle regions");
            let key = canonical_key(&next, policy);
            if !seen.contains_key(&key) {
                seen.insert(key, next.clone());
                frontier.push(next);
            }
        }
        assert!(seen.len() <= 100_000, "isotopy orbit exploded");
    }
    seen.into_values().collect()
}

/// Minimal canonical key over the triangle-move orbit: equal for two systems
/// iff they are connected by triangle moves (up to isomorphism).
pub fn isotopy_canonical_key(sys: &CurveSystem, policy: IsoPolicy) -> Vec<i64> {
    let orbit = isotopy_orbit(sys, policy);
    canonical_key(&orbit[0], policy)
}
