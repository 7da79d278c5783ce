//! Handle addition, push-off curves and left-turn curves.
//!
//! Push-offs and turn curves are realized by inserting a new curve in normal
//! position: a closed path given by the edges it crosses and the regions its
//! segments run through. Each segment cuts a thin disk off its region on the
//! side facing the boundary it parallels; region genus and untouched walks
//! stay on the far side.

use std::collections::HashMap;

use thiserror::Error;

use crate::system::{
    CurveId, CurveSystem, Dart, Dir, Edge, EdgeId, End, RegionId, SideDart, SystemBuilder,
    Vertex, VertexId,
};

#[derive(Error, Debug)]
pub enum SurgeryError {
    #[error("region walk index {0} out of range")]
    WalkIndex(usize),
    #[error("chosen arcs do not close up into a simple curve")]
    ArcsDontClose,
    #[error("curves must cross exactly twice for a turn curve, found {0} crossings")]
    NotTwoCrossings(usize),
    #[error("degenerate corridor: the path crosses no edges")]
    DegenerateCorridor,
    #[error("inconsistent normal path: {0}")]
    Inconsistent(String),
    #[error("system validation failed after surgery: {0}")]
    Validation(#[from] crate::system::SystemError),
}

/// Add a handle. With `r1 == r2` the region's genus grows by one (the
/// stabilization move); otherwise the two regions merge into one carrying the
/// genus sum and the combined boundary walks.
pub fn add_handle(sys: &CurveSystem, r1: RegionId, r2: RegionId) -> CurveSystem {
    let mut b = sys.to_builder();
    if r1 == r2 {
        b.regions[r1].1 += 1;
    } else {
        let (lo, hi) = (r1.min(r2), r1.max(r2));
        let (name_hi, genus_hi, anchors_hi) = b.regions.remove(hi);
        let lo_entry = &mut b.regions[lo];
        lo_entry.0 = format!("{}+{}", lo_entry.0, name_hi);
        lo_entry.1 += genus_hi;
        lo_entry.2.extend(anchors_hi);
    }
    b.build().expect("handle addition preserves validity")
}

/// Insert a curve parallel to one boundary walk of a region, inside the
/// region. Returns the new system and the new curve's id.
pub fn insert_pushoff(
    sys: &CurveSystem,
    region: RegionId,
    walk_index: usize,
) -> Result<(CurveSystem, CurveId), SurgeryError> {
    if walk_index >= sys.regions[region].walks.len() {
        return Err(SurgeryError::WalkIndex(walk_index));
    }
    let walk = sys.regions[region].walks[walk_index];
    let anchor = sys.walks[walk].0[0];

    let mut b = sys.to_builder();
    let new_curve = b.curves.len();
    let new_edge = b.edges.len();
    let new_vertex = b.vertices.len();
    b.vertices.push(Vertex {
        name: format!("pv{new_vertex}"),
        darts: vec![
            Dart { edge: new_edge, end: End::Tail },
            Dart { edge: new_edge, end: End::Head },
        ],
    });
    b.edges.push(Edge {
        name: format!("pe{new_edge}"),
        curve: new_curve,
        from: new_vertex,
        to: new_vertex,
    });
    b.curves.push(crate::system::Curve {
        name: format!("push{new_curve}"),
        edges: vec![(new_edge, Dir::Forward)],
    });
    // The annulus between the walk and the push-off takes the walk's anchor
    // and one side of the loop; the region keeps everything else plus the
    // other side.
    let (_, _, anchors) = &mut b.regions[region];
    anchors.retain(|&a| a != anchor);
    anchors.push(SideDart { edge: new_edge, dir: Dir::Backward });
    b.regions.push((
        format!("ann{new_edge}"),
        0,
        vec![anchor, SideDart { edge: new_edge, dir: Dir::Forward }],
    ));
    let out = b.build()?;
    Ok((out, new_curve))
}

/// Insert a nonseparating loop through one handle of a positive-genus
/// region. The region keeps both sides of the loop and loses one genus.
pub fn insert_core_curve(
    sys: &CurveSystem,
    region: RegionId,
) -> Result<(CurveSystem, CurveId), SurgeryError> {
    if sys.regions[region].genus == 0 {
        return Err(SurgeryError::Inconsistent(
            "core curve requires a region of positive genus".into(),
        ));
    }
    let mut b = sys.to_builder();
    let new_curve = b.curves.len();
    let new_edge = b.edges.len();
    let new_vertex = b.vertices.len();
    b.vertices.push(Vertex {
        name: format!("cv{new_vertex}"),
        darts: vec![
            Dart { edge: new_edge, end: End::Tail },
            Dart { edge: new_edge, end: End::Head },
        ],
    });
    b.edges.push(Edge {
        name: format!("ce{new_edge}"),
        curve: new_curve,
        from: new_vertex,
        to: new_vertex,
    });
    b.curves.push(crate::system::Curve {
        name: format!("core{new_curve}"),
        edges: vec![(new_edge, Dir::Forward)],
    });
    let (_, genus, anchors) = &mut b.regions[region];
    *genus -= 1;
    anchors.push(SideDart { edge: new_edge, dir: Dir::Forward });
    anchors.push(SideDart { edge: new_edge, dir: Dir::Backward });
    let out = b.build()?;
    Ok((out, new_curve))
}

/// One crossing of a normal path with an existing edge, hugging one endpoint.
#[derive(Clone, Debug)]
pub(crate) struct PathCross {
    pub edge: EdgeId,
    pub near: End,
    /// Crosses from the left side of the oriented edge to its right side.
    pub ltr: bool,
}

/// Segment following a crossing, running inside one region. The thin corner
/// (vertex, ccw dart position) marks the face that becomes a corridor disk.
#[derive(Clone, Debug)]
pub(crate) struct PathSeg {
    pub region: RegionId,
    pub thin_corner: (VertexId, usize),
}

pub(crate) fn insert_normal_path(
    sys: &CurveSystem,
    crossings: &[PathCross],
    segs: &[PathSeg],
    curve_name: &str,
) -> Result<(CurveSystem, CurveId), SurgeryError> {
    let n = crossings.len();
    if n == 0 {
        return Err(SurgeryError::DegenerateCorridor);
    }
    assert_eq!(segs.len(), n, "one segment after each crossing");

    // Group crossings per edge and order them tail end first. A BTreeMap
    // keeps id assignment deterministic.
    let mut per_edge: std::collections::BTreeMap<EdgeId, Vec<usize>> =
        std::collections::BTreeMap::new();
    for (k, c) in crossings.iter().enumerate() {
        per_edge.entry(c.edge).or_default().push(k);
    }
    for v in per_edge.values_mut() {
        if v.len() > 2 {
            return Err(SurgeryError::Inconsistent(
                "more than two crossings on one edge".into(),
            ));
        }
        if v.len() == 2 {
            if crossings[v[0]].near == crossings[v[1]].near {
                return Err(SurgeryError::Inconsistent(
                    "two crossings hug the same edge end".into(),
                ));
            }
            if crossings[v[0]].near == End::Head {
                v.swap(0, 1);
            }
        }
    }

    let mut vertices = sys.vertices.clone();
    let mut edges = sys.edges.clone();
    let mut curves = sys.curves.clone();
    let new_curve = curves.len();

    // Split crossed edges. sub_edges[old] lists the chain tail-to-head;
    // cross_vertex[k] is the new vertex for crossing k.
    let mut sub_edges: HashMap<EdgeId, Vec<EdgeId>> = HashMap::new();
    let mut cross_vertex: Vec<VertexId> = vec![usize::MAX; n];
    // Crossing darts get wired after the d-edges exist.
    let d_edge_base = {
        // d-edge k connects cross_vertex of crossing k to crossing k+1; ids
        // are assigned after all sub-edges, so count sub-edges first.
        let extra: usize = per_edge.values().map(|v| v.len()).sum();
        edges.len() + extra
    };

    for (&old, ks) in per_edge.iter() {
        let m = ks.len();
        let Edge { name, curve, from, to } = edges[old].clone();
        let mut chain = Vec::with_capacity(m + 1);
        let mut nodes = Vec::with_capacity(m);
        for (j, &k) in ks.iter().enumerate() {
            let nv = vertices.len();
            nodes.push(nv);
            cross_vertex[k] = nv;
            vertices.push(Vertex {
                name: format!("x{nv}"),
                darts: Vec::new(), // wired below
            });
            let eid = if j == 0 { old } else { edges.len() };
            if j == 0 {
                edges[old] = Edge {
                    name: format!("{name}.0"),
                    curve,
                    from,
                    to: nv,
                };
            } else {
                edges.push(Edge {
                    name: format!("{name}.{j}"),
                    curve,
                    from: nodes[j - 1],
                    to: nv,
                });
            }
            chain.push(eid);
        }
        let last = edges.len();
        edges.push(Edge {
            name: format!("{name}.{m}"),
            curve,
            from: *nodes.last().unwrap(),
            to,
        });
        chain.push(last);
        sub_edges.insert(old, chain);
    }
    debug_assert_eq!(edges.len(), d_edge_base);

    // d-edges.
    for k in 0..n {
        edges.push(Edge {
            name: format!("{curve_name}.{k}"),
            curve: new_curve,
            from: cross_vertex[k],
            to: cross_vertex[(k + 1) % n],
        });
    }
    curves.push(crate::system::Curve {
        name: curve_name.to_string(),
        edges: (0..n).map(|k| (d_edge_base + k, Dir::Forward)).collect(),
    });

    // Rewrite old vertices and curve cycles for split edges. This must come
    // before the crossing vertices are wired: their darts already refer to
    // sub-edges and must not be remapped.
    for v in vertices.iter_mut().take(sys.vertices.len()) {
        for d in v.darts.iter_mut() {
            if let Some(chain) = sub_edges.get(&d.edge) {
                match d.end {
                    End::Tail => d.edge = chain[0],
                    End::Head => d.edge = *chain.last().unwrap(),
                }
            }
        }
    }
    for c in curves.iter_mut().take(new_curve) {
        let mut out = Vec::new();
        for &(e, dir) in &c.edges {
            match sub_edges.get(&e) {
                None => out.push((e, dir)),
                Some(chain) => match dir {
                    Dir::Forward => out.extend(chain.iter().map(|&s| (s, Dir::Forward))),
                    Dir::Backward => {
                        out.extend(chain.iter().rev().map(|&s| (s, Dir::Backward)))
                    }
                },
            }
        }
        c.edges = out;
    }

    // Wire crossing vertices. Crossing k sits on sub-chain position j of its
    // edge: incoming sub-edge chain[j], outgoing chain[j+1].
    for (&old, ks) in per_edge.iter() {
        let chain = &sub_edges[&old];
        for (j, &k) in ks.iter().enumerate() {
            let x_in = Dart { edge: chain[j], end: End::Head };
            let x_out = Dart { edge: chain[j + 1], end: End::Tail };
            let d_in = Dart {
                edge: d_edge_base + (k + n - 1) % n,
                end: End::Head,
            };
            let d_out = Dart { edge: d_edge_base + k, end: End::Tail };
            let v = cross_vertex[k];
            vertices[v].darts = if crossings[k].ltr {
                vec![x_in, d_out, x_out, d_in]
            } else {
                vec![x_in, d_in, x_out, d_out]
            };
        }
    }

    // Recompute walks and reassign regions.
    let walks = crate::system::compute_walks(&vertices, &edges);
    let side_walk = |s: SideDart| -> usize {
        walks
            .iter()
            .position(|w| w.0.contains(&s))
            .expect("side lies on a walk")
    };
    let parent_of: HashMap<EdgeId, EdgeId> = sub_edges
        .iter()
        .flat_map(|(&old, chain)| chain.iter().map(move |&s| (s, old)))
        .collect();
    // Thin walks: claimed corner (v, pos) belongs to the step arriving via
    // the dart at pos+1.
    let mut thin_walks: Vec<usize> = Vec::new();
    for seg in segs {
        let (v, pos) = seg.thin_corner;
        let list = &vertices[v].darts;
        let claim = list[(pos + 1) % list.len()];
        let s = SideDart {
            edge: claim.edge,
            dir: match claim.end {
                End::Head => Dir::Forward,
                End::Tail => Dir::Backward,
            },
        };
        let wi = side_walk(s);
        // The thin disk is carved out of the segment's region.
        if let Some(sd) = walks[wi]
            .0
            .iter()
            .find(|sd| edges[sd.edge].curve != new_curve)
        {
            let old_edge = parent_of.get(&sd.edge).copied().unwrap_or(sd.edge);
            let r = sys.side_region(SideDart { edge: old_edge, dir: sd.dir });
            if r != seg.region {
                return Err(SurgeryError::Inconsistent(format!(
                    "thin corridor face lies in region {r}, expected {}",
                    seg.region
                )));
            }
        }
        thin_walks.push(wi);
    }
    thin_walks.sort_unstable();
    thin_walks.dedup();

    // Map each remaining walk to the region it came from.
    let mut region_walks: HashMap<RegionId, Vec<usize>> = HashMap::new();
    for (wi, w) in walks.iter().enumerate() {
        if thin_walks.contains(&wi) {
            continue;
        }
        let mut owner: Option<RegionId> = None;
        for s in &w.0 {
            if edges[s.edge].curve == new_curve {
                continue;
            }
            let old_edge = parent_of.get(&s.edge).copied().unwrap_or(s.edge);
            let r = sys.side_region(SideDart { edge: old_edge, dir: s.dir });
            match owner {
                None => owner = Some(r),
                Some(prev) if prev != r => {
                    return Err(SurgeryError::Inconsistent(format!(
                        "walk mixes regions {prev} and {r}"
                    )));
                }
                _ => {}
            }
        }
        let Some(r) = owner else {
            return Err(SurgeryError::Inconsistent(
                "walk carries only new-curve sides".into(),
            ));
        };
        region_walks.entry(r).or_default().push(wi);
    }

    let mut regions: Vec<(String, usize, Vec<SideDart>)> = Vec::new();
    for (ri, r) in sys.regions.iter().enumerate() {
        if let Some(ws) = region_walks.get(&ri) {
            regions.push((
                r.name.clone(),
                r.genus,
                ws.iter().map(|&w| walks[w].0[0]).collect(),
            ));
        } else if r.genus > 0 {
            return Err(SurgeryError::Inconsistent(format!(
                "region {} with genus lost all walks",
                r.name
            )));
        }
    }
    for (t, &wi) in thin_walks.iter().enumerate() {
        regions.push((format!("{curve_name}.thin{t}"), 0, vec![walks[wi].0[0]]));
    }

    let out = SystemBuilder {
        vertices,
        edges,
        curves,
        regions,
    }
    .build()?;
    if out.ambient_genus() != sys.ambient_genus() {
        return Err(SurgeryError::Inconsistent(format!(
            "ambient genus changed from {} to {}",
            sys.ambient_genus(),
            out.ambient_genus()
        )));
    }
    Ok((out, new_curve))
}

/// Which arc of the first curve the turn curve follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TurnChoice {
    pub arc: usize,
}

/// Insert the curve that follows one arc of `c1`, makes a left turn onto
/// `c2`, and closes up, pushed off to the left of its traversal.
pub fn insert_turn_curve(
    sys: &CurveSystem,
    c1: CurveId,
    c2: CurveId,
    choice: TurnChoice,
) -> Result<(CurveSystem, CurveId), SurgeryError> {
    let cross = sys.crossing_vertices(c1, c2);
    if cross.len() != 2 {
        return Err(SurgeryError::NotTwoCrossings(cross.len()));
    }

    // Split c1's cycle at the two crossings.
    let cyc = &sys.curves[c1].edges;
    let m = cyc.len();
    let head_of = |&(e, d): &(EdgeId, Dir)| -> VertexId {
        match d {
            Dir::Forward => sys.edges[e].to,
            Dir::Backward => sys.edges[e].from,
        }
    };
    let splits: Vec<usize> = (0..m).filter(|&i| cross.contains(&head_of(&cyc[i]))).collect();
    assert_eq!(splits.len(), 2);
    let (s0, s1) = (splits[0], splits[1]);
    let take = |from: usize, to: usize| -> Vec<(EdgeId, Dir)> {
        let mut v = Vec::new();
        let mut i = (from + 1) % m;
        loop {
            v.push(cyc[i]);
            if i == to {
                break;
            }
            i = (i + 1) % m;
        }
        v
    };
    let arc = if choice.arc % 2 == 0 {
        take(s0, s1)
    } else {
        take(s1, s0)
    };

    // Path = arc of c1, then a left turn onto c2 back to the arc's start.
    let mut path: Vec<(EdgeId, Dir)> = arc.clone();
    let arc_end = head_of(arc.last().unwrap());
    let arc_start_dart = {
        let (e, d) = arc[0];
        Dart {
            edge: e,
            end: match d {
                Dir::Forward => End::Tail,
                Dir::Backward => End::Head,
            },
        }
    };

    // Left turn at the arc end: c1 would continue along its out dart; we
    // depart along the counterclockwise next dart, which belongs to c2.
    let (_, o) = sys.curve_visit(arc_end, c1).expect("c1 passes the crossing");
    let l = sys.ccw_next(o);
    if sys.edges[l.edge].curve != c2 {
        return Err(SurgeryError::ArcsDontClose);
    }
    let mut side = sys.dart_out_side(l);
    loop {
        path.push((side.edge, side.dir));
        let h = sys.side_head(side);
        if sys.curve_visit(h, c1).is_some() {
            // Reached the other crossing; the second left turn must put us
            // back on the start of the chosen arc.
            let (_, o2) = sys.curve_visit(h, c2).expect("c2 passes the crossing");
            let l2 = sys.ccw_next(o2);
            if l2 != arc_start_dart {
                return Err(SurgeryError::ArcsDontClose);
            }
            break;
        }
        // Continue along c2 through h (possibly against its orientation).
        let (vin, vout) = sys.curve_visit(h, c2).expect("still on c2");
        let arrive = Dart {
            edge: side.edge,
            end: match side.dir {
                Dir::Forward => End::Head,
                Dir::Backward => End::Tail,
            },
        };
        // Depart along the other c2 dart; arriving against the orientation
        // means continuing backwards along c2's in-edge.
        let next = if arrive == vin { vout } else { vin };
        side = sys.dart_out_side(next);
    }

    // Corridor on the left of the traversal: at every interior degree-4
    // vertex the path crosses the edge of the dart counterclockwise after
    // the outgoing dart; the two turn vertices are passed without crossing.
    let np = path.len();
    let turn_vertices = [arc_end, sys.side_head(SideDart {
        edge: path[np - 1].0,
        dir: path[np - 1].1,
    })];
    let mut crossings: Vec<PathCross> = Vec::new();
    let mut cross_at: Vec<usize> = Vec::new(); // path index whose head hosts the crossing
    for p in 0..np {
        let h = {
            let (e, d) = path[p];
            sys.side_head(SideDart { edge: e, dir: d })
        };
        if turn_vertices.contains(&h) {
            continue;
        }
        if sys.vertices[h].darts.len() != 4 {
            continue;
        }
        let (e2, d2) = path[(p + 1) % np];
        let o = Dart {
            edge: e2,
            end: match d2 {
                Dir::Forward => End::Tail,
                Dir::Backward => End::Head,
            },
        };
        let l = sys.ccw_next(o);
        crossings.push(PathCross {
            edge: l.edge,
            near: l.end,
            ltr: l.end == End::Tail,
        });
        cross_at.push(p);
    }
    if crossings.is_empty() {
        return Err(SurgeryError::DegenerateCorridor);
    }

    // Segments: from crossing j (at the head of path edge cross_at[j]) to
    // crossing j+1, running through the region on the left of the spanned
    // path edges.
    let nc = crossings.len();
    let mut segs = Vec::with_capacity(nc);
    for j in 0..nc {
        let from = cross_at[j];
        let to = cross_at[(j + 1) % nc];
        let mut region: Option<RegionId> = None;
        let mut p = (from + 1) % np;
        loop {
            let (e, d) = path[p];
            let r = sys.side_region(SideDart { edge: e, dir: d.flip() });
            match region {
                None => region = Some(r),
                Some(prev) => {
                    if prev != r {
                        return Err(SurgeryError::Inconsistent(
                            "corridor segment spans multiple regions".into(),
                        ));
                    }
                }
            }
            if p == to {
                break;
            }
            p = (p + 1) % np;
        }
        let h = {
            let (e, d) = path[from];
            sys.side_head(SideDart { edge: e, dir: d })
        };
        let (e2, d2) = path[(from + 1) % np];
        let o = Dart {
            edge: e2,
            end: match d2 {
                Dir::Forward => End::Tail,
                Dir::Backward => End::Head,
            },
        };
        segs.push(PathSeg {
            region: region.unwrap(),
            thin_corner: (h, sys.dart_pos(o)),
        });
    }

    insert_normal_path(sys, &crossings, &segs, &format!("turn{}", sys.curves.len()))
}
