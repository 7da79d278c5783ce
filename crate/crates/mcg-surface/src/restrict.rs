//! Restriction of a system to a subset of its curves: deleting the other
//! curves from the surface (which merges complementary regions) and smoothing
//! away the degree-2 vertices they leave behind.

use std::collections::{HashMap, HashSet};

use crate::system::{
    compute_walks, Curve, CurveId, CurveSystem, Dart, Dir, Edge, End, SideDart, SystemBuilder,
    SystemError, UnionFind, Vertex,
};

/// Remove the given curves from the system. The ambient surface is unchanged;
/// regions merge across the deleted edges and degree-4 crossings with kept
/// curves become degree-2 marker vertices.
pub fn delete_curves(sys: &CurveSystem, remove: &[CurveId]) -> Result<CurveSystem, SystemError> {
    let removed: HashSet<CurveId> = remove.iter().copied().collect();
    if (0..sys.curves.len()).all(|c| removed.contains(&c)) {
        return Err(SystemError::Other("cannot delete every curve".into()));
    }

    let mut edge_map: HashMap<usize, usize> = HashMap::new();
    let mut new_edges: Vec<Edge> = Vec::new();
    let mut curve_map: HashMap<CurveId, CurveId> = HashMap::new();
    let mut new_curves: Vec<Curve> = Vec::new();
    for (ci, c) in sys.curves.iter().enumerate() {
        if !removed.contains(&ci) {
            curve_map.insert(ci, new_curves.len());
            new_curves.push(c.clone());
        }
    }
    for (ei, e) in sys.edges.iter().enumerate() {
        if !removed.contains(&e.curve) {
            edge_map.insert(ei, new_edges.len());
            new_edges.push(Edge {
                name: e.name.clone(),
                curve: curve_map[&e.curve],
                from: e.from,
                to: e.to,
            });
        }
    }
    for c in new_curves.iter_mut() {
        for (e, _) in c.edges.iter_mut() {
            *e = edge_map[e];
        }
    }

    // Kept vertices: those with at least one surviving dart.
    let mut vertex_map: HashMap<usize, usize> = HashMap::new();
    let mut new_vertices: Vec<Vertex> = Vec::new();
    for (vi, v) in sys.vertices.iter().enumerate() {
        let darts: Vec<Dart> = v
            .darts
            .iter()
            .filter(|d| edge_map.contains_key(&d.edge))
            .map(|d| Dart {
                edge: edge_map[&d.edge],
                end: d.end,
            })
            .collect();
        if !darts.is_empty() {
            vertex_map.insert(vi, new_vertices.len());
            new_vertices.push(Vertex {
                name: v.name.clone(),
                darts,
            });
        }
    }
    for e in new_edges.iter_mut() {
        e.from = vertex_map[&e.from];
        e.to = vertex_map[&e.to];
    }

    // Merge old regions across the deleted edges.
    let mut uf = UnionFind::new(sys.regions.len());
    for ei in 0..sys.edges.len() {
        if !edge_map.contains_key(&ei) {
            let r1 = sys.side_region(SideDart { edge: ei, dir: Dir::Forward });
            let r2 = sys.side_region(SideDart { edge: ei, dir: Dir::Backward });
            uf.union(r1, r2);
        }
    }

    // Group the recomputed walks by merged-region class.
    let inv_edge: HashMap<usize, usize> = edge_map.iter().map(|(&o, &n)| (n, o)).collect();
    let new_walks = compute_walks(&new_vertices, &new_edges);
    let mut class_walks: HashMap<usize, Vec<usize>> = HashMap::new();
    for (wi, w) in new_walks.iter().enumerate() {
        let classes: HashSet<usize> = w
            .0
            .iter()
            .map(|s| {
                uf.find(sys.side_region(SideDart {
                    edge: inv_edge[&s.edge],
                    dir: s.dir,
                }))
            })
            .collect();
        if classes.len() != 1 {
            return Err(SystemError::Other(
                "deleted-curve region merge is inconsistent along a walk".into(),
            ));
        }
        class_walks
            .entry(classes.into_iter().next().unwrap())
            .or_default()
            .push(wi);
    }

    // Euler characteristic of each merged piece: the old regions plus the
    // deleted cells they absorb.
    let mut class_chi: HashMap<usize, i64> = HashMap::new();
    for r in 0..sys.regions.len() {
        let chi = 2 - 2 * sys.regions[r].genus as i64 - sys.regions[r].walks.len() as i64;
        *class_chi.entry(uf.find(r)).or_insert(0) += chi;
    }
    for (vi, v) in sys.vertices.iter().enumerate() {
        if !vertex_map.contains_key(&vi) {
            let r = sys.side_region(sys.dart_out_side(v.darts[0]));
            *class_chi.entry(uf.find(r)).or_insert(0) += 1;
        }
    }
    for ei in 0..sys.edges.len() {
        if !edge_map.contains_key(&ei) {
            let r = sys.side_region(SideDart { edge: ei, dir: Dir::Forward });
            *class_chi.entry(uf.find(r)).or_insert(0) -= 1;
        }
    }

    let mut classes: Vec<usize> = class_walks.keys().copied().collect();
    classes.sort_unstable();
    let mut regions: Vec<(String, usize, Vec<SideDart>)> = Vec::new();
    for class in classes {
        let wids = &class_walks[&class];
        let b = wids.len() as i64;
        let chi = class_chi[&class];
        let two_g = 2 - b - chi;
        if two_g < 0 || two_g % 2 != 0 {
            return Err(SystemError::Other(
                "merged region has a non-integer genus".into(),
            ));
        }
        let name = sys
            .regions
            .iter()
            .enumerate()
            .find(|(ri, _)| uf.find(*ri) == class)
            .map(|(_, r)| r.name.clone())
            .expect("class has a member region");
        regions.push((
            name,
            (two_g / 2) as usize,
            wids.iter().map(|&wi| new_walks[wi].0[0]).collect(),
        ));
    }

    let out = SystemBuilder {
        vertices: new_vertices,
        edges: new_edges,
        curves: new_curves,
        regions,
    }
    .build()?;
    debug_assert_eq!(out.ambient_genus(), sys.ambient_genus());
    Ok(out)
}

/// Remove superfluous degree-2 marker vertices, merging their two incident
/// edge ends. A curve with no remaining vertices keeps its first marker.
pub fn smooth_markers(sys: &CurveSystem) -> CurveSystem {
    // A vertex is removable when it has degree 2 and its curve passes through
    // some other vertex as well.
    let mut removable = vec![false; sys.vertices.len()];
    for c in sys.curves.iter() {
        let visits: Vec<usize> = c
            .edges
            .iter()
            .map(|&(e, d)| match d {
                Dir::Forward => sys.edges[e].to,
                Dir::Backward => sys.edges[e].from,
            })
            .collect();
        let deg2: Vec<usize> = visits
            .iter()
            .copied()
            .filter(|&v| sys.vertices[v].darts.len() == 2)
            .collect();
        let keep_one = deg2.len() == visits.len();
        for (k, &v) in deg2.iter().enumerate() {
            if !(keep_one && k == 0) {
                removable[v] = true;
            }
        }
    }
    if !removable.iter().any(|&r| r) {
        return sys.clone();
    }

    let mut vertex_map: HashMap<usize, usize> = HashMap::new();
    let mut new_vertices: Vec<Vertex> = Vec::new();
    for (vi, v) in sys.vertices.iter().enumerate() {
        if !removable[vi] {
            vertex_map.insert(vi, new_vertices.len());
            new_vertices.push(Vertex {
                name: v.name.clone(),
                darts: Vec::new(),
            });
        }
    }

    // Rebuild each curve as chains of old edges between kept vertices.
    let mut new_edges: Vec<Edge> = Vec::new();
    let mut new_curves: Vec<Curve> = Vec::new();
    let mut dart_map: HashMap<Dart, Dart> = HashMap::new();
    let mut side_map: HashMap<SideDart, SideDart> = HashMap::new();
    for (ci, c) in sys.curves.iter().enumerate() {
        let n = c.edges.len();
        let tail_of = |i: usize| -> usize {
            let (e, d) = c.edges[i];
            match d {
                Dir::Forward => sys.edges[e].from,
                Dir::Backward => sys.edges[e].to,
            }
        };
        let starts: Vec<usize> = (0..n).filter(|&i| !removable[tail_of(i)]).collect();
        assert!(!starts.is_empty(), "every curve keeps a vertex");
        let mut cycle = Vec::new();
        for (k, &s) in starts.iter().enumerate() {
            let end_excl = starts[(k + 1) % starts.len()];
            let mut segs = Vec::new();
            let mut i = s;
            loop {
                segs.push(c.edges[i]);
                i = (i + 1) % n;
                if i == end_excl {
                    break;
                }
            }
            let eid = new_edges.len();
            let (e1, d1) = segs[0];
            let (ek, dk) = *segs.last().unwrap();
            let old_out = Dart {
                edge: e1,
                end: if d1 == Dir::Forward { End::Tail } else { End::Head },
            };
            let old_in = Dart {
                edge: ek,
                end: if dk == Dir::Forward { End::Head } else { End::Tail },
            };
            dart_map.insert(old_out, Dart { edge: eid, end: End::Tail });
            dart_map.insert(old_in, Dart { edge: eid, end: End::Head });
            for &(e, d) in &segs {
                for dir in [Dir::Forward, Dir::Backward] {
                    side_map.insert(
                        SideDart { edge: e, dir },
                        SideDart {
                            edge: eid,
                            dir: if dir == d { Dir::Forward } else { Dir::Backward },
                        },
                    );
                }
            }
            new_edges.push(Edge {
                name: sys.edges[e1].name.clone(),
                curve: ci,
                from: vertex_map[&tail_of(s)],
                to: vertex_map[&tail_of(end_excl)],
            });
            cycle.push((eid, Dir::Forward));
        }
        new_curves.push(Curve {
            name: c.name.clone(),
            edges: cycle,
        });
    }

    for (vi, v) in sys.vertices.iter().enumerate() {
        if let Some(&nv) = vertex_map.get(&vi) {
            new_vertices[nv].darts = v
                .darts
                .iter()
                .map(|d| *dart_map.get(d).expect("kept dart bounds a chain"))
                .collect();
        }
    }

    let regions: Vec<(String, usize, Vec<SideDart>)> = sys
        .regions
        .iter()
        .map(|r| {
            (
                r.name.clone(),
                r.genus,
                r.walks
                    .iter()
                    .map(|&w| side_map[&sys.walks[w].0[0]])
                    .collect(),
            )
        })
        .collect();

    let out = SystemBuilder {
        vertices: new_vertices,
        edges: new_edges,
        curves: new_curves,
        regions,
    }
    .build()
    .expect("smoothing preserves validity");
    debug_assert_eq!(out.ambient_genus(), sys.ambient_genus());
    out
}

/// The subsystem carried by the given curves, with markers smoothed. Kept
/// curves are relabeled in their original relative order.
pub fn restriction(sys: &CurveSystem, keep: &[CurveId]) -> CurveSystem {
    let remove: Vec<CurveId> = (0..sys.curves.len())
        .filter(|c| !keep.contains(c))
        .collect();
    if remove.is_empty() {
        return smooth_markers(sys);
    }
    let deleted = delete_curves(sys, &remove).expect("restriction to a nonempty curve set");
    smooth_markers(&deleted)
}
