//! Template enumeration: three-curve systems (c, fc, ffc) extending the
//! minimal pair configuration of a crossing pair type with a third curve in
//! minimal position, before any handles are attached.

use std::collections::{BTreeMap, HashSet};

use mcg_surface::{
    canonical_key, isomorphic, isotopy_canonical_key, restriction, CurveSystem, EdgeId, IsoPolicy,
};

use crate::diagrams::{enumerate_systems, DiagramSpec, RegionBounds};
use crate::pair::{base_pair, PairType};

/// Ambient genus of the minimal pair configuration for a crossing type.
pub fn template_genus(t: PairType) -> usize {
    match t {
        PairType::II | PairType::IV => 1,
        PairType::III => 2,
        PairType::I => panic!("type I pairs have no crossing model"),
    }
}

/// All templates for a crossing type, sorted by canonical key. Curves are
/// ordered (c, fc, ffc): the inner pairs are (0,1) and (1,2).
///
/// Two drawings describe the same template when they agree on the arc
/// intersection matrix in the surface cut along fc (rows and columns tagged
/// by the boundary circles the arcs attach to) and are connected by triangle
/// moves, i.e. they are the same triple of curves drawn with the same arc
/// decomposition along fc. Each class keeps its minimal-canonical-key
/// drawing.
pub fn enumerate_templates(t: PairType) -> Vec<CurveSystem> {
    let genus = template_genus(t);
    let alg = if t == PairType::IV { 2 } else { 0 };
    let bounds = RegionBounds {
        ambient_genus: Some(genus),
        max_region_genus: 1,
    };
    let policy = IsoPolicy::default();
    let mut dedup: BTreeMap<(Vec<i64>, Vec<i64>), CurveSystem> = BTreeMap::new();
    // The outer pair (c, ffc) is disjoint or crosses twice; when it crosses,
    // its algebraic intersection number may be 0 or 2.
    for outer in [None, Some(0), Some(2)] {
        let mut cp = vec![(0, 1, alg), (1, 2, alg)];
        if let Some(oa) = outer {
            cp.push((0, 2, oa));
        }
        let spec = DiagramSpec {
            n_curves: 3,
            crossing_pairs: cp,
        };
        for s in enumerate_systems(&spec, bounds, |s| is_template(s, t)) {
            let key = (arc_matrix_class(&s), isotopy_canonical_key(&s, policy));
            match dedup.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(s);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    if canonical_key(&s, policy) < canonical_key(e.get(), policy) {
                        e.insert(s);
                    }
                }
            }
        }
    }
    let mut out: Vec<CurveSystem> = dedup.into_values().collect();
    out.sort_by_key(|s| canonical_key(s, policy));
    out
}

/// Canonical form of the arc intersection matrix in the surface cut along fc:
/// entry (i, j) counts crossings between the i-th c-arc and the j-th ffc-arc,
/// with each arc tagged by the pair of boundary circles it attaches to. The
/// code is minimized over renaming the two boundary circles and reordering
/// arcs within each family.
fn arc_matrix_class(s: &CurveSystem) -> Vec<i64> {
    let cut = s.cut_along(1);
    let arcs0 = cut.arcs_of(0);
    let arcs2 = cut.arcs_of(2);
    let arc_of = |arcs: &[mcg_surface::CutArc], edge: usize| -> usize {
        arcs.iter()
            .position(|a| a.edges.iter().any(|&(e, _)| e == edge))
            .expect("curve edge lies on an arc")
    };
    let (n0, n2) = (arcs0.len(), arcs2.len());
    let mut m = vec![vec![0i64; n2]; n0];
    for v in s.crossing_vertices(0, 2) {
        let (d0, _) = s.curve_visit(v, 0).expect("curve c passes v");
        let (d2, _) = s.curve_visit(v, 2).expect("curve ffc passes v");
        m[arc_of(&arcs0, d0.edge)][arc_of(&arcs2, d2.edge)] += 1;
    }
    let ends = |a: &mcg_surface::CutArc| a.ends.unwrap_or((usize::MAX, usize::MAX));
    let relabel = |(x, y): (usize, usize), swap: bool| -> (usize, usize) {
        let f = |c: usize| if swap && c < 2 { 1 - c } else { c };
        let (a, b) = (f(x), f(y));
        (a.min(b), a.max(b))
    };
    let mut best: Option<Vec<i64>> = None;
    for swap_circles in [false, true] {
        let lab0: Vec<(usize, usize)> =
            arcs0.iter().map(|a| relabel(ends(a), swap_circles)).collect();
        let lab2: Vec<(usize, usize)> =
            arcs2.iter().map(|a| relabel(ends(a), swap_circles)).collect();
        for rp in permutations(n0) {
            for cp in permutations(n2) {
                let mut code: Vec<i64> = Vec::new();
                for &i in &rp {
                    code.push(lab0[i].0 as i64);
                    code.push(lab0[i].1 as i64);
                }
                for &j in &cp {
                    code.push(lab2[j].0 as i64);
                    code.push(lab2[j].1 as i64);
                }
                for &i in &rp {
                    for &j in &cp {
                        code.push(m[i][j]);
                    }
                }
                if best.as_ref().map_or(true, |b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    best.expect("matrix class code exists")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Template conditions: the pair (c, fc) realizes the minimal pair
/// configuration of the type, the third curve is nonseparating and all three
/// curves are mod-2 homologous, and for type III the two arcs of ffc in the
/// surface cut along fc are either both separating or both nonseparating.
/// The pairs (fc, ffc) and (c, ffc) need not be in minimal position here;
/// that is repaired when handles are attached.
pub fn is_template_dbg(s: &CurveSystem, t: PairType) -> bool { is_template(s, t) }

fn is_template(s: &CurveSystem, t: PairType) -> bool {
    if s.is_separating(2) {
        return false;
    }
    // The minimal pair picture of each type carries its whole ambient genus
    // in the embedding: every complementary region is planar. Adding the
    // third curve subdivides regions, so templates inherit that property;
    // handles enter only afterwards.
    if s.regions.iter().any(|r| r.genus != 0) {
        return false;
    }
    if !s.mod2_class_equal(&[0], &[1]) || !s.mod2_class_equal(&[1], &[2]) {
        return false;
    }
    let r01 = restriction(s, &[0, 1]);
    if !isomorphic(&r01, base_pair(t), IsoPolicy::default()) {
        return false;
    }
    // In a type II triple the complement of the union of fc and ffc has three
    // components, which forces each arc of ffc in the surface cut along fc to
    // be separating there; a nonseparating arc can never become separating by
    // attaching handles, so the same holds in the template. Likewise every arc
    // of c and ffc in the cut surface connects a boundary circle of the cut to
    // itself, and that arc pattern is inherited because handles never touch
    // the crossings.
    if t == PairType::II {
        // The conditions on the pair (fc, ffc) are symmetric in the two
        // curves, so the cut may be taken along either one.
        if !arcs_sep_flags(s, 2, 1).iter().all(|&x| x)
            || !arcs_sep_flags(s, 1, 2).iter().all(|&x| x)
        {
            return false;
        }
        let cut = s.cut_along(1);
        for x in [0usize, 2] {
            for arc in cut.arcs_of(x) {
                if let Some((a, b)) = arc.ends {
                    if a != b {
                        return false;
                    }
                }
            }
        }
        let cut2 = s.cut_along(2);
        for arc in cut2.arcs_of(1) {
            if let Some((a, b)) = arc.ends {
                if a != b {
                    return false;
                }
            }
        }
        // Arcs of c and ffc attached to different boundary circles of the
        // cut must cross each other an even number of times.
        if !type_ii_parity_ok(s, &cut) {
            return false;
        }
    }
    if t == PairType::III {
        let flags = arcs_sep_flags(s, 2, 1);
        if !(flags.iter().all(|&x| x) || flags.iter().all(|&x| !x)) {
            return false;
        }
    }
    true
}

/// A disk region bounded by one run of `a`-edges and one run of `b`-edges
/// whose closure avoids `cutter` entirely: a removable bigon between an arc
/// of `a` and an arc of `b` in the surface cut along `cutter`.
fn has_cut_bigon(s: &CurveSystem, a: usize, b: usize, cutter: usize) -> bool {
    s.regions.iter().any(|r| {
        if r.genus != 0 || r.walks.len() != 1 {
            return false;
        }
        let sides = &s.walks[r.walks[0]].0;
        let labels: Vec<usize> = sides.iter().map(|sd| s.edges[sd.edge].curve).collect();
        if !(labels.contains(&a) && labels.contains(&b))
            || labels.iter().any(|&l| l != a && l != b)
        {
            return false;
        }
        let m = labels.len();
        let runs = (0..m).filter(|&i| labels[i] != labels[(i + 1) % m]).count();
        if runs != 2 {
            return false;
        }
        // The bigon must stay clear of the cut boundary, even at corners.
        sides.iter().all(|sd| {
            let e = &s.edges[sd.edge];
            !s.vertex_curves(e.from).contains(&cutter)
                && !s.vertex_curves(e.to).contains(&cutter)
        })
    })
}

/// Crossing-parity condition for type II templates: in the surface cut along
/// fc, an arc of c and an arc of ffc whose endpoints lie on different
/// boundary circles of the cut cross an even number of times.
fn type_ii_parity_ok(s: &CurveSystem, cut: &mcg_surface::CutSurface) -> bool {
    let arcs0 = cut.arcs_of(0);
    let arcs2 = cut.arcs_of(2);
    let arc_of = |arcs: &[mcg_surface::CutArc], edge: usize| -> usize {
        arcs.iter()
            .position(|a| a.edges.iter().any(|&(e, _)| e == edge))
            .expect("every curve edge lies on an arc")
    };
    let mut count = vec![vec![0usize; arcs2.len()]; arcs0.len()];
    for v in s.crossing_vertices(0, 2) {
        let (din0, _) = s.curve_visit(v, 0).expect("curve c passes v");
        let (din2, _) = s.curve_visit(v, 2).expect("curve ffc passes v");
        count[arc_of(&arcs0, din0.edge)][arc_of(&arcs2, din2.edge)] += 1;
    }
    for (i, a0) in arcs0.iter().enumerate() {
        for (j, a2) in arcs2.iter().enumerate() {
            let (l0, l2) = (a0.ends.map(|e| e.0), a2.ends.map(|e| e.0));
            if l0 != l2 && count[i][j] % 2 == 1 {
                return false;
            }
        }
    }
    true
}

/// For each arc of ffc (curve 2) in the surface cut along fc (curve 1),
/// whether the arc is separating in the cut surface: cutting along fc
/// together with the arc disconnects the complement further than cutting
/// along fc alone.
pub fn arcs_sep_flags_dbg(s: &CurveSystem, c: usize, cutter: usize) -> Vec<bool> { arcs_sep_flags(s, c, cutter) }

fn arcs_sep_flags(s: &CurveSystem, c: usize, cutter: usize) -> Vec<bool> {
    let fc_edges: HashSet<EdgeId> = s.curves[cutter]
        .edges
        .iter()
        .map(|&(e, _)| e)
        .collect();
    let base_comps = s.complement_components_by_edges(&fc_edges).len();
    let arcs = arcs_of_curve(s, c, cutter);
    let mut separating = Vec::new();
    for arc in arcs {
        let mut cut = fc_edges.clone();
        cut.extend(arc.iter().copied());
        let comps = s.complement_components_by_edges(&cut).len();
        separating.push(comps > base_comps);
    }
    separating
}

/// Maximal edge-runs of `c` between its crossings with `cutter`. Crossings
/// with other curves do not break an arc.
fn arcs_of_curve(s: &CurveSystem, c: usize, cutter: usize) -> Vec<Vec<EdgeId>> {
    let edges = &s.curves[c].edges;
    let n = edges.len();
    // Break points: positions whose edge *starts* at a crossing with cutter.
    let is_break = |i: usize| -> bool {
        let (e, dir) = edges[i];
        let v = match dir {
            mcg_surface::Dir::Forward => s.edges[e].from,
            mcg_surface::Dir::Backward => s.edges[e].to,
        };
        s.vertices[v].darts.len() == 4 && s.vertex_curves(v).contains(&cutter)
    };
    let starts: Vec<usize> = (0..n).filter(|&i| is_break(i)).collect();
    if starts.is_empty() {
        return vec![edges.iter().map(|&(e, _)| e).collect()];
    }
    let mut arcs = Vec::new();
    for (k, &st) in starts.iter().enumerate() {
        let end = starts[(k + 1) % starts.len()];
        let mut arc = Vec::new();
        let mut i = st;
        loop {
            arc.push(edges[i].0);
            i = (i + 1) % n;
            if i == end {
                break;
            }
        }
        arcs.push(arc);
    }
    arcs
}
