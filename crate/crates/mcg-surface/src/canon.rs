//! Canonical forms, isomorphism and the stabilization partial order.
//!
//! Canonical form is the minimum lexicographic encoding over all seed darts
//! (and over global reflection when the policy allows it). Curve labels are
//! matched by position, so isomorphism is label-preserving on the ordered
//! curve list; individual curve orientations are ignored.

use crate::system::{CurveSystem, Dart, Dir, End, SideDart};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoPolicy {
    pub allow_reflection: bool,
}

impl Default for IsoPolicy {
    fn default() -> Self {
        IsoPolicy {
            allow_reflection: true,
        }
    }
}

fn all_darts(sys: &CurveSystem) -> Vec<Dart> {
    (0..sys.edges.len())
        .flat_map(|e| {
            [
                Dart { edge: e, end: End::Tail },
                Dart { edge: e, end: End::Head },
            ]
        })
        .collect()
}

fn opposite(d: Dart) -> Dart {
    Dart {
        edge: d.edge,
        end: match d.end {
            End::Tail => End::Head,
            End::Head => End::Tail,
        },
    }
}

/// Region on the right of arrival through dart `d`; under reflection the
/// roles of the two sides swap.
fn region_of_dart(sys: &CurveSystem, d: Dart, reflect: bool) -> usize {
    let dir = match (d.end, reflect) {
        (End::Head, false) | (End::Tail, true) => Dir::Forward,
        (End::Tail, false) | (End::Head, true) => Dir::Backward,
    };
    sys.side_region(SideDart { edge: d.edge, dir })
}

/// Encoding from one seed: structural part and the region genus vector in
/// canonical region order.
fn encode(sys: &CurveSystem, seed: Dart, reflect: bool) -> (Vec<i64>, Vec<i64>) {
    let mut num: std::collections::HashMap<Dart, usize> = std::collections::HashMap::new();
    let mut order: Vec<Dart> = Vec::new();
    num.insert(seed, 0);
    order.push(seed);
    let mut qi = 0;
    while qi < order.len() {
        let d = order[qi];
        qi += 1;
        let rot = if reflect {
            sys.cw_next(d)
        } else {
            sys.ccw_next(d)
        };
        for n in [rot, opposite(d)] {
            if !num.contains_key(&n) {
                num.insert(n, order.len());
                order.push(n);
            }
        }
    }
    let mut code: Vec<i64> = Vec::with_capacity(order.len() * 3 + sys.regions.len() * 4);
    for &d in &order {
        let rot = if reflect {
            sys.cw_next(d)
        } else {
            sys.ccw_next(d)
        };
        code.push(num[&rot] as i64);
        code.push(num[&opposite(d)] as i64);
        code.push(sys.edges[d.edge].curve as i64);
    }
    // Region partition: group renumbered darts by region, order regions by
    // their minimal dart number.
    let mut by_region: Vec<Vec<i64>> = vec![Vec::new(); sys.regions.len()];
    for &d in &order {
        by_region[region_of_dart(sys, d, reflect)].push(num[&d] as i64);
    }
    let mut regions: Vec<(Vec<i64>, i64)> = by_region
        .into_iter()
        .enumerate()
        .map(|(ri, mut v)| {
            v.sort_unstable();
            (v, sys.regions[ri].genus as i64)
        })
        .collect();
    regions.sort();
    let mut genus_vec = Vec::with_capacity(regions.len());
    for (darts, genus) in regions {
        code.push(-1);
        code.extend(darts);
        genus_vec.push(genus);
    }
    (code, genus_vec)
}

fn reflect_options(policy: IsoPolicy) -> &'static [bool] {
    if policy.allow_reflection {
        &[false, true]
    } else {
        &[false]
    }
}

/// Canonical key: minimum (structure, genus) encoding over all seeds.
pub fn canonical_key(sys: &CurveSystem, policy: IsoPolicy) -> Vec<i64> {
    let mut best: Option<Vec<i64>> = None;
    for &reflect in reflect_options(policy) {
        for seed in all_darts(sys) {
            let (mut code, genus) = encode(sys, seed, reflect);
            code.push(-2);
            code.extend(genus);
            if best.as_ref().map_or(true, |b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.expect("system has at least one edge")
}

/// Label-preserving isomorphism of the full structure, with global
/// orientation reversal allowed per policy.
pub fn isomorphic(s1: &CurveSystem, s2: &CurveSystem, policy: IsoPolicy) -> bool {
    s1.curves.len() == s2.curves.len()
        && s1.edges.len() == s2.edges.len()
        && s1.regions.len() == s2.regions.len()
        && canonical_key(s1, policy) == canonical_key(s2, policy)
}

fn structural_encodings(sys: &CurveSystem, policy: IsoPolicy) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut out = Vec::new();
    for &reflect in reflect_options(policy) {
        for seed in all_darts(sys) {
            out.push(encode(sys, seed, reflect));
        }
    }
    out
}

/// Precomputed data deciding stabilization comparisons: the minimal
/// structural encoding together with every genus vector attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabProfile {
    pub sizes: (usize, usize, usize),
    pub min_struct: Vec<i64>,
    pub genus_vecs: Vec<Vec<i64>>,
}

pub fn stabilization_profile(sys: &CurveSystem, policy: IsoPolicy) -> StabProfile {
    let enc = structural_encodings(sys, policy);
    let min_struct = enc.iter().map(|(s, _)| s).min().expect("nonempty").clone();
    let genus_vecs = enc
        .iter()
        .filter(|(s, _)| *s == min_struct)
        .map(|(_, g)| g.clone())
        .collect();
    StabProfile {
        sizes: (sys.curves.len(), sys.edges.len(), sys.regions.len()),
        min_struct,
        genus_vecs,
    }
}

/// `a` is a stabilization of `b` (same structure, pointwise at least the
/// genus somewhere among the minimal encodings).
pub fn profile_stabilizes(a: &StabProfile, b: &StabProfile) -> bool {
    a.sizes == b.sizes
        && a.min_struct == b.min_struct
        && a.genus_vecs.iter().any(|x| {
            b.genus_vecs
                .iter()
                .any(|y| x.iter().zip(y.iter()).all(|(p, q)| p >= q))
        })
}

/// True iff `sys1` is obtained from `sys2` by adding handles within regions:
/// an isomorphism of the underlying labeled structure exists under which
/// every region genus of `sys1` is at least the corresponding genus of
/// `sys2`.
pub fn is_stabilization_of(sys1: &CurveSystem, sys2: &CurveSystem, policy: IsoPolicy) -> bool {
    if sys1.curves.len() != sys2.curves.len()
        || sys1.edges.len() != sys2.edges.len()
        || sys1.regions.len() != sys2.regions.len()
    {
        return false;
    }
    let enc1 = structural_encodings(sys1, policy);
    let enc2 = structural_encodings(sys2, policy);
    let min_struct = enc1
        .iter()
        .map(|(s, _)| s)
        .min()
        .expect("nonempty")
        .clone();
    if enc2.iter().map(|(s, _)| s).min() != Some(&min_struct) {
        return false;
    }
    let g1: Vec<&Vec<i64>> = enc1
        .iter()
        .filter(|(s, _)| *s == min_struct)
        .map(|(_, g)| g)
        .collect();
    let g2: Vec<&Vec<i64>> = enc2
        .iter()
        .filter(|(s, _)| *s == min_struct)
        .map(|(_, g)| g)
        .collect();
    g1.iter().any(|a| {
        g2.iter()
            .any(|b| a.iter().zip(b.iter()).all(|(x, y)| x >= y))
    })
}
