//! From templates to minimal configurations: attach handle sets to each
//! template, keep the results that are genuine triples of the type, and
//! reduce to the minima of the stabilization partial order.

use std::collections::{BTreeMap, BTreeSet};

use mcg_surface::{
    add_handle, canonical_key, isotopy_canonical_key, isotopy_orbit, CurveSystem, IsoPolicy,
    RegionId,
};

use crate::diagrams::{enumerate_systems, DiagramSpec, RegionBounds};
use crate::pair::{classify_triple, PairType};
use crate::templates::enumerate_templates;

/// All minimal configurations of ordered triples of the given type.
///
/// Configurations are counted per template: each template contributes the
/// minima of its own handle closure, and the per-template lists are
/// concatenated in template order. Two configurations are the same when they
/// are connected by triangle moves (the same triple of isotopy classes drawn
/// differently), and one is a stabilization of another when adding handles
/// inside regions of some drawing of the latter yields a drawing of the
/// former.
pub fn enumerate_minimal_triples(t: PairType) -> Vec<CurveSystem> {
    match t {
        PairType::I => minima(type_i_candidates(), t),
        _ => {
            let mut out = Vec::new();
            for template in enumerate_templates(t) {
                out.extend(minima(handle_closure_dbg(&template, t), t));
            }
            out
        }
    }
}

/// Type I triples have no crossing model between consecutive pairs; the outer
/// pair is disjoint or crosses twice. Enumerate both diagrams directly over
/// all consistent ambient genera with per-region genus at most one; minimal
/// configurations never need more.
fn type_i_candidates() -> Vec<CurveSystem> {
    let bounds = RegionBounds {
        ambient_genus: None,
        max_region_genus: 1,
    };
    let mut out = Vec::new();
    for cp in [vec![], vec![(0, 2, 0)], vec![(0, 2, 2)]] {
        let spec = DiagramSpec {
            n_curves: 3,
            crossing_pairs: cp,
        };
        out.extend(enumerate_systems(&spec, bounds, |s| {
            classify_triple(s, 0, 1, 2) == Some(PairType::I)
        }));
    }
    out
}

/// All valid triples reachable from one template by a handle set: a set of
/// unordered region pairs, where a self pair {R, R} is allowed only for
/// regions inside a bigon or annulus bounded by two of the curves
/// (minimality condition), and a cross pair must keep all three curves mod-2
/// homologous (checkerboard condition: equal colors in the two-coloring of
/// each curve pair). For type II a cross pair must additionally stay within a
/// single complement component of each inner pair union, and for type III a
/// three-component middle-pair complement forces the handle set to contain a
/// pair spanning its two non-adjacent components.
pub fn handle_closure_dbg(template: &CurveSystem, t: PairType) -> Vec<CurveSystem> {
    let n = template.regions.len();

    let self_ok = bigon_annulus_regions(template);
    let colorings: Vec<Vec<bool>> = [(0, 1), (1, 2), (0, 2)]
        .iter()
        .map(|&(a, b)| {
            template
                .region_two_coloring(&[a, b])
                .expect("template curves are pairwise mod-2 homologous")
        })
        .collect();
    let comp01 = pair_components(template, 0, 1);
    let comp12 = pair_components(template, 1, 2);

    let mut handles: Vec<(RegionId, RegionId)> = Vec::new();
    for r in 0..n {
        if self_ok[r] {
            handles.push((r, r));
        }
    }
    for r1 in 0..n {
        for r2 in r1 + 1..n {
            if !colorings.iter().all(|col| col[r1] == col[r2]) {
                continue;
            }
            // Type II condition: both inner pair unions already cut the
            // surface into three components, and a triple of type II needs
            // exactly three, so a handle may not join distinct components of
            // either union.
            if t == PairType::II
                && (comp01.comp[r1] != comp01.comp[r2] || comp12.comp[r1] != comp12.comp[r2])
            {
                continue;
            }
            handles.push((r1, r2));
        }
    }

    // Type III condition: when the middle pair union has three complement
    // components, the triple needs a handle joining the two non-adjacent
    // ones to bring the component count down to two.
    let required_span: Option<(usize, usize)> = (t == PairType::III
        && comp12.n_comps == 3)
        .then(|| comp12.nonadjacent_pair())
        .flatten();

    let run_subset = |mask: usize| -> Option<CurveSystem> {
        let chosen: Vec<(RegionId, RegionId)> = (0..handles.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| handles[i])
            .collect();
        if let Some((ca, cb)) = required_span {
            let spans = chosen.iter().any(|&(r1, r2)| {
                let (x, y) = (comp12.comp[r1], comp12.comp[r2]);
                (x, y) == (ca, cb) || (x, y) == (cb, ca)
            });
            if !spans {
                return None;
            }
        }
        let sys = apply_handles(template, &chosen);
        (classify_triple(&sys, 0, 1, 2) == Some(t)).then_some(sys)
    };

    let total = 1usize << handles.len();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..total).into_par_iter().filter_map(run_subset).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..total).filter_map(run_subset).collect()
    }
}

/// Attach handles to a template, naming regions of the current system by a
/// representative boundary walk of the original region (walk indices are
/// stable under handle attachment even when regions merge).
fn apply_handles(template: &CurveSystem, handles: &[(RegionId, RegionId)]) -> CurveSystem {
    let rep: Vec<usize> = template.regions.iter().map(|r| r.walks[0]).collect();
    let mut sys = template.clone();
    for &(r1, r2) in handles {
        let find = |sys: &CurveSystem, orig: RegionId| -> RegionId {
            sys.regions
                .iter()
                .position(|r| r.walks.contains(&rep[orig]))
                .expect("region representative walk survives handle moves")
        };
        let a = find(&sys, r1);
        let b = find(&sys, r2);
        sys = add_handle(&sys, a, b);
    }
    sys
}

/// Complement components of the union of one curve pair, as a labeling of
/// the full system's regions, with adjacency along the pair's arcs.
struct PairComponents {
    comp: Vec<usize>,
    n_comps: usize,
    adjacent: Vec<Vec<bool>>,
}

impl PairComponents {
    /// The unique unordered pair of components not sharing an arc, if any.
    fn nonadjacent_pair(&self) -> Option<(usize, usize)> {
        let mut found = None;
        for a in 0..self.n_comps {
            for b in a + 1..self.n_comps {
                if !self.adjacent[a][b] {
                    if found.is_some() {
                        return None;
                    }
                    found = Some((a, b));
                }
            }
        }
        found
    }
}

fn pair_components(sys: &CurveSystem, a: usize, b: usize) -> PairComponents {
    let profile = sys.cut_profile(&[a, b]);
    let mut comp = vec![usize::MAX; sys.regions.len()];
    for (ci, c) in profile.components.iter().enumerate() {
        for &r in &c.regions {
            comp[r] = ci;
        }
    }
    let n_comps = profile.components.len();
    let mut adjacent = vec![vec![false; n_comps]; n_comps];
    for (e, edge) in sys.edges.iter().enumerate() {
        if edge.curve != a && edge.curve != b {
            continue;
        }
        let left = sys.side_region(mcg_surface::SideDart {
            edge: e,
            dir: mcg_surface::Dir::Forward,
        });
        let right = sys.side_region(mcg_surface::SideDart {
            edge: e,
            dir: mcg_surface::Dir::Backward,
        });
        let (ca, cb) = (comp[left], comp[right]);
        adjacent[ca][cb] = true;
        adjacent[cb][ca] = true;
    }
    PairComponents {
        comp,
        n_comps,
        adjacent,
    }
}

/// Regions lying in a component of the complement of some curve pair that is
/// a bigon (disk bounded by one arc of each curve) or an annulus bounded by
/// one copy of each curve.
pub fn bigon_annulus_regions(sys: &CurveSystem) -> Vec<bool> {
    let mut ok = vec![false; sys.regions.len()];
    for comp in bigon_annulus_components(sys) {
        for r in comp {
            ok[r] = true;
        }
    }
    ok
}

/// Region sets of the bigon and annulus complement components over all three
/// curve pairs.
fn bigon_annulus_components(sys: &CurveSystem) -> Vec<Vec<RegionId>> {
    let mut out = Vec::new();
    for (a, b) in [(0usize, 1usize), (1, 2), (0, 2)] {
        let profile = sys.cut_profile(&[a, b]);
        for comp in &profile.components {
            if comp.genus != 0 {
                continue;
            }
            let eligible = match comp.circles.len() {
                1 => {
                    // Bigon: one boundary circle alternating once between the
                    // two curves.
                    let circle = &profile.circles[comp.circles[0]];
                    comp.chi == 1 && {
                        let labels: Vec<usize> = circle
                            .sides
                            .iter()
                            .map(|s| sys.edges[s.edge].curve)
                            .collect();
                        let m = labels.len();
                        let runs =
                            (0..m).filter(|&i| labels[i] != labels[(i + 1) % m]).count();
                        runs == 2 && labels.contains(&a) && labels.contains(&b)
                    }
                }
                2 => {
                    // Annulus between one copy of each curve.
                    comp.chi == 0 && {
                        let c0 = &profile.circles[comp.circles[0]].curves;
                        let c1 = &profile.circles[comp.circles[1]].curves;
                        (c0.as_slice() == [a] && c1.as_slice() == [b])
                            || (c0.as_slice() == [b] && c1.as_slice() == [a])
                    }
                }
                _ => false,
            };
            if eligible {
                out.push(comp.regions.clone());
            }
        }
    }
    out
}

/// Deduplicate configurations up to triangle moves and label-preserving
/// homeomorphism, then keep the minima of the stabilization partial order.
///
/// A stabilization attaches handles inside single complementary regions, so
/// one configuration stabilizes another exactly when distributing the genus
/// difference over the regions of some drawing of the smaller one reproduces
/// a drawing of the larger one.
fn minima(candidates: Vec<CurveSystem>, t: PairType) -> Vec<CurveSystem> {
    let policy = IsoPolicy::default();
    // One representative per isotopy class: the minimal-canonical-key drawing.
    let mut classes: BTreeMap<Vec<i64>, CurveSystem> = BTreeMap::new();
    for s in candidates {
        debug_assert_eq!(classify_triple(&s, 0, 1, 2), Some(t));
        let ikey = isotopy_canonical_key(&s, policy);
        match classes.entry(ikey) {
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
    let reps: Vec<CurveSystem> = classes.into_values().collect();
    let orbits: Vec<Vec<CurveSystem>> = reps
        .iter()
        .map(|s| isotopy_orbit(s, policy))
        .collect();
    let orbit_keys: Vec<BTreeSet<Vec<i64>>> = orbits
        .iter()
        .map(|o| o.iter().map(|s| canonical_key(s, policy)).collect())
        .collect();
    let genus: Vec<usize> = reps.iter().map(|s| s.ambient_genus()).collect();

    // dominated[i]: configuration i is a proper stabilization of some j.
    let dominated = |i: usize| -> bool {
        (0..reps.len()).any(|j| {
            if j == i || genus[i] <= genus[j] {
                return false;
            }
            let d = genus[i] - genus[j];
            orbits[j].iter().any(|z| {
                genus_distributions(z.regions.len(), d).iter().any(|dist| {
                    let mut b = z.to_builder();
                    for (r, &g) in dist.iter().enumerate() {
                        b.regions[r].1 += g;
                    }
                    let bumped = b.build().expect("genus bump preserves validity");
                    orbit_keys[i].contains(&canonical_key(&bumped, policy))
                })
            })
        })
    };
    let mut out: Vec<CurveSystem> = (0..reps.len())
        .filter(|&i| !dominated(i))
        .map(|i| reps[i].clone())
        .collect();
    out.sort_by_key(|s| canonical_key(s, policy));
    out
}

/// All ways to distribute `total` extra genus over `n` regions.
fn genus_distributions(n: usize, total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn go(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for g in 0..=left {
            cur[i] = g;
            go(i + 1, left - g, cur, out);
        }
    }
    if n == 0 {
        return out;
    }
    go(0, total, &mut cur, &mut out);
    out
}
