// Diagnostic: per template, list the minima iso classes of the handle
// closure WITHOUT any cross-handle ban, each with all realizing handle sets
// (of minimal size), and flag which handles are "same bigon/annulus" pairs.
use mcg_classifier::{
    bigon_annulus_regions_dbg, classify_triple, enumerate_templates, PairType,
};
use mcg_surface::{
    add_handle, canonical_key, isotopy_canonical_key, isotopy_orbit, CurveSystem, IsoPolicy,
    RegionId,
};
use std::collections::{BTreeMap, BTreeSet};

fn apply_handles(template: &CurveSystem, handles: &[(RegionId, RegionId)]) -> CurveSystem {
    let rep: Vec<usize> = template.regions.iter().map(|r| r.walks[0]).collect();
    let mut sys = template.clone();
    for &(r1, r2) in handles {
        let find = |sys: &CurveSystem, orig: RegionId| -> RegionId {
            sys.regions
                .iter()
                .position(|r| r.walks.contains(&rep[orig]))
                .unwrap()
        };
        let a = find(&sys, r1);
        let b = find(&sys, r2);
        sys = add_handle(&sys, a, b);
    }
    sys
}

fn main() {
    let pol = IsoPolicy::default();
    let args: Vec<String> = std::env::args().collect();
    let t = match args[1].as_str() {
        "II" => PairType::II,
        "III" => PairType::III,
        _ => PairType::IV,
    };
    let which: usize = args[2].parse().unwrap();
    let tmpl = &enumerate_templates(t)[which];
    let n = tmpl.regions.len();
    let self_ok = bigon_annulus_regions_dbg(tmpl);
    let colorings: Vec<Vec<bool>> = [(0usize, 1usize), (1, 2), (0, 2)]
        .iter()
        .map(|&(a, b)| tmpl.region_two_coloring(&[a, b]).unwrap())
        .collect();
    let mut handles: Vec<(RegionId, RegionId)> = Vec::new();
    for r in 0..n {
        if self_ok[r] {
            handles.push((r, r));
        }
    }
    for r1 in 0..n {
        for r2 in r1 + 1..n {
            if colorings.iter().all(|c| c[r1] == c[r2]) {
                handles.push((r1, r2));
            }
        }
    }
    println!("template {which}: {n} regions, self-ok {:?}", (0..n).filter(|&r| self_ok[r]).collect::<Vec<_>>());
    println!("candidate handles: {handles:?}");
    // bigon/annulus component groupings
    for (a, b) in [(0usize, 1usize), (1, 2), (0, 2)] {
        let prof = tmpl.cut_profile(&[a, b]);
        for c in &prof.components {
            println!("  pair ({a},{b}) comp chi={} genus={} circles={} regions={:?}", c.chi, c.genus, c.circles.len(), c.regions);
        }
    }
    // enumerate all subsets, keep valid triples with handle sets
    let mut by_class: BTreeMap<Vec<i64>, (CurveSystem, Vec<Vec<(usize, usize)>>)> = BTreeMap::new();
    for mask in 0..1usize << handles.len() {
        let chosen: Vec<(RegionId, RegionId)> = (0..handles.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| handles[i])
            .collect();
        let sys = apply_handles(tmpl, &chosen);
        if classify_triple(&sys, 0, 1, 2) != Some(t) {
            continue;
        }
        let k = isotopy_canonical_key(&sys, pol);
        by_class.entry(k).or_insert_with(|| (sys, Vec::new())).1.push(chosen);
    }
    // minima over iso classes via bump-orbit domination
    let reps: Vec<&CurveSystem> = by_class.values().map(|(s, _)| s).collect();
    let orbits: Vec<Vec<CurveSystem>> = reps.iter().map(|s| isotopy_orbit(s, pol)).collect();
    let okeys: Vec<BTreeSet<Vec<i64>>> = orbits
        .iter()
        .map(|o| o.iter().map(|s| canonical_key(s, pol)).collect())
        .collect();
    let genus: Vec<usize> = reps.iter().map(|s| s.ambient_genus()).collect();
    let m = reps.len();
    let dominated: Vec<bool> = (0..m)
        .map(|i| {
            (0..m).any(|j| {
                if j == i || genus[i] <= genus[j] {
                    return false;
                }
                let d = genus[i] - genus[j];
                orbits[j].iter().any(|z| {
                    dists(z.regions.len(), d).iter().any(|dist| {
                        let mut b = z.to_builder();
                        for (r, &g) in dist.iter().enumerate() {
                            b.regions[r].1 += g;
                        }
                        okeys[i].contains(&canonical_key(&b.build().unwrap(), pol))
                    })
                })
            })
        })
        .collect();
    for (i, (k, (_s, sets))) in by_class.iter().enumerate() {
        if dominated[i] {
            continue;
        }
        let minsz = sets.iter().map(|s| s.len()).min().unwrap();
        let small: Vec<&Vec<(usize, usize)>> =
            sets.iter().filter(|s| s.len() == minsz).collect();
        println!(
            "MIN class {i} genus {} keyhash {:x} handle sets (min size {minsz}): {:?}",
            genus[i],
            k.iter().fold(0u64, |a, &x| a.wrapping_mul(31).wrapping_add(x as u64)) & 0xffff,
            small
        );
    }
}

fn dists(n: usize, total: usize) -> Vec<Vec<usize>> {
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
    if n > 0 {
        go(0, total, &mut cur, &mut out);
    }
    out
}
