use mcg_classifier::{enumerate_templates, handle_closure_dbg, PairType};
use mcg_surface::{canonical_key, isotopy_canonical_key, isotopy_orbit, IsoPolicy};
use std::collections::{BTreeMap, BTreeSet};

fn main() {
    let pol = IsoPolicy::default();
    for t in [PairType::II, PairType::III, PairType::IV] {
        println!("== type {t} ==");
        // Per template: iso classes of the closure with min handle count
        // (handle count = ambient genus - template genus per handle... use
        // number of handles recorded via closure enumeration order is lost;
        // recompute: closure returns systems; handle count = (ambient genus
        // of config) - (ambient genus of template)? self handle adds 1
        // ambient genus, cross handle adds 1 too. So #handles = genus diff.)
        let tmpls = enumerate_templates(t);
        let tg = tmpls[0].ambient_genus();
        // per-template minima as before
        let mut per: Vec<Vec<(Vec<i64>, usize)>> = Vec::new(); // (iso key, genus)
        for tmpl in &tmpls {
            let mut classes: BTreeMap<Vec<i64>, mcg_surface::CurveSystem> = BTreeMap::new();
            for s in handle_closure_dbg(tmpl, t) {
                classes.entry(isotopy_canonical_key(&s, pol)).or_insert(s);
            }
            let reps: Vec<mcg_surface::CurveSystem> = classes.into_values().collect();
            let orbits: Vec<Vec<mcg_surface::CurveSystem>> =
                reps.iter().map(|s| isotopy_orbit(s, pol)).collect();
            let okeys: Vec<BTreeSet<Vec<i64>>> = orbits
                .iter()
                .map(|o| o.iter().map(|s| canonical_key(s, pol)).collect())
                .collect();
            let genus: Vec<usize> = reps.iter().map(|s| s.ambient_genus()).collect();
            let alive: Vec<(Vec<i64>, usize)> = (0..reps.len())
                .filter(|&i| {
                    !(0..reps.len()).any(|j| {
                        if i == j || genus[i] <= genus[j] {
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
                .map(|i| (isotopy_canonical_key(&reps[i], pol), genus[i]))
                .collect();
            per.push(alive);
        }
        // Global min genus per class.
        let mut ming: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for v in &per {
            for (k, g) in v {
                let e = ming.entry(k.clone()).or_insert(*g);
                *e = (*e).min(*g);
            }
        }
        let counts: Vec<usize> = per
            .iter()
            .map(|v| v.iter().filter(|(k, g)| *g == ming[k]).count())
            .collect();
        println!(
            "template genus {tg}; per-template minima {:?} sum {}; min-genus-filtered {:?} sum {}",
            per.iter().map(|v| v.len()).collect::<Vec<_>>(),
            per.iter().map(|v| v.len()).sum::<usize>(),
            counts,
            counts.iter().sum::<usize>()
        );
        // Also print genus spectra per template per class.
        for (ti, v) in per.iter().enumerate() {
            println!(
                "  template {ti}: genera {:?} (global min {:?})",
                v.iter().map(|(_, g)| g).collect::<Vec<_>>(),
                v.iter().map(|(k, _)| ming[k]).collect::<Vec<_>>()
            );
        }
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
