// Verify the status of the extra type IV classes: are they distinct from the
// eight expected classes, and are they stabilizations of the genus-2 class?
use mcg_classifier::{classify_triple, enumerate_templates, PairType};
use mcg_surface::{
    add_handle, canonical_key, isotopy_canonical_key, isotopy_orbit, CurveSystem, IsoPolicy,
    RegionId,
};
use std::collections::BTreeSet;

fn apply(template: &CurveSystem, handles: &[(RegionId, RegionId)]) -> CurveSystem {
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
    let t = PairType::IV;
    let tm = enumerate_templates(t);
    let t1 = &tm[1];
    let mk = |tmpl: &CurveSystem, hs: &[(usize, usize)]| -> CurveSystem {
        let s = apply(tmpl, hs);
        assert_eq!(classify_triple(&s, 0, 1, 2), Some(t));
        s
    };
    let be52 = mk(t1, &[(3, 3), (0, 4)]);
    let dec2 = mk(t1, &[(0, 4), (3, 5)]);
    let ec3f = mk(t1, &[(3, 5)]);
    let t2 = &tm[2];
    let ba27 = mk(t2, &[(1, 4), (2, 5)]);

    println!("be52 genus {}", be52.ambient_genus());
    let okeys = |s: &CurveSystem| -> BTreeSet<Vec<i64>> {
        isotopy_orbit(s, pol)
            .iter()
            .map(|z| canonical_key(z, pol))
            .collect()
    };
    let o_ec3f = isotopy_orbit(&ec3f, pol);
    println!("orbit sizes: ec3f {} be52 {} dec2 {} ba27 {}",
        o_ec3f.len(),
        isotopy_orbit(&be52, pol).len(),
        isotopy_orbit(&dec2, pol).len(),
        isotopy_orbit(&ba27, pol).len());
    // all 1-bumps of all ec3f drawings
    let mut bump_keys: BTreeSet<Vec<i64>> = BTreeSet::new();
    for z in &o_ec3f {
        for r in 0..z.regions.len() {
            let mut b = z.to_builder();
            b.regions[r].1 += 1;
            bump_keys.insert(isotopy_canonical_key(&b.build().unwrap(), pol));
        }
    }
    println!("distinct 1-bump iso classes of ec3f: {}", bump_keys.len());
    for (name, s) in [("be52", &be52), ("dec2", &dec2), ("ba27", &ba27)] {
        println!(
            "{name}: is 1-bump of ec3f: {}",
            bump_keys.contains(&isotopy_canonical_key(s, pol))
        );
    }
    // compare against the eight expected classes (t0 2, shared 3 via t2 sets,
    // and the three extras themselves)
    let eight: Vec<(&str, CurveSystem)> = vec![
        ("t0a", mk(&tm[0], &[(0, 0), (1, 1)])),
        ("t0b", mk(&tm[0], &[(1, 1), (2, 2)])),
        ("s207c", mk(t2, &[(1, 1), (2, 2)])),
        ("s37de", mk(t2, &[(1, 1), (4, 4)])),
        ("sec3f", mk(t2, &[(1, 4)])),
    ];
    for (name, s) in &eight {
        for (xn, x) in [("be52", &be52), ("dec2", &dec2), ("ba27", &ba27)] {
            if isotopy_canonical_key(s, pol) == isotopy_canonical_key(x, pol) {
                println!("{xn} == {name} !");
            }
        }
    }
    let _ = okeys;
    println!("done");
}
