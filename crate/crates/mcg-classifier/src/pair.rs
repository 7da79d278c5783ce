//! Classification of curve pairs and triples by their intersection pattern.

use std::sync::OnceLock;

use mcg_surface::{
    canonical_key, integrally_homologous, is_stabilization_of, restriction, CurveId, CurveSystem,
    IsoPolicy, PairChart,
};

use crate::diagrams::{enumerate_systems, DiagramSpec, RegionBounds};

/// The four pair types, by crossing number, algebraic intersection number and
/// the complement of the union:
/// * I — disjoint, integrally homologous (bounding pair),
/// * II — two crossings cancelling algebraically, union complement has three
///   components,
/// * III — two crossings cancelling algebraically, union complement has two
///   components,
/// * IV — two crossings of the same sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairType {
    I,
    II,
    III,
    IV,
}

impl PairType {
    pub const ALL: [PairType; 4] = [PairType::I, PairType::II, PairType::III, PairType::IV];

    pub fn name(self) -> &'static str {
        match self {
            PairType::I => "I",
            PairType::II => "II",
            PairType::III => "III",
            PairType::IV => "IV",
        }
    }
}

impl std::fmt::Display for PairType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Type of the (unordered) pair of nonseparating curves, or `None` when the
/// pair is separating, not in minimal position, homotopic, not mod-2
/// homologous, or crosses other than 0 or 2 times.
///
/// The test runs on the two-curve restriction of the system, so bigons and
/// annuli subdivided by further curves are still detected.
pub fn classify_pair(sys: &CurveSystem, c1: CurveId, c2: CurveId) -> Option<PairType> {
    if c1 == c2 {
        return None;
    }
    let r = restriction(sys, &[c1.min(c2), c1.max(c2)]);
    if r.is_separating(0) || r.is_separating(1) {
        return None;
    }
    let chart = PairChart::compute(&r, 0, 1);
    if !chart.mod2_equal || !chart.bigons.is_empty() {
        return None;
    }
    match chart.crossings {
        0 => {
            if chart.homotopic {
                None
            } else if chart.bounding_pair {
                Some(PairType::I)
            } else {
                None
            }
        }
        2 => {
            let t = match (
                chart.algebraic,
                chart.union_components,
                integrally_homologous(&r, 0, 1),
            ) {
                (2, _, _) => Some(PairType::IV),
                (0, 3, true) => Some(PairType::II),
                (0, 2, false) => Some(PairType::III),
                _ => None,
            }?;
            // A pair carries a type only when it really is a stabilization of
            // the minimal two-curve picture of that type: the complement must
            // have the picture's walk structure with at least its genus, not
            // merely the right number of components.
            is_stabilization_of(&r, standard_pair(t), IsoPolicy::default()).then_some(t)
        }
        _ => None,
    }
}

/// Common type of the triple (c, fc, ffc): the pairs (c, fc) and (fc, ffc)
/// must share a type, the outer pair (c, ffc) must itself have some type, and
/// all three curves must be mod-2 homologous.
pub fn classify_triple(
    sys: &CurveSystem,
    c: CurveId,
    fc: CurveId,
    ffc: CurveId,
) -> Option<PairType> {
    if c == fc || fc == ffc || c == ffc {
        return None;
    }
    let t = classify_pair(sys, c, fc)?;
    if classify_pair(sys, fc, ffc)? != t {
        return None;
    }
    classify_pair(sys, c, ffc)?;
    if !sys.mod2_class_equal(&[c], &[fc]) || !sys.mod2_class_equal(&[fc], &[ffc]) {
        return None;
    }
    Some(t)
}

/// The minimal two-curve configuration realizing a crossing pair type, derived
/// by exhausting all two-curve diagrams on the smallest admissible surface.
/// Type I has no crossing model and is not covered here.
pub fn base_pair(t: PairType) -> &'static CurveSystem {
    static CACHE: OnceLock<[CurveSystem; 3]> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        [
            derive_base_pair(PairType::II),
            derive_base_pair(PairType::III),
            derive_base_pair(PairType::IV),
        ]
    });
    match t {
        PairType::I => panic!("type I pairs have no crossing model"),
        PairType::II => &cache[0],
        PairType::III => &cache[1],
        PairType::IV => &cache[2],
    }
}

/// The minimal two-curve configuration of a crossing type that is in minimal
/// position: every pair of that type is a stabilization of it. For types III
/// and IV this is the base diagram itself; the type II base diagram contains
/// two bigon disks, which the minimal-position picture fills with one handle
/// each.
pub fn standard_pair(t: PairType) -> &'static CurveSystem {
    static CACHE: OnceLock<[CurveSystem; 3]> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        let fill_bigons = |s: &CurveSystem| -> CurveSystem {
            let mut b = s.to_builder();
            for (ri, r) in s.regions.iter().enumerate() {
                if r.walks.len() == 1 && s.walks[r.walks[0]].0.len() == 2 {
                    b.regions[ri].1 = 1;
                }
            }
            b.build().expect("genus bump preserves validity")
        };
        [
            fill_bigons(base_pair(PairType::II)),
            base_pair(PairType::III).clone(),
            base_pair(PairType::IV).clone(),
        ]
    });
    match t {
        PairType::I => panic!("type I pairs have no crossing model"),
        PairType::II => &cache[0],
        PairType::III => &cache[1],
        PairType::IV => &cache[2],
    }
}

fn derive_base_pair(t: PairType) -> CurveSystem {
    let genus = match t {
        PairType::II | PairType::IV => 1,
        PairType::III => 2,
        PairType::I => unreachable!(),
    };
    let alg = if t == PairType::IV { 2 } else { 0 };
    let spec = DiagramSpec {
        n_curves: 2,
        crossing_pairs: vec![(0, 1, alg)],
    };
    let bounds = RegionBounds {
        ambient_genus: Some(genus),
        max_region_genus: 0,
    };
    // The minimal pair configuration is characterized by its complement: two
    // crossings with the type's algebraic intersection number, nonseparating
    // mod-2 homologous curves, all complementary regions of genus zero, and
    // the type's complement shape. (The type II configuration still contains
    // bigons at this stage; they are destroyed by handles later.)
    let is_base = |s: &CurveSystem| -> bool {
        if s.is_separating(0) || s.is_separating(1) || !s.mod2_class_equal(&[0], &[1]) {
            return false;
        }
        match t {
            PairType::II => s.regions.len() == 3,
            PairType::III => {
                s.regions.len() == 2 && s.regions.iter().all(|r| r.walks.len() == 2)
            }
            PairType::IV => s.regions.len() == 2,
            PairType::I => unreachable!(),
        }
    };
    let found = enumerate_systems(&spec, bounds, is_base);
    let mut dedup: std::collections::BTreeMap<Vec<i64>, CurveSystem> = Default::default();
    for s in found {
        dedup.entry(canonical_key(&s, IsoPolicy::default())).or_insert(s);
    }
    assert_eq!(
        dedup.len(),
        1,
        "expected a unique minimal type {t} pair, found {}",
        dedup.len()
    );
    dedup.into_values().next().unwrap()
}
