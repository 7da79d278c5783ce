//! The catalog of minimal triple configurations and the matcher that
//! identifies, for an arbitrary triple, the unique catalog entry it
//! stabilizes.

use std::sync::OnceLock;

use mcg_surface::{
    canonical_key, is_stabilization_of, restriction, Curve, CurveId, CurveSystem, IsoPolicy,
};

use crate::pair::{classify_triple, PairType};
use crate::phase2::enumerate_minimal_triples;

/// Which normal-generation criterion certifies the mapping classes built from
/// this configuration (annotations verified machine-side by the criteria
/// layer).
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// Well-suited curve pair with one crossing.
    Wscca,
    /// Well-suited curve pair crossing each triple curve in two points of
    /// opposite sign.
    Wsccb,
    /// Well-suited separating curve.
    Wsccsep,
    /// Commutator identity for a pair with small torus-hole support.
    Chen,
    /// Lantern relation support.
    Lantern,
    /// Good pair of disjoint curves on opposite sides (bounding-pair case).
    GoodPairBp,
    /// Good pair of disjoint curves on opposite sides.
    GoodPair,
    /// Turn curve witness for type IV configurations.
    TypeIvTurn,
    /// Boundary-of-neighborhood witness for type I configurations.
    TypeIBoundary,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::Wscca => "wscca",
            WitnessKind::Wsccb => "wsccb",
            WitnessKind::Wsccsep => "wsccsep",
            WitnessKind::Chen => "chen",
            WitnessKind::Lantern => "lantern",
            WitnessKind::GoodPairBp => "good-pair-bp",
            WitnessKind::GoodPair => "good-pair",
            WitnessKind::TypeIvTurn => "type-IV-turn",
            WitnessKind::TypeIBoundary => "type-I-boundary",
        }
    }
}

/// One minimal configuration: the type, its index among the entries of that
/// type (in canonical-key order), the curve system with curves ordered
/// (c, fc, ffc), and the criterion annotation.
#[derive(Clone, Debug)]
pub struct TripleCatalogEntry {
    pub pair_type: PairType,
    pub index: usize,
    pub system: CurveSystem,
    pub witness: Option<WitnessKind>,
}

impl TripleCatalogEntry {
    pub fn label(&self) -> String {
        format!("{}-{}", self.pair_type, self.index + 1)
    }
}

/// The full catalog: every minimal configuration of every type, computed once
/// and cached. Entries are ordered by type (I, II, III, IV) and canonical key
/// within a type.
pub fn full_catalog() -> &'static [TripleCatalogEntry] {
    static CACHE: OnceLock<Vec<TripleCatalogEntry>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut out = Vec::new();
        for t in PairType::ALL {
            for (index, system) in enumerate_minimal_triples(t).into_iter().enumerate() {
                let witness = crate::annotations::witness_for(t, index, &system);
                out.push(TripleCatalogEntry {
                    pair_type: t,
                    index,
                    system,
                    witness,
                });
            }
        }
        out
    })
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MatchError {
    #[error("the curves do not form a triple with a common pair type")]
    NotATriple,
    #[error(
        "no catalog entry matches this type {pair_type} triple; its canonical key is {key:?}"
    )]
    NoMatch { pair_type: PairType, key: Vec<i64> },
}

/// Identify the unique catalog entry that the ordered triple (c, fc, ffc)
/// stabilizes. The input may live in a larger curve system; the triple is
/// restricted and reordered first.
pub fn match_catalog(
    sys: &CurveSystem,
    c: CurveId,
    fc: CurveId,
    ffc: CurveId,
) -> Result<&'static TripleCatalogEntry, MatchError> {
    let t = classify_triple(sys, c, fc, ffc).ok_or(MatchError::NotATriple)?;
    let mut kept = [c, fc, ffc];
    kept.sort_unstable();
    let r = restriction(sys, &kept);
    // Reorder the restriction's curves so that (c, fc, ffc) become (0, 1, 2).
    let order: Vec<usize> = [c, fc, ffc]
        .iter()
        .map(|&x| kept.iter().position(|&k| k == x).unwrap())
        .collect();
    let r = reorder_curves(&r, &order);

    let matches: Vec<&TripleCatalogEntry> = full_catalog()
        .iter()
        .filter(|e| e.pair_type == t)
        .filter(|e| is_stabilization_of(&r, &e.system, IsoPolicy::default()))
        .collect();
    match matches.as_slice() {
        [one] => Ok(one),
        [] => Err(MatchError::NoMatch {
            pair_type: t,
            key: canonical_key(&r, IsoPolicy::default()),
        }),
        many => panic!(
            "catalog entries {:?} are not stabilization-incomparable",
            many.iter().map(|e| e.label()).collect::<Vec<_>>()
        ),
    }
}

/// Permute the curve list: `order[new_index] = old_index`. Edge labels are
/// remapped accordingly; everything else is untouched.
pub fn reorder_curves(sys: &CurveSystem, order: &[usize]) -> CurveSystem {
    assert_eq!(order.len(), sys.curves.len());
    let mut new_of_old = vec![0usize; order.len()];
    for (ni, &oi) in order.iter().enumerate() {
        new_of_old[oi] = ni;
    }
    let mut b = sys.to_builder();
    let curves: Vec<Curve> = order.iter().map(|&oi| b.curves[oi].clone()).collect();
    b.curves = curves;
    for e in &mut b.edges {
        e.curve = new_of_old[e.curve];
    }
    b.build().expect("curve relabeling preserves validity")
}
