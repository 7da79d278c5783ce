//! Exhaustive classification of triples of simple closed curves (c, fc, ffc)
//! in which consecutive pairs share a crossing type, culminating in the
//! catalog of 36 minimal configurations and a matcher that identifies which
//! catalog entry an arbitrary triple stabilizes.

pub mod annotations;
pub mod catalog;
pub mod diagrams;
pub mod pair;
pub mod phase2;
pub mod templates;

pub use catalog::{full_catalog, match_catalog, MatchError, TripleCatalogEntry, WitnessKind};
pub use diagrams::{enumerate_systems, DiagramSpec, RegionBounds};
pub use pair::{base_pair, classify_pair, classify_triple, PairType};
pub use phase2::{enumerate_minimal_triples, handle_closure_dbg, bigon_annulus_regions as bigon_annulus_regions_dbg};
pub use templates::{is_template_dbg, arcs_sep_flags_dbg};
pub use templates::enumerate_templates;
