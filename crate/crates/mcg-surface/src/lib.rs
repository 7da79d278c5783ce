//! Combinatorial systems of simple closed curves on closed orientable surfaces.
//!
//! A [`CurveSystem`] stores a 4-valent crossing graph (with degree-2 marker
//! vertices on crossing-free curves) together with its complementary regions.
//! Regions carry an explicit genus, so handle moves act on the data directly
//! instead of forcing every face to be a disk.
//!
//! The submodules provide intersection counts, mod-2 homology tests (with an
//! independent GF(2) chain-complex oracle), cutting, handle and push-off
//! surgery, and canonical forms for isomorphism testing.

mod canon;
mod cut;
pub mod fixtures;
#[cfg(any(test, feature = "testgen"))]
pub mod testgen;
mod homology;
mod io;
mod moves;
mod ops;
mod restrict;
mod surgery;
mod system;

pub use canon::{
    canonical_key, is_stabilization_of, isomorphic, profile_stabilizes, stabilization_profile,
    IsoPolicy, StabProfile,
};
pub use moves::{isotopy_canonical_key, isotopy_orbit, triangle_move, triangle_regions};
pub use cut::{curve_component, BoundaryCircle, CutArc, CutComponent, CutProfile, CutSurface};
pub use homology::{integrally_homologous, Gf2Homology, Gf2Vec};
pub use io::{from_json, to_dot, to_json};
pub use ops::PairChart;
pub use restrict::{delete_curves, restriction, smooth_markers};
pub use surgery::{add_handle, insert_core_curve, insert_pushoff, insert_turn_curve, TurnChoice};
pub use io::IoError;
pub use surgery::SurgeryError;
pub use system::{
    boundary_walks, Curve, CurveId, CurveSystem, Dart, Dir, Edge, EdgeId, End, Region, RegionId,
    SideDart, SystemBuilder, SystemError, Vertex, VertexId, Walk,
};
