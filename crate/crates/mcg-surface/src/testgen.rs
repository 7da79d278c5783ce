//! Seeded random generation of valid systems, for property tests and
//! cross-validation against the homology oracle.
//!
//! Systems are grown from the hand-built fixtures by random valid moves
//! (handle additions, region merges, push-offs), so every output passes
//! validation by construction while exercising multi-curve, positive-genus
//! and multi-walk regions.

use rand::Rng;

use crate::fixtures;
use crate::surgery::{add_handle, insert_pushoff};
use crate::system::CurveSystem;

#[derive(Clone, Copy, Debug)]
pub struct GenConfig {
    pub max_edges: usize,
    pub moves: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_edges: 12,
            moves: 6,
        }
    }
}

pub fn seed_systems() -> Vec<CurveSystem> {
    vec![
        fixtures::torus_one_curve(),
        fixtures::torus_two_curves(),
        fixtures::genus_two_separating(),
        fixtures::genus_three_bounding_pair(),
        fixtures::torus_parallel_pair(),
        fixtures::torus_type_iv_pair(),
    ]
}

/// One random valid system with at most `cfg.max_edges` edges.
pub fn random_system<R: Rng>(rng: &mut R, cfg: GenConfig) -> CurveSystem {
    let seeds = seed_systems();
    let mut sys = seeds[rng.gen_range(0..seeds.len())].clone();
    for _ in 0..cfg.moves {
        match rng.gen_range(0..4u8) {
            0 => {
                let r = rng.gen_range(0..sys.regions.len());
                sys = add_handle(&sys, r, r);
            }
            1 if sys.regions.len() > 1 => {
                let r1 = rng.gen_range(0..sys.regions.len());
                let r2 = rng.gen_range(0..sys.regions.len());
                if r1 != r2 {
                    sys = add_handle(&sys, r1, r2);
                }
            }
            _ => {
                if sys.edges.len() < cfg.max_edges {
                    let r = rng.gen_range(0..sys.regions.len());
                    let w = rng.gen_range(0..sys.regions[r].walks.len());
                    let (next, _) = insert_pushoff(&sys, r, w).expect("valid push-off");
                    sys = next;
                }
            }
        }
    }
    sys
}

/// Random stabilization: add `handles` handles, each within a single region.
pub fn random_stabilization<R: Rng>(sys: &CurveSystem, rng: &mut R, handles: usize) -> CurveSystem {
    let mut out = sys.clone();
    for _ in 0..handles {
        let r = rng.gen_range(0..out.regions.len());
        out = add_handle(&out, r, r);
    }
    out
}
