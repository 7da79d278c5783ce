//! Exhaustive enumeration of curve systems with prescribed pairwise crossing
//! counts: all vertex rotation systems (cyclic crossing orders along each
//! curve plus a crossing-sign bit per vertex) combined with all ways of
//! grouping the resulting boundary walks into regions and distributing genus.

use mcg_surface::{
    boundary_walks, Curve, CurveSystem, Dart, Dir, Edge, End, SideDart, SystemBuilder, Vertex,
};

/// Crossing pattern: `n_curves` curves; each listed pair crosses exactly
/// twice with the given absolute algebraic intersection number (0 or 2);
/// unlisted pairs are disjoint. Curves in no pair become marker loops.
#[derive(Clone, Debug)]
pub struct DiagramSpec {
    pub n_curves: usize,
    /// (curve a, curve b, |algebraic intersection|), a < b.
    pub crossing_pairs: Vec<(usize, usize, usize)>,
}

/// Bounds for the region-partition side of the enumeration.
#[derive(Clone, Copy, Debug)]
pub struct RegionBounds {
    /// Exact ambient genus, or `None` to accept every consistent genus.
    pub ambient_genus: Option<usize>,
    /// Cap on the genus of a single region.
    pub max_region_genus: usize,
}

/// All partitions of `0..n` as restricted growth strings (part index per
/// element).
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; n];
    fn rec(i: usize, n: usize, max_used: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(current.clone());
            return;
        }
        for p in 0..=max_used + 1 {
            current[i] = p;
            rec(i + 1, n, max_used.max(p), current, out);
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    rec(1, n, 0, &mut current, &mut out);
    out
}

/// Subsets of `0..n` of exactly `k` elements.
fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Permutations of `0..n` with the first element fixed at 0, as full orders
/// (cyclic orders of n crossings up to rotation).
fn cyclic_orders(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut rest: Vec<usize> = (1..n).collect();
    let mut out = Vec::new();
    permute(&mut rest, 0, &mut |perm| {
        let mut order = vec![0];
        order.extend_from_slice(perm);
        out.push(order);
    });
    out
}

fn permute(items: &mut Vec<usize>, start: usize, emit: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        emit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, emit);
        items.swap(start, i);
    }
}

struct Layout {
    /// Crossing vertices: (pair index, copy) -> vertex id; vertex -> (a, b).
    vertex_pair: Vec<(usize, usize)>,
    /// Crossings visited by each curve (vertex ids).
    curve_crossings: Vec<Vec<usize>>,
    /// Marker vertex id per crossing-free curve.
    marker_vertex: Vec<Option<usize>>,
    n_vertices: usize,
}

fn layout(spec: &DiagramSpec) -> Layout {
    let mut vertex_pair = Vec::new();
    let mut curve_crossings = vec![Vec::new(); spec.n_curves];
    for &(a, b, _) in &spec.crossing_pairs {
        for _ in 0..2 {
            let v = vertex_pair.len();
            vertex_pair.push((a, b));
            curve_crossings[a].push(v);
            curve_crossings[b].push(v);
        }
    }
    let mut marker_vertex = vec![None; spec.n_curves];
    let mut n_vertices = vertex_pair.len();
    for c in 0..spec.n_curves {
        if curve_crossings[c].is_empty() {
            marker_vertex[c] = Some(n_vertices);
            n_vertices += 1;
        }
    }
    Layout {
        vertex_pair,
        curve_crossings,
        marker_vertex,
        n_vertices,
    }
}

/// One rotation system: a crossing order per curve and a sign bit per
/// crossing vertex.
struct Rotation<'a> {
    layout: &'a Layout,
    orders: Vec<Vec<usize>>,
    bits: Vec<bool>,
}

/// Build the vertex/edge/curve skeleton of a rotation system.
fn skeleton(spec: &DiagramSpec, rot: &Rotation) -> (Vec<Vertex>, Vec<Edge>, Vec<Curve>) {
    let lay = rot.layout;
    let mut edges: Vec<Edge> = Vec::new();
    let mut curves: Vec<Curve> = Vec::new();
    // Per vertex and curve: (in dart, out dart), filled while laying edges.
    let mut visit: Vec<Vec<(usize, Dart, Dart)>> = vec![Vec::new(); lay.n_vertices];
    for c in 0..spec.n_curves {
        if let Some(mv) = lay.marker_vertex[c] {
            let e = edges.len();
            edges.push(Edge {
                name: format!("e{e}"),
                curve: c,
                from: mv,
                to: mv,
            });
            visit[mv].push((c, Dart { edge: e, end: End::Head }, Dart { edge: e, end: End::Tail }));
            curves.push(Curve {
                name: format!("c{c}"),
                edges: vec![(e, Dir::Forward)],
            });
            continue;
        }
        let order = &rot.orders[c];
        let m = order.len();
        let base = edges.len();
        for i in 0..m {
            let e = edges.len();
            edges.push(Edge {
                name: format!("e{e}"),
                curve: c,
                from: order[i],
                to: order[(i + 1) % m],
            });
        }
        for i in 0..m {
            let v = order[i];
            let e_in = base + (i + m - 1) % m;
            let e_out = base + i;
            visit[v].push((
                c,
                Dart { edge: e_in, end: End::Head },
                Dart { edge: e_out, end: End::Tail },
            ));
        }
        curves.push(Curve {
            name: format!("c{c}"),
            edges: (0..m).map(|i| (base + i, Dir::Forward)).collect(),
        });
    }

    let mut vertices = Vec::with_capacity(lay.n_vertices);
    for v in 0..lay.n_vertices {
        let darts = match visit[v].as_slice() {
            // Marker vertex of a crossing-free curve.
            [(_, d_in, d_out)] => vec![*d_out, *d_in],
            // Crossing of two curves; the bit picks the interleaving.
            [(a, a_in, a_out), (b, b_in, b_out)] => {
                debug_assert!(a < b);
                if rot.bits[v] {
                    vec![*a_out, *b_in, *a_in, *b_out]
                } else {
                    vec![*a_out, *b_out, *a_in, *b_in]
                }
            }
            other => panic!("vertex with {} curve visits", other.len()),
        };
        vertices.push(Vertex {
            name: format!("v{v}"),
            darts,
        });
    }
    (vertices, edges, curves)
}

/// Algebraic intersection numbers implied by the sign bits alone: at a
/// crossing of the ordered pair (a, b) the sign is +1 when the bit is unset.
fn algebraic_ok(spec: &DiagramSpec, lay: &Layout, bits: &[bool]) -> bool {
    for (pi, &(_, _, want)) in spec.crossing_pairs.iter().enumerate() {
        let s: i64 = (0..2)
            .map(|k| if bits[2 * pi + k] { -1 } else { 1 })
            .sum();
        let _ = lay;
        if s.unsigned_abs() as usize != want {
            return false;
        }
    }
    true
}

/// All systems matching one rotation system, over region partitions.
fn systems_of_rotation(
    spec: &DiagramSpec,
    rot: &Rotation,
    bounds: RegionBounds,
    out: &mut Vec<CurveSystem>,
) {
    let (vertices, edges, curves) = skeleton(spec, rot);
    let walks = boundary_walks(&vertices, &edges);
    let w = walks.len();
    let v = vertices.len() as i64;
    let e = edges.len() as i64;
    for parts in set_partitions(w) {
        let k = *parts.iter().max().unwrap_or(&0) + 1;
        // chi = V - E + sum(2 - 2 g_R - b_R); with S genus-1 regions:
        // chi = V - E + 2k - w - 2|S|.
        let chi0 = v - e + 2 * k as i64 - w as i64;
        let genus_sizes: Vec<usize> = match bounds.ambient_genus {
            Some(g) => {
                let need = chi0 - (2 - 2 * g as i64);
                if need < 0 || need % 2 != 0 || need / 2 > k as i64 {
                    continue;
                }
                vec![(need / 2) as usize]
            }
            None => (0..=k).filter(|&s| {
                let chi = chi0 - 2 * s as i64;
                chi <= 2 && chi % 2 == 0
            }).collect(),
        };
        for s in genus_sizes {
            if bounds.max_region_genus == 0 && s > 0 {
                continue;
            }
            for subset in subsets_of_size(k, s) {
                let regions: Vec<(String, usize, Vec<SideDart>)> = (0..k)
                    .map(|r| {
                        let genus = usize::from(subset.contains(&r));
                        let anchors: Vec<SideDart> = parts
                            .iter()
                            .enumerate()
                            .filter(|&(_, &p)| p == r)
                            .map(|(wi, _)| walks[wi].0[0])
                            .collect();
                        (format!("R{r}"), genus, anchors)
                    })
                    .collect();
                let builder = SystemBuilder {
                    vertices: vertices.clone(),
                    edges: edges.clone(),
                    curves: curves.clone(),
                    regions,
                };
                if let Ok(sys) = builder.build() {
                    out.push(sys);
                }
            }
        }
    }
}

/// Enumerate every system matching the spec and bounds, then filter. The
/// result is not deduplicated; callers dedup by canonical key.
pub fn enumerate_systems(
    spec: &DiagramSpec,
    bounds: RegionBounds,
    filter: impl Fn(&CurveSystem) -> bool + Sync,
) -> Vec<CurveSystem> {
    let lay = layout(spec);
    let order_choices: Vec<Vec<Vec<usize>>> = (0..spec.n_curves)
        .map(|c| cyclic_orders(lay.curve_crossings[c].len()).into_iter()
            .map(|ord| ord.into_iter().map(|i| lay.curve_crossings[c][i]).collect())
            .collect())
        .collect();
    let n_bits = lay.vertex_pair.len();

    // Mixed-radix index over (orders per curve, bits).
    let mut radices: Vec<usize> = order_choices.iter().map(|o| o.len()).collect();
    radices.push(1 << n_bits);
    let total: usize = radices.iter().product();

    let run_one = |idx: usize| -> Vec<CurveSystem> {
        let mut rem = idx;
        let mut digits = Vec::with_capacity(radices.len());
        for &r in &radices {
            digits.push(rem % r);
            rem /= r;
        }
        let bits_digit = digits.pop().unwrap();
        let bits: Vec<bool> = (0..n_bits).map(|i| bits_digit >> i & 1 == 1).collect();
        if !algebraic_ok(spec, &lay, &bits) {
            return Vec::new();
        }
        let orders: Vec<Vec<usize>> = digits
            .iter()
            .enumerate()
            .map(|(c, &d)| order_choices[c][d].clone())
            .collect();
        let rot = Rotation {
            layout: &lay,
            orders,
            bits,
        };
        let mut out = Vec::new();
        systems_of_rotation(spec, &rot, bounds, &mut out);
        out.retain(&filter);
        out
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..total).into_par_iter().flat_map_iter(run_one).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..total).flat_map(run_one).collect()
    }
}
