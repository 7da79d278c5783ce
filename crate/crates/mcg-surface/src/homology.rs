//! Independent GF(2) first-homology oracle.
//!
//! Expands every region of positive genus into explicit handle loops, joins
//! multi-walk regions into disks with auxiliary arcs, and computes H_1 of the
//! resulting CW complex over the two-element field. This shares no code with
//! the region-coloring test in `ops`, so the two can cross-validate.

use crate::system::{CurveId, CurveSystem};

/// Dense bit vector over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Vec {
    words: Vec<u64>,
    len: usize,
}

impl Gf2Vec {
    pub fn zero(len: usize) -> Self {
        Gf2Vec {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }
    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }
    pub fn xor_in(&mut self, other: &Gf2Vec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
    pub fn leading(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// H_1 over GF(2) of the closed surface carrying a curve system.
pub struct Gf2Homology {
    /// Number of edges in the expanded complex (length of chain vectors).
    n_edges: usize,
    /// Reduced face-boundary rows, echelonized by leading column.
    face_rows: Vec<Gf2Vec>,
    /// Representatives of an H_1 basis, echelonized after face reduction.
    basis: Vec<Gf2Vec>,
}

impl Gf2Homology {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn reduce_by_faces(&self, mut z: Gf2Vec) -> Gf2Vec {
        loop {
            let Some(lead) = z.leading() else { return z };
            match self.face_rows.iter().find(|r| r.leading() == Some(lead)) {
                Some(r) => z.xor_in(r),
                None => return z,
            }
        }
    }

    /// H_1 coordinates of a sum of curves (each curve contributes its edges
    /// once, mod 2).
    pub fn class_of(&self, sys: &CurveSystem, curves: &[CurveId]) -> Gf2Vec {
        let mut z = Gf2Vec::zero(self.n_edges);
        for &c in curves {
            for &(e, _) in &sys.curves[c].edges {
                z.set(e);
            }
        }
        // Face and basis reductions must interleave: eliminating a basis
        // leading column can reintroduce a column owned by a face row.
        let mut z = z;
        let mut coords = Gf2Vec::zero(self.basis.len());
        loop {
            z = self.reduce_by_faces(z);
            let Some(lead) = z.leading() else { break };
            let i = self
                .basis
                .iter()
                .position(|b| b.leading() == Some(lead))
                .expect("cycle reduces over the H_1 basis");
            z.xor_in(&self.basis[i]);
            coords.set(i);
        }
        coords
    }

    pub fn class_equal(&self, sys: &CurveSystem, set1: &[CurveId], set2: &[CurveId]) -> bool {
        self.class_of(sys, set1) == self.class_of(sys, set2)
    }

    pub fn class_is_zero(&self, sys: &CurveSystem, curves: &[CurveId]) -> bool {
        self.class_of(sys, curves).is_zero()
    }
}

struct CwEdge {
    from: usize,
    to: usize,
}

/// Build the expanded CW complex and compute its GF(2) first homology.
pub fn homology_oracle_gf2(sys: &CurveSystem) -> Gf2Homology {
    let mut n_vertices = sys.vertices.len();
    let mut edges: Vec<CwEdge> = sys
        .edges
        .iter()
        .map(|e| CwEdge { from: e.from, to: e.to })
        .collect();
    // Face boundary vectors are finished only once all edges exist, so record
    // (region, extra handle walks) first.
    struct FaceSpec {
        walk_edges: Vec<usize>,
        /// Base vertices of the region's walks for the joining arcs.
        walk_bases: Vec<usize>,
    }
    let mut faces: Vec<FaceSpec> = Vec::new();

    for r in &sys.regions {
        let mut walk_edges = Vec::new();
        let mut walk_bases = Vec::new();
        for &w in &r.walks {
            for s in &sys.walks[w].0 {
                walk_edges.push(s.edge);
            }
            let first = sys.walks[w].0[0];
            walk_bases.push(sys.side_head(first));
        }
        // Each unit of genus becomes a transverse loop pair x, y at a new
        // vertex; the complement of the pair adds one square boundary walk
        // whose edges all appear twice and so vanish from the GF(2) boundary.
        for _ in 0..r.genus {
            let v = n_vertices;
            n_vertices += 1;
            edges.push(CwEdge { from: v, to: v });
            edges.push(CwEdge { from: v, to: v });
            walk_bases.push(v);
        }
        faces.push(FaceSpec {
            walk_edges,
            walk_bases,
        });
    }
    // Joining arcs turning each multi-walk genus-0 region into a disk. They
    // appear twice in the merged face word, contributing 0 mod 2.
    for f in &faces {
        for j in 1..f.walk_bases.len() {
            edges.push(CwEdge {
                from: f.walk_bases[0],
                to: f.walk_bases[j],
            });
        }
    }

    let n_edges = edges.len();
    // Echelonized face rows.
    let mut face_rows: Vec<Gf2Vec> = Vec::new();
    for f in &faces {
        let mut v = Gf2Vec::zero(n_edges);
        for &e in &f.walk_edges {
            v.set(e);
        }
        reduce_and_insert(&mut face_rows, v);
    }

    // Cycle space via a spanning forest: fundamental cycle per non-tree edge.
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n_vertices]; // (vertex, edge)
    let mut visited = vec![false; n_vertices];
    let mut order = Vec::new();
    for root in 0..n_vertices {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            for (ei, e) in edges.iter().enumerate() {
                for (a, b) in [(e.from, e.to), (e.to, e.from)] {
                    if a == v && !visited[b] {
                        visited[b] = true;
                        parent[b] = Some((v, ei));
                        stack.push(b);
                    }
                }
            }
        }
    }
    let tree_edges: std::collections::HashSet<usize> =
        parent.iter().flatten().map(|&(_, e)| e).collect();
    let path_to_root = |mut v: usize, z: &mut Gf2Vec| {
        while let Some((p, e)) = parent[v] {
            z.set(e);
            v = p;
        }
    };

    let mut homology = Gf2Homology {
        n_edges,
        face_rows,
        basis: Vec::new(),
    };
    for (ei, e) in edges.iter().enumerate() {
        if tree_edges.contains(&ei) {
            continue;
        }
        let mut z = Gf2Vec::zero(n_edges);
        z.set(ei);
        path_to_root(e.from, &mut z);
        path_to_root(e.to, &mut z);
        // Reduce against faces and the basis so the basis stays echelonized;
        // the two reductions must interleave (see class_of).
        loop {
            z = homology.reduce_by_faces(z);
            let Some(lead) = z.leading() else { break };
            match homology.basis.iter().find(|b| b.leading() == Some(lead)) {
                Some(b) => {
                    let b = b.clone();
                    z.xor_in(&b);
                }
                None => break,
            }
        }
        if !z.is_zero() {
            homology.basis.push(z);
            homology.basis.sort_by_key(|b| b.leading());
        }
    }
    homology
}

fn reduce_and_insert(rows: &mut Vec<Gf2Vec>, mut v: Gf2Vec) {
    loop {
        let Some(lead) = v.leading() else { return };
        match rows.iter().find(|r| r.leading() == Some(lead)) {
            Some(r) => {
                let r = r.clone();
                v.xor_in(&r);
            }
            None => {
                rows.push(v);
                rows.sort_by_key(|r| r.leading());
                return;
            }
        }
    }
}

impl CurveSystem {
    pub fn homology_oracle_gf2(&self) -> Gf2Homology {
        homology_oracle_gf2(self)
    }

    /// Mod-2 class comparison through the chain-complex oracle.
    pub fn oracle_class_equal(&self, set1: &[CurveId], set2: &[CurveId]) -> bool {
        let h = self.homology_oracle_gf2();
        h.class_equal(self, set1, set2)
    }
}

/// Whether two curves are homologous over the integers for some choice of
/// orientations: the 1-cycle c1 - c2 (or c1 + c2) bounds an integer
/// combination of complementary regions. The test assigns a potential to
/// every region and checks that the prescribed jumps across the curve edges
/// are consistent.
pub fn integrally_homologous(sys: &CurveSystem, c1: CurveId, c2: CurveId) -> bool {
    bounds_difference(sys, c1, c2, 1) || bounds_difference(sys, c1, c2, -1)
}

fn bounds_difference(sys: &CurveSystem, c1: CurveId, c2: CurveId, sign: i64) -> bool {
    use crate::system::{Dir, SideDart};
    let opp = |d: Dir| match d {
        Dir::Forward => Dir::Backward,
        Dir::Backward => Dir::Forward,
    };
    // (left region, right region, jump) per traversed edge.
    let mut constraints: Vec<(usize, usize, i64)> = Vec::new();
    for (ci, curve) in sys.curves.iter().enumerate() {
        let w = if ci == c1 {
            1
        } else if ci == c2 {
            -sign
        } else {
            0
        };
        for &(e, d) in &curve.edges {
            let l = sys.side_region(SideDart { edge: e, dir: d });
            let r = sys.side_region(SideDart { edge: e, dir: opp(d) });
            constraints.push((l, r, w));
        }
    }
    let n = sys.regions.len();
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for &(l, r, w) in &constraints {
        adj[l].push((r, w));
        adj[r].push((l, -w));
    }
    let mut pot = vec![None::<i64>; n];
    for start in 0..n {
        if pot[start].is_some() {
            continue;
        }
        pot[start] = Some(0);
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            let pu = pot[u].expect("queued regions carry a potential");
            for &(v, w) in &adj[u] {
                // pot[l] - pot[r] = w for constraint (l, r, w); adj stores
                // (neighbor, jump from u's perspective), so pot[v] = pot[u] - w.
                match pot[v] {
                    None => {
                        pot[v] = Some(pu - w);
                        queue.push(v);
                    }
                    Some(pv) => {
                        if pv != pu - w {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
