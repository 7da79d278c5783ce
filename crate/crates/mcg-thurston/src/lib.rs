//! Numerics for twist words on a pair of filling multicurves: the
//! Perron-Frobenius eigenvalue of the intersection matrix product, the
//! induced 2x2 representation, stretch factors, and the path-counting lower
//! bounds obtained by blowing up one curve into k parallel copies.

use thiserror::Error;

#[derive(Error, Debug, PartialEq)]
pub enum ThurstonError {
    #[error("matrix is empty or not rectangular")]
    Shape,
    #[error("intersection graph is disconnected")]
    Disconnected,
    #[error("power iteration did not converge within {0} iterations")]
    NonConvergence(usize),
    #[error("unknown word character {0:?}, expected one of A a B b")]
    BadWord(char),
    #[error("word is empty")]
    EmptyWord,
    #[error("blowup index {0} out of range")]
    BadIndex(usize),
}

fn check_shape(n: &[Vec<u64>]) -> Result<(usize, usize), ThurstonError> {
    if n.is_empty() || n[0].is_empty() {
        return Err(ThurstonError::Shape);
    }
    let cols = n[0].len();
    if n.iter().any(|r| r.len() != cols) {
        return Err(ThurstonError::Shape);
    }
    Ok((n.len(), cols))
}

/// Breadth-first distances in the bipartite intersection graph; vertices are
/// the A-rows followed by the B-columns.
fn bipartite_distances(n: &[Vec<u64>]) -> Result<Vec<Vec<usize>>, ThurstonError> {
    let (rows, cols) = check_shape(n)?;
    let total = rows + cols;
    let neighbors = |v: usize| -> Vec<usize> {
        if v < rows {
            (0..cols).filter(|&j| n[v][j] > 0).map(|j| rows + j).collect()
        } else {
            (0..rows).filter(|&i| n[i][v - rows] > 0).collect()
        }
    };
    let mut all = Vec::with_capacity(total);
    for s in 0..total {
        let mut dist = vec![usize::MAX; total];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        if dist.iter().any(|&d| d == usize::MAX) {
            return Err(ThurstonError::Disconnected);
        }
        all.push(dist);
    }
    Ok(all)
}

/// Dominant eigenvalue and eigenvector of a non-negative square matrix with
/// connected support, by power iteration on M + I.
pub fn pf_eigenvalue(m: &[Vec<f64>], tol: f64) -> Result<(f64, Vec<f64>), ThurstonError> {
    let d = m.len();
    if d == 0 || m.iter().any(|r| r.len() != d) {
        return Err(ThurstonError::Shape);
    }
    // Connectivity of the symmetrized support graph.
    {
        let mut seen = vec![false; d];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..d {
                if !seen[w] && (m[v][w] != 0.0 || m[w][v] != 0.0) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(ThurstonError::Disconnected);
        }
    }
    let apply = |v: &[f64]| -> Vec<f64> {
        (0..d)
            .map(|i| (0..d).map(|j| m[i][j] * v[j]).sum())
            .collect()
    };
    let norm = |v: &[f64]| -> f64 { v.iter().map(|x| x * x).sum::<f64>().sqrt() };
    let mut v = vec![1.0 / (d as f64).sqrt(); d];
    const CAP: usize = 1_000_000;
    for _ in 0..CAP {
        // One step of (M + I); the shift makes the dominant eigenvalue
        // strictly dominant even for bipartite-flavored supports.
        let mut w = apply(&v);
        for i in 0..d {
            w[i] += v[i];
        }
        let nw = norm(&w);
        for x in w.iter_mut() {
            *x /= nw;
        }
        v = w;
        // Rayleigh quotient of the unshifted matrix and residual check.
        let mv = apply(&v);
        let mu: f64 = v.iter().zip(&mv).map(|(a, b)| a * b).sum();
        let residual: f64 = (0..d)
            .map(|i| (mv[i] - mu * v[i]).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= tol * norm(&v) {
            return Ok((mu, v));
        }
    }
    Err(ThurstonError::NonConvergence(CAP))
}

/// A pair of multicurves A, B with intersection matrix N and the derived
/// Perron-Frobenius data of N N^T. The filling hypothesis cannot be checked
/// from N alone and is recorded as asserted by the caller; connectivity of
/// the intersection graph (a necessary condition) is verified.
#[derive(Clone, Debug)]
pub struct ThurstonSystem {
    pub n: Vec<Vec<u64>>,
    pub filling_asserted: bool,
    pub mu: f64,
    pub tol: f64,
}

impl ThurstonSystem {
    pub fn new(n: Vec<Vec<u64>>, tol: f64) -> Result<ThurstonSystem, ThurstonError> {
        bipartite_distances(&n)?; // shape + connectivity
        let (rows, _) = check_shape(&n)?;
        let nnt: Vec<Vec<f64>> = (0..rows)
            .map(|i| {
                (0..rows)
                    .map(|j| {
                        n[i]
                            .iter()
                            .zip(&n[j])
                            .map(|(&a, &b)| (a * b) as f64)
                            .sum()
                    })
                    .collect()
            })
            .collect();
        let (mu, _) = pf_eigenvalue(&nnt, tol)?;
        Ok(ThurstonSystem {
            n,
            filling_asserted: true,
            mu,
            tol,
        })
    }

    /// The standard chain of 2g+1 curves on the genus-g surface, split into
    /// alternating multicurves: A the g even-position curves, B the g+1 odd
    /// ones; consecutive chain curves meet once.
    pub fn chain(g: usize, tol: f64) -> Result<ThurstonSystem, ThurstonError> {
        assert!(g >= 1);
        let n: Vec<Vec<u64>> = (0..g)
            .map(|i| {
                (0..g + 1)
                    .map(|j| u64::from(j == i || j == i + 1))
                    .collect()
            })
            .collect();
        ThurstonSystem::new(n, tol)
    }
}

/// Number in Z[sqrt(mu)] tracked as a + b sqrt(mu); products substitute
/// mu exactly, keeping traces like 2 + n mu free of sqrt round-off.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QNum {
    pub a: f64,
    pub b: f64,
}

impl QNum {
    pub fn value(&self, mu: f64) -> f64 {
        self.a + self.b * mu.sqrt()
    }
}

/// 2x2 matrix over Z[sqrt(mu)], row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QMatrix(pub [[QNum; 2]; 2]);

impl QMatrix {
    pub fn identity() -> QMatrix {
        let z = QNum { a: 0.0, b: 0.0 };
        let one = QNum { a: 1.0, b: 0.0 };
        QMatrix([[one, z], [z, one]])
    }

    pub fn mul(&self, other: &QMatrix, mu: f64) -> QMatrix {
        let prod = |x: QNum, y: QNum| QNum {
            a: x.a * y.a + x.b * y.b * mu,
            b: x.a * y.b + x.b * y.a,
        };
        let add = |x: QNum, y: QNum| QNum {
            a: x.a + y.a,
            b: x.b + y.b,
        };
        let mut out = QMatrix::identity();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = add(
                    prod(self.0[i][0], other.0[0][j]),
                    prod(self.0[i][1], other.0[1][j]),
                );
            }
        }
        out
    }

    pub fn trace(&self) -> QNum {
        QNum {
            a: self.0[0][0].a + self.0[1][1].a,
            b: self.0[0][0].b + self.0[1][1].b,
        }
    }

    pub fn det(&self, mu: f64) -> f64 {
        let p = |x: QNum| x.value(mu);
        p(self.0[0][0]) * p(self.0[1][1]) - p(self.0[0][1]) * p(self.0[1][0])
    }
}

/// One factor of a word in the two multitwists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word(pub Vec<(Gen, i64)>);

impl Word {
    /// Parse a string over {A, a, B, b}; lowercase means inverse. Runs of
    /// the same letter collapse into one power.
    pub fn parse(text: &str) -> Result<Word, ThurstonError> {
        let mut out: Vec<(Gen, i64)> = Vec::new();
        for ch in text.chars() {
            if ch.is_whitespace() {
                continue;
            }
            let (g, e) = match ch {
                'A' => (Gen::A, 1),
                'a' => (Gen::A, -1),
                'B' => (Gen::B, 1),
                'b' => (Gen::B, -1),
                _ => return Err(ThurstonError::BadWord(ch)),
            };
            match out.last_mut() {
                Some((lg, le)) if *lg == g => *le += e,
                _ => out.push((g, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        Ok(Word(out))
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn rotated(&self, by: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = self.0.clone();
        let len = v.len();
        v.rotate_left(by % len);
        Word(v)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Image of one generator power: T_A^e = [[1, -e sqrt(mu)], [0, 1]] and
/// T_B^e = [[1, 0], [e sqrt(mu), 1]].
fn gen_matrix(g: Gen, e: i64) -> QMatrix {
    let mut m = QMatrix::identity();
    let s = QNum {
        a: 0.0,
        b: e as f64,
    };
    match g {
        Gen::A => m.0[0][1] = QNum { a: -s.a, b: -s.b },
        Gen::B => m.0[1][0] = s,
    }
    m
}

/// Product of the word's generator images, and its trace.
pub fn eval_word(sys: &ThurstonSystem, w: &Word) -> (QMatrix, QNum) {
    let mut m = QMatrix::identity();
    for &(g, e) in &w.0 {
        m = m.mul(&gen_matrix(g, e), sys.mu);
    }
    (m, m.trace())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Classification {
    PseudoAnosov { lambda: f64 },
    Parabolic,
    Elliptic,
}

/// Classify a word by its 2x2 image: |trace| > 2 means pseudo-Anosov with
/// stretch factor (|t| + sqrt(t^2 - 4)) / 2.
pub fn stretch_factor(sys: &ThurstonSystem, w: &Word) -> Result<Classification, ThurstonError> {
    if w.is_empty() {
        return Err(ThurstonError::EmptyWord);
    }
    let (_, tr) = eval_word(sys, w);
    let t = tr.value(sys.mu).abs();
    Ok(if t > 2.0 + sys.tol {
        Classification::PseudoAnosov {
            lambda: (t + (t * t - 4.0).sqrt()) / 2.0,
        }
    } else if (t - 2.0).abs() <= sys.tol {
        Classification::Parabolic
    } else {
        Classification::Elliptic
    })
}

/// Blow up A-curve `index` into k parallel copies: its row repeats k times.
fn blowup(n: &[Vec<u64>], index: usize, k: usize) -> Result<Vec<Vec<u64>>, ThurstonError> {
    let (rows, _) = check_shape(n)?;
    if index >= rows {
        return Err(ThurstonError::BadIndex(index));
    }
    assert!(k >= 1);
    let mut out = Vec::with_capacity(rows + k - 1);
    for (i, row) in n.iter().enumerate() {
        let copies = if i == index { k } else { 1 };
        for _ in 0..copies {
            out.push(row.clone());
        }
    }
    Ok(out)
}

/// Half the maximum path distance between two A-vertices of the
/// intersection graph (A-vertices sit at even distance from one another).
fn half_diameter_a(n: &[Vec<u64>]) -> Result<usize, ThurstonError> {
    let (rows, _) = check_shape(n)?;
    let dist = bipartite_distances(n)?;
    let max = (0..rows)
        .flat_map(|i| (0..rows).map(move |j| (i, j)))
        .map(|(i, j)| dist[i][j])
        .max()
        .unwrap_or(0);
    Ok(max / 2)
}

/// Minimum row sum of (N_k N_k^T)^(D+1) where N_k is the blown-up matrix and
/// D is half the A-diameter. Counts length-(D+1) paths in the curve graph,
/// so it is at least k: every A-vertex reaches some blown-up copy block.
pub fn lemma_k_bound(n: &[Vec<u64>], index: usize, k: usize) -> Result<u128, ThurstonError> {
    let nk = blowup(n, index, k)?;
    let d = half_diameter_a(&nk)?;
    let rows = nk.len();
    let m: Vec<Vec<u128>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| {
                    nk[i]
                        .iter()
                        .zip(&nk[j])
                        .map(|(&a, &b)| (a as u128) * (b as u128))
                        .sum()
                })
                .collect()
        })
        .collect();
    let mut p = m.clone();
    for _ in 0..d {
        let mut next = vec![vec![0u128; rows]; rows];
        for i in 0..rows {
            for l in 0..rows {
                let x = p[i][l];
                if x == 0 {
                    continue;
                }
                for j in 0..rows {
                    next[i][j] += x * m[l][j];
                }
            }
        }
        p = next;
    }
    Ok(p
        .iter()
        .map(|r| r.iter().sum::<u128>())
        .min()
        .expect("nonempty"))
}

/// Table of (k, lower bound on the stretch factor of the blown-up word):
/// lambda_k >= 2 + mu_k and mu_k >= (min row sum)^(1/(D+1)).
pub fn exponent_growth_check(
    n: &[Vec<u64>],
    index: usize,
    k_list: &[usize],
) -> Result<Vec<(usize, f64)>, ThurstonError> {
    let mut out = Vec::with_capacity(k_list.len());
    for &k in k_list {
        let nk = blowup(n, index, k)?;
        let d = half_diameter_a(&nk)?;
        let bound = lemma_k_bound(n, index, k)? as f64;
        out.push((k, 2.0 + bound.powf(1.0 / (d as f64 + 1.0))));
    }
    Ok(out)
}

/// Penner's upper bound 11^(1/g) for the least pseudo-Anosov stretch factor.
pub fn penner_upper_bound(g: usize) -> f64 {
    11f64.powf(1.0 / g as f64)
}

/// The least known genus-2 stretch factor (Cho-Ham): the largest real root
/// of x^4 - x^3 - x^2 - x + 1, computed by bisection to 1e-12.
pub fn cho_ham_genus2() -> f64 {
    let p = |x: f64| x.powi(4) - x.powi(3) - x.powi(2) - x + 1.0;
    // The largest real root lies in (1.5, 2): p(1.5) < 0 < p(2), and p is
    // increasing past its last stationary point.
    let (mut lo, mut hi) = (1.5, 2.0);
    debug_assert!(p(lo) < 0.0 && p(hi) > 0.0);
    while hi - lo > 1e-13 {
        let mid = (lo + hi) / 2.0;
        if p(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pf_simple_values() {
        let (mu, _) = pf_eigenvalue(&[vec![1.0]], 1e-12).unwrap();
        assert!((mu - 1.0).abs() < 1e-9);
        // A = {a1}, B = {b1, b2}: N N^T = [2].
        let sys = ThurstonSystem::new(vec![vec![1, 1]], 1e-12).unwrap();
        assert!((sys.mu - 2.0).abs() < 1e-9);
    }

    #[test]
    fn pf_chain_genus2_closed_form() {
        // N N^T = [[2, 1], [1, 2]], dominant eigenvalue 3.
        let sys = ThurstonSystem::chain(2, 1e-12).unwrap();
        assert!((sys.mu - 3.0).abs() < 1e-9);
    }

    #[test]
    fn pf_row_sum_bracket() {
        let m = vec![
            vec![2.0, 1.0, 0.0],
            vec![1.0, 2.0, 1.0],
            vec![0.0, 1.0, 2.0],
        ];
        let (mu, _) = pf_eigenvalue(&m, 1e-12).unwrap();
        assert!(mu >= 3.0 - 1e-9 && mu <= 4.0 + 1e-9);
        assert!((mu - (2.0 + 2f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn disconnected_rejected() {
        let r = ThurstonSystem::new(vec![vec![1, 0], vec![0, 1], vec![0, 0]], 1e-12);
        assert!(matches!(
            r,
            Err(ThurstonError::Disconnected) | Err(ThurstonError::Shape)
        ));
    }

    #[test]
    fn golden_ratio_square() {
        let sys = ThurstonSystem::new(vec![vec![1]], 1e-12).unwrap();
        let w = Word::parse("Ab").unwrap();
        match stretch_factor(&sys, &w).unwrap() {
            Classification::PseudoAnosov { lambda } => {
                assert!((lambda - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
            }
            c => panic!("expected pseudo-Anosov, got {c:?}"),
        }
    }

    #[test]
    fn single_twist_is_parabolic() {
        let sys = ThurstonSystem::new(vec![vec![1]], 1e-12).unwrap();
        assert_eq!(
            stretch_factor(&sys, &Word::parse("A").unwrap()).unwrap(),
            Classification::Parabolic
        );
    }

    #[test]
    fn trace_formula_exact() {
        let sys = ThurstonSystem::chain(3, 1e-12).unwrap();
        for n in [1i64, 5, 1000, 1_000_000] {
            let w = Word(vec![(Gen::A, -1), (Gen::B, n)]);
            let (_, tr) = eval_word(&sys, &w);
            let expected = 2.0 + n as f64 * sys.mu;
            assert!((tr.value(sys.mu) - expected).abs() <= 1e-10, "n = {n}");
        }
    }

    #[test]
    fn word_homomorphism_and_det() {
        let sys = ThurstonSystem::chain(2, 1e-12).unwrap();
        let w1 = Word::parse("AbaB").unwrap();
        let w2 = Word::parse("bA").unwrap();
        let combined = Word::parse("AbaBbA").unwrap();
        let (m1, _) = eval_word(&sys, &w1);
        let (m2, _) = eval_word(&sys, &w2);
        let (mc, _) = eval_word(&sys, &combined);
        let prod = m1.mul(&m2, sys.mu);
        for i in 0..2 {
            for j in 0..2 {
                assert!((prod.0[i][j].value(sys.mu) - mc.0[i][j].value(sys.mu)).abs() < 1e-9);
            }
        }
        assert!((m1.det(sys.mu) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn stretch_conjugation_invariance() {
        let sys = ThurstonSystem::chain(2, 1e-12).unwrap();
        let w = Word::parse("ABBab").unwrap();
        let lambda = |word: &Word| match stretch_factor(&sys, word).unwrap() {
            Classification::PseudoAnosov { lambda } => lambda,
            c => panic!("expected pseudo-Anosov, got {c:?}"),
        };
        let base = lambda(&w);
        assert!((lambda(&w.inverse()) - base).abs() < 1e-9);
        for by in 1..w.0.len() {
            assert!((lambda(&w.rotated(by)) - base).abs() < 1e-9);
        }
    }

    #[test]
    fn lemma_k_bound_meets_k() {
        let fixtures: Vec<Vec<Vec<u64>>> = vec![
            vec![vec![1]],
            ThurstonSystem::chain(2, 1e-12).unwrap().n,
            ThurstonSystem::chain(3, 1e-12).unwrap().n,
        ];
        for n in &fixtures {
            for k in [1usize, 2, 7, 50] {
                assert!(lemma_k_bound(n, 0, k).unwrap() >= k as u128);
            }
        }
    }

    #[test]
    fn growth_table_increases() {
        let table = exponent_growth_check(&[vec![1]], 0, &[1, 10, 100]).unwrap();
        assert!(table.windows(2).all(|w| w[1].1 > w[0].1));
        assert!(table.last().unwrap().1 > 100.0);
    }

    #[test]
    fn named_constants() {
        assert!((penner_upper_bound(2) - 11f64.sqrt()).abs() < 1e-12);
        let x = cho_ham_genus2();
        assert!((x - 1.72208).abs() < 1e-4);
        assert!((x.powi(4) - x.powi(3) - x.powi(2) - x + 1.0).abs() < 1e-9);
    }
}
