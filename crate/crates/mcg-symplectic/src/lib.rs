//! Integer symplectic matrices Sp(2g, Z): transvections, twist words,
//! congruence levels and the named block matrices for handle rotation,
//! handle swap and the minus-identity blocks.
//!
//! Everything is exact integer arithmetic with respect to the symplectic
//! basis (x_1, y_1, ..., x_g, y_g). The form is <x_i, y_i> = 1, so J is the
//! block diagonal matrix with blocks [[0, 1], [-1, 0]]. A Dehn twist about a
//! curve with primitive homology class v acts by x |-> x + <x, v> v; the
//! opposite sign convention differs by replacing v with the same v (the
//! formula is invariant under v -> -v), so no result here depends on it.

use num_integer::Integer;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum SpError {
    #[error("vector is zero")]
    ZeroVector,
    #[error("vector is imprimitive (entry gcd {0})")]
    Imprimitive(i64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("malformed twist word token {0:?}")]
    Parse(String),
}

/// A 2g x 2g integer matrix, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpMatrix {
    g: usize,
    a: Vec<i64>,
}

impl SpMatrix {
    pub fn identity(g: usize) -> SpMatrix {
        let n = 2 * g;
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        SpMatrix { g, a }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn dim(&self) -> usize {
        2 * self.g
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        let n = self.dim();
        self.a[i * n + j] = v;
    }

    /// The standard symplectic form J in the (x_1, y_1, ...) basis.
    pub fn form(g: usize) -> SpMatrix {
        let mut j = SpMatrix::identity(g);
        let n = 2 * g;
        j.a = vec![0; n * n];
        for k in 0..g {
            j.set(2 * k, 2 * k + 1, 1);
            j.set(2 * k + 1, 2 * k, -1);
        }
        j
    }

    pub fn mul(&self, other: &SpMatrix) -> SpMatrix {
        assert_eq!(self.g, other.g);
        let n = self.dim();
        let mut out = SpMatrix {
            g: self.g,
            a: vec![0; n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] += x * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> SpMatrix {
        let n = self.dim();
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.a[j * n + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn neg(&self) -> SpMatrix {
        SpMatrix {
            g: self.g,
            a: self.a.iter().map(|&x| -x).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == SpMatrix::identity(self.g)
    }

    /// Exact check of the defining relation M^T J M = J.
    pub fn is_symplectic(&self) -> bool {
        let j = SpMatrix::form(self.g);
        self.transpose().mul(&j).mul(self) == j
    }

    /// Inverse of a symplectic matrix: M^{-1} = J^{-1} M^T J = -J M^T J.
    pub fn inverse(&self) -> SpMatrix {
        debug_assert!(self.is_symplectic());
        let j = SpMatrix::form(self.g);
        j.mul(&self.transpose()).mul(&j).neg()
    }

    pub fn pow(&self, e: i64) -> SpMatrix {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = SpMatrix::identity(self.g);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Multiplicative order, up to the cap.
    pub fn order(&self, cap: usize) -> Option<usize> {
        let mut m = self.clone();
        for k in 1..=cap {
            if m.is_identity() {
                return Some(k);
            }
            m = m.mul(self);
        }
        None
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.dim();
        assert_eq!(v.len(), n);
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Row-major text rendering, rows on separate lines.
    pub fn render(&self) -> String {
        let n = self.dim();
        let mut out = String::new();
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Value of the symplectic form <u, v> = u^T J v.
pub fn symplectic_form(u: &[i64], v: &[i64]) -> i64 {
    assert_eq!(u.len(), v.len());
    assert_eq!(u.len() % 2, 0);
    (0..u.len() / 2)
        .map(|k| u[2 * k] * v[2 * k + 1] - u[2 * k + 1] * v[2 * k])
        .sum()
}

fn check_primitive(v: &[i64]) -> Result<(), SpError> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    match g {
        0 => Err(SpError::ZeroVector),
        1 => Ok(()),
        d => Err(SpError::Imprimitive(d)),
    }
}

/// The transvection x |-> x + <x, v> v about a primitive vector.
pub fn transvection(v: &[i64]) -> Result<SpMatrix, SpError> {
    transvection_power(v, 1)
}

/// The e-th power of the transvection about v: x |-> x + e <x, v> v.
pub fn transvection_power(v: &[i64], e: i64) -> Result<SpMatrix, SpError> {
    if v.len() % 2 != 0 || v.is_empty() {
        return Err(SpError::Dimension {
            expected: 2,
            got: v.len(),
        });
    }
    check_primitive(v)?;
    let g = v.len() / 2;
    let n = 2 * g;
    let mut m = SpMatrix::identity(g);
    // Column j of the result is T(e_j) = e_j + e <e_j, v> v.
    for j in 0..n {
        let mut basis = vec![0i64; n];
        basis[j] = 1;
        let coef = e * symplectic_form(&basis, v);
        for i in 0..n {
            m.a[i * n + j] += coef * v[i];
        }
    }
    debug_assert!(m.is_symplectic());
    Ok(m)
}

/// One factor of a twist word: a primitive homology vector and an exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistFactor {
    pub vector: Vec<i64>,
    pub exponent: i64,
}

/// An ordered product of powers of Dehn twists, recorded by homology class.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TwistWord(pub Vec<TwistFactor>);

impl TwistWord {
    /// Parse whitespace-separated tokens `v1,...,v2g` or `v1,...,v2g^e`.
    pub fn parse(text: &str) -> Result<TwistWord, SpError> {
        let mut factors = Vec::new();
        for tok in text.split_whitespace() {
            let (coords, exp) = match tok.split_once('^') {
                Some((c, e)) => (
                    c,
                    e.parse::<i64>().map_err(|_| SpError::Parse(tok.into()))?,
                ),
                None => (tok, 1),
            };
            let vector: Vec<i64> = coords
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|_| SpError::Parse(tok.into()))?;
            factors.push(TwistFactor {
                vector,
                exponent: exp,
            });
        }
        Ok(TwistWord(factors))
    }

    pub fn render(&self) -> String {
        self.0
            .iter()
            .map(|f| {
                let coords = f
                    .vector
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                if f.exponent == 1 {
                    coords
                } else {
                    format!("{coords}^{}", f.exponent)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord(
            self.0
                .iter()
                .rev()
                .map(|f| TwistFactor {
                    vector: f.vector.clone(),
                    exponent: -f.exponent,
                })
                .collect(),
        )
    }

    /// Sum of exponents, the image in the abelianization for small genus.
    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|f| f.exponent).sum()
    }
}

/// Image of a twist word under the symplectic representation.
pub fn word_action(word: &TwistWord, g: usize) -> Result<SpMatrix, SpError> {
    let mut out = SpMatrix::identity(g);
    for f in &word.0 {
        if f.vector.len() != 2 * g {
            return Err(SpError::Dimension {
                expected: 2 * g,
                got: f.vector.len(),
            });
        }
        out = out.mul(&transvection_power(&f.vector, f.exponent)?);
    }
    Ok(out)
}

/// The gcd of the entries of M - I; 0 for the identity. A matrix of level m
/// lies in the kernel of reduction mod m (and no deeper congruence subgroup).
pub fn congruence_level(m: &SpMatrix) -> i64 {
    let id = SpMatrix::identity(m.g);
    let mut g = 0i64;
    for (a, b) in m.a.iter().zip(id.a.iter()) {
        g = g.gcd(&(a - b));
    }
    g
}

/// Image of the handle rotation: the block A = [[0,1],[-1,0]] on (x_1, y_1).
pub fn handle_rotation(g: usize) -> SpMatrix {
    assert!(g >= 1);
    let mut m = SpMatrix::identity(g);
    m.set(0, 0, 0);
    m.set(0, 1, 1);
    m.set(1, 0, -1);
    m.set(1, 1, 0);
    m
}

/// Image of the handle swap: exchanges (x_1, y_1) with (x_2, y_2).
pub fn handle_swap(g: usize) -> SpMatrix {
    assert!(g >= 2);
    let mut m = SpMatrix::identity(g);
    for i in 0..4 {
        m.set(i, i, 0);
    }
    for i in 0..2 {
        m.set(i, i + 2, 1);
        m.set(i + 2, i, 1);
    }
    m
}

/// The block matrix -I_{2k} + I_{2g-2k}; the hyperelliptic image for k = g.
pub fn minus_block(g: usize, k: usize) -> SpMatrix {
    assert!(k <= g);
    let mut m = SpMatrix::identity(g);
    for i in 0..2 * k {
        m.set(i, i, -1);
    }
    m
}

/// Image of a mapping class in the abelianization of Mod(S_g), which is
/// Z/12 for genus 1, Z/10 for genus 2 and trivial otherwise; any twist about
/// a nonseparating curve maps to 1, so the image is the exponent sum.
pub fn abelianization_image(exponent_sum: i64, g: usize) -> i64 {
    match g {
        1 => exponent_sum.rem_euclid(12),
        2 => exponent_sum.rem_euclid(10),
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transvection_formula_on_basis() {
        // v = x_1: y_1 |-> y_1 - x_1 under <y_1, x_1> = -1, others fixed.
        let t = transvection(&[1, 0]).unwrap();
        assert_eq!(t.apply(&[1, 0]), vec![1, 0]);
        assert_eq!(t.apply(&[0, 1]), vec![-1, 1]);
        assert!(t.is_symplectic());
    }

    #[test]
    fn transvection_fixes_its_vector() {
        let v = vec![2, 3, 1, 0];
        let t = transvection(&v).unwrap();
        assert_eq!(t.apply(&v), v);
    }

    #[test]
    fn transvection_sign_independent() {
        let v = vec![2, 3, 1, 0];
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        assert_eq!(transvection(&v).unwrap(), transvection(&neg).unwrap());
    }

    #[test]
    fn imprimitive_rejected() {
        assert_eq!(transvection(&[2, 4]), Err(SpError::Imprimitive(2)));
        assert_eq!(transvection(&[0, 0]), Err(SpError::ZeroVector));
    }

    #[test]
    fn transvection_power_levels() {
        for m in 1..=20i64 {
            let t = transvection_power(&[1, 0, 0, 0], m).unwrap();
            assert_eq!(congruence_level(&t), m);
            assert_eq!(t, transvection(&[1, 0, 0, 0]).unwrap().pow(m));
        }
    }

    #[test]
    fn named_matrices() {
        for g in 1..=5 {
            let m = handle_rotation(g);
            assert!(m.is_symplectic());
            assert_eq!(m.order(10), Some(4));
            if g >= 2 {
                let n = handle_swap(g);
                assert!(n.is_symplectic());
                assert_eq!(n.order(10), Some(2));
            }
            assert_eq!(minus_block(g, g), SpMatrix::identity(g).neg());
            for k in 1..g {
                let mk = minus_block(g, k);
                assert!(mk.is_symplectic());
                assert_eq!(congruence_level(&mk), 2);
            }
        }
    }

    #[test]
    fn word_round_trip() {
        let w = TwistWord::parse("1,0,0,0 0,1,1,0^-3 1,1,1,1^2").unwrap();
        assert_eq!(TwistWord::parse(&w.render()).unwrap(), w);
        let m = word_action(&w, 2).unwrap();
        assert!(m.is_symplectic());
        let inv = word_action(&w.inverse(), 2).unwrap();
        assert!(m.mul(&inv).is_identity());
    }

    #[test]
    fn bounding_pair_word_trivial() {
        // Twists about two curves with equal homology classes cancel.
        let w = TwistWord::parse("1,2,1,0 1,2,1,0^-1").unwrap();
        assert!(word_action(&w, 2).unwrap().is_identity());
    }

    #[test]
    fn genus_one_trace() {
        let w = TwistWord::parse("1,0 0,1^-1").unwrap();
        let m = word_action(&w, 1).unwrap();
        let trace = m.get(0, 0) + m.get(1, 1);
        assert_eq!(trace.abs(), 3);
    }

    #[test]
    fn abelianization_values() {
        for n in 0..5 {
            assert_eq!(abelianization_image(2 * n - 1, 1), (2 * n - 1).rem_euclid(12));
            assert_eq!(abelianization_image(3 * n - 2, 2), (3 * n - 2).rem_euclid(10));
        }
        assert_eq!(abelianization_image(7, 3), 0);
        assert_eq!(abelianization_image(0, 1), 0);
    }

    #[test]
    fn level_is_conjugation_invariant() {
        let p = word_action(
            &TwistWord::parse("1,1,0,1^2 0,1,1,0^-1 1,0,0,0").unwrap(),
            2,
        )
        .unwrap();
        let m = transvection_power(&[0, 1, 0, 1], 6).unwrap();
        let conj = p.mul(&m).mul(&p.inverse());
        assert_eq!(congruence_level(&conj), congruence_level(&m));
    }
}
