//! Exact rational linear algebra: rank, determinant, independence, span
//! comparison and the scalar relating two wedges of the same subspace.
//!
//! Vectors in a [`VectorFamily`] are addressed by 1-based index. Wedges are
//! read in the order the indices are given.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Parses `"p"` or `"p/q"` with an optional leading minus and no whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) || den.is_some_and(|q| !digits(q)) {
        return Err(bad());
    }
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = match den {
        Some(q) => q.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Lowest-terms text form, `"p"` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Serde adapters that carry rationals as strings.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }

    pub mod seq {
        use serde::ser::SerializeSeq;

        use super::*;

        pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(xs.len()))?;
            for x in xs {
                seq.serialize_element(&format_rational(x))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
            let texts = Vec::<String>::deserialize(d)?;
            texts.iter().map(|t| parse_rational(t).map_err(serde::de::Error::custom)).collect()
        }
    }
}

/// Reduces `m` in place to reduced row echelon form; returns the pivot columns.
fn row_reduce(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for k in c..cols {
                    let delta = &factor * &m[r][k];
                    m[i][k] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut work = m.to_vec();
    row_reduce(&mut work).len()
}

pub fn determinant(m: &[Vec<Rational>]) -> Result<Rational> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare { rows: n, cols: row.len() });
    }
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] / &a[c][c];
            for k in c..n {
                let delta = &factor * &a[c][k];
                a[i][k] -= delta;
            }
        }
    }
    Ok(det)
}

/// `n` vectors in `ℚ^dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorFamily {
    dim: usize,
    vectors: Vec<Vec<Rational>>,
}

impl VectorFamily {
    pub fn new(dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some((i, v)) = vectors.iter().enumerate().find(|(_, v)| v.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "vector {} has length {}, expected {dim}",
                i + 1,
                v.len()
            )));
        }
        Ok(VectorFamily { dim, vectors })
    }

    pub fn from_integers(dim: usize, vectors: &[&[i64]]) -> Result<Self> {
        Self::new(dim, vectors.iter().map(|v| v.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// The vector at 1-based position `i`.
    pub fn vector(&self, i: usize) -> &[Rational] {
        &self.vectors[i - 1]
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    /// Returns a copy with vector `i` replaced.
    pub fn with_vector(&self, i: usize, v: Vec<Rational>) -> Result<Self> {
        let mut vectors = self.vectors.clone();
        self.check_index(i)?;
        vectors[i - 1] = v;
        Self::new(self.dim, vectors)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            Err(Error::IndexOutOfRange { index: i, len: self.len() })
        } else {
            Ok(())
        }
    }

    fn select(&self, indices: &[usize]) -> Result<Vec<Vec<Rational>>> {
        indices.iter().map(|&i| self.check_index(i).map(|_| self.vector(i).to_vec())).collect()
    }
}

pub fn is_independent(f: &VectorFamily, indices: &[usize]) -> Result<bool> {
    let selected = f.select(indices)?;
    Ok(rank(&selected) == indices.len())
}

fn check_pair(f: &VectorFamily, s: &[usize], g: &VectorFamily, t: &[usize]) -> Result<()> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!("ambient dimensions {} and {}", f.dim(), g.dim())));
    }
    if !is_independent(f, s)? || !is_independent(g, t)? {
        return Err(Error::DependentSelection);
    }
    Ok(())
}

/// Whether two independent selections span the same subspace.
pub fn span_equal(f: &VectorFamily, s: &[usize], g: &VectorFamily, t: &[usize]) -> Result<bool> {
    check_pair(f, s, g, t)?;
    if s.len() != t.len() {
        return Ok(false);
    }
    let mut joint = f.select(s)?;
    joint.extend(g.select(t)?);
    Ok(rank(&joint) == s.len())
}

/// The nonzero `c` with `⋀_{i∈s} f_i = c · ⋀_{i∈t} g_i`, wedges read in the given index order.
///
/// Computed as the determinant of the coordinates of the `f`-selection in the
/// basis given by the `g`-selection.
pub fn transition_scalar(f: &VectorFamily, s: &[usize], g: &VectorFamily, t: &[usize]) -> Result<Rational> {
    if s.len() != t.len() {
        return Err(Error::DimensionMismatch(format!("selections of sizes {} and {}", s.len(), t.len())));
    }
    check_pair(f, s, g, t)?;
    let k = s.len();
    if k == 0 {
        return Ok(Rational::one());
    }
    let (fs, gs) = (f.select(s)?, g.select(t)?);
    // augmented [G | F] with vectors as columns
    let mut aug: Vec<Vec<Rational>> = (0..f.dim())
        .map(|row| gs.iter().chain(fs.iter()).map(|v| v[row].clone()).collect())
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() != k || pivots.iter().any(|&p| p >= k) {
        return Err(Error::SpansDiffer);
    }
    let coords: Vec<Vec<Rational>> = aug[..k].iter().map(|row| row[k..].to_vec()).collect();
    determinant(&coords)
}
