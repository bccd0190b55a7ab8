use std::fmt;

use super::{Limits, Partition};
use crate::error::{Error, Result};

/// A bijection of `{1, …, n}` in one-line notation.
///
/// The derived ordering is lexicographic on the one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i - 1] = σ(i), 1-based values
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).map(|i| i as u8).collect() }
    }

    /// Builds a permutation from its one-line notation `[σ(1), …, σ(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {n} is too large")));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..={n}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&x| x as u8).collect() })
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n {
                    return Err(Error::IndexOutOfRange { index: a, len: n });
                }
                if touched[a - 1] {
                    return Err(Error::InvalidPermutation(format!("cycles {cycles:?} are not disjoint")));
                }
                touched[a - 1] = true;
                images[a - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// The product `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&t| self.images[t as usize - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as u8;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles, each starting at its smallest element, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i - 1] {
                seen[i - 1] = true;
                cycle.push(i);
                i = self.image(i);
            }
            out.push(cycle);
        }
        out
    }

    pub fn sign(&self) -> i32 {
        let even_cycles = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted_unchecked(lengths)
    }

    /// Rearranges to the next permutation in lexicographic order; false at the last one.
    fn advance(&mut self) -> bool {
        let v = &mut self.images;
        let n = v.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Cycle notation, omitting fixed points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Lexicographic stream over all of `S_n`.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Permutation>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut following = current.clone();
        if following.advance() {
            self.next = Some(following);
        }
        Some(current)
    }
}

pub fn enumerate_permutations(n: usize, limits: Limits) -> Result<Permutations> {
    limits.check(n)?;
    Ok(Permutations { next: Some(Permutation::identity(n)) })
}
