//! The rational group algebra `ℚS_n`, stored sparsely.
//!
//! Multiplication follows permutation composition: `(xy)` has coefficient
//! `Σ_{στ = π} x_σ y_τ` on `π`. Because tensors carry a right action, applying
//! `x` and then `y` to a tensor is the same as applying the product `xy`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::characters::{hook_length_dimension, mn_character};
use crate::combinatorics::{
    col_group, enumerate_fillings, enumerate_permutations, factorial, row_group, Limits, Partition, Permutation,
    Tableau,
};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement { degree, terms: BTreeMap::new() }
    }

    /// The unit `1 = id`.
    pub fn identity(degree: usize) -> Self {
        Self::from_permutation(Permutation::identity(degree), Rational::one())
    }

    pub fn from_permutation(sigma: Permutation, coefficient: Rational) -> Self {
        let mut out = Self::zero(sigma.degree());
        out.accumulate(sigma, coefficient);
        out
    }

    /// Sums `coefficient · σ` over the given terms; repeated permutations add up.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Permutation, Rational)>) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (sigma, c) in terms {
            if sigma.degree() != degree {
                return Err(Error::DegreeMismatch(degree, sigma.degree()));
            }
            out.accumulate(sigma, c);
        }
        Ok(out)
    }

    fn accumulate(&mut self, sigma: Permutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(sigma) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Nonzero terms in lexicographic order of the permutations.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, sigma: &Permutation) -> Rational {
        self.terms.get(sigma).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            Err(Error::DegreeMismatch(self.degree, other.degree))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (sigma, c) in &other.terms {
            out.accumulate(sigma.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(s, c)| (s.clone(), c * factor)).collect(),
        }
    }

    /// Convolution product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = Self::zero(self.degree);
        for (sigma, a) in &self.terms {
            for (tau, b) in &other.terms {
                out.accumulate(sigma.compose_unchecked(tau), a * b);
            }
        }
        Ok(out)
    }

    /// `κ` with `self = κ · other`, if one exists; `other` must be nonzero.
    pub fn scalar_multiple_of(&self, other: &Self) -> Option<Rational> {
        let (sigma, c) = other.terms.iter().next()?;
        let kappa = self.coefficient(sigma) / c;
        (other.scale(&kappa) == *self).then_some(kappa)
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupAlgebraElement[S_{}]({self})", self.degree)
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(s, c)| format!("{}*{s}", format_rational(c))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `a_T`: the sum of the row group.
pub fn row_symmetrizer(t: &Tableau, limits: Limits) -> Result<GroupAlgebraElement> {
    GroupAlgebraElement::from_terms(t.size(), row_group(t, limits)?.into_iter().map(|s| (s, Rational::one())))
}

/// `b_T`: the signed sum of the column group.
pub fn column_antisymmetrizer(t: &Tableau, limits: Limits) -> Result<GroupAlgebraElement> {
    GroupAlgebraElement::from_terms(
        t.size(),
        col_group(t, limits)?.into_iter().map(|s| {
            let sign = Rational::from_integer(BigInt::from(s.sign()));
            (s, sign)
        }),
    )
}

/// The Young symmetrizer `c_T = b_T a_T`.
pub fn young_symmetrizer(t: &Tableau, limits: Limits) -> Result<GroupAlgebraElement> {
    column_antisymmetrizer(t, limits)?.multiply(&row_symmetrizer(t, limits)?)
}

/// The central idempotent `T_λ = (χ^λ(1)/n!) Σ_σ χ^λ(σ) σ`.
pub fn isotypic_projector(shape: &Partition, limits: Limits) -> Result<GroupAlgebraElement> {
    let n = shape.size();
    let scale = Rational::new(BigInt::from(hook_length_dimension(shape)), BigInt::from(factorial(n)));
    let mut terms = Vec::new();
    for sigma in enumerate_permutations(n, limits)? {
        let chi = mn_character(shape, &sigma.cycle_type())?;
        terms.push((sigma, &scale * BigInt::from(chi)));
    }
    GroupAlgebraElement::from_terms(n, terms)
}

/// `Σ_T c_T` over every filling of `shape`.
pub fn sum_young_symmetrizers(shape: &Partition, limits: Limits) -> Result<GroupAlgebraElement> {
    let mut total = GroupAlgebraElement::zero(shape.size());
    for t in enumerate_fillings(shape, limits)? {
        total = total.add(&young_symmetrizer(&t, limits)?)?;
    }
    Ok(total)
}
