//! Permutations, partitions, tableaux and the enumerations built on them.
//!
//! Conventions: entries are 1-based, permutations are written in one-line
//! notation, and composition is `(στ)(i) = σ(τ(i))`. With this convention the
//! place-permutation action on tensors is a right action.

mod partition;
mod permutation;
mod tableau;

pub use partition::{enumerate_partitions, Partition};
pub use permutation::{enumerate_permutations, Permutation, Permutations};
pub use tableau::{
    col_group, column_superstandard, column_system_of, enumerate_column_systems,
    enumerate_fillings, enumerate_standard, row_group, ColumnSystem, Fillings, Tableau,
};

use crate::error::{Error, Result};

/// Guard on the degree of factorial-size enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
}

impl Limits {
    pub const DEFAULT_MAX_N: usize = 8;

    pub fn new(max_n: usize) -> Self {
        Limits { max_n }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::LimitExceeded { n, max_n: self.max_n })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: Self::DEFAULT_MAX_N }
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
