//! Exact computation of symmetrized decomposable tensors `v^⊗ T_λ` over ℚ.
//!
//! The crate answers two questions about a family of vectors `v_1, …, v_n`
//! and a partition `λ ⊢ n`, each in two independent ways:
//!
//! * does `v^⊗ T_λ` vanish? ([`decision::gamas_nonvanishing`] versus the
//!   brute-force [`tensor`] engine), and
//! * does `v^⊗ T_λ = u^⊗ T_λ` hold? ([`decision::decide_equality`] versus
//!   comparing the two tensors computed in the group algebra).
//!
//! All arithmetic is exact. Permutations, tableaux and tensor indices are
//! 1-based throughout.

pub mod characters;
pub mod combinatorics;
pub mod decision;
pub mod error;
pub mod group_algebra;
pub mod linalg;
pub mod sample;
pub mod tensor;

pub use characters::{character_table, character_table_oracle, hook_length_dimension, mn_character, CharacterTable};
pub use combinatorics::{ColumnSystem, Limits, Partition, Permutation, Tableau};
pub use decision::{decide_equality, gamas_nonvanishing, gamas_standard, EqualityVerdict};
pub use error::{Error, Result};
pub use group_algebra::GroupAlgebraElement;
pub use linalg::{Rational, VectorFamily};
pub use tensor::SparseTensor;
