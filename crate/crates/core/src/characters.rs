//! Irreducible characters of the symmetric group.
//!
//! [`mn_character`] evaluates `χ^λ` by the Murnaghan–Nakayama rule.
//! [`character_table_oracle`] rebuilds the whole table without it, by
//! Gram–Schmidt on the permutation characters of the Young subgroups, and is
//! kept around to cross-check the first route.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::combinatorics::{enumerate_partitions, factorial, Limits, Partition, Permutation};
use crate::error::{Error, Result};
use crate::linalg::Rational;

/// `χ^λ(1)` by the hook length formula.
pub fn hook_length_dimension(shape: &Partition) -> u128 {
    let conj = shape.conjugate();
    let mut hooks: u128 = 1;
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts()[j] - i - 1;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    factorial(shape.size()) / hooks
}

type MemoKey = (Vec<usize>, Vec<usize>);

fn memo() -> &'static RwLock<HashMap<MemoKey, i64>> {
    static CACHE: OnceLock<RwLock<HashMap<MemoKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `χ^λ` on the class of cycle type `cycle_type`.
pub fn mn_character(shape: &Partition, cycle_type: &Partition) -> Result<i64> {
    if shape.size() != cycle_type.size() {
        return Err(Error::DegreeMismatch(shape.size(), cycle_type.size()));
    }
    Ok(mn(shape.parts(), cycle_type.parts()))
}

fn mn(shape: &[usize], cycles: &[usize]) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = memo().read().expect("character cache poisoned").get(&key) {
        return v;
    }

    // beta-set: first-column hook lengths, strictly decreasing
    let len = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut value = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        // removing a border strip of length k moves one bead k places down
        let target = b - k;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let smaller: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        value += sign * mn(&smaller, rest);
    }

    memo().write().expect("character cache poisoned").insert(key, value);
    value
}

/// Number of tabloids of shape `shape` fixed by `sigma`.
///
/// A tabloid is fixed exactly when each of its rows is a union of cycles of
/// `sigma`, so this counts the ways to distribute the cycles among rows of
/// the prescribed lengths.
pub fn young_permutation_character(shape: &Partition, sigma: &Permutation) -> Result<u64> {
    if shape.size() != sigma.degree() {
        return Err(Error::DegreeMismatch(shape.size(), sigma.degree()));
    }
    let cycles = sigma.cycle_type();

    fn count(cycles: &[usize], capacity: &mut Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), u64>) -> u64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return 1;
        };
        let key = (cycles.len(), capacity.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for row in 0..capacity.len() {
            if capacity[row] >= c {
                capacity[row] -= c;
                total += count(rest, capacity, memo);
                capacity[row] += c;
            }
        }
        memo.insert(key, total);
        total
    }

    Ok(count(cycles.parts(), &mut shape.parts().to_vec(), &mut HashMap::new()))
}

/// A permutation of the given cycle type, cycles on consecutive integers.
pub fn class_representative(cycle_type: &Partition) -> Permutation {
    let mut images = Vec::with_capacity(cycle_type.size());
    let mut start = 1;
    for &len in cycle_type.parts() {
        for k in 0..len {
            images.push(start + (k + 1) % len);
        }
        start += len;
    }
    Permutation::from_images(&images).expect("consecutive cycles form a permutation")
}

/// The character table of `S_n`; rows and classes both in reverse-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    /// Row labels.
    pub partitions: Vec<Partition>,
    /// Column labels (cycle types).
    pub classes: Vec<Partition>,
    pub class_sizes: Vec<u128>,
    pub rows: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn value(&self, shape: &Partition, class: &Partition) -> Option<i64> {
        let r = self.partitions.iter().position(|p| p == shape)?;
        let c = self.classes.iter().position(|p| p == class)?;
        Some(self.rows[r][c])
    }

    /// `χ^λ(1)` for each row, read from the identity class.
    pub fn dimensions(&self) -> Vec<i64> {
        let id = self.classes.len() - 1;
        self.rows.iter().map(|r| r[id]).collect()
    }

    /// `Σ_c |c| χ(c) ψ(c)` for two rows.
    pub fn weighted_product(&self, a: usize, b: usize) -> i128 {
        self.class_sizes
            .iter()
            .zip(self.rows[a].iter().zip(&self.rows[b]))
            .map(|(&size, (&x, &y))| size as i128 * x as i128 * y as i128)
            .sum()
    }
}

fn table_shell(n: usize) -> (Vec<Partition>, Vec<u128>) {
    let classes = enumerate_partitions(n);
    let sizes = classes.iter().map(Partition::class_size).collect();
    (classes, sizes)
}

/// The character table evaluated by Murnaghan–Nakayama.
pub fn character_table(n: usize) -> Result<CharacterTable> {
    let (classes, class_sizes) = table_shell(n);
    let partitions = classes.clone();
    let rows = partitions
        .iter()
        .map(|p| classes.iter().map(|c| mn_character(p, c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable { n, partitions, classes, class_sizes, rows })
}

/// The character table rebuilt from permutation characters alone.
pub fn character_table_oracle(n: usize, limits: Limits) -> Result<CharacterTable> {
    limits.check(n)?;
    let (classes, class_sizes) = table_shell(n);
    let order = Rational::from_integer(BigInt::from(factorial(n)));
    let weights: Vec<Rational> =
        class_sizes.iter().map(|&s| Rational::from_integer(BigInt::from(s)) / &order).collect();
    let inner = |f: &[Rational], g: &[Rational]| -> Rational {
        f.iter().zip(g).zip(&weights).fold(Rational::zero(), |acc, ((x, y), w)| acc + x * y * w)
    };

    let representatives: Vec<Permutation> = classes.iter().map(class_representative).collect();
    let partitions = classes.clone();
    let mut found: Vec<Vec<Rational>> = Vec::with_capacity(partitions.len());
    for shape in &partitions {
        let mut chi: Vec<Rational> = representatives
            .iter()
            .map(|sigma| young_permutation_character(shape, sigma).map(|v| Rational::from_integer(BigInt::from(v))))
            .collect::<Result<_>>()?;
        for earlier in &found {
            let coefficient = inner(&chi, earlier);
            for (x, e) in chi.iter_mut().zip(earlier) {
                *x -= &coefficient * e;
            }
        }
        found.push(chi);
    }
    let rows = found
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    assert!(x.is_integer(), "Gram-Schmidt produced a non-integral character value {x}");
                    x.to_integer().to_i64().expect("character value fits in i64")
                })
                .collect()
        })
        .collect();
    Ok(CharacterTable { n, partitions, classes, class_sizes, rows })
}
