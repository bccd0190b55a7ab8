use std::fmt;

use super::{enumerate_permutations, Limits, Partition, Permutation, Permutations};
use crate::error::{Error, Result};

/// A bijective filling of the Young diagram of `shape` with `1, …, n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(format!("row lengths: {e}")))?;
        let n = shape.size();
        let mut seen = vec![false; n];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidTableau(format!("{rows:?} is not a filling with 1..={n}")));
            }
            seen[x - 1] = true;
        }
        Ok(Tableau { shape, rows })
    }

    /// Fills `shape` row by row from `reading`.
    pub fn from_reading_word(shape: &Partition, reading: &[usize]) -> Result<Self> {
        if reading.len() != shape.size() {
            return Err(Error::InvalidTableau(format!(
                "reading word has {} entries, shape {shape} needs {}",
                reading.len(),
                shape.size()
            )));
        }
        let mut rows = Vec::with_capacity(shape.len());
        let mut rest = reading;
        for &len in shape.parts() {
            let (row, tail) = rest.split_at(len);
            rows.push(row.to_vec());
            rest = tail;
        }
        Tableau::new(rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Columns read top to bottom, left to right.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.parts()[0])
            .map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect())
            .collect()
    }

    pub fn is_standard(&self) -> bool {
        let rows_increase = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        rows_increase && self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }
}

/// Serialized as its rows.
impl serde::Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde::Serialize::serialize(&self.rows, s)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{:?}", self.rows)
    }
}

/// Stream of all `n!` fillings of a shape, ordered by their row reading words.
#[derive(Debug, Clone)]
pub struct Fillings {
    shape: Partition,
    words: Permutations,
}

impl Iterator for Fillings {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        let word = self.words.next()?;
        Some(Tableau::from_reading_word(&self.shape, &word.one_line()).expect("a permutation fills the shape"))
    }
}

pub fn enumerate_fillings(shape: &Partition, limits: Limits) -> Result<Fillings> {
    Ok(Fillings { shape: shape.clone(), words: enumerate_permutations(shape.size(), limits)? })
}

/// All standard tableaux of `shape`, sorted by row reading word.
pub fn enumerate_standard(shape: &Partition) -> Vec<Tableau> {
    // place 1, 2, … into cells whose upper and left neighbours are filled
    fn go(shape: &[usize], k: usize, n: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k > n {
            out.push(rows.clone());
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(k);
                go(shape, k + 1, n, rows, out);
                rows[i].pop();
            }
        }
    }
    let mut raw = Vec::new();
    go(shape.parts(), 1, shape.size(), &mut vec![Vec::new(); shape.len()], &mut raw);
    let mut out: Vec<Tableau> =
        raw.into_iter().map(|rows| Tableau { shape: shape.clone(), rows }).collect();
    out.sort();
    out
}

/// The filling with `1, …, n` written down successive columns.
pub fn column_superstandard(shape: &Partition) -> Tableau {
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut next = 1;
    for len in shape.conjugate().parts() {
        for row in rows.iter_mut().take(*len) {
            row.push(next);
            next += 1;
        }
    }
    Tableau { shape: shape.clone(), rows }
}

/// The multiset of column sets of a filling.
///
/// Columns are stored with increasing entries, longest first; runs of equal
/// length are sorted lexicographically, so equality of values is equality of
/// multisets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnSystem {
    shape: Partition,
    columns: Vec<Vec<usize>>,
}

impl ColumnSystem {
    /// Validates and canonicalizes arbitrary column sets for `shape`.
    pub fn from_columns(shape: &Partition, columns: Vec<Vec<usize>>) -> Result<Self> {
        let lengths = shape.conjugate();
        let mut sorted_lengths: Vec<usize> = columns.iter().map(Vec::len).collect();
        sorted_lengths.sort_unstable_by(|a, b| b.cmp(a));
        if sorted_lengths != lengths.parts() {
            return Err(Error::InvalidTableau(format!(
                "column sizes {sorted_lengths:?} do not match shape {shape}"
            )));
        }
        let n = shape.size();
        let mut seen = vec![false; n];
        for &x in columns.iter().flatten() {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidTableau(format!("{columns:?} do not partition 1..={n}")));
            }
            seen[x - 1] = true;
        }
        let mut columns: Vec<Vec<usize>> = columns
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        columns.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        Ok(ColumnSystem { shape: shape.clone(), columns })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// A filling realizing this system, with each column increasing downwards.
    pub fn to_tableau(&self) -> Tableau {
        let mut rows: Vec<Vec<usize>> = self.shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
        for column in &self.columns {
            for (row, &x) in rows.iter_mut().zip(column) {
                row.push(x);
            }
        }
        Tableau { shape: self.shape.clone(), rows }
    }
}

/// Serialized as its columns.
impl serde::Serialize for ColumnSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde::Serialize::serialize(&self.columns, s)
    }
}

impl fmt::Debug for ColumnSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColumnSystem{:?}", self.columns)
    }
}

pub fn column_system_of(t: &Tableau) -> ColumnSystem {
    ColumnSystem::from_columns(&t.shape, t.columns()).expect("columns of a tableau form a column system")
}

/// Every column system of `shape`, each once, in lexicographic order of the column list.
pub fn enumerate_column_systems(shape: &Partition, limits: Limits) -> Result<Vec<ColumnSystem>> {
    let n = shape.size();
    limits.check(n)?;
    let lengths = shape.conjugate().parts().to_vec();

    struct Search<'a> {
        lengths: &'a [usize],
        used: Vec<bool>,
        columns: Vec<Vec<usize>>,
        current: Vec<usize>,
        out: Vec<Vec<Vec<usize>>>,
    }

    impl Search<'_> {
        fn pick(&mut self, from: usize) {
            let j = self.columns.len();
            if j == self.lengths.len() {
                self.out.push(self.columns.clone());
                return;
            }
            if self.current.len() == self.lengths[j] {
                let done = std::mem::take(&mut self.current);
                self.columns.push(done);
                self.pick(1);
                self.current = self.columns.pop().expect("just pushed");
                return;
            }
            // within a run of equal-length columns the minima increase
            let floor = match j.checked_sub(1) {
                Some(prev) if self.current.is_empty() && self.lengths[prev] == self.lengths[j] => {
                    self.columns[prev][0] + 1
                }
                _ => from,
            };
            for x in floor.max(from)..=self.used.len() {
                if self.used[x - 1] {
                    continue;
                }
                self.used[x - 1] = true;
                self.current.push(x);
                self.pick(x + 1);
                self.current.pop();
                self.used[x - 1] = false;
            }
        }
    }

    let mut search = Search { lengths: &lengths, used: vec![false; n], columns: Vec::new(), current: Vec::new(), out: Vec::new() };
    search.pick(1);
    Ok(search.out.into_iter().map(|columns| ColumnSystem { shape: shape.clone(), columns }).collect())
}

fn stabilizer(blocks: &[Vec<usize>], n: usize, limits: Limits) -> Result<Vec<Permutation>> {
    limits.check(n)?;
    let mut group = vec![Permutation::identity(n)];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let arrangements: Vec<Permutation> = enumerate_permutations(block.len(), limits)?.collect();
        let mut next = Vec::with_capacity(group.len() * arrangements.len());
        for g in &group {
            for a in &arrangements {
                let mut images = g.one_line();
                for (k, &x) in block.iter().enumerate() {
                    images[x - 1] = block[a.image(k + 1) - 1];
                }
                next.push(Permutation::from_images(&images)?);
            }
        }
        group = next;
    }
    group.sort();
    Ok(group)
}

/// Permutations preserving every row of `t` setwise.
pub fn row_group(t: &Tableau, limits: Limits) -> Result<Vec<Permutation>> {
    stabilizer(&t.rows, t.size(), limits)
}

/// Permutations preserving every column of `t` setwise.
pub fn col_group(t: &Tableau, limits: Limits) -> Result<Vec<Permutation>> {
    stabilizer(&t.columns(), t.size(), limits)
}
