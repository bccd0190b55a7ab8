//! Sparse tensors in `V^⊗n` with the right place-permutation action of `S_n`.
//!
//! On decomposable tensors `(v_1 ⊗ … ⊗ v_n)·σ = v_σ(1) ⊗ … ⊗ v_σ(n)`; on basis
//! tensors slot `i` of the result carries the index found at slot `σ(i)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Limits, Partition, Permutation};
use crate::error::{Error, Result};
use crate::group_algebra::{isotypic_projector, GroupAlgebraElement};
use crate::linalg::{serde_rational, Rational, VectorFamily};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseTensor {
    dim: usize,
    order: usize,
    // 1-based basis indices
    entries: BTreeMap<Vec<u8>, Rational>,
}

impl SparseTensor {
    pub fn zero(dim: usize, order: usize) -> Self {
        SparseTensor { dim, order, entries: BTreeMap::new() }
    }

    pub fn from_entries(
        dim: usize,
        order: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Rational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(dim, order);
        for (index, c) in entries {
            if index.len() != order {
                return Err(Error::MalformedTensor(format!("index {index:?} does not have {order} slots")));
            }
            if index.iter().any(|&i| i == 0 || i > dim) {
                return Err(Error::MalformedTensor(format!("index {index:?} leaves 1..={dim}")));
            }
            out.accumulate(index.into_iter().map(|i| i as u8).collect(), c);
        }
        Ok(out)
    }

    fn accumulate(&mut self, index: Vec<u8>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(index) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Nonzero entries sorted lexicographically by index.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> {
        self.entries.iter().map(|(k, c)| (k.iter().map(|&i| i as usize).collect(), c))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, index: &[usize]) -> Rational {
        let key: Vec<u8> = index.iter().map(|&i| i as u8).collect();
        self.entries.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if (self.dim, self.order) != (other.dim, other.order) {
            return Err(Error::DimensionMismatch(format!(
                "tensor shapes (dim {}, order {}) and (dim {}, order {})",
                self.dim, self.order, other.dim, other.order
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (k, c) in &other.entries {
            out.accumulate(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut out = Self::zero(self.dim, self.order);
        if !factor.is_zero() {
            out.entries = self.entries.iter().map(|(k, c)| (k.clone(), c * factor)).collect();
        }
        out
    }
}

/// `v_1 ⊗ … ⊗ v_n`.
pub fn decomposable(family: &VectorFamily) -> SparseTensor {
    let dim = family.dim();
    let mut out = SparseTensor::zero(dim, family.len());
    let supports: Vec<Vec<(u8, &Rational)>> = family
        .vectors()
        .iter()
        .map(|v| v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| ((i + 1) as u8, c)).collect())
        .collect();
    if supports.iter().any(Vec::is_empty) {
        return out;
    }
    let mut cursor = vec![0usize; supports.len()];
    loop {
        let mut index = Vec::with_capacity(supports.len());
        let mut coeff = Rational::from_integer(1.into());
        for (slot, &k) in cursor.iter().enumerate() {
            let (i, c) = supports[slot][k];
            index.push(i);
            coeff *= c;
        }
        out.entries.insert(index, coeff);
        // odometer, last slot fastest
        let mut slot = supports.len();
        loop {
            if slot == 0 {
                return out;
            }
            slot -= 1;
            cursor[slot] += 1;
            if cursor[slot] < supports[slot].len() {
                break;
            }
            cursor[slot] = 0;
        }
    }
}

fn permute_index(index: &[u8], sigma: &Permutation) -> Vec<u8> {
    (1..=index.len()).map(|i| index[sigma.image(i) - 1]).collect()
}

/// `x · σ`.
pub fn act(x: &SparseTensor, sigma: &Permutation) -> Result<SparseTensor> {
    if sigma.degree() != x.order {
        return Err(Error::DegreeMismatch(x.order, sigma.degree()));
    }
    let entries = x.entries.iter().map(|(k, c)| (permute_index(k, sigma), c.clone())).collect();
    Ok(SparseTensor { dim: x.dim, order: x.order, entries })
}

/// `x · g = Σ_σ g_σ (x · σ)`.
pub fn apply_element(x: &SparseTensor, g: &GroupAlgebraElement) -> Result<SparseTensor> {
    if g.degree() != x.order {
        return Err(Error::DegreeMismatch(x.order, g.degree()));
    }
    let mut out = SparseTensor::zero(x.dim, x.order);
    for (sigma, coeff) in g.terms() {
        for (k, c) in &x.entries {
            out.accumulate(permute_index(k, sigma), coeff * c);
        }
    }
    Ok(out)
}

pub fn tensor_equal(x: &SparseTensor, y: &SparseTensor) -> Result<bool> {
    x.check_shape(y)?;
    Ok(x.entries == y.entries)
}

/// `v^⊗ T_λ`, the symmetrized decomposable tensor.
pub fn symmetrize(family: &VectorFamily, shape: &Partition, limits: Limits) -> Result<SparseTensor> {
    if family.len() != shape.size() {
        return Err(Error::DimensionMismatch(format!(
            "{} vectors for a partition of {}",
            family.len(),
            shape.size()
        )));
    }
    apply_element(&decomposable(family), &isotypic_projector(shape, limits)?)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryJson {
    index: Vec<usize>,
    #[serde(with = "serde_rational")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorJson {
    dim: usize,
    order: usize,
    entries: Vec<EntryJson>,
}

impl Serialize for SparseTensor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TensorJson {
            dim: self.dim,
            order: self.order,
            entries: self.entries().map(|(index, c)| EntryJson { index, coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparseTensor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TensorJson::deserialize(d)?;
        let mut seen = std::collections::BTreeSet::new();
        for e in &raw.entries {
            if !seen.insert(e.index.clone()) {
                return Err(serde::de::Error::custom(format!("duplicate index {:?}", e.index)));
            }
        }
        SparseTensor::from_entries(raw.dim, raw.order, raw.entries.into_iter().map(|e| (e.index, e.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    fn fam(dim: usize, vs: &[&[i64]]) -> VectorFamily {
        VectorFamily::from_integers(dim, vs).unwrap()
    }

    fn tensor(dim: usize, order: usize, entries: &[(&[usize], Rational)]) -> SparseTensor {
        SparseTensor::from_entries(dim, order, entries.iter().map(|(i, c)| (i.to_vec(), c.clone()))).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn decomposable_examples() {
        assert_eq!(decomposable(&fam(2, &[&[1, 0], &[0, 1]])), tensor(2, 2, &[(&[1, 2], int(1))]));
        assert_eq!(decomposable(&fam(2, &[&[2, 0], &[1, 0]])), tensor(2, 2, &[(&[1, 1], int(2))]));
        assert_eq!(
            decomposable(&fam(2, &[&[1, 1], &[1, 0]])),
            tensor(2, 2, &[(&[1, 1], int(1)), (&[2, 1], int(1))])
        );
        assert!(decomposable(&fam(2, &[&[1, 1], &[0, 0]])).is_zero());
    }

    #[test]
    fn action_examples() {
        let x = tensor(2, 2, &[(&[1, 2], int(1))]);
        let swap = Permutation::from_images(&[2, 1]).unwrap();
        assert_eq!(act(&x, &swap).unwrap(), tensor(2, 2, &[(&[2, 1], int(1))]));
        assert_eq!(act(&x, &Permutation::identity(2)).unwrap(), x);
        let y = tensor(3, 3, &[(&[1, 2, 3], int(1))]);
        let cycle = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(act(&y, &cycle).unwrap(), tensor(3, 3, &[(&[2, 3, 1], int(1))]));
        assert_eq!(act(&y, &swap), Err(Error::DegreeMismatch(3, 2)));
    }

    #[test]
    fn projector_examples() {
        let x = decomposable(&fam(2, &[&[1, 0], &[0, 1]]));
        let lim = Limits::default();
        let half = ratio(1, 2);
        let sym = apply_element(&x, &isotypic_projector(&p(&[2]), lim).unwrap()).unwrap();
        assert_eq!(sym, tensor(2, 2, &[(&[1, 2], half.clone()), (&[2, 1], half.clone())]));
        let alt = apply_element(&x, &isotypic_projector(&p(&[1, 1]), lim).unwrap()).unwrap();
        assert_eq!(alt, tensor(2, 2, &[(&[1, 2], half.clone()), (&[2, 1], -half.clone())]));
        let repeated = decomposable(&fam(2, &[&[1, 0], &[1, 0]]));
        assert!(apply_element(&repeated, &isotypic_projector(&p(&[1, 1]), lim).unwrap()).unwrap().is_zero());
        let flipped = symmetrize(&fam(2, &[&[0, 1], &[1, 0]]), &p(&[2]), lim).unwrap();
        assert!(tensor_equal(&sym, &flipped).unwrap());
        assert!(tensor_equal(&sym, &sym).unwrap());
        assert!(tensor_equal(&sym, &SparseTensor::zero(3, 2)).is_err());
    }

    #[test]
    fn json_shape() {
        let t = tensor(2, 2, &[(&[2, 1], ratio(-1, 2)), (&[1, 2], int(3))]);
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(
            text,
            r#"{"dim":2,"order":2,"entries":[{"index":[1,2],"coeff":"3"},{"index":[2,1],"coeff":"-1/2"}]}"#
        );
        let back: SparseTensor = serde_json::from_str(&text).unwrap();
        assert_eq!(back, t);
        let dup = r#"{"dim":2,"order":1,"entries":[{"index":[1],"coeff":"1"},{"index":[1],"coeff":"1"}]}"#;
        assert!(serde_json::from_str::<SparseTensor>(dup).is_err());
        let out_of_range = r#"{"dim":2,"order":1,"entries":[{"index":[3],"coeff":"1"}]}"#;
        assert!(serde_json::from_str::<SparseTensor>(out_of_range).is_err());
        let float = r#"{"dim":2,"order":1,"entries":[{"index":[1],"coeff":0.5}]}"#;
        assert!(serde_json::from_str::<SparseTensor>(float).is_err());
    }
}
