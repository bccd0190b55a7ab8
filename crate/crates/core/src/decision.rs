//! Combinatorial deciders for vanishing and equality of `v^⊗ T_λ`.
//!
//! Everything here depends only on the column contents of tableaux, so the
//! deciders iterate [`ColumnSystem`]s rather than all `n!` fillings. Wedges are
//! read with column entries in increasing order; the product of the transition
//! scalars does not depend on that choice because each reordering flips the
//! sign of one `v`-wedge and one `u`-wedge of the same column.

use num_traits::One;
use serde::Serialize;

use crate::combinatorics::{enumerate_column_systems, enumerate_standard, ColumnSystem, Limits, Partition, Tableau};
use crate::error::{Error, Result};
use crate::linalg::{is_independent, serde_rational, span_equal, transition_scalar, Rational, VectorFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictMode {
    /// No column system is independent for either family; both tensors are zero.
    BothVanish,
    /// Equal, with a witness for every independent column system.
    Witnessed,
    Failed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    /// The system is independent for exactly one of the two families.
    IndependenceMismatch,
    /// No bijection of columns pairs up equal spans.
    NoSpanMatching,
    /// Spans pair up, but the transition scalars never multiply to one.
    ProductNotOne,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub system: ColumnSystem,
    pub reason: FailureReason,
    /// For `product_not_one`: the first column matching tried.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_seq")]
    pub scalars: Option<Vec<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt")]
    pub product: Option<Rational>,
}

/// Column `j` of the `v`-side matches column `sigma[j - 1]` of the `u`-side (1-based),
/// with `⋀ v_{C_j} = scalars[j - 1] · ⋀ u_{C_σ(j)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub system: ColumnSystem,
    pub sigma: Vec<usize>,
    #[serde(with = "serde_rational::seq")]
    pub scalars: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub product: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityVerdict {
    pub equal: bool,
    pub mode: VerdictMode,
    pub failures: Vec<Failure>,
    pub witnesses: Vec<Witness>,
}

fn ser_opt<S: serde::Serializer>(x: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(x) => serde_rational::serialize(x, s),
        None => s.serialize_none(),
    }
}

fn ser_opt_seq<S: serde::Serializer>(x: &Option<Vec<Rational>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(xs) => serde_rational::seq::serialize(xs, s),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecideOptions {
    pub limits: Limits,
    /// Keep checking after the first failing system.
    pub exhaustive_failures: bool,
}

/// Whether every column of `system` indexes an independent subset of `family`.
pub fn columns_independent(family: &VectorFamily, system: &ColumnSystem) -> Result<bool> {
    if family.len() != system.size() {
        return Err(Error::DimensionMismatch(format!(
            "{} vectors for a column system on {} entries",
            family.len(),
            system.size()
        )));
    }
    for column in system.columns() {
        if !is_independent(family, column)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_family(family: &VectorFamily, shape: &Partition, limits: Limits) -> Result<()> {
    limits.check(shape.size())?;
    if family.len() != shape.size() {
        return Err(Error::DimensionMismatch(format!(
            "{} vectors for a partition of {}",
            family.len(),
            shape.size()
        )));
    }
    Ok(())
}

/// Gamas: `v^⊗ T_λ ≠ 0` iff some column system has all columns independent.
///
/// Returns the first such system, or `None` when the tensor vanishes.
pub fn gamas_nonvanishing(family: &VectorFamily, shape: &Partition, limits: Limits) -> Result<Option<ColumnSystem>> {
    check_family(family, shape, limits)?;
    for system in enumerate_column_systems(shape, limits)? {
        if columns_independent(family, &system)? {
            return Ok(Some(system));
        }
    }
    Ok(None)
}

/// The same criterion restricted to standard tableaux.
pub fn gamas_standard(family: &VectorFamily, shape: &Partition, limits: Limits) -> Result<Option<Tableau>> {
    check_family(family, shape, limits)?;
    for t in enumerate_standard(shape) {
        let mut independent = true;
        for column in t.columns() {
            if !is_independent(family, &column)? {
                independent = false;
                break;
            }
        }
        if independent {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Transition scalars for a given column matching, with columns read in the given order.
///
/// `sigma` is 1-based: `v_columns[j]` is compared with `u_columns[sigma[j] - 1]`.
pub fn evaluate_matching(
    fv: &VectorFamily,
    v_columns: &[Vec<usize>],
    fu: &VectorFamily,
    u_columns: &[Vec<usize>],
    sigma: &[usize],
) -> Result<(Vec<Rational>, Rational)> {
    if sigma.len() != v_columns.len() || v_columns.len() != u_columns.len() {
        return Err(Error::DimensionMismatch("column matching has the wrong length".into()));
    }
    let mut scalars = Vec::with_capacity(sigma.len());
    for (column, &target) in v_columns.iter().zip(sigma) {
        let other = u_columns.get(target.wrapping_sub(1)).ok_or(Error::IndexOutOfRange {
            index: target,
            len: u_columns.len(),
        })?;
        scalars.push(transition_scalar(fv, column, fu, other)?);
    }
    let product = scalars.iter().fold(Rational::one(), |acc, c| acc * c);
    Ok((scalars, product))
}

enum SystemOutcome {
    Vanishes,
    Holds(Witness),
    Fails(Failure),
}

fn failure(system: &ColumnSystem, reason: FailureReason) -> Failure {
    Failure { system: system.clone(), reason, sigma: None, scalars: None, product: None }
}

fn check_system(fv: &VectorFamily, fu: &VectorFamily, system: &ColumnSystem) -> Result<SystemOutcome> {
    let v_ok = columns_independent(fv, system)?;
    let u_ok = columns_independent(fu, system)?;
    match (v_ok, u_ok) {
        (false, false) => return Ok(SystemOutcome::Vanishes),
        (true, true) => {}
        _ => return Ok(SystemOutcome::Fails(failure(system, FailureReason::IndependenceMismatch))),
    }

    let columns = system.columns();
    let m = columns.len();
    // scalar[j][k] is Some(c) when v-column j and u-column k span the same subspace
    let mut scalar: Vec<Vec<Option<Rational>>> = vec![vec![None; m]; m];
    for (j, cj) in columns.iter().enumerate() {
        for (k, ck) in columns.iter().enumerate() {
            if cj.len() == ck.len() && span_equal(fv, cj, fu, ck)? {
                scalar[j][k] = Some(transition_scalar(fv, cj, fu, ck)?);
            }
        }
    }

    struct Search<'a> {
        scalar: &'a [Vec<Option<Rational>>],
        used: Vec<bool>,
        sigma: Vec<usize>,
        first: Option<(Vec<usize>, Rational)>,
    }

    impl Search<'_> {
        // returns the accepting matching, if any
        fn run(&mut self, product: Rational) -> Option<Vec<usize>> {
            let j = self.sigma.len();
            if j == self.scalar.len() {
                if self.first.is_none() {
                    self.first = Some((self.sigma.clone(), product.clone()));
                }
                return product.is_one().then(|| self.sigma.clone());
            }
            for k in 0..self.scalar.len() {
                let Some(c) = &self.scalar[j][k] else { continue };
                if self.used[k] {
                    continue;
                }
                self.used[k] = true;
                self.sigma.push(k);
                let found = self.run(&product * c);
                self.sigma.pop();
                self.used[k] = false;
                if found.is_some() {
                    return found;
                }
            }
            None
        }
    }

    let mut search = Search { scalar: &scalar, used: vec![false; m], sigma: Vec::with_capacity(m), first: None };
    let accepted = search.run(Rational::one());
    let scalars_for = |sigma: &[usize]| -> Vec<Rational> {
        sigma.iter().enumerate().map(|(j, &k)| scalar[j][k].clone().expect("matched pair")).collect()
    };
    let one_based = |sigma: &[usize]| sigma.iter().map(|k| k + 1).collect::<Vec<_>>();

    Ok(match (accepted, search.first) {
        (Some(sigma), _) => SystemOutcome::Holds(Witness {
            system: system.clone(),
            sigma: one_based(&sigma),
            scalars: scalars_for(&sigma),
            product: Rational::one(),
        }),
        (None, Some((sigma, product))) => SystemOutcome::Fails(Failure {
            system: system.clone(),
            reason: FailureReason::ProductNotOne,
            sigma: Some(one_based(&sigma)),
            scalars: Some(scalars_for(&sigma)),
            product: Some(product),
        }),
        (None, None) => SystemOutcome::Fails(failure(system, FailureReason::NoSpanMatching)),
    })
}

/// Decides `v^⊗ T_λ = u^⊗ T_λ` from independence, spans and wedge scalars.
///
/// Every column system must be independent for both families or for neither;
/// when independent, some span-preserving matching of its columns must have
/// transition scalars multiplying to exactly one.
pub fn decide_equality(
    fv: &VectorFamily,
    fu: &VectorFamily,
    shape: &Partition,
    options: DecideOptions,
) -> Result<EqualityVerdict> {
    check_family(fv, shape, options.limits)?;
    check_family(fu, shape, options.limits)?;
    if fv.dim() != fu.dim() {
        return Err(Error::DimensionMismatch(format!("ambient dimensions {} and {}", fv.dim(), fu.dim())));
    }

    let mut failures = Vec::new();
    let mut witnesses = Vec::new();
    for system in enumerate_column_systems(shape, options.limits)? {
        match check_system(fv, fu, &system)? {
            SystemOutcome::Vanishes => {}
            SystemOutcome::Holds(w) => witnesses.push(w),
            SystemOutcome::Fails(f) => {
                failures.push(f);
                if !options.exhaustive_failures {
                    break;
                }
            }
        }
    }

    let equal = failures.is_empty();
    let mode = match (equal, witnesses.is_empty()) {
        (false, _) => VerdictMode::Failed,
        (true, true) => VerdictMode::BothVanish,
        (true, false) => VerdictMode::Witnessed,
    };
    Ok(EqualityVerdict { equal, mode, failures, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    fn fam(dim: usize, vs: &[&[i64]]) -> VectorFamily {
        VectorFamily::from_integers(dim, vs).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sys(shape: &[usize], columns: &[&[usize]]) -> ColumnSystem {
        ColumnSystem::from_columns(&p(shape), columns.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    const LIM: Limits = Limits { max_n: 8 };

    #[test]
    fn independence_of_columns() {
        let basis = fam(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        for s in enumerate_column_systems(&p(&[2, 1]), LIM).unwrap() {
            assert!(columns_independent(&basis, &s).unwrap());
        }
        let same = fam(3, &[&[1, 0, 0], &[1, 0, 0], &[1, 0, 0]]);
        for s in enumerate_column_systems(&p(&[2, 1]), LIM).unwrap() {
            assert!(!columns_independent(&same, &s).unwrap());
        }
        let two = fam(3, &[&[1, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        assert!(columns_independent(&two, &sys(&[2, 1], &[&[1, 3], &[2]])).unwrap());
        assert!(!columns_independent(&two, &sys(&[2, 1], &[&[1, 2], &[3]])).unwrap());
        assert!(columns_independent(&fam(3, &[&[1, 0, 0]]), &sys(&[2, 1], &[&[1, 3], &[2]])).is_err());
    }

    #[test]
    fn gamas_examples() {
        let basis = fam(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(gamas_nonvanishing(&basis, &p(&[1, 1, 1]), LIM).unwrap().is_some());
        let same = fam(3, &[&[1, 0, 0], &[1, 0, 0], &[1, 0, 0]]);
        assert_eq!(gamas_nonvanishing(&same, &p(&[2, 1]), LIM).unwrap(), None);
        assert_eq!(gamas_standard(&same, &p(&[2, 1]), LIM).unwrap(), None);
        let two = fam(3, &[&[1, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(gamas_nonvanishing(&two, &p(&[2, 1]), LIM).unwrap(), Some(sys(&[2, 1], &[&[1, 3], &[2]])));
        assert_eq!(
            gamas_standard(&two, &p(&[2, 1]), LIM).unwrap(),
            Some(Tableau::new(vec![vec![1, 2], vec![3]]).unwrap())
        );
        let nonzero = fam(2, &[&[1, 0], &[1, 1], &[0, 3]]);
        assert!(gamas_standard(&nonzero, &p(&[3]), LIM).unwrap().is_some());
        assert_eq!(gamas_nonvanishing(&fam(2, &[&[0, 0]]), &p(&[1]), LIM).unwrap(), None);
        assert!(matches!(gamas_nonvanishing(&basis, &p(&[2]), LIM), Err(Error::DimensionMismatch(_))));
        assert!(matches!(
            gamas_nonvanishing(&basis, &p(&[2, 1]), Limits::new(2)),
            Err(Error::LimitExceeded { n: 3, max_n: 2 })
        ));
    }

    #[test]
    fn equality_unimodular_change() {
        let v = fam(2, &[&[1, 0], &[0, 1]]);
        let u = fam(2, &[&[1, 0], &[1, 1]]);
        let verdict = decide_equality(&v, &u, &p(&[1, 1]), DecideOptions::default()).unwrap();
        assert!(verdict.equal);
        assert_eq!(verdict.mode, VerdictMode::Witnessed);
        assert_eq!(verdict.witnesses[0].sigma, vec![1]);
        assert_eq!(verdict.witnesses[0].scalars, vec![int(1)]);
    }

    #[test]
    fn equality_rejects_scaled_wedge() {
        let v = fam(2, &[&[1, 0], &[0, 1]]);
        let u = fam(2, &[&[2, 0], &[0, 1]]);
        let verdict = decide_equality(&v, &u, &p(&[1, 1]), DecideOptions::default()).unwrap();
        assert!(!verdict.equal);
        assert_eq!(verdict.mode, VerdictMode::Failed);
        let f = &verdict.failures[0];
        assert_eq!(f.reason, FailureReason::ProductNotOne);
        // e1 ∧ e2 = (1/2) · (2e1 ∧ e2)
        assert_eq!(f.product, Some(ratio(1, 2)));
    }

    #[test]
    fn equality_compensating_scalars() {
        let v = fam(2, &[&[1, 0], &[0, 1]]);
        let u = VectorFamily::new(2, vec![vec![int(2), int(0)], vec![int(0), ratio(1, 2)]]).unwrap();
        let verdict = decide_equality(&v, &u, &p(&[2]), DecideOptions::default()).unwrap();
        assert!(verdict.equal);
        let w = &verdict.witnesses[0];
        assert_eq!(w.sigma, vec![1, 2]);
        assert_eq!(w.scalars, vec![ratio(1, 2), int(2)]);
        assert_eq!(w.product, int(1));
    }

    #[test]
    fn equality_swapped_vectors() {
        let v = fam(2, &[&[1, 0], &[0, 1]]);
        let u = fam(2, &[&[0, 1], &[1, 0]]);
        let verdict = decide_equality(&v, &u, &p(&[2]), DecideOptions::default()).unwrap();
        assert!(verdict.equal);
        assert_eq!(verdict.witnesses[0].sigma, vec![2, 1]);
        assert_eq!(verdict.witnesses[0].scalars, vec![int(1), int(1)]);
    }

    #[test]
    fn equality_both_vanish() {
        let v = fam(2, &[&[1, 0], &[1, 0]]);
        let u = fam(2, &[&[0, 1], &[0, 2]]);
        let verdict = decide_equality(&v, &u, &p(&[1, 1]), DecideOptions::default()).unwrap();
        assert!(verdict.equal);
        assert_eq!(verdict.mode, VerdictMode::BothVanish);
        assert!(verdict.witnesses.is_empty());
    }

    #[test]
    fn one_sided_vanishing_is_unequal() {
        let v = fam(2, &[&[1, 0], &[1, 0]]);
        let u = fam(2, &[&[1, 0], &[0, 1]]);
        let verdict = decide_equality(&v, &u, &p(&[1, 1]), DecideOptions::default()).unwrap();
        assert!(!verdict.equal);
        assert_eq!(verdict.failures[0].reason, FailureReason::IndependenceMismatch);
    }

    #[test]
    fn different_spans_fail_matching() {
        let v = fam(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let u = fam(3, &[&[1, 0, 0], &[0, 0, 1]]);
        let verdict = decide_equality(&v, &u, &p(&[1, 1]), DecideOptions::default()).unwrap();
        assert_eq!(verdict.failures[0].reason, FailureReason::NoSpanMatching);
    }

    #[test]
    fn exhaustive_mode_collects_every_failure() {
        let v = fam(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let u = fam(2, &[&[2, 0], &[0, 1], &[1, 1]]);
        let shape = p(&[2, 1]);
        let quick = decide_equality(&v, &u, &shape, DecideOptions::default()).unwrap();
        let all = decide_equality(&v, &u, &shape, DecideOptions { exhaustive_failures: true, ..Default::default() })
            .unwrap();
        assert_eq!(quick.failures.len(), 1);
        assert!(all.failures.len() > 1);
        assert_eq!(all.failures[0], quick.failures[0]);
        assert!(all.failures.windows(2).all(|w| w[0].system < w[1].system));
    }

    #[test]
    fn input_validation() {
        let v = fam(2, &[&[1, 0], &[0, 1]]);
        let u3 = fam(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(matches!(
            decide_equality(&v, &u3, &p(&[2]), DecideOptions::default()),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            decide_equality(&v, &v, &p(&[3]), DecideOptions::default()),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn verdict_json() {
        let v = fam(2, &[&[1, 0], &[0, 1]]);
        let u = fam(2, &[&[2, 0], &[0, 1]]);
        let verdict = decide_equality(&v, &u, &p(&[1, 1]), DecideOptions::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&verdict).unwrap(),
            r#"{"equal":false,"mode":"failed","failures":[{"system":[[1,2]],"reason":"product_not_one","sigma":[1],"scalars":["1/2"],"product":"1/2"}],"witnesses":[]}"#
        );
    }
}
