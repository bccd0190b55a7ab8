//! Random problem instances for self-checks and property suites.
//!
//! Entries are small rationals so that dependencies, repeated spans and
//! cancellations actually occur.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::combinatorics::{enumerate_column_systems, Limits, Partition};
use crate::linalg::{int, ratio, Rational, VectorFamily};

pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let p = rng.gen_range(-3..=3);
    let q = if rng.gen_bool(0.25) { rng.gen_range(2..=3) } else { 1 };
    ratio(p, q)
}

fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    loop {
        let x = small_rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// `n` vectors with independent small entries, about a third of them zero.
pub fn random_family<R: Rng + ?Sized>(rng: &mut R, dim: usize, n: usize) -> VectorFamily {
    let vectors = (0..n)
        .map(|_| (0..dim).map(|_| if rng.gen_bool(0.35) { Rational::zero() } else { small_rational(rng) }).collect())
        .collect();
    VectorFamily::new(dim, vectors).expect("lengths match dim")
}

/// Vectors drawn from a tiny pool with repeats, scalings and the zero vector.
pub fn adversarial_family<R: Rng + ?Sized>(rng: &mut R, dim: usize, n: usize) -> VectorFamily {
    let pool_size = rng.gen_range(1..=dim.max(1));
    let pool: Vec<Vec<Rational>> = (0..pool_size).map(|_| random_family(rng, dim, 1).vectors()[0].clone()).collect();
    let vectors = (0..n)
        .map(|_| match rng.gen_range(0..10) {
            0 => vec![Rational::zero(); dim],
            1..=2 => {
                // sum of two pool vectors
                let a = pool.choose(rng).expect("nonempty pool");
                let b = pool.choose(rng).expect("nonempty pool");
                a.iter().zip(b).map(|(x, y)| x + y).collect()
            }
            _ => {
                let s = nonzero_rational(rng);
                pool.choose(rng).expect("nonempty pool").iter().map(|x| x * &s).collect()
            }
        })
        .collect();
    VectorFamily::new(dim, vectors).expect("lengths match dim")
}

/// Either kind of family, evenly.
pub fn any_family<R: Rng + ?Sized>(rng: &mut R, dim: usize, n: usize) -> VectorFamily {
    if rng.gen_bool(0.5) {
        random_family(rng, dim, n)
    } else {
        adversarial_family(rng, dim, n)
    }
}

/// Nonzero scalars whose product is `target`.
fn scalars_with_product<R: Rng + ?Sized>(rng: &mut R, count: usize, target: &Rational) -> Vec<Rational> {
    let mut out: Vec<Rational> = (0..count.saturating_sub(1)).map(|_| nonzero_rational(rng)).collect();
    let partial = out.iter().fold(Rational::one(), |acc, x| acc * x);
    out.push(target / partial);
    out
}

/// `u_i = α_i v_i` with `∏ α_i = target`.
pub fn scaled_copy<R: Rng + ?Sized>(rng: &mut R, v: &VectorFamily, target: &Rational) -> VectorFamily {
    let alphas = scalars_with_product(rng, v.len(), target);
    let vectors = v.vectors().iter().zip(&alphas).map(|(x, a)| x.iter().map(|c| c * a).collect()).collect();
    VectorFamily::new(v.dim(), vectors).expect("lengths match dim")
}

/// Replaces the vectors of each column of a random column system of `shape`
/// by an invertible recombination of themselves; the determinants multiply to
/// `target`. Spans of those columns are preserved.
pub fn column_recombination<R: Rng + ?Sized>(
    rng: &mut R,
    v: &VectorFamily,
    shape: &Partition,
    target: &Rational,
) -> VectorFamily {
    let systems = enumerate_column_systems(shape, Limits::new(shape.size())).expect("limit is the degree");
    let system = systems.choose(rng).expect("every shape has a column system");
    let columns = system.columns();
    let dets = scalars_with_product(rng, columns.len(), target);
    let mut vectors = v.vectors().to_vec();
    for (column, det) in columns.iter().zip(&dets) {
        // upper unitriangular mixing followed by scaling one vector by det
        let k = column.len();
        let mut mix: Vec<Vec<Rational>> =
            (0..k).map(|r| (0..k).map(|c| if r == c { int(1) } else { Rational::zero() }).collect()).collect();
        for r in 0..k {
            for c in r + 1..k {
                mix[r][c] = small_rational(rng);
            }
        }
        let pivot = rng.gen_range(0..k);
        for x in mix[pivot].iter_mut() {
            *x *= det;
        }
        // new column vector c = Σ_r mix[r][c] · old vector r
        for c in 0..k {
            let mut acc = vec![Rational::zero(); v.dim()];
            for (r, &src) in column.iter().enumerate() {
                if mix[r][c].is_zero() {
                    continue;
                }
                for (a, x) in acc.iter_mut().zip(v.vector(src)) {
                    *a += &mix[r][c] * x;
                }
            }
            vectors[column[c] - 1] = acc;
        }
    }
    VectorFamily::new(v.dim(), vectors).expect("lengths match dim")
}

/// How a `(v, u)` pair was built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// Two unrelated families.
    Independent,
    /// `u` obtained from `v` by span-preserving changes with determinant product one.
    Engineered,
    /// As `Engineered`, but with product different from one.
    NearMiss,
}

impl PairKind {
    pub const ALL: [PairKind; 3] = [PairKind::Independent, PairKind::Engineered, PairKind::NearMiss];
}

pub fn sample_pair<R: Rng + ?Sized>(
    rng: &mut R,
    kind: PairKind,
    dim: usize,
    shape: &Partition,
) -> (VectorFamily, VectorFamily) {
    let n = shape.size();
    let v = any_family(rng, dim, n);
    let target = match kind {
        PairKind::Independent => return (v, any_family(rng, dim, n)),
        PairKind::Engineered => Rational::one(),
        PairKind::NearMiss => [int(-1), int(2), ratio(1, 3)].choose(rng).expect("nonempty").clone(),
    };
    let u = if rng.gen_bool(0.5) {
        scaled_copy(rng, &v, &target)
    } else {
        column_recombination(rng, &v, shape, &target)
    };
    (v, u)
}
