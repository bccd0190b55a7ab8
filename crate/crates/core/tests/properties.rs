//! Algebraic invariants and cross-validation between the combinatorial
//! deciders and the brute-force group-algebra route.

use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symtensor::combinatorics::{
    column_system_of, enumerate_column_systems, enumerate_fillings, enumerate_partitions, enumerate_permutations,
    Limits, Partition, Permutation,
};
use symtensor::decision::{columns_independent, decide_equality, evaluate_matching, gamas_nonvanishing, gamas_standard, DecideOptions};
use symtensor::group_algebra::{
    column_antisymmetrizer, isotypic_projector, young_symmetrizer, GroupAlgebraElement,
};
use symtensor::linalg::{determinant, int, is_independent, transition_scalar, Rational, VectorFamily};
use symtensor::sample::{any_family, sample_pair, scaled_copy, small_rational, PairKind};
use symtensor::tensor::{act, apply_element, decomposable, symmetrize, tensor_equal, SparseTensor};

const LIM: Limits = Limits { max_n: 8 };

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_tensor(rng: &mut ChaCha8Rng, dim: usize, order: usize) -> SparseTensor {
    let count = rng.gen_range(0..6);
    let entries: Vec<(Vec<usize>, Rational)> = (0..count)
        .map(|_| ((0..order).map(|_| rng.gen_range(1..=dim)).collect(), small_rational(rng)))
        .collect();
    SparseTensor::from_entries(dim, order, entries).unwrap()
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    use rand::seq::SliceRandom;
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).unwrap()
}

fn shape_for(rng: &mut ChaCha8Rng, n: usize) -> Partition {
    use rand::seq::SliceRandom;
    enumerate_partitions(n).choose(rng).unwrap().clone()
}

#[test]
fn right_action_law_exhaustive_small() {
    let mut r = rng(7);
    for n in 1..=4 {
        let perms: Vec<_> = enumerate_permutations(n, LIM).unwrap().collect();
        for dim in 1..=3 {
            let x = random_tensor(&mut r, dim, n);
            for s in &perms {
                let xs = act(&x, s).unwrap();
                for t in &perms {
                    assert_eq!(act(&xs, t).unwrap(), act(&x, &s.compose(t).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn sign_is_multiplicative_on_random_larger_permutations() {
    let mut r = rng(11);
    for n in [5, 6] {
        for _ in 0..200 {
            let (a, b) = (random_permutation(&mut r, n), random_permutation(&mut r, n));
            assert_eq!(a.compose(&b).unwrap().sign(), a.sign() * b.sign());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn applying_a_product_is_applying_in_sequence(seed in any::<u64>(), n in 1usize..=4, dim in 1usize..=3) {
        let mut r = rng(seed);
        let x = random_tensor(&mut r, dim, n);
        let element = |r: &mut ChaCha8Rng| {
            let terms: Vec<_> = (0..3).map(|_| (random_permutation(r, n), small_rational(r))).collect();
            GroupAlgebraElement::from_terms(n, terms).unwrap()
        };
        let g = element(&mut r);
        let h = element(&mut r);
        let sequential = apply_element(&apply_element(&x, &g).unwrap(), &h).unwrap();
        prop_assert_eq!(apply_element(&x, &g.multiply(&h).unwrap()).unwrap(), sequential);
    }

    #[test]
    fn projectors_resolve_the_identity_on_tensors(seed in any::<u64>(), n in 1usize..=4, dim in 1usize..=3) {
        let mut r = rng(seed);
        let x = random_tensor(&mut r, dim, n);
        let mut total = SparseTensor::zero(dim, n);
        for shape in enumerate_partitions(n) {
            let t = isotypic_projector(&shape, LIM).unwrap();
            let once = apply_element(&x, &t).unwrap();
            prop_assert_eq!(apply_element(&once, &t).unwrap(), once.clone());
            total = total.add(&once).unwrap();
        }
        prop_assert_eq!(total, x);
    }

    #[test]
    fn transition_scalars_are_inverse_and_transitive(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let dim = 3;
        let f = symtensor::sample::random_family(&mut r, dim, k);
        let s: Vec<usize> = (1..=k).collect();
        prop_assume!(is_independent(&f, &s).unwrap());
        let column = Partition::new(vec![1; k]).unwrap();
        let (d1, d2) = (small_nonzero(&mut r), small_nonzero(&mut r));
        let g = symtensor::sample::column_recombination(&mut r, &f, &column, &d1);
        let h = symtensor::sample::column_recombination(&mut r, &g, &column, &d2);
        prop_assert_eq!(transition_scalar(&f, &s, &f, &s).unwrap(), int(1));
        let fg = transition_scalar(&f, &s, &g, &s).unwrap();
        let gf = transition_scalar(&g, &s, &f, &s).unwrap();
        prop_assert_eq!(&fg * &gf, int(1));
        let gh = transition_scalar(&g, &s, &h, &s).unwrap();
        prop_assert_eq!(fg * gh, transition_scalar(&f, &s, &h, &s).unwrap());
    }

    #[test]
    fn independence_matches_nonzero_minor(seed in any::<u64>(), k in 0usize..=3) {
        let mut r = rng(seed);
        let f = any_family(&mut r, 3, k);
        let s: Vec<usize> = (1..=k).collect();
        // some k×k minor of the 3×k coordinate matrix is nonzero
        let rows: Vec<Vec<usize>> = subsets(3, k);
        let minor_nonzero = rows.iter().any(|rows| {
            let m: Vec<Vec<Rational>> =
                rows.iter().map(|&row| s.iter().map(|&i| f.vector(i)[row].clone()).collect()).collect();
            !determinant(&m).unwrap().is_zero()
        });
        prop_assert_eq!(is_independent(&f, &s).unwrap(), minor_nonzero);
    }
}

fn small_nonzero(r: &mut ChaCha8Rng) -> Rational {
    loop {
        let x = small_rational(r);
        if !x.is_zero() {
            return x;
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

#[test]
fn group_algebra_invariants_small_degrees() {
    for n in 1..=4 {
        let perms: Vec<_> = enumerate_permutations(n, LIM).unwrap().collect();
        for shape in enumerate_partitions(n) {
            let t = isotypic_projector(&shape, LIM).unwrap();
            for s in &perms {
                let g = GroupAlgebraElement::from_permutation(s.clone(), int(1));
                assert_eq!(t.multiply(&g).unwrap(), g.multiply(&t).unwrap(), "T_{shape} not central");
            }
            let dim = symtensor::characters::hook_length_dimension(&shape);
            let kappa_expected = Rational::new(
                (1..=n as u64).product::<u64>().into(),
                (dim as u64).into(),
            );
            for filling in enumerate_fillings(&shape, LIM).unwrap() {
                let c = young_symmetrizer(&filling, LIM).unwrap();
                assert_eq!(t.multiply(&c).unwrap(), c);
                assert_eq!(c.multiply(&c).unwrap(), c.scale(&kappa_expected));
            }
        }
    }
}

#[test]
fn vanishing_of_column_antisymmetrizer_and_symmetrizer() {
    let mut r = rng(3);
    for _ in 0..15 {
        let n = r.gen_range(2..=4);
        let dim = r.gen_range(2..=3);
        let shape = shape_for(&mut r, n);
        let f = any_family(&mut r, dim, n);
        let x = decomposable(&f);
        for filling in enumerate_fillings(&shape, LIM).unwrap() {
            let by_c = apply_element(&x, &young_symmetrizer(&filling, LIM).unwrap()).unwrap().is_zero();
            let by_b = apply_element(&x, &column_antisymmetrizer(&filling, LIM).unwrap()).unwrap().is_zero();
            let dependent = !columns_independent(&f, &column_system_of(&filling)).unwrap();
            assert_eq!(by_c, by_b);
            assert_eq!(by_b, dependent);
        }
    }
}

#[test]
fn deciders_agree_with_the_tensor_oracle() {
    let mut r = rng(2024);
    for trial in 0..120 {
        let n = r.gen_range(2..=4);
        let dim = r.gen_range(2..=3);
        let shape = shape_for(&mut r, n);
        let kind = PairKind::ALL[trial % 3];
        let (v, u) = sample_pair(&mut r, kind, dim, &shape);
        let tv = symmetrize(&v, &shape, LIM).unwrap();
        let tu = symmetrize(&u, &shape, LIM).unwrap();
        let verdict = decide_equality(&v, &u, &shape, DecideOptions::default()).unwrap();
        assert_eq!(verdict.equal, tensor_equal(&tv, &tu).unwrap(), "{shape} {v:?} {u:?} {verdict:?}");
        assert_eq!(gamas_nonvanishing(&v, &shape, LIM).unwrap().is_some(), !tv.is_zero());
        assert_eq!(gamas_standard(&v, &shape, LIM).unwrap().is_some(), !tv.is_zero());
        let back = decide_equality(&u, &v, &shape, DecideOptions::default()).unwrap();
        assert_eq!(back.equal, verdict.equal);
        assert!(decide_equality(&v, &v, &shape, DecideOptions::default()).unwrap().equal);
    }
}

#[test]
fn single_column_scaling_needs_unit_product() {
    let mut r = rng(5);
    for n in 1..=4 {
        let shape = Partition::new(vec![1; n]).unwrap();
        let v = symtensor::sample::random_family(&mut r, 4, n);
        for target in [int(1), int(2), Rational::new((-1).into(), 1.into())] {
            let u = scaled_copy(&mut r, &v, &target);
            let verdict = decide_equality(&v, &u, &shape, DecideOptions::default()).unwrap();
            let s: Vec<usize> = (1..=n).collect();
            if is_independent(&v, &s).unwrap() {
                assert_eq!(verdict.equal, target.is_one(), "n = {n}, target {target}");
            } else {
                assert!(verdict.equal);
            }
        }
    }
}

#[test]
fn product_ignores_internal_column_order() {
    use rand::seq::SliceRandom;
    let mut r = rng(17);
    let mut checked = 0;
    while checked < 40 {
        let n = r.gen_range(2..=5);
        let shape = shape_for(&mut r, n);
        let (v, u) = sample_pair(&mut r, PairKind::Engineered, 3, &shape);
        let verdict = decide_equality(&v, &u, &shape, DecideOptions::default()).unwrap();
        for w in &verdict.witnesses {
            let columns = w.system.columns().to_vec();
            let mut shuffled = columns.clone();
            for c in shuffled.iter_mut() {
                c.shuffle(&mut r);
            }
            let (_, product) = evaluate_matching(&v, &shuffled, &u, &shuffled, &w.sigma).unwrap();
            assert_eq!(product, w.product);
            checked += 1;
        }
    }
}

#[test]
fn product_is_the_same_for_every_admissible_matching() {
    // v has several singleton columns on one line, so many matchings are admissible
    let mut r = rng(23);
    for _ in 0..30 {
        let n = r.gen_range(2..=5);
        let shape = Partition::new(vec![n]).unwrap();
        let line = vec![small_nonzero(&mut r), small_rational(&mut r)];
        let v = VectorFamily::new(2, (0..n).map(|_| scale(&line, &small_nonzero(&mut r))).collect()).unwrap();
        let u = VectorFamily::new(2, (0..n).map(|_| scale(&line, &small_nonzero(&mut r))).collect()).unwrap();
        let system = &enumerate_column_systems(&shape, LIM).unwrap()[0];
        let columns = system.columns();
        let products: std::collections::BTreeSet<Rational> = enumerate_permutations(n, LIM)
            .unwrap()
            .map(|s| evaluate_matching(&v, columns, &u, columns, &s.one_line()).unwrap().1)
            .collect();
        assert_eq!(products.len(), 1);
    }
}

fn scale(v: &[Rational], s: &Rational) -> Vec<Rational> {
    v.iter().map(|x| x * s).collect()
}
