use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use symtensor::combinatorics::{enumerate_partitions, enumerate_permutations, Limits};
use symtensor::decision::{decide_equality, gamas_nonvanishing, gamas_standard, DecideOptions};
use symtensor::group_algebra::isotypic_projector;
use symtensor::sample::{any_family, sample_pair, small_rational, PairKind};
use symtensor::tensor::{act, apply_element, decomposable, tensor_equal, SparseTensor};
use symtensor::{character_table, character_table_oracle, Result};

#[derive(Debug, Serialize)]
pub struct PropertyReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct SelfcheckReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub passed: bool,
    pub properties: Vec<PropertyReport>,
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
        }
    }
}

const NAMES: [&str; 8] = [
    "character_table_matches_oracle",
    "right_action_law",
    "projectors_resolve_identity",
    "gamas_matches_tensor_oracle",
    "gamas_standard_matches_gamas",
    "equality_matches_tensor_oracle",
    "equality_reflexive",
    "equality_symmetric",
];

/// Runs every property `trials` times on random instances of degree `n`.
pub fn run(n: usize, trials: usize, seed: u64, limits: Limits) -> Result<SelfcheckReport> {
    limits.check(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tallies: Vec<Tally> = NAMES.iter().map(|_| Tally::default()).collect();
    let shapes = enumerate_partitions(n);
    let perms: Vec<_> = enumerate_permutations(n, limits)?.collect();
    let options = DecideOptions { limits, exhaustive_failures: false };

    tallies[0].record(character_table(n)? == character_table_oracle(n, limits)?);

    for trial in 0..trials {
        let dim = rng.gen_range(2..=3);
        let shape = shapes.choose(&mut rng).expect("n >= 1").clone();

        let entries: Vec<(Vec<usize>, _)> = (0..rng.gen_range(1..=4))
            .map(|_| ((0..n).map(|_| rng.gen_range(1..=dim)).collect(), small_rational(&mut rng)))
            .collect();
        let x = SparseTensor::from_entries(dim, n, entries)?;
        let s = perms.choose(&mut rng).expect("nonempty");
        let t = perms.choose(&mut rng).expect("nonempty");
        tallies[1].record(act(&act(&x, s)?, t)? == act(&x, &s.compose(t)?)?);

        let mut total = SparseTensor::zero(dim, n);
        for p in &shapes {
            total = total.add(&apply_element(&x, &isotypic_projector(p, limits)?)?)?;
        }
        tallies[2].record(total == x);

        let projector = isotypic_projector(&shape, limits)?;
        let f = any_family(&mut rng, dim, n);
        let nonzero = !apply_element(&decomposable(&f), &projector)?.is_zero();
        let gamas = gamas_nonvanishing(&f, &shape, limits)?.is_some();
        tallies[3].record(gamas == nonzero);
        tallies[4].record(gamas_standard(&f, &shape, limits)?.is_some() == gamas);

        let kind = PairKind::ALL[trial % PairKind::ALL.len()];
        let (v, u) = sample_pair(&mut rng, kind, dim, &shape);
        let tv = apply_element(&decomposable(&v), &projector)?;
        let tu = apply_element(&decomposable(&u), &projector)?;
        let verdict = decide_equality(&v, &u, &shape, options)?;
        tallies[5].record(verdict.equal == tensor_equal(&tv, &tu)?);
        tallies[6].record(decide_equality(&v, &v, &shape, options)?.equal);
        tallies[7].record(decide_equality(&u, &v, &shape, options)?.equal == verdict.equal);
    }

    let properties: Vec<PropertyReport> = NAMES
        .iter()
        .zip(tallies)
        .map(|(&name, t)| PropertyReport { name, checks: t.checks, failures: t.failures, passed: t.failures == 0 })
        .collect();
    let passed = properties.iter().all(|p| p.passed);
    Ok(SelfcheckReport { n, trials, seed, passed, properties })
}
