//! Executable checks of the structural results on derivation spaces, and a
//! runner that crosses them with the catalog.

mod checks;
mod report;

pub use checks::*;
pub use report::{CheckReport, CheckStatus, Witness};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::catalog::{default_catalog, CatalogEntry};
use crate::derivations::{derivation_space, DerivationParams, LinearMap};
use crate::linalg::{int, ratio, Matrix, Rational};

/// Random map with entries in `{−2, …, 2}`, redrawn until invertible.
pub fn random_invertible_map<R: Rng + ?Sized>(n: usize, rng: &mut R) -> LinearMap {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| int(rng.gen_range(-2..=2)));
        if m.inverse().is_some() {
            return LinearMap::new(m).expect("square");
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub t_set: Vec<Rational>,
    pub s_samples: Vec<Rational>,
    /// Sizes `m` of the abelian factor in the direct-sum checks.
    pub abelian_factors: Vec<usize>,
    /// Random changes of basis per algebra.
    pub invariance_samples: usize,
    pub seed: u64,
    /// `None` uses the global pool, `Some(0)` runs sequentially.
    pub threads: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            t_set: vec![int(-2), int(-1), ratio(1, 2), int(2), int(3)],
            s_samples: vec![int(1), int(2), int(3)],
            abelian_factors: vec![1, 2],
            invariance_samples: 3,
            seed: 0x5eed,
            threads: None,
        }
    }
}

type Task = Box<dyn Fn() -> CheckReport + Send + Sync>;

fn entry_tasks(entry: &CatalogEntry, config: &VerifyConfig, rng: &mut ChaCha8Rng, tasks: &mut Vec<Task>) {
    let a = entry.algebra.clone();
    {
        let entry = entry.clone();
        tasks.push(Box::new(move || check_catalog_expectations(&entry)));
    }
    {
        let (a, ts) = (a.clone(), config.t_set.clone());
        tasks.push(Box::new(move || check_constancy(&a, &ts)));
    }
    for t in &config.t_set {
        let (a, t) = (a.clone(), t.clone());
        let ss = config.s_samples.clone();
        tasks.push(Box::new({
            let (a, t) = (a.clone(), t.clone());
            move || {
                let p = DerivationParams::phi(t.clone());
                check_defining_identity(&a, &p, &derivation_space(&a, &p))
            }
        }));
        tasks.push(Box::new({
            let (a, t) = (a.clone(), t.clone());
            move || check_triple_identity(&a, &t)
        }));
        tasks.push(Box::new({
            let (a, t) = (a.clone(), t.clone());
            move || check_perfect_trivial(&a, &t)
        }));
        tasks.push(Box::new({
            let (a, t) = (a.clone(), t.clone());
            move || check_bounds(&a, &t)
        }));
        tasks.push(Box::new({
            let (a, t) = (a.clone(), t.clone());
            move || check_centroid_embedding(&a, &t)
        }));
        tasks.push(Box::new({
            let (a, t) = (a.clone(), t.clone());
            move || check_deformation(&a, &t, &ss)
        }));
        for &m in &config.abelian_factors {
            let (a, t) = (a.clone(), t.clone());
            tasks.push(Box::new(move || check_direct_sum_lemma(&a, m, &t)));
        }
    }
    for k in 0..config.invariance_samples {
        let g = random_invertible_map(a.dim(), rng);
        let p = match config.t_set.get(k % config.t_set.len().max(1)) {
            Some(t) => DerivationParams::phi(t.clone()),
            None => DerivationParams::centroid(),
        };
        let a = a.clone();
        tasks.push(Box::new(move || check_isomorphism_invariance(&a, &g, &p)));
    }
}

fn execute(tasks: Vec<Task>, threads: Option<usize>) -> Vec<CheckReport> {
    let run_parallel = || tasks.par_iter().map(|f| f()).collect::<Vec<_>>();
    let mut reports = match threads {
        Some(0) => tasks.iter().map(|f| f()).collect(),
        None => run_parallel(),
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(run_parallel),
            Err(_) => tasks.iter().map(|f| f()).collect(),
        },
    };
    reports.sort_by(|x, y| (&x.check_name, &x.subject).cmp(&(&y.check_name, &y.subject)));
    reports
}

/// Every check over `entries` crossed with `config`, sorted by check name
/// then subject.
pub fn run_on(entries: &[CatalogEntry], config: &VerifyConfig) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut tasks = Vec::new();
    for entry in entries {
        entry_tasks(entry, config, &mut rng, &mut tasks);
    }
    execute(tasks, config.threads)
}

/// [`run_on`] over the default catalog, plus the `𝔄_s` table for every `t`
/// in the configuration.
pub fn run_all(config: &VerifyConfig) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut tasks = Vec::new();
    for entry in &default_catalog() {
        entry_tasks(entry, config, &mut rng, &mut tasks);
    }
    for t in &config.t_set {
        let mut s_values = config.s_samples.clone();
        s_values.extend([t + int(1), -t.clone()]);
        let t = t.clone();
        tasks.push(Box::new(move || check_proposition_table(&t, &s_values)));
    }
    execute(tasks, config.threads)
}

/// No report failed. Not-applicable reports do not count against a run.
pub fn overall_pass(reports: &[CheckReport]) -> bool {
    !reports.iter().any(CheckReport::failed)
}
