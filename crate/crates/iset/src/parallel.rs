//! Worker-pool versions of the counting and Monte-Carlo routines. Every
//! function here returns exactly what its sequential counterpart in
//! `iset_core` returns, for any number of workers.

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

use iset_core::aks::{run_aks, AksError, AksParams, SampleMeasure, Scratch};
use iset_core::count::{tally_component, Budget, CountError, Tally};
use iset_core::ensemble::{
    check_inputs, distinct_run_seed, lemma_pool, lemma_trial, tally_distinct, DistinctSets, EnsembleError,
};
use iset_core::Graph;

pub struct Workers {
    pool: ThreadPool,
    count: usize,
}

impl Workers {
    pub fn new(count: usize) -> Self {
        let count = count.max(1);
        let pool = ThreadPoolBuilder::new().num_threads(count).build().expect("thread pool");
        Self { pool, count }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Product over connected components, each evaluated on some worker.
    pub fn tally<T: Tally + Send>(&self, g: &Graph, budget: &Budget) -> Result<T, CountError> {
        let comps = g.connected_components();
        let parts: Vec<Result<T, CountError>> =
            self.pool.install(|| comps.par_iter().map(|c| tally_component::<T>(g, c, budget)).collect());
        parts.into_iter().try_fold(T::edgeless(0), |acc, part| Ok(acc.product(&part?)))
    }

    pub fn lemma_samples(
        &self,
        g: &Graph,
        k: usize,
        trials: usize,
        seed: u64,
    ) -> Result<Vec<SampleMeasure>, EnsembleError> {
        let pool = lemma_pool(g);
        check_inputs(&pool, k, trials)?;
        let n = g.vertex_count();
        Ok(self.pool.install(|| {
            (0..trials as u64)
                .into_par_iter()
                .map_init(|| Scratch::new(n), |scratch, i| lemma_trial(g, &pool, k, seed, i, scratch))
                .collect()
        }))
    }

    pub fn distinct_sets(&self, g: &Graph, params: &AksParams, runs: usize, seed: u64) -> Result<DistinctSets, AksError> {
        let outcomes: Result<Vec<_>, AksError> = self.pool.install(|| {
            (0..runs as u64)
                .into_par_iter()
                .map(|r| {
                    let out = run_aks(g, &params.clone().with_seed(distinct_run_seed(seed, r)))?;
                    Ok((out.path, out.independent_set))
                })
                .collect()
        });
        Ok(tally_distinct(outcomes?))
    }
}
