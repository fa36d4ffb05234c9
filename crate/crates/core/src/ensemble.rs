//! Monte-Carlo and exact checks of the sampling lemma's statistics, and the
//! distinct-outcome experiment over repeated algorithm runs.
//!
//! Trials draw `H` uniformly from the `k`-subsets of the low-degree pool
//! `{v : deg(v) <= 10t}` and record `n(M)`, `e(M)` and `e(H)`. Trial `i`
//! uses its own generator derived from `(seed, i)`, so samples can be
//! produced in any order or in parallel and aggregate identically.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::aks::{run_aks, AksError, AksParams, AksPath, Nu, PoolExhausted, SampleMeasure, Scratch};
use crate::graph::{Graph, VertexSet};
use crate::rng::{derive_seed, stream, stream_rng};

/// Pool factor used by the lemma: `deg(v) <= 10t`.
pub const LEMMA_POOL_FACTOR: f64 = 10.0;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnsembleError {
    #[error(transparent)]
    PoolTooSmall(#[from] PoolExhausted),
    #[error("at least 2 trials are needed, got {0}")]
    TooFewTrials(usize),
}

/// Exact non-negative rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Fraction {
    pub numer: u128,
    pub denom: u128,
}

impl Fraction {
    pub fn new(numer: u128, denom: u128) -> Self {
        assert!(denom != 0, "zero denominator");
        let g = gcd(numer, denom);
        Self { numer: numer / g, denom: denom / g }
    }

    pub fn as_f64(self) -> f64 {
        self.numer as f64 / self.denom as f64
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// `E[e(H)]` for a uniform `k`-subset `H` of `candidates`:
/// `e(g[candidates]) * k(k-1) / (|C|(|C|-1))`.
pub fn exact_expected_edges(g: &Graph, candidates: &VertexSet, k: usize) -> Result<Fraction, PoolExhausted> {
    let c = candidates.len();
    if c < k {
        return Err(PoolExhausted { pool: c, k });
    }
    if k < 2 {
        return Ok(Fraction::new(0, 1));
    }
    let inner = g.internal_edges(candidates) as u128;
    let (k, c) = (k as u128, c as u128);
    Ok(Fraction::new(inner * k * (k - 1), c * (c - 1)))
}

/// `E[n(M)]` for a uniform `k`-subset `H` of `candidates`: vertex `v`
/// survives iff `H` avoids `N[v]`, which happens with probability
/// `C(|C| - |N[v] ∩ C|, k) / C(|C|, k)`.
pub fn exact_expected_survivors(g: &Graph, candidates: &VertexSet, k: usize) -> Result<f64, PoolExhausted> {
    let c = candidates.len();
    if c < k {
        return Err(PoolExhausted { pool: c, k });
    }
    let mut in_pool = alloc::vec![false; g.vertex_count()];
    for v in candidates.iter() {
        in_pool[v] = true;
    }
    let total: f64 = (0..g.vertex_count())
        .map(|v| {
            let blocked = usize::from(in_pool[v]) + g.neighbors(v).iter().filter(|&&u| in_pool[u]).count();
            avoid_probability(c, blocked, k)
        })
        .sum();
    Ok(total)
}

/// `C(c - b, k) / C(c, k)` as a running product.
fn avoid_probability(c: usize, blocked: usize, k: usize) -> f64 {
    if blocked + k > c {
        return 0.0;
    }
    (0..k).map(|j| (c - blocked - j) as f64 / (c - j) as f64).product()
}

/// The lemma's sampling pool.
pub fn lemma_pool(g: &Graph) -> VertexSet {
    g.low_degree_pool(LEMMA_POOL_FACTOR)
}

/// Trial `index`: draw `H` from `pool` with the generator derived from
/// `(seed, index)` and measure it.
pub fn lemma_trial(g: &Graph, pool: &VertexSet, k: usize, seed: u64, index: u64, scratch: &mut Scratch) -> SampleMeasure {
    let mut rng = stream_rng(seed, stream::LEMMA_TRIAL, index);
    let slice = pool.as_slice();
    let h: Vec<usize> = rand::seq::index::sample(&mut rng, slice.len(), k).into_iter().map(|j| slice[j]).collect();
    scratch.measure(g, &h)
}

/// Runs `trials` independent draws in trial order.
pub fn mc_lemma_samples(g: &Graph, k: usize, trials: usize, seed: u64) -> Result<Vec<SampleMeasure>, EnsembleError> {
    let pool = lemma_pool(g);
    check_inputs(&pool, k, trials)?;
    let mut scratch = Scratch::new(g.vertex_count());
    Ok((0..trials as u64).map(|i| lemma_trial(g, &pool, k, seed, i, &mut scratch)).collect())
}

pub fn check_inputs(pool: &VertexSet, k: usize, trials: usize) -> Result<(), EnsembleError> {
    if k == 0 || pool.len() < k {
        return Err(PoolExhausted { pool: pool.len(), k }.into());
    }
    if trials < 2 {
        return Err(EnsembleError::TooFewTrials(trials));
    }
    Ok(())
}

/// Sample statistics of one observable.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ObservableStats {
    pub mean: f64,
    pub sample_variance: f64,
    /// `sqrt(sample_variance / trials)`.
    pub std_error: f64,
    /// Large-sample standard error of `sample_variance`.
    pub variance_std_error: f64,
    /// `sigma_multiplier * std_error`.
    pub confidence_radius: f64,
}

impl ObservableStats {
    pub fn from_values(values: &[f64], sigma_multiplier: f64) -> Self {
        let n = values.len() as f64;
        let mean = neumaier_sum(values.iter().copied()) / n;
        let m2 = neumaier_sum(values.iter().map(|x| (x - mean) * (x - mean)));
        let m4 = neumaier_sum(values.iter().map(|x| {
            let d = (x - mean) * (x - mean);
            d * d
        })) / n;
        let sample_variance = if values.len() > 1 { m2 / (n - 1.0) } else { 0.0 };
        let std_error = libm::sqrt(sample_variance / n);
        let biased = m2 / n;
        let variance_std_error = libm::sqrt(((m4 - biased * biased) / n).max(0.0));
        Self {
            mean,
            sample_variance,
            std_error,
            variance_std_error,
            confidence_radius: sigma_multiplier * std_error,
        }
    }
}

/// Compensated summation; the result depends only on the order of `values`.
pub fn neumaier_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for x in values {
        let t = sum + x;
        if libm::fabs(sum) >= libm::fabs(x) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Statistics of `n(M)`, `e(M)` and `e(H)` over a run of trials.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EnsembleStats {
    pub trials: usize,
    pub sigma_multiplier: f64,
    pub survivors: ObservableStats,
    pub survivor_edges: ObservableStats,
    pub sample_edges: ObservableStats,
}

impl EnsembleStats {
    pub fn from_samples(samples: &[SampleMeasure], sigma_multiplier: f64) -> Self {
        let col = |f: fn(&SampleMeasure) -> usize| -> Vec<f64> { samples.iter().map(|s| f(s) as f64).collect() };
        Self {
            trials: samples.len(),
            sigma_multiplier,
            survivors: ObservableStats::from_values(&col(|s| s.survivors), sigma_multiplier),
            survivor_edges: ObservableStats::from_values(&col(|s| s.survivor_edges), sigma_multiplier),
            sample_edges: ObservableStats::from_values(&col(|s| s.sample_edges), sigma_multiplier),
        }
    }
}

pub fn mc_lemma_stats(g: &Graph, k: usize, trials: usize, seed: u64) -> Result<EnsembleStats, EnsembleError> {
    Ok(EnsembleStats::from_samples(&mc_lemma_samples(g, k, trials, seed)?, 4.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum ClaimId {
    /// `E[n(M)] > n(1 - k/(n-t))^(t+1) > 9n/10`
    ExpectedSurvivors,
    /// `E[e(M)] > (nt/2)(1 - k/(n-20t))^(20t+1) > nt/10`
    ExpectedSurvivorEdges,
    /// `E[e(H)] <= tk^2/n`
    ExpectedSampleEdges,
    /// `Var[n(M)] < 2nk(t+1)(10t+1)/(n-k-20t-2) < nt`
    VarianceSurvivors,
    /// `Var[e(M)] < 2400kt^4 < 40nt^3`
    VarianceSurvivorEdges,
    /// `Var[e(H)] <= tk^2(10k+n)/n^2`
    VarianceSampleEdges,
    /// `e(M) < (1+delta)E[e(M)]` and `n(M) > (1-delta)E[n(M)]` imply `n'/t' > nu n/t`
    RatioConditional,
}

/// Which side of the bound the estimate must lie on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Direction {
    Above,
    Below,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Verdict {
    Consistent,
    /// Consistent, but the claim depends on an unspecified constant.
    ConsistentConditional,
    Violated,
    HypothesesUnmet,
}

/// Per-trial tally for the conditional ratio claim.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConditionalTally {
    pub delta: f64,
    pub nu: Option<f64>,
    /// Trials where both antecedent events held.
    pub antecedent_trials: usize,
    /// Of those, trials where the ratio failed.
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ClaimRecord {
    pub id: ClaimId,
    pub direction: Direction,
    /// The first (sharpest) bound of the claim's chain.
    pub bound: Option<f64>,
    /// The second bound of the chain, if any.
    pub chain_bound: Option<f64>,
    /// Whether `k <= n/100t`, under which the chain bound is asserted.
    pub chain_applicable: bool,
    pub estimate: f64,
    pub std_error: f64,
    /// Exact value over the actual pool, where it is computable.
    pub exact: Option<f64>,
    /// `(estimate - bound)` in the claimed direction, in standard errors.
    pub margin_sigma: Option<f64>,
    pub conditional: Option<ConditionalTally>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LemmaReport {
    pub n: usize,
    pub t: f64,
    pub k: usize,
    pub pool_size: usize,
    pub triangle_free: bool,
    pub c10: f64,
    pub stats: EnsembleStats,
    /// `E[e(H)]` as the closed form over the whole graph, `nt k(k-1) / (2n(n-1))`.
    pub whole_graph_expected_edges: f64,
    pub claims: Vec<ClaimRecord>,
}

impl LemmaReport {
    pub fn any_violated(&self) -> bool {
        self.claims.iter().any(|c| c.verdict == Verdict::Violated)
    }

    /// Evaluates every claim against the given trial samples.
    pub fn evaluate(g: &Graph, k: usize, samples: &[SampleMeasure], sigma_multiplier: f64, c10: f64) -> Self {
        let pool = lemma_pool(g);
        let stats = EnsembleStats::from_samples(samples, sigma_multiplier);
        let n = g.vertex_count();
        let nf = n as f64;
        let t = g.average_degree().as_f64();
        let kf = k as f64;
        let triangle_free = g.is_triangle_free();
        let chain_applicable = 100.0 * t * kf <= nf;
        let sigma = sigma_multiplier;

        let expected_edges = exact_expected_edges(g, &pool, k).ok().map(Fraction::as_f64);
        let expected_survivors = exact_expected_survivors(g, &pool, k).ok();

        let mut claims = Vec::with_capacity(7);

        let base = 1.0 - kf / (nf - t);
        claims.push(check(
            ClaimId::ExpectedSurvivors,
            Direction::Above,
            (nf - t > 0.0 && base >= 0.0).then(|| nf * libm::pow(base, t + 1.0)),
            Some(0.9 * nf),
            chain_applicable,
            stats.survivors.mean,
            stats.survivors.std_error,
            expected_survivors,
            sigma,
        ));

        let base = 1.0 - kf / (nf - 20.0 * t);
        claims.push(check(
            ClaimId::ExpectedSurvivorEdges,
            Direction::Above,
            (nf - 20.0 * t > 0.0 && base >= 0.0).then(|| nf * t / 2.0 * libm::pow(base, 20.0 * t + 1.0)),
            Some(nf * t / 10.0),
            chain_applicable,
            stats.survivor_edges.mean,
            stats.survivor_edges.std_error,
            None,
            sigma,
        ));

        claims.push(check(
            ClaimId::ExpectedSampleEdges,
            Direction::Below,
            Some(t * kf * kf / nf),
            None,
            false,
            stats.sample_edges.mean,
            stats.sample_edges.std_error,
            expected_edges,
            sigma,
        ));

        let denom = nf - kf - 20.0 * t - 2.0;
        claims.push(check(
            ClaimId::VarianceSurvivors,
            Direction::Below,
            (denom > 0.0).then(|| 2.0 * nf * kf * (t + 1.0) * (10.0 * t + 1.0) / denom),
            Some(nf * t),
            chain_applicable,
            stats.survivors.sample_variance,
            stats.survivors.variance_std_error,
            None,
            sigma,
        ));

        claims.push(check(
            ClaimId::VarianceSurvivorEdges,
            Direction::Below,
            Some(2400.0 * kf * libm::pow(t, 4.0)),
            Some(40.0 * nf * libm::pow(t, 3.0)),
            chain_applicable,
            stats.survivor_edges.sample_variance,
            stats.survivor_edges.variance_std_error,
            None,
            sigma,
        ));

        let mut var_h = check(
            ClaimId::VarianceSampleEdges,
            Direction::Below,
            Some(t * kf * kf * (10.0 * kf + nf) / (nf * nf)),
            None,
            false,
            stats.sample_edges.sample_variance,
            stats.sample_edges.variance_std_error,
            None,
            sigma,
        );
        if !chain_applicable {
            var_h.verdict = Verdict::HypothesesUnmet;
        }
        claims.push(var_h);

        claims.push(ratio_claim(g, samples, &stats, c10));

        if !triangle_free {
            for c in &mut claims {
                c.verdict = Verdict::HypothesesUnmet;
            }
        }

        LemmaReport {
            n,
            t,
            k,
            pool_size: pool.len(),
            triangle_free,
            c10,
            whole_graph_expected_edges: if n > 1 { nf * t / 2.0 * kf * (kf - 1.0) / (nf * (nf - 1.0)) } else { 0.0 },
            stats,
            claims,
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn check(
    id: ClaimId,
    direction: Direction,
    bound: Option<f64>,
    chain_bound: Option<f64>,
    chain_applicable: bool,
    estimate: f64,
    std_error: f64,
    exact: Option<f64>,
    sigma: f64,
) -> ClaimRecord {
    let signed = |b: f64| match direction {
        Direction::Above => estimate - b,
        Direction::Below => b - estimate,
    };
    let contradicts = |b: f64| {
        let diff = signed(b);
        if std_error > 0.0 {
            diff / std_error < -sigma
        } else {
            diff < -1e-12 * libm::fabs(b).max(1.0)
        }
    };
    let margin_sigma = bound.filter(|_| std_error > 0.0).map(|b| signed(b) / std_error);
    let verdict = match bound {
        None => Verdict::HypothesesUnmet,
        Some(b) if contradicts(b) => Verdict::Violated,
        Some(_) if chain_applicable && chain_bound.is_some_and(contradicts) => Verdict::Violated,
        Some(_) => Verdict::Consistent,
    };
    ClaimRecord {
        id,
        direction,
        bound,
        chain_bound,
        chain_applicable,
        estimate,
        std_error,
        exact,
        margin_sigma,
        conditional: None,
        verdict,
    }
}

/// Checks the implication trial by trial, with the sample means standing in
/// for `E[n(M)]` and `E[e(M)]`.
fn ratio_claim(g: &Graph, samples: &[SampleMeasure], stats: &EnsembleStats, c10: f64) -> ClaimRecord {
    let n = g.vertex_count();
    let t = g.average_degree().as_f64();
    let delta = 800.0 * libm::sqrt(t / n as f64);
    let nu = match Nu::for_graph(n, 2 * g.edge_count() as u64, c10) {
        Nu::Finite(v) => Some(v),
        _ => None,
    };
    let mut antecedent_trials = 0;
    let mut failures = 0;
    for s in samples {
        let held = (s.survivor_edges as f64) < (1.0 + delta) * stats.survivor_edges.mean
            && (s.survivors as f64) > (1.0 - delta) * stats.survivors.mean;
        if held {
            antecedent_trials += 1;
            if !crate::aks::ratio_condition(n, g.edge_count(), s.survivors, s.survivor_edges, c10) {
                failures += 1;
            }
        }
    }
    ClaimRecord {
        id: ClaimId::RatioConditional,
        direction: Direction::Below,
        bound: Some(0.0),
        chain_bound: None,
        chain_applicable: false,
        estimate: failures as f64,
        std_error: 0.0,
        exact: None,
        margin_sigma: None,
        conditional: Some(ConditionalTally { delta, nu, antecedent_trials, failures }),
        verdict: if failures == 0 { Verdict::ConsistentConditional } else { Verdict::Violated },
    }
}

/// Monte-Carlo run plus claim evaluation.
pub fn check_lemma_bounds(
    g: &Graph,
    k: usize,
    trials: usize,
    seed: u64,
    sigma_multiplier: f64,
    c10: f64,
) -> Result<LemmaReport, EnsembleError> {
    let samples = mc_lemma_samples(g, k, trials, seed)?;
    Ok(LemmaReport::evaluate(g, k, &samples, sigma_multiplier, c10))
}

/// Seed of run `index` in [`distinct_sets_experiment`].
pub fn distinct_run_seed(seed: u64, index: u64) -> u64 {
    derive_seed(seed, stream::DISTINCT_RUN, index)
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DistinctSets {
    pub runs: usize,
    pub distinct: usize,
    pub sparse_union_runs: usize,
    pub fallback_runs: usize,
}

/// Folds run outcomes into a [`DistinctSets`]; order of `outcomes` is irrelevant.
pub fn tally_distinct<I: IntoIterator<Item = (AksPath, VertexSet)>>(outcomes: I) -> DistinctSets {
    let mut seen = BTreeSet::new();
    let (mut runs, mut sparse) = (0, 0);
    for (path, set) in outcomes {
        runs += 1;
        if path == AksPath::SparseUnion {
            sparse += 1;
        }
        seen.insert(set);
    }
    DistinctSets { runs, distinct: seen.len(), sparse_union_runs: sparse, fallback_runs: runs - sparse }
}

/// Runs the algorithm `runs` times with seeds derived from `(seed, run)`
/// and counts the distinct independent sets returned.
pub fn distinct_sets_experiment(g: &Graph, params: &AksParams, runs: usize, seed: u64) -> Result<DistinctSets, AksError> {
    let mut outcomes = Vec::with_capacity(runs);
    for r in 0..runs as u64 {
        let p = params.clone().with_seed(distinct_run_seed(seed, r));
        let out = run_aks(g, &p)?;
        outcomes.push((out.path, out.independent_set));
    }
    Ok(tally_distinct(outcomes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen_bipartite, gen_triangle_free_process};

    /// Oracle: average of `f(H)` over every `k`-subset of the pool.
    fn enumerate_k_subsets(pool: &[usize], k: usize, f: &mut dyn FnMut(&VertexSet)) {
        fn rec(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&VertexSet)) {
            if cur.len() == k {
                f(&VertexSet::from_indices(cur.iter().copied()));
                return;
            }
            for i in start..pool.len() {
                cur.push(pool[i]);
                rec(pool, k, i + 1, cur, f);
                cur.pop();
            }
        }
        rec(pool, k, 0, &mut Vec::new(), f);
    }

    fn oracle_means(g: &Graph, k: usize) -> (f64, f64) {
        let pool = lemma_pool(g);
        let (mut count, mut edges, mut survivors) = (0.0, 0.0, 0.0);
        enumerate_k_subsets(pool.as_slice(), k, &mut |h| {
            count += 1.0;
            edges += g.internal_edges(h) as f64;
            survivors += g.survivor_set(h).unwrap().len() as f64;
        });
        (edges / count, survivors / count)
    }

    fn k33() -> Graph {
        gen_bipartite(3, 3, 1.0, 0).unwrap()
    }

    #[test]
    fn expected_edges_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(exact_expected_edges(&k2, &VertexSet::full(2), 2).unwrap(), Fraction::new(1, 1));
        let c5 = Graph::cycle(5);
        assert_eq!(exact_expected_edges(&c5, &VertexSet::full(5), 2).unwrap(), Fraction::new(1, 2));
        assert_eq!(exact_expected_edges(&c5, &VertexSet::full(5), 3).unwrap(), Fraction::new(3, 2));
        assert_eq!(exact_expected_edges(&c5, &VertexSet::full(5), 1).unwrap(), Fraction::new(0, 1));
        assert!(exact_expected_edges(&c5, &VertexSet::full(5), 6).is_err());
        // Enumeration agrees.
        assert_eq!(oracle_means(&c5, 2).0, 0.5);
        assert_eq!(oracle_means(&c5, 3).0, 1.5);
        assert_eq!(oracle_means(&k33(), 2).0, 0.6);
    }

    #[test]
    fn expected_survivors_match_enumeration() {
        // C5, k=2: adjacent pairs leave one survivor, the others none.
        let c5 = Graph::cycle(5);
        assert_eq!(oracle_means(&c5, 2).1, 0.5);
        let got = exact_expected_survivors(&c5, &VertexSet::full(5), 2).unwrap();
        assert!((got - 0.5).abs() < 1e-12);
        for seed in 0..4 {
            let g = gen_triangle_free_process(9, seed).unwrap();
            for k in 1..4 {
                let exact = exact_expected_survivors(&g, &lemma_pool(&g), k).unwrap();
                assert!((exact - oracle_means(&g, k).1).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn empty_graph_statistics_are_exact() {
        let stats = mc_lemma_stats(&Graph::empty(50), 5, 100, 1).unwrap();
        assert_eq!(stats.sample_edges.mean, 0.0);
        assert_eq!(stats.survivors.mean, 45.0);
        assert_eq!(stats.survivors.sample_variance, 0.0);
    }

    #[test]
    fn input_errors() {
        assert!(matches!(mc_lemma_stats(&Graph::empty(3), 4, 10, 0), Err(EnsembleError::PoolTooSmall(_))));
        assert_eq!(mc_lemma_stats(&Graph::empty(3), 2, 1, 0), Err(EnsembleError::TooFewTrials(1)));
    }

    #[test]
    fn c5_survivor_mean_matches_exact() {
        let stats = mc_lemma_stats(&Graph::cycle(5), 2, 20_000, 3).unwrap();
        assert!((stats.survivors.mean - 0.5).abs() < 4.0 * stats.survivors.std_error);
    }

    #[test]
    fn statistics_helpers() {
        let s = ObservableStats::from_values(&[1.0, 2.0, 3.0, 4.0], 2.0);
        assert_eq!(s.mean, 2.5);
        assert!((s.sample_variance - 5.0 / 3.0).abs() < 1e-12);
        assert!((s.std_error - libm::sqrt(5.0 / 12.0)).abs() < 1e-12);
        assert_eq!(s.confidence_radius, 2.0 * s.std_error);
        assert_eq!(neumaier_sum([1e16, 1.0, -1e16]), 1.0);
    }

    #[test]
    fn trials_are_order_independent() {
        let g = gen_bipartite(20, 20, 0.2, 1).unwrap();
        let pool = lemma_pool(&g);
        let all = mc_lemma_samples(&g, 3, 50, 9).unwrap();
        let mut scratch = Scratch::new(g.vertex_count());
        for i in (0..50).rev() {
            assert_eq!(lemma_trial(&g, &pool, 3, 9, i, &mut scratch), all[i as usize]);
        }
    }

    #[test]
    fn lemma_report_on_empty_and_non_triangle_free() {
        let r = check_lemma_bounds(&Graph::empty(30), 2, 100, 0, 4.0, 1.0).unwrap();
        let eh = r.claims.iter().find(|c| c.id == ClaimId::ExpectedSampleEdges).unwrap();
        assert_eq!(eh.verdict, Verdict::Consistent);
        assert_eq!(eh.bound, Some(0.0));
        assert!(!r.any_violated());

        let r = check_lemma_bounds(&Graph::complete(3), 2, 100, 0, 4.0, 1.0).unwrap();
        assert!(r.claims.iter().all(|c| c.verdict == Verdict::HypothesesUnmet));
    }

    #[test]
    fn verdict_logic() {
        let v = |est: f64, se: f64| check(ClaimId::ExpectedSurvivors, Direction::Above, Some(10.0), None, false, est, se, None, 4.0).verdict;
        assert_eq!(v(9.0, 0.5), Verdict::Consistent);
        assert_eq!(v(7.0, 0.5), Verdict::Violated);
        assert_eq!(v(10.0, 0.0), Verdict::Consistent);
        assert_eq!(v(9.99, 0.0), Verdict::Violated);
        let chained = check(ClaimId::ExpectedSurvivors, Direction::Above, Some(10.0), Some(20.0), true, 15.0, 1.0, None, 4.0);
        assert_eq!(chained.verdict, Verdict::Violated);
        let unmet = check(ClaimId::ExpectedSurvivors, Direction::Above, None, None, false, 1.0, 1.0, None, 4.0);
        assert_eq!(unmet.verdict, Verdict::HypothesesUnmet);
    }

    #[test]
    fn distinct_sets_on_small_fixtures() {
        let g = Graph::empty(6);
        let p = AksParams::default().with_k(2).with_rounds(1);
        let d = distinct_sets_experiment(&g, &p, 2000, 5).unwrap();
        assert_eq!(d.distinct, 15);
        assert_eq!(d.sparse_union_runs, 2000);

        let kn = Graph::complete(8);
        let d = distinct_sets_experiment(&kn, &AksParams::default().with_k(2), 50, 5).unwrap();
        assert_eq!(d.distinct, 1);
        assert_eq!(d.fallback_runs, 50);
    }
}
