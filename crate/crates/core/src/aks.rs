//! The iterated sparse-sampling independent set algorithm.
//!
//! Each round draws a uniform `k`-subset `H` of the low-degree vertices of
//! the current graph, keeps it when it is nearly edgeless and its survivor
//! graph `M = V \ (H ∪ N(H))` is large with a good `n/t` ratio, and recurses
//! on `M`. The isolated vertices of the accepted samples form the output.
//! When the ratio factor `nu` drops below the floor, or sampling keeps
//! failing, the algorithm returns a greedy Turán-size set instead.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::index;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::rng::{seeded, Rng};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AksError {
    #[error("degenerate average degree t = {t}: the round count needs t > 1 (supply an explicit round count)")]
    DegenerateAverageDegree { t: f64 },
    #[error("k underflow: floor(n / 200t) = 0, supply explicit k")]
    KUnderflow,
    #[error("empty input graph")]
    EmptyGraph,
    #[error("invalid parameter: {0}")]
    InvalidParams(&'static str),
    #[error("hypothesis not met: {0}")]
    HypothesisUnmet(Hypothesis),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Side conditions under which the sampling lemma is proved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Hypothesis {
    /// The input has no triangle.
    TriangleFree,
    /// `n > 2^50`.
    VertexCount,
    /// `t < sqrt(n) log2 n`.
    DegreeCeiling,
    /// `t > 2^100`.
    DegreeFloor,
}

impl core::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Hypothesis::TriangleFree => "graph is triangle-free",
            Hypothesis::VertexCount => "n > 2^50",
            Hypothesis::DegreeCeiling => "t < sqrt(n) log n",
            Hypothesis::DegreeFloor => "t > 2^100",
        })
    }
}

/// Configuration. `k`, `rounds` and `nu_floor` default to the values
/// derived from the input graph when left as `None`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AksParams {
    pub k: Option<usize>,
    pub rounds: Option<usize>,
    pub c10: f64,
    pub nu_floor: Option<f64>,
    pub low_degree_factor: f64,
    pub edge_cap_factor: f64,
    pub max_attempts: usize,
    pub seed: u64,
    pub strict_hypotheses: bool,
}

impl Default for AksParams {
    fn default() -> Self {
        Self {
            k: None,
            rounds: None,
            c10: 1.0,
            nu_floor: None,
            low_degree_factor: 10.0,
            edge_cap_factor: 1.0 / 50.0,
            max_attempts: 64,
            seed: 0,
            strict_hypotheses: false,
        }
    }
}

impl AksParams {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_rounds(mut self, rounds: usize) -> Self {
        self.rounds = Some(rounds);
        self
    }

    /// Fills in every graph-derived default and validates the result.
    // The negated comparisons also reject NaN.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn resolve(&self, g: &Graph) -> Result<ResolvedParams, AksError> {
        let n = g.vertex_count();
        if n == 0 {
            return Err(AksError::EmptyGraph);
        }
        if !(self.edge_cap_factor > 0.0 && self.edge_cap_factor < 1.0) {
            return Err(AksError::InvalidParams("edge_cap_factor must lie in (0, 1)"));
        }
        if self.max_attempts == 0 {
            return Err(AksError::InvalidParams("max_attempts must be at least 1"));
        }
        if !(self.c10 > 0.0) {
            return Err(AksError::InvalidParams("c10 must be positive"));
        }
        if !(self.low_degree_factor >= 0.0) {
            return Err(AksError::InvalidParams("low_degree_factor must be non-negative"));
        }
        let t = g.average_degree();
        let above_one = t.cmp_integer(1).is_gt();
        let rounds = match self.rounds {
            Some(0) => return Err(AksError::InvalidParams("rounds must be at least 1")),
            Some(r) => r,
            None if !above_one => return Err(AksError::DegenerateAverageDegree { t: t.as_f64() }),
            // floor(log2(t) / 2) is the largest r with 4^r <= t; below t = 4 it
            // is zero and one round is run instead.
            None => {
                let mut r = 0u32;
                while r < 31 && t.cmp_integer(4u64.pow(r + 1)).is_ge() {
                    r += 1;
                }
                (r as usize).max(1)
            }
        };
        let k = match self.k {
            Some(0) => return Err(AksError::InvalidParams("k must be at least 1")),
            Some(k) => k,
            None if t.is_zero() => return Err(AksError::KUnderflow),
            // floor(n / 200t) = floor(n^2 / 400e)
            None => match (n as u128 * n as u128) / (200 * t.twice_edges as u128) {
                0 => return Err(AksError::KUnderflow),
                k => k as usize,
            },
        };
        let nu_floor = match self.nu_floor {
            Some(f) => Some(f),
            None if above_one => Some(1.0 - 1.0 / libm::log2(t.as_f64())),
            None => None,
        };
        let unmet = unmet_hypotheses(g);
        if self.strict_hypotheses {
            if let Some(&h) = unmet.first() {
                return Err(AksError::HypothesisUnmet(h));
            }
        }
        Ok(ResolvedParams {
            k,
            rounds,
            nu_floor,
            c10: self.c10,
            low_degree_factor: self.low_degree_factor,
            edge_cap_factor: self.edge_cap_factor,
            max_attempts: self.max_attempts,
            seed: self.seed,
            unmet_hypotheses: unmet,
        })
    }
}

/// Parameters after defaults are filled in.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ResolvedParams {
    pub k: usize,
    pub rounds: usize,
    /// `None` when no floor applies (average degree at most 1).
    pub nu_floor: Option<f64>,
    pub c10: f64,
    pub low_degree_factor: f64,
    pub edge_cap_factor: f64,
    pub max_attempts: usize,
    pub seed: u64,
    pub unmet_hypotheses: Vec<Hypothesis>,
}

#[allow(clippy::neg_cmp_op_on_partial_ord)]
fn unmet_hypotheses(g: &Graph) -> Vec<Hypothesis> {
    let n = g.vertex_count() as f64;
    let t = g.average_degree().as_f64();
    let mut out = Vec::new();
    if !g.is_triangle_free() {
        out.push(Hypothesis::TriangleFree);
    }
    if !(n > libm::pow(2.0, 50.0)) {
        out.push(Hypothesis::VertexCount);
    }
    if !(t < libm::sqrt(n) * libm::log2(n)) {
        out.push(Hypothesis::DegreeCeiling);
    }
    if !(t > libm::pow(2.0, 100.0)) {
        out.push(Hypothesis::DegreeFloor);
    }
    out
}

/// The ratio factor checked before round `i >= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", content = "value", rename_all = "kebab-case"))]
pub enum Nu {
    /// Round 0 never evaluates it.
    Skipped,
    /// The previous survivor graph had no edges, so `n/t` is unbounded.
    Unbounded,
    Finite(f64),
}

impl Nu {
    /// `1 - 1/t - c10 sqrt(t/n)` for a graph with `n` vertices and `twice_edges = 2e`.
    pub fn for_graph(n: usize, twice_edges: u64, c10: f64) -> Nu {
        if twice_edges == 0 {
            return Nu::Unbounded;
        }
        let t = twice_edges as f64 / n as f64;
        Nu::Finite(1.0 - 1.0 / t - c10 * libm::sqrt(t / n as f64))
    }

    fn below_floor(self, floor: Option<f64>) -> bool {
        match (self, floor) {
            (Nu::Finite(v), Some(f)) => v <= f,
            _ => false,
        }
    }
}

/// One round of the algorithm. Vertex sets are in the input graph's labels.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct IterationRecord {
    pub index: usize,
    /// `n_i`, vertices of the graph the round samples from.
    pub vertices: usize,
    /// `t_i` of that graph.
    pub average_degree: f64,
    pub nu: Nu,
    /// The accepted `H_i`, or the last rejected draw.
    pub sample: VertexSet,
    pub sample_edges: usize,
    pub attempts: usize,
    pub accepted: bool,
    pub isolated_count: usize,
    /// `n(M)` for the recorded sample.
    pub survivors: usize,
}

impl IterationRecord {
    fn start(index: usize, g: &Graph, nu: Nu) -> Self {
        Self {
            index,
            vertices: g.vertex_count(),
            average_degree: g.average_degree().as_f64(),
            nu,
            sample: VertexSet::new(),
            sample_edges: 0,
            attempts: 0,
            accepted: false,
            isolated_count: 0,
            survivors: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum AksPath {
    TuranFallback,
    SparseUnion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum FallbackReason {
    /// `nu_i` fell to or below the floor; the set comes from `M_{i-1}`.
    NuBelowFloor,
    /// No draw met all acceptance conditions within `max_attempts`.
    AttemptsExhausted,
    /// Fewer than `k` low-degree vertices remain.
    PoolExhausted,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AksOutcome {
    pub path: AksPath,
    pub fallback_reason: Option<FallbackReason>,
    pub independent_set: VertexSet,
    pub trace: Vec<IterationRecord>,
    pub completed_iterations: usize,
    pub params: ResolvedParams,
}

/// Signal that the lemma step could not produce an acceptable sample.
#[derive(Debug, Clone, PartialEq)]
pub struct FallbackSignal {
    pub reason: FallbackReason,
    pub record: IterationRecord,
}

/// An accepted lemma step, in the labels of the graph it ran on.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaStep {
    pub sample: VertexSet,
    pub survivors: VertexSet,
    pub record: IterationRecord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("candidate pool exhausted: {pool} candidates for a sample of {k}")]
pub struct PoolExhausted {
    pub pool: usize,
    pub k: usize,
}

/// Size statistics of one sample `H` and its survivor graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleMeasure {
    pub sample_edges: usize,
    pub survivors: usize,
    pub survivor_edges: usize,
}

/// Reusable marks for measuring samples without touching the whole graph.
#[derive(Debug, Clone)]
pub struct Scratch {
    stamp: Vec<u32>,
    generation: u32,
    closed: Vec<usize>,
}

impl Scratch {
    pub fn new(n: usize) -> Self {
        Self { stamp: vec![0; n], generation: 0, closed: Vec::new() }
    }

    fn bump(&mut self) -> u32 {
        if self.generation >= u32::MAX - 1 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.generation = 0;
        }
        self.generation += 1;
        self.generation
    }

    /// `e(H)`, `n(M)` and `e(M)` in time proportional to the degrees in `N[H]`.
    pub fn measure(&mut self, g: &Graph, sample: &[usize]) -> SampleMeasure {
        let in_h = self.bump();
        for &v in sample {
            self.stamp[v] = in_h;
        }
        let twice_h: usize =
            sample.iter().map(|&v| g.neighbors(v).iter().filter(|&&u| self.stamp[u] == in_h).count()).sum();

        let in_s = self.bump();
        self.closed.clear();
        for &v in sample {
            if self.stamp[v] != in_s {
                self.stamp[v] = in_s;
                self.closed.push(v);
            }
            for &u in g.neighbors(v) {
                if self.stamp[u] != in_s {
                    self.stamp[u] = in_s;
                    self.closed.push(u);
                }
            }
        }
        let mut degree_sum = 0;
        let mut twice_s = 0;
        for &v in &self.closed {
            degree_sum += g.degree(v);
            twice_s += g.neighbors(v).iter().filter(|&&u| self.stamp[u] == in_s).count();
        }
        let touching = degree_sum - twice_s / 2;
        SampleMeasure {
            sample_edges: twice_h / 2,
            survivors: g.vertex_count() - self.closed.len(),
            survivor_edges: g.edge_count() - touching,
        }
    }
}

/// Uniform `k`-subset of `candidates` and the number of edges of `g` inside it.
pub fn sparse_sample_step(
    g: &Graph,
    candidates: &VertexSet,
    k: usize,
    rng: &mut Rng,
) -> Result<(VertexSet, usize), PoolExhausted> {
    let h = draw(candidates, k, rng)?;
    let e_h = g.internal_edges(&h);
    Ok((h, e_h))
}

fn draw(candidates: &VertexSet, k: usize, rng: &mut Rng) -> Result<VertexSet, PoolExhausted> {
    if k == 0 || candidates.len() < k {
        return Err(PoolExhausted { pool: candidates.len(), k });
    }
    let pool = candidates.as_slice();
    Ok(index::sample(rng, pool.len(), k).into_iter().map(|j| pool[j]).collect())
}

/// `n(M)/t(M) > nu * n/t` with `nu` taken from `(n, e)`. An edgeless
/// survivor graph passes and an empty one fails.
pub fn ratio_condition(n: usize, edges: usize, survivors: usize, survivor_edges: usize, c10: f64) -> bool {
    if survivors == 0 {
        return false;
    }
    if survivor_edges == 0 {
        return true;
    }
    let Nu::Finite(nu) = Nu::for_graph(n, 2 * edges as u64, c10) else {
        return true;
    };
    let lhs = (survivors as f64) * (survivors as f64) / (2.0 * survivor_edges as f64);
    let rhs = nu * (n as f64) * (n as f64) / (2.0 * edges as f64);
    lhs > rhs
}

/// One application of the sampling lemma by rejection: draw from the
/// low-degree pool until `e(H) <= edge_cap * k`, `n(M) > n/2` and the ratio
/// condition all hold, or `max_attempts` draws have failed.
pub fn lemma_step(g: &Graph, params: &ResolvedParams, rng: &mut Rng) -> Result<LemmaStep, FallbackSignal> {
    let mut record = IterationRecord::start(0, g, Nu::Skipped);
    let pool = g.low_degree_pool(params.low_degree_factor);
    if pool.len() < params.k {
        return Err(FallbackSignal { reason: FallbackReason::PoolExhausted, record });
    }
    let n = g.vertex_count();
    let edge_cap = params.edge_cap_factor * params.k as f64;
    let mut scratch = Scratch::new(n);
    for attempt in 1..=params.max_attempts {
        let h = draw(&pool, params.k, rng).expect("pool size checked");
        let m = scratch.measure(g, h.as_slice());
        record.attempts = attempt;
        record.sample_edges = m.sample_edges;
        record.survivors = m.survivors;
        let accepted = m.sample_edges as f64 <= edge_cap + 1e-9
            && 2 * m.survivors > n
            && ratio_condition(n, g.edge_count(), m.survivors, m.survivor_edges, params.c10);
        record.sample = h;
        if accepted {
            let survivors = g.survivor_set(&record.sample).expect("sample lies in the graph");
            let induced = g.induced(&record.sample).expect("sample lies in the graph");
            record.isolated_count = extract_isolated(&induced.graph).len();
            record.accepted = true;
            return Ok(LemmaStep { sample: record.sample.clone(), survivors, record });
        }
    }
    Err(FallbackSignal { reason: FallbackReason::AttemptsExhausted, record })
}

/// Vertices of degree zero.
pub fn extract_isolated(g: &Graph) -> VertexSet {
    (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).collect()
}

/// Greedy minimum-degree independent set (lowest index on ties); its size
/// is at least `ceil(n / (t + 1))`.
pub fn turan_greedy(g: &Graph) -> VertexSet {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut chosen = Vec::new();
    while remaining > 0 {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (degree[v], v)).expect("a vertex remains");
        chosen.push(v);
        let closed: Vec<usize> =
            core::iter::once(v).chain(g.neighbors(v).iter().copied().filter(|&u| alive[u])).collect();
        for &u in &closed {
            alive[u] = false;
            remaining -= 1;
        }
        for &u in &closed {
            for &w in g.neighbors(u) {
                if alive[w] {
                    degree[w] -= 1;
                }
            }
        }
    }
    VertexSet::from_indices(chosen)
}

struct Level {
    graph: Graph,
    back_map: Vec<usize>,
}

impl Level {
    fn to_host(&self, set: &VertexSet) -> VertexSet {
        set.mapped(&self.back_map)
    }
}

/// Runs the algorithm on `g`.
pub fn run_aks(g: &Graph, params: &AksParams) -> Result<AksOutcome, AksError> {
    let resolved = params.resolve(g)?;
    let mut rng = seeded(resolved.seed);
    let mut trace = Vec::with_capacity(resolved.rounds);
    let mut union = Vec::new();
    let mut previous: Option<Level> = None;
    let mut current = Level { graph: g.clone(), back_map: (0..g.vertex_count()).collect() };

    let fallback = |level: &Level, reason, trace, completed, resolved| AksOutcome {
        path: AksPath::TuranFallback,
        fallback_reason: Some(reason),
        independent_set: level.to_host(&turan_greedy(&level.graph)),
        trace,
        completed_iterations: completed,
        params: resolved,
    };

    for i in 0..resolved.rounds {
        let nu = match &previous {
            None => Nu::Skipped,
            Some(p) => Nu::for_graph(p.graph.vertex_count(), 2 * p.graph.edge_count() as u64, resolved.c10),
        };
        if nu.below_floor(resolved.nu_floor) {
            let prev = previous.expect("nu is only evaluated after round 0");
            trace.push(IterationRecord::start(i, &current.graph, nu));
            return Ok(fallback(&prev, FallbackReason::NuBelowFloor, trace, i, resolved));
        }
        match lemma_step(&current.graph, &resolved, &mut rng) {
            Ok(step) => {
                let mut record = step.record;
                record.index = i;
                record.nu = nu;
                record.sample = current.to_host(&step.sample);
                let local_h = current.graph.induced(&step.sample)?;
                for v in extract_isolated(&local_h.graph).iter() {
                    union.push(current.back_map[local_h.back_map[v]]);
                }
                trace.push(record);
                let next = current.graph.induced(&step.survivors)?;
                let back_map = next.back_map.iter().map(|&v| current.back_map[v]).collect();
                previous = Some(core::mem::replace(&mut current, Level { graph: next.graph, back_map }));
            }
            Err(signal) => {
                let mut record = signal.record;
                record.index = i;
                record.nu = nu;
                record.sample = current.to_host(&record.sample);
                trace.push(record);
                return Ok(fallback(&current, signal.reason, trace, i, resolved));
            }
        }
    }
    Ok(AksOutcome {
        path: AksPath::SparseUnion,
        fallback_reason: None,
        independent_set: VertexSet::from_indices(union),
        completed_iterations: trace.len(),
        trace,
        params: resolved,
    })
}
