//! Exact counting of independent sets.
//!
//! All three quantities (the count `i(G)`, the independence number and the
//! size profile) come out of one recursion: split into connected
//! components, then branch on a maximum-degree vertex `v` using
//! `i(G) = i(G - v) + i(G - N[v])`. Components with at most 64 vertices are
//! relabelled into `u64` adjacency masks; larger ones work on index lists
//! of the host graph. Both levels keep an exact-key cache of connected
//! pieces, which never changes results.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::graph::{Graph, VertexSet};

/// Default recursion-node budget.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest graph [`brute_force_count`] accepts.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 25;

const MASK_LIMIT: usize = 64;
const MASK_MEMO_CAP: usize = 1 << 18;
const LIST_MEMO_CAP: usize = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CountError {
    #[error("budget exhausted: more than {limit} recursion nodes")]
    BudgetExhausted { limit: u64 },
    #[error("graph has {n} vertices; brute force is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// Shared recursion-node allowance. Safe to share between workers; whether
/// it runs out depends only on the total work, not on scheduling.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicUsize,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self { limit, used: AtomicUsize::new(0) }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed) as u64
    }

    fn tick(&self) -> Result<(), CountError> {
        let used = self.used.fetch_add(1, Ordering::Relaxed) as u64 + 1;
        if used > self.limit {
            Err(CountError::BudgetExhausted { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}

/// Arbitrary-precision count with a floating `log2` view.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn new(value: BigUint) -> Self {
        Self(value)
    }

    pub fn from_u64(value: u64) -> Self {
        Self(BigUint::from(value))
    }

    /// `2^exp`.
    pub fn power_of_two(exp: usize) -> Self {
        Self(BigUint::one() << exp)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_decimal(&self) -> String {
        self.0.to_str_radix(10)
    }

    /// `log2` of the value; uses the top 64 bits for large values, which keeps
    /// the view monotone at any size.
    pub fn log2(&self) -> f64 {
        log2_big(&self.0)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for BigCount {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

pub(crate) fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 64 {
        return libm::log2(x.to_u64().expect("fits in 64 bits") as f64);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("top 64 bits");
    libm::log2(top as f64) + shift as f64
}

/// `c_j` = number of independent sets of size `j`, for `j = 0..=alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeProfile(Vec<BigUint>);

impl SizeProfile {
    pub fn coefficients(&self) -> &[BigUint] {
        &self.0
    }

    pub fn total(&self) -> BigCount {
        BigCount(self.0.iter().sum())
    }

    pub fn independence_number(&self) -> usize {
        self.0.len() - 1
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for SizeProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for c in &self.0 {
            seq.serialize_element(&alloc::string::ToString::to_string(c))?;
        }
        seq.end()
    }
}

/// Independence number as a branching quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct IndependenceNumber(pub usize);

/// A graph invariant that obeys the branching recurrence and multiplies over
/// disjoint unions.
pub trait Tally: Clone {
    /// Value on `m` isolated vertices.
    fn edgeless(m: usize) -> Self;
    /// Combine `G - v` with `G - N[v]` (the latter before `v` is added back).
    fn branch(without: Self, with: Self) -> Self;
    /// Value on the disjoint union.
    fn product(&self, other: &Self) -> Self;
}

impl Tally for BigCount {
    fn edgeless(m: usize) -> Self {
        BigCount::power_of_two(m)
    }
    fn branch(without: Self, with: Self) -> Self {
        BigCount(without.0 + with.0)
    }
    fn product(&self, other: &Self) -> Self {
        BigCount(&self.0 * &other.0)
    }
}

impl Tally for IndependenceNumber {
    fn edgeless(m: usize) -> Self {
        IndependenceNumber(m)
    }
    fn branch(without: Self, with: Self) -> Self {
        IndependenceNumber(without.0.max(with.0 + 1))
    }
    fn product(&self, other: &Self) -> Self {
        IndependenceNumber(self.0 + other.0)
    }
}

impl Tally for SizeProfile {
    fn edgeless(m: usize) -> Self {
        let mut row = Vec::with_capacity(m + 1);
        let mut c = BigUint::one();
        row.push(c.clone());
        for j in 1..=m {
            c = c * BigUint::from(m - j + 1) / BigUint::from(j);
            row.push(c.clone());
        }
        SizeProfile(row)
    }
    fn branch(without: Self, with: Self) -> Self {
        let mut out = without.0;
        if out.len() < with.0.len() + 1 {
            out.resize(with.0.len() + 1, BigUint::zero());
        }
        for (j, c) in with.0.into_iter().enumerate() {
            out[j + 1] += c;
        }
        SizeProfile(out)
    }
    fn product(&self, other: &Self) -> Self {
        let mut out = vec![BigUint::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SizeProfile(out)
    }
}

/// Exact `i(G)`, including the empty set, with the default budget.
pub fn count_independent_sets(g: &Graph) -> Result<BigCount, CountError> {
    count_independent_sets_with(g, &Budget::default())
}

pub fn count_independent_sets_with(g: &Graph, budget: &Budget) -> Result<BigCount, CountError> {
    tally(g, budget)
}

/// Exact `alpha(G)`.
pub fn independence_number(g: &Graph) -> Result<usize, CountError> {
    independence_number_with(g, &Budget::default())
}

pub fn independence_number_with(g: &Graph, budget: &Budget) -> Result<usize, CountError> {
    tally::<IndependenceNumber>(g, budget).map(|a| a.0)
}

/// Exact independence-polynomial coefficients.
pub fn size_profile(g: &Graph) -> Result<SizeProfile, CountError> {
    size_profile_with(g, &Budget::default())
}

pub fn size_profile_with(g: &Graph, budget: &Budget) -> Result<SizeProfile, CountError> {
    tally(g, budget)
}

/// Evaluates `T` over the whole graph: product over connected components.
pub fn tally<T: Tally>(g: &Graph, budget: &Budget) -> Result<T, CountError> {
    let mut acc = T::edgeless(0);
    for comp in g.connected_components() {
        acc = acc.product(&tally_component(g, &comp, budget)?);
    }
    Ok(acc)
}

/// Evaluates `T` on one connected component of `g`. Each call uses a fresh
/// cache, so budget consumption per component does not depend on the order
/// in which components are processed.
pub fn tally_component<T: Tally>(g: &Graph, comp: &VertexSet, budget: &Budget) -> Result<T, CountError> {
    match comp.len() {
        0 => Ok(T::edgeless(0)),
        1 => Ok(T::edgeless(1)),
        len if len <= MASK_LIMIT => MaskSolver::<T>::new(g, comp.as_slice(), budget).solve_connected(low_bits(len)),
        _ => ListSolver::<T>::new(g, budget).solve_connected(comp.as_slice().to_vec()),
    }
}

/// Enumerates all `2^n` subsets. Oracle for small graphs only.
pub fn brute_force_count(g: &Graph) -> Result<BigCount, CountError> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(CountError::TooLarge { n, cap: BRUTE_FORCE_MAX_VERTICES });
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u))).collect();
    let mut count = 0u64;
    for s in 0u32..(1u32 << n) {
        let mut rest = s;
        let mut ok = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if adj[v] & s != 0 {
                ok = false;
                break;
            }
            rest &= rest - 1;
        }
        if ok {
            count += 1;
        }
    }
    Ok(BigCount::from_u64(count))
}

fn low_bits(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

struct MaskSolver<'a, T> {
    adj: Vec<u64>,
    budget: &'a Budget,
    memo: BTreeMap<u64, T>,
}

impl<'a, T: Tally> MaskSolver<'a, T> {
    /// `members` must be sorted, so local index order follows host order.
    fn new(g: &Graph, members: &[usize], budget: &'a Budget) -> Self {
        let adj = members
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .filter_map(|u| members.binary_search(u).ok())
                    .fold(0u64, |m, j| m | (1 << j))
            })
            .collect();
        Self { adj, budget, memo: BTreeMap::new() }
    }

    fn solve_set(&mut self, mask: u64) -> Result<T, CountError> {
        let mut acc = T::edgeless(0);
        let mut isolated = 0;
        let mut rest = mask;
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & mask & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            rest &= !comp;
            if comp == seed {
                isolated += 1;
            } else {
                acc = acc.product(&self.solve_connected(comp)?);
            }
        }
        Ok(acc.product(&T::edgeless(isolated)))
    }

    fn solve_connected(&mut self, mask: u64) -> Result<T, CountError> {
        if mask.count_ones() == 1 {
            return Ok(T::edgeless(1));
        }
        if let Some(hit) = self.memo.get(&mask) {
            return Ok(hit.clone());
        }
        self.budget.tick()?;
        let mut best = (0u32, 0usize);
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.adj[v] & mask).count_ones();
            if d > best.0 {
                best = (d, v);
            }
        }
        let v = best.1;
        let without = self.solve_set(mask & !(1u64 << v))?;
        let with = self.solve_set(mask & !(1u64 << v) & !self.adj[v])?;
        let value = T::branch(without, with);
        if self.memo.len() < MASK_MEMO_CAP {
            self.memo.insert(mask, value.clone());
        }
        Ok(value)
    }
}

struct ListSolver<'a, 'g, T> {
    g: &'g Graph,
    budget: &'a Budget,
    stamp: Vec<u32>,
    generation: u32,
    memo: BTreeMap<Vec<usize>, T>,
}

impl<'a, 'g, T: Tally> ListSolver<'a, 'g, T> {
    fn new(g: &'g Graph, budget: &'a Budget) -> Self {
        Self { g, budget, stamp: vec![0; g.vertex_count()], generation: 0, memo: BTreeMap::new() }
    }

    fn next_generation(&mut self) -> u32 {
        if self.generation >= u32::MAX - 2 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.generation = 0;
        }
        self.generation += 1;
        self.generation
    }

    fn solve_set(&mut self, vs: Vec<usize>) -> Result<T, CountError> {
        let inside = self.next_generation();
        let visited = self.next_generation();
        for &v in &vs {
            self.stamp[v] = inside;
        }
        let mut comps = Vec::new();
        let mut isolated = 0;
        for &start in &vs {
            if self.stamp[start] != inside {
                continue;
            }
            self.stamp[start] = visited;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &u in self.g.neighbors(v) {
                    if self.stamp[u] == inside {
                        self.stamp[u] = visited;
                        comp.push(u);
                    }
                }
            }
            if comp.len() == 1 {
                isolated += 1;
            } else {
                comp.sort_unstable();
                comps.push(comp);
            }
        }
        let mut acc = T::edgeless(isolated);
        for comp in comps {
            let value = if comp.len() <= MASK_LIMIT {
                let mut small = MaskSolver::<T>::new(self.g, &comp, self.budget);
                small.solve_connected(low_bits(comp.len()))?
            } else {
                self.solve_connected(comp)?
            };
            acc = acc.product(&value);
        }
        Ok(acc)
    }

    fn solve_connected(&mut self, comp: Vec<usize>) -> Result<T, CountError> {
        if let Some(hit) = self.memo.get(&comp) {
            return Ok(hit.clone());
        }
        self.budget.tick()?;
        let inside = self.next_generation();
        for &v in &comp {
            self.stamp[v] = inside;
        }
        let mut best = (0usize, comp[0]);
        for &v in &comp {
            let d = self.g.neighbors(v).iter().filter(|&&u| self.stamp[u] == inside).count();
            if d > best.0 {
                best = (d, v);
            }
        }
        let v = best.1;
        let closed = self.next_generation();
        self.stamp[v] = closed;
        for &u in self.g.neighbors(v) {
            if self.stamp[u] == inside {
                self.stamp[u] = closed;
            }
        }
        let with_set: Vec<usize> = comp.iter().copied().filter(|&u| self.stamp[u] != closed).collect();
        let without_set: Vec<usize> = comp.iter().copied().filter(|&u| u != v).collect();
        let without = self.solve_set(without_set)?;
        let with = self.solve_set(with_set)?;
        let value = T::branch(without, with);
        if self.memo.len() < LIST_MEMO_CAP {
            self.memo.insert(comp, value.clone());
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Oracle: enumerate every subset, record its size if independent.
    fn brute_profile(g: &Graph) -> Vec<u64> {
        let n = g.vertex_count();
        let mut out = vec![0u64; n + 1];
        for s in 0u32..(1 << n) {
            let ok = (0..n).filter(|&v| s >> v & 1 == 1).all(|v| g.neighbors(v).iter().all(|&u| s >> u & 1 == 0));
            if ok {
                out[s.count_ones() as usize] += 1;
            }
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }

    fn profile_u64(p: &SizeProfile) -> Vec<u64> {
        p.coefficients().iter().map(|c| c.to_u64().unwrap()).collect()
    }

    fn clique_union(r: usize, k: usize) -> Graph {
        (0..r).fold(Graph::empty(0), |acc, _| acc.disjoint_union(&Graph::complete(k)))
    }

    #[test]
    fn oracle_values_for_fixtures() {
        // Frozen from brute_profile.
        assert_eq!(brute_profile(&Graph::cycle(5)), vec![1, 5, 5]);
        assert_eq!(brute_profile(&Graph::petersen()).iter().sum::<u64>(), 76);
        assert_eq!(brute_profile(&Graph::petersen()).len() - 1, 4);
        assert_eq!(brute_profile(&Graph::path(4)).iter().sum::<u64>(), 8);
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_independent_sets(&Graph::empty(3)).unwrap(), BigCount::from_u64(8));
        assert_eq!(count_independent_sets(&Graph::complete(2)).unwrap(), BigCount::from_u64(3));
        assert_eq!(count_independent_sets(&Graph::cycle(5)).unwrap(), BigCount::from_u64(11));
        assert_eq!(count_independent_sets(&Graph::petersen()).unwrap(), BigCount::from_u64(76));
        assert_eq!(count_independent_sets(&Graph::empty(0)).unwrap(), BigCount::from_u64(1));
        for (r, k) in [(1, 1), (3, 2), (5, 4), (10, 3)] {
            let expected = BigUint::from(k as u64 + 1).pow(r as u32);
            assert_eq!(count_independent_sets(&clique_union(r, k)).unwrap().into_inner(), expected);
        }
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(independence_number(&Graph::complete(6)).unwrap(), 1);
        assert_eq!(independence_number(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(independence_number(&Graph::petersen()).unwrap(), 4);
        assert_eq!(independence_number(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn profiles() {
        assert_eq!(profile_u64(&size_profile(&Graph::cycle(5)).unwrap()), vec![1, 5, 5]);
        assert_eq!(profile_u64(&size_profile(&Graph::complete(2)).unwrap()), vec![1, 2]);
        assert_eq!(profile_u64(&size_profile(&Graph::empty(3)).unwrap()), vec![1, 3, 3, 1]);
    }

    #[test]
    fn brute_force_fixtures() {
        assert_eq!(brute_force_count(&Graph::cycle(5)).unwrap(), BigCount::from_u64(11));
        assert_eq!(brute_force_count(&Graph::complete(3)).unwrap(), BigCount::from_u64(4));
        assert_eq!(brute_force_count(&Graph::path(4)).unwrap(), BigCount::from_u64(8));
        assert_eq!(
            brute_force_count(&Graph::empty(26)),
            Err(CountError::TooLarge { n: 26, cap: 25 })
        );
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = Graph::petersen();
        assert_eq!(
            count_independent_sets_with(&g, &Budget::new(1)),
            Err(CountError::BudgetExhausted { limit: 1 })
        );
        // Edgeless graphs need no branching at all.
        assert!(count_independent_sets_with(&Graph::empty(40), &Budget::new(0)).is_ok());
    }

    #[test]
    fn large_components_use_the_list_solver() {
        // Paths are connected, so P_n with n > 64 exercises the list level.
        // i(P_n) = F_{n+2}.
        let n = 150;
        let mut fib = (BigUint::one(), BigUint::one());
        for _ in 0..n {
            let next = &fib.0 + &fib.1;
            fib = (fib.1, next);
        }
        assert_eq!(count_independent_sets(&Graph::path(n)).unwrap().into_inner(), fib.1);
        assert_eq!(independence_number(&Graph::path(n)).unwrap(), n / 2);
        assert_eq!(size_profile(&Graph::cycle(90)).unwrap().independence_number(), 45);
    }

    #[test]
    fn log2_view() {
        assert_eq!(BigCount::from_u64(1).log2(), 0.0);
        assert!((BigCount::from_u64(11).log2() - libm::log2(11.0)).abs() < 1e-12);
        assert_eq!(BigCount::power_of_two(1600).log2(), 1600.0);
        let big = BigCount::new(BigUint::from(3u32).pow(700));
        let expected = 700.0 * libm::log2(3.0);
        assert!(((big.log2() - expected) / expected).abs() < 1e-9);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = if n < 2 { 0 } else { n * 2 };
            proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..=pairs).prop_map(move |pairs| {
                let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
                Graph::from_edge_list(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn matches_enumeration(g in arb_graph(14)) {
            let oracle = brute_profile(&g);
            let profile = size_profile(&g).unwrap();
            prop_assert_eq!(profile_u64(&profile), oracle.clone());
            let count = count_independent_sets(&g).unwrap();
            prop_assert_eq!(count.value().to_u64().unwrap(), oracle.iter().sum::<u64>());
            prop_assert_eq!(independence_number(&g).unwrap(), oracle.len() - 1);
            prop_assert_eq!(profile.total(), count);
        }

        #[test]
        fn product_law(a in arb_graph(10), b in arb_graph(10)) {
            let joint = count_independent_sets(&a.disjoint_union(&b)).unwrap();
            let split = count_independent_sets(&a).unwrap().product(&count_independent_sets(&b).unwrap());
            prop_assert_eq!(joint, split);
        }

        #[test]
        fn deleting_an_edge_never_decreases(g in arb_graph(14)) {
            let before = count_independent_sets(&g).unwrap();
            if let Some((u, v)) = g.edges().next() {
                let edges: Vec<_> = g.edges().filter(|&e| e != (u, v)).collect();
                let h = Graph::from_edge_list(g.vertex_count(), &edges).unwrap();
                prop_assert!(count_independent_sets(&h).unwrap() >= before);
            }
        }

        #[test]
        fn turan_consistency(g in arb_graph(14)) {
            let n = g.vertex_count() as u128;
            let alpha = independence_number(&g).unwrap() as u128;
            // alpha >= n / (t + 1)  <=>  alpha * (n + 2e) >= n^2
            let twice = 2 * g.edge_count() as u128;
            prop_assert!(alpha * (n + twice) >= n * n);
        }
    }
}
