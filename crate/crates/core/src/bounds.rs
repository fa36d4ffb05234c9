//! Closed-form lower and upper bounds on `i(G)`, in `log2` units, and the
//! exact sandwich check `2^alpha <= i(G) <= sum_{j<=alpha} C(n, j)`.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::count::{log2_big, tally, BigCount, Budget, CountError, SizeProfile};
use crate::graph::Graph;

/// Which side conditions of each bound hold for the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundHypotheses {
    /// `t > 1`, needed by every formula carrying `log2 t`.
    pub degree_above_one: bool,
    /// The main bound is stated for triangle-free graphs.
    pub triangle_free: bool,
    /// `2 <= t <= n/800` for the general-graph bound.
    pub general_range: bool,
    /// `2^100 < t < sqrt(n) log2 n`, the regime of the main bound's proof.
    pub main_regime: bool,
    /// `alpha <= n/4`, for the `2 C(n, alpha)` simplification; `None` without `alpha`.
    pub alpha_at_most_quarter: Option<bool>,
}

/// Formula-only part of the report: needs just `n` and `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundFormulas {
    /// `n / (t + 1)`
    pub turan_subset_log2: f64,
    /// `(1/250)(n/t) log2 t`
    pub prop_log2: Option<f64>,
    /// `(n / 2400t) (log2 t)^2`
    pub main_log2: Option<f64>,
}

impl BoundFormulas {
    pub fn evaluate(n: f64, t: f64) -> Self {
        let logs = t > 1.0;
        let lt = libm::log2(t);
        Self {
            turan_subset_log2: n / (t + 1.0),
            prop_log2: logs.then(|| n / t * lt / 250.0),
            main_log2: logs.then(|| n / (2400.0 * t) * lt * lt),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundsReport {
    pub n: usize,
    pub t: f64,
    pub max_degree: usize,
    pub alpha: Option<usize>,
    pub exact_count: Option<BigCount>,
    pub exact_log2: Option<f64>,
    pub turan_subset_log2: f64,
    pub prop_log2: Option<f64>,
    pub main_log2: Option<f64>,
    /// `Delta(G)`: every subset of a max-degree neighbourhood is independent
    /// when the graph is triangle-free.
    pub neighborhood_log2: f64,
    pub combined_log2: f64,
    /// `log2 sum_{j=0}^{alpha} C(n, j)`.
    pub upper_sum_log2: Option<f64>,
    /// `log2 (2 C(n, alpha))`.
    pub upper_simple_log2: Option<f64>,
    pub hypotheses: BoundHypotheses,
    /// Set when exact evaluation was requested but ran out of budget.
    pub budget_exhausted: bool,
}

/// `sum_{j=0}^{a} C(n, j)`.
pub fn binomial_prefix_sum(n: usize, a: usize) -> BigUint {
    let mut c = BigUint::one();
    let mut sum = c.clone();
    for j in 1..=a.min(n) {
        c = c * BigUint::from(n - j + 1) / BigUint::from(j);
        sum += &c;
    }
    sum
}

pub fn binomial(n: usize, j: usize) -> BigUint {
    if j > n {
        return BigUint::ZERO;
    }
    let mut c = BigUint::one();
    for i in 1..=j {
        c = c * BigUint::from(n - i + 1) / BigUint::from(i);
    }
    c
}

/// Evaluates every bound. With `with_exact`, also computes `i(G)` and
/// `alpha` under `budget`; running out is recorded, not an error.
pub fn evaluate_bounds(g: &Graph, with_exact: bool, budget: &Budget) -> BoundsReport {
    let exact = if with_exact { Some(tally::<SizeProfile>(g, budget)) } else { None };
    let (profile, budget_exhausted) = match exact {
        Some(Ok(p)) => (Some(p), false),
        Some(Err(_)) => (None, true),
        None => (None, false),
    };
    bounds_from_profile(g, profile.as_ref(), budget_exhausted)
}

/// Builds the report from an already computed size profile.
pub fn bounds_from_profile(g: &Graph, profile: Option<&SizeProfile>, budget_exhausted: bool) -> BoundsReport {
    let n = g.vertex_count();
    let t = g.average_degree().as_f64();
    let f = BoundFormulas::evaluate(n as f64, t);
    let max_degree = g.max_degree();
    let neighborhood_log2 = max_degree as f64;
    let alpha = profile.map(SizeProfile::independence_number);
    let exact_count = profile.map(SizeProfile::total);
    let triangle_free = g.is_triangle_free();
    let nf = n as f64;
    BoundsReport {
        n,
        t,
        max_degree,
        alpha,
        exact_log2: exact_count.as_ref().map(BigCount::log2),
        exact_count,
        turan_subset_log2: f.turan_subset_log2,
        prop_log2: f.prop_log2,
        main_log2: f.main_log2,
        neighborhood_log2,
        combined_log2: f.main_log2.map_or(neighborhood_log2, |m| m.max(neighborhood_log2)),
        upper_sum_log2: alpha.map(|a| log2_big(&binomial_prefix_sum(n, a))),
        upper_simple_log2: alpha.map(|a| 1.0 + log2_big(&binomial(n, a))),
        hypotheses: BoundHypotheses {
            degree_above_one: t > 1.0,
            triangle_free,
            general_range: 2.0 <= t && 800.0 * t <= nf,
            main_regime: triangle_free && t > libm::pow(2.0, 100.0) && t < libm::sqrt(nf) * libm::log2(nf),
            alpha_at_most_quarter: alpha.map(|a| 4 * a <= n),
        },
        budget_exhausted,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Inequality {
    /// `i(G) >= 2^alpha`
    CountAtLeastSubsetsOfMaximum,
    /// `alpha >= n / (t + 1)`
    AlphaAtLeastTuran,
    /// `i(G) <= sum_{j<=alpha} C(n, j)`
    CountAtMostBinomialSum,
    /// The neighbourhood of a max-degree vertex is independent, so
    /// `i(G) >= 2^Delta`; checked only for triangle-free graphs.
    NeighborhoodIndependent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct InequalityCheck {
    pub inequality: Inequality,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SandwichVerdict {
    pub count: BigCount,
    pub alpha: usize,
    pub checks: Vec<InequalityCheck>,
}

impl SandwichVerdict {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

pub fn verify_sandwich(g: &Graph, budget: &Budget) -> Result<SandwichVerdict, CountError> {
    let profile = tally::<SizeProfile>(g, budget)?;
    Ok(sandwich_from_profile(g, &profile))
}

pub fn sandwich_from_profile(g: &Graph, profile: &SizeProfile) -> SandwichVerdict {
    let n = g.vertex_count();
    let count = profile.total();
    let alpha = profile.independence_number();
    let twice = 2 * g.edge_count() as u128;
    let mut checks = alloc::vec![
        InequalityCheck {
            inequality: Inequality::CountAtLeastSubsetsOfMaximum,
            holds: count >= BigCount::power_of_two(alpha),
        },
        InequalityCheck {
            inequality: Inequality::AlphaAtLeastTuran,
            // alpha (n + 2e) >= n^2
            holds: alpha as u128 * (n as u128 + twice) >= n as u128 * n as u128,
        },
        InequalityCheck {
            inequality: Inequality::CountAtMostBinomialSum,
            holds: *count.value() <= binomial_prefix_sum(n, alpha),
        },
    ];
    if g.is_triangle_free() && n > 0 {
        let v = (0..n).max_by_key(|&v| (g.degree(v), core::cmp::Reverse(v))).expect("n > 0");
        let hood = crate::graph::VertexSet::from_indices(g.neighbors(v).iter().copied());
        checks.push(InequalityCheck {
            inequality: Inequality::NeighborhoodIndependent,
            holds: g.is_independent(&hood) && count >= BigCount::power_of_two(hood.len()),
        });
    }
    SandwichVerdict { count, alpha, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::gen_clique_union;

    #[test]
    fn clique_union_report() {
        let g = gen_clique_union(800, 3).unwrap();
        let r = evaluate_bounds(&g, true, &Budget::default());
        assert_eq!(r.n, 2400);
        assert_eq!(r.t, 2.0);
        assert_eq!(r.turan_subset_log2, 800.0);
        assert_eq!(r.exact_log2, Some(1600.0));
        assert!((r.prop_log2.unwrap() - 4.8).abs() < 1e-12);
        assert_eq!(r.alpha, Some(800));
        assert!(!r.hypotheses.triangle_free);
        // 2 <= t = 2 <= 2400/800 = 3
        assert!(r.hypotheses.general_range);
    }

    #[test]
    fn c5_report() {
        let r = evaluate_bounds(&Graph::cycle(5), true, &Budget::default());
        assert_eq!(r.alpha, Some(2));
        assert_eq!(r.upper_sum_log2, Some(4.0));
        assert!((r.exact_log2.unwrap() - libm::log2(11.0)).abs() < 1e-12);
        assert!((r.exact_log2.unwrap() - 3.459).abs() < 1e-3);
        assert_eq!(r.combined_log2, r.main_log2.unwrap().max(2.0));
    }

    #[test]
    fn formula_only_substitution() {
        let f = BoundFormulas::evaluate(1e6, 1000.0);
        let expected = 1e6 / 2.4e6 * libm::log2(1000.0) * libm::log2(1000.0);
        assert!((f.main_log2.unwrap() - expected).abs() < 1e-9);
        assert!((f.main_log2.unwrap() - 41.382).abs() < 1e-3);
        assert_eq!(BoundFormulas::evaluate(10.0, 1.0).main_log2, None);
    }

    #[test]
    fn budget_shortfall_is_flagged() {
        let r = evaluate_bounds(&Graph::petersen(), true, &Budget::new(1));
        assert!(r.budget_exhausted);
        assert_eq!(r.exact_log2, None);
        assert_eq!(r.upper_sum_log2, None);
    }

    #[test]
    fn sandwich_examples() {
        let p = verify_sandwich(&Graph::petersen(), &Budget::default()).unwrap();
        assert_eq!(p.count, BigCount::from_u64(76));
        assert_eq!(binomial_prefix_sum(10, 4), BigUint::from(386u32));
        assert!(p.all_hold());
        assert_eq!(p.checks.len(), 4);

        let k2 = verify_sandwich(&Graph::complete(2), &Budget::default()).unwrap();
        assert_eq!(binomial_prefix_sum(2, 1), BigUint::from(3u32));
        assert!(k2.all_hold());

        let e5 = verify_sandwich(&Graph::empty(5), &Budget::default()).unwrap();
        assert_eq!(e5.count, BigCount::from_u64(32));
        assert!(e5.all_hold());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 5), BigUint::ZERO);
        assert_eq!(binomial_prefix_sum(5, 5), BigUint::from(32u32));
    }
}
