use iset_core::aks::{run_aks, turan_greedy, AksParams, AksPath};
use iset_core::ensemble::{check_lemma_bounds, exact_expected_edges, lemma_pool, mc_lemma_stats, Verdict};
use iset_core::generate::{gen_bipartite, gen_clique_union, gen_gnp, gen_triangle_free_process};
use iset_core::Graph;

/// E[e(H)] by averaging over every k-subset.
fn expected_edges_by_enumeration(g: &Graph, k: usize) -> f64 {
    let n = g.vertex_count();
    let (mut total, mut subsets) = (0u64, 0u64);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        subsets += 1;
        total += g.edges().filter(|&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1).count() as u64;
    }
    total as f64 / subsets as f64
}

#[test]
fn exact_expectation_matches_enumeration() {
    for g in [Graph::cycle(5), gen_bipartite(3, 3, 1.0, 0).unwrap(), Graph::petersen()] {
        for k in 2..=4 {
            let exact = exact_expected_edges(&g, &lemma_pool(&g), k).unwrap().as_f64();
            assert!((exact - expected_edges_by_enumeration(&g, k)).abs() < 1e-12);
        }
    }
}

#[test]
fn monte_carlo_sample_edges_near_exact() {
    let g = gen_bipartite(3, 3, 1.0, 0).unwrap();
    let stats = mc_lemma_stats(&g, 2, 20_000, 11).unwrap();
    let exact = expected_edges_by_enumeration(&g, 2);
    assert!((stats.sample_edges.mean - exact).abs() <= 4.0 * stats.sample_edges.std_error);
}

#[test]
fn lemma_claims_on_sparse_bipartite() {
    let g = gen_bipartite(300, 300, 0.01, 5).unwrap();
    let report = check_lemma_bounds(&g, 2, 5_000, 1, 4.0, 1.0).unwrap();
    assert!(!report.any_violated(), "{:#?}", report.claims);
    assert_eq!(report.claims.len(), 7);
}

#[test]
fn triangles_mark_hypotheses_unmet() {
    let g = gen_clique_union(50, 3).unwrap();
    let report = check_lemma_bounds(&g, 2, 200, 0, 4.0, 1.0).unwrap();
    assert!(report.claims.iter().all(|c| c.verdict == Verdict::HypothesesUnmet));
}

#[test]
fn runs_return_independent_sets() {
    let graphs = [
        Graph::empty(40),
        gen_gnp(80, 0.05, 1).unwrap(),
        gen_bipartite(50, 50, 0.04, 2).unwrap(),
        gen_triangle_free_process(60, 3).unwrap(),
        gen_clique_union(20, 4).unwrap(),
    ];
    for g in &graphs {
        for seed in 0..20 {
            let params = AksParams::default().with_k(2).with_rounds(3).with_seed(seed);
            let out = run_aks(g, &params).unwrap();
            assert!(g.is_independent(&out.independent_set));
            if out.path == AksPath::SparseUnion {
                assert_eq!(out.completed_iterations, 3);
            }
        }
    }
}

#[test]
fn greedy_meets_turan_bound() {
    for seed in 0..20 {
        let g = gen_gnp(150, 0.08, seed).unwrap();
        let s = turan_greedy(&g);
        let (n, twice) = (g.vertex_count(), 2 * g.edge_count());
        assert!(g.is_independent(&s));
        assert!(s.len() * (n + twice) >= n * n);
    }
}
