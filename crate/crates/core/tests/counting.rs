use iset_core::count::{brute_force_count, count_independent_sets, independence_number, size_profile, BigCount};
use iset_core::generate::{gen_bipartite, gen_clique_union, gen_gnp, gen_triangle_free_process};
use iset_core::Graph;
use num_bigint::BigUint;

/// Subset enumeration written against the raw edge list only.
fn enumerate(n: usize, edges: &[(usize, usize)]) -> (u64, usize, Vec<u64>) {
    let mut count = 0;
    let mut alpha = 0;
    let mut profile = vec![0u64; n + 1];
    for mask in 0u32..(1 << n) {
        if edges.iter().all(|&(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0) {
            let size = mask.count_ones() as usize;
            count += 1;
            alpha = alpha.max(size);
            profile[size] += 1;
        }
    }
    (count, alpha, profile)
}

#[test]
fn random_graphs_match_enumeration() {
    for seed in 0..60u64 {
        let n = 4 + (seed as usize % 13);
        let p = [0.1, 0.3, 0.5][seed as usize % 3];
        let g = gen_gnp(n, p, seed).unwrap();
        let (count, alpha, profile) = enumerate(n, &g.edges().collect::<Vec<_>>());
        assert_eq!(count_independent_sets(&g).unwrap(), BigCount::from_u64(count), "seed {seed}");
        assert_eq!(brute_force_count(&g).unwrap(), BigCount::from_u64(count));
        assert_eq!(independence_number(&g).unwrap(), alpha);
        let sp = size_profile(&g).unwrap();
        let expected: Vec<BigUint> = profile[..=alpha].iter().map(|&c| BigUint::from(c)).collect();
        assert_eq!(sp.coefficients(), expected.as_slice());
    }
}

#[test]
fn named_graphs() {
    assert_eq!(count_independent_sets(&Graph::cycle(5)).unwrap(), BigCount::from_u64(11));
    assert_eq!(count_independent_sets(&Graph::petersen()).unwrap(), BigCount::from_u64(76));
    assert_eq!(count_independent_sets(&Graph::path(10)).unwrap(), BigCount::from_u64(144));
    assert_eq!(independence_number(&Graph::petersen()).unwrap(), 4);
    assert_eq!(enumerate(10, &Graph::petersen().edges().collect::<Vec<_>>()).0, 76);
    // K_{a,b}: 2^a + 2^b - 1
    let k34 = gen_bipartite(3, 4, 1.0, 0).unwrap();
    assert_eq!(count_independent_sets(&k34).unwrap(), BigCount::from_u64(8 + 16 - 1));
}

#[test]
fn clique_union_is_a_power() {
    let g = gen_clique_union(800, 3).unwrap();
    let c = count_independent_sets(&g).unwrap();
    assert_eq!(*c.value(), BigUint::from(4u32).pow(800));
    assert_eq!(c.log2(), 1600.0);
}

#[test]
fn large_sparse_components_split() {
    // 40 disjoint C5 copies: 11^40.
    let mut g = Graph::empty(0);
    for _ in 0..40 {
        g = g.disjoint_union(&Graph::cycle(5));
    }
    assert_eq!(*count_independent_sets(&g).unwrap().value(), BigUint::from(11u32).pow(40));
}

#[test]
fn triangle_free_process_counts() {
    let g = gen_triangle_free_process(20, 3).unwrap();
    assert!(g.is_triangle_free());
    assert_eq!(count_independent_sets(&g).unwrap(), BigCount::from_u64(enumerate(20, &g.edges().collect::<Vec<_>>()).0));
}
