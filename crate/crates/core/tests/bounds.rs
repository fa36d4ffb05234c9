use iset_core::bounds::{evaluate_bounds, verify_sandwich, BoundFormulas};
use iset_core::count::Budget;
use iset_core::generate::gen_gnp;
use iset_core::Graph;

#[test]
fn sandwich_on_small_random_graphs() {
    for seed in 0..30 {
        let g = gen_gnp(4 + seed as usize % 12, 0.3, seed).unwrap();
        let v = verify_sandwich(&g, &Budget::default()).unwrap();
        assert!(v.all_hold(), "seed {seed}: {v:?}");
    }
}

#[test]
fn report_fields_for_petersen() {
    let r = evaluate_bounds(&Graph::petersen(), true, &Budget::default());
    assert_eq!(r.alpha, Some(4));
    assert_eq!(r.max_degree, 3);
    assert_eq!(r.neighborhood_log2, 3.0);
    assert!((r.turan_subset_log2 - 2.5).abs() < 1e-12);
    // log2(1 + 10 + 45 + 120 + 210)
    assert!((r.upper_sum_log2.unwrap() - 386f64.log2()).abs() < 1e-9);
    assert!((r.upper_simple_log2.unwrap() - 420f64.log2()).abs() < 1e-9);
    assert!(r.exact_log2.unwrap() >= r.turan_subset_log2);
    assert!(!r.hypotheses.main_regime);
}

#[test]
fn formulas_without_a_graph() {
    let f = BoundFormulas::evaluate(8000.0, 4.0);
    assert_eq!(f.turan_subset_log2, 1600.0);
    assert!((f.prop_log2.unwrap() - 16.0).abs() < 1e-12);
    assert!((f.main_log2.unwrap() - 8000.0 / 9600.0 * 4.0).abs() < 1e-12);
}
