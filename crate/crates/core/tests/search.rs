use std::collections::BTreeSet;

use tdc_core::criticality::{
    check_cross_edge_conditions, check_frame_structure, exempt_vertices, Check,
};
use tdc_core::search::{
    canonical_graph6, search_critical_full, search_critical_pruned, SearchOptions,
};
use tdc_core::{graph6, is_k_gamma_t_critical, Count};

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Full-search certificates that have a maximum-degree vertex outside the
/// exempt set, i.e. the ones the frame search is designed to reach.
fn frame_reachable(certs: &[String]) -> BTreeSet<String> {
    certs
        .iter()
        .filter(|c| {
            let g = graph6::decode(c).unwrap();
            !(g.max_degree_vertices() - exempt_vertices(&g)).is_empty()
        })
        .cloned()
        .collect()
}

#[test]
fn frame_search_agrees_with_full_enumeration_on_reachable_graphs() {
    let opts = SearchOptions {
        workers: workers(),
        prune_diameter: false,
    };
    for delta in 2..=5 {
        let pruned = search_critical_pruned(delta, &opts).unwrap();
        let full = search_critical_full(delta + 3, delta, 3, &opts).unwrap();
        let pruned: BTreeSet<String> = pruned.certificates.into_iter().collect();
        assert_eq!(pruned, frame_reachable(&full.certificates), "delta={delta}");
    }
}

#[test]
fn worker_count_does_not_change_results() {
    for delta in [4, 6] {
        let one = search_critical_pruned(
            delta,
            &SearchOptions {
                workers: 1,
                prune_diameter: false,
            },
        )
        .unwrap();
        let many = search_critical_pruned(
            delta,
            &SearchOptions {
                workers: 4,
                prune_diameter: false,
            },
        )
        .unwrap();
        assert!(one.same_result(&many));
    }
    let one = search_critical_full(7, 4, 3, &SearchOptions::default()).unwrap();
    let many = search_critical_full(
        7,
        4,
        3,
        &SearchOptions {
            workers: 3,
            prune_diameter: false,
        },
    )
    .unwrap();
    assert!(one.same_result(&many));
}

#[test]
fn diameter_prune_keeps_frame_results() {
    for delta in [4, 5, 6] {
        let plain = search_critical_pruned(delta, &SearchOptions::default()).unwrap();
        let pruned = search_critical_pruned(
            delta,
            &SearchOptions {
                workers: 1,
                prune_diameter: true,
            },
        )
        .unwrap();
        assert!(plain.same_result(&pruned), "delta={delta}");
    }
}

#[test]
fn certificates_have_the_expected_structure() {
    for delta in [2, 4, 6] {
        let out = search_critical_pruned(
            delta,
            &SearchOptions {
                workers: workers(),
                prune_diameter: false,
            },
        )
        .unwrap();
        assert!(!out.certificates.is_empty());
        for c in &out.certificates {
            let g = graph6::decode(c).unwrap();
            assert_eq!(canonical_graph6(&g).unwrap(), *c);
            assert_eq!(g.order(), delta + 3);
            assert_eq!(g.max_degree().unwrap(), delta);
            assert!(is_k_gamma_t_critical(&g, 3).unwrap().verdict);
            assert_eq!(g.diameter().unwrap(), Count::Finite(2));
            for x in g.max_degree_vertices().iter() {
                assert_eq!(check_frame_structure(&g, x), Check::Holds, "{c} x={x}");
                if delta >= 4 {
                    assert!(
                        check_cross_edge_conditions(&g, x).unwrap().all(),
                        "{c} x={x}"
                    );
                }
            }
        }
    }
}

#[test]
fn no_four_critical_graph_of_order_seven_with_delta_three() {
    assert!(search_critical_full(7, 3, 4, &SearchOptions::default())
        .unwrap()
        .certificates
        .is_empty());
}
