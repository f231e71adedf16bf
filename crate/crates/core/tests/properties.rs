//! Randomized properties over seeded generators.

use proptest::prelude::*;

use hubnet::cuts::{in_class, min_vertex_cut};
use hubnet::hub_count;
use hubnet::interconnect::{run_interconnect, verify_run};
use hubnet::io::{parse_document, serialize_network};
use hubnet::minimality::{is_minimal, minimalize_with, route};
use hubnet::random::random_in_class;
use hubnet::representation::{decompose_private, to_representation};

fn demands() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=3, 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn generated_networks_are_in_class(seed in any::<u64>(), d in demands()) {
        let g = random_in_class(seed, &d);
        prop_assert!(in_class(&g));
        for (i, &c) in d.iter().enumerate() {
            prop_assert_eq!(min_vertex_cut(&g, i).unwrap().value, c);
        }
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>(), d in demands()) {
        let g = random_in_class(seed, &d);
        prop_assert_eq!(parse_document(&serialize_network(&g)).unwrap().network, g);
    }

    #[test]
    fn minimalize_keeps_class_and_never_adds_hubs(seed in any::<u64>(), d in demands(), order in any::<Option<u64>>()) {
        let g = random_in_class(seed, &d);
        let m = minimalize_with(&g, order).unwrap();
        prop_assert!(is_minimal(&m).unwrap());
        prop_assert!(hub_count(&m).0 <= hub_count(&g).0);
        prop_assert!(m.edge_ids().all(|e| g.edge(e) == m.edge(e)));
    }

    #[test]
    fn single_pairs_minimalize_to_no_hubs(seed in any::<u64>(), c in 1u32..=4) {
        let m = minimalize_with(&random_in_class(seed, &[c]), None).unwrap();
        prop_assert_eq!(hub_count(&m).0, 0);
    }

    #[test]
    fn representation_pipeline_holds_its_structure(seed in any::<u64>(), c1 in 1u32..=3, c2 in 1u32..=3) {
        let m = minimalize_with(&random_in_class(seed, &[c1, c2]), None).unwrap();
        let r = route(&m).unwrap().restrict_to_systems();
        let rep = to_representation(&r).unwrap();
        prop_assert!(rep.violations().is_empty());
        prop_assert!(rep.stage_hubs.relation_holds());
        let dec = decompose_private(&rep).unwrap();
        prop_assert_eq!(dec.paths.len(), (c1 + c2) as usize);
        let run = run_interconnect(&rep).unwrap();
        let report = verify_run(&rep, &run).unwrap();
        // every check except the hub bound, which needs a minimal representation
        for c in &report.checks {
            if c.name != "hub-bound" && c.name != "hub-coverage" {
                prop_assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
        if is_minimal(&rep.graph).unwrap() {
            prop_assert!(report.passed(), "{:?}", report.failures());
        }
    }
}
