use std::sync::Arc;

use proptest::prelude::*;

use fibercox::cubical::CubeComplex;
use fibercox::davis::Racg;
use fibercox::homology::{simplicial_homology, Coeffs};
use fibercox::io::{GraphJson, Structure};
use fibercox::moves::{canonical_moves, canonical_state, is_legal_state, LegalityOracle};
use fibercox::thickening::{ThickenOptions, Thickening};
use fibercox::{Graph, SimplicialComplex};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_indices((0..n).map(|i| format!("s{i}")).collect(), edges).unwrap()
        })
    })
}

fn racg_and_word() -> impl Strategy<Value = (Racg, Vec<usize>)> {
    graph_strategy(6).prop_flat_map(|g| {
        let n = g.n();
        let racg = Racg::new(g, 1_000_000).unwrap();
        (Just(racg), proptest::collection::vec(0..n, 0..12))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_form_is_idempotent((g, w) in racg_and_word()) {
        let nf = g.normal_form_indices(&w);
        prop_assert_eq!(g.normal_form_indices(&nf), nf.clone());
        prop_assert!(nf.len() <= w.len());
    }

    #[test]
    fn normal_form_ignores_commutations_and_cancellations((g, w) in racg_and_word(), at in 0usize..12, letter in 0usize..6) {
        let nf = g.normal_form_indices(&w);
        if w.len() >= 2 {
            let i = at % (w.len() - 1);
            if g.graph().adjacent(w[i], w[i + 1]) {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                prop_assert_eq!(g.normal_form_indices(&swapped), nf.clone());
            }
        }
        let s = letter % g.n_generators();
        let mut padded = w.clone();
        let pos = at.min(w.len());
        padded.splice(pos..pos, [s, s]);
        prop_assert_eq!(g.normal_form_indices(&padded), nf);
    }

    #[test]
    fn euler_characteristic_matches_betti(g in graph_strategy(8)) {
        let k = SimplicialComplex::flag(g);
        let f = k.f_vector(1_000_000).unwrap();
        let chi: i64 = f.iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        for coeffs in Coeffs::ALL {
            let h = simplicial_homology(&k, coeffs, false, 1_000_000).unwrap();
            prop_assert_eq!(h.euler_characteristic(), chi);
        }
    }

    #[test]
    fn graph_json_round_trip(g in graph_strategy(8)) {
        let text = serde_json::to_string(&GraphJson::from(&g)).unwrap();
        match Structure::from_json(&text).unwrap() {
            Structure::Graph(h) => {
                prop_assert_eq!(h.labels(), g.labels());
                prop_assert_eq!(h.edges(), g.edges());
            }
            _ => prop_assert!(false, "parsed as the wrong kind"),
        }
    }

    #[test]
    fn base_scans_agree_with_explicit_graph(g in graph_strategy(7)) {
        prop_assume!(g.is_connected());
        let x = Arc::new(CubeComplex::from_graph(&g));
        let Ok(th) = Thickening::pair(x, &ThickenOptions::default()) else {
            return Ok(());
        };
        let explicit = th.one_skeleton().unwrap().clone();
        for y in 0..th.n_vertices() {
            prop_assert_eq!(th.four_cycle_through(y).is_some(), explicit.chordless_four_cycle_at(y).is_some());
        }
    }

    #[test]
    fn thickening_oracle_matches_graph_check(g in graph_strategy(6), seed in any::<u64>()) {
        prop_assume!(g.is_connected());
        let x = Arc::new(CubeComplex::from_graph(&g));
        let Ok(th) = Thickening::pair(x, &ThickenOptions::default()) else {
            return Ok(());
        };
        let system = canonical_moves(&th).unwrap();
        let start = canonical_state(&th).unwrap();
        let combo: Vec<usize> = (0..system.rank()).filter(|i| seed >> (i % 64) & 1 == 1).collect();
        let s = system.apply(&start, combo.iter().copied());
        let twice = system.apply(&s, combo.iter().copied());
        prop_assert_eq!(&twice, &start);
        let graph_view = is_legal_state(th.one_skeleton().unwrap(), &s).unwrap();
        let base_view = LegalityOracle::check(&th, &s);
        // The thickening oracle also asks for opposite values on each pair.
        prop_assert!(!base_view.legal || graph_view.legal);
        if base_view.opposite_parity != Some(false) {
            prop_assert_eq!(base_view.legal, graph_view.legal);
        }
    }
}
