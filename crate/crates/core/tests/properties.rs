//! Property tests over randomized structures.

use hyperorient::hypergraph::Hypergraph;
use hyperorient::kernel::q_tail;
use hyperorient::models::gen_uniform;
use hyperorient::orient::orient;
use hyperorient::peel::peel_core;
use hyperorient::rng::Seed;
use proptest::prelude::*;

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (4usize..14, 0usize..18).prop_flat_map(|(n, m)| {
        proptest::collection::vec(proptest::collection::vec(0..n as u32, 3), m).prop_map(
            move |edges| {
                // entries may repeat; that is legal for the parser and the
                // combinatorial algorithms
                Hypergraph::from_edges(n, 3, &edges).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn text_format_round_trips(h in arb_hypergraph()) {
        let text = h.to_text();
        let back = Hypergraph::from_text(&text).unwrap();
        prop_assert_eq!(back.n(), h.n());
        prop_assert_eq!(back.m(), h.m());
        prop_assert_eq!(back.to_text(), text);
        for i in 0..h.m() {
            prop_assert_eq!(back.edge(i), h.edge(i));
        }
    }

    #[test]
    fn q_tail_stays_in_unit_interval(x in 0.0f64..500.0, y in 1u32..200) {
        let q = q_tail(x, y).unwrap();
        prop_assert!((0.0..=1.0).contains(&q));
        // increasing the cutoff never increases the tail
        let q2 = q_tail(x, y + 1).unwrap();
        prop_assert!(q2 <= q);
    }

    #[test]
    fn peeled_core_has_min_degree(h in arb_hypergraph(), ell in 1u32..4) {
        let core = peel_core(&h, ell);
        for &d in &core.degrees {
            prop_assert!(d >= ell + 1);
        }
        // idempotent: no core vertex is removable
        prop_assert_eq!(core.vertices.len() as u64, core.density.vertices);
    }

    #[test]
    fn decision_stable_under_vertex_relabeling(
        t in 0u64..5000,
        rot in 1u32..11,
    ) {
        let h = gen_uniform(11, 16, 3, Seed::new(777, t)).unwrap();
        let base = orient(&h, 2).is_orientable();
        // rotate labels by `rot` mod 11
        let edges: Vec<Vec<u32>> = h
            .edges()
            .map(|e| e.iter().map(|&v| (v + rot) % 11).collect())
            .collect();
        let relabeled = Hypergraph::from_edges(11, 3, &edges).unwrap();
        prop_assert_eq!(orient(&relabeled, 2).is_orientable(), base);
    }
}
