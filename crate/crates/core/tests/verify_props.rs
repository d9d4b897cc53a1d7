use forestpart_core::constructions::random_multigraph;
use forestpart_core::verify::single_step_weakenings;
use forestpart_core::{brute_force_color, check_hypothesis, is_critical, verify_coloring, Params, WeightedMultigraph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params() -> impl Strategy<Value = Params> {
    prop::sample::select(vec![
        Params::new(0, 2).unwrap(),
        Params::new(0, 3).unwrap(),
        Params::new(1, 4).unwrap(),
        Params::new(1, 2).unwrap(),
    ])
}

/// Drops pieces while the graph stays uncolorable; the result is critical.
fn shrink_to_critical(mut g: WeightedMultigraph) -> WeightedMultigraph {
    'outer: loop {
        for h in single_step_weakenings(&g) {
            if brute_force_color(&h).unwrap().is_none() {
                g = h;
                continue 'outer;
            }
        }
        return g;
    }
}

fn dense_weightless(params: Params, n: u32, seed: u64) -> WeightedMultigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(u32, u32)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(0.75))
        .collect();
    WeightedMultigraph::weightless(params, n, &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn found_colorings_verify(params in params(), n in 1u32..9, units in 0u32..18, seed in any::<u64>()) {
        let g = random_multigraph(params, n, units, seed);
        if let Some(c) = brute_force_color(&g).unwrap() {
            prop_assert!(verify_coloring(&g, &c).unwrap().is_ok());
        }
    }

    #[test]
    fn weakening_keeps_colorability(params in params(), n in 1u32..7, units in 0u32..12, seed in any::<u64>()) {
        let g = random_multigraph(params, n, units, seed);
        if brute_force_color(&g).unwrap().is_some() {
            for h in single_step_weakenings(&g) {
                prop_assert!(brute_force_color(&h).unwrap().is_some());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Weightless critical graphs satisfy e(G) >= (2 - alpha) n(G) + beta.
    #[test]
    fn weightless_critical_graphs_are_dense(
        params in prop::sample::select(vec![
            Params::new(0, 2).unwrap(),
            Params::new(0, 3).unwrap(),
            Params::new(1, 4).unwrap(),
        ]),
        n in 4u32..9,
        seed in any::<u64>(),
    ) {
        let g = dense_weightless(params, n, seed);
        prop_assume!(brute_force_color(&g).unwrap().is_none());
        let k = shrink_to_critical(g);
        prop_assert!(is_critical(&k).unwrap());
        let scale = params.scale();
        let lhs = k.edge_count() as i64 * scale;
        let rhs = (2 * scale - params.alpha_scaled()) * k.vertex_count() as i64 + params.beta_scaled();
        prop_assert!(lhs >= rhs, "e = {}, n = {}", k.edge_count(), k.vertex_count());
    }

    /// Weighted critical graphs in the regime violate the hypothesis.
    #[test]
    fn weighted_critical_graphs_fail_the_hypothesis(
        params in prop::sample::select(vec![Params::new(0, 2).unwrap(), Params::new(1, 4).unwrap()]),
        n in 2u32..8,
        units in 4u32..18,
        seed in any::<u64>(),
    ) {
        let g = random_multigraph(params, n, units, seed);
        prop_assume!(brute_force_color(&g).unwrap().is_none());
        let k = shrink_to_critical(g);
        prop_assert!(is_critical(&k).unwrap());
        prop_assert!(!check_hypothesis(&k).is_ok());
    }
}
