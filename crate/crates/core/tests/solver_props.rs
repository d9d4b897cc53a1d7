use std::collections::BTreeSet;

use forestpart_core::{
    check_strict_sparsity, min_potential, min_potential_bruteforce, Constraint, Params, Rational,
    SparsityVerdict, VertexId, WeightedMultigraph,
};
use proptest::prelude::*;

const PARAMS: [(i64, i64); 4] = [(0, 2), (0, 3), (1, 4), (2, 6)];

/// Weighted multigraph with up to `max_n` vertices, up to 20 edge units,
/// weights anywhere in `0..=d+1`.
fn graph(max_n: u32) -> impl Strategy<Value = WeightedMultigraph> {
    (0..PARAMS.len(), 1..=max_n).prop_flat_map(|(pi, n)| {
        let (d1, d2) = PARAMS[pi];
        let weights = prop::collection::vec((0..=d1 + 1, 0..=d2 + 1), n as usize);
        let edges = prop::collection::vec((0..n, 0..n, 1u32..=2), 0..=12);
        (weights, edges).prop_map(move |(w, e)| {
            let params = Params::new(d1, d2).unwrap();
            let mut units = 0;
            let edges: Vec<_> = e
                .into_iter()
                .filter(|(u, v, _)| u != v)
                .filter(|&(_, _, m)| {
                    units += m;
                    units <= 20
                })
                .map(|(u, v, m)| (VertexId(u), VertexId(v), m))
                .collect();
            WeightedMultigraph::from_parts(
                params,
                w.into_iter().enumerate().map(|(i, (a, b))| (VertexId(i as u32), a, b)),
                edges,
            )
            .unwrap()
            .0
        })
    })
}

fn families(g: &WeightedMultigraph) -> Vec<Constraint> {
    let mut out = vec![Constraint::Any, Constraint::Nonempty];
    if g.vertex_count() >= 2 {
        out.push(Constraint::NonemptyNonspanning);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn flow_matches_exhaustive_search(g in graph(10)) {
        for c in families(&g) {
            let fast = min_potential(&g, &c).unwrap();
            let slow = min_potential_bruteforce(&g, &c).unwrap();
            prop_assert_eq!(fast.potential, slow.potential, "{:?}", c);
        }
    }

    #[test]
    fn returned_subset_certifies_its_value(g in graph(10)) {
        for c in families(&g) {
            let r = min_potential(&g, &c).unwrap();
            prop_assert_eq!(g.subset_potential(&r.subset).unwrap(), r.potential);
            match c {
                Constraint::Nonempty => prop_assert!(!r.subset.is_empty()),
                Constraint::NonemptyNonspanning => {
                    prop_assert!(!r.subset.is_empty());
                    prop_assert!(r.subset.len() < g.vertex_count());
                }
                _ => {}
            }
        }
    }

    #[test]
    fn narrower_families_never_go_lower(g in graph(10)) {
        let any = min_potential(&g, &Constraint::Any).unwrap().potential;
        let nonempty = min_potential(&g, &Constraint::Nonempty).unwrap().potential;
        prop_assert!(any <= nonempty);
        prop_assert!(any.value() <= 0);
        if g.vertex_count() >= 2 {
            let proper = min_potential(&g, &Constraint::NonemptyNonspanning).unwrap().potential;
            prop_assert!(nonempty <= proper);
        }
    }

    #[test]
    fn forced_sets_are_honored(g in graph(10), bits in any::<u32>()) {
        let vs: Vec<VertexId> = g.vertices().collect();
        let mut include = BTreeSet::new();
        let mut exclude = BTreeSet::new();
        for (i, &v) in vs.iter().enumerate() {
            match bits >> (2 * i) & 3 {
                1 => { include.insert(v); }
                2 => { exclude.insert(v); }
                _ => {}
            }
        }
        let c = Constraint::Forced { include: include.clone(), exclude: exclude.clone() };
        let r = min_potential(&g, &c).unwrap();
        prop_assert!(include.is_subset(&r.subset));
        prop_assert!(exclude.is_disjoint(&r.subset));
        let slow = min_potential_bruteforce(&g, &c).unwrap();
        prop_assert_eq!(r.potential, slow.potential);
        prop_assert_eq!(g.subset_potential(&r.subset).unwrap(), r.potential);
    }

    #[test]
    fn sparsity_verdict_matches_enumeration(g in graph(9), an in 1i64..8, ad in 1i64..5, bn in -3i64..4, bd in 1i64..4) {
        let (a, b) = (Rational::new(an, ad), Rational::new(bn, bd));
        let vs: Vec<VertexId> = g.vertices().collect();
        let violated = (1u32..1 << vs.len()).any(|m| {
            let s: BTreeSet<VertexId> =
                (0..vs.len()).filter(|i| m >> i & 1 == 1).map(|i| vs[i]).collect();
            Rational::from_integer(g.induced_edge_count(&s) as i64)
                >= a * Rational::from_integer(s.len() as i64) - b
        });
        match check_strict_sparsity(&g, a, b) {
            SparsityVerdict::Ok => prop_assert!(!violated),
            SparsityVerdict::Violated { witness } => {
                prop_assert!(violated);
                prop_assert!(!witness.is_empty());
                prop_assert!(
                    Rational::from_integer(g.induced_edge_count(&witness) as i64)
                        >= a * Rational::from_integer(witness.len() as i64) - b
                );
            }
        }
    }
}
