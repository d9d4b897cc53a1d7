use alloc::vec;

use super::*;
use crate::coloring::Class;
use crate::params::Params;

fn p(d1: i64, d2: i64) -> Params {
    Params::new(d1, d2).unwrap()
}

fn run(g: &WeightedMultigraph) -> (Coloring, CaseTrace) {
    let (c, t) = color(g).unwrap();
    assert!(verify_coloring(g, &c).unwrap().is_ok());
    (c, t)
}

#[test]
fn single_vertex_goes_to_class_one() {
    let g = WeightedMultigraph::weightless(p(0, 2), 1, &[]).unwrap();
    let (c, t) = run(&g);
    assert_eq!(c.get(VertexId(0)), Some(Class::One));
    assert_eq!(t.steps.len(), 1);
    assert_eq!(t.steps[0].case, 1);
}

#[test]
fn empty_graph() {
    let (c, t) = run(&WeightedMultigraph::new(p(0, 2)));
    assert!(c.is_empty());
    assert_eq!(t.steps[0].note, "empty");
}

#[test]
fn four_cycle_reduces_a_degree_two_vertex() {
    let g = WeightedMultigraph::weightless(p(0, 2), 4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let (_, t) = run(&g);
    assert_eq!(t.steps[0].case, 4);
    assert_eq!(t.steps[0].vertices, vec![VertexId(0), VertexId(1), VertexId(3)]);
}

#[test]
fn path_starts_with_a_leaf() {
    let g = WeightedMultigraph::weightless(p(0, 2), 4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let (c, t) = run(&g);
    assert_eq!(t.steps[0].case, 3);
    assert_eq!(t.steps[0].note, "leaf");
    assert_ne!(c.get(VertexId(0)), c.get(VertexId(1)));
}

#[test]
fn disjoint_edges_split_into_components() {
    let g = WeightedMultigraph::weightless(p(0, 2), 4, &[(0, 1), (2, 3)]).unwrap();
    let (_, t) = run(&g);
    assert_eq!(t.steps[0].note, "components");
    assert_eq!(t.children(0).count(), 2);
}

#[test]
fn low_potential_vertex_triggers_the_gap_case() {
    // c(0) = (0, 1) has potential 0, below alpha - beta
    let (g, _) = WeightedMultigraph::from_parts(
        p(0, 2),
        (0..4).map(|i| (VertexId(i), if i == 0 { 1 } else { 0 }, if i == 0 { 2 } else { 0 })),
        [(0, 1), (1, 2), (2, 3)].map(|(u, v)| (VertexId(u), VertexId(v), 1)),
    )
    .unwrap();
    let (c, t) = run(&g);
    assert_eq!(t.steps[0].case, 2);
    assert_eq!(t.steps[0].vertices, vec![VertexId(0)]);
    assert_eq!(c.get(VertexId(0)), Some(Class::Two));
    // the H half and the G* half
    assert_eq!(t.children(0).count(), 2);
}

#[test]
fn regime_and_hypothesis_are_checked() {
    let g = WeightedMultigraph::weightless(p(1, 3), 2, &[(0, 1)]).unwrap();
    assert_eq!(color(&g).unwrap_err(), EngineError::RegimeViolation { d1: 1, d2: 3 });
    let (zero, _) =
        WeightedMultigraph::from_parts(p(0, 2), [(VertexId(3), 1, 3), (VertexId(4), 0, 0)], [])
            .unwrap();
    match color(&zero).unwrap_err() {
        EngineError::HypothesisViolation { witness } => {
            assert_eq!(witness.into_iter().collect::<Vec<_>>(), vec![VertexId(3)]);
        }
        e => panic!("unexpected {e:?}"),
    }
}

#[test]
fn parallel_edges_end_up_bichromatic() {
    let g = WeightedMultigraph::weightless(p(1, 4), 5, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        .unwrap();
    let (c, _) = run(&g);
    assert_ne!(c.get(VertexId(0)), c.get(VertexId(1)));
}

#[test]
fn trace_sizes_shrink_along_every_chain() {
    let g = WeightedMultigraph::weightless(
        p(1, 4),
        8,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 4), (2, 6)],
    )
    .unwrap();
    let (_, t) = run(&g);
    for s in &t.steps {
        if let Some(p) = s.parent {
            assert!(t.steps[p].recursion_size > s.recursion_size);
            assert_eq!(t.steps[p].depth + 1, s.depth);
        }
    }
    assert!(t.steps.iter().all(|s| (1..=7).contains(&s.case)));
}

fn claw(params: Params, x3_weights: (i64, i64)) -> WeightedMultigraph {
    let (g, _) = WeightedMultigraph::from_parts(
        params,
        [(0, 0, 0), (1, 0, 0), (2, 0, 0), (3, x3_weights.0, x3_weights.1)]
            .map(|(v, a, b)| (VertexId(v), a, b)),
        [(0, 1), (0, 2), (0, 3)].map(|(a, b)| (VertexId(a), VertexId(b), 1)),
    )
    .unwrap();
    g
}

fn child(classes: [Class; 3]) -> Coloring {
    let mut c = Coloring::new();
    for (i, k) in classes.into_iter().enumerate() {
        c.assign(VertexId(i as u32 + 1), k);
    }
    c
}

const XS: [VertexId; 3] = [VertexId(1), VertexId(2), VertexId(3)];

#[test]
fn majority_flips_a_free_neighbor() {
    let g = claw(p(1, 4), (0, 0));
    let ext = Extension::Majority { u: VertexId(0), xs: XS };
    let (c, flipped) = ext.apply(&g, child([Class::One, Class::One, Class::Two]));
    assert_eq!(flipped, Some(VertexId(3)));
    assert_eq!(c.get(VertexId(3)), Some(Class::One));
    assert_eq!(c.get(VertexId(0)), Some(Class::Two));
    assert!(verify_coloring(&g, &c).unwrap().is_ok());
}

#[test]
fn majority_skips_a_neighbor_without_room() {
    // c1(x3) = 0
    let g = claw(p(1, 4), (2, 0));
    let ext = Extension::Majority { u: VertexId(0), xs: XS };
    let (c, flipped) = ext.apply(&g, child([Class::One, Class::One, Class::Two]));
    assert_eq!(flipped, None);
    assert_eq!(c.get(VertexId(3)), Some(Class::Two));
    assert_eq!(c.get(VertexId(0)), Some(Class::Two));
}

#[test]
fn bridged_extension() {
    let g = claw(p(2, 6), (0, 0));
    let ext = Extension::Bridged {
        u: VertexId(0),
        x1: VertexId(1),
        x2: VertexId(2),
        x3: VertexId(3),
    };
    // x2 and x3 agree: u goes opposite x1
    let (c, flipped) = ext.apply(&g, child([Class::One, Class::Two, Class::Two]));
    assert_eq!((c.get(VertexId(0)), flipped), (Some(Class::Two), None));
    // x2 and x3 differ: majority rule with a flip of x3
    let (c, flipped) = ext.apply(&g, child([Class::One, Class::One, Class::Two]));
    assert_eq!((c.get(VertexId(0)), flipped), (Some(Class::Two), Some(VertexId(3))));
    assert!(verify_coloring(&g, &c).unwrap().is_ok());
}

#[test]
fn degree_two_avoids_a_crowded_pair() {
    let g = claw(p(0, 2), (0, 0));
    let ext = Extension::DegreeTwo {
        u: VertexId(0),
        x: VertexId(1),
        y: VertexId(2),
        crowded: Class::Two,
    };
    let (c, _) = ext.apply(&g, child([Class::Two, Class::Two, Class::One]));
    assert_eq!(c.get(VertexId(0)), Some(Class::One));
    let (c, _) = ext.apply(&g, child([Class::Two, Class::One, Class::One]));
    assert_eq!(c.get(VertexId(0)), Some(Class::Two));
}
