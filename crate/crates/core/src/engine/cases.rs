use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{internal, EngineError, Extension, Pending, StepInfo};
use crate::coloring::{Class, Coloring};
use crate::graph::{VertexId, WeightedMultigraph};
use crate::solver::{check_hypothesis, min_potential, Constraint};
use crate::verify::brute_force_color;

pub(crate) enum Plan {
    Done(Coloring),
    Recurse {
        children: Vec<WeightedMultigraph>,
        pending: Pending,
    },
}

type Outcome = Result<Option<(StepInfo, Plan)>, EngineError>;

/// Tries the cases in order; the first that applies decides the level.
pub(crate) fn dispatch(g: &WeightedMultigraph) -> Result<(StepInfo, Plan), EngineError> {
    let cases: [fn(&WeightedMultigraph) -> Outcome; 7] = [
        base, gap, leaf, degree_two, parallel_three_two_two, three_two_two, triple_three,
    ];
    for case in cases {
        if let Some(found) = case(g)? {
            return Ok(found);
        }
    }
    Err(internal(0, "no case applies"))
}

fn without(g: &WeightedMultigraph, u: VertexId) -> WeightedMultigraph {
    g.delete_vertex(u).expect("vertex present")
}

fn extend(child: WeightedMultigraph, ext: Extension) -> Plan {
    Plan::Recurse {
        children: vec![child],
        pending: Pending::Extend(ext),
    }
}

fn neighbor_ids(g: &WeightedMultigraph, u: VertexId) -> Vec<VertexId> {
    g.neighbors(u).map(|(x, _)| x).collect()
}

/// Empty graph, several components, or at most three vertices.
fn base(g: &WeightedMultigraph) -> Outcome {
    if g.is_empty() {
        return Ok(Some((StepInfo::new(1, "empty", vec![]), Plan::Done(Coloring::new()))));
    }
    let components = g.components();
    if components.len() > 1 {
        let firsts = components.iter().map(|c| c[0]).collect();
        let children = components
            .iter()
            .map(|c| g.induced(c.iter().copied()).expect("component of g"))
            .collect();
        return Ok(Some((
            StepInfo::new(1, "components", firsts),
            Plan::Recurse {
                children,
                pending: Pending::Components(components.len()),
            },
        )));
    }
    if g.vertex_count() <= 3 {
        let found = brute_force_color(g)
            .map_err(|_| internal(1, "exhaustive search refused a small graph"))?
            .ok_or_else(|| internal(1, "small graph has no coloring"))?;
        return Ok(Some((
            StepInfo::new(1, "exhaustive", g.vertices().collect()),
            Plan::Done(found),
        )));
    }
    Ok(None)
}

/// A nonempty proper set of potential at most `alpha - beta`.
fn gap(g: &WeightedMultigraph) -> Outcome {
    let params = *g.params();
    let h = min_potential(g, &Constraint::NonemptyNonspanning)
        .map_err(|_| internal(2, "minimizer unavailable"))?;
    if h.potential > params.gap_threshold() {
        return Ok(None);
    }
    let mut inner = g.induced(h.subset.iter().copied()).expect("subset of g");
    let mut boundary = None;
    let note = if h.potential.value() > 0 {
        // lowest boundary edge zx; one exists since g is connected
        let (z, x) = h
            .subset
            .iter()
            .find_map(|&z| {
                g.neighbors(z)
                    .map(|(x, _)| x)
                    .find(|x| !h.subset.contains(x))
                    .map(|x| (z, x))
            })
            .ok_or_else(|| internal(2, "no boundary edge"))?;
        inner.increment_weight_saturating(z, Class::Two);
        boundary = Some((z, x));
        "gap, positive potential: W2 raised at a boundary vertex"
    } else {
        "gap, nonpositive potential"
    };
    Ok(Some((
        StepInfo::new(2, note, h.subset.iter().copied().collect()),
        Plan::Recurse {
            children: vec![inner],
            pending: Pending::GapOuter {
                h: h.subset,
                boundary,
            },
        },
    )))
}

/// The graph left after removing a colored set `h`: every outside vertex
/// loses the classes used by its neighbors in `h`. When `z` of the boundary
/// edge `zx` ended in class 2, `x` instead gets one more unit of `W2`.
pub(crate) fn gap_outer_graph(
    g: &WeightedMultigraph,
    h: &BTreeSet<VertexId>,
    inner: &Coloring,
    boundary: Option<(VertexId, VertexId)>,
) -> (WeightedMultigraph, Option<(VertexId, VertexId)>) {
    let mut outer = g.clone();
    for &v in h {
        outer.remove_vertex(v).expect("vertex present");
    }
    let mut bridge = None;
    let touched: BTreeSet<VertexId> = h
        .iter()
        .flat_map(|&v| g.neighbors(v).map(|(x, _)| x))
        .filter(|x| !h.contains(x))
        .collect();
    for u in touched {
        for class in Class::BOTH {
            let links: Vec<(VertexId, u8)> = g
                .neighbors(u)
                .filter(|(y, _)| h.contains(y) && inner.get(*y) == Some(class))
                .collect();
            if links.is_empty() {
                continue;
            }
            let lone_bridge = match boundary {
                Some((z, x)) => {
                    class == Class::Two && u == x && links == [(z, 1)]
                }
                None => false,
            };
            if lone_bridge {
                outer.increment_weight_saturating(u, Class::Two);
                bridge = boundary;
            } else {
                outer.zero_capacity(u, class).expect("vertex present");
            }
        }
    }
    (outer, bridge)
}

/// A vertex with a single distinct neighbor.
fn leaf(g: &WeightedMultigraph) -> Outcome {
    let Some(u) = g.vertices().find(|&u| g.distinct_neighbors(u) == 1) else {
        return Ok(None);
    };
    let (x, m) = g.neighbors(u).next().expect("one neighbor");
    let child = without(g, u);
    let null = Class::BOTH.into_iter().find(|&c| g.cap(u, c) == 0);
    let Some(i) = null else {
        return Ok(Some((
            StepInfo::new(3, "leaf", vec![u, x]),
            extend(child, Extension::Opposite { u, x }),
        )));
    };
    let mut child = child;
    let note = if m == 1 {
        child.increment_weight_saturating(x, i.other());
        "null leaf, simple edge"
    } else {
        child.zero_capacity(x, i.other()).expect("vertex present");
        "null leaf, parallel edge"
    };
    Ok(Some((
        StepInfo::new(3, note, vec![u, x]),
        extend(
            child,
            Extension::Fixed {
                u,
                class: i.other(),
            },
        ),
    )))
}

/// A degree-two vertex with both capacities positive, one at least two.
fn degree_two(g: &WeightedMultigraph) -> Outcome {
    let found = g.vertices().find(|&u| {
        let (c1, c2) = (g.cap(u, Class::One), g.cap(u, Class::Two));
        g.deg(u) == 2 && c1.min(c2) >= 1 && c1.max(c2) >= 2
    });
    let Some(u) = found else {
        return Ok(None);
    };
    let nbrs = neighbor_ids(g, u);
    let &[x, y] = nbrs.as_slice() else {
        return Err(internal(4, "degree-two vertex without two distinct neighbors"));
    };
    let crowded = if g.cap(u, Class::Two) >= 2 {
        Class::Two
    } else {
        Class::One
    };
    let mut child = without(g, u);
    child.increment_weight_saturating(x, crowded);
    child.increment_weight_saturating(y, crowded);
    let note = match crowded {
        Class::Two => "degree two, W2 raised on both neighbors",
        Class::One => "degree two, W1 raised on both neighbors",
    };
    Ok(Some((
        StepInfo::new(4, note, vec![u, x, y]),
        extend(child, Extension::DegreeTwo { u, x, y, crowded }),
    )))
}

/// A three-two-two on a parallel edge: `N(u) = {v, x, x}`.
fn parallel_three_two_two(g: &WeightedMultigraph) -> Outcome {
    let found = g.vertices().find(|&u| {
        g.profile_unchecked(u).three_two_two && g.neighbors(u).any(|(_, m)| m == 2)
    });
    let Some(u) = found else {
        return Ok(None);
    };
    let x = g.neighbors(u).find(|&(_, m)| m == 2).expect("parallel").0;
    let v = g
        .neighbors(u)
        .find(|&(_, m)| m == 1)
        .ok_or_else(|| internal(5, "three-two-two with a single neighbor"))?
        .0;

    let mut first = without(g, u);
    first.increment_weight_saturating(v, Class::One);
    first.increment_weight_saturating(v, Class::Two);
    if check_hypothesis(&first).is_ok() {
        return Ok(Some((
            StepInfo::new(5, "parallel three-two-two, both weights raised at v", vec![u, v, x]),
            extend(first, Extension::Opposite { u, x }),
        )));
    }
    let mut second = without(g, u);
    second.zero_capacity(x, Class::One).expect("vertex present");
    second.increment_weight_saturating(v, Class::One);
    if check_hypothesis(&second).is_ok() {
        return Ok(Some((
            StepInfo::new(5, "parallel three-two-two, c1(x) zeroed and W1 raised at v", vec![u, v, x]),
            extend(
                second,
                Extension::Fixed {
                    u,
                    class: Class::One,
                },
            ),
        )));
    }
    Err(internal(5, "neither reduction satisfies the hypothesis"))
}

fn three_neighbors(g: &WeightedMultigraph, u: VertexId, case: u8) -> Result<[VertexId; 3], EngineError> {
    neighbor_ids(g, u)
        .try_into()
        .map_err(|_| internal(case, "degree-three vertex without three distinct neighbors"))
}

/// A three-two-two with no doubly-constrained neighbor.
fn three_two_two(g: &WeightedMultigraph) -> Outcome {
    let found = g.vertices().find(|&u| {
        g.profile_unchecked(u).three_two_two
            && g.neighbors(u)
                .all(|(x, _)| !g.profile_unchecked(x).doubly_constrained)
    });
    let Some(u) = found else {
        return Ok(None);
    };
    let xs = three_neighbors(g, u, 6)?;
    let mut child = without(g, u);
    for &x in &xs {
        let p = g.profile_unchecked(x);
        let j = Class::BOTH
            .into_iter()
            .find(|&c| p.is_null(c) || p.is_slack(c))
            .ok_or_else(|| internal(6, "neighbor is doubly-constrained"))?;
        child.increment_weight_saturating(x, j.other());
    }
    Ok(Some((
        StepInfo::new(6, "three-two-two", vec![u, xs[0], xs[1], xs[2]]),
        extend(child, Extension::Majority { u, xs }),
    )))
}

/// A triple-three with two neighbors that are not somehow-constrained.
fn triple_three(g: &WeightedMultigraph) -> Outcome {
    let loose = |x: VertexId| !g.profile_unchecked(x).somehow_constrained;
    let found = g.vertices().find(|&u| {
        g.profile_unchecked(u).triple_three && g.neighbors(u).filter(|&(x, _)| loose(x)).count() >= 2
    });
    let Some(u) = found else {
        return Ok(None);
    };
    let nbrs = three_neighbors(g, u, 7)?;
    let mut free = nbrs.iter().copied().filter(|&x| loose(x));
    let (x2, x3) = (free.next().expect("two loose"), free.next().expect("two loose"));
    let x1 = nbrs
        .iter()
        .copied()
        .find(|&x| x != x2 && x != x3)
        .expect("third neighbor");

    let mut first = without(g, u);
    first.increment_weight_saturating(x1, Class::One);
    first.increment_weight_saturating(x1, Class::Two);
    if check_hypothesis(&first).is_ok() {
        return Ok(Some((
            StepInfo::new(7, "triple-three, both weights raised at x1", vec![u, x1, x2, x3]),
            extend(first, Extension::Majority { u, xs: nbrs }),
        )));
    }
    let mut second = without(g, u);
    second.insert_edge(x2, x3).expect("distinct vertices");
    if check_hypothesis(&second).is_ok() {
        return Ok(Some((
            StepInfo::new(7, "triple-three, edge x2x3 added", vec![u, x1, x2, x3]),
            extend(second, Extension::Bridged { u, x1, x2, x3 }),
        )));
    }
    Err(internal(7, "neither reduction satisfies the hypothesis"))
}
