//! Sharp critical families, the double-pennon gadget, and corpus
//! generators.
//!
//! Gadget vertices always take fresh ids above the host's current maximum,
//! in the order documented on each constructor.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coloring::Class;
use crate::error::GraphError;
use crate::graph::{VertexId, WeightedMultigraph};
use crate::params::{Params, Rational};
use crate::solver::{check_strict_sparsity, min_sparsity_through};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("no graph on {n} vertices is strictly ({a}, {b})-sparse")]
    Unsatisfiable { n: u32, a: Rational, b: Rational },
}

type Built = Result<WeightedMultigraph, ConstructionError>;

/// One vertex with both capacities zero: the smallest critical graph.
pub fn zero_capacity_singleton(params: Params) -> WeightedMultigraph {
    let mut g = WeightedMultigraph::new(params);
    g.insert_vertex(VertexId(0), params.d1() + 1, params.d2() + 1)
        .expect("fresh graph");
    g
}

/// Lowers `W1(v)` by one and hangs a leaf `v'` off `v` with `W1(v') = 0`
/// and `c2(v') = 0`.
pub fn attach_pendant_host(g: &WeightedMultigraph, v: VertexId) -> Built {
    let w1 = g.weight(v, Class::One).ok_or(GraphError::UnknownVertex(v))?;
    if w1 == 0 {
        return Err(ConstructionError::Precondition("pendant host needs W1(v) > 0"));
    }
    let mut h = g.clone();
    h.decrement_weight(v, Class::One)?;
    let leaf = h.fresh_id();
    h.insert_vertex(leaf, 0, g.params().d2() + 1)?;
    h.insert_edge(v, leaf)?;
    Ok(h)
}

/// Sets `W_i(u) = 0` (requires `c_i(u) = 0`) and hangs a leaf `u'` off `u`
/// with `c_i(u') = 1` and `c_{3-i}(u') = 0`.
pub fn attach_null_leaf(g: &WeightedMultigraph, u: VertexId, i: Class) -> Built {
    let c = g.capacity(u, i).ok_or(GraphError::UnknownVertex(u))?;
    if c != 0 {
        return Err(ConstructionError::Precondition("null leaf needs c_i(u) = 0"));
    }
    let params = g.params();
    let mut h = g.clone();
    h.set_weight(u, i, 0)?;
    let leaf = h.fresh_id();
    let mut w = [0i64; 2];
    w[i.index()] = params.bound(i);
    w[i.other().index()] = params.bound(i.other()) + 1;
    h.insert_vertex(leaf, w[0], w[1])?;
    h.insert_edge(u, leaf)?;
    Ok(h)
}

/// Joins the parts with a flag.
///
/// Part 0 keeps its ids; every later part is relabeled, in id order, onto
/// fresh ids above everything placed so far. Then a star on `d1 + 2`
/// unweighted vertices `u_1..u_{d1+2}` is added with center `u_{d1+2}`,
/// each `u_j` is joined to the anchor of part `assignment[j]`, and every
/// anchor loses one unit of `W2`.
pub fn attach_flag(parts: &[(WeightedMultigraph, VertexId)], assignment: &[usize]) -> Built {
    let Some((first, _)) = parts.first() else {
        return Err(ConstructionError::Precondition("flag needs at least one part"));
    };
    let params = *first.params();
    let slots = (params.d1() + 2) as usize;
    if parts.len() > slots {
        return Err(ConstructionError::Precondition("flag takes at most d1 + 2 parts"));
    }
    if assignment.len() != slots {
        return Err(ConstructionError::Precondition("flag assignment needs d1 + 2 entries"));
    }
    if assignment.iter().any(|&i| i >= parts.len()) {
        return Err(ConstructionError::Precondition("flag assignment names a missing part"));
    }
    if (0..parts.len()).any(|i| !assignment.contains(&i)) {
        return Err(ConstructionError::Precondition("every part must be used by the flag"));
    }
    let mut h = WeightedMultigraph::new(params);
    let mut anchors = Vec::with_capacity(parts.len());
    for (k, (part, v)) in parts.iter().enumerate() {
        if part.params() != &params {
            return Err(GraphError::ParamsMismatch.into());
        }
        if part.weight(*v, Class::Two).ok_or(GraphError::UnknownVertex(*v))? == 0 {
            return Err(ConstructionError::Precondition("flag anchors need W2 > 0"));
        }
        let base = h.fresh_id().0;
        let map: BTreeMap<VertexId, VertexId> = part
            .vertices()
            .enumerate()
            .map(|(i, x)| (x, if k == 0 { x } else { VertexId(base + i as u32) }))
            .collect();
        for (&old, &new) in &map {
            let w = [Class::One, Class::Two].map(|c| part.weight(old, c).expect("vertex"));
            h.insert_vertex(new, w[0], w[1])?;
        }
        for (a, b, m) in part.edges() {
            for _ in 0..m {
                h.insert_edge(map[&a], map[&b])?;
            }
        }
        anchors.push(map[v]);
    }
    let star: Vec<VertexId> = (0..slots)
        .map(|_| {
            let id = h.fresh_id();
            h.insert_vertex(id, 0, 0).map(|_| id)
        })
        .collect::<Result<_, _>>()?;
    let center = star[slots - 1];
    for &leaf in &star[..slots - 1] {
        h.insert_edge(leaf, center)?;
    }
    for (j, &part) in assignment.iter().enumerate() {
        h.insert_edge(anchors[part], star[j])?;
    }
    for &v in &anchors {
        h.decrement_weight(v, Class::Two)?;
    }
    Ok(h)
}

/// Attaches a double-pennon at `u`. New ids, in order: `x*`, `x_1..x_{d2}`,
/// `y*`, `y_1..y_{d2}`.
pub fn attach_double_pennon(g: &WeightedMultigraph, u: VertexId) -> Built {
    if !g.contains(u) {
        return Err(GraphError::UnknownVertex(u).into());
    }
    let d2 = g.params().d2() as usize;
    let mut h = g.clone();
    let add = |h: &mut WeightedMultigraph| -> Result<VertexId, GraphError> {
        let id = h.fresh_id();
        h.insert_vertex(id, 0, 0)?;
        Ok(id)
    };
    let x_star = add(&mut h)?;
    let xs: Vec<VertexId> = (0..d2).map(|_| add(&mut h)).collect::<Result<_, _>>()?;
    h.insert_edge(x_star, u)?;
    for &x in &xs {
        h.insert_edge(x_star, x)?;
        h.insert_edge(u, x)?;
    }
    let y_star = add(&mut h)?;
    let ys: Vec<VertexId> = (0..d2).map(|_| add(&mut h)).collect::<Result<_, _>>()?;
    h.insert_edge(y_star, x_star)?;
    for &y in &ys {
        h.insert_edge(y_star, y)?;
        h.insert_edge(x_star, y)?;
    }
    Ok(h)
}

/// The x-layer `{x*, x_1, .., x_{d2}}` of a pennon attached to a host whose
/// largest id was `host_max`.
pub fn pennon_x_layer(params: &Params, host_max: VertexId) -> BTreeSet<VertexId> {
    (1..=params.d2() as u32 + 1)
        .map(|i| VertexId(host_max.0 + i))
        .collect()
}

/// Every graph reachable from the zero-capacity singleton by at most
/// `steps` constructions, without duplicates. Each step applies a pendant
/// host, a null leaf, a one-part flag, or a two-part flag whose second part
/// is a fresh singleton, at every vertex where it is allowed.
pub fn sharp_family(params: Params, steps: usize) -> Vec<WeightedMultigraph> {
    let seed = zero_capacity_singleton(params);
    let slots = (params.d1() + 2) as usize;
    let single = alloc::vec![0; slots];
    let mut paired = alloc::vec![1; slots];
    paired[0] = 0;
    let mut seen = alloc::vec![seed.clone()];
    let mut frontier = alloc::vec![seed.clone()];
    for _ in 0..steps {
        let mut next = Vec::new();
        for g in &frontier {
            for v in g.vertices() {
                let mut grown = Vec::new();
                grown.push(attach_pendant_host(g, v));
                for i in Class::BOTH {
                    grown.push(attach_null_leaf(g, v, i));
                }
                grown.push(attach_flag(&[(g.clone(), v)], &single));
                grown.push(attach_flag(&[(g.clone(), v), (seed.clone(), VertexId(0))], &paired));
                for h in grown.into_iter().flatten() {
                    if !seen.contains(&h) {
                        seen.push(h.clone());
                        next.push(h);
                    }
                }
            }
        }
        frontier = next;
    }
    seen
}

pub fn path(params: Params, n: u32) -> Built {
    if n == 0 {
        return Err(ConstructionError::Precondition("path needs n >= 1"));
    }
    let edges: Vec<(u32, u32)> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(WeightedMultigraph::weightless(params, n, &edges)?)
}

pub fn cycle(params: Params, n: u32) -> Built {
    if n < 3 {
        return Err(ConstructionError::Precondition("cycle needs n >= 3"));
    }
    let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(WeightedMultigraph::weightless(params, n, &edges)?)
}

/// Center 0 with leaves `1..=k`.
pub fn star(params: Params, k: u32) -> Built {
    let edges: Vec<(u32, u32)> = (1..=k).map(|i| (0, i)).collect();
    Ok(WeightedMultigraph::weightless(params, k + 1, &edges)?)
}

/// The dodecahedron as the generalized Petersen graph GP(10, 2): outer
/// 10-cycle `0..10`, spokes `i - (10 + i)`, inner edges `(10 + i) - (10 + (i + 2) % 10)`.
pub fn dodecahedron(params: Params) -> WeightedMultigraph {
    let mut edges = Vec::with_capacity(30);
    for i in 0..10 {
        edges.push((i, (i + 1) % 10));
        edges.push((i, 10 + i));
        edges.push((10 + i, 10 + (i + 2) % 10));
    }
    WeightedMultigraph::weightless(params, 20, &edges).expect("valid edge list")
}

/// An `r x c` grid with every edge replaced by a path through `s` new
/// vertices; grid vertices come first in row-major order.
pub fn grid_subdivided(params: Params, r: u32, c: u32, s: u32) -> Built {
    if r == 0 || c == 0 {
        return Err(ConstructionError::Precondition("grid needs r, c >= 1"));
    }
    let at = |i: u32, j: u32| i * c + j;
    let mut links = Vec::new();
    for i in 0..r {
        for j in 0..c {
            if j + 1 < c {
                links.push((at(i, j), at(i, j + 1)));
            }
            if i + 1 < r {
                links.push((at(i, j), at(i + 1, j)));
            }
        }
    }
    let mut next = r * c;
    let mut edges = Vec::new();
    for (a, b) in links {
        let mut prev = a;
        for _ in 0..s {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, b));
    }
    Ok(WeightedMultigraph::weightless(params, next, &edges)?)
}

/// A weightless graph on `n` vertices grown by rejection: `6n` random
/// vertex pairs are proposed and each is kept only if the graph stays
/// strictly `(a, b)`-sparse.
pub fn random_sparse(params: Params, n: u32, seed: u64, a: Rational, b: Rational) -> Built {
    let mut g = WeightedMultigraph::weightless(params, n, &[])?;
    if n == 0 {
        return Ok(g);
    }
    // singletons are the tightest sets of an edgeless graph
    if a - b <= Rational::from_integer(0) {
        return Err(ConstructionError::Unsatisfiable { n, a, b });
    }
    let q = num_integer::Integer::lcm(a.denom(), b.denom());
    let a_scaled = a.numer() * (q / a.denom());
    let b_scaled = b.numer() * (q / b.denom());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n >= 2 {
        for _ in 0..6 * n {
            let u = VertexId(rng.gen_range(0..n));
            let v = VertexId(rng.gen_range(0..n));
            if u == v || g.multiplicity(u, v) > 0 {
                continue;
            }
            g.insert_edge(u, v)?;
            // only sets through both endpoints gained an edge
            if min_sparsity_through(&g, a_scaled, q, &[u, v]) <= b_scaled {
                g.remove_edge_unit(u, v)?;
            }
        }
    }
    debug_assert!(check_strict_sparsity(&g, a, b).is_ok());
    Ok(g)
}

/// A random weightless graph on which the coloring hypothesis holds:
/// strictly `(2 - alpha, -beta)`-sparse.
pub fn random_hypothesis_graph(params: Params, n: u32, seed: u64) -> Built {
    let a = Rational::from_integer(2) - params.alpha();
    random_sparse(params, n, seed, a, -params.beta())
}

/// Arbitrary weights in `0..=d_j + 1` and up to `units` random edge units
/// (parallel pairs allowed). No sparsity is enforced.
pub fn random_multigraph(params: Params, n: u32, units: u32, seed: u64) -> WeightedMultigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = WeightedMultigraph::new(params);
    for i in 0..n {
        let w1 = rng.gen_range(0..=params.d1() + 1);
        let w2 = rng.gen_range(0..=params.d2() + 1);
        g.insert_vertex(VertexId(i), w1, w2).expect("fresh id");
    }
    if n >= 2 {
        for _ in 0..units {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                g.insert_edge(VertexId(u), VertexId(v)).expect("distinct vertices");
            }
        }
    }
    g
}
