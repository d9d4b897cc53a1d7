//! Exact minimization of subset potential.
//!
//! Minimizing `rho(S) = sum_{v in S} w(v) - D * e(G[S])` is the complement of
//! a project-selection problem: every edge (parallel pair collapsed) is a
//! project with profit `multiplicity * D` that needs both endpoints, and
//! every vertex is a resource costing `w(v)`. Vertices with negative cost
//! become profits attached to the source. One min cut yields the optimum over
//! all subsets; forcing a vertex in or out adds an infinite source or sink
//! arc.
//!
//! The nonempty family takes one cut per candidate member. The nonempty
//! non-spanning family fixes a pivot `s`: every such set either contains `s`
//! and misses some `v`, or misses `s` and contains some `v`, giving
//! `2(n - 1)` cuts.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_integer::Integer;
use thiserror::Error;

use crate::flow::FlowNetwork;
use crate::graph::{VertexId, WeightedMultigraph};
use crate::params::{Rational, ScaledPotential};

/// Largest graph accepted by the exhaustive oracle.
pub const BRUTE_FORCE_LIMIT: usize = 22;

/// Family of vertex subsets to minimize over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    Any,
    Nonempty,
    NonemptyNonspanning,
    Forced {
        include: BTreeSet<VertexId>,
        exclude: BTreeSet<VertexId>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetResult {
    pub subset: BTreeSet<VertexId>,
    pub potential: ScaledPotential,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SparsityVerdict {
    Ok,
    Violated { witness: BTreeSet<VertexId> },
}

impl SparsityVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, SparsityVerdict::Ok)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("constraint cannot be met: {0}")]
    Infeasible(&'static str),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("graph has {n} vertices; exhaustive search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// A subset-minimization instance over vertex indices `0..n`:
/// `f(S) = sum cost(v) - sum_{edges inside S} profit(e)`.
#[derive(Clone, Debug)]
pub(crate) struct SubsetProblem {
    ids: Vec<VertexId>,
    cost: Vec<i64>,
    edges: Vec<(usize, usize, i64)>,
}

impl SubsetProblem {
    pub fn potential(g: &WeightedMultigraph) -> Self {
        let d = g.params().scale();
        Self::build(g, |v| g.vertex_potential_unchecked(v).value(), d)
    }

    /// `f(S) = a * |S| - q * e(S)` for sparsity checks.
    pub fn sparsity(g: &WeightedMultigraph, a: i64, q: i64) -> Self {
        Self::build(g, |_| a, q)
    }

    fn build(g: &WeightedMultigraph, cost: impl Fn(VertexId) -> i64, unit: i64) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index = |v: VertexId| ids.binary_search(&v).expect("vertex present");
        let edges = g
            .edges()
            .map(|(u, v, m)| (index(u), index(v), m as i64 * unit))
            .collect();
        SubsetProblem {
            cost: ids.iter().map(|&v| cost(v)).collect(),
            ids,
            edges,
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    fn index_of(&self, v: VertexId) -> Result<usize, SolverError> {
        self.ids
            .binary_search(&v)
            .map_err(|_| SolverError::UnknownVertex(v))
    }

    fn ids_of(&self, members: &[bool]) -> BTreeSet<VertexId> {
        members
            .iter()
            .zip(&self.ids)
            .filter(|(&m, _)| m)
            .map(|(_, &v)| v)
            .collect()
    }

    pub fn value(&self, members: &[bool]) -> i64 {
        let vertices: i64 = members
            .iter()
            .zip(&self.cost)
            .filter(|(&m, _)| m)
            .map(|(_, &c)| c)
            .sum();
        let edges: i64 = self
            .edges
            .iter()
            .filter(|(u, v, _)| members[*u] && members[*v])
            .map(|(_, _, p)| p)
            .sum();
        vertices - edges
    }

    /// Project-selection network. Node 0 is the source, node 1 the sink,
    /// then one node per vertex and one per distinct edge. With `reversed`
    /// every arc is flipped and the terminals swap roles, so the source side
    /// of a cut is the complement of the chosen set.
    fn network(&self, reversed: bool) -> Network {
        let n = self.len();
        let mut net = FlowNetwork::new(2 + n + self.edges.len());
        let mut add = |a: usize, b: usize, c: i64| {
            if reversed {
                net.add_arc(b, a, c)
            } else {
                net.add_arc(a, b, c)
            }
        };
        let inf = 1 + self.cost.iter().map(|c| c.abs()).sum::<i64>()
            + self.edges.iter().map(|e| e.2).sum::<i64>();
        let mut positive = 0;
        for (i, &c) in self.cost.iter().enumerate() {
            match c.cmp(&0) {
                Ordering::Greater => {
                    add(2 + i, 1, c);
                }
                Ordering::Less => {
                    add(0, 2 + i, -c);
                    positive += -c;
                }
                Ordering::Equal => {}
            }
        }
        for (k, &(u, v, p)) in self.edges.iter().enumerate() {
            let e = 2 + n + k;
            add(0, e, p);
            add(e, 2 + u, inf);
            add(e, 2 + v, inf);
            positive += p;
        }
        let (source, sink) = if reversed { (1, 0) } else { (0, 1) };
        Network {
            net,
            source,
            sink,
            inf,
            positive,
        }
    }

    /// One min cut with forced members. Returns the optimum and the
    /// inclusion-minimal optimal set.
    pub fn solve(&self, include: &[usize], exclude: &[usize]) -> (i64, Vec<bool>) {
        let Network {
            mut net,
            source,
            sink,
            inf,
            positive,
            ..
        } = self.network(false);
        for &i in include {
            net.add_arc(source, 2 + i, inf);
        }
        for &i in exclude {
            net.add_arc(2 + i, sink, inf);
        }
        let cut = net.max_flow(source, sink);
        let side = net.source_side(source);
        let members: Vec<bool> = (0..self.len()).map(|i| side[2 + i]).collect();
        let value = cut - positive;
        debug_assert_eq!(value, self.value(&members), "cut certificate");
        (value, members)
    }

    /// Best set over the nested family: for each `k`, sets that keep every
    /// pinned vertex and `order[..k]` on one side and `order[k]` on the
    /// other. Unreversed, the pinned side is "inside"; reversed, "outside".
    /// The flow is reused from one step to the next.
    fn sweep(&self, reversed: bool, pinned: Option<usize>, order: &[usize]) -> Option<(i64, Vec<bool>)> {
        let Network {
            mut net,
            source,
            sink,
            inf,
            ..
        } = self.network(reversed);
        let mut sources = vec![source];
        sources.extend(pinned.map(|p| 2 + p));
        let mut best: Option<(i64, Vec<bool>)> = None;
        for &v in order {
            let pin = net.add_arc(2 + v, sink, inf);
            net.augment(&sources, sink);
            let side = net.reachable(&sources);
            let members: Vec<bool> = (0..self.len()).map(|i| side[2 + i] != reversed).collect();
            let found = (self.value(&members), members);
            best = Some(match best {
                None => found,
                Some(b) => pick_better(b, found),
            });
            net.remove_arc(pin);
            sources.push(2 + v);
        }
        best
    }

    /// Minimum over nonempty sets.
    pub fn min_nonempty(&self) -> Option<(i64, Vec<bool>)> {
        if self.len() == 0 {
            return None;
        }
        let any = self.solve(&[], &[]);
        if any.1.iter().any(|&m| m) {
            return Some(any);
        }
        // first member order[k]: order[..k] outside, order[k] inside
        let order: Vec<usize> = (0..self.len()).collect();
        self.sweep(true, None, &order)
    }

    /// Minimum over nonempty sets that miss at least one vertex.
    pub fn min_nonempty_nonspanning(&self) -> Option<(i64, Vec<bool>)> {
        if self.len() < 2 {
            return None;
        }
        let any = self.solve(&[], &[]);
        let size = any.1.iter().filter(|&&m| m).count();
        if size > 0 && size < self.len() {
            return Some(any);
        }
        // Pivot 0: sets containing it miss a first vertex order[k]; sets
        // avoiding it contain a first vertex order[k].
        let order: Vec<usize> = (1..self.len()).collect();
        let inside = self.sweep(false, Some(0), &order);
        let outside = self.sweep(true, Some(0), &order);
        inside.into_iter().chain(outside).reduce(pick_better)
    }
}

struct Network {
    net: FlowNetwork,
    source: usize,
    sink: usize,
    inf: i64,
    positive: i64,
}

fn pick_better(a: (i64, Vec<bool>), b: (i64, Vec<bool>)) -> (i64, Vec<bool>) {
    match a.0.cmp(&b.0) {
        Ordering::Less => a,
        Ordering::Greater => b,
        Ordering::Equal => {
            if lex_cmp(&a.1, &b.1) == Ordering::Greater {
                b
            } else {
                a
            }
        }
    }
}

/// Lexicographic order of the sorted member lists.
fn lex_cmp(a: &[bool], b: &[bool]) -> Ordering {
    let la = a.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i);
    let lb = b.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i);
    la.cmp(lb)
}

fn resolve(
    problem: &SubsetProblem,
    ids: &BTreeSet<VertexId>,
) -> Result<Vec<usize>, SolverError> {
    ids.iter().map(|&v| problem.index_of(v)).collect()
}

fn to_result(problem: &SubsetProblem, (value, members): (i64, Vec<bool>)) -> SubsetResult {
    SubsetResult {
        subset: problem.ids_of(&members),
        potential: ScaledPotential(value),
    }
}

fn check_forced(
    g: &WeightedMultigraph,
    include: &BTreeSet<VertexId>,
    exclude: &BTreeSet<VertexId>,
) -> Result<(), SolverError> {
    if let Some(&v) = include.iter().chain(exclude).find(|v| !g.contains(**v)) {
        return Err(SolverError::UnknownVertex(v));
    }
    if include.intersection(exclude).next().is_some() {
        return Err(SolverError::Infeasible("a vertex is both forced in and forced out"));
    }
    Ok(())
}

/// Exact minimizer of subset potential within `constraint`.
///
/// Among several minimizers the lexicographically smallest one found is
/// returned; which one is found is deterministic but not otherwise
/// specified.
pub fn min_potential(
    g: &WeightedMultigraph,
    constraint: &Constraint,
) -> Result<SubsetResult, SolverError> {
    let problem = SubsetProblem::potential(g);
    let found = match constraint {
        Constraint::Any => problem.solve(&[], &[]),
        Constraint::Nonempty => problem
            .min_nonempty()
            .ok_or(SolverError::Infeasible("nonempty subset of an empty graph"))?,
        Constraint::NonemptyNonspanning => problem
            .min_nonempty_nonspanning()
            .ok_or(SolverError::Infeasible("nonempty proper subset needs two vertices"))?,
        Constraint::Forced { include, exclude } => {
            check_forced(g, include, exclude)?;
            problem.solve(&resolve(&problem, include)?, &resolve(&problem, exclude)?)
        }
    };
    Ok(to_result(&problem, found))
}

/// Exhaustive counterpart of [`min_potential`]; returns the
/// lexicographically smallest minimizer.
pub fn min_potential_bruteforce(
    g: &WeightedMultigraph,
    constraint: &Constraint,
) -> Result<SubsetResult, SolverError> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(SolverError::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let problem = SubsetProblem::potential(g);
    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let (required, forbidden) = match constraint {
        Constraint::Forced { include, exclude } => {
            check_forced(g, include, exclude)?;
            let to_mask = |s: &BTreeSet<VertexId>| -> Result<u32, SolverError> {
                Ok(resolve(&problem, s)?.into_iter().fold(0, |m, i| m | 1 << i))
            };
            (to_mask(include)?, to_mask(exclude)?)
        }
        _ => (0, 0),
    };
    let allowed = |mask: u32| -> bool {
        match constraint {
            Constraint::Any => true,
            Constraint::Nonempty => mask != 0,
            Constraint::NonemptyNonspanning => mask != 0 && mask != full,
            Constraint::Forced { .. } => mask & required == required && mask & forbidden == 0,
        }
    };

    let best = exhaustive_minimum(&problem, allowed).ok_or(match constraint {
        Constraint::Nonempty => SolverError::Infeasible("nonempty subset of an empty graph"),
        _ => SolverError::Infeasible("nonempty proper subset needs two vertices"),
    })?;
    let members: Vec<bool> = (0..n).map(|i| best.1 >> i & 1 == 1).collect();
    Ok(to_result(&problem, (best.0, members)))
}

/// Gray-code walk over all subsets of at most [`BRUTE_FORCE_LIMIT`] vertices.
pub(crate) fn exhaustive_minimum(
    problem: &SubsetProblem,
    allowed: impl Fn(u32) -> bool,
) -> Option<(i64, u32)> {
    let n = problem.len();
    assert!(n <= BRUTE_FORCE_LIMIT);
    let mut weighted_adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for &(u, v, p) in &problem.edges {
        weighted_adj[u].push((v, p));
        weighted_adj[v].push((u, p));
    }
    let mut best: Option<(i64, u32)> = None;
    let mut consider = |value: i64, mask: u32| match best {
        Some((b, m)) if value > b || (value == b && !mask_lex_less(mask, m)) => {}
        _ => best = Some((value, mask)),
    };

    let mut mask = 0u32;
    let mut value = 0i64;
    if allowed(mask) {
        consider(value, mask);
    }
    for step in 1u64..(1u64 << n) {
        let bit = step.trailing_zeros() as usize;
        let inside: i64 = weighted_adj[bit]
            .iter()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .map(|(_, p)| p)
            .sum();
        if mask >> bit & 1 == 0 {
            value += problem.cost[bit] - inside;
        } else {
            value -= problem.cost[bit] - inside;
        }
        mask ^= 1 << bit;
        if allowed(mask) {
            consider(value, mask);
        }
    }
    best
}

/// `a < b` in lexicographic order of sorted member lists.
fn mask_lex_less(a: u32, b: u32) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let k = diff.trailing_zeros();
    let above = |m: u32| k < 31 && m >> (k + 1) != 0;
    if a >> k & 1 == 1 {
        // a continues with k; b continues with something larger or ends
        above(b)
    } else {
        !above(a)
    }
}

/// Whether `e(G[S]) < a |S| - b` for every nonempty induced `S`.
///
/// Induced subsets suffice since dropping edges only lowers `e`.
pub fn check_strict_sparsity(g: &WeightedMultigraph, a: Rational, b: Rational) -> SparsityVerdict {
    let q = a.denom().lcm(b.denom());
    let a_scaled = a.numer() * (q / a.denom());
    let b_scaled = b.numer() * (q / b.denom());
    let problem = SubsetProblem::sparsity(g, a_scaled, q);
    match problem.min_nonempty() {
        Some((value, members)) if value <= b_scaled => SparsityVerdict::Violated {
            witness: problem.ids_of(&members),
        },
        _ => SparsityVerdict::Ok,
    }
}

/// Whether every nonempty weighted subgraph has potential above `-beta`.
///
/// Lower weights and fewer edges only raise potential, so induced subsets
/// with full weights cover every weighted subgraph. The empty set has
/// potential 0, so a single unconstrained cut decides it.
pub fn check_hypothesis(g: &WeightedMultigraph) -> SparsityVerdict {
    let problem = SubsetProblem::potential(g);
    let (value, members) = problem.solve(&[], &[]);
    if value > g.params().critical_threshold().value() {
        SparsityVerdict::Ok
    } else {
        SparsityVerdict::Violated {
            witness: problem.ids_of(&members),
        }
    }
}

/// Smallest value of `a |S| - q e(S)` over sets containing both `u` and `v`.
pub(crate) fn min_sparsity_through(
    g: &WeightedMultigraph,
    a_scaled: i64,
    q: i64,
    through: &[VertexId],
) -> i64 {
    let problem = SubsetProblem::sparsity(g, a_scaled, q);
    let include: Vec<usize> = through
        .iter()
        .map(|&v| problem.index_of(v).expect("vertex present"))
        .collect();
    problem.solve(&include, &[]).0
}
