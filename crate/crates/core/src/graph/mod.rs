//! Weighted loopless multigraphs.
//!
//! Every vertex carries a weight per class; the *capacity* of `u` for class
//! `j` is `c_j(u) = d_j + 1 - W_j(u)`. A graph value always satisfies two
//! normal-form invariants, enforced on ingest and by every mutation:
//!
//! * edge multiplicity is 1 or 2 (a triple edge colors exactly like a double
//!   one, so it is clamped);
//! * capacities are non-negative (weights are clamped to `d_j + 1`).
//!
//! Vertex ids are stable across every operation, so a coloring of a derived
//! graph can be pulled back onto the graph it came from.

mod girth;
mod potential;
mod profile;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

pub use girth::Girth;
pub use profile::VertexProfile;

use crate::coloring::Class;
use crate::error::GraphError;
use crate::params::Params;

/// Stable vertex identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// A change made while bringing input into normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalization {
    WeightClamped {
        vertex: VertexId,
        class: Class,
        from: i64,
        to: i64,
    },
    MultiplicityClamped {
        u: VertexId,
        v: VertexId,
        from: u32,
    },
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Normalization::WeightClamped {
                vertex,
                class,
                from,
                to,
            } => write!(f, "weight W{class} of vertex {vertex} clamped from {from} to {to}"),
            Normalization::MultiplicityClamped { u, v, from } => {
                write!(f, "multiplicity of edge {u}-{v} clamped from {from} to 2")
            }
        }
    }
}

pub(crate) const MAX_MULTIPLICITY: u8 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedMultigraph {
    params: Params,
    weights: BTreeMap<VertexId, [i64; 2]>,
    adjacency: BTreeMap<VertexId, BTreeMap<VertexId, u8>>,
    edge_units: usize,
}

impl WeightedMultigraph {
    pub fn new(params: Params) -> Self {
        WeightedMultigraph {
            params,
            weights: BTreeMap::new(),
            adjacency: BTreeMap::new(),
            edge_units: 0,
        }
    }

    /// Builds a graph from raw vertex and edge lists, normalizing as it goes.
    ///
    /// Repeated pairs in `edges` accumulate multiplicity. Weights above
    /// `d_j + 1` and multiplicities above 2 are clamped and reported.
    pub fn from_parts<V, E>(
        params: Params,
        vertices: V,
        edges: E,
    ) -> Result<(Self, Vec<Normalization>), GraphError>
    where
        V: IntoIterator<Item = (VertexId, i64, i64)>,
        E: IntoIterator<Item = (VertexId, VertexId, u32)>,
    {
        let mut g = WeightedMultigraph::new(params);
        let mut notes = Vec::new();
        for (id, w1, w2) in vertices {
            if g.contains(id) {
                return Err(GraphError::DuplicateVertex(id));
            }
            let mut w = [w1, w2];
            for class in Class::BOTH {
                let raw = w[class.index()];
                if raw < 0 {
                    return Err(GraphError::NegativeWeight(id));
                }
                let max = params.bound(class) + 1;
                if raw > max {
                    notes.push(Normalization::WeightClamped {
                        vertex: id,
                        class,
                        from: raw,
                        to: max,
                    });
                    w[class.index()] = max;
                }
            }
            g.weights.insert(id, w);
            g.adjacency.insert(id, BTreeMap::new());
        }

        let mut requested: BTreeMap<(VertexId, VertexId), u32> = BTreeMap::new();
        for (u, v, m) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            for x in [u, v] {
                if !g.contains(x) {
                    return Err(GraphError::UnknownVertex(x));
                }
            }
            if m == 0 {
                return Err(GraphError::ZeroMultiplicity(u, v));
            }
            *requested.entry(ordered(u, v)).or_insert(0) += m;
        }
        for ((u, v), m) in requested {
            if m > MAX_MULTIPLICITY as u32 {
                notes.push(Normalization::MultiplicityClamped { u, v, from: m });
            }
            g.set_multiplicity(u, v, m.min(MAX_MULTIPLICITY as u32) as u8);
        }
        Ok((g, notes))
    }

    /// Weightless graph from an edge list over ids `0..n`.
    pub fn weightless(params: Params, n: u32, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let (g, _) = Self::from_parts(
            params,
            (0..n).map(|i| (VertexId(i), 0, 0)),
            edges.iter().map(|&(u, v)| (VertexId(u), VertexId(v), 1)),
        )?;
        Ok(g)
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edge_units
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.weights.contains_key(&v)
    }

    /// Vertices in increasing id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.weights.keys().copied()
    }

    /// Distinct edges `(u, v, multiplicity)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, u8)> + '_ {
        self.adjacency.iter().flat_map(|(&u, nbrs)| {
            nbrs.range(next_id(u)..)
                .map(move |(&v, &m)| (u, v, m))
        })
    }

    /// Neighbors of `v` with edge multiplicities, in increasing id order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, u8)> + '_ {
        self.adjacency
            .get(&v)
            .into_iter()
            .flat_map(|nbrs| nbrs.iter().map(|(&x, &m)| (x, m)))
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> u8 {
        self.adjacency
            .get(&u)
            .and_then(|n| n.get(&v))
            .copied()
            .unwrap_or(0)
    }

    /// Degree counted with multiplicity.
    pub fn degree(&self, v: VertexId) -> Option<usize> {
        self.adjacency
            .get(&v)
            .map(|n| n.values().map(|&m| m as usize).sum())
    }

    pub fn weight(&self, v: VertexId, class: Class) -> Option<i64> {
        self.weights.get(&v).map(|w| w[class.index()])
    }

    /// `c_j(v) = d_j + 1 - W_j(v)`.
    pub fn capacity(&self, v: VertexId, class: Class) -> Option<i64> {
        self.weight(v, class)
            .map(|w| self.params.bound(class) + 1 - w)
    }

    pub fn max_id(&self) -> Option<VertexId> {
        self.weights.keys().next_back().copied()
    }

    /// Smallest id above every id in use.
    pub fn fresh_id(&self) -> VertexId {
        self.max_id().map_or(VertexId(0), next_id)
    }

    pub(crate) fn cap(&self, v: VertexId, class: Class) -> i64 {
        self.params.bound(class) + 1 - self.weights[&v][class.index()]
    }

    pub(crate) fn deg(&self, v: VertexId) -> usize {
        self.adjacency[&v].values().map(|&m| m as usize).sum()
    }

    pub(crate) fn distinct_neighbors(&self, v: VertexId) -> usize {
        self.adjacency[&v].len()
    }

    // In-place edits. Each keeps the normal form.

    pub fn insert_vertex(&mut self, id: VertexId, w1: i64, w2: i64) -> Result<(), GraphError> {
        if self.contains(id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        if w1 < 0 || w2 < 0 {
            return Err(GraphError::NegativeWeight(id));
        }
        let w = [
            w1.min(self.params.d1() + 1),
            w2.min(self.params.d2() + 1),
        ];
        self.weights.insert(id, w);
        self.adjacency.insert(id, BTreeMap::new());
        Ok(())
    }

    pub fn remove_vertex(&mut self, id: VertexId) -> Result<(), GraphError> {
        let nbrs = self
            .adjacency
            .remove(&id)
            .ok_or(GraphError::UnknownVertex(id))?;
        self.weights.remove(&id);
        for (x, m) in nbrs {
            self.edge_units -= m as usize;
            if let Some(n) = self.adjacency.get_mut(&x) {
                n.remove(&id);
            }
        }
        Ok(())
    }

    /// Adds one unit of multiplicity to `uv`; a third parallel edge is absorbed.
    pub fn insert_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        let m = self.multiplicity(u, v);
        self.set_multiplicity(u, v, (m + 1).min(MAX_MULTIPLICITY));
        Ok(())
    }

    /// Removes one unit of multiplicity from `uv`.
    pub fn remove_edge_unit(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        let m = self.multiplicity(u, v);
        if m == 0 {
            return Err(GraphError::MissingEdge(u, v));
        }
        self.set_multiplicity(u, v, m - 1);
        Ok(())
    }

    /// Sets `W_j(v)`; values above `d_j + 1` are rejected.
    pub fn set_weight(&mut self, v: VertexId, class: Class, w: i64) -> Result<(), GraphError> {
        let max = self.params.bound(class) + 1;
        let slot = self
            .weights
            .get_mut(&v)
            .ok_or(GraphError::UnknownVertex(v))?;
        if w < 0 {
            return Err(GraphError::NegativeWeight(v));
        }
        if w > max {
            return Err(GraphError::CapacityUnderflow { vertex: v, class });
        }
        slot[class.index()] = w;
        Ok(())
    }

    /// `W_j(v) += 1`, failing if `c_j(v)` is already zero.
    pub fn increment_weight(&mut self, v: VertexId, class: Class) -> Result<(), GraphError> {
        let w = self.weight(v, class).ok_or(GraphError::UnknownVertex(v))?;
        self.set_weight(v, class, w + 1)
    }

    /// `W_j(v) += 1` unless `c_j(v)` is already zero. A negative capacity
    /// colors exactly like a zero one, so the clamp loses nothing.
    pub(crate) fn increment_weight_saturating(&mut self, v: VertexId, class: Class) {
        let max = self.params.bound(class) + 1;
        let slot = &mut self.weights.get_mut(&v).expect("vertex in graph")[class.index()];
        *slot = (*slot + 1).min(max);
    }

    pub fn decrement_weight(&mut self, v: VertexId, class: Class) -> Result<(), GraphError> {
        let w = self.weight(v, class).ok_or(GraphError::UnknownVertex(v))?;
        if w == 0 {
            return Err(GraphError::WeightUnderflow { vertex: v, class });
        }
        self.set_weight(v, class, w - 1)
    }

    /// `c_j(v) := 0`.
    pub fn zero_capacity(&mut self, v: VertexId, class: Class) -> Result<(), GraphError> {
        self.set_weight(v, class, self.params.bound(class) + 1)
    }

    // Persistent counterparts: the receiver is left untouched.

    pub fn add_vertex(&self, id: VertexId, w1: i64, w2: i64) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.insert_vertex(id, w1, w2)?;
        Ok(g)
    }

    pub fn delete_vertex(&self, id: VertexId) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.remove_vertex(id)?;
        Ok(g)
    }

    pub fn add_edge(&self, u: VertexId, v: VertexId) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    pub fn bump_weight(&self, v: VertexId, class: Class) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.increment_weight(v, class)?;
        Ok(g)
    }

    pub fn set_capacity_zero(&self, v: VertexId, class: Class) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.zero_capacity(v, class)?;
        Ok(g)
    }

    /// The induced weighted subgraph on `set`, with full weights.
    pub fn induced<I: IntoIterator<Item = VertexId>>(&self, set: I) -> Result<Self, GraphError> {
        let keep: BTreeSet<VertexId> = set.into_iter().collect();
        let mut g = WeightedMultigraph::new(self.params);
        for &v in &keep {
            let w = *self.weights.get(&v).ok_or(GraphError::UnknownVertex(v))?;
            g.weights.insert(v, w);
            let nbrs: BTreeMap<VertexId, u8> = self.adjacency[&v]
                .iter()
                .filter(|(x, _)| keep.contains(x))
                .map(|(&x, &m)| (x, m))
                .collect();
            g.edge_units += nbrs.values().map(|&m| m as usize).sum::<usize>();
            g.adjacency.insert(v, nbrs);
        }
        g.edge_units /= 2;
        Ok(g)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = alloc::vec![start];
            let mut stack = alloc::vec![start];
            while let Some(v) = stack.pop() {
                for (x, _) in self.neighbors(v) {
                    if seen.insert(x) {
                        comp.push(x);
                        stack.push(x);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Number of edge units with both endpoints in `set`.
    pub fn induced_edge_count(&self, set: &BTreeSet<VertexId>) -> usize {
        set.iter()
            .filter_map(|v| self.adjacency.get(v).map(|n| (v, n)))
            .flat_map(|(v, n)| n.range(next_id(*v)..))
            .filter(|(x, _)| set.contains(x))
            .map(|(_, &m)| m as usize)
            .sum()
    }

    fn check_pair(&self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        for x in [u, v] {
            if !self.contains(x) {
                return Err(GraphError::UnknownVertex(x));
            }
        }
        Ok(())
    }

    fn set_multiplicity(&mut self, u: VertexId, v: VertexId, m: u8) {
        let old = self.multiplicity(u, v);
        self.edge_units = self.edge_units + m as usize - old as usize;
        for (a, b) in [(u, v), (v, u)] {
            let n = self.adjacency.get_mut(&a).expect("endpoint present");
            if m == 0 {
                n.remove(&b);
            } else {
                n.insert(b, m);
            }
        }
    }
}

fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn next_id(v: VertexId) -> VertexId {
    VertexId(v.0 + 1)
}
