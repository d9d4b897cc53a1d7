use alloc::collections::BTreeSet;

use super::{VertexId, WeightedMultigraph};
use crate::coloring::Class;
use crate::error::GraphError;
use crate::params::ScaledPotential;

impl WeightedMultigraph {
    /// `alpha * c1(u) + beta * (c2(u) - 1)`, scaled.
    pub fn vertex_potential(&self, u: VertexId) -> Result<ScaledPotential, GraphError> {
        if !self.contains(u) {
            return Err(GraphError::UnknownVertex(u));
        }
        Ok(self.vertex_potential_unchecked(u))
    }

    pub(crate) fn vertex_potential_unchecked(&self, u: VertexId) -> ScaledPotential {
        let p = self.params();
        ScaledPotential(
            p.alpha_scaled() * self.cap(u, Class::One)
                + p.beta_scaled() * (self.cap(u, Class::Two) - 1),
        )
    }

    /// Potential of the induced weighted subgraph on `set`, scaled.
    pub fn subset_potential(&self, set: &BTreeSet<VertexId>) -> Result<ScaledPotential, GraphError> {
        if let Some(&v) = set.iter().find(|v| !self.contains(**v)) {
            return Err(GraphError::UnknownVertex(v));
        }
        let vertices: i64 = set
            .iter()
            .map(|&v| self.vertex_potential_unchecked(v).value())
            .sum();
        let edges = self.induced_edge_count(set) as i64;
        Ok(ScaledPotential(vertices - self.params().scale() * edges))
    }

    /// Potential of the whole graph, scaled.
    pub fn potential(&self) -> ScaledPotential {
        let vertices: i64 = self
            .vertices()
            .map(|v| self.vertex_potential_unchecked(v).value())
            .sum();
        ScaledPotential(vertices - self.params().scale() * self.edge_count() as i64)
    }
}
