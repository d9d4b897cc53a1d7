use super::{VertexId, WeightedMultigraph};
use crate::coloring::Class;
use crate::error::GraphError;

/// Capacity-versus-degree classification of a single vertex.
///
/// For each class exactly one of null, slack and constrained holds. Null
/// takes precedence over slack, which only matters for isolated vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexProfile {
    /// Degree counted with multiplicity.
    pub degree: usize,
    /// Number of distinct neighbors.
    pub neighbors: usize,
    pub capacity: [i64; 2],
    pub null: [bool; 2],
    pub slack: [bool; 2],
    pub constrained: [bool; 2],
    pub doubly_constrained: bool,
    pub somehow_constrained: bool,
    pub three_two_two: bool,
    pub triple_three: bool,
}

impl VertexProfile {
    pub fn compute(degree: usize, neighbors: usize, c1: i64, c2: i64) -> Self {
        let d = degree as i64;
        let capacity = [c1, c2];
        let null = [c1 == 0, c2 == 0];
        let mut slack = [false; 2];
        for i in 0..2 {
            let (own, other) = (capacity[i], capacity[1 - i]);
            slack[i] = !null[i] && (own > d || (own == d && other >= 1));
        }
        let constrained = [!null[0] && !slack[0], !null[1] && !slack[1]];
        VertexProfile {
            degree,
            neighbors,
            capacity,
            null,
            slack,
            constrained,
            doubly_constrained: constrained[0] && constrained[1],
            somehow_constrained: constrained[0] || constrained[1],
            three_two_two: degree == 3 && c1 >= 2 && c2 >= 2,
            triple_three: degree == 3 && c1 >= 3 && c2 >= 3,
        }
    }

    pub fn capacity(&self, class: Class) -> i64 {
        self.capacity[class.index()]
    }

    pub fn is_null(&self, class: Class) -> bool {
        self.null[class.index()]
    }

    pub fn is_slack(&self, class: Class) -> bool {
        self.slack[class.index()]
    }

    pub fn is_constrained(&self, class: Class) -> bool {
        self.constrained[class.index()]
    }
}

impl WeightedMultigraph {
    pub fn profile(&self, u: VertexId) -> Result<VertexProfile, GraphError> {
        if !self.contains(u) {
            return Err(GraphError::UnknownVertex(u));
        }
        Ok(self.profile_unchecked(u))
    }

    pub(crate) fn profile_unchecked(&self, u: VertexId) -> VertexProfile {
        VertexProfile::compute(
            self.deg(u),
            self.distinct_neighbors(u),
            self.cap(u, Class::One),
            self.cap(u, Class::Two),
        )
    }
}
