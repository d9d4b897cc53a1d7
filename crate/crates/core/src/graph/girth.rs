use alloc::collections::{BTreeMap, VecDeque};
use core::fmt;

use super::{VertexId, WeightedMultigraph};

/// Length of a shortest cycle. A doubled edge is a cycle of length 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

impl WeightedMultigraph {
    pub fn girth(&self) -> Girth {
        if self.edges().any(|(_, _, m)| m >= 2) {
            return Girth::Finite(2);
        }
        // BFS from every root; a non-tree edge closes a walk of length
        // dist(u) + dist(v) + 1, and the minimum over all roots is exact.
        let mut best: Option<usize> = None;
        for root in self.vertices() {
            let mut dist: BTreeMap<VertexId, (usize, Option<VertexId>)> = BTreeMap::new();
            dist.insert(root, (0, None));
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let (du, parent) = dist[&u];
                if best.is_some_and(|b| 2 * du + 1 >= b) {
                    break;
                }
                for (v, _) in self.neighbors(u) {
                    if Some(v) == parent {
                        continue;
                    }
                    match dist.get(&v) {
                        Some(&(dv, _)) => {
                            let len = du + dv + 1;
                            best = Some(best.map_or(len, |b| b.min(len)));
                        }
                        None => {
                            dist.insert(v, (du + 1, Some(u)));
                            queue.push_back(v);
                        }
                    }
                }
            }
        }
        best.map_or(Girth::Infinite, Girth::Finite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Params;

    fn p() -> Params {
        Params::new(0, 2).unwrap()
    }

    #[test]
    fn forest_has_infinite_girth() {
        let g = WeightedMultigraph::weightless(p(), 4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(g.girth(), Girth::Infinite);
        assert_eq!(WeightedMultigraph::new(p()).girth(), Girth::Infinite);
    }

    #[test]
    fn parallel_edge_is_a_two_cycle() {
        let g = WeightedMultigraph::weightless(p(), 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (3, 4)])
            .unwrap();
        assert_eq!(g.girth(), Girth::Finite(2));
    }

    #[test]
    fn cycles() {
        let c5 = WeightedMultigraph::weightless(p(), 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
            .unwrap();
        assert_eq!(c5.girth(), Girth::Finite(5));
        // C6 with a chord making a triangle and a pentagon
        let g = WeightedMultigraph::weightless(
            p(),
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)],
        )
        .unwrap();
        assert_eq!(g.girth(), Girth::Finite(3));
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", Girth::Infinite), "inf");
        assert_eq!(alloc::format!("{}", Girth::Finite(12)), "12");
    }
}
