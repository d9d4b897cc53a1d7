//! Ground truth: coloring validity, exhaustive coloring search and
//! criticality for small instances.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::coloring::{Class, Coloring};
use crate::dsu::RollbackDsu;
use crate::graph::{VertexId, WeightedMultigraph};

/// Largest graph accepted by [`brute_force_color`].
pub const COLOR_SEARCH_LIMIT: usize = 22;
/// Largest graph accepted by [`is_critical`].
pub const CRITICAL_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationKind {
    DegreeBudget,
    Cycle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub class: Class,
    /// The offending vertex for a budget violation; the vertices of the
    /// cycle, in order, for a cycle violation.
    pub vertices: Vec<VertexId>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("vertex {0} has no class")]
    Unassigned(VertexId),
    #[error("coloring assigns vertex {0}, which is not in the graph")]
    UnknownVertex(VertexId),
    #[error("graph has {n} vertices; exhaustive search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Checks that each class induces a forest and that every vertex's
/// same-class degree plus its weight stays within the bound. Reports every
/// violation.
pub fn verify_coloring(g: &WeightedMultigraph, c: &Coloring) -> Result<Verdict, VerifyError> {
    if let Some(v) = g.vertices().find(|&v| c.get(v).is_none()) {
        return Err(VerifyError::Unassigned(v));
    }
    if let Some((v, _)) = c.iter().find(|&(v, _)| !g.contains(v)) {
        return Err(VerifyError::UnknownVertex(v));
    }

    let mut violations = Vec::new();
    for class in Class::BOTH {
        let members: Vec<VertexId> = c.class_members(class).collect();
        let index: BTreeMap<VertexId, usize> =
            members.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut dsu = RollbackDsu::new(members.len());
        let mut forest: Vec<Vec<usize>> = vec![Vec::new(); members.len()];

        for (u, v, m) in g.edges() {
            let (Some(&iu), Some(&iv)) = (index.get(&u), index.get(&v)) else {
                continue;
            };
            if m >= 2 {
                violations.push(Violation {
                    kind: ViolationKind::Cycle,
                    class,
                    vertices: vec![u, v],
                });
            } else if dsu.union(iu, iv) {
                forest[iu].push(iv);
                forest[iv].push(iu);
            } else {
                let path = tree_path(&forest, iu, iv);
                violations.push(Violation {
                    kind: ViolationKind::Cycle,
                    class,
                    vertices: path.into_iter().map(|i| members[i]).collect(),
                });
            }
        }

        let bound = g.params().bound(class);
        for &x in &members {
            let same: usize = g
                .neighbors(x)
                .filter(|(y, _)| c.get(*y) == Some(class))
                .map(|(_, m)| m as usize)
                .sum();
            if same as i64 + g.weight(x, class).unwrap_or(0) > bound {
                violations.push(Violation {
                    kind: ViolationKind::DegreeBudget,
                    class,
                    vertices: vec![x],
                });
            }
        }
    }
    Ok(Verdict { violations })
}

/// Path from `from` to `to` in a forest given by adjacency lists.
fn tree_path(forest: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; forest.len()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &y in &forest[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    path
}

/// Exhaustive search for a desired coloring.
///
/// Assignments are explored in increasing id order, class 1 before class 2,
/// so the result is the first valid coloring in that lexicographic order.
pub fn brute_force_color(g: &WeightedMultigraph) -> Result<Option<Coloring>, VerifyError> {
    let n = g.vertex_count();
    if n > COLOR_SEARCH_LIMIT {
        return Err(VerifyError::TooLarge {
            n,
            limit: COLOR_SEARCH_LIMIT,
        });
    }
    Ok(Search::new(g).run())
}

struct Search {
    ids: Vec<VertexId>,
    /// Neighbors with smaller index, with multiplicity.
    earlier: Vec<Vec<(usize, u8)>>,
    /// Remaining same-class degree allowance, `c_j - 1`, per class.
    room: Vec<[i64; 2]>,
    class: Vec<Option<Class>>,
    forests: [RollbackDsu; 2],
}

impl Search {
    fn new(g: &WeightedMultigraph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let earlier = ids
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .map(|(x, m)| (index[&x], m))
                    .filter(|&(j, _)| j < index[&v])
                    .collect()
            })
            .collect();
        let room = ids
            .iter()
            .map(|&v| Class::BOTH.map(|c| g.capacity(v, c).unwrap_or(0) - 1))
            .collect();
        let n = ids.len();
        Search {
            earlier,
            room,
            class: vec![None; n],
            forests: [RollbackDsu::new(n), RollbackDsu::new(n)],
            ids,
        }
    }

    fn run(mut self) -> Option<Coloring> {
        if self.place(0) {
            Some(
                self.ids
                    .iter()
                    .zip(&self.class)
                    .map(|(&v, c)| (v, c.expect("complete assignment")))
                    .collect(),
            )
        } else {
            None
        }
    }

    fn place(&mut self, i: usize) -> bool {
        if i == self.ids.len() {
            return true;
        }
        for class in Class::BOTH {
            let k = class.index();
            if self.room[i][k] < 0 {
                continue;
            }
            let checkpoint = self.forests[k].checkpoint();
            let mut touched: Vec<(usize, i64)> = Vec::new();
            let mut ok = true;
            for idx in 0..self.earlier[i].len() {
                let (j, m) = self.earlier[i][idx];
                if self.class[j] != Some(class) {
                    continue;
                }
                let m = m as i64;
                touched.push((j, m));
                self.room[j][k] -= m;
                self.room[i][k] -= m;
                if m >= 2 || !self.forests[k].union(i, j) || self.room[j][k] < 0 || self.room[i][k] < 0
                {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.class[i] = Some(class);
                if self.place(i + 1) {
                    return true;
                }
                self.class[i] = None;
            }
            for (j, m) in touched {
                self.room[j][k] += m;
                self.room[i][k] += m;
            }
            self.forests[k].rollback(checkpoint);
        }
        false
    }
}

/// Every graph one atomic weakening away from `g`: one edge unit removed,
/// one vertex deleted, or one weight unit removed.
pub fn single_step_weakenings(g: &WeightedMultigraph) -> Vec<WeightedMultigraph> {
    let mut out = Vec::new();
    for (u, v, _) in g.edges() {
        let mut h = g.clone();
        h.remove_edge_unit(u, v).expect("edge present");
        out.push(h);
    }
    for v in g.vertices() {
        out.push(g.delete_vertex(v).expect("vertex present"));
        for class in Class::BOTH {
            if g.weight(v, class).unwrap_or(0) > 0 {
                let mut h = g.clone();
                h.decrement_weight(v, class).expect("positive weight");
                out.push(h);
            }
        }
    }
    out
}

/// True iff `g` has no desired coloring while every single-step weakening
/// has one. Colorability is monotone under weakening, so single steps
/// cover every proper weighted subgraph.
pub fn is_critical(g: &WeightedMultigraph) -> Result<bool, VerifyError> {
    let n = g.vertex_count();
    if n > CRITICAL_LIMIT {
        return Err(VerifyError::TooLarge {
            n,
            limit: CRITICAL_LIMIT,
        });
    }
    if brute_force_color(g)?.is_some() {
        return Ok(false);
    }
    for h in single_step_weakenings(g) {
        if brute_force_color(&h)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertices whose class differs between two colorings of the same set.
pub fn changed_vertices(a: &Coloring, b: &Coloring) -> BTreeSet<VertexId> {
    a.iter().filter(|&(v, c)| b.get(v) != Some(c)).map(|(v, _)| v).collect()
}
