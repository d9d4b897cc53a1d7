//! The recursive coloring algorithm.
//!
//! Each level inspects the graph, finds the first of seven configurations
//! that applies, recurses on one or two smaller graphs and extends the
//! returned colorings. Recursion is driven by an explicit stack so that
//! deep chains of small reductions (one vertex at a time) do not exhaust
//! the call stack.

mod cases;
mod extend;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{VertexId, WeightedMultigraph};
use crate::solver::{check_hypothesis, SparsityVerdict};
use crate::verify::verify_coloring;

use cases::{dispatch, Plan};
pub(crate) use extend::Extension;

/// One recursion level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseStep {
    /// Which configuration fired, 1 to 7.
    pub case: u8,
    pub note: String,
    /// The vertices the case acted on: the focus vertex and its relevant
    /// neighbors, or the low-potential set for case 2.
    pub vertices: Vec<VertexId>,
    /// Vertices plus edge units of the graph at this level.
    pub recursion_size: usize,
    pub depth: usize,
    /// Index of the step that spawned this one.
    pub parent: Option<usize>,
    /// Vertex moved to the other class while extending, if any.
    pub flipped: Option<VertexId>,
    /// Case 2 only: the boundary edge `zx` that was allowed to stay
    /// monochromatic, with `W2(x)` raised instead of `c2(x)` zeroed.
    pub bridge: Option<(VertexId, VertexId)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CaseTrace {
    pub steps: Vec<CaseStep>,
}

impl CaseTrace {
    /// Steps whose `parent` is `index`.
    pub fn children(&self, index: usize) -> impl Iterator<Item = (usize, &CaseStep)> + '_ {
        self.steps
            .iter()
            .enumerate()
            .filter(move |(_, s)| s.parent == Some(index))
    }

    pub fn fired(&self, case: u8) -> bool {
        self.steps.iter().any(|s| s.case == case)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("some subgraph has potential at most -beta; witness {witness:?}")]
    HypothesisViolation { witness: BTreeSet<VertexId> },
    #[error("the engine needs d2 >= 2 d1 + 2, got d1 = {d1}, d2 = {d2}")]
    RegimeViolation { d1: i64, d2: i64 },
    #[error("internal failure in case {case}: {detail}")]
    Internal { case: u8, detail: String },
}

/// Finds a desired coloring of `g`.
///
/// Requires `d2 >= 2 d1 + 2` and potential above `-beta` on every nonempty
/// subset; otherwise reports which precondition failed.
pub fn color(g: &WeightedMultigraph) -> Result<(Coloring, CaseTrace), EngineError> {
    let params = g.params();
    if !params.regime_ok() {
        return Err(EngineError::RegimeViolation {
            d1: params.d1(),
            d2: params.d2(),
        });
    }
    if let SparsityVerdict::Violated { witness } = check_hypothesis(g) {
        return Err(EngineError::HypothesisViolation { witness });
    }
    Driver::default().run(g.clone())
}

enum Task {
    Solve {
        graph: WeightedMultigraph,
        parent: Option<usize>,
        depth: usize,
    },
    Finish(Continuation),
}

struct Continuation {
    step: usize,
    depth: usize,
    graph: WeightedMultigraph,
    kind: Pending,
}

pub(crate) enum Pending {
    /// Merge this many component colorings.
    Components(usize),
    /// The low-potential set `h` has been colored; build the rest.
    GapOuter {
        h: BTreeSet<VertexId>,
        boundary: Option<(VertexId, VertexId)>,
    },
    /// Both halves are colored; union them.
    GapUnion(Coloring),
    Extend(Extension),
}

#[derive(Default)]
struct Driver {
    tasks: Vec<Task>,
    results: Vec<Coloring>,
    trace: CaseTrace,
}

impl Driver {
    fn run(mut self, g: WeightedMultigraph) -> Result<(Coloring, CaseTrace), EngineError> {
        self.tasks.push(Task::Solve {
            graph: g,
            parent: None,
            depth: 0,
        });
        while let Some(task) = self.tasks.pop() {
            match task {
                Task::Solve {
                    graph,
                    parent,
                    depth,
                } => self.solve(graph, parent, depth)?,
                Task::Finish(c) => self.finish(c)?,
            }
        }
        let coloring = self.results.pop().expect("root coloring");
        debug_assert!(self.results.is_empty());
        Ok((coloring, self.trace))
    }

    fn solve(
        &mut self,
        graph: WeightedMultigraph,
        parent: Option<usize>,
        depth: usize,
    ) -> Result<(), EngineError> {
        let (info, plan) = dispatch(&graph)?;
        let step = self.trace.steps.len();
        self.trace.steps.push(CaseStep {
            case: info.case,
            note: info.note.into(),
            vertices: info.vertices,
            recursion_size: graph.vertex_count() + graph.edge_count(),
            depth,
            parent,
            flipped: None,
            bridge: None,
        });
        match plan {
            Plan::Done(c) => {
                check_level(&graph, &c, info.case)?;
                self.results.push(c);
            }
            Plan::Recurse { children, pending } => {
                for child in &children {
                    guard(child, info.case)?;
                }
                self.tasks.push(Task::Finish(Continuation {
                    step,
                    depth,
                    graph,
                    kind: pending,
                }));
                // the first child is solved first
                for child in children.into_iter().rev() {
                    self.tasks.push(Task::Solve {
                        graph: child,
                        parent: Some(step),
                        depth: depth + 1,
                    });
                }
            }
        }
        Ok(())
    }

    fn finish(&mut self, c: Continuation) -> Result<(), EngineError> {
        let case = self.trace.steps[c.step].case;
        let coloring = match c.kind {
            Pending::Components(k) => {
                let at = self.results.len() - k;
                let mut merged = Coloring::new();
                for part in self.results.drain(at..) {
                    merged.absorb(part);
                }
                merged
            }
            Pending::GapOuter { h, boundary } => {
                let inner = self.results.pop().expect("coloring of H");
                let (outer, bridge) = cases::gap_outer_graph(&c.graph, &h, &inner, boundary);
                guard(&outer, case)?;
                self.trace.steps[c.step].bridge = bridge;
                self.tasks.push(Task::Finish(Continuation {
                    kind: Pending::GapUnion(inner),
                    ..c
                }));
                self.tasks.push(Task::Solve {
                    graph: outer,
                    parent: Some(c.step),
                    depth: c.depth + 1,
                });
                return Ok(());
            }
            Pending::GapUnion(mut inner) => {
                inner.absorb(self.results.pop().expect("coloring of G*"));
                inner
            }
            Pending::Extend(ext) => {
                let child = self.results.pop().expect("child coloring");
                let (extended, flipped) = ext.apply(&c.graph, child);
                self.trace.steps[c.step].flipped = flipped;
                extended
            }
        };
        check_level(&c.graph, &coloring, case)?;
        self.results.push(coloring);
        Ok(())
    }
}

/// Every child must satisfy the hypothesis for the recursion to be sound.
fn guard(child: &WeightedMultigraph, case: u8) -> Result<(), EngineError> {
    match check_hypothesis(child) {
        SparsityVerdict::Ok => Ok(()),
        SparsityVerdict::Violated { witness } => Err(EngineError::Internal {
            case,
            detail: format!("reduced graph fails the hypothesis on {witness:?}"),
        }),
    }
}

/// Debug builds check every level's coloring before the parent extends it.
fn check_level(g: &WeightedMultigraph, c: &Coloring, case: u8) -> Result<(), EngineError> {
    if !cfg!(debug_assertions) {
        return Ok(());
    }
    match verify_coloring(g, c) {
        Ok(v) if v.is_ok() => Ok(()),
        Ok(v) => Err(EngineError::Internal {
            case,
            detail: format!("invalid coloring produced: {:?}", v.violations),
        }),
        Err(e) => Err(EngineError::Internal {
            case,
            detail: format!("{e}"),
        }),
    }
}

pub(crate) struct StepInfo {
    pub case: u8,
    pub note: &'static str,
    pub vertices: Vec<VertexId>,
}

impl StepInfo {
    fn new(case: u8, note: &'static str, vertices: Vec<VertexId>) -> Self {
        StepInfo {
            case,
            note,
            vertices,
        }
    }
}

fn internal(case: u8, detail: &str) -> EngineError {
    EngineError::Internal {
        case,
        detail: detail.into(),
    }
}

#[cfg(test)]
mod tests;
