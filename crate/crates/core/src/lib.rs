//! Vertex partitions of sparse weighted multigraphs into two bounded-degree
//! forests.
//!
//! A weighted multigraph carries two budgets per vertex (`W1`, `W2`) and two
//! global degree bounds `d1`, `d2`. A *desired coloring* puts every vertex in
//! class 1 or 2 so that each class induces a forest and every vertex's
//! same-class degree plus its weight for that class stays within the bound.
//!
//! The crate decides and constructs such colorings whenever every subgraph
//! has potential above `-beta`, using an exact min-cut subset minimizer and a
//! recursive reduction engine. Brute-force oracles and the sharp critical
//! families are included for verification.
//!
//! All arithmetic is exact: potentials are stored as integers scaled by
//! `D = (d1 + 2)(d2 + 1)`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod coloring;
pub mod constructions;
mod dsu;
pub mod engine;
pub mod error;
pub mod flow;
pub mod graph;
pub mod params;
pub mod solver;
pub mod verify;

pub use coloring::{Class, Coloring};
pub use constructions::ConstructionError;
pub use engine::{color, CaseStep, CaseTrace, EngineError};
pub use error::GraphError;
pub use graph::{Girth, Normalization, VertexId, VertexProfile, WeightedMultigraph};
pub use params::{Params, Rational, ScaledPotential};
pub use solver::{
    check_hypothesis, check_strict_sparsity, min_potential, min_potential_bruteforce, Constraint,
    SolverError, SparsityVerdict, SubsetResult,
};
pub use verify::{brute_force_color, is_critical, verify_coloring, Verdict, VerifyError, Violation, ViolationKind};
