//! Group edge coloring toolkit.
//!
//! The library decides and verifies group coloring and group list coloring
//! questions on small graphs: exact (A, L, f)-coloring solvers, bounded
//! sweeps over Abelian groups for chromatic/choice numbers (vertex and edge
//! versions via the line graph), a constructive peel-and-color route for
//! edge instances, and an exact-rational discharging engine on plane graphs.

pub mod abelian;
pub mod choosability;
pub mod cycles;
pub mod discharging;
pub mod embedding;
pub mod gen;
pub mod graph;
pub mod graph6;
pub mod instance;
pub mod linegraph;
pub mod solver;

pub use abelian::{abelian_groups_of_order, Group, GroupElt};
pub use graph::{Graph, Orientation};
pub use instance::{Coloring, ForbiddenAssignment, ListAssignment};
