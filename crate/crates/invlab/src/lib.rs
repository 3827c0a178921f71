//! Digraph inversions: reverse all arcs whose endpoints both lie in a chosen
//! vertex set.
//!
//! The library answers two families of questions about a digraph `D`: how few
//! inversions make `D` k-strong or k-arc-strong (exact small-scale search in
//! [`exact`], constructive procedures with verified certificates in
//! [`construct`] and [`randomized`]), and how hard the general question is
//! (reduction gadgets and lower-bound witness families in [`gadgets`]).
//!
//! Every certificate a construction returns is re-verified by the max-flow
//! connectivity checks in [`connectivity`] before it reaches the caller, and
//! every randomized procedure is a deterministic function of an explicit
//! seed. The `examples/` directory has one runnable program per capability;
//! the `invlab` binary exposes the same operations as subcommands.

pub mod certificate;
pub mod cli;
pub mod connectivity;
pub mod construct;
pub mod digraph;
pub mod error;
pub mod exact;
pub mod family;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod median;
pub mod mixed;
pub mod randomized;

pub use certificate::{Certificate, Property};
pub use digraph::{Digraph, Tournament};
pub use error::Error;
pub use family::{InversionFamily, VectorLabeling};
