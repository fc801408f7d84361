//! Triangle flip graphs of pseudoline and intersecting pseudocircle
//! arrangements.
//!
//! * [`signotope`] encodes marked pseudoline arrangements as 3-signotopes.
//! * [`graph`] builds flip graphs and measures connectivity and diameter.
//! * [`shelling`] covers extreme lines, sweeps and good triangle sets.
//! * [`realize`] realizes shellable arrangements with exact rational lines.
//! * [`pcircle`] holds planar pseudocircle arrangements and their flips.
//! * [`cylinder`] handles cylindrical diagrams and cylindrification.
//! * [`cli`] is the batch front-end behind the `fliplab` binary.

pub mod checks;
pub mod cli;
pub mod cylinder;
pub mod error;
pub mod graph;
pub mod pcircle;
pub mod realize;
pub mod shelling;
pub mod signotope;
pub mod svg;

pub use error::{ArrangementError, Error, Result};
pub use signotope::{Sign, Signotope, Triple, WiringDiagram};
