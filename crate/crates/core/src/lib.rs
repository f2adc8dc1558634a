//! Exact minimum-weight edge covers and approximate core allocations for
//! edge cover games.
//!
//! Every quantity is an exact rational. The main entry points:
//!
//! * [`cover::half_integral_cover`]: optimal fractional cover with entries
//!   in `{0, 1/2, 1}`, and [`cover::canonicalize_to_odd_cycles`] to round it
//!   so its half edges form vertex-disjoint odd cycles.
//! * [`game::allocate_alpha_core`]: an allocation satisfying every coalition
//!   and recovering at least `ℓ/(ℓ+1)` of the grand coalition's cost, where
//!   `ℓ` is the shortest odd cycle length.
//! * [`game::integrality_gap`]: `1 + 1/ℓ`, an upper bound on integral over
//!   fractional cover optimum, attained on odd cycles.
//! * [`oracle`]: brute-force references for all of the above.

pub mod cover;
pub mod error;
pub mod formats;
pub mod game;
pub mod generators;
pub mod graph;
pub mod lp;
pub mod oracle;
pub mod rational;

pub use cover::{CoverCertificate, CoverKind, EdgeVector, ExactConfig};
pub use error::{Error, Result};
pub use game::{Allocation, AllocationReport, GapReport};
pub use graph::{Coalition, OddCycle, WeightedGraph};
pub use rational::Rational;
