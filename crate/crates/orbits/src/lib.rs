//! Nilpotent orbits for the symmetric pairs (gl_n, o_n) and (gl_n, sp_n): partitions, the
//! candidate equations of the orbit closures of (2^s, 1^r), and comparison with chart special
//! fibers.

pub mod error;
pub mod orbit;
pub mod partition;

pub use error::{OrbitError, Result};
pub use orbit::{orbit_closure_ideal, orbit_dim, special_fiber_vs_orbit, FiberComparison, SymmetricPair};
pub use partition::{dominance_leq, double_partition, Partition};
