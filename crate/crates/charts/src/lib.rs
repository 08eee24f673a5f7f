//! Polynomial chart ideals of naive, wedge and spin local models over the DVR model
//! k[u]_(u) (π₀ = u²), the lifting construction for extreme points, and relative positions.

pub mod error;
pub mod frame;
pub mod lift;
pub mod orthogonal;
pub mod picard;
pub mod reduction;
pub mod spec;
pub mod unitary;

pub use error::{ChartError, Result};
pub use lift::{lift_chain, lift_point, relative_position, standard_chain, LiftChecks, LiftPoint};
pub use orthogonal::orthogonal_chart_ideal;
pub use picard::{picard_i1_chart, PicardChart, PicardReport};
pub use reduction::{chart_even_sodd_reduction, Reduction};
pub use spec::{Case, ChartSpec, Level, OrthExample};
pub use unitary::{chart_generators, chart_ideal, spin_constraints};
