//! Exterior-power linear algebra behind the spin condition: the discriminant, the operator
//! a_e on ∧ⁿV and its ± eigenspaces, the parity rule for isotropic subspaces, and the ±
//! parts of ∧ⁿ of lattices over a DVR.

pub mod ae;
pub mod error;
pub mod lattice;
pub mod laurent;
pub mod unitary;
pub mod wedge;

pub use ae::{
    ae_square_check, apply_ae, discriminant, eigen_basis, isotropic_parity, plus_eigenvalue, DiscriminantData,
    Label, Parity,
};
pub use error::{Result, SpinError};
pub use lattice::{lattice_pm_basis, LatticeSpec, PmLattice, SplitBasis};
pub use laurent::Laurent;
pub use wedge::{sigma_sign, WedgeIndex, WedgeVector};
