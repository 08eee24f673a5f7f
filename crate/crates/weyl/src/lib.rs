//! Iwahori–Weyl group combinatorics for ramified unitary groups: Bruhat order,
//! μ-admissible sets, double cosets, vertex-wise admissibility, parahoric index sets,
//! affine root sets, coherence counts and alcove pictures.

pub mod adm;
pub mod bruhat;
pub mod coherence;
pub mod error;
pub mod group;
pub mod parahoric;
pub mod roots;
pub mod svg;

pub use adm::{adm0, admissible_set, coweight_image, project_double_coset, vertexwise_check};
pub use error::{Result, WeylError};
pub use group::{AffineGroup, Elem, ElemJson, Family, SignedPerm};
pub use parahoric::{parahoric_classify, Label, ParahoricIndex};
