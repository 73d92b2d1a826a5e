//! Hook-length bounds on particle entanglement in Schur-Weyl sectors.
//!
//! Exact combinatorics of Young diagrams sit in [`young`]; the symmetric
//! group acts on the abstract irreps through [`orthogonal_form`] and on
//! tensor products through [`tensor`]. [`spectral`] provides Schmidt
//! decompositions and the variational maximization of the top Schmidt
//! coefficient, and [`special_states`] builds the explicit Slater, coherent
//! and bound-saturating states.

pub mod error;
pub mod orthogonal_form;
pub mod permutation;
pub mod special_states;
pub mod spectral;
pub mod tensor;
pub mod young;

pub use error::{Error, Result};
pub use permutation::Permutation;
pub use tensor::{OperatorExpr, TensorState};
pub use young::{BoxBound, Cell, Rational, StandardTableau, YoungDiagram};
