//! Dense states on `(C^d)^{⊗N}` and the permutation-based operators acting on them.

mod operator;
mod projectors;
mod state;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

pub use operator::OperatorExpr;
pub use projectors::{
    closed_form_projector, column_antisymmetrizer, column_projector, isotypic_projector, orthogonal_projector,
    orthonormalize, projected_rank, row_projector, row_symmetrizer, sector_basis, subspace_basis, young_basis_states,
    young_projection, RANK_TOLERANCE,
};
pub use state::{
    amplitude_cap, apply_permutation, state_len, swap_factors, TensorState, CAP_ENV, DEFAULT_AMPLITUDE_CAP,
};

/// Haar-random `d x d` unitary from the QR decomposition of a complex
/// Gaussian matrix with the phases of `R`'s diagonal divided out.
pub fn random_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> DMatrix<Complex64> {
    let g = DMatrix::from_fn(d, d, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let qr = g.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..d {
        let diag = r[(j, j)];
        let phase = if diag.norm() > 0.0 {
            diag / diag.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        q.column_mut(j).iter_mut().for_each(|x| *x *= phase);
    }
    q
}
