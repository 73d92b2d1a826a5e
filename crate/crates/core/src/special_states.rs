//! Slater determinants, coherent states of column-ordered tableaux and the
//! states that saturate the per-box bound.

use itertools::Itertools;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::tensor::{orthogonal_projector, OperatorExpr, TensorState};
use crate::young::{Cell, StandardTableau, YoungDiagram};

const FRAME_TOLERANCE: f64 = 1e-12;

/// Orthonormal vectors `u_0, u_1, ...` in `C^d`.
#[derive(Clone, Debug)]
pub struct OrthonormalFrame {
    vectors: Vec<TensorState>,
}

impl OrthonormalFrame {
    pub fn new(vectors: Vec<TensorState>) -> Result<Self> {
        let d = vectors.first().map_or(0, |v| v.local_dim());
        if let Some(v) = vectors.iter().find(|v| v.n_factors() != 1 || v.local_dim() != d) {
            return Err(Error::DimensionMismatch(format!(
                "frame vector on (C^{})^{}",
                v.local_dim(),
                v.n_factors()
            )));
        }
        let mut defect: f64 = 0.0;
        for (i, a) in vectors.iter().enumerate() {
            for (j, b) in vectors.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                defect = defect.max((a.inner(b)? - want).norm());
            }
        }
        if defect > FRAME_TOLERANCE {
            return Err(Error::NotOrthonormal(defect));
        }
        Ok(Self { vectors })
    }

    /// `e_0, ..., e_{count-1}` in `C^d`.
    pub fn computational(d: usize, count: usize) -> Result<Self> {
        if count > d {
            return Err(Error::InsufficientFrame { have: d, need: count });
        }
        Self::new((0..count).map(|i| TensorState::basis(d, &[i])).collect::<Result<_>>()?)
    }

    /// The columns of a `d x d` unitary.
    pub fn from_unitary(u: &nalgebra::DMatrix<Complex64>) -> Result<Self> {
        Self::new(
            u.column_iter()
                .map(|c| TensorState::vector(c.iter().copied().collect()))
                .collect::<Result<_>>()?,
        )
    }

    pub fn local_dim(&self) -> usize {
        self.vectors.first().map_or(0, |v| v.local_dim())
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[TensorState] {
        &self.vectors
    }

    fn require(&self, need: usize) -> Result<()> {
        if self.len() < need {
            return Err(Error::InsufficientFrame { have: self.len(), need });
        }
        Ok(())
    }
}

/// `(1/sqrt(k!)) sum_σ sgn(σ) u_{i_σ(1)} ⊗ ... ⊗ u_{i_σ(k)}`.
pub fn slater(frame: &OrthonormalFrame, indices: &[usize]) -> Result<TensorState> {
    if indices.iter().duplicates().next().is_some() {
        return Err(Error::RepeatedIndices(indices.to_vec()));
    }
    if let Some(&bad) = indices.iter().find(|&&i| i >= frame.len()) {
        return Err(Error::InsufficientFrame {
            have: frame.len(),
            need: bad + 1,
        });
    }
    let k = indices.len();
    if k == 0 {
        return Err(Error::DimensionMismatch("empty Slater determinant".into()));
    }
    let mut out = TensorState::zeros(frame.local_dim(), k)?;
    let weight = 1.0 / (1..=k).map(|x| x as f64).product::<f64>().sqrt();
    for images in (0..k).permutations(k) {
        let sign = Permutation::from_images(&images.iter().map(|x| x + 1).collect::<Vec<_>>())?.sign();
        let term = TensorState::tensor_all(images.iter().map(|&p| &frame.vectors[indices[p]]))?;
        out.axpy(Complex64::new(sign as f64 * weight, 0.0), &term)?;
    }
    Ok(out)
}

fn first_slater(frame: &OrthonormalFrame, len: usize) -> Result<TensorState> {
    slater(frame, &(0..len).collect::<Vec<_>>())
}

/// `|u_1∧...∧u_{c_1}> ⊗ |u_1∧...∧u_{c_2}> ⊗ ...` for a column-ordered tableau.
pub fn coherent_state(t: &StandardTableau, frame: &OrthonormalFrame) -> Result<TensorState> {
    if !t.is_column_ordered() {
        return Err(Error::NotColumnOrdered);
    }
    frame.require(t.diagram().n_rows())?;
    let columns = t
        .diagram()
        .columns()
        .iter()
        .map(|&c| first_slater(frame, c))
        .collect::<Result<Vec<_>>>()?;
    TensorState::tensor_all(&columns)
}

/// The column-ordered tableau with `N` moved into the removable box `cell`,
/// on which the saturating state for that box lives.
pub fn optimizer_tableau(diagram: &YoungDiagram, cell: Cell) -> Result<StandardTableau> {
    StandardTableau::column_ordered_with_max_at(diagram, cell)
}

/// The state saturating the bound of the removable box `cell = (c_l, l)`:
/// Slaters for columns `1..l` on the first `k = c_1 + ... + c_{l-1}`
/// factors, tensored with the normalized `P_{t_B}` projection of the
/// remaining columns (column `l` shortened by one) followed by `u_{c_l}`.
pub fn optimizer_state(diagram: &YoungDiagram, cell: Cell, frame: &OrthonormalFrame) -> Result<TensorState> {
    if !diagram.contains(cell) {
        return Err(Error::BoxOutsideDiagram(cell));
    }
    if !diagram.is_removable(cell) {
        return Err(Error::NotRemovable(cell));
    }
    frame.require(diagram.n_rows())?;
    let t = optimizer_tableau(diagram, cell)?;
    let cols = diagram.columns();
    let l = cell.col;
    let k: usize = cols[..l - 1].iter().sum();

    let mut b_parts = Vec::new();
    if cell.row > 1 {
        b_parts.push(first_slater(frame, cell.row - 1)?);
    }
    for &c in &cols[l..] {
        b_parts.push(first_slater(frame, c)?);
    }
    b_parts.push(frame.vectors[cell.row - 1].clone());
    let b_input = TensorState::tensor_all(&b_parts)?;
    let t_b = if k == 0 {
        t
    } else {
        t.split(k)?
            .1
            .ok_or_else(|| Error::InvalidTableau(format!("{t} does not split after {k}")))?
    };
    let b = orthogonal_projector(&t_b, frame.local_dim())
        .apply(&b_input)?
        .normalized()?;
    if k == 0 {
        return Ok(b);
    }
    let a_parts = cols[..l - 1]
        .iter()
        .map(|&c| first_slater(frame, c))
        .collect::<Result<Vec<_>>>()?;
    TensorState::tensor_all(&a_parts)?.tensor(&b)
}

/// For `φ` on `k-1` factors and `u` in `C^d`, returns `‖P^A(φ⊗u)‖^2` and
/// whether `(1⊗<u|)φ` vanishes, the condition under which an antisymmetric
/// `φ` gives equality `‖φ‖^2 / k`.
pub fn coleman_equality_check(phi: &TensorState, u: &TensorState) -> Result<(f64, bool)> {
    let d = phi.local_dim();
    if u.n_factors() != 1 || u.local_dim() != d {
        return Err(Error::DimensionMismatch(format!(
            "vector on (C^{})^{} against C^{d}",
            u.local_dim(),
            u.n_factors()
        )));
    }
    let k = phi.n_factors() + 1;
    let positions: Vec<usize> = (1..=k).collect();
    let anti = OperatorExpr::symmetrizer(d, k, &positions, true)?;
    let norm_sq = anti.apply(&phi.tensor(u)?)?.norm_sqr();
    let contracted: f64 = phi
        .amplitudes()
        .chunks(d)
        .map(|chunk| {
            chunk
                .iter()
                .zip(u.amplitudes())
                .map(|(a, b)| b.conj() * a)
                .sum::<Complex64>()
                .norm_sqr()
        })
        .sum::<f64>()
        .sqrt();
    Ok((norm_sq, contracted < 1e-9))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{schmidt_decompose, verify_fixed_point, SubspaceProjector};
    use crate::tensor::{random_unitary, subspace_basis};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn slater_basics() {
        let frame = OrthonormalFrame::computational(3, 3).unwrap();
        assert_eq!(slater(&frame, &[1]).unwrap(), frame.vectors()[1]);
        let s = slater(&frame, &[0, 1, 2]).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-14);
        let anti = OperatorExpr::symmetrizer(3, 3, &[1, 2, 3], true).unwrap();
        assert!(anti.apply(&s).unwrap().distance(&s).unwrap() < 1e-12);
        assert_eq!(slater(&frame, &[0, 0]).unwrap_err(), Error::RepeatedIndices(vec![0, 0]));
        let two = OrthonormalFrame::computational(2, 2).unwrap();
        let singlet = slater(&two, &[0, 1]).unwrap();
        let h = 0.5f64.sqrt();
        assert!((singlet.amplitudes()[1].re - h).abs() < 1e-15);
        assert!((singlet.amplitudes()[2].re + h).abs() < 1e-15);
    }

    #[test]
    fn coherent_state_examples() {
        let frame = OrthonormalFrame::computational(3, 3).unwrap();
        let col = yd(&[1, 1, 1]).column_ordered_tableau();
        assert_eq!(
            coherent_state(&col, &frame).unwrap(),
            slater(&frame, &[0, 1, 2]).unwrap()
        );
        let one = OrthonormalFrame::computational(2, 1).unwrap();
        let row = yd(&[3]).column_ordered_tableau();
        assert_eq!(
            coherent_state(&row, &one).unwrap(),
            TensorState::basis(2, &[0, 0, 0]).unwrap()
        );

        let t = yd(&[2, 1]).column_ordered_tableau();
        let frame = OrthonormalFrame::computational(2, 2).unwrap();
        let psi = coherent_state(&t, &frame).unwrap();
        assert!(orthogonal_projector(&t, 2).apply(&psi).unwrap().distance(&psi).unwrap() < 1e-9);
        let not_col: StandardTableau = "[[1,2],[3]]".parse().unwrap();
        assert_eq!(coherent_state(&not_col, &frame).unwrap_err(), Error::NotColumnOrdered);
    }

    #[test]
    fn optimizer_examples() {
        let cases: [(&[usize], Cell, f64); 4] = [
            (&[1, 1, 1], Cell::new(3, 1), 1.0 / 3.0),
            (&[2, 2], Cell::new(2, 2), 0.5),
            (&[3, 2, 1], Cell::new(2, 2), 2.0 / 3.0),
            (&[3, 2, 1], Cell::new(3, 1), 8.0 / 15.0),
        ];
        for (rows, cell, want) in cases {
            let nu = yd(rows);
            let d = nu.n_rows();
            let frame = OrthonormalFrame::computational(d, d).unwrap();
            let psi = optimizer_state(&nu, cell, &frame).unwrap();
            let n = nu.n_boxes();
            let s = schmidt_decompose(&psi, n - 1).unwrap();
            assert!((s.lambda1_sq() - want).abs() < 1e-8, "{nu} {cell}");
            let t = optimizer_tableau(&nu, cell).unwrap();
            let p = orthogonal_projector(&t, d);
            assert!(p.apply(&psi).unwrap().distance(&psi).unwrap() < 1e-8, "{nu} {cell}");
            let basis = subspace_basis(&t, d).unwrap();
            assert!(verify_fixed_point(&psi, &basis, n - 1).unwrap() < 1e-7, "{nu} {cell}");
        }
        assert_eq!(
            optimizer_state(
                &yd(&[2, 2]),
                Cell::new(1, 2),
                &OrthonormalFrame::computational(2, 2).unwrap()
            )
            .unwrap_err(),
            Error::NotRemovable(Cell::new(1, 2))
        );
        assert!(matches!(
            optimizer_state(
                &yd(&[1, 1, 1]),
                Cell::new(3, 1),
                &OrthonormalFrame::computational(3, 2).unwrap()
            ),
            Err(Error::InsufficientFrame { .. })
        ));
    }

    #[test]
    fn fermionic_optimizer_is_plain_slater() {
        let frame = OrthonormalFrame::computational(4, 4).unwrap();
        let psi = optimizer_state(&yd(&[1, 1, 1, 1]), Cell::new(4, 1), &frame).unwrap();
        let s = slater(&frame, &[0, 1, 2, 3]).unwrap();
        assert!((psi.inner(&s).unwrap().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn frame_covariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let nu = yd(&[2, 2]);
        let u = random_unitary(2, &mut rng);
        let rotated = OrthonormalFrame::from_unitary(&u).unwrap();
        let psi = optimizer_state(&nu, Cell::new(2, 2), &rotated).unwrap();
        assert!((schmidt_decompose(&psi, 3).unwrap().lambda1_sq() - 0.5).abs() < 1e-9);
        let t = optimizer_tableau(&nu, Cell::new(2, 2)).unwrap();
        let proj = SubspaceProjector::new(&subspace_basis(&t, 2).unwrap()).unwrap();
        assert!(proj.distance(&psi).unwrap() < 1e-9);
    }

    #[test]
    fn coleman_examples() {
        let frame = OrthonormalFrame::computational(3, 3).unwrap();
        let u = frame.vectors();
        let phi = slater(&frame, &[0, 1]).unwrap();
        let (norm_sq, holds) = coleman_equality_check(&phi, &u[2]).unwrap();
        assert!((norm_sq - 1.0 / 3.0).abs() < 1e-12 && holds);
        let (norm_sq, holds) = coleman_equality_check(&phi, &u[0]).unwrap();
        assert!(norm_sq < 1.0 / 3.0 - 1e-3 && !holds);
        let (norm_sq, holds) = coleman_equality_check(&u[0], &u[1]).unwrap();
        assert!((norm_sq - 0.5).abs() < 1e-12 && holds);
    }
}
