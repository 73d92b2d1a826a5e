//! Young's orthogonal form: explicit real orthogonal matrices for the
//! irreducible representation `S^ν` of the symmetric group, in the basis
//! of standard tableaux.
//!
//! The adjacent transposition `(k k+1)` acts on a basis tableau `t` with
//! axial distance `r` as `+1` (same row), `-1` (same column), or
//! `t -> (1/r) t + sqrt(1 - 1/r^2) t~` where `t~` swaps `k` and `k + 1`.
//! Columns of a matrix are images of basis vectors.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::young::{StandardTableau, YoungDiagram};

/// Canonically ordered standard tableaux of one diagram with a reverse lookup.
#[derive(Debug)]
pub struct TableauBasis {
    diagram: YoungDiagram,
    tableaux: Vec<StandardTableau>,
    index: HashMap<StandardTableau, usize>,
}

impl TableauBasis {
    pub fn new(diagram: &YoungDiagram) -> Self {
        let tableaux = diagram.standard_tableaux();
        let index = tableaux.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Self {
            diagram: diagram.clone(),
            tableaux,
            index,
        }
    }

    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.index.get(t).copied()
    }
}

/// A representation matrix on `S^ν`.
#[derive(Clone, Debug)]
pub struct IrrepMatrix {
    pub basis: Arc<TableauBasis>,
    pub matrix: DMatrix<f64>,
}

impl IrrepMatrix {
    pub fn diagram(&self) -> &YoungDiagram {
        self.basis.diagram()
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace()
    }

    /// `max |M^T M - 1|`.
    pub fn orthogonality_defect(&self) -> f64 {
        let n = self.dim();
        (self.matrix.transpose() * &self.matrix - DMatrix::<f64>::identity(n, n))
            .abs()
            .max()
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.matrix.row_iter().map(|r| r.iter().copied().collect()).collect()
    }
}

type GeneratorKey = (YoungDiagram, usize);

fn basis_cache() -> &'static RwLock<HashMap<YoungDiagram, Arc<TableauBasis>>> {
    static CACHE: OnceLock<RwLock<HashMap<YoungDiagram, Arc<TableauBasis>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn generator_cache() -> &'static RwLock<HashMap<GeneratorKey, Arc<IrrepMatrix>>> {
    static CACHE: OnceLock<RwLock<HashMap<GeneratorKey, Arc<IrrepMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared canonical tableau basis for a diagram.
pub fn tableau_basis(diagram: &YoungDiagram) -> Arc<TableauBasis> {
    if let Some(b) = basis_cache().read().expect("basis cache").get(diagram) {
        return b.clone();
    }
    let built = Arc::new(TableauBasis::new(diagram));
    basis_cache()
        .write()
        .expect("basis cache")
        .entry(diagram.clone())
        .or_insert(built)
        .clone()
}

/// Matrix of `(k k+1)`, `1 <= k <= N - 1`. Cached per `(diagram, k)`.
pub fn adjacent_transposition_matrix(diagram: &YoungDiagram, k: usize) -> Result<Arc<IrrepMatrix>> {
    let n = diagram.n_boxes();
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange {
            what: "transposition",
            index: k,
            max: n.saturating_sub(1),
        });
    }
    let key = (diagram.clone(), k);
    if let Some(m) = generator_cache().read().expect("generator cache").get(&key) {
        return Ok(m.clone());
    }
    let basis = tableau_basis(diagram);
    let dim = basis.len();
    let mut matrix = DMatrix::<f64>::zeros(dim, dim);
    for (col, t) in basis.tableaux().iter().enumerate() {
        let r = t.axial_distance(k)?;
        match r {
            1 => matrix[(col, col)] = 1.0,
            -1 => matrix[(col, col)] = -1.0,
            _ => {
                let r = r as f64;
                matrix[(col, col)] = 1.0 / r;
                let swapped = t.swap_adjacent(k).expect("|r| >= 2 keeps the swap standard");
                let row = basis.index_of(&swapped).expect("swapped tableau in basis");
                matrix[(row, col)] = (1.0 - 1.0 / (r * r)).sqrt();
            }
        }
    }
    let built = Arc::new(IrrepMatrix { basis, matrix });
    Ok(generator_cache()
        .write()
        .expect("generator cache")
        .entry(key)
        .or_insert(built)
        .clone())
}

/// Matrix of an arbitrary permutation, via its bubble-sort factorization
/// into adjacent transpositions.
pub fn permutation_matrix(diagram: &YoungDiagram, sigma: &Permutation) -> Result<IrrepMatrix> {
    if sigma.degree() != diagram.n_boxes() {
        return Err(Error::DimensionMismatch(format!(
            "permutation of degree {} on a diagram of {} boxes",
            sigma.degree(),
            diagram.n_boxes()
        )));
    }
    product_of_generators(diagram, &sigma.adjacent_factorization())
}

/// `M_{k_1} M_{k_2} ... M_{k_m}` for a word of adjacent transpositions.
pub fn product_of_generators(diagram: &YoungDiagram, word: &[usize]) -> Result<IrrepMatrix> {
    let basis = tableau_basis(diagram);
    let mut matrix = DMatrix::<f64>::identity(basis.len(), basis.len());
    for &k in word {
        matrix *= &adjacent_transposition_matrix(diagram, k)?.matrix;
    }
    Ok(IrrepMatrix { basis, matrix })
}

/// Character value `tr M(sigma)`.
pub fn character(diagram: &YoungDiagram, sigma: &Permutation) -> Result<f64> {
    Ok(permutation_matrix(diagram, sigma)?.trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young::partitions;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const TOL: f64 = 1e-12;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn max_abs_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
        (a - b).abs().max()
    }

    #[test]
    fn two_one_generator_matches_worked_values() {
        let m = adjacent_transposition_matrix(&yd(&[2, 1]), 2).unwrap();
        let h = 0.75f64.sqrt();
        let expected = DMatrix::from_row_slice(2, 2, &[-0.5, h, h, 0.5]);
        assert!(max_abs_diff(&m.matrix, &expected) < TOL);
        assert_eq!(m.basis.tableaux()[0].to_string(), "[[1,2],[3]]");
    }

    #[test]
    fn one_dimensional_cases() {
        for k in 1..4 {
            let m = adjacent_transposition_matrix(&yd(&[4]), k).unwrap();
            assert_eq!(m.matrix, DMatrix::from_element(1, 1, 1.0));
        }
        let m = adjacent_transposition_matrix(&yd(&[1, 1, 1]), 1).unwrap();
        assert_eq!(m.matrix, DMatrix::from_element(1, 1, -1.0));
        assert!(adjacent_transposition_matrix(&yd(&[2, 1]), 3).is_err());
        assert!(adjacent_transposition_matrix(&yd(&[2, 1]), 0).is_err());
    }

    #[test]
    fn generators_are_orthogonal_involutions() {
        for n in 2..=6 {
            for nu in partitions(n) {
                for k in 1..n {
                    let m = adjacent_transposition_matrix(&nu, k).unwrap();
                    assert!(m.orthogonality_defect() < TOL, "{nu} k={k}");
                    let sq = &m.matrix * &m.matrix;
                    assert!(max_abs_diff(&sq, &DMatrix::identity(m.dim(), m.dim())) < TOL);
                }
            }
        }
    }

    #[test]
    fn braid_and_commutation_relations() {
        for n in 3..=5 {
            for nu in partitions(n) {
                let gens: Vec<_> = (1..n)
                    .map(|k| adjacent_transposition_matrix(&nu, k).unwrap().matrix.clone())
                    .collect();
                for k in 0..n - 1 {
                    if k + 1 < n - 1 {
                        let (a, b) = (&gens[k], &gens[k + 1]);
                        assert!(max_abs_diff(&(a * b * a), &(b * a * b)) < TOL, "{nu} braid {k}");
                    }
                    for l in k + 2..n - 1 {
                        let (a, b) = (&gens[k], &gens[l]);
                        assert!(max_abs_diff(&(a * b), &(b * a)) < TOL, "{nu} commute {k} {l}");
                    }
                }
            }
        }
    }

    #[test]
    fn factorization_independence_for_outer_transposition() {
        let nu = yd(&[2, 1]);
        let s13 = Permutation::transposition(3, 1, 3).unwrap();
        let via_bubble = permutation_matrix(&nu, &s13).unwrap();
        let a = product_of_generators(&nu, &[2, 1, 2]).unwrap();
        let b = product_of_generators(&nu, &[1, 2, 1]).unwrap();
        assert!(max_abs_diff(&a.matrix, &b.matrix) < TOL);
        assert!(max_abs_diff(&via_bubble.matrix, &a.matrix) < TOL);
        let s12 = Permutation::transposition(3, 1, 2).unwrap();
        let m12 = permutation_matrix(&nu, &s12).unwrap();
        let g1 = adjacent_transposition_matrix(&nu, 1).unwrap();
        assert!(max_abs_diff(&m12.matrix, &g1.matrix) < TOL);
        let id = permutation_matrix(&nu, &Permutation::identity(3)).unwrap();
        assert_eq!(id.matrix, DMatrix::identity(2, 2));
    }

    #[test]
    fn homomorphism_on_random_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for nu in partitions(6) {
            for _ in 0..10 {
                let s = Permutation::random(6, &mut rng);
                let t = Permutation::random(6, &mut rng);
                let lhs = permutation_matrix(&nu, &s.compose(&t)).unwrap();
                let rhs = &permutation_matrix(&nu, &s).unwrap().matrix * &permutation_matrix(&nu, &t).unwrap().matrix;
                assert!(max_abs_diff(&lhs.matrix, &rhs) < 1e-10, "{nu}");
                assert!(lhs.orthogonality_defect() < 1e-10);
            }
        }
    }

    #[test]
    fn characters_are_class_functions() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for nu in partitions(5) {
            for _ in 0..20 {
                let s = Permutation::random(5, &mut rng);
                let g = Permutation::random(5, &mut rng);
                let conj = g.compose(&s).compose(&g.inverse());
                let a = character(&nu, &s).unwrap();
                let b = character(&nu, &conj).unwrap();
                assert!((a - b).abs() < 1e-10, "{nu}");
            }
        }
        // chi^{(2,1)} on a transposition is 0, on a 3-cycle is -1
        let nu = yd(&[2, 1]);
        let c3 = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert!(
            character(&nu, &Permutation::transposition(3, 1, 3).unwrap())
                .unwrap()
                .abs()
                < TOL
        );
        assert!((character(&nu, &c3).unwrap() + 1.0).abs() < TOL);
    }
}
