//! Row symmetrizers, column antisymmetrizers, Young projections, the
//! recursive orthogonal projectors `P_t` and orthonormal bases of their
//! images.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::operator::{Node, OperatorExpr};
use super::state::{state_len, TensorState};
use crate::error::{Error, Result};
use crate::orthogonal_form::character;
use crate::permutation::Permutation;
use crate::young::{factorial, Rational, StandardTableau, YoungDiagram};

/// Gram-Schmidt residual below which a projected vector counts as dependent.
pub const RANK_TOLERANCE: f64 = 1e-8;

fn symmetrizer_node(entries: &[usize], antisymmetric: bool) -> Arc<Node> {
    Arc::new(Node::Symmetrizer {
        slots: entries.iter().map(|e| e - 1).collect(),
        antisymmetric,
    })
}

fn rows_node(t: &StandardTableau) -> Arc<Node> {
    Arc::new(Node::Product(
        t.rows()
            .iter()
            .filter(|r| r.len() > 1)
            .map(|r| symmetrizer_node(r, false))
            .collect(),
    ))
}

fn columns_node(t: &StandardTableau) -> Arc<Node> {
    let cols = (1..=t.diagram().n_cols())
        .map(|j| t.column_entries(j).expect("column in range"))
        .filter(|c| c.len() > 1)
        .map(|c| symmetrizer_node(&c, true))
        .collect();
    Arc::new(Node::Product(cols))
}

fn scaled(factor: Rational, inner: Arc<Node>) -> Arc<Node> {
    let value = crate::young::rational_to_f64(&factor);
    Arc::new(Node::Scaled { factor, value, inner })
}

/// `P^S` over the entries of row `i` (1-based) of `t`.
pub fn row_symmetrizer(t: &StandardTableau, i: usize, d: usize) -> Result<OperatorExpr> {
    OperatorExpr::symmetrizer(d, t.n_boxes(), t.row_entries(i)?, false)
}

/// `P^A` over the entries of column `j` (1-based) of `t`.
pub fn column_antisymmetrizer(t: &StandardTableau, j: usize, d: usize) -> Result<OperatorExpr> {
    OperatorExpr::symmetrizer(d, t.n_boxes(), &t.column_entries(j)?, true)
}

/// `S_t`, the product of all row symmetrizers.
pub fn row_projector(t: &StandardTableau, d: usize) -> OperatorExpr {
    OperatorExpr::from_node(d, t.n_boxes(), rows_node(t))
}

/// `A_t`, the product of all column antisymmetrizers.
pub fn column_projector(t: &StandardTableau, d: usize) -> OperatorExpr {
    OperatorExpr::from_node(d, t.n_boxes(), columns_node(t))
}

fn young_node(t: &StandardTableau) -> Arc<Node> {
    let kappa = t.diagram().young_normalization();
    scaled(kappa, Arc::new(Node::Product(vec![rows_node(t), columns_node(t)])))
}

/// `Y_t = κ S_t A_t`. Idempotent but in general not hermitian.
pub fn young_projection(t: &StandardTableau, d: usize) -> OperatorExpr {
    OperatorExpr::from_node(d, t.n_boxes(), young_node(t))
}

fn projector_cache() -> &'static RwLock<HashMap<StandardTableau, Arc<Node>>> {
    static CACHE: OnceLock<RwLock<HashMap<StandardTableau, Arc<Node>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn orthogonal_node(t: &StandardTableau) -> Arc<Node> {
    if let Some(node) = projector_cache().read().expect("projector cache").get(t) {
        return node.clone();
    }
    let node = if t.n_boxes() <= 2 {
        young_node(t)
    } else {
        let down = orthogonal_node(&t.remove_largest());
        Arc::new(Node::Product(vec![down.clone(), young_node(t), down]))
    };
    projector_cache()
        .write()
        .expect("projector cache")
        .entry(t.clone())
        .or_insert(node)
        .clone()
}

/// The hermitian projector `P_t`: `Y_t` for `N <= 2`, otherwise
/// `(P_{t↓} ⊗ 1) Y_t (P_{t↓} ⊗ 1)`.
pub fn orthogonal_projector(t: &StandardTableau, d: usize) -> OperatorExpr {
    OperatorExpr::from_node(d, t.n_boxes(), orthogonal_node(t))
}

/// `κ S_t A_t S_t` for row-ordered and `κ A_t S_t A_t` for column-ordered
/// tableaux.
pub fn closed_form_projector(t: &StandardTableau, d: usize) -> Result<OperatorExpr> {
    let kappa = t.diagram().young_normalization();
    let (s, a) = (rows_node(t), columns_node(t));
    let product = if t.is_row_ordered() {
        vec![s.clone(), a, s]
    } else if t.is_column_ordered() {
        vec![a.clone(), s, a]
    } else {
        return Err(Error::ClosedFormUnavailable);
    };
    Ok(OperatorExpr::from_node(
        d,
        t.n_boxes(),
        scaled(kappa, Arc::new(Node::Product(product))),
    ))
}

fn digit_counts(mut index: usize, d: usize, n: usize) -> Vec<usize> {
    let mut counts = vec![0; d];
    for _ in 0..n {
        counts[index % d] += 1;
        index /= d;
    }
    counts
}

/// Append `v` to an orthonormal list unless its residual after two rounds
/// of modified Gram-Schmidt falls below `RANK_TOLERANCE`.
fn push_orthonormal(basis: &mut Vec<TensorState>, mut v: TensorState) -> Result<bool> {
    for _ in 0..2 {
        for b in basis.iter() {
            let overlap = b.inner(&v)?;
            v.axpy(-overlap, b)?;
        }
    }
    if v.norm() < RANK_TOLERANCE {
        return Ok(false);
    }
    basis.push(v.normalized()?);
    Ok(true)
}

/// Orthonormalize a list of states, dropping those whose residual falls
/// below `RANK_TOLERANCE`; the length of the result is the numerical rank.
pub fn orthonormalize(vectors: impl IntoIterator<Item = TensorState>) -> Result<Vec<TensorState>> {
    let mut basis = Vec::new();
    for v in vectors {
        push_orthonormal(&mut basis, v)?;
    }
    Ok(basis)
}

/// Digit fillings of the shape, rows weakly and columns strictly
/// increasing, listed in row-reading order.
fn semistandard_fillings(diagram: &YoungDiagram, d: usize) -> Vec<Vec<Vec<usize>>> {
    fn fill(d: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some(&(i, j)) = cells.first() else {
            out.push(grid.clone());
            return;
        };
        let low = match (j.checked_sub(1), i.checked_sub(1)) {
            (Some(left), Some(up)) => grid[i][left].max(grid[up][j] + 1),
            (Some(left), None) => grid[i][left],
            (None, Some(up)) => grid[up][j] + 1,
            (None, None) => 0,
        };
        for digit in low..d {
            grid[i].push(digit);
            fill(d, &cells[1..], grid, out);
            grid[i].pop();
        }
    }
    let cells: Vec<(usize, usize)> = diagram
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    fill(d, &cells, &mut vec![Vec::new(); diagram.n_rows()], &mut out);
    out
}

/// Flat index of the basis vector carrying digit `T(i,j)` on the factor
/// that `t` places at box `(i,j)`.
fn placed_index(t: &StandardTableau, filling: &[Vec<usize>], d: usize) -> usize {
    let mut digits = vec![0; t.n_boxes()];
    for (row, fill) in t.rows().iter().zip(filling) {
        for (&entry, &digit) in row.iter().zip(fill) {
            digits[entry - 1] = digit;
        }
    }
    digits.iter().fold(0, |acc, &digit| acc * d + digit)
}

/// Orthonormal basis of `Im(P_t)` with `dim V^ν(d)` elements, obtained by
/// projecting computational basis vectors.
///
/// Vectors carrying a semistandard filling along `t` are tried first;
/// the remaining vectors follow in flat-index order, skipping weights not
/// dominated by the shape since they project to zero.
pub fn subspace_basis(t: &StandardTableau, d: usize) -> Result<Vec<TensorState>> {
    let n = t.n_boxes();
    let len = state_len(d, n)?;
    let target = t.diagram().dim_unitary_irrep(d).to_usize().unwrap_or(usize::MAX);
    let p = orthogonal_projector(t, d);
    let preferred: Vec<usize> = semistandard_fillings(t.diagram(), d)
        .iter()
        .map(|filling| placed_index(t, filling, d))
        .collect();
    let tried: HashSet<usize> = preferred.iter().copied().collect();
    let rest =
        (0..len).filter(|index| !tried.contains(index) && t.diagram().dominates_weight(&digit_counts(*index, d, n)));
    let mut basis = Vec::with_capacity(target);
    for index in preferred.iter().copied().chain(rest) {
        if basis.len() >= target {
            break;
        }
        let mut e = TensorState::zeros(d, n)?;
        e.amplitudes_mut()[index] = Complex64::new(1.0, 0.0);
        push_orthonormal(&mut basis, p.apply(&e)?)?;
    }
    Ok(basis)
}

/// Numerical rank of `P_t` from the images of all computational basis
/// vectors, without weight filtering or early stopping.
pub fn projected_rank(t: &StandardTableau, d: usize) -> Result<usize> {
    let n = t.n_boxes();
    let p = orthogonal_projector(t, d);
    let mut basis = Vec::new();
    for index in 0..state_len(d, n)? {
        let mut e = TensorState::zeros(d, n)?;
        e.amplitudes_mut()[index] = Complex64::new(1.0, 0.0);
        push_orthonormal(&mut basis, p.apply(&e)?)?;
    }
    Ok(basis.len())
}

/// Orthonormal basis of the isotypic sector `V^ν ⊗ S^ν`: the union of
/// `subspace_basis` over all standard tableaux of the shape.
pub fn sector_basis(diagram: &YoungDiagram, d: usize) -> Result<Vec<TensorState>> {
    let mut out = Vec::new();
    for t in diagram.standard_tableaux() {
        out.extend(subspace_basis(&t, d)?);
    }
    Ok(out)
}

/// States `x_t`, one per standard tableau in canonical order, spanning a
/// copy of `S^ν` inside the sector and aligned with Young's orthogonal
/// basis: `x_{t0} ∝ P_{t0} v` for the row-ordered `t0`, and each neighbour
/// `t~ = (k k+1) t` is reached through
/// `x_{t~} = (U_k x_t - x_t / r) / sqrt(1 - 1/r^2)`.
pub fn young_basis_states(diagram: &YoungDiagram, v: &TensorState) -> Result<Vec<TensorState>> {
    let n = diagram.n_boxes();
    if v.n_factors() != n {
        return Err(Error::DimensionMismatch(format!(
            "seed on {} factors for a shape with {n} boxes",
            v.n_factors()
        )));
    }
    let d = v.local_dim();
    let tableaux = diagram.standard_tableaux();
    let index: HashMap<&StandardTableau, usize> = tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let t0 = diagram.row_ordered_tableau();
    let head = orthogonal_projector(&t0, d).apply(v)?;
    if head.norm() < RANK_TOLERANCE {
        return Err(Error::Degenerate(
            "seed has no component in the row-ordered sector".into(),
        ));
    }
    let mut states: Vec<Option<TensorState>> = vec![None; tableaux.len()];
    states[index[&t0]] = Some(head.normalized()?);
    let mut queue = VecDeque::from([t0]);
    let mut seen: HashSet<StandardTableau> = HashSet::new();
    while let Some(t) = queue.pop_front() {
        if !seen.insert(t.clone()) {
            continue;
        }
        let x = states[index[&t]].clone().expect("queued states are built");
        for k in 1..n {
            let Some(next) = t.swap_adjacent(k) else {
                continue;
            };
            let slot = index[&next];
            if states[slot].is_some() {
                continue;
            }
            let r = t.axial_distance(k)? as f64;
            let mut y = super::state::swap_factors(&x, k, k + 1)?;
            y.axpy(Complex64::new(-1.0 / r, 0.0), &x)?;
            y.scale(Complex64::new(1.0 / (1.0 - 1.0 / (r * r)).sqrt(), 0.0));
            states[slot] = Some(y);
            queue.push_back(next);
        }
    }
    Ok(states
        .into_iter()
        .map(|s| s.expect("tableau graph is connected"))
        .collect())
}

/// Central projector onto the isotypic sector,
/// `(dim S^ν / N!) sum_σ χ^ν(σ) U_σ`, with characters taken from the
/// orthogonal form. Built independently of the `P_t` recursion.
pub fn isotypic_projector(diagram: &YoungDiagram, d: usize) -> Result<OperatorExpr> {
    let n = diagram.n_boxes();
    let dim = diagram.dim_symmetric_irrep().to_f64().unwrap_or(f64::NAN);
    let weight = dim / factorial(n).to_f64().unwrap_or(f64::NAN);
    let mut by_class: HashMap<Vec<usize>, f64> = HashMap::new();
    let mut terms = Vec::new();
    for images in (0..n).permutations(n) {
        let sigma = Permutation::from_zero_based(images);
        let chi = match by_class.get(&sigma.cycle_type()) {
            Some(&c) => c,
            None => {
                let c = character(diagram, &sigma)?;
                by_class.insert(sigma.cycle_type(), c);
                c
            }
        };
        if chi.abs() > 1e-12 {
            terms.push((sigma, weight * chi));
        }
    }
    OperatorExpr::permutation_sum(d, n, terms)
}
