//! Reduced density matrices, Schmidt decompositions, entanglement entropy
//! and the alternating ascent that maximizes the top Schmidt coefficient
//! over a subspace.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tensor::TensorState;
use crate::young::Rational;

/// Largest deviation of a Gram matrix from the identity accepted as orthonormal.
pub const ORTHONORMALITY_TOLERANCE: f64 = 1e-8;
/// Distance from a subspace above which a state counts as outside it.
pub const SPAN_TOLERANCE: f64 = 1e-6;

/// Schmidt decomposition across the cut between factors `1..=k` and `k+1..=N`.
#[derive(Clone, Debug)]
pub struct SchmidtResult {
    pub cut: usize,
    /// Descending, nonnegative.
    pub coefficients: Vec<f64>,
    pub left_vectors: Vec<TensorState>,
    pub right_vectors: Vec<TensorState>,
}

impl SchmidtResult {
    pub fn lambda1_sq(&self) -> f64 {
        self.coefficients.first().map_or(0.0, |l| l * l)
    }

    /// `sum_i λ_i left_i ⊗ right_i`.
    pub fn reconstruct(&self) -> Result<TensorState> {
        let mut iter = self
            .coefficients
            .iter()
            .zip(self.left_vectors.iter().zip(&self.right_vectors));
        let (l, (a, b)) = iter.next().ok_or(Error::EmptyBasis)?;
        let mut out = a.tensor(b)?.scaled(Complex64::new(*l, 0.0));
        for (l, (a, b)) in iter {
            out.axpy(Complex64::new(*l, 0.0), &a.tensor(b)?)?;
        }
        Ok(out)
    }
}

fn check_cut(psi: &TensorState, k: usize) -> Result<()> {
    if k == 0 || k >= psi.n_factors() {
        return Err(Error::IndexOutOfRange {
            what: "cut",
            index: k,
            max: psi.n_factors().saturating_sub(1),
        });
    }
    Ok(())
}

fn reshape(psi: &TensorState, k: usize) -> DMatrix<Complex64> {
    let cols = psi.local_dim().pow((psi.n_factors() - k) as u32);
    let rows = psi.len() / cols;
    DMatrix::from_row_slice(rows, cols, psi.amplitudes())
}

/// Singular value decomposition of the `d^k x d^{N-k}` amplitude matrix.
pub fn schmidt_decompose(psi: &TensorState, k: usize) -> Result<SchmidtResult> {
    check_cut(psi, k)?;
    let d = psi.local_dim();
    let n = psi.n_factors();
    let svd = reshape(psi, k).svd(true, true);
    let u = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested V^H");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let mut result = SchmidtResult {
        cut: k,
        coefficients: Vec::with_capacity(order.len()),
        left_vectors: Vec::with_capacity(order.len()),
        right_vectors: Vec::with_capacity(order.len()),
    };
    for i in order {
        result.coefficients.push(svd.singular_values[i]);
        result.left_vectors.push(TensorState::from_amplitudes(
            d,
            k,
            u.column(i).iter().copied().collect(),
        )?);
        result.right_vectors.push(TensorState::from_amplitudes(
            d,
            n - k,
            v_t.row(i).iter().copied().collect(),
        )?);
    }
    Ok(result)
}

/// Top Schmidt pair `(λ_1, left_1, right_1)`.
fn top_pair(psi: &TensorState, k: usize) -> Result<(f64, TensorState, TensorState)> {
    let s = schmidt_decompose(psi, k)?;
    let left = s.left_vectors.into_iter().next().ok_or(Error::EmptyBasis)?;
    let right = s.right_vectors.into_iter().next().ok_or(Error::EmptyBasis)?;
    Ok((s.coefficients[0], left, right))
}

/// `Tr_{complement of keep} |ψ><ψ|` on the kept factors, listed as 1-based
/// positions and ordered increasingly in the result.
pub fn reduced_density_matrix(psi: &TensorState, keep: &[usize]) -> Result<DMatrix<Complex64>> {
    let n = psi.n_factors();
    let d = psi.local_dim();
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.is_empty() || kept.len() >= n || kept.iter().any(|&p| p == 0 || p > n) {
        return Err(Error::InvalidKeepSet(format!("{keep:?} of {n} factors")));
    }
    let rows = d.pow(kept.len() as u32);
    let cols = d.pow((n - kept.len()) as u32);
    let mut m = DMatrix::<Complex64>::zeros(rows, cols);
    let mut is_kept = vec![false; n];
    kept.iter().for_each(|&p| is_kept[p - 1] = true);
    for (idx, &amp) in psi.amplitudes().iter().enumerate() {
        let digits = psi.digits(idx);
        let (mut r, mut c) = (0, 0);
        for (p, &digit) in digits.iter().enumerate() {
            if is_kept[p] {
                r = r * d + digit;
            } else {
                c = c * d + digit;
            }
        }
        m[(r, c)] = amp;
    }
    Ok(&m * m.adjoint())
}

/// `-sum λ_i^2 ln λ_i^2` across the cut after factor `k`.
pub fn entanglement_entropy(psi: &TensorState, k: usize) -> Result<f64> {
    check_cut(psi, k)?;
    let svd = reshape(psi, k).svd(false, false);
    Ok(svd
        .singular_values
        .iter()
        .map(|l| l * l)
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.ln())
        .sum())
}

/// Orthogonal projector `sum_i |b_i><b_i|` onto the span of an orthonormal list.
#[derive(Clone, Debug)]
pub struct SubspaceProjector {
    local_dim: usize,
    n_factors: usize,
    /// Columns are the basis vectors.
    matrix: DMatrix<Complex64>,
}

impl SubspaceProjector {
    pub fn new(basis: &[TensorState]) -> Result<Self> {
        let first = basis.first().ok_or(Error::EmptyBasis)?;
        let (d, n) = (first.local_dim(), first.n_factors());
        if let Some(b) = basis.iter().find(|b| b.local_dim() != d || b.n_factors() != n) {
            return Err(Error::DimensionMismatch(format!(
                "basis mixes (C^{d})^{n} with (C^{})^{}",
                b.local_dim(),
                b.n_factors()
            )));
        }
        let matrix = DMatrix::from_fn(first.len(), basis.len(), |i, j| basis[j].amplitudes()[i]);
        let defect = (matrix.adjoint() * &matrix - DMatrix::identity(basis.len(), basis.len()))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if defect > ORTHONORMALITY_TOLERANCE {
            return Err(Error::NotOrthonormal(defect));
        }
        Ok(Self {
            local_dim: d,
            n_factors: n,
            matrix,
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn n_factors(&self) -> usize {
        self.n_factors
    }

    pub fn apply(&self, x: &TensorState) -> Result<TensorState> {
        if x.local_dim() != self.local_dim || x.n_factors() != self.n_factors {
            return Err(Error::DimensionMismatch(format!(
                "projector on (C^{})^{} applied to (C^{})^{}",
                self.local_dim,
                self.n_factors,
                x.local_dim(),
                x.n_factors()
            )));
        }
        let v = nalgebra::DVector::from_column_slice(x.amplitudes());
        let coeffs = self.matrix.adjoint() * v;
        let out = &self.matrix * coeffs;
        TensorState::from_amplitudes(self.local_dim, self.n_factors, out.iter().copied().collect())
    }

    /// `‖x - P x‖`.
    pub fn distance(&self, x: &TensorState) -> Result<f64> {
        self.apply(x)?.distance(x)
    }
}

#[derive(Clone, Debug)]
pub struct MaximizeConfig {
    pub restarts: usize,
    pub max_iterations: usize,
    /// Stop once the objective increases by less than this.
    pub tolerance: f64,
    pub seed: u64,
    /// Extra restarts seeded from the top Schmidt pair of these states.
    pub warm_starts: Vec<TensorState>,
    pub record_trace: bool,
}

impl Default for MaximizeConfig {
    fn default() -> Self {
        Self {
            restarts: 32,
            max_iterations: 500,
            tolerance: 1e-10,
            seed: 0,
            warm_starts: Vec::new(),
            record_trace: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RestartSummary {
    pub warm: bool,
    pub iterations: usize,
    pub converged: bool,
    pub lambda1_sq: f64,
    /// Largest drop of the objective between consecutive iterations (0 when monotone).
    pub max_decrease: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<f64>>,
}

#[derive(Clone, Debug)]
pub struct MaximizationReport {
    pub cut: usize,
    pub best_lambda1_sq: f64,
    pub best_restart: usize,
    pub restarts: Vec<RestartSummary>,
    pub maximizer: TensorState,
    pub analytic_bound: Option<Rational>,
}

impl MaximizationReport {
    pub fn with_bound(mut self, bound: Rational) -> Self {
        self.analytic_bound = Some(bound);
        self
    }

    /// Largest objective drop over all restarts.
    pub fn max_decrease(&self) -> f64 {
        self.restarts.iter().map(|r| r.max_decrease).fold(0.0, f64::max)
    }

    pub fn to_json(&self, include_state: bool) -> serde_json::Value {
        let mut v = serde_json::json!({
            "cut": self.cut,
            "best_lambda1_sq": self.best_lambda1_sq,
            "best_restart": self.best_restart,
            "restarts": self.restarts,
            "analytic_bound": self.analytic_bound.as_ref().map(|b| b.to_string()),
        });
        if include_state {
            v["maximizer"] = self.maximizer.to_json();
        }
        v
    }
}

struct RestartOutcome {
    summary: RestartSummary,
    state: TensorState,
}

fn objective(projector: &SubspaceProjector, a: &TensorState, b: &TensorState) -> Result<(f64, TensorState)> {
    let phi = projector.apply(&a.tensor(b)?)?;
    Ok((phi.norm_sqr(), phi))
}

fn ascend(
    projector: &SubspaceProjector,
    k: usize,
    config: &MaximizeConfig,
    mut a: TensorState,
    mut b: TensorState,
    warm: bool,
) -> Result<RestartOutcome> {
    let mut trace = Vec::new();
    let mut prev = f64::NEG_INFINITY;
    let mut max_decrease: f64 = 0.0;
    let mut converged = false;
    let mut psi = None;
    let mut iterations = 0;
    while iterations < config.max_iterations {
        iterations += 1;
        let (f, phi) = objective(projector, &a, &b)?;
        if f <= f64::MIN_POSITIVE {
            break;
        }
        if config.record_trace {
            trace.push(f);
        }
        max_decrease = max_decrease.max(prev - f);
        let state = phi.normalized()?;
        let (_, left, right) = top_pair(&state, k)?;
        (a, b) = (left, right);
        psi = Some(state);
        if f - prev < config.tolerance {
            converged = true;
            break;
        }
        prev = f;
    }
    let state = psi.ok_or_else(|| Error::Degenerate("initial product state is orthogonal to the subspace".into()))?;
    let lambda1_sq = schmidt_decompose(&state, k)?.lambda1_sq();
    Ok(RestartOutcome {
        summary: RestartSummary {
            warm,
            iterations,
            converged,
            lambda1_sq,
            max_decrease,
            trace: config.record_trace.then_some(trace),
        },
        state,
    })
}

/// Maximize `λ_1^2` across the cut after factor `k` over unit vectors in
/// the span of an orthonormal basis, by alternating between
/// `ψ = P_U(α⊗β)/‖·‖` and the top Schmidt pair `(α, β)` of `ψ`.
///
/// Random restarts are independent and run in parallel; restart `i` draws
/// from a ChaCha stream `i` keyed by the seed, so results are reproducible.
pub fn max_lambda1_over_subspace(
    basis: &[TensorState],
    k: usize,
    config: &MaximizeConfig,
) -> Result<MaximizationReport> {
    let projector = SubspaceProjector::new(basis)?;
    let (d, n) = (projector.local_dim(), projector.n_factors());
    check_cut(&basis[0], k)?;
    let random = (0..config.restarts).into_par_iter().map(|i| {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(i as u64);
        let a = TensorState::random(d, k, &mut rng)?;
        let b = TensorState::random(d, n - k, &mut rng)?;
        ascend(&projector, k, config, a, b, false)
    });
    let warm = config.warm_starts.par_iter().map(|s| {
        let (_, a, b) = top_pair(s, k)?;
        ascend(&projector, k, config, a, b, true)
    });
    let outcomes: Vec<RestartOutcome> = random.chain(warm).collect::<Result<_>>()?;
    let (best_restart, best) = outcomes
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.summary.lambda1_sq.total_cmp(&y.1.summary.lambda1_sq))
        .ok_or_else(|| Error::Degenerate("no restarts requested".into()))?;
    Ok(MaximizationReport {
        cut: k,
        best_lambda1_sq: best.summary.lambda1_sq,
        best_restart,
        maximizer: best.state.clone(),
        restarts: outcomes.iter().map(|o| o.summary.clone()).collect(),
        analytic_bound: None,
    })
}

/// `‖ψ - P_U(ψ_A⊗ψ_B)/‖P_U(ψ_A⊗ψ_B)‖‖` for the top Schmidt pair of `ψ`;
/// zero exactly at fixed points of the ascent.
pub fn verify_fixed_point(psi: &TensorState, basis: &[TensorState], k: usize) -> Result<f64> {
    let projector = SubspaceProjector::new(basis)?;
    let outside = projector.distance(psi)?;
    if outside > SPAN_TOLERANCE {
        return Err(Error::OutsideSpan(outside));
    }
    let (_, a, b) = top_pair(psi, k)?;
    let (f, phi) = objective(&projector, &a, &b)?;
    if f <= f64::MIN_POSITIVE {
        return Err(Error::Degenerate(
            "top Schmidt pair is orthogonal to the subspace".into(),
        ));
    }
    psi.distance(&phi.normalized()?)
}
