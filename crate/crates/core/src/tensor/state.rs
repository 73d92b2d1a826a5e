use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Default cap on `d^N`.
pub const DEFAULT_AMPLITUDE_CAP: usize = 1 << 20;

/// Environment variable that overrides [`DEFAULT_AMPLITUDE_CAP`].
pub const CAP_ENV: &str = "SCHURWEYL_CAP";

pub fn amplitude_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_AMPLITUDE_CAP)
}

/// `d^n`, or an error when it exceeds the cap.
pub fn state_len(d: usize, n: usize) -> Result<usize> {
    let cap = amplitude_cap();
    let len = u32::try_from(n)
        .ok()
        .and_then(|n| d.checked_pow(n))
        .filter(|&len| len <= cap);
    len.ok_or(Error::CapExceeded { d, n, cap })
}

/// Dense vector in `(C^d)^{⊗N}`.
///
/// The basis tuple `(i_1, ..., i_N)` sits at flat index
/// `sum_k i_k d^{N-k}`: factor 1 is the most significant digit.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorState {
    local_dim: usize,
    n_factors: usize,
    amplitudes: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct StateJson {
    d: usize,
    n: usize,
    amplitudes: Vec<[f64; 2]>,
}

impl TensorState {
    pub fn zeros(d: usize, n: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::DimensionMismatch("local dimension must be at least 1".into()));
        }
        let len = state_len(d, n)?;
        Ok(Self {
            local_dim: d,
            n_factors: n,
            amplitudes: vec![Complex64::new(0.0, 0.0); len],
        })
    }

    pub fn from_amplitudes(d: usize, n: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = state_len(d, n)?;
        if d == 0 || amplitudes.len() != len {
            return Err(Error::DimensionMismatch(format!(
                "{} amplitudes for d = {d}, N = {n}",
                amplitudes.len()
            )));
        }
        Ok(Self {
            local_dim: d,
            n_factors: n,
            amplitudes,
        })
    }

    /// A single-factor vector in `C^d`.
    pub fn vector(components: Vec<Complex64>) -> Result<Self> {
        let d = components.len();
        Self::from_amplitudes(d, 1, components)
    }

    /// Computational basis state `e_{i_1} ⊗ ... ⊗ e_{i_N}` (0-based labels).
    pub fn basis(d: usize, digits: &[usize]) -> Result<Self> {
        let mut s = Self::zeros(d, digits.len())?;
        if digits.iter().any(|&i| i >= d) {
            return Err(Error::DimensionMismatch(format!("basis labels {digits:?} for d = {d}")));
        }
        let idx = s.flat_index(digits);
        s.amplitudes[idx] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    /// Normalized complex-Gaussian random state.
    pub fn random<R: Rng + ?Sized>(d: usize, n: usize, rng: &mut R) -> Result<Self> {
        let len = state_len(d, n)?;
        let amplitudes = (0..len)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        Self::from_amplitudes(d, n, amplitudes)?.normalized()
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn n_factors(&self) -> usize {
        self.n_factors
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn flat_index(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &i| acc * self.local_dim + i)
    }

    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.n_factors];
        for slot in out.iter_mut().rev() {
            *slot = index % self.local_dim;
            index /= self.local_dim;
        }
        out
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalized(mut self) -> Result<Self> {
        let norm = self.norm();
        if norm < 1e-300 || !norm.is_finite() {
            return Err(Error::Degenerate(format!("cannot normalize a state of norm {norm:e}")));
        }
        self.scale(Complex64::new(1.0 / norm, 0.0));
        Ok(self)
    }

    pub fn scale(&mut self, factor: Complex64) {
        self.amplitudes.iter_mut().for_each(|a| *a *= factor);
    }

    pub fn scaled(mut self, factor: Complex64) -> Self {
        self.scale(factor);
        self
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.local_dim != other.local_dim || self.n_factors != other.n_factors {
            return Err(Error::DimensionMismatch(format!(
                "states on (C^{})^{} and (C^{})^{}",
                self.local_dim, self.n_factors, other.local_dim, other.n_factors
            )));
        }
        Ok(())
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        self.check_same_space(other)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `self += factor * other`.
    pub fn axpy(&mut self, factor: Complex64, other: &Self) -> Result<()> {
        self.check_same_space(other)?;
        for (a, b) in self.amplitudes.iter_mut().zip(&other.amplitudes) {
            *a += factor * b;
        }
        Ok(())
    }

    /// `‖self - other‖`.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        self.check_same_space(other)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    /// `self ⊗ other`; factors of `self` come first.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.local_dim != other.local_dim {
            return Err(Error::DimensionMismatch(format!(
                "tensoring C^{} with C^{}",
                self.local_dim, other.local_dim
            )));
        }
        let n = self.n_factors + other.n_factors;
        state_len(self.local_dim, n)?;
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Self::from_amplitudes(self.local_dim, n, amplitudes)
    }

    /// Tensor product of a list of states, left to right.
    pub fn tensor_all<'a>(parts: impl IntoIterator<Item = &'a TensorState>) -> Result<Self> {
        let mut iter = parts.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::DimensionMismatch("empty tensor product".into()))?
            .clone();
        iter.try_fold(first, |acc, s| acc.tensor(s))
    }

    /// `(U ⊗ ... ⊗ U) |self⟩`.
    pub fn apply_local_unitary(&self, u: &DMatrix<Complex64>) -> Result<Self> {
        let d = self.local_dim;
        if u.nrows() != d || u.ncols() != d {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} local operator on C^{d}",
                u.nrows(),
                u.ncols()
            )));
        }
        let mut cur = self.amplitudes.clone();
        let mut next = vec![Complex64::new(0.0, 0.0); cur.len()];
        for p in 0..self.n_factors {
            let stride = d.pow((self.n_factors - 1 - p) as u32);
            next.iter_mut().for_each(|x| *x = Complex64::new(0.0, 0.0));
            for (idx, amp) in cur.iter().enumerate() {
                if *amp == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let digit = (idx / stride) % d;
                let base = idx - digit * stride;
                for a in 0..d {
                    next[base + a * stride] += u[(a, digit)] * amp;
                }
            }
            std::mem::swap(&mut cur, &mut next);
        }
        Self::from_amplitudes(d, self.n_factors, cur)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(StateJson {
            d: self.local_dim,
            n: self.n_factors,
            amplitudes: self.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
        })
        .expect("state serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: StateJson = serde_json::from_value(value.clone()).map_err(|e| Error::StateJson(e.to_string()))?;
        let amplitudes = raw
            .amplitudes
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        Self::from_amplitudes(raw.d, raw.n, amplitudes)
    }
}

pub(crate) fn strides(d: usize, n: usize) -> Vec<usize> {
    (0..n).map(|p| d.pow((n - 1 - p) as u32)).collect()
}

/// `U_sigma`: the content of factor `p` moves to factor `sigma(p)`, i.e.
/// `e_{i_1} ⊗ ... ⊗ e_{i_N} -> e_{i_{σ⁻¹(1)}} ⊗ ... ⊗ e_{i_{σ⁻¹(N)}}`.
pub fn apply_permutation(sigma: &Permutation, psi: &TensorState) -> Result<TensorState> {
    let n = psi.n_factors();
    if sigma.degree() != n {
        return Err(Error::DimensionMismatch(format!(
            "permutation of degree {} on {n} factors",
            sigma.degree()
        )));
    }
    let d = psi.local_dim();
    let st = strides(d, n);
    let target: Vec<usize> = sigma.images_zero_based().iter().map(|&q| st[q]).collect();
    let mut out = vec![Complex64::new(0.0, 0.0); psi.len()];
    for (idx, amp) in psi.amplitudes().iter().enumerate() {
        let mut rest = idx;
        let mut to = 0;
        for p in (0..n).rev() {
            to += (rest % d) * target[p];
            rest /= d;
        }
        out[to] = *amp;
    }
    TensorState::from_amplitudes(d, n, out)
}

/// Swap factors `k` and `l` (1-based).
pub fn swap_factors(psi: &TensorState, k: usize, l: usize) -> Result<TensorState> {
    let sigma = Permutation::transposition(psi.n_factors(), k, l)?;
    apply_permutation(&sigma, psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn index_convention() {
        let s = TensorState::basis(3, &[1, 0, 2]).unwrap();
        assert_eq!(s.flat_index(&[1, 0, 2]), 9 + 2);
        assert_eq!(s.amplitudes()[11], c(1.0));
        assert_eq!(s.digits(11), vec![1, 0, 2]);
    }

    #[test]
    fn swap_moves_content() {
        let s = TensorState::basis(2, &[0, 1]).unwrap();
        let swapped = swap_factors(&s, 1, 2).unwrap();
        assert_eq!(swapped, TensorState::basis(2, &[1, 0]).unwrap());
        assert_eq!(swap_factors(&s, 2, 2).unwrap(), s);
        assert!(swap_factors(&s, 1, 3).is_err());
    }

    #[test]
    fn permutation_action_convention() {
        // content of factor p moves to factor sigma(p)
        let sigma = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let s = TensorState::basis(3, &[0, 1, 2]).unwrap();
        let out = apply_permutation(&sigma, &s).unwrap();
        assert_eq!(out, TensorState::basis(3, &[2, 0, 1]).unwrap());
    }

    #[test]
    fn permutation_action_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let psi = TensorState::random(2, 5, &mut rng).unwrap();
        for _ in 0..20 {
            let s = Permutation::random(5, &mut rng);
            let t = Permutation::random(5, &mut rng);
            let lhs = apply_permutation(&s.compose(&t), &psi).unwrap();
            let rhs = apply_permutation(&s, &apply_permutation(&t, &psi).unwrap()).unwrap();
            assert!(lhs.distance(&rhs).unwrap() < 1e-14);
            assert!((lhs.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn three_cycle_has_order_three() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let sigma = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        for _ in 0..5 {
            let psi = TensorState::random(3, 3, &mut rng).unwrap();
            let mut x = psi.clone();
            for _ in 0..3 {
                x = apply_permutation(&sigma, &x).unwrap();
            }
            assert!(x.distance(&psi).unwrap() < 1e-13);
        }
    }

    #[test]
    fn double_swap_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let psi = TensorState::random(3, 4, &mut rng).unwrap();
        let twice = swap_factors(&swap_factors(&psi, 1, 4).unwrap(), 1, 4).unwrap();
        assert!(twice.distance(&psi).unwrap() < 1e-15);
    }

    #[test]
    fn tensor_and_local_unitary() {
        let a = TensorState::basis(2, &[0]).unwrap();
        let b = TensorState::basis(2, &[1]).unwrap();
        assert_eq!(a.tensor(&b).unwrap(), TensorState::basis(2, &[0, 1]).unwrap());
        let x = DMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]);
        let flipped = a.tensor(&b).unwrap().apply_local_unitary(&x).unwrap();
        assert_eq!(flipped, TensorState::basis(2, &[1, 0]).unwrap());
    }

    #[test]
    fn json_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let psi = TensorState::random(2, 3, &mut rng).unwrap();
        let back = TensorState::from_json(&psi.to_json()).unwrap();
        assert_eq!(back, psi);
        let v = serde_json::json!({"d": 2, "n": 2, "amplitudes": [[1.0, 0.0]]});
        assert!(TensorState::from_json(&v).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            TensorState::zeros(2, 21),
            Err(Error::CapExceeded { d: 2, n: 21, .. })
        ));
        assert!(state_len(4, 7).is_ok());
    }
}
