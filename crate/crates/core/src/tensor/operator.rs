//! Matrix-free linear maps on tensor states built from permutation actions.
//!
//! An [`OperatorExpr`] is a formal expression: (anti)symmetrizers over a set
//! of factor positions, explicit weighted permutation sums, exact rational
//! scalings, products and shifts into a larger tensor product. Nodes are
//! shared through `Arc`, so the exponentially long recursive projectors are
//! stored as DAGs of linear size.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use itertools::Itertools;
use num_complex::Complex64;
use rayon::prelude::*;

use super::state::{apply_permutation, strides, TensorState};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::young::{rational_to_f64, Rational};

const PAR_THRESHOLD: usize = 1 << 12;

#[derive(Debug)]
pub(crate) enum Node {
    Identity,
    /// `(1/m!) sum_{σ ∈ Sym(slots)} (±1)^σ U_σ`, slots 0-based.
    Symmetrizer {
        slots: Vec<usize>,
        antisymmetric: bool,
    },
    /// `sum_i c_i U_{σ_i}` over permutations of the full scope.
    PermutationSum(Vec<(Permutation, f64)>),
    Scaled {
        factor: Rational,
        value: f64,
        inner: Arc<Node>,
    },
    /// Applied right to left.
    Product(Vec<Arc<Node>>),
    /// Inner operator acting on factors `offset + 1 ..`.
    Shifted {
        offset: usize,
        inner: Arc<Node>,
    },
}

/// A realized linear map on `(C^d)^{⊗N}`.
#[derive(Clone, Debug)]
pub struct OperatorExpr {
    local_dim: usize,
    n_factors: usize,
    node: Arc<Node>,
}

impl OperatorExpr {
    pub(crate) fn from_node(local_dim: usize, n_factors: usize, node: Arc<Node>) -> Self {
        Self {
            local_dim,
            n_factors,
            node,
        }
    }

    pub fn identity(d: usize, n: usize) -> Self {
        Self::from_node(d, n, Arc::new(Node::Identity))
    }

    /// Symmetrizer (or antisymmetrizer) over the given 1-based positions.
    pub fn symmetrizer(d: usize, n: usize, positions: &[usize], antisymmetric: bool) -> Result<Self> {
        let slots = positions
            .iter()
            .map(|&p| {
                if p == 0 || p > n {
                    Err(Error::IndexOutOfRange {
                        what: "factor",
                        index: p,
                        max: n,
                    })
                } else {
                    Ok(p - 1)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if slots.iter().duplicates().next().is_some() {
            return Err(Error::DimensionMismatch(format!("repeated positions {positions:?}")));
        }
        Ok(Self::from_node(
            d,
            n,
            Arc::new(Node::Symmetrizer { slots, antisymmetric }),
        ))
    }

    /// `sum_i c_i U_{σ_i}`.
    pub fn permutation_sum(d: usize, n: usize, terms: Vec<(Permutation, f64)>) -> Result<Self> {
        if let Some((p, _)) = terms.iter().find(|(p, _)| p.degree() != n) {
            return Err(Error::DimensionMismatch(format!(
                "permutation of degree {} in an operator on {n} factors",
                p.degree()
            )));
        }
        Ok(Self::from_node(d, n, Arc::new(Node::PermutationSum(terms))))
    }

    pub fn scaled(self, factor: Rational) -> Self {
        let value = rational_to_f64(&factor);
        Self::from_node(
            self.local_dim,
            self.n_factors,
            Arc::new(Node::Scaled {
                factor,
                value,
                inner: self.node,
            }),
        )
    }

    /// `ops[0] · ops[1] · ... · ops[last]`; the last factor acts first.
    pub fn product(ops: &[OperatorExpr]) -> Result<Self> {
        let first = ops
            .first()
            .ok_or_else(|| Error::DimensionMismatch("empty operator product".into()))?;
        if let Some(bad) = ops
            .iter()
            .find(|o| o.local_dim != first.local_dim || o.n_factors != first.n_factors)
        {
            return Err(Error::DimensionMismatch(format!(
                "operator on (C^{})^{} multiplied with one on (C^{})^{}",
                bad.local_dim, bad.n_factors, first.local_dim, first.n_factors
            )));
        }
        Ok(Self::from_node(
            first.local_dim,
            first.n_factors,
            Arc::new(Node::Product(ops.iter().map(|o| o.node.clone()).collect())),
        ))
    }

    /// `1^{⊗offset} ⊗ self ⊗ 1^{⊗rest}` on `total` factors.
    pub fn embed(&self, total: usize, offset: usize) -> Result<Self> {
        if offset + self.n_factors > total {
            return Err(Error::DimensionMismatch(format!(
                "cannot place an operator on {} factors at offset {offset} in {total}",
                self.n_factors
            )));
        }
        let node = if offset == 0 {
            self.node.clone()
        } else {
            Arc::new(Node::Shifted {
                offset,
                inner: self.node.clone(),
            })
        };
        Ok(Self::from_node(self.local_dim, total, node))
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn n_factors(&self) -> usize {
        self.n_factors
    }

    /// 1-based factor positions the operator touches.
    pub fn scope(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut seen = HashSet::new();
        collect_scope(&self.node, 0, &mut out, &mut seen);
        out.into_iter().map(|p| p + 1).collect()
    }

    pub fn adjoint(&self) -> Self {
        let mut memo = HashMap::new();
        Self::from_node(self.local_dim, self.n_factors, adjoint_node(&self.node, &mut memo))
    }

    pub fn apply(&self, psi: &TensorState) -> Result<TensorState> {
        if psi.local_dim() != self.local_dim || psi.n_factors() != self.n_factors {
            return Err(Error::DimensionMismatch(format!(
                "operator on (C^{})^{} applied to a state on (C^{})^{}",
                self.local_dim,
                self.n_factors,
                psi.local_dim(),
                psi.n_factors()
            )));
        }
        let ctx = Ctx {
            d: self.local_dim,
            strides: strides(self.local_dim, self.n_factors),
        };
        let out = ctx.apply(&self.node, 0, psi.amplitudes().to_vec());
        TensorState::from_amplitudes(self.local_dim, self.n_factors, out)
    }

    /// Fully expanded formal sum `sum_σ c_σ U_σ`. Exponential in the
    /// operator size; meant for brute-force cross-checks on small cases.
    pub fn expand(&self) -> Vec<(Permutation, f64)> {
        let mut terms: Vec<(Permutation, f64)> = expand_node(&self.node, 0, self.n_factors)
            .into_iter()
            .filter(|(_, c)| c.abs() > 1e-15)
            .collect();
        terms.sort_by(|a, b| a.0.images_zero_based().cmp(b.0.images_zero_based()));
        terms
    }

    /// Apply the expanded sum term by term.
    pub fn apply_expanded(&self, psi: &TensorState) -> Result<TensorState> {
        let mut out = TensorState::zeros(psi.local_dim(), psi.n_factors())?;
        for (sigma, c) in self.expand() {
            out.axpy(Complex64::new(c, 0.0), &apply_permutation(&sigma, psi)?)?;
        }
        Ok(out)
    }
}

fn collect_scope(node: &Arc<Node>, offset: usize, out: &mut BTreeSet<usize>, seen: &mut HashSet<(*const Node, usize)>) {
    if !seen.insert((Arc::as_ptr(node), offset)) {
        return;
    }
    match node.as_ref() {
        Node::Identity => {}
        Node::Symmetrizer { slots, .. } => {
            if slots.len() > 1 {
                out.extend(slots.iter().map(|s| s + offset));
            }
        }
        Node::PermutationSum(terms) => {
            for (p, _) in terms {
                for (i, &q) in p.images_zero_based().iter().enumerate() {
                    if i != q {
                        out.insert(i + offset);
                    }
                }
            }
        }
        Node::Scaled { inner, .. } => collect_scope(inner, offset, out, seen),
        Node::Product(list) => list.iter().for_each(|x| collect_scope(x, offset, out, seen)),
        Node::Shifted { offset: o, inner } => collect_scope(inner, offset + o, out, seen),
    }
}

fn adjoint_node(node: &Arc<Node>, memo: &mut HashMap<*const Node, Arc<Node>>) -> Arc<Node> {
    if let Some(done) = memo.get(&Arc::as_ptr(node)) {
        return done.clone();
    }
    let out = match node.as_ref() {
        Node::Identity | Node::Symmetrizer { .. } => node.clone(),
        Node::PermutationSum(terms) => Arc::new(Node::PermutationSum(
            terms.iter().map(|(p, c)| (p.inverse(), *c)).collect(),
        )),
        Node::Scaled { factor, value, inner } => Arc::new(Node::Scaled {
            factor: factor.clone(),
            value: *value,
            inner: adjoint_node(inner, memo),
        }),
        Node::Product(list) => Arc::new(Node::Product(
            list.iter().rev().map(|x| adjoint_node(x, memo)).collect(),
        )),
        Node::Shifted { offset, inner } => Arc::new(Node::Shifted {
            offset: *offset,
            inner: adjoint_node(inner, memo),
        }),
    };
    memo.insert(Arc::as_ptr(node), out.clone());
    out
}

fn expand_node(node: &Arc<Node>, offset: usize, n: usize) -> Vec<(Permutation, f64)> {
    match node.as_ref() {
        Node::Identity => vec![(Permutation::identity(n), 1.0)],
        Node::Symmetrizer { slots, antisymmetric } => {
            let m = slots.len();
            let weight = 1.0 / (1..=m).map(|k| k as f64).product::<f64>();
            slots
                .iter()
                .permutations(m)
                .map(|targets| {
                    let mut images: Vec<usize> = (0..n).collect();
                    for (&from, &&to) in slots.iter().zip(&targets) {
                        images[from + offset] = to + offset;
                    }
                    let p = Permutation::from_zero_based(images);
                    let sign = if *antisymmetric { p.sign() as f64 } else { 1.0 };
                    (p, sign * weight)
                })
                .collect()
        }
        Node::PermutationSum(terms) => terms
            .iter()
            .map(|(p, c)| {
                let mut images: Vec<usize> = (0..n).collect();
                for (i, &q) in p.images_zero_based().iter().enumerate() {
                    images[i + offset] = q + offset;
                }
                (Permutation::from_zero_based(images), *c)
            })
            .collect(),
        Node::Scaled { value, inner, .. } => expand_node(inner, offset, n)
            .into_iter()
            .map(|(p, c)| (p, c * value))
            .collect(),
        Node::Product(list) => {
            let mut acc: HashMap<Permutation, f64> = HashMap::from([(Permutation::identity(n), 1.0)]);
            for factor in list.iter().rev() {
                let terms = expand_node(factor, offset, n);
                let mut next: HashMap<Permutation, f64> = HashMap::new();
                for (p, c) in &acc {
                    for (q, e) in &terms {
                        *next.entry(q.compose(p)).or_default() += c * e;
                    }
                }
                acc = next;
            }
            acc.into_iter().collect()
        }
        Node::Shifted { offset: o, inner } => expand_node(inner, offset + o, n),
    }
}

struct Ctx {
    d: usize,
    strides: Vec<usize>,
}

impl Ctx {
    fn apply(&self, node: &Node, offset: usize, x: Vec<Complex64>) -> Vec<Complex64> {
        match node {
            Node::Identity => x,
            Node::Symmetrizer { slots, antisymmetric } => {
                let shifted: Vec<usize> = slots.iter().map(|s| s + offset).collect();
                self.symmetrize(x, &shifted, *antisymmetric)
            }
            Node::PermutationSum(terms) => {
                let mut out = vec![Complex64::new(0.0, 0.0); x.len()];
                for (p, c) in terms {
                    self.add_permuted(&mut out, &x, p, offset, *c);
                }
                out
            }
            Node::Scaled { value, inner, .. } => {
                let mut y = self.apply(inner, offset, x);
                y.iter_mut().for_each(|a| *a *= value);
                y
            }
            Node::Product(list) => list.iter().rev().fold(x, |acc, factor| self.apply(factor, offset, acc)),
            Node::Shifted { offset: o, inner } => self.apply(inner, offset + o, x),
        }
    }

    /// Coset recursion `Σ_{S_j} = (1 ± Σ_{i<j} (i j)) Σ_{S_{j-1}}`, which
    /// needs `m(m-1)/2` transposition passes instead of `m!` terms.
    fn symmetrize(&self, x: Vec<Complex64>, slots: &[usize], antisymmetric: bool) -> Vec<Complex64> {
        let sign = if antisymmetric { -1.0 } else { 1.0 };
        let mut cur = x;
        for j in 1..slots.len() {
            let mut next = cur.clone();
            for &a in &slots[..j] {
                self.add_transposed(&mut next, &cur, a, slots[j], sign);
            }
            let inv = 1.0 / (j + 1) as f64;
            next.iter_mut().for_each(|v| *v *= inv);
            cur = next;
        }
        cur
    }

    fn add_transposed(&self, out: &mut [Complex64], x: &[Complex64], a: usize, b: usize, coeff: f64) {
        let (sa, sb, d) = (self.strides[a], self.strides[b], self.d);
        let partner = move |idx: usize| {
            let da = (idx / sa) % d;
            let db = (idx / sb) % d;
            idx + db * sa + da * sb - da * sa - db * sb
        };
        if out.len() >= PAR_THRESHOLD {
            out.par_iter_mut()
                .enumerate()
                .for_each(|(idx, o)| *o += x[partner(idx)] * coeff);
        } else {
            for (idx, o) in out.iter_mut().enumerate() {
                *o += x[partner(idx)] * coeff;
            }
        }
    }

    fn add_permuted(&self, out: &mut [Complex64], x: &[Complex64], p: &Permutation, offset: usize, coeff: f64) {
        let d = self.d;
        let n = self.strides.len();
        let mut images: Vec<usize> = (0..n).collect();
        for (i, &q) in p.images_zero_based().iter().enumerate() {
            images[i + offset] = q + offset;
        }
        let target: Vec<usize> = images.iter().map(|&q| self.strides[q]).collect();
        for (idx, amp) in x.iter().enumerate() {
            let mut rest = idx;
            let mut to = 0;
            for t in target.iter().rev() {
                to += (rest % d) * t;
                rest /= d;
            }
            out[to] += amp * coeff;
        }
    }
}
