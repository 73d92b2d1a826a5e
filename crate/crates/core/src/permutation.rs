//! Permutations of tensor-factor positions `1..=N`.
//!
//! Composition follows function composition: `sigma.compose(&tau)` is the
//! permutation `p -> sigma(tau(p))`, so that `U_sigma U_tau = U_{sigma tau}`
//! on tensor states.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    /// 0-based one-line notation: `images[p] = sigma(p)`.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Build from 1-based one-line notation `[sigma(1), ..., sigma(N)]`.
    pub fn from_images(one_based: &[usize]) -> Result<Self> {
        let n = one_based.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &x in one_based {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("{one_based:?}")));
            }
            images.push(x - 1);
        }
        Ok(Self { images })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Self { images }
    }

    /// The transposition `(a b)` on `n` points, 1-based.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        for x in [a, b] {
            if x == 0 || x > n {
                return Err(Error::IndexOutOfRange {
                    what: "permutation point",
                    index: x,
                    max: n,
                });
            }
        }
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    /// The adjacent transposition `(k k+1)`.
    pub fn adjacent(n: usize, k: usize) -> Result<Self> {
        Self::transposition(n, k, k + 1)
    }

    /// Product of disjoint or overlapping cycles, 1-based, rightmost applied first.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut out = Self::identity(n);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (1..=n).collect();
            for (i, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n {
                    return Err(Error::InvalidPermutation(format!("cycle {cycle:?} on {n} points")));
                }
                images[a - 1] = cycle[(i + 1) % cycle.len()];
            }
            out = Self::from_images(&images)?.compose(&out);
        }
        Ok(out)
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `sigma(p)` for 1-based `p`.
    pub fn image(&self, p: usize) -> usize {
        self.images[p - 1] + 1
    }

    pub(crate) fn images_zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree(),
            other.degree(),
            "composing permutations of different degree"
        );
        Self {
            images: other.images.iter().map(|&p| self.images[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q] = p;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn sign(&self) -> i32 {
        let odd = self.cycle_type().iter().filter(|&&l| l % 2 == 0).count() % 2;
        if odd == 0 {
            1
        } else {
            -1
        }
    }

    /// Bubble-sort factorization `[k_1, ..., k_m]` with
    /// `sigma = s_{k_1} s_{k_2} ... s_{k_m}`, `s_k = (k k+1)`.
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        // Sorting the one-line word by swapping positions k, k+1 multiplies
        // on the right by s_k, so sigma is the reversed list of swaps.
        let mut word = self.images.clone();
        let mut swaps = Vec::new();
        let n = word.len();
        for pass in 0..n {
            for i in 0..n.saturating_sub(pass + 1) {
                if word[i] > word[i + 1] {
                    word.swap(i, i + 1);
                    swaps.push(i + 1);
                }
            }
        }
        swaps.reverse();
        swaps
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", items.join(","))
    }
}
