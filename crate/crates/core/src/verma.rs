//! Verma modules, their contravariant forms and simple quotients.

use std::collections::BTreeMap;

use crate::linalg::{sparsify, Matrix, Subspace};
use crate::module::{induced, quotient_module, submodule, TruncatedModule};
use crate::pbw::Generator;
use crate::weight::Weight;
use crate::{Error, Result, Scalar};

pub use crate::module::dual_module;

/// `Δ(λ)` down to depth `depth`, with basis `f^a q^b v` (`2a + b = i`,
/// `a` ascending) in space `i`.
pub fn verma<S: Scalar>(top: &Weight<S>, depth: usize) -> TruncatedModule<S> {
    induced(top, 0, &[(0, 0)], depth)
}

/// Basis of the vectors in space `i` killed by `e` and `p`.
pub fn singular_vectors<S: Scalar>(m: &TruncatedModule<S>, i: usize) -> Result<Vec<Vec<S>>> {
    if i > m.depth() {
        return Err(Error::IndexOutOfRange { index: i, depth: m.depth() });
    }
    Ok(m.highest_weight_vectors(i))
}

/// Gram matrix of the contravariant form on `Δ(λ)` at depth `i`, in the
/// Verma basis. Entry `(x, y)` for `x = f^a q^b` is `(−1)^a` times the
/// `v`-coefficient of `p^b e^a y v`, i.e. of `σ(x) y v`.
pub fn contravariant_form<S: Scalar>(top: &Weight<S>, i: usize) -> Matrix<S> {
    gram_on(&verma(top, i), i)
}

fn gram_on<S: Scalar>(m: &TruncatedModule<S>, i: usize) -> Matrix<S> {
    let n = m.dim(i);
    let mut g = Matrix::zeros(n, n);
    for r in 0..n {
        let a = r;
        let b = i - 2 * a;
        let mut word = vec![Generator::E; a];
        word.extend(std::iter::repeat_n(Generator::P, b));
        let (_, x) = m.word(&word, i).expect("raising words stay inside");
        let sign = if a % 2 == 0 { S::one() } else { -S::one() };
        for c in 0..n {
            g.set(r, c, sign.clone() * x.get(0, c).clone());
        }
    }
    g
}

/// The contravariant form on every space of `Δ(λ)` down to a depth.
#[derive(Clone)]
pub struct GramForm<S> {
    top: Weight<S>,
    matrices: Vec<Matrix<S>>,
}

impl<S: Scalar> GramForm<S> {
    pub fn new(top: &Weight<S>, depth: usize) -> Self {
        let m = verma(top, depth);
        GramForm { top: top.clone(), matrices: (0..=depth).map(|i| gram_on(&m, i)).collect() }
    }

    pub fn top(&self) -> &Weight<S> {
        &self.top
    }

    pub fn depth(&self) -> usize {
        self.matrices.len() - 1
    }

    pub fn matrix(&self, i: usize) -> &Matrix<S> {
        &self.matrices[i]
    }

    pub fn rank(&self, i: usize) -> usize {
        self.matrices[i].rank()
    }

    /// Radical at depth `i`, which is the maximal submodule's weight space.
    pub fn radical(&self, i: usize) -> Subspace<S> {
        let k = self.matrices[i].kernel();
        Subspace::span(k.iter().map(|v| sparsify(v)).collect::<Vec<_>>().iter())
    }

    pub fn radicals(&self) -> Vec<Subspace<S>> {
        (0..=self.depth()).map(|i| self.radical(i)).collect()
    }
}

impl<S: Scalar> std::fmt::Debug for GramForm<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GramForm").field("top", &self.top.to_string()).field("depth", &self.depth()).finish()
    }
}

/// `[dim L(λ)_0, …, dim L(λ)_D]`, the ranks of the contravariant form.
pub fn simple_character<S: Scalar>(top: &Weight<S>, depth: usize) -> Vec<usize> {
    let g = GramForm::new(top, depth);
    (0..=depth).map(|i| g.rank(i)).collect()
}

/// The maximal submodule `K(λ)` of `Δ(λ)`, truncated.
pub fn radical_module<S: Scalar>(top: &Weight<S>, depth: usize) -> TruncatedModule<S> {
    submodule(&verma(top, depth), &GramForm::new(top, depth).radicals())
}

/// `L(λ) = Δ(λ)/K(λ)`, truncated.
pub fn simple_module<S: Scalar>(top: &Weight<S>, depth: usize) -> TruncatedModule<S> {
    quotient_module(&verma(top, depth), &GramForm::new(top, depth).radicals())
}

/// `(Δ(λ) : L(λ − k h∨))` for `k ≤ depth / 2`, keyed by `k`.
///
/// Solved top-down from `ch Δ(λ) = Σ_k m_k · ch L(λ − k h∨)`.
pub fn composition_multiplicities<S: Scalar>(top: &Weight<S>, depth: usize) -> BTreeMap<usize, usize> {
    let simples: Vec<Vec<usize>> =
        (0..=depth).map(|k| simple_character(&top.shift(k as i64), depth - k)).collect();
    let mut mult: Vec<i64> = Vec::with_capacity(depth + 1);
    for k in 0..=depth {
        let mut m = (k / 2 + 1) as i64;
        for (j, mj) in mult.iter().enumerate() {
            m -= mj * simples[j][k - j] as i64;
        }
        debug_assert!(m >= 0, "negative multiplicity");
        mult.push(m);
    }
    mult.into_iter().take(depth / 2 + 1).enumerate().map(|(k, m)| (k, m as usize)).collect()
}

/// `dim Hom(Δ(μ), Δ(λ))`, the number of singular vectors of weight `μ` in
/// `Δ(λ)`. Zero unless `μ` lies an integral number of steps below `λ` with
/// the same charge.
pub fn verma_hom<S: Scalar>(mu: &Weight<S>, lambda: &Weight<S>, depth: usize) -> Result<usize> {
    let Some(k) = lambda.depth_of(mu) else {
        return Ok(0);
    };
    if k > depth {
        return Err(Error::InsufficientDepth { needed: k, have: depth });
    }
    Ok(singular_vectors(&verma(lambda, k), k)?.len())
}
