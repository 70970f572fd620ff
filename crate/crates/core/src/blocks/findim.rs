//! The finite-dimensional part of the zero-charge integral block.

use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;
use crate::module::{sl2_simple, tensor_modules, TruncatedModule};
use crate::pbw::{AlgebraElement, Generator, Monomial};
use crate::Scalar;

/// pq-degree `j` layer of the projective cover of the `(i+1)`-dimensional
/// simple module, as an `sl₂`-module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindimLayer {
    pub j: usize,
    pub dim: usize,
    /// Highest weights of the simple summands, in decreasing order.
    pub summands: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindimTable {
    pub i: usize,
    pub layers: Vec<FindimLayer>,
}

/// Matrix of `ad e` from the degree-`j` polynomials in `p, q` (basis
/// `q^m p^{j−m}`, `m = 0..=j`) to themselves, computed in `U` and read
/// modulo `z`.
fn ad_e_on_polynomials<S: Scalar>(j: usize) -> Matrix<S> {
    let e = AlgebraElement::<S>::generator(Generator::E);
    let mut out = Matrix::zeros(j + 1, j + 1);
    for m in 0..=j {
        let mono = Monomial::new([0, m as u32, 0, 0, (j - m) as u32, 0]);
        let img = e.bracket(&AlgebraElement::monomial(mono, S::one())).specialize_z(&S::zero());
        for (t, c) in img.terms() {
            let [a, b, hc, zc, s, tt] = t.exponents();
            debug_assert!(a == 0 && hc == 0 && zc == 0 && tt == 0 && (b + s) as usize == j);
            out.set(b as usize, m, c.clone());
        }
    }
    out
}

/// Layers `0..=depth` of `P(λᵢ)`, each realised as `C[p, q]_j ⊗ L(λᵢ)` with
/// `sl₂` acting through the adjoint action on `p, q`. Summands are the
/// weights carrying vectors killed by `e`.
pub fn findim_projective<S: Scalar>(i: usize, depth: usize) -> FindimTable {
    let layers = (0..=depth)
        .map(|j| {
            let poly_e = ad_e_on_polynomials::<S>(j);
            // e on L(i): v_k ↦ k(i+1−k) v_{k−1}
            let dim = (j + 1) * (i + 1);
            let idx = |m: usize, k: usize| m * (i + 1) + k;
            let mut e = Matrix::<S>::zeros(dim, dim);
            for m in 0..=j {
                for k in 0..=i {
                    let col = idx(m, k);
                    for r in 0..=j {
                        let c = poly_e.get(r, m);
                        if !c.is_zero() {
                            e.add_to(idx(r, k), col, c.clone());
                        }
                    }
                    if k > 0 {
                        e.add_to(idx(m, k - 1), col, S::from_i64((k * (i + 1 - k)) as i64));
                    }
                }
            }
            // Weight of q^m p^{j−m} ⊗ v_k is (j − 2m) + (i − 2k).
            let weight = |m: usize, k: usize| (j + i) as i64 - 2 * (m + k) as i64;
            let mut summands = Vec::new();
            let top = (i + j) as i64;
            let mut wt = top;
            while wt >= 0 {
                let cols: Vec<usize> = (0..=j)
                    .flat_map(|m| (0..=i).map(move |k| (m, k)))
                    .filter(|&(m, k)| weight(m, k) == wt)
                    .map(|(m, k)| idx(m, k))
                    .collect();
                let mut block = Matrix::<S>::zeros(dim, cols.len());
                for (c, &col) in cols.iter().enumerate() {
                    for r in 0..dim {
                        block.set(r, c, e.get(r, col).clone());
                    }
                }
                let kernel = cols.len() - block.rank();
                summands.extend(std::iter::repeat_n(wt as usize, kernel));
                wt -= 1;
            }
            FindimLayer { j, dim, summands }
        })
        .collect();
    FindimTable { i, layers }
}

/// `V ⊗ M` for the `n`-dimensional simple `sl₂`-module `V`, on which `p`,
/// `q` and `z` act by zero.
pub fn tensor_findim<S: Scalar>(m: &TruncatedModule<S>, n: usize) -> TruncatedModule<S> {
    tensor_modules(m, &sl2_simple(n, m.depth()), m.depth())
}
