//! `sl₂`-modules viewed as modules on which `p`, `q` and `z` act by zero.

use crate::linalg::Matrix;
use crate::pbw::Generator;
use crate::weight::Weight;
use crate::Scalar;

use super::TruncatedModule;

fn sl2_module<S: Scalar>(
    top: S,
    depth: usize,
    len: Option<usize>,
    e_coeff: impl Fn(usize) -> S,
) -> TruncatedModule<S> {
    let present = |k: usize| len.is_none_or(|n| k < n);
    let labels: Vec<Vec<String>> = (0..=depth)
        .map(|i| {
            if i % 2 == 0 && present(i / 2) {
                vec![match i / 2 {
                    0 => "v".to_string(),
                    1 => "f v".to_string(),
                    k => format!("f^{k} v"),
                }]
            } else {
                Vec::new()
            }
        })
        .collect();
    let grades = Some(labels.iter().map(|l| vec![0; l.len()]).collect());
    let dims: Vec<usize> = labels.iter().map(Vec::len).collect();
    let hval = top.clone();
    TruncatedModule::from_parts(Weight::new(top, S::zero()), depth, labels, grades, |g, i, j| {
        let mut m = Matrix::zeros(dims[j], dims[i]);
        if dims[i] == 0 || dims[j] == 0 {
            return m;
        }
        let k = i / 2;
        let c = match g {
            Generator::F => S::one(),
            Generator::E => e_coeff(k),
            Generator::H => hval.clone() - S::from_i64(2 * k as i64),
            _ => S::zero(),
        };
        m.set(0, 0, c);
        m
    })
}

/// The `sl₂` Verma module of highest weight `a`: `e·f^k v = k(a−k+1) f^{k−1} v`.
pub fn sl2_verma<S: Scalar>(a: S, depth: usize) -> TruncatedModule<S> {
    let a2 = a.clone();
    sl2_module(a, depth, None, move |k| {
        let k = S::from_i64(k as i64);
        k.clone() * (a2.clone() - k + S::one())
    })
}

/// The simple `n`-dimensional `sl₂`-module: `e·v_k = k(n−k) v_{k−1}`.
pub fn sl2_simple<S: Scalar>(n: usize, depth: usize) -> TruncatedModule<S> {
    assert!(n >= 1);
    sl2_module(S::from_i64(n as i64 - 1), depth, Some(n), move |k| {
        S::from_i64((k * (n - k)) as i64)
    })
}
