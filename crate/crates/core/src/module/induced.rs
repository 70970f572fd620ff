//! Modules `U ⊗_{U(b)} N` induced from a quotient `N` of `C[p, e]`.
//!
//! `N` has basis `p^s e^t·n` for `(s, t)` in an order ideal of exponent
//! pairs; `h` acts on `p^s e^t·n` by `μ(h) + s + 2t` and `z` by `μ(z)`. The
//! induced module has basis `f^a q^b ⊗ p^s e^t·n`.

use std::collections::HashMap;

use crate::linalg::Matrix;
use crate::pbw::{pow_scalar, AlgebraElement, Generator, Monomial};
use crate::weight::Weight;
use crate::Scalar;

use super::TruncatedModule;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct Basis {
    a: u32,
    b: u32,
    s: u32,
    t: u32,
}

fn label(v: &Basis) -> String {
    let m = Monomial::new([v.a, v.b, 0, 0, v.s, v.t]);
    if m.is_one() {
        "v".to_string()
    } else {
        format!("{m} v")
    }
}

/// Induced module with top weight `top`, generated in depth `gen_depth`
/// (so `μ = top − gen_depth·h∨`), with `N` spanned by `allowed`, which
/// must be closed under lowering either exponent and satisfy
/// `s + 2t ≤ gen_depth`.
pub(crate) fn induced<S: Scalar>(
    top: &Weight<S>,
    gen_depth: usize,
    allowed: &[(u32, u32)],
    depth: usize,
) -> TruncatedModule<S> {
    let mu = top.shift(gen_depth as i64);
    let allowed_set: std::collections::HashSet<(u32, u32)> = allowed.iter().copied().collect();
    let mut spaces: Vec<Vec<Basis>> = vec![Vec::new(); depth + 1];
    let mut sorted: Vec<(u32, u32)> = allowed.to_vec();
    sorted.sort_by_key(|&(s, t)| (std::cmp::Reverse(s + 2 * t), s));
    for &(s, t) in &sorted {
        let w = (s + 2 * t) as usize;
        assert!(w <= gen_depth, "generator part above the top");
        let base = gen_depth - w;
        for (i, space) in spaces.iter_mut().enumerate().skip(base) {
            let rest = (i - base) as u32;
            for a in 0..=rest / 2 {
                space.push(Basis { a, b: rest - 2 * a, s, t });
            }
        }
    }
    let index: Vec<HashMap<Basis, usize>> = spaces
        .iter()
        .map(|sp| sp.iter().enumerate().map(|(k, v)| (*v, k)).collect())
        .collect();
    let labels = spaces.iter().map(|sp| sp.iter().map(label).collect()).collect();
    let grades = top.is_zero_charge().then(|| {
        spaces
            .iter()
            .map(|sp| sp.iter().map(|v| (v.b + v.s) as i32).collect())
            .collect()
    });

    let mut products: HashMap<(Generator, u32, u32), AlgebraElement<S>> = HashMap::new();
    TruncatedModule::from_parts(top.clone(), depth, labels, grades, |g, i, j| {
        let mut m = Matrix::zeros(spaces[j].len(), spaces[i].len());
        for (col, v) in spaces[i].iter().enumerate() {
            let prod = products.entry((g, v.a, v.b)).or_insert_with(|| {
                AlgebraElement::generator(g).mul_monomial(&Monomial::new([v.a, v.b, 0, 0, 0, 0]))
            });
            for (mono, c) in prod.terms() {
                let [a, b, hc, zc, s, t] = mono.exponents();
                let (s, t) = (s + v.s, t + v.t);
                if !allowed_set.contains(&(s, t)) {
                    continue;
                }
                let hval = mu.h.clone() + S::from_i64((s + 2 * t) as i64);
                let coeff = c.clone() * pow_scalar(&hval, hc) * pow_scalar(&mu.z, zc);
                if coeff.is_zero() {
                    continue;
                }
                let row = index[j][&Basis { a, b, s, t }];
                m.add_to(row, col, coeff);
            }
        }
        m
    })
}
