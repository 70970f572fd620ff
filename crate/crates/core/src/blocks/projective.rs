//! Zero-charge projectives induced from finite-dimensional `b`-modules.

use crate::module::{induced, TruncatedModule};
use crate::verma::{composition_multiplicities, simple_character};
use crate::weight::Weight;
use crate::{Error, Result, Scalar};

fn check_zero_charge<S: Scalar>(w: &Weight<S>) -> Result<()> {
    if w.is_zero_charge() {
        Ok(())
    } else {
        Err(Error::NonzeroCharge)
    }
}

/// `U/U(h − μ(h), z, U(n₊)_{>k})` with `μ = λ − k h∨`, truncated `depth`
/// below `λ`. It covers `Δ(μ)` and is projective in the category of
/// modules supported below `λ`. Spaces carry the pq-grading; the
/// generator has degree 0.
pub fn truncated_projective<S: Scalar>(
    lambda: &Weight<S>,
    k: usize,
    depth: usize,
) -> Result<TruncatedModule<S>> {
    check_zero_charge(lambda)?;
    if depth < k {
        return Err(Error::InsufficientDepth { needed: k, have: depth });
    }
    let k32 = k as u32;
    let allowed: Vec<(u32, u32)> =
        (0..=k32).flat_map(|s| (0..=(k32 - s) / 2).map(move |t| (s, t))).collect();
    Ok(induced(lambda, k, &allowed, depth))
}

/// `U/U(h − μ(h), z, e, p^{k+1})` with `μ = λ − k h∨`: for a non-integral
/// block this is the indecomposable projective cover of `L(μ)` among
/// modules supported below `λ`, with Verma flag `Δ(λ − k h∨), …, Δ(λ)`.
pub fn indecomposable_projective<S: Scalar>(
    lambda: &Weight<S>,
    k: usize,
    depth: usize,
) -> Result<TruncatedModule<S>> {
    check_zero_charge(lambda)?;
    if depth < k {
        return Err(Error::InsufficientDepth { needed: k, have: depth });
    }
    let allowed: Vec<(u32, u32)> = (0..=k as u32).map(|s| (s, 0)).collect();
    Ok(induced(lambda, k, &allowed, depth))
}

/// Multiplicities `n_i` with `ch = Σ_i n_i · ch Δ(λ − i h∨)`, where `ch`
/// lists dimensions per space below `λ`. Negative entries mean `ch` has no
/// Verma flag.
pub fn verma_flag(ch: &[usize]) -> Vec<i64> {
    let mut n: Vec<i64> = Vec::with_capacity(ch.len());
    for (i, &d) in ch.iter().enumerate() {
        let mut m = d as i64;
        for (j, nj) in n.iter().enumerate() {
            m -= nj * ((i - j) / 2 + 1) as i64;
        }
        n.push(m);
    }
    n
}

/// BGG reciprocity for the indecomposable projectives `P(λ − κ h∨)`,
/// `κ ≤ k`, among modules supported below `λ`.
///
/// `truncated_projective(λ, κ)` is `⊕_j P(λ − j h∨)^{dim L(λ − j h∨)_{κ−j}}`,
/// so the flag of `P(λ − κ h∨)` is recovered by peeling off the summands
/// with `j < κ`. Each flag multiplicity `[P(λ − κ h∨) : Δ(λ − j h∨)]` is
/// compared with `(Δ(λ − j h∨) : L(λ − κ h∨))`.
pub fn bgg_check<S: Scalar>(lambda: &Weight<S>, k: usize, depth: usize) -> Result<bool> {
    check_zero_charge(lambda)?;
    if depth < 2 * k {
        return Err(Error::InsufficientDepth { needed: 2 * k, have: depth });
    }
    let simples: Vec<Vec<usize>> =
        (0..=k).map(|j| simple_character(&lambda.shift(j as i64), k - j)).collect();
    // flags[κ][j] = [P(λ − κ h∨) : Δ(λ − j h∨)]
    let mut flags: Vec<Vec<i64>> = Vec::new();
    for kk in 0..=k {
        let p = truncated_projective(lambda, kk, depth)?;
        let mut flag = verma_flag(&p.character());
        for (j, fj) in flags.iter().enumerate() {
            let copies = simples[j][kk - j] as i64;
            for (x, y) in flag.iter_mut().zip(fj) {
                *x -= copies * y;
            }
        }
        flags.push(flag);
    }
    for (kk, flag) in flags.iter().enumerate() {
        for (j, &n) in flag.iter().enumerate() {
            let expected = if j <= kk {
                let cm = composition_multiplicities(&lambda.shift(j as i64), depth - j);
                *cm.get(&(kk - j)).ok_or(Error::InsufficientDepth { needed: 2 * kk, have: depth })? as i64
            } else {
                0
            };
            if n != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
