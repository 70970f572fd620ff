//! First extensions between simple highest weight modules.

use std::collections::BTreeMap;

use crate::module::{module_hom, HomOptions};
use crate::verma::{radical_module, simple_module};
use crate::weight::Weight;
use crate::{Error, Result, Scalar};

/// Spaces required below the deeper simple module.
pub const EXT_MARGIN: usize = 4;

/// `dim Ext¹(L(λ − i h∨), L(λ − j h∨))`.
///
/// For `j > i` this is `dim Hom(K(λ − i h∨), L(λ − j h∨))`: among modules
/// supported below `λ − i h∨` the Verma module there is projective, so
/// extensions of its simple top by a lower simple all factor through the
/// maximal submodule `K`. The case `j < i` follows by duality. Self
/// extensions are taken to vanish.
pub fn ext1<S: Scalar>(lambda: &Weight<S>, i: usize, j: usize, depth: usize) -> Result<usize> {
    if i == j {
        return Ok(0);
    }
    let (hi, lo) = (i.min(j), i.max(j));
    if depth < lo + EXT_MARGIN {
        return Err(Error::InsufficientDepth { needed: lo + EXT_MARGIN, have: depth });
    }
    let mu = lambda.shift(hi as i64);
    let nu = lambda.shift(lo as i64);
    let k = radical_module(&mu, depth - hi);
    let l = simple_module(&nu, depth - lo);
    let opts = HomOptions { grade_shift: None, window: Some(lo - hi) };
    Ok(module_hom(&k, &l, &opts).dim)
}

/// `ext1` on `0..=n` squared.
pub fn ext_table<S: Scalar>(
    lambda: &Weight<S>,
    n: usize,
    depth: usize,
) -> Result<BTreeMap<(usize, usize), usize>> {
    let mut out = BTreeMap::new();
    for i in 0..=n {
        for j in i..=n {
            let d = ext1(lambda, i, j, depth)?;
            out.insert((i, j), d);
            out.insert((j, i), d);
        }
    }
    Ok(out)
}
