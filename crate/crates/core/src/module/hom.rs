//! Intertwiners between truncated modules.

use std::collections::HashMap;

use crate::linalg::{Echelon, Matrix, SparseVec, Subspace};
use crate::pbw::Generator;
use crate::Scalar;

use super::TruncatedModule;

#[derive(Clone, Debug, Default)]
pub struct HomOptions {
    /// Only count maps raising the pq-degree by exactly this amount. Both
    /// modules must be graded.
    pub grade_shift: Option<i32>,
    /// Deepest space of the source on which maps are compared. Defaults to
    /// half of the deepest source space that has a partner in the target.
    pub window: Option<usize>,
}

#[derive(Clone)]
pub struct HomSpace<S> {
    pub dim: usize,
    /// Source spaces `0..=window` were used to distinguish maps.
    pub window: usize,
    /// Source space `i` maps to target space `i + offset`.
    pub offset: i64,
    /// Basis of the maps restricted to the window: `basis[k][i]` is the
    /// matrix of the `k`-th map on source space `i`, when that space has a
    /// partner in the target.
    pub basis: Vec<Vec<Option<Matrix<S>>>>,
}

impl<S: Scalar> std::fmt::Debug for HomSpace<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HomSpace")
            .field("dim", &self.dim)
            .field("window", &self.window)
            .field("offset", &self.offset)
            .finish()
    }
}

impl<S: Scalar> HomSpace<S> {
    fn empty(window: usize, offset: i64) -> Self {
        HomSpace { dim: 0, window, offset, basis: Vec::new() }
    }
}

/// Space `i` of `m` corresponds to space `i + offset` of `n`.
fn offset<S: Scalar>(m: &TruncatedModule<S>, n: &TruncatedModule<S>) -> Option<i64> {
    if m.charge() != n.charge() {
        return None;
    }
    (n.top().h.clone() - m.top().h.clone()).to_i64_exact()
}

/// Solve `T·x_M = x_N·T` for every generator, space by space.
///
/// Equations that would need a matrix past either truncation are dropped;
/// the reported dimension is that of the solution space restricted to the
/// source spaces `0..=window`, which discards solutions living only near the
/// truncation boundary. Incompatible weights give dimension zero.
pub fn module_hom<S: Scalar>(
    m: &TruncatedModule<S>,
    n: &TruncatedModule<S>,
    opts: &HomOptions,
) -> HomSpace<S> {
    let Some(off) = offset(m, n) else {
        return HomSpace::empty(0, 0);
    };
    let md = m.depth() as i64;
    let nd = n.depth() as i64;
    let last = md.min(nd - off);
    if last < 0 {
        return HomSpace::empty(0, off);
    }
    let window = opts.window.unwrap_or((last / 2) as usize).min(last as usize);
    let grades = match opts.grade_shift {
        Some(s) => match (m.is_graded(), n.is_graded()) {
            (true, true) => Some(s),
            _ => return HomSpace::empty(window, off),
        },
        None => None,
    };

    // Unknown entries (i, row, col) of T_i : M_i -> N_{i+off}.
    let mut unknowns: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut order: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..=md {
        let j = i + off;
        if j < 0 || j > nd {
            continue;
        }
        let (iu, ju) = (i as usize, j as usize);
        for r in 0..n.dim(ju) {
            for c in 0..m.dim(iu) {
                if let Some(s) = grades {
                    if n.grades(ju).unwrap()[r] != m.grades(iu).unwrap()[c] + s {
                        continue;
                    }
                }
                unknowns.insert((iu, r, c), order.len());
                order.push((iu, r, c));
            }
        }
    }
    if order.is_empty() {
        return HomSpace::empty(window, off);
    }

    enum Side {
        Zero,
        Unknown,
        Beyond,
    }
    let status = |i: i64| -> Side {
        let j = i + off;
        if i < 0 || j < 0 {
            Side::Zero
        } else if i > md || j > nd {
            Side::Beyond
        } else {
            Side::Unknown
        }
    };

    let mut ech: Echelon<S> = Echelon::new();
    for g in Generator::ALL {
        let shift = g.depth_shift() as i64;
        for i in 0..=md {
            let j = i + off;
            let (i2, j2) = (i + shift, j + shift);
            if j2 < 0 {
                continue;
            }
            // Left side: x_N · T_i.
            let left = match status(i) {
                Side::Zero => None,
                Side::Beyond => continue,
                Side::Unknown => match n.action(g, j as usize) {
                    Some(x) => Some(x),
                    None => continue,
                },
            };
            // Right side: T_{i2} · x_M.
            let right = if i2 < 0 {
                None
            } else {
                match status(i2) {
                    Side::Zero => None,
                    Side::Beyond => continue,
                    Side::Unknown => match m.action(g, i as usize) {
                        Some(x) => Some(x),
                        None => continue,
                    },
                }
            };
            if left.is_none() && right.is_none() {
                continue;
            }
            let rows = n.dim(j2 as usize);
            let cols = m.dim(i as usize);
            for r in 0..rows {
                for c in 0..cols {
                    let mut eq: Vec<(usize, S)> = Vec::new();
                    if let Some(x) = left {
                        // Σ_k x[r,k] T_i[k,c]
                        for k in 0..x.cols() {
                            let v = x.get(r, k);
                            if v.is_zero() {
                                continue;
                            }
                            if let Some(&u) = unknowns.get(&(i as usize, k, c)) {
                                eq.push((u, v.clone()));
                            }
                        }
                    }
                    if let Some(x) = right {
                        // −Σ_k T_{i2}[r,k] x[k,c]
                        for k in 0..x.rows() {
                            let v = x.get(k, c);
                            if v.is_zero() {
                                continue;
                            }
                            if let Some(&u) = unknowns.get(&(i2 as usize, r, k)) {
                                eq.push((u, -v.clone()));
                            }
                        }
                    }
                    if !eq.is_empty() {
                        ech.insert(&crate::linalg::normalize_sparse(eq));
                    }
                }
            }
        }
    }

    // Restrict the solution space to the window and take its dimension.
    let kernel = ech.kernel(order.len());
    let projected: Vec<SparseVec<S>> = kernel
        .iter()
        .map(|v| v.iter().filter(|(u, _)| order[*u].0 <= window).cloned().collect())
        .collect();
    let space = Subspace::span(projected.iter());
    let basis = space
        .basis()
        .into_iter()
        .map(|v| {
            (0..=window)
                .map(|i| {
                    let j = i as i64 + off;
                    if j < 0 || j > nd || i as i64 > md {
                        return None;
                    }
                    let mut t = Matrix::zeros(n.dim(j as usize), m.dim(i));
                    for (u, x) in &v {
                        let (ii, r, c) = order[*u];
                        if ii == i {
                            t.set(r, c, x.clone());
                        }
                    }
                    Some(t)
                })
                .collect()
        })
        .collect();
    HomSpace { dim: space.dim(), window, offset: off, basis }
}
