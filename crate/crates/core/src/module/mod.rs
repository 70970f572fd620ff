//! Finite-depth weight modules with explicit action matrices.
//!
//! Space `i` of a module with top weight `λ` is the weight space of
//! h-value `λ(h) − i`. A generator `x` maps space `i` to space
//! `i + x.depth_shift()`. Raising operators always land inside the
//! truncation; a lowering operator whose target lies beyond the depth has
//! no matrix, and every check or equation that would need it is skipped.
//! Targets above the top are genuinely zero.

mod hom;
mod induced;
mod ops;
mod sl2;

pub use hom::{module_hom, HomOptions, HomSpace};
pub(crate) use induced::induced;
pub use ops::{dual_module, quotient_module, submodule, tensor_modules};
pub use sl2::{sl2_simple, sl2_verma};

use std::collections::BTreeMap;

use crate::linalg::Matrix;
use crate::pbw::{commutator_table, AlgebraElement, Generator};
use crate::weight::Weight;
use crate::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedModule<S> {
    top: Weight<S>,
    depth: usize,
    labels: Vec<Vec<String>>,
    grades: Option<Vec<Vec<i32>>>,
    // actions[g][i]: matrix from space i to its target, `None` past the depth.
    actions: Vec<Vec<Option<Matrix<S>>>>,
}

impl<S: Scalar> TruncatedModule<S> {
    /// Assemble a module from per-space labels and a callback producing the
    /// matrix of `g` on space `i` (only called when the target is in range).
    pub fn from_parts<F>(
        top: Weight<S>,
        depth: usize,
        labels: Vec<Vec<String>>,
        grades: Option<Vec<Vec<i32>>>,
        mut action: F,
    ) -> Self
    where
        F: FnMut(Generator, usize, usize) -> Matrix<S>,
    {
        assert_eq!(labels.len(), depth + 1, "one label list per space");
        let dims: Vec<usize> = labels.iter().map(Vec::len).collect();
        let actions = Generator::ALL
            .iter()
            .map(|&g| {
                (0..=depth)
                    .map(|i| {
                        let t = i as isize + g.depth_shift();
                        if t < 0 {
                            Some(Matrix::zeros(0, dims[i]))
                        } else if t as usize > depth {
                            None
                        } else {
                            let m = action(g, i, t as usize);
                            assert_eq!((m.rows(), m.cols()), (dims[t as usize], dims[i]));
                            Some(m)
                        }
                    })
                    .collect()
            })
            .collect();
        TruncatedModule { top, depth, labels, grades, actions }
    }

    pub fn top(&self) -> &Weight<S> {
        &self.top
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn charge(&self) -> &S {
        &self.top.z
    }

    pub fn dim(&self, i: usize) -> usize {
        self.labels.get(i).map_or(0, Vec::len)
    }

    /// `[dim space 0, …, dim space D]`.
    pub fn character(&self) -> Vec<usize> {
        (0..=self.depth).map(|i| self.dim(i)).collect()
    }

    pub fn labels(&self, i: usize) -> &[String] {
        &self.labels[i]
    }

    pub fn is_graded(&self) -> bool {
        self.grades.is_some()
    }

    /// pq-degrees of the basis of space `i`, for graded modules.
    pub fn grades(&self, i: usize) -> Option<&[i32]> {
        self.grades.as_ref().map(|g| g[i].as_slice())
    }

    /// Counts of basis vectors per `(space, grade)`.
    pub fn graded_character(&self) -> Option<BTreeMap<(usize, i32), usize>> {
        let grades = self.grades.as_ref()?;
        let mut out = BTreeMap::new();
        for (i, gs) in grades.iter().enumerate() {
            for &g in gs {
                *out.entry((i, g)).or_insert(0) += 1;
            }
        }
        Some(out)
    }

    /// Index of the space reached from `i` by `g`; may be negative.
    pub fn target(g: Generator, i: usize) -> isize {
        i as isize + g.depth_shift()
    }

    /// Matrix of `g` on space `i`; `None` when the target is past the depth.
    pub fn action(&self, g: Generator, i: usize) -> Option<&Matrix<S>> {
        self.actions[g.index()][i].as_ref()
    }

    /// Matrix of the word `gs[n-1] ⋯ gs[0]` (so `gs[0]` acts first) on
    /// space `i`, with the space it lands in. `None` if some intermediate
    /// step needs an unavailable matrix. If the word passes above the top
    /// the result is a zero matrix.
    pub fn word(&self, gs: &[Generator], i: usize) -> Option<(isize, Matrix<S>)> {
        let mut cur = i as isize;
        // `None` once the vector has passed above the top and is zero.
        let mut acc = Some(Matrix::identity(self.dim(i)));
        for &g in gs {
            let next = cur + g.depth_shift();
            if let Some(m) = acc {
                acc = if next < 0 { None } else { Some(self.action(g, cur as usize)?.mul(&m)) };
            }
            cur = next;
        }
        if cur < 0 {
            return Some((cur, Matrix::zeros(0, self.dim(i))));
        }
        if cur as usize > self.depth {
            return None;
        }
        let m = acc.unwrap_or_else(|| Matrix::zeros(self.dim(cur as usize), self.dim(i)));
        Some((cur, m))
    }

    /// Every bracket relation `[x, y] = Σ c g` and the scalar action of `h`,
    /// checked on every space where all matrices involved are available.
    /// Returns human-readable descriptions of the failures.
    pub fn relation_violations(&self) -> Vec<String> {
        let mut bad = Vec::new();
        for i in 0..=self.depth {
            let n = self.dim(i);
            if let Some(hm) = self.action(Generator::H, i) {
                let expect = Matrix::scalar(n, self.top.h.clone() - S::from_i64(i as i64));
                if *hm != expect {
                    bad.push(format!("h is not scalar on space {i}"));
                }
            }
            for (ix, &x) in Generator::ALL.iter().enumerate() {
                for &y in &Generator::ALL[ix + 1..] {
                    let (Some((t, xy)), Some((_, yx))) = (self.word(&[y, x], i), self.word(&[x, y], i))
                    else {
                        continue;
                    };
                    if t < 0 {
                        continue;
                    }
                    let mut rhs = Matrix::zeros(xy.rows(), n);
                    let mut ok = true;
                    for (m, c) in commutator_table::<S>(x, y).terms() {
                        let g = m.letters().next().expect("degree one");
                        match self.word(&[g], i) {
                            Some((_, gm)) => rhs = rhs.add(&gm.scale(c)),
                            None => ok = false,
                        }
                    }
                    if ok && xy.sub(&yx) != rhs {
                        bad.push(format!("[{x},{y}] fails on space {i}"));
                    }
                }
            }
        }
        bad
    }

    /// Matrix of a weight-homogeneous element on space `i`, with the space
    /// it lands in. `None` if `u` is not homogeneous or some monomial needs
    /// an unavailable matrix.
    pub fn element_matrix(&self, u: &AlgebraElement<S>, i: usize) -> Option<(isize, Matrix<S>)> {
        let w = u.homogeneous_weight()?;
        let t = i as isize - w as isize;
        if t > self.depth as isize {
            return None;
        }
        let rows = if t < 0 { 0 } else { self.dim(t as usize) };
        let mut acc = Matrix::zeros(rows, self.dim(i));
        if t < 0 {
            return Some((t, acc));
        }
        for (m, c) in u.terms() {
            let word: Vec<Generator> = m.letters().collect::<Vec<_>>().into_iter().rev().collect();
            let (_, x) = self.word(&word, i)?;
            acc = acc.add(&x.scale(c));
        }
        Some((t, acc))
    }

    pub fn satisfies_relations(&self) -> bool {
        self.relation_violations().is_empty()
    }

    /// Vectors of space `i` killed by `e` and `p`.
    pub fn highest_weight_vectors(&self, i: usize) -> Vec<Vec<S>> {
        let e = self.word(&[Generator::E], i).map(|x| x.1);
        let p = self.word(&[Generator::P], i).map(|x| x.1);
        match (e, p) {
            (Some(e), Some(p)) => Matrix::vstack(&[&e, &p]).kernel(),
            _ => unreachable!("raising operators are always available"),
        }
    }
}

impl<S: Scalar> std::fmt::Debug for TruncatedModule<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TruncatedModule")
            .field("top", &self.top.to_string())
            .field("depth", &self.depth)
            .field("character", &self.character())
            .finish()
    }
}
