//! Exact linear algebra: small dense matrices for module actions and a
//! sparse reduced-row-echelon engine for kernels, ranks and subspaces.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec<S> = Vec<(usize, S)>;

/// `a + factor * b` for sparse vectors.
pub fn axpy<S: Scalar>(a: &[(usize, S)], factor: &S, b: &[(usize, S)]) -> SparseVec<S> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, factor.clone() * b[j].1.clone()));
            j += 1;
        } else {
            let v = a[i].1.clone() + factor.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Sort, merge duplicates and drop zeros.
pub fn normalize_sparse<S: Scalar>(mut v: Vec<(usize, S)>) -> SparseVec<S> {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec<S> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = last.1.clone() + x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

fn lookup<S: Scalar>(v: &[(usize, S)], idx: usize) -> Option<&S> {
    v.binary_search_by_key(&idx, |e| e.0).ok().map(|p| &v[p].1)
}

/// Incrementally maintained reduced row echelon form.
///
/// Every stored row has leading coefficient one and is zero at every other
/// pivot column.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    rows: BTreeMap<usize, SparseVec<S>>,
}

impl<S: Scalar> Default for Echelon<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> Echelon<S> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` modulo the current row space.
    pub fn reduce(&self, v: &[(usize, S)]) -> SparseVec<S> {
        let mut cur: SparseVec<S> = v.to_vec();
        let hits: Vec<usize> = v
            .iter()
            .map(|e| e.0)
            .filter(|c| self.rows.contains_key(c))
            .collect();
        for c in hits {
            if let Some(coef) = lookup(&cur, c).cloned() {
                cur = axpy(&cur, &-coef, &self.rows[&c]);
            }
        }
        cur
    }

    pub fn contains(&self, v: &[(usize, S)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Insert a row; returns `true` if it enlarged the row space.
    pub fn insert(&mut self, v: &[(usize, S)]) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let (pivot, lead) = r[0].clone();
        if !lead.is_one() {
            let inv = S::one() / lead;
            for e in r.iter_mut() {
                e.1 = e.1.clone() * inv.clone();
            }
        }
        for row in self.rows.values_mut() {
            if let Some(c) = lookup(row, pivot).cloned() {
                *row = axpy(row, &-c, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Rows in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<S>> {
        self.rows.values()
    }

    /// Basis of `{x : R x = 0}` for a matrix with `ncols` columns whose row
    /// space is `self`. One vector per free column, with a 1 there.
    pub fn kernel(&self, ncols: usize) -> Vec<SparseVec<S>> {
        let mut per_free: BTreeMap<usize, Vec<(usize, S)>> = BTreeMap::new();
        for (&c, row) in &self.rows {
            for (j, val) in row.iter().skip(1) {
                per_free.entry(*j).or_default().push((c, -val.clone()));
            }
        }
        (0..ncols)
            .filter(|j| !self.rows.contains_key(j))
            .map(|j| {
                let mut v = per_free.remove(&j).unwrap_or_default();
                v.push((j, S::one()));
                normalize_sparse(v)
            })
            .collect()
    }
}

/// A subspace of a coordinate space, stored canonically in RREF so that
/// equality of subspaces is equality of values.
#[derive(Clone, Debug)]
pub struct Subspace<S> {
    ech: Echelon<S>,
}

impl<S: Scalar> PartialEq for Subspace<S> {
    fn eq(&self, other: &Self) -> bool {
        self.ech.rank() == other.ech.rank() && self.ech.rows().eq(other.ech.rows())
    }
}

impl<S: Scalar> Eq for Subspace<S> {}

impl<S: Scalar> Subspace<S> {
    pub fn zero() -> Self {
        Subspace { ech: Echelon::new() }
    }

    pub fn span<'a, I>(vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec<S>>,
    {
        let mut ech = Echelon::new();
        for v in vectors {
            ech.insert(v);
        }
        Subspace { ech }
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn basis(&self) -> Vec<SparseVec<S>> {
        self.ech.rows().cloned().collect()
    }

    pub fn contains(&self, v: &[(usize, S)]) -> bool {
        self.ech.contains(v)
    }

    /// Remainder of `v` modulo the subspace; zero at every pivot.
    pub fn reduce(&self, v: &[(usize, S)]) -> SparseVec<S> {
        self.ech.reduce(v)
    }

    /// Pivot columns of the canonical basis, increasing.
    pub fn pivots(&self) -> Vec<usize> {
        self.ech.pivots().collect()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ech.rows().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut ech = self.ech.clone();
        for r in other.ech.rows() {
            ech.insert(r);
        }
        Subspace { ech }
    }

    /// Intersection via the kernel of `[A | -B]`.
    pub fn intersect(&self, other: &Self) -> Self {
        let a = self.basis();
        let b = other.basis();
        if a.is_empty() || b.is_empty() {
            return Subspace::zero();
        }
        // Columns are the basis vectors; transpose into coordinate rows.
        let n = a.len() + b.len();
        let mut by_coord: BTreeMap<usize, Vec<(usize, S)>> = BTreeMap::new();
        for (k, v) in a.iter().enumerate() {
            for (i, x) in v {
                by_coord.entry(*i).or_default().push((k, x.clone()));
            }
        }
        for (k, v) in b.iter().enumerate() {
            for (i, x) in v {
                by_coord.entry(*i).or_default().push((a.len() + k, -x.clone()));
            }
        }
        let mut ech = Echelon::new();
        for row in by_coord.into_values() {
            ech.insert(&normalize_sparse(row));
        }
        let vecs: Vec<SparseVec<S>> = ech
            .kernel(n)
            .into_iter()
            .map(|coeffs| {
                let mut acc: SparseVec<S> = Vec::new();
                for (k, c) in coeffs.iter().filter(|e| e.0 < a.len()) {
                    acc = axpy(&acc, c, &a[*k]);
                }
                acc
            })
            .collect();
        Subspace::span(vecs.iter())
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: fmt::Display> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|c| self.data[r * self.cols + c].to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn scalar(n: usize, s: S) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>, cols: usize) -> Self {
        let r = rows.len();
        let data: Vec<S> = rows.into_iter().flat_map(|row| {
            assert_eq!(row.len(), cols, "ragged matrix");
            row
        }).collect();
        Matrix { rows: r, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: S) {
        let i = r * self.cols + c;
        self.data[i] = self.data[i].clone() + v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_sparse(&self, r: usize) -> SparseVec<S> {
        (0..self.cols)
            .filter(|&c| !self.get(r, c).is_zero())
            .map(|c| (c, self.get(r, c).clone()))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.add_to(r, c, a.clone() * b.clone());
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(S::zero(), |acc, c| {
                    if v[c].is_zero() {
                        acc
                    } else {
                        acc + self.get(r, c).clone() * v[c].clone()
                    }
                })
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, s: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    pub fn echelon(&self) -> Echelon<S> {
        let mut e = Echelon::new();
        for r in 0..self.rows {
            e.insert(&self.row_sparse(r));
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Dense basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        self.echelon()
            .kernel(self.cols)
            .into_iter()
            .map(|v| densify(&v, self.cols))
            .collect()
    }

    /// Stack matrices with equal column counts.
    pub fn vstack(blocks: &[&Matrix<S>]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Matrix { rows, cols, data }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

pub fn densify<S: Scalar>(v: &[(usize, S)], n: usize) -> Vec<S> {
    let mut out = vec![S::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn sparsify<S: Scalar>(v: &[S]) -> SparseVec<S> {
    v.iter()
        .enumerate()
        .filter(|e| !e.1.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}
