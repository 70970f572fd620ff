//! Degree-bounded slices of Verma annihilators and of centrally generated
//! ideals.
//!
//! A slice lives in `U_{≤d}` with coordinates indexed by the PBW monomials
//! of degree `≤ d` in decreasing order, so that reduced echelon bases lead
//! with their largest monomial.

use std::collections::BTreeMap;

use crate::central::{casimir, central_character};
use crate::linalg::{Echelon, SparseVec, Subspace};
use crate::module::TruncatedModule;
use crate::pbw::{AlgebraElement, Generator, Monomial};
use crate::verma::verma;
use crate::weight::Weight;
use crate::{Error, Result, Scalar};

/// Largest degree accepted by [`annihilator_slice`].
pub const ANNIHILATOR_DEGREE_BOUND: u32 = 4;

/// Monomials of degree `≤ d`, largest first, with their positions.
struct MonomialIndex {
    monomials: Vec<Monomial>,
    position: BTreeMap<Monomial, usize>,
}

impl MonomialIndex {
    fn new(d: u32) -> Self {
        let mut monomials = Monomial::up_to_degree(d);
        monomials.sort_unstable_by(|a, b| b.cmp(a));
        let position = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        MonomialIndex { monomials, position }
    }

    fn coordinates<S: Scalar>(&self, u: &AlgebraElement<S>) -> SparseVec<S> {
        let mut v: SparseVec<S> =
            u.terms().map(|(m, c)| (self.position[m], c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    fn element<S: Scalar>(&self, v: &[(usize, S)]) -> AlgebraElement<S> {
        AlgebraElement::from_terms(v.iter().map(|(i, c)| (self.monomials[*i], c.clone())))
    }
}

/// A subspace of `U_{≤d}` in reduced echelon form.
#[derive(Clone, Debug)]
pub struct FilteredIdealSlice<S: Scalar> {
    pub degree: u32,
    pub basis: Vec<AlgebraElement<S>>,
    subspace: Subspace<S>,
}

impl<S: Scalar> FilteredIdealSlice<S> {
    fn from_subspace(degree: u32, index: &MonomialIndex, subspace: Subspace<S>) -> Self {
        let basis = subspace.basis().iter().map(|v| index.element(v)).collect();
        FilteredIdealSlice { degree, basis, subspace }
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn contains(&self, u: &AlgebraElement<S>) -> bool {
        if u.degree().is_some_and(|d| d > self.degree) {
            return false;
        }
        self.subspace.contains(&MonomialIndex::new(self.degree).coordinates(u))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        assert_eq!(self.degree, other.degree, "slices of different degrees");
        self.subspace.is_subspace_of(&other.subspace)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "slices of different degrees");
        let index = MonomialIndex::new(self.degree);
        Self::from_subspace(self.degree, &index, self.subspace.intersect(&other.subspace))
    }
}

impl<S: Scalar> PartialEq for FilteredIdealSlice<S> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.subspace == other.subspace
    }
}

/// Elements of `U_{≤d}` killing `f^a q^b v_λ` for every `(a, b)` in `grid`.
pub fn annihilator_on_grid<S: Scalar>(
    lambda: &Weight<S>,
    d: u32,
    grid: &[(u32, u32)],
) -> FilteredIdealSlice<S> {
    let index = MonomialIndex::new(d);
    let deepest = grid.iter().map(|&(a, b)| (2 * a + b) as usize).max().unwrap_or(0);
    let module = verma(lambda, deepest + 2 * d as usize);
    // Group monomials by weight; each weight component must annihilate on
    // its own.
    let mut by_weight: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for (k, m) in index.monomials.iter().enumerate() {
        by_weight.entry(m.h_weight()).or_default().push(k);
    }
    let mut kernel_vectors: Vec<SparseVec<S>> = Vec::new();
    for members in by_weight.values() {
        let mut ech: Echelon<S> = Echelon::new();
        for &(a, b) in grid {
            let i = (2 * a + b) as usize;
            let images: Vec<(usize, Vec<S>)> =
                members.iter().map(|&k| image(&module, &index.monomials[k], i, a as usize)).collect();
            let rows = images.iter().map(|(n, _)| *n).max().unwrap_or(0);
            for r in 0..rows {
                let eq: SparseVec<S> = images
                    .iter()
                    .enumerate()
                    .filter_map(|(local, (_, v))| v.get(r).filter(|c| !c.is_zero()).map(|c| (local, c.clone())))
                    .collect();
                if !eq.is_empty() {
                    ech.insert(&eq);
                }
            }
        }
        for v in ech.kernel(members.len()) {
            let mut global: SparseVec<S> = v.into_iter().map(|(l, c)| (members[l], c)).collect();
            global.sort_by_key(|(i, _)| *i);
            kernel_vectors.push(global);
        }
    }
    FilteredIdealSlice::from_subspace(d, &index, Subspace::span(kernel_vectors.iter()))
}

/// `m · f^a q^b v` as a dense vector of its target space, with its length.
fn image<S: Scalar>(module: &TruncatedModule<S>, m: &Monomial, i: usize, a: usize) -> (usize, Vec<S>) {
    let word: Vec<Generator> = m.letters().collect::<Vec<_>>().into_iter().rev().collect();
    let (_, x) = module.word(&word, i).expect("verma deep enough for the grid");
    (x.rows(), x.column(a))
}

/// `Ann_U Δ(λ) ∩ U_{≤d}`. Every PBW coefficient of `u · f^a q^b v_λ` is a
/// polynomial of degree at most `d` in `a` and in `b`, so the grid
/// `{0..=d}²` decides annihilation.
pub fn annihilator_slice<S: Scalar>(lambda: &Weight<S>, d: u32) -> Result<FilteredIdealSlice<S>> {
    if d > ANNIHILATOR_DEGREE_BOUND {
        return Err(Error::BoundExceeded { requested: d as usize, bound: ANNIHILATOR_DEGREE_BOUND as usize });
    }
    let grid: Vec<(u32, u32)> = (0..=d).flat_map(|a| (0..=d).map(move |b| (a, b))).collect();
    Ok(annihilator_on_grid(lambda, d, &grid))
}

/// Span of `U_{≤d−1}(z − ż) + U_{≤d−3}(c − θ)` inside `U_{≤d}`.
pub fn central_ideal_slice<S: Scalar>(lambda: &Weight<S>, d: u32) -> FilteredIdealSlice<S> {
    let index = MonomialIndex::new(d);
    let chi = central_character(lambda);
    let z_gen = AlgebraElement::generator(Generator::Z) - AlgebraElement::scalar(lambda.z.clone());
    let c_gen = casimir::<S>() - AlgebraElement::scalar(chi.theta);
    let mut vectors: Vec<SparseVec<S>> = Vec::new();
    for (gen, deg) in [(&z_gen, 1u32), (&c_gen, 3u32)] {
        if d < deg {
            continue;
        }
        for m in Monomial::up_to_degree(d - deg) {
            let u = AlgebraElement::monomial(m, S::one()).multiply(gen);
            vectors.push(index.coordinates(&u));
        }
    }
    FilteredIdealSlice::from_subspace(d, &index, Subspace::span(vectors.iter()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceComparison {
    Equal,
    /// The central slice is strictly inside the annihilator slice.
    CentralProperSubset,
    Other,
}

impl std::fmt::Display for SliceComparison {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SliceComparison::Equal => "equal",
            SliceComparison::CentralProperSubset => "central proper subset",
            SliceComparison::Other => "other",
        })
    }
}

pub fn compare_slices<S: Scalar>(lambda: &Weight<S>, d: u32) -> Result<SliceComparison> {
    let ann = annihilator_slice(lambda, d)?;
    let cen = central_ideal_slice(lambda, d);
    Ok(if ann == cen {
        SliceComparison::Equal
    } else if cen.is_subspace_of(&ann) {
        SliceComparison::CentralProperSubset
    } else {
        SliceComparison::Other
    })
}

/// Dimension of the intersection of the annihilator slices of `samples`.
pub fn intersection_check<S: Scalar>(samples: &[Weight<S>], d: u32) -> Result<usize> {
    let mut acc: Option<FilteredIdealSlice<S>> = None;
    for w in samples {
        let s = annihilator_slice(w, d)?;
        acc = Some(match acc {
            None => s,
            Some(a) => a.intersect(&s),
        });
    }
    Ok(acc.map_or(MonomialIndex::new(d).monomials.len(), |a| a.dim()))
}
