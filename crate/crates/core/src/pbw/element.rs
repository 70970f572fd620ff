use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::rewrite::mono_times_gen;
use super::{Generator, Monomial};
use crate::Scalar;

/// An element of the enveloping algebra in PBW normal form.
///
/// The map never stores a zero coefficient, so structural equality is
/// equality in the algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Default for AlgebraElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(S::one())
    }

    pub fn scalar(c: S) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn generator(g: Generator) -> Self {
        Self::monomial(Monomial::generator(g), S::one())
    }

    pub fn monomial(m: Monomial, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        AlgebraElement { terms }
    }

    /// Collect terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, S)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Filtration degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The h-weight, if every monomial has the same one. Zero is
    /// homogeneous of every weight and reports `Some(0)`.
    pub fn homogeneous_weight(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(Monomial::h_weight);
        match it.next() {
            None => Some(0),
            Some(w) => it.all(|v| v == w).then_some(w),
        }
    }

    /// Split into h-weight components.
    pub fn weight_components(&self) -> BTreeMap<i32, AlgebraElement<S>> {
        let mut out: BTreeMap<i32, AlgebraElement<S>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.h_weight()).or_default().add_term(*m, c.clone());
        }
        out
    }

    /// Terms of exactly the given filtration degree.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (*m, c.clone() * s.clone())).collect(),
        }
    }

    /// `self · g` in normal form.
    pub fn mul_generator(&self, g: Generator) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (t, k) in mono_times_gen(m, g).iter() {
                out.add_term(*t, c.clone() * S::from_i128(*k));
            }
        }
        out
    }

    /// `self · m` for an ordered monomial, one letter at a time.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        m.letters().fold(self.clone(), |acc, g| acc.mul_generator(g))
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &other.terms {
            for (t, k) in self.mul_monomial(m).terms {
                out.add_term(t, k * c.clone());
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.multiply(self))
    }

    /// `[self, other] = self·other − other·self`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.multiply(other) - other.multiply(self)
    }

    /// The involutive anti-automorphism with `e ↦ −f`, `p ↦ q`, `z ↦ z`
    /// (hence `f ↦ −e`, `q ↦ p`, `h ↦ h`).
    pub fn sigma(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            // σ(g1 … gk) = σ(gk) … σ(g1)
            let mut acc = Self::scalar(c.clone());
            let letters: Vec<Generator> = m.letters().collect();
            for g in letters.into_iter().rev() {
                let (img, sign) = sigma_generator(g);
                acc = acc.mul_generator(img);
                if sign < 0 {
                    acc = -acc;
                }
            }
            out = out + acc;
        }
        out
    }

    /// Substitute `z ↦ z_val`, leaving the other generators alone.
    pub fn specialize_z(&self, z_val: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let d = m.exponent(Generator::Z);
            let mut exps = m.exponents();
            exps[Generator::Z.index()] = 0;
            (Monomial::new(exps), c.clone() * pow_scalar(z_val, d))
        }))
    }
}

pub(crate) fn pow_scalar<S: Scalar>(x: &S, n: u32) -> S {
    (0..n).fold(S::one(), |acc, _| acc * x.clone())
}

fn sigma_generator(g: Generator) -> (Generator, i32) {
    match g {
        Generator::E => (Generator::F, -1),
        Generator::F => (Generator::E, -1),
        Generator::P => (Generator::Q, 1),
        Generator::Q => (Generator::P, 1),
        Generator::H => (Generator::H, 1),
        Generator::Z => (Generator::Z, 1),
    }
}

impl<S: Scalar> Add for AlgebraElement<S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<S: Scalar> Sub for AlgebraElement<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Scalar> Neg for AlgebraElement<S> {
    type Output = Self;
    fn neg(self) -> Self {
        AlgebraElement { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<S: Scalar> Mul for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn mul(self, rhs: Self) -> AlgebraElement<S> {
        self.multiply(rhs)
    }
}

impl<S: Scalar> Mul for AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn mul(self, rhs: Self) -> AlgebraElement<S> {
        self.multiply(&rhs)
    }
}

/// Writes one signed term: `3/2*h z`, `-f e`, `2`.
pub(crate) fn write_term<S: Scalar>(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &S,
    body: &str,
) -> fmt::Result {
    let neg = coeff.is_negative();
    let mag = coeff.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if body.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{body}")
    } else {
        write!(f, "{mag}*{body}")
    }
}

impl<S: Scalar> fmt::Display for AlgebraElement<S> {
    /// Terms are printed in decreasing monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let body = if m.is_one() { String::new() } else { m.to_string() };
            write_term(f, i == 0, c, &body)?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for AlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
