//! The Casimir element, the Harish-Chandra projection and the center.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec, Subspace};
use crate::pbw::{parse_element, AlgebraElement, Generator, Monomial};
use crate::weight::Weight;
use crate::Scalar;

/// Largest filtration degree accepted by [`center_basis`].
pub const CENTER_DEGREE_BOUND: u32 = 8;

/// `c = (h² + h + 4fe)z − 2(fp² − eq² − hpq)`.
pub fn casimir<S: Scalar>() -> AlgebraElement<S> {
    parse_element("(h^2 + h + 4*f*e)*z - 2*(f*p^2 - e*q^2 - h*p*q)").expect("valid literal")
}

/// `κ = fp² − eq² − hpq`, central modulo `z`.
pub fn kappa<S: Scalar>() -> AlgebraElement<S> {
    parse_element("f*p^2 - e*q^2 - h*p*q").expect("valid literal")
}

pub fn verify_central<S: Scalar>(u: &AlgebraElement<S>) -> bool {
    Generator::ALL
        .iter()
        .all(|&g| AlgebraElement::generator(g).bracket(u).is_zero())
}

/// True iff `[x, u]` lies in the ideal `(z)` for every generator `x`,
/// i.e. every monomial of every such bracket contains `z`.
pub fn verify_central_mod_z<S: Scalar>(u: &AlgebraElement<S>) -> bool {
    Generator::ALL.iter().all(|&g| {
        AlgebraElement::generator(g)
            .bracket(u)
            .terms()
            .all(|(m, _)| m.exponent(Generator::Z) >= 1)
    })
}

/// A commutative polynomial in `h` and `z`; keys are `(deg_h, deg_z)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HCPolynomial<S> {
    terms: BTreeMap<(u32, u32), S>,
}

impl<S: Scalar> HCPolynomial<S> {
    pub fn zero() -> Self {
        HCPolynomial { terms: BTreeMap::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::term(0, 0, c)
    }

    pub fn h() -> Self {
        Self::term(1, 0, S::one())
    }

    pub fn z() -> Self {
        Self::term(0, 1, S::one())
    }

    pub fn term(dh: u32, dz: u32, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term((dh, dz), c);
        p
    }

    fn add_term(&mut self, k: (u32, u32), c: S) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.remove(&k).unwrap_or_else(S::zero) + c;
        if !v.is_zero() {
            self.terms.insert(k, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dh: u32, dz: u32) -> S {
        self.terms.get(&(dh, dz)).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &S)> {
        self.terms.iter()
    }

    /// `π_λ`: substitute `h ↦ λ(h)`, `z ↦ λ(z)`.
    pub fn evaluate(&self, w: &Weight<S>) -> S {
        self.terms.iter().fold(S::zero(), |acc, (&(a, b), c)| {
            acc + c.clone() * pow(&w.h, a) * pow(&w.z, b)
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(S::one()), |acc, _| &acc * self)
    }
}

fn pow<S: Scalar>(x: &S, n: u32) -> S {
    (0..n).fold(S::one(), |acc, _| acc * x.clone())
}

impl<S: Scalar> Add for HCPolynomial<S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<S: Scalar> Neg for HCPolynomial<S> {
    type Output = Self;
    fn neg(self) -> Self {
        HCPolynomial { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<S: Scalar> Sub for HCPolynomial<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Scalar> Mul for &HCPolynomial<S> {
    type Output = HCPolynomial<S>;
    fn mul(self, rhs: Self) -> HCPolynomial<S> {
        let mut out = HCPolynomial::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term((a + x, b + y), c.clone() * d.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Mul for HCPolynomial<S> {
    type Output = HCPolynomial<S>;
    fn mul(self, rhs: Self) -> HCPolynomial<S> {
        &self * &rhs
    }
}

impl<S: Scalar> fmt::Display for HCPolynomial<S> {
    /// Highest total degree first, e.g. `h^2 z + 3*h z + 2*z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (i, k) in keys.into_iter().enumerate() {
            let m = Monomial::new([0, 0, k.0, k.1, 0, 0]);
            let body = if m.is_one() { String::new() } else { m.to_string() };
            crate::pbw::write_term(f, i == 0, &self.terms[k], &body)?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for HCPolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Projection `U₀ → U(h)` along `U₀ ∩ U n₊`.
///
/// In PBW order a weight-zero monomial with no `p` or `e` also has no `f` or
/// `q`, so the projection keeps exactly the monomials in `h` and `z`.
pub fn hc_homomorphism<S: Scalar>(u: &AlgebraElement<S>) -> Result<HCPolynomial<S>> {
    if u.homogeneous_weight() != Some(0) {
        return Err(Error::NotWeightZero);
    }
    let mut out = HCPolynomial::zero();
    for (m, c) in u.terms() {
        let [a, b, h, z, s, t] = m.exponents();
        if a + b + s + t == 0 {
            out.add_term((h, z), c.clone());
        }
    }
    Ok(out)
}

/// The scalar `θ` by which `c` acts on a highest weight module, together
/// with the charge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CentralCharacter<S> {
    pub theta: S,
    pub charge: S,
}

/// `θ = (ḣ² + 3ḣ + 2)ż`.
pub fn central_character<S: Scalar>(w: &Weight<S>) -> CentralCharacter<S> {
    let h = w.h.clone();
    let theta = (h.clone() * h.clone() + S::from_i64(3) * h + S::from_i64(2)) * w.z.clone();
    CentralCharacter { theta, charge: w.z.clone() }
}

/// Basis of the centralizer of the generators inside `U_{≤d}`, with the
/// default degree bound.
pub fn center_basis<S: Scalar>(d: u32) -> Result<Vec<AlgebraElement<S>>> {
    center_basis_bounded(d, CENTER_DEGREE_BOUND)
}

pub fn center_basis_bounded<S: Scalar>(d: u32, bound: u32) -> Result<Vec<AlgebraElement<S>>> {
    if d > bound {
        return Err(Error::BoundExceeded { requested: d as usize, bound: bound as usize });
    }
    // Central elements commute with h, so only weight zero contributes.
    let monos: Vec<Monomial> = Monomial::up_to_degree(d)
        .into_iter()
        .filter(|m| m.h_weight() == 0)
        .rev()
        .collect();
    let mut rows: HashMap<(Generator, Monomial), SparseVec<S>> = HashMap::new();
    for (j, m) in monos.iter().enumerate() {
        let u = AlgebraElement::monomial(*m, S::one());
        for g in [Generator::F, Generator::Q, Generator::P, Generator::E] {
            for (t, c) in AlgebraElement::generator(g).bracket(&u).terms() {
                rows.entry((g, *t)).or_default().push((j, c.clone()));
            }
        }
    }
    let mut ech = Echelon::new();
    for r in rows.into_values() {
        ech.insert(&r);
    }
    let kernel = Subspace::span(ech.kernel(monos.len()).iter());
    let mut out: Vec<AlgebraElement<S>> = kernel
        .basis()
        .into_iter()
        .map(|v| AlgebraElement::from_terms(v.into_iter().map(|(j, c)| (monos[j], c))))
        .collect();
    out.sort_by_key(|u| (u.degree(), u.terms().next_back().map(|(m, _)| *m)));
    Ok(out)
}
