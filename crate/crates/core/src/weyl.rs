//! The Weyl algebra `B_ż = U(i)/(z − ż)` and the realization `Φ` of `U` in it.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::Matrix;
use crate::module::{module_hom, sl2_verma, tensor_modules, HomOptions, HomSpace, TruncatedModule};
use crate::pbw::{pow_scalar, write_term, AlgebraElement, Generator};
use crate::verma::verma;
use crate::weight::Weight;
use crate::{Error, Result, Scalar};

/// An element `Σ c · q^m p^n` of the Weyl algebra with `pq − qp = ż`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeylElement<S> {
    charge: S,
    terms: BTreeMap<(u32, u32), S>,
}

fn factorial<S: Scalar>(n: u32) -> S {
    (1..=n as i64).fold(S::one(), |acc, k| acc * S::from_i64(k))
}

fn binomial<S: Scalar>(n: u32, k: u32) -> S {
    factorial::<S>(n) / (factorial::<S>(k) * factorial::<S>(n - k))
}

impl<S: Scalar> WeylElement<S> {
    pub fn zero(charge: S) -> Self {
        WeylElement { charge, terms: BTreeMap::new() }
    }

    pub fn scalar(charge: S, c: S) -> Self {
        Self::term(charge, 0, 0, c)
    }

    /// `c · q^m p^n`.
    pub fn term(charge: S, m: u32, n: u32, c: S) -> Self {
        let mut w = Self::zero(charge);
        w.add_term(m, n, c);
        w
    }

    pub fn p(charge: S) -> Self {
        Self::term(charge, 0, 1, S::one())
    }

    pub fn q(charge: S) -> Self {
        Self::term(charge, 1, 0, S::one())
    }

    fn add_term(&mut self, m: u32, n: u32, c: S) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((m, n)).or_insert_with(S::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.terms.remove(&(m, n));
        }
    }

    pub fn charge(&self) -> &S {
        &self.charge
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: u32, n: u32) -> S {
        self.terms.get(&(m, n)).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &S)> {
        self.terms.iter()
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.charge.clone());
        for (&(m, n), c) in &self.terms {
            out.add_term(m, n, c.clone() * s.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.charge != other.charge {
            return Err(Error::ChargeMismatch);
        }
        let mut out = self.clone();
        for (&(m, n), c) in &other.terms {
            out.add_term(m, n, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    /// Normal-ordered product, using
    /// `p^b q^c = Σ_k k! C(b,k) C(c,k) ż^k q^{c−k} p^{b−k}`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.charge != other.charge {
            return Err(Error::ChargeMismatch);
        }
        let mut out = Self::zero(self.charge.clone());
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &other.terms {
                for k in 0..=b.min(c) {
                    let coeff = factorial::<S>(k)
                        * binomial::<S>(b, k)
                        * binomial::<S>(c, k)
                        * pow_scalar(&self.charge, k);
                    out.add_term(a + c - k, b - k + d, coeff * x.clone() * y.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    /// Action on the basis vector `q^n·1` of `B_ż/B_ż p`, as `(m, coeff)` for
    /// `q^m·1`.
    pub fn act_on_m(&self, n: u32) -> Vec<(u32, S)> {
        let mut out: BTreeMap<u32, S> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            if b > n {
                continue;
            }
            let k = factorial::<S>(n) / factorial::<S>(n - b) * pow_scalar(&self.charge, b);
            let e = out.entry(a + n - b).or_insert_with(S::zero);
            *e = e.clone() + c.clone() * k;
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

/// Same-charge product, panicking on mismatch.
impl<S: Scalar> std::ops::Mul for &WeylElement<S> {
    type Output = WeylElement<S>;
    fn mul(self, rhs: Self) -> WeylElement<S> {
        self.multiply(rhs).expect("equal charges")
    }
}

/// Normal-ordered product of two Weyl elements.
pub fn weyl_multiply<S: Scalar>(u: &WeylElement<S>, v: &WeylElement<S>) -> Result<WeylElement<S>> {
    u.multiply(v)
}

impl<S: Scalar> fmt::Display for WeylElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(m, n), c)) in self.terms.iter().rev().enumerate() {
            let mut parts = Vec::new();
            match m {
                0 => {}
                1 => parts.push("q".to_string()),
                _ => parts.push(format!("q^{m}")),
            }
            match n {
                0 => {}
                1 => parts.push("p".to_string()),
                _ => parts.push(format!("p^{n}")),
            }
            write_term(f, i == 0, c, &parts.join(" "))?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for WeylElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement[{}; ż = {}]", self, self.charge)
    }
}

/// `Φ` on a generator.
pub fn phi_generator<S: Scalar>(g: Generator, charge: &S) -> WeylElement<S> {
    let z = charge.clone();
    let two = S::from_i64(2);
    match g {
        Generator::E => WeylElement::term(z.clone(), 0, 2, S::one() / (two * z)),
        Generator::F => WeylElement::term(z.clone(), 2, 0, -S::one() / (two * z)),
        Generator::H => {
            let mut w = WeylElement::term(z.clone(), 1, 1, -S::one() / z.clone());
            w.add_term(0, 0, -S::one() / two);
            w
        }
        Generator::Z => WeylElement::scalar(z.clone(), z),
        Generator::P => WeylElement::p(z),
        Generator::Q => WeylElement::q(z),
    }
}

/// `Φ: U → B_ż` with `e ↦ p²/2ż`, `f ↦ −q²/2ż`, `h ↦ −qp/ż − 1/2`.
pub fn phi<S: Scalar>(u: &AlgebraElement<S>, charge: &S) -> Result<WeylElement<S>> {
    if charge.is_zero() {
        return Err(Error::ZeroCharge);
    }
    let images: Vec<WeylElement<S>> = Generator::ALL.iter().map(|&g| phi_generator(g, charge)).collect();
    let mut out = WeylElement::zero(charge.clone());
    for (m, c) in u.terms() {
        let mut acc = WeylElement::scalar(charge.clone(), c.clone());
        for g in m.letters() {
            acc = &acc * &images[g.index()];
        }
        out = out.add(&acc)?;
    }
    Ok(out)
}

/// `M = B_ż/B_ż p` with basis `q^n·1` in space `n` (h-value `−1/2 − n`),
/// `U` acting through `Φ`.
pub fn weyl_module_m<S: Scalar>(charge: &S, depth: usize) -> Result<TruncatedModule<S>> {
    if charge.is_zero() {
        return Err(Error::ZeroCharge);
    }
    let images: Vec<WeylElement<S>> = Generator::ALL.iter().map(|&g| phi_generator(g, charge)).collect();
    let labels = (0..=depth)
        .map(|n| {
            vec![match n {
                0 => "1".to_string(),
                1 => "q".to_string(),
                _ => format!("q^{n}"),
            }]
        })
        .collect();
    let top = Weight::new(S::from_frac(-1, 2), charge.clone());
    Ok(TruncatedModule::from_parts(top, depth, labels, None, |g, i, j| {
        let mut m = Matrix::zeros(1, 1);
        for (t, c) in images[g.index()].act_on_m(i as u32) {
            assert_eq!(t as usize, j, "Φ respects weights");
            m.set(0, 0, c);
        }
        m
    }))
}

/// `M ⊗ Δ(a)` for the `sl₂` Verma module `Δ(a)`, with top weight `(a − 1/2, ż)`.
pub fn tensor_with_m<S: Scalar>(a: &S, depth: usize, charge: &S) -> Result<TruncatedModule<S>> {
    let m = weyl_module_m(charge, depth)?;
    Ok(tensor_modules(&m, &sl2_verma(a.clone(), depth), depth))
}

/// Intertwiners from the Verma module `Δ((a − 1/2, ż))` into `M ⊗ Δ(a)`.
pub fn weyl_intertwiner<S: Scalar>(a: &S, depth: usize, charge: &S) -> Result<HomSpace<S>> {
    let t = tensor_with_m(a, depth, charge)?;
    let v = verma(t.top(), depth);
    Ok(module_hom(&v, &t, &HomOptions::default()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, int, parse_element, BigQ};

    #[test]
    fn products() {
        let z: BigQ = int(3);
        let p = WeylElement::p(z.clone());
        let q = WeylElement::q(z.clone());
        assert_eq!((&p * &q).to_string(), "q p + 3");
        assert_eq!((&q * &p).to_string(), "q p");
        let p2 = &p * &p;
        assert_eq!((&p2 * &q).to_string(), "q p^2 + 6*p");
        assert!(weyl_multiply(&p, &WeylElement::q(int(2))).is_err());
    }

    #[test]
    fn phi_of_h_and_brackets() {
        let z: BigQ = frac(2, 5);
        let h = phi(&parse_element("h").unwrap(), &z).unwrap();
        assert_eq!(h.coeff(1, 1), frac(-5, 2));
        assert_eq!(h.coeff(0, 0), frac(-1, 2));
        let e = phi_generator(Generator::E, &z);
        let f = phi_generator(Generator::F, &z);
        assert_eq!(e.commutator(&f).unwrap(), h);
        assert!(matches!(phi(&parse_element::<BigQ>("e").unwrap(), &int(0)), Err(Error::ZeroCharge)));
    }

    #[test]
    fn module_m() {
        let m = weyl_module_m(&int::<BigQ>(2), 8).unwrap();
        assert!(m.satisfies_relations());
        assert_eq!(*m.action(Generator::H, 3).unwrap().get(0, 0), frac(-7, 2));
        assert_eq!(*m.action(Generator::P, 3).unwrap().get(0, 0), int(6));
    }

    #[test]
    fn tensor_is_verma_like() {
        let a: BigQ = frac(1, 3);
        let t = tensor_with_m(&a, 8, &int(1)).unwrap();
        assert!(t.satisfies_relations());
        let ch: Vec<usize> = (0..=8).map(|i| i / 2 + 1).collect();
        assert_eq!(t.character(), ch);
        assert_eq!(weyl_intertwiner(&a, 8, &int(1)).unwrap().dim, 1);
    }
}
