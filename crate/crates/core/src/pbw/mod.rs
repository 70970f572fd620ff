//! PBW normal forms in the enveloping algebra of the Schrödinger algebra.
//!
//! Generators are ordered `f < q < h < z < p < e` (negative part, Cartan,
//! positive part) and every element is stored as an exact linear
//! combination of ordered monomials `f^a q^b h^c z^d p^s e^t`.

mod element;
mod parse;
mod rewrite;

pub use element::AlgebraElement;
pub(crate) use element::{pow_scalar, write_term};
pub use parse::parse_element;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The six basis elements of the Lie algebra, in PBW order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    F = 0,
    Q = 1,
    H = 2,
    Z = 3,
    P = 4,
    E = 5,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::F,
        Generator::Q,
        Generator::H,
        Generator::Z,
        Generator::P,
        Generator::E,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Generator {
        Self::ALL[i]
    }

    pub fn symbol(self) -> char {
        match self {
            Generator::F => 'f',
            Generator::Q => 'q',
            Generator::H => 'h',
            Generator::Z => 'z',
            Generator::P => 'p',
            Generator::E => 'e',
        }
    }

    pub fn from_symbol(c: char) -> Option<Generator> {
        Self::ALL.into_iter().find(|g| g.symbol() == c)
    }

    /// Eigenvalue of `ad h`.
    pub fn h_weight(self) -> i32 {
        match self {
            Generator::F => -2,
            Generator::Q => -1,
            Generator::H | Generator::Z => 0,
            Generator::P => 1,
            Generator::E => 2,
        }
    }

    /// Degree in the grading with `deg p = deg q = 1`.
    pub fn pq_degree(self) -> i32 {
        match self {
            Generator::Q | Generator::P => 1,
            _ => 0,
        }
    }

    /// Change of depth (distance below the highest weight) when acting on a
    /// weight vector.
    pub fn depth_shift(self) -> isize {
        -(self.h_weight() as isize)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Structure constants: `[x, y]` as a sparse combination of generators.
pub(crate) fn bracket_generators(x: Generator, y: Generator) -> Vec<(Generator, i64)> {
    use Generator::*;
    let direct = |a: Generator, b: Generator| -> Option<Vec<(Generator, i64)>> {
        Some(match (a, b) {
            (H, E) => vec![(E, 2)],
            (E, F) => vec![(H, 1)],
            (H, F) => vec![(F, -2)],
            (E, Q) => vec![(P, 1)],
            (H, P) => vec![(P, 1)],
            (F, P) => vec![(Q, 1)],
            (H, Q) => vec![(Q, -1)],
            (P, Q) => vec![(Z, 1)],
            _ => return None,
        })
    };
    if let Some(v) = direct(x, y) {
        v
    } else if let Some(v) = direct(y, x) {
        v.into_iter().map(|(g, c)| (g, -c)).collect()
    } else {
        Vec::new()
    }
}

/// An ordered monomial `f^a q^b h^c z^d p^s e^t`.
///
/// Monomials are ordered by total degree first and then lexicographically
/// on the exponent vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Monomial(pub [u32; 6]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 6]);

    pub fn new(exps: [u32; 6]) -> Self {
        Monomial(exps)
    }

    pub fn generator(g: Generator) -> Self {
        let mut e = [0; 6];
        e[g.index()] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        self.0[g.index()]
    }

    pub fn exponents(&self) -> [u32; 6] {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn h_weight(&self) -> i32 {
        Generator::ALL
            .iter()
            .map(|g| g.h_weight() * self.0[g.index()] as i32)
            .sum()
    }

    pub fn pq_degree(&self) -> u32 {
        self.0[Generator::Q.index()] + self.0[Generator::P.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 6]
    }

    /// The word of generators spelled out in PBW order.
    pub fn letters(&self) -> impl Iterator<Item = Generator> + '_ {
        Generator::ALL
            .into_iter()
            .flat_map(move |g| std::iter::repeat_n(g, self.0[g.index()] as usize))
    }

    /// Largest generator occurring, if any.
    pub(crate) fn last(&self) -> Option<Generator> {
        (0..6).rev().find(|&i| self.0[i] > 0).map(Generator::from_index)
    }

    pub(crate) fn bump(mut self, g: Generator, by: i32) -> Self {
        self.0[g.index()] = (self.0[g.index()] as i32 + by) as u32;
        self
    }

    /// All monomials of total degree at most `d`, in increasing order.
    pub fn up_to_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = [0u32; 6];
        fn rec(i: usize, left: u32, cur: &mut [u32; 6], out: &mut Vec<Monomial>) {
            if i == 6 {
                out.push(Monomial(*cur));
                return;
            }
            for k in 0..=left {
                cur[i] = k;
                rec(i + 1, left - k, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for g in Generator::ALL {
            let k = self.exponent(g);
            if k == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `[x, y]` for two generators.
pub fn commutator_table<S: crate::Scalar>(x: Generator, y: Generator) -> AlgebraElement<S> {
    AlgebraElement::from_terms(
        bracket_generators(x, y)
            .into_iter()
            .map(|(g, c)| (Monomial::generator(g), S::from_i64(c))),
    )
}
