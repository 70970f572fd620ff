use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Scalar;

/// A weight `λ`, recorded by its values `λ(h)` and `λ(z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight<S> {
    pub h: S,
    pub z: S,
}

impl<S: Scalar> Weight<S> {
    pub fn new(h: S, z: S) -> Self {
        Weight { h, z }
    }

    pub fn from_ints(h: i64, z: i64) -> Self {
        Weight::new(S::from_i64(h), S::from_i64(z))
    }

    /// `λ − k h∨`.
    pub fn shift(&self, k: i64) -> Self {
        Weight::new(self.h.clone() - S::from_i64(k), self.z.clone())
    }

    /// The dot action of the nontrivial Weyl group element:
    /// `r·λ = −λ − 3h∨` on the h-value, with the charge unchanged.
    pub fn dot_reflect(&self) -> Self {
        Weight::new(-self.h.clone() - S::from_i64(3), self.z.clone())
    }

    pub fn is_zero_charge(&self) -> bool {
        self.z.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.h.is_integer()
    }

    pub fn is_half_integral(&self) -> bool {
        !self.h.is_integer() && self.h.is_half_integer_multiple()
    }

    /// `k` such that `other = self − k h∨`, when it is a nonnegative
    /// integer and the charges agree.
    pub fn depth_of(&self, other: &Self) -> Option<usize> {
        if self.z != other.z {
            return None;
        }
        let d = (self.h.clone() - other.h.clone()).to_i64_exact()?;
        usize::try_from(d).ok()
    }

    /// Integer `k` with `other.h = self.h − k`, if any.
    pub fn offset_to(&self, other: &Self) -> Option<i64> {
        (self.h.clone() - other.h.clone()).to_i64_exact()
    }
}

impl<S: Scalar> fmt::Display for Weight<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.h, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, BigQ};

    #[test]
    fn dot_reflection_is_involutive() {
        let l: Weight<BigQ> = Weight::new(frac(-1, 2), frac(1, 1));
        assert_eq!(l.dot_reflect().h, frac(-5, 2));
        assert_eq!(l.dot_reflect().dot_reflect(), l);
        let fixed: Weight<BigQ> = Weight::new(frac(-3, 2), frac(2, 1));
        assert_eq!(fixed.dot_reflect(), fixed);
    }

    #[test]
    fn predicates() {
        let w: Weight<BigQ> = Weight::new(frac(1, 3), frac(0, 1));
        assert!(w.is_zero_charge() && !w.is_integral() && !w.is_half_integral());
        assert!(Weight::<BigQ>::new(frac(7, 2), frac(1, 1)).is_half_integral());
        assert_eq!(w.depth_of(&w.shift(3)), Some(3));
        assert_eq!(w.shift(3).depth_of(&w), None);
    }
}
