//! Right multiplication of an ordered monomial by a single generator.
//!
//! Structure constants are integers, so products of monomials have integer
//! coefficients; results are memoised per thread independently of the
//! scalar type.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use super::{bracket_generators, Generator, Monomial};

pub(crate) type IntTerms = Rc<Vec<(Monomial, i128)>>;

thread_local! {
    static CACHE: RefCell<HashMap<(Monomial, Generator), IntTerms>> = RefCell::new(HashMap::new());
}

/// Normal form of `m · g`.
///
/// Writing `m = m' y` with `y` the largest letter of `m`, if `y > g` then
/// `m g = (m' g) y + m' [y, g]`. Every letter of `m' g` and of `m' [y,g]`
/// is at most `y`, so appending `y` keeps PBW order.
pub(crate) fn mono_times_gen(m: &Monomial, g: Generator) -> IntTerms {
    if let Some(hit) = CACHE.with(|c| c.borrow().get(&(*m, g)).cloned()) {
        return hit;
    }
    let result = Rc::new(compute(m, g));
    CACHE.with(|c| c.borrow_mut().insert((*m, g), result.clone()));
    result
}

fn compute(m: &Monomial, g: Generator) -> Vec<(Monomial, i128)> {
    let y = match m.last() {
        Some(y) if y > g => y,
        _ => return vec![(m.bump(g, 1), 1)],
    };
    let prefix = m.bump(y, -1);
    let mut acc: HashMap<Monomial, i128> = HashMap::new();
    for (t, c) in mono_times_gen(&prefix, g).iter() {
        *acc.entry(t.bump(y, 1)).or_insert(0) += c;
    }
    for (x, k) in bracket_generators(y, g) {
        for (t, c) in mono_times_gen(&prefix, x).iter() {
            let v = c
                .checked_mul(k as i128)
                .expect("structure coefficient overflow");
            let slot = acc.entry(*t).or_insert(0);
            *slot = slot.checked_add(v).expect("structure coefficient overflow");
        }
    }
    let mut out: Vec<(Monomial, i128)> = acc.into_iter().filter(|e| e.1 != 0).collect();
    out.sort_by_key(|e| e.0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn ordered_append_is_trivial() {
        let m = Monomial::new([1, 0, 0, 0, 0, 0]);
        assert_eq!(&*mono_times_gen(&m, E), &[(Monomial::new([1, 0, 0, 0, 0, 1]), 1)]);
    }

    #[test]
    fn e_times_f() {
        let e = Monomial::generator(E);
        let r = mono_times_gen(&e, F);
        assert_eq!(
            &*r,
            &[(Monomial::generator(H), 1), (Monomial::new([1, 0, 0, 0, 0, 1]), 1)]
        );
    }
}
