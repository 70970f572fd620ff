mod common;

use std::collections::BTreeMap;

use common::{all_words, naive_normal_form, to_element, word_product};
use proptest::prelude::*;
use schrodinger_core::{int, parse_element, Element, Generator, Monomial, Rational};

#[test]
fn oracle_agrees_on_all_words_up_to_length_four() {
    let words = all_words(4);
    assert_eq!(words.len(), 6 + 36 + 216 + 1296);
    for v in &words {
        assert_eq!(word_product(v), to_element(&naive_normal_form(v)), "word {v}");
    }
}

#[test]
fn documented_products() {
    let p = |s: &str| parse_element::<Rational>(s).unwrap();
    assert_eq!(p("e*f"), p("f e + h"));
    assert_eq!(p("p*q"), p("q p + z"));
    assert_eq!(p("e*q^2"), to_element(&naive_normal_form("eqq")));
    assert_eq!(p("e*q^2"), p("q^2 e + 2*q p + z"));
    assert_eq!(p("f").bracket(&p("p^2")), p("2*q p + z"));
    assert_eq!(p("h").bracket(&p("e")), p("2*e"));
    assert_eq!(p("e f").sigma(), p("f e + h"));
    assert_eq!(p("e").sigma(), p("-f"));
}

#[test]
fn jacobi_on_all_generator_triples() {
    for x in Generator::ALL {
        for y in Generator::ALL {
            for z in Generator::ALL {
                let (a, b, c) = (Element::generator(x), Element::generator(y), Element::generator(z));
                let s = a.bracket(&b.bracket(&c)) + b.bracket(&c.bracket(&a)) + c.bracket(&a.bracket(&b));
                assert!(s.is_zero(), "{x} {y} {z}");
            }
        }
    }
}

#[test]
fn commutator_table_is_antisymmetric() {
    use schrodinger_core::commutator_table;
    for x in Generator::ALL {
        for y in Generator::ALL {
            let t = commutator_table::<Rational>(x, y);
            assert_eq!(t, -commutator_table::<Rational>(y, x));
            assert!(t.degree().unwrap_or(0) <= 1);
        }
    }
}

fn element(max_degree: u32) -> impl Strategy<Value = Element> {
    let term = (proptest::array::uniform6(0u32..=max_degree), -4i64..=4)
        .prop_filter("degree", move |(e, _)| e.iter().sum::<u32>() <= max_degree);
    proptest::collection::vec(term, 0..4)
        .prop_map(|ts| Element::from_terms(ts.into_iter().map(|(e, c)| (Monomial::new(e), int(c)))))
}

fn homogeneous(max_degree: u32) -> impl Strategy<Value = Element> {
    element(max_degree).prop_map(|u| {
        let comps = u.weight_components();
        comps.into_values().next().unwrap_or_else(Element::zero)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associativity(u in element(3), v in element(3), w in element(3)) {
        prop_assert_eq!(u.multiply(&v).multiply(&w), u.multiply(&v.multiply(&w)));
    }

    #[test]
    fn sigma_is_an_involutive_antiautomorphism(u in element(3), v in element(3)) {
        prop_assert_eq!(u.sigma().sigma(), u.clone());
        prop_assert_eq!(u.multiply(&v).sigma(), v.sigma().multiply(&u.sigma()));
    }

    #[test]
    fn weight_is_additive(u in homogeneous(3), v in homogeneous(3)) {
        let prod = u.multiply(&v);
        if !u.is_zero() && !v.is_zero() {
            let w = u.homogeneous_weight().unwrap() + v.homogeneous_weight().unwrap();
            for (m, _) in prod.terms() {
                prop_assert_eq!(m.h_weight(), w);
            }
        }
    }

    #[test]
    fn filtration_and_symbol(u in element(3), v in element(3)) {
        let prod = u.multiply(&v);
        if let (Some(du), Some(dv)) = (u.degree(), v.degree()) {
            prop_assert!(prod.degree().unwrap_or(0) <= du + dv);
            // Top part is the commutative product of the top parts.
            let top_u = u.homogeneous_part(du);
            let top_v = v.homogeneous_part(dv);
            let mut commutative: BTreeMap<Monomial, Rational> = BTreeMap::new();
            for (a, x) in top_u.terms() {
                for (b, y) in top_v.terms() {
                    let mut e = a.exponents();
                    for (k, bk) in b.exponents().iter().enumerate() {
                        e[k] += bk;
                    }
                    *commutative.entry(Monomial::new(e)).or_insert_with(|| int(0)) += x * y;
                }
            }
            let expected = Element::from_terms(commutative);
            prop_assert_eq!(prod.homogeneous_part(du + dv), expected);
        }
    }

    #[test]
    fn bilinearity(u in element(2), v in element(2), w in element(2)) {
        prop_assert_eq!(u.multiply(&(v.clone() + w.clone())), u.multiply(&v) + u.multiply(&w));
        prop_assert_eq!(u.bracket(&u), Element::zero());
    }

    #[test]
    fn display_round_trips(u in element(3)) {
        let back: Element = parse_element(&u.to_string()).unwrap();
        prop_assert_eq!(back, u);
    }
}
