//! End-to-end acceptance run: one line per criterion, nonzero exit on any
//! failure.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use schrodinger_core::annihilators::{compare_slices, intersection_check, SliceComparison};
use schrodinger_core::blocks::{
    bgg_check, ext1, findim_projective, indecomposable_projective, tensor_findim, truncated_projective, BlockType,
};
use schrodinger_core::central::{casimir, center_basis, central_character, hc_homomorphism, HCPolynomial};
use schrodinger_core::module::{dual_module, sl2_simple, sl2_verma, tensor_modules};
use schrodinger_core::verma::{
    composition_multiplicities, radical_module, simple_module, singular_vectors, verma, verma_hom,
};
use schrodinger_core::weyl::{phi, phi_generator, tensor_with_m, weyl_intertwiner, weyl_module_m};
use schrodinger_core::{frac, int, Element, Generator, Monomial, QModule, QWeight, Rational, Weight};

fn w(h: Rational, z: Rational) -> QWeight {
    Weight::new(h, z)
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Runs `check`, failing it if it exceeds `limit`.
fn run(n: usize, name: &str, limit: Option<Duration>, check: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut o = check();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            o.pass = false;
            o.detail = format!("{}; over the {:?} limit", o.detail, limit);
        }
    }
    let verdict = if o.pass { "PASS" } else { "FAIL" };
    println!("criterion {n:>2} {verdict}  {name}: {} [{:.2?}]", o.detail, elapsed);
    o.pass
}

fn casimir_centrality() -> Outcome {
    let c = casimir::<Rational>();
    let nonzero: Vec<String> = Generator::ALL
        .iter()
        .filter(|&&g| !c.bracket(&Element::generator(g)).is_zero())
        .map(|g| g.to_string())
        .collect();
    outcome(nonzero.is_empty(), format!("[c, g] = 0 for all six generators; failing: {nonzero:?}"))
}

fn harish_chandra_image() -> Outcome {
    let z = HCPolynomial::z();
    let shifted = HCPolynomial::h() + HCPolynomial::constant(frac(3, 2));
    let expected = &z * &shifted.pow(2) - &z * &HCPolynomial::constant(frac(1, 4));
    let got = hc_homomorphism(&casimir::<Rational>()).unwrap();
    outcome(got == expected, format!("image {got}"))
}

fn verma_dimensions() -> Outcome {
    let weights = [
        w(frac(1, 3), int(1)),
        w(frac(-1, 2), int(1)),
        w(int(2), int(1)),
        w(frac(1, 3), int(0)),
        w(int(0), int(0)),
    ];
    let mut types: Vec<BlockType> = weights.iter().map(BlockType::of).collect();
    types.dedup();
    // Monomials f^a q^b with 2a + b = i.
    let count = |i: usize| (0..=i).filter(|a| 2 * a <= i).count();
    let ok = weights.iter().all(|l| {
        let m = verma(l, 20);
        (0..=20).all(|i| m.dim(i) == count(i) && m.dim(i) == i / 2 + 1)
    });
    outcome(ok && types.len() == 5, format!("5 weights, {} block types, depth 20", types.len()))
}

fn central_character_criterion() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for twice in -10..=10 {
        let h = frac::<Rational>(twice, 2);
        for z in [1, 2] {
            for n in 1..=10 {
                let same = central_character(&w(h.clone(), int(z))) == central_character(&w(h.clone() - int::<Rational>(n), int(z)));
                if same != (h == frac(n - 3, 2)) {
                    bad.push(format!("({h}, {z}, {n})"));
                }
                checked += 1;
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} triples, mismatches {bad:?}"))
}

/// `u v_λ` as coefficients of `f^a q^b v_λ`.
fn on_top(u: &Element, l: &QWeight) -> BTreeMap<(u32, u32), Rational> {
    let mut out: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
    for (m, c) in u.terms() {
        let [a, b, hc, zc, s, t] = m.exponents();
        if s + t > 0 {
            continue;
        }
        let mut x = c.clone();
        for _ in 0..hc {
            x *= l.h.clone();
        }
        for _ in 0..zc {
            x *= l.z.clone();
        }
        let e = out.entry((a, b)).or_insert_with(|| int(0));
        *e = e.clone() + x;
    }
    out.retain(|_, c| *c != int(0));
    out
}

/// Whether `u v_λ` is killed by `e` and `p`, checked in the algebra.
fn singular_in_algebra(u: &Element, l: &QWeight) -> bool {
    [Generator::E, Generator::P].iter().all(|&g| on_top(&Element::generator(g).multiply(u), l).is_empty())
}

fn singular_vector_criterion() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    // (a) the half-integral weight with partner two steps below.
    for z in [1i64, 2, -3] {
        let l = w(frac(-1, 2), int(z));
        let m = verma(&l, 4);
        let s1 = singular_vectors(&m, 1).unwrap();
        let s2 = singular_vectors(&m, 2).unwrap();
        let u = Element::monomial(Monomial::new([1, 0, 0, 0, 0, 0]), int(2 * z))
            + Element::monomial(Monomial::new([0, 2, 0, 0, 0, 0]), int(1));
        // Space 2 is ordered [q² v, f v].
        let matches = s2.len() == 1 && s2[0][1] == s2[0][0].clone() * int::<Rational>(2 * z);
        ok &= s1.is_empty() && matches && singular_in_algebra(&u, &l);
    }
    notes.push("(a) (2żf + q²)v unique at depth 2");
    // (b) simple Vermas.
    for l in [w(frac(1, 3), int(1)), w(frac(2, 5), int(-2)), w(int(2), int(1)), w(int(-3), int(2))] {
        let m = verma(&l, 12);
        ok &= (1..=12).all(|i| singular_vectors(&m, i).unwrap().is_empty());
    }
    notes.push("(b) none at depths 1..12");
    // (c) zero charge.
    for h in [frac::<Rational>(1, 3), int(0), int(4)] {
        let l = w(h, int(0));
        let q = Element::generator(Generator::Q);
        ok &= singular_vectors(&verma(&l, 3), 1).unwrap() == vec![vec![int::<Rational>(1)]];
        ok &= singular_in_algebra(&q, &l);
    }
    notes.push("(c) q v at depth 1");
    outcome(ok, notes.join(", "))
}

fn gamma_ext(i: i64, j: i64) -> usize {
    let one = |a: i64, b: i64| (a != 0 && b == a - 1) || (a >= 0 && b == -a - 2);
    usize::from(one(i, j) || one(j, i))
}

fn ext_tables() -> Outcome {
    let d = 14;
    let mut bad = Vec::new();
    let l = w(frac(1, 3), int(0));
    for i in 0..=5usize {
        for j in 0..=5usize {
            if ext1(&l, i, j, d).unwrap() != usize::from(i.abs_diff(j) == 1) {
                bad.push(format!("non-integral ({i}, {j})"));
            }
        }
    }
    // Simples L(i h∨), |i| ≤ 4, all lie at or below (4, 0).
    let top = w(int(4), int(0));
    for i in -4..=4i64 {
        for j in -4..=4i64 {
            if ext1(&top, (4 - i) as usize, (4 - j) as usize, d).unwrap() != gamma_ext(i, j) {
                bad.push(format!("integral ({i}, {j})"));
            }
        }
    }
    // Two-vertex block: dominant λ over r·λ, one arrow each way, ab = 0.
    let l = w(frac(-1, 2), int(1));
    let n = l.depth_of(&l.dot_reflect()).unwrap();
    let cm = composition_multiplicities(&l, 2 * n + 4);
    let layers: Vec<usize> = cm.iter().filter(|(_, &m)| m > 0).map(|(&k, _)| k).collect();
    let two_vertex = ext1(&l, 0, n, d).unwrap() == 1
        && ext1(&l, n, 0, d).unwrap() == 1
        && ext1(&l, 0, 0, d).unwrap() == 0
        && verma_hom(&l.dot_reflect(), &l, d).unwrap() == 1
        && layers == [0, n]
        && simple_module(&l.dot_reflect(), d).character() == verma(&l.dot_reflect(), d).character();
    if !two_vertex {
        bad.push("half-integral block".into());
    }
    outcome(bad.is_empty(), format!("(1/3, 0) on 0..=5, Γ formula on |i|, |j| ≤ 4, ab = 0 block; mismatches {bad:?}"))
}

fn bgg() -> Outcome {
    let mut ok = true;
    for l in [w(frac(1, 3), int(0)), w(int(0), int(0))] {
        for k in 0..=3 {
            ok &= bgg_check(&l, k, 12).unwrap();
        }
    }
    outcome(ok, "(1/3, 0) and (0, 0), k ≤ 3, depth 12")
}

fn finite_dimensional_part() -> Outcome {
    let mut ok = true;
    for i in 0..=4 {
        let t = findim_projective::<Rational>(i, 4);
        ok &= t.layers.iter().all(|layer| layer.dim == (i + 1) * (layer.j + 1));
        let split: Vec<usize> = if i == 0 { vec![1] } else { vec![i + 1, i - 1] };
        ok &= t.layers[1].summands == split;
    }
    // Degree-one layer of P(λ − h∨) in a non-integral block: the sl₂-Vermas
    // at λ and λ − 2h∨.
    let p = indecomposable_projective(&w(frac(1, 3), int(0)), 1, 8).unwrap();
    let gc = p.graded_character().unwrap();
    let layer: Vec<usize> = (0..=8).map(|i| gc.get(&(i, 1)).copied().unwrap_or(0)).collect();
    ok &= layer == [1, 0, 2, 0, 2, 0, 2, 0, 2];
    outcome(ok, "dims (i+1)(j+1) for i, j ≤ 4; degree-one layers split as L(i±1)")
}

fn weyl_realization() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut brackets = true;
    let mut chars = true;
    let mut homs = true;
    for _ in 0..10 {
        let a = frac::<Rational>(rng.gen_range(-12..=12), rng.gen_range(1..=5));
        let z = frac::<Rational>(
            rng.gen_range(1..=6) * if rng.gen_bool(0.5) { 1 } else { -1 },
            rng.gen_range(1..=4),
        );
        for x in Generator::ALL {
            for y in Generator::ALL {
                let lhs = phi(&Element::generator(x).bracket(&Element::generator(y)), &z).unwrap();
                brackets &= lhs == phi_generator(x, &z).commutator(&phi_generator(y, &z)).unwrap();
            }
        }
        let t = tensor_with_m(&a, 12, &z).unwrap();
        chars &= t.satisfies_relations() && t.character() == verma(t.top(), 12).character();
        homs &= weyl_intertwiner(&a, 12, &z).unwrap().dim == 1;
    }
    outcome(
        brackets && chars && homs,
        format!("10 random (a, ż): brackets {brackets}, characters {chars}, intertwiners {homs}"),
    )
}

fn center() -> Outcome {
    let mut dims = Vec::new();
    let mut ok = true;
    for d in 0..=6u32 {
        let expected = (0..=d).flat_map(|b| (0..=d).map(move |a| (a, b))).filter(|(a, b)| a + 3 * b <= d).count();
        let got = center_basis::<Rational>(d).unwrap().len();
        ok &= got == expected;
        dims.push(got);
    }
    outcome(ok, format!("dimensions {dims:?}"))
}

fn annihilators() -> Outcome {
    let weights = [
        w(frac(1, 3), int(1)),
        w(frac(-2, 5), int(-1)),
        w(frac(-1, 2), int(1)),
        w(frac(1, 2), int(2)),
        w(frac(-3, 2), int(1)),
        w(int(2), int(1)),
        w(int(-1), frac(1, 2)),
        w(frac(1, 3), int(0)),
        w(frac(1, 2), int(0)),
        w(int(0), int(0)),
        w(int(3), int(0)),
        w(int(-2), int(0)),
    ];
    let mut types: Vec<&str> = weights.iter().map(|l| BlockType::of(l).name()).collect();
    types.sort_unstable();
    types.dedup();
    let mut bad = Vec::new();
    for l in &weights {
        for d in 1..=3 {
            let c = compare_slices(l, d).unwrap();
            if c != SliceComparison::Equal {
                bad.push(format!("{l} d={d}: {c}"));
            }
        }
    }
    let sample: Vec<QWeight> = [(1, 3, 1), (2, 7, 2), (-5, 3, -1), (1, 5, 3), (7, 4, -2), (-1, 7, 1), (3, 5, 5), (-8, 3, 2)]
        .iter()
        .map(|&(n, d, z)| w(frac(n, d), int(z)))
        .collect();
    let meet = intersection_check(&sample, 3).unwrap();
    outcome(
        bad.is_empty() && types.len() == 5 && meet == 0,
        format!("12 weights over {} block types at d ≤ 3, unequal {bad:?}; 8-weight meet at d = 3 has dim {meet}", types.len()),
    )
}

fn element(max_degree: u32) -> impl Strategy<Value = Element> {
    let term = (proptest::array::uniform6(0u32..=max_degree), -4i64..=4)
        .prop_filter("degree", move |(e, _)| e.iter().sum::<u32>() <= max_degree);
    proptest::collection::vec(term, 0..4)
        .prop_map(|ts| Element::from_terms(ts.into_iter().map(|(e, c)| (Monomial::new(e), int(c)))))
}

fn property_suites() -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 200, failure_persistence: None, ..Config::default() });
    let triple = (element(3), element(3), element(3));
    let assoc = runner
        .run(&triple, |(u, v, x)| {
            prop_assert_eq!(u.multiply(&v).multiply(&x), u.multiply(&v.multiply(&x)));
            Ok(())
        })
        .is_ok();
    let jacobi = runner
        .run(&triple, |(u, v, x)| {
            let s = u.bracket(&v.bracket(&x)) + v.bracket(&x.bracket(&u)) + x.bracket(&u.bracket(&v));
            prop_assert!(s.is_zero());
            Ok(())
        })
        .is_ok();
    let sigma = runner
        .run(&(element(3), element(3)), |(u, v)| {
            prop_assert_eq!(u.sigma().sigma(), u.clone());
            prop_assert_eq!(u.multiply(&v).sigma(), v.sigma().multiply(&u.sigma()));
            Ok(())
        })
        .is_ok();
    let words = common::all_words(4);
    let rewriter = words.iter().all(|v| common::word_product(v) == common::to_element(&common::naive_normal_form(v)));

    let d = 10;
    let mut modules: Vec<(String, QModule)> = Vec::new();
    for l in [w(frac(1, 3), int(1)), w(frac(-1, 2), int(1)), w(int(1), int(1)), w(frac(1, 3), int(0)), w(int(0), int(0))] {
        modules.push((format!("verma {l}"), verma(&l, d)));
        modules.push((format!("simple {l}"), simple_module(&l, d)));
        modules.push((format!("radical {l}"), radical_module(&l, d)));
        modules.push((format!("dual {l}"), dual_module(&verma(&l, d))));
        modules.push((format!("V(2) tensor {l}"), tensor_findim(&verma(&l, d), 2)));
        if l.is_zero_charge() {
            modules.push((format!("projective {l}"), truncated_projective(&l, 3, d).unwrap()));
            modules.push((format!("indecomposable projective {l}"), indecomposable_projective(&l, 3, d).unwrap()));
        }
    }
    modules.push(("weyl M".into(), weyl_module_m(&frac(2, 3), d).unwrap()));
    modules.push(("M tensor sl2 Verma".into(), tensor_with_m(&frac(1, 4), d, &int(-1)).unwrap()));
    modules.push(("sl2 Verma".into(), sl2_verma(frac(5, 2), d)));
    modules.push(("sl2 simple".into(), sl2_simple(4, d)));
    modules.push(("sl2 tensor".into(), tensor_modules(&sl2_simple(3, d), &sl2_verma(int(1), d), d)));
    let broken: Vec<&str> =
        modules.iter().filter(|(_, m)| !m.satisfies_relations()).map(|(n, _)| n.as_str()).collect();

    outcome(
        assoc && jacobi && sigma && rewriter && broken.is_empty(),
        format!(
            "associativity {assoc}, Jacobi {jacobi}, σ {sigma} (200 cases each); rewriter on {} words {rewriter}; {} modules, broken {broken:?}",
            words.len(),
            modules.len()
        ),
    )
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let results = [
        run(1, "Casimir centrality", Some(s(1)), casimir_centrality),
        run(2, "Harish-Chandra image of c", None, harish_chandra_image),
        run(3, "Verma dimensions", None, verma_dimensions),
        run(4, "central-character criterion", None, central_character_criterion),
        run(5, "singular vectors", Some(s(10)), singular_vector_criterion),
        run(6, "Ext tables", Some(s(60)), ext_tables),
        run(7, "BGG reciprocity", None, bgg),
        run(8, "finite-dimensional part", None, finite_dimensional_part),
        run(9, "Weyl realization", None, weyl_realization),
        run(10, "center", Some(s(120)), center),
        run(11, "annihilators", None, annihilators),
        run(12, "property suites", None, property_suites),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
