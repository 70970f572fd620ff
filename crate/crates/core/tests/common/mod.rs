#![allow(dead_code)]
//! Brute-force PBW rewriting, independent of the library's normal form.

use std::collections::BTreeMap;

use schrodinger_core::{int, Element, Generator, Monomial};

/// Position in the canonical order f < q < h < z < p < e.
pub fn rank(c: char) -> usize {
    "fqhzpe".find(c).unwrap()
}

/// The bracket table written out by hand, independent of the library.
pub fn table(x: char, y: char) -> Vec<(i64, char)> {
    let direct: &[(char, char, i64, char)] = &[
        ('h', 'e', 2, 'e'),
        ('e', 'f', 1, 'h'),
        ('h', 'f', -2, 'f'),
        ('e', 'q', 1, 'p'),
        ('h', 'p', 1, 'p'),
        ('f', 'p', 1, 'q'),
        ('h', 'q', -1, 'q'),
        ('p', 'q', 1, 'z'),
    ];
    for &(a, b, c, g) in direct {
        if (a, b) == (x, y) {
            return vec![(c, g)];
        }
        if (a, b) == (y, x) {
            return vec![(-c, g)];
        }
    }
    Vec::new()
}

/// Naive rewriting: repeatedly replace the leftmost misordered adjacent pair
/// `xy` by `yx + [x, y]` until every word is sorted.
pub fn naive_normal_form(word: &str) -> BTreeMap<String, i64> {
    let mut pending: Vec<(String, i64)> = vec![(word.to_string(), 1)];
    let mut done: BTreeMap<String, i64> = BTreeMap::new();
    while let Some((w, c)) = pending.pop() {
        let chars: Vec<char> = w.chars().collect();
        match (0..chars.len().saturating_sub(1)).find(|&i| rank(chars[i]) > rank(chars[i + 1])) {
            None => *done.entry(w).or_insert(0) += c,
            Some(i) => {
                let (x, y) = (chars[i], chars[i + 1]);
                let mut swapped = chars.clone();
                swapped.swap(i, i + 1);
                pending.push((swapped.into_iter().collect(), c));
                for (k, g) in table(x, y) {
                    let mut v: Vec<char> = chars[..i].to_vec();
                    v.push(g);
                    v.extend_from_slice(&chars[i + 2..]);
                    pending.push((v.into_iter().collect(), c * k));
                }
            }
        }
    }
    done.retain(|_, c| *c != 0);
    done
}

pub fn to_element(nf: &BTreeMap<String, i64>) -> Element {
    Element::from_terms(nf.iter().map(|(w, c)| {
        let mut e = [0u32; 6];
        for ch in w.chars() {
            e[rank(ch)] += 1;
        }
        (Monomial::new(e), int(*c))
    }))
}

pub fn word_product(word: &str) -> Element {
    word.chars().fold(Element::one(), |acc, ch| {
        acc.multiply(&Element::generator(Generator::from_symbol(ch).unwrap()))
    })
}

/// Every word in the six generators of length `1..=n`.
pub fn all_words(n: usize) -> Vec<String> {
    let mut out = Vec::new();
    let mut layer = vec![String::new()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w| "fqhzpe".chars().map(move |c| format!("{w}{c}")))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}
