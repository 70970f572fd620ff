//! Finite quivers with relations, with DOT and JSON output.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::BlockType;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: i64,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: i64,
    pub target: i64,
}

/// A path written in composition order: `"ab"` means `b` first, then `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathTerm {
    pub coeff: i64,
    pub path: Vec<String>,
}

/// `Σ coeff · path = 0`, every path starting and ending at `vertex`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub vertex: i64,
    pub terms: Vec<PathTerm>,
}

impl Relation {
    fn new(vertex: i64, terms: &[(i64, &[&str])]) -> Self {
        Relation {
            vertex,
            terms: terms
                .iter()
                .map(|(c, p)| PathTerm { coeff: *c, path: p.iter().map(|s| s.to_string()).collect() })
                .collect(),
        }
    }

    /// `"ab = ba"` for a difference of two paths, `"ab = 0"` for a single one.
    pub fn display(&self) -> String {
        let word = |t: &PathTerm| t.path.concat();
        match self.terms.as_slice() {
            [t] => format!("{} = 0", word(t)),
            [s, t] if s.coeff == -t.coeff => format!("{} = {}", word(s), word(t)),
            ts => {
                let parts: Vec<String> = ts.iter().map(|t| format!("{}*{}", t.coeff, word(t))).collect();
                format!("{} = 0", parts.join(" + "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverPresentation {
    pub name: String,
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    /// Set when the relations of the block are not determined, in which
    /// case `relations` is empty and only the Gabriel quiver is given.
    pub relations_unknown: bool,
}

impl QuiverPresentation {
    /// Follow a written path from `start`, rightmost arrow first. `None` if
    /// some arrow is missing or ambiguous.
    pub fn walk(&self, start: i64, path: &[String]) -> Option<i64> {
        let mut at = start;
        for name in path.iter().rev() {
            let mut out = self.arrows.iter().filter(|a| a.source == at && &a.name == name);
            let arrow = out.next()?;
            if out.next().is_some() {
                return None;
            }
            at = arrow.target;
        }
        Some(at)
    }

    /// Every relation is a combination of paths that start and end at its
    /// vertex.
    pub fn is_well_formed(&self) -> bool {
        let ids: Vec<i64> = self.vertices.iter().map(|v| v.id).collect();
        self.arrows.iter().all(|a| ids.contains(&a.source) && ids.contains(&a.target))
            && self.relations.iter().all(|r| {
                !r.terms.is_empty()
                    && r.terms.iter().all(|t| self.walk(r.vertex, &t.path) == Some(r.vertex))
            })
    }

    /// Number of arrows from `i` to `j`.
    pub fn arrow_count(&self, i: i64, j: i64) -> usize {
        self.arrows.iter().filter(|a| a.source == i && a.target == j).count()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        writeln!(s, "digraph \"{}\" {{", self.name).unwrap();
        if self.relations_unknown {
            writeln!(s, "  // relations: unknown").unwrap();
        } else if !self.relations.is_empty() {
            writeln!(s, "  // relations:").unwrap();
            for r in &self.relations {
                writeln!(s, "  //   {} (at {})", r.display(), r.vertex).unwrap();
            }
        }
        for v in &self.vertices {
            writeln!(s, "  \"{}\" [label=\"{}\"];", v.id, v.label).unwrap();
        }
        for a in &self.arrows {
            writeln!(s, "  \"{}\" -> \"{}\" [label=\"{}\"];", a.source, a.target, a.name).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

fn arrow(name: &str, source: i64, target: i64) -> Arrow {
    Arrow { name: name.to_string(), source, target }
}

fn vertex(id: i64, label: impl Into<String>) -> Vertex {
    Vertex { id, label: label.into() }
}

/// The quiver of a block of type `t`, truncated to about `n` vertices
/// where the block is infinite.
///
/// * `NonzeroGeneric`: one vertex.
/// * `NonzeroHalfInteger`: vertex 1 (dominant) and 2 (its dot partner),
///   `b: 1 → 2`, `a: 2 → 1`, `ab = 0`.
/// * `NonzeroInteger`: vertices 1 and 2, no arrows.
/// * `ZeroNonIntegral`: vertices `0..n` (vertex `i` is `L(λ − i h∨)`),
///   `a: i+1 → i`, `b: i → i+1`, `ab = 0` at 0, `ab = ba` inside and
///   `ba = 0` at the last vertex, where `ab` would leave the truncation.
/// * `ZeroIntegral`: vertex `i` is `L(i h∨)`; top row `0..n` with
///   `a: i → i+1`, `b: i+1 → i`; bottom row `−1..=−(n+1)` with
///   `b': −1 → −2`, `a': −2 → −1` and `b`, `a` further down; `s: i → −i−2`
///   and `t: −i−2 → i`. Relations unknown.
pub fn quiver(t: BlockType, n: usize) -> QuiverPresentation {
    assert!(n >= 1, "a quiver needs a vertex");
    let n = n as i64;
    match t {
        BlockType::NonzeroGeneric => QuiverPresentation {
            name: "C".into(),
            vertices: vec![vertex(0, "0")],
            arrows: vec![],
            relations: vec![],
            relations_unknown: false,
        },
        BlockType::NonzeroHalfInteger => QuiverPresentation {
            name: "A2 with ab=0".into(),
            vertices: vec![vertex(1, "1"), vertex(2, "2")],
            arrows: vec![arrow("a", 2, 1), arrow("b", 1, 2)],
            relations: vec![Relation::new(1, &[(1, &["a", "b"])])],
            relations_unknown: false,
        },
        BlockType::NonzeroInteger => QuiverPresentation {
            name: "C+C".into(),
            vertices: vec![vertex(1, "1"), vertex(2, "2")],
            arrows: vec![],
            relations: vec![],
            relations_unknown: false,
        },
        BlockType::ZeroNonIntegral => {
            let vertices = (0..n).map(|i| vertex(i, i.to_string())).collect();
            let mut arrows = Vec::new();
            for i in 0..n - 1 {
                arrows.push(arrow("a", i + 1, i));
                arrows.push(arrow("b", i, i + 1));
            }
            let mut relations = Vec::new();
            if n > 1 {
                relations.push(Relation::new(0, &[(1, &["a", "b"])]));
                for i in 1..n - 1 {
                    relations.push(Relation::new(i, &[(1, &["a", "b"]), (-1, &["b", "a"])]));
                }
                relations.push(Relation::new(n - 1, &[(1, &["b", "a"])]));
            }
            QuiverPresentation {
                name: format!("infinity-Q truncated to {n} vertices"),
                vertices,
                arrows,
                relations,
                relations_unknown: false,
            }
        }
        BlockType::ZeroIntegral => {
            let mut vertices: Vec<Vertex> = (0..n).map(|i| vertex(i, i.to_string())).collect();
            vertices.extend((1..=n + 1).map(|k| vertex(-k, (-k).to_string())));
            let mut arrows = Vec::new();
            for i in 0..n - 1 {
                arrows.push(arrow("a", i, i + 1));
                arrows.push(arrow("b", i + 1, i));
            }
            if n >= 1 {
                arrows.push(arrow("b'", -1, -2));
                arrows.push(arrow("a'", -2, -1));
            }
            for k in 2..=n {
                arrows.push(arrow("b", -k, -k - 1));
                arrows.push(arrow("a", -k - 1, -k));
            }
            for i in 0..n {
                arrows.push(arrow("s", i, -i - 2));
                arrows.push(arrow("t", -i - 2, i));
            }
            QuiverPresentation {
                name: format!("Gamma truncated to {} vertices", 2 * n + 1),
                vertices,
                arrows,
                relations: vec![],
                relations_unknown: true,
            }
        }
    }
}
