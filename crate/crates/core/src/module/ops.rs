use crate::linalg::{densify, sparsify, Matrix, Subspace};
use crate::pbw::Generator;
use crate::weight::Weight;
use crate::Scalar;

use super::TruncatedModule;

fn combination_label<S: Scalar>(labels: &[String], v: &[(usize, S)]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|(i, c)| if c.is_one() { labels[*i].clone() } else { format!("{c}*{}", labels[*i]) })
        .collect();
    parts.join(" + ")
}

/// The submodule spanned, space by space, by `subs`. The subspaces must be
/// stable under every available action matrix.
pub fn submodule<S: Scalar>(m: &TruncatedModule<S>, subs: &[Subspace<S>]) -> TruncatedModule<S> {
    assert_eq!(subs.len(), m.depth() + 1);
    let bases: Vec<Vec<Vec<(usize, S)>>> = subs.iter().map(Subspace::basis).collect();
    let pivots: Vec<Vec<usize>> = subs.iter().map(Subspace::pivots).collect();
    let labels = bases
        .iter()
        .enumerate()
        .map(|(i, b)| b.iter().map(|v| combination_label(m.labels(i), v)).collect())
        .collect();
    let grades = m.grades.as_ref().and_then(|gr| {
        bases
            .iter()
            .enumerate()
            .map(|(i, b)| {
                b.iter()
                    .map(|v| {
                        let g = gr[i][v[0].0];
                        v.iter().all(|(k, _)| gr[i][*k] == g).then_some(g)
                    })
                    .collect::<Option<Vec<i32>>>()
            })
            .collect::<Option<Vec<Vec<i32>>>>()
    });
    TruncatedModule::from_parts(m.top().clone(), m.depth(), labels, grades, |g, i, j| {
        let x = m.action(g, i).expect("target in range");
        let mut out = Matrix::zeros(bases[j].len(), bases[i].len());
        for (col, v) in bases[i].iter().enumerate() {
            let w = x.apply(&densify(v, m.dim(i)));
            debug_assert!(subs[j].contains(&sparsify(&w)), "subspace not stable");
            for (row, &p) in pivots[j].iter().enumerate() {
                out.set(row, col, w[p].clone());
            }
        }
        out
    })
}

/// The quotient by the submodule spanned by `subs`, with basis the
/// coordinate vectors outside the pivots of each subspace.
pub fn quotient_module<S: Scalar>(
    m: &TruncatedModule<S>,
    subs: &[Subspace<S>],
) -> TruncatedModule<S> {
    assert_eq!(subs.len(), m.depth() + 1);
    let comp: Vec<Vec<usize>> = subs
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let piv = s.pivots();
            (0..m.dim(i)).filter(|c| !piv.contains(c)).collect()
        })
        .collect();
    let labels = comp
        .iter()
        .enumerate()
        .map(|(i, cs)| cs.iter().map(|&c| m.labels(i)[c].clone()).collect())
        .collect();
    let grades = m.grades.as_ref().map(|gr| {
        comp.iter()
            .enumerate()
            .map(|(i, cs)| cs.iter().map(|&c| gr[i][c]).collect())
            .collect()
    });
    TruncatedModule::from_parts(m.top().clone(), m.depth(), labels, grades, |g, i, j| {
        let x = m.action(g, i).expect("target in range");
        let mut out = Matrix::zeros(comp[j].len(), comp[i].len());
        for (col, &c) in comp[i].iter().enumerate() {
            let w = densify(&subs[j].reduce(&sparsify(&x.column(c))), m.dim(j));
            for (row, &r) in comp[j].iter().enumerate() {
                out.set(row, col, w[r].clone());
            }
        }
        out
    })
}

/// Image of a generator under the anti-involution, as `(generator, sign)`.
pub(crate) fn sigma_generator(g: Generator) -> (Generator, i64) {
    match g {
        Generator::E => (Generator::F, -1),
        Generator::F => (Generator::E, -1),
        Generator::P => (Generator::Q, 1),
        Generator::Q => (Generator::P, 1),
        Generator::H => (Generator::H, 1),
        Generator::Z => (Generator::Z, 1),
    }
}

/// The restricted dual with `(x·g)(v) = g(σ(x)·v)`, in the dual bases.
pub fn dual_module<S: Scalar>(m: &TruncatedModule<S>) -> TruncatedModule<S> {
    let labels = (0..=m.depth())
        .map(|i| m.labels(i).iter().map(|l| format!("({l})*")).collect())
        .collect();
    let grades = m
        .grades
        .as_ref()
        .map(|gr| gr.iter().map(|g| g.iter().map(|x| -x).collect()).collect());
    TruncatedModule::from_parts(m.top().clone(), m.depth(), labels, grades, |g, _, j| {
        let (sg, sign) = sigma_generator(g);
        let back = m.action(sg, j).expect("raising partner is in range");
        back.transpose().scale(&S::from_i64(sign))
    })
}

/// `M ⊗ N` with the diagonal action `x ↦ x⊗1 + 1⊗x`, truncated at `depth`,
/// which may not exceed the depth of either factor.
pub fn tensor_modules<S: Scalar>(
    m: &TruncatedModule<S>,
    n: &TruncatedModule<S>,
    depth: usize,
) -> TruncatedModule<S> {
    assert!(depth <= m.depth() && depth <= n.depth(), "tensor depth exceeds a factor");
    let top = Weight::new(m.top().h.clone() + n.top().h.clone(), m.top().z.clone() + n.top().z.clone());
    // Basis of space i: (i1, k1, k2) with k1 < dim M_{i1}, k2 < dim N_{i-i1}.
    let spaces: Vec<Vec<(usize, usize, usize)>> = (0..=depth)
        .map(|i| {
            let mut v = Vec::new();
            for i1 in 0..=i {
                for k1 in 0..m.dim(i1) {
                    for k2 in 0..n.dim(i - i1) {
                        v.push((i1, k1, k2));
                    }
                }
            }
            v
        })
        .collect();
    let position = |i: usize, key: (usize, usize, usize)| -> usize {
        spaces[i].binary_search(&key).expect("basis vector present")
    };
    let labels = spaces
        .iter()
        .enumerate()
        .map(|(i, sp)| {
            sp.iter()
                .map(|&(i1, k1, k2)| format!("{} ⊗ {}", m.labels(i1)[k1], n.labels(i - i1)[k2]))
                .collect()
        })
        .collect();
    let grades = match (&m.grades, &n.grades) {
        (Some(gm), Some(gn)) => Some(
            spaces
                .iter()
                .enumerate()
                .map(|(i, sp)| sp.iter().map(|&(i1, k1, k2)| gm[i1][k1] + gn[i - i1][k2]).collect())
                .collect(),
        ),
        _ => None,
    };
    TruncatedModule::from_parts(top, depth, labels, grades, |g, i, j| {
        let shift = g.depth_shift();
        let mut out = Matrix::zeros(spaces[j].len(), spaces[i].len());
        for (col, &(i1, k1, k2)) in spaces[i].iter().enumerate() {
            let i2 = i - i1;
            let t1 = i1 as isize + shift;
            if t1 >= 0 {
                let x = m.action(g, i1).expect("factor target in range");
                for r in 0..x.rows() {
                    let c = x.get(r, k1);
                    if !c.is_zero() {
                        out.add_to(position(j, (t1 as usize, r, k2)), col, c.clone());
                    }
                }
            }
            let t2 = i2 as isize + shift;
            if t2 >= 0 {
                let y = n.action(g, i2).expect("factor target in range");
                for r in 0..y.rows() {
                    let c = y.get(r, k2);
                    if !c.is_zero() {
                        out.add_to(position(j, (i1, k1, r)), col, c.clone());
                    }
                }
            }
        }
        out
    })
}
