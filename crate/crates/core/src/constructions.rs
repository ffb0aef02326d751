//! The Overbeck-Larisch pair reduction, its converse expansion, and the
//! counterexample families built from them.

use crate::digraph::{Digraph, VertexSet};
use crate::error::{Error, Result};

/// `H_D(u, v)`: `u` and `v` merged into a new vertex `z0`.
#[derive(Clone, Debug)]
pub struct ReductionResult {
    pub digraph: Digraph,
    /// Always the largest id, `order - 1`.
    pub z0: usize,
    /// Position of each input vertex in the result; `None` for `u` and `v`.
    pub old_to_new: Vec<Option<usize>>,
}

/// `D_H(z0)`: `z0` split into two new vertices `u` and `v`.
#[derive(Clone, Debug)]
pub struct ExpansionResult {
    pub digraph: Digraph,
    /// `u = order - 2`, `v = order - 1`.
    pub u: usize,
    pub v: usize,
    /// Position of each input vertex in the result; `None` for `z0`.
    pub old_to_new: Vec<Option<usize>>,
}

fn relabel_without(d: &Digraph, removed: VertexSet) -> (Vec<usize>, Vec<Option<usize>>) {
    let kept = d.vertices().difference(removed).to_vec();
    let mut old_to_new = vec![None; d.order()];
    for (new, &old) in kept.iter().enumerate() {
        old_to_new[old] = Some(new);
    }
    (kept, old_to_new)
}

fn inherited_labels(d: &Digraph, kept: &[usize], extra: &[&str]) -> Vec<String> {
    kept.iter()
        .map(|&v| d.label(v))
        .chain(extra.iter().map(|s| s.to_string()))
        .collect()
}

/// Merges `u` and `v` into `z0`. `z0` inherits the out-arcs of `u` (except
/// towards `v`) and the in-arcs of `v` (except from `u`); all other arcs at
/// `u` and `v` disappear.
pub fn reduce_pair(d: &Digraph, u: usize, v: usize) -> Result<ReductionResult> {
    d.check_vertex(u)?;
    d.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    if d.order() < 5 {
        return Err(Error::OrderTooSmall {
            what: "pair reduction",
            required: 5,
            actual: d.order(),
        });
    }
    let pair = VertexSet::singleton(u).with(v);
    let (kept, old_to_new) = relabel_without(d, pair);
    let z0 = kept.len();
    let map = |x: usize| old_to_new[x].expect("kept vertex");

    let mut h = Digraph::empty(z0 + 1)?;
    for (a, b) in d.arcs() {
        if !pair.contains(a) && !pair.contains(b) {
            h.add_arc(map(a), map(b))?;
        }
    }
    for y in d.out_neighbors(u).difference(pair) {
        h.add_arc(z0, map(y))?;
    }
    for y in d.in_neighbors(v).difference(pair) {
        h.add_arc(map(y), z0)?;
    }
    h.set_labels(inherited_labels(d, &kept, &["z0"]));
    Ok(ReductionResult {
        digraph: h,
        z0,
        old_to_new,
    })
}

/// Splits `z0` into `u` and `v`. `u` and `v` form a 2-cycle, every old
/// vertex `x` gets `x -> u` and `v -> x`, `u` takes the out-arcs of `z0` and
/// `v` its in-arcs.
pub fn expand_at(h: &Digraph, z0: usize) -> Result<ExpansionResult> {
    h.check_vertex(z0)?;
    if h.order() < 4 {
        return Err(Error::OrderTooSmall {
            what: "vertex expansion",
            required: 4,
            actual: h.order(),
        });
    }
    let (kept, old_to_new) = relabel_without(h, VertexSet::singleton(z0));
    let u = kept.len();
    let v = u + 1;
    let map = |x: usize| old_to_new[x].expect("kept vertex");

    let mut d = Digraph::empty(v + 1)?;
    for (a, b) in h.arcs() {
        if a != z0 && b != z0 {
            d.add_arc(map(a), map(b))?;
        }
    }
    d.add_arc(u, v)?;
    d.add_arc(v, u)?;
    for x in 0..u {
        d.add_arc(x, u)?;
        d.add_arc(v, x)?;
    }
    for y in h.out_neighbors(z0) {
        d.add_arc(u, map(y))?;
    }
    for y in h.in_neighbors(z0) {
        d.add_arc(map(y), v)?;
    }
    d.set_labels(inherited_labels(h, &kept, &["u", "v"]));
    Ok(ExpansionResult {
        digraph: d,
        u,
        v,
        old_to_new,
    })
}

/// Id of `x_i` in [`darbinyan_counterexample`].
pub fn darbinyan_x(i: usize) -> usize {
    i
}

/// Id of `y_i`, `i` in `1..=3`, in [`darbinyan_counterexample`] of order `n`.
pub fn darbinyan_y(n: usize, i: usize) -> usize {
    debug_assert!((1..=3).contains(&i));
    n - 4 + i
}

/// The 2-strong non-Hamiltonian digraph of order `n >= 8` in which every
/// vertex except `x0` has degree at least `n`.
///
/// Vertices are `x0, ..., x_{n-4}` (ids `0..=n-4`) and `y1, y2, y3`
/// (ids `n-3, n-2, n-1`).
pub fn darbinyan_counterexample(n: usize) -> Result<Digraph> {
    if n < 8 {
        return Err(Error::OrderTooSmall {
            what: "darbinyan_counterexample",
            required: 8,
            actual: n,
        });
    }
    let x = darbinyan_x;
    let y = |i| darbinyan_y(n, i);
    let top = n - 4;
    let mut arcs = Vec::new();

    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                arcs.push((y(i), y(j)));
            }
        }
    }
    for i in 0..=n - 5 {
        arcs.push((x(i), x(i + 1)));
    }
    for i in 1..=3 {
        for j in 1..=n - 6 {
            arcs.push((y(i), x(j)));
        }
    }
    for i in 1..=top {
        for j in 1..i {
            arcs.push((x(i), x(j)));
        }
    }
    for i in 1..=3 {
        arcs.push((x(top), y(i)));
        arcs.push((x(n - 6), y(i)));
    }
    for i in 1..=n - 7 {
        arcs.push((x(i), x(n - 5)));
    }
    arcs.extend([
        (x(0), x(n - 5)),
        (x(n - 5), x(0)),
        (x(top), x(0)),
        (x(n - 6), x(top)),
    ]);

    let labels = (0..=top)
        .map(|i| format!("x{i}"))
        .chain((1..=3).map(|i| format!("y{i}")))
        .collect();
    Ok(Digraph::new(n, arcs)?.with_labels(labels))
}

/// A 3-strong digraph of order `n >= 9` with minimum degree at least
/// `n + 1` and no Hamiltonian `(u, v)`-path: the expansion at `x0` of
/// [`darbinyan_counterexample`] of order `n - 1`.
pub fn thomassen_refutation(n: usize) -> Result<ExpansionResult> {
    if n < 9 {
        return Err(Error::OrderTooSmall {
            what: "thomassen_refutation",
            required: 9,
            actual: n,
        });
    }
    expand_at(&darbinyan_counterexample(n - 1)?, darbinyan_x(0))
}
