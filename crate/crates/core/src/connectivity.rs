//! Strong components, unilateral connectivity and vertex connectivity.
//!
//! Vertex connectivity is computed from Menger's theorem: `D` is k-strong iff
//! it has at least `k + 1` vertices and every ordered pair `(x, y)` is joined
//! by `k` internally disjoint paths, an arc `x -> y` counting as one path.
//! Path counts come from unit-capacity max-flow on the vertex-split network.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::digraph::{Bits, Digraph, VertexSet};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    /// Strong components; no arc goes from a later component to an earlier one.
    pub components: Vec<Vec<usize>>,
    pub is_strong: bool,
    pub is_unilateral: bool,
    pub vertex_connectivity: usize,
}

impl ConnectivityReport {
    pub fn of(d: &Digraph) -> Self {
        let components = strong_components(d);
        let is_unilateral = chain_is_linked(d, &components);
        ConnectivityReport {
            is_strong: components.len() == 1,
            is_unilateral,
            vertex_connectivity: vertex_connectivity(d),
            components,
        }
    }
}

/// Vertices reachable from `start` using only vertices of `within`.
/// `start` itself is included.
pub(crate) fn forward_closure(d: &Digraph, start: usize, within: VertexSet) -> u64 {
    closure(start, within.bits(), |v| d.out_mask(v))
}

pub(crate) fn backward_closure(d: &Digraph, start: usize, within: VertexSet) -> u64 {
    closure(start, within.bits(), |v| d.in_mask(v))
}

#[inline]
fn closure(start: usize, within: u64, next: impl Fn(usize) -> u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut grown = 0;
        for v in Bits::new(frontier) {
            grown |= next(v);
        }
        frontier = grown & within & !seen;
        seen |= frontier;
    }
    seen
}

/// Is the subdigraph induced by `set` strong? The empty set and singletons are.
pub fn is_strong_within(d: &Digraph, set: VertexSet) -> bool {
    let Some(root) = set.min() else {
        return true;
    };
    forward_closure(d, root, set) == set.bits() && backward_closure(d, root, set) == set.bits()
}

pub fn is_strong(d: &Digraph) -> bool {
    is_strong_within(d, d.vertices())
}

struct Tarjan<'a> {
    d: &'a Digraph,
    counter: usize,
    index: Vec<Option<usize>>,
    low: Vec<usize>,
    stack: Vec<usize>,
    on_stack: u64,
    components: Vec<Vec<usize>>,
}

impl Tarjan<'_> {
    fn visit(&mut self, v: usize) {
        self.index[v] = Some(self.counter);
        self.low[v] = self.counter;
        self.counter += 1;
        self.stack.push(v);
        self.on_stack |= 1 << v;

        for w in self.d.out_neighbors(v) {
            match self.index[w] {
                None => {
                    self.visit(w);
                    self.low[v] = self.low[v].min(self.low[w]);
                }
                Some(iw) if self.on_stack >> w & 1 == 1 => {
                    self.low[v] = self.low[v].min(iw);
                }
                Some(_) => {}
            }
        }

        if Some(self.low[v]) == self.index[v] {
            let mut comp = Vec::new();
            loop {
                let w = self.stack.pop().expect("tarjan stack underflow");
                self.on_stack &= !(1 << w);
                comp.push(w);
                if w == v {
                    break;
                }
            }
            comp.sort_unstable();
            self.components.push(comp);
        }
    }
}

/// Strong components in topological order of the condensation. Components
/// that are not ordered by any arc come out smallest-vertex first.
pub fn strong_components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.order();
    let mut t = Tarjan {
        d,
        counter: 0,
        index: vec![None; n],
        low: vec![0; n],
        stack: Vec::with_capacity(n),
        on_stack: 0,
        components: Vec::new(),
    };
    for v in 0..n {
        if t.index[v].is_none() {
            t.visit(v);
        }
    }
    let comps = t.components;

    let mut comp_of = vec![0; n];
    for (c, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = c;
        }
    }
    let mut succ = vec![0u64; comps.len()];
    let mut indeg = vec![0usize; comps.len()];
    for (u, v) in d.arcs() {
        let (cu, cv) = (comp_of[u], comp_of[v]);
        if cu != cv && succ[cu] >> cv & 1 == 0 {
            succ[cu] |= 1 << cv;
            indeg[cv] += 1;
        }
    }

    // Kahn's algorithm keyed by the smallest vertex of each component.
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = comps
        .iter()
        .enumerate()
        .filter(|&(c, _)| indeg[c] == 0)
        .map(|(c, comp)| Reverse((comp[0], c)))
        .collect();
    let mut ordered = Vec::with_capacity(comps.len());
    while let Some(Reverse((_, c))) = heap.pop() {
        ordered.push(comps[c].clone());
        for s in Bits::new(succ[c]) {
            indeg[s] -= 1;
            if indeg[s] == 0 {
                heap.push(Reverse((comps[s][0], s)));
            }
        }
    }
    ordered
}

fn chain_is_linked(d: &Digraph, components: &[Vec<usize>]) -> bool {
    components.windows(2).all(|pair| {
        let later: VertexSet = pair[1].iter().copied().collect();
        pair[0]
            .iter()
            .any(|&v| !d.out_neighbors(v).is_disjoint(later))
    })
}

/// Every pair of vertices is joined by a path in at least one direction.
pub fn is_unilateral(d: &Digraph) -> bool {
    chain_is_linked(d, &strong_components(d))
}

/// Unit-capacity flow network on split vertices: `v_in = 2v`, `v_out = 2v+1`.
struct SplitNetwork {
    size: usize,
    cap: Vec<u8>,
}

impl SplitNetwork {
    fn new(d: &Digraph, x: usize, y: usize) -> Self {
        let size = 2 * d.order();
        let mut cap = vec![0u8; size * size];
        for v in 0..d.order() {
            if v != x && v != y {
                cap[(2 * v) * size + 2 * v + 1] = 1;
            }
        }
        for (a, b) in d.arcs() {
            cap[(2 * a + 1) * size + 2 * b] = 1;
        }
        SplitNetwork { size, cap }
    }

    fn augment(&mut self, source: usize, sink: usize, parent: &mut [usize]) -> bool {
        parent.fill(usize::MAX);
        parent[source] = source;
        let mut queue = Vec::with_capacity(self.size);
        queue.push(source);
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            let row = &self.cap[a * self.size..(a + 1) * self.size];
            for (b, &c) in row.iter().enumerate() {
                if c > 0 && parent[b] == usize::MAX {
                    parent[b] = a;
                    if b == sink {
                        let mut cur = sink;
                        while cur != source {
                            let p = parent[cur];
                            self.cap[p * self.size + cur] -= 1;
                            self.cap[cur * self.size + p] += 1;
                            cur = p;
                        }
                        return true;
                    }
                    queue.push(b);
                }
            }
        }
        false
    }
}

/// Maximum number of internally disjoint `x -> y` paths, stopping early once
/// `limit` paths are found.
pub(crate) fn disjoint_paths_capped(d: &Digraph, x: usize, y: usize, limit: usize) -> usize {
    let mut net = SplitNetwork::new(d, x, y);
    let (source, sink) = (2 * x + 1, 2 * y);
    let mut parent = vec![usize::MAX; net.size];
    let mut flow = 0;
    while flow < limit && net.augment(source, sink, &mut parent) {
        flow += 1;
    }
    flow
}

/// Maximum number of internally vertex-disjoint paths from `x` to `y`.
pub fn max_internally_disjoint_paths(d: &Digraph, x: usize, y: usize) -> Result<usize> {
    d.check_vertex(x)?;
    d.check_vertex(y)?;
    if x == y {
        return Err(Error::SameVertex(x));
    }
    Ok(disjoint_paths_capped(d, x, y, usize::MAX))
}

/// Largest `k` such that `D` is k-strong; `n - 1` for complete digraphs and
/// 0 for non-strong digraphs and the single vertex.
pub fn vertex_connectivity(d: &Digraph) -> usize {
    let n = d.order();
    if n < 2 || !is_strong(d) {
        return 0;
    }
    let mut best = (0..n)
        .map(|v| d.out_degree(v).min(d.in_degree(v)))
        .min()
        .unwrap_or(0)
        .min(n - 1);
    for x in 0..n {
        for y in 0..n {
            if x != y && best > 0 {
                best = best.min(disjoint_paths_capped(d, x, y, best));
            }
        }
    }
    best
}

pub fn is_k_strong(d: &Digraph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::ZeroConnectivity);
    }
    let n = d.order();
    if n < k + 1 {
        return Ok(false);
    }
    if (0..n).any(|v| d.out_degree(v) < k || d.in_degree(v) < k) || !is_strong(d) {
        return Ok(false);
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && disjoint_paths_capped(d, x, y, k) < k {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_examples() {
        let tri = Digraph::directed_cycle(3).unwrap();
        assert_eq!(strong_components(&tri), vec![vec![0, 1, 2]]);
        let path = Digraph::directed_path(3).unwrap();
        assert_eq!(strong_components(&path), vec![vec![0], vec![1], vec![2]]);
        let back = Digraph::new(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(strong_components(&back), vec![vec![2], vec![1], vec![0]]);
    }

    #[test]
    fn ties_break_by_smallest_vertex() {
        // {3} and {1} are sources, {0,2} is a sink reached from both.
        let d = Digraph::new(4, [(0, 2), (2, 0), (3, 0), (1, 2)]).unwrap();
        assert_eq!(strong_components(&d), vec![vec![1], vec![3], vec![0, 2]]);
    }

    #[test]
    fn unilateral_examples() {
        assert!(is_unilateral(&Digraph::directed_path(3).unwrap()));
        assert!(!is_unilateral(&Digraph::empty(2).unwrap()));
        assert!(!is_unilateral(&Digraph::new(3, [(0, 1), (0, 2)]).unwrap()));
        assert!(is_unilateral(&Digraph::empty(1).unwrap()));
    }

    #[test]
    fn disjoint_paths_examples() {
        let k4 = Digraph::complete(4).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                if x != y {
                    assert_eq!(max_internally_disjoint_paths(&k4, x, y).unwrap(), 3);
                }
            }
        }
        let c5 = Digraph::directed_cycle(5).unwrap();
        assert_eq!(max_internally_disjoint_paths(&c5, 0, 1).unwrap(), 1);
        assert_eq!(max_internally_disjoint_paths(&c5, 1, 0).unwrap(), 1);
        assert_eq!(
            max_internally_disjoint_paths(&c5, 2, 2),
            Err(Error::SameVertex(2))
        );
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&Digraph::directed_cycle(6).unwrap()), 1);
        assert_eq!(vertex_connectivity(&Digraph::complete(5).unwrap()), 4);
        assert_eq!(vertex_connectivity(&Digraph::directed_path(4).unwrap()), 0);
        assert_eq!(vertex_connectivity(&Digraph::empty(1).unwrap()), 0);
        let k2 = Digraph::complete(2).unwrap();
        assert!(is_k_strong(&k2, 1).unwrap());
        assert!(!is_k_strong(&k2, 2).unwrap());
        assert_eq!(is_k_strong(&k2, 0), Err(Error::ZeroConnectivity));
    }

    #[test]
    fn report_fields() {
        let r = ConnectivityReport::of(&Digraph::directed_path(3).unwrap());
        assert!(!r.is_strong);
        assert!(r.is_unilateral);
        assert_eq!(r.vertex_connectivity, 0);
        let r = ConnectivityReport::of(&Digraph::complete(3).unwrap());
        assert!(r.is_strong);
        assert_eq!(r.vertex_connectivity, 2);
    }
}
