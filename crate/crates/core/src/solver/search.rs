//! Backtracking search for cycles, used above the subset-DP size limits.

use crate::connectivity::{backward_closure, forward_closure};
use crate::digraph::{Bits, Digraph, VertexSet};

/// What a cycle through `start` has to look like.
#[derive(Clone, Copy, Debug)]
pub(crate) struct CycleGoal {
    pub start: usize,
    /// Vertices the cycle may use; must contain `start`.
    pub allowed: VertexSet,
    /// Vertices the cycle must use.
    pub must: VertexSet,
    /// Exact number of vertices, if fixed.
    pub length: Option<usize>,
}

impl CycleGoal {
    pub fn hamiltonian(d: &Digraph, start: usize) -> Self {
        CycleGoal {
            start,
            allowed: d.vertices(),
            must: d.vertices(),
            length: Some(d.order()),
        }
    }
}

struct Search<'a> {
    d: &'a Digraph,
    goal: CycleGoal,
    spanning: bool,
    path: Vec<usize>,
    explored: u64,
}

/// First cycle meeting `goal` in depth-first order with ascending
/// successors, and the number of search nodes visited.
pub(crate) fn find_cycle(d: &Digraph, goal: CycleGoal) -> (Option<Vec<usize>>, u64) {
    let spanning = goal.length == Some(goal.allowed.len()) || goal.must == goal.allowed;
    let mut s = Search {
        d,
        goal,
        spanning,
        path: vec![goal.start],
        explored: 0,
    };
    let found = s.dfs(1u64 << goal.start, goal.start);
    let explored = s.explored;
    (found.then_some(s.path), explored)
}

impl Search<'_> {
    fn dfs(&mut self, visited: u64, end: usize) -> bool {
        self.explored += 1;
        let len = self.path.len();
        let start = self.goal.start;
        if len >= 2
            && self.d.has_arc(end, start)
            && self.goal.must.bits() & !visited == 0
            && self.goal.length.is_none_or(|t| t == len)
        {
            return true;
        }
        if self.goal.length.is_some_and(|t| len >= t) {
            return false;
        }
        let free = self.goal.allowed.bits() & !visited;
        if free == 0 || !self.feasible(free, end) {
            return false;
        }
        for x in Bits::new(self.d.out_mask(end) & free) {
            self.path.push(x);
            if self.dfs(visited | 1 << x, x) {
                return true;
            }
            self.path.pop();
        }
        false
    }

    fn feasible(&self, free: u64, end: usize) -> bool {
        let d = self.d;
        let start = self.goal.start;
        if self.spanning {
            // Contract the current path to one vertex p (out-arcs of `end`,
            // in-arcs of `start`); the remainder must then be strong with no
            // vertex of residual in- or out-degree zero.
            if d.out_mask(end) & free == 0 || d.in_mask(start) & free == 0 {
                return false;
            }
            let into_free = free | 1 << end;
            let out_of_free = free | 1 << start;
            for w in Bits::new(free) {
                if d.in_mask(w) & into_free == 0 || d.out_mask(w) & out_of_free == 0 {
                    return false;
                }
            }
            let fwd = forward_closure(d, end, VertexSet::from_bits(free | 1 << end));
            if free & !fwd != 0 {
                return false;
            }
            let bwd = backward_closure(d, start, VertexSet::from_bits(free | 1 << start));
            return free & !bwd == 0;
        }
        let fwd = forward_closure(d, end, VertexSet::from_bits(free | 1 << end));
        let bwd = backward_closure(d, start, VertexSet::from_bits(free | 1 << start));
        let useful = fwd & bwd & free;
        let missing = self.goal.must.bits() & free;
        if missing & !useful != 0 {
            return false;
        }
        match self.goal.length {
            Some(t) => useful.count_ones() as usize >= t - self.path.len(),
            None => true,
        }
    }
}
