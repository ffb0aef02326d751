//! Subset dynamic programming over bitmasks.

use crate::digraph::{Bits, Digraph};

/// `reach[mask]` holds every `w` such that some path starting at `start`
/// visits exactly `mask` and ends at `w`.
pub(crate) struct PathTable {
    pub start: usize,
    pub reach: Vec<u32>,
    pub explored: u64,
}

impl PathTable {
    pub fn build(d: &Digraph, start: usize) -> Self {
        let n = d.order();
        let mut reach = vec![0u32; 1 << n];
        let s = 1usize << start;
        reach[s] = s as u32;
        let mut explored = 0;
        for mask in s..reach.len() {
            let ends = reach[mask];
            if mask & s == 0 || ends == 0 {
                continue;
            }
            explored += 1;
            for w in Bits::new(ends as u64) {
                for x in Bits::new(d.out_mask(w) & !(mask as u64)) {
                    reach[mask | 1 << x] |= 1 << x;
                }
            }
        }
        PathTable {
            start,
            reach,
            explored,
        }
    }

    pub fn full_mask(&self) -> usize {
        self.reach.len() - 1
    }

    /// Vertex sequence of a path from `start` visiting `mask` and ending at
    /// `end`, which must be in `reach[mask]`. Predecessors are chosen
    /// smallest-first.
    pub fn path_to(&self, d: &Digraph, mut mask: usize, end: usize) -> Vec<usize> {
        debug_assert!(self.reach[mask] >> end & 1 == 1);
        let mut seq = vec![end];
        let mut w = end;
        while mask != 1 << self.start {
            mask &= !(1 << w);
            let preds = self.reach[mask] as u64 & d.in_mask(w);
            w = preds.trailing_zeros() as usize;
            seq.push(w);
        }
        seq.reverse();
        seq
    }
}

/// Number of paths from `start` that visit exactly `mask` and end at `w`,
/// stored at `mask * n + w`.
pub(crate) fn path_counts(d: &Digraph, start: usize) -> Vec<u64> {
    let n = d.order();
    let mut count = vec![0u64; (1 << n) * n];
    let s = 1usize << start;
    count[s * n + start] = 1;
    for mask in s..1usize << n {
        if mask & s == 0 {
            continue;
        }
        for w in Bits::new(mask as u64) {
            let c = count[mask * n + w];
            if c == 0 {
                continue;
            }
            for x in Bits::new(d.out_mask(w) & !(mask as u64)) {
                count[(mask | 1 << x) * n + x] += c;
            }
        }
    }
    count
}

/// For every vertex set, the ends of paths that start at the smallest
/// vertex of the set and visit exactly the set. A set carries a cycle iff
/// one of those ends has an arc back to the start.
pub(crate) struct CycleTable {
    reach: Vec<u32>,
}

impl CycleTable {
    pub fn build(d: &Digraph) -> Self {
        let n = d.order();
        let mut reach = vec![0u32; 1 << n];
        for s in 0..n {
            reach[1 << s] = 1 << s;
        }
        for mask in 1..reach.len() {
            let ends = reach[mask];
            if ends == 0 {
                continue;
            }
            let s = mask.trailing_zeros();
            // Only vertices larger than the start may join.
            let above = !((2u64 << s) - 1);
            for w in Bits::new(ends as u64) {
                for x in Bits::new(d.out_mask(w) & !(mask as u64) & above) {
                    reach[mask | 1 << x] |= 1 << x;
                }
            }
        }
        CycleTable { reach }
    }

    pub fn masks(&self) -> usize {
        self.reach.len()
    }

    #[inline]
    fn closing_ends(&self, d: &Digraph, mask: usize) -> u64 {
        let s = mask.trailing_zeros() as usize;
        self.reach[mask] as u64 & d.in_mask(s)
    }

    #[inline]
    pub fn has_cycle(&self, d: &Digraph, mask: usize) -> bool {
        mask.count_ones() >= 2 && self.closing_ends(d, mask) != 0
    }

    /// A cycle on exactly `mask`; the caller checks [`Self::has_cycle`].
    pub fn cycle_on(&self, d: &Digraph, mut mask: usize) -> Vec<usize> {
        let s = mask.trailing_zeros() as usize;
        let mut w = self.closing_ends(d, mask).trailing_zeros() as usize;
        let mut seq = vec![w];
        while mask != 1 << s {
            mask &= !(1 << w);
            let preds = self.reach[mask] as u64 & d.in_mask(w);
            w = preds.trailing_zeros() as usize;
            seq.push(w);
        }
        seq.reverse();
        seq
    }
}
