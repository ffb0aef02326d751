//! Exact Hamiltonicity solvers.
//!
//! Decision problems use Held-Karp style subset DP up to
//! [`SolverConfig::dp_max_order`] vertices and pruned backtracking above it.
//! Counting is DP only. Longest cycles and cycles through a vertex set use a
//! table of all cycle vertex sets up to [`SolverConfig::cycle_dp_max_order`].

mod dp;
mod insertion;
mod search;

use serde::{Deserialize, Serialize};

use crate::digraph::{Bits, Cycle, Digraph, Path, VertexSet};
use crate::error::{Error, Result};
use dp::{path_counts, CycleTable, PathTable};
use search::{find_cycle, CycleGoal};

pub use insertion::{extend_path_max, insert_vertex, ExtensionOutcome};

/// Hard ceiling on any subset table (2^24 entries).
const DP_CEILING: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest order solved by subset DP for Hamiltonian cycles and paths.
    pub dp_max_order: usize,
    /// Largest order accepted by [`Solver::count_hamiltonian`].
    pub count_max_order: usize,
    /// Largest order for which longest-cycle and cycle-through-set queries
    /// use the cycle table.
    pub cycle_dp_max_order: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            dp_max_order: 20,
            count_max_order: 16,
            cycle_dp_max_order: 16,
        }
    }
}

impl SolverConfig {
    /// Forces backtracking everywhere except counting.
    pub fn backtracking_only() -> Self {
        SolverConfig {
            dp_max_order: 0,
            cycle_dp_max_order: 0,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonicityAnswer<W> {
    pub found: bool,
    pub witness: Option<W>,
    /// DP states or search nodes visited.
    pub nodes_explored: u64,
}

impl<W> HamiltonicityAnswer<W> {
    fn new(witness: Option<W>, nodes_explored: u64) -> Self {
        HamiltonicityAnswer {
            found: witness.is_some(),
            witness,
            nodes_explored,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    /// Hamiltonian cycles, each counted once regardless of rotation.
    Cycle,
    /// Hamiltonian paths from `from` to `to`.
    Path { from: usize, to: usize },
}

/// Outcome of a Hamiltonian-connectedness test. `failing_pair` is the
/// lexicographically first ordered pair (strong variant) or unordered pair
/// `(x, y)` with `x < y` (weak variant) that has no suitable path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamConnectivity {
    pub holds: bool,
    pub failing_pair: Option<(usize, usize)>,
}

impl HamConnectivity {
    fn from_failure(failing_pair: Option<(usize, usize)>) -> Self {
        HamConnectivity {
            holds: failing_pair.is_none(),
            failing_pair,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Solver {
    config: SolverConfig,
}

impl Solver {
    pub fn new(config: SolverConfig) -> Self {
        Solver { config }
    }

    pub fn config(&self) -> SolverConfig {
        self.config
    }

    fn use_dp(&self, n: usize) -> bool {
        n <= self.config.dp_max_order.min(DP_CEILING)
    }

    fn use_cycle_table(&self, n: usize) -> bool {
        n <= self.config.cycle_dp_max_order.min(DP_CEILING)
    }

    pub fn hamiltonian_cycle(&self, d: &Digraph) -> HamiltonicityAnswer<Cycle> {
        let n = d.order();
        if n < 2 {
            return HamiltonicityAnswer::new(None, 0);
        }
        if self.use_dp(n) {
            let table = PathTable::build(d, 0);
            let full = table.full_mask();
            let ends = table.reach[full] as u64 & d.in_mask(0);
            let witness = (ends != 0).then(|| {
                let end = ends.trailing_zeros() as usize;
                Cycle::from_trusted(table.path_to(d, full, end))
            });
            HamiltonicityAnswer::new(witness, table.explored)
        } else {
            let (found, explored) = find_cycle(d, CycleGoal::hamiltonian(d, 0));
            HamiltonicityAnswer::new(found.map(Cycle::from_trusted), explored)
        }
    }

    pub fn hamiltonian_path_between(
        &self,
        d: &Digraph,
        u: usize,
        v: usize,
    ) -> Result<HamiltonicityAnswer<Path>> {
        d.check_vertex(u)?;
        d.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let n = d.order();
        if self.use_dp(n) {
            let table = PathTable::build(d, u);
            let full = table.full_mask();
            let witness = (table.reach[full] >> v & 1 == 1)
                .then(|| Path::from_trusted(table.path_to(d, full, v)));
            return Ok(HamiltonicityAnswer::new(witness, table.explored));
        }
        // Hamiltonian (u, v)-paths of D are the Hamiltonian cycles of D with
        // the arcs into u and out of v replaced by the single arc v -> u.
        let closed = close_path(d, u, v);
        let (found, explored) = find_cycle(&closed, CycleGoal::hamiltonian(&closed, u));
        Ok(HamiltonicityAnswer::new(
            found.map(Path::from_trusted),
            explored,
        ))
    }

    pub fn count_hamiltonian(&self, d: &Digraph, mode: CountMode) -> Result<u64> {
        let n = d.order();
        if n > self.config.count_max_order.min(DP_CEILING) {
            return Err(Error::TooLargeToCount {
                order: n,
                max: self.config.count_max_order.min(DP_CEILING),
            });
        }
        let full = (1usize << n) - 1;
        match mode {
            CountMode::Cycle => {
                if n < 2 {
                    return Ok(0);
                }
                let counts = path_counts(d, 0);
                Ok(d.in_neighbors(0)
                    .iter()
                    .map(|w| counts[full * n + w])
                    .sum())
            }
            CountMode::Path { from, to } => {
                d.check_vertex(from)?;
                d.check_vertex(to)?;
                if from == to {
                    return Err(Error::SameVertex(from));
                }
                Ok(path_counts(d, from)[full * n + to])
            }
        }
    }

    /// Per start vertex, the set of ends of Hamiltonian paths.
    fn hamiltonian_ends(&self, d: &Digraph, u: usize) -> u64 {
        let n = d.order();
        if self.use_dp(n) {
            let table = PathTable::build(d, u);
            return table.reach[table.full_mask()] as u64 & !(1 << u);
        }
        let mut ends = 0;
        for v in (0..n).filter(|&v| v != u) {
            let closed = close_path(d, u, v);
            if find_cycle(&closed, CycleGoal::hamiltonian(&closed, u)).0.is_some() {
                ends |= 1 << v;
            }
        }
        ends
    }

    pub fn strongly_hamiltonian_connected(&self, d: &Digraph) -> HamConnectivity {
        let n = d.order();
        for u in 0..n {
            let missing = VertexSet::full(n).bits() & !(1 << u) & !self.hamiltonian_ends(d, u);
            if missing != 0 {
                return HamConnectivity::from_failure(Some((u, missing.trailing_zeros() as usize)));
            }
        }
        HamConnectivity::from_failure(None)
    }

    pub fn weakly_hamiltonian_connected(&self, d: &Digraph) -> HamConnectivity {
        let n = d.order();
        let ends: Vec<u64> = (0..n).map(|u| self.hamiltonian_ends(d, u)).collect();
        for x in 0..n {
            for y in x + 1..n {
                if ends[x] >> y & 1 == 0 && ends[y] >> x & 1 == 0 {
                    return HamConnectivity::from_failure(Some((x, y)));
                }
            }
        }
        HamConnectivity::from_failure(None)
    }

    /// A cycle of maximum length, or `None` for acyclic digraphs.
    pub fn longest_cycle(&self, d: &Digraph) -> Option<Cycle> {
        let n = d.order();
        if self.use_cycle_table(n) {
            let table = CycleTable::build(d);
            let mut best: Option<usize> = None;
            for mask in 1..table.masks() {
                if table.has_cycle(d, mask)
                    && best.is_none_or(|b| mask.count_ones() > b.count_ones())
                {
                    best = Some(mask);
                }
            }
            return best.map(|mask| Cycle::from_trusted(table.cycle_on(d, mask)));
        }
        for length in (2..=n).rev() {
            for start in 0..n {
                let allowed = VertexSet::from_bits(VertexSet::full(n).bits() & !((1u64 << start) - 1));
                if allowed.len() < length {
                    break;
                }
                let goal = CycleGoal {
                    start,
                    allowed,
                    must: VertexSet::singleton(start),
                    length: Some(length),
                };
                if let (Some(seq), _) = find_cycle(d, goal) {
                    return Some(Cycle::from_trusted(seq));
                }
            }
        }
        None
    }

    /// Some cycle containing every vertex of `must`.
    pub fn cycle_through(&self, d: &Digraph, must: VertexSet) -> Result<Option<Cycle>> {
        d.check_set(must)?;
        let Some(first) = must.min() else {
            return Err(Error::EmptyVertexSet);
        };
        let n = d.order();
        if self.use_cycle_table(n) {
            let table = CycleTable::build(d);
            let m = must.bits() as usize;
            let found = (m..table.masks())
                .filter(|&mask| mask & m == m)
                .find(|&mask| table.has_cycle(d, mask));
            return Ok(found.map(|mask| Cycle::from_trusted(table.cycle_on(d, mask))));
        }
        let goal = CycleGoal {
            start: first,
            allowed: d.vertices(),
            must,
            length: None,
        };
        Ok(find_cycle(d, goal).0.map(Cycle::from_trusted))
    }

    /// Bitmask of the lengths `k` for which some `k`-cycle passes through `x`.
    pub fn cycle_lengths_through(&self, d: &Digraph, x: usize) -> Result<u64> {
        d.check_vertex(x)?;
        let n = d.order();
        let mut lengths = 0u64;
        if self.use_cycle_table(n) {
            let table = CycleTable::build(d);
            for mask in 1..table.masks() {
                if mask >> x & 1 == 1 && table.has_cycle(d, mask) {
                    lengths |= 1 << mask.count_ones();
                }
            }
            return Ok(lengths);
        }
        for length in 2..=n {
            let goal = CycleGoal {
                start: x,
                allowed: d.vertices(),
                must: VertexSet::singleton(x),
                length: Some(length),
            };
            if find_cycle(d, goal).0.is_some() {
                lengths |= 1 << length;
            }
        }
        Ok(lengths)
    }
}

fn close_path(d: &Digraph, u: usize, v: usize) -> Digraph {
    let mut closed = d.clone();
    for w in Bits::new(d.in_mask(u)) {
        closed.remove_arc(w, u).expect("in range");
    }
    for w in Bits::new(d.out_mask(v)) {
        closed.remove_arc(v, w).expect("in range");
    }
    closed.add_arc(v, u).expect("distinct vertices");
    closed
}

pub fn hamiltonian_cycle(d: &Digraph) -> HamiltonicityAnswer<Cycle> {
    Solver::default().hamiltonian_cycle(d)
}

pub fn hamiltonian_path_between(
    d: &Digraph,
    u: usize,
    v: usize,
) -> Result<HamiltonicityAnswer<Path>> {
    Solver::default().hamiltonian_path_between(d, u, v)
}

pub fn count_hamiltonian(d: &Digraph, mode: CountMode) -> Result<u64> {
    Solver::default().count_hamiltonian(d, mode)
}

pub fn strongly_hamiltonian_connected(d: &Digraph) -> HamConnectivity {
    Solver::default().strongly_hamiltonian_connected(d)
}

pub fn weakly_hamiltonian_connected(d: &Digraph) -> HamConnectivity {
    Solver::default().weakly_hamiltonian_connected(d)
}

pub fn longest_cycle(d: &Digraph) -> Option<Cycle> {
    Solver::default().longest_cycle(d)
}

pub fn cycle_through(d: &Digraph, must: VertexSet) -> Result<Option<Cycle>> {
    Solver::default().cycle_through(d, must)
}

pub fn cycle_lengths_through(d: &Digraph, x: usize) -> Result<u64> {
    Solver::default().cycle_lengths_through(d, x)
}
