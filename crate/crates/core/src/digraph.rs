//! Dense loop-free digraphs on at most 64 vertices.
//!
//! Vertices are the integers `0..n`. Arcs are kept twice, as out-rows and
//! in-columns, each a 64-bit mask, so degree queries and neighbour scans
//! are a popcount or a bit walk. Pairs of opposite arcs (2-cycles) are
//! allowed, loops and parallel arcs are not.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex ids below [`MAX_VERTICES`], iterated in ascending order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex {v} does not fit in a VertexSet");
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;

    fn into_iter(self) -> Bits {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Ascending iterator over the set bits of a mask.
#[derive(Clone, Debug)]
pub struct Bits(u64);

impl Bits {
    pub fn new(mask: u64) -> Self {
        Bits(mask)
    }
}

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

/// Out-, in- and total degree of one vertex, optionally restricted to a set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub vertex: usize,
    pub out_deg: usize,
    pub in_deg: usize,
    pub total: usize,
}

/// A loop-free digraph without parallel arcs.
///
/// Equality compares order and arc set only; labels are presentation data.
#[derive(Clone)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.out == other.out
    }
}

impl Eq for Digraph {}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs=[", self.n)?;
        for (i, (u, v)) in self.arcs().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}->{v}")?;
        }
        write!(f, "])")
    }
}

impl Digraph {
    /// Digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDigraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                order: n,
                max: MAX_VERTICES,
            });
        }
        Ok(Self::with_order(n))
    }

    fn with_order(n: usize) -> Self {
        Digraph {
            n,
            out: vec![0; n],
            inn: vec![0; n],
            labels: None,
        }
    }

    /// Builds a digraph from an arc list. Duplicate arcs collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Self::empty(n)?;
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// The complete digraph `K_n*`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut d = Self::empty(n)?;
        let all = VertexSet::full(n).bits();
        for v in 0..n {
            d.out[v] = all & !(1 << v);
            d.inn[v] = all & !(1 << v);
        }
        Ok(d)
    }

    /// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn directed_cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OrderTooSmall {
                what: "a directed cycle",
                required: 2,
                actual: n,
            });
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The directed path `0 -> 1 -> ... -> n-1`.
    pub fn directed_path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub fn check_set(&self, set: VertexSet) -> Result<()> {
        match set.difference(self.vertices()).min() {
            None => Ok(()),
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            }),
        }
    }

    /// Inserts arc `u -> v`; returns whether it was new.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopArc(u));
        }
        let fresh = self.out[u] >> v & 1 == 0;
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
        Ok(fresh)
    }

    /// Deletes arc `u -> v`; returns whether it was present.
    pub fn remove_arc(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let present = self.out[u] >> v & 1 == 1;
        self.out[u] &= !(1 << v);
        self.inn[v] &= !(1 << u);
        Ok(present)
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] >> v & 1 == 1
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.out[v])
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.inn[v])
    }

    #[inline]
    pub(crate) fn out_mask(&self, v: usize) -> u64 {
        self.out[v]
    }

    #[inline]
    pub(crate) fn in_mask(&self, v: usize) -> u64 {
        self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].count_ones() as usize
    }

    /// `d(v) = d+(v) + d-(v)`.
    pub fn total_degree(&self, v: usize) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.total_degree(v)).min().unwrap_or(0)
    }

    /// Degrees of `x`, counted only towards `within` when given.
    pub fn degree(&self, x: usize, within: Option<VertexSet>) -> Result<DegreeReport> {
        self.check_vertex(x)?;
        let mask = match within {
            Some(set) => {
                self.check_set(set)?;
                set.bits()
            }
            None => u64::MAX,
        };
        let out_deg = (self.out[x] & mask).count_ones() as usize;
        let in_deg = (self.inn[x] & mask).count_ones() as usize;
        Ok(DegreeReport {
            vertex: x,
            out_deg,
            in_deg,
            total: out_deg + in_deg,
        })
    }

    /// `d(x, A)` without range checks.
    #[inline]
    pub fn degree_within(&self, x: usize, set: VertexSet) -> usize {
        ((self.out[x] & set.bits()).count_ones() + (self.inn[x] & set.bits()).count_ones())
            as usize
    }

    pub fn are_adjacent(&self, x: usize, y: usize) -> Result<bool> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::SameVertex(x));
        }
        Ok(self.adjacent(x, y))
    }

    #[inline]
    pub(crate) fn adjacent(&self, x: usize, y: usize) -> bool {
        (self.out[x] | self.inn[x]) >> y & 1 == 1
    }

    /// All arcs in ascending lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.out[u]).map(move |v| (u, v)))
    }

    /// Ordered pairs `(u, v)`, `u != v`, that are not arcs.
    pub fn missing_arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertices().bits();
        (0..self.n).flat_map(move |u| Bits(all & !self.out[u] & !(1 << u)).map(move |v| (u, v)))
    }

    /// The subdigraph induced by `set`, relabelled densely in ascending order.
    pub fn induced(&self, set: VertexSet) -> Result<Subdigraph> {
        self.check_set(set)?;
        if set.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let new_to_old = set.to_vec();
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut d = Digraph::with_order(new_to_old.len());
        for (new_u, &old_u) in new_to_old.iter().enumerate() {
            for old_v in Bits(self.out[old_u] & set.bits()) {
                let new_v = old_to_new[old_v].expect("inside the induced set");
                d.out[new_u] |= 1 << new_v;
                d.inn[new_v] |= 1 << new_u;
            }
        }
        if let Some(labels) = &self.labels {
            d.labels = Some(new_to_old.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(Subdigraph {
            digraph: d,
            new_to_old,
            old_to_new,
        })
    }

    /// `D - A`.
    pub fn remove_vertices(&self, set: VertexSet) -> Result<Subdigraph> {
        self.check_set(set)?;
        self.induced(self.vertices().difference(set))
    }

    /// All arcs reversed.
    pub fn converse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Copy of `self` with one extra arc.
    pub fn with_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        let mut d = self.clone();
        d.add_arc(u, v)?;
        Ok(d)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.set_labels(labels);
        self
    }

    /// Display name of `v`; the numeric id when unlabelled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    /// Id of the vertex labelled `name`.
    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }
}

/// Result of [`Digraph::induced`] and [`Digraph::remove_vertices`].
#[derive(Clone, Debug)]
pub struct Subdigraph {
    pub digraph: Digraph,
    pub new_to_old: Vec<usize>,
    pub old_to_new: Vec<Option<usize>>,
}

fn walk_error(kind: &'static str, reason: String) -> Error {
    Error::InvalidWalk { kind, reason }
}

fn check_walk(d: &Digraph, vertices: &[usize], kind: &'static str) -> Result<()> {
    let mut seen = VertexSet::EMPTY;
    for &v in vertices {
        d.check_vertex(v)?;
        if seen.contains(v) {
            return Err(walk_error(kind, format!("vertex {v} repeats")));
        }
        seen.insert(v);
    }
    for w in vertices.windows(2) {
        if !d.has_arc(w[0], w[1]) {
            return Err(walk_error(kind, format!("missing arc {} -> {}", w[0], w[1])));
        }
    }
    Ok(())
}

/// A path `x1 x2 ... xm` of distinct vertices, `m >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    /// Validates `vertices` as a path of `d`.
    pub fn new(d: &Digraph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(walk_error("path", "no vertices".into()));
        }
        check_walk(d, &vertices, "path")?;
        Ok(Path { vertices })
    }

    pub(crate) fn from_trusted(vertices: Vec<usize>) -> Self {
        Path { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of arcs.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("paths are non-empty")
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn is_valid_in(&self, d: &Digraph) -> bool {
        !self.vertices.is_empty() && check_walk(d, &self.vertices, "path").is_ok()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("->"))
    }
}

/// A cycle `x1 ... xk x1`, `k >= 2`, stored rotated so the smallest vertex
/// comes first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    pub fn new(d: &Digraph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(walk_error("cycle", "fewer than two vertices".into()));
        }
        check_walk(d, &vertices, "cycle")?;
        let (last, first) = (*vertices.last().unwrap(), vertices[0]);
        if !d.has_arc(last, first) {
            return Err(walk_error("cycle", format!("missing arc {last} -> {first}")));
        }
        Ok(Self::from_trusted(vertices))
    }

    pub(crate) fn from_trusted(mut vertices: Vec<usize>) -> Self {
        let start = vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .map(|(i, _)| i)
            .unwrap_or(0);
        vertices.rotate_left(start);
        Cycle { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of vertices (equal to the number of arcs).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn is_valid_in(&self, d: &Digraph) -> bool {
        self.vertices.len() >= 2
            && check_walk(d, &self.vertices, "cycle").is_ok()
            && d.has_arc(*self.vertices.last().unwrap(), self.vertices[0])
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}->{}", parts.join("->"), self.vertices[0])
    }
}
