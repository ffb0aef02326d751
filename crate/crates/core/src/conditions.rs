//! Degree conditions for Hamiltonicity.
//!
//! Every threshold is taken from the order of the digraph being checked.
//! A failing verdict names the first offending vertex or pair in ascending
//! order, and [`Condition::confirms`] re-checks such a witness from scratch.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::connectivity::forward_closure;
use crate::digraph::{Digraph, VertexSet};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Condition {
    /// `d+(x) >= n/2` and `d-(x) >= n/2` for every vertex.
    NashWilliams,
    /// `d(x) >= n` for every vertex.
    GhouilaHouri,
    /// `d+(x) + d-(y) >= n` whenever `x -> y` is not an arc.
    Woodall,
    /// `d(x) + d(y) >= 2n - 1` for non-adjacent pairs.
    Meyniel,
    /// `d+(x) + d-(y) >= n + 1` whenever `x -> y` is not an arc.
    OverbeckLarisch,
    /// Meyniel's bound for non-adjacent pairs avoiding `z0`.
    M { z0: usize },
    /// `d(x) + d(y) >= 2n + 1` for non-adjacent pairs.
    N,
    /// Meyniel's bound for non-adjacent pairs inside the set.
    MeynielSet(VertexSet),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    Vertex {
        vertex: usize,
        out_deg: usize,
        in_deg: usize,
    },
    /// `sum` is `d(x) + d(y)` for the symmetric conditions and
    /// `d+(x) + d-(y)` for Woodall and Overbeck-Larisch.
    Pair {
        x: usize,
        y: usize,
        sum: usize,
        threshold: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Vertex {
                vertex,
                out_deg,
                in_deg,
            } => write!(f, "vertex {vertex} (out {out_deg}, in {in_deg})"),
            Violation::Pair {
                x,
                y,
                sum,
                threshold,
            } => write!(f, "pair ({x},{y}) sum {sum} < {threshold}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionVerdict {
    pub holds: bool,
    pub violator: Option<Violation>,
}

impl ConditionVerdict {
    fn from_violator(violator: Option<Violation>) -> Self {
        ConditionVerdict {
            holds: violator.is_none(),
            violator,
        }
    }
}

impl Condition {
    pub fn check(&self, d: &Digraph) -> Result<ConditionVerdict> {
        self.validate(d)?;
        Ok(ConditionVerdict::from_violator(self.first_violation(d)))
    }

    fn validate(&self, d: &Digraph) -> Result<()> {
        match *self {
            Condition::M { z0 } => d.check_vertex(z0),
            Condition::MeynielSet(set) => d.check_set(set),
            _ => Ok(()),
        }
    }

    /// Whether `violation` really breaks this condition in `d`.
    pub fn confirms(&self, d: &Digraph, violation: &Violation) -> bool {
        if self.validate(d).is_err() {
            return false;
        }
        let n = d.order();
        match (*self, *violation) {
            (Condition::NashWilliams | Condition::GhouilaHouri, Violation::Vertex { vertex, .. }) => {
                vertex < n && self.vertex_fails(d, vertex)
            }
            (_, Violation::Pair { x, y, .. }) => {
                x < n && y < n && x != y && self.pair_fails(d, x, y).is_some()
            }
            _ => false,
        }
    }

    fn vertex_fails(&self, d: &Digraph, v: usize) -> bool {
        let n = d.order();
        match self {
            Condition::NashWilliams => 2 * d.out_degree(v) < n || 2 * d.in_degree(v) < n,
            Condition::GhouilaHouri => d.total_degree(v) < n,
            _ => false,
        }
    }

    /// `Some(sum, threshold)` when the pair is constrained and falls short.
    fn pair_fails(&self, d: &Digraph, x: usize, y: usize) -> Option<(usize, usize)> {
        let n = d.order();
        let (constrained, sum, threshold) = match *self {
            Condition::Woodall => (
                !d.has_arc(x, y),
                d.out_degree(x) + d.in_degree(y),
                n,
            ),
            Condition::OverbeckLarisch => (
                !d.has_arc(x, y),
                d.out_degree(x) + d.in_degree(y),
                n + 1,
            ),
            Condition::Meyniel => (!d.adjacent(x, y), total(d, x, y), 2 * n - 1),
            Condition::M { z0 } => (
                !d.adjacent(x, y) && x != z0 && y != z0,
                total(d, x, y),
                2 * n - 1,
            ),
            Condition::N => (!d.adjacent(x, y), total(d, x, y), 2 * n + 1),
            Condition::MeynielSet(set) => (
                !d.adjacent(x, y) && set.contains(x) && set.contains(y),
                total(d, x, y),
                2 * n - 1,
            ),
            Condition::NashWilliams | Condition::GhouilaHouri => return None,
        };
        (constrained && sum < threshold).then_some((sum, threshold))
    }

    fn ordered(&self) -> bool {
        matches!(self, Condition::Woodall | Condition::OverbeckLarisch)
    }

    fn first_violation(&self, d: &Digraph) -> Option<Violation> {
        let n = d.order();
        if matches!(self, Condition::NashWilliams | Condition::GhouilaHouri) {
            return (0..n)
                .find(|&v| self.vertex_fails(d, v))
                .map(|vertex| Violation::Vertex {
                    vertex,
                    out_deg: d.out_degree(vertex),
                    in_deg: d.in_degree(vertex),
                });
        }
        for x in 0..n {
            let ys = if self.ordered() { 0 } else { x + 1 };
            for y in ys..n {
                if x == y {
                    continue;
                }
                if let Some((sum, threshold)) = self.pair_fails(d, x, y) {
                    return Some(Violation::Pair {
                        x,
                        y,
                        sum,
                        threshold,
                    });
                }
            }
        }
        None
    }
}

fn total(d: &Digraph, x: usize, y: usize) -> usize {
    d.total_degree(x) + d.total_degree(y)
}

pub fn check_nash_williams(d: &Digraph) -> ConditionVerdict {
    Condition::NashWilliams.check(d).expect("no parameters")
}

pub fn check_ghouila_houri(d: &Digraph) -> ConditionVerdict {
    Condition::GhouilaHouri.check(d).expect("no parameters")
}

pub fn check_woodall(d: &Digraph) -> ConditionVerdict {
    Condition::Woodall.check(d).expect("no parameters")
}

pub fn check_meyniel(d: &Digraph) -> ConditionVerdict {
    Condition::Meyniel.check(d).expect("no parameters")
}

pub fn check_overbeck_larisch(d: &Digraph) -> ConditionVerdict {
    Condition::OverbeckLarisch.check(d).expect("no parameters")
}

pub fn condition_m(d: &Digraph, z0: usize) -> Result<ConditionVerdict> {
    Condition::M { z0 }.check(d)
}

pub fn condition_n(d: &Digraph) -> ConditionVerdict {
    Condition::N.check(d).expect("no parameters")
}

pub fn is_meyniel_set(d: &Digraph, set: VertexSet) -> Result<ConditionVerdict> {
    Condition::MeynielSet(set).check(d)
}

/// Every ordered pair of `set` is joined by a path of `d`.
pub fn is_m_strongly_connected(d: &Digraph, set: VertexSet) -> Result<bool> {
    d.check_set(set)?;
    Ok(set
        .iter()
        .all(|x| set.is_subset(VertexSet::from_bits(forward_closure(d, x, d.vertices())))))
}

/// Vertices of degree at least `n`.
pub fn high_degree_vertices(d: &Digraph) -> VertexSet {
    (0..d.order())
        .filter(|&v| d.total_degree(v) >= d.order())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::darbinyan_counterexample;

    #[test]
    fn nash_williams_examples() {
        assert!(check_nash_williams(&Digraph::complete(4).unwrap()).holds);
        let c4 = check_nash_williams(&Digraph::directed_cycle(4).unwrap());
        assert_eq!(
            c4.violator,
            Some(Violation::Vertex {
                vertex: 0,
                out_deg: 1,
                in_deg: 1
            })
        );
        let d8 = check_nash_williams(&darbinyan_counterexample(8).unwrap());
        assert!(matches!(
            d8.violator,
            Some(Violation::Vertex {
                vertex: 0,
                out_deg: 2,
                ..
            })
        ));
    }

    #[test]
    fn nash_williams_uses_exact_halves() {
        // n = 3: out-degree 1 is below 3/2 even though floor(3/2) = 1.
        let c3 = Digraph::directed_cycle(3).unwrap();
        assert!(!check_nash_williams(&c3).holds);
    }

    #[test]
    fn ghouila_houri_examples() {
        assert!(check_ghouila_houri(&Digraph::complete(3).unwrap()).holds);
        assert!(!check_ghouila_houri(&Digraph::directed_cycle(3).unwrap()).holds);
        let d = darbinyan_counterexample(8).unwrap();
        let v = check_ghouila_houri(&d);
        assert!(matches!(v.violator, Some(Violation::Vertex { vertex: 0, .. })));
        let others: Vec<_> = (0..8).filter(|&x| d.total_degree(x) < 8).collect();
        assert_eq!(others, vec![0]);
    }

    #[test]
    fn woodall_examples() {
        assert!(check_woodall(&Digraph::complete(3).unwrap()).holds);
        assert!(check_woodall(&Digraph::complete(2).unwrap()).holds);
        let v = check_woodall(&Digraph::directed_cycle(4).unwrap());
        assert_eq!(
            v.violator,
            Some(Violation::Pair {
                x: 0,
                y: 2,
                sum: 2,
                threshold: 4
            })
        );
    }

    #[test]
    fn meyniel_and_overbeck_larisch_examples() {
        for n in 2..7 {
            let k = Digraph::complete(n).unwrap();
            assert!(check_meyniel(&k).holds);
            assert!(check_overbeck_larisch(&k).holds);
        }
        for n in 4..8 {
            let c = Digraph::directed_cycle(n).unwrap();
            assert!(!check_meyniel(&c).holds);
            assert!(!check_overbeck_larisch(&c).holds);
        }
    }

    #[test]
    fn condition_m_examples() {
        // Only pairs through z0 = 0 are non-adjacent.
        let mut d = Digraph::complete(5).unwrap();
        for v in 2..5 {
            d.remove_arc(0, v).unwrap();
            d.remove_arc(v, 0).unwrap();
        }
        assert!(condition_m(&d, 0).unwrap().holds);
        assert!(!check_meyniel(&d).holds);
        assert!(condition_m(&d, 7).is_err());
    }

    #[test]
    fn condition_n_examples() {
        assert!(condition_n(&Digraph::complete(6).unwrap()).holds);
        let sparse = Digraph::new(5, [(0, 1), (1, 2)]).unwrap();
        let v = condition_n(&sparse);
        assert_eq!(
            v.violator,
            Some(Violation::Pair {
                x: 0,
                y: 2,
                sum: 2,
                threshold: 11
            })
        );
        assert!(Condition::N.confirms(&sparse, &v.violator.unwrap()));
    }

    #[test]
    fn meyniel_set_examples() {
        let c5 = Digraph::directed_cycle(5).unwrap();
        assert!(is_meyniel_set(&c5, VertexSet::singleton(3)).unwrap().holds);
        assert_eq!(
            is_meyniel_set(&c5, c5.vertices()).unwrap(),
            check_meyniel(&c5)
        );
        assert_eq!(
            is_meyniel_set(&c5, c5.vertices().without(0)).unwrap(),
            condition_m(&c5, 0).unwrap()
        );
    }

    #[test]
    fn m_strong_examples() {
        let c4 = Digraph::directed_cycle(4).unwrap();
        assert!(is_m_strongly_connected(&c4, c4.vertices()).unwrap());
        let d = Digraph::new(5, [(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)]).unwrap();
        assert!(is_m_strongly_connected(&d, [0, 1].into_iter().collect()).unwrap());
        assert!(!is_m_strongly_connected(&d, [0, 2].into_iter().collect()).unwrap());
        assert!(!is_m_strongly_connected(&d, [0, 4].into_iter().collect()).unwrap());
    }

    #[test]
    fn confirms_rejects_bogus_witnesses() {
        let k4 = Digraph::complete(4).unwrap();
        let fake = Violation::Pair {
            x: 0,
            y: 1,
            sum: 0,
            threshold: 7,
        };
        assert!(!Condition::Meyniel.confirms(&k4, &fake));
        let fake_vertex = Violation::Vertex {
            vertex: 0,
            out_deg: 0,
            in_deg: 0,
        };
        assert!(!Condition::GhouilaHouri.confirms(&k4, &fake_vertex));
        assert!(!Condition::Meyniel.confirms(&k4, &fake_vertex));
    }
}
