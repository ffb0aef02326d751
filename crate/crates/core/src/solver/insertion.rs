//! Inserting outside vertices into a path between two consecutive vertices.

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, Path, VertexSet};
use crate::error::{Error, Result};

/// Result of [`extend_path_max`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionOutcome {
    pub path: Path,
    /// Inserted candidates, in insertion order.
    pub absorbed: Vec<usize>,
    pub leftover: VertexSet,
}

fn checked_path(d: &Digraph, path: &Path) -> Result<()> {
    Path::new(d, path.vertices().to_vec()).map(|_| ())
}

/// Inserts `x` between `x_i` and `x_{i+1}` for the smallest `i` with
/// `x_i -> x` and `x -> x_{i+1}`, or returns `None` if no such slot exists.
pub fn insert_vertex(d: &Digraph, path: &Path, x: usize) -> Result<Option<Path>> {
    d.check_vertex(x)?;
    checked_path(d, path)?;
    if path.vertices().contains(&x) {
        return Err(Error::VertexOnPath(x));
    }
    Ok(insert_unchecked(d, path.vertices(), x).map(Path::from_trusted))
}

fn insert_unchecked(d: &Digraph, seq: &[usize], x: usize) -> Option<Vec<usize>> {
    let slot = seq
        .windows(2)
        .position(|w| d.has_arc(w[0], x) && d.has_arc(x, w[1]))?;
    let mut out = Vec::with_capacity(seq.len() + 1);
    out.extend_from_slice(&seq[..=slot]);
    out.push(x);
    out.extend_from_slice(&seq[slot + 1..]);
    Some(out)
}

/// Extends `start` with vertices of `candidates` as much as possible: scan
/// the remaining candidates in ascending order, insert the first one that
/// fits, and rescan until none fits. Endpoints never change.
pub fn extend_path_max(d: &Digraph, start: &Path, candidates: VertexSet) -> Result<ExtensionOutcome> {
    d.check_set(candidates)?;
    checked_path(d, start)?;
    if let Some(v) = candidates.intersection(start.vertex_set()).min() {
        return Err(Error::CandidateOnPath(v));
    }
    let mut seq = start.vertices().to_vec();
    let mut leftover = candidates;
    let mut absorbed = Vec::new();
    'scan: loop {
        for y in leftover {
            if let Some(next) = insert_unchecked(d, &seq, y) {
                seq = next;
                leftover.remove(y);
                absorbed.push(y);
                continue 'scan;
            }
        }
        break;
    }
    Ok(ExtensionOutcome {
        path: Path::from_trusted(seq),
        absorbed,
        leftover,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_examples() {
        let d = Digraph::new(3, [(0, 1), (0, 2), (2, 1)]).unwrap();
        let p = Path::new(&d, vec![0, 1]).unwrap();
        assert_eq!(
            insert_vertex(&d, &p, 2).unwrap().unwrap().vertices(),
            &[0, 2, 1]
        );

        let d = Digraph::new(3, [(0, 1), (2, 0), (1, 2)]).unwrap();
        let p = Path::new(&d, vec![0, 1]).unwrap();
        assert_eq!(insert_vertex(&d, &p, 2).unwrap(), None);
        assert_eq!(insert_vertex(&d, &p, 1), Err(Error::VertexOnPath(1)));
    }

    #[test]
    fn insert_uses_smallest_slot() {
        let d = Digraph::complete(4).unwrap();
        let p = Path::new(&d, vec![0, 1, 2]).unwrap();
        assert_eq!(
            insert_vertex(&d, &p, 3).unwrap().unwrap().vertices(),
            &[0, 3, 1, 2]
        );
    }

    #[test]
    fn insert_rejects_invalid_path() {
        let d = Digraph::new(3, [(0, 1)]).unwrap();
        let bogus = Path::from_trusted(vec![1, 0]);
        assert!(matches!(
            insert_vertex(&d, &bogus, 2),
            Err(Error::InvalidWalk { .. })
        ));
    }

    #[test]
    fn extend_with_nothing() {
        let d = Digraph::complete(3).unwrap();
        let p = Path::new(&d, vec![0, 1]).unwrap();
        let out = extend_path_max(&d, &p, VertexSet::EMPTY).unwrap();
        assert_eq!(out.path, p);
        assert!(out.absorbed.is_empty());
        assert!(out.leftover.is_empty());
    }

    #[test]
    fn extend_rescans_after_success() {
        // 2 only fits after 3 has been placed between 0 and 1.
        let d = Digraph::new(4, [(0, 1), (0, 3), (3, 1), (3, 2), (2, 1)]).unwrap();
        let p = Path::new(&d, vec![0, 1]).unwrap();
        let out = extend_path_max(&d, &p, [2, 3].into_iter().collect()).unwrap();
        assert_eq!(out.path.vertices(), &[0, 3, 2, 1]);
        assert_eq!(out.absorbed, vec![3, 2]);
        assert!(out.leftover.is_empty());

        let out = extend_path_max(&d, &p, VertexSet::singleton(2)).unwrap();
        assert_eq!(out.leftover, VertexSet::singleton(2));
    }

    #[test]
    fn extend_rejects_overlap() {
        let d = Digraph::complete(3).unwrap();
        let p = Path::new(&d, vec![0, 1]).unwrap();
        assert_eq!(
            extend_path_max(&d, &p, [1, 2].into_iter().collect()),
            Err(Error::CandidateOnPath(1))
        );
    }
}
