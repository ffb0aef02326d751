//! Exhaustive reference implementations used as test oracles.
#![allow(dead_code)]

use hamconn::random::{prng, sample_digraph, ArcProbability};
use hamconn::{Digraph, VertexSet};

/// Calls `visit` with every ordering of `items`.
pub fn for_each_permutation(items: &[usize], visit: &mut impl FnMut(&[usize])) {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if rest.is_empty() {
            visit(prefix);
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            go(prefix, rest, visit);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    go(&mut Vec::new(), &mut items.to_vec(), visit);
}

fn is_walk(d: &Digraph, seq: &[usize]) -> bool {
    seq.windows(2).all(|w| d.has_arc(w[0], w[1]))
}

/// Hamiltonian cycles counted once each: vertex 0 is fixed first.
pub fn count_ham_cycles(d: &Digraph) -> u64 {
    let n = d.order();
    if n < 2 {
        return 0;
    }
    let rest: Vec<usize> = (1..n).collect();
    let mut count = 0;
    for_each_permutation(&rest, &mut |perm| {
        let mut seq = vec![0];
        seq.extend_from_slice(perm);
        if is_walk(d, &seq) && d.has_arc(*seq.last().unwrap(), 0) {
            count += 1;
        }
    });
    count
}

pub fn count_ham_paths(d: &Digraph, u: usize, v: usize) -> u64 {
    let middle: Vec<usize> = (0..d.order()).filter(|&x| x != u && x != v).collect();
    let mut count = 0;
    for_each_permutation(&middle, &mut |perm| {
        let mut seq = vec![u];
        seq.extend_from_slice(perm);
        seq.push(v);
        if is_walk(d, &seq) {
            count += 1;
        }
    });
    count
}

/// Whether the vertices of `set` can be arranged into a cycle.
pub fn spans_cycle(d: &Digraph, set: &[usize]) -> bool {
    if set.len() < 2 {
        return false;
    }
    let mut found = false;
    for_each_permutation(&set[1..], &mut |perm| {
        if found {
            return;
        }
        let mut seq = vec![set[0]];
        seq.extend_from_slice(perm);
        found = is_walk(d, &seq) && d.has_arc(*seq.last().unwrap(), set[0]);
    });
    found
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

/// Vertex sets that span a cycle.
pub fn cycle_sets(d: &Digraph) -> Vec<Vec<usize>> {
    subsets(d.order()).filter(|s| spans_cycle(d, s)).collect()
}

/// Reachability matrix by repeated relaxation.
pub fn reach(d: &Digraph, removed: &[usize]) -> Vec<Vec<bool>> {
    let n = d.order();
    let mut r = vec![vec![false; n]; n];
    for (u, row) in r.iter_mut().enumerate() {
        row[u] = true;
        for (v, cell) in row.iter_mut().enumerate() {
            if d.has_arc(u, v) && !removed.contains(&u) && !removed.contains(&v) {
                *cell = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

pub fn strong_after_removing(d: &Digraph, removed: &[usize]) -> bool {
    let r = reach(d, removed);
    let kept: Vec<usize> = (0..d.order()).filter(|v| !removed.contains(v)).collect();
    kept.iter().all(|&a| kept.iter().all(|&b| r[a][b]))
}

/// Order at least `k + 1` and strong after deleting any `k - 1` vertices.
pub fn k_strong(d: &Digraph, k: usize) -> bool {
    let n = d.order();
    n > k
        && subsets(n)
            .filter(|s| s.len() < k)
            .all(|s| strong_after_removing(d, &s))
}

pub fn connectivity(d: &Digraph) -> usize {
    (1..d.order()).take_while(|&k| k_strong(d, k)).last().unwrap_or(0)
}

pub fn random_digraphs(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Digraph> {
    use rand::Rng;
    let mut rng = prng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let p = ArcProbability::percent(rng.gen_range(15..=90)).unwrap();
            sample_digraph(n, p, &mut rng).unwrap()
        })
        .collect()
}

/// Every tournament on `n` vertices.
pub fn tournaments(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let arcs = pairs
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (u, v) } else { (v, u) });
            Digraph::new(n, arcs).unwrap()
        })
        .collect()
}

pub fn degree(d: &Digraph, x: usize) -> usize {
    (0..d.order())
        .map(|y| d.has_arc(x, y) as usize + d.has_arc(y, x) as usize)
        .sum()
}

pub fn set_of(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}
