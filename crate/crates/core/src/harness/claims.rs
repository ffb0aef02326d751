//! Instance generators and evaluators, one pair per claim.

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use super::{ClaimId, Evaluation, Instance, InstanceData, VerifyConfig};
use crate::conditions::{condition_m, condition_n, high_degree_vertices, is_m_strongly_connected, is_meyniel_set};
use crate::connectivity::{is_k_strong, is_strong, strong_components, vertex_connectivity};
use crate::constructions::{darbinyan_counterexample, expand_at, reduce_pair, thomassen_refutation};
use crate::digraph::{Cycle, Digraph, Path, VertexSet};
use crate::error::Error;
use crate::random::{prng, sample_digraph, ArcProbability, Prng, MAX_ATTEMPTS};
use crate::solver::{insert_vertex, CountMode, Solver};

fn default_samples(claim: ClaimId) -> usize {
    match claim {
        ClaimId::Thm33Bijection => 100,
        ClaimId::Thm45 | ClaimId::Cor47 | ClaimId::Cor48 => 500,
        ClaimId::Lemma43 | ClaimId::Lemma44 | ClaimId::Thm49 | ClaimId::Thm410 => 300,
        _ => 200,
    }
}

/// Orders `lo..=hi` cut down to the configured cap, or `None` if nothing
/// is left.
fn orders(lo: usize, hi: usize, config: &VerifyConfig) -> Option<(usize, usize)> {
    let hi = config.max_order.map_or(hi, |m| hi.min(m));
    (lo <= hi).then_some((lo, hi))
}

/// Independent stream per (claim, instance) so batches can run in any order.
fn instance_rng(config: &VerifyConfig, claim: ClaimId, index: usize) -> Prng {
    let mut rng = prng(config.seed);
    rng.set_stream((claim.index() << 32) | index as u64);
    rng
}

fn percent_between(rng: &mut Prng, lo: u32, hi: u32) -> ArcProbability {
    ArcProbability::percent(rng.gen_range(lo..=hi)).expect("at most 100")
}

fn random_digraph(rng: &mut Prng, n: usize, lo: u32, hi: u32) -> Digraph {
    let p = percent_between(rng, lo, hi);
    sample_digraph(n, p, rng).expect("order within range")
}

/// Keeps each arc at `w` with probability `keep`.
fn thin_at(d: &mut Digraph, w: usize, keep: ArcProbability, rng: &mut Prng) {
    for v in 0..d.order() {
        for (a, b) in [(w, v), (v, w)] {
            if d.has_arc(a, b) && !keep.sample(rng) {
                d.remove_arc(a, b).expect("in range");
            }
        }
    }
}

struct Candidate {
    digraph: Digraph,
    data: InstanceData,
    descr: String,
}

/// Draws candidates until one is accepted. After `MAX_ATTEMPTS` the last
/// draw is returned as is; its evaluation then comes out vacuous.
fn draw(
    rng: &mut Prng,
    mut make: impl FnMut(&mut Prng) -> Candidate,
    accept: impl Fn(&Candidate) -> bool,
) -> Candidate {
    let mut last = make(rng);
    for _ in 1..MAX_ATTEMPTS {
        if accept(&last) {
            return last;
        }
        last = make(rng);
    }
    if !accept(&last) {
        last.descr.push_str(" (generator gave up)");
    }
    last
}

fn random_batch(
    claim: ClaimId,
    config: &VerifyConfig,
    range: Option<(usize, usize)>,
    make: impl Fn(&mut Prng, usize) -> Candidate + Sync,
) -> Vec<Instance> {
    let Some((lo, hi)) = range else {
        return Vec::new();
    };
    let samples = config.samples.unwrap_or_else(|| default_samples(claim));
    (0..samples)
        .into_par_iter()
        .map(|id| {
            let mut rng = instance_rng(config, claim, id);
            let n = rng.gen_range(lo..=hi);
            let c = make(&mut rng, n);
            Instance {
                id,
                descr: c.descr,
                digraph: c.digraph,
                data: c.data,
            }
        })
        .collect()
}

fn plain(digraph: Digraph, descr: String) -> Candidate {
    Candidate {
        digraph,
        data: InstanceData::Plain,
        descr,
    }
}

/// Adds vertices of `order` to `set` one at a time, keeping it a Meyniel
/// set.
fn greedy_meyniel_set(d: &Digraph, order: &[usize], target: usize) -> VertexSet {
    let mut set = VertexSet::EMPTY;
    for &v in order {
        if set.len() == target {
            break;
        }
        let grown = set.with(v);
        if is_meyniel_set(d, grown).expect("in range").holds {
            set = grown;
        }
    }
    set
}

pub(super) fn instances(claim: ClaimId, config: &VerifyConfig) -> Vec<Instance> {
    match claim {
        ClaimId::Lemma31 => random_batch(claim, config, orders(6, 10, config), |rng, n| {
            plain(random_digraph(rng, n, 70, 95), format!("random n={n}"))
        }),
        ClaimId::Lemma32 => random_batch(claim, config, orders(6, 10, config), |rng, n| {
            plain(random_digraph(rng, n, 45, 90), format!("random n={n}"))
        }),
        ClaimId::Thm33Bijection => random_batch(claim, config, orders(6, 9, config), |rng, n| {
            plain(random_digraph(rng, n, 35, 85), format!("random n={n}"))
        }),
        ClaimId::Thm34 => constructed_orders(8, 12, config)
            .map(|n| {
                (
                    darbinyan_counterexample(n).expect("n >= 8"),
                    InstanceData::Plain,
                    format!("darbinyan n={n}"),
                )
            })
            .enumerate()
            .map(numbered)
            .collect(),
        ClaimId::Remark35 => constructed_orders(8, 10, config)
            .flat_map(|n| {
                let d = darbinyan_counterexample(n).expect("n >= 8");
                let missing: Vec<_> = d.missing_arcs().collect();
                missing.into_iter().map(move |(u, v)| {
                    let descr = format!("darbinyan n={n} plus {}->{}", d.label(u), d.label(v));
                    (d.clone(), InstanceData::Pair { u, v }, descr)
                })
            })
            .enumerate()
            .map(numbered)
            .collect(),
        ClaimId::Thm36 => constructed_orders(9, 12, config)
            .map(|n| {
                let e = thomassen_refutation(n).expect("n >= 9");
                (
                    e.digraph,
                    InstanceData::Pair { u: e.u, v: e.v },
                    format!("thomassen n={n}"),
                )
            })
            .enumerate()
            .map(numbered)
            .collect(),
        ClaimId::Thm41Transfer => transfer_instances(config),
        ClaimId::Lemma43 => random_batch(claim, config, orders(4, 9, config), planted_cycle),
        ClaimId::Lemma44 => random_batch(claim, config, orders(3, 10, config), planted_path),
        ClaimId::Thm45 | ClaimId::Cor47 => {
            random_batch(claim, config, orders(3, 10, config), condition_m_instance)
        }
        ClaimId::Cor48 => random_batch(claim, config, orders(3, 10, config), high_degree_instance),
        ClaimId::Thm49 => random_batch(claim, config, orders(3, 9, config), meyniel_strong_instance),
        ClaimId::Thm410 => {
            random_batch(claim, config, orders(3, 9, config), meyniel_component_instance)
        }
        ClaimId::Thm37Empirical => {
            random_batch(claim, config, orders(9, 10, config), near_ghouila_houri_instance)
        }
    }
}

fn constructed_orders(lo: usize, hi: usize, config: &VerifyConfig) -> std::ops::RangeInclusive<usize> {
    match orders(lo, hi, config) {
        Some((lo, hi)) => lo..=hi,
        #[allow(clippy::reversed_empty_ranges)]
        None => 1..=0,
    }
}

fn numbered((id, (digraph, data, descr)): (usize, (Digraph, InstanceData, String))) -> Instance {
    Instance {
        id,
        descr,
        digraph,
        data,
    }
}

/// Even ids are dense order 9-10 digraphs for the forward direction; odd
/// ids carry a `z0` on an order 8-9 digraph for the backward direction.
fn transfer_instances(config: &VerifyConfig) -> Vec<Instance> {
    let claim = ClaimId::Thm41Transfer;
    let forward = orders(9, 10, config);
    let backward = orders(8, 9, config);
    let samples = config.samples.unwrap_or_else(|| default_samples(claim));
    (0..samples)
        .into_par_iter()
        .filter_map(|id| {
            let mut rng = instance_rng(config, claim, id);
            let c = if id % 2 == 0 {
                let (lo, hi) = forward?;
                let n = rng.gen_range(lo..=hi);
                draw(
                    &mut rng,
                    |r| plain(random_digraph(r, n, 85, 98), format!("forward n={n}")),
                    |c| condition_n(&c.digraph).holds,
                )
            } else {
                let (lo, hi) = backward?;
                let n = rng.gen_range(lo..=hi);
                let z0 = rng.gen_range(0..n);
                draw(
                    &mut rng,
                    |r| {
                        let mut d = random_digraph(r, n, 75, 95);
                        let keep = percent_between(r, 40, 100);
                        thin_at(&mut d, z0, keep, r);
                        Candidate {
                            digraph: d,
                            data: InstanceData::Vertex { z0 },
                            descr: format!("backward n={n} z0={z0}"),
                        }
                    },
                    |c| condition_m(&c.digraph, z0).expect("in range").holds,
                )
            };
            Some(Instance {
                id,
                descr: c.descr,
                digraph: c.digraph,
                data: c.data,
            })
        })
        .collect()
}

fn random_subset<T: Copy>(rng: &mut Prng, items: &[T], size: usize) -> Vec<T> {
    items.choose_multiple(rng, size).copied().collect()
}

fn planted_cycle(rng: &mut Prng, n: usize) -> Candidate {
    let mut d = random_digraph(rng, n, 10, 50);
    let m = rng.gen_range(2..n);
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let cycle = vertices[..m].to_vec();
    let x = vertices[m];
    for i in 0..m {
        d.add_arc(cycle[i], cycle[(i + 1) % m]).expect("distinct");
    }
    let links: Vec<(usize, usize)> = cycle.iter().flat_map(|&c| [(x, c), (c, x)]).collect();
    let count = rng.gen_range(m + 1..=2 * m);
    for (a, b) in random_subset(rng, &links, count) {
        d.add_arc(a, b).expect("distinct");
    }
    Candidate {
        digraph: d,
        data: InstanceData::CycleWithVertex { cycle, x },
        descr: format!("planted {m}-cycle n={n}"),
    }
}

fn planted_path(rng: &mut Prng, n: usize) -> Candidate {
    let mut d = random_digraph(rng, n, 10, 50);
    let m = rng.gen_range(2..n);
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let path = vertices[..m].to_vec();
    let x = vertices[m];
    for w in path.windows(2) {
        d.add_arc(w[0], w[1]).expect("distinct");
    }
    let links: Vec<(usize, usize)> = path.iter().flat_map(|&c| [(x, c), (c, x)]).collect();
    let count = rng.gen_range(m + 2..=2 * m);
    for (a, b) in random_subset(rng, &links, count) {
        d.add_arc(a, b).expect("distinct");
    }
    Candidate {
        digraph: d,
        data: InstanceData::PathWithVertex { path, x },
        descr: format!("planted {m}-path n={n}"),
    }
}

/// Dense strong digraphs satisfying (M); half of them have the arcs at `z0`
/// thinned out so that `z0` is the only low-degree vertex.
fn condition_m_instance(rng: &mut Prng, n: usize) -> Candidate {
    let z0 = rng.gen_range(0..n);
    let thin = rng.gen_bool(0.5);
    draw(
        rng,
        |r| {
            let mut d = random_digraph(r, n, 70, 95);
            if thin {
                let keep = percent_between(r, 10, 50);
                thin_at(&mut d, z0, keep, r);
            }
            Candidate {
                digraph: d,
                data: InstanceData::Vertex { z0 },
                descr: format!("random n={n} z0={z0}{}", if thin { " thinned" } else { "" }),
            }
        },
        |c| is_strong(&c.digraph) && condition_m(&c.digraph, z0).expect("in range").holds,
    )
}

fn high_degree_instance(rng: &mut Prng, n: usize) -> Candidate {
    let w = rng.gen_range(0..n);
    let thin = rng.gen_bool(0.5);
    draw(
        rng,
        |r| {
            let mut d = random_digraph(r, n, 60, 95);
            if thin {
                let keep = percent_between(r, 10, 60);
                thin_at(&mut d, w, keep, r);
            }
            let descr = format!("random n={n}{}", if thin { " thinned" } else { "" });
            plain(d, descr)
        },
        |c| is_strong(&c.digraph) && high_degree_vertices(&c.digraph).len() + 1 >= n,
    )
}

fn meyniel_strong_instance(rng: &mut Prng, n: usize) -> Candidate {
    let c = draw(
        rng,
        |r| plain(random_digraph(r, n, 25, 75), String::new()),
        |c| is_strong(&c.digraph),
    );
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let target = rng.gen_range(1..=n);
    let set = greedy_meyniel_set(&c.digraph, &order, target);
    Candidate {
        descr: format!("random n={n} |M|={}", set.len()),
        digraph: c.digraph,
        data: InstanceData::Set { set },
    }
}

/// Possibly non-strong digraphs (a source and a sink may be forced) with a
/// Meyniel set inside the largest strong component.
fn meyniel_component_instance(rng: &mut Prng, n: usize) -> Candidate {
    let c = draw(
        rng,
        |r| {
            let mut d = random_digraph(r, n, 25, 75);
            if r.gen_bool(0.5) {
                let source = r.gen_range(0..n);
                for v in d.in_neighbors(source) {
                    d.remove_arc(v, source).expect("in range");
                }
            }
            if r.gen_bool(0.5) {
                let sink = r.gen_range(0..n);
                for v in d.out_neighbors(sink) {
                    d.remove_arc(sink, v).expect("in range");
                }
            }
            plain(d, String::new())
        },
        |c| largest_component(&c.digraph).len() >= 2,
    );
    let mut order = largest_component(&c.digraph);
    order.shuffle(rng);
    let target = rng.gen_range(2..=order.len().max(2));
    let set = greedy_meyniel_set(&c.digraph, &order, target);
    Candidate {
        descr: format!(
            "random n={n} {} |M|={}",
            if is_strong(&c.digraph) { "strong" } else { "non-strong" },
            set.len()
        ),
        digraph: c.digraph,
        data: InstanceData::Set { set },
    }
}

fn largest_component(d: &Digraph) -> Vec<usize> {
    strong_components(d)
        .into_iter()
        .fold(Vec::new(), |best, c| if c.len() > best.len() { c } else { best })
}

fn near_ghouila_houri_instance(rng: &mut Prng, n: usize) -> Candidate {
    let w = rng.gen_range(0..n);
    draw(
        rng,
        |r| {
            let mut d = random_digraph(r, n, 55, 90);
            let keep = percent_between(r, 35, 60);
            thin_at(&mut d, w, keep, r);
            plain(d, format!("random n={n} thinned at {w}"))
        },
        |c| near_ghouila_houri_hypotheses(&c.digraph),
    )
}

fn near_ghouila_houri_hypotheses(d: &Digraph) -> bool {
    let n = d.order();
    n >= 9
        && d.min_degree() + 4 >= n
        && high_degree_vertices(d).len() + 1 >= n
        && is_k_strong(d, 2).expect("k > 0")
}

pub(super) fn evaluate(claim: ClaimId, inst: &Instance) -> Evaluation {
    let solver = Solver::default();
    let d = &inst.digraph;
    let result = match claim {
        ClaimId::Lemma31 => reductions_keep_connectivity(d),
        ClaimId::Lemma32 => expansions_raise_connectivity(d),
        ClaimId::Thm33Bijection => paths_match_reduced_cycles(&solver, d),
        ClaimId::Thm34 => non_hamiltonian_family(&solver, d),
        ClaimId::Remark35 => one_arc_makes_hamiltonian(&solver, d, &inst.data),
        ClaimId::Thm36 => not_hamiltonian_connected_family(&solver, d, &inst.data),
        ClaimId::Thm41Transfer => transfer(d, &inst.data),
        ClaimId::Lemma43 => cycle_lengths_through_vertex(&solver, d, &inst.data),
        ClaimId::Lemma44 => vertex_inserts_into_path(d, &inst.data),
        ClaimId::Thm45 => long_cycle_under_m(&solver, d, &inst.data),
        ClaimId::Cor47 => cycle_missing_only_z0(&solver, d, &inst.data),
        ClaimId::Cor48 => cycle_through_high_degree(&solver, d),
        ClaimId::Thm49 => cycle_through_meyniel_set_strong(&solver, d, &inst.data),
        ClaimId::Thm410 => cycle_through_meyniel_set_reachable(&solver, d, &inst.data),
        ClaimId::Thm37Empirical => hamiltonian_near_ghouila_houri(&solver, d),
    };
    result.unwrap_or_else(|e| Evaluation::vacuous(format!("malformed instance: {e}")))
}

type Outcome = Result<Evaluation, Error>;

fn wrong_data(data: &InstanceData) -> Outcome {
    Ok(Evaluation::vacuous(format!("instance data {data:?} does not fit this claim")))
}

fn reductions_keep_connectivity(d: &Digraph) -> Outcome {
    let n = d.order();
    let k = vertex_connectivity(d);
    if n < 5 || k < 3 {
        return Ok(Evaluation::vacuous(format!("order {n}, connectivity {k}")));
    }
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let h = reduce_pair(d, u, v)?.digraph;
            if !is_k_strong(&h, k - 1)? {
                return Ok(Evaluation::fail(format!(
                    "reduction at ({u},{v}) has connectivity {} < {}",
                    vertex_connectivity(&h),
                    k - 1
                )));
            }
        }
    }
    Ok(Evaluation::pass(format!("connectivity {k}; all {} reductions {}-strong", n * (n - 1), k - 1)))
}

fn expansions_raise_connectivity(h: &Digraph) -> Outcome {
    let n = h.order();
    let k = vertex_connectivity(h);
    if n < 4 || k < 2 {
        return Ok(Evaluation::vacuous(format!("order {n}, connectivity {k}")));
    }
    for z in 0..n {
        let d = expand_at(h, z)?.digraph;
        if !is_k_strong(&d, k + 1)? {
            return Ok(Evaluation::fail(format!(
                "expansion at {z} has connectivity {} < {}",
                vertex_connectivity(&d),
                k + 1
            )));
        }
    }
    Ok(Evaluation::pass(format!("connectivity {k}; all {n} expansions {}-strong", k + 1)))
}

fn paths_match_reduced_cycles(solver: &Solver, d: &Digraph) -> Outcome {
    let n = d.order();
    if n < 5 {
        return Ok(Evaluation::vacuous(format!("order {n} < 5")));
    }
    let mut paths = 0u64;
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let h = reduce_pair(d, u, v)?.digraph;
            let path_count = solver.count_hamiltonian(d, CountMode::Path { from: u, to: v })?;
            let cycle_count = solver.count_hamiltonian(&h, CountMode::Cycle)?;
            let has_path = solver.hamiltonian_path_between(d, u, v)?.found;
            let has_cycle = solver.hamiltonian_cycle(&h).found;
            if path_count != cycle_count || has_path != has_cycle || has_path != (path_count > 0) {
                return Ok(Evaluation::fail(format!(
                    "pair ({u},{v}): {path_count} Hamiltonian paths (found {has_path}) \
                     but {cycle_count} Hamiltonian cycles in the reduction (found {has_cycle})"
                )));
            }
            paths += path_count;
        }
    }
    Ok(Evaluation::pass(format!("{paths} Hamiltonian paths matched over all pairs")))
}

fn non_hamiltonian_family(solver: &Solver, d: &Digraph) -> Outcome {
    let n = d.order();
    let strong2 = is_k_strong(d, 2)?;
    let hamiltonian = solver.hamiltonian_cycle(d);
    let high = high_degree_vertices(d).len();
    if strong2 && !hamiltonian.found && high + 1 >= n {
        Ok(Evaluation::pass(format!("2-strong, non-Hamiltonian, {high} vertices of degree >= {n}")))
    } else {
        let witness = hamiltonian.witness.map(|c| format!(", cycle {c}")).unwrap_or_default();
        Ok(Evaluation::fail(format!(
            "2-strong {strong2}, Hamiltonian {}{witness}, {high} vertices of degree >= {n}",
            hamiltonian.found
        )))
    }
}

fn one_arc_makes_hamiltonian(solver: &Solver, d: &Digraph, data: &InstanceData) -> Outcome {
    let &InstanceData::Pair { u, v } = data else {
        return wrong_data(data);
    };
    if d.has_arc(u, v) {
        return Ok(Evaluation::vacuous(format!("{u}->{v} is already an arc")));
    }
    let augmented = d.with_arc(u, v)?;
    match solver.hamiltonian_cycle(&augmented).witness {
        Some(c) => Ok(Evaluation::pass(format!("cycle {c}"))),
        None => Ok(Evaluation::fail(format!("still not Hamiltonian with {u}->{v}"))),
    }
}

fn not_hamiltonian_connected_family(solver: &Solver, d: &Digraph, data: &InstanceData) -> Outcome {
    let &InstanceData::Pair { u, v } = data else {
        return wrong_data(data);
    };
    let n = d.order();
    let strong3 = is_k_strong(d, 3)?;
    let min_degree = d.min_degree();
    let path = solver.hamiltonian_path_between(d, u, v)?;
    let connected = solver.strongly_hamiltonian_connected(d).holds;
    if strong3 && min_degree > n && !path.found && !connected {
        Ok(Evaluation::pass(format!("3-strong, min degree {min_degree}, no Hamiltonian ({u},{v})-path")))
    } else {
        Ok(Evaluation::fail(format!(
            "3-strong {strong3}, min degree {min_degree}, ({u},{v})-path {}, strongly Hamiltonian-connected {connected}",
            path.witness.map_or("none".to_string(), |p| p.to_string())
        )))
    }
}

/// Plain data: `d` of order `n + 1` with (N) and connectivity `k + 1 >= 2`;
/// every reduction must satisfy (M) at its `z0` and be `k`-strong.
/// `Vertex { z0 }`: `d` is `H` of order `n >= 8` with (M) at `z0` and
/// connectivity `k >= 1`; the expansion must satisfy (N) and be
/// `(k + 1)`-strong.
fn transfer(d: &Digraph, data: &InstanceData) -> Outcome {
    let n = d.order();
    match *data {
        InstanceData::Plain => {
            let k = vertex_connectivity(d);
            if n < 9 || k < 2 || !condition_n(d).holds {
                return Ok(Evaluation::vacuous(format!("order {n}, connectivity {k}, (N) fails or too small")));
            }
            for u in 0..n {
                for v in 0..n {
                    if u == v {
                        continue;
                    }
                    let r = reduce_pair(d, u, v)?;
                    let m = condition_m(&r.digraph, r.z0)?;
                    if !m.holds {
                        return Ok(Evaluation::fail(format!(
                            "reduction at ({u},{v}) violates (M): {}",
                            m.violator.expect("failing verdict has a violator")
                        )));
                    }
                    if !is_k_strong(&r.digraph, k - 1)? {
                        return Ok(Evaluation::fail(format!("reduction at ({u},{v}) is not {}-strong", k - 1)));
                    }
                }
            }
            Ok(Evaluation::pass(format!("forward: connectivity {k}, all reductions satisfy (M)")))
        }
        InstanceData::Vertex { z0 } => {
            d.check_vertex(z0)?;
            let k = vertex_connectivity(d);
            if n < 8 || k < 1 || !condition_m(d, z0)?.holds {
                return Ok(Evaluation::vacuous(format!("order {n}, connectivity {k}, (M) fails or too small")));
            }
            let e = expand_at(d, z0)?.digraph;
            let verdict = condition_n(&e);
            if !verdict.holds {
                return Ok(Evaluation::fail(format!(
                    "expansion violates (N): {}",
                    verdict.violator.expect("failing verdict has a violator")
                )));
            }
            if !is_k_strong(&e, k + 1)? {
                return Ok(Evaluation::fail(format!("expansion is not {}-strong", k + 1)));
            }
            Ok(Evaluation::pass(format!("backward: connectivity {k}, expansion satisfies (N)")))
        }
        _ => wrong_data(data),
    }
}

fn cycle_lengths_through_vertex(solver: &Solver, d: &Digraph, data: &InstanceData) -> Outcome {
    let InstanceData::CycleWithVertex { cycle, x } = data else {
        return wrong_data(data);
    };
    let (n, x) = (d.order(), *x);
    d.check_vertex(x)?;
    let cycle = Cycle::new(d, cycle.clone())?;
    let m = cycle.len();
    let linked = d.degree_within(x, cycle.vertex_set());
    if n < 3 || !(2..n).contains(&m) || cycle.contains(x) || linked < m + 1 {
        return Ok(Evaluation::vacuous(format!("m={m}, d(x,C)={linked}")));
    }
    let lengths = solver.cycle_lengths_through(d, x)?;
    match (2..=m + 1).find(|&k| lengths >> k & 1 == 0) {
        Some(k) => Ok(Evaluation::fail(format!("no {k}-cycle through {x} (m={m}, d(x,C)={linked})"))),
        None => Ok(Evaluation::pass(format!("cycles of lengths 2..={} through {x}", m + 1))),
    }
}

fn vertex_inserts_into_path(d: &Digraph, data: &InstanceData) -> Outcome {
    let InstanceData::PathWithVertex { path, x } = data else {
        return wrong_data(data);
    };
    let (n, x) = (d.order(), *x);
    d.check_vertex(x)?;
    let path = Path::new(d, path.clone())?;
    let m = path.len();
    if path.vertex_set().contains(x) {
        return Ok(Evaluation::vacuous(format!("{x} lies on the path")));
    }
    let linked = d.degree_within(x, path.vertex_set());
    if n < 3 || !(2..n).contains(&m) || linked < m + 2 {
        return Ok(Evaluation::vacuous(format!("m={m}, d(x,P)={linked}")));
    }
    match insert_vertex(d, &path, x)? {
        Some(longer)
            if longer.len() == m + 1
                && longer.first() == path.first()
                && longer.last() == path.last()
                && longer.is_valid_in(d) =>
        {
            Ok(Evaluation::pass(format!("extended path {longer}")))
        }
        Some(bad) => Ok(Evaluation::fail(format!("insertion produced malformed path {bad}"))),
        None => Ok(Evaluation::fail(format!("{x} cannot be inserted (m={m}, d(x,P)={linked})"))),
    }
}

/// `Some(z0)` if `d` is strong of order at least 3 and satisfies (M) at `z0`.
fn condition_m_hypotheses(d: &Digraph, data: &InstanceData) -> Result<Option<usize>, Error> {
    let &InstanceData::Vertex { z0 } = data else {
        return Ok(None);
    };
    let verdict = condition_m(d, z0)?;
    Ok((d.order() >= 3 && is_strong(d) && verdict.holds).then_some(z0))
}

fn long_cycle_under_m(solver: &Solver, d: &Digraph, data: &InstanceData) -> Outcome {
    let Some(_) = condition_m_hypotheses(d, data)? else {
        return Ok(Evaluation::vacuous("not strong or (M) fails"));
    };
    let n = d.order();
    if let Some(c) = solver.hamiltonian_cycle(d).witness {
        return Ok(Evaluation::pass(format!("Hamiltonian: {c}")));
    }
    match solver.longest_cycle(d) {
        Some(c) if c.len() + 1 >= n => Ok(Evaluation::pass(format!("{}-cycle {c}", c.len()))),
        longest => Ok(Evaluation::fail(format!(
            "not Hamiltonian and longest cycle has {} vertices",
            longest.map_or(0, |c| c.len())
        ))),
    }
}

fn cycle_missing_only_z0(solver: &Solver, d: &Digraph, data: &InstanceData) -> Outcome {
    let Some(z0) = condition_m_hypotheses(d, data)? else {
        return Ok(Evaluation::vacuous("not strong or (M) fails"));
    };
    let rest = d.vertices().without(z0);
    match solver.cycle_through(d, rest)? {
        Some(c) => Ok(Evaluation::pass(format!("cycle {c}"))),
        None => Ok(Evaluation::fail(format!("no cycle through all vertices except {z0}"))),
    }
}

fn cycle_through_high_degree(solver: &Solver, d: &Digraph) -> Outcome {
    let n = d.order();
    let high = high_degree_vertices(d);
    if n < 3 || !is_strong(d) || high.len() + 1 < n {
        return Ok(Evaluation::vacuous(format!("{} vertices of degree >= {n}", high.len())));
    }
    match solver.cycle_through(d, high)? {
        Some(c) if c.len() + 1 >= n => Ok(Evaluation::pass(format!("cycle {c} through {high}"))),
        Some(c) => Ok(Evaluation::fail(format!("cycle through {high} is only {c}"))),
        None => Ok(Evaluation::fail(format!("no cycle through {high}"))),
    }
}

fn cycle_through_meyniel_set_strong(solver: &Solver, d: &Digraph, data: &InstanceData) -> Outcome {
    let &InstanceData::Set { set } = data else {
        return wrong_data(data);
    };
    if set.is_empty() || !is_strong(d) || !is_meyniel_set(d, set)?.holds {
        return Ok(Evaluation::vacuous(format!("{set} is not a Meyniel set of a strong digraph")));
    }
    cycle_through_set(solver, d, set)
}

/// A single vertex is excluded: an acyclic digraph is trivially
/// `{v}`-strongly connected.
fn cycle_through_meyniel_set_reachable(solver: &Solver, d: &Digraph, data: &InstanceData) -> Outcome {
    let &InstanceData::Set { set } = data else {
        return wrong_data(data);
    };
    if set.len() < 2 || !is_m_strongly_connected(d, set)? || !is_meyniel_set(d, set)?.holds {
        return Ok(Evaluation::vacuous(format!(
            "{set} is not a Meyniel set with at least two mutually reachable vertices"
        )));
    }
    cycle_through_set(solver, d, set)
}

fn cycle_through_set(solver: &Solver, d: &Digraph, set: VertexSet) -> Outcome {
    match solver.cycle_through(d, set)? {
        Some(c) => Ok(Evaluation::pass(format!("cycle {c} through {set}"))),
        None => Ok(Evaluation::fail(format!("no cycle through {set}"))),
    }
}

fn hamiltonian_near_ghouila_houri(solver: &Solver, d: &Digraph) -> Outcome {
    if !near_ghouila_houri_hypotheses(d) {
        return Ok(Evaluation::vacuous("hypotheses fail"));
    }
    match solver.hamiltonian_cycle(d).witness {
        Some(c) => Ok(Evaluation::pass(format!("Hamiltonian: {c}"))),
        None => Ok(Evaluation::fail("not Hamiltonian")),
    }
}
