use proptest::prelude::*;

use hamconn::conditions::{check_meyniel, condition_n, is_meyniel_set, Condition};
use hamconn::connectivity::{is_k_strong, is_strong, strong_components, vertex_connectivity};
use hamconn::constructions::{expand_at, reduce_pair};
use hamconn::format::{parse_edge_list, render_edge_list};
use hamconn::solver::{Solver, SolverConfig};
use hamconn::{Digraph, VertexSet};

fn digraph(lo: usize, hi: usize, density: f64) -> impl Strategy<Value = Digraph> {
    (lo..=hi).prop_flat_map(move |n| {
        prop::collection::vec(prop::bool::weighted(density), n * n).prop_map(move |bits| {
            let arcs = (0..n * n)
                .filter(|&i| bits[i] && i / n != i % n)
                .map(|i| (i / n, i % n));
            Digraph::new(n, arcs).unwrap()
        })
    })
}

fn any_digraph() -> impl Strategy<Value = Digraph> {
    digraph(1, 9, 0.5)
}

fn conditions(d: &Digraph) -> Vec<Condition> {
    let n = d.order();
    let mut all = vec![
        Condition::NashWilliams,
        Condition::GhouilaHouri,
        Condition::Woodall,
        Condition::Meyniel,
        Condition::OverbeckLarisch,
        Condition::N,
    ];
    all.extend((0..n).map(|z0| Condition::M { z0 }));
    all.push(Condition::MeynielSet(VertexSet::full(n)));
    all.push(Condition::MeynielSet(VertexSet::from_bits(0b1011).intersection(d.vertices())));
    all
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn degree_sums_equal_arc_count(d in any_digraph()) {
        let outs: usize = (0..d.order()).map(|v| d.out_degree(v)).sum();
        let ins: usize = (0..d.order()).map(|v| d.in_degree(v)).sum();
        prop_assert_eq!(outs, d.arc_count());
        prop_assert_eq!(ins, d.arc_count());
    }

    #[test]
    fn converse_is_an_involution(d in any_digraph()) {
        let c = d.converse();
        prop_assert_eq!(&c.converse(), &d);
        for v in 0..d.order() {
            prop_assert_eq!(c.out_degree(v), d.in_degree(v));
            prop_assert_eq!(c.in_degree(v), d.out_degree(v));
        }
    }

    #[test]
    fn induced_degrees_are_restricted_degrees(d in any_digraph(), mask in any::<u64>()) {
        let set = VertexSet::from_bits(mask).intersection(d.vertices());
        prop_assume!(!set.is_empty());
        let sub = d.induced(set).unwrap();
        for (new, &old) in sub.new_to_old.iter().enumerate() {
            let report = d.degree(old, Some(set)).unwrap();
            prop_assert_eq!(sub.digraph.out_degree(new), report.out_deg);
            prop_assert_eq!(sub.digraph.in_degree(new), report.in_deg);
        }
    }

    #[test]
    fn edge_lists_round_trip(d in any_digraph()) {
        let text = render_edge_list(&d);
        prop_assert_eq!(&parse_edge_list(&text).unwrap(), &d);
        prop_assert_eq!(render_edge_list(&parse_edge_list(&text).unwrap()), text);
    }

    #[test]
    fn reduction_degree_identity(d in digraph(5, 9, 0.5), a in any::<usize>(), b in any::<usize>()) {
        let n = d.order();
        let (u, v) = (a % n, b % n);
        prop_assume!(u != v);
        let r = reduce_pair(&d, u, v).unwrap();
        let pair = VertexSet::singleton(u).with(v);
        let expected = d.out_neighbors(u).difference(pair).len()
            + d.in_neighbors(v).difference(pair).len();
        prop_assert_eq!(r.digraph.total_degree(r.z0), expected);
        prop_assert_eq!(r.digraph.order(), n - 1);
        for x in 0..n {
            for y in 0..n {
                if let (Some(p), Some(q)) = (r.old_to_new[x], r.old_to_new[y]) {
                    prop_assert_eq!(r.digraph.has_arc(p, q), d.has_arc(x, y));
                }
            }
        }
    }

    #[test]
    fn expansion_adds_two_to_old_degrees(h in digraph(4, 9, 0.5), z in any::<usize>()) {
        let z0 = z % h.order();
        let e = expand_at(&h, z0).unwrap();
        for x in 0..h.order() {
            if let Some(nx) = e.old_to_new[x] {
                prop_assert_eq!(e.digraph.total_degree(nx), h.total_degree(x) + 2);
            }
        }
    }

    #[test]
    fn reducing_an_expansion_gives_back_the_digraph(h in digraph(4, 9, 0.5), z in any::<usize>()) {
        let z0 = z % h.order();
        let e = expand_at(&h, z0).unwrap();
        let r = reduce_pair(&e.digraph, e.u, e.v).unwrap();
        let image = |x: usize| match e.old_to_new[x] {
            Some(nx) => r.old_to_new[nx].unwrap(),
            None => r.z0,
        };
        prop_assert_eq!(r.digraph.order(), h.order());
        prop_assert_eq!(r.digraph.arc_count(), h.arc_count());
        for (a, b) in h.arcs() {
            prop_assert!(r.digraph.has_arc(image(a), image(b)));
        }
    }

    #[test]
    fn conditions_survive_adding_arcs(d in any_digraph(), pick in any::<usize>()) {
        let missing: Vec<_> = d.missing_arcs().collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick % missing.len()];
        let bigger = d.with_arc(u, v).unwrap();
        for c in conditions(&d) {
            if c.check(&d).unwrap().holds {
                prop_assert!(c.check(&bigger).unwrap().holds, "{:?} broke after adding {}->{}", c, u, v);
            }
        }
    }

    #[test]
    fn condition_chain(d in digraph(2, 9, 0.8), mask in any::<u64>()) {
        if condition_n(&d).holds {
            prop_assert!(check_meyniel(&d).holds);
        }
        if check_meyniel(&d).holds {
            let set = VertexSet::from_bits(mask).intersection(d.vertices());
            prop_assert!(is_meyniel_set(&d, set).unwrap().holds);
        }
    }

    #[test]
    fn connectivity_is_invariant_under_converse(d in digraph(1, 8, 0.6)) {
        prop_assert_eq!(vertex_connectivity(&d.converse()), vertex_connectivity(&d));
    }

    #[test]
    fn longest_cycle_is_invariant_under_converse(d in digraph(1, 9, 0.3)) {
        let solver = Solver::default();
        let len = |g: &Digraph| solver.longest_cycle(g).map_or(0, |c| c.len());
        prop_assert_eq!(len(&d), len(&d.converse()));
    }

    #[test]
    fn pendant_vertex_keeps_strongness(h in digraph(2, 9, 0.4), a in any::<usize>(), b in any::<usize>()) {
        prop_assume!(is_strong(&h));
        let n = h.order();
        let mut d = Digraph::new(n + 1, h.arcs()).unwrap();
        d.add_arc(a % n, n).unwrap();
        d.add_arc(n, b % n).unwrap();
        prop_assert!(is_strong(&d));
    }

    #[test]
    fn component_order_has_no_backward_arcs(d in digraph(1, 12, 0.15)) {
        let comps = strong_components(&d);
        let mut index = vec![0; d.order()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                index[v] = i;
            }
        }
        for (u, v) in d.arcs() {
            prop_assert!(index[u] <= index[v]);
        }
    }

    #[test]
    fn witnesses_are_valid(d in digraph(2, 9, 0.45)) {
        for solver in [Solver::default(), Solver::new(SolverConfig::backtracking_only())] {
            if let Some(c) = solver.hamiltonian_cycle(&d).witness {
                prop_assert!(c.is_valid_in(&d));
                prop_assert_eq!(c.len(), d.order());
            }
            if let Some(c) = solver.longest_cycle(&d) {
                prop_assert!(c.is_valid_in(&d));
            }
            if let Some(p) = solver.hamiltonian_path_between(&d, 0, 1).unwrap().witness {
                prop_assert!(p.is_valid_in(&d));
                prop_assert_eq!((p.first(), p.last()), (0, 1));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn reductions_lose_at_most_one_from_connectivity(d in digraph(6, 9, 0.85)) {
        let k = vertex_connectivity(&d);
        prop_assume!(k >= 3);
        for u in 0..d.order() {
            for v in 0..d.order() {
                if u != v {
                    let h = reduce_pair(&d, u, v).unwrap().digraph;
                    prop_assert!(is_k_strong(&h, k - 1).unwrap(), "({}, {})", u, v);
                }
            }
        }
    }

    #[test]
    fn expansions_gain_one_in_connectivity(h in digraph(5, 9, 0.7)) {
        let k = vertex_connectivity(&h);
        prop_assume!(k >= 2);
        for z in 0..h.order() {
            let d = expand_at(&h, z).unwrap().digraph;
            prop_assert!(is_k_strong(&d, k + 1).unwrap(), "z = {}", z);
        }
    }
}
