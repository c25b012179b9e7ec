//! Randomized invariant checks tying the fast implementations to their
//! definitions and to each other.

use proptest::prelude::*;

use dichroma::{
    bounded_coloring, contains_induced, fracdelta_coloring, improved_acyclic_coloring,
    is_acyclic, is_weakly_m_degenerate, lovasz_partition, peel, random_functional,
    random_oriented, verify_coloring, weak_degeneracy_bruteforce, Digraph, HalfInt,
    PartitionTargets, PatternId, SlackKind, SplitMix64,
};

/// Arbitrary digraph on 1..=max_n vertices, digons allowed: one boolean per
/// ordered pair.
fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e)
                .collect();
            Digraph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// Arbitrary oriented digraph: each unordered pair is absent, forward, or
/// backward.
fn arb_oriented(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(0u8..3, len).prop_map(move |choice| {
            let mut edges = Vec::new();
            for (&(u, v), &c) in pairs.iter().zip(&choice) {
                match c {
                    1 => edges.push((u, v)),
                    2 => edges.push((v, u)),
                    _ => {}
                }
            }
            Digraph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// Peel with the opposite tie-breaking rule (highest deficient index first),
/// used to confirm the core does not depend on removal order.
fn stubborn_core(d: &Digraph, m: usize) -> Vec<usize> {
    let mut alive: Vec<usize> = (0..d.vertex_count()).collect();
    loop {
        let found = alive.iter().rposition(|&v| {
            let out = d.out_neighbors(v).iter().filter(|w| alive.contains(w)).count();
            let inn = d.in_neighbors(v).iter().filter(|w| alive.contains(w)).count();
            out < m || inn < m
        });
        match found {
            Some(pos) => {
                alive.remove(pos);
            }
            None => return alive,
        }
    }
}

proptest! {
    #[test]
    fn adjacency_mirrors_are_consistent(d in arb_digraph(8)) {
        let mut count = 0;
        for v in 0..d.vertex_count() {
            for &w in d.out_neighbors(v) {
                prop_assert!(d.in_neighbors(w).contains(&v));
                prop_assert!(d.has_edge(v, w));
                count += 1;
            }
        }
        prop_assert_eq!(count, d.edge_count());
        prop_assert_eq!(d.edges().count(), d.edge_count());
    }

    #[test]
    fn geometric_mean_never_exceeds_arithmetic(d in arb_digraph(8)) {
        let stats = d.degree_stats();
        let t = stats.max_avg.twice();
        prop_assert!(4 * stats.max_geom_sq as i64 <= t * t);
    }

    #[test]
    fn induced_subgraphs_never_gain_degree(d in arb_digraph(8), pick in any::<u64>()) {
        let members: Vec<usize> =
            (0..d.vertex_count()).filter(|&v| pick >> v & 1 == 1).collect();
        let sub = d.induced_subgraph(&members).unwrap();
        for (new, &old) in sub.old_of_new.iter().enumerate() {
            prop_assert!(sub.graph.out_degree(new) <= d.out_degree(old));
            prop_assert!(sub.graph.in_degree(new) <= d.in_degree(old));
        }
        prop_assert!(sub.graph.max_avg_degree() <= d.max_avg_degree());
    }

    #[test]
    fn weak_components_partition_the_vertices(d in arb_digraph(8)) {
        let comps = d.weak_components();
        let mut comp_of = vec![usize::MAX; d.vertex_count()];
        for (i, comp) in comps.iter().enumerate() {
            prop_assert!(comp.windows(2).all(|w| w[0] < w[1]));
            for &v in comp {
                prop_assert_eq!(comp_of[v], usize::MAX);
                comp_of[v] = i;
            }
        }
        prop_assert!(comp_of.iter().all(|&c| c != usize::MAX));
        for (u, v) in d.edges() {
            prop_assert_eq!(comp_of[u], comp_of[v]);
        }
    }

    #[test]
    fn peel_core_is_order_independent(d in arb_digraph(8), m in 1usize..=3) {
        prop_assert_eq!(peel(&d, m).unwrap().core, stubborn_core(&d, m));
    }

    #[test]
    fn acyclicity_equals_weak_one_degeneracy(d in arb_digraph(8)) {
        prop_assert_eq!(is_acyclic(&d), is_weakly_m_degenerate(&d, 1).unwrap());
    }

    #[test]
    fn bruteforce_agrees_with_peeling(d in arb_digraph(8), m in 1usize..=3) {
        prop_assert_eq!(
            weak_degeneracy_bruteforce(&d, m).unwrap(),
            is_weakly_m_degenerate(&d, m).unwrap()
        );
    }

    #[test]
    fn coloring_validity_is_monotone_in_m(
        (d, colors) in arb_digraph(7).prop_flat_map(|d| {
            let n = d.vertex_count();
            (Just(d), proptest::collection::vec(0usize..3, n))
        })
    ) {
        let coloring = dichroma::Coloring::new(colors);
        for m in 1..=2 {
            if verify_coloring(&d, &coloring, m).unwrap().is_valid() {
                prop_assert!(verify_coloring(&d, &coloring, m + 1).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn pattern_detection_is_relabeling_invariant(d in arb_oriented(7), seed in any::<u64>()) {
        let n = d.vertex_count();
        let mut rng = SplitMix64::new(seed);
        let mut perm: Vec<usize> = (0..n).collect();
        rng.shuffle(&mut perm);
        let edges: Vec<(usize, usize)> =
            d.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let relabeled = Digraph::from_edge_list(n, &edges).unwrap();
        for id in PatternId::all() {
            prop_assert_eq!(
                contains_induced(&d, id).is_some(),
                contains_induced(&relabeled, id).is_some()
            );
        }
    }

    #[test]
    fn lovasz_respects_every_ceiling(d in arb_oriented(8), seed in any::<u64>()) {
        // two or three distinct targets, the largest at least Δ̄, shuffled
        let delta = d.max_avg_degree();
        let mut rng = SplitMix64::new(seed);
        let count = 2 + rng.below(2);
        let mut targets: Vec<HalfInt> = (0..count as i64)
            .map(|i| delta + HalfInt::from_twice(i))
            .collect();
        rng.shuffle(&mut targets);
        let t = PartitionTargets::new(targets.clone(), SlackKind::Lovasz).unwrap();
        let p = lovasz_partition(&d, &t).unwrap();
        for (class, &ceiling) in targets.iter().enumerate() {
            let sub = d.induced_subgraph(&p.class_members(class)).unwrap().graph;
            prop_assert!(sub.max_avg_degree() <= ceiling);
        }
    }

    #[test]
    fn lovasz_is_equivariant_under_target_permutation(
        d in arb_oriented(7),
        seed in any::<u64>()
    ) {
        let delta = d.max_avg_degree();
        let base: Vec<HalfInt> =
            (0..3i64).map(|i| delta + HalfInt::from_twice(i)).collect();
        let mut rng = SplitMix64::new(seed);
        let mut perm: Vec<usize> = (0..3).collect();
        rng.shuffle(&mut perm);
        let mut permuted = vec![HalfInt::ZERO; 3];
        for i in 0..3 {
            permuted[perm[i]] = base[i];
        }
        let ta = PartitionTargets::new(base, SlackKind::Lovasz).unwrap();
        let tb = PartitionTargets::new(permuted, SlackKind::Lovasz).unwrap();
        let pa = lovasz_partition(&d, &ta).unwrap();
        let pb = lovasz_partition(&d, &tb).unwrap();
        for i in 0..3 {
            prop_assert_eq!(pa.class_members(i), pb.class_members(perm[i]));
        }
    }

    #[test]
    fn bounded_coloring_succeeds_at_the_ceiling_ratio(
        d in arb_oriented(8),
        m in 1usize..=2
    ) {
        let t = d.max_avg_degree().twice();
        let k = (t + 2 * m as i64 - 1).div_euclid(2 * m as i64).max(2) as usize;
        let c = bounded_coloring(&d, m, k).unwrap();
        prop_assert!(c.num_colors() <= k);
        prop_assert!(verify_coloring(&d, &c, m).unwrap().is_valid());
    }

    #[test]
    fn fracdelta_pipeline_holds_on_random_instances(
        n in 8usize..=24,
        spread in 0i64..=6,
        m in 1usize..=2,
        seed in any::<u64>()
    ) {
        let target = HalfInt::from_twice(4 * m as i64 + spread);
        let d = random_oriented(n, target, seed);
        prop_assume!(d.max_avg_degree() >= HalfInt::from_int(2 * m as i64));
        let (c, plan) = fracdelta_coloring(&d, m).unwrap();
        prop_assert!(c.num_colors() <= plan.bound);
        prop_assert!(verify_coloring(&d, &c, m).unwrap().is_valid());
    }

    #[test]
    fn improved_pipeline_holds_on_functional_digraphs(
        n in 3usize..=30,
        seed in any::<u64>()
    ) {
        let d = random_functional(n, seed).unwrap();
        let (c, plan) = improved_acyclic_coloring(&d).unwrap();
        prop_assert!(c.num_colors() <= plan.bound);
        prop_assert!(verify_coloring(&d, &c, 1).unwrap().is_valid());
    }
}
