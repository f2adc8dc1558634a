use edgecover_core::cover::{
    canonicalize_to_odd_cycles, half_integral_cover, min_edge_cover_exact, odd_cycle_decomposition,
    ExactConfig,
};
use edgecover_core::game::{
    allocate_alpha_core, check_core_dual, check_core_stars, exact_best_ratio, integrality_gap,
    verify_scaled_cover_membership, Allocation,
};
use edgecover_core::generators::{self, RandomGraphParams};
use edgecover_core::graph::{
    boundary, double_graph, edges_within, is_bipartite, shortest_odd_cycle, Coalition,
    WeightedGraph,
};
use edgecover_core::lp::{dual_packing_lp, fractional_cover_lp, solve, LpStatus};
use edgecover_core::oracle::{self, OracleBudget};
use edgecover_core::rational::{self, Rational};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph_from_seed(seed: u64, max_vertices: usize, max_edges: usize) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = RandomGraphParams {
        max_vertices,
        max_edges,
        edge_probability: rng.gen_range(0.25..0.7),
        ..RandomGraphParams::default()
    };
    generators::random_graph(&mut rng, &params)
}

fn random_allocation(rng: &mut impl Rng, n: usize) -> Allocation {
    Allocation::new(
        (0..n)
            .map(|_| generators::random_weight(rng, 12, 4))
            .collect(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn within_boundary_and_outside_partition_the_edges(seed in any::<u64>(), mask in 1u32..256) {
        let g = graph_from_seed(seed, 8, 20);
        let members: Vec<_> = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!members.is_empty());
        let s = Coalition::new(&g, members).unwrap();
        let within = edges_within(&g, &s);
        let cut = boundary(&g, &s);
        for e in 0..g.edge_count() {
            let edge = g.edge(e);
            let outside = !s.contains(edge.u) && !s.contains(edge.v);
            let hits = within.contains(&e) as u8 + cut.contains(&e) as u8 + outside as u8;
            prop_assert_eq!(hits, 1);
        }
    }

    #[test]
    fn doubled_graph_shape(seed in any::<u64>()) {
        let g = graph_from_seed(seed, 8, 20);
        let d = double_graph(&g);
        prop_assert_eq!(d.graph.vertex_count(), 2 * g.vertex_count());
        prop_assert_eq!(d.graph.edge_count(), 2 * g.edge_count());
        prop_assert!(is_bipartite(&d.graph).is_bipartite());
        for (copy, &orig) in d.origin.iter().enumerate() {
            let (a, b) = (d.graph.edge(copy), g.edge(orig));
            prop_assert_eq!(&a.weight, &b.weight);
            let mut ends = [d.original_vertex(a.u), d.original_vertex(a.v)];
            ends.sort_unstable();
            prop_assert_eq!(ends, [b.u, b.v]);
        }
    }

    #[test]
    fn strong_and_weak_duality(seed in any::<u64>()) {
        let g = graph_from_seed(seed, 8, 20);
        let primal_lp = fractional_cover_lp(&g);
        let dual_lp = dual_packing_lp(&g);
        let primal = solve(&primal_lp);
        let dual = solve(&dual_lp);
        prop_assert_eq!(primal.status, LpStatus::Optimal);
        prop_assert_eq!(dual.status, LpStatus::Optimal);
        prop_assert!(primal_lp.is_feasible(&primal.values));
        prop_assert!(dual_lp.is_feasible(&dual.values));
        prop_assert_eq!(&primal.objective, &dual.objective);

        // random feasible points on either side
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let x: Vec<Rational> = (0..g.edge_count()).map(|_| generators::random_weight(&mut rng, 4, 3) + rational::one()).collect();
        let min_w = g.edges().iter().map(|e| e.weight.clone()).min().unwrap();
        let y: Vec<Rational> = (0..g.vertex_count())
            .map(|_| &min_w * rational::ratio(rng.gen_range(0..=2), 4))
            .collect();
        prop_assert!(primal_lp.is_feasible(&x));
        prop_assert!(dual_lp.is_feasible(&y));
        prop_assert!(dual_lp.objective_value(&y) <= primal_lp.objective_value(&x));
    }

    #[test]
    fn exact_cover_matches_enumeration(seed in any::<u64>(), mask in 1u32..256) {
        let g = graph_from_seed(seed, 8, 16);
        let members: Vec<_> = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!members.is_empty());
        let s = Coalition::new(&g, members).unwrap();
        let fast = min_edge_cover_exact(&g, &s, &ExactConfig::default()).unwrap();
        let slow = oracle::brute_min_cover(&g, &s, &OracleBudget::default()).unwrap();
        prop_assert_eq!(&fast.weight, &slow);
        for &v in s.members() {
            prop_assert!(fast.vector.coverage(&g, v) >= rational::one());
        }
    }

    #[test]
    fn half_integral_cover_is_optimal_and_canonicalizes(seed in any::<u64>()) {
        let g = graph_from_seed(seed, 8, 12);
        let cover = half_integral_cover(&g).unwrap();
        prop_assert!(cover.vector.is_half_integral());
        prop_assert!(cover.vector.is_feasible_cover(&g));
        prop_assert_eq!(&cover.weight, &solve(&fractional_cover_lp(&g)).objective);
        prop_assert_eq!(&cover.weight, &oracle::brute_fractional_optimum(&g, &OracleBudget::default()).unwrap());
        if is_bipartite(&g).is_bipartite() {
            prop_assert!(cover.vector.is_integral());
        }
        let canonical = canonicalize_to_odd_cycles(&g, &cover.vector).unwrap();
        prop_assert_eq!(canonical.weight(&g), cover.weight.clone());
        prop_assert!(canonical.is_feasible_cover(&g));
        prop_assert!(canonical.is_half_integral());
        prop_assert!(odd_cycle_decomposition(&g, &canonical).is_some());
    }

    #[test]
    fn checkers_agree_with_the_oracle(seed in any::<u64>()) {
        let g = graph_from_seed(seed, 7, 14);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(7));
        let a = random_allocation(&mut rng, g.vertex_count());
        let brute = oracle::brute_core_check(&g, &a, &OracleBudget::default()).unwrap();
        prop_assert_eq!(check_core_dual(&g, &a).is_ok(), brute.is_ok());
        prop_assert_eq!(check_core_stars(&g, &a).is_ok(), brute.is_ok());
    }

    #[test]
    fn alpha_core_allocation_is_stable(seed in any::<u64>()) {
        let g = graph_from_seed(seed, 8, 14);
        let report = allocate_alpha_core(&g, &ExactConfig::default()).unwrap();
        prop_assert!(check_core_dual(&g, &report.allocation).is_ok());
        prop_assert!(check_core_stars(&g, &report.allocation).is_ok());
        let cost = report.grand_cost.clone().unwrap();
        prop_assert!(report.total >= &report.alpha * &cost);
        prop_assert_eq!(&report.total, &solve(&fractional_cover_lp(&g)).objective);
        let ratio = exact_best_ratio(&g, &ExactConfig::default()).unwrap();
        prop_assert!(ratio >= report.alpha);
        prop_assert!(ratio >= rational::ratio(3, 4));
    }

    #[test]
    fn scaled_canonical_cover_meets_odd_set_constraints(seed in any::<u64>()) {
        let g = graph_from_seed(seed, 10, 16);
        let cover = half_integral_cover(&g).unwrap();
        let canonical = canonicalize_to_odd_cycles(&g, &cover.vector).unwrap();
        prop_assert_eq!(verify_scaled_cover_membership(&g, &canonical, 14).unwrap(), Ok(()));
        let gap = integrality_gap(&g);
        let cost = min_edge_cover_exact(&g, &Coalition::all(&g), &ExactConfig::default()).unwrap().weight;
        prop_assert!(cost <= &gap.rho * &cover.weight);
        prop_assert_eq!(gap.ell.is_none(), shortest_odd_cycle(&g).is_none());
    }
}

#[test]
fn odd_cycles_attain_the_bound() {
    for ell in [3usize, 5, 7, 9, 11] {
        let g = generators::cycle(ell);
        let ratio = exact_best_ratio(&g, &ExactConfig::default()).unwrap();
        assert_eq!(ratio, rational::ratio(ell as i64, ell as i64 + 1));
    }
}

#[test]
fn gap_witness_weights_attain_rho_on_the_cycle() {
    // on a lone odd cycle the unit witness weights realise the gap exactly
    for ell in [3usize, 5, 7] {
        let g = generators::cycle(ell);
        let gap = integrality_gap(&g);
        let weighted = g.reweighted(gap.witness_weights.as_ref().unwrap()).unwrap();
        let integral = min_edge_cover_exact(
            &weighted,
            &Coalition::all(&weighted),
            &ExactConfig::default(),
        )
        .unwrap()
        .weight;
        let fractional = half_integral_cover(&weighted).unwrap().weight;
        assert_eq!(integral / fractional, gap.rho);
    }
}

#[test]
fn zero_allocation_is_always_in_the_core() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let g = generators::random_graph(&mut rng, &RandomGraphParams::default());
        let zero = Allocation::zeros(g.vertex_count());
        assert!(check_core_dual(&g, &zero).is_ok());
        assert!(check_core_stars(&g, &zero).is_ok());
        assert!(zero.total().is_zero());
    }
}
