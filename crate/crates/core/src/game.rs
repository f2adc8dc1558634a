//! The edge cover game: coalition costs, core checks, approximate core
//! allocations from the packing LP, and the integrality gap.

use num_traits::{Signed, Zero};

use crate::cover::{min_edge_cover_exact, CoverCertificate, EdgeVector, ExactConfig};
use crate::error::{Error, Result};
use crate::graph::{shortest_odd_cycle, Coalition, EdgeId, OddCycle, VertexId, WeightedGraph};
use crate::lp::{dual_packing_lp, fractional_cover_lp, solve, LpStatus};
use crate::rational::{self, Rational};

/// Nonnegative value per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Allocation {
    values: Vec<Rational>,
}

impl Allocation {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if let Some(vertex) = values.iter().position(|v| v.is_negative()) {
            return Err(Error::NegativeAllocation { vertex });
        }
        Ok(Allocation { values })
    }

    /// Like [`Allocation::new`], also checking there is one entry per vertex.
    pub fn for_graph(graph: &WeightedGraph, values: Vec<Rational>) -> Result<Self> {
        if values.len() != graph.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: graph.vertex_count(),
                found: values.len(),
            });
        }
        Self::new(values)
    }

    pub fn zeros(vertex_count: usize) -> Self {
        Allocation {
            values: vec![Rational::zero(); vertex_count],
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, v: VertexId) -> &Rational {
        &self.values[v]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn total(&self) -> Rational {
        self.values.iter().sum()
    }

    pub fn sum_over(&self, vertices: &[VertexId]) -> Rational {
        vertices.iter().map(|&v| &self.values[v]).sum()
    }

    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        Self::new(self.values.iter().map(|x| x * factor).collect())
    }
}

/// `a(T ∪ {v}) > w(δ(v, T))` for the star centred at `center` with leaves `leaves`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarViolation {
    pub center: VertexId,
    pub leaves: Vec<VertexId>,
    pub allocated: Rational,
    pub star_weight: Rational,
}

/// `a_u + a_v > w_uv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeViolation {
    pub edge: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub allocated: Rational,
    pub weight: Rational,
}

/// `a(S) > c(S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalitionViolation {
    pub members: Vec<VertexId>,
    pub allocated: Rational,
    pub cost: Rational,
}

/// `x(E[U] ∪ δ(U)) < ⌈|U|/2⌉` for an odd set `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSetViolation {
    pub members: Vec<VertexId>,
    pub covered: Rational,
    pub required: Rational,
}

/// `Ok(())` when a check passes, otherwise the witness of failure.
pub type Verdict<W> = std::result::Result<(), W>;

/// `c(S)`: the cheapest edge set within `E[S] ∪ δ(S)` covering `S`.
pub fn coalition_cost(
    graph: &WeightedGraph,
    coalition: &Coalition,
    config: &ExactConfig,
) -> Result<Rational> {
    Ok(min_edge_cover_exact(graph, coalition, config)?.weight)
}

fn assert_sized(graph: &WeightedGraph, allocation: &Allocation) {
    assert_eq!(
        allocation.len(),
        graph.vertex_count(),
        "allocation must have one entry per vertex"
    );
}

/// Core property via stars: `a(T ∪ {v}) ≤ w(δ(v, T))` for every vertex `v` and
/// nonempty `T ⊆ N(v)`.
///
/// The excess `a_v + Σ_{u∈T} (a_u − w_uv)` separates over leaves, so the worst
/// star takes every neighbour with `a_u > w_uv`, or the single best neighbour
/// when there is none.
#[allow(clippy::result_large_err)]
pub fn check_core_stars(graph: &WeightedGraph, allocation: &Allocation) -> Verdict<StarViolation> {
    assert_sized(graph, allocation);
    for v in graph.vertices() {
        let gains: Vec<(VertexId, Rational)> = graph
            .neighbors(v)
            .iter()
            .map(|&(u, e)| (u, allocation.get(u) - graph.weight(e)))
            .collect();
        let mut leaves: Vec<VertexId> = gains
            .iter()
            .filter(|(_, g)| g.is_positive())
            .map(|&(u, _)| u)
            .collect();
        if leaves.is_empty() {
            let (best, _) = gains
                .iter()
                .fold(None::<&(VertexId, Rational)>, |acc, item| match acc {
                    Some(b) if b.1 >= item.1 => Some(b),
                    _ => Some(item),
                })
                .expect("no isolated vertices");
            leaves.push(*best);
        }
        let allocated = allocation.get(v) + allocation.sum_over(&leaves);
        let star_weight: Rational = leaves
            .iter()
            .map(|&u| graph.weight(graph.edge_between(v, u).unwrap()))
            .sum();
        if allocated > star_weight {
            return Err(StarViolation {
                center: v,
                leaves,
                allocated,
                star_weight,
            });
        }
    }
    Ok(())
}

/// Core property via packing feasibility: `a_u + a_v ≤ w_uv` on every edge.
#[allow(clippy::result_large_err)]
pub fn check_core_dual(graph: &WeightedGraph, allocation: &Allocation) -> Verdict<EdgeViolation> {
    assert_sized(graph, allocation);
    for (edge, e) in graph.edges().iter().enumerate() {
        let allocated = allocation.get(e.u) + allocation.get(e.v);
        if allocated > e.weight {
            return Err(EdgeViolation {
                edge,
                u: e.u,
                v: e.v,
                allocated,
                weight: e.weight.clone(),
            });
        }
    }
    Ok(())
}

/// `ℓ/(ℓ+1)`, or 1 when there is no odd cycle.
pub fn alpha_for(ell: Option<usize>) -> Rational {
    match ell {
        Some(l) => rational::ratio(l as i64, l as i64 + 1),
        None => rational::one(),
    }
}

/// `1 + 1/ℓ`, or 1 when there is no odd cycle.
pub fn rho_for(ell: Option<usize>) -> Rational {
    match ell {
        Some(l) => rational::one() + rational::ratio(1, l as i64),
        None => rational::one(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllocationReport {
    pub allocation: Allocation,
    pub ell: Option<usize>,
    pub alpha: Rational,
    /// `a(V)`, equal to the fractional cover optimum.
    pub total: Rational,
    /// `c(V)`; `None` when the exact solver's cap was exceeded.
    pub grand_cost: Option<Rational>,
    /// `a(V) / c(V)`, when `c(V)` is known.
    pub ratio: Option<Rational>,
}

/// An optimal packing `a*`, which satisfies the core property and recovers at
/// least `ℓ/(ℓ+1)` of the grand coalition's cost.
pub fn allocate_alpha_core(
    graph: &WeightedGraph,
    config: &ExactConfig,
) -> Result<AllocationReport> {
    let packing = solve(&dual_packing_lp(graph));
    if packing.status != LpStatus::Optimal {
        return Err(Error::Internal(format!(
            "packing LP returned {:?}",
            packing.status
        )));
    }
    let allocation = Allocation::new(packing.values)?;
    if let Err(v) = check_core_dual(graph, &allocation) {
        return Err(Error::Internal(format!(
            "packing solution violates edge {}",
            v.edge
        )));
    }
    let total = allocation.total();
    let ell = shortest_odd_cycle(graph).map(|c| c.len());
    let alpha = alpha_for(ell);

    let grand_cost = match coalition_cost(graph, &Coalition::all(graph), config) {
        Ok(c) => Some(c),
        Err(e) if e.is_cap() => None,
        Err(e) => return Err(e),
    };
    if let Some(cost) = &grand_cost {
        if total < &alpha * cost {
            return Err(Error::Internal(format!(
                "a(V) = {total} is below {alpha} of c(V) = {cost}"
            )));
        }
    }
    let ratio = grand_cost.as_ref().map(|c| ratio_or_one(&total, c));
    Ok(AllocationReport {
        allocation,
        ell,
        alpha,
        total,
        grand_cost,
        ratio,
    })
}

// With c(V) = 0 every allocation is zero and any α is attained.
fn ratio_or_one(numer: &Rational, denom: &Rational) -> Rational {
    if denom.is_zero() {
        rational::one()
    } else {
        numer / denom
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub ell: Option<usize>,
    /// `1 + 1/ℓ`, or 1 for bipartite graphs.
    pub rho: Rational,
    pub cycle: Option<OddCycle>,
    /// Unit weight on the cycle's edges, zero elsewhere. On the cycle itself
    /// the integral and fractional optima under these weights are `(ℓ+1)/2`
    /// and `ℓ/2`.
    pub witness_weights: Option<Vec<Rational>>,
}

pub fn integrality_gap(graph: &WeightedGraph) -> GapReport {
    let cycle = shortest_odd_cycle(graph);
    let ell = cycle.as_ref().map(OddCycle::len);
    let witness_weights = cycle.as_ref().map(|c| {
        let mut w = vec![Rational::zero(); graph.edge_count()];
        for e in c.edges(graph) {
            w[e] = rational::one();
        }
        w
    });
    GapReport {
        ell,
        rho: rho_for(ell),
        cycle,
        witness_weights,
    }
}

/// Checks `scale · x` against every odd-set constraint
/// `x(E[U] ∪ δ(U)) ≥ ⌈|U|/2⌉`, enumerating all odd `U`.
pub fn verify_odd_set_constraints(
    graph: &WeightedGraph,
    x: &EdgeVector,
    scale: &Rational,
    max_vertices: usize,
) -> Result<Verdict<OddSetViolation>> {
    let n = graph.vertex_count();
    if n > max_vertices {
        return Err(Error::ExceedsCap {
            what: "odd-set enumeration",
            size: n,
            cap: max_vertices,
        });
    }
    if x.len() != graph.edge_count() {
        return Err(Error::DimensionMismatch {
            expected: graph.edge_count(),
            found: x.len(),
        });
    }
    let scaled = x.scaled(scale);
    let endpoint_masks: Vec<u64> = graph
        .edges()
        .iter()
        .map(|e| (1u64 << e.u) | (1u64 << e.v))
        .collect();
    for mask in 1u64..(1u64 << n) {
        if mask.count_ones() % 2 == 0 {
            continue;
        }
        let covered: Rational = endpoint_masks
            .iter()
            .zip(scaled.values())
            .filter(|(m, _)| *m & mask != 0)
            .map(|(_, v)| v)
            .sum();
        let required = rational::ceil_half(mask.count_ones() as usize);
        if covered < required {
            let members = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            return Ok(Err(OddSetViolation {
                members,
                covered,
                required,
            }));
        }
    }
    Ok(Ok(()))
}

/// Checks that `(1 + 1/ℓ) · x` satisfies every odd-set constraint, i.e. that
/// it dominates a convex combination of integral edge covers.
pub fn verify_scaled_cover_membership(
    graph: &WeightedGraph,
    x: &EdgeVector,
    max_vertices: usize,
) -> Result<Verdict<OddSetViolation>> {
    if let Some(edge) = x.first_non_half_integral() {
        return Err(Error::NotHalfIntegral { edge });
    }
    if let Some(vertex) = x.uncovered_vertex(graph) {
        return Err(Error::InfeasibleCover { vertex });
    }
    let scale = integrality_gap(graph).rho;
    verify_odd_set_constraints(graph, x, &scale, max_vertices)
}

/// Fractional cover optimum over `c(V)`: the largest `α` whose `α`-core is
/// nonempty on this instance.
pub fn exact_best_ratio(graph: &WeightedGraph, config: &ExactConfig) -> Result<Rational> {
    let fractional = solve(&fractional_cover_lp(graph));
    if fractional.status != LpStatus::Optimal {
        return Err(Error::Internal(format!(
            "covering LP returned {:?}",
            fractional.status
        )));
    }
    let cost = coalition_cost(graph, &Coalition::all(graph), config)?;
    Ok(ratio_or_one(&fractional.objective, &cost))
}

/// The grand coalition's optimal cover together with its cost.
pub fn grand_cover(graph: &WeightedGraph, config: &ExactConfig) -> Result<CoverCertificate> {
    min_edge_cover_exact(graph, &Coalition::all(graph), config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::half_integral_cover;
    use crate::graph::fixtures::*;
    use crate::oracle::{brute_core_check, brute_min_cover, OracleBudget};
    use crate::rational::{half, int, ratio};

    fn alloc(values: &[Rational]) -> Allocation {
        Allocation::new(values.to_vec()).unwrap()
    }

    fn cost(g: &WeightedGraph, s: &[VertexId]) -> Rational {
        coalition_cost(
            g,
            &Coalition::new(g, s.iter().copied()).unwrap(),
            &ExactConfig::default(),
        )
        .unwrap()
    }

    #[test]
    fn coalition_cost_examples() {
        let t = triangle();
        assert_eq!(cost(&t, &[0]), int(1));
        assert_eq!(cost(&t, &[0, 1, 2]), int(2));
        // oracle: 8 subsets of the triangle's edges
        let s = Coalition::new(&t, [0, 1]).unwrap();
        assert_eq!(
            brute_min_cover(&t, &s, &OracleBudget::default()).unwrap(),
            int(1)
        );
        assert_eq!(cost(&t, &[0, 1]), int(1));
    }

    #[test]
    fn negative_allocations_are_rejected() {
        assert_eq!(
            Allocation::new(vec![int(1), int(-1)]),
            Err(Error::NegativeAllocation { vertex: 1 })
        );
        assert!(matches!(
            Allocation::for_graph(&triangle(), vec![int(1)]),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 1
            })
        ));
    }

    #[test]
    fn star_check_examples() {
        let t = triangle();
        assert_eq!(
            check_core_stars(&t, &alloc(&[half(), half(), half()])),
            Ok(())
        );
        let bad = check_core_stars(&t, &alloc(&[int(1), int(1), int(0)])).unwrap_err();
        assert_eq!((bad.center, bad.leaves.clone()), (0, vec![1]));
        assert_eq!((bad.allocated, bad.star_weight), (int(2), int(1)));
        assert_eq!(check_core_stars(&t, &Allocation::zeros(3)), Ok(()));
        // all nine nonempty stars of the triangle hold at (1/2, 1/2, 1/2)
        let a = alloc(&[half(), half(), half()]);
        for v in 0..3 {
            let nbrs: Vec<_> = t.neighbors(v).iter().map(|&(u, _)| u).collect();
            for mask in 1..4usize {
                let leaves: Vec<_> = (0..2)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| nbrs[i])
                    .collect();
                let star = crate::graph::star_edges(&t, v, &leaves).unwrap();
                let lhs = a.get(v) + a.sum_over(&leaves);
                assert!(lhs <= t.total_weight(&star));
            }
        }
    }

    #[test]
    fn dual_check_examples() {
        let t = triangle();
        assert_eq!(
            check_core_dual(&t, &alloc(&[half(), half(), half()])),
            Ok(())
        );
        assert_eq!(
            check_core_dual(&t, &alloc(&[int(1), int(0), int(0)])),
            Ok(())
        );
        let e = WeightedGraph::new(2, [(0, 1, int(2))]).unwrap();
        let bad = check_core_dual(&e, &alloc(&[ratio(3, 2), int(1)])).unwrap_err();
        assert_eq!(bad.edge, 0);
        assert_eq!(bad.allocated, ratio(5, 2));
    }

    #[test]
    fn triangle_allocation() {
        let r = allocate_alpha_core(&triangle(), &ExactConfig::default()).unwrap();
        assert_eq!(r.allocation.values(), &[half(), half(), half()]);
        assert_eq!(r.total, ratio(3, 2));
        assert_eq!(r.grand_cost, Some(int(2)));
        assert_eq!(r.ratio, Some(ratio(3, 4)));
        assert_eq!(r.alpha, ratio(3, 4));
        assert_eq!(r.ell, Some(3));
    }

    #[test]
    fn five_cycle_allocation_attains_five_sixths() {
        let r = allocate_alpha_core(&cycle(5), &ExactConfig::default()).unwrap();
        assert_eq!(r.total, ratio(5, 2));
        assert_eq!(r.grand_cost, Some(int(3)));
        assert_eq!(r.ratio, Some(ratio(5, 6)));
        assert_eq!(
            brute_core_check(&cycle(5), &r.allocation, &OracleBudget::default()).unwrap(),
            Ok(())
        );
    }

    #[test]
    fn single_edge_allocation_is_exact() {
        let g = WeightedGraph::new(2, [(0, 1, ratio(7, 2))]).unwrap();
        let r = allocate_alpha_core(&g, &ExactConfig::default()).unwrap();
        assert_eq!(r.total, ratio(7, 2));
        assert_eq!(r.grand_cost, Some(ratio(7, 2)));
        assert_eq!(r.ratio, Some(int(1)));
        assert_eq!(r.alpha, int(1));
    }

    #[test]
    fn allocation_survives_cap() {
        let r = allocate_alpha_core(
            &cycle(9),
            &ExactConfig {
                max_candidate_edges: 3,
            },
        )
        .unwrap();
        assert_eq!(r.grand_cost, None);
        assert_eq!(r.ratio, None);
        assert_eq!(r.total, ratio(9, 2));
    }

    #[test]
    fn gap_examples() {
        let g = integrality_gap(&triangle());
        assert_eq!((g.ell, g.rho.clone()), (Some(3), ratio(4, 3)));
        assert_eq!(g.witness_weights, Some(vec![int(1); 3]));
        assert_eq!(integrality_gap(&cycle(5)).rho, ratio(6, 5));
        let b = integrality_gap(&cycle(6));
        assert_eq!((b.ell, b.rho, b.cycle), (None, int(1), None));
        // a triangle with a pendant path still has rho 4/3
        let g = WeightedGraph::unit(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(integrality_gap(&g).rho, ratio(4, 3));
    }

    #[test]
    fn odd_set_examples() {
        let t = triangle();
        let x = EdgeVector::new(vec![half(); 3]);
        // scaled (2/3, 2/3, 2/3): U = V gives exactly 2
        assert_eq!(verify_scaled_cover_membership(&t, &x, 14).unwrap(), Ok(()));
        let unscaled = verify_odd_set_constraints(&t, &x, &int(1), 14)
            .unwrap()
            .unwrap_err();
        assert_eq!(unscaled.members, vec![0, 1, 2]);
        assert_eq!((unscaled.covered, unscaled.required), (ratio(3, 2), int(2)));

        let c6 = cycle(6);
        let x = half_integral_cover(&c6).unwrap().vector;
        assert!(x.is_integral());
        assert_eq!(
            verify_odd_set_constraints(&c6, &x, &int(1), 14).unwrap(),
            Ok(())
        );
        assert!(matches!(
            verify_odd_set_constraints(&cycle(15), &EdgeVector::zeros(15), &int(1), 14),
            Err(Error::ExceedsCap { .. })
        ));
    }

    #[test]
    fn best_ratio_examples() {
        let cfg = ExactConfig::default();
        assert_eq!(exact_best_ratio(&triangle(), &cfg).unwrap(), ratio(3, 4));
        assert_eq!(exact_best_ratio(&cycle(5), &cfg).unwrap(), ratio(5, 6));
        assert_eq!(exact_best_ratio(&cycle(6), &cfg).unwrap(), int(1));
        assert_eq!(exact_best_ratio(&star3(), &cfg).unwrap(), int(1));
    }

    #[test]
    fn zero_weight_graph_has_ratio_one() {
        let g = WeightedGraph::new(3, [(0, 1, int(0)), (1, 2, int(0)), (0, 2, int(0))]).unwrap();
        assert_eq!(
            exact_best_ratio(&g, &ExactConfig::default()).unwrap(),
            int(1)
        );
        let r = allocate_alpha_core(&g, &ExactConfig::default()).unwrap();
        assert_eq!(r.total, int(0));
        assert_eq!(r.ratio, Some(int(1)));
    }

    #[test]
    fn scaling_weights_scales_everything() {
        let g = WeightedGraph::new(
            4,
            [
                (0, 1, int(2)),
                (1, 2, int(3)),
                (0, 2, int(1)),
                (2, 3, int(4)),
            ],
        )
        .unwrap();
        let factor = ratio(7, 3);
        let h = g.scaled(&factor).unwrap();
        let cfg = ExactConfig::default();
        let (rg, rh) = (
            allocate_alpha_core(&g, &cfg).unwrap(),
            allocate_alpha_core(&h, &cfg).unwrap(),
        );
        assert_eq!(rh.total, &rg.total * &factor);
        assert_eq!(rh.allocation, rg.allocation.scaled(&factor).unwrap());
        assert_eq!(rh.grand_cost.unwrap(), rg.grand_cost.unwrap() * &factor);
        assert_eq!(
            exact_best_ratio(&g, &cfg).unwrap(),
            exact_best_ratio(&h, &cfg).unwrap()
        );
    }
}
