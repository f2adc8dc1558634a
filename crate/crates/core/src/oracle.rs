//! Brute-force reference implementations.
//!
//! Nothing here calls into the graph algorithms, the simplex solver or the
//! cover solvers; each routine enumerates its search space outright.

use std::ops::{AddAssign, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::game::{Allocation, CoalitionViolation, Verdict};
use crate::graph::{Coalition, VertexId, WeightedGraph};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Candidate edges for cover enumeration (`2^k` subsets).
    pub max_cover_edges: usize,
    /// Vertices for coalition enumeration (`2^n − 1` coalitions).
    pub max_coalition_vertices: usize,
    /// Edges for the `{0, 1/2, 1}` grid search (`3^m` points).
    pub max_grid_edges: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_cover_edges: 20,
            max_coalition_vertices: 12,
            max_grid_edges: 12,
        }
    }
}

// Edge weights over a common denominator, as machine integers when they fit.
enum Weights {
    Small {
        numerators: Vec<i128>,
        denominator: BigInt,
    },
    Big(Vec<Rational>),
}

impl Weights {
    fn of(weights: &[&Rational]) -> Self {
        let denominator = weights
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let scaled: Vec<BigInt> = weights
            .iter()
            .map(|w| w.numer() * (&denominator / w.denom()))
            .collect();
        let total: BigInt = scaled.iter().sum::<BigInt>() * 2;
        let numerators: Option<Vec<i128>> = if total.to_i128().is_some() {
            scaled.iter().map(ToPrimitive::to_i128).collect()
        } else {
            None
        };
        match numerators {
            Some(numerators) => Weights::Small {
                numerators,
                denominator,
            },
            None => Weights::Big(weights.iter().map(|&w| w.clone()).collect()),
        }
    }
}

/// Minimum weight over every subset of `E[S] ∪ δ(S)` that touches all of `S`.
pub fn brute_min_cover(
    graph: &WeightedGraph,
    coalition: &Coalition,
    budget: &OracleBudget,
) -> Result<Rational> {
    let candidates: Vec<(VertexId, VertexId, &Rational)> = graph
        .edges()
        .iter()
        .filter(|e| coalition.contains(e.u) || coalition.contains(e.v))
        .map(|e| (e.u, e.v, &e.weight))
        .collect();
    if candidates.len() > budget.max_cover_edges {
        return Err(Error::ExceedsCap {
            what: "cover enumeration oracle",
            size: candidates.len(),
            cap: budget.max_cover_edges,
        });
    }
    let weights: Vec<&Rational> = candidates.iter().map(|c| c.2).collect();
    let ends: Vec<(VertexId, VertexId)> = candidates.iter().map(|c| (c.0, c.1)).collect();
    let best = match Weights::of(&weights) {
        Weights::Small {
            numerators,
            denominator,
        } => enumerate_covers(graph.vertex_count(), coalition, &ends, &numerators, 0i128)
            .map(|b| Rational::new(BigInt::from(b), denominator)),
        Weights::Big(ws) => enumerate_covers(
            graph.vertex_count(),
            coalition,
            &ends,
            &ws,
            Rational::zero(),
        ),
    };
    best.ok_or_else(|| Error::Internal("coalition cannot be covered".into()))
}

// Gray-code walk over all subsets, flipping one edge per step.
fn enumerate_covers<W>(
    n: usize,
    coalition: &Coalition,
    ends: &[(VertexId, VertexId)],
    weights: &[W],
    zero: W,
) -> Option<W>
where
    W: Clone + Ord + for<'a> AddAssign<&'a W> + for<'a> SubAssign<&'a W>,
{
    let k = ends.len();
    let mut hits = vec![0u32; n];
    let mut covered = 0usize;
    let target = coalition.len();
    let mut in_set = vec![false; k];
    let mut weight = zero;
    let mut best: Option<W> = None;
    for step in 1u64..(1u64 << k) {
        let e = step.trailing_zeros() as usize;
        let (u, v) = ends[e];
        if in_set[e] {
            in_set[e] = false;
            weight -= &weights[e];
            for x in [u, v] {
                hits[x] -= 1;
                if hits[x] == 0 && coalition.contains(x) {
                    covered -= 1;
                }
            }
        } else {
            in_set[e] = true;
            weight += &weights[e];
            for x in [u, v] {
                if hits[x] == 0 && coalition.contains(x) {
                    covered += 1;
                }
                hits[x] += 1;
            }
        }
        if covered == target && best.as_ref().is_none_or(|b| weight < *b) {
            best = Some(weight.clone());
        }
    }
    best
}

/// Minimum of `Σ w_e x_e` over `x ∈ {0, 1/2, 1}^E` with `x(δ(v)) ≥ 1` everywhere.
///
/// This is the fractional cover optimum because some optimal fractional
/// cover is half-integral.
pub fn brute_fractional_optimum(graph: &WeightedGraph, budget: &OracleBudget) -> Result<Rational> {
    let m = graph.edge_count();
    if m > budget.max_grid_edges {
        return Err(Error::ExceedsCap {
            what: "half-integral grid oracle",
            size: m,
            cap: budget.max_grid_edges,
        });
    }
    let ends: Vec<(VertexId, VertexId)> = graph.edges().iter().map(|e| (e.u, e.v)).collect();
    let weights: Vec<&Rational> = graph.edges().iter().map(|e| &e.weight).collect();
    let best = match Weights::of(&weights) {
        Weights::Small {
            numerators,
            denominator,
        } => enumerate_grid(graph.vertex_count(), &ends, &numerators, 0i128)
            .map(|b| Rational::new(BigInt::from(b), denominator * 2)),
        Weights::Big(ws) => enumerate_grid(graph.vertex_count(), &ends, &ws, Rational::zero())
            .map(|b| b / Rational::from_integer(BigInt::from(2))),
    };
    best.ok_or_else(|| Error::Internal("no fractional cover on the grid".into()))
}

// Odometer over {0,1,2}^m in half units; returns twice the best weight.
fn enumerate_grid<W>(n: usize, ends: &[(VertexId, VertexId)], weights: &[W], zero: W) -> Option<W>
where
    W: Clone + Ord + for<'a> AddAssign<&'a W> + for<'a> SubAssign<&'a W>,
{
    let m = ends.len();
    let mut digits = vec![0u8; m];
    let mut load = vec![0u32; n];
    let mut satisfied = 0usize;
    let mut weight = zero;
    let mut best: Option<W> = None;
    loop {
        if satisfied == n && best.as_ref().is_none_or(|b| weight < *b) {
            best = Some(weight.clone());
        }
        let mut i = 0;
        loop {
            if i == m {
                return best;
            }
            let (u, v) = ends[i];
            if digits[i] < 2 {
                digits[i] += 1;
                weight += &weights[i];
                for x in [u, v] {
                    load[x] += 1;
                    if load[x] == 2 {
                        satisfied += 1;
                    }
                }
                break;
            }
            digits[i] = 0;
            for _ in 0..2 {
                weight -= &weights[i];
            }
            for x in [u, v] {
                if load[x] >= 2 && load[x] - 2 < 2 {
                    satisfied -= 1;
                }
                load[x] -= 2;
            }
            i += 1;
        }
    }
}

/// Checks `a(S) ≤ c(S)` for every nonempty coalition, with `c` from
/// [`brute_min_cover`]. Coalitions are visited in increasing bitmask order.
pub fn brute_core_check(
    graph: &WeightedGraph,
    allocation: &Allocation,
    budget: &OracleBudget,
) -> Result<Verdict<CoalitionViolation>> {
    let n = graph.vertex_count();
    if n > budget.max_coalition_vertices {
        return Err(Error::ExceedsCap {
            what: "coalition enumeration oracle",
            size: n,
            cap: budget.max_coalition_vertices,
        });
    }
    if allocation.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: allocation.len(),
        });
    }
    for mask in 1u64..(1u64 << n) {
        let members: Vec<VertexId> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let allocated: Rational = members.iter().map(|&v| allocation.get(v)).sum();
        if allocated.is_zero() {
            continue;
        }
        let coalition = Coalition::new(graph, members.iter().copied())?;
        let cost = brute_min_cover(graph, &coalition, budget)?;
        if allocated > cost {
            return Ok(Err(CoalitionViolation {
                members,
                allocated,
                cost,
            }));
        }
    }
    Ok(Ok(()))
}

/// Length of a shortest odd cycle by enumerating every simple cycle from its
/// lowest vertex. Exponential; meant for graphs of a dozen vertices or less.
pub fn brute_shortest_odd_cycle(graph: &WeightedGraph) -> Option<usize> {
    let n = graph.vertex_count();
    let mut adjacent = vec![vec![false; n]; n];
    for e in graph.edges() {
        adjacent[e.u][e.v] = true;
        adjacent[e.v][e.u] = true;
    }
    let mut best = None;
    for start in 0..n {
        let mut on_path = vec![false; n];
        on_path[start] = true;
        extend(&adjacent, start, start, 1, &mut on_path, &mut best);
    }
    best
}

fn extend(
    adjacent: &[Vec<bool>],
    start: usize,
    tip: usize,
    vertices: usize,
    on_path: &mut [bool],
    best: &mut Option<usize>,
) {
    for next in 0..adjacent.len() {
        if !adjacent[tip][next] {
            continue;
        }
        if next == start && vertices >= 3 && vertices % 2 == 1 {
            if best.is_none_or(|b| vertices < b) {
                *best = Some(vertices);
            }
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            extend(adjacent, start, next, vertices + 1, on_path, best);
            on_path[next] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::rational::{half, int, ratio};

    #[test]
    fn min_cover_examples() {
        let b = OracleBudget::default();
        let t = triangle();
        assert_eq!(
            brute_min_cover(&t, &Coalition::all(&t), &b).unwrap(),
            int(2)
        );
        let p = path3(4, 3);
        assert_eq!(
            brute_min_cover(&p, &Coalition::new(&p, [1]).unwrap(), &b).unwrap(),
            int(3)
        );
        let s = star3();
        assert_eq!(
            brute_min_cover(&s, &Coalition::all(&s), &b).unwrap(),
            int(3)
        );
        let c = cycle(5);
        assert!(matches!(
            brute_min_cover(
                &c,
                &Coalition::all(&c),
                &OracleBudget {
                    max_cover_edges: 4,
                    ..b
                }
            ),
            Err(Error::ExceedsCap { .. })
        ));
    }

    #[test]
    fn min_cover_with_fractional_weights() {
        let g = WeightedGraph::new(
            3,
            [
                (0, 1, ratio(1, 3)),
                (1, 2, ratio(1, 2)),
                (0, 2, ratio(5, 6)),
            ],
        )
        .unwrap();
        assert_eq!(
            brute_min_cover(&g, &Coalition::all(&g), &OracleBudget::default()).unwrap(),
            ratio(5, 6)
        );
    }

    #[test]
    fn fractional_optimum_examples() {
        let b = OracleBudget::default();
        assert_eq!(
            brute_fractional_optimum(&triangle(), &b).unwrap(),
            ratio(3, 2)
        );
        let e = WeightedGraph::new(2, [(0, 1, ratio(9, 7))]).unwrap();
        assert_eq!(brute_fractional_optimum(&e, &b).unwrap(), ratio(9, 7));
        assert_eq!(brute_fractional_optimum(&cycle(4), &b).unwrap(), int(2));
        assert!(brute_fractional_optimum(&cycle(13), &b).is_err());
    }

    #[test]
    fn core_check_examples() {
        let b = OracleBudget::default();
        let t = triangle();
        let halves = Allocation::new(vec![half(); 3]).unwrap();
        assert_eq!(brute_core_check(&t, &halves, &b).unwrap(), Ok(()));
        let ones = Allocation::new(vec![int(1); 3]).unwrap();
        let v = brute_core_check(&t, &ones, &b).unwrap().unwrap_err();
        // {0,1} is the first coalition in mask order that fails: 2 > 1
        assert_eq!(
            (v.members, v.allocated, v.cost),
            (vec![0, 1], int(2), int(1))
        );
        assert_eq!(
            brute_core_check(&t, &Allocation::zeros(3), &b).unwrap(),
            Ok(())
        );
    }

    #[test]
    fn first_violating_coalition_in_mask_order() {
        // {0}, {1}, {0,1}, {2} all hold; {0,2} carries 3/2 against a cost of 1
        let t = triangle();
        let a = Allocation::new(vec![half(), half(), int(1)]).unwrap();
        let v = brute_core_check(&t, &a, &OracleBudget::default())
            .unwrap()
            .unwrap_err();
        assert_eq!(v.members, vec![0, 2]);
    }

    #[test]
    fn odd_cycle_enumeration() {
        assert_eq!(brute_shortest_odd_cycle(&triangle()), Some(3));
        assert_eq!(brute_shortest_odd_cycle(&cycle(7)), Some(7));
        assert_eq!(brute_shortest_odd_cycle(&cycle(8)), None);
        assert_eq!(brute_shortest_odd_cycle(&star3()), None);
    }
}
