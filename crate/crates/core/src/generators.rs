//! Standard graph families and random instances for experiments and tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{VertexId, WeightedGraph};
use crate::rational::{self, Rational};

pub fn cycle(n: usize) -> WeightedGraph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    WeightedGraph::unit(n, &edges).expect("cycles are simple")
}

pub fn path(n: usize) -> WeightedGraph {
    assert!(n >= 2, "a path needs at least two vertices");
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    WeightedGraph::unit(n, &edges).expect("paths are simple")
}

pub fn complete(n: usize) -> WeightedGraph {
    assert!(n >= 2);
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    WeightedGraph::unit(n, &edges).expect("complete graphs are simple")
}

/// `K_{1,leaves}` centred at vertex 0.
pub fn star(leaves: usize) -> WeightedGraph {
    assert!(leaves >= 1);
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    WeightedGraph::unit(leaves + 1, &edges).expect("stars are simple")
}

/// Random weight `p/q` with `0 ≤ p ≤ max_numerator` and `1 ≤ q ≤ max_denominator`.
pub fn random_weight<R: Rng + ?Sized>(
    rng: &mut R,
    max_numerator: i64,
    max_denominator: i64,
) -> Rational {
    rational::ratio(
        rng.gen_range(0..=max_numerator),
        rng.gen_range(1..=max_denominator),
    )
}

/// Parameters for [`random_graph`].
#[derive(Debug, Clone, Copy)]
pub struct RandomGraphParams {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub edge_probability: f64,
    /// Instances with more edges are resampled.
    pub max_edges: usize,
    pub max_numerator: i64,
    pub max_denominator: i64,
}

impl Default for RandomGraphParams {
    fn default() -> Self {
        RandomGraphParams {
            min_vertices: 2,
            max_vertices: 8,
            edge_probability: 0.4,
            max_edges: 14,
            max_numerator: 20,
            max_denominator: 4,
        }
    }
}

/// Erdős–Rényi graph where every isolated vertex is then joined to a random
/// other vertex, with random rational weights.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, params: &RandomGraphParams) -> WeightedGraph {
    loop {
        let n = rng.gen_range(params.min_vertices..=params.max_vertices);
        let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(params.edge_probability) {
                    pairs.push((u, v));
                }
            }
        }
        for v in 0..n {
            if !pairs.iter().any(|&(a, b)| a == v || b == v) {
                let others: Vec<_> = (0..n).filter(|&w| w != v).collect();
                let w = *others.choose(rng).unwrap();
                pairs.push((v.min(w), v.max(w)));
            }
        }
        if pairs.len() > params.max_edges {
            continue;
        }
        let weights: Vec<_> = pairs
            .iter()
            .map(|_| random_weight(rng, params.max_numerator, params.max_denominator))
            .collect();
        return WeightedGraph::new(
            n,
            pairs.into_iter().zip(weights).map(|((u, v), w)| (u, v, w)),
        )
        .expect("generated graphs are simple and have no isolated vertices");
    }
}

/// Random bipartite graph with sides `0..left` and `left..left+right`.
pub fn random_bipartite<R: Rng + ?Sized>(
    rng: &mut R,
    left: usize,
    right: usize,
    edge_probability: f64,
    max_numerator: i64,
    max_denominator: i64,
) -> WeightedGraph {
    assert!(left >= 1 && right >= 1);
    let n = left + right;
    let mut pairs = Vec::new();
    for u in 0..left {
        for v in left..n {
            if rng.gen_bool(edge_probability) {
                pairs.push((u, v));
            }
        }
    }
    for v in 0..n {
        if !pairs.iter().any(|&(a, b)| a == v || b == v) {
            let pair = if v < left {
                (v, rng.gen_range(left..n))
            } else {
                (rng.gen_range(0..left), v)
            };
            pairs.push(pair);
        }
    }
    let weights: Vec<_> = pairs
        .iter()
        .map(|_| random_weight(rng, max_numerator, max_denominator))
        .collect();
    WeightedGraph::new(
        n,
        pairs.into_iter().zip(weights).map(|((u, v), w)| (u, v, w)),
    )
    .expect("generated graphs are simple and have no isolated vertices")
}
