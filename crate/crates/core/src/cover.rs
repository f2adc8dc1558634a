//! Minimum-weight edge covers: exact integral covers, LP-based bipartite
//! covers, half-integral optimal fractional covers via the doubling
//! construction, and rounding of those to an odd-cycle normal form.

use std::collections::VecDeque;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::game::Allocation;
use crate::graph::{
    covering_candidates, double_graph, is_bipartite, Coalition, EdgeId, VertexId, WeightedGraph,
};
use crate::lp::{dual_packing_lp, fractional_cover_lp, solve, LpStatus};
use crate::rational::{self, Rational};

/// A rational value per edge, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeVector {
    values: Vec<Rational>,
}

impl EdgeVector {
    pub fn zeros(edge_count: usize) -> Self {
        EdgeVector {
            values: vec![Rational::zero(); edge_count],
        }
    }

    pub fn new(values: Vec<Rational>) -> Self {
        EdgeVector { values }
    }

    /// Indicator vector of an edge set.
    pub fn indicator(edge_count: usize, edges: &[EdgeId]) -> Self {
        let mut v = Self::zeros(edge_count);
        for &e in edges {
            v.values[e] = rational::one();
        }
        v
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, e: EdgeId) -> &Rational {
        &self.values[e]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn weight(&self, graph: &WeightedGraph) -> Rational {
        graph
            .edges()
            .iter()
            .zip(&self.values)
            .map(|(e, x)| &e.weight * x)
            .sum()
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        EdgeVector {
            values: self.values.iter().map(|x| x * factor).collect(),
        }
    }

    /// `x(δ(v))`.
    pub fn coverage(&self, graph: &WeightedGraph, v: VertexId) -> Rational {
        graph
            .neighbors(v)
            .iter()
            .map(|&(_, e)| &self.values[e])
            .sum()
    }

    /// First vertex with `x(δ(v)) < 1`, if any.
    pub fn uncovered_vertex(&self, graph: &WeightedGraph) -> Option<VertexId> {
        graph
            .vertices()
            .find(|&v| self.coverage(graph, v) < Rational::one())
    }

    pub fn is_feasible_cover(&self, graph: &WeightedGraph) -> bool {
        self.values.len() == graph.edge_count()
            && self.values.iter().all(rational::is_nonnegative)
            && self.uncovered_vertex(graph).is_none()
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|x| x.is_zero() || x.is_one())
    }

    /// Every entry in `{0, 1/2, 1}`.
    pub fn is_half_integral(&self) -> bool {
        self.first_non_half_integral().is_none()
    }

    pub(crate) fn first_non_half_integral(&self) -> Option<EdgeId> {
        let half = rational::half();
        self.values
            .iter()
            .position(|x| !(x.is_zero() || x.is_one() || *x == half))
    }

    /// Edges carrying exactly 1/2.
    pub fn fractional_support(&self) -> Vec<EdgeId> {
        let half = rational::half();
        (0..self.values.len())
            .filter(|&e| self.values[e] == half)
            .collect()
    }

    pub fn support(&self) -> Vec<EdgeId> {
        (0..self.values.len())
            .filter(|&e| !self.values[e].is_zero())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverKind {
    Integral,
    HalfIntegral,
    Fractional,
}

impl CoverKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CoverKind::Integral => "integral",
            CoverKind::HalfIntegral => "half-integral",
            CoverKind::Fractional => "fractional",
        }
    }
}

/// A cover with its weight and, when known, a dual packing of equal value
/// proving optimality over all fractional covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCertificate {
    pub kind: CoverKind,
    pub vector: EdgeVector,
    pub weight: Rational,
    pub witness: Option<Allocation>,
}

/// Knobs for the exhaustive integral cover search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactConfig {
    /// Largest `|E[S] ∪ δ(S)|` the branch and bound will accept.
    pub max_candidate_edges: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            max_candidate_edges: 24,
        }
    }
}

/// Cheapest edge set within `E[S] ∪ δ(S)` touching every vertex of `S`.
///
/// Branches on the lowest uncovered vertex of `S` (some incident edge must be
/// taken) and prunes with half the sum of cheapest incident weights over the
/// still-uncovered vertices.
pub fn min_edge_cover_exact(
    graph: &WeightedGraph,
    coalition: &Coalition,
    config: &ExactConfig,
) -> Result<CoverCertificate> {
    let candidates = covering_candidates(graph, coalition);
    if candidates.len() > config.max_candidate_edges {
        return Err(Error::ExceedsCap {
            what: "exact cover solver",
            size: candidates.len(),
            cap: config.max_candidate_edges,
        });
    }

    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); graph.vertex_count()];
    for &e in &candidates {
        let edge = graph.edge(e);
        incident[edge.u].push(e);
        incident[edge.v].push(e);
    }
    for list in &mut incident {
        list.sort_by(|&a, &b| graph.weight(a).cmp(graph.weight(b)).then(a.cmp(&b)));
    }
    let cheapest: Vec<Rational> = incident
        .iter()
        .map(|l| {
            l.first()
                .map_or_else(Rational::zero, |&e| graph.weight(e).clone())
        })
        .collect();

    let mut search = Search {
        graph,
        members: coalition.members(),
        incident: &incident,
        cheapest: &cheapest,
        cover_count: vec![0; graph.vertex_count()],
        chosen: Vec::new(),
        weight: Rational::zero(),
        best: None,
    };
    search.descend();
    let (weight, mut edges) = search.best.expect("every vertex has an incident edge");
    edges.sort_unstable();
    Ok(CoverCertificate {
        kind: CoverKind::Integral,
        vector: EdgeVector::indicator(graph.edge_count(), &edges),
        weight,
        witness: None,
    })
}

struct Search<'a> {
    graph: &'a WeightedGraph,
    members: &'a [VertexId],
    incident: &'a [Vec<EdgeId>],
    cheapest: &'a [Rational],
    cover_count: Vec<u32>,
    chosen: Vec<EdgeId>,
    weight: Rational,
    best: Option<(Rational, Vec<EdgeId>)>,
}

impl Search<'_> {
    fn descend(&mut self) {
        let Some(&v) = self.members.iter().find(|&&v| self.cover_count[v] == 0) else {
            if self.best.as_ref().is_none_or(|(b, _)| self.weight < *b) {
                self.best = Some((self.weight.clone(), self.chosen.clone()));
            }
            return;
        };
        if let Some((best, _)) = &self.best {
            let remaining: Rational = self
                .members
                .iter()
                .filter(|&&u| self.cover_count[u] == 0)
                .map(|&u| &self.cheapest[u])
                .sum();
            if &self.weight + remaining * rational::half() >= *best {
                return;
            }
        }
        for &e in &self.incident[v] {
            let (a, b) = (self.graph.edge(e).u, self.graph.edge(e).v);
            self.cover_count[a] += 1;
            self.cover_count[b] += 1;
            self.chosen.push(e);
            self.weight += self.graph.weight(e);
            self.descend();
            self.weight -= self.graph.weight(e);
            self.chosen.pop();
            self.cover_count[a] -= 1;
            self.cover_count[b] -= 1;
        }
    }
}

/// Minimum edge cover of a bipartite graph read off the basic optimal
/// solution of the covering LP, with the dual packing as optimality witness.
pub fn bipartite_min_edge_cover(graph: &WeightedGraph) -> Result<CoverCertificate> {
    if !is_bipartite(graph).is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let primal = solve(&fractional_cover_lp(graph));
    if primal.status != LpStatus::Optimal {
        return Err(Error::Internal(format!(
            "covering LP returned {:?}",
            primal.status
        )));
    }
    let vector = EdgeVector::new(primal.values);
    if !vector.is_integral() {
        return Err(Error::Internal(
            "basic optimum of a bipartite covering LP is fractional".into(),
        ));
    }
    let dual = solve(&dual_packing_lp(graph));
    if dual.status != LpStatus::Optimal || dual.objective != primal.objective {
        return Err(Error::Internal(
            "packing LP does not certify the cover".into(),
        ));
    }
    Ok(CoverCertificate {
        kind: CoverKind::Integral,
        weight: primal.objective,
        vector,
        witness: Some(Allocation::new(dual.values)?),
    })
}

/// Optimal fractional cover with entries in `{0, 1/2, 1}`.
///
/// Covers the bipartite doubled graph integrally and averages the two copies
/// of every edge. The packing on the doubled graph, averaged over the two
/// copies of each vertex, is returned as a witness of equal value.
pub fn half_integral_cover(graph: &WeightedGraph) -> Result<CoverCertificate> {
    let doubled = double_graph(graph);
    let cover = bipartite_min_edge_cover(&doubled.graph)?;
    let half = rational::half();
    let values = doubled
        .copies
        .iter()
        .map(|&(a, b)| (cover.vector.get(a) + cover.vector.get(b)) * &half)
        .collect();
    let vector = EdgeVector::new(values);
    let weight = vector.weight(graph);

    let packing = cover.witness.expect("bipartite covers carry a witness");
    let witness = Allocation::new(
        graph
            .vertices()
            .map(|v| {
                (packing.get(doubled.first_copy(v)) + packing.get(doubled.second_copy(v))) * &half
            })
            .collect(),
    )?;
    debug_assert!(vector.is_feasible_cover(graph));
    debug_assert_eq!(witness.total(), weight);
    Ok(CoverCertificate {
        kind: CoverKind::HalfIntegral,
        vector,
        weight,
        witness: Some(witness),
    })
}

/// Rounds an optimal half-integral cover until the edges at 1/2 form
/// vertex-disjoint odd cycles. Weight and feasibility are preserved.
///
/// Each round picks an alternating trail `e_1 … e_k` of half edges and moves
/// to whichever of `x ∓ 1/2, ±1/2, …` is lighter, lexicographically smaller
/// on ties. The trail is either a path between two vertices of odd
/// half-degree (these always have slack for the −1/2 at the end), or an
/// even-length closed trail inside a component that is not already a lone
/// odd cycle.
pub fn canonicalize_to_odd_cycles(graph: &WeightedGraph, x: &EdgeVector) -> Result<EdgeVector> {
    if x.len() != graph.edge_count() {
        return Err(Error::DimensionMismatch {
            expected: graph.edge_count(),
            found: x.len(),
        });
    }
    if let Some(edge) = x.first_non_half_integral() {
        return Err(Error::NotHalfIntegral { edge });
    }
    if let Some(vertex) = x.uncovered_vertex(graph) {
        return Err(Error::InfeasibleCover { vertex });
    }
    let optimum = half_integral_cover(graph)?.weight;
    let weight = x.weight(graph);
    if weight != optimum {
        return Err(Error::NotOptimal {
            weight: Box::new(weight),
            optimum: Box::new(optimum),
        });
    }

    let mut current = x.clone();
    while let Some(trail) = next_trail(graph, &current) {
        current = round_trail(graph, &current, &trail)?;
    }
    Ok(current)
}

fn round_trail(graph: &WeightedGraph, x: &EdgeVector, trail: &[EdgeId]) -> Result<EdgeVector> {
    let half = rational::half();
    let shift = |first_sign: i8| {
        let mut values = x.values.clone();
        for (i, &e) in trail.iter().enumerate() {
            let down = (i % 2 == 0) == (first_sign < 0);
            if down {
                values[e] -= &half;
            } else {
                values[e] += &half;
            }
        }
        EdgeVector::new(values)
    };
    let mut options: Vec<EdgeVector> = [shift(-1), shift(1)]
        .into_iter()
        .filter(|v| v.is_feasible_cover(graph))
        .collect();
    options.sort_by(|a, b| a.weight(graph).cmp(&b.weight(graph)).then_with(|| a.cmp(b)));
    let chosen = options
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("both alternating roundings are infeasible".into()))?;
    if chosen.weight(graph) > x.weight(graph) {
        return Err(Error::Internal(
            "rounding increased the cover weight".into(),
        ));
    }
    Ok(chosen)
}

// Half-edge adjacency: (neighbor, edge) pairs in neighbor order.
fn half_adjacency(graph: &WeightedGraph, x: &EdgeVector) -> Vec<Vec<(VertexId, EdgeId)>> {
    let half = rational::half();
    graph
        .vertices()
        .map(|v| {
            graph
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&(_, e)| *x.get(e) == half)
                .collect()
        })
        .collect()
}

fn next_trail(graph: &WeightedGraph, x: &EdgeVector) -> Option<Vec<EdgeId>> {
    let h = half_adjacency(graph, x);
    if let Some(s) = graph.vertices().find(|&v| h[v].len() % 2 == 1) {
        return Some(path_to_odd_vertex(&h, s));
    }
    let mut seen = vec![false; graph.vertex_count()];
    for start in graph.vertices() {
        if seen[start] || h[start].is_empty() {
            continue;
        }
        let component = collect_component(&h, start, &mut seen);
        let edge_count: usize = component.iter().map(|&v| h[v].len()).sum::<usize>() / 2;
        let lone_cycle = component.iter().all(|&v| h[v].len() == 2);
        if lone_cycle && edge_count % 2 == 1 {
            continue;
        }
        return Some(even_closed_trail(&h, start, edge_count));
    }
    None
}

// Shortest path in H from `s` to the nearest other vertex of odd H-degree.
fn path_to_odd_vertex(h: &[Vec<(VertexId, EdgeId)>], s: VertexId) -> Vec<EdgeId> {
    let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; h.len()];
    let mut visited = vec![false; h.len()];
    visited[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v != s && h[v].len() % 2 == 1 {
            let mut path = Vec::new();
            let mut cur = v;
            while let Some((p, e)) = parent[cur] {
                path.push(e);
                cur = p;
            }
            path.reverse();
            return path;
        }
        for &(w, e) in &h[v] {
            if !visited[w] {
                visited[w] = true;
                parent[w] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    unreachable!("odd-degree vertices come in pairs within a component")
}

fn collect_component(
    h: &[Vec<(VertexId, EdgeId)>],
    start: VertexId,
    seen: &mut [bool],
) -> Vec<VertexId> {
    let mut component = vec![start];
    seen[start] = true;
    let mut i = 0;
    while i < component.len() {
        for &(w, _) in &h[component[i]] {
            if !seen[w] {
                seen[w] = true;
                component.push(w);
            }
        }
        i += 1;
    }
    component
}

// The component is Eulerian. Its Euler circuit is used whole when it has even
// length; otherwise it is split at a vertex of degree ≥ 4 into two closed
// trails of which one is even.
fn even_closed_trail(
    h: &[Vec<(VertexId, EdgeId)>],
    start: VertexId,
    edge_count: usize,
) -> Vec<EdgeId> {
    let circuit = euler_circuit(h, start);
    debug_assert_eq!(circuit.len(), edge_count);
    if circuit.len().is_multiple_of(2) {
        return circuit.into_iter().map(|(_, e)| e).collect();
    }
    // circuit[i] = (vertex the i-th edge leaves from, edge)
    let pivot = circuit
        .iter()
        .map(|&(v, _)| v)
        .find(|&v| h[v].len() >= 4)
        .expect("a connected even graph that is not a cycle has a vertex of degree at least 4");
    let visits: Vec<usize> = (0..circuit.len())
        .filter(|&i| circuit[i].0 == pivot)
        .collect();
    let (a, b) = (visits[0], visits[1]);
    let inner: Vec<EdgeId> = circuit[a..b].iter().map(|&(_, e)| e).collect();
    if inner.len().is_multiple_of(2) {
        inner
    } else {
        circuit[b..]
            .iter()
            .chain(&circuit[..a])
            .map(|&(_, e)| e)
            .collect()
    }
}

// Hierholzer's algorithm; returns (tail vertex, edge) in traversal order.
fn euler_circuit(h: &[Vec<(VertexId, EdgeId)>], start: VertexId) -> Vec<(VertexId, EdgeId)> {
    let edge_total = h.iter().flatten().map(|&(_, e)| e + 1).max().unwrap_or(0);
    let mut used = vec![false; edge_total];
    let mut next = vec![0usize; h.len()];
    let mut stack: Vec<(VertexId, Option<EdgeId>)> = vec![(start, None)];
    let mut reversed: Vec<(VertexId, EdgeId)> = Vec::new();
    while let Some(&(v, via)) = stack.last() {
        while next[v] < h[v].len() && used[h[v][next[v]].1] {
            next[v] += 1;
        }
        if next[v] < h[v].len() {
            let (w, e) = h[v][next[v]];
            used[e] = true;
            stack.push((w, Some(e)));
        } else {
            stack.pop();
            if let (Some(e), Some(&(prev, _))) = (via, stack.last()) {
                reversed.push((prev, e));
            }
        }
    }
    reversed.reverse();
    reversed
}

/// Closed vertex sequences of the cycles formed by the edges at 1/2, or
/// `None` when those edges are not a union of vertex-disjoint odd cycles.
pub fn odd_cycle_decomposition(
    graph: &WeightedGraph,
    x: &EdgeVector,
) -> Option<Vec<Vec<VertexId>>> {
    let h = half_adjacency(graph, x);
    let mut seen = vec![false; graph.vertex_count()];
    let mut cycles = Vec::new();
    for start in graph.vertices() {
        if seen[start] || h[start].is_empty() {
            continue;
        }
        let component = collect_component(&h, start, &mut seen);
        if component.iter().any(|&v| h[v].len() != 2) || component.len().is_multiple_of(2) {
            return None;
        }
        let mut cycle = vec![start];
        let (mut prev, mut cur) = (start, h[start][0].0);
        while cur != start {
            cycle.push(cur);
            let next = h[cur].iter().map(|&(w, _)| w).find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        cycle.push(start);
        cycles.push(cycle);
    }
    Some(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::lp;
    use crate::oracle::{self, OracleBudget};
    use crate::rational::{half, int, ratio};

    fn exact(g: &WeightedGraph, s: &[VertexId]) -> Rational {
        let s = Coalition::new(g, s.iter().copied()).unwrap();
        min_edge_cover_exact(g, &s, &ExactConfig::default())
            .unwrap()
            .weight
    }

    #[test]
    fn exact_cover_examples() {
        assert_eq!(exact(&triangle(), &[0, 1, 2]), int(2));
        assert_eq!(exact(&cycle(5), &[0, 1, 2, 3, 4]), int(3));
        assert_eq!(exact(&path3(1, 3), &[0]), int(1));
        for k in [3, 5, 7, 9] {
            let all: Vec<_> = (0..k).collect();
            assert_eq!(exact(&cycle(k), &all), int((k as i64 + 1) / 2));
        }
    }

    #[test]
    fn exact_cover_vector_covers_the_coalition() {
        let g = path3(1, 3);
        let s = Coalition::all(&g);
        let c = min_edge_cover_exact(&g, &s, &ExactConfig::default()).unwrap();
        assert_eq!(c.vector.values(), &[int(1), int(1)]);
        assert_eq!(c.weight, int(4));
        assert_eq!(c.kind, CoverKind::Integral);
    }

    #[test]
    fn exact_cover_respects_cap() {
        let err = min_edge_cover_exact(
            &cycle(5),
            &Coalition::all(&cycle(5)),
            &ExactConfig {
                max_candidate_edges: 4,
            },
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::ExceedsCap {
                what: "exact cover solver",
                size: 5,
                cap: 4
            }
        );
        assert!(err.is_cap());
    }

    #[test]
    fn bipartite_cover_examples() {
        let edge = WeightedGraph::new(2, [(0, 1, ratio(9, 4))]).unwrap();
        let c = bipartite_min_edge_cover(&edge).unwrap();
        assert_eq!(c.weight, ratio(9, 4));
        assert_eq!(c.vector.values(), &[int(1)]);

        // oracle: all 64 subsets of the hexagon's edges
        let c6 = cycle(6);
        assert_eq!(
            oracle::brute_min_cover(&c6, &Coalition::all(&c6), &OracleBudget::default()).unwrap(),
            int(3)
        );
        let c = bipartite_min_edge_cover(&c6).unwrap();
        assert_eq!(c.weight, int(3));
        assert_eq!(c.witness.unwrap().total(), int(3));

        let c = bipartite_min_edge_cover(&star3()).unwrap();
        assert_eq!(c.vector.values(), &[int(1), int(1), int(1)]);
        assert_eq!(
            bipartite_min_edge_cover(&triangle()),
            Err(Error::NotBipartite)
        );
    }

    #[test]
    fn half_integral_examples() {
        let t = half_integral_cover(&triangle()).unwrap();
        assert_eq!(t.vector.values(), &[half(), half(), half()]);
        assert_eq!(t.weight, ratio(3, 2));
        assert_eq!(t.kind, CoverKind::HalfIntegral);
        assert_eq!(t.witness.unwrap().total(), ratio(3, 2));

        let edge = WeightedGraph::new(2, [(0, 1, ratio(7, 5))]).unwrap();
        let c = half_integral_cover(&edge).unwrap();
        assert_eq!(c.vector.values(), &[int(1)]);
        assert_eq!(c.weight, ratio(7, 5));

        assert_eq!(half_integral_cover(&cycle(5)).unwrap().weight, ratio(5, 2));
    }

    #[test]
    fn bipartite_graphs_get_integral_half_covers() {
        for g in [cycle(4), cycle(6), star3(), path3(2, 5)] {
            let c = half_integral_cover(&g).unwrap();
            assert!(c.vector.is_integral(), "{g:?}");
            assert_eq!(c.weight, lp::solve(&lp::fractional_cover_lp(&g)).objective);
        }
    }

    #[test]
    fn triangle_is_already_canonical() {
        let t = triangle();
        let x = EdgeVector::new(vec![half(), half(), half()]);
        assert_eq!(canonicalize_to_odd_cycles(&t, &x).unwrap(), x);
        assert_eq!(
            odd_cycle_decomposition(&t, &x),
            Some(vec![vec![0, 1, 2, 0]])
        );
    }

    #[test]
    fn even_cycle_is_rounded_away() {
        // integral covers of C4 by enumeration: the two perfect matchings at weight 2
        let c4 = cycle(4);
        let integral_optimum: Vec<EdgeVector> = (0u32..16)
            .map(|mask| EdgeVector::new((0..4).map(|e| int((mask >> e & 1) as i64)).collect()))
            .filter(|v| v.is_feasible_cover(&c4) && v.weight(&c4) == int(2))
            .collect();
        assert_eq!(integral_optimum.len(), 2);

        let x = EdgeVector::new(vec![half(); 4]);
        let y = canonicalize_to_odd_cycles(&c4, &x).unwrap();
        assert!(y.is_integral());
        assert_eq!(y.weight(&c4), int(2));
        assert!(integral_optimum.contains(&y));
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = path3(1, 1);
        assert_eq!(
            canonicalize_to_odd_cycles(&p, &EdgeVector::new(vec![half(), half()])),
            Err(Error::InfeasibleCover { vertex: 0 })
        );
        assert_eq!(
            canonicalize_to_odd_cycles(&p, &EdgeVector::new(vec![ratio(1, 3), int(1)])),
            Err(Error::NotHalfIntegral { edge: 0 })
        );
        assert_eq!(
            canonicalize_to_odd_cycles(&p, &EdgeVector::new(vec![int(2), int(1)])),
            Err(Error::NotHalfIntegral { edge: 0 })
        );
        let t = triangle();
        assert!(matches!(
            canonicalize_to_odd_cycles(&t, &EdgeVector::new(vec![int(1), int(1), int(1)])),
            Err(Error::NotOptimal { .. })
        ));
        assert!(matches!(
            canonicalize_to_odd_cycles(&t, &EdgeVector::new(vec![int(1)])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        // bowtie: triangles 0-1-2 and 0-3-4, spokes at 1/2 and rims at 1.
        // y = (0, 1/2, 1/2, 1/2, 1/2) is tight on every edge, so all halves is optimal
        let h = half();
        let g = WeightedGraph::new(
            5,
            [
                (0, 1, h.clone()),
                (1, 2, int(1)),
                (0, 2, h.clone()),
                (0, 3, h.clone()),
                (3, 4, int(1)),
                (0, 4, h),
            ],
        )
        .unwrap();
        let x = EdgeVector::new(vec![half(); 6]);
        assert_eq!(half_integral_cover(&g).unwrap().weight, int(2));
        assert_eq!(x.weight(&g), int(2));
        let y = canonicalize_to_odd_cycles(&g, &x).unwrap();
        assert_eq!(y.weight(&g), int(2));
        assert!(y.is_feasible_cover(&g));
        // the six half edges form one even closed trail, so everything rounds
        assert!(y.is_integral());
    }

    #[test]
    fn triangles_sharing_an_edge() {
        // diamond: 0-1-2 and 1-2-3 share 1-2; x = 1/2 everywhere is feasible with weight 5/2,
        // but the optimum is 2 (edges 0-1 and 2-3), so start from the optimal half cover
        let g = WeightedGraph::unit(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let start = half_integral_cover(&g).unwrap();
        let y = canonicalize_to_odd_cycles(&g, &start.vector).unwrap();
        assert_eq!(y.weight(&g), int(2));
        assert!(odd_cycle_decomposition(&g, &y).is_some());
    }

    #[test]
    fn euler_split_picks_an_even_closed_trail() {
        // a triangle and a 4-cycle glued at vertex 0, odd total length 7
        let g = WeightedGraph::unit(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (0, 5)])
            .unwrap();
        let h = half_adjacency(&g, &EdgeVector::new(vec![half(); 7]));
        let trail = even_closed_trail(&h, 0, 7);
        assert_eq!(trail.len(), 4);
        let mut sorted = trail.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![3, 4, 5, 6]);
    }
}
