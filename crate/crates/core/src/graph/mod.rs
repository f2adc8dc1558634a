//! Simple undirected graphs with nonnegative rational edge weights.

mod cycles;
mod double;
mod parse;

use std::collections::HashMap;
use std::fmt;

use num_traits::Signed;
use thiserror::Error;

use crate::rational::Rational;

pub use cycles::{is_bipartite, shortest_odd_cycle, Bipartiteness, OddCycle};
pub use double::{double_graph, DoubledGraph};
pub use parse::{parse_graph, ParseError, ParseErrorKind};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    Loop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("negative weight on edge {0}-{1}")]
    NegativeWeight(VertexId, VertexId),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(VertexId),
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange {
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("coalition must be nonempty")]
    EmptyCoalition,
    #[error("star must have at least one leaf")]
    EmptyStar,
    #[error("vertex {leaf} is not a neighbor of {center}")]
    NotANeighbor { center: VertexId, leaf: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Rational,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

/// A validated simple graph: no loops, no parallel edges, no isolated vertices.
///
/// Edge ids are positions in insertion order. Endpoints are stored with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    // (neighbor, edge id), sorted by neighbor
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
}

impl WeightedGraph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId, Rational)>,
    ) -> Result<Self, GraphError> {
        let mut graph = Self::empty(vertex_count);
        for (u, v, w) in edges {
            graph.push_edge(u, v, w)?;
        }
        graph.finish()
    }

    /// Unit-weight graph from an edge list.
    pub fn unit(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        Self::new(
            vertex_count,
            edges.iter().map(|&(u, v)| (u, v, crate::rational::one())),
        )
    }

    pub(crate) fn empty(vertex_count: usize) -> Self {
        WeightedGraph {
            vertex_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
            index: HashMap::new(),
        }
    }

    pub(crate) fn push_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        weight: Rational,
    ) -> Result<EdgeId, GraphError> {
        for x in [u, v] {
            if x >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    vertex_count: self.vertex_count,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        if self.index.contains_key(&(u, v)) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        if weight.is_negative() {
            return Err(GraphError::NegativeWeight(u, v));
        }
        let id = self.edges.len();
        self.edges.push(Edge { u, v, weight });
        self.index.insert((u, v), id);
        self.adjacency[u].push((v, id));
        self.adjacency[v].push((u, id));
        Ok(id)
    }

    pub(crate) fn finish(mut self) -> Result<Self, GraphError> {
        if let Some(v) = self.adjacency.iter().position(Vec::is_empty) {
            return Err(GraphError::IsolatedVertex(v));
        }
        for list in &mut self.adjacency {
            list.sort_unstable();
        }
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn weight(&self, id: EdgeId) -> &Rational {
        &self.edges[id].weight
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count
    }

    /// `(neighbor, edge id)` pairs in increasing neighbor order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.index.get(&key).copied()
    }

    pub fn total_weight(&self, edges: &[EdgeId]) -> Rational {
        edges.iter().map(|&e| &self.edges[e].weight).sum()
    }

    /// Same topology with every weight multiplied by `factor`.
    pub fn scaled(&self, factor: &Rational) -> Result<Self, GraphError> {
        Self::new(
            self.vertex_count,
            self.edges.iter().map(|e| (e.u, e.v, &e.weight * factor)),
        )
    }

    /// Same topology with replacement weights, indexed by edge id.
    pub fn reweighted(&self, weights: &[Rational]) -> Result<Self, GraphError> {
        assert_eq!(weights.len(), self.edges.len(), "one weight per edge");
        Self::new(
            self.vertex_count,
            self.edges
                .iter()
                .zip(weights)
                .map(|(e, w)| (e.u, e.v, w.clone())),
        )
    }
}

impl fmt::Display for WeightedGraph {
    /// Writes the graph in the text file format accepted by [`parse_graph`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.vertex_count, self.edges.len())?;
        for e in &self.edges {
            writeln!(f, "{} {} {}", e.u, e.v, crate::rational::format(&e.weight))?;
        }
        Ok(())
    }
}

/// A nonempty set of players.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coalition {
    members: Vec<VertexId>,
    mask: Vec<bool>,
}

impl Coalition {
    pub fn new(
        graph: &WeightedGraph,
        members: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self, GraphError> {
        let n = graph.vertex_count();
        let mut mask = vec![false; n];
        for v in members {
            if v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    vertex_count: n,
                });
            }
            mask[v] = true;
        }
        let members: Vec<_> = (0..n).filter(|&v| mask[v]).collect();
        if members.is_empty() {
            return Err(GraphError::EmptyCoalition);
        }
        Ok(Coalition { members, mask })
    }

    /// The grand coalition `V`.
    pub fn all(graph: &WeightedGraph) -> Self {
        let n = graph.vertex_count();
        Coalition {
            members: (0..n).collect(),
            mask: vec![true; n],
        }
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }
}

/// `E[S]`: edges with both endpoints in the coalition.
pub fn edges_within(graph: &WeightedGraph, coalition: &Coalition) -> Vec<EdgeId> {
    graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| coalition.contains(e.u) && coalition.contains(e.v))
        .map(|(id, _)| id)
        .collect()
}

/// `δ(S)`: edges with exactly one endpoint in the coalition.
pub fn boundary(graph: &WeightedGraph, coalition: &Coalition) -> Vec<EdgeId> {
    graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| coalition.contains(e.u) != coalition.contains(e.v))
        .map(|(id, _)| id)
        .collect()
}

/// `E[S] ∪ δ(S)` in edge-id order: every edge that can help cover the coalition.
pub fn covering_candidates(graph: &WeightedGraph, coalition: &Coalition) -> Vec<EdgeId> {
    graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| coalition.contains(e.u) || coalition.contains(e.v))
        .map(|(id, _)| id)
        .collect()
}

/// Edges of the star centred at `center` with leaves `leaves`, in leaf order.
pub fn star_edges(
    graph: &WeightedGraph,
    center: VertexId,
    leaves: &[VertexId],
) -> Result<Vec<EdgeId>, GraphError> {
    if center >= graph.vertex_count() {
        return Err(GraphError::VertexOutOfRange {
            vertex: center,
            vertex_count: graph.vertex_count(),
        });
    }
    if leaves.is_empty() {
        return Err(GraphError::EmptyStar);
    }
    leaves
        .iter()
        .map(|&leaf| {
            graph
                .edge_between(center, leaf)
                .ok_or(GraphError::NotANeighbor { center, leaf })
        })
        .collect()
}
