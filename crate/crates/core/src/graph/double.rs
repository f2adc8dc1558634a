use super::{EdgeId, VertexId, WeightedGraph};

/// The bipartite doubling of a graph: vertices `v'` (ids `0..n`) and `v''`
/// (ids `n..2n`), with edges `u'v''` and `u''v'` for every edge `uv`.
#[derive(Debug, Clone)]
pub struct DoubledGraph {
    pub graph: WeightedGraph,
    /// `origin[e']` is the edge of the original graph that `e'` copies.
    pub origin: Vec<EdgeId>,
    /// Edge ids of the two copies of each original edge: `(u'v'', u''v')`.
    pub copies: Vec<(EdgeId, EdgeId)>,
    original_vertex_count: usize,
}

impl DoubledGraph {
    pub fn first_copy(&self, v: VertexId) -> VertexId {
        v
    }

    pub fn second_copy(&self, v: VertexId) -> VertexId {
        self.original_vertex_count + v
    }

    /// Maps a vertex of the doubled graph back to the vertex it copies.
    pub fn original_vertex(&self, v: VertexId) -> VertexId {
        v % self.original_vertex_count
    }
}

pub fn double_graph(graph: &WeightedGraph) -> DoubledGraph {
    let n = graph.vertex_count();
    let mut doubled = WeightedGraph::empty(2 * n);
    let mut origin = Vec::with_capacity(2 * graph.edge_count());
    let mut copies = Vec::with_capacity(graph.edge_count());
    for (id, e) in graph.edges().iter().enumerate() {
        let a = doubled
            .push_edge(e.u, n + e.v, e.weight.clone())
            .expect("copies of a simple graph's edges are distinct");
        let b = doubled
            .push_edge(n + e.u, e.v, e.weight.clone())
            .expect("copies of a simple graph's edges are distinct");
        origin.extend([id, id]);
        copies.push((a, b));
    }
    let graph = doubled.finish().expect("every copy inherits a neighbour");
    DoubledGraph {
        graph,
        origin,
        copies,
        original_vertex_count: n,
    }
}
