use std::collections::VecDeque;

use super::{EdgeId, VertexId, WeightedGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// A proper two-colouring, one entry per vertex.
    Bipartite { coloring: Vec<u8> },
    /// A closed walk of odd length; first vertex repeated at the end.
    NotBipartite { odd_walk: Vec<VertexId> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

pub fn is_bipartite(graph: &WeightedGraph) -> Bipartiteness {
    let n = graph.vertex_count();
    let mut color: Vec<Option<u8>> = vec![None; n];
    let mut parent: Vec<Option<VertexId>> = vec![None; n];
    let mut queue = VecDeque::new();

    for root in graph.vertices() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(0);
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            let cx = color[x].unwrap();
            for &(y, _) in graph.neighbors(x) {
                match color[y] {
                    None => {
                        color[y] = Some(1 - cx);
                        parent[y] = Some(x);
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => {
                        return Bipartiteness::NotBipartite {
                            odd_walk: odd_walk(&parent, x, y),
                        };
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartiteness::Bipartite {
        coloring: color.into_iter().map(Option::unwrap).collect(),
    }
}

// root -> x, edge xy, y -> root. Both tree paths have equal parity, so the walk is odd.
fn odd_walk(parent: &[Option<VertexId>], x: VertexId, y: VertexId) -> Vec<VertexId> {
    let up = |mut v: VertexId| {
        let mut path = vec![v];
        while let Some(p) = parent[v] {
            path.push(p);
            v = p;
        }
        path
    };
    let mut walk = up(x);
    walk.reverse();
    walk.extend(up(y));
    walk
}

/// A shortest odd cycle, stored closed: `vertices[0] == vertices[len]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle {
    pub vertices: Vec<VertexId>,
}

impl OddCycle {
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edges(&self, graph: &WeightedGraph) -> Vec<EdgeId> {
        self.vertices
            .windows(2)
            .map(|w| {
                graph
                    .edge_between(w[0], w[1])
                    .expect("cycle follows graph edges")
            })
            .collect()
    }
}

/// Length and witness of a shortest odd cycle, or `None` when the graph is bipartite.
///
/// Runs a breadth-first search on the bipartite double cover from each vertex.
/// The witness starts at the lowest vertex lying on any shortest odd cycle and
/// is the lexicographically smallest such cycle from there.
pub fn shortest_odd_cycle(graph: &WeightedGraph) -> Option<OddCycle> {
    let mut best: Option<(usize, VertexId)> = None;
    for s in graph.vertices() {
        let dist = cover_distances(graph, s);
        if let Some(len) = dist[lift(s, 0)] {
            if best.is_none_or(|(b, _)| len < b) {
                best = Some((len, s));
            }
        }
    }
    let (len, s) = best?;

    let dist = cover_distances(graph, s);
    let mut vertices = vec![s];
    let mut current = lift(s, 0);
    while current != lift(s, 1) {
        let remaining = dist[current].unwrap();
        let side = current % 2;
        let (v, _) = graph
            .neighbors(current / 2)
            .iter()
            .copied()
            .find(|&(w, _)| dist[lift(w, 1 - side)] == Some(remaining - 1))
            .expect("a step along a shortest path exists");
        vertices.push(v);
        current = lift(v, 1 - side);
    }
    debug_assert_eq!(vertices.len(), len + 1);
    Some(OddCycle { vertices })
}

fn lift(v: VertexId, side: usize) -> usize {
    2 * v + side
}

// BFS distances in the double cover towards the odd copy of `s`.
fn cover_distances(graph: &WeightedGraph, s: VertexId) -> Vec<Option<usize>> {
    let mut dist = vec![None; 2 * graph.vertex_count()];
    let mut queue = VecDeque::new();
    dist[lift(s, 1)] = Some(0);
    queue.push_back(lift(s, 1));
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap();
        for &(w, _) in graph.neighbors(x / 2) {
            let y = lift(w, 1 - x % 2);
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}
