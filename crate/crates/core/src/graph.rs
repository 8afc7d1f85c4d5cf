//! Graph data model, validation, and face tracing from a rotation system.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A simple connected undirected graph with canonical edge indexing.
///
/// Vertices are `0..n`. Edges are stored as `(u, v)` with `u < v`, sorted
/// lexicographically; the edge id is the position in that list. All
/// downstream determinism rests on this ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adjacency: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    LoopEdge { u: u32 },
    DuplicateEdge { u: u32, v: u32 },
    VertexOutOfRange { v: u32, n: usize },
    Disconnected,
    TooSmall { n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::LoopEdge { u } => write!(f, "loop edge at vertex {u}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for n={n}")
            }
            GraphError::Disconnected => write!(f, "graph is not connected"),
            GraphError::TooSmall { n } => write!(f, "need at least 3 vertices, got {n}"),
        }
    }
}

impl Graph {
    /// Build and validate a graph. Edge pairs may arrive in any order and
    /// orientation; they are canonicalized here.
    pub fn new(n: usize, edge_pairs: &[(u32, u32)]) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::TooSmall { n });
        }
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(edge_pairs.len());
        for &(a, b) in edge_pairs {
            if a == b {
                return Err(GraphError::LoopEdge { u: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v as usize >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge {
                    u: w[0].0,
                    v: w[0].1,
                });
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adjacency[u as usize].push(i as u32);
            adjacency[v as usize].push(i as u32);
        }
        let g = Graph {
            n,
            edges,
            adjacency,
        };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Cycle-space dimension m − n + 1 (zero for trees).
    pub fn cycle_space_dim(&self) -> usize {
        self.edges.len() + 1 - self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge(&self, id: u32) -> (u32, u32) {
        self.edges[id as usize]
    }

    /// Edge ids incident to `v`, ascending.
    pub fn incident_edges(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn edge_id(&self, u: u32, v: u32) -> Option<u32> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok().map(|i| i as u32)
    }

    /// The endpoint of `edge` that is not `v`.
    pub fn other_endpoint(&self, edge: u32, v: u32) -> u32 {
        let (a, b) = self.edges[edge as usize];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Neighbors of `v` in ascending vertex order.
    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        let mut ns: Vec<u32> = self.adjacency[v as usize]
            .iter()
            .map(|&e| self.other_endpoint(e, v))
            .collect();
        ns.sort_unstable();
        ns
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0u32);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &e in self.incident_edges(v) {
                let w = self.other_endpoint(e, v);
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }
}

/// Per-vertex cyclic ordering of incident edge ids: a combinatorial
/// embedding. Embeddings are always inputs, never computed here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    orders: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RotationError {
    WrongVertexCount { got: usize, expected: usize },
    NotAPermutation { v: u32 },
}

impl fmt::Display for RotationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RotationError::WrongVertexCount { got, expected } => {
                write!(f, "rotation lists {got} vertices, graph has {expected}")
            }
            RotationError::NotAPermutation { v } => write!(
                f,
                "rotation at vertex {v} is not a permutation of its incident edges"
            ),
        }
    }
}

impl RotationSystem {
    pub fn new(g: &Graph, orders: Vec<Vec<u32>>) -> Result<RotationSystem, RotationError> {
        if orders.len() != g.vertex_count() {
            return Err(RotationError::WrongVertexCount {
                got: orders.len(),
                expected: g.vertex_count(),
            });
        }
        for (v, order) in orders.iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != g.incident_edges(v as u32) {
                return Err(RotationError::NotAPermutation { v: v as u32 });
            }
        }
        Ok(RotationSystem { orders })
    }

    pub fn order_at(&self, v: u32) -> &[u32] {
        &self.orders[v as usize]
    }

    /// Successor of `edge` in the cyclic order at `v`.
    fn next_at(&self, v: u32, edge: u32) -> u32 {
        let order = &self.orders[v as usize];
        let i = order.iter().position(|&e| e == edge).unwrap();
        order[(i + 1) % order.len()]
    }
}

/// One face of an embedding: a closed walk of (edge id, forward?) steps.
/// `forward` means the step traverses the edge from its smaller endpoint
/// to its larger one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<(u32, bool)>,
    /// Vertex at the tail of each boundary step.
    pub vertices: Vec<u32>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }
}

/// Result of tracing all faces of `(g, rot)`.
#[derive(Clone, Debug)]
pub struct FaceTrace {
    pub faces: Vec<Face>,
    /// Whether n − m + f = 2; holds iff the rotation is a sphere embedding.
    pub euler_ok: bool,
}

impl FaceTrace {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Multiset of face degrees as (degree, multiplicity), ascending.
    pub fn degree_multiset(&self) -> Vec<(usize, usize)> {
        let mut degs: Vec<usize> = self.faces.iter().map(Face::degree).collect();
        degs.sort_unstable();
        let mut out: Vec<(usize, usize)> = Vec::new();
        for d in degs {
            match out.last_mut() {
                Some((deg, mult)) if *deg == d => *mult += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }
}

/// Trace the faces of an embedded graph: after traversing the directed edge
/// (u, v), the walk leaves v along the successor of (v, u) in v's rotation.
/// Every directed edge is used exactly once over all faces.
pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> FaceTrace {
    let m = g.edge_count();
    // used[2e] = edge e traversed small→large, used[2e+1] = large→small
    let mut used = vec![false; 2 * m];
    let mut faces = Vec::new();
    for start in 0..2 * m {
        if used[start] {
            continue;
        }
        let start_edge = (start / 2) as u32;
        let (lo, hi) = g.edge(start_edge);
        let (mut tail, mut head) = if start % 2 == 0 { (lo, hi) } else { (hi, lo) };
        let mut cur = start_edge;
        let mut boundary = Vec::new();
        let mut vertices = Vec::new();
        loop {
            let forward = tail < head;
            let dart = 2 * cur as usize + usize::from(!forward);
            debug_assert!(!used[dart]);
            used[dart] = true;
            boundary.push((cur, forward));
            vertices.push(tail);
            let next = rot.next_at(head, cur);
            let next_head = g.other_endpoint(next, head);
            tail = head;
            head = next_head;
            cur = next;
            if 2 * cur as usize + usize::from(!(tail < head)) == start {
                break;
            }
        }
        faces.push(Face { boundary, vertices });
    }
    let f = faces.len();
    let euler_ok = g.vertex_count() + f == m + 2;
    FaceTrace { faces, euler_ok }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn canonical_edge_ids_ignore_input_order() {
        let a = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let b = Graph::new(3, &[(2, 1), (2, 0), (1, 0)]).unwrap();
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn rejects_invalid_graphs() {
        assert!(matches!(
            Graph::new(3, &[(0, 0), (0, 1), (1, 2)]),
            Err(GraphError::LoopEdge { u: 0 })
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0), (1, 2)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            Graph::new(2, &[(0, 1)]),
            Err(GraphError::TooSmall { n: 2 })
        ));
        assert!(matches!(
            Graph::new(4, &[(0, 1), (2, 3)]),
            Err(GraphError::Disconnected)
        ));
    }

    #[test]
    fn path_graph_is_accepted_with_dim_zero() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.cycle_space_dim(), 0);
    }

    #[test]
    fn square_rotation_gives_two_quadrilateral_faces() {
        let g = square();
        // each vertex has exactly 2 incident edges, any order is planar
        let orders = (0..4).map(|v| g.incident_edges(v).to_vec()).collect();
        let rot = RotationSystem::new(&g, orders).unwrap();
        let trace = trace_faces(&g, &rot);
        assert_eq!(trace.face_count(), 2);
        assert!(trace.faces.iter().all(|f| f.degree() == 4));
        assert!(trace.euler_ok);
        assert_eq!(
            trace.faces.iter().map(Face::degree).sum::<usize>(),
            2 * g.edge_count()
        );
    }

    #[test]
    fn k4_planar_rotation_gives_four_triangles() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        // a planar rotation of K4; edge ids:
        // 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3)
        let orders = alloc::vec![
            alloc::vec![0, 2, 1],
            alloc::vec![0, 3, 4],
            alloc::vec![3, 1, 5],
            alloc::vec![5, 2, 4],
        ];
        let rot = RotationSystem::new(&g, orders).unwrap();
        let trace = trace_faces(&g, &rot);
        assert_eq!(trace.face_count(), 4);
        assert!(trace.euler_ok);
        assert_eq!(trace.degree_multiset(), alloc::vec![(3, 4)]);
    }

    #[test]
    fn rotation_must_be_permutation() {
        let g = square();
        let mut orders: alloc::vec::Vec<alloc::vec::Vec<u32>> =
            (0..4).map(|v| g.incident_edges(v).to_vec()).collect();
        orders[0][0] = orders[0][1];
        assert!(matches!(
            RotationSystem::new(&g, orders),
            Err(RotationError::NotAPermutation { v: 0 })
        ));
    }
}
