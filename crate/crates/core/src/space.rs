//! GF(2) cycle-space algebra: elementary cycles, fundamental bases,
//! representation in a basis, and basis transformation.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::gf2::{EdgeVector, Eliminator};
use crate::graph::{Face, Graph};

/// An elementary cycle: every touched vertex has degree exactly 2 and the
/// support is connected. `vertices` is the closed walk in canonical order
/// (starting at the smallest touched vertex, stepping toward its
/// smaller-labeled neighbor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    vector: EdgeVector,
    vertices: Vec<u32>,
}

impl Cycle {
    pub fn vector(&self) -> &EdgeVector {
        &self.vector
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Edge count; equals `order()` for an elementary cycle.
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.vertices.contains(&v)
    }

    /// Vertices shared with another cycle.
    pub fn shared_vertices(&self, other: &Cycle) -> usize {
        self.vertices
            .iter()
            .filter(|v| other.vertices.contains(v))
            .count()
    }

    pub fn shared_edges(&self, other: &Cycle) -> usize {
        self.vector.intersection_weight(&other.vector)
    }
}

/// Decide whether `v` is the edge vector of an elementary cycle of `g` and
/// recover the cycle in canonical vertex order when it is. Total function:
/// the zero vector, figure-eights, and disconnected supports all yield
/// `None`.
pub fn is_elementary_cycle(v: &EdgeVector, g: &Graph) -> Option<Cycle> {
    if v.is_zero() {
        return None;
    }
    let n = g.vertex_count();
    let mut degree = vec![0u32; n];
    for e in v.support() {
        let (a, b) = g.edge(e as u32);
        degree[a as usize] += 1;
        degree[b as usize] += 1;
    }
    if degree.iter().any(|&d| d != 0 && d != 2) {
        return None;
    }
    let weight = v.weight();
    let start = degree.iter().position(|&d| d == 2)? as u32;
    // walk from the smallest touched vertex toward its smaller neighbor
    let mut incident: Vec<u32> = g
        .incident_edges(start)
        .iter()
        .copied()
        .filter(|&e| v.get(e as usize))
        .collect();
    incident.sort_by_key(|&e| g.other_endpoint(e, start));
    let mut vertices = vec![start];
    let mut prev_edge = incident[0];
    let mut cur = g.other_endpoint(prev_edge, start);
    while cur != start {
        vertices.push(cur);
        let next_edge = g
            .incident_edges(cur)
            .iter()
            .copied()
            .find(|&e| v.get(e as usize) && e != prev_edge)
            .expect("degree-2 vertex has a second cycle edge");
        cur = g.other_endpoint(next_edge, cur);
        prev_edge = next_edge;
    }
    // a disconnected support closes the walk before covering every edge
    if vertices.len() != weight {
        return None;
    }
    Some(Cycle {
        vector: v.clone(),
        vertices,
    })
}

/// An ordered set of `m − n + 1` independent elementary cycles.
#[derive(Clone, Debug)]
pub struct CycleBasis {
    cycles: Vec<Cycle>,
    dim: usize,
    edge_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisError {
    WrongCount { got: usize, expected: usize },
    RankDeficient { rank: usize, expected: usize },
    NotElementary { index: usize },
    SameIndex,
    IndexOutOfRange { index: usize, dim: usize },
    SumNotElementary,
    NotInSpan,
    FaceNotElementary { face: usize },
}

impl fmt::Display for BasisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisError::WrongCount { got, expected } => {
                write!(f, "basis has {got} cycles, dimension is {expected}")
            }
            BasisError::RankDeficient { rank, expected } => {
                write!(f, "basis rank {rank} < dimension {expected}")
            }
            BasisError::NotElementary { index } => {
                write!(f, "basis element {index} is not an elementary cycle")
            }
            BasisError::SameIndex => write!(f, "transform indices must differ"),
            BasisError::IndexOutOfRange { index, dim } => {
                write!(f, "index {index} out of range for dimension {dim}")
            }
            BasisError::SumNotElementary => {
                write!(f, "refused: the pair sum is not an elementary cycle")
            }
            BasisError::NotInSpan => write!(f, "target vector is outside the basis span"),
            BasisError::FaceNotElementary { face } => {
                write!(f, "face {face} boundary is not an elementary cycle")
            }
        }
    }
}

impl CycleBasis {
    pub fn new(g: &Graph, cycles: Vec<Cycle>) -> Result<CycleBasis, BasisError> {
        let dim = g.cycle_space_dim();
        if cycles.len() != dim {
            return Err(BasisError::WrongCount {
                got: cycles.len(),
                expected: dim,
            });
        }
        for (i, c) in cycles.iter().enumerate() {
            if is_elementary_cycle(c.vector(), g).is_none() {
                return Err(BasisError::NotElementary { index: i });
            }
        }
        let vectors: Vec<EdgeVector> = cycles.iter().map(|c| c.vector().clone()).collect();
        let rank = crate::gf2::rank(&vectors, g.edge_count());
        if rank != dim {
            return Err(BasisError::RankDeficient {
                rank,
                expected: dim,
            });
        }
        Ok(CycleBasis {
            cycles,
            dim,
            edge_count: g.edge_count(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn cycle(&self, i: usize) -> &Cycle {
        &self.cycles[i]
    }

    /// Multiset of member sizes as (size, multiplicity), ascending.
    pub fn size_multiset(&self) -> Vec<(usize, usize)> {
        let mut sizes: Vec<usize> = self.cycles.iter().map(Cycle::size).collect();
        sizes.sort_unstable();
        let mut out: Vec<(usize, usize)> = Vec::new();
        for s in sizes {
            match out.last_mut() {
                Some((sz, mult)) if *sz == s => *mult += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    /// GF(2) sum of the member cycles at `indices`.
    pub fn subset_sum(&self, indices: &[usize]) -> EdgeVector {
        let mut acc = EdgeVector::zero(self.edge_count);
        for &i in indices {
            acc.xor_assign(self.cycles[i].vector());
        }
        acc
    }
}

/// The fundamental basis from the BFS spanning tree rooted at vertex 0
/// (neighbors explored in ascending order). Each non-tree edge, taken in
/// ascending edge id, contributes the cycle it closes through the tree.
/// Also returns the tree edge ids.
pub fn fundamental_basis(g: &Graph) -> (CycleBasis, Vec<u32>) {
    let n = g.vertex_count();
    let mut parent_edge: Vec<Option<u32>> = vec![None; n];
    let mut visited = vec![false; n];
    let mut tree_edge = vec![false; g.edge_count()];
    let mut queue = VecDeque::new();
    visited[0] = true;
    queue.push_back(0u32);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if !visited[w as usize] {
                visited[w as usize] = true;
                let e = g.edge_id(v, w).unwrap();
                parent_edge[w as usize] = Some(e);
                tree_edge[e as usize] = true;
                queue.push_back(w);
            }
        }
    }
    let mut tree_ids: Vec<u32> = (0..g.edge_count() as u32)
        .filter(|&e| tree_edge[e as usize])
        .collect();
    tree_ids.sort_unstable();

    let mut cycles = Vec::new();
    for e in 0..g.edge_count() as u32 {
        if tree_edge[e as usize] {
            continue;
        }
        let (u, v) = g.edge(e);
        let mut vector = EdgeVector::zero(g.edge_count());
        vector.set(e as usize, true);
        // xor the two root paths; shared prefix edges cancel
        for endpoint in [u, v] {
            let mut x = endpoint;
            while let Some(pe) = parent_edge[x as usize] {
                let i = pe as usize;
                vector.set(i, !vector.get(i));
                x = g.other_endpoint(pe, x);
            }
        }
        let cycle =
            is_elementary_cycle(&vector, g).expect("a fundamental cycle is always elementary");
        cycles.push(cycle);
    }
    let basis = CycleBasis::new(g, cycles).expect("fundamental cycles form a basis");
    (basis, tree_ids)
}

/// The unique subset of basis indices whose GF(2) sum equals `target`.
pub fn represent_in_basis(
    target: &EdgeVector,
    basis: &CycleBasis,
) -> Result<Vec<usize>, BasisError> {
    let mut elim = Eliminator::new(basis.edge_count, basis.dim.max(1));
    for c in basis.cycles() {
        elim.insert(c.vector());
    }
    let combo = elim.represent(target).ok_or(BasisError::NotInSpan)?;
    Ok(combo.support().collect())
}

/// Replace basis element `i` by `basis[i] ⊕ basis[j]`. Refused unless the
/// sum is again an elementary cycle; on refusal the basis is unchanged.
pub fn basis_transform(
    basis: &CycleBasis,
    g: &Graph,
    i: usize,
    j: usize,
) -> Result<CycleBasis, BasisError> {
    let dim = basis.dim();
    for idx in [i, j] {
        if idx >= dim {
            return Err(BasisError::IndexOutOfRange { index: idx, dim });
        }
    }
    if i == j {
        return Err(BasisError::SameIndex);
    }
    let sum = basis
        .cycle(i)
        .vector()
        .sum(basis.cycle(j).vector())
        .unwrap();
    let replacement = is_elementary_cycle(&sum, g).ok_or(BasisError::SumNotElementary)?;
    let mut cycles = basis.cycles().to_vec();
    cycles[i] = replacement;
    CycleBasis::new(g, cycles)
}

/// Build a basis from the faces of a sphere embedding by dropping one face
/// (the one of largest degree, ties broken toward the last). Every kept
/// face boundary must be an elementary cycle.
pub fn face_basis(g: &Graph, faces: &[Face]) -> Result<CycleBasis, BasisError> {
    let dim = g.cycle_space_dim();
    if faces.len() != dim + 1 {
        return Err(BasisError::WrongCount {
            got: faces.len().saturating_sub(1),
            expected: dim,
        });
    }
    let drop = faces
        .iter()
        .enumerate()
        .max_by_key(|(i, f)| (f.degree(), *i))
        .map(|(i, _)| i)
        .unwrap();
    let mut cycles = Vec::with_capacity(dim);
    for (i, face) in faces.iter().enumerate() {
        if i == drop {
            continue;
        }
        let ids: Vec<u32> = face.boundary.iter().map(|&(e, _)| e).collect();
        let vector = EdgeVector::from_edge_ids(g.edge_count(), &ids);
        let cycle =
            is_elementary_cycle(&vector, g).ok_or(BasisError::FaceNotElementary { face: i })?;
        cycles.push(cycle);
    }
    CycleBasis::new(g, cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::parse_edge_list;

    fn chorded_square() -> Graph {
        parse_edge_list("0 1\n1 2\n2 3\n0 3\n0 2").unwrap()
    }

    fn k4() -> Graph {
        parse_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap()
    }

    fn prism() -> Graph {
        parse_edge_list("0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n0 3\n1 4\n2 5").unwrap()
    }

    fn vec_of(g: &Graph, pairs: &[(u32, u32)]) -> EdgeVector {
        let ids: Vec<u32> = pairs
            .iter()
            .map(|&(u, v)| g.edge_id(u, v).unwrap())
            .collect();
        EdgeVector::from_edge_ids(g.edge_count(), &ids)
    }

    #[test]
    fn sum_of_two_triangles_is_the_outer_square() {
        let g = chorded_square();
        let t1 = vec_of(&g, &[(0, 1), (1, 2), (0, 2)]);
        let t2 = vec_of(&g, &[(0, 2), (2, 3), (0, 3)]);
        let sum = t1.sum(&t2).unwrap();
        let square = vec_of(&g, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(sum, square);
        let c = is_elementary_cycle(&sum, &g).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn k24_figure_eight_is_not_elementary() {
        // parts {0,1} and {2,3,4,5}; two 4-cycles share only vertices 0,1
        let g = parse_edge_list("0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5").unwrap();
        let a = vec_of(&g, &[(0, 2), (2, 1), (1, 3), (3, 0)]);
        let b = vec_of(&g, &[(0, 4), (4, 1), (1, 5), (5, 0)]);
        let sum = a.sum(&b).unwrap();
        assert_eq!(sum.weight(), 8);
        assert!(is_elementary_cycle(&sum, &g).is_none());
    }

    #[test]
    fn zero_vector_is_not_a_cycle() {
        let g = k4();
        assert!(is_elementary_cycle(&EdgeVector::zero(6), &g).is_none());
    }

    #[test]
    fn triangle_in_k4_is_elementary() {
        let g = k4();
        let t = vec_of(&g, &[(0, 1), (1, 2), (0, 2)]);
        let c = is_elementary_cycle(&t, &g).unwrap();
        assert_eq!(c.order(), 3);
        assert_eq!(c.vertices(), &[0, 1, 2]);
    }

    #[test]
    fn disjoint_triangles_in_prism_are_not_elementary() {
        let g = prism();
        let both = vec_of(&g, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(is_elementary_cycle(&both, &g).is_none());
    }

    #[test]
    fn fundamental_basis_dimensions() {
        let tri = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(fundamental_basis(&tri).0.dim(), 1);
        assert_eq!(fundamental_basis(&k4()).0.dim(), 3);
        let path = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(fundamental_basis(&path).0.dim(), 0);
    }

    #[test]
    fn fundamental_basis_nontree_edges_unique() {
        let g = prism();
        let (basis, tree) = fundamental_basis(&g);
        assert_eq!(tree.len(), g.vertex_count() - 1);
        for e in 0..g.edge_count() {
            let appearances = basis.cycles().iter().filter(|c| c.vector().get(e)).count();
            if !tree.contains(&(e as u32)) {
                // each non-tree edge closes exactly its own cycle
                assert_eq!(appearances, 1, "edge {e}");
            }
        }
    }

    #[test]
    fn represent_basic_cases() {
        let g = chorded_square();
        let (basis, _) = fundamental_basis(&g);
        let first = basis.cycle(0).vector().clone();
        assert_eq!(represent_in_basis(&first, &basis).unwrap(), &[0]);
        let zero = EdgeVector::zero(g.edge_count());
        assert!(represent_in_basis(&zero, &basis).unwrap().is_empty());
        let square = vec_of(&g, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(represent_in_basis(&square, &basis).unwrap(), &[0, 1]);
    }

    #[test]
    fn represent_rejects_out_of_span() {
        let g = chorded_square();
        let (basis, _) = fundamental_basis(&g);
        let single_edge = vec_of(&g, &[(0, 1)]);
        assert_eq!(
            represent_in_basis(&single_edge, &basis),
            Err(BasisError::NotInSpan)
        );
    }

    #[test]
    fn transform_chorded_square() {
        let g = chorded_square();
        let (basis, _) = fundamental_basis(&g);
        let t = basis_transform(&basis, &g, 0, 1).unwrap();
        assert_eq!(t.dim(), 2);
        assert!(matches!(
            basis_transform(&basis, &g, 1, 1),
            Err(BasisError::SameIndex)
        ));
    }

    #[test]
    fn transform_refuses_figure_eight() {
        // K_{2,4}: fundamental basis cycles all pass through vertices 0,1;
        // look for a pair whose sum is a figure-eight
        let g = parse_edge_list("0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5").unwrap();
        let (basis, _) = fundamental_basis(&g);
        // fundamental pairs all share two tree edges, so transform once to
        // obtain a 4-cycle avoiding vertex 2, then the figure-eight shows up
        let t = basis_transform(&basis, &g, 0, 1).unwrap();
        let mut refused = false;
        for i in 0..t.dim() {
            for j in 0..t.dim() {
                if i != j
                    && matches!(
                        basis_transform(&t, &g, i, j),
                        Err(BasisError::SumNotElementary)
                    )
                {
                    refused = true;
                }
            }
        }
        assert!(refused, "expected at least one refused figure-eight sum");
    }
}
