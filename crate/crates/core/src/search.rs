//! Hamilton plane search over a cycle basis, joint-pair classification,
//! equation counterexample hunting, and the brute-force Hamiltonicity
//! oracle used as ground truth.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::gf2::EdgeVector;
use crate::graph::Graph;
use crate::grinberg::{multiset_from_sizes, solve_inside, SizeSolution};
use crate::space::{is_elementary_cycle, Cycle, CycleBasis};

/// How a pair of joint cycles intersects. `Ve` and `V0` are the two
/// structures relevant to the Grinberg condition; the rest cover every
/// other pattern a basis can produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PairClass {
    /// ≥ 2 shared vertices and ≥ 1 shared edge.
    Ve,
    /// Exactly 2 shared vertices, no shared edge.
    V0,
    /// Exactly 1 shared vertex.
    SingleVertex,
    /// No shared vertex.
    Disjoint,
    /// ≥ 3 shared vertices, no shared edge.
    Other,
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PairClass::Ve => "VE",
            PairClass::V0 => "V0",
            PairClass::SingleVertex => "SINGLE_VERTEX",
            PairClass::Disjoint => "DISJOINT",
            PairClass::Other => "OTHER",
        };
        f.write_str(s)
    }
}

/// Classification of one unordered pair, with the raw intersection counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairRelation {
    pub class: PairClass,
    pub shared_vertices: usize,
    pub shared_edges: usize,
}

pub fn classify_pair(a: &Cycle, b: &Cycle) -> PairRelation {
    let sv = a.shared_vertices(b);
    let se = a.shared_edges(b);
    let class = match (sv, se) {
        (0, _) => PairClass::Disjoint,
        (1, _) => PairClass::SingleVertex,
        (_, e) if e >= 1 => PairClass::Ve,
        (2, 0) => PairClass::V0,
        _ => PairClass::Other,
    };
    PairRelation {
        class,
        shared_vertices: sv,
        shared_edges: se,
    }
}

/// All unordered pairs of a cycle list, classified, with summary counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairClassification {
    /// (i, j, relation) for every i < j.
    pub pairs: Vec<(usize, usize, PairRelation)>,
}

impl PairClassification {
    pub fn count(&self, class: PairClass) -> usize {
        self.pairs
            .iter()
            .filter(|(_, _, r)| r.class == class)
            .count()
    }

    /// True when every joint pair is VE or V0.
    pub fn only_two_types(&self) -> bool {
        self.pairs
            .iter()
            .all(|(_, _, r)| matches!(r.class, PairClass::Ve | PairClass::V0 | PairClass::Disjoint))
    }

    pub fn all_ve(&self) -> bool {
        self.pairs.iter().all(|(_, _, r)| r.class == PairClass::Ve)
    }
}

pub fn classify_pairs(members: &[Cycle]) -> PairClassification {
    let mut pairs = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            pairs.push((i, j, classify_pair(&members[i], &members[j])));
        }
    }
    PairClassification { pairs }
}

/// Limits for subset searches. `expired` is an externally supplied
/// deadline probe so the core stays clock-free.
pub struct Budget<'a> {
    pub max_subsets: u64,
    pub expired: Option<&'a dyn Fn() -> bool>,
}

impl<'a> Budget<'a> {
    pub const DEFAULT_MAX_SUBSETS: u64 = 1 << 20;

    pub fn subsets(max_subsets: u64) -> Self {
        Budget {
            max_subsets,
            expired: None,
        }
    }

    fn is_expired(&self) -> bool {
        self.expired.map(|f| f()).unwrap_or(false)
    }
}

impl Default for Budget<'_> {
    fn default() -> Self {
        Budget::subsets(Self::DEFAULT_MAX_SUBSETS)
    }
}

/// A basis-cycle subset whose GF(2) sum is a Hamiltonian cycle.
#[derive(Clone, Debug)]
pub struct HamiltonPlane {
    /// Indices into the basis, ascending.
    pub members: Vec<usize>,
    pub sum: Cycle,
    pub pair_classes: PairClassification,
    /// Σ (size_i − 2) = n − 2 over the members.
    pub grinberg_identity: bool,
}

#[derive(Clone, Debug)]
pub struct PlaneSearch {
    /// Planes in lexicographic member order.
    pub planes: Vec<HamiltonPlane>,
    pub subsets_examined: u64,
    /// True when the budget cut the search short; results are then a
    /// subset of the truth, never wrong.
    pub truncated: bool,
}

const FALLBACK_DIM_LIMIT: usize = 20;

fn grinberg_identity(members: &[usize], basis: &CycleBasis, n: usize) -> bool {
    let sum: i64 = members
        .iter()
        .map(|&i| basis.cycle(i).size() as i64 - 2)
        .sum();
    sum == n as i64 - 2
}

/// Stream every subset whose member-size multiset realizes one of the
/// `solutions`. Subsets arrive in (solution, lexicographic combination)
/// order. The callback returns `false` to stop (budget exhausted).
fn for_each_realizing_subset(
    basis: &CycleBasis,
    solutions: &[SizeSolution],
    mut f: impl FnMut(&[usize]) -> bool,
) -> bool {
    // group basis indices by cycle size
    let mut by_size: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, c) in basis.cycles().iter().enumerate() {
        match by_size.iter_mut().find(|(s, _)| *s == c.size()) {
            Some((_, v)) => v.push(i),
            None => by_size.push((c.size(), vec![i])),
        }
    }
    by_size.sort_by_key(|(s, _)| *s);

    fn combos(
        groups: &[(Vec<usize>, usize)],
        k: usize,
        acc: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if k == groups.len() {
            let mut members = acc.clone();
            members.sort_unstable();
            return f(&members);
        }
        let (pool, take) = &groups[k];
        let take = *take;
        fn choose(
            pool: &[usize],
            start: usize,
            take: usize,
            groups: &[(Vec<usize>, usize)],
            k: usize,
            acc: &mut Vec<usize>,
            f: &mut impl FnMut(&[usize]) -> bool,
        ) -> bool {
            if take == 0 {
                return combos(groups, k + 1, acc, f);
            }
            for i in start..=pool.len().saturating_sub(take) {
                acc.push(pool[i]);
                let keep_going = choose(pool, i + 1, take - 1, groups, k, acc, f);
                acc.pop();
                if !keep_going {
                    return false;
                }
            }
            true
        }
        choose(pool, 0, take, groups, k, acc, f)
    }

    for sol in solutions {
        let groups: Vec<(Vec<usize>, usize)> = by_size
            .iter()
            .map(|(s, idxs)| (idxs.clone(), sol.counts.get(s).copied().unwrap_or(0)))
            .collect();
        // skip solutions that ask for more cycles of a size than exist
        if groups.iter().any(|(pool, take)| *take > pool.len()) {
            continue;
        }
        let mut acc = Vec::new();
        if !combos(&groups, 0, &mut acc, &mut f) {
            return false;
        }
    }
    true
}

/// Check a single subset and build the plane when its sum is a
/// Hamiltonian cycle. Pure; callers may fan subsets out to workers as
/// long as results are merged back into lexicographic order.
pub fn plane_from_subset(
    members: &[usize],
    basis: &CycleBasis,
    g: &Graph,
) -> Option<HamiltonPlane> {
    if members.is_empty() {
        return None;
    }
    let sum = basis.subset_sum(members);
    let cycle = is_elementary_cycle(&sum, g)?;
    if cycle.order() != g.vertex_count() {
        return None;
    }
    let cycles: Vec<Cycle> = members.iter().map(|&i| basis.cycle(i).clone()).collect();
    Some(HamiltonPlane {
        members: members.to_vec(),
        sum: cycle,
        pair_classes: classify_pairs(&cycles),
        grinberg_identity: grinberg_identity(members, basis, g.vertex_count()),
    })
}

/// Search `basis` for Hamilton planes.
///
/// Candidates come from two stages: subsets realizing a solution of the
/// size equation (a necessary condition for edge-chained planes), and an
/// unfiltered fallback over all subsets when the dimension is at most 20,
/// so planes with other pair structures are not missed. Results are
/// deduplicated and sorted lexicographically by member set; the report
/// says whether the budget truncated the search.
pub fn search_hamilton_plane(basis: &CycleBasis, g: &Graph, budget: &Budget) -> PlaneSearch {
    let n = g.vertex_count();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut examined: u64 = 0;
    let mut truncated = false;

    {
        let solutions = solve_inside(&basis_sizes(basis), n);
        let complete = for_each_realizing_subset(basis, &solutions, |members| {
            examined += 1;
            if examined > budget.max_subsets
                || (examined.is_multiple_of(1024) && budget.is_expired())
            {
                return false;
            }
            if plane_from_subset(members, basis, g).is_some() {
                found.insert(members.to_vec());
            }
            true
        });
        if !complete {
            truncated = true;
        }
    }

    if !truncated && basis.dim() <= FALLBACK_DIM_LIMIT {
        'outer: for mask in 1u64..(1u64 << basis.dim()) {
            examined += 1;
            if examined > budget.max_subsets
                || (examined.is_multiple_of(1024) && budget.is_expired())
            {
                truncated = true;
                break 'outer;
            }
            let members: Vec<usize> = (0..basis.dim()).filter(|&i| mask >> i & 1 == 1).collect();
            if found.contains(&members) {
                continue;
            }
            if plane_from_subset(&members, basis, g).is_some() {
                found.insert(members);
            }
        }
    }

    let planes = found
        .into_iter()
        .map(|members| plane_from_subset(&members, basis, g).expect("verified above"))
        .collect();
    PlaneSearch {
        planes,
        subsets_examined: examined,
        truncated,
    }
}

fn basis_sizes(basis: &CycleBasis) -> crate::grinberg::SizeMultiset {
    let sizes: Vec<usize> = basis.cycles().iter().map(Cycle::size).collect();
    multiset_from_sizes(&sizes)
}

/// Why a size-equation-satisfying, spanning subset fails to be a plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotHamiltonianReason {
    /// The GF(2) sum is not an elementary cycle (zero, figure-eight, or
    /// disconnected support).
    SumNotElementary,
    /// The sum is an elementary cycle but misses vertices.
    SumOrderTooSmall { order: usize },
}

impl fmt::Display for NotHamiltonianReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotHamiltonianReason::SumNotElementary => f.write_str("sum is not an elementary cycle"),
            NotHamiltonianReason::SumOrderTooSmall { order } => {
                write!(f, "sum is an elementary cycle of order {order} < n")
            }
        }
    }
}

/// A subset that satisfies the size equation and spans every vertex, yet
/// does not sum to a Hamiltonian cycle.
#[derive(Clone, Debug)]
pub struct CounterexampleReport {
    pub members: Vec<usize>,
    /// The bounded solution the member sizes realize.
    pub realizes: SizeSolution,
    pub reason: NotHamiltonianReason,
    pub pair_classes: PairClassification,
}

#[derive(Clone, Debug)]
pub struct CounterexampleSearch {
    pub reports: Vec<CounterexampleReport>,
    pub subsets_examined: u64,
    pub truncated: bool,
}

/// Hunt subsets that witness the non-sufficiency of the size equation:
/// they realize a solution and span all vertices, but their sum is not a
/// Hamiltonian cycle.
pub fn find_equation_counterexample(
    basis: &CycleBasis,
    g: &Graph,
    budget: &Budget,
) -> CounterexampleSearch {
    let n = g.vertex_count();
    let solutions = solve_inside(&basis_sizes(basis), n);
    let mut reports = Vec::new();
    let mut examined: u64 = 0;
    let mut truncated = false;
    let complete = for_each_realizing_subset(basis, &solutions, |members| {
        examined += 1;
        if examined > budget.max_subsets || (examined.is_multiple_of(1024) && budget.is_expired()) {
            return false;
        }
        let mut covered = vec![false; n];
        for &i in members {
            for &v in basis.cycle(i).vertices() {
                covered[v as usize] = true;
            }
        }
        if !covered.iter().all(|&c| c) {
            return true;
        }
        let sum = basis.subset_sum(members);
        let reason = match is_elementary_cycle(&sum, g) {
            None => NotHamiltonianReason::SumNotElementary,
            Some(c) if c.order() < n => NotHamiltonianReason::SumOrderTooSmall { order: c.order() },
            Some(_) => return true, // a genuine plane, not a counterexample
        };
        let sizes: Vec<usize> = members.iter().map(|&i| basis.cycle(i).size()).collect();
        let mut counts = basis_sizes(basis);
        for v in counts.values_mut() {
            *v = 0;
        }
        for s in sizes {
            *counts.get_mut(&s).unwrap() += 1;
        }
        let cycles: Vec<Cycle> = members.iter().map(|&i| basis.cycle(i).clone()).collect();
        reports.push(CounterexampleReport {
            members: members.to_vec(),
            realizes: SizeSolution { counts },
            reason,
            pair_classes: classify_pairs(&cycles),
        });
        true
    });
    if !complete {
        truncated = true;
    }
    reports.sort_by(|a, b| a.members.cmp(&b.members));
    CounterexampleSearch {
        reports,
        subsets_examined: examined,
        truncated,
    }
}

/// Three-valued oracle result. `Unknown` only ever means the budget ran
/// out (or the graph exceeds the 64-vertex bitmask limit); it is never a
/// silent guess.
#[derive(Clone, Debug)]
pub enum OracleVerdict {
    Hamiltonian(Cycle),
    NonHamiltonian,
    Unknown,
}

impl OracleVerdict {
    pub fn is_hamiltonian(&self) -> Option<bool> {
        match self {
            OracleVerdict::Hamiltonian(_) => Some(true),
            OracleVerdict::NonHamiltonian => Some(false),
            OracleVerdict::Unknown => None,
        }
    }
}

/// Exhaustive backtracking Hamiltonicity test with degree and
/// connectivity pruning. Intended for n ≤ 50 or so; `budget.max_subsets`
/// bounds the number of search-tree nodes.
pub fn hamiltonian_oracle(g: &Graph, budget: &Budget) -> OracleVerdict {
    let n = g.vertex_count();
    if n > 64 {
        return OracleVerdict::Unknown;
    }
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let adj: Vec<u64> = (0..n as u32)
        .map(|v| g.neighbors(v).into_iter().fold(0u64, |acc, w| acc | 1 << w))
        .collect();

    struct Ctx<'a, 'b> {
        adj: &'a [u64],
        full: u64,
        budget: &'a Budget<'b>,
        nodes: u64,
        out_of_budget: bool,
    }

    impl Ctx<'_, '_> {
        fn prune(&self, cur: usize, visited: u64) -> bool {
            let remaining = self.full & !visited;
            let usable = remaining | (1 << cur) | 1; // start is vertex 0
            let mut w_bits = remaining;
            while w_bits != 0 {
                let w = w_bits.trailing_zeros() as usize;
                w_bits &= w_bits - 1;
                // every unvisited vertex still needs an entry and an exit
                if (self.adj[w] & usable).count_ones() < 2 {
                    return true;
                }
            }
            // the unvisited region plus both path ends must be connected
            if remaining != 0 {
                let mut seen = 1u64 << cur;
                let mut frontier = seen;
                while frontier != 0 {
                    let mut next = 0u64;
                    let mut bits = frontier;
                    while bits != 0 {
                        let v = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        next |= self.adj[v] & usable & !seen;
                    }
                    seen |= next;
                    frontier = next;
                }
                if remaining & !seen != 0 {
                    return true;
                }
            }
            false
        }

        fn extend(&mut self, cur: usize, visited: u64, path: &mut Vec<u32>) -> Option<Vec<u32>> {
            self.nodes += 1;
            if self.nodes > self.budget.max_subsets
                || (self.nodes.is_multiple_of(4096) && self.budget.is_expired())
            {
                self.out_of_budget = true;
                return None;
            }
            if visited == self.full {
                if self.adj[cur] & 1 == 1 {
                    return Some(path.clone());
                }
                return None;
            }
            if self.prune(cur, visited) {
                return None;
            }
            let mut cand = self.adj[cur] & !visited;
            while cand != 0 {
                let w = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                path.push(w as u32);
                let hit = self.extend(w, visited | 1 << w, path);
                path.pop();
                if hit.is_some() || self.out_of_budget {
                    return hit;
                }
            }
            None
        }
    }

    let mut ctx = Ctx {
        adj: &adj,
        full,
        budget,
        nodes: 0,
        out_of_budget: false,
    };
    let mut path = vec![0u32];
    match ctx.extend(0, 1, &mut path) {
        Some(path) => {
            let ids: Vec<u32> = path
                .iter()
                .zip(path.iter().cycle().skip(1))
                .map(|(&a, &b)| g.edge_id(a, b).unwrap())
                .collect();
            let v = EdgeVector::from_edge_ids(g.edge_count(), &ids);
            let cycle = is_elementary_cycle(&v, g).expect("oracle path is a cycle");
            OracleVerdict::Hamiltonian(cycle)
        }
        None if ctx.out_of_budget => OracleVerdict::Unknown,
        None => OracleVerdict::NonHamiltonian,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionTooLarge {
    pub dim: usize,
    pub limit: usize,
}

impl fmt::Display for DimensionTooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cycle-space dimension {} exceeds enumeration limit {}",
            self.dim, self.limit
        )
    }
}

pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

/// Exhaustive elementary-cycle census: walk all nonzero GF(2) combinations
/// of the basis and keep those that are elementary cycles. Refused beyond
/// `dim_limit` (2^dim sums).
pub fn enumerate_all_cycles(
    g: &Graph,
    basis: &CycleBasis,
    dim_limit: usize,
) -> Result<Vec<Cycle>, DimensionTooLarge> {
    let dim = basis.dim();
    if dim > dim_limit {
        return Err(DimensionTooLarge {
            dim,
            limit: dim_limit,
        });
    }
    let mut out = Vec::new();
    let mut acc = EdgeVector::zero(g.edge_count());
    // Gray-code walk: one basis xor per step
    for k in 1u64..(1u64 << dim) {
        let flip = k.trailing_zeros() as usize;
        acc.xor_assign(basis.cycle(flip).vector());
        if let Some(c) = is_elementary_cycle(&acc, g) {
            out.push(c);
        }
    }
    out.sort_by(|a, b| (a.size(), a.vertices()).cmp(&(b.size(), b.vertices())));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::parse_edge_list;
    use crate::space::fundamental_basis;

    fn chorded_square() -> Graph {
        parse_edge_list("0 1\n1 2\n2 3\n0 3\n0 2").unwrap()
    }

    fn k24() -> Graph {
        parse_edge_list("0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5").unwrap()
    }

    fn petersen() -> Graph {
        parse_edge_list("0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5")
            .unwrap()
    }

    fn quad_basis(g: &Graph) -> CycleBasis {
        // the three inner faces of the planar K_{2,4} embedding
        let cycles = [[2u32, 3], [3, 4], [4, 5]]
            .iter()
            .map(|&[a, b]| {
                let ids = [
                    g.edge_id(0, a).unwrap(),
                    g.edge_id(1, a).unwrap(),
                    g.edge_id(0, b).unwrap(),
                    g.edge_id(1, b).unwrap(),
                ];
                is_elementary_cycle(&EdgeVector::from_edge_ids(g.edge_count(), &ids), g).unwrap()
            })
            .collect();
        CycleBasis::new(g, cycles).unwrap()
    }

    #[test]
    fn chorded_square_has_one_plane() {
        let g = chorded_square();
        let (basis, _) = fundamental_basis(&g);
        let r = search_hamilton_plane(&basis, &g, &Budget::default());
        assert!(!r.truncated);
        assert_eq!(r.planes.len(), 1);
        let p = &r.planes[0];
        assert_eq!(p.members, &[0, 1]);
        assert_eq!(p.sum.order(), 4);
        assert!(p.grinberg_identity);
        assert_eq!(p.pair_classes.pairs.len(), 1);
        assert_eq!(p.pair_classes.pairs[0].2.class, PairClass::Ve);
    }

    #[test]
    fn petersen_has_no_planes() {
        let g = petersen();
        let (basis, _) = fundamental_basis(&g);
        assert_eq!(basis.dim(), 6);
        let r = search_hamilton_plane(&basis, &g, &Budget::default());
        assert!(!r.truncated);
        assert!(r.planes.is_empty());
    }

    #[test]
    fn k24_quad_basis_yields_v0_counterexample() {
        let g = k24();
        let basis = quad_basis(&g);
        let r = find_equation_counterexample(&basis, &g, &Budget::default());
        assert!(!r.truncated);
        assert_eq!(r.reports.len(), 1);
        let c = &r.reports[0];
        assert_eq!(c.members, &[0, 2]);
        assert_eq!(c.reason, NotHamiltonianReason::SumNotElementary);
        assert_eq!(c.realizes.counts[&4], 2);
        assert_eq!(c.pair_classes.pairs[0].2.class, PairClass::V0);
        // K_{2,4} has no planes either
        let planes = search_hamilton_plane(&basis, &g, &Budget::default());
        assert!(planes.planes.is_empty() && !planes.truncated);
    }

    #[test]
    fn chorded_square_has_no_counterexamples() {
        let g = chorded_square();
        let (basis, _) = fundamental_basis(&g);
        let r = find_equation_counterexample(&basis, &g, &Budget::default());
        assert!(r.reports.is_empty() && !r.truncated);
    }

    #[test]
    fn triangle_single_cycle_is_the_plane() {
        let g = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        let (basis, _) = fundamental_basis(&g);
        let r = search_hamilton_plane(&basis, &g, &Budget::default());
        assert_eq!(r.planes.len(), 1);
        let c = find_equation_counterexample(&basis, &g, &Budget::default());
        assert!(c.reports.is_empty());
    }

    #[test]
    fn pair_classification_covers_all_patterns() {
        let g = parse_edge_list("0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n0 3\n1 4\n2 5").unwrap();
        let t1 = is_elementary_cycle(
            &EdgeVector::from_edge_ids(
                g.edge_count(),
                &[
                    g.edge_id(0, 1).unwrap(),
                    g.edge_id(1, 2).unwrap(),
                    g.edge_id(0, 2).unwrap(),
                ],
            ),
            &g,
        )
        .unwrap();
        let t2 = is_elementary_cycle(
            &EdgeVector::from_edge_ids(
                g.edge_count(),
                &[
                    g.edge_id(3, 4).unwrap(),
                    g.edge_id(4, 5).unwrap(),
                    g.edge_id(3, 5).unwrap(),
                ],
            ),
            &g,
        )
        .unwrap();
        let r = classify_pair(&t1, &t2);
        assert_eq!(r.class, PairClass::Disjoint);
        assert_eq!(classify_pair(&t1, &t1).class, PairClass::Ve);
    }

    #[test]
    fn oracle_k4() {
        let g = parse_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
        match hamiltonian_oracle(&g, &Budget::default()) {
            OracleVerdict::Hamiltonian(c) => assert_eq!(c.order(), 4),
            other => panic!("expected Hamiltonian, got {other:?}"),
        }
    }

    #[test]
    fn oracle_k24_and_petersen_non_hamiltonian() {
        assert!(matches!(
            hamiltonian_oracle(&k24(), &Budget::default()),
            OracleVerdict::NonHamiltonian
        ));
        assert!(matches!(
            hamiltonian_oracle(&petersen(), &Budget::default()),
            OracleVerdict::NonHamiltonian
        ));
    }

    #[test]
    fn oracle_reports_unknown_on_tiny_budget() {
        let g = petersen();
        let verdict = hamiltonian_oracle(&g, &Budget::subsets(2));
        assert!(matches!(verdict, OracleVerdict::Unknown));
    }

    #[test]
    fn census_counts() {
        let tri = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        let (b, _) = fundamental_basis(&tri);
        assert_eq!(enumerate_all_cycles(&tri, &b, 20).unwrap().len(), 1);

        let k4 = parse_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
        let (b, _) = fundamental_basis(&k4);
        let cycles = enumerate_all_cycles(&k4, &b, 20).unwrap();
        assert_eq!(cycles.len(), 7);
        let triangles = cycles.iter().filter(|c| c.size() == 3).count();
        assert_eq!(triangles, 4);

        let cs = chorded_square();
        let (b, _) = fundamental_basis(&cs);
        assert_eq!(enumerate_all_cycles(&cs, &b, 20).unwrap().len(), 3);
    }

    #[test]
    fn census_refuses_large_dimension() {
        let g = petersen();
        let (b, _) = fundamental_basis(&g);
        assert!(enumerate_all_cycles(&g, &b, 3).is_err());
    }

    #[test]
    fn every_census_cycle_is_representable() {
        let g = petersen();
        let (basis, _) = fundamental_basis(&g);
        for c in enumerate_all_cycles(&g, &basis, 20).unwrap() {
            assert!(crate::space::represent_in_basis(c.vector(), &basis).is_ok());
        }
    }
}
