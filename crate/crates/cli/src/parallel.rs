//! Opt-in parallel plane search.
//!
//! Workers split the full subset range into chunks, each tests its chunk
//! with the same pure subset check, and the merger sorts, so the output is
//! identical to the sequential lexicographic run. Only used when the
//! dimension admits full enumeration; otherwise the caller falls back to
//! the sequential search.

use std::time::Instant;

use cyclespace::search::{
    plane_from_subset, search_hamilton_plane, Budget, HamiltonPlane, PlaneSearch,
};
use cyclespace::{CycleBasis, Graph};

const PARALLEL_DIM_LIMIT: usize = 20;

/// Time/subset limits for CLI runs.
#[derive(Clone, Copy)]
pub struct CliBudget {
    pub max_subsets: u64,
    pub deadline: Option<(Instant, std::time::Duration)>,
}

impl CliBudget {
    pub fn new(max_subsets: u64, max_seconds: Option<f64>) -> Self {
        CliBudget {
            max_subsets,
            deadline: max_seconds.map(|s| (Instant::now(), std::time::Duration::from_secs_f64(s))),
        }
    }

    pub fn expired(&self) -> bool {
        self.deadline
            .map(|(start, limit)| start.elapsed() > limit)
            .unwrap_or(false)
    }

    /// Borrow as a core search budget with the deadline probe attached.
    pub fn with_core<'a, R>(
        &'a self,
        probe: &'a dyn Fn() -> bool,
        f: impl FnOnce(&Budget<'a>) -> R,
    ) -> R {
        let budget = Budget {
            max_subsets: self.max_subsets,
            expired: Some(probe),
        };
        f(&budget)
    }
}

/// Search for Hamilton planes with `workers` threads. Falls back to the
/// sequential search when `workers <= 1` or the dimension is too large
/// for full enumeration.
pub fn search_planes(
    basis: &CycleBasis,
    g: &Graph,
    budget: &CliBudget,
    workers: usize,
) -> PlaneSearch {
    let dim = basis.dim();
    if workers <= 1 || dim > PARALLEL_DIM_LIMIT || dim == 0 {
        let probe = || budget.expired();
        return budget.with_core(&probe, |b| search_hamilton_plane(basis, g, b));
    }
    let total: u64 = (1u64 << dim) - 1;
    let budgeted = total.min(budget.max_subsets);
    let chunk = budgeted.div_ceil(workers as u64).max(1);
    let mut results: Vec<(Vec<HamiltonPlane>, u64, bool)> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers as u64)
            .map(|w| {
                let lo = 1 + w * chunk;
                let hi = (lo + chunk).min(budgeted + 1);
                scope.spawn(move || {
                    let mut planes = Vec::new();
                    let mut examined = 0u64;
                    let mut truncated = false;
                    for mask in lo..hi {
                        examined += 1;
                        if examined.is_multiple_of(1024) && budget.expired() {
                            truncated = true;
                            break;
                        }
                        let members: Vec<usize> =
                            (0..dim).filter(|&i| mask >> i & 1 == 1).collect();
                        if let Some(p) = plane_from_subset(&members, basis, g) {
                            planes.push(p);
                        }
                    }
                    (planes, examined, truncated)
                })
            })
            .collect();
        for h in handles {
            results.push(h.join().expect("worker panicked"));
        }
    });
    let mut planes: Vec<HamiltonPlane> = Vec::new();
    let mut examined = 0u64;
    let mut truncated = budgeted < total;
    for (p, e, t) in results {
        planes.extend(p);
        examined += e;
        truncated |= t;
    }
    planes.sort_by(|a, b| a.members.cmp(&b.members));
    PlaneSearch {
        planes,
        subsets_examined: examined,
        truncated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclespace::space::fundamental_basis;

    #[test]
    fn parallel_matches_sequential() {
        let entry = crate::corpus::get("dodecahedron").unwrap();
        let g = entry.graph().unwrap();
        let (basis, _) = fundamental_basis(&g);
        let budget = CliBudget::new(1 << 20, None);
        let seq = search_planes(&basis, &g, &budget, 1);
        let par = search_planes(&basis, &g, &budget, 4);
        assert_eq!(seq.truncated, par.truncated);
        let seq_members: Vec<_> = seq.planes.iter().map(|p| p.members.clone()).collect();
        let par_members: Vec<_> = par.planes.iter().map(|p| p.members.clone()).collect();
        assert_eq!(seq_members, par_members);
    }
}
