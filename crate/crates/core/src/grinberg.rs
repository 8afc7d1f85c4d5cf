//! The Grinberg condition: exact evaluation of both forms, Diophantine
//! feasibility over available face/cycle sizes, modular infeasibility
//! certificates, and the inclusion-exclusion identity audit.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::space::Cycle;

/// Multiset of degrees/sizes: degree → multiplicity. Degrees are ≥ 3.
pub type SizeMultiset = BTreeMap<usize, usize>;

pub fn multiset_from_sizes(sizes: &[usize]) -> SizeMultiset {
    let mut m = SizeMultiset::new();
    for &s in sizes {
        *m.entry(s).or_insert(0) += 1;
    }
    m
}

/// Faces split into inside/outside of a (putative) Hamiltonian cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePartition {
    pub inside: SizeMultiset,
    pub outside: SizeMultiset,
    pub n: usize,
}

/// Exact evaluation of both forms of the condition.
///
/// Full form: Σ (i−2)(f′_i − f″_i) = 0.
/// Inside form: Σ (i−2) f′_i = n − 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrinbergReport {
    pub lhs_full: i64,
    pub lhs_inside: i64,
    pub rhs_inside: i64,
    pub satisfied_full: bool,
    pub satisfied_inside: bool,
}

fn coeff(i: usize) -> i64 {
    i as i64 - 2
}

pub fn eval_full(p: &FacePartition) -> GrinbergReport {
    let mut lhs_full: i64 = 0;
    let mut lhs_inside: i64 = 0;
    for (&i, &mult) in &p.inside {
        let term = coeff(i).checked_mul(mult as i64).expect("overflow");
        lhs_full = lhs_full.checked_add(term).expect("overflow");
        lhs_inside = lhs_inside.checked_add(term).expect("overflow");
    }
    for (&i, &mult) in &p.outside {
        let term = coeff(i).checked_mul(mult as i64).expect("overflow");
        lhs_full = lhs_full.checked_sub(term).expect("overflow");
    }
    let rhs_inside = p.n as i64 - 2;
    GrinbergReport {
        lhs_full,
        lhs_inside,
        rhs_inside,
        satisfied_full: lhs_full == 0,
        satisfied_inside: lhs_inside == rhs_inside,
    }
}

/// One bounded integer solution of Σ (i−2) x_i = n − 2. Every available
/// degree appears in `counts`, including those chosen zero times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeSolution {
    pub counts: BTreeMap<usize, usize>,
}

impl SizeSolution {
    /// Re-substitute into the equation; used by callers to replay.
    pub fn lhs(&self) -> i64 {
        self.counts.iter().map(|(&i, &x)| coeff(i) * x as i64).sum()
    }

    /// Total number of chosen faces/cycles.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

/// All bounded solutions of Σ (i−2) x_i = n − 2 with 0 ≤ x_i ≤ mult(i),
/// enumerated by bounded knapsack over distinct sizes in ascending order.
/// An empty list means the equation is infeasible over `available`.
pub fn solve_inside(available: &SizeMultiset, n: usize) -> Vec<SizeSolution> {
    let target = n as i64 - 2;
    let sizes: Vec<(usize, usize)> = available.iter().map(|(&i, &m)| (i, m)).collect();
    // max contribution of the suffix starting at each position, for pruning
    let mut suffix_max = vec![0i64; sizes.len() + 1];
    for k in (0..sizes.len()).rev() {
        let (i, m) = sizes[k];
        suffix_max[k] = suffix_max[k + 1] + coeff(i) * m as i64;
    }
    let mut out = Vec::new();
    let mut counts: Vec<usize> = vec![0; sizes.len()];
    fn recurse(
        sizes: &[(usize, usize)],
        suffix_max: &[i64],
        k: usize,
        remaining: i64,
        counts: &mut Vec<usize>,
        out: &mut Vec<SizeSolution>,
    ) {
        if remaining < 0 || remaining > suffix_max[k] {
            return;
        }
        if k == sizes.len() {
            if remaining == 0 {
                let mut map = BTreeMap::new();
                for (&(i, _), &x) in sizes.iter().zip(counts.iter()) {
                    map.insert(i, x);
                }
                out.push(SizeSolution { counts: map });
            }
            return;
        }
        let (i, mult) = sizes[k];
        let c = coeff(i);
        let cap = if c > 0 {
            mult.min((remaining / c) as usize)
        } else {
            mult
        };
        for x in 0..=cap {
            counts[k] = x;
            recurse(
                sizes,
                suffix_max,
                k + 1,
                remaining - c * x as i64,
                counts,
                out,
            );
        }
        counts[k] = 0;
    }
    recurse(&sizes, &suffix_max, 0, target, &mut counts, &mut out);
    out
}

/// Which congruence the certificate is framed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateForm {
    /// Σ (i−2)(2x_i − m_i) ≡ 0 (mod M), x_i inside faces of degree i.
    Full,
    /// Σ (i−2) x_i ≡ n − 2 (mod M).
    Inside,
}

/// Per-degree residue row of a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueRow {
    pub degree: usize,
    pub multiplicity: usize,
    /// (i − 2) mod M.
    pub coefficient_residue: u64,
    /// Residues the degree's term can take over its bounded domain.
    pub term_residues: Vec<u64>,
}

/// Proof that the Grinberg equation has no integer solution: under the
/// stated modulus, no choice of bounded inside-counts reaches the target
/// residue. Replayable by exhausting the residue domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularCertificate {
    pub modulus: u64,
    pub form: CertificateForm,
    pub n: usize,
    pub target_residue: u64,
    pub rows: Vec<ResidueRow>,
    /// Residues the full left-hand side can reach; excludes the target.
    pub reachable: Vec<u64>,
}

impl ModularCertificate {
    /// Recompute reachability from the rows and confirm the target residue
    /// is still absent.
    pub fn replay(&self) -> bool {
        let m = self.modulus as usize;
        let mut reach = vec![false; m];
        reach[0] = true;
        for row in &self.rows {
            let mut next = vec![false; m];
            for r in 0..m {
                if reach[r] {
                    for &t in &row.term_residues {
                        next[(r + t as usize) % m] = true;
                    }
                }
            }
            reach = next;
        }
        let reached: Vec<u64> = (0..m as u64).filter(|&r| reach[r as usize]).collect();
        reached == self.reachable && !reach[self.target_residue as usize]
    }
}

pub const DEFAULT_MODULI: [u64; 4] = [2, 3, 5, 7];

fn term_residues(form: CertificateForm, degree: usize, mult: usize, modulus: u64) -> Vec<u64> {
    let m = modulus as i64;
    let c = coeff(degree).rem_euclid(m);
    let mut seen = vec![false; modulus as usize];
    // residues repeat with period M in x, so a truncated scan is exact
    for x in 0..=mult.min(modulus as usize - 1) {
        let v = match form {
            CertificateForm::Full => c * (2 * x as i64 - mult as i64),
            CertificateForm::Inside => c * x as i64,
        };
        seen[v.rem_euclid(m) as usize] = true;
    }
    (0..modulus).filter(|&r| seen[r as usize]).collect()
}

fn try_modulus(
    available: &SizeMultiset,
    n: usize,
    modulus: u64,
    form: CertificateForm,
) -> Option<ModularCertificate> {
    let m = modulus as usize;
    let rows: Vec<ResidueRow> = available
        .iter()
        .map(|(&degree, &mult)| ResidueRow {
            degree,
            multiplicity: mult,
            coefficient_residue: coeff(degree).rem_euclid(modulus as i64) as u64,
            term_residues: term_residues(form, degree, mult, modulus),
        })
        .collect();
    let target_residue = match form {
        CertificateForm::Full => 0,
        CertificateForm::Inside => (n as i64 - 2).rem_euclid(modulus as i64) as u64,
    };
    let mut reach = vec![false; m];
    reach[0] = true;
    for row in &rows {
        let mut next = vec![false; m];
        for r in 0..m {
            if reach[r] {
                for &t in &row.term_residues {
                    next[(r + t as usize) % m] = true;
                }
            }
        }
        reach = next;
    }
    if reach[target_residue as usize] {
        return None;
    }
    Some(ModularCertificate {
        modulus,
        form,
        n,
        target_residue,
        rows,
        reachable: (0..modulus).filter(|&r| reach[r as usize]).collect(),
    })
}

/// Search the moduli in the given order for one under which the Grinberg
/// equation is unsatisfiable. For each modulus the full form is tried
/// first, then the inside form. `None` means every modulus admits a
/// residue solution (inconclusive).
pub fn modular_obstruction(
    available: &SizeMultiset,
    n: usize,
    moduli: &[u64],
) -> Option<ModularCertificate> {
    for &modulus in moduli {
        debug_assert!(modulus >= 2);
        for form in [CertificateForm::Full, CertificateForm::Inside] {
            if let Some(cert) = try_modulus(available, n, modulus, form) {
                return Some(cert);
            }
        }
    }
    None
}

/// Outcome of one audited equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail { got: i64, expected: i64 },
    PreconditionViolated,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }
}

fn eq_check(got: i64, expected: i64) -> CheckOutcome {
    if got == expected {
        CheckOutcome::Pass
    } else {
        CheckOutcome::Fail { got, expected }
    }
}

/// Exact audit of the inclusion-exclusion derivation on a cycle set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditRecord {
    pub union_size: usize,
    pub sum_sizes: i64,
    pub joint_pairs: usize,
    pub sum_pair_intersections: i64,
    /// No vertex lies on three or more of the cycles. The two-term
    /// truncation of inclusion-exclusion is only valid when this holds.
    pub pairwise_precondition: bool,
    /// n = Σ|V_i| − Σ|V_i ∩ V_j|.
    pub identity_two_term: CheckOutcome,
    /// Every joint pair shares exactly 2 vertices and there are
    /// (#cycles − 1) joint pairs.
    pub chain_structure: CheckOutcome,
    /// Σ (size_i − 2) = n − 2.
    pub size_identity: CheckOutcome,
}

impl AuditRecord {
    pub fn all_pass(&self) -> bool {
        self.identity_two_term.passed()
            && self.chain_structure.passed()
            && self.size_identity.passed()
    }
}

pub fn audit_inclusion_exclusion(cycles: &[Cycle], n: usize) -> AuditRecord {
    let mut membership: BTreeMap<u32, usize> = BTreeMap::new();
    for c in cycles {
        for &v in c.vertices() {
            *membership.entry(v).or_insert(0) += 1;
        }
    }
    let union_size = membership.len();
    let sum_sizes: i64 = cycles.iter().map(|c| c.order() as i64).sum();
    let mut joint_pairs = 0usize;
    let mut sum_pair_intersections = 0i64;
    let mut every_joint_pair_is_two = true;
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let shared = cycles[i].shared_vertices(&cycles[j]);
            if shared > 0 {
                joint_pairs += 1;
                sum_pair_intersections += shared as i64;
                if shared != 2 {
                    every_joint_pair_is_two = false;
                }
            }
        }
    }
    let pairwise_precondition = membership.values().all(|&k| k <= 2);
    let identity_two_term = if pairwise_precondition {
        eq_check(sum_sizes - sum_pair_intersections, n as i64)
    } else {
        CheckOutcome::PreconditionViolated
    };
    let chain_structure = if every_joint_pair_is_two && joint_pairs + 1 == cycles.len() {
        CheckOutcome::Pass
    } else if every_joint_pair_is_two {
        CheckOutcome::Fail {
            got: joint_pairs as i64,
            expected: cycles.len() as i64 - 1,
        }
    } else {
        CheckOutcome::Fail {
            got: sum_pair_intersections,
            expected: 2 * joint_pairs as i64,
        }
    };
    let size_identity = eq_check(
        cycles.iter().map(|c| c.size() as i64 - 2).sum(),
        n as i64 - 2,
    );
    AuditRecord {
        union_size,
        sum_sizes,
        joint_pairs,
        sum_pair_intersections,
        pairwise_precondition,
        identity_two_term,
        chain_structure,
        size_identity,
    }
}
