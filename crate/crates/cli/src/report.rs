//! JSON report types. These are the stable machine-readable surface of
//! the CLI; schemas for them ship in `schemas/`.

use serde::Serialize;

use cyclespace::graph::FaceTrace;
use cyclespace::grinberg::{
    AuditRecord, CheckOutcome, GrinbergReport, ModularCertificate, SizeSolution,
};
use cyclespace::search::{
    CounterexampleReport, HamiltonPlane, NotHamiltonianReason, OracleVerdict, PairClassification,
};
use cyclespace::{Cycle, CycleBasis, Graph};

#[derive(Serialize)]
pub struct GraphInfo {
    pub source: String,
    pub vertices: usize,
    pub edges: usize,
    pub cycle_space_dim: usize,
}

impl GraphInfo {
    pub fn new(source: &str, g: &Graph) -> Self {
        GraphInfo {
            source: source.to_string(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            cycle_space_dim: g.cycle_space_dim(),
        }
    }
}

#[derive(Serialize)]
pub struct CycleJson {
    pub vertices: Vec<u32>,
    pub edge_ids: Vec<u32>,
    pub size: usize,
}

impl CycleJson {
    pub fn new(c: &Cycle) -> Self {
        CycleJson {
            vertices: c.vertices().to_vec(),
            edge_ids: c.vector().support().map(|e| e as u32).collect(),
            size: c.size(),
        }
    }
}

#[derive(Serialize)]
pub struct BasisReport {
    pub graph: GraphInfo,
    pub kind: String,
    pub dimension: usize,
    pub spanning_tree_edges: Vec<u32>,
    pub cycles: Vec<CycleJson>,
}

impl BasisReport {
    pub fn new(source: &str, g: &Graph, basis: &CycleBasis, tree: &[u32]) -> Self {
        BasisReport {
            graph: GraphInfo::new(source, g),
            kind: "fundamental".to_string(),
            dimension: basis.dim(),
            spanning_tree_edges: tree.to_vec(),
            cycles: basis.cycles().iter().map(CycleJson::new).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct DegreeCount {
    pub degree: usize,
    pub count: usize,
}

pub fn degree_counts<'a>(it: impl Iterator<Item = (&'a usize, &'a usize)>) -> Vec<DegreeCount> {
    it.map(|(&degree, &count)| DegreeCount { degree, count })
        .collect()
}

#[derive(Serialize)]
pub struct EvaluationJson {
    pub lhs_full: i64,
    pub lhs_inside: i64,
    pub rhs_inside: i64,
    pub satisfied_full: bool,
    pub satisfied_inside: bool,
}

impl EvaluationJson {
    pub fn new(r: &GrinbergReport) -> Self {
        EvaluationJson {
            lhs_full: r.lhs_full,
            lhs_inside: r.lhs_inside,
            rhs_inside: r.rhs_inside,
            satisfied_full: r.satisfied_full,
            satisfied_inside: r.satisfied_inside,
        }
    }
}

#[derive(Serialize)]
pub struct ResidueRowJson {
    pub degree: usize,
    pub multiplicity: usize,
    pub coefficient_residue: u64,
    pub term_residues: Vec<u64>,
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub modulus: u64,
    pub form: String,
    pub target_residue: u64,
    pub reachable_residues: Vec<u64>,
    pub rows: Vec<ResidueRowJson>,
    pub congruence: String,
    pub replayed: bool,
}

impl CertificateJson {
    pub fn new(c: &ModularCertificate) -> Self {
        let form = match c.form {
            cyclespace::grinberg::CertificateForm::Full => "full",
            cyclespace::grinberg::CertificateForm::Inside => "inside",
        };
        let lhs = match c.form {
            cyclespace::grinberg::CertificateForm::Full => {
                "sum_i (i-2)(f'_i - f''_i) = 0".to_string()
            }
            cyclespace::grinberg::CertificateForm::Inside => {
                format!("sum_i (i-2) x_i = {}", c.n as i64 - 2)
            }
        };
        CertificateJson {
            modulus: c.modulus,
            form: form.to_string(),
            target_residue: c.target_residue,
            reachable_residues: c.reachable.clone(),
            rows: c
                .rows
                .iter()
                .map(|r| ResidueRowJson {
                    degree: r.degree,
                    multiplicity: r.multiplicity,
                    coefficient_residue: r.coefficient_residue,
                    term_residues: r.term_residues.clone(),
                })
                .collect(),
            congruence: format!(
                "{lhs} has no solution mod {}: target residue {} is unreachable",
                c.modulus, c.target_residue
            ),
            replayed: c.replay(),
        }
    }
}

#[derive(Serialize)]
pub struct SolutionJson {
    pub counts: Vec<DegreeCount>,
}

impl SolutionJson {
    pub fn new(s: &SizeSolution) -> Self {
        SolutionJson {
            counts: degree_counts(s.counts.iter()),
        }
    }
}

/// Output of `grinberg` run against a face partition.
#[derive(Serialize)]
pub struct PartitionReport {
    pub graph: GraphInfo,
    pub mode: String,
    pub inside_faces: Vec<usize>,
    pub inside: Vec<DegreeCount>,
    pub outside: Vec<DegreeCount>,
    pub evaluation: EvaluationJson,
}

/// Output of `grinberg` in feasibility mode (no inside list given).
#[derive(Serialize)]
pub struct FeasibilityReport {
    pub graph: GraphInfo,
    pub mode: String,
    pub faces: Vec<DegreeCount>,
    pub face_count: usize,
    pub solutions: Vec<SolutionJson>,
    pub certificate: Option<CertificateJson>,
    pub verdict: String,
}

impl FeasibilityReport {
    pub fn new(
        source: &str,
        g: &Graph,
        trace: &FaceTrace,
        faces: &cyclespace::grinberg::SizeMultiset,
        solutions: &[SizeSolution],
        certificate: Option<&ModularCertificate>,
    ) -> Self {
        let verdict = if !solutions.is_empty() {
            "solutions-exist"
        } else if certificate.is_some() {
            "certified-infeasible"
        } else {
            "infeasible-by-enumeration"
        };
        FeasibilityReport {
            graph: GraphInfo::new(source, g),
            mode: "feasibility".to_string(),
            faces: degree_counts(faces.iter()),
            face_count: trace.face_count(),
            solutions: solutions.iter().map(SolutionJson::new).collect(),
            certificate: certificate.map(CertificateJson::new),
            verdict: verdict.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct PairJson {
    pub i: usize,
    pub j: usize,
    pub class: String,
    pub shared_vertices: usize,
    pub shared_edges: usize,
}

fn pairs_json(p: &PairClassification) -> Vec<PairJson> {
    p.pairs
        .iter()
        .map(|(i, j, r)| PairJson {
            i: *i,
            j: *j,
            class: r.class.to_string(),
            shared_vertices: r.shared_vertices,
            shared_edges: r.shared_edges,
        })
        .collect()
}

#[derive(Serialize)]
pub struct CheckJson {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub got: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<i64>,
}

impl CheckJson {
    fn new(c: &CheckOutcome) -> Self {
        match c {
            CheckOutcome::Pass => CheckJson {
                status: "pass".into(),
                got: None,
                expected: None,
            },
            CheckOutcome::Fail { got, expected } => CheckJson {
                status: "fail".into(),
                got: Some(*got),
                expected: Some(*expected),
            },
            CheckOutcome::PreconditionViolated => CheckJson {
                status: "precondition-violated".into(),
                got: None,
                expected: None,
            },
        }
    }
}

#[derive(Serialize)]
pub struct AuditJson {
    pub union_size: usize,
    pub sum_sizes: i64,
    pub joint_pairs: usize,
    pub sum_pair_intersections: i64,
    pub pairwise_precondition: bool,
    pub identity_two_term: CheckJson,
    pub chain_structure: CheckJson,
    pub size_identity: CheckJson,
}

impl AuditJson {
    pub fn new(a: &AuditRecord) -> Self {
        AuditJson {
            union_size: a.union_size,
            sum_sizes: a.sum_sizes,
            joint_pairs: a.joint_pairs,
            sum_pair_intersections: a.sum_pair_intersections,
            pairwise_precondition: a.pairwise_precondition,
            identity_two_term: CheckJson::new(&a.identity_two_term),
            chain_structure: CheckJson::new(&a.chain_structure),
            size_identity: CheckJson::new(&a.size_identity),
        }
    }
}

#[derive(Serialize)]
pub struct PlaneJson {
    pub members: Vec<usize>,
    pub member_cycles: Vec<CycleJson>,
    pub sum: CycleJson,
    pub pair_classes: Vec<PairJson>,
    pub grinberg_identity: bool,
    pub audit: AuditJson,
}

impl PlaneJson {
    pub fn new(p: &HamiltonPlane, basis: &CycleBasis, audit: &AuditRecord) -> Self {
        PlaneJson {
            members: p.members.clone(),
            member_cycles: p
                .members
                .iter()
                .map(|&i| CycleJson::new(basis.cycle(i)))
                .collect(),
            sum: CycleJson::new(&p.sum),
            pair_classes: pairs_json(&p.pair_classes),
            grinberg_identity: p.grinberg_identity,
            audit: AuditJson::new(audit),
        }
    }
}

#[derive(Serialize)]
pub struct CounterexampleJson {
    pub members: Vec<usize>,
    pub member_cycles: Vec<CycleJson>,
    pub realizes: SolutionJson,
    pub why_not_hamiltonian: String,
    pub pair_classes: Vec<PairJson>,
}

impl CounterexampleJson {
    pub fn new(c: &CounterexampleReport, basis: &CycleBasis) -> Self {
        let why = match &c.reason {
            NotHamiltonianReason::SumNotElementary => "sum-not-elementary".to_string(),
            NotHamiltonianReason::SumOrderTooSmall { order } => {
                format!("sum-order-too-small:{order}")
            }
        };
        CounterexampleJson {
            members: c.members.clone(),
            member_cycles: c
                .members
                .iter()
                .map(|&i| CycleJson::new(basis.cycle(i)))
                .collect(),
            realizes: SolutionJson::new(&c.realizes),
            why_not_hamiltonian: why,
            pair_classes: pairs_json(&c.pair_classes),
        }
    }
}

#[derive(Serialize)]
pub struct PlaneReport {
    pub graph: GraphInfo,
    pub basis_kind: String,
    pub basis_dimension: usize,
    pub basis_cycle_sizes: Vec<usize>,
    pub planes: Vec<PlaneJson>,
    pub counterexamples: Vec<CounterexampleJson>,
    pub subsets_examined: u64,
    pub budget_status: String,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub graph: GraphInfo,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<CycleJson>,
}

impl OracleReport {
    pub fn new(source: &str, g: &Graph, verdict: &OracleVerdict) -> Self {
        let (verdict_str, cycle) = match verdict {
            OracleVerdict::Hamiltonian(c) => ("hamiltonian", Some(CycleJson::new(c))),
            OracleVerdict::NonHamiltonian => ("non-hamiltonian", None),
            OracleVerdict::Unknown => ("unknown", None),
        };
        OracleReport {
            graph: GraphInfo::new(source, g),
            verdict: verdict_str.to_string(),
            cycle,
        }
    }
}

#[derive(Serialize)]
pub struct CorpusEntryJson {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    pub has_rotation: bool,
    pub hamiltonian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face_degrees: Option<Vec<DegreeCount>>,
    pub provenance: String,
}

#[derive(Serialize)]
pub struct CorpusListReport {
    pub entries: Vec<CorpusEntryJson>,
}

#[derive(Serialize)]
pub struct CorpusEmitReport {
    pub name: String,
    pub files: Vec<String>,
}
