//! Built-in corpus of classic graphs with embeddings.
//!
//! Edge lists and rotation systems are data files checked into the repo
//! (`data/`); the shipped facts below are re-derived by the corpus
//! self-test, never trusted. `tools/make_corpus.py` documents how each
//! file was produced.

use anyhow::{anyhow, Result};
use cyclespace::formats::{parse_edge_list, parse_rotation};
use cyclespace::{Graph, RotationSystem};

/// One corpus graph with its shipped facts.
pub struct CorpusEntry {
    pub name: &'static str,
    pub edges_text: &'static str,
    pub rotation_text: Option<&'static str>,
    pub provenance: &'static str,
    /// Known Hamiltonicity, re-derivable by the oracle or a certificate.
    pub hamiltonian: bool,
    /// Face degrees of the shipped embedding as (degree, multiplicity).
    pub face_degrees: Option<&'static [(usize, usize)]>,
}

impl CorpusEntry {
    pub fn graph(&self) -> Result<Graph> {
        parse_edge_list(self.edges_text).map_err(|e| anyhow!("corpus {}: {e}", self.name))
    }

    pub fn rotation(&self, g: &Graph) -> Result<Option<RotationSystem>> {
        match self.rotation_text {
            None => Ok(None),
            Some(text) => parse_rotation(text, g)
                .map(Some)
                .map_err(|e| anyhow!("corpus {}: {e}", self.name)),
        }
    }
}

macro_rules! entry {
    ($name:literal, rot: $rot:expr, ham: $ham:expr, faces: $faces:expr, $prov:literal) => {
        CorpusEntry {
            name: $name,
            edges_text: include_str!(concat!("../data/", $name, ".edges")),
            rotation_text: $rot,
            provenance: $prov,
            hamiltonian: $ham,
            face_degrees: $faces,
        }
    };
}

pub static ENTRIES: &[CorpusEntry] = &[
    entry!(
        "triangle",
        rot: Some(include_str!("../data/triangle.rot")),
        ham: true,
        faces: Some(&[(3, 2)]),
        "smallest cycle C3"
    ),
    entry!(
        "chorded-square",
        rot: Some(include_str!("../data/chorded-square.rot")),
        ham: true,
        faces: Some(&[(3, 2), (4, 1)]),
        "4-cycle 0-1-2-3 with chord 0-2"
    ),
    entry!(
        "k4",
        rot: Some(include_str!("../data/k4.rot")),
        ham: true,
        faces: Some(&[(3, 4)]),
        "complete graph on 4 vertices"
    ),
    entry!(
        "k24",
        rot: Some(include_str!("../data/k24.rot")),
        ham: false,
        faces: Some(&[(4, 4)]),
        "complete bipartite K_{2,4}; parts {0,1} and {2,3,4,5}; non-Hamiltonian (unbalanced bipartition)"
    ),
    entry!(
        "prism",
        rot: Some(include_str!("../data/prism.rot")),
        ham: true,
        faces: Some(&[(3, 2), (4, 3)]),
        "triangular prism: triangles 0-1-2 and 3-4-5 joined by a matching"
    ),
    entry!(
        "herschel",
        rot: Some(include_str!("../data/herschel.rot")),
        ham: false,
        faces: Some(&[(4, 9)]),
        "Herschel graph: smallest 3-connected planar quadrangulation (11 vertices, 9 quadrilateral faces); non-Hamiltonian"
    ),
    entry!(
        "petersen",
        rot: None,
        ham: false,
        faces: None,
        "Petersen graph (non-planar, so no rotation ships)"
    ),
    entry!(
        "dodecahedron",
        rot: Some(include_str!("../data/dodecahedron.rot")),
        ham: true,
        faces: Some(&[(5, 12)]),
        "dodecahedral graph: cubic, 12 pentagonal faces"
    ),
    entry!(
        "grinberg-graph",
        rot: Some(include_str!("../data/grinberg-graph.rot")),
        ham: false,
        faces: Some(&[(5, 21), (8, 3), (9, 1)]),
        "cubic 3-connected planar graph on 46 vertices with face vector 5^21 8^3 9^1, matching Grinberg's classic parameters; built as the dual of a 25-vertex sphere triangulation (tools/make_corpus.py); non-Hamiltonian by the mod-3 certificate"
    ),
    entry!(
        "tutte",
        rot: Some(include_str!("../data/tutte.rot")),
        ham: false,
        faces: Some(&[(4, 6), (5, 15), (9, 1), (10, 3)]),
        "Tutte graph: cubic 3-connected planar, 46 vertices, non-Hamiltonian"
    ),
];

pub fn get(name: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclespace::graph::trace_faces;

    #[test]
    fn every_entry_parses_and_rotations_pass_euler() {
        for e in ENTRIES {
            let g = e.graph().unwrap();
            if let Some(rot) = e.rotation(&g).unwrap() {
                let trace = trace_faces(&g, &rot);
                assert!(trace.euler_ok, "{}: Euler check failed", e.name);
                let degrees = trace.degree_multiset();
                assert_eq!(
                    degrees,
                    e.face_degrees.unwrap().to_vec(),
                    "{}: shipped face degrees drifted",
                    e.name
                );
            }
        }
    }

    #[test]
    fn grinberg_graph_is_cubic_on_46_vertices() {
        let g = get("grinberg-graph").unwrap().graph().unwrap();
        assert_eq!(g.vertex_count(), 46);
        assert_eq!(g.edge_count(), 69);
        assert!((0..46).all(|v| g.incident_edges(v).len() == 3));
    }
}
