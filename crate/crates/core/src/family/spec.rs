//! Declarative cut-and-glue family descriptions and their JSON form.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::json::{poly_from_json, poly_to_json};

use super::graph::Graph;
use super::wep::Wep;
use super::FamilyError;

/// Affine qubit-count law `n(r) = offset + step · r` for recursive members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QubitLaw {
    pub offset: i64,
    pub step: i64,
}

/// A recursively definable graph family.
///
/// Member `recursion_start` is `base_graph`; each further member cuts the current
/// boundary subgraph and glues in `replacement`. The glue and next-boundary maps
/// are stored positionally: entry `i` is the image of `boundary[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    name: String,
    base_graph: Graph,
    boundary: Vec<usize>,
    replacement: Graph,
    glue_map: Vec<usize>,
    next_boundary_map: Vec<usize>,
    prefix_weps: Vec<Wep>,
    recursion_start: usize,
    qubit_count: QubitLaw,
}

impl FamilySpec {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        base_graph: Graph,
        boundary: Vec<usize>,
        replacement: Graph,
        glue_map: Vec<usize>,
        next_boundary_map: Vec<usize>,
        prefix_weps: Vec<Wep>,
        recursion_start: usize,
        qubit_count: QubitLaw,
    ) -> Result<Self, FamilyError> {
        let spec = FamilySpec {
            name: name.into(),
            base_graph,
            boundary,
            replacement,
            glue_map,
            next_boundary_map,
            prefix_weps,
            recursion_start,
            qubit_count,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), FamilyError> {
        let g = &self.base_graph;
        let j = &self.replacement;
        let k = self.boundary.len();
        let mut seen = BTreeSet::new();
        for &b in &self.boundary {
            if b >= g.vertex_count() {
                return Err(FamilyError::Invalid(format!("boundary vertex {b} is not in the base graph")));
            }
            if !seen.insert(b) {
                return Err(FamilyError::Invalid(format!("boundary vertex {b} listed twice")));
            }
        }
        if j.vertex_count() < k {
            return Err(FamilyError::ReplacementTooSmall {
                replacement: j.vertex_count(),
                boundary: k,
            });
        }
        for (label, map) in [("glue_map", &self.glue_map), ("next_boundary_map", &self.next_boundary_map)] {
            if map.len() != k {
                return Err(FamilyError::Invalid(format!("{label} must map every boundary vertex")));
            }
            let mut images = BTreeSet::new();
            for &t in map {
                if t >= j.vertex_count() {
                    return Err(FamilyError::Invalid(format!("{label} target {t} is not in the replacement graph")));
                }
                if !images.insert(t) {
                    return Err(FamilyError::NotInjective(label));
                }
            }
        }
        for a in 0..k {
            for b in a + 1..k {
                let in_g = g.has_edge(self.boundary[a], self.boundary[b]);
                let in_j = j.has_edge(self.next_boundary_map[a], self.next_boundary_map[b]);
                if in_g != in_j {
                    return Err(FamilyError::BoundaryNotIsomorphic {
                        a: self.boundary[a],
                        b: self.boundary[b],
                    });
                }
            }
        }
        if self.prefix_weps.len() != self.recursion_start {
            return Err(FamilyError::Invalid(format!(
                "recursion_start {} must equal the number of prefix WEPs ({})",
                self.recursion_start,
                self.prefix_weps.len()
            )));
        }
        match self.prefix_weps.first() {
            Some(w) if w.poly().is_one() => {}
            _ => return Err(FamilyError::Invalid("prefix_weps must start with W_0 = 1".into())),
        }
        let step = j.vertex_count() as i64 - k as i64;
        if self.qubit_count.step != step {
            return Err(FamilyError::Invalid(format!(
                "qubit_count.step is {} but each step adds {step} vertices",
                self.qubit_count.step
            )));
        }
        let at_start = self.qubit_count.offset + step * self.recursion_start as i64;
        if at_start != g.vertex_count() as i64 {
            return Err(FamilyError::Invalid(format!(
                "qubit_count gives n({}) = {at_start}, but the base graph has {} vertices",
                self.recursion_start,
                g.vertex_count()
            )));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base_graph(&self) -> &Graph {
        &self.base_graph
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    /// The boundary subgraph `H`, vertices numbered by boundary position.
    pub fn boundary_graph(&self) -> Graph {
        self.base_graph.induced(&self.boundary)
    }

    pub fn replacement(&self) -> &Graph {
        &self.replacement
    }

    pub fn glue_map(&self) -> &[usize] {
        &self.glue_map
    }

    pub fn next_boundary_map(&self) -> &[usize] {
        &self.next_boundary_map
    }

    pub fn prefix_weps(&self) -> &[Wep] {
        &self.prefix_weps
    }

    pub fn recursion_start(&self) -> usize {
        self.recursion_start
    }

    pub fn qubit_law(&self) -> QubitLaw {
        self.qubit_count
    }

    /// Number of qubits of member `r`.
    pub fn qubits(&self, r: usize) -> usize {
        if r < self.recursion_start {
            self.prefix_weps[r].qubits()
        } else {
            (self.qubit_count.offset + self.qubit_count.step * r as i64) as usize
        }
    }

    pub fn to_json(&self) -> Value {
        let graph = |g: &Graph| GraphDoc {
            n: g.vertex_count(),
            edges: g.edges().map(|(a, b)| [a, b]).collect(),
        };
        let map = |m: &[usize]| -> BTreeMap<String, Value> {
            self.boundary
                .iter()
                .zip(m)
                .map(|(h, t)| (h.to_string(), Value::String(t.to_string())))
                .collect()
        };
        let doc = SpecDoc {
            name: self.name.clone(),
            base_graph: graph(&self.base_graph),
            boundary: self.boundary.clone(),
            replacement: graph(&self.replacement),
            glue_map: map(&self.glue_map),
            next_boundary_map: map(&self.next_boundary_map),
            prefix_weps: self.prefix_weps.iter().map(|w| poly_to_json(w.poly())).collect(),
            recursion_start: self.recursion_start,
            qubit_count: self.qubit_count,
        };
        serde_json::to_value(doc).expect("serializable")
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecDoc {
    name: String,
    base_graph: GraphDoc,
    boundary: Vec<usize>,
    replacement: GraphDoc,
    glue_map: BTreeMap<String, Value>,
    next_boundary_map: BTreeMap<String, Value>,
    prefix_weps: Vec<Value>,
    recursion_start: usize,
    qubit_count: QubitLaw,
}

/// Parses and validates a family spec document.
pub fn parse_family_spec(text: &str) -> Result<FamilySpec, FamilyError> {
    let doc: SpecDoc = serde_json::from_str(text).map_err(|e| FamilyError::Malformed(e.to_string()))?;
    let graph = |d: &GraphDoc| Graph::new(d.n, d.edges.iter().map(|e| (e[0], e[1])));
    let base = graph(&doc.base_graph)?;
    let replacement = graph(&doc.replacement)?;
    let positional = |label: &'static str, map: &BTreeMap<String, Value>| -> Result<Vec<usize>, FamilyError> {
        let mut parsed = BTreeMap::new();
        for (k, v) in map {
            let key: usize = k
                .trim()
                .parse()
                .map_err(|_| FamilyError::Malformed(format!("{label} key {k:?} is not a vertex index")))?;
            let value = match v {
                Value::Number(n) => n.as_u64().map(|n| n as usize),
                Value::String(s) => s.trim().parse().ok(),
                _ => None,
            }
            .ok_or_else(|| FamilyError::Malformed(format!("{label} value {v} is not a vertex index")))?;
            parsed.insert(key, value);
        }
        if parsed.len() != doc.boundary.len() || doc.boundary.iter().any(|b| !parsed.contains_key(b)) {
            return Err(FamilyError::Invalid(format!("{label} keys must be exactly the boundary vertices")));
        }
        Ok(doc.boundary.iter().map(|b| parsed[b]).collect())
    };
    let glue = positional("glue_map", &doc.glue_map)?;
    let next = positional("next_boundary_map", &doc.next_boundary_map)?;
    let prefix = doc
        .prefix_weps
        .iter()
        .map(|v| {
            let p = poly_from_json(v).map_err(|e| FamilyError::Malformed(e.to_string()))?;
            Wep::from_poly(p)
        })
        .collect::<Result<Vec<_>, _>>()?;
    FamilySpec::new(
        doc.name,
        base,
        doc.boundary,
        replacement,
        glue,
        next,
        prefix,
        doc.recursion_start,
        doc.qubit_count,
    )
}
