//! Concrete member graphs obtained by repeated cut-and-glue.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{LaurentPoly3, Var};

use super::graph::Graph;
use super::spec::FamilySpec;
use super::FamilyError;

/// Builds member `r` of the family.
///
/// Prefix members (`r < recursion_start`) only have a graph when their WEP is
/// `(x + y)^k`, i.e. `k` isolated vertices.
pub fn realize(spec: &FamilySpec, r: usize) -> Result<Graph, FamilyError> {
    if r < spec.recursion_start() {
        let wep = &spec.prefix_weps()[r];
        let k = wep.qubits();
        let isolated = (&LaurentPoly3::var(Var::X) + &LaurentPoly3::var(Var::Y)).pow(k as u32);
        return if wep.poly() == &isolated {
            Ok(Graph::empty(k))
        } else {
            Err(FamilyError::NotRealizable(r))
        };
    }

    let base = spec.base_graph();
    let mut next_id = base.vertex_count();
    let mut alive: BTreeSet<usize> = (0..next_id).collect();
    let mut edges: BTreeSet<(usize, usize)> = base.edges().collect();
    let mut boundary: Vec<usize> = spec.boundary().to_vec();
    let replacement = spec.replacement();

    for _ in spec.recursion_start()..r {
        let position: BTreeMap<usize, usize> = boundary.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        // Fresh ids for the replacement's vertices; removed ids are never reused.
        let fresh: Vec<usize> = (next_id..next_id + replacement.vertex_count()).collect();
        next_id += replacement.vertex_count();

        let mut kept = BTreeSet::new();
        for &(a, b) in &edges {
            match (position.get(&a), position.get(&b)) {
                (None, None) => {
                    kept.insert((a, b));
                }
                (Some(&i), None) => {
                    let t = fresh[spec.glue_map()[i]];
                    kept.insert((b.min(t), b.max(t)));
                }
                (None, Some(&i)) => {
                    let t = fresh[spec.glue_map()[i]];
                    kept.insert((a.min(t), a.max(t)));
                }
                (Some(_), Some(_)) => {}
            }
        }
        for (a, b) in replacement.edges() {
            kept.insert((fresh[a], fresh[b]));
        }
        for v in &boundary {
            alive.remove(v);
        }
        alive.extend(fresh.iter().copied());
        edges = kept;
        boundary = spec.next_boundary_map().iter().map(|&t| fresh[t]).collect();
    }

    let relabel: BTreeMap<usize, usize> = alive.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    Graph::new(alive.len(), edges.iter().map(|(a, b)| (relabel[a], relabel[b])))
}
