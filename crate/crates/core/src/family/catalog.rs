//! Built-in families.

use crate::algebra::LaurentPoly3;

use super::graph::Graph;
use super::spec::{FamilySpec, QubitLaw};
use super::wep::Wep;
use super::FamilyError;

pub const BUILTIN_NAMES: [&str; 7] = [
    "path",
    "star",
    "cycle",
    "pusteblume",
    "complete_bipartite_2",
    "joint_squares",
    "grid_2",
];

/// `(x + y)^k`, the WEP of `k` isolated vertices.
fn isolated(k: u32) -> Wep {
    let p = &LaurentPoly3::var(crate::algebra::Var::X) + &LaurentPoly3::var(crate::algebra::Var::Y);
    Wep::from_poly(p.pow(k)).expect("valid WEP")
}

fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("catalog graphs are valid")
}

pub fn builtin(name: &str) -> Result<FamilySpec, FamilyError> {
    let edge = || g(2, &[(0, 1)]);
    match name {
        // Replace the last vertex by two connected vertices; the new last vertex is the fresh one.
        "path" => FamilySpec::new(
            name,
            Graph::empty(1),
            vec![0],
            edge(),
            vec![0],
            vec![1],
            vec![isolated(0)],
            1,
            QubitLaw { offset: 0, step: 1 },
        ),
        // Replace the centre by two connected vertices; the centre keeps its role.
        "star" => FamilySpec::new(
            name,
            Graph::empty(1),
            vec![0],
            edge(),
            vec![0],
            vec![0],
            vec![isolated(0)],
            1,
            QubitLaw { offset: 0, step: 1 },
        ),
        // Replace the adjacent first/last pair (a, c) of C_n by the 3-path a-b-c; b becomes the new last.
        "cycle" => FamilySpec::new(
            name,
            Graph::cycle(3),
            vec![0, 2],
            Graph::path(3),
            vec![0, 2],
            vec![0, 1],
            vec![isolated(0), isolated(1), isolated(2)],
            3,
            QubitLaw { offset: 0, step: 1 },
        ),
        // A star on four vertices whose leaf 3 grows into a star.
        "pusteblume" => FamilySpec::new(
            name,
            Graph::star(4),
            vec![3],
            edge(),
            vec![0],
            vec![0],
            vec![isolated(0)],
            1,
            QubitLaw { offset: 3, step: 1 },
        ),
        // K_{2,m}: the two hubs persist and each step adds one vertex joined to both.
        "complete_bipartite_2" => FamilySpec::new(
            name,
            Graph::empty(2),
            vec![0, 1],
            g(3, &[(0, 2), (1, 2)]),
            vec![0, 1],
            vec![0, 1],
            vec![isolated(0), isolated(1)],
            2,
            QubitLaw { offset: 0, step: 1 },
        ),
        // 4-cycles chained through shared vertices; vertex 3 is opposite vertex 0.
        "joint_squares" => FamilySpec::new(
            name,
            g(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]),
            vec![3],
            g(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]),
            vec![0],
            vec![3],
            vec![isolated(0)],
            1,
            QubitLaw { offset: 1, step: 3 },
        ),
        // Ladder: the last rung (0, 1) is replaced by a square whose far rung (2, 3) is the new end.
        "grid_2" => FamilySpec::new(
            name,
            edge(),
            vec![0, 1],
            g(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]),
            vec![0, 1],
            vec![2, 3],
            vec![isolated(0)],
            1,
            QubitLaw { offset: 0, step: 2 },
        ),
        _ => Err(FamilyError::UnknownFamily(name.to_string())),
    }
}

pub fn builtins() -> Vec<FamilySpec> {
    BUILTIN_NAMES
        .iter()
        .map(|n| builtin(n).expect("catalog entries are valid"))
        .collect()
}
