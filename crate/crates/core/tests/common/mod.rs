//! Shared fixtures for the integration tests.

#![allow(dead_code)]

pub type Terms = &'static [(i64, i32, i32, u32)];

/// Closed-form numerators and denominators as `(coefficient, e_x, e_y, e_z)` terms.
pub const GOLDEN: &[(&str, Terms, Terms)] = &[
    (
        "path",
        &[(1, 0, 0, 0), (2, 0, 2, 2), (-2, 1, 1, 2)],
        &[(1, 0, 0, 0), (-1, 0, 1, 1), (-1, 0, 3, 3), (-1, 1, 0, 1), (1, 2, 1, 3)],
    ),
    (
        "cycle",
        &[(1, 0, 0, 0), (2, 0, 3, 3), (-2, 2, 1, 3)],
        &[(1, 0, 0, 0), (-1, 0, 1, 1), (-1, 0, 3, 3), (-1, 1, 0, 1), (1, 2, 1, 3)],
    ),
    (
        "star",
        &[(2, 0, 0, 0), (-2, 0, 1, 1), (-2, 0, 3, 3), (-2, 1, 0, 1), (2, 2, 1, 3)],
        &[(2, 0, 0, 0), (-4, 0, 1, 1), (-2, 0, 2, 2), (4, 0, 3, 3), (-4, 1, 0, 1), (8, 1, 1, 2), (2, 2, 0, 2), (-4, 2, 1, 3)],
    ),
    (
        "complete_bipartite_2",
        &[(1, 0, 0, 0), (-1, 0, 1, 1), (-2, 0, 2, 2), (3, 0, 3, 3), (-2, 0, 4, 4), (-2, 0, 5, 5), (-1, 1, 0, 1), (2, 1, 1, 2), (-2, 1, 3, 4), (2, 1, 4, 5), (-3, 2, 1, 3), (2, 2, 2, 4), (2, 2, 3, 5), (2, 3, 1, 4), (-2, 3, 2, 5)],
        &[(1, 0, 0, 0), (-2, 0, 1, 1), (-1, 0, 2, 2), (2, 0, 3, 3), (-2, 1, 0, 1), (4, 1, 1, 2), (1, 2, 0, 2), (-2, 2, 1, 3)],
    ),
    (
        "pusteblume",
        &[(1, 0, 0, 0), (-2, 0, 1, 1), (-1, 0, 2, 2), (2, 0, 3, 3), (9, 0, 4, 1), (-8, 0, 5, 2), (-5, 0, 6, 3), (-2, 1, 0, 1), (4, 1, 1, 2), (-7, 1, 4, 2), (-6, 1, 5, 3), (1, 2, 0, 2), (-2, 2, 1, 3), (6, 2, 2, 1), (-6, 2, 3, 2), (2, 2, 4, 3), (-8, 3, 2, 2), (4, 3, 3, 3), (1, 4, 0, 1), (-2, 4, 1, 2), (3, 4, 2, 3), (-1, 5, 0, 2), (2, 5, 1, 3)],
        &[(1, 0, 0, 0), (-2, 0, 1, 1), (-1, 0, 2, 2), (2, 0, 3, 3), (-2, 1, 0, 1), (4, 1, 1, 2), (1, 2, 0, 2), (-2, 2, 1, 3)],
    ),
    (
        "joint_squares",
        &[(-1, 0, 0, 0), (3, 0, 3, 1), (-5, 0, 4, 1), (2, 0, 6, 2), (-2, 0, 7, 2), (3, 1, 2, 1), (-8, 1, 3, 1), (3, 1, 5, 2), (-5, 1, 6, 2), (1, 2, 1, 1), (-2, 2, 2, 1), (-3, 2, 5, 2), (1, 3, 0, 1), (-2, 3, 3, 2), (2, 3, 4, 2), (-1, 4, 0, 1), (-2, 4, 2, 2), (4, 4, 3, 2), (-1, 5, 1, 2), (3, 5, 2, 2), (1, 6, 1, 2)],
        &[(-1, 0, 0, 0), (3, 0, 3, 1), (2, 0, 6, 2), (3, 1, 2, 1), (3, 1, 5, 2), (1, 2, 1, 1), (1, 3, 0, 1), (-2, 3, 3, 2), (-2, 4, 2, 2), (-1, 5, 1, 2)],
    ),
    (
        "grid_2",
        &[(-1, 0, 0, 0), (4, 0, 4, 2), (3, 0, 6, 3), (-4, 0, 10, 5), (-8, 1, 3, 2), (8, 1, 9, 5), (4, 2, 2, 2), (-6, 2, 4, 3), (4, 2, 8, 5), (-16, 3, 7, 5), (3, 4, 2, 3), (4, 4, 6, 5), (8, 5, 5, 5), (-4, 6, 4, 5)],
        &[(-1, 0, 0, 0), (3, 0, 2, 1), (-2, 0, 6, 3), (-3, 0, 8, 4), (1, 0, 12, 6), (1, 2, 0, 1), (4, 2, 4, 3), (5, 2, 6, 4), (-4, 2, 10, 6), (-2, 4, 2, 3), (-1, 4, 4, 4), (6, 4, 8, 6), (-1, 6, 2, 4), (-4, 6, 6, 6), (1, 8, 4, 6)],
    ),
];

use graph_wep::algebra::poly::poly;
use graph_wep::algebra::{LaurentPoly3, PolyMatrix, RatFunc3};
use graph_wep::family::builtin;
use graph_wep::transfer::{build_transfer_system, family_gf, TransferSystem};

pub fn system(name: &str) -> TransferSystem {
    build_transfer_system(&builtin(name).unwrap())
}

pub fn gf(sys: &TransferSystem) -> RatFunc3 {
    family_gf(sys).unwrap()
}

pub fn golden(name: &str) -> RatFunc3 {
    let (_, p, q) = GOLDEN.iter().find(|(n, _, _)| *n == name).unwrap();
    RatFunc3::new(poly(p), poly(q)).unwrap()
}

fn entry(terms: &[(i64, i32, i32, u32)]) -> LaurentPoly3 {
    if terms.is_empty() {
        LaurentPoly3::zero()
    } else {
        poly(terms)
    }
}

const X: (i64, i32, i32, u32) = (1, 1, 0, 0);
const Y: (i64, i32, i32, u32) = (1, 0, 1, 0);
const Y2_OVER_X: (i64, i32, i32, u32) = (1, -1, 2, 0);

/// The path transfer matrix over states (we, wo, be, bo).
pub fn path_display() -> PolyMatrix {
    PolyMatrix::from_rows(vec![
        vec![entry(&[X]), entry(&[X]), entry(&[]), entry(&[])],
        vec![entry(&[]), entry(&[]), entry(&[Y]), entry(&[Y])],
        vec![entry(&[Y2_OVER_X]), entry(&[X]), entry(&[]), entry(&[])],
        vec![entry(&[]), entry(&[]), entry(&[Y]), entry(&[Y])],
    ])
}

/// The star transfer matrix: one block per colour of the centre.
pub fn star_display() -> PolyMatrix {
    PolyMatrix::from_rows(vec![
        vec![entry(&[X]), entry(&[X]), entry(&[]), entry(&[])],
        vec![entry(&[Y2_OVER_X]), entry(&[X]), entry(&[]), entry(&[])],
        vec![entry(&[]), entry(&[]), entry(&[Y]), entry(&[Y])],
        vec![entry(&[]), entry(&[]), entry(&[Y]), entry(&[Y])],
    ])
}
