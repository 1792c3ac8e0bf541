//! Brute-force sector lengths of a concrete graph state.
//!
//! [`sld_bruteforce_colouring`] counts admissible vertices over all black/white
//! colourings; [`sld_bruteforce_stabilizer`] multiplies out every element of the
//! stabilizer group. The two share no code beyond the graph itself.

use rayon::prelude::*;
use thiserror::Error;

use crate::family::{Graph, Sld};

pub const DEFAULT_CAP: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the brute-force cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

fn check_cap(g: &Graph, cap: usize) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    if n > cap || n > 63 {
        return Err(OracleError::CapExceeded { n, cap: cap.min(63) });
    }
    Ok(n)
}

fn merge(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn into_sld(counts: Vec<u64>) -> Sld {
    Sld::from_counts(&counts).expect("a full enumeration always yields a valid SLD")
}

/// `A_{n-w}` counts the colourings with `w` admissible vertices.
pub fn sld_bruteforce_colouring(g: &Graph, cap: usize) -> Result<Sld, OracleError> {
    let n = check_cap(g, cap)?;
    let masks: Vec<u64> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let counts = (0..1u64 << n)
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut hist, black| {
                let admissible = (0..n)
                    .filter(|&v| black >> v & 1 == 0 && (masks[v] & black).count_ones().is_multiple_of(2))
                    .count();
                hist[n - admissible] += 1;
                hist
            },
        )
        .reduce(|| vec![0u64; n + 1], merge);
    Ok(into_sld(counts))
}

/// `A_k` counts the stabilizer elements of weight `k`, products of `K_i = X_i Π_{j∈N(i)} Z_j`.
pub fn sld_bruteforce_stabilizer(g: &Graph, cap: usize) -> Result<Sld, OracleError> {
    let n = check_cap(g, cap)?;
    let mut z_of = vec![0u64; n];
    for (a, b) in g.edges() {
        z_of[a] |= 1 << b;
        z_of[b] |= 1 << a;
    }
    let counts = (0..1u64 << n)
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut hist, subset| {
                let x_bits = subset;
                let mut z_bits = 0u64;
                let mut rest = subset;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    z_bits ^= z_of[i];
                    rest &= rest - 1;
                }
                hist[(x_bits | z_bits).count_ones() as usize] += 1;
                hist
            },
        )
        .reduce(|| vec![0u64; n + 1], merge);
    Ok(into_sld(counts))
}
