//! Transfer matrices for cut-and-glue families and their generating functions.
//!
//! A vertex state is `2 * colour + parity` (white-even, white-odd, black-even,
//! black-odd), where parity counts black neighbours already cut away. A state of an
//! ordered vertex list is the base-4 number whose most significant digit belongs to
//! position 0.

use std::collections::VecDeque;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{
    solve_linear, AlgebraError, LaurentPoly3, Monomial, PolyMatrix, RatFunc3, Rational, Var,
};
use crate::family::{FamilyError, FamilySpec, Graph, Wep};

#[derive(Debug, Error)]
pub enum TransferError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Digit of `pos` in the base-4 state `index` of a `k`-vertex list.
pub fn state_digit(index: usize, k: usize, pos: usize) -> usize {
    (index >> (2 * (k - 1 - pos))) & 3
}

fn encode(digits: impl IntoIterator<Item = usize>) -> usize {
    digits.into_iter().fold(0, |acc, d| (acc << 2) | d)
}

fn decode(index: usize, k: usize) -> (Vec<bool>, Vec<bool>) {
    (0..k)
        .map(|p| {
            let d = state_digit(index, k, p);
            (d & 2 != 0, d & 1 != 0)
        })
        .unzip()
}

/// Number of white vertices whose external parity plus black in-graph neighbours is even.
pub fn colouring_weight(g: &Graph, colours: &[bool], parities: &[bool]) -> usize {
    (0..g.vertex_count())
        .filter(|&k| {
            if colours[k] {
                return false;
            }
            let black = g.neighbours(k).into_iter().filter(|&u| colours[u]).count();
            (black + parities[k] as usize).is_multiple_of(2)
        })
        .count()
}

/// `E^{J←H}`: a `4^|J| × 4^|H|` matrix of monomials `x^Δ y^{|J|-|H|-Δ}`.
///
/// Vertices of `J` outside the image of `phi` are created with parity 0.
pub fn evolution_matrix(h: &Graph, j: &Graph, phi: &[usize]) -> PolyMatrix {
    let kh = h.vertex_count();
    let kj = j.vertex_count();
    let fresh: Vec<usize> = (0..kj).filter(|v| !phi.contains(v)).collect();
    let grow = (kj - kh) as i32;
    let mut m = PolyMatrix::zeros(1 << (2 * kj), 1 << (2 * kh));
    for hs in 0..1usize << (2 * kh) {
        let (hc, hp) = decode(hs, kh);
        let wh = colouring_weight(h, &hc, &hp) as i32;
        for mask in 0..1usize << fresh.len() {
            let mut jc = vec![false; kj];
            let mut jp = vec![false; kj];
            for (a, &t) in phi.iter().enumerate() {
                jc[t] = hc[a];
                jp[t] = hp[a];
            }
            for (b, &t) in fresh.iter().enumerate() {
                jc[t] = mask >> b & 1 == 1;
            }
            let delta = colouring_weight(j, &jc, &jp) as i32 - wh;
            let js = encode((0..kj).map(|v| 2 * jc[v] as usize + jp[v] as usize));
            m.set(js, hs, LaurentPoly3::monomial(delta, grow - delta, 0));
        }
    }
    m
}

/// `R^{H'←J}`: keeps the vertices `keep` of `j` (in that order) and folds the black
/// neighbours being cut away into their parities.
pub fn restriction_matrix(j: &Graph, keep: &[usize]) -> PolyMatrix {
    let kj = j.vertex_count();
    let mut m = PolyMatrix::zeros(1 << (2 * keep.len()), 1 << (2 * kj));
    for js in 0..1usize << (2 * kj) {
        let (jc, jp) = decode(js, kj);
        let digits = keep.iter().map(|&v| {
            let cut_black = j
                .neighbours(v)
                .into_iter()
                .filter(|u| !keep.contains(u) && jc[*u])
                .count();
            2 * jc[v] as usize + (jp[v] as usize + cut_black) % 2
        });
        m.set(encode(digits), js, LaurentPoly3::one());
    }
    m
}

/// States of `g` with zero external parity, weighted by their colouring monomial.
fn initial_states(g: &Graph) -> PolyMatrix {
    let n = g.vertex_count();
    let mut col = vec![LaurentPoly3::zero(); 1 << (2 * n)];
    let parities = vec![false; n];
    for mask in 0..1usize << n {
        let colours: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let w = colouring_weight(g, &colours, &parities) as i32;
        let idx = encode(colours.iter().map(|&c| 2 * c as usize));
        col[idx] = LaurentPoly3::monomial(w, n as i32 - w, 0);
    }
    PolyMatrix::column(col)
}

/// Transfer matrix `T`, initial vector `v` (the state vector of member `z_shift`) and prefix data.
#[derive(Debug, Clone)]
pub struct TransferSystem {
    pub t: PolyMatrix,
    pub v: PolyMatrix,
    pub prefix_weps: Vec<Wep>,
    pub z_shift: usize,
    spec: FamilySpec,
}

impl TransferSystem {
    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn qubits(&self, r: usize) -> usize {
        self.spec.qubits(r)
    }

    pub fn state_count(&self) -> usize {
        self.v.rows()
    }
}

pub fn build_transfer_system(spec: &FamilySpec) -> TransferSystem {
    let h = spec.boundary_graph();
    let e = evolution_matrix(&h, spec.replacement(), spec.glue_map());
    let r = restriction_matrix(spec.replacement(), spec.next_boundary_map());
    let v = restriction_matrix(spec.base_graph(), spec.boundary()).mul(&initial_states(spec.base_graph()));
    TransferSystem {
        t: r.mul(&e),
        v,
        prefix_weps: spec.prefix_weps().to_vec(),
        z_shift: spec.recursion_start(),
        spec: spec.clone(),
    }
}

/// States reachable from the support of `v` under `T`, in increasing order.
pub fn reachable_states(sys: &TransferSystem) -> Vec<usize> {
    let n = sys.state_count();
    let mut seen = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| !sys.v.get(i, 0).is_zero()).collect();
    for &i in &queue {
        seen[i] = true;
    }
    while let Some(j) = queue.pop_front() {
        for i in 0..n {
            if !seen[i] && !sys.t.get(i, j).is_zero() {
                seen[i] = true;
                queue.push_back(i);
            }
        }
    }
    (0..n).filter(|&i| seen[i]).collect()
}

/// The generating function `Σ_r W_r z^r` of the family.
pub fn family_gf(sys: &TransferSystem) -> Result<RatFunc3, TransferError> {
    let states = reachable_states(sys);
    let t = sys.t.submatrix(&states, &states);
    let v = sys.v.submatrix(&states, &[0]);
    let z = LaurentPoly3::var(Var::Z);
    let m = PolyMatrix::identity(states.len()).sub(&t.scale(&z));
    let sol = solve_linear(&m, &v)?;
    let mut p = LaurentPoly3::zero();
    for (r, w) in sys.prefix_weps.iter().enumerate() {
        p += &w.poly().shift(Monomial::new(0, 0, r as u32));
    }
    p = &p * &sol.denominator;
    p += &sol.component_sum().shift(Monomial::new(0, 0, sys.z_shift as u32));
    Ok(RatFunc3::new(p, sol.denominator)?)
}

fn sum_column(v: &PolyMatrix) -> LaurentPoly3 {
    v.column_entries().iter().fold(LaurentPoly3::zero(), |acc, e| acc + e)
}

/// `W_0 ..= W_{r_max}` by repeated application of `T`.
pub fn weps_by_iteration(sys: &TransferSystem, r_max: usize) -> Result<Vec<Wep>, TransferError> {
    let mut out: Vec<Wep> = sys.prefix_weps.iter().take(r_max + 1).cloned().collect();
    let mut state = sys.v.clone();
    for r in sys.z_shift..=r_max {
        if r > sys.z_shift {
            state = sys.t.mul(&state);
        }
        out.push(Wep::from_poly(sum_column(&state))?);
    }
    Ok(out)
}

pub fn wep_by_iteration(sys: &TransferSystem, r: usize) -> Result<Wep, TransferError> {
    Ok(weps_by_iteration(sys, r)?.pop().expect("at least W_0"))
}

/// `W_r(x0, y0)` for `r = 0 ..= r_max`, iterating the specialized transfer matrix.
///
/// Entries of `T` may carry negative powers of `x` or `y`; at a point where those vanish the
/// members are expanded symbolically first.
pub fn specialized_values(
    sys: &TransferSystem,
    x0: &Rational,
    y0: &Rational,
    r_max: usize,
) -> Result<Vec<Rational>, TransferError> {
    let t = match sys.t.specialize(x0, y0) {
        Ok(t) => t,
        Err(AlgebraError::ZeroIntoNegativePower(_)) => {
            return Ok(weps_by_iteration(sys, r_max)?.iter().map(|w| w.eval(x0, y0)).collect());
        }
        Err(e) => return Err(e.into()),
    };
    let mut state: Vec<Rational> = sys.v.specialize(x0, y0)?.into_iter().map(|row| row[0].clone()).collect();
    let mut out: Vec<Rational> = sys
        .prefix_weps
        .iter()
        .take(r_max + 1)
        .map(|w| w.eval(x0, y0))
        .collect();
    for r in sys.z_shift..=r_max {
        if r > sys.z_shift {
            state = t
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&state)
                        .filter(|(a, _)| !a.is_zero())
                        .fold(Rational::zero(), |acc, (a, s)| acc + a * s)
                })
                .collect();
        }
        out.push(state.iter().fold(Rational::zero(), |acc, s| acc + s));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::poly;
    use crate::family::builtin;

    fn lp(terms: &[(i64, i32, i32, u32)]) -> LaurentPoly3 {
        if terms.is_empty() {
            LaurentPoly3::zero()
        } else {
            poly(terms)
        }
    }

    #[test]
    fn weight_examples() {
        let p3 = Graph::path(3);
        assert_eq!(colouring_weight(&p3, &[false; 3], &[false; 3]), 3);
        assert_eq!(colouring_weight(&p3, &[false, true, false], &[false; 3]), 0);
        assert_eq!(colouring_weight(&Graph::empty(1), &[false], &[true]), 0);
    }

    #[test]
    fn trivial_evolution_is_identity() {
        let g = Graph::empty(1);
        assert_eq!(evolution_matrix(&g, &g, &[0]), PolyMatrix::identity(4));
        assert_eq!(restriction_matrix(&g, &[0]), PolyMatrix::identity(4));
    }

    #[test]
    fn restriction_flips_parity() {
        let r = restriction_matrix(&Graph::path(2), &[1]);
        // v black-even (2), w white-even (0): index 2*4 + 0 = 8 maps to white-odd.
        assert!(r.get(1, 8).is_one());
        assert!(r.get(0, 8).is_zero());
    }

    #[test]
    fn path_matrix_matches_display() {
        let sys = build_transfer_system(&builtin("path").unwrap());
        let x = || (1, 1, 0, 0);
        let y = || (1, 0, 1, 0);
        let want = PolyMatrix::from_rows(vec![
            vec![lp(&[x()]), lp(&[x()]), lp(&[]), lp(&[])],
            vec![lp(&[]), lp(&[]), lp(&[y()]), lp(&[y()])],
            vec![lp(&[(1, -1, 2, 0)]), lp(&[x()]), lp(&[]), lp(&[])],
            vec![lp(&[]), lp(&[]), lp(&[y()]), lp(&[y()])],
        ]);
        assert_eq!(sys.t, want);
        assert_eq!(sys.v.column_entries(), vec![lp(&[x()]), lp(&[]), lp(&[y()]), lp(&[])]);
    }

    #[test]
    fn star_matrix_is_block_diagonal() {
        let sys = build_transfer_system(&builtin("star").unwrap());
        let x = || (1, 1, 0, 0);
        let y = || (1, 0, 1, 0);
        let want = PolyMatrix::from_rows(vec![
            vec![lp(&[x()]), lp(&[x()]), lp(&[]), lp(&[])],
            vec![lp(&[(1, -1, 2, 0)]), lp(&[x()]), lp(&[]), lp(&[])],
            vec![lp(&[]), lp(&[]), lp(&[y()]), lp(&[y()])],
            vec![lp(&[]), lp(&[]), lp(&[y()]), lp(&[y()])],
        ]);
        assert_eq!(sys.t, want);
    }

    #[test]
    fn cycle_initial_vector() {
        let sys = build_transfer_system(&builtin("cycle").unwrap());
        // Listed with digit order (first colour, last colour, first parity, last parity).
        let listed = [
            (1, 3, 0, 0),
            (0, 0, 0, 0),
            (0, 0, 0, 0),
            (1, 0, 3, 0),
            (1, 0, 3, 0),
            (0, 0, 0, 0),
            (0, 0, 0, 0),
            (1, 1, 2, 0),
            (1, 0, 3, 0),
            (0, 0, 0, 0),
            (0, 0, 0, 0),
            (1, 1, 2, 0),
            (1, 1, 2, 0),
            (0, 0, 0, 0),
            (0, 0, 0, 0),
            (1, 0, 3, 0),
        ];
        for (k, &(c, ex, ey, ez)) in listed.iter().enumerate() {
            let (c1, cn, p1, pn) = (k >> 3 & 1, k >> 2 & 1, k >> 1 & 1, k & 1);
            let idx = encode([2 * c1 + p1, 2 * cn + pn]);
            let want = if c == 0 { LaurentPoly3::zero() } else { poly(&[(c, ex, ey, ez)]) };
            assert_eq!(sys.v.get(idx, 0), &want, "listed entry {k}");
        }
    }

    #[test]
    fn column_sums_count_extensions() {
        for name in crate::family::BUILTIN_NAMES {
            let sys = build_transfer_system(&builtin(name).unwrap());
            if matches!(name, "path" | "star" | "cycle" | "complete_bipartite_2" | "grid_2") {
                // No replacement vertex is cut in the step that creates it.
                assert!((0..sys.t.rows()).all(|i| (0..sys.t.cols()).all(|j| sys.t.get(i, j).len() <= 1)));
            }
            let one = Rational::from_integer(1.into());
            let t = sys.t.specialize(&one, &one).unwrap();
            let grow = sys.spec().qubit_law().step as u32;
            for j in 0..t.len() {
                let s: Rational = t.iter().map(|row| row[j].clone()).sum();
                assert_eq!(s, Rational::from_integer((1i64 << grow).into()), "{name} column {j}");
            }
            for i in 0..sys.t.rows() {
                for j in 0..sys.t.cols() {
                    for (m, c) in sys.t.get(i, j).terms() {
                        assert_eq!(m.x as i64 + m.y as i64, grow as i64);
                        assert!(crate::algebra::rational::is_integer(c) && c > &Rational::zero());
                    }
                }
            }
        }
    }

    #[test]
    fn iteration_examples() {
        let star = build_transfer_system(&builtin("star").unwrap());
        assert_eq!(wep_by_iteration(&star, 3).unwrap().poly(), &poly(&[(1, 3, 0, 0), (3, 1, 2, 0), (4, 0, 3, 0)]));
        let cycle = build_transfer_system(&builtin("cycle").unwrap());
        assert_eq!(
            wep_by_iteration(&cycle, 4).unwrap().poly(),
            &poly(&[(1, 4, 0, 0), (2, 2, 2, 0), (8, 1, 3, 0), (5, 0, 4, 0)])
        );
        assert!(wep_by_iteration(&cycle, 0).unwrap().poly().is_one());
    }
}
