//! Dense matrices of Laurent polynomials and fraction-free linear solving.

use std::fmt;

use num_traits::Zero;

use super::poly::{LaurentPoly3, Var};
use super::ratfunc::RatFunc3;
use super::rational::Rational;
use super::AlgebraError;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly3>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![LaurentPoly3::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly3::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly3>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn column(values: Vec<LaurentPoly3>) -> Self {
        PolyMatrix {
            rows: values.len(),
            cols: 1,
            entries: values,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly3 {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: LaurentPoly3) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &LaurentPoly3) {
        self.entries[i * self.cols + j] += value;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly3] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Entries of a column vector (or the first column).
    pub fn column_entries(&self) -> Vec<LaurentPoly3> {
        (0..self.rows).map(|i| self.get(i, 0).clone()).collect()
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = PolyMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, factor: &LaurentPoly3) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn sub(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }

    /// Entrywise substitution of both `x` and `y`.
    pub fn specialize(&self, x: &Rational, y: &Rational) -> Result<Vec<Vec<Rational>>, AlgebraError> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let e = self.get(i, j);
                        if e.is_zero() {
                            return Ok(Rational::zero());
                        }
                        let s = e.substitute(Var::X, x)?.substitute(Var::Y, y)?;
                        s.as_constant().ok_or(AlgebraError::NotConstant)
                    })
                    .collect()
            })
            .collect()
    }

    /// Principal submatrix on the given index set (rows and columns).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Solution `u = numerators / denominator` of a polynomial linear system.
#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub numerators: Vec<LaurentPoly3>,
    /// Determinant of the (row-scaled) system matrix, up to sign.
    pub denominator: LaurentPoly3,
}

impl LinearSolution {
    pub fn components(&self) -> Result<Vec<RatFunc3>, AlgebraError> {
        self.numerators
            .iter()
            .map(|n| RatFunc3::new(n.clone(), self.denominator.clone()))
            .collect()
    }

    /// Sum of all components over the shared denominator.
    pub fn component_sum(&self) -> LaurentPoly3 {
        self.numerators
            .iter()
            .fold(LaurentPoly3::zero(), |acc, n| acc + n)
    }
}

/// Solves `m · u = b` exactly by Bareiss fraction-free elimination.
///
/// Each row is first multiplied by a monomial so that no negative exponents remain,
/// which leaves the solution unchanged and keeps every division inside the polynomial ring.
pub fn solve_linear(m: &PolyMatrix, b: &PolyMatrix) -> Result<LinearSolution, AlgebraError> {
    let n = m.rows();
    if m.cols() != n || b.rows() != n || b.cols() != 1 {
        return Err(AlgebraError::Dimension(format!(
            "expected square system with a column right-hand side, got {}x{} and {}x{}",
            m.rows(),
            m.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if n == 0 {
        return Ok(LinearSolution {
            numerators: Vec::new(),
            denominator: LaurentPoly3::one(),
        });
    }
    // Augmented matrix, one Vec per row.
    let mut a: Vec<Vec<LaurentPoly3>> = (0..n)
        .map(|i| {
            let mut row: Vec<LaurentPoly3> = m.row(i).to_vec();
            row.push(b.get(i, 0).clone());
            let (dx, dy) = row
                .iter()
                .filter(|e| !e.is_zero())
                .fold((0i64, 0i64), |(mx, my), e| {
                    (
                        mx.min(e.min_exponent(Var::X).unwrap()),
                        my.min(e.min_exponent(Var::Y).unwrap()),
                    )
                });
            if dx < 0 || dy < 0 {
                row.iter().map(|e| e.shift_xy(-dx as i32, -dy as i32)).collect()
            } else {
                row
            }
        })
        .collect();

    let mut prev = LaurentPoly3::one();
    for k in 0..n {
        let pivot_row = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].len())
            .ok_or(AlgebraError::Singular)?;
        a.swap(k, pivot_row);
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            let factor = a[i][k].clone();
            for j in k + 1..=n {
                let t = &(&pivot * &a[i][j]) - &(&factor * &a[k][j]);
                a[i][j] = if prev.is_one() {
                    t
                } else {
                    t.div_exact(&prev).ok_or(AlgebraError::InexactDivision)?
                };
            }
            a[i][k] = LaurentPoly3::zero();
        }
        prev = pivot;
    }

    let det = a[n - 1][n - 1].clone();
    // X_i = det · u_i, all polynomials by Cramer's rule.
    let mut numerators = vec![LaurentPoly3::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &det * &a[i][n];
        for j in i + 1..n {
            if !a[i][j].is_zero() {
                acc -= &(&a[i][j] * &numerators[j]);
            }
        }
        numerators[i] = acc.div_exact(&a[i][i]).ok_or(AlgebraError::InexactDivision)?;
    }
    Ok(LinearSolution {
        numerators,
        denominator: det,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::poly;

    #[test]
    fn identity_system() {
        let b = PolyMatrix::column(vec![
            poly(&[(1, 1, 0, 0)]),
            LaurentPoly3::zero(),
            poly(&[(1, 0, 1, 0)]),
            LaurentPoly3::zero(),
        ]);
        let sol = solve_linear(&PolyMatrix::identity(4), &b).unwrap();
        let comps = sol.components().unwrap();
        for (c, want) in comps.iter().zip(b.column_entries()) {
            assert!(c.equals(&RatFunc3::from_poly(want)));
        }
    }

    #[test]
    fn singular_system_reported() {
        let one = LaurentPoly3::one();
        let m = PolyMatrix::from_rows(vec![vec![one.clone(), one.clone()], vec![one.clone(), one.clone()]]);
        let b = PolyMatrix::column(vec![one.clone(), LaurentPoly3::zero()]);
        assert!(matches!(solve_linear(&m, &b), Err(AlgebraError::Singular)));
    }

    #[test]
    fn residual_vanishes_on_symbolic_system() {
        // [[x, y^-1 z], [1 + z, y]] u = [1, x]
        let m = PolyMatrix::from_rows(vec![
            vec![poly(&[(1, 1, 0, 0)]), poly(&[(1, 0, -1, 1)])],
            vec![poly(&[(1, 0, 0, 0), (1, 0, 0, 1)]), poly(&[(1, 0, 1, 0)])],
        ]);
        let b = PolyMatrix::column(vec![LaurentPoly3::one(), poly(&[(1, 1, 0, 0)])]);
        let sol = solve_linear(&m, &b).unwrap();
        for i in 0..2 {
            let mut lhs = LaurentPoly3::zero();
            for j in 0..2 {
                lhs += &(m.get(i, j) * &sol.numerators[j]);
            }
            assert!((lhs - &sol.denominator * b.get(i, 0)).is_zero());
        }
    }
}
