//! Concentratable entanglement `C̄_r = W_r(3/4, 1/4)`.

use num_complex::Complex64;
use num_traits::One;

use crate::algebra::rational::{self, Rational};
use crate::algebra::{UniPolyZ, UniRatFunc};
use crate::transfer::{family_gf, specialized_values, TransferSystem};

use super::roots::roots_with_multiplicity;
use super::AnalysisError;

pub fn ce_point() -> (Rational, Rational) {
    (rational::ratio(3, 4), rational::ratio(1, 4))
}

/// `(C̄_r, C_r)` for `r = 0 ..= r_max`.
pub fn concentratable_entanglement_series(
    sys: &TransferSystem,
    r_max: usize,
) -> Result<Vec<(Rational, Rational)>, AnalysisError> {
    let (x, y) = ce_point();
    Ok(specialized_values(sys, &x, &y, r_max)?
        .into_iter()
        .map(|cbar| {
            let c = Rational::one() - &cbar;
            (cbar, c)
        })
        .collect())
}

pub fn concentratable_entanglement(sys: &TransferSystem, r: usize) -> Result<(Rational, Rational), AnalysisError> {
    Ok(concentratable_entanglement_series(sys, r)?.pop().expect("r_max + 1 values"))
}

#[derive(Debug, Clone)]
pub struct CeCheckRow {
    pub r: usize,
    pub exact: Rational,
    pub reconstructed: f64,
}

#[derive(Debug, Clone)]
pub struct CeCheck {
    /// The reduced generating function `C̄(z)`.
    pub function: UniRatFunc,
    pub roots: Vec<Complex64>,
    pub rows: Vec<CeCheckRow>,
    pub max_abs_error: f64,
}

/// Coefficients of `f` from its partial fractions: the polynomial part plus
/// `-R(z_i) / D'(z_i) · z_i^{-r-1}` summed over the simple roots of `D`.
pub fn residue_expansion(f: &UniRatFunc, r_max: usize) -> Result<(Vec<Complex64>, Vec<f64>), AnalysisError> {
    let roots = roots_with_multiplicity(&f.den);
    if let Some((_, m)) = roots.iter().find(|(_, m)| *m > 1) {
        return Err(AnalysisError::RepeatedRoot { multiplicity: *m });
    }
    let roots: Vec<Complex64> = roots.into_iter().map(|(z, _)| z).collect();
    let (poly_part, rem) = f.num.div_rem(&f.den);
    let dden = f.den.derivative();
    let weights: Vec<Complex64> = roots
        .iter()
        .map(|&z| -rem.eval_complex(z) / dden.eval_complex(z))
        .collect();
    let values = (0..=r_max)
        .map(|r| {
            let tail: Complex64 = roots
                .iter()
                .zip(&weights)
                .map(|(&z, &w)| w * z.powi(-(r as i32) - 1))
                .sum();
            rational::to_f64(&poly_part.coeff(r)) + tail.re
        })
        .collect();
    Ok((roots, values))
}

/// Reconstructs `C̄_r` from the residues of the specialized generating function and compares it
/// with the exact values for `r <= r_max`.
pub fn ce_closed_form_check(sys: &TransferSystem, r_max: usize) -> Result<CeCheck, AnalysisError> {
    let gf = family_gf(sys)?;
    let (x, y) = ce_point();
    let (num, den) = gf.specialize(&x, &y)?;
    ce_check_from_parts(sys, &num, &den, r_max)
}

pub fn ce_check_from_parts(
    sys: &TransferSystem,
    num: &UniPolyZ,
    den: &UniPolyZ,
    r_max: usize,
) -> Result<CeCheck, AnalysisError> {
    let function = UniRatFunc::reduced(num, den);
    let (roots, values) = residue_expansion(&function, r_max)?;
    let exact = concentratable_entanglement_series(sys, r_max)?;
    let rows: Vec<CeCheckRow> = exact
        .into_iter()
        .zip(values)
        .enumerate()
        .map(|(r, ((cbar, _), v))| CeCheckRow {
            r,
            exact: cbar,
            reconstructed: v,
        })
        .collect();
    let max_abs_error = rows
        .iter()
        .map(|row| (rational::to_f64(&row.exact) - row.reconstructed).abs())
        .fold(0.0, f64::max);
    Ok(CeCheck {
        function,
        roots,
        rows,
        max_abs_error,
    })
}

/// Radical closed form for the path family.
pub fn path_ce_closed_form(r: usize) -> f64 {
    let s5 = 5f64.sqrt();
    let e = r as i32 + 1;
    (5.0 + s5) / (5.0 * (s5 - 1.0).powi(e)) + (5.0 - s5) / (5.0 * (-1.0 - s5).powi(e))
}

/// `1/2 + 2^{-r}`, the star family's closed form.
pub fn star_ce_closed_form(r: usize) -> Rational {
    rational::ratio(1, 2) + rational::pow(&rational::ratio(1, 2), r as u32)
}

/// Lucas numbers `L_0 ..= L_r_max` (`L_0 = 2`, `L_1 = 1`).
pub fn lucas_numbers(r_max: usize) -> Vec<Rational> {
    let mut out = vec![rational::int(2), rational::int(1)];
    while out.len() <= r_max {
        let n = out.len();
        let next = &out[n - 1] + &out[n - 2];
        out.push(next);
    }
    out.truncate(r_max + 1);
    out
}

/// `(L_r + 1) / 2^r`, the cycle family's closed form.
pub fn cycle_ce_closed_form(r: usize) -> Rational {
    let l = lucas_numbers(r).pop().expect("nonempty");
    (l + Rational::one()) * rational::pow(&rational::ratio(1, 2), r as u32)
}

