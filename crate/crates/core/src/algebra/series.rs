use num_traits::Zero;

use super::poly::LaurentPoly3;
use super::ratfunc::RatFunc3;
use super::AlgebraError;

/// Series coefficients `W_0 ..= W_{r_max}` of `f` in `z`, each a polynomial in `x` and `y`.
///
/// Uses the recurrence `W_r = (p_r - Σ_{i≥1} q_i W_{r-i}) / q_0`, which requires
/// `q(x, y, 0)` to be a nonzero constant.
pub fn series_coefficients(f: &RatFunc3, r_max: usize) -> Result<Vec<LaurentPoly3>, AlgebraError> {
    let q = f.denominator().z_coefficients();
    let q0 = q
        .first()
        .and_then(LaurentPoly3::as_constant)
        .filter(|c| !c.is_zero())
        .ok_or(AlgebraError::NonConstantLeadingDenominator)?;
    let inv = q0.recip();
    let p = f.numerator();
    let mut out: Vec<LaurentPoly3> = Vec::with_capacity(r_max + 1);
    for r in 0..=r_max {
        let mut acc = p.coeff_z(r as u32);
        for (i, qi) in q.iter().enumerate().skip(1).take(r) {
            if !qi.is_zero() {
                acc -= &(qi * &out[r - i]);
            }
        }
        out.push(acc.scale(&inv));
    }
    Ok(out)
}
