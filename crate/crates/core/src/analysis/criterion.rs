//! The purity-based entanglement criterion `Q = Q_1 - Q_2 < 0` and its critical noise level.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::rational::{self, Rational};
use crate::algebra::{LaurentPoly3, RatFunc3, UniPolyZ, UniRatFunc, Var};
use crate::family::Wep;
use crate::transfer::{family_gf, weps_by_iteration, TransferSystem};

use super::singularity::dominant_singularity;
use super::AnalysisError;

pub const DEFAULT_TOL: f64 = 1e-10;
const MU_GRID: u32 = 1024;
const LAMBDA_GRID: u32 = 128;

/// Exact `(Q_1, Q_2, Q)` with `Q_1 = Σ (n-k) λ^{2k} A_k` and `Q_2 = Σ k λ^{2k} A_k`.
pub fn criterion_q_for(wep: &Wep, lambda: &Rational) -> (Rational, Rational, Rational) {
    let n = wep.qubits();
    let mu = lambda * lambda;
    let mut q1 = Rational::zero();
    let mut q2 = Rational::zero();
    for (k, a) in wep.to_sld().lengths().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = Rational::from_integer(BigInt::from(a.clone())) * rational::pow(&mu, k as u32);
        q1 += &term * rational::int((n - k) as i64);
        q2 += &term * rational::int(k as i64);
    }
    let q = &q1 - &q2;
    (q1, q2, q)
}

pub fn criterion_q(sys: &TransferSystem, lambda: &Rational, r: usize) -> Result<(Rational, Rational, Rational), AnalysisError> {
    let weps = weps_by_iteration(sys, r)?;
    Ok(criterion_q_for(&weps[r], lambda))
}

/// Integer coefficients of `Q(μ) = Σ_k (n - 2k) A_k μ^k`, lowest degree first.
pub fn criterion_polynomial(wep: &Wep) -> Vec<BigInt> {
    let n = wep.qubits() as i64;
    wep.to_sld()
        .lengths()
        .iter()
        .enumerate()
        .map(|(k, a)| BigInt::from(a.clone()) * (n - 2 * k as i64))
        .collect()
}

/// Sign of an integer polynomial at a rational point; double precision when the
/// rounding error bound allows it, exact otherwise.
fn sign_at(coeffs: &[BigInt], coeffs_f64: &[f64], mu: &Rational) -> i8 {
    let m = rational::to_f64(mu);
    let mut val = 0.0f64;
    let mut mag = 0.0f64;
    for c in coeffs_f64.iter().rev() {
        val = val * m + c;
        mag = mag * m + c.abs();
    }
    let bound = mag * f64::EPSILON * 4.0 * (coeffs.len() as f64 + 1.0);
    if val.is_finite() && val.abs() > bound {
        return if val > 0.0 { 1 } else { -1 };
    }
    let exact = coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * mu + Rational::from_integer(c.clone()));
    if exact.is_zero() {
        0
    } else if exact.is_positive() {
        1
    } else {
        -1
    }
}

/// Largest `λ ∈ [0, 1]` with `Q(λ²) = 0`, provided `Q(1) < 0`; `None` otherwise.
///
/// The grid scan runs downward from `μ = 1` and the bracket is bisected until its width in
/// `λ` is below `tol`.
pub fn critical_lambda_for(wep: &Wep, tol: f64) -> Option<f64> {
    let coeffs = criterion_polynomial(wep);
    let coeffs_f64: Vec<f64> = coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    let one = Rational::one();
    if sign_at(&coeffs, &coeffs_f64, &one) >= 0 {
        return None;
    }
    let grid = |i: u32| rational::ratio(i as i64, MU_GRID as i64);
    let mut hi = one;
    let mut lo = None;
    for i in (0..MU_GRID).rev() {
        let mu = grid(i);
        match sign_at(&coeffs, &coeffs_f64, &mu) {
            0 => return Some(rational::to_f64(&mu).sqrt()),
            1 => {
                lo = Some(mu);
                break;
            }
            _ => hi = mu,
        }
    }
    let mut lo = lo?;
    let two = rational::int(2);
    while rational::to_f64(&hi).sqrt() - rational::to_f64(&lo).sqrt() > tol / 4.0 {
        let mid = (&lo + &hi) / &two;
        match sign_at(&coeffs, &coeffs_f64, &mid) {
            0 => return Some(rational::to_f64(&mid).sqrt()),
            1 => lo = mid,
            _ => hi = mid,
        }
    }
    Some(rational::to_f64(&((lo + hi) / two)).sqrt())
}

pub fn critical_lambda(sys: &TransferSystem, r: usize, tol: f64) -> Result<Option<f64>, AnalysisError> {
    let weps = weps_by_iteration(sys, r)?;
    Ok(critical_lambda_for(&weps[r], tol))
}

/// `λ_c(r)` for every `r` in `r_values`, sharing one transfer iteration.
pub fn critical_lambda_sweep(
    sys: &TransferSystem,
    r_values: &[usize],
    tol: f64,
) -> Result<Vec<CriticalMember>, AnalysisError> {
    let r_max = r_values.iter().copied().max().unwrap_or(0);
    let weps = weps_by_iteration(sys, r_max)?;
    Ok(r_values
        .par_iter()
        .map(|&r| CriticalMember {
            r,
            qubits: weps[r].qubits(),
            lambda_c: critical_lambda_for(&weps[r], tol),
            q_coefficients: criterion_polynomial(&weps[r]),
        })
        .collect())
}

/// The large-`r` limit of `Q_{1,r} / Q_{2,r}`, `∂_x q / (λ² ∂_y q)` at `(1, λ², z_*)`.
#[derive(Debug, Clone)]
pub struct AsymptoticCriterion {
    gf: RatFunc3,
    dq_dx: LaurentPoly3,
    dq_dy: LaurentPoly3,
}

fn specialize_uni(p: &LaurentPoly3, x: &Rational, y: &Rational) -> Result<UniPolyZ, AnalysisError> {
    let s = p.substitute(Var::X, x)?.substitute(Var::Y, y)?;
    let mut coeffs = vec![Rational::zero(); s.degree_z().map_or(0, |d| d as usize + 1)];
    for (m, c) in s.terms() {
        coeffs[m.z as usize] = c.clone();
    }
    Ok(UniPolyZ::new(coeffs))
}

impl AsymptoticCriterion {
    pub fn new(gf: &RatFunc3) -> Self {
        AsymptoticCriterion {
            gf: gf.clone(),
            dq_dx: gf.denominator().derivative(Var::X),
            dq_dy: gf.denominator().derivative(Var::Y),
        }
    }

    /// Simple real dominant root of the reduced specialization at `(x, y)`, with the unreduced denominator.
    fn dominant_root(&self, x: &Rational, y: &Rational) -> Result<(Rational, UniPolyZ, UniRatFunc), AnalysisError> {
        let (num, den) = self.gf.specialize(x, y)?;
        let reduced = UniRatFunc::reduced(&num, &den);
        let report = dominant_singularity(&reduced.den)?;
        let z = report.simple_real_root()?.clone();
        if reduced.num.eval(&z).is_zero() {
            return Err(AnalysisError::VanishingResidue);
        }
        Ok((z, den, reduced))
    }

    /// `g(λ)`; the state is asymptotically certified entangled when `g(λ) < 1`.
    ///
    /// When `z_*` is a repeated root of the unreduced denominator (a spurious common factor of
    /// numerator and denominator vanishes there), the equivalent ratio `∂_x z_* / (λ² ∂_y z_*)`
    /// of the root's own partial derivatives is taken by central differences instead.
    pub fn ratio(&self, lambda: &Rational) -> Result<f64, AnalysisError> {
        if lambda.is_zero() || lambda.is_negative() || lambda > &Rational::one() {
            return Err(AnalysisError::LambdaOutOfRange(lambda.to_string()));
        }
        let x = Rational::one();
        let mu = lambda * lambda;
        let (z, den, reduced) = self.dominant_root(&x, &mu)?;
        let (cofactor, _) = den.div_rem(&reduced.den);
        let eps = Rational::new(BigInt::one(), BigInt::one() << 200usize);
        let (a, b) = (cofactor.eval(&(&z - &eps)), cofactor.eval(&(&z + &eps)));
        if !a.is_zero() && !b.is_zero() && a.is_positive() == b.is_positive() {
            let dx = specialize_uni(&self.dq_dx, &x, &mu)?.eval(&z);
            let dy = specialize_uni(&self.dq_dy, &x, &mu)?.eval(&z);
            if !dy.is_zero() {
                return Ok(rational::to_f64(&(dx / (&mu * dy))));
            }
        }
        let h = Rational::new(BigInt::one(), BigInt::one() << 64usize);
        let root = |x: &Rational, y: &Rational| self.dominant_root(x, y).map(|(z, _, _)| z);
        let dzdx = root(&(&x + &h), &mu)? - root(&(&x - &h), &mu)?;
        let dzdy = root(&x, &(&mu + &h))? - root(&x, &(&mu - &h))?;
        if dzdy.is_zero() {
            return Err(AnalysisError::VanishingResidue);
        }
        Ok(rational::to_f64(&(dzdx / (mu * dzdy))))
    }

    /// Largest `λ` with `g(λ) = 1`, found by a downward grid scan and bisection.
    ///
    /// The scan starts just below `λ = 1`, where distinct poles may collide. If the asymptotic
    /// criterion certifies nothing there (`g ≥ 1`), the threshold is 1.
    pub fn critical_lambda(&self, tol: f64) -> Result<f64, AnalysisError> {
        let grid = |i: u32| rational::ratio(i as i64, LAMBDA_GRID as i64);
        let top = Rational::one() - Rational::new(BigInt::one(), BigInt::one() << 12usize);
        if self.ratio(&top)? >= 1.0 {
            return Ok(1.0);
        }
        let mut hi = top;
        let mut lo = None;
        for i in (1..LAMBDA_GRID).rev() {
            let lambda = grid(i);
            if self.ratio(&lambda)? >= 1.0 {
                lo = Some(lambda);
                break;
            }
            hi = lambda;
        }
        let mut lo = lo.ok_or(AnalysisError::NoBracket)?;
        let two = rational::int(2);
        while rational::to_f64(&(&hi - &lo)) > tol / 4.0 {
            let mid = (&lo + &hi) / &two;
            if self.ratio(&mid)? >= 1.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(rational::to_f64(&((lo + hi) / two)))
    }
}

pub fn critical_lambda_asymptotic(sys: &TransferSystem, tol: f64) -> Result<f64, AnalysisError> {
    AsymptoticCriterion::new(&family_gf(sys)?).critical_lambda(tol)
}

#[derive(Debug, Clone)]
pub struct CriticalMember {
    pub r: usize,
    pub qubits: usize,
    pub lambda_c: Option<f64>,
    pub q_coefficients: Vec<BigInt>,
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub members: Vec<CriticalMember>,
    pub lambda_c_approx: f64,
}

pub fn criterion_report(sys: &TransferSystem, gf: &RatFunc3, r_values: &[usize], tol: f64) -> Result<CriterionResult, AnalysisError> {
    Ok(CriterionResult {
        members: critical_lambda_sweep(sys, r_values, tol)?,
        lambda_c_approx: AsymptoticCriterion::new(gf).critical_lambda(tol)?,
    })
}
