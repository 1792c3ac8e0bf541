//! Fidelity under uniform depolarizing noise, `F_r(λ) = W_r(1/2, λ/2)`.

use num_traits::{One, Signed};

use crate::algebra::rational::{self, Rational};
use crate::algebra::{RatFunc3, UniRatFunc};
use crate::transfer::{family_gf, specialized_values, TransferSystem};

use super::singularity::{dominant_singularity, residue_factor, SingularityReport};
use super::AnalysisError;

fn check_lambda(lambda: &Rational) -> Result<(), AnalysisError> {
    if lambda.is_negative() || lambda > &Rational::one() {
        return Err(AnalysisError::LambdaOutOfRange(lambda.to_string()));
    }
    Ok(())
}

pub fn fidelity_point(lambda: &Rational) -> (Rational, Rational) {
    (rational::ratio(1, 2), lambda * rational::ratio(1, 2))
}

/// Exact `F_0 ..= F_{r_max}`.
pub fn fidelity_exact_series(sys: &TransferSystem, lambda: &Rational, r_max: usize) -> Result<Vec<Rational>, AnalysisError> {
    check_lambda(lambda)?;
    let (x, y) = fidelity_point(lambda);
    Ok(specialized_values(sys, &x, &y, r_max)?)
}

pub fn fidelity_exact(sys: &TransferSystem, lambda: &Rational, r: usize) -> Result<Rational, AnalysisError> {
    Ok(fidelity_exact_series(sys, lambda, r)?.pop().expect("r_max + 1 values"))
}

/// The single-pole approximation `F_r ≈ c · z_*^{-r}` at a fixed noise level.
#[derive(Debug, Clone)]
pub struct FidelityAsymptotics {
    pub lambda: Rational,
    /// Reduced `F(z; λ)`.
    pub function: UniRatFunc,
    pub report: SingularityReport,
    pub z_star: Rational,
    /// `-p(z_*) / q'(z_*)`.
    pub residue: Rational,
}

impl FidelityAsymptotics {
    pub fn new(gf: &RatFunc3, lambda: &Rational) -> Result<Self, AnalysisError> {
        check_lambda(lambda)?;
        let (x, y) = fidelity_point(lambda);
        let (num, den) = gf.specialize(&x, &y)?;
        let function = UniRatFunc::reduced(&num, &den);
        let report = dominant_singularity(&function.den)?;
        let z_star = report.simple_real_root()?.clone();
        let residue = residue_factor(&function, &z_star)?;
        Ok(FidelityAsymptotics {
            lambda: lambda.clone(),
            function,
            report,
            z_star,
            residue,
        })
    }

    /// `F_r^approx` in terms of the refined root.
    pub fn approx(&self, r: usize) -> Rational {
        &self.residue * rational::pow(&self.z_star.recip(), r as u32 + 1)
    }

    pub fn approx_f64(&self, r: usize) -> f64 {
        rational::to_f64(&self.approx(r))
    }
}

/// `-p(z_*) / q'(z_*) · z_*^{-r-1}` for `q(1/2, λ/2, z)`.
pub fn fidelity_asymptotic(sys: &TransferSystem, lambda: &Rational, r: usize) -> Result<f64, AnalysisError> {
    let gf = family_gf(sys)?;
    Ok(FidelityAsymptotics::new(&gf, lambda)?.approx_f64(r))
}

#[derive(Debug, Clone)]
pub struct FidelityRow {
    pub r: usize,
    pub exact: Rational,
    pub approx: Rational,
}

impl FidelityRow {
    pub fn delta(&self) -> f64 {
        rational::to_f64(&(&self.exact - &self.approx).abs())
    }

    pub fn ratio(&self) -> f64 {
        rational::to_f64(&(&self.exact / &self.approx))
    }
}

/// Exact and asymptotic fidelity side by side for `r = 0 ..= r_max`.
pub fn fidelity_table(
    sys: &TransferSystem,
    gf: &RatFunc3,
    lambda: &Rational,
    r_max: usize,
) -> Result<(FidelityAsymptotics, Vec<FidelityRow>), AnalysisError> {
    let asym = FidelityAsymptotics::new(gf, lambda)?;
    let exact = fidelity_exact_series(sys, lambda, r_max)?;
    let rows = exact
        .into_iter()
        .enumerate()
        .map(|(r, exact)| FidelityRow {
            r,
            approx: asym.approx(r),
            exact,
        })
        .collect();
    Ok((asym, rows))
}
