//! Dominant singularities of univariate rational functions and coefficient asymptotics.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::algebra::rational::{self, Rational};
use crate::algebra::{UniPolyZ, UniRatFunc};

use super::roots::{bracket_real_root, refine_real_root, roots_with_multiplicity};
use super::AnalysisError;

/// Precision (in bits) of refined real dominant roots.
pub const ROOT_BITS: u32 = 320;

/// Relative modulus margin above which the dominant root counts as unique.
pub const UNIQUENESS_MARGIN: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct SingularityReport {
    pub dominant_root: Complex64,
    /// The dominant root to `ROOT_BITS` bits when it is certified real by an exact sign change.
    pub dominant_real: Option<Rational>,
    pub real_positive: bool,
    pub multiplicity: usize,
    /// `|z_2| / |z_*|` over distinct roots; infinite for a single root.
    pub modulus_gap: f64,
    pub all_roots: Vec<(Complex64, usize)>,
}

impl SingularityReport {
    pub fn is_unique(&self) -> bool {
        self.modulus_gap > 1.0 + UNIQUENESS_MARGIN
    }

    /// The refined dominant root if it is unique, simple and real.
    pub fn simple_real_root(&self) -> Result<&Rational, AnalysisError> {
        if !self.is_unique() {
            return Err(AnalysisError::NonUniqueDominant { gap: self.modulus_gap });
        }
        if self.multiplicity != 1 {
            return Err(AnalysisError::MultipleDominant {
                multiplicity: self.multiplicity,
            });
        }
        self.dominant_real.as_ref().ok_or(AnalysisError::NotRealDominant)
    }
}

/// Locates the root of `q` of smallest modulus and describes its neighbourhood.
pub fn dominant_singularity(q: &UniPolyZ) -> Result<SingularityReport, AnalysisError> {
    if q.coeff(0).is_zero() {
        return Err(AnalysisError::PoleAtOrigin);
    }
    let all_roots = roots_with_multiplicity(q);
    let Some(&(z, m)) = all_roots.first() else {
        return Err(AnalysisError::NoSingularity);
    };
    let modulus_gap = all_roots
        .get(1)
        .map_or(f64::INFINITY, |(z2, _)| z2.norm() / z.norm());
    let mut dominant_real = None;
    if z.im.abs() <= 1e-7 * z.norm() {
        let factor = q
            .squarefree_factors()
            .into_iter()
            .find(|(_, k)| *k == m)
            .map(|(f, _)| f)
            .expect("root came from one of the factors");
        if let Some((lo, hi)) = bracket_real_root(&factor, z.re) {
            dominant_real = Some(refine_real_root(&factor, lo, hi, ROOT_BITS));
        }
    }
    let real_positive = dominant_real.as_ref().is_some_and(|r| r > &Rational::zero());
    let dominant_root = match &dominant_real {
        Some(r) => Complex64::new(rational::to_f64(r), 0.0),
        None => z,
    };
    Ok(SingularityReport {
        dominant_root,
        dominant_real,
        real_positive,
        multiplicity: m,
        modulus_gap,
        all_roots,
    })
}

/// `-p(z_*) / q'(z_*) · z_*^{-r-1}` for a unique simple real dominant root, exactly in terms of
/// the refined root.
pub fn simple_pole_coefficient(f: &UniRatFunc, report: &SingularityReport, r: usize) -> Result<Rational, AnalysisError> {
    let z = report.simple_real_root()?;
    let residue = residue_factor(f, z)?;
    Ok(residue * rational::pow(&z.recip(), r as u32 + 1))
}

/// `-p(z_*) / q'(z_*)`.
pub fn residue_factor(f: &UniRatFunc, z: &Rational) -> Result<Rational, AnalysisError> {
    let pz = f.num.eval(z);
    if pz.is_zero() {
        return Err(AnalysisError::VanishingResidue);
    }
    let dq = f.den.derivative().eval(z);
    if dq.is_zero() {
        return Err(AnalysisError::MultipleDominant { multiplicity: 2 });
    }
    Ok(-pz / dq)
}

/// General leading term `(-1)^m m p(z_*) / q^{(m)}(z_*) · r^{m-1} z_*^{-r-m}`.
///
/// Only runs when the caller opts in to trusting the reported multiplicity; the dominant root must
/// still be unique and real.
pub fn leading_term_general(
    f: &UniRatFunc,
    report: &SingularityReport,
    r: usize,
    trust_multiplicity: bool,
) -> Result<Rational, AnalysisError> {
    if !trust_multiplicity {
        return simple_pole_coefficient(f, report, r);
    }
    if !report.is_unique() {
        return Err(AnalysisError::NonUniqueDominant { gap: report.modulus_gap });
    }
    let z = report.dominant_real.as_ref().ok_or(AnalysisError::NotRealDominant)?;
    let m = report.multiplicity;
    let mut dq = f.den.clone();
    for _ in 0..m {
        dq = dq.derivative();
    }
    let denom = dq.eval(z);
    if denom.is_zero() {
        return Err(AnalysisError::MultipleDominant { multiplicity: m + 1 });
    }
    let pz = f.num.eval(z);
    let sign = if m.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    Ok(sign * rational::int(m as i64) * pz / denom
        * rational::pow(&rational::int(r as i64), m as u32 - 1)
        * rational::pow(&z.recip(), (r + m) as u32))
}
