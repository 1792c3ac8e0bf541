//! Quantities derived from a family's generating function: concentratable entanglement,
//! depolarizing fidelity and its asymptotics, and the critical noise level of the
//! purity-based entanglement criterion.

pub mod criterion;
pub mod entanglement;
pub mod fidelity;
pub mod roots;
pub mod singularity;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::transfer::TransferError;

pub use criterion::{
    criterion_polynomial, criterion_q, criterion_q_for, criterion_report, critical_lambda, critical_lambda_asymptotic,
    critical_lambda_for, critical_lambda_sweep, AsymptoticCriterion, CriterionResult, CriticalMember, DEFAULT_TOL,
};
pub use entanglement::{
    ce_closed_form_check, concentratable_entanglement, concentratable_entanglement_series, CeCheck,
};
pub use fidelity::{
    fidelity_asymptotic, fidelity_exact, fidelity_exact_series, fidelity_point, fidelity_table, FidelityAsymptotics, FidelityRow,
};
pub use singularity::{dominant_singularity, SingularityReport};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Transfer(#[from] TransferError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("denominator vanishes at z = 0")]
    PoleAtOrigin,
    #[error("denominator has no roots; the coefficients are eventually zero")]
    NoSingularity,
    #[error("dominant singularity is not unique (modulus gap {gap})")]
    NonUniqueDominant { gap: f64 },
    #[error("dominant singularity has multiplicity {multiplicity}")]
    MultipleDominant { multiplicity: usize },
    #[error("dominant singularity is not real")]
    NotRealDominant,
    #[error("numerator vanishes at the dominant singularity")]
    VanishingResidue,
    #[error("denominator has a root of multiplicity {multiplicity}")]
    RepeatedRoot { multiplicity: usize },
    #[error("noise parameter {0} is outside [0, 1]")]
    LambdaOutOfRange(String),
    #[error("no sign change of the asymptotic criterion in (0, 1]")]
    NoBracket,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{self, ratio};
    use crate::family::{builtin, Wep};
    use crate::transfer::{build_transfer_system, family_gf};

    fn sys(name: &str) -> crate::transfer::TransferSystem {
        build_transfer_system(&builtin(name).unwrap())
    }

    #[test]
    fn ce_examples() {
        assert_eq!(concentratable_entanglement(&sys("star"), 5).unwrap().0, ratio(17, 32));
        assert_eq!(concentratable_entanglement(&sys("cycle"), 6).unwrap().0, ratio(19, 64));
        let (cbar, c) = concentratable_entanglement(&sys("path"), 1).unwrap();
        assert_eq!(cbar, ratio(1, 1));
        assert_eq!(c, ratio(0, 1));
    }

    #[test]
    fn ce_residue_roots() {
        let check = ce_closed_form_check(&sys("path"), 30).unwrap();
        assert_eq!(check.roots.len(), 2);
        assert!(check.max_abs_error < 1e-12);
        let check = ce_closed_form_check(&sys("star"), 30).unwrap();
        let mut moduli: Vec<f64> = check.roots.iter().map(|z| z.norm()).collect();
        moduli.sort_by(f64::total_cmp);
        assert!((moduli[0] - 1.0).abs() < 1e-12 && (moduli[1] - 2.0).abs() < 1e-12);
        let check = ce_closed_form_check(&sys("cycle"), 30).unwrap();
        assert_eq!(check.roots.len(), 3);
    }

    #[test]
    fn fidelity_examples() {
        let path = sys("path");
        assert_eq!(fidelity_exact(&path, &ratio(1, 1), 7).unwrap(), ratio(1, 1));
        let lam = ratio(2, 7);
        let want = (ratio(1, 1) + ratio(3, 1) * &lam * &lam) / rational::int(4);
        assert_eq!(fidelity_exact(&path, &lam, 2).unwrap(), want);
        assert_eq!(fidelity_exact(&path, &ratio(0, 1), 5).unwrap(), ratio(1, 32));
        assert!(fidelity_exact(&path, &ratio(3, 2), 5).is_err());
    }

    #[test]
    fn fidelity_asymptotics_at_full_visibility() {
        let gf = family_gf(&sys("cycle")).unwrap();
        let asym = FidelityAsymptotics::new(&gf, &ratio(1, 1)).unwrap();
        assert_eq!(asym.z_star, ratio(1, 1));
        assert_eq!(asym.approx(40), ratio(1, 1));
    }

    #[test]
    fn star_fidelity_asymptotic_half_noise() {
        let s = sys("star");
        let exact = rational::to_f64(&fidelity_exact(&s, &ratio(1, 2), 40).unwrap());
        let approx = fidelity_asymptotic(&s, &ratio(1, 2), 40).unwrap();
        assert!((exact / approx - 1.0).abs() < 1e-6);
    }

    #[test]
    fn bell_criterion() {
        let bell = Wep::from_poly(crate::algebra::poly::poly(&[(1, 2, 0, 0), (3, 0, 2, 0)])).unwrap();
        let lc = critical_lambda_for(&bell, 1e-12).unwrap();
        assert!((lc - 3f64.powf(-0.25)).abs() < 1e-10);
        let (_, _, q) = criterion_q_for(&bell, &ratio(1, 2));
        assert_eq!(q, ratio(2, 1) - ratio(6, 16));
        let (_, _, q0) = criterion_q_for(&bell, &ratio(0, 1));
        assert_eq!(q0, ratio(2, 1));
        assert_eq!(critical_lambda(&sys("path"), 2, DEFAULT_TOL).unwrap(), critical_lambda(&sys("star"), 2, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn no_threshold_for_product_state() {
        let single = Wep::from_poly(crate::algebra::poly::poly(&[(1, 1, 0, 0), (1, 0, 1, 0)])).unwrap();
        assert_eq!(critical_lambda_for(&single, DEFAULT_TOL), None);
    }
}
