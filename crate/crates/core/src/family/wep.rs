//! Sector-length distributions and weight enumerator polynomials.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::algebra::rational::{self, Rational};
use crate::algebra::{LaurentPoly3, Monomial};

use super::FamilyError;

/// Sector lengths `A_0 ..= A_n` of an `n`-qubit state.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sld {
    lengths: Vec<BigUint>,
}

impl Sld {
    pub fn new(lengths: Vec<BigUint>) -> Result<Self, FamilyError> {
        if lengths.is_empty() {
            return Err(FamilyError::Invalid("an SLD needs at least A_0".into()));
        }
        if !lengths[0].is_one() {
            return Err(FamilyError::Invalid(format!("A_0 must be 1, got {}", lengths[0])));
        }
        let n = lengths.len() - 1;
        let total: BigUint = lengths.iter().sum();
        if total != BigUint::one() << n {
            return Err(FamilyError::Invalid(format!("sector lengths sum to {total}, expected 2^{n}")));
        }
        Ok(Sld { lengths })
    }

    pub fn from_counts(counts: &[u64]) -> Result<Self, FamilyError> {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn qubits(&self) -> usize {
        self.lengths.len() - 1
    }

    pub fn lengths(&self) -> &[BigUint] {
        &self.lengths
    }

    pub fn get(&self, k: usize) -> &BigUint {
        &self.lengths[k]
    }
}

/// Homogeneous weight enumerator `W(x, y) = Σ A_k x^{n-k} y^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wep {
    qubits: usize,
    poly: LaurentPoly3,
}

impl Wep {
    /// Validates homogeneity and nonnegative integer coefficients. The zero-qubit WEP is `1`.
    pub fn from_poly(poly: LaurentPoly3) -> Result<Self, FamilyError> {
        if poly.is_zero() {
            return Err(FamilyError::Invalid("a WEP cannot be zero".into()));
        }
        if poly.has_negative_exponents() || poly.max_exponent(crate::algebra::Var::Z) != Some(0) {
            return Err(FamilyError::Invalid(format!("{poly} is not a polynomial in x and y")));
        }
        let n = poly
            .homogeneous_degree_xy()
            .ok_or_else(|| FamilyError::Invalid(format!("{poly} is not homogeneous")))?;
        for (_, c) in poly.terms() {
            if rational::to_biguint(c).is_none() {
                return Err(FamilyError::Invalid(format!("{poly} has a coefficient {c} that is not a nonnegative integer")));
            }
        }
        Ok(Wep { qubits: n as usize, poly })
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn poly(&self) -> &LaurentPoly3 {
        &self.poly
    }

    pub fn into_poly(self) -> LaurentPoly3 {
        self.poly
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in self.poly.terms() {
            acc += c * rational::pow(x, m.x as u32) * rational::pow(y, m.y as u32);
        }
        acc
    }

    pub fn to_sld(&self) -> Sld {
        sld_from_wep(self)
    }
}

pub fn wep_from_sld(sld: &Sld) -> Wep {
    let n = sld.qubits() as i32;
    let poly = LaurentPoly3::from_terms(sld.lengths().iter().enumerate().map(|(k, a)| {
        (
            Monomial::new(n - k as i32, k as i32, 0),
            Rational::from_integer(BigInt::from(a.clone())),
        )
    }));
    Wep { qubits: n as usize, poly }
}

pub fn sld_from_wep(wep: &Wep) -> Sld {
    let mut lengths = vec![BigUint::zero(); wep.qubits + 1];
    for (m, c) in wep.poly.terms() {
        lengths[m.y as usize] = rational::to_biguint(c).expect("validated on construction");
    }
    Sld { lengths }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::poly;

    #[test]
    fn bell_pair_conversions() {
        let sld = Sld::from_counts(&[1, 0, 3]).unwrap();
        let w = wep_from_sld(&sld);
        assert_eq!(w.poly(), &poly(&[(1, 2, 0, 0), (3, 0, 2, 0)]));
        assert_eq!(sld_from_wep(&w), sld);
    }

    #[test]
    fn empty_graph_convention() {
        let sld = Sld::from_counts(&[1]).unwrap();
        assert!(wep_from_sld(&sld).poly().is_one());
    }

    #[test]
    fn path_three_sld() {
        let w = Wep::from_poly(poly(&[(1, 3, 0, 0), (3, 1, 2, 0), (4, 0, 3, 0)])).unwrap();
        assert_eq!(w.to_sld(), Sld::from_counts(&[1, 0, 3, 4]).unwrap());
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(Wep::from_poly(poly(&[(1, 2, 0, 0), (1, 0, 1, 0)])).is_err());
        assert!(Wep::from_poly(poly(&[(1, 2, 0, 0), (-1, 0, 2, 0)])).is_err());
        assert!(Sld::from_counts(&[1, 1, 1]).is_err());
        assert!(Sld::from_counts(&[2, 2]).is_err());
    }
}
