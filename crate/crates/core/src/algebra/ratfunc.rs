use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{LaurentPoly3, Monomial, Var};
use super::rational::Rational;
use super::unipoly::UniPolyZ;
use super::AlgebraError;

/// A rational function `p / q` in `x, y, z`.
///
/// Stored normalized: both sides are true polynomials with integer coefficients,
/// no monomial divides both, the joint integer content is 1, and when `q(x, y, 0)`
/// is a constant it is positive. No polynomial gcd is taken, so two equal
/// functions may differ in representation; compare them with [`RatFunc3::equals`].
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc3 {
    p: LaurentPoly3,
    q: LaurentPoly3,
}

impl RatFunc3 {
    pub fn new(p: LaurentPoly3, q: LaurentPoly3) -> Result<Self, AlgebraError> {
        normalize(p, q)
    }

    pub fn from_poly(p: LaurentPoly3) -> Self {
        normalize(p, LaurentPoly3::one()).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &LaurentPoly3 {
        &self.p
    }

    pub fn denominator(&self) -> &LaurentPoly3 {
        &self.q
    }

    /// Cross-multiplication equality test.
    pub fn equals(&self, other: &RatFunc3) -> bool {
        (&self.p * &other.q - &other.p * &self.q).is_zero()
    }

    /// Partial derivative by the quotient rule (not re-reduced).
    pub fn derivative(&self, var: Var) -> RatFunc3 {
        let num = &self.p.derivative(var) * &self.q - &self.p * &self.q.derivative(var);
        let den = &self.q * &self.q;
        normalize(num, den).expect("square of nonzero denominator")
    }

    pub fn substitute(&self, var: Var, value: &Rational) -> Result<RatFunc3, AlgebraError> {
        let q = self.q.substitute(var, value)?;
        if q.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        normalize(self.p.substitute(var, value)?, q)
    }

    /// Univariate numerator and denominator in `z` after fixing `x` and `y`.
    pub fn specialize(&self, x: &Rational, y: &Rational) -> Result<(UniPolyZ, UniPolyZ), AlgebraError> {
        let uni = |p: &LaurentPoly3| -> Result<UniPolyZ, AlgebraError> {
            let s = p.substitute(Var::X, x)?.substitute(Var::Y, y)?;
            let deg = s.degree_z().unwrap_or(0) as usize;
            let mut coeffs = vec![Rational::zero(); deg + 1];
            for (m, c) in s.terms() {
                coeffs[m.z as usize] = c.clone();
            }
            Ok(UniPolyZ::new(coeffs))
        };
        let num = uni(&self.p)?;
        let den = uni(&self.q)?;
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok((num, den))
    }

    pub fn to_latex(&self) -> String {
        format!("\\frac{{{}}}{{{}}}", self.p.to_latex(), self.q.to_latex())
    }
}

impl fmt::Display for RatFunc3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.p, self.q)
    }
}

impl fmt::Debug for RatFunc3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc3({self})")
    }
}

/// Clears Laurent exponents and common monomials, removes integer content, fixes the sign.
pub fn normalize(p: LaurentPoly3, q: LaurentPoly3) -> Result<RatFunc3, AlgebraError> {
    if q.is_zero() {
        return Err(AlgebraError::ZeroDenominator);
    }
    if p.is_zero() {
        return Ok(RatFunc3 {
            p,
            q: LaurentPoly3::one(),
        });
    }
    let mp = p.monomial_content().expect("nonzero");
    let mq = q.monomial_content().expect("nonzero");
    let common = Monomial::new(mp.x.min(mq.x), mp.y.min(mq.y), mp.z.min(mq.z));
    let unshift = Monomial::new(-common.x, -common.y, 0);
    let lower_z = |poly: &LaurentPoly3| {
        LaurentPoly3::from_terms(poly.terms().map(|(m, c)| {
            (Monomial::new(m.x, m.y, m.z - common.z), c.clone())
        }))
    };
    let mut p = lower_z(&p.shift(unshift));
    let mut q = lower_z(&q.shift(unshift));

    let den = num_integer::lcm(p.denominator_lcm(), q.denominator_lcm());
    let scale = Rational::from_integer(den);
    p = p.scale(&scale);
    q = q.scale(&scale);
    let content = num_integer::gcd(p.integer_content(), q.integer_content());
    if !content.is_one() {
        let inv = Rational::new(BigInt::one(), content);
        p = p.scale(&inv);
        q = q.scale(&inv);
    }

    let q0 = q.coeff_z(0);
    let sign_source = match q0.as_constant() {
        Some(c) if !c.is_zero() => c,
        _ => q.leading().map(|(_, c)| c.clone()).expect("nonzero"),
    };
    if sign_source.is_negative() {
        p = -p;
        q = -q;
    }
    Ok(RatFunc3 { p, q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::poly;

    #[test]
    fn clears_laurent_monomials() {
        let f = RatFunc3::new(poly(&[(1, -1, 2, 0)]), poly(&[(1, -1, 0, 0)])).unwrap();
        assert_eq!(f.numerator(), &poly(&[(1, 0, 2, 0)]));
        assert_eq!(f.denominator(), &LaurentPoly3::one());
    }

    #[test]
    fn removes_integer_content() {
        let f = RatFunc3::new(poly(&[(2, 1, 0, 0), (2, 0, 1, 0)]), LaurentPoly3::from_int(2)).unwrap();
        assert_eq!(f.numerator(), &poly(&[(1, 1, 0, 0), (1, 0, 1, 0)]));
        assert!(f.denominator().is_one());
    }

    #[test]
    fn sign_makes_constant_term_positive() {
        let f = RatFunc3::new(poly(&[(-1, 0, 0, 0)]), poly(&[(-1, 0, 0, 0), (1, 1, 0, 1)])).unwrap();
        assert_eq!(f.denominator(), &poly(&[(1, 0, 0, 0), (-1, 1, 0, 1)]));
        assert_eq!(f.numerator(), &LaurentPoly3::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RatFunc3::new(LaurentPoly3::one(), LaurentPoly3::zero()),
            Err(AlgebraError::ZeroDenominator)
        ));
    }

    #[test]
    fn equality_ignores_common_scalars() {
        let p = poly(&[(1, 1, 0, 0), (3, 0, 1, 1)]);
        let q = poly(&[(1, 0, 0, 0), (-1, 0, 1, 1)]);
        let f = RatFunc3::new(p.clone(), q.clone()).unwrap();
        let g = RatFunc3::new(p.scale(&Rational::from_integer(2.into())), q.scale(&Rational::from_integer(2.into()))).unwrap();
        assert!(f.equals(&g));
    }
}
