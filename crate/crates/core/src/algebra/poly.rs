//! Sparse trivariate Laurent polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], so iteration order (and every
//! rendering derived from it) is lexicographic in `(e_x, e_y, e_z)` and byte-stable.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{self, Rational};
use super::AlgebraError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
        }
    }
}

/// Exponent triple `x^x y^y z^z`. `z` is never negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub x: i32,
    pub y: i32,
    pub z: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0, z: 0 };

    pub fn new(x: i32, y: i32, z: u32) -> Self {
        Monomial { x, y, z }
    }

    pub fn exponent(&self, var: Var) -> i64 {
        match var {
            Var::X => self.x as i64,
            Var::Y => self.y as i64,
            Var::Z => self.z as i64,
        }
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            x: self.x + other.x,
            y: self.y + other.y,
            z: self.z + other.z,
        }
    }

    /// Quotient in the Laurent sense; `None` if the z exponent would go negative.
    fn div(self, other: Monomial) -> Option<Monomial> {
        Some(Monomial {
            x: self.x - other.x,
            y: self.y - other.y,
            z: self.z.checked_sub(other.z)?,
        })
    }

    pub fn is_laurent(&self) -> bool {
        self.x < 0 || self.y < 0
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly3 {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rational::int(c))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly3 { terms }
    }

    pub fn monomial(x: i32, y: i32, z: u32) -> Self {
        Self::term(Rational::one(), Monomial::new(x, y, z))
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Self::monomial(1, 0, 0),
            Var::Y => Self::monomial(0, 1, 0),
            Var::Z => Self::monomial(0, 0, 1),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(One::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Constant term if the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// The single term if the polynomial is a monomial times a coefficient.
    pub fn as_term(&self) -> Option<(Monomial, Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c.clone()))
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(Monomial::is_laurent)
    }

    pub fn min_exponent(&self, var: Var) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(var)).min()
    }

    pub fn max_exponent(&self, var: Var) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    pub fn degree_z(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.z).max()
    }

    /// Total degree in `x` and `y` of every term, if all terms agree.
    pub fn homogeneous_degree_xy(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|m| m.x as i64 + m.y as i64);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly3 {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn shift(&self, by: Monomial) -> Self {
        LaurentPoly3 {
            terms: self.terms.iter().map(|(m, v)| (m.mul(by), v.clone())).collect(),
        }
    }

    /// Multiplication by `x^dx y^dy`, possibly negative.
    pub fn shift_xy(&self, dx: i32, dy: i32) -> Self {
        self.shift(Monomial::new(dx, dy, 0))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes a rational value for one variable.
    pub fn substitute(&self, var: Var, value: &Rational) -> Result<Self, AlgebraError> {
        let mut powers: HashMap<i64, Rational> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e < 0 && value.is_zero() {
                return Err(AlgebraError::ZeroIntoNegativePower(var.name()));
            }
            let factor = match powers.get(&e) {
                Some(f) => f.clone(),
                None => {
                    let f = rational::pow_signed(value, e)?;
                    powers.insert(e, f.clone());
                    f
                }
            };
            let mut reduced = *m;
            match var {
                Var::X => reduced.x = 0,
                Var::Y => reduced.y = 0,
                Var::Z => reduced.z = 0,
            }
            out.add_term(reduced, c * factor);
        }
        Ok(out)
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational, z: &Rational) -> Result<Rational, AlgebraError> {
        let p = self.substitute(Var::X, x)?.substitute(Var::Y, y)?.substitute(Var::Z, z)?;
        Ok(p.as_constant().expect("all variables substituted"))
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut lowered = *m;
            match var {
                Var::X => lowered.x -= 1,
                Var::Y => lowered.y -= 1,
                Var::Z => lowered.z -= 1,
            }
            out.add_term(lowered, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Coefficient of `z^k`, as a polynomial in `x` and `y`.
    pub fn coeff_z(&self, k: u32) -> Self {
        LaurentPoly3 {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.z == k)
                .map(|(m, c)| (Monomial::new(m.x, m.y, 0), c.clone()))
                .collect(),
        }
    }

    /// Splits into coefficients of `z^0 ..= z^deg`.
    pub fn z_coefficients(&self) -> Vec<Self> {
        let Some(deg) = self.degree_z() else {
            return Vec::new();
        };
        let mut out = vec![Self::zero(); deg as usize + 1];
        for (m, c) in &self.terms {
            out[m.z as usize].terms.insert(Monomial::new(m.x, m.y, 0), c.clone());
        }
        out
    }

    /// Greatest monomial dividing every term (exponents may be negative).
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |acc, m| Monomial {
            x: acc.x.min(m.x),
            y: acc.y.min(m.y),
            z: acc.z.min(m.z),
        }))
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        rational::lcm_denominators(self.terms.values())
    }

    /// Gcd of the numerators, assuming integer coefficients.
    pub fn integer_content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(rational::is_integer)
    }

    /// Exact division. Returns `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = divisor.as_term() {
            let inv = c.recip();
            let mut terms = BTreeMap::new();
            for (tm, tc) in &self.terms {
                terms.insert(tm.div(m)?, tc * &inv);
            }
            return Some(LaurentPoly3 { terms });
        }
        // Newton-box bounds on the quotient's exponents.
        let bound = |v: Var| -> (i64, i64) {
            (
                self.min_exponent(v).unwrap() - divisor.min_exponent(v).unwrap(),
                self.max_exponent(v).unwrap() - divisor.max_exponent(v).unwrap(),
            )
        };
        let bx = bound(Var::X);
        let by = bound(Var::Y);
        let bz = bound(Var::Z);
        let inside = |m: &Monomial| {
            let within = |(lo, hi): (i64, i64), e: i64| lo <= e && e <= hi;
            within(bx, m.x as i64) && within(by, m.y as i64) && within(bz, m.z as i64)
        };
        let (dm, dc) = divisor.leading().map(|(m, c)| (*m, c.clone()))?;
        let dc_inv = dc.recip();
        let mut remainder = self.clone();
        let mut quotient = Self::zero();
        while let Some((rm, rc)) = remainder.leading().map(|(m, c)| (*m, c.clone())) {
            let qm = rm.div(dm)?;
            if !inside(&qm) {
                return None;
            }
            let qc = rc * &dc_inv;
            for (m, c) in &divisor.terms {
                remainder.add_term(m.mul(qm), -(c * &qc));
            }
            quotient.terms.insert(qm, qc);
        }
        Some(quotient)
    }

    /// Human-readable form such as `x^2 - 3*x*y^-1*z + 1/2`.
    pub fn to_plain_string(&self) -> String {
        self.render(false)
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // Highest terms first reads more naturally.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let factors = monomial_factors(m, latex);
            let coeff = if latex && !abs.denom().is_one() {
                format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
            } else {
                abs.to_string()
            };
            if factors.is_empty() {
                out.push_str(&coeff);
            } else {
                if !abs.is_one() {
                    out.push_str(&coeff);
                    if !latex {
                        out.push('*');
                    }
                }
                out.push_str(&factors.join(if latex { " " } else { "*" }));
            }
        }
        out
    }
}

fn monomial_factors(m: &Monomial, latex: bool) -> Vec<String> {
    let mut out = Vec::new();
    for (name, e) in [("x", m.x as i64), ("y", m.y as i64), ("z", m.z as i64)] {
        match e {
            0 => {}
            1 => out.push(name.to_string()),
            _ if latex => out.push(format!("{name}^{{{e}}}")),
            _ => out.push(format!("{name}^{e}")),
        }
    }
    out
}

impl fmt::Display for LaurentPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain_string())
    }
}

impl fmt::Debug for LaurentPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly3({})", self.to_plain_string())
    }
}

impl Add<&LaurentPoly3> for &LaurentPoly3 {
    type Output = LaurentPoly3;
    fn add(self, rhs: &LaurentPoly3) -> LaurentPoly3 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly3> for LaurentPoly3 {
    fn add_assign(&mut self, rhs: &LaurentPoly3) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub<&LaurentPoly3> for &LaurentPoly3 {
    type Output = LaurentPoly3;
    fn sub(self, rhs: &LaurentPoly3) -> LaurentPoly3 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&LaurentPoly3> for LaurentPoly3 {
    fn sub_assign(&mut self, rhs: &LaurentPoly3) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Neg for &LaurentPoly3 {
    type Output = LaurentPoly3;
    fn neg(self) -> LaurentPoly3 {
        LaurentPoly3 {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul<&LaurentPoly3> for &LaurentPoly3 {
    type Output = LaurentPoly3;
    fn mul(self, rhs: &LaurentPoly3) -> LaurentPoly3 {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly3::zero();
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = ca * cb;
                acc.entry(ma.mul(*mb))
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        LaurentPoly3 {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<LaurentPoly3> for LaurentPoly3 {
            type Output = LaurentPoly3;
            fn $method(self, rhs: LaurentPoly3) -> LaurentPoly3 {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly3> for LaurentPoly3 {
            type Output = LaurentPoly3;
            fn $method(self, rhs: &LaurentPoly3) -> LaurentPoly3 {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly3 {
    type Output = LaurentPoly3;
    fn neg(self) -> LaurentPoly3 {
        -&self
    }
}

/// Convenience constructor used throughout tests: `poly(&[(c, ex, ey, ez), ...])`.
pub fn poly(terms: &[(i64, i32, i32, u32)]) -> LaurentPoly3 {
    LaurentPoly3::from_terms(
        terms
            .iter()
            .map(|&(c, x, y, z)| (Monomial::new(x, y, z), rational::int(c))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;

    fn x() -> LaurentPoly3 {
        LaurentPoly3::var(Var::X)
    }
    fn y() -> LaurentPoly3 {
        LaurentPoly3::var(Var::Y)
    }

    #[test]
    fn difference_of_squares() {
        let p = (x() + y()) * (x() - y());
        assert_eq!(p, poly(&[(1, 2, 0, 0), (-1, 0, 2, 0)]));
    }

    #[test]
    fn derivative_of_bell_wep() {
        let w = poly(&[(1, 2, 0, 0), (3, 0, 2, 0)]);
        assert_eq!(w.derivative(Var::Y), poly(&[(6, 0, 1, 0)]));
        assert_eq!(poly(&[(1, -1, 2, 0)]).derivative(Var::X), poly(&[(-1, -2, 2, 0)]));
    }

    #[test]
    fn substitution_into_bell_wep() {
        let w = poly(&[(1, 2, 0, 0), (3, 0, 2, 0)]);
        let v = w
            .substitute(Var::X, &ratio(3, 4))
            .unwrap()
            .substitute(Var::Y, &ratio(1, 4))
            .unwrap();
        assert_eq!(v.as_constant().unwrap(), ratio(3, 4));
    }

    #[test]
    fn zero_into_negative_power_rejected() {
        let p = poly(&[(1, -1, 2, 0)]);
        assert!(matches!(
            p.substitute(Var::X, &Rational::zero()),
            Err(AlgebraError::ZeroIntoNegativePower("x"))
        ));
        assert!(p.substitute(Var::Y, &Rational::zero()).unwrap().is_zero());
    }

    #[test]
    fn exact_division_and_rejection() {
        let a = x() + y();
        let b = x() - y();
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!((&prod + &LaurentPoly3::one()).div_exact(&a).is_none());
        let laurent = poly(&[(1, -1, 2, 0), (1, 1, 0, 1)]);
        let prod = &laurent * &a;
        assert_eq!(prod.div_exact(&laurent).unwrap(), a);
    }

    #[test]
    fn rendering_is_stable() {
        let p = poly(&[(1, 2, 0, 0), (-3, 1, -1, 1), (2, 0, 0, 0)]);
        assert_eq!(p.to_plain_string(), "x^2 - 3*x*y^-1*z + 2");
        assert_eq!(p.to_latex(), "x^{2} - 3x y^{-1} z + 2");
    }
}
