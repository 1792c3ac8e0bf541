//! Univariate polynomials in `z` with rational coefficients.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::rational::{self, Rational};

/// Coefficients low degree first; trailing zeros are always trimmed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPolyZ {
    coeffs: Vec<Rational>,
}

impl UniPolyZ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPolyZ { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * z + c)
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.coeffs_f64().iter().rev().fold(0.0, |acc, c| acc * z + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs_f64()
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, &c| acc * z + c)
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational::to_f64).collect()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rational::int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Square-free factorization (Yun): `self = c · Π f_i^i`, returned as `(f_i, i)`.
    pub fn squarefree_factors(&self) -> Vec<(UniPolyZ, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Makes the constant coefficient 1 when it is nonzero, else the leading coefficient 1.
    pub fn normalized(&self) -> Self {
        match self.coeffs.first() {
            Some(c0) if !c0.is_zero() => self.scale(&c0.recip()),
            _ => self.monic(),
        }
    }

    pub fn sign_at(&self, z: &Rational) -> i8 {
        let v = self.eval(z);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for UniPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})*z"),
                _ => format!("({c})*z^{k}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for UniPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPolyZ[{self}]")
    }
}

/// A univariate rational function in lowest terms, with `den(0) = 1` when defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniRatFunc {
    pub num: UniPolyZ,
    pub den: UniPolyZ,
}

impl UniRatFunc {
    /// Cancels the gcd of numerator and denominator.
    pub fn reduced(num: &UniPolyZ, den: &UniPolyZ) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return UniRatFunc {
                num: UniPolyZ::zero(),
                den: UniPolyZ::constant(Rational::one()),
            };
        }
        let g = num.gcd(den);
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let s = match den.coeffs.first() {
            Some(c0) if !c0.is_zero() => c0.recip(),
            _ => den.leading().expect("nonzero").recip(),
        };
        UniRatFunc {
            num: num.scale(&s),
            den: den.scale(&s),
        }
    }

    /// Taylor coefficients `a_0 ..= a_r_max` via the denominator recurrence; requires `den(0) ≠ 0`.
    pub fn series(&self, r_max: usize) -> Vec<Rational> {
        let d0 = self.den.coeff(0);
        assert!(!d0.is_zero(), "pole at the origin");
        let inv = d0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(r_max + 1);
        for r in 0..=r_max {
            let mut acc = self.num.coeff(r);
            let top = self.den.degree().unwrap_or(0).min(r);
            for i in 1..=top {
                acc -= self.den.coeff(i) * &out[r - i];
            }
            out.push(acc * &inv);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;

    #[test]
    fn gcd_finds_common_root() {
        // 2z^2 - 8 and -z^3 + 8z - 8 share the root z = 2.
        let p = UniPolyZ::from_ints(&[-8, 0, 2]);
        let q = UniPolyZ::from_ints(&[-8, 8, 0, -1]);
        assert_eq!(p.gcd(&q), UniPolyZ::from_ints(&[-2, 1]));
        let r = UniRatFunc::reduced(&p, &q);
        assert_eq!(r.den, UniPolyZ::new(vec![ratio(1, 1), ratio(-1, 2), ratio(-1, 4)]));
    }

    #[test]
    fn squarefree_decomposition() {
        // (z - 1)^2 (z + 2)
        let f = UniPolyZ::from_ints(&[-1, 1]).mul(&UniPolyZ::from_ints(&[-1, 1])).mul(&UniPolyZ::from_ints(&[2, 1]));
        let parts = f.squarefree_factors();
        assert_eq!(parts, vec![(UniPolyZ::from_ints(&[2, 1]), 1), (UniPolyZ::from_ints(&[-1, 1]), 2)]);
    }

    #[test]
    fn geometric_series() {
        let f = UniRatFunc::reduced(&UniPolyZ::from_ints(&[1]), &UniPolyZ::from_ints(&[1, -2]));
        assert_eq!(f.series(4), vec![ratio(1, 1), ratio(2, 1), ratio(4, 1), ratio(8, 1), ratio(16, 1)]);
    }

    #[test]
    fn division_identity() {
        let a = UniPolyZ::from_ints(&[3, -1, 4, 1, 5]);
        let b = UniPolyZ::from_ints(&[2, 7, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }
}
