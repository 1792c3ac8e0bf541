//! Polynomial roots: Aberth iteration in double precision, exact multiplicities by
//! square-free decomposition, and bracketed refinement of real roots in exact rationals.

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::algebra::rational::{self, Rational};
use crate::algebra::UniPolyZ;

const MAX_ITER: usize = 2000;

/// All complex roots of `p` (with repetition), by Aberth–Ehrlich iteration and a final Newton polish.
pub fn aberth_roots(p: &UniPolyZ) -> Vec<Complex64> {
    let Some(n) = p.degree() else {
        return Vec::new();
    };
    if n == 0 {
        return Vec::new();
    }
    let lead = rational::to_f64(p.leading().expect("nonzero"));
    let a: Vec<f64> = p.coeffs_f64().iter().map(|c| c / lead).collect();
    if n == 1 {
        return vec![Complex64::new(-a[0], 0.0)];
    }
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut f = Complex64::zero();
        let mut df = Complex64::zero();
        for c in a.iter().rev() {
            df = df * z + f;
            f = f * z + c;
        }
        (f, df)
    };

    // Start on a circle whose radius is the geometric mean of the root moduli.
    let nonzero_low = a.iter().position(|c| *c != 0.0).unwrap_or(0);
    let radius = if nonzero_low == 0 {
        a[0].abs().powf(1.0 / n as f64)
    } else {
        1.0
    }
    .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / n as f64 + 0.4))
        .collect();

    for _ in 0..MAX_ITER {
        let mut worst = 0.0f64;
        for k in 0..n {
            let (f, df) = eval(z[k]);
            if f == Complex64::zero() {
                continue;
            }
            let ratio = f / df;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                worst = worst.max(step.norm() / z[k].norm().max(1e-300));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    for zk in &mut z {
        for _ in 0..3 {
            let (f, df) = eval(*zk);
            if df == Complex64::zero() {
                break;
            }
            let step = f / df;
            if step.is_finite() {
                *zk -= step;
            }
        }
    }
    z
}

/// Distinct roots with exact multiplicities, sorted by modulus.
pub fn roots_with_multiplicity(p: &UniPolyZ) -> Vec<(Complex64, usize)> {
    let mut out: Vec<(Complex64, usize)> = p
        .squarefree_factors()
        .into_iter()
        .flat_map(|(f, m)| aberth_roots(&f).into_iter().map(move |z| (z, m)))
        .collect();
    out.sort_by(|a, b| a.0.norm().total_cmp(&b.0.norm()).then(a.0.im.total_cmp(&b.0.im)));
    out
}

fn sign(v: &Rational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Finds a rational bracket `[lo, hi]` around `approx` on which `f` changes sign.
pub fn bracket_real_root(f: &UniPolyZ, approx: f64) -> Option<(Rational, Rational)> {
    let centre = rational::from_f64(approx);
    if f.eval(&centre).is_zero() {
        return Some((centre.clone(), centre));
    }
    let mut delta = rational::from_f64(approx.abs().max(1.0) * 1e-12);
    for _ in 0..40 {
        let lo = &centre - &delta;
        let hi = &centre + &delta;
        let (sl, sh) = (sign(&f.eval(&lo)), sign(&f.eval(&hi)));
        if sl == 0 {
            return Some((lo.clone(), lo));
        }
        if sh == 0 {
            return Some((hi.clone(), hi));
        }
        if sl != sh {
            return Some((lo, hi));
        }
        delta *= rational::int(4);
        if rational::to_f64(&delta) > approx.abs().max(1.0) * 1e-3 {
            break;
        }
    }
    None
}

/// Refines a bracketed simple real root to within `2^-bits`, by Newton steps kept inside a
/// shrinking sign-change bracket. The result is a dyadic rational.
pub fn refine_real_root(f: &UniPolyZ, lo: Rational, hi: Rational, bits: u32) -> Rational {
    if lo == hi {
        return lo;
    }
    let df = f.derivative();
    let s_lo = sign(&f.eval(&lo));
    let tol = Rational::new(1.into(), num_bigint::BigInt::from(1) << bits as usize);
    let (mut lo, mut hi) = (lo, hi);
    let mut x = rational::round_dyadic(&((&lo + &hi) / rational::int(2)), bits + 16);
    for _ in 0..(4 * bits as usize) {
        let fx = f.eval(&x);
        let s = sign(&fx);
        if s == 0 {
            return x;
        }
        if s == s_lo {
            lo = x.clone();
        } else {
            hi = x.clone();
        }
        if &hi - &lo < tol {
            break;
        }
        let d = df.eval(&x);
        let candidate = if d.is_zero() { None } else { Some(&x - fx / d) };
        if let Some(c) = &candidate {
            // Once Newton steps are below the tolerance, close the bracket around the iterate.
            if (c - &x).abs() < tol {
                let (a, b) = (&x - &tol, &x + &tol);
                if sign(&f.eval(&a)) != sign(&f.eval(&b)) {
                    return rational::round_dyadic(c, bits);
                }
            }
        }
        x = match candidate {
            Some(c) if c > lo && c < hi => rational::round_dyadic(&c, bits + 16),
            _ => rational::round_dyadic(&((&lo + &hi) / rational::int(2)), bits + 16),
        };
        if x <= lo || x >= hi {
            x = (&lo + &hi) / rational::int(2);
        }
    }
    rational::round_dyadic(&((&lo + &hi) / rational::int(2)), bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_roots() {
        let roots = roots_with_multiplicity(&UniPolyZ::from_ints(&[4, -6, 2]));
        assert_eq!(roots.len(), 2);
        assert!((roots[0].0 - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        assert!((roots[1].0 - Complex64::new(2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn complex_pair_and_multiplicity() {
        // (z^2 + 1)(z - 3)^2
        let p = UniPolyZ::from_ints(&[1, 0, 1]).mul(&UniPolyZ::from_ints(&[-3, 1])).mul(&UniPolyZ::from_ints(&[-3, 1]));
        let roots = roots_with_multiplicity(&p);
        assert_eq!(roots.len(), 3);
        assert!((roots[0].0.norm() - 1.0).abs() < 1e-14 && roots[0].1 == 1);
        assert!((roots[2].0 - Complex64::new(3.0, 0.0)).norm() < 1e-13 && roots[2].1 == 2);
    }

    #[test]
    fn golden_root_to_high_precision() {
        // z^2 + 2z - 4 has the root -1 + sqrt(5).
        let f = UniPolyZ::from_ints(&[-4, 2, 1]);
        let (lo, hi) = bracket_real_root(&f, 1.2360679).unwrap();
        let r = refine_real_root(&f, lo, hi, 200);
        let residual = f.eval(&r);
        assert!(rational::to_f64(&residual).abs() < 1e-55);
        assert!((rational::to_f64(&r) - (5f64.sqrt() - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn higher_degree_roots_are_accurate() {
        let p = UniPolyZ::from_ints(&[-8, 8, 0, -1, 3, 1, -2]);
        for (z, _) in roots_with_multiplicity(&p) {
            assert!(p.eval_complex(z).norm() < 1e-9 * (1.0 + z.norm().powi(6)));
        }
    }
}
