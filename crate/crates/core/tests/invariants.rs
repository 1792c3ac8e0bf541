mod common;

use graph_wep::algebra::rational::{self, Rational};
use graph_wep::algebra::UniRatFunc;
use graph_wep::analysis::{concentratable_entanglement_series, dominant_singularity, fidelity_exact_series, fidelity_point};
use graph_wep::family::{Graph, BUILTIN_NAMES};
use graph_wep::oracle::{sld_bruteforce_colouring, sld_bruteforce_stabilizer};
use graph_wep::transfer::weps_by_iteration;
use num_bigint::BigUint;
use num_traits::{One, Zero};

const R_MAX: usize = 14;

#[test]
fn sector_lengths_are_normalized_and_homogeneous() {
    for name in BUILTIN_NAMES {
        let sys = common::system(name);
        for (r, wep) in weps_by_iteration(&sys, R_MAX).unwrap().iter().enumerate() {
            let n = sys.qubits(r);
            assert_eq!(wep.qubits(), n, "{name} r={r}");
            assert_eq!(wep.poly().homogeneous_degree_xy(), Some(n as i64), "{name} r={r}");
            let sld = wep.to_sld();
            assert!(sld.get(0).is_one());
            let total: BigUint = sld.lengths().iter().sum();
            assert_eq!(total, BigUint::one() << n, "{name} r={r}");
        }
    }
}

#[test]
fn dominant_singularities_are_real_and_positive() {
    for name in BUILTIN_NAMES {
        let f = common::gf(&common::system(name));
        for (n, d) in [(3, 10), (1, 2), (4, 5), (1, 1)] {
            let (x, y) = fidelity_point(&rational::ratio(n, d));
            let (num, den) = f.specialize(&x, &y).unwrap();
            let reduced = UniRatFunc::reduced(&num, &den);
            let report = dominant_singularity(&reduced.den).unwrap();
            assert!(report.real_positive, "{name} at λ={n}/{d}: {:?}", report.dominant_root);
            assert_eq!(report.multiplicity, 1, "{name} at λ={n}/{d}");
        }
    }
}

#[test]
fn triangle_and_three_star_share_sector_lengths() {
    let c3 = sld_bruteforce_colouring(&Graph::cycle(3), 8).unwrap();
    assert_eq!(c3, sld_bruteforce_stabilizer(&Graph::star(3), 8).unwrap());
    let cycle = weps_by_iteration(&common::system("cycle"), 3).unwrap();
    let star = weps_by_iteration(&common::system("star"), 3).unwrap();
    assert_eq!(cycle[3], star[3]);
    assert_eq!(cycle[3].to_sld(), c3);
}

#[test]
fn fidelity_bounds_and_monotonicity() {
    let lambdas: Vec<Rational> = (0..=10).map(|k| rational::ratio(k, 10)).collect();
    for name in BUILTIN_NAMES {
        let sys = common::system(name);
        let series: Vec<Vec<Rational>> = lambdas.iter().map(|l| fidelity_exact_series(&sys, l, 8).unwrap()).collect();
        for r in 0..=8 {
            let floor = rational::pow(&rational::ratio(1, 2), sys.qubits(r) as u32);
            assert_eq!(series[0][r], floor, "{name} r={r} at λ=0");
            assert!(series[10][r].is_one(), "{name} r={r} at λ=1");
            for w in series.windows(2) {
                assert!(w[0][r] <= w[1][r], "{name} r={r} not monotone");
            }
        }
    }
}

#[test]
fn concentratable_entanglement_range() {
    for name in BUILTIN_NAMES {
        let sys = common::system(name);
        for (r, (cbar, c)) in concentratable_entanglement_series(&sys, 10).unwrap().into_iter().enumerate() {
            assert!(cbar > Rational::zero() && cbar <= Rational::one(), "{name} r={r}");
            assert!(c >= Rational::zero() && c < Rational::one(), "{name} r={r}");
            if sys.qubits(r) <= 1 {
                assert!(c.is_zero(), "{name} r={r}: a single qubit carries no entanglement");
            }
        }
    }
}
