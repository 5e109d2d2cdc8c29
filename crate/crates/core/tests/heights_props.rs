mod common;

use std::cmp::Ordering;

use common::*;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::collection::vec;
use proptest::prelude::*;
use rand::Rng;
use toruskit::heights::{
    enumerate_integral_points, height, height_decomposition_check, is_s_integral, weil_function, weil_lower_bound, HeightsError,
    Place, PlaceSet, RationalTorusPoint,
};
use toruskit::newton::{character_value, LatticePolytope, LaurentPolynomial};

fn ratio() -> impl Strategy<Value = (i64, i64)> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=9)
}

fn vp(n: i64, p: i64) -> i64 {
    let mut n = n.abs();
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

/// Sum over places of the largest local log of a vertex monomial.
fn height_oracle(coords: &[(i64, i64)], vertices: &[V]) -> f64 {
    let arch = vertices
        .iter()
        .map(|m| m.iter().zip(coords).map(|(e, (n, d))| *e as f64 * ((*n as f64).abs().ln() - (*d as f64).ln())).sum::<f64>())
        .fold(f64::NEG_INFINITY, f64::max);
    let finite: f64 = [2i64, 3, 5, 7]
        .iter()
        .map(|&p| {
            let best = vertices
                .iter()
                .map(|m| -m.iter().zip(coords).map(|(e, (n, d))| e * (vp(*n, p) - vp(*d, p))).sum::<i64>())
                .max()
                .unwrap();
            best as f64 * (p as f64).ln()
        })
        .sum();
    arch + finite
}

fn polynomial(r: usize, support: &[V], coeffs: &[i64]) -> LaurentPolynomial {
    let mut support: Vec<V> = support.iter().map(|m| m[..r].to_vec()).collect();
    support.sort();
    support.dedup();
    LaurentPolynomial::new(r, support.iter().zip(coeffs.iter().cycle()).map(|(m, c)| (lv(m), q(*c, 1)))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn height_is_nonnegative_with_exact_zero_locus(
        r in 1usize..=3,
        pts in vec(vec(-2i64..=2, 3), 1..=5),
        coords in vec(ratio(), 3),
    ) {
        let pts: Vec<V> = pts.into_iter().map(|m| m[..r].to_vec()).collect();
        let p = LatticePolytope::from_points(r, &pts.iter().map(|v| lv(v)).collect::<Vec<_>>()).unwrap();
        let coords = &coords[..r];
        let pt = RationalTorusPoint::from_ratios(coords).unwrap();
        let h = height(&pt, &p).unwrap();
        prop_assert_ne!(h.signum(), Ordering::Less);
        let verts: Vec<V> = p.vertices().iter().map(iv).collect();
        prop_assert!((h.to_f64() - height_oracle(coords, &verts)).abs() < 1e-9);
        let abs_values: Vec<BigRational> = p.vertices().iter().map(|m| character_value(pt.coords(), m).abs()).collect();
        prop_assert_eq!(h.is_zero(), abs_values.iter().all(|x| x == &abs_values[0]));
    }

    #[test]
    fn decomposition_is_exact(
        r in 1usize..=2,
        support in vec(vec(-2i64..=2, 2), 1..=4),
        coeffs in vec(prop_oneof![-4i64..=-1, 1i64..=4], 4),
        coords in vec(ratio(), 2),
    ) {
        let f = polynomial(r, &support, &coeffs);
        let pt = RationalTorusPoint::from_ratios(&coords[..r]).unwrap();
        match height_decomposition_check(&f, &pt) {
            Err(HeightsError::OnDivisor) => prop_assert!(f.evaluate(pt.coords()).unwrap().is_zero()),
            Err(e) => prop_assert!(false, "{}", e),
            Ok(report) => {
                prop_assert!(report.equal);
                prop_assert_eq!(&report.total, &report.height);
                let sum: f64 = report.local.iter().map(|l| l.value.to_f64()).sum::<f64>()
                    + report.blocks.iter().map(|(_, v)| v.to_f64()).sum::<f64>();
                prop_assert!((sum - report.height.to_f64()).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn weil_functions_respect_their_lower_bounds() {
    let mut r = rng(41);
    let places = [Place::Infinite, Place::Finite(2), Place::Finite(3), Place::Finite(5)];
    let polys = [
        LaurentPolynomial::from_i64(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1)]).unwrap(),
        LaurentPolynomial::from_i64(2, &[(&[0, 0], 6), (&[2, 1], -4), (&[-1, 1], 9)]).unwrap(),
        LaurentPolynomial::from_i64(1, &[(&[0], 2), (&[3], 5)]).unwrap(),
        LaurentPolynomial::from_i64(3, &[(&[1, 0, 0], 3), (&[0, 1, 0], -1), (&[0, 0, 1], 10), (&[1, 1, 1], 1)]).unwrap(),
    ];
    let mut checked = 0;
    for f in &polys {
        let bounds: Vec<_> = places.iter().map(|v| weil_lower_bound(f, v).unwrap()).collect();
        for _ in 0..250 {
            let coords: Vec<(i64, i64)> = (0..f.rank())
                .map(|_| {
                    let sign = if r.gen_bool(0.5) { 1 } else { -1 };
                    (sign * r.gen_range(1i64..=60), r.gen_range(1i64..=60))
                })
                .collect();
            let pt = RationalTorusPoint::from_ratios(&coords).unwrap();
            for (v, c) in places.iter().zip(&bounds) {
                match weil_function(f, &pt, v) {
                    Err(HeightsError::OnDivisor) => {}
                    Err(e) => panic!("{e}"),
                    Ok(l) => {
                        assert_ne!((&l.value - c).signum(), Ordering::Less, "{coords:?} at {v:?}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked >= 1000, "only {checked} samples off the divisor");
}

#[test]
fn enumeration_matches_a_brute_force_scan() {
    let primes = [2i64, 3];
    let s = PlaceSet::new(&[2, 3]).unwrap();
    let bound = 36i64;
    let mut candidates = Vec::new();
    for n in -bound..=bound {
        for d in 1..=bound {
            if n != 0 && num_integer::gcd(n, d) == 1 && is_s_unit(n as i128, d as i128, &primes) {
                candidates.push((n, d));
            }
        }
    }
    let polys = [
        LaurentPolynomial::from_i64(1, &[(&[0], 1), (&[1], 1)]).unwrap(),
        LaurentPolynomial::from_i64(1, &[(&[0], -1), (&[2], 1)]).unwrap(),
        LaurentPolynomial::from_i64(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1)]).unwrap(),
        LaurentPolynomial::from_i64(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[1, 1], 2)]).unwrap(),
    ];
    for f in &polys {
        let tuples: Vec<Vec<(i64, i64)>> = if f.rank() == 1 {
            candidates.iter().map(|c| vec![*c]).collect()
        } else {
            candidates.iter().flat_map(|a| candidates.iter().map(move |b| vec![*a, *b])).collect()
        };
        let mut brute = Vec::new();
        for t in tuples {
            let h: i128 = t.iter().map(|(n, d)| naive_height(*n as i128, *d as i128)).product();
            if h > bound as i128 {
                continue;
            }
            let pt = RationalTorusPoint::from_ratios(&t).unwrap();
            let v = f.evaluate(pt.coords()).unwrap();
            if v.is_zero() {
                continue;
            }
            if is_s_unit(v.numer().to_i128().unwrap(), v.denom().to_i128().unwrap(), &primes) {
                assert!(is_s_integral(f, &pt, &s));
                brute.push(pt);
            }
        }
        brute.sort();
        let got = enumerate_integral_points(f, &s, &bound.into()).unwrap();
        assert_eq!(got, brute);
    }
}
