use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{HeightsError, PlaceSet, RationalTorusPoint};
use crate::newton::LaurentPolynomial;

pub const DEFAULT_EXPONENT_CAP: u32 = 12;
pub const MAX_ENUMERATION_RANK: usize = 3;

/// Coordinates and `f(P)` are all `S`-units.
pub fn is_s_integral(f: &LaurentPolynomial, pt: &RationalTorusPoint, s: &PlaceSet) -> bool {
    if f.rank() != pt.rank() || !pt.coords().iter().all(|x| s.is_unit(x)) {
        return false;
    }
    match f.evaluate(pt.coords()) {
        Ok(v) => s.is_unit(&v),
        Err(_) => false,
    }
}

/// `H(x) = max(|a|, |b|)` for `x = a/b` in lowest terms.
pub fn naive_height(x: &BigRational) -> BigInt {
    x.numer().abs().max(x.denom().clone())
}

/// All `S`-integral points with `Π_m H(x_m) ≤ bound`, i.e. of height at most `log bound`, sorted.
pub fn enumerate_integral_points(f: &LaurentPolynomial, s: &PlaceSet, bound: &BigInt) -> Result<Vec<RationalTorusPoint>, HeightsError> {
    enumerate_integral_points_with_cap(f, s, bound, DEFAULT_EXPONENT_CAP)
}

pub fn enumerate_integral_points_with_cap(
    f: &LaurentPolynomial,
    s: &PlaceSet,
    bound: &BigInt,
    cap: u32,
) -> Result<Vec<RationalTorusPoint>, HeightsError> {
    let rank = f.rank();
    if rank > MAX_ENUMERATION_RANK {
        return Err(HeightsError::RankTooLarge(rank));
    }
    if bound < &BigInt::one() {
        return Ok(Vec::new());
    }
    let mut limits = Vec::with_capacity(s.primes().len());
    for &p in s.primes() {
        let mut e = 0u32;
        let mut pow = BigInt::from(p);
        while &pow <= bound {
            e += 1;
            pow *= p;
        }
        if e > cap {
            return Err(HeightsError::BoundTooLarge { prime: p, exponent: e, cap });
        }
        limits.push(e as i64);
    }
    let units = s_units_up_to(s.primes(), &limits, bound);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rank);
    extend(f, s, &units, bound, BigInt::one(), &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn extend(
    f: &LaurentPolynomial,
    s: &PlaceSet,
    units: &[(BigInt, BigRational)],
    bound: &BigInt,
    used: BigInt,
    current: &mut Vec<BigRational>,
    out: &mut Vec<RationalTorusPoint>,
) {
    if current.len() == f.rank() {
        let value = f.evaluate(current).expect("units are nonzero");
        if s.is_unit(&value) {
            out.push(RationalTorusPoint::new(current.clone()).expect("units are nonzero"));
        }
        return;
    }
    for (h, x) in units {
        let next = &used * h;
        if &next > bound {
            break;
        }
        current.push(x.clone());
        extend(f, s, units, bound, next, current, out);
        current.pop();
    }
}

/// `±Π p^{e_p}` with `|e_p| ≤ limit_p` and `H ≤ bound`, sorted by `H`.
fn s_units_up_to(primes: &[u64], limits: &[i64], bound: &BigInt) -> Vec<(BigInt, BigRational)> {
    let mut values = vec![BigRational::one()];
    for (&p, &e) in primes.iter().zip(limits) {
        let mut next = Vec::new();
        for v in &values {
            for k in -e..=e {
                let pk = num_traits::pow(BigInt::from(p), k.unsigned_abs() as usize);
                let w = if k >= 0 { v * BigRational::from_integer(pk) } else { v / BigRational::from_integer(pk) };
                if &naive_height(&w) <= bound {
                    next.push(w);
                }
            }
        }
        values = next;
    }
    let mut out: Vec<(BigInt, BigRational)> =
        values.into_iter().flat_map(|v| [(naive_height(&v), v.clone()), (naive_height(&v), -v)]).collect();
    out.sort();
    out
}
