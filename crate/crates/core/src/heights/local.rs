use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::point::valuation;
use super::{HeightsError, LogValue, Place, RationalTorusPoint};
use crate::newton::{character_value, newton_polytope, LatticePolytope, LaurentPolynomial};

/// A local contribution at one place, in natural-log units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalValue {
    pub place: Place,
    pub value: LogValue,
}

fn check_rank(expected: usize, found: usize) -> Result<(), HeightsError> {
    if expected == found {
        Ok(())
    } else {
        Err(HeightsError::RankMismatch { expected, found })
    }
}

fn check_place(v: &Place) -> Result<(), HeightsError> {
    match v {
        Place::Finite(p) => Place::prime(*p).map(|_| ()),
        Place::Infinite => Ok(()),
    }
}

fn monomial_values(p: &LatticePolytope, pt: &RationalTorusPoint) -> Vec<BigRational> {
    p.vertices().iter().map(|m| character_value(pt.coords(), m)).collect()
}

/// Height of `[P^{m_0} : … : P^{m_ℓ}]` over the lattice points `m_i` of `p`.
pub fn height(pt: &RationalTorusPoint, p: &LatticePolytope) -> Result<LogValue, HeightsError> {
    check_rank(p.rank(), pt.rank())?;
    Ok(projective_height(&monomial_values(p, pt)))
}

/// `log max |a_i|` for the coprime integer representative of `[x_0 : … : x_ℓ]`.
pub(crate) fn projective_height(xs: &[BigRational]) -> LogValue {
    let l = xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ys: Vec<BigInt> = xs.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ys.iter().fold(BigInt::zero(), |acc, y| acc.gcd(y));
    let top = ys.iter().map(|y| y.abs()).max().expect("nonempty") / g;
    LogValue::log_int(&top)
}

/// `λ_v(P) = log max_i |P^{m_i}|_v − log |f(P)|_v` over the lattice points of `Δ_f`.
pub fn weil_function(f: &LaurentPolynomial, pt: &RationalTorusPoint, v: &Place) -> Result<LocalValue, HeightsError> {
    check_rank(f.rank(), pt.rank())?;
    check_place(v)?;
    let value = f.evaluate(pt.coords())?;
    if value.is_zero() {
        return Err(HeightsError::OnDivisor);
    }
    let xs = monomial_values(&newton_polytope(f), pt);
    let out = match v {
        Place::Infinite => {
            let top = xs.iter().map(|x| x.abs()).max().expect("nonempty");
            LogValue::log_abs(&(top / value.abs()))
        }
        Place::Finite(p) => {
            let low = xs.iter().map(|x| valuation(x, *p)).min().expect("nonempty");
            LogValue::log_u64(*p).scale_int(valuation(&value, *p) - low)
        }
    };
    Ok(LocalValue { place: v.clone(), value: out })
}

/// A constant `c_v(f)` with `λ_v(P) ≥ c_v(f)` for every point off the divisor.
pub fn weil_lower_bound(f: &LaurentPolynomial, v: &Place) -> Result<LogValue, HeightsError> {
    check_place(v)?;
    Ok(match v {
        Place::Infinite => {
            let total: BigRational = f.terms().values().map(|c| c.abs()).sum();
            -LogValue::log_abs(&total)
        }
        Place::Finite(p) => {
            let low = f.terms().values().map(|c| valuation(c, *p)).min().expect("nonzero polynomial");
            LogValue::log_u64(*p).scale_int(low)
        }
    })
}

/// `Σ_v λ_v(P)` against `h_{Δ_f}(P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub height: LogValue,
    /// The archimedean value, then every prime where some local value can be nonzero.
    pub local: Vec<LocalValue>,
    /// Contributions of integers that were not fully factored, grouped by coprime block.
    pub blocks: Vec<(BigInt, LogValue)>,
    pub total: LogValue,
    pub equal: bool,
}

const TRIAL_LIMIT: u64 = 1_000_000;

pub fn height_decomposition_check(f: &LaurentPolynomial, pt: &RationalTorusPoint) -> Result<DecompositionReport, HeightsError> {
    check_rank(f.rank(), pt.rank())?;
    let value = f.evaluate(pt.coords())?;
    if value.is_zero() {
        return Err(HeightsError::OnDivisor);
    }
    let p = newton_polytope(f);
    let xs = monomial_values(&p, pt);
    let height = projective_height(&xs);
    let mut local = vec![weil_function(f, pt, &Place::Infinite)?];
    let mut blocks = Vec::new();
    let ints: Vec<BigInt> = xs.iter().chain(std::iter::once(&value)).flat_map(|x| [x.numer().abs(), x.denom().clone()]).collect();
    let base = LogValue::from_terms(ints.into_iter().map(|n| (n, BigRational::one())));
    let mut primes = Vec::new();
    for b in base.terms().keys() {
        match trial_factor(b) {
            Some(ps) => primes.extend(ps),
            None => {
                let e = |x: &BigRational| block_exponent(x.numer(), b) - block_exponent(x.denom(), b);
                let low = xs.iter().map(e).min().expect("nonempty");
                blocks.push((b.clone(), LogValue::log_int(b).scale_int(e(&value) - low)));
            }
        }
    }
    primes.sort_unstable();
    primes.dedup();
    for q in primes {
        local.push(weil_function(f, pt, &Place::Finite(q))?);
    }
    let total: LogValue = local.iter().map(|l| l.value.clone()).chain(blocks.iter().map(|b| b.1.clone())).sum();
    let equal = total == height;
    Ok(DecompositionReport { height, local, blocks, total, equal })
}

fn block_exponent(n: &BigInt, b: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut k = 0;
    while !n.is_zero() && (&n % b).is_zero() {
        n /= b;
        k += 1;
    }
    k
}

/// Distinct primes of `n` when trial division up to the limit finishes the factorization.
fn trial_factor(n: &BigInt) -> Option<Vec<u64>> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        if (&n % &bd).is_zero() {
            out.push(d);
            while (&n % &bd).is_zero() {
                n /= &bd;
            }
        }
        d += 1;
    }
    if n.is_one() {
        return Some(out);
    }
    let limit = BigInt::from(TRIAL_LIMIT);
    if n <= &limit * &limit {
        out.push(u64::try_from(n).expect("below the trial bound squared"));
        return Some(out);
    }
    None
}

/// `Σ_m |log |x_m(P)|_v|`.
pub fn boundary_distance(pt: &RationalTorusPoint, v: &Place) -> Result<LocalValue, HeightsError> {
    check_place(v)?;
    let value = pt.coords().iter().map(|x| local_log(x, v).abs()).sum();
    Ok(LocalValue { place: v.clone(), value })
}

/// `max_m |log |x_m(P)|_v|`; within a factor `μ` of the sum version.
pub fn boundary_distance_max(pt: &RationalTorusPoint, v: &Place) -> Result<LocalValue, HeightsError> {
    check_place(v)?;
    let value = pt.coords().iter().map(|x| local_log(x, v).abs()).max().unwrap_or_default();
    Ok(LocalValue { place: v.clone(), value })
}

/// `log |x|_v`.
pub fn local_log(x: &BigRational, v: &Place) -> LogValue {
    match v {
        Place::Infinite => LogValue::log_abs(x),
        Place::Finite(p) => LogValue::log_u64(*p).scale_int(-valuation(x, *p)),
    }
}
