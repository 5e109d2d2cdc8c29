use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact real number `Σ q_b · log b` with rational `q_b` and pairwise coprime integers `b > 1`.
///
/// Logs of pairwise coprime integers are linearly independent over `Q`, so a value is zero exactly
/// when its normalized coefficients vanish. Two equal values may still use different bases
/// (`log 6` against `log 2 + log 3`); equality and ordering go through the difference.
#[derive(Clone, Debug, Default)]
pub struct LogValue {
    terms: BTreeMap<BigInt, BigRational>,
}

impl LogValue {
    pub fn zero() -> Self {
        LogValue::default()
    }

    /// `log n` for a positive integer.
    pub fn log_int(n: &BigInt) -> Self {
        assert!(n.is_positive(), "log of a non-positive integer");
        Self::from_terms([(n.clone(), BigRational::one())])
    }

    pub fn log_u64(n: u64) -> Self {
        Self::log_int(&BigInt::from(n))
    }

    /// `log |q|` for a nonzero rational.
    pub fn log_abs(q: &BigRational) -> Self {
        assert!(!q.is_zero(), "log of zero");
        Self::from_terms([(q.numer().abs(), BigRational::one()), (q.denom().clone(), -BigRational::one())])
    }

    /// `k · log b` summed over the pairs; bases must be positive.
    pub fn from_terms(terms: impl IntoIterator<Item = (BigInt, BigRational)>) -> Self {
        let mut list: Vec<(BigInt, BigRational)> = terms.into_iter().collect();
        assert!(list.iter().all(|(b, _)| b.is_positive()), "log of a non-positive integer");
        refine(&mut list);
        let mut out: BTreeMap<BigInt, BigRational> = BTreeMap::new();
        for (b, q) in list {
            *out.entry(b).or_insert_with(BigRational::zero) += q;
        }
        out.retain(|_, q| !q.is_zero());
        LogValue { terms: out }
    }

    pub fn terms(&self) -> &BTreeMap<BigInt, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return LogValue::zero();
        }
        LogValue { terms: self.terms.iter().map(|(b, q)| (b.clone(), q * k)).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    /// Exact sign, by comparing `Π b^{N q_b}` over positive and negative coefficients.
    pub fn signum(&self) -> Ordering {
        if self.terms.is_empty() {
            return Ordering::Equal;
        }
        let n = self.terms.values().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let mut pos = BigInt::one();
        let mut neg = BigInt::one();
        for (b, q) in &self.terms {
            let k = (q * BigRational::from_integer(n.clone())).to_integer();
            let e = k.abs().to_u32().expect("exponent fits in u32");
            let p = num_traits::pow(b.clone(), e as usize);
            if k.is_positive() {
                pos *= p;
            } else {
                neg *= p;
            }
        }
        pos.cmp(&neg)
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn max(a: &LogValue, b: &LogValue) -> LogValue {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(b, q)| q.to_f64().unwrap_or(f64::NAN) * ln_big(b)).fold(0.0, |a, x| a + x)
    }
}

fn ln_big(b: &BigInt) -> f64 {
    match b.to_f64() {
        Some(x) if x.is_finite() => x.ln(),
        _ => {
            let bits = b.bits();
            let shifted: BigInt = b >> (bits - 64);
            shifted.to_f64().expect("64-bit value").ln() + ((bits - 64) as f64) * std::f64::consts::LN_2
        }
    }
}

/// Rewrites the bases into a pairwise coprime set of integers `> 1`, none a perfect power.
fn refine(list: &mut Vec<(BigInt, BigRational)>) {
    loop {
        list.retain(|(b, q)| !b.is_one() && !q.is_zero());
        let mut split = None;
        'outer: for i in 0..list.len() {
            for j in i + 1..list.len() {
                if list[i].0 == list[j].0 {
                    continue;
                }
                let g = list[i].0.gcd(&list[j].0);
                if !g.is_one() {
                    split = Some((i, j, g));
                    break 'outer;
                }
            }
        }
        let Some((i, j, g)) = split else { break };
        let (bj, qj) = list.remove(j);
        let (bi, qi) = list.remove(i);
        list.push((&bi / &g, qi.clone()));
        list.push((&bj / &g, qj.clone()));
        list.push((g, qi + qj));
    }
    for (b, q) in list.iter_mut() {
        let (root, k) = perfect_root(b);
        if k > 1 {
            *b = root;
            *q = &*q * BigRational::from_integer(BigInt::from(k));
        }
    }
}

/// `(r, k)` with `b = r^k` and `k` maximal.
fn perfect_root(b: &BigInt) -> (BigInt, u32) {
    let bits = b.bits() as u32;
    for k in (2..=bits.max(2)).rev() {
        let r = b.nth_root(k);
        if r > BigInt::one() && num_traits::pow(r.clone(), k as usize) == *b {
            let (rr, kk) = perfect_root(&r);
            return (rr, k * kk);
        }
    }
    (b.clone(), 1)
}

impl PartialEq for LogValue {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for LogValue {}

impl PartialOrd for LogValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LogValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl Add for &LogValue {
    type Output = LogValue;
    fn add(self, rhs: &LogValue) -> LogValue {
        LogValue::from_terms(self.terms.iter().chain(&rhs.terms).map(|(b, q)| (b.clone(), q.clone())))
    }
}

impl Add for LogValue {
    type Output = LogValue;
    fn add(self, rhs: LogValue) -> LogValue {
        &self + &rhs
    }
}

impl Sub for &LogValue {
    type Output = LogValue;
    fn sub(self, rhs: &LogValue) -> LogValue {
        self + &(-rhs.clone())
    }
}

impl Sub for LogValue {
    type Output = LogValue;
    fn sub(self, rhs: LogValue) -> LogValue {
        &self - &rhs
    }
}

impl Neg for LogValue {
    type Output = LogValue;
    fn neg(self) -> LogValue {
        LogValue { terms: self.terms.into_iter().map(|(b, q)| (b, -q)).collect() }
    }
}

impl std::iter::Sum for LogValue {
    fn sum<I: Iterator<Item = LogValue>>(iter: I) -> LogValue {
        let all: Vec<(BigInt, BigRational)> = iter.flat_map(|v| v.terms.into_iter()).collect();
        LogValue::from_terms(all)
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, q)) in self.terms.iter().enumerate() {
            let (sign, mag) = if q.is_negative() { ("-", -q.clone()) } else { ("+", q.clone()) };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                (_, s) => write!(f, " {s} ")?,
            }
            if mag.is_one() {
                write!(f, "log {b}")?;
            } else {
                write!(f, "{mag} log {b}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::linalg::ratio;

    #[test]
    fn equal_values_with_different_bases() {
        let six = LogValue::log_u64(6);
        let two_three = LogValue::log_u64(2) + LogValue::log_u64(3);
        assert_eq!(six, two_three);
        assert_eq!(LogValue::log_u64(8), LogValue::log_u64(2).scale_int(3));
        assert_eq!(LogValue::log_u64(4).terms().keys().collect::<Vec<_>>(), vec![&BigInt::from(2)]);
        assert!((LogValue::log_u64(12) - LogValue::log_u64(6)) == LogValue::log_u64(2));
    }

    #[test]
    fn exact_sign() {
        // 2 log 3 vs 3 log 2: 9 > 8
        let d = LogValue::log_u64(3).scale_int(2) - LogValue::log_u64(2).scale_int(3);
        assert_eq!(d.signum(), Ordering::Greater);
        assert!(LogValue::log_abs(&ratio(3, 2)) > LogValue::zero());
        assert!(LogValue::log_abs(&ratio(-2, 3)) < LogValue::zero());
        assert_eq!(LogValue::log_abs(&ratio(-1, 1)), LogValue::zero());
        assert_eq!(LogValue::log_abs(&ratio(-2, 3)).abs(), LogValue::log_abs(&ratio(3, 2)));
    }

    #[test]
    fn float_view_and_display() {
        let v = LogValue::log_abs(&ratio(3, 2));
        assert!((v.to_f64() - 1.5f64.ln()).abs() < 1e-12);
        assert_eq!(v.to_string(), "-log 2 + log 3");
        assert_eq!(LogValue::log_u64(9).to_string(), "2 log 3");
        let big = BigInt::from(10).pow(400);
        assert!((LogValue::log_int(&big).to_f64() - 400.0 * 10f64.ln()).abs() < 1e-9);
    }
}
