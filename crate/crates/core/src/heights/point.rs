use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::HeightsError;

/// A point of `Gm^μ(Q)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalTorusPoint {
    coords: Vec<BigRational>,
}

impl RationalTorusPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self, HeightsError> {
        if coords.iter().any(Zero::is_zero) {
            return Err(HeightsError::ZeroCoordinate);
        }
        Ok(RationalTorusPoint { coords })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self, HeightsError> {
        Self::new(coords.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Result<Self, HeightsError> {
        if coords.iter().any(|&(_, d)| d == 0) {
            return Err(HeightsError::ZeroDenominator);
        }
        Self::new(coords.iter().map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))).collect())
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Coordinate-wise product.
    pub fn mul(&self, other: &RationalTorusPoint) -> Result<RationalTorusPoint, HeightsError> {
        if self.rank() != other.rank() {
            return Err(HeightsError::RankMismatch { expected: self.rank(), found: other.rank() });
        }
        Ok(RationalTorusPoint { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).collect() })
    }
}

impl fmt::Display for RationalTorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A place of `Q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinite,
    Finite(u64),
}

impl Place {
    pub fn prime(p: u64) -> Result<Place, HeightsError> {
        if is_prime(p) {
            Ok(Place::Finite(p))
        } else {
            Err(HeightsError::NotPrime(p))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinite => write!(f, "inf"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// `S`: the archimedean place together with finitely many primes.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PlaceSet {
    primes: Vec<u64>,
}

impl PlaceSet {
    pub fn new(primes: &[u64]) -> Result<Self, HeightsError> {
        let mut primes = primes.to_vec();
        primes.sort_unstable();
        primes.dedup();
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(HeightsError::NotPrime(p));
        }
        Ok(PlaceSet { primes })
    }

    pub fn archimedean_only() -> Self {
        PlaceSet::default()
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn places(&self) -> Vec<Place> {
        std::iter::once(Place::Infinite).chain(self.primes.iter().map(|&p| Place::Finite(p))).collect()
    }

    /// Whether `q` is nonzero and a unit away from `S`.
    pub fn is_unit(&self, q: &BigRational) -> bool {
        if q.is_zero() {
            return false;
        }
        let strip = |n: &BigInt| {
            let mut n = n.abs();
            for &p in &self.primes {
                let p = BigInt::from(p);
                while (&n % &p).is_zero() {
                    n /= &p;
                }
            }
            n.is_one()
        };
        strip(q.numer()) && strip(q.denom())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `v_p(q)` for a nonzero rational.
pub fn valuation(q: &BigRational, p: u64) -> i64 {
    let p = BigInt::from(p);
    int_valuation(q.numer(), &p) - int_valuation(q.denom(), &p)
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() || n.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::linalg::ratio;

    #[test]
    fn places_and_units() {
        assert_eq!(PlaceSet::new(&[4]), Err(HeightsError::NotPrime(4)));
        let s = PlaceSet::new(&[3, 2, 2]).unwrap();
        assert_eq!(s.places(), vec![Place::Infinite, Place::Finite(2), Place::Finite(3)]);
        assert!(s.is_unit(&ratio(-9, 16)));
        assert!(!s.is_unit(&ratio(5, 2)));
        assert!(!s.is_unit(&ratio(0, 1)));
        assert!(PlaceSet::archimedean_only().is_unit(&ratio(-1, 1)));
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&ratio(12, 5), 2), 2);
        assert_eq!(valuation(&ratio(5, 12), 2), -2);
        assert_eq!(valuation(&ratio(7, 1), 3), 0);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1));
    }

    #[test]
    fn zero_coordinate_rejected() {
        assert_eq!(RationalTorusPoint::from_i64(&[1, 0]), Err(HeightsError::ZeroCoordinate));
    }
}
