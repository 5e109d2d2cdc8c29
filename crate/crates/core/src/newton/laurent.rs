use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::NewtonError;
use crate::lattice::{orthogonal_lattice, LatticeVector, SpanFrame};

/// A nonzero Laurent polynomial over `Q` in `μ` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    rank: usize,
    terms: BTreeMap<LatticeVector, BigRational>,
}

impl LaurentPolynomial {
    /// Collects terms, summing repeated exponents and discarding zero coefficients.
    pub fn new(rank: usize, terms: impl IntoIterator<Item = (LatticeVector, BigRational)>) -> Result<Self, NewtonError> {
        if rank == 0 {
            return Err(NewtonError::ZeroRank);
        }
        let mut map: BTreeMap<LatticeVector, BigRational> = BTreeMap::new();
        for (exp, c) in terms {
            if exp.rank() != rank {
                return Err(NewtonError::RankMismatch { expected: rank, found: exp.rank() });
            }
            *map.entry(exp).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        if map.is_empty() {
            return Err(NewtonError::ZeroPolynomial);
        }
        Ok(LaurentPolynomial { rank, terms: map })
    }

    /// Shorthand for integer coefficients.
    pub fn from_i64(rank: usize, terms: &[(&[i64], i64)]) -> Result<Self, NewtonError> {
        Self::new(
            rank,
            terms.iter().map(|(e, c)| (LatticeVector::from_i64(e), BigRational::from_integer(BigInt::from(*c)))),
        )
    }

    pub fn monomial(exp: LatticeVector, coeff: BigRational) -> Result<Self, NewtonError> {
        Self::new(exp.rank(), [(exp, coeff)])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<LatticeVector, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, exp: &LatticeVector) -> Option<&BigRational> {
        self.terms.get(exp)
    }

    /// Exponents with nonzero coefficient, in lexicographic order.
    pub fn support(&self) -> Vec<LatticeVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `x^m · f`.
    pub fn shift(&self, m: &LatticeVector) -> Result<Self, NewtonError> {
        if m.rank() != self.rank {
            return Err(NewtonError::RankMismatch { expected: self.rank, found: m.rank() });
        }
        Ok(LaurentPolynomial { rank: self.rank, terms: self.terms.iter().map(|(e, c)| (e + m, c.clone())).collect() })
    }

    pub fn scale(&self, k: &BigRational) -> Result<Self, NewtonError> {
        Self::new(self.rank, self.terms.iter().map(|(e, c)| (e.clone(), c * k)))
    }

    /// Value at a point of the torus. Coordinates must be nonzero.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational, NewtonError> {
        if point.len() != self.rank {
            return Err(NewtonError::RankMismatch { expected: self.rank, found: point.len() });
        }
        if point.iter().any(Zero::is_zero) {
            return Err(NewtonError::ZeroCoordinate);
        }
        Ok(self.terms.iter().map(|(e, c)| c * character_value(point, e)).sum())
    }

    /// Basis of the cocharacters `χ` with `⟨χ, m⟩` constant on the support: the lattice of the
    /// identity component of the translation stabilizer of `(f)`.
    pub fn ueno_stabilizer(&self) -> Vec<LatticeVector> {
        let support = self.support();
        let diffs: Vec<LatticeVector> = support[1..].iter().map(|m| m - &support[0]).collect();
        orthogonal_lattice(self.rank, &diffs).expect("support exponents share the polynomial's rank")
    }

    /// Rewrites `f` on the quotient torus by its stabilizer.
    ///
    /// Exponents are shifted by the least support point and expressed in a basis of the
    /// saturated lattice they span. Returns `None` for the polynomial when `f` is a monomial.
    pub fn reduce_to_span(&self) -> ReducedPolynomial {
        let support = self.support();
        let origin = support[0].clone();
        let diffs: Vec<LatticeVector> = support.iter().map(|m| m - &origin).collect();
        let frame = SpanFrame::new(self.rank, &diffs).expect("support exponents share the polynomial's rank");
        let poly = (frame.dim() > 0).then(|| {
            let terms = self.terms.iter().map(|(e, c)| {
                let y = frame.coords(&(e - &origin)).expect("support lies in its own span");
                (LatticeVector::new(y), c.clone())
            });
            LaurentPolynomial::new(frame.dim(), terms).expect("distinct exponents stay distinct")
        });
        ReducedPolynomial { poly, origin, frame }
    }
}

/// A polynomial rewritten on the torus `Gm^d`, `d = dim Δ_f`, with the data to map back.
#[derive(Clone, Debug)]
pub struct ReducedPolynomial {
    pub poly: Option<LaurentPolynomial>,
    pub origin: LatticeVector,
    pub frame: SpanFrame,
}

/// `t^m` for a point with nonzero rational coordinates.
pub fn character_value(point: &[BigRational], m: &LatticeVector) -> BigRational {
    let mut acc = BigRational::one();
    for (x, e) in point.iter().zip(m.entries()) {
        let p = pow(x, e);
        acc *= p;
    }
    acc
}

fn pow(x: &BigRational, e: &BigInt) -> BigRational {
    use num_traits::ToPrimitive;
    let k = e.abs().to_u32().expect("exponent fits in u32");
    let mut r = num_traits::pow(x.clone(), k as usize);
    if e.is_negative() {
        r = r.recip();
    }
    r
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, k) in e.entries().iter().enumerate() {
                if !k.is_zero() {
                    write!(f, "*x{}^{}", i + 1, k)?;
                }
            }
        }
        Ok(())
    }
}
