//! JSON documents for polynomials, polytopes, fans, divisors, points and place sets.
//!
//! Integers are JSON numbers, or decimal strings when they do not fit in 64 bits.
//! Rationals are `{ "num": .., "den": .. }` in lowest terms with a positive denominator.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::heights::{PlaceSet, RationalTorusPoint};
use crate::lattice::LatticeVector;
use crate::newton::{LatticePolytope, LaurentPolynomial};
use crate::toricfan::{Fan, TorusInvariantDivisor};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(BigInt::from(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(BigInt::from(v)))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                let digits = v.strip_prefix('-').unwrap_or(v);
                if digits.is_empty() || digits.len() > 4096 || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(E::custom(format!("not a decimal integer: {v:?}")));
                }
                v.parse::<BigInt>().map(JsonInt).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

impl From<&BigInt> for JsonInt {
    fn from(v: &BigInt) -> Self {
        JsonInt(v.clone())
    }
}

pub fn vector_json(v: &LatticeVector) -> Vec<JsonInt> {
    v.entries().iter().map(JsonInt::from).collect()
}

fn vector_from(v: &[JsonInt], rank: usize, what: &str) -> Result<LatticeVector, Error> {
    if v.len() != rank {
        return Err(Error::Parse(format!("{what} has length {}, expected {rank}", v.len())));
    }
    Ok(LatticeVector::new(v.iter().map(|x| x.0.clone()).collect()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalJson {
    pub num: JsonInt,
    pub den: JsonInt,
}

impl RationalJson {
    pub fn from_rational(q: &BigRational) -> Self {
        RationalJson { num: JsonInt(q.numer().clone()), den: JsonInt(q.denom().clone()) }
    }

    pub fn to_rational(&self) -> Result<BigRational, Error> {
        to_rational(&self.num, &self.den)
    }
}

fn to_rational(num: &JsonInt, den: &JsonInt) -> Result<BigRational, Error> {
    if !den.0.is_positive() {
        return Err(Error::Parse(format!("denominator must be positive, got {}", den.0)));
    }
    if !num.0.gcd(&den.0).is_one() && !(num.0.is_zero() && den.0.is_one()) {
        return Err(Error::Parse(format!("{}/{} is not in lowest terms", num.0, den.0)));
    }
    Ok(BigRational::new_raw(num.0.clone(), den.0.clone()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub exp: Vec<JsonInt>,
    pub num: JsonInt,
    pub den: JsonInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialJson {
    pub rank: usize,
    pub terms: Vec<TermJson>,
}

impl PolynomialJson {
    pub fn from_polynomial(f: &LaurentPolynomial) -> Self {
        let terms = f
            .terms()
            .iter()
            .map(|(e, c)| TermJson { exp: vector_json(e), num: JsonInt(c.numer().clone()), den: JsonInt(c.denom().clone()) })
            .collect();
        PolynomialJson { rank: f.rank(), terms }
    }

    pub fn to_polynomial(&self) -> Result<LaurentPolynomial, Error> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = to_rational(&t.num, &t.den)?;
            if c.is_zero() {
                return Err(Error::Parse("zero coefficient".into()));
            }
            terms.push((vector_from(&t.exp, self.rank, "exponent")?, c));
        }
        let mut seen: Vec<&LatticeVector> = terms.iter().map(|t| &t.0).collect();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("repeated exponent".into()));
        }
        Ok(LaurentPolynomial::new(self.rank, terms)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeJson {
    pub rank: usize,
    pub points: Vec<Vec<JsonInt>>,
}

impl PolytopeJson {
    pub fn from_polytope(p: &LatticePolytope) -> Self {
        PolytopeJson { rank: p.rank(), points: p.vertices().iter().map(vector_json).collect() }
    }

    pub fn to_polytope(&self) -> Result<LatticePolytope, Error> {
        let pts = self.points.iter().map(|p| vector_from(p, self.rank, "point")).collect::<Result<Vec<_>, _>>()?;
        Ok(LatticePolytope::from_points(self.rank, &pts)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeJson {
    pub rays: Vec<Vec<JsonInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanJson {
    pub rank: usize,
    pub cones: Vec<ConeJson>,
}

impl FanJson {
    /// Maximal cones only; the fan is their face closure.
    pub fn from_fan(fan: &Fan) -> Self {
        let cones = fan
            .maximal_cones()
            .iter()
            .map(|c| ConeJson { rays: fan.cone_rays(c).iter().map(vector_json).collect() })
            .collect();
        FanJson { rank: fan.rank(), cones }
    }

    pub fn to_fan(&self) -> Result<Fan, Error> {
        let cones = self
            .cones
            .iter()
            .map(|c| c.rays.iter().map(|r| vector_from(r, self.rank, "ray")).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Fan::new(self.rank, &cones)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffJson {
    pub ray: Vec<JsonInt>,
    pub a: JsonInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorJson {
    pub fan: FanJson,
    pub coeffs: Vec<CoeffJson>,
}

impl DivisorJson {
    pub fn from_divisor(d: &TorusInvariantDivisor) -> Self {
        let coeffs = d
            .fan()
            .rays()
            .iter()
            .zip(d.coefficients())
            .map(|(r, a)| CoeffJson { ray: vector_json(r), a: JsonInt(a.clone()) })
            .collect();
        DivisorJson { fan: FanJson::from_fan(d.fan()), coeffs }
    }

    pub fn to_divisor(&self) -> Result<TorusInvariantDivisor, Error> {
        let fan = self.fan.to_fan()?;
        let mut map = std::collections::BTreeMap::new();
        for c in &self.coeffs {
            let ray = vector_from(&c.ray, fan.rank(), "ray")?;
            if map.insert(ray, c.a.0.clone()).is_some() {
                return Err(Error::Parse("repeated ray".into()));
            }
        }
        Ok(TorusInvariantDivisor::new(fan, map)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointJson {
    pub coords: Vec<RationalJson>,
}

impl PointJson {
    pub fn from_point(p: &RationalTorusPoint) -> Self {
        PointJson { coords: p.coords().iter().map(RationalJson::from_rational).collect() }
    }

    pub fn to_point(&self) -> Result<RationalTorusPoint, Error> {
        let coords = self.coords.iter().map(RationalJson::to_rational).collect::<Result<Vec<_>, _>>()?;
        Ok(RationalTorusPoint::new(coords)?)
    }
}

/// A list of points; an optional `schema` tag lets enumeration output be read back directly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointListJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub points: Vec<PointJson>,
}

impl PointListJson {
    pub fn to_points(&self) -> Result<Vec<RationalTorusPoint>, Error> {
        self.points.iter().map(PointJson::to_point).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaceSetJson {
    pub primes: Vec<u64>,
}

impl PlaceSetJson {
    pub fn from_places(s: &PlaceSet) -> Self {
        PlaceSetJson { primes: s.primes().to_vec() }
    }

    pub fn to_places(&self) -> Result<PlaceSet, Error> {
        Ok(PlaceSet::new(&self.primes)?)
    }
}

/// Parses a JSON document into one of the schema types.
pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}
