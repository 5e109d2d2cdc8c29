use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::fan::is_subset;
use super::{Fan, FanError};
use crate::lattice::{solve_integer, LatticeMatrix, LatticeVector};
use crate::newton::{newton_polytope, LatticePolytope, LaurentPolynomial};

/// `Σ a_r D_r` over the rays of a fan. Coefficients are aligned with `fan.rays()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusInvariantDivisor {
    fan: Fan,
    coeffs: Vec<BigInt>,
}

impl TorusInvariantDivisor {
    /// Keys must be exactly the rays of `fan`.
    pub fn new(fan: Fan, coeffs: BTreeMap<LatticeVector, BigInt>) -> Result<Self, FanError> {
        if coeffs.len() != fan.rays().len() {
            return Err(FanError::RayMismatch);
        }
        let mut aligned = Vec::with_capacity(coeffs.len());
        for (r, (k, a)) in fan.rays().iter().zip(coeffs) {
            if *r != k {
                return Err(FanError::RayMismatch);
            }
            aligned.push(a);
        }
        Ok(TorusInvariantDivisor { fan, coeffs: aligned })
    }

    pub fn from_aligned(fan: Fan, coeffs: Vec<BigInt>) -> Result<Self, FanError> {
        if coeffs.len() != fan.rays().len() {
            return Err(FanError::RayMismatch);
        }
        Ok(TorusInvariantDivisor { fan, coeffs })
    }

    pub fn zero(fan: Fan) -> Self {
        let coeffs = vec![BigInt::zero(); fan.rays().len()];
        TorusInvariantDivisor { fan, coeffs }
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, ray: &LatticeVector) -> Option<&BigInt> {
        self.fan.ray_index(ray).map(|i| &self.coeffs[i])
    }

    pub fn coefficient_map(&self) -> BTreeMap<LatticeVector, BigInt> {
        self.fan.rays().iter().cloned().zip(self.coeffs.iter().cloned()).collect()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        TorusInvariantDivisor { fan: self.fan.clone(), coeffs: self.coeffs.iter().map(|a| a * k).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FanError> {
        if self.fan != other.fan {
            return Err(FanError::FanMismatch);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(TorusInvariantDivisor { fan: self.fan.clone(), coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// For each maximal cone (in `fan.maximal()` order) an integral `m_σ` with
    /// `⟨m_σ, r⟩ = −a_r` on its rays.
    pub fn cartier_data(&self) -> Result<Vec<LatticeVector>, FanError> {
        self.fan.maximal_cones().iter().map(|c| self.local_data(c)).collect()
    }

    pub fn is_cartier(&self) -> bool {
        self.cartier_data().is_ok()
    }

    fn local_data(&self, cone: &[usize]) -> Result<LatticeVector, FanError> {
        let rank = self.fan.rank();
        if cone.is_empty() {
            return Ok(LatticeVector::zero(rank));
        }
        let a = LatticeMatrix::from_rows(rank, self.fan.cone_rays(cone)).expect("rays share the fan's rank");
        let b = LatticeVector::new(cone.iter().map(|&i| -&self.coeffs[i]).collect());
        solve_integer(&a, &b).expect("shapes agree").ok_or(FanError::NotCartier)
    }

    /// Value of the support function `ψ(v) = ⟨m_σ, v⟩` for a maximal cone `σ ∋ v`.
    pub fn support_value(&self, v: &LatticeVector) -> Result<BigInt, FanError> {
        let m = self.fan.maximal_containing(v).ok_or(FanError::OutsideSupport)?;
        Ok(self.local_data(&self.fan.cones()[m])?.dot(v))
    }

    /// Strict convexity across every wall. Requires a complete fan.
    pub fn is_ample(&self) -> Result<bool, FanError> {
        self.wall_test(true)
    }

    /// Convexity (not necessarily strict) across every wall.
    pub fn is_nef(&self) -> Result<bool, FanError> {
        self.wall_test(false)
    }

    fn wall_test(&self, strict: bool) -> Result<bool, FanError> {
        if !self.fan.is_complete() {
            return Err(FanError::IncompleteFan);
        }
        let data: BTreeMap<usize, LatticeVector> =
            self.fan.maximal().iter().copied().zip(self.cartier_data()?).collect();
        for (_, owners) in self.fan.walls() {
            let (s1, s2) = (owners[0], owners[1]);
            for (s, t) in [(s1, s2), (s2, s1)] {
                let m = &data[&s];
                let cs = &self.fan.cones()[s];
                for &r in &self.fan.cones()[t] {
                    if is_subset(&[r], cs) {
                        continue;
                    }
                    let lhs = m.dot(&self.fan.rays()[r]);
                    let rhs = -&self.coeffs[r];
                    if lhs < rhs || (strict && lhs == rhs) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

pub fn is_ample(d: &TorusInvariantDivisor) -> Result<bool, FanError> {
    d.is_ample()
}

/// The closure of `(f)` on a fan, with the vertex of `Δ_f` giving the local section on each
/// maximal cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClosure {
    pub divisor: TorusInvariantDivisor,
    /// Lex-least vertex of `Δ_f`; coefficients are computed for `Δ_f − origin`.
    pub origin: LatticeVector,
    /// Per maximal cone (in `fan.maximal()` order) the vertex of `Δ_f` minimizing its rays.
    pub vertices: Vec<LatticeVector>,
}

pub fn divisor_closure(f: &LaurentPolynomial, fan: &Fan) -> Result<DivisorClosure, FanError> {
    polytope_divisor(&newton_polytope(f), fan)
}

/// The divisor whose support function is that of `p`, translated so its lex-least vertex is 0.
pub fn polytope_divisor(p: &LatticePolytope, fan: &Fan) -> Result<DivisorClosure, FanError> {
    if p.rank() != fan.rank() {
        return Err(FanError::RankMismatch { expected: fan.rank(), found: p.rank() });
    }
    let origin = p.vertices()[0].clone();
    let shifted: Vec<LatticeVector> = p.vertices().iter().map(|v| v - &origin).collect();
    let coeffs: Vec<BigInt> = fan
        .rays()
        .iter()
        .map(|r| -shifted.iter().map(|v| r.dot(v)).min().expect("nonempty vertex set"))
        .collect();
    let mut vertices = Vec::with_capacity(fan.maximal().len());
    for cone in fan.maximal_cones() {
        let hit = shifted.iter().position(|v| cone.iter().all(|&i| fan.rays()[i].dot(v) == -&coeffs[i]));
        match hit {
            Some(k) => vertices.push(p.vertices()[k].clone()),
            None => return Err(FanError::FanMismatch),
        }
    }
    let divisor = TorusInvariantDivisor { fan: fan.clone(), coeffs };
    Ok(DivisorClosure { divisor, origin, vertices })
}

/// Whether the closure of `{f = 0}` meets no torus orbit of the divisor's toric variety in a whole
/// orbit, read off the local sections `f · x^{−origin − m_σ}`.
///
/// The divisor must be Cartier and its sections must actually lie over `Δ_f − origin`.
pub fn closure_avoids_orbits(f: &LaurentPolynomial, d: &TorusInvariantDivisor, origin: &LatticeVector) -> Result<bool, FanError> {
    let fan = d.fan();
    if f.rank() != fan.rank() || origin.rank() != fan.rank() {
        return Err(FanError::RankMismatch { expected: fan.rank(), found: f.rank() });
    }
    let data = d.cartier_data()?;
    let support: Vec<LatticeVector> = f.support().iter().map(|m| m - origin).collect();
    for (&mi, m_sigma) in fan.maximal().iter().zip(&data) {
        let sigma = &fan.cones()[mi];
        let local: Vec<LatticeVector> = support.iter().map(|m| m - m_sigma).collect();
        for tau in fan.cones().iter().filter(|t| is_subset(t, sigma)) {
            let hit = local.iter().any(|m| tau.iter().all(|&r| fan.rays()[r].dot(m).is_zero()));
            if !hit {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
