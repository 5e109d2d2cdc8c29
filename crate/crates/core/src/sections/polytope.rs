use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;

use super::SectionsError;
use crate::lattice::linalg::{affine_dim, ceil, floor, solve_square, to_rational};
use crate::lattice::{count_box, Halfspace, LatticeVector};
use crate::toricfan::TorusInvariantDivisor;

/// `P_D = { m : ⟨m, r⟩ ≥ −a_r }` for a divisor on a complete fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionPolytope {
    rank: usize,
    halfspaces: Vec<Halfspace>,
    vertices: Vec<Vec<BigRational>>,
}

impl SectionPolytope {
    pub fn new(d: &TorusInvariantDivisor) -> Result<Self, SectionsError> {
        let fan = d.fan();
        if !fan.is_complete() {
            return Err(SectionsError::IncompleteFan);
        }
        let rank = fan.rank();
        let halfspaces: Vec<Halfspace> = fan
            .rays()
            .iter()
            .zip(d.coefficients())
            .map(|(r, a)| Halfspace { normal: r.entries().to_vec(), bound: -a })
            .collect();
        let rows: Vec<Vec<BigRational>> = fan.rays().iter().map(to_rational).collect();
        let mut vertices: Vec<Vec<BigRational>> = Vec::new();
        for subset in (0..rows.len()).combinations(rank) {
            let a: Vec<Vec<BigRational>> = subset.iter().map(|&i| rows[i].clone()).collect();
            let b: Vec<BigRational> = subset.iter().map(|&i| BigRational::from_integer(halfspaces[i].bound.clone())).collect();
            let Some(x) = solve_square(&a, &b) else { continue };
            let feasible = rows.iter().zip(&halfspaces).all(|(r, h)| {
                let v: BigRational = r.iter().zip(&x).map(|(p, q)| p * q).sum();
                v >= BigRational::from_integer(h.bound.clone())
            });
            if feasible {
                vertices.push(x);
            }
        }
        vertices.sort();
        vertices.dedup();
        Ok(SectionPolytope { rank, halfspaces, vertices })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn vertices(&self) -> &[Vec<BigRational>] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension as a rational polytope, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        affine_dim(&self.vertices)
    }

    /// Lattice points of `m · P_D`.
    pub fn count(&self, m: u64) -> BigInt {
        if self.vertices.is_empty() {
            return BigInt::from(0);
        }
        let k = BigInt::from(m);
        let kq = BigRational::from_integer(k.clone());
        let lower: Vec<BigInt> =
            (0..self.rank).map(|i| self.vertices.iter().map(|v| ceil(&(&v[i] * &kq))).min().expect("nonempty")).collect();
        let upper: Vec<BigInt> =
            (0..self.rank).map(|i| self.vertices.iter().map(|v| floor(&(&v[i] * &kq))).max().expect("nonempty")).collect();
        let scaled: Vec<Halfspace> =
            self.halfspaces.iter().map(|h| Halfspace { normal: h.normal.clone(), bound: &h.bound * &k }).collect();
        count_box(&lower, &upper, &scaled)
    }

    pub fn contains(&self, m: &LatticeVector) -> bool {
        self.halfspaces.iter().all(|h| m.entries().iter().zip(&h.normal).map(|(a, b)| a * b).sum::<BigInt>() >= h.bound)
    }
}

/// `h⁰(X, mD)`: lattice points of `m · P_D`.
pub fn h0(d: &TorusInvariantDivisor, m: u64) -> Result<BigInt, SectionsError> {
    if m == 0 {
        return Err(SectionsError::NonPositiveMultiple);
    }
    Ok(SectionPolytope::new(d)?.count(m))
}
