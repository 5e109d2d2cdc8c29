use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{FanError, MonomialMap};
use crate::cones::face_cone;
use crate::lattice::{LatticeMatrix, LatticeVector, SpanFrame};
use crate::newton::{character_value, newton_polytope, Face, LatticePolytope, LaurentPolynomial};

/// A torus orbit of the completion, labelled by a face of the polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDescriptor {
    pub face: Face,
    pub dim: usize,
    /// Basis of the characters of the orbit's torus, as a saturated sublattice of `M`.
    pub character_basis: Vec<LatticeVector>,
}

impl OrbitDescriptor {
    /// Whether this orbit lies in the closure of `other`.
    pub fn lies_in_closure_of(&self, other: &OrbitDescriptor) -> bool {
        self.face.vertices.iter().all(|v| other.face.vertices.binary_search(v).is_ok())
    }
}

pub fn orbit_table(p: &LatticePolytope) -> Vec<OrbitDescriptor> {
    p.faces()
        .into_iter()
        .map(|face| {
            let cone = face_cone(p, &face).expect("face cones share the polytope's rank");
            let character_basis = cone.lineality_subgroup().to_vec();
            OrbitDescriptor { dim: face.dim, face, character_basis }
        })
        .collect()
}

/// Every face of `Δ_f` carries a support point of `f`.
pub fn orbit_avoidance(f: &LaurentPolynomial) -> bool {
    orbit_avoidance_with(&newton_polytope(f), f)
}

/// Every face of `p` contains a lattice point where `f` has a nonzero coefficient.
pub fn orbit_avoidance_with(p: &LatticePolytope, f: &LaurentPolynomial) -> bool {
    if p.rank() != f.rank() {
        return false;
    }
    let support = f.support();
    p.faces().iter().all(|face| support.iter().any(|m| p.face_contains(face, m)))
}

/// Projection of the big torus onto the torus of an orbit, with a section of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitProjection {
    pub basis: Vec<LatticeVector>,
    pub map: MonomialMap,
    section: Vec<LatticeVector>,
}

impl OrbitProjection {
    /// `t ↦ (t^b)_{b ∈ basis}`.
    pub fn project(&self, t: &[BigRational]) -> Result<Vec<BigRational>, FanError> {
        self.map.apply_point(t)
    }

    /// A point of the big torus projecting to `s`, trivial on a complement of the basis.
    pub fn include(&self, s: &[BigRational]) -> Result<Vec<BigRational>, FanError> {
        if s.len() != self.basis.len() {
            return Err(FanError::RankMismatch { expected: self.basis.len(), found: s.len() });
        }
        if s.iter().any(Zero::is_zero) {
            return Err(FanError::ZeroCoordinate);
        }
        let rank = self.map.source_rank();
        Ok((0..rank)
            .map(|k| {
                let exps = LatticeVector::new(self.section.iter().map(|c| c[k].clone()).collect());
                if exps.rank() == 0 {
                    BigRational::one()
                } else {
                    character_value(s, &exps)
                }
            })
            .collect())
    }
}

pub fn equivariant_projection(p: &LatticePolytope, face: &Face) -> OrbitProjection {
    let cone = face_cone(p, face).expect("face cones share the polytope's rank");
    let basis = cone.lineality_subgroup().to_vec();
    let rank = p.rank();
    let matrix = LatticeMatrix::from_rows(rank, basis.clone()).expect("basis vectors have the polytope's rank");
    let frame = SpanFrame::new(rank, &basis).expect("basis vectors have the polytope's rank");
    let section = (0..basis.len())
        .map(|j| {
            let values: Vec<_> = (0..basis.len()).map(|i| if i == j { One::one() } else { Zero::zero() }).collect();
            frame.lift_functional(&values)
        })
        .collect();
    OrbitProjection { basis, map: MonomialMap::new(matrix, rank), section }
}
