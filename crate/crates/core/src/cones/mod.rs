//! Rational polyhedral cones in `Z^μ`: vertex cones, face cones, lineality, Hilbert bases.

mod hilbert;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::hull::{cone_facets, dot};
use crate::lattice::linalg::rank_of;
use crate::lattice::{saturate_sublattice, LatticeVector, SpanFrame};
use crate::newton::{Face, LatticePolytope};

pub use hilbert::{hilbert_basis, is_saturated_at_vertex, monoid_contains, smallest_good_multiple, HilbertBasis};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConeError {
    #[error("{0} is not a vertex of the polytope")]
    NotAVertex(LatticeVector),
    #[error("cone has a lineality space of rank {0}")]
    NotPointed(usize),
    #[error("no saturating multiple found up to the cap {0}")]
    CapExceeded(u32),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
}

/// `{ Σ λ_i g_i : λ_i ≥ 0 }` for finitely many lattice vectors `g_i`.
///
/// Generators are canonical: primitive, sorted, irredundant. For a cone with lineality they are
/// `±` a Hermite basis of the lineality lattice followed by one representative per extreme ray
/// of the quotient.
#[derive(Clone, Debug)]
pub struct RationalCone {
    rank: usize,
    generators: Vec<LatticeVector>,
    lineality: Vec<LatticeVector>,
    frame: SpanFrame,
    // inner normals, in frame coordinates and lifted to Z^μ
    facet_coords: Vec<Vec<BigInt>>,
    facets: Vec<LatticeVector>,
}

impl PartialEq for RationalCone {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.generators == other.generators
    }
}

impl Eq for RationalCone {}

impl RationalCone {
    pub fn new(rank: usize, vectors: &[LatticeVector]) -> Result<Self, ConeError> {
        if let Some(bad) = vectors.iter().find(|v| v.rank() != rank) {
            return Err(ConeError::RankMismatch { expected: rank, found: bad.rank() });
        }
        let vs: BTreeSet<LatticeVector> = vectors.iter().filter(|v| !v.is_zero()).map(|v| v.primitive()).collect();
        let vs: Vec<LatticeVector> = vs.into_iter().collect();
        let frame = SpanFrame::new(rank, &vs).expect("ranks checked");
        let s = frame.dim();
        let coords: Vec<Vec<BigInt>> = vs.iter().map(|v| frame.coords(v).expect("in span")).collect();
        let facet_coords = cone_facets(&coords, s);
        let facets: Vec<LatticeVector> = facet_coords.iter().map(|n| frame.lift_functional(n)).collect();
        let tight: Vec<Vec<usize>> = coords
            .iter()
            .map(|c| (0..facet_coords.len()).filter(|&f| dot(&facet_coords[f], c).is_zero()).collect())
            .collect();

        let in_lineality: Vec<LatticeVector> =
            vs.iter().zip(&tight).filter(|(_, t)| t.len() == facet_coords.len()).map(|(v, _)| v.clone()).collect();
        let lineality = saturate_sublattice(rank, &in_lineality).expect("ranks checked");
        let l = lineality.len();

        let mut generators: Vec<LatticeVector> = Vec::new();
        for b in &lineality {
            generators.push(b.clone());
            generators.push(-b);
        }
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for (v, t) in vs.iter().zip(&tight) {
            if t.len() == facet_coords.len() {
                continue;
            }
            let rows: Vec<LatticeVector> = t.iter().map(|&f| LatticeVector::new(facet_coords[f].clone())).collect();
            if rank_of(&rows) + l + 1 == s && seen.insert(t.clone()) {
                generators.push(v.clone());
            }
        }
        generators.sort();
        Ok(RationalCone { rank, generators, lineality, frame, facet_coords, facets })
    }

    pub fn from_i64(rank: usize, vectors: &[&[i64]]) -> Result<Self, ConeError> {
        Self::new(rank, &vectors.iter().map(|v| LatticeVector::from_i64(v)).collect::<Vec<_>>())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    pub fn lineality_rank(&self) -> usize {
        self.lineality.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    pub fn span_frame(&self) -> &SpanFrame {
        &self.frame
    }

    /// Inner facet normals lifted to `Z^μ` (they vanish on a fixed complement of the span).
    pub fn facet_normals(&self) -> &[LatticeVector] {
        &self.facets
    }

    pub(crate) fn facet_coords(&self) -> &[Vec<BigInt>] {
        &self.facet_coords
    }

    pub fn contains(&self, x: &LatticeVector) -> bool {
        match self.frame.coords(x) {
            Some(c) => self.contains_coords(&c),
            None => false,
        }
    }

    pub(crate) fn contains_coords(&self, c: &[BigInt]) -> bool {
        self.facet_coords.iter().all(|n| !dot(n, c).is_negative())
    }

    /// Whether `x` lies in the relative interior.
    pub fn contains_in_relative_interior(&self, x: &LatticeVector) -> bool {
        match self.frame.coords(x) {
            Some(c) => self.facet_coords.iter().all(|n| dot(n, &c).is_positive()),
            None => false,
        }
    }

    /// Basis of the largest subgroup `c ∩ (−c) ∩ Z^μ`, saturated, in Hermite form.
    pub fn lineality_subgroup(&self) -> &[LatticeVector] {
        &self.lineality
    }

    /// A lattice vector strictly positive on every nonzero element of a pointed cone.
    pub fn grading(&self) -> LatticeVector {
        self.facets.iter().fold(LatticeVector::zero(self.rank), |acc, f| &acc + f)
    }

    /// Faces of a pointed cone, as sets of generator indices (including `{}` and all generators).
    pub fn face_generator_sets(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.generators.len()).collect();
        let facet_sets: Vec<Vec<usize>> = self
            .facets
            .iter()
            .map(|n| (0..self.generators.len()).filter(|&i| n.dot(&self.generators[i]).is_zero()).collect())
            .collect();
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        sets.insert(all);
        sets.insert(Vec::new());
        let mut frontier = facet_sets.clone();
        while let Some(s) = frontier.pop() {
            if !sets.insert(s.clone()) {
                continue;
            }
            for f in &facet_sets {
                let meet: Vec<usize> = s.iter().copied().filter(|i| f.binary_search(i).is_ok()).collect();
                if !sets.contains(&meet) {
                    frontier.push(meet);
                }
            }
        }
        sets.into_iter().collect()
    }
}

/// Cone at a vertex: generated by `q − v` over lattice points `q` of the polytope.
pub fn vertex_cone(p: &LatticePolytope, v: &LatticeVector) -> Result<RationalCone, ConeError> {
    if !p.is_vertex(v) {
        return Err(ConeError::NotAVertex(v.clone()));
    }
    let gens: Vec<LatticeVector> = p.vertices().iter().map(|q| q - v).collect();
    RationalCone::new(p.rank(), &gens)
}

/// Cone generated by `m' − m` with `m'` in the polytope and `m` in the face.
pub fn face_cone(p: &LatticePolytope, face: &Face) -> Result<RationalCone, ConeError> {
    let mut gens = Vec::new();
    for m in p.face_points(face) {
        for q in p.vertices() {
            gens.push(q - &m);
        }
    }
    RationalCone::new(p.rank(), &gens)
}

pub fn lineality_subgroup(c: &RationalCone) -> Vec<LatticeVector> {
    c.lineality_subgroup().to_vec()
}
