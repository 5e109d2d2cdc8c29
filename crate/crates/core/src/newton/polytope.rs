use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{LaurentPolynomial, NewtonError};
use crate::hull::{cone_facets, dot};
use crate::lattice::linalg::rank_of;
use crate::lattice::{scan_box, Halfspace, LatticeVector, SpanFrame};

/// A facet inequality `⟨functional, x⟩ ≥ bound`, tight exactly on `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub functional: LatticeVector,
    pub bound: BigInt,
    pub vertices: Vec<usize>,
    // homogeneous normal (a0, a) in frame coordinates: a0 + a·y ≥ 0
    coords_normal: Vec<BigInt>,
}

/// Convex hull of finitely many lattice points, possibly lower-dimensional.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    rank: usize,
    vertices: Vec<LatticeVector>,
    dim: usize,
    origin: LatticeVector,
    frame: SpanFrame,
    facets: Vec<Facet>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

/// A face, given by its vertices (indices into the polytope's vertex list) and a functional
/// whose minimum over the polytope is attained exactly on it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub dim: usize,
    pub vertices: Vec<usize>,
    pub functional: LatticeVector,
}

impl LatticePolytope {
    pub fn from_points(rank: usize, points: &[LatticeVector]) -> Result<Self, NewtonError> {
        if rank == 0 {
            return Err(NewtonError::ZeroRank);
        }
        if let Some(bad) = points.iter().find(|p| p.rank() != rank) {
            return Err(NewtonError::RankMismatch { expected: rank, found: bad.rank() });
        }
        let pts: BTreeSet<LatticeVector> = points.iter().cloned().collect();
        let pts: Vec<LatticeVector> = pts.into_iter().collect();
        let Some(origin) = pts.first().cloned() else { return Err(NewtonError::EmptyPointSet) };
        let diffs: Vec<LatticeVector> = pts.iter().map(|p| p - &origin).collect();
        let frame = SpanFrame::new(rank, &diffs).expect("ranks checked above");
        let d = frame.dim();
        if d == 0 {
            return Ok(LatticePolytope { rank, vertices: vec![origin.clone()], dim: 0, origin, frame, facets: Vec::new() });
        }
        let coords: Vec<Vec<BigInt>> = diffs.iter().map(|x| frame.coords(x).expect("in span")).collect();
        let homog: Vec<Vec<BigInt>> =
            coords.iter().map(|y| std::iter::once(BigInt::from(1)).chain(y.iter().cloned()).collect()).collect();
        let normals = cone_facets(&homog, d + 1);
        let tight: Vec<Vec<usize>> = homog
            .iter()
            .map(|h| (0..normals.len()).filter(|&f| dot(&normals[f], h).is_zero()).collect())
            .collect();
        let mut vertices: Vec<LatticeVector> = Vec::new();
        for (i, t) in tight.iter().enumerate() {
            let rows: Vec<LatticeVector> = t.iter().map(|&f| LatticeVector::new(normals[f][1..].to_vec())).collect();
            if rank_of(&rows) == d {
                vertices.push(pts[i].clone());
            }
        }
        vertices.sort();
        let origin = vertices[0].clone();
        let mut facets: Vec<Facet> = normals
            .into_iter()
            .map(|n| {
                let functional = frame.lift_functional(&n[1..]);
                // shift from the old origin (least point) to the least vertex: they coincide
                let bound = functional.dot(&origin) - &n[0];
                let vs = vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| functional.dot(v) == bound)
                    .map(|(i, _)| i)
                    .collect();
                Facet { functional, bound, vertices: vs, coords_normal: n }
            })
            .collect();
        facets.sort_by(|a, b| a.vertices.cmp(&b.vertices).then(a.functional.cmp(&b.functional)));
        Ok(LatticePolytope { rank, vertices, dim: d, origin, frame, facets })
    }

    pub fn from_i64(points: &[&[i64]]) -> Result<Self, NewtonError> {
        let rank = points.first().map_or(0, |p| p.len());
        Self::from_points(rank, &points.iter().map(|p| LatticeVector::from_i64(p)).collect::<Vec<_>>())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Extreme points in lexicographic order.
    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Saturated lattice spanned by `P - P`.
    pub fn span_frame(&self) -> &SpanFrame {
        &self.frame
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.rank
    }

    pub fn is_vertex(&self, v: &LatticeVector) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    pub fn contains(&self, x: &LatticeVector) -> bool {
        if x.rank() != self.rank || self.frame.coords(&(x - &self.origin)).is_none() {
            return false;
        }
        self.facets.iter().all(|f| f.functional.dot(x) >= f.bound)
    }

    /// All lattice points, lexicographically ordered.
    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        let d = self.dim;
        let coords: Vec<Vec<BigInt>> =
            self.vertices.iter().map(|v| self.frame.coords(&(v - &self.origin)).expect("in span")).collect();
        let lower: Vec<BigInt> = (0..d).map(|i| coords.iter().map(|c| c[i].clone()).min().unwrap()).collect();
        let upper: Vec<BigInt> = (0..d).map(|i| coords.iter().map(|c| c[i].clone()).max().unwrap()).collect();
        let halfspaces: Vec<Halfspace> = self
            .facets
            .iter()
            .map(|f| Halfspace { normal: f.coords_normal[1..].to_vec(), bound: -&f.coords_normal[0] })
            .collect();
        let mut out = Vec::new();
        scan_box(&lower, &upper, &halfspaces, &mut |y| out.push(&self.origin + &self.frame.embed(y)));
        out.sort();
        out
    }

    /// `n·P` for `n ≥ 1`.
    pub fn dilate(&self, n: u32) -> Result<Self, NewtonError> {
        if n == 0 {
            return Err(NewtonError::NonPositiveMultiple);
        }
        let k = BigInt::from(n);
        Self::from_points(self.rank, &self.vertices.iter().map(|v| v.scale(&k)).collect::<Vec<_>>())
    }

    pub fn translate(&self, t: &LatticeVector) -> Result<Self, NewtonError> {
        Self::from_points(self.rank, &self.vertices.iter().map(|v| v + t).collect::<Vec<_>>())
    }

    /// Affine dimension of a set of the polytope's vertices.
    pub fn vertex_set_dim(&self, vertices: &[usize]) -> usize {
        let Some(&first) = vertices.first() else { return 0 };
        let diffs: Vec<LatticeVector> = vertices[1..].iter().map(|&i| &self.vertices[i] - &self.vertices[first]).collect();
        rank_of(&diffs)
    }

    /// The complete face lattice (nonempty faces), ordered by dimension then vertex set.
    pub fn faces(&self) -> Vec<Face> {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        sets.insert(all);
        let mut frontier: Vec<Vec<usize>> = self.facets.iter().map(|f| f.vertices.clone()).collect();
        while let Some(s) = frontier.pop() {
            if s.is_empty() || !sets.insert(s.clone()) {
                continue;
            }
            for f in &self.facets {
                let meet: Vec<usize> = s.iter().copied().filter(|i| f.vertices.binary_search(i).is_ok()).collect();
                if !meet.is_empty() && !sets.contains(&meet) {
                    frontier.push(meet);
                }
            }
        }
        let mut faces: Vec<Face> = sets
            .into_iter()
            .map(|vs| {
                let mut functional = LatticeVector::zero(self.rank);
                for f in self.facets.iter().filter(|f| vs.iter().all(|i| f.vertices.binary_search(i).is_ok())) {
                    functional = &functional + &f.functional;
                }
                Face { dim: self.vertex_set_dim(&vs), vertices: vs, functional }
            })
            .collect();
        faces.sort();
        faces
    }

    /// Vertices of a face as points.
    pub fn face_points(&self, face: &Face) -> Vec<LatticeVector> {
        face.vertices.iter().map(|&i| self.vertices[i].clone()).collect()
    }

    /// Whether the lattice point lies on the face (`face` must belong to this polytope).
    pub fn face_contains(&self, face: &Face, x: &LatticeVector) -> bool {
        if !self.contains(x) {
            return false;
        }
        let min = face.functional.dot(&self.vertices[face.vertices[0]]);
        face.functional.dot(x) == min
    }
}

/// Newton polytope of `f`: the hull of its support.
pub fn newton_polytope(f: &LaurentPolynomial) -> LatticePolytope {
    LatticePolytope::from_points(f.rank(), &f.support()).expect("a valid polynomial has a nonempty support")
}
