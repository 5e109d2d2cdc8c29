use std::collections::{BTreeMap, BTreeSet};

use super::FanError;
use crate::cones::RationalCone;
use crate::lattice::linalg::rank_of;
use crate::lattice::{is_unimodular_extension, LatticeVector};
use crate::newton::LatticePolytope;

/// A finite collection of pointed rational cones in `N = Z^μ`, closed under taking faces.
///
/// Rays are stored once, sorted; each cone is the sorted list of its ray indices. The zero
/// cone is the empty list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<LatticeVector>,
    cones: Vec<Vec<usize>>,
    dims: Vec<usize>,
    maximal: Vec<usize>,
}

impl Fan {
    /// Builds the face closure of the given cones. Each cone is given by any generating set.
    pub fn new(rank: usize, cones: &[Vec<LatticeVector>]) -> Result<Self, FanError> {
        let mut parsed = Vec::with_capacity(cones.len());
        let mut rays: BTreeSet<LatticeVector> = BTreeSet::new();
        for gens in cones {
            let c = RationalCone::new(rank, gens)?;
            if !c.is_pointed() {
                return Err(FanError::NotPointed);
            }
            rays.extend(c.generators().iter().cloned());
            parsed.push(c);
        }
        let rays: Vec<LatticeVector> = rays.into_iter().collect();
        let index: BTreeMap<&LatticeVector, usize> = rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        all.insert(Vec::new());
        for c in &parsed {
            for face in c.face_generator_sets() {
                let mut ids: Vec<usize> = face.iter().map(|&g| index[&c.generators()[g]]).collect();
                ids.sort_unstable();
                all.insert(ids);
            }
        }
        Ok(Self::from_ray_sets(rank, rays, all.into_iter().collect()))
    }

    pub fn from_i64(rank: usize, cones: &[&[&[i64]]]) -> Result<Self, FanError> {
        let cones: Vec<Vec<LatticeVector>> =
            cones.iter().map(|c| c.iter().map(|r| LatticeVector::from_i64(r)).collect()).collect();
        Self::new(rank, &cones)
    }

    // `cones` must already be face-closed and refer to `rays`
    pub(crate) fn from_ray_sets(rank: usize, rays: Vec<LatticeVector>, mut cones: Vec<Vec<usize>>) -> Self {
        cones.sort_by(|a, b| {
            let va: Vec<&LatticeVector> = a.iter().map(|&i| &rays[i]).collect();
            let vb: Vec<&LatticeVector> = b.iter().map(|&i| &rays[i]).collect();
            a.len().cmp(&b.len()).then(va.cmp(&vb))
        });
        cones.dedup();
        let dims: Vec<usize> =
            cones.iter().map(|c| rank_of(&c.iter().map(|&i| rays[i].clone()).collect::<Vec<_>>())).collect();
        let maximal: Vec<usize> = (0..cones.len())
            .filter(|&i| !cones.iter().any(|o| o.len() > cones[i].len() && is_subset(&cones[i], o)))
            .collect();
        Fan { rank, rays, cones, dims, maximal }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn ray_index(&self, r: &LatticeVector) -> Option<usize> {
        self.rays.binary_search(r).ok()
    }

    /// All cones as ray-index sets, zero cone first.
    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn cone_dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    /// Indices (into `cones()`) of the maximal cones.
    pub fn maximal(&self) -> &[usize] {
        &self.maximal
    }

    pub fn maximal_cones(&self) -> Vec<&[usize]> {
        self.maximal.iter().map(|&i| self.cones[i].as_slice()).collect()
    }

    pub fn cone_rays(&self, cone: &[usize]) -> Vec<LatticeVector> {
        cone.iter().map(|&i| self.rays[i].clone()).collect()
    }

    pub fn rational_cone(&self, cone: &[usize]) -> RationalCone {
        RationalCone::new(self.rank, &self.cone_rays(cone)).expect("fan cones share the fan's rank")
    }

    /// Codimension-one cones with the maximal cones containing them.
    pub fn walls(&self) -> Vec<(usize, Vec<usize>)> {
        (0..self.cones.len())
            .filter(|&i| self.dims[i] + 1 == self.rank)
            .map(|i| {
                let owners =
                    self.maximal.iter().copied().filter(|&m| is_subset(&self.cones[i], &self.cones[m])).collect();
                (i, owners)
            })
            .collect()
    }

    /// Every maximal cone full-dimensional and every wall shared by exactly two of them.
    pub fn is_complete(&self) -> bool {
        if self.maximal.iter().any(|&m| self.dims[m] != self.rank) {
            return false;
        }
        self.walls().iter().all(|(_, owners)| owners.len() == 2)
    }

    pub fn is_simplicial_cone(&self, cone: &[usize]) -> bool {
        let dim = self.dims[self.cones.iter().position(|c| c == cone).expect("cone of this fan")];
        dim == cone.len()
    }

    /// Rays of the cone extend to a basis of `N`.
    pub fn is_smooth_cone(&self, cone: &[usize]) -> bool {
        matches!(is_unimodular_extension(&self.cone_rays(cone)), Ok(true))
    }

    pub fn is_smooth(&self) -> bool {
        self.maximal_cones().iter().all(|c| self.is_smooth_cone(c))
    }

    /// Smallest cone containing `v`, as an index into `cones()`.
    pub fn cone_containing(&self, v: &LatticeVector) -> Option<usize> {
        (0..self.cones.len()).find(|&i| self.rational_cone(&self.cones[i]).contains(v))
    }

    /// A maximal cone containing `v`.
    pub fn maximal_containing(&self, v: &LatticeVector) -> Option<usize> {
        self.maximal.iter().copied().find(|&m| self.rational_cone(&self.cones[m]).contains(v))
    }
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Normal fan of a full-dimensional polytope: one cone of inner facet normals per face.
pub fn completion_fan(p: &LatticePolytope) -> Result<Fan, FanError> {
    if !p.is_full_dimensional() {
        return Err(FanError::NotFullDimensional { dim: p.dim(), rank: p.rank() });
    }
    let cones: Vec<Vec<LatticeVector>> = (0..p.vertices().len())
        .map(|i| {
            p.facets().iter().filter(|f| f.vertices.binary_search(&i).is_ok()).map(|f| f.functional.clone()).collect()
        })
        .collect();
    Fan::new(p.rank(), &cones)
}
