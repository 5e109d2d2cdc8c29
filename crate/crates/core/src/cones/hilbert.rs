use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{vertex_cone, ConeError, RationalCone};
use crate::hull::dot;
use crate::lattice::{scan_box, Halfspace, LatticeVector};
use crate::newton::LatticePolytope;

/// Minimal generating set of the monoid `cone ∩ Z^μ` of a pointed cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    pub cone: RationalCone,
    pub elements: Vec<LatticeVector>,
}

/// Hilbert basis by exhaustive search of the zonotope `Σ [0,1]·g` over the primitive generators.
///
/// Each irreducible element lies in the half-open parallelepiped of some simplicial subcone,
/// hence in the zonotope's bounding box.
pub fn hilbert_basis(c: &RationalCone) -> Result<HilbertBasis, ConeError> {
    if !c.is_pointed() {
        return Err(ConeError::NotPointed(c.lineality_rank()));
    }
    let frame = c.span_frame();
    let s = frame.dim();
    let gens: Vec<Vec<BigInt>> = c.generators().iter().map(|g| frame.coords(g).expect("in span")).collect();
    let mut lower = vec![BigInt::zero(); s];
    let mut upper = vec![BigInt::zero(); s];
    for g in &gens {
        for i in 0..s {
            if g[i].is_negative() {
                lower[i] += &g[i];
            } else {
                upper[i] += &g[i];
            }
        }
    }
    let halfspaces: Vec<Halfspace> =
        c.facet_coords().iter().map(|n| Halfspace { normal: n.clone(), bound: BigInt::zero() }).collect();
    let grading: Vec<BigInt> = (0..s).map(|i| c.facet_coords().iter().map(|n| &n[i]).sum()).collect();
    let mut candidates: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
    scan_box(&lower, &upper, &halfspaces, &mut |x| {
        if x.iter().any(|v| !v.is_zero()) {
            candidates.push((dot(&grading, x), x.to_vec()));
        }
    });
    candidates.sort();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for (_, x) in candidates {
        let reducible = basis.iter().any(|h| {
            let diff: Vec<BigInt> = x.iter().zip(h).map(|(a, b)| a - b).collect();
            c.contains_coords(&diff)
        });
        if !reducible {
            basis.push(x);
        }
    }
    let mut elements: Vec<LatticeVector> = basis.iter().map(|x| frame.embed(x)).collect();
    elements.sort();
    Ok(HilbertBasis { cone: c.clone(), elements })
}

/// Whether `target` is a nonnegative integer combination of `gens`, all lying in the pointed cone `c`.
pub fn monoid_contains(c: &RationalCone, gens: &[LatticeVector], target: &LatticeVector) -> bool {
    let frame = c.span_frame();
    let Some(t) = frame.coords(target) else { return false };
    let gens: Vec<Vec<BigInt>> =
        gens.iter().filter(|g| !g.is_zero()).filter_map(|g| frame.coords(g)).collect();
    let mut memo: HashMap<Vec<BigInt>, bool> = HashMap::new();
    reach(c, &gens, t, &mut memo)
}

fn reach(c: &RationalCone, gens: &[Vec<BigInt>], x: Vec<BigInt>, memo: &mut HashMap<Vec<BigInt>, bool>) -> bool {
    if x.iter().all(Zero::is_zero) {
        return true;
    }
    if !c.contains_coords(&x) {
        return false;
    }
    if let Some(&r) = memo.get(&x) {
        return r;
    }
    let mut found = false;
    for g in gens {
        let rest: Vec<BigInt> = x.iter().zip(g).map(|(a, b)| a - b).collect();
        if reach(c, gens, rest, memo) {
            found = true;
            break;
        }
    }
    memo.insert(x, found);
    found
}

/// Whether the differences `q − v` of lattice points generate the monoid of the vertex cone.
pub fn is_saturated_at_vertex(p: &LatticePolytope, v: &LatticeVector) -> Result<bool, ConeError> {
    let cone = vertex_cone(p, v)?;
    let diffs: Vec<LatticeVector> = p.lattice_points().iter().map(|q| q - v).collect();
    let hb = hilbert_basis(&cone)?;
    Ok(hb.elements.iter().all(|h| diffs.contains(h) || monoid_contains(&cone, &diffs, h)))
}

/// Least `n ≥ 1` for which every vertex of `n·P` is saturated, searched up to `cap`.
pub fn smallest_good_multiple(p: &LatticePolytope, cap: u32) -> Result<u32, ConeError> {
    for n in 1..=cap {
        let q = p.dilate(n).expect("n ≥ 1");
        let mut ok = true;
        for v in q.vertices() {
            if !is_saturated_at_vertex(&q, v)? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(n);
        }
    }
    Err(ConeError::CapExceeded(cap))
}
