use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::HeightsError;
use crate::lattice::linalg::solve_square;
use crate::lattice::{LatticeVector, SpanFrame};
use crate::newton::LatticePolytope;
use crate::toricfan::MonomialMap;

/// Constants with `h_Q(θ(P)) ≤ C · h_P(P) + c` for every point `P` of the source torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorialityBound {
    pub multiplier: BigRational,
    pub additive: BigRational,
    /// `t` with `θᵀ(Q) ⊆ C · P + t`.
    pub translate: Vec<BigRational>,
}

/// Least `C` with `θᵀ(Q)` inside a translate of `C · P`.
///
/// Heights are sums over places of support functions, and linear terms cancel by the product
/// formula, so the containment gives the inequality with `c = 0`.
pub fn functoriality_bound(theta: &MonomialMap, p_src: &LatticePolytope, p_dst: &LatticePolytope) -> Result<FunctorialityBound, HeightsError> {
    if p_src.rank() != theta.source_rank() {
        return Err(HeightsError::RankMismatch { expected: theta.source_rank(), found: p_src.rank() });
    }
    let image = theta.pull_polytope(p_dst)?;
    let rank = p_src.rank();
    let p0 = p_src.vertices()[0].clone();
    let q0 = image.vertices()[0].clone();
    let frame = SpanFrame::new(rank, &p_src.vertices().iter().map(|v| v - &p0).collect::<Vec<_>>())
        .expect("vertices share the polytope's rank");
    let d = frame.dim();
    let qs: Vec<Vec<BigInt>> = image
        .vertices()
        .iter()
        .map(|q| frame.coords(&(q - &q0)).map(|c| c[..d].to_vec()).ok_or(HeightsError::Unbounded))
        .collect::<Result<_, _>>()?;
    if d == 0 {
        let translate = q0.entries().iter().map(|x| BigRational::from_integer(x.clone())).collect();
        return Ok(FunctorialityBound { multiplier: BigRational::zero(), additive: BigRational::zero(), translate });
    }
    let ps: Vec<LatticeVector> = p_src
        .vertices()
        .iter()
        .map(|v| LatticeVector::new(frame.coords(&(v - &p0)).expect("vertex in its own span")[..d].to_vec()))
        .collect();
    let local = LatticePolytope::from_points(d, &ps)?;
    // variables (C, s): ⟨n, q⟩ − C·b − ⟨n, s⟩ ≥ 0 for each facet (n, b) of P and vertex q of θᵀ(Q)
    let mut rows: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    let int = |x: &BigInt| BigRational::from_integer(x.clone());
    for facet in local.facets() {
        for q in &qs {
            let nq: BigInt = facet.functional.entries().iter().zip(q).map(|(a, b)| a * b).sum();
            let mut row = vec![-int(&facet.bound)];
            row.extend(facet.functional.entries().iter().map(|a| -int(a)));
            rows.push((row, -int(&nq)));
        }
    }
    let mut unit = vec![BigRational::one()];
    unit.extend(std::iter::repeat(BigRational::zero()).take(d));
    rows.push((unit, BigRational::zero()));
    let feasible = |x: &[BigRational]| {
        rows.iter().all(|(a, b)| a.iter().zip(x).map(|(u, v)| u * v).sum::<BigRational>() >= *b)
    };
    let mut best: Option<Vec<BigRational>> = None;
    for subset in (0..rows.len()).combinations(d + 1) {
        let a: Vec<Vec<BigRational>> = subset.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vec<BigRational> = subset.iter().map(|&i| rows[i].1.clone()).collect();
        let Some(x) = solve_square(&a, &b) else { continue };
        if feasible(&x) && best.as_ref().map_or(true, |cur| x[0] < cur[0] || (x[0] == cur[0] && x < *cur)) {
            best = Some(x);
        }
    }
    let x = best.expect("a full-dimensional polytope absorbs any bounded set after scaling");
    let c = x[0].clone();
    // θᵀ(Q) ⊆ q0 + s + C·(P − p0) = C·P + (q0 + s − C·p0)
    let s_amb: Vec<BigRational> = (0..rank)
        .map(|k| {
            frame.basis().iter().zip(&x[1..]).map(|(bv, sj)| sj * int(&bv.entries()[k])).sum::<BigRational>()
        })
        .collect();
    let translate = (0..rank).map(|k| int(&q0.entries()[k]) + &s_amb[k] - &c * int(&p0.entries()[k])).collect();
    Ok(FunctorialityBound { multiplier: c, additive: BigRational::zero(), translate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heights::{height, LogValue, RationalTorusPoint};
    use crate::lattice::linalg::ratio;
    use crate::lattice::LatticeMatrix;

    #[test]
    fn identity_gives_one() {
        let tri = LatticePolytope::from_i64(&[&[0, 0], &[3, 1], &[1, 3]]).unwrap();
        let b = functoriality_bound(&MonomialMap::identity(2), &tri, &tri).unwrap();
        assert_eq!((b.multiplier, b.additive), (ratio(1, 1), ratio(0, 1)));
        assert_eq!(b.translate, vec![ratio(0, 1), ratio(0, 1)]);
    }

    #[test]
    fn squaring_gives_two() {
        let seg = LatticePolytope::from_i64(&[&[0], &[1]]).unwrap();
        let theta = MonomialMap::from_matrix(LatticeMatrix::from_i64(&[&[2]]).unwrap());
        let b = functoriality_bound(&theta, &seg, &seg).unwrap();
        assert_eq!(b.multiplier, ratio(2, 1));
        for x in [2, 3, 5] {
            let p = RationalTorusPoint::from_i64(&[x]).unwrap();
            let image = RationalTorusPoint::new(theta.apply_point(p.coords()).unwrap()).unwrap();
            assert!(height(&image, &seg).unwrap() <= height(&p, &seg).unwrap().scale_int(2));
        }
    }

    #[test]
    fn projection_gives_one() {
        let sq = LatticePolytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let seg = LatticePolytope::from_i64(&[&[0], &[1]]).unwrap();
        let theta = MonomialMap::from_matrix(LatticeMatrix::from_i64(&[&[1, 0]]).unwrap());
        let b = functoriality_bound(&theta, &sq, &seg).unwrap();
        assert_eq!(b.multiplier, ratio(1, 1));
        for x in -4..=4 {
            for y in -4..=4 {
                if x == 0 || y == 0 {
                    continue;
                }
                let p = RationalTorusPoint::from_ratios(&[(x, 3), (5, y)]).unwrap();
                let image = RationalTorusPoint::new(theta.apply_point(p.coords()).unwrap()).unwrap();
                assert!(height(&image, &seg).unwrap() <= height(&p, &sq).unwrap());
            }
        }
    }

    #[test]
    fn characters_outside_the_span() {
        let seg = LatticePolytope::from_i64(&[&[0, 0], &[1, 0]]).unwrap();
        let theta = MonomialMap::identity(2);
        let target = LatticePolytope::from_i64(&[&[0, 0], &[0, 1]]).unwrap();
        assert_eq!(functoriality_bound(&theta, &seg, &target), Err(HeightsError::Unbounded));
    }

    #[test]
    fn degenerate_source_in_its_span() {
        let diag = LatticePolytope::from_i64(&[&[0, 0], &[1, 1]]).unwrap();
        let target = LatticePolytope::from_i64(&[&[0, 0], &[3, 3]]).unwrap();
        let b = functoriality_bound(&MonomialMap::identity(2), &diag, &target).unwrap();
        assert_eq!(b.multiplier, ratio(3, 1));
        let p = RationalTorusPoint::from_ratios(&[(2, 3), (7, 5)]).unwrap();
        assert!(height(&p, &target).unwrap() <= height(&p, &diag).unwrap().scale_int(3));
        assert!(LogValue::zero() <= height(&p, &diag).unwrap());
    }
}
