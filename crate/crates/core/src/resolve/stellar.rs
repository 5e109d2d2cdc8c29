use std::collections::BTreeSet;

use super::ResolveError;
use crate::lattice::LatticeVector;
use crate::toricfan::Fan;

/// Star subdivision at `ray`: cones avoiding it are kept, every cone containing it is replaced
/// by the joins of the ray with its faces that avoid it.
///
/// A non-primitive ray is replaced by its primitive multiple.
pub fn stellar_subdivision(fan: &Fan, ray: &LatticeVector) -> Result<Fan, ResolveError> {
    if ray.rank() != fan.rank() {
        return Err(ResolveError::Fan(crate::toricfan::FanError::RankMismatch { expected: fan.rank(), found: ray.rank() }));
    }
    if ray.is_zero() {
        return Err(ResolveError::ZeroRay);
    }
    let ray = ray.primitive();
    if fan.ray_index(&ray).is_some() {
        return Ok(fan.clone());
    }
    let cones = fan.cones();
    let holds: Vec<bool> = cones.iter().map(|c| fan.rational_cone(c).contains(&ray)).collect();
    if !holds.iter().any(|&h| h) {
        return Err(ResolveError::RayOutsideSupport(ray));
    }
    let mut rays: Vec<LatticeVector> = fan.rays().to_vec();
    let pos = rays.binary_search(&ray).unwrap_err();
    rays.insert(pos, ray);
    let shift = |i: usize| if i >= pos { i + 1 } else { i };
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (c, &h) in cones.iter().zip(&holds) {
        if !h {
            out.insert(c.iter().map(|&i| shift(i)).collect());
            continue;
        }
        for (t, &th) in cones.iter().zip(&holds) {
            if th || !t.iter().all(|i| c.binary_search(i).is_ok()) {
                continue;
            }
            let mut join: Vec<usize> = t.iter().map(|&i| shift(i)).collect();
            join.push(pos);
            join.sort_unstable();
            out.insert(join);
        }
    }
    Ok(Fan::from_ray_sets(fan.rank(), rays, out.into_iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::LatticePolytope;
    use crate::toricfan::completion_fan;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(v)
    }

    #[test]
    fn quadrant_split() {
        let fan = Fan::from_i64(2, &[&[&[1, 0], &[0, 1]]]).unwrap();
        let out = stellar_subdivision(&fan, &lv(&[1, 1])).unwrap();
        let maximal: Vec<Vec<LatticeVector>> = out.maximal_cones().iter().map(|c| out.cone_rays(c)).collect();
        assert_eq!(maximal, vec![vec![lv(&[0, 1]), lv(&[1, 1])], vec![lv(&[1, 0]), lv(&[1, 1])]]);
        assert_eq!(out, Fan::from_i64(2, &[&[&[1, 0], &[1, 1]], &[&[1, 1], &[0, 1]]]).unwrap());
    }

    #[test]
    fn existing_ray_is_identity() {
        let fan = Fan::from_i64(2, &[&[&[1, 0], &[0, 1]]]).unwrap();
        assert_eq!(stellar_subdivision(&fan, &lv(&[0, 3])).unwrap(), fan);
    }

    #[test]
    fn p2_at_diagonal() {
        let s = LatticePolytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let fan = completion_fan(&s).unwrap();
        let out = stellar_subdivision(&fan, &lv(&[1, 1])).unwrap();
        assert_eq!(out.maximal().len(), 4);
        assert!(out.is_complete());
        assert!(out.is_smooth());
    }

    #[test]
    fn ray_on_a_wall_splits_both_neighbours() {
        let sq = LatticePolytope::from_i64(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]).unwrap();
        let fan = completion_fan(&sq).unwrap();
        let out = stellar_subdivision(&fan, &lv(&[2, 2])).unwrap();
        assert_eq!(out.maximal().len(), 5);
        assert!(out.ray_index(&lv(&[1, 1])).is_some());
        let oct = LatticePolytope::from_i64(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]])
            .unwrap();
        let cube_fan = completion_fan(&oct).unwrap();
        // (1,1,0) lies on a 2-face shared by two of the four-ray cones
        let out = stellar_subdivision(&cube_fan, &lv(&[1, 1, 0])).unwrap();
        assert!(out.is_complete());
        assert_eq!(out.maximal().len(), 6 - 2 + 2 * 3);
    }

    #[test]
    fn outside_support_and_zero() {
        let fan = Fan::from_i64(2, &[&[&[1, 0], &[0, 1]]]).unwrap();
        assert_eq!(stellar_subdivision(&fan, &lv(&[-1, 0])), Err(ResolveError::RayOutsideSupport(lv(&[-1, 0]))));
        assert_eq!(stellar_subdivision(&fan, &lv(&[0, 0])), Err(ResolveError::ZeroRay));
    }
}
