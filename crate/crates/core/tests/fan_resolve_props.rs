mod common;

use common::*;
use num_rational::BigRational;
use proptest::collection::vec;
use proptest::prelude::*;
use toruskit::newton::{newton_polytope, LatticePolytope, LaurentPolynomial};
use toruskit::resolve::{pullback_divisor, resolve_to_smooth};
use toruskit::toricfan::{closure_avoids_orbits, completion_fan, divisor_closure, equivariant_projection, orbit_table};

fn full_polytope(r: usize, bound: i64) -> impl Strategy<Value = (usize, Vec<V>)> {
    vec(vec(0..=bound, r), r + 1..=r + 3)
        .prop_filter("full-dimensional", move |pts| affine_dim(pts) == r)
        .prop_map(move |pts| (r, pts))
}

fn any_polytope() -> impl Strategy<Value = (usize, Vec<V>)> {
    (1usize..=3).prop_flat_map(|r| (Just(r), vec(vec(0i64..=3, r), 1..=6)))
}

fn polytope(r: usize, pts: &[V]) -> LatticePolytope {
    LatticePolytope::from_points(r, &pts.iter().map(|v| lv(v)).collect::<Vec<_>>()).unwrap()
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=9).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn completion_fans_cover_the_grid((r, pts) in (1usize..=3).prop_flat_map(|r| full_polytope(r, 3))) {
        let fan = completion_fan(&polytope(r, &pts)).unwrap();
        prop_assert!(fan.is_complete());
        for x in box_points(&vec![-3; r], &vec![3; r]) {
            prop_assert!(fan.maximal_containing(&lv(&x)).is_some(), "{:?} uncovered", x);
        }
    }

    #[test]
    fn orbits_match_faces((r, pts) in any_polytope()) {
        let p = polytope(r, &pts);
        let orbits = orbit_table(&p);
        prop_assert_eq!(orbits.len(), p.faces().len());
        prop_assert_eq!(orbits.iter().filter(|o| o.dim == 0).count(), p.vertices().len());
        for o in &orbits {
            prop_assert_eq!(o.dim, o.face.dim);
            prop_assert_eq!(o.character_basis.len(), o.dim);
        }
    }

    #[test]
    fn projection_splits_inclusion((r, pts) in any_polytope(), s in vec(nonzero_rational(), 3), t in vec(nonzero_rational(), 3), u in vec(nonzero_rational(), 3)) {
        let p = polytope(r, &pts);
        for face in p.faces() {
            let proj = equivariant_projection(&p, &face);
            let s = &s[..proj.basis.len()];
            prop_assert_eq!(proj.project(&proj.include(s).unwrap()).unwrap(), s.to_vec());
            let tu: Vec<BigRational> = t[..r].iter().zip(&u[..r]).map(|(a, b)| a * b).collect();
            let lhs = proj.project(&tu).unwrap();
            let rhs: Vec<BigRational> = proj.project(&t[..r]).unwrap().into_iter().zip(proj.project(&u[..r]).unwrap()).map(|(a, b)| a * b).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn planar_resolutions_are_unimodular((_, pts) in full_polytope(2, 5)) {
        let fan = completion_fan(&polytope(2, &pts)).unwrap();
        let s = resolve_to_smooth(&fan).unwrap();
        prop_assert!(s.refines());
        prop_assert!(s.target.is_smooth() && s.target.is_complete());
        for cone in s.target.maximal_cones() {
            let rays: Vec<V> = s.target.cone_rays(cone).iter().map(iv).collect();
            prop_assert!(is_unimodular(2, &rays));
        }
        prop_assert_eq!(s.target.rays().len(), fan.rays().len() + s.inserted.len());
    }

    #[test]
    fn pullback_keeps_orbit_avoidance_and_composes(
        (r, pts) in (2usize..=3).prop_flat_map(|r| full_polytope(r, 2)),
        coeffs in vec(prop_oneof![-3i64..=-1, 1i64..=3], 8),
        k in 0usize..64,
    ) {
        let mut support = pts.clone();
        support.sort();
        support.dedup();
        let terms = support.iter().zip(coeffs.iter().cycle()).map(|(m, c)| (lv(m), q(*c, 1)));
        let f = LaurentPolynomial::new(r, terms).unwrap();
        let fan = completion_fan(&newton_polytope(&f)).unwrap();
        let dc = divisor_closure(&f, &fan).unwrap();
        let s = resolve_to_smooth(&fan).unwrap();
        let pulled = pullback_divisor(&dc.divisor, &s).unwrap();
        prop_assert_eq!(
            closure_avoids_orbits(&f, &pulled, &dc.origin).unwrap(),
            closure_avoids_orbits(&f, &dc.divisor, &dc.origin).unwrap()
        );
        let (a, b) = s.split_at(k % (s.inserted.len() + 1)).unwrap();
        prop_assert_eq!(&a.compose(&b).unwrap().target, &s.target);
        let stepwise = pullback_divisor(&pullback_divisor(&dc.divisor, &a).unwrap(), &b).unwrap();
        prop_assert_eq!(stepwise, pulled);
    }
}
