use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{stellar_subdivision, ResolveError, DEFAULT_INSERTION_CAP};
use crate::lattice::linalg::{floor, solve_square};
use crate::lattice::{smith_normal_form, LatticeMatrix, LatticeVector, SpanFrame};
use crate::toricfan::{Fan, TorusInvariantDivisor};

/// A sequence of stellar subdivisions taking `source` to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub source: Fan,
    pub target: Fan,
    pub inserted: Vec<LatticeVector>,
}

impl Subdivision {
    pub fn identity(fan: &Fan) -> Self {
        Subdivision { source: fan.clone(), target: fan.clone(), inserted: Vec::new() }
    }

    /// Re-applies the inserted rays to the source.
    pub fn replay(&self) -> Result<Fan, ResolveError> {
        let mut fan = self.source.clone();
        for r in &self.inserted {
            fan = stellar_subdivision(&fan, r)?;
        }
        Ok(fan)
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &Subdivision) -> Result<Subdivision, ResolveError> {
        if next.source != self.target {
            return Err(ResolveError::FanMismatch);
        }
        let mut inserted = self.inserted.clone();
        inserted.extend(next.inserted.iter().cloned());
        Ok(Subdivision { source: self.source.clone(), target: next.target.clone(), inserted })
    }

    /// The first `k` insertions and the rest.
    pub fn split_at(&self, k: usize) -> Result<(Subdivision, Subdivision), ResolveError> {
        let k = k.min(self.inserted.len());
        let (head, tail) = self.inserted.split_at(k);
        let mut mid = self.source.clone();
        for r in head {
            mid = stellar_subdivision(&mid, r)?;
        }
        Ok((
            Subdivision { source: self.source.clone(), target: mid.clone(), inserted: head.to_vec() },
            Subdivision { source: mid, target: self.target.clone(), inserted: tail.to_vec() },
        ))
    }

    /// Every target cone lies in some source cone.
    pub fn refines(&self) -> bool {
        self.target.cones().iter().all(|t| {
            let rays = self.target.cone_rays(t);
            self.source.cones().iter().any(|s| {
                let c = self.source.rational_cone(s);
                rays.iter().all(|r| c.contains(r))
            })
        })
    }
}

pub fn resolve_to_smooth(fan: &Fan) -> Result<Subdivision, ResolveError> {
    resolve_to_smooth_with_cap(fan, DEFAULT_INSERTION_CAP)
}

/// Repeatedly subdivides the lex-least singular maximal cone until every cone is unimodular.
///
/// Non-simplicial cones are split at the sum of their rays; simplicial ones at the lattice point
/// of the half-open fundamental parallelepiped with the least coefficient sum.
pub fn resolve_to_smooth_with_cap(fan: &Fan, cap: usize) -> Result<Subdivision, ResolveError> {
    let mut current = fan.clone();
    let mut inserted = Vec::new();
    loop {
        let mut bad: Vec<Vec<LatticeVector>> = current
            .maximal_cones()
            .into_iter()
            .filter(|c| !current.is_smooth_cone(c))
            .map(|c| current.cone_rays(c))
            .collect();
        bad.sort();
        let Some(cone) = bad.into_iter().next() else {
            return Ok(Subdivision { source: fan.clone(), target: current, inserted });
        };
        if inserted.len() == cap {
            return Err(ResolveError::CapExceeded(cap));
        }
        let ray = split_ray(&cone);
        current = stellar_subdivision(&current, &ray)?;
        inserted.push(ray);
    }
}

fn split_ray(rays: &[LatticeVector]) -> LatticeVector {
    let rank = rays[0].rank();
    let frame = SpanFrame::new(rank, rays).expect("rays share a rank");
    if frame.dim() < rays.len() {
        let mut sum = LatticeVector::zero(rank);
        for r in rays {
            sum = &sum + r;
        }
        return sum.primitive();
    }
    parallelepiped_points(rays, &frame)
        .into_iter()
        .filter(|(_, p)| !p.is_zero())
        .min_by(|(a, p), (b, q)| a.cmp(b).then(p.cmp(q)))
        .map(|(_, p)| p.primitive())
        .expect("a singular simplicial cone has a nonzero parallelepiped point")
}

/// Lattice points `Σ λ_i g_i` with `λ ∈ [0,1)^k`, with their coefficient sums. `rays` must be
/// linearly independent.
pub(crate) fn parallelepiped_points(rays: &[LatticeVector], frame: &SpanFrame) -> Vec<(BigRational, LatticeVector)> {
    let k = rays.len();
    let coords: Vec<LatticeVector> =
        rays.iter().map(|r| LatticeVector::new(frame.coords(r).expect("ray lies in its own span"))).collect();
    let a = LatticeMatrix::from_rows(k, coords.clone()).expect("coordinates have the span dimension");
    let snf = smith_normal_form(&a);
    // column j of A^{-1}
    let ainv_cols: Vec<Vec<BigRational>> = {
        let rows: Vec<Vec<BigRational>> =
            coords.iter().map(|c| c.entries().iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
        let cols: Vec<Vec<BigRational>> = (0..k)
            .map(|j| {
                let e: Vec<BigRational> = (0..k).map(|i| if i == j { One::one() } else { Zero::zero() }).collect();
                solve_square(&rows, &e).expect("independent rays")
            })
            .collect();
        cols
    };
    let diag: Vec<BigInt> = (0..k).map(|i| snf.diag.get(i).cloned().unwrap_or_else(One::one)).collect();
    let mut out = Vec::new();
    let mut z = vec![BigInt::zero(); k];
    loop {
        let y = snf.right_inverse().apply_left(&LatticeVector::new(z.clone())).expect("square transform");
        // λ_j = frac(Σ_i y_i (A^{-1})_{ij})
        let lambda: Vec<BigRational> = (0..k)
            .map(|j| {
                let v: BigRational = (0..k).map(|i| BigRational::from_integer(y[i].clone()) * &ainv_cols[j][i]).sum();
                &v - BigRational::from_integer(floor(&v))
            })
            .collect();
        let mut p = vec![BigRational::zero(); rays[0].rank()];
        for (l, r) in lambda.iter().zip(rays) {
            for (pi, ri) in p.iter_mut().zip(r.entries()) {
                *pi += l * BigRational::from_integer(ri.clone());
            }
        }
        let point = LatticeVector::new(p.into_iter().map(|x| x.to_integer()).collect());
        out.push((lambda.iter().sum(), point));
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            z[i] += 1;
            if z[i] < diag[i] {
                break;
            }
            z[i] = BigInt::zero();
            i += 1;
        }
    }
}

/// The divisor with support function that of `d`, on the target fan.
pub fn pullback_divisor(d: &TorusInvariantDivisor, s: &Subdivision) -> Result<TorusInvariantDivisor, ResolveError> {
    if d.fan() != &s.source {
        return Err(ResolveError::FanMismatch);
    }
    d.cartier_data()?;
    let coeffs = s.target.rays().iter().map(|r| d.support_value(r).map(|v| -v)).collect::<Result<Vec<_>, _>>()?;
    Ok(TorusInvariantDivisor::from_aligned(s.target.clone(), coeffs)?)
}

/// `K` (all coefficients −1), the reduced boundary (all +1) and their sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogCanonical {
    pub canonical: TorusInvariantDivisor,
    pub boundary: TorusInvariantDivisor,
    pub sum: TorusInvariantDivisor,
}

impl LogCanonical {
    pub fn is_trivial(&self) -> bool {
        self.sum.is_zero()
    }
}

pub fn log_canonical_boundary(fan: &Fan) -> Result<LogCanonical, ResolveError> {
    if !fan.is_smooth() {
        return Err(ResolveError::NotSmooth);
    }
    if !fan.is_complete() {
        return Err(ResolveError::IncompleteFan);
    }
    let n = fan.rays().len();
    let canonical = TorusInvariantDivisor::from_aligned(fan.clone(), vec![-BigInt::one(); n])?;
    let boundary = TorusInvariantDivisor::from_aligned(fan.clone(), vec![BigInt::one(); n])?;
    let sum = canonical.add(&boundary)?;
    debug_assert!(sum.coefficients().iter().all(|a| a.is_zero() && a.is_even()));
    Ok(LogCanonical { canonical, boundary, sum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::linalg::ratio;
    use crate::newton::LatticePolytope;
    use crate::toricfan::{completion_fan, polytope_divisor};

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(v)
    }

    #[test]
    fn smooth_fan_needs_nothing() {
        let sq = LatticePolytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let fan = completion_fan(&sq).unwrap();
        let s = resolve_to_smooth(&fan).unwrap();
        assert!(s.inserted.is_empty());
        assert_eq!(s.target, fan);
    }

    #[test]
    fn single_insertion_examples() {
        let fan = Fan::from_i64(2, &[&[&[1, 0], &[1, 2]]]).unwrap();
        let s = resolve_to_smooth(&fan).unwrap();
        assert_eq!(s.inserted, vec![lv(&[1, 1])]);
        assert!(s.target.is_smooth());
        let fan = Fan::from_i64(2, &[&[&[1, 0], &[-1, -2]], &[&[1, 0], &[0, 1]], &[&[0, 1], &[-1, -2]]]).unwrap();
        let s = resolve_to_smooth(&fan).unwrap();
        assert_eq!(s.inserted, vec![lv(&[0, -1])]);
        assert!(s.target.is_smooth());
        assert!(s.target.is_complete());
    }

    #[test]
    fn parallelepiped_of_a_3d_cone() {
        let rays = vec![lv(&[1, 0, 0]), lv(&[0, 1, 0]), lv(&[1, 1, 3])];
        let frame = SpanFrame::new(3, &rays).unwrap();
        let pts = parallelepiped_points(&rays, &frame);
        assert_eq!(pts.len(), 3);
        let mut p: Vec<LatticeVector> = pts.iter().map(|(_, p)| p.clone()).collect();
        p.sort();
        assert_eq!(p, vec![lv(&[0, 0, 0]), lv(&[1, 1, 1]), lv(&[1, 1, 2])]);
        let sums: Vec<BigRational> = pts.iter().filter(|(_, p)| *p == lv(&[1, 1, 1])).map(|(s, _)| s.clone()).collect();
        assert_eq!(sums, vec![ratio(5, 3)]);
        assert_eq!(split_ray(&rays), lv(&[1, 1, 2]));
    }

    #[test]
    fn lower_dimensional_cone_in_higher_rank() {
        let fan = Fan::from_i64(3, &[&[&[1, 0, 0], &[1, 3, 0]]]).unwrap();
        let s = resolve_to_smooth(&fan).unwrap();
        assert!(s.target.is_smooth());
        assert_eq!(s.replay().unwrap(), s.target);
    }

    #[test]
    fn octahedron_fan_resolves() {
        let oct = LatticePolytope::from_i64(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]])
            .unwrap();
        let fan = completion_fan(&oct).unwrap();
        let s = resolve_to_smooth(&fan).unwrap();
        assert!(s.target.is_smooth());
        assert!(s.target.is_complete());
        assert!(s.refines());
        assert_eq!(s.replay().unwrap(), s.target);
        assert!(log_canonical_boundary(&s.target).unwrap().is_trivial());
    }

    #[test]
    fn cap_is_enforced() {
        let fan = Fan::from_i64(2, &[&[&[1, 0], &[1, 7]]]).unwrap();
        assert!(resolve_to_smooth(&fan).is_ok());
        assert_eq!(resolve_to_smooth_with_cap(&fan, 1), Err(ResolveError::CapExceeded(1)));
    }

    #[test]
    fn pullback_of_square_class() {
        let sq = LatticePolytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let fan = completion_fan(&sq).unwrap();
        let d = polytope_divisor(&sq, &fan).unwrap().divisor;
        let once = stellar_subdivision(&fan, &lv(&[1, 1])).unwrap();
        let s = Subdivision { source: fan.clone(), target: once, inserted: vec![lv(&[1, 1])] };
        let p = pullback_divisor(&d, &s).unwrap();
        assert_eq!(p.coefficient(&lv(&[1, 1])), Some(&BigInt::from(0)));
        assert_eq!(p.coefficient(&lv(&[-1, 0])), Some(&BigInt::from(1)));
        assert!(!p.is_ample().unwrap());
        assert!(p.is_nef().unwrap());
        let tri = Subdivision::identity(&fan);
        assert_eq!(pullback_divisor(&d, &tri).unwrap(), d);
        let z = TorusInvariantDivisor::zero(fan);
        assert!(pullback_divisor(&z, &s).unwrap().is_zero());
    }

    #[test]
    fn log_canonical_examples() {
        let p1 = Fan::from_i64(1, &[&[&[1]], &[&[-1]]]).unwrap();
        let lc = log_canonical_boundary(&p1).unwrap();
        let degree: BigInt = lc.canonical.coefficients().iter().sum();
        assert_eq!(degree, BigInt::from(-2));
        assert!(lc.is_trivial());
        let singular = Fan::from_i64(2, &[&[&[1, 0], &[-1, -2]], &[&[1, 0], &[0, 1]], &[&[0, 1], &[-1, -2]]]).unwrap();
        assert_eq!(log_canonical_boundary(&singular), Err(ResolveError::NotSmooth));
        let open = Fan::from_i64(2, &[&[&[1, 0], &[0, 1]]]).unwrap();
        assert_eq!(log_canonical_boundary(&open), Err(ResolveError::IncompleteFan));
    }
}
