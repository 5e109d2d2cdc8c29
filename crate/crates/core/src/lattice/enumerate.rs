//! Lattice points of `{ x ∈ Z^d : lower ≤ x ≤ upper, ⟨n_h, x⟩ ≥ b_h }` by box scan.
//!
//! The last axis is never scanned: its admissible range is an interval computed from the
//! half-spaces. Constraints that stop involving later axes are checked as soon as possible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `⟨normal, x⟩ ≥ bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: Vec<BigInt>,
    pub bound: BigInt,
}

struct Scan<'a> {
    lower: &'a [BigInt],
    upper: &'a [BigInt],
    halfspaces: &'a [Halfspace],
    // halfspaces whose last nonzero coefficient is at this axis (axes before the last)
    settle_at: Vec<Vec<usize>>,
}

impl Scan<'_> {
    fn new<'a>(lower: &'a [BigInt], upper: &'a [BigInt], halfspaces: &'a [Halfspace]) -> Scan<'a> {
        let d = lower.len();
        let mut settle_at = vec![Vec::new(); d];
        for (h, hs) in halfspaces.iter().enumerate() {
            if let Some(i) = hs.normal.iter().rposition(|c| !c.is_zero()) {
                if i + 1 < d {
                    settle_at[i].push(h);
                }
            }
        }
        Scan { lower, upper, halfspaces, settle_at }
    }

    /// Admissible interval on the last axis given the partial sums.
    fn last_axis(&self, acc: &[BigInt]) -> Option<(BigInt, BigInt)> {
        let d = self.lower.len();
        let mut lo = self.lower[d - 1].clone();
        let mut hi = self.upper[d - 1].clone();
        for (hs, a) in self.halfspaces.iter().zip(acc) {
            let n = &hs.normal[d - 1];
            let rhs = &hs.bound - a;
            if n.is_zero() {
                if a < &hs.bound {
                    return None;
                }
            } else if n.is_positive() {
                lo = lo.max(Integer::div_ceil(&rhs, n));
            } else {
                hi = hi.min(rhs.div_floor(n));
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    fn walk(&self, axis: usize, point: &mut Vec<BigInt>, acc: &mut Vec<BigInt>, leaf: &mut dyn FnMut(&[BigInt], BigInt, BigInt)) {
        let d = self.lower.len();
        if axis + 1 == d {
            if let Some((lo, hi)) = self.last_axis(acc) {
                leaf(point, lo, hi);
            }
            return;
        }
        let mut x = self.lower[axis].clone();
        while x <= self.upper[axis] {
            for (a, hs) in acc.iter_mut().zip(self.halfspaces) {
                *a += &hs.normal[axis] * &x;
            }
            let ok = self.settle_at[axis].iter().all(|&h| acc[h] >= self.halfspaces[h].bound);
            if ok {
                point.push(x.clone());
                self.walk(axis + 1, point, acc, leaf);
                point.pop();
            }
            for (a, hs) in acc.iter_mut().zip(self.halfspaces) {
                *a -= &hs.normal[axis] * &x;
            }
            x += 1;
        }
    }

    fn run(&self, leaf: &mut dyn FnMut(&[BigInt], BigInt, BigInt)) {
        let mut point = Vec::with_capacity(self.lower.len());
        let mut acc = vec![BigInt::zero(); self.halfspaces.len()];
        self.walk(0, &mut point, &mut acc, leaf);
    }
}

fn zero_dim_ok(halfspaces: &[Halfspace]) -> bool {
    halfspaces.iter().all(|h| !h.bound.is_positive())
}

/// Calls `visit` on every admissible point, in lexicographic order.
pub fn scan_box(lower: &[BigInt], upper: &[BigInt], halfspaces: &[Halfspace], visit: &mut dyn FnMut(&[BigInt])) {
    assert_eq!(lower.len(), upper.len());
    if lower.is_empty() {
        if zero_dim_ok(halfspaces) {
            visit(&[]);
        }
        return;
    }
    let scan = Scan::new(lower, upper, halfspaces);
    scan.run(&mut |prefix, lo, hi| {
        let mut p = prefix.to_vec();
        p.push(lo.clone());
        while p[p.len() - 1] <= hi {
            visit(&p);
            *p.last_mut().unwrap() += 1;
        }
    });
}

/// Number of admissible points.
pub fn count_box(lower: &[BigInt], upper: &[BigInt], halfspaces: &[Halfspace]) -> BigInt {
    assert_eq!(lower.len(), upper.len());
    if lower.is_empty() {
        return if zero_dim_ok(halfspaces) { BigInt::one() } else { BigInt::zero() };
    }
    let mut total = BigInt::zero();
    Scan::new(lower, upper, halfspaces).run(&mut |_, lo, hi| total += hi - lo + 1);
    total
}
