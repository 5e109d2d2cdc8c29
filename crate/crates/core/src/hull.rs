//! Facet enumeration for full-dimensional cones in `Z^s`.
//!
//! A facet normal is a primitive vector orthogonal to `s-1` independent generators that is
//! nonnegative on all generators. Inputs here are desk-sized, so the combinatorial search over
//! generator subsets is cheap and entirely exact.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::lattice::cross_normal;

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|a| a / &g).collect()
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for i in start..=(n - need) {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), f);
    }
}

/// Inner facet normals of the cone spanned by `gens`, which must span `Q^s`.
///
/// Normals are primitive, deduplicated and sorted. A cone equal to all of `Q^s` has none.
pub(crate) fn cone_facets(gens: &[Vec<BigInt>], s: usize) -> Vec<Vec<BigInt>> {
    let mut gens: Vec<Vec<BigInt>> = gens.iter().filter(|g| g.iter().any(|x| !x.is_zero())).map(|g| primitive(g)).collect();
    gens.sort();
    gens.dedup();
    if s == 0 {
        return Vec::new();
    }
    let mut out = BTreeSet::new();
    for_each_subset(gens.len(), s - 1, &mut |idx| {
        let rows: Vec<&[BigInt]> = idx.iter().map(|&i| gens[i].as_slice()).collect();
        let n = cross_normal(&rows, s);
        if n.iter().all(Zero::is_zero) {
            return;
        }
        let mut pos = false;
        let mut neg = false;
        for g in &gens {
            let d = dot(&n, g);
            pos |= d.is_positive();
            neg |= d.is_negative();
            if pos && neg {
                return;
            }
        }
        let n = primitive(&n);
        if neg {
            out.insert(n.iter().map(|x| -x).collect::<Vec<_>>());
        } else if pos {
            out.insert(n);
        }
    });
    // With s = 1 the empty subset yields the unit normal; orientation handled above.
    out.into_iter().collect()
}
