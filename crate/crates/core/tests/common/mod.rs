//! Independent oracles and random corpora shared by the integration tests.
//!
//! Everything here works on small `i64`/`i128` data with naive algorithms and avoids the
//! library's own geometry, so agreement with the library is a real cross-check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use toruskit::lattice::LatticeVector;
use toruskit::newton::{LatticePolytope, LaurentPolynomial};
use toruskit::toricfan::Fan;

pub type V = Vec<i64>;

pub fn lv(v: &[i64]) -> LatticeVector {
    LatticeVector::from_i64(v)
}

pub fn iv(v: &LatticeVector) -> V {
    v.to_i64().expect("small test data")
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[i64], b: &[i64]) -> V {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn primitive(v: &[i64]) -> V {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

pub fn cross(a: &[i64], b: &[i64]) -> V {
    vec![a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn perp(a: &[i64]) -> V {
    vec![-a[1], a[0]]
}

/// Rank of a set of integer vectors by fraction-free elimination.
pub fn rank(vs: &[V]) -> usize {
    let mut rows: Vec<Vec<i128>> = vs.iter().map(|v| v.iter().map(|&x| x as i128).collect()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let (a, b) = (rows[r][c], rows[i][c]);
                for k in 0..cols {
                    rows[i][k] = rows[i][k] * a - rows[r][k] * b;
                }
                let g = rows[i].iter().fold(0i128, |g, &x| gcd128(g, x));
                if g > 1 {
                    rows[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd128(b, a % b)
    }
}

/// Dimension of the affine span of a point set.
pub fn affine_dim(points: &[V]) -> usize {
    if points.is_empty() {
        return 0;
    }
    rank(&points[1..].iter().map(|p| sub(p, &points[0])).collect::<Vec<_>>())
}

/// Cone in rank ≤ 3 as equations `⟨e,x⟩ = 0` and inequalities `⟨n,x⟩ ≥ 0`.
///
/// Candidate normals are all cross products (or perpendiculars) of generators and complement
/// vectors; those with constant sign on the generators cut out exactly the cone.
pub struct ConeOracle {
    pub equations: Vec<V>,
    pub inequalities: Vec<V>,
}

impl ConeOracle {
    pub fn new(rank_: usize, gens: &[V]) -> Self {
        let gens: Vec<V> = gens.iter().filter(|g| g.iter().any(|&x| x != 0)).cloned().collect();
        let d = rank(&gens);
        let mut equations = Vec::new();
        match (rank_, d) {
            (_, 0) => equations = (0..rank_).map(|i| unit(rank_, i)).collect(),
            (2, 1) => equations.push(perp(&gens[0])),
            (3, 1) => {
                let g = &gens[0];
                let other = (0..3).map(|i| unit(3, i)).find(|e| cross(g, e).iter().any(|&x| x != 0)).unwrap();
                let c1 = cross(g, &other);
                equations.push(c1.clone());
                equations.push(cross(g, &c1));
            }
            (3, 2) => {
                let n = gens.iter().flat_map(|a| gens.iter().map(move |b| cross(a, b))).find(|c| c.iter().any(|&x| x != 0));
                equations.push(n.unwrap());
            }
            _ => {}
        }
        let pool: Vec<V> = gens.iter().chain(equations.iter()).cloned().collect();
        let mut candidates: Vec<V> = Vec::new();
        match rank_ {
            1 => candidates.push(vec![1]),
            2 => candidates.extend(pool.iter().map(|a| perp(a))),
            _ => {
                for a in &pool {
                    for b in &pool {
                        candidates.push(cross(a, b));
                    }
                }
            }
        }
        let mut inequalities = BTreeSet::new();
        for c in candidates {
            if c.iter().all(|&x| x == 0) {
                continue;
            }
            let signs: Vec<i64> = gens.iter().map(|g| dot(&c, g).signum()).collect();
            if signs.iter().all(|&s| s >= 0) {
                inequalities.insert(primitive(&c));
            } else if signs.iter().all(|&s| s <= 0) {
                inequalities.insert(primitive(&c.iter().map(|x| -x).collect::<Vec<_>>()));
            }
        }
        ConeOracle { equations, inequalities: inequalities.into_iter().collect() }
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.equations.iter().all(|e| dot(e, x) == 0) && self.inequalities.iter().all(|n| dot(n, x) >= 0)
    }
}

pub fn unit(rank: usize, i: usize) -> V {
    (0..rank).map(|j| i64::from(i == j)).collect()
}

/// Lattice points of the box `Π [lo_i, hi_i]`.
pub fn box_points(lo: &[i64], hi: &[i64]) -> Vec<V> {
    let mut out = vec![Vec::new()];
    for (a, b) in lo.iter().zip(hi) {
        out = out.into_iter().flat_map(|p| (*a..=*b).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

/// Hilbert basis of the cone over `gens` by brute force over the zonotope's bounding box.
pub fn hilbert_basis_oracle(rank_: usize, gens: &[V]) -> BTreeSet<V> {
    let gens: Vec<V> = gens.iter().filter(|g| g.iter().any(|&x| x != 0)).map(|g| primitive(g)).collect();
    let cone = ConeOracle::new(rank_, &gens);
    let lo: V = (0..rank_).map(|i| gens.iter().map(|g| g[i].min(0)).sum()).collect();
    let hi: V = (0..rank_).map(|i| gens.iter().map(|g| g[i].max(0)).sum()).collect();
    let pts: Vec<V> =
        box_points(&lo, &hi).into_iter().filter(|p| p.iter().any(|&x| x != 0) && cone.contains(p)).collect();
    pts.iter()
        .filter(|x| !pts.iter().any(|y| y != *x && cone.contains(&sub(x, y)) && sub(x, y).iter().any(|&c| c != 0)))
        .cloned()
        .collect()
}

/// Vertices of a point set: points that are the unique minimizer of some direction.
/// Works in rank ≤ 3 by testing the candidate directions from cone oracles at each point.
pub fn vertices_oracle(points: &[V]) -> BTreeSet<V> {
    let pts: BTreeSet<V> = points.iter().cloned().collect();
    let rank_ = points[0].len();
    pts.iter()
        .filter(|v| {
            let gens: Vec<V> = pts.iter().filter(|w| w != v).map(|w| sub(w, v)).collect();
            // A vertex has a pointed tangent cone: no nonzero difference whose negative is also in it.
            let cone = ConeOracle::new(rank_, &gens);
            gens.iter().all(|g| !cone.contains(&g.iter().map(|x| -x).collect::<Vec<_>>()))
        })
        .cloned()
        .collect()
}

/// Determinant of a square integer matrix, rank ≤ 3.
pub fn det(rows: &[V]) -> i128 {
    let m = |i: usize, j: usize| rows[i][j] as i128;
    match rows.len() {
        0 => 1,
        1 => m(0, 0),
        2 => m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0),
        3 => {
            m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
        }
        _ => unimplemented!("rank above 3"),
    }
}

/// Whether the vectors extend to a basis of `Z^rank`: independent with coprime maximal minors.
pub fn is_unimodular(rank_: usize, vs: &[V]) -> bool {
    let k = vs.len();
    if k == 0 {
        return true;
    }
    if k > rank_ || rank(vs) < k {
        return false;
    }
    let cols: Vec<Vec<usize>> = subsets(rank_, k);
    let g = cols.iter().fold(0i128, |g, c| {
        let sq: Vec<V> = vs.iter().map(|v| c.iter().map(|&j| v[j]).collect()).collect();
        gcd128(g, det(&sq))
    });
    g == 1
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `#{u ∈ Z^rank : ⟨u,r⟩ ≥ −m·a_r for all rays}` for a complete fan.
///
/// The box comes from the vertices of the region, found by Cramer's rule on every
/// `rank`-subset of the ray equations.
pub fn h0_oracle(rays: &[V], a: &[i64], m: i64) -> u64 {
    let rank_ = rays[0].len();
    let b: Vec<i64> = a.iter().map(|x| -m * x).collect();
    let feasible_num = |num: &[i128], den: i128| rays.iter().zip(&b).all(|(r, bi)| {
        let s: i128 = r.iter().zip(num).map(|(x, y)| *x as i128 * y).sum();
        s >= *bi as i128 * den
    });
    let mut lo = vec![i64::MAX; rank_];
    let mut hi = vec![i64::MIN; rank_];
    let mut any = false;
    for idx in subsets(rays.len(), rank_) {
        let rows: Vec<V> = idx.iter().map(|&i| rays[i].clone()).collect();
        let d = det(&rows);
        if d == 0 {
            continue;
        }
        let num: Vec<i128> = (0..rank_)
            .map(|j| {
                let rj: Vec<V> = rows
                    .iter()
                    .zip(&idx)
                    .map(|(row, &i)| row.iter().enumerate().map(|(c, &x)| if c == j { b[i] } else { x }).collect())
                    .collect();
                det(&rj)
            })
            .collect();
        let (num, d) = if d < 0 { (num.iter().map(|x| -x).collect::<Vec<_>>(), -d) } else { (num, d) };
        if !feasible_num(&num, d) {
            continue;
        }
        any = true;
        for j in 0..rank_ {
            lo[j] = lo[j].min(num[j].div_euclid(d) as i64);
            hi[j] = hi[j].max((num[j] + d - 1).div_euclid(d) as i64);
        }
    }
    if !any {
        return 0;
    }
    box_points(&lo, &hi)
        .iter()
        .filter(|u| rays.iter().zip(&b).all(|(r, bi)| dot(u, r) >= *bi))
        .count() as u64
}

/// Ratios `r` with `r` and `r − 1` both of the form `±Π p^e`, `|e| ≤ max_exp`.
pub fn s_unit_ratios(primes: &[i64], max_exp: u32) -> BTreeSet<(i64, i64)> {
    let units = s_units(primes, max_exp);
    let set: BTreeSet<(i128, i128)> = units.iter().cloned().collect();
    let mut out = BTreeSet::new();
    for &(n, d) in &units {
        let (rn, rd) = reduce(n - d, d);
        if rn != 0 && set.contains(&(rn, rd)) {
            out.insert((n as i64, d as i64));
        }
    }
    out
}

/// `±Π p^e` with `|e| ≤ max_exp` as reduced `(num, den)` pairs.
pub fn s_units(primes: &[i64], max_exp: u32) -> Vec<(i128, i128)> {
    let mut out = vec![(1i128, 1i128)];
    for &p in primes {
        let mut next = Vec::new();
        for &(n, d) in &out {
            for e in 0..=max_exp {
                let pe = (p as i128).pow(e);
                next.push((n * pe, d));
                if e > 0 {
                    next.push((n, d * pe));
                }
            }
        }
        out = next;
    }
    let neg: Vec<_> = out.iter().map(|&(n, d)| (-n, d)).collect();
    out.extend(neg);
    out.sort();
    out
}

fn reduce(n: i128, d: i128) -> (i128, i128) {
    let g = gcd128(n, d).max(1);
    let (n, d) = (n / g, d / g);
    if d < 0 {
        (-n, -d)
    } else {
        (n, d)
    }
}

pub fn is_s_unit(n: i128, d: i128, primes: &[i64]) -> bool {
    if n == 0 {
        return false;
    }
    let strip = |mut x: i128| {
        x = x.abs();
        for &p in primes {
            while x % p as i128 == 0 {
                x /= p as i128;
            }
        }
        x
    };
    strip(n) == 1 && strip(d) == 1
}

/// Naive height `max(|n|, |d|)` of a reduced fraction.
pub fn naive_height(n: i128, d: i128) -> i128 {
    n.abs().max(d.abs())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` distinct points of `[lo, hi]^rank`.
pub fn random_points(r: &mut ChaCha8Rng, rank_: usize, count: usize, lo: i64, hi: i64) -> Vec<V> {
    let mut pts = BTreeSet::new();
    let mut tries = 0;
    while pts.len() < count && tries < 1000 {
        pts.insert((0..rank_).map(|_| r.gen_range(lo..=hi)).collect::<V>());
        tries += 1;
    }
    pts.into_iter().collect()
}

/// Random polytope corpus: rank 1 to 3, vertex coordinates in `[0, 4]`.
pub fn polytope_corpus(seed: u64, n: usize) -> Vec<(Vec<V>, LatticePolytope)> {
    let mut r = rng(seed);
    (0..n)
        .map(|i| {
            let rank_ = 1 + i % 3;
            let count = r.gen_range(1..=6);
            let pts = random_points(&mut r, rank_, count, 0, 4);
            let p = LatticePolytope::from_points(rank_, &pts.iter().map(|v| lv(v)).collect::<Vec<_>>()).unwrap();
            (pts, p)
        })
        .collect()
}

/// Polynomial with the given support and random nonzero coefficients in `[-5, 5]`.
pub fn polynomial_on(r: &mut ChaCha8Rng, rank_: usize, support: &[V]) -> LaurentPolynomial {
    let terms = support.iter().map(|m| {
        let mut c = 0;
        while c == 0 {
            c = r.gen_range(-5..=5);
        }
        (lv(m), q(c, 1))
    });
    LaurentPolynomial::new(rank_, terms).unwrap()
}

/// Random polynomials of rank 1 to 3 whose supports are full-dimensional.
pub fn full_dimensional_corpus(seed: u64, n: usize) -> Vec<(Vec<V>, LaurentPolynomial)> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < n {
        let rank_ = 1 + out.len() % 3;
        let count = r.gen_range(rank_ + 1..=rank_ + 4);
        let pts = random_points(&mut r, rank_, count, -2, 2);
        if affine_dim(&pts) == rank_ {
            let f = polynomial_on(&mut r, rank_, &pts);
            out.push((pts, f));
        }
    }
    out
}

/// Random polynomials of rank 1 to 3 with supports of every affine dimension, monomials included.
pub fn mixed_corpus(seed: u64, n: usize) -> Vec<(Vec<V>, LaurentPolynomial)> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for i in 0..n {
        let rank_ = 1 + i % 3;
        let dim = r.gen_range(0..=rank_);
        let origin: V = (0..rank_).map(|_| r.gen_range(-2..=2)).collect();
        let dirs: Vec<V> = loop {
            let d: Vec<V> = (0..dim).map(|_| (0..rank_).map(|_| r.gen_range(-2..=2)).collect()).collect();
            if rank(&d) == dim {
                break d;
            }
        };
        let mut support = BTreeSet::from([origin.clone()]);
        for d in &dirs {
            support.insert(origin.iter().zip(d).map(|(a, b)| a + b).collect::<V>());
        }
        for _ in 0..r.gen_range(0..3) {
            let p: V = dirs.iter().fold(origin.clone(), |acc, d| {
                let k = r.gen_range(-1..=2);
                acc.iter().zip(d).map(|(a, b)| a + k * b).collect()
            });
            support.insert(p);
        }
        let support: Vec<V> = support.into_iter().collect();
        let f = polynomial_on(&mut r, rank_, &support);
        out.push((support, f));
    }
    out
}

/// Fixed fans that are not normal fans of the random corpus.
pub fn fixed_fans() -> Vec<Fan> {
    let f = |rank_: usize, cones: &[&[&[i64]]]| Fan::from_i64(rank_, cones).unwrap();
    vec![
        f(2, &[&[&[1, 0], &[1, 7]]]),
        f(2, &[&[&[1, 0], &[-1, -2]], &[&[1, 0], &[0, 1]], &[&[0, 1], &[-1, -2]]]),
        f(2, &[&[&[2, 1], &[-1, 3]], &[&[-1, 3], &[-1, -4]], &[&[-1, -4], &[2, 1]]]),
        f(3, &[&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 3]]]),
        f(3, &[&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, -1]]]),
        f(
            3,
            &[
                &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
                &[&[1, 0, 0], &[0, 1, 0], &[-1, -1, -2]],
                &[&[1, 0, 0], &[0, 0, 1], &[-1, -1, -2]],
                &[&[0, 1, 0], &[0, 0, 1], &[-1, -1, -2]],
            ],
        ),
    ]
}

/// `(exponents, coefficient)` of the common minimizing support points of a set of functionals.
pub fn minimizers(support: &[V], functionals: &[V]) -> Vec<V> {
    let mut cur: Vec<V> = support.to_vec();
    for r in functionals {
        let m = cur.iter().map(|p| dot(p, r)).min().unwrap();
        cur.retain(|p| dot(p, r) == m);
    }
    cur
}

/// `min_{m ∈ support} ⟨r, m⟩` for each ray.
pub fn support_minima(support: &[V], rays: &[V]) -> BTreeMap<V, i64> {
    rays.iter().map(|r| (r.clone(), support.iter().map(|p| dot(p, r)).min().unwrap())).collect()
}

/// Height of a point `x_i = ±Π p^{e_ij}` with respect to the vertex set `vs`, via the product
/// formula: `Σ_v max_m log |x^m|_v`.
pub fn s_unit_height_f64(exponents: &[Vec<i64>], primes: &[i64], vs: &[V]) -> f64 {
    let logs: Vec<f64> = primes.iter().map(|&p| (p as f64).ln()).collect();
    let arch: Vec<f64> = exponents.iter().map(|e| e.iter().zip(&logs).map(|(a, l)| *a as f64 * l).sum()).collect();
    let mut h = vs.iter().map(|m| m.iter().zip(&arch).map(|(a, l)| *a as f64 * l).sum::<f64>()).fold(f64::MIN, f64::max);
    for (j, l) in logs.iter().enumerate() {
        let local: Vec<f64> = exponents.iter().map(|e| -(e[j] as f64) * l).collect();
        h += vs.iter().map(|m| m.iter().zip(&local).map(|(a, x)| *a as f64 * x).sum::<f64>()).fold(f64::MIN, f64::max);
    }
    h
}
