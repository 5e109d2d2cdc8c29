use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{HeightsError, LogValue, RationalTorusPoint};
use crate::lattice::LatticeVector;
use crate::newton::character_value;

/// Points of one coset `{x^χ = c}`; a lone point has no character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetFamily {
    pub character: Option<LatticeVector>,
    pub constant: Option<BigRational>,
    pub points: Vec<RationalTorusPoint>,
}

/// Partitions points of `Gm^2` into as few cosets of one-dimensional subtori as possible.
///
/// Candidate characters come from pairs of points whose quotient lies in a one-dimensional
/// subgroup; pairs differing only by signs contribute the coordinate and diagonal characters.
pub fn detect_coset_families(points: &[RationalTorusPoint]) -> Result<Vec<CosetFamily>, HeightsError> {
    if let Some(p) = points.iter().find(|p| p.rank() != 2) {
        return Err(HeightsError::RankMismatch { expected: 2, found: p.rank() });
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.is_empty() {
        return Ok(Vec::new());
    }
    let base: Vec<BigInt> = LogValue::from_terms(
        pts.iter().flat_map(|p| p.coords().iter().flat_map(|x| [x.numer().abs(), x.denom().clone()])).map(|n| (n, BigRational::one())),
    )
    .terms()
    .keys()
    .cloned()
    .collect();
    let exps: Vec<Vec<[i64; 2]>> = pts
        .iter()
        .map(|p| base.iter().map(|b| [exponent(&p.coords()[0], b), exponent(&p.coords()[1], b)]).collect())
        .collect();
    let mut candidates: Vec<LatticeVector> = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let diffs: Vec<[i64; 2]> =
                exps[i].iter().zip(&exps[j]).map(|(a, b)| [a[0] - b[0], a[1] - b[1]]).filter(|w| w != &[0, 0]).collect();
            let options: Vec<LatticeVector> = match diffs.first() {
                None => [[1, 0], [0, 1], [1, 1], [1, -1]].iter().map(|c| LatticeVector::from_i64(c)).collect(),
                Some(w) => {
                    if diffs.iter().any(|u| u[0] * w[1] - u[1] * w[0] != 0) {
                        continue;
                    }
                    let g = w[0].gcd(&w[1]);
                    let mut chi = [w[1] / g, -w[0] / g];
                    if chi[0] < 0 || (chi[0] == 0 && chi[1] < 0) {
                        chi = [-chi[0], -chi[1]];
                    }
                    vec![LatticeVector::from_i64(&chi)]
                }
            };
            for chi in options {
                if character_value(pts[i].coords(), &chi) == character_value(pts[j].coords(), &chi) && !candidates.contains(&chi) {
                    candidates.push(chi);
                }
            }
        }
    }
    candidates.sort();
    let mut families: Vec<(LatticeVector, BigRational, Vec<usize>)> = Vec::new();
    for chi in &candidates {
        let mut groups: BTreeMap<BigRational, Vec<usize>> = BTreeMap::new();
        for (k, p) in pts.iter().enumerate() {
            groups.entry(character_value(p.coords(), chi)).or_default().push(k);
        }
        families.extend(groups.into_iter().filter(|(_, g)| g.len() > 1).map(|(c, g)| (chi.clone(), c, g)));
    }
    let sets: Vec<Vec<usize>> = families.iter().map(|f| f.2.clone()).collect();
    let chosen = minimum_cover(pts.len(), &sets);
    let mut owner: Vec<Option<usize>> = vec![None; pts.len()];
    for &f in &chosen {
        for &k in &sets[f] {
            owner[k].get_or_insert(f);
        }
    }
    let mut out: Vec<CosetFamily> = Vec::new();
    for &f in &chosen {
        let members: Vec<RationalTorusPoint> =
            (0..pts.len()).filter(|&k| owner[k] == Some(f)).map(|k| pts[k].clone()).collect();
        if !members.is_empty() {
            out.push(CosetFamily {
                character: Some(families[f].0.clone()),
                constant: Some(families[f].1.clone()),
                points: members,
            });
        }
    }
    out.sort_by(|a, b| (&a.character, &a.constant).cmp(&(&b.character, &b.constant)));
    for k in (0..pts.len()).filter(|&k| owner[k].is_none()) {
        out.push(CosetFamily { character: None, constant: None, points: vec![pts[k].clone()] });
    }
    Ok(out)
}

/// Exponent of `b` in `x` for a base element of a coprime factorization of `x`.
fn exponent(x: &BigRational, b: &BigInt) -> i64 {
    let count = |n: &BigInt| {
        let mut n = n.abs();
        let mut k = 0;
        while !n.is_zero() && (&n % b).is_zero() {
            n /= b;
            k += 1;
        }
        k
    };
    count(x.numer()) - count(x.denom())
}

/// Fewest sets (indices into `sets`) covering the points they can cover; points in no set are
/// left to singletons.
fn minimum_cover(n: usize, sets: &[Vec<usize>]) -> Vec<usize> {
    let mut covering: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (s, set) in sets.iter().enumerate() {
        for &k in set {
            covering[k].push(s);
        }
    }
    for c in covering.iter_mut() {
        c.sort_by_key(|&s| std::cmp::Reverse(sets[s].len()));
    }
    let need: Vec<bool> = covering.iter().map(|c| !c.is_empty()).collect();
    let largest = sets.iter().map(Vec::len).max().unwrap_or(1);
    let mut best = greedy(n, sets, &need);
    let mut chosen = Vec::new();
    let mut covered = vec![0u32; n];
    search(&covering, sets, &need, largest, &mut covered, &mut chosen, &mut best);
    best
}

fn greedy(n: usize, sets: &[Vec<usize>], need: &[bool]) -> Vec<usize> {
    let mut covered = vec![false; n];
    let mut out = Vec::new();
    loop {
        let gain = |s: &Vec<usize>| s.iter().filter(|&&k| !covered[k]).count();
        let Some((idx, g)) = sets.iter().enumerate().map(|(i, s)| (i, gain(s))).max_by_key(|&(i, g)| (g, std::cmp::Reverse(i)))
        else {
            return out;
        };
        if g == 0 || !(0..n).any(|k| need[k] && !covered[k]) {
            return out;
        }
        for &k in &sets[idx] {
            covered[k] = true;
        }
        out.push(idx);
    }
}

fn search(
    covering: &[Vec<usize>],
    sets: &[Vec<usize>],
    need: &[bool],
    largest: usize,
    covered: &mut Vec<u32>,
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    let open: Vec<usize> = (0..covered.len()).filter(|&k| need[k] && covered[k] == 0).collect();
    if open.is_empty() {
        if chosen.len() < best.len() {
            *best = chosen.clone();
        }
        return;
    }
    if chosen.len() + open.len().div_ceil(largest) >= best.len() {
        return;
    }
    let pivot = *open.iter().min_by_key(|&&k| covering[k].len()).expect("nonempty");
    for &s in &covering[pivot] {
        for &k in &sets[s] {
            covered[k] += 1;
        }
        chosen.push(s);
        search(covering, sets, need, largest, covered, chosen, best);
        chosen.pop();
        for &k in &sets[s] {
            covered[k] -= 1;
        }
    }
}
