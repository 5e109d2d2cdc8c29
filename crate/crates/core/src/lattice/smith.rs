//! Smith and Hermite normal forms over `Z`, with the unimodular transforms tracked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LatticeError, LatticeMatrix, LatticeVector};

/// `left · original · right = diag`, with `left`, `right` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub left: LatticeMatrix,
    pub diag: Vec<BigInt>,
    pub right: LatticeMatrix,
    pub(crate) left_inverse: LatticeMatrix,
    pub(crate) right_inverse: LatticeMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn left_inverse(&self) -> &LatticeMatrix {
        &self.left_inverse
    }

    pub fn right_inverse(&self) -> &LatticeMatrix {
        &self.right_inverse
    }

    /// The diagonal form as a full `rows × cols` matrix.
    pub fn diagonal_matrix(&self) -> LatticeMatrix {
        let mut d = LatticeMatrix::zeros(self.left.rows(), self.right.cols());
        for (i, v) in self.diag.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }
}

struct Tracker {
    a: Vec<Vec<BigInt>>,
    left: Vec<Vec<BigInt>>,
    left_inv: Vec<Vec<BigInt>>,
    right: Vec<Vec<BigInt>>,
    right_inv: Vec<Vec<BigInt>>,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    LatticeMatrix::identity(n).data().to_vec()
}

fn axpy_row(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    // row dst += q * row src
    let (s, d) = if src < dst {
        let (lo, hi) = m.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        *x += q * y;
    }
}

fn axpy_col(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let v = q * &row[src];
        row[dst] += v;
    }
}

fn swap_cols(m: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

impl Tracker {
    // row i += q row t
    fn row_add(&mut self, i: usize, t: usize, q: &BigInt) {
        axpy_row(&mut self.a, i, t, q);
        axpy_row(&mut self.left, i, t, q);
        axpy_col(&mut self.left_inv, t, i, &-q);
    }
    fn row_swap(&mut self, i: usize, t: usize) {
        self.a.swap(i, t);
        self.left.swap(i, t);
        swap_cols(&mut self.left_inv, i, t);
    }
    fn row_negate(&mut self, t: usize) {
        for x in self.a[t].iter_mut().chain(self.left[t].iter_mut()) {
            *x = -&*x;
        }
        for row in self.left_inv.iter_mut() {
            row[t] = -&row[t];
        }
    }
    // col j += q col t
    fn col_add(&mut self, j: usize, t: usize, q: &BigInt) {
        axpy_col(&mut self.a, j, t, q);
        axpy_col(&mut self.right, j, t, q);
        axpy_row(&mut self.right_inv, t, j, &-q);
    }
    fn col_swap(&mut self, j: usize, t: usize) {
        swap_cols(&mut self.a, j, t);
        swap_cols(&mut self.right, j, t);
        self.right_inv.swap(j, t);
    }
}

/// Smith normal form with transforms. Total on every matrix, including empty ones.
pub fn smith_normal_form(m: &LatticeMatrix) -> SmithDecomposition {
    let (r, c) = (m.rows(), m.cols());
    let mut t = Tracker {
        a: m.data().to_vec(),
        left: identity(r),
        left_inv: identity(r),
        right: identity(c),
        right_inv: identity(c),
    };
    let n = r.min(c);
    'outer: for k in 0..n {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in k..r {
                for j in k..c {
                    if t.a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| t.a[i][j].abs() < t.a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'outer };
            if pi != k {
                t.row_swap(pi, k);
            }
            if pj != k {
                t.col_swap(pj, k);
            }
            let mut clean = true;
            for i in k + 1..r {
                if t.a[i][k].is_zero() {
                    continue;
                }
                let q = &t.a[i][k] / &t.a[k][k];
                t.row_add(i, k, &-q);
                clean &= t.a[i][k].is_zero();
            }
            for j in k + 1..c {
                if t.a[k][j].is_zero() {
                    continue;
                }
                let q = &t.a[k][j] / &t.a[k][k];
                t.col_add(j, k, &-q);
                clean &= t.a[k][j].is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = t.a[k][k].clone();
            let offender = (k + 1..r).find(|&i| (k + 1..c).any(|j| !t.a[i][j].is_multiple_of(&pivot)));
            match offender {
                Some(i) => t.row_add(k, i, &BigInt::one()),
                None => break,
            }
        }
        if t.a[k][k].is_negative() {
            t.row_negate(k);
        }
    }
    let diag = (0..n).map(|i| t.a[i][i].clone()).collect();
    let wrap = |rows: Vec<Vec<BigInt>>, cols: usize| {
        LatticeMatrix::from_rows(cols, rows.into_iter().map(LatticeVector::new).collect())
            .expect("tracked transform keeps its shape")
    };
    SmithDecomposition {
        left: wrap(t.left, r),
        diag,
        right: wrap(t.right, c),
        left_inverse: wrap(t.left_inv, r),
        right_inverse: wrap(t.right_inv, c),
    }
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: upper echelon,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`. Zero rows dropped.
pub fn hermite_normal_form(cols: usize, rows: &[LatticeVector]) -> Vec<LatticeVector> {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let mut k = 0;
    for j in 0..cols {
        if k == a.len() {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in k..a.len() {
                if !a[i][j].is_zero() && best.is_none_or(|b| a[i][j].abs() < a[b][j].abs()) {
                    best = Some(i);
                }
            }
            let Some(p) = best else { break };
            a.swap(p, k);
            let mut done = true;
            for i in k + 1..a.len() {
                if a[i][j].is_zero() {
                    continue;
                }
                let q = &a[i][j] / &a[k][j];
                axpy_row(&mut a, i, k, &-q);
                done &= a[i][j].is_zero();
            }
            if done {
                break;
            }
        }
        if k < a.len() && !a[k][j].is_zero() {
            if a[k][j].is_negative() {
                for x in a[k].iter_mut() {
                    *x = -&*x;
                }
            }
            for i in 0..k {
                let q = a[i][j].div_floor(&a[k][j]);
                if !q.is_zero() {
                    axpy_row(&mut a, i, k, &-q);
                }
            }
            k += 1;
        }
    }
    a.truncate(k);
    a.into_iter().map(LatticeVector::new).collect()
}

/// Basis (in Hermite form) of the saturated sublattice `(Q·generators) ∩ Z^rank`.
pub fn saturate_sublattice(rank: usize, generators: &[LatticeVector]) -> Result<Vec<LatticeVector>, LatticeError> {
    let m = LatticeMatrix::from_rows(rank, generators.to_vec())?;
    let snf = smith_normal_form(&m);
    let r = snf.rank();
    let basis: Vec<LatticeVector> = (0..r).map(|i| snf.right_inverse.row(i)).collect();
    Ok(hermite_normal_form(rank, &basis))
}

/// Basis (in Hermite form) of `{ x ∈ Z^rank : ⟨g, x⟩ = 0 for every generator g }`.
pub fn orthogonal_lattice(rank: usize, generators: &[LatticeVector]) -> Result<Vec<LatticeVector>, LatticeError> {
    let m = LatticeMatrix::from_rows(rank, generators.to_vec())?;
    let snf = smith_normal_form(&m);
    let r = snf.rank();
    let basis: Vec<LatticeVector> = (r..rank).map(|j| snf.right.column(j)).collect();
    Ok(hermite_normal_form(rank, &basis))
}

/// True iff the vectors extend to a `Z`-basis of `Z^μ`.
pub fn is_unimodular_extension(vectors: &[LatticeVector]) -> Result<bool, LatticeError> {
    let Some(first) = vectors.first() else { return Ok(true) };
    let m = LatticeMatrix::from_rows(first.rank(), vectors.to_vec())?;
    let snf = smith_normal_form(&m);
    if snf.rank() < vectors.len() {
        return Err(LatticeError::DependentInput);
    }
    Ok(snf.diag.iter().all(One::is_one))
}

/// Some integer solution of `a · x = b`, if one exists.
pub fn solve_integer(a: &LatticeMatrix, b: &LatticeVector) -> Result<Option<LatticeVector>, LatticeError> {
    if b.rank() != a.rows() {
        return Err(LatticeError::RankMismatch { expected: a.rows(), found: b.rank() });
    }
    let snf = smith_normal_form(a);
    let lb = snf.left.apply(b)?;
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, v) in lb.entries().iter().enumerate() {
        let d = snf.diag.get(i).cloned().unwrap_or_default();
        if d.is_zero() {
            if !v.is_zero() {
                return Ok(None);
            }
        } else {
            let (q, rem) = v.div_rem(&d);
            if !rem.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        }
    }
    Ok(Some(snf.right.apply(&LatticeVector::new(y))?))
}
