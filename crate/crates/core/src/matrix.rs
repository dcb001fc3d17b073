//! Dense complex matrices and the small amount of numerical linear algebra
//! the representation engine needs: Hermitian Jacobi eigendecomposition,
//! simultaneous diagonalization of a commuting Hermitian pair (which yields
//! eigensystems of normal matrices), nullspaces, and common-eigenvector
//! search.
//!
//! Everything here is deterministic, dense, row-major and sized for dims
//! ≤ 16; regular representation matrices are exact 0/1 and the only
//! irrational numbers appear after a basis change.

use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, OrderedF64};

/// Tolerance for entrywise matrix and eigenvalue comparisons.
pub const TOL_ENTRY: f64 = 1e-9;
/// Tolerance for off-block residual mass after a basis change.
pub const TOL_RESIDUAL: f64 = 1e-7;
/// Tolerance for unitarity of permutation matrices.
pub const TOL_UNITARY: f64 = 1e-12;
/// Gap below which two eigenvalues of a random combination are treated as
/// colliding (same cluster).
pub const TOL_CLUSTER: f64 = 1e-6;

/// A square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        Matrix { dim, data }
    }

    /// The permutation matrix sending basis vector `|z⟩` to `|images[z]⟩`:
    /// entry `(images[z], z)` is 1.
    pub fn from_permutation(images: &[usize]) -> Self {
        let dim = images.len();
        let mut m = Matrix::zeros(dim);
        for (z, &img) in images.iter().enumerate() {
            m.set(img, z, Complex64::new(1.0, 0.0));
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.dim + c] = v;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = Matrix::zeros(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..d {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Matrix {
        Matrix::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Matrix, tol: f64) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }

    pub fn commutes_with(&self, other: &Matrix, tol: f64) -> bool {
        self.mul(other).approx_eq(&other.mul(self), tol)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.dagger()
            .mul(self)
            .approx_eq(&Matrix::identity(self.dim), tol)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.re.is_finite() && v.im.is_finite())
    }

    /// Recovers the permutation images if every entry is exactly 0 or 1 with
    /// a single 1 per row and column.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let d = self.dim;
        let mut images = vec![usize::MAX; d];
        let mut row_used = vec![false; d];
        for c in 0..d {
            for r in 0..d {
                let v = self.get(r, c);
                if v == Complex64::new(1.0, 0.0) {
                    if images[c] != usize::MAX || row_used[r] {
                        return None;
                    }
                    images[c] = r;
                    row_used[r] = true;
                } else if v != Complex64::new(0.0, 0.0) {
                    return None;
                }
            }
        }
        images.iter().all(|&i| i != usize::MAX).then_some(images)
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    pub fn column(&self, c: usize) -> Vec<Complex64> {
        (0..self.dim).map(|r| self.get(r, c)).collect()
    }

    pub fn from_columns(cols: &[Vec<Complex64>]) -> Matrix {
        let dim = cols.len();
        Matrix::from_fn(dim, |r, c| cols[c][r])
    }

    /// The square sub-block with rows and columns in `lo..hi`.
    pub fn block(&self, lo: usize, hi: usize) -> Matrix {
        Matrix::from_fn(hi - lo, |r, c| self.get(lo + r, lo + c))
    }

    /// Largest absolute entry outside the diagonal blocks given by
    /// contiguous `dims` (which must sum to the dimension).
    pub fn max_off_block(&self, dims: &[usize]) -> f64 {
        debug_assert_eq!(dims.iter().sum::<usize>(), self.dim);
        let mut bounds = Vec::with_capacity(dims.len());
        let mut start = 0;
        for &d in dims {
            bounds.push((start, start + d));
            start += d;
        }
        let block_of = |i: usize| bounds.iter().position(|&(lo, hi)| lo <= i && i < hi);
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in 0..self.dim {
                if block_of(r) != block_of(c) {
                    worst = worst.max(self.get(r, c).norm());
                }
            }
        }
        worst
    }
}

/// Matrices serialize as an array of rows; every entry is a `[re, im]` pair.
/// Entries that are exact integers (as all permutation-matrix entries are)
/// serialize as JSON integers.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        fn number(v: f64) -> serde_json::Value {
            if v.fract() == 0.0 && v.abs() <= 2f64.powi(53) {
                serde_json::Value::from(v as i64)
            } else {
                serde_json::Value::from(v)
            }
        }
        let mut seq = serializer.serialize_seq(Some(self.dim))?;
        for r in 0..self.dim {
            let row: Vec<serde_json::Value> = (0..self.dim)
                .map(|c| {
                    let v = self.get(r, c);
                    serde_json::Value::Array(vec![number(v.re), number(v.im)])
                })
                .collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Returns eigenvalues in ascending order and a unitary whose
/// columns are the matching eigenvectors, so `H = U · diag(d) · U†`.
pub fn hermitian_eigen(h: &Matrix) -> (Vec<f64>, Matrix) {
    let d = h.dim();
    let mut a = h.clone();
    let mut u = Matrix::identity(d);
    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..d {
            for q in (p + 1)..d {
                off = off.max(a.get(p, q).norm());
            }
        }
        if off <= 1e-13 {
            break;
        }
        for p in 0..d {
            for q in (p + 1)..d {
                let apq = a.get(p, q);
                let g = apq.norm();
                if g <= 1e-14 {
                    continue;
                }
                // Scaling row/column q by the conjugate phase turns the 2×2
                // block real symmetric; compose that with the standard real
                // Jacobi rotation chosen to zero the off-diagonal entry.
                let phase = apq / g;
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let tau = (aqq - app) / (2.0 * g);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Combined unitary diag(1, phase⁻¹) · [[c, s], [−s, c]] in the
                // (p, q) plane.
                let mut v = Matrix::identity(d);
                v.set(p, p, Complex64::new(c, 0.0));
                v.set(p, q, Complex64::new(s, 0.0));
                v.set(q, p, Complex64::new(-s, 0.0) * phase.conj());
                v.set(q, q, Complex64::new(c, 0.0) * phase.conj());
                a = v.dagger().mul(&a).mul(&v);
                u = u.mul(&v);
            }
        }
    }
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| a.get(i, i).re.partial_cmp(&a.get(j, j).re).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let columns: Vec<Vec<Complex64>> = order.iter().map(|&i| u.column(i)).collect();
    (values, Matrix::from_columns(&columns))
}

/// Common eigenbasis of two commuting Hermitian matrices: diagonalizes `h1`,
/// then re-diagonalizes `h2` inside each (near-)degenerate eigenspace of
/// `h1`. Returns per-vector eigenvalue pairs and the common unitary.
pub fn simultaneous_hermitian_eigen(h1: &Matrix, h2: &Matrix) -> (Vec<(f64, f64)>, Matrix) {
    let d = h1.dim();
    let (d1, mut u) = hermitian_eigen(h1);
    let b = u.dagger().mul(h2).mul(&u);
    let mut d2 = vec![0.0f64; d];
    let mut lo = 0;
    while lo < d {
        let mut hi = lo + 1;
        while hi < d && (d1[hi] - d1[hi - 1]).abs() <= 1e-8 {
            hi += 1;
        }
        if hi - lo == 1 {
            d2[lo] = b.get(lo, lo).re;
        } else {
            let sub = Matrix::from_fn(hi - lo, |r, c| {
                let v = b.get(lo + r, lo + c);
                let w = b.get(lo + c, lo + r).conj();
                (v + w) / 2.0
            });
            let (sub_vals, sub_u) = hermitian_eigen(&sub);
            let mut rot = Matrix::identity(d);
            for r in 0..(hi - lo) {
                for c in 0..(hi - lo) {
                    rot.set(lo + r, lo + c, sub_u.get(r, c));
                }
            }
            u = u.mul(&rot);
            d2[lo..hi].copy_from_slice(&sub_vals);
        }
        lo = hi;
    }
    (d1.into_iter().zip(d2).collect(), u)
}

/// Eigendecomposition of a normal matrix via its commuting Hermitian parts
/// `(M + M†)/2` and `(M − M†)/2i`. Returns eigenvalues sorted by real part
/// then imaginary part, with matching eigenvector columns, and verifies the
/// reconstruction residual.
pub fn normal_eigen(m: &Matrix) -> Result<(Vec<Complex64>, Matrix), Error> {
    let d = m.dim();
    let h1 = m.add(&m.dagger()).scale(Complex64::new(0.5, 0.0));
    let h2 = m.sub(&m.dagger()).scale(Complex64::new(0.0, -0.5));
    let (pairs, u) = simultaneous_hermitian_eigen(&h1, &h2);
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| {
        pairs[i]
            .partial_cmp(&pairs[j])
            .expect("eigenvalues are finite")
    });
    let values: Vec<Complex64> = order
        .iter()
        .map(|&i| Complex64::new(pairs[i].0, pairs[i].1))
        .collect();
    let columns: Vec<Vec<Complex64>> = order.iter().map(|&i| u.column(i)).collect();
    let u = Matrix::from_columns(&columns);
    let mut diag = Matrix::zeros(d);
    for (i, &v) in values.iter().enumerate() {
        diag.set(i, i, v);
    }
    let residual = u.mul(&diag).mul(&u.dagger()).max_abs_diff(m);
    if residual > TOL_ENTRY {
        return Err(Error::ToleranceFailure {
            what: "normal eigendecomposition residual",
            value: OrderedF64(residual),
            limit: OrderedF64(TOL_ENTRY),
        });
    }
    Ok((values, u))
}

/// Eigenvalues of a normal matrix, sorted by real then imaginary part.
pub fn normal_eigenvalues(m: &Matrix) -> Result<Vec<Complex64>, Error> {
    normal_eigen(m).map(|(values, _)| values)
}

/// Modified Gram-Schmidt; vectors with residual norm below `1e-10` are
/// dropped, the rest are normalized.
pub fn orthonormalize(vectors: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &basis {
            let overlap: Complex64 = b.iter().zip(&w).map(|(bi, wi)| bi.conj() * wi).sum();
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi -= overlap * bi;
            }
        }
        let norm: f64 = w.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-10 {
            basis.push(w.into_iter().map(|x| x / norm).collect());
        }
    }
    basis
}

/// Extends an orthonormal set of `dim`-vectors to a full unitary matrix by
/// Gram-Schmidt over the standard basis vectors.
pub fn extend_to_unitary(first_columns: &[Vec<Complex64>], dim: usize) -> Matrix {
    let mut cols = first_columns.to_vec();
    for i in 0..dim {
        if cols.len() == dim {
            break;
        }
        let mut e = vec![Complex64::new(0.0, 0.0); dim];
        e[i] = Complex64::new(1.0, 0.0);
        let extended = orthonormalize(&[cols.clone(), vec![e]].concat());
        if extended.len() > cols.len() {
            cols = extended;
        }
    }
    assert_eq!(cols.len(), dim, "failed to complete an orthonormal basis");
    Matrix::from_columns(&cols)
}

/// Orthonormal basis of the kernel of a rectangular matrix given as `rows`
/// (each of equal length), with entries below `tol` treated as zero during
/// elimination.
pub fn nullspace(rows: &[Vec<Complex64>], tol: f64) -> Vec<Vec<Complex64>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<Complex64>> = rows.to_vec();
    let nrows = m.len();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        // Partial pivoting on the remaining rows.
        let (best_row, best_val) = (rank..nrows)
            .map(|r| (r, m[r][col].norm()))
            .fold((rank, 0.0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        if best_val <= tol {
            continue;
        }
        m.swap(rank, best_row);
        let pivot = m[rank][col];
        for c in col..ncols {
            m[rank][c] /= pivot;
        }
        for r in 0..nrows {
            if r != rank {
                let factor = m[r][col];
                if factor.norm() > 0.0 {
                    for c in col..ncols {
                        let sub = factor * m[rank][c];
                        m[r][c] -= sub;
                    }
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    let mut kernel = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Complex64::new(0.0, 0.0); ncols];
        v[free] = Complex64::new(1.0, 0.0);
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[i][free];
        }
        kernel.push(v);
    }
    orthonormalize(&kernel)
}

/// Distinct eigenvalues of a normal matrix, clustered at [`TOL_CLUSTER`].
pub fn distinct_eigenvalues(m: &Matrix) -> Result<Vec<Complex64>, Error> {
    let values = normal_eigenvalues(m)?;
    let mut distinct: Vec<Complex64> = Vec::new();
    for v in values {
        if distinct.iter().all(|d| (d - v).norm() > TOL_CLUSTER) {
            distinct.push(v);
        }
    }
    Ok(distinct)
}

/// Whether the family of normal matrices has a common eigenvector. Searched
/// by intersecting eigenspaces: a candidate subspace is refined against each
/// matrix's eigenvalues in turn.
pub fn common_eigenvector_exists(mats: &[Matrix]) -> Result<bool, Error> {
    if mats.is_empty() {
        return Ok(true);
    }
    let dim = mats[0].dim();
    let whole: Vec<Vec<Complex64>> = (0..dim)
        .map(|i| {
            let mut e = vec![Complex64::new(0.0, 0.0); dim];
            e[i] = Complex64::new(1.0, 0.0);
            e
        })
        .collect();
    refine_common_eigenspace(mats, &whole)
}

fn refine_common_eigenspace(
    mats: &[Matrix],
    basis: &[Vec<Complex64>],
) -> Result<bool, Error> {
    if basis.is_empty() {
        return Ok(false);
    }
    let Some((m, rest)) = mats.split_first() else {
        return Ok(true);
    };
    let dim = m.dim();
    for lambda in distinct_eigenvalues(m)? {
        // Coefficient vectors c with (M − λI) · (basis · c) = 0.
        let shifted: Vec<Vec<Complex64>> = (0..dim)
            .map(|r| {
                basis
                    .iter()
                    .map(|b| {
                        let mut row_dot = Complex64::new(0.0, 0.0);
                        for (c2, bc) in b.iter().enumerate() {
                            row_dot += m.get(r, c2) * bc;
                        }
                        row_dot - lambda * b[r]
                    })
                    .collect()
            })
            .collect();
        let kernel = nullspace(&shifted, TOL_ENTRY);
        if kernel.is_empty() {
            continue;
        }
        let refined: Vec<Vec<Complex64>> = kernel
            .iter()
            .map(|coeffs| {
                (0..dim)
                    .map(|r| {
                        coeffs
                            .iter()
                            .zip(basis)
                            .map(|(c, b)| c * b[r])
                            .sum::<Complex64>()
                    })
                    .collect()
            })
            .collect();
        if refine_common_eigenspace(rest, &orthonormalize(&refined))? {
            return Ok(true);
        }
    }
    Ok(false)
}
