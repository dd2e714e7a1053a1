//! Dense symmetric eigenvalue machinery.
//!
//! The solver reduces the matrix to tridiagonal form with Householder
//! reflections and diagonalizes with the implicit-shift QL iteration,
//! accumulating eigenvectors. Everything is deterministic: no randomized
//! pivoting, no parallel reductions, so identical input bits give identical
//! output bits.

use crate::graph::VertexSubset;
use thiserror::Error;

/// Iteration cap per eigenvalue in the QL stage.
const MAX_QL_SWEEPS: usize = 60;

#[derive(Debug, Error)]
pub enum LinalgError {
    /// QL failed to deflate an eigenvalue within the sweep cap. The hash
    /// identifies the offending matrix for reproduction.
    #[error("eigensolver failed to converge within {MAX_QL_SWEEPS} sweeps (matrix hash {matrix_hash:#018x})")]
    NoConvergence { matrix_hash: u64 },
    #[error("k = {k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("invalid partition: {0}")]
    BadPartition(String),
}

/// Dense real symmetric matrix. Entries are stored in a full row-major
/// buffer, but all mutation goes through [`SymMatrix::set`], which writes
/// both triangles, so the stored matrix is symmetric by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    /// Builds a symmetric matrix from `f`, consulted only for `i <= j`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Sum of squared entries (the Frobenius norm squared).
    pub fn sum_squares(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum()
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// FNV-1a over the dimension and the raw entry bits; used to identify a
    /// matrix in non-convergence reports.
    pub fn content_hash(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |bytes: &[u8]| {
            for &b in bytes {
                h ^= u64::from(b);
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        };
        eat(&(self.n as u64).to_le_bytes());
        for x in &self.data {
            eat(&x.to_bits().to_le_bytes());
        }
        h
    }

    /// Eigenvalues only, sorted descending.
    pub fn eigenvalues(&self) -> Result<Spectrum, LinalgError> {
        let (values, _) = self.solve()?;
        Ok(Spectrum { values, trace: self.trace() })
    }

    /// Full decomposition; `vectors[j]` is a unit eigenvector for `values[j]`.
    pub fn eigen_decomposition(&self) -> Result<EigenDecomposition, LinalgError> {
        let (values, vectors) = self.solve()?;
        Ok(EigenDecomposition { values, vectors })
    }

    /// Determinant via the eigenvalue product, which keeps determinant-based
    /// bounds consistent with the spectrum they are compared against.
    pub fn determinant(&self) -> Result<f64, LinalgError> {
        Ok(self.eigenvalues()?.determinant())
    }

    fn solve(&self) -> Result<(Vec<f64>, Vec<Vec<f64>>), LinalgError> {
        let n = self.n;
        if n == 0 {
            return Ok((Vec::new(), Vec::new()));
        }
        let mut v: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j)).collect())
            .collect();
        let mut d = vec![0.0; n];
        let mut e = vec![0.0; n];
        tred2(&mut v, &mut d, &mut e);
        tql2(&mut v, &mut d, &mut e).map_err(|()| LinalgError::NoConvergence {
            matrix_hash: self.content_hash(),
        })?;
        // Sort descending, keeping vectors aligned.
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&a, &b| d[b].partial_cmp(&d[a]).expect("eigenvalues are finite"));
        let values: Vec<f64> = idx.iter().map(|&i| d[i]).collect();
        let vectors: Vec<Vec<f64>> = idx.iter().map(|&j| (0..n).map(|k| v[k][j]).collect()).collect();
        Ok((values, vectors))
    }
}

/// Eigenvalues of a symmetric matrix, sorted descending, with the source trace
/// retained for consistency checks.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    trace: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Eigenvalues, largest first.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn trace(&self) -> f64 {
        self.trace
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// Sum of the `k` largest eigenvalues, `1 <= k <= n`.
    pub fn s_k(&self, k: usize) -> Result<f64, LinalgError> {
        if k == 0 || k > self.values.len() {
            return Err(LinalgError::KOutOfRange { k, n: self.values.len() });
        }
        Ok(self.values[..k].iter().sum())
    }

    /// Counts of (positive, zero, negative) eigenvalues, where "zero" means
    /// within `tol` of zero.
    pub fn inertia(&self, tol: f64) -> (usize, usize, usize) {
        let p = self.values.iter().filter(|&&x| x > tol).count();
        let q = self.values.iter().filter(|&&x| x < -tol).count();
        (p, self.values.len() - p - q, q)
    }

    pub fn determinant(&self) -> f64 {
        self.values.iter().product()
    }
}

#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Eigenvalues, largest first.
    pub values: Vec<f64>,
    /// `vectors[j]` is a unit eigenvector for `values[j]`.
    pub vectors: Vec<Vec<f64>>,
}

/// Householder reduction to symmetric tridiagonal form, with accumulation of
/// the orthogonal transformation in `v`. Standard EISPACK-derived formulation.
fn tred2(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    d.copy_from_slice(&v[n - 1].clone());

    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
                v[j][i] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v[j][i] = f;
                g = e[j] + v[j][j] * f;
                for k in (j + 1)..i {
                    g += v[k][j] * d[k];
                    e[k] += v[k][j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k][j] -= f * e[k] + g * d[k];
                }
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
            }
        }
        d[i] = h;
    }

    for i in 0..(n - 1) {
        v[n - 1][i] = v[i][i];
        v[i][i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[k][i + 1] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[k][i + 1] * v[k][j];
                }
                for k in 0..=i {
                    v[k][j] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[k][i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[n - 1][j];
        v[n - 1][j] = 0.0;
    }
    v[n - 1][n - 1] = 1.0;
    e[0] = 0.0;
}

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix, accumulating
/// eigenvectors into `v`. Fails with `Err(())` if any eigenvalue needs more
/// than [`MAX_QL_SWEEPS`] sweeps.
fn tql2(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) -> Result<(), ()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0_f64;
    let mut tst1 = 0.0_f64;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > MAX_QL_SWEEPS {
                    return Err(());
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0_f64;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0_f64;
                let mut s2 = 0.0_f64;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g2 = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g2;
                    d[i + 1] = h + s * (c * g2 + s * d[i]);
                    for row in v.iter_mut().take(n) {
                        h = row[i + 1];
                        row[i + 1] = s * row[i] + c * h;
                        row[i] = c * row[i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

/// Quotient matrix of a symmetric matrix under a vertex partition: entry
/// `(i, j)` is the average row sum of block `(i, j)`. Not symmetric in
/// general, but always diagonally similar to a symmetric matrix, so its
/// spectrum is real.
#[derive(Debug, Clone)]
pub struct QuotientMatrix {
    r: usize,
    entries: Vec<f64>,
    part_sizes: Vec<usize>,
}

pub fn quotient_matrix(m: &SymMatrix, parts: &[VertexSubset]) -> Result<QuotientMatrix, LinalgError> {
    let n = m.order();
    let r = parts.len();
    if r == 0 {
        return Err(LinalgError::BadPartition("no parts".into()));
    }
    let mut seen = vec![false; n];
    for p in parts {
        if p.is_empty() {
            return Err(LinalgError::BadPartition("empty part".into()));
        }
        for &u in p.members() {
            if u >= n {
                return Err(LinalgError::BadPartition(format!("vertex {u} out of range 0..{n}")));
            }
            if seen[u] {
                return Err(LinalgError::BadPartition(format!("vertex {u} appears in two parts")));
            }
            seen[u] = true;
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(LinalgError::BadPartition("parts do not cover every vertex".into()));
    }

    let mut entries = vec![0.0; r * r];
    for (i, pi) in parts.iter().enumerate() {
        for (j, pj) in parts.iter().enumerate() {
            let mut sum = 0.0;
            for &u in pi.members() {
                for &v in pj.members() {
                    sum += m.get(u, v);
                }
            }
            entries[i * r + j] = sum / pi.members().len() as f64;
        }
    }
    Ok(QuotientMatrix {
        r,
        entries,
        part_sizes: parts.iter().map(|p| p.members().len()).collect(),
    })
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.r
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.r + j]
    }

    /// Real spectrum via the symmetric matrix the quotient is similar to:
    /// conjugating by diag(sqrt(part size)) turns entry `(i, j)` into
    /// `blocksum / sqrt(n_i * n_j)`, which is symmetric.
    pub fn spectrum(&self) -> Result<Spectrum, LinalgError> {
        let r = self.r;
        let s = SymMatrix::from_fn(r, |i, j| {
            let ni = self.part_sizes[i] as f64;
            let nj = self.part_sizes[j] as f64;
            self.entry(i, j) * (ni / nj).sqrt()
        });
        s.eigenvalues()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn diagonal_matrix_spectrum() {
        let m = SymMatrix::from_fn(4, |i, j| if i == j { [3.0, -1.0, 7.0, 0.5][i] } else { 0.0 });
        let s = m.eigenvalues().unwrap();
        assert_eq!(s.values(), &[7.0, 3.0, 0.5, -1.0]);
        assert_close(s.trace(), 9.5, 0.0);
    }

    #[test]
    fn two_by_two_known_eigenvalues() {
        // [[2,1],[1,2]] has eigenvalues 3 and 1.
        let m = SymMatrix::from_fn(2, |i, j| if i == j { 2.0 } else { 1.0 });
        let s = m.eigenvalues().unwrap();
        assert_close(s.values()[0], 3.0, 1e-14);
        assert_close(s.values()[1], 1.0, 1e-14);
        assert_close(s.determinant(), 3.0, 1e-13);
    }

    #[test]
    fn s_k_and_inertia() {
        let m = SymMatrix::from_fn(3, |i, j| if i == j { [2.0, 0.0, -2.0][i] } else { 0.0 });
        let s = m.eigenvalues().unwrap();
        assert_eq!(s.s_k(1).unwrap(), 2.0);
        assert_eq!(s.s_k(2).unwrap(), 2.0);
        assert_eq!(s.s_k(3).unwrap(), 0.0);
        assert!(s.s_k(0).is_err());
        assert!(s.s_k(4).is_err());
        assert_eq!(s.inertia(1e-9), (1, 1, 1));
    }

    /// Deterministic pseudo-random symmetric matrices: eigenvector residuals
    /// must stay below 1e-8 * (1 + inf-norm), and the eigenvalue sum must
    /// match the trace.
    #[test]
    fn residuals_on_pseudorandom_matrices() {
        let mut state = 0x243f_6a88_85a3_08d3_u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        for &n in &[1usize, 2, 3, 5, 8, 13, 21, 40] {
            let mut m = SymMatrix::zeros(n);
            for i in 0..n {
                for j in i..n {
                    m.set(i, j, next() * 5.0);
                }
            }
            let dec = m.eigen_decomposition().unwrap();
            let tol = 1e-8 * (1.0 + m.inf_norm());
            let mut sum = 0.0;
            for (lam, x) in dec.values.iter().zip(&dec.vectors) {
                sum += lam;
                let mut res = 0.0;
                for i in 0..n {
                    let mut mx = 0.0;
                    for j in 0..n {
                        mx += m.get(i, j) * x[j];
                    }
                    res += (mx - lam * x[i]).powi(2);
                }
                assert!(res.sqrt() <= tol, "n={n} residual {} > {tol}", res.sqrt());
            }
            assert!((sum - m.trace()).abs() <= 1e-8 * (n as f64) * (1.0 + m.inf_norm()));
        }
    }

    #[test]
    fn quotient_rejects_bad_partitions() {
        let m = SymMatrix::zeros(3);
        let p = |xs: &[usize]| VertexSubset::new(xs.iter().copied());
        assert!(quotient_matrix(&m, &[]).is_err());
        assert!(quotient_matrix(&m, &[p(&[0, 1])]).is_err());
        assert!(quotient_matrix(&m, &[p(&[0, 1]), p(&[1, 2])]).is_err());
        assert!(quotient_matrix(&m, &[p(&[0, 1]), p(&[2, 3])]).is_err());
        assert!(quotient_matrix(&m, &[p(&[0, 1]), p(&[2])]).is_ok());
    }

    #[test]
    fn quotient_preserves_equitable_spectrum() {
        // Block matrix with an equitable partition: quotient eigenvalues are
        // a subset of the full spectrum.
        let m = SymMatrix::from_fn(4, |i, j| {
            let bi = i / 2;
            let bj = j / 2;
            if bi == bj {
                if i == j { 1.0 } else { 2.0 }
            } else {
                3.0
            }
        });
        let parts = [VertexSubset::new([0, 1]), VertexSubset::new([2, 3])];
        let q = quotient_matrix(&m, &parts).unwrap();
        assert_close(q.entry(0, 0), 3.0, 1e-15);
        assert_close(q.entry(0, 1), 6.0, 1e-15);
        let qs = q.spectrum().unwrap();
        let full = m.eigenvalues().unwrap();
        for qv in qs.values() {
            assert!(
                full.values().iter().any(|fv| (fv - qv).abs() < 1e-10),
                "quotient eigenvalue {qv} missing from full spectrum"
            );
        }
    }
}
