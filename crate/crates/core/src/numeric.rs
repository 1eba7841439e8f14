//! Float mode: eigenvalue-based kernels with an explicit tolerance ε.
//!
//! Exact arithmetic is the default everywhere in this crate; these routines
//! exist for the operations that genuinely need numerical eigenvalues
//! (companion-matrix root finding, cross-checking spectra against a dense
//! eigensolver, Cholesky certificates) and for the float flavor of the
//! kernel/rank contracts. All comparisons go through the caller's ε.

use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::scalar::rat_to_f64;
use nalgebra::{Complex, DMatrix};

/// Default tolerance for float mode.
pub const DEFAULT_EPS: f64 = 1e-9;

pub fn matrix_to_c64(m: &Matrix) -> DMatrix<Complex<f64>> {
    DMatrix::from_fn(m.rows, m.cols, |i, j| {
        let (re, im) = m[(i, j)].to_c64();
        Complex::new(re, im)
    })
}

/// Real roots of a polynomial: eigenvalues of the companion matrix with
/// |Im λ| < ε·scale, clustered into multiplicities at resolution ε·scale.
pub fn real_roots_f64(p: &Poly, eps: f64) -> Vec<(f64, usize)> {
    let monic = p.monic();
    let n = monic.degree();
    if n == 0 {
        return Vec::new();
    }
    let mut companion = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        companion[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        companion[(i, n - 1)] = -rat_to_f64(&monic.coeff(i));
    }
    let eigen = companion.complex_eigenvalues();
    let scale = eigen.iter().map(|z| z.norm()).fold(1.0_f64, f64::max);
    let tol = eps * scale;
    let mut reals: Vec<f64> = eigen
        .iter()
        .filter(|z| z.im.abs() < tol)
        .map(|z| z.re)
        .collect();
    reals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out: Vec<(f64, usize)> = Vec::new();
    for r in reals {
        match out.last_mut() {
            Some((v, m)) if (r - *v).abs() < tol => *m += 1,
            _ => out.push((r, 1)),
        }
    }
    out
}

/// Float kernel basis via SVD: right singular vectors whose singular value
/// is below ε·σ_max. Each returned v satisfies ‖Mv‖ ≤ ε·‖M‖.
pub fn nullspace_f64(rows: usize, cols: usize, entries: &[f64], eps: f64) -> Vec<Vec<f64>> {
    // pad with zero rows so the thin SVD still carries a full V
    let m = if rows < cols {
        let mut padded = DMatrix::<f64>::zeros(cols, cols);
        padded
            .view_mut((0, 0), (rows, cols))
            .copy_from(&DMatrix::from_row_slice(rows, cols, entries));
        padded
    } else {
        DMatrix::from_row_slice(rows, cols, entries)
    };
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("svd computes V^T");
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0_f64, f64::max);
    let threshold = eps * sigma_max.max(1.0);
    let mut basis = Vec::new();
    for (k, sv) in svd.singular_values.iter().enumerate() {
        if *sv < threshold {
            basis.push(v_t.row(k).iter().cloned().collect());
        }
    }
    basis
}

pub fn rank_f64(rows: usize, cols: usize, entries: &[f64], eps: f64) -> usize {
    cols - nullspace_f64(rows, cols, entries, eps).len()
}

/// Eigenvalues of a matrix that is similar to a Hermitian one (all real up
/// to ε); sorted ascending. The input need not be literally Hermitian.
pub fn real_eigenvalues_f64(m: &Matrix, eps: f64) -> Option<Vec<f64>> {
    let cm = matrix_to_c64(m);
    let schur = cm.schur();
    let eigen = schur.eigenvalues()?;
    let scale = eigen.iter().map(|z| z.norm()).fold(1.0_f64, f64::max);
    let mut out = Vec::with_capacity(eigen.len());
    for z in eigen.iter() {
        if z.im.abs() > eps * scale {
            return None;
        }
        out.push(z.re);
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Some(out)
}

/// Float Cholesky certificate: W with ‖W†W − H‖∞ ≤ ε·‖H‖∞, or None when H
/// is not numerically positive definite.
pub fn cholesky_certificate(h: &Matrix, eps: f64) -> Option<DMatrix<Complex<f64>>> {
    let hm = matrix_to_c64(h);
    let chol = hm.clone().cholesky()?;
    let l = chol.l();
    let w = l.adjoint();
    let residual = (w.adjoint() * &w) - &hm;
    let scale = hm.iter().map(|z| z.norm()).fold(1.0_f64, f64::max);
    let max_res = residual.iter().map(|z| z.norm()).fold(0.0_f64, f64::max);
    (max_res <= eps * scale).then_some(w)
}

/// Signature of a Hermitian matrix by eigenvalue signs at tolerance ε.
pub fn signature_f64(h: &Matrix, eps: f64) -> Option<(usize, usize)> {
    let hm = matrix_to_c64(h);
    let se = hm.symmetric_eigen();
    let scale = se.eigenvalues.iter().fold(1.0_f64, |a, b| a.max(b.abs()));
    let mut pos = 0;
    let mut neg = 0;
    for ev in se.eigenvalues.iter() {
        if *ev > eps * scale {
            pos += 1;
        } else if *ev < -eps * scale {
            neg += 1;
        } else {
            return None; // numerically singular
        }
    }
    Some((pos, neg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn companion_roots_match_exact() {
        let p = Poly::from_i64(&[2, -1, -2, 1]); // (x−1)(x+1)(x−2)
        let roots = real_roots_f64(&p, DEFAULT_EPS);
        assert_eq!(roots.len(), 3);
        let expect = [-1.0, 1.0, 2.0];
        for ((r, m), e) in roots.iter().zip(expect) {
            assert_eq!(*m, 1);
            assert!((r - e).abs() < 1e-7);
        }
    }

    #[test]
    fn complex_pair_filtered() {
        let p = Poly::from_i64(&[1, 0, 1]); // x² + 1
        assert!(real_roots_f64(&p, DEFAULT_EPS).is_empty());
    }

    #[test]
    fn float_nullspace_dimensions() {
        let entries = [1.0, 2.0, 3.0, 2.0, 4.0, 6.0];
        let ns = nullspace_f64(2, 3, &entries, DEFAULT_EPS);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let r1: f64 = v.iter().zip([1.0, 2.0, 3.0]).map(|(a, b)| a * b).sum();
            let r2: f64 = v.iter().zip([2.0, 4.0, 6.0]).map(|(a, b)| a * b).sum();
            assert!(r1.abs() < 1e-8 && r2.abs() < 1e-8);
        }
        assert_eq!(rank_f64(2, 3, &entries, DEFAULT_EPS), 1);
    }

    #[test]
    fn hermitian_eigenvalues() {
        let mut m = Matrix::zeros(2, 2);
        m[(0, 1)] = Scalar::one();
        m[(1, 0)] = Scalar::one();
        let ev = real_eigenvalues_f64(&m, DEFAULT_EPS).unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-9 && (ev[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn cholesky_accepts_posdef_rejects_indefinite() {
        let pd = Matrix::from_i64(2, 2, &[2, 1, 1, 2]);
        assert!(cholesky_certificate(&pd, DEFAULT_EPS).is_some());
        let indef = Matrix::from_i64(2, 2, &[1, 0, 0, -1]);
        assert!(cholesky_certificate(&indef, DEFAULT_EPS).is_none());
        assert_eq!(signature_f64(&indef, DEFAULT_EPS), Some((1, 1)));
    }
}
