//! Dense exact matrices over Gaussian rationals.
//!
//! Gaussian elimination with exact pivots; no thresholds anywhere. These
//! kernels back every rank, kernel, and signature computation in the crate.

use crate::error::{Error, Result};
use crate::scalar::{Rat, Scalar};
use num_traits::Signed;
use std::fmt;
use std::ops::{Index, IndexMut};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Integer-entry convenience constructor, row-major.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: entries.iter().map(|&n| Scalar::from_int(n)).collect(),
        }
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::conj).collect(),
        }
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i..self.cols).all(|j| self[(i, j)] == self[(j, i)].conj()))
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        let p = &self[(i, j)] * &v[j];
                        acc += &p;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Reduced row echelon form; returns (rref, pivot column per pivot row).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // largest max-abs-component pivot keeps intermediate entries tame
            let mut best: Option<(usize, Rat)> = None;
            for i in r..m.rows {
                if !m[(i, c)].is_zero() {
                    let mag = m[(i, c)].max_abs_component();
                    match &best {
                        Some((_, cur)) if *cur >= mag => {}
                        _ => best = Some((i, mag)),
                    }
                }
            }
            let Some((pivot_row, _)) = best else { continue };
            m.swap_rows(r, pivot_row);
            let inv = m[(r, c)].inv().unwrap();
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        let delta = &factor * &m[(r, j)];
                        m[(i, j)] -= &delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rank by fraction-free (Bareiss) elimination over Gaussian integers,
    /// after clearing denominators row by row. Much faster than rational
    /// elimination on large integer-heavy matrices: no gcd reduction per
    /// operation, only exact divisions by the previous pivot.
    pub fn rank_bareiss(&self) -> usize {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| integerize_row(self.row(i)))
            .filter(|r| !r.iter().all(Scalar::is_zero))
            .collect();
        let cols = self.cols;
        let mut rank = 0;
        let mut prev_pivot = Scalar::one();
        for c in 0..cols {
            if rank == rows.len() {
                break;
            }
            // smallest nonzero pivot entry keeps growth down
            let mut best: Option<(usize, Rat)> = None;
            for (idx, row) in rows.iter().enumerate().skip(rank) {
                if !row[c].is_zero() {
                    let size = row[c].norm_sqr();
                    match &best {
                        Some((_, cur)) if *cur <= size => {}
                        _ => best = Some((idx, size)),
                    }
                }
            }
            let Some((pivot_row, _)) = best else { continue };
            rows.swap(rank, pivot_row);
            let pivot = rows[rank][c].clone();
            for i in rank + 1..rows.len() {
                if rows[i][c].is_zero() {
                    // still rescale the untouched row per Bareiss
                    for j in c..cols {
                        if !rows[i][j].is_zero() {
                            let num = &pivot * &rows[i][j];
                            rows[i][j] = gaussian_exact_div(&num, &prev_pivot);
                        }
                    }
                    continue;
                }
                let factor = rows[i][c].clone();
                for j in c..cols {
                    let num = &(&pivot * &rows[i][j]) - &(&factor * &rows[rank][j]);
                    rows[i][j] = if num.is_zero() {
                        Scalar::zero()
                    } else {
                        gaussian_exact_div(&num, &prev_pivot)
                    };
                }
            }
            prev_pivot = pivot;
            rank += 1;
        }
        rank
    }

    /// Basis of the right kernel. Each vector `v` satisfies `Mv = 0` exactly;
    /// together they span the full kernel.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (rref, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut map = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                map[col] = Some(row);
            }
            map
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for col in 0..self.cols {
                if let Some(row) = pivot_set[col] {
                    v[col] = -&rref[(row, free)];
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `Mx = b`; `None` when inconsistent. Free variables are set to
    /// zero, so the answer is deterministic.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= &m[(c, c)];
            let inv = m[(c, c)].inv().unwrap();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] * &inv;
                for j in c..n {
                    let delta = &factor * &m[(c, j)];
                    m[(i, j)] -= &delta;
                }
            }
        }
        det
    }

    /// Signature (p, q) of an invertible Hermitian matrix, by exact
    /// congruence reduction. Congruence-invariant by Sylvester's law.
    pub fn hermitian_signature(&self) -> Result<(usize, usize)> {
        if !self.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut active: Vec<usize> = (0..n).collect();
        let mut pos = 0;
        let mut neg = 0;
        while !active.is_empty() {
            // prefer a nonzero diagonal pivot
            let diag = active.iter().position(|&i| !m[(i, i)].is_zero());
            let k = match diag {
                Some(idx) => active[idx],
                None => {
                    // all active diagonal entries vanish; raise one with
                    // e_i ← e_i + conj(h_ij)·e_j, giving 2|h_ij|² on the diagonal
                    let mut found = None;
                    'outer: for (ai, &i) in active.iter().enumerate() {
                        for &j in &active[ai + 1..] {
                            if !m[(i, j)].is_zero() {
                                found = Some((i, j));
                                break 'outer;
                            }
                        }
                    }
                    let Some((i, j)) = found else {
                        return Err(Error::Singular); // active block identically zero
                    };
                    let c = m[(i, j)].conj();
                    congruence_add(&mut m, i, j, &c);
                    i
                }
            };
            let d = m[(k, k)].clone();
            debug_assert!(d.is_real());
            if d.re.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            // clear row/column k against the remaining active indices
            let d_inv = d.inv().unwrap();
            let others: Vec<usize> = active.iter().copied().filter(|&i| i != k).collect();
            for i in others {
                if !m[(i, k)].is_zero() {
                    // e_i ← e_i + c·e_k with conj(c) = −m[i][k]/d
                    let c = -(&m[(i, k)].conj() * &d_inv);
                    congruence_add(&mut m, i, k, &c);
                }
            }
            active.retain(|&i| i != k);
        }
        if pos + neg < n {
            return Err(Error::Singular);
        }
        Ok((pos, neg))
    }
}

const MOD_P: u64 = 2_147_483_647; // 2³¹ − 1, ≡ 3 mod 4

type Fp2 = (u64, u64);

fn fp2_mul(a: Fp2, b: Fp2) -> Fp2 {
    let p = MOD_P as u128;
    let (ar, ai) = (a.0 as u128, a.1 as u128);
    let (br, bi) = (b.0 as u128, b.1 as u128);
    let re = ((ar * br) % p + p - (ai * bi) % p) % p;
    let im = ((ar * bi) % p + (ai * br) % p) % p;
    (re as u64, im as u64)
}

fn fp2_sub(a: Fp2, b: Fp2) -> Fp2 {
    ((a.0 + MOD_P - b.0) % MOD_P, (a.1 + MOD_P - b.1) % MOD_P)
}

fn fp_pow(base: u64, mut exp: u64) -> u64 {
    let p = MOD_P as u128;
    let mut acc = 1u128;
    let mut b = base as u128 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse in F_p² = F_p[i]/(i² + 1): conj(a)/N(a).
fn fp2_inv(a: Fp2) -> Fp2 {
    let p = MOD_P as u128;
    let n = ((a.0 as u128 * a.0 as u128 + a.1 as u128 * a.1 as u128) % p) as u64;
    let n_inv = fp_pow(n, MOD_P - 2);
    fp2_mul((a.0, (MOD_P - a.1) % MOD_P), (n_inv, 0))
}

fn rat_mod_p(r: &Rat) -> u64 {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    debug_assert!(r.is_integer());
    let m = ((r.numer() % BigInt::from(MOD_P)) + BigInt::from(MOD_P)) % BigInt::from(MOD_P);
    m.to_u64().unwrap_or(0)
}

impl Matrix {
    /// Rank over the field F_p² with p = 2³¹ − 1, after clearing
    /// denominators rowwise. Always a lower bound on the exact rank;
    /// callers combine it with structural inequalities when an exact
    /// certificate is needed.
    pub fn rank_mod_p(&self) -> usize {
        let mut rows: Vec<Vec<Fp2>> = (0..self.rows)
            .map(|i| {
                let cleared = integerize_row(self.row(i));
                cleared
                    .iter()
                    .map(|s| (rat_mod_p(&s.re), rat_mod_p(&s.im)))
                    .collect()
            })
            .collect();
        let cols = self.cols;
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows.len() {
                break;
            }
            let Some(pivot_row) = (rank..rows.len()).find(|&i| rows[i][c] != (0, 0)) else {
                continue;
            };
            rows.swap(rank, pivot_row);
            let piv_inv = fp2_inv(rows[rank][c]);
            for j in c..cols {
                rows[rank][j] = fp2_mul(rows[rank][j], piv_inv);
            }
            for i in rank + 1..rows.len() {
                if rows[i][c] != (0, 0) {
                    let factor = rows[i][c];
                    for j in c..cols {
                        let delta = fp2_mul(factor, rows[rank][j]);
                        rows[i][j] = fp2_sub(rows[i][j], delta);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Clears denominators: the row times the lcm of all its denominators.
fn integerize_row(row: &[Scalar]) -> Vec<Scalar> {
    use num_bigint::BigInt;
    use num_traits::One;
    let mut lcm = BigInt::one();
    for s in row {
        lcm = num_integer::lcm(lcm, s.re.denom().clone());
        lcm = num_integer::lcm(lcm, s.im.denom().clone());
    }
    let factor = Scalar::from_rat(Rat::from_integer(lcm));
    row.iter().map(|s| s * &factor).collect()
}

/// Exact division in ℤ[i]: a·conj(b) / N(b), entrywise integral by
/// construction in Bareiss elimination.
fn gaussian_exact_div(a: &Scalar, b: &Scalar) -> Scalar {
    let num = a * &b.conj();
    let n = b.norm_sqr();
    let out = Scalar::new(&num.re / &n, &num.im / &n);
    debug_assert!(
        out.re.is_integer() && out.im.is_integer(),
        "Bareiss division must stay integral"
    );
    out
}

/// Congruence update for the basis change e_i ← e_i + c·e_k:
/// row_i += conj(c)·row_k, then col_i += c·col_k.
fn congruence_add(m: &mut Matrix, i: usize, k: usize, c: &Scalar) {
    let cc = c.conj();
    for j in 0..m.cols {
        let delta = &cc * &m[(k, j)];
        m[(i, j)] += &delta;
    }
    for r in 0..m.rows {
        let delta = c * &m[(r, k)];
        m[(r, i)] += &delta;
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

// small vector helpers used throughout the crate

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * c).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn nullspace_rank_one_symmetric() {
        let m = Matrix::from_i64(2, 2, &[1, 1, 1, 1]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(vec_is_zero(&m.mul_vec(&ns[0])));
        // spans (1, -1)
        assert_eq!(ns[0][0], -ns[0][1].clone());
    }

    #[test]
    fn nullspace_full_rank_is_empty() {
        assert!(Matrix::identity(3).nullspace().is_empty());
    }

    #[test]
    fn nullspace_single_row() {
        let m = Matrix::from_i64(1, 3, &[1, 2, 3]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(vec_is_zero(&m.mul_vec(v)));
        }
        assert_eq!(
            ns[0],
            vec![
                Scalar::from_int(-2),
                Scalar::from_int(1),
                Scalar::from_int(0)
            ]
        );
        assert_eq!(
            ns[1],
            vec![
                Scalar::from_int(-3),
                Scalar::from_int(0),
                Scalar::from_int(1)
            ]
        );
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(3, 3, &[2, 1, 0, 1, 3, 1, 0, 1, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert_eq!(inv.mul(&m), Matrix::identity(3));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = Matrix::from_i64(2, 2, &[1, 2, 2, 4]);
        assert!(m.inverse().is_none());
        assert!(m.det().is_zero());
    }

    #[test]
    fn signature_examples() {
        assert_eq!(Matrix::identity(2).hermitian_signature().unwrap(), (2, 0));
        assert_eq!(
            Matrix::from_i64(2, 2, &[1, 0, 0, -1])
                .hermitian_signature()
                .unwrap(),
            (1, 1)
        );
        // off-diagonal Hermitian: eigenvalues ±1
        assert_eq!(
            Matrix::from_i64(2, 2, &[0, 1, 1, 0])
                .hermitian_signature()
                .unwrap(),
            (1, 1)
        );
    }

    #[test]
    fn signature_rejects_non_hermitian_and_singular() {
        let m = Matrix::from_i64(2, 2, &[0, 1, 2, 0]);
        assert!(matches!(m.hermitian_signature(), Err(Error::NotHermitian)));
        let s = Matrix::from_i64(2, 2, &[1, 1, 1, 1]);
        assert!(matches!(s.hermitian_signature(), Err(Error::Singular)));
    }

    #[test]
    fn complex_hermitian_signature() {
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3
        let mut m = Matrix::zeros(2, 2);
        m[(0, 0)] = Scalar::from_int(2);
        m[(1, 1)] = Scalar::from_int(2);
        m[(0, 1)] = Scalar::i();
        m[(1, 0)] = -Scalar::i();
        assert_eq!(m.hermitian_signature().unwrap(), (2, 0));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_i64(2, 2, &[1, 2, 3, 4]);
        let b = vec![Scalar::from_int(5), Scalar::from_int(11)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        let sing = Matrix::from_i64(2, 2, &[1, 1, 1, 1]);
        assert!(sing
            .solve(&[Scalar::from_int(0), Scalar::from_int(1)])
            .is_none());
    }

    #[test]
    fn rational_pivots_stay_exact() {
        let mut m = Matrix::zeros(2, 2);
        m[(0, 0)] = Scalar::from_rat(rat(1, 3));
        m[(0, 1)] = Scalar::from_rat(rat(1, 7));
        m[(1, 0)] = Scalar::from_rat(rat(2, 5));
        m[(1, 1)] = Scalar::from_rat(rat(3, 11));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
    }
}
