//! Dense matrices over the exact complex scalar type, exact elimination
//! algorithms (determinant, rank, nullspace, semidefiniteness with
//! witnesses), and bridges into `nalgebra` for the float paths.
//!
//! Float eigenvalues of a complex hermitian matrix go through the real
//! symmetric doubling `M = R + iS -> [[R, S], [-S, R]]`, which has the same
//! spectrum with doubled multiplicities; the de-doubled list is returned.

use crate::error::{Error, Result};
use crate::scalar::{CCoeff, Coeff, Domain};
use crate::tol;
use nalgebra::{Complex, DMatrix, DVector};
use std::cmp::Ordering;
use std::fmt;

/// Dense complex matrix with domain-tagged exact or float entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    domain: Domain,
    entries: Vec<CCoeff>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            domain: Domain::Rational,
            entries: vec![CCoeff::zero(); rows * cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, CCoeff::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CCoeff) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Build from a row-major grid of `(re, im)` integer pairs.
    pub fn from_int_grid(k: usize, grid: &[(i64, i64)]) -> Self {
        assert_eq!(grid.len(), k * k);
        Self::from_fn(k, k, |i, j| {
            let (re, im) = grid[i * k + j];
            CCoeff::from_i64(re, im)
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn at(&self, i: usize, j: usize) -> &CCoeff {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CCoeff) {
        self.domain = self
            .domain
            .join(v.domain())
            .expect("matrix entries share a domain");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|e| e.im.is_zero())
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).add(o.at(i, j)))
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).sub(o.at(i, j)))
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).neg())
    }

    pub fn scale(&self, s: &CCoeff) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).mul(s))
    }

    pub fn scale_real(&self, s: &Coeff) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).scale(s))
    }

    /// Matrix product, skipping zero entries (the generator matrices are
    /// monomial, so this makes their products linear-time).
    pub fn matmul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows);
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.at(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn trace(&self) -> CCoeff {
        let mut t = CCoeff::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t.add(self.at(i, i));
        }
        t
    }

    pub fn kron(&self, o: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows * o.rows, self.cols * o.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.at(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..o.rows {
                    for j2 in 0..o.cols {
                        let b = o.at(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * o.rows + i2, j1 * o.cols + j2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|e| e.abs_f64()).fold(0.0, f64::max)
    }

    /// Largest entry magnitude bound valid in every embedding of the radical.
    pub fn max_abs_bound(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.abs_bound())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian_exact(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if *self.at(i, j) != self.at(j, i).conj() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_hermitian_float(&self, tol_rel: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        let scale = self.max_abs().max(1.0);
        for i in 0..self.rows {
            for j in i..self.cols {
                let a = self.at(i, j).to_complex_f64();
                let b = self.at(j, i).to_complex_f64();
                if (a.0 - b.0).abs() > tol_rel * scale || (a.1 + b.1).abs() > tol_rel * scale {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_hermitian(&self) -> bool {
        if self.domain.is_exact() {
            self.is_hermitian_exact()
        } else {
            self.is_hermitian_float(1e-10)
        }
    }

    pub fn to_na(&self) -> DMatrix<Complex<f64>> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| {
            let (re, im) = self.at(i, j).to_complex_f64();
            Complex::new(re, im)
        })
    }

    pub fn from_na(m: &DMatrix<Complex<f64>>) -> Mat {
        let mut out = Mat::zeros(m.nrows(), m.ncols());
        out.domain = Domain::Float;
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                out.entries[i * m.ncols() + j] = CCoeff::from_f64(m[(i, j)].re, m[(i, j)].im);
            }
        }
        out
    }

    pub fn real_part(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| {
            CCoeff::real(self.at(i, j).re.clone())
        })
    }

    pub fn imag_part(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| {
            CCoeff::real(self.at(i, j).im.clone())
        })
    }

    /// Exact lift of float entries (dyadic rationals); exact entries pass
    /// through unchanged.
    pub fn to_exact_dyadic(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| {
            let e = self.at(i, j);
            CCoeff::new(e.re.to_exact_dyadic(), e.im.to_exact_dyadic())
        })
    }

    pub fn to_float(&self) -> Mat {
        let mut out = Mat::zeros(self.rows, self.cols);
        out.domain = Domain::Float;
        for (k, e) in self.entries.iter().enumerate() {
            let (re, im) = e.to_complex_f64();
            out.entries[k] = CCoeff::from_f64(re, im);
        }
        out
    }

    // -- exact elimination ---------------------------------------------------

    fn require_exact(&self) -> Result<()> {
        if !self.domain.is_exact() {
            return Err(crate::scalar::DomainError::FloatNotAllowed.into());
        }
        Ok(())
    }

    /// Exact determinant by Gaussian elimination over the coefficient field.
    pub fn det_exact(&self) -> Result<CCoeff> {
        self.require_exact()?;
        assert!(self.is_square());
        let k = self.rows;
        let mut a: Vec<CCoeff> = self.entries.clone();
        let idx = |i: usize, j: usize| i * k + j;
        let mut det = CCoeff::one();
        for col in 0..k {
            let pivot_row = (col..k).find(|&r| !a[idx(r, col)].is_zero());
            let Some(pr) = pivot_row else {
                return Ok(CCoeff::zero());
            };
            if pr != col {
                for j in 0..k {
                    a.swap(idx(col, j), idx(pr, j));
                }
                det = det.neg();
            }
            let piv = a[idx(col, col)].clone();
            det = det.mul(&piv);
            let pinv = piv.inv();
            for r in col + 1..k {
                let f = a[idx(r, col)].mul(&pinv);
                if f.is_zero() {
                    continue;
                }
                for j in col..k {
                    let v = a[idx(r, j)].sub(&f.mul(&a[idx(col, j)]));
                    a[idx(r, j)] = v;
                }
            }
        }
        Ok(det)
    }

    /// Exact rank via row echelon form.
    pub fn rank_exact(&self) -> Result<usize> {
        self.require_exact()?;
        let (rref, pivots) = self.rref()?;
        let _ = rref;
        Ok(pivots.len())
    }

    fn rref(&self) -> Result<(Vec<CCoeff>, Vec<usize>)> {
        self.require_exact()?;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.entries.clone();
        let idx = |i: usize, j: usize| i * cols + j;
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            let Some(pr) = (r..rows).find(|&i| !a[idx(i, c)].is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    a.swap(idx(r, j), idx(pr, j));
                }
            }
            let pinv = a[idx(r, c)].inv();
            for j in c..cols {
                a[idx(r, j)] = a[idx(r, j)].mul(&pinv);
            }
            for i in 0..rows {
                if i == r || a[idx(i, c)].is_zero() {
                    continue;
                }
                let f = a[idx(i, c)].clone();
                for j in c..cols {
                    let v = a[idx(i, j)].sub(&f.mul(&a[idx(r, j)]));
                    a[idx(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        Ok((a, pivots))
    }

    /// Exact right-nullspace basis (columns as vectors).
    pub fn nullspace_exact(&self) -> Result<Vec<Vec<CCoeff>>> {
        let (a, pivots) = self.rref()?;
        let cols = self.cols;
        let idx = |i: usize, j: usize| i * cols + j;
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![CCoeff::zero(); cols];
            v[fc] = CCoeff::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = a[idx(r, fc)].neg();
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// Exact positive semidefiniteness test for hermitian matrices; on
    /// failure returns a vector `v` with `v* M v < 0`.
    pub fn psd_witness_exact(&self) -> Result<Option<Vec<CCoeff>>> {
        self.require_exact()?;
        assert!(self.is_square());
        let k = self.rows;
        let mut a: Vec<Vec<CCoeff>> = (0..k)
            .map(|i| (0..k).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut active: Vec<usize> = (0..k).collect();
        // elimination steps recorded for witness lifting
        let mut steps: Vec<(usize, Vec<CCoeff>, CCoeff)> = Vec::new();
        loop {
            // negative diagonal ends the game immediately
            if let Some(&i) = active
                .iter()
                .find(|&&i| a[i][i].re.sign() == Ordering::Less)
            {
                let mut w = vec![CCoeff::zero(); k];
                w[i] = CCoeff::one();
                return Ok(Some(lift_witness(w, &steps)));
            }
            // positive pivot: take the Schur complement on the rest
            if let Some(pos) = active
                .iter()
                .position(|&i| a[i][i].re.sign() == Ordering::Greater)
            {
                let p = active.remove(pos);
                let piv = a[p][p].clone();
                let pinv = piv.inv();
                let row: Vec<CCoeff> = (0..k).map(|j| a[p][j].clone()).collect();
                for &i in &active {
                    let f = a[i][p].mul(&pinv);
                    if f.is_zero() {
                        continue;
                    }
                    for &j in &active {
                        let v = a[i][j].sub(&f.mul(&row[j]));
                        a[i][j] = v;
                    }
                }
                steps.push((p, row, piv));
                if active.is_empty() {
                    return Ok(None);
                }
                continue;
            }
            // all active diagonals are zero: PSD iff the active block vanishes
            let mut offender = None;
            'outer: for &i in &active {
                for &j in &active {
                    if i != j && !a[i][j].is_zero() {
                        offender = Some((i, j));
                        break 'outer;
                    }
                }
            }
            match offender {
                None => return Ok(None),
                Some((i, j)) => {
                    let mut w = vec![CCoeff::zero(); k];
                    w[i] = a[i][j].clone();
                    w[j] = CCoeff::one().neg();
                    return Ok(Some(lift_witness(w, &steps)));
                }
            }
        }
    }

    pub fn is_psd_exact(&self) -> Result<bool> {
        Ok(self.psd_witness_exact()?.is_none())
    }

    /// Exact positive definiteness (Sylvester: all leading principal minors
    /// positive).
    pub fn is_pd_exact(&self) -> Result<bool> {
        self.require_exact()?;
        assert!(self.is_square());
        let k = self.rows;
        let mut a: Vec<CCoeff> = self.entries.clone();
        let idx = |i: usize, j: usize| i * k + j;
        for col in 0..k {
            let piv = a[idx(col, col)].clone();
            if !piv.im.is_zero() || piv.re.sign() != Ordering::Greater {
                return Ok(false);
            }
            let pinv = piv.inv();
            for r in col + 1..k {
                let f = a[idx(r, col)].mul(&pinv);
                if f.is_zero() {
                    continue;
                }
                for j in col..k {
                    let v = a[idx(r, j)].sub(&f.mul(&a[idx(col, j)]));
                    a[idx(r, j)] = v;
                }
            }
        }
        Ok(true)
    }

    /// Float PSD check with the scaled eigenvalue tolerance.
    pub fn is_psd_float(&self) -> bool {
        let na = self.to_na();
        let evals = herm_eigenvalues(&na);
        let scale = self.max_abs().max(1.0);
        evals.iter().all(|&l| l >= -tol::TAU_PSD * scale)
    }
}

fn lift_witness(mut w: Vec<CCoeff>, steps: &[(usize, Vec<CCoeff>, CCoeff)]) -> Vec<CCoeff> {
    // undo Schur-complement steps from last to first:
    // v = w - e_p * (sum_j A[p][j] w_j) / A[p][p]
    for (p, row, piv) in steps.iter().rev() {
        let mut dot = CCoeff::zero();
        for (j, wj) in w.iter().enumerate() {
            if !wj.is_zero() {
                dot = dot.add(&row[j].mul(wj));
            }
        }
        w[*p] = dot.div(piv).neg();
    }
    w
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, "  ")?;
                }
                let e = self.at(i, j);
                if e.im.is_zero() {
                    write!(f, "{}", e.re)?;
                } else {
                    write!(f, "{}+{} i", e.re, e.im)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Float eigenvalue and subspace machinery
// ---------------------------------------------------------------------------

/// Real symmetric doubling of a complex matrix: `[[R, S], [-S, R]]` for
/// `M = R + iS`.
pub fn double_real_embedding(m: &DMatrix<Complex<f64>>) -> DMatrix<f64> {
    let k = m.nrows();
    DMatrix::from_fn(2 * k, 2 * k, |i, j| {
        let (bi, bj) = (i / k, j / k);
        let v = m[(i % k, j % k)];
        match (bi, bj) {
            (0, 0) | (1, 1) => v.re,
            (0, 1) => v.im,
            (1, 0) => -v.im,
            _ => unreachable!(),
        }
    })
}

/// Cyclic Jacobi eigendecomposition for complex hermitian (and hence real
/// symmetric) matrices. Unconditionally convergent with a hard sweep cap,
/// robust for exactly degenerate spectra. Returns values ascending with
/// matching eigenvector columns.
pub fn jacobi_hermitian(m: &DMatrix<Complex<f64>>) -> (Vec<f64>, DMatrix<Complex<f64>>) {
    let n = m.nrows();
    let mut a = m.clone();
    let mut v = DMatrix::<Complex<f64>>::identity(n, n);
    let scale = m.iter().map(|z| z.norm()).fold(0.0f64, f64::max).max(1e-300);
    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    off += a[(p, q)].norm_sqr();
                }
            }
        }
        if off.sqrt() <= 1e-14 * scale * n as f64 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= 1e-300 {
                    continue;
                }
                // phase so that conj(phase) * apq is real positive
                let phase = apq / Complex::new(mag, 0.0);
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (aqq - app) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // columns: x_p' = c x_p - s conj(phase) x_q
                //          x_q' = s phase x_p + c x_q
                let cs = Complex::new(c, 0.0);
                let s_phase = phase * s;
                let s_phase_conj = phase.conj() * s;
                for i in 0..n {
                    let aip = a[(i, p)];
                    let aiq = a[(i, q)];
                    a[(i, p)] = aip * cs - aiq * s_phase_conj;
                    a[(i, q)] = aip * s_phase + aiq * cs;
                }
                for j in 0..n {
                    let apj = a[(p, j)];
                    let aqj = a[(q, j)];
                    a[(p, j)] = apj * cs - aqj * s_phase;
                    a[(q, j)] = apj * s_phase_conj + aqj * cs;
                }
                // keep the diagonal numerically real
                a[(p, p)] = Complex::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex::new(a[(q, q)].re, 0.0);
                a[(p, q)] = Complex::new(0.0, 0.0);
                a[(q, p)] = Complex::new(0.0, 0.0);
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip * cs - viq * s_phase_conj;
                    v[(i, q)] = vip * s_phase + viq * cs;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(x, x)].re.partial_cmp(&a[(y, y)].re).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vecs = DMatrix::zeros(n, n);
    for (newcol, &oldcol) in order.iter().enumerate() {
        vecs.set_column(newcol, &v.column(oldcol));
    }
    (vals, vecs)
}

/// Eigenvalues of a hermitian matrix through the doubled real-symmetric
/// embedding, sorted ascending.
pub fn herm_eigenvalues(m: &DMatrix<Complex<f64>>) -> Vec<f64> {
    let k = m.nrows();
    if k == 0 {
        return Vec::new();
    }
    let doubled = double_real_embedding(m).map(|x| Complex::new(x, 0.0));
    let (evals, _) = jacobi_hermitian(&doubled);
    // spectrum comes doubled: average adjacent pairs
    (0..k)
        .map(|i| (evals[2 * i] + evals[2 * i + 1]) / 2.0)
        .collect()
}

/// Eigenvalues of a real symmetric matrix, sorted ascending.
pub fn sym_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let (evals, _) = jacobi_hermitian(&m.map(|x| Complex::new(x, 0.0)));
    evals
}

/// Full hermitian eigendecomposition (values ascending with matching
/// eigenvector columns).
pub fn herm_eigen_pairs(m: &DMatrix<Complex<f64>>) -> (Vec<f64>, DMatrix<Complex<f64>>) {
    jacobi_hermitian(m)
}

/// Right-nullspace of a complex matrix with threshold `TAU_RANK * sigma_max`
/// from the singular value decomposition. Wide matrices are padded with zero
/// rows so that every right singular vector is available.
pub fn nullspace_float(a: &DMatrix<Complex<f64>>) -> Vec<DVector<Complex<f64>>> {
    let (rows, cols) = (a.nrows(), a.ncols());
    let square = if rows >= cols {
        a.clone()
    } else {
        let mut m = DMatrix::<Complex<f64>>::zeros(cols, cols);
        m.view_mut((0, 0), (rows, cols)).copy_from(a);
        m
    };
    let svd = square.svd(false, true);
    let v_t = svd.v_t.expect("requested V^*");
    let smax = svd.singular_values.iter().fold(0.0f64, |m, &s| m.max(s));
    let thresh = (tol::TAU_RANK * smax).max(1e-12 * smax.max(1.0));
    let mut out = Vec::new();
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s <= thresh {
            out.push(DVector::from(v_t.row(i).map(|z| z.conj()).transpose()));
        }
    }
    out
}

pub fn rank_float(a: &DMatrix<Complex<f64>>) -> usize {
    let n = a.ncols();
    n - nullspace_float(a).len()
}

/// Orthonormal completion: returns a unitary whose first columns span the
/// given (assumed independent) set, completed by modified Gram–Schmidt over
/// the standard basis in index order.
pub fn complete_unitary(cols: &[DVector<Complex<f64>>], k: usize) -> DMatrix<Complex<f64>> {
    let mut basis: Vec<DVector<Complex<f64>>> = Vec::with_capacity(k);
    let mut feed: Vec<DVector<Complex<f64>>> = cols.to_vec();
    for j in 0..k {
        let mut e = DVector::zeros(k);
        e[j] = Complex::new(1.0, 0.0);
        feed.push(e);
    }
    for cand in feed {
        if basis.len() == k {
            break;
        }
        let mut v = cand.clone();
        for b in &basis {
            let proj = b.dotc(&v);
            v -= b * proj;
        }
        // re-orthogonalize once for numerical hygiene
        for b in &basis {
            let proj = b.dotc(&v);
            v -= b * proj;
        }
        let n = v.norm();
        if n > 1e-10 {
            basis.push(v / Complex::new(n, 0.0));
        }
    }
    assert_eq!(basis.len(), k, "completion failed to reach full dimension");
    DMatrix::from_columns(&basis)
}

/// Hermitian inverse square root `M^(-1/2)` of a positive definite matrix.
pub fn herm_inv_sqrt(m: &DMatrix<Complex<f64>>) -> Result<DMatrix<Complex<f64>>> {
    let (vals, vecs) = herm_eigen_pairs(m);
    let scale = vals.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
    if vals.iter().any(|&l| l <= tol::TAU_PSD * scale.max(1.0)) {
        return Err(Error::NotPositiveDefinite);
    }
    let d = DMatrix::from_diagonal(&DVector::from_iterator(
        vals.len(),
        vals.iter().map(|&l| Complex::new(1.0 / l.sqrt(), 0.0)),
    ));
    Ok(&vecs * d * vecs.adjoint())
}
