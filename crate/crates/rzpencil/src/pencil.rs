//! Monic hermitian/symmetric linear matrix polynomials `I + x1 M1 + ... +
//! xn Mn`: evaluation, symbolic determinants, determinant identity
//! verification, spectrahedron membership, the eigenvalue/root
//! correspondence, and the hermitian-to-symmetric doubling.

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::modular::{self, GridOutcome};
use crate::polynomial::{Monomial, Poly, PolyC};
use crate::realzero::{self, RootProfile};
use crate::sampling;
use crate::scalar::{CCoeff, Coeff, Domain};
use crate::tol;
use nalgebra::{Complex, DMatrix};

/// Size cap for the exact symbolic determinant; expansion beyond this is
/// exponential, use [`Pencil::verify_identity`] instead.
pub const DET_SIZE_CAP: usize = 12;
/// Grid proofs are attempted only up to this many evaluation points.
pub const GRID_POINT_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Hermitian,
    RealSymmetric,
}

impl std::fmt::Display for Symmetry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Symmetry::Hermitian => write!(f, "hermitian"),
            Symmetry::RealSymmetric => write!(f, "symmetric"),
        }
    }
}

/// Monic pencil; the identity coefficient is structural and never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Pencil {
    nvars: usize,
    size: usize,
    symmetry: Symmetry,
    base: u8,
    mats: Vec<Mat>,
}

impl Pencil {
    pub fn new(size: usize, mats: Vec<Mat>, symmetry: Symmetry, base: u8) -> Result<Pencil> {
        for m in &mats {
            if m.rows() != size || m.cols() != size {
                return Err(Error::DimensionMismatch {
                    expected: size,
                    got: m.rows(),
                });
            }
            if !m.is_hermitian() {
                return Err(Error::NotHermitian);
            }
            if symmetry == Symmetry::RealSymmetric && !m.is_real() {
                return Err(Error::NotHermitian);
            }
        }
        Ok(Pencil {
            nvars: mats.len(),
            size,
            symmetry,
            base,
            mats,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn index_base(&self) -> u8 {
        self.base
    }

    pub fn with_base(mut self, base: u8) -> Self {
        self.base = base;
        self
    }

    pub fn mats(&self) -> &[Mat] {
        &self.mats
    }

    pub fn mat(&self, i: usize) -> &Mat {
        &self.mats[i]
    }

    pub fn domain(&self) -> Domain {
        self.mats
            .iter()
            .fold(Domain::Rational, |d, m| {
                d.join(m.domain()).unwrap_or(Domain::Float)
            })
    }

    pub fn is_exact(&self) -> bool {
        self.domain().is_exact()
    }

    /// Lift float entries to exact dyadic rationals; used to run the exact
    /// determinant on float pencils.
    pub fn to_exact_dyadic(&self) -> Pencil {
        Pencil {
            nvars: self.nvars,
            size: self.size,
            symmetry: self.symmetry,
            base: self.base,
            mats: self.mats.iter().map(Mat::to_exact_dyadic).collect(),
        }
    }

    pub fn to_float(&self) -> Pencil {
        Pencil {
            nvars: self.nvars,
            size: self.size,
            symmetry: self.symmetry,
            base: self.base,
            mats: self.mats.iter().map(Mat::to_float).collect(),
        }
    }

    /// `I + sum a_i M_i`, exact in exact domains.
    pub fn evaluate(&self, a: &[Coeff]) -> Result<Mat> {
        if a.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: a.len(),
            });
        }
        let mut acc = Mat::identity(self.size);
        for (ai, m) in a.iter().zip(&self.mats) {
            if ai.is_zero() {
                continue;
            }
            acc = acc.add(&m.scale_real(ai));
        }
        Ok(acc)
    }

    /// `sum a_i M_i` without the identity.
    pub fn combination(&self, a: &[Coeff]) -> Result<Mat> {
        if a.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: a.len(),
            });
        }
        let mut acc = Mat::zeros(self.size, self.size);
        for (ai, m) in a.iter().zip(&self.mats) {
            if ai.is_zero() {
                continue;
            }
            acc = acc.add(&m.scale_real(ai));
        }
        Ok(acc)
    }

    pub fn evaluate_na(&self, a: &[f64]) -> DMatrix<Complex<f64>> {
        let mut acc = DMatrix::<Complex<f64>>::identity(self.size, self.size);
        for (&ai, m) in a.iter().zip(&self.mats) {
            acc += m.to_na() * Complex::new(ai, 0.0);
        }
        acc
    }

    pub fn combination_na(&self, a: &[f64]) -> DMatrix<Complex<f64>> {
        let mut acc = DMatrix::<Complex<f64>>::zeros(self.size, self.size);
        for (&ai, m) in a.iter().zip(&self.mats) {
            acc += m.to_na() * Complex::new(ai, 0.0);
        }
        acc
    }

    /// Exact multivariate determinant by fraction-free (Bareiss) elimination
    /// over the polynomial ring with complex coefficients. The pivots are the
    /// leading principal minors, which have constant term 1 for a monic
    /// pencil, so no pivoting is ever needed. The imaginary part must cancel
    /// and the constant term must be 1; both are checked.
    pub fn det_poly(&self) -> Result<Poly> {
        if self.size > DET_SIZE_CAP {
            return Err(Error::SizeCap {
                size: self.size,
                cap: DET_SIZE_CAP,
            });
        }
        let k = self.size;
        let n = self.nvars;
        let float_mode = !self.is_exact();
        let mut m: Vec<PolyC> = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let mut e = PolyC::zero(n);
                if i == j {
                    e.add_term(Monomial::constant(n), CCoeff::one());
                }
                for (v, mat) in self.mats.iter().enumerate() {
                    let entry = mat.at(i, j);
                    if !entry.is_zero() {
                        e.add_term(Monomial::var(n, v), entry.clone());
                    }
                }
                m.push(e);
            }
        }
        let idx = |i: usize, j: usize| i * k + j;
        let mut prev = PolyC::one(n);
        for j in 0..k.saturating_sub(1) {
            let pivot = m[idx(j, j)].clone();
            assert!(!pivot.is_zero(), "monic pencil pivot vanished");
            for i in j + 1..k {
                for l in j + 1..k {
                    let num = m[idx(i, l)]
                        .mul(&pivot)
                        .sub(&m[idx(i, j)].mul(&m[idx(j, l)]));
                    let mut q = num.div_exact(&prev, float_mode);
                    if float_mode {
                        q.prune_float_noise(1e-12);
                    }
                    m[idx(i, l)] = q;
                }
            }
            prev = pivot;
        }
        let det = m[idx(k - 1, k - 1)].clone();
        let hint = if float_mode {
            Domain::Float
        } else {
            self.domain()
        };
        let (re, im) = det.real_imag(hint, self.base);
        if float_mode {
            let scale = re.max_coeff_abs().max(1.0);
            if im.max_coeff_abs() > 1e-8 * scale {
                return Err(Error::ImaginaryResidue {
                    residue: im.max_coeff_abs(),
                });
            }
        } else if !im.is_zero() {
            return Err(Error::ImaginaryResidue {
                residue: im.max_coeff_abs(),
            });
        }
        if !float_mode && !re.constant_term().is_one() {
            return Err(Error::NotMonicConstant);
        }
        Ok(re)
    }

    /// Check `det(self) = target^r` without expanding the determinant.
    ///
    /// Exact inputs are compared exactly at `trials` seeded rational points;
    /// when the interpolation grid is affordable the verdict is upgraded to
    /// `Proved` by certifying every grid point (see [`crate::modular`]).
    /// Float inputs are compared at `trials` points within `TAU_ID`.
    pub fn verify_identity(
        &self,
        target: &Poly,
        r: u32,
        trials: usize,
        seed: u64,
    ) -> Result<VerifyOutcome> {
        if target.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: target.nvars(),
            });
        }
        if r < 1 {
            return Err(Error::InvalidParameter("power must be >= 1".into()));
        }
        if !target.constant_term().is_one() && target.domain().is_exact() {
            return Err(Error::NotMonicConstant);
        }
        let exact = self.is_exact() && target.domain().is_exact();
        let mut rng = sampling::rng_from(seed, 2);
        if exact {
            for _ in 0..trials {
                let a = sampling::rational_direction(&mut rng, self.nvars, 8, 6);
                let lhs = self.evaluate(&a)?.det_exact()?;
                let rhs = target.evaluate(&a)?;
                let mut rhs_pow = Coeff::one();
                for _ in 0..r {
                    rhs_pow = rhs_pow.mul(&rhs);
                }
                if !lhs.im.is_zero() || lhs.re != rhs_pow {
                    return Ok(VerifyOutcome::failed(a, &lhs, &rhs_pow, trials, seed));
                }
            }
            // grid proof when affordable
            let mut gmax = self.size as u64;
            for v in 0..self.nvars {
                gmax = gmax.max(r as u64 * target.degree_in_var(v) as u64);
            }
            let points = (gmax + 1).checked_pow(self.nvars as u32);
            if let Some(points) = points {
                if points <= GRID_POINT_CAP {
                    match modular::verify_identity_on_grid(&self.mats, target, r)? {
                        GridOutcome::Verified { points, primes } => {
                            return Ok(VerifyOutcome {
                                verdict: Verdict::Proved,
                                trials,
                                seed,
                                grid_points: Some(points),
                                primes,
                                max_rel_err: 0.0,
                                witness: None,
                            });
                        }
                        GridOutcome::Mismatch { point } => {
                            let a: Vec<Coeff> =
                                point.iter().map(|&v| Coeff::from_i64(v)).collect();
                            let lhs = self.evaluate(&a)?.det_exact()?;
                            let rhs = target.evaluate(&a)?;
                            let mut rhs_pow = Coeff::one();
                            for _ in 0..r {
                                rhs_pow = rhs_pow.mul(&rhs);
                            }
                            debug_assert!(!lhs.im.is_zero() || lhs.re != rhs_pow);
                            return Ok(VerifyOutcome::failed(a, &lhs, &rhs_pow, trials, seed));
                        }
                    }
                }
            }
            Ok(VerifyOutcome {
                verdict: Verdict::SampledPass,
                trials,
                seed,
                grid_points: None,
                primes: vec![],
                max_rel_err: 0.0,
                witness: None,
            })
        } else {
            let mut max_rel = 0.0f64;
            for _ in 0..trials {
                let a = sampling::unit_direction(&mut rng, self.nvars);
                let w = self.evaluate_na(&a);
                let lhs = w.determinant();
                let rhs = target.evaluate_f64(&a).powi(r as i32);
                let err = (lhs.re - rhs).hypot(lhs.im) / rhs.abs().max(1.0);
                max_rel = max_rel.max(err);
                if err > tol::TAU_ID {
                    let ac: Vec<Coeff> = a.iter().map(|&x| Coeff::F64(x)).collect();
                    return Ok(VerifyOutcome::failed(
                        ac,
                        &CCoeff::from_f64(lhs.re, lhs.im),
                        &Coeff::F64(rhs),
                        trials,
                        seed,
                    ));
                }
            }
            Ok(VerifyOutcome {
                verdict: Verdict::SampledPass,
                trials,
                seed,
                grid_points: None,
                primes: vec![],
                max_rel_err: max_rel,
                witness: None,
            })
        }
    }

    /// Spectrahedron membership: is `I + sum a_i M_i` positive semidefinite?
    pub fn membership(&self, a: &[Coeff]) -> Result<bool> {
        let exact = self.is_exact() && a.iter().all(|c| c.is_exact());
        if exact {
            self.evaluate(a)?.is_psd_exact()
        } else {
            let af: Vec<f64> = a.iter().map(|c| c.to_f64()).collect();
            let m = self.evaluate_na(&af);
            let evals = linalg::herm_eigenvalues(&m);
            let scale = m.iter().map(|z| z.norm()).fold(1.0, f64::max);
            Ok(evals.iter().all(|&l| l >= -tol::TAU_PSD * scale))
        }
    }

    /// Eigenvalue/root correspondence at a point: the nonzero eigenvalues of
    /// `sum a_i M_i`, mapped through `lambda -> -1/lambda`, must match the
    /// roots of the restricted determinant, and the zero-eigenvalue count
    /// must equal the degree drop against the pencil size.
    pub fn eigen_root_check(&self, a: &[f64], target: Option<&Poly>) -> Result<EigenRootReport> {
        let p = match target {
            Some(t) => t.clone(),
            None if self.is_exact() => self.det_poly()?,
            // float entries are dyadic rationals: the exact determinant of
            // the lift avoids fraction-free elimination noise in the oracle
            None => self.to_exact_dyadic().det_poly()?,
        };
        let w = self.combination_na(a);
        let eigs = linalg::herm_eigenvalues(&w);
        let scale = eigs.iter().fold(1.0f64, |m, &l| m.max(l.abs()));
        let zero_tol = tol::TAU_CORR * scale;
        let mut mapped: Vec<f64> = eigs
            .iter()
            .filter(|&&l| l.abs() > zero_tol)
            .map(|&l| -1.0 / l)
            .collect();
        mapped.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let zero_count = eigs.len() - mapped.len();

        let u = p.restrict_f64(a)?;
        let profile: RootProfile = realzero::real_roots(&u, self.size)?;
        let roots = profile.expanded();
        let mut pass = mapped.len() == roots.len() && zero_count == profile.degree_drop;
        let mut max_mismatch = 0.0f64;
        if mapped.len() == roots.len() {
            for (m, r) in mapped.iter().zip(&roots) {
                let err = (m - r).abs() / (1.0 + m.abs().max(r.abs()));
                max_mismatch = max_mismatch.max(err);
            }
            pass &= max_mismatch <= tol::TAU_CORR;
        } else {
            max_mismatch = f64::INFINITY;
            pass = false;
        }
        Ok(EigenRootReport {
            eigenvalues: eigs,
            mapped_eigs: mapped,
            roots,
            zero_eigenvalue_count: zero_count,
            degree_drop: profile.degree_drop,
            max_mismatch,
            pass,
        })
    }

    /// Real-symmetric doubling `M = R + iS -> [[R, S], [-S, R]]`, size `2k`,
    /// with squared determinant and doubled spectral multiplicities.
    pub fn double_to_symmetric(&self) -> Pencil {
        let k = self.size;
        let mats: Vec<Mat> = self
            .mats
            .iter()
            .map(|m| {
                let r = m.real_part();
                let s = m.imag_part();
                Mat::from_fn(2 * k, 2 * k, |i, j| {
                    let (bi, bj) = (i / k, j / k);
                    let (ii, jj) = (i % k, j % k);
                    match (bi, bj) {
                        (0, 0) | (1, 1) => r.at(ii, jj).clone(),
                        (0, 1) => s.at(ii, jj).clone(),
                        (1, 0) => s.at(ii, jj).neg(),
                        _ => unreachable!(),
                    }
                })
            })
            .collect();
        Pencil {
            nvars: self.nvars,
            size: 2 * k,
            symmetry: Symmetry::RealSymmetric,
            base: self.base,
            mats,
        }
    }
}

/// Normalize a pencil with a positive definite constant matrix to monic form
/// by the congruence with `M0^(-1/2)`. Exact when `M0` is diagonal with
/// rational perfect-square entries; float otherwise.
pub fn make_monic(m0: &Mat, mats: &[Mat], symmetry: Symmetry, base: u8) -> Result<Pencil> {
    let k = m0.rows();
    if !m0.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    if m0.domain().is_exact() {
        if !m0.is_pd_exact()? {
            return Err(Error::NotPositiveDefinite);
        }
        if m0 == &Mat::identity(k) {
            return Pencil::new(k, mats.to_vec(), symmetry, base);
        }
        if let Some(s) = exact_diag_inv_sqrt(m0) {
            let normalized: Vec<Mat> = mats.iter().map(|m| s.matmul(m).matmul(&s)).collect();
            return Pencil::new(k, normalized, symmetry, base);
        }
    } else {
        let evals = linalg::herm_eigenvalues(&m0.to_na());
        let scale = m0.max_abs().max(1.0);
        if evals.iter().any(|&l| l <= tol::TAU_PSD * scale) {
            return Err(Error::NotPositiveDefinite);
        }
    }
    // float congruence
    let s = linalg::herm_inv_sqrt(&m0.to_na())?;
    let normalized: Vec<Mat> = mats
        .iter()
        .map(|m| {
            let t = &s * m.to_na() * &s;
            // symmetrize away roundoff
            let h = (&t + t.adjoint()) * Complex::new(0.5, 0.0);
            Mat::from_na(&h)
        })
        .collect();
    Pencil::new(k, normalized, symmetry, base)
}

fn exact_diag_inv_sqrt(m0: &Mat) -> Option<Mat> {
    let k = m0.rows();
    for i in 0..k {
        for j in 0..k {
            if i != j && !m0.at(i, j).is_zero() {
                return None;
            }
        }
    }
    let mut s = Mat::zeros(k, k);
    for i in 0..k {
        let root = m0.at(i, i).re.exact_sqrt()?;
        if root.is_zero() {
            return None;
        }
        s.set(i, i, CCoeff::real(root.inv()));
    }
    Some(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Deterministically certified on a full interpolation grid.
    Proved,
    /// Agreed at every sampled point; seed recorded.
    SampledPass,
    /// A point where the two sides differ.
    Failed,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Proved => write!(f, "proved"),
            Verdict::SampledPass => write!(f, "sampled"),
            Verdict::Failed => write!(f, "failed"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub verdict: Verdict,
    pub trials: usize,
    pub seed: u64,
    pub grid_points: Option<u64>,
    pub primes: Vec<u64>,
    pub max_rel_err: f64,
    pub witness: Option<VerifyWitness>,
}

#[derive(Debug, Clone)]
pub struct VerifyWitness {
    pub point: Vec<Coeff>,
    pub lhs: String,
    pub rhs: String,
}

impl VerifyOutcome {
    fn failed(point: Vec<Coeff>, lhs: &CCoeff, rhs: &Coeff, trials: usize, seed: u64) -> Self {
        VerifyOutcome {
            verdict: Verdict::Failed,
            trials,
            seed,
            grid_points: None,
            primes: vec![],
            max_rel_err: f64::NAN,
            witness: Some(VerifyWitness {
                point,
                lhs: format!("{}+{} i", lhs.re, lhs.im),
                rhs: rhs.to_string(),
            }),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Failed
    }
}

#[derive(Debug, Clone)]
pub struct EigenRootReport {
    pub eigenvalues: Vec<f64>,
    pub mapped_eigs: Vec<f64>,
    pub roots: Vec<f64>,
    pub zero_eigenvalue_count: usize,
    pub degree_drop: usize,
    pub max_mismatch: f64,
    pub pass: bool,
}

/// The arrowhead representation of `1 - x1^2 - ... - xn^2` of size `n + 1`:
/// the first row and column carry the variables.
pub fn arrowhead_pencil(n: usize) -> Pencil {
    let k = n + 1;
    let mats: Vec<Mat> = (0..n)
        .map(|v| {
            Mat::from_fn(k, k, |i, j| {
                if (i == 0 && j == v + 1) || (j == 0 && i == v + 1) {
                    CCoeff::one()
                } else {
                    CCoeff::zero()
                }
            })
        })
        .collect();
    Pencil::new(k, mats, Symmetry::RealSymmetric, 1).expect("arrowhead is symmetric")
}

/// The two size-2 hermitian representations of `1 - x1^2 - x2^2 - x3^2`
/// (Pauli-style matrices and their negatives).
pub fn ball3_representations() -> (Pencil, Pencil) {
    let m1 = Mat::from_int_grid(2, &[(0, 0), (1, 0), (1, 0), (0, 0)]);
    let m2 = Mat::from_int_grid(2, &[(0, 0), (0, 1), (0, -1), (0, 0)]);
    let m3 = Mat::from_int_grid(2, &[(1, 0), (0, 0), (0, 0), (-1, 0)]);
    let rep1 = Pencil::new(
        2,
        vec![m1.clone(), m2.clone(), m3.clone()],
        Symmetry::Hermitian,
        1,
    )
    .unwrap();
    let rep2 = Pencil::new(
        2,
        vec![m1.neg(), m2.neg(), m3.neg()],
        Symmetry::Hermitian,
        1,
    )
    .unwrap();
    (rep1, rep2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse;

    fn c(n: i64) -> Coeff {
        Coeff::from_i64(n)
    }

    fn ball3_reps() -> (Pencil, Pencil) {
        ball3_representations()
    }

    #[test]
    fn evaluate_matches_displays() {
        let (rep1, _) = ball3_reps();
        // at (0,0,1): diag(2, 0)
        let m = rep1.evaluate(&[c(0), c(0), c(1)]).unwrap();
        assert_eq!(m.at(0, 0), &CCoeff::from_i64(2, 0));
        assert_eq!(m.at(1, 1), &CCoeff::zero());
        assert!(m.at(0, 1).is_zero());
        // at (1,0,0): [[1,1],[1,1]]
        let m = rep1.evaluate(&[c(1), c(0), c(0)]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.at(i, j), &CCoeff::one());
            }
        }
        // at 0: identity
        let m = rep1.evaluate(&[c(0), c(0), c(0)]).unwrap();
        assert_eq!(m, Mat::identity(2));
    }

    #[test]
    fn det_poly_of_ball_reps() {
        let p3 = parse("1 - x1^2 - x2^2 - x3^2", 3).unwrap();
        let (rep1, rep2) = ball3_reps();
        assert_eq!(rep1.det_poly().unwrap(), p3);
        assert_eq!(rep2.det_poly().unwrap(), p3);
    }

    #[test]
    fn det_poly_arrowhead() {
        for n in 1..=6usize {
            let pencil = arrowhead_pencil(n);
            let det = pencil.det_poly().unwrap();
            let mut expect = Poly::one(n);
            for j in 0..n {
                let mut e = vec![0u32; n];
                e[j] = 2;
                expect.add_term(Monomial(e), c(-1));
            }
            assert_eq!(det, expect, "arrowhead n={n}");
        }
    }

    #[test]
    fn det_poly_zero_mats() {
        let pencil = Pencil::new(
            3,
            vec![Mat::zeros(3, 3), Mat::zeros(3, 3)],
            Symmetry::Hermitian,
            1,
        )
        .unwrap();
        assert_eq!(pencil.det_poly().unwrap(), Poly::one(2));
    }

    #[test]
    fn verify_identity_proved_and_failed() {
        let p2 = parse("1 - x1^2", 1).unwrap();
        let m = Mat::from_int_grid(2, &[(0, 0), (1, 0), (1, 0), (0, 0)]);
        let pencil = Pencil::new(2, vec![m], Symmetry::RealSymmetric, 1).unwrap();
        let out = pencil.verify_identity(&p2, 1, 16, 5).unwrap();
        assert_eq!(out.verdict, Verdict::Proved);
        assert!(out.grid_points.is_some());

        // arrowhead vs p_n^2 must fail (degree mismatch)
        let arrow = arrowhead_pencil(2);
        let pn = parse("1 - x1^2 - x2^2", 2).unwrap();
        let out = arrow.verify_identity(&pn, 2, 16, 5).unwrap();
        assert_eq!(out.verdict, Verdict::Failed);
        assert!(out.witness.is_some());
    }

    #[test]
    fn membership_examples() {
        let (rep1, _) = ball3_reps();
        assert!(rep1.membership(&[c(0), c(0), c(0)]).unwrap());
        assert!(rep1.membership(&[c(0), c(0), c(1)]).unwrap());
        assert!(!rep1.membership(&[c(0), c(0), c(2)]).unwrap());
    }

    #[test]
    fn eigen_root_on_arrowhead() {
        let arrow = arrowhead_pencil(2);
        let rep = arrow.eigen_root_check(&[1.0, 0.0], None).unwrap();
        // eigenvalues of M(1,0) are {1, -1, 0}: one zero, roots {-1, 1}
        assert_eq!(rep.zero_eigenvalue_count, 1);
        assert_eq!(rep.degree_drop, 1);
        assert_eq!(rep.roots.len(), 2);
        assert!(rep.pass, "mismatch {}", rep.max_mismatch);

        // a = 0: both sides empty
        let rep = arrow.eigen_root_check(&[0.0, 0.0], None).unwrap();
        assert!(rep.mapped_eigs.is_empty() && rep.roots.is_empty());
        assert!(rep.pass);
    }

    #[test]
    fn eigen_root_on_power_representation() {
        // the 4x4 representation of p_5^2: at any direction the eigenvalues
        // are +-|a| with double multiplicity, so the mapped multiset is
        // {-1/|a|, -1/|a|, 1/|a|, 1/|a|} and matches the squared restriction
        let q = crate::realzero::quadratic_form(
            &parse("1 - x1^2 - x2^2 - x3^2 - x4^2 - x5^2", 5).unwrap(),
        )
        .unwrap();
        let bw = crate::clifford::quadratic_pencil(&q, crate::clifford::Variant::Standard)
            .unwrap();
        let det = bw.det_poly().unwrap();
        let mut rng = crate::sampling::rng_from(31, 0);
        for _ in 0..5 {
            let a = crate::sampling::unit_direction(&mut rng, 5);
            let rep = bw.eigen_root_check(&a, Some(&det)).unwrap();
            assert!(rep.pass, "mismatch {}", rep.max_mismatch);
            assert_eq!(rep.roots.len(), 4);
            let norm: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((rep.roots[0] + 1.0 / norm).abs() < 1e-8);
            assert!((rep.roots[1] + 1.0 / norm).abs() < 1e-8);
            assert!((rep.roots[2] - 1.0 / norm).abs() < 1e-8);
            assert!((rep.roots[3] - 1.0 / norm).abs() < 1e-8);
        }
    }

    #[test]
    fn doubling_squares_determinant() {
        let (rep1, _) = ball3_reps();
        let doubled = rep1.double_to_symmetric();
        assert_eq!(doubled.size(), 4);
        assert_eq!(doubled.symmetry(), Symmetry::RealSymmetric);
        let p3 = parse("1 - x1^2 - x2^2 - x3^2", 3).unwrap();
        assert_eq!(doubled.det_poly().unwrap(), p3.pow(2).unwrap());
        // the 2x2 representation of the shifted 3-ball doubles into a 4x4
        // symmetric representation of its square
        let e33 = match crate::interface::example("ex33").unwrap() {
            crate::interface::ExampleObject::Pencil(p) => p,
            _ => unreachable!(),
        };
        let doubled = e33.double_to_symmetric();
        assert_eq!(doubled.symmetry(), Symmetry::RealSymmetric);
        let pt3 = parse("1 - x1^2 - x2^2 - x3^2", 3)
            .unwrap()
            .shifted_homogenize()
            .unwrap();
        assert_eq!(doubled.det_poly().unwrap(), pt3.pow(2).unwrap());

        // real input doubles into a block diagonal
        let arrow = arrowhead_pencil(2);
        let d = arrow.double_to_symmetric();
        assert!(d.mat(0).at(0, 4).is_zero());
        assert_eq!(
            d.det_poly().unwrap(),
            arrow.det_poly().unwrap().pow(2).unwrap()
        );
    }

    #[test]
    fn make_monic_paths() {
        // identity: unchanged
        let m1 = Mat::from_int_grid(2, &[(0, 0), (2, 0), (2, 0), (0, 0)]);
        let p = make_monic(&Mat::identity(2), &[m1.clone()], Symmetry::RealSymmetric, 1).unwrap();
        assert_eq!(p.mat(0), &m1);

        // scalar case: M0 = 4, M1 = 1 -> 1/4
        let m0 = Mat::from_int_grid(1, &[(4, 0)]);
        let ms = Mat::from_int_grid(1, &[(1, 0)]);
        let p = make_monic(&m0, &[ms], Symmetry::RealSymmetric, 1).unwrap();
        assert_eq!(p.mat(0).at(0, 0), &CCoeff::real(Coeff::from_rat(1, 4)));

        // diag(1,4) with off-diagonal 2s normalizes to off-diagonal 1s
        let m0 = Mat::from_int_grid(2, &[(1, 0), (0, 0), (0, 0), (4, 0)]);
        let m1 = Mat::from_int_grid(2, &[(0, 0), (2, 0), (2, 0), (0, 0)]);
        let p = make_monic(&m0, &[m1], Symmetry::RealSymmetric, 1).unwrap();
        assert_eq!(p.mat(0), &Mat::from_int_grid(2, &[(0, 0), (1, 0), (1, 0), (0, 0)]));
        // determinant invariance: det(M0 + x M1)/det(M0) = det(I + x M1')
        let det = p.det_poly().unwrap();
        assert_eq!(det, parse("1 - x1^2", 1).unwrap());

        // non-PD rejected
        let bad = Mat::from_int_grid(2, &[(1, 0), (0, 0), (0, 0), (-1, 0)]);
        assert!(matches!(
            make_monic(&bad, &[], Symmetry::RealSymmetric, 1),
            Err(Error::NotPositiveDefinite)
        ));
    }

    #[test]
    fn hermitian_validation() {
        let bad = Mat::from_int_grid(2, &[(0, 0), (1, 0), (2, 0), (0, 0)]);
        assert!(matches!(
            Pencil::new(2, vec![bad], Symmetry::Hermitian, 1),
            Err(Error::NotHermitian)
        ));
    }

    #[test]
    fn det_const_term_and_degree_bound() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for _ in 0..10 {
            let k = rng.random_range(2..4usize);
            let n = rng.random_range(1..3usize);
            let mats: Vec<Mat> = (0..n)
                .map(|_| {
                    let mut m = Mat::zeros(k, k);
                    for i in 0..k {
                        for j in i..k {
                            let re = rng.random_range(-2..3);
                            let im = if i == j { 0 } else { rng.random_range(-2..3) };
                            m.set(i, j, CCoeff::from_i64(re, im));
                            m.set(j, i, CCoeff::from_i64(re, -im));
                        }
                    }
                    m
                })
                .collect();
            let pencil = Pencil::new(k, mats, Symmetry::Hermitian, 1).unwrap();
            let det = pencil.det_poly().unwrap();
            assert!(det.constant_term().is_one());
            assert!(det.degree() <= k as i64);
        }
    }
}
