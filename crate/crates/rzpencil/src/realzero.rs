//! Real-rootedness of univariate restrictions, the real zero property,
//! rigidly convex membership, and the quadratic form data `(A, b)` with
//! `p(x) = x^t A x + b^t x + 1`.
//!
//! The real zero property is universally quantified over directions, and no
//! terminating decision procedure is implemented for general degree; the
//! sampled checker says so in its mode tag. Degree two is decided exactly:
//! `p` is a real zero polynomial iff `G = (1/4) b b^t - A` is positive
//! semidefinite.

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::polynomial::{Monomial, Poly, UniPoly};
use crate::sampling;
use crate::scalar::{CCoeff, Coeff, Domain};
use crate::tol;
use nalgebra::DMatrix;
use std::cmp::Ordering;

/// How a root profile was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootMethod {
    ExactSturm,
    FloatEig,
}

/// Real/complex root census of a univariate restriction, relative to an
/// ambient degree supplied by the caller (the degree of the unrestricted
/// object; restriction may drop degree, producing "zeros at infinity").
#[derive(Debug, Clone)]
pub struct RootProfile {
    /// Sorted `(value, multiplicity)`; values are float approximations, the
    /// counts are exact in Sturm mode.
    pub real_roots: Vec<(f64, usize)>,
    pub complex_pair_count: usize,
    pub degree_drop: usize,
    pub method: RootMethod,
}

impl RootProfile {
    pub fn real_count_with_multiplicity(&self) -> usize {
        self.real_roots.iter().map(|(_, m)| m).sum()
    }

    /// All finite roots are real.
    pub fn is_real_rooted(&self) -> bool {
        self.complex_pair_count == 0
    }

    /// Real roots listed with multiplicity, sorted.
    pub fn expanded(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for (v, m) in &self.real_roots {
            for _ in 0..*m {
                out.push(*v);
            }
        }
        out
    }

    /// Bookkeeping identity: reals + 2 * pairs + drop = ambient degree.
    pub fn ambient_degree(&self) -> usize {
        self.real_count_with_multiplicity() + 2 * self.complex_pair_count + self.degree_drop
    }
}

// ---------------------------------------------------------------------------
// Sturm sequences
// ---------------------------------------------------------------------------

fn sturm_chain(f: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).neg();
        if r.is_zero() {
            return chain;
        }
        chain.push(r);
    }
}

fn sign_changes(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut count = 0;
    let mut last = None;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

fn variations_at(chain: &[UniPoly], t: &Coeff) -> usize {
    sign_changes(chain.iter().map(|f| f.evaluate(t).sign()))
}

fn variations_at_infinity(chain: &[UniPoly], positive: bool) -> usize {
    sign_changes(chain.iter().map(|f| {
        let s = f.leading().sign();
        if positive || f.degree() % 2 == 0 {
            s
        } else {
            s.reverse()
        }
    }))
}

/// Number of distinct real roots of a squarefree exact polynomial in `(a, b]`.
fn sturm_count_interval(chain: &[UniPoly], a: &Coeff, b: &Coeff) -> usize {
    variations_at(chain, a) - variations_at(chain, b)
}

fn sturm_count_all(chain: &[UniPoly]) -> usize {
    variations_at_infinity(chain, false) - variations_at_infinity(chain, true)
}

/// Cauchy root bound as an integer scalar.
fn root_bound(f: &UniPoly) -> Coeff {
    let lead = f.leading().abs_bound();
    let maxc = f
        .coeffs()
        .iter()
        .map(|c| c.abs_bound())
        .fold(0.0, f64::max);
    let b = (1.0 + maxc / lead).ceil() + 1.0;
    Coeff::from_i64(b as i64 + 1)
}

/// Isolate and refine the real roots of a squarefree exact polynomial;
/// returns sorted float approximations.
fn isolate_real_roots(f: &UniPoly) -> Vec<f64> {
    if f.degree() < 1 {
        return Vec::new();
    }
    let chain = sturm_chain(f);
    let bound = root_bound(f);
    let mut work = vec![(bound.neg(), bound.clone())];
    let mut isolated: Vec<(Coeff, Coeff)> = Vec::new();
    let mut exact_hits: Vec<Coeff> = Vec::new();
    while let Some((lo, hi)) = work.pop() {
        let count = sturm_count_interval(&chain, &lo, &hi);
        match count {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = lo.add(&hi).mul(&Coeff::from_rat(1, 2));
                if f.evaluate(&mid).is_zero() {
                    exact_hits.push(mid.clone());
                    // deflate by bisecting strictly around the hit
                    let eps = hi.sub(&lo).mul(&Coeff::from_rat(1, 1 << 20));
                    work.push((lo, mid.sub(&eps)));
                    work.push((mid.add(&eps), hi));
                } else {
                    work.push((lo, mid.clone()));
                    work.push((mid, hi));
                }
            }
        }
    }
    let mut roots: Vec<f64> = exact_hits.iter().map(|c| c.to_f64()).collect();
    let fcoeffs = f.to_f64_coeffs();
    for (mut lo, mut hi) in isolated {
        let v_hi = variations_at(&chain, &hi);
        // coarse exact bisection keeps the dyadic numbers small
        let mut exact_root = None;
        for _ in 0..16 {
            let width = hi.sub(&lo).to_f64();
            if width <= 6e-5 * (1.0 + hi.to_f64().abs()) {
                break;
            }
            let mid = lo.add(&hi).mul(&Coeff::from_rat(1, 2));
            if f.evaluate(&mid).is_zero() {
                exact_root = Some(mid);
                break;
            }
            if variations_at(&chain, &mid) - v_hi == 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if let Some(r) = exact_root {
            roots.push(r.to_f64());
            continue;
        }
        // float polish inside the isolating interval
        let (mut flo, mut fhi) = (lo.to_f64(), hi.to_f64());
        let eval = |t: f64| fcoeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c);
        let slo = eval(flo);
        for _ in 0..60 {
            let mid = 0.5 * (flo + fhi);
            if !(mid > flo && mid < fhi) {
                break;
            }
            if (eval(mid) > 0.0) == (slo > 0.0) {
                flo = mid;
            } else {
                fhi = mid;
            }
        }
        roots.push(0.5 * (flo + fhi));
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

/// Real-rootedness without isolating: all roots of `u` are real iff the
/// squarefree part has as many real roots as its degree.
pub fn is_real_rooted_exact(u: &UniPoly) -> bool {
    if u.degree() < 1 {
        return true;
    }
    let g = u.gcd(&u.derivative());
    let (sf, r) = div_rem(u, &g);
    debug_assert!(r.is_zero());
    let chain = sturm_chain(&sf);
    sturm_count_all(&chain) == sf.degree() as usize
}

/// Yun squarefree decomposition: returns `(factor, multiplicity)` pairs with
/// `f = lead * prod factor_i^mult_i`, factors squarefree and pairwise coprime.
fn squarefree_decomposition(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    if f.degree() < 1 {
        return Vec::new();
    }
    let deriv = f.derivative();
    let a0 = f.gcd(&deriv);
    let (mut b, r) = div_rem(f, &a0);
    debug_assert!(r.is_zero());
    let (c0, r) = div_rem(&deriv, &a0);
    debug_assert!(r.is_zero());
    let mut d = c0.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1usize;
    while b.degree() > 0 {
        let ai = b.gcd(&d);
        if ai.degree() > 0 {
            out.push((ai.clone(), i));
        }
        let (nb, r) = div_rem(&b, &ai);
        debug_assert!(r.is_zero());
        let (nc, r2) = div_rem(&d, &ai);
        debug_assert!(r2.is_zero());
        b = nb;
        d = nc.sub(&b.derivative());
        i += 1;
    }
    out
}

pub(crate) fn div_rem(f: &UniPoly, g: &UniPoly) -> (UniPoly, UniPoly) {
    assert!(!g.is_zero());
    let mut r = f.clone();
    let qlen = (f.degree() - g.degree()).max(0) as usize + 1;
    let mut q = vec![Coeff::zero(); qlen];
    let gl = g.leading();
    while !r.is_zero() && r.degree() >= g.degree() {
        let shift = (r.degree() - g.degree()) as usize;
        let factor = r.leading().div(&gl);
        q[shift] = q[shift].add(&factor);
        let mut v = r.coeffs().to_vec();
        for (j, c) in g.coeffs().iter().enumerate() {
            v[j + shift] = v[j + shift].sub(&factor.mul(c));
        }
        v[r.coeffs().len() - 1] = Coeff::zero();
        r = UniPoly::new(v);
    }
    (UniPoly::new(q), r)
}

// ---------------------------------------------------------------------------
// Root profiles
// ---------------------------------------------------------------------------

/// Root census of `u` against an ambient degree.
///
/// Exact coefficients go through Sturm sequences with Yun multiplicities;
/// float coefficients go through companion-matrix eigenvalues, a root
/// counting as real when `|Im| <= TAU_ROOT * (1 + |root|)`.
pub fn real_roots(u: &UniPoly, ambient_degree: usize) -> Result<RootProfile> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let deg = u.degree() as usize;
    if ambient_degree < deg {
        return Err(Error::InvalidParameter(format!(
            "ambient degree {ambient_degree} below polynomial degree {deg}"
        )));
    }
    if u.domain().is_exact() {
        let mut roots: Vec<(f64, usize)> = Vec::new();
        let mut real_with_mult = 0usize;
        for (factor, mult) in squarefree_decomposition(u) {
            let chain = sturm_chain(&factor);
            real_with_mult += mult * sturm_count_all(&chain);
            for v in isolate_real_roots(&factor) {
                roots.push((v, mult));
            }
        }
        roots.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        debug_assert_eq!(roots.iter().map(|(_, m)| m).sum::<usize>(), real_with_mult);
        Ok(RootProfile {
            real_roots: roots,
            complex_pair_count: (deg - real_with_mult) / 2,
            degree_drop: ambient_degree - deg,
            method: RootMethod::ExactSturm,
        })
    } else {
        let cs = u.to_f64_coeffs();
        let all = companion_roots(&cs);
        let mut real: Vec<f64> = Vec::new();
        let mut nonreal = 0usize;
        for z in &all {
            if z.im.abs() <= tol::TAU_ROOT * (1.0 + z.norm()) {
                real.push(z.re);
            } else {
                nonreal += 1;
            }
        }
        real.sort_by(|a, b| a.partial_cmp(b).unwrap());
        // cluster near-coincident roots into multiplicities
        let mut grouped: Vec<(f64, usize)> = Vec::new();
        for v in real {
            match grouped.last_mut() {
                Some((w, m)) if (v - *w).abs() <= 1e-6 * (1.0 + v.abs()) => {
                    *w = (*w * *m as f64 + v) / (*m as f64 + 1.0);
                    *m += 1;
                }
                _ => grouped.push((v, 1)),
            }
        }
        let real_count: usize = grouped.iter().map(|(_, m)| m).sum();
        let _ = nonreal;
        Ok(RootProfile {
            real_roots: grouped,
            complex_pair_count: (deg - real_count) / 2,
            degree_drop: ambient_degree - deg,
            method: RootMethod::FloatEig,
        })
    }
}

/// All complex roots of a float polynomial by Durand-Kerner simultaneous
/// iteration (bounded sweeps, deterministic start), then Newton polish.
/// Chosen over a companion eigensolve because the latter's QR iteration can
/// stall on exactly repeated roots.
pub(crate) fn companion_roots(coeffs: &[f64]) -> Vec<nalgebra::Complex<f64>> {
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let lead = coeffs[deg];
    // monic normalization for the iteration
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let radius = 1.0
        + monic[..deg]
            .iter()
            .map(|c| c.abs())
            .fold(0.0f64, f64::max);
    let eval_monic = |z: nalgebra::Complex<f64>| {
        let mut v = nalgebra::Complex::new(1.0, 0.0);
        for &c in monic[..deg].iter().rev() {
            v = v * z + nalgebra::Complex::new(c, 0.0);
        }
        v
    };
    let mut roots: Vec<nalgebra::Complex<f64>> = (0..deg)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * j as f64 / deg as f64 + 0.4;
            nalgebra::Complex::new(angle.cos(), angle.sin()) * radius * 0.8
        })
        .collect();
    for _sweep in 0..300 {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let zi = roots[i];
            let mut denom = nalgebra::Complex::new(1.0, 0.0);
            for (j, &zj) in roots.iter().enumerate() {
                if j != i {
                    denom *= zi - zj;
                }
            }
            if denom.norm() < 1e-300 {
                continue;
            }
            let step = eval_monic(zi) / denom;
            roots[i] = zi - step;
            max_step = max_step.max(step.norm() / (1.0 + zi.norm()));
        }
        if max_step < 1e-14 {
            break;
        }
    }
    // Newton polish: the companion eigensolve is backward stable but can
    // lose a few digits on graded coefficients; simple roots recover fully.
    let eval = |z: nalgebra::Complex<f64>| {
        let mut v = nalgebra::Complex::new(0.0, 0.0);
        let mut dv = nalgebra::Complex::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            dv = dv * z + v;
            v = v * z + nalgebra::Complex::new(c, 0.0);
        }
        (v, dv)
    };
    for z in roots.iter_mut() {
        for _ in 0..4 {
            let (v, dv) = eval(*z);
            if dv.norm() < 1e-30 || v.norm() < 1e-300 {
                break;
            }
            let step = v / dv;
            if !step.re.is_finite() || !step.im.is_finite() {
                break;
            }
            if step.norm() > 0.5 * (1.0 + z.norm()) {
                break; // ill-conditioned (likely multiple) root: keep as is
            }
            *z -= step;
        }
    }
    roots
}

// ---------------------------------------------------------------------------
// Real zero verdicts
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RzMode {
    /// Decided exactly (degree-two criterion or trivial degree).
    Exact,
    /// Semidecision: all sampled directions were real-rooted.
    Sampled { seed: u64, samples: usize },
}

#[derive(Debug, Clone)]
pub struct RzVerdict {
    pub is_rz: bool,
    pub witness_direction: Option<Vec<Coeff>>,
    pub mode: RzMode,
}

#[derive(Debug, Clone, Copy)]
pub enum RzStrategy {
    /// Exact for quadratics, sampled otherwise.
    Auto,
    /// Force direction sampling with this many seeded directions.
    Sampled(usize),
}

pub const DEFAULT_RZ_SAMPLES: usize = 512;
const SIGN_PATTERN_CAP: usize = 16;

/// Real zero test. `p(0) = 1` required.
///
/// Sampling covers the coordinate axes, every sign-pattern direction (up to
/// 2^16 of them), and the seeded pseudo-random directions; exact coefficient
/// domains are tested with exact Sturm counts at rational directions, so a
/// failure witness needs no re-verification.
pub fn is_real_zero(p: &Poly, strategy: RzStrategy, seed: u64) -> Result<RzVerdict> {
    if !p.constant_term().is_one() {
        return Err(Error::NotMonicConstant);
    }
    let d = p.degree();
    if d <= 1 {
        // constants and linear polynomials restrict to degree <= 1
        return Ok(RzVerdict {
            is_rz: true,
            witness_direction: None,
            mode: RzMode::Exact,
        });
    }
    let samples = match strategy {
        RzStrategy::Auto => {
            if d == 2 && p.domain().is_exact() {
                return quadratic_rz_verdict(p);
            }
            DEFAULT_RZ_SAMPLES
        }
        RzStrategy::Sampled(n) => n,
    };
    let n = p.nvars();
    let exact = p.domain().is_exact();
    let mut dirs: Vec<Vec<Coeff>> = Vec::new();
    for axis in sampling::coordinate_axes(n) {
        dirs.push(axis.iter().map(|&x| Coeff::from_i64(x as i64)).collect());
    }
    for pat in sampling::sign_patterns(n, SIGN_PATTERN_CAP) {
        dirs.push(pat.iter().map(|&x| Coeff::from_i64(x as i64)).collect());
    }
    let mut rng = sampling::rng_from(seed, 0);
    for _ in 0..samples {
        if exact {
            dirs.push(sampling::rational_direction(&mut rng, n, 8, 6));
        } else {
            dirs.push(
                sampling::unit_direction(&mut rng, n)
                    .into_iter()
                    .map(Coeff::F64)
                    .collect(),
            );
        }
    }
    for a in dirs {
        let u = p.restrict(&a)?;
        if u.degree() < 1 {
            continue;
        }
        let rooted = if exact {
            is_real_rooted_exact(&u)
        } else {
            real_roots(&u, d as usize)?.is_real_rooted()
        };
        if !rooted {
            return Ok(RzVerdict {
                is_rz: false,
                witness_direction: Some(a),
                mode: if exact {
                    RzMode::Exact
                } else {
                    RzMode::Sampled { seed, samples }
                },
            });
        }
    }
    Ok(RzVerdict {
        is_rz: true,
        witness_direction: None,
        mode: RzMode::Sampled { seed, samples },
    })
}

fn quadratic_rz_verdict(p: &Poly) -> Result<RzVerdict> {
    let q = quadratic_form(p)?;
    match quadratic_rz_witness(&q)? {
        None => Ok(RzVerdict {
            is_rz: true,
            witness_direction: None,
            mode: RzMode::Exact,
        }),
        Some(w) => Ok(RzVerdict {
            is_rz: false,
            witness_direction: Some(w),
            mode: RzMode::Exact,
        }),
    }
}

/// Membership in the rigidly convex set: `p(t a)` has no root in `[0, 1)`.
/// A root at exactly `t = 1` keeps the point inside (half-open interval).
pub fn rigid_membership(p: &Poly, a: &[Coeff]) -> Result<bool> {
    if !p.constant_term().is_one() {
        return Err(Error::NotMonicConstant);
    }
    let u = p.restrict(a)?;
    if u.degree() < 1 {
        return Ok(true);
    }
    if u.domain().is_exact() {
        // squarefree part carries the same root set
        let g = u.gcd(&u.derivative());
        let (mut sf, r) = div_rem(&u, &g);
        debug_assert!(r.is_zero());
        // remove a root at exactly t = 1 (excluded by the half-open interval)
        let one = Coeff::one();
        if sf.evaluate(&one).is_zero() {
            let linear = UniPoly::new(vec![Coeff::from_i64(-1), Coeff::one()]);
            let (q, rr) = div_rem(&sf, &linear);
            debug_assert!(rr.is_zero());
            sf = q;
        }
        if sf.degree() < 1 {
            return Ok(true);
        }
        let chain = sturm_chain(&sf);
        Ok(sturm_count_interval(&chain, &Coeff::zero(), &one) == 0)
    } else {
        let profile = real_roots(&u, u.degree() as usize)?;
        Ok(profile
            .expanded()
            .iter()
            .all(|&v| v < -tol::TAU_ROOT || v >= 1.0 - tol::TAU_ROOT))
    }
}

// ---------------------------------------------------------------------------
// Quadratic form data
// ---------------------------------------------------------------------------

/// `(A, b)` with `p = x^t A x + b^t x + 1`, the derived `G = (1/4) b b^t - A`,
/// and (on demand) the PSD square root `C = G^(1/2)`.
#[derive(Debug, Clone)]
pub struct QuadraticData {
    pub n: usize,
    pub base: u8,
    pub domain: Domain,
    pub a_mat: Mat,
    pub b: Vec<Coeff>,
    pub g: Mat,
}

/// The square root `C = G^(1/2)`, exact when that is representable.
#[derive(Debug, Clone)]
pub enum SqrtG {
    Exact(Mat),
    Float(Mat),
}

impl SqrtG {
    pub fn mat(&self) -> &Mat {
        match self {
            SqrtG::Exact(m) | SqrtG::Float(m) => m,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, SqrtG::Exact(_))
    }
}

/// Extract the quadratic form of a degree-2 real polynomial with `p(0) = 1`;
/// off-diagonal coefficients split evenly into the symmetric `A`.
pub fn quadratic_form(p: &Poly) -> Result<QuadraticData> {
    if p.degree() != 2 {
        return Err(Error::WrongDegree {
            expected: 2,
            got: p.degree(),
        });
    }
    if !p.constant_term().is_one() {
        return Err(Error::NotMonicConstant);
    }
    let n = p.nvars();
    let half = Coeff::from_rat(1, 2);
    let mut a_mat = Mat::zeros(n, n);
    let mut b = vec![Coeff::zero(); n];
    for (mono, c) in p.terms() {
        match mono.degree() {
            0 => {}
            1 => {
                let j = mono.0.iter().position(|&e| e == 1).unwrap();
                b[j] = c.clone();
            }
            2 => {
                let nz: Vec<usize> = (0..n).filter(|&j| mono.0[j] > 0).collect();
                if nz.len() == 1 {
                    a_mat.set(nz[0], nz[0], CCoeff::real(c.clone()));
                } else {
                    let hc = c.mul(&half);
                    a_mat.set(nz[0], nz[1], CCoeff::real(hc.clone()));
                    a_mat.set(nz[1], nz[0], CCoeff::real(hc));
                }
            }
            _ => unreachable!(),
        }
    }
    let quarter = Coeff::from_rat(1, 4);
    let g = Mat::from_fn(n, n, |i, j| {
        let bb = b[i].mul(&b[j]).mul(&quarter);
        CCoeff::real(bb.sub(&a_mat.at(i, j).re))
    });
    Ok(QuadraticData {
        n,
        base: p.index_base(),
        domain: p.domain(),
        a_mat,
        b,
        g,
    })
}

impl QuadraticData {
    /// Rebuild `x^t A x + b^t x + 1`; exact round-trip by construction.
    pub fn reconstruct(&self) -> Poly {
        let mut p = Poly::one(self.n).with_base(self.base);
        for j in 0..self.n {
            p.add_term(Monomial::var(self.n, j), self.b[j].clone());
        }
        for i in 0..self.n {
            for j in 0..self.n {
                let coeff = self.a_mat.at(i, j).re.clone();
                if coeff.is_zero() {
                    continue;
                }
                let mut e = vec![0u32; self.n];
                e[i] += 1;
                e[j] += 1;
                p.add_term(Monomial(e), coeff);
            }
        }
        p
    }

    /// `G^(1/2)`. Exact when `G` is diagonal with rational perfect-square
    /// entries (the identity included); float symmetric square root
    /// otherwise, with eigenvalues in `[-TAU_PSD * scale, 0]` clamped to 0.
    pub fn sqrt_g(&self) -> Result<SqrtG> {
        if self.g.domain().is_exact() {
            if let Some(c) = exact_diag_sqrt(&self.g) {
                return Ok(SqrtG::Exact(c));
            }
        }
        let gna = self.g.to_na();
        let scale = self.g.max_abs().max(1.0);
        let (vals, vecs) = linalg::herm_eigen_pairs(&gna);
        let mut d = DMatrix::<nalgebra::Complex<f64>>::zeros(self.n, self.n);
        for (i, &l) in vals.iter().enumerate() {
            if l < -tol::TAU_PSD * scale {
                return Err(Error::NotPositiveSemidefinite);
            }
            d[(i, i)] = nalgebra::Complex::new(l.max(0.0).sqrt(), 0.0);
        }
        let c = &vecs * d * vecs.adjoint();
        Ok(SqrtG::Float(Mat::from_na(&c).real_part()))
    }

    /// Real zero criterion: `G` positive semidefinite. Exact when the domain
    /// allows, float eigenvalues otherwise.
    pub fn rz_check(&self) -> Result<bool> {
        Ok(quadratic_rz_witness(self)?.is_none())
    }
}

fn exact_diag_sqrt(g: &Mat) -> Option<Mat> {
    let n = g.rows();
    for i in 0..n {
        for j in 0..n {
            if i != j && !g.at(i, j).is_zero() {
                return None;
            }
        }
    }
    let mut c = Mat::zeros(n, n);
    for i in 0..n {
        let d = &g.at(i, i).re;
        if d.sign() == Ordering::Less {
            return None;
        }
        c.set(i, i, CCoeff::real(d.exact_sqrt()?));
    }
    Some(c)
}

/// `None` when `G` is PSD, otherwise a real direction `v` with
/// `v^t G v < 0` (equivalently, `p(t v)` has nonreal roots, since the
/// discriminant of `p_v` is `4 v^t G v`).
pub fn quadratic_rz_witness(q: &QuadraticData) -> Result<Option<Vec<Coeff>>> {
    if q.g.domain().is_exact() {
        let w = q.g.psd_witness_exact()?;
        Ok(w.map(|v| v.into_iter().map(|c| c.re).collect()))
    } else if q.g.is_psd_float() {
        Ok(None)
    } else {
        let (_vals, vecs) = linalg::herm_eigen_pairs(&q.g.to_na());
        let col = vecs.column(0);
        Ok(Some(col.iter().map(|z| Coeff::F64(z.re)).collect()))
    }
}

// ---------------------------------------------------------------------------
// Simple zeros (including at infinity)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SimpleZerosReport {
    pub all_simple: bool,
    pub failing_direction: Option<Vec<Coeff>>,
    pub seed: u64,
    pub samples: usize,
}

/// The reversed restriction: the homogenization evaluated at
/// `(x0, x) = (-t, a)`. Its roots are `-1/mu` over the roots `mu` of `p_a`,
/// with a root at `t = 0` of multiplicity equal to the degree drop (the
/// "zeros at infinity").
pub fn reversed_restriction(p: &Poly, a: &[Coeff]) -> Result<UniPoly> {
    if a.len() != p.nvars() {
        return Err(Error::DimensionMismatch {
            expected: p.nvars(),
            got: a.len(),
        });
    }
    let d = p.degree();
    if d < 0 {
        return Err(Error::ZeroPolynomial);
    }
    let d = d as usize;
    let mut coeffs = vec![Coeff::zero(); d + 1];
    for (mono, c) in p.terms() {
        let k = mono.degree() as usize;
        let mut t = c.clone();
        for (j, &e) in mono.0.iter().enumerate() {
            for _ in 0..e {
                t = t.mul(&a[j]);
            }
        }
        if (d - k) % 2 == 1 {
            t = t.neg();
        }
        coeffs[d - k] = coeffs[d - k].add(&t);
    }
    Ok(UniPoly::new(coeffs))
}

/// Sampled check that every restriction `p_a` has only simple zeros,
/// including the zeros at infinity: the reversed restriction must be
/// squarefree for each sampled direction (coordinate axes plus seeded
/// directions). Semidecision.
pub fn simple_zeros_sampled(p: &Poly, samples: usize, seed: u64) -> Result<SimpleZerosReport> {
    if !p.constant_term().is_one() {
        return Err(Error::NotMonicConstant);
    }
    let n = p.nvars();
    let exact = p.domain().is_exact();
    let mut dirs: Vec<Vec<Coeff>> = Vec::new();
    for axis in sampling::coordinate_axes(n) {
        dirs.push(axis.iter().map(|&x| Coeff::from_i64(x as i64)).collect());
    }
    let mut rng = sampling::rng_from(seed, 1);
    for _ in 0..samples {
        if exact {
            dirs.push(sampling::rational_direction(&mut rng, n, 8, 6));
        } else {
            dirs.push(
                sampling::unit_direction(&mut rng, n)
                    .into_iter()
                    .map(Coeff::F64)
                    .collect(),
            );
        }
    }
    for a in dirs {
        let u = reversed_restriction(p, &a)?;
        let simple = if u.domain().is_exact() {
            u.gcd(&u.derivative()).degree() == 0
        } else {
            let roots = companion_roots(&u.to_f64_coeffs());
            let scale = roots.iter().map(|z| z.norm()).fold(1.0, f64::max);
            let mut ok = true;
            'sep: for i in 0..roots.len() {
                for j in 0..i {
                    if (roots[i] - roots[j]).norm() < tol::TAU_SEP * scale {
                        ok = false;
                        break 'sep;
                    }
                }
            }
            ok
        };
        if !simple {
            return Ok(SimpleZerosReport {
                all_simple: false,
                failing_direction: Some(a),
                seed,
                samples,
            });
        }
    }
    Ok(SimpleZerosReport {
        all_simple: true,
        failing_direction: None,
        seed,
        samples,
    })
}
