//! Brauer–Weyl generator construction, determinantal representations of
//! powers of quadratic real zero polynomials, defining-relation checks, and
//! unitary equivalence testing for pencils.
//!
//! For a quadratic `p = x^t A x + b^t x + 1` with `G = (1/4) b b^t - A` PSD
//! and `C = G^(1/2)`, the matrices `M_j = sum_i C_ij S_i + (1/2) b_j I` over
//! anticommuting hermitian involutions `S_i` give a monic hermitian pencil of
//! size `2^floor(n/2)` whose determinant is `p^(2^(floor(n/2)-1))`.

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::pencil::{Pencil, Symmetry};
use crate::polynomial::Poly;
use crate::realzero::{self, QuadraticData};
use crate::sampling;
use crate::scalar::{CCoeff, Coeff};
use crate::tol;
use nalgebra::{Complex, DMatrix};
use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Standard,
    /// All generators negated; for an odd number of generators this is the
    /// second, inequivalent representation (for even counts it is unitarily
    /// equivalent to the standard one).
    Negated,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::Standard => write!(f, "standard"),
            Variant::Negated => write!(f, "negated"),
        }
    }
}

/// Hermitian anticommuting involutions of size `2^floor(n/2)` with entries
/// in `{0, +-1, +-i}`.
#[derive(Debug, Clone)]
pub struct CliffordGenerators {
    pub n: usize,
    pub size: usize,
    pub variant: Variant,
    pub gens: Vec<Mat>,
}

fn block_one() -> Mat {
    Mat::from_int_grid(2, &[(1, 0), (0, 0), (0, 0), (1, 0)])
}

fn block_one_signed() -> Mat {
    Mat::from_int_grid(2, &[(1, 0), (0, 0), (0, 0), (-1, 0)])
}

fn block_p() -> Mat {
    Mat::from_int_grid(2, &[(0, 0), (1, 0), (1, 0), (0, 0)])
}

fn block_q() -> Mat {
    Mat::from_int_grid(2, &[(0, 0), (0, 1), (0, -1), (0, 0)])
}

fn kron_chain(factors: &[Mat]) -> Mat {
    let mut acc = Mat::identity(1);
    for f in factors {
        acc = acc.kron(f);
    }
    acc
}

/// The Kronecker-product generators: for `n = 2m` the `P`-type matrices
/// `1 x ... x 1 x P x 1' x ... x 1'` (`P` running through the `m` slots,
/// signed identities trailing) followed by the `Q`-type matrices; for odd
/// `n` the extra generator `1' x ... x 1'`. The generator relations (square
/// to the identity, pairwise anticommute, hermitian) are asserted exactly on
/// construction.
pub fn brauer_weyl(n: usize, variant: Variant) -> Result<CliffordGenerators> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "at least one generator is required".into(),
        ));
    }
    let m = n / 2;
    let size = 1usize << m;
    let mut gens: Vec<Mat> = Vec::with_capacity(n);
    for block in [block_p(), block_q()] {
        for j in 1..=m {
            let mut factors = Vec::with_capacity(m);
            for _ in 0..(m - j) {
                factors.push(block_one());
            }
            factors.push(block.clone());
            for _ in 0..(j - 1) {
                factors.push(block_one_signed());
            }
            gens.push(kron_chain(&factors));
        }
    }
    if n % 2 == 1 {
        let factors: Vec<Mat> = (0..m).map(|_| block_one_signed()).collect();
        gens.push(kron_chain(&factors));
    }
    if variant == Variant::Negated {
        gens = gens.iter().map(Mat::neg).collect();
    }
    let out = CliffordGenerators {
        n,
        size,
        variant,
        gens,
    };
    out.assert_relations()?;
    Ok(out)
}

impl CliffordGenerators {
    fn assert_relations(&self) -> Result<()> {
        let id = Mat::identity(self.size);
        for (i, a) in self.gens.iter().enumerate() {
            if !a.is_hermitian_exact() {
                return Err(Error::NotHermitian);
            }
            if a.matmul(a) != id {
                return Err(Error::Unsupported(format!(
                    "generator {i} does not square to the identity"
                )));
            }
            for b in self.gens.iter().take(i) {
                let anti = a.matmul(b).add(&b.matmul(a));
                if !anti.is_zero() {
                    return Err(Error::Unsupported(format!(
                        "generator {i} fails to anticommute"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Determinantal representation of `p^(2^(floor(n/2)-1))` for a quadratic
/// real zero polynomial given by its form data. Exact when `C = G^(1/2)` is
/// exactly representable.
///
/// Generators are assigned to the nonzero rows of `C` in ascending index
/// order, so degenerate directions (zero rows of `C`) consume no generator.
pub fn quadratic_pencil(q: &QuadraticData, variant: Variant) -> Result<Pencil> {
    if q.n < 2 {
        return Err(Error::Unsupported(
            "the power construction needs at least two variables".into(),
        ));
    }
    if !q.rz_check()? {
        return Err(Error::NotRealZero);
    }
    let c = q.sqrt_g()?;
    let cm = c.mat();
    let gens = brauer_weyl(q.n, variant)?;
    let k = gens.size;
    let exact = c.is_exact() && q.b.iter().all(|x| x.is_exact());
    // generator assignment: nonzero rows of C in ascending order
    let mut assign: Vec<Option<usize>> = vec![None; q.n];
    let mut next = 0usize;
    let scale = cm.max_abs().max(1.0);
    for i in 0..q.n {
        let row_nonzero = if exact {
            (0..q.n).any(|j| !cm.at(i, j).is_zero())
        } else {
            (0..q.n).any(|j| cm.at(i, j).abs_f64() > 1e-12 * scale)
        };
        if row_nonzero {
            assign[i] = Some(next);
            next += 1;
        }
    }
    let half = Coeff::from_rat(1, 2);
    let mats: Vec<Mat> = (0..q.n)
        .map(|j| {
            let mut m = Mat::zeros(k, k);
            for i in 0..q.n {
                let Some(gi) = assign[i] else { continue };
                let cij = &cm.at(i, j).re;
                if cij.is_zero() {
                    continue;
                }
                m = m.add(&gens.gens[gi].scale_real(cij));
            }
            let shift = q.b[j].mul(&half);
            if !shift.is_zero() {
                m = m.add(&Mat::identity(k).scale_real(&shift));
            }
            m
        })
        .collect();
    Pencil::new(k, mats, Symmetry::Hermitian, q.base)
}

/// The representation power: `det = p^r` with `r = 2^(floor(n/2) - 1)`.
pub fn representation_power(n: usize) -> u32 {
    1u32 << (n / 2 - 1)
}

// ---------------------------------------------------------------------------
// Defining-relation check
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct RelationsReport {
    pub pass: bool,
    pub directions: usize,
    pub max_residual: f64,
    pub failing_direction: Option<Vec<Coeff>>,
    pub exact: bool,
}

/// Check that the pencil matrices satisfy the defining relations of the
/// generalized Clifford algebra of `p` at sampled directions: with
/// `W = sum a_i M_i` and `u(t)` the degree-`d` reversed restriction of `p`
/// along `a`, the matrix `u(W)` must vanish (Horner evaluation; exact in
/// exact domains, within `TAU_REL * |W|^d` in float).
pub fn relations_check(
    p: &Pencil,
    target: &Poly,
    trials: usize,
    seed: u64,
) -> Result<RelationsReport> {
    if target.nvars() != p.nvars() {
        return Err(Error::DimensionMismatch {
            expected: p.nvars(),
            got: target.nvars(),
        });
    }
    let d = target.degree();
    if d < 1 {
        return Err(Error::ZeroPolynomial);
    }
    if !target.constant_term().is_one() {
        return Err(Error::NotMonicConstant);
    }
    let n = p.nvars();
    let exact = p.is_exact() && target.domain().is_exact();
    let mut dirs: Vec<Vec<Coeff>> = Vec::new();
    for axis in sampling::coordinate_axes(n) {
        dirs.push(axis.iter().map(|&x| Coeff::from_i64(x as i64)).collect());
    }
    let mut rng = sampling::rng_from(seed, 6);
    for _ in 0..trials {
        if exact {
            dirs.push(sampling::rational_direction(&mut rng, n, 6, 4));
        } else {
            dirs.push(
                sampling::unit_direction(&mut rng, n)
                    .into_iter()
                    .map(Coeff::F64)
                    .collect(),
            );
        }
    }
    let count = dirs.len();
    let mut max_residual = 0.0f64;
    for a in dirs {
        let u = realzero::reversed_restriction(target, &a)?;
        if exact {
            let w = p.combination(&a)?;
            // Horner in the matrix argument
            let k = p.size();
            let mut acc = Mat::zeros(k, k);
            for c in u.coeffs().iter().rev() {
                acc = acc.matmul(&w);
                if !c.is_zero() {
                    acc = acc.add(&Mat::identity(k).scale_real(c));
                }
            }
            if !acc.is_zero() {
                return Ok(RelationsReport {
                    pass: false,
                    directions: count,
                    max_residual: acc.max_abs(),
                    failing_direction: Some(a),
                    exact,
                });
            }
        } else {
            let af: Vec<f64> = a.iter().map(|c| c.to_f64()).collect();
            let w = p.combination_na(&af);
            let k = p.size();
            let mut acc = DMatrix::<Complex<f64>>::zeros(k, k);
            let id = DMatrix::<Complex<f64>>::identity(k, k);
            for c in u.coeffs().iter().rev() {
                acc = &acc * &w + &id * Complex::new(c.to_f64(), 0.0);
            }
            let wnorm = w.norm();
            let bound = tol::TAU_REL * wnorm.powi(d as i32).max(1e-300);
            let res = acc.norm();
            max_residual = max_residual.max(res);
            if res > bound {
                return Ok(RelationsReport {
                    pass: false,
                    directions: count,
                    max_residual: res,
                    failing_direction: Some(a),
                    exact,
                });
            }
        }
    }
    Ok(RelationsReport {
        pass: true,
        directions: count,
        max_residual,
        failing_direction: None,
        exact,
    })
}

// ---------------------------------------------------------------------------
// Unitary equivalence
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub enum EquivVerdict {
    /// An explicit unitary `Q` with `Q* M_i Q = N_i` for all `i`.
    Equivalent { unitary: Mat, residual: f64 },
    /// A unitary-invariant separates the tuples.
    Inequivalent { witness: EquivWitness },
    /// Neither a witness nor a unitary was found.
    Inconclusive,
}

impl EquivVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            EquivVerdict::Equivalent { .. } => "equivalent",
            EquivVerdict::Inequivalent { .. } => "inequivalent",
            EquivVerdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone)]
pub enum EquivWitness {
    SizeMismatch { left: usize, right: usize },
    TraceWord {
        word: Vec<usize>,
        left: (f64, f64),
        right: (f64, f64),
    },
}

const WORD_ENUM_CAP: usize = 20_000;

/// Three-valued unitary equivalence test.
///
/// Inequivalence is witnessed by a trace mismatch over words in the
/// coefficient matrices (a unitary-invariant family), re-verified exactly
/// for exact pencils. Equivalence is witnessed by an explicit unitary,
/// recovered from the least-squares intertwiner space of a seeded combination
/// and polished through the polar decomposition, verified to `TAU_EQ`.
pub fn unitary_equiv_test(
    p1: &Pencil,
    p2: &Pencil,
    word_length: usize,
    trials: usize,
    seed: u64,
) -> Result<EquivVerdict> {
    if p1.nvars() != p2.nvars() {
        return Err(Error::DimensionMismatch {
            expected: p1.nvars(),
            got: p2.nvars(),
        });
    }
    if p1.size() != p2.size() {
        return Ok(EquivVerdict::Inequivalent {
            witness: EquivWitness::SizeMismatch {
                left: p1.size(),
                right: p2.size(),
            },
        });
    }
    let n = p1.nvars();
    let k = p1.size();
    if p1 == p2 {
        return Ok(EquivVerdict::Equivalent {
            unitary: Mat::identity(k),
            residual: 0.0,
        });
    }
    let m1: Vec<DMatrix<Complex<f64>>> = p1.mats().iter().map(Mat::to_na).collect();
    let m2: Vec<DMatrix<Complex<f64>>> = p2.mats().iter().map(Mat::to_na).collect();
    let scale = m1
        .iter()
        .chain(&m2)
        .map(|m| m.norm())
        .fold(1.0f64, f64::max);

    // --- invariant side: trace words ---------------------------------------
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    'enumerate: for _len in 1..=word_length {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..n {
                let mut w2 = w.clone();
                w2.push(g);
                words.push(w2.clone());
                next.push(w2);
                if words.len() >= WORD_ENUM_CAP {
                    break 'enumerate;
                }
            }
        }
        frontier = next;
    }
    let mut rng = sampling::rng_from(seed, 7);
    for _ in 0..trials {
        let len = rng.random_range(1..=word_length.max(1));
        let w: Vec<usize> = (0..len).map(|_| rng.random_range(0..n)).collect();
        words.push(w);
    }
    for w in &words {
        let t1 = trace_word(&m1, w);
        let t2 = trace_word(&m2, w);
        let diff = ((t1.0 - t2.0).powi(2) + (t1.1 - t2.1).powi(2)).sqrt();
        if diff > 1e-6 * scale.powi(w.len() as i32).max(1.0) {
            // confirm exactly when both pencils are exact
            if p1.is_exact() && p2.is_exact() {
                let e1 = trace_word_exact(p1, w);
                let e2 = trace_word_exact(p2, w);
                if e1 == e2 {
                    continue;
                }
            }
            return Ok(EquivVerdict::Inequivalent {
                witness: EquivWitness::TraceWord {
                    word: w.clone(),
                    left: t1,
                    right: t2,
                },
            });
        }
    }

    // --- constructive side: intertwiner + polar -----------------------------
    // Solve M1_i X = X M2_i for all i in the least-squares sense: the common
    // nullspace of the stacked commutation operators.
    let mut stacked = DMatrix::<Complex<f64>>::zeros(n * k * k, k * k);
    for (i, (a, b)) in m1.iter().zip(&m2).enumerate() {
        // row block: (I (x) A) - (B^T (x) I)
        for r in 0..k {
            for c in 0..k {
                for s in 0..k {
                    // d/dX[(r,c)] of (A X)[r', c'] terms
                    // (A X)(s, c) = sum_r A(s, r) X(r, c)
                    stacked[(i * k * k + s * k + c, r * k + c)] += a[(s, r)];
                    // (X B)(r, s) = sum_c X(r, c) B(c, s)
                    stacked[(i * k * k + r * k + s, r * k + c)] -= b[(c, s)];
                }
            }
        }
    }
    let null = linalg::nullspace_float(&stacked);
    if !null.is_empty() {
        for attempt in 0..4 {
            // random combination of the intertwiner basis
            let mut x = DMatrix::<Complex<f64>>::zeros(k, k);
            for (b_idx, v) in null.iter().enumerate() {
                let coef = if attempt == 0 && null.len() == 1 {
                    Complex::new(1.0, 0.0)
                } else {
                    let re: f64 = rng.random_range(-1.0..1.0);
                    let im: f64 = rng.random_range(-1.0..1.0);
                    Complex::new(re, im)
                };
                let _ = b_idx;
                for r in 0..k {
                    for c in 0..k {
                        x[(r, c)] += v[r * k + c] * coef;
                    }
                }
            }
            // polar projection onto the unitary group
            let svd = x.clone().svd(true, true);
            let u = svd.u.as_ref().unwrap();
            let vt = svd.v_t.as_ref().unwrap();
            let q = u * vt;
            let mut residual = 0.0f64;
            for (a, b) in m1.iter().zip(&m2) {
                residual = residual.max(((q.adjoint() * a * &q) - b).norm());
            }
            if residual <= tol::TAU_EQ * scale {
                return Ok(EquivVerdict::Equivalent {
                    unitary: Mat::from_na(&q),
                    residual,
                });
            }
        }
    }
    Ok(EquivVerdict::Inconclusive)
}

fn trace_word(mats: &[DMatrix<Complex<f64>>], word: &[usize]) -> (f64, f64) {
    let k = mats[0].nrows();
    let mut acc = DMatrix::<Complex<f64>>::identity(k, k);
    for &g in word {
        acc *= &mats[g];
    }
    let t = acc.trace();
    (t.re, t.im)
}

fn trace_word_exact(p: &Pencil, word: &[usize]) -> CCoeff {
    let mut acc = Mat::identity(p.size());
    for &g in word {
        acc = acc.matmul(p.mat(g));
    }
    acc.trace()
}

/// Brute-force search for a separating trace word (used to pin regression
/// witnesses): shortest word, then lexicographically first.
pub fn find_separating_word(
    p1: &Pencil,
    p2: &Pencil,
    max_len: usize,
) -> Option<Vec<usize>> {
    let n = p1.nvars();
    let m1: Vec<DMatrix<Complex<f64>>> = p1.mats().iter().map(Mat::to_na).collect();
    let m2: Vec<DMatrix<Complex<f64>>> = p2.mats().iter().map(Mat::to_na).collect();
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _len in 1..=max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..n {
                let mut w2 = w.clone();
                w2.push(g);
                let t1 = trace_word(&m1, &w2);
                let t2 = trace_word(&m2, &w2);
                if ((t1.0 - t2.0).powi(2) + (t1.1 - t2.1).powi(2)).sqrt() > 1e-6 {
                    return Some(w2);
                }
                next.push(w2);
            }
        }
        frontier = next;
    }
    None
}
