//! Computable size bounds and machine-checkable nonexistence certificates
//! for determinantal representations, plus the compact counterexample
//! construction that multiplies a shifted homogenization by a shifted ball.
//!
//! Every conclusion in a report names the certificate mechanism that produced
//! it and carries the status of each hypothesis (proved exactly, sampled, or
//! asserted by the caller), so downstream consumers can tell a theorem from a
//! semidecision.

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::polynomial::{Monomial, Poly};
use crate::realzero::{self, RzMode, RzStrategy};
use crate::sampling;
use crate::scalar::{CCoeff, Coeff};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::cmp::Ordering;
use std::fmt;

/// Mechanism tags cited by report conclusions.
pub mod tag {
    /// Full-dimensional cone forces a size-`d` representation; comparing
    /// with the dimension of the space of size-`d` matrices rules it out.
    pub const CONE_DIMENSION: &str = "cone-dimension-bound";
    /// The eigenvalue-crossing obstruction for the shifted homogenization
    /// (degree not 0, 1, 7 mod 8 and simple zeros everywhere).
    pub const SIMPLE_ZEROS_CROSSING: &str = "simple-zeros-crossing";
    /// Lower bound from the dimension of spaces of bounded-rank symmetric
    /// matrices.
    pub const RANK_SPACE_SYMMETRIC: &str = "rank-space-bound-symmetric";
    /// Hermitian analogue through the real-symmetric doubling.
    pub const RANK_SPACE_HERMITIAN: &str = "rank-space-bound-hermitian";
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Maximum dimension of a linear space of real symmetric `k x k` matrices in
/// which every element has rank at most `d`.
pub fn meshulam_alpha(k: u64, d: u64) -> Result<u64> {
    if d < 1 || d > k {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= d <= k, got d = {d}, k = {k}"
        )));
    }
    Ok(if d % 2 == 0 {
        let e = d / 2;
        if 2 * k <= 5 * e + 1 {
            binom(d + 1, 2)
        } else {
            binom(e + 1, 2) + e * (k - e)
        }
    } else {
        let e = (d - 1) / 2;
        if 2 * k <= 5 * (e + 1) {
            binom(d + 1, 2)
        } else {
            binom(e + 1, 2) + e * (k - e) + 1
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepKind {
    Symmetric,
    Hermitian,
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepKind::Symmetric => write!(f, "symmetric"),
            RepKind::Hermitian => write!(f, "hermitian"),
        }
    }
}

/// Exact lower bound on the size of a representation, with the integer
/// ceiling split out so callers can see the slack.
#[derive(Debug, Clone)]
pub struct SizeBound {
    pub kind: RepKind,
    pub exact: BigRational,
    pub ceiling: u64,
    pub mechanism: &'static str,
}

/// Size lower bound for pencils whose spectrahedron contains no full line.
/// Returns `None` outside the valid range (`n > binom(d+1, 2)` for symmetric,
/// `n > binom(2d+1, 2)` for hermitian).
pub fn min_size_bound(n: u64, d: u64, kind: RepKind) -> Result<Option<SizeBound>> {
    if n < 1 || d < 1 {
        return Err(Error::InvalidParameter(
            "need n >= 1 and d >= 1".into(),
        ));
    }
    let rat = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let bound = match kind {
        RepKind::Symmetric => {
            if n <= binom(d + 1, 2) {
                return Ok(None);
            }
            if d % 2 == 0 {
                rat(2 * n as i64, d as i64) + rat(d as i64 - 2, 4)
            } else {
                rat(2 * (n as i64 - 1), d as i64 - 1) + rat(d as i64 - 3, 4)
            }
        }
        RepKind::Hermitian => {
            if n <= binom(2 * d + 1, 2) {
                return Ok(None);
            }
            rat(n as i64, 2 * d as i64) + rat(d as i64 - 1, 4)
        }
    };
    let ceiling = bound.ceil().to_integer().to_u64().unwrap_or(0);
    Ok(Some(SizeBound {
        kind,
        exact: bound,
        ceiling,
        mechanism: match kind {
            RepKind::Symmetric => tag::RANK_SPACE_SYMMETRIC,
            RepKind::Hermitian => tag::RANK_SPACE_HERMITIAN,
        },
    }))
}

// ---------------------------------------------------------------------------
// Nonexistence reports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypothesisStatus {
    VerifiedExact,
    VerifiedSampled,
    AssertedByCaller,
    Failed,
    NotChecked,
}

impl HypothesisStatus {
    pub fn holds(self) -> bool {
        matches!(
            self,
            HypothesisStatus::VerifiedExact
                | HypothesisStatus::VerifiedSampled
                | HypothesisStatus::AssertedByCaller
        )
    }
}

impl fmt::Display for HypothesisStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisStatus::VerifiedExact => write!(f, "verified-exact"),
            HypothesisStatus::VerifiedSampled => write!(f, "verified-sampled"),
            HypothesisStatus::AssertedByCaller => write!(f, "asserted-by-caller"),
            HypothesisStatus::Failed => write!(f, "failed"),
            HypothesisStatus::NotChecked => write!(f, "not-checked"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Hypothesis {
    pub name: String,
    pub status: HypothesisStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subject {
    /// The input polynomial itself.
    InputPolynomial,
    /// The shifted homogenization of the input.
    ShiftedHomogenization,
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::InputPolynomial => write!(f, "input"),
            Subject::ShiftedHomogenization => write!(f, "shifted-homogenization"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    NoneExists,
    SizeLowerBound(u64),
    NoConclusion,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::NoneExists => write!(f, "none-exists"),
            Claim::SizeLowerBound(b) => write!(f, "size-lower-bound {b}"),
            Claim::NoConclusion => write!(f, "no-conclusion"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Conclusion {
    pub subject: Subject,
    pub kind: RepKind,
    pub claim: Claim,
    pub mechanism: String,
}

#[derive(Debug, Clone)]
pub struct ObstructionReport {
    pub nvars: usize,
    pub degree: i64,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusions: Vec<Conclusion>,
    pub notes: Vec<String>,
}

impl ObstructionReport {
    pub fn has_claim(&self, subject: Subject, kind: RepKind, claim: &Claim) -> bool {
        self.conclusions
            .iter()
            .any(|c| c.subject == subject && c.kind == kind && &c.claim == claim)
    }

    pub fn hypothesis_status(&self, name: &str) -> Option<HypothesisStatus> {
        self.hypotheses
            .iter()
            .find(|h| h.name == name)
            .map(|h| h.status)
    }
}

/// Caller-supplied hypothesis assertions and sampling controls.
#[derive(Debug, Clone)]
pub struct HypothesisFlags {
    pub assert_cone: bool,
    pub assert_no_line: bool,
    pub seed: u64,
    pub samples: usize,
}

impl Default for HypothesisFlags {
    fn default() -> Self {
        HypothesisFlags {
            assert_cone: false,
            assert_no_line: false,
            seed: crate::DEFAULT_SEED,
            samples: 128,
        }
    }
}

/// Does the rigidly convex set contain a full-dimensional cone?
/// Exactly decidable for quadratics: some direction has `v^t A v > 0`,
/// i.e. `-A` is not PSD. Shifted homogenizations carry one structurally.
fn cone_status(p: &Poly, flags: &HypothesisFlags) -> (HypothesisStatus, String) {
    if p.degree() == 2 && p.domain().is_exact() {
        if let Ok(q) = realzero::quadratic_form(p) {
            let neg_a = q.a_mat.neg();
            match neg_a.psd_witness_exact() {
                Ok(None) => {
                    return (
                        HypothesisStatus::Failed,
                        "no direction with positive quadratic growth".into(),
                    )
                }
                Ok(Some(_)) => {
                    return (
                        HypothesisStatus::VerifiedExact,
                        "a direction with positive quadratic growth exists".into(),
                    )
                }
                Err(_) => {}
            }
        }
    }
    if is_shifted_homogenization(p) {
        return (
            HypothesisStatus::VerifiedExact,
            "input is a shifted homogenization".into(),
        );
    }
    if flags.assert_cone {
        (
            HypothesisStatus::AssertedByCaller,
            "cone containment asserted".into(),
        )
    } else {
        (
            HypothesisStatus::NotChecked,
            "no exact criterion applies; pass an assertion to enable cone-based conclusions".into(),
        )
    }
}

/// Does the rigidly convex set contain a full line? For a real zero
/// polynomial this happens exactly when some nonzero direction kills every
/// homogeneous component; for quadratics that reads `ker G  n  ker b^t = 0`.
fn no_line_status(p: &Poly, flags: &HypothesisFlags) -> (HypothesisStatus, String) {
    let n = p.nvars();
    if p.degree() == 2 && p.domain().is_exact() {
        if let Ok(q) = realzero::quadratic_form(p) {
            // stack G on top of b^t and compute the exact kernel
            let stacked = Mat::from_fn(n + 1, n, |i, j| {
                if i < n {
                    q.g.at(i, j).clone()
                } else {
                    CCoeff::real(q.b[j].clone())
                }
            });
            match stacked.rank_exact() {
                Ok(r) if r == n => {
                    return (
                        HypothesisStatus::VerifiedExact,
                        "kernel of (G; b^t) is trivial".into(),
                    )
                }
                Ok(_) => {
                    return (
                        HypothesisStatus::Failed,
                        "a direction spans a full line".into(),
                    )
                }
                Err(_) => {}
            }
        }
    }
    if flags.assert_no_line {
        return (
            HypothesisStatus::AssertedByCaller,
            "absence of lines asserted".into(),
        );
    }
    // sampled: a full line needs a direction along which every homogeneous
    // component vanishes; look for a restriction collapsing to a constant
    let d = p.degree().max(0) as u32;
    let mut dirs: Vec<Vec<Coeff>> = Vec::new();
    for axis in sampling::coordinate_axes(n) {
        dirs.push(axis.iter().map(|&x| Coeff::from_i64(x as i64)).collect());
    }
    for pat in sampling::sign_patterns(n, 12) {
        dirs.push(pat.iter().map(|&x| Coeff::from_i64(x as i64)).collect());
    }
    let mut rng = sampling::rng_from(flags.seed, 8);
    for _ in 0..flags.samples {
        dirs.push(sampling::rational_direction(&mut rng, n, 6, 4));
    }
    for a in dirs {
        if let Ok(u) = p.restrict(&a) {
            if u.degree() < 1 && d >= 1 {
                return (
                    HypothesisStatus::Failed,
                    "a sampled direction collapses the restriction to a constant".into(),
                );
            }
        }
    }
    (
        HypothesisStatus::VerifiedSampled,
        "no sampled direction collapses the restriction".into(),
    )
}

/// Structural test: the restriction to `x0 = 0` shifted-homogenizes back to
/// the input.
pub fn is_shifted_homogenization(p: &Poly) -> bool {
    if p.nvars() < 2 || p.degree() < 1 || !p.constant_term().is_one() {
        return false;
    }
    let p0 = p.set_slot_zero(0);
    if !p0.constant_term().is_one() || p0.degree() < 1 {
        return false;
    }
    match p0.shifted_homogenize() {
        Ok(sh) => sh == *p,
        Err(_) => false,
    }
}

/// Assemble the nonexistence certificate for `p`. Errors if `p` fails the
/// real zero check (exact for quadratics, sampled otherwise).
pub fn nonexistence_report(p: &Poly, flags: &HypothesisFlags) -> Result<ObstructionReport> {
    if !p.constant_term().is_one() {
        return Err(Error::NotMonicConstant);
    }
    let n = p.nvars() as u64;
    let d = p.degree();
    if d < 1 {
        return Err(Error::ZeroPolynomial);
    }
    let rz = realzero::is_real_zero(p, RzStrategy::Auto, flags.seed)?;
    if !rz.is_rz {
        return Err(Error::NotRealZero);
    }
    let mut hypotheses = Vec::new();
    hypotheses.push(Hypothesis {
        name: "real-zero".into(),
        status: match rz.mode {
            RzMode::Exact => HypothesisStatus::VerifiedExact,
            RzMode::Sampled { .. } => HypothesisStatus::VerifiedSampled,
        },
        detail: match rz.mode {
            RzMode::Exact => "decided exactly".into(),
            RzMode::Sampled { seed, samples } => {
                format!("sampled with seed {seed}, {samples} directions")
            }
        },
    });
    let (cone, cone_detail) = cone_status(p, flags);
    hypotheses.push(Hypothesis {
        name: "cone".into(),
        status: cone,
        detail: cone_detail,
    });
    let (no_line, line_detail) = no_line_status(p, flags);
    hypotheses.push(Hypothesis {
        name: "no-full-line".into(),
        status: no_line,
        detail: line_detail,
    });
    let mod8 = d.rem_euclid(8);
    let mod8_ok = !matches!(mod8, 0 | 1 | 7);
    hypotheses.push(Hypothesis {
        name: "degree-mod-8".into(),
        status: if mod8_ok {
            HypothesisStatus::VerifiedExact
        } else {
            HypothesisStatus::Failed
        },
        detail: format!("degree {d} is {mod8} mod 8"),
    });
    let simple = realzero::simple_zeros_sampled(p, flags.samples, flags.seed)?;
    hypotheses.push(Hypothesis {
        name: "simple-zeros".into(),
        status: if simple.all_simple {
            HypothesisStatus::VerifiedSampled
        } else {
            HypothesisStatus::Failed
        },
        detail: if simple.all_simple {
            format!(
                "all {} sampled restrictions squarefree (including infinity)",
                simple.samples
            )
        } else {
            "a sampled restriction has a repeated zero".into()
        },
    });

    let mut conclusions = Vec::new();
    // cone + dimension count: conclusions about the input polynomial
    if cone.holds() && no_line.holds() {
        if n > binom(d as u64 + 1, 2) {
            conclusions.push(Conclusion {
                subject: Subject::InputPolynomial,
                kind: RepKind::Symmetric,
                claim: Claim::NoneExists,
                mechanism: tag::CONE_DIMENSION.into(),
            });
        }
        if n > (d as u64) * (d as u64) {
            conclusions.push(Conclusion {
                subject: Subject::InputPolynomial,
                kind: RepKind::Hermitian,
                claim: Claim::NoneExists,
                mechanism: tag::CONE_DIMENSION.into(),
            });
        }
    }
    // crossing obstruction: conclusions about the shifted homogenization
    if no_line.holds() && mod8_ok && simple.all_simple {
        if n >= 3 {
            conclusions.push(Conclusion {
                subject: Subject::ShiftedHomogenization,
                kind: RepKind::Symmetric,
                claim: Claim::NoneExists,
                mechanism: tag::SIMPLE_ZEROS_CROSSING.into(),
            });
        }
        if n >= 4 {
            conclusions.push(Conclusion {
                subject: Subject::ShiftedHomogenization,
                kind: RepKind::Hermitian,
                claim: Claim::NoneExists,
                mechanism: tag::SIMPLE_ZEROS_CROSSING.into(),
            });
        }
    }
    // rank-space size bounds, contingent on no-full-line
    if no_line.holds() {
        for kind in [RepKind::Symmetric, RepKind::Hermitian] {
            if let Some(b) = min_size_bound(n, d as u64, kind)? {
                conclusions.push(Conclusion {
                    subject: Subject::InputPolynomial,
                    kind,
                    claim: Claim::SizeLowerBound(b.ceiling),
                    mechanism: b.mechanism.into(),
                });
            }
        }
    }
    let mut notes = vec![
        "conclusions concern the stated subject polynomial itself, not its powers or multiples"
            .into(),
    ];
    if conclusions.is_empty() {
        notes.push("no mechanism applies in this range; existence is undecided here".into());
    }
    if conclusions
        .iter()
        .any(|c| c.mechanism == tag::SIMPLE_ZEROS_CROSSING)
    {
        notes.push(
            "simple-zeros status is sampled; crossing conclusions are contingent on that precondition"
                .into(),
        );
    }
    Ok(ObstructionReport {
        nvars: p.nvars(),
        degree: d,
        hypotheses,
        conclusions,
        notes,
    })
}

// ---------------------------------------------------------------------------
// Compact counterexample construction
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct CounterexampleChecks {
    pub rz_sampled: bool,
    pub bounded_inside_radius: f64,
    pub boundary_samples: usize,
    pub notes: Vec<String>,
}

/// Multiply a shifted homogenization by the shifted ball factor
/// `(r/(r-1)) (1 - (1/r)((x0+1)^2 + x1^2 + ... + xn^2))`, producing a
/// polynomial with compact rigidly convex set and no representation in the
/// same family as the input.
pub fn compact_counterexample(
    ptilde: &Poly,
    r: &Coeff,
) -> Result<(Poly, CounterexampleChecks)> {
    if r.sub(&Coeff::one()).sign() != Ordering::Greater {
        return Err(Error::InvalidParameter("radius parameter must exceed 1".into()));
    }
    if !is_shifted_homogenization(ptilde) {
        return Err(Error::InvalidParameter(
            "input must be a shifted homogenization in x0..xn".into(),
        ));
    }
    let nv = ptilde.nvars();
    // s = (x0+1)^2 + x1^2 + ... + xn^2
    let mut s = Poly::one(nv).with_base(0);
    for j in 0..nv {
        let mut e = vec![0u32; nv];
        e[j] = 2;
        s.add_term(Monomial(e), Coeff::one());
    }
    s.add_term(Monomial::var(nv, 0), Coeff::from_i64(2));
    let factor = r.div(&r.sub(&Coeff::one()));
    let ball = Poly::constant(nv, factor.clone())
        .with_base(0)
        .sub(&s.scale(&factor.div(r)))?;
    let q = ptilde.mul(&ball)?;
    debug_assert!(q.constant_term().is_one());

    // sampled validation: RZ plus confinement to the stated ball
    let rz = realzero::is_real_zero(&q, RzStrategy::Sampled(128), crate::DEFAULT_SEED)?;
    let radius = 2.0 * r.to_f64().sqrt() + 1.0;
    let mut rng = sampling::rng_from(crate::DEFAULT_SEED, 9);
    let samples = 64;
    let mut outside_all_excluded = true;
    for _ in 0..samples {
        let u = sampling::unit_direction(&mut rng, nv);
        // a point just outside the stated ball around (-1, 0, ..., 0)
        let pt: Vec<Coeff> = (0..nv)
            .map(|j| {
                let center = if j == 0 { -1.0 } else { 0.0 };
                Coeff::F64(center + (radius + 0.125) * u[j])
            })
            .collect();
        if realzero::rigid_membership(&q, &pt)? {
            outside_all_excluded = false;
            break;
        }
    }
    let checks = CounterexampleChecks {
        rz_sampled: rz.is_rz,
        bounded_inside_radius: radius,
        boundary_samples: samples,
        notes: vec![
            "nonexistence for this product family follows from a closedness and limit argument; \
             it is recorded as documentation, not machine-verified"
                .into(),
        ],
    };
    if !outside_all_excluded {
        return Err(Error::Unsupported(
            "a sampled point outside the stated ball was a member".into(),
        ));
    }
    Ok((q, checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse;

    #[test]
    fn alpha_values() {
        // e = 1, 2k = 6 <= 6: binom(3,2) = 3
        assert_eq!(meshulam_alpha(3, 2).unwrap(), 3);
        // 2k = 20 > 6: 1 + 1 * 9 = 10
        assert_eq!(meshulam_alpha(10, 2).unwrap(), 10);
        // rank unconstrained: full space dimension
        for k in 1..10 {
            assert_eq!(meshulam_alpha(k, k).unwrap(), binom(k + 1, 2));
        }
        assert!(meshulam_alpha(3, 4).is_err());
        assert!(meshulam_alpha(3, 0).is_err());
    }

    #[test]
    fn alpha_monotone_and_continuous_at_breakpoints() {
        for d in 1..=10u64 {
            let mut prev = None;
            for k in d..=60 {
                let a = meshulam_alpha(k, d).unwrap();
                if let Some(p) = prev {
                    assert!(a >= p, "alpha must be nondecreasing in k (d={d}, k={k})");
                }
                prev = Some(a);
                // where the case split boundary is hit exactly, both branches
                // agree
                let e = d / 2;
                if d % 2 == 0 && 2 * k == 5 * e + 1 {
                    assert_eq!(binom(d + 1, 2), binom(e + 1, 2) + e * (k - e));
                }
                if d % 2 == 1 {
                    let e = (d - 1) / 2;
                    if 2 * k == 5 * (e + 1) {
                        assert_eq!(binom(d + 1, 2), binom(e + 1, 2) + e * (k - e) + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn size_bounds_match_quadratic_anchors() {
        // symmetric d = 2: bound is n for n > 3
        for n in 4..=12 {
            let b = min_size_bound(n, 2, RepKind::Symmetric).unwrap().unwrap();
            assert_eq!(b.ceiling, n);
        }
        assert!(min_size_bound(3, 2, RepKind::Symmetric).unwrap().is_none());
        // hermitian d = 2: bound is (n+1)/4 for n > 10
        let b = min_size_bound(11, 2, RepKind::Hermitian).unwrap().unwrap();
        assert_eq!(b.ceiling, 3);
        for n in 11..=20 {
            let b = min_size_bound(n, 2, RepKind::Hermitian).unwrap().unwrap();
            assert_eq!(b.ceiling, ((n + 1) as f64 / 4.0).ceil() as u64);
        }
        assert!(min_size_bound(10, 2, RepKind::Hermitian).unwrap().is_none());
    }

    #[test]
    fn report_for_shifted_ball_three() {
        let pt3 = parse("1 - x1^2 - x2^2 - x3^2", 3)
            .unwrap()
            .shifted_homogenize()
            .unwrap();
        let rep = nonexistence_report(&pt3, &HypothesisFlags::default()).unwrap();
        assert!(rep.has_claim(
            Subject::InputPolynomial,
            RepKind::Symmetric,
            &Claim::NoneExists
        ));
        // hermitian needs n > d^2 = 4; here n = 4
        assert!(!rep.has_claim(
            Subject::InputPolynomial,
            RepKind::Hermitian,
            &Claim::NoneExists
        ));
        assert_eq!(
            rep.hypothesis_status("cone"),
            Some(HypothesisStatus::VerifiedExact)
        );
        assert_eq!(
            rep.hypothesis_status("no-full-line"),
            Some(HypothesisStatus::VerifiedExact)
        );
    }

    #[test]
    fn report_for_shifted_ball_four_and_hyperboloid() {
        let pt4 = parse("1 - x1^2 - x2^2 - x3^2 - x4^2", 4)
            .unwrap()
            .shifted_homogenize()
            .unwrap();
        let rep = nonexistence_report(&pt4, &HypothesisFlags::default()).unwrap();
        for kind in [RepKind::Symmetric, RepKind::Hermitian] {
            assert!(rep.has_claim(Subject::InputPolynomial, kind, &Claim::NoneExists));
        }
        let q5 = parse("(x1+sqrt(2))^2 - x2^2 - x3^2 - x4^2 - x5^2 - 1", 5).unwrap();
        let rep = nonexistence_report(&q5, &HypothesisFlags::default()).unwrap();
        assert!(rep.has_claim(
            Subject::InputPolynomial,
            RepKind::Hermitian,
            &Claim::NoneExists
        ));
        let cone = rep.hypothesis_status("cone").unwrap();
        assert_eq!(cone, HypothesisStatus::VerifiedExact);
    }

    #[test]
    fn report_for_compact_ball_has_no_conclusion() {
        let p2 = parse("1 - x1^2 - x2^2", 2).unwrap();
        let rep = nonexistence_report(&p2, &HypothesisFlags::default()).unwrap();
        assert!(rep.conclusions.is_empty());
        assert_eq!(
            rep.hypothesis_status("cone"),
            Some(HypothesisStatus::Failed)
        );
        // not RZ inputs are rejected
        let bad = parse("1 + x1^2", 1).unwrap();
        assert!(matches!(
            nonexistence_report(&bad, &HypothesisFlags::default()),
            Err(Error::NotRealZero)
        ));
    }

    #[test]
    fn crossing_conclusions_from_the_ball() {
        // input p_3: the crossing mechanism concludes about its shifted
        // homogenization (no symmetric representation); hermitian needs n >= 4
        let p3 = parse("1 - x1^2 - x2^2 - x3^2", 3).unwrap();
        let rep = nonexistence_report(&p3, &HypothesisFlags::default()).unwrap();
        assert!(rep.has_claim(
            Subject::ShiftedHomogenization,
            RepKind::Symmetric,
            &Claim::NoneExists
        ));
        assert!(!rep.has_claim(
            Subject::ShiftedHomogenization,
            RepKind::Hermitian,
            &Claim::NoneExists
        ));
        let p4 = parse("1 - x1^2 - x2^2 - x3^2 - x4^2", 4).unwrap();
        let rep = nonexistence_report(&p4, &HypothesisFlags::default()).unwrap();
        assert!(rep.has_claim(
            Subject::ShiftedHomogenization,
            RepKind::Hermitian,
            &Claim::NoneExists
        ));
    }

    #[test]
    fn counterexample_construction() {
        let pt4 = parse("1 - x1^2 - x2^2 - x3^2 - x4^2", 4)
            .unwrap()
            .shifted_homogenize()
            .unwrap();
        let (q, checks) = compact_counterexample(&pt4, &Coeff::from_i64(2)).unwrap();
        assert!(q.constant_term().is_one());
        assert_eq!(q.degree(), pt4.degree() + 2);
        assert!(checks.rz_sampled);
        // the displayed product: 2 * ptilde * (1 - (1/2) s)
        let nv = 5;
        let mut s = Poly::one(nv).with_base(0);
        for j in 0..nv {
            let mut e = vec![0u32; nv];
            e[j] = 2;
            s.add_term(Monomial(e), Coeff::one());
        }
        s.add_term(Monomial::var(nv, 0), Coeff::from_i64(2));
        let ball = Poly::constant(nv, Coeff::from_i64(2))
            .with_base(0)
            .sub(&s)
            .unwrap();
        let expect = pt4.mul(&ball).unwrap().scale(&Coeff::one());
        assert_eq!(q, expect);

        // structural check and radius parameter validation
        assert!(compact_counterexample(&pt4, &Coeff::one()).is_err());
        let not_shifted = parse("1 - x1^2 - x2^2", 2).unwrap();
        assert!(compact_counterexample(&not_shifted, &Coeff::from_i64(2)).is_err());
    }

    #[test]
    fn counterexample_rz_for_various_radii() {
        let pt4 = parse("1 - x1^2 - x2^2 - x3^2 - x4^2", 4)
            .unwrap()
            .shifted_homogenize()
            .unwrap();
        for r in [Coeff::from_rat(3, 2), Coeff::from_i64(2), Coeff::from_i64(10)] {
            let (_, checks) = compact_counterexample(&pt4, &r).unwrap();
            assert!(checks.rz_sampled, "r = {r}");
        }
    }
}
