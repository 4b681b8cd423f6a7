//! Coefficient domains: exact rationals, the quadratic extension `Q(sqrt(m))`,
//! double-precision floats, and complex entries built from pairs of these.
//!
//! A container (polynomial, matrix, pencil) carries a [`Domain`] tag; the
//! scalars inside are [`Coeff`] values. Mixing two different radicals is not
//! supported and is rejected at the container boundary, so the arithmetic in
//! here treats a radical mismatch as a programming error.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Coefficient domain of a polynomial, matrix or pencil.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// Arbitrary-precision rationals.
    Rational,
    /// The real quadratic extension `Q(sqrt(m))`, `m` a square-free integer >= 2.
    Quad(u32),
    /// Double-precision floating point.
    Float,
}

impl Domain {
    pub fn is_exact(self) -> bool {
        !matches!(self, Domain::Float)
    }

    /// Smallest domain containing both operands. `Rational` embeds into any
    /// `Quad(m)`; anything mixed with `Float` collapses to `Float`; two
    /// distinct radicals have no common domain here.
    pub fn join(self, other: Domain) -> Result<Domain, DomainError> {
        use Domain::*;
        match (self, other) {
            (Rational, d) | (d, Rational) => Ok(d),
            (Float, _) | (_, Float) => Ok(Float),
            (Quad(m), Quad(n)) if m == n => Ok(Quad(m)),
            (Quad(m), Quad(n)) => Err(DomainError::MixedRadicals(m, n)),
        }
    }

    /// The radical, if any.
    pub fn radical(self) -> Option<u32> {
        match self {
            Domain::Quad(m) => Some(m),
            _ => None,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rational => write!(f, "rational"),
            Domain::Quad(m) => write!(f, "sqrt:{m}"),
            Domain::Float => write!(f, "float"),
        }
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("mixed radicals sqrt({0}) and sqrt({1}) are not supported")]
    MixedRadicals(u32, u32),
    #[error("operation requires an exact coefficient domain, got float")]
    FloatNotAllowed,
}

/// A real scalar from one of the supported coefficient domains.
///
/// `Quad { a, b, m }` stands for `a + b*sqrt(m)`; the constructor demotes a
/// vanishing radical part to `Rat`, so structural equality is semantic
/// equality within one domain.
#[derive(Debug, Clone, PartialEq)]
pub enum Coeff {
    Rat(BigRational),
    Quad { a: BigRational, b: BigRational, m: u32 },
    F64(f64),
}

pub fn rat_i64(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer square root test: `Some(s)` iff `n == s*s` with `s >= 0`.
fn bigint_perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &s * &s == *n {
        Some(s)
    } else {
        None
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    let num = bigint_perfect_sqrt(r.numer())?;
    let den = bigint_perfect_sqrt(r.denom())?;
    Some(BigRational::new(num, den))
}

pub fn is_squarefree(m: u32) -> bool {
    if m < 2 {
        return false;
    }
    let mut m = m;
    let mut d = 2u32;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return false;
            }
        }
        d += 1;
    }
    true
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Coeff::Rat(BigRational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Coeff::Rat(rat_i64(n))
    }

    pub fn from_rat(n: i64, d: i64) -> Self {
        Coeff::Rat(rat(n, d))
    }

    /// `a + b*sqrt(m)`, demoting to `Rat` when `b = 0`.
    pub fn quad(a: BigRational, b: BigRational, m: u32) -> Self {
        debug_assert!(m >= 2, "radical must be >= 2");
        if b.is_zero() {
            Coeff::Rat(a)
        } else {
            Coeff::Quad { a, b, m }
        }
    }

    /// `sqrt(m)` as an exact scalar.
    pub fn sqrt_m(m: u32) -> Self {
        Coeff::quad(BigRational::zero(), BigRational::one(), m)
    }

    pub fn domain(&self) -> Domain {
        match self {
            Coeff::Rat(_) => Domain::Rational,
            Coeff::Quad { m, .. } => Domain::Quad(*m),
            Coeff::F64(_) => Domain::Float,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Quad { a, b, .. } => a.is_zero() && b.is_zero(),
            Coeff::F64(x) => *x == 0.0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Quad { .. } => false,
            Coeff::F64(x) => *x == 1.0,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Coeff::F64(_))
    }

    /// Exact rational lift of a float value (f64 values are dyadic
    /// rationals). Exact scalars pass through unchanged.
    pub fn to_exact_dyadic(&self) -> Coeff {
        match self {
            Coeff::F64(x) => Coeff::Rat(
                BigRational::from_float(*x).expect("finite float lifts exactly"),
            ),
            other => other.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Coeff::Rat(r) => r.to_f64().unwrap_or(f64::NAN),
            Coeff::Quad { a, b, m } => {
                a.to_f64().unwrap_or(f64::NAN)
                    + b.to_f64().unwrap_or(f64::NAN) * (*m as f64).sqrt()
            }
            Coeff::F64(x) => *x,
        }
    }

    /// Rational part `(a, b)` of `a + b*sqrt(m)`; `b = 0` for plain rationals.
    pub fn quad_parts(&self) -> Option<(BigRational, BigRational)> {
        match self {
            Coeff::Rat(r) => Some((r.clone(), BigRational::zero())),
            Coeff::Quad { a, b, .. } => Some((a.clone(), b.clone())),
            Coeff::F64(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rat(r) => Some(r),
            _ => None,
        }
    }

    fn promote(&self, m: u32) -> (BigRational, BigRational) {
        match self {
            Coeff::Rat(r) => (r.clone(), BigRational::zero()),
            Coeff::Quad { a, b, m: mm } => {
                assert_eq!(*mm, m, "radical mismatch inside arithmetic");
                (a.clone(), b.clone())
            }
            Coeff::F64(_) => unreachable!("float promoted to quad"),
        }
    }

    fn common_radical(&self, other: &Coeff) -> Option<u32> {
        match (self, other) {
            (Coeff::Quad { m, .. }, Coeff::Quad { m: m2, .. }) => {
                assert_eq!(*m, *m2, "radical mismatch inside arithmetic");
                Some(*m)
            }
            (Coeff::Quad { m, .. }, _) | (_, Coeff::Quad { m, .. }) => Some(*m),
            _ => None,
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::F64(_), _) | (_, Coeff::F64(_)) => Coeff::F64(self.to_f64() + other.to_f64()),
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            _ => {
                let m = self.common_radical(other).unwrap();
                let (a1, b1) = self.promote(m);
                let (a2, b2) = other.promote(m);
                Coeff::quad(a1 + a2, b1 + b2, m)
            }
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rat(r) => Coeff::Rat(-r),
            Coeff::Quad { a, b, m } => Coeff::Quad {
                a: -a,
                b: -b,
                m: *m,
            },
            Coeff::F64(x) => Coeff::F64(-x),
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::F64(_), _) | (_, Coeff::F64(_)) => Coeff::F64(self.to_f64() * other.to_f64()),
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            _ => {
                let m = self.common_radical(other).unwrap();
                let (a1, b1) = self.promote(m);
                let (a2, b2) = other.promote(m);
                let mr = rat_i64(m as i64);
                Coeff::quad(&a1 * &a2 + &mr * &b1 * &b2, &a1 * &b2 + &b1 * &a2, m)
            }
        }
    }

    /// Multiplicative inverse. Panics on zero (callers check first).
    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "division by zero scalar");
        match self {
            Coeff::Rat(r) => Coeff::Rat(r.recip()),
            Coeff::Quad { a, b, m } => {
                // (a + b sqrt m)^-1 = (a - b sqrt m) / (a^2 - m b^2)
                let mr = rat_i64(*m as i64);
                let norm = a * a - &mr * b * b;
                Coeff::quad(a / &norm, -(b / &norm), *m)
            }
            Coeff::F64(x) => Coeff::F64(1.0 / x),
        }
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv())
    }

    /// Exact sign for exact scalars, float sign otherwise.
    pub fn sign(&self) -> Ordering {
        match self {
            Coeff::Rat(r) => r.numer().sign().cmp(&num_bigint::Sign::NoSign),
            Coeff::Quad { a, b, m } => {
                let sa = a.numer().sign().cmp(&num_bigint::Sign::NoSign);
                let sb = b.numer().sign().cmp(&num_bigint::Sign::NoSign);
                if sb == Ordering::Equal {
                    return sa;
                }
                if sa == Ordering::Equal || sa == sb {
                    return sb;
                }
                // opposite signs: compare a^2 against m b^2
                let mr = rat_i64(*m as i64);
                match (a * a).cmp(&(&mr * b * b)) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => Ordering::Equal, // impossible for m square-free
                }
            }
            Coeff::F64(x) => x.partial_cmp(&0.0).unwrap_or(Ordering::Equal),
        }
    }

    /// Exact total order on exact scalars (their real values); floats compare as floats.
    pub fn cmp_real(&self, other: &Coeff) -> Ordering {
        self.sub(other).sign()
    }

    /// Exact square root within the same domain, when one exists there.
    /// Covers nonnegative rational perfect squares; used by the exact matrix
    /// square-root path.
    pub fn exact_sqrt(&self) -> Option<Coeff> {
        match self {
            Coeff::Rat(r) => rational_sqrt(r).map(Coeff::Rat),
            _ => None,
        }
    }

    /// Upper bound on the absolute value under every real/complex embedding
    /// of the radical (i.e. with `sqrt(m) -> +-sqrt(m)`).
    pub fn abs_bound(&self) -> f64 {
        match self {
            Coeff::Rat(r) => r.to_f64().map(f64::abs).unwrap_or(f64::INFINITY),
            Coeff::Quad { a, b, m } => {
                let fa = a.to_f64().map(f64::abs).unwrap_or(f64::INFINITY);
                let fb = b.to_f64().map(f64::abs).unwrap_or(f64::INFINITY);
                fa + fb * (*m as f64).sqrt()
            }
            Coeff::F64(x) => x.abs(),
        }
    }
}

impl fmt::Display for Coeff {
    /// Canonical literal: `num/den`, `num/den+num/den*sqrt(m)` (either part
    /// omitted when zero), or the shortest round-trip float representation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Coeff::Quad { a, b, m } => {
                if a.is_zero() {
                    return write!(f, "{}/{}*sqrt({})", b.numer(), b.denom(), m);
                }
                write!(f, "{}/{}", a.numer(), a.denom())?;
                if b.is_negative() {
                    let nb = -b;
                    write!(f, "-{}/{}*sqrt({})", nb.numer(), nb.denom(), m)
                } else {
                    write!(f, "+{}/{}*sqrt({})", b.numer(), b.denom(), m)
                }
            }
            Coeff::F64(x) => write!(f, "{x:?}"),
        }
    }
}

/// A complex scalar: `re + im*i` with both parts in the same real domain.
#[derive(Debug, Clone, PartialEq)]
pub struct CCoeff {
    pub re: Coeff,
    pub im: Coeff,
}

impl CCoeff {
    pub fn new(re: Coeff, im: Coeff) -> Self {
        CCoeff { re, im }
    }

    pub fn real(re: Coeff) -> Self {
        CCoeff {
            re,
            im: Coeff::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::real(Coeff::zero())
    }

    pub fn one() -> Self {
        Self::real(Coeff::one())
    }

    pub fn i() -> Self {
        CCoeff {
            re: Coeff::zero(),
            im: Coeff::one(),
        }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        CCoeff {
            re: Coeff::from_i64(re),
            im: Coeff::from_i64(im),
        }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        CCoeff {
            re: Coeff::F64(re),
            im: Coeff::F64(im),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn domain(&self) -> Domain {
        self.re.domain().join(self.im.domain()).expect("entry parts share a domain")
    }

    pub fn conj(&self) -> CCoeff {
        CCoeff {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn neg(&self) -> CCoeff {
        CCoeff {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn add(&self, o: &CCoeff) -> CCoeff {
        CCoeff {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &CCoeff) -> CCoeff {
        CCoeff {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn mul(&self, o: &CCoeff) -> CCoeff {
        CCoeff {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, s: &Coeff) -> CCoeff {
        CCoeff {
            re: self.re.mul(s),
            im: self.im.mul(s),
        }
    }

    /// `|z|^2` as a real scalar.
    pub fn norm_sq(&self) -> Coeff {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn inv(&self) -> CCoeff {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero entry");
        let ninv = n.inv();
        CCoeff {
            re: self.re.mul(&ninv),
            im: self.im.neg().mul(&ninv),
        }
    }

    pub fn div(&self, o: &CCoeff) -> CCoeff {
        self.mul(&o.inv())
    }

    pub fn to_complex_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn abs_f64(&self) -> f64 {
        let (re, im) = self.to_complex_f64();
        re.hypot(im)
    }

    /// Upper bound on `|z|` under every embedding of the radical.
    pub fn abs_bound(&self) -> f64 {
        self.re.abs_bound() + self.im.abs_bound()
    }
}
