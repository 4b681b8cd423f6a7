//! Sparse multivariate polynomials over the exact and float coefficient
//! domains, univariate restrictions, homogenizations, and the expression
//! parser behind the text formats.
//!
//! Variables are positional slots `0..nvars`. A polynomial remembers a
//! display `base` (0 or 1): slot `j` prints as `x{j+base}`. Polynomials
//! written in the usual `x1..xn` convention have base 1; homogenizations
//! introduce the extra variable as slot 0 and print as `x0..xn`.

use crate::error::{Error, Result};
use crate::scalar::{is_squarefree, rat_i64, CCoeff, Coeff, Domain};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector. Ordered by total degree, ties broken so that within one
/// degree the lexicographically largest exponent vector comes first; this is
/// the graded-lexicographic printing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, slot: usize) -> Self {
        let mut e = vec![0; nvars];
        e[slot] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial. Equality compares variable count and
/// terms; the display base and the domain tag are presentation metadata.
#[derive(Debug, Clone)]
pub struct Poly {
    nvars: usize,
    base: u8,
    domain: Domain,
    terms: BTreeMap<Monomial, Coeff>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            base: 1,
            domain: Domain::Rational,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        let mut p = Poly::zero(nvars);
        p.domain = c.domain();
        p.add_term(Monomial::constant(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn var(nvars: usize, slot: usize) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial::var(nvars, slot), Coeff::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn index_base(&self) -> u8 {
        self.base
    }

    pub fn with_base(mut self, base: u8) -> Self {
        self.base = base;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; -1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn degree_in_var(&self, slot: usize) -> u32 {
        self.terms.keys().map(|m| m.0[slot]).max().unwrap_or(0)
    }

    pub fn coeff(&self, mono: &Monomial) -> Coeff {
        self.terms.get(mono).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(&Monomial::constant(self.nvars))
    }

    /// Insert `c * mono`, combining with an existing term. Keeps the domain
    /// tag as the join and drops terms that cancel to zero.
    pub fn add_term(&mut self, mono: Monomial, c: Coeff) {
        assert_eq!(mono.0.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        self.domain = self
            .domain
            .join(c.domain())
            .expect("term domain joins container domain");
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn checked_domain_join(&self, other: &Poly) -> Result<Domain> {
        Ok(self.domain.join(other.domain)?)
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.binary_check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.binary_check(other)?;
        let mut out = Poly::zero(self.nvars).with_base(self.base);
        out.domain = self.domain.join(other.domain)?;
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Coeff) -> Poly {
        let mut out = Poly::zero(self.nvars).with_base(self.base);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(s));
        }
        out
    }

    pub fn pow(&self, r: u32) -> Result<Poly> {
        let mut result = Poly::one(self.nvars).with_base(self.base);
        let mut base = self.clone();
        let mut e = r;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    fn binary_check(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        self.checked_domain_join(other)?;
        Ok(())
    }

    /// Exact evaluation; the result lives in the join of the coefficient and
    /// point domains (float if either side is float).
    pub fn evaluate(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        // power cache per variable
        let mut powers: Vec<Vec<Coeff>> = Vec::with_capacity(self.nvars);
        for (j, p) in point.iter().enumerate() {
            let maxe = self.degree_in_var(j) as usize;
            let mut v = Vec::with_capacity(maxe + 1);
            v.push(Coeff::one());
            for _ in 0..maxe {
                v.push(v.last().unwrap().mul(p));
            }
            powers.push(v);
        }
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (j, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[j][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    pub fn evaluate_f64(&self, point: &[f64]) -> f64 {
        let pt: Vec<Coeff> = point.iter().map(|&x| Coeff::F64(x)).collect();
        self.evaluate(&pt).map(|c| c.to_f64()).unwrap_or(f64::NAN)
    }

    /// Univariate restriction `t -> p(t * a)`.
    pub fn restrict(&self, a: &[Coeff]) -> Result<UniPoly> {
        if a.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: a.len(),
            });
        }
        let d = self.degree().max(0) as usize;
        let mut coeffs = vec![Coeff::zero(); d + 1];
        let mut powers: Vec<Vec<Coeff>> = Vec::with_capacity(self.nvars);
        for (j, p) in a.iter().enumerate() {
            let maxe = self.degree_in_var(j) as usize;
            let mut v = Vec::with_capacity(maxe + 1);
            v.push(Coeff::one());
            for _ in 0..maxe {
                v.push(v.last().unwrap().mul(p));
            }
            powers.push(v);
        }
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (j, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[j][e as usize]);
                }
            }
            let k = m.degree() as usize;
            coeffs[k] = coeffs[k].add(&t);
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn restrict_f64(&self, a: &[f64]) -> Result<UniPoly> {
        let pt: Vec<Coeff> = a.iter().map(|&x| Coeff::F64(x)).collect();
        self.restrict(&pt)
    }

    /// Usual homogenization `x0^d * p(x/x0)`: degree-`d` homogeneous in
    /// `nvars + 1` variables, the new variable in slot 0.
    pub fn homogenize(&self) -> Result<Poly> {
        let d = self.degree();
        if d < 1 {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Poly::zero(self.nvars + 1).with_base(0);
        out.domain = self.domain;
        for (m, c) in &self.terms {
            let mut e = Vec::with_capacity(self.nvars + 1);
            e.push(d as u32 - m.degree());
            e.extend_from_slice(&m.0);
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Shifted homogenization `(x0+1)^d * p(x/(x0+1))`. Requires `p(0) = 1`.
    pub fn shifted_homogenize(&self) -> Result<Poly> {
        if !self.constant_term().is_one() {
            return Err(Error::NotMonicConstant);
        }
        let d = self.degree();
        if d < 1 {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Poly::zero(self.nvars + 1).with_base(0);
        out.domain = self.domain;
        for (m, c) in &self.terms {
            let rem = d as u32 - m.degree();
            // (x0 + 1)^rem expanded over the new slot 0
            for j in 0..=rem {
                let binom = binomial(rem, j);
                let mut e = Vec::with_capacity(self.nvars + 1);
                e.push(j);
                e.extend_from_slice(&m.0);
                out.add_term(Monomial(e), c.mul(&Coeff::Rat(binom)));
            }
        }
        Ok(out)
    }

    /// Substitute 0 for slot `j` and remove that variable.
    pub fn set_slot_zero(&self, slot: usize) -> Poly {
        let base = if slot == 0 && self.base == 0 { 1 } else { self.base };
        let mut out = Poly::zero(self.nvars - 1).with_base(base);
        out.domain = self.domain;
        for (m, c) in &self.terms {
            if m.0[slot] != 0 {
                continue;
            }
            let mut e = m.0.clone();
            e.remove(slot);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Terms of total degree exactly `k`.
    pub fn homogeneous_component(&self, k: u32) -> Poly {
        let mut out = Poly::zero(self.nvars).with_base(self.base);
        out.domain = self.domain;
        for (m, c) in &self.terms {
            if m.degree() == k {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// `p(lambda * x)`.
    pub fn scale_variables(&self, lambda: &Coeff) -> Poly {
        let mut out = Poly::zero(self.nvars).with_base(self.base);
        let d = self.degree().max(0) as usize;
        let mut pw = Vec::with_capacity(d + 1);
        pw.push(Coeff::one());
        for _ in 0..d {
            pw.push(pw.last().unwrap().mul(lambda));
        }
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(&pw[m.degree() as usize]));
        }
        out
    }

    /// Reindex variables: slot `j` of the result is slot `perm[j]` of `self`.
    pub fn permute_variables(&self, perm: &[usize]) -> Poly {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Poly::zero(self.nvars).with_base(self.base);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; self.nvars];
            for (j, &src) in perm.iter().enumerate() {
                e[j] = m.0[src];
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn to_float(&self) -> Poly {
        let mut out = Poly::zero(self.nvars).with_base(self.base);
        out.domain = Domain::Float;
        for (m, c) in &self.terms {
            out.add_term(m.clone(), Coeff::F64(c.to_f64()));
        }
        out
    }

    /// Largest absolute value of any coefficient, as a float.
    pub fn max_coeff_abs(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.abs_bound())
            .fold(0.0, f64::max)
    }

    fn var_name(&self, slot: usize) -> String {
        format!("x{}", slot + self.base as usize)
    }
}

pub(crate) fn binomial(n: u32, k: u32) -> BigRational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k.min(n - k) {
        num *= BigInt::from(n - j);
        den *= BigInt::from(j + 1);
    }
    BigRational::new(num, den)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0/1");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.sign() == Ordering::Less;
            let mag = if neg { c.neg() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag_str = mag.to_string();
            let compound = mag_str.contains('+') || mag_str.contains("-");
            if m.is_constant() {
                if compound {
                    write!(f, "({mag_str})")?;
                } else {
                    write!(f, "{mag_str}")?;
                }
            } else {
                if compound {
                    write!(f, "({mag_str})*")?;
                } else {
                    write!(f, "{mag_str}*")?;
                }
                let mut sep = "";
                for (j, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    write!(f, "{sep}{}", self.var_name(j))?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                    sep = "*";
                }
            }
        }
        Ok(())
    }
}

/// Univariate polynomial, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly {
    coeffs: Vec<Coeff>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![Coeff::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; -1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Coeff {
        self.coeffs.get(k).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn leading(&self) -> Coeff {
        self.coeffs.last().cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn domain(&self) -> Domain {
        self.coeffs
            .iter()
            .fold(Domain::Rational, |d, c| d.join(c.domain()).unwrap_or(Domain::Float))
    }

    pub fn evaluate(&self, t: &Coeff) -> Coeff {
        let mut acc = Coeff::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(t).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul(&Coeff::from_i64(k as i64)))
                .collect(),
        )
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k).sub(&other.coeff(k)));
        }
        UniPoly::new(v)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Coeff::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(v)
    }

    pub fn scale(&self, s: &Coeff) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    /// Euclidean remainder over the coefficient field.
    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        let dl = divisor.leading();
        let dd = divisor.degree();
        while !r.is_zero() && r.degree() >= dd {
            let shift = (r.degree() - dd) as usize;
            let factor = r.leading().div(&dl);
            // r -= factor * t^shift * divisor
            let mut v = r.coeffs.clone();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                v[j + shift] = v[j + shift].sub(&factor.mul(c));
            }
            // the leading term cancels exactly
            v[r.coeffs.len() - 1] = Coeff::zero();
            r = UniPoly::new(v);
        }
        r
    }

    /// Monic gcd over the coefficient field (exact domains).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        a.scale(&lead.inv())
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64()).collect()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0/1");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == Ordering::Less;
            let mag = if neg { c.neg() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*t")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Multivariate polynomial with complex coefficients; internal support for
/// symbolic pencil determinants.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct PolyC {
    pub nvars: usize,
    pub terms: BTreeMap<Monomial, CCoeff>,
}

impl PolyC {
    pub fn zero(nvars: usize) -> Self {
        PolyC {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: CCoeff) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::constant(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, CCoeff::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Monomial, c: CCoeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn sub(&self, other: &PolyC) -> PolyC {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &PolyC) -> PolyC {
        let mut out = PolyC::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    /// Exact division: `self = q * divisor` must hold. In float mode small
    /// residues are discarded; in exact mode a nonzero remainder panics,
    /// which would indicate a broken fraction-free elimination invariant.
    pub fn div_exact(&self, divisor: &PolyC, float_mode: bool) -> PolyC {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut q = PolyC::zero(self.nvars);
        let (lm, lc) = divisor
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let scale = self.max_abs();
        while !rem.is_zero() {
            let (m, c) = rem
                .terms
                .iter()
                .next_back()
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap();
            if float_mode && c.abs_f64() <= 1e-10 * scale.max(1.0) {
                rem.terms.remove(&m);
                continue;
            }
            if !lm.divides(&m) {
                if float_mode {
                    rem.terms.remove(&m);
                    continue;
                }
                panic!("inexact polynomial division in fraction-free elimination");
            }
            let qm = m.div(&lm);
            let qc = c.div(&lc);
            q.add_term(qm.clone(), qc.clone());
            let mut piece = PolyC::zero(self.nvars);
            piece.add_term(qm, qc);
            rem = rem.sub(&piece.mul(divisor));
            // guard: leading term must have cancelled
            debug_assert!(!rem.terms.contains_key(&m) || float_mode);
            if float_mode {
                rem.terms.remove(&m);
            }
        }
        q
    }

    pub fn max_abs(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.abs_f64())
            .fold(0.0, f64::max)
    }

    pub fn prune_float_noise(&mut self, tol: f64) {
        let scale = self.max_abs().max(1.0);
        self.terms.retain(|_, c| c.abs_f64() > tol * scale);
    }

    /// Split into real and imaginary parts as real polynomials.
    pub fn real_imag(&self, domain_hint: Domain, base: u8) -> (Poly, Poly) {
        let mut re = Poly::zero(self.nvars).with_base(base);
        let mut im = Poly::zero(self.nvars).with_base(base);
        re.domain = domain_hint;
        im.domain = domain_hint;
        for (m, c) in &self.terms {
            re.add_term(m.clone(), c.re.clone());
            im.add_term(m.clone(), c.im.clone());
        }
        (re, im)
    }
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Float(f64),
    Sqrt(u32),
    Var(u32),
    Alias(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    fn tokens(&mut self) -> Result<Vec<(usize, Tok)>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let start = self.pos;
            let c = self.src[self.pos];
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.pos += 1;
                }
                b'+' => {
                    self.pos += 1;
                    out.push((start, Tok::Plus));
                }
                b'-' => {
                    self.pos += 1;
                    out.push((start, Tok::Minus));
                }
                b'*' => {
                    self.pos += 1;
                    out.push((start, Tok::Star));
                }
                b'/' => {
                    self.pos += 1;
                    out.push((start, Tok::Slash));
                }
                b'^' => {
                    self.pos += 1;
                    out.push((start, Tok::Caret));
                }
                b'(' => {
                    self.pos += 1;
                    out.push((start, Tok::LParen));
                }
                b')' => {
                    self.pos += 1;
                    out.push((start, Tok::RParen));
                }
                b'0'..=b'9' | b'.' => {
                    out.push((start, self.number()?));
                }
                _ if c.is_ascii_alphabetic() => {
                    let mut end = self.pos;
                    while end < self.src.len()
                        && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                    {
                        end += 1;
                    }
                    let word = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                    self.pos = end;
                    match word {
                        "sqrt" => {
                            // expect (integer)
                            self.skip_ws();
                            if self.pos >= self.src.len() || self.src[self.pos] != b'(' {
                                return Err(self.error(self.pos, "expected `(` after sqrt"));
                            }
                            self.pos += 1;
                            self.skip_ws();
                            let mstart = self.pos;
                            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit()
                            {
                                self.pos += 1;
                            }
                            if mstart == self.pos {
                                return Err(self.error(mstart, "expected integer inside sqrt()"));
                            }
                            let m: u32 = std::str::from_utf8(&self.src[mstart..self.pos])
                                .unwrap()
                                .parse()
                                .map_err(|_| self.error(mstart, "radical too large"))?;
                            self.skip_ws();
                            if self.pos >= self.src.len() || self.src[self.pos] != b')' {
                                return Err(self.error(self.pos, "expected `)` after sqrt radical"));
                            }
                            self.pos += 1;
                            if !is_squarefree(m) {
                                return Err(self.error(
                                    mstart,
                                    format!("sqrt({m}) requires a square-free integer >= 2"),
                                ));
                            }
                            out.push((start, Tok::Sqrt(m)));
                        }
                        "x" => out.push((start, Tok::Alias(0))),
                        "y" => out.push((start, Tok::Alias(1))),
                        "z" => out.push((start, Tok::Alias(2))),
                        "a" => out.push((start, Tok::Alias(0))),
                        "b" => out.push((start, Tok::Alias(1))),
                        "c" => out.push((start, Tok::Alias(2))),
                        _ => {
                            if let Some(rest) = word.strip_prefix('x') {
                                if let Ok(idx) = rest.parse::<u32>() {
                                    out.push((start, Tok::Var(idx)));
                                    continue;
                                }
                            }
                            return Err(Error::UnknownVariable {
                                name: word.to_string(),
                                pos: start,
                            });
                        }
                    }
                }
                _ => {
                    return Err(self.error(start, format!("unexpected character `{}`", c as char)))
                }
            }
        }
        Ok(out)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Result<Tok> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let mut saw_dot = false;
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            saw_dot = true;
            self.pos += 1;
            let frac_start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if frac_start == start + 1 && self.pos == frac_start {
                return Err(self.error(start, "malformed number"));
            }
        }
        // an exponent suffix makes the literal a float
        if self.pos < self.src.len() && (self.src[self.pos] == b'e' || self.src[self.pos] == b'E')
        {
            let mut probe = self.pos + 1;
            if probe < self.src.len() && (self.src[probe] == b'+' || self.src[probe] == b'-') {
                probe += 1;
            }
            let digits_start = probe;
            while probe < self.src.len() && self.src[probe].is_ascii_digit() {
                probe += 1;
            }
            if probe > digits_start {
                self.pos = probe;
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let x: f64 = text
                    .parse()
                    .map_err(|_| self.error(start, "malformed float literal"))?;
                return Ok(Tok::Float(x));
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        if saw_dot {
            // decimal literal: exact rational value
            let dot = text.find('.').unwrap();
            let int_part = &text[..dot];
            let frac_part = &text[dot + 1..];
            let mut num: BigInt = if int_part.is_empty() {
                BigInt::zero()
            } else {
                int_part.parse().unwrap()
            };
            let mut den = BigInt::one();
            for ch in frac_part.bytes() {
                num = num * 10 + BigInt::from((ch - b'0') as i64);
                den *= BigInt::from(10);
            }
            return Ok(Tok::Num(BigRational::new(num, den)));
        }
        let n: BigInt = text
            .parse()
            .map_err(|_| self.error(start, "malformed integer"))?;
        Ok(Tok::Num(BigRational::from_integer(n)))
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    nvars: usize,
    base: u8,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks
            .get(self.idx)
            .map(|(p, _)| *p)
            .unwrap_or(usize::MAX)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos().min(1 << 20),
            msg: msg.into(),
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.factor()?)?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let rhs = self.factor()?;
                    if rhs.degree() > 0 {
                        return Err(self.err("division by a non-constant is not supported"));
                    }
                    let c = rhs.constant_term();
                    if c.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.scale(&c.inv());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.factor()?.neg())
            }
            _ => {
                let base = self.atom()?;
                if let Some(Tok::Caret) = self.peek() {
                    self.bump();
                    let e = match self.bump() {
                        Some(Tok::Num(n)) if n.is_integer() && !n.is_negative() => {
                            n.to_integer().to_u32().ok_or_else(|| {
                                self.err("exponent too large")
                            })?
                        }
                        _ => return Err(self.err("expected a nonnegative integer exponent")),
                    };
                    return base.pow(e);
                }
                Ok(base)
            }
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Poly::constant(self.nvars, Coeff::Rat(n)).with_base(self.base)),
            Some(Tok::Float(x)) => {
                Ok(Poly::constant(self.nvars, Coeff::F64(x)).with_base(self.base))
            }
            Some(Tok::Sqrt(m)) => {
                Ok(Poly::constant(self.nvars, Coeff::sqrt_m(m)).with_base(self.base))
            }
            Some(Tok::Var(raw)) => {
                let slot = (raw as i64) - (self.base as i64);
                if slot < 0 || slot as usize >= self.nvars {
                    return Err(Error::UnknownVariable {
                        name: format!("x{raw}"),
                        pos,
                    });
                }
                Ok(Poly::var(self.nvars, slot as usize).with_base(self.base))
            }
            Some(Tok::Alias(slot)) => {
                if self.nvars > 3 || slot >= self.nvars {
                    return Err(Error::UnknownVariable {
                        name: format!("alias #{slot}"),
                        pos,
                    });
                }
                Ok(Poly::var(self.nvars, slot).with_base(self.base))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err("expected `)`")),
                }
            }
            _ => Err(self.err("expected a number, variable, sqrt(), or parenthesized expression")),
        }
    }
}

/// Parse an arithmetic expression into canonical expanded sparse form.
///
/// Variables are `x0..` or `x1..` (inferred: the presence of `x0` selects the
/// 0-based convention); the aliases `x,y,z` / `a,b,c` address the first three
/// slots when `nvars <= 3`.
pub fn parse(text: &str, nvars: usize) -> Result<Poly> {
    let toks = Lexer::new(text).tokens()?;
    let has_x0 = toks.iter().any(|(_, t)| matches!(t, Tok::Var(0)));
    let base = if has_x0 { 0 } else { 1 };
    let mut parser = Parser {
        toks,
        idx: 0,
        nvars,
        base,
    };
    let p = parser.expr()?;
    if parser.idx != parser.toks.len() {
        return Err(parser.err("trailing input after expression"));
    }
    Ok(p)
}

/// Parse a standalone coefficient literal (no variables), e.g. `-3/4` or
/// `1/2+1/1*sqrt(2)`.
pub fn parse_coeff_literal(text: &str) -> Result<Coeff> {
    let trimmed = text.trim();
    if trimmed.contains(|c: char| c == '.' || c == 'e' || c == 'E')
        && !trimmed.contains("sqrt")
        && trimmed.parse::<f64>().is_ok()
    {
        return Ok(Coeff::F64(trimmed.parse::<f64>().unwrap()));
    }
    let p = parse(trimmed, 0)?;
    Ok(p.constant_term())
}

pub fn rational_from_parts(n: i64, d: i64) -> Coeff {
    Coeff::Rat(rat_i64(n).div(&rat_i64(d)).clone())
}

trait RatDiv {
    fn div(&self, other: &BigRational) -> BigRational;
}

impl RatDiv for BigRational {
    fn div(&self, other: &BigRational) -> BigRational {
        self / other
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn c(n: i64) -> Coeff {
        Coeff::from_i64(n)
    }

    #[test]
    fn parse_simple_circle() {
        let p = parse("1 - x1^2 - x2^2", 2).unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(p.coeff(&Monomial(vec![2, 0])), c(-1));
        assert_eq!(p.coeff(&Monomial(vec![0, 2])), c(-1));
        assert_eq!(p.constant_term(), c(1));
        assert_eq!(p.term_count(), 3);
        assert_eq!(p.index_base(), 1);
    }

    #[test]
    fn parse_sqrt_expansion() {
        // (x1+sqrt(2))^2 - x2^2 - 1 = 1 + 2 sqrt(2) x1 + x1^2 - x2^2
        let p = parse("(x1+sqrt(2))^2 - x2^2 - 1", 2).unwrap();
        assert_eq!(p.constant_term(), c(1));
        assert_eq!(
            p.coeff(&Monomial(vec![1, 0])),
            Coeff::quad(rat(0, 1), rat(2, 1), 2)
        );
        assert_eq!(p.coeff(&Monomial(vec![2, 0])), c(1));
        assert_eq!(p.coeff(&Monomial(vec![0, 2])), c(-1));
        assert_eq!(p.domain(), Domain::Quad(2));
    }

    #[test]
    fn parse_aliases() {
        let p = parse("1 - a^4 - b^4", 2).unwrap();
        assert_eq!(p.constant_term(), c(1));
        assert_eq!(p.coeff(&Monomial(vec![4, 0])), c(-1));
        assert_eq!(p.coeff(&Monomial(vec![0, 4])), c(-1));
        assert_eq!(p.term_count(), 3);
    }

    #[test]
    fn parse_x0_selects_zero_base() {
        let p = parse("(x0+1)^2 - x1^2", 2).unwrap();
        assert_eq!(p.index_base(), 0);
        assert_eq!(p.coeff(&Monomial(vec![1, 0])), c(2));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse("1 + x5", 2),
            Err(Error::UnknownVariable { .. })
        ));
        assert!(parse("1 + + 2", 1).is_err());
        assert!(parse("sqrt(4)", 1).is_err()); // not square-free
        // mixed radicals are a domain error
        assert!(parse("sqrt(2) + sqrt(3)", 1).is_err());
    }

    #[test]
    fn print_parse_roundtrip_is_fixed_point() {
        for text in [
            "1 - x1^2 - x2^2",
            "(x1+sqrt(2))^2 - x2^2 - 1",
            "1 + 1/2*x1*x2 - 7/3*x2^3",
            "(x0+1)^2 - x1^2 - x2^2",
        ] {
            let p = parse(text, 3).unwrap();
            let s1 = p.to_string();
            let q = parse(&s1, 3).unwrap();
            assert_eq!(p, q);
            assert_eq!(s1, q.to_string());
        }
    }

    #[test]
    fn evaluate_examples() {
        let p = parse("1 - x1^2 - x2^2", 2).unwrap();
        assert_eq!(p.evaluate(&[c(0), c(0)]).unwrap(), c(1));
        assert_eq!(p.evaluate(&[c(1), c(0)]).unwrap(), c(0));
        let q = parse("(x0+1)^2 - x1^2", 2).unwrap();
        assert_eq!(q.evaluate(&[c(1), c(1)]).unwrap(), c(3));
        assert!(p.evaluate(&[c(0)]).is_err());
    }

    #[test]
    fn restrict_examples() {
        let p = parse("1 - x1^2 - x2^2 - x3^2", 3).unwrap();
        let u = p.restrict(&[c(1), c(0), c(0)]).unwrap();
        assert_eq!(u.degree(), 2);
        assert_eq!(u.coeff(0), c(1));
        assert_eq!(u.coeff(2), c(-1));

        // degree drop: 1 + 2 sqrt2 x1 + x1^2 - x2^2 at direction (1,1)
        let p2 = parse("(x1+sqrt(2))^2 - x2^2 - 1", 2).unwrap();
        let u2 = p2.restrict(&[c(1), c(1)]).unwrap();
        assert_eq!(u2.degree(), 1);
        assert_eq!(u2.coeff(1), Coeff::quad(rat(0, 1), rat(2, 1), 2));

        // zero direction gives the constant p(0)
        let u3 = p2.restrict(&[c(0), c(0)]).unwrap();
        assert_eq!(u3.degree(), 0);
        assert_eq!(u3.coeff(0), c(1));
    }

    #[test]
    fn homogenize_examples() {
        let p = parse("1 - x1^2", 1).unwrap();
        let h = p.homogenize().unwrap();
        assert_eq!(h, parse("x0^2 - x1^2", 2).unwrap());

        let p2 = parse("1 - x1^2 - x2^2", 2).unwrap();
        assert_eq!(
            p2.homogenize().unwrap(),
            parse("x0^2 - x1^2 - x2^2", 3).unwrap()
        );

        let p3 = parse("1 + x1 + x1*x2", 2).unwrap();
        assert_eq!(
            p3.homogenize().unwrap(),
            parse("x0^2 + x0*x1 + x1*x2", 3).unwrap()
        );
        assert!(Poly::zero(2).homogenize().is_err());
    }

    #[test]
    fn shifted_homogenize_examples() {
        let p3 = parse("1 - x1^2 - x2^2 - x3^2", 3).unwrap();
        let sh = p3.shifted_homogenize().unwrap();
        assert_eq!(sh, parse("(x0+1)^2 - x1^2 - x2^2 - x3^2", 4).unwrap());
        assert_eq!(sh.constant_term(), c(1));
        assert_eq!(sh.degree(), 2);
        // restriction to x0 = 0 recovers p
        assert_eq!(sh.set_slot_zero(0), p3);

        let lin = parse("1 - x1", 1).unwrap();
        assert_eq!(
            lin.shifted_homogenize().unwrap(),
            parse("1 + x0 - x1", 2).unwrap()
        );

        let p4 = parse("1 - x1^2 - x2^2 - x3^2 - x4^2", 4).unwrap();
        assert_eq!(
            p4.shifted_homogenize().unwrap(),
            parse("(x0+1)^2 - x1^2 - x2^2 - x3^2 - x4^2", 5).unwrap()
        );

        // precondition: p(0) = 1
        assert!(parse("2 - x1", 1).unwrap().shifted_homogenize().is_err());
    }

    #[test]
    fn multiply_power_examples() {
        let a = parse("1 - x1", 1).unwrap();
        let b = parse("1 + x1", 1).unwrap();
        assert_eq!(a.mul(&b).unwrap(), parse("1 - x1^2", 1).unwrap());

        let p = parse("1 - x1^2 - x2^2", 2).unwrap();
        let sq = p.pow(2).unwrap();
        let expected = parse(
            "1 - 2*x1^2 - 2*x2^2 + x1^4 + 2*x1^2*x2^2 + x2^4",
            2,
        )
        .unwrap();
        assert_eq!(sq, expected);

        assert_eq!(p.mul(&Poly::one(2)).unwrap(), p);
    }

    #[test]
    fn grlex_print_order() {
        let p = parse("x2^2 - x1^2 + 1 + 2*sqrt(2)*x1", 2).unwrap();
        assert_eq!(p.to_string(), "1/1 + 2/1*sqrt(2)*x1 - 1/1*x1^2 + 1/1*x2^2");
    }

    #[test]
    fn float_literals_roundtrip() {
        let p = parse("1 - 0.5*x1 + 2.25e-3*x2", 2).unwrap();
        assert_eq!(p.coeff(&Monomial(vec![0, 1])), Coeff::F64(2.25e-3));
        // decimals without exponent stay exact
        assert_eq!(p.coeff(&Monomial(vec![1, 0])), Coeff::from_rat(-1, 2));
        // a printed float polynomial reparses to the same values (the file
        // reader coerces to the header domain)
        let q = parse("1 - x1^2", 1).unwrap().to_float();
        let text = q.to_string();
        let back = parse(&text, 1).unwrap().to_float();
        assert_eq!(q, back);
        assert!(parse("1 + 1e-15*x1", 1).is_ok());
    }

    #[test]
    fn unipoly_gcd_and_rem() {
        // (t^2 - 1) and (t - 1): gcd = t - 1 (monic)
        let a = UniPoly::new(vec![c(-1), c(0), c(1)]);
        let b = UniPoly::new(vec![c(-1), c(1)]);
        let g = a.gcd(&b);
        assert_eq!(g, UniPoly::new(vec![c(-1), c(1)]));
        let r = a.rem(&b);
        assert!(r.is_zero());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(nvars: usize) -> impl Strategy<Value = Poly> {
            proptest::collection::vec(
                (
                    proptest::collection::vec(0u32..4, nvars),
                    -9i64..10,
                    1i64..5,
                ),
                0..6,
            )
            .prop_map(move |terms| {
                let mut p = Poly::zero(nvars);
                for (e, num, den) in terms {
                    p.add_term(Monomial(e), Coeff::from_rat(num, den));
                }
                p
            })
        }

        proptest! {
            #[test]
            fn distributivity(p in arb_poly(3), q in arb_poly(3), r in arb_poly(3)) {
                let lhs = p.add(&q).unwrap().mul(&r).unwrap();
                let rhs = p.mul(&r).unwrap().add(&q.mul(&r).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn print_parse_fixed_point(p in arb_poly(3)) {
                let s = p.to_string();
                let q = parse(&s, 3).unwrap();
                prop_assert_eq!(&p, &q);
                prop_assert_eq!(s, q.to_string());
            }

            #[test]
            fn restriction_degree_never_grows(p in arb_poly(3), a0 in -5i64..6, a1 in -5i64..6, a2 in -5i64..6) {
                let a = [Coeff::from_i64(a0), Coeff::from_i64(a1), Coeff::from_i64(a2)];
                let u = p.restrict(&a).unwrap();
                prop_assert!(u.degree() <= p.degree().max(0));
                prop_assert_eq!(u.evaluate(&Coeff::zero()), p.constant_term());
            }
        }
    }

    #[test]
    fn restrict_commutes_with_evaluation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let p = parse("1 + x1 - 2*x1*x2 + x2^3 - x3^2*x1", 3).unwrap();
        for _ in 0..100 {
            let a: Vec<Coeff> = (0..3)
                .map(|_| Coeff::from_rat(rng.random_range(-6..7), rng.random_range(1..5)))
                .collect();
            let t = Coeff::from_rat(rng.random_range(-6..7), rng.random_range(1..5));
            let lhs = p.restrict(&a).unwrap().evaluate(&t);
            let scaled: Vec<Coeff> = a.iter().map(|ai| ai.mul(&t)).collect();
            let rhs = p.evaluate(&scaled).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn shifted_homogenize_identity_at_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let p = parse("1 + x1 - 2*x1*x2 + 3*x2^2", 2).unwrap();
        let sh = p.shifted_homogenize().unwrap();
        let d = p.degree() as u32;
        for _ in 0..50 {
            let x0 = loop {
                let v = Coeff::from_rat(rng.random_range(-6..7), rng.random_range(1..5));
                if !v.add(&Coeff::one()).is_zero() {
                    break v;
                }
            };
            let x: Vec<Coeff> = (0..2)
                .map(|_| Coeff::from_rat(rng.random_range(-6..7), rng.random_range(1..5)))
                .collect();
            let mut pt = vec![x0.clone()];
            pt.extend(x.iter().cloned());
            let lhs = sh.evaluate(&pt).unwrap();
            let s = x0.add(&Coeff::one());
            let scaled: Vec<Coeff> = x.iter().map(|xi| xi.div(&s)).collect();
            let mut spow = Coeff::one();
            for _ in 0..d {
                spow = spow.mul(&s);
            }
            let rhs = spow.mul(&p.evaluate(&scaled).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
