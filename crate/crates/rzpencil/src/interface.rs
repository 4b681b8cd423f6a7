//! Text file formats, transcripts, and the registry of built-in example
//! objects.
//!
//! Polynomial file:
//! ```text
//! poly nvars=<n> domain=<rational|sqrt:<m>|float>
//! <expression>
//! ```
//!
//! Pencil file:
//! ```text
//! pencil nvars=<n> size=<k> domain=<...> symmetry=<hermitian|symmetric>
//! <k lines of k entries for each coefficient matrix, blocks in variable order>
//! ```
//! Entries are separated by runs of two or more spaces. An entry is `re` or
//! `re+im i` / `re-im i`; a part that itself contains a sum (a rational plus
//! a radical term) is parenthesized. Hermitianity is validated on load.
//!
//! Transcripts are line-oriented `key: value` records; seeds, tolerances and
//! mode tags always appear so runs can be reproduced and parsed.

use crate::clifford::{self, Variant};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::obstruction::ObstructionReport;
use crate::pencil::{arrowhead_pencil, Pencil, Symmetry};
use crate::polynomial::{self, Monomial, Poly};
use crate::scalar::{CCoeff, Coeff, Domain};
use std::fmt::Write as _;

// ---------------------------------------------------------------------------
// Transcripts
// ---------------------------------------------------------------------------

/// Line-oriented `key: value` record emitted by every CLI operation.
#[derive(Debug, Clone, Default)]
pub struct Transcript {
    pub lines: Vec<(String, String)>,
}

impl Transcript {
    pub fn new() -> Self {
        Transcript::default()
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn parse(text: &str) -> Transcript {
        let mut t = Transcript::new();
        for line in text.lines() {
            if let Some((k, v)) = line.split_once(':') {
                t.push(k.trim(), v.trim());
            }
        }
        t
    }
}

impl std::fmt::Display for Transcript {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, v) in &self.lines {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Polynomial files
// ---------------------------------------------------------------------------

fn parse_header(line: &str, expected_kind: &str) -> Result<Vec<(String, String)>> {
    let mut parts = line.split_whitespace();
    let kind = parts.next().unwrap_or_default();
    if kind != expected_kind {
        return Err(Error::Format(format!(
            "expected `{expected_kind}` header, found `{kind}`"
        )));
    }
    let mut fields = Vec::new();
    for tok in parts {
        let Some((k, v)) = tok.split_once('=') else {
            return Err(Error::Format(format!("malformed header field `{tok}`")));
        };
        fields.push((k.to_string(), v.to_string()));
    }
    Ok(fields)
}

fn lookup<'a>(fields: &'a [(String, String)], key: &str) -> Result<&'a str> {
    fields
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_str())
        .ok_or_else(|| Error::Format(format!("missing header field `{key}`")))
}

fn parse_domain(text: &str) -> Result<Domain> {
    if text == "rational" {
        return Ok(Domain::Rational);
    }
    if text == "float" {
        return Ok(Domain::Float);
    }
    if let Some(m) = text.strip_prefix("sqrt:") {
        let m: u32 = m
            .parse()
            .map_err(|_| Error::Format(format!("bad radical in domain `{text}`")))?;
        if !crate::scalar::is_squarefree(m) {
            return Err(Error::Format(format!(
                "domain radical {m} must be square-free and >= 2"
            )));
        }
        return Ok(Domain::Quad(m));
    }
    Err(Error::Format(format!("unknown domain `{text}`")))
}

pub fn write_poly_file(p: &Poly) -> String {
    format!("poly nvars={} domain={}\n{}\n", p.nvars(), p.domain(), p)
}

pub fn read_poly_file(text: &str) -> Result<Poly> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("empty polynomial file".into()))?;
    let fields = parse_header(header, "poly")?;
    let nvars: usize = lookup(&fields, "nvars")?
        .parse()
        .map_err(|_| Error::Format("bad nvars".into()))?;
    let domain = parse_domain(lookup(&fields, "domain")?)?;
    let expr = lines.collect::<Vec<_>>().join(" ");
    if expr.trim().is_empty() {
        return Err(Error::Format("missing polynomial expression".into()));
    }
    let p = polynomial::parse(&expr, nvars)?;
    match domain {
        Domain::Float => Ok(p.to_float()),
        d => {
            p.domain().join(d)?;
            Ok(p)
        }
    }
}

// ---------------------------------------------------------------------------
// Pencil files
// ---------------------------------------------------------------------------

fn part_needs_parens(s: &str) -> bool {
    let b = s.as_bytes();
    let mut depth = 0usize;
    for (i, &c) in b.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > 0 => {
                let prev = b[i - 1];
                if prev.is_ascii_digit() || prev == b')' {
                    return true;
                }
            }
            _ => {}
        }
    }
    false
}

fn wrap(s: String) -> String {
    if part_needs_parens(&s) {
        format!("({s})")
    } else {
        s
    }
}

pub fn format_entry(e: &CCoeff) -> String {
    if e.im.is_zero() {
        return e.re.to_string();
    }
    let re = wrap(e.re.to_string());
    let (sign, mag) = match e.im.sign() {
        std::cmp::Ordering::Less => ('-', e.im.neg()),
        _ => ('+', e.im.clone()),
    };
    format!("{re}{sign}{} i", wrap(mag.to_string()))
}

/// Split an entry into real and imaginary literal texts.
fn split_entry(entry: &str) -> Result<(String, Option<(char, String)>)> {
    let trimmed = entry.trim();
    let Some(body) = trimmed.strip_suffix(" i") else {
        return Ok((trimmed.to_string(), None));
    };
    let b = body.as_bytes();
    let mut depth = 0usize;
    let mut split_at = None;
    for (i, &c) in b.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > 0 => {
                let prev = b[i - 1];
                if prev.is_ascii_digit() || prev == b')' {
                    split_at = Some(i);
                }
            }
            _ => {}
        }
    }
    match split_at {
        Some(i) => Ok((
            body[..i].to_string(),
            Some((b[i] as char, body[i + 1..].to_string())),
        )),
        None => Ok(("0/1".to_string(), Some(('+', body.to_string())))),
    }
}

fn strip_outer_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') {
        // only strip when the parens actually match across the whole literal
        let inner = &t[1..t.len() - 1];
        let mut depth = 0i32;
        for c in inner.bytes() {
            match c {
                b'(' => depth += 1,
                b')' => depth -= 1,
                _ => {}
            }
            if depth < 0 {
                return t;
            }
        }
        if depth == 0 {
            return inner;
        }
    }
    t
}

pub fn parse_entry(entry: &str) -> Result<CCoeff> {
    let (re_text, im_part) = split_entry(entry)?;
    let re = polynomial::parse_coeff_literal(strip_outer_parens(&re_text))?;
    let im = match im_part {
        None => Coeff::zero(),
        Some((sign, text)) => {
            let v = polynomial::parse_coeff_literal(strip_outer_parens(&text))?;
            if sign == '-' {
                v.neg()
            } else {
                v
            }
        }
    };
    Ok(CCoeff::new(re, im))
}

pub fn write_pencil_file(p: &Pencil) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "pencil nvars={} size={} domain={} symmetry={} indexing=x{}",
        p.nvars(),
        p.size(),
        p.domain(),
        p.symmetry(),
        p.index_base()
    );
    for v in 0..p.nvars() {
        for i in 0..p.size() {
            let row: Vec<String> = (0..p.size())
                .map(|j| format_entry(p.mat(v).at(i, j)))
                .collect();
            let _ = writeln!(out, "{}", row.join("  "));
        }
        if v + 1 < p.nvars() {
            let _ = writeln!(out);
        }
    }
    out
}

pub fn read_pencil_file(text: &str) -> Result<Pencil> {
    let mut lines = text.lines();
    let header = loop {
        match lines.next() {
            Some(l) if l.trim().is_empty() => continue,
            Some(l) => break l,
            None => return Err(Error::Format("empty pencil file".into())),
        }
    };
    let fields = parse_header(header, "pencil")?;
    let nvars: usize = lookup(&fields, "nvars")?
        .parse()
        .map_err(|_| Error::Format("bad nvars".into()))?;
    let size: usize = lookup(&fields, "size")?
        .parse()
        .map_err(|_| Error::Format("bad size".into()))?;
    let domain = parse_domain(lookup(&fields, "domain")?)?;
    let symmetry = match lookup(&fields, "symmetry")? {
        "hermitian" => Symmetry::Hermitian,
        "symmetric" => Symmetry::RealSymmetric,
        other => return Err(Error::Format(format!("unknown symmetry `{other}`"))),
    };
    let rows: Vec<&str> = lines.filter(|l| !l.trim().is_empty()).collect();
    if rows.len() != nvars * size {
        return Err(Error::Format(format!(
            "expected {} matrix rows, found {}",
            nvars * size,
            rows.len()
        )));
    }
    let mut mats = Vec::with_capacity(nvars);
    for v in 0..nvars {
        let mut m = Mat::zeros(size, size);
        for i in 0..size {
            let line = rows[v * size + i];
            let entries = split_row(line);
            if entries.len() != size {
                return Err(Error::Format(format!(
                    "row `{line}` has {} entries, expected {size} \
                     (entries are separated by two or more spaces)",
                    entries.len()
                )));
            }
            for (j, e) in entries.iter().enumerate() {
                let mut val = parse_entry(e)?;
                if domain == Domain::Float {
                    let (re, im) = val.to_complex_f64();
                    val = CCoeff::from_f64(re, im);
                }
                m.set(i, j, val);
            }
        }
        m.domain().join(domain)?;
        if !m.is_hermitian() {
            return Err(Error::Format(format!(
                "coefficient matrix {} is not hermitian",
                v + 1
            )));
        }
        mats.push(m);
    }
    let base = if fields.iter().any(|(k, v)| k == "indexing" && v == "x0") {
        0
    } else {
        1
    };
    Pencil::new(size, mats, symmetry, base)
}

fn split_row(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut space_run = 0usize;
    for c in line.trim().chars() {
        if c == ' ' {
            space_run += 1;
            if space_run >= 2 {
                if !cur.trim().is_empty() {
                    out.push(cur.trim().to_string());
                }
                cur.clear();
                continue;
            }
            cur.push(c);
        } else if c == '\t' {
            if !cur.trim().is_empty() {
                out.push(cur.trim().to_string());
            }
            cur.clear();
            space_run = 0;
        } else {
            space_run = 0;
            cur.push(c);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

// ---------------------------------------------------------------------------
// Obstruction report serialization
// ---------------------------------------------------------------------------

pub fn write_report(rep: &ObstructionReport) -> String {
    let mut t = Transcript::new();
    t.push("report", "obstruction");
    t.push("nvars", rep.nvars);
    t.push("degree", rep.degree);
    for h in &rep.hypotheses {
        t.push(
            &format!("hypothesis.{}", h.name),
            format!("{} ({})", h.status, h.detail),
        );
    }
    for (i, c) in rep.conclusions.iter().enumerate() {
        t.push(
            &format!("conclusion.{}", i + 1),
            format!(
                "subject={} kind={} claim={} mechanism={}",
                c.subject, c.kind, c.claim, c.mechanism
            ),
        );
    }
    if rep.conclusions.is_empty() {
        t.push("conclusion.none", "no mechanism applies in this range");
    }
    for (i, n) in rep.notes.iter().enumerate() {
        t.push(&format!("note.{}", i + 1), n);
    }
    t.to_string()
}

// ---------------------------------------------------------------------------
// Example registry
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub enum ExampleObject {
    Poly(Poly),
    Pencil(Pencil),
}

/// Names understood by [`example`]: `p<n>`, `ptilde<n>`, `q<n>`,
/// `arrowhead<n>` (optionally with an underscore before the number),
/// `p3-rep-1`, `p3-rep-2`, `bw5`, `bw5-standard`, `bw5-negated`, `ex57`,
/// `ex58`, `ex33`.
pub fn example_names() -> &'static [&'static str] {
    &[
        "p<n>",
        "ptilde<n>",
        "q<n>",
        "arrowhead<n>",
        "p3-rep-1",
        "p3-rep-2",
        "bw5",
        "bw5-standard",
        "bw5-negated",
        "ex57",
        "ex58",
        "ex33",
    ]
}

/// The unit-ball polynomial `1 - x1^2 - ... - xn^2`.
pub fn ball_poly(n: usize) -> Poly {
    let mut p = Poly::one(n);
    for j in 0..n {
        let mut e = vec![0u32; n];
        e[j] = 2;
        p.add_term(Monomial(e), Coeff::from_i64(-1));
    }
    p
}

/// The two-sheeted hyperboloid polynomial `(x1 + sqrt 2)^2 - x2^2 - ... -
/// xn^2 - 1`.
pub fn hyperboloid_poly(n: usize) -> Poly {
    let mut p = Poly::one(n);
    p.add_term(
        Monomial::var(n, 0),
        Coeff::quad(crate::scalar::rat_i64(0), crate::scalar::rat_i64(2), 2),
    );
    let mut e = vec![0u32; n];
    e[0] = 2;
    p.add_term(Monomial(e), Coeff::one());
    for j in 1..n {
        let mut e = vec![0u32; n];
        e[j] = 2;
        p.add_term(Monomial(e), Coeff::from_i64(-1));
    }
    p
}

fn grid(k: usize, entries: &[(i64, i64)]) -> Mat {
    Mat::from_int_grid(k, entries)
}

/// The 4x4 pencil whose determinant is the square of the 5-ball polynomial.
fn bw5_pencil(variant: Variant) -> Pencil {
    let m1 = grid(4, &[
        (0, 0), (1, 0), (0, 0), (0, 0),
        (1, 0), (0, 0), (0, 0), (0, 0),
        (0, 0), (0, 0), (0, 0), (1, 0),
        (0, 0), (0, 0), (1, 0), (0, 0),
    ]);
    let m2 = grid(4, &[
        (0, 0), (0, 0), (1, 0), (0, 0),
        (0, 0), (0, 0), (0, 0), (-1, 0),
        (1, 0), (0, 0), (0, 0), (0, 0),
        (0, 0), (-1, 0), (0, 0), (0, 0),
    ]);
    let m3 = grid(4, &[
        (0, 0), (0, 1), (0, 0), (0, 0),
        (0, -1), (0, 0), (0, 0), (0, 0),
        (0, 0), (0, 0), (0, 0), (0, 1),
        (0, 0), (0, 0), (0, -1), (0, 0),
    ]);
    let m4 = grid(4, &[
        (0, 0), (0, 0), (0, 1), (0, 0),
        (0, 0), (0, 0), (0, 0), (0, -1),
        (0, -1), (0, 0), (0, 0), (0, 0),
        (0, 0), (0, 1), (0, 0), (0, 0),
    ]);
    let m5 = grid(4, &[
        (1, 0), (0, 0), (0, 0), (0, 0),
        (0, 0), (-1, 0), (0, 0), (0, 0),
        (0, 0), (0, 0), (-1, 0), (0, 0),
        (0, 0), (0, 0), (0, 0), (1, 0),
    ]);
    let mut mats = vec![m1, m2, m3, m4, m5];
    if variant == Variant::Negated {
        mats = mats.iter().map(Mat::neg).collect();
    }
    Pencil::new(4, mats, Symmetry::Hermitian, 1).expect("fixture is hermitian")
}

/// The 4x4 pencil with determinant `q_5^2`: the previous pencil with
/// `sqrt(2) I` added to the first coefficient matrix.
fn hyperboloid5_pencil() -> Pencil {
    let bw = bw5_pencil(Variant::Standard);
    let mut mats: Vec<Mat> = bw.mats().to_vec();
    mats[0] = mats[0].add(&Mat::identity(4).scale_real(&Coeff::sqrt_m(2)));
    Pencil::new(4, mats, Symmetry::Hermitian, 1).expect("fixture is hermitian")
}

/// The 4x4 pencil with determinant `ptilde_4^2`: slot 0 carries the identity
/// and slots 1..4 carry the first four generators.
fn shifted_ball4_pencil() -> Pencil {
    let bw = bw5_pencil(Variant::Standard);
    let mut mats = vec![Mat::identity(4)];
    mats.extend(bw.mats()[..4].iter().cloned());
    Pencil::new(4, mats, Symmetry::Hermitian, 0).expect("fixture is hermitian")
}

/// The 2x2 hermitian representation of `ptilde_3`:
/// `[[1+x0+x1, x2+ix3], [x2-ix3, 1+x0-x1]]`.
fn shifted_ball3_pencil() -> Pencil {
    let m0 = grid(2, &[(1, 0), (0, 0), (0, 0), (1, 0)]);
    let m1 = grid(2, &[(1, 0), (0, 0), (0, 0), (-1, 0)]);
    let m2 = grid(2, &[(0, 0), (1, 0), (1, 0), (0, 0)]);
    let m3 = grid(2, &[(0, 0), (0, 1), (0, -1), (0, 0)]);
    Pencil::new(2, vec![m0, m1, m2, m3], Symmetry::Hermitian, 0).expect("fixture is hermitian")
}

pub fn example(name: &str) -> Result<ExampleObject> {
    let compact = name.trim().to_ascii_lowercase().replace('_', "");
    let fixed = match compact.as_str() {
        "p3-rep-1" => {
            let (r1, _) = crate::pencil::ball3_representations();
            Some(ExampleObject::Pencil(r1))
        }
        "p3-rep-2" => {
            let (_, r2) = crate::pencil::ball3_representations();
            Some(ExampleObject::Pencil(r2))
        }
        "bw5" | "bw5-standard" => Some(ExampleObject::Pencil(bw5_pencil(Variant::Standard))),
        "bw5-negated" => Some(ExampleObject::Pencil(bw5_pencil(Variant::Negated))),
        "ex57" => Some(ExampleObject::Pencil(hyperboloid5_pencil())),
        "ex58" => Some(ExampleObject::Pencil(shifted_ball4_pencil())),
        "ex33" => Some(ExampleObject::Pencil(shifted_ball3_pencil())),
        _ => None,
    };
    if let Some(obj) = fixed {
        return Ok(obj);
    }
    let numbered = |prefix: &str| -> Option<usize> {
        compact
            .strip_prefix(prefix)
            .and_then(|rest| rest.parse::<usize>().ok())
    };
    if let Some(n) = numbered("ptilde") {
        if n >= 1 {
            return Ok(ExampleObject::Poly(
                ball_poly(n).shifted_homogenize().expect("ball normalizes"),
            ));
        }
    } else if let Some(n) = numbered("p") {
        if n >= 1 {
            return Ok(ExampleObject::Poly(ball_poly(n)));
        }
    } else if let Some(n) = numbered("q") {
        if n >= 1 {
            return Ok(ExampleObject::Poly(hyperboloid_poly(n)));
        }
    } else if let Some(n) = numbered("arrowhead") {
        if n >= 1 {
            return Ok(ExampleObject::Pencil(arrowhead_pencil(n)));
        }
    }
    Err(Error::Format(format!(
        "unknown example `{name}`; known names: {}",
        example_names().join(", ")
    )))
}

/// Convenience: the clifford-pipeline pencil for a named quadratic.
pub fn construct_for(poly: &Poly, variant: Variant) -> Result<(Pencil, u32)> {
    let q = crate::realzero::quadratic_form(poly)?;
    let pencil = clifford::quadratic_pencil(&q, variant)?;
    Ok((pencil, clifford::representation_power(poly.nvars())))
}
