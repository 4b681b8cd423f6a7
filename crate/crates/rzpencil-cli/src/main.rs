//! Command line front end: real zero checks, determinants and identity
//! verification, membership, reductions, doubling, the quadratic
//! representation pipeline, equivalence tests, size bounds, obstruction
//! reports, compact counterexamples, and the example registry.
//!
//! Exit codes: 0 success/verified, 1 property fails/inequivalent,
//! 2 inconclusive/semidecision, 3 usage or format error.

use clap::{Parser, Subcommand, ValueEnum};
use rzpencil::clifford::{self, EquivVerdict, Variant};
use rzpencil::error::Error;
use rzpencil::interface::{self, ExampleObject, Transcript};
use rzpencil::obstruction::{self, HypothesisFlags, RepKind};
use rzpencil::pencil::{Pencil, Verdict};
use rzpencil::polynomial::{self, Poly};
use rzpencil::realzero::{self, RzMode, RzStrategy};
use rzpencil::reduction;
use rzpencil::scalar::Coeff;
use std::path::Path;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rzpencil",
    about = "Real zero polynomials, hermitian matrix pencils, determinantal representations",
    version
)]
struct Cli {
    /// Seed for all randomized checks (overrides RZPENCIL_SEED).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Symmetric,
    Hermitian,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Standard,
    Negated,
}

#[derive(Subcommand)]
enum Command {
    /// Test the real zero property (exact for quadratics, sampled otherwise).
    CheckRz {
        /// Polynomial file, registry name, or inline expression.
        input: String,
        /// Force the exact quadratic decision.
        #[arg(long)]
        exact: bool,
        /// Force sampling with this many seeded directions.
        #[arg(long)]
        sampled: Option<usize>,
        /// Variable count for inline expressions (inferred when omitted).
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Print the exact determinant, or verify det = target^power.
    Det {
        /// Pencil file or registry name.
        pencil: String,
        /// Expand the determinant symbolically (default when --verify absent).
        #[arg(long, conflicts_with = "verify")]
        exact: bool,
        /// Polynomial file, registry name, or expression to verify against.
        #[arg(long)]
        verify: Option<String>,
        /// Power r in det = target^r.
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Sample count for the verification.
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Spectrahedron or rigidly convex set membership at a point.
    Member {
        /// Pencil or polynomial (file, registry name, or expression).
        input: String,
        /// Comma-separated rational coordinates, e.g. `1,1/2,-3`.
        #[arg(long)]
        point: String,
    },
    /// Strip the common kernel, or split off the rank-d block with --cone.
    Reduce {
        pencil: String,
        /// Use the cone reduction to size d = deg det.
        #[arg(long)]
        cone: bool,
        /// Comma-separated direction hint for the cone search (repeatable).
        #[arg(long)]
        hint: Vec<String>,
        /// Write the reduced pencil here (stdout otherwise).
        #[arg(long)]
        out: Option<String>,
    },
    /// Real-symmetric doubling of size 2k with squared determinant.
    Double {
        pencil: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Determinantal representation of a power of a quadratic real zero
    /// polynomial, with verification transcript.
    ConstructQuadratic {
        /// Polynomial file, registry name, or expression (degree 2).
        input: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Standard)]
        variant: VariantArg,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Three-valued unitary equivalence test for two pencils.
    Equiv {
        pencil1: String,
        pencil2: String,
        /// Maximum trace-word length.
        #[arg(long, default_value_t = 6)]
        words: usize,
        /// Random words sampled beyond the deterministic enumeration.
        #[arg(long, default_value_t = 64)]
        trials: usize,
    },
    /// Size lower bounds for representations without full lines.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Nonexistence certificate for determinantal representations.
    Obstruct {
        input: String,
        /// Assert that the rigidly convex set contains no full line.
        #[arg(long)]
        assert_no_line: bool,
        /// Assert that the rigidly convex set contains a full-dimensional cone.
        #[arg(long)]
        assert_cone: bool,
        /// Sample count for hypothesis checks.
        #[arg(long, default_value_t = 128)]
        samples: usize,
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Multiply a shifted homogenization by a shifted ball: compact set,
    /// no representation in the same family.
    Counterexample {
        input: String,
        /// Ball radius parameter, a rational > 1.
        #[arg(long)]
        r: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Emit a built-in example object as a polynomial or pencil file.
    Examples {
        name: String,
        #[arg(long)]
        out: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli
        .seed
        .or_else(|| {
            std::env::var("RZPENCIL_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(rzpencil::DEFAULT_SEED);
    match run(cli.command, seed) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn infer_nvars(expr: &str) -> usize {
    // count x<k> tokens and aliases to guess the ambient dimension
    let mut max_index: i64 = -1;
    let mut has_x0 = false;
    let mut alias_max: i64 = -1;
    let bytes = expr.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let word = &expr[start..i];
            match word {
                "sqrt" => {}
                "x" | "a" => alias_max = alias_max.max(0),
                "y" | "b" => alias_max = alias_max.max(1),
                "z" | "c" => alias_max = alias_max.max(2),
                _ => {
                    if let Some(rest) = word.strip_prefix('x') {
                        if let Ok(idx) = rest.parse::<i64>() {
                            max_index = max_index.max(idx);
                            if idx == 0 {
                                has_x0 = true;
                            }
                        }
                    }
                }
            }
        } else {
            i += 1;
        }
    }
    if max_index >= 0 {
        if has_x0 {
            (max_index + 1) as usize
        } else {
            max_index as usize
        }
    } else if alias_max >= 0 {
        (alias_max + 1) as usize
    } else {
        1
    }
}

fn load_poly(input: &str, nvars: Option<usize>) -> Result<Poly, Error> {
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)
            .map_err(|e| Error::Format(format!("cannot read {input}: {e}")))?;
        return interface::read_poly_file(&text);
    }
    if let Ok(ExampleObject::Poly(p)) = interface::example(input) {
        return Ok(p);
    }
    let n = nvars.unwrap_or_else(|| infer_nvars(input));
    polynomial::parse(input, n)
}

fn load_pencil(input: &str) -> Result<Pencil, Error> {
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)
            .map_err(|e| Error::Format(format!("cannot read {input}: {e}")))?;
        return interface::read_pencil_file(&text);
    }
    match interface::example(input) {
        Ok(ExampleObject::Pencil(p)) => Ok(p),
        Ok(ExampleObject::Poly(_)) => Err(Error::Format(format!(
            "`{input}` names a polynomial, expected a pencil"
        ))),
        Err(e) => Err(e),
    }
}

fn parse_point(text: &str, n: usize) -> Result<Vec<Coeff>, Error> {
    let coords: Result<Vec<Coeff>, Error> = text
        .split(',')
        .map(|tok| polynomial::parse_coeff_literal(tok.trim()))
        .collect();
    let coords = coords?;
    if coords.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: coords.len(),
        });
    }
    Ok(coords)
}

fn emit(out: &Option<String>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::Format(format!("cannot write {path}: {e}"))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cmd: Command, seed: u64) -> Result<u8, Error> {
    match cmd {
        Command::CheckRz {
            input,
            exact,
            sampled,
            nvars,
        } => {
            let p = load_poly(&input, nvars)?;
            let strategy = if exact {
                RzStrategy::Auto
            } else if let Some(n) = sampled {
                RzStrategy::Sampled(n)
            } else {
                RzStrategy::Auto
            };
            let v = realzero::is_real_zero(&p, strategy, seed)?;
            let mut t = Transcript::new();
            t.push("check", "real-zero");
            t.push("nvars", p.nvars());
            t.push("degree", p.degree());
            t.push("is-rz", v.is_rz);
            match v.mode {
                RzMode::Exact => t.push("mode", "exact"),
                RzMode::Sampled { seed, samples } => {
                    t.push("mode", "sampled");
                    t.push("seed", seed);
                    t.push("samples", samples);
                }
            }
            if let Some(w) = &v.witness_direction {
                let coords: Vec<String> = w.iter().map(|c| c.to_string()).collect();
                t.push("witness-direction", coords.join(","));
            }
            print!("{t}");
            Ok(match (v.is_rz, v.mode) {
                (true, RzMode::Exact) => EXIT_OK,
                (true, RzMode::Sampled { .. }) => EXIT_INCONCLUSIVE,
                (false, _) => EXIT_FAIL,
            })
        }
        Command::Det {
            pencil,
            exact,
            verify,
            power,
            trials,
        } => {
            let p = load_pencil(&pencil)?;
            match verify {
                None => {
                    let _ = exact;
                    let det = p.det_poly()?;
                    print!("{}", interface::write_poly_file(&det));
                    Ok(EXIT_OK)
                }
                Some(target) => {
                    let t = load_poly(&target, Some(p.nvars()))?;
                    let out = p.verify_identity(&t, power, trials, seed)?;
                    let mut tr = Transcript::new();
                    tr.push("check", "determinant-identity");
                    tr.push("power", power);
                    tr.push("verdict", out.verdict);
                    tr.push("trials", out.trials);
                    tr.push("seed", out.seed);
                    if let Some(points) = out.grid_points {
                        tr.push("grid-points", points);
                        tr.push(
                            "grid-primes",
                            out.primes
                                .iter()
                                .map(u64::to_string)
                                .collect::<Vec<_>>()
                                .join(","),
                        );
                    }
                    if out.max_rel_err.is_finite() {
                        tr.push("max-rel-err", format!("{:.3e}", out.max_rel_err));
                    }
                    if let Some(w) = &out.witness {
                        let coords: Vec<String> =
                            w.point.iter().map(|c| c.to_string()).collect();
                        tr.push("witness-point", coords.join(","));
                        tr.push("lhs", &w.lhs);
                        tr.push("rhs", &w.rhs);
                    }
                    print!("{tr}");
                    Ok(match out.verdict {
                        Verdict::Proved => EXIT_OK,
                        Verdict::SampledPass => EXIT_INCONCLUSIVE,
                        Verdict::Failed => EXIT_FAIL,
                    })
                }
            }
        }
        Command::Member { input, point } => {
            // decide by content: pencil file/name first, else polynomial
            let as_pencil = load_pencil(&input);
            let (is_member, what) = match as_pencil {
                Ok(p) => {
                    let pt = parse_point(&point, p.nvars())?;
                    (p.membership(&pt)?, "spectrahedron")
                }
                Err(_) => {
                    let p = load_poly(&input, None)?;
                    let pt = parse_point(&point, p.nvars())?;
                    (realzero::rigid_membership(&p, &pt)?, "rigidly-convex-set")
                }
            };
            let mut t = Transcript::new();
            t.push("check", "membership");
            t.push("set", what);
            t.push("member", is_member);
            print!("{t}");
            Ok(if is_member { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Reduce {
            pencil,
            cone,
            hint,
            out,
        } => {
            let p = load_pencil(&pencil)?;
            let result = if cone {
                let hints: Result<Vec<Vec<f64>>, Error> = hint
                    .iter()
                    .map(|h| {
                        parse_point(h, p.nvars())
                            .map(|v| v.iter().map(|c| c.to_f64()).collect())
                    })
                    .collect();
                reduction::cone_reduce(&p, &hints?, seed)
            } else {
                reduction::common_kernel_reduce(&p)
            };
            match result {
                Ok(red) => {
                    let mut t = Transcript::new();
                    t.push("reduction", if cone { "cone" } else { "common-kernel" });
                    t.push("input-size", p.size());
                    t.push("output-size", red.pencil.size());
                    t.push("removed", red.removed);
                    match &red.det_preserved {
                        reduction::DetPreservation::ExactEqual => {
                            t.push("determinant", "preserved (exact)")
                        }
                        reduction::DetPreservation::Sampled {
                            points,
                            max_rel_err,
                        } => t.push(
                            "determinant",
                            format!(
                                "preserved (sampled, {points} points, max rel err {max_rel_err:.3e})"
                            ),
                        ),
                    }
                    if let Some(w) = &red.witness_direction {
                        let coords: Vec<String> =
                            w.iter().map(|x| format!("{x:.6}")).collect();
                        t.push("witness-direction", coords.join(","));
                    }
                    t.push("seed", seed);
                    print!("{t}");
                    emit(&out, &interface::write_pencil_file(&red.pencil))?;
                    Ok(EXIT_OK)
                }
                Err(Error::ConeNotWitnessed { trials }) => {
                    let mut t = Transcript::new();
                    t.push("reduction", "cone");
                    t.push("outcome", "cone condition not witnessed");
                    t.push("directions-tried", trials);
                    t.push("seed", seed);
                    print!("{t}");
                    Ok(EXIT_INCONCLUSIVE)
                }
                Err(Error::OffBlockResidue { residue }) => {
                    let mut t = Transcript::new();
                    t.push("reduction", if cone { "cone" } else { "common-kernel" });
                    t.push("outcome", "off-block residue above tolerance");
                    t.push("residue", format!("{residue:.3e}"));
                    print!("{t}");
                    Ok(EXIT_FAIL)
                }
                Err(e) => Err(e),
            }
        }
        Command::Double { pencil, out } => {
            let p = load_pencil(&pencil)?;
            let doubled = p.double_to_symmetric();
            let mut t = Transcript::new();
            t.push("operation", "double-to-symmetric");
            t.push("input-size", p.size());
            t.push("output-size", doubled.size());
            print!("{t}");
            emit(&out, &interface::write_pencil_file(&doubled))?;
            Ok(EXIT_OK)
        }
        Command::ConstructQuadratic {
            input,
            variant,
            out,
            trials,
            nvars,
        } => {
            let p = load_poly(&input, nvars)?;
            let variant = match variant {
                VariantArg::Standard => Variant::Standard,
                VariantArg::Negated => Variant::Negated,
            };
            let q = realzero::quadratic_form(&p)?;
            let pencil = match clifford::quadratic_pencil(&q, variant) {
                Ok(p) => p,
                Err(Error::NotRealZero) => {
                    let mut t = Transcript::new();
                    t.push("construction", "quadratic-representation");
                    t.push("outcome", "input is not a real zero polynomial");
                    print!("{t}");
                    return Ok(EXIT_FAIL);
                }
                Err(e) => return Err(e),
            };
            let r = clifford::representation_power(p.nvars());
            let verify = pencil.verify_identity(&p, r, trials, seed)?;
            let relations = clifford::relations_check(&pencil, &p, 16, seed)?;
            let mut t = Transcript::new();
            t.push("construction", "quadratic-representation");
            t.push("variant", variant);
            t.push("size", pencil.size());
            t.push("power", r);
            t.push("identity", verify.verdict);
            if let Some(points) = verify.grid_points {
                t.push("grid-points", points);
            }
            t.push("relations", if relations.pass { "pass" } else { "fail" });
            t.push("trials", verify.trials);
            t.push("seed", seed);
            print!("{t}");
            emit(&out, &interface::write_pencil_file(&pencil))?;
            Ok(match verify.verdict {
                Verdict::Proved => EXIT_OK,
                Verdict::SampledPass => EXIT_INCONCLUSIVE,
                Verdict::Failed => EXIT_FAIL,
            })
        }
        Command::Equiv {
            pencil1,
            pencil2,
            words,
            trials,
        } => {
            let p1 = load_pencil(&pencil1)?;
            let p2 = load_pencil(&pencil2)?;
            let v = clifford::unitary_equiv_test(&p1, &p2, words, trials, seed)?;
            let mut t = Transcript::new();
            t.push("check", "unitary-equivalence");
            t.push("verdict", v.label());
            t.push("seed", seed);
            match &v {
                EquivVerdict::Equivalent { residual, .. } => {
                    t.push("residual", format!("{residual:.3e}"));
                }
                EquivVerdict::Inequivalent { witness } => match witness {
                    clifford::EquivWitness::SizeMismatch { left, right } => {
                        t.push("witness", format!("size mismatch {left} vs {right}"));
                    }
                    clifford::EquivWitness::TraceWord { word, left, right } => {
                        let w: Vec<String> =
                            word.iter().map(|g| (g + 1).to_string()).collect();
                        t.push("witness-word", w.join(","));
                        t.push("trace-left", format!("{}{:+} i", left.0, left.1));
                        t.push("trace-right", format!("{}{:+} i", right.0, right.1));
                    }
                },
                EquivVerdict::Inconclusive => {}
            }
            print!("{t}");
            Ok(match v {
                EquivVerdict::Equivalent { .. } => EXIT_OK,
                EquivVerdict::Inequivalent { .. } => EXIT_FAIL,
                EquivVerdict::Inconclusive => EXIT_INCONCLUSIVE,
            })
        }
        Command::Bounds { n, d, kind } => {
            let kind = match kind {
                KindArg::Symmetric => RepKind::Symmetric,
                KindArg::Hermitian => RepKind::Hermitian,
            };
            let mut t = Transcript::new();
            t.push("check", "size-lower-bound");
            t.push("n", n);
            t.push("d", d);
            t.push("kind", kind);
            match obstruction::min_size_bound(n, d, kind)? {
                Some(b) => {
                    t.push("bound-exact", b.exact.to_string());
                    t.push("bound", format!("k >= {}", b.ceiling));
                    t.push("mechanism", b.mechanism);
                    t.push("hypothesis", "no full line (caller-checked)");
                }
                None => {
                    t.push("bound", "none (outside the valid range)");
                }
            }
            if d <= n {
                t.push("alpha", obstruction::meshulam_alpha(n.max(d), d)?);
            }
            print!("{t}");
            Ok(EXIT_OK)
        }
        Command::Obstruct {
            input,
            assert_no_line,
            assert_cone,
            samples,
            nvars,
        } => {
            let p = load_poly(&input, nvars)?;
            let flags = HypothesisFlags {
                assert_cone,
                assert_no_line,
                seed,
                samples,
            };
            match obstruction::nonexistence_report(&p, &flags) {
                Ok(rep) => {
                    print!("{}", interface::write_report(&rep));
                    Ok(if rep.conclusions.is_empty() {
                        EXIT_INCONCLUSIVE
                    } else {
                        EXIT_OK
                    })
                }
                Err(Error::NotRealZero) => {
                    let mut t = Transcript::new();
                    t.push("report", "obstruction");
                    t.push("outcome", "input failed the real zero check");
                    print!("{t}");
                    Ok(EXIT_FAIL)
                }
                Err(e) => Err(e),
            }
        }
        Command::Counterexample { input, r, out } => {
            let p = load_poly(&input, None)?;
            let radius = polynomial::parse_coeff_literal(&r)?;
            let (q, checks) = obstruction::compact_counterexample(&p, &radius)?;
            let mut t = Transcript::new();
            t.push("construction", "compact-counterexample");
            t.push("radius-parameter", &r);
            t.push("rz-sampled", checks.rz_sampled);
            t.push(
                "confined-to-ball-radius",
                format!("{:.4}", checks.bounded_inside_radius),
            );
            t.push("boundary-samples", checks.boundary_samples);
            for (i, n) in checks.notes.iter().enumerate() {
                t.push(&format!("note.{}", i + 1), n);
            }
            print!("{t}");
            emit(&out, &interface::write_poly_file(&q))?;
            Ok(if checks.rz_sampled { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Examples { name, out } => {
            let content = match interface::example(&name)? {
                ExampleObject::Poly(p) => interface::write_poly_file(&p),
                ExampleObject::Pencil(p) => interface::write_pencil_file(&p),
            };
            emit(&out, &content)?;
            Ok(EXIT_OK)
        }
    }
}
