//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them all).

use rzpencil::clifford::{self, EquivVerdict, Variant};
use rzpencil::interface::{example, ExampleObject};
use rzpencil::linalg::{self, Mat};
use rzpencil::obstruction::{self, Claim, HypothesisFlags, HypothesisStatus, RepKind, Subject};
use rzpencil::pencil::{arrowhead_pencil, Pencil, Symmetry, Verdict};
use rzpencil::polynomial::{parse, Monomial, Poly};
use rzpencil::realzero::{self, RzMode, RzStrategy};
use rzpencil::reduction;
use rzpencil::sampling;
use rzpencil::scalar::{CCoeff, Coeff};
use rand::Rng;

const SEED: u64 = rzpencil::DEFAULT_SEED;

fn finish(criterion: u32, label: &str, result: Result<(), String>) {
    match &result {
        Ok(()) => println!("criterion {criterion:02}: PASS - {label}"),
        Err(e) => println!("criterion {criterion:02}: FAIL - {label}: {e}"),
    }
    if let Err(e) = result {
        panic!("criterion {criterion} failed: {e}");
    }
}

fn get_pencil(name: &str) -> Pencil {
    match example(name).expect("registry name") {
        ExampleObject::Pencil(p) => p,
        _ => panic!("{name} should be a pencil"),
    }
}

fn get_poly(name: &str) -> Poly {
    match example(name).expect("registry name") {
        ExampleObject::Poly(p) => p,
        _ => panic!("{name} should be a polynomial"),
    }
}

fn ball(n: usize) -> Poly {
    get_poly(&format!("p{n}"))
}

#[test]
fn criterion_01_ball3_representations_determinants() {
    let body = || -> Result<(), String> {
        let p3 = parse("1 - x1^2 - x2^2 - x3^2", 3).unwrap();
        for name in ["p3-rep-1", "p3-rep-2"] {
            let rep = get_pencil(name);
            let det = rep.det_poly().map_err(|e| e.to_string())?;
            if det != p3 {
                return Err(format!("{name} determinant is {det}"));
            }
        }
        Ok(())
    };
    finish(1, "both 2x2 representations have exact determinant p_3", body());
}

#[test]
fn criterion_02_arrowhead_determinants() {
    let body = || -> Result<(), String> {
        for n in 2..=8usize {
            let arrow = arrowhead_pencil(n);
            if arrow.size() != n + 1 {
                return Err(format!("arrowhead size {} for n={n}", arrow.size()));
            }
            let det = arrow.det_poly().map_err(|e| e.to_string())?;
            if det != ball(n) {
                return Err(format!("arrowhead determinant wrong for n={n}"));
            }
        }
        Ok(())
    };
    finish(2, "arrowhead pencils have exact determinant p_n for n=2..8", body());
}

#[test]
fn criterion_03_fixture_determinants_exact() {
    let body = || -> Result<(), String> {
        let bw5 = get_pencil("bw5");
        let p5sq = ball(5).pow(2).unwrap();
        if bw5.det_poly().map_err(|e| e.to_string())? != p5sq {
            return Err("bw5 determinant is not p_5^2".into());
        }
        let ex57 = get_pencil("ex57");
        let q5sq = get_poly("q5").pow(2).unwrap();
        if ex57.det_poly().map_err(|e| e.to_string())? != q5sq {
            return Err("ex57 determinant is not q_5^2".into());
        }
        let ex58 = get_pencil("ex58");
        let pt4sq = get_poly("ptilde4").pow(2).unwrap();
        if ex58.det_poly().map_err(|e| e.to_string())? != pt4sq {
            return Err("ex58 determinant is not ptilde_4^2".into());
        }
        Ok(())
    };
    finish(3, "bw5 = p_5^2, ex57 = q_5^2, ex58 = ptilde_4^2, all exact", body());
}

/// Random rational quadratic real zero polynomial with an exactly
/// representable square root: G = D^2 diagonal, b with denominator 2.
fn random_exact_rz_quadratic(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Poly {
    loop {
        let b: Vec<Coeff> = (0..n)
            .map(|_| Coeff::from_rat(rng.random_range(-4..5), 2))
            .collect();
        let d: Vec<Coeff> = (0..n)
            .map(|_| Coeff::from_i64(rng.random_range(-2..3)))
            .collect();
        if d.iter().all(|x| x.is_zero()) && b.iter().all(|x| x.is_zero()) {
            continue;
        }
        let quarter = Coeff::from_rat(1, 4);
        let mut p = Poly::one(n);
        for j in 0..n {
            p.add_term(Monomial::var(n, j), b[j].clone());
        }
        for i in 0..n {
            for j in 0..n {
                let mut a = b[i].mul(&b[j]).mul(&quarter);
                if i == j {
                    a = a.sub(&d[i].mul(&d[i]));
                }
                if a.is_zero() {
                    continue;
                }
                let mut e = vec![0u32; n];
                e[i] += 1;
                e[j] += 1;
                p.add_term(Monomial(e), a);
            }
        }
        if p.degree() == 2 {
            return p;
        }
    }
}

fn check_construction(p: &Poly, what: &str) -> Result<(), String> {
    let n = p.nvars();
    let k = 1usize << (n / 2);
    let r = clifford::representation_power(n);
    let q = realzero::quadratic_form(p).map_err(|e| format!("{what}: {e}"))?;
    let pencil =
        clifford::quadratic_pencil(&q, Variant::Standard).map_err(|e| format!("{what}: {e}"))?;
    if pencil.size() != k {
        return Err(format!("{what}: size {} instead of {k}", pencil.size()));
    }
    let out = pencil
        .verify_identity(p, r, 200, SEED + 4)
        .map_err(|e| format!("{what}: {e}"))?;
    let affordable = ((k as u64) + 1).pow(n as u32) <= 1_000_000;
    match (affordable, out.verdict) {
        (true, Verdict::Proved) => Ok(()),
        (false, Verdict::SampledPass) => Ok(()),
        (_, v) => Err(format!(
            "{what}: verdict {v} (grid affordable: {affordable})"
        )),
    }
}

#[test]
fn criterion_04_quadratic_construction_end_to_end() {
    let body = || -> Result<(), String> {
        let mut rng = sampling::rng_from(SEED + 4, 100);
        for trial in 0..20 {
            let n = 2 + (trial % 5);
            let p = random_exact_rz_quadratic(&mut rng, n);
            check_construction(&p, &format!("random #{trial} (n={n})"))?;
        }
        for n in 2..=7usize {
            check_construction(&ball(n), &format!("p_{n}"))?;
            check_construction(&get_poly(&format!("q{n}")), &format!("q_{n}"))?;
            check_construction(
                &get_poly(&format!("ptilde{}", n - 1)),
                &format!("ptilde_{}", n - 1),
            )?;
        }
        Ok(())
    };
    finish(
        4,
        "power representations: proved on affordable grids, sampled at 200 exact points otherwise",
        body(),
    );
}

#[test]
fn criterion_05_eigenvalue_root_correspondence() {
    let body = || -> Result<(), String> {
        let mut rng = sampling::rng_from(SEED + 5, 0);
        for trial in 0..20 {
            let k = rng.random_range(2..=6usize);
            let n = rng.random_range(1..=4usize);
            let mats: Vec<Mat> = (0..n)
                .map(|_| {
                    let g = nalgebra::DMatrix::<nalgebra::Complex<f64>>::from_fn(k, k, |_, _| {
                        nalgebra::Complex::new(
                            rng.random_range(-1.0..1.0),
                            rng.random_range(-1.0..1.0),
                        )
                    });
                    let h = (&g + g.adjoint()) * nalgebra::Complex::new(0.5, 0.0);
                    Mat::from_na(&h)
                })
                .collect();
            let pencil =
                Pencil::new(k, mats, Symmetry::Hermitian, 1).map_err(|e| e.to_string())?;
            let det = pencil
                .to_exact_dyadic()
                .det_poly()
                .map_err(|e| e.to_string())?;
            for dir in 0..50 {
                let a = sampling::unit_direction(&mut rng, n);
                let rep = pencil
                    .eigen_root_check(&a, Some(&det))
                    .map_err(|e| e.to_string())?;
                if !rep.pass {
                    return Err(format!(
                        "trial {trial} dir {dir}: mismatch {:.3e}, zero eigs {} vs drop {}",
                        rep.max_mismatch, rep.zero_eigenvalue_count, rep.degree_drop
                    ));
                }
            }
        }
        Ok(())
    };
    finish(
        5,
        "multiset {-1/lambda} matches restricted roots within 1e-8 over 20 pencils x 50 directions",
        body(),
    );
}

#[test]
fn criterion_06_doubling_squares_determinant_and_spectrum() {
    let body = || -> Result<(), String> {
        let mut rng = sampling::rng_from(SEED + 6, 0);
        for trial in 0..20 {
            let k = rng.random_range(2..=4usize);
            let n = rng.random_range(1..=3usize);
            let mats: Vec<Mat> = (0..n)
                .map(|_| {
                    let mut m = Mat::zeros(k, k);
                    for i in 0..k {
                        for j in i..k {
                            let re = rng.random_range(-3..4);
                            let im = if i == j { 0 } else { rng.random_range(-3..4) };
                            m.set(i, j, CCoeff::from_i64(re, im));
                            m.set(j, i, CCoeff::from_i64(re, -im));
                        }
                    }
                    m
                })
                .collect();
            let pencil =
                Pencil::new(k, mats, Symmetry::Hermitian, 1).map_err(|e| e.to_string())?;
            let doubled = pencil.double_to_symmetric();
            let det = pencil.det_poly().map_err(|e| e.to_string())?;
            let det2 = doubled.det_poly().map_err(|e| e.to_string())?;
            if det2 != det.pow(2).unwrap() {
                return Err(format!("trial {trial}: doubled determinant is not the square"));
            }
            for _ in 0..20 {
                let a = sampling::unit_direction(&mut rng, n);
                let single = linalg::herm_eigenvalues(&pencil.evaluate_na(&a));
                let both = linalg::sym_eigenvalues(
                    &doubled.evaluate_na(&a).map(|z| z.re),
                );
                let scale = both.iter().fold(1.0f64, |m, &l| m.max(l.abs()));
                for (i, &l) in single.iter().enumerate() {
                    let lo = both[2 * i];
                    let hi = both[2 * i + 1];
                    if (lo - l).abs() > 1e-9 * scale || (hi - l).abs() > 1e-9 * scale {
                        return Err(format!(
                            "trial {trial}: eigenvalue {l} not doubled ({lo}, {hi})"
                        ));
                    }
                }
            }
        }
        Ok(())
    };
    finish(
        6,
        "doubling squares the determinant exactly and doubles every spectral multiplicity",
        body(),
    );
}

#[test]
fn criterion_07_reduction_round_trips() {
    let body = || -> Result<(), String> {
        let mut rng = sampling::rng_from(SEED + 7, 0);
        for trial in 0..20 {
            let k = rng.random_range(2..=4usize);
            let n = rng.random_range(2..=3usize);
            let mats: Vec<Mat> = (0..n)
                .map(|_| {
                    let g = nalgebra::DMatrix::<nalgebra::Complex<f64>>::from_fn(k, k, |_, _| {
                        nalgebra::Complex::new(
                            rng.random_range(-1.0..1.0),
                            rng.random_range(-1.0..1.0),
                        )
                    });
                    let h = (&g + g.adjoint()) * nalgebra::Complex::new(0.5, 0.0);
                    Mat::from_na(&h)
                })
                .collect();
            let base = Pencil::new(k, mats, Symmetry::Hermitian, 1).map_err(|e| e.to_string())?;
            let extra = rng.random_range(1..=3usize);
            let padded = reduction::pad_with_zeros(&base, extra);
            let q = sampling::random_unitary(&mut rng, k + extra);
            let scrambled = reduction::conjugate_pencil(&padded, &q).map_err(|e| e.to_string())?;
            let red = reduction::common_kernel_reduce(&scrambled).map_err(|e| e.to_string())?;
            if red.pencil.size() != k {
                return Err(format!(
                    "trial {trial}: recovered size {} instead of {k}",
                    red.pencil.size()
                ));
            }
            match clifford::unitary_equiv_test(&red.pencil, &base, 4, 16, SEED + trial as u64)
                .map_err(|e| e.to_string())?
            {
                EquivVerdict::Equivalent { residual, .. } => {
                    if residual > 1e-8 {
                        return Err(format!("trial {trial}: residual {residual:.3e}"));
                    }
                }
                other => {
                    return Err(format!("trial {trial}: verdict {}", other.label()));
                }
            }
        }
        // cone reduction recovers the size-2 representation of ptilde_3
        let ex33 = get_pencil("ex33");
        let padded = reduction::pad_with_zeros(&ex33, 2);
        let mut rng = sampling::rng_from(SEED + 7, 1);
        let q = sampling::random_unitary(&mut rng, 4);
        let scrambled = reduction::conjugate_pencil(&padded, &q).map_err(|e| e.to_string())?;
        let red = reduction::cone_reduce(&scrambled, &[], SEED + 7).map_err(|e| e.to_string())?;
        if red.pencil.size() != 2 {
            return Err(format!("cone reduction returned size {}", red.pencil.size()));
        }
        Ok(())
    };
    finish(
        7,
        "pad-scramble-reduce recovers size and unitary class 20/20; cone reduction reaches size 2",
        body(),
    );
}

#[test]
fn criterion_08_rz_decider_families() {
    let body = || -> Result<(), String> {
        for n in 1..=8usize {
            let v = realzero::is_real_zero(&ball(n), RzStrategy::Auto, SEED + 8)
                .map_err(|e| e.to_string())?;
            if !v.is_rz {
                return Err(format!("p_{n} rejected"));
            }
        }
        let lin = parse("1 + x1", 1).unwrap();
        if !realzero::is_real_zero(&lin, RzStrategy::Auto, SEED + 8)
            .map_err(|e| e.to_string())?
            .is_rz
        {
            return Err("1 + x1 rejected".into());
        }
        for name in ["q5", "ptilde4"] {
            let v = realzero::is_real_zero(&get_poly(name), RzStrategy::Auto, SEED + 8)
                .map_err(|e| e.to_string())?;
            if !v.is_rz {
                return Err(format!("{name} rejected"));
            }
        }
        // rejections with exact witnesses
        for (expr, nv) in [("1 - x1^4 - x2^4", 2), ("1 + x1^2", 1)] {
            let p = parse(expr, nv).unwrap();
            let v = realzero::is_real_zero(&p, RzStrategy::Auto, SEED + 8)
                .map_err(|e| e.to_string())?;
            if v.is_rz {
                return Err(format!("{expr} accepted"));
            }
            if v.mode != RzMode::Exact {
                return Err(format!("{expr}: witness not exact"));
            }
            let w = v.witness_direction.ok_or("missing witness")?;
            let u = p.restrict(&w).map_err(|e| e.to_string())?;
            let prof =
                realzero::real_roots(&u, p.degree() as usize).map_err(|e| e.to_string())?;
            if prof.is_real_rooted() {
                return Err(format!("{expr}: witness does not certify"));
            }
        }
        Ok(())
    };
    finish(
        8,
        "accepts p_1..p_8, 1+x1, q_5, ptilde_4; rejects the quartic and 1+x1^2 with exact witnesses",
        body(),
    );
}

#[test]
fn criterion_09_bounds_arithmetic() {
    let body = || -> Result<(), String> {
        for n in 4..=12u64 {
            let b = obstruction::min_size_bound(n, 2, RepKind::Symmetric)
                .map_err(|e| e.to_string())?
                .ok_or("missing symmetric bound")?;
            if b.ceiling != n {
                return Err(format!("symmetric bound for n={n} is {}", b.ceiling));
            }
        }
        for n in 11..=20u64 {
            let b = obstruction::min_size_bound(n, 2, RepKind::Hermitian)
                .map_err(|e| e.to_string())?
                .ok_or("missing hermitian bound")?;
            let expect = (n + 1).div_ceil(4);
            if b.ceiling != expect {
                return Err(format!(
                    "hermitian bound for n={n} is {} instead of {expect}",
                    b.ceiling
                ));
            }
        }
        // branch continuity and monotonicity of alpha
        for d in 1..=10u64 {
            let mut prev = None;
            for k in d..=60 {
                let a = obstruction::meshulam_alpha(k, d).map_err(|e| e.to_string())?;
                if let Some(p) = prev {
                    if a < p {
                        return Err(format!("alpha({k},{d}) decreased"));
                    }
                }
                prev = Some(a);
            }
        }
        Ok(())
    };
    finish(
        9,
        "quadratic bounds match the anchors; alpha is monotone with continuous case split",
        body(),
    );
}

#[test]
fn criterion_10_obstruction_reports() {
    let body = || -> Result<(), String> {
        let flags = HypothesisFlags::default();
        let pt3 = get_poly("ptilde3");
        let rep = obstruction::nonexistence_report(&pt3, &flags).map_err(|e| e.to_string())?;
        if !rep.has_claim(Subject::InputPolynomial, RepKind::Symmetric, &Claim::NoneExists) {
            return Err("ptilde_3: missing symmetric nonexistence".into());
        }
        if rep.has_claim(Subject::InputPolynomial, RepKind::Hermitian, &Claim::NoneExists) {
            return Err("ptilde_3: spurious hermitian nonexistence".into());
        }
        let tag_ok = rep.conclusions.iter().any(|c| {
            c.kind == RepKind::Symmetric
                && c.subject == Subject::InputPolynomial
                && c.mechanism == obstruction::tag::CONE_DIMENSION
        });
        if !tag_ok {
            return Err("ptilde_3: wrong mechanism tag".into());
        }
        for h in ["real-zero", "cone", "no-full-line"] {
            let status = rep
                .hypotheses
                .iter()
                .find(|x| x.name == h)
                .map(|x| x.status)
                .ok_or_else(|| format!("missing hypothesis {h}"))?;
            if status != HypothesisStatus::VerifiedExact {
                return Err(format!("ptilde_3: hypothesis {h} is {status}"));
            }
        }

        let pt4 = get_poly("ptilde4");
        let rep4 = obstruction::nonexistence_report(&pt4, &flags).map_err(|e| e.to_string())?;
        for kind in [RepKind::Symmetric, RepKind::Hermitian] {
            if !rep4.has_claim(Subject::InputPolynomial, kind, &Claim::NoneExists) {
                return Err(format!("ptilde_4: missing {kind} nonexistence"));
            }
        }

        let q5 = get_poly("q5");
        let rep5 = obstruction::nonexistence_report(&q5, &flags).map_err(|e| e.to_string())?;
        if !rep5.has_claim(Subject::InputPolynomial, RepKind::Hermitian, &Claim::NoneExists) {
            return Err("q_5: missing hermitian nonexistence".into());
        }

        // no contradiction: ptilde_4 itself has no representation, yet its
        // square has a verified one
        let ex58 = get_pencil("ex58");
        let out = ex58
            .verify_identity(&pt4, 2, 64, SEED + 10)
            .map_err(|e| e.to_string())?;
        if out.verdict != Verdict::Proved {
            return Err("ex58 no longer verifies against ptilde_4^2".into());
        }
        if !rep4
            .notes
            .iter()
            .any(|n| n.contains("not its powers"))
        {
            return Err("report does not scope its claims to the polynomial itself".into());
        }
        Ok(())
    };
    finish(
        10,
        "nonexistence certificates for ptilde_3, ptilde_4, q_5 coexist with the verified square",
        body(),
    );
}

#[test]
fn criterion_11_uniqueness_facts() {
    let body = || -> Result<(), String> {
        let rep1 = get_pencil("p3-rep-1");
        let rep2 = get_pencil("p3-rep-2");
        match clifford::unitary_equiv_test(&rep1, &rep2, 6, 32, SEED + 11)
            .map_err(|e| e.to_string())?
        {
            EquivVerdict::Inequivalent { .. } => {}
            other => return Err(format!("p3 reps: verdict {}", other.label())),
        }
        let std5 = get_pencil("bw5-standard");
        let neg5 = get_pencil("bw5-negated");
        match clifford::unitary_equiv_test(&std5, &neg5, 6, 32, SEED + 11)
            .map_err(|e| e.to_string())?
        {
            EquivVerdict::Inequivalent { .. } => {}
            other => return Err(format!("bw5 variants: verdict {}", other.label())),
        }
        let mut rng = sampling::rng_from(SEED + 11, 2);
        for trial in 0..10 {
            let k = rng.random_range(2..=4usize);
            let n = rng.random_range(2..=4usize);
            let mats: Vec<Mat> = (0..n)
                .map(|_| {
                    let g = nalgebra::DMatrix::<nalgebra::Complex<f64>>::from_fn(k, k, |_, _| {
                        nalgebra::Complex::new(
                            rng.random_range(-1.0..1.0),
                            rng.random_range(-1.0..1.0),
                        )
                    });
                    let h = (&g + g.adjoint()) * nalgebra::Complex::new(0.5, 0.0);
                    Mat::from_na(&h)
                })
                .collect();
            let p = Pencil::new(k, mats, Symmetry::Hermitian, 1).map_err(|e| e.to_string())?;
            let q = sampling::random_unitary(&mut rng, k);
            let conj = reduction::conjugate_pencil(&p, &q).map_err(|e| e.to_string())?;
            match clifford::unitary_equiv_test(&p, &conj, 4, 16, SEED + 11 + trial)
                .map_err(|e| e.to_string())?
            {
                EquivVerdict::Equivalent { residual, unitary } => {
                    if residual > 1e-8 {
                        return Err(format!("trial {trial}: residual {residual:.3e}"));
                    }
                    let qna = unitary.to_na();
                    for i in 0..n {
                        let lhs = qna.adjoint() * p.mat(i).to_na() * &qna;
                        if (lhs - conj.mat(i).to_na()).norm() > 1e-8 {
                            return Err(format!("trial {trial}: recovered unitary is off"));
                        }
                    }
                }
                other => return Err(format!("trial {trial}: verdict {}", other.label())),
            }
        }
        Ok(())
    };
    finish(
        11,
        "p3 reps and bw5 variants are inequivalent; conjugated pencils recover their unitary 10/10",
        body(),
    );
}
