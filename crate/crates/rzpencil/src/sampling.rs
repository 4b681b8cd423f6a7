//! Seeded sampling helpers. Every randomized routine in the crate takes an
//! explicit seed and derives its stream from a counter-mode ChaCha generator,
//! so results are reproducible across runs and thread counts.

use crate::scalar::Coeff;
use nalgebra::{Complex, DMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub fn rng_from(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform direction on the unit sphere in `R^n`.
pub fn unit_direction(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| StandardNormal.sample(rng)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

/// Random rational vector with numerators in `[-num_range, num_range]` and
/// denominators in `[1, den_range]`, never the zero vector.
pub fn rational_direction(
    rng: &mut ChaCha8Rng,
    n: usize,
    num_range: i64,
    den_range: i64,
) -> Vec<Coeff> {
    loop {
        let v: Vec<Coeff> = (0..n)
            .map(|_| {
                Coeff::from_rat(
                    rng.random_range(-num_range..=num_range),
                    rng.random_range(1..=den_range),
                )
            })
            .collect();
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}

pub fn rational_scalar(rng: &mut ChaCha8Rng, num_range: i64, den_range: i64) -> Coeff {
    Coeff::from_rat(
        rng.random_range(-num_range..=num_range),
        rng.random_range(1..=den_range),
    )
}

/// All `+-1` sign-pattern directions, `2^n` of them; capped to keep the
/// enumeration finite for large `n`.
pub fn sign_patterns(n: usize, cap_vars: usize) -> Vec<Vec<f64>> {
    if n > cap_vars {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0..(1u64 << n) {
        out.push(
            (0..n)
                .map(|j| if mask >> j & 1 == 1 { -1.0 } else { 1.0 })
                .collect(),
        );
    }
    out
}

pub fn coordinate_axes(n: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|j| {
            let mut v = vec![0.0; n];
            v[j] = 1.0;
            v
        })
        .collect()
}

/// Haar-like random unitary from the QR factorization of a complex Gaussian
/// matrix, with the phase convention fixed by a positive real diagonal of R.
pub fn random_unitary(rng: &mut ChaCha8Rng, k: usize) -> DMatrix<Complex<f64>> {
    let g = DMatrix::from_fn(k, k, |_, _| {
        Complex::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
    });
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..k {
        let d = r[(j, j)];
        let phase = if d.norm() > 1e-14 { d / d.norm() } else { Complex::new(1.0, 0.0) };
        for i in 0..k {
            q[(i, j)] *= phase.conj();
        }
    }
    q
}

/// Random real orthogonal matrix.
pub fn random_orthogonal(rng: &mut ChaCha8Rng, k: usize) -> DMatrix<f64> {
    let g: DMatrix<f64> = DMatrix::from_fn(k, k, |_, _| StandardNormal.sample(rng));
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..k {
        if r[(j, j)] < 0.0 {
            for i in 0..k {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    q
}
