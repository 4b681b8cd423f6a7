//! Size reductions for monic pencils: stripping the common kernel of the
//! coefficient matrices, splitting off the rank-`d` block when some
//! combination is PSD of rank `d` (the cone condition), and rank and
//! independence profiling.

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::pencil::{Pencil, Symmetry};
use crate::sampling;
use crate::scalar::CCoeff;
use crate::tol;
use nalgebra::{Complex, DMatrix, DVector};

/// Directions tried by the cone search after the caller hints and the signed
/// coordinate axes.
pub const N_CONE: usize = 256;

/// How determinant preservation was established.
#[derive(Debug, Clone)]
pub enum DetPreservation {
    /// Symbolic determinants compared, exactly equal.
    ExactEqual,
    /// Sampled at seeded points within `TAU_ID`.
    Sampled { points: usize, max_rel_err: f64 },
}

#[derive(Debug, Clone)]
pub struct Reduction {
    pub pencil: Pencil,
    /// Unitary with the preserved subspace leading; the stripped directions
    /// occupy the trailing columns.
    pub q: Mat,
    pub removed: usize,
    pub det_preserved: DetPreservation,
    /// Witnessing direction for the cone reduction, when one was searched.
    pub witness_direction: Option<Vec<f64>>,
}

/// Strip the common kernel `K = ker M_1 m ... m ker M_n`: conjugate by a
/// unitary whose trailing `dim K` columns span `K` and drop the zero block.
/// The determinant is unchanged; the reduced size is at most `n * d` when
/// the determinant has degree `d`.
pub fn common_kernel_reduce(p: &Pencil) -> Result<Reduction> {
    let k = p.size();
    let n = p.nvars();
    if p.is_exact() {
        // exact kernel of the stacked map
        let stacked = Mat::from_fn(n * k, k, |i, j| p.mat(i / k).at(i % k, j).clone());
        let basis = stacked.nullspace_exact()?;
        let z = basis.len();
        if z == 0 {
            return Ok(Reduction {
                pencil: p.clone(),
                q: Mat::identity(k),
                removed: 0,
                det_preserved: DetPreservation::ExactEqual,
                witness_direction: None,
            });
        }
        // the exact unitary path needs a coordinate-aligned kernel; anything
        // else goes through the float orthonormalization below
        if let Some(coords) = coordinate_kernel(&basis, k) {
            let keep: Vec<usize> = (0..k).filter(|i| !coords.contains(i)).collect();
            let order: Vec<usize> = keep.iter().chain(coords.iter()).copied().collect();
            let q = Mat::from_fn(k, k, |i, j| {
                if i == order[j] {
                    CCoeff::one()
                } else {
                    CCoeff::zero()
                }
            });
            let reduced: Vec<Mat> = (0..n)
                .map(|v| {
                    Mat::from_fn(k - z, k - z, |i, j| p.mat(v).at(keep[i], keep[j]).clone())
                })
                .collect();
            let rp = Pencil::new(k - z, reduced, p.symmetry(), p.index_base())?;
            let preserved = check_det_preserved(p, &rp)?;
            return Ok(Reduction {
                pencil: rp,
                q,
                removed: z,
                det_preserved: preserved,
                witness_direction: None,
            });
        }
    }
    // float path
    let stacked = {
        let mut m = DMatrix::<Complex<f64>>::zeros(n * k, k);
        for v in 0..n {
            let na = p.mat(v).to_na();
            for i in 0..k {
                for j in 0..k {
                    m[(v * k + i, j)] = na[(i, j)];
                }
            }
        }
        m
    };
    let kernel = linalg::nullspace_float(&stacked);
    let z = kernel.len();
    if z == 0 {
        return Ok(Reduction {
            pencil: p.clone(),
            q: Mat::identity(k),
            removed: 0,
            det_preserved: DetPreservation::ExactEqual,
            witness_direction: None,
        });
    }
    let q_kernel_first = linalg::complete_unitary(&kernel, k);
    // reorder: complement leading, kernel trailing
    let mut cols: Vec<DVector<Complex<f64>>> = Vec::with_capacity(k);
    for j in z..k {
        cols.push(q_kernel_first.column(j).into_owned());
    }
    for j in 0..z {
        cols.push(q_kernel_first.column(j).into_owned());
    }
    let q = DMatrix::from_columns(&cols);
    let (reduced, residue) = conjugate_and_split(p, &q, k - z);
    let scale = p.mats().iter().map(Mat::max_abs).fold(1.0, f64::max);
    if residue > 1e-6 * scale {
        return Err(Error::OffBlockResidue { residue });
    }
    let rp = Pencil::new(k - z, reduced, p.symmetry(), p.index_base())?;
    let preserved = check_det_preserved(p, &rp)?;
    Ok(Reduction {
        pencil: rp,
        q: Mat::from_na(&q),
        removed: z,
        det_preserved: preserved,
        witness_direction: None,
    })
}

/// Kernel basis made of (scaled) coordinate vectors, as produced by padding
/// constructions; returns the coordinate indices.
fn coordinate_kernel(basis: &[Vec<CCoeff>], k: usize) -> Option<Vec<usize>> {
    let mut coords = Vec::with_capacity(basis.len());
    for v in basis {
        let nz: Vec<usize> = (0..k).filter(|&i| !v[i].is_zero()).collect();
        if nz.len() != 1 {
            return None;
        }
        coords.push(nz[0]);
    }
    coords.sort_unstable();
    coords.dedup();
    if coords.len() != basis.len() {
        return None;
    }
    Some(coords)
}

fn conjugate_and_split(
    p: &Pencil,
    q: &DMatrix<Complex<f64>>,
    keep: usize,
) -> (Vec<Mat>, f64) {
    let k = p.size();
    let mut residue = 0.0f64;
    let mats = (0..p.nvars())
        .map(|v| {
            let t = q.adjoint() * p.mat(v).to_na() * q;
            for i in 0..k {
                for j in 0..k {
                    if i >= keep || j >= keep {
                        residue = residue.max(t[(i, j)].norm());
                    }
                }
            }
            let mut block = DMatrix::<Complex<f64>>::zeros(keep, keep);
            for i in 0..keep {
                for j in 0..keep {
                    block[(i, j)] = t[(i, j)];
                }
            }
            let herm = (&block + block.adjoint()) * Complex::new(0.5, 0.0);
            let mut m = Mat::from_na(&herm);
            if p.symmetry() == Symmetry::RealSymmetric {
                m = m.real_part();
            }
            m
        })
        .collect();
    (mats, residue)
}

fn check_det_preserved(original: &Pencil, reduced: &Pencil) -> Result<DetPreservation> {
    if original.is_exact()
        && reduced.is_exact()
        && original.size() <= crate::pencil::DET_SIZE_CAP
    {
        let d0 = original.det_poly()?;
        let d1 = reduced.det_poly()?;
        if d0 == d1 {
            return Ok(DetPreservation::ExactEqual);
        }
        return Err(Error::Unsupported(
            "reduction changed the determinant".into(),
        ));
    }
    let points = 50;
    let mut rng = sampling::rng_from(crate::DEFAULT_SEED, 3);
    let mut max_rel = 0.0f64;
    for _ in 0..points {
        let a = sampling::unit_direction(&mut rng, original.nvars());
        let lhs = original.evaluate_na(&a).determinant();
        let rhs = reduced.evaluate_na(&a).determinant();
        let err = (lhs - rhs).norm() / rhs.norm().max(1.0);
        max_rel = max_rel.max(err);
        if err > 1e-7 {
            return Err(Error::Unsupported(format!(
                "reduction changed the determinant (relative error {err:.3e})"
            )));
        }
    }
    Ok(DetPreservation::Sampled {
        points,
        max_rel_err: max_rel,
    })
}

/// Split off the rank-`d` block: searches for a direction whose combination
/// is PSD of rank `d = deg det`, then conjugates so every coefficient matrix
/// is supported on the leading `d x d` block. Failure to find a direction is
/// inconclusive, not a disproof; a nonzero off-block residue after a found
/// direction violates the rank precondition and aborts.
pub fn cone_reduce(p: &Pencil, hints: &[Vec<f64>], seed: u64) -> Result<Reduction> {
    let k = p.size();
    let n = p.nvars();
    let det = p.det_poly()?;
    let d = det.degree();
    if d < 0 {
        return Err(Error::ZeroPolynomial);
    }
    let d = d as usize;
    let mut candidates: Vec<Vec<f64>> = hints.to_vec();
    for axis in sampling::coordinate_axes(n) {
        candidates.push(axis.clone());
        candidates.push(axis.iter().map(|x| -x).collect());
    }
    let mut rng = sampling::rng_from(seed, 4);
    for _ in 0..N_CONE {
        candidates.push(sampling::unit_direction(&mut rng, n));
    }
    let trials = candidates.len();
    let mut witness = None;
    for a in candidates {
        let w = p.combination_na(&a);
        let evals = linalg::herm_eigenvalues(&w);
        let scale = evals.iter().fold(1.0f64, |m, &l| m.max(l.abs()));
        let psd = evals.iter().all(|&l| l >= -tol::TAU_PSD * scale);
        let rank = evals.iter().filter(|&&l| l > tol::TAU_RANK * scale).count();
        if psd && rank == d {
            witness = Some(a);
            break;
        }
    }
    let Some(a) = witness else {
        return Err(Error::ConeNotWitnessed { trials });
    };
    if d == k {
        return Ok(Reduction {
            pencil: p.clone(),
            q: Mat::identity(k),
            removed: 0,
            det_preserved: DetPreservation::ExactEqual,
            witness_direction: Some(a),
        });
    }
    let w = p.combination_na(&a);
    let (_, vecs) = linalg::herm_eigen_pairs(&w);
    // eigenvalues ascend: the PSD rank-d range sits in the trailing columns
    let mut cols: Vec<DVector<Complex<f64>>> = Vec::with_capacity(k);
    for j in (k - d)..k {
        cols.push(vecs.column(j).into_owned());
    }
    for j in 0..(k - d) {
        cols.push(vecs.column(j).into_owned());
    }
    let q = DMatrix::from_columns(&cols);
    let (reduced, residue) = conjugate_and_split(p, &q, d);
    let scale = p.mats().iter().map(Mat::max_abs).fold(1.0, f64::max);
    if residue > tol::TAU_BLOCK * scale.max(1.0) {
        return Err(Error::OffBlockResidue { residue });
    }
    let rp = Pencil::new(d, reduced, p.symmetry(), p.index_base())?;
    let preserved = check_det_preserved(p, &rp)?;
    Ok(Reduction {
        pencil: rp,
        q: Mat::from_na(&q),
        removed: k - d,
        det_preserved: preserved,
        witness_direction: Some(a),
    })
}

/// Rank and independence structure of the coefficient matrices.
#[derive(Debug, Clone)]
pub struct RankProfile {
    pub max_rank: usize,
    pub max_rank_fraction: f64,
    pub per_generator_ranks: Vec<usize>,
    pub independent: bool,
    pub det_degree: Option<i64>,
    pub generic_rank_equals_degree: Option<bool>,
}

pub fn rank_profile(p: &Pencil, trials: usize, seed: u64) -> Result<RankProfile> {
    let k = p.size();
    let n = p.nvars();
    let mut rng = sampling::rng_from(seed, 5);
    let mut max_rank = 0usize;
    let mut ranks: Vec<usize> = Vec::with_capacity(trials);
    for _ in 0..trials {
        let a = sampling::unit_direction(&mut rng, n);
        let w = p.combination_na(&a);
        let evals = linalg::herm_eigenvalues(&w);
        let scale = evals.iter().fold(1.0f64, |m, &l| m.max(l.abs()));
        let rank = evals
            .iter()
            .filter(|&&l| l.abs() > tol::TAU_RANK * scale.max(1e-300))
            .count();
        ranks.push(rank);
        max_rank = max_rank.max(rank);
    }
    let at_max = ranks.iter().filter(|&&r| r == max_rank).count();
    let per_generator_ranks: Vec<usize> = (0..n)
        .map(|v| {
            if p.mat(v).domain().is_exact() {
                p.mat(v).rank_exact().unwrap_or(0)
            } else {
                linalg::rank_float(&p.mat(v).to_na())
            }
        })
        .collect();
    // real linear independence: flatten re and im parts into rows
    let independent = if p.is_exact() {
        let flat = Mat::from_fn(n, 2 * k * k, |v, col| {
            let (i, j) = ((col / 2) / k, (col / 2) % k);
            let e = p.mat(v).at(i, j);
            if col % 2 == 0 {
                CCoeff::real(e.re.clone())
            } else {
                CCoeff::real(e.im.clone())
            }
        });
        flat.rank_exact()? == n
    } else {
        let flat = DMatrix::<Complex<f64>>::from_fn(n, 2 * k * k, |v, col| {
            let (i, j) = ((col / 2) / k, (col / 2) % k);
            let e = p.mat(v).at(i, j).to_complex_f64();
            Complex::new(if col % 2 == 0 { e.0 } else { e.1 }, 0.0)
        });
        linalg::rank_float(&flat) == n
    };
    let det_degree = if k <= crate::pencil::DET_SIZE_CAP {
        Some(p.det_poly()?.degree())
    } else {
        None
    };
    Ok(RankProfile {
        max_rank,
        max_rank_fraction: at_max as f64 / trials.max(1) as f64,
        per_generator_ranks,
        independent,
        det_degree,
        generic_rank_equals_degree: det_degree.map(|d| d == max_rank as i64),
    })
}

/// Pad every coefficient matrix with `extra` zero rows and columns; the
/// determinant is unchanged and the padding shows up as common kernel.
pub fn pad_with_zeros(p: &Pencil, extra: usize) -> Pencil {
    let k = p.size();
    let mats: Vec<Mat> = p
        .mats()
        .iter()
        .map(|m| {
            Mat::from_fn(k + extra, k + extra, |i, j| {
                if i < k && j < k {
                    m.at(i, j).clone()
                } else {
                    CCoeff::zero()
                }
            })
        })
        .collect();
    Pencil::new(k + extra, mats, p.symmetry(), p.index_base()).expect("padding keeps hermiticity")
}

/// Conjugate every coefficient matrix by a unitary (float).
pub fn conjugate_pencil(p: &Pencil, q: &DMatrix<Complex<f64>>) -> Result<Pencil> {
    let mats: Vec<Mat> = p
        .mats()
        .iter()
        .map(|m| {
            let t = q.adjoint() * m.to_na() * q;
            let herm = (&t + t.adjoint()) * Complex::new(0.5, 0.0);
            Mat::from_na(&herm)
        })
        .collect();
    Pencil::new(p.size(), mats, Symmetry::Hermitian, p.index_base())
}
