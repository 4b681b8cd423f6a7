//! Numerical tolerances used by the float code paths. Exact code paths do
//! not consult these.

/// A float root counts as real when `|Im| <= TAU_ROOT * (1 + |root|)`.
pub const TAU_ROOT: f64 = 1e-8;
/// PSD eigenvalue slack, scaled by the matrix max-norm.
pub const TAU_PSD: f64 = 1e-9;
/// Minimal pairwise root separation for the sampled simple-zero check.
pub const TAU_SEP: f64 = 1e-7;
/// Relative tolerance for determinant identity checks in float mode.
pub const TAU_ID: f64 = 1e-9;
/// Relative tolerance for the eigenvalue/root correspondence.
pub const TAU_CORR: f64 = 1e-8;
/// Rank threshold, scaled by the largest singular value.
pub const TAU_RANK: f64 = 1e-9;
/// Tolerated off-block residue after a cone reduction.
pub const TAU_BLOCK: f64 = 1e-8;
/// Defining-relation residual scale factor.
pub const TAU_REL: f64 = 1e-8;
/// Residual bound for a recovered equivalence unitary.
pub const TAU_EQ: f64 = 1e-8;
