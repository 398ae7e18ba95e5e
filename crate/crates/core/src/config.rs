//! Centralized tolerances and scan defaults.
//!
//! Every threshold used by the library is defined here so that reports are
//! reproducible and the provenance of each magic number is documented.

/// Tolerance for treating a floating-point congruence `Σ p_j x_j ≡ 0 (mod 1)`
/// as satisfied. Targets are f64 values assembled from O(10) arithmetic
/// operations, so accumulated rounding stays far below this.
pub const RELATION_TOL: f64 = 1e-9;

/// Default tolerance for the heuristic float integer-relation search.
/// A detected relation must satisfy `|Σ p_j x_j| ≤ FLOAT_RELATION_TOL`.
pub const FLOAT_RELATION_TOL: f64 = 1e-9;

/// Two float frequencies closer than this are classified as equal.
pub const FREQ_EQ_TOL: f64 = 1e-12;

/// `apply_metaplectic` demands `|det A − 1| ≤ DET_ONE_TOL`.
pub const DET_ONE_TOL: f64 = 1e-12;

/// Gram null-space threshold: `min_eigenvalue ≤ NULL_THRESHOLD · trace`
/// declares numerical dependence. Separates true rank deficiency
/// (relative magnitude ~1e-15) from near-dependent independent systems
/// at the default grid resolution.
pub const NULL_THRESHOLD: f64 = 1e-8;

/// Default quadrature half-window for Gram matrices.
pub const DEFAULT_WINDOW: f64 = 16.0;

/// Default number of quadrature samples (2^14).
pub const DEFAULT_SAMPLES: usize = 1 << 14;

/// Congruence residual bound for the phase-perturbation scheme.
pub const PERTURBATION_RESIDUAL_TOL: f64 = 1e-12;

/// Exponent-matching tolerance for the two-sided exponential functional
/// equations: `|τ₁·ln C − τ·ln c| ≤ EXPONENT_MATCH_TOL`.
pub const EXPONENT_MATCH_TOL: f64 = 1e-10;

/// Relative tolerance below which a sampled functional-equation residual
/// counts as "satisfied" when deciding the exponential-model branch.
pub const FUNCEQ_TOL: f64 = 1e-9;

/// Relative residual below which a candidate dependence is treated as a
/// genuine identity (verdict `NumericallyDependent` rather than a failed
/// refutation).
pub const DEPENDENT_RESIDUAL_TOL: f64 = 1e-10;

/// Absolute floor for a refutation margin: a witness is accepted only if
/// the evaluated violation exceeds this times the local scale.
pub const WITNESS_MARGIN_FLOOR: f64 = 1e-12;

/// Default sign-condition slack: trig factors must clear the sign bound by
/// this much. Strict inequalities are realized by a positive slack.
pub const SIGN_SLACK: f64 = 1e-9;

/// Grid points per period of the fastest factor in sign-window scans.
pub const SIGN_GRID_PER_PERIOD: u64 = 512;

/// Default sample budget for sign-window scans.
pub const SIGN_WINDOW_BUDGET: u64 = 1 << 20;

/// Samples per period when scanning one period for a spectator interval.
pub const SPECTATOR_GRID: u64 = 20_000;

/// A spectator interval must clear distance 1/4 by this much at every
/// sampled point. Eight grid cells of the position Lipschitz bound keeps
/// the interior of the interval above 1/4 between samples.
pub const SPECTATOR_RUN_SLACK: f64 = 8.0 * 3.0 / SPECTATOR_GRID as f64;

/// Default scan budget (samples) for torus witness searches.
pub const DEFAULT_SCAN_BUDGET: u64 = 1 << 24;

/// Default scan budget for lonely-runner searches.
pub const RUNNER_SCAN_BUDGET: u64 = 1 << 22;

/// ε used by the ℚ-independent refutation branch; any value < 1/4 works,
/// smaller values cost more scan time.
pub const INDEPENDENT_EPS: f64 = 0.15;

/// Default grid size for the trigonometric-polynomial nonvanishing check.
pub const TRIG_POLY_GRID: usize = 4096;

/// Frequency window for the trigonometric-polynomial check.
pub const TRIG_POLY_SPAN: f64 = 4.0;

/// Absolute nonvanishing threshold for the trigonometric-polynomial check.
pub const TRIG_POLY_TOL: f64 = 1e-6;

/// Maximal denominator when detecting rational ratios from floats. Kept
/// small enough that a generic irrational's best convergent error, about
/// `1/(2.8·q²) ≈ 3.5e-9` at this cap, stays above the tolerance.
pub const RATIONAL_DETECT_MAX_DEN: u64 = 10_000;

/// Tolerance for rational-ratio detection from floats.
pub const RATIONAL_DETECT_TOL: f64 = 1e-10;

/// Height bound used by default for heuristic relation guesses.
pub const DEFAULT_HEIGHT_BOUND: i64 = 64;

/// Tail-mass ratio below which a sampled function counts as supported on a
/// half-line (weaker numeric stand-in for exact half-line support).
pub const HALF_LINE_TAIL_MASS: f64 = 1e-8;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slack_hierarchy() {
        assert!(SIGN_SLACK < 1.0 / SIGN_GRID_PER_PERIOD as f64);
        assert!(SPECTATOR_RUN_SLACK > 1.0 / SPECTATOR_GRID as f64);
        assert!(INDEPENDENT_EPS < 0.25);
    }

    #[test]
    fn tolerances_positive() {
        for t in [
            RELATION_TOL,
            FLOAT_RELATION_TOL,
            FREQ_EQ_TOL,
            NULL_THRESHOLD,
            PERTURBATION_RESIDUAL_TOL,
            EXPONENT_MATCH_TOL,
            FUNCEQ_TOL,
            DEPENDENT_RESIDUAL_TOL,
            WITNESS_MARGIN_FLOOR,
            SIGN_SLACK,
            TRIG_POLY_TOL,
        ] {
            assert!(t > 0.0);
        }
    }
}
