//! Shifted lonely-runner searches on the circle of length 1: margin scans,
//! sign windows for products of trig factors, and the three-spectator
//! analysis for velocity ratio 1:2:3.

use serde::Serialize;
use thiserror::Error;

use crate::config;
use crate::error::InputError;
use crate::exact::ExactReal;
use crate::relations::is_proportional_123;
use crate::scan::{self, Grid};
use crate::torus::torus_norm;

/// Runners with pairwise distinct positive velocities and arbitrary starts.
#[derive(Debug, Clone)]
pub struct RunnerInstance {
    velocities: Vec<f64>,
    starts: Vec<f64>,
    exact_velocities: Option<Vec<ExactReal>>,
}

impl RunnerInstance {
    pub fn new(velocities: Vec<f64>, starts: Vec<f64>) -> Result<Self, InputError> {
        validate(&velocities, &starts)?;
        Ok(RunnerInstance { velocities, starts, exact_velocities: None })
    }

    pub fn with_exact(velocities: Vec<ExactReal>, starts: Vec<f64>) -> Result<Self, InputError> {
        let floats: Vec<f64> = velocities.iter().map(|v| v.float_value()).collect();
        validate(&floats, &starts)?;
        Ok(RunnerInstance {
            velocities: floats,
            starts,
            exact_velocities: Some(velocities),
        })
    }

    pub fn n(&self) -> usize {
        self.velocities.len()
    }

    pub fn velocities(&self) -> &[f64] {
        &self.velocities
    }

    pub fn starts(&self) -> &[f64] {
        &self.starts
    }

    pub fn exact_velocities(&self) -> Option<&[ExactReal]> {
        self.exact_velocities.as_deref()
    }
}

fn validate(velocities: &[f64], starts: &[f64]) -> Result<(), InputError> {
    if velocities.is_empty() {
        return Err(InputError::new("at least one runner required"));
    }
    if velocities.len() != starts.len() {
        return Err(InputError::new("velocities and starts differ in length"));
    }
    if velocities.iter().any(|v| !v.is_finite()) || starts.iter().any(|s| !s.is_finite()) {
        return Err(InputError::new("velocities and starts must be finite"));
    }
    if velocities[0] <= 0.0 {
        return Err(InputError::new("velocities must be positive"));
    }
    for w in velocities.windows(2) {
        if w[0] >= w[1] {
            return Err(InputError::new("velocities must be strictly increasing"));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Error)]
pub enum RunnerError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("no time found within the scan budget of {scanned} samples (inconclusive)")]
    BudgetExhausted { scanned: u64 },
    #[error("velocities are not proportional to 1:2:3")]
    NotProportional,
    #[error("no spectator interval found at resolution {resolution}")]
    ScanFailure { resolution: f64 },
}

/// Smallest torus distance of any runner to the integers at time t.
pub fn runner_margin(inst: &RunnerInstance, t: f64) -> f64 {
    inst.velocities
        .iter()
        .zip(&inst.starts)
        .map(|(&v, &s)| torus_norm(s + t * v))
        .fold(f64::INFINITY, f64::min)
}

/// A time together with the margin it achieves.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LonelyWitness {
    pub t: f64,
    pub margin: f64,
}

/// First time t ≥ window_start on the scan grid with
/// `runner_margin(inst, t) ≥ target`. Step is `1/(8·v_max·n)`; the scan runs
/// in doubling spans until the sample budget is exhausted.
pub fn find_lonely_time(
    inst: &RunnerInstance,
    target: f64,
    window_start: f64,
    budget: u64,
) -> Result<LonelyWitness, RunnerError> {
    if !(target > 0.0 && target <= 0.5) {
        return Err(InputError::new("target must lie in (0, 1/2]").into());
    }
    let v_max = *inst.velocities.last().expect("nonempty");
    let step = 1.0 / (8.0 * v_max * inst.n() as f64);
    let grid = Grid::new(window_start, step);
    match scan::first_hit(grid, budget, |t| runner_margin(inst, t) >= target) {
        Some((_, t)) => Ok(LonelyWitness { t, margin: runner_margin(inst, t) }),
        None => Err(RunnerError::BudgetExhausted { scanned: budget }),
    }
}

/// Largest margin over `count` grid samples starting at `window_start`;
/// ties resolve to the earliest time.
pub fn sup_margin_scan(inst: &RunnerInstance, window_start: f64, step: f64, count: u64) -> LonelyWitness {
    let grid = Grid::new(window_start, step);
    let (_, t, margin) =
        scan::argmax(grid, count, |t| runner_margin(inst, t)).expect("count > 0");
    LonelyWitness { t, margin }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Trig {
    Cos,
    Sin,
}

impl Trig {
    #[inline]
    fn eval(self, x: f64) -> f64 {
        match self {
            Trig::Cos => (2.0 * std::f64::consts::PI * x).cos(),
            Trig::Sin => (2.0 * std::f64::consts::PI * x).sin(),
        }
    }
}

/// Sign condition on every factor; strict variants are realized through the
/// positive slack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SignCondition {
    NonPositive,
    Negative,
    Positive,
}

impl SignCondition {
    #[inline]
    fn holds(self, value: f64, slack: f64) -> bool {
        match self {
            SignCondition::NonPositive | SignCondition::Negative => value <= -slack,
            SignCondition::Positive => value >= slack,
        }
    }
}

/// Options for [`sign_window`].
#[derive(Debug, Clone, Copy)]
pub struct SignWindowConfig {
    /// Factors must clear the sign bound by this much.
    pub slack: f64,
    /// Grid density relative to the fastest factor.
    pub grid_per_period: u64,
}

impl Default for SignWindowConfig {
    fn default() -> Self {
        SignWindowConfig {
            slack: config::SIGN_SLACK,
            grid_per_period: config::SIGN_GRID_PER_PERIOD,
        }
    }
}

/// Maximal t-intervals within the scanned span where every factor
/// `trig(2π(ω_k t + θ_k))` satisfies the sign condition with the configured
/// slack. The scan covers `budget` grid samples from `window_start` at step
/// `1/(grid_per_period·max ω)`. An empty result is a valid outcome.
///
/// All frequencies must be positive except that a single zero frequency is
/// allowed; its factor is the constant `trig(2πθ_k)`.
pub fn sign_window(
    frequencies: &[f64],
    phases: &[f64],
    trig: Trig,
    sign: SignCondition,
    window_start: f64,
    budget: u64,
    cfg: SignWindowConfig,
) -> Result<Vec<(f64, f64)>, InputError> {
    if frequencies.is_empty() || frequencies.len() != phases.len() {
        return Err(InputError::new("frequencies and phases must be nonempty and equal length"));
    }
    if frequencies.iter().any(|&w| w < 0.0 || !w.is_finite()) {
        return Err(InputError::new("frequencies must be nonnegative and finite"));
    }
    if frequencies.iter().filter(|&&w| w == 0.0).count() > 1 {
        return Err(InputError::new("at most one zero frequency is allowed"));
    }

    // constant factors either pass everywhere or kill every window
    for (&w, &th) in frequencies.iter().zip(phases) {
        if w == 0.0 && !sign.holds(trig.eval(th), cfg.slack) {
            return Ok(Vec::new());
        }
    }

    let f_max = frequencies.iter().cloned().fold(0.0f64, f64::max);
    if f_max == 0.0 {
        // single constant factor that passed above: the whole span qualifies
        return Ok(vec![(window_start, window_start + 1.0)]);
    }
    let step = 1.0 / (cfg.grid_per_period as f64 * f_max);
    let grid = Grid::new(window_start, step);
    let pred = |t: f64| {
        frequencies
            .iter()
            .zip(phases)
            .all(|(&w, &th)| sign.holds(trig.eval(w * t + th), cfg.slack))
    };
    let runs = scan::true_runs(grid, budget, pred);
    Ok(runs
        .into_iter()
        .map(|(a, b)| (grid.t(a), grid.t(b)))
        .collect())
}

/// The three candidate spectator positions on the unit circle, parameterized
/// as `[0, 1)` with angle 0 at 1, a quarter turn at i, three quarters at −i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Spectator {
    One,
    I,
    MinusI,
}

impl Spectator {
    pub fn position(self) -> f64 {
        match self {
            Spectator::One => 0.0,
            Spectator::I => 0.25,
            Spectator::MinusI => 0.75,
        }
    }

    pub const ALL: [Spectator; 3] = [Spectator::One, Spectator::I, Spectator::MinusI];
}

/// A spectator together with an open interval of times on which all three
/// runners stay strictly farther than 1/4 from it.
#[derive(Debug, Clone, Serialize)]
pub struct SpectatorVerdict {
    pub spectator: Spectator,
    pub witness_interval: (f64, f64),
    /// Minimal sampled distance beyond 1/4 over the interval.
    pub margin: f64,
}

fn check_proportional_123(inst: &RunnerInstance) -> Result<(), RunnerError> {
    if inst.n() != 3 {
        return Err(RunnerError::NotProportional);
    }
    if let Some(exact) = inst.exact_velocities() {
        if is_proportional_123(&exact[0], &exact[1], &exact[2])? {
            return Ok(());
        }
        return Err(RunnerError::NotProportional);
    }
    let v = inst.velocities();
    let c = v[0];
    if (v[1] / c - 2.0).abs() <= 1e-9 && (v[2] / c - 3.0).abs() <= 1e-9 {
        Ok(())
    } else {
        Err(RunnerError::NotProportional)
    }
}

/// All spectators admitting a positive-length interval over one period,
/// each with its longest interval, in the fixed order 1, i, −i.
pub fn spectator_candidates(inst: &RunnerInstance) -> Result<Vec<SpectatorVerdict>, RunnerError> {
    check_proportional_123(inst)?;
    let c = inst.velocities()[0];
    let starts = inst.starts();
    let count = config::SPECTATOR_GRID;
    let h = 1.0 / count as f64;
    let grid = Grid::new(0.0, h);

    let mut out = Vec::new();
    for spec in Spectator::ALL {
        let pos = spec.position();
        let margin_at = |u: f64| -> f64 {
            (0..3)
                .map(|j| torus_norm(starts[j] + u * (j + 1) as f64 - pos))
                .fold(f64::INFINITY, f64::min)
                - 0.25
        };
        let runs = scan::true_runs(grid, count, |u| margin_at(u) >= config::SPECTATOR_RUN_SLACK);
        let best = runs
            .into_iter()
            .filter(|(a, b)| b > a)
            .max_by_key(|(a, b)| (b - a, u64::MAX - a));
        if let Some((a, b)) = best {
            let mut min_margin = f64::INFINITY;
            for k in a..=b {
                min_margin = min_margin.min(margin_at(grid.t(k)));
            }
            out.push(SpectatorVerdict {
                spectator: spec,
                // rescale from the normalized period back to original time
                witness_interval: (grid.t(a) / c, grid.t(b) / c),
                margin: min_margin,
            });
        }
    }
    Ok(out)
}

/// For velocities proportional to 1:2:3: a spectator among {1, i, −i} and an
/// open interval on which all runners keep distance > 1/4 from it.
pub fn select_spectator(inst: &RunnerInstance) -> Result<SpectatorVerdict, RunnerError> {
    let candidates = spectator_candidates(inst)?;
    candidates.into_iter().next().ok_or(RunnerError::ScanFailure {
        resolution: 1.0 / config::SPECTATOR_GRID as f64,
    })
}
