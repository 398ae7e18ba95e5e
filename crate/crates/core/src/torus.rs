//! Simultaneous approximation on ℝ/ℤ: good/bad target classification and
//! deterministic witness scans for `‖t·λ_j − x_j‖ ≤ ε`.

use serde::Serialize;
use thiserror::Error;

use crate::config;
use crate::error::InputError;
use crate::exact::ExactReal;
use crate::relations::{float_relation_guess_with, relation_lattice};
use crate::scan::{self, Grid};

/// Distance from `x` to the nearest integer, in `[0, 1/2]`.
#[inline]
pub fn torus_norm(x: f64) -> f64 {
    (x - x.round()).abs()
}

/// Fractional part in `[0, 1)`.
#[inline]
pub fn frac(x: f64) -> f64 {
    let f = x - x.floor();
    if f >= 1.0 {
        0.0
    } else {
        f
    }
}

/// Frequencies either as exact elements of a declared ℚ-span or as bare
/// floats handled heuristically.
#[derive(Debug, Clone)]
pub enum Lambdas {
    Exact(Vec<ExactReal>),
    Float(Vec<f64>),
}

impl Lambdas {
    pub fn len(&self) -> usize {
        match self {
            Lambdas::Exact(v) => v.len(),
            Lambdas::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn float_values(&self) -> Vec<f64> {
        match self {
            Lambdas::Exact(v) => v.iter().map(|l| l.float_value()).collect(),
            Lambdas::Float(v) => v.clone(),
        }
    }
}

/// Tunables for classification and witness scans.
#[derive(Debug, Clone)]
pub struct TorusConfig {
    /// Tolerance for `Σ p_j x_j ≡ 0 (mod 1)` on float targets.
    pub relation_tol: f64,
    /// Height bound for the heuristic float relation guess.
    pub height_bound: i64,
    /// Tolerance for the heuristic relation guess itself.
    pub float_relation_tol: f64,
}

impl Default for TorusConfig {
    fn default() -> Self {
        TorusConfig {
            relation_tol: config::RELATION_TOL,
            height_bound: config::DEFAULT_HEIGHT_BOUND,
            float_relation_tol: config::FLOAT_RELATION_TOL,
        }
    }
}

/// A simultaneous-approximation task: find t ≥ window_start with
/// `‖t·λ_j − x_j‖ ≤ ε` for all j.
#[derive(Debug, Clone)]
pub struct ApproxTask {
    pub lambdas: Lambdas,
    pub targets: Vec<f64>,
    pub epsilon: f64,
    pub window_start: f64,
    pub scan_budget: u64,
    pub config: TorusConfig,
}

impl ApproxTask {
    pub fn new(
        lambdas: Lambdas,
        targets: Vec<f64>,
        epsilon: f64,
        window_start: f64,
        scan_budget: u64,
    ) -> Result<Self, InputError> {
        if lambdas.is_empty() {
            return Err(InputError::new("at least one frequency required"));
        }
        if lambdas.len() != targets.len() {
            return Err(InputError::new("frequencies and targets differ in length"));
        }
        if !(epsilon > 0.0 && epsilon <= 0.5) {
            return Err(InputError::new("epsilon must lie in (0, 1/2]"));
        }
        if scan_budget == 0 {
            return Err(InputError::new("scan budget must be positive"));
        }
        Ok(ApproxTask {
            lambdas,
            targets,
            epsilon,
            window_start,
            scan_budget,
            config: TorusConfig::default(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerdictKind {
    Good,
    Bad,
}

/// Result of testing the congruence condition over every known relation.
#[derive(Debug, Clone, Serialize)]
pub struct SequenceVerdict {
    pub kind: VerdictKind,
    pub violating_relation: Option<Vec<i64>>,
    /// Distance of `Σ p_j x_j` from ℤ for the violating relation.
    pub defect: Option<f64>,
    /// True when the relation set came from the float heuristic, in which
    /// case `Good` is not a proof.
    pub heuristic: bool,
}

/// Targets are good for λ iff every integer relation of λ carries over to a
/// mod-1 relation of the targets. Exact λ's use the exact relation lattice;
/// float λ's use the heuristic guess and flag the verdict.
pub fn classify_sequence(task: &ApproxTask) -> Result<SequenceVerdict, InputError> {
    let (relations, heuristic) = match &task.lambdas {
        Lambdas::Exact(l) => (relation_lattice(l)?.basis_vectors().to_vec(), false),
        Lambdas::Float(x) => {
            let found =
                float_relation_guess_with(x, task.config.height_bound, task.config.float_relation_tol);
            (found.into_iter().collect(), true)
        }
    };
    for p in &relations {
        let combo: f64 = p
            .iter()
            .zip(&task.targets)
            .map(|(&pj, &xj)| pj as f64 * xj)
            .sum();
        let defect = torus_norm(combo);
        if defect > task.config.relation_tol {
            return Ok(SequenceVerdict {
                kind: VerdictKind::Bad,
                violating_relation: Some(p.clone()),
                defect: Some(defect),
                heuristic,
            });
        }
    }
    Ok(SequenceVerdict {
        kind: VerdictKind::Good,
        violating_relation: None,
        defect: None,
        heuristic,
    })
}

#[derive(Debug, Clone, Error)]
pub enum WitnessError {
    #[error("targets are a bad sequence for the frequencies")]
    BadSequence(SequenceVerdict),
    #[error("no witness within the scan budget of {scanned} samples (inconclusive, not a disproof)")]
    BudgetExhausted { scanned: u64 },
    #[error(transparent)]
    Input(#[from] InputError),
}

/// A found approximation time and the error it achieves.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Witness {
    pub t: f64,
    pub achieved_error: f64,
}

/// Worst torus error of time `t` against the task's targets.
pub fn max_error(lambdas: &[f64], targets: &[f64], t: f64) -> f64 {
    lambdas
        .iter()
        .zip(targets)
        .map(|(&l, &x)| torus_norm(t * l - x))
        .fold(0.0, f64::max)
}

/// Raw witness scan without the good/bad gate: uniform grid from
/// `window_start` at step `ε / (4·max|λ_j|)`, minimal-t hit, processed in
/// doubling spans until the budget runs out.
pub fn scan_witness_unchecked(
    lambdas: &[f64],
    targets: &[f64],
    epsilon: f64,
    window_start: f64,
    budget: u64,
) -> Result<Witness, WitnessError> {
    let max_l = lambdas.iter().fold(0.0f64, |a, &l| a.max(l.abs()));
    if max_l == 0.0 {
        let err = max_error(lambdas, targets, window_start);
        if err <= epsilon {
            return Ok(Witness { t: window_start, achieved_error: err });
        }
        return Err(WitnessError::BudgetExhausted { scanned: 1 });
    }
    let step = epsilon / (4.0 * max_l);
    let grid = Grid::new(window_start, step);
    match scan::first_hit(grid, budget, |t| max_error(lambdas, targets, t) <= epsilon) {
        Some((_, t)) => Ok(Witness {
            t,
            achieved_error: max_error(lambdas, targets, t),
        }),
        None => Err(WitnessError::BudgetExhausted { scanned: budget }),
    }
}

/// Witness search gated by classification: bad sequences are rejected with
/// the violating relation, good ones are scanned deterministically.
pub fn kronecker_witness(task: &ApproxTask) -> Result<Witness, WitnessError> {
    let verdict = classify_sequence(task)?;
    if verdict.kind == VerdictKind::Bad {
        return Err(WitnessError::BadSequence(verdict));
    }
    let lambdas = task.lambdas.float_values();
    let witness = scan_witness_unchecked(
        &lambdas,
        &task.targets,
        task.epsilon,
        task.window_start,
        task.scan_budget,
    )?;
    debug_assert!(witness.achieved_error <= task.epsilon);
    debug_assert!(witness.t >= task.window_start);
    Ok(witness)
}
