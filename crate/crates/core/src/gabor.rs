//! Evaluable test functions, time-frequency shifts, and Gram-matrix
//! independence scoring over a finite quadrature window.

use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::config;
use crate::error::InputError;
use crate::exact::{ExactReal, ExactRealDto, RealBasis};

#[derive(Debug, Clone, Error)]
pub enum GaborError {
    #[error("transform determinant {det} is not 1")]
    DetNotOne { det: f64 },
    #[error(transparent)]
    Input(#[from] InputError),
}

/// A frequency shift: either a bare float or an exact element of a declared
/// ℚ-span (which enables exact relation decisions downstream).
#[derive(Debug, Clone, PartialEq)]
pub enum Frequency {
    Float(f64),
    Exact(ExactReal),
}

impl Frequency {
    pub fn float_value(&self) -> f64 {
        match self {
            Frequency::Float(v) => *v,
            Frequency::Exact(x) => x.float_value(),
        }
    }

    pub fn exact(&self) -> Option<&ExactReal> {
        match self {
            Frequency::Exact(x) => Some(x),
            Frequency::Float(_) => None,
        }
    }

    /// Negation, staying exact when the value is exact.
    pub fn neg(&self) -> Frequency {
        match self {
            Frequency::Float(v) => Frequency::Float(-v),
            Frequency::Exact(x) => Frequency::Exact(x.neg()),
        }
    }

    /// Difference, staying exact when both sides are exact.
    pub fn sub(&self, other: &Frequency) -> Frequency {
        match (self, other) {
            (Frequency::Exact(a), Frequency::Exact(b)) => match a.sub(b) {
                Ok(d) => Frequency::Exact(d),
                Err(_) => Frequency::Float(a.float_value() - b.float_value()),
            },
            _ => Frequency::Float(self.float_value() - other.float_value()),
        }
    }
}

impl From<f64> for Frequency {
    fn from(v: f64) -> Self {
        Frequency::Float(v)
    }
}

/// A point (τ, ω) of the time-frequency plane.
#[derive(Debug, Clone, PartialEq)]
pub struct TFPoint {
    pub tau: f64,
    pub omega: Frequency,
}

impl TFPoint {
    pub fn new(tau: f64, omega: impl Into<Frequency>) -> Self {
        TFPoint { tau, omega: omega.into() }
    }

    pub fn omega_value(&self) -> f64 {
        self.omega.float_value()
    }
}

/// A finite set Λ of pairwise distinct time-frequency points.
#[derive(Debug, Clone)]
pub struct PointSet {
    points: Vec<TFPoint>,
}

impl PointSet {
    pub fn new(points: Vec<TFPoint>) -> Result<Self, InputError> {
        if points.is_empty() {
            return Err(InputError::new("point set must be nonempty"));
        }
        for p in &points {
            if !p.tau.is_finite() || !p.omega_value().is_finite() {
                return Err(InputError::new("points must be finite"));
            }
        }
        for (i, p) in points.iter().enumerate() {
            for q in &points[i + 1..] {
                if p.tau == q.tau && p.omega_value() == q.omega_value() {
                    return Err(InputError::new("points must be pairwise distinct"));
                }
            }
        }
        Ok(PointSet { points })
    }

    pub fn from_floats(pairs: &[(f64, f64)]) -> Result<Self, InputError> {
        Self::new(pairs.iter().map(|&(t, w)| TFPoint::new(t, w)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> &[TFPoint] {
        &self.points
    }

    pub fn omegas(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.omega_value()).collect()
    }

    pub fn taus(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.tau).collect()
    }
}

// ---------------------------------------------------------------------------
// function models
// ---------------------------------------------------------------------------

/// Behavior of the one-sided exponential left of its onset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeftTail {
    /// Identically zero: the model is supported on a half-line.
    Zero,
    /// Small positive ramp `e^{rate·(t−t₀)}`: positive everywhere, still L².
    Ramp,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HalfLineProfile {
    ExpDecay { rate: f64 },
    Bump { width: f64 },
}

/// Evaluable real-valued test functions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FunctionModel {
    Gaussian { center: f64, width: f64 },
    OneSidedExpDecay { onset: f64, rate: f64, left_tail: LeftTail },
    TwoPlusCos,
    HalfLine { onset: f64, profile: HalfLineProfile },
    /// `scale · base^t` on all of ℝ; requires `scale > 0`, `base ∈ (0, 1)`.
    ExpPure { scale: f64, base: f64 },
    Tabulated { grid_start: f64, grid_step: f64, values: Vec<f64> },
    Shifted { inner: Box<FunctionModel>, shift: f64 },
}

impl FunctionModel {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            FunctionModel::Gaussian { center, width } => {
                let u = (t - center) / width;
                (-PI * u * u).exp()
            }
            FunctionModel::OneSidedExpDecay { onset, rate, left_tail } => {
                if t >= *onset {
                    (-rate * (t - onset)).exp()
                } else {
                    match left_tail {
                        LeftTail::Zero => 0.0,
                        LeftTail::Ramp => (rate * (t - onset)).exp(),
                    }
                }
            }
            FunctionModel::TwoPlusCos => 2.0 + (2.0 * PI * t).cos(),
            FunctionModel::HalfLine { onset, profile } => {
                if t < *onset {
                    0.0
                } else {
                    match profile {
                        HalfLineProfile::ExpDecay { rate } => (-rate * (t - onset)).exp(),
                        HalfLineProfile::Bump { width } => {
                            let u = (t - onset) / width;
                            (-PI * u * u).exp()
                        }
                    }
                }
            }
            FunctionModel::ExpPure { scale, base } => scale * base.powf(t),
            FunctionModel::Tabulated { grid_start, grid_step, values } => {
                if values.is_empty() {
                    return 0.0;
                }
                let x = (t - grid_start) / grid_step;
                if x < 0.0 || x > (values.len() - 1) as f64 {
                    return 0.0;
                }
                let i = (x.floor() as usize).min(values.len() - 1);
                if i + 1 >= values.len() {
                    return values[i];
                }
                let frac = x - i as f64;
                values[i] * (1.0 - frac) + values[i + 1] * frac
            }
            FunctionModel::Shifted { inner, shift } => inner.eval(t - shift),
        }
    }

    /// Square integrability over ℝ; non-L² models are admitted but flagged.
    pub fn is_square_integrable(&self) -> bool {
        match self {
            FunctionModel::Gaussian { .. }
            | FunctionModel::OneSidedExpDecay { .. }
            | FunctionModel::HalfLine { .. }
            | FunctionModel::Tabulated { .. } => true,
            FunctionModel::TwoPlusCos | FunctionModel::ExpPure { .. } => false,
            FunctionModel::Shifted { inner, .. } => inner.is_square_integrable(),
        }
    }

    /// Some t₀ with `f(t) > 0` for all `t ≥ t₀`, when one exists.
    pub fn positivity_onset(&self) -> Option<f64> {
        match self {
            FunctionModel::Gaussian { center, .. } => Some(*center),
            FunctionModel::OneSidedExpDecay { onset, .. } => Some(*onset),
            FunctionModel::TwoPlusCos => Some(0.0),
            FunctionModel::HalfLine { onset, .. } => Some(*onset),
            FunctionModel::ExpPure { scale, .. } => (*scale > 0.0).then_some(0.0),
            FunctionModel::Tabulated { .. } => None,
            FunctionModel::Shifted { inner, shift } => {
                inner.positivity_onset().map(|t0| t0 + shift)
            }
        }
    }

    pub fn is_ultimately_positive(&self) -> bool {
        self.positivity_onset().is_some()
    }

    /// Left endpoint of a half-line containing the support, when the model
    /// vanishes identically before some point.
    pub fn half_line_support_start(&self) -> Option<f64> {
        match self {
            FunctionModel::OneSidedExpDecay { onset, left_tail: LeftTail::Zero, .. } => Some(*onset),
            FunctionModel::HalfLine { onset, .. } => Some(*onset),
            FunctionModel::Tabulated { grid_start, .. } => Some(*grid_start),
            FunctionModel::Shifted { inner, shift } => {
                inner.half_line_support_start().map(|s| s + shift)
            }
            _ => None,
        }
    }

    /// The translate `T_s f`, i.e. `t ↦ f(t − s)`.
    pub fn shifted(&self, s: f64) -> FunctionModel {
        if s == 0.0 {
            return self.clone();
        }
        match self {
            FunctionModel::Shifted { inner, shift } => FunctionModel::Shifted {
                inner: inner.clone(),
                shift: shift + s,
            },
            other => FunctionModel::Shifted {
                inner: Box::new(other.clone()),
                shift: s,
            },
        }
    }
}

// ---------------------------------------------------------------------------
// sampling and Gram matrices
// ---------------------------------------------------------------------------

/// Uniform sampling of `[−T, T]` with n points.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SampleGrid {
    pub half_width: f64,
    pub n: usize,
}

impl SampleGrid {
    pub fn new(half_width: f64, n: usize) -> Result<Self, InputError> {
        if !(half_width > 0.0) {
            return Err(InputError::new("window half-width must be positive"));
        }
        if n < 2 {
            return Err(InputError::new("at least two samples required"));
        }
        Ok(SampleGrid { half_width, n })
    }

    pub fn step(&self) -> f64 {
        2.0 * self.half_width / (self.n - 1) as f64
    }

    pub fn t(&self, i: usize) -> f64 {
        -self.half_width + i as f64 * self.step()
    }

    /// Trapezoidal weight of sample i.
    pub fn weight(&self, i: usize) -> f64 {
        if i == 0 || i == self.n - 1 {
            self.step() / 2.0
        } else {
            self.step()
        }
    }
}

/// Samples of `e^{2πiωt} f(t−τ)` on the grid.
pub fn tf_shift_eval(f: &FunctionModel, p: &TFPoint, grid: SampleGrid) -> Vec<Complex64> {
    let omega = p.omega_value();
    (0..grid.n)
        .map(|i| {
            let t = grid.t(i);
            let phase = 2.0 * PI * omega * t;
            Complex64::from_polar(1.0, phase) * f.eval(t - p.tau)
        })
        .collect()
}

/// One sample vector per point of Λ.
#[derive(Debug, Clone)]
pub struct SampledSystem {
    pub grid: SampleGrid,
    pub vectors: Vec<Vec<Complex64>>,
}

pub fn sample_system(
    f: &FunctionModel,
    lambda: &PointSet,
    half_width: f64,
    n: usize,
) -> Result<SampledSystem, InputError> {
    let grid = SampleGrid::new(half_width, n)?;
    let eval = |p: &TFPoint| tf_shift_eval(f, p, grid);
    #[cfg(feature = "parallel")]
    let vectors: Vec<_> = lambda.points().par_iter().map(eval).collect();
    #[cfg(not(feature = "parallel"))]
    let vectors: Vec<_> = lambda.points().iter().map(eval).collect();
    Ok(SampledSystem { grid, vectors })
}

/// Hermitian Gram matrix of the sampled system under trapezoidal quadrature
/// over `[−T, T]`.
pub fn gram_matrix(
    f: &FunctionModel,
    lambda: &PointSet,
    half_width: f64,
    n: usize,
) -> Result<DMatrix<Complex64>, InputError> {
    let system = sample_system(f, lambda, half_width, n)?;
    Ok(gram_of_samples(&system))
}

pub fn gram_of_samples(system: &SampledSystem) -> DMatrix<Complex64> {
    let m = system.vectors.len();
    let grid = system.grid;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|j| (j..m).map(move |k| (j, k))).collect();
    let inner = |&(j, k): &(usize, usize)| -> (usize, usize, Complex64) {
        let gj = &system.vectors[j];
        let gk = &system.vectors[k];
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..grid.n {
            acc += gj[i].conj() * gk[i] * grid.weight(i);
        }
        (j, k, acc)
    };
    #[cfg(feature = "parallel")]
    let entries: Vec<_> = pairs.par_iter().map(inner).collect();
    #[cfg(not(feature = "parallel"))]
    let entries: Vec<_> = pairs.iter().map(inner).collect();

    let mut g = DMatrix::<Complex64>::zeros(m, m);
    for (j, k, v) in entries {
        if j == k {
            g[(j, j)] = Complex64::new(v.re, 0.0);
        } else {
            g[(j, k)] = v;
            g[(k, j)] = v.conj();
        }
    }
    g
}

/// Minimum Gram eigenvalue with an optional normalized null vector.
#[derive(Debug, Clone)]
pub struct IndependenceScore {
    pub min_eigenvalue: f64,
    pub trace: f64,
    /// Present when `min_eigenvalue ≤ null_threshold · trace`; unit norm.
    pub null_vector: Option<Vec<Complex64>>,
    /// Quadrature norm of the null combination, when one is returned.
    pub residual: Option<f64>,
}

pub fn independence_score(
    f: &FunctionModel,
    lambda: &PointSet,
    half_width: f64,
    n: usize,
) -> Result<IndependenceScore, InputError> {
    let g = gram_matrix(f, lambda, half_width, n)?;
    Ok(score_from_gram(&g))
}

pub fn score_from_gram(g: &DMatrix<Complex64>) -> IndependenceScore {
    let m = g.nrows();
    let trace: f64 = (0..m).map(|i| g[(i, i)].re).sum();
    let eig = g.clone().symmetric_eigen();
    let mut min_idx = 0;
    for i in 1..m {
        if eig.eigenvalues[i] < eig.eigenvalues[min_idx] {
            min_idx = i;
        }
    }
    let min_eigenvalue = eig.eigenvalues[min_idx];

    let mut null_vector = None;
    let mut residual = None;
    if min_eigenvalue <= config::NULL_THRESHOLD * trace.max(f64::MIN_POSITIVE) {
        let col = eig.eigenvectors.column(min_idx);
        let norm: f64 = col.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        let v: Vec<Complex64> = col.iter().map(|c| c / norm).collect();
        // ‖Σ c_j g_j‖² = cᴴ G c under the quadrature inner product
        let mut quad = Complex64::new(0.0, 0.0);
        for j in 0..m {
            for k in 0..m {
                quad += v[j].conj() * g[(j, k)] * v[k];
            }
        }
        residual = Some(quad.re.max(0.0).sqrt());
        null_vector = Some(v);
    }

    IndependenceScore {
        min_eigenvalue,
        trace,
        null_vector,
        residual,
    }
}

// ---------------------------------------------------------------------------
// normalizations
// ---------------------------------------------------------------------------

/// Translate Λ so that its (min ω, then min τ) point lands on the origin and
/// shift f accordingly. Independence of the system is unaffected.
pub fn normalize_origin(
    f: &FunctionModel,
    lambda: &PointSet,
) -> (TFPoint, PointSet, FunctionModel) {
    let points = lambda.points();
    let mut idx = 0;
    for (i, p) in points.iter().enumerate() {
        let best = &points[idx];
        let key = (p.omega_value(), p.tau);
        let best_key = (best.omega_value(), best.tau);
        if key < best_key {
            idx = i;
        }
    }
    let origin = points[idx].clone();
    let shifted: Vec<TFPoint> = points
        .iter()
        .map(|p| TFPoint {
            tau: p.tau - origin.tau,
            omega: p.omega.sub(&origin.omega),
        })
        .collect();
    let lam = PointSet { points: shifted };
    let f_shifted = f.shifted(origin.tau);
    (origin, lam, f_shifted)
}

/// Apply a determinant-1 linear map of the time-frequency plane to Λ.
/// `a` is row-major: `(τ, ω) ↦ (a₀₀τ + a₀₁ω, a₁₀τ + a₁₁ω)`.
pub fn apply_metaplectic(lambda: &PointSet, a: [[f64; 2]; 2]) -> Result<PointSet, GaborError> {
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (det - 1.0).abs() > config::DET_ONE_TOL {
        return Err(GaborError::DetNotOne { det });
    }
    let points = lambda
        .points()
        .iter()
        .map(|p| {
            let w = p.omega_value();
            TFPoint::new(
                a[0][0] * p.tau + a[0][1] * w,
                a[1][0] * p.tau + a[1][1] * w,
            )
        })
        .collect();
    PointSet::new(points).map_err(GaborError::from)
}

/// `|f(t) − Σ c_k e^{2πiω_k t} f(t−τ_k)|` where the sum runs over the
/// non-origin points of Λ in stored order.
pub fn dependence_residual(
    f: &FunctionModel,
    lambda: &PointSet,
    c: &[Complex64],
    t: f64,
) -> Result<f64, InputError> {
    let non_origin: Vec<&TFPoint> = lambda
        .points()
        .iter()
        .filter(|p| !(p.tau == 0.0 && p.omega_value() == 0.0))
        .collect();
    if non_origin.len() != lambda.len() - 1 {
        return Err(InputError::new("point set must contain the origin exactly once"));
    }
    if c.len() != non_origin.len() {
        return Err(InputError::new("coefficient count must match non-origin points"));
    }
    let mut acc = Complex64::new(f.eval(t), 0.0);
    for (ck, p) in c.iter().zip(&non_origin) {
        let phase = 2.0 * PI * p.omega_value() * t;
        acc -= ck * Complex64::from_polar(1.0, phase) * f.eval(t - p.tau);
    }
    Ok(acc.norm())
}

// ---------------------------------------------------------------------------
// JSON DTOs
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OmegaDto {
    Float(f64),
    Exact(ExactRealDto),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TFPointDto {
    pub tau: f64,
    pub omega: OmegaDto,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointSetDto {
    pub points: Vec<TFPointDto>,
}

impl PointSetDto {
    pub fn bind(&self, basis: Option<&Arc<RealBasis>>) -> Result<PointSet, InputError> {
        let points = self
            .points
            .iter()
            .map(|p| {
                let omega = match &p.omega {
                    OmegaDto::Float(v) => Frequency::Float(*v),
                    OmegaDto::Exact(dto) => {
                        let basis = basis.ok_or_else(|| {
                            InputError::new("exact frequencies require a basis file")
                        })?;
                        Frequency::Exact(ExactReal::from_dto(dto, basis)?)
                    }
                };
                Ok(TFPoint { tau: p.tau, omega })
            })
            .collect::<Result<Vec<_>, InputError>>()?;
        PointSet::new(points)
    }
}

impl From<&PointSet> for PointSetDto {
    fn from(ps: &PointSet) -> Self {
        PointSetDto {
            points: ps
                .points()
                .iter()
                .map(|p| TFPointDto {
                    tau: p.tau,
                    omega: match &p.omega {
                        Frequency::Float(v) => OmegaDto::Float(*v),
                        Frequency::Exact(x) => match x.to_dto() {
                            Ok(dto) => OmegaDto::Exact(dto),
                            Err(_) => OmegaDto::Float(x.float_value()),
                        },
                    },
                })
                .collect(),
        }
    }
}
