//! JSON report shapes emitted on standard output. Field order is fixed by
//! struct declaration, so identical runs print byte-identical documents.

use anyhow::Result;
use serde::Serialize;

use tfrunner_core::exact::ExactRealDto;
use tfrunner_core::gabor::{FunctionModel, IndependenceScore};
use tfrunner_core::relations::{RelationLattice, SubgroupBasis};
use tfrunner_core::torus::{SequenceVerdict, Witness};
use tfrunner_core::runner::LonelyWitness;

pub fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

#[derive(Serialize)]
pub struct AffineDim {
    pub affine_dimension: usize,
}

#[derive(Serialize)]
pub struct Relations {
    pub rank: usize,
    pub lattice: Vec<Vec<i64>>,
    pub generators: Vec<ExactRealDto>,
    pub coords: Vec<Vec<i64>>,
}

impl Relations {
    pub fn build(lattice: &RelationLattice, sg: &SubgroupBasis) -> Result<Self> {
        Ok(Relations {
            rank: lattice.rank(),
            lattice: lattice.basis_vectors().to_vec(),
            generators: sg
                .generators
                .iter()
                .map(|g| g.to_dto())
                .collect::<Result<Vec<_>, _>>()?,
            coords: sg.coords.clone(),
        })
    }
}

#[derive(Serialize)]
pub struct ApproxResult {
    pub verdict: SequenceVerdict,
    pub witness: Option<Witness>,
    pub error: Option<String>,
}

#[derive(Serialize)]
pub struct RunnerResult {
    pub witness: Option<LonelyWitness>,
    pub error: Option<String>,
}

#[derive(Serialize)]
pub struct ModelFlags {
    pub square_integrable: bool,
    pub ultimately_positive: bool,
    pub half_line_supported: bool,
}

#[derive(Serialize)]
pub struct ScoreReport {
    pub min_eigenvalue: f64,
    pub trace: f64,
    pub null_threshold_ratio: f64,
    pub numerically_dependent: bool,
    pub null_vector: Option<Vec<(f64, f64)>>,
    pub residual: Option<f64>,
    pub flags: ModelFlags,
}

impl ScoreReport {
    pub fn build(f: &FunctionModel, score: &IndependenceScore) -> Self {
        ScoreReport {
            min_eigenvalue: score.min_eigenvalue,
            trace: score.trace,
            null_threshold_ratio: tfrunner_core::config::NULL_THRESHOLD,
            numerically_dependent: score.null_vector.is_some(),
            null_vector: score
                .null_vector
                .as_ref()
                .map(|v| v.iter().map(|z| (z.re, z.im)).collect()),
            residual: score.residual,
            flags: ModelFlags {
                square_integrable: f.is_square_integrable(),
                ultimately_positive: f.is_ultimately_positive(),
                half_line_supported: f.half_line_support_start().is_some(),
            },
        }
    }
}

#[derive(Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub instances: u32,
    pub target: f64,
    pub successes: u32,
    pub worst_margin: Option<f64>,
    pub worst_velocities: Option<Vec<f64>>,
}
