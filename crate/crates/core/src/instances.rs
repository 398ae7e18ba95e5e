//! Seeded random instance generators for the stress and acceptance suites.
//!
//! Everything here is deterministic given the seed, so suite outcomes are
//! reproducible across runs and across the parallel/sequential builds.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{ratio, ExactReal, RealBasis};
use crate::gabor::{PointSet, TFPoint};
use crate::relations::relation_lattice;
use crate::runner::RunnerInstance;

pub fn suite_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// n distinct rational velocities in (0, 10] with denominators ≤ 6, sorted,
/// together with their exact values.
pub fn rational_velocities(rng: &mut ChaCha8Rng, n: usize) -> (Vec<f64>, Vec<ExactReal>) {
    let basis = RealBasis::rational();
    loop {
        let mut pairs: Vec<(i64, i64)> = Vec::with_capacity(n);
        for _ in 0..n {
            let den = rng.gen_range(1..=6i64);
            let num = rng.gen_range(1..=10 * den);
            pairs.push((num, den));
        }
        let mut vals: Vec<(f64, (i64, i64))> =
            pairs.iter().map(|&(p, q)| (p as f64 / q as f64, (p, q))).collect();
        vals.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite"));
        if vals.windows(2).any(|w| w[0].0 == w[1].0) {
            continue;
        }
        let floats: Vec<f64> = vals.iter().map(|v| v.0).collect();
        let exact: Vec<ExactReal> = vals
            .iter()
            .map(|&(_, (p, q))| ExactReal::from_rational(&basis, ratio(p, q)))
            .collect();
        return (floats, exact);
    }
}

pub fn random_starts(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(0.0..1.0)).collect()
}

/// A random three-runner instance with rational velocities and its exact data.
pub fn random_runner_instance(rng: &mut ChaCha8Rng) -> RunnerInstance {
    let (_, exact) = rational_velocities(rng, 3);
    let starts = random_starts(rng, 3);
    RunnerInstance::with_exact(exact, starts).expect("generated instance is valid")
}

/// A simultaneous-approximation instance over the basis {1, √2, √3} with a
/// planted relation structure and targets sampled from the orbit (good) or
/// knocked off it (bad).
#[derive(Debug, Clone)]
pub struct PlantedApprox {
    pub lambdas: Vec<ExactReal>,
    pub targets: Vec<f64>,
    pub good: bool,
    /// Number of independent relations planted among the λ's.
    pub relation_rank: usize,
}

pub fn planted_approx_instance(rng: &mut ChaCha8Rng, make_bad: bool) -> PlantedApprox {
    let basis = RealBasis::one_sqrt2_sqrt3();
    // generators: one or two independent small combinations
    let m = if rng.gen_bool(0.6) { 1 } else { 2 };
    let generators: Vec<ExactReal> = loop {
        let gens: Vec<ExactReal> = (0..m)
            .map(|_| {
                let coeffs = [
                    rng.gen_range(0..=2i64),
                    rng.gen_range(0..=2i64),
                    rng.gen_range(0..=2i64),
                ];
                ExactReal::from_int_coeffs(&basis, &coeffs).expect("valid combo")
            })
            .collect();
        if gens.iter().any(|g| g.is_zero()) {
            continue;
        }
        if m == 2 && !relation_lattice(&gens).expect("lattice").is_empty() {
            continue;
        }
        break gens;
    };

    let n = 3;
    let lambdas: Vec<ExactReal> = loop {
        let cand: Vec<ExactReal> = (0..n)
            .map(|_| {
                let mut acc = ExactReal::zero(&basis);
                for g in &generators {
                    let k = rng.gen_range(-2..=2i64);
                    acc = acc.add(&g.scale(&ratio(k, 1))).expect("same basis");
                }
                acc
            })
            .collect();
        if cand.iter().all(|l| !l.is_zero()) {
            break cand;
        }
    };
    let lattice = relation_lattice(&lambdas).expect("lattice");
    let relation_rank = lattice.rank();

    // orbit-sampled targets are good by construction
    let t_bar: f64 = rng.gen_range(0.0..30.0);
    let mut targets: Vec<f64> = lambdas
        .iter()
        .map(|l| {
            let x = t_bar * l.float_value();
            x - x.floor()
        })
        .collect();

    let mut good = true;
    if make_bad && relation_rank > 0 {
        // perturb one coordinate that some relation actually sees
        let p = &lattice.basis_vectors()[0];
        let j = p.iter().position(|&v| v != 0).expect("nonzero relation");
        let delta = 0.3 / p[j].abs() as f64;
        targets[j] = {
            let x = targets[j] + delta;
            x - x.floor()
        };
        good = false;
    }

    PlantedApprox { lambdas, targets, good, relation_rank }
}

/// Random 4-point set with pairwise Euclidean separation at least `sep`.
pub fn random_4pt_separated(rng: &mut ChaCha8Rng, sep: f64) -> PointSet {
    loop {
        let pts: Vec<(f64, f64)> = (0..4)
            .map(|_| (rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5)))
            .collect();
        let ok = pts.iter().enumerate().all(|(i, a)| {
            pts[i + 1..]
                .iter()
                .all(|b| ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt() >= sep)
        });
        if !ok {
            continue;
        }
        if let Ok(ps) = PointSet::from_floats(&pts) {
            return ps;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseFamily {
    One,
    Two,
    Three,
}

/// A normalized configuration from the requested frequency-pattern family,
/// with random nonzero coefficients in relation form (one per non-origin
/// point).
pub fn random_case_config(
    rng: &mut ChaCha8Rng,
    family: CaseFamily,
) -> (PointSet, Vec<Complex64>) {
    let mut taus: Vec<f64> = Vec::new();
    while taus.len() < 3 {
        let t: f64 = rng.gen_range(-1.5..1.5);
        if t.abs() > 0.05 && taus.iter().all(|&u| (u - t).abs() > 0.05) {
            taus.push(t);
        }
    }
    let omegas: Vec<f64> = match family {
        CaseFamily::One => {
            if rng.gen_bool(0.4) {
                // integer patterns, extremal ratio included
                let tuples = [[1.0, 2.0, 3.0], [1.0, 2.0, 4.0], [1.0, 3.0, 5.0], [2.0, 3.0, 7.0]];
                let t = tuples[rng.gen_range(0..tuples.len())];
                let scale = rng.gen_range(1..=3) as f64 / rng.gen_range(1..=2) as f64;
                t.iter().map(|&w| w * scale).collect()
            } else {
                let mut w: Vec<f64> = (0..3).map(|_| rng.gen_range(0.2..4.0)).collect();
                w.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
                while w.windows(2).any(|p| p[1] - p[0] < 0.05) {
                    w = (0..3).map(|_| rng.gen_range(0.2..4.0)).collect();
                    w.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
                }
                w
            }
        }
        CaseFamily::Two => {
            let w2 = rng.gen_range(0.3..2.0);
            let w3 = w2 + rng.gen_range(0.3..2.0);
            vec![0.0, w2, w3]
        }
        CaseFamily::Three => {
            let w3 = rng.gen_range(0.3..3.0);
            vec![0.0, 0.0, w3]
        }
    };
    let mut points = vec![TFPoint::new(0.0, 0.0)];
    for (t, w) in taus.iter().zip(&omegas) {
        points.push(TFPoint::new(*t, *w));
    }
    let lambda = PointSet::new(points).expect("distinct by construction");
    let c: Vec<Complex64> = (0..3)
        .map(|_| {
            let r = rng.gen_range(0.2..1.5);
            let phi = rng.gen_range(0.0..std::f64::consts::TAU);
            Complex64::from_polar(r, phi)
        })
        .collect();
    (lambda, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::is_proportional_123;
    use crate::torus::torus_norm;

    #[test]
    fn velocities_sorted_distinct() {
        let mut rng = suite_rng(1);
        for _ in 0..50 {
            let (v, e) = rational_velocities(&mut rng, 3);
            assert!(v.windows(2).all(|w| w[0] < w[1]));
            assert!(v[0] > 0.0 && v[2] <= 10.0);
            assert_eq!(v.len(), e.len());
            let _ = is_proportional_123(&e[0], &e[1], &e[2]).unwrap();
        }
    }

    #[test]
    fn planted_good_targets_satisfy_relations() {
        let mut rng = suite_rng(2);
        for _ in 0..50 {
            let inst = planted_approx_instance(&mut rng, false);
            assert!(inst.good);
            let lat = relation_lattice(&inst.lambdas).unwrap();
            assert_eq!(lat.rank(), inst.relation_rank);
            for p in lat.basis_vectors() {
                let combo: f64 = p
                    .iter()
                    .zip(&inst.targets)
                    .map(|(&pj, &xj)| pj as f64 * xj)
                    .sum();
                assert!(torus_norm(combo) <= 1e-9, "planted relation violated");
            }
        }
    }

    #[test]
    fn planted_bad_targets_violate() {
        let mut rng = suite_rng(3);
        let mut bad_seen = 0;
        for _ in 0..50 {
            let inst = planted_approx_instance(&mut rng, true);
            if inst.relation_rank == 0 {
                continue;
            }
            bad_seen += 1;
            let lat = relation_lattice(&inst.lambdas).unwrap();
            let violated = lat.basis_vectors().iter().any(|p| {
                let combo: f64 = p
                    .iter()
                    .zip(&inst.targets)
                    .map(|(&pj, &xj)| pj as f64 * xj)
                    .sum();
                torus_norm(combo) > 1e-9
            });
            assert!(violated, "bad instance should violate some relation");
        }
        assert!(bad_seen > 0);
    }

    #[test]
    fn separated_points() {
        let mut rng = suite_rng(4);
        let ps = random_4pt_separated(&mut rng, 0.1);
        let pts = ps.points();
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                let d = ((a.tau - b.tau).powi(2)
                    + (a.omega_value() - b.omega_value()).powi(2))
                .sqrt();
                assert!(d >= 0.1);
            }
        }
    }

    #[test]
    fn case_configs_match_pattern() {
        let mut rng = suite_rng(5);
        for (family, zeros) in [
            (CaseFamily::One, 1),
            (CaseFamily::Two, 2),
            (CaseFamily::Three, 3),
        ] {
            let (lam, c) = random_case_config(&mut rng, family);
            assert_eq!(lam.len(), 4);
            assert_eq!(c.len(), 3);
            let zero_count = lam.omegas().iter().filter(|&&w| w == 0.0).count();
            assert_eq!(zero_count, zeros);
            assert!(c.iter().all(|z| z.norm() > 0.0));
        }
    }
}
