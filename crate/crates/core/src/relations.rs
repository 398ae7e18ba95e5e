//! Exact ℚ-linear structure of finite real sets: affine dimension, integer
//! relation lattices, free-subgroup decompositions, and a heuristic
//! float-input relation guesser.
//!
//! All exact computations run over arbitrary-precision rationals/integers;
//! kernels are returned saturated (every basis vector primitive) and in
//! Hermite normal form so identical inputs give identical bases.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::InputError;
use crate::exact::{check_common_basis, integer_combination, ratio, ExactReal, Rational};

/// Basis of the lattice `{p ∈ ℤⁿ : Σ p_j λ_j = 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationLattice {
    basis_vectors: Vec<Vec<i64>>,
}

impl RelationLattice {
    pub fn basis_vectors(&self) -> &[Vec<i64>] {
        &self.basis_vectors
    }

    pub fn rank(&self) -> usize {
        self.basis_vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis_vectors.is_empty()
    }
}

/// Free-subgroup decomposition of the group generated by a list of reals.
#[derive(Debug, Clone)]
pub struct SubgroupBasis {
    /// ℚ-linearly independent generators ω₁,…,ω_m.
    pub generators: Vec<ExactReal>,
    /// `coords[j]` holds integers k with `λ_j = Σ_i k_i ω_i`, exactly.
    pub coords: Vec<Vec<i64>>,
}

// ---------------------------------------------------------------------------
// integer matrix helpers
// ---------------------------------------------------------------------------

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if (&r * 2u8).magnitude() >= b.magnitude() {
        if (a.sign() == Sign::Minus) == (b.sign() == Sign::Minus) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn row_submul(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let src_row = m[src].clone();
    for (d, s) in m[dst].iter_mut().zip(&src_row) {
        *d -= q * s;
    }
}

fn negate_row(m: &mut [Vec<BigInt>], i: usize) {
    for v in &mut m[i] {
        *v = -std::mem::take(v);
    }
}

/// Bring `w` to row echelon form using unimodular row operations, mirroring
/// every operation onto `u`. Returns the rank. Pivots end up positive.
fn row_echelon_unimodular(w: &mut Vec<Vec<BigInt>>, u: &mut Option<&mut Vec<Vec<BigInt>>>) -> usize {
    let rows = w.len();
    let cols = if rows == 0 { 0 } else { w[0].len() };
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let mut piv: Option<usize> = None;
            for i in r..rows {
                if !w[i][c].is_zero() {
                    piv = match piv {
                        Some(p) if w[i][c].magnitude() >= w[p][c].magnitude() => Some(p),
                        _ => Some(i),
                    };
                }
            }
            let Some(p) = piv else { break };
            w.swap(r, p);
            if let Some(u) = u.as_deref_mut() {
                u.swap(r, p);
            }
            let mut any_left = false;
            for i in (r + 1)..rows {
                if !w[i][c].is_zero() {
                    let q = div_round(&w[i][c], &w[r][c]);
                    row_submul(w, i, r, &q);
                    if let Some(u) = u.as_deref_mut() {
                        row_submul(u, i, r, &q);
                    }
                    any_left = any_left || !w[i][c].is_zero();
                }
            }
            if !any_left {
                break;
            }
        }
        if !w[r][c].is_zero() {
            if w[r][c].is_negative() {
                negate_row(w, r);
                if let Some(u) = u.as_deref_mut() {
                    negate_row(u, r);
                }
            }
            r += 1;
        }
    }
    r
}

/// Hermite normal form: echelon with positive pivots and the entries above
/// each pivot reduced into `[0, pivot)`. Canonical for a given row lattice.
fn hermite_normal_form(m: &mut Vec<Vec<BigInt>>) {
    let rank = row_echelon_unimodular(m, &mut None);
    m.truncate(rank);
    let cols = if rank == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::with_capacity(rank);
    for row in m.iter() {
        let c = (0..cols).find(|&c| !row[c].is_zero()).expect("nonzero row");
        pivots.push(c);
    }
    for r in (0..rank).rev() {
        let c = pivots[r];
        let piv = m[r][c].clone();
        for i in 0..r {
            let q = m[i][c].div_floor(&piv);
            row_submul(m, i, r, &q);
        }
    }
}

fn to_i64_vec(row: &[BigInt]) -> Result<Vec<i64>, InputError> {
    row.iter()
        .map(|v| {
            v.to_i64()
                .ok_or_else(|| InputError::new("relation coefficient exceeds i64"))
        })
        .collect()
}

/// One common denominator for every coefficient appearing in `values`.
fn common_denominator(values: &[ExactReal]) -> BigInt {
    let mut d = BigInt::one();
    for v in values {
        for c in v.coeffs() {
            d = d.lcm(c.denom());
        }
    }
    d
}

/// Integer coordinate matrix, one column per λ, scaled by the common
/// denominator `d` (so column j equals `d·λ_j` in basis coordinates).
fn integer_columns(values: &[ExactReal], d: &BigInt) -> Vec<Vec<BigInt>> {
    let dim = values[0].basis().len();
    let mut cols = Vec::with_capacity(values.len());
    for v in values {
        let mut col = Vec::with_capacity(dim);
        for c in v.coeffs() {
            let scaled = c * BigRational::from(d.clone());
            debug_assert!(scaled.denom().is_one());
            col.push(scaled.numer().clone());
        }
        cols.push(col);
    }
    cols
}

// ---------------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------------

/// Dimension over ℚ of `span{ω − ω₀ : ω ∈ Ω}`; independent of which element
/// plays the role of ω₀.
pub fn affine_dimension(omegas: &[ExactReal]) -> Result<usize, InputError> {
    check_common_basis(omegas)?;
    let base = &omegas[0];
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for w in &omegas[1..] {
        rows.push(w.sub(base)?.coeffs().to_vec());
    }
    Ok(rational_rank(rows))
}

fn rational_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv_piv = rows[rank][c].clone();
        for i in (rank + 1)..nrows {
            if !rows[i][c].is_zero() {
                let factor = &rows[i][c] / &inv_piv;
                let pivot_row = rows[rank].clone();
                for (x, pr) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &factor * pr;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Saturated basis of `{p ∈ ℤⁿ : Σ p_j λ_j = 0}` in Hermite normal form.
/// Empty exactly when the λ_j are ℚ-linearly independent.
pub fn relation_lattice(lambdas: &[ExactReal]) -> Result<RelationLattice, InputError> {
    check_common_basis(lambdas)?;
    let n = lambdas.len();
    let d = common_denominator(lambdas);
    let cols = integer_columns(lambdas, &d);
    let dim = lambdas[0].basis().len();

    // w = Aᵀ (n × dim); unimodular row ops on [w | u] leave the rows of u
    // aligned with zero rows of w spanning the kernel of A.
    let mut w: Vec<Vec<BigInt>> = (0..n).map(|j| cols[j].clone()).collect();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let rank = row_echelon_unimodular(&mut w, &mut Some(&mut u));
    let _ = dim;

    let mut kernel: Vec<Vec<BigInt>> = u[rank..].to_vec();
    hermite_normal_form(&mut kernel);
    let basis_vectors = kernel
        .iter()
        .map(|row| to_i64_vec(row))
        .collect::<Result<Vec<_>, _>>()?;

    // every returned vector annihilates λ exactly
    for p in &basis_vectors {
        debug_assert!(integer_combination(p, lambdas)
            .map(|c| c.is_zero())
            .unwrap_or(false));
    }
    Ok(RelationLattice { basis_vectors })
}

/// Free-module decomposition of `⟨λ₁,…,λ_n⟩`: ℚ-independent generators and
/// exact integer coordinates reconstructing every λ_j.
pub fn subgroup_basis(lambdas: &[ExactReal]) -> Result<SubgroupBasis, InputError> {
    check_common_basis(lambdas)?;
    let basis = lambdas[0].basis().clone();
    let d = common_denominator(lambdas);
    let cols = integer_columns(lambdas, &d);

    // Row lattice of Aᵀ equals the group generated by the scaled λ's; its
    // Hermite normal form is a canonical ℤ-basis.
    let mut gen_rows: Vec<Vec<BigInt>> = cols.clone();
    hermite_normal_form(&mut gen_rows);
    let m = gen_rows.len();

    let d_rat = BigRational::from(d.clone());
    let mut generators = Vec::with_capacity(m);
    for row in &gen_rows {
        let coeffs: Vec<Rational> = row
            .iter()
            .map(|v| BigRational::from(v.clone()) / d_rat.clone())
            .collect();
        generators.push(ExactReal::new(basis.clone(), coeffs)?);
    }

    // Back-substitute each λ_j through the echelon generators; membership in
    // the lattice guarantees integrality.
    let dim = basis.len();
    let pivots: Vec<usize> = gen_rows
        .iter()
        .map(|row| (0..dim).find(|&c| !row[c].is_zero()).expect("nonzero generator row"))
        .collect();
    let mut coords = Vec::with_capacity(lambdas.len());
    for col in &cols {
        let mut residue = col.clone();
        let mut k = vec![0i64; m];
        for (i, row) in gen_rows.iter().enumerate() {
            let c = pivots[i];
            if residue[c].is_zero() {
                continue;
            }
            let (q, r) = residue[c].div_rem(&row[c]);
            if !r.is_zero() {
                return Err(InputError::new("subgroup reconstruction is not integral"));
            }
            k[i] = q
                .to_i64()
                .ok_or_else(|| InputError::new("subgroup coordinate exceeds i64"))?;
            for (res, g) in residue.iter_mut().zip(row) {
                *res -= &q * g;
            }
        }
        if residue.iter().any(|v| !v.is_zero()) {
            return Err(InputError::new("subgroup reconstruction failed"));
        }
        coords.push(k);
    }

    Ok(SubgroupBasis { generators, coords })
}

/// Exact test that `(v₁, v₂, v₃) = c·(1, 2, 3)` for some c > 0, decided via
/// the relation lattice of `(v₂ − 2v₁, v₃ − 3v₁)`.
pub fn is_proportional_123(
    v1: &ExactReal,
    v2: &ExactReal,
    v3: &ExactReal,
) -> Result<bool, InputError> {
    if v1 == v2 || v2 == v3 || v1 == v3 {
        return Err(InputError::new("velocities must be pairwise distinct"));
    }
    let (f1, f2, f3) = (v1.float_value(), v2.float_value(), v3.float_value());
    if !(0.0 < f1 && f1 < f2 && f2 < f3) {
        return Err(InputError::new("velocities must satisfy 0 < v1 < v2 < v3"));
    }
    let d1 = v2.sub(&v1.scale(&ratio(2, 1)))?;
    let d2 = v3.sub(&v1.scale(&ratio(3, 1)))?;
    let lat = relation_lattice(&[d1, d2])?;
    Ok(lat.rank() == 2)
}

// ---------------------------------------------------------------------------
// heuristic float front-end
// ---------------------------------------------------------------------------

/// LLL-based guess for an integer relation among floats.
///
/// A returned vector `p` satisfies `|Σ p_j x_j| ≤ tol` and
/// `max|p_j| ≤ height_bound`. Absence of a result is **not** evidence of
/// ℚ-linear independence; it only means no relation was found within the
/// height bound at the given tolerance.
pub fn float_relation_guess(x: &[f64], height_bound: i64) -> Option<Vec<i64>> {
    float_relation_guess_with(x, height_bound, crate::config::FLOAT_RELATION_TOL)
}

pub fn float_relation_guess_with(x: &[f64], height_bound: i64, tol: f64) -> Option<Vec<i64>> {
    if x.is_empty() || height_bound < 1 || !(tol > 0.0) || x.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let n = x.len();
    if let Some(j) = x.iter().position(|v| v.abs() <= tol) {
        let mut p = vec![0i64; n];
        p[j] = 1;
        return Some(p);
    }
    if n == 1 {
        return None;
    }

    let scale = 16.0 / tol;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for (i, &xi) in x.iter().enumerate() {
        let mut row = vec![BigInt::zero(); n + 1];
        row[i] = BigInt::one();
        row[n] = BigInt::from((xi * scale).round() as i128);
        rows.push(row);
    }
    let reduced = lll(rows, ratio(99, 100));

    let mut candidates: Vec<&Vec<BigInt>> = reduced.iter().collect();
    candidates.sort_by_key(|row| {
        (
            row[n].magnitude().clone(),
            row.iter().map(|v| v.magnitude().clone()).max().unwrap(),
        )
    });
    for row in candidates {
        let Ok(p) = to_i64_vec(&row[..n]) else { continue };
        if p.iter().all(|&v| v == 0) {
            continue;
        }
        if p.iter().any(|&v| v.abs() > height_bound) {
            continue;
        }
        let residual: f64 = p.iter().zip(x).map(|(&pj, &xj)| pj as f64 * xj).sum();
        if residual.abs() <= tol {
            let mut p = p;
            if let Some(first) = p.iter().find(|&&v| v != 0) {
                if *first < 0 {
                    for v in &mut p {
                        *v = -*v;
                    }
                }
            }
            return Some(p);
        }
    }
    None
}

/// Textbook LLL with exact rational Gram–Schmidt; dimensions here are tiny.
fn lll(mut b: Vec<Vec<BigInt>>, delta: Rational) -> Vec<Vec<BigInt>> {
    let n = b.len();
    if n < 2 {
        return b;
    }

    fn gso(b: &[Vec<BigInt>]) -> (Vec<Vec<Rational>>, Vec<Rational>) {
        let n = b.len();
        let dim = b[0].len();
        let mut star: Vec<Vec<Rational>> = Vec::with_capacity(n);
        let mut mu = vec![vec![Rational::zero(); n]; n];
        let mut norms = Vec::with_capacity(n);
        for i in 0..n {
            let mut v: Vec<Rational> = b[i]
                .iter()
                .map(|x| BigRational::from(x.clone()))
                .collect();
            for j in 0..i {
                let dot: Rational = (0..dim)
                    .map(|k| BigRational::from(b[i][k].clone()) * &star[j][k])
                    .sum();
                let m = if norms[j] == Rational::zero() {
                    Rational::zero()
                } else {
                    dot / &norms[j]
                };
                for k in 0..dim {
                    let sub = &m * &star[j][k];
                    v[k] -= sub;
                }
                mu[i][j] = m;
            }
            let norm: Rational = v.iter().map(|x| x * x).sum();
            star.push(v);
            norms.push(norm);
        }
        (mu, norms)
    }

    fn round_rational(r: &Rational) -> BigInt {
        div_round(r.numer(), r.denom())
    }

    let mut k = 1;
    let mut guard = 0usize;
    while k < n {
        guard += 1;
        if guard > 10_000 {
            break;
        }
        let (mu, _) = gso(&b);
        for j in (0..k).rev() {
            let q = round_rational(&mu[k][j]);
            if !q.is_zero() {
                row_submul(&mut b, k, j, &q);
            }
        }
        let (mu, norms) = gso(&b);
        let lhs = &norms[k];
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &norms[k - 1];
        if *lhs >= rhs {
            k += 1;
        } else {
            b.swap(k, k - 1);
            k = k.max(2) - 1;
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RealBasis;

    fn rationals(values: &[i64]) -> Vec<ExactReal> {
        let b = RealBasis::rational();
        values.iter().map(|&v| ExactReal::from_integer(&b, v)).collect()
    }

    #[test]
    fn affine_dimension_all_equal() {
        let om = rationals(&[0, 0, 0, 0]);
        assert_eq!(affine_dimension(&om).unwrap(), 0);
    }

    #[test]
    fn affine_dimension_rationals() {
        let om = rationals(&[0, 1, 2, 3]);
        assert_eq!(affine_dimension(&om).unwrap(), 1);
    }

    #[test]
    fn affine_dimension_independent_triple() {
        let b = RealBasis::one_sqrt2_sqrt3();
        let om = vec![
            ExactReal::zero(&b),
            ExactReal::from_int_coeffs(&b, &[1, 0, 0]).unwrap(),
            ExactReal::from_int_coeffs(&b, &[0, 1, 0]).unwrap(),
            ExactReal::from_int_coeffs(&b, &[0, 0, 1]).unwrap(),
        ];
        // rank of the difference matrix, computed by exact row reduction
        assert_eq!(affine_dimension(&om).unwrap(), 3);
    }

    #[test]
    fn affine_dimension_base_point_invariant() {
        let b = RealBasis::one_sqrt2_sqrt3();
        let mut om = vec![
            ExactReal::from_int_coeffs(&b, &[2, 1, 0]).unwrap(),
            ExactReal::from_int_coeffs(&b, &[1, 0, 1]).unwrap(),
            ExactReal::from_int_coeffs(&b, &[0, 1, 1]).unwrap(),
            ExactReal::from_int_coeffs(&b, &[3, 2, 0]).unwrap(),
        ];
        let reference = affine_dimension(&om).unwrap();
        for _ in 0..om.len() {
            om.rotate_left(1);
            assert_eq!(affine_dimension(&om).unwrap(), reference);
        }
    }

    #[test]
    fn relation_lattice_one_two() {
        let lam = rationals(&[1, 2]);
        let lat = relation_lattice(&lam).unwrap();
        assert_eq!(lat.rank(), 1);
        let p = &lat.basis_vectors()[0];
        assert_eq!(p[0] * 1 + p[1] * 2, 0);
        assert_ne!(p, &vec![0, 0]);
    }

    #[test]
    fn relation_lattice_independent() {
        let b = RealBasis::one_sqrt2_sqrt3();
        let lam = vec![
            ExactReal::from_int_coeffs(&b, &[1, 0, 0]).unwrap(),
            ExactReal::from_int_coeffs(&b, &[0, 1, 0]).unwrap(),
        ];
        assert!(relation_lattice(&lam).unwrap().is_empty());
    }

    #[test]
    fn relation_lattice_rank_two() {
        let lam = rationals(&[1, 2, 3]);
        let lat = relation_lattice(&lam).unwrap();
        assert_eq!(lat.rank(), 2);
        for p in lat.basis_vectors() {
            let combo: i64 = p.iter().zip([1, 2, 3]).map(|(&pj, l)| pj * l).sum();
            assert_eq!(combo, 0);
            let g = p.iter().fold(0i64, |acc, &v| acc.gcd(&v));
            assert_eq!(g, 1, "basis vector must be primitive");
        }
    }

    #[test]
    fn relation_lattice_zero_singleton() {
        let lam = rationals(&[0]);
        let lat = relation_lattice(&lam).unwrap();
        assert_eq!(lat.basis_vectors(), &[vec![1]]);
    }

    #[test]
    fn relation_lattice_rank_plus_span() {
        // rank(lattice) + dim span = n on a mixed example
        let b = RealBasis::one_sqrt2_sqrt3();
        let one = ExactReal::from_int_coeffs(&b, &[1, 0, 0]).unwrap();
        let r2 = ExactReal::from_int_coeffs(&b, &[0, 1, 0]).unwrap();
        let sum = ExactReal::from_int_coeffs(&b, &[1, 1, 0]).unwrap();
        let two = ExactReal::from_int_coeffs(&b, &[2, 0, 0]).unwrap();
        let lam = vec![one, r2, sum, two];
        let lat = relation_lattice(&lam).unwrap();
        let span = rational_rank(lam.iter().map(|l| l.coeffs().to_vec()).collect());
        assert_eq!(lat.rank() + span, lam.len());
    }

    #[test]
    fn relation_lattice_deterministic() {
        let lam = rationals(&[6, 10, 15]);
        let a = relation_lattice(&lam).unwrap();
        let b = relation_lattice(&lam).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn subgroup_basis_gcd() {
        let lam = rationals(&[2, 3]);
        let sg = subgroup_basis(&lam).unwrap();
        assert_eq!(sg.generators.len(), 1);
        // reconstruction is exact whatever ℤ-basis was produced
        for (j, lam_j) in lam.iter().enumerate() {
            let mut acc = ExactReal::zero(lam_j.basis());
            for (i, g) in sg.generators.iter().enumerate() {
                acc = acc.add(&g.scale(&ratio(sg.coords[j][i], 1))).unwrap();
            }
            assert_eq!(&acc, lam_j);
        }
    }

    #[test]
    fn subgroup_basis_mixed_irrational() {
        let b = RealBasis::one_sqrt2_sqrt3();
        let one = ExactReal::from_int_coeffs(&b, &[1, 0, 0]).unwrap();
        let r2 = ExactReal::from_int_coeffs(&b, &[0, 1, 0]).unwrap();
        let sum = ExactReal::from_int_coeffs(&b, &[1, 1, 0]).unwrap();
        let lam = vec![one.clone(), r2.clone(), sum.clone()];
        let sg = subgroup_basis(&lam).unwrap();
        assert_eq!(sg.generators.len(), 2);
        for (j, lam_j) in lam.iter().enumerate() {
            let mut acc = ExactReal::zero(&b);
            for (i, g) in sg.generators.iter().enumerate() {
                acc = acc.add(&g.scale(&ratio(sg.coords[j][i], 1))).unwrap();
            }
            assert_eq!(&acc, lam_j);
        }
    }

    #[test]
    fn subgroup_basis_singleton() {
        let lam = rationals(&[5]);
        let sg = subgroup_basis(&lam).unwrap();
        assert_eq!(sg.generators.len(), 1);
        assert_eq!(sg.coords, vec![vec![1]]);
        assert_eq!(sg.generators[0], lam[0]);
    }

    #[test]
    fn proportional_123_detection() {
        let b = RealBasis::rational();
        let mk = |n: i64, d: i64| ExactReal::from_rational(&b, ratio(n, d));
        assert!(is_proportional_123(&mk(1, 1), &mk(2, 1), &mk(3, 1)).unwrap());
        assert!(is_proportional_123(&mk(1, 2), &mk(1, 1), &mk(3, 2)).unwrap());
        assert!(!is_proportional_123(&mk(1, 1), &mk(2, 1), &mk(4, 1)).unwrap());
        assert!(is_proportional_123(&mk(1, 1), &mk(1, 1), &mk(3, 1)).is_err());
    }

    #[test]
    fn proportional_123_irrational_scale() {
        let b = RealBasis::one_sqrt2_sqrt3();
        let mk = |k: i64| ExactReal::from_int_coeffs(&b, &[0, k, 0]).unwrap();
        assert!(is_proportional_123(&mk(1), &mk(2), &mk(3)).unwrap());
    }

    // -- float relation guesses, checked against an exhaustive oracle ------

    fn exhaustive_relation(x: &[f64], bound: i64, tol: f64) -> Option<Vec<i64>> {
        let n = x.len();
        let mut best: Option<Vec<i64>> = None;
        let mut idx = vec![-bound; n];
        loop {
            if idx.iter().any(|&v| v != 0) {
                let s: f64 = idx.iter().zip(x).map(|(&p, &v)| p as f64 * v).sum();
                if s.abs() <= tol && best.is_none() {
                    best = Some(idx.clone());
                }
            }
            let mut i = 0;
            loop {
                if i == n {
                    return best;
                }
                idx[i] += 1;
                if idx[i] <= bound {
                    break;
                }
                idx[i] = -bound;
                i += 1;
            }
        }
    }

    #[test]
    fn float_guess_integer_relation() {
        let x = [1.0, 2.0, 3.0];
        let oracle = exhaustive_relation(&x, 3, 1e-9);
        assert!(oracle.is_some());
        let p = float_relation_guess(&x, 3).expect("relation expected");
        let s: f64 = p.iter().zip(x).map(|(&pj, xj)| pj as f64 * xj).sum();
        assert!(s.abs() <= 1e-9);
        assert!(p.iter().all(|&v| v.abs() <= 3));
    }

    #[test]
    fn float_guess_truncated_sqrt2() {
        let x = [1.0, 1.4142135623];
        assert_eq!(exhaustive_relation(&x, 10, 1e-9), None);
        assert_eq!(float_relation_guess(&x, 10), None);
    }

    #[test]
    fn float_guess_zero_entry() {
        assert_eq!(float_relation_guess(&[0.0], 1), Some(vec![1]));
        assert_eq!(float_relation_guess(&[2.5, 0.0], 5), Some(vec![0, 1]));
    }

    #[test]
    fn float_guess_planted() {
        // 3·x0 − 2·x1 + x2 = 0 planted on irrational values
        let a = 2.0_f64.sqrt();
        let b = 3.0_f64.sqrt();
        let x = [a, b, 2.0 * b - 3.0 * a];
        let p = float_relation_guess(&x, 8).expect("planted relation");
        let s: f64 = p.iter().zip(x).map(|(&pj, xj)| pj as f64 * xj).sum();
        assert!(s.abs() <= 1e-9, "residual {s}");
        let oracle = exhaustive_relation(&x, 8, 1e-9).expect("oracle finds it");
        let so: f64 = oracle.iter().zip(x).map(|(&pj, xj)| pj as f64 * xj).sum();
        assert!(so.abs() <= 1e-9);
    }

    #[test]
    fn float_guess_single_nonzero() {
        assert_eq!(float_relation_guess(&[1.7], 100), None);
    }
}
