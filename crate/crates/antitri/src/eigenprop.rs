//! The anti-diagonal eigenvalue property (weak and full), the cofactor
//! system behind uniqueness, H_k certificates, and E_n membership.

use num_traits::Zero;
use serde::Serialize;

use crate::charpoly::char_poly;
use crate::error::{Error, Result};
use crate::matrix::{det_rows, nullspace_rows, rank_rows, Matrix, Triangular};
use crate::pascal::{anti_identity, conjugate_q, pascal, pi_map, Spectrum};
use crate::poly::{interpolate, Polynomial};
use crate::scalar::{int, rat_to_string, Rat, Scalar};
use crate::sturm::squarefree_part;

/// Verdict of the property checks on a triangular matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub weak: bool,
    pub full: bool,
    /// The claimed eigenvalues (-1)^i x_ii, as "p/q" text.
    pub spectrum: Vec<String>,
    /// Explanation code when a check fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// One H_k certificate evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateRow {
    pub k: usize,
    /// H_k(lambda_0, ..., lambda_{k-1}) as "p/q" text.
    pub h_value: String,
    pub nonzero: bool,
}

/// E_n / E~_n membership report: all certificate rows plus the verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnReport {
    pub rows: Vec<CertificateRow>,
    pub in_en: bool,
    pub in_en_tilde: bool,
}

/// X G for a triangular X (reverses the column order).
pub fn anti_product<S: Scalar>(x: &Triangular<S>) -> Matrix<S> {
    let n = x.dim() - 1;
    x.as_matrix().mul(&anti_identity(n))
}

fn pairwise_distinct<S: Scalar>(values: &[S]) -> bool {
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] == values[j] {
                return false;
            }
        }
    }
    true
}

/// Weak anti-diagonal eigenvalue property:
/// det(lambda I - XG) = prod_i (lambda - (-1)^i x_ii), checked exactly.
pub fn weak_adep_check<S: Scalar>(x: &Triangular<S>) -> bool {
    let signed = Spectrum::new(x.diagonal()).expect("nonempty").signed_values();
    char_poly(&anti_product(x)) == Polynomial::from_roots(&signed)
}

/// Full anti-diagonal eigenvalue property: weak, plus XG diagonalizable.
///
/// When the claimed eigenvalues are pairwise distinct, weak implies full.
/// Otherwise XG is diagonalizable iff the squarefree part of its
/// characteristic polynomial annihilates it.
pub fn full_adep_check<S: Scalar>(x: &Triangular<S>) -> bool {
    if !weak_adep_check(x) {
        return false;
    }
    let signed = Spectrum::new(x.diagonal()).expect("nonempty").signed_values();
    if pairwise_distinct(&signed) {
        return true;
    }
    let xg = anti_product(x);
    let sf = squarefree_part(&char_poly(&xg)).expect("characteristic polynomial is monic");
    sf.eval_matrix(&xg) == Matrix::zeros(xg.dim())
}

/// Both property checks with the claimed spectrum and a failure code.
pub fn property_report(x: &Triangular<Rat>) -> PropertyReport {
    let weak = weak_adep_check(x);
    let full = weak && full_adep_check(x);
    let witness = if !weak {
        Some("charpoly_mismatch".to_string())
    } else if !full {
        Some("not_diagonalizable".to_string())
    } else {
        None
    };
    PropertyReport {
        weak,
        full,
        spectrum: Spectrum::new(x.diagonal())
            .expect("nonempty")
            .signed_values()
            .iter()
            .map(rat_to_string)
            .collect(),
        witness,
    }
}

/// The (k, j) cofactors of lambda I - D Q at size k+1, as polynomials in
/// lambda, for j = 0..=jmax. Entries have degree at most one, so each
/// cofactor is recovered from k+1 exact point evaluations.
fn cofactor_polys<S: Scalar>(lambda: &[S], k: usize, jmax: usize) -> Vec<Polynomial<S>> {
    let q = conjugate_q::<S>(k);
    let nodes: Vec<S> = (0..=k as i64).map(int::<S>).collect();
    let mut cofactors = Vec::with_capacity(jmax + 1);
    for j in 0..=jmax {
        let points: Vec<(S, S)> = nodes
            .iter()
            .map(|x| {
                // minor of lambda I - D Q at (row k, column j), evaluated at x
                let rows: Vec<Vec<S>> = (0..k)
                    .map(|i| {
                        (0..=k)
                            .filter(|&c| c != j)
                            .map(|c| {
                                let diag = if i == c { x.clone() } else { S::zero() };
                                diag - lambda[i].clone() * q.get(i, c).clone()
                            })
                            .collect()
                    })
                    .collect();
                (x.clone(), det_rows(rows))
            })
            .collect();
        let minor = interpolate(&points);
        let cof = if (k + j) % 2 == 0 { minor } else { minor.neg() };
        cofactors.push(cof);
    }
    cofactors
}

/// Coefficient grid f_{m,j} (m-th lambda coefficient of the cofactor C_j)
/// for m, j = 0..k-1; only lambda_0..lambda_{k-1} enter.
fn coefficient_grid<S: Scalar>(lambda: &[S], k: usize) -> Vec<Vec<S>> {
    let cofactors = cofactor_polys(lambda, k, k - 1);
    (0..k)
        .map(|m| (0..k).map(|j| cofactors[j].coeff(m)).collect())
        .collect()
}

fn padded<S: Scalar>(lambda: &Spectrum<S>, k: usize) -> Vec<S> {
    let mut v = lambda.values().to_vec();
    while v.len() <= k {
        v.push(S::zero());
    }
    v
}

/// H_k evaluated at (lambda_0, ..., lambda_{k-1}): the determinant of the
/// k x k coefficient grid of the cofactor system. Only the first k entries
/// of the spectrum influence the result.
pub fn hk_evaluate<S: Scalar>(lambda: &Spectrum<S>, k: usize) -> Result<S> {
    if k == 0 || k > lambda.len() {
        return Err(Error::IndexOutOfRange(format!(
            "k = {k} not in 1..={}",
            lambda.len()
        )));
    }
    let vals = padded(lambda, k);
    Ok(det_rows(coefficient_grid(&vals, k)))
}

/// Evaluate every H_k for 1 <= k <= n and report E_n / E~_n membership.
pub fn en_membership(lambda: &Spectrum<Rat>) -> EnReport {
    let n = lambda.top_index();
    let mut rows = Vec::new();
    let mut in_en = true;
    for k in 1..=n.max(1) {
        let h = hk_evaluate(lambda, k).expect("k within range");
        let nonzero = !h.is_zero();
        in_en &= nonzero;
        rows.push(CertificateRow {
            k,
            h_value: rat_to_string(&h),
            nonzero,
        });
    }
    let in_en_tilde = in_en && pairwise_distinct(&lambda.signed_values());
    EnReport {
        rows,
        in_en,
        in_en_tilde,
    }
}

/// Uniqueness of the weak-property extension by a last row: true iff the
/// homogeneous cofactor system admits only the trivial perturbation.
///
/// The n x n coefficient grid having full rank (equivalently H_n != 0) is
/// sufficient and is tried first; otherwise the constrained system in the
/// actual last-row unknowns w_0..w_{n-1} is solved exactly. The n = 1 case
/// is always unique even when the grid degenerates.
pub fn uniqueness_rank_check<S: Scalar>(lambda: &Spectrum<S>) -> bool {
    let n = lambda.top_index();
    if n == 0 {
        return true;
    }
    let vals = padded(lambda, n);
    let grid = coefficient_grid(&vals, n);
    if rank_rows(grid) == n {
        return true;
    }
    // Constrained system: u_j = sum_k w_k p_{n-k, j}, equations are the
    // lambda-coefficients of sum_j u_j C_j = 0.
    let cofactors = cofactor_polys(&vals, n, n);
    let p = pascal::<S>(n);
    let equations: Vec<Vec<S>> = (0..=n)
        .map(|m| {
            (0..n)
                .map(|k| {
                    let mut acc = S::zero();
                    for j in 0..=n {
                        acc = acc + p.get(n - k, j).clone() * cofactors[j].coeff(m);
                    }
                    acc
                })
                .collect()
        })
        .collect();
    nullspace_rows(equations, n).is_empty()
}

/// The closed-form families with the weak property for n = 1 and n = 2.
///
/// n = 1 takes params (a, b) and returns the X with XG = [[0, a], [b, a-b]].
/// n = 2 takes params (a, b, c, p, q) with pq = 2(a-b)(b-c) and returns the
/// X with XG = [[0,0,a],[0,b,p],[c,q,a-2b+c]].
pub fn small_n_family<S: Scalar>(n: usize, params: &[S]) -> Result<Triangular<S>> {
    match n {
        1 => {
            let [a, b] = params else {
                return Err(Error::PreconditionViolated(
                    "n = 1 takes params (a, b)".into(),
                ));
            };
            Triangular::new(Matrix::from_rows(vec![
                vec![a.clone(), S::zero()],
                vec![a.clone() - b.clone(), b.clone()],
            ])?)
        }
        2 => {
            let [a, b, c, p, q] = params else {
                return Err(Error::PreconditionViolated(
                    "n = 2 takes params (a, b, c, p, q)".into(),
                ));
            };
            let lhs = p.clone() * q.clone();
            let rhs = int::<S>(2) * (a.clone() - b.clone()) * (b.clone() - c.clone());
            if lhs != rhs {
                return Err(Error::ConstraintViolated(format!(
                    "pq = {lhs} but 2(a-b)(b-c) = {rhs}"
                )));
            }
            Triangular::new(Matrix::from_rows(vec![
                vec![a.clone(), S::zero(), S::zero()],
                vec![p.clone(), b.clone(), S::zero()],
                vec![
                    a.clone() - int::<S>(2) * b.clone() + c.clone(),
                    q.clone(),
                    c.clone(),
                ],
            ])?)
        }
        _ => Err(Error::PreconditionViolated(format!(
            "closed forms exist for n = 1 and n = 2 only, got {n}"
        ))),
    }
}

/// Independent test oracles, kept apart from the production paths they check.
pub mod oracle {
    use super::*;
    use std::collections::BTreeMap;

    /// Sparse multivariate polynomial: exponent vector -> coefficient.
    pub type MultiPoly = BTreeMap<Vec<usize>, Rat>;

    /// Coefficient-extraction weights for the node set 0..=degree: entry
    /// [e][v] is the x^e coefficient of the v-th Lagrange basis polynomial.
    fn lagrange_weights(degree: usize) -> Vec<Vec<Rat>> {
        let nodes: Vec<Rat> = (0..=degree as i64).map(int::<Rat>).collect();
        let basis: Vec<Polynomial<Rat>> = (0..=degree)
            .map(|v| {
                let pts: Vec<(Rat, Rat)> = nodes
                    .iter()
                    .enumerate()
                    .map(|(w, x)| (x.clone(), if w == v { int(1) } else { int(0) }))
                    .collect();
                interpolate(&pts)
            })
            .collect();
        (0..=degree)
            .map(|e| basis.iter().map(|b| b.coeff(e)).collect())
            .collect()
    }

    fn eval_h(point: &[Rat], k: usize) -> Rat {
        let lambda = Spectrum::new(point.to_vec()).unwrap();
        hk_evaluate(&lambda, k).unwrap()
    }

    /// The full symbolic H_k recovered by tensor-grid interpolation over the
    /// rational grid {0..k}^k (H_k has degree at most k in each variable).
    pub fn hk_symbolic(k: usize) -> MultiPoly {
        let weights = lagrange_weights(k);
        let mut out = MultiPoly::new();
        let mut grid = vec![0usize; k];
        loop {
            let point: Vec<Rat> = grid.iter().map(|&v| int(v as i64)).collect();
            let value = eval_h(&point, k);
            if !value.is_zero() {
                // scatter into every monomial via the product weights
                let mut exps = vec![0usize; k];
                scatter(&mut out, &weights, &grid, &mut exps, 0, value);
            }
            if !advance(&mut grid, k) {
                break;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn scatter(
        out: &mut MultiPoly,
        weights: &[Vec<Rat>],
        grid: &[usize],
        exps: &mut Vec<usize>,
        var: usize,
        acc: Rat,
    ) {
        if var == grid.len() {
            let entry = out.entry(exps.clone()).or_insert_with(|| int(0));
            *entry = entry.clone() + acc;
            return;
        }
        for e in 0..weights.len() {
            let w = &weights[e][grid[var]];
            if w.is_zero() {
                continue;
            }
            exps[var] = e;
            scatter(out, weights, grid, exps, var + 1, acc.clone() * w.clone());
        }
        exps[var] = 0;
    }

    fn advance(grid: &mut [usize], max: usize) -> bool {
        for slot in grid.iter_mut() {
            *slot += 1;
            if *slot <= max {
                return true;
            }
            *slot = 0;
        }
        false
    }

    /// One coefficient of the symbolic H_k, by contracting the evaluation
    /// grid against per-variable Lagrange extraction weights.
    pub fn hk_monomial_coeff(k: usize, exponents: &[usize]) -> Rat {
        assert_eq!(exponents.len(), k);
        let weights = lagrange_weights(k);
        let mut acc: Rat = int(0);
        let mut grid = vec![0usize; k];
        loop {
            let mut w: Rat = int(1);
            for (var, &node) in grid.iter().enumerate() {
                w = w * weights[exponents[var]][node].clone();
            }
            if !w.is_zero() {
                let point: Vec<Rat> = grid.iter().map(|&v| int(v as i64)).collect();
                acc = acc + w * eval_h(&point, k);
            }
            if !advance(&mut grid, k) {
                break;
            }
        }
        acc
    }

    /// Exact division of a multivariate polynomial by the monomial
    /// z_0 z_1 ... z_{m-1}; returns `None` if any term is not divisible.
    pub fn divide_by_leading_monomial(p: &MultiPoly, vars: usize) -> Option<MultiPoly> {
        let mut out = MultiPoly::new();
        for (exps, c) in p {
            let mut reduced = exps.clone();
            for slot in reduced.iter_mut().take(vars) {
                if *slot == 0 {
                    return None;
                }
                *slot -= 1;
            }
            out.insert(reduced, c.clone());
        }
        Some(out)
    }

    /// Nontrivial last-row perturbations W of Pi(lambda) that keep the weak
    /// property, found by solving the exact linear system built from direct
    /// characteristic-polynomial evaluations (independent of the cofactor
    /// machinery). Empty output certifies uniqueness.
    pub fn weak_preserving_last_rows(lambda: &Spectrum<Rat>) -> Vec<Vec<Rat>> {
        let n = lambda.top_index();
        if n == 0 {
            return Vec::new();
        }
        let base = pi_map(lambda);
        let expected = Polynomial::from_roots(&lambda.signed_values());
        // char_poly((Pi(lambda) + W) G) is affine in the last row w; the
        // base term vanishes, so columns at w = e_k span the defect map.
        let columns: Vec<Polynomial<Rat>> = (0..n)
            .map(|k| {
                let mut perturbed = base.as_matrix().clone();
                perturbed.set(n, k, perturbed.get(n, k).clone() + int::<Rat>(1));
                let x = Triangular::new(perturbed).unwrap();
                char_poly(&anti_product(&x)).sub(&expected)
            })
            .collect();
        let equations: Vec<Vec<Rat>> = (0..=n)
            .map(|m| (0..n).map(|k| columns[k].coeff(m)).collect())
            .collect();
        nullspace_rows(equations, n)
    }
}
