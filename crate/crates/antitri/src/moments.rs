//! Measures on [0, 1] with exact rational moments, the Bernstein-type
//! matrices A(u), their mixtures A_mu, the symmetric average B(u), complete
//! monotonicity, and the symmetric moment conditions.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::matrix::{rank_rows, Triangular};
use crate::pascal::{pascal, pascal_inverse, Spectrum};
use crate::scalar::{binomial, int, ratio, rising_factorial, Rat};

/// A measure on [0, 1] from one of the three exactly-representable families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Measure {
    /// Finitely many atoms (location, weight); weights sum to 1.
    Discrete { atoms: Vec<(Rat, Rat)> },
    /// Lebesgue measure on [0, 1].
    Lebesgue,
    /// The symmetric beta distribution Beta(t, t), t > 0.
    BetaSymmetric { t: Rat },
}

impl Measure {
    /// Validated discrete measure: locations in [0, 1] pairwise distinct,
    /// weights positive and summing to 1.
    pub fn discrete(atoms: Vec<(Rat, Rat)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::PreconditionViolated("no atoms".into()));
        }
        let mut total: Rat = int(0);
        for (u, w) in &atoms {
            if u.is_negative() || u > &int(1) {
                return Err(Error::PreconditionViolated(format!(
                    "location {u} outside [0, 1]"
                )));
            }
            if !w.is_positive() {
                return Err(Error::PreconditionViolated(format!(
                    "weight {w} not positive"
                )));
            }
            total = total + w.clone();
        }
        for i in 0..atoms.len() {
            for j in i + 1..atoms.len() {
                if atoms[i].0 == atoms[j].0 {
                    return Err(Error::PreconditionViolated(format!(
                        "repeated location {}",
                        atoms[i].0
                    )));
                }
            }
        }
        if !total.is_one() {
            return Err(Error::PreconditionViolated(format!(
                "weights sum to {total}, not 1"
            )));
        }
        Ok(Measure::Discrete { atoms })
    }

    /// Point mass at `u`.
    pub fn dirac(u: Rat) -> Result<Self> {
        Self::discrete(vec![(u, int(1))])
    }

    pub fn beta_symmetric(t: Rat) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::PreconditionViolated(format!("t = {t} not positive")));
        }
        Ok(Measure::BetaSymmetric { t })
    }

    /// Pushforward under u -> 1 - u.
    pub fn reflect(&self) -> Self {
        match self {
            Measure::Discrete { atoms } => Measure::Discrete {
                atoms: atoms
                    .iter()
                    .map(|(u, w)| (int::<Rat>(1) - u.clone(), w.clone()))
                    .collect(),
            },
            other => other.clone(),
        }
    }
}

/// Exact i-th moment of a measure on [0, 1].
pub fn moment(mu: &Measure, i: usize) -> Rat {
    match mu {
        Measure::Discrete { atoms } => {
            let mut acc: Rat = int(0);
            for (u, w) in atoms {
                let mut p: Rat = int(1);
                for _ in 0..i {
                    p = p * u.clone();
                }
                acc = acc + w.clone() * p;
            }
            acc
        }
        Measure::Lebesgue => ratio(1, i as i64 + 1),
        Measure::BetaSymmetric { t } => {
            rising_factorial(t, i) / rising_factorial(&(t.clone() + t.clone()), i)
        }
    }
}

/// Finite moment sequence a_0..a_N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSequence(Vec<Rat>);

impl MomentSequence {
    pub fn new(moments: Vec<Rat>) -> Result<Self> {
        if moments.is_empty() {
            return Err(Error::PreconditionViolated("empty moment sequence".into()));
        }
        Ok(Self(moments))
    }

    /// Moments of a measure up to index `upto`.
    pub fn of_measure(mu: &Measure, upto: usize) -> Self {
        Self((0..=upto).map(|i| moment(mu, i)).collect())
    }

    pub fn values(&self) -> &[Rat] {
        &self.0
    }

    /// Top index N.
    pub fn top_index(&self) -> usize {
        self.0.len() - 1
    }
}

/// A(u): entries C(i, j) u^j (1 - u)^{i - j}, size (n + 1).
pub fn bernstein_matrix(u: &Rat, n: usize) -> Triangular<Rat> {
    let v = int::<Rat>(1) - u.clone();
    // powers[k] = u^k, copowers[k] = (1 - u)^k
    let mut powers: Vec<Rat> = vec![int(1)];
    let mut copowers: Vec<Rat> = vec![int(1)];
    for k in 1..=n {
        powers.push(powers[k - 1].clone() * u.clone());
        copowers.push(copowers[k - 1].clone() * v.clone());
    }
    Triangular::from_fn(n + 1, |i, j| {
        binomial::<Rat>(i, j) * powers[j].clone() * copowers[i - j].clone()
    })
}

/// A_mu: the mixture of A(u) over mu, computed from moments via the binomial
/// expansion (A_mu)_{ij} = C(i,j) sum_k C(i-j,k) (-1)^k a_{j+k}.
pub fn a_mu_matrix(mu: &Measure, n: usize) -> Triangular<Rat> {
    let a: Vec<Rat> = (0..=n).map(|i| moment(mu, i)).collect();
    Triangular::from_fn(n + 1, |i, j| {
        let mut acc: Rat = int(0);
        for k in 0..=i - j {
            let term = binomial::<Rat>(i - j, k) * a[j + k].clone();
            acc = if k % 2 == 0 { acc + term } else { acc - term };
        }
        binomial::<Rat>(i, j) * acc
    })
}

/// B(u) = (A(u) + A(1 - u)) / 2: row-reversal symmetric member of V_P.
pub fn b_symmetric_matrix(u: &Rat, n: usize) -> Triangular<Rat> {
    let a = bernstein_matrix(u, n);
    let b = bernstein_matrix(&(int::<Rat>(1) - u.clone()), n);
    Triangular::new(a.as_matrix().add(b.as_matrix()).scale(&ratio(1, 2)))
        .expect("average of lower triangular matrices")
}

/// Iterated forward difference (Delta^j a)_i via the binomial formula.
fn difference(a: &[Rat], j: usize, i: usize) -> Rat {
    let mut acc: Rat = int(0);
    for k in 0..=j {
        let term = binomial::<Rat>(j, k) * a[k + i].clone();
        acc = if (j - k) % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Complete monotonicity up to `depth`: (-1)^j (Delta^j a)_i >= 0 for all
/// i + j <= depth. The binomial formula is cross-checked against a direct
/// difference table.
pub fn cm_check(a: &MomentSequence, depth: usize) -> Result<bool> {
    Ok(cm_violation(a, depth)?.is_none())
}

/// First (i, j) violating complete monotonicity, scanning j outward.
pub fn cm_violation(a: &MomentSequence, depth: usize) -> Result<Option<(usize, usize)>> {
    if depth == 0 {
        return Err(Error::PreconditionViolated("depth must be positive".into()));
    }
    if depth > a.top_index() {
        return Err(Error::IndexOutOfRange(format!(
            "depth {depth} exceeds top index {}",
            a.top_index()
        )));
    }
    let vals = a.values();
    // table[j][i] = (Delta^j a)_i by direct differencing
    let mut table: Vec<Vec<Rat>> = vec![vals.to_vec()];
    for j in 1..=depth {
        let prev = &table[j - 1];
        table.push(
            (0..prev.len() - 1)
                .map(|i| prev[i + 1].clone() - prev[i].clone())
                .collect(),
        );
    }
    for j in 0..=depth {
        for i in 0..=depth - j {
            let d = difference(vals, j, i);
            assert_eq!(d, table[j][i], "difference formulas disagree");
            let signed = if j % 2 == 0 { d } else { -d };
            if signed.is_negative() {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// The symmetric-class condition on a spectrum: for every odd index,
/// lambda_{2i+1} = (1/2) sum_{k=0}^{2i} C(2i+1, k) (-1)^k lambda_k.
pub fn d_condition_check(lambda: &Spectrum<Rat>) -> bool {
    let v = lambda.values();
    for m in (1..v.len()).step_by(2) {
        let mut acc: Rat = int(0);
        for k in 0..m {
            let term = binomial::<Rat>(m, k) * v[k].clone();
            acc = if k % 2 == 0 { acc + term } else { acc - term };
        }
        if v[m].clone() + v[m].clone() != acc {
            return false;
        }
    }
    true
}

/// Dimension of the row-reversal-symmetric part of V_P at size n + 1,
/// computed directly from the Pi-image basis.
fn symmetric_vp_dimension(n: usize) -> usize {
    // Pi(e_r) = P E_rr P^{-1} has entries C(i,r) C(r,j) (-1)^{r-j}.
    let p = pascal::<Rat>(n);
    let pinv = pascal_inverse::<Rat>(n);
    // Constraints: sum_r c_r (basis_r[i][j] - basis_r[i][i-j]) = 0.
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for i in 0..=n {
        for j in 0..=i / 2 {
            let row: Vec<Rat> = (0..=n)
                .map(|r| {
                    let at = |col: usize| p.get(i, r).clone() * pinv.get(r, col).clone();
                    at(j) - at(i - j)
                })
                .collect();
            rows.push(row);
        }
    }
    n + 1 - rank_rows(rows)
}

/// True iff the B(point) matrices (with B(1/2) adjoined when n is even) are
/// linearly independent and span the symmetric part of V_P: both ranks must
/// equal floor((n + 2) / 2).
pub fn symmetric_basis_check(n: usize, points: &[Rat]) -> Result<bool> {
    let dim = (n + 2) / 2;
    let needed = if n % 2 == 0 { dim - 1 } else { dim };
    if points.len() != needed {
        return Err(Error::PreconditionViolated(format!(
            "need {needed} points for n = {n}, got {}",
            points.len()
        )));
    }
    let mut reflected: Vec<Rat> = Vec::new();
    for u in points {
        reflected.push(u.clone());
        reflected.push(int::<Rat>(1) - u.clone());
    }
    if n % 2 == 0 {
        reflected.push(ratio(1, 2));
    }
    for i in 0..reflected.len() {
        for j in i + 1..reflected.len() {
            if reflected[i] == reflected[j] {
                return Err(Error::PreconditionViolated(format!(
                    "points not distinct under reflection: {} repeats",
                    reflected[i]
                )));
            }
        }
    }
    let mut mats: Vec<Triangular<Rat>> = points.iter().map(|u| b_symmetric_matrix(u, n)).collect();
    if n % 2 == 0 {
        mats.push(b_symmetric_matrix(&ratio(1, 2), n));
    }
    let vectorized: Vec<Vec<Rat>> = mats
        .iter()
        .map(|m| m.as_matrix().rows().flat_map(|r| r.to_vec()).collect())
        .collect();
    Ok(rank_rows(vectorized) == dim && symmetric_vp_dimension(n) == dim)
}

/// Equality of moments of two measures up to index `upto`.
pub fn moments_agree(a: &Measure, b: &Measure, upto: usize) -> bool {
    (0..=upto).all(|i| moment(a, i) == moment(b, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigenprop::{full_adep_check, weak_adep_check};
    use crate::matrix::Matrix;
    use crate::pascal::vp_membership;
    use crate::scalar::Rat;
    use num_traits::Zero;

    fn dirac(p: i64, q: i64) -> Measure {
        Measure::dirac(ratio(p, q)).unwrap()
    }

    #[test]
    fn moment_examples() {
        assert_eq!(moment(&Measure::Lebesgue, 3), ratio(1, 4));
        assert_eq!(moment(&dirac(1, 2), 4), ratio(1, 16));
        let b1 = Measure::beta_symmetric(int(1)).unwrap();
        for i in 0..8 {
            assert_eq!(moment(&b1, i), moment(&Measure::Lebesgue, i));
        }
    }

    #[test]
    fn measure_validation() {
        assert!(Measure::discrete(vec![(ratio(1, 2), ratio(1, 2))]).is_err());
        assert!(Measure::discrete(vec![(int(2), int(1))]).is_err());
        assert!(Measure::discrete(vec![
            (ratio(1, 3), ratio(1, 2)),
            (ratio(1, 3), ratio(1, 2)),
        ])
        .is_err());
        assert!(Measure::beta_symmetric(int(0)).is_err());
    }

    #[test]
    fn bernstein_examples() {
        let s2 = bernstein_matrix(&ratio(1, 2), 2);
        assert_eq!(
            s2.as_matrix().rows().map(|r| r.to_vec()).collect::<Vec<_>>(),
            vec![
                vec![int(1), int(0), int(0)],
                vec![ratio(1, 2), ratio(1, 2), int(0)],
                vec![ratio(1, 4), ratio(1, 2), ratio(1, 4)],
            ]
        );
        let a0 = bernstein_matrix(&int(0), 3);
        for i in 0..4 {
            assert_eq!(a0.get(i, 0), &int::<Rat>(1));
            for j in 1..=i {
                assert!(a0.get(i, j).is_zero());
            }
        }
        assert_eq!(bernstein_matrix(&int(1), 3).as_matrix(), &Matrix::identity(4));
    }

    #[test]
    fn bernstein_conjugates_to_powers() {
        let u = ratio::<Rat>(2, 7);
        for n in 0..6 {
            let a = bernstein_matrix(&u, n);
            let conj = pascal_inverse::<Rat>(n)
                .as_matrix()
                .mul(a.as_matrix())
                .mul(pascal::<Rat>(n).as_matrix());
            let mut pw: Rat = int(1);
            for i in 0..=n {
                assert_eq!(conj.get(i, i), &pw);
                pw = pw * u.clone();
            }
            assert!(conj.is_diagonal());
        }
    }

    #[test]
    fn a_mu_examples() {
        let t3 = a_mu_matrix(&Measure::Lebesgue, 3);
        for i in 0..4 {
            for j in 0..=i {
                assert_eq!(t3.get(i, j), &ratio::<Rat>(1, i as i64 + 1));
            }
        }
        assert_eq!(a_mu_matrix(&dirac(1, 2), 3), bernstein_matrix(&ratio(1, 2), 3));

        let ends = Measure::discrete(vec![(int(0), ratio(1, 2)), (int(1), ratio(1, 2))]).unwrap();
        let x = a_mu_matrix(&ends, 2);
        assert_eq!(
            x.as_matrix().rows().map(|r| r.to_vec()).collect::<Vec<_>>(),
            vec![
                vec![int(1), int(0), int(0)],
                vec![ratio(1, 2), ratio(1, 2), int(0)],
                vec![ratio(1, 2), int(0), ratio(1, 2)],
            ]
        );
        // weak holds for every mixture; with support in {0, 1} the signed
        // diagonal repeats values, so distinctness no longer comes for free.
        assert!(weak_adep_check(&x));
        let x4 = a_mu_matrix(&ends, 4);
        assert!(weak_adep_check(&x4));
        let signed = Spectrum::new(x4.diagonal()).unwrap().signed_values();
        assert!((0..signed.len()).any(|i| signed[i + 1..].contains(&signed[i])));
    }

    #[test]
    fn a_mu_structural_invariants() {
        let measures = [
            Measure::Lebesgue,
            dirac(1, 3),
            Measure::discrete(vec![(ratio(1, 4), ratio(2, 3)), (ratio(3, 4), ratio(1, 3))])
                .unwrap(),
            Measure::beta_symmetric(ratio(3, 2)).unwrap(),
        ];
        for mu in &measures {
            let m = a_mu_matrix(mu, 5);
            for i in 0..6 {
                let mut sum: Rat = int(0);
                for j in 0..=i {
                    assert!(!m.get(i, j).is_negative(), "negative entry for {mu:?}");
                    sum = sum + m.get(i, j).clone();
                }
                assert!(sum.is_one(), "row {i} not stochastic for {mu:?}");
                assert_eq!(m.get(i, i), &moment(mu, i));
            }
            assert!(vp_membership(&m));
            assert!(full_adep_check(&m));
            let diag = MomentSequence::new(m.diagonal()).unwrap();
            assert!(cm_check(&diag, 5).unwrap());
        }
    }

    #[test]
    fn b_symmetric_examples() {
        assert_eq!(
            b_symmetric_matrix(&ratio(1, 2), 4),
            bernstein_matrix(&ratio(1, 2), 4)
        );
        let b0 = b_symmetric_matrix(&int(0), 2);
        assert_eq!(
            b0.as_matrix().rows().map(|r| r.to_vec()).collect::<Vec<_>>(),
            vec![
                vec![int(1), int(0), int(0)],
                vec![ratio(1, 2), ratio(1, 2), int(0)],
                vec![ratio(1, 2), int(0), ratio(1, 2)],
            ]
        );
        let b = b_symmetric_matrix(&ratio(1, 3), 2);
        assert_eq!(b.get(2, 0), &ratio::<Rat>(5, 18));
        assert_eq!(b.get(2, 1), &ratio::<Rat>(4, 9));
        assert_eq!(b.get(2, 2), &ratio::<Rat>(5, 18));
        for u in [int(0), ratio(1, 5), ratio(2, 3)] {
            let b = b_symmetric_matrix(&u, 5);
            assert!(b.is_row_reversal_symmetric());
            assert!(vp_membership(&b));
        }
    }

    #[test]
    fn cm_examples() {
        let leb = MomentSequence::new(vec![
            int(1),
            ratio(1, 2),
            ratio(1, 3),
            ratio(1, 4),
            ratio(1, 5),
        ])
        .unwrap();
        assert!(cm_check(&leb, 4).unwrap());
        let half = MomentSequence::new(vec![int(1), ratio(1, 2), ratio(1, 4), ratio(1, 8)])
            .unwrap();
        assert!(cm_check(&half, 3).unwrap());
        let rising = MomentSequence::new(vec![int(1), int(2), int(4)]).unwrap();
        assert!(!cm_check(&rising, 1).unwrap());
        assert_eq!(cm_violation(&rising, 1).unwrap(), Some((0, 1)));
        assert!(cm_check(&rising, 3).is_err());
    }

    #[test]
    fn d_condition_examples() {
        let spec = |v: Vec<Rat>| Spectrum::new(v).unwrap();
        assert!(d_condition_check(&spec(vec![
            int(1),
            ratio(1, 2),
            ratio(1, 4),
            ratio(1, 8),
        ])));
        assert!(!d_condition_check(&spec(vec![int(1), ratio(1, 3)])));
        // index 1 forces lambda_1 = lambda_0 / 2
        assert!(d_condition_check(&spec(vec![int(4), int(2)])));
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(dirac(1, 3).reflect(), dirac(2, 3));
        assert_eq!(Measure::Lebesgue.reflect(), Measure::Lebesgue);
        let b = Measure::beta_symmetric(ratio(5, 2)).unwrap();
        assert_eq!(b.reflect(), b);
        // moment identity of the pushforward
        let mu = Measure::discrete(vec![(ratio(1, 5), ratio(1, 3)), (ratio(2, 3), ratio(2, 3))])
            .unwrap();
        let refl = mu.reflect();
        for i in 0..6 {
            let mut acc: Rat = int(0);
            for k in 0..=i {
                let term = binomial::<Rat>(i, k) * moment(&mu, k);
                acc = if k % 2 == 0 { acc + term } else { acc - term };
            }
            assert_eq!(moment(&refl, i), acc);
        }
    }

    #[test]
    fn symmetry_iff_reflection_invariance() {
        let sym = Measure::discrete(vec![(ratio(1, 4), ratio(1, 2)), (ratio(3, 4), ratio(1, 2))])
            .unwrap();
        let asym = Measure::discrete(vec![(ratio(1, 4), ratio(2, 3)), (ratio(3, 4), ratio(1, 3))])
            .unwrap();
        for (mu, expect) in [(&sym, true), (&asym, false)] {
            let m = a_mu_matrix(mu, 5);
            assert_eq!(m.is_row_reversal_symmetric(), expect);
            assert_eq!(moments_agree(mu, &mu.reflect(), 5), expect);
            let diag = Spectrum::new(m.diagonal()).unwrap();
            assert_eq!(d_condition_check(&diag), expect);
        }
    }

    #[test]
    fn symmetric_basis_examples() {
        assert!(symmetric_basis_check(1, &[int(0)]).unwrap());
        assert!(symmetric_basis_check(3, &[int(0), ratio(1, 3)]).unwrap());
        assert!(symmetric_basis_check(2, &[int(0)]).unwrap());
        assert!(symmetric_basis_check(4, &[int(0), ratio(1, 3)]).unwrap());
        // 1/2 collides with its own reflection
        assert!(symmetric_basis_check(3, &[int(0), ratio(1, 2)]).is_err());
        // u and 1 - u collide
        assert!(symmetric_basis_check(3, &[ratio(1, 3), ratio(2, 3)]).is_err());
        assert!(symmetric_basis_check(1, &[int(0), int(1)]).is_err());
    }
}
