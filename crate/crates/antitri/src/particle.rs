//! Three-site particle-system matrices: the conditional-distribution matrix
//! R~ built from a site distribution, its anti-triangular companion R_n, the
//! jump rate g with its generalized binomials and partition values Z_i, the
//! forced extension recursion, the two classification theorems, and the
//! spectral conditions.

use num_traits::{One, Signed, Zero};

use crate::charpoly::char_poly;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Triangular};
use crate::pascal::anti_identity;
use crate::scalar::{int, ratio, Rat};
use crate::sturm::{sturm_count, Bound};

/// Unnormalized site distribution: positive weights with w(0) = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiteDistribution {
    weights: Vec<Rat>,
}

impl SiteDistribution {
    /// Validates positivity and rescales so that w(0) = 1; every formula
    /// downstream uses ratios, so the normalization is harmless.
    pub fn new(weights: Vec<Rat>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::PreconditionViolated("no weights".into()));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_positive()) {
            return Err(Error::PreconditionViolated(format!(
                "weight {w} not positive"
            )));
        }
        let w0 = weights[0].clone();
        Ok(Self {
            weights: weights.into_iter().map(|w| w / w0.clone()).collect(),
        })
    }

    /// Geometric shape w(i) = q^i.
    pub fn geometric(q: &Rat, upto: usize) -> Result<Self> {
        let mut w: Vec<Rat> = vec![int(1)];
        for i in 1..=upto {
            w.push(w[i - 1].clone() * q.clone());
        }
        Self::new(w)
    }

    /// Poisson shape w(i) = lambda^i / i!.
    pub fn poisson_shape(lambda: &Rat, upto: usize) -> Result<Self> {
        let mut w: Vec<Rat> = vec![int(1)];
        for i in 1..=upto {
            w.push(w[i - 1].clone() * lambda.clone() / int::<Rat>(i as i64));
        }
        Self::new(w)
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    /// Top index N.
    pub fn top_index(&self) -> usize {
        self.weights.len() - 1
    }
}

/// Named jump-rate families recognized by the classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GFamily {
    /// g(i) = alpha * i * t / (i + t - 1).
    AlphaGT { alpha: Rat, t: Rat },
    /// g(i) = alpha * i.
    AlphaId { alpha: Rat },
    Tabulated,
}

/// Jump rate g(1..N), all values positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpRate {
    values: Vec<Rat>,
    family: GFamily,
}

fn g_t(i: usize, t: &Rat) -> Rat {
    int::<Rat>(i as i64) * t.clone() / (int::<Rat>(i as i64) + t.clone() - int::<Rat>(1))
}

impl JumpRate {
    pub fn tabulated(values: Vec<Rat>) -> Result<Self> {
        Self::with_family(values, GFamily::Tabulated)
    }

    /// Tabulates alpha * G_t up to index `upto`.
    pub fn alpha_g_t(alpha: Rat, t: Rat, upto: usize) -> Result<Self> {
        if !t.is_positive() || !alpha.is_positive() {
            return Err(Error::PreconditionViolated(
                "alpha and t must be positive".into(),
            ));
        }
        let values = (1..=upto).map(|i| alpha.clone() * g_t(i, &t)).collect();
        Self::with_family(values, GFamily::AlphaGT { alpha, t })
    }

    /// Tabulates alpha * Id up to index `upto`.
    pub fn alpha_id(alpha: Rat, upto: usize) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::PreconditionViolated("alpha must be positive".into()));
        }
        let values = (1..=upto).map(|i| alpha.clone() * int::<Rat>(i as i64)).collect();
        Self::with_family(values, GFamily::AlphaId { alpha })
    }

    fn with_family(values: Vec<Rat>, family: GFamily) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::TooFewValues);
        }
        if let Some(v) = values.iter().find(|v| !v.is_positive()) {
            return Err(Error::PreconditionViolated(format!(
                "jump rate {v} not positive"
            )));
        }
        Ok(Self { values, family })
    }

    /// g(i) for 1 <= i <= top_index.
    pub fn value(&self, i: usize) -> &Rat {
        &self.values[i - 1]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn family(&self) -> &GFamily {
        &self.family
    }

    /// Largest tabulated index N.
    pub fn top_index(&self) -> usize {
        self.values.len()
    }

    /// g-factorials g(i)! = g(i) g(i-1) ... g(1), index 0..=top (g(0)! = 1).
    fn factorials(&self) -> Vec<Rat> {
        let mut f: Vec<Rat> = vec![int(1)];
        for i in 1..=self.top_index() {
            f.push(f[i - 1].clone() * self.value(i).clone());
        }
        f
    }
}

/// Partition values Z_0..Z_N and the auxiliary Z~_1..Z~_{N-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionValues {
    z: Vec<Rat>,
    z_tilde: Vec<Rat>,
}

impl PartitionValues {
    pub fn z(&self, i: usize) -> &Rat {
        &self.z[i]
    }

    pub fn z_tilde(&self, i: usize) -> &Rat {
        &self.z_tilde[i - 1]
    }

    pub fn top_index(&self) -> usize {
        self.z.len() - 1
    }
}

/// Z_i = sum_j C_g(i, j) over the generalized binomials
/// C_g(i, j) = g(i)!/(g(j)! g(i-j)!), together with
/// Z~_i = sum_{j=1}^i g(i)!/(g(j)! g(i+1-j)!).
pub fn partition_values(g: &JumpRate, upto: usize) -> Result<PartitionValues> {
    if upto == 0 || upto > g.top_index() {
        return Err(Error::IndexOutOfRange(format!(
            "upto = {upto} not in 1..={}",
            g.top_index()
        )));
    }
    let gf = g.factorials();
    let mut z = Vec::with_capacity(upto + 1);
    for i in 0..=upto {
        let mut acc: Rat = int(0);
        for j in 0..=i {
            acc = acc + gf[i].clone() / (gf[j].clone() * gf[i - j].clone());
        }
        z.push(acc);
    }
    let mut z_tilde = Vec::new();
    for i in 1..upto {
        let mut acc: Rat = int(0);
        for j in 1..=i {
            acc = acc + gf[i].clone() / (gf[j].clone() * gf[i + 1 - j].clone());
        }
        z_tilde.push(acc);
    }
    debug_assert!(z[0].is_one());
    debug_assert_eq!(z[1], int(2));
    Ok(PartitionValues { z, z_tilde })
}

/// g from a site distribution: g(i) = w(i-1)/w(i), tabulated.
pub fn g_from_nu(nu: &SiteDistribution) -> Result<JumpRate> {
    let w = nu.weights();
    JumpRate::tabulated((1..w.len()).map(|i| w[i - 1].clone() / w[i].clone()).collect())
}

/// R~ restricted to size n + 1: r~_{ij} = nu(j) nu(i-j) / sum_k nu(k) nu(i-k).
pub fn rtilde_from_nu(nu: &SiteDistribution, n: usize) -> Result<Triangular<Rat>> {
    if n > nu.top_index() {
        return Err(Error::IndexOutOfRange(format!(
            "n = {n} exceeds top weight index {}",
            nu.top_index()
        )));
    }
    let w = nu.weights();
    let row_sums: Vec<Rat> = (0..=n)
        .map(|i| {
            let mut acc: Rat = int(0);
            for k in 0..=i {
                acc = acc + w[k].clone() * w[i - k].clone();
            }
            acc
        })
        .collect();
    Ok(Triangular::from_fn(n + 1, |i, j| {
        w[j].clone() * w[i - j].clone() / row_sums[i].clone()
    }))
}

/// R_n = G * R~|_n: the anti-triangular conditional-distribution matrix.
pub fn rn_matrix(nu: &SiteDistribution, n: usize) -> Result<Matrix<Rat>> {
    let rt = rtilde_from_nu(nu, n)?;
    Ok(anti_identity::<Rat>(n).mul(rt.as_matrix()))
}

/// Extends (g(1), g(2)) = (1, g2) step by step through the forced relation
/// g(i) (i Z~_{i-1} - Z_{i-1}) = i (Z_{i-1} - 2), reusing the running
/// g-factorials. Fails with the offending index when a step has no positive
/// solution; for g2 = s < 2 the result is G_{s/(2-s)}, for s = 2 it is Id.
pub fn extend_g(g1: &Rat, g2: &Rat, upto: usize) -> Result<JumpRate> {
    if !g1.is_one() {
        return Err(Error::PreconditionViolated(format!(
            "normalization requires g(1) = 1, got {g1}"
        )));
    }
    if !g2.is_positive() {
        return Err(Error::PreconditionViolated(format!(
            "g(2) = {g2} not positive"
        )));
    }
    if upto < 2 {
        return Err(Error::PreconditionViolated("need upto >= 2".into()));
    }
    let mut values = vec![g1.clone(), g2.clone()];
    // running g-factorials, reused by each step's Z and Z~ sums
    let mut gf: Vec<Rat> = vec![int(1), g1.clone(), g2.clone()];
    for i in 3..=upto {
        let m = i - 1;
        let mut z_prev: Rat = int(0);
        for j in 0..=m {
            z_prev = z_prev + gf[m].clone() / (gf[j].clone() * gf[m - j].clone());
        }
        let mut zt_prev: Rat = int(0);
        for j in 1..=m {
            zt_prev = zt_prev + gf[m].clone() / (gf[j].clone() * gf[m + 1 - j].clone());
        }
        let denom = int::<Rat>(i as i64) * zt_prev - z_prev.clone();
        if !denom.is_positive() {
            return Err(Error::NoPositiveExtension(i));
        }
        let gi = int::<Rat>(i as i64) * (z_prev - int::<Rat>(2)) / denom;
        gf.push(gf[m].clone() * gi.clone());
        values.push(gi);
    }
    let family = if g2 == &int(2) {
        GFamily::AlphaId { alpha: int(1) }
    } else if g2 < &int(2) {
        GFamily::AlphaGT {
            alpha: int(1),
            t: g2.clone() / (int::<Rat>(2) - g2.clone()),
        }
    } else {
        GFamily::Tabulated
    };
    JumpRate::with_family(values, family)
}

/// Outcome of the jump-rate classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GClass {
    AlphaGT { alpha: Rat, t: Rat },
    AlphaId { alpha: Rat },
    /// First index at which membership in V_P(infinity) breaks down.
    OutsideVP { witness: usize },
}

/// Classifies a tabulated g against the two admissible families. With
/// s = g(2)/g(1) > 2, even a table matching the forced recursion eventually
/// breaks down: the witness is then the index where the closed-form
/// denominator 2(i-1) - (i-2)s turns nonpositive.
pub fn classify_g(g: &JumpRate) -> Result<GClass> {
    if g.top_index() < 3 {
        return Err(Error::TooFewValues);
    }
    let alpha = g.value(1).clone();
    let s = g.value(2).clone() / alpha.clone();
    if s == int(2) {
        for i in 1..=g.top_index() {
            if g.value(i) != &(alpha.clone() * int::<Rat>(i as i64)) {
                return Ok(GClass::OutsideVP { witness: i });
            }
        }
        return Ok(GClass::AlphaId { alpha });
    }
    if s < int(2) {
        let t = s.clone() / (int::<Rat>(2) - s.clone());
        for i in 1..=g.top_index() {
            if g.value(i) != &(alpha.clone() * g_t(i, &t)) {
                return Ok(GClass::OutsideVP { witness: i });
            }
        }
        return Ok(GClass::AlphaGT { alpha, t });
    }
    // s > 2: check the table against the forced values f_i(s) while the
    // denominator stays positive; the breakdown index certifies the rest.
    let mut i = 3;
    loop {
        let denom = int::<Rat>(2 * (i as i64 - 1)) - int::<Rat>(i as i64 - 2) * s.clone();
        if !denom.is_positive() {
            return Ok(GClass::OutsideVP { witness: i });
        }
        if i <= g.top_index() {
            let forced = int::<Rat>(i as i64) * s.clone() / denom;
            if g.value(i) != &(alpha.clone() * forced) {
                return Ok(GClass::OutsideVP { witness: i });
            }
        }
        i += 1;
    }
}

/// Outcome of the site-distribution classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NuClass {
    NegativeBinomial { t: Rat, p: Rat },
    Poisson { lambda: Rat },
    OutsideVP { witness: usize },
}

/// Classifies nu via its jump rate: alpha G_t corresponds to the negative
/// binomial with parameters (t, 1 - 1/(alpha t)) when alpha t > 1, and
/// alpha Id to Poisson(1/alpha).
pub fn nu_classification(nu: &SiteDistribution) -> Result<NuClass> {
    if nu.top_index() < 3 {
        return Err(Error::TooFewValues);
    }
    match classify_g(&g_from_nu(nu)?)? {
        GClass::AlphaGT { alpha, t } => {
            let at = alpha * t.clone();
            if at <= int(1) {
                return Err(Error::NotNormalizable);
            }
            Ok(NuClass::NegativeBinomial {
                t,
                p: int::<Rat>(1) - int::<Rat>(1) / at,
            })
        }
        GClass::AlphaId { alpha } => Ok(NuClass::Poisson {
            lambda: int::<Rat>(1) / alpha,
        }),
        GClass::OutsideVP { witness } => Ok(NuClass::OutsideVP { witness }),
    }
}

/// Exact finite-horizon report on the two spectral conditions and the
/// eigenvalue lower bound -1/2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralReport {
    pub checked_n: usize,
    /// max over even 2 <= i <= checked_n of 1/Z_i, i.e. the largest
    /// candidate for the second-highest eigenvalue.
    pub sup_value: Rat,
    /// sup_value < 1/2, equivalent to Z_{2i} > 2 on the checked range.
    pub sup_bound_holds: bool,
    /// inf of g(2i) over the checked range is positive.
    pub inf_even_g_positive: bool,
    /// no R_n eigenvalue below -1/2 for any n <= checked_n.
    pub min_eigenvalue_bound_holds: bool,
    /// the n at which -1/2 is attained as an eigenvalue.
    pub attained_at: Vec<usize>,
}

/// Spectral conditions for a classified site distribution over n <= n_max.
pub fn spectral_conditions(nu: &SiteDistribution, n_max: usize) -> Result<SpectralReport> {
    if n_max < 2 || n_max > nu.top_index() {
        return Err(Error::PreconditionViolated(format!(
            "n_max = {n_max} must be in 2..={}",
            nu.top_index()
        )));
    }
    if matches!(nu_classification(nu), Err(_) | Ok(NuClass::OutsideVP { .. })) {
        return Err(Error::NotClassified);
    }
    let g = g_from_nu(nu)?;
    let pv = partition_values(&g, n_max)?;
    let mut sup_value: Option<Rat> = None;
    for i in (2..=n_max).step_by(2) {
        let v = int::<Rat>(1) / pv.z(i).clone();
        if sup_value.as_ref().map_or(true, |s| &v > s) {
            sup_value = Some(v);
        }
    }
    let sup_value = sup_value.expect("n_max >= 2");
    let inf_even_g_positive = (2..=g.top_index())
        .step_by(2)
        .all(|i| g.value(i).is_positive());
    let half = ratio::<Rat>(-1, 2);
    let mut min_ok = true;
    let mut attained_at = Vec::new();
    for n in 0..=n_max {
        let p = char_poly(&rn_matrix(nu, n)?);
        let attained = p.eval(&half).is_zero();
        let below = sturm_count(&p, &Bound::NegInf, &Bound::Finite(half.clone()))?
            - usize::from(attained);
        if below > 0 {
            min_ok = false;
        }
        if attained {
            attained_at.push(n);
        }
    }
    Ok(SpectralReport {
        checked_n: n_max,
        sup_bound_holds: sup_value < ratio(1, 2),
        sup_value,
        inf_even_g_positive,
        min_eigenvalue_bound_holds: min_ok,
        attained_at,
    })
}

/// Detailed balance of R_n with respect to the marginal weights
/// pi(i) proportional to w(i) sum_k w(k) w(n-i-k).
pub fn detailed_balance_check(nu: &SiteDistribution, n: usize) -> Result<bool> {
    let r = rn_matrix(nu, n)?;
    let w = nu.weights();
    let pi: Vec<Rat> = (0..=n)
        .map(|i| {
            let mut acc: Rat = int(0);
            for k in 0..=n - i {
                acc = acc + w[k].clone() * w[n - i - k].clone();
            }
            w[i].clone() * acc
        })
        .collect();
    for i in 0..=n {
        for j in 0..=n {
            if pi[i].clone() * r.get(i, j).clone() != pi[j].clone() * r.get(j, i).clone() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
