//! Golden reproduction suite: a fixed set of named exact assertions over
//! the library's constructions, with a small fixture set that can be
//! overridden from disk (the override path doubles as a tamper check).

use std::fs;
use std::path::Path;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::charpoly::char_poly;
use crate::eigenprop::{
    anti_product, en_membership, uniqueness_rank_check, weak_adep_check,
};
use crate::error::Error;
use crate::io::{matrix_from_json, MatrixJson};
use crate::matrix::{Matrix, Triangular};
use crate::moments::{
    a_mu_matrix, b_symmetric_matrix, bernstein_matrix, cm_check, d_condition_check, moment,
    symmetric_basis_check, Measure, MomentSequence,
};
use crate::particle::{
    detailed_balance_check, extend_g, g_from_nu, nu_classification, partition_values, rn_matrix,
    rtilde_from_nu, spectral_conditions, JumpRate, NuClass, SiteDistribution,
};
use crate::pascal::{
    conjugate_q, pascal, pascal_inverse, pi_map, reconstruct_by_differences, vp_membership,
    Spectrum,
};
use crate::poly::Polynomial;
use crate::scalar::{int, ratio, rising_factorial, Rat};
use crate::sturm::{distinct_real_roots, squarefree_part, sturm_count, Bound};

/// One golden assertion.
#[derive(Debug, Clone, Serialize)]
pub struct AnchorResult {
    pub name: String,
    pub passed: bool,
    /// empty on success, the mismatch on failure
    pub detail: String,
}

/// Full run of the suite.
#[derive(Debug, Clone, Serialize)]
pub struct ReproReport {
    pub depth: usize,
    pub executed: usize,
    pub skipped: usize,
    pub all_passed: bool,
    pub results: Vec<AnchorResult>,
}

/// Built-in fixture names, each available as `<name>.json` for overriding.
pub const FIXTURE_NAMES: [&str; 4] = ["t2", "s2", "q2", "pinv2"];

/// Built-in fixture content.
pub fn default_fixture(name: &str) -> Option<&'static str> {
    match name {
        "t2" => Some(r#"{"n":3,"rows":[["1","0","0"],["1/2","1/2","0"],["1/3","1/3","1/3"]]}"#),
        "s2" => Some(r#"{"n":3,"rows":[["1","0","0"],["1/2","1/2","0"],["1/4","1/2","1/4"]]}"#),
        "q2" => Some(r#"{"n":3,"rows":[["1","2","1"],["0","-1","-1"],["0","0","1"]]}"#),
        "pinv2" => Some(r#"{"n":3,"rows":[["1","0","0"],["-1","1","0"],["1","-2","1"]]}"#),
        _ => None,
    }
}

fn load_fixture(dir: Option<&Path>, name: &str) -> Result<Matrix<Rat>, String> {
    let text = match dir {
        Some(d) => {
            let path = d.join(format!("{name}.json"));
            if path.exists() {
                fs::read_to_string(&path).map_err(|e| format!("read {}: {e}", path.display()))?
            } else {
                default_fixture(name).ok_or("unknown fixture")?.to_string()
            }
        }
        None => default_fixture(name).ok_or("unknown fixture")?.to_string(),
    };
    let json: MatrixJson =
        serde_json::from_str(&text).map_err(|e| format!("fixture {name}: {e}"))?;
    matrix_from_json(&json).map_err(|e| format!("fixture {name}: {e}"))
}

fn check(cond: bool, detail: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(detail.to_string())
    }
}

fn harmonic_spectrum(n: usize) -> Spectrum<Rat> {
    Spectrum::new((0..=n).map(|i| ratio(1, i as i64 + 1)).collect()).unwrap()
}

fn dyadic_spectrum(n: usize) -> Spectrum<Rat> {
    Spectrum::new((0..=n as u32).map(|i| ratio(1, 1i64 << i)).collect()).unwrap()
}

type Anchor<'a> = (&'a str, usize, Box<dyn Fn() -> Result<(), String> + 'a>);

/// Run the golden suite at the given truncation depth; anchors needing a
/// larger depth are skipped. `fixture_dir` overrides built-in fixtures.
pub fn run(fixture_dir: Option<&Path>, depth: usize) -> ReproReport {
    let tri = |m: Matrix<Rat>| -> Result<Triangular<Rat>, String> {
        Triangular::new(m).map_err(|e| e.to_string())
    };
    let geometric = |upto: usize| SiteDistribution::geometric(&ratio(2, 3), upto).unwrap();
    let poisson = |upto: usize| SiteDistribution::poisson_shape(&int(1), upto).unwrap();

    let anchors: Vec<Anchor> = vec![
        ("TG spectrum is the alternating harmonic sequence", 2, Box::new(|| {
            let t2 = tri(load_fixture(fixture_dir, "t2")?)?;
            let got = char_poly(&anti_product(&t2));
            let want = Polynomial::from_roots(&[int(1), ratio(-1, 2), ratio(1, 3)]);
            check(got == want, &format!("char poly {got:?}"))
        })),
        ("SG spectrum is the alternating dyadic sequence", 2, Box::new(|| {
            let s2 = tri(load_fixture(fixture_dir, "s2")?)?;
            let got = char_poly(&anti_product(&s2));
            let want = Polynomial::from_roots(&[int(1), ratio(-1, 2), ratio(1, 4)]);
            check(got == want, &format!("char poly {got:?}"))
        })),
        ("pascal inverse matches the signed closed form", 1, Box::new(|| {
            let n = depth.min(10);
            let inv = pascal::<Rat>(n)
                .as_matrix()
                .triangular_inverse()
                .map_err(|e| e.to_string())?;
            check(&inv == pascal_inverse::<Rat>(n).as_matrix(), "inverse mismatch")
        })),
        ("harmonic fixture lies in V_P", 2, Box::new(|| {
            let t2 = tri(load_fixture(fixture_dir, "t2")?)?;
            check(vp_membership(&t2), "conjugation not diagonal")
        })),
        ("anti-identity conjugate matches its closed form", 1, Box::new(|| {
            let q2 = load_fixture(fixture_dir, "q2")?;
            check(q2 == conjugate_q::<Rat>(2), "fixture differs from closed form")?;
            let n = depth.min(12);
            let direct = pascal_inverse::<Rat>(n)
                .as_matrix()
                .mul(&crate::pascal::anti_identity(n))
                .mul(pascal::<Rat>(n).as_matrix());
            check(direct == conjugate_q::<Rat>(n), "closed form differs from product")
        })),
        ("inverse fixture matches the computed inverse", 2, Box::new(|| {
            let pinv = load_fixture(fixture_dir, "pinv2")?;
            let inv = pascal::<Rat>(2)
                .as_matrix()
                .triangular_inverse()
                .map_err(|e| e.to_string())?;
            check(pinv == inv, "fixture differs from inverse")
        })),
        ("conjugation map keeps the prescribed diagonal", 1, Box::new(|| {
            let lam = harmonic_spectrum(depth.min(10));
            let x = pi_map(&lam);
            check(x.diagonal() == lam.values(), "diagonal mismatch")
        })),
        ("difference reconstruction matches conjugation", 1, Box::new(|| {
            let lam = harmonic_spectrum(depth.min(10));
            check(reconstruct_by_differences(&lam) == pi_map(&lam), "reconstruction mismatch")
        })),
        ("certificates are nonzero on the harmonic spectrum", 2, Box::new(|| {
            let report = en_membership(&harmonic_spectrum(depth.min(6)));
            check(report.in_en && report.in_en_tilde, "certificate vanished")
        })),
        ("last row is unique on the harmonic spectrum", 2, Box::new(|| {
            check(uniqueness_rank_check(&harmonic_spectrum(depth.min(6))), "rank deficient")
        })),
        ("constant spectrum loses uniqueness", 2, Box::new(|| {
            let c = ratio::<Rat>(3, 7);
            let lam = Spectrum::new(vec![c.clone(), c.clone(), c]).unwrap();
            check(!uniqueness_rank_check(&lam), "unexpectedly unique")
        })),
        ("bernstein conjugation gives the power diagonal", 1, Box::new(|| {
            let n = depth.min(8);
            let u = ratio::<Rat>(1, 3);
            let conj = pascal_inverse::<Rat>(n)
                .as_matrix()
                .mul(bernstein_matrix(&u, n).as_matrix())
                .mul(pascal::<Rat>(n).as_matrix());
            check(conj.is_diagonal(), "not diagonal")?;
            let mut pw: Rat = int(1);
            for i in 0..=n {
                check(conj.get(i, i) == &pw, &format!("power mismatch at {i}"))?;
                pw = pw * u.clone();
            }
            Ok(())
        })),
        ("uniform mixture is the harmonic matrix", 1, Box::new(|| {
            let n = depth.min(8);
            let m = a_mu_matrix(&Measure::Lebesgue, n);
            for i in 0..=n {
                for j in 0..=i {
                    check(
                        m.get(i, j) == &ratio::<Rat>(1, i as i64 + 1),
                        &format!("entry ({i},{j})"),
                    )?;
                }
            }
            Ok(())
        })),
        ("point mass at one half is the dyadic matrix", 1, Box::new(|| {
            let n = depth.min(8);
            let mu = Measure::dirac(ratio(1, 2)).map_err(|e| e.to_string())?;
            check(
                a_mu_matrix(&mu, n) == bernstein_matrix(&ratio(1, 2), n),
                "mixture differs",
            )?;
            check(
                a_mu_matrix(&mu, n).diagonal() == dyadic_spectrum(n).values(),
                "diagonal not dyadic",
            )
        })),
        ("discrete mixture is a stochastic V_P member", 1, Box::new(|| {
            let n = depth.min(6);
            let mu = Measure::discrete(vec![(ratio(1, 4), ratio(2, 3)), (ratio(3, 4), ratio(1, 3))])
                .map_err(|e| e.to_string())?;
            let m = a_mu_matrix(&mu, n);
            for i in 0..=n {
                let mut sum: Rat = int(0);
                for j in 0..=i {
                    check(!m.get(i, j).is_negative(), "negative entry")?;
                    sum = sum + m.get(i, j).clone();
                }
                check(sum.is_one(), &format!("row {i} sum"))?;
            }
            check(vp_membership(&m), "not in V_P")?;
            check(weak_adep_check(&m), "weak property fails")
        })),
        ("endpoint-supported mixture keeps the weak property", 2, Box::new(|| {
            let mu = Measure::discrete(vec![(int(0), ratio(1, 2)), (int(1), ratio(1, 2))])
                .map_err(|e| e.to_string())?;
            check(weak_adep_check(&a_mu_matrix(&mu, depth.min(6))), "weak property fails")
        })),
        ("increasing sequence is not completely monotone", 2, Box::new(|| {
            let a = MomentSequence::new(vec![int(1), int(2), int(4)]).unwrap();
            check(!cm_check(&a, 1).map_err(|e| e.to_string())?, "accepted")
        })),
        ("mixture diagonals are completely monotone", 2, Box::new(|| {
            let n = depth.min(8);
            for mu in [
                Measure::Lebesgue,
                Measure::dirac(ratio(1, 2)).map_err(|e| e.to_string())?,
                Measure::beta_symmetric(ratio(3, 2)).map_err(|e| e.to_string())?,
            ] {
                let diag = MomentSequence::new(a_mu_matrix(&mu, n).diagonal()).unwrap();
                check(cm_check(&diag, n).map_err(|e| e.to_string())?, "not monotone")?;
            }
            Ok(())
        })),
        ("symmetric beta at one matches uniform moments", 1, Box::new(|| {
            let b1 = Measure::beta_symmetric(int(1)).map_err(|e| e.to_string())?;
            for i in 0..=depth.min(12) {
                check(
                    moment(&b1, i) == moment(&Measure::Lebesgue, i),
                    &format!("moment {i}"),
                )?;
            }
            Ok(())
        })),
        ("symmetric beta moments are rising-factorial ratios", 2, Box::new(|| {
            let t = int::<Rat>(2);
            let b = Measure::beta_symmetric(t.clone()).map_err(|e| e.to_string())?;
            for i in 0..=depth.min(10) {
                let want = rising_factorial(&t, i)
                    / rising_factorial(&(t.clone() + t.clone()), i);
                check(moment(&b, i) == want, &format!("moment {i}"))?;
            }
            check(moment(&b, 2) == ratio(3, 10), "spot value")
        })),
        ("extension recursion reproduces the beta-family rate", 2, Box::new(|| {
            let upto = depth.max(2).min(20);
            let g = extend_g(&int(1), &ratio(3, 2), upto).map_err(|e| e.to_string())?;
            let want = JumpRate::alpha_g_t(int(1), int(3), upto).map_err(|e| e.to_string())?;
            check(g.values() == want.values(), "values differ")
        })),
        ("extension recursion reproduces the identity rate", 2, Box::new(|| {
            let upto = depth.max(2).min(20);
            let g = extend_g(&int(1), &int(2), upto).map_err(|e| e.to_string())?;
            let want = JumpRate::alpha_id(int(1), upto).map_err(|e| e.to_string())?;
            check(g.values() == want.values(), "values differ")
        })),
        ("no positive extension beyond slope two", 4, Box::new(|| {
            match extend_g(&int(1), &int(3), depth.min(10)) {
                Err(Error::NoPositiveExtension(4)) => Ok(()),
                other => Err(format!("got {other:?}")),
            }
        })),
        ("partition values follow the rising-factorial ratio", 2, Box::new(|| {
            let upto = depth.max(2).min(12);
            let g = JumpRate::alpha_g_t(int(1), int(2), upto).map_err(|e| e.to_string())?;
            let pv = partition_values(&g, upto).map_err(|e| e.to_string())?;
            for i in 0..=upto {
                let want = rising_factorial(&int::<Rat>(4), i)
                    / rising_factorial(&int::<Rat>(2), i);
                check(pv.z(i) == &want, &format!("Z_{i}"))?;
            }
            Ok(())
        })),
        ("row-reversal symmetry tracks reflection invariance", 2, Box::new(|| {
            let n = depth.min(6);
            let sym =
                Measure::discrete(vec![(ratio(1, 4), ratio(1, 2)), (ratio(3, 4), ratio(1, 2))])
                    .map_err(|e| e.to_string())?;
            let asym =
                Measure::discrete(vec![(ratio(1, 4), ratio(2, 3)), (ratio(3, 4), ratio(1, 3))])
                    .map_err(|e| e.to_string())?;
            check(a_mu_matrix(&sym, n).is_row_reversal_symmetric(), "symmetric case")?;
            check(!a_mu_matrix(&asym, n).is_row_reversal_symmetric(), "asymmetric case")
        })),
        ("odd-index condition holds on the dyadic diagonal", 3, Box::new(|| {
            check(d_condition_check(&dyadic_spectrum(depth.min(8))), "condition fails")?;
            let bad = Spectrum::new(vec![int(1), ratio(1, 3)]).unwrap();
            check(!d_condition_check(&bad), "accepted bad pair")
        })),
        ("symmetric averages form a basis", 3, Box::new(|| {
            check(
                symmetric_basis_check(3, &[int(0), ratio(1, 3)]).map_err(|e| e.to_string())?,
                "rank deficient",
            )
        })),
        ("geometric weights give the harmonic matrix", 2, Box::new(|| {
            let n = depth.min(8);
            let r = rtilde_from_nu(&geometric(n), n).map_err(|e| e.to_string())?;
            for i in 0..=n {
                for j in 0..=i {
                    check(
                        r.get(i, j) == &ratio::<Rat>(1, i as i64 + 1),
                        &format!("entry ({i},{j})"),
                    )?;
                }
            }
            Ok(())
        })),
        ("poisson weights give the dyadic matrix", 2, Box::new(|| {
            let n = depth.min(8);
            let r = rtilde_from_nu(&poisson(n), n).map_err(|e| e.to_string())?;
            check(r == bernstein_matrix(&ratio(1, 2), n), "matrix differs")
        })),
        ("three-site matrix satisfies detailed balance", 2, Box::new(|| {
            let n = depth.min(8);
            for upto in 0..=n {
                check(
                    detailed_balance_check(&geometric(n), upto).map_err(|e| e.to_string())?,
                    &format!("fails at n = {upto}"),
                )?;
            }
            Ok(())
        })),
        ("three-site spectra are real and floored", 2, Box::new(|| {
            let n = depth.min(8);
            let nu = SiteDistribution::new(vec![
                int(1), int(3), ratio(1, 7), int(2), ratio(5, 2), int(1), int(1), int(4),
                ratio(2, 9),
            ])
            .map_err(|e| e.to_string())?;
            for m in 1..=n.min(nu.top_index()) {
                let p = char_poly(&rn_matrix(&nu, m).map_err(|e| e.to_string())?);
                let sf = squarefree_part(&p).map_err(|e| e.to_string())?;
                check(
                    distinct_real_roots(&p).map_err(|e| e.to_string())?
                        == sf.degree().unwrap_or(0),
                    &format!("complex root at n = {m}"),
                )?;
                let half = ratio::<Rat>(-1, 2);
                let below = sturm_count(&p, &Bound::NegInf, &Bound::Finite(half.clone()))
                    .map_err(|e| e.to_string())?
                    - usize::from(p.eval(&half).is_zero());
                check(below == 0, &format!("eigenvalue below -1/2 at n = {m}"))?;
            }
            Ok(())
        })),
        ("geometric weights classify as negative binomial", 3, Box::new(|| {
            let got = nu_classification(&geometric(depth.min(8))).map_err(|e| e.to_string())?;
            let want = NuClass::NegativeBinomial { t: int(1), p: ratio(1, 3) };
            check(got == want, &format!("got {got:?}"))
        })),
        ("poisson weights classify as poisson", 3, Box::new(|| {
            let nu = SiteDistribution::poisson_shape(&int(2), depth.min(8)).unwrap();
            let got = nu_classification(&nu).map_err(|e| e.to_string())?;
            check(got == NuClass::Poisson { lambda: int(2) }, &format!("got {got:?}"))
        })),
        ("perturbed weights fall outside V_P", 3, Box::new(|| {
            let nu = SiteDistribution::new(vec![int(1), int(1), int(1), int(2)])
                .map_err(|e| e.to_string())?;
            let got = nu_classification(&nu).map_err(|e| e.to_string())?;
            check(got == NuClass::OutsideVP { witness: 3 }, &format!("got {got:?}"))
        })),
        ("spectral bound one third for geometric weights", 3, Box::new(|| {
            let n = depth.min(8).max(3);
            let report = spectral_conditions(&geometric(n), n).map_err(|e| e.to_string())?;
            check(report.sup_value == ratio(1, 3), &format!("sup {}", report.sup_value))?;
            check(report.sup_bound_holds, "bound fails")?;
            check(report.min_eigenvalue_bound_holds, "floor fails")?;
            check(report.attained_at.contains(&1), "floor not attained at n = 1")
        })),
        ("spectral bound one quarter for poisson weights", 3, Box::new(|| {
            let n = depth.min(8).max(3);
            let report = spectral_conditions(&poisson(n), n).map_err(|e| e.to_string())?;
            check(report.sup_value == ratio(1, 4), &format!("sup {}", report.sup_value))?;
            check(report.sup_bound_holds, "bound fails")
        })),
        ("spectral bound three tenths for the beta-family rate", 3, Box::new(|| {
            let n = depth.min(8).max(3);
            let g = JumpRate::alpha_g_t(int(1), int(2), n).map_err(|e| e.to_string())?;
            let mut w: Vec<Rat> = vec![int(1)];
            for i in 1..=n {
                w.push(w[i - 1].clone() / (int::<Rat>(2) * g.value(i).clone()));
            }
            let nu = SiteDistribution::new(w).map_err(|e| e.to_string())?;
            let report = spectral_conditions(&nu, n).map_err(|e| e.to_string())?;
            check(report.sup_value == ratio(3, 10), &format!("sup {}", report.sup_value))
        })),
        ("jump rate survives geometric reweighting", 2, Box::new(|| {
            let n = depth.min(6);
            let nu = SiteDistribution::new(vec![
                int(1), ratio(2, 5), int(3), ratio(1, 2), int(1), int(2), int(1),
            ][..=n.max(1)]
                .to_vec())
            .map_err(|e| e.to_string())?;
            let c = ratio::<Rat>(3, 4);
            let mut scaled: Vec<Rat> = vec![int(1)];
            let mut power: Rat = int(1);
            for w in &nu.weights()[1..] {
                power = power / c.clone();
                scaled.push(w.clone() * power.clone());
            }
            let scaled = SiteDistribution::new(scaled).map_err(|e| e.to_string())?;
            let top = nu.top_index();
            check(
                rtilde_from_nu(&nu, top).map_err(|e| e.to_string())?
                    == rtilde_from_nu(&scaled, top).map_err(|e| e.to_string())?,
                "matrices differ",
            )
        })),
        ("weight ratios recover the tabulated jump rate", 1, Box::new(|| {
            let nu = SiteDistribution::new(vec![int(1), ratio(1, 2), ratio(1, 4)])
                .map_err(|e| e.to_string())?;
            let g = g_from_nu(&nu).map_err(|e| e.to_string())?;
            check(g.values() == [int::<Rat>(2), int(2)], "ratios differ")
        })),
        ("symmetric average has mirrored rows", 2, Box::new(|| {
            let n = depth.min(8);
            let b = b_symmetric_matrix(&ratio(1, 3), n);
            check(b.is_row_reversal_symmetric(), "not symmetric")?;
            check(vp_membership(&b), "not in V_P")
        })),
    ];

    let mut results = Vec::new();
    let mut skipped = 0;
    for (name, min_depth, body) in &anchors {
        if depth < *min_depth {
            skipped += 1;
            continue;
        }
        let outcome = body();
        results.push(AnchorResult {
            name: name.to_string(),
            passed: outcome.is_ok(),
            detail: outcome.err().unwrap_or_default(),
        });
    }
    ReproReport {
        depth,
        executed: results.len(),
        skipped,
        all_passed: results.iter().all(|r| r.passed),
        results,
    }
}
