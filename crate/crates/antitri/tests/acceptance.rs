//! End-to-end acceptance run: thirteen exact criteria, one printed
//! pass/fail line each. Random instances use a fixed seed.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use antitri::charpoly::char_poly;
use antitri::eigenprop::{
    anti_product, en_membership, oracle, uniqueness_rank_check, weak_adep_check,
};
use antitri::matrix::Triangular;
use antitri::moments::{a_mu_matrix, d_condition_check, moment, symmetric_basis_check, Measure};
use antitri::particle::{
    detailed_balance_check, extend_g, nu_classification, rn_matrix, spectral_conditions,
    JumpRate, NuClass, SiteDistribution,
};
use antitri::pascal::{
    anti_identity, conjugate_q, pascal, phi_map, pi_map, vp_membership, Spectrum,
};
use antitri::poly::Polynomial;
use antitri::scalar::{binomial, int, ratio, Rat};
use antitri::sturm::{distinct_real_roots, squarefree_part, sturm_count, Bound};
use antitri::Error;

fn rat(rng: &mut StdRng) -> Rat {
    ratio(rng.gen_range(-12i64..=12), rng.gen_range(1i64..=8))
}

fn nonconstant_spectrum(rng: &mut StdRng, n: usize) -> Spectrum<Rat> {
    Spectrum::new((0..=n).map(|_| rat(rng)).collect()).unwrap()
}

fn record(results: &mut Vec<(usize, bool, String)>, id: usize, ok: bool, what: &str) {
    println!("{} criterion {:2}: {}", if ok { "PASS" } else { "FAIL" }, id, what);
    results.push((id, ok, what.to_string()));
}

fn spectrum_matches(
    build: impl Fn(usize) -> Triangular<Rat>,
    diag: impl Fn(usize) -> Rat + Copy,
    sizes: &[usize],
) -> bool {
    sizes.iter().all(|&n| {
        let x = build(n);
        let signed: Vec<Rat> = (0..=n)
            .map(|i| if i % 2 == 0 { diag(i) } else { -diag(i) })
            .collect();
        char_poly(&anti_product(&x)) == Polynomial::from_roots(&signed)
    })
}

#[test]
fn acceptance() {
    let mut results: Vec<(usize, bool, String)> = Vec::new();
    let mut rng = StdRng::seed_from_u64(0x0a17_317e);
    let ladder: Vec<usize> = (1..=20).chain([50]).collect();

    // 1: alternating harmonic spectrum of the row-constant matrix
    let ok = spectrum_matches(
        |n| Triangular::from_fn(n + 1, |i, _| ratio(1, i as i64 + 1)),
        |i| ratio(1, i as i64 + 1),
        &ladder,
    );
    record(&mut results, 1, ok, "harmonic anti-product spectrum, n up to 50");

    // 2: alternating dyadic spectrum of the midpoint Bernstein matrix
    let ok = spectrum_matches(
        |n| antitri::moments::bernstein_matrix(&ratio(1, 2), n),
        |i| ratio(1, 1i64 << i),
        &ladder,
    );
    record(&mut results, 2, ok, "dyadic anti-product spectrum, n up to 50");

    // 3: closed form of the conjugated anti-identity
    let ok = (0..=30).all(|n| {
        let pinv = pascal::<Rat>(n).as_matrix().triangular_inverse().unwrap();
        let direct = pinv.mul(&anti_identity(n)).mul(pascal::<Rat>(n).as_matrix());
        direct == conjugate_q::<Rat>(n)
    });
    record(&mut results, 3, ok, "conjugated anti-identity closed form, n up to 30");

    // 4: Bernstein conjugation gives the power diagonal
    let n = 20;
    let p = pascal::<Rat>(n);
    let pinv = p.as_matrix().triangular_inverse().unwrap();
    let ok = (0..20).all(|_| {
        let u = ratio::<Rat>(rng.gen_range(0i64..=9), rng.gen_range(1i64..=9));
        let conj = pinv
            .mul(antitri::moments::bernstein_matrix(&u, n).as_matrix())
            .mul(p.as_matrix());
        conj.is_diagonal() && {
            let mut pw: Rat = int(1);
            (0..=n).all(|i| {
                let hit = conj.get(i, i) == &pw;
                pw = pw.clone() * u.clone();
                hit
            })
        }
    });
    record(&mut results, 4, ok, "Bernstein conjugation diagonal, 20 random u at n = 20");

    // 5: mixtures are stochastic V_P members with the weak property
    let mut measures: Vec<Measure> = vec![
        Measure::Lebesgue,
        Measure::dirac(ratio(1, 2)).unwrap(),
    ];
    for t in [ratio::<Rat>(1, 2), int(1), int(2), int(3)] {
        measures.push(Measure::beta_symmetric(t).unwrap());
    }
    for _ in 0..10 {
        let count = rng.gen_range(1usize..=4);
        let mut atoms: Vec<(Rat, Rat)> = Vec::new();
        while atoms.len() < count {
            let u = ratio::<Rat>(rng.gen_range(0i64..=24), 24);
            if !atoms.iter().any(|(v, _)| v == &u) {
                atoms.push((u, int(rng.gen_range(1i64..=6))));
            }
        }
        let total: Rat = atoms.iter().fold(int(0), |a, (_, w)| a + w.clone());
        let atoms = atoms.into_iter().map(|(u, w)| (u, w / total.clone())).collect();
        measures.push(Measure::discrete(atoms).unwrap());
    }
    let ok = measures.iter().all(|mu| {
        let n = 8;
        let m = a_mu_matrix(mu, n);
        let stochastic = (0..=n).all(|i| {
            let mut sum: Rat = int(0);
            for j in 0..=i {
                if m.get(i, j) < &int(0) {
                    return false;
                }
                sum = sum + m.get(i, j).clone();
            }
            sum == int(1)
        });
        let interior_support = match mu {
            Measure::Discrete { atoms } => {
                atoms.iter().any(|(u, _)| u != &int(0) && u != &int(1))
            }
            _ => true,
        };
        let full_ok = if interior_support {
            antitri::eigenprop::full_adep_check(&m)
        } else {
            true
        };
        stochastic && vp_membership(&m) && weak_adep_check(&m) && full_ok
    });
    record(&mut results, 5, ok, "mixtures stochastic, V_P, weak (full off endpoints)");

    // 6: symbolic certificates
    let h1 = oracle::hk_symbolic(1);
    let h1_reduced = oracle::divide_by_leading_monomial(&h1, 1);
    let h1_ok = h1_reduced.as_ref().is_some_and(|r| {
        r.len() == 1 && r.get(&vec![0usize]).is_some_and(|c| c == &int(1) || c == &int(-1))
    });
    let h2 = oracle::hk_symbolic(2);
    let h2_ok = oracle::divide_by_leading_monomial(&h2, 2).is_some_and(|r| {
        let c0 = r.get(&vec![1usize, 0]);
        let c1 = r.get(&vec![0usize, 1]);
        r.len() == 2
            && matches!((c0, c1), (Some(a), Some(b))
                if (a == &int(1) || a == &int(-1)) && *b == -a.clone())
    });
    let top_ok = (1..=5).all(|k| {
        let exps: Vec<usize> = (0..k).map(|i| k - i).collect();
        let c = oracle::hk_monomial_coeff(k, &exps);
        c == int(1) || c == int(-1)
    });
    record(&mut results, 6, h1_ok && h2_ok && top_ok,
        "symbolic certificates: reduced forms and unit top coefficient");

    // 7: last-row uniqueness via the perturbation oracle
    let mut found = 0;
    let mut ok = true;
    while found < 10 {
        let n = rng.gen_range(1usize..=5);
        let lam = nonconstant_spectrum(&mut rng, n);
        if !en_membership(&lam).in_en {
            continue;
        }
        found += 1;
        let unique = oracle::weak_preserving_last_rows(&lam).is_empty();
        ok &= unique && uniqueness_rank_check(&lam);
    }
    record(&mut results, 7, ok, "last-row perturbation search finds only zero, 10 spectra");

    // 8: roundtrips
    let mut ok = true;
    for n in 1..=20 {
        let lam = nonconstant_spectrum(&mut rng, n);
        let x = pi_map(&lam);
        ok &= phi_map(&x) == lam;
        ok &= pi_map(&phi_map(&x)) == x;
    }
    for mu in &measures {
        let m = a_mu_matrix(mu, 8);
        ok &= (0..=8).all(|i| m.get(i, i) == &moment(mu, i));
    }
    record(&mut results, 8, ok, "conjugation and moment-diagonal roundtrips");

    // 9: the symmetric class
    let mut ok = true;
    for _ in 0..20 {
        let n = rng.gen_range(1usize..=12);
        // fill even entries freely, force odd entries by the half-sum rule
        let mut v: Vec<Rat> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            if m % 2 == 0 {
                v.push(rat(&mut rng));
            } else {
                let mut acc: Rat = int(0);
                for k in 0..m {
                    let term = binomial::<Rat>(m, k) * v[k].clone();
                    acc = if k % 2 == 0 { acc + term } else { acc - term };
                }
                v.push(acc / int::<Rat>(2));
            }
        }
        let lam = Spectrum::new(v.clone()).unwrap();
        ok &= d_condition_check(&lam);
        ok &= pi_map(&lam).is_row_reversal_symmetric();
        if n >= 1 {
            let mut broken = v;
            broken[1] = broken[1].clone() + int::<Rat>(1);
            let broken = Spectrum::new(broken).unwrap();
            ok &= !d_condition_check(&broken);
            ok &= !pi_map(&broken).is_row_reversal_symmetric();
        }
    }
    let base_points: Vec<Rat> = vec![
        int(0), ratio(1, 3), ratio(1, 4), ratio(1, 5), ratio(1, 6),
    ];
    for n in 0..=9usize {
        let needed = if n % 2 == 0 { (n + 2) / 2 - 1 } else { (n + 2) / 2 };
        ok &= symmetric_basis_check(n, &base_points[..needed]).unwrap();
    }
    record(&mut results, 9, ok, "odd-index condition tracks symmetry; basis rank matches");

    // 10: three-site spectra are real, floored at -1/2, detailed-balanced
    let mut ok = true;
    for _ in 0..20 {
        let weights: Vec<Rat> = std::iter::once(int(1))
            .chain((0..12).map(|_| ratio(rng.gen_range(1i64..=12), rng.gen_range(1i64..=8))))
            .collect();
        let nu = SiteDistribution::new(weights).unwrap();
        for n in 1..=12 {
            let p = char_poly(&rn_matrix(&nu, n).unwrap());
            let real = distinct_real_roots(&p).unwrap()
                == squarefree_part(&p).unwrap().degree().unwrap();
            let half = ratio::<Rat>(-1, 2);
            let below = sturm_count(&p, &Bound::NegInf, &Bound::Finite(half.clone())).unwrap()
                - usize::from(p.eval(&half) == int(0));
            ok &= real && below == 0 && detailed_balance_check(&nu, n).unwrap();
        }
    }
    record(&mut results, 10, ok, "three-site spectra real, floored, detailed-balanced");

    // 11: the extension trichotomy
    let mut ok = true;
    for s in [ratio::<Rat>(1, 2), int(1), ratio(3, 2), int(2)] {
        let g = extend_g(&int(1), &s, 40).unwrap();
        let want = if s == int(2) {
            JumpRate::alpha_id(int(1), 40).unwrap()
        } else {
            let t = s.clone() / (int::<Rat>(2) - s.clone());
            JumpRate::alpha_g_t(int(1), t, 40).unwrap()
        };
        ok &= g.values() == want.values();
    }
    for s in [ratio::<Rat>(5, 2), int(3), int(4)] {
        // first index where the closed-form denominator 2(i-1) - (i-2)s
        // stops being positive
        let expected = (3usize..)
            .find(|&i| {
                let denom = int::<Rat>(2 * (i as i64 - 1))
                    - int::<Rat>(i as i64 - 2) * s.clone();
                denom <= int(0)
            })
            .unwrap();
        ok &= extend_g(&int(1), &s, 40) == Err(Error::NoPositiveExtension(expected));
    }
    record(&mut results, 11, ok, "extension reproduces both families and certifies failure");

    // 12: classification with spectral bounds
    let geometric = SiteDistribution::geometric(&ratio(1, 2), 8).unwrap();
    let poisson = SiteDistribution::poisson_shape(&int(2), 8).unwrap();
    let g2 = JumpRate::alpha_g_t(int(1), int(2), 8).unwrap();
    let mut w: Vec<Rat> = vec![int(1)];
    for i in 1..=8usize {
        w.push(w[i - 1].clone() / (int::<Rat>(2) * g2.value(i).clone()));
    }
    let negbin = SiteDistribution::new(w).unwrap();
    let perturbed = SiteDistribution::new(vec![int(1), int(1), int(1), int(2)]).unwrap();
    let half = ratio::<Rat>(1, 2);
    let mut ok = nu_classification(&geometric).unwrap()
        == NuClass::NegativeBinomial { t: int(1), p: ratio(1, 2) };
    ok &= nu_classification(&poisson).unwrap() == NuClass::Poisson { lambda: int(2) };
    ok &= matches!(nu_classification(&negbin).unwrap(),
        NuClass::NegativeBinomial { t, .. } if t == int(2));
    ok &= nu_classification(&perturbed).unwrap() == NuClass::OutsideVP { witness: 3 };
    for (nu, sup) in [
        (&geometric, ratio::<Rat>(1, 3)),
        (&poisson, ratio(1, 4)),
        (&negbin, ratio(3, 10)),
    ] {
        let report = spectral_conditions(nu, 8).unwrap();
        ok &= report.sup_value == sup && report.sup_value < half && report.sup_bound_holds;
    }
    record(&mut results, 12, ok, "classification families and spectral suprema");

    // 13: golden suite, including the tamper control
    let report = antitri::repro::run(None, 8);
    let mut ok = report.all_passed && report.executed >= 25;
    let dir = std::env::temp_dir().join("antitri-acceptance-tamper");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(
        dir.join("t2.json"),
        r#"{"n":3,"rows":[["1","0","0"],["1/2","1/2","0"],["1/3","1/3","1/2"]]}"#,
    )
    .unwrap();
    let tampered = antitri::repro::run(Some(&dir), 8);
    ok &= !tampered.all_passed
        && tampered.results.iter().any(|r| {
            !r.passed && r.name == "TG spectrum is the alternating harmonic sequence"
        });
    std::fs::remove_dir_all(&dir).ok();
    record(&mut results, 13, ok, "golden suite passes; tampered fixture is caught");

    let failures: Vec<usize> = results
        .iter()
        .filter(|(_, ok, _)| !ok)
        .map(|(id, _, _)| *id)
        .collect();
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
