//! JSON and CSV interchange: rationals as "p/q" text (the denominator is
//! omitted when it is 1), matrices as row lists, plus report serialization
//! for the classification and spectral checks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Triangular};
use crate::moments::Measure;
use crate::particle::{NuClass, SiteDistribution, SpectralReport};
use crate::pascal::Spectrum;
use crate::poly::Polynomial;
use crate::scalar::{parse_rat, rat_to_string, Rat};

/// Matrix wire format: {"n": dimension, "rows": [["p/q", ...], ...]}.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

/// Polynomial wire format: ascending coefficients.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

/// Measure wire format; `atoms` only for "discrete", `t` only for "beta".
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MeasureJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub atoms: Option<Vec<(String, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
}

/// Site-distribution wire format: {"weights": ["p/q", ...]}.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SiteJson {
    pub weights: Vec<String>,
}

/// Classification wire format with family tag and parameters.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassificationJson {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
}

/// Spectral-conditions wire format.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SpectralJson {
    pub checked_n: usize,
    pub sup_value: String,
    pub sup_bound_holds: bool,
    pub inf_even_g_positive: bool,
    pub min_eigenvalue_bound_holds: bool,
    pub attained_at: Vec<usize>,
}

fn parse_row(row: &[String]) -> Result<Vec<Rat>> {
    row.iter().map(|s| parse_rat(s)).collect()
}

pub fn matrix_to_json(m: &Matrix<Rat>) -> MatrixJson {
    MatrixJson {
        n: m.dim(),
        rows: m
            .rows()
            .map(|r| r.iter().map(rat_to_string).collect())
            .collect(),
    }
}

pub fn matrix_from_json(j: &MatrixJson) -> Result<Matrix<Rat>> {
    if j.rows.len() != j.n {
        return Err(Error::Parse(format!(
            "declared n = {} but {} rows given",
            j.n,
            j.rows.len()
        )));
    }
    Matrix::from_rows(j.rows.iter().map(|r| parse_row(r)).collect::<Result<_>>()?)
}

pub fn triangular_from_json(j: &MatrixJson) -> Result<Triangular<Rat>> {
    Triangular::new(matrix_from_json(j)?)
}

pub fn poly_to_json(p: &Polynomial<Rat>) -> PolyJson {
    PolyJson {
        coeffs: p.coeffs().iter().map(rat_to_string).collect(),
    }
}

pub fn poly_from_json(j: &PolyJson) -> Result<Polynomial<Rat>> {
    Ok(Polynomial::new(parse_row(&j.coeffs)?))
}

pub fn measure_to_json(mu: &Measure) -> MeasureJson {
    match mu {
        Measure::Discrete { atoms } => MeasureJson {
            kind: "discrete".into(),
            atoms: Some(
                atoms
                    .iter()
                    .map(|(u, w)| (rat_to_string(u), rat_to_string(w)))
                    .collect(),
            ),
            t: None,
        },
        Measure::Lebesgue => MeasureJson {
            kind: "lebesgue".into(),
            atoms: None,
            t: None,
        },
        Measure::BetaSymmetric { t } => MeasureJson {
            kind: "beta".into(),
            atoms: None,
            t: Some(rat_to_string(t)),
        },
    }
}

pub fn measure_from_json(j: &MeasureJson) -> Result<Measure> {
    match j.kind.as_str() {
        "discrete" => {
            let atoms = j
                .atoms
                .as_ref()
                .ok_or_else(|| Error::Parse("discrete measure needs atoms".into()))?;
            Measure::discrete(
                atoms
                    .iter()
                    .map(|(u, w)| Ok((parse_rat(u)?, parse_rat(w)?)))
                    .collect::<Result<_>>()?,
            )
        }
        "lebesgue" => Ok(Measure::Lebesgue),
        "beta" => {
            let t = j
                .t
                .as_ref()
                .ok_or_else(|| Error::Parse("beta measure needs t".into()))?;
            Measure::beta_symmetric(parse_rat(t)?)
        }
        other => Err(Error::Parse(format!("unknown measure kind {other:?}"))),
    }
}

pub fn site_to_json(nu: &SiteDistribution) -> SiteJson {
    SiteJson {
        weights: nu.weights().iter().map(rat_to_string).collect(),
    }
}

pub fn site_from_json(j: &SiteJson) -> Result<SiteDistribution> {
    SiteDistribution::new(parse_row(&j.weights)?)
}

pub fn classification_to_json(c: &NuClass) -> ClassificationJson {
    let empty = ClassificationJson {
        family: String::new(),
        t: None,
        p: None,
        lambda: None,
        witness: None,
    };
    match c {
        NuClass::NegativeBinomial { t, p } => ClassificationJson {
            family: "negative_binomial".into(),
            t: Some(rat_to_string(t)),
            p: Some(rat_to_string(p)),
            ..empty
        },
        NuClass::Poisson { lambda } => ClassificationJson {
            family: "poisson".into(),
            lambda: Some(rat_to_string(lambda)),
            ..empty
        },
        NuClass::OutsideVP { witness } => ClassificationJson {
            family: "outside_V_P".into(),
            witness: Some(*witness),
            ..empty
        },
    }
}

pub fn spectral_to_json(r: &SpectralReport) -> SpectralJson {
    SpectralJson {
        checked_n: r.checked_n,
        sup_value: rat_to_string(&r.sup_value),
        sup_bound_holds: r.sup_bound_holds,
        inf_even_g_positive: r.inf_even_g_positive,
        min_eigenvalue_bound_holds: r.min_eigenvalue_bound_holds,
        attained_at: r.attained_at.clone(),
    }
}

/// Comma-separated rationals, e.g. "1,1/2,1/3".
pub fn parse_rat_list(text: &str) -> Result<Vec<Rat>> {
    text.split(',').map(|s| parse_rat(s.trim())).collect()
}

pub fn spectrum_from_list(text: &str) -> Result<Spectrum<Rat>> {
    Spectrum::new(parse_rat_list(text)?)
}

/// CSV rendering: one line per row, "p/q" fields, trailing newline.
pub fn matrix_to_csv(m: &Matrix<Rat>) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let fields: Vec<String> = row.iter().map(rat_to_string).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn poly_to_csv(p: &Polynomial<Rat>) -> String {
    let fields: Vec<String> = p.coeffs().iter().map(rat_to_string).collect();
    format!("{}\n", fields.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pascal::pi_map;
    use crate::scalar::{int, ratio};

    #[test]
    fn matrix_roundtrip() {
        let lam = Spectrum::new(vec![int(1), ratio(1, 2), ratio(1, 4)]).unwrap();
        let m = pi_map(&lam);
        let j = matrix_to_json(m.as_matrix());
        assert_eq!(j.n, 3);
        assert_eq!(j.rows[1], vec!["1/2", "1/2", "0"]);
        let text = serde_json::to_string(&j).unwrap();
        let back: MatrixJson = serde_json::from_str(&text).unwrap();
        assert_eq!(triangular_from_json(&back).unwrap(), m);
    }

    #[test]
    fn matrix_json_validation() {
        let bad = MatrixJson {
            n: 3,
            rows: vec![vec!["1".into()]],
        };
        assert!(matrix_from_json(&bad).is_err());
        let unparsable = MatrixJson {
            n: 1,
            rows: vec![vec!["x".into()]],
        };
        assert!(matrix_from_json(&unparsable).is_err());
    }

    #[test]
    fn measure_roundtrip() {
        let mu = Measure::discrete(vec![(ratio(1, 3), ratio(1, 2)), (int(1), ratio(1, 2))])
            .unwrap();
        for m in [&mu, &Measure::Lebesgue, &Measure::beta_symmetric(ratio(3, 2)).unwrap()] {
            let j = measure_to_json(m);
            assert_eq!(&measure_from_json(&j).unwrap(), m);
        }
        assert_eq!(measure_to_json(&Measure::Lebesgue).kind, "lebesgue");
        let bad = MeasureJson {
            kind: "gaussian".into(),
            atoms: None,
            t: None,
        };
        assert!(measure_from_json(&bad).is_err());
    }

    #[test]
    fn site_and_lists() {
        let nu = SiteDistribution::new(vec![int(1), ratio(2, 3), ratio(4, 9)]).unwrap();
        let j = site_to_json(&nu);
        assert_eq!(j.weights, vec!["1", "2/3", "4/9"]);
        assert_eq!(site_from_json(&j).unwrap(), nu);
        assert_eq!(
            parse_rat_list("1, 1/2 ,1/3").unwrap(),
            vec![int(1), ratio(1, 2), ratio(1, 3)]
        );
        assert!(parse_rat_list("1,,2").is_err());
    }

    #[test]
    fn csv_format() {
        let lam = Spectrum::new(vec![int(1), ratio(1, 2)]).unwrap();
        let m = pi_map(&lam);
        assert_eq!(matrix_to_csv(m.as_matrix()), "1,0\n1/2,1/2\n");
        let p = Polynomial::new(vec![ratio::<Rat>(-1, 2), int(0), int(1)]);
        assert_eq!(poly_to_csv(&p), "-1/2,0,1\n");
    }

    #[test]
    fn classification_json() {
        let c = NuClass::NegativeBinomial {
            t: int(1),
            p: ratio(1, 3),
        };
        let j = classification_to_json(&c);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(
            text,
            r#"{"family":"negative_binomial","t":"1","p":"1/3"}"#
        );
        let out = classification_to_json(&NuClass::OutsideVP { witness: 3 });
        assert_eq!(
            serde_json::to_string(&out).unwrap(),
            r#"{"family":"outside_V_P","witness":3}"#
        );
    }
}
