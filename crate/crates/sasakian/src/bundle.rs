//! Bundle files: a single JSON document carrying an algebra, its metric,
//! and whichever geometric attachments a task needs — contact data
//! (`phi`, `xi`, `eta`), a complex structure (`j`), reproducing or
//! potential 1-forms (`f`, `gamma`), and extension data (`k`, `h0`).
//! Exact-mode values serialize as `"p/q"` strings so golden files diff
//! cleanly; float-mode values serialize as JSON numbers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constructions::KahlerExactSeed;
use crate::curvature::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::forms::KForm;
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::normal_j::NormalJAlgebra;
use crate::scalar::{Mode, Scalar};
use crate::structures::{AlmostContactMetric, HermitianData};

pub const SCHEMA_VERSION: u32 = 1;

/// In-memory bundle: an algebra with a metric and optional attachments.
#[derive(Clone, Debug)]
pub struct Bundle {
    pub algebra: LieAlgebra,
    pub gram: Matrix,
    pub phi: Option<Matrix>,
    pub xi: Option<Vec<Scalar>>,
    pub eta: Option<Vec<Scalar>>,
    pub j: Option<Matrix>,
    pub f: Option<KForm>,
    pub gamma: Option<KForm>,
    pub k: Option<Scalar>,
    pub h0: Option<Vec<Scalar>>,
}

impl Bundle {
    /// A bare metric bundle.
    pub fn new(algebra: LieAlgebra, gram: Matrix) -> Bundle {
        Bundle {
            algebra,
            gram,
            phi: None,
            xi: None,
            eta: None,
            j: None,
            f: None,
            gamma: None,
            k: None,
            h0: None,
        }
    }

    /// Wrap an almost-contact metric structure (records `phi`, `xi`, `eta`).
    pub fn from_contact(s: &crate::structures::AlmostContactMetric) -> Bundle {
        let mut b = Bundle::new(s.metric().algebra().clone(), s.metric().gram().clone());
        b.phi = Some(s.phi().clone());
        b.xi = Some(s.xi().to_vec());
        b.eta = Some(s.eta().to_vec());
        b
    }

    /// Wrap Hermitian data (records `j`), optionally with a potential `f`.
    pub fn from_hermitian(h: &crate::structures::HermitianData, f: Option<KForm>) -> Bundle {
        let mut b = Bundle::new(h.algebra().clone(), h.metric().gram().clone());
        b.j = Some(h.j().clone());
        b.f = f;
        b
    }

    /// Wrap a builder seed (records `j`, `gamma`, `k`, `h0`).
    pub fn from_seed(seed: &crate::constructions::KahlerExactSeed) -> Bundle {
        let mut b = Bundle::from_hermitian(&seed.h1, None);
        b.gamma = Some(seed.gamma.clone());
        b.k = Some(seed.k.clone());
        b.h0 = Some(seed.h0.clone());
        b
    }

    pub fn mode(&self) -> Mode {
        self.algebra.mode()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The algebra with its inner product (validates positive
    /// definiteness).
    pub fn as_metric(&self) -> Result<MetricLieAlgebra> {
        MetricLieAlgebra::new(self.algebra.clone(), self.gram.clone())
    }

    /// The contact-metric view; needs `phi` and `xi` (`eta` defaults to
    /// the metric dual of `xi`).
    pub fn as_contact(&self) -> Result<AlmostContactMetric> {
        let metric = self.as_metric()?;
        let phi = self
            .phi
            .clone()
            .ok_or_else(|| Error::Bundle("this bundle carries no phi".into()))?;
        let xi = self
            .xi
            .clone()
            .ok_or_else(|| Error::Bundle("this bundle carries no xi".into()))?;
        match &self.eta {
            Some(eta) => AlmostContactMetric::new(metric, phi, xi, eta.clone()),
            None => AlmostContactMetric::from_phi_xi(metric, phi, xi),
        }
    }

    /// The Hermitian view; needs `j`.
    pub fn as_hermitian(&self) -> Result<HermitianData> {
        let metric = self.as_metric()?;
        let j = self
            .j
            .clone()
            .ok_or_else(|| Error::Bundle("this bundle carries no j".into()))?;
        HermitianData::new(metric, j)
    }

    /// The normal Hermitian view; needs `j` and `f`.
    pub fn as_normal_j(&self) -> Result<NormalJAlgebra> {
        let h = self.as_hermitian()?;
        let f = self
            .f
            .clone()
            .ok_or_else(|| Error::Bundle("this bundle carries no f".into()))?;
        NormalJAlgebra::new(h, f)
    }

    /// The builder-seed view; needs `j`, `gamma`, `k`, and `h0`.
    pub fn as_seed(&self) -> Result<KahlerExactSeed> {
        let h = self.as_hermitian()?;
        let gamma = self
            .gamma
            .clone()
            .ok_or_else(|| Error::Bundle("this bundle carries no gamma".into()))?;
        let k = self
            .k
            .clone()
            .ok_or_else(|| Error::Bundle("this bundle carries no k".into()))?;
        let h0 = self
            .h0
            .clone()
            .ok_or_else(|| Error::Bundle("this bundle carries no h0".into()))?;
        KahlerExactSeed::new(h, gamma, k, h0)
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = BundleDoc::from_bundle(self)?;
        serde_json::to_string_pretty(&doc)
            .map_err(|e| Error::Bundle(format!("serialization failed: {e}")))
    }

    pub fn from_json(text: &str) -> Result<Bundle> {
        let doc: BundleDoc = serde_json::from_str(text)
            .map_err(|e| Error::Bundle(format!("malformed bundle document: {e}")))?;
        doc.into_bundle()
    }
}

/// One serialized number: `"p/q"` text in exact mode, a JSON number in
/// float mode.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Text(String),
    Number(f64),
}

impl ScalarRepr {
    fn from_scalar(s: &Scalar) -> ScalarRepr {
        match s.mode() {
            Mode::Exact => ScalarRepr::Text(format!("{s}")),
            Mode::Float => ScalarRepr::Number(s.to_f64()),
        }
    }

    fn to_scalar(&self, mode: Mode) -> Result<Scalar> {
        match self {
            ScalarRepr::Text(t) => Scalar::parse(t, mode),
            ScalarRepr::Number(v) => match mode {
                Mode::Float => Ok(Scalar::from_f64(*v)),
                Mode::Exact => Err(Error::Bundle(format!(
                    "exact-mode bundles must write numbers as strings, found {v}"
                ))),
            },
        }
    }
}

fn vec_repr(v: &[Scalar]) -> Vec<ScalarRepr> {
    v.iter().map(ScalarRepr::from_scalar).collect()
}

fn vec_from_repr(v: &[ScalarRepr], mode: Mode, what: &str, n: usize) -> Result<Vec<Scalar>> {
    if v.len() != n {
        return Err(Error::Bundle(format!(
            "{what} has {} entries, expected {n}",
            v.len()
        )));
    }
    v.iter().map(|r| r.to_scalar(mode)).collect()
}

fn matrix_repr(m: &Matrix) -> Vec<Vec<ScalarRepr>> {
    (0..m.rows)
        .map(|r| (0..m.cols).map(|c| ScalarRepr::from_scalar(&m.get(r, c))).collect())
        .collect()
}

fn matrix_from_repr(
    rows: &[Vec<ScalarRepr>],
    mode: Mode,
    what: &str,
    n: usize,
) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Bundle(format!("{what} must be a {n}×{n} matrix")));
    }
    let data: Result<Vec<Vec<Scalar>>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_scalar(mode)).collect())
        .collect();
    Matrix::from_rows(data?, n, mode)
}

#[derive(Serialize, Deserialize)]
struct BundleDoc {
    schema_version: u32,
    mode: String,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    /// `[i, j, k, value]` with 1-based indices and `i < j`.
    constants: Vec<(usize, usize, usize, ScalarRepr)>,
    gram: Vec<Vec<ScalarRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phi: Option<Vec<Vec<ScalarRepr>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    xi: Option<Vec<ScalarRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    eta: Option<Vec<ScalarRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    j: Option<Vec<Vec<ScalarRepr>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    f: Option<Vec<ScalarRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gamma: Option<Vec<ScalarRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<ScalarRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h0: Option<Vec<ScalarRepr>>,
}

impl BundleDoc {
    fn from_bundle(b: &Bundle) -> Result<BundleDoc> {
        let mode = b.mode();
        let constants = b
            .algebra
            .iter_constants()
            .map(|(i, j, k, c)| (i + 1, j + 1, k + 1, ScalarRepr::from_scalar(c)))
            .collect();
        let labels = {
            let default = crate::lie::default_labels(b.dim());
            if b.algebra.labels() == default.as_slice() {
                None
            } else {
                Some(b.algebra.labels().to_vec())
            }
        };
        let f = match &b.f {
            Some(f) => Some(vec_repr(&f.to_covector()?)),
            None => None,
        };
        let gamma = match &b.gamma {
            Some(g) => Some(vec_repr(&g.to_covector()?)),
            None => None,
        };
        Ok(BundleDoc {
            schema_version: SCHEMA_VERSION,
            mode: match mode {
                Mode::Exact => "exact".into(),
                Mode::Float => "float".into(),
            },
            dim: b.dim(),
            labels,
            constants,
            gram: matrix_repr(&b.gram),
            phi: b.phi.as_ref().map(matrix_repr),
            xi: b.xi.as_ref().map(|v| vec_repr(v)),
            eta: b.eta.as_ref().map(|v| vec_repr(v)),
            j: b.j.as_ref().map(matrix_repr),
            f,
            gamma,
            k: b.k.as_ref().map(ScalarRepr::from_scalar),
            h0: b.h0.as_ref().map(|v| vec_repr(v)),
        })
    }

    fn into_bundle(self) -> Result<Bundle> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Bundle(format!(
                "unsupported schema version {}",
                self.schema_version
            )));
        }
        let mode = match self.mode.as_str() {
            "exact" => Mode::Exact,
            "float" => Mode::Float,
            other => {
                return Err(Error::Bundle(format!(
                    "mode must be \"exact\" or \"float\", found {other:?}"
                )))
            }
        };
        let n = self.dim;
        let mut entries = Vec::with_capacity(self.constants.len());
        for (i, j, k, v) in &self.constants {
            if *i == 0 || *j == 0 || *k == 0 || *i > n || *j > n || *k > n {
                return Err(Error::Bundle(format!(
                    "constant indices ({i}, {j}, {k}) out of range for dimension {n}"
                )));
            }
            if i >= j {
                return Err(Error::Bundle(format!(
                    "constant indices must satisfy i < j, found ({i}, {j})"
                )));
            }
            entries.push((i - 1, j - 1, k - 1, v.to_scalar(mode)?));
        }
        let algebra = LieAlgebra::new(n, self.labels, mode, &entries)?;
        let gram = matrix_from_repr(&self.gram, mode, "gram", n)?;
        let phi = self
            .phi
            .as_ref()
            .map(|m| matrix_from_repr(m, mode, "phi", n))
            .transpose()?;
        let xi = self
            .xi
            .as_ref()
            .map(|v| vec_from_repr(v, mode, "xi", n))
            .transpose()?;
        let eta = self
            .eta
            .as_ref()
            .map(|v| vec_from_repr(v, mode, "eta", n))
            .transpose()?;
        let j = self
            .j
            .as_ref()
            .map(|m| matrix_from_repr(m, mode, "j", n))
            .transpose()?;
        let f = self
            .f
            .as_ref()
            .map(|v| vec_from_repr(v, mode, "f", n))
            .transpose()?
            .map(|v| KForm::from_covector(&v, mode));
        let gamma = self
            .gamma
            .as_ref()
            .map(|v| vec_from_repr(v, mode, "gamma", n))
            .transpose()?
            .map(|v| KForm::from_covector(&v, mode));
        let k = self.k.as_ref().map(|r| r.to_scalar(mode)).transpose()?;
        let h0 = self
            .h0
            .as_ref()
            .map(|v| vec_from_repr(v, mode, "h0", n))
            .transpose()?;
        Ok(Bundle {
            algebra,
            gram,
            phi,
            xi,
            eta,
            j,
            f,
            gamma,
            k,
            h0,
        })
    }
}

/// Parse `name=value` parameter bindings (values are rationals or, in
/// float mode, decimals).
pub fn parse_params(specs: &[String], mode: Mode) -> Result<BTreeMap<String, Scalar>> {
    let mut out = BTreeMap::new();
    for spec in specs {
        let Some((name, value)) = spec.split_once('=') else {
            return Err(Error::BadParameter(format!(
                "parameter {spec:?} is not of the form name=value"
            )));
        };
        let v = Scalar::parse(value.trim(), mode)
            .map_err(|e| Error::BadParameter(format!("parameter {name}: {e}")))?;
        out.insert(name.trim().to_string(), v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_unit;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, Mode::Exact)
    }

    fn h5_bundle() -> Bundle {
        let l = LieAlgebra::new_validated(
            5,
            None,
            Mode::Exact,
            &[(0, 1, 4, s(2)), (2, 3, 4, s(2))],
        )
        .unwrap();
        let gram = Matrix::identity(5, Mode::Exact);
        let mut phi = Matrix::zeros(5, 5, Mode::Exact);
        phi.set(1, 0, s(1));
        phi.set(0, 1, s(-1));
        phi.set(3, 2, s(1));
        phi.set(2, 3, s(-1));
        let xi = vec_unit(5, 4, Mode::Exact);
        let eta = vec_unit(5, 4, Mode::Exact);
        let mut b = Bundle::new(l, gram);
        b.phi = Some(phi);
        b.xi = Some(xi);
        b.eta = Some(eta);
        b
    }

    #[test]
    fn exact_roundtrip_is_bit_exact() {
        let b = h5_bundle();
        let json = b.to_json().unwrap();
        let back = Bundle::from_json(&json).unwrap();
        assert_eq!(
            b.algebra.iter_constants().collect::<Vec<_>>(),
            back.algebra.iter_constants().collect::<Vec<_>>()
        );
        assert!(b.gram.approx_eq(&back.gram));
        assert!(b.phi.as_ref().unwrap().approx_eq(back.phi.as_ref().unwrap()));
        assert_eq!(b.xi, back.xi);
        assert_eq!(b.eta, back.eta);
        // the contact view reconstructs and validates
        let s = back.as_contact().unwrap();
        assert!(crate::structures::check_sasakian(&s).ok());
    }

    #[test]
    fn exact_values_serialize_as_strings() {
        let mut b = h5_bundle();
        b.k = Some(Scalar::ratio(-3, 7, Mode::Exact));
        let json = b.to_json().unwrap();
        assert!(json.contains("\"-3/7\""), "{json}");
        assert!(json.contains("\"schema_version\": 1"));
        let back = Bundle::from_json(&json).unwrap();
        assert_eq!(back.k, Some(Scalar::ratio(-3, 7, Mode::Exact)));
    }

    #[test]
    fn float_bundles_use_numbers() {
        let l = LieAlgebra::new(
            2,
            None,
            Mode::Float,
            &[(0, 1, 1, Scalar::from_f64(0.5))],
        )
        .unwrap();
        let b = Bundle::new(l, Matrix::identity(2, Mode::Float));
        let json = b.to_json().unwrap();
        assert!(json.contains("0.5"), "{json}");
        let back = Bundle::from_json(&json).unwrap();
        assert_eq!(back.mode(), Mode::Float);
        let c = back.algebra.bracket_basis(0, 1);
        assert_eq!(c[1], Scalar::from_f64(0.5));
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(matches!(
            Bundle::from_json("{"),
            Err(Error::Bundle(_))
        ));
        // wrong schema version
        let b = h5_bundle();
        let json = b.to_json().unwrap().replace(
            "\"schema_version\": 1",
            "\"schema_version\": 99",
        );
        assert!(matches!(Bundle::from_json(&json), Err(Error::Bundle(_))));
        // i >= j in constants
        let json = r#"{"schema_version":1,"mode":"exact","dim":2,
            "constants":[[2,1,2,"1"]],
            "gram":[["1","0"],["0","1"]]}"#;
        match Bundle::from_json(json) {
            Err(Error::Bundle(msg)) => assert!(msg.contains("i < j"), "{msg}"),
            other => panic!("expected a rejection for i >= j, got {other:?}"),
        }
        // a JSON number inside an exact bundle
        let json = b.to_json().unwrap().replace("\"2\"", "2");
        assert!(matches!(Bundle::from_json(&json), Err(Error::Bundle(_))));
    }

    #[test]
    fn seed_fields_roundtrip() {
        // flat ℝ² base with γ = −2(e² ), k = 1, H₀ = 0
        let l = LieAlgebra::abelian(2, Mode::Exact);
        let mut b = Bundle::new(l, Matrix::identity(2, Mode::Exact));
        let mut jm = Matrix::zeros(2, 2, Mode::Exact);
        jm.set(1, 0, s(1));
        jm.set(0, 1, s(-1));
        b.j = Some(jm);
        b.gamma = Some(KForm::from_covector(&[s(0), s(-2)], Mode::Exact));
        b.k = Some(s(1));
        b.h0 = Some(vec![s(0), s(0)]);
        let json = b.to_json().unwrap();
        let back = Bundle::from_json(&json).unwrap();
        let seed = back.as_seed().unwrap();
        assert_eq!(seed.k, s(1));
        let missing = Bundle::new(
            LieAlgebra::abelian(2, Mode::Exact),
            Matrix::identity(2, Mode::Exact),
        );
        assert!(matches!(missing.as_seed(), Err(Error::Bundle(_))));
    }

    #[test]
    fn parse_params_binds_names() {
        let m = parse_params(
            &["a=2".to_string(), "b=-3/4".to_string()],
            Mode::Exact,
        )
        .unwrap();
        assert_eq!(m["a"], s(2));
        assert_eq!(m["b"], Scalar::ratio(-3, 4, Mode::Exact));
        assert!(parse_params(&["oops".to_string()], Mode::Exact).is_err());
    }
}
