//! JSON documents for rationals, series, structure constants, action
//! constants, extension coefficients and matrices.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use jtwist_core::inhom::ActionConstants;
use jtwist_core::liealg::LieAlgebraData;
use jtwist_core::rep::SeriesMatrix;
use jtwist_core::scalars::{Rational, XiSeries};
use jtwist_core::twist::{ExtensionCoefficients, FactorCoefficients};

/// `"p/q"`, or `"p"` when `q = 1`.
pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.parse::<Rational>().map_err(|e| anyhow::anyhow!("{e}"))
}

/// Coefficients of `ξ^0 … ξ^K`.
pub fn series_json(s: &XiSeries) -> Vec<String> {
    s.coeffs().iter().map(rational_str).collect()
}

pub fn parse_series(v: &[String]) -> Result<XiSeries> {
    if v.is_empty() {
        bail!("a series needs at least the ξ^0 coefficient");
    }
    let coeffs = v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
    let order = coeffs.len() - 1;
    Ok(XiSeries::from_coeffs(coeffs, order))
}

type Cube = Vec<Vec<Vec<String>>>;

fn cube_out(d: usize, f: impl Fn(usize, usize, usize) -> Rational) -> Cube {
    (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| rational_str(&f(i, j, k))).collect()).collect()).collect()
}

fn cube_in(c: &Cube) -> Result<Vec<Vec<Vec<Rational>>>> {
    c.iter()
        .map(|a| a.iter().map(|b| b.iter().map(|s| parse_rational(s)).collect()).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureConstantsDoc {
    pub dim: usize,
    pub names: Vec<String>,
    pub c: Cube,
}

impl StructureConstantsDoc {
    pub fn from_algebra(g: &LieAlgebraData) -> Self {
        StructureConstantsDoc { dim: g.dim(), names: g.names().to_vec(), c: cube_out(g.dim(), |i, j, k| g.c(i, j, k).clone()) }
    }

    pub fn to_algebra(&self) -> Result<LieAlgebraData> {
        if self.names.len() != self.dim {
            bail!("expected {} names, found {}", self.dim, self.names.len());
        }
        Ok(LieAlgebraData::new(self.names.clone(), cube_in(&self.c)?)?)
    }
}

/// `{ "dim": d, "L": [[[…]]] }` with `L[μ][ν][σ] = L^σ_{μν}`, and an
/// optional prescribed bracket `"C"` in the same layout.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ActionDoc {
    pub dim: usize,
    #[serde(rename = "L")]
    pub l: Cube,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Cube>,
}

impl ActionDoc {
    pub fn from_action(a: &ActionConstants) -> Self {
        let d = a.dim();
        let c = a.has_prescribed_bracket().then(|| cube_out(d, |i, j, k| a.c(i, j, k)));
        ActionDoc { dim: d, l: cube_out(d, |i, j, k| a.l(i, j, k).clone()), c }
    }

    pub fn to_action(&self) -> Result<ActionConstants> {
        let a = ActionConstants::new(self.dim, &cube_in(&self.l)?)?;
        match &self.c {
            Some(c) => Ok(a.with_bracket(&cube_in(c)?)?),
            None => Ok(a),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub a_first: Vec<String>,
    pub a_last: Vec<String>,
    pub b_first: Vec<String>,
    pub b_last: Vec<String>,
}

/// Extension coefficients; list entry `k − 2` belongs to `E_1k` / `E_kN`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoefficientsDoc {
    #[serde(default = "default_true")]
    pub xi_normalized: bool,
    pub factors: Vec<FactorDoc>,
}

fn default_true() -> bool {
    true
}

fn strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational_str).collect()
}

fn rats(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

impl CoefficientsDoc {
    pub fn from_coefficients(c: &ExtensionCoefficients) -> Self {
        CoefficientsDoc {
            xi_normalized: c.xi_normalized,
            factors: c
                .factors
                .iter()
                .map(|f| FactorDoc {
                    a_first: strs(&f.a_first),
                    a_last: strs(&f.a_last),
                    b_first: strs(&f.b_first),
                    b_last: strs(&f.b_last),
                })
                .collect(),
        }
    }

    pub fn to_coefficients(&self) -> Result<ExtensionCoefficients> {
        let factors = self
            .factors
            .iter()
            .map(|f| {
                Ok(FactorCoefficients {
                    a_first: rats(&f.a_first)?,
                    a_last: rats(&f.a_last)?,
                    b_first: rats(&f.b_first)?,
                    b_last: rats(&f.b_last)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ExtensionCoefficients { factors, xi_normalized: self.xi_normalized })
    }
}

/// A square matrix with ξ-polynomial entries.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub size: usize,
    pub order: usize,
    pub entries: Vec<Vec<Vec<String>>>,
}

impl MatrixDoc {
    pub fn from_matrix(m: &SeriesMatrix) -> Self {
        let n = m.size();
        MatrixDoc {
            size: n,
            order: m.order(),
            entries: (0..n).map(|i| (0..n).map(|j| series_json(m.get(i, j))).collect()).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<SeriesMatrix> {
        let mut m = SeriesMatrix::zero(self.size, self.order);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let s = parse_series(e)?;
                if s.order() != self.order {
                    bail!("entry ({i}, {j}) has {} coefficients, expected {}", e.len(), self.order + 1);
                }
                m.set(i, j, s);
            }
        }
        Ok(m)
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use jtwist_core::liealg::make_borel_restricted;

    #[test]
    fn rationals_and_series() {
        assert_eq!(rational_str(&Rational::new(-3, 6)), "-1/2");
        assert_eq!(rational_str(&Rational::from_integer(4)), "4");
        let s = parse_series(&["1".into(), "0".into(), "-2/3".into()]).unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(series_json(&s), vec!["1", "0", "-2/3"]);
        assert!(parse_rational("1/0").is_err());
        assert!(parse_series(&[]).is_err());
    }

    #[test]
    fn structure_constants_round_trip() {
        let g = make_borel_restricted(3).unwrap();
        let doc = StructureConstantsDoc::from_algebra(&g);
        let text = serde_json::to_string(&doc).unwrap();
        let back: StructureConstantsDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_algebra().unwrap().constants(), g.constants());
    }

    #[test]
    fn action_round_trip() {
        for a in [ActionConstants::seed(Rational::from_integer(2)), ActionConstants::borel_split(4).unwrap()] {
            let text = serde_json::to_string(&ActionDoc::from_action(&a)).unwrap();
            let back: ActionDoc = serde_json::from_str(&text).unwrap();
            assert_eq!(back.to_action().unwrap(), a);
        }
        let seed: ActionDoc = serde_json::from_str(r#"{"dim": 1, "L": [[["2"]]]}"#).unwrap();
        assert_eq!(seed.to_action().unwrap(), ActionConstants::seed(Rational::from_integer(2)));
    }

    #[test]
    fn coefficients_round_trip() {
        let c = ExtensionCoefficients::canonical_multi(4);
        let text = serde_json::to_string(&CoefficientsDoc::from_coefficients(&c)).unwrap();
        let back: CoefficientsDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_coefficients().unwrap(), c);
    }

    #[test]
    fn matrix_round_trip() {
        let m = jtwist_core::rep::r_matrix(2, 3).unwrap();
        let doc = MatrixDoc::from_matrix(&m);
        assert_eq!(doc.entries.len(), 4);
        assert_eq!(doc.to_matrix().unwrap(), m);
    }
}
