//! Documents written by `jtwist emit`.

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;

use jtwist_core::rep::export_r_matrix;
use jtwist_core::twist::{classical_r, Realization, TwistSpec};
use jtwist_core::uea::Tensor2;

use crate::config::Format;
use crate::format::{rational_str, series_json, MatrixDoc};
use crate::suites::Params;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EmitObject {
    /// `F₂₁F⁻¹` in the fundamental representation, an `N² × N²` matrix.
    RMatrix,
    /// The twisting element `F`.
    Twist,
    /// The first-order part of `F₂₁F⁻¹`.
    ClassicalR,
}

#[derive(Serialize)]
struct TermDoc {
    /// PBW exponents per leg, in basis order.
    legs: [Vec<u8>; 2],
    coeff: Vec<String>,
}

#[derive(Serialize)]
struct TwistDoc {
    #[serde(rename = "N")]
    n: usize,
    #[serde(rename = "K")]
    k: usize,
    variant: &'static str,
    basis: Vec<String>,
    terms: Vec<TermDoc>,
}

#[derive(Serialize)]
struct WedgeTermDoc {
    left: String,
    right: String,
    coeff: String,
}

#[derive(Serialize)]
struct WedgeDoc {
    #[serde(rename = "N")]
    n: usize,
    variant: &'static str,
    basis: Vec<String>,
    terms: Vec<WedgeTermDoc>,
}

fn terms(f: &Tensor2) -> Vec<TermDoc> {
    f.sorted_terms()
        .into_iter()
        .map(|(key, c)| TermDoc {
            legs: [key[0].exponents().to_vec(), key[1].exponents().to_vec()],
            coeff: series_json(c),
        })
        .collect()
}

/// Renders the requested object. The R-matrix is the canonical multi-factor
/// one and is only exported once it has stabilized at order `K`.
pub fn emit(object: EmitObject, p: &Params, format: Format) -> Result<String> {
    let text = match object {
        EmitObject::RMatrix => {
            let m = export_r_matrix(p.n, p.order)?;
            match format {
                Format::Json => serde_json::to_string_pretty(&MatrixDoc::from_matrix(&m))?,
                Format::Text => m.render(),
            }
        }
        EmitObject::Twist => {
            let r = Realization::new(&p.spec())?;
            let f = r.twist()?;
            let names = r.env.names();
            match format {
                Format::Json => serde_json::to_string_pretty(&TwistDoc {
                    n: p.n,
                    k: p.order,
                    variant: p.variant.name(),
                    basis: names.to_vec(),
                    terms: terms(&f),
                })?,
                Format::Text => f.render(names),
            }
        }
        EmitObject::ClassicalR => {
            // the first-order part only needs F mod ξ²
            let r = Realization::new(&TwistSpec { order: 1, ..p.spec() })?;
            let w = classical_r(&r.env, &r.twist()?)?;
            let names = r.env.names();
            match format {
                Format::Json => serde_json::to_string_pretty(&WedgeDoc {
                    n: p.n,
                    variant: p.variant.name(),
                    basis: names.to_vec(),
                    terms: w
                        .terms()
                        .map(|(&(i, j), c)| WedgeTermDoc {
                            left: names[i].clone(),
                            right: names[j].clone(),
                            coeff: rational_str(c),
                        })
                        .collect(),
                })?,
                Format::Text => w.render(names),
            }
        }
    };
    Ok(text)
}
