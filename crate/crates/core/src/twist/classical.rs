use alloc::format;
use alloc::string::String;

use super::hopf::universal_r;
use crate::error::{Error, Result};
use crate::liealg::classical::{LieTensor2, WedgeElement};
use crate::scalars::XiSeries;
use crate::uea::{embed_12, embed_13, embed_23, Enveloping, Monomial, Tensor2, Tensor3};

/// Reads a two-leg element whose legs are all of degree one as a tensor
/// over the Lie algebra.
pub fn lie_tensor(env: &Enveloping, t: &Tensor2) -> Result<LieTensor2> {
    let mut out = LieTensor2::zero(env.dim(), t.order());
    for ([a, b], c) in t.iter() {
        if a.degree() != 1 || b.degree() != 1 {
            let mut w = String::new();
            let _ = a.render(env.names(), &mut w);
            w.push_str(" ⊗ ");
            let _ = b.render(env.names(), &mut w);
            return Err(Error::Inconsistent(format!("term {} is not linear in both legs", w)));
        }
        out.add(a.first_index().unwrap(), b.first_index().unwrap(), c);
    }
    Ok(out)
}

/// The ξ-coefficient of `R = F₂₁ F⁻¹` as a wedge.
pub fn classical_r(env: &Enveloping, f: &Tensor2) -> Result<WedgeElement> {
    let r = universal_r(env, f)?;
    let mut first = Tensor2::zero(env.dim(), 0);
    for (key, c) in r.xi_coefficient(1) {
        first.add_term(key, XiSeries::constant(c, 0));
    }
    let t = lie_tensor(env, &first)?;
    WedgeElement::from_tensor(&t).map_err(|_| Error::Inconsistent(String::from("first-order part of R is not antisymmetric")))
}

/// The classical Yang–Baxter residual computed in the enveloping algebra:
/// `[r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]`.
pub fn cybe_residual_uea(env: &Enveloping, r: &Tensor2) -> Tensor3 {
    let (r12, r13, r23) = (embed_12(r), embed_13(r), embed_23(r));
    let mut out = env.commutator(&r12, &r13);
    out = &out + &env.commutator(&r12, &r23);
    &out + &env.commutator(&r13, &r23)
}

/// Lifts a Lie tensor into the enveloping algebra.
pub fn lie_tensor_to_uea(env: &Enveloping, t: &LieTensor2) -> Tensor2 {
    let mut out = Tensor2::zero(env.dim(), t.order());
    for (i, j, c) in t.entries() {
        out.add_term(
            [Monomial::generator(env.dim(), i), Monomial::generator(env.dim(), j)],
            c.clone(),
        );
    }
    out
}
