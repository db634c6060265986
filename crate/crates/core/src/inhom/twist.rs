//! The cocycle twist `F = exp(H_ν ⊗ ψ^ν(X))` and the identities behind it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::series::{phi_psi, CocycleSeries};
use super::{borel_identification, build_semidirect, ActionConstants};
use crate::error::Result;
use crate::scalars::{Rational, XiSeries};
use crate::twist::{canonical_realization, twist_equation_residual, Coproduct};
use crate::uea::{on_leg1, on_leg2, outer, Enveloping, Monomial, Tensor, Tensor2, UeaElement};

/// The twist of an action together with the pieces it is built from. The
/// abelian generators enter as `x^ν = ξ X^ν`.
pub struct CocycleTwist {
    pub action: ActionConstants,
    pub env: Enveloping,
    pub h: Vec<UeaElement>,
    pub x: Vec<UeaElement>,
    /// `X̃^ν = ψ^ν(x)`
    pub x_tilde: Vec<UeaElement>,
    pub phi: CocycleSeries,
    pub psi: CocycleSeries,
    pub f: Tensor2,
}

pub fn build_cocycle_twist(a: &ActionConstants, order: usize) -> Result<CocycleTwist> {
    let g = build_semidirect(a)?;
    let d = a.dim();
    let env = Enveloping::new(g, order);
    let h: Vec<UeaElement> = (0..d).map(|i| env.generator(i)).collect();
    let x: Vec<UeaElement> = (0..d)
        .map(|i| UeaElement::monomial(Monomial::generator(2 * d, d + i), XiSeries::xi(order)))
        .collect();
    let (phi, psi) = phi_psi(a, order);
    let x_tilde = psi.evaluate(&env, &x);
    let mut exponent: Tensor2 = env.zero();
    for (hn, xt) in h.iter().zip(&x_tilde) {
        exponent = &exponent + &outer(hn, xt);
    }
    let f = env.exp_positive(&exponent)?;
    Ok(CocycleTwist { action: a.clone(), env, h, x, x_tilde, phi, psi, f })
}

/// `exp(s·L(v))` with `L(v)^μ_ν = L^μ_{σν} v^σ`, for ξ-positive pairwise
/// commuting `v`.
fn action_exp<const R: usize>(env: &Enveloping, a: &ActionConstants, v: &[Tensor<R>], s: i64) -> Vec<Vec<Tensor<R>>> {
    let d = a.dim();
    let s = Rational::from_integer(s);
    let m: Vec<Vec<Tensor<R>>> = (0..d)
        .map(|mu| {
            (0..d)
                .map(|nu| {
                    let mut e: Tensor<R> = env.zero();
                    for (sig, vs) in v.iter().enumerate() {
                        e.add_scaled(vs, &(a.l(sig, nu, mu) * &s));
                    }
                    e
                })
                .collect()
        })
        .collect();
    let identity = |i: usize, j: usize| if i == j { env.one() } else { env.zero() };
    let mut out: Vec<Vec<Tensor<R>>> = (0..d).map(|i| (0..d).map(|j| identity(i, j)).collect()).collect();
    let mut power: Vec<Vec<Tensor<R>>> = out.clone();
    for k in 1..=env.order() as u32 {
        let next: Vec<Vec<Tensor<R>>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut e: Tensor<R> = env.zero();
                        for l in 0..d {
                            e = &e + &env.mul(&power[i][l], &m[l][j]);
                        }
                        e
                    })
                    .collect()
            })
            .collect();
        power = next;
        if power.iter().flatten().all(|e| e.is_zero()) {
            break;
        }
        let w = Rational::inv_factorial(k);
        for i in 0..d {
            for j in 0..d {
                out[i][j].add_scaled(&power[i][j], &w);
            }
        }
    }
    out
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    pub witness: Option<String>,
}

impl IdentityCheck {
    fn from_residual<const R: usize>(name: String, residual: &Tensor<R>, names: &[String]) -> Self {
        IdentityCheck { name, holds: residual.is_zero(), witness: residual.witness(names) }
    }
}

/// The twist equation and the coproduct, cocycle and antipode identities of
/// the cocycle twist, each checked mod `ξ^{K+1}`.
pub fn check_cocycle_identities(a: &ActionConstants, order: usize) -> Result<Vec<IdentityCheck>> {
    let t = build_cocycle_twist(a, order)?;
    let env = &t.env;
    let names = env.names().to_vec();
    let d = a.dim();
    let mut out = Vec::new();

    let id = t.phi.compose(&t.psi);
    out.push(IdentityCheck {
        name: String::from("φ∘ψ = id"),
        holds: id.is_identity() && t.psi.compose(&t.phi).is_identity(),
        witness: None,
    });
    let te = twist_equation_residual(env, &t.f, &Coproduct::Classical);
    out.push(IdentityCheck::from_residual(String::from("twist equation"), &te, &names));

    let cop = Coproduct::twisted(env, &t.f)?;
    let leg1: Vec<Tensor2> = t.x_tilde.iter().map(on_leg1).collect();
    let leg2: Vec<Tensor2> = t.x_tilde.iter().map(on_leg2).collect();
    let e_minus2 = action_exp(env, a, &leg2, -1);
    let e_plus2 = action_exp(env, a, &leg2, 1);
    for mu in 0..d {
        let lhs = cop.apply(env, &t.x[mu]);
        let mut rhs = on_leg2(&t.x[mu]);
        for nu in 0..d {
            rhs = &rhs + &env.mul(&on_leg1(&t.x[nu]), &e_minus2[mu][nu]);
        }
        out.push(IdentityCheck::from_residual(
            format!("Δ_F(x{0}) = x^ν ⊗ e^(−L(X̃))^{0}_ν + 1 ⊗ x{0}", mu + 1),
            &(&lhs - &rhs),
            &names,
        ));
    }

    let delta_xt: Vec<Tensor2> = t.x_tilde.iter().map(|e| cop.apply(env, e)).collect();
    let lhs = t.phi.evaluate(env, &delta_xt);
    let phi1 = t.phi.evaluate(env, &leg1);
    let phi2 = t.phi.evaluate(env, &leg2);
    for mu in 0..d {
        let mut rhs = phi2[mu].clone();
        for nu in 0..d {
            rhs = &rhs + &env.mul(&e_minus2[mu][nu], &phi1[nu]);
        }
        out.push(IdentityCheck::from_residual(
            format!("φ(Δ_F(X̃))^{0} = (e^(−L(1⊗X̃)) φ(X̃⊗1))^{0} + φ(1⊗X̃)^{0}", mu + 1),
            &(&lhs[mu] - &rhs),
            &names,
        ));
    }

    for mu in 0..d {
        let lhs = cop.apply(env, &t.h[mu]);
        let mut rhs = on_leg2(&t.h[mu]);
        for nu in 0..d {
            rhs = &rhs + &env.mul(&on_leg1(&t.h[nu]), &e_plus2[nu][mu]);
        }
        out.push(IdentityCheck::from_residual(
            format!("Δ_F(H{0}) = H_ν ⊗ e^(L(X̃))^ν_{0} + 1 ⊗ H{0}", mu + 1),
            &(&lhs - &rhs),
            &names,
        ));
    }

    let e_minus = action_exp(env, a, &t.x_tilde, -1);
    for mu in 0..d {
        let s = cop.antipode(env, &t.x_tilde[mu])?;
        out.push(IdentityCheck::from_residual(format!("S_F(X̃{0}) = −X̃{0}", mu + 1), &(&s + &t.x_tilde[mu]), &names));
        let s = cop.antipode(env, &t.h[mu])?;
        let mut rhs: UeaElement = env.zero();
        for nu in 0..d {
            rhs = &rhs - &env.mul(&t.h[nu], &e_minus[nu][mu]);
        }
        out.push(IdentityCheck::from_residual(
            format!("S_F(H{0}) = −H_ν e^(−L(X̃))^ν_{0}", mu + 1),
            &(&s - &rhs),
            &names,
        ));
    }
    Ok(out)
}

/// Image of a two-leg element under the algebra map sending generator `i`
/// of `src` to `images[i]` in `dst`.
pub fn transport(src: &Enveloping, dst: &Enveloping, images: &[UeaElement], t: &Tensor2) -> Tensor2 {
    let mut cache: HashMap<Monomial, UeaElement> = HashMap::new();
    let mut image = |m: &Monomial| -> UeaElement {
        cache
            .entry(m.clone())
            .or_insert_with(|| {
                let mut p: UeaElement = dst.one();
                for i in m.letters() {
                    p = dst.mul(&p, &images[i]);
                }
                p
            })
            .clone()
    };
    let _ = src;
    let mut out: Tensor2 = dst.zero();
    for ([a, b], c) in t.iter() {
        let term = outer(&image(a), &image(b));
        out = &out + &term.scale_series(c);
    }
    out
}

/// `F_cocycle − F_extended` in the enveloping algebra of the restricted
/// Borel subalgebra, for the split of [`ActionConstants::borel_split`].
pub fn cocycle_matches_extended(n: usize, order: usize) -> Result<Tensor2> {
    let a = ActionConstants::borel_split(n)?;
    let t = build_cocycle_twist(&a, order)?;
    let r = canonical_realization(n, order)?;
    let images: Vec<UeaElement> = borel_identification(n).iter().map(|v| r.env.from_lie_vector(v)).collect();
    let moved = transport(&t.env, &r.env, &images, &t.f);
    Ok(&moved - &r.extended()?)
}
