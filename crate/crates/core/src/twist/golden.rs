//! Closed-form twisted coproducts, antipodes and R-matrix factorizations of
//! the canonical extended twist, compared against values computed from `F`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{universal_r, Ambient, Coproduct, Realization, TwistSpec, Variant};
use crate::error::Result;
use crate::liealg::{gl_index, BorelIndex};
use crate::scalars::{Rational, XiSeries};
use crate::uea::{on_leg2, outer, Enveloping, Tensor2, UeaElement};

/// A named identity and its residual (computed minus closed form).
pub struct Comparison<T> {
    pub name: String,
    pub residual: T,
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn canonical(n: usize, order: usize, ambient: Ambient) -> Result<Realization> {
    Realization::with_ambient(&TwistSpec::new(Variant::ExtendedMulti, n, order), ambient)
}

fn xi_scaled(env: &Enveloping, c: i64, k: usize) -> XiSeries {
    XiSeries::monomial(q(c), k, env.order())
}

/// Coproducts of the restricted Borel generators against their closed forms.
pub fn twisted_borel_coproducts(n: usize, order: usize) -> Result<Vec<Comparison<Tensor2>>> {
    let r = canonical(n, order, Ambient::Minimal)?;
    let env = &r.env;
    let b = BorelIndex { n };
    let delta = Coproduct::twisted(env, &r.extended()?)?;
    let es = |c: i64| r.exp_sigma(&q(c));
    let mut out = Vec::new();

    let h = env.generator(b.h());
    let mut expected = &outer(&h, &es(-2)) + &on_leg2(&h);
    for j in b.middle() {
        let t = outer(&env.generator(b.first_row(j)), &env.mul(&env.generator(b.last_col(j)), &es(-3)));
        expected.add_scaled(&t.scale_series(&xi_scaled(env, 1, 1)), &q(-4));
    }
    out.push(Comparison { name: format!("Δ_F(H1{})", n), residual: &delta.apply(env, &h) - &expected });

    for i in b.middle() {
        let e1i = env.generator(b.first_row(i));
        let expected = &outer(&e1i, &es(-1)) + &on_leg2(&e1i);
        out.push(Comparison { name: format!("Δ_F(E1{})", i), residual: &delta.apply(env, &e1i) - &expected });
        let ein = env.generator(b.last_col(i));
        let expected = &outer(&ein, &es(1)) + &outer(&es(2), &ein);
        out.push(Comparison { name: format!("Δ_F(E{}{})", i, n), residual: &delta.apply(env, &ein) - &expected });
    }
    let e = env.generator(b.e());
    let expected = &outer(&e, &es(2)) + &on_leg2(&e);
    out.push(Comparison { name: format!("Δ_F(E1{})", n), residual: &delta.apply(env, &e) - &expected });
    Ok(out)
}

/// Twisted antipodes of `σ`, `E_1i`, `E_iN`, `E_1N`, `H_1N` against their
/// closed forms.
pub fn twisted_borel_antipodes(n: usize, order: usize) -> Result<Vec<Comparison<UeaElement>>> {
    let r = canonical(n, order, Ambient::Minimal)?;
    let env = &r.env;
    let b = BorelIndex { n };
    let delta = Coproduct::twisted(env, &r.extended()?)?;
    let es = |c: i64| r.exp_sigma(&q(c));
    let mut out = Vec::new();
    let s = |a: &UeaElement| delta.antipode(env, a);

    let sigma = r.sigma();
    out.push(Comparison { name: String::from("S_F(σ)"), residual: &s(&sigma)? + &sigma });
    for i in b.middle() {
        let e1i = env.generator(b.first_row(i));
        out.push(Comparison {
            name: format!("S_F(E1{})", i),
            residual: &s(&e1i)? + &env.mul(&e1i, &es(1)),
        });
        let ein = env.generator(b.last_col(i));
        out.push(Comparison {
            name: format!("S_F(E{}{})", i, n),
            residual: &s(&ein)? + &env.mul(&ein, &es(-3)),
        });
    }
    let e = env.generator(b.e());
    out.push(Comparison { name: format!("S_F(E1{})", n), residual: &s(&e)? + &env.mul(&e, &es(-2)) });
    let h = env.generator(b.h());
    let mut expected = -&env.mul(&h, &es(2));
    for j in b.middle() {
        let t = env.mul(&env.generator(b.first_row(j)), &env.generator(b.last_col(j)));
        expected.add_scaled(&t.scale_series(&xi_scaled(env, 1, 1)), &q(-4));
    }
    out.push(Comparison { name: format!("S_F(H1{})", n), residual: &s(&h)? - &expected });
    Ok(out)
}

/// The closed form of `Δ_F(E_32)` in U(gl(3)) for the canonical twist:
///
/// `E32⊗e^{−σ} + 1⊗E32 + ξ H13⊗E12 e^{−2σ} + 2ξ E12⊗H23 e^{−σ}
///  − ξ H13 E12⊗(e^{−σ} − e^{−3σ}) − 4ξ² E12⊗E23 E12 e^{−3σ} − 4ξ² E12²⊗E23 e^{−4σ}`
pub fn e32_closed_form(r: &Realization) -> Vec<(&'static str, Tensor2)> {
    let env = &r.env;
    let g = |i: usize, j: usize| env.generator(gl_index(3, i, j));
    let es = |c: i64| r.exp_sigma(&q(c));
    let xi = |k: usize, c: i64| xi_scaled(env, c, k);
    let h13 = &g(1, 1) - &g(3, 3);
    let h23 = &g(2, 2) - &g(3, 3);
    let e12 = g(1, 2);
    let e23 = g(2, 3);
    let e32 = g(3, 2);
    alloc::vec![
        ("E32 ⊗ e^{-σ}", outer(&e32, &es(-1))),
        ("1 ⊗ E32", on_leg2(&e32)),
        ("ξ H13 ⊗ E12 e^{-2σ}", outer(&h13, &env.mul(&e12, &es(-2))).scale_series(&xi(1, 1))),
        ("2ξ E12 ⊗ H23 e^{-σ}", outer(&e12, &env.mul(&h23, &es(-1))).scale_series(&xi(1, 2))),
        (
            "−ξ H13 E12 ⊗ (e^{-σ} − e^{-3σ})",
            outer(&env.mul(&h13, &e12), &(&es(-1) - &es(-3))).scale_series(&xi(1, -1)),
        ),
        (
            "−4ξ² E12 ⊗ E23 E12 e^{-3σ}",
            outer(&e12, &env.mul(&env.mul(&e23, &e12), &es(-3))).scale_series(&xi(2, -4)),
        ),
        (
            "−4ξ² E12² ⊗ E23 e^{-4σ}",
            outer(&env.mul(&e12, &e12), &env.mul(&e23, &es(-4))).scale_series(&xi(2, -4)),
        ),
    ]
}

/// `Δ_F(E_32)` computed in U(gl(3)) minus the seven-term closed form.
pub fn e32_coproduct(order: usize) -> Result<(Tensor2, Tensor2, Realization)> {
    let r = canonical(3, order, Ambient::Gl)?;
    let env = &r.env;
    let delta = Coproduct::twisted(env, &r.extended()?)?;
    let computed = delta.apply(env, &env.generator(gl_index(3, 3, 2)));
    let mut expected = env.zero();
    for (_, t) in e32_closed_form(&r) {
        expected = &expected + &t;
    }
    let residual = &computed - &expected;
    Ok((computed, residual, r))
}

/// `F₂₁F⁻¹` minus the ordered product
/// `Π_j exp(2ξ E_jN e^{−σ} ⊗ E_1j) exp(σ ⊗ H) exp(−H ⊗ σ) Π_j exp(−2ξ E_1j ⊗ E_jN e^{−σ})`.
pub fn r_matrix_factorization(n: usize, order: usize) -> Result<Tensor2> {
    let r = canonical(n, order, Ambient::Minimal)?;
    let env = &r.env;
    let b = BorelIndex { n };
    let computed = universal_r(env, &r.extended()?)?;
    let h = env.generator(b.h());
    let sigma = r.sigma();
    let em = r.exp_sigma(&q(-1));
    let two_xi = xi_scaled(env, 2, 1);
    let mut left = env.one();
    let mut right = env.one();
    for j in b.middle() {
        let e1j = env.generator(b.first_row(j));
        let ejn = env.mul(&env.generator(b.last_col(j)), &em);
        left = env.mul(&left, &env.exp_positive(&outer(&ejn, &e1j).scale_series(&two_xi))?);
        right = env.mul(&right, &env.exp_positive(&(-&outer(&e1j, &ejn).scale_series(&two_xi)))?);
    }
    let mid = env.mul(
        &env.exp_positive(&outer(&sigma, &h))?,
        &env.exp_positive(&-&outer(&h, &sigma))?,
    );
    let expected = env.product(&[&left, &mid, &right]);
    Ok(&computed - &expected)
}

/// Coproducts on the abstract four-dimensional algebra: `Δ_Φ` on all
/// generators and `Δ_F` on all generators, against their closed forms.
pub fn abstract_coproducts(alpha: &Rational, order: usize) -> Result<Vec<Comparison<Tensor2>>> {
    let r = Realization::new(&TwistSpec::new(Variant::AbstractL, 0, order).with_alpha(alpha.clone()))?;
    let env = &r.env;
    let beta = r.beta();
    let es = |c: &Rational| r.exp_sigma(c);
    let (h, a, b, e) = (env.named("H"), r.factors[0].a.clone(), env.named("B"), env.named("E"));
    let phi = Coproduct::twisted(env, &r.phi()?)?;
    let full = Coproduct::twisted(env, &r.extended()?)?;
    let mut out = Vec::new();
    let mut push = |name: &str, computed: Tensor2, expected: Tensor2| {
        out.push(Comparison { name: String::from(name), residual: &computed - &expected });
    };
    push("Δ_Φ(H)", phi.apply(env, &h), &outer(&h, &es(&q(-2))) + &on_leg2(&h));
    push("Δ_Φ(A)", phi.apply(env, &a), &outer(&a, &es(alpha)) + &on_leg2(&a));
    push("Δ_Φ(B)", phi.apply(env, &b), &outer(&b, &es(&beta)) + &on_leg2(&b));
    push("Δ_Φ(E)", phi.apply(env, &e), &outer(&e, &es(&q(2))) + &on_leg2(&e));
    let mut dh = &outer(&h, &es(&q(-2))) + &on_leg2(&h);
    dh.add_scaled(&outer(&a, &env.mul(&b, &es(&(alpha - &q(4))))), &q(-2));
    push("Δ_F(H)", full.apply(env, &h), dh);
    push("Δ_F(A)", full.apply(env, &a), &outer(&a, &es(&-&beta)) + &on_leg2(&a));
    push("Δ_F(B)", full.apply(env, &b), &outer(&b, &es(&beta)) + &outer(&es(&q(2)), &b));
    push("Δ_F(E)", full.apply(env, &e), &outer(&e, &es(&q(2))) + &on_leg2(&e));
    Ok(out)
}
