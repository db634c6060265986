use alloc::vec::Vec;

use super::spec::{ExtensionCoefficients, Realization, TwistSpec, Variant};
use super::hopf::universal_r;
use crate::error::Result;
use crate::scalars::Rational;
use crate::uea::{outer, Tensor2, UeaElement};

/// The generators `x_α` and `ξπ_α` of the restricted Borel algebra:
/// `x_1 = H_1N`, `x_i = 2E_1i`, `ξπ_1 = σ`, `ξπ_i = ξ E_iN e^{−2σ}`.
///
/// `π_1 = σ/ξ` only appears multiplied by ξ, so the scaled generators are
/// returned and the powers of ξ of the expansion are absorbed into them.
pub struct ZBasis {
    pub x: Vec<UeaElement>,
    pub xi_pi: Vec<UeaElement>,
}

impl ZBasis {
    pub fn new(r: &Realization) -> Self {
        let env = &r.env;
        let n = r.spec.n;
        let b = crate::liealg::BorelIndex { n };
        let xi = env.xi();
        let dress = r.exp_sigma(&Rational::from_integer(-2));
        let mut x = Vec::with_capacity(n - 1);
        let mut xi_pi = Vec::with_capacity(n - 1);
        x.push(r.h.clone());
        xi_pi.push(r.sigma());
        for i in 2..n {
            x.push(env.generator(b.first_row(i)).scale(&Rational::from_integer(2)));
            xi_pi.push(env.mul(&env.generator(b.last_col(i)), &dress).scale_series(&xi));
        }
        ZBasis { x, xi_pi }
    }
}

/// The realization used by the expansion: canonical one-root factors on B∨.
pub fn canonical_realization(n: usize, order: usize) -> Result<Realization> {
    let spec = TwistSpec::new(Variant::ExtendedMulti, n, order).with_coefficients(ExtensionCoefficients::canonical_multi(n));
    Realization::new(&spec)
}

fn powers(env: &crate::uea::Enveloping, a: &UeaElement, max: usize) -> Vec<UeaElement> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(env.one());
    for k in 1..=max {
        let p = env.mul(&out[k - 1], a);
        out.push(p);
    }
    out
}

/// Multi-indices of length `len` with total at most `max`.
fn multi_indices(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![0usize; len];
    fn go(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            go(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    go(0, max, &mut cur, &mut out);
    out
}

/// `Σ (−ξ)^{|n|} ξ^{|m|} / (m! n!) · π^m x_{N−1}^{n_{N−1}} ⋯ x_1^{n_1} ⊗
/// x_1^{m_1} ⋯ x_{N−1}^{m_{N−1}} π^n`; the first leg is the product of
/// `x^n π^m` taken in the opposite algebra.
pub fn r_double_sum(r: &Realization) -> Tensor2 {
    let env = &r.env;
    let k = env.order();
    let z = ZBasis::new(r);
    let rank = z.x.len();
    let xp: Vec<Vec<UeaElement>> = z.x.iter().map(|a| powers(env, a, k)).collect();
    let pp: Vec<Vec<UeaElement>> = z.xi_pi.iter().map(|a| powers(env, a, k)).collect();
    let mut out = env.zero();
    for mn in multi_indices(2 * rank, k) {
        let (m, nn) = mn.split_at(rank);
        let mut left = env.one();
        for (a, &e) in m.iter().enumerate() {
            left = env.mul(&left, &pp[a][e]);
        }
        for a in (0..rank).rev() {
            left = env.mul(&left, &xp[a][nn[a]]);
        }
        let mut right = env.one();
        for (a, &e) in m.iter().enumerate() {
            right = env.mul(&right, &xp[a][e]);
        }
        for (a, &e) in nn.iter().enumerate() {
            right = env.mul(&right, &pp[a][e]);
        }
        let mut c = Rational::ONE;
        for &e in m.iter().chain(nn.iter()) {
            c = &c * &Rational::inv_factorial(e as u32);
        }
        if nn.iter().sum::<usize>() % 2 == 1 {
            c = -c;
        }
        out.add_scaled(&outer(&left, &right), &c);
    }
    out
}

/// `Π^<_α exp(π_α ⊗ ξx_α) Π^>_α exp(−ξx_α ⊗ π_α)`
pub fn r_ordered_product(r: &Realization) -> Result<Tensor2> {
    let env = &r.env;
    let z = ZBasis::new(r);
    let mut acc = env.one();
    for a in 0..z.x.len() {
        acc = env.mul(&acc, &env.exp_positive(&outer(&z.xi_pi[a], &z.x[a]))?);
    }
    for a in (0..z.x.len()).rev() {
        acc = env.mul(&acc, &env.exp_positive(&outer(&z.x[a], &z.xi_pi[a]).scale(&-Rational::ONE))?);
    }
    Ok(acc)
}

/// Residuals of the double sum and of the ordered product against
/// `F₂₁ F⁻¹`.
pub fn r_expansion_residuals(n: usize, order: usize) -> Result<(Tensor2, Tensor2)> {
    let r = canonical_realization(n, order)?;
    let big_r = universal_r(&r.env, &r.extended()?)?;
    let sum = r_double_sum(&r);
    let prod = r_ordered_product(&r)?;
    Ok((&sum - &big_r, &prod - &big_r))
}

