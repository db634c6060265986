use alloc::vec;
use alloc::vec::Vec;

use super::spec::Realization;
use crate::error::Result;
use crate::liealg::{gl_index, BorelIndex, LieAlgebraData};
use crate::scalars::Rational;
use crate::uea::{Enveloping, Tensor2, UeaElement};

/// Signs of the anti-involution `θ` on the gl(N) basis: `E_kN`, `E_Nk`
/// (`k < N`) are fixed, every other `E_ij` changes sign.
pub fn theta_signs_gl(n: usize) -> Vec<Rational> {
    let mut s = vec![-Rational::ONE; n * n];
    for k in 1..n {
        s[gl_index(n, k, n)] = Rational::ONE;
        s[gl_index(n, n, k)] = Rational::ONE;
    }
    s
}

/// The same signs on the restricted Borel basis: `θ(x_α) = −x_α`,
/// `θ(E_1N) = E_1N`, `θ(E_jN) = E_jN`.
pub fn theta_signs_borel(n: usize) -> Vec<Rational> {
    let b = BorelIndex { n };
    let mut s = vec![-Rational::ONE; b.dim()];
    s[b.e()] = Rational::ONE;
    for j in b.middle() {
        s[b.last_col(j)] = Rational::ONE;
    }
    s
}

/// Basis pairs `(i, j)` violating `θ[e_i, e_j] = [θe_j, θe_i]`.
pub fn anti_automorphism_violations(g: &LieAlgebraData, signs: &[Rational]) -> Vec<(usize, usize)> {
    let d = g.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let mut lhs = vec![Rational::ZERO; d];
            for (k, c) in g.bracket_basis(i, j) {
                lhs[*k] = c * &signs[*k];
            }
            let mut rhs = vec![Rational::ZERO; d];
            let s = &signs[i] * &signs[j];
            for (k, c) in g.bracket_basis(j, i) {
                rhs[*k] = c * &s;
            }
            if lhs != rhs {
                out.push((i, j));
            }
        }
    }
    out
}

/// `θ(θ(e_i)) − e_i` for every generator, nonzero entries only.
pub fn involution_violations(env: &Enveloping, signs: &[Rational]) -> Vec<usize> {
    (0..env.dim())
        .filter(|&i| {
            let g: UeaElement = env.generator(i);
            env.anti_sign_map(&env.anti_sign_map(&g, signs), signs) != g
        })
        .collect()
}

/// `(θ⊗θ)(F) − F⁻¹` for the realization's twist on B∨.
pub fn real_form_residual(r: &Realization) -> Result<Tensor2> {
    let env = &r.env;
    let f = r.twist()?;
    let image = env.anti_sign_map(&f, &theta_signs_borel(r.spec.n));
    Ok(&image - &env.invert(&f)?)
}
