use alloc::vec::Vec;

use super::Realization;
use crate::error::Result;
use crate::scalars::{Rational, XiSeries};
use crate::uea::{outer, Tensor2, UeaElement};

/// Coefficients of `s / (e^s − 1) = Σ B_k s^k / k!` up to `s^order`, by
/// inverting `(e^s − 1)/s = Σ s^k/(k+1)!`.
pub fn bernoulli_generating(order: usize) -> Vec<Rational> {
    let denom = XiSeries::from_coeffs((0..=order as u32).map(|k| Rational::inv_factorial(k + 1)), order);
    denom.invert().expect("constant term is 1").coeffs().to_vec()
}

impl Realization {
    pub fn sigma(&self) -> UeaElement {
        self.env.sigma(self.e)
    }

    /// `e^{cσ}`
    pub fn exp_sigma(&self, c: &Rational) -> UeaElement {
        self.env.exp_sigma(self.e, c)
    }

    /// `Φ = exp(H ⊗ σ)`
    pub fn phi(&self) -> Result<Tensor2> {
        self.env.exp_positive(&outer(&self.h, &self.sigma()))
    }

    /// `exp(A_j ⊗ B_j e^{cσ})`
    pub fn factor(&self, j: usize, c: &Rational) -> Result<Tensor2> {
        let f = &self.factors[j];
        let b = self.env.mul(&f.b, &self.exp_sigma(c));
        self.env.exp_positive(&outer(&f.a, &b))
    }

    fn factors_product(&self, c: &Rational) -> Result<Tensor2> {
        let mut acc = self.env.one();
        for j in 0..self.factors.len() {
            acc = self.env.mul(&acc, &self.factor(j, c)?);
        }
        Ok(acc)
    }

    /// `Φ₁ Φ₂ ⋯` with the `e^{−2σ}` dressing.
    pub fn phi1(&self) -> Result<Tensor2> {
        self.factors_product(&Rational::from_integer(-2))
    }

    /// `Φ̃₁ = Π_j exp(A_j ⊗ B_j e^{−βσ})`, the left factor of the reversed
    /// ordering.
    pub fn phi1_tilde(&self) -> Result<Tensor2> {
        self.factors_product(&-self.beta())
    }

    /// `F = Φ Π_j exp(A_j ⊗ B_j e^{−2σ})`.
    pub fn extended(&self) -> Result<Tensor2> {
        Ok(self.env.mul(&self.phi()?, &self.phi1()?))
    }

    /// `F = Π_j exp(A_j ⊗ B_j e^{−βσ}) · Φ`.
    pub fn reversed(&self) -> Result<Tensor2> {
        Ok(self.env.mul(&self.phi1_tilde()?, &self.phi()?))
    }

    /// `F = exp(H ⊗ σ + Σ_j A_j ⊗ B_j e^{−βσ} ασ / (e^{ασ} − 1))`; at
    /// `α = β = 1` the dressing is `σ e^{−2σ} (1 − e^{−σ})^{-1}`.
    pub fn combined(&self) -> Result<Tensor2> {
        let env = &self.env;
        let sigma = self.sigma();
        let g = if self.alpha.is_zero() {
            env.one()
        } else {
            let coeffs: Vec<Rational> = bernoulli_generating(self.order())
                .iter()
                .enumerate()
                .map(|(k, c)| c * &self.alpha.pow(k as u32))
                .collect();
            env.power_series(&coeffs, &sigma)?
        };
        let dressing = env.mul(&self.exp_sigma(&-self.beta()), &g);
        let mut x = outer(&self.h, &sigma);
        for f in &self.factors {
            x = &x + &outer(&f.a, &env.mul(&f.b, &dressing));
        }
        env.exp_positive(&x)
    }

    /// The element built for the requested variant (`Φ` for the jordanian
    /// variant, the extended product otherwise).
    pub fn twist(&self) -> Result<Tensor2> {
        self.extended()
    }
}
