use crate::error::{Error, Result};
use crate::uea::{embed_12, embed_13, embed_23, swap, Enveloping, Tensor2, Tensor3, UeaElement};

/// A coproduct on the enveloping algebra: the classical one, or the
/// classical one conjugated by a twisting element `F`.
#[derive(Clone, Debug)]
pub enum Coproduct {
    Classical,
    Twisted { f: Tensor2, f_inv: Tensor2 },
}

impl Coproduct {
    pub fn twisted(env: &Enveloping, f: &Tensor2) -> Result<Self> {
        Ok(Coproduct::Twisted { f: f.clone(), f_inv: env.invert(f)? })
    }

    /// Twisting this coproduct further by `g` gives the coproduct twisted by
    /// `g · F`.
    pub fn then_twist(&self, env: &Enveloping, g: &Tensor2) -> Result<Self> {
        match self {
            Coproduct::Classical => Self::twisted(env, g),
            Coproduct::Twisted { f, .. } => Self::twisted(env, &env.mul(g, f)),
        }
    }

    /// The total twisting element relative to the classical coproduct.
    pub fn element(&self, env: &Enveloping) -> Tensor2 {
        match self {
            Coproduct::Classical => env.one(),
            Coproduct::Twisted { f, .. } => f.clone(),
        }
    }

    pub fn apply(&self, env: &Enveloping, a: &UeaElement) -> Tensor2 {
        let d = env.coproduct(a);
        match self {
            Coproduct::Classical => d,
            Coproduct::Twisted { f, f_inv } => env.mul(&env.mul(f, &d), f_inv),
        }
    }

    /// `Δ ⊗ id`
    pub fn delta_id(&self, env: &Enveloping, t: &Tensor2) -> Tensor3 {
        let d = env.delta_id(t);
        match self {
            Coproduct::Classical => d,
            Coproduct::Twisted { f, f_inv } => {
                env.mul(&env.mul(&embed_12(f), &d), &embed_12(f_inv))
            }
        }
    }

    /// `id ⊗ Δ`
    pub fn id_delta(&self, env: &Enveloping, t: &Tensor2) -> Tensor3 {
        let d = env.id_delta(t);
        match self {
            Coproduct::Classical => d,
            Coproduct::Twisted { f, f_inv } => {
                env.mul(&env.mul(&embed_23(f), &d), &embed_23(f_inv))
            }
        }
    }

    /// `Δ^{op}(a)`
    pub fn apply_op(&self, env: &Enveloping, a: &UeaElement) -> Tensor2 {
        swap(&self.apply(env, a))
    }

    /// Antipode compatible with this coproduct: `S_F(a) = v S(a) v⁻¹` with
    /// `v = Σ f₁ S(f₂)`.
    pub fn antipode(&self, env: &Enveloping, a: &UeaElement) -> Result<UeaElement> {
        let s = env.antipode(a);
        match self {
            Coproduct::Classical => Ok(s),
            Coproduct::Twisted { f, .. } => {
                let v = antipode_twist_element(env, f);
                let v_inv = env
                    .invert(&v)
                    .map_err(|_| Error::NotInvertible("twisted antipode element v"))?;
                Ok(env.mul(&env.mul(&v, &s), &v_inv))
            }
        }
    }
}

/// `v = Σ f₁ S(f₂)`
pub fn antipode_twist_element(env: &Enveloping, f: &Tensor2) -> UeaElement {
    env.multiply_legs(&env.map_leg(f, 1, |x| env.antipode(x)))
}

/// `F₁₂ (Δ⊗id)(F) − F₂₃ (id⊗Δ)(F)` for the coproduct `base` that `F`
/// twists. Zero iff `F` satisfies the twist equation.
pub fn twist_equation_residual(env: &Enveloping, f: &Tensor2, base: &Coproduct) -> Tensor3 {
    let lhs = env.mul(&embed_12(f), &base.delta_id(env, f));
    let rhs = env.mul(&embed_23(f), &base.id_delta(env, f));
    &lhs - &rhs
}

/// Residuals of the two leg-factorization identities
/// `(Δ⊗id)(F) = F₁₃ F₂₃` and `(id⊗Δ_F)(F) = F₁₂ F₁₃`, where `Δ` is `base`
/// and `Δ_F` is `base` twisted by `F`.
pub fn factorization_residuals(env: &Enveloping, f: &Tensor2, base: &Coproduct) -> Result<(Tensor3, Tensor3)> {
    let f13 = embed_13(f);
    let r1 = &base.delta_id(env, f) - &env.mul(&f13, &embed_23(f));
    let twisted = base.then_twist(env, f)?;
    let r2 = &twisted.id_delta(env, f) - &env.mul(&embed_12(f), &f13);
    Ok((r1, r2))
}

/// `R = F₂₁ F⁻¹`
pub fn universal_r(env: &Enveloping, f: &Tensor2) -> Result<Tensor2> {
    Ok(env.mul(&swap(f), &env.invert(f)?))
}

/// `R₁₂ R₁₃ R₂₃ − R₂₃ R₁₃ R₁₂`
pub fn qybe_residual(env: &Enveloping, r: &Tensor2) -> Tensor3 {
    let (r12, r13, r23) = (embed_12(r), embed_13(r), embed_23(r));
    let lhs = env.mul(&env.mul(&r12, &r13), &r23);
    let rhs = env.mul(&env.mul(&r23, &r13), &r12);
    &lhs - &rhs
}

/// `R₂₁ R − 1 ⊗ 1`
pub fn triangularity_residual(env: &Enveloping, r: &Tensor2) -> Tensor2 {
    &env.mul(&swap(r), r) - &env.one()
}

/// Residuals of the Hopf axioms at one element `a` for the coproduct
/// `delta`: coassociativity, both counit laws and both antipode laws.
#[derive(Clone, Debug)]
pub struct HopfAxiomResiduals {
    pub coassociativity: Tensor3,
    pub counit_left: UeaElement,
    pub counit_right: UeaElement,
    pub antipode_left: UeaElement,
    pub antipode_right: UeaElement,
}

impl HopfAxiomResiduals {
    pub fn holds(&self) -> bool {
        self.failing().is_none()
    }

    /// Name of the first axiom that fails, if any.
    pub fn failing(&self) -> Option<&'static str> {
        if !self.coassociativity.is_zero() {
            Some("coassociativity")
        } else if !self.counit_left.is_zero() || !self.counit_right.is_zero() {
            Some("counit")
        } else if !self.antipode_left.is_zero() || !self.antipode_right.is_zero() {
            Some("antipode")
        } else {
            None
        }
    }
}

pub fn hopf_axiom_residuals(env: &Enveloping, delta: &Coproduct, a: &UeaElement) -> Result<HopfAxiomResiduals> {
    let d = delta.apply(env, a);
    let coassociativity = &delta.delta_id(env, &d) - &delta.id_delta(env, &d);
    let counit_left = &env.counit_leg(&d, 0) - a;
    let counit_right = &env.counit_leg(&d, 1) - a;
    let eps = env.scalar::<1>(env.counit(a));
    let mut err = None;
    let mut s = |x: &UeaElement| match delta.antipode(env, x) {
        Ok(v) => v,
        Err(e) => {
            err = Some(e);
            env.zero()
        }
    };
    let left = env.multiply_legs(&env.map_leg(&d, 0, &mut s));
    let right = env.multiply_legs(&env.map_leg(&d, 1, &mut s));
    if let Some(e) = err {
        return Err(e);
    }
    Ok(HopfAxiomResiduals {
        coassociativity,
        counit_left,
        counit_right,
        antipode_left: &left - &eps,
        antipode_right: &right - &eps,
    })
}
