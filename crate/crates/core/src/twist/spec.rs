use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::liealg::{
    gl_index, make_borel_restricted, make_gl, make_l_abstract, BorelIndex, LieAlgebraData,
};
use crate::scalars::{Rational, XiSeries};
use crate::uea::{Enveloping, Monomial, UeaElement};

/// Which family of twisting element to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `Φ = exp(H ⊗ σ)` alone.
    JordanianOnly,
    /// `Φ Φ₁` with one factor built from general `A = Σ (a^{1k} E_1k + a^{kN} E_kN)`.
    ExtendedSingle,
    /// `Φ Π_j Φ_j` with one factor per intermediate index.
    ExtendedMulti,
    /// `Φ Φ₁` on the four-dimensional algebra `{H, A, B, E}`.
    AbstractL,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::JordanianOnly => "jordanian_only",
            Variant::ExtendedSingle => "extended_single",
            Variant::ExtendedMulti => "extended_multi",
            Variant::AbstractL => "abstract_L",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "jordanian_only" | "jordanian" => Ok(Variant::JordanianOnly),
            "extended_single" | "single" => Ok(Variant::ExtendedSingle),
            "extended_multi" | "multi" => Ok(Variant::ExtendedMulti),
            "abstract_L" | "abstract_l" | "abstract" => Ok(Variant::AbstractL),
            _ => Err(Error::Parse(format!("unknown twist variant '{}'", s))),
        }
    }
}

/// Coefficients of one extension factor, indexed by `k = 2..N−1` (entry
/// `k − 2`): `A = Σ_k (a^{1k} E_1k + a^{kN} E_kN)`, same for `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCoefficients {
    pub a_first: Vec<Rational>,
    pub a_last: Vec<Rational>,
    pub b_first: Vec<Rational>,
    pub b_last: Vec<Rational>,
}

impl FactorCoefficients {
    pub fn zero(n: usize) -> Self {
        let z = vec![Rational::ZERO; n.saturating_sub(2)];
        FactorCoefficients { a_first: z.clone(), a_last: z.clone(), b_first: z.clone(), b_last: z }
    }

    /// `A = a^{1j} E_1j + a^{jN} E_jN`, `B = b^{1j} E_1j + b^{jN} E_jN`.
    pub fn one_root(n: usize, j: usize, a: [Rational; 2], b: [Rational; 2]) -> Self {
        let mut f = Self::zero(n);
        let [a1, an] = a;
        let [b1, bn] = b;
        f.a_first[j - 2] = a1;
        f.a_last[j - 2] = an;
        f.b_first[j - 2] = b1;
        f.b_last[j - 2] = bn;
        f
    }
}

/// Per-factor coefficients plus the normalization convention.
///
/// With `xi_normalized` the `a` coefficients describe `Ã` and the factor uses
/// `A = 2ξÃ`, so the bracket condition reads `Σ (a^{1k} b^{kN} − a^{kN} b^{1k}) = 1`.
/// Otherwise `A = ξ Σ a ⋯` (the `a` are the ξ-coefficients of the
/// unnormalized parameters) and the sum must equal 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCoefficients {
    pub factors: Vec<FactorCoefficients>,
    pub xi_normalized: bool,
}

impl ExtensionCoefficients {
    /// One factor per `j = 2..N−1` with `Ã_j = E_1j`, `B_j = E_jN`.
    pub fn canonical_multi(n: usize) -> Self {
        ExtensionCoefficients {
            factors: (2..n)
                .map(|j| {
                    FactorCoefficients::one_root(
                        n,
                        j,
                        [Rational::ONE, Rational::ZERO],
                        [Rational::ZERO, Rational::ONE],
                    )
                })
                .collect(),
            xi_normalized: true,
        }
    }

    /// A single factor spreading over all intermediate roots:
    /// `Ã = (1/(N−2)) Σ_k E_1k`, `B = Σ_k E_kN`.
    pub fn canonical_single(n: usize) -> Self {
        let m = n.saturating_sub(2);
        let mut f = FactorCoefficients::zero(n);
        for k in 0..m {
            f.a_first[k] = Rational::new(1, m as i64);
            f.b_last[k] = Rational::ONE;
        }
        ExtensionCoefficients { factors: if m == 0 { Vec::new() } else { vec![f] }, xi_normalized: true }
    }

    pub fn none() -> Self {
        ExtensionCoefficients { factors: Vec::new(), xi_normalized: true }
    }
}

/// Which twist to build and at what truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSpec {
    pub variant: Variant,
    pub n: usize,
    pub order: usize,
    pub coefficients: ExtensionCoefficients,
    /// Weight of `A` under `H` (abstract algebra only; `β = 2 − α`).
    pub alpha: Rational,
}

impl TwistSpec {
    /// Default coefficients for the variant: canonical one-root factors for
    /// `extended_multi`, the spread single factor for `extended_single`,
    /// `α = 1` for `abstract_L`.
    pub fn new(variant: Variant, n: usize, order: usize) -> Self {
        let coefficients = match variant {
            Variant::JordanianOnly | Variant::AbstractL => ExtensionCoefficients::none(),
            Variant::ExtendedSingle => ExtensionCoefficients::canonical_single(n),
            Variant::ExtendedMulti => ExtensionCoefficients::canonical_multi(n),
        };
        TwistSpec { variant, n, order, coefficients, alpha: Rational::ONE }
    }

    pub fn with_coefficients(mut self, c: ExtensionCoefficients) -> Self {
        self.coefficients = c;
        self
    }

    pub fn with_alpha(mut self, alpha: Rational) -> Self {
        self.alpha = alpha;
        self
    }
}

/// Where the twist lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    /// The restricted Borel subalgebra (or the abstract algebra for
    /// `abstract_L`).
    Minimal,
    /// All of gl(N), for coproducts of elements outside B∨.
    Gl,
}

/// One extension factor realized in the enveloping algebra; `a` already
/// carries its power of ξ.
#[derive(Clone, Debug)]
pub struct Factor {
    pub a: UeaElement,
    pub b: UeaElement,
}

/// A twist specification realized in a concrete enveloping algebra: the
/// elements `H`, the generator index of `E`, the weight `α` and the factors.
pub struct Realization {
    pub env: Enveloping,
    pub spec: TwistSpec,
    pub h: UeaElement,
    pub e: usize,
    pub alpha: Rational,
    pub factors: Vec<Factor>,
}

impl Realization {
    pub fn new(spec: &TwistSpec) -> Result<Self> {
        Self::with_ambient(spec, Ambient::Minimal)
    }

    pub fn with_ambient(spec: &TwistSpec, ambient: Ambient) -> Result<Self> {
        if spec.variant == Variant::AbstractL {
            return Self::abstract_l(spec);
        }
        let n = spec.n;
        if n < 2 {
            return Err(Error::InvalidDimension { what: "N", got: n, min: 2 });
        }
        let (algebra, embed): (LieAlgebraData, Vec<usize>) = match ambient {
            Ambient::Minimal => {
                let b = BorelIndex { n };
                let mut idx = vec![0; n * n];
                idx[gl_index(n, 1, n)] = b.e();
                for j in b.middle() {
                    idx[gl_index(n, 1, j)] = b.first_row(j);
                    idx[gl_index(n, j, n)] = b.last_col(j);
                }
                (make_borel_restricted(n)?, idx)
            }
            Ambient::Gl => (make_gl(n)?, (0..n * n).collect()),
        };
        let env = Enveloping::new(algebra, spec.order);
        let one = XiSeries::one(spec.order);
        let gen = |i: usize, j: usize| UeaElement::monomial(Monomial::generator(env.dim(), embed[gl_index(n, i, j)]), one.clone());
        let h = match ambient {
            Ambient::Minimal => env.generator(0),
            Ambient::Gl => &gen(1, 1) - &gen(n, n),
        };
        let e = embed[gl_index(n, 1, n)];
        let expected = match spec.variant {
            Variant::JordanianOnly => 0,
            _ => spec.coefficients.factors.len(),
        };
        let a_scale = if spec.coefficients.xi_normalized {
            XiSeries::monomial(Rational::from_integer(2), 1, spec.order)
        } else {
            XiSeries::xi(spec.order)
        };
        let mut factors = Vec::with_capacity(expected);
        for (fi, f) in spec.coefficients.factors.iter().take(expected).enumerate() {
            for (what, v) in [("a^{1k}", &f.a_first), ("a^{kN}", &f.a_last), ("b^{1k}", &f.b_first), ("b^{kN}", &f.b_last)] {
                if v.len() != n - 2 {
                    return Err(Error::Constraint {
                        relation: "coefficient shape",
                        detail: format!("factor {}: {} has {} entries, expected N−2 = {}", fi + 1, what, v.len(), n - 2),
                    });
                }
            }
            let mut a = env.zero();
            let mut b = env.zero();
            for k in 2..n {
                a.add_scaled(&gen(1, k), &f.a_first[k - 2]);
                a.add_scaled(&gen(k, n), &f.a_last[k - 2]);
                b.add_scaled(&gen(1, k), &f.b_first[k - 2]);
                b.add_scaled(&gen(k, n), &f.b_last[k - 2]);
            }
            factors.push(Factor { a: a.scale_series(&a_scale), b });
        }
        let r = Realization { env, spec: spec.clone(), h, e, alpha: Rational::ONE, factors };
        r.check_constraints()?;
        Ok(r)
    }

    fn abstract_l(spec: &TwistSpec) -> Result<Self> {
        let env = Enveloping::new(make_l_abstract(&spec.alpha, &Rational::ONE), spec.order);
        let a = env.named("A").scale_series(&XiSeries::monomial(Rational::from_integer(2), 1, spec.order));
        let b = env.named("B");
        let h = env.named("H");
        let e = env.algebra().index_of("E").unwrap();
        let r = Realization {
            env,
            spec: spec.clone(),
            h,
            e,
            alpha: spec.alpha.clone(),
            factors: vec![Factor { a, b }],
        };
        r.check_constraints()?;
        Ok(r)
    }

    /// `[A_j, B_k] = δ_jk (e^{2σ} − 1) = δ_jk 2ξE`, `[A_j, A_k] = [B_j, B_k] = 0`.
    fn check_constraints(&self) -> Result<()> {
        let env = &self.env;
        let two_xi_e = env.generator(self.e).scale_series(&XiSeries::monomial(Rational::from_integer(2), 1, env.order()));
        for (j, fj) in self.factors.iter().enumerate() {
            for (k, fk) in self.factors.iter().enumerate() {
                let ab = env.commutator(&fj.a, &fk.b);
                if j == k {
                    if ab != two_xi_e {
                        return Err(Error::Constraint {
                            relation: "[A_j, B_j] = e^{2σ} − 1 = 2ξE",
                            detail: format!(
                                "factor {}: [A, B] = {}",
                                j + 1,
                                ab.render(env.names())
                            ),
                        });
                    }
                } else if !ab.is_zero() {
                    return Err(Error::Constraint {
                        relation: "[A_j, B_k] = 0 for j ≠ k",
                        detail: format!("factors {} and {}: {}", j + 1, k + 1, ab.render(env.names())),
                    });
                }
                if j < k {
                    if !env.commutator(&fj.a, &fk.a).is_zero() {
                        return Err(Error::Constraint {
                            relation: "[A_j, A_k] = 0",
                            detail: format!("factors {} and {}", j + 1, k + 1),
                        });
                    }
                    if !env.commutator(&fj.b, &fk.b).is_zero() {
                        return Err(Error::Constraint {
                            relation: "[B_j, B_k] = 0",
                            detail: format!("factors {} and {}", j + 1, k + 1),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.env.order()
    }

    pub fn names(&self) -> &[String] {
        self.env.names()
    }

    pub fn beta(&self) -> Rational {
        &Rational::from_integer(2) - &self.alpha
    }
}
