//! Inhomogeneous algebras `L = H ▷ H*` built from an action `H_μ ▷ H_ν =
//! L^σ_{μν} H_σ`, their classical r-matrix `Σ X^ν ∧ H_ν`, the group
//! cocycle `φ`, its inverse `ψ` and the twist `exp(H_ν ⊗ ψ^ν(X))`.

mod series;
mod twist;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::liealg::{check_jacobi, make_borel_restricted, make_l_abstract, BorelIndex, LieAlgebraData};
use crate::liealg::classical::WedgeElement;
use crate::scalars::Rational;
use crate::twist::{cybe_residual_uea, lie_tensor_to_uea};
use crate::uea::{Enveloping, Tensor3};

pub use series::{phi_coboundary, phi_psi, right_unity, CocycleSeries, Exponents, Poly};
pub use twist::{
    build_cocycle_twist, check_cocycle_identities, cocycle_matches_extended, transport, CocycleTwist, IdentityCheck,
};

/// The constants `L^σ_{μν}` of an action of `H` on itself, and optionally a
/// prescribed bracket `C^σ_{μν}` on `H`. Without one, `C = L − Lᵀ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionConstants {
    d: usize,
    l: Vec<Rational>,
    bracket: Option<Vec<Rational>>,
}

fn flat(d: usize, t: &[Vec<Vec<Rational>>], what: &str) -> Result<Vec<Rational>> {
    if t.len() != d || t.iter().any(|r| r.len() != d || r.iter().any(|s| s.len() != d)) {
        return Err(Error::InvalidAction(format!("{} must be a {}×{}×{} array", what, d, d, d)));
    }
    Ok(t.iter().flatten().flatten().cloned().collect())
}

impl ActionConstants {
    /// `l[μ][ν][σ] = L^σ_{μν}`
    pub fn new(d: usize, l: &[Vec<Vec<Rational>>]) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDimension { what: "d", got: 0, min: 1 });
        }
        Ok(ActionConstants { d, l: flat(d, l, "L")?, bracket: None })
    }

    /// Prescribes `[H_μ, H_ν] = c[μ][ν][σ] H_σ`; `c` must be antisymmetric.
    pub fn with_bracket(mut self, c: &[Vec<Vec<Rational>>]) -> Result<Self> {
        let c = flat(self.d, c, "C")?;
        let d = self.d;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if c[(i * d + j) * d + k] != -&c[(j * d + i) * d + k] {
                        return Err(Error::Inconsistent(format!("C is not antisymmetric at ({}, {}, {})", i, j, k)));
                    }
                }
            }
        }
        self.bracket = Some(c);
        Ok(self)
    }

    fn from_fn<F: FnMut(usize, usize, usize) -> Rational>(d: usize, mut f: F) -> Self {
        let mut l = Vec::with_capacity(d * d * d);
        for mu in 0..d {
            for nu in 0..d {
                for s in 0..d {
                    l.push(f(mu, nu, s));
                }
            }
        }
        ActionConstants { d, l, bracket: None }
    }

    /// The one-dimensional action `H ▷ H = λ H`.
    pub fn seed(lambda: Rational) -> Self {
        ActionConstants { d: 1, l: vec![lambda], bracket: None }
    }

    pub fn abelian(d: usize) -> Self {
        Self::from_fn(d, |_, _, _| Rational::ZERO)
    }

    /// Reads the action off a split `g = span(h) ⊕ span(x)` of a Lie algebra
    /// with `span(x)` an abelian ideal: `[h_μ, x^ν] = −L^ν_{μσ} x^σ`. The
    /// bracket of `span(h)` is kept as the prescribed bracket.
    pub fn from_split(g: &LieAlgebraData, h: &[Vec<Rational>], x: &[Vec<Rational>]) -> Result<Self> {
        let d = h.len();
        if x.len() != d || d == 0 {
            return Err(Error::InvalidAction(String::from("the two parts of a split must have equal nonzero size")));
        }
        let coords = |v: &[Rational], basis: &[Vec<Rational>], what: &str| -> Result<Vec<Rational>> {
            let n = basis.len();
            let rows: Vec<Vec<Rational>> = (0..g.dim())
                .map(|r| {
                    let mut row: Vec<Rational> = basis.iter().map(|b| b[r].clone()).collect();
                    row.push(v[r].clone());
                    row
                })
                .collect();
            series::solve_system(rows, n).ok_or_else(|| Error::InvalidAction(format!("bracket leaves the {} part", what)))
        };
        for a in x {
            for b in x {
                if g.bracket(a, b).iter().any(|c| !c.is_zero()) {
                    return Err(Error::InvalidAction(String::from("the X part is not abelian")));
                }
            }
        }
        let mut l = vec![Rational::ZERO; d * d * d];
        let mut c = vec![Rational::ZERO; d * d * d];
        for mu in 0..d {
            for nu in 0..d {
                let hx = coords(&g.bracket(&h[mu], &x[nu]), x, "X")?;
                for (s, v) in hx.into_iter().enumerate() {
                    // [H_μ, X^ν] = −L^ν_{μσ} X^σ, stored at (μ, σ, ν)
                    l[(mu * d + s) * d + nu] = -v;
                }
                let hh = coords(&g.bracket(&h[mu], &h[nu]), h, "H")?;
                for (s, v) in hh.into_iter().enumerate() {
                    c[(mu * d + nu) * d + s] = v;
                }
            }
        }
        Ok(ActionConstants { d, l, bracket: Some(c) })
    }

    /// The split `{−H, E_1j} ▷ {−E, 2E_jN}` of the restricted Borel
    /// subalgebra, under which `Σ X^ν ∧ H_ν` is the limit r-matrix.
    pub fn borel_split(n: usize) -> Result<Self> {
        let g = make_borel_restricted(n)?;
        let (h, x) = borel_split_vectors(n);
        Self::from_split(&g, &h, &x)
    }

    /// The split `{−H, A} ▷ {−E, B}` of `[H,E] = 2E, [H,A] = αA,
    /// [H,B] = (2−α)B, [A,B] = 2E`.
    pub fn abstract_split(alpha: &Rational) -> Result<Self> {
        let g = make_l_abstract(alpha, &Rational::from_integer(2));
        let unit = |i: usize, s: i64| {
            let mut v = vec![Rational::ZERO; 4];
            v[i] = Rational::from_integer(s);
            v
        };
        let (hi, ei, ai, bi) = (g.index_of("H").unwrap(), g.index_of("E").unwrap(), g.index_of("A").unwrap(), g.index_of("B").unwrap());
        Self::from_split(&g, &[unit(hi, -1), unit(ai, 1)], &[unit(ei, -1), unit(bi, 1)])
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// `L^σ_{μν}`
    pub fn l(&self, mu: usize, nu: usize, sigma: usize) -> &Rational {
        &self.l[(mu * self.d + nu) * self.d + sigma]
    }

    pub fn has_prescribed_bracket(&self) -> bool {
        self.bracket.is_some()
    }

    /// `C^σ_{μν}`: the prescribed bracket, or `L^σ_{μν} − L^σ_{νμ}`.
    pub fn c(&self, mu: usize, nu: usize, sigma: usize) -> Rational {
        match &self.bracket {
            Some(c) => c[(mu * self.d + nu) * self.d + sigma].clone(),
            None => self.l(mu, nu, sigma) - self.l(nu, mu, sigma),
        }
    }

    /// `L − Lᵀ` regardless of any prescribed bracket.
    pub fn induced_bracket(&self, mu: usize, nu: usize, sigma: usize) -> Rational {
        self.l(mu, nu, sigma) - self.l(nu, mu, sigma)
    }

    /// Adds `t·id` to the action of `H_μ` on `H*` (so `L^ν_{μν}` drops by
    /// `t`), keeping the bracket. The result is still a Lie algebra when
    /// `H_μ` is outside `[H, H]`.
    pub fn shifted_by_character(&self, mu: usize, t: &Rational) -> Self {
        let d = self.d;
        let c: Vec<Rational> = (0..d * d * d).map(|i| self.c(i / (d * d), (i / d) % d, i % d)).collect();
        let mut out = ActionConstants { d, l: self.l.clone(), bracket: Some(c) };
        for nu in 0..d {
            out.l[(mu * d + nu) * d + nu] -= t;
        }
        out
    }

    /// Same constants with `L^σ_{μν}` replaced.
    pub fn with_constant(&self, mu: usize, nu: usize, sigma: usize, v: Rational) -> Self {
        let mut out = self.clone();
        out.l[(mu * self.d + nu) * self.d + sigma] = v;
        out
    }

    /// Basis names of the semidirect sum: `H1…Hd, X1…Xd` (`H, X` if `d = 1`).
    pub fn names(&self) -> Vec<String> {
        if self.d == 1 {
            return vec![String::from("H"), String::from("X")];
        }
        let mut v: Vec<String> = (1..=self.d).map(|i| format!("H{}", i)).collect();
        v.extend((1..=self.d).map(|i| format!("X{}", i)));
        v
    }
}

pub(crate) fn borel_split_vectors(n: usize) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let b = BorelIndex { n };
    let dim = b.dim();
    let unit = |i: usize, s: i64| {
        let mut v = vec![Rational::ZERO; dim];
        v[i] = Rational::from_integer(s);
        v
    };
    let mut h = vec![unit(b.h(), -1)];
    let mut x = vec![unit(b.e(), -1)];
    for j in 2..n {
        h.push(unit(b.first_row(j), 1));
        x.push(unit(b.last_col(j), 2));
    }
    (h, x)
}

/// Violations found by [`validate_action`], each as basis indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ActionReport {
    /// `(μ, ν, σ)` where `(H_μ▷H_ν)▷H_σ − (H_ν▷H_μ)▷H_σ ≠ H_μ▷(H_ν▷H_σ) − H_ν▷(H_μ▷H_σ)`
    pub quasi_associativity: Vec<(usize, usize, usize)>,
    /// `(μ, ν, σ)` where the prescribed `C^σ_{μν}` differs from `L^σ_{μν} − L^σ_{νμ}`
    pub bracket_mismatch: Vec<(usize, usize, usize)>,
    /// Jacobi failures of `C`
    pub jacobi: Vec<(usize, usize, usize)>,
    /// `(μ, ν)` where `[ρ(H_μ), ρ(H_ν)] ≠ C^τ_{μν} ρ(H_τ)` on `H*`
    pub representation: Vec<(usize, usize)>,
}

impl ActionReport {
    pub fn holds(&self) -> bool {
        self.quasi_associativity.is_empty()
            && self.bracket_mismatch.is_empty()
            && self.jacobi.is_empty()
            && self.representation.is_empty()
    }

    pub fn witness(&self) -> Option<String> {
        if let Some(&(m, n, s)) = self.quasi_associativity.first() {
            return Some(format!("quasi-associativity fails at (μ, ν, σ) = ({}, {}, {})", m + 1, n + 1, s + 1));
        }
        if let Some(&(m, n, s)) = self.bracket_mismatch.first() {
            return Some(format!("C^{}_{{{}{}}} ≠ L^{}_{{{}{}}} − L^{}_{{{}{}}}", s + 1, m + 1, n + 1, s + 1, m + 1, n + 1, s + 1, n + 1, m + 1));
        }
        if let Some(&(a, b, c)) = self.jacobi.first() {
            return Some(format!("Jacobi fails on (H{}, H{}, H{})", a + 1, b + 1, c + 1));
        }
        self.representation
            .first()
            .map(|&(a, b)| format!("action on H* is not a representation on (H{}, H{})", a + 1, b + 1))
    }
}

/// Matrix of `H_μ` on `H*`: `ρ_μ[σ][ν]` is the `X^σ` coefficient of `[H_μ, X^ν]`.
fn rho(a: &ActionConstants, mu: usize) -> Vec<Vec<Rational>> {
    let d = a.d;
    (0..d).map(|s| (0..d).map(|nu| -a.l(mu, s, nu)).collect()).collect()
}

pub fn validate_action(a: &ActionConstants) -> ActionReport {
    let d = a.d;
    let mut report = ActionReport::default();
    for mu in 0..d {
        for nu in 0..d {
            for s in 0..d {
                let ok = (0..d).all(|r| {
                    let mut lhs = Rational::ZERO;
                    let mut rhs = Rational::ZERO;
                    for k in 0..d {
                        lhs += &(&a.induced_bracket(mu, nu, k) * a.l(k, s, r));
                        rhs += &(a.l(nu, s, k) * a.l(mu, k, r));
                        rhs -= &(a.l(mu, s, k) * a.l(nu, k, r));
                    }
                    lhs == rhs
                });
                if !ok {
                    report.quasi_associativity.push((mu, nu, s));
                }
                if a.has_prescribed_bracket() && a.c(mu, nu, s) != a.induced_bracket(mu, nu, s) {
                    report.bracket_mismatch.push((mu, nu, s));
                }
            }
        }
    }
    report.jacobi = check_jacobi(&h_algebra(a)).violations;
    let rhos: Vec<Vec<Vec<Rational>>> = (0..d).map(|mu| rho(a, mu)).collect();
    for mu in 0..d {
        for nu in (mu + 1)..d {
            let ok = (0..d).all(|i| {
                (0..d).all(|j| {
                    let mut v = Rational::ZERO;
                    for k in 0..d {
                        v += &(&rhos[mu][i][k] * &rhos[nu][k][j]);
                        v -= &(&rhos[nu][i][k] * &rhos[mu][k][j]);
                    }
                    for t in 0..d {
                        v -= &(&a.c(mu, nu, t) * &rhos[t][i][j]);
                    }
                    v.is_zero()
                })
            });
            if !ok {
                report.representation.push((mu, nu));
            }
        }
    }
    report
}

fn h_algebra(a: &ActionConstants) -> LieAlgebraData {
    let d = a.d;
    let c: Vec<Vec<Vec<Rational>>> =
        (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| a.c(i, j, k)).collect()).collect()).collect();
    LieAlgebraData::new(a.names()[..d].to_vec(), c).expect("C is antisymmetric by construction")
}

/// The semidirect sum on `H1…Hd, X1…Xd` with `[H_μ, H_ν] = C^σ_{μν} H_σ`,
/// `[H_μ, X^ν] = −L^ν_{μσ} X^σ` and `[X, X] = 0`, without validating.
pub fn semidirect_unchecked(a: &ActionConstants) -> LieAlgebraData {
    let d = a.d;
    let mut c = vec![vec![vec![Rational::ZERO; 2 * d]; 2 * d]; 2 * d];
    for mu in 0..d {
        for nu in 0..d {
            for s in 0..d {
                c[mu][nu][s] = a.c(mu, nu, s);
                let v = -a.l(mu, s, nu);
                c[mu][d + nu][d + s] = v.clone();
                c[d + nu][mu][d + s] = -v;
            }
        }
    }
    LieAlgebraData::new(a.names(), c).expect("semidirect constants are antisymmetric")
}

pub fn build_semidirect(a: &ActionConstants) -> Result<LieAlgebraData> {
    let report = validate_action(a);
    if !report.holds() {
        return Err(Error::InvalidAction(report.witness().unwrap_or_default()));
    }
    Ok(semidirect_unchecked(a))
}

/// Images of the semidirect basis in the restricted Borel subalgebra under
/// the split used by [`ActionConstants::borel_split`].
pub fn borel_identification(n: usize) -> Vec<Vec<Rational>> {
    let (mut h, x) = borel_split_vectors(n);
    h.extend(x);
    h
}

/// `r = Σ X^ν ∧ H_ν` and its classical Yang–Baxter residual in `U(L)^{⊗3}`.
#[derive(Clone, Debug)]
pub struct InhomClassicalR {
    pub r: WedgeElement,
    pub residual: Tensor3,
    pub names: Vec<String>,
}

impl InhomClassicalR {
    pub fn solves_cybe(&self) -> bool {
        self.residual.is_zero()
    }
}

pub fn classical_r_inhom(a: &ActionConstants) -> InhomClassicalR {
    let g = semidirect_unchecked(a);
    let d = a.d;
    let mut r = WedgeElement::zero(2 * d);
    for nu in 0..d {
        r.add_wedge(&g.basis_vector(d + nu), &g.basis_vector(nu), &Rational::ONE);
    }
    let names = a.names();
    let env = Enveloping::new(g, 0);
    let residual = cybe_residual_uea(&env, &lie_tensor_to_uea(&env, &r.to_tensor(0)));
    InhomClassicalR { r, residual, names }
}

/// Checks that the identification map is a Lie algebra homomorphism from
/// the semidirect sum of [`ActionConstants::borel_split`] onto B∨.
pub fn borel_identification_residual(n: usize) -> Result<Vec<(usize, usize)>> {
    let a = ActionConstants::borel_split(n)?;
    let src = semidirect_unchecked(&a);
    let dst = make_borel_restricted(n)?;
    let images = borel_identification(n);
    let mut bad = Vec::new();
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = dst.bracket(&images[i], &images[j]);
            let mut rhs = vec![Rational::ZERO; dst.dim()];
            for (k, c) in src.bracket_basis(i, j) {
                for (r, v) in rhs.iter_mut().zip(&images[*k]) {
                    *r += &(c * v);
                }
            }
            if lhs != rhs {
                bad.push((i, j));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests;
