//! Truncated power series in `d` commuting variables and the cocycle maps
//! `φ`, `ψ` built from them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use smallvec::SmallVec;

use super::ActionConstants;
use crate::scalars::Rational;
use crate::uea::{Enveloping, Tensor};

pub type Exponents = SmallVec<[u8; 8]>;

/// A polynomial in `d` commuting variables, truncated above total degree
/// `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    d: usize,
    degree: usize,
    terms: BTreeMap<Exponents, Rational>,
}

fn total(e: &Exponents) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

impl Poly {
    pub fn zero(d: usize, degree: usize) -> Self {
        Poly { d, degree, terms: BTreeMap::new() }
    }

    pub fn constant(d: usize, degree: usize, c: Rational) -> Self {
        let mut p = Poly::zero(d, degree);
        p.add_term(SmallVec::from_elem(0, d), c);
        p
    }

    /// The coordinate `t^i`.
    pub fn var(d: usize, degree: usize, i: usize) -> Self {
        let mut e: Exponents = SmallVec::from_elem(0, d);
        e[i] = 1;
        let mut p = Poly::zero(d, degree);
        p.add_term(e, Rational::ONE);
        p
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u8]) -> Rational {
        self.terms.get(e).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() || total(&e) > self.degree {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert(Rational::ZERO);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, r: &Rational) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * r);
        }
    }

    pub fn scale(&self, r: &Rational) -> Poly {
        let mut p = Poly::zero(self.d, self.degree);
        p.add_scaled(self, r);
        p
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero(self.d, self.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if total(a) + total(b) > self.degree {
                    continue;
                }
                let e: Exponents = a.iter().zip(b.iter()).map(|(u, v)| u + v).collect();
                p.add_term(e, x * y);
            }
        }
        p
    }

    /// Part of total degree exactly `k`.
    pub fn homogeneous(&self, k: usize) -> Poly {
        let mut p = Poly::zero(self.d, self.degree);
        for (e, c) in &self.terms {
            if total(e) == k {
                p.add_term(e.clone(), c.clone());
            }
        }
        p
    }

    /// `p(q_1, …, q_d)` for polynomials `q_i` without constant term.
    pub fn compose(&self, args: &[Poly]) -> Poly {
        let degree = args.first().map_or(self.degree, |a| a.degree);
        let d = args.first().map_or(self.d, |a| a.d);
        let mut out = Poly::zero(d, degree);
        let mut powers: Vec<Vec<Poly>> = args.iter().map(|a| vec![Poly::constant(d, degree, Rational::ONE), a.clone()]).collect();
        for (e, c) in &self.terms {
            let mut m = Poly::constant(d, degree, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&args[i]);
                    powers[i].push(next);
                }
                m = m.mul(&powers[i][k as usize]);
            }
            out.add_scaled(&m, &Rational::ONE);
        }
        out
    }

    /// Evaluates on pairwise commuting elements of an enveloping algebra (or
    /// a tensor power of it).
    pub fn evaluate<const R: usize>(&self, env: &Enveloping, args: &[Tensor<R>]) -> Tensor<R> {
        let mut out: Tensor<R> = env.zero();
        let mut powers: Vec<Vec<Tensor<R>>> = args.iter().map(|a| vec![env.one(), a.clone()]).collect();
        for (e, c) in &self.terms {
            let mut m: Tensor<R> = env.one();
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = env.mul(powers[i].last().unwrap(), &args[i]);
                    powers[i].push(next);
                }
                if k > 0 {
                    m = env.mul(&m, &powers[i][k as usize]);
                }
            }
            out.add_scaled(&m, c);
        }
        out
    }

    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mut s = format!("{}", c);
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => s.push_str(&format!(" {}{}", var, i + 1)),
                    _ => s.push_str(&format!(" {}{}^{}", var, i + 1, k)),
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

/// A map `H → H` in coordinates: one truncated series per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleSeries {
    pub components: Vec<Poly>,
}

impl CocycleSeries {
    pub fn identity(d: usize, degree: usize) -> Self {
        CocycleSeries { components: (0..d).map(|i| Poly::var(d, degree, i)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn degree(&self) -> usize {
        self.components.first().map_or(0, |p| p.degree)
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &CocycleSeries) -> CocycleSeries {
        CocycleSeries { components: self.components.iter().map(|p| p.compose(&inner.components)).collect() }
    }

    pub fn evaluate<const R: usize>(&self, env: &Enveloping, args: &[Tensor<R>]) -> Vec<Tensor<R>> {
        self.components.iter().map(|p| p.evaluate(env, args)).collect()
    }

    /// Compositional inverse, assuming the linear part is the identity:
    /// `ψ = t − (φ − t)∘ψ`, solved degree by degree.
    pub fn inverse(&self) -> CocycleSeries {
        let d = self.dim();
        let k = self.degree();
        let id = CocycleSeries::identity(d, k);
        let nonlinear: Vec<Poly> = self
            .components
            .iter()
            .zip(&id.components)
            .map(|(p, t)| {
                let mut q = p.clone();
                q.add_scaled(t, &-Rational::ONE);
                q
            })
            .collect();
        let nonlinear = CocycleSeries { components: nonlinear };
        let mut psi = id.clone();
        for _ in 1..k {
            let corr = nonlinear.compose(&psi);
            psi = CocycleSeries {
                components: id
                    .components
                    .iter()
                    .zip(&corr.components)
                    .map(|(t, c)| {
                        let mut q = t.clone();
                        q.add_scaled(c, &-Rational::ONE);
                        q
                    })
                    .collect(),
            };
        }
        psi
    }

    pub fn is_identity(&self) -> bool {
        *self == CocycleSeries::identity(self.dim(), self.degree())
    }
}

/// `L(t)^μ_ν = L^μ_{σν} t^σ`, the matrix of `t ▷ ·` with linear entries.
fn action_matrix(a: &ActionConstants, degree: usize) -> Vec<Vec<Poly>> {
    let d = a.dim();
    (0..d)
        .map(|mu| {
            (0..d)
                .map(|nu| {
                    let mut p = Poly::zero(d, degree);
                    for s in 0..d {
                        let mut e: Exponents = SmallVec::from_elem(0, d);
                        e[s] = 1;
                        p.add_term(e, a.l(s, nu, mu).clone());
                    }
                    p
                })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let d = a.len();
    let degree = a[0][0].degree;
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut p = Poly::zero(d, degree);
                    for k in 0..d {
                        p.add_scaled(&a[i][k].mul(&b[k][j]), &Rational::ONE);
                    }
                    p
                })
                .collect()
        })
        .collect()
}

fn mat_vec(m: &[Vec<Poly>], v: &[Poly]) -> Vec<Poly> {
    m.iter()
        .map(|row| {
            let mut p = Poly::zero(v[0].d, v[0].degree);
            for (a, b) in row.iter().zip(v) {
                p.add_scaled(&a.mul(b), &Rational::ONE);
            }
            p
        })
        .collect()
}

/// `φ(t) = Σ_k (−L(t))^k / (k+1)! · t` and its compositional inverse `ψ`,
/// both truncated above total degree `degree`.
pub fn phi_psi(a: &ActionConstants, degree: usize) -> (CocycleSeries, CocycleSeries) {
    let d = a.dim();
    let t = CocycleSeries::identity(d, degree).components;
    let minus_l: Vec<Vec<Poly>> =
        action_matrix(a, degree).into_iter().map(|row| row.into_iter().map(|p| p.scale(&-Rational::ONE)).collect()).collect();
    let mut term = t.clone();
    let mut phi = t.clone();
    for k in 1..degree {
        term = mat_vec(&minus_l, &term);
        let w = Rational::inv_factorial(k as u32 + 1);
        for (p, q) in phi.iter_mut().zip(&term) {
            p.add_scaled(q, &w);
        }
    }
    let phi = CocycleSeries { components: phi };
    let psi = phi.inverse();
    (phi, psi)
}

/// `H_e` with `H_μ ▷ H_e = H_μ` for every `μ`, if one exists.
pub fn right_unity(a: &ActionConstants) -> Option<Vec<Rational>> {
    let d = a.dim();
    // rows (μ, ρ): Σ_ν L^ρ_{μν} e^ν = δ_μρ
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for mu in 0..d {
        for rho in 0..d {
            let mut row: Vec<Rational> = (0..d).map(|nu| a.l(mu, nu, rho).clone()).collect();
            row.push(if mu == rho { Rational::ONE } else { Rational::ZERO });
            rows.push(row);
        }
    }
    solve_system(rows, d)
}

/// Solves an overdetermined but consistent linear system given as augmented
/// rows; `None` if inconsistent or underdetermined.
pub(crate) fn solve_system(mut rows: Vec<Vec<Rational>>, n: usize) -> Option<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for c in 0..=n {
                    let v = &f * &rows[r][c];
                    rows[i][c] -= &v;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) || pivots.len() < n {
        return None;
    }
    let mut x = vec![Rational::ZERO; n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][n].clone();
    }
    Some(x)
}

/// The coboundary form `φ(t) = (1 − e^{−L(t)}) t_e` for an action with a
/// right unity `H_e = t_e^ν H_ν`.
pub fn phi_coboundary(a: &ActionConstants, degree: usize) -> Option<CocycleSeries> {
    let unit = right_unity(a)?;
    let d = a.dim();
    let minus_l: Vec<Vec<Poly>> =
        action_matrix(a, degree).into_iter().map(|row| row.into_iter().map(|p| p.scale(&-Rational::ONE)).collect()).collect();
    let unit: Vec<Poly> = unit.into_iter().map(|u| Poly::constant(d, degree, u)).collect();
    let mut out: Vec<Poly> = (0..d).map(|_| Poly::zero(d, degree)).collect();
    let mut power = minus_l.clone();
    for k in 1..=degree {
        if k > 1 {
            power = mat_mul(&power, &minus_l);
        }
        let w = -Rational::inv_factorial(k as u32);
        for (p, q) in out.iter_mut().zip(&mat_vec(&power, &unit)) {
            p.add_scaled(q, &w);
        }
    }
    Some(CocycleSeries { components: out })
}
