//! The quantum space of the twisted gl(N) symmetry: coordinates and
//! derivatives with the twisted (star) product.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use hashbrown::HashMap;
use smallvec::SmallVec;

use crate::error::Result;
use crate::liealg::{borel_embedding, gl_index};
use crate::scalars::{Rational, XiSeries};
use crate::twist::canonical_realization;
use crate::uea::{swap, Monomial, Tensor2};

/// `x^{a_1} ⋯ x^{a_N} ∂_1^{b_1} ⋯ ∂_N^{b_N}`: exponents of the coordinates
/// followed by those of the derivatives.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylMonomial(SmallVec<[u8; 8]>);

impl WeylMonomial {
    pub fn one(n: usize) -> Self {
        WeylMonomial(core::iter::repeat(0).take(2 * n).collect())
    }

    pub fn from_exponents(x: &[u8], d: &[u8]) -> Self {
        assert_eq!(x.len(), d.len());
        WeylMonomial(x.iter().chain(d).copied().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len() / 2
    }

    pub fn x(&self) -> &[u8] {
        &self.0[..self.n()]
    }

    pub fn d(&self) -> &[u8] {
        &self.0[self.n()..]
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }
}

/// A polynomial in coordinates and derivatives, coordinates to the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    n: usize,
    order: usize,
    terms: BTreeMap<WeylMonomial, XiSeries>,
}

impl WeylElement {
    pub fn zero(n: usize, order: usize) -> Self {
        WeylElement { n, order, terms: BTreeMap::new() }
    }

    pub fn scalar(n: usize, s: XiSeries) -> Self {
        let order = s.order();
        let mut e = Self::zero(n, order);
        e.add_term(WeylMonomial::one(n), s);
        e
    }

    pub fn one(n: usize, order: usize) -> Self {
        Self::scalar(n, XiSeries::one(order))
    }

    pub fn monomial(m: WeylMonomial, c: XiSeries) -> Self {
        let mut e = Self::zero(m.n(), c.order());
        e.add_term(m, c);
        e
    }

    /// The coordinate `x^μ`, `μ = 1..N`.
    pub fn coordinate(n: usize, mu: usize, order: usize) -> Self {
        let mut x = vec![0u8; n];
        x[mu - 1] = 1;
        Self::monomial(WeylMonomial::from_exponents(&x, &vec![0u8; n]), XiSeries::one(order))
    }

    /// The derivative `∂_μ`, `μ = 1..N`.
    pub fn derivative(n: usize, mu: usize, order: usize) -> Self {
        let mut d = vec![0u8; n];
        d[mu - 1] = 1;
        Self::monomial(WeylMonomial::from_exponents(&vec![0u8; n], &d), XiSeries::one(order))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeylMonomial, &XiSeries)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: WeylMonomial, c: XiSeries) {
        assert_eq!(c.order(), self.order, "truncation order mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &XiSeries) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn scale_series(&self, s: &XiSeries) -> Self {
        let mut out = Self::zero(self.n, self.order);
        out.add_scaled(self, s);
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "({})", c);
            if m.degree() == 0 {
                continue;
            }
            s.push_str(" ·");
            for (i, &e) in m.x().iter().enumerate() {
                if e > 0 {
                    let _ = write!(s, " x{}", i + 1);
                    if e > 1 {
                        let _ = write!(s, "^{}", e);
                    }
                }
            }
            for (i, &e) in m.d().iter().enumerate() {
                if e > 0 {
                    let _ = write!(s, " d{}", i + 1);
                    if e > 1 {
                        let _ = write!(s, "^{}", e);
                    }
                }
            }
        }
        s
    }
}

impl core::ops::Add<&WeylElement> for &WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &XiSeries::one(self.order));
        out
    }
}

impl core::ops::Sub<&WeylElement> for &WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &XiSeries::constant(-Rational::ONE, self.order));
        out
    }
}

/// Which product the coordinates and derivatives obey classically.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Calculus {
    /// `[∂_μ, x^ν] = δ_μ^ν`
    Weyl,
    /// Everything commutes (momenta `p_μ` in place of `∂_μ`).
    Commutative,
}

fn falling(b: u32, k: u32) -> Rational {
    let mut r = Rational::ONE;
    for i in 0..k {
        r = &r * &Rational::from_integer((b - i) as i64);
    }
    r
}

/// The classical product of two normal-ordered monomials.
pub fn monomial_product(calc: Calculus, a: &WeylMonomial, b: &WeylMonomial) -> Vec<(WeylMonomial, Rational)> {
    let n = a.n();
    let mut out: Vec<(WeylMonomial, Rational)> = Vec::new();
    // ∂_μ^β x^γ = Σ_κ C(β, κ) γ!/(γ−κ)! x^{γ−κ} ∂^{β−κ}, independently per μ
    let mut options: Vec<Vec<(u8, Rational)>> = Vec::with_capacity(n);
    for mu in 0..n {
        let (beta, gamma) = (a.d()[mu] as u32, b.x()[mu] as u32);
        let top = if calc == Calculus::Weyl { beta.min(gamma) } else { 0 };
        options.push((0..=top).map(|k| (k as u8, &Rational::binomial(beta, k) * &falling(gamma, k))).collect());
    }
    let mut idx = vec![0usize; n];
    loop {
        let mut e: SmallVec<[u8; 8]> = SmallVec::with_capacity(2 * n);
        let mut c = Rational::ONE;
        for mu in 0..n {
            let (k, w) = &options[mu][idx[mu]];
            c = &c * w;
            e.push(a.x()[mu] + b.x()[mu] - k);
        }
        for mu in 0..n {
            let (k, _) = &options[mu][idx[mu]];
            e.push(a.d()[mu] + b.d()[mu] - k);
        }
        out.push((WeylMonomial(e), c));
        let mut mu = n;
        loop {
            if mu == 0 {
                return out;
            }
            mu -= 1;
            idx[mu] += 1;
            if idx[mu] < options[mu].len() {
                break;
            }
            idx[mu] = 0;
        }
    }
}

pub fn product(calc: Calculus, a: &WeylElement, b: &WeylElement) -> WeylElement {
    let mut out = WeylElement::zero(a.n, a.order);
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let c = ca * cb;
            if c.is_zero() {
                continue;
            }
            for (m, w) in monomial_product(calc, ma, mb) {
                out.add_term(m, c.scale(&w));
            }
        }
    }
    out
}

/// How gl(N) acts on coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realization {
    /// `E_ij ↦ x^i ∂_j`
    VectorFields,
    /// `E_ij ↦ −x^j ∂_i`, the contragredient vector fields.
    Contragredient,
}

/// `E_ij` acting as a derivation: the image of the generators `x^k`, `∂_k`
/// (0-based `i`, `j`) as sparse lists of `(generator slot, coefficient)`
/// where slots `0..N` are coordinates and `N..2N` derivatives.
fn generator_images(n: usize, real: Realization, i: usize, j: usize) -> Vec<Vec<(usize, Rational)>> {
    let mut images = vec![Vec::new(); 2 * n];
    match real {
        Realization::VectorFields => {
            images[j].push((i, Rational::ONE));
            images[n + i].push((n + j, -Rational::ONE));
        }
        Realization::Contragredient => {
            images[i].push((j, -Rational::ONE));
            images[n + j].push((n + i, Rational::ONE));
        }
    }
    images
}

/// A derivation of the coordinate–derivative algebra given by its values on
/// generators.
#[derive(Clone, Debug)]
pub struct Derivation {
    images: Vec<Vec<(usize, Rational)>>,
}

impl Derivation {
    fn combine(n: usize, parts: &[(Derivation, Rational)]) -> Self {
        let mut images: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); 2 * n];
        for (d, w) in parts {
            for (slot, list) in d.images.iter().enumerate() {
                for (t, c) in list {
                    *images[slot].entry(*t).or_insert(Rational::ZERO) += &(c * w);
                }
            }
        }
        Derivation {
            images: images
                .into_iter()
                .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
                .collect(),
        }
    }

    /// Applies the derivation to a monomial; generator images never mix
    /// coordinates with derivatives, so the result stays normal-ordered.
    fn apply_monomial(&self, m: &WeylMonomial) -> Vec<(WeylMonomial, Rational)> {
        let mut out = Vec::new();
        for (slot, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            for (t, c) in &self.images[slot] {
                let mut k = m.0.clone();
                k[slot] -= 1;
                k[*t] += 1;
                out.push((WeylMonomial(k), c * &Rational::from_integer(e as i64)));
            }
        }
        out
    }
}

/// The action of an enveloping algebra on the coordinate–derivative
/// algebra, given by one derivation per basis element.
pub struct ModuleAction {
    n: usize,
    order: usize,
    generators: Vec<Derivation>,
}

impl ModuleAction {
    /// gl(N) basis.
    pub fn gl(n: usize, order: usize, real: Realization) -> Self {
        let mut generators = vec![Derivation { images: Vec::new() }; n * n];
        for i in 1..=n {
            for j in 1..=n {
                generators[gl_index(n, i, j)] = Derivation { images: generator_images(n, real, i - 1, j - 1) };
            }
        }
        ModuleAction { n, order, generators }
    }

    /// Restricted Borel basis, through its embedding into gl(N).
    pub fn borel(n: usize, order: usize, real: Realization) -> Result<Self> {
        let gl = Self::gl(n, order, real);
        let generators = borel_embedding(n)?
            .iter()
            .map(|v| {
                let parts: Vec<(Derivation, Rational)> =
                    v.iter().map(|(k, c)| (gl.generators[*k].clone(), c.clone())).collect();
                Derivation::combine(n, &parts)
            })
            .collect();
        Ok(ModuleAction { n, order, generators })
    }

    pub fn apply_generator(&self, i: usize, f: &WeylElement) -> WeylElement {
        let mut out = WeylElement::zero(self.n, f.order);
        for (m, c) in &f.terms {
            for (u, w) in self.generators[i].apply_monomial(m) {
                out.add_term(u, c.scale(&w));
            }
        }
        out
    }

    /// A PBW monomial acts by composing its letters, rightmost first.
    pub fn apply_monomial(&self, m: &Monomial, f: &WeylElement) -> WeylElement {
        let letters: Vec<usize> = m.letters().collect();
        let mut acc = f.clone();
        for &i in letters.iter().rev() {
            acc = self.apply_generator(i, &acc);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn apply(&self, a: &crate::uea::UeaElement, f: &WeylElement) -> WeylElement {
        let mut out = WeylElement::zero(self.n, self.order);
        for ([m], c) in a.iter() {
            out.add_scaled(&self.apply_monomial(m, f), c);
        }
        out
    }
}

/// The twisted product `f * g = T₍₁₎(f) · T₍₂₎(g)` for a fixed two-leg
/// element `T`.
pub struct StarAlgebra {
    pub n: usize,
    pub order: usize,
    pub calculus: Calculus,
    action: ModuleAction,
    element: Tensor2,
}

impl StarAlgebra {
    pub fn new(n: usize, order: usize, calculus: Calculus, action: ModuleAction, element: Tensor2) -> Self {
        StarAlgebra { n, order, calculus, action, element }
    }

    pub fn star(&self, f: &WeylElement, g: &WeylElement) -> WeylElement {
        let mut left: HashMap<&Monomial, WeylElement> = HashMap::new();
        let mut right: HashMap<&Monomial, WeylElement> = HashMap::new();
        let mut out = WeylElement::zero(self.n, self.order);
        for ([a, b], c) in self.element.iter() {
            let fa = left.entry(a).or_insert_with(|| self.action.apply_monomial(a, f));
            if fa.is_zero() {
                continue;
            }
            let fa = fa.clone();
            let gb = right.entry(b).or_insert_with(|| self.action.apply_monomial(b, g));
            if gb.is_zero() {
                continue;
            }
            out.add_scaled(&product(self.calculus, &fa, gb), c);
        }
        out
    }

    /// `f * g − g * f`
    pub fn commutator(&self, f: &WeylElement, g: &WeylElement) -> WeylElement {
        &self.star(f, g) - &self.star(g, f)
    }

    pub fn classical(&self, f: &WeylElement, g: &WeylElement) -> WeylElement {
        product(self.calculus, f, g)
    }
}

/// `E_ij · f` for a single gl(N) generator (1-based labels) acting as a
/// derivation.
pub fn weyl_action(real: Realization, i: usize, j: usize, f: &WeylElement) -> WeylElement {
    let d = Derivation { images: generator_images(f.n, real, i - 1, j - 1) };
    let mut out = WeylElement::zero(f.n, f.order);
    for (m, c) in &f.terms {
        for (u, w) in d.apply_monomial(m) {
            out.add_term(u, c.scale(&w));
        }
    }
    out
}

impl StarAlgebra {
    /// The quantum space of the canonical twist: coordinates carry the
    /// contragredient action and the product is
    /// `f * g = F⁻¹₍₂₎(f) · F⁻¹₍₁₎(g)`, the twisted product for `F₂₁`.
    pub fn canonical(n: usize, order: usize, calculus: Calculus) -> Result<Self> {
        let r = canonical_realization(n, order)?;
        let element = swap(&r.env.invert(&r.extended()?)?);
        Ok(StarAlgebra::new(n, order, calculus, ModuleAction::borel(n, order, Realization::Contragredient)?, element))
    }

    pub fn action(&self) -> &ModuleAction {
        &self.action
    }

    pub fn element(&self) -> &Tensor2 {
        &self.element
    }

    /// `Σ (h₍₁₎ · f) * (h₍₂₎ · g)` for a two-leg element `Δ(h)`.
    pub fn split_action(&self, delta: &Tensor2, f: &WeylElement, g: &WeylElement) -> WeylElement {
        let mut out = WeylElement::zero(self.n, self.order);
        for ([a, b], c) in delta.iter() {
            let fa = self.action.apply_monomial(a, f);
            let gb = self.action.apply_monomial(b, g);
            if !fa.is_zero() && !gb.is_zero() {
                out.add_scaled(&self.star(&fa, &gb), c);
            }
        }
        out
    }
}

/// One displayed relation `lhs = rhs` and the residual `lhs − rhs`.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub table: &'static str,
    pub relation: String,
    pub residual: WeylElement,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }

    /// True when the residual only has terms above `ξ^1`.
    pub fn holds_to_first_order(&self) -> bool {
        self.residual.iter().all(|(_, c)| c.coeff(0).is_zero() && (c.order() < 1 || c.coeff(1).is_zero()))
    }
}

struct Relations<'a> {
    s: &'a StarAlgebra,
    out: Vec<RelationCheck>,
}

impl<'a> Relations<'a> {
    fn x(&self, mu: usize) -> WeylElement {
        WeylElement::coordinate(self.s.n, mu, self.s.order)
    }

    fn d(&self, mu: usize) -> WeylElement {
        WeylElement::derivative(self.s.n, mu, self.s.order)
    }

    fn xi(&self, c: i64) -> XiSeries {
        XiSeries::monomial(Rational::from_integer(c), 1, self.s.order)
    }

    fn push(&mut self, table: &'static str, relation: String, lhs: WeylElement, rhs: WeylElement) {
        self.out.push(RelationCheck { table, relation, residual: &lhs - &rhs });
    }
}

/// Every displayed relation of the quantum space: coordinates, momenta,
/// the invariant element, coordinate–momentum and coordinate–derivative
/// commutators. Indices `i`, `k` run over `2..N−1`.
pub fn check_qspace_relations(n: usize, order: usize) -> Result<Vec<RelationCheck>> {
    if n < 2 {
        return Err(crate::error::Error::InvalidDimension { what: "N", got: n, min: 2 });
    }
    let comm = StarAlgebra::canonical(n, order, Calculus::Commutative)?;
    let weyl = StarAlgebra::canonical(n, order, Calculus::Weyl)?;
    let mut out = Vec::new();
    momentum_tables(&comm, n, &mut out);
    derivative_table(&weyl, n, &mut out);
    Ok(out)
}

fn momentum_tables(s: &StarAlgebra, n: usize, out: &mut Vec<RelationCheck>) {
    let mut r = Relations { s, out: Vec::new() };
    let zero = WeylElement::zero(n, s.order);
    let mids = 2..n;
    let (x, p) = (|r: &Relations, m| r.x(m), |r: &Relations, m| r.d(m));

    let lhs = s.commutator(&x(&r, 1), &x(&r, n));
    let rhs = s.star(&x(&r, n), &x(&r, n)).scale_series(&r.xi(1));
    r.push("coordinates", format!("[x1, x{n}] = ξ x{n} * x{n}"), lhs, rhs);
    for i in mids.clone() {
        for k in (i + 1)..n {
            let lhs = s.commutator(&x(&r, i), &x(&r, k));
            r.push("coordinates", format!("[x{i}, x{k}] = 0"), lhs, zero.clone());
        }
    }
    for k in mids.clone() {
        let lhs = s.commutator(&x(&r, 1), &x(&r, k));
        let rhs = s.star(&x(&r, k), &x(&r, n)).scale_series(&r.xi(2));
        r.push("coordinates", format!("[x1, x{k}] = 2ξ x{k} * x{n}"), lhs, rhs);
        let lhs = s.commutator(&x(&r, k), &x(&r, n));
        r.push("coordinates", format!("[x{k}, x{n}] = 0"), lhs, zero.clone());
    }

    let lhs = s.commutator(&p(&r, 1), &p(&r, n));
    let rhs = s.star(&p(&r, 1), &p(&r, 1)).scale_series(&r.xi(1));
    r.push("momenta", format!("[p1, p{n}] = ξ p1 * p1"), lhs, rhs);
    for i in mids.clone() {
        for k in (i + 1)..n {
            let lhs = s.commutator(&p(&r, i), &p(&r, k));
            r.push("momenta", format!("[p{i}, p{k}] = 0"), lhs, zero.clone());
        }
    }
    for k in mids.clone() {
        let lhs = s.commutator(&p(&r, k), &p(&r, n));
        let rhs = s.star(&p(&r, 1), &p(&r, k)).scale_series(&r.xi(2));
        r.push("momenta", format!("[p{k}, p{n}] = 2ξ p1 * p{k}"), lhs, rhs);
        let lhs = s.commutator(&p(&r, 1), &p(&r, k));
        r.push("momenta", format!("[p1, p{k}] = 0"), lhs, zero.clone());
    }

    let mut classical = zero.clone();
    let mut starred = zero.clone();
    for mu in 1..=n {
        classical = &classical + &s.classical(&x(&r, mu), &p(&r, mu));
        starred = &starred + &s.star(&x(&r, mu), &p(&r, mu));
    }
    let rhs = &starred + &s.star(&x(&r, n), &p(&r, 1)).scale_series(&r.xi(1));
    r.push("invariant element", format!("x^μ · p_μ = x^μ * p_μ + ξ x{n} * p1"), classical, rhs);

    let lhs = s.commutator(&p(&r, n), &x(&r, 1));
    let mut inner = s.star(&p(&r, n), &x(&r, n));
    for k in mids.clone() {
        inner.add_scaled(&s.star(&p(&r, k), &x(&r, k)), &XiSeries::constant(Rational::from_integer(2), s.order));
    }
    inner = &inner + &s.star(&p(&r, 1), &x(&r, 1));
    inner = &inner + &s.star(&p(&r, 1), &x(&r, n)).scale_series(&r.xi(1));
    r.push(
        "coordinate–momentum",
        format!("[p{n}, x1] = ξ (p{n} * x{n} + 2 Σ_k p_k * x^k + p1 * x1 + ξ p1 * x{n})"),
        lhs,
        inner.scale_series(&r.xi(1)),
    );
    let p1xn = s.star(&p(&r, 1), &x(&r, n));
    let lhs = s.commutator(&p(&r, 1), &x(&r, 1));
    r.push("coordinate–momentum", format!("[p1, x1] = −ξ p1 * x{n}"), lhs, p1xn.scale_series(&r.xi(-1)));
    for k in mids.clone() {
        let lhs = s.commutator(&p(&r, k), &x(&r, k));
        r.push("coordinate–momentum", format!("[p{k}, x{k}] = −2ξ p1 * x{n}"), lhs, p1xn.scale_series(&r.xi(-2)));
    }
    let lhs = s.commutator(&p(&r, n), &x(&r, n));
    r.push("coordinate–momentum", format!("[p{n}, x{n}] = −ξ p1 * x{n}"), lhs, p1xn.scale_series(&r.xi(-1)));
    let mut rest = zero.clone();
    for a in 1..=n {
        for b in 1..=n {
            let listed = (a == n && b == 1) || a == b;
            if !listed {
                let c = s.commutator(&p(&r, a), &x(&r, b));
                rest = &rest + &c;
                if !c.is_zero() {
                    r.push("coordinate–momentum", format!("[p{a}, x{b}] = 0"), c, zero.clone());
                }
            }
        }
    }
    if rest.is_zero() {
        r.push("coordinate–momentum", String::from("remaining [p_μ, x^ν] = 0"), rest, zero.clone());
    }
    out.extend(r.out);
}

fn derivative_table(s: &StarAlgebra, n: usize, out: &mut Vec<RelationCheck>) {
    let mut r = Relations { s, out: Vec::new() };
    let zero = WeylElement::zero(n, s.order);
    let one = WeylElement::one(n, s.order);
    let (x, d) = (|r: &Relations, m| r.x(m), |r: &Relations, m| r.d(m));

    let lhs = s.commutator(&d(&r, 1), &d(&r, n));
    let rhs = s.star(&d(&r, 1), &d(&r, 1)).scale_series(&r.xi(1));
    r.push("derivatives", format!("[∂1, ∂{n}] = ξ ∂1 * ∂1"), lhs, rhs);
    for k in 2..n {
        let lhs = s.commutator(&d(&r, k), &d(&r, n));
        let rhs = s.star(&d(&r, 1), &d(&r, k)).scale_series(&r.xi(2));
        r.push("derivatives", format!("[∂{k}, ∂{n}] = 2ξ ∂1 * ∂{k}"), lhs, rhs);
        let lhs = s.commutator(&d(&r, 1), &d(&r, k));
        r.push("derivatives", format!("[∂1, ∂{k}] = 0"), lhs, zero.clone());
        for i in (k + 1)..n {
            let lhs = s.commutator(&d(&r, k), &d(&r, i));
            r.push("derivatives", format!("[∂{k}, ∂{i}] = 0"), lhs, zero.clone());
        }
    }

    let lhs = s.commutator(&d(&r, n), &x(&r, 1));
    let mut inner = s.star(&x(&r, n), &d(&r, n));
    for k in 2..n {
        inner.add_scaled(&s.star(&x(&r, k), &d(&r, k)), &XiSeries::constant(Rational::from_integer(2), s.order));
    }
    inner = &inner + &s.star(&x(&r, 1), &d(&r, 1));
    inner = &inner + &s.star(&x(&r, n), &d(&r, 1)).scale_series(&r.xi(1));
    r.push(
        "coordinate–derivative",
        format!("[∂{n}, x1] = ξ (x{n} * ∂{n} + 2 Σ_k x^k * ∂_k + x1 * ∂1 + ξ x{n} * ∂1)"),
        lhs,
        inner.scale_series(&r.xi(1)),
    );
    let xnd1 = s.star(&x(&r, n), &d(&r, 1));
    let lhs = s.commutator(&d(&r, 1), &x(&r, 1));
    r.push("coordinate–derivative", format!("[∂1, x1] = 1 − ξ x{n} * ∂1"), lhs, &one + &xnd1.scale_series(&r.xi(-1)));
    for k in 2..n {
        let lhs = s.commutator(&d(&r, k), &x(&r, k));
        r.push("coordinate–derivative", format!("[∂{k}, x{k}] = 1 + 2ξ x{n} * ∂1"), lhs, &one + &xnd1.scale_series(&r.xi(2)));
    }
    let lhs = s.commutator(&d(&r, n), &x(&r, n));
    r.push("coordinate–derivative", format!("[∂{n}, x{n}] = 1 − ξ x{n} * ∂1"), lhs, &one + &xnd1.scale_series(&r.xi(-1)));
    out.extend(r.out);
}

#[cfg(test)]
mod tests;
