use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;
use core::ops::{Add, Neg, Sub};

use hashbrown::HashMap;

use super::Monomial;
use crate::scalars::{Rational, XiSeries};

/// An element of `U(g)^{⊗R}[[ξ]] / ξ^{K+1}`: a finitely supported map from
/// `R`-tuples of PBW monomials to ξ-series. Zero coefficients are never
/// stored, so structural equality is equality of elements.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor<const R: usize> {
    dim: usize,
    order: usize,
    terms: HashMap<[Monomial; R], XiSeries>,
}

/// An element of the enveloping algebra itself.
pub type UeaElement = Tensor<1>;
pub type Tensor2 = Tensor<2>;
pub type Tensor3 = Tensor<3>;

impl<const R: usize> Tensor<R> {
    pub fn zero(dim: usize, order: usize) -> Self {
        Tensor { dim, order, terms: HashMap::new() }
    }

    pub fn one(dim: usize, order: usize) -> Self {
        Self::scalar(XiSeries::one(order), dim)
    }

    pub fn scalar(s: XiSeries, dim: usize) -> Self {
        let mut t = Self::zero(dim, s.order());
        t.add_term(core::array::from_fn(|_| Monomial::one(dim)), s);
        t
    }

    pub fn from_term(key: [Monomial; R], c: XiSeries, dim: usize) -> Self {
        let mut t = Self::zero(dim, c.order());
        t.add_term(key, c);
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[Monomial; R], &XiSeries)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[Monomial; R]) -> Option<&XiSeries> {
        self.terms.get(key)
    }

    pub fn unit_key(&self) -> [Monomial; R] {
        core::array::from_fn(|_| Monomial::one(self.dim))
    }

    /// Coefficient of `1 ⊗ ⋯ ⊗ 1`.
    pub fn scalar_part(&self) -> XiSeries {
        self.terms
            .get(&self.unit_key())
            .cloned()
            .unwrap_or_else(|| XiSeries::zero(self.order))
    }

    pub fn add_term(&mut self, key: [Monomial; R], c: XiSeries) {
        assert_eq!(c.order(), self.order, "series order mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            hashbrown::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            hashbrown::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// `self += r · c · key`
    pub fn add_scaled_term(&mut self, key: [Monomial; R], c: &XiSeries, r: &Rational) {
        if r.is_zero() || c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            hashbrown::hash_map::Entry::Occupied(mut e) => {
                e.get_mut().add_scaled(c, r);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            hashbrown::hash_map::Entry::Vacant(e) => {
                e.insert(c.scale(r));
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, r: &Rational) {
        self.check(other);
        for (k, c) in other.iter() {
            self.add_scaled_term(k.clone(), c, r);
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut t = Self::zero(self.dim, self.order);
        t.add_scaled(self, r);
        t
    }

    /// Multiplies every coefficient by a ξ-series.
    pub fn scale_series(&self, s: &XiSeries) -> Self {
        let mut t = Self::zero(self.dim, self.order);
        for (k, c) in self.iter() {
            t.add_term(k.clone(), c * s);
        }
        t
    }

    /// Least ξ-order among the coefficients (`K + 1` for zero).
    pub fn valuation(&self) -> usize {
        self.terms.values().map(XiSeries::valuation).min().unwrap_or(self.order + 1)
    }

    /// True when no coefficient has a ξ⁰ part.
    pub fn is_xi_positive(&self) -> bool {
        self.valuation() >= 1
    }

    /// The part of the element at ξ-order `k`, as rational coefficients.
    pub fn xi_coefficient(&self, k: usize) -> Vec<([Monomial; R], Rational)> {
        let mut out: Vec<_> = self
            .iter()
            .filter(|(_, c)| k <= self.order && !c.coeff(k).is_zero())
            .map(|(m, c)| (m.clone(), c.coeff(k).clone()))
            .collect();
        out.sort_by(|a, b| key_order(&a.0, &b.0));
        out
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order);
        let mut t = Self::zero(self.dim, order);
        for (k, c) in self.iter() {
            t.add_term(k.clone(), c.truncate(order));
        }
        t
    }

    /// Applies a leg permutation: leg `i` of the output is leg `perm[i]` of
    /// the input.
    pub fn permute(&self, perm: [usize; R]) -> Self {
        let mut t = Self::zero(self.dim, self.order);
        for (k, c) in self.iter() {
            t.add_term(core::array::from_fn(|i| k[perm[i]].clone()), c.clone());
        }
        t
    }

    /// Terms in a deterministic order (by ξ-valuation, then by legs).
    pub fn sorted_terms(&self) -> Vec<(&[Monomial; R], &XiSeries)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_by(|a, b| key_order(a.0, b.0));
        v
    }

    /// Renders as `Σ coeff · m₁ ⊗ m₂ …`, terms in deterministic order.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, (k, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            render_term(&mut s, k, c, names);
        }
        s
    }

    /// The lowest-order nonzero term, rendered as `c ξ^k · m₁ ⊗ …`; used as
    /// the witness of a nonvanishing residual.
    pub fn witness(&self, names: &[String]) -> Option<String> {
        let v = self.valuation();
        if v > self.order {
            return None;
        }
        let (key, c) = self.xi_coefficient(v).into_iter().next()?;
        let mut s = String::new();
        let _ = write!(s, "({})", XiSeries::monomial(c, v, self.order));
        s.push_str(" · ");
        render_key(&mut s, &key, names);
        let _ = write!(s, "  [ξ-order {}, {} nonzero terms]", v, self.len());
        Some(s)
    }

    pub(crate) fn check(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "algebra dimension mismatch");
        assert_eq!(self.order, other.order, "series order mismatch");
    }
}

fn key_order<const R: usize>(a: &[Monomial; R], b: &[Monomial; R]) -> core::cmp::Ordering {
    let ka: Vec<_> = a.iter().map(Monomial::display_key).collect();
    let kb: Vec<_> = b.iter().map(Monomial::display_key).collect();
    ka.cmp(&kb)
}

fn render_key<const R: usize>(s: &mut String, key: &[Monomial; R], names: &[String]) {
    for (leg, m) in key.iter().enumerate() {
        if leg > 0 {
            s.push_str(" ⊗ ");
        }
        let _ = m.render(names, s);
    }
}

fn render_term<const R: usize>(s: &mut String, key: &[Monomial; R], c: &XiSeries, names: &[String]) {
    let _ = write!(s, "({})", c);
    if key.iter().all(Monomial::is_one) && R == 1 {
        return;
    }
    s.push_str(" · ");
    render_key(s, key, names);
}

impl<const R: usize> core::fmt::Debug for Tensor<R> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let names: Vec<String> = (0..self.dim).map(|i| alloc::format!("e{}", i)).collect();
        f.write_str(&self.render(&names))
    }
}

impl<'a, const R: usize> Add<&'a Tensor<R>> for &'a Tensor<R> {
    type Output = Tensor<R>;
    fn add(self, rhs: &'a Tensor<R>) -> Tensor<R> {
        let mut t = self.clone();
        t.add_scaled(rhs, &Rational::ONE);
        t
    }
}

impl<'a, const R: usize> Sub<&'a Tensor<R>> for &'a Tensor<R> {
    type Output = Tensor<R>;
    fn sub(self, rhs: &'a Tensor<R>) -> Tensor<R> {
        let mut t = self.clone();
        t.add_scaled(rhs, &-Rational::ONE);
        t
    }
}

impl<const R: usize> Neg for &Tensor<R> {
    type Output = Tensor<R>;
    fn neg(self) -> Tensor<R> {
        self.scale(&-Rational::ONE)
    }
}

impl UeaElement {
    pub fn monomial(m: Monomial, c: XiSeries) -> Self {
        let dim = m.dim();
        Self::from_term([m], c, dim)
    }
}

/// `a ⊗ b`.
pub fn outer(a: &UeaElement, b: &UeaElement) -> Tensor2 {
    a.check(b);
    let mut t = Tensor2::zero(a.dim(), a.order());
    for ([ma], ca) in a.iter() {
        for ([mb], cb) in b.iter() {
            t.add_term([ma.clone(), mb.clone()], ca * cb);
        }
    }
    t
}

/// `a ⊗ b ⊗ c`.
pub fn outer3(a: &UeaElement, b: &UeaElement, c: &UeaElement) -> Tensor3 {
    let ab = outer(a, b);
    let mut t = Tensor3::zero(a.dim(), a.order());
    for ([m1, m2], c12) in ab.iter() {
        for ([m3], c3) in c.iter() {
            t.add_term([m1.clone(), m2.clone(), m3.clone()], c12 * c3);
        }
    }
    t
}

fn embed<F>(t: &Tensor2, f: F) -> Tensor3
where
    F: Fn(&Monomial, &Monomial, Monomial) -> [Monomial; 3],
{
    let mut out = Tensor3::zero(t.dim(), t.order());
    for ([a, b], c) in t.iter() {
        out.add_term(f(a, b, Monomial::one(t.dim())), c.clone());
    }
    out
}

/// `x ⊗ y ↦ x ⊗ y ⊗ 1`
pub fn embed_12(t: &Tensor2) -> Tensor3 {
    embed(t, |a, b, u| [a.clone(), b.clone(), u])
}

/// `x ⊗ y ↦ 1 ⊗ x ⊗ y`
pub fn embed_23(t: &Tensor2) -> Tensor3 {
    embed(t, |a, b, u| [u, a.clone(), b.clone()])
}

/// `x ⊗ y ↦ x ⊗ 1 ⊗ y`
pub fn embed_13(t: &Tensor2) -> Tensor3 {
    embed(t, |a, b, u| [a.clone(), u, b.clone()])
}

/// `x ⊗ y ↦ y ⊗ x`
pub fn swap(t: &Tensor2) -> Tensor2 {
    t.permute([1, 0])
}

/// `x ↦ x ⊗ 1`
pub fn on_leg1(a: &UeaElement) -> Tensor2 {
    outer(a, &UeaElement::one(a.dim(), a.order()))
}

/// `x ↦ 1 ⊗ x`
pub fn on_leg2(a: &UeaElement) -> Tensor2 {
    outer(&UeaElement::one(a.dim(), a.order()), a)
}
