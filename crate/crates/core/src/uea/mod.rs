//! The enveloping algebra `U(g)[[ξ]] / ξ^{K+1}` in PBW normal form, its
//! tensor powers, and the classical Hopf structure.

mod monomial;
mod tensor;

use alloc::rc::Rc;
use alloc::vec::Vec;
use core::cell::RefCell;

use hashbrown::HashMap;

pub use monomial::Monomial;
pub use tensor::{
    embed_12, embed_13, embed_23, on_leg1, on_leg2, outer, outer3, swap, Tensor, Tensor2, Tensor3,
    UeaElement,
};

use crate::error::{Error, Result};
use crate::liealg::LieAlgebraData;
use crate::scalars::{Rational, XiSeries};

type Terms = Rc<[(Monomial, Rational)]>;

/// A normal-ordered monomial product: either a single juxtaposition or a
/// cached linear combination.
enum Product {
    Single([(Monomial, Rational); 1]),
    Many(Terms),
}

impl Product {
    fn as_slice(&self) -> &[(Monomial, Rational)] {
        match self {
            Product::Single(s) => s,
            Product::Many(v) => v,
        }
    }
}

/// Computation context for one Lie algebra at one truncation order.
///
/// Holds memo tables for PBW rewriting (generator-past-monomial products and
/// monomial-pair products). The tables use interior mutability, so a context
/// belongs to one thread; build one per worker for parallel checks.
pub struct Enveloping {
    algebra: LieAlgebraData,
    order: usize,
    gen_cache: RefCell<HashMap<(Monomial, usize), Terms>>,
    pair_cache: RefCell<HashMap<(Monomial, Monomial), Terms>>,
    reverse_cache: RefCell<HashMap<Monomial, Terms>>,
}

impl Enveloping {
    pub fn new(algebra: LieAlgebraData, order: usize) -> Self {
        Enveloping {
            algebra,
            order,
            gen_cache: RefCell::new(HashMap::new()),
            pair_cache: RefCell::new(HashMap::new()),
            reverse_cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &LieAlgebraData {
        &self.algebra
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn names(&self) -> &[alloc::string::String] {
        self.algebra.names()
    }

    /// Same algebra, different truncation order, fresh caches.
    pub fn with_order(&self, order: usize) -> Self {
        Self::new(self.algebra.clone(), order)
    }

    pub fn one<const R: usize>(&self) -> Tensor<R> {
        Tensor::one(self.dim(), self.order)
    }

    pub fn zero<const R: usize>(&self) -> Tensor<R> {
        Tensor::zero(self.dim(), self.order)
    }

    pub fn scalar<const R: usize>(&self, s: XiSeries) -> Tensor<R> {
        Tensor::scalar(s, self.dim())
    }

    pub fn xi(&self) -> XiSeries {
        XiSeries::xi(self.order)
    }

    pub fn constant(&self, c: Rational) -> XiSeries {
        XiSeries::constant(c, self.order)
    }

    /// The basis element `e_i`.
    pub fn generator(&self, i: usize) -> UeaElement {
        UeaElement::monomial(Monomial::generator(self.dim(), i), XiSeries::one(self.order))
    }

    /// The generator with the given basis name.
    pub fn named(&self, name: &str) -> UeaElement {
        let i = self
            .algebra
            .index_of(name)
            .unwrap_or_else(|| panic!("no basis element named {}", name));
        self.generator(i)
    }

    /// A Lie algebra vector as a degree-one element.
    pub fn from_lie_vector(&self, v: &[Rational]) -> UeaElement {
        let mut t = self.zero();
        for (i, c) in v.iter().enumerate() {
            t.add_term([Monomial::generator(self.dim(), i)], XiSeries::constant(c.clone(), self.order));
        }
        t
    }

    /// `m · e_j` in normal form.
    fn right_mul_gen(&self, m: &Monomial, j: usize) -> Terms {
        match m.last_index() {
            None => return Rc::from([(Monomial::generator(self.dim(), j), Rational::ONE)]),
            Some(l) if l <= j => return Rc::from([(m.with_delta(j, 1), Rational::ONE)]),
            _ => {}
        }
        let key = (m.clone(), j);
        if let Some(t) = self.gen_cache.borrow().get(&key) {
            return t.clone();
        }
        let l = m.last_index().unwrap();
        let rest = m.with_delta(l, -1);
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        // m e_j = (rest e_j) e_l + rest [e_l, e_j]
        for (t, c) in self.right_mul_gen(&rest, j).iter() {
            for (u, d) in self.right_mul_gen(t, l).iter() {
                *acc.entry(u.clone()).or_insert(Rational::ZERO) += &(c * d);
            }
        }
        for (k, ck) in self.algebra.bracket_basis(l, j) {
            for (u, d) in self.right_mul_gen(&rest, *k).iter() {
                *acc.entry(u.clone()).or_insert(Rational::ZERO) += &(ck * d);
            }
        }
        let out: Terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        self.gen_cache.borrow_mut().insert(key, out.clone());
        out
    }

    fn mono_mul(&self, a: &Monomial, b: &Monomial) -> Product {
        match (a.last_index(), b.first_index()) {
            (None, _) => return Product::Single([(b.clone(), Rational::ONE)]),
            (_, None) => return Product::Single([(a.clone(), Rational::ONE)]),
            (Some(l), Some(f)) if l <= f => {
                return Product::Single([(a.juxtapose(b), Rational::ONE)])
            }
            _ => {}
        }
        let key = (a.clone(), b.clone());
        if let Some(t) = self.pair_cache.borrow().get(&key) {
            return Product::Many(t.clone());
        }
        let mut cur: HashMap<Monomial, Rational> = HashMap::new();
        cur.insert(a.clone(), Rational::ONE);
        for j in b.letters() {
            let mut next: HashMap<Monomial, Rational> = HashMap::new();
            for (t, c) in cur.iter() {
                for (u, d) in self.right_mul_gen(t, j).iter() {
                    *next.entry(u.clone()).or_insert(Rational::ZERO) += &(c * d);
                }
            }
            next.retain(|_, c| !c.is_zero());
            cur = next;
        }
        let out: Terms = cur.into_iter().collect();
        self.pair_cache.borrow_mut().insert(key, out.clone());
        Product::Many(out)
    }

    /// Normal-ordered product of two monomials as a rational combination.
    pub fn monomial_product(&self, a: &Monomial, b: &Monomial) -> Vec<(Monomial, Rational)> {
        self.mono_mul(a, b).as_slice().to_vec()
    }

    /// Legwise product in `U^{⊗R}`.
    pub fn mul<const R: usize>(&self, a: &Tensor<R>, b: &Tensor<R>) -> Tensor<R> {
        a.check(b);
        let order = a.order();
        let mut out = Tensor::zero(a.dim(), order);
        if a.is_zero() || b.is_zero() {
            return out;
        }
        let bs: Vec<_> = b.iter().map(|(k, c)| (k, c, c.valuation())).collect();
        for (ka, ca) in a.iter() {
            let va = ca.valuation();
            for (kb, cb, vb) in bs.iter() {
                if va + vb > order {
                    continue;
                }
                let c = ca * *cb;
                if c.is_zero() {
                    continue;
                }
                let prods: [Product; R] = core::array::from_fn(|l| self.mono_mul(&ka[l], &kb[l]));
                let slices: [&[(Monomial, Rational)]; R] = core::array::from_fn(|l| prods[l].as_slice());
                let mut idx = [0usize; R];
                'outer: loop {
                    let mut r = Rational::ONE;
                    for l in 0..R {
                        r = &r * &slices[l][idx[l]].1;
                    }
                    let key: [Monomial; R] = core::array::from_fn(|l| slices[l][idx[l]].0.clone());
                    out.add_scaled_term(key, &c, &r);
                    let mut l = R;
                    loop {
                        if l == 0 {
                            break 'outer;
                        }
                        l -= 1;
                        idx[l] += 1;
                        if idx[l] < slices[l].len() {
                            break;
                        }
                        idx[l] = 0;
                    }
                }
            }
        }
        out
    }

    /// Product of a sequence, left to right.
    pub fn product<const R: usize>(&self, factors: &[&Tensor<R>]) -> Tensor<R> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn commutator<const R: usize>(&self, a: &Tensor<R>, b: &Tensor<R>) -> Tensor<R> {
        &self.mul(a, b) - &self.mul(b, a)
    }

    pub fn pow<const R: usize>(&self, a: &Tensor<R>, e: u32) -> Tensor<R> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// `Σ_k c_k x^k` for ξ-positive `x`; terms beyond `ξ^{K+1}` vanish, so only
    /// the first `K + 1` coefficients are used.
    pub fn power_series<const R: usize>(&self, coeffs: &[Rational], x: &Tensor<R>) -> Result<Tensor<R>> {
        if !x.is_xi_positive() {
            return Err(Error::NotXiPositive);
        }
        let mut out: Tensor<R> = self.zero();
        let mut p: Tensor<R> = self.one();
        for (k, c) in coeffs.iter().enumerate().take(x.order() + 1) {
            if k > 0 {
                p = self.mul(&p, x);
            }
            if p.is_zero() {
                break;
            }
            out.add_scaled(&p, c);
        }
        Ok(out)
    }

    /// `exp(a) = Σ a^k / k!` for ξ-positive `a`.
    pub fn exp_positive<const R: usize>(&self, a: &Tensor<R>) -> Result<Tensor<R>> {
        let coeffs: Vec<Rational> = (0..=a.order() as u32).map(Rational::inv_factorial).collect();
        self.power_series(&coeffs, a)
    }

    /// Inverse of an element whose ξ⁰ part is a nonzero scalar multiple of
    /// the unit.
    pub fn invert<const R: usize>(&self, t: &Tensor<R>) -> Result<Tensor<R>> {
        let unit = t.unit_key();
        let lambda = t
            .coeff(&unit)
            .map(|c| c.coeff(0).clone())
            .filter(|c| !c.is_zero())
            .ok_or(Error::NotInvertible("ξ-constant part is not an invertible scalar"))?;
        let linv = lambda.recip();
        // t = λ (1 + w), w ξ-positive
        let mut w = t.scale(&linv);
        w.add_term(unit, XiSeries::constant(-Rational::ONE, t.order()));
        if !w.is_xi_positive() {
            return Err(Error::NotInvertible("ξ-constant part is not an invertible scalar"));
        }
        let coeffs: Vec<Rational> = (0..=t.order())
            .map(|k| if k % 2 == 0 { Rational::ONE } else { -Rational::ONE })
            .collect();
        Ok(self.power_series(&coeffs, &w)?.scale(&linv))
    }

    /// Classical coproduct: generators primitive, extended multiplicatively.
    /// On an ordered monomial this is the binomial expansion, already in
    /// normal form on both legs.
    pub fn coproduct(&self, a: &UeaElement) -> Tensor2 {
        let mut out = self.zero();
        for ([m], c) in a.iter() {
            for (l, r, b) in split_monomial(m) {
                out.add_scaled_term([l, r], c, &b);
            }
        }
        out
    }

    /// `Δ ⊗ id`
    pub fn delta_id(&self, t: &Tensor2) -> Tensor3 {
        let mut out = self.zero();
        for ([m1, m2], c) in t.iter() {
            for (l, r, b) in split_monomial(m1) {
                out.add_scaled_term([l, r, m2.clone()], c, &b);
            }
        }
        out
    }

    /// `id ⊗ Δ`
    pub fn id_delta(&self, t: &Tensor2) -> Tensor3 {
        let mut out = self.zero();
        for ([m1, m2], c) in t.iter() {
            for (l, r, b) in split_monomial(m2) {
                out.add_scaled_term([m1.clone(), l, r], c, &b);
            }
        }
        out
    }

    /// Coefficient of the empty monomial.
    pub fn counit(&self, a: &UeaElement) -> XiSeries {
        a.scalar_part()
    }

    /// `ε ⊗ id` and `id ⊗ ε` on a two-leg element.
    pub fn counit_leg(&self, t: &Tensor2, leg: usize) -> UeaElement {
        let mut out = self.zero();
        for ([m1, m2], c) in t.iter() {
            let (kill, keep) = if leg == 0 { (m1, m2) } else { (m2, m1) };
            if kill.is_one() {
                out.add_term([keep.clone()], c.clone());
            }
        }
        out
    }

    /// The letters of `m` multiplied in reverse order, normal-ordered.
    pub fn reverse_monomial(&self, m: &Monomial) -> Terms {
        if m.degree() <= 1 {
            return Rc::from([(m.clone(), Rational::ONE)]);
        }
        if let Some(t) = self.reverse_cache.borrow().get(m) {
            return t.clone();
        }
        let letters: Vec<usize> = m.letters().collect();
        let mut cur: HashMap<Monomial, Rational> = HashMap::new();
        cur.insert(Monomial::one(self.dim()), Rational::ONE);
        for &j in letters.iter().rev() {
            let mut next: HashMap<Monomial, Rational> = HashMap::new();
            for (t, c) in cur.iter() {
                for (u, d) in self.right_mul_gen(t, j).iter() {
                    *next.entry(u.clone()).or_insert(Rational::ZERO) += &(c * d);
                }
            }
            next.retain(|_, c| !c.is_zero());
            cur = next;
        }
        let out: Terms = cur.into_iter().collect();
        self.reverse_cache.borrow_mut().insert(m.clone(), out.clone());
        out
    }

    /// Classical antipode: `S(e_i) = −e_i`, anti-multiplicative.
    pub fn antipode(&self, a: &UeaElement) -> UeaElement {
        let mut out = self.zero();
        for ([m], c) in a.iter() {
            let sign = if m.degree() % 2 == 0 { Rational::ONE } else { -Rational::ONE };
            for (u, d) in self.reverse_monomial(m).iter() {
                out.add_scaled_term([u.clone()], c, &(d * &sign));
            }
        }
        out
    }

    /// Applies an anti-multiplicative map fixed by `e_i ↦ signs[i] · e_i` on
    /// every leg.
    pub fn anti_sign_map<const R: usize>(&self, t: &Tensor<R>, signs: &[Rational]) -> Tensor<R> {
        let mut out = self.zero();
        for (k, c) in t.iter() {
            let leg_terms: [Vec<(Monomial, Rational)>; R] = core::array::from_fn(|l| {
                let mut sign = Rational::ONE;
                for i in k[l].letters() {
                    sign = &sign * &signs[i];
                }
                self.reverse_monomial(&k[l])
                    .iter()
                    .map(|(u, d)| (u.clone(), d * &sign))
                    .collect()
            });
            let mut idx = [0usize; R];
            'outer: loop {
                let mut r = Rational::ONE;
                for l in 0..R {
                    r = &r * &leg_terms[l][idx[l]].1;
                }
                out.add_scaled_term(core::array::from_fn(|l| leg_terms[l][idx[l]].0.clone()), c, &r);
                let mut l = R;
                loop {
                    if l == 0 {
                        break 'outer;
                    }
                    l -= 1;
                    idx[l] += 1;
                    if idx[l] < leg_terms[l].len() {
                        break;
                    }
                    idx[l] = 0;
                }
            }
        }
        out
    }

    /// Multiplication map `U ⊗ U → U`.
    pub fn multiply_legs(&self, t: &Tensor2) -> UeaElement {
        let mut out = self.zero();
        for ([a, b], c) in t.iter() {
            for (u, d) in self.mono_mul(a, b).as_slice() {
                out.add_scaled_term([u.clone()], c, d);
            }
        }
        out
    }

    /// Applies a linear map `U → U` to one leg of a two-leg element.
    pub fn map_leg<F>(&self, t: &Tensor2, leg: usize, mut f: F) -> Tensor2
    where
        F: FnMut(&UeaElement) -> UeaElement,
    {
        let mut out = self.zero();
        let mut cache: HashMap<Monomial, UeaElement> = HashMap::new();
        for ([a, b], c) in t.iter() {
            let m = if leg == 0 { a } else { b };
            let image = cache
                .entry(m.clone())
                .or_insert_with(|| f(&UeaElement::monomial(m.clone(), XiSeries::one(self.order))));
            for ([u], d) in image.iter() {
                let key = if leg == 0 { [u.clone(), b.clone()] } else { [a.clone(), u.clone()] };
                out.add_term(key, c * d);
            }
        }
        out
    }

    /// `σ = ½ ln(1 + 2ξ e)` for the generator `e`.
    pub fn sigma(&self, e: usize) -> UeaElement {
        let x = self.generator(e).scale_series(&self.xi());
        let log = XiSeries::half_log1p(&Rational::from_integer(2), self.order);
        self.power_series(log.coeffs(), &x).expect("ξ E is ξ-positive")
    }

    /// `exp(c σ)` expanded in powers of `ξ e`: `(1 + 2ξe)^{c/2}`.
    pub fn exp_sigma(&self, e: usize, c: &Rational) -> UeaElement {
        let x = self.generator(e).scale_series(&self.xi());
        self.power_series(&binomial_series(&(c / &Rational::from_integer(2)), &Rational::from_integer(2), self.order), &x)
            .expect("ξ E is ξ-positive")
    }
}

/// Coefficients of `(1 + a t)^s = Σ binom(s, k) a^k t^k`, `k ≤ order`.
pub fn binomial_series(s: &Rational, a: &Rational, order: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(order + 1);
    let mut c = Rational::ONE;
    for k in 0..=order {
        out.push(c.clone());
        let kk = Rational::from_integer(k as i64);
        c = &(&(&c * &(s - &kk)) / &(&kk + &Rational::ONE)) * a;
    }
    out
}

/// All splittings `m = l · r` of an ordered monomial with binomial weights.
fn split_monomial(m: &Monomial) -> Vec<(Monomial, Monomial, Rational)> {
    let dim = m.dim();
    let exps = m.exponents();
    let mut out: Vec<(Vec<u8>, Rational)> = alloc::vec![(Vec::with_capacity(dim), Rational::ONE)];
    for &n in exps {
        let mut next = Vec::with_capacity(out.len() * (n as usize + 1));
        for (pre, w) in out {
            for k in 0..=n {
                let mut p = pre.clone();
                p.push(k);
                next.push((p, &w * &Rational::binomial(n as u32, k as u32)));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(l, w)| {
            let r: Vec<u8> = exps.iter().zip(l.iter()).map(|(n, k)| n - k).collect();
            (Monomial::from_exponents(&l), Monomial::from_exponents(&r), w)
        })
        .collect()
}
