//! Two-tensors over a Lie algebra, classical r-matrices and the classical
//! Yang–Baxter residual.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{gl_index, BorelIndex, LieAlgebraData};
use crate::error::{Error, Result};
use crate::scalars::{Rational, XiSeries};

/// `Σ t^{ij} e_i ⊗ e_j` with ξ-series coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieTensor2 {
    dim: usize,
    order: usize,
    c: Vec<XiSeries>,
}

impl LieTensor2 {
    pub fn zero(dim: usize, order: usize) -> Self {
        LieTensor2 { dim, order, c: vec![XiSeries::zero(order); dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &XiSeries {
        &self.c[i * self.dim + j]
    }

    pub fn add(&mut self, i: usize, j: usize, s: &XiSeries) {
        self.c[i * self.dim + j] += s;
    }

    /// `x ⊗ y` for Lie vectors, scaled by `s`.
    pub fn add_outer(&mut self, x: &[Rational], y: &[Rational], s: &XiSeries) {
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    self.c[i * self.dim + j].add_scaled(s, &(xi * yj));
                }
            }
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.get(i, j) == &-self.get(j, i)))
    }

    /// Nonzero entries `(i, j, t^{ij})`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &XiSeries)> {
        let d = self.dim;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(move |(k, s)| (k / d, k % d, s))
    }

    /// Substitutes a rational value for ξ.
    pub fn at_xi(&self, x: &Rational) -> LieTensor2 {
        let mut out = LieTensor2::zero(self.dim, 0);
        for (k, s) in self.c.iter().enumerate() {
            out.c[k] = XiSeries::constant(s.eval(x), 0);
        }
        out
    }
}

/// `Σ_{i<j} r^{ij} e_i ∧ e_j` with `x ∧ y = x ⊗ y − y ⊗ x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeElement {
    dim: usize,
    coeffs: BTreeMap<(usize, usize), Rational>,
}

impl WedgeElement {
    pub fn zero(dim: usize) -> Self {
        WedgeElement { dim, coeffs: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds `c · x ∧ y` for Lie vectors `x`, `y`.
    pub fn add_wedge(&mut self, x: &[Rational], y: &[Rational], c: &Rational) {
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                if i == j || xi.is_zero() || yj.is_zero() {
                    continue;
                }
                let v = &(xi * yj) * c;
                let (key, v) = if i < j { ((i, j), v) } else { ((j, i), -v) };
                let e = self.coeffs.entry(key).or_insert(Rational::ZERO);
                *e += &v;
                if e.is_zero() {
                    self.coeffs.remove(&key);
                }
            }
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        match i.cmp(&j) {
            core::cmp::Ordering::Less => self.coeffs.get(&(i, j)).cloned().unwrap_or_default(),
            core::cmp::Ordering::Greater => -self.coeffs.get(&(j, i)).cloned().unwrap_or_default(),
            core::cmp::Ordering::Equal => Rational::ZERO,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.coeffs.iter()
    }

    pub fn to_tensor(&self, order: usize) -> LieTensor2 {
        let mut t = LieTensor2::zero(self.dim, order);
        for ((i, j), c) in &self.coeffs {
            let s = XiSeries::constant(c.clone(), order);
            t.add(*i, *j, &s);
            t.add(*j, *i, &-&s);
        }
        t
    }

    /// Reads an antisymmetric tensor with constant coefficients.
    pub fn from_tensor(t: &LieTensor2) -> Result<Self> {
        if !t.is_antisymmetric() {
            return Err(Error::Inconsistent(String::from("two-tensor is not antisymmetric")));
        }
        let mut w = WedgeElement::zero(t.dim());
        for (i, j, s) in t.entries() {
            if i < j {
                if s.valuation() == 0 && s.coeffs()[1..].iter().all(Rational::is_zero) {
                    w.coeffs.insert((i, j), s.coeff(0).clone());
                } else {
                    return Err(Error::Inconsistent(String::from("wedge coefficients must be constants")));
                }
            }
        }
        Ok(w)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.coeffs.is_empty() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, ((i, j), c)) in self.coeffs.iter().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if k == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {} ", sign));
            }
            if !mag.is_one() {
                s.push_str(&format!("{} ", mag));
            }
            s.push_str(&format!("{}∧{}", names[*i], names[*j]));
        }
        s
    }
}

/// A three-leg tensor over the Lie algebra, dense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieTensor3 {
    dim: usize,
    c: Vec<XiSeries>,
}

impl LieTensor3 {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &XiSeries {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(XiSeries::is_zero)
    }

    /// First nonzero entry, as `(i, j, k, coefficient)`.
    pub fn first_nonzero(&self) -> Option<(usize, usize, usize, &XiSeries)> {
        let d = self.dim;
        self.c
            .iter()
            .position(|s| !s.is_zero())
            .map(|p| (p / (d * d), (p / d) % d, p % d, &self.c[p]))
    }

    pub fn witness(&self, names: &[String]) -> Option<String> {
        self.first_nonzero()
            .map(|(i, j, k, s)| format!("({}) · {} ⊗ {} ⊗ {}", s, names[i], names[j], names[k]))
    }
}

/// `[r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]` computed from structure
/// constants.
pub fn cybe_residual(g: &LieAlgebraData, r: &LieTensor2) -> LieTensor3 {
    let d = g.dim();
    assert_eq!(d, r.dim(), "algebra dimension mismatch");
    let order = r.order();
    let mut c = vec![XiSeries::zero(order); d * d * d];
    let idx = |a: usize, b: usize, e: usize| (a * d + b) * d + e;
    let entries: Vec<(usize, usize, XiSeries)> = r.entries().map(|(i, j, s)| (i, j, s.clone())).collect();
    for (i, j, s1) in &entries {
        for (k, l, s2) in &entries {
            let s = s1 * s2;
            if s.is_zero() {
                continue;
            }
            // [r12, r13]: [e_i, e_k] ⊗ e_j ⊗ e_l
            for (m, cm) in g.bracket_basis(*i, *k) {
                c[idx(*m, *j, *l)].add_scaled(&s, cm);
            }
            // [r12, r23]: e_i ⊗ [e_j, e_k] ⊗ e_l
            for (m, cm) in g.bracket_basis(*j, *k) {
                c[idx(*i, *m, *l)].add_scaled(&s, cm);
            }
            // [r13, r23]: e_i ⊗ e_k ⊗ [e_j, e_l]
            for (m, cm) in g.bracket_basis(*j, *l) {
                c[idx(*i, *k, *m)].add_scaled(&s, cm);
            }
        }
    }
    LieTensor3 { dim: d, c }
}

fn unit(d: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; d];
    v[i] = Rational::ONE;
    v
}

fn gl_h(n: usize, i: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; n * n];
    v[gl_index(n, i, i)] += &Rational::ONE;
    v[gl_index(n, k, k)] -= &Rational::ONE;
    v
}

/// `−(H_1N ∧ E_1N + 2 Σ_k E_1k ∧ E_kN)` in the basis of the restricted Borel
/// subalgebra (the ξ-coefficient of the limit r-matrix).
pub fn r0_borel(n: usize) -> WedgeElement {
    let b = BorelIndex { n };
    let d = b.dim();
    let mut w = WedgeElement::zero(d);
    w.add_wedge(&unit(d, b.h()), &unit(d, b.e()), &-Rational::ONE);
    for k in b.middle() {
        w.add_wedge(&unit(d, b.first_row(k)), &unit(d, b.last_col(k)), &Rational::from_integer(-2));
    }
    w
}

/// The same element in the gl(N) basis.
pub fn r0_gl(n: usize) -> WedgeElement {
    let d = n * n;
    let mut w = WedgeElement::zero(d);
    w.add_wedge(&gl_h(n, 1, n), &unit(d, gl_index(n, 1, n)), &-Rational::ONE);
    for k in 2..n {
        w.add_wedge(
            &unit(d, gl_index(n, 1, k)),
            &unit(d, gl_index(n, k, n)),
            &Rational::from_integer(-2),
        );
    }
    w
}

/// `r_{h;ξ} = h Σ_{k,l} (min(k,l)(N − max(k,l))/N) H_{k,k+1} ⊗ H_{l,l+1}
///  + 2h Σ_{k<l} E_lk ⊗ E_kl − ξ H_1N ∧ E_1N − 2ξ Σ_k E_1k ∧ E_kN`
/// in the gl(N) basis; ξ is kept as a series variable of the given order.
pub fn r_h_xi(n: usize, h: &Rational, order: usize) -> LieTensor2 {
    let d = n * n;
    let mut t = LieTensor2::zero(d, order);
    let hs = XiSeries::constant(h.clone(), order);
    for k in 1..n {
        for l in 1..n {
            let (lo, hi) = (k.min(l), k.max(l));
            let w = Rational::new((lo * (n - hi)) as i64, n as i64);
            t.add_outer(&gl_h(n, k, k + 1), &gl_h(n, l, l + 1), &hs.scale(&w));
        }
    }
    for k in 1..=n {
        for l in (k + 1)..=n {
            t.add_outer(&unit(d, gl_index(n, l, k)), &unit(d, gl_index(n, k, l)), &hs.scale(&Rational::from_integer(2)));
        }
    }
    let xi = XiSeries::xi(order);
    let r0 = r0_gl(n).to_tensor(order);
    for (i, j, s) in r0.entries() {
        t.add(i, j, &(s * &xi));
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{make_borel_restricted, make_gl};

    #[test]
    fn limit_r_matrix_solves_cybe() {
        for n in 2..=5 {
            let w = r0_borel(n);
            let b = make_borel_restricted(n).unwrap();
            assert!(cybe_residual(&b, &w.to_tensor(0)).is_zero(), "B∨ N={}", n);
            let g = make_gl(n).unwrap();
            assert!(cybe_residual(&g, &r0_gl(n).to_tensor(0)).is_zero(), "gl N={}", n);
        }
    }

    #[test]
    fn r_h_xi_solves_cybe_at_sampled_h() {
        for n in [2, 3, 4] {
            let g = make_gl(n).unwrap();
            for h in [Rational::ONE, Rational::from_integer(2), Rational::new(1, 2)] {
                let t = r_h_xi(n, &h, 2);
                let res = cybe_residual(&g, &t);
                assert!(res.is_zero(), "N={} h={}: {:?}", n, h, res.witness(g.names()));
            }
        }
    }

    #[test]
    fn cybe_detects_broken_r() {
        let g = make_gl(3).unwrap();
        // H∧E alone solves CYBE, an extra E12∧E23 with the wrong weight does not
        let mut w = WedgeElement::zero(9);
        w.add_wedge(&gl_h(3, 1, 3), &unit(9, gl_index(3, 1, 3)), &Rational::ONE);
        assert!(cybe_residual(&g, &w.to_tensor(0)).is_zero());
        w.add_wedge(&unit(9, gl_index(3, 1, 2)), &unit(9, gl_index(3, 2, 3)), &Rational::ONE);
        assert!(!cybe_residual(&g, &w.to_tensor(0)).is_zero());
    }

    #[test]
    fn wedge_round_trip_and_render() {
        let w = r0_borel(3);
        assert_eq!(WedgeElement::from_tensor(&w.to_tensor(2)).unwrap(), w);
        let names: Vec<String> = ["H13", "E13", "E12", "E23"].iter().map(|s| String::from(*s)).collect();
        assert_eq!(w.render(&names), "-H13∧E13 - 2 E12∧E23");
        assert!(!r_h_xi(3, &Rational::ONE, 1).is_antisymmetric());
    }
}
