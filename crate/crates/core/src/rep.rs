//! The fundamental representation of gl(N) and matrices over ξ-series.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::liealg::{gl_index, BorelIndex};
use crate::scalars::{Rational, XiSeries};
use crate::twist::{canonical_realization, universal_r};
use crate::uea::{Monomial, Tensor};

/// A square matrix with ξ-series entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix {
    size: usize,
    order: usize,
    entries: Vec<XiSeries>,
}

impl SeriesMatrix {
    pub fn zero(size: usize, order: usize) -> Self {
        SeriesMatrix { size, order, entries: vec![XiSeries::zero(order); size * size] }
    }

    pub fn identity(size: usize, order: usize) -> Self {
        let mut m = Self::zero(size, order);
        for i in 0..size {
            m.entries[i * size + i] = XiSeries::one(order);
        }
        m
    }

    /// The matrix unit `e_ij` (0-based).
    pub fn unit(size: usize, i: usize, j: usize, order: usize) -> Self {
        let mut m = Self::zero(size, order);
        m.entries[i * size + j] = XiSeries::one(order);
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &XiSeries {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: XiSeries) {
        self.entries[i * self.size + j] = s;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(XiSeries::is_zero)
    }

    pub fn add_scaled(&mut self, other: &Self, s: &XiSeries) {
        assert_eq!(self.size, other.size);
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += &(b * s);
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = Self::zero(n, self.order);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Kronecker product, `self` as the left factor.
    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.size, other.size);
        let mut out = Self::zero(a * b, self.order);
        for i1 in 0..a {
            for j1 in 0..a {
                let x = self.get(i1, j1);
                if x.is_zero() {
                    continue;
                }
                for i2 in 0..b {
                    for j2 in 0..b {
                        let y = other.get(i2, j2);
                        if !y.is_zero() {
                            out.entries[(i1 * b + i2) * a * b + j1 * b + j2] = x * y;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn truncate(&self, order: usize) -> Self {
        SeriesMatrix {
            size: self.size,
            order,
            entries: self.entries.iter().map(|s| s.truncate(order)).collect(),
        }
    }

    /// Substitutes a rational value for ξ.
    pub fn at_xi(&self, x: &Rational) -> Vec<Vec<Rational>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j).eval(x)).collect())
            .collect()
    }

    /// Largest power of ξ carrying a nonzero coefficient in any entry.
    pub fn degree(&self) -> usize {
        self.entries
            .iter()
            .filter_map(|s| s.coeffs().iter().rposition(|c| !c.is_zero()))
            .max()
            .unwrap_or(0)
    }

    pub fn render(&self) -> String {
        let cells: Vec<String> = self.entries.iter().map(|s| alloc::format!("{}", s)).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        let mut out = String::new();
        for i in 0..self.size {
            out.push('[');
            for j in 0..self.size {
                let c = &cells[i * self.size + j];
                if j > 0 {
                    out.push_str(", ");
                }
                for _ in c.chars().count()..width {
                    out.push(' ');
                }
                out.push_str(c);
            }
            out.push_str("]\n");
        }
        out
    }

    /// First nonzero entry as `(row, column, value)`.
    pub fn witness(&self) -> Option<String> {
        let p = self.entries.iter().position(|s| !s.is_zero())?;
        let mut s = String::new();
        let _ = write!(s, "[{}, {}] = {}", p / self.size, p % self.size, self.entries[p]);
        Some(s)
    }
}

/// The flip `x ⊗ y ↦ y ⊗ x` on `C^n ⊗ C^n`.
pub fn flip(n: usize, order: usize) -> SeriesMatrix {
    let mut p = SeriesMatrix::zero(n * n, order);
    for i in 0..n {
        for j in 0..n {
            p.set(i * n + j, j * n + i, XiSeries::one(order));
        }
    }
    p
}

/// `ρ(E_ij) = e_ij` restricted to the basis of the enveloping algebra the
/// elements live in.
pub struct Fundamental {
    n: usize,
    order: usize,
    images: Vec<SeriesMatrix>,
}

impl Fundamental {
    /// On the gl(N) basis.
    pub fn gl(n: usize, order: usize) -> Self {
        let mut images = vec![SeriesMatrix::zero(n, order); n * n];
        for i in 1..=n {
            for j in 1..=n {
                images[gl_index(n, i, j)] = SeriesMatrix::unit(n, i - 1, j - 1, order);
            }
        }
        Fundamental { n, order, images }
    }

    /// On the restricted Borel basis, with `H_1N = e_11 − e_NN`.
    pub fn borel(n: usize, order: usize) -> Self {
        let b = BorelIndex { n };
        let mut images = vec![SeriesMatrix::zero(n, order); b.dim()];
        let mut h = SeriesMatrix::unit(n, 0, 0, order);
        h.add_scaled(&SeriesMatrix::unit(n, n - 1, n - 1, order), &XiSeries::constant(-Rational::ONE, order));
        images[b.h()] = h;
        images[b.e()] = SeriesMatrix::unit(n, 0, n - 1, order);
        for j in b.middle() {
            images[b.first_row(j)] = SeriesMatrix::unit(n, 0, j - 1, order);
            images[b.last_col(j)] = SeriesMatrix::unit(n, j - 1, n - 1, order);
        }
        Fundamental { n, order, images }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn monomial(&self, m: &Monomial) -> SeriesMatrix {
        let mut acc = SeriesMatrix::identity(self.n, self.order);
        for i in m.letters() {
            acc = acc.mul(&self.images[i]);
        }
        acc
    }

    /// `Σ c · ρ(m₁) ⊗ ⋯ ⊗ ρ(m_R)`, leg 1 leftmost.
    pub fn evaluate<const R: usize>(&self, t: &Tensor<R>) -> SeriesMatrix {
        assert_eq!(t.order(), self.order, "truncation order mismatch");
        let size = self.n.pow(R as u32);
        let mut out = SeriesMatrix::zero(size, self.order);
        let mut cache: HashMap<Monomial, SeriesMatrix> = HashMap::new();
        for (key, c) in t.iter() {
            let mut m = SeriesMatrix::identity(1, self.order);
            for leg in key {
                let img = cache.entry(leg.clone()).or_insert_with(|| self.monomial(leg)).clone();
                m = m.kron(&img);
            }
            out.add_scaled(&m, c);
        }
        out
    }
}

/// `R₁₂ R₁₃ R₂₃ − R₂₃ R₁₃ R₁₂` for an `N² × N²` matrix.
pub fn matrix_qybe_residual(r: &SeriesMatrix, n: usize) -> SeriesMatrix {
    let order = r.order();
    let id = SeriesMatrix::identity(n, order);
    let r12 = r.kron(&id);
    let r23 = id.kron(r);
    let p23 = id.kron(&flip(n, order));
    let r13 = p23.mul(&r12).mul(&p23);
    let lhs = r12.mul(&r13).mul(&r23);
    let mut res = r23.mul(&r13).mul(&r12);
    res.add_scaled(&lhs, &XiSeries::constant(-Rational::ONE, order));
    res
}

/// `P R P · R − 1`
pub fn matrix_triangularity_residual(r: &SeriesMatrix, n: usize) -> SeriesMatrix {
    let order = r.order();
    let p = flip(n, order);
    let mut res = p.mul(r).mul(&p).mul(r);
    res.add_scaled(&SeriesMatrix::identity(n * n, order), &XiSeries::constant(-Rational::ONE, order));
    res
}

/// The image of `R = F₂₁ F⁻¹` for the canonical twist.
pub fn r_matrix(n: usize, order: usize) -> Result<SeriesMatrix> {
    let real = canonical_realization(n, order)?;
    let r = universal_r(&real.env, &real.extended()?)?;
    Ok(Fundamental::borel(n, order).evaluate(&r))
}

/// The R-matrix image at order `K`, accepted only if the computation at
/// `K + 1` adds nothing beyond it (every entry is a polynomial of degree at
/// most `K`).
pub fn export_r_matrix(n: usize, order: usize) -> Result<SeriesMatrix> {
    let m = r_matrix(n, order)?;
    let next = r_matrix(n, order + 1)?;
    if next.degree() > order || next.truncate(order) != m {
        return Err(Error::NotStabilized { order });
    }
    Ok(m)
}
