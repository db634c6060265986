//! Truncated power series in the deformation parameter ξ.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use smallvec::SmallVec;

use super::Rational;
use crate::error::Error;

type Coeffs = SmallVec<[Rational; 6]>;

/// `c_0 + c_1 ξ + … + c_K ξ^K`, all arithmetic modulo `ξ^{K+1}`.
///
/// The truncation order is the number of stored coefficients minus one; it is
/// never zero-length. Mixed-order arithmetic panics in the operator impls and
/// returns [`Error::OrderMismatch`] from the `checked_*` methods.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XiSeries {
    coeffs: Coeffs,
}

impl XiSeries {
    pub fn zero(order: usize) -> Self {
        XiSeries {
            coeffs: core::iter::repeat(Rational::ZERO).take(order + 1).collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::ONE, order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c ξ^k` (zero when `k > order`).
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `ξ`.
    pub fn xi(order: usize) -> Self {
        Self::monomial(Rational::ONE, 1, order)
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones are dropped.
    pub fn from_coeffs<I: IntoIterator<Item = Rational>>(coeffs: I, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: Rational) {
        self.coeffs[k] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// Least `k` with a nonzero coefficient; `K + 1` for the zero series.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    /// Re-truncates to a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncate can only lower the order");
        XiSeries {
            coeffs: self.coeffs[..=order].iter().cloned().collect(),
        }
    }

    /// Same coefficients at a higher order, padded with zeros. Only meaningful
    /// for series known to be polynomials of degree ≤ the current order.
    pub fn extend(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().cloned(), order)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order());
        }
        XiSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `ξ^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut s = Self::zero(order);
        for i in 0..=order {
            if i + k > order {
                break;
            }
            s.coeffs[i + k] = self.coeffs[i].clone();
        }
        s
    }

    fn check_order(&self, other: &Self) -> Result<(), Error> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        Ok(XiSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Cauchy product truncated at `ξ^{K+1}`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        let order = self.order();
        let va = self.valuation();
        let vb = other.valuation();
        let mut out = Self::zero(order);
        if va + vb > order {
            return Ok(out);
        }
        for i in va..=order - vb {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            for j in vb..=order - i {
                let b = &other.coeffs[j];
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Self, Error> {
        let a0 = self.coeffs[0].checked_recip().ok_or(Error::NotInvertible(
            "series with zero constant term",
        ))?;
        let order = self.order();
        let mut out = Self::zero(order);
        out.coeffs[0] = a0.clone();
        for n in 1..=order {
            let mut acc = Rational::ZERO;
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &(&self.coeffs[k] * &out.coeffs[n - k]);
                }
            }
            out.coeffs[n] = -(&acc * &a0);
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `½ ln(1 + cξ) = Σ_{k≥1} (−1)^{k+1} c^k ξ^k / (2k)`.
    pub fn half_log1p(c: &Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut ck = Rational::ONE;
        for k in 1..=order {
            ck = &ck * c;
            let mut term = &ck / &Rational::from_integer(2 * k as i64);
            if k % 2 == 0 {
                term = -term;
            }
            s.coeffs[k] = term;
        }
        s
    }

    /// `self += r · s`.
    pub fn add_scaled(&mut self, s: &XiSeries, r: &Rational) {
        self.check_order(s).expect("series order mismatch");
        if r.is_zero() {
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(s.coeffs.iter()) {
            if !b.is_zero() {
                *a += &(b * r);
            }
        }
    }

    /// Evaluates the truncated polynomial at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

impl<'a> Add<&'a XiSeries> for &'a XiSeries {
    type Output = XiSeries;
    fn add(self, rhs: &'a XiSeries) -> XiSeries {
        self.checked_add(rhs).expect("series order mismatch")
    }
}

impl<'a> Sub<&'a XiSeries> for &'a XiSeries {
    type Output = XiSeries;
    fn sub(self, rhs: &'a XiSeries) -> XiSeries {
        self.check_order(rhs).expect("series order mismatch");
        XiSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a XiSeries> for &'a XiSeries {
    type Output = XiSeries;
    fn mul(self, rhs: &'a XiSeries) -> XiSeries {
        self.checked_mul(rhs).expect("series order mismatch")
    }
}

impl Neg for &XiSeries {
    type Output = XiSeries;
    fn neg(self) -> XiSeries {
        XiSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for XiSeries {
    type Output = XiSeries;
    fn neg(self) -> XiSeries {
        -&self
    }
}

impl AddAssign<&XiSeries> for XiSeries {
    fn add_assign(&mut self, rhs: &XiSeries) {
        self.check_order(rhs).expect("series order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&XiSeries> for XiSeries {
    fn sub_assign(&mut self, rhs: &XiSeries) {
        self.check_order(rhs).expect("series order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl fmt::Display for XiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}", mag)?;
                    }
                    if k == 1 {
                        f.write_str("ξ")?;
                    } else {
                        write!(f, "ξ^{}", k)?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for XiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] mod ξ^{}", self, self.order() + 1)
    }
}
