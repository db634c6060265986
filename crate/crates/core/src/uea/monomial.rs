use core::fmt;

use smallvec::SmallVec;

/// Ordered product `e_1^{n_1} ⋯ e_d^{n_d}` stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u8; 16]>);

impl Monomial {
    pub fn one(dim: usize) -> Self {
        Monomial(core::iter::repeat(0).take(dim).collect())
    }

    pub fn generator(dim: usize, i: usize) -> Self {
        let mut m = Self::one(dim);
        m.0[i] = 1;
        m
    }

    pub fn power(dim: usize, i: usize, n: u8) -> Self {
        let mut m = Self::one(dim);
        m.0[i] = n;
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        Monomial(exps.iter().copied().collect())
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&n| n as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&n| n == 0)
    }

    pub fn first_index(&self) -> Option<usize> {
        self.0.iter().position(|&n| n > 0)
    }

    pub fn last_index(&self) -> Option<usize> {
        self.0.iter().rposition(|&n| n > 0)
    }

    /// Exponent-wise sum, i.e. the product when no reordering is needed.
    pub fn juxtapose(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.checked_add(*b).expect("PBW exponent overflow"))
                .collect(),
        )
    }

    pub(crate) fn with_delta(&self, i: usize, delta: i8) -> Self {
        let mut m = self.clone();
        m.0[i] = (m.0[i] as i16 + delta as i16)
            .try_into()
            .expect("PBW exponent out of range");
        m
    }

    /// Generator indices in product order, with repetition.
    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| core::iter::repeat(i).take(n as usize))
    }

    /// Writes `E12^2 E23`, or `1` for the empty monomial.
    pub fn render(&self, names: &[alloc::string::String], out: &mut impl fmt::Write) -> fmt::Result {
        if self.is_one() {
            return out.write_str("1");
        }
        let mut first = true;
        for (i, &n) in self.0.iter().enumerate() {
            if n == 0 {
                continue;
            }
            if !first {
                out.write_str(" ")?;
            }
            first = false;
            out.write_str(&names[i])?;
            if n > 1 {
                write!(out, "^{}", n)?;
            }
        }
        Ok(())
    }

    /// Sort key: total degree first, then higher powers of earlier
    /// generators first.
    pub(crate) fn display_key(&self) -> (u32, SmallVec<[core::cmp::Reverse<u8>; 16]>) {
        (self.degree(), self.0.iter().map(|&n| core::cmp::Reverse(n)).collect())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
