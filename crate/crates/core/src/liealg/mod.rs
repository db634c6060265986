//! Finite-dimensional Lie algebras given by rational structure constants.

pub mod classical;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalars::Rational;

/// A vector in the span of a Lie algebra basis.
pub type LieVector = Vec<Rational>;

/// `[e_i, e_j] = Σ_k c[i][j][k] e_k` over an ordered, named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraData {
    names: Vec<String>,
    /// dense, index `(i * d + j) * d + k`
    c: Vec<Rational>,
    /// nonzero entries of each bracket, for the rewriting kernel
    sparse: Vec<Vec<(usize, Rational)>>,
}

impl LieAlgebraData {
    /// Builds an algebra from dense constants `c[i][j][k]`; rejects ragged
    /// input and non-antisymmetric tables. Jacobi is not checked here, see
    /// [`check_jacobi`].
    pub fn new(names: Vec<String>, c: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let d = names.len();
        if d == 0 {
            return Err(Error::InvalidDimension { what: "Lie algebra", got: 0, min: 1 });
        }
        if c.len() != d || c.iter().any(|row| row.len() != d || row.iter().any(|v| v.len() != d)) {
            return Err(Error::Inconsistent(format!(
                "structure constants must be a {}x{}x{} array",
                d, d, d
            )));
        }
        let flat: Vec<Rational> = c.into_iter().flatten().flatten().collect();
        let g = Self::from_flat(names, flat);
        if let Some((i, j, k)) = g.antisymmetry_violation() {
            return Err(Error::Inconsistent(format!(
                "c[{}][{}][{}] != -c[{}][{}][{}]",
                i, j, k, j, i, k
            )));
        }
        Ok(g)
    }

    fn from_flat(names: Vec<String>, c: Vec<Rational>) -> Self {
        let d = names.len();
        let mut sparse = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let base = (i * d + j) * d;
                sparse.push(
                    (0..d)
                        .filter(|&k| !c[base + k].is_zero())
                        .map(|k| (k, c[base + k].clone()))
                        .collect(),
                );
            }
        }
        LieAlgebraData { names, c, sparse }
    }

    /// Builds from a closure giving `[e_i, e_j]` as a sparse combination.
    fn from_bracket<F>(names: Vec<String>, mut bracket: F) -> Self
    where
        F: FnMut(usize, usize) -> Vec<(usize, Rational)>,
    {
        let d = names.len();
        let mut c = vec![Rational::ZERO; d * d * d];
        for i in 0..d {
            for j in 0..d {
                for (k, v) in bracket(i, j) {
                    c[(i * d + j) * d + k] += &v;
                }
            }
        }
        Self::from_flat(names, c)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        let d = self.dim();
        &self.c[(i * d + j) * d + k]
    }

    /// Nonzero terms of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.sparse[i * self.dim() + j]
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> LieVector {
        let d = self.dim();
        let mut out = vec![Rational::ZERO; d];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let s = ui * vj;
                for (k, ck) in self.bracket_basis(i, j) {
                    out[*k] += &(&s * ck);
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> LieVector {
        let mut v = vec![Rational::ZERO; self.dim()];
        v[i] = Rational::ONE;
        v
    }

    /// Dense `[i][j][k]` copy of the constants.
    pub fn constants(&self) -> Vec<Vec<Vec<Rational>>> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).map(|k| self.c(i, j, k).clone()).collect())
                    .collect()
            })
            .collect()
    }

    fn antisymmetry_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in i..d {
                for k in 0..d {
                    if self.c(i, j, k) != &-self.c(j, i, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetry_violation().is_none()
    }

    /// Same algebra with one structure constant replaced; the mirrored entry
    /// `c[j][i][k]` is updated too so antisymmetry is kept.
    pub fn with_constant(&self, i: usize, j: usize, k: usize, value: Rational) -> Self {
        let d = self.dim();
        let mut c = self.c.clone();
        c[(j * d + i) * d + k] = -&value;
        c[(i * d + j) * d + k] = value;
        Self::from_flat(self.names.clone(), c)
    }
}

/// Triples `(i, j, k)` (with `i < j < k`) for which the Jacobi identity fails.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JacobiReport {
    pub violations: Vec<(usize, usize, usize)>,
}

impl JacobiReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_jacobi(g: &LieAlgebraData) -> JacobiReport {
    let d = g.dim();
    let mut violations = Vec::new();
    // Jacobi is alternating in (i, j, k), so ordered triples suffice once
    // antisymmetry holds; repeated indices are covered when it does not.
    let full = !g.is_antisymmetric();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if !full && !(i < j && j < k) {
                    continue;
                }
                let ok = (0..d).all(|l| {
                    let mut s = Rational::ZERO;
                    for m in 0..d {
                        s += &(g.c(i, j, m) * g.c(m, k, l));
                        s += &(g.c(j, k, m) * g.c(m, i, l));
                        s += &(g.c(k, i, m) * g.c(m, j, l));
                    }
                    s.is_zero()
                });
                if !ok {
                    violations.push((i, j, k));
                }
            }
        }
    }
    JacobiReport { violations }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidDimension { what: "N", got: n, min: 2 })
    } else {
        Ok(())
    }
}

fn pair_label(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("{}{}", i, j)
    } else {
        format!("{},{}", i, j)
    }
}

/// Index of `E_{ij}` (1-based labels) in the lexicographic gl(N) basis.
pub fn gl_index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// gl(N) on the basis `E_{ij}`, ordered lexicographically by `(i, j)`, with
/// `[E_ik, E_lm] = δ_kl E_im − δ_im E_lk`.
pub fn make_gl(n: usize) -> Result<LieAlgebraData> {
    check_n(n)?;
    let mut names = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            names.push(format!("E{}", pair_label(i, j, n)));
        }
    }
    Ok(LieAlgebraData::from_bracket(names, |a, b| {
        let (i, k) = (a / n + 1, a % n + 1);
        let (l, m) = (b / n + 1, b % n + 1);
        let mut out = Vec::new();
        if k == l {
            out.push((gl_index(n, i, m), Rational::ONE));
        }
        if i == m {
            out.push((gl_index(n, l, k), -Rational::ONE));
        }
        out
    }))
}

/// Position of the generators of the restricted Borel subalgebra inside its
/// own basis `{H_1N, E_1N, E_12, …, E_1,N−1, E_2N, …, E_N−1,N}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BorelIndex {
    pub n: usize,
}

impl BorelIndex {
    pub fn h(&self) -> usize {
        0
    }
    pub fn e(&self) -> usize {
        1
    }
    /// `E_1j` for `2 ≤ j ≤ N−1`
    pub fn first_row(&self, j: usize) -> usize {
        debug_assert!(j >= 2 && j < self.n);
        j
    }
    /// `E_jN` for `2 ≤ j ≤ N−1`
    pub fn last_col(&self, j: usize) -> usize {
        debug_assert!(j >= 2 && j < self.n);
        self.n - 2 + j
    }
    pub fn dim(&self) -> usize {
        2 * (self.n - 1)
    }
    pub fn middle(&self) -> core::ops::Range<usize> {
        2..self.n
    }
}

/// Image of each restricted-Borel basis element in gl(N) coordinates.
pub fn borel_embedding(n: usize) -> Result<Vec<Vec<(usize, Rational)>>> {
    check_n(n)?;
    let b = BorelIndex { n };
    let mut out = vec![Vec::new(); b.dim()];
    out[b.h()] = vec![
        (gl_index(n, 1, 1), Rational::ONE),
        (gl_index(n, n, n), -Rational::ONE),
    ];
    out[b.e()] = vec![(gl_index(n, 1, n), Rational::ONE)];
    for j in b.middle() {
        out[b.first_row(j)] = vec![(gl_index(n, 1, j), Rational::ONE)];
        out[b.last_col(j)] = vec![(gl_index(n, j, n), Rational::ONE)];
    }
    Ok(out)
}

/// The restricted Borel subalgebra B∨ ⊂ sl(N), `dim = 2(N−1)`, with brackets
/// inherited from gl(N).
pub fn make_borel_restricted(n: usize) -> Result<LieAlgebraData> {
    let gl = make_gl(n)?;
    let b = BorelIndex { n };
    let emb = borel_embedding(n)?;
    let mut names = vec![String::new(); b.dim()];
    names[b.h()] = format!("H{}", pair_label(1, n, n));
    names[b.e()] = format!("E{}", pair_label(1, n, n));
    for j in b.middle() {
        names[b.first_row(j)] = format!("E{}", pair_label(1, j, n));
        names[b.last_col(j)] = format!("E{}", pair_label(j, n, n));
    }
    let to_vec = |terms: &[(usize, Rational)]| {
        let mut v = vec![Rational::ZERO; n * n];
        for (k, c) in terms {
            v[*k] = c.clone();
        }
        v
    };
    let mut err = None;
    let g = LieAlgebraData::from_bracket(names, |i, j| {
        let w = gl.bracket(&to_vec(&emb[i]), &to_vec(&emb[j]));
        match project_to_borel(n, &w) {
            Some(terms) => terms,
            None => {
                err = Some((i, j));
                Vec::new()
            }
        }
    });
    match err {
        Some((i, j)) => Err(Error::Inconsistent(format!(
            "bracket of B∨ generators {} and {} leaves the subalgebra",
            i, j
        ))),
        None => Ok(g),
    }
}

/// Expresses a gl(N) vector in the B∨ basis, if it lies in the span.
pub fn project_to_borel(n: usize, w: &[Rational]) -> Option<Vec<(usize, Rational)>> {
    let b = BorelIndex { n };
    let mut rest: Vec<Rational> = w.to_vec();
    let mut out = Vec::new();
    let h = rest[gl_index(n, 1, 1)].clone();
    if !h.is_zero() {
        rest[gl_index(n, 1, 1)] = Rational::ZERO;
        rest[gl_index(n, n, n)] += &h;
        out.push((b.h(), h));
    }
    let mut take = |idx: usize, target: usize, rest: &mut Vec<Rational>| {
        let v = core::mem::take(&mut rest[idx]);
        if !v.is_zero() {
            out.push((target, v));
        }
    };
    take(gl_index(n, 1, n), b.e(), &mut rest);
    for j in b.middle() {
        take(gl_index(n, 1, j), b.first_row(j), &mut rest);
        take(gl_index(n, j, n), b.last_col(j), &mut rest);
    }
    if rest.iter().all(Rational::is_zero) {
        out.sort_by_key(|t| t.0);
        Some(out)
    } else {
        None
    }
}

/// The four-dimensional algebra `{H, A, B, E}` with `[H,E] = 2E`,
/// `[H,A] = αA`, `[H,B] = (2−α)B`, `[E,·] = 0` on A, B and `[A,B] = γE`.
pub fn make_l_abstract(alpha: &Rational, gamma: &Rational) -> LieAlgebraData {
    const H: usize = 0;
    const A: usize = 1;
    const B: usize = 2;
    const E: usize = 3;
    let beta = &Rational::from_integer(2) - alpha;
    let names = ["H", "A", "B", "E"].iter().map(|s| String::from(*s)).collect();
    LieAlgebraData::from_bracket(names, |i, j| {
        let (sign, lo, hi) = if i <= j { (Rational::ONE, i, j) } else { (-Rational::ONE, j, i) };
        let base: Vec<(usize, Rational)> = match (lo, hi) {
            (H, E) => vec![(E, Rational::from_integer(2))],
            (H, A) => vec![(A, alpha.clone())],
            (H, B) => vec![(B, beta.clone())],
            (A, B) => vec![(E, gamma.clone())],
            _ => Vec::new(),
        };
        base.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, &c * &sign))
            .collect()
    })
}

/// A symbol `Y_ab` of the dual coordinates on gl(N), 1-based.
pub type DualSymbol = (usize, usize);

/// The deforming composition μ′ on gl(N)* coordinate symbols, restricted to
/// the six rules that close on the dual of the restricted Borel subalgebra.
/// Pairs not covered by any rule (in either order) compose to zero.
pub fn mu_prime(n: usize, x: DualSymbol, y: DualSymbol) -> Vec<(DualSymbol, Rational)> {
    if x == y {
        return Vec::new();
    }
    if let Some(v) = mu_prime_rule(n, x, y) {
        return v;
    }
    if let Some(v) = mu_prime_rule(n, y, x) {
        return v.into_iter().map(|(s, c)| (s, -c)).collect();
    }
    Vec::new()
}

fn mu_prime_rule(n: usize, x: DualSymbol, y: DualSymbol) -> Option<Vec<(DualSymbol, Rational)>> {
    let one = Rational::ONE;
    let delta = |a: usize, b: usize| if a == b { Rational::ONE } else { Rational::ZERO };
    let diff = |c: Rational| vec![((1, 1), c.clone()), ((n, n), -c)];
    let mut out: Vec<(DualSymbol, Rational)> = Vec::new();
    match (x, y) {
        // μ′(Y_1i, Y_1N) = −Y_1i, i > 1
        ((1, i), (1, nn)) if nn == n && i > 1 && i != n => out.push(((1, i), -one)),
        // μ′(Y_1N, Y_kN) = Y_kN, k < N
        ((1, nn), (k, nn2)) if nn == n && nn2 == n && k < n && k != 1 => out.push(((k, n), one)),
        // μ′(Y_11, Y_1N) = μ′(Y_1N, Y_NN) = −(Y_11 − Y_NN)
        ((1, 1), (1, nn)) if nn == n => out.extend(diff(-one)),
        ((1, nn), (a, b)) if nn == n && a == n && b == n => out.extend(diff(-one)),
        // μ′(Y_1i, Y_1k) = δ_i1 Y_Nk, k, i < N
        ((1, i), (1, k)) if i < n && k < n => out.push(((n, k), delta(i, 1))),
        // μ′(Y_iN, Y_kN) = −δ_kN Y_i1, k, i > 1
        ((i, nn), (k, nn2)) if nn == n && nn2 == n && i > 1 && k > 1 => {
            out.push(((i, 1), -delta(k, n)))
        }
        // μ′(Y_1i, Y_kN) = δ_i1 Y_k1 − δ_kN Y_Ni − 2δ_ik (Y_11 − Y_NN), i < N, k > 1
        ((1, i), (k, nn)) if nn == n && i < n && k > 1 => {
            out.push(((k, 1), delta(i, 1)));
            out.push(((n, i), -delta(k, n)));
            out.extend(diff(&Rational::from_integer(-2) * &delta(i, k)));
        }
        _ => return None,
    }
    out.retain(|(_, c)| !c.is_zero());
    Some(out)
}

/// Basis of (B∨)*: `Y_1N, Y_iN (i = 2..N−1), Y_11 − Y_NN, Y_1i (i = 2..N−1)`,
/// each given as a combination of coordinate symbols.
fn dual_borel_basis(n: usize) -> Vec<(String, Vec<(DualSymbol, Rational)>)> {
    let mut out = Vec::new();
    out.push((format!("Y{}", pair_label(1, n, n)), vec![((1, n), Rational::ONE)]));
    for i in 2..n {
        out.push((format!("Y{}", pair_label(i, n, n)), vec![((i, n), Rational::ONE)]));
    }
    out.push((
        format!("Y{}-Y{}", pair_label(1, 1, n), pair_label(n, n, n)),
        vec![((1, 1), Rational::ONE), ((n, n), -Rational::ONE)],
    ));
    for i in 2..n {
        out.push((format!("Y{}", pair_label(1, i, n)), vec![((1, i), Rational::ONE)]));
    }
    out
}

/// Restricts a combination of coordinate symbols to (B∨)*: symbols that pair
/// trivially with B∨ (`Y_Nk`, `Y_k1` off the diagonal, and the remaining
/// diagonal ones) drop out, `Y_11`/`Y_NN` must come as multiples of
/// `Y_11 − Y_NN`.
fn restrict_to_dual_borel(n: usize, terms: &[(DualSymbol, Rational)]) -> Option<Vec<(usize, Rational)>> {
    let dim = 2 * (n - 1);
    let mut v = vec![Rational::ZERO; dim];
    let mut y11 = Rational::ZERO;
    let mut ynn = Rational::ZERO;
    for ((a, b), c) in terms {
        let (a, b) = (*a, *b);
        if a == 1 && b == n {
            v[0] += c;
        } else if b == n && a > 1 && a < n {
            v[a - 1] += c;
        } else if a == 1 && b > 1 && b < n {
            v[n - 1 + b - 1] += c;
        } else if a == 1 && b == 1 {
            y11 += c;
        } else if a == n && b == n {
            ynn += c;
        }
        // everything else annihilates B∨
    }
    if y11 != -ynn.clone() {
        return None;
    }
    v[n - 1] += &y11;
    Some(
        v.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect(),
    )
}

/// (B∨)* with the Lie multiplication μ′, on the basis
/// `{Y_1N, Y_iN, Y_11 − Y_NN, Y_1i}`.
pub fn make_dual_borel(n: usize) -> Result<LieAlgebraData> {
    if n < 3 {
        return Err(Error::InvalidDimension { what: "N for the dual Borel algebra", got: n, min: 3 });
    }
    let basis = dual_borel_basis(n);
    let names = basis.iter().map(|(s, _)| s.clone()).collect();
    let mut err = None;
    let g = LieAlgebraData::from_bracket(names, |i, j| {
        let mut acc: Vec<(DualSymbol, Rational)> = Vec::new();
        for (x, cx) in &basis[i].1 {
            for (y, cy) in &basis[j].1 {
                let s = cx * cy;
                for (z, cz) in mu_prime(n, *x, *y) {
                    acc.push((z, &cz * &s));
                }
            }
        }
        restrict_to_dual_borel(n, &acc).unwrap_or_else(|| {
            err = Some((i, j));
            Vec::new()
        })
    });
    if let Some((i, j)) = err {
        return Err(Error::Inconsistent(format!(
            "μ′ of dual basis elements {} and {} does not restrict to (B∨)*",
            i, j
        )));
    }
    if !g.is_antisymmetric() {
        return Err(Error::Inconsistent(String::from("μ′ is not antisymmetric")));
    }
    let jac = check_jacobi(&g);
    if !jac.holds() {
        return Err(Error::Inconsistent(format!(
            "μ′ fails Jacobi on {:?}",
            jac.violations
        )));
    }
    Ok(g)
}

/// Outcome of testing whether the map induced by `r_{0;ξ}` (at ξ = 1) is a
/// Lie algebra isomorphism (B∨)* → B∨.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RHomReport {
    pub n: usize,
    pub rank: usize,
    pub dim: usize,
    /// The map matrix, column `j` = image of dual basis vector `j`.
    pub matrix: Vec<Vec<Rational>>,
    /// `λ` with `φ([a, b]) = λ [φ(a), φ(b)]` on all basis pairs, if one exists.
    pub scale: Option<Rational>,
    /// Basis pairs where no common scale works.
    pub residual_pairs: Vec<(usize, usize)>,
}

impl RHomReport {
    pub fn bijective(&self) -> bool {
        self.rank == self.dim
    }

    /// Bijective and bracket-preserving up to a nonzero overall scale, so
    /// that `λ⁻¹·φ`... rescaled by `λ` is a homomorphism.
    pub fn is_isomorphism(&self) -> bool {
        self.bijective()
            && self.residual_pairs.is_empty()
            && self.scale.as_ref().map_or(false, |s| !s.is_zero())
    }
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for i in 0..nrows {
            if i != r && !m[i][col].is_zero() {
                let f = &m[i][col] * &inv;
                for j in col..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= &t;
                }
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// Contracts `r_{0;ξ} = −ξ Σ_α X_α ∧ P_α` (ξ = 1) with a dual vector on its
/// second leg, using the pairing `⟨P_α, Y_β⟩ = δ_αβ` in the listed dual
/// coordinates, and tests the result for being a Lie isomorphism.
pub fn r_hom_check(n: usize) -> Result<RHomReport> {
    let dual = make_dual_borel(n)?;
    let borel = make_borel_restricted(n)?;
    let b = BorelIndex { n };
    let dim = b.dim();
    // P_1 = E_1N, P_i = E_iN, X_1 = H_1N, X_j = 2 E_1j, as B∨ vectors
    let p = |alpha: usize| -> LieVector {
        let idx = if alpha == 1 { b.e() } else { b.last_col(alpha) };
        borel.basis_vector(idx)
    };
    let x = |alpha: usize| -> LieVector {
        if alpha == 1 {
            borel.basis_vector(b.h())
        } else {
            let mut v = borel.basis_vector(b.first_row(alpha));
            v[b.first_row(alpha)] = Rational::from_integer(2);
            v
        }
    };
    // dual basis order: Y_1N ~ P^1, Y_iN ~ P^i, (Y_11 − Y_NN) ~ X^1, Y_1i ~ X^i
    // r = −Σ (X_α ⊗ P_α − P_α ⊗ X_α); ⟨·, Y⟩ on leg two:
    //   P^α ↦ −X_α,   X^α ↦ +P_α
    let mut images: Vec<LieVector> = Vec::with_capacity(dim);
    images.push(x(1).into_iter().map(|c| -c).collect());
    for i in 2..n {
        images.push(x(i).into_iter().map(|c| -c).collect());
    }
    images.push(p(1));
    for i in 2..n {
        images.push(p(i));
    }
    let matrix: Vec<Vec<Rational>> = (0..dim)
        .map(|row| images.iter().map(|col| col[row].clone()).collect())
        .collect();
    let rk = rank(&matrix);

    let apply = |v: &[Rational]| -> LieVector {
        let mut out = vec![Rational::ZERO; dim];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += &(c * &images[j][k]);
            }
        }
        out
    };
    let mut scale: Option<Rational> = None;
    let mut residual_pairs = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let lhs = apply(&dual.bracket(&dual.basis_vector(i), &dual.basis_vector(j)));
            let rhs = borel.bracket(&images[i], &images[j]);
            match proportionality(&lhs, &rhs) {
                Proportional::BothZero => {}
                Proportional::Factor(f) => match &scale {
                    None => scale = Some(f),
                    Some(s) if *s == f => {}
                    Some(_) => residual_pairs.push((i, j)),
                },
                Proportional::No => residual_pairs.push((i, j)),
            }
        }
    }
    Ok(RHomReport {
        n,
        rank: rk,
        dim,
        matrix,
        scale,
        residual_pairs,
    })
}

enum Proportional {
    BothZero,
    Factor(Rational),
    No,
}

/// `lhs = f · rhs` for a unique nonzero `f`?
fn proportionality(lhs: &[Rational], rhs: &[Rational]) -> Proportional {
    let lz = lhs.iter().all(Rational::is_zero);
    let rz = rhs.iter().all(Rational::is_zero);
    match (lz, rz) {
        (true, true) => Proportional::BothZero,
        (true, false) | (false, true) => Proportional::No,
        _ => {
            let k = rhs.iter().position(|c| !c.is_zero()).unwrap();
            let f = &lhs[k] / &rhs[k];
            if lhs.iter().zip(rhs).all(|(a, b)| *a == &f * b) {
                Proportional::Factor(f)
            } else {
                Proportional::No
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn terms(g: &LieAlgebraData, a: &str, b: &str) -> Vec<(String, Rational)> {
        let i = g.index_of(a).unwrap();
        let j = g.index_of(b).unwrap();
        g.bracket_basis(i, j)
            .iter()
            .map(|(k, c)| (g.names()[*k].clone(), c.clone()))
            .collect()
    }

    #[test]
    fn gl2_and_gl3_brackets() {
        let g2 = make_gl(2).unwrap();
        assert_eq!(
            terms(&g2, "E12", "E21"),
            vec![("E11".into(), q(1)), ("E22".into(), q(-1))]
        );
        assert!(terms(&g2, "E11", "E11").is_empty());
        let g3 = make_gl(3).unwrap();
        assert_eq!(terms(&g3, "E12", "E23"), vec![("E13".into(), q(1))]);
        assert!(make_gl(1).is_err());
    }

    #[test]
    fn borel_brackets() {
        let b2 = make_borel_restricted(2).unwrap();
        assert_eq!(b2.names(), &["H12", "E12"]);
        assert_eq!(terms(&b2, "H12", "E12"), vec![("E12".into(), q(2))]);
        let b3 = make_borel_restricted(3).unwrap();
        assert_eq!(b3.names(), &["H13", "E13", "E12", "E23"]);
        assert_eq!(terms(&b3, "E12", "E23"), vec![("E13".into(), q(1))]);
        assert!(terms(&b3, "E12", "E13").is_empty());
        for n in 2..=5 {
            let b = make_borel_restricted(n).unwrap();
            assert_eq!(b.dim(), 2 * (n - 1));
            assert!(check_jacobi(&b).holds());
        }
    }

    #[test]
    fn borel_is_a_subalgebra_of_gl() {
        for n in 2..=4 {
            let gl = make_gl(n).unwrap();
            let b = make_borel_restricted(n).unwrap();
            let emb = borel_embedding(n).unwrap();
            let lift = |terms: &[(usize, Rational)]| {
                let mut v = vec![Rational::ZERO; n * n];
                for (k, c) in terms {
                    for (g, e) in &emb[*k] {
                        v[*g] += &(c * e);
                    }
                }
                v
            };
            for i in 0..b.dim() {
                for j in 0..b.dim() {
                    let in_b = lift(b.bracket_basis(i, j));
                    let in_gl = gl.bracket(&lift(&[(i, q(1))]), &lift(&[(j, q(1))]));
                    assert_eq!(in_b, in_gl);
                }
            }
        }
    }

    #[test]
    fn jacobi_detects_perturbation() {
        let g = make_gl(3).unwrap();
        assert!(check_jacobi(&g).holds());
        let bad = g.with_constant(1, 2, 3, g.c(1, 2, 3) + &q(1));
        assert!(!check_jacobi(&bad).holds());
    }

    #[test]
    fn abstract_l_is_lie_for_any_alpha() {
        for (a, gm) in [(1, 2), (0, 1), (3, -5), (7, 0)] {
            let g = make_l_abstract(&q(a), &q(gm));
            assert!(g.is_antisymmetric());
            assert!(check_jacobi(&g).holds());
        }
        let g = make_l_abstract(&Rational::new(1, 3), &q(1));
        assert_eq!(terms(&g, "H", "B"), vec![("B".into(), Rational::new(5, 3))]);
        assert_eq!(terms(&g, "A", "B"), vec![("E".into(), q(1))]);
        assert!(terms(&make_l_abstract(&q(1), &q(0)), "A", "B").is_empty());
    }

    #[test]
    fn mu_prime_rules() {
        let n = 4;
        assert_eq!(mu_prime(n, (1, 2), (1, 4)), vec![((1, 2), q(-1))]);
        assert_eq!(
            mu_prime(n, (1, 1), (1, 4)),
            vec![((1, 1), q(-1)), ((4, 4), q(1))]
        );
        assert!(mu_prime(n, (1, 2), (1, 3)).is_empty());
        // antisymmetric completion
        assert_eq!(mu_prime(n, (1, 4), (1, 2)), vec![((1, 2), q(1))]);
    }

    #[test]
    fn dual_borel_is_lie() {
        for n in 3..=5 {
            let g = make_dual_borel(n).unwrap();
            assert_eq!(g.dim(), 2 * (n - 1));
            assert!(check_jacobi(&g).holds());
        }
        let g = make_dual_borel(3).unwrap();
        assert_eq!(g.names(), &["Y13", "Y23", "Y11-Y33", "Y12"]);
        assert_eq!(terms(&g, "Y12", "Y13"), vec![("Y12".into(), q(-1))]);
        assert_eq!(terms(&g, "Y11-Y33", "Y13"), vec![("Y11-Y33".into(), q(-2))]);
        assert_eq!(terms(&g, "Y12", "Y23"), vec![("Y11-Y33".into(), q(-2))]);
        assert!(make_dual_borel(2).is_err());
    }

    #[test]
    fn r_hom_is_an_isomorphism() {
        for n in 3..=5 {
            let rep = r_hom_check(n).unwrap();
            assert!(rep.bijective(), "N={}", n);
            assert!(rep.residual_pairs.is_empty(), "N={}: {:?}", n, rep.residual_pairs);
            assert_eq!(rep.scale, Some(q(-1)));
            assert!(rep.is_isomorphism());
        }
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(rank(&m), 1);
        let m = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(rank(&m), 2);
    }
}
