//! Combinatorics of compositions: orbit data, spectral points, diagram
//! statistics, the two partial orders, cyclic-increment moves, and the
//! normalization scalars that clear denominators.
//!
//! Everything here is small exact integer work; the only field-valued
//! outputs are the spectral points (Laurent monomials `q^{λ_i} t^{−k_i}`
//! and their degenerations `λ_i − k_i·r`) and the normalization products.

use std::fmt;

use itertools::Itertools;

use crate::error::Error;
use crate::field::{FieldElement, ParamSet};
use crate::zpoly::{Exponents, SpectralPoint, ZPolynomial};
use crate::Result;

/// An element of `ℕⁿ`: exponent vector of a monomial, label of a family
/// member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "a composition needs at least one part");
        Composition { parts }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts[i]
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|λ|`: the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// 0-based index of the last nonzero part, `None` for the zero
    /// composition.
    pub fn last_nonzero_index(&self) -> Option<usize> {
        self.parts.iter().rposition(|&p| p != 0)
    }

    /// The partition in the orbit: parts sorted non-increasing.
    pub fn lambda_plus(&self) -> Composition {
        let mut v = self.parts.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Composition::new(v)
    }

    /// `k_i = #{j<i : λ_j ≥ λ_i} + #{j>i : λ_j > λ_i}`; always sums to
    /// `n(n−1)/2`, and equals `(0,1,…,n−1)` on partitions.
    pub fn k_vector(&self) -> Vec<u32> {
        let n = self.n();
        (0..n)
            .map(|i| {
                let before = (0..i).filter(|&j| self.parts[j] >= self.parts[i]).count();
                let after = (i + 1..n).filter(|&j| self.parts[j] > self.parts[i]).count();
                (before + after) as u32
            })
            .collect()
    }

    /// The minimal-length permutation with `w(λ⁺) = λ` under the action
    /// `w(μ)_i = μ_{w(i)}`; its one-line values are `k_i + 1`.
    pub fn w_lambda(&self) -> Permutation {
        Permutation::from_zero_based(
            self.k_vector().into_iter().map(|k| k as usize).collect(),
        )
    }

    /// The spectral point `λ̄`, coordinates `q^{λ_i} t^{−k_i}`.
    pub fn point_bar(&self) -> SpectralPoint {
        let k = self.k_vector();
        SpectralPoint::new(
            self.parts
                .iter()
                .zip(&k)
                .map(|(&p, &ki)| FieldElement::qt_monomial(i64::from(p), -i64::from(ki)))
                .collect(),
        )
    }

    /// The degenerate spectral point `λ̃`, coordinates `λ_i − k_i·r`.
    pub fn point_tilde(&self) -> SpectralPoint {
        let k = self.k_vector();
        SpectralPoint::new(
            self.parts
                .iter()
                .zip(&k)
                .map(|(&p, &ki)| FieldElement::r_linear(i64::from(p), -i64::from(ki)))
                .collect(),
        )
    }

    /// Rotate-and-decrement through the last slot:
    /// `(λ_n−1, λ_1, …, λ_{n−1})`; requires `λ_n ≠ 0`.
    pub fn star_full(&self) -> Result<Composition> {
        let n = self.n();
        if self.parts[n - 1] == 0 {
            return Err(Error::InvalidArgument(format!(
                "star rotation needs a nonzero last part, got {}",
                self
            )));
        }
        let mut v = Vec::with_capacity(n);
        v.push(self.parts[n - 1] - 1);
        v.extend_from_slice(&self.parts[..n - 1]);
        Ok(Composition::new(v))
    }

    /// Rotate-and-decrement through the last *nonzero* slot `m`:
    /// `(λ_m−1, λ_1, …, λ_{m−1}, 0, …, 0)`; requires `λ ≠ 0`. Strictly
    /// shrinks the size by one, which drives the raising recursion.
    pub fn star_leading(&self) -> Result<Composition> {
        let m = self.last_nonzero_index().ok_or_else(|| {
            Error::InvalidArgument("star rotation of the zero composition".to_string())
        })?;
        let mut v = Vec::with_capacity(self.n());
        v.push(self.parts[m] - 1);
        v.extend_from_slice(&self.parts[..m]);
        v.resize(self.n(), 0);
        Ok(Composition::new(v))
    }

    /// The cyclic-shift-and-increment move on a sorted 0-based index set
    /// `I = {i_1<…<i_r}`: `μ_{i_j} = λ_{i_{j+1}}` for `j<r` and
    /// `μ_{i_r} = λ_{i_1} + 1`, other entries unchanged.
    pub fn cyclic_increment(&self, indices: &[usize]) -> Result<Composition> {
        if indices.is_empty() {
            return Err(Error::InvalidArgument("empty index set".to_string()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) || *indices.last().unwrap() >= self.n() {
            return Err(Error::InvalidArgument(format!(
                "index set {:?} is not sorted within 1..{}",
                indices,
                self.n()
            )));
        }
        let mut v = self.parts.clone();
        for w in indices.windows(2) {
            v[w[0]] = self.parts[w[1]];
        }
        v[*indices.last().unwrap()] = self.parts[indices[0]] + 1;
        Ok(Composition::new(v))
    }

    /// The inclusion order: `λ ⪯ μ` iff some permutation `π` has
    /// `λ_i < μ_{π(i)}` whenever `i < π(i)` and `λ_i ≤ μ_{π(i)}`
    /// otherwise. The single candidate `π = w_μ^{-1} w_λ` decides it.
    pub fn preceq(&self, mu: &Composition) -> bool {
        assert_eq!(self.n(), mu.n(), "mixed lengths in inclusion order");
        let pi = mu.w_lambda().inverse().compose(&self.w_lambda());
        check_inclusion_witness(self, mu, &pi)
    }

    /// Brute-force inclusion order over all `n!` permutations — the
    /// independent oracle for [`Composition::preceq`].
    pub fn preceq_brute(&self, mu: &Composition) -> bool {
        assert_eq!(self.n(), mu.n(), "mixed lengths in inclusion order");
        Permutation::all(self.n())
            .iter()
            .any(|pi| check_inclusion_witness(self, mu, pi))
    }

    /// The extended order `μ ≤ λ`: strict dominance of the orbit
    /// partitions, or equal partitions with `w_λ ≤ w_μ` in Bruhat order.
    /// Defined only between compositions of equal size.
    pub fn order_leq(mu: &Composition, lambda: &Composition) -> Result<bool> {
        assert_eq!(mu.n(), lambda.n(), "mixed lengths in extended order");
        if mu.size() != lambda.size() {
            return Err(Error::InvalidArgument(format!(
                "extended order compares equal sizes only: |{}| ≠ |{}|",
                mu, lambda
            )));
        }
        let mp = mu.lambda_plus();
        let lp = lambda.lambda_plus();
        if mp == lp {
            Ok(lambda.w_lambda().bruhat_leq(&mu.w_lambda()))
        } else {
            Ok(lp.dominates(&mp))
        }
    }

    /// Dominance of partitions of equal size: every prefix sum of `self`
    /// is at least the matching prefix sum of `other`.
    pub fn dominates(&self, other: &Composition) -> bool {
        assert!(
            self.is_partition() && other.is_partition(),
            "dominance compares partitions"
        );
        assert_eq!(self.size(), other.size(), "dominance compares equal sizes");
        assert_eq!(self.n(), other.n(), "mixed lengths in dominance");
        let mut a = 0i64;
        let mut b = 0i64;
        for i in 0..self.n() {
            a += i64::from(self.parts[i]);
            b += i64::from(other.parts[i]);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All boxes `(i, j)` of the diagram, row-major, 1-based.
    pub fn boxes(&self) -> Vec<DiagramBox> {
        let mut out = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push(DiagramBox { row: i + 1, col: j });
            }
        }
        out
    }

    /// Arm and leg statistics of one box.
    pub fn arm_leg(&self, s: &DiagramBox) -> Result<BoxStats> {
        if s.row == 0 || s.row > self.n() || s.col == 0 || s.col > self.parts[s.row - 1] {
            return Err(Error::InvalidArgument(format!(
                "box ({},{}) outside the diagram of {}",
                s.row, s.col, self
            )));
        }
        let i = s.row - 1;
        let li = self.parts[i];
        let j = s.col;
        let arm = li - j;
        let leg_earlier = (0..i)
            .filter(|&k| j <= self.parts[k] + 1 && self.parts[k] + 1 <= li)
            .count() as u32;
        let leg_later = (i + 1..self.n())
            .filter(|&k| j <= self.parts[k] && self.parts[k] <= li)
            .count() as u32;
        Ok(BoxStats {
            arm,
            leg_earlier,
            leg_later,
            leg: leg_earlier + leg_later,
        })
    }

    /// The product over all boxes that rescales the monic polynomial to
    /// its denominator-free form: `∏(1 − q^{a+1} t^{l+1})` in the
    /// nonsymmetric kind, `∏(1 − q^{a} t^{l+1})` in the symmetric kind
    /// (partitions only).
    pub fn norm_factor(&self, kind: NormKind) -> Result<FieldElement> {
        if kind == NormKind::Symmetric && !self.is_partition() {
            return Err(Error::InvalidArgument(format!(
                "symmetric normalization needs a partition, got {}",
                self
            )));
        }
        let one = FieldElement::one(ParamSet::QT);
        let mut acc = one.clone();
        for s in self.boxes() {
            let st = self.arm_leg(&s)?;
            let a_exp = match kind {
                NormKind::NonSymmetric => i64::from(st.arm) + 1,
                NormKind::Symmetric => i64::from(st.arm),
            };
            let factor = &one - &FieldElement::qt_monomial(a_exp, i64::from(st.leg) + 1);
            acc = &acc * &factor;
        }
        Ok(acc)
    }

    /// Classical counterpart of [`Composition::norm_factor`]:
    /// `∏((a+1) + (l+1)r)` nonsymmetric, `∏(a + (l+1)r)` symmetric.
    pub fn norm_factor_classical(&self, kind: NormKind) -> Result<FieldElement> {
        if kind == NormKind::Symmetric && !self.is_partition() {
            return Err(Error::InvalidArgument(format!(
                "symmetric normalization needs a partition, got {}",
                self
            )));
        }
        let mut acc = FieldElement::one(ParamSet::R);
        for s in self.boxes() {
            let st = self.arm_leg(&s)?;
            let a_term = match kind {
                NormKind::NonSymmetric => i64::from(st.arm) + 1,
                NormKind::Symmetric => i64::from(st.arm),
            };
            let factor = FieldElement::r_linear(a_term, i64::from(st.leg) + 1);
            acc = &acc * &factor;
        }
        Ok(acc)
    }

    pub fn to_exponents(&self) -> Exponents {
        Exponents::new(self.parts.iter().map(|&p| p as i32).collect())
    }

    /// The monomial `z^λ`.
    pub fn z_monomial(&self, params: ParamSet) -> ZPolynomial {
        ZPolynomial::monomial(self.n(), self.to_exponents(), FieldElement::one(params))
    }
}

fn check_inclusion_witness(lambda: &Composition, mu: &Composition, pi: &Permutation) -> bool {
    (0..lambda.n()).all(|i| {
        let p = pi.apply(i);
        if i < p {
            lambda.part(i) < mu.part(p)
        } else {
            lambda.part(i) <= mu.part(p)
        }
    })
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// Which normalization product to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    NonSymmetric,
    Symmetric,
}

/// A cell `(i, j)` of a composition diagram; both coordinates 1-based,
/// `j ≤ λ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramBox {
    pub row: usize,
    pub col: u32,
}

/// Arm and leg statistics of one box: the leg splits into contributions
/// from earlier rows (`k < i`) and later rows (`k > i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxStats {
    pub arm: u32,
    pub leg_earlier: u32,
    pub leg_later: u32,
    pub leg: u32,
}

/// A permutation of `{1..n}`, stored as 0-based one-line images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    imgs: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            imgs: (0..n).collect(),
        }
    }

    /// From 1-based one-line notation, e.g. `[2,3,1]`.
    pub fn from_one_line(v: &[usize]) -> Self {
        assert!(v.iter().all(|&x| x >= 1), "one-line notation is 1-based");
        Self::from_zero_based(v.iter().map(|&x| x - 1).collect())
    }

    pub fn from_zero_based(imgs: Vec<usize>) -> Self {
        let n = imgs.len();
        assert!(n >= 1, "empty permutation");
        let mut seen = vec![false; n];
        for &x in &imgs {
            assert!(x < n && !seen[x], "not a permutation: {:?}", imgs);
            seen[x] = true;
        }
        Permutation { imgs }
    }

    /// The adjacent transposition `s_{i+1}` swapping slots `i` and `i+1`
    /// (0-based `i`).
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        assert!(i + 1 < n, "transposition index out of range");
        let mut imgs: Vec<usize> = (0..n).collect();
        imgs.swap(i, i + 1);
        Permutation { imgs }
    }

    pub fn n(&self) -> usize {
        self.imgs.len()
    }

    /// 0-based image of a 0-based index.
    pub fn apply(&self, i: usize) -> usize {
        self.imgs[i]
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.imgs.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.imgs.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut imgs = vec![0; self.n()];
        for (i, &x) in self.imgs.iter().enumerate() {
            imgs[x] = i;
        }
        Permutation { imgs }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "mixed sizes");
        Permutation {
            imgs: (0..self.n()).map(|i| self.imgs[other.imgs[i]]).collect(),
        }
    }

    /// Act on a composition: `w(μ)_i = μ_{w(i)}`.
    pub fn act(&self, mu: &Composition) -> Composition {
        assert_eq!(self.n(), mu.n(), "mixed sizes");
        Composition::new((0..self.n()).map(|i| mu.part(self.imgs[i])).collect())
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let n = self.n();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.imgs[i] > self.imgs[j]).count())
            .sum()
    }

    /// Bruhat order via the rank criterion: `u ≤ v` iff for all `(i,j)`,
    /// `#{a ≤ i : u(a) ≤ j} ≥ #{a ≤ i : v(a) ≤ j}`.
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        assert_eq!(self.n(), other.n(), "mixed sizes");
        let n = self.n();
        for i in 0..n {
            let mut ru = vec![0u32; n];
            let mut rv = vec![0u32; n];
            for a in 0..=i {
                ru[self.imgs[a]] += 1;
                rv[other.imgs[a]] += 1;
            }
            let mut su = 0u32;
            let mut sv = 0u32;
            for j in 0..n {
                su += ru[j];
                sv += rv[j];
                if su < sv {
                    return false;
                }
            }
        }
        true
    }

    /// The lexicographically minimal reduced word, as 0-based adjacent
    /// letters applied left to right: `self = s_{w[0]} s_{w[1]} ⋯`.
    /// Built greedily from the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut w = self.clone();
        let mut word = Vec::with_capacity(w.length());
        loop {
            let inv = w.inverse();
            // Left descent at i: the value i sits to the right of i+1.
            let Some(i) = (0..n.saturating_sub(1)).find(|&i| inv.imgs[i] > inv.imgs[i + 1])
            else {
                break;
            };
            word.push(i);
            w = Permutation::adjacent_transposition(n, i).compose(&w);
        }
        debug_assert!(w.is_identity());
        word
    }

    /// All `n!` permutations, in a deterministic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..n)
            .permutations(n)
            .map(Permutation::from_zero_based)
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line().iter().join(","))
    }
}

/// All compositions with `n` parts of size exactly `s`, lexicographically
/// descending (first part largest first).
pub fn compositions_of_size(n: usize, s: u32) -> Vec<Composition> {
    fn rec(n: usize, s: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 1 {
            prefix.push(s);
            out.push(Composition::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=s).rev() {
            prefix.push(first);
            rec(n - 1, s - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, s, &mut Vec::new(), &mut out);
    out
}

/// All partitions with at most `n` parts of size exactly `s` (padded to
/// length `n`), lexicographically descending.
pub fn partitions_of_size(n: usize, s: u32) -> Vec<Composition> {
    fn rec(slots: usize, s: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 0 {
            if s == 0 {
                out.push(Composition::new(prefix.clone()));
            }
            return;
        }
        let hi = cap.min(s);
        for first in (0..=hi).rev() {
            // Remaining slots must be able to absorb the rest.
            if u64::from(s - first) > u64::from(first) * (slots as u64 - 1) {
                continue;
            }
            prefix.push(first);
            rec(slots - 1, s - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, s, s, &mut Vec::new(), &mut out);
    out
}

/// All compositions of each size `0..=d`, degree ascending and
/// lexicographically descending within a degree — the enumeration order
/// every interpolation matrix and report uses.
pub fn compositions_up_to(n: usize, d: u32) -> Vec<Composition> {
    (0..=d).flat_map(|s| compositions_of_size(n, s)).collect()
}

/// Partition counterpart of [`compositions_up_to`].
pub fn partitions_up_to(n: usize, d: u32) -> Vec<Composition> {
    (0..=d).flat_map(|s| partitions_of_size(n, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn lambda_plus_examples() {
        assert_eq!(comp(&[0, 2, 1]).lambda_plus(), comp(&[2, 1, 0]));
        assert_eq!(comp(&[2, 1, 0]).lambda_plus(), comp(&[2, 1, 0]));
        assert_eq!(comp(&[1, 0, 2]).lambda_plus(), comp(&[2, 1, 0]));
    }

    #[test]
    fn k_vector_examples() {
        assert_eq!(comp(&[2, 1, 0]).k_vector(), vec![0, 1, 2]);
        assert_eq!(comp(&[0, 2, 1]).k_vector(), vec![2, 0, 1]);
        assert_eq!(comp(&[0, 0]).k_vector(), vec![0, 1]);
        // The k-entries always total n(n−1)/2.
        for n in 1..=4usize {
            for lam in compositions_up_to(n, 3) {
                let total: u32 = lam.k_vector().iter().sum();
                assert_eq!(total as usize, n * (n - 1) / 2, "λ={}", lam);
            }
        }
    }

    #[test]
    fn w_lambda_examples_and_minimality() {
        assert!(comp(&[2, 1, 0]).w_lambda().is_identity());
        assert_eq!(comp(&[0, 1]).w_lambda().one_line(), vec![2, 1]);
        assert_eq!(comp(&[1, 0, 2]).w_lambda().one_line(), vec![2, 3, 1]);
        // Against the definition: minimal length among all w(λ⁺)=λ.
        for n in 1..=4usize {
            for lam in compositions_up_to(n, 3) {
                let plus = lam.lambda_plus();
                let w = lam.w_lambda();
                assert_eq!(w.act(&plus), lam, "λ={}", lam);
                let min_len = Permutation::all(n)
                    .into_iter()
                    .filter(|p| p.act(&plus) == lam)
                    .map(|p| p.length())
                    .min()
                    .unwrap();
                assert_eq!(w.length(), min_len, "λ={}", lam);
            }
        }
    }

    #[test]
    fn spectral_point_examples() {
        let rho = comp(&[0, 0, 0]).point_bar();
        for (i, c) in rho.coords().iter().enumerate() {
            assert_eq!(c, &FieldElement::qt_monomial(0, -(i as i64)));
        }
        let p = comp(&[1, 0]).point_bar();
        assert_eq!(p.coord(0), &FieldElement::qt_monomial(1, 0));
        assert_eq!(p.coord(1), &FieldElement::qt_monomial(0, -1));
        let p = comp(&[0, 2, 1]).point_bar();
        assert_eq!(p.coord(0), &FieldElement::qt_monomial(0, -2));
        assert_eq!(p.coord(1), &FieldElement::qt_monomial(2, 0));
        assert_eq!(p.coord(2), &FieldElement::qt_monomial(1, -1));
    }

    #[test]
    fn degenerate_point_examples() {
        let rho = comp(&[0, 0, 0]).point_tilde();
        assert_eq!(rho.coord(0), &FieldElement::r_linear(0, 0));
        assert_eq!(rho.coord(1), &FieldElement::r_linear(0, -1));
        assert_eq!(rho.coord(2), &FieldElement::r_linear(0, -2));
        let p = comp(&[1, 0]).point_tilde();
        assert_eq!(p.coord(0), &FieldElement::r_linear(1, 0));
        assert_eq!(p.coord(1), &FieldElement::r_linear(0, -1));
        let p = comp(&[0, 2, 1]).point_tilde();
        assert_eq!(p.coord(0), &FieldElement::r_linear(0, -2));
        assert_eq!(p.coord(1), &FieldElement::r_linear(2, 0));
        assert_eq!(p.coord(2), &FieldElement::r_linear(1, -1));
    }

    #[test]
    fn star_rotations() {
        assert_eq!(comp(&[1, 0, 2]).star_full().unwrap(), comp(&[1, 1, 0]));
        assert_eq!(comp(&[1, 1]).star_full().unwrap(), comp(&[0, 1]));
        assert!(comp(&[1, 0]).star_full().is_err());
        assert_eq!(comp(&[2, 0, 0]).star_leading().unwrap(), comp(&[1, 0, 0]));
        assert_eq!(comp(&[1, 0, 2]).star_leading().unwrap(), comp(&[1, 1, 0]));
        assert!(comp(&[0, 0]).star_leading().is_err());
    }

    #[test]
    fn star_rotates_the_spectral_point() {
        // point_bar(λ*) = (λ̄_n/q, λ̄_1, …, λ̄_{n−1}) whenever λ_n ≠ 0.
        let q_inv = FieldElement::qt_monomial(-1, 0);
        for lam in compositions_up_to(3, 3) {
            if lam.part(2) == 0 {
                continue;
            }
            let star = lam.star_full().unwrap();
            let p = lam.point_bar();
            let ps = star.point_bar();
            assert_eq!(ps.coord(0), &(p.coord(2) * &q_inv), "λ={}", lam);
            assert_eq!(ps.coord(1), p.coord(0), "λ={}", lam);
            assert_eq!(ps.coord(2), p.coord(1), "λ={}", lam);
        }
    }

    #[test]
    fn spectral_points_are_pairwise_distinct() {
        for n in 1..=3usize {
            let pts: Vec<_> = compositions_up_to(n, 3)
                .iter()
                .map(|lam| lam.point_bar())
                .collect();
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    assert_ne!(pts[i], pts[j]);
                }
            }
        }
    }

    #[test]
    fn bruhat_order_basics() {
        let id = Permutation::identity(3);
        let s1 = Permutation::from_one_line(&[2, 1, 3]);
        let w0 = Permutation::from_one_line(&[3, 2, 1]);
        let c = Permutation::from_one_line(&[2, 3, 1]);
        assert!(id.bruhat_leq(&w0) && id.bruhat_leq(&s1) && id.bruhat_leq(&id));
        assert!(!s1.bruhat_leq(&id));
        assert!(c.bruhat_leq(&w0));
        assert!(!w0.bruhat_leq(&c));
    }

    #[test]
    fn bruhat_matches_subword_closure() {
        // Independent oracle: u ≤ v iff u is the product of some subword
        // of one fixed reduced word of v.
        for n in 2..=4usize {
            for v in Permutation::all(n) {
                let word = v.reduced_word();
                let mut reachable = std::collections::BTreeSet::new();
                for mask in 0u32..(1 << word.len()) {
                    let mut p = Permutation::identity(n);
                    for (pos, &letter) in word.iter().enumerate() {
                        if mask & (1 << pos) != 0 {
                            p = p.compose(&Permutation::adjacent_transposition(n, letter));
                        }
                    }
                    reachable.insert(p);
                }
                for u in Permutation::all(n) {
                    assert_eq!(
                        u.bruhat_leq(&v),
                        reachable.contains(&u),
                        "u={} v={}",
                        u,
                        v
                    );
                }
            }
        }
    }

    #[test]
    fn reduced_words_reconstruct() {
        for n in 1..=4usize {
            for w in Permutation::all(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length(), "w={}", w);
                let mut p = Permutation::identity(n);
                for &i in &word {
                    p = p.compose(&Permutation::adjacent_transposition(n, i));
                }
                assert_eq!(p, w);
            }
        }
        assert_eq!(
            Permutation::from_one_line(&[3, 2, 1]).reduced_word(),
            vec![0, 1, 0]
        );
    }

    #[test]
    fn extended_order_examples() {
        assert!(Composition::order_leq(&comp(&[0, 1]), &comp(&[1, 0])).unwrap());
        assert!(Composition::order_leq(&comp(&[1, 1]), &comp(&[2, 0])).unwrap());
        assert!(!Composition::order_leq(&comp(&[2, 0]), &comp(&[1, 1])).unwrap());
        assert!(Composition::order_leq(&comp(&[1, 0]), &comp(&[1, 1])).is_err());
        // Reflexive, and partitions sit on top of their orbits.
        for lam in compositions_up_to(3, 3) {
            assert!(Composition::order_leq(&lam, &lam).unwrap());
            assert!(Composition::order_leq(&lam, &lam.lambda_plus()).unwrap());
        }
    }

    #[test]
    fn cyclic_increment_examples() {
        let lam = comp(&[1, 0, 2]);
        assert_eq!(lam.cyclic_increment(&[0, 2]).unwrap(), comp(&[2, 0, 2]));
        assert_eq!(lam.cyclic_increment(&[1]).unwrap(), comp(&[1, 1, 2]));
        assert_eq!(comp(&[1, 2]).cyclic_increment(&[0, 1]).unwrap(), comp(&[2, 2]));
        assert!(lam.cyclic_increment(&[]).is_err());
        assert!(lam.cyclic_increment(&[2, 0]).is_err());
        assert!(lam.cyclic_increment(&[3]).is_err());
    }

    #[test]
    fn inclusion_order_examples() {
        let lam = comp(&[1, 0, 2]);
        assert!(lam.preceq(&lam));
        assert!(lam.preceq(&comp(&[2, 0, 2])));
        assert!(!comp(&[1, 0]).preceq(&comp(&[0, 1])));
    }

    #[test]
    fn inclusion_candidate_matches_brute_force() {
        // Exhaustive: every pair of compositions, n ≤ 4, sizes ≤ 4 for
        // n ≤ 3 and ≤ 3 for n = 4 (the n=4 size-4 block runs in the
        // release-mode verification suites).
        for (n, dmax) in [(1usize, 4u32), (2, 4), (3, 4), (4, 3)] {
            let all = compositions_up_to(n, dmax);
            for a in &all {
                for b in &all {
                    assert_eq!(a.preceq(b), a.preceq_brute(b), "λ={} μ={}", a, b);
                }
            }
        }
    }

    #[test]
    fn inclusion_with_larger_size_forces_equality() {
        // λ ⪯ μ with |λ| ≥ |μ| can only be equality.
        for n in 1..=3usize {
            let all = compositions_up_to(n, 3);
            for a in &all {
                for b in &all {
                    if a.preceq(b) && a.size() >= b.size() {
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn strict_inclusion_admits_an_increment_move() {
        // λ ≺ μ (strict) admits an index set I with c_I(λ) ⪯ μ.
        for n in 1..=3usize {
            let all = compositions_up_to(n, 3);
            for a in &all {
                for b in &all {
                    if !a.preceq(b) || a == b {
                        continue;
                    }
                    let found = subsets(n).iter().any(|idx| {
                        a.cyclic_increment(idx)
                            .map(|c| c.preceq(b))
                            .unwrap_or(false)
                    });
                    assert!(found, "no move from {} toward {}", a, b);
                }
            }
        }
    }

    fn subsets(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            out.push((0..n).filter(|i| mask & (1 << i) != 0).collect());
        }
        out
    }

    #[test]
    fn arm_leg_examples() {
        let s11 = DiagramBox { row: 1, col: 1 };
        let st = comp(&[2, 1, 0]).arm_leg(&s11).unwrap();
        assert_eq!((st.arm, st.leg_earlier, st.leg_later, st.leg), (1, 0, 1, 1));
        let st = comp(&[1]).arm_leg(&s11).unwrap();
        assert_eq!((st.arm, st.leg), (0, 0));
        let st = comp(&[0, 2]).arm_leg(&DiagramBox { row: 2, col: 1 }).unwrap();
        assert_eq!((st.arm, st.leg_earlier, st.leg_later), (1, 1, 0));
        assert!(comp(&[1, 0]).arm_leg(&DiagramBox { row: 2, col: 1 }).is_err());
        // Partitions have no earlier-row leg, and the later-row count is
        // the column height below the box.
        for lam in partitions_up_to(4, 4) {
            for s in lam.boxes() {
                let st = lam.arm_leg(&s).unwrap();
                assert_eq!(st.leg_earlier, 0, "λ={} s=({},{})", lam, s.row, s.col);
                let classic = (s.row..lam.n())
                    .filter(|&k| lam.part(k) >= s.col)
                    .count() as u32;
                assert_eq!(st.leg_later, classic);
            }
        }
    }

    #[test]
    fn norm_factor_examples() {
        let one = FieldElement::one(ParamSet::QT);
        let qt = FieldElement::qt_monomial(1, 1);
        let qt2 = FieldElement::qt_monomial(1, 2);
        assert_eq!(comp(&[0]).norm_factor(NormKind::NonSymmetric).unwrap(), one);
        assert_eq!(
            comp(&[1]).norm_factor(NormKind::NonSymmetric).unwrap(),
            &one - &qt
        );
        assert_eq!(
            comp(&[1, 0]).norm_factor(NormKind::NonSymmetric).unwrap(),
            &one - &qt
        );
        assert_eq!(
            comp(&[0, 1]).norm_factor(NormKind::NonSymmetric).unwrap(),
            &one - &qt2
        );
        assert!(comp(&[0, 1]).norm_factor(NormKind::Symmetric).is_err());
        // Symmetric kind at a single column: a=0 boxes give 1 − t^{l+1}.
        assert_eq!(
            comp(&[1, 1]).norm_factor(NormKind::Symmetric).unwrap(),
            (&one - &FieldElement::qt_monomial(0, 2))
                * (&one - &FieldElement::qt_monomial(0, 1))
        );
    }

    #[test]
    fn norm_factor_classical_examples() {
        let one = FieldElement::one(ParamSet::R);
        assert_eq!(
            comp(&[0]).norm_factor_classical(NormKind::NonSymmetric).unwrap(),
            one
        );
        assert_eq!(
            comp(&[1]).norm_factor_classical(NormKind::NonSymmetric).unwrap(),
            FieldElement::r_linear(1, 1)
        );
        assert_eq!(
            comp(&[2]).norm_factor_classical(NormKind::NonSymmetric).unwrap(),
            &FieldElement::r_linear(1, 1) * &FieldElement::r_linear(2, 1)
        );
        assert_eq!(
            comp(&[1]).norm_factor_classical(NormKind::Symmetric).unwrap(),
            FieldElement::r_linear(0, 1)
        );
    }

    #[test]
    fn enumeration_order() {
        let c = compositions_up_to(2, 1);
        assert_eq!(c, vec![comp(&[0, 0]), comp(&[1, 0]), comp(&[0, 1])]);
        let p = partitions_up_to(2, 2);
        assert_eq!(
            p,
            vec![comp(&[0, 0]), comp(&[1, 0]), comp(&[2, 0]), comp(&[1, 1])]
        );
        assert_eq!(compositions_up_to(3, 2).len(), 10);
        // Degree ascending, lexicographically descending within a degree.
        let c32 = compositions_of_size(3, 2);
        assert_eq!(
            c32,
            vec![
                comp(&[2, 0, 0]),
                comp(&[1, 1, 0]),
                comp(&[1, 0, 1]),
                comp(&[0, 2, 0]),
                comp(&[0, 1, 1]),
                comp(&[0, 0, 2]),
            ]
        );
    }

    #[test]
    fn permutation_basics() {
        let w = Permutation::from_one_line(&[2, 3, 1]);
        assert_eq!(w.inverse().one_line(), vec![3, 1, 2]);
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(3));
        assert_eq!(w.length(), 2);
        assert_eq!(Permutation::all(4).len(), 24);
        // w(μ)_i = μ_{w(i)}: applying w_λ to λ⁺ recovers λ.
        let lam = comp(&[1, 0, 2]);
        assert_eq!(lam.w_lambda().act(&lam.lambda_plus()), lam);
    }
}
