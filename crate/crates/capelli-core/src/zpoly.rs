//! Sparse Laurent polynomials in the main variables `z_1, …, z_n` with
//! coefficients in the parameter field.
//!
//! Exponent vectors are ordered graded-lexicographically so term
//! iteration is deterministic; negative exponents are allowed because
//! operator pipelines pass through Laurent territory even when their end
//! results are genuine polynomials. Coefficients are canonical
//! [`FieldElement`]s, so zero pruning — and therefore structural equality
//! — is exact.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::error::Error;
use crate::field::{BigRational, FieldElement, ParamSet};
use crate::Result;

/// Exponent vector of a monomial in `z_1, …, z_n`, graded-lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponents(Vec<i32>);

impl Exponents {
    pub fn new(exps: Vec<i32>) -> Self {
        Exponents(exps)
    }

    pub fn zero(n: usize) -> Self {
        Exponents(vec![0; n])
    }

    /// The standard basis vector `e_i` (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        assert!(i < n, "variable index out of range");
        let mut e = vec![0; n];
        e[i] = 1;
        Exponents(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    /// Total degree (sum of entries, negatives included).
    pub fn total(&self) -> i64 {
        self.0.iter().map(|&e| i64::from(e)).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.0.len(), other.0.len(), "mixed variable counts");
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.0.len(), other.0.len(), "mixed variable counts");
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Entries sorted descending — the dominant representative of the
    /// symmetric-group orbit.
    pub fn sorted_desc(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Exponents(v)
    }

    pub fn is_sorted_desc(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A point of the torus where polynomials get evaluated: one coordinate
/// per main variable, all over the same parameter set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralPoint {
    coords: Vec<FieldElement>,
}

impl SpectralPoint {
    pub fn new(coords: Vec<FieldElement>) -> Self {
        assert!(!coords.is_empty(), "empty point");
        let params = coords[0].params();
        assert!(
            coords.iter().all(|c| c.params() == params),
            "mixed parameter sets in one point"
        );
        SpectralPoint { coords }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn params(&self) -> ParamSet {
        self.coords[0].params()
    }

    pub fn coord(&self, i: usize) -> &FieldElement {
        &self.coords[i]
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    /// Evaluate every coordinate at rational parameter values.
    pub fn specialize(&self, values: &[BigRational]) -> Result<Vec<BigRational>> {
        self.coords.iter().map(|c| c.specialize(values)).collect()
    }
}

/// Sparse Laurent polynomial in `z_1, …, z_n` over the parameter field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPolynomial {
    n: usize,
    params: ParamSet,
    terms: BTreeMap<Exponents, FieldElement>,
}

impl ZPolynomial {
    pub fn zero(n: usize, params: ParamSet) -> Self {
        assert!(n >= 1, "need at least one variable");
        ZPolynomial {
            n,
            params,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, params: ParamSet) -> Self {
        Self::constant(n, FieldElement::one(params))
    }

    pub fn constant(n: usize, c: FieldElement) -> Self {
        let params = c.params();
        let mut p = Self::zero(n, params);
        if !c.is_zero() {
            p.terms.insert(Exponents::zero(n), c);
        }
        p
    }

    /// The variable `z_i` (0-based).
    pub fn var(n: usize, params: ParamSet, i: usize) -> Self {
        Self::monomial(n, Exponents::unit(n, i), FieldElement::one(params))
    }

    /// A single term `c · z^e`.
    pub fn monomial(n: usize, exps: Exponents, c: FieldElement) -> Self {
        assert_eq!(exps.len(), n, "exponent length must match variable count");
        let mut p = Self::zero(n, c.params());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> ParamSet {
        self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &Exponents) -> FieldElement {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(self.params))
    }

    /// Leading term under graded-lexicographic order.
    pub fn leading(&self) -> Option<(&Exponents, &FieldElement)> {
        self.terms.last_key_value()
    }

    /// `Some(c)` if the polynomial is the constant `c` (zero included).
    pub fn as_constant(&self) -> Option<FieldElement> {
        if self.terms.is_empty() {
            return Some(FieldElement::zero(self.params));
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Exponents::zero(self.n)) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Largest total degree, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(Exponents::total).max()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Exponents::is_nonnegative)
    }

    pub(crate) fn insert_add(&mut self, e: Exponents, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_same(&self, other: &Self) {
        assert!(
            self.n == other.n && self.params == other.params,
            "mixed domains: {} vars over {:?} vs {} vars over {:?}",
            self.n,
            self.params,
            other.n,
            other.params
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, None)
    }

    /// Product, dropping terms of total degree above the bound when one
    /// is given.
    pub fn mul_truncated(&self, other: &Self, max_total: Option<i64>) -> Self {
        self.check_same(other);
        let mut out = Self::zero(self.n, self.params);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.add(eb);
                if let Some(bound) = max_total {
                    if e.total() > bound {
                        continue;
                    }
                }
                out.insert_add(e, ca * cb);
            }
        }
        out
    }

    /// Multiply by a field scalar.
    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, self.params);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    /// Multiply by a single (Laurent) term `c · z^e`.
    pub fn mul_monomial(&self, exps: &Exponents, c: &FieldElement) -> Self {
        assert_eq!(exps.len(), self.n, "exponent length must match variable count");
        if c.is_zero() {
            return Self::zero(self.n, self.params);
        }
        let mut out = Self::zero(self.n, self.params);
        for (e, v) in &self.terms {
            out.terms.insert(e.add(exps), v * c);
        }
        out
    }

    /// Multiply by `z_i^e` (0-based, `e` possibly negative).
    pub fn mul_var_pow(&self, i: usize, e: i32) -> Self {
        assert!(i < self.n, "variable index out of range");
        let mut exps = vec![0; self.n];
        exps[i] = e;
        self.mul_monomial(&Exponents::new(exps), &FieldElement::one(self.params))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n, self.params);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Swap the variables `z_i` and `z_{i+1}` (0-based `i`).
    pub fn swap_adjacent(&self, i: usize) -> Self {
        assert!(i + 1 < self.n, "transposition index out of range");
        let mut out = Self::zero(self.n, self.params);
        for (e, c) in &self.terms {
            let mut v = e.as_slice().to_vec();
            v.swap(i, i + 1);
            out.terms.insert(Exponents::new(v), c.clone());
        }
        out
    }

    /// Relabel variables by `z_i ↦ z_{perm[i]}` (0-based one-line images).
    pub fn permute_by(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must match");
        debug_assert!({
            let mut seen = perm.to_vec();
            seen.sort_unstable();
            seen == (0..self.n).collect::<Vec<_>>()
        });
        let mut out = Self::zero(self.n, self.params);
        for (e, c) in &self.terms {
            let mut v = vec![0; self.n];
            for (i, &img) in perm.iter().enumerate() {
                v[img] = e.get(i);
            }
            out.terms.insert(Exponents::new(v), c.clone());
        }
        out
    }

    /// True when the polynomial is invariant under every adjacent
    /// transposition (hence under the whole symmetric group).
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap_adjacent(i) == *self)
    }

    /// The top-degree homogeneous component.
    pub fn top_homogeneous(&self) -> Self {
        let mut out = Self::zero(self.n, self.params);
        if let Some(d) = self.degree() {
            for (e, c) in &self.terms {
                if e.total() == d {
                    out.terms.insert(e.clone(), c.clone());
                }
            }
        }
        out
    }

    /// Evaluate at a point; negative exponents require the matching
    /// coordinate to be invertible.
    pub fn evaluate(&self, point: &SpectralPoint) -> Result<FieldElement> {
        assert_eq!(point.n(), self.n, "point size must match variable count");
        assert!(point.params() == self.params, "mixed parameter sets");
        let mut acc = FieldElement::zero(self.params);
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for i in 0..self.n {
                let exp = e.get(i);
                if exp == 0 {
                    continue;
                }
                let p = point.coord(i).pow(exp.unsigned_abs());
                if exp < 0 {
                    term = term.div(&p).map_err(|_| {
                        Error::DegenerateSpecialization(format!(
                            "negative power of z_{} at a zero coordinate",
                            i + 1
                        ))
                    })?;
                } else {
                    term = &term * &p;
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Exact division; the quotient may be Laurent, and indivisibility is
    /// an error. Monomial (unit) content is split off both sides first,
    /// then the genuine parts run graded-lexicographic long division.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        self.check_same(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let (se, sp) = self.split_z_content();
        let (de, dp) = divisor.split_z_content();
        let mut rem = sp;
        let mut quot = Self::zero(self.n, self.params);
        let (bm, bc) = {
            let (m, c) = dp.leading().expect("nonzero divisor");
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let qe = rm.sub(&bm);
            if !qe.is_nonnegative() {
                return Err(Error::DivisibilityViolation(
                    "leading term not divisible".to_string(),
                ));
            }
            let qc = rc.div(&bc)?;
            quot.insert_add(qe.clone(), qc.clone());
            rem = rem.sub(&dp.mul_monomial(&qe, &qc));
            debug_assert!(rem.leading().map_or(true, |(m, _)| *m < rm));
        }
        Ok(quot.mul_monomial(&se.sub(&de), &FieldElement::one(self.params)))
    }

    /// Split into a unit monomial `z^e` (per-variable minimum exponents)
    /// and a genuine polynomial with zero minimum in every variable.
    fn split_z_content(&self) -> (Exponents, Self) {
        assert!(!self.is_zero(), "zero has no monomial content");
        let mins: Vec<i32> = (0..self.n)
            .map(|i| self.terms.keys().map(|e| e.get(i)).min().unwrap())
            .collect();
        let mins = Exponents::new(mins);
        let mut p = Self::zero(self.n, self.params);
        for (e, c) in &self.terms {
            p.terms.insert(e.sub(&mins), c.clone());
        }
        (mins, p)
    }

    /// Substitute `z_i ↦ scale·z_i + shift` for every variable
    /// simultaneously. Genuine polynomials only.
    pub fn affine_substitute(&self, scale: &FieldElement, shift: &FieldElement) -> Self {
        assert!(self.is_polynomial(), "affine substitution needs a genuine polynomial");
        assert!(scale.params() == self.params && shift.params() == self.params);
        // Per-variable power tables of (scale·z_i + shift).
        let max_exp: Vec<i32> = (0..self.n)
            .map(|i| self.terms.keys().map(|e| e.get(i)).max().unwrap_or(0))
            .collect();
        let mut pows: Vec<Vec<ZPolynomial>> = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let lin = Self::var(self.n, self.params, i)
                .scale(scale)
                .add(&Self::constant(self.n, shift.clone()));
            let mut table = vec![Self::one(self.n, self.params)];
            for k in 1..=max_exp[i] {
                let prev = &table[(k - 1) as usize];
                table.push(prev.mul(&lin));
            }
            pows.push(table);
        }
        let mut out = Self::zero(self.n, self.params);
        for (e, c) in &self.terms {
            let mut term = Self::constant(self.n, c.clone());
            for i in 0..self.n {
                let exp = e.get(i);
                if exp > 0 {
                    term = term.mul(&pows[i][exp as usize]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Substitute `t = q^r` in every coefficient, landing over `ℚ(q)`.
    pub fn substitute_t_power(&self, r: u32) -> Result<Self> {
        let mut out = Self::zero(self.n, ParamSet::Q);
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), c.substitute_t_power(r)?);
        }
        Ok(out)
    }

    /// Evaluate every coefficient at rational parameter values; zero
    /// coefficients are dropped.
    pub fn specialize_coeffs(
        &self,
        values: &[BigRational],
    ) -> Result<BTreeMap<Exponents, BigRational>> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let v = c.specialize(values)?;
            if !v.is_zero() {
                out.insert(e.clone(), v);
            }
        }
        Ok(out)
    }

    /// Coefficient-wise `lim_{q→1} · /(q−1)^k` over the one-parameter
    /// `q` set; zero limits are dropped.
    pub fn limit_q1(&self, k: u32) -> Result<BTreeMap<Exponents, BigRational>> {
        assert!(self.params == ParamSet::Q, "q=1 limit needs the q-only set");
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let v = c.limit_q1(k)?;
            if !v.is_zero() {
                out.insert(e.clone(), v);
            }
        }
        Ok(out)
    }

    /// The monomial symmetric polynomial for the sorted-descending
    /// exponent `parts`: the sum of `z^α` over the distinct permutations
    /// `α` of `parts` (padded with zeros to `n` entries).
    pub fn monomial_symmetric(n: usize, params: ParamSet, parts: &[i32]) -> Self {
        assert!(parts.len() <= n, "more parts than variables");
        assert!(parts.iter().all(|&p| p >= 0), "parts must be nonnegative");
        let mut padded = parts.to_vec();
        padded.resize(n, 0);
        padded.sort_unstable_by(|a, b| b.cmp(a));
        let mut orbit: std::collections::BTreeSet<Vec<i32>> = std::collections::BTreeSet::new();
        distinct_permutations(&mut padded, 0, &mut orbit);
        let mut out = Self::zero(n, params);
        for v in orbit {
            out.terms
                .insert(Exponents::new(v), FieldElement::one(params));
        }
        out
    }

    /// Expand a symmetric polynomial in the monomial symmetric basis:
    /// pairs of (sorted-descending exponent, coefficient). Fails when the
    /// input is not symmetric.
    pub fn monomial_symmetric_expand(&self) -> Result<Vec<(Exponents, FieldElement)>> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(self
            .terms
            .iter()
            .filter(|(e, _)| e.is_sorted_desc())
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect())
    }
}

/// Collect all distinct permutations of `v` (recursively, skipping equal
/// choices at each slot).
fn distinct_permutations(v: &mut Vec<i32>, start: usize, out: &mut std::collections::BTreeSet<Vec<i32>>) {
    if start == v.len() {
        out.insert(v.clone());
        return;
    }
    let mut used = std::collections::BTreeSet::new();
    for i in start..v.len() {
        if !used.insert(v[i]) {
            continue;
        }
        v.swap(start, i);
        distinct_permutations(v, start + 1, out);
        v.swap(start, i);
    }
}

impl fmt::Display for ZPolynomial {
    /// Terms leading-first; each coefficient parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = (0..self.n)
                .filter(|&j| e.get(j) != 0)
                .map(|j| {
                    if e.get(j) == 1 {
                        format!("z{}", j + 1)
                    } else {
                        format!("z{}^{}", j + 1, e.get(j))
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})*{}", c, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ratio};

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(ParamSet::QT, n)
    }
    fn z(i: usize) -> ZPolynomial {
        ZPolynomial::var(2, ParamSet::QT, i)
    }

    #[test]
    fn graded_lex_on_exponents() {
        let e20 = Exponents::new(vec![2, 0]);
        let e11 = Exponents::new(vec![1, 1]);
        let e02 = Exponents::new(vec![0, 2]);
        let e10 = Exponents::new(vec![1, 0]);
        assert!(e20 > e11 && e11 > e02 && e02 > e10);
    }

    #[test]
    fn square_of_sum() {
        let f = z(0).add(&z(1));
        let sq = f.pow(2);
        assert_eq!(sq.coefficient(&Exponents::new(vec![2, 0])), fe(1));
        assert_eq!(sq.coefficient(&Exponents::new(vec![1, 1])), fe(2));
        assert_eq!(sq.coefficient(&Exponents::new(vec![0, 2])), fe(1));
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.degree(), Some(2));
    }

    #[test]
    fn evaluate_laurent_term() {
        // f = t·z1² + q^{-1}·z2^{-1} at (q, t): t·q² + q^{-1}t^{-1}
        let f = ZPolynomial::monomial(
            2,
            Exponents::new(vec![2, 0]),
            FieldElement::qt_monomial(0, 1),
        )
        .add(&ZPolynomial::monomial(
            2,
            Exponents::new(vec![0, -1]),
            FieldElement::qt_monomial(-1, 0),
        ));
        let pt = SpectralPoint::new(vec![
            FieldElement::qt_monomial(1, 0),
            FieldElement::qt_monomial(0, 1),
        ]);
        let expect = &FieldElement::qt_monomial(2, 1) + &FieldElement::qt_monomial(-1, -1);
        assert_eq!(f.evaluate(&pt).unwrap(), expect);
        // Zero coordinate under a negative exponent is degenerate.
        let bad = SpectralPoint::new(vec![
            FieldElement::one(ParamSet::QT),
            FieldElement::zero(ParamSet::QT),
        ]);
        assert!(f.evaluate(&bad).is_err());
    }

    #[test]
    fn exact_division_cases() {
        let diff_sq = z(0).pow(2).sub(&z(1).pow(2));
        let diff = z(0).sub(&z(1));
        assert_eq!(diff_sq.exact_divide(&diff).unwrap(), z(0).add(&z(1)));
        assert!(matches!(
            z(0).pow(2).add(&z(1)).exact_divide(&diff),
            Err(Error::DivisibilityViolation(_))
        ));
        // Laurent quotient: (z1^{-1} − z1)/(1 − z1) = z1^{-1} + 1.
        let one = ZPolynomial::one(2, ParamSet::QT);
        let num = ZPolynomial::monomial(2, Exponents::new(vec![-1, 0]), fe(1)).sub(&z(0));
        let expect = ZPolynomial::monomial(2, Exponents::new(vec![-1, 0]), fe(1)).add(&one);
        assert_eq!(num.exact_divide(&one.sub(&z(0))).unwrap(), expect);
    }

    #[test]
    fn affine_substitution_round_trip() {
        let q = FieldElement::param(ParamSet::QT, 0);
        let one = FieldElement::one(ParamSet::QT);
        let s = &q - &one; // q − 1
        let f = z(0).mul(&z(1)).add(&z(0).scale(&fe(3)));
        let g = f.affine_substitute(&s, &one);
        // Undo with z ↦ (z − 1)/(q − 1).
        let inv_s = s.recip().unwrap();
        let inv_c = -&inv_s;
        assert_eq!(g.affine_substitute(&inv_s, &inv_c), f);
        // Spot-check one coefficient: [z1 z2] of ((q−1)z1+1)((q−1)z2+1)(…)
        let lin = z(0).mul(&z(1));
        let sub = lin.affine_substitute(&s, &one);
        assert_eq!(sub.coefficient(&Exponents::new(vec![1, 1])), (&s * &s));
        assert_eq!(sub.coefficient(&Exponents::new(vec![0, 0])), one);
    }

    #[test]
    fn symmetry_checks() {
        assert!(z(0).add(&z(1)).is_symmetric());
        assert!(z(0).mul(&z(1)).is_symmetric());
        assert!(!z(0).sub(&z(1)).is_symmetric());
        let f = z(0).pow(2).mul(&z(1));
        assert_eq!(f.swap_adjacent(0).swap_adjacent(0), f);
    }

    #[test]
    fn permute_relabels_variables() {
        // z1² z2 under z1↦z3, z2↦z1, z3↦z2 becomes z3² z1.
        let f = ZPolynomial::monomial(
            3,
            Exponents::new(vec![2, 1, 0]),
            FieldElement::one(ParamSet::QT),
        );
        let g = f.permute_by(&[2, 0, 1]);
        assert_eq!(
            g.leading().unwrap().0,
            &Exponents::new(vec![1, 0, 2])
        );
    }

    #[test]
    fn top_homogeneous_component() {
        let one = ZPolynomial::one(2, ParamSet::QT);
        let f = z(0).add(&one).mul(&z(1).add(&one.scale(&fe(2))));
        assert_eq!(f.top_homogeneous(), z(0).mul(&z(1)));
    }

    #[test]
    fn monomial_symmetric_basis() {
        // m_{(1)} over 3 variables, m_{(1,1)}, m_{(2,1)} term counts.
        let m1 = ZPolynomial::monomial_symmetric(3, ParamSet::QT, &[1]);
        assert_eq!(m1.num_terms(), 3);
        let m11 = ZPolynomial::monomial_symmetric(3, ParamSet::QT, &[1, 1]);
        assert_eq!(m11.num_terms(), 3);
        let m21 = ZPolynomial::monomial_symmetric(3, ParamSet::QT, &[2, 1]);
        assert_eq!(m21.num_terms(), 6);
        assert!(m21.is_symmetric());
        // Expansion recovers the coefficients.
        let f = m21.scale(&fe(5)).add(&m11.scale(&fe(-2)));
        let exp = f.monomial_symmetric_expand().unwrap();
        assert_eq!(
            exp,
            vec![
                (Exponents::new(vec![1, 1, 0]), fe(-2)),
                (Exponents::new(vec![2, 1, 0]), fe(5)),
            ]
        );
        assert!(z(0).monomial_symmetric_expand().is_err());
    }

    #[test]
    fn coefficient_specialization_and_limit() {
        let q = FieldElement::param(ParamSet::QT, 0);
        let t = FieldElement::param(ParamSet::QT, 1);
        let one = FieldElement::one(ParamSet::QT);
        // f = ((t−1)/(qt−1))·z1 at q=2, t=3 has coefficient 2/5.
        let c = (&t - &one).div(&(&(&q * &t) - &one)).unwrap();
        let f = ZPolynomial::monomial(2, Exponents::new(vec![1, 0]), c);
        let sp = f.specialize_coeffs(&[rat(2), rat(3)]).unwrap();
        assert_eq!(sp.get(&Exponents::new(vec![1, 0])), Some(&ratio(2, 5)));
        // (t−1)z1 at t = q becomes (q−1)z1; its first-order limit is z1.
        let g = ZPolynomial::monomial(2, Exponents::new(vec![1, 0]), &t - &one)
            .substitute_t_power(1)
            .unwrap();
        let lim = g.limit_q1(1).unwrap();
        assert_eq!(lim.get(&Exponents::new(vec![1, 0])), Some(&rat(1)));
        assert!(g.limit_q1(0).unwrap().is_empty());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

        #[test]
        fn prop_ring_axioms(a in arb_zpoly(), b in arb_zpoly(), c in arb_zpoly()) {
            proptest::prop_assert_eq!(a.add(&b), b.add(&a));
            proptest::prop_assert_eq!(a.mul(&b), b.mul(&a));
            proptest::prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn prop_divide_product(a in arb_zpoly(), b in arb_zpoly()) {
            if !b.is_zero() {
                proptest::prop_assert_eq!(a.mul(&b).exact_divide(&b).unwrap(), a);
            }
        }

        #[test]
        fn prop_swap_is_involution(a in arb_zpoly()) {
            proptest::prop_assert_eq!(a.swap_adjacent(0).swap_adjacent(0), a);
        }
    }

    fn arb_zpoly() -> impl proptest::strategy::Strategy<Value = ZPolynomial> {
        use proptest::prelude::*;
        proptest::collection::vec(((0i32..3, 0i32..3), -3i64..4), 0..4).prop_map(|terms| {
            let mut p = ZPolynomial::zero(2, ParamSet::QT);
            for ((e1, e2), c) in terms {
                p = p.add(&ZPolynomial::monomial(
                    2,
                    Exponents::new(vec![e1, e2]),
                    FieldElement::from_int(ParamSet::QT, c),
                ));
            }
            p
        })
    }
}
