//! Sparse Laurent polynomials in the parameters, with exact GCD.
//!
//! Terms are kept in a `BTreeMap` ordered by graded-lexicographic order on
//! the exponent pair, so iteration order is deterministic and the leading
//! term (the canonicalization anchor) is the last entry. Exponents may be
//! negative; every algorithm that needs genuine polynomials (division,
//! GCD) first splits off the monomial content.
//!
//! The GCD is content/primitive-part reduction with a primitive
//! pseudo-remainder sequence on the variable of smaller degree: exact,
//! fraction-free after the initial primitivization, and with intermediate
//! coefficients kept minimal by stripping content at every step.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use super::{BigInt, BigRational, ParamSet};
use crate::error::Error;
use crate::Result;

/// Exponent pair under graded-lexicographic order (total degree first,
/// then the first slot). For one-parameter sets the second slot is 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct PMono(pub [i64; 2]);

impl PMono {
    fn total(self) -> i64 {
        self.0[0] + self.0[1]
    }
}

impl Ord for PMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then(self.0[0].cmp(&other.0[0]))
    }
}

impl PartialOrd for PMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse (Laurent) polynomial in the parameters of a [`ParamSet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamPolynomial {
    params: ParamSet,
    terms: BTreeMap<PMono, BigRational>,
}

impl ParamPolynomial {
    /// The zero polynomial.
    pub fn zero(params: ParamSet) -> Self {
        ParamPolynomial {
            params,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one(params: ParamSet) -> Self {
        Self::constant(params, BigRational::one())
    }

    /// A constant polynomial.
    pub fn constant(params: ParamSet, c: BigRational) -> Self {
        let mut p = Self::zero(params);
        if !c.is_zero() {
            p.terms.insert(PMono([0, 0]), c);
        }
        p
    }

    /// A constant polynomial from a machine integer.
    pub fn from_int(params: ParamSet, n: i64) -> Self {
        Self::constant(params, super::rat(n))
    }

    /// A single term `c · p_0^{e_0} p_1^{e_1}`. Exponent slots beyond the
    /// arity must be zero.
    pub fn monomial(params: ParamSet, exps: [i64; 2], c: BigRational) -> Self {
        assert!(
            params.arity() == 2 || exps[1] == 0,
            "exponent in unused parameter slot"
        );
        let mut p = Self::zero(params);
        if !c.is_zero() {
            p.terms.insert(PMono(exps), c);
        }
        p
    }

    /// The parameter with the given slot index as a polynomial.
    pub fn param(params: ParamSet, idx: usize) -> Self {
        assert!(idx < params.arity(), "parameter index out of range");
        let mut exps = [0i64; 2];
        exps[idx] = 1;
        Self::monomial(params, exps, BigRational::one())
    }

    /// The parameter set this polynomial lives over.
    pub fn params(&self) -> ParamSet {
        self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// `Some(c)` if the polynomial is the constant `c` (zero included).
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&PMono([0, 0])) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = ([i64; 2], &BigRational)> {
        self.terms.iter().map(|(m, c)| (m.0, c))
    }

    /// Coefficient of a single exponent pair (zero if absent).
    pub fn coefficient(&self, exps: [i64; 2]) -> BigRational {
        self.terms
            .get(&PMono(exps))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Leading term under graded-lexicographic order.
    pub fn leading(&self) -> Option<([i64; 2], &BigRational)> {
        self.terms.last_key_value().map(|(m, c)| (m.0, c))
    }

    /// True if no exponent is negative.
    pub fn is_genuine(&self) -> bool {
        self.terms.keys().all(|m| m.0[0] >= 0 && m.0[1] >= 0)
    }

    /// Largest exponent of the given parameter slot, `None` for zero.
    pub fn degree_in(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Smallest exponent of the given parameter slot, `None` for zero.
    pub fn min_exp_in(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|m| m.0[var]).min()
    }

    /// Largest total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.total()).max()
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn insert_add(&mut self, m: PMono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_same(&self, other: &Self) {
        assert!(
            self.params == other.params,
            "mixed parameter sets {:?} and {:?}",
            self.params,
            other.params
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut out = Self::zero(self.params);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = PMono([ma.0[0] + mb.0[0], ma.0[1] + mb.0[1]]);
                out.insert_add(m, ca * cb);
            }
        }
        out
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.params);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    /// Multiply by a single monomial `c · p^e` (Laurent shifts allowed).
    pub fn mul_monomial(&self, exps: [i64; 2], c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.params);
        }
        let mut out = Self::zero(self.params);
        for (m, v) in &self.terms {
            out.terms
                .insert(PMono([m.0[0] + exps[0], m.0[1] + exps[1]]), v * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.params);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at rational parameter values (one per slot). Negative
    /// exponents require the corresponding value to be nonzero.
    pub fn eval(&self, values: &[BigRational]) -> Result<BigRational> {
        assert!(
            values.len() == self.params.arity(),
            "wrong number of parameter values"
        );
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (slot, v) in values.iter().enumerate() {
                let e = m.0[slot];
                if e == 0 {
                    continue;
                }
                if v.is_zero() && e < 0 {
                    return Err(Error::DegenerateSpecialization(format!(
                        "negative power of {} at 0",
                        self.params.names()[slot]
                    )));
                }
                term *= rational_pow(v, e);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitute `t = q^r` (two-parameter set only), landing in `ℚ[q^{±1}]`.
    pub fn subst_t_power(&self, r: u32) -> Self {
        assert!(self.params == ParamSet::QT, "t-substitution needs the (q,t) set");
        assert!(r >= 1, "substitution exponent must be at least 1");
        let mut out = Self::zero(ParamSet::Q);
        for (m, c) in &self.terms {
            out.insert_add(PMono([m.0[0] + i64::from(r) * m.0[1], 0]), c.clone());
        }
        out
    }

    /// Split into monomial content and remainder: returns `(e, p)` with
    /// `self = p^e · p`, where `e` is the per-variable minimum exponent and
    /// `p` has minimum exponent 0 in each variable. Zero splits as
    /// `([0,0], 0)`.
    pub fn split_monomial_content(&self) -> ([i64; 2], Self) {
        if self.is_zero() {
            return ([0, 0], self.clone());
        }
        let mins = [
            self.min_exp_in(0).unwrap(),
            if self.params.arity() == 2 {
                self.min_exp_in(1).unwrap()
            } else {
                0
            },
        ];
        if mins == [0, 0] {
            return (mins, self.clone());
        }
        let mut p = Self::zero(self.params);
        for (m, c) in &self.terms {
            p.terms
                .insert(PMono([m.0[0] - mins[0], m.0[1] - mins[1]]), c.clone());
        }
        (mins, p)
    }

    /// Positive rational content (gcd of numerators over lcm of
    /// denominators). Zero polynomial has content 0.
    pub fn rational_content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut gcd_num = BigInt::zero();
        let mut lcm_den = BigInt::one();
        for c in self.terms.values() {
            gcd_num = num::Integer::gcd(&gcd_num, &c.numer().abs());
            lcm_den = num::Integer::lcm(&lcm_den, c.denom());
        }
        BigRational::new(gcd_num, lcm_den)
    }

    /// Divide out the signed rational content so coefficients become
    /// coprime integers with positive leading coefficient. Returns the
    /// content removed: `self = content · primitive`.
    pub fn primitive_part(&self) -> (BigRational, Self) {
        if self.is_zero() {
            return (BigRational::zero(), self.clone());
        }
        let mut content = self.rational_content();
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Exact division; fails with [`Error::DivisibilityViolation`] when the
    /// divisor does not divide. Laurent inputs are handled by splitting
    /// monomial content (the quotient may then be Laurent).
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_same(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let (me, a) = self.split_monomial_content();
        let (de, b) = divisor.split_monomial_content();
        let q = divide_genuine(&a, &b)?;
        Ok(q.mul_monomial([me[0] - de[0], me[1] - de[1]], &BigRational::one()))
    }

    /// Greatest common divisor, canonicalized to be integer-primitive with
    /// positive leading coefficient (graded-lexicographic). Monomial
    /// factors count: `gcd(q²t − qt, qt) = qt`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        a.check_same(b);
        if a.is_zero() {
            return b.primitive_part().1;
        }
        if b.is_zero() {
            return a.primitive_part().1;
        }
        let (ea, a0) = a.split_monomial_content();
        let (eb, b0) = b.split_monomial_content();
        let shared = [ea[0].min(eb[0]), ea[1].min(eb[1])];
        let g0 = gcd_genuine(&a0, &b0);
        g0.mul_monomial(shared, &BigRational::one())
            .primitive_part()
            .1
    }

    /// Coefficient of `x^k` where `x` is the parameter in slot `var`,
    /// as a polynomial in the remaining parameter.
    fn coeff_in(&self, var: usize, k: i64) -> Self {
        let mut out = Self::zero(self.params);
        for (m, c) in &self.terms {
            if m.0[var] == k {
                let mut rest = m.0;
                rest[var] = 0;
                out.terms.insert(PMono(rest), c.clone());
            }
        }
        out
    }

    /// Content with respect to `var`: the gcd of the `x^k`-coefficient
    /// polynomials (polynomials in the other parameter).
    fn content_wrt(&self, var: usize) -> Self {
        let mut content = Self::zero(self.params);
        let lo = self.min_exp_in(var).unwrap_or(0);
        let hi = self.degree_in(var).unwrap_or(0);
        for k in lo..=hi {
            let c = self.coeff_in(var, k);
            if c.is_zero() {
                continue;
            }
            content = Self::gcd(&content, &c);
            if content.is_one() {
                break;
            }
        }
        content
    }
}

/// `v^e` for a rational base, `e` possibly negative (caller checks zero).
fn rational_pow(v: &BigRational, e: i64) -> BigRational {
    let p = v
        .pow(u32::try_from(e.unsigned_abs()).expect("exponent overflow") as i32);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Long division of genuine polynomials by graded-lexicographic leading
/// terms; exact or error.
fn divide_genuine(a: &ParamPolynomial, b: &ParamPolynomial) -> Result<ParamPolynomial> {
    let mut rem = a.clone();
    let mut quot = ParamPolynomial::zero(a.params());
    let (bm, bc) = {
        let (m, c) = b.leading().expect("nonzero divisor");
        (m, c.clone())
    };
    while !rem.is_zero() {
        let (rm, rc) = {
            let (m, c) = rem.leading().unwrap();
            (m, c.clone())
        };
        let qx = [rm[0] - bm[0], rm[1] - bm[1]];
        if qx[0] < 0 || qx[1] < 0 {
            return Err(Error::DivisibilityViolation(format!(
                "{} does not divide {}",
                b, a
            )));
        }
        let qc = &rc / &bc;
        quot.insert_add(PMono(qx), qc.clone());
        rem = rem.sub(&b.mul_monomial(qx, &qc));
        // Graded-lex leading strictly decreases each round, so this
        // terminates; a failed monomial comparison above reports
        // indivisibility.
        if let Some((nm, _)) = rem.leading() {
            debug_assert!(PMono(nm) < PMono(rm), "division failed to reduce");
        }
    }
    Ok(quot)
}

/// GCD of genuine polynomials with zero minimum exponent per variable.
fn gcd_genuine(a: &ParamPolynomial, b: &ParamPolynomial) -> ParamPolynomial {
    let params = a.params();
    let occurs = |v: usize| {
        a.degree_in(v).unwrap_or(0) > 0 || b.degree_in(v).unwrap_or(0) > 0
    };
    match (occurs(0), params.arity() == 2 && occurs(1)) {
        (false, false) => ParamPolynomial::one(params),
        (true, false) => univariate_gcd(a, b, 0),
        (false, true) => univariate_gcd(a, b, 1),
        (true, true) => bivariate_gcd(a, b),
    }
}

/// Primitive pseudo-remainder sequence for polynomials in a single
/// parameter slot (rational coefficients).
fn univariate_gcd(a: &ParamPolynomial, b: &ParamPolynomial, var: usize) -> ParamPolynomial {
    let (_, mut r0) = a.primitive_part();
    let (_, mut r1) = b.primitive_part();
    if r0.degree_in(var) < r1.degree_in(var) {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        let r = pseudo_rem(&r0, &r1, var);
        r0 = r1;
        r1 = r.primitive_part().1;
    }
    r0.primitive_part().1
}

/// Content/primitive-part GCD with a primitive PRS on the variable of
/// smaller degree.
fn bivariate_gcd(a: &ParamPolynomial, b: &ParamPolynomial) -> ParamPolynomial {
    let dq = a.degree_in(0).unwrap_or(0).max(b.degree_in(0).unwrap_or(0));
    let dt = a.degree_in(1).unwrap_or(0).max(b.degree_in(1).unwrap_or(0));
    let var = if dq <= dt { 0 } else { 1 };

    let ca = a.content_wrt(var);
    let cb = b.content_wrt(var);
    let mut r0 = a.divide_exact(&ca).expect("content divides");
    let mut r1 = b.divide_exact(&cb).expect("content divides");
    if r0.degree_in(var) < r1.degree_in(var) {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        let r = pseudo_rem(&r0, &r1, var);
        r0 = r1;
        r1 = if r.is_zero() {
            r
        } else {
            let c = r.content_wrt(var);
            r.divide_exact(&c).expect("content divides")
        };
    }
    let c0 = r0.content_wrt(var);
    let pp = r0.divide_exact(&c0).expect("content divides");
    pp.mul(&ParamPolynomial::gcd(&ca, &cb))
}

/// Pseudo-remainder of `f` by `g` in the given variable slot: repeatedly
/// cross-multiplies by leading coefficients, so no coefficient division
/// ever happens. The result is `lc(g)^k · f mod g` for some `k ≥ 0`.
fn pseudo_rem(f: &ParamPolynomial, g: &ParamPolynomial, var: usize) -> ParamPolynomial {
    let dg = g.degree_in(var).expect("nonzero pseudo-division divisor");
    let lcg = g.coeff_in(var, dg);
    let mut r = f.clone();
    loop {
        let dr = match r.degree_in(var) {
            Some(d) if d >= dg => d,
            _ => return r,
        };
        let lcr = r.coeff_in(var, dr);
        let mut shift = [0i64; 2];
        shift[var] = dr - dg;
        // r ← lc(g)·r − lc(r)·x^{dr−dg}·g ; the x^{dr} heads cancel.
        r = r
            .mul(&lcg)
            .sub(&lcr.mul_monomial(shift, &BigRational::one()).mul(g));
        debug_assert!(r.degree_in(var).map_or(true, |d| d < dr));
    }
}

impl fmt::Display for ParamPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.params.names();
        // Display leading-first (descending graded-lex).
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.0 == [0, 0] {
                factors.push(mag.to_string());
            }
            for (slot, name) in names.iter().enumerate() {
                match m.0[slot] {
                    0 => {}
                    1 => factors.push((*name).to_string()),
                    e => factors.push(format!("{}^{}", name, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
