//! The coefficient field: exact rational functions in the parameters.
//!
//! Every element is a canonical fraction of genuine polynomials: Laurent
//! monomials are cleared to whichever side needs them, the gcd of
//! numerator and denominator is divided out, and the denominator is
//! scaled to be integer-primitive with positive leading coefficient
//! (graded-lexicographic). Canonical form makes structural equality
//! coincide with equality in the field, so `==` and zero tests are exact
//! — no normalization step is ever deferred.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::{One, Zero};

use super::{rat, BigRational, ParamPolynomial, ParamSet};
use crate::error::Error;
use crate::Result;

/// An element of `ℚ(q,t)` (or `ℚ(q)`, `ℚ(r)`), always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    num: ParamPolynomial,
    den: ParamPolynomial,
}

impl FieldElement {
    pub fn zero(params: ParamSet) -> Self {
        Self::from_poly(ParamPolynomial::zero(params))
    }

    pub fn one(params: ParamSet) -> Self {
        Self::from_poly(ParamPolynomial::one(params))
    }

    pub fn from_int(params: ParamSet, n: i64) -> Self {
        Self::from_poly(ParamPolynomial::from_int(params, n))
    }

    pub fn from_rational(params: ParamSet, c: BigRational) -> Self {
        Self::from_poly(ParamPolynomial::constant(params, c))
    }

    /// Embed a (Laurent) polynomial.
    pub fn from_poly(p: ParamPolynomial) -> Self {
        let one = ParamPolynomial::one(p.params());
        Self::canonical(p, one).expect("unit denominator")
    }

    /// Build `num / den`; fails only when `den` is zero.
    pub fn from_ratio(num: ParamPolynomial, den: ParamPolynomial) -> Result<Self> {
        Self::canonical(num, den)
    }

    /// The parameter in the given slot (`q`, `t`, or `r`).
    pub fn param(params: ParamSet, idx: usize) -> Self {
        Self::from_poly(ParamPolynomial::param(params, idx))
    }

    /// The Laurent monomial `p_0^{e_0} p_1^{e_1}`.
    pub fn monomial(params: ParamSet, exps: [i64; 2]) -> Self {
        Self::from_poly(ParamPolynomial::monomial(params, exps, BigRational::one()))
    }

    /// `q^a t^b` over the two-parameter set.
    pub fn qt_monomial(a: i64, b: i64) -> Self {
        Self::monomial(ParamSet::QT, [a, b])
    }

    /// `c0 + c1·r` over the one-parameter classical set.
    pub fn r_linear(c0: i64, c1: i64) -> Self {
        let r = ParamPolynomial::param(ParamSet::R, 0);
        Self::from_poly(r.scale(&rat(c1)).add(&ParamPolynomial::from_int(ParamSet::R, c0)))
    }

    fn canonical(num: ParamPolynomial, den: ParamPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let params = num.params();
        if num.is_zero() {
            return Ok(FieldElement {
                num,
                den: ParamPolynomial::one(params),
            });
        }
        // Clear Laurent monomials: the net monomial shift goes to the
        // numerator where positive and to the denominator where negative,
        // leaving both sides genuine with no shared monomial factor.
        let (en, n0) = num.split_monomial_content();
        let (ed, d0) = den.split_monomial_content();
        let net = [en[0] - ed[0], en[1] - ed[1]];
        let one = BigRational::one();
        let n1 = n0.mul_monomial([net[0].max(0), net[1].max(0)], &one);
        let d1 = d0.mul_monomial([(-net[0]).max(0), (-net[1]).max(0)], &one);
        let g = ParamPolynomial::gcd(&n1, &d1);
        let n2 = n1.divide_exact(&g).expect("gcd divides numerator");
        let d2 = d1.divide_exact(&g).expect("gcd divides denominator");
        let (c, d3) = d2.primitive_part();
        let out = FieldElement {
            num: n2.scale(&c.recip()),
            den: d3,
        };
        out.debug_check();
        Ok(out)
    }

    /// Rebuild from parts known to be coprime (products of canonical
    /// fractions after cross-cancellation); only the denominator rescale
    /// is needed.
    fn from_coprime(num: ParamPolynomial, den: ParamPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero(num.params());
        }
        let (c, d) = den.primitive_part();
        let out = FieldElement {
            num: num.scale(&c.recip()),
            den: d,
        };
        out.debug_check();
        out
    }

    fn debug_check(&self) {
        debug_assert!(self.num.is_genuine() && self.den.is_genuine());
        debug_assert!(
            self.num.is_zero() || ParamPolynomial::gcd(&self.num, &self.den).is_one(),
            "non-canonical fraction {:?}",
            self
        );
    }

    pub fn params(&self) -> ParamSet {
        self.num.params()
    }

    pub fn numerator(&self) -> &ParamPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &ParamPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// `Some(c)` if the element is the rational constant `c`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_constant()
    }

    fn check_same(&self, other: &Self) {
        assert!(
            self.params() == other.params(),
            "mixed parameter sets {:?} and {:?}",
            self.params(),
            other.params()
        );
    }

    fn add_impl(&self, other: &Self) -> Self {
        self.check_same(other);
        let g = ParamPolynomial::gcd(&self.den, &other.den);
        let da = self.den.divide_exact(&g).expect("gcd divides");
        let db = other.den.divide_exact(&g).expect("gcd divides");
        let num = self.num.mul(&db).add(&other.num.mul(&da));
        let den = self.den.mul(&db);
        Self::canonical(num, den).expect("nonzero denominator")
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.check_same(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.params());
        }
        // Cross-cancel before multiplying so the gcd work happens on the
        // small factors, never on the full products.
        let g1 = ParamPolynomial::gcd(&self.num, &other.den);
        let g2 = ParamPolynomial::gcd(&other.num, &self.den);
        let n = self
            .num
            .divide_exact(&g1)
            .expect("gcd divides")
            .mul(&other.num.divide_exact(&g2).expect("gcd divides"));
        let d = self
            .den
            .divide_exact(&g2)
            .expect("gcd divides")
            .mul(&other.den.divide_exact(&g1).expect("gcd divides"));
        Self::from_coprime(n, d)
    }

    fn neg_impl(&self) -> Self {
        FieldElement {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::canonical(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_impl(&other.recip()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.params());
        for _ in 0..e {
            acc = acc.mul_impl(self);
        }
        acc
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.params());
        }
        Self::from_coprime(self.num.scale(c), self.den.clone())
    }

    /// Evaluate at rational parameter values, one per slot.
    pub fn specialize(&self, values: &[BigRational]) -> Result<BigRational> {
        let d = self.den.eval(values)?;
        if d.is_zero() {
            return Err(Error::DegenerateSpecialization(format!(
                "denominator {} vanishes at the requested point",
                self.den
            )));
        }
        Ok(self.num.eval(values)? / d)
    }

    /// Substitute `t = q^r`, landing in `ℚ(q)`. Fails when the
    /// substitution kills the denominator identically.
    pub fn substitute_t_power(&self, r: u32) -> Result<Self> {
        let num = self.num.subst_t_power(r);
        let den = self.den.subst_t_power(r);
        if den.is_zero() {
            return Err(Error::DegenerateSpecialization(format!(
                "denominator {} vanishes identically at t = q^{}",
                self.den, r
            )));
        }
        Self::canonical(num, den)
    }

    /// Order of vanishing at `q = 1` (negative for a pole); `None` for
    /// the zero element. One-parameter `q` set only.
    pub fn q1_order(&self) -> Option<i64> {
        assert!(self.params() == ParamSet::Q, "q=1 order needs the q-only set");
        if self.is_zero() {
            return None;
        }
        let (jn, _) = q1_split(&self.num);
        let (jd, _) = q1_split(&self.den);
        Some(i64::from(jn) - i64::from(jd))
    }

    /// `lim_{q→1} self / (q−1)^k`, exactly: zero when the element
    /// vanishes to order `> k`, the cofactor ratio at order exactly `k`,
    /// and an error below `k`. One-parameter `q` set only.
    pub fn limit_q1(&self, k: u32) -> Result<BigRational> {
        assert!(self.params() == ParamSet::Q, "q=1 limit needs the q-only set");
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        let (jn, rn) = q1_split(&self.num);
        let (jd, rd) = q1_split(&self.den);
        let found = i64::from(jn) - i64::from(jd);
        let order = found - i64::from(k);
        if order > 0 {
            return Ok(BigRational::zero());
        }
        if order < 0 {
            return Err(Error::LimitDoesNotExist { need: k, found });
        }
        let at_one = [BigRational::one()];
        Ok(rn.eval(&at_one)? / rd.eval(&at_one)?)
    }

    /// True when the element is a Laurent polynomial with integer
    /// coefficients: the canonical denominator is a single monomial
    /// (necessarily with coefficient 1) and the numerator is integral.
    pub fn is_integral_laurent(&self) -> bool {
        self.den.num_terms() == 1 && self.num.has_integer_coefficients()
    }

    /// The canonical denominator's exponents when it is a single
    /// monomial, `None` otherwise.
    pub fn den_monomial(&self) -> Option<[i64; 2]> {
        if self.den.num_terms() == 1 {
            Some(self.den.leading().unwrap().0)
        } else {
            None
        }
    }
}

/// Split a nonzero genuine polynomial over `ℚ[q]` as `(q−1)^j · rest`
/// with `rest(1) ≠ 0`.
fn q1_split(p: &ParamPolynomial) -> (u32, ParamPolynomial) {
    let qm1 = ParamPolynomial::param(ParamSet::Q, 0)
        .sub(&ParamPolynomial::one(ParamSet::Q));
    let mut j = 0u32;
    let mut rest = p.clone();
    while let Ok(r) = rest.divide_exact(&qm1) {
        j += 1;
        rest = r;
    }
    (j, rest)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                FieldElement::$impl_fn(self, rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                FieldElement::$impl_fn(self, &rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                FieldElement::$impl_fn(&self, rhs)
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                FieldElement::$impl_fn(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Mul, mul, mul_impl);

impl Sub<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.add_impl(&rhs.neg_impl())
    }
}
impl Sub<FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.add_impl(&rhs.neg_impl())
    }
}
impl Sub<&FieldElement> for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.add_impl(&rhs.neg_impl())
    }
}
impl Sub<FieldElement> for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.add_impl(&rhs.neg_impl())
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_impl()
    }
}
impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_impl()
    }
}

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        *self = self.add_impl(rhs);
    }
}
impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        *self = self.add_impl(&rhs.neg_impl());
    }
}
impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        *self = self.mul_impl(rhs);
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use num::Signed;

    use super::*;
    use crate::field::ratio;

    fn q() -> FieldElement {
        FieldElement::param(ParamSet::QT, 0)
    }
    fn t() -> FieldElement {
        FieldElement::param(ParamSet::QT, 1)
    }
    fn int(n: i64) -> FieldElement {
        FieldElement::from_int(ParamSet::QT, n)
    }
    fn qq() -> FieldElement {
        FieldElement::param(ParamSet::Q, 0)
    }
    fn qint(n: i64) -> FieldElement {
        FieldElement::from_int(ParamSet::Q, n)
    }

    fn frac(n: &FieldElement, d: &FieldElement) -> FieldElement {
        n.div(d).unwrap()
    }

    #[test]
    fn canonical_reduces_common_factors() {
        // (q² − 1)/(q − 1) = q + 1
        let e = frac(&(q().pow(2) - int(1)), &(q() - int(1)));
        assert_eq!(e, q() + int(1));
        assert!(e.denominator().is_one());
    }

    #[test]
    fn canonical_sign_and_scale_live_in_numerator() {
        // (1 − q)/((q − 1)(t − 1)) = −1/(t − 1), denominator kept
        // primitive with positive leading coefficient.
        let e = frac(&(int(1) - q()), &((q() - int(1)) * (t() - int(1))));
        assert_eq!(e.denominator(), (t() - int(1)).numerator());
        assert_eq!(e.numerator(), int(-1).numerator());
        // A rational rescale of both sides changes nothing.
        let f = frac(
            &(int(1) - q()).scale(&ratio(3, 7)),
            &((q() - int(1)) * (t() - int(1))).scale(&ratio(3, 7)),
        );
        assert_eq!(e, f);
    }

    #[test]
    fn laurent_monomials_are_cleared() {
        // q^{-1} = 1/q
        let e = FieldElement::qt_monomial(-1, 0);
        assert!(e.numerator().is_one());
        assert_eq!(e.den_monomial(), Some([1, 0]));
        // q^{-1}(t − 1) / t^{-2} = t²(t − 1)/q
        let num = ParamPolynomial::monomial(ParamSet::QT, [-1, 1], rat(1)).sub(
            &ParamPolynomial::monomial(ParamSet::QT, [-1, 0], rat(1)),
        );
        let den = ParamPolynomial::monomial(ParamSet::QT, [0, -2], rat(1));
        let e = FieldElement::from_ratio(num, den).unwrap();
        assert_eq!(e, frac(&(t().pow(3) - t().pow(2)), &q()));
    }

    #[test]
    fn specialize_rational_point() {
        // (t − 1)/(qt − 1) at q=2, t=3 is 2/5.
        let e = frac(&(t() - int(1)), &(q() * t() - int(1)));
        assert_eq!(e.specialize(&[rat(2), rat(3)]).unwrap(), ratio(2, 5));
        // q = 1, t = 1 makes the denominator vanish.
        assert!(matches!(
            e.specialize(&[rat(1), rat(1)]),
            Err(Error::DegenerateSpecialization(_))
        ));
    }

    #[test]
    fn t_power_substitution_cancels() {
        // (t − 1)/(q − 1) at t = q² becomes q + 1.
        let e = frac(&(t() - int(1)), &(q() - int(1)));
        assert_eq!(e.substitute_t_power(2).unwrap(), qq() + qint(1));
        // 1/(t − q²) dies identically at t = q².
        let d = frac(&int(1), &(t() - q().pow(2)));
        assert!(matches!(
            d.substitute_t_power(2),
            Err(Error::DegenerateSpecialization(_))
        ));
    }

    #[test]
    fn limit_q1_orders() {
        // f = (q³ − 1)/2 vanishes to order 1 at q = 1.
        let f = (qq().pow(3) - qint(1)).scale(&ratio(1, 2));
        assert_eq!(f.limit_q1(0).unwrap(), rat(0));
        assert_eq!(f.limit_q1(1).unwrap(), ratio(3, 2));
        assert_eq!(
            f.limit_q1(2),
            Err(Error::LimitDoesNotExist { need: 2, found: 1 })
        );
        // A pole never has a limit.
        let p = frac(&qint(1), &(qq() - qint(1)));
        assert_eq!(
            p.limit_q1(0),
            Err(Error::LimitDoesNotExist { need: 0, found: -1 })
        );
        assert_eq!(f.q1_order(), Some(1));
        assert_eq!(p.q1_order(), Some(-1));
        assert_eq!(FieldElement::zero(ParamSet::Q).q1_order(), None);
    }

    #[test]
    fn limit_q1_matches_nearby_specialization() {
        // F = (q³ − 1)/(q + 1): the limit of F/(q−1) should be approached
        // by F(1 + 1/m)·m as m grows.
        let f = frac(&(qq().pow(3) - qint(1)), &(qq() + qint(1)));
        let lim = f.limit_q1(1).unwrap();
        assert_eq!(lim, ratio(3, 2));
        let drift = |m: i64| {
            let at = f.specialize(&[rat(1) + ratio(1, m)]).unwrap() * rat(m);
            (at - &lim).abs()
        };
        assert!(drift(10_000) < drift(100));
        assert!(drift(10_000) < ratio(1, 1_000));
    }

    #[test]
    fn field_identities() {
        let a = frac(&(q() - int(1)), &(t() + int(1)));
        let b = frac(&(t() - int(1)), &(q() * t() - int(1)));
        assert!((&a - &a).is_zero());
        assert!(a.div(&a).unwrap().is_one());
        assert_eq!(a.recip().unwrap().recip().unwrap(), a);
        assert_eq!(&a * &b, &b * &a);
        let c = q() + t();
        assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        assert!(FieldElement::zero(ParamSet::QT).recip().is_err());
    }

    #[test]
    fn cross_cancellation_matches_plain_product() {
        let a = frac(&(q() - int(1)), &(t() - int(1)));
        let b = frac(&(t() - int(1)), &(q() + int(1)));
        let prod = &a * &b;
        assert_eq!(prod, frac(&(q() - int(1)), &(q() + int(1))));
        let naive = FieldElement::from_ratio(
            a.numerator().mul(b.numerator()),
            a.denominator().mul(b.denominator()),
        )
        .unwrap();
        assert_eq!(prod, naive);
    }

    #[test]
    fn integrality_inspection() {
        assert!(FieldElement::qt_monomial(-2, 3).is_integral_laurent());
        assert!((q() + t().pow(2)).is_integral_laurent());
        assert!(!frac(&int(1), &(t() - int(1))).is_integral_laurent());
        assert!(!int(1).scale(&ratio(1, 2)).is_integral_laurent());
        assert_eq!(
            frac(&(q() - int(1)), &FieldElement::qt_monomial(0, 2)).den_monomial(),
            Some([0, 2])
        );
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(32))]

        #[test]
        fn prop_canonical_is_unique(
            (a, b, c) in (arb_nonzero(), arb_nonzero(), arb_nonzero())
        ) {
            // Scaling numerator and denominator by a common polynomial or
            // by a Laurent monomial lands on the same representative.
            let base = FieldElement::from_ratio(a.clone(), b.clone()).unwrap();
            let scaled = FieldElement::from_ratio(a.mul(&c), b.mul(&c)).unwrap();
            proptest::prop_assert_eq!(&base, &scaled);
            let shifted = FieldElement::from_ratio(
                a.mul_monomial([-1, 2], &rat(1)),
                b.mul_monomial([-1, 2], &rat(1)),
            )
            .unwrap();
            proptest::prop_assert_eq!(&base, &shifted);
        }

        #[test]
        fn prop_field_axioms(
            (a, b, c) in (arb_elem(), arb_elem(), arb_elem())
        ) {
            proptest::prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            proptest::prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            proptest::prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !b.is_zero() {
                proptest::prop_assert_eq!(a.div(&b).unwrap() * &b, a);
            }
        }
    }

    fn arb_nonzero() -> impl proptest::strategy::Strategy<Value = ParamPolynomial> {
        use proptest::prelude::*;
        proptest::collection::vec(((0i64..3, 0i64..3), -3i64..4), 1..4).prop_map(|terms| {
            let mut p = ParamPolynomial::zero(ParamSet::QT);
            for ((eq, et), n) in terms {
                p = p.add(&ParamPolynomial::monomial(ParamSet::QT, [eq, et], rat(n)));
            }
            if p.is_zero() {
                ParamPolynomial::one(ParamSet::QT)
            } else {
                p
            }
        })
    }

    fn arb_elem() -> impl proptest::strategy::Strategy<Value = FieldElement> {
        use proptest::prelude::*;
        (arb_nonzero(), arb_nonzero())
            .prop_map(|(n, d)| FieldElement::from_ratio(n, d).unwrap())
    }
}
