//! Difference-reflection operators on z-polynomials.
//!
//! The quantum operators (simple reflections, divided differences, Hecke
//! operators, the shift Δ and raising step Φ, homogeneous and inhomogeneous
//! Cherednik operators, the raising operators Z_i, and the Euler operator S)
//! act on polynomials over ℚ(q,t); their degenerations (σ_i, Δ̃, Φ̃, Ξ̃_i,
//! Z̃_i) act over ℚ(r).  Operator words are evaluated right-to-left as
//! written, so `H̄_i…H̄_{n−1} Δ H_1…H_{i−1}` hits its argument with H_{i−1}
//! first and H̄_i last.
//!
//! Everything here is a pure function; out-of-range indices and mixed
//! coefficient domains are caller bugs and panic.  The tagged entry point
//! [`apply`] validates instead, for use behind user-supplied input.

use crate::error::Error;
use crate::field::{FieldElement, ParamSet};
use crate::zpoly::{Exponents, ZPolynomial};
use crate::Result;

/// n(n−1)/2, the t-exponent appearing in the Euler and raising operators.
pub(crate) fn binom2(n: usize) -> i64 {
    (n as i64) * (n as i64 - 1) / 2
}

fn check_reflection(n: usize, i: usize, name: &str) {
    assert!(
        (1..n).contains(&i),
        "{name} index {i} out of range 1..={} for n={n}",
        n.saturating_sub(1)
    );
}

fn check_cherednik(n: usize, i: usize, name: &str) {
    assert!((1..=n).contains(&i), "{name} index {i} out of range 1..={n}");
}

/// Simple reflection: swaps z_i and z_{i+1} (1-based i).
pub fn apply_si(f: &ZPolynomial, i: usize) -> ZPolynomial {
    check_reflection(f.num_vars(), i, "s");
    f.swap_adjacent(i - 1)
}

/// Divided difference N_i = (1 − s_i)/(z_i − z_{i+1}); always an exact
/// quotient, computed term-by-term as a geometric sum.
pub fn apply_ni(f: &ZPolynomial, i: usize) -> ZPolynomial {
    let n = f.num_vars();
    check_reflection(n, i, "N");
    let (ai, bi) = (i - 1, i);
    let mut out = ZPolynomial::zero(n, f.params());
    for (e, c) in f.terms() {
        let (a, b) = (e.get(ai), e.get(bi));
        if a == b {
            continue;
        }
        // (x^a y^b − x^b y^a)/(x−y) = ± Σ_k x^{m+d−1−k} y^{m+k},
        // m = min(a,b), d = |a−b|; valid for Laurent exponents too.
        let (m, d, neg) = (a.min(b), (a - b).abs(), a < b);
        let coeff = if neg { -c } else { c.clone() };
        for k in 0..d {
            let mut v = e.as_slice().to_vec();
            v[ai] = m + d - 1 - k;
            v[bi] = m + k;
            out.insert_add(Exponents::new(v), coeff.clone());
        }
    }
    out
}

/// Hecke operator H_i = s_i − (1−t)N_i z_i (bar=false) or its companion
/// H̄_i = s_i − (1−t)z_{i+1}N_i (bar=true); H_i − H̄_i = t−1.
pub fn apply_hecke(f: &ZPolynomial, i: usize, bar: bool) -> ZPolynomial {
    let n = f.num_vars();
    check_reflection(n, i, "H");
    assert_eq!(f.params(), ParamSet::QT, "Hecke operators live over ℚ(q,t)");
    let one_minus_t = &FieldElement::one(ParamSet::QT) - &FieldElement::param(ParamSet::QT, 1);
    let correction = if bar {
        apply_ni(f, i).mul_var_pow(i, 1)
    } else {
        apply_ni(&f.mul_var_pow(i - 1, 1), i)
    };
    apply_si(f, i).sub(&correction.scale(&one_minus_t))
}

/// The ascending word `H_lo H_{lo+1} … H_hi` (identity when lo > hi),
/// applied right-to-left.
fn hecke_range(mut f: ZPolynomial, lo: usize, hi: usize, bar: bool) -> ZPolynomial {
    for j in (lo..=hi).rev() {
        f = apply_hecke(&f, j, bar);
    }
    f
}

/// Shift operator: Δf(z_1,…,z_n) = f(z_n/q, z_1, …, z_{n−1}).
pub fn apply_delta(f: &ZPolynomial) -> ZPolynomial {
    let n = f.num_vars();
    assert_eq!(f.params(), ParamSet::QT, "Δ lives over ℚ(q,t)");
    let mut out = ZPolynomial::zero(n, f.params());
    for (e, c) in f.terms() {
        let mut v = Vec::with_capacity(n);
        v.extend((1..n).map(|j| e.get(j)));
        v.push(e.get(0));
        let q_shift = FieldElement::qt_monomial(-i64::from(e.get(0)), 0);
        out.insert_add(Exponents::new(v), c * &q_shift);
    }
    out
}

/// Raising step Φ = (z_n − t^{−n+1})Δ; increases degree by exactly one.
pub fn apply_phi(f: &ZPolynomial) -> ZPolynomial {
    let n = f.num_vars();
    let factor = ZPolynomial::var(n, ParamSet::QT, n - 1).sub(&ZPolynomial::constant(
        n,
        FieldElement::qt_monomial(0, 1 - n as i64),
    ));
    apply_delta(f).mul(&factor)
}

/// Homogeneous Cherednik operator ξ_i⁻¹ = H̄_i…H̄_{n−1} Δ H_1…H_{i−1}.
pub fn apply_xi_inv(f: &ZPolynomial, i: usize) -> ZPolynomial {
    let n = f.num_vars();
    check_cherednik(n, i, "ξ⁻¹");
    let g = hecke_range(f.clone(), 1, i - 1, false);
    hecke_range(apply_delta(&g), i, n - 1, true)
}

/// The word H_i…H_{n−1} Φ H_1…H_{i−1}, which equals z_iΞ_i − 1.
fn raising_word(f: &ZPolynomial, i: usize) -> ZPolynomial {
    let n = f.num_vars();
    let g = hecke_range(f.clone(), 1, i - 1, false);
    hecke_range(apply_phi(&g), i, n - 1, false)
}

/// Inhomogeneous Cherednik operator Ξ_i = z_i⁻¹ + z_i⁻¹H_i…H_{n−1}ΦH_1…H_{i−1}.
/// Computed through the Laurent ring; the output is asserted polynomial and
/// never increases total degree.
pub fn apply_xi_big(f: &ZPolynomial, i: usize) -> Result<ZPolynomial> {
    let n = f.num_vars();
    check_cherednik(n, i, "Ξ");
    assert!(f.is_polynomial(), "Ξ acts on genuine polynomials");
    let res = f.add(&raising_word(f, i)).mul_var_pow(i - 1, -1);
    if !res.is_polynomial() {
        return Err(Error::InternalInvariant(format!(
            "Ξ_{i} produced a non-polynomial output at n={n}"
        )));
    }
    if !f.is_zero() && res.degree() > f.degree() {
        return Err(Error::InternalInvariant(format!(
            "Ξ_{i} raised the degree at n={n}"
        )));
    }
    Ok(res)
}

/// Euler operator S = t^{−C(n,2)}Ξ_1…Ξ_n; multiplies the span of the
/// degree-d interpolation family by q^{−d}.
pub fn apply_euler_s(f: &ZPolynomial) -> Result<ZPolynomial> {
    let n = f.num_vars();
    let mut g = f.clone();
    for i in (1..=n).rev() {
        g = apply_xi_big(&g, i)?;
    }
    Ok(g.scale(&FieldElement::qt_monomial(0, -binom2(n))))
}

/// Raising operator Z_i = t^{−C(n,2)}(z_iΞ_i − 1)Ξ_1…Ξ̂_i…Ξ_n; maps the
/// degree-d interpolation space into the degree-(d+1) one.
pub fn apply_zi(f: &ZPolynomial, i: usize) -> Result<ZPolynomial> {
    let n = f.num_vars();
    check_cherednik(n, i, "Z");
    let mut g = f.clone();
    for j in (1..=n).rev() {
        if j != i {
            g = apply_xi_big(&g, j)?;
        }
    }
    Ok(raising_word(&g, i).scale(&FieldElement::qt_monomial(0, -binom2(n))))
}

/// Recursion-step operator A_m = H_m…H_{n−1}Φ (bar=false) or
/// Ā_m = H̄_m…H̄_{n−1}Φ (bar=true).
pub fn apply_am(f: &ZPolynomial, m: usize, bar: bool) -> ZPolynomial {
    let n = f.num_vars();
    check_cherednik(n, m, "A");
    hecke_range(apply_phi(f), m, n - 1, bar)
}

/// Degenerate reflection σ_i = s_i + rN_i; an involution satisfying the
/// braid relations and z_{i+1}σ_i = σ_iz_i − r.
pub fn apply_sigma(f: &ZPolynomial, i: usize) -> ZPolynomial {
    check_reflection(f.num_vars(), i, "σ");
    assert_eq!(f.params(), ParamSet::R, "σ lives over ℚ(r)");
    let r = FieldElement::param(ParamSet::R, 0);
    apply_si(f, i).add(&apply_ni(f, i).scale(&r))
}

fn sigma_range(mut f: ZPolynomial, lo: usize, hi: usize) -> ZPolynomial {
    for j in (lo..=hi).rev() {
        f = apply_sigma(&f, j);
    }
    f
}

/// Degenerate shift: Δ̃f(z_1,…,z_n) = f(z_n − 1, z_1, …, z_{n−1}).
pub fn apply_delta_tilde(f: &ZPolynomial) -> ZPolynomial {
    let n = f.num_vars();
    assert_eq!(f.params(), ParamSet::R, "Δ̃ lives over ℚ(r)");
    assert!(f.is_polynomial(), "Δ̃ acts on genuine polynomials");
    let max_first = f.terms().map(|(e, _)| e.get(0)).max().unwrap_or(0);
    // Powers of (z_n − 1), indexed by the exponent they replace.
    let base = ZPolynomial::var(n, ParamSet::R, n - 1)
        .sub(&ZPolynomial::one(n, ParamSet::R));
    let mut powers = vec![ZPolynomial::one(n, ParamSet::R)];
    for k in 1..=max_first {
        powers.push(powers[k as usize - 1].mul(&base));
    }
    let mut out = ZPolynomial::zero(n, f.params());
    for (e, c) in f.terms() {
        let mut v = Vec::with_capacity(n);
        v.extend((1..n).map(|j| e.get(j)));
        v.push(0);
        out = out.add(&powers[e.get(0) as usize].mul_monomial(&Exponents::new(v), c));
    }
    out
}

/// Degenerate raising step Φ̃ = (z_n + (n−1)r)Δ̃.
pub fn apply_phi_tilde(f: &ZPolynomial) -> ZPolynomial {
    let n = f.num_vars();
    let factor = ZPolynomial::var(n, ParamSet::R, n - 1).add(&ZPolynomial::constant(
        n,
        FieldElement::r_linear(0, n as i64 - 1),
    ));
    apply_delta_tilde(f).mul(&factor)
}

/// Degenerate Cherednik operator Ξ̃_i = z_i − σ_i…σ_{n−1}Φ̃σ_1…σ_{i−1}.
pub fn apply_xi_tilde(f: &ZPolynomial, i: usize) -> ZPolynomial {
    let n = f.num_vars();
    check_cherednik(n, i, "Ξ̃");
    f.mul_var_pow(i - 1, 1).sub(&apply_z_tilde(f, i))
}

/// Degenerate raising operator Z̃_i = z_i − Ξ̃_i = σ_i…σ_{n−1}Φ̃σ_1…σ_{i−1}.
pub fn apply_z_tilde(f: &ZPolynomial, i: usize) -> ZPolynomial {
    let n = f.num_vars();
    check_cherednik(n, i, "Z̃");
    let g = sigma_range(f.clone(), 1, i - 1);
    sigma_range(apply_phi_tilde(&g), i, n - 1)
}

/// Names for every operator this module exposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Si,
    Ni,
    Hi,
    HbarI,
    Delta,
    Phi,
    XiInvSmall,
    XiBig,
    Zi,
    Am,
    AbarM,
    EulerS,
    SigmaI,
    DeltaTilde,
    PhiTilde,
    XiTilde,
    ZTilde,
}

/// An operator name plus its index, when the kind takes one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OperatorTag {
    pub kind: OperatorKind,
    pub index: Option<usize>,
}

impl OperatorTag {
    pub fn new(kind: OperatorKind, index: Option<usize>) -> Self {
        OperatorTag { kind, index }
    }
}

enum IndexClass {
    None,
    Reflection,
    Cherednik,
}

fn index_class(kind: OperatorKind) -> IndexClass {
    use OperatorKind::*;
    match kind {
        Si | Ni | Hi | HbarI | SigmaI => IndexClass::Reflection,
        XiInvSmall | XiBig | Zi | Am | AbarM | XiTilde | ZTilde => IndexClass::Cherednik,
        Delta | Phi | EulerS | DeltaTilde | PhiTilde => IndexClass::None,
    }
}

fn required_params(kind: OperatorKind) -> Option<ParamSet> {
    use OperatorKind::*;
    match kind {
        Si | Ni => None,
        SigmaI | DeltaTilde | PhiTilde | XiTilde | ZTilde => Some(ParamSet::R),
        _ => Some(ParamSet::QT),
    }
}

/// Checked dispatch: validates the index and coefficient domain, then applies
/// the named operator.
pub fn apply(tag: OperatorTag, f: &ZPolynomial) -> Result<ZPolynomial> {
    let n = f.num_vars();
    let i = match (index_class(tag.kind), tag.index) {
        (IndexClass::None, None) => 0,
        (IndexClass::None, Some(_)) => {
            return Err(Error::InvalidArgument(format!(
                "{:?} takes no index",
                tag.kind
            )))
        }
        (_, None) => {
            return Err(Error::InvalidArgument(format!(
                "{:?} requires an index",
                tag.kind
            )))
        }
        (IndexClass::Reflection, Some(i)) if (1..n).contains(&i) => i,
        (IndexClass::Cherednik, Some(i)) if (1..=n).contains(&i) => i,
        (_, Some(i)) => {
            return Err(Error::InvalidArgument(format!(
                "{:?} index {i} out of range for n={n}",
                tag.kind
            )))
        }
    };
    if let Some(req) = required_params(tag.kind) {
        if f.params() != req {
            return Err(Error::MismatchedDomains(format!(
                "{:?} needs coefficients over {:?}, got {:?}",
                tag.kind,
                req,
                f.params()
            )));
        }
    }
    use OperatorKind::*;
    Ok(match tag.kind {
        Si => apply_si(f, i),
        Ni => apply_ni(f, i),
        Hi => apply_hecke(f, i, false),
        HbarI => apply_hecke(f, i, true),
        Delta => apply_delta(f),
        Phi => apply_phi(f),
        XiInvSmall => apply_xi_inv(f, i),
        XiBig => apply_xi_big(f, i)?,
        Zi => apply_zi(f, i)?,
        Am => apply_am(f, i, false),
        AbarM => apply_am(f, i, true),
        EulerS => apply_euler_s(f)?,
        SigmaI => apply_sigma(f, i),
        DeltaTilde => apply_delta_tilde(f),
        PhiTilde => apply_phi_tilde(f),
        XiTilde => apply_xi_tilde(f, i),
        ZTilde => apply_z_tilde(f, i),
    })
}
