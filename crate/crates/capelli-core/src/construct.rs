//! Builders for every polynomial family: the nonsymmetric and symmetric
//! interpolation polynomials over `ℚ(q,t)`, their denominator-free and
//! top-homogeneous forms, the classical families over `ℚ(r)`, plus the
//! basis-expansion, inversion, and factorial-Schur maps that tie them
//! together.
//!
//! Each quantum family can be built along more than one route — the
//! operator recursion and the linear interpolation solve never share
//! intermediates, so their agreement is a genuine cross-check rather
//! than a tautology. A [`PolyStore`] memoizes finished polynomials per
//! `(family, route, label)` key; constructors are pure, so concurrent
//! readers are safe and the first finished write wins.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use num::BigInt;

use crate::error::Error;
use crate::field::{BigRational, FieldElement, ParamSet};
use crate::ops;
use crate::weights::{
    compositions_of_size, compositions_up_to, partitions_of_size, partitions_up_to, Composition,
    NormKind, Permutation,
};
use crate::zpoly::{SpectralPoint, ZPolynomial};
use crate::{linalg, Result};

/// Which polynomial a labeled result holds.
///
/// The first six live over `ℚ(q,t)`: the monic interpolation
/// polynomials `E` and `P`, their denominator-free rescalings `EeNorm`
/// and `PNorm`, and their top-homogeneous parts `EBar` and `PBar`. The
/// last four are the classical counterparts over `ℚ(r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    E,
    P,
    EeNorm,
    PNorm,
    EBar,
    PBar,
    ETilde,
    PTilde,
    EeTildeNorm,
    PTildeNorm,
}

impl Family {
    /// Every family, in a fixed order.
    pub const ALL: [Family; 10] = [
        Family::E,
        Family::P,
        Family::EeNorm,
        Family::PNorm,
        Family::EBar,
        Family::PBar,
        Family::ETilde,
        Family::PTilde,
        Family::EeTildeNorm,
        Family::PTildeNorm,
    ];

    /// Families whose labels must be partitions and whose bodies are
    /// symmetric polynomials.
    pub fn is_symmetric(self) -> bool {
        matches!(
            self,
            Family::P | Family::PNorm | Family::PBar | Family::PTilde | Family::PTildeNorm
        )
    }

    /// Families living over `ℚ(r)` rather than `ℚ(q,t)`.
    pub fn is_classical(self) -> bool {
        matches!(
            self,
            Family::ETilde | Family::PTilde | Family::EeTildeNorm | Family::PTildeNorm
        )
    }

    /// The coefficient field the family's bodies live in.
    pub fn params(self) -> ParamSet {
        if self.is_classical() {
            ParamSet::R
        } else {
            ParamSet::QT
        }
    }

    /// Short stable name, used in cache keys and reports.
    pub fn tag(self) -> &'static str {
        match self {
            Family::E => "E",
            Family::P => "P",
            Family::EeNorm => "EE_norm",
            Family::PNorm => "P_norm",
            Family::EBar => "E_bar",
            Family::PBar => "P_bar",
            Family::ETilde => "E_tilde",
            Family::PTilde => "P_tilde",
            Family::EeTildeNorm => "EE_tilde_norm",
            Family::PTildeNorm => "P_tilde_norm",
        }
    }

    /// Monic families: coefficient 1 on `z^λ` (equivalently on `m_λ`
    /// for the symmetric ones).
    fn is_monic(self) -> bool {
        !matches!(
            self,
            Family::EeNorm | Family::PNorm | Family::EeTildeNorm | Family::PTildeNorm
        )
    }

    /// Families whose value at their own spectral point is asserted
    /// nonzero at construction time (several normalizations divide by
    /// it).
    fn checks_own_point(self) -> bool {
        matches!(
            self,
            Family::E | Family::P | Family::ETilde | Family::PTilde
        )
    }

    /// The route used when a caller does not ask for a specific one.
    pub fn default_route(self) -> Route {
        match self {
            // The raising recursion is the primary quantum
            // nonsymmetric construction; interpolation is its oracle.
            Family::E | Family::EeNorm | Family::EBar => Route::Recursion,
            _ => Route::Interpolation,
        }
    }

    /// Whether this family can be built along `route`.
    pub fn supports(self, route: Route) -> bool {
        match self {
            Family::E | Family::EeNorm | Family::EBar => {
                matches!(route, Route::Recursion | Route::Interpolation)
            }
            Family::P | Family::PNorm | Family::PBar => {
                matches!(route, Route::Interpolation | Route::Symmetrization)
            }
            // Classical families are constructed by direct
            // interpolation only; the q→1 limit path is a verification
            // (see `PolyStore::limit_check`), never a constructor.
            _ => matches!(route, Route::Interpolation),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// How a labeled polynomial was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    Recursion,
    Interpolation,
    Symmetrization,
    Limit,
}

impl Route {
    /// Short stable name, used in cache keys and reports.
    pub fn tag(self) -> &'static str {
        match self {
            Route::Recursion => "recursion",
            Route::Interpolation => "interpolation",
            Route::Symmetrization => "symmetrization",
            Route::Limit => "limit",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A finished polynomial together with its label and provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPolynomial {
    pub family: Family,
    pub lambda: Composition,
    pub n: usize,
    pub body: ZPolynomial,
    pub route: Route,
}

impl LabeledPolynomial {
    /// Checked constructor: verifies the label invariants — matching
    /// variable count and field, degree exactly `|λ|`, coefficient 1 on
    /// `z^λ` for the monic families, and a nonzero value at the
    /// family's own spectral point where required.
    pub fn new(
        family: Family,
        lambda: Composition,
        body: ZPolynomial,
        route: Route,
    ) -> Result<Self> {
        let n = lambda.n();
        if body.num_vars() != n || body.params() != family.params() {
            return Err(Error::InternalInvariant(format!(
                "family {} label {} got a body in the wrong ring",
                family, lambda
            )));
        }
        if body.degree() != Some(i64::from(lambda.size())) {
            return Err(Error::InternalInvariant(format!(
                "family {} label {} has degree {:?}, wanted {}",
                family,
                lambda,
                body.degree(),
                lambda.size()
            )));
        }
        if family.is_monic() && !body.coefficient(&lambda.to_exponents()).is_one() {
            return Err(Error::InternalInvariant(format!(
                "family {} label {} is not monic at its leading monomial",
                family, lambda
            )));
        }
        if family.checks_own_point() {
            let point = if family.is_classical() {
                lambda.point_tilde()
            } else {
                lambda.point_bar()
            };
            if body.evaluate(&point)?.is_zero() {
                return Err(Error::InternalInvariant(format!(
                    "family {} label {} vanishes at its own spectral point",
                    family, lambda
                )));
            }
        }
        Ok(LabeledPolynomial {
            family,
            lambda,
            n,
            body,
            route,
        })
    }
}

/// The rectangular evaluation matrix of the degree-`≤ d` interpolation
/// problem: rows are labels `μ` (compositions for `sym = false`,
/// partitions otherwise) in enumeration order, columns the matching
/// basis elements (`z^ν` or `m_ν`) evaluated at the row's spectral
/// point. Over `QT` the points are the `μ̄`, over `R` the `μ̃`. The
/// matrix is square; its nonsingularity is the unisolvence statement.
pub fn interpolation_matrix(
    n: usize,
    d: u32,
    sym: bool,
    params: ParamSet,
) -> Result<Vec<Vec<FieldElement>>> {
    if params == ParamSet::Q {
        return Err(Error::InvalidArgument(
            "interpolation runs over the two-parameter or classical field".into(),
        ));
    }
    let labels = if sym {
        partitions_up_to(n, d)
    } else {
        compositions_up_to(n, d)
    };
    let basis = basis_columns(&labels, n, sym, params);
    let mut rows = Vec::with_capacity(labels.len());
    for mu in &labels {
        let point = spectral_point(mu, params);
        let mut row = Vec::with_capacity(basis.len());
        for b in &basis {
            row.push(b.evaluate(&point)?);
        }
        rows.push(row);
    }
    Ok(rows)
}

fn spectral_point(mu: &Composition, params: ParamSet) -> SpectralPoint {
    if params == ParamSet::R {
        mu.point_tilde()
    } else {
        mu.point_bar()
    }
}

fn basis_columns(
    labels: &[Composition],
    n: usize,
    sym: bool,
    params: ParamSet,
) -> Vec<ZPolynomial> {
    labels
        .iter()
        .map(|nu| {
            if sym {
                let parts: Vec<i32> = nu.parts().iter().map(|&p| p as i32).collect();
                ZPolynomial::monomial_symmetric(n, params, &parts)
            } else {
                nu.z_monomial(params)
            }
        })
        .collect()
}

type StoreKey = (Family, Route, Composition);

/// Memoizing store for constructed polynomials.
///
/// Constructors are pure, so the cache maps a `(family, route, label)`
/// key to one immutable result; readers share, writers serialize, and
/// on a race the first finished construction is kept so identical keys
/// always give identical polynomials.
#[derive(Debug, Default)]
pub struct PolyStore {
    cache: RwLock<HashMap<StoreKey, Arc<LabeledPolynomial>>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl PolyStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Times a requested key was already present.
    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    /// Times a requested key had to be built.
    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    /// Build (or fetch) the `family` polynomial labeled by `lambda`
    /// along `route`, defaulting to the family's primary route.
    pub fn construct(
        &self,
        family: Family,
        lambda: &Composition,
        route: Option<Route>,
    ) -> Result<Arc<LabeledPolynomial>> {
        let route = route.unwrap_or_else(|| family.default_route());
        if family.is_symmetric() && !lambda.is_partition() {
            return Err(Error::InvalidArgument(format!(
                "family {} needs a partition label, got {}",
                family, lambda
            )));
        }
        if !family.supports(route) {
            return Err(Error::InvalidArgument(format!(
                "family {} has no {} route",
                family, route
            )));
        }
        let key = (family, route, lambda.clone());
        if let Some(hit) = self.cached(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(hit);
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        self.build(family, lambda, route)
    }

    /// Nonsymmetric interpolation solve: the unique polynomial of
    /// degree `≤ |λ|` vanishing at every `μ̄` with `|μ| ≤ |λ|`, `μ ≠ λ`,
    /// monic at `z^λ`.
    pub fn interpolate_nonsym(&self, lambda: &Composition) -> Result<Arc<LabeledPolynomial>> {
        self.construct(Family::E, lambda, Some(Route::Interpolation))
    }

    /// The raising recursion for the denominator-free family; the
    /// monic polynomial is recovered by dividing the scalar.
    pub fn recurse_nonsym(&self, lambda: &Composition) -> Result<Arc<LabeledPolynomial>> {
        self.construct(Family::EeNorm, lambda, Some(Route::Recursion))
    }

    /// Symmetric interpolation solve on the monomial-symmetric basis
    /// against the partition points.
    pub fn interpolate_sym(&self, lambda: &Composition) -> Result<Arc<LabeledPolynomial>> {
        self.construct(Family::P, lambda, Some(Route::Interpolation))
    }

    /// Symmetric polynomial by Hecke symmetrization of the
    /// nonsymmetric one; agrees with [`PolyStore::interpolate_sym`].
    pub fn symmetrize_hecke(&self, lambda: &Composition) -> Result<Arc<LabeledPolynomial>> {
        self.construct(Family::P, lambda, Some(Route::Symmetrization))
    }

    /// Classical interpolation solve over `ℚ(r)` at the `μ̃` points.
    pub fn interpolate_classical(
        &self,
        lambda: &Composition,
        sym: bool,
    ) -> Result<Arc<LabeledPolynomial>> {
        let family = if sym { Family::PTilde } else { Family::ETilde };
        self.construct(family, lambda, Some(Route::Interpolation))
    }

    fn cached(&self, key: &StoreKey) -> Option<Arc<LabeledPolynomial>> {
        self.cache.read().unwrap().get(key).cloned()
    }

    /// Insert, keeping an already-present winner so identical keys
    /// always hand out the identical polynomial.
    fn memoize(&self, poly: LabeledPolynomial) -> Arc<LabeledPolynomial> {
        let key = (poly.family, poly.route, poly.lambda.clone());
        let mut w = self.cache.write().unwrap();
        w.entry(key).or_insert_with(|| Arc::new(poly)).clone()
    }

    fn build(
        &self,
        family: Family,
        lambda: &Composition,
        route: Route,
    ) -> Result<Arc<LabeledPolynomial>> {
        match (family, route) {
            (Family::E | Family::P | Family::ETilde | Family::PTilde, Route::Interpolation) => {
                self.interpolation_batch(family, lambda.n(), lambda.size())?;
                self.cached(&(family, route, lambda.clone())).ok_or_else(|| {
                    Error::InternalInvariant(format!(
                        "interpolation batch skipped {} label {}",
                        family, lambda
                    ))
                })
            }
            (Family::E, Route::Recursion) => {
                let ee = self.construct(Family::EeNorm, lambda, Some(Route::Recursion))?;
                let scalar = lambda.norm_factor(NormKind::NonSymmetric)?;
                let body = ee.body.scale(&scalar.recip()?);
                Ok(self.memoize(LabeledPolynomial::new(family, lambda.clone(), body, route)?))
            }
            (Family::EeNorm, Route::Recursion) => {
                let body = self.recursion_body(lambda)?;
                Ok(self.memoize(LabeledPolynomial::new(family, lambda.clone(), body, route)?))
            }
            (Family::EeNorm, Route::Interpolation) => {
                let e = self.construct(Family::E, lambda, Some(Route::Interpolation))?;
                let body = e.body.scale(&lambda.norm_factor(NormKind::NonSymmetric)?);
                Ok(self.memoize(LabeledPolynomial::new(family, lambda.clone(), body, route)?))
            }
            (Family::P, Route::Symmetrization) => self.symmetrization_build(lambda),
            (Family::PNorm, _) => {
                let p = self.construct(Family::P, lambda, Some(route))?;
                let body = p.body.scale(&lambda.norm_factor(NormKind::Symmetric)?);
                Ok(self.memoize(LabeledPolynomial::new(family, lambda.clone(), body, route)?))
            }
            (Family::EBar, _) => {
                let e = self.construct(Family::E, lambda, Some(route))?;
                Ok(self.memoize(top_macdonald(&e)?))
            }
            (Family::PBar, _) => {
                let p = self.construct(Family::P, lambda, Some(route))?;
                Ok(self.memoize(top_macdonald(&p)?))
            }
            (Family::EeTildeNorm, Route::Interpolation) => {
                let e = self.construct(Family::ETilde, lambda, Some(route))?;
                let body = e
                    .body
                    .scale(&lambda.norm_factor_classical(NormKind::NonSymmetric)?);
                Ok(self.memoize(LabeledPolynomial::new(family, lambda.clone(), body, route)?))
            }
            (Family::PTildeNorm, Route::Interpolation) => {
                let p = self.construct(Family::PTilde, lambda, Some(route))?;
                let body = p
                    .body
                    .scale(&lambda.norm_factor_classical(NormKind::Symmetric)?);
                Ok(self.memoize(LabeledPolynomial::new(family, lambda.clone(), body, route)?))
            }
            _ => Err(Error::InternalInvariant(format!(
                "unhandled build {} / {}",
                family, route
            ))),
        }
    }

    /// Solve the degree-`d` interpolation problem once and memoize the
    /// whole size-`d` label class; one fraction-free elimination serves
    /// every sibling.
    fn interpolation_batch(&self, family: Family, n: usize, d: u32) -> Result<()> {
        let sym = family.is_symmetric();
        let params = family.params();
        let labels = if sym {
            partitions_up_to(n, d)
        } else {
            compositions_up_to(n, d)
        };
        let basis = basis_columns(&labels, n, sym, params);
        let matrix = interpolation_matrix(n, d, sym, params)?;
        let index: HashMap<&Composition, usize> =
            labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let targets = if sym {
            partitions_of_size(n, d)
        } else {
            compositions_of_size(n, d)
        };
        let zero = FieldElement::zero(params);
        let one = FieldElement::one(params);
        let rhs: Vec<Vec<FieldElement>> = targets
            .iter()
            .map(|t| {
                let mut col = vec![zero.clone(); labels.len()];
                col[index[t]] = one.clone();
                col
            })
            .collect();
        let solution = linalg::solve_many(&matrix, &rhs)?;
        for (target, x) in targets.iter().zip(&solution.solutions) {
            let pivot = &x[index[target]];
            if pivot.is_zero() {
                return Err(Error::InternalInvariant(format!(
                    "interpolation lost the monic pivot for {}",
                    target
                )));
            }
            let inv = pivot.recip()?;
            let mut body = ZPolynomial::zero(n, params);
            for (b, c) in basis.iter().zip(x) {
                if !c.is_zero() {
                    body = body.add(&b.scale(&(c * &inv)));
                }
            }
            self.memoize(LabeledPolynomial::new(
                family,
                target.clone(),
                body,
                Route::Interpolation,
            )?);
        }
        Ok(())
    }

    /// Denominator-free raising recursion: one shift-operator word per
    /// unit of degree, entirely within `n` variables.
    fn recursion_body(&self, lambda: &Composition) -> Result<ZPolynomial> {
        if lambda.is_zero() {
            return Ok(ZPolynomial::one(lambda.n(), ParamSet::QT));
        }
        let m = lambda.last_nonzero_index().unwrap() + 1; // 1-based length
        let star = lambda.star_leading()?;
        let prev = self.construct(Family::EeNorm, &star, Some(Route::Recursion))?;
        let lam_m = i64::from(lambda.part(m - 1));
        let k_m = i64::from(lambda.k_vector()[m - 1]);
        let raised_bar = ops::apply_am(&prev.body, m, true);
        let raised = ops::apply_am(&prev.body, m, false);
        // λ̄_m t^m = q^{λ_m} t^{m−k_m}; outer scalar q^{λ_m−1}.
        let eigen_shift = FieldElement::qt_monomial(lam_m, m as i64 - k_m);
        let body = raised_bar.sub(&raised.scale(&eigen_shift));
        Ok(body.scale(&FieldElement::qt_monomial(lam_m - 1, 0)))
    }

    /// Full Hecke symmetrizer `Σ_w H_w` applied to the nonsymmetric
    /// polynomial, one lexicographically minimal reduced word per `w`.
    fn symmetrization_build(&self, lambda: &Composition) -> Result<Arc<LabeledPolynomial>> {
        let e = self.construct(Family::E, lambda, None)?;
        let n = lambda.n();
        let mut acc = ZPolynomial::zero(n, ParamSet::QT);
        for w in Permutation::all(n) {
            let mut g = e.body.clone();
            // The word letters act rightmost-first.
            for &i in w.reduced_word().iter().rev() {
                g = ops::apply_hecke(&g, i + 1, false);
            }
            acc = acc.add(&g);
        }
        if acc.num_terms() == 0 {
            // Documented fallback; the route label reports what ran.
            return self.construct(Family::P, lambda, Some(Route::Interpolation));
        }
        assert!(
            acc.is_symmetric(),
            "Hecke symmetrization of {} is not symmetric",
            lambda
        );
        let top = acc.coefficient(&lambda.to_exponents());
        assert!(
            !top.is_zero(),
            "Hecke symmetrization of {} lost its leading coefficient",
            lambda
        );
        let body = acc.scale(&top.recip()?);
        Ok(self.memoize(LabeledPolynomial::new(
            Family::P,
            lambda.clone(),
            body,
            Route::Symmetrization,
        )?))
    }

    /// Expansion of a polynomial in the nonsymmetric basis, by
    /// triangular elimination against evaluations at the `ν̄` points in
    /// increasing degree: once every lower-degree coefficient is known,
    /// `f(ν̄) = c_ν E_ν(ν̄) + Σ_{|μ|<|ν|} c_μ E_μ(ν̄)` because same- and
    /// higher-degree basis elements vanish at `ν̄`.
    pub fn expand_in_e_basis(
        &self,
        f: &ZPolynomial,
    ) -> Result<BTreeMap<Composition, FieldElement>> {
        if f.params() != ParamSet::QT {
            return Err(Error::MismatchedDomains(
                "basis expansion runs over the two-parameter field".into(),
            ));
        }
        if !f.is_polynomial() {
            return Err(Error::InvalidArgument(
                "basis expansion needs a genuine polynomial".into(),
            ));
        }
        let mut out = BTreeMap::new();
        let Some(d) = f.degree() else {
            return Ok(out);
        };
        let n = f.num_vars();
        let mut known: Vec<(Composition, FieldElement)> = Vec::new();
        for nu in compositions_up_to(n, d as u32) {
            let point = nu.point_bar();
            let mut v = f.evaluate(&point)?;
            for (mu, c) in &known {
                if mu.size() < nu.size() {
                    let e_mu = self.construct(Family::E, mu, None)?;
                    v = &v - &(c * &e_mu.body.evaluate(&point)?);
                }
            }
            let e_nu = self.construct(Family::E, &nu, None)?;
            let c_nu = v.div(&e_nu.body.evaluate(&point)?)?;
            if !c_nu.is_zero() {
                known.push((nu.clone(), c_nu.clone()));
                out.insert(nu, c_nu);
            }
        }
        Ok(out)
    }

    /// Verify one quantum family degenerates to its classical
    /// counterpart: substitute `t = q^r`, move to the shifted variables
    /// (`z_i ↦ (q−1)z_i + 1`), and take the exact `q→1` limit after
    /// dividing by the family's power of `q−1`. A limit of too low an
    /// order reports `false` rather than erroring.
    pub fn limit_check(&self, family: Family, lambda: &Composition, r: u32) -> Result<bool> {
        if r == 0 {
            return Err(Error::InvalidArgument(
                "the degeneration runs at positive integer r".into(),
            ));
        }
        let d = lambda.size();
        let (classical, k, negate) = match family {
            Family::E => (Family::ETilde, d, false),
            Family::P => (Family::PTilde, d, false),
            Family::EeNorm => (Family::EeTildeNorm, 2 * d, d % 2 == 1),
            Family::PNorm => (Family::PTildeNorm, 2 * d, d % 2 == 1),
            other => {
                return Err(Error::InvalidArgument(format!(
                    "family {} has no classical degeneration contract",
                    other
                )))
            }
        };
        let quantum = self.construct(family, lambda, None)?;
        let shifted = quantum.body.substitute_t_power(r)?.affine_substitute(
            &(&FieldElement::param(ParamSet::Q, 0) - &FieldElement::one(ParamSet::Q)),
            &FieldElement::one(ParamSet::Q),
        );
        let limit = match shifted.limit_q1(k) {
            Ok(map) => map,
            Err(Error::LimitDoesNotExist { .. }) => return Ok(false),
            Err(e) => return Err(e),
        };
        let tilde = self.construct(classical, lambda, None)?;
        let at_r = BigRational::from_integer(BigInt::from(r));
        let mut target = tilde.body.specialize_coeffs(&[at_r])?;
        if negate {
            for v in target.values_mut() {
                *v = -v.clone();
            }
        }
        Ok(limit == target)
    }

    /// The monic nonsymmetric degeneration check at integer `r`.
    pub fn classical_limit_check(&self, lambda: &Composition, r: u32) -> Result<bool> {
        self.limit_check(Family::E, lambda, r)
    }

    /// The denominator-free degeneration check: the order doubles and
    /// an alternating sign appears.
    pub fn classical_limit_check_normalized(&self, lambda: &Composition, r: u32) -> Result<bool> {
        self.limit_check(Family::EeNorm, lambda, r)
    }
}

/// Relabel a monic polynomial by its top homogeneous part.
pub fn top_macdonald(p: &LabeledPolynomial) -> Result<LabeledPolynomial> {
    let family = match p.family {
        Family::E => Family::EBar,
        Family::P => Family::PBar,
        other => {
            return Err(Error::InvalidArgument(format!(
                "top parts are taken of the monic quantum families, not {}",
                other
            )))
        }
    };
    LabeledPolynomial::new(family, p.lambda.clone(), p.body.top_homogeneous(), p.route)
}

/// The inverse of taking top parts: sends a homogeneous degree-`d`
/// polynomial to the unique inhomogeneous one in the degree-`d` span
/// with that top part, via the commuting multiplication operators —
/// `q^{d choose 2} · fbar(Z_1,…,Z_n)(1)`.
pub fn inversion_psi(fbar: &ZPolynomial) -> Result<ZPolynomial> {
    apply_homogeneous_word(fbar, ParamSet::QT, ops::apply_zi, true)
}

/// Classical counterpart over `ℚ(r)`: `fbar(Z̃_1,…,Z̃_n)(1)`, with no
/// scaling.
pub fn classical_inversion(fbar: &ZPolynomial) -> Result<ZPolynomial> {
    apply_homogeneous_word(fbar, ParamSet::R, |f, i| Ok(ops::apply_z_tilde(f, i)), false)
}

fn apply_homogeneous_word(
    fbar: &ZPolynomial,
    params: ParamSet,
    apply: impl Fn(&ZPolynomial, usize) -> Result<ZPolynomial>,
    scaled: bool,
) -> Result<ZPolynomial> {
    if fbar.params() != params {
        return Err(Error::MismatchedDomains(format!(
            "inversion over {:?} got a polynomial over {:?}",
            params,
            fbar.params()
        )));
    }
    if !fbar.is_polynomial() {
        return Err(Error::InvalidArgument(
            "inversion needs a genuine polynomial".into(),
        ));
    }
    let n = fbar.num_vars();
    let Some(d) = fbar.degree() else {
        return Ok(ZPolynomial::zero(n, params));
    };
    if fbar.terms().any(|(e, _)| e.total() != d) {
        return Err(Error::InvalidArgument(
            "inversion is defined on homogeneous polynomials".into(),
        ));
    }
    let mut acc = ZPolynomial::zero(n, params);
    for (e, c) in fbar.terms() {
        let mut g = ZPolynomial::one(n, params);
        // The multiplication operators commute; apply per variable.
        for i in (1..=n).rev() {
            for _ in 0..e.get(i - 1) {
                g = apply(&g, i)?;
            }
        }
        acc = acc.add(&g.scale(c));
    }
    if scaled {
        acc = acc.scale(&FieldElement::qt_monomial(ops::binom2(d as usize), 0));
    }
    Ok(acc)
}

/// The factorial Schur polynomial over the one-parameter field: the
/// determinant of falling `q`-brackets `[z_i; λ_j+n−j]_q` divided
/// exactly by the Vandermonde `∏_{i<j}(z_i − z_j)`.
pub fn factorial_schur(lambda: &Composition) -> Result<ZPolynomial> {
    if !lambda.is_partition() {
        return Err(Error::InvalidArgument(format!(
            "factorial Schur labels are partitions, got {}",
            lambda
        )));
    }
    let n = lambda.n();
    let entries: Vec<Vec<ZPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| q_bracket(n, i, lambda.part(j) + (n - 1 - j) as u32))
                .collect()
        })
        .collect();
    let mut det = ZPolynomial::zero(n, ParamSet::Q);
    for w in Permutation::all(n) {
        let mut prod = ZPolynomial::one(n, ParamSet::Q);
        for (i, row) in entries.iter().enumerate() {
            prod = prod.mul(&row[w.apply(i)]);
        }
        if w.length() % 2 == 1 {
            prod = prod.neg();
        }
        det = det.add(&prod);
    }
    let mut vandermonde = ZPolynomial::one(n, ParamSet::Q);
    for i in 0..n {
        for j in (i + 1)..n {
            let diff = ZPolynomial::var(n, ParamSet::Q, i).sub(&ZPolynomial::var(n, ParamSet::Q, j));
            vandermonde = vandermonde.mul(&diff);
        }
    }
    det.exact_divide(&vandermonde)
}

/// `[z_i; k]_q = (z_i − 1)(z_i − q)⋯(z_i − q^{k−1})` over the
/// one-parameter field.
fn q_bracket(n: usize, i: usize, k: u32) -> ZPolynomial {
    let mut acc = ZPolynomial::one(n, ParamSet::Q);
    for j in 0..k {
        let factor = ZPolynomial::var(n, ParamSet::Q, i).sub(&ZPolynomial::constant(
            n,
            FieldElement::monomial(ParamSet::Q, [i64::from(j), 0]),
        ));
        acc = acc.mul(&factor);
    }
    acc
}
