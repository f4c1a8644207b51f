//! Decision engines for expansivity and root location.
//!
//! Two independent exact routes decide whether every root of an integer
//! polynomial lies strictly outside the unit circle:
//!
//! * the determinant conditions `D_k^±(f) > 0` evaluated fraction-free, with
//!   a full and a reduced (every-second-`k`) checking schedule, and
//! * the classical Schur–Cohn chain `|a_n| < |a_0|` iterated through
//!   successive Schur transforms.
//!
//! On top of these sit unit-circle root counting, the coefficient-box
//! necessary-condition prefilter, the radius-`s` generalization through
//! argument scaling, and an exact bisection that certifies a lower bound on
//! the expansivity gap.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{bareiss_determinant, ExactMatrix};
use crate::poly::{IntPolynomial, Rational, SignNormalization};

/// Which sign variant of the determinant family to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DSign {
    Plus,
    Minus,
}

impl DSign {
    pub fn symbol(self) -> char {
        match self {
            DSign::Plus => '+',
            DSign::Minus => '-',
        }
    }
}

/// Selects one determinant `D_k^±` for a polynomial of (pseudo-)degree `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DMatrixSpec {
    pub k: usize,
    pub sign: DSign,
    pub n: usize,
}

impl DMatrixSpec {
    pub fn new(k: usize, sign: DSign, n: usize) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::IndexOutOfRange { k, n });
        }
        Ok(DMatrixSpec { k, sign, n })
    }
}

/// Checking schedule for the determinant conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// `D_1^±`, then `f(±1)`, then `D_k^±` for every `k = 2..n-1` ascending.
    Full,
    /// `D_1^±`, then `f(±1)`, then only `k = n-1, n-3, ...` descending.
    Reduced,
}

/// Which engine produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    DConditionsFull,
    DConditionsReduced,
    SchurCohn,
    Numeric,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::DConditionsFull => "d-conditions-full",
            Method::DConditionsReduced => "d-conditions-reduced",
            Method::SchurCohn => "schur-cohn",
            Method::Numeric => "numeric",
        }
    }
}

pub const ALL_CONDITIONS_PASSED: &str = "all conditions passed";

/// Outcome of an expansivity check, with the first failed condition as a
/// human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansivityVerdict {
    pub expansive: bool,
    pub method: Method,
    pub witness: String,
    pub conditions_checked: usize,
}

impl ExpansivityVerdict {
    fn pass(method: Method, conditions_checked: usize) -> Self {
        ExpansivityVerdict {
            expansive: true,
            method,
            witness: ALL_CONDITIONS_PASSED.to_string(),
            conditions_checked,
        }
    }

    fn fail(method: Method, witness: String, conditions_checked: usize) -> Self {
        ExpansivityVerdict {
            expansive: false,
            method,
            witness,
            conditions_checked,
        }
    }
}

/// Root counts relative to the unit circle, with multiplicity.
///
/// When the chain hits `|a_n| = |a_0|` neither descent branch applies; the
/// counts so far are returned with `on_circle_detected` set and are lower
/// bounds only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootCountReport {
    pub inside: usize,
    pub on_circle_detected: bool,
    pub outside: usize,
}

/// Build the `k x k` matrix with entries `a_(j-i) ± a_(i+j+n-k-1)`
/// (1-based `i`, `j`; coefficients outside `0..=n` are zero).
///
/// Expects the sign-normalized polynomial (`a_0 > 0`) when the result feeds
/// an expansivity decision.
pub fn build_d_matrix(f: &IntPolynomial, spec: &DMatrixSpec) -> Result<ExactMatrix> {
    let (k, n) = (spec.k, spec.n);
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange { k, n });
    }
    let coeff = |t: isize| -> BigInt {
        if t < 0 || t > n as isize {
            BigInt::zero()
        } else {
            f.coeff(t)
        }
    };
    let mut entries = Vec::with_capacity(k * k);
    for i in 1..=k as isize {
        for j in 1..=k as isize {
            let first = coeff(j - i);
            let second = coeff(i + j + n as isize - k as isize - 1);
            entries.push(match spec.sign {
                DSign::Plus => first + second,
                DSign::Minus => first - second,
            });
        }
    }
    ExactMatrix::new(k, entries)
}

/// Exact value of `D_k^±(f)`; `k = 0` is the empty determinant, 1.
pub fn d_determinant(f: &IntPolynomial, k: usize, sign: DSign, n: usize) -> Result<BigInt> {
    if k == 0 {
        return Ok(BigInt::one());
    }
    let spec = DMatrixSpec::new(k, sign, n)?;
    let m = build_d_matrix(f, &spec)?;
    Ok(bareiss_determinant(&m).0)
}

enum Condition {
    D(usize, DSign),
    AtOne(i8),
}

fn run_d_schedule(
    g: &IntPolynomial,
    n: usize,
    schedule: impl Iterator<Item = Condition>,
    method: Method,
) -> Result<ExpansivityVerdict> {
    let mut checked = 0;
    for cond in schedule {
        checked += 1;
        match cond {
            Condition::D(k, sign) => {
                let value = d_determinant(g, k, sign, n)?;
                if !value.is_positive() {
                    return Ok(ExpansivityVerdict::fail(
                        method,
                        format!("D_{}^{} = {} <= 0", k, sign.symbol(), value),
                        checked,
                    ));
                }
            }
            Condition::AtOne(s) => {
                let value = g.evaluate_int(&BigInt::from(s));
                if !value.is_positive() {
                    return Ok(ExpansivityVerdict::fail(
                        method,
                        format!("f({}) = {} <= 0", s, value),
                        checked,
                    ));
                }
            }
        }
    }
    Ok(ExpansivityVerdict::pass(method, checked))
}

/// Decide expansivity through the determinant conditions.
///
/// Conditions are ordered cheapest first: `D_1^± > 0` (that is,
/// `|a_n| < |a_0|`), then `f(±1) > 0` in place of the `k = n` determinants,
/// then the interior `k`. The reduced schedule keeps only every second `k`
/// counting down from `n-1`; both schedules decide the same predicate.
pub fn check_d_conditions(f: &IntPolynomial, strategy: Strategy) -> Result<ExpansivityVerdict> {
    let method = match strategy {
        Strategy::Full => Method::DConditionsFull,
        Strategy::Reduced => Method::DConditionsReduced,
    };
    let (g, how) = f.normalize_sign()?;
    if how == SignNormalization::ZeroConstant {
        return Ok(ExpansivityVerdict::fail(method, "a_0 = 0".to_string(), 0));
    }
    let g = g.trimmed();
    let n = g.degree();
    if n == 0 {
        // A nonzero constant has no roots at all.
        return Ok(ExpansivityVerdict::pass(method, 0));
    }

    let head = [
        Condition::D(1, DSign::Plus),
        Condition::D(1, DSign::Minus),
        Condition::AtOne(1),
        Condition::AtOne(-1),
    ];
    let ks: Vec<usize> = match strategy {
        Strategy::Full => (2..n).collect(),
        Strategy::Reduced => (2..n).rev().step_by(2).collect(),
    };
    let tail = ks
        .into_iter()
        .flat_map(|k| [Condition::D(k, DSign::Plus), Condition::D(k, DSign::Minus)]);
    run_d_schedule(&g, n, head.into_iter().chain(tail), method)
}

/// Decide expansivity through the Schur–Cohn chain: check `|a_n| < |a_0|`
/// on the input and on each successive Schur transform, using the stored
/// pseudo-degree so every step shrinks the chain by exactly one slot.
pub fn check_schur_cohn(f: &IntPolynomial) -> Result<ExpansivityVerdict> {
    let (g, how) = f.normalize_sign()?;
    if how == SignNormalization::ZeroConstant {
        return Ok(ExpansivityVerdict::fail(
            Method::SchurCohn,
            "a_0 = 0".to_string(),
            0,
        ));
    }
    let mut current = g.trimmed();
    let mut checked = 0;
    let mut step = 0;
    while current.degree() >= 1 {
        checked += 1;
        if current.leading().abs() >= current.constant().abs() {
            return Ok(ExpansivityVerdict::fail(
                Method::SchurCohn,
                format!("|a_n| >= |a_0| at step {step}"),
                checked,
            ));
        }
        current = current.schur_transform();
        step += 1;
    }
    Ok(ExpansivityVerdict::pass(Method::SchurCohn, checked))
}

/// Count roots inside/outside the unit circle by descending the Schur chain.
pub fn count_roots_inside_unit(f: &IntPolynomial) -> Result<RootCountReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }

    // Returns (inside, outside, flagged); counts are exact when unflagged
    // and lower bounds otherwise.
    fn descend(f: &IntPolynomial) -> (usize, usize, bool) {
        let d = f.degree();
        if d == 0 {
            return (0, 0, false);
        }
        let a0 = f.constant().abs();
        let top = f.leading().abs();
        if a0 == top {
            return (0, 0, true);
        }
        // |a0| != |top| guarantees the transform is nonzero: its constant
        // term is a_0^2 - a_n^2.
        let g = f.schur_transform().trimmed();
        let (gi, go, flagged) = descend(&g);
        let shrinking = top < a0;
        if flagged {
            // Partial counts transfer: inside is preserved when the top
            // coefficient is smaller, swapped with outside when larger.
            if shrinking {
                (gi, go, true)
            } else {
                (go, gi, true)
            }
        } else if shrinking {
            (gi, d - gi, false)
        } else {
            (d - gi, gi, false)
        }
    }

    let (inside, outside, on_circle_detected) = descend(&f.trimmed());
    Ok(RootCountReport {
        inside,
        on_circle_detected,
        outside,
    })
}

/// Necessary conditions on the coefficients of an expansive polynomial:
/// `|a_n| < |a_0|` and `|a_k| < C(n-1,k-1)|a_n| + C(n-1,k)|a_0|` for the
/// interior coefficients. Cheap prefilter; these also bound the census
/// search box.
pub fn coefficient_bound_filter(f: &IntPolynomial) -> bool {
    let f = f.trimmed();
    let n = f.degree();
    if n == 0 {
        return true;
    }
    let a0 = f.constant().abs();
    let an = f.leading().abs();
    if an >= a0 {
        return false;
    }
    for k in 1..n {
        let bound = binomial(BigInt::from(n - 1), BigInt::from(k - 1)) * &an
            + binomial(BigInt::from(n - 1), BigInt::from(k)) * &a0;
        if f.coeff(k as isize).abs() >= bound {
            return false;
        }
    }
    true
}

/// Decide whether every root satisfies `|α| > s` by checking expansivity of
/// the argument-scaled polynomial `q^n f(s x)`.
pub fn roots_outside_radius(f: &IntPolynomial, s: &Rational) -> Result<ExpansivityVerdict> {
    if !s.is_positive() {
        return Err(Error::NonPositiveRadius);
    }
    let scaled = f.scale_argument(s)?;
    check_d_conditions(&scaled, Strategy::Full)
}

/// Certified lower bound on the smallest root magnitude of an expansive
/// polynomial: returns `s_low >= 1` with every root beyond `s_low` but not
/// beyond `s_low + tol`. The expansivity gap therefore lies in
/// `[s_low - 1, s_low - 1 + tol)`.
///
/// Exact rational bisection; only verdicts of the scaled determinant check
/// are consulted, so the certificate carries no floating-point error.
pub fn certified_gap(f: &IntPolynomial, tol: &Rational) -> Result<Rational> {
    if !tol.is_positive() {
        return Err(Error::NonPositiveTolerance);
    }
    let verdict = check_d_conditions(f, Strategy::Full)?;
    if !verdict.expansive {
        return Err(Error::NotExpansive {
            witness: verdict.witness,
        });
    }
    let trimmed = f.trimmed();
    if trimmed.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }

    let mut lo = Rational::one();
    // The root magnitude product is |a_0/a_n| <= |a_0|, so some root is
    // within |a_0| and the predicate fails there.
    let mut hi = Rational::from_integer(trimmed.constant().abs());
    let mut doublings = 0;
    while roots_outside_radius(&trimmed, &hi)?.expansive {
        hi *= BigInt::from(2);
        doublings += 1;
        if doublings > 64 {
            return Err(Error::Internal(
                "bisection upper bound not found".to_string(),
            ));
        }
    }
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / BigInt::from(2);
        if roots_outside_radius(&trimmed, &mid)?.expansive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}
