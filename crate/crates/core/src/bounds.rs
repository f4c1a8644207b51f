//! Closed-form lower bounds on the expansivity gap.
//!
//! For an expansive integer polynomial every root satisfies `|α| > 1`; these
//! bounds control how small `|α| - 1` can get. Each family bounds the
//! reciprocal `1/(|α| - 1)` from above, separately for real roots and for
//! non-real roots, in terms of a different coefficient measure:
//!
//! | family | real roots                | non-real roots                          |
//! |--------|---------------------------|-----------------------------------------|
//! | A      | `2^(n-1) · A0`            | `2^C(n,2) · A0^(n-1) + 1`               |
//! | AZ     | `2^(n-2) · (A0+An)`       | `2^C(n-1,2) · (A0+An)^(n-1) + 1`        |
//! | H      | `C(n+1,2) · H + n/2`      | `C(n,2) · n! · H^(n-1) + C(n,2) + 1`    |
//! | L      | `n·L + n`                 | `2·C(n,2) · L^(n-1) + 2·C(n,2) + 1`     |
//!
//! with `A0 = |a_0|`, `An = |a_n|`, `H` the height and `L` the length. All
//! arithmetic is exact: the bounds are certificates, so only comparisons
//! against floating-point oracle roots ever leave integer/rational land.
//! No family dominates in general, except AZ, which always beats A.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::expansivity::{check_d_conditions, Strategy};
use crate::poly::{IntPolynomial, Rational};

/// Identifies one of the four bound families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFamily {
    A,
    AZ,
    H,
    L,
}

impl BoundFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundFamily::A => "A",
            BoundFamily::AZ => "AZ",
            BoundFamily::H => "H",
            BoundFamily::L => "L",
        }
    }
}

/// Upper bounds on `1/(|α| - 1)` for one family.
///
/// The real-root value is an exact rational (two families pick up half-
/// integer terms); the non-real value is always an integer and is absent
/// for `n = 1`, where no non-real roots exist.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundPair {
    pub real: Rational,
    pub complex: Option<BigInt>,
}

/// All four families plus the per-column best choice for one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct GapBoundReport {
    pub n: usize,
    pub a: BoundPair,
    pub az: BoundPair,
    pub height: BoundPair,
    pub length: BoundPair,
    pub best_real: BoundFamily,
    pub best_complex: Option<BoundFamily>,
    /// Reciprocal of the best real-column bound: roots on the real line are
    /// at least this far beyond the unit circle.
    pub implied_gap_real: Rational,
    pub implied_gap_complex: Option<Rational>,
    /// Single gap valid for every root regardless of class: reciprocal of
    /// the larger of the two column minima.
    pub implied_gap_any: Rational,
}

/// Liouville inequality query: bound `1/|g(α)|` for roots `α` of `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiouvilleQuery {
    pub f: IntPolynomial,
    pub g: IntPolynomial,
}

fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, v| acc * BigInt::from(v))
}

fn choose(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binomial(BigInt::from(n), BigInt::from(k))
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

fn degree_for_bounds(f: &IntPolynomial) -> Result<(IntPolynomial, usize)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.trimmed();
    let n = f.degree();
    if n == 0 {
        return Err(Error::DegreeTooSmall { needed: 1, got: 0 });
    }
    Ok((f, n))
}

/// Bounds in terms of the constant term alone. Assumes `f` expansive
/// (caller-verified); the values are meaningless otherwise.
pub fn bound_a(f: &IntPolynomial) -> Result<BoundPair> {
    let (f, n) = degree_for_bounds(f)?;
    let a0 = f.constant().abs();
    let real = Rational::from_integer(pow2(n - 1) * &a0);
    let complex = (n >= 2).then(|| pow2(n * (n - 1) / 2) * a0.pow((n - 1) as u32) + BigInt::one());
    Ok(BoundPair { real, complex })
}

/// Bounds in terms of `|a_0| + |a_n|`; strictly better than family A since
/// `|a_n| < |a_0|` for expansive polynomials. For `n = 1` the real-case
/// formula `2^(n-2)(|a_0|+|a_n|)` is kept as the exact rational
/// `(|a_0|+|a_n|)/2` so the strict dominance over family A survives.
pub fn bound_az(f: &IntPolynomial) -> Result<BoundPair> {
    let (f, n) = degree_for_bounds(f)?;
    let sum = f.constant().abs() + f.leading().abs();
    let real = if n == 1 {
        Rational::new(sum.clone(), BigInt::from(2))
    } else {
        Rational::from_integer(pow2(n - 2) * &sum)
    };
    let complex =
        (n >= 2).then(|| pow2((n - 1) * (n - 2) / 2) * sum.pow((n - 1) as u32) + BigInt::one());
    Ok(BoundPair { real, complex })
}

/// Bounds in terms of the height `H(f)`. The real case carries an exact
/// `n/2` term, so it is a rational.
pub fn bound_height(f: &IntPolynomial) -> Result<BoundPair> {
    let (f, n) = degree_for_bounds(f)?;
    let h = f.measures()?.height;
    let real = Rational::from_integer(choose(n + 1, 2) * &h)
        + Rational::new(BigInt::from(n), BigInt::from(2));
    let complex = (n >= 2).then(|| {
        let c = choose(n, 2);
        &c * factorial(n) * h.pow((n - 1) as u32) + &c + BigInt::one()
    });
    Ok(BoundPair { real, complex })
}

/// Bounds in terms of the length `L(f)`.
pub fn bound_length(f: &IntPolynomial) -> Result<BoundPair> {
    let (f, n) = degree_for_bounds(f)?;
    let l = f.measures()?.length;
    let real = Rational::from_integer(BigInt::from(n) * &l + BigInt::from(n));
    let complex = (n >= 2).then(|| {
        let two_c = BigInt::from(2) * choose(n, 2);
        &two_c * l.pow((n - 1) as u32) + &two_c + BigInt::one()
    });
    Ok(BoundPair { real, complex })
}

/// Evaluate all four families and pick the best per root class. Ties go to
/// the earlier family in the fixed order A, AZ, H, L.
///
/// Verifies expansivity first and reports the witness on failure.
pub fn best_bound_report(f: &IntPolynomial) -> Result<GapBoundReport> {
    let verdict = check_d_conditions(f, Strategy::Full)?;
    if !verdict.expansive {
        return Err(Error::NotExpansive {
            witness: verdict.witness,
        });
    }
    let (f, n) = degree_for_bounds(f)?;

    let a = bound_a(&f)?;
    let az = bound_az(&f)?;
    let height = bound_height(&f)?;
    let length = bound_length(&f)?;

    let real_candidates = [
        (BoundFamily::A, &a.real),
        (BoundFamily::AZ, &az.real),
        (BoundFamily::H, &height.real),
        (BoundFamily::L, &length.real),
    ];
    let (best_real, best_real_value) = real_candidates
        .into_iter()
        .reduce(|best, cand| if cand.1 < best.1 { cand } else { best })
        .unwrap();

    let complex_candidates = [
        (BoundFamily::A, &a.complex),
        (BoundFamily::AZ, &az.complex),
        (BoundFamily::H, &height.complex),
        (BoundFamily::L, &length.complex),
    ];
    let best_complex_pair = complex_candidates
        .into_iter()
        .filter_map(|(fam, v)| v.as_ref().map(|v| (fam, v)))
        .reduce(|best, cand| if cand.1 < best.1 { cand } else { best });

    let implied_gap_real = best_real_value.recip();
    let best_complex = best_complex_pair.map(|(fam, _)| fam);
    let implied_gap_complex =
        best_complex_pair.map(|(_, v)| Rational::from_integer(v.clone()).recip());
    let worst_column = match best_complex_pair {
        Some((_, v)) => {
            let complex_value = Rational::from_integer(v.clone());
            if complex_value > *best_real_value {
                complex_value
            } else {
                best_real_value.clone()
            }
        }
        None => best_real_value.clone(),
    };
    let implied_gap_any = worst_column.recip();

    Ok(GapBoundReport {
        n,
        a,
        az,
        height,
        length,
        best_real,
        best_complex,
        implied_gap_real,
        implied_gap_complex,
        implied_gap_any,
    })
}

/// Right-hand side of the Liouville inequality `1/|g(α)| <= L(g)^(n-1) ·
/// M(f)^(deg g)` for a root `α` of the expansive polynomial `f` that is not
/// a root of `g`; expansivity makes `M(f) = |a_0|` exact.
pub fn liouville_rhs(query: &LiouvilleQuery) -> Result<BigInt> {
    if query.g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (f, n) = degree_for_bounds(&query.f)?;
    let g = query.g.trimmed();
    let g_length = g.measures()?.length;
    let a0 = f.constant().abs();
    Ok(g_length.pow((n - 1) as u32) * a0.pow(g.degree() as u32))
}

/// Lossy conversion for comparisons against floating-point oracle values.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}
