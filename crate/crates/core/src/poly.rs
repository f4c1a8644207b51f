//! Integer polynomials with exact arithmetic.
//!
//! Coefficients are stored ascending: index `i` holds the coefficient of
//! `x^i`, so `[3, 0, -1]` is `3 - x^2`. The stored length carries the
//! *pseudo-degree*: the Schur transform drops exactly one stored slot per
//! step even when the leading coefficient of the result happens to be zero.
//! [`IntPolynomial::new`] and [`IntPolynomial::parse`] produce the canonical
//! view (nonzero top coefficient unless the polynomial is zero);
//! [`IntPolynomial::from_raw`] preserves the stored length as given.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number; always kept in lowest terms with positive
/// denominator, which `BigRational` guarantees on construction.
pub type Rational = BigRational;

/// Parse a rational from `"p/q"` or a plain integer string.
pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| Error::Parse {
        input: s.to_string(),
        reason: e.to_string(),
    })
}

/// Split a comma- or whitespace-separated list into integers, order kept.
pub fn parse_coefficient_list(input: &str) -> Result<Vec<BigInt>> {
    let parts: Vec<&str> = input
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .collect();
    if parts.is_empty() {
        return Err(Error::Parse {
            input: input.to_string(),
            reason: "no coefficients found".to_string(),
        });
    }
    parts
        .iter()
        .map(|p| {
            BigInt::from_str(p).map_err(|e| Error::Parse {
                input: input.to_string(),
                reason: format!("bad integer {p:?}: {e}"),
            })
        })
        .collect()
}

/// A univariate polynomial with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// What [`IntPolynomial::normalize_sign`] did to the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignNormalization {
    /// Constant term was already positive.
    Unchanged,
    /// Constant term was negative; the whole polynomial was negated.
    Negated,
    /// Constant term is zero: the polynomial has a root at 0 and cannot be
    /// expansive. Returned unchanged; callers treat this as a verdict.
    ZeroConstant,
}

/// Coefficient-size measures of a polynomial.
///
/// `mahler_if_expansive` is `|a_0|`, which equals the Mahler measure exactly
/// when every root lies outside the unit circle; it is meaningless otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measures {
    pub height: BigInt,
    pub length: BigInt,
    pub mahler_if_expansive: BigInt,
}

impl IntPolynomial {
    /// Canonical constructor: trims trailing zero coefficients (keeping at
    /// least one entry). Errors on an empty sequence.
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Ok(IntPolynomial { coeffs })
    }

    /// Keeps the stored length exactly as given (pseudo-degree view).
    pub fn from_raw(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        Ok(IntPolynomial { coeffs })
    }

    /// Convenience constructor from machine integers; canonicalizes.
    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Parse a comma- or whitespace-separated ascending coefficient list,
    /// e.g. `"3,0,-1"` for `3 - x^2`.
    pub fn parse(input: &str) -> Result<Self> {
        Self::new(parse_coefficient_list(input)?)
    }

    /// Stored degree: `len - 1`. Equals the true degree in the canonical
    /// view and the pseudo-degree otherwise.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, with the convention `a_i = 0` outside `0..=n`.
    pub fn coeff(&self, i: isize) -> BigInt {
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// Constant term `a_0`.
    pub fn constant(&self) -> &BigInt {
        &self.coeffs[0]
    }

    /// Stored top coefficient (may be zero in the pseudo-degree view).
    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Canonical view of this polynomial (trailing zeros trimmed).
    pub fn trimmed(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.clone()).expect("non-empty by invariant")
    }

    /// Bit length of the largest coefficient magnitude (0 for the zero
    /// polynomial).
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    fn negated(&self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Flip the sign of the whole polynomial if needed so the constant term
    /// is positive. A zero constant term is reported via
    /// [`SignNormalization::ZeroConstant`] instead of an error: it already
    /// decides non-expansivity.
    pub fn normalize_sign(&self) -> Result<(IntPolynomial, SignNormalization)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            Ok((self.clone(), SignNormalization::ZeroConstant))
        } else if a0.is_negative() {
            Ok((self.negated(), SignNormalization::Negated))
        } else {
            Ok((self.clone(), SignNormalization::Unchanged))
        }
    }

    /// Exact value of `Σ a_i x^i` at a rational point.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Exact value at an integer point.
    pub fn evaluate_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Height, length and the `|a_0|` stand-in for the Mahler measure.
    pub fn measures(&self) -> Result<Measures> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let height = self.coeffs.iter().map(Signed::abs).max().unwrap();
        let length = self.coeffs.iter().map(Signed::abs).sum();
        Ok(Measures {
            height,
            length,
            mahler_if_expansive: self.coeffs[0].abs(),
        })
    }

    /// Reverse the coefficient sequence at fixed stored length.
    pub fn reversed(&self) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPolynomial { coeffs }
    }

    /// One step of the Schur chain: `b_k = a_0 a_k - a_n a_{n-k}` for
    /// `k = 0..n-1`, where `n` is the stored (pseudo-)degree. The top slot
    /// is dropped since `b_n = 0`, so the stored length shrinks by exactly
    /// one.
    ///
    /// Panics if the stored length is 1 (pseudo-degree 0 has no transform).
    pub fn schur_transform(&self) -> IntPolynomial {
        let n = self.degree();
        assert!(n >= 1, "Schur transform needs pseudo-degree >= 1");
        let a0 = &self.coeffs[0];
        let an = &self.coeffs[n];
        let coeffs = (0..n)
            .map(|k| a0 * &self.coeffs[k] - an * &self.coeffs[n - k])
            .collect();
        IntPolynomial { coeffs }
    }

    /// For `s = p/q` in lowest terms, return `q^n * f(s x)`: the integer
    /// polynomial with coefficients `a_j p^j q^(n-j)`, whose roots are the
    /// roots of `f` divided by `s`.
    pub fn scale_argument(&self, s: &Rational) -> Result<IntPolynomial> {
        if s.is_zero() {
            return Err(Error::ZeroScale);
        }
        let n = self.degree();
        let p = s.numer();
        let q = s.denom();
        // p^j * q^(n-j) built incrementally from both ends.
        let mut q_pow = vec![BigInt::one(); n + 1];
        for j in (0..n).rev() {
            q_pow[j] = &q_pow[j + 1] * q;
        }
        let mut p_pow = BigInt::one();
        let coeffs = (0..=n)
            .map(|j| {
                let c = &self.coeffs[j] * &p_pow * &q_pow[j];
                p_pow *= p;
                c
            })
            .collect();
        Ok(IntPolynomial { coeffs })
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
