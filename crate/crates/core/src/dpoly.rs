//! Symbolic determinant polynomials.
//!
//! Replacing every coefficient `a_j` by `a_j x^j` inside the determinant
//! `D_k^±(f)` yields a polynomial `D̃_k^±(f)(x)` whose value at a point `s`
//! decides whether all roots of `f` lie beyond radius `s`. For `k = n-1`
//! with the minus sign the polynomial has only even powers, and halving the
//! exponents produces the pair-product polynomial whose roots are the
//! products `α_i α_j` (`i < j`) of roots of `f`. The same multiset (over all
//! ordered pairs) is reachable independently through a resultant-style
//! `2n x 2n` determinant; both routes are exposed so they can be checked
//! against each other.
//!
//! Symbolic determinants are computed by evaluate-and-interpolate: exact
//! integer determinants at small integer nodes followed by exact rational
//! Lagrange interpolation. Degree bounds are known a priori (`kn` and `n²`),
//! and the result is provably integral, which the interpolation asserts.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expansivity::{build_d_matrix, DMatrixSpec, DSign};
use crate::linalg::bareiss_determinant;
use crate::poly::IntPolynomial;

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// ascending powers, trailing zeros trimmed (the zero polynomial is `[0]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicPoly {
    coeffs: Vec<BigInt>,
}

impl SymbolicPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        SymbolicPoly { coeffs }
    }

    pub fn zero() -> Self {
        SymbolicPoly {
            coeffs: vec![BigInt::zero()],
        }
    }

    pub fn one() -> Self {
        SymbolicPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn constant(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn evaluate_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn neg(&self) -> SymbolicPoly {
        SymbolicPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &SymbolicPoly) -> SymbolicPoly {
        if self.is_zero() || other.is_zero() {
            return SymbolicPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SymbolicPoly::new(out)
    }

    /// Substitute `x -> x^2`: spreads coefficient `i` to position `2i`.
    pub fn substitute_square(&self) -> SymbolicPoly {
        let mut out = vec![BigInt::zero(); 2 * self.coeffs.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[2 * i] = c.clone();
        }
        SymbolicPoly::new(out)
    }

    /// Substitute `x -> -x`: negates odd coefficients.
    pub fn negate_argument(&self) -> SymbolicPoly {
        SymbolicPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }
}

impl From<&IntPolynomial> for SymbolicPoly {
    fn from(f: &IntPolynomial) -> Self {
        SymbolicPoly::new(f.coeffs().to_vec())
    }
}

/// Default interpolation nodes `0, 1, -1, 2, -2, ...`; zero first, since the
/// value there is the constant term and doubles as a consistency anchor.
pub fn default_nodes(count: usize) -> Vec<BigInt> {
    let mut nodes = Vec::with_capacity(count);
    let mut magnitude = 1i64;
    if count > 0 {
        nodes.push(BigInt::zero());
    }
    while nodes.len() < count {
        nodes.push(BigInt::from(magnitude));
        if nodes.len() < count {
            nodes.push(BigInt::from(-magnitude));
        }
        magnitude += 1;
    }
    nodes
}

/// Exact interpolation through `(nodes[i], values[i])`; the result must be
/// an integer polynomial or the routine reports an internal error.
fn interpolate_integer(nodes: &[BigInt], values: &[BigInt]) -> Result<Vec<BigInt>> {
    let m = nodes.len();
    assert_eq!(m, values.len());
    assert!(m > 0);

    // master(x) = prod (x - node_i), ascending coefficients.
    let mut master = vec![BigInt::one()];
    for node in nodes {
        let mut next = vec![BigInt::zero(); master.len() + 1];
        for (t, c) in master.iter().enumerate() {
            next[t + 1] += c;
            next[t] -= node * c;
        }
        master = next;
    }

    let mut acc = vec![BigRational::zero(); m];
    for (j, node) in nodes.iter().enumerate() {
        // basis_j = master / (x - node_j) by synthetic division.
        let mut basis = vec![BigInt::zero(); m];
        let mut carry = master[m].clone();
        for t in (0..m).rev() {
            basis[t] = carry.clone();
            carry = &master[t] + node * &carry;
        }
        if !carry.is_zero() {
            return Err(Error::Internal(
                "interpolation synthetic division left a remainder".to_string(),
            ));
        }
        // denominator = basis_j evaluated at node_j.
        let mut denom = BigInt::zero();
        for c in basis.iter().rev() {
            denom = denom * node + c;
        }
        if denom.is_zero() {
            return Err(Error::Internal("duplicate interpolation node".to_string()));
        }
        let weight = BigRational::new(values[j].clone(), denom);
        for (t, b) in basis.iter().enumerate() {
            if !b.is_zero() {
                acc[t] += &weight * BigRational::from_integer(b.clone());
            }
        }
    }

    acc.into_iter()
        .map(|c| {
            if c.denom().is_one() {
                Ok(c.numer().clone())
            } else {
                Err(Error::Internal(
                    "interpolation produced a non-integer coefficient".to_string(),
                ))
            }
        })
        .collect()
}

fn scaled_coefficients(f: &IntPolynomial, n: usize, y: &BigInt) -> IntPolynomial {
    let mut power = BigInt::one();
    let coeffs = (0..=n)
        .map(|j| {
            let c = f.coeff(j as isize) * &power;
            power *= y;
            c
        })
        .collect();
    IntPolynomial::from_raw(coeffs).expect("n + 1 >= 1")
}

/// `D̃_k^±(f)(x)`: the determinant of the selected matrix with every `a_j`
/// replaced by `a_j x^j`. Degree is at most `k·n`.
pub fn d_polynomial(f: &IntPolynomial, spec: &DMatrixSpec) -> Result<SymbolicPoly> {
    let nodes = default_nodes(spec.k * spec.n + 1);
    d_polynomial_with_nodes(f, spec, &nodes)
}

/// Same as [`d_polynomial`] but with caller-chosen distinct integer nodes
/// (at least `k·n + 1` of them); the result must not depend on the choice.
pub fn d_polynomial_with_nodes(
    f: &IntPolynomial,
    spec: &DMatrixSpec,
    nodes: &[BigInt],
) -> Result<SymbolicPoly> {
    if spec.k < 1 || spec.k > spec.n {
        return Err(Error::IndexOutOfRange {
            k: spec.k,
            n: spec.n,
        });
    }
    let needed = spec.k * spec.n + 1;
    if nodes.len() < needed {
        return Err(Error::Internal(format!(
            "need {needed} interpolation nodes, got {}",
            nodes.len()
        )));
    }
    let nodes = &nodes[..needed];
    let values = nodes
        .iter()
        .map(|y| {
            let scaled = scaled_coefficients(f, spec.n, y);
            let matrix = build_d_matrix(&scaled, spec)?;
            Ok(bareiss_determinant(&matrix).0)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymbolicPoly::new(interpolate_integer(nodes, &values)?))
}

/// Polynomial of degree `C(n,2)` whose roots are the products `α_i α_j`
/// over unordered root pairs `i < j` of `f`.
///
/// Obtained from `D̃_(n-1)^-(f)` by halving exponents; that polynomial is
/// guaranteed to contain only even powers, and a violation aborts with an
/// internal error rather than producing a wrong answer.
pub fn pair_product_polynomial(f: &IntPolynomial) -> Result<SymbolicPoly> {
    let f = f.trimmed();
    let n = f.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { needed: 2, got: n });
    }
    let spec = DMatrixSpec::new(n - 1, DSign::Minus, n)?;
    let even = d_polynomial(&f, &spec)?;
    let mut halved = Vec::with_capacity(even.degree() / 2 + 1);
    for (i, c) in even.coeffs().iter().enumerate() {
        if i % 2 == 0 {
            halved.push(c.clone());
        } else if !c.is_zero() {
            return Err(Error::Internal(format!(
                "odd-power coefficient {c} at x^{i} in an even-only determinant polynomial"
            )));
        }
    }
    Ok(SymbolicPoly::new(halved))
}

/// The degree-`n²` polynomial `F(x) = a_n^(2n) · prod_(i,j) (x - α_i α_j)`
/// over all ordered root pairs, computed as a resultant-style `2n x 2n`
/// determinant with polynomial entries, evaluated at integer nodes and
/// interpolated exactly. Independent of [`pair_product_polynomial`], which
/// makes the two usable as mutual cross-checks.
pub fn resultant_pair_product(f: &IntPolynomial) -> Result<SymbolicPoly> {
    let f = f.trimmed();
    let n = f.degree();
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let nodes = default_nodes(n * n + 1);
    let dim = 2 * n;
    let values = nodes
        .iter()
        .map(|x0| {
            // Left block columns carry a_(i-j) x^(i-j); right block columns
            // carry plain a_(j-i). The determinant equals (-1)^n F(x).
            let mut powers = Vec::with_capacity(n + 1);
            powers.push(BigInt::one());
            for _ in 0..n {
                powers.push(powers.last().unwrap() * x0);
            }
            let mut entries = Vec::with_capacity(dim * dim);
            for i in 1..=dim as isize {
                for j in 1..=dim as isize {
                    let entry = if j <= n as isize {
                        let t = i - j;
                        if (0..=n as isize).contains(&t) {
                            f.coeff(t) * &powers[t as usize]
                        } else {
                            BigInt::zero()
                        }
                    } else {
                        let t = j - i;
                        if (0..=n as isize).contains(&t) {
                            f.coeff(t)
                        } else {
                            BigInt::zero()
                        }
                    };
                    entries.push(entry);
                }
            }
            let matrix = crate::linalg::ExactMatrix::new(dim, entries)?;
            let det = bareiss_determinant(&matrix).0;
            Ok(if n % 2 == 1 { -det } else { det })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymbolicPoly::new(interpolate_integer(&nodes, &values)?))
}

/// Largest degree [`term_count`] will expand; the factorial growth makes
/// bigger inputs pointless.
pub const TERM_COUNT_MAX_DEGREE: usize = 8;

/// Known expansion term counts for degrees 1..=5; used to label which of
/// the two counting conventions a report reproduces.
pub const SMALL_DEGREE_TERM_COUNTS: [u128; 5] = [1, 2, 4, 12, 40];

/// Term statistics for the fully expanded determinant `D_(n-1)^-` over the
/// formal coefficients `a_0..a_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermCountReport {
    pub n: usize,
    /// Signed products before combining: every binomial entry expanded,
    /// structurally-zero entries dropped.
    pub raw_terms: u128,
    /// Monomials with a nonzero coefficient after combining like terms.
    pub collected_terms: u128,
}

impl TermCountReport {
    /// Which convention matches the published counts, when `n <= 5`.
    pub fn reference_match(&self) -> Option<&'static str> {
        let reference = *SMALL_DEGREE_TERM_COUNTS.get(self.n - 1)?;
        Some(
            match (
                self.raw_terms == reference,
                self.collected_terms == reference,
            ) {
                (true, true) => "both",
                (true, false) => "raw",
                (false, true) => "collected",
                (false, false) => "neither",
            },
        )
    }
}

/// Expand `D_(n-1)^-` symbolically over formal indeterminates `a_0..a_n` and
/// count its terms, raw and collected.
pub fn term_count(n: usize) -> Result<TermCountReport> {
    if !(1..=TERM_COUNT_MAX_DEGREE).contains(&n) {
        return Err(Error::TermCountRange {
            n,
            max: TERM_COUNT_MAX_DEGREE,
        });
    }
    let k = n - 1;

    // entry_terms[i][j] lists (sign, coefficient index) for the in-range
    // parts of a_(j-i) - a_(i+j), with 1-based i, j.
    let mut entry_terms: Vec<Vec<Vec<(i64, usize)>>> = vec![vec![Vec::new(); k]; k];
    for i in 1..=k as isize {
        for j in 1..=k as isize {
            let mut terms = Vec::new();
            let up = j - i;
            if (0..=n as isize).contains(&up) {
                terms.push((1i64, up as usize));
            }
            let down = i + j;
            if (0..=n as isize).contains(&down) {
                terms.push((-1i64, down as usize));
            }
            entry_terms[(i - 1) as usize][(j - 1) as usize] = terms;
        }
    }

    let mut raw: u128 = 0;
    let mut collected: HashMap<Vec<u8>, i64> = HashMap::new();

    // Iterate permutations with parity via Heap's algorithm.
    let mut perm: Vec<usize> = (0..k).collect();
    let mut counters = vec![0usize; k];
    let mut parity = 1i64;
    let mut expand = |perm: &[usize], parity: i64| {
        // Depth-first product over rows of the chosen entries.
        fn go(
            rows: &[Vec<Vec<(i64, usize)>>],
            perm: &[usize],
            row: usize,
            sign: i64,
            exps: &mut Vec<u8>,
            raw: &mut u128,
            collected: &mut HashMap<Vec<u8>, i64>,
        ) {
            if row == perm.len() {
                *raw += 1;
                *collected.entry(exps.clone()).or_insert(0) += sign;
                return;
            }
            for &(s, idx) in &rows[row][perm[row]] {
                exps[idx] += 1;
                go(rows, perm, row + 1, sign * s, exps, raw, collected);
                exps[idx] -= 1;
            }
        }
        let mut exps = vec![0u8; n + 1];
        go(
            &entry_terms,
            perm,
            0,
            parity,
            &mut exps,
            &mut raw,
            &mut collected,
        );
    };

    expand(&perm, parity);
    let mut i = 0;
    while i < k {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            parity = -parity;
            expand(&perm, parity);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }

    let collected_terms = collected.values().filter(|v| **v != 0).count() as u128;
    Ok(TermCountReport {
        n,
        raw_terms: raw,
        collected_terms,
    })
}
