//! Exhaustive census of expansive polynomials with a given degree and
//! constant term.
//!
//! The necessary coefficient bounds make the search space finite: the
//! leading coefficient satisfies `0 < |a_n| < a_0` and each interior
//! coefficient lies strictly inside `C(n-1,k-1)|a_n| + C(n-1,k)|a_0|`.
//! Every candidate in that box runs through the cheap filter and then the
//! exact determinant check. Only `a_0 > 0` is enumerated; negating a
//! polynomial does not move its roots, so the `a_0 < 0` half is redundant.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::expansivity::{check_d_conditions, coefficient_bound_filter, Strategy};
use crate::poly::IntPolynomial;

pub const DEFAULT_CANDIDATE_CAP: u64 = 20_000_000;

/// Search parameters: degree, positive constant term, optional extra height
/// cap on every coefficient, and a refusal threshold on the box size.
#[derive(Debug, Clone)]
pub struct EnumerationSpec {
    pub degree: usize,
    pub constant_term: BigInt,
    pub height_cap: Option<BigInt>,
    pub candidate_cap: u64,
}

impl EnumerationSpec {
    pub fn new(degree: usize, constant_term: BigInt) -> Result<Self> {
        let spec = EnumerationSpec {
            degree,
            constant_term,
            height_cap: None,
            candidate_cap: DEFAULT_CANDIDATE_CAP,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_height_cap(mut self, cap: BigInt) -> Self {
        self.height_cap = Some(cap);
        self
    }

    pub fn with_candidate_cap(mut self, cap: u64) -> Self {
        self.candidate_cap = cap;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.degree < 1 {
            return Err(Error::DegreeTooSmall {
                needed: 1,
                got: self.degree,
            });
        }
        if self.constant_term < BigInt::one() {
            return Err(Error::NonPositiveConstantTerm {
                got: self.constant_term.to_string(),
            });
        }
        Ok(())
    }

    /// Largest |a_n| to consider: below a_0 and within the height cap.
    fn max_leading_abs(&self) -> BigInt {
        let mut max_abs = &self.constant_term - BigInt::one();
        if let Some(cap) = &self.height_cap {
            if *cap < max_abs {
                max_abs = cap.clone();
            }
        }
        max_abs
    }
}

/// Census output: candidates examined, expansive hits, and the full sorted
/// list of expansive polynomials (lexicographic by coefficient tuple).
#[derive(Debug, Clone)]
pub struct CensusResult {
    pub total_checked: u64,
    pub expansive: u64,
    pub polynomials: Vec<IntPolynomial>,
}

/// Inclusive interior limits: coefficient k ranges over -limit..=limit.
fn interior_limits(
    n: usize,
    a0: &BigInt,
    an_abs: &BigInt,
    height_cap: Option<&BigInt>,
) -> Vec<BigInt> {
    (1..n)
        .map(|k| {
            // Strict bound B means |a_k| <= B - 1.
            let bound = binomial(BigInt::from(n - 1), BigInt::from(k - 1)) * an_abs
                + binomial(BigInt::from(n - 1), BigInt::from(k)) * a0;
            let mut limit = bound - BigInt::one();
            if let Some(cap) = height_cap {
                if *cap < limit {
                    limit = cap.clone();
                }
            }
            limit
        })
        .collect()
}

fn candidates_for_leading_abs(spec: &EnumerationSpec, an_abs: &BigInt) -> BigInt {
    let limits = interior_limits(
        spec.degree,
        &spec.constant_term,
        an_abs,
        spec.height_cap.as_ref(),
    );
    let mut per = BigInt::one();
    for limit in &limits {
        if limit.is_negative() {
            return BigInt::zero();
        }
        per *= BigInt::from(2) * limit + BigInt::one();
    }
    per
}

/// Box size, abandoning the count as soon as it exceeds the cap (the exact
/// value no longer matters for the refusal message once it is over).
fn box_size_capped(spec: &EnumerationSpec) -> BigInt {
    let max_abs = spec.max_leading_abs();
    if spec.degree == 1 {
        // One candidate per sign per magnitude.
        return BigInt::from(2) * max_abs;
    }
    // Every magnitude contributes at least one candidate per sign, so the
    // magnitude count alone can already overflow the cap.
    let lower = BigInt::from(2) * &max_abs;
    if lower.to_u64().is_none_or(|v| v > spec.candidate_cap) {
        return lower;
    }
    let cap = BigInt::from(spec.candidate_cap);
    let mut total = BigInt::zero();
    let mut magnitude = BigInt::one();
    while magnitude <= max_abs {
        total += BigInt::from(2) * candidates_for_leading_abs(spec, &magnitude);
        if total > cap {
            return total;
        }
        magnitude += 1;
    }
    total
}

/// Census restricted to one leading-coefficient value. Building block for
/// partitioned runs: results over distinct `a_n` merge disjointly and a
/// final sort reproduces the full census.
pub fn enumerate_for_leading(
    spec: &EnumerationSpec,
    leading: &BigInt,
) -> Result<(u64, Vec<IntPolynomial>)> {
    spec.validate()?;
    let n = spec.degree;
    let limits = interior_limits(
        n,
        &spec.constant_term,
        &leading.abs(),
        spec.height_cap.as_ref(),
    );
    if limits.iter().any(|l| l.is_negative()) {
        return Ok((0, Vec::new()));
    }
    let mut total = 0u64;
    let mut hits = Vec::new();
    // Odometer over the interior coefficients.
    let mut interior: Vec<BigInt> = limits.iter().map(|l| -l).collect();
    'sweep: loop {
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(spec.constant_term.clone());
        coeffs.extend(interior.iter().cloned());
        coeffs.push(leading.clone());
        let candidate = IntPolynomial::from_raw(coeffs)?;
        total += 1;
        if coefficient_bound_filter(&candidate)
            && check_d_conditions(&candidate, Strategy::Full)?.expansive
        {
            hits.push(candidate);
        }
        for pos in 0..interior.len() {
            if interior[pos] < limits[pos] {
                interior[pos] += 1;
                continue 'sweep;
            }
            interior[pos] = -&limits[pos];
        }
        break;
    }
    Ok((total, hits))
}

/// Run the full census for the given spec.
///
/// Refuses with a size estimate when the search box exceeds the candidate
/// cap. The output is deterministic and sorted regardless of how the work
/// over `a_n` values might be chunked.
pub fn enumerate_expansive(spec: &EnumerationSpec) -> Result<CensusResult> {
    spec.validate()?;
    let estimate = box_size_capped(spec);
    if estimate.to_u64().is_none_or(|e| e > spec.candidate_cap) {
        return Err(Error::BoxTooLarge {
            estimate: estimate.to_string(),
            cap: spec.candidate_cap,
        });
    }

    let mut total_checked = 0u64;
    let mut polynomials = Vec::new();
    let max_abs = spec.max_leading_abs();
    let mut magnitude = BigInt::one();
    while magnitude <= max_abs {
        for leading in [magnitude.clone(), -&magnitude] {
            let (count, hits) = enumerate_for_leading(spec, &leading)?;
            total_checked += count;
            polynomials.extend(hits);
        }
        magnitude += 1;
    }
    polynomials.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    Ok(CensusResult {
        total_checked,
        expansive: polynomials.len() as u64,
        polynomials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn census(degree: usize, a0: i64) -> CensusResult {
        let spec = EnumerationSpec::new(degree, BigInt::from(a0)).unwrap();
        enumerate_expansive(&spec).unwrap()
    }

    #[test]
    fn degree_one_examples() {
        let r = census(1, 2);
        assert_eq!(r.expansive, 2);
        let got: Vec<Vec<BigInt>> = r.polynomials.iter().map(|f| f.coeffs().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![BigInt::from(2), BigInt::from(-1)],
                vec![BigInt::from(2), BigInt::from(1)],
            ]
        );

        let r = census(1, 1);
        assert_eq!(r.expansive, 0);
        assert_eq!(r.total_checked, 0);
    }

    #[test]
    fn degree_two_census() {
        let r = census(2, 2);
        assert_eq!(r.expansive, 6);
        for f in &r.polynomials {
            assert!(check_d_conditions(f, Strategy::Full).unwrap().expansive);
            assert!(crate::expansivity::check_schur_cohn(f).unwrap().expansive);
        }
        // Sorted and duplicate-free.
        let mut sorted = r.polynomials.clone();
        sorted.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        sorted.dedup();
        assert_eq!(sorted.len(), r.polynomials.len());
        assert!(sorted
            .iter()
            .zip(&r.polynomials)
            .all(|(a, b)| a.coeffs() == b.coeffs()));
    }

    #[test]
    fn partition_by_leading_merges_to_full_run() {
        let spec = EnumerationSpec::new(2, BigInt::from(3)).unwrap();
        let full = enumerate_expansive(&spec).unwrap();

        // Scrambled chunk order: -2, 2, -1, 1.
        let mut total = 0u64;
        let mut merged = Vec::new();
        for leading in [-2i64, 2, -1, 1] {
            let (count, hits) = enumerate_for_leading(&spec, &BigInt::from(leading)).unwrap();
            total += count;
            merged.extend(hits);
        }
        merged.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));

        assert_eq!(total, full.total_checked);
        assert_eq!(merged.len(), full.polynomials.len());
        assert!(merged
            .iter()
            .zip(&full.polynomials)
            .all(|(a, b)| a.coeffs() == b.coeffs()));
    }

    #[test]
    fn cap_refusal_reports_estimate() {
        let spec = EnumerationSpec::new(4, BigInt::from(50))
            .unwrap()
            .with_candidate_cap(100);
        match enumerate_expansive(&spec) {
            Err(Error::BoxTooLarge { estimate, cap }) => {
                assert_eq!(cap, 100);
                assert!(estimate.parse::<f64>().unwrap() > 100.0);
            }
            other => panic!("expected BoxTooLarge, got {other:?}"),
        }
    }

    #[test]
    fn height_cap_restricts_box() {
        let unrestricted =
            enumerate_expansive(&EnumerationSpec::new(2, BigInt::from(3)).unwrap()).unwrap();
        let capped = enumerate_expansive(
            &EnumerationSpec::new(2, BigInt::from(3))
                .unwrap()
                .with_height_cap(BigInt::from(1)),
        )
        .unwrap();
        assert!(capped.total_checked < unrestricted.total_checked);
        // The cap clamps the free coefficients; a_0 itself is fixed by the
        // spec.
        assert!(capped
            .polynomials
            .iter()
            .all(|f| f.coeffs()[1..].iter().all(|c| c.abs() <= BigInt::one())));
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(EnumerationSpec::new(0, BigInt::from(2)).is_err());
        assert!(EnumerationSpec::new(2, BigInt::from(0)).is_err());
        assert!(EnumerationSpec::new(2, BigInt::from(-3)).is_err());
    }
}
