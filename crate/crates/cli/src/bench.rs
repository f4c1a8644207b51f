//! Coefficient-growth benchmark: the Schur chain against fraction-free
//! determinant evaluation.
//!
//! The Schur transform multiplies pairs of coefficients, which roughly
//! doubles coefficient bit lengths per step and compounds exponentially.
//! Bareiss elimination keeps every intermediate entry the size of a minor
//! of the small input matrix. This harness measures both on the same random
//! polynomials, with bit lengths as the primary (machine-independent)
//! metric and wall time as a secondary one.

use std::time::Instant;

use num_bigint::{BigInt, RandBigInt};
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use expansive_core::expansivity::{build_d_matrix, DMatrixSpec, DSign};
use expansive_core::linalg::{bareiss_determinant, hadamard_bound};
use expansive_core::poly::IntPolynomial;
use expansive_core::{Error, Result};

/// Growth measurements for one benchmark configuration.
#[derive(Debug, Clone)]
pub struct GrowthProfile {
    pub degree: usize,
    pub height: BigInt,
    pub trials: u32,
    pub seed: u64,
    /// Per trial: max coefficient bit length at each Schur chain step
    /// (index 0 is the input polynomial; the chain has `degree` steps).
    pub schur_bits: Vec<Vec<u64>>,
    /// Per-step medians across trials.
    pub schur_median_bits: Vec<f64>,
    /// Per trial: for each k = 1..degree-1, the max intermediate entry bit
    /// length over the eliminations of both determinant signs.
    pub bareiss_bits: Vec<Vec<u64>>,
    pub bareiss_median_bits: Vec<f64>,
    /// Max over every trace entry of `bits - (hadamard_bits + degree)`;
    /// non-positive means every intermediate stayed within the minor-size
    /// budget.
    pub max_trace_excess: i64,
    pub schur_wall_ms: f64,
    pub bareiss_wall_ms: f64,
}

fn median(values: &mut [u64]) -> f64 {
    values.sort_unstable();
    let m = values.len();
    if m % 2 == 1 {
        values[m / 2] as f64
    } else {
        (values[m / 2 - 1] as f64 + values[m / 2] as f64) / 2.0
    }
}

fn random_polynomial(rng: &mut ChaCha8Rng, degree: usize, height: &BigInt) -> IntPolynomial {
    let lo = -height;
    let hi = height + BigInt::from(1);
    let coeffs: Vec<BigInt> = (0..=degree)
        .map(|i| loop {
            let c = rng.gen_bigint_range(&lo, &hi);
            // Keep the degree exact and the constant term usable.
            if !(c.is_zero() && (i == 0 || i == degree)) {
                break c;
            }
        })
        .collect();
    IntPolynomial::from_raw(coeffs).expect("degree + 1 coefficients")
}

/// Run the growth benchmark on `trials` random polynomials of the given
/// degree with coefficients up to `height` in magnitude. Deterministic for
/// a fixed seed.
pub fn bench_growth(
    degree: usize,
    height: &BigInt,
    trials: u32,
    seed: u64,
) -> Result<GrowthProfile> {
    if degree < 2 {
        return Err(Error::DegreeTooSmall {
            needed: 2,
            got: degree,
        });
    }
    if trials == 0 || !height.is_positive() {
        return Err(Error::Parse {
            input: format!("trials={trials}, height={height}"),
            reason: "need trials >= 1 and height >= 1".to_string(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let polys: Vec<IntPolynomial> = (0..trials)
        .map(|_| random_polynomial(&mut rng, degree, height))
        .collect();

    let mut schur_bits = Vec::with_capacity(polys.len());
    let schur_start = Instant::now();
    for f in &polys {
        let mut steps = Vec::with_capacity(degree + 1);
        let mut current = f.clone();
        steps.push(current.max_coeff_bits());
        while current.degree() >= 1 {
            current = current.schur_transform();
            steps.push(current.max_coeff_bits());
        }
        schur_bits.push(steps);
    }
    let schur_wall_ms = schur_start.elapsed().as_secs_f64() * 1e3;

    let mut bareiss_bits = Vec::with_capacity(polys.len());
    let mut max_trace_excess = i64::MIN;
    let bareiss_start = Instant::now();
    for f in &polys {
        let (g, _) = f.normalize_sign()?;
        let n = g.degree();
        let mut per_k = Vec::with_capacity(n - 1);
        for k in 1..n {
            let mut k_max = 0u64;
            for sign in [DSign::Plus, DSign::Minus] {
                let spec = DMatrixSpec::new(k, sign, n)?;
                let matrix = build_d_matrix(&g, &spec)?;
                let budget = hadamard_bound(&matrix).bits() as i64 + n as i64;
                let (_, trace) = bareiss_determinant(&matrix);
                for &bits in &trace.max_entry_bits {
                    k_max = k_max.max(bits);
                    max_trace_excess = max_trace_excess.max(bits as i64 - budget);
                }
            }
            per_k.push(k_max);
        }
        bareiss_bits.push(per_k);
    }
    let bareiss_wall_ms = bareiss_start.elapsed().as_secs_f64() * 1e3;

    let schur_median_bits = (0..=degree)
        .map(|step| median(&mut schur_bits.iter().map(|t| t[step]).collect::<Vec<_>>()))
        .collect();
    let bareiss_median_bits = (0..degree - 1)
        .map(|i| median(&mut bareiss_bits.iter().map(|t| t[i]).collect::<Vec<_>>()))
        .collect();

    Ok(GrowthProfile {
        degree,
        height: height.clone(),
        trials,
        seed,
        schur_bits,
        schur_median_bits,
        bareiss_bits,
        bareiss_median_bits,
        max_trace_excess,
        schur_wall_ms,
        bareiss_wall_ms,
    })
}

/// Deterministic CSV (schema `growth-csv-v1`): wall times are excluded so a
/// fixed seed reproduces the output byte for byte.
pub fn growth_csv(profile: &GrowthProfile) -> String {
    let mut out = String::from("trial,metric,step,value\n");
    for (t, steps) in profile.schur_bits.iter().enumerate() {
        for (s, bits) in steps.iter().enumerate() {
            out.push_str(&format!("{t},schur_bits,{s},{bits}\n"));
        }
    }
    for (t, ks) in profile.bareiss_bits.iter().enumerate() {
        for (i, bits) in ks.iter().enumerate() {
            out.push_str(&format!("{t},bareiss_bits,{},{bits}\n", i + 1));
        }
    }
    for (s, bits) in profile.schur_median_bits.iter().enumerate() {
        out.push_str(&format!("median,schur_bits,{s},{bits}\n"));
    }
    for (i, bits) in profile.bareiss_median_bits.iter().enumerate() {
        out.push_str(&format!("median,bareiss_bits,{},{bits}\n", i + 1));
    }
    out
}
