//! Floating-point root finder used exclusively as an independent test
//! oracle.
//!
//! Simultaneous (Durand–Kerner) iteration with deterministic initial
//! guesses, a hard residual convergence target and loud failure. Verdicts
//! about the unit circle are error-aware: when the a-posteriori root error
//! estimate cannot separate a root from the circle the answer is
//! `Inconclusive` — the exact engines are always authoritative and floating
//! point never certifies a strict inequality.

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Relative residual each root must reach: `|f(z)| / (L(f)·max(1,|z|)^n)`.
pub const CONVERGENCE_RESIDUAL: f64 = 1e-12;

/// Hard cap on full update sweeps before the oracle fails loudly.
pub const MAX_SWEEPS: u32 = 10_000;

/// Fixed irrational angular offset for the initial guesses; keeps the
/// start configuration off coefficient symmetry axes and runs reproducible.
const ANGULAR_OFFSET: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// All complex roots of a polynomial plus the worst relative residual.
#[derive(Debug, Clone)]
pub struct NumericRoots {
    pub roots: Vec<Complex64>,
    pub max_residual: f64,
}

/// Three-valued numeric answer; `Inconclusive` defers to the exact engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumericVerdict {
    Expansive,
    NotExpansive,
    Inconclusive,
}

fn eval(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::zero();
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

fn to_f64_coeffs(f: &IntPolynomial) -> Result<Vec<f64>> {
    f.coeffs()
        .iter()
        .map(|c| {
            c.to_f64()
                .filter(|v| v.is_finite())
                .ok_or(Error::OracleOverflow)
        })
        .collect()
}

fn relative_residual(coeffs: &[f64], length: f64, z: Complex64) -> f64 {
    let n = coeffs.len() - 1;
    eval(coeffs, z).norm() / (length * z.norm().max(1.0).powi(n as i32))
}

/// Find all `n` roots by simultaneous iteration.
///
/// Initial guesses sit on a circle of radius `1 + H/|a_n|` (a root bound)
/// with a fixed angular offset. After convergence, near-real roots are
/// snapped to the real axis and the remaining ones are paired into exact
/// conjugates, which real coefficients guarantee is possible.
pub fn find_roots_numeric(f: &IntPolynomial) -> Result<NumericRoots> {
    let f = f.trimmed();
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.degree();
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let coeffs = to_f64_coeffs(&f)?;
    let length: f64 = coeffs.iter().map(|c| c.abs()).sum();
    let lead = coeffs[n];
    let height = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let radius = 1.0 + height / lead.abs();

    let mut z: Vec<Complex64> = (0..n)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * (j as f64) / (n as f64) + ANGULAR_OFFSET;
            radius * Complex64::new(angle.cos(), angle.sin())
        })
        .collect();

    let mut residual = f64::INFINITY;
    let mut converged = false;
    for sweep in 0..MAX_SWEEPS {
        residual = z.iter().fold(0.0f64, |m, &zj| {
            m.max(relative_residual(&coeffs, length, zj))
        });
        if residual <= CONVERGENCE_RESIDUAL {
            converged = true;
            break;
        }
        for j in 0..n {
            let mut denom = Complex64::new(lead, 0.0);
            for k in 0..n {
                if k != j {
                    denom *= z[j] - z[k];
                }
            }
            if denom.is_zero() || !denom.is_finite() {
                // Coincident guesses: nudge deterministically and retry on
                // the next sweep.
                let nudge = Complex64::new(1e-6, 1e-6) * (1.0 + z[j].norm()) * (j as f64 + 1.0);
                z[j] += nudge;
                continue;
            }
            let step = eval(&coeffs, z[j]) / denom;
            z[j] -= step;
            if !z[j].is_finite() {
                return Err(Error::OracleFailure {
                    sweeps: sweep,
                    residual: f64::NAN,
                });
            }
        }
    }
    if !converged {
        return Err(Error::OracleFailure {
            sweeps: MAX_SWEEPS,
            residual,
        });
    }

    enforce_conjugate_closure(&mut z);
    z.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let max_residual = z.iter().fold(0.0f64, |m, &zj| {
        m.max(relative_residual(&coeffs, length, zj))
    });
    Ok(NumericRoots {
        roots: z,
        max_residual,
    })
}

fn enforce_conjugate_closure(z: &mut [Complex64]) {
    const REAL_SNAP: f64 = 1e-7;
    for zj in z.iter_mut() {
        if zj.im.abs() <= REAL_SNAP * (1.0 + zj.norm()) {
            zj.im = 0.0;
        }
    }
    let n = z.len();
    let mut paired = vec![false; n];
    for j in 0..n {
        if paired[j] || z[j].im == 0.0 {
            continue;
        }
        let target = z[j].conj();
        let partner = (0..n)
            .filter(|&k| k != j && !paired[k] && z[k].im * z[j].im < 0.0)
            .min_by(|&a, &b| {
                (z[a] - target)
                    .norm()
                    .partial_cmp(&(z[b] - target).norm())
                    .unwrap()
            });
        if let Some(k) = partner {
            let mean = (z[j] + z[k].conj()) / 2.0;
            z[j] = mean;
            z[k] = mean.conj();
            paired[j] = true;
            paired[k] = true;
        }
    }
}

/// Per-root a-posteriori error estimates `n·|f(z)|/|f'(z)|`; infinite where
/// the derivative vanishes numerically (root clusters).
fn root_error_estimates(coeffs: &[f64], roots: &[Complex64]) -> Vec<f64> {
    let n = coeffs.len() - 1;
    let derivative: Vec<f64> = (1..=n).map(|i| coeffs[i] * i as f64).collect();
    roots
        .iter()
        .map(|&z| {
            let fp = eval(&derivative, z).norm();
            let fv = eval(coeffs, z).norm();
            let estimate = if fp > 0.0 {
                n as f64 * fv / fp
            } else {
                f64::INFINITY
            };
            estimate.max(1e-14 * (1.0 + z.norm()))
        })
        .collect()
}

/// Numeric expansivity check at the given certainty margin.
///
/// `Expansive` only when every root is provably (up to the error estimate)
/// farther than `1 + margin` from the origin; `NotExpansive` only when some
/// root provably sits below `1 - margin`.
pub fn numeric_expansive(f: &IntPolynomial, margin: f64) -> Result<NumericVerdict> {
    let trimmed = f.trimmed();
    if trimmed.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if trimmed.degree() == 0 {
        return Ok(NumericVerdict::Expansive);
    }
    let found = find_roots_numeric(&trimmed)?;
    let coeffs = to_f64_coeffs(&trimmed)?;
    let errors = root_error_estimates(&coeffs, &found.roots);

    let all_outside = found
        .roots
        .iter()
        .zip(&errors)
        .all(|(z, e)| z.norm() - e > 1.0 + margin);
    if all_outside {
        return Ok(NumericVerdict::Expansive);
    }
    let any_inside = found
        .roots
        .iter()
        .zip(&errors)
        .any(|(z, e)| z.norm() + e < 1.0 - margin);
    if any_inside {
        return Ok(NumericVerdict::NotExpansive);
    }
    Ok(NumericVerdict::Inconclusive)
}

/// `min |α_i| - 1` from the numeric roots. The caller is responsible for
/// having established expansivity with an exact engine.
pub fn numeric_gap(f: &IntPolynomial) -> Result<f64> {
    let found = find_roots_numeric(f)?;
    let min_norm = found
        .roots
        .iter()
        .map(|z| z.norm())
        .fold(f64::INFINITY, f64::min);
    Ok(min_norm - 1.0)
}
