//! Acceptance suite. Each test covers one numbered criterion at its stated
//! tolerance and prints a single PASS line (run with `--nocapture` to see
//! them); a failure panics with the criterion number.

use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use expansive_cli::bench::bench_growth;
use expansive_core::bounds::{bound_a, bound_az, bound_height, bound_length, rational_to_f64};
use expansive_core::dpoly::{
    d_polynomial, pair_product_polynomial, resultant_pair_product, term_count, SymbolicPoly,
};
use expansive_core::enumerate::{enumerate_expansive, EnumerationSpec};
use expansive_core::expansivity::{
    certified_gap, check_d_conditions, check_schur_cohn, d_determinant, DMatrixSpec, DSign,
    Strategy,
};
use expansive_core::oracle::{find_roots_numeric, numeric_expansive, numeric_gap, NumericVerdict};
use expansive_core::poly::parse_rational;
use expansive_core::IntPolynomial;

const ORACLE_MARGIN: f64 = 1e-9;
const COMPARISON_SLACK: f64 = 1e-6;

fn pass(number: u32, what: &str) {
    println!("ACCEPTANCE {number}: PASS - {what}");
}

/// Sweep of criterion 1: every polynomial with 1 <= n <= 4, coefficients in
/// [-3, 3], a_0 > 0 and exact degree n.
fn sweep(mut visit: impl FnMut(&IntPolynomial)) {
    for n in 1..=4usize {
        let mut coeffs = vec![-3i64; n + 1];
        coeffs[0] = 1;
        loop {
            if coeffs[n] != 0 {
                visit(&IntPolynomial::from_i64(&coeffs).unwrap());
            }
            let mut pos = 0;
            loop {
                if pos > n {
                    break;
                }
                if coeffs[pos] < 3 {
                    coeffs[pos] += 1;
                    break;
                }
                coeffs[pos] = if pos == 0 { 1 } else { -3 };
                pos += 1;
            }
            if pos > n {
                break;
            }
        }
    }
}

fn random_poly(
    rng: &mut ChaCha8Rng,
    degrees: std::ops::RangeInclusive<usize>,
    height: i64,
) -> IntPolynomial {
    let n = rng.gen_range(degrees);
    loop {
        let coeffs: Vec<i64> = (0..=n).map(|_| rng.gen_range(-height..=height)).collect();
        if coeffs[n] != 0 && coeffs[0] != 0 {
            return IntPolynomial::from_i64(&coeffs).unwrap();
        }
    }
}

#[test]
fn acceptance_1_engine_agreement_sweep() {
    let started = Instant::now();
    let mut total = 0u64;
    let mut disagreements = 0u64;
    sweep(|f| {
        total += 1;
        let full = check_d_conditions(f, Strategy::Full).unwrap().expansive;
        let reduced = check_d_conditions(f, Strategy::Reduced).unwrap().expansive;
        let schur = check_schur_cohn(f).unwrap().expansive;
        let oracle = numeric_expansive(f, ORACLE_MARGIN).unwrap();
        let oracle_ok = match oracle {
            NumericVerdict::Expansive => full,
            NumericVerdict::NotExpansive => !full,
            NumericVerdict::Inconclusive => true,
        };
        if full != reduced || full != schur || !oracle_ok {
            disagreements += 1;
            eprintln!("disagreement on {f}: full={full} reduced={reduced} schur={schur} oracle={oracle:?}");
        }
    });
    assert_eq!(
        disagreements, 0,
        "criterion 1: {disagreements} disagreements"
    );
    assert!(total > 5_000, "criterion 1: sweep too small ({total})");
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 300,
        "criterion 1: sweep took {elapsed:?}, over the 5 minute budget"
    );
    pass(
        1,
        &format!("engine agreement on {total} polynomials in {elapsed:?}"),
    );
}

#[test]
fn acceptance_2_expansive_implies_positive_determinants() {
    let mut expansive = 0u64;
    let mut violations = 0u64;
    sweep(|f| {
        if !check_d_conditions(f, Strategy::Full).unwrap().expansive {
            return;
        }
        expansive += 1;
        let n = f.degree();
        for k in 1..=n {
            for sign in [DSign::Plus, DSign::Minus] {
                if !d_determinant(f, k, sign, n).unwrap().is_positive() {
                    violations += 1;
                    eprintln!("D_{k}^{} not positive for expansive {f}", sign.symbol());
                }
            }
        }
    });
    assert_eq!(violations, 0, "criterion 2: {violations} violations");
    pass(
        2,
        &format!("all determinants positive on {expansive} expansive polynomials"),
    );
}

#[test]
fn acceptance_3_exact_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC3);
    let mut failures = 0u64;
    for _ in 0..200 {
        let f = random_poly(&mut rng, 1..=5, 10);
        let n = f.degree();

        // Determinant factorization, exact integer equality.
        let lower = if n >= 2 {
            d_determinant(&f, n - 1, DSign::Minus, n).unwrap()
        } else {
            BigInt::one()
        };
        for (sign, x) in [(DSign::Plus, 1i64), (DSign::Minus, -1)] {
            let top = d_determinant(&f, n, sign, n).unwrap();
            if top != f.evaluate_int(&BigInt::from(x)) * &lower {
                failures += 1;
                eprintln!("integer factorization failed for {f}");
            }
        }

        // Polynomial factorizations, exact coefficient equality.
        let lhs = resultant_pair_product(&f).unwrap().substitute_square();
        let spec = |k, sign| DMatrixSpec::new(k, sign, n).unwrap();
        let plus = d_polynomial(&f, &spec(n, DSign::Plus)).unwrap();
        let minus = d_polynomial(&f, &spec(n, DSign::Minus)).unwrap();
        let mut rhs_a = plus.mul(&minus);
        if n % 2 == 1 {
            rhs_a = rhs_a.neg();
        }
        if lhs != rhs_a {
            failures += 1;
            eprintln!("determinant-pair factorization failed for {f}");
        }

        let fx = SymbolicPoly::from(&f);
        let lower_poly = if n >= 2 {
            d_polynomial(&f, &spec(n - 1, DSign::Minus)).unwrap()
        } else {
            SymbolicPoly::one()
        };
        let mut rhs_b = fx
            .mul(&fx.negate_argument())
            .mul(&lower_poly.mul(&lower_poly));
        if n % 2 == 1 {
            rhs_b = rhs_b.neg();
        }
        if lhs != rhs_b {
            failures += 1;
            eprintln!("root-pair factorization failed for {f}");
        }
    }
    assert_eq!(failures, 0, "criterion 3: {failures} identity failures");
    pass(3, "exact identities on 200 random polynomials");
}

#[test]
fn acceptance_4_structure_and_pair_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC4);
    // Structural checks over the same sampling scheme as criterion 3.
    for _ in 0..200 {
        let f = random_poly(&mut rng, 1..=5, 10);
        let n = f.degree();
        for k in 1..=n {
            for sign in [DSign::Plus, DSign::Minus] {
                let spec = DMatrixSpec::new(k, sign, n).unwrap();
                let d = d_polynomial(&f, &spec).unwrap();
                assert_eq!(
                    d.constant(),
                    &f.constant().pow(k as u32),
                    "criterion 4: constant term for {f}, k={k}"
                );
                assert_eq!(d.degree(), k * n, "criterion 4: degree for {f}, k={k}");
                assert_eq!(
                    d.leading().magnitude().clone(),
                    f.leading().magnitude().pow(k as u32),
                    "criterion 4: leading magnitude for {f}, k={k}"
                );
                if (n - k) % 2 == 1 {
                    for (i, c) in d.coeffs().iter().enumerate() {
                        assert!(
                            i % 2 == 0 || c.is_zero(),
                            "criterion 4: odd coefficient in D~_{k}^{} for {f}",
                            sign.symbol()
                        );
                    }
                }
            }
        }
    }

    // Pair-product roots against oracle products, well-separated instances.
    let mut accepted = 0;
    while accepted < 40 {
        let f = random_poly(&mut rng, 2..=6, 5);
        let roots = match find_roots_numeric(&f) {
            Ok(r) => r.roots,
            Err(_) => continue,
        };
        let mut products = Vec::new();
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                products.push(roots[i] * roots[j]);
            }
        }
        let separated = products.iter().enumerate().all(|(i, p)| {
            products[i + 1..]
                .iter()
                .all(|q| (p - q).norm() > 1e-3 * p.norm().max(1.0))
        });
        if !separated {
            continue;
        }
        accepted += 1;
        let pair_poly = pair_product_polynomial(&f).unwrap();
        let as_int = IntPolynomial::new(pair_poly.coeffs().to_vec()).unwrap();
        let mut got = find_roots_numeric(&as_int).unwrap().roots;
        assert_eq!(got.len(), products.len(), "criterion 4: degree for {f}");
        for want in &products {
            let scale = want.norm().max(1.0);
            let pos = got
                .iter()
                .position(|have| (have - want).norm() <= 1e-6 * scale)
                .unwrap_or_else(|| {
                    panic!("criterion 4: product {want} not found among roots for {f}")
                });
            got.swap_remove(pos);
        }
    }
    pass(4, "determinant polynomial structure and pair products");
}

fn eval_f64(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

#[test]
fn acceptance_5_gap_bound_soundness() {
    let mut expansive = 0u64;
    let mut roots_checked = 0u64;
    sweep(|f| {
        if !check_d_conditions(f, Strategy::Full).unwrap().expansive {
            return;
        }
        expansive += 1;

        let a = bound_a(f).unwrap();
        let az = bound_az(f).unwrap();
        let h = bound_height(f).unwrap();
        let l = bound_length(f).unwrap();

        // Strict dominance; a_n != 0 everywhere in the sweep.
        assert!(az.real < a.real, "criterion 5: AZ !< A (real) for {f}");
        if let (Some(azc), Some(ac)) = (&az.complex, &a.complex) {
            assert!(azc < ac, "criterion 5: AZ !< A (complex) for {f}");
        }

        let coeffs: Vec<f64> = f.coeffs().iter().map(|c| c.to_f64().unwrap()).collect();
        let n = coeffs.len() - 1;
        let deriv: Vec<f64> = (1..=n).map(|i| coeffs[i] * i as f64).collect();
        for z in find_roots_numeric(f).unwrap().roots {
            let reciprocal = 1.0 / (z.norm() - 1.0);
            // Propagate the oracle's own root error into the comparison
            // slack; the stated 1e-6 applies to exactly-located roots.
            let fp = eval_f64(&deriv, z).norm();
            let root_err = if fp > 0.0 {
                (n as f64) * eval_f64(&coeffs, z).norm() / fp
            } else {
                1e-7
            };
            let gap = z.norm() - 1.0;
            let slack = COMPARISON_SLACK + root_err.max(1e-14) / (gap * gap);
            let is_real = z.im == 0.0;
            let families = [("A", &a), ("AZ", &az), ("H", &h), ("L", &l)];
            for (name, pair) in families {
                let ok = if is_real {
                    reciprocal <= rational_to_f64(&pair.real) + slack
                } else {
                    let b = pair.complex.as_ref().expect("n >= 2 has complex column");
                    reciprocal <= b.to_f64().unwrap() + slack
                };
                assert!(
                    ok,
                    "criterion 5: family {name} unsound for {f} at root {z} (1/(|a|-1) = {reciprocal})"
                );
            }
            roots_checked += 1;
        }
    });
    pass(
        5,
        &format!("bounds sound on {roots_checked} roots of {expansive} expansive polynomials"),
    );
}

#[test]
fn acceptance_6_term_count_constants() {
    let reference: [u128; 5] = [1, 2, 4, 12, 40];
    for (i, &want) in reference.iter().enumerate() {
        let n = i + 1;
        let report = term_count(n).unwrap();
        assert!(
            report.raw_terms == want || report.collected_terms == want,
            "criterion 6: neither convention reproduces {want} at n={n} \
             (raw {}, collected {})",
            report.raw_terms,
            report.collected_terms
        );
    }
    let mut factorial: u128 = 1;
    for n in 1..=8usize {
        factorial *= n as u128;
        let report = term_count(n).unwrap();
        assert!(
            report.raw_terms <= factorial,
            "criterion 6: raw terms exceed n! at n={n}"
        );
    }
    pass(
        6,
        "term counts reproduce 1, 2, 4, 12, 40 and stay within n!",
    );
}

#[test]
fn acceptance_7_sharpness_family() {
    let tol = parse_rational("1/1000").unwrap();
    let tol_f = 1e-3;
    let mut ratios = Vec::new();
    for a in [2i64, 10, 100, 1000] {
        let f = IntPolynomial::from_i64(&[-a, 0, a - 1]).unwrap();
        let s_low = certified_gap(&f, &tol).unwrap();
        let certified = rational_to_f64(&s_low) - 1.0;
        let numeric = numeric_gap(&f).unwrap();
        assert!(
            (certified - numeric).abs() <= tol_f + 1e-12,
            "criterion 7: certified {certified} vs numeric {numeric} at A={a}"
        );
        let bound = rational_to_f64(&bound_a(&f).unwrap().real);
        ratios.push(bound * numeric);
    }
    let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
    let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
    assert!(
        min > 0.125 && max < 8.0 && max / min < 8.0,
        "criterion 7: ratio out of range: {ratios:?}"
    );
    pass(
        7,
        &format!("sharpness family ratios {ratios:?} within a factor of 8"),
    );
}

#[test]
fn acceptance_8_coefficient_growth() {
    let profile = bench_growth(12, &BigInt::from(1u64 << 32), 5, 0xACC8).unwrap();
    let medians = &profile.schur_median_bits;
    assert_eq!(medians.len(), 13);
    for step in 2..medians.len() {
        let ratio = medians[step] / medians[step - 1];
        assert!(
            ratio >= 1.5,
            "criterion 8: step {step} ratio {ratio} below 1.5 ({medians:?})"
        );
        assert!(
            medians[step] > medians[step - 1],
            "criterion 8: medians not strictly increasing at {step}"
        );
    }
    assert!(
        profile.max_trace_excess <= 0,
        "criterion 8: a Bareiss entry exceeded the Hadamard budget by {} bits",
        profile.max_trace_excess
    );
    pass(
        8,
        &format!(
            "Schur bits grow x{:.2} per step while Bareiss stays {} bits under budget",
            medians[12] / medians[11],
            -profile.max_trace_excess
        ),
    );
}

#[test]
fn acceptance_9_census_matches_brute_force() {
    // Degree 2, a_0 = 2, against brute force verified by the oracle.
    let spec = EnumerationSpec::new(2, BigInt::from(2)).unwrap();
    let census = enumerate_expansive(&spec).unwrap();
    let from_census: Vec<Vec<i64>> = census
        .polynomials
        .iter()
        .map(|f| f.coeffs().iter().map(|c| c.to_i64().unwrap()).collect())
        .collect();

    let mut brute = Vec::new();
    for a2 in [-1i64, 1] {
        for a1 in -6..=6i64 {
            let f = IntPolynomial::from_i64(&[2, a1, a2]).unwrap();
            if numeric_expansive(&f, ORACLE_MARGIN).unwrap() == NumericVerdict::Expansive {
                brute.push(vec![2, a1, a2]);
            }
        }
    }
    brute.sort();
    assert_eq!(
        from_census, brute,
        "criterion 9: census differs from brute force"
    );
    assert_eq!(census.expansive, 6, "criterion 9: expected 6 hits");

    let spec = EnumerationSpec::new(1, BigInt::from(2)).unwrap();
    let census = enumerate_expansive(&spec).unwrap();
    let got: Vec<Vec<i64>> = census
        .polynomials
        .iter()
        .map(|f| f.coeffs().iter().map(|c| c.to_i64().unwrap()).collect())
        .collect();
    assert_eq!(
        got,
        vec![vec![2, -1], vec![2, 1]],
        "criterion 9: degree 1 census"
    );
    pass(
        9,
        "census equals brute force (6 quadratics; 2±x at degree 1)",
    );
}
