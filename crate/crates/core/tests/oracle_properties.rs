//! Reconstruction and symmetry properties of the numeric root finder.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use expansive_core::oracle::find_roots_numeric;
use expansive_core::IntPolynomial;

fn random_poly(
    rng: &mut ChaCha8Rng,
    degrees: std::ops::RangeInclusive<usize>,
    height: i64,
) -> IntPolynomial {
    let n = rng.gen_range(degrees);
    loop {
        let coeffs: Vec<i64> = (0..=n).map(|_| rng.gen_range(-height..=height)).collect();
        if coeffs[n] != 0 {
            return IntPolynomial::from_i64(&coeffs).unwrap();
        }
    }
}

#[test]
fn reconstruction_from_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xE001);
    for _ in 0..150 {
        let f = random_poly(&mut rng, 1..=10, 100);
        let n = f.degree();
        let roots = find_roots_numeric(&f).unwrap().roots;
        assert_eq!(roots.len(), n);

        // Re-expand a_n * prod (x - α_i) and compare coefficients.
        let lead = f.leading().to_f64().unwrap();
        let mut expanded = vec![Complex64::new(0.0, 0.0); n + 1];
        expanded[0] = Complex64::new(lead, 0.0);
        for (idx, root) in roots.iter().enumerate() {
            for i in (0..=idx).rev() {
                let shifted = expanded[i];
                expanded[i + 1] += shifted;
                expanded[i] = -shifted * root;
            }
        }

        let scale: f64 = f
            .coeffs()
            .iter()
            .map(|c| c.to_f64().unwrap().abs())
            .fold(1.0, f64::max);
        for (i, c) in f.coeffs().iter().enumerate() {
            let got = expanded[i];
            let want = c.to_f64().unwrap();
            assert!(
                (got.re - want).abs() <= 1e-8 * scale && got.im.abs() <= 1e-8 * scale,
                "coefficient {i} off for {f}: got {got}, want {want}"
            );
        }
    }
}

#[test]
fn conjugate_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xE002);
    for _ in 0..200 {
        let f = random_poly(&mut rng, 1..=8, 50);
        let roots = find_roots_numeric(&f).unwrap().roots;
        let mut unmatched: Vec<Complex64> = roots.iter().copied().filter(|z| z.im != 0.0).collect();
        while let Some(z) = unmatched.pop() {
            let pos = unmatched
                .iter()
                .position(|w| *w == z.conj())
                .unwrap_or_else(|| panic!("no exact conjugate for {z} in roots of {f}"));
            unmatched.swap_remove(pos);
        }
    }
}

#[test]
fn residual_is_reported_and_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xE003);
    for _ in 0..50 {
        let f = random_poly(&mut rng, 1..=6, 20);
        let found = find_roots_numeric(&f).unwrap();
        assert!(found.max_residual.is_finite());
        // Conjugate snapping may cost a little accuracy over the raw
        // convergence target.
        assert!(
            found.max_residual <= 1e-9,
            "residual {} too large for {f}",
            found.max_residual
        );
    }
}
