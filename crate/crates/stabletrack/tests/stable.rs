use approx::{assert_abs_diff_eq, assert_relative_eq};
use proptest::prelude::*;

use stabletrack::{
    glued_pdf, moment_constant, rho0, sample_stable, stable_cdf, stable_logpdf_full,
    stable_logpdf_standard, stable_pdf, stable_pdf_quadrature, stable_tail_pdf,
    tail_coefficients, z_switch, GluedAsymmetry, LogPdfCache, QuadratureSpec, StableParams,
};

// Density and distribution references computed independently (S1 convention).

#[test]
fn pdf_reference_symmetric() {
    let cases: &[(f64, f64, f64, f64)] = &[
        // (z, alpha, expected, rel_tol)
        (0.0, 1.5, 2.8735275145216443e-1, 1e-10),
        (1.0, 1.5, 2.0203815960784008e-1, 1e-9),
        (5.0, 1.5, 7.1117360476548137e-3, 1e-9),
        (12.0, 1.5, 6.4812549071533734e-4, 1e-8),
        (20.0, 1.5, 1.7336690689246750e-4, 1e-6), // blend region
        (40.0, 1.5, 2.9944009860523002e-5, 1e-5), // pure tail series
        (2.0, 1.2, 7.1920113170471867e-2, 1e-9),
        (0.5, 1.9, 2.6441524277187090e-1, 1e-9),
        (0.0, 0.7, 4.0292413614186079e-1, 1e-9),
        (2.0, 0.7, 5.0141043561614473e-2, 1e-9),
        (25.0, 0.7, 1.0118047637094547e-3, 1e-8),
        (70.0, 0.7, 1.8213327193507012e-4, 1e-6),
    ];
    for &(z, alpha, want, tol) in cases {
        let got = stable_pdf(z, alpha, 0.0).unwrap();
        assert_relative_eq!(got, want, max_relative = tol);
        // symmetry is exact for beta = 0
        assert_eq!(stable_pdf(-z, alpha, 0.0).unwrap(), got);
    }
}

#[test]
fn pdf_reference_skewed() {
    assert_relative_eq!(
        stable_pdf(1.3, 1.5, -0.3).unwrap(),
        2.0549969687381567e-1,
        max_relative = 1e-9
    );
    assert_relative_eq!(
        stable_pdf(-2.0, 1.7, 0.5).unwrap(),
        1.1463127186367564e-1,
        max_relative = 1e-9
    );
    assert_relative_eq!(
        stable_pdf(3.0, 1.1, -0.99).unwrap(),
        5.2056282342731589e-2,
        max_relative = 1e-8
    );
}

#[test]
fn pdf_closed_forms() {
    // α = 2: Gaussian with variance 2
    for z in [-3.0f64, -0.7, 0.0, 1.4, 5.0] {
        let want = (-z * z / 4.0).exp() / (2.0 * std::f64::consts::PI.sqrt());
        assert_relative_eq!(stable_pdf(z, 2.0, 0.0).unwrap(), want, max_relative = 1e-14);
    }
    // α = 1, β = 0: Cauchy
    for z in [-10.0f64, -0.5, 0.0, 2.0, 100.0] {
        let want = 1.0 / (std::f64::consts::PI * (1.0 + z * z));
        assert_relative_eq!(stable_pdf(z, 1.0, 0.0).unwrap(), want, max_relative = 1e-14);
    }
}

#[test]
fn pdf_skew_reflection() {
    for &(z, a, b) in &[(1.7f64, 1.4f64, 0.6f64), (6.0, 1.8, -0.9), (0.3, 1.1, 0.2)] {
        let lhs = stable_pdf(-z, a, b).unwrap();
        let rhs = stable_pdf(z, a, -b).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn pdf_domain_errors() {
    assert!(stable_pdf(0.0, 0.0, 0.0).is_err());
    assert!(stable_pdf(0.0, 2.1, 0.0).is_err());
    assert!(stable_pdf(0.0, 0.4, 0.0).is_err()); // below evaluation range
    assert!(stable_pdf(0.0, 1.5, 1.5).is_err());
    assert!(stable_pdf(0.0, 0.9, 0.5).is_err()); // skew needs alpha > 1
    assert!(stable_pdf(0.0, 2.0, 0.5).is_err()); // skew vanishes at alpha = 2
    assert!(stable_pdf(f64::NAN, 1.5, 0.0).is_err());
    assert!(stable_pdf(f64::INFINITY, 1.5, 0.0).is_err());
}

#[test]
fn pdf_blend_is_continuous() {
    // no visible seam at the quadrature/series handoff
    for &alpha in &[1.1f64, 1.5, 1.9] {
        let zs = z_switch(alpha);
        for &edge in &[zs, 2.0 * zs] {
            let lo = stable_pdf(edge * (1.0 - 1e-6), alpha, 0.0).unwrap();
            let hi = stable_pdf(edge * (1.0 + 1e-6), alpha, 0.0).unwrap();
            assert_relative_eq!(lo, hi, max_relative = 1e-4);
        }
    }
}

#[test]
fn tail_series_matches_leading_asymptote() {
    // one-term series == Γ(1+α) sin(πα/2) (1+β) / (π z^{1+α})
    let (alpha, beta, z) = (1.5f64, -0.3f64, 50.0f64);
    let one_term = stable_tail_pdf(z, alpha, beta, 1).unwrap();
    let lead = ln_gamma_based_asymptote(z, alpha, beta);
    assert_relative_eq!(one_term, lead, max_relative = 1e-13);
    // left tail picks up (1 - β)
    let one_term_l = stable_tail_pdf(-z, alpha, beta, 1).unwrap();
    let lead_l = ln_gamma_based_asymptote(z, alpha, -beta);
    assert_relative_eq!(one_term_l, lead_l, max_relative = 1e-13);
}

fn ln_gamma_based_asymptote(z: f64, alpha: f64, beta: f64) -> f64 {
    use stabletrack::numerics::ln_gamma;
    ln_gamma(1.0 + alpha).unwrap().exp()
        * (std::f64::consts::FRAC_PI_2 * alpha).sin()
        * (1.0 + beta)
        / (std::f64::consts::PI * z.powf(1.0 + alpha))
}

#[test]
fn tail_coefficients_reference() {
    let c = tail_coefficients(1.5f64, 0.0, 2).unwrap();
    assert_relative_eq!(c[0], 0.29920671030107450845, max_relative = 1e-13);
    assert_relative_eq!(c[1], 0.95492965855137201461, max_relative = 1e-13);
    let c = tail_coefficients(1.5f64, -0.3, 1).unwrap();
    assert_relative_eq!(c[0], 0.20944469721075215592, max_relative = 1e-13);
}

#[test]
fn tail_law_plateau() {
    // π z^{1+α} ρ(z) / (Γ(1+α) sin(πα/2)) flattens to 1 far out; the window
    // starts at 40 because the next-order correction is still ~3% at z = 20
    // for mid-range α.
    for &alpha in &[1.1f64, 1.3, 1.5, 1.7, 1.9] {
        for &z in &[40.0f64, 80.0, 140.0, 200.0] {
            let ratio = stable_pdf(z, alpha, 0.0).unwrap() / ln_gamma_based_asymptote(z, alpha, 0.0);
            assert!(
                (ratio - 1.0).abs() < 0.02,
                "alpha={} z={} ratio={}",
                alpha,
                z,
                ratio
            );
        }
    }
    // close to the Cauchy point the correction is tiny and the plateau is
    // already clean from z = 20
    for &alpha in &[1.0f64, 1.05] {
        for &z in &[20.0f64, 50.0, 100.0] {
            let ratio = stable_pdf(z, alpha, 0.0).unwrap() / ln_gamma_based_asymptote(z, alpha, 0.0);
            assert!((ratio - 1.0).abs() < 0.02, "alpha={} z={} ratio={}", alpha, z, ratio);
        }
    }
}

#[test]
fn pdf_integrates_to_one() {
    use stabletrack::numerics::integrate_adaptive;
    // interior mass by adaptive quadrature + analytic series mass beyond;
    // the budget here is 1e-7, tighter than the acceptance bound
    for &alpha in &[1.2f64, 1.6, 1.95] {
        let cut = 2.0 * z_switch(alpha) + 5.0;
        let spec = QuadratureSpec { rel_tol: 1e-9, abs_tol: 1e-12, max_subdiv: 4000, trunc_threshold: 1e-16 };
        let bp: Vec<f64> = (0..=80).map(|i| -cut + 2.0 * cut * i as f64 / 80.0).collect();
        let interior =
            integrate_adaptive(|z: f64| stable_pdf(z, alpha, 0.0).unwrap(), &bp, &spec).unwrap();
        let coeffs = tail_coefficients(alpha, 0.0, 4).unwrap();
        let tail: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a / ((k + 1) as f64 * alpha) * cut.powf(-((k + 1) as f64) * alpha))
            .sum();
        let total = interior + 2.0 * tail;
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-7);
    }
}

#[test]
fn logpdf_consistent_with_pdf() {
    for &(z, a, b) in &[(0.5f64, 1.5f64, 0.0f64), (9.0, 1.2, 0.0), (33.0, 1.5, -0.4), (100.0, 1.8, 0.0)] {
        let lp = stable_logpdf_standard(z, a, b).unwrap();
        let p = stable_pdf(z, a, b).unwrap();
        assert_relative_eq!(lp, p.ln(), max_relative = 1e-12);
    }
}

#[test]
fn logpdf_full_is_shift_scale() {
    let params = StableParams::new(0.3f64, 2.5, 1.4, 0.0).unwrap();
    let x = 1.7f64;
    let want = stable_logpdf_standard((x - 0.3) / 2.5, 1.4, 0.0).unwrap() - 2.5f64.ln();
    assert_relative_eq!(stable_logpdf_full(x, &params).unwrap(), want, max_relative = 1e-14);
}

#[test]
fn logpdf_never_minus_infinity() {
    // even absurdly far out (far past f64 underflow of the linear density)
    let lp = stable_logpdf_standard(1e250f64, 1.5, 0.0).unwrap();
    assert!(lp.is_finite());
    // light side of a fully skewed law is floored, not -inf
    let lp = stable_logpdf_standard(-80.0f64, 1.5, -1.0).unwrap();
    assert!(lp.is_finite());
}

#[test]
fn quadrature_pdf_matches_production_inside_switch() {
    let spec = QuadratureSpec::<f64>::default();
    for &(z, a) in &[(0.0f64, 1.5f64), (3.0, 1.2), (8.0, 1.8)] {
        let raw = stable_pdf_quadrature(z, a, 0.0, &spec).unwrap();
        let prod = stable_pdf(z, a, 0.0).unwrap();
        assert_relative_eq!(raw, prod, max_relative = 1e-9);
    }
}

#[test]
fn cdf_reference_points() {
    let cases: &[(f64, f64, f64, f64, f64)] = &[
        (1.0, 1.5, 0.0, 7.5634202439927045e-1, 1e-9),
        (-3.0, 1.3, 0.0, 6.9444078022699807e-2, 1e-9),
        (5.0, 1.8, -0.7, 9.9787255545111886e-1, 1e-9),
        (30.0, 1.5, 0.0, 9.9877416972268107e-1, 1e-7),
        (-50.0, 1.2, 0.5, 1.2996709457069322e-3, 1e-5),
        (0.0, 1.5, -0.3, 4.3815094728150511e-1, 1e-9),
        (2.5, 0.7, 0.0, 8.3772925558060418e-1, 1e-9),
    ];
    for &(z, a, b, want, tol) in cases {
        assert_relative_eq!(stable_cdf(z, a, b).unwrap(), want, max_relative = tol);
    }
}

#[test]
fn cdf_closed_forms() {
    // Gaussian(variance 2) and Cauchy
    assert_relative_eq!(stable_cdf(0.0, 2.0, 0.0).unwrap(), 0.5, max_relative = 1e-14);
    assert_relative_eq!(
        stable_cdf(1.4, 2.0, 0.0).unwrap(),
        0.5 * (1.0 + stabletrack::numerics::erf(1.4 / 2.0)),
        max_relative = 1e-13
    );
    assert_relative_eq!(
        stable_cdf(1.0, 1.0, 0.0).unwrap(),
        0.75,
        max_relative = 1e-14
    );
}

#[test]
fn cdf_is_derivative_of_pdf() {
    let h = 1e-4;
    for &(z, a, b) in &[
        (0.7f64, 1.5f64, 0.0f64),
        (-2.0, 1.2, 0.0),
        (1.5, 1.8, -0.5),
        (4.0, 1.1, 0.3),
        (0.0, 0.8, 0.0),
    ] {
        let num = (stable_cdf(z + h, a, b).unwrap() - stable_cdf(z - h, a, b).unwrap()) / (2.0 * h);
        let den = stable_pdf(z, a, b).unwrap();
        assert_relative_eq!(num, den, max_relative = 1e-6);
    }
}

#[test]
fn cdf_matches_sampler() {
    // empirical CDF of CMS draws against the quadrature CDF
    let n = 20000usize;
    for &(a, b, seed) in &[(1.5f64, 0.0f64, 11u64), (1.7, -0.5, 12)] {
        let params = StableParams::standard(a, b).unwrap();
        let xs = sample_stable(&params, n, seed).unwrap();
        for &q in &[-3.0f64, -1.0, 0.0, 1.0, 3.0] {
            let emp = xs.iter().filter(|&&x| x <= q).count() as f64 / n as f64;
            let thr = stable_cdf(q, a, b).unwrap();
            assert!(
                (emp - thr).abs() < 0.02,
                "alpha={} beta={} q={} emp={} thr={}",
                a,
                b,
                q,
                emp,
                thr
            );
        }
    }
}

#[test]
fn moment_constant_reference() {
    assert_relative_eq!(moment_constant(2.0f64, 1.0).unwrap(), 1.1283791670955126, max_relative = 1e-13);
    assert_relative_eq!(moment_constant(2.0f64, 2.0).unwrap(), std::f64::consts::SQRT_2, max_relative = 1e-13);
    assert_relative_eq!(moment_constant(2.0f64, 0.5).unwrap(), 0.95597759497225, max_relative = 1e-13);
    assert_relative_eq!(moment_constant(1.5f64, 0.5).unwrap(), 1.1673285470547345, max_relative = 1e-13);
    assert_relative_eq!(moment_constant(1.5f64, 1.0).unwrap(), 1.7054652401523882, max_relative = 1e-13);
    assert_relative_eq!(moment_constant(1.2f64, 0.5).unwrap(), 1.4877497288442934, max_relative = 1e-13);
    assert_relative_eq!(moment_constant(1.9f64, 1.2).unwrap(), 1.2778686807969376, max_relative = 1e-13);
    assert_relative_eq!(moment_constant(1.5f64, -0.5).unwrap(), 0.49246673078871613, max_relative = 1e-13);
    assert_relative_eq!(moment_constant(0.8f64, 0.3).unwrap(), 2.0500945770791757, max_relative = 1e-13);
    assert_relative_eq!(moment_constant(1.05f64, 0.2).unwrap(), 1.2281075661139740, max_relative = 1e-13);
}

#[test]
fn moment_constant_domain() {
    assert!(moment_constant(1.5f64, 1.5).is_err()); // p = alpha diverges
    assert!(moment_constant(1.5f64, 2.0).is_err());
    assert!(moment_constant(1.5f64, 0.0).is_err());
    assert!(moment_constant(1.5f64, -1.0).is_err());
    assert!(moment_constant(0.0f64, 0.5).is_err());
    assert!(moment_constant(2.5f64, 0.5).is_err());
    // the Gaussian endpoint has every positive moment
    assert!(moment_constant(2.0f64, 3.0).is_ok());
}

#[test]
fn moment_constant_matches_sampler() {
    // E|X|^p of CMS draws vs M^p — ties the sampler to the gamma-function
    // expression through an entirely different pipeline
    let n = 200_000usize;
    let params = StableParams::standard(1.5f64, 0.0).unwrap();
    let xs = sample_stable(&params, n, 21).unwrap();
    for &p in &[0.2f64, 0.5] {
        let emp = xs.iter().map(|x| x.abs().powf(p)).sum::<f64>() / n as f64;
        let want = moment_constant(1.5f64, p).unwrap().powf(p);
        assert_relative_eq!(emp, want, max_relative = 0.02);
    }
}

#[test]
fn rho0_reference() {
    assert_relative_eq!(rho0(1.5f64).unwrap(), 0.28735275145216444502, max_relative = 1e-13);
    assert_relative_eq!(rho0(0.7f64).unwrap(), 0.40292413614186070171, max_relative = 1e-13);
    assert_relative_eq!(rho0(1.9f64).unwrap(), 0.28245651608519797709, max_relative = 1e-13);
    assert_relative_eq!(rho0(2.0f64).unwrap(), 0.28209479177387814347, max_relative = 1e-13);
    // and it equals the actual density at the origin
    assert_relative_eq!(rho0(1.3f64).unwrap(), stable_pdf(0.0, 1.3, 0.0).unwrap(), max_relative = 1e-9);
}

#[test]
fn glued_pdf_continuous_and_normalized() {
    use stabletrack::numerics::integrate_adaptive;
    let asym = GluedAsymmetry::new(0.05f64, 1.02, 0.98).unwrap();
    let alpha = 1.95f64;
    let left = glued_pdf(-1e-12, alpha, &asym).unwrap();
    let right = glued_pdf(1e-12, alpha, &asym).unwrap();
    assert_relative_eq!(left, right, max_relative = 1e-9);

    let asym = GluedAsymmetry::new(0.2f64, 1.1, 0.9).unwrap();
    let alpha = 1.6f64;
    let spec = QuadratureSpec { rel_tol: 1e-8, abs_tol: 1e-10, max_subdiv: 2000, trunc_threshold: 1e-16 };
    let bp: Vec<f64> = (0..=64).map(|i| -80.0 + 160.0 * i as f64 / 64.0).collect();
    let mass =
        integrate_adaptive(|z: f64| glued_pdf(z, alpha, &asym).unwrap(), &bp, &spec).unwrap();
    // the remainder past |z| = 80 is a few parts in 1e4
    assert!(mass > 0.999 && mass < 1.0001, "mass={}", mass);
}

#[test]
fn glued_pdf_reduces_to_symmetric() {
    let asym = GluedAsymmetry::new(0.0f64, 1.0, 1.0).unwrap();
    for &z in &[-2.0f64, -0.1, 0.0, 0.4, 3.0] {
        assert_relative_eq!(
            glued_pdf(z, 1.5, &asym).unwrap(),
            stable_pdf(z, 1.5, 0.0).unwrap(),
            max_relative = 1e-12
        );
    }
}

#[test]
fn glued_validation() {
    assert!(GluedAsymmetry::new(-0.1f64, 1.0, 1.0).is_err());
    assert!(GluedAsymmetry::new(0.1f64, 0.0, 1.0).is_err());
    assert!(GluedAsymmetry::new(0.1f64, 1.0, -1.0).is_err());
    // delta pushing the right branch out of range
    let asym = GluedAsymmetry::new(1.0f64, 1.0, 1.0).unwrap();
    assert!(glued_pdf(0.5, 1.2, &asym).is_err());
}

#[test]
fn sampler_is_deterministic() {
    let params = StableParams::standard(1.5f64, 0.0).unwrap();
    let a = sample_stable(&params, 100, 7).unwrap();
    let b = sample_stable(&params, 100, 7).unwrap();
    let c = sample_stable(&params, 100, 8).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn sampler_identical_across_scalar_types() {
    let p64 = StableParams::<f64>::standard(1.5, 0.0).unwrap();
    let p32 = StableParams::<f32>::standard(1.5, 0.0).unwrap();
    let xs64 = sample_stable(&p64, 50, 3).unwrap();
    let xs32 = sample_stable(&p32, 50, 3).unwrap();
    for (a, b) in xs64.iter().zip(xs32.iter()) {
        assert_eq!(*a as f32, *b);
    }
}

#[test]
fn sampler_gaussian_case() {
    // α = 2 must reduce to N(μ, 2σ²)
    let params = StableParams::new(1.0f64, 0.5, 2.0, 0.0).unwrap();
    let xs = sample_stable(&params, 100_000, 5).unwrap();
    let mean = xs.iter().sum::<f64>() / xs.len() as f64;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / xs.len() as f64;
    assert_abs_diff_eq!(mean, 1.0, epsilon = 0.01);
    assert_abs_diff_eq!(var, 2.0 * 0.25, epsilon = 0.01);
}

#[test]
fn sampler_cauchy_case() {
    let params = StableParams::standard(1.0f64, 0.0).unwrap();
    let xs = sample_stable(&params, 50_000, 6).unwrap();
    // quartiles of the standard Cauchy are ±1
    let mut v = xs.clone();
    v.sort_by(f64::total_cmp);
    let q1 = v[xs.len() / 4];
    let q3 = v[3 * xs.len() / 4];
    assert_abs_diff_eq!(q1, -1.0, epsilon = 0.03);
    assert_abs_diff_eq!(q3, 1.0, epsilon = 0.03);
}

#[test]
fn sampler_location_scale() {
    let p0 = StableParams::<f64>::standard(1.6, 0.0).unwrap();
    let p1 = StableParams::new(3.0f64, 2.0, 1.6, 0.0).unwrap();
    let xs0 = sample_stable(&p0, 40, 9).unwrap();
    let xs1 = sample_stable(&p1, 40, 9).unwrap();
    for (a, b) in xs0.iter().zip(xs1.iter()) {
        assert_relative_eq!(3.0 + 2.0 * a, *b, max_relative = 1e-12);
    }
}

#[test]
fn cache_matches_direct_evaluation() {
    for &(alpha, beta) in &[(1.05f64, 0.0f64), (1.5, 0.0), (1.5, -0.3), (1.95, 0.1), (0.8, 0.0)] {
        let cache = LogPdfCache::new(alpha, beta).unwrap();
        // off-node points through the interpolation window
        let zs = z_switch(alpha);
        let mut z = -1.9 * zs + 0.0137;
        while z < 1.9 * zs {
            let got = cache.logpdf_standard(z);
            let want = stable_logpdf_standard(z, alpha, beta).unwrap();
            assert_abs_diff_eq!(got, want, epsilon = 1e-6);
            z += zs / 7.3;
        }
        // beyond the table both sides fall back to the same series
        for &far in &[2.5 * zs, 10.0 * zs] {
            let got = cache.logpdf_standard(far);
            let want = stable_logpdf_standard(far, alpha, beta).unwrap();
            assert_abs_diff_eq!(got, want, epsilon = 1e-9);
        }
    }
}

#[test]
fn cache_closed_form_modes() {
    let cache = LogPdfCache::new(2.0f64, 0.0).unwrap();
    for &z in &[-4.0f64, 0.0, 1.3] {
        assert_relative_eq!(
            cache.logpdf_standard(z),
            stable_logpdf_standard(z, 2.0, 0.0).unwrap(),
            max_relative = 1e-14
        );
    }
    let cache = LogPdfCache::new(1.0f64, 0.0).unwrap();
    for &z in &[-7.0f64, 0.2, 90.0] {
        assert_relative_eq!(
            cache.logpdf_standard(z),
            stable_logpdf_standard(z, 1.0, 0.0).unwrap(),
            max_relative = 1e-14
        );
    }
}

#[test]
fn cache_full_parameter_form() {
    let cache = LogPdfCache::new(1.5f64, 0.0).unwrap();
    let want = stable_logpdf_full(
        2.0,
        &StableParams::new(0.5f64, 1.5, 1.5, 0.0).unwrap(),
    )
    .unwrap();
    assert_abs_diff_eq!(cache.logpdf_full(2.0, 0.5, 1.5), want, epsilon = 1e-7);
}

#[test]
fn params_validation() {
    assert!(StableParams::new(0.0f64, 1.0, 1.5, 0.0).is_ok());
    assert!(StableParams::new(0.0f64, 0.0, 1.5, 0.0).is_err());
    assert!(StableParams::new(0.0f64, -1.0, 1.5, 0.0).is_err());
    assert!(StableParams::new(f64::NAN, 1.0, 1.5, 0.0).is_err());
    assert!(StableParams::new(0.0f64, 1.0, 1.5, f64::NAN).is_err());
    assert!(StableParams::standard(1.5f64, -1.0).is_ok());
    assert!(StableParams::standard(1.0f64, 0.1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pdf_positive_finite(z in -50.0f64..50.0, alpha in 0.6f64..2.0) {
        let v = stable_pdf(z, alpha, 0.0).unwrap();
        prop_assert!(v.is_finite());
        prop_assert!(v > 0.0);
    }

    #[test]
    fn pdf_skewed_positive_finite(z in -50.0f64..50.0, alpha in 1.05f64..1.99, beta in -0.95f64..0.95) {
        let v = stable_pdf(z, alpha, beta).unwrap();
        prop_assert!(v.is_finite());
        prop_assert!(v > 0.0);
    }

    #[test]
    fn cdf_monotone_and_bounded(z in -30.0f64..30.0, dz in 0.01f64..5.0, alpha in 1.05f64..2.0, beta in -0.9f64..0.9) {
        let f1 = stable_cdf(z, alpha, beta).unwrap();
        let f2 = stable_cdf(z + dz, alpha, beta).unwrap();
        prop_assert!((0.0..=1.0).contains(&f1));
        prop_assert!((0.0..=1.0).contains(&f2));
        prop_assert!(f2 >= f1 - 1e-10, "F({}) = {} > F({}) = {}", z, f1, z + dz, f2);
    }

    #[test]
    fn cdf_symmetric_complement(z in 0.0f64..30.0, alpha in 0.6f64..2.0) {
        let a = stable_cdf(z, alpha, 0.0).unwrap();
        let b = stable_cdf(-z, alpha, 0.0).unwrap();
        prop_assert!((a + b - 1.0).abs() < 1e-9, "F({})+F(-{}) = {}", z, z, a + b);
    }

    #[test]
    fn pdf_peak_at_origin_for_symmetric(z in -10.0f64..10.0, alpha in 0.6f64..2.0) {
        let v0 = stable_pdf(0.0, alpha, 0.0).unwrap();
        let v = stable_pdf(z, alpha, 0.0).unwrap();
        prop_assert!(v <= v0 * (1.0 + 1e-9));
    }
}
