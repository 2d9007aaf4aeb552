mod common;

use common::reference::*;
use leaky_disk::specfun::{airy_eval, airy_zeros, bessel_eval, bessel_product, AiryRegime};
use num_complex::Complex64 as C64;
use proptest::prelude::*;
use std::f64::consts::PI;

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

#[test]
fn airy_table() {
    for &(z, ai, aip, am, amp) in AIRY {
        let p = airy_eval(z).unwrap();
        let tol = if z.norm() > 9.0 { 1e-10 } else { 1e-11 };
        assert!(rel(p.ai, ai) < tol, "Ai({z}) = {} vs {ai}", p.ai);
        assert!(rel(p.ai_prime, aip) < tol, "Ai'({z}) = {} vs {aip}", p.ai_prime);
        assert!(rel(p.a_minus, am) < tol, "A-({z}) = {} vs {am}", p.a_minus);
        assert!(rel(p.a_minus_prime, amp) < tol, "A-'({z}) = {} vs {amp}", p.a_minus_prime);
    }
}

#[test]
fn airy_zero_table() {
    let t = airy_zeros(100).unwrap();
    for (k, &(zeta, aip)) in AIRY_ZEROS.iter().enumerate() {
        assert!((t.zeros[k] - zeta).abs() < 1e-12 * zeta, "k = {}", k + 1);
        assert!((t.ai_prime_at_zeros[k] - aip).abs() < 1e-11);
    }
    for (k, w) in t.zeros.windows(2).enumerate() {
        assert!(w[0] < w[1]);
        let s0 = t.ai_prime_at_zeros[k].signum();
        assert_eq!(s0, -t.ai_prime_at_zeros[k + 1].signum());
    }
    assert!(t.ai_prime_at_zeros[0] > 0.0);
    for &x in &t.zeros {
        let p = airy_eval(C64::new(-x, 0.0)).unwrap();
        assert!(p.ai.norm() <= 1e-12, "Ai(-{x}) = {}", p.ai);
    }
}

#[test]
fn airy_regimes_recorded() {
    assert_eq!(airy_eval(C64::new(0.5, 0.0)).unwrap().regime, AiryRegime::Series);
    assert_eq!(airy_eval(C64::new(20.0, 1.0)).unwrap().regime, AiryRegime::Asymptotic);
    let near = airy_eval(C64::new(9.0005, 0.0)).unwrap();
    assert!(near.accuracy_warning);
    assert!(!airy_eval(C64::new(3.0, 0.0)).unwrap().accuracy_warning);
}

#[test]
fn bessel_table() {
    for &(n, z, j, jp, h, hp) in BESSEL {
        let p = bessel_eval(n, z).unwrap();
        let tol = 1e-10;
        assert!(rel(p.j_value(), j) < tol, "J_{n}({z}) = {} vs {j} ({:?})", p.j_value(), p.regime);
        assert!(rel(p.j_prime_value(), jp) < tol, "J'_{n}({z}) = {} vs {jp}", p.j_prime_value());
        assert!(rel(p.h1_value(), h) < tol, "H_{n}({z}) = {} vs {h} ({:?})", p.h1_value(), p.regime);
        assert!(rel(p.h1_prime_value(), hp) < tol, "H'_{n}({z}) = {} vs {hp}", p.h1_prime_value());
    }
}

#[test]
fn bessel_deep_elliptic() {
    for &(n, z, lj, lh, prod) in DEEP {
        let p = bessel_eval(n, z).unwrap();
        assert!((p.ln_abs_j() - lj).abs() < 1e-9 * lj.abs(), "n={n} z={z}");
        assert!((p.ln_abs_h1() - lh).abs() < 1e-9 * lh.abs(), "n={n} z={z}");
        assert!(rel(p.product().0, prod) < 1e-10, "n={n} z={z}");
    }
}

#[test]
fn wronskian_at_one() {
    let p = bessel_eval(0, C64::new(1.0, 0.0)).unwrap();
    let w = p.j * p.h1_prime - p.j_prime * p.h1;
    assert!((w - C64::new(0.0, 2.0 / PI)).norm() < 1e-14);
}

#[test]
fn product_large_argument_limit() {
    for &x in &[50.0, 100.0, 200.0] {
        let z = C64::new(x, 0.0);
        let (p, _) = bessel_product(0, z).unwrap();
        let lhs = PI * z * p - 1.0 - (C64::i() * (2.0 * z - PI / 2.0)).exp();
        assert!(lhs.norm() <= 0.5 / x, "x = {x}: {}", lhs.norm());
    }
}

#[test]
fn product_matches_series_factors() {
    let z = C64::new(1.0, 0.0);
    let (p, _) = bessel_product(0, z).unwrap();
    let expect = C64::new(0.765197686557966605, 0.0) * C64::new(0.765197686557966605, 0.0882569642156769557);
    assert!(rel(p, expect) < 1e-10);
}

/// Power series of J_n, summed far past its largest term, as an independent check.
fn long_series_j(n: u32, z: C64) -> C64 {
    let half = z / 2.0;
    let mut t = half.powu(n) / (1..=n).map(f64::from).product::<f64>();
    let mut s = t;
    for k in 1..60 {
        let kf = k as f64;
        t *= -half * half / (kf * (kf + n as f64));
        s += t;
    }
    s
}

#[test]
fn recurrence_vs_long_series() {
    let z = C64::new(10.0, 0.5);
    let p = bessel_eval(5, z).unwrap();
    assert!(rel(p.j_value(), long_series_j(5, z)) < 1e-9);
}

#[test]
fn regime_overlaps_agree() {
    // Series and recurrence meet at |z| = 2; recurrence and Hankel at |z| = 40.
    // Sampled where resonances live: on and below the real axis.
    for i in 0..100 {
        let t = -0.3 + 0.32 * i as f64 / 99.0;
        for &(r, n) in &[(2.0, (i % 7) as u32), (40.0, (i % 3) as u32)] {
            let below = bessel_eval(n, C64::from_polar(r * (1.0 - 1e-12), t)).unwrap();
            let above = bessel_eval(n, C64::from_polar(r * (1.0 + 1e-12), t)).unwrap();
            assert_ne!(below.regime, above.regime, "r={r} n={n} t={t}");
            assert!(rel(below.j_value(), above.j_value()) < 1e-7, "J r={r} n={n} t={t}");
            assert!(rel(below.h1_value(), above.h1_value()) < 1e-7, "H r={r} n={n} t={t}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bessel_conjugate_reflection(n in 0u32..60, re in 0.1f64..150.0, im in -5.0f64..5.0) {
        let z = C64::new(re, im);
        let a = bessel_eval(n, z).unwrap();
        let b = bessel_eval(n, z.conj()).unwrap();
        let (ja, jb) = (a.j_value(), b.j_value());
        prop_assert!((ja.conj() - jb).norm() <= 1e-12 * ja.norm().max(1e-300) + 1e-300);
    }

    #[test]
    fn airy_conjugate_reflection(re in -25.0f64..25.0, im in -25.0f64..25.0) {
        let z = C64::new(re, im);
        let a = airy_eval(z).unwrap();
        let b = airy_eval(z.conj()).unwrap();
        prop_assert!((a.ai.conj() - b.ai).norm() <= 1e-12 * a.ai.norm());
    }

    #[test]
    fn bessel_wronskian_random(n in 0u32..400, re in 0.3f64..400.0, im in -8.0f64..1.0) {
        let p = bessel_eval(n, C64::new(re, im)).unwrap();
        prop_assert!(p.wronskian_relative() <= 1e-9, "{:?}", p);
    }

    #[test]
    fn airy_wronskian_random(re in -40.0f64..40.0, im in -40.0f64..40.0) {
        let p = airy_eval(C64::new(re, im)).unwrap();
        let scale = 1.0 + (p.ai * p.a_minus_prime).norm();
        prop_assert!(p.wronskian_residual().norm() <= 1e-10 * scale);
    }
}
