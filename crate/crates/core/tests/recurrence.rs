use num_complex::Complex64;
use proptest::prelude::*;

use mopzeros::exact::{int, rat, to_f64};
use mopzeros::families::FamilyKind;
use mopzeros::recurrence::{
    build_surface, diagonal_constants, diagonal_surface, jp_limit_coeffs, jp_nn_coeffs, ml_limit_coeffs, ml_nn_coeffs,
    solve_z,
};
use mopzeros::{BigComplex, BigFloat, FamilyParams, MultiIndex, Rational};

fn big(z: Complex64, bits: u32) -> BigComplex {
    BigComplex::from_c64(z, bits)
}

fn jp_errors(params: &FamilyParams, n: usize) -> [f64; 4] {
    let lim = jp_limit_coeffs(&[rat(1, 3), rat(2, 3)]).unwrap();
    let idx = MultiIndex::new(vec![n / 3, 2 * n / 3]).unwrap();
    let c = jp_nn_coeffs(params, &idx).unwrap();
    [
        to_f64(&(&c.a[0] - &lim.a[0])).abs(),
        to_f64(&(&c.a[1] - &lim.a[1])).abs(),
        to_f64(&(&c.b[0] - &lim.b[0])).abs(),
        to_f64(&(&c.b[1] - &lim.b[1])).abs(),
    ]
}

#[test]
fn jp_coefficients_are_within_order_one_over_n_of_ray_limits() {
    let params = FamilyParams::jacobi_pineiro(vec![rat(1, 3), rat(1, 2)], rat(1, 4)).unwrap();
    for n in [50usize, 100, 200, 400] {
        let errs = jp_errors(&params, n);
        assert!(errs.iter().all(|e| *e * n as f64 <= 0.2), "n = {n}: {errs:?}");
    }
}

#[test]
fn jp_a_coefficients_converge_monotonically_on_the_exact_ray() {
    // With n divisible by 3 the floors introduce no drift off the ray.
    let params = FamilyParams::jacobi_pineiro(vec![rat(1, 3), rat(1, 2)], rat(1, 4)).unwrap();
    let mut prev = [f64::INFINITY; 2];
    for n in [51usize, 102, 204, 408] {
        let errs = jp_errors(&params, n);
        assert!(errs[0] < prev[0] && errs[1] < prev[1], "n = {n}: {errs:?} vs {prev:?}");
        prev = [errs[0], errs[1]];
    }
}

#[test]
fn ml_scaled_coefficients_approach_ray_limits() {
    let params = FamilyParams::multiple_laguerre(vec![rat(1, 3), rat(1, 2)]).unwrap();
    let lim = ml_limit_coeffs(&[rat(1, 3), rat(2, 3)]).unwrap();
    let mut prev = f64::INFINITY;
    for n in [50usize, 100, 200, 400] {
        let idx = MultiIndex::new(vec![n / 3, 2 * n / 3]).unwrap();
        let c = ml_nn_coeffs(&params, &idx).unwrap();
        let nq = int(n as i64);
        let err = (0..2)
            .map(|j| {
                let ea = to_f64(&(&c.a[j] / (&nq * &nq) - &lim.a[j])).abs();
                let eb = to_f64(&(&c.b[j] / &nq - &lim.b[j])).abs();
                ea.max(eb)
            })
            .fold(0.0, f64::max);
        assert!(err < prev, "n = {n}: {err} vs {prev}");
        prev = err;
    }
}

fn ray(weights: Vec<u32>) -> Option<Vec<Rational>> {
    let total: u32 = weights.iter().sum();
    let q: Vec<Rational> = weights.iter().map(|&w| rat(w as i64, total as i64)).collect();
    let mut sorted = q.clone();
    sorted.sort();
    sorted.dedup();
    (sorted.len() == q.len()).then_some(q)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn residues_hold_for_random_rays(weights in prop::collection::vec(1u32..40, 2..=3)) {
        prop_assume!(ray(weights.clone()).is_some());
        let q = ray(weights).unwrap();
        for lim in [jp_limit_coeffs(&q).unwrap(), ml_limit_coeffs(&q).unwrap()] {
            let s = build_surface(&lim).unwrap();
            prop_assert_eq!(s.residues().unwrap(), lim.a.clone());
        }
    }
}

#[test]
fn solve_z_precision_and_stieltjes_sign() {
    for r in 1..=3 {
        let surface = diagonal_surface(r, FamilyKind::JacobiPineiro).unwrap();
        let (p, _) = diagonal_constants(r, FamilyKind::JacobiPineiro).unwrap();
        let pf = to_f64(&p);
        let pencil = surface.pencil();
        for i in 0..10 {
            for k in 0..10 {
                let x = Complex64::new(-1.5 + 0.4 * i as f64, 0.01 + 0.3 * k as f64);
                let xb = big(x, 128);
                let z = solve_z(&xb, &surface).unwrap();
                let res = pencil.residual(&z, &xb, 256).abs_f64();
                assert!(res < 1e-30 * (1.0 + z.abs_f64()).powi(r as i32 + 1), "r={r} x={x}: {res}");
                let inv = 1.0 / (z.to_c64() - pf);
                assert!(inv.im < 0.0, "r={r} x={x}: Im 1/(z-p) = {}", inv.im);
            }
        }
    }
}

#[test]
fn solve_z_far_field_and_conjugation() {
    let surface = diagonal_surface(1, FamilyKind::JacobiPineiro).unwrap();
    let a1 = 1.0 / 16.0;
    for x in [Complex64::new(100.0, 0.0), Complex64::new(-250.0, 40.0), Complex64::new(0.0, 1e4)] {
        let z = solve_z(&big(x, 128), &surface).unwrap().to_c64();
        assert!((z - x).norm() <= 2.0 * a1 / x.norm(), "x = {x}");
    }
    for r in 2..=4 {
        let s = diagonal_surface(r, FamilyKind::MultipleLaguerre).unwrap();
        let x = Complex64::new(0.7, 0.9);
        let z = solve_z(&big(x, 128), &s).unwrap().to_c64();
        let zc = solve_z(&big(x.conj(), 128), &s).unwrap().to_c64();
        assert!((z.conj() - zc).norm() < 1e-14);
    }
}

#[test]
fn jp_r1_at_minus_one_matches_quadratic() {
    let surface = diagonal_surface(1, FamilyKind::JacobiPineiro).unwrap();
    let x = BigComplex::from_real(BigFloat::from_i64(-1, 128));
    let z = solve_z(&x, &surface).unwrap();
    let want = 0.25 - (1.0 + 2f64.sqrt()) / 2.0;
    assert!((z.to_c64().re - want).abs() < 1e-15 && z.to_c64().im.abs() < 1e-30);
}
