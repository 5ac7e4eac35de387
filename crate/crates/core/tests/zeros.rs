use mopzeros::exact::{int, rat};
use mopzeros::families::family;
use mopzeros::zeros::{empirical_cdf, interlacing_check, isolate_zeros, ks_distance, EmpiricalCDF, ZeroSet};
use mopzeros::{FamilyParams, MultiIndex, Rational};
use proptest::prelude::*;

fn zeros_of(name: &str, params: &FamilyParams, n: &MultiIndex) -> ZeroSet {
    let fam = family(name).unwrap();
    let p = fam.build(params, n).unwrap();
    let support = fam.support(&p);
    isolate_zeros(&p, support).unwrap()
}

fn jp2() -> FamilyParams {
    FamilyParams::jacobi_pineiro(vec![int(0), rat(1, 2)], int(0)).unwrap()
}

fn ml2() -> FamilyParams {
    FamilyParams::multiple_laguerre(vec![int(0), rat(1, 2)]).unwrap()
}

#[test]
fn legendre_zeros_are_symmetric() {
    let params = FamilyParams::jacobi_pineiro(vec![int(0)], int(0)).unwrap();
    for n in [3, 8, 15] {
        let z = zeros_of("jp", &params, &MultiIndex::new(vec![n]).unwrap()).refine(1e-20);
        let m = z.midpoints_f64();
        let w = z.widths_f64();
        for k in 0..n {
            let tol = 2.0 * (w[k] + w[n - 1 - k]) + 1e-15;
            assert!((m[k] + m[n - 1 - k] - 1.0).abs() <= tol, "n={n} k={k}");
        }
    }
}

#[test]
fn zeros_are_confined_to_the_support() {
    let jp = jp2();
    let ml = ml2();
    let meijer = FamilyParams::meijer_g(vec![0, 1]).unwrap();
    for size in 1..=12 {
        let n = MultiIndex::stepline(size, 2);
        let z = zeros_of("jp", &jp, &n);
        assert!(z.verify_certificates());
        // Open enclosures exclude their endpoints, which are not zeros.
        assert!(z.enclosures().iter().all(|e| !e.is_point() && e.lo >= int(0) && e.hi <= int(1)));
        for (name, params) in [("ml", &ml), ("meijer", &meijer)] {
            let fam = family(name).unwrap();
            let z = zeros_of(name, params, &fam.sequence_index(2, size));
            assert!(z.verify_certificates());
            assert!(z.enclosures().iter().all(|e| !e.is_point() && e.lo >= int(0)), "{name} size {size}");
        }
    }
}

#[test]
fn degree_forty_refines_with_certificates() {
    let z = zeros_of("jp", &jp2(), &MultiIndex::diagonal(20, 2));
    assert_eq!(z.len(), 40);
    let r = z.refine(1e-10);
    assert!(r.verify_certificates());
    for e in r.enclosures() {
        let mid = e.midpoint();
        let scale = if mid > int(1) { mid } else { int(1) };
        assert!(e.width() <= rat(1, 10_000_000_000) * scale);
    }
}

#[test]
fn interlacing_along_diagonal_chains() {
    for (name, params) in [("jp", jp2()), ("ml", ml2())] {
        let mut prev = zeros_of(name, &params, &MultiIndex::zeros(2));
        let mut n = MultiIndex::zeros(2);
        for step in 0..24 {
            n = n.raised(step % 2);
            let next = zeros_of(name, &params, &n);
            assert!(interlacing_check(&prev, &next).unwrap(), "{name} at {n}");
            prev = next;
        }
    }
}

#[test]
fn scaled_multiple_laguerre_zeros_stay_near_the_limit_support() {
    // Scaled by 1/(r n) the zeros sit below c_r / r = 27/8 for r = 2.
    let fam = family("ml").unwrap();
    let n = MultiIndex::diagonal(15, 2);
    let z = zeros_of("ml", &ml2(), &n);
    let r = Rational::from_integer(2.into());
    let z = z.with_scale(fam.zero_scale(2, &n) / r, Some(n));
    let cdf = empirical_cdf(&z);
    assert!(*cdf.samples().last().unwrap() < 27.0 / 8.0 + 0.05);
    assert!(cdf.samples()[0] > 0.0);
}

#[test]
fn empirical_cdf_of_two_zeros() {
    let p = mopzeros::ExactPolynomial::from_roots(&[rat(1, 4), rat(3, 4)]);
    let z = isolate_zeros(&p, (int(0), int(1))).unwrap().refine(1e-30);
    let e = empirical_cdf(&z);
    assert!((e.eval(0.25) - 0.5).abs() < 1e-15 && e.eval(0.2499) == 0.0);
    assert_eq!(e.eval(0.75), 1.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ks_is_translation_invariant(
        samples in prop::collection::vec(-5.0f64..5.0, 1..40),
        shift in -3.0f64..3.0,
    ) {
        let f = |x: f64| 1.0 / (1.0 + (-x).exp());
        let d0 = ks_distance(&EmpiricalCDF::new(samples.clone()), f);
        let moved: Vec<f64> = samples.iter().map(|s| s + shift).collect();
        let d1 = ks_distance(&EmpiricalCDF::new(moved), |x| f(x - shift));
        prop_assert!((d0 - d1).abs() < 1e-12);
        prop_assert!((0.0..=1.0).contains(&d0));
    }

    #[test]
    fn midpoint_quantiles_give_half_a_step(n in 1usize..200) {
        let f = |x: f64| x.clamp(0.0, 1.0).powi(2);
        let q: Vec<f64> = (1..=n).map(|k| ((k as f64 - 0.5) / n as f64).sqrt()).collect();
        let d = ks_distance(&EmpiricalCDF::new(q), f);
        prop_assert!((d - 0.5 / n as f64).abs() < 1e-12);
    }
}
