use mopzeros::exact::{int, rat};
use mopzeros::families::{
    build_jp, build_meijer_stepline, build_ml_explicit, build_via_recurrence, family, orthogonality_check,
};
use mopzeros::recurrence::nn_coeffs;
use mopzeros::{ExactPolynomial, FamilyParams, MultiIndex};

fn jp2() -> FamilyParams {
    FamilyParams::jacobi_pineiro(vec![rat(1, 3), rat(1, 2)], rat(1, 4)).unwrap()
}

fn ml2() -> FamilyParams {
    FamilyParams::multiple_laguerre(vec![rat(1, 3), rat(1, 2)]).unwrap()
}

fn jp3() -> FamilyParams {
    FamilyParams::jacobi_pineiro(vec![rat(-1, 2), rat(1, 5), rat(2, 3)], rat(3, 2)).unwrap()
}

fn ml3() -> FamilyParams {
    FamilyParams::multiple_laguerre(vec![rat(-1, 3), rat(1, 4), rat(7, 5)]).unwrap()
}

fn direct(p: &FamilyParams, n: &MultiIndex) -> ExactPolynomial {
    match p.kind() {
        mopzeros::FamilyKind::JacobiPineiro => build_jp(p, n).unwrap(),
        _ => build_ml_explicit(p, n).unwrap(),
    }
}

fn all_paths(n: &[usize]) -> Vec<Vec<usize>> {
    if n.iter().all(|&v| v == 0) {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 0..n.len() {
        if n[k] == 0 {
            continue;
        }
        let mut m = n.to_vec();
        m[k] -= 1;
        for mut p in all_paths(&m) {
            p.push(k);
            out.push(p);
        }
    }
    out
}

#[test]
fn every_path_matches_direct_construction_small() {
    for params in [jp2(), ml2()] {
        for n in MultiIndex::all_up_to(2, 5) {
            let want = direct(&params, &n);
            for path in all_paths(n.entries()) {
                assert_eq!(build_via_recurrence(&params, &n, &path).unwrap(), want, "{n} via {path:?}");
            }
        }
    }
}

#[test]
fn distinct_paths_match_direct_construction_up_to_eight() {
    for (params, r, max) in [(jp2(), 2, 8), (ml2(), 2, 8), (jp3(), 3, 8), (ml3(), 3, 8)] {
        for n in MultiIndex::all_up_to(r, max) {
            let want = direct(&params, &n);
            let mut reversed = n.canonical_path();
            reversed.sort_by(|a, b| b.cmp(a));
            for path in [n.canonical_path(), n.cyclic_path(), reversed] {
                assert_eq!(build_via_recurrence(&params, &n, &path).unwrap(), want, "{n} via {path:?}");
            }
        }
    }
}

#[test]
fn exact_orthogonality_up_to_six() {
    for (params, r) in [(jp2(), 2), (ml2(), 2), (jp3(), 3), (ml3(), 3)] {
        for n in MultiIndex::all_up_to(r, 6) {
            let p = direct(&params, &n);
            assert!(p.is_monic() && p.degree() == n.size());
            let rep = orthogonality_check(&params, &p, &n).unwrap();
            assert!(rep.holds, "{n}: {:?}", rep.witness);
        }
    }
}

#[test]
fn perturbed_polynomial_fails_orthogonality() {
    let params = ml2();
    let n = MultiIndex::new(vec![2, 1]).unwrap();
    let p = &direct(&params, &n) + &ExactPolynomial::constant(rat(1, 7));
    let rep = orthogonality_check(&params, &p, &n).unwrap();
    assert!(!rep.holds);
    assert!(rep.witness.is_some());
}

#[test]
fn recurrence_identity_is_exact() {
    for (params, r) in [(jp2(), 2), (ml2(), 2), (jp3(), 3), (ml3(), 3)] {
        for n in MultiIndex::all_up_to(r, 7) {
            let c = nn_coeffs(&params, &n).unwrap();
            let pn = direct(&params, &n);
            for k in 0..r {
                let mut rest = &pn.mul_x() - &direct(&params, &n.raised(k));
                rest = &rest - &pn.scale(&c.b[k]);
                for j in 0..r {
                    if let Some(lower) = n.lowered(j) {
                        rest = &rest - &direct(&params, &lower).scale(&c.a[j]);
                    }
                }
                assert!(rest.is_zero(), "{n}, k = {}: residual {rest}", k + 1);
            }
        }
    }
}

#[test]
fn r1_reductions() {
    // Meijer-G with ν = (0) and multiple Laguerre with α = (0) are both monic Laguerre.
    let lag = FamilyParams::multiple_laguerre(vec![int(0)]).unwrap();
    for deg in 0..8 {
        let m = build_meijer_stepline(&[0], deg);
        assert_eq!(m, build_ml_explicit(&lag, &MultiIndex::new(vec![deg]).unwrap()).unwrap());
    }
}

#[test]
fn registry_builds_sequence_members() {
    let f = family("meijer").unwrap();
    let params = FamilyParams::meijer_g(vec![0, 1]).unwrap();
    let n = f.sequence_index(2, 5);
    assert_eq!(n.size(), 5);
    assert_eq!(f.build(&params, &n).unwrap(), build_meijer_stepline(&[0, 1], 5));

    let f = family("jp").unwrap();
    let params = jp2();
    let n = f.sequence_index(2, 8);
    let fast = f.build(&params, &n).unwrap();
    assert_eq!(fast.degree(), 16);
    assert!(orthogonality_check(&params, &fast, &n).unwrap().holds);
}
