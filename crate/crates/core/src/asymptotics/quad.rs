use std::sync::OnceLock;

use gauss_quad::GaussLegendre;

const NODES: usize = 256;
const MAX_DEPTH: u32 = 24;

fn rule() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(NODES).expect("256 is a valid Gauss-Legendre degree"))
}

/// Adaptive Gauss-Legendre: a panel is accepted when its two halves agree
/// with the whole to `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let whole = rule().integrate(a, b, f);
    refine(f, a, b, whole, tol, 0)
}

fn refine<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let left = rule().integrate(a, m, f);
    let right = rule().integrate(m, b, f);
    let split = left + right;
    if (split - whole).abs() <= tol || depth >= MAX_DEPTH {
        return split;
    }
    refine(f, a, m, left, 0.5 * tol, depth + 1) + refine(f, m, b, right, 0.5 * tol, depth + 1)
}
