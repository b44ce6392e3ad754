use super::*;
use crate::exact_arith::highprec::{HighPrecReal, Precision};
use crate::exact_arith::rational::{int, rat};
use crate::totient_sets::build_denominator_set;

fn problem(r: num_rational::BigRational, s: u64, b: i64) -> SaddleProblem {
    SaddleProblem::new(r, s, &build_denominator_set(&int(b)).unwrap()).unwrap()
}

fn close(a: &HighPrecReal, b: &str, digits: i64) -> bool {
    let p = a.precision();
    let b = p.parse(b).unwrap();
    (a - &b).abs() < p.int(10).powi(-digits) * b.abs()
}

#[test]
fn toy_saddle_values() {
    let sp = problem(int(2), 11, 1);
    let sol = solve_saddle(&sp, Precision::new(60)).unwrap();
    assert!(close(&sol.x0, "1.24929034988705577800", 19));
    assert!(close(&sol.x1, "3.52079728939614774006", 19));
    assert!(close(&sol.log_g_x0, "1.45555805537594868208", 19));
    assert!(!sol.criterion);
}

#[test]
fn saddle_invariants() {
    let prec = Precision::new(60);
    for (r, s, b) in [(int(2), 51, 1), (int(2), 11, 1), (rat(9, 4), 10001, 2), (rat(7, 3), 301, 3)] {
        let sp = problem(r, s, b);
        let sol = solve_saddle(&sp, prec).unwrap();
        assert!(sol.log_f_residual < prec.int(10).powi(-30));
        assert!(sol.x0 < sol.x1);
        assert!(sol.x0 < prec.rational(&sp.x0_bound()));
        assert!(sp.x1_residual(&sol.x1) < prec.int(10).powi(-30));
        let h = prec.int(10).powi(-10);
        let fp = f_prime_stencil(&sp, &sol.x1, &h);
        assert!(fp.abs() < prec.int(10).powi(-25), "f'(x1) = {fp:?}");
        // sign pattern of log f around x₀ on a log-spaced grid
        let x0 = sol.x0.clone();
        for k in -50..=50i64 {
            if k == 0 {
                continue;
            }
            let x = &x0 * prec.int(10).powf(&(prec.int(k) / prec.int(25)));
            assert_eq!(sp.log_f(&x).is_positive(), k < 0, "k = {k}");
        }
        // h = f^x g peaks at x₀ with value g(x₀)
        let top = sp.log_h(&x0);
        assert!((&top - &sol.log_g_x0).abs() < prec.int(10).powi(-25) * (top.abs() + prec.one()));
        for factor in ["0.5", "0.9", "0.99", "1.01", "1.1", "2"] {
            let x = &x0 * prec.parse(factor).unwrap();
            let lh = sp.log_h(&x);
            if x0.log10_abs() > -6.0 {
                assert!(lh < top, "h({factor}·x0)");
            } else {
                // the dip is of size x₀, far below the working precision
                assert!(lh < &top + prec.int(10).powi(-40) * top.abs(), "h({factor}·x0)");
            }
        }
    }
}

#[test]
fn criterion_cases() {
    let prec = Precision::new(60);
    let big = solve_saddle(&problem(rat(9, 4), 10001, 2), prec).unwrap();
    assert!(big.criterion);
    assert!((big.log_g_x0.to_f64() + 19846.0).abs() < 1.0, "{:?}", big.log_g_x0);
    assert!(big.x0.log10_abs() < -150.0);
    let mid = solve_saddle(&problem(int(2), 51, 1), prec).unwrap();
    assert!(mid.criterion);
    assert!((mid.log_g_x0.to_f64() + 76.3).abs() < 0.1, "{:?}", mid.log_g_x0);
    assert!(!criterion(&problem(int(2), 11, 1), prec).unwrap());
    let psi = build_denominator_set(&int(1)).unwrap();
    assert!(SaddleProblem::new(int(2), 9, &psi).is_err());
    assert!(SaddleProblem::new(int(2), 10, &psi).is_err());
}

#[test]
fn constants() {
    let prec = Precision::new(60);
    let c = optimize_r(prec);
    // the quoted digits are truncations
    assert!(c.r0.to_scientific(20).starts_with("2.26388"));
    assert!(c.c0.to_scientific(20).starts_with("1.192507"));
    assert!(c.zeta_ratio.to_scientific(10).starts_with("1.94"));
    let e = prec.e();
    let closed = ((prec.int(4) * &e * &e + prec.one()).sqrt() - prec.one()) / prec.int(2);
    assert!((&closed - &c.r0).abs() < prec.int(10).powi(-60));
    assert!((objective(&c.r0) - &c.max_value).abs() < prec.int(10).powi(-40));
    let c0sq = prec.int(4) * &c.zeta_ratio * &c.max_value;
    assert!((&c.c0 * &c.c0 - c0sq).abs() < prec.int(10).powi(-60));
    assert!(close(
        &c.euler_gamma,
        "0.57721566490153286060651209008240243104215933593992359880576723",
        60
    ));
}

#[test]
fn count_bound_choice() {
    let consts = optimize_r(Precision::new(40));
    let cb = count_bound(10001, &rat(1, 10), &consts).unwrap();
    let c = (consts.c0.to_f64() - 0.01) / consts.zeta_ratio.to_f64();
    assert!((cb.c - c).abs() < 1e-12);
    let scale = (10001f64 / 10001f64.ln()).sqrt();
    assert!((cb.bound - c * scale).abs() < 1e-9);
    assert!((cb.predicted_count - (consts.c0.to_f64() - 0.1) * scale).abs() < 1e-9);
    assert!(count_bound(10001, &rat(6, 5), &consts).is_err());
    assert!(count_bound(10000, &rat(1, 10), &consts).is_err());
    // once the density has settled the enumerated set is large enough
    for s in [100_001u64, 1_000_001] {
        let cb = count_bound(s, &rat(1, 10), &consts).unwrap();
        let psi = build_denominator_set(&int(cb.bound.floor() as i64)).unwrap();
        assert!(cb.predicted_count <= psi.len() as f64, "s = {s}");
    }
}

#[test]
fn scaled_probe_trend() {
    let prec = Precision::new(40);
    let target = scaled_limit_target(&int(2), &int(1), prec).to_f64();
    let expect = (1.9435964f64 / 4.0 * 5.0).exp() * 4.0 / 27.0;
    assert!((target - expect).abs() < 1e-6);
    let rows = scaled_limit_probe(&int(2), &int(1), &[1001, 10001], prec).unwrap();
    assert!(rows[1].relative_error < rows[0].relative_error, "{rows:?}");
}

#[test]
fn convergence_small() {
    let prec = Precision::new(40);
    let rep = convergence_probe(&int(2), 11, &int(1), &[2, 4], 2000, prec).unwrap();
    assert!(rep.identity_pass);
    assert!(rep.rows[1].gap < rep.rows[0].gap);
    assert!((rep.rows[0].gap - 8.775).abs() < 1e-3, "{:?}", rep.rows[0]);
    assert_eq!(doubling_schedule(&int(2), &int(1), 4).unwrap(), [2, 4, 8, 16]);
}
