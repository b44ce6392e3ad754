//! Browser demo: three curves computed by the core crate, returned as JSON strings.
//!
//! The plain functions are usable natively; the `wasm_bindgen` wrappers turn errors into
//! JS exceptions.

use std::str::FromStr;

use num_rational::BigRational;
use oddzeta::asymptotics::{objective, optimize_r, solve_saddle, SaddleProblem};
use oddzeta::exact_arith::highprec::Precision;
use oddzeta::exact_arith::euler_phi;
use oddzeta::linear_forms::zeta_ratio;
use oddzeta::totient_sets::build_denominator_set;
use serde::Serialize;
use wasm_bindgen::prelude::*;

const DIGITS: usize = 30;

#[derive(Debug, Serialize)]
pub struct SaddleCurve {
    pub x0: f64,
    pub x1: f64,
    pub log_g_x0: f64,
    pub threshold: i64,
    pub criterion: bool,
    pub x: Vec<f64>,
    pub log_f: Vec<f64>,
    pub log_g: Vec<f64>,
}

/// `log f` and `log g` on a log-spaced grid from `x₀/1000` to `10·x₁`.
pub fn saddle_curve(r: &str, s: u64, bound: &str, points: usize) -> Result<SaddleCurve, String> {
    let r = BigRational::from_str(r).map_err(|_| format!("r = {r:?} is not a rational"))?;
    let bound = BigRational::from_str(bound).map_err(|_| format!("B = {bound:?} is not a rational"))?;
    let prec = Precision::new(DIGITS);
    let psi = build_denominator_set(&bound).map_err(|e| e.to_string())?;
    let sp = SaddleProblem::new(r, s, &psi).map_err(|e| e.to_string())?;
    let sol = solve_saddle(&sp, prec).map_err(|e| e.to_string())?;
    let lo = sol.x0.log10_abs() - 3.0;
    let hi = sol.x1.log10_abs() + 1.0;
    let points = points.clamp(2, 2000);
    let mut curve = SaddleCurve {
        x0: sol.x0.to_f64(),
        x1: sol.x1.to_f64(),
        log_g_x0: sol.log_g_x0.to_f64(),
        threshold: sol.threshold,
        criterion: sol.criterion,
        x: Vec::with_capacity(points),
        log_f: Vec::with_capacity(points),
        log_g: Vec::with_capacity(points),
    };
    for i in 0..points {
        let e = lo + (hi - lo) * i as f64 / (points - 1) as f64;
        let x = prec.int(10).powf(&prec.from_f64(e));
        curve.log_f.push(sp.log_f(&x).to_f64());
        curve.log_g.push(sp.log_g(&x).to_f64());
        curve.x.push(x.to_f64());
    }
    Ok(curve)
}

#[derive(Debug, Serialize)]
pub struct DensityCurve {
    pub kappa: f64,
    pub bound: Vec<u64>,
    pub size: Vec<u64>,
    pub ratio: Vec<f64>,
}

/// `|Ψ_B|/B` at `points` evenly spaced integers `B <= max_bound`.
pub fn density_curve(max_bound: u64, points: usize) -> Result<DensityCurve, String> {
    if !(1..=1_000_000).contains(&max_bound) {
        return Err("max B must lie in [1, 10^6]".into());
    }
    let psi = build_denominator_set(&BigRational::from_integer(max_bound.into()))
        .map_err(|e| e.to_string())?;
    let mut phis: Vec<u64> = psi.members().iter().map(|&b| euler_phi(b)).collect();
    phis.sort_unstable();
    let points = points.clamp(1, 5000) as u64;
    let mut curve = DensityCurve {
        kappa: zeta_ratio(Precision::new(DIGITS)).to_f64(),
        bound: Vec::new(),
        size: Vec::new(),
        ratio: Vec::new(),
    };
    for i in 1..=points {
        let b = (max_bound * i / points).max(1);
        if curve.bound.last() == Some(&b) {
            continue;
        }
        let size = phis.partition_point(|&p| p <= b) as u64;
        curve.bound.push(b);
        curve.size.push(size);
        curve.ratio.push(size as f64 / b as f64);
    }
    Ok(curve)
}

#[derive(Debug, Serialize)]
pub struct ObjectiveCurve {
    pub r0: f64,
    pub max_value: f64,
    pub c0: f64,
    pub r: Vec<f64>,
    pub value: Vec<f64>,
}

/// `((r+1)log(r+1) - r log r - 1)/(2r+1)` on `[lo, hi]`, with its maximizer.
pub fn objective_curve(lo: f64, hi: f64, points: usize) -> Result<ObjectiveCurve, String> {
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err("need 0 < lo < hi".into());
    }
    let prec = Precision::new(DIGITS);
    let c = optimize_r(prec);
    let points = points.clamp(2, 5000);
    let r: Vec<f64> = (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect();
    let value = r.iter().map(|&x| objective(&prec.from_f64(x)).to_f64()).collect();
    Ok(ObjectiveCurve {
        r0: c.r0.to_f64(),
        max_value: c.max_value.to_f64(),
        c0: c.c0.to_f64(),
        r,
        value,
    })
}

fn to_js<T: Serialize>(v: Result<T, String>) -> Result<String, JsError> {
    let v = v.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&v).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = saddleCurve)]
pub fn saddle_curve_js(r: &str, s: u32, bound: &str, points: u32) -> Result<String, JsError> {
    to_js(saddle_curve(r, s as u64, bound, points as usize))
}

#[wasm_bindgen(js_name = densityCurve)]
pub fn density_curve_js(max_bound: u32, points: u32) -> Result<String, JsError> {
    to_js(density_curve(max_bound as u64, points as usize))
}

#[wasm_bindgen(js_name = objectiveCurve)]
pub fn objective_curve_js(lo: f64, hi: f64, points: u32) -> Result<String, JsError> {
    to_js(objective_curve(lo, hi, points as usize))
}
