use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::exact_arith::rational::format_rational;
use crate::exact_arith::rational::int;

use super::fpoly::arif_grid;
use super::function::AuxFunction;

#[derive(Debug, Clone, Serialize)]
pub struct SymmetryReport {
    pub points: Vec<String>,
    pub holds: bool,
}

/// Random rational with numerator and denominator at most 100 in absolute value, away
/// from the poles `0, …, -n`.
pub fn random_test_point(rng: &mut StdRng, n: u64) -> BigRational {
    loop {
        let num: i64 = rng.gen_range(-100..=100);
        let den: i64 = rng.gen_range(1..=100);
        let t = BigRational::new(num.into(), den.into());
        let pole = t.is_integer() && t <= int(0) && t >= int(-(n as i64));
        if !pole {
            return t;
        }
    }
}

/// `R_n(-t-n) = -R_n(t)` at 20 seeded random points.
pub fn symmetry_check(aux: &AuxFunction, seed: u64) -> SymmetryReport {
    let n = aux.params().n;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut points = Vec::new();
    let mut holds = true;
    for _ in 0..20 {
        let t = random_test_point(&mut rng, n);
        let reflected = -&t - int(n as i64);
        let lhs = aux.evaluate_at(&reflected).expect("reflection avoids poles");
        let rhs = aux.evaluate_at(&t).expect("not a pole");
        holds &= lhs == -rhs;
        points.push(format_rational(&t));
    }
    SymmetryReport { points, holds }
}

#[derive(Debug, Clone, Serialize)]
pub struct ArifReport {
    pub checked: usize,
    /// `(a/b, ℓ, k)` where `d_n^ℓ [t^ℓ] F̃_{b,a}(t-k)` is not an integer.
    pub failures: Vec<(String, usize, u64)>,
}

/// The integrality of every `F̃_{b,a}` coefficient on the full `(ℓ, k)` grid.
pub fn arif_report(aux: &AuxFunction) -> ArifReport {
    let n = aux.params().n;
    let mut checked = 0;
    let mut failures = Vec::new();
    for f in aux.fpolys() {
        checked += (f.degree() + 2) * (n as usize + 1);
        for (l, k) in arif_grid(f, n) {
            failures.push((f.fraction.to_string(), l, k));
        }
    }
    ArifReport { checked, failures }
}
