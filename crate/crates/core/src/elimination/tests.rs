use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::*;
use crate::aux_function::AuxParams;
use crate::exact_arith::highprec::Precision;
use crate::exact_arith::rational::{int, rat};
use crate::linear_forms::linear_form_for;

#[test]
fn combined_form_at_toy_parameters() {
    let (aux, _, lf) = linear_form_for(AuxParams::new(int(2), 11, int(1), 4).unwrap()).unwrap();
    let w = vandermonde_weights(aux.psi(), &default_j(aux.psi().len(), 11).unwrap()).unwrap();
    let form = combined_form(&lf, &w).unwrap();
    assert!(form.eliminated_vanish);
    assert!(!form.coefficients.contains_key(&3));
    assert_eq!(form.coefficients.keys().copied().collect::<Vec<_>>(), [5, 7, 9, 11]);
    assert!(integrality_of_combined(&lf, &w).unwrap().all_pass);

    let prec = Precision::new(60);
    let values: BTreeMap<_, _> = aux
        .zero_set()
        .fractions()
        .iter()
        .map(|&t| (t, lf.evaluate(t, prec).unwrap()))
        .collect();
    let a = form.evaluate(prec).unwrap();
    let b = weighted_hats(&values, &w).unwrap();
    assert!((&a - &b).abs() < prec.int(10).powi(-50), "{a:?} vs {b:?}");
}

#[test]
fn scaling_keeps_the_zero_pattern() {
    let (aux, _, lf) = linear_form_for(AuxParams::new(int(2), 11, int(1), 2).unwrap()).unwrap();
    let w = vandermonde_weights(aux.psi(), &[5]).unwrap();
    let mut w3 = w.clone();
    w3.w.iter_mut().for_each(|x| *x *= BigInt::from(-3));
    let a = combined_form(&lf, &w).unwrap();
    let b = combined_form(&lf, &w3).unwrap();
    let zeros = |f: &CombinedForm| f.coefficients.values().map(|c| c.is_zero()).collect::<Vec<_>>();
    assert_eq!(zeros(&a), zeros(&b));
    assert_eq!(a.constant * int(-3), b.constant);
}

#[test]
fn certificates() {
    let prec = Precision::new(60);
    let c = certify(&rat(9, 4), 10001, &int(2), prec).unwrap();
    assert_eq!(c.verdict, Verdict::Holds);
    assert_eq!(c.count, Some(5));
    assert!(c.analysis_gate && c.a_powers_integral);
    assert_eq!(c.period, "16");

    let c = certify(&int(2), 11, &int(1), prec).unwrap();
    assert_eq!(c.verdict, Verdict::Fails);
    assert_eq!(c.count, None);

    let c = certify(&int(2), 51, &int(1), prec).unwrap();
    assert_eq!(c.verdict, Verdict::Holds);

    let c = certify(&int(2), 7, &int(1), prec).unwrap();
    assert_eq!(c.verdict, Verdict::NotApplicable);

    for (r, s, b) in [(rat(9, 4), 101, 1), (int(2), 1001, 3), (rat(7, 3), 3001, 4)] {
        let c = certify(&r, s, &int(b), prec).unwrap();
        assert!(c.count.unwrap_or(0) <= (s as usize - 1) / 2);
    }
}
