use std::collections::BTreeMap;

use num_rational::BigRational;

use super::*;
use crate::exact_arith::highprec::Precision;
use crate::exact_arith::rational::{int, parse_rational, rat};
use crate::totient_sets::Fraction;

fn q(s: &str) -> BigRational {
    parse_rational(s).unwrap()
}

fn toy() -> (AuxFunction, PartialFraction, LinearForm) {
    linear_form_for(AuxParams::new(int(2), 7, int(1), 2).unwrap()).unwrap()
}

#[test]
fn toy_fixtures() {
    let (_, _, lf) = toy();
    assert_eq!(lf.rho[&3], q("13229942321196"));
    assert_eq!(lf.rho[&5], q("8262328166640"));
    assert_eq!(lf.rho[&7], q("3329768736000"));
    assert_eq!(lf.rho0[&Fraction::new(1, 2)], q("-803323940955704"));
    assert_eq!(lf.rho0[&Fraction::one()], q("-55656301582519/2"));
}

#[test]
fn larger_fixtures() {
    let (_, _, lf) = linear_form_for(AuxParams::new(int(2), 11, int(1), 4).unwrap()).unwrap();
    assert_eq!(lf.rho[&3], q("18863248393272215336190058121188866937865/248832"));
    assert_eq!(lf.rho[&5], q("19801436745785794237624257662329297235/576"));
    assert_eq!(lf.rho[&7], q("119142295982351102392943118599843875/12"));
    assert_eq!(lf.rho[&9], q("1956202588176217001075273985337500"));
    assert_eq!(lf.rho[&11], q("207021578853564587423050740000000"));
    assert_eq!(
        lf.rho0[&Fraction::new(1, 2)],
        q("-4971650114200741995904750376514285517984445/1119744")
    );
    assert_eq!(
        lf.rho0[&Fraction::one()],
        q("-6638448208644858620021459151705860524837895/47775744")
    );
    assert!(verify_integrality(&lf).all_pass);

    let (_, _, lf) = linear_form_for(AuxParams::new(rat(9, 4), 11, int(1), 8).unwrap()).unwrap();
    assert_eq!(
        lf.rho[&11],
        q("6396034378402991383145645291507096643354965674289414706489073931784302136199309737057496287380766720000000000000000000")
    );
    assert!(verify_integrality(&lf).all_pass);
}

#[test]
fn rho0_direct_summation() {
    let (_, pf, lf) = toy();
    let theta = int(1);
    let mut direct = int(0);
    for k in 0..=2u64 {
        for l in 0..=k {
            for i in 1..=7u32 {
                direct -= pf.coeff(i, k) / (&theta + int(l as i64)).pow(i as i32);
            }
        }
    }
    assert_eq!(lf.rho0[&Fraction::one()], direct);
}

#[test]
fn integrality_and_fault_injection() {
    let (aux, pf, lf) = toy();
    let rep = verify_integrality(&lf);
    assert!(rep.all_pass);
    let bad = build_linear_form(&pf.perturbed(3, 0, &rat(1, 7)), aux.zero_set()).unwrap();
    let rep = verify_integrality(&bad);
    let failed: Vec<&str> = rep
        .entries
        .iter()
        .filter(|e| !e.integral)
        .map(|e| e.label.as_str())
        .collect();
    assert_eq!(failed, ["rho_3", "rho_0,1/2", "rho_0,1/1"]);
    assert!(rep.entries.iter().filter(|e| !e.integral).all(|e| e.leftover == "7"));
    // an even-index perturbation breaks the vanishing sums
    assert!(build_linear_form(&pf.perturbed(2, 0, &rat(1, 7)), aux.zero_set()).is_err());
}

#[test]
fn identity_at_toy_parameters() {
    let (aux, _, lf) = toy();
    let prec = Precision::new(60);
    for &theta in aux.zero_set().fractions() {
        let check = verify_identity(&lf, &aux, theta, 10_000, prec).unwrap();
        assert!(check.pass, "{:?}", check.summary(30));
    }
    let v = lf.evaluate(Fraction::new(1, 2), prec).unwrap();
    assert_eq!(v.to_scientific(30), "1.22564930115147456442313729447e3");
    let v = lf.evaluate(Fraction::one(), prec).unwrap();
    assert_eq!(v.to_scientific(30), "1.22378724077167120814298785152e3");
}

#[test]
fn tail_bound_scales_with_degree() {
    let (aux, _, _) = toy();
    let prec = Precision::new(30);
    let a = r_n_theta_direct(&aux, Fraction::one(), 500, prec);
    let b = r_n_theta_direct(&aux, Fraction::one(), 1000, prec);
    let ratio = (&a.tail_bound / &b.tail_bound).to_f64();
    assert!((ratio - 4.0).abs() < 0.2, "{ratio}");
}

#[test]
fn first_terms_vanish() {
    let (aux, _, _) = toy();
    let prec = Precision::new(30);
    for &theta in aux.zero_set().fractions() {
        for m in 1..4 {
            let t = prec.rational(&(int(m) + theta.to_rational()));
            assert!(evaluate_real(&aux, &t).is_zero());
        }
    }
}

#[test]
fn r_hat_sums_cosets() {
    let prec = Precision::new(30);
    let mut values = BTreeMap::new();
    values.insert(Fraction::new(1, 2), prec.int(3));
    values.insert(Fraction::one(), prec.int(5));
    assert_eq!(r_hat(&values, 1).unwrap().to_f64(), 5.0);
    assert_eq!(r_hat(&values, 2).unwrap().to_f64(), 8.0);
    assert!(r_hat(&values, 3).is_err());
}
