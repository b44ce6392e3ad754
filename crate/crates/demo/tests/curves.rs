use oddzeta_demo::{density_curve, objective_curve, saddle_curve};

#[test]
fn saddle_curve_crosses_zero_at_x0() {
    let c = saddle_curve("2", 51, "1", 200).unwrap();
    assert!(c.criterion);
    assert!(c.x0 < c.x1);
    // log f decreases through 0 at x₀ on (0, x₁)
    let below = c.x.iter().take_while(|&&x| x < c.x1).count();
    assert!(c.log_f[..below].windows(2).all(|w| w[1] < w[0]));
    let i = c.x.iter().position(|&x| x > c.x0).unwrap();
    assert!(c.log_f[i - 1] > 0.0 && c.log_f[i] < 0.0);
    assert!((c.log_g_x0 + 76.3).abs() < 0.1, "{}", c.log_g_x0);
}

#[test]
fn saddle_curve_rejects_bad_input() {
    assert!(saddle_curve("2", 8, "1", 10).is_err());
    assert!(saddle_curve("two", 51, "1", 10).is_err());
    assert!(saddle_curve("2", 11, "2", 10).unwrap_err().contains("saddle"));
}

#[test]
fn density_curve_matches_known_counts() {
    let c = density_curve(1000, 10).unwrap();
    assert_eq!(c.bound.len(), 10);
    assert_eq!(*c.bound.last().unwrap(), 1000);
    assert_eq!(*c.size.last().unwrap(), 1941);
    assert!((c.kappa - 1.9435964).abs() < 1e-7);
    let small = density_curve(2, 2).unwrap();
    assert_eq!(small.size, vec![2, 5]);
}

#[test]
fn objective_curve_peaks_at_r0() {
    let c = objective_curve(1.0, 4.0, 301).unwrap();
    assert!((c.r0 - 2.263884).abs() < 1e-6);
    let (imax, _) = c
        .value
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .unwrap();
    assert!((c.r[imax] - c.r0).abs() <= 0.01);
    assert!((c.value[imax] - c.max_value).abs() < 1e-4);
    assert!(objective_curve(2.0, 1.0, 10).is_err());
}
