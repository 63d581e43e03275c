use std::f64::consts::FRAC_PI_2;

use mcshane_core::kernel::{
    g_atanh_form, g_func, g_log_form, length_from_trace, mirzakhani_d, mirzakhani_r,
    principal_atanh, s_atanh_form, s_func, s_log_form,
};
use mcshane_core::ComplexValue;
use proptest::prelude::*;

fn re(x: f64) -> ComplexValue {
    ComplexValue::real(x)
}

/// Half of a complex length: real `≥ 0` or `i·(0, π/2]`.
fn half_length() -> impl Strategy<Value = ComplexValue> {
    prop_oneof![
        (0.0..6.0f64).prop_map(ComplexValue::real),
        (1e-6..=FRAC_PI_2).prop_map(ComplexValue::imag),
        Just(ComplexValue::ZERO),
    ]
}

proptest! {
    #[test]
    fn partition_of_a_geodesic(x in 0.0..8.0f64, y in 0.0..8.0f64, z in 0.0..8.0f64) {
        let sum = g_func(re(x), re(y), re(z)).unwrap()
            + s_func(re(x), re(y), re(z)).unwrap()
            + s_func(re(x), re(z), re(y)).unwrap();
        prop_assert!((sum - re(x)).abs() <= 1e-13 * (1.0 + x));
    }

    #[test]
    fn real_values_are_real_and_non_negative(x in 0.0..8.0f64, y in 0.0..8.0f64, z in 0.0..8.0f64) {
        let g = g_func(re(x), re(y), re(z)).unwrap();
        let s = s_func(re(x), re(y), re(z)).unwrap();
        prop_assert_eq!(g.im, 0.0);
        prop_assert_eq!(s.im, 0.0);
        prop_assert!(g.re >= 0.0 && s.re >= 0.0);
    }

    #[test]
    fn g_is_symmetric_in_its_last_two_slots(x in half_length(), y in half_length(), z in half_length()) {
        if let (Ok(a), Ok(b)) = (g_func(x, y, z), g_func(x, z, y)) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn dual_forms_agree(x in half_length(), y in half_length(), z in half_length()) {
        if let (Ok(a), Ok(b)) = (g_atanh_form(x, y, z), g_log_form(x, y, z)) {
            prop_assert!((a - b).abs() <= 1e-12, "G {a} vs {b}");
        }
        if let (Ok(a), Ok(b)) = (s_atanh_form(x, y, z), s_log_form(x, y, z)) {
            prop_assert!((a - b).abs() <= 1e-12, "S {a} vs {b}");
        }
    }

    #[test]
    fn dispatching_forms_match_the_explicit_ones(x in half_length(), y in half_length(), z in half_length()) {
        if let (Ok(a), Ok(b)) = (g_func(x, y, z), g_log_form(x, y, z)) {
            prop_assert!((a - b).abs() <= 1e-12);
        }
        if let (Ok(a), Ok(b)) = (s_func(x, y, z), s_log_form(x, y, z)) {
            prop_assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn atanh_inverts_tanh(a in -3.0..3.0f64, b in -1.5..1.5f64) {
        let w = ComplexValue::new(a, b);
        let back = principal_atanh(w.tanh()).unwrap();
        prop_assert!((back - w).abs() <= 1e-11);
    }

    #[test]
    fn atanh_imaginary_part_is_principal(a in -5.0..5.0f64, b in -5.0..5.0f64) {
        if let Ok(v) = principal_atanh(ComplexValue::new(a, b)) {
            prop_assert!(v.im > -FRAC_PI_2 && v.im <= FRAC_PI_2);
        }
    }

    #[test]
    fn lengths_invert_traces(l in 1e-3..40.0f64) {
        let t = 2.0 * (0.5 * l).cosh();
        prop_assert!((length_from_trace(t).unwrap() - l).abs() <= 1e-9 * (1.0 + l));
    }

    #[test]
    fn mirzakhani_wrappers_partition(a in 0.0..10.0f64, b in 0.0..10.0f64, c in 0.0..10.0f64) {
        // with ℛ(a,b,c) = a/2 − 2S(a/2,c/2,b/2) the partition reads 𝒟 = ℛ(a,b,c) + ℛ(a,c,b)
        let d = mirzakhani_d(re(a), re(b), re(c)).unwrap();
        let r1 = mirzakhani_r(re(a), re(b), re(c)).unwrap();
        let r2 = mirzakhani_r(re(a), re(c), re(b)).unwrap();
        prop_assert!(((r1 + r2) - d).abs() <= 1e-12 * (1.0 + a));
    }
}

#[test]
fn frozen_values() {
    // mpmath, 30 digits
    let g = g_func(re(1.0), re(1.0), re(1.0)).unwrap();
    let s = s_func(re(1.0), re(1.0), re(1.0)).unwrap();
    assert!((g.re - 0.264_674_335_944_480_78).abs() < 1e-15);
    assert!((s.re - 0.367_662_832_027_759_6).abs() < 1e-15);
    let g = g_func(re(1.0), ComplexValue::imag(FRAC_PI_2), re(1.0)).unwrap();
    assert!(
        (g - ComplexValue::new(0.337_498_626_321_067_8, -0.650_880_168_023_007_5)).abs() < 1e-15
    );
    assert!((length_from_trace(3.0).unwrap() - 1.924_847_300_238_413_9).abs() < 1e-15);
    assert!((length_from_trace(6.0).unwrap() - 3.525_494_348_078_172).abs() < 1e-15);
}
