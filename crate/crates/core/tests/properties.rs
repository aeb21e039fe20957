use proptest::prelude::*;

use toader_bounds::elliptic::{ell_e, ell_k, landen_image, landen_rhs};
use toader_bounds::means::{
    arithmetic, contraharmonic, contraharmonic_excess, j_interp, power_mean, toader, toader_excess,
};
use toader_bounds::{InterpParam64, Modulus64, PositivePair64};

fn positive() -> impl Strategy<Value = f64> {
    (-3.0f64..3.0).prop_map(|e| 10f64.powf(e))
}

fn pair() -> impl Strategy<Value = PositivePair64> {
    (positive(), positive()).prop_map(|(a, b)| PositivePair64::new(a, b).unwrap())
}

fn distinct_pair() -> impl Strategy<Value = PositivePair64> {
    pair().prop_filter("arguments too close", |p| (p.a() - p.b()).abs() > 1e-4 * p.max())
}

fn ulps(x: f64, y: f64) -> f64 {
    (x - y).abs() / (f64::EPSILON * x.abs().max(y.abs()))
}

type Mean = fn(PositivePair64) -> f64;

const MEANS: [(&str, Mean); 7] = [
    ("A", arithmetic),
    ("C", contraharmonic),
    ("T", toader),
    ("M_3/2", |p| power_mean(p, 1.5)),
    ("M_-2", |p| power_mean(p, -2.0)),
    ("M_0", |p| power_mean(p, 0.0)),
    ("J(0.7)", |p| j_interp(InterpParam64::new(0.7).unwrap(), p)),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn means_are_symmetric(p in pair()) {
        for (name, f) in MEANS {
            prop_assert_eq!(f(p), f(p.swapped()), "{}", name);
        }
    }

    #[test]
    fn means_are_homogeneous(p in pair(), s in positive()) {
        let scaled = PositivePair64::new(s * p.a(), s * p.b()).unwrap();
        for (name, f) in MEANS {
            let (lhs, rhs) = (f(scaled), s * f(p));
            prop_assert!(ulps(lhs, rhs) <= 4.0, "{}: {} vs {} ({} ulps)", name, lhs, rhs, ulps(lhs, rhs));
        }
    }

    #[test]
    fn means_lie_between_min_and_max(p in pair()) {
        for (name, f) in MEANS {
            let v = f(p);
            prop_assert!(v >= p.min() * (1.0 - 1e-15) && v <= p.max() * (1.0 + 1e-15), "{}", name);
        }
    }

    #[test]
    fn toader_sits_between_arithmetic_and_contraharmonic(p in distinct_pair()) {
        let t = toader_excess(p);
        prop_assert!(t > 0.0);
        prop_assert!(t < contraharmonic_excess(p));
    }

    #[test]
    fn power_mean_is_continuous_at_zero(p in pair()) {
        let (near, at) = (power_mean(p, 1e-9), power_mean(p, 0.0));
        prop_assert!((near - at).abs() < 1e-7 * at, "{} vs {}", near, at);
    }

    #[test]
    fn power_mean_nondecreasing_in_exponent(p in pair(), q in -4.0f64..4.0, dq in 0.01f64..2.0) {
        let lo = power_mean(p, q);
        let hi = power_mean(p, q + dq);
        prop_assert!(hi >= lo * (1.0 - 4.0 * f64::EPSILON), "M_{} = {} > M_{} = {}", q, lo, q + dq, hi);
    }

    #[test]
    fn interpolating_mean_increases(p in distinct_pair()) {
        let mut last = f64::NEG_INFINITY;
        for k in 0..100 {
            let x = 0.5 + 0.5 * k as f64 / 99.0;
            let v = j_interp(InterpParam64::new(x).unwrap(), p);
            prop_assert!(v > last, "x = {}", x);
            last = v;
        }
    }

    #[test]
    fn modulus_complement_is_consistent(r in 0.0f64..=1.0) {
        let m = Modulus64::new(r).unwrap();
        let rc = m.complement();
        prop_assert!((0.0..=1.0).contains(&rc));
        prop_assert!((r * r + rc * rc - 1.0).abs() <= 2.0 * f64::EPSILON);
        let back = m.complemented();
        prop_assert_eq!(back.complement(), r);
    }

    #[test]
    fn modulus_rejects_outside_unit_interval(r in prop_oneof![-10.0f64..-1e-300, 1.0000000001f64..10.0]) {
        prop_assert!(Modulus64::new(r).is_err());
    }

    #[test]
    fn k_increases_and_e_decreases(r1 in 0.0f64..0.999, dr in 1e-6f64..1e-3) {
        let (m1, m2) = (Modulus64::new(r1).unwrap(), Modulus64::new(r1 + dr).unwrap());
        prop_assert!(ell_k(m2).unwrap().value > ell_k(m1).unwrap().value);
        prop_assert!(ell_e(m2).unwrap().value < ell_e(m1).unwrap().value);
    }

    #[test]
    fn landen_relation(r in 0.0f64..0.99) {
        let m = Modulus64::new(r).unwrap();
        let lhs = ell_e(landen_image(m)).unwrap().value;
        prop_assert!((lhs - landen_rhs(m).unwrap()).abs() <= 1e-11);
    }
}
