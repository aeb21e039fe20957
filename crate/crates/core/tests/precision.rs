//! The same routines instantiated at three precisions.

use toader_bounds::bounds::{envelope, lambda_star, mu_star, AlphaWeight, EnvelopeKind};
use toader_bounds::elliptic::{ell_e, ell_k, Modulus};
use toader_bounds::means::{toader, PositivePair};
use toader_bounds::{DoubleDouble, Error, ModulusDd, Scalar};

// mpmath, 30 digits.
const E_HALF: f64 = 1.4674622093394272;
const K_HALF: f64 = 1.6857503548125960;

fn e_at<T: Scalar>(r: f64) -> T {
    ell_e(Modulus::new(T::lit(r)).unwrap()).unwrap().value
}

#[test]
fn elliptic_values_agree_across_precisions() {
    let e32: f32 = e_at(0.5);
    let e64: f64 = e_at(0.5);
    let edd: DoubleDouble = e_at(0.5);
    assert!((f64::from(e32) - E_HALF).abs() < 1e-6);
    assert!((e64 - E_HALF).abs() < 4e-16);
    assert!((edd.as_f64() - E_HALF).abs() < 4e-16);
    let k: f64 = ell_k(Modulus::new(0.5).unwrap()).unwrap().value;
    assert!((k - K_HALF).abs() < 4e-16);
}

#[test]
fn double_double_resolves_envelope_margins_near_zero() {
    // E - lower is of order r^8 for this envelope: ~9.6e-29 at r = 1e-3.
    let m = ModulusDd::new(DoubleDouble::from(1e-3)).unwrap();
    let env = envelope::<DoubleDouble>("corollary33").unwrap();
    let e = ell_e(m).unwrap().value;
    let margin = (e - env.lower_at(m)).as_f64();
    assert!((margin / 9.587e-29 - 1.0).abs() < 1e-3, "{margin:e}");
}

#[test]
fn toader_mean_in_double_double() {
    let p = PositivePair::new(DoubleDouble::from(2.0), DoubleDouble::from(1.0)).unwrap();
    // (4/pi) E(sqrt(3)/2), mpmath.
    assert!((toader(p).as_f64() - 1.5419644251900400).abs() < 4e-16);
}

#[test]
fn sharp_constants_are_generic() {
    let w32 = AlphaWeight::new(0.75f32).unwrap();
    let w64 = AlphaWeight::new(0.75f64).unwrap();
    assert_eq!(lambda_star(w32), 0.625f32);
    assert_eq!(lambda_star(w64), 0.625);
    assert!((f64::from(mu_star(w32)) - mu_star(w64)).abs() < 1e-6);
}

#[test]
fn envelope_lookup() {
    for kind in EnvelopeKind::ALL {
        assert_eq!(envelope::<f64>(kind.id()).unwrap().kind, kind);
    }
    assert!(matches!(envelope::<f64>("missing"), Err(Error::Lookup(_))));
}
