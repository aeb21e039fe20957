//! The two polynomial identities behind the lower-bound comparisons,
//! checked in exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use toader_bounds::bounds::{quadratic_dominance_residual, radical_dominance_residual};

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn fourth_power_of_gap(x: &BigRational) -> BigRational {
    let d = BigRational::one() - x;
    d.clone() * d.clone() * d.clone() * d
}

#[test]
fn residuals_are_fourth_powers_exactly() {
    for k in 0..=1001 {
        let x = frac(k, 1001);
        let expected = fourth_power_of_gap(&x);
        assert_eq!(quadratic_dominance_residual(x.clone()), expected, "x = {k}/1001");
        assert_eq!(radical_dominance_residual(x.clone()), expected, "x = {k}/1001");
    }
}

#[test]
fn residual_endpoints() {
    assert_eq!(quadratic_dominance_residual(BigRational::zero()), BigRational::one());
    assert_eq!(radical_dominance_residual(BigRational::zero()), BigRational::one());
    assert!(quadratic_dominance_residual(BigRational::one()).is_zero());
    assert_eq!(quadratic_dominance_residual(frac(1, 2)), frac(1, 16));
    assert_eq!(radical_dominance_residual(frac(1, 4)), frac(81, 256));
}

#[test]
fn residuals_in_integers() {
    // Both are (1 - x)^4 as integer polynomials too.
    for x in -20i64..=20 {
        assert_eq!(quadratic_dominance_residual(x), (1 - x).pow(4));
        assert_eq!(radical_dominance_residual(x), (1 - x).pow(4));
    }
}
