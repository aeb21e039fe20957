//! Numerical recovery of the threshold structure of the gap function
//! `f_{u,alpha}`: the two critical values of `u`, the sign-change point in
//! the intermediate regime, and counterexamples for blend constants pushed
//! past their sharp values.

use crate::bounds::{blend_coefficient, gap_function_scaled, lambda_star, mu_star, AlphaWeight, GapParams};
use crate::elliptic::Modulus;
use crate::error::{domain, Error, Result};
use crate::means::InterpParam;
use crate::scalar::Scalar;

/// Closest approach of the graded grid to either endpoint.
pub const GRID_EDGE: f64 = 1e-7;
/// Where the geometric end segments hand over to uniform spacing.
const GRID_KNEE: f64 = 1e-2;
/// Points in the witness scan.
pub const WITNESS_GRID: usize = 100_000;
/// Witness values smaller than this are treated as rounding noise.
pub const WITNESS_FLOOR: f64 = 1e-12;

/// Grid on `(0, 1)`: geometric from `GRID_EDGE` to `GRID_KNEE` near both
/// endpoints, uniform in between. Strictly increasing, `n` points.
pub fn graded_grid<T: Scalar>(n: usize) -> Vec<T> {
    assert!(n >= 16, "graded grid needs at least 16 points");
    let end = n / 4;
    let mid = n - 2 * end;
    let ratio = (GRID_KNEE / GRID_EDGE).ln();
    let geometric = |i: usize| GRID_EDGE * (ratio * i as f64 / (end - 1) as f64).exp();
    let mut out = Vec::with_capacity(n);
    out.extend((0..end).map(|i| T::lit(geometric(i))));
    let span = 1.0 - 2.0 * GRID_KNEE;
    out.extend((1..=mid).map(|i| T::lit(GRID_KNEE + span * i as f64 / (mid + 1) as f64)));
    out.extend((0..end).rev().map(|i| T::one() - T::lit(geometric(i))));
    out
}

/// Sign pattern of `f_{u,alpha}` over a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignPattern {
    AllNegative,
    AllPositive,
    /// Positive up to and including `last_positive`, negative afterwards.
    SingleCrossing { last_positive: usize },
}

/// Classifies the sign of `f_{u,alpha}` over `grid`.
///
/// Any pattern other than all-negative, all-positive or a single `+ -> -`
/// crossing is a [`Error::Structure`].
pub fn classify<T: Scalar>(u: T, alpha: AlphaWeight<T>, grid: &[T]) -> Result<SignPattern> {
    let g = GapParams::unchecked(u, alpha);
    let mut first_neg: Option<usize> = None;
    let mut any_pos = false;
    for (i, &r) in grid.iter().enumerate() {
        let v = gap_function_scaled(g, Modulus::new(r)?);
        if v > T::zero() {
            if let Some(j) = first_neg {
                return Err(Error::Structure(format!(
                    "u = {u}, alpha = {}: sign returns to + at r = {r} after - at r = {}",
                    alpha.get(),
                    grid[j]
                )));
            }
            any_pos = true;
        } else if v < T::zero() {
            first_neg.get_or_insert(i);
        } else {
            return Err(Error::Structure(format!("u = {u}: exact zero at r = {r}")));
        }
    }
    Ok(match (any_pos, first_neg) {
        (false, _) => SignPattern::AllNegative,
        (true, None) => SignPattern::AllPositive,
        (true, Some(j)) => SignPattern::SingleCrossing { last_positive: j - 1 },
    })
}

/// Bisection estimates of the two critical `u` values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdEstimate<T> {
    /// Largest `u` found with `f < 0` on the whole grid.
    pub u_low: T,
    /// Smallest `u` found with `f > 0` on the whole grid.
    pub u_high: T,
    pub tolerance: T,
}

/// Bisects on `u` in `(0, 1)`, classifying each candidate by its sign
/// pattern over a graded grid of `grid_n` points.
pub fn estimate_thresholds<T: Scalar>(
    w: AlphaWeight<T>,
    grid_n: usize,
    tol: T,
) -> Result<ThresholdEstimate<T>> {
    if grid_n < 1000 {
        return domain(format!("grid_n = {grid_n} below 1000"));
    }
    if !(tol > T::zero() && tol <= T::lit(1e-6)) {
        return domain(format!("tolerance {tol} outside (0, 1e-6]"));
    }
    let grid = graded_grid::<T>(grid_n);
    let pattern = |u: T| classify(u, w, &grid);

    // Largest u with an all-negative pattern.
    let (mut lo, mut hi) = (T::zero(), T::one());
    while hi - lo > tol {
        let mid = (lo + hi) / T::lit(2.0);
        if pattern(mid)? == SignPattern::AllNegative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let u_low = lo;

    // Smallest u with an all-positive pattern.
    let (mut lo, mut hi) = (T::zero(), T::one());
    while hi - lo > tol {
        let mid = (lo + hi) / T::lit(2.0);
        if pattern(mid)? == SignPattern::AllPositive {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(ThresholdEstimate {
        u_low,
        u_high: hi,
        tolerance: tol,
    })
}

/// Root `eta` of `f_{u,alpha}` in the intermediate regime
/// `(1 - alpha)/4 < u < (1 - alpha)(4/pi - 1)`.
///
/// Bisects the continuous extension of `f / r^2` on `[0, 1]`, whose endpoint
/// values have opposite signs in this regime, until the bracket stops
/// shrinking.
pub fn sign_change_point<T: Scalar>(g: GapParams<T>, tol: T) -> Result<Modulus<T>> {
    let (low, high) = (
        GapParams::lower_threshold(g.alpha()),
        GapParams::upper_threshold(g.alpha()),
    );
    if !(g.u() > low && g.u() < high) {
        return Err(Error::Regime(format!(
            "u = {} outside the intermediate regime ({low}, {high})",
            g.u()
        )));
    }
    let at = |r: T| Modulus::new(r).map(|m| gap_function_scaled(g, m));
    let (mut lo, mut hi) = (T::zero(), T::one());
    loop {
        let mid = (lo + hi) / T::lit(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        if at(mid)? > T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let eta = Modulus::new(lo)?;
    let weight = g.alpha().toader_weight();
    let f_eta = eta.r() * eta.r() * gap_function_scaled(g, eta);
    if f_eta.abs() > tol * weight {
        return Err(Error::Structure(format!("|f(eta)| = {f_eta} exceeds tolerance at eta = {lo}")));
    }
    let step = T::lit(0.01);
    let before = (lo - step).max(lo / T::lit(2.0));
    let after = (lo + step).min((lo + T::one()) / T::lit(2.0));
    if !(before <= T::zero() || at(before)? > T::zero()) || at(after)? >= T::zero() {
        return Err(Error::Structure(format!("crossing at eta = {lo} is not + -> -")));
    }
    Ok(eta)
}

/// Which inequality of the blend bound a witness breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `C(blend) < alpha A + (1 - alpha) T` fails: the gap is positive.
    Lower,
    /// `C(blend) > alpha A + (1 - alpha) T` fails: the gap is negative.
    Upper,
}

/// A modulus at which a blend inequality reverses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness<T> {
    pub r: Modulus<T>,
    /// `f_{u,alpha}(r)`, carrying the violating sign.
    pub value: T,
}

/// Scans a graded grid for the first point where the requested blend
/// inequality fails. The lower side scans upward from `r -> 0`, the upper
/// side downward from `r -> 1`.
pub fn find_violation_witness<T: Scalar>(
    w: AlphaWeight<T>,
    interp: InterpParam<T>,
    side: Side,
) -> Result<Witness<T>> {
    let u = blend_coefficient(interp);
    let g = GapParams::unchecked(u, w);
    let grid = graded_grid::<T>(WITNESS_GRID);
    let floor = T::lit(WITNESS_FLOOR);
    let probe = |r: T| -> Result<Option<Witness<T>>> {
        let m = Modulus::new(r)?;
        let value = r * r * gap_function_scaled(g, m);
        let hit = match side {
            Side::Lower => value > floor,
            Side::Upper => value < -floor,
        };
        Ok(hit.then_some(Witness { r: m, value }))
    };
    let found = match side {
        Side::Lower => grid.iter().find_map(|&r| probe(r).transpose()),
        Side::Upper => grid.iter().rev().find_map(|&r| probe(r).transpose()),
    };
    match found {
        Some(w) => w,
        None => Err(Error::Search(format!(
            "{side:?} side, p = {}, alpha = {}: no violation on {WITNESS_GRID} points",
            interp.get(),
            w.get()
        ))),
    }
}

/// Blend parameters one step `eps` past the sharp constants:
/// `(lambda* + eps, mu* - eps)`.
pub fn perturbed_constants<T: Scalar>(w: AlphaWeight<T>, eps: T) -> Result<(InterpParam<T>, InterpParam<T>)> {
    Ok((
        InterpParam::new(lambda_star(w) + eps)?,
        InterpParam::new(mu_star(w) - eps)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{blend_gap, toader_upper_blend};
    use crate::means::{modulus_to_pair, InterpParam};

    const ALPHAS: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];

    fn weight(alpha: f64) -> AlphaWeight<f64> {
        AlphaWeight::new(alpha).unwrap()
    }

    #[test]
    fn grid_is_strictly_increasing_inside_unit_interval() {
        let grid = graded_grid::<f64>(1000);
        assert_eq!(grid.len(), 1000);
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
        assert!((grid[0] - GRID_EDGE).abs() < 1e-20);
        assert!((1.0 - grid[999] - GRID_EDGE).abs() < 1e-15);
    }

    #[test]
    fn thresholds_match_closed_forms() {
        for alpha in ALPHAS {
            let w = weight(alpha);
            let est = estimate_thresholds(w, 2000, 1e-7).unwrap();
            let low = GapParams::lower_threshold(w);
            let high = GapParams::upper_threshold(w);
            assert!((est.u_low - low).abs() <= 1e-6, "alpha {alpha}: {} vs {low}", est.u_low);
            assert!((est.u_high - high).abs() <= 1e-6, "alpha {alpha}: {} vs {high}", est.u_high);
            assert!(est.u_low <= est.u_high);
        }
    }

    #[test]
    fn small_alpha_upper_threshold_is_toader_constant() {
        let w = weight(1e-12);
        let est = estimate_thresholds(w, 2000, 1e-7).unwrap();
        let beta: f64 = toader_upper_blend();
        let target = (2.0 * beta - 1.0).powi(2);
        assert!((target - (4.0 / std::f64::consts::PI - 1.0)).abs() < 1e-15);
        assert!((est.u_high - target).abs() <= 1e-6);
    }

    #[test]
    fn threshold_arguments_are_checked() {
        let w = weight(0.5);
        assert!(matches!(estimate_thresholds(w, 999, 1e-7), Err(Error::Domain(_))));
        assert!(matches!(estimate_thresholds(w, 1000, 1e-5), Err(Error::Domain(_))));
    }

    #[test]
    fn classification_patterns() {
        let w = weight(0.5);
        let grid = graded_grid::<f64>(1000);
        assert_eq!(classify(0.1, w, &grid).unwrap(), SignPattern::AllNegative);
        assert_eq!(classify(0.2, w, &grid).unwrap(), SignPattern::AllPositive);
        assert!(matches!(
            classify(0.13, w, &grid).unwrap(),
            SignPattern::SingleCrossing { .. }
        ));
    }

    #[test]
    fn sign_change_point_moves_right_with_u() {
        let w = weight(0.5);
        let low = GapParams::lower_threshold(w);
        let high = GapParams::upper_threshold(w);
        let mut last = 0.0;
        for k in 1..=10 {
            let u = low + (high - low) * k as f64 / 11.0;
            let eta = sign_change_point(GapParams::new(u, w).unwrap(), 1e-12).unwrap();
            assert!(eta.r() > last, "u = {u}: eta {} not beyond {last}", eta.r());
            last = eta.r();
        }
    }

    #[test]
    fn sign_change_point_brackets_the_crossing() {
        let w = weight(0.5);
        let u = (GapParams::lower_threshold(w) + GapParams::upper_threshold(w)) / 2.0;
        let g = GapParams::new(u, w).unwrap();
        let eta = sign_change_point(g, 1e-12).unwrap().r();
        let at = |r: f64| gap_function_scaled(g, Modulus::new(r).unwrap());
        assert!(at(eta / 2.0) > 0.0);
        assert!(at((1.0 + eta) / 2.0) < 0.0);
    }

    #[test]
    fn sign_change_point_rejects_other_regimes() {
        let w = weight(0.5);
        for u in [0.1, 0.125, 0.2] {
            let g = GapParams::new(u, w).unwrap();
            assert!(matches!(sign_change_point(g, 1e-12), Err(Error::Regime(_))));
        }
    }

    fn check_witness(w: AlphaWeight<f64>, p: InterpParam<f64>, side: Side) {
        let wit = find_violation_witness(w, p, side).unwrap();
        assert!(wit.value.abs() > 1e-14);
        let pair = modulus_to_pair(wit.r).unwrap();
        let gap = blend_gap(w, p, pair).unwrap();
        match side {
            Side::Lower => assert!(wit.value > 0.0 && gap > 0.0, "{wit:?} gap {gap}"),
            Side::Upper => assert!(wit.value < 0.0 && gap < 0.0, "{wit:?} gap {gap}"),
        }
    }

    #[test]
    fn perturbed_constants_have_witnesses() {
        for alpha in ALPHAS {
            let w = weight(alpha);
            for eps in [1e-2, 1e-3] {
                let (lambda, mu) = perturbed_constants(w, eps).unwrap();
                check_witness(w, lambda, Side::Lower);
                check_witness(w, mu, Side::Upper);
            }
        }
    }

    #[test]
    fn sharp_constants_have_no_witness() {
        let w = weight(0.5);
        let lambda = InterpParam::new(lambda_star(w)).unwrap();
        let mu = InterpParam::new(mu_star(w)).unwrap();
        assert!(matches!(find_violation_witness(w, lambda, Side::Lower), Err(Error::Search(_))));
        assert!(matches!(find_violation_witness(w, mu, Side::Upper), Err(Error::Search(_))));
    }
}
