//! Invariant suites that check every claimed identity, monotonicity and
//! inequality numerically, each producing a [`VerificationReport`].
//!
//! Tolerance checks run in `f64`. Strict inequalities whose margin shrinks
//! faster than `f64` can resolve (the envelope lower bounds meet `E(r)` at
//! order `r^8`) are decided in [`DoubleDouble`].

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{
    blend_gap, blend_gap_reduced, blend_gap_scaled, envelope, gap_function, gap_slope, lambda_star,
    mu_star, quadratic_dominance_residual, radical_dominance_residual, rearranged_blend_bounds,
    toader_upper_blend, AlphaWeight, BoundEnvelope, EnvelopeKind, GapParams,
};
use crate::dd::DoubleDouble;
use crate::elliptic::{
    d_e_minus_rc2k, d_ell_e, d_ell_k, d_k_minus_e, e_minus_rc2k, e_minus_rc2k_over_r2, ell_e,
    ell_e_oracle, ell_k, ell_k_oracle, k_minus_e, landen_image, landen_rhs, two_e_minus_rc2k, Modulus,
};
use crate::error::{Error, Result};
use crate::means::{
    contraharmonic_excess, power_mean_excess, toader_excess, InterpParam, PositivePair,
};
use crate::scalar::Scalar;
use crate::sharpness::{estimate_thresholds, find_violation_witness, perturbed_constants, sign_change_point, Side};

/// Weights exercised by the blend-bound suites.
pub const ALPHAS: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];
/// Sampled pairs are log-uniform on this interval.
pub const PAIR_RANGE: (f64, f64) = (1e-3, 1e3);

const ORACLE_TOL: f64 = 1e-12;
const FD_STEP: f64 = 1e-6;

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub points_checked: usize,
    pub failures: usize,
    /// Smallest margin seen; positive margins are passes.
    pub worst_margin: f64,
    /// Inputs at the worst margin.
    pub witness: Option<String>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite:          {}", self.suite)?;
        writeln!(f, "status:         {}", if self.passed() { "PASS" } else { "FAIL" })?;
        writeln!(f, "points_checked: {}", self.points_checked)?;
        writeln!(f, "failures:       {}", self.failures)?;
        writeln!(f, "worst_margin:   {:e}", self.worst_margin)?;
        writeln!(f, "witness:        {}", self.witness.as_deref().unwrap_or("-"))?;
        write!(f, "elapsed_ms:     {}", self.elapsed_ms)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// AGM against quadrature, endpoint values, monotonicity of K and E.
    Oracle,
    /// Closed-form derivatives against central differences.
    Derivatives,
    /// The ascending Landen relation for E.
    Landen,
    /// Monotonicity and ranges of `(E - r'^2 K)/r^2` and `2E - r'^2 K`.
    Lemma21,
    /// Threshold structure of the gap function.
    Lemma22,
    /// `A < T < C`, `M_{3/2} < T < M_{ln2/ln(pi/2)}`, `C > M_2`.
    MeanOrder,
    /// Blend bounds at the sharp constants and failure beyond them.
    Theorem31,
    /// The contraharmonic-blend envelope of `E`.
    Corollary33,
    /// The competitor envelopes.
    Envelopes,
    /// Lower-bound dominance and the two polynomial identities.
    Dominance,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Oracle,
        Suite::Derivatives,
        Suite::Landen,
        Suite::Lemma21,
        Suite::Lemma22,
        Suite::MeanOrder,
        Suite::Theorem31,
        Suite::Corollary33,
        Suite::Envelopes,
        Suite::Dominance,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Derivatives => "derivatives",
            Suite::Landen => "landen",
            Suite::Lemma21 => "lemma21",
            Suite::Lemma22 => "lemma22",
            Suite::MeanOrder => "meanorder",
            Suite::Theorem31 => "theorem31",
            Suite::Corollary33 => "corollary33",
            Suite::Envelopes => "envelopes",
            Suite::Dominance => "dominance",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|k| k.id() == s)
            .ok_or_else(|| Error::Lookup(s.to_string()))
    }
}

/// Sampling controls for the randomized suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            samples: 10_000,
            seed: 1,
        }
    }
}

/// Running count of checks with the worst margin seen.
struct Tally {
    points: usize,
    failures: usize,
    worst: f64,
    witness: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            points: 0,
            failures: 0,
            worst: f64::INFINITY,
            witness: None,
        }
    }

    fn check(&mut self, margin: f64, pass: bool, at: impl FnOnce() -> String) {
        self.points += 1;
        if !pass {
            self.failures += 1;
        }
        if margin < self.worst || (!pass && self.failures == 1) || margin.is_nan() {
            self.worst = margin;
            self.witness = Some(at());
        }
    }

    /// `|err| <= tol`, margin `tol - |err|`.
    fn within(&mut self, err: f64, tol: f64, at: impl FnOnce() -> String) {
        let margin = tol - err.abs();
        self.check(margin, margin >= 0.0, at);
    }

    /// Strict positivity of `margin`, resolved above `8 * roundoff * scale`.
    fn strict<T: Scalar>(&mut self, margin: T, scale: T, at: impl FnOnce() -> String) {
        let floor = T::lit(8.0) * T::roundoff() * scale.abs();
        self.check(margin.as_f64(), margin > floor, at);
    }

    /// `margin >= -8 * roundoff * scale`.
    fn weak<T: Scalar>(&mut self, margin: T, scale: T, at: impl FnOnce() -> String) {
        let floor = T::lit(8.0) * T::roundoff() * scale.abs();
        self.check(margin.as_f64(), margin >= -floor, at);
    }

    /// Records a hard error from a lower layer as a failure.
    fn fail(&mut self, err: &Error, at: impl FnOnce() -> String) {
        self.points += 1;
        self.failures += 1;
        if self.failures == 1 {
            self.worst = f64::NEG_INFINITY;
            self.witness = Some(format!("{}: {err}", at()));
        }
    }

    fn finish(self, suite: Suite, start: Instant) -> VerificationReport {
        VerificationReport {
            suite: suite.id().to_string(),
            points_checked: self.points,
            failures: self.failures,
            worst_margin: self.worst,
            witness: self.witness,
            elapsed_ms: start.elapsed().as_millis(),
        }
    }
}

/// `r = k / 1000` for `k = 1..=999`.
pub fn open_grid() -> impl Iterator<Item = f64> {
    (1..=999).map(|k| k as f64 / 1000.0)
}

/// Log-uniform pairs on [`PAIR_RANGE`] with `a != b`.
pub fn random_pairs(n: usize, seed: u64) -> Vec<PositivePair<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = (PAIR_RANGE.0.ln(), PAIR_RANGE.1.ln());
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let a = rng.gen_range(lo..hi).exp();
        let b = rng.gen_range(lo..hi).exp();
        if a != b {
            out.push(PositivePair::new(a, b).expect("sampled from a positive range"));
        }
    }
    out
}

fn md(r: f64) -> Modulus<f64> {
    Modulus::new(r).expect("grid point in [0, 1]")
}

fn mdd(r: f64) -> Modulus<DoubleDouble> {
    Modulus::new(DoubleDouble::from(r)).expect("grid point in [0, 1]")
}

fn weight(alpha: f64) -> AlphaWeight<f64> {
    AlphaWeight::new(alpha).expect("alpha in (0, 1)")
}

/// Runs one suite.
pub fn run_suite(suite: Suite, cfg: VerifyConfig) -> VerificationReport {
    let start = Instant::now();
    let mut t = Tally::new();
    match suite {
        Suite::Oracle => oracle(&mut t),
        Suite::Derivatives => derivatives(&mut t),
        Suite::Landen => landen(&mut t),
        Suite::Lemma21 => lemma21(&mut t),
        Suite::Lemma22 => lemma22(&mut t),
        Suite::MeanOrder => mean_order(&mut t, cfg),
        Suite::Theorem31 => theorem31(&mut t, cfg),
        Suite::Corollary33 => corollary33(&mut t),
        Suite::Envelopes => envelopes(&mut t),
        Suite::Dominance => dominance(&mut t),
    }
    t.finish(suite, start)
}

/// Runs every suite in [`Suite::ALL`] order.
pub fn run_all(cfg: VerifyConfig) -> Vec<VerificationReport> {
    Suite::ALL.into_iter().map(|s| run_suite(s, cfg)).collect()
}

fn oracle(t: &mut Tally) {
    use std::f64::consts::FRAC_PI_2;
    t.within(ell_k(md(0.0)).unwrap().value - FRAC_PI_2, 1e-15, || "K(0)".into());
    t.within(ell_e(md(0.0)).unwrap().value - FRAC_PI_2, 1e-15, || "E(0)".into());
    t.within(ell_e(md(1.0)).unwrap().value - 1.0, 1e-15, || "E(1)".into());
    let (mut prev_k, mut prev_e) = (FRAC_PI_2, FRAC_PI_2);
    for r in open_grid() {
        let m = md(r);
        let (k, e) = (ell_k(m).unwrap().value, ell_e(m).unwrap().value);
        match (ell_k_oracle(m, ORACLE_TOL), ell_e_oracle(m, ORACLE_TOL)) {
            (Ok(ko), Ok(eo)) => {
                t.within(k - ko.value, 1e-10, || format!("K at r = {r}"));
                t.within(e - eo.value, 1e-10, || format!("E at r = {r}"));
            }
            (Err(err), _) | (_, Err(err)) => t.fail(&err, || format!("oracle at r = {r}")),
        }
        t.strict(k - prev_k, k, || format!("K increasing at r = {r}"));
        t.strict(prev_e - e, e, || format!("E decreasing at r = {r}"));
        prev_k = k;
        prev_e = e;
    }
}

fn central_difference(f: impl Fn(f64) -> f64, r: f64) -> f64 {
    (f(r + FD_STEP) - f(r - FD_STEP)) / (2.0 * FD_STEP)
}

fn derivatives(t: &mut Tally) {
    type Pair = (&'static str, fn(Modulus<f64>) -> Result<f64>, fn(Modulus<f64>) -> Result<f64>);
    let value_k: fn(Modulus<f64>) -> Result<f64> = |m| ell_k(m).map(|v| v.value);
    let value_e: fn(Modulus<f64>) -> Result<f64> = |m| ell_e(m).map(|v| v.value);
    let cases: [Pair; 4] = [
        ("dK/dr", value_k, d_ell_k),
        ("dE/dr", value_e, d_ell_e),
        ("d(K-E)/dr", k_minus_e, d_k_minus_e),
        ("d(E-r'^2K)/dr", e_minus_rc2k, d_e_minus_rc2k),
    ];
    let g = GapParams::new(0.2, weight(0.5)).unwrap();
    for k in 1..=99 {
        let r = k as f64 / 100.0;
        for (name, f, df) in cases {
            let fd = central_difference(|x| f(md(x)).unwrap(), r);
            let exact = df(md(r)).unwrap();
            t.within(exact - fd, 1e-6, || format!("{name} at r = {r}"));
        }
        // f'(r) = 2r [u - (1 - alpha) g(r)].
        let fd = central_difference(|x| gap_function(g, md(x)).unwrap(), r);
        let slope = gap_slope(md(r)).unwrap();
        let exact = 2.0 * r * (g.u() - g.alpha().toader_weight() * slope);
        t.within(exact - fd, 1e-6, || format!("gap derivative at r = {r}"));
    }
}

fn landen(t: &mut Tally) {
    for k in 0..=990 {
        let r = k as f64 / 1000.0;
        let m = md(r);
        let lhs = ell_e(landen_image(m)).unwrap().value;
        let rhs = landen_rhs(m).unwrap();
        t.within(lhs - rhs, 1e-11, || format!("r = {r}"));
    }
}

fn lemma21(t: &mut Tally) {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
    let (mut prev_ratio, mut prev_two) = (FRAC_PI_4, FRAC_PI_2);
    for r in open_grid() {
        let m = md(r);
        let ratio = e_minus_rc2k_over_r2(m);
        let two = two_e_minus_rc2k(m);
        t.strict(ratio - prev_ratio, 1.0, || format!("(E - r'^2 K)/r^2 increasing at r = {r}"));
        t.strict(two - prev_two, 2.0, || format!("2E - r'^2 K increasing at r = {r}"));
        t.strict((ratio - FRAC_PI_4).min(1.0 - ratio), 1.0, || format!("(E - r'^2 K)/r^2 range at r = {r}"));
        t.strict((two - FRAC_PI_2).min(2.0 - two), 2.0, || format!("2E - r'^2 K range at r = {r}"));
        prev_ratio = ratio;
        prev_two = two;
    }
    let (near0, near1) = (md(1e-3), md(1.0 - 1e-6));
    t.within(e_minus_rc2k_over_r2(near0) - FRAC_PI_4, 1e-4, || "ratio at r = 1e-3".into());
    t.within(e_minus_rc2k_over_r2(near1) - 1.0, 1e-4, || "ratio at r = 1 - 1e-6".into());
    t.within(two_e_minus_rc2k(near0) - FRAC_PI_2, 1e-4, || "2E - r'^2 K at r = 1e-3".into());
    t.within(two_e_minus_rc2k(near1) - 2.0, 1e-4, || "2E - r'^2 K at r = 1 - 1e-6".into());
}

fn lemma22(t: &mut Tally) {
    for alpha in ALPHAS {
        let w = weight(alpha);
        let (low, high) = (GapParams::lower_threshold(w), GapParams::upper_threshold(w));
        for u in [0.05, 0.2, 0.5] {
            let g = GapParams::new(u, w).unwrap();
            let at0 = gap_function(g, md(1e-5)).unwrap();
            let at1 = gap_function(g, md(1.0 - 1e-9)).unwrap();
            t.within(at0, 1e-8, || format!("f(1e-5), u = {u}, alpha = {alpha}"));
            t.within(at1 - (u - high), 1e-8, || format!("f(1 - 1e-9), u = {u}, alpha = {alpha}"));
        }
        match estimate_thresholds(w, 2000, 1e-7) {
            Ok(est) => {
                t.within(est.u_low - low, 1e-6, || format!("u_low, alpha = {alpha}"));
                t.within(est.u_high - high, 1e-6, || format!("u_high, alpha = {alpha}"));
            }
            Err(err) => t.fail(&err, || format!("thresholds, alpha = {alpha}")),
        }
        let mut last = 0.0;
        for k in 1..=10 {
            let u = low + (high - low) * k as f64 / 11.0;
            match sign_change_point(GapParams::new(u, w).unwrap(), 1e-12) {
                Ok(eta) => {
                    t.strict(eta.r() - last, 1.0, || format!("eta monotone, u = {u}, alpha = {alpha}"));
                    last = eta.r();
                }
                Err(err) => t.fail(&err, || format!("eta, u = {u}, alpha = {alpha}")),
            }
        }
    }
}

fn mean_order(t: &mut Tally, cfg: VerifyConfig) {
    let q_upper = std::f64::consts::LN_2 / std::f64::consts::FRAC_PI_2.ln();
    let eps = f64::EPSILON;
    for p in random_pairs(cfg.samples, cfg.seed) {
        let at = || format!("(a, b) = ({:e}, {:e})", p.a(), p.b());
        // Every mean is written as A + excess; orderings compare excesses.
        let te = toader_excess(p);
        let ce = contraharmonic_excess(p);
        let m32 = power_mean_excess(p, 1.5);
        let mq = power_mean_excess(p, q_upper);
        let m2 = power_mean_excess(p, 2.0);
        let noise = |x: f64, y: f64| 16.0 * eps * x.abs().max(y.abs());
        let mut strict = |lo: f64, hi: f64| {
            let margin = hi - lo;
            t.check(margin, margin > noise(lo, hi), at);
        };
        strict(0.0, te);
        strict(te, ce);
        strict(m32, te);
        strict(te, mq);
        strict(m2, ce);
    }
}

fn theorem31(t: &mut Tally, cfg: VerifyConfig) {
    let pairs = random_pairs(cfg.samples, cfg.seed);
    for alpha in ALPHAS {
        let w = weight(alpha);
        let wd = AlphaWeight::new(DoubleDouble::from(alpha)).unwrap();
        let lambda = InterpParam::new(lambda_star(w)).unwrap();
        let mu = InterpParam::new(mu_star(w)).unwrap();
        let lambda_d = InterpParam::new(lambda_star(wd)).unwrap();
        let mu_d = InterpParam::new(mu_star(wd)).unwrap();
        for p in &pairs {
            let at = || format!("alpha = {alpha}, (a, b) = ({:e}, {:e})", p.a(), p.b());
            let below = blend_gap_scaled(w, lambda, *p).unwrap();
            let above = blend_gap_scaled(w, mu, *p).unwrap();
            t.strict(-below, 1.0, at);
            t.strict(above, 1.0, at);

            // Direct and reduced forms agree in sign and magnitude.
            let pd = PositivePair::new(DoubleDouble::from(p.a()), DoubleDouble::from(p.b())).unwrap();
            for (interp, scaled) in [(lambda_d, below), (mu_d, above)] {
                let direct = blend_gap(wd, interp, pd).unwrap();
                let reduced = blend_gap_reduced(wd, interp, pd).unwrap();
                let rel = ((direct - reduced) / reduced).as_f64();
                t.within(rel, 1e-10, at);
                t.check(direct.as_f64() * scaled.signum(), direct.hi().signum() == scaled.signum(), at);
            }
        }
        match perturbed_constants(w, 0.01) {
            Ok((lo, hi)) => {
                for (interp, side) in [(lo, Side::Lower), (hi, Side::Upper)] {
                    match find_violation_witness(w, interp, side) {
                        Ok(wit) => t.check(wit.value.abs(), wit.value.abs() > 1e-14, || {
                            format!("{side:?} witness, alpha = {alpha}, r = {}", wit.r.r())
                        }),
                        Err(err) => t.fail(&err, || format!("{side:?} witness, alpha = {alpha}")),
                    }
                }
            }
            Err(err) => t.fail(&err, || format!("perturbation, alpha = {alpha}")),
        }
    }
    // Small-alpha limit of mu* against the Toader-mean constant.
    let limit = mu_star(weight(1e-300)) - toader_upper_blend::<f64>();
    t.within(limit, 1e-15, || "mu* as alpha -> 0".into());
}

fn envelope_strictness(t: &mut Tally, kind: EnvelopeKind) {
    let env: BoundEnvelope<DoubleDouble> = envelope(kind.id()).expect("known envelope");
    for r in open_grid() {
        let m = mdd(r);
        let e = ell_e(m).unwrap().value;
        let (lo, hi) = (env.lower_at(m), env.upper_at(m));
        if kind.is_strict() {
            t.strict(e - lo, e, || format!("{kind} lower at r = {r}"));
            t.strict(hi - e, e, || format!("{kind} upper at r = {r}"));
        } else {
            t.weak(e - lo, e, || format!("{kind} lower at r = {r}"));
            t.weak(hi - e, e, || format!("{kind} upper at r = {r}"));
        }
    }
}

fn corollary33(t: &mut Tally) {
    envelope_strictness(t, EnvelopeKind::ContraharmonicBlend);
    let w = weight(0.75);
    let lambda = InterpParam::new(0.625).unwrap();
    let mu = InterpParam::new(0.5 * (1.0 + (4.0 / std::f64::consts::PI - 1.0).sqrt() / 2.0)).unwrap();
    let env: BoundEnvelope<f64> = BoundEnvelope::of(EnvelopeKind::ContraharmonicBlend);
    for r in open_grid() {
        let m = md(r);
        let (lo, hi) = rearranged_blend_bounds(w, lambda, mu, m).unwrap();
        t.within(env.lower_at(m) - lo, 1e-12, || format!("rearranged lower at r = {r}"));
        t.within(env.upper_at(m) - hi, 1e-12, || format!("rearranged upper at r = {r}"));
        // The two precisions evaluate E consistently.
        let e64 = ell_e(m).unwrap().value;
        let edd = ell_e(mdd(r)).unwrap().value;
        t.within((edd - DoubleDouble::from(e64)).as_f64(), 4.0 * f64::EPSILON, || format!("E precision at r = {r}"));
    }
}

fn envelopes(t: &mut Tally) {
    for kind in [EnvelopeKind::QuadraticArithmetic, EnvelopeKind::Logarithmic, EnvelopeKind::NestedRadical] {
        envelope_strictness(t, kind);
    }
    // Somewhere on the grid both quadratic-arithmetic bounds are tighter
    // than the logarithmic ones.
    let quad: BoundEnvelope<f64> = BoundEnvelope::of(EnvelopeKind::QuadraticArithmetic);
    let log: BoundEnvelope<f64> = BoundEnvelope::of(EnvelopeKind::Logarithmic);
    let best = open_grid()
        .map(|r| {
            let m = md(r);
            let lower = quad.lower_at(m) - log.lower_at(m);
            let upper = log.upper_at(m) - quad.upper_at(m);
            (lower.min(upper), r)
        })
        .fold((f64::NEG_INFINITY, 0.0), |acc, x| if x.0 > acc.0 { x } else { acc });
    t.check(best.0, best.0 > 0.0, || format!("tighter envelope at r = {}", best.1));
}

fn dominance(t: &mut Tally) {
    let blend: BoundEnvelope<DoubleDouble> = BoundEnvelope::of(EnvelopeKind::ContraharmonicBlend);
    let quad: BoundEnvelope<DoubleDouble> = BoundEnvelope::of(EnvelopeKind::QuadraticArithmetic);
    let radical: BoundEnvelope<DoubleDouble> = BoundEnvelope::of(EnvelopeKind::NestedRadical);
    for r in open_grid() {
        let m = mdd(r);
        let lo = blend.lower_at(m);
        t.weak(lo - quad.lower_at(m), lo, || format!("blend >= quadratic lower at r = {r}"));
        t.strict(lo - radical.lower_at(m), lo, || format!("blend > radical lower at r = {r}"));
    }
    // Polynomial identities, evaluated in double-double.
    let one = DoubleDouble::from(1.0);
    for k in 1..=1000 {
        let x = DoubleDouble::from(k as f64) / DoubleDouble::from(1001.0);
        let expected = (one - x).powi(4);
        let q = quadratic_dominance_residual(x);
        let p = radical_dominance_residual(x);
        t.within(((q - expected) / expected).as_f64(), 1e-12, || format!("quadratic identity at x = {k}/1001"));
        t.within(((p - expected) / expected).as_f64(), 1e-12, || format!("radical identity at x = {k}/1001"));
        t.strict(q, expected, || format!("quadratic residual positive at x = {k}/1001"));
        t.strict(p, expected, || format!("radical residual positive at x = {k}/1001"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyConfig {
        VerifyConfig { samples: 200, seed: 3 }
    }

    #[test]
    fn suite_ids_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.id().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("nope".parse::<Suite>(), Err(Error::Lookup(_))));
    }

    #[test]
    fn sampling_is_reproducible() {
        let a = random_pairs(50, 9);
        assert_eq!(a, random_pairs(50, 9));
        assert_ne!(a, random_pairs(50, 10));
        assert!(a.iter().all(|p| p.a() > 1e-3 && p.a() < 1e3 && p.a() != p.b()));
    }

    #[test]
    fn every_suite_passes_on_small_samples() {
        for s in Suite::ALL {
            let report = run_suite(s, quick());
            assert!(report.passed(), "{report}");
            assert!(report.points_checked > 0);
            assert!(report.worst_margin.is_finite());
        }
    }

    #[test]
    fn tally_keeps_first_failure_witness() {
        let mut t = Tally::new();
        t.check(1.0, true, || "a".into());
        t.check(0.5, false, || "b".into());
        t.check(0.7, true, || "c".into());
        assert_eq!(t.failures, 1);
        assert_eq!(t.witness.as_deref(), Some("b"));
        assert_eq!(t.worst, 0.5);
    }
}
