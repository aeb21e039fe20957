//! Sharp blend constants for `alpha A + (1 - alpha) T`, the reduced gap
//! function that controls them, closed-form envelopes for `E(r)` and the
//! polynomial identities behind the envelope comparisons.

use std::fmt;
use std::str::FromStr;

use num_traits::Num;

use crate::elliptic::{e_minus_rc2k_over_r2, landen_excess, landen_excess_over_r2, Modulus};
use crate::error::{domain, Error, Result};
use crate::means::{arithmetic, j_interp, pair_to_modulus, toader, InterpParam, PositivePair};
use crate::scalar::Scalar;

/// Weight `alpha` in `(0, 1)` of the arithmetic mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaWeight<T>(T);

impl<T: Scalar> AlphaWeight<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if !(alpha > T::zero() && alpha < T::one()) {
            return domain(format!("alpha = {alpha} outside (0, 1)"));
        }
        Ok(Self(alpha))
    }

    pub fn get(&self) -> T {
        self.0
    }

    /// `1 - alpha`.
    pub fn toader_weight(&self) -> T {
        T::one() - self.0
    }
}

/// Parameters `(u, alpha)` of the gap function
/// `f(r) = u r^2 - (1 - alpha) [(2/pi)(2E - r'^2 K) - 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapParams<T> {
    u: T,
    alpha: AlphaWeight<T>,
}

impl<T: Scalar> GapParams<T> {
    pub fn new(u: T, alpha: AlphaWeight<T>) -> Result<Self> {
        if !(u > T::zero() && u < T::one()) {
            return domain(format!("u = {u} outside (0, 1)"));
        }
        Ok(Self { u, alpha })
    }

    /// Skips the range check; the gap function is well defined for any `u`.
    pub(crate) fn unchecked(u: T, alpha: AlphaWeight<T>) -> Self {
        Self { u, alpha }
    }

    /// `u = (1 - 2p)^2` for the blend parameter `p`.
    pub fn from_interp(p: InterpParam<T>, alpha: AlphaWeight<T>) -> Result<Self> {
        Self::new(blend_coefficient(p), alpha)
    }

    pub fn u(&self) -> T {
        self.u
    }

    pub fn alpha(&self) -> AlphaWeight<T> {
        self.alpha
    }

    /// Largest `u` for which `f < 0` on all of `(0, 1)`: `(1 - alpha)/4`.
    pub fn lower_threshold(alpha: AlphaWeight<T>) -> T {
        alpha.toader_weight() / T::lit(4.0)
    }

    /// Smallest `u` for which `f > 0` on all of `(0, 1)`: `(1 - alpha)(4/pi - 1)`.
    pub fn upper_threshold(alpha: AlphaWeight<T>) -> T {
        alpha.toader_weight() * (T::lit(4.0) / T::PI() - T::one())
    }
}

/// `(1 - 2p)^2`.
pub fn blend_coefficient<T: Scalar>(p: InterpParam<T>) -> T {
    let d = T::lit(2.0) * p.get() - T::one();
    d * d
}

/// Greatest blend parameter keeping `C(blend) < alpha A + (1 - alpha) T`:
/// `1/2 + sqrt(1 - alpha)/4`.
pub fn lambda_star<T: Scalar>(w: AlphaWeight<T>) -> T {
    T::lit(0.5) + w.toader_weight().sqrt() / T::lit(4.0)
}

/// Least blend parameter keeping `C(blend) > alpha A + (1 - alpha) T`:
/// `(1 + sqrt((1 - alpha)(4/pi - 1))) / 2`.
pub fn mu_star<T: Scalar>(w: AlphaWeight<T>) -> T {
    let c = T::lit(4.0) / T::PI() - T::one();
    (T::one() + (w.toader_weight() * c).sqrt()) / T::lit(2.0)
}

/// Sharp lower blend constant for the Toader mean alone: `3/4`.
pub fn toader_lower_blend<T: Scalar>() -> T {
    T::lit(0.75)
}

/// Sharp upper blend constant for the Toader mean alone:
/// `1/2 + sqrt(4 pi - pi^2) / (2 pi)`.
pub fn toader_upper_blend<T: Scalar>() -> T {
    let pi = T::PI();
    T::lit(0.5) + (T::lit(4.0) * pi - pi * pi).sqrt() / (T::lit(2.0) * pi)
}

/// `alpha A(a, b) + (1 - alpha) T(a, b)`.
pub fn combination<T: Scalar>(w: AlphaWeight<T>, p: PositivePair<T>) -> T {
    if p.is_equal() {
        return p.a();
    }
    w.get() * arithmetic(p) + w.toader_weight() * toader(p)
}

fn gap_raw<T: Scalar>(u: T, alpha: AlphaWeight<T>, m: Modulus<T>) -> T {
    u * m.r_squared() - alpha.toader_weight() * landen_excess(m)
}

/// `f_{u,alpha}(r)` on the open interval `(0, 1)`.
pub fn gap_function<T: Scalar>(g: GapParams<T>, m: Modulus<T>) -> Result<T> {
    if m.r() <= T::zero() || m.r() >= T::one() {
        return domain(format!("gap function requires 0 < r < 1, got r = {}", m.r()));
    }
    Ok(gap_raw(g.u, g.alpha, m))
}

/// `f_{u,alpha}(r) / r^2`, extended continuously to `[0, 1]`.
///
/// Same sign as the gap function on `(0, 1)`; its endpoint values are
/// `u - (1 - alpha)/4` at 0 and `u - (1 - alpha)(4/pi - 1)` at 1.
pub fn gap_function_scaled<T: Scalar>(g: GapParams<T>, m: Modulus<T>) -> T {
    scaled_raw(g.u, g.alpha, m)
}

fn scaled_raw<T: Scalar>(u: T, alpha: AlphaWeight<T>, m: Modulus<T>) -> T {
    u - alpha.toader_weight() * landen_excess_over_r2(m)
}

/// `g(r) = (E - r'^2 K) / (pi r^2)`, increasing from 1/4 to `1/pi`.
///
/// The gap derivative is `f'(r) = 2r [u - (1 - alpha) g(r)]`.
pub fn gap_slope<T: Scalar>(m: Modulus<T>) -> Result<T> {
    if m.r() <= T::zero() || m.r() >= T::one() {
        return domain(format!("g(r) requires 0 < r < 1, got r = {}", m.r()));
    }
    Ok(e_minus_rc2k_over_r2(m) / T::PI())
}

/// `C(p a + (1-p) b, p b + (1-p) a) - alpha A(a, b) - (1 - alpha) T(a, b)`,
/// evaluated directly from the means.
pub fn blend_gap<T: Scalar>(w: AlphaWeight<T>, p: InterpParam<T>, pair: PositivePair<T>) -> Result<T> {
    if pair.is_equal() {
        return domain("blend gap is identically zero for equal arguments");
    }
    Ok(j_interp(p, pair) - combination(w, pair))
}

/// The same gap through the modulus reduction:
/// `max/(1 + r) * f_{u,alpha}(r)` with `u = (1 - 2p)^2` and
/// `r = (max - min)/(max + min)`.
pub fn blend_gap_reduced<T: Scalar>(
    w: AlphaWeight<T>,
    p: InterpParam<T>,
    pair: PositivePair<T>,
) -> Result<T> {
    let m = pair_to_modulus(pair)?;
    Ok(pair.max() / (T::one() + m.r()) * gap_raw(blend_coefficient(p), w, m))
}

/// [`blend_gap_reduced`] divided by `max r^2 / (1 + r)`: the sign-carrying
/// part of the gap, resolved to full relative precision for nearly equal
/// arguments.
pub fn blend_gap_scaled<T: Scalar>(
    w: AlphaWeight<T>,
    p: InterpParam<T>,
    pair: PositivePair<T>,
) -> Result<T> {
    let m = pair_to_modulus(pair)?;
    Ok(scaled_raw(blend_coefficient(p), w, m))
}

/// The four closed-form envelopes of `E(r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnvelopeKind {
    /// Contraharmonic-blend bounds at `alpha = 3/4`.
    ContraharmonicBlend,
    /// Combination of the quadratic and arithmetic means of `(1, r')`.
    QuadraticArithmetic,
    /// Logarithmic bounds in `r`.
    Logarithmic,
    /// Nested-radical bounds; stated non-strictly.
    NestedRadical,
}

impl EnvelopeKind {
    pub const ALL: [EnvelopeKind; 4] = [
        EnvelopeKind::ContraharmonicBlend,
        EnvelopeKind::QuadraticArithmetic,
        EnvelopeKind::Logarithmic,
        EnvelopeKind::NestedRadical,
    ];

    pub fn id(self) -> &'static str {
        match self {
            EnvelopeKind::ContraharmonicBlend => "corollary33",
            EnvelopeKind::QuadraticArithmetic => "chu34",
            EnvelopeKind::Logarithmic => "guoqi35",
            EnvelopeKind::NestedRadical => "yinqi36",
        }
    }

    /// Whether the bounds are claimed strictly on `(0, 1)`.
    pub fn is_strict(self) -> bool {
        self != EnvelopeKind::NestedRadical
    }
}

impl fmt::Display for EnvelopeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for EnvelopeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EnvelopeKind::ALL
            .into_iter()
            .find(|k| k.id() == s)
            .ok_or_else(|| Error::Lookup(s.to_string()))
    }
}

/// A named lower/upper bound pair for `E(r)`.
#[derive(Clone, Copy)]
pub struct BoundEnvelope<T> {
    pub kind: EnvelopeKind,
    pub lower: fn(Modulus<T>) -> T,
    pub upper: fn(Modulus<T>) -> T,
}

impl<T> fmt::Debug for BoundEnvelope<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundEnvelope").field("kind", &self.kind).finish()
    }
}

impl<T: Scalar> BoundEnvelope<T> {
    pub fn of(kind: EnvelopeKind) -> Self {
        let (lower, upper): (fn(Modulus<T>) -> T, fn(Modulus<T>) -> T) = match kind {
            EnvelopeKind::ContraharmonicBlend => (blend_lower, blend_upper),
            EnvelopeKind::QuadraticArithmetic => (quadratic_lower, quadratic_upper),
            EnvelopeKind::Logarithmic => (log_lower, log_upper),
            EnvelopeKind::NestedRadical => (radical_lower, radical_upper),
        };
        Self { kind, lower, upper }
    }

    pub fn lower_at(&self, m: Modulus<T>) -> T {
        (self.lower)(m)
    }

    pub fn upper_at(&self, m: Modulus<T>) -> T {
        (self.upper)(m)
    }
}

/// Looks up an envelope by identifier (`corollary33`, `chu34`, `guoqi35`,
/// `yinqi36`).
pub fn envelope<T: Scalar>(name: &str) -> Result<BoundEnvelope<T>> {
    Ok(BoundEnvelope::of(name.parse()?))
}

/// `(pi/2) [(17 + 30x + 17x^2)/(8(1+x)) - 3(1+x)/2]`, `x = r'`.
///
/// The bracket simplifies to `(5x^2 + 6x + 5)/(8(1+x))`, which is what is
/// evaluated.
pub fn blend_lower<T: Scalar>(m: Modulus<T>) -> T {
    let x = m.complement();
    let num = (T::lit(5.0) * x + T::lit(6.0)) * x + T::lit(5.0);
    T::FRAC_PI_2() * num / (T::lit(8.0) * (T::one() + x))
}

/// `(pi x + (1 - x)^2) / (1 + x)`, `x = r'`: the upper bound obtained from
/// the sharp upper blend at `alpha = 3/4`.
pub fn blend_upper<T: Scalar>(m: Modulus<T>) -> T {
    let x = m.complement();
    let d = m.one_minus_complement();
    (T::PI() * x + d * d) / (T::one() + x)
}

/// `sqrt((1 + r'^2)/2)`.
fn quadratic_of_complement<T: Scalar>(m: Modulus<T>) -> T {
    let x = m.complement();
    ((T::one() + x * x) / T::lit(2.0)).sqrt()
}

/// `(pi/2) [sqrt((1 + r'^2)/2)/2 + (1 + r')/4]`.
pub fn quadratic_lower<T: Scalar>(m: Modulus<T>) -> T {
    let q = quadratic_of_complement(m);
    T::FRAC_PI_2() * (q / T::lit(2.0) + (T::one() + m.complement()) / T::lit(4.0))
}

/// `(pi/2) [(4 - pi)/((sqrt2 - 1) pi) sqrt((1 + r'^2)/2)
///          + (sqrt2 pi - 4)(1 + r') / (2 (sqrt2 - 1) pi)]`.
pub fn quadratic_upper<T: Scalar>(m: Modulus<T>) -> T {
    let pi = T::PI();
    let s2 = T::SQRT_2();
    let denom = (s2 - T::one()) * pi;
    let q = quadratic_of_complement(m);
    let lin = (s2 * pi - T::lit(4.0)) * (T::one() + m.complement()) / (T::lit(2.0) * denom);
    T::FRAC_PI_2() * ((T::lit(4.0) - pi) / denom * q + lin)
}

/// `pi/2 - (1/2) log((1+r)^(1-r) / (1-r)^(1+r))`.
pub fn log_lower<T: Scalar>(m: Modulus<T>) -> T {
    let r = m.r();
    let one = T::one();
    let log = (one - r) * r.ln_1p() - (one + r) * (-r).ln_1p();
    T::FRAC_PI_2() - log / T::lit(2.0)
}

/// `(pi - 1)/2 + (1 - r^2)/(4r) log((1+r)/(1-r))`; below `r = 1e-4` the
/// second term uses `(1 - r^2)(1 + r^2/3 + r^4/5)/2`, its limit at 0 being 1/2.
/// At `r = 1` the second term vanishes.
pub fn log_upper<T: Scalar>(m: Modulus<T>) -> T {
    let r = m.r();
    let one = T::one();
    let r2 = r * r;
    let head = (T::PI() - one) / T::lit(2.0);
    let tail = if r == one {
        T::zero()
    } else if r < T::lit(1e-4) {
        (one - r2) * (one + r2 / T::lit(3.0) + r2 * r2 / T::lit(5.0)) / T::lit(2.0)
    } else {
        (one - r2) / (T::lit(4.0) * r) * (r.ln_1p() - (-r).ln_1p())
    };
    head + tail
}

/// `(pi/2) sqrt(6 + 2 sqrt(1 - r^2) - 3 r^2) / (2 sqrt 2)`.
pub fn radical_lower<T: Scalar>(m: Modulus<T>) -> T {
    let r2 = m.r_squared();
    let inner = T::lit(6.0) + T::lit(2.0) * m.complement() - T::lit(3.0) * r2;
    T::FRAC_PI_2() * inner.sqrt() / (T::lit(2.0) * T::SQRT_2())
}

/// `(pi/2) sqrt(10 - 2 sqrt(1 - r^2) - 5 r^2) / (2 sqrt 2)`.
pub fn radical_upper<T: Scalar>(m: Modulus<T>) -> T {
    let r2 = m.r_squared();
    let inner = T::lit(10.0) - T::lit(2.0) * m.complement() - T::lit(5.0) * r2;
    T::FRAC_PI_2() * inner.sqrt() / (T::lit(2.0) * T::SQRT_2())
}

/// Lower and upper bounds for `E(r)` obtained by solving the blend
/// inequalities for `T(1, r') = (2/pi) E(r)`:
/// `E > (pi/2) (J_lambda(1, r') - alpha A) / (1 - alpha)` and likewise with
/// `mu` for the upper bound.
pub fn rearranged_blend_bounds<T: Scalar>(
    w: AlphaWeight<T>,
    lambda: InterpParam<T>,
    mu: InterpParam<T>,
    m: Modulus<T>,
) -> Result<(T, T)> {
    let pair = PositivePair::new(T::one(), m.complement())?;
    let solve = |p| T::FRAC_PI_2() * (j_interp(p, pair) - w.get() * arithmetic(pair)) / w.toader_weight();
    Ok((solve(lambda), solve(mu)))
}

/// `(3x^2 + 2x + 3)^2 - 8(1 + x^2)(1 + x)^2`, identically `(1 - x)^4`.
///
/// Generic over any ring so it can be evaluated exactly.
pub fn quadratic_dominance_residual<N: Num + Clone>(x: N) -> N {
    let c = |k: u8| (0..k).fold(N::zero(), |acc, _| acc + N::one());
    let x2 = x.clone() * x.clone();
    let p = c(3) * x2.clone() + c(2) * x.clone() + c(3);
    let opx = N::one() + x;
    p.clone() * p - c(8) * (N::one() + x2) * opx.clone() * opx
}

/// `(5x^2 + 6x + 5)^2 - 8(x + 1)^2 (3x^2 + 2x + 3)`, identically `(x - 1)^4`.
pub fn radical_dominance_residual<N: Num + Clone>(x: N) -> N {
    let c = |k: u8| (0..k).fold(N::zero(), |acc, _| acc + N::one());
    let x2 = x.clone() * x.clone();
    let p = c(5) * x2.clone() + c(6) * x.clone() + c(5);
    let q = c(3) * x2 + c(2) * x.clone() + c(3);
    let opx = N::one() + x;
    p.clone() * p - c(8) * opx.clone() * opx * q
}
