//! Bivariate means: arithmetic, power, contraharmonic, Toader, and the
//! contraharmonic interpolant `J(x) = C(xa + (1-x)b, xb + (1-x)a)`.
//!
//! Every mean is symmetric and homogeneous of degree one, and returns `a`
//! when both arguments are equal.

use crate::elliptic::{ell_e, landen_excess, Modulus};
use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// Ordered pair of strictly positive, finite reals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivePair<T> {
    a: T,
    b: T,
}

impl<T: Scalar> PositivePair<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        if !(a > T::zero() && b > T::zero() && a.is_finite() && b.is_finite()) {
            return domain(format!("mean arguments must be positive and finite, got ({a}, {b})"));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn max(&self) -> T {
        self.a.max(self.b)
    }

    pub fn min(&self) -> T {
        self.a.min(self.b)
    }

    pub fn swapped(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
        }
    }

    pub fn is_equal(&self) -> bool {
        self.a == self.b
    }
}

/// Interpolation parameter `x` in `[1/2, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpParam<T>(T);

impl<T: Scalar> InterpParam<T> {
    pub fn new(x: T) -> Result<Self> {
        if !(x >= T::lit(0.5) && x <= T::one()) {
            return domain(format!("interpolation parameter {x} outside [1/2, 1]"));
        }
        Ok(Self(x))
    }

    pub fn get(&self) -> T {
        self.0
    }
}

pub fn arithmetic<T: Scalar>(p: PositivePair<T>) -> T {
    (p.a + p.b) / T::lit(2.0)
}

/// `C(a, b) = (a^2 + b^2) / (a + b)`.
pub fn contraharmonic<T: Scalar>(p: PositivePair<T>) -> T {
    if p.is_equal() {
        return p.a;
    }
    (p.a * p.a + p.b * p.b) / (p.a + p.b)
}

/// Power mean `M_q(a, b) = ((a^q + b^q) / 2)^(1/q)`, geometric mean at `q = 0`.
///
/// Evaluated as `base * exp(ln_1p(expm1(q ln(other/base)) / 2) / q)` with
/// `base` the larger argument for `q > 0` and the smaller for `q < 0`, which
/// never overflows and stays accurate as `q -> 0`.
pub fn power_mean<T: Scalar>(p: PositivePair<T>, q: T) -> T {
    if p.is_equal() {
        return p.a;
    }
    if q == T::zero() {
        return (p.a * p.b).sqrt();
    }
    let (base, other) = if q > T::zero() {
        (p.max(), p.min())
    } else {
        (p.min(), p.max())
    };
    let half_excess = (q * (other / base).ln()).exp_m1() / T::lit(2.0);
    base * (half_excess.ln_1p() / q).exp()
}

/// Toader mean `T(a, b) = (2/pi) int_0^{pi/2} sqrt(a^2 cos^2 + b^2 sin^2)`,
/// evaluated as `(2 max / pi) E(r)` with complementary modulus `min / max`.
pub fn toader<T: Scalar>(p: PositivePair<T>) -> T {
    if p.is_equal() {
        return p.a;
    }
    let (hi, lo) = (p.max(), p.min());
    let m = Modulus::from_complement(lo / hi).expect("ratio lies in (0, 1)");
    let e = ell_e(m).expect("E is defined on [0, 1]").value;
    T::FRAC_2_PI() * hi * e
}

/// `T(a, b) - A(a, b)` without cancellation.
///
/// Uses the Landen form `T = max/(1 + r) * (2/pi)(2E(r) - r'^2 K(r))` with
/// `r = (max - min)/(max + min)`, so the difference is `max/(1+r)` times
/// [`landen_excess`].
pub fn toader_excess<T: Scalar>(p: PositivePair<T>) -> T {
    if p.is_equal() {
        return T::zero();
    }
    let m = pair_to_modulus(p).expect("unequal pair");
    p.max() / (T::one() + m.r()) * landen_excess(m)
}

/// `M_q(a, b) - A(a, b)` without cancellation for nearly equal arguments.
///
/// With `A = (a+b)/2` and `d = (max - min)/(max + min)`,
/// `M_q / A = (((1+d)^q + (1-d)^q)/2)^(1/q)`. The inner even part is summed
/// as `sum_{j>=1} binom(q, 2j) d^(2j)` when `d < 1/2`.
pub fn power_mean_excess<T: Scalar>(p: PositivePair<T>, q: T) -> T {
    if p.is_equal() {
        return T::zero();
    }
    let mean = arithmetic(p);
    let d = (p.max() - p.min()) / (p.max() + p.min());
    if d >= T::lit(0.5) || q == T::zero() {
        return power_mean(p, q) - mean;
    }
    let d2 = d * d;
    let mut coeff = T::one();
    let mut pow = T::one();
    let mut even = T::zero();
    let mut j = 0u32;
    loop {
        let k = T::lit(f64::from(2 * j));
        coeff = coeff * (q - k) * (q - k - T::one()) / ((k + T::one()) * (k + T::lit(2.0)));
        pow = pow * d2;
        let term = coeff * pow;
        even = even + term;
        j += 1;
        if term.abs() <= T::roundoff() * even.abs() || j > 200 {
            break;
        }
    }
    mean * (even.ln_1p() / q).exp_m1()
}

/// `C(a, b) - A(a, b) = (a - b)^2 / (2 (a + b))`.
pub fn contraharmonic_excess<T: Scalar>(p: PositivePair<T>) -> T {
    let d = p.a - p.b;
    d * d / (T::lit(2.0) * (p.a + p.b))
}

/// The convex blend `(x a + (1-x) b, x b + (1-x) a)`.
pub fn blend<T: Scalar>(x: InterpParam<T>, p: PositivePair<T>) -> PositivePair<T> {
    let x = x.get();
    let y = T::one() - x;
    PositivePair {
        a: x * p.a + y * p.b,
        b: x * p.b + y * p.a,
    }
}

/// `J(x) = C(x a + (1-x) b, x b + (1-x) a)`; sweeps from `A` at `x = 1/2`
/// to `C` at `x = 1`.
pub fn j_interp<T: Scalar>(x: InterpParam<T>, p: PositivePair<T>) -> T {
    contraharmonic(blend(x, p))
}

/// Maps an unequal pair to `r = (max - min)/(max + min)`, with complement
/// `2 sqrt(ab)/(a + b)`. The inverse is `min/max = (1 - r)/(1 + r)`.
pub fn pair_to_modulus<T: Scalar>(p: PositivePair<T>) -> Result<Modulus<T>> {
    if p.is_equal() {
        return domain("equal arguments map to the r = 0 boundary");
    }
    let (hi, lo) = (p.max(), p.min());
    let s = hi + lo;
    let r = (hi - lo) / s;
    let rc = (T::lit(2.0) * (hi * lo).sqrt() / s).min(T::one());
    Ok(Modulus::from_parts(r, rc))
}

/// Pair `(1, (1 - r)/(1 + r))` whose image under [`pair_to_modulus`] is `r`.
pub fn modulus_to_pair<T: Scalar>(m: Modulus<T>) -> Result<PositivePair<T>> {
    let one = T::one();
    PositivePair::new(one, (one - m.r()) / (one + m.r()))
}
