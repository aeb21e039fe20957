//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64`s with
//! `|lo| <= ulp(hi)/2`, giving roughly 106 bits of significand.
//!
//! Addition, multiplication, division and square root are accurate to a few
//! units of `2^-104`. `exp`, `ln`, `exp_m1`, `ln_1p`, `sin` and `cos` are
//! evaluated in double-double as well; the remaining inverse-trigonometric
//! and hyperbolic functions are composed from those and lose a little more
//! near their singular points.

use std::cmp::Ordering;
use std::fmt;
use std::num::FpCategory;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_traits::{Float, FloatConst, FromPrimitive, Num, NumCast, One, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, Default)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

const fn dd(hi: f64, lo: f64) -> DoubleDouble {
    DoubleDouble { hi, lo }
}

const DD_PI: DoubleDouble = dd(3.141592653589793, 1.2246467991473532e-16);
const DD_LN_2: DoubleDouble = dd(0.6931471805599453, 2.3190468138462996e-17);
const DD_LN_10: DoubleDouble = dd(2.302585092994046, -2.1707562233822494e-16);
const DD_E: DoubleDouble = dd(2.718281828459045, 1.4456468917292502e-16);
const DD_SQRT_2: DoubleDouble = dd(1.4142135623730951, -9.667293313452913e-17);

impl DoubleDouble {
    pub const fn from_parts(hi: f64, lo: f64) -> Self {
        dd(hi, lo)
    }

    fn renorm(hi: f64, lo: f64) -> Self {
        if !hi.is_finite() {
            return dd(hi, 0.0);
        }
        let (h, l) = quick_two_sum(hi, lo);
        dd(h, l)
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    /// Multiplies by `2^k` exactly (barring overflow/underflow).
    fn ldexp(self, k: i32) -> Self {
        let mut out = self;
        let mut k = k;
        while k != 0 {
            let step = k.clamp(-1000, 1000);
            let s = 2f64.powi(step);
            out = dd(out.hi * s, out.lo * s);
            k -= step;
        }
        out
    }

    fn square(self) -> Self {
        let (p, e) = two_prod(self.hi, self.hi);
        Self::renorm(p, e + 2.0 * self.hi * self.lo)
    }

    /// `exp(r) - 1` for `|r| <= ln2 / 2`, by Taylor series on `r / 2^10`
    /// followed by ten applications of `s -> 2s + s^2`.
    fn expm1_reduced(r: Self) -> Self {
        let x = r.ldexp(-10);
        let mut term = x;
        let mut sum = x;
        let mut n = 1.0;
        loop {
            n += 1.0;
            term = term * x / dd(n, 0.0);
            sum = sum + term;
            if term.hi.abs() <= 1e-36 * sum.hi.abs() || n > 40.0 {
                break;
            }
        }
        for _ in 0..10 {
            sum = sum.ldexp(1) + sum.square();
        }
        sum
    }

    /// `(sin r, cos r)` for `|r| <= pi/4`.
    fn sin_cos_reduced(r: Self) -> (Self, Self) {
        let r2 = r.square();
        let mut term = r;
        let mut sin = r;
        let mut n = 1.0;
        while term.hi.abs() > 1e-36 {
            term = -(term * r2) / dd((n + 1.0) * (n + 2.0), 0.0);
            sin = sin + term;
            n += 2.0;
        }
        let mut term = Self::one();
        let mut cos = Self::one();
        let mut n = 0.0;
        while term.hi.abs() > 1e-36 {
            term = -(term * r2) / dd((n + 1.0) * (n + 2.0), 0.0);
            cos = cos + term;
            n += 2.0;
        }
        (sin, cos)
    }

    fn from_f64_exact(x: f64) -> Self {
        dd(x, 0.0)
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        dd(x, 0.0)
    }
}

impl From<DoubleDouble> for f64 {
    fn from(x: DoubleDouble) -> f64 {
        x.hi + x.lo
    }
}

impl PartialEq for DoubleDouble {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            ord => Some(ord),
        }
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == 0.0 {
            fmt::Display::fmt(&self.hi, f)
        } else {
            fmt::Display::fmt(&self.hi, f)?;
            write!(f, " {:+e}", self.lo)
        }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        dd(-self.hi, -self.lo)
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        if !s1.is_finite() {
            return dd(s1, 0.0);
        }
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        Self::renorm(s1, s2 + t2)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let (p1, p2) = two_prod(self.hi, b.hi);
        Self::renorm(p1, p2 + (self.hi * b.lo + self.lo * b.hi))
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        if !q1.is_finite() || q1 == 0.0 {
            return dd(q1, 0.0);
        }
        let r = self - b * dd(q1, 0.0);
        let q2 = r.hi / b.hi;
        let r = r - b * dd(q2, 0.0);
        let q3 = r.hi / b.hi;
        let (h, l) = quick_two_sum(q1, q2);
        dd(h, l) + dd(q3, 0.0)
    }
}

impl Rem for DoubleDouble {
    type Output = Self;
    fn rem(self, b: Self) -> Self {
        self - (self / b).trunc() * b
    }
}

impl Zero for DoubleDouble {
    fn zero() -> Self {
        dd(0.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0
    }
}

impl One for DoubleDouble {
    fn one() -> Self {
        dd(1.0, 0.0)
    }
}

impl Num for DoubleDouble {
    type FromStrRadixErr = std::num::ParseFloatError;

    /// Parses through `f64`; decimal literals therefore carry `f64` rounding.
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if radix != 10 {
            // Only decimal input is supported; force a parse error.
            return "".parse::<f64>().map(Self::from_f64_exact);
        }
        s.parse::<f64>().map(Self::from_f64_exact)
    }
}

impl ToPrimitive for DoubleDouble {
    fn to_i64(&self) -> Option<i64> {
        let t = self.trunc();
        if !t.hi.is_finite() || t.hi.abs() > 1e19 {
            return None;
        }
        i64::try_from(t.hi as i128 + t.lo as i128).ok()
    }

    fn to_u64(&self) -> Option<u64> {
        let t = self.trunc();
        if !t.hi.is_finite() || t.hi < 0.0 || t.hi > 2e19 {
            return None;
        }
        u64::try_from(t.hi as i128 + t.lo as i128).ok()
    }

    fn to_f64(&self) -> Option<f64> {
        Some(self.hi + self.lo)
    }
}

impl FromPrimitive for DoubleDouble {
    fn from_i64(n: i64) -> Option<Self> {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Some(Self::renorm(hi, lo))
    }

    fn from_u64(n: u64) -> Option<Self> {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Some(Self::renorm(hi, lo))
    }

    fn from_f64(n: f64) -> Option<Self> {
        Some(Self::from_f64_exact(n))
    }
}

impl NumCast for DoubleDouble {
    fn from<N: ToPrimitive>(n: N) -> Option<Self> {
        n.to_f64().map(Self::from_f64_exact)
    }
}

impl FloatConst for DoubleDouble {
    fn E() -> Self {
        DD_E
    }
    fn FRAC_1_PI() -> Self {
        Self::one() / DD_PI
    }
    fn FRAC_1_SQRT_2() -> Self {
        DD_SQRT_2.ldexp(-1)
    }
    fn FRAC_2_PI() -> Self {
        dd(2.0, 0.0) / DD_PI
    }
    fn FRAC_2_SQRT_PI() -> Self {
        dd(2.0, 0.0) / DD_PI.sqrt()
    }
    fn FRAC_PI_2() -> Self {
        DD_PI.ldexp(-1)
    }
    fn FRAC_PI_3() -> Self {
        DD_PI / dd(3.0, 0.0)
    }
    fn FRAC_PI_4() -> Self {
        DD_PI.ldexp(-2)
    }
    fn FRAC_PI_6() -> Self {
        DD_PI / dd(6.0, 0.0)
    }
    fn FRAC_PI_8() -> Self {
        DD_PI.ldexp(-3)
    }
    fn LN_10() -> Self {
        DD_LN_10
    }
    fn LN_2() -> Self {
        DD_LN_2
    }
    fn LOG10_E() -> Self {
        Self::one() / DD_LN_10
    }
    fn LOG2_E() -> Self {
        Self::one() / DD_LN_2
    }
    fn PI() -> Self {
        DD_PI
    }
    fn SQRT_2() -> Self {
        DD_SQRT_2
    }
    fn TAU() -> Self {
        DD_PI.ldexp(1)
    }
    fn LOG10_2() -> Self {
        DD_LN_2 / DD_LN_10
    }
    fn LOG2_10() -> Self {
        DD_LN_10 / DD_LN_2
    }
}

impl Float for DoubleDouble {
    fn nan() -> Self {
        dd(f64::NAN, 0.0)
    }
    fn infinity() -> Self {
        dd(f64::INFINITY, 0.0)
    }
    fn neg_infinity() -> Self {
        dd(f64::NEG_INFINITY, 0.0)
    }
    fn neg_zero() -> Self {
        dd(-0.0, 0.0)
    }
    fn min_value() -> Self {
        dd(f64::MIN, 0.0)
    }
    fn min_positive_value() -> Self {
        dd(f64::MIN_POSITIVE, 0.0)
    }
    fn max_value() -> Self {
        dd(f64::MAX, 0.0)
    }
    fn epsilon() -> Self {
        dd(2f64.powi(-104), 0.0)
    }
    fn is_nan(self) -> bool {
        self.hi.is_nan()
    }
    fn is_infinite(self) -> bool {
        self.hi.is_infinite()
    }
    fn is_finite(self) -> bool {
        self.hi.is_finite()
    }
    fn is_normal(self) -> bool {
        self.hi.is_normal()
    }
    fn classify(self) -> FpCategory {
        self.hi.classify()
    }
    fn floor(self) -> Self {
        let h = self.hi.floor();
        if h == self.hi {
            Self::renorm(h, self.lo.floor())
        } else {
            dd(h, 0.0)
        }
    }
    fn ceil(self) -> Self {
        let h = self.hi.ceil();
        if h == self.hi {
            Self::renorm(h, self.lo.ceil())
        } else {
            dd(h, 0.0)
        }
    }
    fn round(self) -> Self {
        let half = dd(0.5, 0.0);
        if self.hi >= 0.0 {
            (self + half).floor()
        } else {
            (self - half).ceil()
        }
    }
    fn trunc(self) -> Self {
        if self.hi >= 0.0 {
            self.floor()
        } else {
            self.ceil()
        }
    }
    fn fract(self) -> Self {
        self - self.trunc()
    }
    fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }
    fn signum(self) -> Self {
        dd(self.hi.signum(), 0.0)
    }
    fn is_sign_positive(self) -> bool {
        self.hi.is_sign_positive()
    }
    fn is_sign_negative(self) -> bool {
        self.hi.is_sign_negative()
    }
    fn mul_add(self, a: Self, b: Self) -> Self {
        self * a + b
    }
    fn recip(self) -> Self {
        Self::one() / self
    }
    fn powi(self, n: i32) -> Self {
        let mut base = self;
        let mut k = n.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base.square();
            k >>= 1;
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }
    fn powf(self, n: Self) -> Self {
        (n * self.ln()).exp()
    }
    fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 { Self::zero() } else { Self::nan() };
        }
        if !self.hi.is_finite() {
            return self;
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let (p, e) = two_prod(ax, ax);
        let residual = (self - Self::renorm(p, e)).hi;
        let (h, l) = two_sum(ax, residual * x * 0.5);
        dd(h, l)
    }
    fn exp(self) -> Self {
        if self.hi > 709.78 {
            return Self::infinity();
        }
        if self.hi < -745.2 {
            return Self::zero();
        }
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = self - DD_LN_2 * dd(k, 0.0);
        (Self::expm1_reduced(r) + Self::one()).ldexp(k as i32)
    }
    fn exp2(self) -> Self {
        (self * DD_LN_2).exp()
    }
    fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 { Self::neg_infinity() } else { Self::nan() };
        }
        if !self.hi.is_finite() {
            return self;
        }
        // Newton on exp(y) = x: y <- y + x exp(-y) - 1.
        let mut y = dd(self.hi.ln(), 0.0);
        for _ in 0..2 {
            y = y + self * (-y).exp() - Self::one();
        }
        y
    }
    fn log(self, base: Self) -> Self {
        self.ln() / base.ln()
    }
    fn log2(self) -> Self {
        self.ln() / DD_LN_2
    }
    fn log10(self) -> Self {
        self.ln() / DD_LN_10
    }
    fn max(self, other: Self) -> Self {
        if self.is_nan() || other > self {
            other
        } else {
            self
        }
    }
    fn min(self, other: Self) -> Self {
        if self.is_nan() || other < self {
            other
        } else {
            self
        }
    }
    fn abs_sub(self, other: Self) -> Self {
        (self - other).max(Self::zero())
    }
    fn cbrt(self) -> Self {
        if self.hi == 0.0 || !self.hi.is_finite() {
            return self;
        }
        let mut y = dd(self.hi.cbrt(), 0.0);
        for _ in 0..2 {
            let y2 = y.square();
            y = y - (y2 * y - self) / (dd(3.0, 0.0) * y2);
        }
        y
    }
    fn hypot(self, other: Self) -> Self {
        (self.square() + other.square()).sqrt()
    }
    fn sin(self) -> Self {
        self.sin_cos().0
    }
    fn cos(self) -> Self {
        self.sin_cos().1
    }
    fn tan(self) -> Self {
        let (s, c) = self.sin_cos();
        s / c
    }
    fn asin(self) -> Self {
        self.atan2((Self::one() - self.square()).sqrt())
    }
    fn acos(self) -> Self {
        (Self::one() - self.square()).sqrt().atan2(self)
    }
    fn atan(self) -> Self {
        if !self.hi.is_finite() {
            return dd(self.hi.atan(), 0.0);
        }
        // Newton on tan(y) = x: y <- y + (x cos y - sin y) cos y.
        let mut y = dd(self.hi.atan(), 0.0);
        for _ in 0..2 {
            let (s, c) = y.sin_cos();
            y = y + (self * c - s) * c;
        }
        y
    }
    fn atan2(self, other: Self) -> Self {
        let (y, x) = (self, other);
        if x.hi == 0.0 {
            return if y.hi > 0.0 {
                Self::FRAC_PI_2()
            } else if y.hi < 0.0 {
                -Self::FRAC_PI_2()
            } else {
                Self::zero()
            };
        }
        let base = (y / x).atan();
        if x.hi > 0.0 {
            base
        } else if y.hi >= 0.0 {
            base + DD_PI
        } else {
            base - DD_PI
        }
    }
    fn sin_cos(self) -> (Self, Self) {
        if !self.hi.is_finite() {
            return (Self::nan(), Self::nan());
        }
        let half_pi = Self::FRAC_PI_2();
        let k = (self / half_pi).round();
        let r = self - k * half_pi;
        let (s, c) = Self::sin_cos_reduced(r);
        match (k.to_i64().unwrap_or(0)).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }
    fn exp_m1(self) -> Self {
        if self.hi.abs() <= 0.5 * std::f64::consts::LN_2 {
            Self::expm1_reduced(self)
        } else {
            self.exp() - Self::one()
        }
    }
    fn ln_1p(self) -> Self {
        if self.hi.abs() > 0.25 {
            return (Self::one() + self).ln();
        }
        // Newton on expm1(y) = x, which keeps relative precision near 0.
        let mut y = dd(self.hi.ln_1p(), 0.0);
        for _ in 0..2 {
            let em1 = y.exp_m1();
            y = y - (em1 - self) / (em1 + Self::one());
        }
        y
    }
    fn sinh(self) -> Self {
        let em1 = self.exp_m1();
        let ep1 = (-self).exp_m1();
        (em1 - ep1).ldexp(-1)
    }
    fn cosh(self) -> Self {
        let e = self.exp();
        (e + e.recip()).ldexp(-1)
    }
    fn tanh(self) -> Self {
        self.sinh() / self.cosh()
    }
    fn asinh(self) -> Self {
        let a = self.abs();
        let v = (a + (a.square() + Self::one()).sqrt()).ln();
        if self.hi < 0.0 {
            -v
        } else {
            v
        }
    }
    fn acosh(self) -> Self {
        (self + (self.square() - Self::one()).sqrt()).ln()
    }
    fn atanh(self) -> Self {
        ((Self::one() + self) / (Self::one() - self)).ln().ldexp(-1)
    }
    fn integer_decode(self) -> (u64, i16, i8) {
        self.hi.integer_decode()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // hi/lo splits of 50-digit reference values.
    fn close(x: DoubleDouble, hi: f64, lo: f64, tol: f64) -> bool {
        let d = x - dd(hi, lo);
        d.hi.abs() <= tol * hi.abs().max(f64::MIN_POSITIVE)
    }

    const TOL: f64 = 1e-30;

    #[test]
    fn division_is_double_double_accurate() {
        let x = dd(0.7, 0.0);
        assert!(close(DoubleDouble::one() / x, 1.4285714285714286, 5.890979314337566e-17, TOL));
        let third = DoubleDouble::one() / dd(3.0, 0.0);
        assert!((third * dd(3.0, 0.0) - DoubleDouble::one()).hi.abs() < 1e-31);
    }

    #[test]
    fn sqrt_and_cbrt() {
        assert!(close(dd(2.0, 0.0).sqrt(), 1.4142135623730951, -9.667293313452913e-17, TOL));
        assert!(close(dd(2.0, 0.0).cbrt(), 1.2599210498948732, -2.589933375300507e-17, TOL));
        assert_eq!(DoubleDouble::zero().sqrt(), DoubleDouble::zero());
        assert!(dd(-1.0, 0.0).sqrt().is_nan());
    }

    #[test]
    fn exponential_and_logarithm() {
        assert!(close(DoubleDouble::one().exp(), DD_E.hi, DD_E.lo, TOL));
        assert!(close(dd(0.5, 0.0).exp(), 1.6487212707001282, -4.731568479435833e-17, TOL));
        assert!(close(dd(3.0, 0.0).ln(), 1.0986122886681098, -9.07129723500153e-17, TOL));
        assert!(close(dd(2.0, 0.0).ln(), DD_LN_2.hi, DD_LN_2.lo, TOL));
        assert!(close(dd(1e-10, 0.0).exp_m1(), 1.00000000005e-10, 3.3900133221217734e-27, TOL));
        let x = dd(1e-10, 0.0);
        assert!(close(x.exp_m1().ln_1p(), 1e-10, 0.0, 1e-29));
        assert!(close(dd(-3.5, 0.0).exp().ln(), -3.5, 0.0, TOL));
    }

    #[test]
    fn trigonometry() {
        let one = DoubleDouble::one();
        assert!(close(one.sin(), 0.8414709848078965, 1.776845092935536e-18, TOL));
        assert!(close(one.cos(), 0.5403023058681398, -4.760954612604417e-17, TOL));
        assert!(close(dd(0.5, 0.0).atan(), 0.4636476090008061, 2.2698777452961687e-17, TOL));
        let (s, c) = dd(10.0, 0.0).sin_cos();
        assert!((s.square() + c.square() - one).hi.abs() < 1e-30);
        assert!(close(one.atan2(one), DD_PI.hi / 4.0, DD_PI.lo / 4.0, TOL));
    }

    #[test]
    fn ordering_and_rounding() {
        let a = dd(1.0, 1e-20);
        assert!(a > DoubleDouble::one());
        assert_eq!(a.floor(), DoubleDouble::one());
        assert_eq!(dd(-1.5, 0.0).trunc(), dd(-1.0, 0.0));
        assert_eq!(dd(2.5, 0.0).round(), dd(3.0, 0.0));
        assert_eq!(dd(1.0, -1e-20).floor(), DoubleDouble::zero());
        assert_eq!(dd(3.0, 0.0).powi(-2) * dd(9.0, 0.0), DoubleDouble::one());
    }

    #[test]
    fn primitive_conversions() {
        let big = <DoubleDouble as FromPrimitive>::from_i64(i64::MAX - 1).unwrap();
        assert_eq!(big.to_i64(), Some(i64::MAX - 1));
        assert_eq!(<DoubleDouble as FromPrimitive>::from_f64(0.1).unwrap().hi(), 0.1);
        assert_eq!(dd(2.75, 0.0).to_u64(), Some(2));
    }
}
