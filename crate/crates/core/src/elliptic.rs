//! Legendre complete elliptic integrals `K(r)`, `E(r)` in the modulus
//! convention, their complementary forms, derivatives and the Landen
//! combination `2E - r'^2 K`.
//!
//! The fast path is the arithmetic-geometric mean. Every combination that
//! would cancel when formed from `K` and `E` directly (`E - r'^2 K`,
//! `K - E`, `2E - r'^2 K - pi/2`) is instead assembled from the AGM tail
//! sums, which are each positive.

use crate::error::{domain, Result};
use crate::quadrature::{adaptive_simpson, PANEL_BUDGET};
use crate::scalar::Scalar;

const MAX_AGM_STEPS: usize = 64;

/// Elliptic modulus `r` in `[0, 1]` together with its complement
/// `r' = sqrt(1 - r^2)`.
///
/// The complement is derived at construction from whichever of the two was
/// supplied, never set independently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus<T> {
    r: T,
    rc: T,
    // Squares formed from whichever of r, r' is exact.
    r2: T,
    rc2: T,
}

impl<T: Scalar> Modulus<T> {
    pub fn new(r: T) -> Result<Self> {
        if !(r >= T::zero() && r <= T::one()) {
            return domain(format!("modulus r = {r} outside [0, 1]"));
        }
        let rc2 = (T::one() - r) * (T::one() + r);
        Ok(Self {
            r,
            rc: rc2.sqrt(),
            r2: r * r,
            rc2,
        })
    }

    /// Builds the modulus whose complement is `rc`.
    ///
    /// Preferred when `r'` is the primary quantity (e.g. a ratio `b/a`),
    /// since `r'` then carries no rounding from `1 - r^2`.
    pub fn from_complement(rc: T) -> Result<Self> {
        Ok(Self::new(rc)?.complemented())
    }

    /// Pair `(r, r')` already known to satisfy `r^2 + r'^2 = 1`.
    pub(crate) fn from_parts(r: T, rc: T) -> Self {
        debug_assert!(r >= T::zero() && r <= T::one() && rc >= T::zero() && rc <= T::one());
        Self {
            r,
            rc,
            r2: r * r,
            rc2: rc * rc,
        }
    }

    #[inline]
    pub fn r(&self) -> T {
        self.r
    }

    #[inline]
    pub fn complement(&self) -> T {
        self.rc
    }

    /// `r^2`.
    #[inline]
    pub fn r_squared(&self) -> T {
        self.r2
    }

    /// `r'^2 = 1 - r^2`.
    #[inline]
    pub fn complement_squared(&self) -> T {
        self.rc2
    }

    /// The modulus `r'`, whose complement is `r`.
    pub fn complemented(&self) -> Self {
        Self {
            r: self.rc,
            rc: self.r,
            r2: self.rc2,
            rc2: self.r2,
        }
    }

    /// `1 - r'`, computed as `r^2 / (1 + r')` to avoid cancellation near `r = 0`.
    pub fn one_minus_complement(&self) -> T {
        self.r2 / (T::one() + self.rc)
    }
}

/// Which evaluation route produced an [`EllipticValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Agm,
    Quadrature,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticValue<T> {
    pub value: T,
    pub method: Method,
}

impl<T> EllipticValue<T> {
    fn agm(value: T) -> Self {
        Self {
            value,
            method: Method::Agm,
        }
    }
}

/// Sums accumulated by the AGM iteration `a0 = 1, b0 = r'`.
///
/// With `c0 = r` and `c_{n+1} = (a_n - b_n)/2 = c_n^2 / (4 a_{n+1})`:
/// `k = pi / (2 agm)`, `tail = sum_{n>=1} 2^{n-1} c_n^2`,
/// `drift = sum_{n>=1} c_n = 1 - agm`.
#[derive(Debug, Clone, Copy)]
struct AgmSums<T> {
    k: T,
    tail: T,
    drift: T,
}

fn agm_sums<T: Scalar>(m: &Modulus<T>) -> AgmSums<T> {
    debug_assert!(m.complement() > T::zero());
    let half = T::lit(0.5);
    let quarter = T::lit(0.25);
    let mut a = T::one();
    let mut b = m.complement();
    // c_n^2, starting from c_0^2 = r^2.
    let mut c_sq = m.r_squared();
    let mut weight = T::one();
    let mut tail = T::zero();
    let mut drift = T::zero();
    for _ in 0..MAX_AGM_STEPS {
        let a_next = (a + b) * half;
        b = (a * b).sqrt();
        a = a_next;
        let c = c_sq * quarter / a;
        c_sq = c * c;
        tail = tail + weight * c_sq;
        drift = drift + c;
        weight = weight + weight;
        if c <= T::roundoff() * a {
            break;
        }
    }
    AgmSums {
        k: T::FRAC_PI_2() / a,
        tail,
        drift,
    }
}

/// `K(r)` by the arithmetic-geometric mean, `K = pi / (2 agm(1, r'))`.
///
/// `r = 1` is the logarithmic pole and is reported as a domain error.
pub fn ell_k<T: Scalar>(m: Modulus<T>) -> Result<EllipticValue<T>> {
    if m.r() == T::one() {
        return domain("K(r) has a pole at r = 1");
    }
    Ok(EllipticValue::agm(agm_sums(&m).k))
}

/// Past `r = r'` the bracket `1 - r^2/2 - tail = E/K` tends to 0 and
/// cancels; `E` is then taken from Legendre's relation instead.
fn past_midpoint<T: Scalar>(m: &Modulus<T>) -> bool {
    m.r() > m.complement()
}

/// `E = (pi/2 + K (K' - E')) / K'` from `E K' + E' K - K K' = pi/2`, with
/// `K' - E'` in its cancellation-free tail form. Requires `r < 1`.
fn e_by_legendre<T: Scalar>(m: &Modulus<T>, s: &AgmSums<T>) -> T {
    let c = m.complemented();
    let sc = agm_sums(&c);
    let kc_minus_ec = sc.k * (T::lit(0.5) * c.r_squared() + sc.tail);
    (T::FRAC_PI_2() + s.k * kc_minus_ec) / sc.k
}

fn e_from_sums<T: Scalar>(m: &Modulus<T>, s: &AgmSums<T>) -> T {
    if past_midpoint(m) {
        e_by_legendre(m, s)
    } else {
        s.k * (T::one() - T::lit(0.5) * m.r_squared() - s.tail)
    }
}

/// `E(r) = K(r) (1 - r^2/2 - sum_{n>=1} 2^{n-1} c_n^2)` for `r <= r'`, and
/// through Legendre's relation beyond; `E(1) = 1`.
pub fn ell_e<T: Scalar>(m: Modulus<T>) -> Result<EllipticValue<T>> {
    if m.r() == T::one() {
        return Ok(EllipticValue::agm(T::one()));
    }
    let s = agm_sums(&m);
    Ok(EllipticValue::agm(e_from_sums(&m, &s)))
}

fn check_oracle_tol<T: Scalar>(tol: T) -> Result<()> {
    if !(tol > T::zero() && tol <= T::lit(1e-6)) {
        return domain(format!("oracle tolerance {tol} outside (0, 1e-6]"));
    }
    Ok(())
}

/// `1 - r^2 sin^2(theta)`, factored to stay accurate as `r -> 1`.
fn radicand<T: Scalar>(r: T, theta: T) -> T {
    let s = r * theta.sin();
    (T::one() - s) * (T::one() + s)
}

/// `K(r)` by adaptive Simpson quadrature of the defining integral.
pub fn ell_k_oracle<T: Scalar>(m: Modulus<T>, tol: T) -> Result<EllipticValue<T>> {
    check_oracle_tol(tol)?;
    if m.r() == T::one() {
        return domain("K(r) has a pole at r = 1");
    }
    let r = m.r();
    let value = adaptive_simpson(
        |t| T::one() / radicand(r, t).sqrt(),
        T::zero(),
        T::FRAC_PI_2(),
        tol,
        PANEL_BUDGET,
    )?;
    Ok(EllipticValue {
        value,
        method: Method::Quadrature,
    })
}

/// `E(r)` by adaptive Simpson quadrature of the defining integral.
pub fn ell_e_oracle<T: Scalar>(m: Modulus<T>, tol: T) -> Result<EllipticValue<T>> {
    check_oracle_tol(tol)?;
    let r = m.r();
    let value = adaptive_simpson(
        |t| radicand(r, t).max(T::zero()).sqrt(),
        T::zero(),
        T::FRAC_PI_2(),
        tol,
        PANEL_BUDGET,
    )?;
    Ok(EllipticValue {
        value,
        method: Method::Quadrature,
    })
}

/// `K'(r) = K(r')`.
pub fn comp_k<T: Scalar>(m: Modulus<T>) -> Result<EllipticValue<T>> {
    if m.r() == T::zero() {
        return domain("K'(r) has a pole at r = 0");
    }
    ell_k(m.complemented())
}

/// `E'(r) = E(r')`.
pub fn comp_e<T: Scalar>(m: Modulus<T>) -> Result<EllipticValue<T>> {
    ell_e(m.complemented())
}

fn open_interval<T: Scalar>(m: &Modulus<T>, what: &str) -> Result<()> {
    if m.r() <= T::zero() || m.r() >= T::one() {
        return domain(format!("{what} requires 0 < r < 1, got r = {}", m.r()));
    }
    Ok(())
}

/// `dK/dr = (E - r'^2 K) / (r r'^2)`.
pub fn d_ell_k<T: Scalar>(m: Modulus<T>) -> Result<T> {
    open_interval(&m, "dK/dr")?;
    Ok(e_minus_rc2k(m)? / (m.r() * m.complement_squared()))
}

/// `dE/dr = (E - K) / r`.
pub fn d_ell_e<T: Scalar>(m: Modulus<T>) -> Result<T> {
    open_interval(&m, "dE/dr")?;
    Ok(-k_minus_e(m)? / m.r())
}

/// `d(K - E)/dr = r E / r'^2`.
pub fn d_k_minus_e<T: Scalar>(m: Modulus<T>) -> Result<T> {
    open_interval(&m, "d(K - E)/dr")?;
    let e = ell_e(m)?.value;
    Ok(m.r() * e / m.complement_squared())
}

/// `d(E - r'^2 K)/dr = r K`.
pub fn d_e_minus_rc2k<T: Scalar>(m: Modulus<T>) -> Result<T> {
    open_interval(&m, "d(E - r'^2 K)/dr")?;
    Ok(m.r() * ell_k(m)?.value)
}

/// `K(r) - E(r) = K (r^2/2 + tail)`, free of cancellation for small `r`.
pub fn k_minus_e<T: Scalar>(m: Modulus<T>) -> Result<T> {
    if m.r() == T::one() {
        return domain("K(r) - E(r) diverges at r = 1");
    }
    let s = agm_sums(&m);
    Ok(s.k * (T::lit(0.5) * m.r_squared() + s.tail))
}

/// `E(r) - r'^2 K(r) = K (r^2/2 - tail)`; the limit value 1 at `r = 1`.
pub fn e_minus_rc2k<T: Scalar>(m: Modulus<T>) -> Result<T> {
    if m.r() == T::one() {
        return Ok(T::one());
    }
    let s = agm_sums(&m);
    Ok(e_minus_rc2k_from_sums(&m, &s))
}

fn e_minus_rc2k_from_sums<T: Scalar>(m: &Modulus<T>, s: &AgmSums<T>) -> T {
    if past_midpoint(m) {
        e_by_legendre(m, s) - m.complement_squared() * s.k
    } else {
        s.k * (T::lit(0.5) * m.r_squared() - s.tail)
    }
}

/// `(E - r'^2 K) / r^2`, continuous on `[0, 1]` with value `pi/4` at 0.
pub fn e_minus_rc2k_over_r2<T: Scalar>(m: Modulus<T>) -> T {
    let r = m.r();
    if r == T::one() {
        return T::one();
    }
    let s = agm_sums(&m);
    if r == T::zero() {
        return s.k * T::lit(0.5);
    }
    if past_midpoint(&m) {
        return e_minus_rc2k_from_sums(&m, &s) / m.r_squared();
    }
    s.k * (T::lit(0.5) - s.tail / m.r_squared())
}

/// `2E(r) - r'^2 K(r) = K (1 - 2 tail)`; the limit value 2 at `r = 1`.
pub fn two_e_minus_rc2k<T: Scalar>(m: Modulus<T>) -> T {
    if m.r() == T::one() {
        return T::lit(2.0);
    }
    let s = agm_sums(&m);
    two_e_minus_rc2k_from_sums(&m, &s)
}

fn two_e_minus_rc2k_from_sums<T: Scalar>(m: &Modulus<T>, s: &AgmSums<T>) -> T {
    if past_midpoint(m) {
        T::lit(2.0) * e_by_legendre(m, s) - m.complement_squared() * s.k
    } else {
        s.k * (T::one() - T::lit(2.0) * s.tail)
    }
}

fn landen_excess_from_sums<T: Scalar>(m: &Modulus<T>, s: &AgmSums<T>) -> T {
    if past_midpoint(m) {
        T::FRAC_2_PI() * two_e_minus_rc2k_from_sums(m, s) - T::one()
    } else {
        T::FRAC_2_PI() * s.k * (s.drift - T::lit(2.0) * s.tail)
    }
}

/// `(2/pi)(2E - r'^2 K) - 1`, formed as `(2/pi) K (drift - 2 tail)` for
/// `r <= r'`.
///
/// Both terms are `O(r^2)` with different leading coefficients, so the value
/// keeps full relative precision as `r -> 0`. Equals `4/pi - 1` at `r = 1`.
pub fn landen_excess<T: Scalar>(m: Modulus<T>) -> T {
    if m.r() == T::one() {
        return T::lit(4.0) / T::PI() - T::one();
    }
    landen_excess_from_sums(&m, &agm_sums(&m))
}

/// [`landen_excess`] divided by `r^2`; continuous on `[0, 1]`, from 1/4 to
/// `4/pi - 1`.
pub fn landen_excess_over_r2<T: Scalar>(m: Modulus<T>) -> T {
    let r = m.r();
    if r == T::one() {
        return T::lit(4.0) / T::PI() - T::one();
    }
    if r == T::zero() {
        return T::lit(0.25);
    }
    landen_excess_from_sums(&m, &agm_sums(&m)) / m.r_squared()
}

/// Right-hand side of the Landen relation,
/// `(2E(r) - r'^2 K(r)) / (1 + r) = E(2 sqrt(r) / (1 + r))`.
pub fn landen_rhs<T: Scalar>(m: Modulus<T>) -> Result<T> {
    if m.r() == T::one() {
        return domain("Landen relation requires r < 1");
    }
    Ok(two_e_minus_rc2k(m) / (T::one() + m.r()))
}

/// The ascending-Landen image `2 sqrt(r) / (1 + r)` as a modulus, with its
/// complement `(1 - r)/(1 + r)` formed directly.
pub fn landen_image<T: Scalar>(m: Modulus<T>) -> Modulus<T> {
    let one = T::one();
    let r = m.r();
    Modulus::from_parts(T::lit(2.0) * r.sqrt() / (one + r), (one - r) / (one + r))
}
