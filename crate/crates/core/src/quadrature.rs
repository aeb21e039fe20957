//! Adaptive quadrature rules used as independent oracles.
//!
//! Neither rule shares code with the AGM evaluation path, so agreement
//! between the two is evidence rather than tautology.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default subdivision budget for the adaptive rules.
pub const PANEL_BUDGET: usize = 1_000_000;

const MAX_DEPTH: u32 = 64;

struct Panel<T> {
    a: T,
    b: T,
    fa: T,
    fm: T,
    fb: T,
    whole: T,
    tol: T,
    depth: u32,
}

/// Adaptive Simpson quadrature with Richardson-corrected panels.
///
/// A panel is accepted once the halving estimate `|S2 - S1| / 15` drops
/// below its share of `tol`; the share halves at every subdivision. Panels are
/// processed depth-first from a deterministic stack, so the result is a pure
/// function of the inputs.
pub fn adaptive_simpson<T, F>(f: F, a: T, b: T, tol: T, max_panels: usize) -> Result<T>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let two = T::lit(2.0);
    let six = T::lit(6.0);
    let fifteen = T::lit(15.0);
    let simpson = |a: T, b: T, fa: T, fm: T, fb: T| (b - a) / six * (fa + T::lit(4.0) * fm + fb);

    let fa = f(a);
    let fb = f(b);
    let m = (a + b) / two;
    let fm = f(m);
    let mut stack = vec![Panel {
        a,
        b,
        fa,
        fm,
        fb,
        whole: simpson(a, b, fa, fm, fb),
        tol,
        depth: 0,
    }];
    let mut total = T::zero();
    let mut panels = 1usize;

    while let Some(p) = stack.pop() {
        let m = (p.a + p.b) / two;
        let lm = (p.a + m) / two;
        let rm = (m + p.b) / two;
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(p.a, m, p.fa, flm, p.fm);
        let right = simpson(m, p.b, p.fm, frm, p.fb);
        let delta = left + right - p.whole;
        if delta.abs() <= fifteen * p.tol {
            total = total + left + right + delta / fifteen;
            continue;
        }
        if p.depth >= MAX_DEPTH || panels >= max_panels {
            return Err(Error::Convergence {
                tol: tol.as_f64(),
                panels,
            });
        }
        panels += 1;
        let half = p.tol / two;
        // Right pushed first so the left half is refined first.
        stack.push(Panel {
            a: m,
            b: p.b,
            fa: p.fm,
            fm: frm,
            fb: p.fb,
            whole: right,
            tol: half,
            depth: p.depth + 1,
        });
        stack.push(Panel {
            a: p.a,
            b: m,
            fa: p.fa,
            fm: flm,
            fb: p.fm,
            whole: left,
            tol: half,
            depth: p.depth + 1,
        });
    }
    Ok(total)
}

// Kronrod abscissae on [-1, 1] (non-negative half, descending) and weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
// Gauss weights for the 7-point rule embedded at XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn kronrod15<T, F>(f: &F, a: T, b: T) -> (T, T)
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let half = (b - a) / T::lit(2.0);
    let center = (a + b) / T::lit(2.0);
    let fc = f(center);
    let mut kronrod = fc * T::lit(WGK[7]);
    let mut gauss = fc * T::lit(WG[3]);
    for (j, (&x, &w)) in XGK[..7].iter().zip(&WGK[..7]).enumerate() {
        let dx = half * T::lit(x);
        let pair = f(center - dx) + f(center + dx);
        kronrod = kronrod + pair * T::lit(w);
        if j % 2 == 1 {
            gauss = gauss + pair * T::lit(WG[j / 2]);
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Globally adaptive Gauss-Kronrod (7/15) quadrature.
///
/// Repeatedly bisects the panel with the largest error estimate until the
/// summed estimate is below `tol`.
pub fn gauss_kronrod<T, F>(f: F, a: T, b: T, tol: T, max_panels: usize) -> Result<T>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let (v, e) = kronrod15(&f, a, b);
    let mut panels = vec![(a, b, v, e)];
    loop {
        let err = panels.iter().fold(T::zero(), |acc, p| acc + p.3);
        if err <= tol {
            return Ok(panels.iter().fold(T::zero(), |acc, p| acc + p.2));
        }
        if panels.len() >= max_panels {
            return Err(Error::Convergence {
                tol: tol.as_f64(),
                panels: panels.len(),
            });
        }
        let worst = panels
            .iter()
            .enumerate()
            .fold(0, |best, (i, p)| if p.3 > panels[best].3 { i } else { best });
        let (pa, pb, _, _) = panels[worst];
        let mid = (pa + pb) / T::lit(2.0);
        let (lv, le) = kronrod15(&f, pa, mid);
        let (rv, re) = kronrod15(&f, mid, pb);
        panels[worst] = (pa, mid, lv, le);
        panels.push((mid, pb, rv, re));
    }
}
