use std::io::Write;

use toader_bounds::bounds::{combination, envelope, lambda_star, mu_star, BoundEnvelope};
use toader_bounds::elliptic::{ell_e, ell_k};
use toader_bounds::means::{arithmetic, contraharmonic, j_interp, power_mean, toader};
use toader_bounds::sharpness::{estimate_thresholds, find_violation_witness, perturbed_constants, Side};
use toader_bounds::verify::{run_all, run_suite, Suite, VerifyConfig};
use toader_bounds::{AlphaWeight64, GapParams64, InterpParam64, Modulus64, PositivePair64};

use crate::args::{EvalArgs, Func, SharpnessArgs, TableArgs, VerifyArgs};
use crate::format::sig;
use crate::CliError;

type Out<'a> = dyn Write + 'a;

fn io(e: std::io::Error) -> CliError {
    CliError::Usage(format!("write failed: {e}"))
}

fn need(v: Option<f64>, flag: &str, func: Func) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--fn {func:?} requires --{flag}")))
}

fn pair(a: &EvalArgs) -> Result<PositivePair64, CliError> {
    let x = need(a.a, "a", a.func)?;
    let y = need(a.b, "b", a.func)?;
    Ok(PositivePair64::new(x, y)?)
}

pub fn eval_value(a: &EvalArgs) -> Result<f64, CliError> {
    Ok(match a.func {
        Func::K => ell_k(Modulus64::new(need(a.r, "r", a.func)?)?)?.value,
        Func::E => ell_e(Modulus64::new(need(a.r, "r", a.func)?)?)?.value,
        Func::T => toader(pair(a)?),
        Func::C => contraharmonic(pair(a)?),
        Func::A => arithmetic(pair(a)?),
        Func::Mp => {
            let p = pair(a)?;
            power_mean(p, need(a.p, "p", a.func)?)
        }
        Func::J => {
            let p = pair(a)?;
            j_interp(InterpParam64::new(need(a.x, "x", a.func)?)?, p)
        }
        Func::Combination => {
            let p = pair(a)?;
            combination(AlphaWeight64::new(need(a.alpha, "alpha", a.func)?)?, p)
        }
    })
}

pub fn eval(a: &EvalArgs, out: &mut Out) -> Result<(), CliError> {
    let v = eval_value(a)?;
    writeln!(out, "{}", sig(v)).map_err(io)
}

/// Grid of `steps` points from `r_min` to `r_max`, both included.
fn table_grid(a: &TableArgs) -> Vec<f64> {
    if a.steps == 1 {
        return vec![a.r_min];
    }
    let span = a.r_max - a.r_min;
    let last = (a.steps - 1) as f64;
    (0..a.steps)
        .map(|i| if i + 1 == a.steps { a.r_max } else { a.r_min + span * i as f64 / last })
        .collect()
}

pub fn table(a: &TableArgs, out: &mut Out) -> Result<(), CliError> {
    if a.envelopes.is_empty() {
        return Err(CliError::Usage("--envelopes needs at least one id".into()));
    }
    if a.steps == 0 {
        return Err(CliError::Usage("--steps must be at least 1".into()));
    }
    if !(0.0 <= a.r_min && a.r_min <= a.r_max && a.r_max <= 1.0) {
        return Err(CliError::Usage(format!(
            "need 0 <= r-min <= r-max <= 1, got [{}, {}]",
            a.r_min, a.r_max
        )));
    }
    let envs = a
        .envelopes
        .iter()
        .map(|name| envelope::<f64>(name).map_err(|_| CliError::Usage(format!("unknown envelope {name}"))))
        .collect::<Result<Vec<BoundEnvelope<f64>>, _>>()?;

    let mut header = String::from("r,E");
    for e in &envs {
        header.push_str(&format!(",{0}_lo,{0}_hi", e.kind.id()));
    }
    writeln!(out, "{header}").map_err(io)?;
    for r in table_grid(a) {
        let m = Modulus64::new(r)?;
        let mut row = format!("{},{}", sig(r), sig(ell_e(m)?.value));
        for e in &envs {
            row.push_str(&format!(",{},{}", sig(e.lower_at(m)), sig(e.upper_at(m))));
        }
        writeln!(out, "{row}").map_err(io)?;
    }
    Ok(())
}

pub fn verify(a: &VerifyArgs, out: &mut Out) -> Result<(), CliError> {
    let cfg = VerifyConfig {
        samples: a.samples,
        seed: a.seed,
    };
    let reports = if a.suite == "all" {
        run_all(cfg)
    } else {
        let suite: Suite = a.suite.parse().map_err(|_| {
            let known: Vec<_> = Suite::ALL.iter().map(|s| s.id()).collect();
            CliError::Usage(format!("unknown suite {}; expected all or one of {}", a.suite, known.join(", ")))
        })?;
        vec![run_suite(suite, cfg)]
    };
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            writeln!(out).map_err(io)?;
        }
        writeln!(out, "{r}").map_err(io)?;
    }
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| r.suite.as_str()).collect();
    if reports.len() > 1 {
        writeln!(out).map_err(io)?;
        if failed.is_empty() {
            writeln!(out, "all {} suites passed", reports.len()).map_err(io)?;
        } else {
            writeln!(out, "failed suites: {}", failed.join(", ")).map_err(io)?;
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

pub fn sharpness(a: &SharpnessArgs, out: &mut Out) -> Result<(), CliError> {
    let w = AlphaWeight64::new(a.alpha).map_err(|_| CliError::Usage(format!("--alpha {} outside (0, 1)", a.alpha)))?;
    let est = estimate_thresholds(w, a.grid, a.tol)?;
    let low = GapParams64::lower_threshold(w);
    let high = GapParams64::upper_threshold(w);
    let line = |out: &mut Out, k: &str, v: String| writeln!(out, "{k:<16}{v}").map_err(io);
    line(out, "alpha", sig(a.alpha))?;
    line(out, "tolerance", sig(est.tolerance))?;
    line(out, "u_low", sig(est.u_low))?;
    line(out, "u_low_target", sig(low))?;
    line(out, "u_low_dev", sig((est.u_low - low).abs()))?;
    line(out, "u_high", sig(est.u_high))?;
    line(out, "u_high_target", sig(high))?;
    line(out, "u_high_dev", sig((est.u_high - high).abs()))?;
    line(out, "lambda_star", sig(lambda_star(w)))?;
    line(out, "mu_star", sig(mu_star(w)))?;
    if let Some(eps) = a.perturb {
        let (lo, hi) = perturbed_constants(w, eps)?;
        for (name, p, side) in [("lower", lo, Side::Lower), ("upper", hi, Side::Upper)] {
            let wit = find_violation_witness(w, p, side)?;
            line(
                out,
                &format!("witness_{name}"),
                format!("p = {}, r = {}, f = {}", sig(p.get()), sig(wit.r.r()), sig(wit.value)),
            )?;
        }
    }
    Ok(())
}
