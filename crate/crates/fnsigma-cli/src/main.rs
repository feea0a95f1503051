//! Command-line front end: oracle evaluation, asymptotics with breakdown,
//! sector/regime classification, reference-table reproduction and sweeps.
//!
//! Exit codes: 0 success, 1 usage error, 2 numerical error, 3 table-cell
//! mismatch.

use clap::{Args, Parser, Subcommand};
use fnsigma::error::Error;
use fnsigma::f_asym::{self, Side};
use fnsigma::harness;
use fnsigma::numerics::{fmt_sig, BigReal, PrecisionCtx};
use fnsigma::params::{self, parse_rational, Parameters};
use fnsigma::psi_asym::{self, SectorTag, TruncPolicy};
use fnsigma::series;
use rug::{Complex, Rational};
use serde_json::{json, Value};
use std::io::Write as _;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fnsigma", version, about = "Wright-sum evaluator: series oracle and asymptotic expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Decimal working precision (env FNSIGMA_DIGITS overrides the default).
    #[arg(long)]
    digits: Option<u32>,
    /// Output format.
    #[arg(long, default_value = "text", value_parser = ["text", "json", "csv"])]
    format: String,
    /// Output file; stdout when absent.
    #[arg(long)]
    output: Option<String>,
    /// Significant digits in formatted values.
    #[arg(long, default_value_t = 9)]
    sig_digits: usize,
}

#[derive(Args, Clone)]
struct TruncArg {
    /// Truncation index of exponential sums (0..=3).
    #[arg(long, default_value_t = 3)]
    jmax: usize,
    /// Algebraic truncation: "opt" or a fixed index.
    #[arg(long, default_value = "opt")]
    trunc: String,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the series oracle two ways (defining series and Wright sum).
    Eval {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[command(flatten)]
        common: Common,
    },
    /// Asymptotic expansion of F with per-component breakdown.
    Asym {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[command(flatten)]
        tr: TruncArg,
        #[command(flatten)]
        common: Common,
    },
    /// Companion-function series vs its E/H expansions at real z.
    Psi {
        #[arg(long)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long)]
        z: String,
        #[command(flatten)]
        tr: TruncArg,
        #[command(flatten)]
        common: Common,
    },
    /// Regime report: components, retained terms and sector-diagram angles.
    Classify {
        #[arg(long)]
        sigma: String,
        #[arg(long, default_value = "3/4")]
        mu: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = ["pos", "neg"])]
        side: String,
        #[command(flatten)]
        common: Common,
    },
    /// Reproduce a reference table; exits 3 on any cell mismatch.
    Table {
        #[arg(long)]
        id: u8,
        #[command(flatten)]
        common: Common,
    },
    /// Error-decay sweep of the asymptotics against the oracle.
    Sweep {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: u32,
        /// Comma-separated x values, e.g. "4,8,16,32".
        #[arg(long, allow_hyphen_values = true)]
        x_values: String,
        #[command(flatten)]
        tr: TruncArg,
        #[command(flatten)]
        common: Common,
    },
}

fn env_digits() -> Option<u32> {
    std::env::var("FNSIGMA_DIGITS").ok()?.parse().ok()
}

fn make_ctx(common: &Common) -> Result<PrecisionCtx, Error> {
    let digits = common
        .digits
        .or_else(env_digits)
        .unwrap_or(fnsigma::numerics::DEFAULT_DIGITS);
    PrecisionCtx::new(digits)
}

fn parse_trunc(s: &str) -> Result<TruncPolicy, Error> {
    if s == "opt" {
        return Ok(TruncPolicy::default());
    }
    s.parse::<usize>()
        .map(TruncPolicy::Fixed)
        .map_err(|_| Error::InvalidParameter(format!("--trunc must be 'opt' or an index, got '{s}'")))
}

fn emit(common: &Common, text: String) -> Result<(), Error> {
    match &common.output {
        Some(path) => std::fs::write(path, text.as_bytes())
            .map_err(|e| Error::InvalidParameter(format!("cannot write {path}: {e}"))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.write_all(b"\n"))
                .map_err(|e| Error::InvalidParameter(format!("stdout: {e}")))
        }
    }
}

fn sector_str(t: SectorTag) -> &'static str {
    match t {
        SectorTag::ExpLarge => "exp-large",
        SectorTag::OscBoundary => "oscillatory-boundary",
        SectorTag::ExpSmallPresent => "exp-small",
        SectorTag::AlgebraicOnly => "algebraic-only",
    }
}

fn retained_json(list: &[f_asym::RetainedExp]) -> Value {
    Value::Array(
        list.iter()
            .map(|e| {
                json!({
                    "r": e.r,
                    "sign": e.sign,
                    "phi_over_pi": e.phi.coeff().to_string(),
                    "sector": sector_str(e.sector),
                    "subdominant": e.subdominant,
                })
            })
            .collect(),
    )
}

fn render(common: &Common, value: &Value, text_lines: Vec<String>) -> Result<(), Error> {
    match common.format.as_str() {
        "json" => emit(common, serde_json::to_string_pretty(value).unwrap()),
        _ => emit(common, text_lines.join("\n")),
    }
}

fn cmd_eval(sigma: &str, mu: &str, n: u32, x: &str, common: &Common) -> Result<(), Error> {
    let ctx = make_ctx(common)?;
    let p = Parameters::from_strs(sigma, mu, n)?;
    let xv = ctx.real_from_str(x)?;
    let a = series::f_direct(&p, &xv, &ctx)?;
    let b = series::f_wright(&p, &xv, &ctx)?;
    let va = a.value.real().clone();
    let vb = b.value.real().clone();
    let diff = (va.clone() - &vb).abs();
    let scale = va.clone().abs().max(&vb.clone().abs());
    let agree = if diff.is_zero() || scale.is_zero() {
        ctx.digits() as f64
    } else {
        -(diff / scale).log10().to_f64()
    };
    let sd = common.sig_digits;
    let v = json!({
        "sigma": sigma, "mu": mu, "n": n, "x": x,
        "digits": ctx.digits(),
        "f_direct": fmt_sig(&va, sd),
        "f_wright": fmt_sig(&vb, sd),
        "agreement_digits": format!("{agree:.1}"),
        "terms_used": a.terms_used.max(b.terms_used),
        "cancellation_digits": a.cancellation_digits.max(b.cancellation_digits),
    });
    render(
        common,
        &v,
        vec![
            format!("F (defining series) = {}", fmt_sig(&va, sd)),
            format!("F (Wright sum)      = {}", fmt_sig(&vb, sd)),
            format!("agreement: {agree:.1} digits; cancellation: {} digits",
                a.cancellation_digits.max(b.cancellation_digits)),
        ],
    )
}

fn cmd_asym(sigma: &str, mu: &str, n: u32, x: &str, tr: &TruncArg, common: &Common) -> Result<(), Error> {
    let ctx = make_ctx(common)?;
    let p = Parameters::from_strs(sigma, mu, n)?;
    let xv = ctx.real_from_str(x)?;
    let trunc = parse_trunc(&tr.trunc)?;
    let r = f_asym::f_asym(&p, &xv, tr.jmax, trunc, &ctx)?;
    let sd = common.sig_digits;
    let comps: Vec<String> = r.regime.components.iter().map(|c| format!("{c:?}")).collect();
    let v = json!({
        "sigma": sigma, "mu": mu, "n": n, "x": x,
        "digits": ctx.digits(),
        "jmax": r.jmax,
        "e_part": fmt_sig(&r.e_part, sd),
        "h_part": fmt_sig(&r.h_part, sd),
        "value": fmt_sig(&r.value, sd),
        "h_kstop": r.h_kstop,
        "components": comps,
        "notes": r.regime.notes,
        "retained": retained_json(&r.regime.retained),
        "h_terms": r.h_terms.iter().map(|t| fmt_sig(t, sd)).collect::<Vec<_>>(),
    });
    render(
        common,
        &v,
        vec![
            format!("e_part = {}", fmt_sig(&r.e_part, sd)),
            format!("h_part = {} (kstop {:?})", fmt_sig(&r.h_part, sd), r.h_kstop),
            format!("value  = {}", fmt_sig(&r.value, sd)),
            format!("components: {}", comps.join("+")),
            format!("notes: {}", r.regime.notes.join("; ")),
        ],
    )
}

fn cmd_psi(sigma: &str, delta: &str, z: &str, tr: &TruncArg, common: &Common) -> Result<(), Error> {
    let ctx = make_ctx(common)?;
    let s = parse_rational(sigma)?;
    if s <= 0 || s >= 1 {
        return Err(Error::InvalidParameter(format!(
            "sigma must lie in (0, 1), got {s}"
        )));
    }
    let d = parse_rational(delta)?;
    let zv = ctx.real_from_str(z)?;
    if zv.is_zero() {
        return Err(Error::Domain("z must be nonzero".into()));
    }
    let zc = Complex::with_val(ctx.prec(), (&zv, &ctx.zero()));
    let trunc = parse_trunc(&tr.trunc)?;
    let oracle = series::psi(&s, &d, &zc, &ctx)?;
    let branch = if zv < 0 { -1 } else { 1 };
    let e = psi_asym::e_expansion(&s, &d, &zc, tr.jmax, &ctx)?;
    let h = psi_asym::h_expansion(&s, &d, &zc, branch, trunc, &ctx)?;
    let approx = e.clone() + &h;
    let diff = fnsigma::numerics::cabs(&(approx.clone() - &oracle.value));
    let scale = fnsigma::numerics::cabs(&oracle.value);
    let rel = if scale.is_zero() { diff.clone() } else { diff / scale };
    let sd = common.sig_digits;
    let v = json!({
        "sigma": sigma, "delta": delta, "z": z,
        "digits": ctx.digits(),
        "psi_series": fmt_sig(oracle.value.real(), sd),
        "e_expansion": fmt_sig(e.real(), sd),
        "h_expansion": fmt_sig(h.real(), sd),
        "e_plus_h": fmt_sig(approx.real(), sd),
        "rel_err": fmt_sig(&rel, 3),
        "branch_sign": branch,
    });
    render(
        common,
        &v,
        vec![
            format!("psi (series) = {}", fmt_sig(oracle.value.real(), sd)),
            format!("E(z)         = {}", fmt_sig(e.real(), sd)),
            format!("H(z)         = {}", fmt_sig(h.real(), sd)),
            format!("E + H        = {}", fmt_sig(approx.real(), sd)),
            format!("rel err      = {}", fmt_sig(&rel, 3)),
        ],
    )
}

fn cmd_classify(sigma: &str, mu: &str, n: u32, side: &str, common: &Common) -> Result<(), Error> {
    let ctx = make_ctx(common)?;
    let p = Parameters::from_strs(sigma, mu, n)?;
    let dp = params::derive(&p, &ctx);
    let side_v = if side == "pos" { Side::Pos } else { Side::Neg };
    let regime = f_asym::classify_regime(&dp, side_v)?;
    let comps: Vec<String> = regime.components.iter().map(|c| format!("{c:?}")).collect();
    let kappa = dp.kappa.clone();
    let half = kappa.clone() / Rational::from(2);
    // All candidate angles for the sector diagram.
    let mut angles = Vec::new();
    match side_v {
        Side::Pos => {
            for (r, w) in dp.omega_reduced.iter().enumerate() {
                for sign in [1i64, -1i64] {
                    let phi = Rational::from(sign) * &dp.sigma - w.coeff();
                    let retained = phi.clone().abs() <= half;
                    angles.push(json!({
                        "r": r, "sign": sign,
                        "phi_over_pi": phi.to_string(),
                        "retained": retained,
                    }));
                }
            }
        }
        Side::Neg => {
            for (r, w) in dp.omega_reduced.iter().enumerate() {
                let phi = kappa.clone() - w.coeff();
                angles.push(json!({
                    "r": r, "sign": 1,
                    "phi_over_pi": phi.to_string(),
                    "retained": true,
                }));
            }
        }
    }
    let v = json!({
        "sigma": sigma, "mu": mu, "n": n, "side": side,
        "components": comps,
        "notes": regime.notes,
        "retained": retained_json(&regime.retained),
        "rays": {
            "sigma_over_pi": dp.sigma.to_string(),
            "anti_stokes_over_pi": half.to_string(),
            "stokes_over_pi": kappa.to_string(),
        },
        "thresholds": {
            "n0": dp.n0.to_string(),
            "n_star": dp.n_star.to_string(),
            "n_exp": dp.n_exp.to_string(),
        },
        "angles": angles,
    });
    render(
        common,
        &v,
        vec![
            format!("components: {}", comps.join("+")),
            format!("notes: {}", regime.notes.join("; ")),
            format!(
                "thresholds: n0={} n*={} 1/sigma={}",
                dp.n0, dp.n_star, dp.n_exp
            ),
            format!("retained terms: {}", regime.retained.len()),
        ],
    )
}

fn cmd_table(id: u8, common: &Common) -> Result<bool, Error> {
    let ctx = make_ctx(common)?;
    let report = harness::reproduce_table(id, &ctx)?;
    match common.format.as_str() {
        "json" => emit(common, serde_json::to_string_pretty(&report).unwrap())?,
        _ => {
            let mut lines = report.lines();
            lines.push(format!(
                "table {id}: {}",
                if report.pass { "all cells PASS" } else { "FAILURES present" }
            ));
            emit(common, lines.join("\n"))?;
        }
    }
    Ok(report.pass)
}

fn cmd_sweep(
    sigma: &str,
    mu: &str,
    n: u32,
    x_values: &str,
    tr: &TruncArg,
    common: &Common,
) -> Result<(), Error> {
    let ctx = make_ctx(common)?;
    let p = Parameters::from_strs(sigma, mu, n)?;
    let trunc = parse_trunc(&tr.trunc)?;
    let xs: Vec<BigReal> = x_values
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| ctx.real_from_str(s.trim()))
        .collect::<Result<_, _>>()?;
    let mut report = harness::sweep(&p, &xs, tr.jmax, trunc, &ctx)?;
    // Emitted reports must be byte-identical across runs; timings are not.
    for r in &mut report.records {
        r.wall_ms = 0.0;
    }
    match common.format.as_str() {
        "json" => emit(common, serde_json::to_string_pretty(&report).unwrap()),
        "csv" => {
            let mut lines = vec![harness::CSV_HEADER.to_string()];
            lines.extend(report.records.iter().map(harness::to_csv_row));
            emit(common, lines.join("\n"))
        }
        _ => {
            let mut lines: Vec<String> = report
                .records
                .iter()
                .map(|r| format!("x={}: rel_err={} regime={}", r.x, r.rel_err, r.regime))
                .collect();
            lines.push(format!("monotone decay: {}", report.monotone_decay));
            emit(common, lines.join("\n"))
        }
    }
}

fn run() -> Result<bool, Error> {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match &cli.command {
        Command::Eval { sigma, mu, n, x, common } => {
            cmd_eval(sigma, mu, *n, x, common).map(|_| true)
        }
        Command::Asym { sigma, mu, n, x, tr, common } => {
            cmd_asym(sigma, mu, *n, x, tr, common).map(|_| true)
        }
        Command::Psi { sigma, delta, z, tr, common } => {
            cmd_psi(sigma, delta, z, tr, common).map(|_| true)
        }
        Command::Classify { sigma, mu, n, side, common } => {
            cmd_classify(sigma, mu, *n, side, common).map(|_| true)
        }
        Command::Table { id, common } => cmd_table(*id, common),
        Command::Sweep { sigma, mu, n, x_values, tr, common } => {
            cmd_sweep(sigma, mu, *n, x_values, tr, common).map(|_| true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidParameter(_) | Error::TableData(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
