//! Composite asymptotic expansions of F for x -> +inf and x -> -inf, and
//! the regime selector that decides which components appear.

use crate::error::{Error, Result};
use crate::numerics::{self, BigComplex, BigReal, PrecisionCtx};
use crate::params::{DerivedParams, Parameters, PiAngle, Threshold};
use crate::psi_asym::{self, classify_sector, SectorTag, TruncPolicy};
use rug::{Complex, Float, Rational};
use std::cmp::Ordering;

/// Which infinity the expansion targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Pos,
    Neg,
}

/// Expansion components that can appear in a regime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    ExpLarge,
    ExpOscillatory,
    ExpSmall,
    Algebraic,
}

/// One retained exponential term of a composite expansion.
#[derive(Clone, Debug)]
pub struct RetainedExp {
    /// Index into the reduced omega list; `None` for the parity (odd-n) term.
    pub r: Option<usize>,
    /// Which of the +/- family the term belongs to (positive side only).
    pub sign: i8,
    /// The governing angle: sign*pi*sigma - omega_r on the positive side,
    /// pi*kappa - omega_r on the negative side.
    pub phi: PiAngle,
    pub sector: SectorTag,
    /// True when the term decays but is kept as an exponentially small
    /// contribution rather than by the retention inequality.
    pub subdominant: bool,
}

/// Selected regime: which components appear and why.
#[derive(Clone, Debug)]
pub struct Regime {
    pub side: Side,
    pub components: Vec<Component>,
    pub retained: Vec<RetainedExp>,
    pub notes: Vec<String>,
}

/// A truncated algebraic sum with its term table.
#[derive(Clone, Debug)]
pub struct AlgSum {
    pub value: BigReal,
    /// Terms actually summed (k = 0..=kstop).
    pub terms: Vec<BigReal>,
    pub kstop: usize,
}

impl AlgSum {
    fn zero(ctx: &PrecisionCtx) -> Self {
        AlgSum {
            value: ctx.zero(),
            terms: Vec::new(),
            kstop: 0,
        }
    }
}

/// Assembled expansion with per-component breakdown.
#[derive(Clone, Debug)]
pub struct ExpansionResult {
    /// e_part + h_part.
    pub value: BigReal,
    pub e_part: BigReal,
    pub h_part: BigReal,
    pub regime: Regime,
    pub jmax: usize,
    /// Truncation index of the algebraic sum, when one is present.
    pub h_kstop: Option<usize>,
    /// Term table of the algebraic sum.
    pub h_terms: Vec<BigReal>,
}

fn k_index(dp: &DerivedParams, k: u64) -> Rational {
    (Rational::from(k) + &dp.delta) / dp.sigma.clone()
}

/// The weight of omega_r in the positive-x algebraic coefficients: 2 when
/// the ray pi*sigma lies beyond omega_r (decaying branch pair present),
/// 0 otherwise, including the boundary pi*sigma = omega_r where the two
/// branch choices cancel.
fn theta_weight(dp: &DerivedParams, q: &Rational) -> u32 {
    if dp.sigma > *q {
        2
    } else {
        0
    }
}

/// theta_{n,k}: the combination coefficient of the positive-x algebraic
/// expansion, Delta_n plus weighted cosines over the reduced omega list.
pub fn theta(dp: &DerivedParams, k: u64, ctx: &PrecisionCtx) -> BigReal {
    let kk = k_index(dp, k);
    let mut t = ctx.real_from_i64(dp.delta_n as i64);
    for w in &dp.omega_reduced {
        let wgt = theta_weight(dp, w.coeff());
        if wgt == 0 {
            continue;
        }
        let arg = (kk.clone() - Rational::from(1)) * w.coeff();
        t += Float::with_val(ctx.prec(), wgt) * numerics::cos_pi(&arg, ctx);
    }
    t
}

/// H(x): the algebraic expansion for x -> +inf,
/// (1/sigma) sum_k x^{-K} theta_{n,k} / (k! G(1-K)), K = (k+delta)/sigma.
pub fn h_alg_pos(dp: &DerivedParams, x: &BigReal, trunc: TruncPolicy, ctx: &PrecisionCtx) -> Result<AlgSum> {
    if *x <= 0 {
        return Err(Error::Domain(format!("h_alg_pos requires x > 0, got {x}")));
    }
    let cap = match trunc {
        TruncPolicy::Fixed(kmax) => kmax + 1,
        TruncPolicy::Optimal { cap } => cap,
    };
    let lnx = x.clone().ln();
    let sig = ctx.real_from_rational(&dp.sigma);
    let mut kfact = Float::with_val(ctx.prec(), 1);
    let mut terms = Vec::with_capacity(cap);
    for k in 0..cap as u64 {
        if k > 0 {
            kfact *= Float::with_val(ctx.prec(), k);
        }
        let kk = k_index(dp, k);
        let rg = numerics::recip_gamma_rat(&(Rational::from(1) - &kk), ctx);
        let term = if rg.is_zero() {
            ctx.zero()
        } else {
            let pw = (-ctx.real_from_rational(&kk) * &lnx).exp();
            pw * rg * theta(dp, k, ctx) / &kfact / &sig
        };
        terms.push(term);
    }
    let (value, kstop) = psi_asym::truncate_sum_real(&terms, trunc, ctx);
    terms.truncate(kstop + 1);
    Ok(AlgSum { value, terms, kstop })
}

/// The exponential terms retained on the positive side, by exact comparison
/// of phi_r^{+/-} = +/-pi*sigma - omega_r against the half-sector kappa*pi/2.
/// The odd-n parity term is also kept, as an exponentially small
/// contribution, when its exponent has nonpositive real part.
pub fn retention_pos(dp: &DerivedParams) -> Vec<RetainedExp> {
    let half = dp.kappa.clone() / Rational::from(2);
    let mut out = Vec::new();
    for (r, w) in dp.omega_reduced.iter().enumerate() {
        for sign in [1i8, -1i8] {
            let phi = Rational::from(sign as i64) * &dp.sigma - w.coeff();
            if phi.clone().abs() <= half {
                let pa = PiAngle::new(phi);
                let sector = classify_sector(&dp.sigma, &pa).tag;
                out.push(RetainedExp {
                    r: Some(r),
                    sign,
                    phi: pa,
                    sector,
                    subdominant: false,
                });
            }
        }
    }
    if dp.delta_n == 1 {
        let phi = dp.sigma.clone();
        let in_sector = phi.clone().abs() <= half;
        // Re of the exponent is X cos(pi sigma / kappa); nonpositive means
        // the term decays and is kept as exponentially small.
        let decays = numerics::cos_pi_nonpositive(&(phi.clone() / &dp.kappa));
        if in_sector || decays {
            let pa = PiAngle::new(phi);
            let sector = classify_sector(&dp.sigma, &pa).tag;
            out.push(RetainedExp {
                r: None,
                sign: 1,
                phi: pa,
                sector,
                subdominant: !in_sector,
            });
        }
    }
    out
}

/// sum_j A_j Z^{-j} with Z = X e^{i pi zang}.
fn s_sum(a: &[BigReal], x: &BigReal, zang: &Rational, jmax: usize, ctx: &PrecisionCtx) -> BigComplex {
    let inv = x.clone().recip();
    let zinv = Complex::with_val(
        ctx.prec(),
        (
            inv.clone() * numerics::cos_pi(&-zang.clone(), ctx),
            inv * numerics::sin_pi(&-zang.clone(), ctx),
        ),
    );
    let mut s = ctx.czero();
    let mut p = Complex::with_val(ctx.prec(), (1, 0));
    for aj in a.iter().take(jmax + 1) {
        s += p.clone() * aj;
        p *= &zinv;
    }
    s
}

fn unit(q: &Rational, ctx: &PrecisionCtx) -> BigComplex {
    Complex::with_val(ctx.prec(), (numerics::cos_pi(q, ctx), numerics::sin_pi(q, ctx)))
}

fn x_pow_vartheta(dp: &DerivedParams, xbig: &BigReal, ctx: &PrecisionCtx) -> BigReal {
    (ctx.real_from_rational(&dp.vartheta) * xbig.clone().ln()).exp()
}

/// E(x): the exponential expansion for x -> +inf; returns the value and the
/// retained-term list.
pub fn e_exp_pos(
    dp: &DerivedParams,
    x: &BigReal,
    jmax: usize,
    ctx: &PrecisionCtx,
) -> Result<(BigReal, Vec<RetainedExp>)> {
    if *x <= 0 {
        return Err(Error::Domain(format!("e_exp_pos requires x > 0, got {x}")));
    }
    if jmax > psi_asym::JMAX_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "jmax must be <= {}, got {jmax}",
            psi_asym::JMAX_LIMIT
        )));
    }
    let retained = retention_pos(dp);
    let xb = psi_asym::big_x(&dp.sigma, x, ctx)?;
    let co = psi_asym::coeffs(&dp.sigma, &dp.delta, ctx);
    let vk = dp.vartheta.clone() / &dp.kappa; // vartheta/kappa
    let mut tot = ctx.czero();
    for entry in &retained {
        let q = entry
            .r
            .map(|r| dp.omega_reduced[r].coeff().clone())
            .unwrap_or_else(|| Rational::from(0));
        let phi_big = Rational::from(entry.sign as i64) * &vk - q.clone() * (Rational::from(1) + &vk);
        let zang = entry.phi.coeff().clone() / &dp.kappa;
        let egrow = numerics::cexp_polar(&xb, numerics::AngleArg::Pi(&zang), ctx)?;
        let term = egrow * unit(&phi_big, ctx) * s_sum(&co.a, &xb, &zang, jmax, ctx);
        tot += term;
    }
    let value = x_pow_vartheta(dp, &xb, ctx) / ctx.pi() * tot.real();
    Ok((value, retained))
}

/// theta_hat_{n,k}: combination coefficient of the negative-x algebraic
/// expansion; only indices with pi*kappa < omega_r contribute.
pub fn theta_hat(dp: &DerivedParams, k: u64, ctx: &PrecisionCtx) -> Result<BigReal> {
    let kk = k_index(dp, k);
    let mut t = ctx.zero();
    for w in &dp.omega_reduced {
        match dp.kappa.cmp(w.coeff()) {
            Ordering::Equal => {
                return Err(Error::StokesLine(format!(
                    "pi*kappa coincides with omega ray {w}"
                )));
            }
            Ordering::Less => {
                let arg = kk.clone() - (kk.clone() - Rational::from(1)) * w.coeff();
                t += numerics::cos_pi(&arg, ctx);
            }
            Ordering::Greater => {}
        }
    }
    Ok(t)
}

fn n_star_relation(dp: &DerivedParams) -> Option<Ordering> {
    match &dp.n_star {
        Threshold::Finite(t) => Some(Rational::from(dp.n).cmp(t)),
        Threshold::Infinite => None,
    }
}

/// Hhat(x): the algebraic expansion for x -> -inf (argument -x, x > 0).
/// Exactly zero for n < n* (and for sigma <= 1/2); errors on n = n*.
pub fn h_alg_neg(dp: &DerivedParams, x: &BigReal, trunc: TruncPolicy, ctx: &PrecisionCtx) -> Result<AlgSum> {
    if *x <= 0 {
        return Err(Error::Domain(format!("h_alg_neg requires x > 0, got {x}")));
    }
    match n_star_relation(dp) {
        None | Some(Ordering::Less) => return Ok(AlgSum::zero(ctx)),
        Some(Ordering::Equal) => {
            return Err(Error::StokesLine(format!(
                "n = n* = {}: algebraic component sits on a Stokes line",
                dp.n
            )));
        }
        Some(Ordering::Greater) => {}
    }
    let cap = match trunc {
        TruncPolicy::Fixed(kmax) => kmax + 1,
        TruncPolicy::Optimal { cap } => cap,
    };
    let lnx = x.clone().ln();
    let sig = ctx.real_from_rational(&dp.sigma);
    let mut kfact = Float::with_val(ctx.prec(), 1);
    let mut terms = Vec::with_capacity(cap);
    for k in 0..cap as u64 {
        if k > 0 {
            kfact *= Float::with_val(ctx.prec(), k);
        }
        let kk = k_index(dp, k);
        let rg = numerics::recip_gamma_rat(&(Rational::from(1) - &kk), ctx);
        let term = if rg.is_zero() {
            ctx.zero()
        } else {
            let pw = (-ctx.real_from_rational(&kk) * &lnx).exp();
            Float::with_val(ctx.prec(), 2) * pw * rg * theta_hat(dp, k, ctx)? / &kfact / &sig
        };
        terms.push(term);
    }
    let (value, kstop) = psi_asym::truncate_sum_real(&terms, trunc, ctx);
    terms.truncate(kstop + 1);
    Ok(AlgSum { value, terms, kstop })
}

/// The exponential terms of the negative side, tagged by the sector of
/// pi*kappa - omega_r; all are retained.
pub fn retention_neg(dp: &DerivedParams) -> Vec<RetainedExp> {
    let mut out = Vec::new();
    for (r, w) in dp.omega_reduced.iter().enumerate() {
        let phi = PiAngle::new(dp.kappa.clone() - w.coeff());
        let sector = classify_sector(&dp.sigma, &phi).tag;
        out.push(RetainedExp {
            r: Some(r),
            sign: 1,
            phi,
            sector,
            subdominant: sector == SectorTag::ExpSmallPresent,
        });
    }
    if dp.delta_n == 1 {
        // The unrotated parity term contributes e^{-X} times an algebraic
        // series; always exponentially small.
        let phi = PiAngle::new(dp.kappa.clone());
        out.push(RetainedExp {
            r: None,
            sign: 1,
            phi: phi.clone(),
            sector: classify_sector(&dp.sigma, &phi).tag,
            subdominant: true,
        });
    }
    out
}

/// Ehat(x): the exponential expansion for x -> -inf (argument -x, x > 0).
pub fn e_exp_neg(
    dp: &DerivedParams,
    x: &BigReal,
    jmax: usize,
    ctx: &PrecisionCtx,
) -> Result<(BigReal, Vec<RetainedExp>)> {
    if *x <= 0 {
        return Err(Error::Domain(format!("e_exp_neg requires x > 0, got {x}")));
    }
    if jmax > psi_asym::JMAX_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "jmax must be <= {}, got {jmax}",
            psi_asym::JMAX_LIMIT
        )));
    }
    let retained = retention_neg(dp);
    let xb = psi_asym::big_x(&dp.sigma, x, ctx)?;
    let co = psi_asym::coeffs(&dp.sigma, &dp.delta, ctx);
    let vk = dp.vartheta.clone() / &dp.kappa;
    let mut tot = ctx.czero();
    for w in &dp.omega_reduced {
        let q = w.coeff().clone();
        let phi_big = q.clone() * (Rational::from(1) + &vk);
        // -X e^{-i omega_r / kappa} = X e^{i pi (1 - q/kappa)}
        let zang = Rational::from(1) - q / &dp.kappa;
        let egrow = numerics::cexp_polar(&xb, numerics::AngleArg::Pi(&zang), ctx)?;
        let term = egrow * unit(&-phi_big, ctx) * s_sum(&co.a, &xb, &zang, jmax, ctx);
        tot += term;
    }
    let mut value = x_pow_vartheta(dp, &xb, ctx) / ctx.pi() * tot.real();
    if dp.delta_n == 1 {
        // Parity term: e^{-X} sum_j (-1)^j A_j X^{-j} / pi.
        let mut s = ctx.zero();
        let mut p = Float::with_val(ctx.prec(), 1);
        for (j, aj) in co.a.iter().take(jmax + 1).enumerate() {
            let signed = if j % 2 == 1 { -aj.clone() } else { aj.clone() };
            s += signed * &p;
            p /= &xb;
        }
        value += (-xb.clone()).exp() * s / ctx.pi();
    }
    Ok((value, retained))
}

/// Selects the components of the expansion for the given side, with exact
/// threshold comparisons. Errors on the negative side when n = n*.
pub fn classify_regime(dp: &DerivedParams, side: Side) -> Result<Regime> {
    let mut components = Vec::new();
    let mut notes = Vec::new();
    if dp.n == 1 {
        notes.push("n = 1: single Wright function; outside the tabulated range n >= 2".into());
    }
    let retained = match side {
        Side::Pos => {
            let retained = retention_pos(dp);
            let primary = retained.iter().any(|e| !e.subdominant);
            if primary {
                match dp.n0.cmp_n(dp.n) {
                    Some(Ordering::Equal) => {
                        components.push(Component::ExpOscillatory);
                        notes.push(format!("n = n0 = {}: oscillatory boundary", dp.n));
                    }
                    _ => components.push(Component::ExpLarge),
                }
            } else {
                match &dp.n0 {
                    Threshold::Finite(t) => {
                        notes.push(format!("n < n0 = {t}: exponential terms absent"))
                    }
                    Threshold::Infinite => {
                        notes.push("sigma >= 2/3: exponential terms always absent".into())
                    }
                }
            }
            if retained.iter().any(|e| e.subdominant) {
                components.push(Component::ExpSmall);
                notes.push("parity term retained as exponentially small".into());
            }
            components.push(Component::Algebraic);
            retained
        }
        Side::Neg => {
            match n_star_relation(dp) {
                Some(Ordering::Equal) => {
                    return Err(Error::StokesLine(format!(
                        "n = n* = {}: negative-x algebraic component on a Stokes line",
                        dp.n
                    )));
                }
                Some(Ordering::Greater) => {
                    components.push(Component::Algebraic);
                }
                Some(Ordering::Less) | None => {}
            }
            let n_rat = Rational::from(dp.n);
            let exp_comp = match n_rat.cmp(&dp.n_exp) {
                Ordering::Less => Component::ExpSmall,
                Ordering::Equal => {
                    notes.push(format!("n = 1/sigma = {}: oscillatory boundary", dp.n));
                    Component::ExpOscillatory
                }
                Ordering::Greater => Component::ExpLarge,
            };
            components.insert(0, exp_comp);
            retention_neg(dp)
        }
    };
    Ok(Regime {
        side,
        components,
        retained,
        notes,
    })
}

/// Assembles the asymptotic value of F at `x` (dispatching on its sign) as
/// e_part + h_part with a full breakdown.
pub fn f_asym(
    p: &Parameters,
    x: &BigReal,
    jmax: usize,
    trunc: TruncPolicy,
    ctx: &PrecisionCtx,
) -> Result<ExpansionResult> {
    if x.is_zero() {
        return Err(Error::Domain("f_asym is undefined at x = 0".into()));
    }
    let dp = crate::params::derive(p, ctx);
    if *x > 0 {
        let regime = classify_regime(&dp, Side::Pos)?;
        let (e_part, _) = e_exp_pos(&dp, x, jmax, ctx)?;
        let h = h_alg_pos(&dp, x, trunc, ctx)?;
        Ok(ExpansionResult {
            value: e_part.clone() + &h.value,
            e_part,
            h_part: h.value,
            regime,
            jmax,
            h_kstop: Some(h.kstop),
            h_terms: h.terms,
        })
    } else {
        let regime = classify_regime(&dp, Side::Neg)?;
        let ax = x.clone().abs();
        let (e_part, _) = e_exp_neg(&dp, &ax, jmax, ctx)?;
        let h = h_alg_neg(&dp, &ax, trunc, ctx)?;
        let has_alg = regime.components.contains(&Component::Algebraic);
        Ok(ExpansionResult {
            value: e_part.clone() + &h.value,
            e_part,
            h_part: h.value,
            regime,
            jmax,
            h_kstop: if has_alg { Some(h.kstop) } else { None },
            h_terms: h.terms,
        })
    }
}

/// Envelope and cosine factor of the leading-order estimate valid for
/// sigma = alpha/(2n), 0 < alpha < 1:
/// (A_0 X^vth / pi) exp[X cos a] * cos[X sin a - Phi_0^+],
/// a = (n-1-alpha) pi / (2n-alpha).
pub fn karasheva_parts(p: &Parameters, x: &BigReal, ctx: &PrecisionCtx) -> Result<(BigReal, BigReal)> {
    let dp = crate::params::derive(p, ctx);
    let alpha = Rational::from(2 * p.n()) * p.sigma();
    if alpha >= 1 {
        return Err(Error::Domain(format!(
            "leading estimate requires sigma < 1/(2n); alpha = {alpha}"
        )));
    }
    if *x <= 0 {
        return Err(Error::Domain("leading estimate requires x > 0".into()));
    }
    let n = Rational::from(p.n());
    let a = (n.clone() - Rational::from(1) - &alpha) / (Rational::from(2) * &n - &alpha);
    let xb = psi_asym::big_x(&dp.sigma, x, ctx)?;
    let a0 = psi_asym::a0(&dp.sigma, &dp.delta, ctx);
    let envelope = a0 * x_pow_vartheta(&dp, &xb, ctx) / ctx.pi()
        * (xb.clone() * numerics::cos_pi(&a, ctx)).exp();
    // Phi_0^+ = pi vth/kappa - omega_0 (1 + vth/kappa)
    let vk = dp.vartheta.clone() / &dp.kappa;
    let q0 = dp.omega_full[0].coeff().clone();
    let phi0 = vk.clone() - q0 * (Rational::from(1) + &vk);
    let arg = xb * numerics::sin_pi(&a, ctx) - ctx.real_from_rational(&phi0) * ctx.pi();
    Ok((envelope, arg.cos()))
}

/// The leading-order estimate itself (envelope times cosine factor).
pub fn karasheva_leading(p: &Parameters, x: &BigReal, ctx: &PrecisionCtx) -> Result<BigReal> {
    let (env, cosf) = karasheva_parts(p, x, ctx)?;
    Ok(env * cosf)
}
