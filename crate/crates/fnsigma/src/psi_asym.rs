//! Large-|z| asymptotics of Psi(z): the exponential expansion E(z), the
//! algebraic expansion H(z), the coefficients A_j(sigma), and exact sector
//! classification of arg z.

use crate::error::{Error, Result};
use crate::numerics::{self, BigComplex, BigReal, PrecisionCtx};
use crate::params::PiAngle;
use rug::{Complex, Float, Rational};

/// Expansion coefficients A_0..A_3 and their normalized form c_j = A_j/A_0.
#[derive(Clone, Debug)]
pub struct AsymCoeffs {
    /// A_0..A_3.
    pub a: Vec<BigReal>,
    /// c_0..c_3, with c_0 = 1.
    pub c: Vec<BigReal>,
}

/// Highest coefficient index available; only c_0..c_3 are published.
pub const JMAX_LIMIT: usize = 3;

fn rat(v: i64) -> Rational {
    Rational::from(v)
}

/// The normalized coefficients c_1..c_3 as exact rationals in (sigma, delta).
fn c_rationals(sigma: &Rational, delta: &Rational) -> [Rational; 3] {
    let s = sigma.clone();
    let d = delta.clone();
    let s2 = s.clone() * &s;
    let s3 = s2.clone() * &s;
    let s4 = s3.clone() * &s;
    let s5 = s4.clone() * &s;
    let s6 = s5.clone() * &s;
    let d2 = d.clone() * &d;
    let d3 = d2.clone() * &d;
    let d4 = d3.clone() * &d;
    let d5 = d4.clone() * &d;
    let d6 = d5.clone() * &d;

    let c1 = (rat(2) + rat(7) * &s + rat(2) * &s2
        - rat(12) * &d * (rat(1) + &s)
        + rat(12) * &d2)
        / (rat(24) * &s);

    let c2 = (rat(4) + rat(172) * &s + rat(417) * &s2 + rat(172) * &s3 + rat(4) * &s4
        - rat(24) * &d * (rat(6) + rat(41) * &s + rat(41) * &s2 + rat(6) * &s3)
        + rat(120) * &d2 * (rat(4) + rat(11) * &s + rat(4) * &s2)
        - rat(480) * &d3 * (rat(1) + &s)
        + rat(144) * &d4)
        / (rat(1152) * &s2);

    let c3 = ((rat(-1112) + rat(9636) * &s + rat(163734) * &s2 + rat(336347) * &s3
        + rat(163734) * &s4
        + rat(9636) * &s5
        - rat(1112) * &s6)
        - d.clone()
            * (rat(3600) + rat(220320) * &s + rat(929700) * &s2 + rat(929700) * &s3
                + rat(220320) * &s4
                + rat(3600) * &s5)
        + d2.clone() * (rat(65520) + rat(715680) * &s + rat(1440180) * &s2 + rat(715680) * &s3 + rat(65520) * &s4)
        - d3.clone() * (rat(161280) + rat(816480) * &s + rat(816480) * &s2 + rat(161280) * &s3)
        + d4.clone() * (rat(151200) + rat(378000) * &s + rat(151200) * &s2)
        - rat(60480) * &d5 * (rat(1) + &s)
        + rat(8640) * &d6)
        / (rat(414720) * &s3);

    [c1, c2, c3]
}

/// A_0 = (2 pi / kappa)^{1/2} (sigma/kappa)^{vartheta}.
pub fn a0(sigma: &Rational, delta: &Rational, ctx: &PrecisionCtx) -> BigReal {
    let kappa = Rational::from(1) - sigma;
    let vth = delta.clone() - Rational::from((1, 2));
    let k = ctx.real_from_rational(&kappa);
    let head = (Float::with_val(ctx.prec(), 2) * ctx.pi() / &k).sqrt();
    let base = ctx.real_from_rational(sigma) / &k;
    head * (ctx.real_from_rational(&vth) * base.ln()).exp()
}

/// Computes A_0..A_3 and c_0..c_3; the c_j are rational and evaluated exactly
/// before conversion.
pub fn coeffs(sigma: &Rational, delta: &Rational, ctx: &PrecisionCtx) -> AsymCoeffs {
    let a0v = a0(sigma, delta, ctx);
    let crat = c_rationals(sigma, delta);
    let mut c = vec![Float::with_val(ctx.prec(), 1)];
    c.extend(crat.iter().map(|q| ctx.real_from_rational(q)));
    let a = c.iter().map(|cj| a0v.clone() * cj).collect();
    AsymCoeffs { a, c }
}

/// Z = kappa (h z)^{1/kappa}, principal branch.
pub fn big_z(sigma: &Rational, z: &BigComplex, ctx: &PrecisionCtx) -> Result<BigComplex> {
    if z.real().is_zero() && z.imag().is_zero() {
        return Err(Error::Domain("big_z at z = 0".into()));
    }
    let kappa = Rational::from(1) - sigma;
    let s = ctx.real_from_rational(sigma);
    let h_log = s.clone() * s.ln();
    let lnz = Complex::with_val(ctx.prec(), z.ln_ref());
    let expo = (lnz + h_log) / ctx.real_from_rational(&kappa);
    let zbig = numerics::cexp(&expo, ctx)?;
    Ok(zbig * ctx.real_from_rational(&kappa))
}

/// X = kappa (h x)^{1/kappa} for real x > 0.
pub fn big_x(sigma: &Rational, x: &BigReal, ctx: &PrecisionCtx) -> Result<BigReal> {
    if *x <= 0 {
        return Err(Error::Domain(format!("big_x requires x > 0, got {x}")));
    }
    let kappa = Rational::from(1) - sigma;
    let s = ctx.real_from_rational(sigma);
    let h_log = s.clone() * s.ln();
    let expo = (x.clone().ln() + h_log) / ctx.real_from_rational(&kappa);
    let xb = ctx.real_from_rational(&kappa) * expo.exp();
    if xb.is_finite() {
        Ok(xb)
    } else {
        Err(Error::Overflow(format!("big_x at x = {x}")))
    }
}

/// E(z) = Z^vartheta e^Z sum_{j<=jmax} A_j Z^{-j}, principal branches.
pub fn e_expansion(
    sigma: &Rational,
    delta: &Rational,
    z: &BigComplex,
    jmax: usize,
    ctx: &PrecisionCtx,
) -> Result<BigComplex> {
    if jmax > JMAX_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "jmax must be <= {JMAX_LIMIT}, got {jmax}"
        )));
    }
    let vth = delta.clone() - Rational::from((1, 2));
    let zb = big_z(sigma, z, ctx)?;
    let co = coeffs(sigma, delta, ctx);
    let lnzb = Complex::with_val(ctx.prec(), zb.ln_ref());
    let zpow = numerics::cexp(&(lnzb * ctx.real_from_rational(&vth)), ctx)?;
    let ez = numerics::cexp(&zb, ctx)?;
    let zinv = Complex::with_val(ctx.prec(), zb.recip_ref());
    let mut s = ctx.czero();
    let mut p = Complex::with_val(ctx.prec(), (1, 0));
    for aj in co.a.iter().take(jmax + 1) {
        s += p.clone() * aj;
        p *= &zinv;
    }
    Ok(zpow * ez * s)
}

/// Truncation policy for algebraic (inverse-power) sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TruncPolicy {
    /// Sum terms k = 0..=kmax.
    Fixed(usize),
    /// Truncate at the globally smallest nonzero |term| within the cap
    /// (that term included); ties break at the earlier index.
    Optimal { cap: usize },
}

impl Default for TruncPolicy {
    fn default() -> Self {
        TruncPolicy::Optimal { cap: 100 }
    }
}

/// Sums `terms` per the policy; returns (value, index of last term kept).
pub fn truncate_sum(terms: &[BigComplex], policy: TruncPolicy, ctx: &PrecisionCtx) -> (BigComplex, usize) {
    let kstop = match policy {
        TruncPolicy::Fixed(kmax) => kmax.min(terms.len().saturating_sub(1)),
        TruncPolicy::Optimal { .. } => {
            let mut best: Option<(usize, BigReal)> = None;
            for (k, t) in terms.iter().enumerate() {
                let a = numerics::cabs(t);
                if a.is_zero() {
                    continue;
                }
                match &best {
                    Some((_, ba)) if *ba <= a => {}
                    _ => best = Some((k, a)),
                }
            }
            best.map_or(0, |(k, _)| k)
        }
    };
    let mut s = ctx.czero();
    for t in terms.iter().take(kstop + 1) {
        s += t;
    }
    (s, kstop)
}

/// Real-valued variant of [`truncate_sum`].
pub fn truncate_sum_real(terms: &[BigReal], policy: TruncPolicy, ctx: &PrecisionCtx) -> (BigReal, usize) {
    let kstop = match policy {
        TruncPolicy::Fixed(kmax) => kmax.min(terms.len().saturating_sub(1)),
        TruncPolicy::Optimal { .. } => {
            let mut best: Option<(usize, BigReal)> = None;
            for (k, t) in terms.iter().enumerate() {
                let a = t.clone().abs();
                if a.is_zero() {
                    continue;
                }
                match &best {
                    Some((_, ba)) if *ba <= a => {}
                    _ => best = Some((k, a)),
                }
            }
            best.map_or(0, |(k, _)| k)
        }
    };
    let mut s = ctx.zero();
    for t in terms.iter().take(kstop + 1) {
        s += t;
    }
    (s, kstop)
}

/// The terms of the algebraic expansion
/// H(w) = (1/sigma) sum_k ((-1)^k / k!) G(K) w^{-K}, K = (k+delta)/sigma,
/// evaluated at w = z e^{-branch_sign * pi i}.
///
/// `branch_sign = +1` selects the e^{-pi i} continuation (used for
/// arg z >= 0), `-1` the e^{+pi i} continuation. Terms whose gamma argument
/// is a nonpositive integer are dropped.
pub fn h_terms(
    sigma: &Rational,
    delta: &Rational,
    z: &BigComplex,
    branch_sign: i32,
    cap: usize,
    ctx: &PrecisionCtx,
) -> Result<Vec<BigComplex>> {
    if z.real().is_zero() && z.imag().is_zero() {
        return Err(Error::Domain("h_expansion at z = 0".into()));
    }
    let modulus = numerics::cabs(z);
    let theta = z.imag().clone().atan2(z.real());
    let rot = theta - Float::with_val(ctx.prec(), branch_sign) * ctx.pi();
    let lnr = modulus.ln();
    let mut terms = Vec::with_capacity(cap);
    let mut kfact = Float::with_val(ctx.prec(), 1);
    for k in 0..cap {
        if k > 0 {
            kfact *= Float::with_val(ctx.prec(), k as u32);
        }
        let kk = (Rational::from(k as u64) + delta) / sigma.clone();
        let term = match numerics::gamma_rat(&kk, ctx) {
            Ok(g) => {
                let kkf = ctx.real_from_rational(&kk);
                // w^{-K} = |z|^{-K} e^{-i K (theta - bs*pi)}
                let m = (-kkf.clone() * &lnr).exp();
                let phase = -kkf * &rot;
                let w = Complex::with_val(ctx.prec(), (phase.clone().cos(), phase.sin()));
                let sign = if k % 2 == 1 { -1 } else { 1 };
                w * m * g / &kfact * Float::with_val(ctx.prec(), sign)
                    / ctx.real_from_rational(sigma)
            }
            Err(Error::Pole(_)) => ctx.czero(),
            Err(e) => return Err(e),
        };
        terms.push(term);
    }
    Ok(terms)
}

/// H(z e^{-branch_sign pi i}) truncated per policy.
pub fn h_expansion(
    sigma: &Rational,
    delta: &Rational,
    z: &BigComplex,
    branch_sign: i32,
    trunc: TruncPolicy,
    ctx: &PrecisionCtx,
) -> Result<BigComplex> {
    let cap = match trunc {
        TruncPolicy::Fixed(kmax) => kmax + 1,
        TruncPolicy::Optimal { cap } => cap,
    };
    let terms = h_terms(sigma, delta, z, branch_sign, cap, ctx)?;
    Ok(truncate_sum(&terms, trunc, ctx).0)
}

/// Sector of arg z relative to the expansion structure of Psi.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectorTag {
    /// |arg z| < kappa pi / 2: E exponentially large.
    ExpLarge,
    /// |arg z| = kappa pi / 2: E oscillatory (anti-Stokes line).
    OscBoundary,
    /// kappa pi / 2 < |arg z| < kappa pi: E exponentially small but present.
    ExpSmallPresent,
    /// |arg z| >= kappa pi: only the algebraic expansion remains.
    AlgebraicOnly,
}

/// Classification of arg z, decided exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SectorClass {
    pub tag: SectorTag,
    /// +1 for the e^{-pi i} continuation of H (arg z >= 0), -1 otherwise.
    pub branch_sign: i32,
    /// True on the Stokes rays arg z = 0 and |arg z| = kappa pi.
    pub on_stokes_line: bool,
}

/// Classifies phi = arg z by exact comparison of its rational coefficient
/// against kappa/2 and kappa.
pub fn classify_sector(sigma: &Rational, phi: &PiAngle) -> SectorClass {
    let kappa = Rational::from(1) - sigma;
    let half = kappa.clone() / rat(2);
    let a = phi.abs().coeff().clone();
    let tag = if a < half {
        SectorTag::ExpLarge
    } else if a == half {
        SectorTag::OscBoundary
    } else if a < kappa {
        SectorTag::ExpSmallPresent
    } else {
        SectorTag::AlgebraicOnly
    };
    let branch_sign = if phi.coeff() < &rat(0) { -1 } else { 1 };
    let on_stokes_line = phi.is_zero() || a == kappa;
    SectorClass {
        tag,
        branch_sign,
        on_stokes_line,
    }
}
