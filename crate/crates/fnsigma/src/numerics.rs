//! Configurable-precision real/complex arithmetic and gamma kernels.
//!
//! All routines take an explicit [`PrecisionCtx`]; there is no global
//! precision state. Values are MPFR/MPC-backed `rug` types.

use crate::error::{Error, Result};
use rug::float::Special;
use rug::ops::Pow;
use rug::{Complex, Float, Rational};

/// Arbitrary-precision real number.
pub type BigReal = Float;
/// Arbitrary-precision complex number.
pub type BigComplex = Complex;

/// Minimum supported decimal working precision.
pub const MIN_DIGITS: u32 = 30;
/// Maximum supported decimal working precision. Oscillatory-regime oracles
/// lose O(X) digits to cancellation, so the ceiling leaves room for several
/// adaptive doublings beyond the default.
pub const MAX_DIGITS: u32 = 4800;
/// Default decimal working precision.
pub const DEFAULT_DIGITS: u32 = 60;

/// Decimal working precision for a computation.
///
/// Every arithmetic value produced under a context carries the context's
/// binary precision (the decimal request plus guard bits).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionCtx {
    digits: u32,
}

impl Default for PrecisionCtx {
    fn default() -> Self {
        PrecisionCtx {
            digits: DEFAULT_DIGITS,
        }
    }
}

impl PrecisionCtx {
    /// Creates a context with `digits` decimal digits, in [30, 4800].
    pub fn new(digits: u32) -> Result<Self> {
        if !(MIN_DIGITS..=MAX_DIGITS).contains(&digits) {
            return Err(Error::InvalidParameter(format!(
                "digits must lie in [{MIN_DIGITS}, {MAX_DIGITS}], got {digits}"
            )));
        }
        Ok(PrecisionCtx { digits })
    }

    /// Decimal working precision.
    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Binary precision used for all values under this context.
    pub fn prec(&self) -> u32 {
        // log2(10) = 3.3219...; 32 guard bits absorb rounding in long sums.
        (self.digits as f64 * 3.321_928_094_887_363).ceil() as u32 + 32
    }

    /// Context with twice the decimal digits, capped at [`MAX_DIGITS`].
    pub fn doubled(&self) -> PrecisionCtx {
        PrecisionCtx {
            digits: (self.digits * 2).min(MAX_DIGITS),
        }
    }

    /// 10^(-digits), the relative threshold used by series stopping rules.
    pub fn eps(&self) -> BigReal {
        Float::with_val(self.prec(), 10).pow(-(self.digits as i32))
    }

    /// A fresh zero real.
    pub fn zero(&self) -> BigReal {
        Float::with_val(self.prec(), 0)
    }

    /// A fresh zero complex.
    pub fn czero(&self) -> BigComplex {
        Complex::with_val(self.prec(), (0, 0))
    }

    /// Converts an exact rational.
    pub fn real_from_rational(&self, q: &Rational) -> BigReal {
        Float::with_val(self.prec(), q)
    }

    /// Converts a small integer.
    pub fn real_from_i64(&self, v: i64) -> BigReal {
        Float::with_val(self.prec(), v)
    }

    /// Parses a decimal string at context precision.
    pub fn real_from_str(&self, s: &str) -> Result<BigReal> {
        let parsed = Float::parse(s)
            .map_err(|e| Error::InvalidParameter(format!("cannot parse real '{s}': {e}")))?;
        Ok(Float::with_val(self.prec(), parsed))
    }

    /// The constant pi.
    pub fn pi(&self) -> BigReal {
        Float::with_val(self.prec(), rug::float::Constant::Pi)
    }
}

/// Modulus of a complex value at its own precision.
pub fn cabs(z: &BigComplex) -> BigReal {
    let prec = z.real().prec().max(z.imag().prec());
    let m2 = z.real().clone().square() + z.imag().clone().square();
    Float::with_val(prec, m2.sqrt())
}

fn is_nonpositive_integer(x: &BigReal) -> bool {
    x.is_integer() && *x <= 0
}

fn rational_nonpositive_integer(q: &Rational) -> bool {
    q.is_integer() && *q <= 0
}

/// Gamma function for real argument.
///
/// Nonpositive integers are rejected; negative non-integer arguments go
/// through the reflection formula inside the backend.
pub fn gamma(x: &BigReal, ctx: &PrecisionCtx) -> Result<BigReal> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("gamma of non-finite value {x}")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(format!("gamma({x})")));
    }
    let g = Float::with_val(ctx.prec(), x.gamma_ref());
    if g.is_finite() {
        Ok(g)
    } else {
        Err(Error::Overflow(format!("gamma({x})")))
    }
}

/// Gamma of an exact rational argument; the pole test is exact.
pub fn gamma_rat(q: &Rational, ctx: &PrecisionCtx) -> Result<BigReal> {
    if rational_nonpositive_integer(q) {
        return Err(Error::Pole(format!("gamma({q})")));
    }
    gamma(&ctx.real_from_rational(q), ctx)
}

/// Reciprocal gamma, entire: exactly 0 at nonpositive integers.
pub fn recip_gamma(x: &BigReal, ctx: &PrecisionCtx) -> BigReal {
    if is_nonpositive_integer(x) {
        return ctx.zero();
    }
    let g = Float::with_val(ctx.prec(), x.gamma_ref());
    if g.is_infinite() {
        // Overflowed gamma means the reciprocal underflows to zero.
        return ctx.zero();
    }
    g.recip()
}

/// Reciprocal gamma of an exact rational; the zero at poles is exact.
pub fn recip_gamma_rat(q: &Rational, ctx: &PrecisionCtx) -> BigReal {
    if rational_nonpositive_integer(q) {
        return ctx.zero();
    }
    recip_gamma(&ctx.real_from_rational(q), ctx)
}

/// Reduces `q` into [0, 2) exactly.
fn reduce_mod_two(q: &Rational) -> Rational {
    let two = Rational::from(2);
    let mut r = q.clone() - (q.clone() / &two).floor() * &two;
    if r < 0 {
        r += &two;
    }
    r
}

/// sin(q*pi) for exact rational `q`, with exact zeros at integer `q`.
pub fn sin_pi(q: &Rational, ctx: &PrecisionCtx) -> BigReal {
    if q.is_integer() {
        return ctx.zero();
    }
    let r = reduce_mod_two(q);
    ctx.real_from_rational(&r).sin_pi()
}

/// cos(q*pi) for exact rational `q`, with exact zeros at half-integer `q`.
pub fn cos_pi(q: &Rational, ctx: &PrecisionCtx) -> BigReal {
    if (q.clone() - Rational::from((1, 2))).is_integer() {
        return ctx.zero();
    }
    let r = reduce_mod_two(q);
    ctx.real_from_rational(&r).cos_pi()
}

/// True iff cos(q*pi) <= 0, decided exactly from the rational `q`.
pub fn cos_pi_nonpositive(q: &Rational) -> bool {
    // cos(pi t) <= 0 iff t mod 2 lies in [1/2, 3/2].
    let r = reduce_mod_two(q);
    r >= Rational::from((1, 2)) && r <= Rational::from((3, 2))
}

/// Angle argument for [`cexp_polar`]: exact rational multiple of pi, or a real.
pub enum AngleArg<'a> {
    /// The angle q*pi with exact rational q.
    Pi(&'a Rational),
    /// An arbitrary real angle in radians.
    Real(&'a BigReal),
}

/// exp(r e^{i theta}) = exp(r cos theta) (cos(r sin theta) + i sin(r sin theta)).
///
/// Rational multiples of pi are reduced exactly before evaluation.
pub fn cexp_polar(r: &BigReal, theta: AngleArg, ctx: &PrecisionCtx) -> Result<BigComplex> {
    let (c, s) = match theta {
        AngleArg::Pi(q) => (cos_pi(q, ctx), sin_pi(q, ctx)),
        AngleArg::Real(t) => {
            let t = Float::with_val(ctx.prec(), t);
            (t.clone().cos(), t.sin())
        }
    };
    let re = r.clone() * c;
    let im = r.clone() * s;
    let z = Complex::with_val(ctx.prec(), (re, im));
    let e = z.exp();
    if e.real().is_finite() && e.imag().is_finite() {
        Ok(e)
    } else {
        Err(Error::Overflow(format!("cexp_polar with modulus {r}")))
    }
}

/// Complex exponential with overflow detection.
pub fn cexp(z: &BigComplex, ctx: &PrecisionCtx) -> Result<BigComplex> {
    let e = Complex::with_val(ctx.prec(), z.exp_ref());
    if e.real().is_finite() && e.imag().is_finite() {
        Ok(e)
    } else {
        Err(Error::Overflow(format!("exp of Re z = {}", z.real())))
    }
}

/// Formats a real to `sig` significant digits in plain e-notation,
/// e.g. `-1.81418881e2`. Deterministic for equal inputs.
pub fn fmt_sig(x: &BigReal, sig: usize) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if *x < 0 { "-inf" } else { "inf" }.to_string();
    }
    if x.is_zero() {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let (s, exp) = x.to_string_radix(10, Some(sig)).split_once('e').map_or_else(
        || (x.to_string_radix(10, Some(sig)), 0i64),
        |(m, e)| (m.to_string(), e.parse::<i64>().unwrap_or(0)),
    );
    // `s` is a plain decimal like "-1.814188810" or "0.34241316".
    let neg = s.starts_with('-');
    let digits: String = s.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = s.find('.').map_or(s.len(), |p| p) - usize::from(neg);
    let lead_zeros = digits.chars().take_while(|&c| c == '0').count();
    let digits = &digits[lead_zeros..];
    let mut mant: String = digits.chars().take(sig).collect();
    while mant.len() < sig {
        mant.push('0');
    }
    let e10 = exp + point as i64 - lead_zeros as i64 - 1;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&mant[..1]);
    if mant.len() > 1 {
        out.push('.');
        out.push_str(&mant[1..]);
    }
    out.push('e');
    out.push_str(&e10.to_string());
    out
}

/// A quiet NaN, used as a placeholder in partial records.
pub fn nan(ctx: &PrecisionCtx) -> BigReal {
    Float::with_val(ctx.prec(), Special::Nan)
}
