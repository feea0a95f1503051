//! Reference evaluation of phi, Psi and F by direct Taylor summation.
//!
//! These are the oracles: pure series, no asymptotic switching, with
//! cancellation-aware error control. The stopping rule compares each term
//! against the running maximum |term| rather than the partial sum, because
//! heavy cancellation makes the partial sum an unreliable scale.

use crate::error::{Error, Result};
use crate::numerics::{self, cabs, BigComplex, BigReal, PrecisionCtx};
use crate::params::Parameters;
use rug::{Complex, Float, Rational};

/// Outcome of a series summation.
#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub value: BigComplex,
    pub terms_used: usize,
    /// Largest |term| encountered.
    pub max_partial_term: BigReal,
    /// floor(log10(max_partial_term / |value|)), clamped at 0.
    pub cancellation_digits: u32,
}

impl SeriesResult {
    fn real_value(&self) -> BigReal {
        self.value.real().clone()
    }
}

/// Number of consecutive below-threshold terms required to stop.
const STOP_RUN: u32 = 10;

fn term_cap(ctx: &PrecisionCtx) -> usize {
    10 * ctx.digits() as usize + 500
}

/// Largest summation index this crate is willing to attempt.
const PEAK_LIMIT: f64 = 200_000.0;

/// Index of the largest series term, roughly (h|z|)^{1/kappa}; both the phi
/// and the companion series peak there before the factorial takes over.
fn peak_index(sigma: &Rational, zabs: f64) -> f64 {
    let s = sigma.to_f64();
    if zabs <= 1.0 {
        return 0.0;
    }
    ((s * s.ln() + zabs.ln()) / (1.0 - s)).exp()
}

/// Term budget covering the peak and the decaying tail for argument
/// magnitude `zabs`; errors when the peak sits beyond any sane budget.
fn scaled_cap(sigma: &Rational, zabs: f64, ctx: &PrecisionCtx) -> Result<usize> {
    let peak = peak_index(sigma, zabs);
    if !peak.is_finite() || peak > PEAK_LIMIT {
        return Err(Error::TermCap(PEAK_LIMIT as usize));
    }
    Ok(term_cap(ctx).max(4 * peak as usize + 1000))
}

/// Accumulates terms under the shared stopping rule.
struct Accumulator {
    sum: BigComplex,
    max_term: BigReal,
    below: u32,
    count: usize,
    eps: BigReal,
    cap: usize,
}

impl Accumulator {
    fn new(ctx: &PrecisionCtx) -> Self {
        Accumulator {
            sum: ctx.czero(),
            max_term: ctx.zero(),
            below: 0,
            count: 0,
            eps: ctx.eps(),
            cap: term_cap(ctx),
        }
    }

    /// An accumulator whose term budget accounts for the series peak at
    /// argument magnitude `zabs`.
    fn with_scale(sigma: &Rational, zabs: f64, ctx: &PrecisionCtx) -> Result<Self> {
        let mut acc = Accumulator::new(ctx);
        acc.cap = scaled_cap(sigma, zabs, ctx)?;
        Ok(acc)
    }

    /// Adds one term; returns true when the stopping rule fires.
    fn push(&mut self, term: &BigComplex) -> Result<bool> {
        self.sum += term;
        self.count += 1;
        let at = cabs(term);
        if at > self.max_term {
            self.max_term = at.clone();
        }
        let threshold = self.max_term.clone() * &self.eps;
        if at.is_zero() || (!self.max_term.is_zero() && at < threshold) {
            self.below += 1;
            if self.below >= STOP_RUN {
                return Ok(true);
            }
        } else {
            self.below = 0;
        }
        if self.count > self.cap {
            return Err(Error::TermCap(self.cap));
        }
        Ok(false)
    }

    fn finish(self, ctx: &PrecisionCtx) -> Result<SeriesResult> {
        let mag = cabs(&self.sum);
        let cancellation_digits = if mag.is_zero() || self.max_term.is_zero() {
            0
        } else {
            let ratio = self.max_term.clone() / mag;
            let lg = ratio.log10();
            if lg <= 0 {
                0
            } else {
                lg.to_f64().ceil() as u32
            }
        };
        if cancellation_digits + 10 > ctx.digits() {
            return Err(Error::PrecisionExhausted {
                cancelled: cancellation_digits,
                digits: ctx.digits(),
            });
        }
        Ok(SeriesResult {
            value: self.sum,
            terms_used: self.count,
            max_partial_term: self.max_term,
            cancellation_digits,
        })
    }
}

/// Rolling evaluator of 1/G(start - sigma k), k = 0, 1, 2, ...
///
/// With sigma = p/q the arguments fall into q residue classes advancing by
/// -p; after q seed values from the gamma backend each further value follows
/// from 1/G(z - p) = (z-1)(z-2)...(z-p) / G(z). Poles give exact zeros, and
/// a descending chain that hits a pole stays on nonpositive integers, so
/// the zero propagates correctly.
struct RecipGammaDesc {
    sigma: Rational,
    start: Rational,
    buf: std::collections::VecDeque<(Rational, BigReal)>,
    q: usize,
    p: u32,
    k: u64,
}

impl RecipGammaDesc {
    fn new(sigma: &Rational, start: &Rational) -> Self {
        RecipGammaDesc {
            sigma: sigma.clone(),
            start: start.clone(),
            buf: std::collections::VecDeque::new(),
            q: sigma.denom().to_usize().unwrap_or(usize::MAX),
            p: sigma.numer().to_u32().unwrap_or(u32::MAX),
            k: 0,
        }
    }

    fn next(&mut self, ctx: &PrecisionCtx) -> BigReal {
        let arg = self.start.clone() - self.sigma.clone() * Rational::from(self.k);
        self.k += 1;
        if self.buf.len() < self.q {
            let v = numerics::recip_gamma_rat(&arg, ctx);
            self.buf.push_back((arg, v.clone()));
            return v;
        }
        let (prev_arg, prev_val) = self.buf.pop_front().unwrap();
        let mut v = prev_val;
        for j in 1..=self.p {
            v *= ctx.real_from_rational(&(prev_arg.clone() - Rational::from(j)));
        }
        self.buf.push_back((arg, v.clone()));
        v
    }
}

/// Rolling evaluator of G(start + sigma k), k = 0, 1, 2, ..., with `None`
/// at the poles. Ascending chains leave the pole region, so a class whose
/// previous member was a pole reseeds from the backend.
struct GammaAsc {
    sigma: Rational,
    start: Rational,
    buf: std::collections::VecDeque<(Rational, Option<BigReal>)>,
    q: usize,
    p: u32,
    k: u64,
}

impl GammaAsc {
    fn new(sigma: &Rational, start: &Rational) -> Self {
        GammaAsc {
            sigma: sigma.clone(),
            start: start.clone(),
            buf: std::collections::VecDeque::new(),
            q: sigma.denom().to_usize().unwrap_or(usize::MAX),
            p: sigma.numer().to_u32().unwrap_or(u32::MAX),
            k: 0,
        }
    }

    fn seed(arg: &Rational, ctx: &PrecisionCtx) -> Result<Option<BigReal>> {
        match numerics::gamma_rat(arg, ctx) {
            Ok(g) => Ok(Some(g)),
            Err(Error::Pole(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    fn next(&mut self, ctx: &PrecisionCtx) -> Result<Option<BigReal>> {
        let arg = self.start.clone() + self.sigma.clone() * Rational::from(self.k);
        self.k += 1;
        if self.buf.len() < self.q {
            let v = Self::seed(&arg, ctx)?;
            self.buf.push_back((arg, v.clone()));
            return Ok(v);
        }
        let (prev_arg, prev_val) = self.buf.pop_front().unwrap();
        let v = match prev_val {
            Some(mut g) => {
                // G(z + p) = (z + p - 1) ... (z + 1) z G(z); no factor can
                // vanish because z was not a nonpositive integer.
                for j in 0..self.p {
                    g *= ctx.real_from_rational(&(prev_arg.clone() + Rational::from(j)));
                }
                Some(g)
            }
            None => Self::seed(&arg, ctx)?,
        };
        self.buf.push_back((arg, v.clone()));
        Ok(v)
    }
}

/// The Wright-type function phi(-sigma, mu; z) = sum z^k / (k! G(mu - sigma k)).
pub fn phi(sigma: &Rational, mu: &Rational, z: &BigComplex, ctx: &PrecisionCtx) -> Result<SeriesResult> {
    let mut acc = Accumulator::with_scale(sigma, cabs(z).to_f64(), ctx)?;
    let mut rgs = RecipGammaDesc::new(sigma, mu);
    // pw = z^k / k!
    let mut pw = Complex::with_val(ctx.prec(), (1, 0));
    let mut k: u64 = 0;
    loop {
        let rg = rgs.next(ctx);
        let term = pw.clone() * rg;
        if acc.push(&term)? {
            break;
        }
        k += 1;
        pw *= z;
        pw /= Float::with_val(ctx.prec(), k);
    }
    acc.finish(ctx)
}

/// The companion series Psi(z) = sum z^k G(sigma k + delta) / k!.
///
/// Terms whose gamma argument is a nonpositive integer are dropped (the
/// series is taken in its pole-free form).
pub fn psi(sigma: &Rational, delta: &Rational, z: &BigComplex, ctx: &PrecisionCtx) -> Result<SeriesResult> {
    let mut acc = Accumulator::with_scale(sigma, cabs(z).to_f64(), ctx)?;
    let mut gs = GammaAsc::new(sigma, delta);
    let mut pw = Complex::with_val(ctx.prec(), (1, 0));
    let mut k: u64 = 0;
    loop {
        let term = match gs.next(ctx)? {
            Some(g) => pw.clone() * g,
            None => ctx.czero(),
        };
        if acc.push(&term)? {
            break;
        }
        k += 1;
        pw *= z;
        pw /= Float::with_val(ctx.prec(), k);
    }
    acc.finish(ctx)
}

/// Exact value of sin(n gamma_k)/sin(gamma_k) with gamma_k = (k+1) pi/(2n).
///
/// Returns `None` for terms whose factor is exactly zero. At the removable
/// points gamma_k = m pi the limiting value n (-1)^{m(n-1)} is used.
fn trig_ratio(n: u32, k: u64, ctx: &PrecisionCtx) -> Option<BigReal> {
    let n64 = n as u64;
    let kp1 = k + 1;
    if kp1 % (2 * n64) == 0 {
        // gamma_k is a multiple of pi: limit of the ratio.
        let m = kp1 / (2 * n64);
        let neg = (m * (n64 - 1)) % 2 == 1;
        let v = ctx.real_from_i64(n as i64);
        return Some(if neg { -v } else { v });
    }
    if k % 2 == 1 {
        // sin(n gamma_k) = sin((k+1) pi / 2) = 0 for odd k.
        return None;
    }
    // Even k: sin((k+1) pi/2) = (-1)^{k/2}.
    let g = Rational::from((kp1, 2 * n64));
    let denom = numerics::sin_pi(&g, ctx);
    let v = denom.recip();
    Some(if (k / 2) % 2 == 1 { -v } else { v })
}

/// F by its defining series with the trigonometric factor computed exactly.
pub fn f_direct(p: &Parameters, x: &BigReal, ctx: &PrecisionCtx) -> Result<SeriesResult> {
    let mut acc = Accumulator::with_scale(p.sigma(), x.clone().abs().to_f64(), ctx)?;
    let mut rgs = RecipGammaDesc::new(p.sigma(), p.mu());
    let mut pw = Float::with_val(ctx.prec(), 1); // x^k / k!
    let mut k: u64 = 0;
    loop {
        let rg = rgs.next(ctx);
        let term = match trig_ratio(p.n(), k, ctx) {
            Some(ratio) => {
                let re = ratio * &pw * rg;
                Complex::with_val(ctx.prec(), (re, Float::with_val(ctx.prec(), 0)))
            }
            None => ctx.czero(),
        };
        if acc.push(&term)? {
            break;
        }
        k += 1;
        pw *= x;
        pw /= Float::with_val(ctx.prec(), k);
    }
    acc.finish(ctx)
}

/// The k-th term of the defining series of F (zero where the trigonometric
/// factor vanishes); used for term-by-term identities.
pub fn f_direct_term(p: &Parameters, x: &BigReal, k: u64, ctx: &PrecisionCtx) -> BigReal {
    match trig_ratio(p.n(), k, ctx) {
        Some(ratio) => {
            let idx = p.mu().clone() - p.sigma().clone() * Rational::from(k);
            let rg = numerics::recip_gamma_rat(&idx, ctx);
            let mut pw = Float::with_val(ctx.prec(), 1);
            for j in 1..=k {
                pw *= x;
                pw /= Float::with_val(ctx.prec(), j);
            }
            ratio * pw * rg
        }
        None => ctx.zero(),
    }
}

/// The k-th term of the phi series at real argument.
pub fn phi_term(sigma: &Rational, mu: &Rational, x: &BigReal, k: u64, ctx: &PrecisionCtx) -> BigReal {
    let idx = mu.clone() - sigma.clone() * Rational::from(k);
    let rg = numerics::recip_gamma_rat(&idx, ctx);
    let mut pw = Float::with_val(ctx.prec(), 1);
    for j in 1..=k {
        pw *= x;
        pw /= Float::with_val(ctx.prec(), j);
    }
    pw * rg
}

/// F via the symmetry-reduced sum of rotated Wright functions:
/// 2 Re sum_{r<N} e^{i omega_r} phi(-sigma, mu; x e^{i omega_r})
/// + Delta_n phi(-sigma, mu; x).
pub fn f_wright(p: &Parameters, x: &BigReal, ctx: &PrecisionCtx) -> Result<SeriesResult> {
    let (_, reduced) = crate::params::omega_list(p.n());
    let mut total = ctx.zero();
    let mut terms_used = 0usize;
    let mut max_term = ctx.zero();
    for w in &reduced {
        // z = x e^{i omega_r} from exact sin/cos of the angle.
        let zc = Complex::with_val(ctx.prec(), (x.clone() * w.cos(ctx), x.clone() * w.sin(ctx)));
        let r = phi(p.sigma(), p.mu(), &zc, ctx)?;
        let e_iw = Complex::with_val(ctx.prec(), (w.cos(ctx), w.sin(ctx)));
        let contrib = e_iw * &r.value;
        total += Float::with_val(ctx.prec(), 2) * contrib.real();
        terms_used = terms_used.max(r.terms_used);
        if r.max_partial_term > max_term {
            max_term = r.max_partial_term.clone();
        }
    }
    if p.n() % 2 == 1 {
        let zc = Complex::with_val(ctx.prec(), (x.clone(), Float::with_val(ctx.prec(), 0)));
        let r = phi(p.sigma(), p.mu(), &zc, ctx)?;
        total += r.value.real();
        terms_used = terms_used.max(r.terms_used);
        if r.max_partial_term > max_term {
            max_term = r.max_partial_term.clone();
        }
    }
    let mag = total.clone().abs();
    let cancellation_digits = if mag.is_zero() || max_term.is_zero() {
        0
    } else {
        let lg = (max_term.clone() / mag).log10();
        if lg <= 0 {
            0
        } else {
            lg.to_f64().ceil() as u32
        }
    };
    if cancellation_digits + 10 > ctx.digits() {
        return Err(Error::PrecisionExhausted {
            cancelled: cancellation_digits,
            digits: ctx.digits(),
        });
    }
    Ok(SeriesResult {
        value: Complex::with_val(ctx.prec(), (total, Float::with_val(ctx.prec(), 0))),
        terms_used,
        max_partial_term: max_term,
        cancellation_digits,
    })
}

/// Real value of an oracle result (the imaginary part is exactly zero for
/// `f_direct` and `f_wright`).
pub fn real_of(r: &SeriesResult) -> BigReal {
    r.real_value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::fmt_sig;
    use rug::ops::Pow;

    fn ctx() -> PrecisionCtx {
        PrecisionCtx::default()
    }

    fn creal(c: &PrecisionCtx, x: f64) -> BigComplex {
        Complex::with_val(c.prec(), (x, 0.0))
    }

    #[test]
    fn phi_at_zero_is_recip_gamma_mu() {
        let c = ctx();
        let mu = Rational::from((3, 4));
        let r = phi(&Rational::from((1, 2)), &mu, &creal(&c, 0.0), &c).unwrap();
        let expect = numerics::recip_gamma_rat(&mu, &c);
        let diff = (r.value.real().clone() - expect).abs();
        assert!(diff < c.eps());
    }

    #[test]
    fn phi_m_wright_closed_form() {
        // phi(-1/2, 1/2; -2) = e^{-1} / sqrt(pi)
        let c = ctx();
        let r = phi(
            &Rational::from((1, 2)),
            &Rational::from((1, 2)),
            &creal(&c, -2.0),
            &c,
        )
        .unwrap();
        let expect = Float::with_val(c.prec(), 1).exp().recip() / c.pi().sqrt();
        let rel = ((r.value.real().clone() - &expect) / expect).abs();
        assert!(rel < c.eps() * 1000u32, "rel = {rel}");
    }

    #[test]
    fn phi_conjugate_symmetry() {
        let c = ctx();
        let s = Rational::from((1, 2));
        let mu = Rational::from((3, 4));
        let ang = Rational::from((1, 4));
        let z = Complex::with_val(
            c.prec(),
            (
                Float::with_val(c.prec(), 8) * numerics::cos_pi(&ang, &c),
                Float::with_val(c.prec(), 8) * numerics::sin_pi(&ang, &c),
            ),
        );
        let zc = z.clone().conj();
        let a = phi(&s, &mu, &z, &c).unwrap();
        let b = phi(&s, &mu, &zc, &c).unwrap();
        let diff = cabs(&(a.value.clone().conj() - &b.value));
        let scale = cabs(&a.value);
        assert!(diff < scale * c.eps() * 1000u32);
    }

    #[test]
    fn psi_at_zero() {
        let c = ctx();
        let r = psi(&Rational::from((1, 2)), &Rational::from((1, 4)), &creal(&c, 0.0), &c).unwrap();
        let expect = numerics::gamma_rat(&Rational::from((1, 4)), &c).unwrap();
        assert!((r.value.real().clone() - expect).abs() < c.eps() * 10u32);

        // delta a nonpositive integer: the k=0 term is dropped.
        let r = psi(&Rational::from((1, 2)), &Rational::from(0), &creal(&c, 0.0), &c).unwrap();
        assert!(r.value.real().is_zero());
    }

    #[test]
    fn psi_reflection_combination_gives_phi() {
        // (1/2pi) { e^{i pi theta} Psi(x e^{i pi sigma}) + conj } = phi(x)
        // with delta = 1 - mu, theta = 1/2 - mu.
        let c = ctx();
        let sigma = Rational::from((2, 5));
        let mu = Rational::from((3, 4));
        let delta = Rational::from(1) - &mu;
        let vth = Rational::from((1, 2)) - &mu;
        let x = Float::with_val(c.prec(), 3);
        let z = Complex::with_val(
            c.prec(),
            (
                x.clone() * numerics::cos_pi(&sigma, &c),
                x.clone() * numerics::sin_pi(&sigma, &c),
            ),
        );
        let pr = psi(&sigma, &delta, &z, &c).unwrap();
        let rot = Complex::with_val(
            c.prec(),
            (numerics::cos_pi(&vth, &c), numerics::sin_pi(&vth, &c)),
        );
        let combo = (rot * &pr.value).real().clone() / c.pi();
        let direct = phi(&sigma, &mu, &creal(&c, 3.0), &c).unwrap();
        let rel = ((combo - direct.value.real()) / direct.value.real()).abs();
        assert!(rel < c.eps() * 100000u32, "rel = {rel}");
    }

    #[test]
    fn f_direct_n1_is_phi() {
        let c = ctx();
        let p = Parameters::from_strs("2/5", "3/4", 1).unwrap();
        let x = Float::with_val(c.prec(), 5);
        let a = f_direct(&p, &x, &c).unwrap();
        let b = phi(p.sigma(), p.mu(), &creal(&c, 5.0), &c).unwrap();
        let rel = ((a.value.real().clone() - b.value.real()) / b.value.real()).abs();
        assert!(rel < c.eps() * 1000u32);
    }

    #[test]
    fn f_direct_reference_cell() {
        let c = ctx();
        let p = Parameters::from_strs("1/2", "3/4", 2).unwrap();
        let x = Float::with_val(c.prec(), 8);
        let r = f_direct(&p, &x, &c).unwrap();
        assert_eq!(fmt_sig(r.value.real(), 8), "8.0329527e-1");
    }

    #[test]
    fn f_direct_at_zero() {
        // k=0 term only: 1 / (sin(pi/(2n)) Gamma(mu))
        let c = ctx();
        for n in [2u32, 3, 5] {
            let p = Parameters::from_strs("1/3", "3/4", n).unwrap();
            let r = f_direct(&p, &c.zero(), &c).unwrap();
            let expect = numerics::recip_gamma_rat(&Rational::from((3, 4)), &c)
                / numerics::sin_pi(&Rational::from((1, 2 * n as i64)), &c);
            let rel = ((r.value.real().clone() - &expect) / expect).abs();
            assert!(rel < c.eps() * 100u32);
        }
    }

    #[test]
    fn f_wright_reference_cell() {
        let c = ctx();
        let p = Parameters::from_strs("2/3", "3/4", 4).unwrap();
        let x = Float::with_val(c.prec(), 8);
        let r = f_wright(&p, &x, &c).unwrap();
        assert_eq!(fmt_sig(r.value.real(), 9), "1.63072031e0");
    }

    #[test]
    fn f_wright_n1_is_phi_alone() {
        let c = ctx();
        let p = Parameters::from_strs("1/3", "3/4", 1).unwrap();
        let x = Float::with_val(c.prec(), -4);
        let a = f_wright(&p, &x, &c).unwrap();
        let b = phi(p.sigma(), p.mu(), &creal(&c, -4.0), &c).unwrap();
        let rel = ((a.value.real().clone() - b.value.real()) / b.value.real()).abs();
        assert!(rel < c.eps() * 1000u32);
    }

    #[test]
    fn f_direct_agrees_with_f_wright() {
        let c = ctx();
        for (s, m, n, x) in [
            ("1/3", "3/4", 2, 8.0),
            ("5/9", "3/4", 3, -6.0),
            ("3/4", "3/4", 4, -5.0),
            ("1/4", "5/2", 5, 7.0),
        ] {
            let p = Parameters::from_strs(s, m, n).unwrap();
            let xb = Float::with_val(c.prec(), x);
            let a = f_direct(&p, &xb, &c).unwrap();
            let b = f_wright(&p, &xb, &c).unwrap();
            let scale = a.value.real().clone().abs();
            let diff = (a.value.real().clone() - b.value.real()).abs();
            let digits_lost = a.cancellation_digits.max(b.cancellation_digits);
            let tol = scale * Float::with_val(c.prec(), 10).pow(-((c.digits() - digits_lost - 10) as i32));
            assert!(diff < tol, "{s} n={n} x={x}: diff {diff} tol {tol}");
        }
    }

    #[test]
    fn doubling_digits_is_stable() {
        let c60 = ctx();
        let c120 = PrecisionCtx::new(120).unwrap();
        let p = Parameters::from_strs("1/2", "3/4", 3).unwrap();
        let a = f_wright(&p, &Float::with_val(c60.prec(), 8), &c60).unwrap();
        let b = f_wright(&p, &Float::with_val(c120.prec(), 8), &c120).unwrap();
        assert_eq!(
            fmt_sig(a.value.real(), 40),
            fmt_sig(b.value.real(), 40)
        );
    }

    #[test]
    fn term_recurrence_matches() {
        // term_{k+1} / term_k = z/(k+1) * G(mu - sigma k)/G(mu - sigma(k+1))
        let c = ctx();
        let s = Rational::from((1, 3));
        let mu = Rational::from((3, 4));
        let x = Float::with_val(c.prec(), 2.5);
        for k in [0u64, 1, 2, 5, 9, 14, 23] {
            let t0 = phi_term(&s, &mu, &x, k, &c);
            let t1 = phi_term(&s, &mu, &x, k + 1, &c);
            let i0 = mu.clone() - s.clone() * Rational::from(k);
            let i1 = mu.clone() - s.clone() * Rational::from(k + 1);
            let ratio_expect = x.clone() / Float::with_val(c.prec(), k + 1)
                * numerics::recip_gamma_rat(&i1, &c)
                / numerics::recip_gamma_rat(&i0, &c);
            let ratio = t1 / &t0;
            let rel = ((ratio - &ratio_expect) / ratio_expect).abs();
            assert!(rel < c.eps() * 100000u32, "k={k} rel={rel}");
        }
    }

    #[test]
    fn term_cap_signals_misuse() {
        let c = PrecisionCtx::new(30).unwrap();
        let z = Complex::with_val(c.prec(), (1e120, 0.0));
        let r = phi(&Rational::from((1, 2)), &Rational::from((3, 4)), &z, &c);
        assert!(matches!(r, Err(Error::TermCap(_)) | Err(Error::PrecisionExhausted { .. })));
    }
}
