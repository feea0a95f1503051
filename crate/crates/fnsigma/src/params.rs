//! Input parameters, exact angle arithmetic and regime thresholds.
//!
//! All regime boundaries are exact equalities between rational multiples of
//! pi, so sigma and mu are accepted only as exact rationals and every angle
//! comparison is performed on the rational coefficient, never in floating
//! point.

use crate::error::{Error, Result};
use crate::numerics::{self, BigReal, PrecisionCtx};
use rug::Rational;
use std::cmp::Ordering;
use std::fmt;

/// An angle stored exactly as a rational multiple of pi.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PiAngle {
    coeff: Rational,
}

impl PiAngle {
    /// The angle `coeff * pi`.
    pub fn new(coeff: Rational) -> Self {
        PiAngle { coeff }
    }

    /// The angle `(num/den) * pi`.
    pub fn from_ints(num: i64, den: i64) -> Self {
        PiAngle {
            coeff: Rational::from((num, den)),
        }
    }

    /// The exact rational coefficient of pi.
    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    /// Absolute value.
    pub fn abs(&self) -> PiAngle {
        PiAngle {
            coeff: self.coeff.clone().abs(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff == 0
    }

    /// Exact comparison against another rational multiple of pi.
    pub fn cmp_coeff(&self, q: &Rational) -> Ordering {
        self.coeff.cmp(q)
    }

    /// The angle as a real number at context precision.
    pub fn to_real(&self, ctx: &PrecisionCtx) -> BigReal {
        ctx.real_from_rational(&self.coeff) * ctx.pi()
    }

    /// sin of the angle, via exact reduction of the rational coefficient.
    pub fn sin(&self, ctx: &PrecisionCtx) -> BigReal {
        numerics::sin_pi(&self.coeff, ctx)
    }

    /// cos of the angle, via exact reduction of the rational coefficient.
    pub fn cos(&self, ctx: &PrecisionCtx) -> BigReal {
        numerics::cos_pi(&self.coeff, ctx)
    }
}

impl fmt::Display for PiAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*pi", self.coeff)
    }
}

/// Parses a rational from "p/q" or integer syntax.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::InvalidParameter(format!("cannot parse rational '{s}': {e}")))
}

/// Validated user inputs (sigma, mu, n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parameters {
    sigma: Rational,
    mu: Rational,
    n: u32,
}

impl Parameters {
    /// Requires 0 < sigma < 1, mu > 0, n >= 1.
    pub fn new(sigma: Rational, mu: Rational, n: u32) -> Result<Self> {
        if sigma <= 0 || sigma >= 1 {
            return Err(Error::InvalidParameter(format!(
                "sigma must lie in (0, 1), got {sigma}"
            )));
        }
        if mu <= 0 {
            return Err(Error::InvalidParameter(format!("mu must be > 0, got {mu}")));
        }
        if n < 1 {
            return Err(Error::InvalidParameter("n must be >= 1".into()));
        }
        Ok(Parameters { sigma, mu, n })
    }

    /// Parses sigma and mu from "p/q" strings.
    pub fn from_strs(sigma: &str, mu: &str, n: u32) -> Result<Self> {
        Parameters::new(parse_rational(sigma)?, parse_rational(mu)?, n)
    }

    pub fn sigma(&self) -> &Rational {
        &self.sigma
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// A regime threshold: a finite exact rational or +infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Threshold {
    Finite(Rational),
    Infinite,
}

impl Threshold {
    /// Exact comparison of the integer `n` against the threshold.
    /// Returns `None` when the threshold is infinite.
    pub fn cmp_n(&self, n: u32) -> Option<Ordering> {
        match self {
            Threshold::Finite(t) => Some(Rational::from(n).cmp(t)),
            Threshold::Infinite => None,
        }
    }

    /// True iff the threshold is finite and n >= threshold.
    pub fn reached_by(&self, n: u32) -> bool {
        matches!(self.cmp_n(n), Some(Ordering::Greater | Ordering::Equal))
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Finite(t) => write!(f, "{t}"),
            Threshold::Infinite => write!(f, "inf"),
        }
    }
}

/// The three thresholds governing which expansion components appear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thresholds {
    /// 1/(2-3*sigma) for sigma < 2/3, else infinite.
    pub n0: Threshold,
    /// 1/(2*sigma-1) for sigma > 1/2, else infinite.
    pub n_star: Threshold,
    /// 1/sigma.
    pub n_exp: Rational,
}

/// Computes the thresholds for a given sigma in (0, 1).
pub fn thresholds(sigma: &Rational) -> Thresholds {
    let two_thirds = Rational::from((2, 3));
    let half = Rational::from((1, 2));
    let n0 = if *sigma < two_thirds {
        let d = Rational::from(2) - Rational::from(3) * sigma;
        Threshold::Finite(d.recip())
    } else {
        Threshold::Infinite
    };
    let n_star = if *sigma > half {
        let d = Rational::from(2) * sigma - Rational::from(1);
        Threshold::Finite(d.recip())
    } else {
        Threshold::Infinite
    };
    Thresholds {
        n0,
        n_star,
        n_exp: sigma.clone().recip(),
    }
}

/// Angle lists omega_r = (n-2r-1)/(2n) * pi.
///
/// Returns the full list of length n and the reduced positive half of
/// length floor(n/2).
pub fn omega_list(n: u32) -> (Vec<PiAngle>, Vec<PiAngle>) {
    let n = n as i64;
    let full: Vec<PiAngle> = (0..n)
        .map(|r| PiAngle::from_ints(n - 2 * r - 1, 2 * n))
        .collect();
    let reduced = full[..(n / 2) as usize].to_vec();
    (full, reduced)
}

/// Everything derivable from (sigma, mu, n): exact rationals for angles and
/// thresholds, plus log h at context precision.
#[derive(Clone, Debug)]
pub struct DerivedParams {
    pub sigma: Rational,
    pub mu: Rational,
    pub n: u32,
    /// kappa = 1 - sigma
    pub kappa: Rational,
    /// log h = sigma * log sigma
    pub h_log: BigReal,
    /// delta = 1 - mu
    pub delta: Rational,
    /// vartheta = delta - 1/2
    pub vartheta: Rational,
    pub omega_full: Vec<PiAngle>,
    pub omega_reduced: Vec<PiAngle>,
    /// N = floor(n/2)
    pub big_n: u32,
    /// Parity indicator: 1 for odd n.
    pub delta_n: u32,
    pub n0: Threshold,
    pub n_star: Threshold,
    pub n_exp: Rational,
}

/// Derives all dependent quantities; pure in its inputs.
pub fn derive(p: &Parameters, ctx: &PrecisionCtx) -> DerivedParams {
    let sigma = p.sigma().clone();
    let kappa = Rational::from(1) - &sigma;
    let delta = Rational::from(1) - p.mu();
    let vartheta = delta.clone() - Rational::from((1, 2));
    let (omega_full, omega_reduced) = omega_list(p.n());
    let th = thresholds(&sigma);
    let s = ctx.real_from_rational(&sigma);
    let h_log = s.clone() * s.ln();
    DerivedParams {
        sigma,
        mu: p.mu().clone(),
        n: p.n(),
        kappa,
        h_log,
        delta,
        vartheta,
        omega_full,
        omega_reduced,
        big_n: p.n() / 2,
        delta_n: p.n() % 2,
        n0: th.n0,
        n_star: th.n_star,
        n_exp: th.n_exp,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_parameters() {
        assert!(Parameters::from_strs("0", "3/4", 2).is_err());
        assert!(Parameters::from_strs("1", "3/4", 2).is_err());
        assert!(Parameters::from_strs("5/4", "3/4", 2).is_err());
        assert!(Parameters::from_strs("1/2", "0", 2).is_err());
        assert!(Parameters::from_strs("1/2", "-1/4", 2).is_err());
        assert!(Parameters::from_strs("1/2", "3/4", 0).is_err());
        assert!(Parameters::from_strs("1/2", "3/4", 2).is_ok());
    }

    #[test]
    fn derive_half_example() {
        let ctx = PrecisionCtx::default();
        let p = Parameters::from_strs("1/2", "3/4", 2).unwrap();
        let dp = derive(&p, &ctx);
        assert_eq!(dp.kappa, Rational::from((1, 2)));
        assert_eq!(dp.delta, Rational::from((1, 4)));
        assert_eq!(dp.vartheta, Rational::from((-1, 4)));
        assert_eq!(dp.big_n, 1);
        assert_eq!(dp.delta_n, 0);
        assert_eq!(dp.omega_reduced, vec![PiAngle::from_ints(1, 4)]);
    }

    #[test]
    fn threshold_examples() {
        let th = thresholds(&Rational::from((5, 9)));
        assert_eq!(th.n0, Threshold::Finite(Rational::from(3)));
        let th = thresholds(&Rational::from((3, 4)));
        assert_eq!(th.n_star, Threshold::Finite(Rational::from(2)));
        let th = thresholds(&Rational::from((1, 4)));
        assert_eq!(th.n_exp, Rational::from(4));
        let th = thresholds(&Rational::from((1, 2)));
        assert_eq!(th.n0, Threshold::Finite(Rational::from(2)));
        assert_eq!(th.n_star, Threshold::Infinite);
        let th = thresholds(&Rational::from((1, 3)));
        assert_eq!(th.n_star, Threshold::Infinite);
    }

    #[test]
    fn omega_examples() {
        let (_, reduced) = omega_list(4);
        assert_eq!(
            reduced,
            vec![PiAngle::from_ints(3, 8), PiAngle::from_ints(1, 8)]
        );

        let (full, reduced) = omega_list(1);
        assert_eq!(full, vec![PiAngle::from_ints(0, 1)]);
        assert!(reduced.is_empty());

        let (_, reduced) = omega_list(3);
        assert_eq!(reduced, vec![PiAngle::from_ints(1, 3)]);
        // Last reduced entry is eps_n * pi/(2n) with eps_n = 2 for odd n.
        assert_eq!(
            reduced.last().unwrap().coeff(),
            &(Rational::from((1, 6)) * Rational::from(2))
        );
    }

    #[test]
    fn omega_full_antisymmetric() {
        for n in 1..=12u32 {
            let (full, reduced) = omega_list(n);
            assert_eq!(full.len(), n as usize);
            assert_eq!(reduced.len(), (n / 2) as usize);
            for r in 0..full.len() {
                let mirrored = full[full.len() - 1 - r].coeff().clone();
                assert_eq!(full[r].coeff().clone(), -mirrored);
                assert!(full[r].abs().coeff() < &Rational::from((1, 2)));
            }
            for w in reduced.windows(2) {
                assert!(w[0].coeff() > w[1].coeff());
            }
            for w in &reduced {
                assert!(w.coeff() > &Rational::from(0));
            }
        }
    }

    #[test]
    fn derive_is_pure() {
        let ctx = PrecisionCtx::default();
        let p = Parameters::from_strs("5/9", "3/4", 3).unwrap();
        let a = derive(&p, &ctx);
        let b = derive(&p, &ctx);
        assert_eq!(a.kappa, b.kappa);
        assert_eq!(a.omega_full, b.omega_full);
        assert_eq!(a.h_log, b.h_log);
    }

    #[test]
    fn pi_angle_ordering_is_exact() {
        let a = PiAngle::from_ints(1, 3);
        let b = PiAngle::from_ints(333333333, 1000000000);
        assert!(b < a);
        assert_eq!(a, PiAngle::from_ints(2, 6));
    }
}
