//! Acceptance suite: nine end-to-end criteria covering table reproduction,
//! oracle consistency, expansion convergence and regime classification.
//! Each test prints a single PASS line on success.

use fnsigma::f_asym::{self, Component, Side};
use fnsigma::harness;
use fnsigma::numerics::PrecisionCtx;
use fnsigma::params::{self, Parameters};
use fnsigma::psi_asym::{self, TruncPolicy};
use fnsigma::series;
use fnsigma::Error;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rug::{Complex, Float, Rational};
use std::time::Instant;

fn ctx() -> PrecisionCtx {
    PrecisionCtx::default()
}

#[test]
fn criterion_1_table_one() {
    let start = Instant::now();
    let report = harness::reproduce_table(1, &ctx()).unwrap();
    let secs = start.elapsed().as_secs_f64();
    for line in report.lines() {
        assert!(line.starts_with("PASS"), "{line}");
    }
    assert!(report.pass);
    assert!(secs < 60.0, "took {secs:.1}s");
    println!("PASS criterion 1: table 1, {} cells within one printed ulp in {secs:.1}s",
        report.cells.len());
}

#[test]
fn criterion_2_table_two() {
    let start = Instant::now();
    let report = harness::reproduce_table(2, &ctx()).unwrap();
    let secs = start.elapsed().as_secs_f64();
    for line in report.lines() {
        assert!(line.starts_with("PASS"), "{line}");
    }
    assert!(report.pass);
    assert!(secs < 60.0, "took {secs:.1}s");
    println!("PASS criterion 2: table 2, {} cells within one printed ulp in {secs:.1}s",
        report.cells.len());
}

fn rand_rational(rng: &mut StdRng, lo_num: i64, hi_num: i64, den: i64) -> Rational {
    Rational::from((rng.gen_range(lo_num..=hi_num), den))
}

#[test]
fn criterion_3_oracle_cross_check() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x00d1_ce00);
    let mut checked = 0;
    while checked < 200 {
        let den = rng.gen_range(2i64..=40);
        let sigma = rand_rational(&mut rng, 1, den - 1, den);
        let mu = rand_rational(&mut rng, 1, 120, 40); // (0, 3]
        let n = rng.gen_range(1u32..=6);
        let xf: f64 = rng.gen_range(-10.0..=10.0);
        if xf.abs() < 1e-3 {
            continue;
        }
        // Reject draws whose series peak or cancellation depth would push
        // the summation outside the adaptive budget used below.
        let s = sigma.to_f64();
        let kappa = 1.0 - s;
        let peak = ((s * s.ln() + xf.abs().max(1.0).ln()) / kappa).exp();
        if peak > 4000.0 || kappa * peak > 250.0 {
            continue;
        }
        let p = Parameters::new(sigma.clone(), mu.clone(), n).unwrap();
        let mut agreed = false;
        for digits in [80u32, 160, 320] {
            let c = PrecisionCtx::new(digits).unwrap();
            let x = Float::with_val(c.prec(), xf);
            let a = match series::f_direct(&p, &x, &c) {
                Ok(r) => r,
                Err(Error::PrecisionExhausted { .. }) => continue,
                Err(e) => panic!("f_direct: {e}"),
            };
            let b = match series::f_wright(&p, &x, &c) {
                Ok(r) => r,
                Err(Error::PrecisionExhausted { .. }) => continue,
                Err(e) => panic!("f_wright: {e}"),
            };
            let va = a.value.real().clone();
            let vb = b.value.real().clone();
            let diff = (va.clone() - &vb).abs();
            let scale = va.clone().abs().max(&vb.clone().abs());
            if diff.is_zero() || (!scale.is_zero() && diff / scale < Float::with_val(c.prec(), 1e-30)) {
                agreed = true;
                break;
            }
        }
        assert!(agreed, "sigma={sigma} mu={mu} n={n} x={xf}");
        checked += 1;
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 300.0, "took {secs:.1}s");
    println!("PASS criterion 3: 200 random points, both series agree to >= 30 digits in {secs:.1}s");
}

#[test]
fn criterion_4_n1_terms_coincide() {
    let c = ctx();
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..20 {
        let den = rng.gen_range(2i64..=30);
        let sigma = rand_rational(&mut rng, 1, den - 1, den);
        let mu = rand_rational(&mut rng, 1, 90, 30);
        let xf: f64 = rng.gen_range(-8.0..=8.0);
        let p = Parameters::new(sigma.clone(), mu.clone(), 1).unwrap();
        let x = Float::with_val(c.prec(), xf);
        for k in 0..50u64 {
            let a = series::f_direct_term(&p, &x, k, &c);
            let b = series::phi_term(&sigma, &mu, &x, k, &c);
            assert_eq!(a, b, "sigma={sigma} mu={mu} x={xf} k={k}");
        }
    }
    println!("PASS criterion 4: n = 1 reduces to a single Wright function, term by term");
}

#[test]
fn criterion_5_psi_expansion_converges() {
    let c = ctx();
    let sigma = Rational::from((1, 2));
    let delta = Rational::from((1, 4));
    let mut errs = Vec::new();
    for z in [10u32, 20, 40] {
        let zc = Complex::with_val(c.prec(), (z, 0));
        let oracle = series::psi(&sigma, &delta, &zc, &c).unwrap();
        let e = psi_asym::e_expansion(&sigma, &delta, &zc, 3, &c).unwrap();
        let h = psi_asym::h_expansion(&sigma, &delta, &zc, 1, TruncPolicy::default(), &c).unwrap();
        let approx = e + &h;
        let rel = fnsigma::numerics::cabs(&(approx - &oracle.value))
            / fnsigma::numerics::cabs(&oracle.value);
        errs.push(rel.to_f64());
    }
    assert!(errs[0] < 1e-2, "errs = {errs:?}");
    assert!(errs[0] > errs[1] && errs[1] > errs[2], "errs = {errs:?}");
    println!("PASS criterion 5: E + H rel errs decrease, {errs:?}");
}

#[test]
fn criterion_6_negative_side_cancellation() {
    let c = ctx();
    for sigma in ["1/4", "1/3", "2/5"] {
        for n in [2u32, 3] {
            let p = Parameters::from_strs(sigma, "3/4", n).unwrap();
            let dp = params::derive(&p, &c);
            for k in 0..=20u64 {
                let t = f_asym::theta_hat(&dp, k, &c).unwrap();
                assert!(t.is_zero(), "sigma={sigma} n={n} k={k}");
            }
            let x = Float::with_val(c.prec(), 8);
            let h = f_asym::h_alg_neg(&dp, &x, TruncPolicy::default(), &c).unwrap();
            assert!(h.value.is_zero());
        }
    }
    println!("PASS criterion 6: negative-side algebraic coefficients vanish exactly for sigma <= 1/2");
}

#[test]
fn criterion_7_error_decay_sweeps() {
    let c = ctx();
    let p = Parameters::from_strs("2/3", "3/4", 2).unwrap();
    let xs: Vec<Float> = [4, 8, 16, 32]
        .iter()
        .map(|&v| Float::with_val(c.prec(), v))
        .collect();
    let r1 = harness::sweep(&p, &xs, 3, TruncPolicy::default(), &c).unwrap();
    assert!(r1.monotone_decay, "{:?}", r1.records.iter().map(|r| r.rel_err.clone()).collect::<Vec<_>>());

    let p = Parameters::from_strs("1/2", "3/4", 3).unwrap();
    let xs: Vec<Float> = [8, 12, 16]
        .iter()
        .map(|&v| Float::with_val(c.prec(), v))
        .collect();
    let r2 = harness::sweep(&p, &xs, 3, TruncPolicy::default(), &c).unwrap();
    assert!(r2.monotone_decay, "{:?}", r2.records.iter().map(|r| r.rel_err.clone()).collect::<Vec<_>>());
    println!("PASS criterion 7: relative error decreases strictly along both sweeps");
}

#[test]
fn criterion_8_regime_classification() {
    let c = ctx();
    let pos = |s: &str, n: u32| {
        let dp = params::derive(&Parameters::from_strs(s, "3/4", n).unwrap(), &c);
        f_asym::classify_regime(&dp, Side::Pos).unwrap().components
    };
    let neg = |s: &str, n: u32| {
        let dp = params::derive(&Parameters::from_strs(s, "3/4", n).unwrap(), &c);
        f_asym::classify_regime(&dp, Side::Neg).unwrap().components
    };
    use Component::*;
    assert_eq!(pos("1/3", 2), vec![ExpLarge, Algebraic]);
    assert_eq!(pos("1/2", 2), vec![ExpOscillatory, Algebraic]);
    assert_eq!(pos("1/2", 3), vec![ExpLarge, ExpSmall, Algebraic]);
    assert_eq!(pos("5/9", 2), vec![Algebraic]);
    assert_eq!(pos("5/9", 3), vec![ExpOscillatory, ExpSmall, Algebraic]);
    assert_eq!(pos("5/9", 4), vec![ExpLarge, Algebraic]);
    assert_eq!(pos("2/3", 2), vec![Algebraic]);
    assert_eq!(neg("1/4", 2), vec![ExpSmall]);
    assert_eq!(neg("1/4", 4), vec![ExpOscillatory]);
    assert_eq!(neg("2/5", 2), vec![ExpSmall]);
    assert_eq!(neg("1/2", 2), vec![ExpOscillatory]);
    assert_eq!(neg("3/4", 3), vec![ExpLarge, Algebraic]);

    // Perturbing sigma across a boundary flips the tag both ways.
    assert_eq!(pos("499/1000", 2), vec![ExpLarge, Algebraic]);
    assert_eq!(pos("501/1000", 2), vec![Algebraic]);
    assert_eq!(neg("249/1000", 4), vec![ExpSmall]);
    assert_eq!(neg("251/1000", 4), vec![ExpLarge]);
    println!("PASS criterion 8: 12 regime configurations and 4 boundary perturbations classify correctly");
}

#[test]
fn criterion_9_leading_estimate() {
    let c = PrecisionCtx::new(120).unwrap();
    let p = Parameters::from_strs("1/5", "3/4", 2).unwrap();
    let mut ratios = Vec::new();
    for xv in [20u32, 40, 80] {
        let x = Float::with_val(c.prec(), xv);
        let (env, cosf) = f_asym::karasheva_parts(&p, &x, &c).unwrap();
        // The cosine factor stays well away from zero at these samples.
        assert!(cosf.clone().abs().to_f64() > 0.05, "x = {xv}");
        let f = series::f_wright(&p, &x, &c).unwrap();
        ratios.push((f.value.real().clone() / (env * &cosf)).to_f64());
    }
    let last = *ratios.last().unwrap();
    assert!((last - 1.0).abs() < 0.1, "ratios = {ratios:?}");
    assert!(
        (last - 1.0).abs() <= (ratios[0] - 1.0).abs() + 1e-9,
        "ratios = {ratios:?}"
    );
    println!("PASS criterion 9: leading-estimate ratios {ratios:?} approach 1, final within 10%");
}
