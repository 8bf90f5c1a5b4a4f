//! Exponential growth rates of the length-graded sequences.
//!
//! For the two noncommutative-product regimes the radius of convergence `rho`
//! is the root of an explicit equation on `(0, 1)`, found by bisection at
//! high precision; the growth rate is `g = 1 / rho`. For the commutative-product
//! regimes only a ratio estimate at finite `n` is available.

use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::counting::length_sequence;
use crate::{Error, Regime, Result};

/// Working precision in bits for root isolation.
pub const PRECISION: usize = 192;

/// Default bisection tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;

const RM: RoundingMode = RoundingMode::ToEven;
const MAX_STEPS: usize = 2 * PRECISION;

/// Smallest accepted tolerance, leaving headroom below [`PRECISION`].
pub const MIN_TOL: f64 = 1e-40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthMethod {
    ExactRoot,
    RatioEstimate,
}

impl fmt::Display for GrowthMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthMethod::ExactRoot => "exact-root",
            GrowthMethod::RatioEstimate => "ratio-estimate",
        })
    }
}

#[derive(Clone, Debug)]
pub struct GrowthResult {
    pub regime: Regime,
    pub d: usize,
    pub ell: u32,
    /// Radius of convergence, for exact-root results.
    pub rho: Option<BigFloat>,
    pub g: BigFloat,
    pub method: GrowthMethod,
    /// The index `n` of the estimator, for ratio estimates.
    pub estimate_n: Option<usize>,
    /// `|f(rho)|` at the returned root, for exact-root results.
    pub residual: Option<f64>,
}

impl GrowthResult {
    pub fn g_f64(&self) -> f64 {
        to_f64(&self.g)
    }

    pub fn rho_f64(&self) -> Option<f64> {
        self.rho.as_ref().map(to_f64)
    }
}

fn num(x: f64) -> BigFloat {
    BigFloat::from_f64(x, PRECISION)
}

/// Nearest `f64`, via the decimal rendering.
pub fn to_f64(x: &BigFloat) -> f64 {
    let mut cc = Consts::new().expect("constants cache");
    x.format(Radix::Dec, RM, &mut cc)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(f64::NAN)
}

/// `z^(ell/2)`, through the square root of `z^ell` when `ell` is odd.
fn half_power(z: &BigFloat, ell: u32) -> BigFloat {
    if ell.is_multiple_of(2) {
        z.powi(ell as usize / 2, PRECISION, RM)
    } else {
        z.powi(ell as usize, PRECISION, RM).sqrt(PRECISION, RM)
    }
}

/// Bisection for an increasing `f` with a sign change on `(0, 1)`.
fn bisect<F>(f: F, tol: f64) -> Result<(BigFloat, f64)>
where
    F: Fn(&BigFloat) -> BigFloat,
{
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if tol < MIN_TOL {
        return Err(Error::InvalidArgument(format!(
            "tolerance {tol} is below the working precision"
        )));
    }
    let tol_big = num(tol);
    let mut lo = num(0.0);
    let mut hi = num(1.0);
    let half = num(0.5);
    for _ in 0..MAX_STEPS {
        let mid = lo.add(&hi, PRECISION, RM).mul(&half, PRECISION, RM);
        let value = f(&mid);
        let width = hi.sub(&lo, PRECISION, RM);
        if width.cmp(&tol_big) == Some(-1) && value.abs_cmp(&tol_big) == Some(-1) {
            return Ok((mid, to_f64(&value).abs()));
        }
        if value.is_zero() {
            return Ok((mid, 0.0));
        }
        if value.is_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::InvalidArgument(format!(
        "tolerance {tol} is below the working precision"
    )))
}

fn exact(regime: Regime, d: usize, ell: u32, rho: BigFloat, residual: f64) -> GrowthResult {
    let g = num(1.0).div(&rho, PRECISION, RM);
    GrowthResult {
        regime,
        d,
        ell,
        rho: Some(rho),
        g,
        method: GrowthMethod::ExactRoot,
        estimate_n: None,
        residual: Some(residual),
    }
}

fn check_params(d: usize, ell: u32) -> Result<()> {
    if d == 0 || ell == 0 {
        return Err(Error::InvalidArgument("d and ell must be positive".into()));
    }
    Ok(())
}

/// Root of `rho^(ell/2) + sqrt(d) rho = 1` on `(0, 1)`.
pub fn growth_free(d: usize, ell: u32, tol: f64) -> Result<GrowthResult> {
    check_params(d, ell)?;
    let sqrt_d = num(d as f64).sqrt(PRECISION, RM);
    let one = num(1.0);
    let f = |z: &BigFloat| {
        half_power(z, ell)
            .add(&sqrt_d.mul(z, PRECISION, RM), PRECISION, RM)
            .sub(&one, PRECISION, RM)
    };
    let (rho, residual) = bisect(f, tol)?;
    Ok(exact(Regime::Free, d, ell, rho, residual))
}

/// Root of `(1 - rho²)^d + rho^ell = 2 rho^(ell/2)` on `(0, 1)`.
///
/// The left side minus the right is decreasing there, from 1 to -1.
pub fn growth_comm_unary(d: usize, ell: u32, tol: f64) -> Result<GrowthResult> {
    check_params(d, ell)?;
    let one = num(1.0);
    let two = num(2.0);
    let neg_f = |z: &BigFloat| {
        let base = one.sub(&z.mul(z, PRECISION, RM), PRECISION, RM);
        let value = base
            .powi(d, PRECISION, RM)
            .add(&z.powi(ell as usize, PRECISION, RM), PRECISION, RM)
            .sub(&two.mul(&half_power(z, ell), PRECISION, RM), PRECISION, RM);
        value.neg()
    };
    let (rho, residual) = bisect(neg_f, tol)?;
    Ok(exact(Regime::CommUnary, d, ell, rho, residual))
}

/// `sqrt(b(2n+2) / b(2n)) * ((n+1)/n)^(3/4)` for any regime.
pub fn growth_estimate(regime: Regime, d: usize, ell: u32, n: usize) -> Result<GrowthResult> {
    check_params(d, ell)?;
    if n == 0 {
        return Err(Error::InvalidArgument(
            "estimator index must be positive".into(),
        ));
    }
    let seq = length_sequence(regime, d, ell, 2 * n + 2);
    let low = seq.get(2 * n);
    if low.is_zero() {
        return Err(Error::ZeroTerm(2 * n));
    }
    let ratio = BigRational::new(
        BigInt::from(seq.get(2 * n + 2).clone()),
        BigInt::from(low.clone()),
    );
    let ratio = ratio
        .to_f64()
        .ok_or_else(|| Error::InvalidArgument("ratio out of f64 range".into()))?;
    let correction = ((n as f64 + 1.0) / n as f64).powf(0.75);
    Ok(GrowthResult {
        regime,
        d,
        ell,
        rho: None,
        g: num(ratio.sqrt() * correction),
        method: GrowthMethod::RatioEstimate,
        estimate_n: Some(n),
        residual: None,
    })
}

/// The exact root where one exists, otherwise the ratio estimate at `n`.
pub fn growth(regime: Regime, d: usize, ell: u32, tol: f64, n: usize) -> Result<GrowthResult> {
    match regime {
        Regime::Free => growth_free(d, ell, tol),
        Regime::CommUnary => growth_comm_unary(d, ell, tol),
        Regime::CommMult | Regime::CommBoth => growth_estimate(regime, d, ell, n),
    }
}

/// Total order on finite values, for comparisons in tests and reports.
pub fn compare(a: &BigFloat, b: &BigFloat) -> Ordering {
    a.cmp(b).expect("finite values").cmp(&0)
}
