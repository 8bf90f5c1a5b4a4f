//! Truncated one-variable power series with exact rational coefficients, and
//! solvers for the generating-function equations.
//!
//! These solvers work from the functional equations alone and never consult
//! the recurrences in [`crate::counting`], so the two can check each other.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::counting::{binomial, narayana};
use crate::{Error, Regime, Result};

/// `c_0 + c_1 z + ... + c_N z^N + O(z^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigRational::one(), 0, order)
    }

    /// `c z^k`, or zero when `k` exceeds the order.
    pub fn monomial(c: BigRational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_integers<I, T>(order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = BigRational::from_integer(c.into());
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(&self.coeffs) {
            *slot = c.clone();
        }
        s
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `z^k f(z)`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order());
        for i in k..=self.order() {
            s.coeffs[i] = self.coeffs[i - k].clone();
        }
        s
    }

    /// `f(z) / z^k`, requiring the low coefficients to vanish. The order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::SeriesDomain(format!(
                "series is not divisible by z^{k}"
            )));
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// `f(z^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut s = Self::zero(self.order());
        for i in 0..=self.order() / k {
            s.coeffs[i * k] = self.coeffs[i].clone();
        }
        s
    }

    pub fn derivative(&self) -> Self {
        let mut s = Self::zero(self.order());
        for i in 1..=self.order() {
            s.coeffs[i - 1] = &self.coeffs[i] * BigRational::from_integer(i.into());
        }
        s
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::SeriesDomain(
                "inverse of a series with zero constant term".into(),
            ));
        }
        let inv0 = c0.recip();
        let mut h = Self::zero(self.order());
        h.coeffs[0] = inv0.clone();
        for n in 1..=self.order() {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &h.coeffs[n - k];
            }
            h.coeffs[n] = -acc * &inv0;
        }
        Ok(h)
    }

    /// `exp(f)` for `f(0) = 0`, via `g' = f' g`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::SeriesDomain("exp needs a zero constant term".into()));
        }
        let mut g = Self::one(self.order());
        for n in 1..=self.order() {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &g.coeffs[n - k] * BigRational::from_integer(k.into());
                }
            }
            g.coeffs[n] = acc / BigRational::from_integer(n.into());
        }
        Ok(g)
    }

    /// `log(g)` for `g(0) = 1`, via `g l' = g'`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SeriesDomain("log needs constant term 1".into()));
        }
        let mut l = Self::zero(self.order());
        for n in 1..=self.order() {
            let mut acc = &self.coeffs[n] * BigRational::from_integer(n.into());
            for k in 1..n {
                acc -= &l.coeffs[k] * &self.coeffs[n - k] * BigRational::from_integer(k.into());
            }
            l.coeffs[n] = acc / BigRational::from_integer(n.into());
        }
        Ok(l)
    }

    /// Square root with constant term 1, by Newton's iteration `y <- (y + f/y) / 2`.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SeriesDomain("sqrt needs constant term 1".into()));
        }
        let half = BigRational::new(1.into(), 2.into());
        let mut y = Self::one(self.order());
        let mut correct = 1;
        while correct <= self.order() {
            y = (&y + &(self * &y.recip()?)).scale(&half);
            correct *= 2;
        }
        Ok(y)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, failing on the first non-integral one.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral {
                        index,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }

    /// Nonnegative integer coefficients, as produced by counting series.
    pub fn to_counts(&self) -> Result<Vec<BigUint>> {
        self.to_integers()?
            .into_iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_negative() {
                    Err(Error::SeriesDomain(format!(
                        "coefficient {index} is negative: {c}"
                    )))
                } else {
                    Ok(c.magnitude().clone())
                }
            })
            .collect()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

fn common_order(a: &TruncatedSeries, b: &TruncatedSeries) -> usize {
    a.order().min(b.order())
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = common_order(self, rhs);
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = common_order(self, rhs);
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = common_order(self, rhs);
        let mut out = TruncatedSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

/// `1 - (1 - z²)^d`, the specialized operator weight for commuting operators.
pub fn commuting_weight(d: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for j in 1..=d {
        if 2 * j > order {
            break;
        }
        let c = int(binomial(d as u64, j as u64));
        s.coeffs[2 * j] = if j % 2 == 1 { c } else { -c };
    }
    s
}

/// `d z²`, the specialized operator weight for noncommuting operators.
pub fn free_weight(d: usize, order: usize) -> TruncatedSeries {
    TruncatedSeries::monomial(int(d), 2, order)
}

fn operator_weight(regime: Regime, d: usize, order: usize) -> TruncatedSeries {
    if regime.commuting_unary() {
        commuting_weight(d, order)
    } else {
        free_weight(d, order)
    }
}

/// Iterates `b <- step(b)` from zero until it stops changing.
///
/// `step` must raise the number of correct coefficients by at least one per
/// pass, so the loop ends within `order + 2` passes.
fn fixpoint<F>(order: usize, mut step: F) -> Result<TruncatedSeries>
where
    F: FnMut(&TruncatedSeries) -> Result<TruncatedSeries>,
{
    let mut b = TruncatedSeries::zero(order);
    for _ in 0..order + 2 {
        let next = step(&b)?;
        if next == b {
            return Ok(b);
        }
        b = next;
    }
    panic!(
        "fixpoint iteration did not settle within {} passes",
        order + 2
    );
}

/// Solves `B = z^ell + z^ell B + W(z) (B + B²)` by fixpoint iteration, where
/// `W = d z²` (free) or `1 - (1 - z²)^d` (commuting operators).
pub fn solve_quadratic_fe(
    regime: Regime,
    d: usize,
    ell: u32,
    order: usize,
) -> Result<TruncatedSeries> {
    if regime.commutative_product() {
        return Err(Error::UnsupportedRegime(regime));
    }
    let zl = TruncatedSeries::monomial(BigRational::one(), ell as usize, order);
    let w = operator_weight(regime, d, order);
    fixpoint(order, |b| {
        let quad = b + &(b * b);
        Ok(&(&zl + &(&zl * b)) + &(&w * &quad))
    })
}

/// The free series from the closed form
/// `B = (1 - z^ell - d z² - sqrt((1 - z^ell - d z²)² - 4 d z^{ell+2})) / (2 d z²)`,
/// with the square root expanded by Newton's iteration.
pub fn closed_form_free(d: usize, ell: u32, order: usize) -> Result<TruncatedSeries> {
    if d == 0 {
        return Err(Error::InvalidArgument("closed form needs d >= 1".into()));
    }
    let work = order + 2;
    let ell = ell as usize;
    let one = TruncatedSeries::one(work);
    let zl = TruncatedSeries::monomial(BigRational::one(), ell, work);
    let dz2 = free_weight(d, work);
    let linear = &(&one - &zl) - &dz2;
    let disc = &(&linear * &linear) - &TruncatedSeries::monomial(int(4 * d), ell + 2, work);
    let numerator = &linear - &disc.sqrt()?;
    Ok(numerator
        .shift_down(2)?
        .scale(&BigRational::new(1.into(), (2 * d).into())))
}

/// Solves `1 + B = exp(Σ_{j>=1} B̄(z^j) / j)` where `B̄ = atoms(B)`, by fixpoint iteration.
///
/// `atoms` maps the current approximation of `B` to its atom series and must
/// have positive valuation; every returned coefficient is checked to be an
/// integer.
pub fn euler_exp_log<F>(atoms: F, order: usize) -> Result<TruncatedSeries>
where
    F: Fn(&TruncatedSeries) -> TruncatedSeries,
{
    let b = fixpoint(order, |b| {
        let bar = atoms(b);
        if !bar.coeff(0).is_zero() {
            return Err(Error::SeriesDomain(
                "atom series must vanish at z = 0".into(),
            ));
        }
        let mut sum = TruncatedSeries::zero(order);
        for j in 1..=order {
            sum = &sum
                + &bar
                    .substitute_power(j)
                    .scale(&BigRational::new(1.into(), j.into()));
        }
        Ok(&sum.exp()? - &TruncatedSeries::one(order))
    })?;
    b.to_integers()?;
    Ok(b)
}

/// The atom series `B̄ = z^ell + W(z) B` for a commutative-product regime.
pub fn atom_builder(
    regime: Regime,
    d: usize,
    ell: u32,
) -> impl Fn(&TruncatedSeries) -> TruncatedSeries {
    move |b: &TruncatedSeries| {
        let order = b.order();
        let zl = TruncatedSeries::monomial(BigRational::one(), ell as usize, order);
        &zl + &(&operator_weight(regime, d, order) * b)
    }
}

/// Length-graded generating function of any regime through `z^order`.
pub fn solve(regime: Regime, d: usize, ell: u32, order: usize) -> Result<TruncatedSeries> {
    match regime {
        Regime::Free | Regime::CommUnary => solve_quadratic_fe(regime, d, ell, order),
        Regime::CommMult | Regime::CommBoth => euler_exp_log(atom_builder(regime, d, ell), order),
    }
}

/// Checks the symmetry `A_1(u; p) = (u/p) A_1(p; u)` of the one-operator
/// bivariate series, i.e. `a_1(r; k) = a_1(k + 1; r - 1)`, for all `r + k <= order`.
///
/// The coefficients come from iterating `A = u + uA + pA + pA²` on a grid
/// truncated at total degree `order`; they are also compared with `N(r + k, k)`.
pub fn check_symmetry_a1(order: usize) -> bool {
    let a = bivariate_a1(order);
    for r in 1..=order {
        for k in 0..=order - r {
            if a[r][k] != a[k + 1][r - 1] {
                return false;
            }
            match narayana((r + k) as u64, k as u64) {
                Ok(n) if BigInt::from(n.clone()) == a[r][k] => {}
                _ => return false,
            }
        }
    }
    true
}

/// `a[r][k]` for `r + k <= order`.
fn bivariate_a1(order: usize) -> Vec<Vec<BigInt>> {
    let empty = || -> Vec<Vec<BigInt>> {
        (0..=order)
            .map(|r| vec![BigInt::zero(); order + 1 - r])
            .collect()
    };
    let mut a = empty();
    loop {
        let mut next = empty();
        for r in 0..=order {
            for k in 0..=order - r {
                let mut c = BigInt::zero();
                if r == 1 && k == 0 {
                    c += 1;
                }
                if r >= 1 {
                    c += &a[r - 1][k];
                }
                if k >= 1 {
                    c += &a[r][k - 1];
                    // p A²
                    for r1 in 0..=r {
                        for k1 in 0..=k - 1 {
                            c += &a[r1][k1] * &a[r - r1][k - 1 - k1];
                        }
                    }
                }
                next[r][k] = c;
            }
        }
        if next == a {
            return a;
        }
        a = next;
    }
}
