use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{binomial, narayana};
use crate::Regime;

/// `b(1), ..., b(n_max)` for one regime and length parameter `ell`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthSequence {
    pub regime: Regime,
    pub d: usize,
    pub ell: u32,
    /// `values[n] = b(n)`; `values[0]` is unused and zero.
    values: Vec<BigUint>,
}

impl LengthSequence {
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `b(n)`; zero for `n = 0`.
    ///
    /// # Panics
    ///
    /// Panics when `n > n_max`.
    pub fn get(&self, n: usize) -> &BigUint {
        &self.values[n]
    }

    /// `b(1), ..., b(n_max)`.
    pub fn values(&self) -> &[BigUint] {
        &self.values[1..]
    }

    /// The terms the tables list: `b(2), b(4), ...` for even `ell`, every
    /// `b(n)` for odd `ell`.
    pub fn tabulated(&self) -> Vec<BigUint> {
        if self.ell.is_multiple_of(2) {
            self.values.iter().skip(2).step_by(2).cloned().collect()
        } else {
            self.values().to_vec()
        }
    }
}

/// Length-graded counts `b(n) = Σ_{ell r + 2|s| = n} a(r; s)` for `1 <= n <= n_max`.
///
/// Free uses the Narayana sum, the commuting-unary case its quadratic
/// recurrence, and the two commutative-product regimes their Euler-type
/// recurrences (`n b(n)` convolution, divisibility asserted at every step).
pub fn length_sequence(regime: Regime, d: usize, ell: u32, n_max: usize) -> LengthSequence {
    assert!(ell >= 1, "ell must be positive");
    let values = match regime {
        Regime::Free => free_length_by_narayana(d, ell, n_max),
        Regime::CommUnary => comm_unary_length(d, ell, n_max),
        Regime::CommMult | Regime::CommBoth => euler_length(regime, d, ell, n_max),
    };
    LengthSequence {
        regime,
        d,
        ell,
        values,
    }
}

/// `b_{d,ell}(n) = Σ_k d^k N((n - 2k)/ell + k, k)` over `k` with `ell | n - 2k`.
///
/// Index 0 of the result is a zero placeholder.
pub fn free_length_by_narayana(d: usize, ell: u32, n_max: usize) -> Vec<BigUint> {
    let ell = ell as usize;
    let mut out = vec![BigUint::zero(); n_max + 1];
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        let mut acc = BigUint::zero();
        let mut k = 0;
        while ell + 2 * k <= n {
            if (n - 2 * k) % ell == 0 {
                let r = (n - 2 * k) / ell;
                let weight = BigUint::from(d).pow(k as u32);
                acc += weight * narayana((r + k) as u64, k as u64).expect("r >= 1");
            }
            k += 1;
        }
        *slot = acc;
    }
    out
}

/// Coefficients of `B = z^ell + z^ell B + d z² B + d z² B²`, read off term by term.
pub fn free_length_by_recurrence(d: usize, ell: u32, n_max: usize) -> Vec<BigUint> {
    let ell = ell as usize;
    let d = BigUint::from(d);
    let mut b = vec![BigUint::zero(); n_max + 1];
    for n in 1..=n_max {
        let mut acc = BigUint::zero();
        if n == ell {
            acc += 1u32;
        }
        if n > ell {
            acc += &b[n - ell];
        }
        if n > 2 {
            let mut inner = b[n - 2].clone();
            for k in 1..n - 2 {
                inner += &b[k] * &b[n - 2 - k];
            }
            acc += &d * inner;
        }
        b[n] = acc;
    }
    b
}

fn comm_unary_length(d: usize, ell: u32, n_max: usize) -> Vec<BigUint> {
    let ell = ell as usize;
    let mut b: Vec<BigInt> = vec![BigInt::zero(); n_max + 1];
    let weights: Vec<BigInt> = (0..=d)
        .map(|j| BigInt::from(binomial(d as u64, j as u64)))
        .collect();
    for n in 1..=n_max {
        if n < ell {
            continue;
        }
        if n == ell {
            b[n] = BigInt::one();
            continue;
        }
        let mut acc = b[n - ell].clone();
        for (j, weight) in weights.iter().enumerate().take(d.min(n / 2) + 1).skip(1) {
            let m = n - 2 * j;
            let mut inner = b[m].clone();
            for r in 1..m {
                inner += &b[r] * &b[m - r];
            }
            let term = weight * inner;
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        assert!(!acc.is_negative(), "b^c({n}) came out negative");
        b[n] = acc;
    }
    b.into_iter().map(|x| x.magnitude().clone()).collect()
}

fn euler_length(regime: Regime, d: usize, ell: u32, n_max: usize) -> Vec<BigUint> {
    let ell = ell as usize;
    let commuting = regime.commuting_unary();
    let weights: Vec<BigInt> = (0..=d)
        .map(|j| BigInt::from(binomial(d as u64, j as u64)))
        .collect();
    let mut b = vec![BigUint::zero(); n_max + 1];
    let mut atoms = vec![BigUint::zero(); n_max + 1];
    let mut conv = vec![BigUint::zero(); n_max + 1];
    for n in 1..=n_max {
        // b̄(n): length-n atoms
        let mut atom = BigInt::from(u32::from(n == ell));
        if commuting {
            for (j, weight) in weights.iter().enumerate().take(d.min(n / 2) + 1).skip(1) {
                let term = weight * BigInt::from(b[n - 2 * j].clone());
                if j % 2 == 1 {
                    atom += term;
                } else {
                    atom -= term;
                }
            }
        } else if n > 2 {
            atom += BigInt::from(d) * BigInt::from(b[n - 2].clone());
        }
        assert!(!atom.is_negative(), "atom count b̄({n}) came out negative");
        atoms[n] = atom.magnitude().clone();

        // c(n) = Σ_{k | n} k b̄(k)
        let mut c = BigUint::zero();
        for k in (1..=n).filter(|k| n % k == 0) {
            c += &atoms[k] * k;
        }
        conv[n] = c;

        let mut total = conv[n].clone();
        for k in 1..n {
            total += &conv[k] * &b[n - k];
        }
        let (q, rem) = total.div_rem(&BigUint::from(n));
        assert!(
            rem.is_zero(),
            "n b(n) convolution not divisible by n = {n} ({regime:?}, d = {d}, ell = {ell})"
        );
        b[n] = q;
    }
    b
}
