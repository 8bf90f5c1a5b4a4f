//! Exact counting by closed forms and recurrences, over arbitrary-precision
//! integers.
//!
//! Multigraded counts `a(r; s)` live in [`MultigradedTable`]; length-graded
//! counts `b(n)` in [`LengthSequence`]. The multiplicity vector `s` fixes the
//! number of operators: `d = s.len()`.

mod length;
mod multigraded;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use length::{
    free_length_by_narayana, free_length_by_recurrence, length_sequence, LengthSequence,
};
pub(crate) use multigraded::box_vectors;
pub use multigraded::MultigradedTable;

use crate::{Error, Regime, Result};

/// `C(n, k)` by the exact multiplicative formula.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by i + 1 at every step
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient `(s_1 + ... + s_d)! / (s_1! ... s_d!)`.
pub fn multinomial(s: &[u32]) -> BigUint {
    let mut total = 0u64;
    let mut acc = BigUint::one();
    for &x in s {
        total += x as u64;
        acc *= binomial(total, x as u64);
    }
    acc
}

/// Narayana number `N(n, k) = C(n, k) C(n, k + 1) / n`, for `0 <= k <= n - 1`.
pub fn narayana(n: u64, k: u64) -> Result<BigUint> {
    if n == 0 || k >= n {
        return Err(Error::NarayanaRange { n, k });
    }
    let num = binomial(n, k) * binomial(n, k + 1);
    let (q, r) = (&num / n, &num % n);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// `a_d(r; s) = multinomial(|s|; s) * N(r + |s|, |s|)`.
pub fn count_free(r: u32, s: &[u32]) -> BigUint {
    if r == 0 {
        return BigUint::zero();
    }
    let k: u64 = s.iter().map(|&x| x as u64).sum();
    multinomial(s) * narayana(r as u64 + k, k).expect("k < r + k when r >= 1")
}

/// Commuting unary operators, noncommutative product.
pub fn count_comm_unary(r: u32, s: &[u32]) -> BigUint {
    MultigradedTable::compute(Regime::CommUnary, r, s).get(r, s)
}

/// Noncommuting unary operators, commutative product.
pub fn count_comm_mult(r: u32, s: &[u32]) -> BigUint {
    MultigradedTable::compute(Regime::CommMult, r, s).get(r, s)
}

/// Both commutativity relations.
pub fn count_comm_both(r: u32, s: &[u32]) -> BigUint {
    MultigradedTable::compute(Regime::CommBoth, r, s).get(r, s)
}

/// Number of canonical monomials of degree `r` and multiplicity `s` in `regime`.
pub fn count(regime: Regime, r: u32, s: &[u32]) -> BigUint {
    match regime {
        Regime::Free => count_free(r, s),
        Regime::CommUnary => count_comm_unary(r, s),
        Regime::CommMult => count_comm_mult(r, s),
        Regime::CommBoth => count_comm_both(r, s),
    }
}

/// All vectors of `d` nonnegative integers summing to `k`, in lexicographic order.
pub fn compositions(k: u32, d: usize) -> Vec<Vec<u32>> {
    fn go(k: u32, d: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if d == 1 {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for x in 0..=k {
            prefix.push(x);
            go(k - x, d - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(k, d, &mut Vec::with_capacity(d), &mut out);
    out
}
