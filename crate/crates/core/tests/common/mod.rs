#![allow(dead_code)]

use opmono::counting::compositions;
use opmono::Monomial;
use proptest::prelude::*;

/// Random monomials with labels in `1..=d`.
pub fn monomial(d: u32) -> impl Strategy<Value = Monomial> {
    Just(Monomial::Star).prop_recursive(5, 32, 4, move |inner| {
        prop_oneof![
            (1..=d, inner.clone()).prop_map(|(i, m)| Monomial::unary(i, m)),
            prop::collection::vec(inner, 2..4).prop_map(Monomial::product),
        ]
    })
}

/// Every `(r, s)` with `r >= 1`, `s` of length `d`, and `r + |s| <= size`.
pub fn grades(d: usize, size: u32) -> Vec<(u32, Vec<u32>)> {
    let mut out = Vec::new();
    for r in 1..=size {
        for k in 0..=size - r {
            for s in compositions(k, d) {
                out.push((r, s));
            }
        }
    }
    out
}

/// All monomials obtained from `m` by exchanging one directly nested pair
/// `Pi(Pj(v)) -> Pj(Pi(v))`.
pub fn unary_swaps(m: &Monomial) -> Vec<Monomial> {
    let mut out = Vec::new();
    match m {
        Monomial::Star => {}
        Monomial::Unary(i, child) => {
            if let Monomial::Unary(j, inner) = child.as_ref() {
                out.push(Monomial::unary(
                    *j,
                    Monomial::unary(*i, inner.as_ref().clone()),
                ));
            }
            for c in unary_swaps(child) {
                out.push(Monomial::unary(*i, c));
            }
        }
        Monomial::Product(fs) => {
            for (k, f) in fs.iter().enumerate() {
                for g in unary_swaps(f) {
                    let mut v = fs.clone();
                    v[k] = g;
                    out.push(Monomial::Product(v));
                }
            }
        }
    }
    out
}

/// All monomials obtained from `m` by exchanging two adjacent factors of one product.
pub fn factor_swaps(m: &Monomial) -> Vec<Monomial> {
    let mut out = Vec::new();
    match m {
        Monomial::Star => {}
        Monomial::Unary(i, child) => {
            for c in factor_swaps(child) {
                out.push(Monomial::unary(*i, c));
            }
        }
        Monomial::Product(fs) => {
            for k in 0..fs.len() - 1 {
                let mut v = fs.clone();
                v.swap(k, k + 1);
                out.push(Monomial::Product(v));
            }
            for (k, f) in fs.iter().enumerate() {
                for g in factor_swaps(f) {
                    let mut v = fs.clone();
                    v[k] = g;
                    out.push(Monomial::Product(v));
                }
            }
        }
    }
    out
}
