//! Enumeration of operated monomials.
//!
//! A monomial here is built from a single indeterminate `*`, an associative
//! multiplication and unary operators `P1, ..., Pd`. The crate counts these
//! monomials by degree and operator multiplicity, and by bracketed-word
//! length, under four commutativity regimes:
//!
//! | [`Regime`]            | unary operators | multiplication |
//! |-----------------------|-----------------|----------------|
//! | [`Regime::Free`]      | noncommuting    | noncommutative |
//! | [`Regime::CommUnary`] | commuting       | noncommutative |
//! | [`Regime::CommMult`]  | noncommuting    | commutative    |
//! | [`Regime::CommBoth`]  | commuting       | commutative    |
//!
//! Every count is available through at least two independent routes: the
//! closed forms and recurrences in [`counting`], the power-series solvers in
//! [`series`], and the exhaustive generator in [`enumerate`]. The
//! [`bijections`] module realizes the tree and lattice-path models, and
//! [`asymptotics`] computes exponential growth rates.
//!
//! ```
//! use opmono::{counting, Regime};
//!
//! let s = [2, 1];
//! assert_eq!(counting::count(Regime::Free, 2, &s).to_string(), "30");
//! assert_eq!(counting::count(Regime::CommBoth, 2, &s).to_string(), "10");
//! ```

pub mod asymptotics;
pub mod bijections;
pub mod cli;
pub mod counting;
pub mod enumerate;
mod error;
pub mod monomial;
pub mod series;

pub use error::{Error, Result};
pub use monomial::{
    canonicalize, decode_word, encode_word, CanonicalKey, Label, Monomial, MultiDegree, Regime,
    Token,
};
