//! Exhaustive generation of canonical monomials: the ground truth every
//! counting formula is checked against.
//!
//! A monomial is a sequence of atoms (noncommutative product) or a
//! nondecreasing list of atoms (commutative product). An atom is `*` or a
//! unary application; with commuting operators, `Pi(Pj(v))` is only
//! generated when `i <= j`, which leaves exactly one weakly increasing chain
//! over each non-unary root.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use num_bigint::BigUint;

use crate::counting::{compositions, count_free};
use crate::{Error, Monomial, Regime, Result};

/// Default refusal threshold for [`enumerate`].
pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationRequest {
    pub regime: Regime,
    pub r: u32,
    /// Multiplicity vector; its length is the number of operators `d`.
    pub s: Vec<u32>,
}

impl EnumerationRequest {
    pub fn new(regime: Regime, r: u32, s: Vec<u32>) -> Self {
        EnumerationRequest { regime, r, s }
    }
}

/// All canonical monomials of degree `r` and multiplicity `s`, with the default cap.
pub fn enumerate(req: &EnumerationRequest) -> Result<BTreeSet<Monomial>> {
    enumerate_with_cap(req, DEFAULT_CAP)
}

/// As [`enumerate`], refusing requests whose output could exceed `cap`.
///
/// The free count bounds every regime's count, so it serves as the prediction.
pub fn enumerate_with_cap(req: &EnumerationRequest, cap: u64) -> Result<BTreeSet<Monomial>> {
    let predicted = count_free(req.r, &req.s);
    if predicted > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            predicted: predicted.to_string(),
            cap,
        });
    }
    if req.r == 0 {
        return Ok(BTreeSet::new());
    }
    let mut gen = Generator::new(req.regime);
    let list = gen.monomials(&Grade {
        r: req.r,
        s: req.s.clone(),
    });
    let set: BTreeSet<Monomial> = list.iter().cloned().collect();
    debug_assert_eq!(set.len(), list.len(), "generator produced duplicates");
    Ok(set)
}

/// Sum of enumeration sizes over all `(r, s)` with `ell r + 2|s| = n`.
pub fn count_by_length(d: usize, ell: u32, n: u32, regime: Regime) -> Result<usize> {
    let mut gen = Generator::new(regime);
    let mut total = 0;
    let mut r = 1;
    while ell * r <= n {
        let rest = n - ell * r;
        if rest.is_multiple_of(2) {
            for s in compositions(rest / 2, d) {
                let grade = Grade { r, s };
                let predicted = count_free(grade.r, &grade.s);
                if predicted > BigUint::from(DEFAULT_CAP) {
                    return Err(Error::CapExceeded {
                        predicted: predicted.to_string(),
                        cap: DEFAULT_CAP,
                    });
                }
                total += gen.monomials(&grade).len();
            }
        }
        r += 1;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Grade {
    r: u32,
    s: Vec<u32>,
}

impl Grade {
    fn minus(&self, other: &Grade) -> Grade {
        Grade {
            r: self.r - other.r,
            s: self.s.iter().zip(&other.s).map(|(a, b)| a - b).collect(),
        }
    }

    /// Nonzero-degree subgrades `g <= self`, including `self`.
    fn subgrades(&self) -> Vec<Grade> {
        let vectors = crate::counting::box_vectors(&self.s);
        (1..=self.r)
            .flat_map(|r| vectors.iter().map(move |s| Grade { r, s: s.clone() }))
            .collect()
    }
}

/// Memo tables confined to one enumeration call.
struct Generator {
    regime: Regime,
    atoms: HashMap<Grade, Rc<Vec<Monomial>>>,
    monomials: HashMap<Grade, Rc<Vec<Monomial>>>,
}

impl Generator {
    fn new(regime: Regime) -> Self {
        Generator {
            regime,
            atoms: HashMap::new(),
            monomials: HashMap::new(),
        }
    }

    fn atoms(&mut self, g: &Grade) -> Rc<Vec<Monomial>> {
        if let Some(v) = self.atoms.get(g) {
            return v.clone();
        }
        let mut out = Vec::new();
        if g.r == 1 && g.s.iter().all(|&x| x == 0) {
            out.push(Monomial::Star);
        }
        for i in 0..g.s.len() {
            if g.s[i] == 0 {
                continue;
            }
            let label = i as u32 + 1;
            let mut inner = g.clone();
            inner.s[i] -= 1;
            for m in self.monomials(&inner).iter() {
                if self.regime.commuting_unary() {
                    if let Monomial::Unary(j, _) = m {
                        if *j < label {
                            continue;
                        }
                    }
                }
                out.push(Monomial::unary(label, m.clone()));
            }
        }
        let out = Rc::new(out);
        self.atoms.insert(g.clone(), out.clone());
        out
    }

    fn monomials(&mut self, g: &Grade) -> Rc<Vec<Monomial>> {
        if let Some(v) = self.monomials.get(g) {
            return v.clone();
        }
        let out = if self.regime.commutative_product() {
            let mut out = Vec::new();
            self.multisets(g, None, &mut Vec::new(), &mut out);
            out
        } else {
            self.sequences(g)
        };
        let out = Rc::new(out);
        self.monomials.insert(g.clone(), out.clone());
        out
    }

    /// First atom, then any monomial for the remainder.
    fn sequences(&mut self, g: &Grade) -> Vec<Monomial> {
        let mut out = Vec::new();
        for first in g.subgrades() {
            let atoms = self.atoms(&first);
            if atoms.is_empty() {
                continue;
            }
            if first == *g {
                out.extend(atoms.iter().cloned());
                continue;
            }
            let rest = self.monomials(&g.minus(&first));
            for a in atoms.iter() {
                for m in rest.iter() {
                    let mut factors = vec![a.clone()];
                    factors.extend(m.atoms().iter().cloned());
                    out.push(Monomial::Product(factors));
                }
            }
        }
        out
    }

    /// Nondecreasing atom lists, each atom at least `lower`.
    fn multisets(
        &mut self,
        g: &Grade,
        lower: Option<&Monomial>,
        acc: &mut Vec<Monomial>,
        out: &mut Vec<Monomial>,
    ) {
        if g.r == 0 {
            if g.s.iter().all(|&x| x == 0) && !acc.is_empty() {
                out.push(Monomial::product(acc.iter().cloned()));
            }
            return;
        }
        for first in g.subgrades() {
            let atoms = self.atoms(&first);
            let rest = g.minus(&first);
            for a in atoms.iter() {
                if lower.is_some_and(|lo| a < lo) {
                    continue;
                }
                acc.push(a.clone());
                self.multisets(&rest, Some(a), acc, out);
                acc.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonicalize;

    fn req(regime: Regime, r: u32, s: &[u32]) -> EnumerationRequest {
        EnumerationRequest::new(regime, r, s.to_vec())
    }

    #[test]
    fn quartet_sizes() {
        let sizes: Vec<usize> = Regime::ALL
            .iter()
            .map(|&reg| enumerate(&req(reg, 2, &[2, 1])).unwrap().len())
            .collect();
        assert_eq!(sizes, vec![30, 18, 17, 10]);
    }

    #[test]
    fn one_operator_degree_two() {
        let got: Vec<String> = enumerate(&req(Regime::Free, 2, &[1]))
            .unwrap()
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(got, vec!["P1(**)", "*P1(*)", "P1(*)*"]);
    }

    #[test]
    fn outputs_are_canonical_fixed_points() {
        for regime in Regime::ALL {
            for m in enumerate(&req(regime, 3, &[1, 2])).unwrap() {
                assert_eq!(canonicalize(&m, regime), m);
                assert!(m.is_well_formed());
                assert_eq!(m.degree(), 3);
                assert_eq!(m.multiplicity(2).unwrap(), vec![1, 2]);
            }
        }
    }

    #[test]
    fn length_graded_examples() {
        assert_eq!(count_by_length(2, 3, 10, Regime::CommUnary).unwrap(), 21);
        assert_eq!(count_by_length(3, 2, 6, Regime::CommUnary).unwrap(), 16);
        for regime in Regime::ALL {
            assert_eq!(count_by_length(1, 2, 2, regime).unwrap(), 1);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_with_cap(&req(Regime::Free, 2, &[2, 1]), 29).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                predicted: "30".into(),
                cap: 29
            }
        );
        assert!(enumerate_with_cap(&req(Regime::Free, 2, &[2, 1]), 30).is_ok());
        assert!(enumerate(&req(Regime::Free, 0, &[1])).unwrap().is_empty());
    }
}
