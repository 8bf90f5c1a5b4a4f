use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::count_free;
use crate::Regime;

/// Dense table of `a(r; s)` for `0 <= r <= r_max`, `0 <= s <= s_max`
/// coordinatewise, together with the atom counts `ā(r; s)`.
///
/// Every recurrence here only looks at cells with smaller `r`, or equal `r`
/// and coordinatewise-smaller `s`, so one pass over the box in row-major
/// order fills it.
#[derive(Clone, Debug)]
pub struct MultigradedTable {
    regime: Regime,
    r_max: u32,
    s_max: Vec<u32>,
    strides: Vec<usize>,
    row_len: usize,
    counts: Vec<BigUint>,
    atoms: Vec<BigUint>,
}

impl MultigradedTable {
    /// Fills the box bounded by `(r_max, s_max)`; `d = s_max.len()`.
    pub fn compute(regime: Regime, r_max: u32, s_max: &[u32]) -> Self {
        let d = s_max.len();
        let mut strides = vec![1usize; d];
        for i in (0..d.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (s_max[i + 1] as usize + 1);
        }
        let row_len = s_max.iter().map(|&x| x as usize + 1).product::<usize>();
        let cells = row_len * (r_max as usize + 1);
        let mut table = MultigradedTable {
            regime,
            r_max,
            s_max: s_max.to_vec(),
            strides,
            row_len,
            counts: vec![BigUint::zero(); cells],
            atoms: vec![BigUint::zero(); cells],
        };
        let filler = Filler::new(&table);
        match regime {
            Regime::Free => filler.fill_free(&mut table),
            Regime::CommUnary => filler.fill_comm_unary(&mut table),
            Regime::CommMult | Regime::CommBoth => filler.fill_euler(&mut table),
        }
        table
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn d(&self) -> usize {
        self.s_max.len()
    }

    pub fn r_max(&self) -> u32 {
        self.r_max
    }

    pub fn s_max(&self) -> &[u32] {
        &self.s_max
    }

    fn index(&self, r: u32, s: &[u32]) -> Option<usize> {
        if r > self.r_max || s.len() != self.s_max.len() {
            return None;
        }
        let mut idx = r as usize * self.row_len;
        for ((&x, &bound), &stride) in s.iter().zip(&self.s_max).zip(&self.strides) {
            if x > bound {
                return None;
            }
            idx += x as usize * stride;
        }
        Some(idx)
    }

    /// `a(r; s)`, or `None` outside the computed box.
    pub fn try_get(&self, r: u32, s: &[u32]) -> Option<&BigUint> {
        self.index(r, s).map(|i| &self.counts[i])
    }

    /// `a(r; s)`.
    ///
    /// # Panics
    ///
    /// Panics when `(r, s)` lies outside the computed box.
    pub fn get(&self, r: u32, s: &[u32]) -> BigUint {
        self.try_get(r, s)
            .unwrap_or_else(|| panic!("({r}; {s:?}) outside the table box"))
            .clone()
    }

    /// Atom count `ā(r; s)`: canonical monomials that are `*` or a unary application.
    pub fn atom_count(&self, r: u32, s: &[u32]) -> Option<&BigUint> {
        self.index(r, s).map(|i| &self.atoms[i])
    }

    /// All entries with `r >= 1`, in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, Vec<u32>, &BigUint)> + '_ {
        let vectors = box_vectors(&self.s_max);
        (1..=self.r_max).flat_map(move |r| {
            let base = r as usize * self.row_len;
            vectors
                .clone()
                .into_iter()
                .enumerate()
                .map(move |(i, s)| (r, s, &self.counts[base + i]))
        })
    }
}

/// All vectors `0 <= s <= bound` in row-major order (last coordinate fastest).
pub(crate) fn box_vectors(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(bound.len())];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Index bookkeeping shared by the fill routines.
struct Filler {
    d: usize,
    row_len: usize,
    r_max: u32,
    vectors: Vec<Vec<u32>>,
    strides: Vec<usize>,
    /// For each `t`, the pairs `(idx(α), idx(t - α))` over `0 <= α <= t`.
    splits: Vec<Vec<(usize, usize)>>,
    /// Nonempty subsets `J` of `[d]` as (sign, offset of e_J, member mask).
    subsets: Vec<(bool, usize, u64)>,
}

impl Filler {
    fn new(table: &MultigradedTable) -> Self {
        let vectors = box_vectors(&table.s_max);
        let offset = |v: &[u32]| -> usize {
            v.iter()
                .zip(&table.strides)
                .map(|(&x, &st)| x as usize * st)
                .sum()
        };
        let splits = vectors
            .iter()
            .map(|t| {
                box_vectors(t)
                    .iter()
                    .map(|alpha| {
                        let rest: Vec<u32> = t.iter().zip(alpha).map(|(a, b)| a - b).collect();
                        (offset(alpha), offset(&rest))
                    })
                    .collect()
            })
            .collect();
        let d = table.s_max.len();
        assert!(d < 64, "at most 63 operators supported");
        let subsets = (1u64..(1u64 << d))
            .map(|mask| {
                let off = (0..d)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| table.strides[i])
                    .sum();
                (mask.count_ones() % 2 == 1, off, mask)
            })
            .collect();
        Filler {
            d,
            row_len: table.row_len,
            r_max: table.r_max,
            vectors,
            strides: table.strides.clone(),
            splits,
            subsets,
        }
    }

    fn cell(&self, r: u32, local: usize) -> usize {
        r as usize * self.row_len + local
    }

    /// `δ_{r,1} δ_{s,0} + Σ_i a(r; s - e_i)`: atoms for noncommuting operators.
    fn atom_free(&self, counts: &[BigUint], r: u32, local: usize) -> BigUint {
        let s = &self.vectors[local];
        let mut acc = if r == 1 && local == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
        for i in 0..self.d {
            if s[i] > 0 {
                acc += &counts[self.cell(r, local - self.strides[i])];
            }
        }
        acc
    }

    /// `Σ_{J ≠ ∅} (-1)^{|J|+1} f(s - e_J)`, skipping terms with a negative coordinate.
    fn inclusion_exclusion<F>(&self, local: usize, mut f: F) -> BigInt
    where
        F: FnMut(usize) -> BigInt,
    {
        let s = &self.vectors[local];
        let mut acc = BigInt::zero();
        for &(positive, off, mask) in &self.subsets {
            if (0..self.d).any(|i| mask >> i & 1 == 1 && s[i] == 0) {
                continue;
            }
            let term = f(local - off);
            if positive {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    /// `δ_{r,1} δ_{s,0} + Σ_J (-1)^{|J|+1} a(r; s - e_J)`: atoms for commuting operators.
    fn atom_commuting(&self, counts: &[BigUint], r: u32, local: usize) -> BigUint {
        let mut acc =
            self.inclusion_exclusion(local, |l| BigInt::from(counts[self.cell(r, l)].clone()));
        if r == 1 && local == 0 {
            acc += 1;
        }
        to_unsigned(acc, "atom count")
    }

    fn fill_free(&self, t: &mut MultigradedTable) {
        for r in 1..=self.r_max {
            for (local, s) in self.vectors.iter().enumerate() {
                let i = self.cell(r, local);
                t.counts[i] = count_free(r, s);
                t.atoms[i] = self.atom_free(&t.counts, r, local);
            }
        }
    }

    fn fill_comm_unary(&self, t: &mut MultigradedTable) {
        for r in 1..=self.r_max {
            // Σ_{i=1}^{r-1} Σ_{α<=u} a(i; α) a(r-i; u-α), the A² coefficient
            let square: Vec<BigInt> = (0..self.row_len)
                .map(|u| {
                    let mut acc = BigUint::zero();
                    for i in 1..r {
                        for &(a, b) in &self.splits[u] {
                            acc += &t.counts[self.cell(i, a)] * &t.counts[self.cell(r - i, b)];
                        }
                    }
                    BigInt::from(acc)
                })
                .collect();
            for local in 0..self.row_len {
                let i = self.cell(r, local);
                t.counts[i] = if r == 1 {
                    BigUint::one()
                } else {
                    let inner = self.inclusion_exclusion(local, |u| {
                        BigInt::from(t.counts[self.cell(r, u)].clone()) + &square[u]
                    });
                    to_unsigned(
                        BigInt::from(t.counts[self.cell(r - 1, local)].clone()) + inner,
                        "a^c",
                    )
                };
                t.atoms[i] = self.atom_commuting(&t.counts, r, local);
            }
        }
    }

    fn fill_euler(&self, t: &mut MultigradedTable) {
        let commuting = t.regime.commuting_unary();
        // c(j; α) = Σ_{k | gcd(j, α)} (j/k) ā(j/k; α/k)
        let mut conv = vec![BigUint::zero(); t.counts.len()];
        t.counts[0] = BigUint::one();
        for r in 1..=self.r_max {
            for local in 0..self.row_len {
                let i = self.cell(r, local);
                t.atoms[i] = if commuting {
                    self.atom_commuting(&t.counts, r, local)
                } else {
                    self.atom_free(&t.counts, r, local)
                };
                let s = &self.vectors[local];
                let g = s.iter().fold(r, |g, &x| g.gcd(&x));
                let mut c = BigUint::zero();
                for k in (1..=g).filter(|k| g % k == 0) {
                    let scaled: usize = s
                        .iter()
                        .zip(&self.strides)
                        .map(|(&x, &st)| (x / k) as usize * st)
                        .sum();
                    c += &t.atoms[self.cell(r / k, scaled)] * (r / k);
                }
                conv[i] = c;

                let mut total = BigUint::zero();
                for j in 1..=r {
                    for &(a, b) in &self.splits[local] {
                        let cj = &conv[self.cell(j, a)];
                        if !cj.is_zero() {
                            total += cj * &t.counts[self.cell(r - j, b)];
                        }
                    }
                }
                let (q, rem) = total.div_rem(&BigUint::from(r));
                assert!(
                    rem.is_zero(),
                    "Euler recurrence not divisible by r = {r} at s = {s:?} ({:?})",
                    t.regime
                );
                t.counts[i] = q;
            }
        }
    }
}

fn to_unsigned(x: BigInt, what: &str) -> BigUint {
    assert!(!x.is_negative(), "{what} came out negative: {x}");
    match x.into_parts() {
        (Sign::Minus, _) => unreachable!(),
        (_, mag) => mag,
    }
}
