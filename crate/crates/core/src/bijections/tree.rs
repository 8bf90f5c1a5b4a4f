use std::fmt;

use crate::{Error, Label, Monomial, Result};

/// A rooted ordered tree: leaves, labeled unary nodes, and unlabeled
/// branching nodes with at least two children.
///
/// A branching node never has a branching child; nesting two of them would
/// give a second tree for the same flattened product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderedTree {
    Leaf,
    Unary(Label, Box<OrderedTree>),
    Branch(Vec<OrderedTree>),
}

impl OrderedTree {
    pub fn leaves(&self) -> u32 {
        match self {
            OrderedTree::Leaf => 1,
            OrderedTree::Unary(_, c) => c.leaves(),
            OrderedTree::Branch(cs) => cs.iter().map(OrderedTree::leaves).sum(),
        }
    }

    /// Number of unary nodes carrying each label in `1..=d`.
    pub fn label_counts(&self, d: usize) -> Vec<u32> {
        fn go(t: &OrderedTree, out: &mut [u32]) {
            match t {
                OrderedTree::Leaf => {}
                OrderedTree::Unary(i, c) => {
                    if let Some(slot) = out.get_mut(*i as usize - 1) {
                        *slot += 1;
                    }
                    go(c, out);
                }
                OrderedTree::Branch(cs) => cs.iter().for_each(|c| go(c, out)),
            }
        }
        let mut out = vec![0; d];
        go(self, &mut out);
        out
    }

    /// Checks the arity rules and that labels are positive.
    pub fn validate(&self) -> Result<()> {
        match self {
            OrderedTree::Leaf => Ok(()),
            OrderedTree::Unary(0, _) => Err(Error::InvalidTree("unary label 0".into())),
            OrderedTree::Unary(_, c) => c.validate(),
            OrderedTree::Branch(cs) => {
                if cs.len() < 2 {
                    return Err(Error::InvalidTree(
                        "branching node with fewer than two children".into(),
                    ));
                }
                if cs.iter().any(|c| matches!(c, OrderedTree::Branch(_))) {
                    return Err(Error::InvalidTree(
                        "branching node directly below a branching node".into(),
                    ));
                }
                cs.iter().try_for_each(OrderedTree::validate)
            }
        }
    }

    /// True when every maximal chain of unary nodes has weakly increasing
    /// labels from the top down.
    pub fn unary_chains_increasing(&self) -> bool {
        match self {
            OrderedTree::Leaf => true,
            OrderedTree::Unary(i, c) => {
                if let OrderedTree::Unary(j, _) = c.as_ref() {
                    if j < i {
                        return false;
                    }
                }
                c.unary_chains_increasing()
            }
            OrderedTree::Branch(cs) => cs.iter().all(OrderedTree::unary_chains_increasing),
        }
    }
}

impl fmt::Display for OrderedTree {
    /// `o` for a leaf, `i[t]` for a unary node, `[t1 t2 ...]` for a branching node.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderedTree::Leaf => f.write_str("o"),
            OrderedTree::Unary(i, c) => write!(f, "{i}[{c}]"),
            OrderedTree::Branch(cs) => {
                f.write_str("[")?;
                for (k, c) in cs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    }
}

pub fn to_ordered_tree(m: &Monomial) -> OrderedTree {
    match m {
        Monomial::Star => OrderedTree::Leaf,
        Monomial::Unary(i, c) => OrderedTree::Unary(*i, Box::new(to_ordered_tree(c))),
        Monomial::Product(fs) => OrderedTree::Branch(fs.iter().map(to_ordered_tree).collect()),
    }
}

pub fn from_ordered_tree(t: &OrderedTree) -> Result<Monomial> {
    t.validate()?;
    Ok(build(t))
}

fn build(t: &OrderedTree) -> Monomial {
    match t {
        OrderedTree::Leaf => Monomial::Star,
        OrderedTree::Unary(i, c) => Monomial::unary(*i, build(c)),
        OrderedTree::Branch(cs) => Monomial::Product(cs.iter().map(build).collect()),
    }
}

/// All valid trees with `size` nodes that are leaves or unary, labels in `1..=d`.
///
/// Built directly from the arity rules; `size` is `r + |s|` of the matching monomials.
pub fn ordered_trees(d: usize, size: usize) -> Vec<OrderedTree> {
    let mut memo = vec![None; size + 1];
    let mut out = atoms(d, size, &mut memo);
    if size >= 2 {
        for parts in ordered_partitions(size) {
            if parts.len() < 2 {
                continue;
            }
            let choices: Vec<Vec<OrderedTree>> =
                parts.iter().map(|&p| atoms(d, p, &mut memo)).collect();
            for combo in cartesian(&choices) {
                out.push(OrderedTree::Branch(combo));
            }
        }
    }
    out
}

/// Trees rooted at a leaf or unary node.
fn atoms(d: usize, size: usize, memo: &mut [Option<Vec<OrderedTree>>]) -> Vec<OrderedTree> {
    if let Some(v) = &memo[size] {
        return v.clone();
    }
    let mut out = Vec::new();
    if size == 1 {
        out.push(OrderedTree::Leaf);
    } else if size > 1 {
        for child in ordered_trees(d, size - 1) {
            for i in 1..=d as Label {
                out.push(OrderedTree::Unary(i, Box::new(child.clone())));
            }
        }
    }
    memo[size] = Some(out.clone());
    out
}

fn ordered_partitions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in ordered_partitions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn cartesian(choices: &[Vec<OrderedTree>]) -> Vec<Vec<OrderedTree>> {
    let mut acc: Vec<Vec<OrderedTree>> = vec![Vec::new()];
    for options in choices {
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for prefix in &acc {
            for o in options {
                let mut v = prefix.clone();
                v.push(o.clone());
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_free;
    use crate::enumerate::{enumerate, EnumerationRequest};
    use crate::Regime;
    use std::collections::BTreeSet;

    #[test]
    fn star_is_a_leaf() {
        assert_eq!(to_ordered_tree(&Monomial::Star), OrderedTree::Leaf);
        assert_eq!(
            from_ordered_tree(&OrderedTree::Leaf).unwrap(),
            Monomial::Star
        );
    }

    #[test]
    fn quartet_trees_are_distinct() {
        let ms = enumerate(&EnumerationRequest::new(Regime::Free, 2, vec![2, 1])).unwrap();
        let trees: BTreeSet<OrderedTree> = ms.iter().map(to_ordered_tree).collect();
        assert_eq!(trees.len(), 30);
        for t in &trees {
            assert_eq!(t.leaves(), 2);
            assert_eq!(t.label_counts(2), vec![2, 1]);
        }
    }

    #[test]
    fn arity_violations_rejected() {
        let lone = OrderedTree::Branch(vec![OrderedTree::Leaf]);
        assert!(from_ordered_tree(&lone).is_err());
        let nested = OrderedTree::Branch(vec![
            OrderedTree::Leaf,
            OrderedTree::Branch(vec![OrderedTree::Leaf, OrderedTree::Leaf]),
        ]);
        assert!(from_ordered_tree(&nested).is_err());
    }

    #[test]
    fn generator_matches_free_counts() {
        for d in 1..=2usize {
            for size in 1..=5usize {
                let trees = ordered_trees(d, size);
                let expected: usize = (1..=size as u32)
                    .map(|r| {
                        crate::counting::compositions(size as u32 - r, d)
                            .iter()
                            .map(|s| usize::try_from(count_free(r, s)).unwrap())
                            .sum::<usize>()
                    })
                    .sum();
                assert_eq!(trees.len(), expected, "d={d} size={size}");
                for t in trees {
                    assert_eq!(to_ordered_tree(&from_ordered_tree(&t).unwrap()), t);
                }
            }
        }
    }

    #[test]
    fn commuting_canonical_forms_have_increasing_chains() {
        let ms = enumerate(&EnumerationRequest::new(Regime::CommUnary, 2, vec![2, 1])).unwrap();
        assert!(ms
            .iter()
            .all(|m| to_ordered_tree(m).unary_chains_increasing()));
        let bad = to_ordered_tree(&"P2(P1(**))".parse().unwrap());
        assert!(!bad.unary_chains_increasing());
    }
}
