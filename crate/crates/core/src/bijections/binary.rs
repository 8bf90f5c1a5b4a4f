use std::fmt;

use crate::monomial::check_label;
use crate::{Error, Label, Monomial, Result};

/// A rooted binary tree whose right edges carry labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryTree {
    pub left: Option<Box<BinaryTree>>,
    pub right: Option<(Label, Box<BinaryTree>)>,
}

impl BinaryTree {
    pub fn leaf() -> Self {
        BinaryTree {
            left: None,
            right: None,
        }
    }

    pub fn vertices(&self) -> usize {
        1 + self.left.as_ref().map_or(0, |t| t.vertices())
            + self.right.as_ref().map_or(0, |(_, t)| t.vertices())
    }

    /// Parses the [`fmt::Display`] form; `.` is the empty tree.
    pub fn parse(text: &str) -> Result<Option<Self>> {
        let compact: Vec<u8> = text.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut pos = 0;
        let t = parse_opt(&compact, &mut pos)?;
        if pos != compact.len() {
            return Err(Error::Parse {
                pos,
                msg: "trailing input".into(),
            });
        }
        Ok(t)
    }
}

impl fmt::Display for BinaryTree {
    /// `(L,R)` with `L` a subtree or `.`, and `R` either `i:subtree` or `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        match &self.left {
            Some(t) => write!(f, "{t}")?,
            None => f.write_str(".")?,
        }
        f.write_str(",")?;
        match &self.right {
            Some((i, t)) => write!(f, "{i}:{t}")?,
            None => f.write_str(".")?,
        }
        f.write_str(")")
    }
}

fn parse_opt(s: &[u8], pos: &mut usize) -> Result<Option<BinaryTree>> {
    match s.get(*pos) {
        Some(b'.') => {
            *pos += 1;
            Ok(None)
        }
        Some(b'(') => {
            *pos += 1;
            let left = parse_opt(s, pos)?.map(Box::new);
            expect(s, pos, b',')?;
            let right = if s.get(*pos) == Some(&b'.') {
                *pos += 1;
                None
            } else {
                let start = *pos;
                while s.get(*pos).is_some_and(u8::is_ascii_digit) {
                    *pos += 1;
                }
                let label: Label = std::str::from_utf8(&s[start..*pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| Error::Parse {
                        pos: start,
                        msg: "expected a label".into(),
                    })?;
                expect(s, pos, b':')?;
                let sub = parse_opt(s, pos)?.ok_or(Error::Parse {
                    pos: *pos,
                    msg: "labeled edge needs a subtree".into(),
                })?;
                Some((label, Box::new(sub)))
            };
            expect(s, pos, b')')?;
            Ok(Some(BinaryTree { left, right }))
        }
        _ => Err(Error::Parse {
            pos: *pos,
            msg: "expected '(' or '.'".into(),
        }),
    }
}

fn expect(s: &[u8], pos: &mut usize, c: u8) -> Result<()> {
    if s.get(*pos) == Some(&c) {
        *pos += 1;
        Ok(())
    } else {
        Err(Error::Parse {
            pos: *pos,
            msg: format!("expected {:?}", c as char),
        })
    }
}

/// The tree of a monomial given as its atom list; the empty list maps to the empty tree.
///
/// The last atom sits at the root: `*` leaves the right side empty, `Pi(v)`
/// hangs the tree of `v` from a right edge labeled `i`. The remaining atoms
/// form the left subtree.
pub fn to_binary_tree(atoms: &[Monomial]) -> Option<BinaryTree> {
    let (last, rest) = atoms.split_last()?;
    let right = match last {
        Monomial::Star => None,
        Monomial::Unary(i, child) => Some((
            *i,
            Box::new(to_binary_tree(child.atoms()).expect("nonempty child")),
        )),
        Monomial::Product(_) => panic!("atom list contains a product"),
    };
    Some(BinaryTree {
        left: to_binary_tree(rest).map(Box::new),
        right,
    })
}

/// Inverse of [`to_binary_tree`]: `f(T) = f(T_L) *` or `f(T_L) Pi(f(T_R))`.
pub fn from_binary_tree(t: Option<&BinaryTree>, d: usize) -> Result<Vec<Monomial>> {
    let Some(t) = t else { return Ok(Vec::new()) };
    let mut atoms = from_binary_tree(t.left.as_deref(), d)?;
    atoms.push(match &t.right {
        None => Monomial::Star,
        Some((i, sub)) => {
            check_label(*i, d)?;
            Monomial::unary(*i, Monomial::product(from_binary_tree(Some(sub), d)?))
        }
    });
    Ok(atoms)
}

/// True when, at every vertex without a left child that is entered by a
/// right edge labeled `i` and leaves by a right edge labeled `j`, `i <= j`.
pub fn right_chain_monotone(t: &BinaryTree) -> bool {
    fn go(t: &BinaryTree, incoming: Option<Label>) -> bool {
        if let (Some(i), None, Some((j, _))) = (incoming, &t.left, &t.right) {
            if i > *j {
                return false;
            }
        }
        t.left.as_ref().is_none_or(|l| go(l, None))
            && t.right.as_ref().is_none_or(|(j, r)| go(r, Some(*j)))
    }
    go(t, None)
}

/// All binary trees with `n` vertices and right-edge labels in `1..=d`.
pub fn binary_trees(d: usize, n: usize) -> Vec<BinaryTree> {
    fn sized(
        d: usize,
        n: usize,
        memo: &mut Vec<Option<Vec<Option<BinaryTree>>>>,
    ) -> Vec<Option<BinaryTree>> {
        if let Some(v) = &memo[n] {
            return v.clone();
        }
        let mut out = Vec::new();
        if n == 0 {
            out.push(None);
        } else {
            for nl in 0..n {
                let lefts = sized(d, nl, memo);
                let rights = sized(d, n - 1 - nl, memo);
                for l in &lefts {
                    for r in &rights {
                        let left = l.clone().map(Box::new);
                        match r {
                            None => out.push(Some(BinaryTree { left, right: None })),
                            Some(r) => {
                                for i in 1..=d as Label {
                                    out.push(Some(BinaryTree {
                                        left: left.clone(),
                                        right: Some((i, Box::new(r.clone()))),
                                    }));
                                }
                            }
                        }
                    }
                }
            }
        }
        memo[n] = Some(out.clone());
        out
    }
    sized(d, n, &mut vec![None; n + 1])
        .into_iter()
        .flatten()
        .collect()
}
