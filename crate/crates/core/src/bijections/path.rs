use std::fmt;

use crate::monomial::check_label;
use crate::{decode_word, encode_word, Error, Label, Monomial, Result, Token};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up(Label),
    Down,
    /// A horizontal step of the given span.
    Horiz(u32),
}

impl Step {
    pub fn span(self) -> u64 {
        match self {
            Step::Up(_) | Step::Down => 1,
            Step::Horiz(w) => w as u64,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Up(i) => write!(f, "U{i}"),
            Step::Down => f.write_str("D"),
            Step::Horiz(_) => f.write_str("H"),
        }
    }
}

/// A lattice path from the origin back to the x-axis over labeled up-steps,
/// down-steps, and horizontal steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    /// Wraps `steps` after checking the path invariants.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let p = LatticePath { steps };
        p.validate()?;
        Ok(p)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Total horizontal extent.
    pub fn span(&self) -> u64 {
        self.steps.iter().map(|s| s.span()).sum()
    }

    fn validate(&self) -> Result<()> {
        if self.steps.is_empty() {
            return Err(Error::InvalidPath("empty path".into()));
        }
        let mut height = 0i64;
        for (k, step) in self.steps.iter().enumerate() {
            match step {
                Step::Up(0) => return Err(Error::InvalidPath(format!("label 0 at step {k}"))),
                Step::Up(_) => height += 1,
                Step::Down => height -= 1,
                Step::Horiz(0) => return Err(Error::InvalidPath(format!("zero-span step {k}"))),
                Step::Horiz(_) => {}
            }
            if height < 0 {
                return Err(Error::InvalidPath(format!("below the axis after step {k}")));
            }
            if k > 0 && *step == Step::Down && matches!(self.steps[k - 1], Step::Up(_)) {
                return Err(Error::InvalidPath(format!("peak at step {k}")));
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath(format!("ends at height {height}")));
        }
        Ok(())
    }

    /// Parses `U1 U2 H D D`, giving every `H` the span `ell`.
    pub fn parse(text: &str, ell: u32) -> Result<Self> {
        let mut steps = Vec::new();
        let mut pos = 0;
        for word in text.split_whitespace() {
            let step = match word {
                "D" => Step::Down,
                "H" => Step::Horiz(ell),
                _ => match word.strip_prefix('U').and_then(|l| l.parse().ok()) {
                    Some(label) => Step::Up(label),
                    None => {
                        return Err(Error::Parse {
                            pos,
                            msg: format!("unknown step {word:?}"),
                        })
                    }
                },
            };
            steps.push(step);
            pos += word.len() + 1;
        }
        Self::new(steps)
    }

    /// Index of the down-step matching each up-step, `None` at other positions.
    fn matches(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.steps.len()];
        let mut stack = Vec::new();
        for (k, step) in self.steps.iter().enumerate() {
            match step {
                Step::Up(_) => stack.push(k),
                Step::Down => {
                    let up = stack.pop().expect("validated path");
                    out[up] = Some(k);
                }
                Step::Horiz(_) => {}
            }
        }
        out
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.steps.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Opening delimiters become labeled up-steps, closing ones down-steps, and
/// each `*` a horizontal step of span `ell`.
pub fn to_path(m: &Monomial, ell: u32) -> LatticePath {
    let steps = encode_word(m)
        .into_iter()
        .map(|t| match t {
            Token::Star => Step::Horiz(ell),
            Token::Open(i) => Step::Up(i),
            Token::Close(_) => Step::Down,
        })
        .collect();
    LatticePath { steps }
}

pub fn from_path(p: &LatticePath, d: usize) -> Result<Monomial> {
    p.validate()?;
    let mut open = Vec::new();
    let mut tokens = Vec::with_capacity(p.steps.len());
    for step in &p.steps {
        tokens.push(match *step {
            Step::Up(i) => {
                check_label(i, d)?;
                open.push(i);
                Token::Open(i)
            }
            Step::Down => Token::Close(open.pop().expect("validated path")),
            Step::Horiz(_) => Token::Star,
        });
    }
    decode_word(&tokens, d)
}

/// Whether the maximal ascent starting at `start` is matched: the down-steps
/// matching its up-steps all fall in one maximal descent.
///
/// # Panics
///
/// Panics unless `start` begins a maximal run of up-steps.
pub fn is_matched_ascent(p: &LatticePath, start: usize) -> bool {
    let steps = &p.steps;
    assert!(matches!(steps[start], Step::Up(_)));
    assert!(start == 0 || !matches!(steps[start - 1], Step::Up(_)));
    let end = (start..steps.len())
        .find(|&k| !matches!(steps[k], Step::Up(_)))
        .unwrap_or(steps.len());
    let matches = p.matches();
    // The run's matches are consecutive positions in reverse order; they share a
    // descent exactly when the steps between them are all down-steps.
    let first = matches[end - 1].unwrap();
    let last = matches[start].unwrap();
    last - first == end - 1 - start
}

/// The label condition for commuting operators: whenever two adjacent
/// up-steps have adjacent matching down-steps, the first label is at most
/// the second.
///
/// Adjacent matches mark a directly nested pair of operators, the only place
/// where the commutation relation acts, so this condition singles out one
/// path per equivalence class. It is imposed on each such pair, including
/// pairs inside an ascent that is not matched as a whole.
pub fn matched_ascent_monotone(p: &LatticePath) -> bool {
    let matches = p.matches();
    p.steps
        .windows(2)
        .enumerate()
        .all(|(k, w)| match (w[0], w[1]) {
            (Step::Up(a), Step::Up(b)) => matches[k] != matches[k + 1].map(|m| m + 1) || a <= b,
            _ => true,
        })
}

/// All peakless paths of total span `n` with labels in `1..=d` and horizontal span `ell`.
///
/// Generated step by step from the path rules alone.
pub fn peakless_paths(d: usize, ell: u32, n: u64) -> Vec<LatticePath> {
    fn go(
        d: usize,
        ell: u32,
        remaining: u64,
        height: u64,
        steps: &mut Vec<Step>,
        out: &mut Vec<LatticePath>,
    ) {
        if remaining == 0 {
            if height == 0 && !steps.is_empty() {
                out.push(LatticePath {
                    steps: steps.clone(),
                });
            }
            return;
        }
        if height > remaining {
            return;
        }
        let after_up = matches!(steps.last(), Some(Step::Up(_)));
        if height > 0 && !after_up {
            steps.push(Step::Down);
            go(d, ell, remaining - 1, height - 1, steps, out);
            steps.pop();
        }
        if ell as u64 <= remaining {
            steps.push(Step::Horiz(ell));
            go(d, ell, remaining - ell as u64, height, steps, out);
            steps.pop();
        }
        // an up-step needs a horizontal step and a down-step after it
        if height + 2 + ell as u64 <= remaining {
            for i in 1..=d as Label {
                steps.push(Step::Up(i));
                go(d, ell, remaining - 1, height + 1, steps, out);
                steps.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d, ell, n, 0, &mut Vec::new(), &mut out);
    out
}
