use crate::{decode_word, encode_word, Error, Monomial, Result, Token};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DyckStep {
    U,
    D,
}

pub fn format_dyck(path: &[DyckStep]) -> String {
    path.iter()
        .map(|s| if *s == DyckStep::U { 'U' } else { 'D' })
        .collect()
}

/// Rewrites a one-operator monomial as a Dyck path: each opening delimiter
/// becomes `U^ell`, each `*` becomes `UD`, each closing delimiter `D^ell`.
pub fn dyck_transform(m: &Monomial, ell: u32) -> Result<Vec<DyckStep>> {
    m.check_labels(1)?;
    let ell = ell as usize;
    let mut out = Vec::new();
    for t in encode_word(m) {
        match t {
            Token::Star => out.extend([DyckStep::U, DyckStep::D]),
            Token::Open(_) => out.extend(std::iter::repeat_n(DyckStep::U, ell)),
            Token::Close(_) => out.extend(std::iter::repeat_n(DyckStep::D, ell)),
        }
    }
    Ok(out)
}

/// Inverse of [`dyck_transform`].
///
/// Every peak is a `*`, so an ascent of length `a ell + 1` reads as `a`
/// opening delimiters followed by the up-step of a `*`, and a descent of
/// length `c ell + 1` as the down-step of that `*` followed by `c` closing
/// delimiters.
pub fn dyck_inverse(path: &[DyckStep], ell: u32) -> Result<Monomial> {
    if !is_dyck(path) {
        return Err(Error::InvalidDyck(format!(
            "{} is not a Dyck path",
            format_dyck(path)
        )));
    }
    if !has_congruent_runs(path, ell) {
        return Err(Error::InvalidDyck(format!(
            "run lengths of {} are not 1 mod {ell}",
            format_dyck(path)
        )));
    }
    let ell = ell as usize;
    let mut tokens = Vec::new();
    for (step, len) in runs(path) {
        let delimiters = (len - 1) / ell;
        match step {
            DyckStep::U => {
                tokens.extend(std::iter::repeat_n(Token::Open(1), delimiters));
                tokens.push(Token::Star);
            }
            DyckStep::D => tokens.extend(std::iter::repeat_n(Token::Close(1), delimiters)),
        }
    }
    decode_word(&tokens, 1).map_err(|e| Error::InvalidDyck(e.to_string()))
}

/// Whether every maximal ascent and descent has length `1 mod ell`.
pub fn has_congruent_runs(path: &[DyckStep], ell: u32) -> bool {
    runs(path).all(|(_, len)| (len - 1) % ell as usize == 0)
}

/// All Dyck paths of the given semilength, generated directly.
pub fn dyck_paths(semilength: usize) -> Vec<Vec<DyckStep>> {
    fn go(
        ups: usize,
        downs: usize,
        n: usize,
        acc: &mut Vec<DyckStep>,
        out: &mut Vec<Vec<DyckStep>>,
    ) {
        if downs == n {
            out.push(acc.clone());
            return;
        }
        if ups < n {
            acc.push(DyckStep::U);
            go(ups + 1, downs, n, acc, out);
            acc.pop();
        }
        if downs < ups {
            acc.push(DyckStep::D);
            go(ups, downs + 1, n, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(
        0,
        0,
        semilength,
        &mut Vec::with_capacity(2 * semilength),
        &mut out,
    );
    out
}

fn is_dyck(path: &[DyckStep]) -> bool {
    let mut h = 0i64;
    for s in path {
        h += if *s == DyckStep::U { 1 } else { -1 };
        if h < 0 {
            return false;
        }
    }
    h == 0 && !path.is_empty()
}

fn runs(path: &[DyckStep]) -> impl Iterator<Item = (DyckStep, usize)> + '_ {
    path.chunk_by(|a, b| a == b).map(|c| (c[0], c.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use DyckStep::{D, U};

    #[test]
    fn star_is_ud() {
        assert_eq!(dyck_transform(&Monomial::Star, 3).unwrap(), vec![U, D]);
        assert_eq!(dyck_inverse(&[U, D], 3).unwrap(), Monomial::Star);
    }

    #[test]
    fn round_trip_example() {
        let m: Monomial = "*P1(*P1(**))".parse().unwrap();
        for ell in 1..=3 {
            let p = dyck_transform(&m, ell).unwrap();
            assert_eq!(p.len(), 2 * (4 + 2 * ell as usize));
            assert!(has_congruent_runs(&p, ell));
            assert_eq!(dyck_inverse(&p, ell).unwrap(), m);
        }
    }

    #[test]
    fn rejects_other_labels_and_paths() {
        assert!(dyck_transform(&"P2(*)".parse().unwrap(), 1).is_err());
        assert!(dyck_inverse(&[U, U, D, D], 2).is_err());
        assert!(dyck_inverse(&[D, U], 1).is_err());
    }

    #[test]
    fn every_dyck_path_qualifies_at_ell_one() {
        let catalan = [1, 2, 5, 14, 42, 132];
        for (m, &c) in (1..=6).zip(&catalan) {
            let paths = dyck_paths(m);
            assert_eq!(paths.len(), c);
            for p in &paths {
                assert_eq!(&dyck_transform(&dyck_inverse(p, 1).unwrap(), 1).unwrap(), p);
            }
        }
    }
}
