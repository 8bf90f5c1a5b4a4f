//! The monomial term algebra: terms, gradings, canonical forms and the
//! bracketed-word codec.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Operator labels are 1-based: `P1, ..., Pd`.
pub type Label = u32;

/// Commutativity setting, selecting both the canonical form and the counting law.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    /// Noncommuting unary operators, noncommutative product.
    Free,
    /// `Pi(Pj(v)) ~ Pj(Pi(v))`, noncommutative product.
    CommUnary,
    /// Noncommuting unary operators, commutative product.
    CommMult,
    /// Both relations.
    CommBoth,
}

impl Regime {
    pub const ALL: [Regime; 4] = [
        Regime::Free,
        Regime::CommUnary,
        Regime::CommMult,
        Regime::CommBoth,
    ];

    pub fn commuting_unary(self) -> bool {
        matches!(self, Regime::CommUnary | Regime::CommBoth)
    }

    pub fn commutative_product(self) -> bool {
        matches!(self, Regime::CommMult | Regime::CommBoth)
    }

    /// Short command-line tag: `free`, `c`, `m` or `cm`.
    pub fn tag(self) -> &'static str {
        match self {
            Regime::Free => "free",
            Regime::CommUnary => "c",
            Regime::CommMult => "m",
            Regime::CommBoth => "cm",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "free" | "f" => Ok(Regime::Free),
            "c" | "comm-unary" | "communary" => Ok(Regime::CommUnary),
            "m" | "comm-mult" | "commmult" => Ok(Regime::CommMult),
            "cm" | "comm-both" | "commboth" => Ok(Regime::CommBoth),
            other => Err(Error::InvalidArgument(format!("unknown regime `{other}`"))),
        }
    }
}

/// A monomial term.
///
/// Products are stored flattened: every factor of a `Product` is an atom
/// (`Star` or `Unary`) and there are at least two factors. Use
/// [`Monomial::product`] to build products from arbitrary parts.
///
/// The derived ordering is the canonical total order used to sort
/// commutative products: `Star < Unary < Product`, unary nodes by label then
/// child, products lexicographically by factor list. It agrees with the byte
/// order of [`CanonicalKey`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monomial {
    Star,
    Unary(Label, Box<Monomial>),
    Product(Vec<Monomial>),
}

impl Monomial {
    pub fn star() -> Self {
        Monomial::Star
    }

    pub fn unary(label: Label, child: Monomial) -> Self {
        Monomial::Unary(label, Box::new(child))
    }

    /// Associative product of the given parts, flattened to atoms.
    ///
    /// Returns the single part unchanged when only one is given.
    ///
    /// # Panics
    ///
    /// Panics on an empty iterator; there is no empty monomial.
    pub fn product<I: IntoIterator<Item = Monomial>>(parts: I) -> Self {
        let mut atoms = Vec::new();
        for part in parts {
            match part {
                Monomial::Product(fs) => atoms.extend(fs),
                atom => atoms.push(atom),
            }
        }
        match atoms.len() {
            0 => panic!("product of zero monomials"),
            1 => atoms.pop().unwrap(),
            _ => Monomial::Product(atoms),
        }
    }

    pub fn is_atom(&self) -> bool {
        !matches!(self, Monomial::Product(_))
    }

    /// The atom factorization: the factors of a product, or `self` alone.
    pub fn atoms(&self) -> &[Monomial] {
        match self {
            Monomial::Product(fs) => fs,
            _ => std::slice::from_ref(self),
        }
    }

    /// Structural invariants: products have at least two factors, all atoms;
    /// labels are positive.
    pub fn is_well_formed(&self) -> bool {
        match self {
            Monomial::Star => true,
            Monomial::Unary(label, child) => *label >= 1 && child.is_well_formed(),
            Monomial::Product(fs) => {
                fs.len() >= 2 && fs.iter().all(|f| f.is_atom() && f.is_well_formed())
            }
        }
    }

    /// Number of `*` leaves.
    pub fn degree(&self) -> u32 {
        match self {
            Monomial::Star => 1,
            Monomial::Unary(_, child) => child.degree(),
            Monomial::Product(fs) => fs.iter().map(Monomial::degree).sum(),
        }
    }

    /// Number of unary nodes, `|s|`.
    pub fn unary_count(&self) -> u32 {
        match self {
            Monomial::Star => 0,
            Monomial::Unary(_, child) => 1 + child.unary_count(),
            Monomial::Product(fs) => fs.iter().map(Monomial::unary_count).sum(),
        }
    }

    pub fn max_label(&self) -> Label {
        match self {
            Monomial::Star => 0,
            Monomial::Unary(label, child) => (*label).max(child.max_label()),
            Monomial::Product(fs) => fs.iter().map(Monomial::max_label).max().unwrap_or(0),
        }
    }

    /// Per-operator occurrence counts `(s_1, ..., s_d)`.
    pub fn multiplicity(&self, d: usize) -> Result<Vec<u32>> {
        let mut s = vec![0u32; d];
        self.accumulate_multiplicity(&mut s)?;
        Ok(s)
    }

    fn accumulate_multiplicity(&self, s: &mut [u32]) -> Result<()> {
        match self {
            Monomial::Star => Ok(()),
            Monomial::Unary(label, child) => {
                let idx = check_label(*label, s.len())?;
                s[idx] += 1;
                child.accumulate_multiplicity(s)
            }
            Monomial::Product(fs) => fs.iter().try_for_each(|f| f.accumulate_multiplicity(s)),
        }
    }

    pub fn multidegree(&self, d: usize) -> Result<MultiDegree> {
        Ok(MultiDegree {
            r: self.degree(),
            s: self.multiplicity(d)?,
        })
    }

    /// Bracketed-word length when `*` has length `ell` and each delimiter length 1.
    pub fn word_length(&self, ell: u32) -> u64 {
        ell as u64 * self.degree() as u64 + 2 * self.unary_count() as u64
    }

    pub fn key(&self) -> CanonicalKey {
        CanonicalKey::of(self)
    }

    pub fn canonicalize(&self, regime: Regime) -> Monomial {
        canonicalize(self, regime)
    }

    /// Checks that every label lies in `1..=d`.
    pub fn check_labels(&self, d: usize) -> Result<()> {
        match self {
            Monomial::Star => Ok(()),
            Monomial::Unary(label, child) => {
                check_label(*label, d)?;
                child.check_labels(d)
            }
            Monomial::Product(fs) => fs.iter().try_for_each(|f| f.check_labels(d)),
        }
    }
}

pub(crate) fn check_label(label: Label, d: usize) -> Result<usize> {
    if label >= 1 && (label as usize) <= d {
        Ok(label as usize - 1)
    } else {
        Err(Error::LabelOutOfRange { label, d })
    }
}

/// Degree `r` and multiplicity vector `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree {
    pub r: u32,
    pub s: Vec<u32>,
}

impl MultiDegree {
    pub fn new(r: u32, s: Vec<u32>) -> Self {
        MultiDegree { r, s }
    }

    pub fn d(&self) -> usize {
        self.s.len()
    }

    /// `|s|`.
    pub fn total_multiplicity(&self) -> u32 {
        self.s.iter().sum()
    }

    /// Word length `ell * r + 2 |s|`.
    pub fn length(&self, ell: u32) -> u64 {
        ell as u64 * self.r as u64 + 2 * self.total_multiplicity() as u64
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.r)?;
        for (i, x) in self.s.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Deterministic, prefix-free byte serialization of a monomial.
///
/// Byte-lexicographic order on keys coincides with the derived order on
/// [`Monomial`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    const END: u8 = 0;
    const STAR: u8 = 1;
    const UNARY: u8 = 2;
    const PRODUCT: u8 = 3;

    pub fn of(m: &Monomial) -> Self {
        let mut bytes = Vec::new();
        Self::write(m, &mut bytes);
        CanonicalKey(bytes)
    }

    fn write(m: &Monomial, out: &mut Vec<u8>) {
        match m {
            Monomial::Star => out.push(Self::STAR),
            Monomial::Unary(label, child) => {
                out.push(Self::UNARY);
                out.extend_from_slice(&label.to_be_bytes());
                Self::write(child, out);
            }
            Monomial::Product(fs) => {
                out.push(Self::PRODUCT);
                for f in fs {
                    Self::write(f, out);
                }
                out.push(Self::END);
            }
        }
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Reduces `m` to the canonical representative of its class under `regime`.
///
/// Commuting unary operators sort every maximal unary chain into weakly
/// increasing labels; a commutative product sorts its factors by the
/// canonical order. Both normalizations run bottom-up, children first, so
/// chain sorting has settled before factor keys are compared.
pub fn canonicalize(m: &Monomial, regime: Regime) -> Monomial {
    if regime == Regime::Free {
        return m.clone();
    }
    match m {
        Monomial::Star => Monomial::Star,
        Monomial::Unary(..) if regime.commuting_unary() => {
            let mut labels = Vec::new();
            let mut cur = m;
            while let Monomial::Unary(label, child) = cur {
                labels.push(*label);
                cur = child;
            }
            labels.sort_unstable();
            labels
                .into_iter()
                .rev()
                .fold(canonicalize(cur, regime), |acc, l| Monomial::unary(l, acc))
        }
        Monomial::Unary(label, child) => Monomial::unary(*label, canonicalize(child, regime)),
        Monomial::Product(fs) => {
            let mut factors: Vec<Monomial> = fs.iter().map(|f| canonicalize(f, regime)).collect();
            if regime.commutative_product() {
                factors.sort();
            }
            Monomial::Product(factors)
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Star => f.write_str("*"),
            Monomial::Unary(label, child) => write!(f, "P{label}({child})"),
            Monomial::Product(fs) => fs.iter().try_for_each(|x| write!(f, "{x}")),
        }
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses the textual grammar: `*`, `Pi(<mono>)`, juxtaposition.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = TextParser {
            src: s.as_bytes(),
            pos: 0,
        };
        let m = p.sequence()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        m.ok_or(Error::EmptyWord)
    }
}

/// Parses a monomial and checks that every label lies in `1..=d`.
pub fn parse_monomial(text: &str, d: usize) -> Result<Monomial> {
    let m: Monomial = text.parse()?;
    m.check_labels(d)?;
    Ok(m)
}

struct TextParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TextParser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn sequence(&mut self) -> Result<Option<Monomial>> {
        let mut atoms = Vec::new();
        loop {
            self.skip_ws();
            match self.src.get(self.pos) {
                Some(b'*') => {
                    self.pos += 1;
                    atoms.push(Monomial::Star);
                }
                Some(b'P') | Some(b'p') => {
                    self.pos += 1;
                    let label = self.number()?;
                    self.skip_ws();
                    if self.src.get(self.pos) != Some(&b'(') {
                        return Err(self.error("expected `(` after operator label"));
                    }
                    self.pos += 1;
                    let open = self.pos;
                    let inner = self.sequence()?;
                    self.skip_ws();
                    if self.src.get(self.pos) != Some(&b')') {
                        return Err(self.error("expected `)`"));
                    }
                    let inner = inner.ok_or(Error::Parse {
                        pos: open,
                        msg: "operator applied to nothing".into(),
                    })?;
                    self.pos += 1;
                    atoms.push(Monomial::unary(label, inner));
                }
                _ => break,
            }
        }
        Ok(if atoms.is_empty() {
            None
        } else {
            Some(Monomial::product(atoms))
        })
    }

    fn number(&mut self) -> Result<Label> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected operator label"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let label: Label = text.parse().map_err(|_| self.error("label too large"))?;
        if label == 0 {
            return Err(Error::Parse {
                pos: start,
                msg: "labels start at 1".into(),
            });
        }
        Ok(label)
    }
}

/// A bracketed-word token.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Token {
    Star,
    Open(Label),
    Close(Label),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Star => f.write_str("*"),
            Token::Open(i) => write!(f, "({i}"),
            Token::Close(i) => write!(f, "){i}"),
        }
    }
}

/// The bracketed word of `m`: `Pi(v)` becomes `Open(i) word(v) Close(i)`.
pub fn encode_word(m: &Monomial) -> Vec<Token> {
    let mut out = Vec::new();
    encode_into(m, &mut out);
    out
}

fn encode_into(m: &Monomial, out: &mut Vec<Token>) {
    match m {
        Monomial::Star => out.push(Token::Star),
        Monomial::Unary(label, child) => {
            out.push(Token::Open(*label));
            encode_into(child, out);
            out.push(Token::Close(*label));
        }
        Monomial::Product(fs) => fs.iter().for_each(|f| encode_into(f, out)),
    }
}

/// Inverse of [`encode_word`], checking labels against `1..=d`.
pub fn decode_word(tokens: &[Token], d: usize) -> Result<Monomial> {
    let mut pos = 0;
    let m = decode_sequence(tokens, &mut pos, d)?;
    if pos != tokens.len() {
        return Err(Error::Unbalanced(pos));
    }
    m.ok_or(Error::EmptyWord)
}

fn decode_sequence(tokens: &[Token], pos: &mut usize, d: usize) -> Result<Option<Monomial>> {
    let mut atoms = Vec::new();
    while let Some(tok) = tokens.get(*pos) {
        match *tok {
            Token::Star => {
                atoms.push(Monomial::Star);
                *pos += 1;
            }
            Token::Open(label) => {
                check_label(label, d)?;
                let open = *pos;
                *pos += 1;
                let inner = decode_sequence(tokens, pos, d)?;
                match tokens.get(*pos) {
                    Some(Token::Close(l)) if *l == label => *pos += 1,
                    _ => return Err(Error::Unbalanced(*pos)),
                }
                let inner = inner.ok_or(Error::EmptyInterior(open))?;
                atoms.push(Monomial::unary(label, inner));
            }
            Token::Close(_) => break,
        }
    }
    Ok(if atoms.is_empty() {
        None
    } else {
        Some(Monomial::product(atoms))
    })
}

/// Renders a token list as space-separated text, e.g. `* (1 * )1`.
pub fn format_word(tokens: &[Token]) -> String {
    tokens
        .iter()
        .map(Token::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses the token text format; whitespace between tokens is optional.
pub fn parse_word(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        match c {
            b'*' => {
                out.push(Token::Star);
                pos += 1;
            }
            b'(' | b')' => {
                let start = pos + 1;
                let mut end = start;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                if end == start {
                    return Err(Error::Parse {
                        pos,
                        msg: "delimiter without label".into(),
                    });
                }
                let label: Label = text[start..end].parse().map_err(|_| Error::Parse {
                    pos,
                    msg: "label too large".into(),
                })?;
                out.push(if c == b'(' {
                    Token::Open(label)
                } else {
                    Token::Close(label)
                });
                pos = end;
            }
            _ => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected `{}`", c as char),
                })
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(m("*").degree(), 1);
        assert_eq!(m("P1(**)").degree(), 2);
        assert_eq!(m("P1(P1(P2(**)))").degree(), 2);
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(m("*").multiplicity(2).unwrap(), vec![0, 0]);
        assert_eq!(m("P1(P1(P2(**)))").multiplicity(2).unwrap(), vec![2, 1]);
        assert_eq!(m("P2(*)").multiplicity(3).unwrap(), vec![0, 1, 0]);
        assert_eq!(
            m("P3(*)").multiplicity(2),
            Err(Error::LabelOutOfRange { label: 3, d: 2 })
        );
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(
            m("P2(P1(**))").canonicalize(Regime::CommUnary),
            m("P1(P2(**))")
        );
        let x = m("P2(P1(*)*)P1(*)");
        assert_eq!(x.canonicalize(Regime::Free), x);
        assert_eq!(m("P1(*)*").canonicalize(Regime::CommMult), m("*P1(*)"));
        // chain sorting changes the factor keys before factors are sorted
        assert_eq!(
            m("P2(P1(*))P1(P2(*))*").canonicalize(Regime::CommBoth),
            m("*P1(P2(*))P1(P2(*))")
        );
        // chain stops at a product root
        assert_eq!(
            m("P2(P1(P2(*)*))").canonicalize(Regime::CommUnary),
            m("P1(P2(P2(*)*))").canonicalize(Regime::CommUnary)
        );
        assert_eq!(
            m("P2(P1(P2(*)*))").canonicalize(Regime::CommUnary),
            m("P1(P2(P2(*)*))")
        );
    }

    #[test]
    fn word_examples() {
        let x = m("*P1(*P2(**))");
        let w = encode_word(&x);
        use Token::*;
        assert_eq!(
            w,
            vec![Star, Open(1), Star, Open(2), Star, Star, Close(2), Close(1)]
        );
        assert_eq!(x.word_length(2), 12);
        assert_eq!(decode_word(&w, 2).unwrap(), x);
        assert_eq!(decode_word(&[Star], 1).unwrap(), Monomial::Star);
        assert_eq!(format_word(&w), "* (1 * (2 * * )2 )1");
        assert_eq!(parse_word("*(1*(2**)2)1").unwrap(), w);
    }

    #[test]
    fn decode_errors() {
        use Token::*;
        assert_eq!(
            decode_word(&[Open(1), Close(1)], 1),
            Err(Error::EmptyInterior(0))
        );
        assert_eq!(decode_word(&[Open(1), Star], 1), Err(Error::Unbalanced(2)));
        assert_eq!(decode_word(&[Star, Close(1)], 1), Err(Error::Unbalanced(1)));
        assert_eq!(
            decode_word(&[Open(1), Star, Close(2)], 2),
            Err(Error::Unbalanced(2))
        );
        assert_eq!(
            decode_word(&[Open(3), Star, Close(3)], 2),
            Err(Error::LabelOutOfRange { label: 3, d: 2 })
        );
        assert_eq!(decode_word(&[], 2), Err(Error::EmptyWord));
    }

    #[test]
    fn text_grammar() {
        assert_eq!(m("*P1(*P2(**))").to_string(), "*P1(*P2(**))");
        assert_eq!(m(" * P12( * ) ").to_string(), "*P12(*)");
        assert!("P1()".parse::<Monomial>().is_err());
        assert!("P0(*)".parse::<Monomial>().is_err());
        assert!("P1(*".parse::<Monomial>().is_err());
        assert!("".parse::<Monomial>().is_err());
        assert!("*)".parse::<Monomial>().is_err());
        assert!(parse_monomial("P3(*)", 2).is_err());
    }

    #[test]
    fn key_order_matches_structural_order() {
        let xs = [
            "*",
            "P1(*)",
            "P2(*)",
            "P1(**)",
            "**",
            "***",
            "*P1(*)",
            "P1(*)*",
            "P1(P1(*))",
        ];
        for a in xs {
            for b in xs {
                let (a, b) = (m(a), m(b));
                assert_eq!(a.cmp(&b), a.key().cmp(&b.key()), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn product_flattens() {
        let p = Monomial::product([m("**"), m("P1(*)"), m("*")]);
        assert_eq!(
            p,
            Monomial::Product(vec![m("*"), m("*"), m("P1(*)"), m("*")])
        );
        assert!(p.is_well_formed());
        assert!(!Monomial::Product(vec![Monomial::Star]).is_well_formed());
    }

    #[test]
    fn regime_tags_round_trip() {
        for r in Regime::ALL {
            assert_eq!(r.tag().parse::<Regime>().unwrap(), r);
        }
        assert!("x".parse::<Regime>().is_err());
    }
}
