//! Text grammars: scalars, generator combinations, exponent vectors, words and
//! module vectors. Every printer in the crate emits text these parsers accept.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{infer_basis, GeneratorId, LinearCombo};
use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{input}`: {reason}")]
pub struct ParseError {
    pub input: String,
    pub reason: String,
}

impl ParseError {
    pub fn new(input: &str, reason: impl Into<String>) -> Self {
        ParseError { input: input.to_string(), reason: reason.into() }
    }
}

impl From<ParseError> for ScalarError {
    fn from(e: ParseError) -> Self {
        ScalarError::Parse { input: e.input, reason: e.reason }
    }
}

#[derive(Debug, Clone)]
enum Tok<K> {
    Num(BigInt),
    Unit(Scalar),
    Leaf(K),
    Op(char),
}

/// Lexes one leaf at the start of `rest`, returning the leaf and its byte length.
type LeafLexer<'a, K> = dyn Fn(&str) -> Result<Option<(K, usize)>, String> + 'a;

fn tokenize<K>(input: &str, leaf: &LeafLexer<'_, K>) -> Result<Vec<Tok<K>>, String> {
    let mut toks = Vec::new();
    let mut pos = 0;
    while pos < input.len() {
        let rest = &input[pos..];
        let ch = rest.chars().next().expect("nonempty");
        if ch.is_whitespace() {
            pos += ch.len_utf8();
            continue;
        }
        if let Some((k, len)) = leaf(rest)? {
            toks.push(Tok::Leaf(k));
            pos += len;
            continue;
        }
        if ch.is_ascii_digit() {
            let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            toks.push(Tok::Num(rest[..len].parse().expect("digits")));
            pos += len;
            continue;
        }
        if rest.starts_with("r2") {
            toks.push(Tok::Unit(Scalar::sqrt2()));
            pos += 2;
            continue;
        }
        if ch == 'i' && !rest[1..].starts_with(|c: char| c.is_ascii_alphanumeric()) {
            toks.push(Tok::Unit(Scalar::i()));
            pos += 1;
            continue;
        }
        if "+-*/()".contains(ch) {
            toks.push(Tok::Op(ch));
            pos += 1;
            continue;
        }
        return Err(format!("unexpected `{ch}` at byte {pos}"));
    }
    Ok(toks)
}

/// A partial value: a scalar, or a combination of leaves.
enum Val<K: Ord> {
    S(Scalar),
    V(BTreeMap<K, Scalar>),
}

impl<K: Ord + Clone> Val<K> {
    fn scale(self, s: &Scalar) -> Val<K> {
        match self {
            Val::S(x) => Val::S(&x * s),
            Val::V(m) => Val::V(scale_map(m, s)),
        }
    }
}

fn scale_map<K: Ord>(m: BTreeMap<K, Scalar>, s: &Scalar) -> BTreeMap<K, Scalar> {
    m.into_iter().map(|(k, c)| (k, &c * s)).filter(|(_, c)| !c.is_zero()).collect()
}

fn add_maps<K: Ord>(mut a: BTreeMap<K, Scalar>, b: BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
    for (k, c) in b {
        let e = a.entry(k).or_default();
        *e += &c;
    }
    a.retain(|_, c| !c.is_zero());
    a
}

struct Parser<K> {
    toks: Vec<Tok<K>>,
    pos: usize,
}

impl<K: Ord + Clone> Parser<K> {
    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Val<K>, String> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let mut rhs = self.term()?;
            if op == '-' {
                rhs = rhs.scale(&Scalar::from_int(-1));
            }
            acc = match (acc, rhs) {
                (Val::S(a), Val::S(b)) => Val::S(&a + &b),
                (Val::V(a), Val::V(b)) => Val::V(add_maps(a, b)),
                (Val::V(a), Val::S(b)) | (Val::S(b), Val::V(a)) if b.is_zero() => Val::V(a),
                _ => return Err("cannot add a bare scalar to a combination".into()),
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Val<K>, String> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = match (op, acc, rhs) {
                ('*', Val::S(a), Val::S(b)) => Val::S(&a * &b),
                ('*', Val::S(a), Val::V(b)) | ('*', Val::V(b), Val::S(a)) => Val::V(scale_map(b, &a)),
                ('/', x, Val::S(b)) => {
                    let inv = b.inv().map_err(|_| "division by zero".to_string())?;
                    x.scale(&inv)
                }
                _ => return Err("product of two non-scalar factors".into()),
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Val<K>, String> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.scale(&Scalar::from_int(-1)))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Val<K>, String> {
        let tok = self.toks.get(self.pos).cloned().ok_or("unexpected end of input")?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(Val::S(Scalar::from_rational(BigRational::from_integer(n)))),
            Tok::Unit(u) => Ok(Val::S(u)),
            Tok::Leaf(k) => {
                let mut m = BTreeMap::new();
                m.insert(k, Scalar::one());
                Ok(Val::V(m))
            }
            Tok::Op('(') => {
                let v = self.expr()?;
                match self.toks.get(self.pos) {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    _ => Err("missing `)`".into()),
                }
            }
            Tok::Op(c) => Err(format!("unexpected `{c}`")),
        }
    }
}

fn run<K: Ord + Clone>(input: &str, leaf: &LeafLexer<'_, K>) -> Result<Val<K>, ParseError> {
    let toks = tokenize(input, leaf).map_err(|r| ParseError::new(input, r))?;
    if toks.is_empty() {
        return Err(ParseError::new(input, "empty input"));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr().map_err(|r| ParseError::new(input, r))?;
    if p.pos != p.toks.len() {
        return Err(ParseError::new(input, "trailing input"));
    }
    Ok(v)
}

fn no_leaf(_: &str) -> Result<Option<((), usize)>, String> {
    Ok(None)
}

pub fn parse_scalar(input: &str) -> Result<Scalar, ScalarError> {
    match run::<()>(input, &no_leaf)? {
        Val::S(s) => Ok(s),
        Val::V(_) => unreachable!("no leaves in scalar grammar"),
    }
}

/// Lexes `Name[index]` or `C`/`Cu`. Names may end in `+`/`-` right before `[`.
fn lex_generator(rest: &str) -> Result<Option<(GeneratorId, usize)>, String> {
    let bytes = rest.as_bytes();
    if !bytes[0].is_ascii_uppercase() {
        return Ok(None);
    }
    let mut end = 1;
    while end < bytes.len() && (bytes[end].is_ascii_alphanumeric()) {
        end += 1;
    }
    if end < bytes.len() && (bytes[end] == b'+' || bytes[end] == b'-') && bytes.get(end + 1) == Some(&b'[') {
        end += 1;
    }
    if bytes.get(end) == Some(&b'[') {
        let close = rest[end..].find(']').ok_or("unterminated `[`")? + end;
        end = close + 1;
    }
    let text = &rest[..end];
    text.parse::<GeneratorId>().map(|g| Some((g, end))).map_err(|e| e.to_string())
}

pub fn parse_generator(input: &str) -> Result<GeneratorId, ParseError> {
    input.trim().parse::<GeneratorId>().map_err(|e| ParseError::new(input, e.to_string()))
}

pub fn parse_combo(input: &str) -> Result<LinearCombo, ParseError> {
    match run(input, &lex_generator)? {
        Val::S(s) if s.is_zero() => Ok(LinearCombo::zero()),
        Val::S(_) => Err(ParseError::new(input, "a combination needs at least one generator")),
        Val::V(m) => {
            let combo: LinearCombo = m.into_iter().collect();
            infer_basis(&[&combo]).map_err(|e| ParseError::new(input, e.to_string()))?;
            Ok(combo)
        }
    }
}

/// A word of generators, applied right to left: `L[1] T[-1/2]^2`.
/// Separators are whitespace or commas; `^k` repeats a letter.
pub fn parse_word(input: &str) -> Result<Vec<GeneratorId>, ParseError> {
    let mut out = Vec::new();
    for piece in input.split(|c: char| c.is_whitespace() || c == ',').filter(|p| !p.is_empty()) {
        let (lit, exp) = match piece.rsplit_once('^') {
            Some((l, e)) if !l.ends_with('[') => {
                let e: usize = e.parse().map_err(|_| ParseError::new(input, format!("bad exponent in `{piece}`")))?;
                (l, e)
            }
            _ => (piece, 1),
        };
        let g = parse_generator(lit).map_err(|e| ParseError::new(input, e.reason))?;
        out.extend(std::iter::repeat_n(g, exp));
    }
    Ok(out)
}

/// A half-integer such as `3/2` or `-1`, returned doubled.
pub fn parse_half(input: &str) -> Result<i32, ParseError> {
    crate::algebra::parse_index2(input).ok_or_else(|| ParseError::new(input, "expected an integer or half-integer"))
}

/// Inverse of [`parse_half`].
pub fn fmt_half(doubled: i32) -> String {
    crate::algebra::fmt_index2(doubled)
}

/// A combination of base-module labels, e.g. `2*v1 - i*v0`. At each position
/// the longest matching label wins.
pub fn parse_label_combo(input: &str, labels: &[String]) -> Result<Vec<(usize, Scalar)>, ParseError> {
    let lexer = |rest: &str| -> Result<Option<(usize, usize)>, String> {
        let n = label_len(rest);
        if n == 0 || !rest.starts_with(|c: char| c.is_ascii_alphabetic()) {
            return Ok(None);
        }
        Ok(labels.iter().position(|l| l.as_str() == &rest[..n]).map(|j| (j, n)))
    };
    match run(input, &lexer)? {
        Val::S(s) if s.is_zero() => Ok(Vec::new()),
        Val::S(_) => Err(ParseError::new(input, "expected a combination of basis labels")),
        Val::V(m) => Ok(m.into_iter().collect()),
    }
}

/// `{slot:exp, ...}` pairs; returns them unvalidated.
pub(crate) fn parse_slot_map(input: &str) -> Result<Vec<(u32, u32)>, ParseError> {
    let t = input.trim();
    let body = t
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| ParseError::new(input, "expected `{slot:exp, ...}`"))?;
    let mut out = Vec::new();
    for part in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (s, e) = part.split_once(':').ok_or_else(|| ParseError::new(input, format!("expected `slot:exp`, got `{part}`")))?;
        let s: u32 = s.trim().parse().map_err(|_| ParseError::new(input, format!("bad slot `{s}`")))?;
        let e: u32 = e.trim().parse().map_err(|_| ParseError::new(input, format!("bad exponent `{e}`")))?;
        out.push((s, e));
    }
    Ok(out)
}

/// Labels use alphanumerics, `_^.'`, bracketed generator indices and `/`;
/// a `-` is allowed only right after `[`.
fn label_len(text: &str) -> usize {
    let mut prev = ' ';
    for (pos, c) in text.char_indices() {
        let ok = c.is_ascii_alphanumeric() || "_^.'[]/".contains(c) || (c == '-' && prev == '[');
        if !ok {
            return pos;
        }
        prev = c;
    }
    text.len()
}

/// Generic module-vector term `w{...}⊗label` or `u{...}⊗label`; returns the
/// braced text and the label.
pub(crate) fn parse_basis_terms(
    input: &str,
    head: char,
) -> Result<Vec<((String, String), Scalar)>, ParseError> {
    let lexer = move |rest: &str| -> Result<Option<((String, String), usize)>, String> {
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c == head => {}
            _ => return Ok(None),
        }
        if !rest[1..].starts_with('{') {
            return Ok(None);
        }
        let close = rest.find('}').ok_or("unterminated `{`")?;
        let braced = rest[1..=close].to_string();
        let after = &rest[close + 1..];
        let after_trim = after.trim_start();
        let skipped = after.len() - after_trim.len();
        let tail = after_trim.strip_prefix('⊗').ok_or("expected `⊗` after basis monomial")?;
        let tail_trim = tail.trim_start();
        let skipped2 = tail.len() - tail_trim.len();
        let label_len = label_len(tail_trim);
        if label_len == 0 {
            return Err("missing basis label".into());
        }
        let label = tail_trim[..label_len].to_string();
        let total = close + 1 + skipped + '⊗'.len_utf8() + skipped2 + label_len;
        Ok(Some(((braced, label), total)))
    };
    match run(input, &lexer)? {
        Val::S(s) if s.is_zero() => Ok(Vec::new()),
        Val::S(_) => Err(ParseError::new(input, "a module vector needs at least one basis term")),
        Val::V(m) => Ok(m.into_iter().collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_grammar() {
        assert_eq!(parse_scalar("(1/4)*r2").unwrap(), parse_scalar("r2/4").unwrap());
        assert_eq!(parse_scalar("i*i").unwrap(), Scalar::from_int(-1));
        assert_eq!(parse_scalar("-(1 + i)").unwrap().to_string(), "-1 - i");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("1 +").is_err());
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn combo_grammar() {
        let c = parse_combo("-3/2*T[1/2] + 2*G+[1/2]").unwrap_err();
        assert!(c.reason.contains("G+"), "{c}");
        let c = parse_combo("1/2*r2*G+[1/2] - i*G-[-1/2] + Cu").unwrap();
        assert_eq!(c.to_string(), "1/2*r2*G+[1/2] - i*G-[-1/2] + Cu");
        let d = parse_combo("(1/2 + i)*G[0] - C").unwrap();
        assert_eq!(d.to_string(), "(1/2 + i)*G[0] - C");
        assert_eq!(parse_combo(&d.to_string()).unwrap(), d);
        assert!(parse_combo("0").unwrap().is_zero());
        assert!(parse_combo("L[1]*L[2]").is_err());
    }

    #[test]
    fn word_grammar() {
        let w = parse_word("L[1] T[-1/2]^2, G[0]").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w[2].to_string(), "T[-1/2]");
    }

    #[test]
    fn basis_terms() {
        let t = parse_basis_terms("1/2*w{1:1}⊗v0 - w{} ⊗ v1", 'w').unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].0 .0, "{1:1}");
    }
}
