//! Exponent vectors, their weight and length, the reverse lexicographic and
//! principal orders, and bounded enumeration.
//!
//! Slot `2n-1` holds the exponent of `T_{-n+1/2}` and slot `2n` the exponent of
//! `G_{-(n-1)/2}`. Weights are returned doubled so they stay integral.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{GeneratorId, Kind};
use crate::parse::{parse_slot_map, ParseError};

/// A finitely supported natural sequence indexed from 1, stored as sorted
/// `(slot, exponent)` pairs with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector {
    entries: Vec<(u32, u32)>,
}

/// Doubled weight of one unit at `slot`.
pub fn slot_weight2(slot: u32) -> i64 {
    assert!(slot >= 1, "slots start at 1");
    if slot % 2 == 1 {
        slot as i64
    } else {
        slot as i64 / 2 - 1
    }
}

/// The generator whose power sits at `slot`.
pub fn slot_generator(slot: u32) -> GeneratorId {
    if slot % 2 == 1 {
        GeneratorId::of(Kind::T, -(slot as i32))
    } else {
        GeneratorId::of(Kind::G, 1 - slot as i32 / 2)
    }
}

/// The slot of a non-positive `T` or `G`, if any.
pub fn generator_slot(g: &GeneratorId) -> Option<u32> {
    match g.kind() {
        Kind::T if g.index2() < 0 => Some((-g.index2()) as u32),
        Kind::G if g.index2() <= 0 => Some((2 - 2 * g.index2()) as u32),
        _ => None,
    }
}

impl ExponentVector {
    pub fn zero() -> Self {
        ExponentVector::default()
    }

    /// `ε_k`
    pub fn eps(k: u32) -> Self {
        Self::from_pairs([(k, 1)])
    }

    /// Builds from `(slot, exponent)` pairs in any order; repeated slots add up.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut v = ExponentVector::zero();
        for (s, e) in pairs {
            v.add_at(s, e);
        }
        v
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn get(&self, slot: u32) -> u32 {
        match self.entries.binary_search_by_key(&slot, |e| e.0) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0,
        }
    }

    pub fn add_at(&mut self, slot: u32, e: u32) {
        assert!(slot >= 1, "slots start at 1");
        if e == 0 {
            return;
        }
        match self.entries.binary_search_by_key(&slot, |x| x.0) {
            Ok(i) => self.entries[i].1 += e,
            Err(i) => self.entries.insert(i, (slot, e)),
        }
    }

    /// Removes `e` from `slot`, or `None` if that would go negative.
    pub fn sub_at(&self, slot: u32, e: u32) -> Option<Self> {
        let mut out = self.clone();
        match out.entries.binary_search_by_key(&slot, |x| x.0) {
            Ok(i) if out.entries[i].1 >= e => {
                out.entries[i].1 -= e;
                if out.entries[i].1 == 0 {
                    out.entries.remove(i);
                }
                Some(out)
            }
            _ if e == 0 => Some(out),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weight2(&self) -> i64 {
        self.entries.iter().map(|&(s, e)| slot_weight2(s) * e as i64).sum()
    }

    pub fn length(&self) -> u64 {
        self.entries.iter().map(|&(_, e)| e as u64).sum()
    }

    /// `n̂ = min{k : i_k != 0}`
    pub fn min_nonzero_slot(&self) -> Option<u32> {
        self.entries.first().map(|e| e.0)
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &(s, e) in &other.entries {
            out.add_at(s, e);
        }
        out
    }
}

/// First differing slot from 1 upward decides; the larger entry is the larger vector.
pub fn revlex_cmp(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    let (mut i, mut j) = (a.entries.iter().peekable(), b.entries.iter().peekable());
    loop {
        match (i.peek(), j.peek()) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&&(sa, ea)), Some(&&(sb, eb))) => {
                if sa < sb {
                    return Ordering::Greater;
                }
                if sb < sa {
                    return Ordering::Less;
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
                i.next();
                j.next();
            }
        }
    }
}

/// Lexicographic on (weight, length, revlex).
pub fn principal_cmp(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    a.weight2()
        .cmp(&b.weight2())
        .then_with(|| a.length().cmp(&b.length()))
        .then_with(|| revlex_cmp(a, b))
}

/// The total order is the principal order.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        principal_cmp(self, other)
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All vectors with doubled weight at most `max_weight2` and length at most
/// `max_length`, descending in the principal order. The length bound is required
/// because slot 2 carries weight zero.
pub fn enumerate(max_weight2: i64, max_length: u64) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    if max_weight2 < 0 {
        return out;
    }
    let max_slot = (2 * max_weight2 + 2) as u32;
    let slots: Vec<u32> = (1..=max_slot).filter(|&s| slot_weight2(s) <= max_weight2).collect();
    let mut current = Vec::new();
    fill(&slots, 0, max_weight2, max_length, &mut current, &mut out);
    out.sort_by(|a, b| principal_cmp(b, a));
    out
}

fn fill(slots: &[u32], at: usize, w: i64, l: u64, cur: &mut Vec<(u32, u32)>, out: &mut Vec<ExponentVector>) {
    if at == slots.len() {
        out.push(ExponentVector { entries: cur.clone() });
        return;
    }
    let s = slots[at];
    let sw = slot_weight2(s);
    let mut e = 0u64;
    loop {
        if e > l || (e as i64) * sw > w {
            break;
        }
        if e > 0 {
            cur.push((s, e as u32));
        }
        fill(slots, at + 1, w - e as i64 * sw, l - e, cur, out);
        if e > 0 {
            cur.pop();
        }
        e += 1;
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (s, e)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}:{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExponentVector{self}")
    }
}

impl FromStr for ExponentVector {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let pairs = parse_slot_map(s)?;
        if pairs.iter().any(|&(slot, _)| slot == 0) {
            return Err(ParseError::new(s, "slots start at 1"));
        }
        Ok(ExponentVector::from_pairs(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> ExponentVector {
        s.parse().unwrap()
    }

    #[test]
    fn weights_and_lengths() {
        assert_eq!(ExponentVector::eps(1).weight2(), 1);
        assert_eq!(ExponentVector::eps(2).weight2(), 0);
        assert_eq!(ExponentVector::eps(3).weight2(), 3);
        assert_eq!(ExponentVector::eps(4).weight2(), 1);
        assert_eq!(ExponentVector::zero().weight2(), 0);
        let x = v("{1:2, 3:1, 4:1}");
        assert_eq!(x.weight2(), 6);
        assert_eq!(x.length(), 4);
    }

    #[test]
    fn orders() {
        use Ordering::*;
        let e = ExponentVector::eps;
        assert_eq!(revlex_cmp(&e(1), &e(4)), Greater);
        assert_eq!(revlex_cmp(&ExponentVector::zero(), &e(7)), Less);
        assert_eq!(principal_cmp(&e(1), &e(2)), Greater);
        assert_eq!(principal_cmp(&v("{1:3}"), &e(3)), Greater);
        assert_eq!(principal_cmp(&e(1), &e(4)), Greater);
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<String> = enumerate(1, 2).iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["{1:1, 2:1}", "{2:1, 4:1}", "{1:1}", "{4:1}", "{2:2}", "{2:1}", "{}"]);
        assert_eq!(enumerate(0, 3).len(), 4);
        assert_eq!(enumerate(0, 0), vec![ExponentVector::zero()]);
    }

    #[test]
    fn slots_and_generators() {
        assert_eq!(slot_generator(1).to_string(), "T[-1/2]");
        assert_eq!(slot_generator(2).to_string(), "G[0]");
        assert_eq!(slot_generator(6).to_string(), "G[-1]");
        for s in 1..20 {
            assert_eq!(generator_slot(&slot_generator(s)), Some(s));
            assert_eq!(slot_weight2(s), -slot_generator(s).degree2() as i64);
        }
        assert_eq!(v("{3:1}").min_nonzero_slot(), Some(3));
        assert_eq!(v("{2:1, 5:1}").min_nonzero_slot(), Some(2));
        assert_eq!(ExponentVector::zero().min_nonzero_slot(), None);
    }

    #[test]
    fn text_form() {
        assert_eq!(ExponentVector::zero().to_string(), "{}");
        assert_eq!(v("{4:1, 1:2}").to_string(), "{1:2, 4:1}");
        assert!("{0:1}".parse::<ExponentVector>().is_err());
    }
}
