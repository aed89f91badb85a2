use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::AlgebraError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    Twisted,
    Untwisted,
}

/// Which generating set a generator belongs to.
///
/// `Twisted` is the defining basis `L, T, G, C`; `TwistedPm` is the technical
/// basis where `G^+_p = G_p` for integral `p` and `G^-_p = i G_p` for half-odd `p`.
/// The untwisted algebra has the `G^±` basis and the `G^(1), G^(2)` basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Twisted,
    TwistedPm,
    UntwistedPm,
    Untwisted12,
}

impl Basis {
    pub fn algebra(self) -> Algebra {
        match self {
            Basis::Twisted | Basis::TwistedPm => Algebra::Twisted,
            Basis::UntwistedPm | Basis::Untwisted12 => Algebra::Untwisted,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Twisted => "twisted",
            Basis::TwistedPm => "twisted-pm",
            Basis::UntwistedPm => "untwisted-pm",
            Basis::Untwisted12 => "untwisted-12",
        }
    }
}

/// Generator kinds. The declaration order is the printing rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    L,
    T,
    G,
    /// `G^+_p` of the twisted technical basis, `p` integral.
    TGPlus,
    /// `G^-_p` of the twisted technical basis, `p` half-odd.
    TGMinus,
    C,
    Lu,
    J,
    GPlus,
    GMinus,
    G1,
    G2,
    Cu,
}

impl Kind {
    pub fn algebra(self) -> Algebra {
        match self {
            Kind::L | Kind::T | Kind::G | Kind::TGPlus | Kind::TGMinus | Kind::C => Algebra::Twisted,
            _ => Algebra::Untwisted,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(
            self,
            Kind::G | Kind::TGPlus | Kind::TGMinus | Kind::GPlus | Kind::GMinus | Kind::G1 | Kind::G2
        )
    }

    pub fn is_central(self) -> bool {
        matches!(self, Kind::C | Kind::Cu)
    }

    /// Whether the kind is a member of the generating set `basis`.
    pub fn in_basis(self, basis: Basis) -> bool {
        match basis {
            Basis::Twisted => matches!(self, Kind::L | Kind::T | Kind::G | Kind::C),
            Basis::TwistedPm => matches!(self, Kind::L | Kind::T | Kind::TGPlus | Kind::TGMinus | Kind::C),
            Basis::UntwistedPm => matches!(self, Kind::Lu | Kind::J | Kind::GPlus | Kind::GMinus | Kind::Cu),
            Basis::Untwisted12 => matches!(self, Kind::Lu | Kind::J | Kind::G1 | Kind::G2 | Kind::Cu),
        }
    }

    fn allows(self, index2: i32) -> bool {
        let even = index2 % 2 == 0;
        match self {
            Kind::C | Kind::Cu => index2 == 0,
            Kind::L | Kind::Lu | Kind::J | Kind::TGPlus => even,
            Kind::T | Kind::TGMinus | Kind::GPlus | Kind::GMinus | Kind::G1 | Kind::G2 => !even,
            Kind::G => true,
        }
    }

    fn literal(self) -> &'static str {
        match self {
            Kind::L => "L",
            Kind::T => "T",
            Kind::G => "G",
            Kind::TGPlus => "Gt+",
            Kind::TGMinus => "Gt-",
            Kind::C => "C",
            Kind::Lu => "Lu",
            Kind::J => "J",
            Kind::GPlus => "G+",
            Kind::GMinus => "G-",
            Kind::G1 => "G1",
            Kind::G2 => "G2",
            Kind::Cu => "Cu",
        }
    }

    pub const ALL: [Kind; 13] = [
        Kind::L,
        Kind::T,
        Kind::G,
        Kind::TGPlus,
        Kind::TGMinus,
        Kind::C,
        Kind::Lu,
        Kind::J,
        Kind::GPlus,
        Kind::GMinus,
        Kind::G1,
        Kind::G2,
        Kind::Cu,
    ];
}

/// A generator with its half-integer index stored doubled (`T_{3/2}` has
/// `index2 == 3`). Construction rejects indices that the kind does not admit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId {
    kind: Kind,
    index2: i32,
}

impl GeneratorId {
    pub fn new(kind: Kind, index2: i32) -> Result<Self, AlgebraError> {
        if kind.allows(index2) {
            Ok(GeneratorId { kind, index2 })
        } else {
            Err(AlgebraError::BadIndex {
                kind: kind.literal(),
                index: fmt_index2(index2),
            })
        }
    }

    /// Panicking constructor for indices known to be valid.
    pub fn of(kind: Kind, index2: i32) -> Self {
        Self::new(kind, index2).expect("valid generator index")
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn index2(&self) -> i32 {
        self.index2
    }

    /// Degree, doubled. Equal to the doubled index for every kind.
    pub fn degree2(&self) -> i32 {
        self.index2
    }

    pub fn parity(&self) -> u8 {
        u8::from(self.kind.is_odd())
    }

    pub fn is_odd(&self) -> bool {
        self.kind.is_odd()
    }

    pub fn is_central(&self) -> bool {
        self.kind.is_central()
    }

    pub fn algebra(&self) -> Algebra {
        self.kind.algebra()
    }

    pub fn index(&self) -> BigRational {
        BigRational::new(BigInt::from(self.index2), BigInt::from(2))
    }
}

/// `(-1)^{|x||y|}`
pub fn super_sign(x: &GeneratorId, y: &GeneratorId) -> i64 {
    if x.is_odd() && y.is_odd() {
        -1
    } else {
        1
    }
}

pub(crate) fn fmt_index2(index2: i32) -> String {
    if index2 % 2 == 0 {
        (index2 / 2).to_string()
    } else {
        format!("{index2}/2")
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_central() {
            f.write_str(self.kind.literal())
        } else {
            write!(f, "{}[{}]", self.kind.literal(), fmt_index2(self.index2))
        }
    }
}

/// Parses a doubled index from `m`, `-3/2` or similar.
pub(crate) fn parse_index2(text: &str) -> Option<i32> {
    let text = text.trim();
    match text.split_once('/') {
        None => text.parse::<i32>().ok()?.checked_mul(2),
        Some((n, d)) => {
            let n: i32 = n.trim().parse().ok()?;
            let d: i32 = d.trim().parse().ok()?;
            match d {
                1 => n.checked_mul(2),
                2 => Some(n),
                _ => None,
            }
        }
    }
}

impl FromStr for GeneratorId {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let bad = || AlgebraError::Parse(format!("not a generator literal: `{s}`"));
        if text == "C" {
            return Ok(GeneratorId::of(Kind::C, 0));
        }
        if text == "Cu" {
            return Ok(GeneratorId::of(Kind::Cu, 0));
        }
        let open = text.find('[').ok_or_else(bad)?;
        if !text.ends_with(']') {
            return Err(bad());
        }
        let head = &text[..open];
        let body = &text[open + 1..text.len() - 1];
        let kind = Kind::ALL
            .into_iter()
            .find(|k| !k.is_central() && k.literal() == head)
            .ok_or_else(bad)?;
        let index2 = parse_index2(body).ok_or_else(bad)?;
        GeneratorId::new(kind, index2)
    }
}
