use std::fmt;

use crate::algebra::{fmt_index2, GeneratorId, Kind, Presentation, TwistedPresentation};

/// A subalgebra of the twisted algebra spanned by generators. The central
/// element acts by `c` on every module here, so selectors range over the
/// non-central generators only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubalgebraSelector {
    /// `T_+`, also the base subalgebra `b`.
    Plus,
    Zero,
    Minus,
    /// `L_{>=1} + T_{>=1/2} + G_{>=1}`
    P,
    /// `L_{>=1} + T_{>=3/2} + G_{>=1}`
    FrakT,
    /// `b + T_0`
    BPlusT0,
    /// `G_{>=u} + L_{>=u+1/2} + T_{>=u+1}`, with `u` doubled.
    TU(i32),
}

impl SubalgebraSelector {
    pub fn contains(&self, g: &GeneratorId) -> bool {
        if !matches!(g.kind(), Kind::L | Kind::T | Kind::G) {
            return false;
        }
        let i2 = g.index2();
        match self {
            SubalgebraSelector::Plus => i2 > 0,
            SubalgebraSelector::Zero => i2 == 0,
            SubalgebraSelector::Minus => i2 < 0,
            SubalgebraSelector::BPlusT0 => i2 >= 0,
            SubalgebraSelector::P => match g.kind() {
                Kind::T => i2 >= 1,
                _ => i2 >= 2,
            },
            SubalgebraSelector::FrakT => match g.kind() {
                Kind::T => i2 >= 3,
                _ => i2 >= 2,
            },
            SubalgebraSelector::TU(u2) => match g.kind() {
                Kind::G => i2 >= *u2,
                Kind::L => i2 > *u2,
                _ => i2 >= u2 + 2,
            },
        }
    }

    /// Non-central generators of the selector with `|index2| <= window`.
    pub fn generators(&self, window: i32) -> Vec<GeneratorId> {
        window_generators(window).into_iter().filter(|g| self.contains(g)).collect()
    }

    /// Pairs in the window whose bracket leaves the selector, with the offending term.
    pub fn closure_violations(&self, window: i32) -> Vec<(GeneratorId, GeneratorId, GeneratorId)> {
        let gens = self.generators(window);
        let mut out = Vec::new();
        for (a, x) in gens.iter().enumerate() {
            for y in &gens[a..] {
                for (g, _) in TwistedPresentation.bracket_raw(*x, *y).iter() {
                    if !g.is_central() && !self.contains(g) {
                        out.push((*x, *y, *g));
                    }
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Option<Self> {
        Some(match text.trim() {
            "b" | "t+" => SubalgebraSelector::Plus,
            "t0" => SubalgebraSelector::Zero,
            "t-" => SubalgebraSelector::Minus,
            "p" => SubalgebraSelector::P,
            "frak-t" => SubalgebraSelector::FrakT,
            "b+t0" => SubalgebraSelector::BPlusT0,
            other => {
                let u = other.strip_prefix("t(")?.strip_suffix(')')?;
                SubalgebraSelector::TU(crate::algebra::parse_index2(u)?)
            }
        })
    }
}

impl fmt::Display for SubalgebraSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubalgebraSelector::Plus => f.write_str("b"),
            SubalgebraSelector::Zero => f.write_str("t0"),
            SubalgebraSelector::Minus => f.write_str("t-"),
            SubalgebraSelector::P => f.write_str("p"),
            SubalgebraSelector::FrakT => f.write_str("frak-t"),
            SubalgebraSelector::BPlusT0 => f.write_str("b+t0"),
            SubalgebraSelector::TU(u2) => write!(f, "t({})", fmt_index2(*u2)),
        }
    }
}

/// All non-central twisted generators with `|index2| <= window`, in generator order.
pub fn window_generators(window: i32) -> Vec<GeneratorId> {
    let mut out = Vec::new();
    for kind in [Kind::L, Kind::T, Kind::G] {
        for i2 in -window..=window {
            if let Ok(g) = GeneratorId::new(kind, i2) {
                out.push(g);
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors_are_closed() {
        for s in [
            SubalgebraSelector::Plus,
            SubalgebraSelector::Zero,
            SubalgebraSelector::Minus,
            SubalgebraSelector::P,
            SubalgebraSelector::FrakT,
            SubalgebraSelector::BPlusT0,
            SubalgebraSelector::TU(1),
            SubalgebraSelector::TU(3),
            SubalgebraSelector::TU(5),
        ] {
            assert!(s.closure_violations(10).is_empty(), "{s}");
        }
    }

    #[test]
    fn names_round_trip() {
        for s in [SubalgebraSelector::FrakT, SubalgebraSelector::TU(3), SubalgebraSelector::BPlusT0] {
            assert_eq!(SubalgebraSelector::parse(&s.to_string()), Some(s));
        }
    }

    #[test]
    fn membership() {
        let t = |k, i| GeneratorId::of(k, i);
        assert!(SubalgebraSelector::P.contains(&t(Kind::T, 1)));
        assert!(!SubalgebraSelector::P.contains(&t(Kind::G, 1)));
        assert!(!SubalgebraSelector::FrakT.contains(&t(Kind::T, 1)));
        assert!(SubalgebraSelector::TU(3).contains(&t(Kind::T, 5)));
        assert!(!SubalgebraSelector::TU(3).contains(&t(Kind::T, 3)));
        assert!(!SubalgebraSelector::Plus.contains(&t(Kind::C, 0)));
    }
}
