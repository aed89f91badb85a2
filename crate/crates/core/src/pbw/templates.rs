use crate::algebra::{GeneratorId, Kind};

use super::{Rank, Template};

/// Rank of a non-positive twisted letter. `L_{-m}` shares the slot of
/// `G_{-m/2}` and sits immediately left of it; the two commute.
fn twisted_rank(g: &GeneratorId) -> Option<Rank> {
    let i2 = g.index2();
    match g.kind() {
        Kind::T if i2 < 0 => Some((-i2, 0)),
        Kind::G if i2 <= 0 => Some((2 - 2 * i2, 0)),
        Kind::L if i2 <= 0 => Some((2 - i2, 1)),
        _ => None,
    }
}

/// Letters `T_{<=0}`, matching the monomials `w_i`.
pub fn twisted_nonpositive() -> Template {
    Template::new("twisted-nonpositive", twisted_rank)
}

/// Letters `T_{<0}`.
pub fn twisted_negative() -> Template {
    Template::new("twisted-negative", |g| if g.degree2() < 0 { twisted_rank(g) } else { None })
}

/// Letters `L_0, G_0`.
pub fn twisted_zero_modes() -> Template {
    Template::new("twisted-zero-modes", |g| if g.degree2() == 0 { twisted_rank(g) } else { None })
}

/// Letters of the negative part of the untwisted algebra in the `±` basis.
pub fn untwisted_negative() -> Template {
    Template::new("untwisted-negative", |g| {
        if g.degree2() >= 0 {
            return None;
        }
        let sub = match g.kind() {
            Kind::Lu => 3,
            Kind::J => 2,
            Kind::GPlus => 1,
            Kind::GMinus => 0,
            _ => return None,
        };
        Some((-g.index2(), sub))
    })
}

/// A finite alphabet ordered left to right as given.
pub fn ordered_letters(name: &str, letters: Vec<GeneratorId>) -> Template {
    let n = letters.len() as i32;
    Template::new(name, move |g| letters.iter().position(|l| l == g).map(|p| (n - p as i32, 0)))
}
