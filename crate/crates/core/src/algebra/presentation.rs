use std::collections::BTreeMap;
use std::sync::Arc;

use super::{AlgebraError, Basis, GeneratorId, Kind, LinearCombo};
use crate::scalar::Scalar;

/// A structure-constant presentation: a total bracket on generator pairs of one basis.
pub trait Presentation: Send + Sync {
    fn name(&self) -> &str;
    fn basis(&self) -> Basis;
    /// Bracket of two generators already known to lie in `basis()`.
    fn bracket_raw(&self, x: GeneratorId, y: GeneratorId) -> LinearCombo;

    fn bracket(&self, x: GeneratorId, y: GeneratorId) -> Result<LinearCombo, AlgebraError> {
        for g in [x, y] {
            if !g.kind().in_basis(self.basis()) {
                return Err(AlgebraError::NotInBasis {
                    gen: g.to_string(),
                    basis: self.basis().name(),
                });
            }
        }
        Ok(self.bracket_raw(x, y))
    }

    /// Every generator of the basis with `|index2| <= window`, in print order.
    fn window(&self, window: i32) -> Vec<GeneratorId> {
        let basis = self.basis();
        let mut out = Vec::new();
        for kind in Kind::ALL.into_iter().filter(|k| k.in_basis(basis)) {
            for i2 in -window..=window {
                if let Ok(g) = GeneratorId::new(kind, i2) {
                    out.push(g);
                }
            }
        }
        out
    }
}

pub fn bracket_combo(
    p: &dyn Presentation,
    x: &LinearCombo,
    y: &LinearCombo,
) -> Result<LinearCombo, AlgebraError> {
    let mut out = LinearCombo::zero();
    for (gx, cx) in x.iter() {
        for (gy, cy) in y.iter() {
            let b = p.bracket(*gx, *gy)?;
            out.add_scaled(&b, &(cx * cy));
        }
    }
    Ok(out)
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

fn delta_c(i2x: i32, i2y: i32, kind: Kind, coeff: Scalar) -> LinearCombo {
    if i2x + i2y == 0 {
        LinearCombo::term(GeneratorId::of(kind, 0), coeff)
    } else {
        LinearCombo::zero()
    }
}

/// `[L_m, L_n]` with the Virasoro cocycle; `l` and `c` pick the twisted or untwisted kinds.
fn virasoro(a: i32, b: i32, l: Kind, c: Kind) -> LinearCombo {
    let mut out = LinearCombo::term(GeneratorId::of(l, a + b), q((a - b) as i64, 2));
    let m = (a / 2) as i64;
    out.add_scaled(&delta_c(a, b, c, q(m * m * m - m, 12)), &Scalar::one());
    out
}

/// `(m/2 - p)` with both indices doubled.
fn lg_coeff(i2m: i32, i2p: i32) -> Scalar {
    q((i2m - 2 * i2p) as i64, 4)
}

/// `(4p^2 - 1)/12` with `p` doubled, shared by every odd-odd central term.
fn odd_central(i2p: i32) -> Scalar {
    let p = i2p as i64;
    q(p * p - 1, 12)
}

fn neg_sign(sign_even: bool) -> Scalar {
    if sign_even {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

/// Fills the one ordered half of the bracket table; callers use super-antisymmetry for the rest.
fn by_antisymmetry(
    x: GeneratorId,
    y: GeneratorId,
    half: impl Fn(GeneratorId, GeneratorId) -> Option<LinearCombo>,
) -> LinearCombo {
    if x.is_central() || y.is_central() {
        return LinearCombo::zero();
    }
    if let Some(b) = half(x, y) {
        return b;
    }
    let b = half(y, x).expect("bracket table covers one ordering of every pair");
    let sign = if x.is_odd() && y.is_odd() { 1 } else { -1 };
    b.scaled(&Scalar::from_int(sign))
}

/// The twisted algebra in its defining basis `L, T, G, C`.
pub struct TwistedPresentation;

impl Presentation for TwistedPresentation {
    fn name(&self) -> &str {
        "twisted"
    }
    fn basis(&self) -> Basis {
        Basis::Twisted
    }
    fn bracket_raw(&self, x: GeneratorId, y: GeneratorId) -> LinearCombo {
        by_antisymmetry(x, y, |x, y| {
            let (a, b) = (x.index2(), y.index2());
            let g = |k, i2| GeneratorId::of(k, i2);
            Some(match (x.kind(), y.kind()) {
                (Kind::L, Kind::L) => virasoro(a, b, Kind::L, Kind::C),
                (Kind::L, Kind::T) => LinearCombo::term(g(Kind::T, a + b), q(-(b as i64), 2)),
                (Kind::T, Kind::T) => delta_c(a, b, Kind::C, q(a as i64, 6)),
                (Kind::L, Kind::G) => LinearCombo::term(g(Kind::G, a + b), lg_coeff(a, b)),
                (Kind::T, Kind::G) => LinearCombo::gen(g(Kind::G, a + b)),
                (Kind::G, Kind::G) => {
                    if (a + b) % 2 == 0 {
                        let mut out = LinearCombo::term(g(Kind::L, a + b), Scalar::from_int(2));
                        out.add_scaled(&delta_c(a, b, Kind::C, odd_central(a)), &Scalar::one());
                        out.scaled(&neg_sign(a % 2 == 0))
                    } else {
                        LinearCombo::term(g(Kind::T, a + b), q((a - b) as i64, 2))
                            .scaled(&neg_sign(a % 2 != 0))
                    }
                }
                _ => return None,
            })
        })
    }
}

/// The twisted algebra in the technical basis `G^+_p = G_p` (p integral),
/// `G^-_p = i G_p` (p half-odd).
pub struct TwistedPmPresentation;

impl Presentation for TwistedPmPresentation {
    fn name(&self) -> &str {
        "twisted-pm"
    }
    fn basis(&self) -> Basis {
        Basis::TwistedPm
    }
    fn bracket_raw(&self, x: GeneratorId, y: GeneratorId) -> LinearCombo {
        by_antisymmetry(x, y, |x, y| {
            let (a, b) = (x.index2(), y.index2());
            let g = |k, i2| GeneratorId::of(k, i2);
            let i = Scalar::i();
            Some(match (x.kind(), y.kind()) {
                (Kind::L, Kind::L) => virasoro(a, b, Kind::L, Kind::C),
                (Kind::L, Kind::T) => LinearCombo::term(g(Kind::T, a + b), q(-(b as i64), 2)),
                (Kind::T, Kind::T) => delta_c(a, b, Kind::C, q(a as i64, 6)),
                (Kind::L, k @ (Kind::TGPlus | Kind::TGMinus)) => LinearCombo::term(g(k, a + b), lg_coeff(a, b)),
                (Kind::T, Kind::TGPlus) => LinearCombo::term(g(Kind::TGMinus, a + b), -&i),
                (Kind::T, Kind::TGMinus) => LinearCombo::term(g(Kind::TGPlus, a + b), i),
                (Kind::TGPlus, Kind::TGPlus) | (Kind::TGMinus, Kind::TGMinus) => {
                    let mut out = LinearCombo::term(g(Kind::L, a + b), Scalar::from_int(2));
                    out.add_scaled(&delta_c(a, b, Kind::C, odd_central(a)), &Scalar::one());
                    out
                }
                (Kind::TGPlus, Kind::TGMinus) => {
                    LinearCombo::term(g(Kind::T, a + b), &q((a - b) as i64, 2) * &(-&i))
                }
                (Kind::TGMinus, Kind::TGPlus) => {
                    LinearCombo::term(g(Kind::T, a + b), &q((b - a) as i64, 2) * &(-&i))
                }
                _ => return None,
            })
        })
    }
}

/// The untwisted algebra in the `G^±` basis.
pub struct UntwistedPmPresentation;

impl Presentation for UntwistedPmPresentation {
    fn name(&self) -> &str {
        "untwisted-pm"
    }
    fn basis(&self) -> Basis {
        Basis::UntwistedPm
    }
    fn bracket_raw(&self, x: GeneratorId, y: GeneratorId) -> LinearCombo {
        by_antisymmetry(x, y, |x, y| {
            let (a, b) = (x.index2(), y.index2());
            let g = |k, i2| GeneratorId::of(k, i2);
            Some(match (x.kind(), y.kind()) {
                (Kind::Lu, Kind::Lu) => virasoro(a, b, Kind::Lu, Kind::Cu),
                (Kind::Lu, Kind::J) => LinearCombo::term(g(Kind::J, a + b), q(-(b as i64), 2)),
                (Kind::J, Kind::J) => delta_c(a, b, Kind::Cu, q(a as i64, 6)),
                (Kind::Lu, k @ (Kind::GPlus | Kind::GMinus)) => LinearCombo::term(g(k, a + b), lg_coeff(a, b)),
                (Kind::J, Kind::GPlus) => LinearCombo::gen(g(Kind::GPlus, a + b)),
                (Kind::J, Kind::GMinus) => LinearCombo::term(g(Kind::GMinus, a + b), Scalar::from_int(-1)),
                (Kind::GPlus, Kind::GPlus) | (Kind::GMinus, Kind::GMinus) => LinearCombo::zero(),
                (Kind::GPlus, Kind::GMinus) => {
                    let mut out = LinearCombo::term(g(Kind::Lu, a + b), Scalar::from_int(2));
                    out.add_term(g(Kind::J, a + b), &q((a - b) as i64, 2));
                    out.add_scaled(&delta_c(a, b, Kind::Cu, odd_central(a)), &Scalar::one());
                    out
                }
                _ => return None,
            })
        })
    }
}

/// The untwisted algebra in the `G^(1), G^(2)` basis.
pub struct Untwisted12Presentation;

impl Presentation for Untwisted12Presentation {
    fn name(&self) -> &str {
        "untwisted-12"
    }
    fn basis(&self) -> Basis {
        Basis::Untwisted12
    }
    fn bracket_raw(&self, x: GeneratorId, y: GeneratorId) -> LinearCombo {
        by_antisymmetry(x, y, |x, y| {
            let (a, b) = (x.index2(), y.index2());
            let g = |k, i2| GeneratorId::of(k, i2);
            let i = Scalar::i();
            Some(match (x.kind(), y.kind()) {
                (Kind::Lu, Kind::Lu) => virasoro(a, b, Kind::Lu, Kind::Cu),
                (Kind::Lu, Kind::J) => LinearCombo::term(g(Kind::J, a + b), q(-(b as i64), 2)),
                (Kind::J, Kind::J) => delta_c(a, b, Kind::Cu, q(a as i64, 6)),
                (Kind::Lu, k @ (Kind::G1 | Kind::G2)) => LinearCombo::term(g(k, a + b), lg_coeff(a, b)),
                (Kind::J, Kind::G1) => LinearCombo::term(g(Kind::G2, a + b), -&i),
                (Kind::J, Kind::G2) => LinearCombo::term(g(Kind::G1, a + b), i),
                (Kind::G1, Kind::G1) | (Kind::G2, Kind::G2) => {
                    let mut out = LinearCombo::term(g(Kind::Lu, a + b), Scalar::from_int(2));
                    out.add_scaled(&delta_c(a, b, Kind::Cu, odd_central(a)), &Scalar::one());
                    out
                }
                (Kind::G1, Kind::G2) => LinearCombo::term(g(Kind::J, a + b), &q((a - b) as i64, 2) * &(-&i)),
                (Kind::G2, Kind::G1) => LinearCombo::term(g(Kind::J, a + b), &q((b - a) as i64, 2) * &(-&i)),
                _ => return None,
            })
        })
    }
}

/// Wraps a presentation and drops the central term of every `[L_m, L_{-m}]`.
/// Jacobi and module-axiom checks must reject it.
pub struct DropVirasoroCentral<P>(pub P);

impl<P: Presentation> Presentation for DropVirasoroCentral<P> {
    fn name(&self) -> &str {
        "corrupted"
    }
    fn basis(&self) -> Basis {
        self.0.basis()
    }
    fn bracket_raw(&self, x: GeneratorId, y: GeneratorId) -> LinearCombo {
        let b = self.0.bracket_raw(x, y);
        let virasoro_pair = matches!((x.kind(), y.kind()), (Kind::L, Kind::L) | (Kind::Lu, Kind::Lu));
        if !virasoro_pair {
            return b;
        }
        b.iter().filter(|(g, _)| !g.is_central()).map(|(g, c)| (*g, c.clone())).collect()
    }
}

/// Name-keyed registry of presentations, selected at runtime.
pub struct PresentationRegistry {
    entries: BTreeMap<String, Arc<dyn Presentation>>,
}

impl PresentationRegistry {
    pub fn empty() -> Self {
        PresentationRegistry { entries: BTreeMap::new() }
    }

    pub fn with_presets() -> Self {
        let mut r = Self::empty();
        r.register(Arc::new(TwistedPresentation));
        r.register(Arc::new(TwistedPmPresentation));
        r.register(Arc::new(UntwistedPmPresentation));
        r.register(Arc::new(Untwisted12Presentation));
        r
    }

    pub fn register(&mut self, p: Arc<dyn Presentation>) {
        self.entries.insert(p.name().to_string(), p);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn Presentation>, AlgebraError> {
        self.entries
            .get(name)
            .cloned()
            .ok_or_else(|| AlgebraError::UnknownPresentation(name.to_string()))
    }

    pub fn for_basis(&self, basis: Basis) -> Result<Arc<dyn Presentation>, AlgebraError> {
        self.get(basis.name())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}

/// The preset presentation for a basis.
pub fn preset(basis: Basis) -> &'static dyn Presentation {
    match basis {
        Basis::Twisted => &TwistedPresentation,
        Basis::TwistedPm => &TwistedPmPresentation,
        Basis::UntwistedPm => &UntwistedPmPresentation,
        Basis::Untwisted12 => &Untwisted12Presentation,
    }
}

/// The basis shared by every generator of a combination.
pub fn infer_basis(items: &[&LinearCombo]) -> Result<Option<Basis>, AlgebraError> {
    let candidates = [Basis::Twisted, Basis::TwistedPm, Basis::UntwistedPm, Basis::Untwisted12];
    let gens: Vec<GeneratorId> = items.iter().flat_map(|c| c.generators().copied()).collect();
    if gens.is_empty() {
        return Ok(None);
    }
    candidates
        .into_iter()
        .find(|b| gens.iter().all(|g| g.kind().in_basis(*b)))
        .map(Some)
        .ok_or_else(|| AlgebraError::Mixed(gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GeneratorId {
        s.parse().unwrap()
    }

    fn br(x: &str, y: &str) -> String {
        let p = TwistedPresentation;
        p.bracket(g(x), g(y)).unwrap().to_string()
    }

    #[test]
    fn twisted_examples() {
        assert_eq!(br("L[2]", "L[-2]"), "4*L[0] + 1/2*C");
        assert_eq!(br("G[1/2]", "G[-1/2]"), "-2*L[0]");
        assert_eq!(br("G[0]", "G[0]"), "2*L[0] - 1/12*C");
        assert_eq!(br("G[1]", "G[-1/2]"), "-3/2*T[1/2]");
        assert_eq!(br("T[3/2]", "T[-3/2]"), "1/2*C");
        assert_eq!(br("C", "G[1]"), "0");
    }

    #[test]
    fn untwisted_pm_cross_bracket() {
        let p = UntwistedPmPresentation;
        let b = p.bracket(g("G+[1/2]"), g("G-[-1/2]")).unwrap();
        assert_eq!(b.to_string(), "2*Lu[0] + J[0]");
        let b = p.bracket(g("G+[3/2]"), g("G-[-3/2]")).unwrap();
        assert_eq!(b.to_string(), "2*Lu[0] + 3*J[0] + 2/3*Cu");
    }

    #[test]
    fn mixed_basis_rejected() {
        let p = TwistedPresentation;
        assert!(p.bracket(g("L[1]"), g("J[0]")).is_err());
    }

    #[test]
    fn registry_lookup() {
        let r = PresentationRegistry::with_presets();
        assert_eq!(r.names().count(), 4);
        assert_eq!(r.get("untwisted-12").unwrap().basis(), Basis::Untwisted12);
        assert!(r.get("nope").is_err());
    }
}
