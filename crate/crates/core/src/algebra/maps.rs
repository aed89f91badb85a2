use super::{bracket_combo, AlgebraError, Basis, GeneratorId, Kind, LinearCombo, Presentation};
use crate::scalar::Scalar;

/// A linear map on generators, extended linearly to combinations.
pub trait GeneratorMap: Send + Sync {
    fn source(&self) -> Basis;
    fn target(&self) -> Basis;
    fn image(&self, g: GeneratorId) -> LinearCombo;

    fn apply(&self, x: &LinearCombo) -> Result<LinearCombo, AlgebraError> {
        let mut out = LinearCombo::zero();
        for (g, c) in x.iter() {
            if !g.kind().in_basis(self.source()) {
                return Err(AlgebraError::NotInBasis {
                    gen: g.to_string(),
                    basis: self.source().name(),
                });
            }
            out.add_scaled(&self.image(*g), c);
        }
        Ok(out)
    }
}

/// `L_m -> L_m, J_n -> -J_n, G^±_p -> G^∓_p` on the untwisted `±` basis.
pub struct Psi;

impl GeneratorMap for Psi {
    fn source(&self) -> Basis {
        Basis::UntwistedPm
    }
    fn target(&self) -> Basis {
        Basis::UntwistedPm
    }
    fn image(&self, g: GeneratorId) -> LinearCombo {
        let i2 = g.index2();
        match g.kind() {
            Kind::J => LinearCombo::term(g, Scalar::from_int(-1)),
            Kind::GPlus => LinearCombo::gen(GeneratorId::of(Kind::GMinus, i2)),
            Kind::GMinus => LinearCombo::gen(GeneratorId::of(Kind::GPlus, i2)),
            _ => LinearCombo::gen(g),
        }
    }
}

/// `J -> J, G^± -> G^∓`: not an automorphism, kept as a negative fixture.
pub struct PsiWrongSign;

impl GeneratorMap for PsiWrongSign {
    fn source(&self) -> Basis {
        Basis::UntwistedPm
    }
    fn target(&self) -> Basis {
        Basis::UntwistedPm
    }
    fn image(&self, g: GeneratorId) -> LinearCombo {
        match g.kind() {
            Kind::J => LinearCombo::gen(g),
            _ => Psi.image(g),
        }
    }
}

pub struct Identity(pub Basis);

impl GeneratorMap for Identity {
    fn source(&self) -> Basis {
        self.0
    }
    fn target(&self) -> Basis {
        self.0
    }
    fn image(&self, g: GeneratorId) -> LinearCombo {
        LinearCombo::gen(g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `G^± = (G^(1) ∓ i G^(2))/√2`
    PmTo12,
    /// `G^(1) = (G^+ + G^-)/√2`, `G^(2) = i(G^+ - G^-)/√2`
    TwelveToPm,
    /// Defining twisted basis to the technical one: `G_p = G^+_p` or `G_p = -i G^-_p`.
    TwistedPm,
    /// Technical twisted basis back to the defining one.
    TwistedPmInv,
}

impl Direction {
    pub fn parse(name: &str) -> Option<Direction> {
        match name {
            "pm_to_12" => Some(Direction::PmTo12),
            "12_to_pm" => Some(Direction::TwelveToPm),
            "twisted_pm" => Some(Direction::TwistedPm),
            "twisted_pm_inv" => Some(Direction::TwistedPmInv),
            _ => None,
        }
    }
}

impl GeneratorMap for Direction {
    fn source(&self) -> Basis {
        match self {
            Direction::PmTo12 => Basis::UntwistedPm,
            Direction::TwelveToPm => Basis::Untwisted12,
            Direction::TwistedPm => Basis::Twisted,
            Direction::TwistedPmInv => Basis::TwistedPm,
        }
    }
    fn target(&self) -> Basis {
        match self {
            Direction::PmTo12 => Basis::Untwisted12,
            Direction::TwelveToPm => Basis::UntwistedPm,
            Direction::TwistedPm => Basis::TwistedPm,
            Direction::TwistedPmInv => Basis::Twisted,
        }
    }
    fn image(&self, g: GeneratorId) -> LinearCombo {
        let i2 = g.index2();
        let half_r2 = &Scalar::sqrt2() * &Scalar::ratio(1, 2);
        let i = Scalar::i();
        let gen = |k| GeneratorId::of(k, i2);
        let pair = |k1, c1: Scalar, k2, c2: Scalar| {
            let mut out = LinearCombo::term(gen(k1), c1);
            out.add_term(gen(k2), &c2);
            out
        };
        match (self, g.kind()) {
            (Direction::PmTo12, Kind::GPlus) => pair(Kind::G1, half_r2.clone(), Kind::G2, -&(&i * &half_r2)),
            (Direction::PmTo12, Kind::GMinus) => pair(Kind::G1, half_r2.clone(), Kind::G2, &i * &half_r2),
            (Direction::TwelveToPm, Kind::G1) => pair(Kind::GPlus, half_r2.clone(), Kind::GMinus, half_r2),
            (Direction::TwelveToPm, Kind::G2) => {
                pair(Kind::GPlus, &i * &half_r2, Kind::GMinus, -&(&i * &half_r2))
            }
            (Direction::TwistedPm, Kind::G) if i2 % 2 == 0 => LinearCombo::gen(gen(Kind::TGPlus)),
            (Direction::TwistedPm, Kind::G) => LinearCombo::term(gen(Kind::TGMinus), -&i),
            (Direction::TwistedPmInv, Kind::TGPlus) => LinearCombo::gen(gen(Kind::G)),
            (Direction::TwistedPmInv, Kind::TGMinus) => LinearCombo::term(gen(Kind::G), i),
            _ => LinearCombo::gen(g),
        }
    }
}

pub fn psi(x: &LinearCombo) -> Result<LinearCombo, AlgebraError> {
    Psi.apply(x)
}

pub fn substitute_basis(x: &LinearCombo, direction: Direction) -> Result<LinearCombo, AlgebraError> {
    direction.apply(x)
}

#[derive(Debug, Clone)]
pub struct MorphismViolation {
    pub pair: (GeneratorId, GeneratorId),
    pub image_of_bracket: LinearCombo,
    pub bracket_of_images: LinearCombo,
}

#[derive(Debug, Clone)]
pub struct MorphismReport {
    pub checked: usize,
    pub violations: Vec<MorphismViolation>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `f([x,y]) = [f(x), f(y)]` for every generator pair of the source window.
pub fn verify_morphism(
    map: &dyn GeneratorMap,
    src: &dyn Presentation,
    dst: &dyn Presentation,
    window: i32,
) -> Result<MorphismReport, AlgebraError> {
    let gens = src.window(window);
    let mut violations = Vec::new();
    let mut checked = 0;
    for &x in &gens {
        let fx = map.apply(&LinearCombo::gen(x))?;
        for &y in &gens {
            let fy = map.apply(&LinearCombo::gen(y))?;
            let lhs = map.apply(&src.bracket(x, y)?)?;
            let rhs = bracket_combo(dst, &fx, &fy)?;
            checked += 1;
            if lhs != rhs {
                violations.push(MorphismViolation {
                    pair: (x, y),
                    image_of_bracket: lhs,
                    bracket_of_images: rhs,
                });
            }
        }
    }
    Ok(MorphismReport { checked, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preset;

    fn g(s: &str) -> GeneratorId {
        s.parse().unwrap()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&LinearCombo::gen(g("J[3]"))).unwrap().to_string(), "-J[3]");
        let x = LinearCombo::gen(g("G+[1/2]"));
        assert_eq!(psi(&psi(&x).unwrap()).unwrap(), x);
        let mut y = LinearCombo::gen(g("Lu[2]"));
        y.add_term(g("G-[3/2]"), &Scalar::i());
        assert_eq!(psi(&y).unwrap().to_string(), "Lu[2] + i*G+[3/2]");
        assert!(psi(&LinearCombo::gen(g("L[1]"))).is_err());
    }

    #[test]
    fn twelve_to_pm_of_g1() {
        let x = substitute_basis(&LinearCombo::gen(g("G1[1/2]")), Direction::TwelveToPm).unwrap();
        assert_eq!(x.to_string(), "1/2*r2*G+[1/2] + 1/2*r2*G-[1/2]");
    }

    #[test]
    fn wrong_psi_fails_on_j0_gplus() {
        let pm = preset(Basis::UntwistedPm);
        let report = verify_morphism(&PsiWrongSign, pm, pm, 1).unwrap();
        assert!(report.violations.iter().any(|v| v.pair == (g("J[0]"), g("G+[1/2]"))));
    }

    #[test]
    fn pulled_back_cross_bracket() {
        let pm = preset(Basis::UntwistedPm);
        let a = substitute_basis(&LinearCombo::gen(g("G1[1/2]")), Direction::TwelveToPm).unwrap();
        let b = substitute_basis(&LinearCombo::gen(g("G2[-1/2]")), Direction::TwelveToPm).unwrap();
        let pulled = bracket_combo(pm, &a, &b).unwrap();
        let back = substitute_basis(&pulled, Direction::PmTo12).unwrap();
        assert_eq!(back.to_string(), "-i*J[0]");
    }
}
