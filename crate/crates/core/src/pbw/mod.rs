//! PBW straightening and induced-module actions.
//!
//! [`InducedModule`] is generic over a presentation, a letter [`Template`] and a
//! base module. Internally every word is a standard PBW monomial: `L` letters are
//! kept and odd exponents are at most 1. [`TwistedInduced`] converts to and from
//! the exponent-vector basis `w_i`, where `L_{-m} = (-1)^m G_{-m/2}^2` for `m >= 1`
//! and `L_0 = G_0^2 + c/24` (from `[G_0, G_0] = 2L_0 - C/12`).

mod engine;
mod templates;
mod vector;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

pub(crate) use engine::add_into;
pub use engine::{fmt_word, BaseModule, Element, InducedModule, Rank, Template, Word};
pub use templates::{
    twisted_negative, twisted_nonpositive, twisted_zero_modes, untwisted_negative, ordered_letters,
};
pub use vector::{parse_element, print_element, supp_deg, ModuleVector, SuppDeg};

use crate::algebra::{GeneratorId, Kind, LinearCombo, TwistedPresentation};
use crate::index::{generator_slot, slot_generator, ExponentVector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("truncation exceeded: {0}")]
    Truncation(String),
    #[error("generator {0} does not act on this module")]
    WrongAlgebra(String),
    #[error("generator {gen} is neither a letter nor absorbed by the base module `{base}`")]
    NotAbsorbed { gen: String, base: String },
    #[error("straightening takes generators of degree <= 0, got {0}")]
    PositiveDegree(String),
    #[error("deg(w) is defined only for w != 0")]
    ZeroVector,
    #[error("{0}")]
    Invalid(String),
}

/// Binomial coefficient as a scalar.
pub(crate) fn binomial(n: u32, k: u32) -> Scalar {
    let mut num = Scalar::one();
    for j in 0..k {
        num = &num * &Scalar::ratio((n - j) as i64, (j + 1) as i64);
    }
    num
}

/// A base module that rejects every absorbed generator; used where the word
/// alphabet is closed under brackets.
struct NoAbsorption;

impl BaseModule for NoAbsorption {
    fn dim(&self) -> usize {
        1
    }
    fn label(&self, _: usize) -> String {
        "1".into()
    }
    fn act(&self, x: GeneratorId, _: usize) -> Result<Vec<(usize, Scalar)>, ModuleError> {
        Err(ModuleError::PositiveDegree(x.to_string()))
    }
    fn parity(&self, _: usize) -> Option<u8> {
        Some(0)
    }
}

/// Converts a word over `T_{r<0}`, `G_{p<=0}`, `L_{m<=0}` into exponent vectors.
pub fn word_to_external(word: &Word, c: &Scalar) -> Vec<(ExponentVector, Scalar)> {
    let mut base = ExponentVector::zero();
    let mut coeff = Scalar::one();
    let mut l0 = 0u32;
    for &(g, k) in word {
        match g.kind() {
            Kind::L if g.index2() == 0 => l0 = k,
            Kind::L => {
                let m = (-g.index2() / 2) as u32;
                base.add_at(2 * m + 2, 2 * k);
                if (m * k) % 2 == 1 {
                    coeff = -coeff;
                }
            }
            _ => base.add_at(generator_slot(&g).expect("non-positive T or G letter"), k),
        }
    }
    if l0 == 0 {
        return vec![(base, coeff)];
    }
    let shift = c * &Scalar::ratio(1, 24);
    (0..=l0)
        .map(|j| {
            let mut v = base.clone();
            v.add_at(2, 2 * j);
            let w = &(&coeff * &binomial(l0, j)) * &shift.pow(l0 - j);
            (v, w)
        })
        .filter(|(_, w)| !w.is_zero())
        .collect()
}

/// The twisted induced module `Ind_{b,c}(M)` in the `w_i ⊗ m` basis.
pub struct TwistedInduced {
    engine: InducedModule,
    to_internal: RwLock<HashMap<(ExponentVector, usize), Arc<Element>>>,
    act_cache: RwLock<HashMap<(GeneratorId, ExponentVector, usize), Arc<ModuleVector>>>,
    labels: Arc<Vec<String>>,
}

impl TwistedInduced {
    /// Induction from `b = T_+` with letters `T_{<=0}`.
    pub fn new(base: Arc<dyn BaseModule>, c: Scalar) -> Self {
        Self::with_template(base, c, twisted_nonpositive())
    }

    /// Induction from `B = b + T_0` with letters `T_{<0}`; exponent vectors have no slot 2.
    pub fn from_b_plus_t0(base: Arc<dyn BaseModule>, c: Scalar) -> Self {
        Self::with_template(base, c, twisted_negative())
    }

    fn with_template(base: Arc<dyn BaseModule>, c: Scalar, template: Template) -> Self {
        let labels = Arc::new((0..base.dim()).map(|i| base.label(i)).collect());
        TwistedInduced {
            engine: InducedModule::new(&TwistedPresentation, template, base, c),
            to_internal: RwLock::new(HashMap::new()),
            act_cache: RwLock::new(HashMap::new()),
            labels,
        }
    }

    pub fn engine(&self) -> &InducedModule {
        &self.engine
    }

    pub fn labels(&self) -> &Arc<Vec<String>> {
        &self.labels
    }

    pub fn zero(&self) -> ModuleVector {
        ModuleVector::new(self.labels.clone())
    }

    /// `w_i ⊗ m_j`
    pub fn basis(&self, i: &ExponentVector, j: usize) -> ModuleVector {
        let mut v = self.zero();
        v.add_term(i.clone(), j, &Scalar::one());
        v
    }

    pub fn from_internal(&self, e: &Element) -> ModuleVector {
        let mut v = self.zero();
        for ((w, j), c) in e {
            for (ev, k) in word_to_external(w, self.engine.central_charge()) {
                v.add_term(ev, *j, &(c * &k));
            }
        }
        v
    }

    fn internal_basis(&self, i: &ExponentVector, j: usize) -> Result<Arc<Element>, ModuleError> {
        let key = (i.clone(), j);
        if let Some(hit) = self.to_internal.read().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let mut letters = Vec::new();
        for &(slot, e) in i.entries().iter().rev() {
            for _ in 0..e {
                letters.push(slot_generator(slot));
            }
        }
        let value = Arc::new(self.engine.act_word(&letters, &self.engine.unit(j))?);
        Ok(self.to_internal.write().expect("cache lock").entry(key).or_insert(value).clone())
    }

    pub fn to_internal(&self, v: &ModuleVector) -> Result<Element, ModuleError> {
        let mut out = Element::new();
        for ((i, j), c) in v.terms() {
            add_into(&mut out, &*self.internal_basis(i, *j)?, c);
        }
        Ok(out)
    }

    fn act_basis(&self, x: GeneratorId, i: &ExponentVector, j: usize) -> Result<Arc<ModuleVector>, ModuleError> {
        let key = (x, i.clone(), j);
        if let Some(hit) = self.act_cache.read().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let internal = self.internal_basis(i, j)?;
        let acted = self.engine.act(x, &internal)?;
        let value = Arc::new(self.from_internal(&acted));
        Ok(self.act_cache.write().expect("cache lock").entry(key).or_insert(value).clone())
    }

    pub fn act(&self, x: GeneratorId, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
        let mut out = self.zero();
        for ((i, j), c) in v.terms() {
            out.add_scaled(&*self.act_basis(x, i, *j)?, c);
        }
        Ok(out)
    }

    /// Applies `xs` right to left.
    pub fn act_word(&self, xs: &[GeneratorId], v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
        let mut cur = v.clone();
        for x in xs.iter().rev() {
            cur = self.act(*x, &cur)?;
        }
        Ok(cur)
    }

    pub fn act_combo(&self, x: &LinearCombo, v: &ModuleVector) -> Result<ModuleVector, ModuleError> {
        let mut out = self.zero();
        for (g, c) in x.iter() {
            out.add_scaled(&self.act(*g, v)?, c);
        }
        Ok(out)
    }

    pub fn parse_vector(&self, text: &str) -> Result<ModuleVector, crate::parse::ParseError> {
        ModuleVector::parse(text, self.labels.clone())
    }
}

/// Expands a word of non-positive generators in the `w_i` basis, with `C`
/// replaced by `c`. Independent of how the word is associated.
pub fn straighten_negative(word: &[GeneratorId], c: &Scalar) -> Result<BTreeMap<ExponentVector, Scalar>, ModuleError> {
    if let Some(g) = word.iter().find(|g| g.degree2() > 0) {
        return Err(ModuleError::PositiveDegree(g.to_string()));
    }
    if let Some(g) = word.iter().find(|g| !g.kind().in_basis(crate::algebra::Basis::Twisted)) {
        return Err(ModuleError::WrongAlgebra(g.to_string()));
    }
    let m = InducedModule::new(&TwistedPresentation, twisted_nonpositive(), Arc::new(NoAbsorption), c.clone());
    let e = m.act_word(word, &m.unit(0))?;
    let mut out: BTreeMap<ExponentVector, Scalar> = BTreeMap::new();
    for ((w, _), coeff) in &e {
        for (ev, k) in word_to_external(w, c) {
            let entry = out.entry(ev).or_default();
            *entry += &(coeff * &k);
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_word;

    fn straighten(text: &str) -> String {
        let r = straighten_negative(&parse_word(text).unwrap(), &Scalar::zero()).unwrap();
        let parts: Vec<String> = r.iter().rev().map(|(k, v)| format!("{v}*w{k}")).collect();
        parts.join(" + ")
    }

    #[test]
    fn straightening_examples() {
        assert_eq!(straighten("T[-1/2] G[-1/2]"), "1*w{1:1, 4:1} + 1*w{6:1}");
        assert_eq!(straighten("L[-1]"), "-1*w{4:2}");
        assert_eq!(straighten("G[-1/2] G[-1/2]"), "1*w{4:2}");
        assert_eq!(straighten("G[-1] T[-3/2] G[0] T[-1/2]"), "1*w{1:1, 2:1, 3:1, 6:1}");
        assert!(straighten_negative(&parse_word("L[1]").unwrap(), &Scalar::zero()).is_err());
    }

    #[test]
    fn l0_uses_shifted_square() {
        let c = Scalar::from_int(24);
        let r = straighten_negative(&parse_word("L[0]").unwrap(), &c).unwrap();
        assert_eq!(r.get(&"{2:2}".parse().unwrap()), Some(&Scalar::one()));
        assert_eq!(r.get(&ExponentVector::zero()), Some(&Scalar::one()));
    }
}
