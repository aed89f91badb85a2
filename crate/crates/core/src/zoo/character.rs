use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::algebra::{GeneratorId, Kind, Presentation, TwistedPresentation};
use crate::pbw::{fmt_word, ordered_letters, BaseModule, Element, InducedModule, ModuleError, Word};
use crate::scalar::Scalar;

use super::{SubalgebraSelector, ZooError};

/// A character `phi` of a subalgebra `K`, given by its values on generators.
pub type Character = BTreeMap<GeneratorId, Scalar>;

/// The one-dimensional `K`-module `C_phi` spanned by `v0`.
pub struct CharacterBase {
    kernel: SubalgebraSelector,
    phi: Character,
    graded: bool,
}

impl BaseModule for CharacterBase {
    fn dim(&self) -> usize {
        1
    }

    fn label(&self, _: usize) -> String {
        "v0".into()
    }

    fn act(&self, x: GeneratorId, _: usize) -> Result<Vec<(usize, Scalar)>, ModuleError> {
        if !self.kernel.contains(&x) {
            return Err(ModuleError::NotAbsorbed { gen: x.to_string(), base: format!("C_phi over {}", self.kernel) });
        }
        Ok(self.phi.get(&x).map(|c| vec![(0, c.clone())]).unwrap_or_default())
    }

    fn parity(&self, _: usize) -> Option<u8> {
        self.graded.then_some(0)
    }
}

/// Checks that `phi` is a character of `kernel`: its support lies in the even
/// part of `kernel` and it vanishes on every bracket `[x, y]` of generators
/// within the window. Brackets of positive generators carry no central term.
pub fn validate_character(kernel: SubalgebraSelector, phi: &Character, window: i32) -> Result<(), ZooError> {
    for (g, v) in phi {
        if v.is_zero() {
            continue;
        }
        if !kernel.contains(g) {
            return Err(ZooError::Invalid(format!("phi({g}) = {v} but {g} is not in {kernel}")));
        }
        if g.is_odd() {
            return Err(ZooError::Invalid(format!("phi({g}) = {v} on an odd generator")));
        }
    }
    let reach = phi.keys().map(|g| g.index2()).max().unwrap_or(0).max(window);
    let gens = kernel.generators(reach);
    for (a, x) in gens.iter().enumerate() {
        for y in &gens[a..] {
            if x.index2() + y.index2() > reach {
                continue;
            }
            let br = TwistedPresentation.bracket_raw(*x, *y);
            let value = br.iter().fold(Scalar::zero(), |acc, (g, c)| match phi.get(g) {
                Some(p) => &acc + &(c * p),
                None => acc,
            });
            if !value.is_zero() {
                return Err(ZooError::Invalid(format!("phi([{x},{y}]) = phi({br}) = {value}, expected 0")));
            }
        }
    }
    Ok(())
}

/// `Ind_K^b C_phi` for `b = T_+` and a subalgebra `K` of finite codimension,
/// truncated to words of doubled weight `<= max_weight2` and length `<= max_length`.
///
/// Basis labels spell the PBW word, e.g. `T[1/2]^2.G[1/2].v0`. Acting past the
/// truncation is an error rather than a silent zero.
pub struct CharacterInduced {
    engine: InducedModule,
    basis: Vec<Word>,
    index: HashMap<Word, usize>,
    graded: bool,
    max_weight2: i32,
    max_length: u32,
}

impl CharacterInduced {
    /// `letters` must span a complement of `kernel` in `b`, leftmost first.
    pub fn new(
        kernel: SubalgebraSelector,
        letters: Vec<GeneratorId>,
        phi: Character,
        c: Scalar,
        graded: bool,
        max_weight2: i32,
        max_length: u32,
    ) -> Result<Self, ZooError> {
        for g in &letters {
            if g.degree2() <= 0 || kernel.contains(g) || g.kind() == Kind::C {
                return Err(ZooError::Invalid(format!("{g} is not a complement letter for {kernel} in b")));
            }
        }
        let seed = Arc::new(CharacterBase { kernel, phi, graded });
        let template = ordered_letters(&format!("b/{kernel}"), letters.clone());
        let engine = InducedModule::new(&TwistedPresentation, template, seed, c);
        let mut basis = Vec::new();
        words(&letters, 0, max_weight2, max_length, &mut Vec::new(), &mut basis);
        basis.sort_by(|a, b| weight2(a).cmp(&weight2(b)).then(len(a).cmp(&len(b))).then(b.cmp(a)));
        let index = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(CharacterInduced { engine, basis, index, graded, max_weight2, max_length })
    }

    pub fn engine(&self) -> &InducedModule {
        &self.engine
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.basis[i]
    }

    pub fn truncation(&self) -> (i32, u32) {
        (self.max_weight2, self.max_length)
    }

    fn to_basis(&self, e: &Element) -> Result<Vec<(usize, Scalar)>, ModuleError> {
        let mut out = Vec::new();
        for ((w, _), c) in e {
            let j = self.index.get(w).ok_or_else(|| {
                ModuleError::Truncation(format!(
                    "`{}` exceeds weight {}/2, length {}",
                    fmt_word(w),
                    self.max_weight2,
                    self.max_length
                ))
            })?;
            out.push((*j, c.clone()));
        }
        out.sort_by_key(|(j, _)| *j);
        Ok(out)
    }
}

fn weight2(w: &Word) -> i32 {
    w.iter().map(|(g, k)| g.degree2() * *k as i32).sum()
}

fn len(w: &Word) -> u32 {
    w.iter().map(|(_, k)| *k).sum()
}

fn words(letters: &[GeneratorId], from: usize, w2: i32, l: u32, cur: &mut Word, out: &mut Vec<Word>) {
    if from == letters.len() {
        out.push(cur.clone());
        return;
    }
    let g = letters[from];
    let cap = if g.is_odd() { 1 } else { l };
    let mut k = 0;
    while k <= cap && k <= l && (k as i32) * g.degree2() <= w2 {
        if k > 0 {
            cur.push((g, k));
        }
        words(letters, from + 1, w2 - k as i32 * g.degree2(), l - k, cur, out);
        if k > 0 {
            cur.pop();
        }
        k += 1;
    }
}

impl BaseModule for CharacterInduced {
    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn label(&self, i: usize) -> String {
        let mut s: String = self.basis[i]
            .iter()
            .map(|(g, k)| if *k == 1 { format!("{g}.") } else { format!("{g}^{k}.") })
            .collect();
        s.push_str("v0");
        s
    }

    fn act(&self, x: GeneratorId, i: usize) -> Result<Vec<(usize, Scalar)>, ModuleError> {
        if x.is_central() {
            return Ok(vec![(i, self.engine.central_charge().clone())]);
        }
        if x.kind().algebra() != crate::algebra::Algebra::Twisted || x.degree2() <= 0 {
            return Err(ModuleError::WrongAlgebra(x.to_string()));
        }
        let mut unit = Element::new();
        unit.insert((self.basis[i].clone(), 0), Scalar::one());
        let e = self.engine.act(x, &unit)?;
        self.to_basis(&e)
    }

    fn parity(&self, i: usize) -> Option<u8> {
        self.graded.then(|| self.basis[i].iter().filter(|(g, _)| g.is_odd()).map(|(_, k)| *k as u8).sum::<u8>() % 2)
    }
}

/// The nonzero generators of `b` on which `phi` may take values for the given kernel.
pub fn character_from_pairs(pairs: &[(GeneratorId, Scalar)]) -> Character {
    pairs.iter().filter(|(_, v)| !v.is_zero()).cloned().collect()
}

pub(crate) fn reject_trivial(phi: &Character, what: &str) -> Result<(), ZooError> {
    if phi.values().all(Scalar::is_zero) {
        return Err(ZooError::Invalid(format!("{what} needs a non-trivial character")));
    }
    Ok(())
}

/// The complement letters of `T^(s)` in `b`, ordered `T`, `L`, `G` and by
/// descending index within each kind.
pub fn highorder_letters(s2: i32) -> Vec<GeneratorId> {
    let kernel = SubalgebraSelector::TU(s2);
    let mut out: Vec<GeneratorId> = SubalgebraSelector::Plus
        .generators(s2 + 2)
        .into_iter()
        .filter(|g| !kernel.contains(g))
        .collect();
    out.sort_by_key(|g| {
        let k = match g.kind() {
            Kind::T => 0,
            Kind::L => 1,
            _ => 2,
        };
        (k, -g.index2())
    });
    out
}
