use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::algebra::{GeneratorId, LinearCombo, Presentation};
use crate::scalar::Scalar;

use super::ModuleError;

/// Ordering rank of a creation letter; higher ranks sit further left.
pub type Rank = (i32, i32);

/// A PBW monomial `y_1^{k_1} ... y_n^{k_n}` with strictly decreasing ranks;
/// odd letters have exponent 1.
pub type Word = Vec<(GeneratorId, u32)>;

/// The letters freely generating an induced module, with their PBW ordering.
/// Generators that are neither letters nor central are absorbed by the base module.
#[derive(Clone)]
pub struct Template {
    name: String,
    rank: Arc<dyn Fn(&GeneratorId) -> Option<Rank> + Send + Sync>,
}

impl Template {
    pub fn new(name: impl Into<String>, rank: impl Fn(&GeneratorId) -> Option<Rank> + Send + Sync + 'static) -> Self {
        Template { name: name.into(), rank: Arc::new(rank) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self, g: &GeneratorId) -> Option<Rank> {
        (self.rank)(g)
    }
}

impl fmt::Debug for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Template({})", self.name)
    }
}

/// A module over the absorbed subalgebra with a finite (possibly truncated) basis.
pub trait BaseModule: Send + Sync {
    fn dim(&self) -> usize;
    fn label(&self, i: usize) -> String;
    /// Action of an absorbed generator on basis element `i`.
    fn act(&self, x: GeneratorId, i: usize) -> Result<Vec<(usize, Scalar)>, ModuleError>;
    /// `None` when the module carries no Z/2 grading.
    fn parity(&self, i: usize) -> Option<u8>;

    fn index_of(&self, label: &str) -> Option<usize> {
        (0..self.dim()).find(|&i| self.label(i) == label)
    }
}

/// Elements of an induced module, keyed by `(word, base index)`.
pub type Element = BTreeMap<(Word, usize), Scalar>;

pub(crate) fn add_into(acc: &mut Element, other: &Element, factor: &Scalar) {
    if factor.is_zero() {
        return;
    }
    for (k, c) in other {
        let v = c * factor;
        match acc.get_mut(k) {
            Some(e) => {
                *e += &v;
                if e.is_zero() {
                    acc.remove(k);
                }
            }
            None => {
                acc.insert(k.clone(), v);
            }
        }
    }
}

type MemoKey = (GeneratorId, Word, usize);

/// `U(g) ⊗_{U(absorbed)} base` with `C` acting by `c`.
///
/// `act` straightens a generator into a PBW word by the rule
/// `x y R = (-1)^{|x||y|} y (x R) + [x,y] R`, prepending creation letters whose
/// rank exceeds the leading letter and rewriting `x x = [x,x]/2` for odd `x`.
/// Results are memoized per `(generator, word, base index)`; the cache is
/// write-once per key, so concurrent readers observe identical values.
pub struct InducedModule {
    presentation: &'static dyn Presentation,
    template: Template,
    base: Arc<dyn BaseModule>,
    c: Scalar,
    memo: RwLock<HashMap<MemoKey, Arc<Element>>>,
}

impl InducedModule {
    pub fn new(
        presentation: &'static dyn Presentation,
        template: Template,
        base: Arc<dyn BaseModule>,
        c: Scalar,
    ) -> Self {
        InducedModule { presentation, template, base, c, memo: RwLock::new(HashMap::new()) }
    }

    pub fn presentation(&self) -> &'static dyn Presentation {
        self.presentation
    }

    pub fn template(&self) -> &Template {
        &self.template
    }

    pub fn base(&self) -> &Arc<dyn BaseModule> {
        &self.base
    }

    pub fn central_charge(&self) -> &Scalar {
        &self.c
    }

    /// `1 ⊗ base_i`
    pub fn unit(&self, i: usize) -> Element {
        let mut e = Element::new();
        e.insert((Word::new(), i), Scalar::one());
        e
    }

    fn check_basis(&self, x: &GeneratorId) -> Result<(), ModuleError> {
        if x.kind().in_basis(self.presentation.basis()) {
            Ok(())
        } else {
            Err(ModuleError::WrongAlgebra(x.to_string()))
        }
    }

    pub fn act(&self, x: GeneratorId, v: &Element) -> Result<Element, ModuleError> {
        self.check_basis(&x)?;
        let mut out = Element::new();
        for ((w, i), c) in v {
            let r = self.act_basis(x, w, *i)?;
            add_into(&mut out, &r, c);
        }
        Ok(out)
    }

    /// Applies `xs` right to left.
    pub fn act_word(&self, xs: &[GeneratorId], v: &Element) -> Result<Element, ModuleError> {
        let mut cur = v.clone();
        for x in xs.iter().rev() {
            cur = self.act(*x, &cur)?;
        }
        Ok(cur)
    }

    pub fn act_combo(&self, x: &LinearCombo, v: &Element) -> Result<Element, ModuleError> {
        let mut out = Element::new();
        for (g, c) in x.iter() {
            let r = self.act(*g, v)?;
            add_into(&mut out, &r, c);
        }
        Ok(out)
    }

    pub fn act_basis(&self, x: GeneratorId, word: &Word, i: usize) -> Result<Arc<Element>, ModuleError> {
        let key = (x, word.clone(), i);
        if let Some(hit) = self.memo.read().expect("memo lock").get(&key) {
            return Ok(hit.clone());
        }
        let value = Arc::new(self.compute(x, word, i)?);
        let mut memo = self.memo.write().expect("memo lock");
        Ok(memo.entry(key).or_insert(value).clone())
    }

    fn single(word: Word, i: usize, c: Scalar) -> Element {
        let mut e = Element::new();
        if !c.is_zero() {
            e.insert((word, i), c);
        }
        e
    }

    fn act_combo_basis(&self, x: &LinearCombo, word: &Word, i: usize) -> Result<Element, ModuleError> {
        let mut out = Element::new();
        for (g, c) in x.iter() {
            let r = self.act_basis(*g, word, i)?;
            add_into(&mut out, &r, c);
        }
        Ok(out)
    }

    fn compute(&self, x: GeneratorId, word: &Word, i: usize) -> Result<Element, ModuleError> {
        if x.is_central() {
            return Ok(Self::single(word.clone(), i, self.c.clone()));
        }
        let rank = self.template.rank(&x);
        let lead = word.first().map(|(y, k)| (*y, *k, self.template.rank(y).expect("words hold letters")));
        match (rank, lead) {
            (None, None) => {
                let out = self.base.act(x, i)?;
                Ok(out.into_iter().filter(|(_, c)| !c.is_zero()).map(|(j, c)| ((Word::new(), j), c)).collect())
            }
            (Some(_), None) => Ok(Self::single(vec![(x, 1)], i, Scalar::one())),
            (Some(rx), Some((_, _, ry))) if rx > ry => {
                let mut w = Vec::with_capacity(word.len() + 1);
                w.push((x, 1));
                w.extend_from_slice(word);
                Ok(Self::single(w, i, Scalar::one()))
            }
            (Some(rx), Some((y, k, ry))) if rx == ry => {
                debug_assert_eq!(x, y);
                if x.is_odd() {
                    let half = self.presentation.bracket_raw(x, x).scaled(&Scalar::ratio(1, 2));
                    self.act_combo_basis(&half, &word[1..].to_vec(), i)
                } else {
                    let mut w = word.clone();
                    w[0].1 = k + 1;
                    Ok(Self::single(w, i, Scalar::one()))
                }
            }
            (_, Some((y, k, _))) => {
                let mut rest = word.clone();
                if k == 1 {
                    rest.remove(0);
                } else {
                    rest[0].1 = k - 1;
                }
                let inner = self.act_basis(x, &rest, i)?;
                let mut out = Element::new();
                let sign = Scalar::from_int(if x.is_odd() && y.is_odd() { -1 } else { 1 });
                for ((w, j), c) in inner.iter() {
                    let r = self.act_basis(y, w, *j)?;
                    add_into(&mut out, &r, &(c * &sign));
                }
                let br = self.presentation.bracket_raw(x, y);
                let corr = self.act_combo_basis(&br, &rest, i)?;
                add_into(&mut out, &corr, &Scalar::one());
                Ok(out)
            }
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }
}

pub fn fmt_word(w: &Word) -> String {
    let parts: Vec<String> = w
        .iter()
        .map(|(g, k)| if *k == 1 { g.to_string() } else { format!("{g}^{k}") })
        .collect();
    parts.join(" ")
}
