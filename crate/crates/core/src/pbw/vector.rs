use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::algebra::write_sum;
use crate::index::ExponentVector;
use crate::parse::{parse_basis_terms, parse_word, ParseError};
use crate::scalar::Scalar;

use super::{add_into, fmt_word, Element, InducedModule, ModuleError};

/// An element `sum w_i ⊗ m_j` of a twisted induced module. Zero coefficients
/// are never stored; equality ignores the attached labels.
#[derive(Clone)]
pub struct ModuleVector {
    terms: BTreeMap<(ExponentVector, usize), Scalar>,
    labels: Arc<Vec<String>>,
}

impl PartialEq for ModuleVector {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for ModuleVector {}

impl ModuleVector {
    pub fn new(labels: Arc<Vec<String>>) -> Self {
        ModuleVector { terms: BTreeMap::new(), labels }
    }

    pub fn labels(&self) -> &Arc<Vec<String>> {
        &self.labels
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(ExponentVector, usize), &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: &ExponentVector, j: usize) -> Scalar {
        self.terms.get(&(i.clone(), j)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, i: ExponentVector, j: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (i, j);
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ModuleVector, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for ((i, j), x) in &other.terms {
            self.add_term(i.clone(), *j, &(x * c));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> ModuleVector {
        let mut out = ModuleVector::new(self.labels.clone());
        out.add_scaled(self, c);
        out
    }

    pub fn minus(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    /// Terms sorted descending by exponent vector, then ascending by label.
    pub fn sorted_terms(&self) -> Vec<(&ExponentVector, usize, &Scalar)> {
        let mut items: Vec<_> = self.terms.iter().map(|((i, j), c)| (i, *j, c)).collect();
        items.sort_by(|a, b| b.0.cmp(a.0).then(a.1.cmp(&b.1)));
        items
    }

    pub fn parse(text: &str, labels: Arc<Vec<String>>) -> Result<ModuleVector, ParseError> {
        let mut out = ModuleVector::new(labels.clone());
        for ((braced, label), c) in parse_basis_terms(text, 'w')? {
            let i: ExponentVector = braced.parse()?;
            let j = labels
                .iter()
                .position(|l| *l == label)
                .ok_or_else(|| ParseError::new(text, format!("unknown basis label `{label}`")))?;
            out.add_term(i, j, &c);
        }
        Ok(out)
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = self.sorted_terms();
        let labels = &self.labels;
        write_sum(f, items.into_iter().map(|(i, j, c)| (c, format!("w{i}⊗{}", labels[j]))), "*")
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleVector({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuppDeg {
    pub supp: BTreeSet<ExponentVector>,
    pub deg: ExponentVector,
    pub weight2: i64,
}

/// Support, principal-order maximum of the support, and its doubled weight.
pub fn supp_deg(v: &ModuleVector) -> Result<SuppDeg, ModuleError> {
    let supp: BTreeSet<ExponentVector> = v.terms().map(|((i, _), _)| i.clone()).collect();
    let deg = supp.iter().next_back().cloned().ok_or(ModuleError::ZeroVector)?;
    let weight2 = deg.weight2();
    Ok(SuppDeg { supp, deg, weight2 })
}

/// `c*u{word}⊗label` terms of a generic induced module.
pub fn print_element(e: &Element, m: &InducedModule) -> String {
    struct Show<'a>(&'a Element, &'a InducedModule);
    impl fmt::Display for Show<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let base = self.1.base();
            write_sum(
                f,
                self.0.iter().rev().map(|((w, j), c)| (c, format!("u{{{}}}⊗{}", fmt_word(w), base.label(*j)))),
                "*",
            )
        }
    }
    Show(e, m).to_string()
}

/// Inverse of [`print_element`]; words inside `u{...}` need not be sorted.
pub fn parse_element(text: &str, m: &InducedModule) -> Result<Element, ParseError> {
    let mut out = Element::new();
    for ((braced, label), c) in parse_basis_terms(text, 'u')? {
        let inner = &braced[1..braced.len() - 1];
        let word = parse_word(inner)?;
        let j = m
            .base()
            .index_of(&label)
            .ok_or_else(|| ParseError::new(text, format!("unknown basis label `{label}`")))?;
        let e = m.act_word(&word, &m.unit(j)).map_err(|err| ParseError::new(text, err.to_string()))?;
        add_into(&mut out, &e, &c);
    }
    Ok(out)
}
