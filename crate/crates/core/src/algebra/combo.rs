use std::collections::BTreeMap;
use std::fmt;

use super::{Algebra, GeneratorId};
use crate::scalar::Scalar;

/// A finite linear combination of generators. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LinearCombo {
    terms: BTreeMap<GeneratorId, Scalar>,
}

impl LinearCombo {
    pub fn zero() -> Self {
        LinearCombo::default()
    }

    pub fn gen(g: GeneratorId) -> Self {
        Self::term(g, Scalar::one())
    }

    pub fn term(g: GeneratorId, coeff: Scalar) -> Self {
        let mut c = LinearCombo::zero();
        c.add_term(g, &coeff);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, g: GeneratorId, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(existing) => {
                *existing += coeff;
                if existing.is_zero() {
                    self.terms.remove(&g);
                }
            }
            None => {
                self.terms.insert(g, coeff.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinearCombo, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (g, c) in &other.terms {
            self.add_term(*g, &(c * factor));
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> LinearCombo {
        let mut out = LinearCombo::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn coeff(&self, g: &GeneratorId) -> Scalar {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GeneratorId, &Scalar)> {
        self.terms.iter()
    }

    pub fn generators(&self) -> impl Iterator<Item = &GeneratorId> {
        self.terms.keys()
    }

    /// The algebra of the generators, or `None` for the zero combination.
    pub fn algebra(&self) -> Option<Algebra> {
        self.terms.keys().next().map(|g| g.algebra())
    }
}

impl std::ops::Add<&LinearCombo> for &LinearCombo {
    type Output = LinearCombo;
    fn add(self, rhs: &LinearCombo) -> LinearCombo {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl std::ops::Sub<&LinearCombo> for &LinearCombo {
    type Output = LinearCombo;
    fn sub(self, rhs: &LinearCombo) -> LinearCombo {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1));
        out
    }
}

impl FromIterator<(GeneratorId, Scalar)> for LinearCombo {
    fn from_iter<I: IntoIterator<Item = (GeneratorId, Scalar)>>(iter: I) -> Self {
        let mut out = LinearCombo::zero();
        for (g, c) in iter {
            out.add_term(g, &c);
        }
        out
    }
}

/// Writes `sum coeff*item` with the sign of single-coordinate coefficients pulled
/// out front. Coefficients with several coordinates are parenthesized.
pub(crate) fn write_sum<'a, T: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Scalar, T)>,
    sep: &str,
) -> fmt::Result {
    let mut first = true;
    for (coeff, item) in terms {
        let (neg, mag) = match coeff.split_sign() {
            Some((neg, mag)) => (neg, Some(mag)),
            None => (false, None),
        };
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        match mag {
            Some(m) if m.is_one() => write!(f, "{item}")?,
            Some(m) => write!(f, "{m}{sep}{item}")?,
            None => write!(f, "({coeff}){sep}{item}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for LinearCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|(g, c)| (c, g)), "*")
    }
}

impl fmt::Debug for LinearCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCombo({self})")
    }
}
