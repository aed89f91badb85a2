use std::collections::BTreeMap;

use crate::algebra::{Algebra, GeneratorId};
use crate::pbw::{BaseModule, ModuleError};
use crate::scalar::Scalar;

/// A finite `b`-module given by an explicit action table. Unlisted entries act
/// as zero. Nothing forces the table to be a representation; use
/// [`super::module_axiom_violations`] to test it.
pub struct TableModule {
    labels: Vec<String>,
    parity: Option<Vec<u8>>,
    c: Scalar,
    table: BTreeMap<(GeneratorId, usize), Vec<(usize, Scalar)>>,
}

impl TableModule {
    pub fn new(labels: Vec<String>, parity: Option<Vec<u8>>, c: Scalar) -> Self {
        TableModule { labels, parity, c, table: BTreeMap::new() }
    }

    pub fn set(&mut self, x: GeneratorId, i: usize, image: Vec<(usize, Scalar)>) {
        self.table.insert((x, i), image.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

impl BaseModule for TableModule {
    fn dim(&self) -> usize {
        self.labels.len()
    }

    fn label(&self, i: usize) -> String {
        self.labels[i].clone()
    }

    fn act(&self, x: GeneratorId, i: usize) -> Result<Vec<(usize, Scalar)>, ModuleError> {
        if x.is_central() {
            return Ok(vec![(i, self.c.clone())]);
        }
        if x.kind().algebra() != Algebra::Twisted || x.degree2() <= 0 {
            return Err(ModuleError::WrongAlgebra(x.to_string()));
        }
        Ok(self.table.get(&(x, i)).cloned().unwrap_or_default())
    }

    fn parity(&self, i: usize) -> Option<u8> {
        self.parity.as_ref().map(|p| p[i])
    }
}
