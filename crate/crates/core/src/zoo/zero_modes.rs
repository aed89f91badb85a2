use std::sync::Arc;

use crate::algebra::{GeneratorId, Kind, TwistedPresentation};
use crate::pbw::{twisted_zero_modes, word_to_external, BaseModule, Element, InducedModule, ModuleError};
use crate::scalar::Scalar;

/// `Ind_b^{b + T_0}(M)` in the basis `G_0^k ⊗ m`, `k <= max_k`.
///
/// Internally words are `L_0^a G_0^e` with `e <= 1`; they are converted with
/// `L_0 = G_0^2 + c/24`.
pub struct ZeroModeInduced {
    engine: InducedModule,
    inner_dim: usize,
    max_k: u32,
    internal: Vec<Element>,
}

impl ZeroModeInduced {
    pub fn new(inner: Arc<dyn BaseModule>, c: Scalar, max_k: u32) -> Result<Self, ModuleError> {
        let inner_dim = inner.dim();
        let engine = InducedModule::new(&TwistedPresentation, twisted_zero_modes(), inner, c);
        let g0 = GeneratorId::of(Kind::G, 0);
        let mut internal = Vec::new();
        for k in 0..=max_k {
            for m in 0..inner_dim {
                let letters = vec![g0; k as usize];
                internal.push(engine.act_word(&letters, &engine.unit(m))?);
            }
        }
        Ok(ZeroModeInduced { engine, inner_dim, max_k, internal })
    }

    pub fn inner(&self) -> &Arc<dyn BaseModule> {
        self.engine.base()
    }

    pub fn max_k(&self) -> u32 {
        self.max_k
    }

    /// Index of `G_0^k ⊗ m`.
    pub fn index(&self, k: u32, m: usize) -> usize {
        k as usize * self.inner_dim + m
    }

    fn split(&self, i: usize) -> (u32, usize) {
        ((i / self.inner_dim) as u32, i % self.inner_dim)
    }
}

impl BaseModule for ZeroModeInduced {
    fn dim(&self) -> usize {
        self.internal.len()
    }

    fn label(&self, i: usize) -> String {
        let (k, m) = self.split(i);
        let inner = self.inner().label(m);
        match k {
            0 => inner,
            1 => format!("G[0].{inner}"),
            _ => format!("G[0]^{k}.{inner}"),
        }
    }

    fn act(&self, x: GeneratorId, i: usize) -> Result<Vec<(usize, Scalar)>, ModuleError> {
        if x.kind().algebra() != crate::algebra::Algebra::Twisted || (!x.is_central() && x.degree2() < 0) {
            return Err(ModuleError::WrongAlgebra(x.to_string()));
        }
        let e = self.engine.act(x, &self.internal[i])?;
        let mut out: Vec<(usize, Scalar)> = Vec::new();
        for ((w, m), coeff) in &e {
            for (ev, s) in word_to_external(w, self.engine.central_charge()) {
                let k = ev.get(2);
                if k > self.max_k {
                    return Err(ModuleError::Truncation(format!("G[0]^{k} exceeds k <= {}", self.max_k)));
                }
                let j = self.index(k, *m);
                let v = coeff * &s;
                match out.iter_mut().find(|(a, _)| *a == j) {
                    Some((_, acc)) => *acc += &v,
                    None => out.push((j, v)),
                }
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        out.sort_by_key(|(j, _)| *j);
        Ok(out)
    }

    fn parity(&self, i: usize) -> Option<u8> {
        let (k, m) = self.split(i);
        self.inner().parity(m).map(|p| (p + (k % 2) as u8) % 2)
    }
}
