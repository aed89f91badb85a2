use std::collections::BTreeMap;

use crate::algebra::{GeneratorId, Kind};
use crate::index::{enumerate, ExponentVector};
use crate::linalg;
use crate::pbw::{ModuleError, ModuleVector, TwistedInduced};
use crate::scalar::Scalar;

type Key = (ExponentVector, usize);

#[derive(Debug, Clone)]
pub struct AnnihilatorReport {
    pub t2: i32,
    pub truncation: (i64, u64),
    pub generators: Vec<GeneratorId>,
    pub basis: Vec<ModuleVector>,
    /// False when some kernel vector touches the outer shell of the truncation,
    /// where a larger truncation could change the answer.
    pub conclusive: bool,
}

/// Generators `L_{t̂+1/2}`, `T_{t̂+1}`, `G_{t̂}` for `t̂ > t - 1/2`, up to the
/// doubled degree `top`.
fn annihilating_generators(t2: i32, top: i32) -> Vec<GeneratorId> {
    let mut out = Vec::new();
    for th in t2..=top {
        for (kind, i2) in [(Kind::L, th + 1), (Kind::T, th + 2), (Kind::G, th)] {
            if let Ok(g) = GeneratorId::new(kind, i2) {
                if i2 <= top && !out.contains(&g) {
                    out.push(g);
                }
            }
        }
    }
    out.sort();
    out
}

/// `M_t` on the slice `enumerate(max_weight2, max_length) × labels`.
pub fn annihilator_mt(
    m: &TwistedInduced,
    t2: i32,
    max_weight2: i64,
    max_length: u64,
) -> Result<AnnihilatorReport, ModuleError> {
    let dim = m.labels().len();
    let slice: Vec<Key> =
        enumerate(max_weight2, max_length).into_iter().flat_map(|i| (0..dim).map(move |j| (i.clone(), j))).collect();
    annihilator(m, t2, &slice, max_weight2, max_length)
}

/// Kernel of the stacked maps on an explicit slice. Only generators of doubled
/// degree `<= max_weight2 + t2 + 4` are stacked; the report lists them.
pub fn annihilator(
    m: &TwistedInduced,
    t2: i32,
    slice: &[Key],
    max_weight2: i64,
    max_length: u64,
) -> Result<AnnihilatorReport, ModuleError> {
    let top = max_weight2 as i32 + t2 + 4;
    let gens = annihilating_generators(t2, top);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for g in &gens {
        let images: Vec<ModuleVector> =
            slice.iter().map(|(i, j)| m.act(*g, &m.basis(i, *j))).collect::<Result<_, _>>()?;
        let mut keys: BTreeMap<&Key, usize> = BTreeMap::new();
        for img in &images {
            for (k, _) in img.terms() {
                let n = keys.len();
                keys.entry(k).or_insert(n);
            }
        }
        let mut block = vec![vec![Scalar::zero(); slice.len()]; keys.len()];
        for (col, img) in images.iter().enumerate() {
            for (k, c) in img.terms() {
                block[keys[k]][col] = c.clone();
            }
        }
        rows.extend(block);
    }
    let kernel = linalg::kernel(&rows, slice.len());
    let mut basis = Vec::new();
    let mut conclusive = true;
    for v in kernel {
        let mut mv = m.zero();
        for (col, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let (i, j) = &slice[col];
                mv.add_term(i.clone(), *j, c);
                let on_shell = max_weight2 + max_length as i64 > 0
                    && (i.weight2() == max_weight2 || i.length() == max_length);
                if on_shell {
                    conclusive = false;
                }
            }
        }
        basis.push(mv);
    }
    Ok(AnnihilatorReport { t2, truncation: (max_weight2, max_length), generators: gens, basis, conclusive })
}

#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub closed: bool,
    /// `(x, s, x·s)` for the first image outside the span.
    pub witness: Option<(GeneratorId, ModuleVector, ModuleVector)>,
    pub checked: usize,
    /// Pairs whose image left the truncation and so were not decided.
    pub skipped: usize,
}

/// Whether `span(subspace)` is stable under every generator in `gens`, on the truncation.
pub fn closure_check(
    m: &TwistedInduced,
    subspace: &[ModuleVector],
    gens: &[GeneratorId],
) -> Result<ClosureReport, ModuleError> {
    let mut report = ClosureReport { closed: true, witness: None, checked: 0, skipped: 0 };
    for x in gens {
        for s in subspace {
            let img = match m.act(*x, s) {
                Ok(v) => v,
                Err(ModuleError::Truncation(_)) => {
                    report.skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            report.checked += 1;
            if !span_contains(subspace, &img) {
                report.closed = false;
                report.witness = Some((*x, s.clone(), img));
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Whether `v` lies in the span of `basis`.
pub fn span_contains(basis: &[ModuleVector], v: &ModuleVector) -> bool {
    let mut keys: BTreeMap<Key, usize> = BTreeMap::new();
    for b in basis.iter().chain(std::iter::once(v)) {
        for (k, _) in b.terms() {
            let n = keys.len();
            keys.entry(k.clone()).or_insert(n);
        }
    }
    let dense = |x: &ModuleVector| {
        let mut out = vec![Scalar::zero(); keys.len()];
        for (k, c) in x.terms() {
            out[keys[k]] = c.clone();
        }
        out
    };
    let rows: Vec<Vec<Scalar>> = basis.iter().map(dense).collect();
    linalg::in_span(&rows, &dense(v))
}
