use rayon::prelude::*;

use crate::algebra::{super_sign, GeneratorId, Presentation, TwistedPresentation};
use crate::index::enumerate;
use crate::pbw::{ModuleError, TwistedInduced};
use crate::scalar::Scalar;
use crate::zoo::window_generators;

/// Violations of `x(yv) - (-1)^{|x||y|} y(xv) = [x,y]v` on the induced module,
/// for every twisted generator pair with `|index2| <= window` and every basis
/// vector of `enumerate(max_weight2, max_length) × labels`. Returns the
/// violations (in pair order) and the number of triples checked.
pub fn induced_axiom_violations(
    m: &TwistedInduced,
    window: i32,
    max_weight2: i64,
    max_length: u64,
) -> Result<(Vec<String>, usize), ModuleError> {
    let gens = window_generators(window);
    let dim = m.labels().len();
    let vectors: Vec<_> = enumerate(max_weight2, max_length)
        .into_iter()
        .flat_map(|i| (0..dim).map(move |j| (i.clone(), j)))
        .map(|(i, j)| m.basis(&i, j))
        .collect();
    let pairs: Vec<(GeneratorId, GeneratorId)> =
        gens.iter().flat_map(|x| gens.iter().map(move |y| (*x, *y))).collect();
    let per_pair: Vec<Result<Vec<String>, ModuleError>> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let br = TwistedPresentation.bracket_raw(x, y);
            let sign = Scalar::from_int(super_sign(&x, &y));
            let mut bad = Vec::new();
            for v in &vectors {
                let lhs = m.act(x, &m.act(y, v)?)?.minus(&m.act(y, &m.act(x, v)?)?.scaled(&sign));
                let rhs = m.act_combo(&br, v)?;
                if lhs != rhs {
                    bad.push(format!("{x},{y} on {v}: got {lhs}, expected {rhs}"));
                }
            }
            Ok(bad)
        })
        .collect();
    let mut out = Vec::new();
    for r in per_pair {
        out.extend(r?);
    }
    Ok((out, pairs.len() * vectors.len()))
}
