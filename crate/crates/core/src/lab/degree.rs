use rayon::prelude::*;

use crate::algebra::GeneratorId;
use crate::index::{enumerate, ExponentVector};
use crate::pbw::supp_deg;
use crate::zoo::window_generators;

use super::{lowering_generator, Lab, Report, Status};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightBoundViolation {
    pub x: GeneratorId,
    pub i: ExponentVector,
    pub label: usize,
    pub got_weight2: i64,
    pub bound_weight2: i64,
}

/// True when the first nonzero slot of `i` holds a `G` letter with even
/// exponent. There the lowering generator's two commutator terms cancel and
/// the degree drops by more than `ε_n̂`.
pub fn is_even_odd(i: &ExponentVector) -> bool {
    i.min_nonzero_slot().is_some_and(|n| n % 2 == 0 && i.get(n) % 2 == 0)
}

impl Lab {
    /// Both parts of the degree lemma on `enumerate(max_weight2, max_length)`:
    /// (a) `deg(X w_i ⊗ m) = i - ε_n̂` and (b) `i - ε_n̂ ∉ supp(X w_ĩ ⊗ m)` for
    /// every `ĩ ≺ i` in the enumeration, with `X` the lowering generator of `i`.
    pub fn lemma_deg_suite(&self, max_weight2: i64, max_length: u64) -> Report {
        let all = enumerate(max_weight2, max_length);
        let dim = self.induced.labels().len();
        let cases: Vec<(usize, usize)> =
            (0..all.len()).filter(|&k| !all[k].is_zero()).flat_map(|k| (0..dim).map(move |j| (k, j))).collect();
        let rows: Vec<Report> = cases
            .par_iter()
            .map(|&(k, j)| {
                let mut r = Report::default();
                let i = &all[k];
                let label = &self.induced.labels()[j];
                let n_hat = i.min_nonzero_slot().expect("nonzero");
                let x = lowering_generator(n_hat, self.u2);
                let target = i.sub_at(n_hat, 1).expect("slot is nonzero");
                let input = format!("i={i} m={label} X={x}");
                let got = match self.induced.act(x, &self.induced.basis(i, j)) {
                    Ok(v) => supp_deg(&v).map(|s| s.deg.to_string()).unwrap_or_else(|_| "zero vector".into()),
                    Err(e) => e.to_string(),
                };
                let status = if got == target.to_string() { Status::Pass } else { Status::Fail };
                r.push(format!("deg-a {i}"), &input, target.to_string(), got, status);
                // all is sorted descending, so ĩ ≺ i are the later entries
                let mut clash = None;
                for lower in &all[k + 1..] {
                    match self.induced.act(x, &self.induced.basis(lower, j)) {
                        Ok(v) => {
                            if (0..dim).any(|jj| !v.coeff(&target, jj).is_zero()) {
                                clash = Some(format!("{target} in supp({x}·w{lower}⊗{label})"));
                                break;
                            }
                        }
                        Err(e) => {
                            clash = Some(format!("{x}·w{lower}⊗{label}: {e}"));
                            break;
                        }
                    }
                }
                let (got, status) = match clash {
                    None => ("absent".to_string(), Status::Pass),
                    Some(w) => (w, Status::Fail),
                };
                r.push(format!("deg-b {i}"), input, "absent", got, status);
                r
            })
            .collect();
        let mut out = Report::default();
        for r in rows {
            out.extend(r);
        }
        out
    }

    /// `w(X_ρ w) <= w(w) - ρ + u` for `X_ρ` with `u <= ρ`, `index2 <= window`, on basis vectors.
    pub fn weight_bound_violations(&self, max_weight2: i64, max_length: u64, window: i32) -> Vec<WeightBoundViolation> {
        let gens: Vec<GeneratorId> =
            window_generators(window).into_iter().filter(|g| g.index2() >= self.u2).collect();
        let dim = self.induced.labels().len();
        let all = enumerate(max_weight2, max_length);
        let mut out = Vec::new();
        for i in &all {
            for j in 0..dim {
                for x in &gens {
                    let Ok(v) = self.induced.act(*x, &self.induced.basis(i, j)) else { continue };
                    let Some(got) = v.terms().map(|((k, _), _)| k.weight2()).max() else { continue };
                    let bound = i.weight2() - x.index2() as i64 + self.u2 as i64;
                    if got > bound {
                        out.push(WeightBoundViolation { x: *x, i: i.clone(), label: j, got_weight2: got, bound_weight2: bound });
                    }
                }
            }
        }
        out
    }
}
