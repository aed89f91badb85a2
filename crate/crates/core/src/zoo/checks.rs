use std::fmt;

use rayon::prelude::*;

use crate::algebra::{super_sign, GeneratorId, Kind, Presentation, TwistedPresentation};
use crate::linalg;
use crate::pbw::{BaseModule, ModuleError};
use crate::scalar::Scalar;

use super::window_generators;

fn show(m: &dyn BaseModule, v: &[(usize, Scalar)]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = v.iter().map(|(j, c)| format!("({c})*{}", m.label(*j))).collect();
    parts.join(" + ")
}

fn dense(m: &dyn BaseModule, v: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); m.dim()];
    for (j, c) in v {
        out[*j] += c;
    }
    out
}

/// Conditions at `u`: whether `T_u` acts injectively on the (truncated) basis
/// and whether `G_u` kills it. A truncation error counts as "not established".
pub fn check_conditions(m: &dyn BaseModule, u2: i32) -> (bool, bool) {
    let n = m.dim();
    let t = GeneratorId::of(Kind::T, u2);
    let g = GeneratorId::of(Kind::G, u2);
    let images: Result<Vec<Vec<Scalar>>, _> = (0..n).map(|i| m.act(t, i).map(|v| dense(m, &v))).collect();
    let injective = match images {
        // Columns are images of basis vectors; injective iff full column rank.
        Ok(cols) => {
            let rows: Vec<Vec<Scalar>> = (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
            linalg::rank(&rows, n) == n
        }
        Err(_) => false,
    };
    let killed = (0..n).all(|i| matches!(m.act(g, i), Ok(v) if v.iter().all(|(_, c)| c.is_zero())));
    (injective, killed)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Vacuous,
    Holds,
    Fails(String),
    Inconclusive(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Vacuous => f.write_str("vacuous"),
            Verdict::Holds => f.write_str("holds"),
            Verdict::Fails(w) => write!(f, "fails: {w}"),
            Verdict::Inconclusive(w) => write!(f, "inconclusive: {w}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingReport {
    pub t2: i32,
    pub window: i32,
    pub part1: Verdict,
    pub part2: Verdict,
}

enum Kills {
    Yes,
    No(String),
    Unknown(String),
}

fn kills_all(m: &dyn BaseModule, gens: &[GeneratorId]) -> Kills {
    for x in gens {
        for i in 0..m.dim() {
            match m.act(*x, i) {
                Ok(v) if v.is_empty() => {}
                Ok(v) => return Kills::No(format!("{x}·{} = {}", m.label(i), show(m, &v))),
                Err(e) => return Kills::Unknown(format!("{x}·{}: {e}", m.label(i))),
            }
        }
    }
    Kills::Yes
}

fn implication(m: &dyn BaseModule, hyp: &[GeneratorId], concl: &[GeneratorId]) -> Verdict {
    match kills_all(m, hyp) {
        Kills::No(_) => Verdict::Vacuous,
        Kills::Unknown(w) => Verdict::Inconclusive(w),
        Kills::Yes => match kills_all(m, concl) {
            Kills::Yes => Verdict::Holds,
            Kills::No(w) => Verdict::Fails(w),
            Kills::Unknown(w) => Verdict::Inconclusive(w),
        },
    }
}

/// The vanishing lemma on a finite module, scanned over generators up to `window`:
/// (1) if `L_m` and `T_r` kill `M` for `m >= t+1/2`, `r >= t+1`, then so does
/// `G_p` for `p >= t+1/2`; (2) for every `p >= t+1/2`, if `G_p M = 0` then
/// `L_m`, `T_r` (`m, r >= p+1/2`) and `G_{p'}` (`p' >= p`) kill `M`.
/// Simplicity of `M` is a hypothesis of the lemma and is not checked.
pub fn vanishing_check(m: &dyn BaseModule, t2: i32, window: i32) -> VanishingReport {
    let gens = window_generators(window);
    let pick = |kind: Kind, min2: i32| -> Vec<GeneratorId> {
        gens.iter().copied().filter(|g| g.kind() == kind && g.index2() >= min2).collect()
    };
    let mut hyp1 = pick(Kind::L, t2 + 1);
    hyp1.extend(pick(Kind::T, t2 + 2));
    let part1 = implication(m, &hyp1, &pick(Kind::G, t2 + 1));

    let mut part2 = Verdict::Vacuous;
    for p2 in (t2 + 1)..=window {
        let g = GeneratorId::of(Kind::G, p2);
        let mut concl = pick(Kind::L, p2 + 1);
        concl.extend(pick(Kind::T, p2 + 1));
        concl.extend(pick(Kind::G, p2));
        let v = implication(m, &[g], &concl);
        match v {
            Verdict::Vacuous => {}
            Verdict::Holds => {
                if part2 == Verdict::Vacuous {
                    part2 = Verdict::Holds;
                }
            }
            other => {
                part2 = other;
                break;
            }
        }
    }
    VanishingReport { t2, window, part1, part2 }
}

/// Violations of `x(yv) - (-1)^{|x||y|} y(xv) = [x,y]v` for positive twisted
/// generators with `index2 <= window` and all basis vectors. Triples that leave
/// the truncation are skipped and counted.
pub fn module_axiom_violations(m: &dyn BaseModule, window: i32) -> (Vec<String>, usize) {
    let gens: Vec<GeneratorId> = window_generators(window).into_iter().filter(|g| g.degree2() > 0).collect();
    let pairs: Vec<(GeneratorId, GeneratorId)> =
        gens.iter().flat_map(|x| gens.iter().map(move |y| (*x, *y))).collect();
    let results: Vec<(Vec<String>, usize)> = pairs
        .par_iter()
        .map(|(x, y)| {
            let mut bad = Vec::new();
            let mut skipped = 0;
            let br = TwistedPresentation.bracket_raw(*x, *y);
            for i in 0..m.dim() {
                match axiom_at(m, *x, *y, &br, i) {
                    Ok(None) => {}
                    Ok(Some(w)) => bad.push(w),
                    Err(ModuleError::Truncation(_)) => skipped += 1,
                    Err(e) => bad.push(format!("{x},{y} on {}: {e}", m.label(i))),
                }
            }
            (bad, skipped)
        })
        .collect();
    let mut bad = Vec::new();
    let mut skipped = 0;
    for (b, s) in results {
        bad.extend(b);
        skipped += s;
    }
    (bad, skipped)
}

fn apply(m: &dyn BaseModule, x: GeneratorId, v: &[(usize, Scalar)]) -> Result<Vec<Scalar>, ModuleError> {
    let mut out = vec![Scalar::zero(); m.dim()];
    for (j, c) in v {
        for (k, d) in m.act(x, *j)? {
            out[k] += &(c * &d);
        }
    }
    Ok(out)
}

fn sparse(v: Vec<Scalar>) -> Vec<(usize, Scalar)> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

fn axiom_at(
    m: &dyn BaseModule,
    x: GeneratorId,
    y: GeneratorId,
    br: &crate::algebra::LinearCombo,
    i: usize,
) -> Result<Option<String>, ModuleError> {
    let e = vec![(i, Scalar::one())];
    let xy = apply(m, x, &sparse(apply(m, y, &e)?))?;
    let yx = apply(m, y, &sparse(apply(m, x, &e)?))?;
    let sign = Scalar::from_int(super_sign(&x, &y));
    let mut rhs = vec![Scalar::zero(); m.dim()];
    for (g, c) in br.iter() {
        for (k, d) in m.act(*g, i)? {
            rhs[k] += &(c * &d);
        }
    }
    for k in 0..m.dim() {
        let lhs = &xy[k] - &(&sign * &yx[k]);
        if lhs != rhs[k] {
            return Ok(Some(format!("[{x},{y}] on {}: component {} differs", m.label(i), m.label(k))));
        }
    }
    Ok(None)
}
